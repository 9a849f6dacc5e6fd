//! 2-rotational systems on `(Z_n x {0,1}) ∪ {∞}`: `K_{2l+1}` with `n = l`
//! and `K_{4l+1}` with `n = 2l`.

mod k2l1;
mod k4l1;

pub use k2l1::{colouring_k2l1, decompose_k2l1, plan_k2l1};
pub use k4l1::{build_c0_c1, build_cp, colouring_k4l1, decompose_k4l1, plan_k4l1};

use crate::design::{
    Colouring, CycleSystem, GraphSpec, NamedCycle, Provenance, Route, VertexFamily,
};
use crate::difference::{audit_coverage, develop};
use crate::error::{Error, Result};
use crate::verify::{require_pass, Expectations};

/// Base cycles of a rotational system and the parameters that shaped them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationalPlan {
    pub ell: u32,
    /// Development modulus `n`.
    pub modulus: u32,
    pub base_cycles: Vec<NamedCycle>,
    /// The pure difference carried once by each of `C_0` and `C_1`.
    pub m: Option<u32>,
    /// 0-pure and 1-pure classes used by the mixed-free cycle.
    pub s0: Vec<u32>,
    pub s1: Vec<u32>,
}

impl RotationalPlan {
    pub fn base(&self, name: &str) -> Option<&NamedCycle> {
        self.base_cycles.iter().find(|b| b.name == name)
    }

    /// Audits the differences, develops every base cycle and verifies the
    /// result before handing it out.
    pub fn into_system(self, route: Route, colouring: Colouring) -> Result<CycleSystem> {
        let n = self.modulus;
        let report = audit_coverage(&self.base_cycles, n)?;
        if !report.passed() {
            return Err(Error::InvariantViolation(format!(
                "difference audit failed for l = {}: {}",
                self.ell,
                report.failures().join(", ")
            )));
        }
        let mut cycles = Vec::new();
        for b in &self.base_cycles {
            cycles.extend(develop(&b.cycle, n)?.cycles);
        }
        let mut provenance = Provenance::new(route, self.ell, 2 * n + 1);
        provenance.modulus = Some(n);
        provenance.base_cycles = self.base_cycles;
        let graph = GraphSpec::Complete(VertexFamily::Rotational {
            modulus: n,
            infinity: true,
        });
        let system = CycleSystem::new(graph, cycles, colouring, provenance)?;
        require_pass(&system, &Expectations::from_provenance(&system.provenance))?;
        Ok(system)
    }
}

pub(crate) fn check_ell(ell: u32) -> Result<()> {
    if ell < 7 || ell.is_multiple_of(2) {
        return Err(Error::InvalidParameter(format!(
            "l must be odd and at least 7, got {ell}"
        )));
    }
    Ok(())
}
