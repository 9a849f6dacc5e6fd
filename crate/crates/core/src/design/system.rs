use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use super::colouring::Colouring;
use super::cycle::Cycle;
use super::graph::GraphSpec;
use super::vertex::Vertex;
use crate::error::{Error, Result};

/// The top-level construction a system came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Route {
    /// 2-rotational system of `K_{2l+1}` from three base cycles.
    Rotational2l1,
    /// 2-rotational system of `K_{4l+1}` from six base cycles.
    Rotational4l1,
    /// `v = 2kl + 1`, `k >= 3`: rotational blocks plus a blown-up skeleton.
    BlowupOneMod,
    /// `v = (2k+1)l`: blown-up skeleton plus a Walecki factorization per part.
    BlowupEllMod,
    /// A standalone system of `C_3[l]`.
    C3Blowup,
    /// A standalone system of `C_5[l]`.
    C5Blowup,
    /// Anything assembled by hand (tests, oracle fixtures).
    Custom,
}

impl Route {
    pub fn as_str(&self) -> &'static str {
        match self {
            Route::Rotational2l1 => "rotational-2l+1",
            Route::Rotational4l1 => "rotational-4l+1",
            Route::BlowupOneMod => "blowup-1-mod-2l",
            Route::BlowupEllMod => "blowup-l-mod-2l",
            Route::C3Blowup => "c3-blowup",
            Route::C5Blowup => "c5-blowup",
            Route::Custom => "custom",
        }
    }

    pub fn all() -> [Route; 7] {
        [
            Route::Rotational2l1,
            Route::Rotational4l1,
            Route::BlowupOneMod,
            Route::BlowupEllMod,
            Route::C3Blowup,
            Route::C5Blowup,
            Route::Custom,
        ]
    }
}

impl fmt::Display for Route {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Route {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Route::all()
            .into_iter()
            .find(|r| r.as_str() == s)
            .ok_or_else(|| Error::InvalidParameter(format!("unknown route `{s}`")))
    }
}

/// A base cycle of a developed system, kept for difference bookkeeping.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedCycle {
    pub name: String,
    pub cycle: Cycle,
}

impl NamedCycle {
    pub fn new(name: impl Into<String>, cycle: Cycle) -> Self {
        NamedCycle {
            name: name.into(),
            cycle,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Provenance {
    pub route: Route,
    pub ell: u32,
    pub v: u32,
    pub k: Option<u32>,
    pub seed: u64,
    /// Development modulus for `base_cycles`, when the system is rotational.
    pub modulus: Option<u32>,
    pub base_cycles: Vec<NamedCycle>,
}

impl Provenance {
    pub fn new(route: Route, ell: u32, v: u32) -> Self {
        Provenance {
            route,
            ell,
            v,
            k: None,
            seed: 0,
            modulus: None,
            base_cycles: Vec::new(),
        }
    }
}

/// A cycle decomposition certificate: host, cycles, colouring and origin.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleSystem {
    pub graph: GraphSpec,
    pub cycles: Vec<Cycle>,
    pub colouring: Colouring,
    pub provenance: Provenance,
}

impl CycleSystem {
    /// Builds a system after checking it is well formed: the host is valid,
    /// every cycle vertex lies in the host, and the colouring is defined on
    /// exactly the host's vertex set. Whether the cycles actually decompose
    /// the host is left to the verifier.
    pub fn new(
        graph: GraphSpec,
        cycles: Vec<Cycle>,
        colouring: Colouring,
        provenance: Provenance,
    ) -> Result<Self> {
        graph.validate()?;
        for c in &cycles {
            if let Some(v) = c.vertices().iter().find(|v| !graph.contains_vertex(v)) {
                return Err(Error::FamilyMismatch(format!(
                    "cycle {c} uses {v}, which is not a host vertex"
                )));
            }
        }
        let host: BTreeSet<Vertex> = graph.vertices().into_iter().collect();
        let coloured: BTreeSet<Vertex> = colouring.iter().map(|(v, _)| *v).collect();
        if host != coloured {
            let missing = host.difference(&coloured).next();
            let extra = coloured.difference(&host).next();
            return Err(Error::FamilyMismatch(format!(
                "colouring domain differs from host vertex set (uncoloured: {}, foreign: {})",
                missing.map_or("none".into(), |v| v.to_string()),
                extra.map_or("none".into(), |v| v.to_string()),
            )));
        }
        Ok(CycleSystem {
            graph,
            cycles,
            colouring,
            provenance,
        })
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles.len()
    }
}
