//! Construction-agnostic certificate checks.
//!
//! The host's edge enumeration is the only notion of "which edges must be
//! covered"; nothing here assumes a complete graph.

use std::collections::HashMap;
use std::fmt;

use crate::design::{
    Colour, Colouring, Cycle, CycleSystem, Edge, GraphSpec, Provenance, Route, Vertex, VertexFamily,
};
use crate::error::{Error, Result};

pub const EDGE_PARTITION: &str = "edge-partition";
pub const CYCLE_LENGTH: &str = "cycle-length";
pub const EQUITABLE_CYCLES: &str = "equitable-cycles";
pub const CLASS_SIZES: &str = "class-sizes";
pub const PART_QUOTAS: &str = "part-quotas";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    /// Concrete evidence for a failure, or a short summary on success.
    pub witness: String,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "pass" } else { "fail" };
        write!(
            f,
            "check={} status={} detail={}",
            self.name, status, self.witness
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub checks: Vec<Check>,
}

impl Verdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failing(&self) -> Vec<&'static str> {
        self.checks
            .iter()
            .filter(|c| !c.passed)
            .map(|c| c.name)
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(f, "overall={}", if self.passed() { "pass" } else { "fail" })
    }
}

/// What the certificate is supposed to satisfy beyond being a decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Expectations {
    /// Required cycle length; every cycle must have it.
    pub cycle_length: Option<usize>,
    /// `(red, blue)`.
    pub class_sizes: Option<(usize, usize)>,
    /// Red vertices required in every part of a blown-up vertex family.
    pub red_per_part: Option<usize>,
}

impl Expectations {
    /// The guarantees each construction route makes.
    pub fn from_provenance(p: &Provenance) -> Expectations {
        let l = p.ell as usize;
        let v = p.v as usize;
        let mut e = Expectations {
            cycle_length: Some(l),
            ..Expectations::default()
        };
        match p.route {
            Route::Rotational2l1 => e.class_sizes = Some((l, l + 1)),
            Route::Rotational4l1 => e.class_sizes = Some((2 * l, 2 * l + 1)),
            Route::BlowupOneMod => {
                let k = (v - 1) / (2 * l);
                e.class_sizes = Some((k * (l + 1), k * (l - 1) + 1));
                e.red_per_part = Some(l.div_ceil(2));
            }
            Route::BlowupEllMod | Route::C3Blowup | Route::C5Blowup => {
                let parts = v / l;
                e.class_sizes = Some((parts * l.div_ceil(2), parts * (l / 2)));
                e.red_per_part = Some(l.div_ceil(2));
            }
            Route::Custom => {}
        }
        e
    }
}

/// Passes iff the cycle holds `floor(l/2)` vertices of one colour and
/// `ceil(l/2)` of the other.
pub fn verify_equitable_cycle(c: &Cycle, phi: &Colouring, ell: usize) -> Result<bool> {
    let (red, blue) = colour_profile(c, phi)?;
    Ok(red + blue == ell && red.abs_diff(blue) <= 1)
}

fn colour_profile(c: &Cycle, phi: &Colouring) -> Result<(usize, usize)> {
    let mut red = 0;
    for v in c.vertices() {
        match phi.get(v) {
            Some(Colour::Red) => red += 1,
            Some(Colour::Blue) => {}
            None => {
                return Err(Error::InvalidParameter(format!("vertex {v} is uncoloured")));
            }
        }
    }
    Ok((red, c.len() - red))
}

fn check_edge_partition(system: &CycleSystem) -> Check {
    let mut tally: HashMap<Edge, (usize, usize)> = HashMap::new();
    for (i, c) in system.cycles.iter().enumerate() {
        for e in c.edges() {
            let slot = tally.entry(e).or_insert((0, i));
            slot.0 += 1;
        }
    }
    let host = system.graph.edges();
    let mut problems = Vec::new();
    let mut uncovered = 0usize;
    for e in &host {
        match tally.remove(e) {
            None => {
                uncovered += 1;
                if problems.len() < 3 {
                    problems.push(format!("edge {e} uncovered"));
                }
            }
            Some((1, _)) => {}
            Some((k, first)) => {
                if problems.len() < 3 {
                    problems.push(format!(
                        "edge {e} covered {k} times (first in cycle #{first})"
                    ));
                }
            }
        }
    }
    let mut foreign: Vec<(Edge, usize)> = tally.into_iter().map(|(e, (_, i))| (e, i)).collect();
    foreign.sort();
    for (e, i) in foreign.iter().take(3) {
        problems.push(format!("edge {e} of cycle #{i} is not a host edge"));
    }
    let passed = problems.is_empty();
    Check {
        name: EDGE_PARTITION,
        passed,
        witness: if passed {
            format!("{} host edges each covered once", host.len())
        } else {
            if uncovered > 0 {
                problems.push(format!("{uncovered} host edges uncovered in total"));
            }
            problems.join("; ")
        },
    }
}

fn check_cycle_length(system: &CycleSystem, want: Option<usize>) -> Check {
    let want = want.or_else(|| system.cycles.first().map(Cycle::len));
    let bad = want.and_then(|w| {
        system
            .cycles
            .iter()
            .enumerate()
            .find(|(_, c)| c.len() != w)
            .map(|(i, c)| format!("cycle #{i} {c} has length {}, expected {w}", c.len()))
    });
    Check {
        name: CYCLE_LENGTH,
        passed: bad.is_none(),
        witness: bad.unwrap_or_else(|| {
            format!(
                "{} cycles of length {}",
                system.cycles.len(),
                want.unwrap_or(0)
            )
        }),
    }
}

fn check_equitable(system: &CycleSystem) -> Check {
    let mut bad = Vec::new();
    let mut count = 0usize;
    for (i, c) in system.cycles.iter().enumerate() {
        let fail = match colour_profile(c, &system.colouring) {
            Ok((r, b)) if r.abs_diff(b) <= 1 => None,
            Ok((r, b)) => Some(format!("cycle #{i} {c} has {r} red, {b} blue")),
            Err(e) => Some(format!("cycle #{i}: {e}")),
        };
        if let Some(w) = fail {
            count += 1;
            if bad.len() < 3 {
                bad.push(w);
            }
        }
    }
    Check {
        name: EQUITABLE_CYCLES,
        passed: count == 0,
        witness: if count == 0 {
            format!("{} cycles balanced", system.cycles.len())
        } else {
            format!("{count} unbalanced: {}", bad.join("; "))
        },
    }
}

fn check_class_sizes(system: &CycleSystem, want: (usize, usize)) -> Check {
    let got = system.colouring.class_sizes();
    Check {
        name: CLASS_SIZES,
        passed: got == want,
        witness: format!(
            "red={} blue={} (expected red={} blue={})",
            got.0, got.1, want.0, want.1
        ),
    }
}

fn blown_parts(graph: &GraphSpec) -> Option<(u32, u32)> {
    match graph {
        GraphSpec::Complete(VertexFamily::Blown {
            parts, part_size, ..
        })
        | GraphSpec::CompleteMinusFactor {
            family: VertexFamily::Blown {
                parts, part_size, ..
            },
            ..
        } => Some((*parts, *part_size)),
        GraphSpec::Blowup { s, ell } => Some((*s, *ell)),
        _ => None,
    }
}

fn check_part_quotas(system: &CycleSystem, want: usize) -> Check {
    let Some((parts, _)) = blown_parts(&system.graph) else {
        return Check {
            name: PART_QUOTAS,
            passed: false,
            witness: "host has no blown-up parts to count".into(),
        };
    };
    let mut red = vec![0usize; parts as usize];
    for (v, c) in system.colouring.iter() {
        if let (Vertex::Blown { part, .. }, Colour::Red) = (v, c) {
            if let Some(slot) = red.get_mut(*part as usize) {
                *slot += 1;
            }
        }
    }
    let bad = red.iter().enumerate().find(|(_, r)| **r != want);
    Check {
        name: PART_QUOTAS,
        passed: bad.is_none(),
        witness: match bad {
            Some((g, r)) => format!("part {g} has {r} red, expected {want}"),
            None => format!("{parts} parts with {want} red each"),
        },
    }
}

/// Runs every applicable check, without stopping at the first failure.
pub fn verify(system: &CycleSystem, expectations: &Expectations) -> Verdict {
    let mut checks = vec![
        check_edge_partition(system),
        check_cycle_length(system, expectations.cycle_length),
        check_equitable(system),
    ];
    if let Some(want) = expectations.class_sizes {
        checks.push(check_class_sizes(system, want));
    }
    if let Some(want) = expectations.red_per_part {
        checks.push(check_part_quotas(system, want));
    }
    Verdict { checks }
}

/// [`verify`] with the expectations implied by the system's own route.
pub fn verify_certificate(system: &CycleSystem) -> Verdict {
    verify(system, &Expectations::from_provenance(&system.provenance))
}

/// Gate used by constructions: an `Err` naming the failing checks if the
/// system does not verify.
pub(crate) fn require_pass(system: &CycleSystem, expectations: &Expectations) -> Result<()> {
    let verdict = verify(system, expectations);
    if verdict.passed() {
        return Ok(());
    }
    let detail: Vec<String> = verdict
        .checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.name, c.witness))
        .collect();
    Err(Error::InvariantViolation(detail.join(" | ")))
}
