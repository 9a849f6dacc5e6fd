//! Difference bookkeeping for 2-rotational systems over `(Z_n x {0,1}) ∪ {∞}`.
//!
//! An edge `a_i ~ b_j` has a *pure* difference when `i == j`, recorded as the
//! class `±(b - a)` and stored by its representative in `1..=n/2`. When
//! `i != j` the difference is *mixed* and directed from part 0 to part 1:
//! `a_0 ~ b_1` gives `b - a (mod n)`. Edges at the fixed point carry no
//! difference; they are tallied as incidences `(a, i)` instead.

use std::collections::BTreeMap;
use std::fmt;

use crate::design::{Cycle, NamedCycle, Vertex};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DifferenceKind {
    Mixed,
    /// Pure difference inside part 0 or part 1.
    Pure(u8),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DifferenceClass {
    pub kind: DifferenceKind,
    pub value: u32,
}

impl DifferenceClass {
    pub fn mixed(value: u32) -> Self {
        DifferenceClass {
            kind: DifferenceKind::Mixed,
            value,
        }
    }

    /// Pure class of `±d` in `Z_n`, stored canonically.
    pub fn pure(part: u8, d: i64, n: u32) -> Self {
        let d = d.rem_euclid(i64::from(n)) as u32;
        DifferenceClass {
            kind: DifferenceKind::Pure(part),
            value: d.min(n - d),
        }
    }
}

impl fmt::Display for DifferenceClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            DifferenceKind::Mixed => write!(f, "mixed {}", self.value),
            DifferenceKind::Pure(p) => write!(f, "{p}-pure ±{}", self.value),
        }
    }
}

/// Multiset of differences of one cycle, plus its edges at the fixed point.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DifferenceMultiset {
    counts: BTreeMap<DifferenceClass, usize>,
    /// Finite neighbours `(residue, part)` of the fixed point.
    infinity_incidences: Vec<(u32, u8)>,
}

impl DifferenceMultiset {
    pub fn count(&self, class: &DifferenceClass) -> usize {
        self.counts.get(class).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&DifferenceClass, &usize)> {
        self.counts.iter()
    }

    pub fn infinity_incidences(&self) -> &[(u32, u8)] {
        &self.infinity_incidences
    }

    /// Classes of one kind, ascending, with multiplicity.
    pub fn values_of(&self, kind: DifferenceKind) -> Vec<u32> {
        self.counts
            .iter()
            .filter(|(c, _)| c.kind == kind)
            .flat_map(|(c, m)| std::iter::repeat_n(c.value, *m))
            .collect()
    }

    fn add(&mut self, class: DifferenceClass) {
        *self.counts.entry(class).or_insert(0) += 1;
    }
}

impl FromIterator<DifferenceClass> for DifferenceMultiset {
    fn from_iter<I: IntoIterator<Item = DifferenceClass>>(iter: I) -> Self {
        let mut m = DifferenceMultiset::default();
        for c in iter {
            m.add(c);
        }
        m
    }
}

fn rotational_parts(v: &Vertex, n: u32, c: &Cycle) -> Result<Option<(u32, u8)>> {
    match *v {
        Vertex::Rotational { part, residue } if residue < n && part < 2 => {
            Ok(Some((residue, part)))
        }
        Vertex::Infinity => Ok(None),
        _ => Err(Error::FamilyMismatch(format!(
            "cycle {c} is not over Z_{n} x {{0,1}} ∪ {{inf}} (found {v})"
        ))),
    }
}

/// Difference multiset of `c` over `Z_n`.
pub fn differences(c: &Cycle, n: u32) -> Result<DifferenceMultiset> {
    let mut out = DifferenceMultiset::default();
    for (x, y) in c.arcs() {
        match (rotational_parts(&x, n, c)?, rotational_parts(&y, n, c)?) {
            (Some((a, i)), Some((b, j))) => {
                let (a, b) = (i64::from(a), i64::from(b));
                let class = match (i, j) {
                    (0, 1) => DifferenceClass::mixed((b - a).rem_euclid(i64::from(n)) as u32),
                    (1, 0) => DifferenceClass::mixed((a - b).rem_euclid(i64::from(n)) as u32),
                    _ => DifferenceClass::pure(i, b - a, n),
                };
                out.add(class);
            }
            (None, Some(p)) | (Some(p), None) => out.infinity_incidences.push(p),
            (None, None) => unreachable!("a cycle holds the fixed point at most once"),
        }
    }
    out.infinity_incidences.sort_unstable();
    Ok(out)
}

/// The distinct translates of a base cycle under `x -> x + 1 (mod n)`.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub base: Cycle,
    pub modulus: u32,
    pub length: u32,
    /// `cycles[i] = base + i`.
    pub cycles: Vec<Cycle>,
}

/// Develops `c` modulo `(n, -)`, the fixed point staying put.
pub fn develop(c: &Cycle, n: u32) -> Result<Orbit> {
    for v in c.vertices() {
        rotational_parts(v, n, c)?;
    }
    let canon = c.canonical();
    let length = (1..=n)
        .filter(|d| n.is_multiple_of(*d))
        .find(|&d| c.shift_rotational(d, n).canonical().vertices() == canon.vertices())
        .unwrap_or(n);
    let cycles = (0..length).map(|i| c.shift_rotational(i, n)).collect();
    Ok(Orbit {
        base: c.clone(),
        modulus: n,
        length,
        cycles,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoverageStatus {
    Ok,
    Missing,
    Duplicate,
}

impl fmt::Display for CoverageStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CoverageStatus::Ok => "ok",
            CoverageStatus::Missing => "missing",
            CoverageStatus::Duplicate => "duplicate",
        })
    }
}

/// One row of the difference ledger.
#[derive(Debug, Clone)]
pub struct CoverageEntry {
    pub class: DifferenceClass,
    pub suppliers: Vec<String>,
    /// Edges of this class produced by the developed base cycles.
    pub supplied: usize,
    /// Edges of this class in the complete graph.
    pub required: usize,
    pub status: CoverageStatus,
}

#[derive(Debug, Clone)]
pub struct InfinityEntry {
    pub residue: u32,
    pub part: u8,
    pub suppliers: Vec<String>,
    pub status: CoverageStatus,
}

#[derive(Debug, Clone)]
pub struct CoverageReport {
    pub modulus: u32,
    pub orbit_lengths: Vec<(String, u32)>,
    pub entries: Vec<CoverageEntry>,
    pub infinity: Vec<InfinityEntry>,
}

impl CoverageReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == CoverageStatus::Ok)
            && self.infinity.iter().all(|e| e.status == CoverageStatus::Ok)
    }

    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .entries
            .iter()
            .filter(|e| e.status != CoverageStatus::Ok)
            .map(|e| {
                format!(
                    "{} {} ({} of {})",
                    e.status, e.class, e.supplied, e.required
                )
            })
            .collect();
        out.extend(
            self.infinity
                .iter()
                .filter(|e| e.status != CoverageStatus::Ok)
                .map(|e| format!("{} inf-edge at {}_{}", e.status, e.residue, e.part)),
        );
        out
    }

    pub fn entry(&self, class: &DifferenceClass) -> Option<&CoverageEntry> {
        self.entries.iter().find(|e| e.class == *class)
    }
}

/// Checks that the developed base cycles supply every difference class of
/// `K_{2n+1}` exactly once and every edge at the fixed point exactly once.
///
/// A class contributes `orbit length x multiplicity` edges; the self-paired
/// pure class `n/2` (for even `n`) only has `n/2` edges to cover.
pub fn audit_coverage(bases: &[NamedCycle], n: u32) -> Result<CoverageReport> {
    let mut supplied: BTreeMap<DifferenceClass, (usize, Vec<String>)> = BTreeMap::new();
    let mut inf: BTreeMap<(u32, u8), Vec<String>> = BTreeMap::new();
    let mut orbit_lengths = Vec::with_capacity(bases.len());

    for b in bases {
        let orbit = develop(&b.cycle, n)?;
        let diffs = differences(&b.cycle, n)?;
        let d = orbit.length as usize;
        orbit_lengths.push((b.name.clone(), orbit.length));
        for (class, m) in diffs.iter() {
            let slot = supplied.entry(*class).or_default();
            slot.0 += d * m;
            slot.1.push(b.name.clone());
        }
        for &(a, part) in diffs.infinity_incidences() {
            for t in 0..orbit.length {
                inf.entry(((a + t) % n, part))
                    .or_default()
                    .push(b.name.clone());
            }
        }
    }

    let mut catalogue: Vec<(DifferenceClass, usize)> = (0..n)
        .map(|x| (DifferenceClass::mixed(x), n as usize))
        .collect();
    for part in 0..2u8 {
        for d in 1..=n / 2 {
            let required = if 2 * d == n {
                (n / 2) as usize
            } else {
                n as usize
            };
            catalogue.push((
                DifferenceClass {
                    kind: DifferenceKind::Pure(part),
                    value: d,
                },
                required,
            ));
        }
    }

    let status = |got: usize, want: usize| match got.cmp(&want) {
        std::cmp::Ordering::Less => CoverageStatus::Missing,
        std::cmp::Ordering::Equal => CoverageStatus::Ok,
        std::cmp::Ordering::Greater => CoverageStatus::Duplicate,
    };

    let entries = catalogue
        .into_iter()
        .map(|(class, required)| {
            let (got, suppliers) = supplied.remove(&class).unwrap_or_default();
            CoverageEntry {
                class,
                suppliers,
                supplied: got,
                required,
                status: status(got, required),
            }
        })
        .collect();

    let infinity = (0..2u8)
        .flat_map(|part| (0..n).map(move |a| (a, part)))
        .map(|key| {
            let suppliers = inf.remove(&key).unwrap_or_default();
            InfinityEntry {
                residue: key.0,
                part: key.1,
                status: status(suppliers.len(), 1),
                suppliers,
            }
        })
        .collect();

    Ok(CoverageReport {
        modulus: n,
        orbit_lengths,
        entries,
        infinity,
    })
}
