//! Brute-force ground truth for small cases, written without reference to
//! the production code paths it is used to check.

use std::collections::BTreeMap;

use crate::design::{CayleyGroup, Colour, Cycle, CycleSystem, GraphSpec, Vertex, VertexFamily};
use crate::error::{Error, Result};
use crate::verify::Expectations;

/// Every graceful labelling of the path on `h` vertices, as label sequences
/// read from one end. With `leaf = Some(x)` only those starting at `x`.
/// Each undirected path appears once per end it can be read from.
pub fn enumerate_graceful(h: u32, leaf: Option<u32>) -> Result<Vec<Vec<u32>>> {
    if !(2..=12).contains(&h) {
        return Err(Error::InvalidParameter(format!(
            "h = {h} is outside 2..=12"
        )));
    }
    fn grow(
        h: u32,
        seq: &mut Vec<u32>,
        labels: &mut [bool],
        diffs: &mut [bool],
        out: &mut Vec<Vec<u32>>,
    ) {
        if seq.len() == h as usize {
            out.push(seq.clone());
            return;
        }
        let last = *seq.last().expect("seeded");
        for x in 0..h {
            let d = last.abs_diff(x) as usize;
            if labels[x as usize] || diffs[d] {
                continue;
            }
            labels[x as usize] = true;
            diffs[d] = true;
            seq.push(x);
            grow(h, seq, labels, diffs, out);
            seq.pop();
            labels[x as usize] = false;
            diffs[d] = false;
        }
    }
    let mut out = Vec::new();
    for start in 0..h {
        if leaf.is_some_and(|l| l != start) {
            continue;
        }
        let mut labels = vec![false; h as usize];
        let mut diffs = vec![false; h as usize];
        labels[start as usize] = true;
        diffs[0] = true;
        grow(h, &mut vec![start], &mut labels, &mut diffs, &mut out);
    }
    Ok(out)
}

fn adjacent(host: &GraphSpec, a: &Vertex, b: &Vertex) -> bool {
    if a == b {
        return false;
    }
    match host {
        GraphSpec::Complete(_) => true,
        GraphSpec::CompleteMinusFactor { factor, .. } => !factor
            .iter()
            .any(|e| (e.0 == *a && e.1 == *b) || (e.0 == *b && e.1 == *a)),
        GraphSpec::Blowup { s, .. } => match (a, b) {
            (Vertex::Blown { part: g, .. }, Vertex::Blown { part: h, .. }) => {
                (g + 1) % s == *h || (h + 1) % s == *g
            }
            _ => false,
        },
        GraphSpec::Cayley { group, connection } => {
            let diff = match (group, a, b) {
                (CayleyGroup::Cyclic(n), Vertex::Plain(x), Vertex::Plain(y)) => {
                    Vertex::Plain((x + n - y) % n)
                }
                (
                    CayleyGroup::Product { s, ell },
                    Vertex::Blown {
                        part: g1,
                        point: h1,
                    },
                    Vertex::Blown {
                        part: g2,
                        point: h2,
                    },
                ) => Vertex::Blown {
                    part: (g1 + s - g2) % s,
                    point: (h1 + ell - h2) % ell,
                },
                _ => return false,
            };
            connection.contains(&diff)
        }
    }
}

fn pair(a: Vertex, b: Vertex) -> (Vertex, Vertex) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

fn host_edges(host: &GraphSpec) -> Vec<(Vertex, Vertex)> {
    let vs = host.vertices();
    let mut out = Vec::new();
    for (i, a) in vs.iter().enumerate() {
        for b in &vs[i + 1..] {
            if adjacent(host, a, b) {
                out.push(pair(*a, *b));
            }
        }
    }
    out
}

/// Independent tallies of a certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tallies {
    /// How often each host edge is covered, zero included.
    pub host_edges: BTreeMap<(Vertex, Vertex), usize>,
    /// Cycle edges that are not host edges, with multiplicity.
    pub foreign_edges: usize,
    /// `(red, blue, uncoloured)` per cycle.
    pub profiles: Vec<(usize, usize, usize)>,
    /// `(red, blue)` over the whole vertex set.
    pub class_sizes: (usize, usize),
    /// Red vertices in each blown-up part.
    pub red_per_part: Vec<usize>,
}

impl Tallies {
    pub fn uncovered(&self) -> usize {
        self.host_edges.values().filter(|&&k| k == 0).count()
    }

    pub fn covered_once(&self) -> usize {
        self.host_edges.values().filter(|&&k| k == 1).count()
    }
}

pub fn recount(system: &CycleSystem) -> Tallies {
    let mut host_edges: BTreeMap<(Vertex, Vertex), usize> = host_edges(&system.graph)
        .into_iter()
        .map(|e| (e, 0))
        .collect();
    let mut foreign_edges = 0;
    let mut profiles = Vec::new();
    for c in &system.cycles {
        let vs = c.vertices();
        for i in 0..vs.len() {
            match host_edges.get_mut(&pair(vs[i], vs[(i + 1) % vs.len()])) {
                Some(k) => *k += 1,
                None => foreign_edges += 1,
            }
        }
        let mut p = (0, 0, 0);
        for v in vs {
            match system.colouring.get(v) {
                Some(Colour::Red) => p.0 += 1,
                Some(Colour::Blue) => p.1 += 1,
                None => p.2 += 1,
            }
        }
        profiles.push(p);
    }
    let mut class_sizes = (0, 0);
    let parts = match system.graph {
        GraphSpec::Complete(VertexFamily::Blown { parts, .. })
        | GraphSpec::CompleteMinusFactor {
            family: VertexFamily::Blown { parts, .. },
            ..
        } => parts,
        GraphSpec::Blowup { s, .. } => s,
        _ => 0,
    };
    let mut red_per_part = vec![0; parts as usize];
    for (v, c) in system.colouring.iter() {
        match c {
            Colour::Red => {
                class_sizes.0 += 1;
                if let Vertex::Blown { part, .. } = v {
                    if let Some(r) = red_per_part.get_mut(*part as usize) {
                        *r += 1;
                    }
                }
            }
            Colour::Blue => class_sizes.1 += 1,
        }
    }
    Tallies {
        host_edges,
        foreign_edges,
        profiles,
        class_sizes,
        red_per_part,
    }
}

/// Whether the certificate meets every requirement the verifier checks,
/// decided from [`recount`] alone.
pub fn judge(system: &CycleSystem, expectations: &Expectations) -> bool {
    let t = recount(system);
    let partition = t.foreign_edges == 0 && t.host_edges.values().all(|&k| k == 1);
    let length = expectations
        .cycle_length
        .or_else(|| system.cycles.first().map(Cycle::len));
    let lengths = system.cycles.iter().all(|c| Some(c.len()) == length);
    let balanced = t
        .profiles
        .iter()
        .all(|&(r, b, u)| u == 0 && r.abs_diff(b) <= 1);
    let classes = expectations.class_sizes.is_none_or(|w| w == t.class_sizes);
    let quotas = expectations
        .red_per_part
        .is_none_or(|w| !t.red_per_part.is_empty() && t.red_per_part.iter().all(|&r| r == w));
    partition && lengths && balanced && classes && quotas
}

const EXACT_COVER_EDGES: usize = 40;

/// A decomposition of `host` into cycles with the given lengths, found by
/// complete backtracking, or `None` if there is none.
pub fn exact_cover_decompose(host: &GraphSpec, lengths: &[usize]) -> Result<Option<Vec<Cycle>>> {
    let vs = host.vertices();
    if vs.len() > 12 {
        return Err(Error::InvalidParameter(format!(
            "{} vertices is beyond the oracle",
            vs.len()
        )));
    }
    let edges = host_edges(host);
    if edges.len() > EXACT_COVER_EDGES {
        return Err(Error::InvalidParameter(format!(
            "{} edges is beyond the oracle",
            edges.len()
        )));
    }
    if lengths.iter().sum::<usize>() != edges.len() || lengths.iter().any(|&l| l < 3) {
        return Ok(None);
    }
    let n = vs.len();
    let index: BTreeMap<Vertex, usize> = vs.iter().enumerate().map(|(i, v)| (*v, i)).collect();
    let mut free = vec![vec![false; n]; n];
    for (a, b) in &edges {
        free[index[a]][index[b]] = true;
        free[index[b]][index[a]] = true;
    }
    let mut remaining: Vec<usize> = lengths.to_vec();
    remaining.sort_unstable();
    let mut found: Vec<Vec<usize>> = Vec::new();

    fn first_free(free: &[Vec<bool>]) -> Option<(usize, usize)> {
        (0..free.len())
            .flat_map(|a| (a + 1..free.len()).map(move |b| (a, b)))
            .find(|&(a, b)| free[a][b])
    }

    fn set(free: &mut [Vec<bool>], path: &[usize], value: bool) {
        for i in 0..path.len() {
            let (a, b) = (path[i], path[(i + 1) % path.len()]);
            free[a][b] = value;
            free[b][a] = value;
        }
    }

    // Extend a path from `path[0] - path[1]` to a cycle of length `len`.
    fn close(
        free: &mut Vec<Vec<bool>>,
        path: &mut Vec<usize>,
        len: usize,
        remaining: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) -> bool {
        let last = *path.last().expect("nonempty");
        if path.len() == len {
            if !free[last][path[0]] {
                return false;
            }
            set(free, path, false);
            found.push(path.clone());
            if solve(free, remaining, found) {
                return true;
            }
            found.pop();
            set(free, path, true);
            return false;
        }
        for next in 0..free.len() {
            if path.contains(&next) || !free[last][next] {
                continue;
            }
            free[last][next] = false;
            free[next][last] = false;
            path.push(next);
            let ok = close(free, path, len, remaining, found);
            path.pop();
            free[last][next] = true;
            free[next][last] = true;
            if ok {
                return true;
            }
        }
        false
    }

    fn solve(
        free: &mut Vec<Vec<bool>>,
        remaining: &mut Vec<usize>,
        found: &mut Vec<Vec<usize>>,
    ) -> bool {
        let Some((a, b)) = first_free(free) else {
            return remaining.is_empty();
        };
        let mut tried = Vec::new();
        for i in 0..remaining.len() {
            let len = remaining[i];
            if tried.contains(&len) {
                continue;
            }
            tried.push(len);
            remaining.remove(i);
            free[a][b] = false;
            free[b][a] = false;
            let ok = close(free, &mut vec![a, b], len, remaining, found);
            free[a][b] = true;
            free[b][a] = true;
            remaining.insert(i, len);
            if ok {
                return true;
            }
        }
        false
    }

    if !solve(&mut free, &mut remaining, &mut found) {
        return Ok(None);
    }
    found
        .into_iter()
        .map(|p| Cycle::new(p.into_iter().map(|i| vs[i]).collect()))
        .collect::<Result<Vec<_>>>()
        .map(Some)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::design::{Colouring, Provenance, Route};

    #[test]
    fn graceful_small_cases() {
        assert!(enumerate_graceful(3, Some(1))
            .unwrap()
            .contains(&vec![1, 0, 2]));
        assert!(enumerate_graceful(6, None)
            .unwrap()
            .contains(&vec![0, 5, 1, 4, 2, 3]));
        assert_eq!(
            enumerate_graceful(2, None).unwrap(),
            vec![vec![0, 1], vec![1, 0]]
        );
        assert!(enumerate_graceful(13, None).is_err());
        for h in 2..=9 {
            assert!(!enumerate_graceful(h, Some(0)).unwrap().is_empty());
            assert!(!enumerate_graceful(h, Some(1)).unwrap().is_empty());
        }
    }

    #[test]
    fn graceful_counts_match_permutation_scan() {
        // (h, all, starting at 0, starting at 1) from filtering all h! orderings.
        let table = [
            (2, 2, 1, 1),
            (3, 4, 1, 2),
            (4, 4, 1, 1),
            (5, 8, 1, 2),
            (6, 24, 1, 5),
            (7, 32, 1, 4),
            (8, 40, 1, 5),
            (9, 120, 1, 12),
        ];
        for (h, all, zero, one) in table {
            assert_eq!(enumerate_graceful(h, None).unwrap().len(), all, "h = {h}");
            assert_eq!(enumerate_graceful(h, Some(0)).unwrap().len(), zero);
            assert_eq!(enumerate_graceful(h, Some(1)).unwrap().len(), one);
        }
    }

    #[test]
    fn exact_cover_cases() {
        let k7 = GraphSpec::complete_plain(7);
        let d = exact_cover_decompose(&k7, &[3; 7]).unwrap().unwrap();
        assert_eq!(d.len(), 7);
        let k5 = GraphSpec::complete_plain(5);
        assert_eq!(
            exact_cover_decompose(&k5, &[5, 5]).unwrap().unwrap().len(),
            2
        );
        assert!(exact_cover_decompose(&k5, &[3, 3, 3]).unwrap().is_none());
        assert_eq!(
            exact_cover_decompose(&k5, &[3, 3, 4])
                .unwrap()
                .unwrap()
                .len(),
            3
        );
        assert!(
            exact_cover_decompose(&GraphSpec::complete_plain(4), &[3, 3])
                .unwrap()
                .is_none()
        );
        assert!(exact_cover_decompose(&GraphSpec::complete_plain(13), &[3; 26]).is_err());
    }

    #[test]
    fn empty_system_over_k3() {
        let host = GraphSpec::complete_plain(3);
        let colouring = Colouring::from_fn(host.vertices(), |_| Colour::Red);
        let sys = CycleSystem::new(
            host,
            vec![],
            colouring,
            Provenance::new(Route::Custom, 3, 3),
        )
        .unwrap();
        let t = recount(&sys);
        assert_eq!((t.covered_once(), t.uncovered()), (0, 3));
    }
}
