use std::collections::{BTreeSet, HashMap};
use std::sync::{Mutex, OnceLock};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::design::{CayleyGroup, Cycle, Edge, GraphSpec, Vertex};
use crate::error::{Error, Result};

/// Hamiltonian cycles partitioning a host on `Z_l` (vertices are
/// [`Vertex::Plain`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HamiltonianDecomposition {
    pub host: GraphSpec,
    pub cycles: Vec<Cycle>,
}

impl HamiltonianDecomposition {
    /// Every cycle spans the host and the edge sets partition it.
    pub fn check(&self) -> Result<()> {
        let order = self.host.vertices().len();
        let mut seen = BTreeSet::new();
        for c in &self.cycles {
            if c.len() != order || c.vertices().iter().any(|v| !self.host.contains_vertex(v)) {
                return Err(Error::InvariantViolation(format!("{c} is not Hamiltonian")));
            }
            for e in c.edges() {
                if !seen.insert(e) {
                    return Err(Error::InvariantViolation(format!("edge {e} used twice")));
                }
            }
        }
        let host: BTreeSet<Edge> = self.host.edges().into_iter().collect();
        if host != seen {
            return Err(Error::InvariantViolation(
                "cycles do not cover the host edges exactly".into(),
            ));
        }
        Ok(())
    }
}

fn odd_at_least(ell: u32, min: u32) -> Result<()> {
    if ell.is_multiple_of(2) || ell < min {
        return Err(Error::InvalidParameter(format!(
            "l must be odd and at least {min}, got {ell}"
        )));
    }
    Ok(())
}

/// Walecki's decomposition of `K_l`: a fixed point `l - 1` joined to the
/// zigzags `i, i+1, i-1, i+2, ...` over `Z_{l-1}`.
pub fn walecki(ell: u32) -> Result<HamiltonianDecomposition> {
    odd_at_least(ell, 3)?;
    let m = i64::from(ell - 1);
    let cycles = (0..m / 2)
        .map(|i| {
            let mut vs = vec![Vertex::Plain(ell - 1)];
            vs.push(Vertex::Plain(i as u32));
            for j in 1..=m / 2 {
                vs.push(Vertex::Plain((i + j).rem_euclid(m) as u32));
                if j < m / 2 {
                    vs.push(Vertex::Plain((i - j).rem_euclid(m) as u32));
                }
            }
            Cycle::new(vs)
        })
        .collect::<Result<Vec<_>>>()?;
    let d = HamiltonianDecomposition {
        host: GraphSpec::complete_plain(ell),
        cycles,
    };
    d.check()?;
    Ok(d)
}

/// `±{3, 4, ..., (l-1)/2}` in `Z_l`.
pub fn circulant_connection(ell: u32) -> Vec<Vertex> {
    (3..=(ell - 1) / 2)
        .flat_map(|g| [Vertex::Plain(g), Vertex::Plain(ell - g)])
        .collect()
}

const PAIR_NODE_BUDGET: u64 = 200_000;
const PAIR_RESTARTS: u64 = 500;

/// Splits `Cay[Z_l, ±{a, a+1}]` into two Hamiltonian cycles.
///
/// Randomised depth-first search for a Hamiltonian cycle whose complement
/// (a 2-factor) is connected. Seeded from `(l, a)`, so the result is fixed.
fn split_pair(ell: u32, a: u32) -> Result<[Vec<u32>; 2]> {
    let n = ell as usize;
    let gens = [a, ell - a, a + 1, ell - a - 1];
    let nbrs: Vec<[usize; 4]> = (0..ell)
        .map(|x| gens.map(|g| ((x + g) % ell) as usize))
        .collect();

    for restart in 0..PAIR_RESTARTS {
        let seed = (u64::from(ell) << 32) ^ (u64::from(a) << 16) ^ restart;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);

        let mut on_path = vec![false; n];
        let mut path = vec![0usize];
        on_path[0] = true;
        let mut stack = vec![candidates(0, &nbrs, &on_path, &mut rng)];
        let mut nodes = 0u64;
        while let Some(options) = stack.last_mut() {
            nodes += 1;
            if nodes > PAIR_NODE_BUDGET {
                break;
            }
            let last = *path.last().expect("path and stack move together");
            if path.len() == n {
                if nbrs[last].contains(&0) {
                    if let Some(other) = complement_cycle(&path, &nbrs) {
                        return Ok([path.iter().map(|&x| x as u32).collect(), other]);
                    }
                }
                on_path[last] = false;
                path.pop();
                stack.pop();
                continue;
            }
            let Some(next) = options.pop() else {
                on_path[last] = false;
                path.pop();
                stack.pop();
                continue;
            };
            on_path[next] = true;
            path.push(next);
            if stranded(last, next, &nbrs, &on_path) {
                on_path[next] = false;
                path.pop();
                continue;
            }
            let opts = candidates(next, &nbrs, &on_path, &mut rng);
            stack.push(opts);
        }
    }
    Err(Error::BudgetExhausted(format!(
        "no Hamiltonian pair for Cay[Z_{ell}, ±{{{a},{}}}]",
        a + 1
    )))
}

/// Unvisited neighbours of `x`, most constrained last so they are tried
/// first.
fn candidates(x: usize, nbrs: &[[usize; 4]], on_path: &[bool], rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut out: Vec<usize> = nbrs[x].iter().copied().filter(|&y| !on_path[y]).collect();
    out.sort_unstable();
    out.dedup();
    out.shuffle(rng);
    let free = |y: usize| nbrs[y].iter().filter(|&&z| !on_path[z]).count();
    out.sort_by_key(|&y| std::cmp::Reverse(free(y)));
    out
}

/// After the path grew from `last` to `next`, an unvisited neighbour of
/// `last` that can no longer get two path edges is a dead end.
fn stranded(last: usize, next: usize, nbrs: &[[usize; 4]], on_path: &[bool]) -> bool {
    nbrs[last].iter().any(|&w| {
        !on_path[w]
            && nbrs[w]
                .iter()
                .filter(|&&z| !on_path[z] || z == next || z == 0)
                .count()
                < 2
    })
}

/// The leftover 2-factor of a Hamiltonian cycle in a 4-regular circulant,
/// if it is a single cycle.
fn complement_cycle(path: &[usize], nbrs: &[[usize; 4]]) -> Option<Vec<u32>> {
    let n = path.len();
    let mut used: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..n {
        let (x, y) = (path[i], path[(i + 1) % n]);
        used.insert((x.min(y), x.max(y)));
    }
    let rest = |x: usize| -> Vec<usize> {
        nbrs[x]
            .iter()
            .copied()
            .filter(|&y| !used.contains(&(x.min(y), x.max(y))))
            .collect()
    };
    let mut out = vec![0u32];
    let (mut prev, mut cur) = (0usize, rest(0)[0]);
    while cur != 0 {
        out.push(cur as u32);
        let r = rest(cur);
        let next = if r[0] == prev { r[1] } else { r[0] };
        prev = cur;
        cur = next;
    }
    (out.len() == n).then_some(out)
}

type PairMemo = Mutex<HashMap<(u32, u32), [Vec<u32>; 2]>>;

fn pair_memo() -> &'static PairMemo {
    static MEMO: OnceLock<PairMemo> = OnceLock::new();
    MEMO.get_or_init(|| Mutex::new(HashMap::new()))
}

fn plain_cycle(xs: &[u32]) -> Result<Cycle> {
    Cycle::new(xs.iter().map(|&x| Vertex::Plain(x)).collect())
}

/// Hamiltonian decomposition of `Cay[Z_l, ±{3, ..., (l-1)/2}]`.
///
/// Generators are taken in pairs `{3,4}, {5,6}, ...`, each pair split into
/// two Hamiltonian cycles; when `l ≡ 3 (mod 4)` the last generator
/// `(l-1)/2` is a unit and gives one cycle on its own.
pub fn circulant_ham_decomposition(ell: u32) -> Result<HamiltonianDecomposition> {
    odd_at_least(ell, 7)?;
    let top = (ell - 1) / 2;
    let mut cycles = Vec::with_capacity((ell as usize - 5) / 2);
    let mut a = 3;
    while a < top {
        let cached = pair_memo()
            .lock()
            .expect("memo poisoned")
            .get(&(ell, a))
            .cloned();
        let pair = match cached {
            Some(p) => p,
            None => {
                let p = split_pair(ell, a)?;
                pair_memo()
                    .lock()
                    .expect("memo poisoned")
                    .insert((ell, a), p.clone());
                p
            }
        };
        cycles.push(plain_cycle(&pair[0])?);
        cycles.push(plain_cycle(&pair[1])?);
        a += 2;
    }
    if a == top {
        let walk: Vec<u32> = (0..ell).map(|j| j * top % ell).collect();
        cycles.push(plain_cycle(&walk)?);
    }
    let d = HamiltonianDecomposition {
        host: GraphSpec::Cayley {
            group: CayleyGroup::Cyclic(ell),
            connection: circulant_connection(ell),
        },
        cycles,
    };
    d.check()?;
    Ok(d)
}
