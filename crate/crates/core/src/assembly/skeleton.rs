//! Decompositions of `K_{2k+1}` and `K_{2k} - I` into triangles and
//! pentagons, the skeletons that get blown up.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::Budget;
use crate::design::{Cycle, Edge, GraphSpec, Vertex, VertexFamily};
use crate::error::{Error, Result};

/// `(m, n)` with `3m + 5n = edges` and `n` as small as possible.
pub fn solve_3m_5n(edges: u64) -> Result<(u64, u64)> {
    (0..3)
        .map(|n| (n, 5 * n))
        .find(|&(_, five)| five <= edges && (edges - five).is_multiple_of(3))
        .map(|(n, five)| ((edges - five) / 3, n))
        .ok_or_else(|| Error::InvalidParameter(format!("{edges} is not of the form 3m + 5n")))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkeletonDecomposition {
    pub host: GraphSpec,
    pub triangles: Vec<Cycle>,
    pub pentagons: Vec<Cycle>,
}

impl SkeletonDecomposition {
    pub fn counts(&self) -> (usize, usize) {
        (self.triangles.len(), self.pentagons.len())
    }

    pub fn cycles(&self) -> impl Iterator<Item = &Cycle> {
        self.triangles.iter().chain(&self.pentagons)
    }

    /// The cycles cover every host edge exactly once.
    pub fn check(&self) -> Result<()> {
        let mut got: Vec<Edge> = self
            .cycles()
            .flat_map(|c| c.edges().collect::<Vec<_>>())
            .collect();
        got.sort();
        if got != self.host.edges() {
            return Err(Error::InvariantViolation(
                "skeleton is not an edge partition".into(),
            ));
        }
        Ok(())
    }
}

/// The `K_{2k}` factor `{01, 23, ...}` removed by the `v ≡ 1` route.
pub fn standard_factor(order: u32) -> Vec<Edge> {
    (0..order / 2)
        .map(|i| Edge::new(Vertex::Plain(2 * i), Vertex::Plain(2 * i + 1)))
        .collect()
}

fn plain_order(host: &GraphSpec) -> Result<(u32, bool)> {
    match host {
        GraphSpec::Complete(VertexFamily::Plain { order }) if order % 2 == 1 => Ok((*order, false)),
        GraphSpec::CompleteMinusFactor {
            family: VertexFamily::Plain { order },
            factor,
        } if *factor == standard_factor(*order) => Ok((*order, true)),
        _ => Err(Error::InvalidParameter(
            "skeleton host must be K_v with v odd or K_v - {01, 23, ...}".into(),
        )),
    }
}

fn cycle(points: &[u32]) -> Cycle {
    Cycle::new(points.iter().map(|&x| Vertex::Plain(x)).collect()).expect("distinct points")
}

/// Bose triple system on `6t + 3` points.
fn bose(order: u32) -> Vec<[u32; 3]> {
    let n = order / 3;
    let half = n.div_ceil(2);
    let pt = |x: u32, i: u32| x + n * (i % 3);
    let mut out: Vec<[u32; 3]> = (0..n).map(|x| [pt(x, 0), pt(x, 1), pt(x, 2)]).collect();
    for x in 0..n {
        for y in x + 1..n {
            let z = (x + y) * half % n;
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(z, i + 1)]);
            }
        }
    }
    out
}

/// Skolem triple system on `6t + 1` points; the last point is the extra one.
fn skolem(order: u32) -> Vec<[u32; 3]> {
    let n = (order - 1) / 6;
    let q = 2 * n;
    // Rename 2i -> i and 2i+1 -> n+i in the addition table of Z_{2n}.
    let op = |x: u32, y: u32| {
        let s = (x + y) % q;
        if s.is_multiple_of(2) {
            s / 2
        } else {
            n + s / 2
        }
    };
    let pt = |x: u32, i: u32| x + q * (i % 3);
    let inf = order - 1;
    let mut out: Vec<[u32; 3]> = (0..n).map(|x| [pt(x, 0), pt(x, 1), pt(x, 2)]).collect();
    for x in 0..n {
        for i in 0..3 {
            out.push([inf, pt(n + x, i), pt(x, i + 1)]);
        }
    }
    for x in 0..q {
        for y in x + 1..q {
            for i in 0..3 {
                out.push([pt(x, i), pt(y, i), pt(op(x, y), i + 1)]);
            }
        }
    }
    out
}

fn triple_system(order: u32) -> Option<Vec<[u32; 3]>> {
    match order % 6 {
        3 => Some(bose(order)),
        1 if order > 1 => Some(skolem(order)),
        _ => None,
    }
}

/// Triangles of `K_{2k} - {01, 23, ...}` obtained by deleting a point from a
/// triple system on `2k + 1` points.
fn triangles_minus_factor(order: u32) -> Option<Vec<[u32; 3]>> {
    let sts = triple_system(order + 1)?;
    let drop = order;
    let mut relabel = vec![u32::MAX; order as usize + 1];
    let mut next = 0;
    for t in sts.iter().filter(|t| t.contains(&drop)) {
        for &x in t.iter().filter(|&&x| x != drop) {
            relabel[x as usize] = next;
            next += 1;
        }
    }
    Some(
        sts.into_iter()
            .filter(|t| !t.contains(&drop))
            .map(|t| t.map(|x| relabel[x as usize]))
            .collect(),
    )
}

/// Base pentagons of a cyclic pentagon system on `10t + 1` points: the
/// differences `1..=5t` split into groups of five with signs making each
/// group a closed walk through five distinct points.
fn cyclic_pentagon_bases(order: u32) -> Option<Vec<[u32; 5]>> {
    fn extend(
        order: i64,
        left: &mut Vec<i64>,
        out: &mut Vec<[u32; 5]>,
        cur: &mut Vec<i64>,
    ) -> bool {
        if cur.len() == 5 {
            let sum: i64 = cur.iter().sum();
            if sum.rem_euclid(order) != 0 {
                return false;
            }
            let mut pts = [0u32; 5];
            let mut at = 0i64;
            for (i, d) in cur.iter().enumerate() {
                pts[i] = at.rem_euclid(order) as u32;
                at += d;
            }
            let mut sorted = pts;
            sorted.sort_unstable();
            if sorted.windows(2).any(|w| w[0] == w[1]) {
                return false;
            }
            out.push(pts);
            let saved = std::mem::take(cur);
            if extend(order, left, out, cur) {
                return true;
            }
            *cur = saved;
            out.pop();
            return false;
        }
        if cur.is_empty() && left.is_empty() {
            return true;
        }
        // The largest unused difference always starts a new group.
        let choices: Vec<usize> = if cur.is_empty() {
            vec![left.len() - 1]
        } else {
            (0..left.len()).rev().collect()
        };
        for i in choices {
            let d = left.remove(i);
            for sign in [1, -1] {
                cur.push(sign * d);
                if extend(order, left, out, cur) {
                    return true;
                }
                cur.pop();
            }
            left.insert(i, d);
        }
        false
    }
    if order % 10 != 1 {
        return None;
    }
    let mut left: Vec<i64> = (1..=(order as i64 - 1) / 2).collect();
    let mut out = Vec::new();
    extend(order as i64, &mut left, &mut out, &mut Vec::new()).then_some(out)
}

fn develop_pentagons(order: u32, bases: &[[u32; 5]]) -> Vec<[u32; 5]> {
    bases
        .iter()
        .flat_map(|b| (0..order).map(move |i| b.map(|x| (x + i) % order)))
        .collect()
}

const ATTEMPT_NODES: u64 = 200_000;

struct TriangleSearch<'a> {
    adj: Vec<u64>,
    chosen: Vec<[u32; 3]>,
    nodes: u64,
    budget: &'a Budget,
    rng: ChaCha8Rng,
}

enum Step {
    Done,
    Dead,
    OutOfNodes,
}

impl TriangleSearch<'_> {
    fn remove(&mut self, t: [u32; 3]) {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            self.adj[a as usize] &= !(1 << b);
            self.adj[b as usize] &= !(1 << a);
        }
    }

    fn restore(&mut self, t: [u32; 3]) {
        for (a, b) in [(t[0], t[1]), (t[1], t[2]), (t[0], t[2])] {
            self.adj[a as usize] |= 1 << b;
            self.adj[b as usize] |= 1 << a;
        }
    }

    /// Uncovered edge with the fewest completing triangles.
    fn pick(&self) -> Option<(u32, u32, u64)> {
        let mut best: Option<(u32, u32, u64)> = None;
        for (u, &row) in self.adj.iter().enumerate() {
            let mut rest = row & !((2u64 << u) - 1);
            while rest != 0 {
                let v = rest.trailing_zeros();
                rest &= rest - 1;
                let common = row & self.adj[v as usize];
                if best.is_none_or(|b| common.count_ones() < b.2.count_ones()) {
                    best = Some((u as u32, v, common));
                    if common == 0 {
                        return best;
                    }
                }
            }
        }
        best
    }

    fn run(&mut self) -> Step {
        self.nodes += 1;
        if self.nodes > ATTEMPT_NODES
            || (self.nodes.is_multiple_of(4096) && self.budget.exhausted())
        {
            return Step::OutOfNodes;
        }
        let Some((u, v, common)) = self.pick() else {
            return Step::Done;
        };
        let mut options: Vec<u32> = (0..64).filter(|w| common >> w & 1 == 1).collect();
        options.shuffle(&mut self.rng);
        for w in options {
            let t = [u, v, w];
            self.remove(t);
            self.chosen.push(t);
            match self.run() {
                Step::Done => return Step::Done,
                Step::OutOfNodes => return Step::OutOfNodes,
                Step::Dead => {}
            }
            self.chosen.pop();
            self.restore(t);
        }
        Step::Dead
    }
}

fn random_pentagons(adj: &mut [u64], n: u64, rng: &mut ChaCha8Rng) -> Option<Vec<[u32; 5]>> {
    let order = adj.len() as u32;
    let mut out = Vec::new();
    'outer: for _ in 0..n {
        for _ in 0..1000 {
            let mut pts: Vec<u32> = (0..order).collect();
            pts.shuffle(rng);
            let p = [pts[0], pts[1], pts[2], pts[3], pts[4]];
            let ok = (0..5).all(|i| adj[p[i] as usize] >> p[(i + 1) % 5] & 1 == 1);
            if ok {
                for i in 0..5 {
                    let (a, b) = (p[i] as usize, p[(i + 1) % 5] as usize);
                    adj[a] &= !(1 << b);
                    adj[b] &= !(1 << a);
                }
                out.push(p);
                continue 'outer;
            }
        }
        return None;
    }
    Some(out)
}

/// Splits `host` into `m` triangles and `n` pentagons.
///
/// Triple systems are built directly when no pentagon is needed. Otherwise
/// pentagons are placed at random and the rest is covered by a backtracking
/// exact cover on triangles, branching on the most constrained edge, with
/// restarts until `budget` runs out.
pub fn decompose_into_3_5_cycles(
    host: &GraphSpec,
    m: u64,
    n: u64,
    seed: u64,
    budget: &Budget,
) -> Result<SkeletonDecomposition> {
    let (order, minus_factor) = plain_order(host)?;
    if order > 64 {
        return Err(Error::InvalidParameter(format!(
            "skeleton order {order} exceeds 64"
        )));
    }
    let edges = host.num_edges() as u64;
    if 3 * m + 5 * n != edges {
        return Err(Error::InvalidParameter(format!(
            "3*{m} + 5*{n} does not equal the {edges} host edges"
        )));
    }
    let finish = |triangles: Vec<[u32; 3]>, pentagons: Vec<[u32; 5]>| {
        let d = SkeletonDecomposition {
            host: host.clone(),
            triangles: triangles.iter().map(|t| cycle(t)).collect(),
            pentagons: pentagons.iter().map(|p| cycle(p)).collect(),
        };
        d.check()?;
        Ok(d)
    };
    if n == 0 {
        let direct = if minus_factor {
            triangles_minus_factor(order)
        } else {
            triple_system(order)
        };
        if let Some(t) = direct {
            return finish(t, Vec::new());
        }
    }
    if m == 0 && !minus_factor && order <= 41 {
        if let Some(bases) = cyclic_pentagon_bases(order) {
            return finish(Vec::new(), develop_pentagons(order, &bases));
        }
    }
    let mut full = vec![0u64; order as usize];
    for e in host.edges() {
        if let (Vertex::Plain(a), Vertex::Plain(b)) = (e.0, e.1) {
            full[a as usize] |= 1 << b;
            full[b as usize] |= 1 << a;
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        if budget.exhausted() {
            return Err(Error::BudgetExhausted(format!(
                "no decomposition of the order-{order} skeleton into {m} triangles and {n} pentagons found in time"
            )));
        }
        let mut adj = full.clone();
        let Some(pentagons) = random_pentagons(&mut adj, n, &mut rng) else {
            continue;
        };
        let mut search = TriangleSearch {
            adj,
            chosen: Vec::new(),
            nodes: 0,
            budget,
            rng: ChaCha8Rng::seed_from_u64(rng.gen()),
        };
        if let Step::Done = search.run() {
            return finish(search.chosen, pentagons);
        }
    }
}
