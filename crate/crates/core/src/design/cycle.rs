use std::collections::HashSet;
use std::fmt;
use std::hash::{Hash, Hasher};

use super::vertex::Vertex;
use crate::error::{Error, Result};

/// An undirected edge, stored with its endpoints in increasing order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(pub Vertex, pub Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}, {}}}", self.0, self.1)
    }
}

/// A cycle given by its cyclic vertex sequence.
///
/// The stored order is kept as constructed. Equality, hashing and ordering
/// are up to rotation and reflection, via [`Cycle::canonical`].
#[derive(Debug, Clone)]
pub struct Cycle {
    vertices: Vec<Vertex>,
}

impl Cycle {
    pub fn new(vertices: Vec<Vertex>) -> Result<Self> {
        if vertices.len() < 3 {
            return Err(Error::MalformedCycle(format!(
                "a cycle needs at least 3 vertices, got {}",
                vertices.len()
            )));
        }
        let mut seen = HashSet::with_capacity(vertices.len());
        for v in &vertices {
            if !seen.insert(*v) {
                return Err(Error::MalformedCycle(format!("vertex {v} repeated")));
            }
        }
        Ok(Cycle { vertices })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        self.vertices.contains(v)
    }

    /// Consecutive pairs, including the closing edge.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| Edge::new(self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Directed consecutive pairs `(v_i, v_{i+1})`, including the closing pair.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// The lexicographically least sequence among all rotations and
    /// reflections of this cycle.
    pub fn canonical(&self) -> Cycle {
        Cycle {
            vertices: canonical_sequence(&self.vertices),
        }
    }

    pub fn map(&self, f: impl Fn(&Vertex) -> Vertex) -> Result<Cycle> {
        Cycle::new(self.vertices.iter().map(f).collect())
    }

    /// Translate every rotational vertex by `shift` modulo `n`.
    pub fn shift_rotational(&self, shift: u32, n: u32) -> Cycle {
        Cycle {
            vertices: self
                .vertices
                .iter()
                .map(|v| v.shift_rotational(shift, n))
                .collect(),
        }
    }

    /// Translate the part coordinate of every blown-up vertex by `shift`.
    pub fn shift_part(&self, shift: u32, s: u32) -> Cycle {
        Cycle {
            vertices: self
                .vertices
                .iter()
                .map(|v| v.shift_part(shift, s))
                .collect(),
        }
    }

    pub fn reversed(&self) -> Cycle {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Cycle { vertices }
    }
}

/// Canonical form of a cycle; fails on a repeated vertex or fewer than three.
pub fn canonical_form(c: &[Vertex]) -> Result<Cycle> {
    Ok(Cycle::new(c.to_vec())?.canonical())
}

fn canonical_sequence(vs: &[Vertex]) -> Vec<Vertex> {
    let n = vs.len();
    let mut best: Option<Vec<Vertex>> = None;
    // Only rotations starting at the minimum vertex can win.
    let start = (0..n).min_by_key(|&i| vs[i]).unwrap_or(0);
    for dir in [1isize, -1] {
        let cand: Vec<Vertex> = (0..n as isize)
            .map(|k| vs[(start as isize + dir * k).rem_euclid(n as isize) as usize])
            .collect();
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap_or_default()
}

impl From<Cycle> for Vec<Vertex> {
    fn from(c: Cycle) -> Self {
        c.vertices
    }
}

impl TryFrom<Vec<Vertex>> for Cycle {
    type Error = Error;
    fn try_from(v: Vec<Vertex>) -> Result<Self> {
        Cycle::new(v)
    }
}

impl PartialEq for Cycle {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical().vertices == other.canonical().vertices
    }
}

impl Eq for Cycle {}

impl Hash for Cycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().vertices.hash(state);
    }
}

impl PartialOrd for Cycle {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Cycle {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.canonical().vertices.cmp(&other.canonical().vertices)
    }
}

impl fmt::Display for Cycle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str(")")
    }
}
