use std::collections::HashSet;
use std::fmt;

use crate::design::{Cycle, Vertex};
use crate::error::{Error, Result};

/// A path with distinguished initial and terminal vertices. May be empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Path {
    vertices: Vec<Vertex>,
}

impl Path {
    pub fn new(vertices: Vec<Vertex>) -> Result<Path> {
        let mut seen = HashSet::with_capacity(vertices.len());
        if let Some(v) = vertices.iter().find(|v| !seen.insert(**v)) {
            return Err(Error::MalformedCycle(format!("path repeats vertex {v}")));
        }
        Ok(Path { vertices })
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

    pub fn initial(&self) -> Option<Vertex> {
        self.vertices.first().copied()
    }

    pub fn terminal(&self) -> Option<Vertex> {
        self.vertices.last().copied()
    }

    pub fn reversed(&self) -> Path {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        Path { vertices }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("]")
    }
}

/// Glues segments into a closed cycle. Consecutive non-empty segments must
/// share their junction vertex, and the last segment must end where the
/// first one starts.
pub(crate) fn close_chain(segments: &[&[Vertex]]) -> Result<Cycle> {
    let mut out: Vec<Vertex> = Vec::new();
    for seg in segments.iter().filter(|s| !s.is_empty()) {
        match out.last() {
            None => out.extend_from_slice(seg),
            Some(last) if *last == seg[0] => out.extend_from_slice(&seg[1..]),
            Some(last) => {
                return Err(Error::InvariantViolation(format!(
                    "segment starting at {} does not continue from {last}",
                    seg[0]
                )))
            }
        }
    }
    if out.len() < 2 || out.first() != out.last() {
        return Err(Error::InvariantViolation("segments do not close up".into()));
    }
    out.pop();
    Cycle::new(out)
}

/// `p_i(x; a) = [x_i, (x+a)_{i+1}, (x-2)_i]` over `Z_n`.
pub fn p_gadget(x: i64, a: i64, i: u8, n: u32) -> Path {
    Path {
        vertices: vec![
            Vertex::rot(x, i, n),
            Vertex::rot(x + a, 1 - i, n),
            Vertex::rot(x - 2, i, n),
        ],
    }
}

/// `z_i(x; a, b)`: the `b` two-paths `p_i(x - 2j; a + 4j)`, `j < b`, glued
/// end to end. Empty when `b = 0`; otherwise runs from `x_i` to `(x-2b)_i`.
pub fn z_gadget(x: i64, a: i64, b: u32, i: u8, n: u32) -> Result<Path> {
    if b == 0 {
        return Ok(Path {
            vertices: Vec::new(),
        });
    }
    let mut vertices = vec![Vertex::rot(x, i, n)];
    for j in 0..i64::from(b) {
        let p = p_gadget(x - 2 * j, a + 4 * j, i, n);
        vertices.extend_from_slice(&p.vertices[1..]);
    }
    Path::new(vertices)
}

/// Terminal label of `y_i(x; a, b)`.
pub fn y_terminal(x: i64, a: i64, b: i64) -> i64 {
    if b % 2 == 0 {
        x + a + b / 2
    } else {
        x + (b + 1) / 2
    }
}

/// `y_i(x; a, b)`: the `b + 2` vertices `x, x+a+b, x+1, x+a+b-1, ...` in
/// part `i`, whose edges carry the `i`-pure differences `a+b, a+b-1, ..., a`.
/// `b = -1` gives the single vertex `x_i`. With `reversed` the traversal
/// runs from the terminal vertex back to `x_i`.
pub fn y_gadget(x: i64, a: i64, b: i64, i: u8, reversed: bool, n: u32) -> Result<Path> {
    if b < -1 {
        return Err(Error::InvalidParameter(format!(
            "y path needs b >= -1, got {b}"
        )));
    }
    let count = (b + 2) as usize;
    let (mut lo, mut hi) = (x, x + a + b);
    let mut labels = Vec::with_capacity(count);
    while labels.len() < count {
        labels.push(lo);
        lo += 1;
        if labels.len() < count {
            labels.push(hi);
            hi -= 1;
        }
    }
    debug_assert_eq!(*labels.last().unwrap(), y_terminal(x, a, b));
    if reversed {
        labels.reverse();
    }
    Path::new(labels.into_iter().map(|y| Vertex::rot(y, i, n)).collect())
}
