use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use super::vertex::Vertex;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn flipped(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

impl fmt::Display for Colour {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Colour::Red => "red",
            Colour::Blue => "blue",
        })
    }
}

impl FromStr for Colour {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "red" => Ok(Colour::Red),
            "blue" => Ok(Colour::Blue),
            _ => Err(Error::InvalidParameter(format!("unknown colour `{s}`"))),
        }
    }
}

/// A red/blue vertex colouring with cached class sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Colouring {
    assignment: BTreeMap<Vertex, Colour>,
    red: usize,
    blue: usize,
}

impl Colouring {
    pub fn from_fn(
        vertices: impl IntoIterator<Item = Vertex>,
        f: impl Fn(&Vertex) -> Colour,
    ) -> Self {
        vertices.into_iter().map(|v| (v, f(&v))).collect()
    }

    pub fn get(&self, v: &Vertex) -> Option<Colour> {
        self.assignment.get(v).copied()
    }

    /// `(red, blue)`.
    pub fn class_sizes(&self) -> (usize, usize) {
        (self.red, self.blue)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Vertex, &Colour)> {
        self.assignment.iter()
    }

    /// A copy with the colour of `v` replaced.
    pub fn with(&self, v: Vertex, c: Colour) -> Colouring {
        let mut assignment = self.assignment.clone();
        assignment.insert(v, c);
        assignment.into_iter().collect()
    }

    /// A copy with the two colour names exchanged.
    pub fn swapped(&self) -> Colouring {
        self.assignment
            .iter()
            .map(|(v, c)| (*v, c.flipped()))
            .collect()
    }
}

impl FromIterator<(Vertex, Colour)> for Colouring {
    fn from_iter<I: IntoIterator<Item = (Vertex, Colour)>>(iter: I) -> Self {
        let assignment: BTreeMap<Vertex, Colour> = iter.into_iter().collect();
        let red = assignment.values().filter(|c| **c == Colour::Red).count();
        let blue = assignment.len() - red;
        Colouring {
            assignment,
            red,
            blue,
        }
    }
}

impl From<BTreeMap<Vertex, Colour>> for Colouring {
    fn from(m: BTreeMap<Vertex, Colour>) -> Self {
        m.into_iter().collect()
    }
}

impl From<Colouring> for BTreeMap<Vertex, Colour> {
    fn from(c: Colouring) -> Self {
        c.assignment
    }
}
