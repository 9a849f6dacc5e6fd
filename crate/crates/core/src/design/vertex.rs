use std::fmt;
use std::str::FromStr;

use crate::error::Error;

/// A vertex of one of the host graphs used by the constructions.
///
/// Derived ordering is the canonicalization order: plain points first, then
/// rotational points by `(part, residue)`, then blown-up points by
/// `(part, point)`, and the fixed point last.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Vertex {
    /// A residue `x` of `Z_v`.
    Plain(u32),
    /// The point `residue_part` of `Z_n x {0, 1}`.
    Rotational { part: u8, residue: u32 },
    /// The point `(part, point)` of `Z_s x Z_ell`.
    Blown { part: u32, point: u32 },
    /// The fixed point of a rotational or blown-up system.
    Infinity,
}

/// Which family a vertex belongs to. A cycle system draws all its finite
/// vertices from one family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilyKind {
    Plain,
    Rotational,
    Blown,
}

impl Vertex {
    /// Rotational vertex with the residue reduced modulo `n`.
    pub fn rot(residue: i64, part: u8, n: u32) -> Self {
        Vertex::Rotational {
            part,
            residue: reduce(residue, n),
        }
    }

    pub fn blown(part: i64, point: i64, s: u32, ell: u32) -> Self {
        Vertex::Blown {
            part: reduce(part, s),
            point: reduce(point, ell),
        }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Vertex::Infinity)
    }

    /// `None` for the fixed point.
    pub fn family(&self) -> Option<FamilyKind> {
        match self {
            Vertex::Plain(_) => Some(FamilyKind::Plain),
            Vertex::Rotational { .. } => Some(FamilyKind::Rotational),
            Vertex::Blown { .. } => Some(FamilyKind::Blown),
            Vertex::Infinity => None,
        }
    }

    /// Adds `shift` to the residue of a rotational vertex; the fixed point is
    /// left in place. Other families are returned unchanged.
    pub fn shift_rotational(&self, shift: u32, n: u32) -> Self {
        match *self {
            Vertex::Rotational { part, residue } => Vertex::Rotational {
                part,
                residue: (residue + shift % n) % n,
            },
            other => other,
        }
    }

    /// Adds `shift` to the part of a blown-up vertex.
    pub fn shift_part(&self, shift: u32, s: u32) -> Self {
        match *self {
            Vertex::Blown { part, point } => Vertex::Blown {
                part: (part + shift % s) % s,
                point,
            },
            other => other,
        }
    }
}

pub(crate) fn reduce(x: i64, n: u32) -> u32 {
    x.rem_euclid(i64::from(n)) as u32
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Vertex::Plain(x) => write!(f, "{x}"),
            Vertex::Rotational { part, residue } => write!(f, "{residue}_{part}"),
            Vertex::Blown { part, point } => write!(f, "({part},{point})"),
            Vertex::Infinity => f.write_str("inf"),
        }
    }
}

impl FromStr for Vertex {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || Error::InvalidParameter(format!("bad vertex token `{s}`"));
        let num = |t: &str| t.trim().parse::<u32>().map_err(|_| bad());
        if s == "inf" {
            return Ok(Vertex::Infinity);
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (g, h) = inner.split_once(',').ok_or_else(bad)?;
            return Ok(Vertex::Blown {
                part: num(g)?,
                point: num(h)?,
            });
        }
        if let Some((a, part)) = s.split_once('_') {
            let part = match part {
                "0" => 0,
                "1" => 1,
                _ => return Err(bad()),
            };
            return Ok(Vertex::Rotational {
                part,
                residue: num(a)?,
            });
        }
        if s.bytes().all(|b| b.is_ascii_digit()) && !s.is_empty() {
            return Ok(Vertex::Plain(num(s)?));
        }
        Err(bad())
    }
}
