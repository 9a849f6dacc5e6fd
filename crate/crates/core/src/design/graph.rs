use std::collections::BTreeSet;

use super::cycle::Edge;
use super::vertex::Vertex;
use crate::error::{Error, Result};

/// The labelled vertex set of a complete host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexFamily {
    /// `Z_v`.
    Plain { order: u32 },
    /// `Z_n x {0,1}`, optionally with the fixed point.
    Rotational { modulus: u32, infinity: bool },
    /// `Z_s x Z_ell`, optionally with the fixed point.
    Blown {
        parts: u32,
        part_size: u32,
        infinity: bool,
    },
}

impl VertexFamily {
    pub fn vertices(&self) -> Vec<Vertex> {
        let mut out = Vec::with_capacity(self.order() as usize);
        match *self {
            VertexFamily::Plain { order } => out.extend((0..order).map(Vertex::Plain)),
            VertexFamily::Rotational { modulus, infinity } => {
                for part in 0..2u8 {
                    out.extend((0..modulus).map(|residue| Vertex::Rotational { part, residue }));
                }
                if infinity {
                    out.push(Vertex::Infinity);
                }
            }
            VertexFamily::Blown {
                parts,
                part_size,
                infinity,
            } => {
                for part in 0..parts {
                    out.extend((0..part_size).map(|point| Vertex::Blown { part, point }));
                }
                if infinity {
                    out.push(Vertex::Infinity);
                }
            }
        }
        out
    }

    pub fn order(&self) -> u32 {
        match *self {
            VertexFamily::Plain { order } => order,
            VertexFamily::Rotational { modulus, infinity } => 2 * modulus + u32::from(infinity),
            VertexFamily::Blown {
                parts,
                part_size,
                infinity,
            } => parts * part_size + u32::from(infinity),
        }
    }

    pub fn contains(&self, v: &Vertex) -> bool {
        match (*self, *v) {
            (VertexFamily::Plain { order }, Vertex::Plain(x)) => x < order,
            (VertexFamily::Rotational { modulus, .. }, Vertex::Rotational { part, residue }) => {
                part < 2 && residue < modulus
            }
            (
                VertexFamily::Blown {
                    parts, part_size, ..
                },
                Vertex::Blown { part, point },
            ) => part < parts && point < part_size,
            (VertexFamily::Rotational { infinity, .. }, Vertex::Infinity)
            | (VertexFamily::Blown { infinity, .. }, Vertex::Infinity) => infinity,
            _ => false,
        }
    }
}

/// The group underlying a Cayley host.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CayleyGroup {
    /// `Z_n`, elements written as [`Vertex::Plain`].
    Cyclic(u32),
    /// `Z_s x Z_ell`, elements written as [`Vertex::Blown`].
    Product { s: u32, ell: u32 },
}

impl CayleyGroup {
    fn elements(&self) -> Vec<Vertex> {
        match *self {
            CayleyGroup::Cyclic(n) => VertexFamily::Plain { order: n }.vertices(),
            CayleyGroup::Product { s, ell } => VertexFamily::Blown {
                parts: s,
                part_size: ell,
                infinity: false,
            }
            .vertices(),
        }
    }

    fn add(&self, x: &Vertex, y: &Vertex) -> Option<Vertex> {
        match (*self, *x, *y) {
            (CayleyGroup::Cyclic(n), Vertex::Plain(a), Vertex::Plain(b)) => {
                Some(Vertex::Plain((a + b) % n))
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
            ) => Some(Vertex::Blown {
                part: (g1 + g2) % s,
                point: (h1 + h2) % ell,
            }),
            _ => None,
        }
    }

    fn negate(&self, x: &Vertex) -> Option<Vertex> {
        match (*self, *x) {
            (CayleyGroup::Cyclic(n), Vertex::Plain(a)) => Some(Vertex::Plain((n - a % n) % n)),
            (CayleyGroup::Product { s, ell }, Vertex::Blown { part, point }) => {
                Some(Vertex::Blown {
                    part: (s - part % s) % s,
                    point: (ell - point % ell) % ell,
                })
            }
            _ => None,
        }
    }

    fn contains(&self, x: &Vertex) -> bool {
        match (*self, *x) {
            (CayleyGroup::Cyclic(n), Vertex::Plain(a)) => a < n,
            (CayleyGroup::Product { s, ell }, Vertex::Blown { part, point }) => {
                part < s && point < ell
            }
            _ => false,
        }
    }

    fn identity(&self) -> Vertex {
        match self {
            CayleyGroup::Cyclic(_) => Vertex::Plain(0),
            CayleyGroup::Product { .. } => Vertex::Blown { part: 0, point: 0 },
        }
    }
}

/// A host graph. Edge enumeration here is the single definition of which
/// edges a decomposition must cover.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GraphSpec {
    Complete(VertexFamily),
    /// A complete graph minus a perfect matching.
    CompleteMinusFactor {
        family: VertexFamily,
        factor: Vec<Edge>,
    },
    /// The lexicographic blow-up `C_s[ell]` on `Z_s x Z_ell`.
    Blowup {
        s: u32,
        ell: u32,
    },
    Cayley {
        group: CayleyGroup,
        connection: Vec<Vertex>,
    },
}

impl GraphSpec {
    pub fn complete_plain(order: u32) -> Self {
        GraphSpec::Complete(VertexFamily::Plain { order })
    }

    /// Checks the structural invariants of the host.
    pub fn validate(&self) -> Result<()> {
        match self {
            GraphSpec::Complete(_) => Ok(()),
            GraphSpec::CompleteMinusFactor { family, factor } => {
                let order = family.order();
                if order % 2 != 0 {
                    return Err(Error::InvalidParameter(format!(
                        "a perfect matching needs an even order, got {order}"
                    )));
                }
                let mut seen = BTreeSet::new();
                for e in factor {
                    if e.0 == e.1 || !family.contains(&e.0) || !family.contains(&e.1) {
                        return Err(Error::InvalidParameter(format!("bad factor edge {e}")));
                    }
                    if !seen.insert(e.0) || !seen.insert(e.1) {
                        return Err(Error::InvalidParameter(format!(
                            "factor edges overlap at {e}"
                        )));
                    }
                }
                if seen.len() as u32 != order {
                    return Err(Error::InvalidParameter(
                        "factor is not a perfect matching".into(),
                    ));
                }
                Ok(())
            }
            GraphSpec::Blowup { s, ell } => {
                if *s < 3 || *ell < 1 {
                    return Err(Error::InvalidParameter(format!(
                        "blow-up C_{s}[{ell}] needs s >= 3"
                    )));
                }
                Ok(())
            }
            GraphSpec::Cayley { group, connection } => {
                let set: BTreeSet<Vertex> = connection.iter().copied().collect();
                for w in &set {
                    if !group.contains(w) {
                        return Err(Error::InvalidParameter(format!(
                            "connection element {w} outside the group"
                        )));
                    }
                    if *w == group.identity() {
                        return Err(Error::InvalidParameter(
                            "connection set contains the identity".into(),
                        ));
                    }
                    let neg = group.negate(w).expect("element checked above");
                    if !set.contains(&neg) {
                        return Err(Error::InvalidParameter(format!(
                            "connection set not closed under negation: {w}"
                        )));
                    }
                }
                Ok(())
            }
        }
    }

    pub fn vertices(&self) -> Vec<Vertex> {
        match self {
            GraphSpec::Complete(f) | GraphSpec::CompleteMinusFactor { family: f, .. } => {
                f.vertices()
            }
            GraphSpec::Blowup { s, ell } => VertexFamily::Blown {
                parts: *s,
                part_size: *ell,
                infinity: false,
            }
            .vertices(),
            GraphSpec::Cayley { group, .. } => group.elements(),
        }
    }

    pub fn contains_vertex(&self, v: &Vertex) -> bool {
        match self {
            GraphSpec::Complete(f) | GraphSpec::CompleteMinusFactor { family: f, .. } => {
                f.contains(v)
            }
            GraphSpec::Blowup { s, ell } => VertexFamily::Blown {
                parts: *s,
                part_size: *ell,
                infinity: false,
            }
            .contains(v),
            GraphSpec::Cayley { group, .. } => group.contains(v),
        }
    }

    /// All edges, sorted.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out = BTreeSet::new();
        match self {
            GraphSpec::Complete(f) => {
                let vs = f.vertices();
                for (i, a) in vs.iter().enumerate() {
                    for b in &vs[i + 1..] {
                        out.insert(Edge::new(*a, *b));
                    }
                }
            }
            GraphSpec::CompleteMinusFactor { family, factor } => {
                let removed: BTreeSet<Edge> = factor.iter().copied().collect();
                let vs = family.vertices();
                for (i, a) in vs.iter().enumerate() {
                    for b in &vs[i + 1..] {
                        let e = Edge::new(*a, *b);
                        if !removed.contains(&e) {
                            out.insert(e);
                        }
                    }
                }
            }
            GraphSpec::Blowup { s, ell } => {
                for g in 0..*s {
                    let next = (g + 1) % s;
                    for h in 0..*ell {
                        for h2 in 0..*ell {
                            out.insert(Edge::new(
                                Vertex::Blown { part: g, point: h },
                                Vertex::Blown {
                                    part: next,
                                    point: h2,
                                },
                            ));
                        }
                    }
                }
            }
            GraphSpec::Cayley { group, connection } => {
                for x in group.elements() {
                    for w in connection {
                        if let Some(y) = group.add(&x, w) {
                            if y != x {
                                out.insert(Edge::new(x, y));
                            }
                        }
                    }
                }
            }
        }
        out.into_iter().collect()
    }

    pub fn num_edges(&self) -> usize {
        self.edges().len()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edge_counts() {
        assert_eq!(GraphSpec::complete_plain(19).num_edges(), 171);
        let rot = GraphSpec::Complete(VertexFamily::Rotational {
            modulus: 34,
            infinity: true,
        });
        assert_eq!(rot.num_edges(), 69 * 68 / 2);
        assert_eq!(GraphSpec::Blowup { s: 3, ell: 9 }.num_edges(), 3 * 81);
        assert_eq!(GraphSpec::Blowup { s: 5, ell: 7 }.num_edges(), 5 * 49);
    }

    #[test]
    fn minus_factor_must_be_perfect() {
        let family = VertexFamily::Plain { order: 6 };
        let ok = GraphSpec::CompleteMinusFactor {
            family,
            factor: vec![
                Edge::new(Vertex::Plain(0), Vertex::Plain(1)),
                Edge::new(Vertex::Plain(2), Vertex::Plain(3)),
                Edge::new(Vertex::Plain(4), Vertex::Plain(5)),
            ],
        };
        ok.validate().unwrap();
        assert_eq!(ok.num_edges(), 12);
        let short = GraphSpec::CompleteMinusFactor {
            family,
            factor: vec![Edge::new(Vertex::Plain(0), Vertex::Plain(1))],
        };
        assert!(short.validate().is_err());
    }

    #[test]
    fn cayley_connection_rules() {
        let good = GraphSpec::Cayley {
            group: CayleyGroup::Cyclic(9),
            connection: vec![
                Vertex::Plain(3),
                Vertex::Plain(6),
                Vertex::Plain(4),
                Vertex::Plain(5),
            ],
        };
        good.validate().unwrap();
        assert_eq!(good.num_edges(), 18);
        let open = GraphSpec::Cayley {
            group: CayleyGroup::Cyclic(9),
            connection: vec![Vertex::Plain(3)],
        };
        assert!(open.validate().is_err());
        let ident = GraphSpec::Cayley {
            group: CayleyGroup::Cyclic(9),
            connection: vec![Vertex::Plain(0)],
        };
        assert!(ident.validate().is_err());
    }
}
