//! Certificate files: a line-oriented text format and a JSON rendering of
//! the same data.
//!
//! ```text
//! ell=9
//! v=19
//! graph=complete rotational 9 inf
//! route=rotational-2l+1
//! seed=0
//! modulus=9
//! colour 0_0 red
//! ...
//! cycle (inf 4_0 0_0 ...)
//! base c_inf (inf 4_0 0_0 ...)
//! end
//! ```
//!
//! `graph=` is one of `complete <family>`, `minus-factor <family>` followed
//! by `factor <a> <b>` lines, `blowup <s> <l>`, or `cayley cyclic <n>` /
//! `cayley product <s> <l>` followed by `connection <x>` lines. A family is
//! `plain <n>`, `rotational <n> [inf]` or `blown <s> <l> [inf]`. Cycles are
//! written in canonical form. The closing `end` line makes truncation
//! detectable.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::design::{
    CayleyGroup, Colour, Colouring, Cycle, CycleSystem, Edge, GraphSpec, NamedCycle, Provenance,
    Route, Vertex, VertexFamily,
};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Format {
    #[default]
    Text,
    Structured,
}

impl FromStr for Format {
    type Err = Error;
    fn from_str(s: &str) -> Result<Format> {
        match s {
            "text" => Ok(Format::Text),
            "structured" => Ok(Format::Structured),
            _ => Err(Error::InvalidParameter(format!("unknown format `{s}`"))),
        }
    }
}

fn family_words(f: &VertexFamily) -> String {
    let inf = |b: bool| if b { " inf" } else { "" };
    match *f {
        VertexFamily::Plain { order } => format!("plain {order}"),
        VertexFamily::Rotational { modulus, infinity } => {
            format!("rotational {modulus}{}", inf(infinity))
        }
        VertexFamily::Blown {
            parts,
            part_size,
            infinity,
        } => format!("blown {parts} {part_size}{}", inf(infinity)),
    }
}

fn graph_words(g: &GraphSpec) -> String {
    match g {
        GraphSpec::Complete(f) => format!("complete {}", family_words(f)),
        GraphSpec::CompleteMinusFactor { family, .. } => {
            format!("minus-factor {}", family_words(family))
        }
        GraphSpec::Blowup { s, ell } => format!("blowup {s} {ell}"),
        GraphSpec::Cayley { group, .. } => match group {
            CayleyGroup::Cyclic(n) => format!("cayley cyclic {n}"),
            CayleyGroup::Product { s, ell } => format!("cayley product {s} {ell}"),
        },
    }
}

/// Graph shape without its factor or connection, which arrive on later lines.
enum GraphHead {
    Complete(VertexFamily),
    MinusFactor(VertexFamily),
    Blowup(u32, u32),
    Cayley(CayleyGroup),
}

fn parse_family(words: &[&str]) -> std::result::Result<VertexFamily, String> {
    let num = |i: usize| -> std::result::Result<u32, String> {
        words
            .get(i)
            .ok_or_else(|| "family is missing a size".to_string())?
            .parse()
            .map_err(|_| format!("bad number `{}`", words[i]))
    };
    let inf = |i: usize| -> std::result::Result<bool, String> {
        match words.get(i) {
            None => Ok(false),
            Some(&"inf") if words.len() == i + 1 => Ok(true),
            Some(w) => Err(format!("unexpected `{w}`")),
        }
    };
    match words.first() {
        Some(&"plain") if words.len() == 2 => Ok(VertexFamily::Plain { order: num(1)? }),
        Some(&"rotational") => Ok(VertexFamily::Rotational {
            modulus: num(1)?,
            infinity: inf(2)?,
        }),
        Some(&"blown") => Ok(VertexFamily::Blown {
            parts: num(1)?,
            part_size: num(2)?,
            infinity: inf(3)?,
        }),
        _ => Err(format!("unknown vertex family `{}`", words.join(" "))),
    }
}

fn parse_graph(value: &str) -> std::result::Result<GraphHead, String> {
    let words: Vec<&str> = value.split_whitespace().collect();
    let num = |i: usize| -> std::result::Result<u32, String> {
        words
            .get(i)
            .and_then(|w| w.parse().ok())
            .ok_or_else(|| format!("bad graph `{value}`"))
    };
    match words.first() {
        Some(&"complete") => Ok(GraphHead::Complete(parse_family(&words[1..])?)),
        Some(&"minus-factor") => Ok(GraphHead::MinusFactor(parse_family(&words[1..])?)),
        Some(&"blowup") if words.len() == 3 => Ok(GraphHead::Blowup(num(1)?, num(2)?)),
        Some(&"cayley") => match words.get(1) {
            Some(&"cyclic") if words.len() == 3 => {
                Ok(GraphHead::Cayley(CayleyGroup::Cyclic(num(2)?)))
            }
            Some(&"product") if words.len() == 4 => Ok(GraphHead::Cayley(CayleyGroup::Product {
                s: num(2)?,
                ell: num(3)?,
            })),
            _ => Err(format!("bad graph `{value}`")),
        },
        _ => Err(format!("bad graph `{value}`")),
    }
}

fn extras(g: &GraphSpec) -> (Vec<Edge>, Vec<Vertex>) {
    match g {
        GraphSpec::CompleteMinusFactor { factor, .. } => (factor.clone(), Vec::new()),
        GraphSpec::Cayley { connection, .. } => (Vec::new(), connection.clone()),
        _ => (Vec::new(), Vec::new()),
    }
}

fn build(
    head: GraphHead,
    factor: Vec<Edge>,
    connection: Vec<Vertex>,
) -> std::result::Result<GraphSpec, String> {
    let graph = match head {
        GraphHead::Complete(f) => GraphSpec::Complete(f),
        GraphHead::MinusFactor(family) => GraphSpec::CompleteMinusFactor {
            family,
            factor: factor.clone(),
        },
        GraphHead::Blowup(s, ell) => GraphSpec::Blowup { s, ell },
        GraphHead::Cayley(group) => GraphSpec::Cayley {
            group,
            connection: connection.clone(),
        },
    };
    let (want_factor, want_connection) = extras(&graph);
    if factor != want_factor || connection != want_connection {
        return Err("factor or connection lines do not match the graph kind".into());
    }
    Ok(graph)
}

fn cycle_text(c: &Cycle) -> String {
    c.canonical().to_string()
}

/// Renders the text format.
pub fn write_text(system: &CycleSystem) -> String {
    let p = &system.provenance;
    let mut out = String::new();
    let _ = writeln!(out, "ell={}", p.ell);
    let _ = writeln!(out, "v={}", p.v);
    let _ = writeln!(out, "graph={}", graph_words(&system.graph));
    let _ = writeln!(out, "route={}", p.route);
    let _ = writeln!(out, "seed={}", p.seed);
    if let Some(k) = p.k {
        let _ = writeln!(out, "k={k}");
    }
    if let Some(m) = p.modulus {
        let _ = writeln!(out, "modulus={m}");
    }
    let (factor, connection) = extras(&system.graph);
    for e in factor {
        let _ = writeln!(out, "factor {} {}", e.0, e.1);
    }
    for x in connection {
        let _ = writeln!(out, "connection {x}");
    }
    for (v, c) in system.colouring.iter() {
        let _ = writeln!(out, "colour {v} {c}");
    }
    for c in &system.cycles {
        let _ = writeln!(out, "cycle {}", cycle_text(c));
    }
    for b in &p.base_cycles {
        let _ = writeln!(out, "base {} {}", b.name, cycle_text(&b.cycle));
    }
    out.push_str("end\n");
    out
}

struct LineError {
    column: usize,
    message: String,
}

fn at(column: usize, message: impl Into<String>) -> LineError {
    LineError {
        column,
        message: message.into(),
    }
}

fn vertex_at(tok: &str, column: usize) -> std::result::Result<Vertex, LineError> {
    tok.parse().map_err(|e: Error| at(column, e.to_string()))
}

/// Tokens of a `(a b c)` group with their 1-based columns; `offset` is the
/// column of the opening parenthesis.
fn parse_cycle(text: &str, offset: usize) -> std::result::Result<Cycle, LineError> {
    let trimmed = text.trim_end();
    let inner = trimmed
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| at(offset, "cycle must be enclosed in parentheses"))?;
    let mut vertices = Vec::new();
    let mut pos = 0;
    for tok in inner.split(' ') {
        if !tok.is_empty() {
            vertices.push(vertex_at(tok, offset + 1 + pos)?);
        }
        pos += tok.len() + 1;
    }
    Cycle::new(vertices).map_err(|e| at(offset, e.to_string()))
}

#[derive(Default)]
struct Header {
    ell: Option<u32>,
    v: Option<u32>,
    graph: Option<GraphHead>,
    route: Option<Route>,
    seed: Option<u64>,
    k: Option<u32>,
    modulus: Option<u32>,
}

/// Parses the text format. Errors carry the 1-based line and column.
pub fn read_text(input: &str) -> Result<CycleSystem> {
    let mut h = Header::default();
    let mut factor = Vec::new();
    let mut connection = Vec::new();
    let mut colours = Vec::new();
    let mut cycles = Vec::new();
    let mut bases = Vec::new();
    let mut ended = false;
    let mut last = 0;
    for (idx, raw) in input.lines().enumerate() {
        let line_no = idx + 1;
        last = line_no;
        let err = |e: LineError| Error::Parse {
            line: line_no,
            column: e.column,
            message: e.message,
        };
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if ended {
            return Err(err(at(1, "content after `end`")));
        }
        let parsed: std::result::Result<(), LineError> = (|| {
            if let Some((key, value)) = line.split_once('=').filter(|(k, _)| !k.contains(' ')) {
                let vcol = key.len() + 2;
                let num = |v: &str| {
                    v.parse::<u64>()
                        .map_err(|_| at(vcol, format!("bad number `{v}`")))
                };
                match key {
                    "ell" => h.ell = Some(num(value)? as u32),
                    "v" => h.v = Some(num(value)? as u32),
                    "seed" => h.seed = Some(num(value)?),
                    "k" => h.k = Some(num(value)? as u32),
                    "modulus" => h.modulus = Some(num(value)? as u32),
                    "route" => {
                        h.route = Some(value.parse().map_err(|e: Error| at(vcol, e.to_string()))?)
                    }
                    "graph" => h.graph = Some(parse_graph(value).map_err(|m| at(vcol, m))?),
                    _ => return Err(at(1, format!("unknown header `{key}`"))),
                }
                return Ok(());
            }
            let (word, rest) = line.split_once(' ').unwrap_or((line, ""));
            let rcol = word.len() + 2;
            match word {
                "end" if rest.is_empty() => ended = true,
                "colour" => {
                    let (tok, c) = rest
                        .split_once(' ')
                        .ok_or_else(|| at(rcol, "expected `colour <vertex> <red|blue>`"))?;
                    let v = vertex_at(tok, rcol)?;
                    let c: Colour = c
                        .parse()
                        .map_err(|e: Error| at(rcol + tok.len() + 1, e.to_string()))?;
                    colours.push((v, c));
                }
                "cycle" => cycles.push(parse_cycle(rest, rcol)?),
                "base" => {
                    let (name, c) = rest
                        .split_once(' ')
                        .ok_or_else(|| at(rcol, "expected `base <name> (...)`"))?;
                    bases.push(NamedCycle::new(
                        name,
                        parse_cycle(c, rcol + name.len() + 1)?,
                    ));
                }
                "factor" => {
                    let (a, b) = rest
                        .split_once(' ')
                        .ok_or_else(|| at(rcol, "expected `factor <a> <b>`"))?;
                    factor.push(Edge::new(
                        vertex_at(a, rcol)?,
                        vertex_at(b, rcol + a.len() + 1)?,
                    ));
                }
                "connection" => connection.push(vertex_at(rest, rcol)?),
                _ => return Err(at(1, format!("unexpected line starting `{word}`"))),
            }
            Ok(())
        })();
        parsed.map_err(err)?;
    }
    let eof = |message: String| Error::Parse {
        line: last + 1,
        column: 1,
        message,
    };
    if !ended {
        return Err(eof("missing `end` line; the file looks truncated".into()));
    }
    let missing = |k: &str| eof(format!("missing `{k}=` header"));
    let graph = build(h.graph.ok_or_else(|| missing("graph"))?, factor, connection).map_err(eof)?;
    let mut provenance = Provenance::new(
        h.route.ok_or_else(|| missing("route"))?,
        h.ell.ok_or_else(|| missing("ell"))?,
        h.v.ok_or_else(|| missing("v"))?,
    );
    provenance.seed = h.seed.ok_or_else(|| missing("seed"))?;
    provenance.k = h.k;
    provenance.modulus = h.modulus;
    provenance.base_cycles = bases;
    assemble(graph, cycles, colours, provenance).map_err(|e| eof(e.to_string()))
}

fn assemble(
    graph: GraphSpec,
    cycles: Vec<Cycle>,
    colours: Vec<(Vertex, Colour)>,
    provenance: Provenance,
) -> Result<CycleSystem> {
    let n = colours.len();
    let colouring: Colouring = colours.into_iter().collect();
    if colouring.len() != n {
        return Err(Error::FamilyMismatch("a vertex is coloured twice".into()));
    }
    CycleSystem::new(graph, cycles, colouring, provenance)
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BaseDoc {
    name: String,
    cycle: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct Doc {
    ell: u32,
    v: u32,
    graph: String,
    route: String,
    seed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    modulus: Option<u32>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    factor: Vec<[String; 2]>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    connection: Vec<String>,
    colouring: Vec<[String; 2]>,
    cycles: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    bases: Vec<BaseDoc>,
}

fn tokens(c: &Cycle) -> Vec<String> {
    c.canonical()
        .vertices()
        .iter()
        .map(Vertex::to_string)
        .collect()
}

/// Renders the JSON format.
pub fn write_structured(system: &CycleSystem) -> String {
    let p = &system.provenance;
    let (factor, connection) = extras(&system.graph);
    let doc = Doc {
        ell: p.ell,
        v: p.v,
        graph: graph_words(&system.graph),
        route: p.route.to_string(),
        seed: p.seed,
        k: p.k,
        modulus: p.modulus,
        factor: factor
            .iter()
            .map(|e| [e.0.to_string(), e.1.to_string()])
            .collect(),
        connection: connection.iter().map(Vertex::to_string).collect(),
        colouring: system
            .colouring
            .iter()
            .map(|(v, c)| [v.to_string(), c.to_string()])
            .collect(),
        cycles: system.cycles.iter().map(tokens).collect(),
        bases: p
            .base_cycles
            .iter()
            .map(|b| BaseDoc {
                name: b.name.clone(),
                cycle: tokens(&b.cycle),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    s.push('\n');
    s
}

/// Parses the JSON format. Structural errors carry the JSON line and column;
/// bad tokens inside a valid document are reported at line 1, column 1.
pub fn read_structured(input: &str) -> Result<CycleSystem> {
    let doc: Doc = serde_json::from_str(input).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let bad = |message: String| Error::Parse {
        line: 1,
        column: 1,
        message,
    };
    let vx = |t: &String| t.parse::<Vertex>().map_err(|e| bad(e.to_string()));
    let cyc = |ts: &Vec<String>| -> Result<Cycle> {
        Cycle::new(ts.iter().map(vx).collect::<Result<_>>()?).map_err(|e| bad(e.to_string()))
    };
    let factor = doc
        .factor
        .iter()
        .map(|[a, b]| Ok(Edge::new(vx(a)?, vx(b)?)))
        .collect::<Result<Vec<_>>>()?;
    let connection = doc.connection.iter().map(vx).collect::<Result<Vec<_>>>()?;
    let graph = build(parse_graph(&doc.graph).map_err(bad)?, factor, connection).map_err(bad)?;
    let mut provenance = Provenance::new(
        doc.route.parse().map_err(|e: Error| bad(e.to_string()))?,
        doc.ell,
        doc.v,
    );
    provenance.seed = doc.seed;
    provenance.k = doc.k;
    provenance.modulus = doc.modulus;
    provenance.base_cycles = doc
        .bases
        .iter()
        .map(|b| Ok(NamedCycle::new(b.name.clone(), cyc(&b.cycle)?)))
        .collect::<Result<_>>()?;
    let colours = doc
        .colouring
        .iter()
        .map(|[v, c]| Ok((vx(v)?, c.parse::<Colour>().map_err(|e| bad(e.to_string()))?)))
        .collect::<Result<Vec<_>>>()?;
    let cycles = doc.cycles.iter().map(cyc).collect::<Result<Vec<_>>>()?;
    assemble(graph, cycles, colours, provenance).map_err(|e| bad(e.to_string()))
}

pub fn write(system: &CycleSystem, format: Format) -> String {
    match format {
        Format::Text => write_text(system),
        Format::Structured => write_structured(system),
    }
}

/// Reads either format, choosing JSON when the first non-blank character
/// is `{`.
pub fn read(input: &str) -> Result<CycleSystem> {
    if input.trim_start().starts_with('{') {
        read_structured(input)
    } else {
        read_text(input)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rotational::decompose_k2l1;

    #[test]
    fn text_round_trip() {
        let sys = decompose_k2l1(9).unwrap();
        let text = write_text(&sys);
        let back = read_text(&text).unwrap();
        assert_eq!(back, sys);
        assert_eq!(write_text(&back), text);
        assert!(text.starts_with(
            "ell=9\nv=19\ngraph=complete rotational 9 inf\nroute=rotational-2l+1\nseed=0\n"
        ));
    }

    #[test]
    fn structured_round_trip() {
        let sys = decompose_k2l1(7).unwrap();
        let json = write_structured(&sys);
        let back = read(&json).unwrap();
        assert_eq!(back, sys);
        assert_eq!(write_structured(&back), json);
    }

    #[test]
    fn parse_errors_have_positions() {
        let sys = decompose_k2l1(7).unwrap();
        let text = write_text(&sys);
        let broken = text.replacen("colour 0_0", "colour 0_7", 1);
        match read_text(&broken) {
            Err(Error::Parse { line, column, .. }) => {
                assert_eq!(column, 8);
                assert_eq!(
                    broken.lines().nth(line - 1).unwrap().split(' ').nth(1),
                    Some("0_7")
                );
            }
            other => panic!("{other:?}"),
        }
        let cut = &text[..text.len() / 2];
        assert!(matches!(read_text(cut), Err(Error::Parse { .. })));
        assert!(matches!(
            read_structured("{\"ell\": 7,"),
            Err(Error::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn minus_factor_graph_round_trip() {
        let graph = GraphSpec::CompleteMinusFactor {
            family: VertexFamily::Plain { order: 4 },
            factor: vec![
                Edge::new(Vertex::Plain(0), Vertex::Plain(1)),
                Edge::new(Vertex::Plain(2), Vertex::Plain(3)),
            ],
        };
        let colouring = Colouring::from_fn(graph.vertices(), |_| Colour::Blue);
        let cycle = Cycle::new(vec![
            Vertex::Plain(0),
            Vertex::Plain(2),
            Vertex::Plain(1),
            Vertex::Plain(3),
        ])
        .unwrap();
        let sys = CycleSystem::new(
            graph,
            vec![cycle],
            colouring,
            Provenance::new(Route::Custom, 4, 4),
        )
        .unwrap();
        assert_eq!(read_text(&write_text(&sys)).unwrap(), sys);
        assert_eq!(read_structured(&write_structured(&sys)).unwrap(), sys);
    }
}
