//! The line-oriented MMG text format.
//!
//! ```text
//! mmg 1
//! vertices 3
//! e 0 1      # one undirected edge
//! a 1 2      # one arc 1 -> 2
//! ```

use std::collections::BTreeMap;
use std::fmt::Write as _;

use super::{MixedMultigraph, PairCounts};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ParseOptions {
    /// Replace each pair of opposite arcs by one undirected edge instead of failing.
    pub merge_digons: bool,
}

pub fn parse_mmg(text: &str) -> Result<MixedMultigraph> {
    parse_mmg_with(text, ParseOptions::default())
}

pub fn parse_mmg_with(text: &str, opts: ParseOptions) -> Result<MixedMultigraph> {
    let syntax = |line: usize, message: String| Error::Parse { line, message };

    let mut statements = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("").trim();
        (!body.is_empty()).then(|| (i + 1, body.split_whitespace().collect::<Vec<_>>()))
    });

    match statements.next() {
        Some((_, ref toks)) if toks[..] == ["mmg", "1"] => {}
        Some((line, toks)) => {
            return Err(syntax(
                line,
                format!("expected header \"mmg 1\", found {:?}", toks.join(" ")),
            ))
        }
        None => return Err(syntax(1, "empty input".into())),
    }
    let n = match statements.next() {
        Some((line, toks)) => match toks[..] {
            ["vertices", count] => count
                .parse::<usize>()
                .ok()
                .filter(|&n| n > 0)
                .ok_or_else(|| syntax(line, format!("invalid vertex count {count:?}")))?,
            _ => return Err(syntax(line, "expected \"vertices <n>\"".into())),
        },
        None => return Err(syntax(2, "missing \"vertices <n>\" line".into())),
    };

    // raw counts before digon handling: (und, lo->hi, hi->lo)
    let mut raw: BTreeMap<(usize, usize), PairCounts> = BTreeMap::new();
    for (line, toks) in statements {
        let (directed, u, v) = match toks[..] {
            [kind @ ("e" | "a"), u, v] => {
                let vertex = |s: &str| {
                    s.parse::<usize>()
                        .map_err(|_| syntax(line, format!("invalid vertex id {s:?}")))
                };
                (kind == "a", vertex(u)?, vertex(v)?)
            }
            _ => return Err(syntax(line, format!("unrecognized statement {:?}", toks.join(" ")))),
        };
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let entry = raw.entry((u.min(v), u.max(v))).or_default();
        match (directed, u < v) {
            (false, _) => entry.und += 1,
            (true, true) => entry.fwd += 1,
            (true, false) => entry.bwd += 1,
        }
    }

    let mut graph = MixedMultigraph::new(n);
    for ((lo, hi), mut c) in raw {
        if !c.is_digon_free() {
            if !opts.merge_digons {
                return Err(Error::Digon { u: lo, v: hi });
            }
            let merged = c.fwd.min(c.bwd);
            c.und += merged;
            c.fwd -= merged;
            c.bwd -= merged;
        }
        graph.set_pair(lo, hi, c)?;
    }
    Ok(graph)
}

/// Canonical text: header, then all undirected edges, then all arcs, pairs in
/// ascending order.
pub fn serialize_mmg(graph: &MixedMultigraph) -> String {
    let mut out = format!("mmg 1\nvertices {}\n", graph.order());
    for ((lo, hi), c) in graph.pairs() {
        for _ in 0..c.und {
            let _ = writeln!(out, "e {lo} {hi}");
        }
    }
    for ((lo, hi), c) in graph.pairs() {
        for _ in 0..c.fwd {
            let _ = writeln!(out, "a {lo} {hi}");
        }
        for _ in 0..c.bwd {
            let _ = writeln!(out, "a {hi} {lo}");
        }
    }
    out
}
