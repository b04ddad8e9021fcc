//! Digon-free mixed multigraphs.
//!
//! Parallel edges between two vertices are interchangeable, so a graph is
//! stored as per-pair counts: undirected edges plus arcs in at most one
//! direction. Individual edges are addressed by [`EdgeRef`], whose copy
//! index follows the canonical order described on [`PairCounts::kind_of_copy`].

mod mmg;
mod structure;

use std::collections::BTreeMap;
use std::fmt;

pub use mmg::{parse_mmg, parse_mmg_with, serialize_mmg, ParseOptions};
pub use structure::{
    connected_components, enumerate_simple_cycles, enumerate_simple_cycles_capped, find_bridges, fundamental_cycles,
    spanning_tree, CycleDescriptor, SpanningTreeInfo, DEFAULT_CYCLE_CAP, MAX_CYCLE_ENUMERATION_ORDER,
};

use crate::eisenstein::UnitExponent;
use crate::error::{Error, Result};

/// Edge counts between `lo < hi`. `fwd` counts arcs `lo → hi`, `bwd` arcs `hi → lo`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PairCounts {
    pub und: usize,
    pub fwd: usize,
    pub bwd: usize,
}

impl PairCounts {
    pub fn new(und: usize, fwd: usize, bwd: usize) -> Self {
        PairCounts { und, fwd, bwd }
    }

    pub fn total(&self) -> usize {
        self.und + self.fwd + self.bwd
    }

    pub fn is_digon_free(&self) -> bool {
        self.fwd == 0 || self.bwd == 0
    }

    pub fn reversed(&self) -> Self {
        PairCounts {
            und: self.und,
            fwd: self.bwd,
            bwd: self.fwd,
        }
    }

    /// Kind (seen from `lo` to `hi`) of parallel copy `copy`.
    ///
    /// Copies are ordered by the cyclic position of their label exponent: when
    /// arcs run `lo → hi` (label ω) the undirected copies come first, when arcs
    /// run `hi → lo` (label ω̄ = ω⁵) the arcs come first. A common rotation of
    /// all labels of the pair therefore preserves copy indices.
    pub fn kind_of_copy(&self, copy: usize) -> Option<EdgeKind> {
        if copy >= self.total() {
            return None;
        }
        Some(if self.bwd > 0 {
            if copy < self.bwd {
                EdgeKind::Backward
            } else {
                EdgeKind::Undirected
            }
        } else if copy < self.und {
            EdgeKind::Undirected
        } else {
            EdgeKind::Forward
        })
    }

    /// Label exponents of the copies, seen from `lo` to `hi`, in copy order.
    pub fn exponents(&self) -> impl Iterator<Item = UnitExponent> + '_ {
        (0..self.total()).map(move |c| self.kind_of_copy(c).unwrap().exponent())
    }

    /// Inverse of [`PairCounts::exponents`]; `None` if some label is not in
    /// `{1, ω, ω̄}` or the result would contain a digon.
    pub fn from_exponents(exps: impl IntoIterator<Item = UnitExponent>) -> Option<Self> {
        let mut counts = PairCounts::default();
        for t in exps {
            match t.get() {
                0 => counts.und += 1,
                1 => counts.fwd += 1,
                5 => counts.bwd += 1,
                _ => return None,
            }
        }
        counts.is_digon_free().then_some(counts)
    }
}

/// Kind of an edge relative to a traversal direction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum EdgeKind {
    Undirected,
    /// An arc pointing along the traversal.
    Forward,
    /// An arc pointing against the traversal.
    Backward,
}

impl EdgeKind {
    /// Exponent `t` of the matrix entry `ω^t` contributed by this edge.
    pub fn exponent(self) -> UnitExponent {
        match self {
            EdgeKind::Undirected => UnitExponent::new(0),
            EdgeKind::Forward => UnitExponent::new(1),
            EdgeKind::Backward => UnitExponent::new(5),
        }
    }

    pub fn reversed(self) -> Self {
        match self {
            EdgeKind::Undirected => EdgeKind::Undirected,
            EdgeKind::Forward => EdgeKind::Backward,
            EdgeKind::Backward => EdgeKind::Forward,
        }
    }
}

/// One parallel copy of a pair, traversed from `from` to `to`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub from: usize,
    pub to: usize,
    pub kind: EdgeKind,
    pub copy: usize,
}

impl EdgeRef {
    pub fn reversed(&self) -> Self {
        EdgeRef {
            from: self.to,
            to: self.from,
            kind: self.kind.reversed(),
            copy: self.copy,
        }
    }

    /// Orientation-free identity `(lo, hi, copy)`.
    pub fn key(&self) -> (usize, usize, usize) {
        (self.from.min(self.to), self.from.max(self.to), self.copy)
    }
}

/// A loop-free, digon-free mixed multigraph on vertices `0..n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedMultigraph {
    n: usize,
    pairs: BTreeMap<(usize, usize), PairCounts>,
}

impl MixedMultigraph {
    pub fn new(n: usize) -> Self {
        MixedMultigraph {
            n,
            pairs: BTreeMap::new(),
        }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Number of edges, counting parallel copies.
    pub fn edge_count(&self) -> usize {
        self.pairs.values().map(PairCounts::total).sum()
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), PairCounts)> + '_ {
        self.pairs.iter().map(|(&k, &c)| (k, c))
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// Counts between `u` and `v`, oriented so that `fwd` means `u → v`.
    pub fn counts(&self, u: usize, v: usize) -> PairCounts {
        let c = self.pairs.get(&(u.min(v), u.max(v))).copied().unwrap_or_default();
        if u <= v {
            c
        } else {
            c.reversed()
        }
    }

    pub fn multiplicity(&self, u: usize, v: usize) -> usize {
        self.counts(u, v).total()
    }

    /// Replaces the edges between `u` and `v`; `counts` is oriented `u → v`.
    pub fn set_pair(&mut self, u: usize, v: usize, counts: PairCounts) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Loop(u));
        }
        if !counts.is_digon_free() {
            return Err(Error::Digon { u, v });
        }
        let key = (u.min(v), u.max(v));
        let counts = if u < v { counts } else { counts.reversed() };
        if counts.total() == 0 {
            self.pairs.remove(&key);
        } else {
            self.pairs.insert(key, counts);
        }
        Ok(())
    }

    pub fn add_edges(&mut self, u: usize, v: usize, count: usize) -> Result<()> {
        let mut c = self.counts(u, v);
        c.und += count;
        self.set_pair(u, v, c)
    }

    /// Adds `count` arcs `u → v`.
    pub fn add_arcs(&mut self, u: usize, v: usize, count: usize) -> Result<()> {
        let mut c = self.counts(u, v);
        c.fwd += count;
        self.set_pair(u, v, c)
    }

    pub fn with_edge(mut self, u: usize, v: usize) -> Result<Self> {
        self.add_edges(u, v, 1)?;
        Ok(self)
    }

    pub fn with_arc(mut self, u: usize, v: usize) -> Result<Self> {
        self.add_arcs(u, v, 1)?;
        Ok(self)
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
        }
        Ok(())
    }

    /// Sorted distinct neighbours of `v`.
    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        let mut out: Vec<usize> = self
            .pairs
            .keys()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Adjacency lists of the underlying simple graph.
    pub fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in self.pairs.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        adj
    }

    pub fn edge_ref(&self, from: usize, to: usize, copy: usize) -> Option<EdgeRef> {
        if from == to {
            return None;
        }
        // copy indices are defined from the lower endpoint
        let canonical = self.counts(from.min(to), from.max(to)).kind_of_copy(copy)?;
        let kind = if from < to { canonical } else { canonical.reversed() };
        Some(EdgeRef { from, to, kind, copy })
    }

    /// True when `e` names an existing copy with the kind it claims.
    pub fn contains(&self, e: &EdgeRef) -> bool {
        self.edge_ref(e.from, e.to, e.copy) == Some(*e)
    }

    pub fn is_undirected(&self) -> bool {
        self.pairs.values().all(|c| c.fwd == 0 && c.bwd == 0)
    }

    pub fn is_connected(&self) -> bool {
        connected_components(self).len() <= 1
    }

    /// Every arc becomes an undirected edge.
    pub fn underlying(&self) -> Self {
        MixedMultigraph {
            n: self.n,
            pairs: self
                .pairs
                .iter()
                .map(|(&k, c)| (k, PairCounts::new(c.total(), 0, 0)))
                .collect(),
        }
    }

    /// Every arc is reversed.
    pub fn converse(&self) -> Self {
        MixedMultigraph {
            n: self.n,
            pairs: self.pairs.iter().map(|(&k, c)| (k, c.reversed())).collect(),
        }
    }
}

impl fmt::Display for MixedMultigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&serialize_mmg(self))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn copy_order_follows_label_rotation() {
        let fwd = PairCounts::new(2, 1, 0);
        let kinds: Vec<_> = (0..3).map(|c| fwd.kind_of_copy(c).unwrap()).collect();
        assert_eq!(kinds, [EdgeKind::Undirected, EdgeKind::Undirected, EdgeKind::Forward]);
        let bwd = PairCounts::new(1, 0, 2);
        let kinds: Vec<_> = (0..3).map(|c| bwd.kind_of_copy(c).unwrap()).collect();
        assert_eq!(kinds, [EdgeKind::Backward, EdgeKind::Backward, EdgeKind::Undirected]);
        assert_eq!(bwd.kind_of_copy(3), None);

        // rotating {1,1,ω} by ω⁵ gives {ω̄,ω̄,1}, copy by copy
        let rotated = PairCounts::from_exponents(fwd.exponents().map(|t| t * UnitExponent::new(5)));
        assert_eq!(rotated, Some(PairCounts::new(1, 0, 2)));
        assert_eq!(
            PairCounts::from_exponents([UnitExponent::new(1), UnitExponent::new(5)]),
            None
        );
        assert_eq!(PairCounts::from_exponents([UnitExponent::new(2)]), None);
    }

    #[test]
    fn counts_are_oriented() {
        let g = MixedMultigraph::new(2).with_arc(1, 0).unwrap();
        assert_eq!(g.counts(1, 0), PairCounts::new(0, 1, 0));
        assert_eq!(g.counts(0, 1), PairCounts::new(0, 0, 1));
        assert_eq!(g.edge_ref(1, 0, 0).unwrap().kind, EdgeKind::Forward);
        assert_eq!(g.edge_ref(0, 1, 0).unwrap().kind, EdgeKind::Backward);
        assert!(g.edge_ref(0, 1, 1).is_none());
    }

    #[test]
    fn rejects_invalid_edges() {
        let mut g = MixedMultigraph::new(2);
        assert_eq!(g.add_edges(0, 0, 1), Err(Error::Loop(0)));
        assert!(matches!(
            g.add_edges(0, 2, 1),
            Err(Error::VertexOutOfRange { vertex: 2, .. })
        ));
        g.add_arcs(0, 1, 1).unwrap();
        assert_eq!(g.add_arcs(1, 0, 1), Err(Error::Digon { u: 1, v: 0 }));
    }

    #[test]
    fn underlying_and_converse() {
        let tri = MixedMultigraph::new(3)
            .with_arc(0, 1)
            .and_then(|g| g.with_arc(1, 2))
            .and_then(|g| g.with_arc(2, 0))
            .unwrap();
        let k3 = MixedMultigraph::new(3)
            .with_edge(0, 1)
            .and_then(|g| g.with_edge(1, 2))
            .and_then(|g| g.with_edge(0, 2))
            .unwrap();
        assert_eq!(tri.underlying(), k3);
        assert_eq!(k3.underlying(), k3);
        assert_eq!(k3.converse(), k3);
        assert_eq!(tri.converse().converse(), tri);
        assert_eq!(tri.converse().counts(1, 0), PairCounts::new(0, 1, 0));

        let mut mixed = MixedMultigraph::new(2);
        mixed.set_pair(0, 1, PairCounts::new(1, 2, 0)).unwrap();
        assert_eq!(mixed.underlying().counts(0, 1), PairCounts::new(3, 0, 0));
        assert_eq!(mixed.converse().underlying(), mixed.underlying());
    }
}
