//! Cycle weights, three-way switching and switching equivalence.
//!
//! A gauge assigns each vertex a unit `ω^{t_v}`; switching by it multiplies
//! the label of every edge `u → v` by `ω^{t_v − t_u}`, i.e. conjugates the
//! adjacency matrix by `D = diag(ω^{t_v})`. Two graphs are switching
//! equivalent when one is obtained from the other, or from its converse, by
//! a single switching. Weights of fundamental cycles decide this.

use std::fmt;
use std::str::FromStr;

use crate::eisenstein::{EisensteinInt, UnitExponent};
use crate::error::{Error, Result};
use crate::multigraph::{
    fundamental_cycles, spanning_tree, CycleDescriptor, EdgeRef, MixedMultigraph, PairCounts, SpanningTreeInfo,
};
use crate::Scalar;

/// Weight `ω^t` of a directed cycle, `t ≡ f − b (mod 6)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CycleWeight(UnitExponent);

impl CycleWeight {
    pub fn new(exponent: UnitExponent) -> Self {
        CycleWeight(exponent)
    }

    pub fn exponent(self) -> UnitExponent {
        self.0
    }

    /// `ν = wt + conj(wt) = 2cos(tπ/3)`, independent of direction.
    pub fn value(self) -> i64 {
        self.0.real_part_doubled()
    }

    pub fn conj(self) -> Self {
        CycleWeight(self.0.conj())
    }

    pub fn to_eisenstein<T: Scalar>(self) -> EisensteinInt<T> {
        self.0.to_eisenstein()
    }
}

impl fmt::Display for CycleWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn check_edge(graph: &MixedMultigraph, e: &EdgeRef) -> Result<()> {
    if graph.contains(e) {
        Ok(())
    } else {
        Err(Error::Walk(format!(
            "{:?} copy {} from {} to {} is not an edge of the graph",
            e.kind, e.copy, e.from, e.to
        )))
    }
}

/// Product of the matrix entries met along a chained walk.
pub fn walk_weight<T: Scalar>(graph: &MixedMultigraph, walk: &[EdgeRef]) -> Result<EisensteinInt<T>> {
    for (i, pair) in walk.windows(2).enumerate() {
        if pair[0].to != pair[1].from {
            return Err(Error::Walk(format!("broken chain after step {i}")));
        }
    }
    walk.iter()
        .map(|e| check_edge(graph, e).map(|_| e.kind.exponent().to_eisenstein()))
        .product()
}

pub fn cycle_weight(graph: &MixedMultigraph, cycle: &CycleDescriptor) -> Result<CycleWeight> {
    let mut t = UnitExponent::ONE;
    for e in cycle.edges() {
        check_edge(graph, e)?;
        t = t * e.kind.exponent();
    }
    Ok(CycleWeight(t))
}

/// Weights of the fundamental cycles of a spanning tree, in non-tree-edge order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EssentialVector(pub Vec<CycleWeight>);

impl EssentialVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn conj(&self) -> Self {
        EssentialVector(self.0.iter().map(|w| w.conj()).collect())
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|w| w.exponent() == UnitExponent::ONE)
    }
}

impl fmt::Display for EssentialVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, w) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{w}")?;
        }
        f.write_str(")")
    }
}

pub fn essential_vector(graph: &MixedMultigraph, tree: &SpanningTreeInfo) -> Result<EssentialVector> {
    fundamental_cycles(graph, tree)?
        .iter()
        .map(|c| cycle_weight(graph, c))
        .collect::<Result<_>>()
        .map(EssentialVector)
}

/// Class key under switching and converse: the smaller of the essential
/// vectors of `graph` and of its converse.
pub fn switching_class_key(graph: &MixedMultigraph, tree: &SpanningTreeInfo) -> Result<EssentialVector> {
    let own = essential_vector(graph, tree)?;
    let conv = essential_vector(&graph.converse(), tree)?;
    Ok(own.min(conv))
}

/// Per-vertex exponents `t_v`; the diagonal matrix `D_vv = ω^{t_v}`, or
/// equivalently the partition `V_{ω^j} = {v : t_v = j}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GaugeAssignment(Vec<UnitExponent>);

impl GaugeAssignment {
    pub fn identity(n: usize) -> Self {
        GaugeAssignment(vec![UnitExponent::ONE; n])
    }

    pub fn new(exponents: Vec<UnitExponent>) -> Self {
        GaugeAssignment(exponents)
    }

    pub fn from_exponents(exponents: impl IntoIterator<Item = i64>) -> Self {
        GaugeAssignment(exponents.into_iter().map(UnitExponent::new).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, v: usize) -> UnitExponent {
        self.0[v]
    }

    pub fn exponents(&self) -> &[UnitExponent] {
        &self.0
    }

    /// The class `V_{ω^j}` of the partition.
    pub fn part(&self, j: u8) -> Vec<usize> {
        (0..self.0.len()).filter(|&v| self.0[v].get() == j % 6).collect()
    }

    /// Parses `vertex:exponent` items such as `0:0,1:1,2:5`; unlisted
    /// vertices get exponent 0.
    pub fn parse(spec: &str, n: usize) -> Result<Self> {
        let mut out: Vec<Option<UnitExponent>> = vec![None; n];
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (v, t) = item
                .split_once(':')
                .ok_or_else(|| Error::Gauge(format!("expected vertex:exponent, found {item:?}")))?;
            let v: usize = v
                .trim()
                .parse()
                .map_err(|_| Error::Gauge(format!("invalid vertex {v:?}")))?;
            let t: i64 = t
                .trim()
                .parse()
                .map_err(|_| Error::Gauge(format!("invalid exponent {t:?}")))?;
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if out[v].replace(UnitExponent::new(t)).is_some() {
                return Err(Error::Gauge(format!("vertex {v} assigned twice")));
            }
        }
        Ok(GaugeAssignment(
            out.into_iter().map(Option::unwrap_or_default).collect(),
        ))
    }
}

impl fmt::Display for GaugeAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (v, t) in self.0.iter().enumerate() {
            if v > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}:{}", t.get())?;
        }
        Ok(())
    }
}

impl FromStr for GaugeAssignment {
    type Err = Error;

    /// Parses a complete assignment; the order is one more than the largest vertex named.
    fn from_str(s: &str) -> Result<Self> {
        let n = s
            .split(',')
            .filter_map(|item| item.split_once(':'))
            .filter_map(|(v, _)| v.trim().parse::<usize>().ok())
            .max()
            .map_or(0, |v| v + 1);
        GaugeAssignment::parse(s, n)
    }
}

/// Rotates every label of a pair (seen `lo → hi`) by `ω^d`.
fn rotate_pair(counts: PairCounts, d: UnitExponent) -> Option<PairCounts> {
    PairCounts::from_exponents(counts.exponents().map(|t| t * d))
}

fn check_gauge_order(graph: &MixedMultigraph, gauge: &GaugeAssignment) -> Result<()> {
    if gauge.len() != graph.order() {
        return Err(Error::Gauge(format!(
            "gauge covers {} vertices but the graph has {}",
            gauge.len(),
            graph.order()
        )));
    }
    Ok(())
}

fn violation(lo: usize, hi: usize, d: UnitExponent) -> Error {
    let (condition, message) = match d.get() {
        1 => (
            1,
            format!("no arc may point from V_j to V_wj (arc {hi}->{lo} is fine, arc {lo}->{hi} is not)"),
        ),
        5 => (
            1,
            format!("no arc may point from V_j to V_wj (arc {lo}->{hi} is fine, arc {hi}->{lo} is not)"),
        ),
        3 => (2, "no edge of any kind may join V_j and V_w^3j".to_string()),
        2 => (
            3,
            format!("every edge between V_j and V_w^4j must be an arc from V_j to V_w^4j, here {hi}->{lo}"),
        ),
        _ => (
            3,
            format!("every edge between V_j and V_w^4j must be an arc from V_j to V_w^4j, here {lo}->{hi}"),
        ),
    };
    Error::InadmissibleGauge {
        u: lo,
        v: hi,
        condition,
        message,
    }
}

/// Switching by `gauge`: `N(result) = D⁻¹ N(graph) D`.
pub fn apply_gauge(graph: &MixedMultigraph, gauge: &GaugeAssignment) -> Result<MixedMultigraph> {
    check_gauge_order(graph, gauge)?;
    let mut out = MixedMultigraph::new(graph.order());
    for ((lo, hi), c) in graph.pairs() {
        let d = UnitExponent::new(gauge.get(hi).get() as i64 - gauge.get(lo).get() as i64);
        let rotated = rotate_pair(c, d).ok_or_else(|| violation(lo, hi, d))?;
        out.set_pair(lo, hi, rotated)?;
    }
    Ok(out)
}

/// Whether every edge label stays in `{1, ω, ω̄}` under the gauge.
pub fn is_admissible(graph: &MixedMultigraph, gauge: &GaugeAssignment) -> bool {
    gauge.len() == graph.order() && apply_gauge(graph, gauge).is_ok()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EquivalenceWitness {
    NotEquivalent {
        reason: String,
    },
    /// `apply_gauge(M1 or its converse, gauge) = M2`.
    Equivalent {
        gauge: GaugeAssignment,
        converse_applied: bool,
    },
}

impl EquivalenceWitness {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, EquivalenceWitness::Equivalent { .. })
    }
}

impl fmt::Display for EquivalenceWitness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EquivalenceWitness::NotEquivalent { .. } => f.write_str("not-equivalent"),
            EquivalenceWitness::Equivalent {
                gauge,
                converse_applied,
            } => write!(
                f,
                "equivalent gauge={gauge} converse={}",
                if *converse_applied { "yes" } else { "no" }
            ),
        }
    }
}

/// Decides whether `b` is obtained from `a` (or from its converse) by a
/// three-way switching, and builds the gauge when it is.
///
/// Both graphs share one spanning tree of their common underlying graph.
/// Equal essential vectors mean a pure switching exists; otherwise the
/// converse of `a` is compared. The gauge is propagated from the root along
/// tree edges, choosing at each edge the unique rotation carrying the pair's
/// labels in the source onto those in `b`.
pub fn decide_switching_equivalence(a: &MixedMultigraph, b: &MixedMultigraph) -> Result<EquivalenceWitness> {
    let base = a.underlying();
    if base != b.underlying() {
        return Ok(EquivalenceWitness::NotEquivalent {
            reason: "different underlying graph".into(),
        });
    }
    let tree = spanning_tree(&base)?;
    let target = essential_vector(b, &tree)?;

    let converse_applied = if essential_vector(a, &tree)? == target {
        false
    } else if essential_vector(&a.converse(), &tree)? == target {
        true
    } else {
        return Ok(EquivalenceWitness::NotEquivalent {
            reason: "fundamental cycle weights are neither equal nor conjugate".into(),
        });
    };
    let source = if converse_applied { a.converse() } else { a.clone() };

    let mut t = vec![UnitExponent::ONE; a.order()];
    for e in tree.tree_edges() {
        let from = source.counts(e.from, e.to);
        let to = b.counts(e.from, e.to);
        let d = (0..6)
            .map(UnitExponent::new)
            .find(|&d| rotate_pair(from, d) == Some(to))
            .ok_or_else(|| Error::Internal(format!("no rotation matches tree edge {}-{}", e.from, e.to)))?;
        t[e.to] = t[e.from] * d;
    }
    let gauge = GaugeAssignment(t);
    if apply_gauge(&source, &gauge).as_ref() != Ok(b) {
        return Err(Error::Internal("propagated gauge does not reproduce the target".into()));
    }
    Ok(EquivalenceWitness::Equivalent {
        gauge,
        converse_applied,
    })
}

pub fn verify_witness(a: &MixedMultigraph, b: &MixedMultigraph, witness: &EquivalenceWitness) -> bool {
    match witness {
        EquivalenceWitness::NotEquivalent { .. } => false,
        EquivalenceWitness::Equivalent {
            gauge,
            converse_applied,
        } => {
            let source = if *converse_applied { a.converse() } else { a.clone() };
            apply_gauge(&source, gauge).as_ref() == Ok(b)
        }
    }
}

/// All fundamental cycles have weight 1, i.e. the graph switches to its
/// underlying graph.
pub fn is_positive(graph: &MixedMultigraph) -> Result<bool> {
    let tree = spanning_tree(&graph.underlying())?;
    Ok(essential_vector(graph, &tree)?.is_positive())
}
