use std::collections::{BTreeSet, VecDeque};

use super::{EdgeRef, MixedMultigraph};
use crate::error::{Error, Result};

/// Default limit on the number of simple cycles materialized by
/// [`enumerate_simple_cycles`].
pub const DEFAULT_CYCLE_CAP: usize = 1_000_000;

/// Largest order accepted by simple-cycle enumeration.
pub const MAX_CYCLE_ENUMERATION_ORDER: usize = 16;

/// A closed walk `v_1 … v_s v_1` through distinct vertices, stored as its
/// edges in traversal order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycleDescriptor {
    edges: Vec<EdgeRef>,
}

impl CycleDescriptor {
    /// Checks chaining, distinct vertices, and that a 2-cycle uses two
    /// different parallel copies.
    pub fn new(edges: Vec<EdgeRef>) -> Result<Self> {
        let s = edges.len();
        if s < 2 {
            return Err(Error::Walk(format!("a cycle needs at least 2 edges, got {s}")));
        }
        for (i, e) in edges.iter().enumerate() {
            let next = &edges[(i + 1) % s];
            if e.to != next.from {
                return Err(Error::Walk(format!(
                    "edge {i} ends at {} but edge {} starts at {}",
                    e.to,
                    (i + 1) % s,
                    next.from
                )));
            }
        }
        let vertices: BTreeSet<usize> = edges.iter().map(|e| e.from).collect();
        if vertices.len() != s {
            return Err(Error::Walk("cycle repeats a vertex".into()));
        }
        if s == 2 && edges[0].copy == edges[1].copy {
            return Err(Error::Walk("a single edge is not a 2-cycle".into()));
        }
        Ok(CycleDescriptor { edges })
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().map(|e| e.from)
    }

    /// Bit mask of the vertex set (orders up to 64).
    pub fn vertex_mask(&self) -> u64 {
        self.vertices().fold(0, |m, v| m | (1 << v))
    }

    /// The same cycle traversed the other way.
    pub fn reversed(&self) -> Self {
        CycleDescriptor {
            edges: self.edges.iter().rev().map(EdgeRef::reversed).collect(),
        }
    }

    /// Orientation-free edge set.
    pub fn edge_set(&self) -> BTreeSet<(usize, usize, usize)> {
        self.edges.iter().map(EdgeRef::key).collect()
    }
}

/// A breadth-first spanning tree rooted at vertex 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTreeInfo {
    parent: Vec<Option<usize>>,
    depth: Vec<usize>,
    tree_edges: Vec<EdgeRef>,
    non_tree_edges: Vec<EdgeRef>,
}

impl SpanningTreeInfo {
    pub fn parent(&self, v: usize) -> Option<usize> {
        self.parent[v]
    }

    /// Tree edges, each traversed parent to child, in BFS discovery order.
    pub fn tree_edges(&self) -> &[EdgeRef] {
        &self.tree_edges
    }

    /// Edges outside the tree, traversed from the lower endpoint, ordered by
    /// `(lo, hi, copy)`.
    pub fn non_tree_edges(&self) -> &[EdgeRef] {
        &self.non_tree_edges
    }

    /// Vertices on the tree path `from → … → to`.
    pub fn path(&self, from: usize, to: usize) -> Vec<usize> {
        let (mut a, mut b) = (from, to);
        let (mut up, mut down) = (vec![a], vec![b]);
        while a != b {
            if self.depth[a] >= self.depth[b] {
                a = self.parent[a].expect("root reached before meeting");
                up.push(a);
            } else {
                b = self.parent[b].expect("root reached before meeting");
                down.push(b);
            }
        }
        down.pop();
        up.extend(down.into_iter().rev());
        up
    }
}

pub fn connected_components(graph: &MixedMultigraph) -> Vec<Vec<usize>> {
    let adj = graph.adjacency();
    let mut seen = vec![false; graph.order()];
    let mut comps = Vec::new();
    for s in 0..graph.order() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut comp = vec![s];
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// BFS tree from vertex 0, neighbours in ascending order, each tree pair
/// represented by its copy 0.
pub fn spanning_tree(graph: &MixedMultigraph) -> Result<SpanningTreeInfo> {
    let n = graph.order();
    let adj = graph.adjacency();
    let mut parent = vec![None; n];
    let mut depth = vec![0; n];
    let mut seen = vec![false; n];
    let mut tree_edges = Vec::with_capacity(n.saturating_sub(1));
    let mut queue = VecDeque::new();
    if n > 0 {
        seen[0] = true;
        queue.push_back(0);
    }
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = Some(u);
                depth[w] = depth[u] + 1;
                tree_edges.push(graph.edge_ref(u, w, 0).expect("adjacent pair has copy 0"));
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|s| !s) {
        return Err(Error::Disconnected);
    }

    let mut non_tree_edges = Vec::new();
    for ((lo, hi), c) in graph.pairs() {
        let in_tree = parent[hi] == Some(lo) || parent[lo] == Some(hi);
        let first = usize::from(in_tree);
        non_tree_edges.extend((first..c.total()).map(|copy| graph.edge_ref(lo, hi, copy).unwrap()));
    }
    Ok(SpanningTreeInfo {
        parent,
        depth,
        tree_edges,
        non_tree_edges,
    })
}

/// One cycle per non-tree edge `e = lo → hi`: `e` followed by the tree path
/// back from `hi` to `lo`. `tree` may come from any graph with the same
/// underlying multigraph as `graph`.
pub fn fundamental_cycles(graph: &MixedMultigraph, tree: &SpanningTreeInfo) -> Result<Vec<CycleDescriptor>> {
    if tree.parent.len() != graph.order() {
        return Err(Error::OrderMismatch(tree.parent.len(), graph.order()));
    }
    let resolve = |from: usize, to: usize, copy: usize| {
        graph.edge_ref(from, to, copy).ok_or_else(|| {
            Error::Walk(format!(
                "spanning tree edge {from}-{to} (copy {copy}) is not in the graph"
            ))
        })
    };
    tree.non_tree_edges
        .iter()
        .map(|e| {
            let mut edges = vec![resolve(e.from, e.to, e.copy)?];
            let path = tree.path(e.to, e.from);
            for step in path.windows(2) {
                edges.push(resolve(step[0], step[1], 0)?);
            }
            CycleDescriptor::new(edges)
        })
        .collect()
}

pub fn enumerate_simple_cycles(graph: &MixedMultigraph) -> Result<Vec<CycleDescriptor>> {
    enumerate_simple_cycles_capped(graph, DEFAULT_CYCLE_CAP)
}

/// Every simple cycle once, as an edge set.
///
/// A cycle starts at its smallest vertex and leaves toward the smaller of
/// that vertex's two cycle neighbours; each step independently picks one of
/// the parallel copies. A 2-cycle runs `lo → hi` along the lower copy and
/// back along the higher one.
pub fn enumerate_simple_cycles_capped(graph: &MixedMultigraph, cap: usize) -> Result<Vec<CycleDescriptor>> {
    let n = graph.order();
    if n > MAX_CYCLE_ENUMERATION_ORDER {
        return Err(Error::TooLarge {
            what: "graph order for cycle enumeration",
            actual: n,
            limit: MAX_CYCLE_ENUMERATION_ORDER,
        });
    }
    let adj = graph.adjacency();
    let mut out = Vec::new();
    let too_many = |count: usize| Error::TooLarge {
        what: "number of simple cycles",
        actual: count,
        limit: cap,
    };

    for s in 0..n {
        for &v in adj[s].iter().filter(|&&v| v > s) {
            let mu = graph.multiplicity(s, v);
            for i in 0..mu {
                for j in i + 1..mu {
                    if out.len() >= cap {
                        return Err(too_many(out.len() + 1));
                    }
                    let there = graph.edge_ref(s, v, i).unwrap();
                    let back = graph.edge_ref(v, s, j).unwrap();
                    out.push(CycleDescriptor {
                        edges: vec![there, back],
                    });
                }
            }
        }

        let mut path = vec![s];
        let mut on_path = vec![false; n];
        on_path[s] = true;
        let mut vertex_cycles = Vec::new();
        extend_paths(&adj, s, &mut path, &mut on_path, &mut vertex_cycles);
        for cycle in vertex_cycles {
            let steps: Vec<(usize, usize)> = (0..cycle.len())
                .map(|i| (cycle[i], cycle[(i + 1) % cycle.len()]))
                .collect();
            let mults: Vec<usize> = steps.iter().map(|&(a, b)| graph.multiplicity(a, b)).collect();
            let total = mults
                .iter()
                .try_fold(1usize, |acc, &m| acc.checked_mul(m))
                .unwrap_or(usize::MAX);
            if out.len().saturating_add(total) > cap {
                return Err(too_many(out.len().saturating_add(total)));
            }
            let mut choice = vec![0usize; steps.len()];
            loop {
                let edges = steps
                    .iter()
                    .zip(&choice)
                    .map(|(&(a, b), &c)| graph.edge_ref(a, b, c).unwrap())
                    .collect();
                out.push(CycleDescriptor { edges });
                // odometer over parallel-copy choices
                let mut k = 0;
                while k < choice.len() {
                    choice[k] += 1;
                    if choice[k] < mults[k] {
                        break;
                    }
                    choice[k] = 0;
                    k += 1;
                }
                if k == choice.len() {
                    break;
                }
            }
        }
    }
    Ok(out)
}

fn extend_paths(
    adj: &[Vec<usize>],
    start: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    found: &mut Vec<Vec<usize>>,
) {
    let last = *path.last().unwrap();
    for &w in &adj[last] {
        if w == start && path.len() >= 3 && path[1] < last {
            found.push(path.clone());
        } else if w > start && !on_path[w] {
            on_path[w] = true;
            path.push(w);
            extend_paths(adj, start, path, on_path, found);
            path.pop();
            on_path[w] = false;
        }
    }
}

/// Pairs `(lo, hi)` carrying exactly one edge whose removal separates `lo`
/// from `hi`.
pub fn find_bridges(graph: &MixedMultigraph) -> BTreeSet<(usize, usize)> {
    struct Dfs<'a> {
        adj: &'a [Vec<usize>],
        graph: &'a MixedMultigraph,
        disc: Vec<Option<usize>>,
        low: Vec<usize>,
        time: usize,
        bridges: BTreeSet<(usize, usize)>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.disc[u] = Some(self.time);
            self.low[u] = self.time;
            self.time += 1;
            for &w in &self.adj[u] {
                match self.disc[w] {
                    None => {
                        self.visit(w, Some(u));
                        self.low[u] = self.low[u].min(self.low[w]);
                        if self.low[w] > self.disc[u].unwrap() && self.graph.multiplicity(u, w) == 1 {
                            self.bridges.insert((u.min(w), u.max(w)));
                        }
                    }
                    Some(d) if Some(w) != parent => self.low[u] = self.low[u].min(d),
                    Some(_) => {}
                }
            }
        }
    }

    let adj = graph.adjacency();
    let mut dfs = Dfs {
        adj: &adj,
        graph,
        disc: vec![None; graph.order()],
        low: vec![0; graph.order()],
        time: 0,
        bridges: BTreeSet::new(),
    };
    for v in 0..graph.order() {
        if dfs.disc[v].is_none() {
            dfs.visit(v, None);
        }
    }
    dfs.bridges
}
