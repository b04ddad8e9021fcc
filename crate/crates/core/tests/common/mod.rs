#![allow(dead_code)]

use mixed_hermitian::census::enumerate_mixed;
use mixed_hermitian::multigraph::parse_mmg;
use mixed_hermitian::switching::{apply_gauge, GaugeAssignment};
use mixed_hermitian::{MixedMultigraph, PairCounts};
use rand::Rng;

pub fn graph(text: &str) -> MixedMultigraph {
    parse_mmg(&format!("mmg 1\n{text}")).unwrap()
}

pub fn undirected(n: usize, edges: &[(usize, usize)]) -> MixedMultigraph {
    let mut g = MixedMultigraph::new(n);
    for &(u, v) in edges {
        g.add_edges(u, v, 1).unwrap();
    }
    g
}

pub fn k3() -> MixedMultigraph {
    undirected(3, &[(0, 1), (1, 2), (0, 2)])
}

pub fn k4() -> MixedMultigraph {
    undirected(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)])
}

pub fn p4() -> MixedMultigraph {
    undirected(4, &[(0, 1), (1, 2), (2, 3)])
}

pub fn c4() -> MixedMultigraph {
    undirected(4, &[(0, 1), (1, 2), (2, 3), (0, 3)])
}

pub fn pair(mu: usize) -> MixedMultigraph {
    let mut g = MixedMultigraph::new(2);
    g.add_edges(0, 1, mu).unwrap();
    g
}

/// K3 with one side doubled.
pub fn fat_triangle() -> MixedMultigraph {
    let mut g = k3();
    g.add_edges(0, 1, 1).unwrap();
    g
}

pub fn corpus(base: &MixedMultigraph) -> Vec<MixedMultigraph> {
    enumerate_mixed(base).unwrap()
}

/// Named exhaustive corpora over small underlying multigraphs.
pub fn all_corpora() -> Vec<(&'static str, Vec<MixedMultigraph>)> {
    vec![
        ("K3", corpus(&k3())),
        ("pair mu=2", corpus(&pair(2))),
        ("pair mu=3", corpus(&pair(3))),
        ("P4", corpus(&p4())),
        ("C4", corpus(&c4())),
        ("K3 with a doubled side", corpus(&fat_triangle())),
        ("K4", corpus(&k4())),
    ]
}

/// Every gauge on `n` vertices, `6^n` of them.
pub fn all_gauges(n: usize) -> impl Iterator<Item = GaugeAssignment> {
    (0..6usize.pow(n as u32)).map(move |mut code| {
        GaugeAssignment::from_exponents((0..n).map(|_| {
            let t = (code % 6) as i64;
            code /= 6;
            t
        }))
    })
}

/// Exhaustive search for a gauge taking `a` (or its converse) to `b`.
pub fn brute_force_equivalent(a: &MixedMultigraph, b: &MixedMultigraph) -> bool {
    if a.order() != b.order() {
        return false;
    }
    [a.clone(), a.converse()]
        .iter()
        .any(|src| all_gauges(a.order()).any(|g| apply_gauge(src, &g).as_ref() == Ok(b)))
}

/// Class count of the partition induced by brute-force equivalence.
pub fn brute_force_class_count(members: &[MixedMultigraph]) -> usize {
    let mut reps: Vec<&MixedMultigraph> = Vec::new();
    for m in members {
        if !reps.iter().any(|r| brute_force_equivalent(r, m)) {
            reps.push(m);
        }
    }
    reps.len()
}

/// Random mixed multigraph on `n` vertices with pair multiplicities up to `max_mu`.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, density: f64, max_mu: usize) -> MixedMultigraph {
    let mut g = MixedMultigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                let mu = rng.gen_range(1..=max_mu);
                let arcs = rng.gen_range(0..=mu);
                let c = if rng.gen_bool(0.5) {
                    PairCounts::new(mu - arcs, arcs, 0)
                } else {
                    PairCounts::new(mu - arcs, 0, arcs)
                };
                g.set_pair(u, v, c).unwrap();
            }
        }
    }
    g
}

/// A random gauge together with a random graph it is admissible for.
///
/// For each pair the exponent gap `d = t_hi − t_lo` restricts the source
/// labels to those `e` with `e + d ∈ {0, 1, 5}`; gaps of 3 allow no edge.
pub fn random_admissible<R: Rng>(
    rng: &mut R,
    n: usize,
    density: f64,
    max_mu: usize,
) -> (MixedMultigraph, GaugeAssignment) {
    let t: Vec<i64> = (0..n).map(|_| rng.gen_range(0..6)).collect();
    let mut g = MixedMultigraph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if !rng.gen_bool(density) {
                continue;
            }
            let d = (t[v] - t[u]).rem_euclid(6);
            // allowed (und, fwd, bwd) label kinds for this gap
            let allowed: &[usize] = match d {
                0 => &[0, 1, 2],
                1 => &[0, 2],
                5 => &[0, 1],
                2 => &[2],
                4 => &[1],
                _ => &[],
            };
            if allowed.is_empty() {
                continue;
            }
            let mu = rng.gen_range(1..=max_mu);
            let arc_options: Vec<usize> = [1, 2].into_iter().filter(|k| allowed.contains(k)).collect();
            let arc_kind = if arc_options.is_empty() {
                0
            } else {
                arc_options[rng.gen_range(0..arc_options.len())]
            };
            let mut c = PairCounts::default();
            for _ in 0..mu {
                let use_arc = arc_kind != 0 && (!allowed.contains(&0) || rng.gen_bool(0.5));
                match (use_arc, arc_kind) {
                    (true, 1) => c.fwd += 1,
                    (true, _) => c.bwd += 1,
                    (false, _) => c.und += 1,
                }
            }
            g.set_pair(u, v, c).unwrap();
        }
    }
    (g, GaugeAssignment::from_exponents(t))
}

/// All labeled trees on `n` vertices via Prüfer sequences.
pub fn labeled_trees(n: usize) -> Vec<MixedMultigraph> {
    if n == 1 {
        return vec![MixedMultigraph::new(1)];
    }
    if n == 2 {
        return vec![undirected(2, &[(0, 1)])];
    }
    let len = n - 2;
    (0..n.pow(len as u32))
        .map(|mut code| {
            let seq: Vec<usize> = (0..len)
                .map(|_| {
                    let x = code % n;
                    code /= n;
                    x
                })
                .collect();
            let mut degree = vec![1usize; n];
            for &x in &seq {
                degree[x] += 1;
            }
            let mut edges = Vec::with_capacity(n - 1);
            for &x in &seq {
                let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
                edges.push((leaf, x));
                degree[leaf] -= 1;
                degree[x] -= 1;
            }
            let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
            edges.push((rest[0], rest[1]));
            undirected(n, &edges)
        })
        .collect()
}
