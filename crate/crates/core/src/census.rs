//! Switching and cospectral classes of all mixed multigraphs over a fixed
//! undirected multigraph.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::multigraph::{serialize_mmg, spanning_tree, MixedMultigraph, PairCounts};
use crate::spectral::{char_poly, CharPoly};
use crate::switching::{switching_class_key, EssentialVector};

/// Largest multiplicity of a single pair accepted by [`enumerate_mixed`].
pub const MAX_PAIR_MULTIPLICITY: usize = 8;
/// Default limit on `|ℳ(G)|`.
pub const DEFAULT_STATE_CAP: usize = 10_000_000;

/// The `2μ + 1` digon-free states of a pair of multiplicity `μ`: all
/// undirected, then `j = 1..=μ` arcs `lo → hi`, then `j` arcs `hi → lo`.
pub fn pair_states(mu: usize) -> Vec<PairCounts> {
    let mut states = vec![PairCounts::new(mu, 0, 0)];
    states.extend((1..=mu).map(|j| PairCounts::new(mu - j, j, 0)));
    states.extend((1..=mu).map(|j| PairCounts::new(mu - j, 0, j)));
    states
}

pub fn enumerate_mixed(base: &MixedMultigraph) -> Result<Vec<MixedMultigraph>> {
    enumerate_mixed_capped(base, DEFAULT_STATE_CAP)
}

/// All mixed multigraphs whose underlying graph is `base`, as the Cartesian
/// product of per-pair states (first pair varies slowest).
pub fn enumerate_mixed_capped(base: &MixedMultigraph, cap: usize) -> Result<Vec<MixedMultigraph>> {
    if !base.is_undirected() {
        return Err(Error::NotUndirected);
    }
    let pairs: Vec<_> = base.pairs().collect();
    if let Some(&(_, c)) = pairs.iter().find(|(_, c)| c.total() > MAX_PAIR_MULTIPLICITY) {
        return Err(Error::TooLarge {
            what: "pair multiplicity",
            actual: c.total(),
            limit: MAX_PAIR_MULTIPLICITY,
        });
    }
    let total = pairs
        .iter()
        .try_fold(1usize, |acc, (_, c)| acc.checked_mul(2 * c.total() + 1))
        .unwrap_or(usize::MAX);
    if total > cap {
        return Err(Error::TooLarge {
            what: "number of mixed multigraphs",
            actual: total,
            limit: cap,
        });
    }

    let states: Vec<Vec<PairCounts>> = pairs.iter().map(|(_, c)| pair_states(c.total())).collect();
    let mut out = Vec::with_capacity(total);
    let mut choice = vec![0usize; pairs.len()];
    loop {
        let mut g = MixedMultigraph::new(base.order());
        for (i, &((lo, hi), _)) in pairs.iter().enumerate() {
            g.set_pair(lo, hi, states[i][choice[i]])?;
        }
        out.push(g);
        let mut k = pairs.len();
        loop {
            if k == 0 {
                return Ok(out);
            }
            k -= 1;
            choice[k] += 1;
            if choice[k] < states[k].len() {
                break;
            }
            choice[k] = 0;
        }
    }
}

/// `m − n + 1`, counting parallel edges.
pub fn cyclomatic(graph: &MixedMultigraph) -> Result<usize> {
    if !graph.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(graph.edge_count() + 1 - graph.order())
}

/// `6^k/2 + 2^{k−1}`, an integer for every `k ≥ 1`.
pub fn class_bound(k: usize) -> Result<BigInt> {
    if k < 1 {
        return Err(Error::Domain("the class bound needs k >= 1".into()));
    }
    let k = k as u32;
    let twice = BigInt::from(6).pow(k) + BigInt::from(2).pow(k);
    Ok(twice / 2)
}

/// Per-graph invariants used to build both partitions.
#[derive(Clone, Debug)]
struct Profile {
    text: String,
    key: EssentialVector,
    poly: CharPoly<BigInt>,
}

fn profiles(base: &MixedMultigraph, cap: usize) -> Result<Vec<Profile>> {
    if !base.is_undirected() {
        return Err(Error::NotUndirected);
    }
    let tree = spanning_tree(base)?;
    let members = enumerate_mixed_capped(base, cap)?;
    members
        .par_iter()
        .map(|m| {
            Ok(Profile {
                text: serialize_mmg(m),
                key: switching_class_key(m, &tree)?,
                poly: char_poly(m),
            })
        })
        .collect()
}

/// Members grouped by switching class, keyed by the class's canonical
/// essential vector; members in enumeration order.
pub fn switching_classes(base: &MixedMultigraph) -> Result<BTreeMap<EssentialVector, Vec<MixedMultigraph>>> {
    let tree = spanning_tree(base)?;
    let mut classes: BTreeMap<EssentialVector, Vec<MixedMultigraph>> = BTreeMap::new();
    for m in enumerate_mixed(base)? {
        classes.entry(switching_class_key(&m, &tree)?).or_default().push(m);
    }
    Ok(classes)
}

/// Members grouped by exact characteristic polynomial.
pub fn cospectral_classes(base: &MixedMultigraph) -> Result<BTreeMap<CharPoly<BigInt>, Vec<MixedMultigraph>>> {
    if !base.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut classes: BTreeMap<CharPoly<BigInt>, Vec<MixedMultigraph>> = BTreeMap::new();
    for m in enumerate_mixed(base)? {
        classes.entry(char_poly(&m)).or_default().push(m);
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SwitchingClassEntry {
    pub representative: String,
    pub essential_vector: String,
    pub size: usize,
    pub char_poly: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CospectralClassEntry {
    pub char_poly: String,
    pub members: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusChecks {
    /// Every switching class lies inside one cospectral class.
    pub switching_refines_cospectral: bool,
    /// `n_c ≤ n_s ≤ bound`; absent when `k = 0`.
    pub bound_holds: Option<bool>,
}

impl CensusChecks {
    pub fn passed(&self) -> bool {
        self.switching_refines_cospectral && self.bound_holds != Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusReport {
    pub underlying: String,
    pub n: usize,
    pub m: usize,
    pub k: usize,
    pub total: usize,
    pub n_s: usize,
    pub n_c: usize,
    /// `6^k/2 + 2^{k−1}`, absent when `k = 0`.
    pub bound: Option<u64>,
    pub checks: CensusChecks,
    pub switching_classes: Vec<SwitchingClassEntry>,
    pub cospectral_classes: Vec<CospectralClassEntry>,
}

impl CensusReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

pub fn census_report(base: &MixedMultigraph) -> Result<CensusReport> {
    census_report_capped(base, DEFAULT_STATE_CAP)
}

pub fn census_report_capped(base: &MixedMultigraph, cap: usize) -> Result<CensusReport> {
    let k = cyclomatic(base)?;
    let profiles = profiles(base, cap)?;

    struct Class<'a> {
        representative: &'a str,
        size: usize,
        polys: BTreeMap<&'a CharPoly<BigInt>, usize>,
    }
    let mut switching: BTreeMap<&EssentialVector, Class> = BTreeMap::new();
    let mut cospectral: BTreeMap<&CharPoly<BigInt>, usize> = BTreeMap::new();
    for p in &profiles {
        let class = switching.entry(&p.key).or_insert(Class {
            representative: &p.text,
            size: 0,
            polys: BTreeMap::new(),
        });
        class.size += 1;
        if p.text.as_str() < class.representative {
            class.representative = &p.text;
        }
        *class.polys.entry(&p.poly).or_default() += 1;
        *cospectral.entry(&p.poly).or_default() += 1;
    }

    let refines = switching.values().all(|c| c.polys.len() == 1);
    let (n_s, n_c) = (switching.len(), cospectral.len());
    let bound = if k >= 1 { class_bound(k)?.to_u64() } else { None };
    let bound_holds = (k >= 1).then(|| n_c <= n_s && bound.is_none_or(|b| n_s as u64 <= b));

    Ok(CensusReport {
        underlying: serialize_mmg(base),
        n: base.order(),
        m: base.edge_count(),
        k,
        total: profiles.len(),
        n_s,
        n_c,
        bound,
        checks: CensusChecks {
            switching_refines_cospectral: refines,
            bound_holds,
        },
        switching_classes: switching
            .iter()
            .map(|(key, c)| SwitchingClassEntry {
                representative: c.representative.to_string(),
                essential_vector: key.to_string(),
                size: c.size,
                char_poly: c.polys.keys().map(|p| p.to_string()).collect::<Vec<_>>().join(" | "),
            })
            .collect(),
        cospectral_classes: cospectral
            .iter()
            .map(|(p, &members)| CospectralClassEntry {
                char_poly: p.to_string(),
                members,
            })
            .collect(),
    })
}
