//! Generators for the constant-membership graph families.
//!
//! Vertices are named `v1 … vN`. Unless a `sigma_list` is given every vertex
//! gets `σ = c`, and every edge of the underlying crisp graph gets `μ = c`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::value::MembershipValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    CompleteKn,
    CycleStrong,
    PetersenStrong,
    CompleteBipartiteStrong,
    PathStrong,
    Edgeless,
}

impl Family {
    pub const ALL: [Family; 6] = [
        Family::CompleteKn,
        Family::CycleStrong,
        Family::PetersenStrong,
        Family::CompleteBipartiteStrong,
        Family::PathStrong,
        Family::Edgeless,
    ];

    /// Short CLI name.
    pub fn short_name(self) -> &'static str {
        match self {
            Family::CompleteKn => "kn",
            Family::CycleStrong => "cn",
            Family::PetersenStrong => "petersen",
            Family::CompleteBipartiteStrong => "knn",
            Family::PathStrong => "path",
            Family::Edgeless => "edgeless",
        }
    }

    fn long_name(self) -> &'static str {
        match self {
            Family::CompleteKn => "complete_kn",
            Family::CycleStrong => "cycle_strong",
            Family::PetersenStrong => "petersen_strong",
            Family::CompleteBipartiteStrong => "complete_bipartite_strong",
            Family::PathStrong => "path_strong",
            Family::Edgeless => "edgeless",
        }
    }

    fn vertex_count(self, n: usize) -> usize {
        match self {
            Family::PetersenStrong => 10,
            Family::CompleteBipartiteStrong => 2 * n,
            _ => n,
        }
    }

    /// Crisp edge list over 0-based vertex indices.
    fn crisp_edges(self, n: usize) -> Vec<(usize, usize)> {
        match self {
            Family::CompleteKn => (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .collect(),
            Family::CycleStrong => (0..n).map(|i| (i, (i + 1) % n)).collect(),
            Family::PathStrong => (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect(),
            Family::PetersenStrong => {
                let mut edges = Vec::with_capacity(15);
                for i in 0..5 {
                    edges.push((i, (i + 1) % 5));
                    edges.push((i, i + 5));
                    edges.push((5 + i, 5 + (i + 2) % 5));
                }
                edges
            }
            Family::CompleteBipartiteStrong => (0..n)
                .flat_map(|i| (0..n).map(move |j| (i, n + j)))
                .collect(),
            Family::Edgeless => Vec::new(),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.long_name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.short_name() == s || f.long_name() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown family `{s}`")))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenParams {
    pub n: usize,
    pub c: MembershipValue,
    pub sigma_list: Option<Vec<MembershipValue>>,
}

impl GenParams {
    pub fn new(n: usize, c: MembershipValue) -> Self {
        GenParams {
            n,
            c,
            sigma_list: None,
        }
    }
}

pub fn generate(family: Family, params: &GenParams) -> Result<FuzzyGraph> {
    let GenParams { n, c, sigma_list } = params;
    let n = *n;
    if c.is_zero() {
        return Err(Error::BadParameter("c must be positive".into()));
    }
    if family != Family::PetersenStrong && n == 0 {
        return Err(Error::BadParameter("n must be at least 1".into()));
    }
    if family == Family::CycleStrong && n < 3 {
        return Err(Error::BadParameter("cycles need n >= 3".into()));
    }
    let count = family.vertex_count(n);
    let sigma = match sigma_list {
        Some(list) => {
            if list.len() != count {
                return Err(Error::BadParameter(format!(
                    "{family} needs {count} sigma values, got {}",
                    list.len()
                )));
            }
            let edges = family.crisp_edges(n);
            for (i, s) in list.iter().enumerate() {
                let touched = edges.iter().any(|&(a, b)| a == i || b == i);
                if s.is_zero() || (touched && s < c) {
                    return Err(Error::BadParameter(format!(
                        "sigma of v{} is {s}, below the edge membership {c}",
                        i + 1
                    )));
                }
            }
            list.clone()
        }
        None => vec![c.clone(); count],
    };
    let ids: Vec<VertexId> = (1..=count)
        .map(|i| VertexId::plain(format!("v{i}")))
        .collect::<Result<_>>()?;
    let vertices = ids.iter().cloned().zip(sigma);
    let edges = family
        .crisp_edges(n)
        .into_iter()
        .map(|(a, b)| (ids[a].clone(), ids[b].clone(), c.clone()));
    FuzzyGraph::build(vertices, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SubVertexSet;
    use crate::value::ratio;

    fn mv(n: i64, d: i64) -> MembershipValue {
        MembershipValue::new(n, d).unwrap()
    }

    #[test]
    fn complete_kn_counts() {
        let g = generate(Family::CompleteKn, &GenParams::new(5, mv(1, 2))).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(g.edges().all(|(_, _, m)| *m == mv(1, 2)));
        assert_eq!(g.sigma_sum(), ratio(5, 2));
    }

    #[test]
    fn petersen_is_cubic_with_fifteen_edges() {
        let g = generate(Family::PetersenStrong, &GenParams::new(1, mv(1, 1))).unwrap();
        assert_eq!(g.vertex_count(), 10);
        assert_eq!(g.edge_count(), 15);
        let c = mv(1, 2);
        let g = generate(Family::PetersenStrong, &GenParams::new(99, c)).unwrap();
        for d in g.vertex_degrees().values() {
            assert_eq!(d.degree, ratio(3, 2));
            assert_eq!(d.total_degree, ratio(2, 1));
        }
    }

    #[test]
    fn petersen_outer_ring_is_a_five_cycle() {
        let g = generate(Family::PetersenStrong, &GenParams::new(10, mv(1, 3))).unwrap();
        let ring = SubVertexSet::from_strs(&g, &["v1", "v2", "v3", "v4", "v5"]).unwrap();
        let h = g.induced_subgraph(&ring).unwrap();
        let c5 = generate(Family::CycleStrong, &GenParams::new(5, mv(1, 3))).unwrap();
        assert_eq!(h, c5);
        let inner = SubVertexSet::from_strs(&g, &["v6", "v7", "v8", "v9", "v10"]).unwrap();
        let h = g.induced_subgraph(&inner).unwrap();
        assert_eq!(h.edge_count(), 5);
        assert_eq!(h.classify().regular_degree, Some(ratio(2, 3)));
    }

    #[test]
    fn edgeless_and_bipartite() {
        let g = generate(Family::Edgeless, &GenParams::new(3, mv(1, 1))).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (3, 0));
        let g = generate(Family::CompleteBipartiteStrong, &GenParams::new(3, mv(1, 2))).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (6, 9));
        let g = generate(Family::PathStrong, &GenParams::new(4, mv(1, 2))).unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn classify_complete_kn() {
        let g = generate(Family::CompleteKn, &GenParams::new(4, mv(1, 2))).unwrap();
        let r = g.classify();
        assert!(r.is_complete && r.is_strong);
        assert_eq!(r.regular_degree, Some(ratio(3, 2)));
        assert_eq!(r.totally_regular_degree, Some(ratio(2, 1)));
        assert_eq!(r.constant_sigma, Some(ratio(1, 2)));
        assert_eq!(r.constant_mu, Some(ratio(1, 2)));
    }

    #[test]
    fn sigma_list_and_bad_parameters() {
        let params = GenParams {
            n: 3,
            c: mv(1, 4),
            sigma_list: Some(vec![mv(1, 4), mv(1, 2), mv(1, 1)]),
        };
        let g = generate(Family::CompleteKn, &params).unwrap();
        assert_eq!(g.classify().constant_mu, Some(ratio(1, 4)));
        assert!(!g.classify().is_complete);

        let short = GenParams {
            sigma_list: Some(vec![mv(1, 4)]),
            ..params.clone()
        };
        assert!(matches!(generate(Family::CompleteKn, &short), Err(Error::BadParameter(_))));
        let low = GenParams {
            sigma_list: Some(vec![mv(1, 8), mv(1, 2), mv(1, 1)]),
            ..params
        };
        assert!(matches!(generate(Family::CompleteKn, &low), Err(Error::BadParameter(_))));
        assert!(generate(Family::CycleStrong, &GenParams::new(2, mv(1, 2))).is_err());
        assert!(generate(Family::CompleteKn, &GenParams::new(0, mv(1, 2))).is_err());
        assert!(generate(Family::CompleteKn, &GenParams::new(3, mv(0, 1))).is_err());
    }

    #[test]
    fn family_names_round_trip() {
        for f in Family::ALL {
            assert_eq!(f.short_name().parse::<Family>().unwrap(), f);
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
