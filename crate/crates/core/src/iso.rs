//! Isomorphism and self-complementarity for small fuzzy graphs.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::value::{MembershipValue, Rational};

/// Largest vertex count accepted by the isomorphism search.
pub const ISO_LIMIT: usize = 12;

/// A bijection between the vertex sets of two graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphMorphism {
    pub mapping: BTreeMap<VertexId, VertexId>,
}

impl GraphMorphism {
    /// Checks bijectivity and both preservation equations directly.
    pub fn verify(&self, g1: &FuzzyGraph, g2: &FuzzyGraph) -> bool {
        if self.mapping.len() != g1.vertex_count() || g1.vertex_count() != g2.vertex_count() {
            return false;
        }
        let mut images: Vec<_> = self.mapping.values().collect();
        images.sort();
        images.dedup();
        if images.len() != self.mapping.len() {
            return false;
        }
        for (x, s) in g1.vertices() {
            let Some(hx) = self.mapping.get(x) else {
                return false;
            };
            if g2.sigma(hx) != Some(s) {
                return false;
            }
        }
        g1.vertex_pairs()
            .all(|(x, y)| g1.mu(x, y) == g2.mu(&self.mapping[x], &self.mapping[y]))
    }
}

/// `(σ, degree, total degree)`; total degree is implied by the other two but
/// kept so the key reads as the invariant it is.
type Signature = (MembershipValue, Rational, Rational);

struct Prepared {
    ids: Vec<VertexId>,
    signature: Vec<Signature>,
    /// Dense `μ` matrix.
    mu: Vec<Vec<MembershipValue>>,
}

impl Prepared {
    fn new(g: &FuzzyGraph) -> Self {
        let ids: Vec<VertexId> = g.vertex_ids().cloned().collect();
        let degrees = g.vertex_degrees();
        let signature = ids
            .iter()
            .map(|id| {
                let d = &degrees[id];
                (
                    g.sigma(id).unwrap().clone(),
                    d.degree.clone(),
                    d.total_degree.clone(),
                )
            })
            .collect();
        let mu = ids
            .iter()
            .map(|u| ids.iter().map(|v| g.mu(u, v)).collect())
            .collect();
        Prepared { ids, signature, mu }
    }
}

fn guard(g: &FuzzyGraph) -> Result<()> {
    if g.vertex_count() > ISO_LIMIT {
        return Err(Error::TooLarge {
            what: "isomorphism search",
            actual: g.vertex_count(),
            limit: ISO_LIMIT,
        });
    }
    Ok(())
}

/// Backtracking search for an isomorphism `g1 → g2`.
pub fn find_isomorphism(g1: &FuzzyGraph, g2: &FuzzyGraph) -> Result<Option<GraphMorphism>> {
    guard(g1)?;
    guard(g2)?;
    if g1.vertex_count() != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let left = Prepared::new(g1);
    let right = Prepared::new(g2);

    let mut sorted_left = left.signature.clone();
    let mut sorted_right = right.signature.clone();
    sorted_left.sort();
    sorted_right.sort();
    if sorted_left != sorted_right {
        return Ok(None);
    }

    let n = left.ids.len();
    let candidates: Vec<Vec<usize>> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| right.signature[j] == left.signature[i])
                .collect()
        })
        .collect();
    // Most constrained vertices first.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&i| candidates[i].len());

    let mut assignment = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !extend(&left, &right, &order, &candidates, 0, &mut assignment, &mut used) {
        return Ok(None);
    }
    let mapping = (0..n)
        .map(|i| (left.ids[i].clone(), right.ids[assignment[i]].clone()))
        .collect();
    Ok(Some(GraphMorphism { mapping }))
}

fn extend(
    left: &Prepared,
    right: &Prepared,
    order: &[usize],
    candidates: &[Vec<usize>],
    depth: usize,
    assignment: &mut [usize],
    used: &mut [bool],
) -> bool {
    let Some(&x) = order.get(depth) else {
        return true;
    };
    for &hx in &candidates[x] {
        if used[hx] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&y| left.mu[x][y] == right.mu[hx][assignment[y]]);
        if !consistent {
            continue;
        }
        assignment[x] = hx;
        used[hx] = true;
        if extend(left, right, order, candidates, depth + 1, assignment, used) {
            return true;
        }
        used[hx] = false;
        assignment[x] = usize::MAX;
    }
    false
}

/// Whether `g ≅ gᶜ`, with a witnessing morphism `g → gᶜ`.
pub fn is_self_complementary(g: &FuzzyGraph) -> Result<(bool, Option<GraphMorphism>)> {
    let morphism = find_isomorphism(g, &g.complement())?;
    Ok((morphism.is_some(), morphism))
}
