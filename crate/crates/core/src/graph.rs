//! The fuzzy graph value type and its unary operations.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::value::{MembershipValue, Rational};

/// Separator between the components of a product vertex id.
pub const PRODUCT_SEPARATOR: char = '~';

/// A vertex name.
///
/// Plain ids never contain `~`. Product vertices are named `left~right`, so an
/// id may carry `~` only between non-empty segments.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.is_empty() {
            return Err(Error::EmptyId);
        }
        if id.split(PRODUCT_SEPARATOR).any(str::is_empty) {
            return Err(Error::ReservedCharacter(id));
        }
        Ok(VertexId(id))
    }

    /// A plain id: rejects any `~`.
    pub fn plain(id: impl Into<String>) -> Result<Self> {
        let id = id.into();
        if id.contains(PRODUCT_SEPARATOR) {
            return Err(Error::ReservedCharacter(id));
        }
        Self::new(id)
    }

    /// The id of the product vertex `(left, right)`.
    pub fn product(left: &VertexId, right: &VertexId) -> Self {
        VertexId(format!("{}{}{}", left.0, PRODUCT_SEPARATOR, right.0))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl std::str::FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

fn edge_key(u: &VertexId, v: &VertexId) -> (VertexId, VertexId) {
    if u <= v {
        (u.clone(), v.clone())
    } else {
        (v.clone(), u.clone())
    }
}

/// A validated fuzzy graph `(σ, μ)` on a finite non-empty vertex set.
///
/// Edges are unordered pairs keyed `(min id, max id)`; pairs with `μ = 0` are
/// never stored. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FuzzyGraph {
    sigma: BTreeMap<VertexId, MembershipValue>,
    mu: BTreeMap<(VertexId, VertexId), MembershipValue>,
}

impl FuzzyGraph {
    /// Validates the vertex and edge lists and assembles the graph.
    pub fn build(
        vertices: impl IntoIterator<Item = (VertexId, MembershipValue)>,
        edges: impl IntoIterator<Item = (VertexId, VertexId, MembershipValue)>,
    ) -> Result<Self> {
        let vertices: Vec<_> = vertices.into_iter().collect();
        if vertices.iter().all(|(_, s)| s.is_zero()) {
            return Err(Error::EmptyGraph);
        }
        let mut sigma = BTreeMap::new();
        for (id, s) in vertices {
            if s.is_zero() {
                return Err(Error::ZeroSigmaVertex(id.0));
            }
            if sigma.contains_key(&id) {
                return Err(Error::DuplicateVertex(id.0));
            }
            sigma.insert(id, s);
        }

        let mut seen = BTreeSet::new();
        let mut mu = BTreeMap::new();
        for (u, v, m) in edges {
            if u == v {
                if m.is_zero() {
                    continue;
                }
                return Err(Error::SelfLoop(u.0));
            }
            let su = sigma
                .get(&u)
                .ok_or_else(|| Error::UnknownEndpoint(u.0.clone()))?;
            let sv = sigma
                .get(&v)
                .ok_or_else(|| Error::UnknownEndpoint(v.0.clone()))?;
            let key = edge_key(&u, &v);
            if !seen.insert(key.clone()) {
                return Err(Error::DuplicateEdge(key.0 .0, key.1 .0));
            }
            let bound = su.meet(sv);
            if m > bound {
                return Err(Error::MembershipBound {
                    u: u.0,
                    v: v.0,
                    mu: m.to_string(),
                    bound: bound.to_string(),
                });
            }
            if !m.is_zero() {
                mu.insert(key, m);
            }
        }
        Ok(FuzzyGraph { sigma, mu })
    }

    /// Convenience constructor from string literals, e.g.
    /// `from_literals(&[("a", "1/2"), ("b", "1")], &[("a", "b", "0.5")])`.
    pub fn from_literals(vertices: &[(&str, &str)], edges: &[(&str, &str, &str)]) -> Result<Self> {
        let vertices = vertices
            .iter()
            .map(|(id, s)| Ok((VertexId::new(*id)?, s.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        let edges = edges
            .iter()
            .map(|(u, v, m)| Ok((VertexId::new(*u)?, VertexId::new(*v)?, m.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::build(vertices, edges)
    }

    pub fn vertex_count(&self) -> usize {
        self.sigma.len()
    }

    pub fn edge_count(&self) -> usize {
        self.mu.len()
    }

    /// Vertices in id order.
    pub fn vertices(&self) -> impl Iterator<Item = (&VertexId, &MembershipValue)> + '_ {
        self.sigma.iter()
    }

    pub fn vertex_ids(&self) -> impl Iterator<Item = &VertexId> + '_ {
        self.sigma.keys()
    }

    /// Edges ordered by `(min id, max id)`; the first endpoint is the smaller.
    pub fn edges(&self) -> impl Iterator<Item = (&VertexId, &VertexId, &MembershipValue)> + '_ {
        self.mu.iter().map(|((u, v), m)| (u, v, m))
    }

    pub fn contains(&self, id: &VertexId) -> bool {
        self.sigma.contains_key(id)
    }

    pub fn sigma(&self, id: &VertexId) -> Option<&MembershipValue> {
        self.sigma.get(id)
    }

    /// `μ(u,v)`, zero for non-adjacent pairs.
    pub fn mu(&self, u: &VertexId, v: &VertexId) -> MembershipValue {
        self.mu
            .get(&edge_key(u, v))
            .cloned()
            .unwrap_or_else(MembershipValue::zero)
    }

    /// `σ(u) ∧ σ(v)`. Panics if either vertex is absent.
    pub fn sigma_meet(&self, u: &VertexId, v: &VertexId) -> MembershipValue {
        self.sigma[u].meet(&self.sigma[v])
    }

    pub fn sigma_sum(&self) -> Rational {
        self.sigma.values().map(|s| s.as_rational()).sum()
    }

    /// Sum of `μ` over unordered pairs.
    pub fn mu_sum(&self) -> Rational {
        self.mu.values().map(|m| m.as_rational()).sum()
    }

    /// Sum of `σ(u) ∧ σ(v)` over unordered pairs of distinct vertices.
    pub fn sigma_meet_sum(&self) -> Rational {
        let sigmas: Vec<_> = self.sigma.values().collect();
        let mut total = Rational::zero();
        for (i, a) in sigmas.iter().enumerate() {
            for b in &sigmas[i + 1..] {
                total += a.meet(b).as_rational();
            }
        }
        total
    }

    /// Unordered pairs of distinct vertices in `(min id, max id)` order.
    pub fn vertex_pairs(&self) -> impl Iterator<Item = (&VertexId, &VertexId)> + '_ {
        let ids: Vec<_> = self.sigma.keys().collect();
        (0..ids.len()).flat_map(move |i| {
            let ids = ids.clone();
            (i + 1..ids.len()).map(move |j| (ids[i], ids[j]))
        })
    }

    /// `σᶜ = σ`, `μᶜ(u,v) = σ(u) ∧ σ(v) − μ(u,v)` on every pair.
    pub fn complement(&self) -> FuzzyGraph {
        let mut mu = BTreeMap::new();
        for (u, v) in self.vertex_pairs() {
            let bound = self.sigma_meet(u, v);
            let value = bound
                .checked_sub(&self.mu(u, v))
                .expect("validated graphs keep μ ≤ σ∧σ");
            if !value.is_zero() {
                mu.insert((u.clone(), v.clone()), value);
            }
        }
        FuzzyGraph {
            sigma: self.sigma.clone(),
            mu,
        }
    }

    /// Restriction of `σ` and `μ` to the selected vertices.
    pub fn induced_subgraph(&self, w: &SubVertexSet) -> Result<FuzzyGraph> {
        if let Some(missing) = w.members.iter().find(|id| !self.contains(id)) {
            return Err(Error::UnknownVertex(missing.0.clone()));
        }
        let sigma = w
            .members
            .iter()
            .map(|id| (id.clone(), self.sigma[id].clone()))
            .collect();
        let mu = self
            .mu
            .iter()
            .filter(|((u, v), _)| w.members.contains(u) && w.members.contains(v))
            .map(|(k, m)| (k.clone(), m.clone()))
            .collect();
        Ok(FuzzyGraph { sigma, mu })
    }

    /// Degree `d(u) = Σ_{v≠u} μ(u,v)` and total degree `σ(u) + d(u)`.
    pub fn vertex_degrees(&self) -> BTreeMap<VertexId, VertexDegree> {
        let mut degree: BTreeMap<&VertexId, Rational> =
            self.sigma.keys().map(|id| (id, Rational::zero())).collect();
        for ((u, v), m) in &self.mu {
            *degree.get_mut(u).unwrap() += m.as_rational();
            *degree.get_mut(v).unwrap() += m.as_rational();
        }
        degree
            .into_iter()
            .map(|(id, d)| {
                let total_degree = &d + self.sigma[id].as_rational();
                (
                    id.clone(),
                    VertexDegree {
                        degree: d,
                        total_degree,
                    },
                )
            })
            .collect()
    }

    pub fn is_strong(&self) -> bool {
        self.mu
            .iter()
            .all(|((u, v), m)| *m == self.sigma_meet(u, v))
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.edge_count() == n * (n - 1) / 2 && self.is_strong()
    }

    pub fn classify(&self) -> ClassificationReport {
        let degrees = self.vertex_degrees();
        ClassificationReport {
            is_complete: self.is_complete(),
            is_strong: self.is_strong(),
            regular_degree: common_value(degrees.values().map(|d| &d.degree)),
            totally_regular_degree: common_value(degrees.values().map(|d| &d.total_degree)),
            constant_sigma: common_value(self.sigma.values().map(|s| s.as_rational())),
            constant_mu: common_value(self.mu.values().map(|m| m.as_rational())),
        }
    }

    /// Renames every vertex through `mapping`, which must be injective and
    /// cover the vertex set.
    pub fn relabel(&self, mapping: &BTreeMap<VertexId, VertexId>) -> Result<FuzzyGraph> {
        let rename = |id: &VertexId| {
            mapping
                .get(id)
                .cloned()
                .ok_or_else(|| Error::UnknownVertex(id.0.clone()))
        };
        let vertices = self
            .sigma
            .iter()
            .map(|(id, s)| Ok((rename(id)?, s.clone())))
            .collect::<Result<Vec<_>>>()?;
        let edges = self
            .mu
            .iter()
            .map(|((u, v), m)| Ok((rename(u)?, rename(v)?, m.clone())))
            .collect::<Result<Vec<_>>>()?;
        FuzzyGraph::build(vertices, edges)
    }

    /// Dense index view used by the numeric algorithms: vertices in id order.
    pub(crate) fn indexed(&self) -> IndexedGraph {
        let ids: Vec<VertexId> = self.sigma.keys().cloned().collect();
        let position: BTreeMap<&VertexId, usize> =
            ids.iter().enumerate().map(|(i, id)| (id, i)).collect();
        let sigma = self.sigma.values().map(|s| s.as_rational().clone()).collect();
        let edges = self
            .mu
            .iter()
            .map(|((u, v), m)| (position[u], position[v], m.as_rational().clone()))
            .collect();
        IndexedGraph { ids, sigma, edges }
    }
}

impl fmt::Debug for FuzzyGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FuzzyGraph")
            .field("sigma", &self.sigma)
            .field("mu", &self.mu)
            .finish()
    }
}

fn common_value<'a>(mut values: impl Iterator<Item = &'a Rational>) -> Option<Rational> {
    let first = values.next()?;
    values.all(|v| v == first).then(|| first.clone())
}

#[derive(Debug, Clone)]
pub(crate) struct IndexedGraph {
    pub ids: Vec<VertexId>,
    pub sigma: Vec<Rational>,
    /// `(i, j, μ)` with `i < j`.
    pub edges: Vec<(usize, usize, Rational)>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexDegree {
    pub degree: Rational,
    pub total_degree: Rational,
}

/// Structural facts about a fuzzy graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassificationReport {
    pub is_complete: bool,
    pub is_strong: bool,
    /// `Some(r)` when every vertex has degree `r`.
    pub regular_degree: Option<Rational>,
    /// `Some(k)` when every vertex has total degree `k`.
    pub totally_regular_degree: Option<Rational>,
    pub constant_sigma: Option<Rational>,
    /// Shared value of `μ` on its support; `None` when the support is empty
    /// or not constant.
    pub constant_mu: Option<Rational>,
}

/// A non-empty set of vertices of some host graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubVertexSet {
    members: BTreeSet<VertexId>,
}

impl SubVertexSet {
    /// Checks the selection against `host`.
    pub fn new(host: &FuzzyGraph, ids: impl IntoIterator<Item = VertexId>) -> Result<Self> {
        let members: BTreeSet<_> = ids.into_iter().collect();
        if members.is_empty() {
            return Err(Error::EmptySelection);
        }
        if let Some(missing) = members.iter().find(|id| !host.contains(id)) {
            return Err(Error::UnknownVertex(missing.0.clone()));
        }
        Ok(SubVertexSet { members })
    }

    pub fn from_strs(host: &FuzzyGraph, ids: &[&str]) -> Result<Self> {
        let ids = ids.iter().map(|s| VertexId::new(*s)).collect::<Result<Vec<_>>>()?;
        Self::new(host, ids)
    }

    pub fn all(host: &FuzzyGraph) -> Self {
        SubVertexSet {
            members: host.sigma.keys().cloned().collect(),
        }
    }

    pub(crate) fn from_members(members: BTreeSet<VertexId>) -> Self {
        debug_assert!(!members.is_empty());
        SubVertexSet { members }
    }

    pub fn members(&self) -> &BTreeSet<VertexId> {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::ratio;

    fn v(s: &str) -> VertexId {
        VertexId::new(s).unwrap()
    }

    #[test]
    fn builds_maximal_edge() {
        let g = FuzzyGraph::from_literals(&[("a", "1"), ("b", "1")], &[("a", "b", "1")]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.edge_count(), 1);
        assert_eq!(g.mu(&v("b"), &v("a")), MembershipValue::one());
    }

    #[test]
    fn build_errors() {
        let err = |vs: &[(&str, &str)], es: &[(&str, &str, &str)]| {
            FuzzyGraph::from_literals(vs, es).unwrap_err()
        };
        assert!(matches!(
            err(&[("a", "2/5"), ("b", "3/5")], &[("a", "b", "1/2")]),
            Error::MembershipBound { .. }
        ));
        assert_eq!(err(&[("a", "1/2")], &[("a", "a", "1/4")]), Error::SelfLoop("a".into()));
        assert_eq!(err(&[], &[]), Error::EmptyGraph);
        assert_eq!(err(&[("a", "0"), ("b", "0")], &[]), Error::EmptyGraph);
        assert_eq!(
            err(&[("a", "0"), ("b", "1")], &[]),
            Error::ZeroSigmaVertex("a".into())
        );
        assert_eq!(
            err(&[("a", "1"), ("a", "1")], &[]),
            Error::DuplicateVertex("a".into())
        );
        assert_eq!(
            err(&[("a", "1")], &[("a", "b", "1/2")]),
            Error::UnknownEndpoint("b".into())
        );
        assert_eq!(
            err(&[("a", "1"), ("b", "1")], &[("a", "b", "1/2"), ("b", "a", "1/3")]),
            Error::DuplicateEdge("a".into(), "b".into())
        );
        assert!(matches!(
            FuzzyGraph::from_literals(&[("a~", "1")], &[]),
            Err(Error::ReservedCharacter(_))
        ));
        assert!(matches!(
            FuzzyGraph::from_literals(&[("a", "5/4")], &[]),
            Err(Error::ValueRange(_))
        ));
    }

    #[test]
    fn zero_mu_and_zero_loops_are_dropped() {
        let g = FuzzyGraph::from_literals(
            &[("a", "1"), ("b", "1")],
            &[("a", "b", "0"), ("a", "a", "0")],
        )
        .unwrap();
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn product_ids() {
        assert!(VertexId::new("a~b").is_ok());
        assert!(VertexId::new("a~b~c").is_ok());
        for bad in ["~", "a~", "~a", "a~~b"] {
            assert!(matches!(VertexId::new(bad), Err(Error::ReservedCharacter(_))));
        }
        assert!(matches!(VertexId::plain("a~b"), Err(Error::ReservedCharacter(_))));
        assert_eq!(VertexId::product(&v("a"), &v("x")).as_str(), "a~x");
        assert_eq!(VertexId::new(""), Err(Error::EmptyId));
    }

    #[test]
    fn complement_examples() {
        let g = FuzzyGraph::from_literals(&[("a", "1"), ("b", "1"), ("c", "1")], &[]).unwrap();
        let c = g.complement();
        assert_eq!(c.edge_count(), 3);
        assert!(c.edges().all(|(_, _, m)| *m == MembershipValue::one()));
        assert!(c.is_complete());
        assert_eq!(c.complement().edge_count(), 0);

        let g = FuzzyGraph::from_literals(&[("a", "3/5"), ("b", "4/5")], &[("a", "b", "1/2")])
            .unwrap();
        assert_eq!(
            g.complement().mu(&v("a"), &v("b")),
            MembershipValue::new(1, 10).unwrap()
        );
    }

    #[test]
    fn induced_subgraph_restricts() {
        let g = FuzzyGraph::from_literals(
            &[("a", "1"), ("b", "1"), ("c", "1/2")],
            &[("a", "b", "1/2"), ("b", "c", "1/2")],
        )
        .unwrap();
        let all = SubVertexSet::all(&g);
        assert_eq!(g.induced_subgraph(&all).unwrap(), g);
        let ab = SubVertexSet::from_strs(&g, &["a", "b"]).unwrap();
        let h = g.induced_subgraph(&ab).unwrap();
        assert_eq!(h.vertex_count(), 2);
        assert_eq!(h.edge_count(), 1);
        assert_eq!(
            SubVertexSet::from_strs(&g, &[]).unwrap_err(),
            Error::EmptySelection
        );
        assert_eq!(
            SubVertexSet::from_strs(&g, &["z"]).unwrap_err(),
            Error::UnknownVertex("z".into())
        );
    }

    #[test]
    fn degrees() {
        let g = FuzzyGraph::from_literals(
            &[("a", "1"), ("b", "1"), ("c", "2/5")],
            &[("a", "b", "3/10")],
        )
        .unwrap();
        let d = g.vertex_degrees();
        assert_eq!(d[&v("a")].degree, ratio(3, 10));
        assert_eq!(d[&v("b")].degree, ratio(3, 10));
        assert_eq!(d[&v("c")].degree, ratio(0, 1));
        assert_eq!(d[&v("c")].total_degree, ratio(2, 5));
        assert_eq!(d[&v("a")].total_degree, ratio(13, 10));
    }

    #[test]
    fn strong_but_not_complete() {
        let g = FuzzyGraph::from_literals(
            &[("a", "2/5"), ("b", "1"), ("c", "1")],
            &[("a", "b", "2/5")],
        )
        .unwrap();
        let report = g.classify();
        assert!(report.is_strong);
        assert!(!report.is_complete);
    }

    #[test]
    fn regular_but_not_totally_regular() {
        let g = FuzzyGraph::from_literals(&[("a", "1/2"), ("b", "1")], &[("a", "b", "1/2")])
            .unwrap();
        let report = g.classify();
        assert_eq!(report.regular_degree, Some(ratio(1, 2)));
        assert_eq!(report.totally_regular_degree, None);
        assert_eq!(report.constant_sigma, None);
        assert_eq!(report.constant_mu, Some(ratio(1, 2)));
    }
}
