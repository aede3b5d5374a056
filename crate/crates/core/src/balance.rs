//! *-density and the *-balanced decision.
//!
//! `D*(G) = 2·Σμ / Σσ`. A graph is *-balanced when no non-empty subgraph is
//! strictly denser. Subgraphs keep the host's membership values, so for a
//! fixed vertex set the densest choice keeps every available edge and the
//! search runs over induced subgraphs only.
//!
//! Two exact routes find the densest induced subgraph:
//!
//! - enumeration over all non-empty vertex subsets (Gray-code order, one
//!   vertex toggled per step), bounded to [`ENUMERATION_LIMIT`] vertices;
//! - Dinkelbach iteration whose inner step is a minimum s–t cut on the
//!   edge/vertex densest-subgraph network.
//!
//! Both work on integer weights obtained by scaling every membership value
//! by the least common denominator; `i128` is used when the magnitudes fit
//! and `BigInt` otherwise.

use std::cmp::Ordering;
use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, IndexedGraph, SubVertexSet};
use crate::value::Rational;

/// Largest vertex count accepted by the enumeration method.
pub const ENUMERATION_LIMIT: usize = 24;

/// Magnitudes below `2^I128_BITS` are handled with `i128`.
const I128_BITS: u64 = 120;

/// An exact *-density with its two sums.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Density {
    pub value: Rational,
    /// `2·Σμ`
    pub numerator_sum: Rational,
    /// `Σσ`
    pub denominator_sum: Rational,
}

impl Density {
    fn new(numerator_sum: Rational, denominator_sum: Rational) -> Self {
        debug_assert!(denominator_sum.is_positive());
        Density {
            value: &numerator_sum / &denominator_sum,
            numerator_sum,
            denominator_sum,
        }
    }
}

pub fn star_density(g: &FuzzyGraph) -> Density {
    Density::new(g.mu_sum() * Rational::from_integer(2.into()), g.sigma_sum())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Enumeration,
    Flow,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Enumeration => "enumeration",
            Method::Flow => "flow",
        })
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "enum" | "enumeration" => Ok(Method::Enumeration),
            "flow" => Ok(Method::Flow),
            _ => Err(Error::BadParameter(format!("unknown method `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BalanceVerdict {
    pub balanced: bool,
    pub graph_density: Density,
    pub max_subgraph_density: Density,
    /// A strictly denser vertex set; present iff not balanced.
    pub witness: Option<SubVertexSet>,
    pub method: Method,
}

/// Finds a vertex set whose induced subgraph has maximum *-density.
///
/// Enumeration is deterministic: among maximizers it returns the smallest,
/// breaking ties by lexicographic order of the sorted vertex ids. The flow
/// method returns some maximizer.
pub fn max_density_subgraph(g: &FuzzyGraph, method: Method) -> Result<(SubVertexSet, Density)> {
    let indexed = g.indexed();
    let scaled = Scaled::new(&indexed);
    let members: Vec<usize> = match method {
        Method::Enumeration => {
            if indexed.ids.len() > ENUMERATION_LIMIT {
                return Err(Error::TooLarge {
                    what: "enumeration",
                    actual: indexed.ids.len(),
                    limit: ENUMERATION_LIMIT,
                });
            }
            let mask = if scaled.fits_i128() {
                enumerate::<i128>(&scaled)
            } else {
                enumerate::<BigInt>(&scaled)
            };
            (0..indexed.ids.len()).filter(|i| mask >> i & 1 == 1).collect()
        }
        Method::Flow => dinkelbach(&scaled),
    };
    let set = SubVertexSet::from_members(
        members
            .into_iter()
            .map(|i| indexed.ids[i].clone())
            .collect::<BTreeSet<_>>(),
    );
    let density = star_density(&g.induced_subgraph(&set)?);
    Ok((set, density))
}

pub fn balance_check(g: &FuzzyGraph, method: Method) -> Result<BalanceVerdict> {
    let graph_density = star_density(g);
    let (set, max_subgraph_density) = max_density_subgraph(g, method)?;
    let balanced = max_subgraph_density.value <= graph_density.value;
    Ok(BalanceVerdict {
        balanced,
        graph_density,
        max_subgraph_density,
        witness: (!balanced).then_some(set),
        method,
    })
}

/// Integer arithmetic used by both search routes.
pub(crate) trait Scalar:
    Clone
    + Ord
    + Zero
    + One
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_big(value: &BigInt) -> Self;
}

impl Scalar for i128 {
    fn from_big(value: &BigInt) -> Self {
        value.to_i128().expect("magnitude checked before narrowing")
    }
}

impl Scalar for BigInt {
    fn from_big(value: &BigInt) -> Self {
        value.clone()
    }
}

/// Membership values multiplied by their least common denominator.
struct Scaled {
    sigma: Vec<BigInt>,
    edges: Vec<(usize, usize, BigInt)>,
}

impl Scaled {
    fn new(g: &IndexedGraph) -> Self {
        let lcm = g
            .sigma
            .iter()
            .chain(g.edges.iter().map(|(_, _, m)| m))
            .fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let scale = |r: &Rational| (r * Rational::from_integer(lcm.clone())).to_integer();
        Scaled {
            sigma: g.sigma.iter().map(scale).collect(),
            edges: g.edges.iter().map(|(i, j, m)| (*i, *j, scale(m))).collect(),
        }
    }

    fn edge_total(&self) -> BigInt {
        self.edges.iter().map(|(_, _, w)| w).sum()
    }

    fn sigma_total(&self) -> BigInt {
        self.sigma.iter().sum()
    }

    /// Whether every cross product `(2Σw)·(Σs)` fits comfortably in `i128`.
    fn fits_i128(&self) -> bool {
        let product: BigInt = self.edge_total() * 2u32 * self.sigma_total();
        product.bits() < I128_BITS
    }
}

/// Returns the bitmask of the best vertex subset.
fn enumerate<T: Scalar>(scaled: &Scaled) -> u32 {
    let n = scaled.sigma.len();
    let sigma: Vec<T> = scaled.sigma.iter().map(T::from_big).collect();
    let mut adjacency: Vec<Vec<(usize, T)>> = vec![Vec::new(); n];
    for (i, j, w) in &scaled.edges {
        let w = T::from_big(w) + T::from_big(w);
        adjacency[*i].push((*j, w.clone()));
        adjacency[*j].push((*i, w));
    }

    let mut mask: u32 = 0;
    let mut numer = T::zero();
    let mut denom = T::zero();
    let mut best: Option<(u32, T, T)> = None;
    for step in 1u64..(1u64 << n) {
        let bit = step.trailing_zeros() as usize;
        let flag = 1u32 << bit;
        if mask & flag != 0 {
            mask ^= flag;
            denom -= &sigma[bit];
            for (j, w) in &adjacency[bit] {
                if mask >> j & 1 == 1 {
                    numer -= w;
                }
            }
        } else {
            for (j, w) in &adjacency[bit] {
                if mask >> j & 1 == 1 {
                    numer += w;
                }
            }
            denom += &sigma[bit];
            mask |= flag;
        }
        let better = match &best {
            None => true,
            Some((best_mask, best_numer, best_denom)) => {
                let lhs = numer.clone() * best_denom.clone();
                let rhs = best_numer.clone() * denom.clone();
                match lhs.cmp(&rhs) {
                    Ordering::Greater => true,
                    Ordering::Less => false,
                    Ordering::Equal => precedes(mask, *best_mask),
                }
            }
        };
        if better {
            best = Some((mask, numer.clone(), denom.clone()));
        }
    }
    best.expect("at least one vertex").0
}

/// Order on equally dense subsets: fewer vertices first, then the
/// lexicographically smaller sorted index list.
fn precedes(candidate: u32, incumbent: u32) -> bool {
    match candidate.count_ones().cmp(&incumbent.count_ones()) {
        Ordering::Less => true,
        Ordering::Greater => false,
        Ordering::Equal => {
            let diff = candidate ^ incumbent;
            diff != 0 && candidate & (diff & diff.wrapping_neg()) != 0
        }
    }
}

/// Dinkelbach iteration over exact densities. Returns the vertex indices of
/// a densest subset.
fn dinkelbach(scaled: &Scaled) -> Vec<usize> {
    let n = scaled.sigma.len();
    let mut best: Vec<usize> = (0..n).collect();
    if scaled.edges.is_empty() {
        return best;
    }
    let mut numer: BigInt = scaled.edge_total() * 2u32;
    let mut denom = scaled.sigma_total();
    loop {
        let gcd = numer.gcd(&denom);
        let (a, b) = (&numer / &gcd, &denom / &gcd);
        let Some(set) = denser_subset(scaled, &a, &b) else {
            return best;
        };
        let in_set: Vec<bool> = (0..n).map(|i| set.binary_search(&i).is_ok()).collect();
        let next_numer: BigInt = scaled
            .edges
            .iter()
            .filter(|(i, j, _)| in_set[*i] && in_set[*j])
            .map(|(_, _, w)| w * 2)
            .sum();
        let next_denom: BigInt = set.iter().map(|&i| &scaled.sigma[i]).sum();
        debug_assert!(&next_numer * &denom > &numer * &next_denom);
        numer = next_numer;
        denom = next_denom;
        best = set;
    }
}

/// Decides whether some subset `W` has `b·2w(E[W]) − a·s(W) > 0` and returns
/// the source side of a minimum cut when it does.
fn denser_subset(scaled: &Scaled, a: &BigInt, b: &BigInt) -> Option<Vec<usize>> {
    let m = scaled.edges.len();
    let n = scaled.sigma.len();
    let source = 0;
    let sink = m + n + 1;
    let vertex_node = |i: usize| m + 1 + i;

    let source_caps: Vec<BigInt> = scaled.edges.iter().map(|(_, _, w)| w * 2 * b).collect();
    let sink_caps: Vec<BigInt> = scaled.sigma.iter().map(|s| s * a).collect();
    let source_total: BigInt = source_caps.iter().sum();
    let infinite = &source_total + BigInt::one();
    let bound: BigInt = &source_total + &infinite * 2u32 + sink_caps.iter().sum::<BigInt>();

    let mut arcs: Vec<(usize, usize, BigInt)> = Vec::with_capacity(3 * m + n);
    for (e, (i, j, _)) in scaled.edges.iter().enumerate() {
        arcs.push((source, e + 1, source_caps[e].clone()));
        arcs.push((e + 1, vertex_node(*i), infinite.clone()));
        arcs.push((e + 1, vertex_node(*j), infinite.clone()));
    }
    for (i, cap) in sink_caps.iter().enumerate() {
        arcs.push((vertex_node(i), sink, cap.clone()));
    }

    let (flow, reachable) = if bound.bits() < I128_BITS {
        let (f, r) = min_cut::<i128>(m + n + 2, &arcs, source, sink);
        (BigInt::from(f), r)
    } else {
        min_cut::<BigInt>(m + n + 2, &arcs, source, sink)
    };
    if flow >= source_total {
        return None;
    }
    let set: Vec<usize> = (0..n).filter(|&i| reachable[vertex_node(i)]).collect();
    debug_assert!(!set.is_empty());
    Some(set)
}

/// Dinic's algorithm. Returns the maximum flow value and the set of nodes
/// reachable from the source in the final residual network.
fn min_cut<T: Scalar>(
    nodes: usize,
    arcs: &[(usize, usize, BigInt)],
    source: usize,
    sink: usize,
) -> (T, Vec<bool>) {
    let mut net = FlowNetwork::<T>::new(nodes);
    for (from, to, cap) in arcs {
        net.add_arc(*from, *to, T::from_big(cap));
    }
    let flow = net.max_flow(source, sink);
    let reachable = net.levels(source).into_iter().map(|l| l.is_some()).collect();
    (flow, reachable)
}

struct FlowNetwork<T> {
    head: Vec<Vec<usize>>,
    to: Vec<usize>,
    residual: Vec<T>,
}

impl<T: Scalar> FlowNetwork<T> {
    fn new(nodes: usize) -> Self {
        FlowNetwork {
            head: vec![Vec::new(); nodes],
            to: Vec::new(),
            residual: Vec::new(),
        }
    }

    fn add_arc(&mut self, from: usize, to: usize, cap: T) {
        self.head[from].push(self.to.len());
        self.to.push(to);
        self.residual.push(cap);
        self.head[to].push(self.to.len());
        self.to.push(from);
        self.residual.push(T::zero());
    }

    fn levels(&self, source: usize) -> Vec<Option<usize>> {
        let mut level = vec![None; self.head.len()];
        level[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(u) = queue.pop_front() {
            let next = level[u].map(|l| l + 1);
            for &arc in &self.head[u] {
                let v = self.to[arc];
                if level[v].is_none() && self.residual[arc] > T::zero() {
                    level[v] = next;
                    queue.push_back(v);
                }
            }
        }
        level
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> T {
        let mut total = T::zero();
        loop {
            let level = self.levels(source);
            if level[sink].is_none() {
                return total;
            }
            let mut cursor = vec![0usize; self.head.len()];
            while let Some(pushed) = self.augment(source, sink, None, &level, &mut cursor) {
                total += &pushed;
            }
        }
    }

    /// Pushes one blocking-flow path; `limit` of `None` means unbounded.
    fn augment(
        &mut self,
        u: usize,
        sink: usize,
        limit: Option<T>,
        level: &[Option<usize>],
        cursor: &mut [usize],
    ) -> Option<T> {
        if u == sink {
            return limit;
        }
        while cursor[u] < self.head[u].len() {
            let arc = self.head[u][cursor[u]];
            let v = self.to[arc];
            let cap = self.residual[arc].clone();
            if cap > T::zero() && level[v].is_some() && level[v] == level[u].map(|l| l + 1) {
                let bound = match &limit {
                    Some(l) if *l < cap => l.clone(),
                    _ => cap,
                };
                if let Some(pushed) = self.augment(v, sink, Some(bound), level, cursor) {
                    self.residual[arc] -= &pushed;
                    self.residual[arc ^ 1] += &pushed;
                    return Some(pushed);
                }
            }
            cursor[u] += 1;
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::{generate, Family, GenParams};
    use crate::value::{ratio, MembershipValue};

    fn gen(family: Family, n: usize, c: (i64, i64)) -> FuzzyGraph {
        generate(family, &GenParams::new(n, MembershipValue::new(c.0, c.1).unwrap())).unwrap()
    }

    fn edge_plus_isolated() -> FuzzyGraph {
        FuzzyGraph::from_literals(&[("a", "1"), ("b", "1"), ("c", "1")], &[("a", "b", "1")])
            .unwrap()
    }

    fn ids(set: &SubVertexSet) -> Vec<&str> {
        set.members().iter().map(|v| v.as_str()).collect()
    }

    #[test]
    fn class_densities() {
        assert_eq!(star_density(&gen(Family::CompleteKn, 5, (1, 2))).value, ratio(4, 1));
        assert_eq!(star_density(&gen(Family::CycleStrong, 6, (3, 10))).value, ratio(2, 1));
        assert_eq!(star_density(&gen(Family::PetersenStrong, 10, (1, 1))).value, ratio(3, 1));
        assert_eq!(
            star_density(&gen(Family::CompleteBipartiteStrong, 3, (1, 2))).value,
            ratio(3, 1)
        );
        assert_eq!(star_density(&gen(Family::Edgeless, 4, (1, 3))).value, ratio(0, 1));
    }

    #[test]
    fn hand_density() {
        let g = FuzzyGraph::from_literals(&[("a", "2/5"), ("b", "3/5")], &[("a", "b", "3/10")])
            .unwrap();
        let d = star_density(&g);
        assert_eq!(d.value, ratio(3, 5));
        assert_eq!(d.numerator_sum, ratio(3, 5));
        assert_eq!(d.denominator_sum, ratio(1, 1));
    }

    #[test]
    fn densest_of_edge_plus_isolated() {
        let g = edge_plus_isolated();
        for method in [Method::Enumeration, Method::Flow] {
            let (w, d) = max_density_subgraph(&g, method).unwrap();
            assert_eq!(ids(&w), ["a", "b"]);
            assert_eq!(d.value, ratio(1, 1));
        }
        let verdict = balance_check(&g, Method::Enumeration).unwrap();
        assert!(!verdict.balanced);
        assert_eq!(verdict.graph_density.value, ratio(2, 3));
        assert_eq!(ids(verdict.witness.as_ref().unwrap()), ["a", "b"]);
    }

    #[test]
    fn complete_graph_is_its_own_densest_subgraph() {
        let g = gen(Family::CompleteKn, 4, (1, 2));
        let (w, d) = max_density_subgraph(&g, Method::Enumeration).unwrap();
        assert_eq!(w.len(), 4);
        assert_eq!(d.value, ratio(3, 1));
        assert!(balance_check(&gen(Family::CompleteKn, 6, (1, 4)), Method::Flow)
            .unwrap()
            .balanced);
    }

    #[test]
    fn single_vertex_and_edgeless_tie_break() {
        let g = FuzzyGraph::from_literals(&[("only", "1/3")], &[]).unwrap();
        let (w, d) = max_density_subgraph(&g, Method::Enumeration).unwrap();
        assert_eq!(ids(&w), ["only"]);
        assert_eq!(d.value, ratio(0, 1));

        let g = gen(Family::Edgeless, 3, (1, 2));
        let (w, _) = max_density_subgraph(&g, Method::Enumeration).unwrap();
        assert_eq!(ids(&w), ["v1"]);
        let verdict = balance_check(&g, Method::Flow).unwrap();
        assert!(verdict.balanced);
        assert!(verdict.witness.is_none());
    }

    #[test]
    fn equal_density_ties_prefer_small_then_lexicographic() {
        // Two disjoint identical edges: each edge alone has the same density
        // as the whole graph.
        let g = FuzzyGraph::from_literals(
            &[("a", "1"), ("b", "1"), ("c", "1"), ("d", "1")],
            &[("c", "d", "1"), ("a", "b", "1")],
        )
        .unwrap();
        let (w, d) = max_density_subgraph(&g, Method::Enumeration).unwrap();
        assert_eq!(ids(&w), ["a", "b"]);
        assert_eq!(d.value, ratio(1, 1));
        assert!(balance_check(&g, Method::Enumeration).unwrap().balanced);
    }

    #[test]
    fn petersen_balanced() {
        let g = gen(Family::PetersenStrong, 10, (1, 2));
        for method in [Method::Enumeration, Method::Flow] {
            let verdict = balance_check(&g, method).unwrap();
            assert!(verdict.balanced);
            assert_eq!(verdict.max_subgraph_density.value, ratio(3, 1));
        }
    }

    #[test]
    fn precedes_order() {
        assert!(precedes(0b001, 0b011));
        assert!(!precedes(0b011, 0b001));
        // {0,2} before {1,2}
        assert!(precedes(0b101, 0b110));
        assert!(!precedes(0b110, 0b101));
        assert!(!precedes(0b101, 0b101));
    }

    #[test]
    fn enumeration_guard() {
        let g = gen(Family::Edgeless, 25, (1, 2));
        assert!(matches!(
            max_density_subgraph(&g, Method::Enumeration),
            Err(Error::TooLarge { actual: 25, .. })
        ));
        // the flow route has no guard
        assert!(balance_check(&g, Method::Flow).unwrap().balanced);
    }

    #[test]
    fn bigint_path_agrees() {
        // Denominators with huge least common multiple force BigInt arithmetic.
        let g = FuzzyGraph::from_literals(
            &[
                ("a", "999999999999999989/1000000000000000000"),
                ("b", "99999999999999997/100000000000000000"),
                ("c", "9999999999999937/10000000000000000"),
                ("d", "1/3"),
            ],
            &[
                ("a", "b", "12345678901234567/100000000000000000"),
                ("b", "c", "99999999999999/100000000000000"),
                ("a", "c", "7/11"),
                ("c", "d", "1/3"),
            ],
        )
        .unwrap();
        let (_, by_enum) = max_density_subgraph(&g, Method::Enumeration).unwrap();
        let (_, by_flow) = max_density_subgraph(&g, Method::Flow).unwrap();
        assert_eq!(by_enum.value, by_flow.value);
    }
}
