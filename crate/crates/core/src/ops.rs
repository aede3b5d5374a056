//! Binary operations on fuzzy graphs.
//!
//! Product kinds share the vertex set `V₁ × V₂` (ids `left~right`) with
//! `σ(u₁,u₂) = σ₁(u₁) ∧ σ₂(u₂)`. Edges come from four rules:
//!
//! - (a) `u₁ = v₁`, `u₂v₂ ∈ E₂`: `σ₁(u₁) ∧ μ₂(u₂,v₂)`
//! - (b) `u₂ = v₂`, `u₁v₁ ∈ E₁`: `σ₂(u₂) ∧ μ₁(u₁,v₁)`
//! - (c) `u₂ ≠ v₂`, `u₁v₁ ∈ E₁`: `σ₂(u₂) ∧ σ₂(v₂) ∧ μ₁(u₁,v₁)`
//! - (d) `u₁v₁ ∈ E₁`, `u₂v₂ ∈ E₂`: `μ₁(u₁,v₁) ∧ μ₂(u₂,v₂)`
//!
//! Cartesian uses (a)+(b), composition (a)+(b)+(c), direct (d), semidirect
//! (a)+(d), strong (a)+(b)+(d).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{FuzzyGraph, VertexId};
use crate::value::MembershipValue;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OpKind {
    Union,
    Join,
    Cartesian,
    Composition,
    Direct,
    Semidirect,
    Strong,
}

impl OpKind {
    pub const ALL: [OpKind; 7] = [
        OpKind::Union,
        OpKind::Join,
        OpKind::Cartesian,
        OpKind::Composition,
        OpKind::Direct,
        OpKind::Semidirect,
        OpKind::Strong,
    ];

    pub fn name(self) -> &'static str {
        match self {
            OpKind::Union => "union",
            OpKind::Join => "join",
            OpKind::Cartesian => "cartesian",
            OpKind::Composition => "composition",
            OpKind::Direct => "direct",
            OpKind::Semidirect => "semidirect",
            OpKind::Strong => "strong",
        }
    }

    pub fn is_product(self) -> bool {
        !matches!(self, OpKind::Union | OpKind::Join)
    }

    fn rules(self) -> Rules {
        let (a, b, c, d) = match self {
            OpKind::Union | OpKind::Join => (false, false, false, false),
            OpKind::Cartesian => (true, true, false, false),
            OpKind::Composition => (true, true, true, false),
            OpKind::Direct => (false, false, false, true),
            OpKind::Semidirect => (true, false, false, true),
            OpKind::Strong => (true, true, false, true),
        };
        Rules { a, b, c, d }
    }
}

impl fmt::Display for OpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for OpKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        OpKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::BadParameter(format!("unknown operation `{s}`")))
    }
}

struct Rules {
    a: bool,
    b: bool,
    c: bool,
    d: bool,
}

pub fn combine(kind: OpKind, g1: &FuzzyGraph, g2: &FuzzyGraph) -> Result<FuzzyGraph> {
    if kind.is_product() {
        product(kind.rules(), g1, g2)
    } else {
        disjoint_sum(kind == OpKind::Join, g1, g2)
    }
}

fn disjoint_sum(join: bool, g1: &FuzzyGraph, g2: &FuzzyGraph) -> Result<FuzzyGraph> {
    if let Some(shared) = g1.vertex_ids().find(|id| g2.contains(id)) {
        return Err(Error::VertexCollision(shared.to_string()));
    }
    let vertices = g1
        .vertices()
        .chain(g2.vertices())
        .map(|(id, s)| (id.clone(), s.clone()));
    let mut edges: Vec<_> = g1
        .edges()
        .chain(g2.edges())
        .map(|(u, v, m)| (u.clone(), v.clone(), m.clone()))
        .collect();
    if join {
        for (u, su) in g1.vertices() {
            for (v, sv) in g2.vertices() {
                edges.push((u.clone(), v.clone(), su.meet(sv)));
            }
        }
    }
    FuzzyGraph::build(vertices, edges)
}

fn product(rules: Rules, g1: &FuzzyGraph, g2: &FuzzyGraph) -> Result<FuzzyGraph> {
    let id = VertexId::product;
    let mut vertices = Vec::with_capacity(g1.vertex_count() * g2.vertex_count());
    for (u1, s1) in g1.vertices() {
        for (u2, s2) in g2.vertices() {
            vertices.push((id(u1, u2), s1.meet(s2)));
        }
    }

    let mut edges: Vec<(VertexId, VertexId, MembershipValue)> = Vec::new();
    if rules.a {
        for (u1, s1) in g1.vertices() {
            for (u2, v2, m2) in g2.edges() {
                edges.push((id(u1, u2), id(u1, v2), s1.meet(m2)));
            }
        }
    }
    if rules.b {
        for (u2, s2) in g2.vertices() {
            for (u1, v1, m1) in g1.edges() {
                edges.push((id(u1, u2), id(v1, u2), s2.meet(m1)));
            }
        }
    }
    if rules.c {
        for (u1, v1, m1) in g1.edges() {
            for (u2, s2) in g2.vertices() {
                for (v2, t2) in g2.vertices() {
                    if u2 != v2 {
                        edges.push((id(u1, u2), id(v1, v2), s2.meet(t2).meet(m1)));
                    }
                }
            }
        }
    }
    if rules.d {
        for (u1, v1, m1) in g1.edges() {
            for (u2, v2, m2) in g2.edges() {
                let m = m1.meet(m2);
                edges.push((id(u1, u2), id(v1, v2), m.clone()));
                edges.push((id(u1, v2), id(v1, u2), m));
            }
        }
    }
    FuzzyGraph::build(vertices, edges)
}
