//! Fuzzy graphs with exact rational memberships: density, balance checking,
//! graph operations, isomorphism, and randomized auditing of the classical
//! density results.

pub mod audit;
pub mod balance;
pub mod error;
pub mod generate;
pub mod graph;
pub mod io;
pub mod iso;
pub mod ops;
pub mod value;

pub use audit::{
    check_property, measure, revalidate, sample_graph, search_counterexample, AuditReport,
    Claim, CounterexampleRecord, ProfileKind, Property, SampleProfile,
};
pub use balance::{
    balance_check, max_density_subgraph, star_density, BalanceVerdict, Density, Method,
};
pub use error::{Error, Result};
pub use generate::{generate, Family, GenParams};
pub use graph::{ClassificationReport, FuzzyGraph, SubVertexSet, VertexDegree, VertexId};
pub use io::{parse_graph, serialize_graph};
pub use iso::{find_isomorphism, is_self_complementary, GraphMorphism};
pub use ops::{combine, OpKind};
pub use value::{MembershipValue, Rational};
