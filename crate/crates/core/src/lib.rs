//! Enhanced power graphs, power graphs and cyclic graphs of finite groups.
//!
//! Groups are Cayley tables ([`FiniteGroup`]). From a group the crate builds
//! its enhanced power graph (`x ~ y` iff `⟨x, y⟩` is cyclic), power graph,
//! directed power graph and cyclic graph, decides graph isomorphism with
//! checkable certificates, and replays structural theorems about these graphs
//! over a corpus of small groups ([`verify`]).
//!
//! ```
//! use pegraph::{enhanced_power_graph, graphs_isomorphic, groups_isomorphic, parse_group_expr};
//!
//! let g = parse_group_expr("Z3 x Z3 x Z3")?.build()?;
//! let h = parse_group_expr("Heis3")?.build()?;
//! assert!(graphs_isomorphic(&enhanced_power_graph(&g), &enhanced_power_graph(&h)).is_found());
//! assert!(!groups_isomorphic(&g, &h).is_found());
//! # Ok::<(), pegraph::Error>(())
//! ```

pub mod arith;
mod error;
pub mod expr;
pub mod graph;
pub mod group;
pub mod iso;
mod outcome;
pub mod verify;

pub use error::{Error, Result};
pub use expr::{parse_group_expr, Atom, AtomKind, GroupExpr};
pub use graph::{
    block_signature, cyclic_graph, directed_power_graph, dominating_vertices, enhanced_power_graph,
    power_graph, BlockSignature, DiGraph, Graph, GraphKind,
};
pub use group::{groups_isomorphic, FiniteGroup, GroupJson, OrderSpectrum, SylowDecomposition};
pub use iso::{
    canonical_certificate, graphs_isomorphic, graphs_isomorphic_with, IsoCertificate, IsoOptions,
};
pub use outcome::{BudgetExhausted, SearchOutcome, DEFAULT_NODE_BUDGET};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/groups.md")]
    mod groups {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/isomorphism.md")]
    mod isomorphism {}
    #[doc = include_str!("../../../book/src/verification.md")]
    mod verification {}
}
