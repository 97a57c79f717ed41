//! Verifier/solver toolkit for the discharging proof that every planar
//! graph with maximum degree at most 8 is 9-edge-choosable.
//!
//! The library is organised around five pillars:
//!
//! - [`embed`]: combinatorial (rotation-system) planar embeddings, face
//!   tracing, neighbor classification, and a seeded random planar generator;
//! - [`configs`]: matchers for the eleven unavoidable configurations C1-C11;
//! - [`discharge`]: exact integer charge accounting and the discharging
//!   rules R1-R11, with a full audit trail;
//! - [`listcolor`]: an exact list-edge-coloring kernel, canonical
//!   enumeration/sampling of list assignments, and the directed recoloring
//!   procedure;
//! - [`reduce`]: the gadget catalog for the reducibility claims, with
//!   exhaustive and sampled checkers and the aggregate `run_all` driver.

pub mod configs;
pub mod discharge;
pub mod embed;
pub mod listcolor;
pub mod reduce;

pub use embed::EmbeddedGraph;
