//! Reduction laboratory for NFA acceptance and the Colored Walk family.
//!
//! * [`instance`] and [`format`]: data model, validation and the text format.
//! * [`gen`]: seeded random instances.
//! * [`solvers`]: frontier DP, NFA simulation, CFL reachability, Word Break,
//!   OMv, matrix baselines and exhaustive oracles.
//! * [`reductions`]: one operation per construction, each with its exact
//!   parameter accounting.
//! * [`verifier`]: frontier certificates checked by batched matrix products.
//! * [`harness`]: cross-checking, parameter audits and benchmarks.

pub mod bits;
pub mod error;
pub mod format;
pub mod gen;
pub mod harness;
pub mod instance;
pub mod reductions;
pub mod solvers;
pub mod verifier;

pub use bits::{Bits, BoolMatrix};
pub use error::{Error, Result, Violation};
pub use format::{parse_instance, parse_instance_as, serialize_instance};
pub use instance::{
    AnyWalkInstance, CflInstance, CliqueInstance, Color, ColoredGraph, ColoringMode, Grammar,
    Instance, InstanceKind, Nfa, NfaInstance, OmvInstance, OvInstance, Params, Variant, Vertex,
    WalkInstance, WordBreakInstance,
};
