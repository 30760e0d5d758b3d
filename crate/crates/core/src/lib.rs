//! Induced saturation tooling: graph catalog and operators, an induced
//! path/cycle verifier, territories and their expansions, and the assembly
//! of deletion-critical graphs from cubic Hamiltonian bases.

pub mod assemble;
pub mod catalog;
pub mod detect;
pub mod graph;
pub mod graph6;
pub mod io;
pub mod territory;

pub use catalog::Family;
pub use detect::{Budget, Mode, Target, TargetKind, VerificationReport, Verifier};
pub use graph::{CyclicSeq, Edge, Graph, Vertex};
pub use territory::{ExpansionSpec, Territory};
