//! Two-boundary quantum mechanics at desk scale.
//!
//! Histories are evaluated between a pre-selected initial state and a
//! post-selected final state. On top of that engine sit the decision-tree
//! machinery, a bidirectional bang/crunch toy universe and a handful of
//! gedanken experiment models.

pub mod bidirectional;
pub mod decision_tree;
pub mod error;
pub mod gedanken;
pub mod hilbert;
pub mod two_boundary;

pub use error::{Error, Result};
pub use hilbert::{Operator, Projector, SeededRng, StateVector, Unitary, C64};
pub use two_boundary::{
    FinalBoundary, History, MeasurementEvent, Schedule, Step, TwoBoundaryProcess,
};
