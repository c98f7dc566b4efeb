//! Colourings realizing a given sequence, with replayable certificates.
//!
//! Standard colourings are built by repeatedly splitting a block of
//! uncoloured vertices in two and giving all crossing edges one colour.
//! They never contain a rainbow cycle, so they avoid every target graph
//! with a cycle.

mod constants;
mod dispatch;
mod greedy;
mod mindeg3;
mod moves;
mod staged;
mod state;

pub use constants::{log_k, StageConstants, StageParameters};
pub use dispatch::{
    construct, sequential_colouring, ConstructOptions, Construction, ConstructionCertificate, NotConstructed, Strategy,
};
pub use greedy::{construct_greedy, GreedyOutcome, DEFAULT_NODE_BUDGET};
pub use mindeg3::{construct_mindeg3, Mindeg3Error, PeelCertificate, PeelGroup};
pub use moves::MoveError;
pub use staged::{construct_staged, Stage, StagedInfeasible};
pub use state::{Block, RealizeError, SplitCertificate, SplitState, StateError, Step, StepError};
