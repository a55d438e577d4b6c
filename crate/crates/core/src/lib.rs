//! Locally recoverable codes with two disjoint recovery sets, built from
//! automorphism groups of the Garcia–Stichtenoth function field towers.

pub mod bounds;
pub mod cli;
pub mod construct;
pub mod descriptor;
pub mod error;
pub mod field;
pub mod group;
pub mod linalg;
pub mod repair;
pub mod tower;
pub mod verify;

pub use construct::{construct_lrc, ConstructOptions, LrcCode};
pub use error::{Error, Result};
pub use field::{FieldElement, FiniteField};
pub use group::{build_recovery_group, GroupParams, RecoveryGroup};
pub use tower::{TowerSpec, Variant};
