//! Task-focused network model selection by MDL efficiency.
//!
//! Given per-node activity data and binary labelsets, this crate builds
//! candidate network representations (KNN / threshold similarity graphs,
//! explicit edge lists, rankings, communities, ad-hoc exemplar nets, random
//! pools), trains local random-forest task models on bounded node samples
//! drawn from each representation, and ranks the representations by
//! *efficiency*: correct label predictions per compressed byte of task
//! models plus representation. Significance, rank-stability, and
//! noise-sensitivity analyses round out the selection report.

pub mod data;
pub mod eval;
pub mod mdl;
pub mod netmodel;
pub mod queryfn;
pub mod rng;
pub mod taskmodel;
