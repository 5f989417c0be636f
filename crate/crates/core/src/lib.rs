//! Curvature calculus of Hopf hypersurfaces in the complex hyperbolic
//! quadric with constant principal curvatures: exact parallel-hypersurface
//! flows, focal-submanifold multisets with the austere obstruction, the
//! Reeb pairing, Cartan-type sign constraints, the catalog of homogeneous
//! examples, and a scripted case-elimination engine that reproduces the
//! classification for up to four distinct principal curvatures with
//! machine-checkable traces.

pub mod cartan;
pub mod classify;
pub mod catalog;
pub mod config;
pub mod flow;
pub mod mult;
pub mod render;
pub mod report;
pub mod sym;

pub use config::{ConfigError, HopfConfig, PrincipalMultiset};
pub use flow::{FlowError, FocalBranch, FocalReport, ReebPair, Side};
pub use mult::{MDim, Mult};
