//! Exact Lie-theoretic machinery for bounded-multiplicity questions on
//! symmetric pairs: root data and orbit invariants, matrix models of the
//! classical real forms, involutions, coisotropic slice certificates and
//! the route-by-route verdict engine.

pub mod catalog;
pub mod cmatrix;
pub mod coiso;
pub mod families;
pub mod label;
pub mod linalg;
pub mod matlie;
pub mod report;
pub mod rootdata;
pub mod scalar;
pub mod sympair;
pub mod verdict;
