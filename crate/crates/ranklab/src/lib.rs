//! Exact-arithmetic laboratory for rank identities of idempotent matrices and their
//! generalized inverses.
//!
//! The crate builds every computation on [`scalar::ExactScalar`], a four-component
//! extension of the rationals (`Q(i, sqrt(d))` for a squarefree radicand `d`), so
//! every rank, inverse, and subspace statement is decided exactly — a reported
//! counterexample is a genuine one, never roundoff.
//!
//! Layers, bottom up:
//!
//! * [`scalar`] — the exact field elements and their parser/printer.
//! * [`matrix`] — dense matrices, two independent rank eliminations, block
//!   assembly, kernels, subspace predicates, and a vectorized linear-equation
//!   solver for matrix unknowns.
//! * [`geninv`] — Moore–Penrose and Drazin inverses, the `{1}`/`{1,3}`/`{1,4}`
//!   inverse parametrization, group inverses, and associated projectors.
//! * [`gen`] — deterministic splittable seeding and samplers for idempotents,
//!   projectors, rank-constrained matrices, commuting and annihilating families,
//!   and solution pairs of the structured matrix equations used by the catalog.
//! * [`catalog`] — the checkable statements themselves: rank equalities, matrix
//!   identities, subspace identities, and equivalence bundles over randomized
//!   instances, with uniform reporting.
//! * [`extremal`] — closed-form extremal rank formulas for generalized-inverse
//!   pencils, certified against sampled draws.
//! * [`report`] — serializable run reports shared by the library and CLI.

pub mod catalog;
pub mod extremal;
pub mod gen;
pub mod geninv;
pub mod matrix;
pub mod report;
pub mod scalar;
