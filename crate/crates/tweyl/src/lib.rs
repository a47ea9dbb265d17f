//! Exact computational algebra for periodic vertex configurations on the
//! twisted cylinder and the noncommutative algebras they generate.
//!
//! The library is organized around one dictionary.  On one side sit
//! `(m, n)`-periodic higher-spin vertex configurations: assignments of
//! nonnegative integer labels to the edges of a square lattice, satisfying
//! the ice rule at every vertex and invariant under the glide translation
//! `(m, n)`.  On the other side sit pairs of polynomials `(p1, p2)` solving
//! a commutation equation, each such pair presenting a twisted generalized
//! Weyl algebra with generators `H`, `X1±`, `X2±`.  The dictionary matches
//! configurations with solutions, path structure with normal forms, and
//! connected components of the unlabeled face graph with simple weight
//! modules.
//!
//! Modules:
//!
//! * [`qpoly`]: exact rationals, dense polynomials, rational functions,
//!   rational root extraction, canonical Bezout cofactors.
//! * [`grid`]: the doubled-coordinate lattice, configurations, validation,
//!   vertex orders, path decomposition, components, five-vertex diagnostics,
//!   seeded sampling.
//! * [`mte`]: the polynomial commutation equation, configuration/solution
//!   translation in both directions, parameter normalization.
//! * [`algebra`]: the normal-form engine for algebra elements, order
//!   profiles, central elements and their polynomial lifts, canonical
//!   weight-space generators, quotient reduction, nilpotency indices,
//!   the Serre-type check, and a small expression language for identities.
//! * [`repcls`]: classification and explicit matrix realization of simple
//!   weight modules, with independent verification and a lazy evaluator
//!   for infinite-dimensional modules.
//! * [`render`]: SVG and ASCII drawings of a fundamental strip.
//! * [`fixtures`]: named worked examples used by the test suite and the
//!   `verify-examples` subcommand.
//!
//! All arithmetic is exact; floating point appears nowhere in the public
//! interface or the internals.

pub mod algebra;
pub mod fixtures;
pub mod grid;
pub mod mte;
pub mod qpoly;
pub mod render;
pub mod repcls;
