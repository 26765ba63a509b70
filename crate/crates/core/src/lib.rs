//! Exact computer algebra for the universal enveloping superalgebra
//! `U(osp(1|2n))`.
//!
//! The crate provides, over exact rationals only:
//!
//! * the free superalgebra on the Cartan–Weyl generators and a rewrite
//!   engine producing PBW normal forms for configurable generator orders
//!   ([`pbw`]), with an independent naive engine for differential testing;
//! * the standard adjoint action and the nonstandard triangle action,
//!   together with mechanical verification of its module identities
//!   ([`action`]);
//! * the `4^n`-dimensional bracket space Ω, its closed-form `sp(2n)`
//!   action, the projection onto `U(sp(2n)) ⊗ Ω` coordinates, weights,
//!   highest weight vectors, and submodule dimensions ([`omega`]);
//! * the Scasimir operator built by three independent coefficient routes,
//!   its ghost property, its square's centrality, and the coefficient sum
//!   rule ([`scasimir`]);
//! * the bosonic-oscillator quotient in which the Scasimir vanishes
//!   ([`weyl`]);
//! * the Harish-Chandra projection and shift automorphism ([`hc`]);
//! * a `(2n+1)`-dimensional matrix representation solved from the
//!   relations, used as a cross-engine oracle ([`rep`]).
//!
//! Everything is a pure function of its inputs; the per-thread caches
//! behind the rewrite engine and the bracket expansions make concurrent
//! use safe without coordination.

pub mod action;
pub mod algebra;
pub mod error;
pub mod hc;
pub mod linalg;
pub mod omega;
pub mod pbw;
pub mod rep;
pub mod report;
pub mod sample;
pub mod scalar;
pub mod scasimir;
pub mod series;
pub mod weyl;

pub use action::{adjoint, triangle, verify_module_axioms};
pub use algebra::{
    all_generators, graded_commutator, metric, multiply, Element, Generator, Word,
};
pub use error::AlgebraError;
pub use hc::{
    gamma_shift, hc_project, hc_project_with_order, hc_scasimir_image, hc_square_image,
    verify_hc_scasimir, verify_hc_square, CartanPolynomial, ShiftDirection,
};
pub use linalg::{RatMatrix, RowSpace};
pub use omega::{
    all_brackets, bracket_expand, check_osp12_filtration, highest_weight_vectors, omega_expand,
    project_to_tensor, simple_positive_roots, sp_action, sp_action_on_bracket, submodule_dimension,
    tensor_reconstruct, triangle_on_omega, verify_filtration, verify_hwv, verify_stability,
    weight_vector, Bracket, OmegaElement, TensorElement,
};
pub use pbw::{
    classify_root, is_normal_form, naive_normal_order, normal_order, verify_pbw_oracle,
    GeneratorOrder, RootClass,
};
pub use report::{Report, Status};
pub use scalar::{rat, Rat};
pub use scasimir::{
    a_poly, coeffs, coeffs_recursion_a, coeffs_recursion_b, coeffs_series, scasimir, scasimir_pbw,
    scasimir_square, sum_rule, verify_ghost, verify_ghost_in_omega, verify_routes,
    verify_square_central, verify_sum_rule, CoeffTable, Route,
};
pub use rep::{evaluate, fundamental_rep, trivial_rep, verify_rep_ghost, Representation};
pub use series::PowerSeries;
pub use weyl::{a_value, verify_oscillator, verify_vanishing, weyl_reduce, WeylElement};
