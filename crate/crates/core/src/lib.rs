//! Exact computations with Sidon sets for linear forms over the rationals.
//!
//! A finite set `A` is a Sidon set for `φ = c_1 x_1 + ... + c_h x_h` when `φ`
//! takes `|A|^h` distinct values on `A^h`. The crate decides that property,
//! counts representations, computes the finite set of binary forms
//! `x_1 + c x_2` on which `A` fails (its exception set), describes the h-ary
//! failures as a hyperplane arrangement, and builds forms that are Sidon on a
//! given set by construction. All arithmetic is exact.

pub mod arrangement;
pub mod constructions;
pub mod error;
pub mod exceptions;
pub mod form;
pub mod image;
pub mod normalization;
pub mod rational;
pub mod set;

pub use arrangement::{
    canonical_vector, exception_arrangement, exception_arrangement_with, is_sidon_via_arrangement,
    HyperplaneArrangement,
};
pub use constructions::{g_adic_form, gap_stats, growth_form, growth_sequence, GapStats};
pub use error::{Result, SidonError};
pub use exceptions::{
    binary_exception_set, closure_of, difference_data, exception_set_by_testing,
    formula_exception_set, DifferenceData, ExceptionSet,
};
pub use form::LinearForm;
pub use image::{
    dilate, find_collision, is_sidon, is_sidon_of_order, phi_image, representation_profile,
    translate, Collision, Enumerator, RepresentationProfile, DEFAULT_MAX_TUPLES,
};
pub use normalization::{
    apply_affine, is_normalized, normalize_default, normalize_set, to_monic, AffineMap,
};
pub use rational::Rational;
pub use set::RationalSet;
