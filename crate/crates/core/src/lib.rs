//! Probability of single-photon emission by vacuum-stimulated Raman
//! scattering on a degenerate Λ atom in a resonant cavity.
//!
//! The excited hyperfine structure is treated as unresolved and the ground
//! hyperfine structure as resolved. The crate is `no_std` (with `alloc`):
//! angular-momentum algebra, dipole operators, the ground-manifold kernel
//! and a brute-force atom⊗Fock oracle. IO and the command line live in the
//! companion `raman-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod angular;
pub mod dipole;
pub mod error;
pub mod kernel;
pub mod linalg;
pub mod operator;
pub mod oracle;
pub mod polarization;
pub mod scheme;

pub use angular::{triangle_ok, wigner_3j, wigner_6j, HalfInt};
pub use dipole::{
    build_g, project, reduced_coupling, reduced_rabi, DipoleComponents, PhysicalParams,
};
pub use error::{AngularError, Error, OperatorError, SchemeError};
pub use kernel::{
    bridge_identity_check, emission_probability, emission_probability_qb, qa_squared_direct,
    qa_squared_summed, EmissionResult, RamanInput,
};
pub use linalg::{matrix_cos, matrix_sinc2_half};
pub use operator::LabeledOperator;
pub use oracle::{build_generator, closed_form_s, evolve_and_measure, FockBasis};
pub use polarization::{linear_pair, pol_tensor, PolTensor, PolVector};
pub use scheme::{BasisLabel, BasisLayout, LevelScheme, Manifold};

pub type Result<T> = core::result::Result<T, Error>;

pub use num_complex::Complex64;
