//! Structure constants, the Chevalley-Eilenberg complex with adjoint
//! coefficients, rigidity and formal deformations.

pub mod catalog;
mod cochain;
mod complex;
mod constants;
mod deformation;

pub use cochain::{binomial, jacobi_residual, mixed_jacobi, sort_sign, subset_rank, subsets, Cochain};
pub use complex::{
    ce_differential, ce_differential_matrix, cohomology, derivations, inner_derivations, is_rigid_sufficient,
    CohomologyDims, RigidityVerdict,
};
pub use constants::{change_basis, StructureConstants};
pub use deformation::{deformation_residual, extend_deformation, hessian_obstruction, Extension, ExtensionSummary};
