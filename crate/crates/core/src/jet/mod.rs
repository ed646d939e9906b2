//! Formal jet calculus: multi-indices, jet sections, brackets, linear
//! systems, prolongation, symbols and involutivity.

mod analysis;
mod bracket;
mod closure;
pub mod examples;
mod lie_rows;
mod multi_index;
mod section;
mod spencer;
mod system;

pub use analysis::{
    delta_report, formal_integrability_report, involutivity, janet_bundle_dims, prolongation_dim, symbol_at,
    symbol_generic, symbol_tower, IntegrabilityReport, InvolutivityReport, JanetDims, LevelDims,
};
pub use bracket::{
    algebraic_bracket, bracket, differential_bracket, differential_bracket_of_lifts, formal_lie_derivative,
    formal_lie_derivative_alt, lie_derivative_of_field,
};
pub use closure::{algebroid_closure_check, parametric_sections, ClosureCounterexample, ClosureReport, SolvedForm};
pub use lie_rows::{
    contact_density_system, density_row, metric_system, one_and_two_form_system, one_form_rows, one_form_system,
    two_tensor_rows, weighted_one_form_rows,
};
pub use multi_index::{grade_offset, jet_decode, jet_dim, jet_index, of_order, sym_dim, up_to, MultiIndex};
pub use section::{contract_spencer, random_poly, random_section, spencer_operator, JetSection};
pub use spencer::{delta_cohomology_dims, spencer_delta_matrix, DeltaSpot, SymbolSpace};
pub use system::{LinearJetSystem, Row};
