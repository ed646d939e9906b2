//! Geometric objects of four structure families: Medolaghi systems, Vessiot
//! structure constants, label actions and the deformation sequence.

mod constants;
pub mod fixtures;
mod forms;
mod geometry;
mod medolaghi;
mod object;
mod sequence;

pub use constants::{
    coframe_constants, contact_constant, jacobi_condition, label_action, label_object, metric_constant,
    unimodular_constants, vessiot_constants, vessiot_constants_with, JacobiCheck, LabelParams, McSign,
    VessiotConstants,
};
pub use forms::Form;
pub use geometry::{christoffel, curvature_components, riemann, ChristoffelField, CurvatureField};
pub use medolaghi::{medolaghi_system, metric_second_order_system};
pub use object::{Family, GeometricObject, ObjectData};
pub use sequence::{
    centralizer, centralizer_dim, centralizer_image, deformation_sequence, invariant_sections, normalizer_quotient,
    object_janet_dims, vessiot_deformation_check, CentralizerDims, DeformationCheck, DeformationSequenceReport,
    InvariantSections, NormalizerReport,
};
