//! Built-in geometric objects (special sections of each family).

use super::object::GeometricObject;
use crate::error::Result;

macro_rules! fixture {
    ($name:literal) => {
        ($name, include_str!(concat!("../../data/objects/", $name, ".json")))
    };
}

/// (name, JSON source) of every built-in object.
pub const OBJECTS: &[(&str, &str)] = &[
    fixture!("contact_special"),
    fixture!("contact_flat"),
    fixture!("unimodular_special"),
    fixture!("unimodular_flat"),
    fixture!("unimodular_third"),
    fixture!("coframe_affine"),
    fixture!("coframe_flat"),
    fixture!("metric_sphere"),
    fixture!("metric_polar"),
];

/// Constants that violate the unimodular Jacobi condition c'c'' = 0.
pub const JACOBI_VIOLATED: &str = include_str!("../../data/objects/jacobi_violated.json");

pub fn object(name: &str) -> Result<GeometricObject> {
    let src = OBJECTS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| crate::Error::Invalid(format!("no built-in object '{name}'")))?;
    GeometricObject::from_json(src)
}

pub fn all() -> Result<Vec<GeometricObject>> {
    OBJECTS.iter().map(|(_, s)| GeometricObject::from_json(s)).collect()
}
