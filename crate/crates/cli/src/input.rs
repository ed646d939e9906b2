//! Input files: algebras, cochains, jet systems, geometric objects and
//! Vessiot constants, told apart by their keys.

use crate::error::{CliError, CliResult};
use liedef::jet::LinearJetSystem;
use liedef::lie_deform::{catalog, Cochain, StructureConstants};
use liedef::vessiot::{medolaghi_system, GeometricObject, LabelParams, VessiotConstants};
use serde_json::Value;
use std::path::Path;

pub enum Input {
    Algebra(StructureConstants),
    Cochain(Cochain),
    System(LinearJetSystem),
    Object(GeometricObject, Option<LabelParams>),
    Constants(VessiotConstants, Option<LabelParams>),
    /// (C', C'') for the unimodular deformation check
    VessiotCocycle,
}

pub fn read_value(path: &str) -> CliResult<Value> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::input(format!("cannot read {path}: {e}")))?;
    serde_json::from_str(&text).map_err(|e| CliError::input(format!("{path}: {e}")))
}

pub fn classify(v: &Value) -> CliResult<Input> {
    let has = |k: &str| v.get(k).is_some();
    let params = match v.get("label_params") {
        Some(p) => Some(LabelParams::from_value(p)?),
        None => None,
    };
    if has("family") {
        if has("c") || has("c1") || (has("brackets") && !has("omega")) {
            return Ok(Input::Constants(VessiotConstants::from_value(v)?, params));
        }
        return Ok(Input::Object(GeometricObject::from_value(v)?, params));
    }
    if has("C1") && has("C2") {
        return Ok(Input::VessiotCocycle);
    }
    let text = v.to_string();
    if has("brackets") {
        return Ok(Input::Algebra(StructureConstants::from_json(&text)?));
    }
    if has("components") {
        return Ok(Input::Cochain(Cochain::from_json(&text)?));
    }
    if has("rows") {
        return Ok(Input::System(LinearJetSystem::from_json(&text)?));
    }
    Err(CliError::input("unrecognized input file".to_string()))
}

/// Reads a file, or resolves a built-in algebra name such as `heisenberg`.
pub fn load(path: &str) -> CliResult<Input> {
    if !Path::new(path).exists() {
        let stem = Path::new(path).file_stem().and_then(|s| s.to_str()).unwrap_or(path);
        if let Some(c) = catalog::by_name(stem) {
            return Ok(Input::Algebra(c));
        }
    }
    classify(&read_value(path)?)
}

pub fn algebra(path: &str) -> CliResult<StructureConstants> {
    match load(path)? {
        Input::Algebra(c) => Ok(c),
        _ => Err(CliError::input(format!("{path}: expected structure constants"))),
    }
}

/// A jet system, or the Medolaghi system of a geometric object.
pub fn system(path: &str) -> CliResult<LinearJetSystem> {
    match load(path)? {
        Input::System(s) => Ok(s),
        Input::Object(o, _) => Ok(medolaghi_system(&o)?),
        _ => Err(CliError::input(format!(
            "{path}: expected a jet system or geometric object"
        ))),
    }
}
