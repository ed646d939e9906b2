//! Geometric objects of the four supported families.

use super::forms::Form;
use crate::error::{Error, Result};
use crate::foundation::{FnMatrix, RatFun};
use serde::{Deserialize, Serialize};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    Coframe,
    Metric,
    ContactDensity,
    UnimodularContact,
}

impl Family {
    pub fn as_str(&self) -> &'static str {
        match self {
            Family::Coframe => "coframe",
            Family::Metric => "metric",
            Family::ContactDensity => "contact_density",
            Family::UnimodularContact => "unimodular_contact",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "coframe" => Ok(Family::Coframe),
            "metric" => Ok(Family::Metric),
            "contact_density" => Ok(Family::ContactDensity),
            "unimodular_contact" => Ok(Family::UnimodularContact),
            other => Err(Error::Unsupported(format!("unknown family '{other}'"))),
        }
    }
}

impl std::fmt::Display for Family {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ObjectData {
    /// omega[tau][i]: the 1-forms omega^tau = omega^tau_i dx^i
    Coframe(Vec<Vec<RatFun>>),
    /// symmetric omega[i][j]
    Metric(Vec<Vec<RatFun>>),
    /// 1-form density (omega_1, omega_2, omega_3)
    ContactDensity(Vec<RatFun>),
    /// 1-form alpha and 2-form beta (antisymmetric matrix)
    UnimodularContact { alpha: Vec<RatFun>, beta: Vec<Vec<RatFun>> },
}

/// A validated geometric object on R^n, optionally with known
/// infinitesimal generators of its symmetry algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeometricObject {
    pub n: usize,
    pub data: ObjectData,
    pub name: Option<String>,
    pub generators: Vec<Vec<RatFun>>,
}

fn expr(v: &Value, n: usize, what: &str) -> Result<RatFun> {
    let s = match v {
        Value::String(s) => s.clone(),
        Value::Number(x) if x.is_i64() => x.to_string(),
        _ => return Err(Error::Parse(format!("{what}: expected an expression string"))),
    };
    RatFun::parse_in(&s, n).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn vector(v: &Value, n: usize, what: &str) -> Result<Vec<RatFun>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what}: expected an array")))?;
    if arr.len() != n {
        return Err(Error::Dimension(format!(
            "{what}: expected {n} entries, found {}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, x)| expr(x, n, &format!("{what}[{}]", i + 1)))
        .collect()
}

fn matrix(v: &Value, n: usize, what: &str) -> Result<Vec<Vec<RatFun>>> {
    let arr = v
        .as_array()
        .ok_or_else(|| Error::Parse(format!("{what}: expected an array of rows")))?;
    if arr.len() != n {
        return Err(Error::Dimension(format!(
            "{what}: expected {n} rows, found {}",
            arr.len()
        )));
    }
    arr.iter()
        .enumerate()
        .map(|(i, r)| vector(r, n, &format!("{what} row {}", i + 1)))
        .collect()
}

/// beta given as {"23": b23, "31": b31, "12": b12} or as a 3x3 matrix.
fn beta_matrix(v: &Value) -> Result<Vec<Vec<RatFun>>> {
    if v.is_array() {
        let b = matrix(v, 3, "beta")?;
        Form::two_form(&b).map_err(|_| Error::Invalid("beta must be antisymmetric".into()))?;
        return Ok(b);
    }
    let obj = v
        .as_object()
        .ok_or_else(|| Error::Parse("beta: expected an object or matrix".into()))?;
    let mut b = vec![vec![RatFun::zero(); 3]; 3];
    for (k, x) in obj {
        let (i, j) = match k.as_str() {
            "23" => (1, 2),
            "31" => (2, 0),
            "12" => (0, 1),
            "32" => (2, 1),
            "13" => (0, 2),
            "21" => (1, 0),
            _ => return Err(Error::Parse(format!("beta: unknown component '{k}'"))),
        };
        let e = expr(x, 3, &format!("beta[{k}]"))?;
        if !b[i][j].is_zero() {
            return Err(Error::Parse(format!("beta: component {k} given twice")));
        }
        b[j][i] = -&e;
        b[i][j] = e;
    }
    Ok(b)
}

impl GeometricObject {
    pub fn new(n: usize, data: ObjectData) -> Result<Self> {
        let o = GeometricObject {
            n,
            data,
            name: None,
            generators: Vec::new(),
        };
        o.validate()?;
        Ok(o)
    }

    pub fn family(&self) -> Family {
        match self.data {
            ObjectData::Coframe(_) => Family::Coframe,
            ObjectData::Metric(_) => Family::Metric,
            ObjectData::ContactDensity(_) => Family::ContactDensity,
            ObjectData::UnimodularContact { .. } => Family::UnimodularContact,
        }
    }

    fn validate(&self) -> Result<()> {
        let n = self.n;
        if n == 0 {
            return Err(Error::Invalid("base dimension must be positive".into()));
        }
        let square = |m: &Vec<Vec<RatFun>>| m.len() == n && m.iter().all(|r| r.len() == n);
        match &self.data {
            ObjectData::Coframe(w) => {
                if !square(w) {
                    return Err(Error::Dimension(format!("coframe must be {n}x{n}")));
                }
                if FnMatrix::from_rows(w.clone())?.rank() < n {
                    return Err(Error::Degenerate("det(omega) vanishes identically".into()));
                }
            }
            ObjectData::Metric(g) => {
                if !square(g) {
                    return Err(Error::Dimension(format!("metric must be {n}x{n}")));
                }
                for i in 0..n {
                    for j in 0..n {
                        if g[i][j] != g[j][i] {
                            return Err(Error::Invalid("metric must be symmetric".into()));
                        }
                    }
                }
                if FnMatrix::from_rows(g.clone())?.rank() < n {
                    return Err(Error::Degenerate("det(omega) vanishes identically".into()));
                }
            }
            ObjectData::ContactDensity(w) => {
                if n != 3 {
                    return Err(Error::Unsupported(format!(
                        "contact densities are supported for n = 3 only, got n = {n}"
                    )));
                }
                if w.len() != 3 {
                    return Err(Error::Dimension("contact density needs 3 components".into()));
                }
                if w.iter().all(RatFun::is_zero) {
                    return Err(Error::Degenerate("omega vanishes identically".into()));
                }
            }
            ObjectData::UnimodularContact { alpha, beta } => {
                if n != 3 {
                    return Err(Error::Unsupported(format!(
                        "unimodular contact structures need n = 3, got n = {n}"
                    )));
                }
                if alpha.len() != 3 || !square(beta) {
                    return Err(Error::Dimension(
                        "alpha needs 3 components and beta a 3x3 matrix".into(),
                    ));
                }
                let g = Form::one_form(alpha).wedge(&Form::two_form(beta)?)?;
                if g.is_zero() {
                    return Err(Error::Degenerate("alpha ^ beta vanishes identically".into()));
                }
            }
        }
        for g in &self.generators {
            if g.len() != n {
                return Err(Error::Dimension("generator has the wrong number of components".into()));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Self::from_value(&v)
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let fam = v
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing 'family'".into()))?;
        let family = Family::parse(fam)?;
        let n = v
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing 'n'".into()))? as usize;
        let field = |k: &str| v.get(k).ok_or_else(|| Error::Parse(format!("missing '{k}'")));
        let data = match family {
            Family::Coframe => ObjectData::Coframe(matrix(field("omega")?, n, "omega")?),
            Family::Metric => ObjectData::Metric(matrix(field("omega")?, n, "omega")?),
            Family::ContactDensity => {
                if n != 3 {
                    return Err(Error::Unsupported(format!(
                        "contact densities are supported for n = 3 only, got n = {n}"
                    )));
                }
                ObjectData::ContactDensity(vector(field("omega")?, n, "omega")?)
            }
            Family::UnimodularContact => {
                if n != 3 {
                    return Err(Error::Unsupported(format!(
                        "unimodular contact structures need n = 3, got n = {n}"
                    )));
                }
                ObjectData::UnimodularContact {
                    alpha: vector(field("alpha")?, n, "alpha")?,
                    beta: beta_matrix(field("beta")?)?,
                }
            }
        };
        let generators = match v.get("generators") {
            None => Vec::new(),
            Some(g) => g
                .as_array()
                .ok_or_else(|| Error::Parse("generators: expected an array".into()))?
                .iter()
                .enumerate()
                .map(|(i, x)| vector(x, n, &format!("generator {}", i + 1)))
                .collect::<Result<_>>()?,
        };
        let name = v.get("name").and_then(Value::as_str).map(str::to_string);
        let o = GeometricObject {
            n,
            data,
            name,
            generators,
        };
        o.validate()?;
        Ok(o)
    }

    pub fn to_json_value(&self) -> Value {
        let s = |f: &RatFun| Value::String(f.to_string());
        let vecj = |v: &[RatFun]| Value::Array(v.iter().map(s).collect());
        let matj = |m: &[Vec<RatFun>]| Value::Array(m.iter().map(|r| vecj(r)).collect());
        let mut out = Map::new();
        if let Some(nm) = &self.name {
            out.insert("name".into(), json!(nm));
        }
        out.insert("family".into(), json!(self.family().as_str()));
        out.insert("n".into(), json!(self.n));
        match &self.data {
            ObjectData::Coframe(w) | ObjectData::Metric(w) => {
                out.insert("omega".into(), matj(w));
            }
            ObjectData::ContactDensity(w) => {
                out.insert("omega".into(), vecj(w));
            }
            ObjectData::UnimodularContact { alpha, beta } => {
                out.insert("alpha".into(), vecj(alpha));
                out.insert(
                    "beta".into(),
                    json!({"23": beta[1][2].to_string(), "31": beta[2][0].to_string(), "12": beta[0][1].to_string()}),
                );
            }
        }
        if !self.generators.is_empty() {
            out.insert(
                "generators".into(),
                Value::Array(self.generators.iter().map(|g| vecj(g)).collect()),
            );
        }
        Value::Object(out)
    }
}
