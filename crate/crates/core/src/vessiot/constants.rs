//! Vessiot structure constants, their Jacobi conditions and label actions.

use super::forms::Form;
use super::geometry::{christoffel, inverse, riemann};
use super::object::{Family, GeometricObject, ObjectData};
use crate::error::{Error, Result};
use crate::foundation::{format_rational, ExactMatrix, RatFun, Rational};
use crate::lie_deform::{change_basis, jacobi_residual, StructureConstants};
use num_traits::{One, Zero};
use serde_json::{json, Value};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VessiotConstants {
    Coframe(StructureConstants),
    Metric(Rational),
    ContactDensity(Rational),
    /// (c', c'') with d(alpha) = c' beta, d(beta) = c'' alpha ^ beta
    UnimodularContact(Rational, Rational),
}

/// Sign convention for coframe constants: the Vessiot side
/// d_i omega^tau_j - d_j omega^tau_i = c^tau_{rho sigma} omega^rho_i omega^sigma_j,
/// or the Maurer-Cartan side with all signs flipped.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum McSign {
    #[default]
    Vessiot,
    MaurerCartan,
}

fn constant(f: &RatFun, what: &str) -> Result<Rational> {
    f.constant_value()
        .ok_or_else(|| Error::NotAStructure(format!("{what} = {f} is not constant")))
}

impl VessiotConstants {
    pub fn family(&self) -> Family {
        match self {
            VessiotConstants::Coframe(_) => Family::Coframe,
            VessiotConstants::Metric(_) => Family::Metric,
            VessiotConstants::ContactDensity(_) => Family::ContactDensity,
            VessiotConstants::UnimodularContact(..) => Family::UnimodularContact,
        }
    }

    pub fn to_json_value(&self) -> Value {
        let r = |x: &Rational| Value::String(format_rational(x));
        match self {
            VessiotConstants::Coframe(c) => {
                let entries: Vec<Value> = c
                    .entries()
                    .iter()
                    .map(
                        |(a, b, t, v)| json!({"rho": a + 1, "sigma": b + 1, "tau": t + 1, "value": format_rational(v)}),
                    )
                    .collect();
                json!({"family": "coframe", "dim": c.dim(), "brackets": entries})
            }
            VessiotConstants::Metric(c) => json!({"family": "metric", "c": r(c)}),
            VessiotConstants::ContactDensity(c) => json!({"family": "contact_density", "c": r(c)}),
            VessiotConstants::UnimodularContact(a, b) => {
                json!({"family": "unimodular_contact", "c1": r(a), "c2": r(b)})
            }
        }
    }

    /// Parses {"family": ..., "c": ...} / {"c1", "c2"} / {"dim", "brackets"}.
    pub fn from_value(v: &Value) -> Result<Self> {
        let fam = v
            .get("family")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing 'family'".into()))?;
        let num = |k: &str| -> Result<Rational> {
            match v.get(k) {
                Some(Value::String(s)) => crate::foundation::parse_rational(s),
                Some(Value::Number(x)) if x.is_i64() => Ok(Rational::from_integer(x.as_i64().unwrap_or(0).into())),
                _ => Err(Error::Parse(format!("missing or non-exact '{k}'"))),
            }
        };
        match Family::parse(fam)? {
            Family::Coframe => Ok(VessiotConstants::Coframe(StructureConstants::from_json(
                &v.to_string(),
            )?)),
            Family::Metric => Ok(VessiotConstants::Metric(num("c")?)),
            Family::ContactDensity => Ok(VessiotConstants::ContactDensity(num("c")?)),
            Family::UnimodularContact => Ok(VessiotConstants::UnimodularContact(num("c1")?, num("c2")?)),
        }
    }

    /// Short human-readable form, e.g. "c=(1, 0)".
    pub fn describe(&self) -> String {
        match self {
            VessiotConstants::Coframe(c) => {
                let e: Vec<String> = c
                    .entries()
                    .iter()
                    .map(|(a, b, t, v)| format!("c^{}_{}{}={}", t + 1, a + 1, b + 1, format_rational(v)))
                    .collect();
                if e.is_empty() {
                    "c=0".into()
                } else {
                    e.join(" ")
                }
            }
            VessiotConstants::Metric(c) | VessiotConstants::ContactDensity(c) => format!("c={}", format_rational(c)),
            VessiotConstants::UnimodularContact(a, b) => {
                format!("c=({}, {})", format_rational(a), format_rational(b))
            }
        }
    }
}

/// Coframe constants c^tau_{rho sigma} = alpha^i_rho alpha^j_sigma (d_i omega^tau_j - d_j omega^tau_i)
/// with alpha the inverse of omega, under the given sign convention.
pub fn coframe_constants(w: &[Vec<RatFun>], sign: McSign) -> Result<StructureConstants> {
    let n = w.len();
    let alpha = inverse(w)?; // alpha[i][rho]
    let mut c = StructureConstants::zero(n);
    for tau in 0..n {
        for rho in 0..n {
            for sigma in rho + 1..n {
                let mut acc = RatFun::zero();
                for i in 0..n {
                    for j in 0..n {
                        let a = &alpha[i][rho] * &alpha[j][sigma];
                        if a.is_zero() {
                            continue;
                        }
                        let curl = &w[tau][j].derivative(i) - &w[tau][i].derivative(j);
                        acc = &acc + &(&a * &curl);
                    }
                }
                let mut v = constant(&acc, &format!("c^{}_{}{}", tau + 1, rho + 1, sigma + 1))?;
                if sign == McSign::MaurerCartan {
                    v = -v;
                }
                c.set(rho, sigma, tau, v)?;
            }
        }
    }
    // residual of the structure equations
    for tau in 0..n {
        for i in 0..n {
            for j in 0..n {
                let mut rhs = RatFun::zero();
                for rho in 0..n {
                    for sigma in 0..n {
                        let v = c.get(rho, sigma, tau);
                        if !v.is_zero() {
                            rhs = &rhs + &(&w[rho][i] * &w[sigma][j]).scale(v);
                        }
                    }
                }
                if sign == McSign::MaurerCartan {
                    rhs = -rhs;
                }
                if &w[tau][j].derivative(i) - &w[tau][i].derivative(j) != rhs {
                    return Err(Error::NotAStructure(
                        "coframe structure equations have a nonzero residual".into(),
                    ));
                }
            }
        }
    }
    Ok(c)
}

/// The constant c in rho^k_lij = c (delta^k_i omega_lj - delta^k_j omega_li).
pub fn metric_constant(g: &[Vec<RatFun>]) -> Result<Rational> {
    let n = g.len();
    if n < 2 {
        return Err(Error::Unsupported("constant-curvature structures need n >= 2".into()));
    }
    let rho = riemann(&christoffel(g)?).rho;
    let model = |k: usize, l: usize, i: usize, j: usize| -> RatFun {
        let mut v = RatFun::zero();
        if k == i {
            v = &v + &g[l][j];
        }
        if k == j {
            v = &v - &g[l][i];
        }
        v
    };
    let mut c: Option<RatFun> = None;
    'find: for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    let m = model(k, l, i, j);
                    if !m.is_zero() {
                        c = Some(&rho[k][l][i][j] / &m);
                        break 'find;
                    }
                }
            }
        }
    }
    let c = c.ok_or_else(|| Error::Degenerate("metric has no nonzero curvature model component".into()))?;
    let cv = constant(&c, "c")?;
    for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in 0..n {
                    if rho[k][l][i][j] != model(k, l, i, j).scale(&cv) {
                        return Err(Error::NotAStructure(format!(
                            "curvature is not of constant type (component rho^{}_{}{}{})",
                            k + 1,
                            l + 1,
                            i + 1,
                            j + 1
                        )));
                    }
                }
            }
        }
    }
    Ok(cv)
}

/// omega_1(d_2 omega_3 - d_3 omega_2) + omega_2(d_3 omega_1 - d_1 omega_3) + omega_3(d_1 omega_2 - d_2 omega_1).
pub fn contact_constant(w: &[RatFun]) -> Result<Rational> {
    let a = Form::one_form(w);
    let v = a.wedge(&a.d())?;
    constant(&v.components()[0], "omega ^ d(omega)")
}

/// (c', c'') with d(alpha) = c' beta and d(beta) = c'' alpha ^ beta.
pub fn unimodular_constants(alpha: &[RatFun], beta: &[Vec<RatFun>]) -> Result<(Rational, Rational)> {
    let a = Form::one_form(alpha);
    let b = Form::two_form(beta)?;
    let c1 = a
        .d()
        .ratio(&b)?
        .ok_or_else(|| Error::NotAStructure("d(alpha) is not a multiple of beta".into()))?;
    let gamma = a.wedge(&b)?;
    let c2 = b
        .d()
        .ratio(&gamma)?
        .ok_or_else(|| Error::NotAStructure("d(beta) is not a multiple of alpha ^ beta".into()))?;
    Ok((constant(&c1, "c'")?, constant(&c2, "c''")?))
}

/// Solves the family's structure equations for constant coefficients.
pub fn vessiot_constants(obj: &GeometricObject) -> Result<VessiotConstants> {
    vessiot_constants_with(obj, McSign::Vessiot)
}

pub fn vessiot_constants_with(obj: &GeometricObject, sign: McSign) -> Result<VessiotConstants> {
    let vc = match &obj.data {
        ObjectData::Coframe(w) => VessiotConstants::Coframe(coframe_constants(w, sign)?),
        ObjectData::Metric(g) => VessiotConstants::Metric(metric_constant(g)?),
        ObjectData::ContactDensity(w) => VessiotConstants::ContactDensity(contact_constant(w)?),
        ObjectData::UnimodularContact { alpha, beta } => {
            let (a, b) = unimodular_constants(alpha, beta)?;
            VessiotConstants::UnimodularContact(a, b)
        }
    };
    if let JacobiCheck::Violated(w) = jacobi_condition(&vc) {
        return Err(Error::JacobiViolated(w));
    }
    Ok(vc)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum JacobiCheck {
    Holds,
    Violated(String),
}

impl JacobiCheck {
    pub fn holds(&self) -> bool {
        matches!(self, JacobiCheck::Holds)
    }
}

/// J(c) = 0 for coframes, c'c'' = 0 for unimodular contact structures,
/// nothing for metrics and contact densities.
pub fn jacobi_condition(vc: &VessiotConstants) -> JacobiCheck {
    match vc {
        VessiotConstants::Coframe(c) => {
            let r = jacobi_residual(c);
            match r.entries().first() {
                None => JacobiCheck::Holds,
                Some((idx, tau, v)) => JacobiCheck::Violated(format!(
                    "J(c) = {} on (e{}, e{}, e{}) in component {}",
                    format_rational(v),
                    idx[0] + 1,
                    idx[1] + 1,
                    idx[2] + 1,
                    tau + 1
                )),
            }
        }
        VessiotConstants::Metric(_) | VessiotConstants::ContactDensity(_) => JacobiCheck::Holds,
        VessiotConstants::UnimodularContact(a, b) => {
            let p = a * b;
            if p.is_zero() {
                JacobiCheck::Holds
            } else {
                JacobiCheck::Violated(format!("c′c″ = {}", format_rational(&p)))
            }
        }
    }
}

/// Parameters of a label transformation omega -> a omega.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LabelParams {
    /// a in GL(n) acting on the coframe index
    Coframe(ExactMatrix),
    Scalar(Rational),
    /// (alpha, beta) -> (a alpha, b beta)
    Pair(Rational, Rational),
}

impl LabelParams {
    pub fn identity(vc: &VessiotConstants) -> Self {
        match vc {
            VessiotConstants::Coframe(c) => LabelParams::Coframe(ExactMatrix::identity(c.dim())),
            VessiotConstants::Metric(_) | VessiotConstants::ContactDensity(_) => LabelParams::Scalar(Rational::one()),
            VessiotConstants::UnimodularContact(..) => LabelParams::Pair(Rational::one(), Rational::one()),
        }
    }

    /// Parameters of applying `self` first and `then` second.
    pub fn then(&self, then: &LabelParams) -> Result<LabelParams> {
        match (self, then) {
            (LabelParams::Coframe(a), LabelParams::Coframe(b)) => Ok(LabelParams::Coframe(b.mul(a)?)),
            (LabelParams::Scalar(a), LabelParams::Scalar(b)) => Ok(LabelParams::Scalar(a * b)),
            (LabelParams::Pair(a, b), LabelParams::Pair(c, d)) => Ok(LabelParams::Pair(a * c, b * d)),
            _ => Err(Error::Invalid("label parameters of different families".into())),
        }
    }

    pub fn from_value(v: &Value) -> Result<Self> {
        let rat = |x: &Value| -> Result<Rational> {
            match x {
                Value::String(s) => crate::foundation::parse_rational(s),
                Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
                _ => Err(Error::Parse("label parameters must be exact rationals".into())),
            }
        };
        if let Some(a) = v.get("matrix") {
            let rows = a
                .as_array()
                .ok_or_else(|| Error::Parse("matrix: expected rows".into()))?;
            let m = rows
                .iter()
                .map(|r| {
                    r.as_array()
                        .ok_or_else(|| Error::Parse("matrix row".into()))?
                        .iter()
                        .map(rat)
                        .collect()
                })
                .collect::<Result<Vec<Vec<Rational>>>>()?;
            return Ok(LabelParams::Coframe(ExactMatrix::from_rows(m)?));
        }
        match (v.get("a"), v.get("b")) {
            (Some(a), Some(b)) => Ok(LabelParams::Pair(rat(a)?, rat(b)?)),
            (Some(a), None) => Ok(LabelParams::Scalar(rat(a)?)),
            _ => Err(Error::Parse("label_params needs 'a', 'a' and 'b', or 'matrix'".into())),
        }
    }
}

/// The induced action c -> h(c, a) of a label transformation.
pub fn label_action(vc: &VessiotConstants, p: &LabelParams) -> Result<VessiotConstants> {
    let nonzero = |x: &Rational| {
        if x.is_zero() {
            Err(Error::Degenerate("label parameter must be nonzero".into()))
        } else {
            Ok(())
        }
    };
    match (vc, p) {
        (VessiotConstants::Coframe(c), LabelParams::Coframe(a)) => {
            let inv = a
                .inverse()
                .map_err(|_| Error::Degenerate("label matrix is singular".into()))?;
            Ok(VessiotConstants::Coframe(change_basis(c, &inv)?))
        }
        (VessiotConstants::Metric(c), LabelParams::Scalar(a)) => {
            nonzero(a)?;
            Ok(VessiotConstants::Metric(c / a))
        }
        (VessiotConstants::ContactDensity(c), LabelParams::Scalar(a)) => {
            nonzero(a)?;
            Ok(VessiotConstants::ContactDensity(a * a * c))
        }
        (VessiotConstants::UnimodularContact(c1, c2), LabelParams::Pair(a, b)) => {
            nonzero(a)?;
            nonzero(b)?;
            Ok(VessiotConstants::UnimodularContact(a / b * c1, c2 / a))
        }
        _ => Err(Error::Invalid(format!(
            "label parameters do not match family {}",
            vc.family()
        ))),
    }
}

/// The transformed object a omega.
pub fn label_object(obj: &GeometricObject, p: &LabelParams) -> Result<GeometricObject> {
    let sc = |v: &[RatFun], a: &Rational| v.iter().map(|x| x.scale(a)).collect::<Vec<_>>();
    let data = match (&obj.data, p) {
        (ObjectData::Coframe(w), LabelParams::Coframe(a)) => {
            let n = w.len();
            if a.rows() != n || a.cols() != n {
                return Err(Error::Dimension(format!("label matrix must be {n}x{n}")));
            }
            let rows = (0..n)
                .map(|t| {
                    (0..n)
                        .map(|i| (0..n).fold(RatFun::zero(), |acc, s| &acc + &w[s][i].scale(&a[(t, s)])))
                        .collect()
                })
                .collect();
            ObjectData::Coframe(rows)
        }
        (ObjectData::Metric(g), LabelParams::Scalar(a)) => ObjectData::Metric(g.iter().map(|r| sc(r, a)).collect()),
        (ObjectData::ContactDensity(w), LabelParams::Scalar(a)) => ObjectData::ContactDensity(sc(w, a)),
        (ObjectData::UnimodularContact { alpha, beta }, LabelParams::Pair(a, b)) => ObjectData::UnimodularContact {
            alpha: sc(alpha, a),
            beta: beta.iter().map(|r| sc(r, b)).collect(),
        },
        _ => {
            return Err(Error::Invalid(
                "label parameters do not match the object's family".into(),
            ))
        }
    };
    GeometricObject::new(obj.n, data)
}
