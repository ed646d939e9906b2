//! Invariant sections, the finite-dimensional deformation sequence,
//! normalizer and centralizer quotients, Janet bundle dimensions and the
//! order-by-order deformation check of (c', c'').

use super::constants::{jacobi_condition, JacobiCheck, VessiotConstants};
use super::forms::Form;
use super::geometry::inverse;
use super::medolaghi::medolaghi_system;
use super::object::{Family, GeometricObject, ObjectData};
use crate::error::{Error, Result};
use crate::foundation::rational::factorial;
use crate::foundation::{format_rational, rat, ExactMatrix, RatFun, Rational};
use crate::jet::{janet_bundle_dims, JanetDims};
use crate::lie_deform::{binomial, ce_differential_matrix, subsets};
use num_traits::Zero;
use serde_json::{json, Value};

/// Dimension and constant-parameter basis of an invariant-section space.
/// Spot -1 is the vector-field level C(Theta); spot r >= 0 is Upsilon_r.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvariantSections {
    pub family: Family,
    pub spot: i64,
    pub dim: usize,
    pub basis: Vec<String>,
}

fn unsupported(f: Family, r: i64) -> Error {
    Error::Unsupported(format!("invariant sections of {f} at spot {r}"))
}

/// Basis of Upsilon_r (r >= 0) or of C(Theta) (r = -1).
pub fn invariant_sections(vc: &VessiotConstants, r: i64) -> Result<InvariantSections> {
    let family = vc.family();
    let basis: Vec<String> = match vc {
        VessiotConstants::Coframe(c) => {
            let p = c.dim();
            if r < -1 || r >= p as i64 {
                return Err(unsupported(family, r));
            }
            if r == -1 {
                (1..=p).map(|t| format!("alpha_{t}")).collect()
            } else {
                let mut out = Vec::new();
                for s in subsets(p, r as usize + 1) {
                    let wedge: Vec<String> = s.iter().map(|i| format!("omega^{}", i + 1)).collect();
                    for t in 1..=p {
                        out.push(format!("e{t} {}", wedge.join("^")));
                    }
                }
                out
            }
        }
        VessiotConstants::Metric(_) | VessiotConstants::ContactDensity(_) => match r {
            -1 => Vec::new(),
            0 => vec!["A omega".into()],
            1 => vec!["C".into()],
            _ => return Err(unsupported(family, r)),
        },
        VessiotConstants::UnimodularContact(..) => match r {
            -1 => vec!["K beta~".into()],
            0 => vec!["(A alpha, 0)".into(), "(0, B beta)".into()],
            1 => vec!["(C' beta, 0)".into(), "(0, C'' gamma)".into()],
            2 => vec!["D gamma".into()],
            _ => return Err(unsupported(family, r)),
        },
    };
    Ok(InvariantSections {
        family,
        spot: r,
        dim: basis.len(),
        basis,
    })
}

/// Spaces C(Theta), Upsilon_0, Upsilon_1, ... with the maps D, D_1, D_2, ...
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeformationSequenceReport {
    pub family: Family,
    pub constants: VessiotConstants,
    /// dim C(Theta), dim Upsilon_0, dim Upsilon_1, ...
    pub dims: Vec<usize>,
    /// maps[0] = D, maps[r] = D_r: matrix of Upsilon_{r-1} -> Upsilon_r
    pub maps: Vec<ExactMatrix>,
    pub compositions_vanish: bool,
    /// dim Z(Theta) = dim ker D
    pub center: usize,
    pub centralizer: usize,
    /// dim C(Theta)/Z(Theta) = rank D
    pub centralizer_mod_center: usize,
    /// dim N(Theta)/Theta = dim ker D_1
    pub normalizer_quotient: usize,
    /// H_r at Upsilon_r
    pub cohomology: Vec<usize>,
    pub exactness_holds: bool,
}

fn nullity(m: &ExactMatrix) -> usize {
    m.cols() - m.rank()
}

fn mat(rows: Vec<Vec<Rational>>, cols: usize) -> ExactMatrix {
    ExactMatrix::from_rows_with_cols(rows, cols).expect("well-formed")
}

fn sequence_maps(vc: &VessiotConstants) -> Result<(Vec<usize>, Vec<ExactMatrix>)> {
    let z = Rational::zero;
    Ok(match vc {
        VessiotConstants::Coframe(c) => {
            let p = c.dim();
            let dims = (0..=p).map(|r| binomial(p, r) * p).collect();
            let maps = (0..p).map(|r| ce_differential_matrix(c, r)).collect::<Result<_>>()?;
            (dims, maps)
        }
        VessiotConstants::Metric(c) => (vec![0, 1, 1], vec![mat(vec![vec![]], 0), mat(vec![vec![-c]], 1)]),
        VessiotConstants::ContactDensity(c) => (
            vec![0, 1, 1],
            vec![mat(vec![vec![]], 0), mat(vec![vec![rat(2) * c]], 1)],
        ),
        VessiotConstants::UnimodularContact(c1, c2) => (
            vec![1, 2, 2, 1],
            vec![
                mat(vec![vec![z()], vec![c2.clone()]], 1),
                mat(vec![vec![c1.clone(), -c1], vec![-c2, z()]], 2),
                mat(vec![vec![c2.clone(), c1.clone()]], 2),
            ],
        ),
    })
}

/// The deformation sequence 0 -> Z -> C -> Upsilon_0 -> Upsilon_1 -> ... on
/// invariant sections, with its cohomology.
pub fn deformation_sequence(vc: &VessiotConstants) -> Result<DeformationSequenceReport> {
    if let JacobiCheck::Violated(w) = jacobi_condition(vc) {
        return Err(Error::JacobiViolated(w));
    }
    let (dims, maps) = sequence_maps(vc)?;
    let mut compositions_vanish = true;
    for w in maps.windows(2) {
        if !w[1].mul(&w[0])?.is_zero() {
            compositions_vanish = false;
        }
    }
    let mut cohomology = Vec::new();
    for r in 1..dims.len() {
        let kernel = maps.get(r).map_or(dims[r], nullity);
        cohomology.push(kernel - maps[r - 1].rank());
    }
    let centralizer_mod_center = maps[0].rank();
    let normalizer_quotient = nullity(&maps[1]);
    Ok(DeformationSequenceReport {
        family: vc.family(),
        constants: vc.clone(),
        center: dims[0] - centralizer_mod_center,
        centralizer: dims[0],
        centralizer_mod_center,
        normalizer_quotient,
        exactness_holds: normalizer_quotient == centralizer_mod_center + cohomology[0],
        cohomology,
        dims,
        maps,
        compositions_vanish,
    })
}

fn matrix_json(m: &ExactMatrix) -> Value {
    Value::Array(
        m.to_rows()
            .iter()
            .map(|r| Value::Array(r.iter().map(|v| json!(format_rational(v))).collect()))
            .collect(),
    )
}

impl DeformationSequenceReport {
    pub fn to_json_value(&self) -> Value {
        json!({
            "family": self.family.as_str(),
            "constants": self.constants.to_json_value(),
            "dims": self.dims,
            "maps": self.maps.iter().map(matrix_json).collect::<Vec<_>>(),
            "compositions_vanish": self.compositions_vanish,
            "center": self.center,
            "centralizer": self.centralizer,
            "centralizer_mod_center": self.centralizer_mod_center,
            "normalizer_quotient": self.normalizer_quotient,
            "cohomology": self.cohomology,
            "exactness_holds": self.exactness_holds,
        })
    }

    /// Map names D, D1, D2, ...
    pub fn map_names(&self) -> Vec<String> {
        (0..self.maps.len())
            .map(|i| if i == 0 { "D".into() } else { format!("D{i}") })
            .collect()
    }
}

/// dim N(Theta)/Theta and its defining linear conditions on the
/// parameters of Upsilon_0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizerReport {
    pub family: Family,
    pub dim: usize,
    pub conditions: Vec<String>,
}

fn parameter_names(vc: &VessiotConstants) -> Vec<String> {
    match vc {
        VessiotConstants::Coframe(c) => {
            let p = c.dim();
            (0..p)
                .flat_map(|s| (0..p).map(move |t| format!("A{}_{}", t + 1, s + 1)))
                .collect()
        }
        VessiotConstants::Metric(_) | VessiotConstants::ContactDensity(_) => vec!["A".into()],
        VessiotConstants::UnimodularContact(..) => vec!["A".into(), "B".into()],
    }
}

fn linear_form(coeffs: &[Rational], names: &[String]) -> String {
    let mut s = String::new();
    for (c, x) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let neg = *c < Rational::zero();
        let a = if neg { -c } else { c.clone() };
        let coef = if a == rat(1) {
            String::new()
        } else {
            format!("{}*", format_rational(&a))
        };
        if s.is_empty() {
            s.push_str(if neg { "-" } else { "" });
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        s.push_str(&coef);
        s.push_str(x);
    }
    format!("{s} = 0")
}

pub fn normalizer_quotient(vc: &VessiotConstants) -> Result<NormalizerReport> {
    let rep = deformation_sequence(vc)?;
    let names = parameter_names(vc);
    let mut conditions: Vec<String> = rep.maps[1]
        .to_rows()
        .iter()
        .filter(|r| r.iter().any(|v| !v.is_zero()))
        .map(|r| linear_form(r, &names))
        .collect();
    conditions.dedup();
    Ok(NormalizerReport {
        family: vc.family(),
        dim: rep.normalizer_quotient,
        conditions,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CentralizerDims {
    pub centralizer: usize,
    pub center: usize,
}

pub fn centralizer_dim(vc: &VessiotConstants) -> Result<CentralizerDims> {
    let rep = deformation_sequence(vc)?;
    Ok(CentralizerDims {
        centralizer: rep.centralizer,
        center: rep.center,
    })
}

/// Generators of C(Theta) built from the object: the reciprocal frame of a
/// coframe, beta~ = (beta_23, beta_31, beta_12)/gamma for a unimodular
/// contact structure, none otherwise.
pub fn centralizer(obj: &GeometricObject) -> Result<Vec<Vec<RatFun>>> {
    match &obj.data {
        ObjectData::Coframe(w) => {
            let a = inverse(w)?;
            Ok((0..obj.n)
                .map(|t| (0..obj.n).map(|i| a[i][t].clone()).collect())
                .collect())
        }
        ObjectData::UnimodularContact { alpha, beta } => {
            let g = Form::one_form(alpha).wedge(&Form::two_form(beta)?)?.components()[0].clone();
            Ok(vec![vec![&beta[1][2] / &g, &beta[2][0] / &g, &beta[0][1] / &g]])
        }
        ObjectData::Metric(_) | ObjectData::ContactDensity(_) => Ok(Vec::new()),
    }
}

fn constant_of(f: &RatFun) -> Result<Rational> {
    f.constant_value()
        .ok_or_else(|| Error::NotAStructure(format!("{f} is not constant")))
}

/// Matrix of D: eta -> L(eta)omega on the centralizer generators, read off
/// in the basis of Upsilon_0 (computed with differential forms).
pub fn centralizer_image(obj: &GeometricObject) -> Result<ExactMatrix> {
    let gens = centralizer(obj)?;
    let n = obj.n;
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    match &obj.data {
        ObjectData::Coframe(w) => {
            let a = inverse(w)?;
            for eta in &gens {
                // column layout (sigma, tau) -> sigma * n + tau
                let mut col = vec![Rational::zero(); n * n];
                for (tau, wt) in w.iter().enumerate() {
                    let l = Form::one_form(wt).lie(eta)?;
                    for sigma in 0..n {
                        let v = (0..n).fold(RatFun::zero(), |acc, i| &acc + &(&l.components()[i] * &a[i][sigma]));
                        col[sigma * n + tau] = constant_of(&v)?;
                    }
                }
                cols.push(col);
            }
            ExactMatrix::from_columns(&cols, n * n)
        }
        ObjectData::UnimodularContact { alpha, beta } => {
            let (fa, fb) = (Form::one_form(alpha), Form::two_form(beta)?);
            for eta in &gens {
                let ratio = |f: &Form| -> Result<Rational> {
                    let r = f
                        .lie(eta)?
                        .ratio(f)?
                        .ok_or_else(|| Error::NotAStructure("L(eta) is not a multiple".into()))?;
                    constant_of(&r)
                };
                cols.push(vec![ratio(&fa)?, ratio(&fb)?]);
            }
            ExactMatrix::from_columns(&cols, 2)
        }
        ObjectData::Metric(_) | ObjectData::ContactDensity(_) => Ok(ExactMatrix::zeros(1, 0)),
    }
}

/// Janet bundle dimensions of the object's Medolaghi system.
pub fn object_janet_dims(obj: &GeometricObject, seed: u64) -> Result<JanetDims> {
    janet_bundle_dims(&medolaghi_system(obj)?, seed)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DeformationCheck {
    /// (C'_nu, C''_nu) for nu = 1..=N
    Extends(Vec<(Rational, Rational)>),
    /// no (C'_nu, C''_nu) exists; `residual` is the forced t^nu/nu! coefficient
    Obstructed {
        order: usize,
        residual: Rational,
        partial: Vec<(Rational, Rational)>,
    },
}

/// Extends c_t = c + sum t^nu/nu! C_nu order by order subject to c'_t c''_t = 0.
pub fn vessiot_deformation_check(
    c: (&Rational, &Rational),
    first: (&Rational, &Rational),
    order: usize,
) -> Result<DeformationCheck> {
    let (c1, c2) = c;
    if !(c1 * c2).is_zero() {
        return Err(Error::JacobiViolated(format!("c′c″ = {}", format_rational(&(c1 * c2)))));
    }
    if order == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    let coc = c2 * first.0 + c1 * first.1;
    if !coc.is_zero() {
        return Err(Error::NotACocycle(format!("c″C′ + c′C″ = {}", format_rational(&coc))));
    }
    let mut series = vec![(first.0.clone(), first.1.clone())];
    for nu in 2..=order {
        let nf = factorial(nu as u32);
        let mut rest = Rational::zero();
        for a in 1..nu {
            let w = &nf / (factorial(a as u32) * factorial((nu - a) as u32));
            rest += w * &series[a - 1].0 * &series[nu - a - 1].1;
        }
        let next = if !c2.is_zero() {
            (-&rest / c2, Rational::zero())
        } else if !c1.is_zero() {
            (Rational::zero(), -&rest / c1)
        } else if rest.is_zero() {
            (Rational::zero(), Rational::zero())
        } else {
            return Ok(DeformationCheck::Obstructed {
                order: nu,
                residual: rest,
                partial: series,
            });
        };
        series.push(next);
    }
    Ok(DeformationCheck::Extends(series))
}
