//! Formal deformations c_t = c + sum_{nu>=1} t^nu / nu! C_nu.

use super::cochain::{mixed_jacobi, Cochain};
use super::complex::{differential_matrix_unchecked, require_lie};
use super::constants::StructureConstants;
use crate::error::{Error, Result};
use crate::foundation::rational::factorial;
use crate::foundation::{rat, Rational};
use serde::Serialize;

fn require_cocycle(c: &StructureConstants, cc: &Cochain) -> Result<()> {
    if cc.degree() != 2 || cc.dim() != c.dim() {
        return Err(Error::Dimension(
            "expected a degree-2 cochain of the algebra's dimension".into(),
        ));
    }
    let d = differential_matrix_unchecked(c, 2).mul_vec(cc.as_slice())?;
    if d.iter().any(|v| !num_traits::Zero::is_zero(v)) {
        return Err(Error::NotACocycle("dC != 0".into()));
    }
    Ok(())
}

/// Second t-derivative of J(c + tC) at t = 0, i.e. 2 J(C). With this
/// normalization the first obstruction reads dC_2 + hessian(C_1) = 0.
pub fn hessian_obstruction(c: &StructureConstants, cc: &Cochain) -> Result<Cochain> {
    require_lie(c)?;
    require_cocycle(c, cc)?;
    Ok(mixed_jacobi(cc, cc)?.scale(&rat(2)))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Extension {
    /// C_1, ..., C_N.
    Series(Vec<Cochain>),
    /// No C_{nu+1} exists: `witness` is a 3-cocycle outside B_3.
    Obstructed {
        nu: usize,
        witness: Cochain,
        partial: Vec<Cochain>,
    },
}

/// (nu+1)! times the part of [t^{nu+1}] J(c_t) not involving C_{nu+1}.
fn known_term(series: &[Cochain], m: usize) -> Result<Cochain> {
    let p = series[0].dim();
    let mut acc = Cochain::zero(p, 3);
    let mf = factorial(m as u32);
    for a in 1..m {
        let b = m - a;
        let w = &mf / (factorial(a as u32) * factorial(b as u32));
        acc = acc.add(&mixed_jacobi(&series[a - 1], &series[b - 1])?.scale(&w));
    }
    Ok(acc)
}

/// Order-by-order construction of C_2..C_N solving
/// dC_{nu+1} = -(known term); stops at the first obstruction.
pub fn extend_deformation(c: &StructureConstants, c1: &Cochain, order: usize) -> Result<Extension> {
    require_lie(c)?;
    require_cocycle(c, c1)?;
    if order == 0 {
        return Err(Error::Invalid("order must be at least 1".into()));
    }
    let d2 = differential_matrix_unchecked(c, 2);
    let d3 = differential_matrix_unchecked(c, 3.min(c.dim()));
    let mut series = vec![c1.clone()];
    for nu in 1..order {
        let known = known_term(&series, nu + 1)?;
        if c.dim() >= 3 {
            // the known term is always a 3-cocycle
            debug_assert!(d3.mul_vec(known.as_slice())?.iter().all(num_traits::Zero::is_zero));
        }
        let rhs: Vec<Rational> = known.as_slice().iter().map(|v| -v).collect();
        match d2.solve(&rhs)? {
            Some(x) => series.push(Cochain::from_vec(c.dim(), 2, x)?),
            None => {
                return Ok(Extension::Obstructed {
                    nu,
                    witness: known,
                    partial: series,
                })
            }
        }
    }
    Ok(Extension::Series(series))
}

/// Taylor coefficients [t^m] J(c_t), m = 0..=order, of the truncated series.
pub fn deformation_residual(c: &StructureConstants, series: &[Cochain], order: usize) -> Result<Vec<Cochain>> {
    let p = c.dim();
    let mut all = vec![c.as_cochain()];
    all.extend(series.iter().cloned());
    if all.iter().any(|s| s.degree() != 2 || s.dim() != p) {
        return Err(Error::Dimension("series terms must be degree-2 cochains".into()));
    }
    let mut out = Vec::new();
    for m in 0..=order {
        let mut acc = Cochain::zero(p, 3);
        for a in 0..=m {
            let b = m - a;
            if a >= all.len() || b >= all.len() {
                continue;
            }
            let w = (factorial(a as u32) * factorial(b as u32)).recip();
            acc = acc.add(&mixed_jacobi(&all[a], &all[b])?.scale(&w));
        }
        out.push(acc);
    }
    Ok(out)
}

#[derive(Serialize)]
pub struct ExtensionSummary {
    pub extends: bool,
    pub order_reached: usize,
    pub obstruction_nu: Option<usize>,
}

impl Extension {
    pub fn summary(&self) -> ExtensionSummary {
        match self {
            Extension::Series(s) => ExtensionSummary {
                extends: true,
                order_reached: s.len(),
                obstruction_nu: None,
            },
            Extension::Obstructed { nu, partial, .. } => ExtensionSummary {
                extends: false,
                order_reached: partial.len(),
                obstruction_nu: Some(*nu),
            },
        }
    }
}
