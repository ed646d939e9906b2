//! First-order rows of L(xi)omega = 0 for common geometric objects, in the
//! jet coordinates y^k_mu of xi.

use super::multi_index::MultiIndex;
use super::system::{LinearJetSystem, Row};
use crate::error::{Error, Result};
use crate::foundation::{frac, RatFun, Rational};
use num_traits::Zero;

fn y(n: usize, i: Option<usize>) -> MultiIndex {
    match i {
        Some(i) => MultiIndex::unit(n, i),
        None => MultiIndex::zero(n),
    }
}

/// (L(xi)a)_i = a_r xi^r_i + xi^r d_r a_i.
pub fn one_form_rows(a: &[RatFun]) -> Vec<Row> {
    weighted_one_form_rows(a, &Rational::zero())
}

/// Rows for a 1-form density of weight w:
/// a_r xi^r_i + w a_i xi^r_r + xi^r d_r a_i.
pub fn weighted_one_form_rows(a: &[RatFun], w: &Rational) -> Vec<Row> {
    let n = a.len();
    (0..n)
        .map(|i| {
            let mut row = Row::new();
            for r in 0..n {
                row.add_term(n, r, &y(n, Some(i)), a[r].clone());
                if !w.is_zero() {
                    row.add_term(n, r, &y(n, Some(r)), a[i].scale(w));
                }
                row.add_term(n, r, &y(n, None), a[i].derivative(r));
            }
            row
        })
        .collect()
}

/// Rows of L(xi)t for a covariant 2-tensor t (t[i][j]), one row per i <= j
/// when symmetric and per i < j when antisymmetric.
pub fn two_tensor_rows(t: &[Vec<RatFun>], symmetric: bool) -> Vec<Row> {
    let n = t.len();
    let mut out = Vec::new();
    for i in 0..n {
        let start = if symmetric { i } else { i + 1 };
        for j in start..n {
            let mut row = Row::new();
            for r in 0..n {
                row.add_term(n, r, &y(n, Some(i)), t[r][j].clone());
                row.add_term(n, r, &y(n, Some(j)), t[i][r].clone());
                row.add_term(n, r, &y(n, None), t[i][j].derivative(r));
            }
            out.push(row);
        }
    }
    out
}

/// L(xi)(rho dx^1..dx^n) = (rho d_r xi^r + xi^r d_r rho) dx^1..dx^n.
pub fn density_row(n: usize, rho: &RatFun) -> Row {
    let mut row = Row::new();
    for r in 0..n {
        row.add_term(n, r, &y(n, Some(r)), rho.clone());
        row.add_term(n, r, &y(n, None), rho.derivative(r));
    }
    row
}

/// Invariance system of a 1-form.
pub fn one_form_system(a: &[RatFun]) -> Result<LinearJetSystem> {
    LinearJetSystem::new(a.len(), a.len(), 1, one_form_rows(a))
}

/// Invariance system of a contact 1-form density (weight -1/2).
pub fn contact_density_system(a: &[RatFun]) -> Result<LinearJetSystem> {
    LinearJetSystem::new(a.len(), a.len(), 1, weighted_one_form_rows(a, &frac(-1, 2)))
}

/// Invariance system of a symmetric 2-tensor.
pub fn metric_system(g: &[Vec<RatFun>]) -> Result<LinearJetSystem> {
    check_square(g)?;
    LinearJetSystem::new(g.len(), g.len(), 1, two_tensor_rows(g, true))
}

/// Joint invariance system of a 1-form and a 2-form.
pub fn one_and_two_form_system(a: &[RatFun], b: &[Vec<RatFun>]) -> Result<LinearJetSystem> {
    check_square(b)?;
    if a.len() != b.len() {
        return Err(Error::Dimension("forms on different base dimensions".into()));
    }
    let mut rows = one_form_rows(a);
    rows.extend(two_tensor_rows(b, false));
    LinearJetSystem::new(a.len(), a.len(), 1, rows)
}

fn check_square(t: &[Vec<RatFun>]) -> Result<()> {
    if t.iter().any(|r| r.len() != t.len()) {
        return Err(Error::Dimension("2-tensor must be square".into()));
    }
    Ok(())
}
