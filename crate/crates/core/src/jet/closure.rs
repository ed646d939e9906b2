//! Closure of a linear system on J_q(T) under the differential bracket.

use super::bracket::bracket;
use super::multi_index::{grade_offset, jet_decode, jet_dim, up_to};
use super::section::JetSection;
use super::system::LinearJetSystem;
use crate::error::{Error, Result};
use crate::foundation::{rat, Monomial, Poly, RatFun};
use serde::Serialize;

/// Reduced row echelon form over Q(x), highest-order columns eliminated
/// first.
#[derive(Clone, Debug)]
pub struct SolvedForm {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    rows: Vec<Vec<RatFun>>,
    pivots: Vec<usize>,
    parametric: Vec<usize>,
}

impl SolvedForm {
    pub fn new(sys: &LinearJetSystem) -> Self {
        let (n, m, q) = (sys.n, sys.m, sys.q);
        let mut order = Vec::new();
        for j in (0..=q).rev() {
            order.extend(grade_offset(n, j) * m..grade_offset(n, j + 1) * m);
        }
        let (r, piv) = sys.matrix().rref_in_order(&order);
        let rows: Vec<Vec<RatFun>> = (0..piv.len()).map(|i| r.row(i).to_vec()).collect();
        let mut parametric: Vec<usize> = (0..sys.jet_dim()).filter(|c| !piv.contains(c)).collect();
        parametric.sort_unstable();
        SolvedForm {
            n,
            m,
            q,
            rows,
            pivots: piv,
            parametric,
        }
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn parametric(&self) -> &[usize] {
        &self.parametric
    }

    /// First solved row violated by the section, with its residual.
    pub fn violation(&self, s: &JetSection) -> Option<(usize, RatFun)> {
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc = RatFun::zero();
            for (c, v) in row.iter().zip(s.components()) {
                if !c.is_zero() && !v.is_zero() {
                    acc = &acc + &(c * v);
                }
            }
            if !acc.is_zero() {
                return Some((i, acc));
            }
        }
        None
    }
}

fn coord_name(n: usize, m: usize, idx: usize) -> String {
    let (k, mu) = jet_decode(n, m, idx);
    if mu.order() == 0 {
        format!("y{}", k + 1)
    } else {
        format!(
            "y{}_{}",
            k + 1,
            mu.as_slice().iter().map(|e| e.to_string()).collect::<String>()
        )
    }
}

/// Sections of the system obtained by setting one parametric coordinate
/// to a monomial x^nu (|nu| <= degree), the others to zero, and solving
/// for the principal ones.
pub fn parametric_sections(sf: &SolvedForm, degree: usize) -> Vec<(String, JetSection)> {
    let mut out = Vec::new();
    let mono = up_to(sf.n, degree);
    for &p in &sf.parametric {
        for nu in &mono {
            let x = RatFun::from(Poly::monomial(Monomial::from_exps(nu.as_slice().to_vec()), rat(1)));
            let mut comps = vec![RatFun::zero(); jet_dim(sf.n, sf.m, sf.q)];
            comps[p] = x.clone();
            for (row, &c) in sf.rows.iter().zip(&sf.pivots) {
                comps[c] = -(&row[p] * &x);
            }
            let label = format!("{} = {}", coord_name(sf.n, sf.m, p), x.numer());
            out.push((
                label,
                JetSection::from_components(sf.n, sf.m, sf.q, comps).expect("dimension"),
            ));
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureCounterexample {
    pub first: String,
    pub second: String,
    /// index of the violated solved equation
    pub equation: usize,
    pub residual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub closed: bool,
    pub sections: usize,
    pub pairs_checked: usize,
    pub counterexample: Option<ClosureCounterexample>,
}

/// Checks [R_q, R_q] within R_q on the parametric family of the given
/// degree, stopping at the first violation.
pub fn algebroid_closure_check(sys: &LinearJetSystem, degree: usize) -> Result<ClosureReport> {
    if sys.n != sys.m {
        return Err(Error::Invalid("closure needs a system on J_q(T) (m = n)".into()));
    }
    if sys.q == 0 {
        return Err(Error::Unsupported("closure of zero-order systems".into()));
    }
    let sf = SolvedForm::new(sys);
    let secs = parametric_sections(&sf, degree);
    let mut pairs = 0;
    for i in 0..secs.len() {
        for j in i + 1..secs.len() {
            pairs += 1;
            let b = bracket(&secs[i].1, &secs[j].1)?;
            if let Some((row, res)) = sf.violation(&b) {
                return Ok(ClosureReport {
                    closed: false,
                    sections: secs.len(),
                    pairs_checked: pairs,
                    counterexample: Some(ClosureCounterexample {
                        first: secs[i].0.clone(),
                        second: secs[j].0.clone(),
                        equation: row,
                        residual: res.to_string(),
                    }),
                });
            }
        }
    }
    Ok(ClosureReport {
        closed: true,
        sections: secs.len(),
        pairs_checked: pairs,
        counterexample: None,
    })
}
