use super::cochain::{binomial, jacobi_residual, subsets, Cochain};
use super::constants::StructureConstants;
use crate::error::{Error, Result};
use crate::foundation::{ExactMatrix, Rational};
use num_traits::Zero;
use serde::Serialize;

pub(crate) fn require_lie(c: &StructureConstants) -> Result<()> {
    let j = jacobi_residual(c);
    if let Some((s, t, v)) = j.entries().first() {
        return Err(Error::JacobiViolated(format!(
            "J(e{}, e{}, e{}) has e{} component {}",
            s[0] + 1,
            s[1] + 1,
            s[2] + 1,
            t + 1,
            v
        )));
    }
    Ok(())
}

/// (df)(X_1..X_{r+1}) = sum_{i<j} (-1)^{i+j} f([X_i,X_j], X_1..^i..^j..)
///                      + sum_i (-1)^{i+1} [X_i, f(X_1..^i..)].
fn differential_unchecked(c: &StructureConstants, f: &Cochain) -> Cochain {
    let p = c.dim();
    let r = f.degree();
    let mut out = Cochain::zero(p, r + 1);
    for s in subsets(p, r + 1) {
        let mut acc = vec![Rational::zero(); p];
        for i in 0..=r {
            for j in i + 1..=r {
                let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
                let rest: Vec<usize> = s
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| *k != i && *k != j)
                    .map(|(_, v)| *v)
                    .collect();
                for mu in 0..p {
                    let cm = c.get(s[i], s[j], mu);
                    if cm.is_zero() {
                        continue;
                    }
                    let mut idx = vec![mu];
                    idx.extend_from_slice(&rest);
                    for (t, v) in f.eval_basis(&idx).into_iter().enumerate() {
                        if !v.is_zero() {
                            let term = cm * v;
                            if sign > 0 {
                                acc[t] += term;
                            } else {
                                acc[t] -= term;
                            }
                        }
                    }
                }
            }
        }
        for i in 0..=r {
            let rest: Vec<usize> = s.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, v)| *v).collect();
            let fv = f.eval_basis(&rest);
            for (sigma, fs) in fv.iter().enumerate() {
                if fs.is_zero() {
                    continue;
                }
                for (t, a) in acc.iter_mut().enumerate() {
                    let cm = c.get(s[i], sigma, t);
                    if !cm.is_zero() {
                        let term = cm * fs;
                        if i % 2 == 0 {
                            *a += term;
                        } else {
                            *a -= term;
                        }
                    }
                }
            }
        }
        for (t, v) in acc.into_iter().enumerate() {
            out.set(&s, t, v);
        }
    }
    out
}

/// Chevalley-Eilenberg differential with coefficients in the adjoint
/// representation. Rejects brackets that fail the Jacobi identity.
pub fn ce_differential(c: &StructureConstants, f: &Cochain) -> Result<Cochain> {
    if f.dim() != c.dim() {
        return Err(Error::Dimension("cochain and algebra dimensions differ".into()));
    }
    require_lie(c)?;
    Ok(differential_unchecked(c, f))
}

/// Matrix of d_r : C^r -> C^{r+1}, shape (C(p,r+1) p) x (C(p,r) p).
pub fn ce_differential_matrix(c: &StructureConstants, r: usize) -> Result<ExactMatrix> {
    require_lie(c)?;
    Ok(differential_matrix_unchecked(c, r))
}

pub(crate) fn differential_matrix_unchecked(c: &StructureConstants, r: usize) -> ExactMatrix {
    let p = c.dim();
    let (rows, cols) = (binomial(p, r + 1) * p, binomial(p, r) * p);
    let mut m = ExactMatrix::zeros(rows, cols);
    for j in 0..cols {
        let mut basis = vec![Rational::zero(); cols];
        basis[j] = Rational::from_integer(1.into());
        let f = Cochain::from_vec(p, r, basis).expect("sized");
        for (i, v) in differential_unchecked(c, &f).into_vec().into_iter().enumerate() {
            m[(i, j)] = v;
        }
    }
    m
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyDims {
    pub degree: usize,
    pub cochains: usize,
    pub cocycles: usize,
    pub coboundaries: usize,
    pub cohomology: usize,
}

/// dim Z_r, B_r, H_r of the adjoint complex (B_0 = 0).
pub fn cohomology(c: &StructureConstants, r: usize) -> Result<CohomologyDims> {
    let p = c.dim();
    if r > p {
        return Err(Error::Invalid(format!("degree {r} exceeds dimension {p}")));
    }
    require_lie(c)?;
    let n = binomial(p, r) * p;
    let z = n - differential_matrix_unchecked(c, r).rank();
    let b = if r == 0 {
        0
    } else {
        differential_matrix_unchecked(c, r - 1).rank()
    };
    Ok(CohomologyDims {
        degree: r,
        cochains: n,
        cocycles: z,
        coboundaries: b,
        cohomology: z - b,
    })
}

fn cochain1_to_matrix(p: usize, v: &[Rational]) -> ExactMatrix {
    // component (i, tau) is f(e_i)^tau = A[tau][i]
    let mut a = ExactMatrix::zeros(p, p);
    for i in 0..p {
        for t in 0..p {
            a[(t, i)] = v[i * p + t].clone();
        }
    }
    a
}

/// Basis of the derivation algebra (= Z_1), as p x p matrices.
pub fn derivations(c: &StructureConstants) -> Result<Vec<ExactMatrix>> {
    require_lie(c)?;
    let p = c.dim();
    Ok(differential_matrix_unchecked(c, 1)
        .kernel()
        .iter()
        .map(|v| cochain1_to_matrix(p, v))
        .collect())
}

/// ad(e_i) matrices spanning the inner derivations (= B_1), reduced to a basis.
pub fn inner_derivations(c: &StructureConstants) -> Result<Vec<ExactMatrix>> {
    require_lie(c)?;
    let p = c.dim();
    let ad = |i: usize| {
        let mut a = ExactMatrix::zeros(p, p);
        for mu in 0..p {
            for t in 0..p {
                a[(t, mu)] = c.get(i, mu, t).clone();
            }
        }
        a
    };
    let cols: Vec<Vec<Rational>> = (0..p).map(|i| ad(i).transpose().to_rows().concat()).collect();
    let m = ExactMatrix::from_columns(&cols, p * p)?;
    Ok(m.rank_kernel_image().pivots.into_iter().map(ad).collect())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum RigidityVerdict {
    CertifiedRigid,
    Inconclusive { h2: usize },
}

/// H_2 = 0 is sufficient for rigidity; otherwise nothing is claimed.
pub fn is_rigid_sufficient(c: &StructureConstants) -> Result<RigidityVerdict> {
    let h = cohomology(c, 2.min(c.dim()))?;
    let h2 = if c.dim() < 2 { 0 } else { h.cohomology };
    Ok(if h2 == 0 {
        RigidityVerdict::CertifiedRigid
    } else {
        RigidityVerdict::Inconclusive { h2 }
    })
}
