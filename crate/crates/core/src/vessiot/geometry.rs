//! Christoffel symbols and Riemann curvature of a metric.

use crate::error::{Error, Result};
use crate::foundation::{frac, FnMatrix, RatFun};

/// gamma[k][i][j] = gamma^k_ij, symmetric in (i, j).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChristoffelField {
    pub n: usize,
    pub gamma: Vec<Vec<Vec<RatFun>>>,
}

/// rho[k][l][i][j] = rho^k_lij.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureField {
    pub n: usize,
    pub rho: Vec<Vec<Vec<Vec<RatFun>>>>,
}

pub(crate) fn inverse(g: &[Vec<RatFun>]) -> Result<Vec<Vec<RatFun>>> {
    let m = FnMatrix::from_rows(g.to_vec())?;
    let inv = m
        .inverse()
        .map_err(|_| Error::Degenerate("det(omega) vanishes identically".into()))?;
    Ok(inv.to_rows())
}

/// gamma^k_ij = (1/2) omega^kr (d_i omega_rj + d_j omega_ri - d_r omega_ij).
pub fn christoffel(g: &[Vec<RatFun>]) -> Result<ChristoffelField> {
    let n = g.len();
    let inv = inverse(g)?;
    let half = frac(1, 2);
    let mut gamma = vec![vec![vec![RatFun::zero(); n]; n]; n];
    for k in 0..n {
        for i in 0..n {
            for j in i..n {
                let mut acc = RatFun::zero();
                for r in 0..n {
                    if inv[k][r].is_zero() {
                        continue;
                    }
                    let t = &(&g[r][j].derivative(i) + &g[r][i].derivative(j)) - &g[i][j].derivative(r);
                    acc = &acc + &(&inv[k][r] * &t);
                }
                let v = acc.scale(&half);
                gamma[k][j][i] = v.clone();
                gamma[k][i][j] = v;
            }
        }
    }
    Ok(ChristoffelField { n, gamma })
}

/// rho^k_lij = d_i gamma^k_lj - d_j gamma^k_li + gamma^r_lj gamma^k_ri - gamma^r_li gamma^k_rj.
pub fn riemann(c: &ChristoffelField) -> CurvatureField {
    let n = c.n;
    let g = &c.gamma;
    let mut rho = vec![vec![vec![vec![RatFun::zero(); n]; n]; n]; n];
    for k in 0..n {
        for l in 0..n {
            for i in 0..n {
                for j in i + 1..n {
                    let mut acc = &g[k][l][j].derivative(i) - &g[k][l][i].derivative(j);
                    for r in 0..n {
                        acc = &acc + &(&g[r][l][j] * &g[k][r][i]);
                        acc = &acc - &(&g[r][l][i] * &g[k][r][j]);
                    }
                    rho[k][l][j][i] = -&acc;
                    rho[k][l][i][j] = acc;
                }
            }
        }
    }
    CurvatureField { n, rho }
}

/// Number of independent components of a curvature tensor.
pub fn curvature_components(n: usize) -> usize {
    n * n * (n * n - 1) / 12
}

impl CurvatureField {
    /// Antisymmetry, first Bianchi identity and antisymmetry of the lowered
    /// tensor, as rational-function identities.
    pub fn check_identities(&self, g: &[Vec<RatFun>]) -> bool {
        let n = self.n;
        let r = &self.rho;
        for k in 0..n {
            for l in 0..n {
                for i in 0..n {
                    for j in 0..n {
                        if r[k][l][i][j] != -&r[k][l][j][i] {
                            return false;
                        }
                        let b = &(&r[k][l][i][j] + &r[k][i][j][l]) + &r[k][j][l][i];
                        if !b.is_zero() {
                            return false;
                        }
                        let mut low = RatFun::zero();
                        for s in 0..n {
                            low = &low + &(&g[s][l] * &r[s][k][i][j]);
                            low = &low + &(&g[k][s] * &r[s][l][i][j]);
                        }
                        if !low.is_zero() {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    pub fn is_zero(&self) -> bool {
        self.rho.iter().flatten().flatten().flatten().all(RatFun::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> RatFun {
        RatFun::parse(s).unwrap()
    }

    #[test]
    fn polar_metric_is_flat() {
        let g = vec![vec![f("1"), f("0")], vec![f("0"), f("x1^2")]];
        let c = christoffel(&g).unwrap();
        assert_eq!(c.gamma[0][1][1], f("-x1"));
        assert_eq!(c.gamma[1][0][1], f("1/x1"));
        let r = riemann(&c);
        assert!(r.is_zero());
    }

    #[test]
    fn counts() {
        assert_eq!(curvature_components(2), 1);
        assert_eq!(curvature_components(4), 20);
    }
}
