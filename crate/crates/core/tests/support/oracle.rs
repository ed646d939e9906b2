//! Brute-force oracle for low-degree Lie algebra cohomology. Everything
//! here is computed from raw bracket tables with a local elimination
//! routine, independently of the library's complex construction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Full bracket table t[tau][rho][sigma].
pub struct Table {
    pub p: usize,
    pub t: Vec<Vec<Vec<Q>>>,
}

impl Table {
    pub fn new(p: usize, brackets: &[(usize, usize, usize, i64)]) -> Self {
        let mut t = vec![vec![vec![Q::zero(); p]; p]; p];
        for &(r, s, tau, v) in brackets {
            t[tau - 1][r - 1][s - 1] = q(v);
            t[tau - 1][s - 1][r - 1] = q(-v);
        }
        Table { p, t }
    }
}

pub fn rank(mut rows: Vec<Vec<Q>>) -> usize {
    let mut r = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, piv);
        let inv = Q::one() / rows[r][c].clone();
        let pr: Vec<Q> = rows[r].iter().map(|v| v * &inv).collect();
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                for j in 0..cols {
                    let d = &f * &pr[j];
                    rows[i][j] -= d;
                }
            }
        }
        rows[r] = pr;
        r += 1;
    }
    r
}

/// dim of {A : A[X,Y] = [AX,Y] + [X,AY]}; unknown A^tau_mu at tau*p+mu.
pub fn derivation_dim(t: &Table) -> usize {
    let p = t.p;
    let mut eqs = Vec::new();
    for r in 0..p {
        for s in 0..p {
            for tau in 0..p {
                let mut row = vec![Q::zero(); p * p];
                for mu in 0..p {
                    row[tau * p + mu] += &t.t[mu][r][s];
                    row[mu * p + r] -= &t.t[tau][mu][s];
                    row[mu * p + s] -= &t.t[tau][r][mu];
                }
                eqs.push(row);
            }
        }
    }
    p * p - rank(eqs)
}

pub fn inner_dim(t: &Table) -> usize {
    let p = t.p;
    let ads: Vec<Vec<Q>> = (0..p)
        .map(|i| {
            let mut v = vec![Q::zero(); p * p];
            for tau in 0..p {
                for mu in 0..p {
                    v[tau * p + mu] = t.t[tau][i][mu].clone();
                }
            }
            v
        })
        .collect();
    rank(ads)
}

pub fn pairs(p: usize) -> Vec<(usize, usize)> {
    let mut v = Vec::new();
    for a in 0..p {
        for b in a + 1..p {
            v.push((a, b));
        }
    }
    v
}

/// Z_2: antisymmetric C with sum_cyc c(X,C(Y,Z)) + C(X,c(Y,Z)) = 0.
pub fn z2_dim(t: &Table) -> usize {
    let p = t.p;
    let pr = pairs(p);
    let nunk = pr.len() * p;
    // coefficient of unknown C^tau_{ab} (a<b) in C^tau_{xy}: +-1 or 0
    let unk = |x: usize, y: usize, tau: usize| -> Option<(usize, i64)> {
        if x == y {
            return None;
        }
        let (a, b, s) = if x < y { (x, y, 1) } else { (y, x, -1) };
        let k = pr.iter().position(|&e| e == (a, b)).unwrap();
        Some((k * p + tau, s))
    };
    let mut eqs = Vec::new();
    for x in 0..p {
        for y in x + 1..p {
            for z in y + 1..p {
                for tau in 0..p {
                    let mut row = vec![Q::zero(); nunk];
                    for &(a, b, cc) in &[(x, y, z), (y, z, x), (z, x, y)] {
                        // c(e_a, C(e_b, e_cc)) = sum_mu t[tau][a][mu] C^mu_{b cc}
                        for mu in 0..p {
                            if let Some((k, s)) = unk(b, cc, mu) {
                                row[k] += &t.t[tau][a][mu] * q(s);
                            }
                        }
                        // C(e_a, c(e_b, e_cc)) = sum_mu t[mu][b][cc] C^tau_{a mu}
                        for mu in 0..p {
                            if let Some((k, s)) = unk(a, mu, tau) {
                                row[k] += &t.t[mu][b][cc] * q(s);
                            }
                        }
                    }
                    eqs.push(row);
                }
            }
        }
    }
    if eqs.is_empty() {
        return nunk;
    }
    nunk - rank(eqs)
}

/// B_2 from the trivial-deformation formula
/// Cbar^tau_{rs} = A^mu_r c^tau_{mu s} + A^mu_s c^tau_{r mu} - A^tau_mu c^mu_{rs}.
pub fn b2_dim(t: &Table) -> usize {
    let p = t.p;
    let pr = pairs(p);
    let mut gens = Vec::new();
    for a_row in 0..p {
        for a_col in 0..p {
            let mut a = vec![vec![Q::zero(); p]; p];
            a[a_row][a_col] = Q::one();
            let mut v = Vec::new();
            for &(r, s) in &pr {
                for tau in 0..p {
                    let mut acc = Q::zero();
                    for mu in 0..p {
                        acc += &a[mu][r] * &t.t[tau][mu][s];
                        acc += &a[mu][s] * &t.t[tau][r][mu];
                        acc -= &a[tau][mu] * &t.t[mu][r][s];
                    }
                    v.push(acc);
                }
            }
            gens.push(v);
        }
    }
    if pr.is_empty() {
        return 0;
    }
    rank(gens)
}
