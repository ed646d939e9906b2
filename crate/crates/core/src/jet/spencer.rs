//! The Spencer delta map and delta-cohomology of symbols.
//!
//! Lambda^s T* (x) S_j T* (x) E is laid out with the lexicographic
//! s-subsets outermost, then mu in frozen order, then the fiber index.

use super::multi_index::{grade_offset, of_order, sym_dim, MultiIndex};
use crate::error::{Error, Result};
use crate::foundation::{rat, ExactMatrix, Rational};
use crate::lie_deform::{binomial, subset_rank, subsets};
use serde::Serialize;

fn in_grade(n: usize, mu: &MultiIndex) -> usize {
    mu.position() - grade_offset(n, mu.order())
}

/// delta : Lambda^s (x) S_{q+1} (x) E -> Lambda^{s+1} (x) S_q (x) E,
/// delta = dx^i ^ delta_i with (delta_i v)^k_nu = v^k_{nu+1_i}.
pub fn spencer_delta_matrix(n: usize, m: usize, q: usize, s: usize) -> ExactMatrix {
    let (src, dst) = (sym_dim(n, m, q + 1), sym_dim(n, m, q));
    let mut mat = ExactMatrix::zeros(binomial(n, s + 1) * dst, binomial(n, s) * src);
    for (ii, set) in subsets(n, s).iter().enumerate() {
        for mu in of_order(n, q + 1) {
            for k in 0..m {
                let col = ii * src + in_grade(n, &mu) * m + k;
                for i in 0..n {
                    if set.contains(&i) {
                        continue;
                    }
                    let Some(nu) = mu.minus(i) else { continue };
                    let pos = set.iter().filter(|&&j| j < i).count();
                    let mut big = set.clone();
                    big.insert(pos, i);
                    let row = subset_rank(n, &big) * dst + in_grade(n, &nu) * m + k;
                    mat[(row, col)] = rat(if pos % 2 == 0 { 1 } else { -1 });
                }
            }
        }
    }
    mat
}

/// Basis vectors of a symbol g_j inside S_j (x) E (layout as above).
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolSpace {
    pub n: usize,
    pub m: usize,
    pub order: usize,
    pub basis: Vec<Vec<Rational>>,
}

impl SymbolSpace {
    pub fn full(n: usize, m: usize, order: usize) -> Self {
        let d = sym_dim(n, m, order);
        let basis = (0..d).map(|i| (0..d).map(|j| rat((i == j) as i64)).collect()).collect();
        SymbolSpace { n, m, order, basis }
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Basis of Lambda^s (x) g as columns in Lambda^s (x) S_j (x) E.
    fn wedge_basis(&self, s: usize) -> Vec<Vec<Rational>> {
        let d = sym_dim(self.n, self.m, self.order);
        let blocks = binomial(self.n, s);
        let mut out = Vec::new();
        for b in 0..blocks {
            for v in &self.basis {
                let mut w = vec![rat(0); blocks * d];
                w[b * d..(b + 1) * d].clone_from_slice(v);
                out.push(w);
            }
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaSpot {
    /// form degree s
    pub s: usize,
    /// symbol order j
    pub order: usize,
    pub dim: usize,
    pub cohomology: usize,
}

fn col_rank(cols: &[Vec<Rational>], rows: usize) -> Result<usize> {
    if cols.is_empty() {
        return Ok(0);
    }
    Ok(ExactMatrix::from_columns(cols, rows)?.rank())
}

/// Cohomology of Lambda^{s-1}(x)g_{j+1} -> Lambda^s(x)g_j -> Lambda^{s+1}(x)g_{j-1}
/// at every spot where both neighbours are known. `tower[r]` is g_{q0+r};
/// orders below q0 are taken to be the full S_j (x) E.
pub fn delta_cohomology_dims(tower: &[SymbolSpace]) -> Result<Vec<DeltaSpot>> {
    let Some(first) = tower.first() else {
        return Ok(Vec::new());
    };
    let (n, m, q0) = (first.n, first.m, first.order);
    for (r, g) in tower.iter().enumerate() {
        if g.order != q0 + r || g.n != n || g.m != m {
            return Err(Error::InconsistentTower(
                "orders must be consecutive with equal n, m".into(),
            ));
        }
    }
    let mut spots = Vec::new();
    for r in 0..tower.len().saturating_sub(1) {
        let g = &tower[r];
        let up = &tower[r + 1];
        let j = g.order;
        for s in 0..=n {
            let here = g.wedge_basis(s);
            let amb = binomial(n, s) * sym_dim(n, m, j);
            // outgoing delta into Lambda^{s+1} (x) S_{j-1} (x) E
            let ker = if j == 0 || s == n {
                here.len()
            } else {
                let d = spencer_delta_matrix(n, m, j - 1, s);
                let imgs: Vec<Vec<Rational>> = here.iter().map(|v| d.mul_vec(v)).collect::<Result<_>>()?;
                here.len() - col_rank(&imgs, d.rows())?
            };
            let incoming = if s == 0 {
                Vec::new()
            } else {
                let d = spencer_delta_matrix(n, m, j, s - 1);
                up.wedge_basis(s - 1)
                    .iter()
                    .map(|v| d.mul_vec(v))
                    .collect::<Result<Vec<_>>>()?
            };
            let rin = col_rank(&incoming, amb)?;
            if rin > 0 {
                let mut both = here.clone();
                both.extend(incoming.iter().cloned());
                if col_rank(&both, amb)? != col_rank(&here, amb)? {
                    return Err(Error::InconsistentTower(format!(
                        "delta(Lambda^{} g_{}) is not contained in Lambda^{s} g_{j}",
                        s - 1,
                        j + 1
                    )));
                }
            }
            spots.push(DeltaSpot {
                s,
                order: j,
                dim: here.len(),
                cohomology: ker - rin,
            });
        }
    }
    Ok(spots)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_squared_is_zero() {
        for n in 1..=3usize {
            for q in 0..=2 {
                for s in 0..n.saturating_sub(1) {
                    let a = spencer_delta_matrix(n, 2, q + 1, s);
                    let b = spencer_delta_matrix(n, 2, q, s + 1);
                    assert!(b.mul(&a).unwrap().is_zero(), "n={n} q={q} s={s}");
                }
            }
        }
    }

    #[test]
    fn one_variable_is_isomorphism() {
        for q in 0..4 {
            let d = spencer_delta_matrix(1, 2, q, 0);
            assert_eq!((d.rows(), d.cols(), d.rank()), (2, 2, 2));
        }
    }

    #[test]
    fn full_symbol_is_acyclic() {
        for n in 1..=3 {
            let tower: Vec<SymbolSpace> = (1..=3).map(|j| SymbolSpace::full(n, 1, j)).collect();
            for spot in delta_cohomology_dims(&tower).unwrap() {
                assert_eq!(spot.cohomology, 0, "{spot:?}");
            }
        }
    }
}
