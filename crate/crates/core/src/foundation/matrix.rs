//! Dense matrices over an exact field with Gauss-Jordan elimination.

use super::ratfun::{Field, RatFun};
use super::rational::Rational;
use crate::error::{Error, Result};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

pub type ExactMatrix = Matrix<Rational>;
pub type FnMatrix = Matrix<RatFun>;

/// Result of a full elimination.
#[derive(Clone, Debug)]
pub struct RankKernelImage<F> {
    pub rank: usize,
    /// Kernel basis vectors (length = cols), one per free column.
    pub kernel: Vec<Vec<F>>,
    /// Image basis: the pivot columns of the original matrix.
    pub image: Vec<Vec<F>>,
    pub pivots: Vec<usize>,
}

impl<F: Field> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![F::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = F::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<F>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows_with_cols(rows, cols)
    }

    /// Like `from_rows`, but fixes the column count (useful for 0 rows).
    pub fn from_rows_with_cols(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "ragged matrix: row of length {} vs {}",
                r.len(),
                cols
            )));
        }
        let n = rows.len();
        Ok(Matrix {
            rows: n,
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_columns(cols: &[Vec<F>], nrows: usize) -> Result<Self> {
        let mut m = Self::zeros(nrows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            if c.len() != nrows {
                return Err(Error::Dimension(format!("column of length {} vs {}", c.len(), nrows)));
            }
            for (i, v) in c.iter().enumerate() {
                m[(i, j)] = v.clone();
            }
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F::is_zero)
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = out[(i, j)].plus(&a.times(b));
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        if v.len() != self.cols {
            return Err(Error::Dimension(format!(
                "vector of length {} vs {} columns",
                v.len(),
                self.cols
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(F::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
            })
            .collect())
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &Self) -> Result<Self> {
        if self.cols != other.cols {
            return Err(Error::Dimension("vstack with different column counts".into()));
        }
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        Ok(Matrix {
            rows: self.rows + other.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut m = Self::zeros(self.rows, cols.len());
        for i in 0..self.rows {
            for (jj, &j) in cols.iter().enumerate() {
                m[(i, jj)] = self[(i, j)].clone();
            }
        }
        m
    }

    /// Reduced row echelon form; pivots are searched column by column in
    /// `order` (a permutation of a subset of the columns).
    pub fn rref_in_order(&self, order: &[usize]) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for &c in order {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m[(i, c)].is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m[(r, c)].inverse();
            for j in 0..m.cols {
                if !m[(r, j)].is_zero() {
                    m[(r, j)] = m[(r, j)].times(&inv);
                }
            }
            for i in 0..m.rows {
                if i == r || m[(i, c)].is_zero() {
                    continue;
                }
                let f = m[(i, c)].clone();
                for j in 0..m.cols {
                    if !m[(r, j)].is_zero() {
                        let t = f.times(&m[(r, j)]);
                        m[(i, j)] = m[(i, j)].minus(&t);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rref(&self) -> (Self, Vec<usize>) {
        let order: Vec<usize> = (0..self.cols).collect();
        self.rref_in_order(&order)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn rank_in_order(&self, order: &[usize]) -> usize {
        self.rref_in_order(order).1.len()
    }

    pub fn rank_kernel_image(&self) -> RankKernelImage<F> {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let kernel = free
            .iter()
            .map(|&f| {
                let mut v = vec![F::zero(); self.cols];
                v[f] = F::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = r[(row, f)].negated();
                }
                v
            })
            .collect();
        let image = pivots.iter().map(|&c| self.column(c)).collect();
        RankKernelImage {
            rank: pivots.len(),
            kernel,
            image,
            pivots,
        }
    }

    pub fn kernel(&self) -> Vec<Vec<F>> {
        self.rank_kernel_image().kernel
    }

    /// Some(x) with A x = b iff b lies in the image.
    pub fn solve(&self, b: &[F]) -> Result<Option<Vec<F>>> {
        if b.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} vs {} rows",
                b.len(),
                self.rows
            )));
        }
        let mut aug = Self::zeros(self.rows, self.cols + 1);
        for i in 0..self.rows {
            for j in 0..self.cols {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, self.cols)] = b[i].clone();
        }
        let order: Vec<usize> = (0..=self.cols).collect();
        let (r, pivots) = aug.rref_in_order(&order);
        if pivots.contains(&self.cols) {
            return Ok(None);
        }
        let mut x = vec![F::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r[(row, self.cols)].clone();
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.rows != self.cols {
            return Err(Error::Dimension("inverse of a non-square matrix".into()));
        }
        let n = self.rows;
        let mut aug = Self::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                aug[(i, j)] = self[(i, j)].clone();
            }
            aug[(i, n + i)] = F::one();
        }
        let order: Vec<usize> = (0..n).collect();
        let (r, pivots) = aug.rref_in_order(&order);
        if pivots.len() < n {
            return Err(Error::Singular);
        }
        let mut inv = Self::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                inv[(i, j)] = r[(i, n + j)].clone();
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> Matrix<G> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl FnMatrix {
    /// Entrywise evaluation at a point.
    pub fn eval(&self, point: &[Rational]) -> Result<ExactMatrix> {
        let data = self.data.iter().map(|f| f.eval(point)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    /// Distinct non-constant denominators of the entries.
    pub fn denominators(&self) -> Vec<RatFun> {
        let mut out: Vec<RatFun> = Vec::new();
        for f in &self.data {
            if !f.denom().is_constant() {
                let d = RatFun::from(f.denom().clone());
                if !out.contains(&d) {
                    out.push(d);
                }
            }
        }
        out
    }
}

impl<F> std::ops::Index<(usize, usize)> for Matrix<F> {
    type Output = F;
    fn index(&self, (i, j): (usize, usize)) -> &F {
        &self.data[i * self.cols + j]
    }
}

impl<F> std::ops::IndexMut<(usize, usize)> for Matrix<F> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut F {
        &mut self.data[i * self.cols + j]
    }
}

impl<F: fmt::Display> fmt::Display for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols)
                .map(|j| self.data[i * self.cols + j].to_string())
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// dim(ambient / span(basis)) = ambient - rank(basis).
pub fn quotient_dim(ambient: usize, basis: &[Vec<Rational>]) -> Result<usize> {
    if basis.is_empty() {
        return Ok(ambient);
    }
    let m = ExactMatrix::from_columns(basis, ambient)?;
    Ok(ambient - m.rank())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::foundation::rational::rat;

    fn m(rows: &[&[i64]]) -> ExactMatrix {
        ExactMatrix::from_rows(rows.iter().map(|r| r.iter().map(|&v| rat(v)).collect()).collect()).unwrap()
    }

    #[test]
    fn rank_one_kernel() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let rki = a.rank_kernel_image();
        assert_eq!(rki.rank, 1);
        assert_eq!(rki.kernel.len(), 1);
        // the kernel line is spanned by (2, -1)
        let k = &rki.kernel[0];
        assert_eq!(&k[0] * rat(-1), &k[1] * rat(2));
        assert_eq!(a.mul_vec(k).unwrap(), vec![rat(0), rat(0)]);
    }

    #[test]
    fn quotient_of_repeated_vectors() {
        let b = vec![
            vec![rat(1), rat(1), rat(0), rat(0)],
            vec![rat(1), rat(1), rat(0), rat(0)],
            vec![rat(0), rat(0), rat(1), rat(0)],
        ];
        assert_eq!(quotient_dim(4, &b).unwrap(), 2);
        assert!(quotient_dim(3, &b).is_err());
    }

    #[test]
    fn solve_in_and_out_of_image() {
        let a = m(&[&[1, 2], &[2, 4]]);
        let x = a.solve(&[rat(3), rat(6)]).unwrap().unwrap();
        assert_eq!(a.mul_vec(&x).unwrap(), vec![rat(3), rat(6)]);
        assert_eq!(a.solve(&[rat(1), rat(0)]).unwrap(), None);
        assert!(a.solve(&[rat(1)]).is_err());
    }

    #[test]
    fn inverse_and_singular() {
        let a = m(&[&[2, 1], &[1, 1]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv).unwrap(), ExactMatrix::identity(2));
        assert_eq!(m(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn inverse_over_function_field() {
        let f = |s: &str| RatFun::parse(s).unwrap();
        let a = FnMatrix::from_rows(vec![vec![f("x1"), f("1")], vec![f("0"), f("x2")]]).unwrap();
        let inv = a.inverse().unwrap();
        assert_eq!(inv[(0, 1)], f("-1/(x1*x2)"));
        assert_eq!(a.mul(&inv).unwrap(), FnMatrix::identity(2));
    }
}
