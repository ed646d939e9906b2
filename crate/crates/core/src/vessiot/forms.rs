//! Differential forms with rational-function coefficients on R^n.

use crate::error::{Error, Result};
use crate::foundation::RatFun;
use crate::lie_deform::{binomial, sort_sign, subset_rank, subsets};

/// A k-form sum f_I dx^I over lexicographic increasing k-subsets I.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Form {
    n: usize,
    k: usize,
    comps: Vec<RatFun>,
}

impl Form {
    pub fn zero(n: usize, k: usize) -> Self {
        Form {
            n,
            k,
            comps: vec![RatFun::zero(); binomial(n, k)],
        }
    }

    pub fn scalar(n: usize, f: RatFun) -> Self {
        Form {
            n,
            k: 0,
            comps: vec![f],
        }
    }

    pub fn one_form(comps: &[RatFun]) -> Self {
        Form {
            n: comps.len(),
            k: 1,
            comps: comps.to_vec(),
        }
    }

    /// The 2-form (1/2) b_ij dx^i ^ dx^j of an antisymmetric matrix.
    pub fn two_form(b: &[Vec<RatFun>]) -> Result<Self> {
        let n = b.len();
        let mut f = Form::zero(n, 2);
        for i in 0..n {
            if b[i].len() != n {
                return Err(Error::Dimension("2-form matrix must be square".into()));
            }
            for j in 0..n {
                if b[i][j] != -&b[j][i] {
                    return Err(Error::Invalid("2-form matrix must be antisymmetric".into()));
                }
            }
        }
        for (r, s) in subsets(n, 2).iter().enumerate() {
            f.comps[r] = b[s[0]][s[1]].clone();
        }
        Ok(f)
    }

    /// Top-degree form f dx^1 ^ ... ^ dx^n.
    pub fn volume(n: usize, f: RatFun) -> Self {
        Form {
            n,
            k: n,
            comps: vec![f],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn components(&self) -> &[RatFun] {
        &self.comps
    }

    /// Component on an arbitrary index list (antisymmetric extension).
    pub fn get(&self, idx: &[usize]) -> RatFun {
        let mut s = idx.to_vec();
        let sign = sort_sign(&mut s);
        if sign == 0 {
            return RatFun::zero();
        }
        let v = self.comps[subset_rank(self.n, &s)].clone();
        if sign < 0 {
            -v
        } else {
            v
        }
    }

    /// Antisymmetric matrix of a 2-form.
    pub fn matrix(&self) -> Vec<Vec<RatFun>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(&[i, j])).collect())
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RatFun::is_zero)
    }

    fn same(&self, o: &Form) -> Result<()> {
        if (self.n, self.k) != (o.n, o.k) {
            return Err(Error::Dimension("forms of different degree or dimension".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Form) -> Result<Form> {
        self.same(o)?;
        Ok(Form {
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &Form) -> Result<Form> {
        self.same(o)?;
        Ok(Form {
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect(),
            ..self.clone()
        })
    }

    pub fn mul_fn(&self, f: &RatFun) -> Form {
        Form {
            comps: self.comps.iter().map(|a| a * f).collect(),
            ..self.clone()
        }
    }

    /// Exterior derivative.
    pub fn d(&self) -> Form {
        let mut out = Form::zero(self.n, self.k + 1);
        if self.k >= self.n {
            return out;
        }
        for (r, set) in subsets(self.n, self.k).iter().enumerate() {
            let f = &self.comps[r];
            if f.is_zero() {
                continue;
            }
            for i in 0..self.n {
                let mut idx = vec![i];
                idx.extend(set);
                let sign = sort_sign(&mut idx);
                if sign == 0 {
                    continue;
                }
                let df = f.derivative(i);
                let slot = subset_rank(self.n, &idx);
                out.comps[slot] = if sign > 0 {
                    &out.comps[slot] + &df
                } else {
                    &out.comps[slot] - &df
                };
            }
        }
        out
    }

    pub fn wedge(&self, o: &Form) -> Result<Form> {
        if self.n != o.n {
            return Err(Error::Dimension("forms on different bases".into()));
        }
        let mut out = Form::zero(self.n, self.k + o.k);
        if self.k + o.k > self.n {
            return Ok(out);
        }
        for (a, sa) in subsets(self.n, self.k).iter().enumerate() {
            if self.comps[a].is_zero() {
                continue;
            }
            for (b, sb) in subsets(o.n, o.k).iter().enumerate() {
                if o.comps[b].is_zero() {
                    continue;
                }
                let mut idx = sa.clone();
                idx.extend(sb);
                let sign = sort_sign(&mut idx);
                if sign == 0 {
                    continue;
                }
                let v = &self.comps[a] * &o.comps[b];
                let slot = subset_rank(self.n, &idx);
                out.comps[slot] = if sign > 0 {
                    &out.comps[slot] + &v
                } else {
                    &out.comps[slot] - &v
                };
            }
        }
        Ok(out)
    }

    /// Interior product i(v).
    pub fn interior(&self, v: &[RatFun]) -> Result<Form> {
        if v.len() != self.n {
            return Err(Error::Dimension("vector field and form dimensions differ".into()));
        }
        if self.k == 0 {
            return Err(Error::Invalid("interior product of a function".into()));
        }
        let mut out = Form::zero(self.n, self.k - 1);
        for (r, set) in subsets(self.n, self.k - 1).iter().enumerate() {
            let mut acc = RatFun::zero();
            for (i, vi) in v.iter().enumerate() {
                if vi.is_zero() {
                    continue;
                }
                let mut idx = vec![i];
                idx.extend(set);
                let c = self.get(&idx);
                if !c.is_zero() {
                    acc = &acc + &(vi * &c);
                }
            }
            out.comps[r] = acc;
        }
        Ok(out)
    }

    /// Lie derivative L(v) = i(v)d + d i(v).
    pub fn lie(&self, v: &[RatFun]) -> Result<Form> {
        let a = self.d().interior(v)?;
        if self.k == 0 {
            return Ok(a);
        }
        a.add(&self.interior(v)?.d())
    }

    /// The constant c with self = c * other, if one exists.
    pub fn ratio(&self, other: &Form) -> Result<Option<RatFun>> {
        self.same(other)?;
        let Some(pos) = other.comps.iter().position(|c| !c.is_zero()) else {
            return Err(Error::Degenerate("reference form vanishes identically".into()));
        };
        let c = &self.comps[pos] / &other.comps[pos];
        if self.sub(&other.mul_fn(&c))?.is_zero() {
            Ok(Some(c))
        } else {
            Ok(None)
        }
    }
}
