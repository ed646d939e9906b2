use super::constants::StructureConstants;
use crate::error::{Error, Result};
use crate::foundation::{format_rational, parse_rational, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// All r-subsets of {0..p} in lexicographic order.
pub fn subsets(p: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, p: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..p {
            cur.push(i);
            rec(i + 1, p, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if r <= p {
        rec(0, p, r, &mut Vec::new(), &mut out);
    }
    out
}

/// Lexicographic rank of a strictly increasing subset.
pub fn subset_rank(p: usize, s: &[usize]) -> usize {
    let r = s.len();
    let mut rank = 0;
    let mut prev = 0;
    for (j, &a) in s.iter().enumerate() {
        for x in prev..a {
            rank += binomial(p - 1 - x, r - 1 - j);
        }
        prev = a + 1;
    }
    rank
}

/// Sorts `idx` in place; returns the permutation sign, or 0 on a repeat.
pub fn sort_sign(idx: &mut [usize]) -> i32 {
    let mut sign = 1;
    for i in 1..idx.len() {
        let mut j = i;
        while j > 0 && idx[j - 1] > idx[j] {
            idx.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if idx.windows(2).any(|w| w[0] == w[1]) {
        0
    } else {
        sign
    }
}

/// An element of Lambda^r V* (x) V. Components are stored with the
/// lexicographic r-subsets outermost and the V-basis innermost.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cochain {
    dim: usize,
    degree: usize,
    values: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct ComponentEntry {
    indices: Vec<usize>,
    tau: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct CochainFile {
    dim: usize,
    degree: usize,
    components: Vec<ComponentEntry>,
}

impl Cochain {
    pub fn zero(dim: usize, degree: usize) -> Self {
        Cochain {
            dim,
            degree,
            values: vec![Rational::zero(); binomial(dim, degree) * dim],
        }
    }

    pub fn from_vec(dim: usize, degree: usize, values: Vec<Rational>) -> Result<Self> {
        if values.len() != binomial(dim, degree) * dim {
            return Err(Error::Dimension(format!(
                "degree-{degree} cochain on dimension {dim} has {} components, got {}",
                binomial(dim, degree) * dim,
                values.len()
            )));
        }
        Ok(Cochain { dim, degree, values })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.values
    }

    pub fn into_vec(self) -> Vec<Rational> {
        self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(Zero::is_zero)
    }

    /// Component tau at a sorted subset.
    pub fn get(&self, subset: &[usize], tau: usize) -> &Rational {
        &self.values[subset_rank(self.dim, subset) * self.dim + tau]
    }

    pub fn set(&mut self, subset: &[usize], tau: usize, v: Rational) {
        let i = subset_rank(self.dim, subset) * self.dim + tau;
        self.values[i] = v;
    }

    /// f(e_{i1}, ..., e_{ir}) for arbitrary (possibly unsorted) indices.
    pub fn eval_basis(&self, idx: &[usize]) -> Vec<Rational> {
        let mut s = idx.to_vec();
        let sign = sort_sign(&mut s);
        if sign == 0 {
            return vec![Rational::zero(); self.dim];
        }
        let base = subset_rank(self.dim, &s) * self.dim;
        self.values[base..base + self.dim]
            .iter()
            .map(|v| if sign < 0 { -v } else { v.clone() })
            .collect()
    }

    pub fn add(&self, o: &Cochain) -> Cochain {
        Cochain {
            dim: self.dim,
            degree: self.degree,
            values: self.values.iter().zip(&o.values).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> Cochain {
        Cochain {
            dim: self.dim,
            degree: self.degree,
            values: self.values.iter().map(|a| a * k).collect(),
        }
    }

    /// Nonzero components as (sorted subset, tau, value), 0-based.
    pub fn entries(&self) -> Vec<(Vec<usize>, usize, Rational)> {
        let mut out = Vec::new();
        for (k, s) in subsets(self.dim, self.degree).into_iter().enumerate() {
            for tau in 0..self.dim {
                let v = &self.values[k * self.dim + tau];
                if !v.is_zero() {
                    out.push((s.clone(), tau, v.clone()));
                }
            }
        }
        out
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: CochainFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut c = Cochain::zero(f.dim, f.degree);
        for e in f.components {
            if e.indices.len() != f.degree {
                return Err(Error::Dimension(format!(
                    "expected {} indices, got {}",
                    f.degree,
                    e.indices.len()
                )));
            }
            if e.tau == 0 || e.tau > f.dim || e.indices.iter().any(|&i| i == 0 || i > f.dim) {
                return Err(Error::Dimension(
                    "cochain index out of range (indices are 1-based)".into(),
                ));
            }
            let mut idx: Vec<usize> = e.indices.iter().map(|i| i - 1).collect();
            let sign = sort_sign(&mut idx);
            if sign == 0 {
                return Err(Error::Invalid("repeated index in an alternating cochain".into()));
            }
            let v = parse_rational(&e.value)?;
            c.set(&idx, e.tau - 1, if sign < 0 { -v } else { v });
        }
        Ok(c)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let f = CochainFile {
            dim: self.dim,
            degree: self.degree,
            components: self
                .entries()
                .into_iter()
                .map(|(s, t, v)| ComponentEntry {
                    indices: s.iter().map(|i| i + 1).collect(),
                    tau: t + 1,
                    value: format_rational(&v),
                })
                .collect(),
        };
        serde_json::to_value(f).expect("serializable")
    }
}

impl StructureConstants {
    pub fn as_cochain(&self) -> Cochain {
        let p = self.dim();
        let mut c = Cochain::zero(p, 2);
        for (r, s, t, v) in self.entries() {
            c.set(&[r, s], t, v);
        }
        c
    }

    pub fn from_cochain(c: &Cochain) -> Result<Self> {
        if c.degree() != 2 {
            return Err(Error::Dimension("structure constants are degree-2 cochains".into()));
        }
        let mut out = StructureConstants::zero(c.dim());
        for (s, t, v) in c.entries() {
            out.set(s[0], s[1], t, v)?;
        }
        Ok(out)
    }
}

fn apply2(c: &Cochain, x: usize, y: &[Rational]) -> Vec<Rational> {
    // c(e_x, Y) for a vector Y
    let p = c.dim();
    let mut out = vec![Rational::zero(); p];
    for (mu, ym) in y.iter().enumerate() {
        if ym.is_zero() || mu == x {
            continue;
        }
        for (tau, v) in c.eval_basis(&[x, mu]).into_iter().enumerate() {
            if !v.is_zero() {
                out[tau] += v * ym;
            }
        }
    }
    out
}

/// sum over cyclic (X,Y,Z) of a(X, b(Y, Z)) on basis triples; with
/// a = b = c this is the Jacobi residual of c.
pub fn mixed_jacobi(a: &Cochain, b: &Cochain) -> Result<Cochain> {
    if a.degree() != 2 || b.degree() != 2 || a.dim() != b.dim() {
        return Err(Error::Dimension(
            "mixed Jacobi needs two degree-2 cochains of equal dimension".into(),
        ));
    }
    let p = a.dim();
    let mut out = Cochain::zero(p, 3);
    for s in subsets(p, 3) {
        let (x, y, z) = (s[0], s[1], s[2]);
        let mut acc = vec![Rational::zero(); p];
        for (u, v, w) in [(x, y, z), (y, z, x), (z, x, y)] {
            for (t, val) in apply2(a, u, &b.eval_basis(&[v, w])).into_iter().enumerate() {
                acc[t] += val;
            }
        }
        for (t, v) in acc.into_iter().enumerate() {
            out.set(&s, t, v);
        }
    }
    Ok(out)
}

/// J(X,Y,Z) = [X,[Y,Z]] + [Y,[Z,X]] + [Z,[X,Y]] as a degree-3 cochain.
pub fn jacobi_residual(c: &StructureConstants) -> Cochain {
    let cc = c.as_cochain();
    mixed_jacobi(&cc, &cc).expect("degree-2 cochains")
}
