use crate::error::{Error, Result};
use crate::foundation::{format_rational, parse_rational, ExactMatrix, Rational};
use num_traits::Zero;
use serde::{Deserialize, Serialize};

/// Structure constants c^tau_{rho sigma} of a p-dimensional algebra,
/// antisymmetric in (rho, sigma). Indices are 0-based in the API and
/// 1-based in JSON.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct StructureConstants {
    dim: usize,
    /// c[(tau * p + rho) * p + sigma]
    c: Vec<Rational>,
}

#[derive(Serialize, Deserialize)]
struct BracketEntry {
    rho: usize,
    sigma: usize,
    tau: usize,
    value: String,
}

#[derive(Serialize, Deserialize)]
struct ConstantsFile {
    dim: usize,
    brackets: Vec<BracketEntry>,
}

impl StructureConstants {
    pub fn zero(dim: usize) -> Self {
        StructureConstants {
            dim,
            c: vec![Rational::zero(); dim * dim * dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn idx(&self, rho: usize, sigma: usize, tau: usize) -> usize {
        (tau * self.dim + rho) * self.dim + sigma
    }

    pub fn get(&self, rho: usize, sigma: usize, tau: usize) -> &Rational {
        &self.c[self.idx(rho, sigma, tau)]
    }

    /// Sets c^tau_{rho sigma} = v and c^tau_{sigma rho} = -v.
    pub fn set(&mut self, rho: usize, sigma: usize, tau: usize, v: Rational) -> Result<()> {
        let p = self.dim;
        if rho >= p || sigma >= p || tau >= p {
            return Err(Error::Dimension(format!("index out of range for dimension {p}")));
        }
        if rho == sigma {
            if v.is_zero() {
                return Ok(());
            }
            return Err(Error::Invalid("c^tau_{rho rho} must vanish".into()));
        }
        let (i, j) = (self.idx(rho, sigma, tau), self.idx(sigma, rho, tau));
        self.c[j] = -&v;
        self.c[i] = v;
        Ok(())
    }

    pub fn from_triples(dim: usize, entries: &[(usize, usize, usize, Rational)]) -> Result<Self> {
        let mut c = Self::zero(dim);
        for (r, s, t, v) in entries {
            c.set(*r, *s, *t, v.clone())?;
        }
        Ok(c)
    }

    pub fn is_abelian(&self) -> bool {
        self.c.iter().all(Zero::is_zero)
    }

    /// [X, Y]^tau = c^tau_{rho sigma} X^rho Y^sigma.
    pub fn bracket(&self, x: &[Rational], y: &[Rational]) -> Result<Vec<Rational>> {
        let p = self.dim;
        if x.len() != p || y.len() != p {
            return Err(Error::Dimension(format!("vectors must have length {p}")));
        }
        let mut out = vec![Rational::zero(); p];
        for (rho, xr) in x.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
            for (sigma, ys) in y.iter().enumerate().filter(|(_, v)| !v.is_zero()) {
                for (tau, o) in out.iter_mut().enumerate() {
                    let c = self.get(rho, sigma, tau);
                    if !c.is_zero() {
                        *o += c * xr * ys;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Nonzero entries with rho < sigma, 0-based.
    pub fn entries(&self) -> Vec<(usize, usize, usize, Rational)> {
        let p = self.dim;
        let mut out = Vec::new();
        for rho in 0..p {
            for sigma in rho + 1..p {
                for tau in 0..p {
                    let v = self.get(rho, sigma, tau);
                    if !v.is_zero() {
                        out.push((rho, sigma, tau, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn scale(&self, k: &Rational) -> Self {
        StructureConstants {
            dim: self.dim,
            c: self.c.iter().map(|v| v * k).collect(),
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: ConstantsFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        if f.dim == 0 {
            return Err(Error::Invalid("dimension must be positive".into()));
        }
        let mut c = Self::zero(f.dim);
        let mut seen = std::collections::HashSet::new();
        for b in &f.brackets {
            if b.rho == 0 || b.sigma == 0 || b.tau == 0 {
                return Err(Error::Parse("bracket indices are 1-based".into()));
            }
            let v = parse_rational(&b.value)?;
            let (r, s, v) = if b.rho < b.sigma {
                (b.rho, b.sigma, v)
            } else {
                (b.sigma, b.rho, -v)
            };
            if !seen.insert((r, s, b.tau)) {
                return Err(Error::Invalid(format!("duplicate bracket entry ({r},{s},{})", b.tau)));
            }
            c.set(r - 1, s - 1, b.tau - 1, v)?;
        }
        Ok(c)
    }

    pub fn to_json(&self) -> String {
        let f = ConstantsFile {
            dim: self.dim,
            brackets: self
                .entries()
                .into_iter()
                .map(|(r, s, t, v)| BracketEntry {
                    rho: r + 1,
                    sigma: s + 1,
                    tau: t + 1,
                    value: format_rational(&v),
                })
                .collect(),
        };
        serde_json::to_string_pretty(&f).expect("serializable")
    }
}

/// Structure constants for the basis change a: a c'(X, Y) = c(aX, aY).
pub fn change_basis(c: &StructureConstants, a: &ExactMatrix) -> Result<StructureConstants> {
    let p = c.dim();
    if a.rows() != p || a.cols() != p {
        return Err(Error::Dimension(format!("basis change must be {p}x{p}")));
    }
    let inv = a.inverse()?;
    let mut out = StructureConstants::zero(p);
    for rho in 0..p {
        for sigma in rho + 1..p {
            let v = c.bracket(&a.column(rho), &a.column(sigma))?;
            let w = inv.mul_vec(&v)?;
            for (tau, x) in w.into_iter().enumerate() {
                out.set(rho, sigma, tau, x)?;
            }
        }
    }
    Ok(out)
}
