use super::multi_index::{jet_decode, jet_dim, jet_index, MultiIndex};
use super::section::JetSection;
use crate::error::{Error, Result};
use crate::foundation::{FnMatrix, RatFun};
use serde::{Deserialize, Serialize};
use std::collections::BTreeMap;

/// One linear equation sum a^mu_k(x) y^k_mu = 0, keyed by jet index.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Row {
    terms: BTreeMap<usize, RatFun>,
}

impl Row {
    pub fn new() -> Self {
        Row::default()
    }

    pub fn add_term(&mut self, m: usize, k: usize, mu: &MultiIndex, c: RatFun) {
        self.add_at(jet_index(m, k, mu), c);
    }

    fn add_at(&mut self, idx: usize, c: RatFun) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(idx).or_insert_with(RatFun::zero);
        *e = &*e + &c;
        if e.is_zero() {
            self.terms.remove(&idx);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &RatFun)> {
        self.terms.iter().map(|(i, c)| (*i, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest |mu| with a nonzero coefficient.
    pub fn order(&self, n: usize, m: usize) -> Option<usize> {
        self.terms.keys().next_back().map(|&i| jet_decode(n, m, i).1.order())
    }

    /// Formal derivative d_i: a y_mu -> (d_i a) y_mu + a y_{mu+1_i}.
    pub fn total_derivative(&self, n: usize, m: usize, i: usize) -> Row {
        let mut out = Row::new();
        for (&idx, c) in &self.terms {
            let (k, mu) = jet_decode(n, m, idx);
            out.add_term(m, k, &mu.plus(i), c.clone());
            out.add_at(idx, c.derivative(i));
        }
        out
    }

    /// Value of the row on a section (as a rational function).
    pub fn apply(&self, s: &JetSection) -> Result<RatFun> {
        let mut acc = RatFun::zero();
        for (&idx, c) in &self.terms {
            let v = s
                .components()
                .get(idx)
                .ok_or_else(|| Error::Dimension("row order exceeds section order".into()))?;
            if !v.is_zero() {
                acc = &acc + &(c * v);
            }
        }
        Ok(acc)
    }

    pub fn scale(&self, f: &RatFun) -> Row {
        let mut out = Row::new();
        for (&i, c) in &self.terms {
            out.add_at(i, c * f);
        }
        out
    }
}

/// A linear system of order q on J_q(E), E of fiber dimension m over an
/// n-dimensional base. `levels[r]` records that the row is a derivative
/// of order r of an original row (0 for given rows).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearJetSystem {
    pub n: usize,
    pub m: usize,
    pub q: usize,
    rows: Vec<Row>,
    levels: Vec<usize>,
}

#[derive(Serialize, Deserialize)]
struct TermEntry {
    k: usize,
    mu: MultiIndex,
    coeff: RatFun,
}

#[derive(Serialize, Deserialize)]
struct RowEntry {
    terms: Vec<TermEntry>,
}

#[derive(Serialize, Deserialize)]
struct SystemFile {
    n: usize,
    m: usize,
    q: usize,
    rows: Vec<RowEntry>,
}

impl LinearJetSystem {
    pub fn new(n: usize, m: usize, q: usize, rows: Vec<Row>) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::Invalid("base and fiber dimensions must be positive".into()));
        }
        for r in &rows {
            if r.order(n, m).is_some_and(|o| o > q) {
                return Err(Error::Dimension(format!("row of order exceeding q = {q}")));
            }
        }
        let levels = vec![0; rows.len()];
        Ok(LinearJetSystem { n, m, q, rows, levels })
    }

    pub fn rows(&self) -> &[Row] {
        &self.rows
    }

    pub fn levels(&self) -> &[usize] {
        &self.levels
    }

    pub fn jet_dim(&self) -> usize {
        jet_dim(self.n, self.m, self.q)
    }

    /// Coefficient matrix over Q(x), rows x dim J_q(E).
    pub fn matrix(&self) -> FnMatrix {
        self.matrix_of(&(0..self.rows.len()).collect::<Vec<_>>(), self.q)
    }

    pub(crate) fn matrix_of(&self, rows: &[usize], order: usize) -> FnMatrix {
        let cols = jet_dim(self.n, self.m, order);
        let mut m = FnMatrix::zeros(rows.len(), cols);
        for (ri, &r) in rows.iter().enumerate() {
            for (i, c) in self.rows[r].terms() {
                m[(ri, i)] = c.clone();
            }
        }
        m
    }

    /// Every row holds identically on the section.
    pub fn is_satisfied_by(&self, s: &JetSection) -> Result<bool> {
        for r in &self.rows {
            if !r.apply(s)?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// R_{q+r}: the original rows together with all formal derivatives
    /// d_alpha Phi, |alpha| <= r (each generated once).
    pub fn prolong(&self, r: usize) -> LinearJetSystem {
        let (n, m) = (self.n, self.m);
        let mut rows = self.rows.clone();
        let mut levels = self.levels.clone();
        // frontier: (row, smallest direction allowed next)
        let mut frontier: Vec<(Row, usize, usize)> = self
            .rows
            .iter()
            .zip(&self.levels)
            .map(|(row, l)| (row.clone(), 0, *l))
            .collect();
        for _ in 0..r {
            let mut next = Vec::new();
            for (row, start, l) in &frontier {
                for i in *start..n {
                    let d = row.total_derivative(n, m, i);
                    next.push((d, i, l + 1));
                }
            }
            for (row, _, l) in &next {
                rows.push(row.clone());
                levels.push(*l);
            }
            frontier = next;
        }
        LinearJetSystem {
            n,
            m,
            q: self.q + r,
            rows,
            levels,
        }
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: SystemFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut rows = Vec::new();
        for re in f.rows {
            let mut row = Row::new();
            for t in re.terms {
                if t.k == 0 || t.k > f.m || t.mu.n() != f.n {
                    return Err(Error::Dimension(format!(
                        "term index out of range (k is 1-based, mu has {} entries)",
                        f.n
                    )));
                }
                if t.coeff.nvars() > f.n {
                    return Err(Error::Dimension(format!(
                        "coefficient {} uses variables beyond x{}",
                        t.coeff, f.n
                    )));
                }
                row.add_term(f.m, t.k - 1, &t.mu, t.coeff);
            }
            rows.push(row);
        }
        LinearJetSystem::new(f.n, f.m, f.q, rows)
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let rows = self
            .rows
            .iter()
            .map(|r| RowEntry {
                terms: r
                    .terms()
                    .map(|(i, c)| {
                        let (k, mu) = jet_decode(self.n, self.m, i);
                        TermEntry {
                            k: k + 1,
                            mu,
                            coeff: c.clone(),
                        }
                    })
                    .collect(),
            })
            .collect();
        serde_json::to_value(SystemFile {
            n: self.n,
            m: self.m,
            q: self.q,
            rows,
        })
        .expect("serializable")
    }

    /// Human-readable rows, e.g. "x2*y1_10 + y2 = 0" (mu written as digits).
    pub fn display_rows(&self) -> Vec<String> {
        self.rows
            .iter()
            .map(|r| {
                let parts: Vec<String> = r
                    .terms()
                    .rev()
                    .map(|(i, c)| {
                        let (k, mu) = jet_decode(self.n, self.m, i);
                        let var = if mu.order() == 0 {
                            format!("y{}", k + 1)
                        } else {
                            format!(
                                "y{}_{}",
                                k + 1,
                                mu.as_slice().iter().map(|e| e.to_string()).collect::<String>()
                            )
                        };
                        if c.is_one() {
                            var
                        } else if c.numer().num_terms() > 1 {
                            format!("({c})*{var}")
                        } else {
                            format!("{c}*{var}")
                        }
                    })
                    .collect();
                format!(
                    "{} = 0",
                    if parts.is_empty() {
                        "0".to_string()
                    } else {
                        parts.join(" + ")
                    }
                )
            })
            .collect()
    }
}
