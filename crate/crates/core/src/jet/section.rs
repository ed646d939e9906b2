use super::multi_index::{jet_decode, jet_dim, jet_index, up_to, MultiIndex};
use crate::error::{Error, Result};
use crate::foundation::{rat, Monomial, Poly, RatFun};
use rand::Rng;
use serde::{Deserialize, Serialize};

/// A section of J_q(E): components f^k_mu(x), |mu| <= q, as rational
/// functions of x1..xn. Components are stored in frozen jet order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JetSection {
    n: usize,
    m: usize,
    q: usize,
    comps: Vec<RatFun>,
}

impl JetSection {
    pub fn zero(n: usize, m: usize, q: usize) -> Self {
        JetSection {
            n,
            m,
            q,
            comps: vec![RatFun::zero(); jet_dim(n, m, q)],
        }
    }

    pub fn from_components(n: usize, m: usize, q: usize, comps: Vec<RatFun>) -> Result<Self> {
        if comps.len() != jet_dim(n, m, q) {
            return Err(Error::Dimension(format!(
                "J_{q} with n={n}, m={m} has {} components",
                jet_dim(n, m, q)
            )));
        }
        Ok(JetSection { n, m, q, comps })
    }

    /// j_q(f) for fields f^1..f^m.
    pub fn jet_of(n: usize, q: usize, fields: &[RatFun]) -> Self {
        let m = fields.len();
        let mut s = JetSection::zero(n, m, q);
        for mu in up_to(n, q) {
            for (k, f) in fields.iter().enumerate() {
                let mut g = f.clone();
                for (i, &e) in mu.as_slice().iter().enumerate() {
                    for _ in 0..e {
                        g = g.derivative(i);
                    }
                }
                s.set(k, &mu, g);
            }
        }
        s
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn components(&self) -> &[RatFun] {
        &self.comps
    }

    pub fn get(&self, k: usize, mu: &MultiIndex) -> &RatFun {
        debug_assert!(mu.order() <= self.q);
        &self.comps[jet_index(self.m, k, mu)]
    }

    pub fn set(&mut self, k: usize, mu: &MultiIndex, v: RatFun) {
        let i = jet_index(self.m, k, mu);
        self.comps[i] = v;
    }

    /// The order-0 part f^1..f^m.
    pub fn base(&self) -> &[RatFun] {
        &self.comps[..self.m]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(RatFun::is_zero)
    }

    /// f^k_{mu+1_i} = d_i f^k_mu whenever |mu| < q.
    pub fn is_holonomic(&self) -> bool {
        for mu in up_to(self.n, self.q.saturating_sub(1)) {
            if mu.order() >= self.q {
                continue;
            }
            for k in 0..self.m {
                for i in 0..self.n {
                    if self.get(k, &mu).derivative(i) != *self.get(k, &mu.plus(i)) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Truncation to order r <= q.
    pub fn project(&self, r: usize) -> Result<Self> {
        if r > self.q {
            return Err(Error::Invalid(format!("cannot project order {} to order {r}", self.q)));
        }
        Ok(JetSection {
            n: self.n,
            m: self.m,
            q: r,
            comps: self.comps[..jet_dim(self.n, self.m, r)].to_vec(),
        })
    }

    /// Extension to order r >= q with zero new components.
    pub fn zero_lift(&self, r: usize) -> Self {
        let mut comps = self.comps.clone();
        comps.resize(jet_dim(self.n, self.m, r.max(self.q)), RatFun::zero());
        JetSection {
            n: self.n,
            m: self.m,
            q: r.max(self.q),
            comps,
        }
    }

    fn check_same(&self, o: &Self) -> Result<()> {
        if (self.n, self.m, self.q) != (o.n, o.m, o.q) {
            return Err(Error::Dimension("jet sections live in different jet bundles".into()));
        }
        Ok(())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(JetSection {
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a + b).collect(),
            ..self.clone()
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.check_same(o)?;
        Ok(JetSection {
            comps: self.comps.iter().zip(&o.comps).map(|(a, b)| a - b).collect(),
            ..self.clone()
        })
    }

    pub fn mul_fn(&self, f: &RatFun) -> Self {
        JetSection {
            comps: self.comps.iter().map(|a| a * f).collect(),
            ..self.clone()
        }
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        let components: Vec<SectionEntry> = self
            .comps
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(i, v)| {
                let (k, mu) = jet_decode(self.n, self.m, i);
                SectionEntry {
                    k: k + 1,
                    mu,
                    expr: v.clone(),
                }
            })
            .collect();
        serde_json::to_value(SectionFile {
            n: self.n,
            m: self.m,
            q: self.q,
            components,
        })
        .expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: SectionFile = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = JetSection::zero(f.n, f.m, f.q);
        for e in f.components {
            if e.k == 0 || e.k > f.m || e.mu.n() != f.n || e.mu.order() > f.q {
                return Err(Error::Dimension("jet component out of range".into()));
            }
            if e.expr.nvars() > f.n {
                return Err(Error::Dimension(format!(
                    "expression {} uses variables beyond x{}",
                    e.expr, f.n
                )));
            }
            out.set(e.k - 1, &e.mu, e.expr);
        }
        Ok(out)
    }
}

#[derive(Serialize, Deserialize)]
struct SectionEntry {
    k: usize,
    mu: MultiIndex,
    expr: RatFun,
}

#[derive(Serialize, Deserialize)]
struct SectionFile {
    n: usize,
    m: usize,
    q: usize,
    components: Vec<SectionEntry>,
}

/// Spencer operator D : J_{q+1}(E) -> T* (x) J_q(E),
/// (Df)^k_{mu,i} = d_i f^k_mu - f^k_{mu+1_i}; entry i is i(d_i)Df.
pub fn spencer_operator(f: &JetSection) -> Result<Vec<JetSection>> {
    if f.q == 0 {
        return Err(Error::Invalid(
            "the Spencer operator needs a section of order >= 1".into(),
        ));
    }
    let q = f.q - 1;
    let mut out = Vec::with_capacity(f.n);
    for i in 0..f.n {
        let mut s = JetSection::zero(f.n, f.m, q);
        for mu in up_to(f.n, q) {
            for k in 0..f.m {
                s.set(k, &mu, &f.get(k, &mu).derivative(i) - f.get(k, &mu.plus(i)));
            }
        }
        out.push(s);
    }
    Ok(out)
}

/// i(zeta)Df = zeta^i (Df)_i for a vector field zeta.
pub fn contract_spencer(zeta: &[RatFun], f: &JetSection) -> Result<JetSection> {
    if zeta.len() != f.n {
        return Err(Error::Dimension("vector field and base dimension differ".into()));
    }
    let d = spencer_operator(f)?;
    let mut acc = JetSection::zero(f.n, f.m, f.q - 1);
    for (z, di) in zeta.iter().zip(&d) {
        if !z.is_zero() {
            acc = acc.add(&di.mul_fn(z))?;
        }
    }
    Ok(acc)
}

/// A polynomial of total degree <= deg with small random integer coefficients.
pub fn random_poly(n: usize, deg: u32, rng: &mut impl Rng) -> RatFun {
    let mut p = Poly::zero();
    let terms = rng.gen_range(0..=3);
    for _ in 0..terms {
        let mut e = vec![0u32; n];
        let mut d = rng.gen_range(0..=deg);
        while d > 0 {
            e[rng.gen_range(0..n)] += 1;
            d -= 1;
        }
        p.add_term(Monomial::from_exps(e), rat(rng.gen_range(-3..=3)));
    }
    RatFun::from(p)
}

/// A random (generally non-holonomic) section with polynomial components.
pub fn random_section(n: usize, m: usize, q: usize, deg: u32, rng: &mut impl Rng) -> JetSection {
    let comps = (0..jet_dim(n, m, q)).map(|_| random_poly(n, deg, rng)).collect();
    JetSection { n, m, q, comps }
}
