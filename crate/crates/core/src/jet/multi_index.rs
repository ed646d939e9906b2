//! Multi-indices and the frozen enumeration of jet coordinates.
//!
//! Order: graded by |mu|; within a grade, descending lexicographic in
//! (mu_1, ..., mu_n), so x1-derivatives come first, e.g. for n = 2:
//! (0,0) (1,0) (0,1) (2,0) (1,1) (0,2). Jet coordinate y^k_mu has index
//! pos(mu) * m + k; the coordinates of J_q form a prefix of those of
//! J_{q+1}.

use crate::foundation::{rat, Rational};
use crate::lie_deform::binomial;
use serde::{Deserialize, Serialize};

#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiIndex(Vec<u32>);

impl MultiIndex {
    pub fn zero(n: usize) -> Self {
        MultiIndex(vec![0; n])
    }

    pub fn new(v: Vec<u32>) -> Self {
        MultiIndex(v)
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = vec![0; n];
        v[i] = 1;
        MultiIndex(v)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn order(&self) -> usize {
        self.0.iter().sum::<u32>() as usize
    }

    /// Smallest i (0-based) with mu_i != 0; None for the zero index.
    pub fn class(&self) -> Option<usize> {
        self.0.iter().position(|&e| e != 0)
    }

    pub fn plus(&self, i: usize) -> Self {
        let mut v = self.0.clone();
        v[i] += 1;
        MultiIndex(v)
    }

    pub fn minus(&self, i: usize) -> Option<Self> {
        if self.0[i] == 0 {
            return None;
        }
        let mut v = self.0.clone();
        v[i] -= 1;
        Some(MultiIndex(v))
    }

    pub fn add(&self, o: &MultiIndex) -> Self {
        MultiIndex(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, o: &MultiIndex) -> Option<Self> {
        self.0
            .iter()
            .zip(&o.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// Multinomial coefficient nu!/(lambda!(nu-lambda)!).
    pub fn binom(&self, lambda: &MultiIndex) -> Rational {
        let mut acc = 1usize;
        for (a, b) in self.0.iter().zip(&lambda.0) {
            acc *= binomial(*a as usize, *b as usize);
        }
        rat(acc as i64)
    }

    /// All lambda <= self componentwise.
    pub fn below(&self) -> Vec<MultiIndex> {
        let mut out = vec![Vec::new()];
        for &e in &self.0 {
            out = out
                .into_iter()
                .flat_map(|p| (0..=e).map(move |v| [p.clone(), vec![v]].concat()))
                .collect();
        }
        out.into_iter().map(MultiIndex).collect()
    }

    /// Position in the frozen enumeration.
    pub fn position(&self) -> usize {
        let n = self.n();
        let k = self.order();
        grade_offset(n, k) + rank_in_grade(&self.0, k)
    }

    pub fn from_position(n: usize, pos: usize) -> Self {
        let mut k = 0;
        while grade_offset(n, k + 1) <= pos {
            k += 1;
        }
        let mut r = pos - grade_offset(n, k);
        let mut v = vec![0u32; n];
        let mut used = 0;
        for i in 0..n.saturating_sub(1) {
            let rem = k - used;
            for val in (0..=rem).rev() {
                let cnt = completions(rem - val, n - i - 1);
                if r < cnt {
                    v[i] = val as u32;
                    used += val;
                    break;
                }
                r -= cnt;
            }
        }
        if n > 0 {
            v[n - 1] = (k - used) as u32;
        }
        MultiIndex(v)
    }
}

/// Number of multi-indices in `vars` variables of total order `k`.
fn completions(k: usize, vars: usize) -> usize {
    if vars == 0 {
        return (k == 0) as usize;
    }
    binomial(k + vars - 1, vars - 1)
}

/// Number of multi-indices of order < k.
pub fn grade_offset(n: usize, k: usize) -> usize {
    if k == 0 {
        0
    } else {
        binomial(n + k - 1, n)
    }
}

fn rank_in_grade(v: &[u32], k: usize) -> usize {
    let n = v.len();
    let mut rank = 0;
    let mut used = 0;
    for i in 0..n.saturating_sub(1) {
        let rem = k - used;
        for val in (v[i] as usize + 1)..=rem {
            rank += completions(rem - val, n - i - 1);
        }
        used += v[i] as usize;
    }
    rank
}

/// Multi-indices of order exactly k, in frozen order.
pub fn of_order(n: usize, k: usize) -> Vec<MultiIndex> {
    (grade_offset(n, k)..grade_offset(n, k + 1))
        .map(|p| MultiIndex::from_position(n, p))
        .collect()
}

/// Multi-indices of order <= q, in frozen order.
pub fn up_to(n: usize, q: usize) -> Vec<MultiIndex> {
    (0..grade_offset(n, q + 1))
        .map(|p| MultiIndex::from_position(n, p))
        .collect()
}

/// dim J_q(E) for n base and m fiber variables.
pub fn jet_dim(n: usize, m: usize, q: usize) -> usize {
    grade_offset(n, q + 1) * m
}

/// dim S_q T* (x) E.
pub fn sym_dim(n: usize, m: usize, q: usize) -> usize {
    completions(q, n) * m
}

pub fn jet_index(m: usize, k: usize, mu: &MultiIndex) -> usize {
    mu.position() * m + k
}

pub fn jet_decode(n: usize, m: usize, idx: usize) -> (usize, MultiIndex) {
    (idx % m, MultiIndex::from_position(n, idx / m))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn frozen_order_n2() {
        let v: Vec<Vec<u32>> = up_to(2, 2).into_iter().map(|m| m.0).collect();
        assert_eq!(
            v,
            vec![vec![0, 0], vec![1, 0], vec![0, 1], vec![2, 0], vec![1, 1], vec![0, 2]]
        );
    }

    #[test]
    fn positions_roundtrip() {
        for n in 1..=4 {
            for (p, mu) in up_to(n, 4).iter().enumerate() {
                assert_eq!(mu.position(), p);
            }
            assert_eq!(up_to(n, 3).len(), binomial(n + 3, 3));
        }
    }

    #[test]
    fn class_and_binomials() {
        assert_eq!(MultiIndex::new(vec![0, 2, 1]).class(), Some(1));
        assert_eq!(MultiIndex::zero(3).class(), None);
        let nu = MultiIndex::new(vec![2, 1]);
        assert_eq!(nu.binom(&MultiIndex::new(vec![1, 1])), rat(2));
        assert_eq!(nu.below().len(), 6);
    }
}
