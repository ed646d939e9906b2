//! Seeded generic points for rank computations with variable coefficients.

use super::matrix::FnMatrix;
use super::ratfun::RatFun;
use super::rational::{rat, Rational};
use crate::error::{Error, Result};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const MAX_ATTEMPTS: usize = 200;

/// A point in Q^n, deterministic in `seed`, at which no function of
/// `forbidden` vanishes or has a pole.
pub fn generic_point(n: usize, forbidden: &[RatFun], seed: u64) -> Result<Vec<Rational>> {
    if forbidden.iter().any(RatFun::is_zero) {
        return Err(Error::IdenticallyZero);
    }
    if let Some(f) = forbidden.iter().find(|f| f.nvars() > n) {
        return Err(Error::Dimension(format!("{f} uses more than {n} variables")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        let pt: Vec<Rational> = (0..n)
            .map(|_| {
                let v: i64 = rng.gen_range(2..=60);
                if rng.gen_bool(0.5) {
                    rat(-v)
                } else {
                    rat(v)
                }
            })
            .collect();
        let ok = forbidden
            .iter()
            .all(|f| !f.denom().eval(&pt).is_zero() && !f.numer().eval(&pt).is_zero());
        if ok {
            return Ok(pt);
        }
    }
    Err(Error::NoGenericPoint(MAX_ATTEMPTS))
}

/// Generic rank of a matrix of rational functions: evaluated at two
/// seeded points; if they disagree, a few more points are tried and the
/// maximum is returned.
pub fn generic_rank(m: &FnMatrix, n: usize, seed: u64) -> Result<usize> {
    let dens = m.denominators();
    let mut ranks = Vec::new();
    for k in 0..6u64 {
        let pt = generic_point(n, &dens, seed.wrapping_add(k.wrapping_mul(0x9E37_79B9)))?;
        ranks.push(m.eval(&pt)?.rank());
        if ranks.len() >= 2 && ranks[0] == ranks[1] {
            break;
        }
    }
    Ok(ranks.into_iter().max().unwrap_or(0))
}
