//! Algebraic and differential brackets on J_q(T) and the formal Lie
//! derivative.

use super::multi_index::up_to;
use super::section::{contract_spencer, JetSection};
use crate::error::{Error, Result};
use crate::foundation::RatFun;

fn check_pair(xi: &JetSection, eta: &JetSection) -> Result<()> {
    if xi.n() != xi.m() {
        return Err(Error::Invalid(
            "brackets are defined on jets of vector fields (m = n)".into(),
        ));
    }
    if (xi.n(), xi.m(), xi.q()) != (eta.n(), eta.m(), eta.q()) {
        return Err(Error::Dimension("sections must share n, m and order".into()));
    }
    if xi.q() == 0 {
        return Err(Error::Invalid("algebraic bracket needs order >= 1".into()));
    }
    Ok(())
}

/// {xi, eta}^k_nu = sum_{lambda+mu=nu} nu!/(lambda! mu!)
///   (xi^r_lambda eta^k_{mu+1_r} - eta^s_lambda xi^k_{mu+1_s}),
/// taking two sections of order q+1 to one of order q.
pub fn algebraic_bracket(xi: &JetSection, eta: &JetSection) -> Result<JetSection> {
    check_pair(xi, eta)?;
    let (n, q) = (xi.n(), xi.q() - 1);
    let mut out = JetSection::zero(n, n, q);
    for nu in up_to(n, q) {
        for k in 0..n {
            let mut acc = RatFun::zero();
            for lambda in nu.below() {
                let mu = nu.sub(&lambda).expect("lambda <= nu");
                let w = nu.binom(&lambda);
                let mut t = RatFun::zero();
                for r in 0..n {
                    let mr = mu.plus(r);
                    let a = xi.get(r, &lambda);
                    if !a.is_zero() {
                        t = &t + &(a * eta.get(k, &mr));
                    }
                    let b = eta.get(r, &lambda);
                    if !b.is_zero() {
                        t = &t - &(b * xi.get(k, &mr));
                    }
                }
                acc = &acc + &t.scale(&w);
            }
            out.set(k, &nu, acc);
        }
    }
    Ok(out)
}

/// [xi_q, eta_q] computed from lifts of order q+1:
/// {xi_{q+1}, eta_{q+1}} + i(xi)D eta_{q+1} - i(eta)D xi_{q+1}.
pub fn differential_bracket_of_lifts(xi: &JetSection, eta: &JetSection) -> Result<JetSection> {
    check_pair(xi, eta)?;
    let alg = algebraic_bracket(xi, eta)?;
    let a = contract_spencer(xi.base(), eta)?;
    let b = contract_spencer(eta.base(), xi)?;
    alg.add(&a)?.sub(&b)
}

/// [xi_q, eta_q] with caller-supplied lifts, which must project onto the
/// arguments. The result does not depend on the choice of lifts.
pub fn differential_bracket(
    xi: &JetSection,
    eta: &JetSection,
    xi_lift: &JetSection,
    eta_lift: &JetSection,
) -> Result<JetSection> {
    if xi_lift.q() != xi.q() + 1 || eta_lift.q() != eta.q() + 1 {
        return Err(Error::BadLift);
    }
    if xi_lift.project(xi.q())? != *xi || eta_lift.project(eta.q())? != *eta {
        return Err(Error::BadLift);
    }
    differential_bracket_of_lifts(xi_lift, eta_lift)
}

/// [xi_q, eta_q] using zero-extension lifts.
pub fn bracket(xi: &JetSection, eta: &JetSection) -> Result<JetSection> {
    differential_bracket_of_lifts(&xi.zero_lift(xi.q() + 1), &eta.zero_lift(eta.q() + 1))
}

/// L(xi_{q+1}) eta_q = {xi_{q+1}, eta_{q+1}} + i(xi)D eta_{q+1}, for any
/// lift eta_{q+1} of eta_q.
pub fn formal_lie_derivative(xi: &JetSection, eta: &JetSection) -> Result<JetSection> {
    if xi.q() != eta.q() + 1 {
        return Err(Error::Dimension("L(xi_{q+1}) acts on sections of order q".into()));
    }
    let lift = eta.zero_lift(xi.q());
    algebraic_bracket(xi, &lift)?.add(&contract_spencer(xi.base(), &lift)?)
}

/// The same operator via [xi_q, eta_q] + i(eta)D xi_{q+1}.
pub fn formal_lie_derivative_alt(xi: &JetSection, eta: &JetSection) -> Result<JetSection> {
    if xi.q() != eta.q() + 1 {
        return Err(Error::Dimension("L(xi_{q+1}) acts on sections of order q".into()));
    }
    let xq = xi.project(eta.q())?;
    differential_bracket(&xq, eta, xi, &eta.zero_lift(xi.q()))?.add(&contract_spencer(eta.base(), xi)?)
}

/// L(xi_1) acting on a vector field: -eta^s xi^k_s + xi^r d_r eta^k.
pub fn lie_derivative_of_field(xi1: &JetSection, eta: &[RatFun]) -> Result<Vec<RatFun>> {
    let n = xi1.n();
    if xi1.q() != 1 || eta.len() != n {
        return Err(Error::Dimension(
            "expected an order-1 section and a vector field".into(),
        ));
    }
    let e = JetSection::from_components(n, n, 0, eta.to_vec())?;
    Ok(formal_lie_derivative(xi1, &e)?.base().to_vec())
}
