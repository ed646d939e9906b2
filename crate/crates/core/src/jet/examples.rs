//! Reference systems on J_1(T).

use super::lie_rows::{contact_density_system, metric_system, one_and_two_form_system, one_form_system};
use super::system::LinearJetSystem;
use crate::foundation::RatFun;

fn f(s: &str) -> RatFun {
    RatFun::parse(s).expect("valid literal")
}

/// L(xi)(x2 dx1) = 0 on the plane.
pub fn pfaffian_x2_dx1() -> LinearJetSystem {
    one_form_system(&[f("x2"), f("0")]).expect("valid system")
}

/// Killing system of the flat metric on R^n.
pub fn flat_killing(n: usize) -> LinearJetSystem {
    let g: Vec<Vec<RatFun>> = (0..n)
        .map(|i| (0..n).map(|j| RatFun::int((i == j) as i64)).collect())
        .collect();
    metric_system(&g).expect("valid system")
}

/// Infinitesimal contact transformations of alpha = dx1 - x3 dx2 (the
/// 1-form density of weight -1/2 is invariant).
pub fn special_contact() -> LinearJetSystem {
    contact_density_system(&[f("1"), f("-x3"), f("0")]).expect("valid system")
}

/// L(xi)alpha = 0, L(xi)d(alpha) = 0 for alpha = dx1 - x3 dx2.
pub fn unimodular_contact() -> LinearJetSystem {
    let z = RatFun::zero();
    let b = vec![
        vec![z.clone(), z.clone(), z.clone()],
        vec![z.clone(), z.clone(), f("1")],
        vec![z.clone(), f("-1"), z],
    ];
    one_and_two_form_system(&[f("1"), f("-x3"), f("0")], &b).expect("valid system")
}
