use liedef::foundation::{rat, RatFun, Rational};
use liedef::jet::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn lie_bracket(a: &[RatFun], b: &[RatFun]) -> Vec<RatFun> {
    let n = a.len();
    (0..n)
        .map(|k| {
            let mut acc = RatFun::zero();
            for r in 0..n {
                acc = &acc + &(&a[r] * &b[k].derivative(r));
                acc = &acc - &(&b[r] * &a[k].derivative(r));
            }
            acc
        })
        .collect()
}

/// zeta (vector field) acting on the first-order section xi through L(xi_1)zeta.
fn contract(zeta: &[RatFun], f: &JetSection) -> JetSection {
    contract_spencer(zeta, f).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 12, .. ProptestConfig::default() })]

    #[test]
    fn differential_bracket_jacobi(seed in any::<u64>(), q in 1usize..=2) {
        let mut r = rng(seed);
        let a = random_section(2, 2, q, 2, &mut r);
        let b = random_section(2, 2, q, 2, &mut r);
        let c = random_section(2, 2, q, 2, &mut r);
        let t1 = bracket(&a, &bracket(&b, &c).unwrap()).unwrap();
        let t2 = bracket(&b, &bracket(&c, &a).unwrap()).unwrap();
        let t3 = bracket(&c, &bracket(&a, &b).unwrap()).unwrap();
        prop_assert!(t1.add(&t2).unwrap().add(&t3).unwrap().is_zero());
    }

    #[test]
    fn bracket_is_lift_independent(seed in any::<u64>()) {
        let mut r = rng(seed);
        let a2 = random_section(2, 2, 2, 2, &mut r);
        let b2 = random_section(2, 2, 2, 2, &mut r);
        let (a, b) = (a2.project(1).unwrap(), b2.project(1).unwrap());
        let x = differential_bracket(&a, &b, &a2, &b2).unwrap();
        prop_assert_eq!(x, bracket(&a, &b).unwrap());
    }

    #[test]
    fn contraction_of_algebraic_bracket(seed in any::<u64>(), q in 1usize..=2) {
        let mut r = rng(seed);
        let xi = random_section(2, 2, q + 1, 2, &mut r);
        let eta = random_section(2, 2, q + 1, 2, &mut r);
        let zeta = random_section(2, 2, 0, 2, &mut r);
        let z = zeta.base();
        let lhs = contract(z, &algebraic_bracket(&xi, &eta).unwrap());
        let rhs = algebraic_bracket(&contract(z, &xi), &eta.project(q).unwrap())
            .unwrap()
            .add(&algebraic_bracket(&xi.project(q).unwrap(), &contract(z, &eta)).unwrap())
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_of_differential_bracket(seed in any::<u64>()) {
        let q = 1;
        let mut r = rng(seed);
        let xi = random_section(2, 2, q + 1, 2, &mut r);
        let eta = random_section(2, 2, q + 1, 2, &mut r);
        let zeta = random_section(2, 2, 0, 2, &mut r);
        let z = zeta.base();
        let lhs = contract(z, &bracket(&xi, &eta).unwrap());
        let l_eta = lie_derivative_of_field(&eta.project(1).unwrap(), z).unwrap();
        let l_xi = lie_derivative_of_field(&xi.project(1).unwrap(), z).unwrap();
        let rhs = bracket(&contract(z, &xi), &eta.project(q).unwrap())
            .unwrap()
            .add(&bracket(&xi.project(q).unwrap(), &contract(z, &eta)).unwrap())
            .unwrap()
            .add(&contract(&l_eta, &xi))
            .unwrap()
            .sub(&contract(&l_xi, &eta))
            .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_two_forms_agree(seed in any::<u64>(), q in 0usize..=2) {
        let mut r = rng(seed);
        let xi = random_section(2, 2, q + 1, 2, &mut r);
        let eta = random_section(2, 2, q, 2, &mut r);
        prop_assert_eq!(formal_lie_derivative(&xi, &eta).unwrap(), formal_lie_derivative_alt(&xi, &eta).unwrap());
    }

    #[test]
    fn lie_derivative_leibniz(seed in any::<u64>()) {
        let mut r = rng(seed);
        let xi = random_section(2, 2, 2, 2, &mut r);
        let eta = random_section(2, 2, 1, 2, &mut r);
        let f = random_poly(2, 2, &mut r);
        let lhs = formal_lie_derivative(&xi, &eta.mul_fn(&f)).unwrap();
        let xf = (0..2).fold(RatFun::zero(), |acc, i| &acc + &(&xi.base()[i] * &f.derivative(i)));
        let rhs = formal_lie_derivative(&xi, &eta).unwrap().mul_fn(&f).add(&eta.mul_fn(&xf)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn lie_derivative_commutator(seed in any::<u64>()) {
        let mut r = rng(seed);
        let xi = random_section(2, 2, 2, 1, &mut r);
        let eta = random_section(2, 2, 2, 1, &mut r);
        let zeta = random_section(2, 2, 1, 2, &mut r);
        let l = |a: &JetSection, b: &JetSection| formal_lie_derivative(a, b).unwrap();
        let lhs = l(&xi, &l(&eta, &zeta)).sub(&l(&eta, &l(&xi, &zeta))).unwrap();
        let rhs = l(&bracket(&xi, &eta).unwrap(), &zeta);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn jets_are_in_spencer_kernel(seed in any::<u64>(), n in 1usize..=3, q in 0usize..=2) {
        let mut r = rng(seed);
        let fields: Vec<RatFun> = (0..2).map(|_| random_poly(n, q as u32 + 2, &mut r)).collect();
        for d in spencer_operator(&JetSection::jet_of(n, q + 1, &fields)).unwrap() {
            prop_assert!(d.is_zero());
        }
    }

    #[test]
    fn spencer_operator_top_order_is_minus_delta(seed in any::<u64>(), n in 1usize..=3, q in 0usize..=2, m in 1usize..=2) {
        let mut r = rng(seed);
        let mut s = JetSection::zero(n, m, q + 1);
        let top: Vec<Rational> = (0..sym_dim(n, m, q + 1)).map(|_| rat(rand::Rng::gen_range(&mut r, -3..=3))).collect();
        let off = grade_offset(n, q + 1) * m;
        for (i, v) in top.iter().enumerate() {
            let (k, mu) = jet_decode(n, m, off + i);
            s.set(k, &mu, RatFun::constant(v.clone()));
        }
        let d = spencer_operator(&s).unwrap();
        let delta = spencer_delta_matrix(n, m, q, 0).mul_vec(&top).unwrap();
        let low = grade_offset(n, q) * m;
        for (i, di) in d.iter().enumerate() {
            for j in 0..sym_dim(n, m, q) {
                let want = -delta[i * sym_dim(n, m, q) + j].clone();
                prop_assert_eq!(di.components()[low + j].clone(), RatFun::constant(want));
            }
        }
    }
}

#[test]
fn bracket_restricts_to_vector_fields() {
    let mut r = rng(11);
    let a: Vec<RatFun> = (0..2).map(|_| random_poly(2, 3, &mut r)).collect();
    let b: Vec<RatFun> = (0..2).map(|_| random_poly(2, 3, &mut r)).collect();
    let out = bracket(&JetSection::jet_of(2, 0, &a), &JetSection::jet_of(2, 0, &b)).unwrap();
    assert_eq!(out.base(), lie_bracket(&a, &b).as_slice());
}

#[test]
fn prolonged_symbol_matches_prolongation_of_symbol() {
    // g_{q+1} of the prolonged system equals the first prolongation of g_q,
    // computed as the kernel of delta restricted to T* (x) g_q.
    for sys in [
        examples::special_contact(),
        examples::unimodular_contact(),
        examples::flat_killing(2),
    ] {
        let pr = sys.prolong(1);
        let g1 = symbol_generic(&pr, 3).unwrap();
        let g0 = symbol_generic(&sys, 3).unwrap();
        let (n, m, q) = (sys.n, sys.m, sys.q);
        let d = spencer_delta_matrix(n, m, q, 0);
        let sd = sym_dim(n, m, q);
        // v in S_{q+1}(x)E with each delta_i v in g_q
        let mut cons: Vec<Vec<Rational>> = Vec::new();
        let gperp = liedef::foundation::ExactMatrix::from_columns(&g0.basis, sd)
            .unwrap()
            .transpose()
            .kernel();
        for i in 0..n {
            for w in &gperp {
                let mut row = vec![rat(0); d.cols()];
                for j in 0..sd {
                    for c in 0..d.cols() {
                        row[c] = &row[c] + &(&w[j] * &d[(i * sd + j, c)]);
                    }
                }
                cons.push(row);
            }
        }
        let dim = if cons.is_empty() {
            d.cols()
        } else {
            d.cols() - liedef::foundation::ExactMatrix::from_rows(cons).unwrap().rank()
        };
        assert_eq!(g1.dim(), dim);
    }
}
