use std::sync::Arc;

use eulersym_core::poly::monomials_of_degree;
use eulersym_core::scalar::{binomial_scalar, ratio};
use eulersym_core::{Polynomial, Scalar, VarContext, Vector};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-20i64..=20, 1i64..=10).prop_map(|(n, d)| ratio(n, d))
}

fn vector(n: usize) -> impl Strategy<Value = Vector> {
    prop::collection::vec(rational(), n).prop_map(Vector)
}

/// Homogeneous form of the given degree with up to five random terms.
fn form(ctx: Arc<VarContext>, degree: usize) -> impl Strategy<Value = Polynomial> {
    let monomials = monomials_of_degree(ctx.n(), degree);
    let count = monomials.len();
    prop::collection::vec((0..count, rational()), 1..6)
        .prop_map(move |terms| Polynomial::from_terms(&ctx, terms.into_iter().map(|(i, c)| (monomials[i].clone(), c))))
}

fn case() -> impl Strategy<Value = (Polynomial, Vector, Vector, usize)> {
    (1usize..=3, 2usize..=5).prop_flat_map(|(n, k)| {
        let ctx = VarContext::standard(n);
        (form(ctx, k), vector(n), vector(n), 1..=k)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    /// `ι_{v+u}^j = Σ_l C(j,l) ι_v^l ∘ ι_u^{j-l}`.
    #[test]
    fn binomial_contraction_identity((p, u, v, j) in case()) {
        let lhs = p.contract(&v.add(&u), j).unwrap();
        let mut rhs = Polynomial::zero(p.context());
        for l in 0..=j {
            let term = p.contract(&u, j - l).unwrap().contract(&v, l).unwrap();
            rhs = &rhs + &term.scale(&binomial_scalar(j, l));
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn contraction_is_linear_in_the_vector((p, u, v, _j) in case(), a in rational(), b in rational()) {
        let combined = u.scale(&a).add(&v.scale(&b));
        let lhs = p.contract(&combined, 1).unwrap();
        let rhs = &p.contract(&u, 1).unwrap().scale(&a) + &p.contract(&v, 1).unwrap().scale(&b);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn full_contraction_is_evaluation((p, w, _v, _j) in case()) {
        let k = p.homogeneous_degree().unwrap_or(0);
        let full = p.contract(&w, k).unwrap();
        prop_assert_eq!(full, Polynomial::constant(p.context(), p.evaluate(&w).unwrap()));
        prop_assert_eq!(p.polarize(&vec![w.clone(); k]).unwrap(), p.evaluate(&w).unwrap());
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for rest in permutations(n - 1) {
        for pos in 0..=rest.len() {
            let mut p = rest.clone();
            p.insert(pos, n - 1);
            out.push(p);
        }
    }
    out
}

/// Brute force over every ordering of the arguments.
#[test]
fn polarization_is_symmetric() {
    let mut sampler = eulersym_core::sample::Sampler::new(50);
    for trial in 0..50 {
        let n = 2 + trial % 2;
        let k = 2 + trial % 3;
        let ctx = VarContext::standard(n);
        let p = sampler.form(&ctx, k, 4);
        let args: Vec<Vector> = (0..k).map(|_| sampler.vector(n)).collect();
        let reference = p.polarize(&args).unwrap();
        for perm in permutations(k) {
            let permuted: Vec<Vector> = perm.iter().map(|&i| args[i].clone()).collect();
            assert_eq!(p.polarize(&permuted).unwrap(), reference);
        }
    }
}

/// Polarization against the expansion of `P(Σ s_i w_i)` in the
/// coefficient of `s_1⋯s_k`, divided by `k!`.
#[test]
fn polarization_matches_multilinear_expansion() {
    let mut sampler = eulersym_core::sample::Sampler::new(51);
    for trial in 0..20 {
        let k = 2 + trial % 3;
        let n = 2;
        let ctx = VarContext::standard(n);
        let p = sampler.form(&ctx, k, 3);
        let args: Vec<Vector> = (0..k).map(|_| sampler.vector(n)).collect();
        // inclusion-exclusion: k! φ(w_1..w_k) = Σ_{S} (-1)^{k-|S|} P(Σ_{i∈S} w_i)
        let mut acc = Scalar::from_integer(0.into());
        for mask in 0u32..(1 << k) {
            let mut sum = Vector::zero(n);
            for (i, w) in args.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    sum = sum.add(w);
                }
            }
            let value = p.evaluate(&sum).unwrap();
            if (k - mask.count_ones() as usize).is_multiple_of(2) {
                acc += value;
            } else {
                acc -= value;
            }
        }
        let factorial: i64 = (1..=k as i64).product();
        assert_eq!(p.polarize(&args).unwrap(), acc / Scalar::from_integer(factorial.into()));
    }
}
