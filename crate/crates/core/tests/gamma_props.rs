mod common;

use std::collections::BTreeMap;

use kquiver::gamma::{
    coproduct, coproduct2, lr_coeff, mul, product_basis, skew_expand, straighten, GammaElement, TensorElement,
};
use kquiver::part;
use kquiver::partitions::{expand_single, Partition, SkewShape};
use proptest::prelude::*;

type Poly = BTreeMap<Vec<usize>, i64>;

fn poly_mul(a: &Poly, b: &Poly, max_deg: usize) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            if e.iter().sum::<usize>() <= max_deg {
                *out.entry(e).or_insert(0) += ca * cb;
            }
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_of(g: &GammaElement, vars: usize, max_deg: usize) -> Poly {
    let mut out = Poly::new();
    for (nu, c) in g.iter() {
        for (e, k) in expand_single(nu, vars, max_deg) {
            *out.entry(e).or_insert(0) += c * k;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn small_partition(max_weight: usize) -> impl Strategy<Value = Partition> {
    let all = Partition::all_up_to_weight(max_weight);
    (0..all.len()).prop_map(move |i| all[i].clone())
}

#[test]
fn products_match_polynomial_multiplication() {
    // truncating both sides at the same degree in three variables
    let (vars, max_deg) = (3, 6);
    for a in Partition::all_up_to_weight(3) {
        for b in Partition::all_up_to_weight(3) {
            let lhs = poly_mul(&expand_single(&a, vars, max_deg), &expand_single(&b, vars, max_deg), max_deg);
            let rhs = poly_of(&product_basis(&a, &b), vars, max_deg);
            assert_eq!(lhs, rhs, "G{a} * G{b}");
        }
    }
}

#[test]
fn coproduct_matches_variable_splitting() {
    // G_ν(x₁, x₂; y₁, y₂) = Σ d^ν_{λμ} G_λ(x) G_μ(y)
    let max_deg = 6;
    for nu in Partition::all_up_to_weight(4) {
        let full = expand_single(&nu, 4, max_deg);
        let mut split = Poly::new();
        for (key, d) in coproduct(&nu).iter() {
            let left = expand_single(&key[0], 2, max_deg);
            let right = expand_single(&key[1], 2, max_deg);
            for (ea, ca) in &left {
                for (eb, cb) in &right {
                    let e: Vec<usize> = ea.iter().chain(eb).copied().collect();
                    if e.iter().sum::<usize>() <= max_deg {
                        *split.entry(e).or_insert(0) += d * ca * cb;
                    }
                }
            }
        }
        split.retain(|_, c| *c != 0);
        assert_eq!(full, split, "Δ(G{nu})");
    }
}

#[test]
fn skew_polynomials_of_straight_shapes_are_basis_elements() {
    for nu in Partition::all_up_to_weight(5) {
        assert_eq!(skew_expand(&SkewShape::straight(nu.clone())), GammaElement::basis(nu));
    }
}

#[test]
fn skew_lowest_terms_follow_classical_rule() {
    // the lowest-degree part of G_{ν/λ} is s_{ν/λ} = Σ c^ν_{λμ} s_μ
    for nu in Partition::all_up_to_weight(4) {
        for lambda in Partition::all_up_to_weight(nu.weight()) {
            if !nu.contains(&lambda) {
                continue;
            }
            let skew = skew_expand(&SkewShape::new(nu.clone(), lambda.clone()).unwrap());
            let size = nu.weight() - lambda.weight();
            for (mu, c) in skew.homogeneous_part(size).iter() {
                assert_eq!(c, lr_coeff(&lambda, mu, &nu), "{nu}/{lambda} at {mu}");
            }
        }
    }
}

#[test]
fn two_fold_coproduct_is_coassociative_on_rectangles() {
    for rect in [part![1], part![2, 2], part![3], part![1, 1, 1], part![3, 3]] {
        let lhs = coproduct2(&rect);
        let mut rhs = TensorElement::zero(3);
        for (key, c) in coproduct(&rect).iter() {
            for (inner, d) in coproduct(&key[1]).iter() {
                rhs.add_term(vec![key[0].clone(), inner[0].clone(), inner[1].clone()], c * d);
            }
        }
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn straightening_leaves_partitions_alone() {
    for p in Partition::all_up_to_weight(6) {
        let seq: Vec<i64> = p.parts().iter().map(|&x| x as i64).collect();
        assert_eq!(straighten(&seq).unwrap(), GammaElement::basis(p.clone()));
        let mut padded = seq.clone();
        padded.extend([0, 0, -1, -3]);
        assert_eq!(straighten(&padded).unwrap(), GammaElement::basis(p));
    }
}

proptest! {
    #[test]
    fn product_is_commutative(a in small_partition(4), b in small_partition(4)) {
        prop_assert_eq!(&*product_basis(&a, &b), &*product_basis(&b, &a));
    }

    #[test]
    fn product_signs_alternate(a in small_partition(4), b in small_partition(4)) {
        let base = a.weight() + b.weight();
        for (nu, c) in product_basis(&a, &b).iter() {
            prop_assert!(nu.weight() >= base);
            prop_assert!(nu.contains(&a) && nu.contains(&b));
            let expected = if (nu.weight() - base) % 2 == 0 { 1 } else { -1 };
            prop_assert!(c * expected > 0);
            prop_assert!(nu.part(0) <= a.part(0) + b.part(0));
            prop_assert!(nu.length() <= a.length() + b.length());
        }
    }

    #[test]
    fn lr_coeff_agrees_with_full_product(a in small_partition(3), b in small_partition(3)) {
        let prod = product_basis(&a, &b);
        for nu in Partition::all_up_to_weight(a.weight() + b.weight() + 2) {
            prop_assert_eq!(lr_coeff(&a, &b, &nu), prod.coeff(&nu));
        }
    }

    #[test]
    fn coproduct_is_cocommutative(nu in small_partition(5)) {
        let delta = coproduct(&nu);
        for (key, c) in delta.iter() {
            prop_assert_eq!(delta.coeff(&[key[1].clone(), key[0].clone()]), c);
            prop_assert!(key[0].weight() + key[1].weight() >= nu.weight());
            let expected = if (key[0].weight() + key[1].weight() - nu.weight()) % 2 == 0 { 1 } else { -1 };
            prop_assert!(c * expected > 0);
        }
    }

    #[test]
    fn product_is_associative(a in small_partition(3), b in small_partition(3), c in small_partition(3)) {
        let (ga, gb, gc) = (GammaElement::basis(a), GammaElement::basis(b), GammaElement::basis(c));
        prop_assert_eq!(mul(&mul(&ga, &gb), &gc), mul(&ga, &mul(&gb, &gc)));
    }
}

#[test]
fn classical_limit_on_larger_pairs() {
    for (a, b) in [(part![3, 2], part![2, 1]), (part![2, 2, 1], part![3, 1]), (part![4], part![2, 2])] {
        let got: BTreeMap<Partition, i64> = product_basis(&a, &b)
            .homogeneous_part(a.weight() + b.weight())
            .iter()
            .map(|(p, c)| (p.clone(), c))
            .collect();
        assert_eq!(got, common::classical_lr(&a, &b), "{a} * {b}");
    }
}
