//! The Steenrod algebra against independent references: the action on a
//! polynomial ring in degree-one classes, exhaustive rewriting orders, the
//! antipode recursion and Hopf algebra identities.

mod oracle;

use std::collections::BTreeSet;

use oracle::polynomial::*;
use sqpd::steenrod::{
    adem_reduce, adem_reduce_with, admissible_basis, antipode, antipode_sq, coproduct,
    is_admissible, AdmissibleMonomial, ReductionOrder, SteenrodElement, TensorElement,
};

#[test]
fn adem_relations_match_polynomial_action() {
    let xs = inputs();
    let mut words = 0;
    for n in 1..=12 {
        for word in compositions(n) {
            let reduced = adem_reduce(&word);
            assert!(reduced.terms().all(|m| is_admissible(m.exponents())));
            for x in &xs {
                assert_eq!(apply_word(&word, x), apply_element(&reduced, x), "{word:?} on {x:?}");
            }
            words += 1;
        }
    }
    assert_eq!(words, 4095);
}

#[test]
fn small_reductions() {
    assert_eq!(adem_reduce(&[1, 2]).to_string(), "Sq3");
    assert!(adem_reduce(&[1, 1]).is_zero());
    assert_eq!(adem_reduce(&[2, 2]).to_string(), "Sq3 Sq1");
    assert_eq!(adem_reduce(&[2, 3]).to_string(), "Sq5 + Sq4 Sq1");
}

#[test]
fn exhaustive_confluence() {
    let mut count = 0;
    for n in 1..=20 {
        for word in compositions(n).into_iter().filter(|w| w.len() <= 4) {
            let l = adem_reduce_with(&word, ReductionOrder::Leftmost);
            let r = adem_reduce_with(&word, ReductionOrder::Rightmost);
            assert_eq!(l, r, "{word:?}");
            count += 1;
        }
    }
    // compositions of n into at most 4 parts, summed over n <= 20
    let expected: u64 = (1..=20u64)
        .map(|n| (1..=4u64).map(|k| binomial(n - 1, k - 1)).sum::<u64>())
        .sum();
    assert_eq!(count as u64, expected);
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[test]
fn admissible_basis_counts() {
    // partitions of n into parts of the form 2^i - 1
    let parts: Vec<usize> = (1..6).map(|i| (1 << i) - 1).collect();
    let mut counts = [0usize; 21];
    counts[0] = 1;
    for &p in &parts {
        for n in p..=20 {
            counts[n] += counts[n - p];
        }
    }
    for n in 0..=20u32 {
        assert_eq!(admissible_basis(n).len(), counts[n as usize], "degree {n}");
    }
}

#[test]
fn antipode_recursion() {
    for k in 1..=20 {
        let mut sum = SteenrodElement::zero();
        for r in 0..=k {
            sum += &SteenrodElement::sq(k - r).multiply(&antipode_sq(r));
        }
        assert!(sum.is_zero(), "k = {k}");
    }
    assert_eq!(antipode_sq(1).to_string(), "Sq1");
    assert_eq!(antipode_sq(2).to_string(), "Sq2");
    assert_eq!(antipode_sq(3).to_string(), "Sq2 Sq1");
}

#[test]
fn antipode_is_an_involution_and_anti_multiplicative() {
    for n in 0..=16 {
        for m in admissible_basis(n).iter() {
            let x = SteenrodElement::from_monomial(m.clone());
            assert_eq!(antipode(&antipode(&x)), x, "{x}");
        }
    }
    for a in 1..=6 {
        for b in 1..=6 {
            let (x, y) = (SteenrodElement::sq(a), SteenrodElement::sq(b));
            assert_eq!(antipode(&x.multiply(&y)), antipode(&y).multiply(&antipode(&x)));
        }
    }
}

type Triple = (AdmissibleMonomial, AdmissibleMonomial, AdmissibleMonomial);

fn left_then(t: &TensorElement) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    for (a, b) in t.terms() {
        for (x, y) in coproduct(&SteenrodElement::from_monomial(a.clone())).terms() {
            let k = (x.clone(), y.clone(), b.clone());
            if !out.remove(&k) {
                out.insert(k);
            }
        }
    }
    out
}

fn right_then(t: &TensorElement) -> BTreeSet<Triple> {
    let mut out = BTreeSet::new();
    for (a, b) in t.terms() {
        for (x, y) in coproduct(&SteenrodElement::from_monomial(b.clone())).terms() {
            let k = (a.clone(), x.clone(), y.clone());
            if !out.remove(&k) {
                out.insert(k);
            }
        }
    }
    out
}

#[test]
fn coassociative_through_degree_16() {
    for n in 0..=16 {
        for m in admissible_basis(n).iter() {
            let psi = coproduct(&SteenrodElement::from_monomial(m.clone()));
            assert_eq!(left_then(&psi), right_then(&psi), "{m}");
        }
    }
}

#[test]
fn coproduct_of_squares_and_multiplicativity() {
    for n in 0..=10 {
        let mut expect = TensorElement::zero();
        for i in 0..=n {
            expect.add_assign(&TensorElement::from_pair(AdmissibleMonomial::sq(i), AdmissibleMonomial::sq(n - i)));
        }
        assert_eq!(coproduct(&SteenrodElement::sq(n)), expect);
    }
    for a in 1..=5 {
        for b in 1..=5 {
            let x = SteenrodElement::sq(a);
            let y = SteenrodElement::sq(b);
            assert_eq!(coproduct(&x.multiply(&y)), coproduct(&x).multiply(&coproduct(&y)));
        }
    }
}

#[test]
fn coproduct_matches_cartan_on_polynomials() {
    // a(pq) = Σ a'(p) a''(q) for p, q in disjoint variables
    let p = Poly::from([[2, 1, 0, 0]]);
    let q = Poly::from([[0, 0, 1, 2]]);
    let pq = Poly::from([[2, 1, 1, 2]]);
    for n in 1..=8 {
        for m in admissible_basis(n).iter() {
            let a = SteenrodElement::from_monomial(m.clone());
            let mut rhs = Poly::new();
            for (l, r) in coproduct(&a).terms() {
                let lp = apply_word(l.exponents(), &p);
                let rq = apply_word(r.exponents(), &q);
                for x in &lp {
                    for y in &rq {
                        toggle(&mut rhs, [x[0] + y[0], x[1] + y[1], x[2] + y[2], x[3] + y[3]]);
                    }
                }
            }
            assert_eq!(apply_element(&a, &pq), rhs, "{m}");
        }
    }
}
