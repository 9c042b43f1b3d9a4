//! Randomized invariants across the crate.

use proptest::prelude::*;

use sqpd::f2linalg::F2Vector;
use sqpd::gradmod::{
    direct_sum, dualize, free_module, iso_check, joker, shift, split_free_summands, tensor,
    AlgebraTag, GradedModule,
};
use sqpd::models::{model_bso3, model_j8};
use sqpd::spda::{Element, PresentedAlgebra};
use sqpd::steenrod::{adem_reduce, antipode, SteenrodElement};

/// Total square `Sq = Σ_k Sq^k` of a homogeneous element, as parts by degree.
fn total_sq(p: &PresentedAlgebra, x: &Element) -> Vec<Element> {
    (0..=p.top_degree())
        .map(|n| {
            if n < x.degree {
                p.zero(n)
            } else {
                p.steenrod_on(x, n - x.degree)
            }
        })
        .collect()
}

fn element(p: &PresentedAlgebra, n: u32, bits: u64) -> Element {
    let dim = p.dim_in(n);
    Element {
        degree: n,
        coords: F2Vector::from_indices(dim, (0..dim).filter(|i| bits >> i & 1 == 1)),
    }
}

fn cartan_holds(p: &PresentedAlgebra, a: u32, b: u32, bx: u64, by: u64) -> bool {
    let x = element(p, a, bx);
    let y = element(p, b, by);
    let xy = p.mul(&x, &y);
    let lhs = total_sq(p, &xy);
    let (sx, sy) = (total_sq(p, &x), total_sq(p, &y));
    (0..=p.top_degree()).all(|n| {
        let mut acc = p.zero(n);
        for i in 0..=n {
            acc.coords.add_assign(&p.mul(&sx[i as usize], &sy[(n - i) as usize]).coords);
        }
        acc == lhs[n as usize]
    })
}

fn word() -> impl Strategy<Value = Vec<u32>> {
    proptest::collection::vec(1u32..6, 1..4)
}

fn small_module() -> impl Strategy<Value = GradedModule> {
    module_from(true)
}

/// Sums of two shifted pieces; `big` admits the 25-dimensional `J ⊗ J`.
fn module_from(big: bool) -> impl Strategy<Value = GradedModule> {
    let f2 = GradedModule::trivial(AlgebraTag::A1, "1", 0);
    let mut pieces = vec![f2, joker(), free_module(AlgebraTag::A1, &[0]).unwrap()];
    if big {
        pieces.push(tensor(&joker(), &joker()).unwrap());
    }
    (0..pieces.len(), 0..pieces.len(), -3i32..4).prop_map(move |(i, j, s)| {
        direct_sum(&pieces[i], &shift(&pieces[j], s)).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn total_square_is_multiplicative_in_j8(a in 0u32..=8, b in 0u32..=8, bx in any::<u64>(), by in any::<u64>()) {
        let p = model_j8();
        prop_assert!(cartan_holds(&p, a, b, bx, by));
    }

    #[test]
    fn total_square_is_multiplicative_in_bso3(a in 0u32..=5, b in 0u32..=5, bx in any::<u64>(), by in any::<u64>()) {
        let p = model_bso3();
        prop_assert!(cartan_holds(&p, a, b, bx, by));
    }

    #[test]
    fn antipode_reverses_products(u in word(), v in word()) {
        let (x, y) = (adem_reduce(&u), adem_reduce(&v));
        prop_assert_eq!(antipode(&x.multiply(&y)), antipode(&y).multiply(&antipode(&x)));
        prop_assert_eq!(antipode(&antipode(&x)), x);
    }

    #[test]
    fn products_are_associative(u in word(), v in word(), w in word()) {
        let (x, y, z) = (adem_reduce(&u), adem_reduce(&v), adem_reduce(&w));
        prop_assert_eq!(x.multiply(&y).multiply(&z), x.multiply(&y.multiply(&z)));
    }

    #[test]
    fn printed_elements_parse_back(u in word(), v in word()) {
        let mut x = adem_reduce(&u);
        if u.iter().sum::<u32>() == v.iter().sum::<u32>() {
            x += &adem_reduce(&v);
        }
        let back: SteenrodElement = x.to_string().parse().unwrap();
        prop_assert_eq!(back, x);
    }

    #[test]
    fn module_invariants(m in small_module()) {
        prop_assert!(m.check_axioms().is_ok());
        // json round trip
        let back = GradedModule::from_json(&m.to_json()).unwrap();
        prop_assert_eq!(&back, &m);
        // double dual is isomorphic to the module
        prop_assert!(iso_check(&dualize(&dualize(&m)), &m).is_some());
        // splitting is an isomorphism and leaves no free summand behind
        let s = split_free_summands(&m).unwrap();
        prop_assert!(s.witness.is_isomorphism());
        prop_assert!(split_free_summands(&s.remainder).unwrap().shifts.is_empty());
        prop_assert_eq!(s.shifts.len() * 8 + s.remainder.dim(), m.dim());
    }

    #[test]
    fn tensor_dimensions_multiply(a in module_from(false), b in module_from(false)) {
        let t = tensor(&a, &b).unwrap();
        prop_assert_eq!(t.dim(), a.dim() * b.dim());
        prop_assert!(t.check_axioms().is_ok());
    }
}
