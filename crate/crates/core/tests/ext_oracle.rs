//! Ext over A(1) against an independent resolution. The Euler
//! characteristic of each truncated resolution is checked against the module.

mod oracle;

use oracle::resolution::*;
use sqpd::ext::ext_chart;
use sqpd::gradmod::{direct_sum, joker, shift, AlgebraTag, GradedModule};

#[test]
fn operator_algebra_is_a1() {
    let alg = OracleA1::build();
    let mut hilbert = [0; 7];
    for &d in &alg.degree {
        hilbert[d as usize] += 1;
    }
    assert_eq!(hilbert, [1, 1, 1, 2, 1, 1, 1]);
    // Sq1 Sq2 = Sq3 is not a word here; Sq2 Sq2 = Sq3 Sq1 = Sq1 Sq2 Sq1
    let s22 = alg.mul[alg.index_of(&[2])][alg.index_of(&[2])].clone();
    let s121 = alg.mul[alg.index_of(&[1])][alg.index_of(&[2, 1])].clone();
    assert_eq!(s22, s121);
}

#[test]
fn joker_oracle_matches_library() {
    let alg = OracleA1::build();
    let oj = OracleModule::cyclic_quotient(&alg, alg.index_of(&[1, 2]));
    let mut dims: Vec<i32> = oj.degrees.clone();
    dims.sort();
    assert_eq!(dims, vec![0, 1, 2, 3, 4]);
    let lib = joker();
    let r = resolve(&alg, &oj, 12, 18);
    let r_lib_tables = resolve(&alg, &OracleModule::from_library(&alg, &lib), 12, 18);
    let chart = ext_chart(&lib, 12, 18).unwrap();
    for s in 0..=12usize {
        for t in 0..=18 {
            assert_eq!(r.dim(s, t), chart.dim(s as u32, t), "Ext^({s},{t})");
            assert_eq!(r_lib_tables.dim(s, t), r.dim(s, t));
        }
    }
    for t in 0..=18 {
        assert!(r.euler_holds(&alg, &oj, t), "Euler characteristic in degree {t}");
    }
    let tower: Vec<usize> = (0..=12).map(|s| r.dim(s, s as i32 + 6)).collect();
    assert_eq!(tower, vec![0, 0, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1]);
    assert_eq!(sqpd::models::JOKER_TOWER_START, 2);
}

#[test]
fn f2_oracle_matches_library() {
    let alg = OracleA1::build();
    let f2 = with_trivial_action(&alg, trivial());
    let r = resolve(&alg, &f2, 10, 20);
    let lib = GradedModule::trivial(AlgebraTag::A1, "1", 0);
    let chart = ext_chart(&lib, 10, 20).unwrap();
    for s in 0..=10usize {
        assert_eq!(r.dim(s, s as i32), 1);
        for t in 0..=20 {
            assert_eq!(r.dim(s, t), chart.dim(s as u32, t), "Ext^({s},{t})");
        }
    }
    for t in 0..=20 {
        assert!(r.euler_holds(&alg, &f2, t));
    }
    // ko pattern: h1 in (1,2), h1^2 in (2,4), tower in stem 4 from s = 3
    assert_eq!(r.dim(1, 2), 1);
    assert_eq!(r.dim(2, 4), 1);
    assert_eq!((0..=10).map(|s| r.dim(s, s as i32 + 4)).collect::<Vec<_>>(), vec![0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1]);
}

#[test]
fn combined_diagonal_oracle() {
    let alg = OracleA1::build();
    let oj = OracleModule::cyclic_quotient(&alg, alg.index_of(&[1, 2]));
    let m = sum(with_trivial_action(&alg, trivial()), shifted(oj, -6));
    let r = resolve(&alg, &m, 12, 12);
    let diag: Vec<usize> = (0..=12).map(|s| r.dim(s, s as i32)).collect();
    let lib = direct_sum(&GradedModule::trivial(AlgebraTag::A1, "1", 0), &shift(&joker(), -6)).unwrap();
    assert_eq!(diag, sqpd::ext::e2_diagonal(&lib, 12).unwrap());
    assert_eq!(diag, [vec![1, 1], vec![2; 11]].concat());
}

#[test]
fn free_module_oracle() {
    let alg = OracleA1::build();
    let free = OracleModule::cyclic_quotient(&alg, 0).degrees.len();
    assert_eq!(free, 0, "quotient by the unit is zero");
    // A(1) itself: the quotient by the zero ideal is the regular module
    let n = alg.dim();
    let regular = OracleModule {
        degrees: alg.degree.iter().map(|&d| d as i32).collect(),
        act: (0..n).map(|i| (0..n).map(|b| alg.mul[i][b].clone()).collect()).collect(),
    };
    let r = resolve(&alg, &regular, 4, 14);
    assert_eq!(r.stages[0].gens, vec![0]);
    assert!(r.stages[1..].iter().all(|s| s.gens.is_empty()));
}
