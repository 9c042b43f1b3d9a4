//! Prebuilt objects: the Joker, J⁸ and its Thom module, BSO(3) through
//! degree 10, and a verification suite tying them together.
//!
//! Every constructor here is exported to the JSON corpus under `data/`.

use serde::Serialize;

use crate::ext::{e2_diagonal, ext_chart};
use crate::gradmod::{
    direct_sum, free_module, iso_check, joker, shift, split_free_summands, tensor, AlgebraTag,
    GradedModule, ModuleBuilder, ModuleError,
};
use crate::spda::{
    algebra_isomorphism, characteristic_classes, total_class_product, verify_char_identities,
    verify_pd, verify_sharp_pd, thom_module, AlgebraSpec, Poly, PresentedAlgebra, TotalElement,
};
use crate::steenrod::{
    a1, adem_reduce, adem_reduce_with, antipode, antipode_sq, admissible_basis, ReductionOrder,
    SteenrodElement,
};

/// First filtration of the tower in `Ext^{s,s+6}` of the Joker.
///
/// Pinned from the resolution and confirmed by the dense oracle in the test suite.
pub const JOKER_TOWER_START: u32 = 2;

fn j8_spec() -> AlgebraSpec {
    AlgebraSpec::new(&[("u2", 2), ("u3", 3)])
        .relation("u2^3 + u3^2")
        .relation("u2^2*u3")
        .sq("u2", 1, "u3")
        .sq("u3", 2, "u2*u3")
}

/// `F2[u2, u3]/(u2^3 + u3^2, u2^2 u3)` with `Sq^1 u2 = u3`, `Sq^2 u3 = u2 u3`, duality degree 8.
pub fn model_j8() -> PresentedAlgebra {
    j8_spec().dimension(8).build().expect("J8 presentation is valid")
}

/// `F2[w2, w3]` through degree 10.
pub fn model_bso3() -> PresentedAlgebra {
    AlgebraSpec::new(&[("w2", 2), ("w3", 3)])
        .sq("w2", 1, "w3")
        .sq("w3", 2, "w2*w3")
        .truncation(10)
        .build()
        .expect("BSO(3) presentation is valid")
}

/// The quotient of `F2[w2, w3]` by `(w2^3 + w3^2, w2^2 w3)` through degree
/// 10, with no duality degree imposed.
pub fn model_bso3_quotient() -> PresentedAlgebra {
    j8_spec().truncation(10).build().expect("quotient presentation is valid")
}

/// One generator `z3` in degree 3 through degree 6.
pub fn model_z3() -> PresentedAlgebra {
    AlgebraSpec::new(&[("z3", 3)])
        .truncation(6)
        .build()
        .expect("z3 presentation is valid")
}

/// `F2[x]/(x^3)`, duality degree 2.
pub fn model_rp2() -> PresentedAlgebra {
    AlgebraSpec::new(&[("x", 1)])
        .relation("x^3")
        .dimension(2)
        .build()
        .expect("RP2 presentation is valid")
}

pub fn model_joker() -> GradedModule {
    joker()
}

/// The Thom module of J⁸ over A, from its dual Stiefel-Whitney classes.
pub fn model_thom() -> GradedModule {
    thom_of(&model_j8()).expect("J8 has dual Stiefel-Whitney classes")
}

fn thom_of(p: &PresentedAlgebra) -> Result<GradedModule, String> {
    let t = characteristic_classes(p).map_err(|e| e.to_string())?;
    Ok(thom_module(p, &t.dual_sw))
}

/// The Thom module as drawn, over A(1): `Sq^1` on 2→3 and 5→6, `Sq^2` on
/// 2→4, 3→5 and 4→6; `u` and `u2^4*u` carry no A(1) action.
pub fn thom_diagram() -> GradedModule {
    let mut b = ModuleBuilder::new(AlgebraTag::A1);
    let names = [
        ("u", 0),
        ("u2*u", 2),
        ("u3*u", 3),
        ("u2^2*u", 4),
        ("u2*u3*u", 5),
        ("u2^3*u", 6),
        ("u2^4*u", 8),
    ];
    for (n, d) in names {
        b.add_basis(n, d);
    }
    for (k, s, t) in [(1, 1, 2), (1, 4, 5), (2, 1, 3), (2, 2, 4), (2, 3, 5)] {
        b.add_action(k, s, &[t]);
    }
    b.build().expect("diagram is an A(1)-module")
}

/// `J ⊗ J[-4] ⊕ J[-6]` for the Joker `J`.
pub fn decomposition_module(j: &GradedModule) -> Result<GradedModule, ModuleError> {
    let jj = tensor(j, &shift(j, -4))?;
    direct_sum(&jj, &shift(j, -6))
}

/// Named JSON exports of every model; the files under `data/` are exactly these.
pub fn corpus() -> Vec<(&'static str, String)> {
    vec![
        ("j8.json", model_j8().to_json()),
        ("bso3.json", model_bso3().to_json()),
        ("z3.json", model_z3().to_json()),
        ("rp2.json", model_rp2().to_json()),
        ("joker.json", model_joker().to_json()),
        ("thom.json", model_thom().to_json()),
        ("thom_diagram.json", thom_diagram().to_json()),
        (
            "decomposition.json",
            decomposition_module(&joker()).expect("Joker modules combine").to_json(),
        ),
    ]
}

/// One entry of the suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteCheck {
    pub name: String,
    /// The object or statement under test.
    pub topic: String,
    pub passed: bool,
    /// What was observed; on failure, a counterexample.
    pub witness: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &SuiteCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn get(&self, name: &str) -> Option<&SuiteCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// `{"passed": bool, "checks": [{"name", "topic", "passed", "witness"}]}`.
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Out<'a> {
            passed: bool,
            checks: &'a [SuiteCheck],
        }
        let mut s = serde_json::to_string_pretty(&Out {
            passed: self.passed(),
            checks: &self.checks,
        })
        .expect("reports serialize");
        s.push('\n');
        s
    }

    /// One `PASS`/`FAIL` line per check.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out += &format!("{status} {} [{}]: {}\n", c.name, c.topic, c.witness);
        }
        out
    }
}

fn check(name: &str, topic: &str, result: Result<String, String>) -> SuiteCheck {
    let (passed, witness) = match result {
        Ok(w) => (true, w),
        Err(w) => (false, w),
    };
    SuiteCheck {
        name: name.into(),
        topic: topic.into(),
        passed,
        witness,
    }
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// The objects the suite runs on; swap one out to see which checks notice.
#[derive(Debug, Clone)]
pub struct SuiteInputs {
    pub joker: GradedModule,
    pub j8: PresentedAlgebra,
}

impl Default for SuiteInputs {
    fn default() -> Self {
        SuiteInputs {
            joker: joker(),
            j8: model_j8(),
        }
    }
}

/// Runs every check on the standard models.
pub fn reference_suite() -> SuiteReport {
    reference_suite_with(&SuiteInputs::default())
}

/// Runs every check; failures are collected, never aborting the run.
pub fn reference_suite_with(inputs: &SuiteInputs) -> SuiteReport {
    let j = &inputs.joker;
    let p = &inputs.j8;
    SuiteReport {
        checks: vec![
            check("adem", "Sq1 Sq2 = Sq3 and confluence", adem_check()),
            check("antipode", "antipode recursion and involution", antipode_check()),
            check("a1", "A(1) and the Joker", a1_check(j)),
            check("j8-duality", "J8 duality and classes", j8_check(p)),
            check("bso3-ideal", "BSO(3) ideal", bso3_check()),
            check("thom", "Thom module of J8", thom_check(p)),
            decomposition_check(j),
            check("ext", "Ext charts over A(1)", ext_check(j)),
            check("total-classes", "w(2ξ) = 1 + x2^2 + x3^2", total_class_check(p)),
            k_invariant_check(p),
            check("homogeneous-space", "G2/SO(4) presentation", homogeneous_space_check(p)),
        ],
    }
}

fn adem_check() -> Result<String, String> {
    let r = adem_reduce(&[1, 2]);
    ensure(r == SteenrodElement::sq(3), || format!("Sq1 Sq2 = {r}"))?;
    let r = adem_reduce(&[1, 1]);
    ensure(r.is_zero(), || format!("Sq1 Sq1 = {r}"))?;
    let mut words = 0;
    for word in words_up_to(4, 20) {
        let l = adem_reduce_with(&word, ReductionOrder::Leftmost);
        let r = adem_reduce_with(&word, ReductionOrder::Rightmost);
        ensure(l == r, || format!("{word:?}: {l} vs {r}"))?;
        words += 1;
    }
    Ok(format!("Sq1 Sq2 = Sq3; {words} words confluent"))
}

/// All words of positive exponents with at most `len` letters and degree at most `deg`.
pub fn words_up_to(len: usize, deg: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut stack: Vec<Vec<u32>> = vec![Vec::new()];
    while let Some(w) = stack.pop() {
        let used: u32 = w.iter().sum();
        if !w.is_empty() {
            out.push(w.clone());
        }
        if w.len() < len {
            for a in 1..=deg - used {
                let mut next = w.clone();
                next.push(a);
                stack.push(next);
            }
        }
    }
    out.sort();
    out
}

fn antipode_check() -> Result<String, String> {
    for k in 1..=20 {
        let mut sum = SteenrodElement::zero();
        for r in 0..=k {
            sum += &SteenrodElement::sq(k - r).multiply(&antipode_sq(r));
        }
        ensure(sum.is_zero(), || format!("k = {k}: sum is {sum}"))?;
    }
    let mut count = 0;
    for n in 0..=16 {
        for m in admissible_basis(n).iter() {
            let x = SteenrodElement::from_monomial(m.clone());
            let back = antipode(&antipode(&x));
            ensure(back == x, || format!("χχ({x}) = {back}"))?;
            count += 1;
        }
    }
    Ok(format!("recursion through k = 20; χ² = id on {count} monomials"))
}

/// The Joker diagram, moved to degrees 0 to 4: `Sq^1` on 0→1, 3→4 and `Sq^2` on 0→2, 1→3, 2→4.
pub const JOKER_EDGES: [(u32, i32, i32); 5] = [(1, 0, 1), (1, 3, 4), (2, 0, 2), (2, 1, 3), (2, 2, 4)];

fn a1_check(j: &GradedModule) -> Result<String, String> {
    let alg = a1();
    ensure(alg.dim() == 8, || format!("dim A(1) = {}", alg.dim()))?;
    ensure(alg.top_degree() == 6 && alg.indices_in_degree(6).count() == 1, || {
        "top degree is not a single element in degree 6".into()
    })?;
    let dims: Vec<usize> = (0..=4).map(|d| j.dim_in(d)).collect();
    ensure(dims == [1; 5] && j.dim() == 5, || format!("Joker dims {dims:?}"))?;
    joker_edges_match(j)?;
    Ok("dim 8, top degree 6; Joker dims 1,1,1,1,1 with the drawn edges".into())
}

/// Compares every `Sq^1`, `Sq^2` entry of a module in degrees 0 to 4 with [`JOKER_EDGES`].
pub fn joker_edges_match(j: &GradedModule) -> Result<(), String> {
    for k in [1u32, 2] {
        let m = j.sq_matrix(k).map_err(|e| e.to_string())?;
        for src in 0..j.dim() {
            for tgt in 0..j.dim() {
                let (a, b) = (j.degree_of(src), j.degree_of(tgt));
                let drawn = JOKER_EDGES.contains(&(k, a, b));
                ensure(m.get(tgt, src) == drawn, || {
                    format!("Sq{k} from degree {a} to {b}: expected {drawn}")
                })?;
            }
        }
    }
    Ok(())
}

fn expect_classes(p: &PresentedAlgebra, label: &str, got: &[crate::spda::Element], nonzero: &[(usize, &str)]) -> Result<(), String> {
    for (k, c) in got.iter().enumerate().skip(1) {
        let want = nonzero.iter().find(|(i, _)| *i == k).map_or("0", |(_, v)| *v);
        let shown = p.format(c);
        ensure(shown == want, || format!("{label}{k} = {shown}, expected {want}"))?;
    }
    Ok(())
}

fn j8_check(p: &PresentedAlgebra) -> Result<String, String> {
    let r = verify_pd(p);
    ensure(r.is_ok(), || format!("duality: {}", r.to_string().trim()))?;
    let r = verify_sharp_pd(p);
    ensure(r.is_ok(), || format!("sharp duality: {}", r.to_string().trim()))?;
    let t = characteristic_classes(p).map_err(|e| e.to_string())?;
    expect_classes(p, "v", &t.wu, &[(4, "u2^2")])?;
    expect_classes(p, "w", &t.sw, &[(4, "u2^2"), (6, "u2^3"), (8, "u2^4")])?;
    expect_classes(p, "wbar", &t.dual_sw, &[(4, "u2^2"), (6, "u2^3")])?;
    let r = verify_char_identities(p, &t);
    ensure(r.is_ok(), || format!("identities: {}", r.to_string().trim()))?;
    Ok("v4 = u2^2; w4, w6, w8 = u2^2, u2^3, u2^4; wbar4, wbar6 = u2^2, u2^3; (a), (b), (c) hold".into())
}

fn bso3_check() -> Result<String, String> {
    let b = model_bso3();
    let q = model_bso3_quotient();
    let rel = b.element("w2^3 + w3^2");
    for (k, want) in [(1, "w2^2*w3"), (2, "w2^4 + w2*w3^2"), (4, "w2^5")] {
        let got = b.steenrod_on(&rel, k);
        let want = b.element(want);
        ensure(got == want, || format!("Sq{k}(w2^3 + w3^2) = {}", b.format(&got)))?;
    }
    // w2^5 = w2^2 (w2^3 + w3^2) + w3 (w2^2 w3), in the polynomial ring itself
    let poly = |s: &str| crate::spda::parse_poly(s, b.generator_names()).unwrap();
    let lhs = poly("w2^5");
    let rhs = poly("w2^2").mul(&poly("w2^3 + w3^2")).add(&poly("w3").mul(&poly("w2^2*w3")));
    ensure(lhs == rhs, || "w2^5 identity fails".into())?;
    // Sq^k-invariance of the ideal: images vanish in the quotient through degree 10
    for r in ["w2^3 + w3^2", "w2^2*w3"] {
        let r = poly(r);
        let n = r.degree(b.generator_degrees()).unwrap();
        for k in 1..=4 {
            if n + k > 10 {
                continue;
            }
            let image = q.from_poly_in(n + k, &q.sq_poly(k, &r));
            ensure(image.is_zero(), || {
                format!("Sq{k}({}) = {} in the quotient", r.format(b.generator_names()), q.format(&image))
            })?;
        }
    }
    let dims = q.dims();
    ensure(dims == [1, 0, 1, 1, 1, 1, 1, 0, 1, 0, 0], || format!("quotient dims {dims:?}"))?;
    Ok("Sq1, Sq2, Sq4 images and the w2^5 identity hold; the ideal is invariant".into())
}

fn thom_check(p: &PresentedAlgebra) -> Result<String, String> {
    let m = thom_of(p)?;
    ensure(m.dim() == 7, || format!("dimension {}", m.dim()))?;
    let u = m.vector("u").ok_or("no class u")?;
    let sq4 = m.act(&SteenrodElement::sq(4), &u).map_err(|e| e.to_string())?;
    ensure(m.format_vector(&sq4) == "u2^2*u", || format!("Sq4 u = {}", m.format_vector(&sq4)))?;
    let sq8 = m.act(&SteenrodElement::sq(8), &u).map_err(|e| e.to_string())?;
    ensure(sq8.is_zero(), || format!("Sq8 u = {}", m.format_vector(&sq8)))?;
    let sq1 = m.act(&SteenrodElement::sq(1), &u).map_err(|e| e.to_string())?;
    ensure(sq1.is_zero(), || format!("Sq1 u = {}", m.format_vector(&sq1)))?;
    let a1_part = m.restrict_to_a1();
    ensure(iso_check(&a1_part, &thom_diagram()).is_some(), || {
        "over A(1) the Thom module differs from the diagram".into()
    })?;
    let dual = shift(&crate::gradmod::dualize(&p.to_module()), 8);
    ensure(iso_check(&m, &dual).is_some(), || {
        "Thom module is not the shifted dual of the algebra".into()
    })?;
    Ok("Sq4 u = u2^2*u, Sq8 u = 0; matches the diagram over A(1) and the dual of J8 shifted by 8".into())
}

/// `J ⊗ J[-4] ⊕ J[-6] ≅ F2 ⊕ A(1)[-4] ⊕ A(1)[-2] ⊕ A(1)[-3] ⊕ J[-6]`.
pub fn decomposition_check(j: &GradedModule) -> SuiteCheck {
    let run = || -> Result<String, String> {
        let m = decomposition_module(j).map_err(|e| e.to_string())?;
        let s = split_free_summands(&m).map_err(|e| e.to_string())?;
        let mut shifts = s.shifts.clone();
        shifts.sort_unstable();
        ensure(shifts == [-4, -3, -2], || format!("free shifts {shifts:?}"))?;
        ensure(s.remainder.dim() == 6, || format!("remainder of dimension {}", s.remainder.dim()))?;
        let free = free_module(AlgebraTag::A1, &shifts).map_err(|e| e.to_string())?;
        ensure(m.dim() == free.dim() + s.remainder.dim(), || "dimensions do not add up".into())?;
        ensure(s.witness.is_isomorphism(), || "splitting map is not an isomorphism".into())?;
        let expected = direct_sum(&GradedModule::trivial(AlgebraTag::A1, "1", 0), &shift(&joker(), -6))
            .map_err(|e| e.to_string())?;
        ensure(iso_check(&s.remainder, &expected).is_some(), || {
            "remainder is not F2 ⊕ J[-6]".into()
        })?;
        Ok(format!("free shifts {shifts:?}; remainder ≅ F2 ⊕ J[-6]; {} = 24 + 6", m.dim()))
    };
    check("decomposition", "J ⊗ J[-4] ⊕ J[-6]", run())
}

fn ext_check(j: &GradedModule) -> Result<String, String> {
    let f2 = GradedModule::trivial(AlgebraTag::A1, "1", 0);
    let d = e2_diagonal(&f2, 10).map_err(|e| e.to_string())?;
    ensure(d == [1; 11], || format!("F2 diagonal {d:?}"))?;
    let free = free_module(AlgebraTag::A1, &[0, 2]).map_err(|e| e.to_string())?;
    let c = ext_chart(&free, 4, 12).map_err(|e| e.to_string())?;
    ensure((1..=4).all(|s| (0..=12).all(|t| c.dim(s, t) == 0)), || {
        "free module has Ext in positive filtration".into()
    })?;
    let c = ext_chart(j, 12, 18).map_err(|e| e.to_string())?;
    let tower: Vec<usize> = (0..=12).map(|s| c.dim(s, s as i32 + 6)).collect();
    let start = tower.iter().position(|&x| x != 0).ok_or("no classes in stem 6")?;
    ensure(tower[start..].iter().all(|&x| x == 1), || format!("stem 6 column {tower:?}"))?;
    ensure(start as u32 == JOKER_TOWER_START, || {
        format!("stem 6 tower starts at s = {start}, expected {JOKER_TOWER_START}")
    })?;
    let combined = direct_sum(&f2, &shift(j, -6)).map_err(|e| e.to_string())?;
    let d = e2_diagonal(&combined, 12).map_err(|e| e.to_string())?;
    let expect: Vec<usize> = (0..=12).map(|s| 1 + usize::from(s >= start)).collect();
    ensure(d == expect, || format!("combined diagonal {d:?}"))?;
    Ok(format!(
        "F2 diagonal all 1; free modules vanish for s >= 1; Joker stem 6 tower from s = {start}; two towers on the combined diagonal"
    ))
}

fn total_class_check(p: &PresentedAlgebra) -> Result<String, String> {
    let w = TotalElement::parse(p, "1 + u2 + u3").map_err(|e| e.to_string())?;
    let sq = total_class_product(p, &w, &w);
    let want = TotalElement::parse(p, "1 + u2^2 + u3^2").map_err(|e| e.to_string())?;
    ensure(sq == want, || format!("(1 + u2 + u3)^2 = {}", sq.format(p)))?;
    Ok(format!("(1 + u2 + u3)^2 = {}", sq.format(p)))
}

/// `Sq^1 Sq^2 = Sq^3`, `Sq^3 z3 = z3^2`, and `u3^2 ≠ 0` in J⁸: a class
/// pulled back from `z3` to `u3` would force `u3^2 = 0`.
pub fn k_invariant_check(p: &PresentedAlgebra) -> SuiteCheck {
    let run = || -> Result<String, String> {
        ensure(adem_reduce(&[1, 2]) == SteenrodElement::sq(3), || "Sq1 Sq2 != Sq3".into())?;
        let z = model_z3();
        let z3 = z.element("z3");
        let cube = z.steenrod_on(&z3, 3);
        ensure(cube == z.element("z3^2"), || format!("Sq3 z3 = {}", z.format(&cube)))?;
        let u3sq = p.parse_element("u3^2", Some(6)).map_err(|e| e.to_string())?;
        ensure(!u3sq.is_zero(), || "u3^2 = 0 in J8".into())?;
        let via = p.act(&SteenrodElement::from_word(&[1, 2]), &p.element("u3"));
        ensure(via == u3sq, || format!("Sq1 Sq2 u3 = {}", p.format(&via)))?;
        Ok(format!("Sq1 Sq2 = Sq3; Sq3 z3 = z3^2; u3^2 = {} ≠ 0", p.format(&u3sq)))
    };
    check("k-invariant", "Sq1 Sq2 z3 = Sq3 z3 = z3^2", run())
}

fn homogeneous_space_check(p: &PresentedAlgebra) -> Result<String, String> {
    let q = model_j8();
    let h = algebra_isomorphism(p, &q).ok_or("no isomorphism with the J8 presentation")?;
    let images: Vec<String> = h.images.iter().map(|x| q.format(x)).collect();
    Ok(format!("isomorphism u2 ↦ {}, u3 ↦ {}", images[0], images[1]))
}

/// Relations of the quotient presentation as polynomials in `w2`, `w3`.
pub fn bso3_ideal_generators() -> Vec<Poly> {
    let b = model_bso3();
    ["w2^3 + w3^2", "w2^2*w3"]
        .iter()
        .map(|s| crate::spda::parse_poly(s, b.generator_names()).unwrap())
        .collect()
}
