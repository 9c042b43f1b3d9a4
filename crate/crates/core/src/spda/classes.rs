//! Fundamental class, cap products, Poincaré duality checks, Wu and
//! Stiefel-Whitney classes, Thom modules and total classes.

use std::collections::BTreeMap;

use crate::f2linalg::{F2Matrix, F2Vector};
use crate::gradmod::{AlgebraTag, GradedModule, ModuleBuilder};
use crate::steenrod::{antipode, antipode_sq, SteenrodElement};

use super::{Element, PresentedAlgebra, Report, SpdaError};

/// A linear functional on one degree, in the dual basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualElement {
    pub degree: u32,
    pub coords: F2Vector,
}

impl DualElement {
    pub fn evaluate(&self, x: &Element) -> bool {
        x.degree == self.degree && self.coords.dot(&x.coords)
    }
}

fn require_dimension(p: &PresentedAlgebra) -> Result<u32, SpdaError> {
    p.dimension()
        .ok_or_else(|| SpdaError::NotPd("no Poincaré duality degree declared".into()))
}

/// `[P]`: the dual of the basis element in the top degree.
pub fn fundamental_class(p: &PresentedAlgebra) -> Result<DualElement, SpdaError> {
    let d = require_dimension(p)?;
    if p.dim_in(d) != 1 {
        return Err(SpdaError::NotPd(format!(
            "degree {d} has dimension {}, expected 1",
            p.dim_in(d)
        )));
    }
    Ok(DualElement {
        degree: d,
        coords: F2Vector::unit(1, 0),
    })
}

/// `(f ∩ a)(b) = f(a b)`.
pub fn cap(p: &PresentedAlgebra, f: &DualElement, a: &Element) -> DualElement {
    let degree = f.degree.saturating_sub(a.degree);
    if a.degree > f.degree {
        return DualElement {
            degree,
            coords: F2Vector::zeros(0),
        };
    }
    let coords = F2Vector::from_indices(
        p.dim_in(degree),
        p.basis(degree)
            .iter()
            .enumerate()
            .filter(|(_, b)| f.evaluate(&p.mul(a, b)))
            .map(|(i, _)| i),
    );
    DualElement { degree, coords }
}

/// Rows: basis of degree `k`; columns: basis of degree `d - k`; entries `[P](ab)`.
pub fn pairing_matrix(p: &PresentedAlgebra, k: u32) -> Result<F2Matrix, SpdaError> {
    let fc = fundamental_class(p)?;
    let d = fc.degree;
    let rows = p.basis(k);
    let cols = if k <= d { p.basis(d - k) } else { Vec::new() };
    let mut m = F2Matrix::zeros(rows.len(), cols.len());
    for (i, a) in rows.iter().enumerate() {
        for (j, b) in cols.iter().enumerate() {
            m.set(i, j, fc.evaluate(&p.mul(a, b)));
        }
    }
    Ok(m)
}

/// One-dimensional top degree and invertible pairings in every degree.
pub fn verify_pd(p: &PresentedAlgebra) -> Report {
    let mut r = Report::default();
    let d = match fundamental_class(p) {
        Ok(fc) => fc.degree,
        Err(e) => {
            r.push("fundamental class", p.dimension(), e.to_string());
            return r;
        }
    };
    for k in 0..=d {
        let m = pairing_matrix(p, k).expect("fundamental class exists");
        if m.rows() != m.cols() || !m.is_invertible() {
            r.push(
                "nondegenerate pairing",
                Some(k),
                format!("{}x{} pairing of rank {}", m.rows(), m.cols(), m.rank()),
            );
        }
    }
    r
}

/// Solves `[P](c · y) = rhs(y)` for `c` of degree `k`, over all `y` of degree `d - k`.
fn solve_dual(
    p: &PresentedAlgebra,
    k: u32,
    what: &str,
    rhs: impl Fn(&Element) -> Element,
) -> Result<Element, SpdaError> {
    let fc = fundamental_class(p)?;
    let d = fc.degree;
    if k > d {
        return Ok(p.zero(k));
    }
    let pairing = pairing_matrix(p, k)?;
    let ys = p.basis(d - k);
    let b = F2Vector::from_indices(
        ys.len(),
        ys.iter().enumerate().filter(|(_, y)| fc.evaluate(&rhs(y))).map(|(j, _)| j),
    );
    let system = pairing.transpose();
    if system.rank() != p.dim_in(k) {
        return Err(SpdaError::Unsolvable(format!("{what}: solution is not unique")));
    }
    let x = system
        .solve(&b)
        .expect("dimensions agree")
        .ok_or_else(|| SpdaError::Unsolvable(what.to_string()))?;
    Ok(Element { degree: k, coords: x })
}

/// How the Wu class functional `y ↦ [P](Sq^k y)` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WuRoute {
    /// Apply `Sq^k` directly.
    Direct,
    /// Apply `χ(χ(Sq^k))`, going through the antipode twice.
    Antipode,
}

/// `v_0, ..., v_d` with `[P](v_k y) = [P](Sq^k y)`.
pub fn wu_classes(p: &PresentedAlgebra, route: WuRoute) -> Result<Vec<Element>, SpdaError> {
    let d = require_dimension(p)?;
    (0..=d)
        .map(|k| {
            let op = match route {
                WuRoute::Direct => SteenrodElement::sq(k),
                WuRoute::Antipode => antipode(&antipode_sq(k)),
            };
            solve_dual(p, k, &format!("v{k}"), |y| p.act(&op, y))
        })
        .collect()
}

/// `w_k = Σ_i Sq^i v_{k-i}`.
pub fn sw_classes(p: &PresentedAlgebra, wu: &[Element]) -> Vec<Element> {
    (0..wu.len())
        .map(|k| {
            let mut w = p.zero(k as u32);
            for i in 0..=k {
                w.coords.add_assign(&p.steenrod_on(&wu[k - i], i as u32).coords);
            }
            w
        })
        .collect()
}

/// Which operation defines the dual Stiefel-Whitney classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DualSwConvention {
    /// `[P](w̄_k y) = [P](χ(Sq^k) y)`.
    Antipode,
    /// `[P](w̄_k y) = [P](Sq^k y)`: the other reading, which reproduces the Wu classes.
    Direct,
}

pub fn dual_sw_classes(
    p: &PresentedAlgebra,
    convention: DualSwConvention,
) -> Result<Vec<Element>, SpdaError> {
    let d = require_dimension(p)?;
    (0..=d)
        .map(|k| {
            let op = match convention {
                DualSwConvention::Antipode => antipode_sq(k),
                DualSwConvention::Direct => SteenrodElement::sq(k),
            };
            solve_dual(p, k, &format!("wbar{k}"), |y| p.act(&op, y))
        })
        .collect()
}

/// `w̄_0 = 1`, `w̄_k = Σ_{i>=1} w_i w̄_{k-i}`.
pub fn dual_sw_by_recurrence(p: &PresentedAlgebra, sw: &[Element]) -> Vec<Element> {
    let mut out: Vec<Element> = Vec::with_capacity(sw.len());
    for k in 0..sw.len() {
        if k == 0 {
            out.push(p.one());
            continue;
        }
        let mut acc = p.zero(k as u32);
        for i in 1..=k {
            acc.coords.add_assign(&p.mul(&sw[i], &out[k - i]).coords);
        }
        out.push(acc);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CharacteristicClassTable {
    pub wu: Vec<Element>,
    pub sw: Vec<Element>,
    pub dual_sw: Vec<Element>,
}

impl CharacteristicClassTable {
    /// Lines `v4 = u2^2` etc. for all classes, zero ones included.
    pub fn render(&self, p: &PresentedAlgebra) -> String {
        let mut out = String::new();
        for (label, classes) in [("v", &self.wu), ("w", &self.sw), ("wbar", &self.dual_sw)] {
            for (k, c) in classes.iter().enumerate() {
                out += &format!("{label}{k} = {}\n", p.format(c));
            }
        }
        out
    }
}

pub fn characteristic_classes(p: &PresentedAlgebra) -> Result<CharacteristicClassTable, SpdaError> {
    let wu = wu_classes(p, WuRoute::Direct)?;
    let sw = sw_classes(p, &wu);
    let dual_sw = dual_sw_classes(p, DualSwConvention::Antipode)?;
    Ok(CharacteristicClassTable { wu, sw, dual_sw })
}

/// (a) `v_k = 0` for `k > d/2`; (b) `w_d = v_{d/2}^2` for even `d`;
/// (c) `Σ w_i w̄_{k-i} = 0` for `1 <= k <= d`.
pub fn verify_char_identities(p: &PresentedAlgebra, t: &CharacteristicClassTable) -> Report {
    let mut r = Report::default();
    let d = t.wu.len().saturating_sub(1) as u32;
    for k in d / 2 + 1..=d {
        if !t.wu[k as usize].is_zero() {
            r.push("(a) v_k = 0 above d/2", Some(k), format!("v{k} = {}", p.format(&t.wu[k as usize])));
        }
    }
    if d.is_multiple_of(2) {
        let v = &t.wu[(d / 2) as usize];
        let sq = p.mul(v, v);
        if t.sw[d as usize] != sq {
            r.push(
                "(b) w_d = v_{d/2}^2",
                Some(d),
                format!("w{d} = {}, v^2 = {}", p.format(&t.sw[d as usize]), p.format(&sq)),
            );
        }
    }
    for k in 1..=d as usize {
        let mut acc = p.zero(k as u32);
        for i in 0..=k {
            acc.coords.add_assign(&p.mul(&t.sw[i], &t.dual_sw[k - i]).coords);
        }
        if !acc.is_zero() {
            r.push("(c) sum w_i wbar_{k-i} = 0", Some(k as u32), p.format(&acc));
        }
    }
    r
}

/// Compatibility of duality with the Steenrod action.
///
/// Checks the algebra axioms; that the Wu and dual Stiefel-Whitney systems
/// have unique solutions; that both evaluations of the Wu classes agree;
/// and the twisted cross-action identity
/// `[P](y · χ(Sq^k) x) = [P](Σ_i Sq^i(y) w̄_{k-i} x)` for all `x`, `y`, `k`.
pub fn verify_sharp_pd(p: &PresentedAlgebra) -> Report {
    let mut r = verify_pd(p);
    if !r.is_ok() {
        return r;
    }
    r.extend(p.check_axioms());
    let d = p.dimension().unwrap();
    let wu = match wu_classes(p, WuRoute::Direct) {
        Ok(w) => w,
        Err(e) => {
            r.push("Wu classes", None, e.to_string());
            return r;
        }
    };
    match wu_classes(p, WuRoute::Antipode) {
        Ok(w2) if w2 == wu => {}
        Ok(_) => r.push("Wu classes", None, "direct and antipode evaluations differ"),
        Err(e) => r.push("Wu classes", None, e.to_string()),
    }
    let wbar = match dual_sw_classes(p, DualSwConvention::Antipode) {
        Ok(w) => w,
        Err(e) => {
            r.push("dual Stiefel-Whitney classes", None, e.to_string());
            return r;
        }
    };
    let fc = fundamental_class(p).unwrap();
    for k in 1..=d {
        let chi = antipode_sq(k);
        for a in 0..=d - k {
            for x in p.basis(a) {
                let cx = p.act(&chi, &x);
                for y in p.basis(d - k - a) {
                    let lhs = fc.evaluate(&p.mul(&y, &cx));
                    let mut rhs = false;
                    for i in 0..=k {
                        let t = p.mul(&p.mul(&p.steenrod_on(&y, i), &wbar[(k - i) as usize]), &x);
                        rhs ^= fc.evaluate(&t);
                    }
                    if lhs != rhs {
                        r.push(
                            "cross action",
                            Some(k),
                            format!("k = {k}, x = {}, y = {}", p.format(&x), p.format(&y)),
                        );
                    }
                }
            }
        }
    }
    r
}

/// The free rank-one module on a class `u` of degree 0 with
/// `Sq^r(x u) = Σ_i Sq^i(x) w̄_{r-i} u`, over A.
pub fn thom_module(p: &PresentedAlgebra, dual_sw: &[Element]) -> GradedModule {
    let top = p.top_degree();
    let name = |m: &str| if m == "1" { "u".to_string() } else { format!("{m}*u") };
    let mut b = ModuleBuilder::new(AlgebraTag::A);
    let mut start = Vec::new();
    for n in 0..=top {
        start.push(b.len());
        for m in p.basis_names(n) {
            b.add_basis(name(&m), n as i32);
        }
    }
    let wbar = |j: u32| -> Element { dual_sw.get(j as usize).cloned().unwrap_or_else(|| p.zero(j)) };
    let mut r = 1;
    while r <= top {
        for n in 0..=top - r {
            for x in p.basis(n) {
                let mut image = p.zero(n + r);
                for i in 0..=r {
                    image.coords.add_assign(&p.mul(&p.steenrod_on(&x, i), &wbar(r - i)).coords);
                }
                let src = start[n as usize] + x.coords.first_one().unwrap();
                let targets: Vec<usize> =
                    image.coords.ones().map(|t| start[(n + r) as usize] + t).collect();
                b.add_action(r, src, &targets);
            }
        }
        r *= 2;
    }
    b.build().expect("Thom module tables have the right degrees")
}

/// An inhomogeneous element, as its homogeneous parts.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct TotalElement {
    pub parts: BTreeMap<u32, Element>,
}

impl TotalElement {
    pub fn parse(p: &PresentedAlgebra, text: &str) -> Result<TotalElement, SpdaError> {
        let poly = super::poly::parse_poly(text, p.generator_names())?;
        let mut parts: BTreeMap<u32, super::Poly> = BTreeMap::new();
        for m in poly.terms() {
            let n = super::poly::monomial_degree(m, p.generator_degrees());
            parts.entry(n).or_default().toggle(m.clone());
        }
        let parts = parts
            .into_iter()
            .map(|(n, q)| (n, p.from_poly_in(n, &q)))
            .filter(|(_, e)| !e.is_zero())
            .collect();
        Ok(TotalElement { parts })
    }

    pub fn format(&self, p: &PresentedAlgebra) -> String {
        let parts: Vec<String> = self
            .parts
            .values()
            .filter(|e| !e.is_zero())
            .map(|e| p.format(e))
            .collect();
        if parts.is_empty() {
            "0".into()
        } else {
            parts.join(" + ")
        }
    }
}

/// Product of inhomogeneous elements, degree by degree.
pub fn total_class_product(p: &PresentedAlgebra, a: &TotalElement, b: &TotalElement) -> TotalElement {
    let mut parts: BTreeMap<u32, Element> = BTreeMap::new();
    for x in a.parts.values() {
        for y in b.parts.values() {
            let z = p.mul(x, y);
            match parts.get_mut(&z.degree) {
                Some(acc) => acc.coords.add_assign(&z.coords),
                None => {
                    parts.insert(z.degree, z);
                }
            }
        }
    }
    parts.retain(|_, e| !e.is_zero());
    TotalElement { parts }
}
