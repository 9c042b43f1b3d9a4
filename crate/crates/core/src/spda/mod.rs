//! Presented graded-commutative algebras over F2 with an unstable Steenrod
//! action, Poincaré duality and characteristic classes.
//!
//! An algebra is given by generators with positive degrees, homogeneous
//! relations and the values `Sq^k g` on generators. Each degree is computed
//! as the span of monomials modulo the relation multiples; the Steenrod
//! action is extended to monomials by the Cartan formula and stored as one
//! matrix per `(k, degree)`.

mod classes;
mod format;
mod hom;
mod poly;
mod sharp;

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::f2linalg::{F2Matrix, F2Vector};
use crate::gradmod::{AlgebraTag, GradedModule, ModuleBuilder};
use crate::parse::ParseError;
use crate::steenrod::{adem_pair, SteenrodElement};

pub use classes::{
    cap, characteristic_classes, dual_sw_by_recurrence, dual_sw_classes, fundamental_class,
    pairing_matrix, sw_classes, thom_module, total_class_product, verify_char_identities,
    verify_pd, verify_sharp_pd, wu_classes, CharacteristicClassTable, DualElement,
    DualSwConvention, TotalElement, WuRoute,
};
pub use format::AlgebraFile;
pub use hom::{algebra_isomorphism, injectivity_check, AlgebraMap, InjectivityReport};
pub use poly::{format_monomial, monomials_of_degree, parse_poly, Monomial, Poly};
pub use sharp::{crosprod_reverse, SharpElement};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpdaError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("invalid algebra: {0}")]
    Malformed(String),
    #[error("{0} is not homogeneous")]
    Inhomogeneous(String),
    #[error("not a Poincaré duality algebra: {0}")]
    NotPd(String),
    #[error("linear system for {0} has no solution")]
    Unsolvable(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Generator {
    pub name: String,
    pub degree: u32,
}

/// One failed check: which check, where, and a witness.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: String,
    pub degree: Option<u32>,
    pub witness: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.degree {
            Some(d) => write!(f, "{} (degree {}): {}", self.check, d, self.witness),
            None => write!(f, "{}: {}", self.check, self.witness),
        }
    }
}

/// A list of failed checks; empty means everything passed.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Report {
    pub failures: Vec<Failure>,
}

impl Report {
    pub fn is_ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, check: &str, degree: Option<u32>, witness: impl Into<String>) {
        self.failures.push(Failure {
            check: check.to_string(),
            degree,
            witness: witness.into(),
        });
    }

    pub fn extend(&mut self, other: Report) {
        self.failures.extend(other.failures);
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "ok");
        }
        for x in &self.failures {
            writeln!(f, "FAIL {x}")?;
        }
        Ok(())
    }
}

/// A homogeneous element, given by coordinates in the degree's basis.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Element {
    pub degree: u32,
    pub coords: F2Vector,
}

impl Element {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }
}

/// The basis and normal forms in one degree.
#[derive(Debug, Clone)]
struct DegreeData {
    /// All monomials of this degree, ascending lexicographically.
    monomials: Vec<Monomial>,
    position: HashMap<Monomial, usize>,
    /// Reduced echelon rows spanning the relation multiples.
    rows: Vec<F2Vector>,
    pivots: Vec<usize>,
    /// Indices of the monomials that form the quotient basis.
    basis: Vec<usize>,
}

impl DegreeData {
    fn new(n: u32, gen_degrees: &[u32], relations: &[(Poly, u32)]) -> DegreeData {
        let monomials = poly::monomials_of_degree(n, gen_degrees);
        let position: HashMap<Monomial, usize> =
            monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        let len = monomials.len();
        let mut multiples = Vec::new();
        for (r, e) in relations {
            if *e > n {
                continue;
            }
            for m in poly::monomials_of_degree(n - e, gen_degrees) {
                let p = r.mul(&Poly::monomial(m));
                multiples.push(F2Vector::from_indices(len, p.terms().map(|t| position[t])));
            }
        }
        let (rows, pivots) = if multiples.is_empty() {
            (Vec::new(), Vec::new())
        } else {
            let (r, p) = F2Matrix::from_rows(len, multiples).unwrap().rref();
            ((0..p.len()).map(|i| r.row(i).clone()).collect(), p)
        };
        let basis = (0..len).filter(|i| !pivots.contains(i)).collect();
        DegreeData {
            monomials,
            position,
            rows,
            pivots,
            basis,
        }
    }

    /// Coordinates in the quotient basis of a polynomial of this degree.
    fn normal_form(&self, p: &Poly) -> F2Vector {
        let mut v = F2Vector::from_indices(self.monomials.len(), p.terms().map(|t| self.position[t]));
        for (row, &piv) in self.rows.iter().zip(&self.pivots) {
            if v.get(piv) {
                v.add_assign(row);
            }
        }
        F2Vector::from_indices(
            self.basis.len(),
            self.basis.iter().enumerate().filter(|(_, &m)| v.get(m)).map(|(i, _)| i),
        )
    }
}

/// Input description of an algebra; also the JSON file contents.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraSpec {
    pub generators: Vec<Generator>,
    #[serde(default)]
    pub relations: Vec<String>,
    /// `sq[g][k]` is `Sq^k g`. Unlisted values are zero, except that
    /// `Sq^{deg g} g` defaults to `g^2`.
    #[serde(default)]
    pub sq: BTreeMap<String, BTreeMap<u32, String>>,
    /// Formal Poincaré duality degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dimension: Option<u32>,
    /// Highest degree kept when the algebra is infinite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub truncation: Option<u32>,
}

impl AlgebraSpec {
    pub fn new(generators: &[(&str, u32)]) -> Self {
        AlgebraSpec {
            generators: generators
                .iter()
                .map(|(n, d)| Generator {
                    name: n.to_string(),
                    degree: *d,
                })
                .collect(),
            relations: Vec::new(),
            sq: BTreeMap::new(),
            dimension: None,
            truncation: None,
        }
    }

    pub fn relation(mut self, r: &str) -> Self {
        self.relations.push(r.to_string());
        self
    }

    pub fn sq(mut self, gen: &str, k: u32, value: &str) -> Self {
        self.sq.entry(gen.to_string()).or_default().insert(k, value.to_string());
        self
    }

    pub fn dimension(mut self, d: u32) -> Self {
        self.dimension = Some(d);
        self
    }

    pub fn truncation(mut self, n: u32) -> Self {
        self.truncation = Some(n);
        self
    }

    pub fn build(&self) -> Result<PresentedAlgebra, SpdaError> {
        PresentedAlgebra::build(self)
    }
}

/// A presented unstable algebra, computed through degree `top`.
#[derive(Debug, Clone)]
pub struct PresentedAlgebra {
    spec: AlgebraSpec,
    names: Vec<String>,
    gen_degrees: Vec<u32>,
    relations: Vec<(Poly, u32)>,
    gen_sq: Vec<Vec<Poly>>,
    top: u32,
    degrees: Vec<DegreeData>,
    /// `action[k][n]`: `Sq^k` from degree `n` to `n + k`, for `k >= 1`.
    action: Vec<Vec<F2Matrix>>,
    /// `products[a][b][i][j]`: product of basis elements, `a + b <= top`.
    products: Vec<Vec<Vec<Vec<F2Vector>>>>,
}

impl PartialEq for PresentedAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.names == other.names
            && self.gen_degrees == other.gen_degrees
            && self.top == other.top
            && self.spec.dimension == other.spec.dimension
            && self.action == other.action
            && (0..=self.top).all(|n| self.basis_names(n) == other.basis_names(n))
            && self.products == other.products
    }
}

impl PresentedAlgebra {
    pub fn build(spec: &AlgebraSpec) -> Result<PresentedAlgebra, SpdaError> {
        let names: Vec<String> = spec.generators.iter().map(|g| g.name.clone()).collect();
        let gen_degrees: Vec<u32> = spec.generators.iter().map(|g| g.degree).collect();
        let ngens = names.len();
        for (i, g) in spec.generators.iter().enumerate() {
            if g.degree == 0 {
                return Err(SpdaError::Malformed(format!("generator {} has degree 0", g.name)));
            }
            let valid = g.name.chars().next().is_some_and(|c| c.is_alphabetic() || c == '_')
                && g.name.chars().all(|c| c.is_alphanumeric() || c == '_');
            if !valid {
                return Err(SpdaError::Malformed(format!("invalid generator name '{}'", g.name)));
            }
            if names[..i].contains(&g.name) {
                return Err(SpdaError::Malformed(format!("duplicate generator '{}'", g.name)));
            }
        }
        let top = spec
            .truncation
            .or(spec.dimension)
            .ok_or_else(|| SpdaError::Malformed("either dimension or truncation is required".into()))?;

        let mut relations = Vec::new();
        for r in &spec.relations {
            let p = poly::parse_poly(r, &names)?;
            if p.is_zero() {
                continue;
            }
            let d = p
                .degree(&gen_degrees)
                .ok_or_else(|| SpdaError::Inhomogeneous(r.clone()))?;
            relations.push((p, d));
        }

        let mut gen_sq: Vec<Vec<Poly>> = (0..ngens)
            .map(|i| {
                let d = gen_degrees[i] as usize;
                let mut v = vec![Poly::zero(); d + 1];
                v[0] = Poly::generator(ngens, i);
                v[d] = Poly::generator(ngens, i).pow(2, ngens);
                v
            })
            .collect();
        for (g, values) in &spec.sq {
            let i = names
                .iter()
                .position(|n| n == g)
                .ok_or_else(|| SpdaError::Malformed(format!("Sq given for unknown generator '{g}'")))?;
            for (&k, text) in values {
                if k == 0 || k > gen_degrees[i] {
                    return Err(SpdaError::Malformed(format!(
                        "Sq{k} {g} must be given only for 1 <= k <= {}",
                        gen_degrees[i]
                    )));
                }
                let p = poly::parse_poly(text, &names)?;
                let want = gen_degrees[i] + k;
                if !p.is_zero() && p.degree(&gen_degrees) != Some(want) {
                    return Err(SpdaError::Malformed(format!(
                        "Sq{k} {g} = {text} should have degree {want}"
                    )));
                }
                gen_sq[i][k as usize] = p;
            }
        }

        let degrees: Vec<DegreeData> = (0..=top)
            .map(|n| DegreeData::new(n, &gen_degrees, &relations))
            .collect();
        let mut alg = PresentedAlgebra {
            spec: spec.clone(),
            names,
            gen_degrees,
            relations,
            gen_sq,
            top,
            degrees,
            action: Vec::new(),
            products: Vec::new(),
        };
        alg.products = alg.compute_products();
        alg.action = alg.compute_action();
        Ok(alg)
    }

    fn compute_products(&self) -> Vec<Vec<Vec<Vec<F2Vector>>>> {
        (0..=self.top)
            .map(|a| {
                (0..=self.top - a)
                    .map(|b| {
                        let da = &self.degrees[a as usize];
                        let db = &self.degrees[b as usize];
                        let dc = &self.degrees[(a + b) as usize];
                        da.basis
                            .iter()
                            .map(|&i| {
                                db.basis
                                    .iter()
                                    .map(|&j| {
                                        let m: Monomial = da.monomials[i]
                                            .iter()
                                            .zip(&db.monomials[j])
                                            .map(|(x, y)| x + y)
                                            .collect();
                                        dc.normal_form(&Poly::monomial(m))
                                    })
                                    .collect()
                            })
                            .collect()
                    })
                    .collect()
            })
            .collect()
    }

    fn compute_action(&self) -> Vec<Vec<F2Matrix>> {
        let mut memo = HashMap::new();
        let mut action = vec![Vec::new()];
        for k in 1..=self.top {
            let mut per_degree = Vec::new();
            for n in 0..=self.top - k {
                let src = &self.degrees[n as usize];
                let dst = &self.degrees[(n + k) as usize];
                let cols: Vec<F2Vector> = src
                    .basis
                    .iter()
                    .map(|&i| dst.normal_form(&self.sq_monomial(k, &src.monomials[i], &mut memo)))
                    .collect();
                per_degree.push(F2Matrix::from_columns(dst.basis.len(), &cols));
            }
            action.push(per_degree);
        }
        action
    }

    /// `Sq^k` of a monomial in the free polynomial algebra, by the Cartan formula.
    fn sq_monomial(&self, k: u32, m: &Monomial, memo: &mut HashMap<(u32, Monomial), Poly>) -> Poly {
        if k == 0 {
            return Poly::monomial(m.clone());
        }
        let Some(g) = m.iter().position(|&e| e > 0) else {
            return Poly::zero();
        };
        if let Some(hit) = memo.get(&(k, m.clone())) {
            return hit.clone();
        }
        let mut rest = m.clone();
        rest[g] -= 1;
        let mut out = Poly::zero();
        for i in 0..=k.min(self.gen_degrees[g]) {
            let a = &self.gen_sq[g][i as usize];
            if a.is_zero() {
                continue;
            }
            let b = self.sq_monomial(k - i, &rest, memo);
            out.add_assign(&a.mul(&b));
        }
        memo.insert((k, m.clone()), out.clone());
        out
    }

    /// `Sq^k` of a polynomial in the free algebra.
    pub fn sq_poly(&self, k: u32, p: &Poly) -> Poly {
        let mut memo = HashMap::new();
        let mut out = Poly::zero();
        for m in p.terms() {
            out.add_assign(&self.sq_monomial(k, m, &mut memo));
        }
        out
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn generator_names(&self) -> &[String] {
        &self.names
    }

    pub fn generator_degrees(&self) -> &[u32] {
        &self.gen_degrees
    }

    /// Formal Poincaré duality degree, if declared.
    pub fn dimension(&self) -> Option<u32> {
        self.spec.dimension
    }

    /// Highest degree represented; everything above is zero.
    pub fn top_degree(&self) -> u32 {
        self.top
    }

    pub fn dim_in(&self, n: u32) -> usize {
        self.degrees.get(n as usize).map_or(0, |d| d.basis.len())
    }

    /// Dimensions in degrees `0..=top`.
    pub fn dims(&self) -> Vec<usize> {
        (0..=self.top).map(|n| self.dim_in(n)).collect()
    }

    pub fn basis_monomial(&self, n: u32, i: usize) -> &Monomial {
        let d = &self.degrees[n as usize];
        &d.monomials[d.basis[i]]
    }

    pub fn basis_names(&self, n: u32) -> Vec<String> {
        (0..self.dim_in(n))
            .map(|i| poly::format_monomial(self.basis_monomial(n, i), &self.names))
            .collect()
    }

    pub fn zero(&self, n: u32) -> Element {
        Element {
            degree: n,
            coords: F2Vector::zeros(self.dim_in(n)),
        }
    }

    pub fn one(&self) -> Element {
        self.basis_element(0, 0)
    }

    pub fn basis_element(&self, n: u32, i: usize) -> Element {
        Element {
            degree: n,
            coords: F2Vector::unit(self.dim_in(n), i),
        }
    }

    pub fn basis(&self, n: u32) -> Vec<Element> {
        (0..self.dim_in(n)).map(|i| self.basis_element(n, i)).collect()
    }

    pub fn generator(&self, i: usize) -> Element {
        self.from_poly_in(self.gen_degrees[i], &Poly::generator(self.names.len(), i))
    }

    /// The image of a homogeneous polynomial of degree `n` (zero above `top`).
    pub fn from_poly_in(&self, n: u32, p: &Poly) -> Element {
        match self.degrees.get(n as usize) {
            Some(d) => Element {
                degree: n,
                coords: d.normal_form(p),
            },
            None => Element {
                degree: n,
                coords: F2Vector::zeros(0),
            },
        }
    }

    pub fn from_poly(&self, p: &Poly) -> Result<Element, SpdaError> {
        let n = p
            .degree(&self.gen_degrees)
            .ok_or_else(|| SpdaError::Inhomogeneous(p.format(&self.names)))?;
        Ok(self.from_poly_in(n, p))
    }

    /// Parses a homogeneous element; `degree` is needed only for `0`.
    pub fn parse_element(&self, text: &str, degree: Option<u32>) -> Result<Element, SpdaError> {
        let p = poly::parse_poly(text, &self.names)?;
        if p.is_zero() {
            return degree
                .map(|n| self.zero(n))
                .ok_or_else(|| SpdaError::Malformed(format!("'{text}' needs a degree")));
        }
        let e = self.from_poly(&p)?;
        if let Some(n) = degree {
            if n != e.degree {
                return Err(SpdaError::Malformed(format!("'{text}' has degree {}, not {n}", e.degree)));
            }
        }
        Ok(e)
    }

    /// Shorthand for [`parse_element`](Self::parse_element) on nonzero input.
    pub fn element(&self, text: &str) -> Element {
        self.parse_element(text, None)
            .unwrap_or_else(|e| panic!("bad element '{text}': {e}"))
    }

    pub fn format(&self, x: &Element) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.coords
            .ones()
            .map(|i| poly::format_monomial(self.basis_monomial(x.degree, i), &self.names))
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn add(&self, a: &Element, b: &Element) -> Element {
        assert_eq!(a.degree, b.degree, "adding elements of different degrees");
        Element {
            degree: a.degree,
            coords: a.coords.add(&b.coords),
        }
    }

    pub fn mul(&self, a: &Element, b: &Element) -> Element {
        let n = a.degree + b.degree;
        let mut out = self.zero(n);
        if n > self.top {
            return out;
        }
        let table = &self.products[a.degree as usize][b.degree as usize];
        for i in a.coords.ones() {
            for j in b.coords.ones() {
                out.coords.add_assign(&table[i][j]);
            }
        }
        out
    }

    /// `Sq^k x`, read from the stored action tables.
    pub fn steenrod_on(&self, x: &Element, k: u32) -> Element {
        if k == 0 {
            return x.clone();
        }
        let n = x.degree + k;
        if n > self.top {
            return self.zero(n);
        }
        Element {
            degree: n,
            coords: self.action[k as usize][x.degree as usize].mul_vec(&x.coords),
        }
    }

    /// The matrix of `Sq^k` from degree `n` (zero-sized beyond `top`).
    pub fn action_matrix(&self, k: u32, n: u32) -> F2Matrix {
        if k == 0 {
            return F2Matrix::identity(self.dim_in(n));
        }
        if n + k > self.top {
            return F2Matrix::zeros(self.dim_in(n + k), self.dim_in(n));
        }
        self.action[k as usize][n as usize].clone()
    }

    /// A word `Sq^{r_1} ... Sq^{r_k}` applied to `x`, rightmost first.
    pub fn apply_word(&self, word: &[u32], x: &Element) -> Element {
        word.iter().rev().fold(x.clone(), |acc, &r| self.steenrod_on(&acc, r))
    }

    /// An element of the Steenrod algebra acting on `x`.
    pub fn act(&self, a: &SteenrodElement, x: &Element) -> Element {
        let n = x.degree + a.degree().unwrap_or(0);
        let mut out = self.zero(n);
        for m in a.terms() {
            out.coords.add_assign(&self.apply_word(m.exponents(), x).coords);
        }
        out
    }

    /// A copy with one entry of a stored `Sq^k` table flipped, without
    /// revalidation. Used to test that the checks notice corruption.
    pub fn with_flipped_action(&self, k: u32, n: u32, source: usize, target: usize) -> PresentedAlgebra {
        let mut out = self.clone();
        out.action[k as usize][n as usize].flip(target, source);
        out
    }

    /// All `(k, n, source, target)` positions of the stored tables with
    /// `k >= 1` and target degree at most `max_degree`.
    pub fn action_entries(&self, max_degree: u32) -> Vec<(u32, u32, usize, usize)> {
        let mut out = Vec::new();
        for k in 1..=self.top.min(max_degree) {
            for n in 0..=self.top.min(max_degree) - k {
                for s in 0..self.dim_in(n) {
                    for t in 0..self.dim_in(n + k) {
                        out.push((k, n, s, t));
                    }
                }
            }
        }
        out
    }

    /// Checks that the action is well defined and unstable and satisfies
    /// the Cartan formula and Adem relations, and, when a Poincaré duality
    /// degree is declared, that the algebra vanishes above it.
    pub fn validate(&self) -> Report {
        let mut r = self.check_relations_invariant();
        r.extend(self.check_axioms());
        if let Some(d) = self.spec.dimension {
            r.extend(self.check_vanishing_above(d));
        }
        r
    }

    /// The ideal of relations is closed under the action through `top`.
    pub fn check_relations_invariant(&self) -> Report {
        let mut r = Report::default();
        for (rel, e) in &self.relations {
            for k in 1..=self.top.saturating_sub(*e) {
                let image = self.from_poly_in(e + k, &self.sq_poly(k, rel));
                if !image.is_zero() {
                    r.push(
                        "relations invariant",
                        Some(e + k),
                        format!(
                            "Sq{k}({}) = {} is not in the ideal",
                            rel.format(&self.names),
                            self.sq_poly(k, rel).format(&self.names)
                        ),
                    );
                }
            }
        }
        r
    }

    /// Cartan formula, instability and Adem relations on the stored tables.
    pub fn check_axioms(&self) -> Report {
        let mut r = Report::default();
        // Cartan: Sq^k(g b) = sum Sq^i g Sq^{k-i} b
        for (gi, &gd) in self.gen_degrees.iter().enumerate() {
            if gd > self.top {
                continue;
            }
            let g = self.generator(gi);
            for n in 0..=self.top - gd {
                for b in self.basis(n) {
                    let gb = self.mul(&g, &b);
                    for k in 1..=self.top - gd - n {
                        let lhs = self.steenrod_on(&gb, k);
                        let mut rhs = self.zero(gd + n + k);
                        for i in 0..=k {
                            let t = self.mul(&self.steenrod_on(&g, i), &self.steenrod_on(&b, k - i));
                            rhs.coords.add_assign(&t.coords);
                        }
                        if lhs != rhs {
                            r.push(
                                "Cartan formula",
                                Some(gd + n + k),
                                format!(
                                    "Sq{k}({} * {}) = {} but the Cartan sum is {}",
                                    self.names[gi],
                                    self.format(&b),
                                    self.format(&lhs),
                                    self.format(&rhs)
                                ),
                            );
                        }
                    }
                }
            }
        }
        // unstable: Sq^n x = x^2 in degree n, Sq^k x = 0 for k > n
        for n in 0..=self.top {
            for x in self.basis(n) {
                for k in n..=self.top - n {
                    let s = self.steenrod_on(&x, k);
                    let want = if k == n { self.mul(&x, &x) } else { self.zero(n + k) };
                    if s != want {
                        r.push(
                            "unstable condition",
                            Some(n),
                            format!(
                                "Sq{k}({}) = {}, expected {}",
                                self.format(&x),
                                self.format(&s),
                                self.format(&want)
                            ),
                        );
                    }
                }
            }
        }
        // Adem: Sq^a Sq^b x = sum of admissible words, for 0 < a < 2b
        for n in 0..=self.top {
            for x in self.basis(n) {
                for b in 1..=self.top - n {
                    for a in 1..(2 * b).min(self.top - n - b + 1) {
                        let lhs = self.apply_word(&[a, b], &x);
                        let mut rhs = self.zero(n + a + b);
                        for w in adem_pair(a, b).iter() {
                            rhs.coords.add_assign(&self.apply_word(w, &x).coords);
                        }
                        if lhs != rhs {
                            r.push(
                                "Adem relation",
                                Some(n + a + b),
                                format!("Sq{a} Sq{b} on {}", self.format(&x)),
                            );
                        }
                    }
                }
            }
        }
        r
    }

    /// The quotient vanishes in degrees `d + 1 ..= d + max generator degree`
    /// (and hence everywhere above `d`).
    pub fn check_vanishing_above(&self, d: u32) -> Report {
        let mut r = Report::default();
        let max_gen = self.gen_degrees.iter().copied().max().unwrap_or(0);
        for n in d + 1..=d + max_gen {
            let data = DegreeData::new(n, &self.gen_degrees, &self.relations);
            if !data.basis.is_empty() {
                let names: Vec<String> = data
                    .basis
                    .iter()
                    .map(|&i| poly::format_monomial(&data.monomials[i], &self.names))
                    .collect();
                r.push("vanishing above the top degree", Some(n), names.join(", "));
            }
        }
        r
    }

    /// The algebra as a module over A, with one basis element per monomial.
    pub fn to_module(&self) -> GradedModule {
        let mut b = ModuleBuilder::new(AlgebraTag::A);
        let mut index = Vec::new();
        for n in 0..=self.top {
            let start = b.len();
            for name in self.basis_names(n) {
                b.add_basis(name, n as i32);
            }
            index.push(start);
        }
        let mut k = 1;
        while k <= self.top {
            for n in 0..=self.top - k {
                let m = &self.action[k as usize][n as usize];
                for s in 0..self.dim_in(n) {
                    let col = m.column(s);
                    let targets: Vec<usize> = col.ones().map(|t| index[(n + k) as usize] + t).collect();
                    b.add_action(k, index[n as usize] + s, &targets);
                }
            }
            k *= 2;
        }
        b.build().expect("algebra tables have the right degrees")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn j8() -> PresentedAlgebra {
        AlgebraSpec::new(&[("u2", 2), ("u3", 3)])
            .relation("u2^3 + u3^2")
            .relation("u2^2*u3")
            .sq("u2", 1, "u3")
            .sq("u3", 2, "u2*u3")
            .dimension(8)
            .build()
            .unwrap()
    }

    pub(crate) fn rp2() -> PresentedAlgebra {
        AlgebraSpec::new(&[("x", 1)]).relation("x^3").dimension(2).build().unwrap()
    }

    #[test]
    fn j8_dimensions_and_basis() {
        let p = j8();
        assert_eq!(p.dims(), vec![1, 0, 1, 1, 1, 1, 1, 0, 1]);
        assert_eq!(p.basis_names(6), vec!["u2^3"]);
        assert_eq!(p.basis_names(8), vec!["u2^4"]);
        assert_eq!(p.format(&p.element("u3^2")), "u2^3");
        assert!(p.validate().is_ok(), "{}", p.validate());
    }

    #[test]
    fn j8_actions() {
        let p = j8();
        let u2 = p.element("u2");
        assert_eq!(p.format(&p.steenrod_on(&u2, 2)), "u2^2");
        assert_eq!(p.format(&p.steenrod_on(&u2, 1)), "u3");
        let u2sq = p.element("u2^2");
        assert_eq!(p.format(&p.steenrod_on(&u2sq, 4)), "u2^4");
        assert_eq!(p.format(&p.steenrod_on(&u2sq, 2)), "u2^3");
        assert_eq!(p.format(&p.steenrod_on(&p.element("u2*u3"), 1)), "u2^3");
    }

    #[test]
    fn rp2_algebra() {
        let p = rp2();
        assert_eq!(p.dims(), vec![1, 1, 1]);
        assert_eq!(p.format(&p.steenrod_on(&p.element("x"), 1)), "x^2");
        assert!(p.validate().is_ok());
    }

    #[test]
    fn missing_relation_is_reported() {
        let p = AlgebraSpec::new(&[("u2", 2), ("u3", 3)])
            .relation("u2^3")
            .sq("u2", 1, "u3")
            .sq("u3", 2, "u2*u3")
            .dimension(8)
            .build()
            .unwrap();
        let report = p.validate();
        assert!(!report.is_ok());
        assert!(report.failures.iter().any(|f| f.check.contains("vanishing")));
    }

    #[test]
    fn bso3_images() {
        let p = AlgebraSpec::new(&[("w2", 2), ("w3", 3)])
            .sq("w2", 1, "w3")
            .sq("w3", 2, "w2*w3")
            .truncation(10)
            .build()
            .unwrap();
        let x = p.element("w2^3 + w3^2");
        assert_eq!(p.steenrod_on(&x, 1), p.element("w2^2*w3"));
        assert_eq!(p.steenrod_on(&x, 2), p.element("w2*(w2^3 + w3^2)"));
        assert_eq!(p.steenrod_on(&x, 4), p.element("w2^5"));
        assert_eq!(p.steenrod_on(&p.element("w3"), 3), p.element("w3^2"));
        assert!(p.validate().is_ok(), "{}", p.validate());
    }

    #[test]
    fn flipped_tables_are_noticed() {
        let p = j8();
        let bad = p.with_flipped_action(1, 2, 0, 0);
        assert!(!bad.check_axioms().is_ok());
        let bad = p.with_flipped_action(2, 0, 0, 0);
        assert!(!bad.check_axioms().is_ok());
    }

    #[test]
    fn bad_inputs() {
        let e = AlgebraSpec::new(&[("x", 1)]).relation("x^2 + x").dimension(2).build();
        assert!(matches!(e, Err(SpdaError::Inhomogeneous(_))));
        let e = AlgebraSpec::new(&[("x", 1)]).relation("x^3 + y").dimension(2).build();
        assert!(matches!(e, Err(SpdaError::Parse(_))));
        let e = AlgebraSpec::new(&[("x", 1)]).sq("x", 1, "x").dimension(2).build();
        assert!(matches!(e, Err(SpdaError::Malformed(_))));
        let e = AlgebraSpec::new(&[("x", 1)]).build();
        assert!(matches!(e, Err(SpdaError::Malformed(_))));
    }

    #[test]
    fn algebra_as_module() {
        let m = j8().to_module();
        assert_eq!(m.dim(), 7);
        assert!(m.check_axioms().is_ok());
    }
}
