//! The cross product algebra `P ♯ A`, with
//! `(a α)(b β) = Σ_i a (α'_i b) α''_i β` where `ψ(α) = Σ_i α'_i ⊗ α''_i`.

use std::collections::BTreeSet;

use crate::steenrod::{antipode, coproduct, AdmissibleMonomial, SteenrodElement};

use super::{Element, PresentedAlgebra};

/// A sum of pairs `(basis element of P, admissible monomial)`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SharpElement {
    terms: BTreeSet<(u32, usize, AdmissibleMonomial)>,
}

impl SharpElement {
    pub fn zero() -> Self {
        SharpElement::default()
    }

    /// `a α`, expanded bilinearly.
    pub fn pair(a: &Element, alpha: &SteenrodElement) -> Self {
        let mut out = SharpElement::zero();
        for i in a.coords.ones() {
            for m in alpha.terms() {
                out.toggle((a.degree, i, m.clone()));
            }
        }
        out
    }

    pub fn one(p: &PresentedAlgebra) -> Self {
        SharpElement::pair(&p.one(), &SteenrodElement::one())
    }

    fn toggle(&mut self, t: (u32, usize, AdmissibleMonomial)) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn add_assign(&mut self, other: &SharpElement) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn multiply(&self, p: &PresentedAlgebra, other: &SharpElement) -> SharpElement {
        let mut out = SharpElement::zero();
        for (an, ai, alpha) in &self.terms {
            let a = p.basis_element(*an, *ai);
            let psi = coproduct(&SteenrodElement::from_monomial(alpha.clone()));
            for (bn, bi, beta) in &other.terms {
                let b = p.basis_element(*bn, *bi);
                let beta = SteenrodElement::from_monomial(beta.clone());
                for (left, right) in psi.terms() {
                    let moved = p.act(&SteenrodElement::from_monomial(left.clone()), &b);
                    let c = p.mul(&a, &moved);
                    let gamma = SteenrodElement::from_monomial(right.clone()).multiply(&beta);
                    out.add_assign(&SharpElement::pair(&c, &gamma));
                }
            }
        }
        out
    }

    pub fn format(&self, p: &PresentedAlgebra) -> String {
        if self.is_zero() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(n, i, m)| format!("({}, {})", p.format(&p.basis_element(*n, *i)), m))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Both sides of `a α = Σ_i (1 α'_i)(χ(α''_i) a)`.
pub fn crosprod_reverse(
    p: &PresentedAlgebra,
    a: &Element,
    alpha: &SteenrodElement,
) -> (SharpElement, SharpElement) {
    let lhs = SharpElement::pair(a, alpha);
    let mut rhs = SharpElement::zero();
    for (left, right) in coproduct(alpha).terms() {
        let first = SharpElement::pair(&p.one(), &SteenrodElement::from_monomial(left.clone()));
        let moved = p.act(&antipode(&SteenrodElement::from_monomial(right.clone())), a);
        let second = SharpElement::pair(&moved, &SteenrodElement::one());
        rhs.add_assign(&first.multiply(p, &second));
    }
    (lhs, rhs)
}
