//! Coproduct and antipode.

use std::collections::BTreeSet;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use super::{multiply_monomials, AdmissibleMonomial, SteenrodElement};

/// An element of `A ⊗ A`, as a set of basis tensors.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct TensorElement {
    terms: BTreeSet<(AdmissibleMonomial, AdmissibleMonomial)>,
}

impl TensorElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_pair(AdmissibleMonomial::unit(), AdmissibleMonomial::unit())
    }

    pub fn from_pair(a: AdmissibleMonomial, b: AdmissibleMonomial) -> Self {
        TensorElement {
            terms: BTreeSet::from([(a, b)]),
        }
    }

    /// `a ⊗ b` expanded bilinearly.
    pub fn tensor(a: &SteenrodElement, b: &SteenrodElement) -> Self {
        let mut out = Self::zero();
        for x in a.terms() {
            for y in b.terms() {
                out.toggle((x.clone(), y.clone()));
            }
        }
        out
    }

    pub(crate) fn toggle(&mut self, t: (AdmissibleMonomial, AdmissibleMonomial)) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = &(AdmissibleMonomial, AdmissibleMonomial)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign(&mut self, other: &TensorElement) {
        for t in &other.terms {
            self.toggle(t.clone());
        }
    }

    /// Componentwise product `(a ⊗ b)(c ⊗ d) = ac ⊗ bd`.
    pub fn multiply(&self, other: &TensorElement) -> TensorElement {
        let mut out = Self::zero();
        for (a, b) in &self.terms {
            for (c, d) in &other.terms {
                let left = multiply_monomials(a, c);
                let right = multiply_monomials(b, d);
                out.add_assign(&Self::tensor(&left, &right));
            }
        }
        out
    }

    /// Counit applied to the left factor: keeps terms `1 ⊗ b`.
    pub fn counit_left(&self) -> SteenrodElement {
        let mut out = SteenrodElement::zero();
        for (a, b) in &self.terms {
            if a.is_unit() {
                out.toggle(b.clone());
            }
        }
        out
    }

    pub fn counit_right(&self) -> SteenrodElement {
        let mut out = SteenrodElement::zero();
        for (a, b) in &self.terms {
            if b.is_unit() {
                out.toggle(a.clone());
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (a, b)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{a} ⊗ {b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement({self})")
    }
}

fn coproduct_sq(k: u32) -> TensorElement {
    let mut out = TensorElement::zero();
    for i in 0..=k {
        out.toggle((AdmissibleMonomial::sq(i), AdmissibleMonomial::sq(k - i)));
    }
    out
}

/// `ψ(Sq^k) = Σ Sq^i ⊗ Sq^{k-i}`, extended multiplicatively.
pub fn coproduct(a: &SteenrodElement) -> TensorElement {
    let mut out = TensorElement::zero();
    for m in a.terms() {
        let mut acc = TensorElement::one();
        for &r in m.exponents() {
            acc = acc.multiply(&coproduct_sq(r));
        }
        out.add_assign(&acc);
    }
    out
}

/// `χ(Sq^k)`, from `Σ_{0<=r<=k} Sq^{k-r} χ(Sq^r) = 0` for `k >= 1`.
pub fn antipode_sq(k: u32) -> SteenrodElement {
    static MEMO: OnceLock<Mutex<Vec<SteenrodElement>>> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(vec![SteenrodElement::one()]));
    {
        let table = memo.lock().unwrap();
        if let Some(hit) = table.get(k as usize) {
            return hit.clone();
        }
    }
    // Fill the table in order; each entry only needs the earlier ones.
    let mut n = memo.lock().unwrap().len() as u32;
    while n <= k {
        let earlier: Vec<SteenrodElement> = memo.lock().unwrap()[..n as usize].to_vec();
        let mut chi = SteenrodElement::zero();
        for (r, chi_r) in earlier.iter().enumerate() {
            chi += &SteenrodElement::sq(n - r as u32).multiply(chi_r);
        }
        let mut table = memo.lock().unwrap();
        if table.len() == n as usize {
            table.push(chi);
        }
        n = table.len() as u32;
    }
    memo.lock().unwrap()[k as usize].clone()
}

/// The antipode, an anti-automorphism: `χ(Sq^{r_1}...Sq^{r_k}) = χ(Sq^{r_k})...χ(Sq^{r_1})`.
pub fn antipode(a: &SteenrodElement) -> SteenrodElement {
    let mut out = SteenrodElement::zero();
    for m in a.terms() {
        let mut acc = SteenrodElement::one();
        for &r in m.exponents().iter().rev() {
            acc = acc.multiply(&antipode_sq(r));
        }
        out += &acc;
    }
    out
}
