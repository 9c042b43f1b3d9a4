//! The mod 2 Steenrod algebra in the admissible (Serre-Cartan) basis.
//!
//! Elements are finite sums of admissible monomials `Sq^{r_1} ... Sq^{r_k}`
//! with `r_i >= 2 r_{i+1}`. Products are computed by Adem rewriting; the
//! Hopf structure (coproduct, antipode) and the subalgebra A(1) live in the
//! submodules.

mod a1;
mod adem;
mod hopf;
mod text;

use std::collections::BTreeSet;
use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul};
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::f2linalg::F2Vector;

/// Process-wide cache of computed tables.
type Memo<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

pub use a1::{a1, a1_contains, A1BasisElement, A1};
pub use adem::{adem_pair, adem_reduce, adem_reduce_with, binom2, ReductionOrder};
pub use hopf::{antipode, antipode_sq, coproduct, TensorElement};

/// Degree bound used when enumerating degreewise bases of A.
pub const DEFAULT_DEGREE_BOUND: u32 = 48;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SteenrodError {
    #[error("sequence {0:?} is not admissible")]
    NotAdmissible(Vec<u32>),
    #[error("Sq^0 entries are not allowed in a monomial: {0:?}")]
    ZeroEntry(Vec<u32>),
    #[error("inhomogeneous sum: degrees {0} and {1}")]
    Inhomogeneous(u32, u32),
}

/// An admissible sequence `(r_1, ..., r_k)`; the empty sequence is `1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct AdmissibleMonomial(Vec<u32>);

impl AdmissibleMonomial {
    pub fn new(exponents: Vec<u32>) -> Result<Self, SteenrodError> {
        if exponents.contains(&0) {
            return Err(SteenrodError::ZeroEntry(exponents));
        }
        if !is_admissible(&exponents) {
            return Err(SteenrodError::NotAdmissible(exponents));
        }
        Ok(AdmissibleMonomial(exponents))
    }

    pub(crate) fn new_unchecked(exponents: Vec<u32>) -> Self {
        debug_assert!(is_admissible(&exponents) && !exponents.contains(&0));
        AdmissibleMonomial(exponents)
    }

    pub fn unit() -> Self {
        AdmissibleMonomial(Vec::new())
    }

    /// `Sq^k`, with `Sq^0 = 1`.
    pub fn sq(k: u32) -> Self {
        if k == 0 {
            Self::unit()
        } else {
            AdmissibleMonomial(vec![k])
        }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `r_1 - (r_2 + ... + r_k)`; zero for the unit.
    pub fn excess(&self) -> u32 {
        match self.0.split_first() {
            None => 0,
            Some((first, rest)) => first - rest.iter().sum::<u32>(),
        }
    }
}

impl fmt::Display for AdmissibleMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (i, r) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "Sq{r}")?;
        }
        Ok(())
    }
}

pub fn is_admissible(exponents: &[u32]) -> bool {
    exponents.windows(2).all(|w| w[0] >= 2 * w[1])
}

/// The 8 basis elements of A(1), in degrees 0, 1, 2, 3, 3, 4, 5, 6.
pub fn a1_basis() -> Vec<SteenrodElement> {
    a1().basis().iter().map(|b| b.element.clone()).collect()
}

/// `excess` as a free function over monomials.
pub fn excess(m: &AdmissibleMonomial) -> u32 {
    m.excess()
}

/// A homogeneous element of A: a set of admissible monomials.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SteenrodElement {
    terms: BTreeSet<AdmissibleMonomial>,
}

impl SteenrodElement {
    pub fn zero() -> Self {
        SteenrodElement::default()
    }

    pub fn one() -> Self {
        Self::from_monomial(AdmissibleMonomial::unit())
    }

    pub fn sq(k: u32) -> Self {
        Self::from_monomial(AdmissibleMonomial::sq(k))
    }

    pub fn from_monomial(m: AdmissibleMonomial) -> Self {
        SteenrodElement {
            terms: BTreeSet::from([m]),
        }
    }

    /// The product `Sq^{r_1} ... Sq^{r_k}` for an arbitrary word.
    pub fn from_word(word: &[u32]) -> Self {
        adem_reduce(word)
    }

    /// Sum of the given monomials (pairs cancel).
    pub fn from_monomials(
        monomials: impl IntoIterator<Item = AdmissibleMonomial>,
    ) -> Result<Self, SteenrodError> {
        let mut out = SteenrodElement::zero();
        for m in monomials {
            out.toggle(m);
        }
        out.check_homogeneous()?;
        Ok(out)
    }

    pub(crate) fn toggle(&mut self, m: AdmissibleMonomial) {
        if !self.terms.remove(&m) {
            self.terms.insert(m);
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = &AdmissibleMonomial> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn contains(&self, m: &AdmissibleMonomial) -> bool {
        self.terms.contains(m)
    }

    /// Degree of the element; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().next().map(AdmissibleMonomial::degree)
    }

    pub fn check_homogeneous(&self) -> Result<(), SteenrodError> {
        let mut it = self.terms.iter().map(AdmissibleMonomial::degree);
        if let Some(d) = it.next() {
            if let Some(e) = it.find(|&e| e != d) {
                return Err(SteenrodError::Inhomogeneous(d, e));
            }
        }
        Ok(())
    }

    pub fn is_homogeneous(&self) -> bool {
        self.check_homogeneous().is_ok()
    }

    /// Product in A.
    pub fn multiply(&self, other: &SteenrodElement) -> SteenrodElement {
        let mut out = SteenrodElement::zero();
        for a in &self.terms {
            for b in &other.terms {
                for m in multiply_monomials(a, b).terms() {
                    out.toggle(m.clone());
                }
            }
        }
        out
    }

    /// Coordinates with respect to the admissible basis in degree `n`.
    pub fn coordinates(&self, n: u32) -> F2Vector {
        let basis = admissible_basis(n);
        let index = basis_index(n);
        F2Vector::from_indices(
            basis.len(),
            self.terms.iter().map(|m| {
                *index
                    .get(m)
                    .unwrap_or_else(|| panic!("monomial {m} is not in degree {n}"))
            }),
        )
    }

    pub fn from_coordinates(n: u32, v: &F2Vector) -> SteenrodElement {
        let basis = admissible_basis(n);
        SteenrodElement {
            terms: v.ones().map(|i| basis[i].clone()).collect(),
        }
    }
}

impl fmt::Display for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, m) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{m}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for SteenrodElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SteenrodElement({self})")
    }
}

impl AddAssign<&SteenrodElement> for SteenrodElement {
    fn add_assign(&mut self, rhs: &SteenrodElement) {
        debug_assert!(
            self.is_zero() || rhs.is_zero() || self.degree() == rhs.degree(),
            "adding elements of different degrees"
        );
        for m in &rhs.terms {
            self.toggle(m.clone());
        }
    }
}

impl Add for &SteenrodElement {
    type Output = SteenrodElement;
    fn add(self, rhs: &SteenrodElement) -> SteenrodElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Mul for &SteenrodElement {
    type Output = SteenrodElement;
    fn mul(self, rhs: &SteenrodElement) -> SteenrodElement {
        self.multiply(rhs)
    }
}

type ProductMemo = Mutex<HashMap<(AdmissibleMonomial, AdmissibleMonomial), SteenrodElement>>;

fn product_memo() -> &'static ProductMemo {
    static MEMO: OnceLock<ProductMemo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Product of two admissible monomials, memoized.
pub fn multiply_monomials(a: &AdmissibleMonomial, b: &AdmissibleMonomial) -> SteenrodElement {
    if a.is_unit() {
        return SteenrodElement::from_monomial(b.clone());
    }
    if b.is_unit() {
        return SteenrodElement::from_monomial(a.clone());
    }
    let key = (a.clone(), b.clone());
    if let Some(hit) = product_memo().lock().unwrap().get(&key) {
        return hit.clone();
    }
    let mut word = a.0.clone();
    word.extend_from_slice(&b.0);
    let product = adem_reduce(&word);
    product_memo().lock().unwrap().insert(key, product.clone());
    product
}

/// All admissible monomials of degree `n`, in descending lexicographic order
/// (so `Sq^3` precedes `Sq^2 Sq^1`).
pub fn admissible_basis(n: u32) -> Arc<Vec<AdmissibleMonomial>> {
    static MEMO: OnceLock<Mutex<HashMap<u32, Arc<Vec<AdmissibleMonomial>>>>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let mut out = Vec::new();
    enumerate_admissible(n, n, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| b.cmp(a));
    let out = Arc::new(out);
    memo.lock().unwrap().insert(n, out.clone());
    out
}

fn enumerate_admissible(
    remaining: u32,
    max_first: u32,
    prefix: &mut Vec<u32>,
    out: &mut Vec<AdmissibleMonomial>,
) {
    if remaining == 0 {
        out.push(AdmissibleMonomial(prefix.clone()));
        return;
    }
    for r in 1..=remaining.min(max_first) {
        // a tail starting at most r/2 has degree < r
        if remaining - r >= r {
            continue;
        }
        prefix.push(r);
        enumerate_admissible(remaining - r, r / 2, prefix, out);
        prefix.pop();
    }
}

fn basis_index(n: u32) -> Arc<HashMap<AdmissibleMonomial, usize>> {
    static MEMO: Memo<u32, HashMap<AdmissibleMonomial, usize>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().unwrap().get(&n) {
        return hit.clone();
    }
    let idx: HashMap<_, _> = admissible_basis(n)
        .iter()
        .enumerate()
        .map(|(i, m)| (m.clone(), i))
        .collect();
    let idx = Arc::new(idx);
    memo.lock().unwrap().insert(n, idx.clone());
    idx
}
