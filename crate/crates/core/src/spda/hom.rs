//! Algebra homomorphisms between presented algebras.

use crate::f2linalg::{F2Matrix, F2Vector};

use super::classes::verify_pd;
use super::{Element, Poly, PresentedAlgebra, SpdaError};

/// A homomorphism determined by the images of the source generators.
#[derive(Debug, Clone)]
pub struct AlgebraMap<'a> {
    pub source: &'a PresentedAlgebra,
    pub target: &'a PresentedAlgebra,
    pub images: Vec<Element>,
}

impl<'a> AlgebraMap<'a> {
    pub fn new(
        source: &'a PresentedAlgebra,
        target: &'a PresentedAlgebra,
        images: Vec<Element>,
    ) -> Result<Self, SpdaError> {
        if images.len() != source.generator_names().len() {
            return Err(SpdaError::Malformed("one image per generator is required".into()));
        }
        for (i, x) in images.iter().enumerate() {
            if x.degree != source.generator_degrees()[i] {
                return Err(SpdaError::Malformed(format!(
                    "image of {} has degree {}",
                    source.generator_names()[i],
                    x.degree
                )));
            }
        }
        Ok(AlgebraMap { source, target, images })
    }

    /// Images given as expressions in the target.
    pub fn parse(
        source: &'a PresentedAlgebra,
        target: &'a PresentedAlgebra,
        images: &[&str],
    ) -> Result<Self, SpdaError> {
        let elems = images
            .iter()
            .zip(source.generator_degrees())
            .map(|(t, &d)| target.parse_element(t, Some(d)))
            .collect::<Result<Vec<_>, _>>()?;
        AlgebraMap::new(source, target, elems)
    }

    pub fn identity(p: &'a PresentedAlgebra) -> Self {
        let images = (0..p.generator_names().len()).map(|i| p.generator(i)).collect();
        AlgebraMap {
            source: p,
            target: p,
            images,
        }
    }

    /// The image of a polynomial of degree `n` in the source generators.
    fn eval(&self, n: u32, p: &Poly) -> Element {
        let mut out = self.target.zero(n);
        for m in p.terms() {
            let mut acc = self.target.one();
            for (i, &e) in m.iter().enumerate() {
                for _ in 0..e {
                    acc = self.target.mul(&acc, &self.images[i]);
                }
            }
            out.coords.add_assign(&acc.coords);
        }
        out
    }

    /// Relations of the source map to zero.
    pub fn is_well_defined(&self) -> bool {
        self.source
            .relations
            .iter()
            .all(|(r, e)| *e > self.target.top_degree() || self.eval(*e, r).is_zero())
    }

    /// Matrix from degree `n` of the source to degree `n` of the target.
    pub fn matrix(&self, n: u32) -> F2Matrix {
        let cols: Vec<F2Vector> = (0..self.source.dim_in(n))
            .map(|i| {
                let m = self.source.basis_monomial(n, i).clone();
                self.eval(n, &Poly::monomial(m)).coords
            })
            .collect();
        F2Matrix::from_columns(self.target.dim_in(n), &cols)
    }

    /// Commutes with every `Sq^k` through the common top degree.
    pub fn is_steenrod_compatible(&self) -> bool {
        let top = self.source.top_degree().min(self.target.top_degree());
        (0..=top).all(|n| {
            (1..=top - n).all(|k| {
                let h_src = self.matrix(n);
                let h_dst = self.matrix(n + k);
                h_dst.mul(&self.source.action_matrix(k, n)) == self.target.action_matrix(k, n).mul(&h_src)
            })
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InjectivityReport {
    /// Kernel dimension in each degree `0..=d`.
    pub kernel_dims: Vec<usize>,
}

impl InjectivityReport {
    pub fn is_injective(&self) -> bool {
        self.kernel_dims.iter().all(|&k| k == 0)
    }
}

/// Kernel of a map of Poincaré duality algebras of the same degree that is
/// an isomorphism in the top degree. Such a map is always injective.
pub fn injectivity_check(h: &AlgebraMap<'_>) -> Result<InjectivityReport, SpdaError> {
    let (Some(d), Some(d2)) = (h.source.dimension(), h.target.dimension()) else {
        return Err(SpdaError::Precondition("both algebras need a duality degree".into()));
    };
    if d != d2 {
        return Err(SpdaError::Precondition(format!("duality degrees {d} and {d2} differ")));
    }
    for (p, which) in [(h.source, "source"), (h.target, "target")] {
        let r = verify_pd(p);
        if !r.is_ok() {
            return Err(SpdaError::Precondition(format!("{which} is not a duality algebra: {r}")));
        }
    }
    if !h.is_well_defined() {
        return Err(SpdaError::Precondition("relations do not map to zero".into()));
    }
    if !h.matrix(d).is_invertible() {
        return Err(SpdaError::Precondition(format!("not an isomorphism in degree {d}")));
    }
    let kernel_dims = (0..=d).map(|n| h.matrix(n).kernel_basis().len()).collect();
    Ok(InjectivityReport { kernel_dims })
}

/// Searches for an isomorphism of algebras with Steenrod action by trying
/// every choice of generator images.
pub fn algebra_isomorphism<'a>(
    p: &'a PresentedAlgebra,
    q: &'a PresentedAlgebra,
) -> Option<AlgebraMap<'a>> {
    if p.dims() != q.dims() {
        return None;
    }
    let choices: Vec<Vec<Element>> = p
        .generator_degrees()
        .iter()
        .map(|&d| {
            let dim = q.dim_in(d);
            (0..1u64 << dim)
                .map(|bits| Element {
                    degree: d,
                    coords: F2Vector::from_indices(dim, (0..dim).filter(|i| bits >> i & 1 == 1)),
                })
                .collect()
        })
        .collect();
    let total: usize = choices.iter().map(Vec::len).product();
    for mut idx in 0..total {
        let mut images = Vec::with_capacity(choices.len());
        for c in &choices {
            images.push(c[idx % c.len()].clone());
            idx /= c.len();
        }
        let h = AlgebraMap {
            source: p,
            target: q,
            images,
        };
        if h.is_well_defined()
            && (0..=p.top_degree()).all(|n| h.matrix(n).is_invertible())
            && h.is_steenrod_compatible()
        {
            return Some(h);
        }
    }
    None
}
