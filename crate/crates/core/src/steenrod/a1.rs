//! The subalgebra A(1) generated by `Sq^1` and `Sq^2`.
//!
//! A(1) is kept as a sub-span of A: its basis is found by closing
//! `{1, Sq^1, Sq^2}` under left multiplication degree by degree. Every basis
//! element also remembers a way of writing it as a sum of words in the
//! generators, which is how A(1)-modules (given only by `Sq^1`, `Sq^2`
//! tables) are acted on by arbitrary elements.

use std::sync::OnceLock;

use crate::f2linalg::{F2Matrix, F2Vector, Span};

use super::{admissible_basis, SteenrodElement};

#[derive(Clone, Debug)]
pub struct A1BasisElement {
    pub degree: u32,
    pub element: SteenrodElement,
    /// Sum of words in `Sq^1`, `Sq^2` (letters 1 and 2) equal to `element`.
    pub words: Vec<Vec<u32>>,
}

#[derive(Debug)]
pub struct A1 {
    basis: Vec<A1BasisElement>,
    /// `products[i][j]` = coordinates of `basis[i] * basis[j]`.
    products: Vec<Vec<F2Vector>>,
}

/// The shared A(1) instance.
pub fn a1() -> &'static A1 {
    static A1_INSTANCE: OnceLock<A1> = OnceLock::new();
    A1_INSTANCE.get_or_init(A1::compute)
}

impl A1 {
    fn compute() -> A1 {
        let mut by_degree: Vec<Vec<A1BasisElement>> = vec![vec![A1BasisElement {
            degree: 0,
            element: SteenrodElement::one(),
            words: vec![vec![]],
        }]];
        let mut empty_run = 0;
        let mut n = 1u32;
        while empty_run < 2 {
            // candidates Sq^g * b for b of degree n - g
            let mut candidates: Vec<(SteenrodElement, Vec<Vec<u32>>)> = Vec::new();
            for g in [1u32, 2] {
                if g > n {
                    continue;
                }
                for b in &by_degree[(n - g) as usize] {
                    let e = SteenrodElement::sq(g).multiply(&b.element);
                    let words = b
                        .words
                        .iter()
                        .map(|w| {
                            let mut x = vec![g];
                            x.extend_from_slice(w);
                            x
                        })
                        .collect();
                    candidates.push((e, words));
                }
            }
            let dim_a = admissible_basis(n).len();
            let mut span = Span::new(dim_a);
            for (e, _) in &candidates {
                span.insert(&e.coordinates(n));
            }
            // canonical basis: reduced echelon rows of the span
            let rows: Vec<F2Vector> = span.basis().cloned().collect();
            let (echelon, pivots) = F2Matrix::from_rows(dim_a, rows).unwrap().rref();
            let cand_matrix = F2Matrix::from_columns(
                dim_a,
                &candidates.iter().map(|(e, _)| e.coordinates(n)).collect::<Vec<_>>(),
            );
            let mut level = Vec::new();
            for i in 0..pivots.len() {
                let target = echelon.row(i).clone();
                let combo = cand_matrix
                    .solve(&target)
                    .unwrap()
                    .expect("echelon row lies in the candidate span");
                let mut words = Vec::new();
                for c in combo.ones() {
                    words.extend(candidates[c].1.iter().cloned());
                }
                level.push(A1BasisElement {
                    degree: n,
                    element: SteenrodElement::from_coordinates(n, &target),
                    words,
                });
            }
            empty_run = if level.is_empty() { empty_run + 1 } else { 0 };
            by_degree.push(level);
            n += 1;
        }
        let basis: Vec<A1BasisElement> = by_degree.into_iter().flatten().collect();
        let mut a1 = A1 {
            basis,
            products: Vec::new(),
        };
        let products = (0..a1.dim())
            .map(|i| {
                (0..a1.dim())
                    .map(|j| {
                        let p = a1.basis[i].element.multiply(&a1.basis[j].element);
                        a1.coordinates(&p).expect("A(1) is closed under products")
                    })
                    .collect()
            })
            .collect();
        a1.products = products;
        a1
    }

    pub fn basis(&self) -> &[A1BasisElement] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.last().map_or(0, |b| b.degree)
    }

    /// Index of the unique nonzero top-degree element.
    pub fn top_index(&self) -> usize {
        self.dim() - 1
    }

    pub fn indices_in_degree(&self, n: u32) -> impl Iterator<Item = usize> + '_ {
        (0..self.dim()).filter(move |&i| self.basis[i].degree == n)
    }

    pub fn degree_of(&self, i: usize) -> u32 {
        self.basis[i].degree
    }

    /// Coordinates of `a` in the A(1) basis, or `None` when `a` is not in A(1).
    pub fn coordinates(&self, a: &SteenrodElement) -> Option<F2Vector> {
        let Some(n) = a.degree() else {
            return Some(F2Vector::zeros(self.dim()));
        };
        let idx: Vec<usize> = self.indices_in_degree(n).collect();
        let dim_a = admissible_basis(n).len();
        let cols: Vec<F2Vector> = idx.iter().map(|&i| self.basis[i].element.coordinates(n)).collect();
        let m = F2Matrix::from_columns(dim_a, &cols);
        let local = m.solve(&a.coordinates(n)).unwrap()?;
        Some(F2Vector::from_indices(self.dim(), local.ones().map(|k| idx[k])))
    }

    pub fn contains(&self, a: &SteenrodElement) -> bool {
        self.coordinates(a).is_some()
    }

    pub fn element(&self, coords: &F2Vector) -> SteenrodElement {
        let mut out = SteenrodElement::zero();
        for i in coords.ones() {
            out += &self.basis[i].element;
        }
        out
    }

    /// Coordinates of `basis[i] * basis[j]`.
    pub fn product(&self, i: usize, j: usize) -> &F2Vector {
        &self.products[i][j]
    }

    /// The Frobenius form: coefficient of the top element.
    pub fn frobenius(&self, coords: &F2Vector) -> bool {
        coords.get(self.top_index())
    }
}

/// Membership test for A(1).
pub fn a1_contains(a: &SteenrodElement) -> bool {
    a1().contains(a)
}
