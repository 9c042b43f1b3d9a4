//! Splitting off free A(1)-summands.

use crate::f2linalg::{F2Matrix, F2Vector};
use crate::steenrod::a1;

use super::ops::{direct_sum_with_maps, free_module_with_map};
use super::{AlgebraTag, GradedModule, ModuleBuilder, ModuleError, ModuleMap};

/// `m ≅ free_module(shifts) ⊕ remainder`, with the isomorphism.
#[derive(Debug, Clone)]
pub struct FreeSplitting {
    pub shifts: Vec<i32>,
    pub remainder: GradedModule,
    /// From `free_module(shifts) ⊕ remainder` to the original module.
    pub witness: ModuleMap,
}

/// Splits free summands off a module over A(1), lowest degree first.
///
/// A homogeneous `x` generates a free summand iff the top element `T` of
/// A(1) has `Tx ≠ 0`. Pick a functional `φ` with `φ(Tx) = 1`; the map
/// `π` defined by `λ(c·π(m)) = φ(c·m)` for all `c` in A(1), where `λ` reads
/// off the coefficient of `T`, is A(1)-linear with `π(x) = 1`, so
/// `m = A(1)x ⊕ ker π`.
pub fn split_free_summands(m: &GradedModule) -> Result<FreeSplitting, ModuleError> {
    if m.tag != AlgebraTag::A1 {
        return Err(ModuleError::RequiresA1);
    }
    if let Some(v) = m.check_axioms().violations.first() {
        return Err(ModuleError::Axioms(v.to_string()));
    }
    let alg = a1();
    let n = m.dim();
    let d = alg.dim();
    let ops: Vec<F2Matrix> = (0..d).map(|i| m.a1_basis_matrix(i)).collect();
    let top = &ops[alg.top_index()];
    // pairing[j][i] = λ(c_j · e_i)
    let mut pairing = F2Matrix::zeros(d, d);
    for j in 0..d {
        for i in 0..d {
            pairing.set(j, i, alg.frobenius(alg.product(j, i)));
        }
    }

    // current complement, one echelon basis per degree
    let mut complement: Vec<F2Vector> = (0..n).map(|i| F2Vector::unit(n, i)).collect();
    let mut shifts = Vec::new();
    let mut generators = Vec::new();
    while let Some(x) = complement.iter().find(|w| !top.mul_vec(w).is_zero()).cloned() {
        let deg = m.degree_of(x.first_one().unwrap());
        let tx = top.mul_vec(&x);
        let phi = tx.first_one().unwrap();
        let project = |w: &F2Vector| -> F2Vector {
            let rhs = F2Vector::from_indices(d, (0..d).filter(|&j| ops[j].mul_vec(w).get(phi)));
            pairing.solve(&rhs).unwrap().expect("the pairing on A(1) is nondegenerate")
        };
        // kernel of π restricted to the complement, computed per degree
        let mut next = Vec::new();
        let Some((lo, hi)) = m.degree_range() else { break };
        for e in lo..=hi {
            let here: Vec<&F2Vector> = complement
                .iter()
                .filter(|w| m.degree_of(w.first_one().unwrap()) == e)
                .collect();
            if here.is_empty() {
                continue;
            }
            let images: Vec<F2Vector> = here.iter().map(|w| project(w)).collect();
            let pi = F2Matrix::from_columns(d, &images);
            for k in pi.kernel_basis() {
                let mut v = F2Vector::zeros(n);
                for t in k.ones() {
                    v.add_assign(here[t]);
                }
                next.push(v);
            }
        }
        complement = echelon(next);
        shifts.push(deg);
        generators.push(x);
    }

    let remainder = complement_module(m, &complement);
    let (free, free_index) = free_module_with_map(AlgebraTag::A1, &shifts)?;
    let (sum, left, right) = direct_sum_with_maps(&free, &remainder)?;
    let mut matrix = F2Matrix::zeros(n, sum.dim());
    for (c, x) in generators.iter().enumerate() {
        for i in 0..d {
            let col = left[free_index[c][i]];
            for r in ops[i].mul_vec(x).ones() {
                matrix.set(r, col, true);
            }
        }
    }
    for (j, w) in complement.iter().enumerate() {
        for r in w.ones() {
            matrix.set(r, right[j], true);
        }
    }
    let witness = ModuleMap::new(sum, m.clone(), matrix);
    debug_assert!(witness.is_isomorphism());
    Ok(FreeSplitting {
        shifts,
        remainder,
        witness,
    })
}

/// Reduced echelon form of homogeneous vectors, sorted by pivot.
fn echelon(vectors: Vec<F2Vector>) -> Vec<F2Vector> {
    let Some(first) = vectors.first() else { return vectors };
    let len = first.len();
    let (r, pivots) = F2Matrix::from_rows(len, vectors).unwrap().rref();
    (0..pivots.len()).map(|i| r.row(i).clone()).collect()
}

/// The submodule spanned by `basis` (closed under the action, in echelon
/// form), named after the pivot of each basis vector.
fn complement_module(m: &GradedModule, basis: &[F2Vector]) -> GradedModule {
    let mut b = ModuleBuilder::new(AlgebraTag::A1);
    for w in basis {
        let p = w.first_one().unwrap();
        b.add_basis(m.basis[p].name.clone(), m.degree_of(p));
    }
    if basis.is_empty() {
        return b.build().expect("empty module");
    }
    let coords = F2Matrix::from_columns(m.dim(), basis);
    for k in [1, 2] {
        let s = m.generator_matrix(k);
        for (j, w) in basis.iter().enumerate() {
            let image = s.mul_vec(w);
            let x = coords
                .solve(&image)
                .unwrap()
                .expect("complement is a submodule");
            b.add_action_vector(k, j, x);
        }
    }
    b.build().expect("submodule tables are valid")
}
