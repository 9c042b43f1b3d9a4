//! Homomorphism spaces and isomorphism search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::f2linalg::{F2Matrix, F2Vector};
use crate::steenrod::a1;

use super::{AlgebraTag, GradedModule, ModuleMap};

/// Hom spaces up to this dimension are searched exhaustively.
const EXHAUSTIVE_DIM: usize = 16;
const RANDOM_TRIES: usize = 4096;
const SEED: u64 = 0x5_eed0_f150;

/// A basis of the degree-preserving equivariant maps `m -> n`, as
/// target-by-source matrices.
pub fn hom_basis(m: &GradedModule, n: &GradedModule) -> Vec<F2Matrix> {
    if m.tag != n.tag {
        return Vec::new();
    }
    // unknowns: X[i][j] with deg n_i = deg m_j
    let mut unknowns = Vec::new();
    // index[j][i] numbers the unknown X[i][j]
    let mut index = vec![vec![usize::MAX; n.dim()]; m.dim()];
    for (j, slots) in index.iter_mut().enumerate() {
        for i in n.range(m.degree_of(j)) {
            slots[i] = unknowns.len();
            unknowns.push((i, j));
        }
    }
    if unknowns.is_empty() {
        return Vec::new();
    }
    let span = m.span().max(n.span());
    let mut eqs: Vec<F2Vector> = Vec::new();
    for k in m.tag.generators_up_to(span) {
        let sm = m.generator_matrix(k);
        let sn = n.generator_matrix(k);
        // (X Sm)[i][j] + (Sn X)[i][j] = 0 with deg n_i = deg m_j + k
        for j in 0..m.dim() {
            let sm_col = sm.column(j);
            for i in n.range(m.degree_of(j) + k as i32) {
                let mut row = F2Vector::zeros(unknowns.len());
                for l in sm_col.ones() {
                    row.flip(index[l][i]);
                }
                for l in sn.row(i).ones() {
                    row.flip(index[j][l]);
                }
                if !row.is_zero() {
                    eqs.push(row);
                }
            }
        }
    }
    let system = if eqs.is_empty() {
        F2Matrix::zeros(0, unknowns.len())
    } else {
        F2Matrix::from_rows(unknowns.len(), eqs).expect("equal row lengths")
    };
    system
        .kernel_basis()
        .into_iter()
        .map(|v| {
            let mut x = F2Matrix::zeros(n.dim(), m.dim());
            for u in v.ones() {
                let (i, j) = unknowns[u];
                x.set(i, j, true);
            }
            x
        })
        .collect()
}

/// Per-degree ranks of the operations used as isomorphism invariants.
fn rank_profile(m: &GradedModule) -> Vec<Vec<usize>> {
    let ops: Vec<F2Matrix> = match m.tag {
        AlgebraTag::A1 => (0..a1().dim()).map(|i| m.a1_basis_matrix(i)).collect(),
        AlgebraTag::A => (1..=m.span()).map(|k| m.sq_matrix(k).unwrap()).collect(),
    };
    let Some((lo, hi)) = m.degree_range() else {
        return Vec::new();
    };
    ops.iter()
        .map(|op| {
            (lo..=hi)
                .map(|d| {
                    let cols: Vec<F2Vector> = m.range(d).map(|j| op.column(j)).collect();
                    F2Matrix::from_columns(m.dim(), &cols).rank()
                })
                .collect()
        })
        .collect()
}

/// Finds an isomorphism `m -> n` if one exists.
///
/// Candidates are pruned by per-degree dimensions and operation ranks. The
/// equivariant maps form a linear space; when it is small every element is
/// tried, otherwise a fixed-seed random sample of combinations is tested.
pub fn iso_check(m: &GradedModule, n: &GradedModule) -> Option<ModuleMap> {
    if m.tag != n.tag || m.dims() != n.dims() {
        return None;
    }
    if rank_profile(m) != rank_profile(n) {
        return None;
    }
    if m.dim() == 0 {
        return Some(ModuleMap::new(m.clone(), n.clone(), F2Matrix::zeros(0, 0)));
    }
    let basis = hom_basis(m, n);
    let found = if basis.len() <= EXHAUSTIVE_DIM {
        search_all(&basis)
    } else {
        search_random(&basis)
    };
    found.map(|x| ModuleMap::new(m.clone(), n.clone(), x))
}

fn search_all(basis: &[F2Matrix]) -> Option<F2Matrix> {
    let first = basis.first()?;
    let mut acc = F2Matrix::zeros(first.rows(), first.cols());
    // Gray code walk: one basis element toggled per step
    for step in 1u64..(1u64 << basis.len()) {
        acc = acc.add(&basis[step.trailing_zeros() as usize]);
        if acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}

fn search_random(basis: &[F2Matrix]) -> Option<F2Matrix> {
    if let Some(x) = basis.iter().find(|x| x.is_invertible()) {
        return Some(x.clone());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for _ in 0..RANDOM_TRIES {
        let mut acc = F2Matrix::zeros(basis[0].rows(), basis[0].cols());
        for b in basis {
            if rng.gen::<bool>() {
                acc = acc.add(b);
            }
        }
        if acc.is_invertible() {
            return Some(acc);
        }
    }
    None
}
