//! Constructions: shifts, duals, tensor products, sums, free modules and
//! cyclic quotients of A(1).

use std::collections::HashSet;

use crate::f2linalg::{F2Matrix, F2Vector, Span};
use crate::steenrod::{a1, antipode_sq, SteenrodElement};

use super::{AlgebraTag, GradedModule, ModuleBuilder, ModuleError};

/// `m[n]`: every basis element moves from degree `d` to `d + n`.
pub fn shift(m: &GradedModule, n: i32) -> GradedModule {
    let basis = m
        .basis
        .iter()
        .map(|b| super::BasisElement {
            name: b.name.clone(),
            degree: b.degree + n,
        })
        .collect();
    GradedModule::from_parts(m.tag, basis, m.actions.clone()).expect("shifting keeps tables valid")
}

/// The dual module, with `(Sq^k f)(x) = f(χ(Sq^k) x)`.
pub fn dualize(m: &GradedModule) -> GradedModule {
    let mut b = ModuleBuilder::new(m.tag);
    for e in &m.basis {
        b.add_basis(format!("{}*", e.name), -e.degree);
    }
    for k in m.relevant_generators() {
        let chi = m
            .element_matrix(&antipode_sq(k))
            .expect("χ(Sq^1), χ(Sq^2) lie in A(1)");
        let dual = chi.transpose();
        for j in 0..m.dim() {
            b.add_action_vector(k, j, dual.column(j));
        }
    }
    b.build().expect("dual of a valid module is well formed")
}

/// The tensor product with the diagonal action
/// `Sq^k(x ⊗ y) = Σ Sq^i x ⊗ Sq^{k-i} y`.
pub fn tensor(m: &GradedModule, n: &GradedModule) -> Result<GradedModule, ModuleError> {
    if m.tag != n.tag {
        return Err(ModuleError::TagMismatch(m.tag, n.tag));
    }
    let (dm, dn) = (m.dim(), n.dim());
    let mut b = ModuleBuilder::new(m.tag);
    for x in &m.basis {
        for y in &n.basis {
            b.add_basis(format!("{}|{}", x.name, y.name), x.degree + y.degree);
        }
    }
    let span = m.span() + n.span();
    for k in m.tag.generators_up_to(span) {
        let left: Vec<F2Matrix> = (0..=k).map(|i| m.sq_matrix(i)).collect::<Result<_, _>>()?;
        let right: Vec<F2Matrix> = (0..=k).map(|i| n.sq_matrix(i)).collect::<Result<_, _>>()?;
        for i in 0..dm {
            for j in 0..dn {
                let mut image = F2Vector::zeros(dm * dn);
                for a in 0..=k as usize {
                    let xs = left[a].column(i);
                    let ys = right[k as usize - a].column(j);
                    for p in xs.ones() {
                        for q in ys.ones() {
                            image.flip(p * dn + q);
                        }
                    }
                }
                b.add_action_vector(k, i * dn + j, image);
            }
        }
    }
    b.build()
}

/// Direct sum `m ⊕ n`. Clashing names on the right get primes appended.
pub fn direct_sum(m: &GradedModule, n: &GradedModule) -> Result<GradedModule, ModuleError> {
    direct_sum_with_maps(m, n).map(|(s, _, _)| s)
}

/// Direct sum plus the positions of `m`'s and `n`'s basis elements in it.
pub(crate) fn direct_sum_with_maps(
    m: &GradedModule,
    n: &GradedModule,
) -> Result<(GradedModule, Vec<usize>, Vec<usize>), ModuleError> {
    if m.tag != n.tag {
        return Err(ModuleError::TagMismatch(m.tag, n.tag));
    }
    let total = m.dim() + n.dim();
    let mut b = ModuleBuilder::new(m.tag);
    let mut used: HashSet<String> = m.basis.iter().map(|e| e.name.clone()).collect();
    for e in &m.basis {
        b.add_basis(e.name.clone(), e.degree);
    }
    for e in &n.basis {
        let mut name = e.name.clone();
        while used.contains(&name) {
            name.push('\'');
        }
        used.insert(name.clone());
        b.add_basis(name, e.degree);
    }
    let gens: HashSet<u32> = m.generators().chain(n.generators()).collect();
    for k in gens {
        let left = m.generator_matrix(k);
        for j in 0..m.dim() {
            let c = left.column(j);
            b.add_action_vector(k, j, F2Vector::from_indices(total, c.ones()));
        }
        let right = n.generator_matrix(k);
        for j in 0..n.dim() {
            let c = right.column(j);
            b.add_action_vector(
                k,
                m.dim() + j,
                F2Vector::from_indices(total, c.ones().map(|i| i + m.dim())),
            );
        }
    }
    let (sum, perm) = b.build_with_permutation()?;
    let left = perm[..m.dim()].to_vec();
    let right = perm[m.dim()..].to_vec();
    Ok((sum, left, right))
}

/// Direct sum of several copies of A(1), the `c`-th shifted by `shifts[c]`.
pub fn free_module(tag: AlgebraTag, shifts: &[i32]) -> Result<GradedModule, ModuleError> {
    free_module_with_map(tag, shifts).map(|(m, _)| m)
}

/// Free module plus `index[c][i]`: position of `b_i · g_c` in the basis.
pub(crate) fn free_module_with_map(
    tag: AlgebraTag,
    shifts: &[i32],
) -> Result<(GradedModule, Vec<Vec<usize>>), ModuleError> {
    if tag != AlgebraTag::A1 {
        return Err(ModuleError::FreeOverA);
    }
    let alg = a1();
    let d = alg.dim();
    let mut b = ModuleBuilder::new(tag);
    for (c, &s) in shifts.iter().enumerate() {
        for (i, e) in alg.basis().iter().enumerate() {
            b.add_basis(format!("b{i}g{c}"), s + e.degree as i32);
        }
    }
    let total = shifts.len() * d;
    for c in 0..shifts.len() {
        for i in 0..d {
            for (k, gen_index) in [(1u32, 1usize), (2, 2)] {
                let coords = alg.product(gen_index, i);
                b.add_action_vector(
                    k,
                    c * d + i,
                    F2Vector::from_indices(total, coords.ones().map(|j| c * d + j)),
                );
            }
        }
    }
    let (m, perm) = b.build_with_permutation()?;
    let index = (0..shifts.len())
        .map(|c| (0..d).map(|i| perm[c * d + i]).collect())
        .collect();
    Ok((m, index))
}

/// `A(1) / A(1){relations}`, with basis names `{prefix}{degree}` (plus a
/// suffix when a degree has more than one element).
pub fn a1_cyclic_quotient(
    relations: &[SteenrodElement],
    prefix: &str,
) -> Result<GradedModule, ModuleError> {
    let alg = a1();
    let d = alg.dim();
    let mut ideal = Span::new(d);
    for r in relations {
        let rc = alg
            .coordinates(r)
            .ok_or_else(|| ModuleError::NotInA1(r.to_string()))?;
        for i in 0..d {
            let mut prod = F2Vector::zeros(d);
            for j in rc.ones() {
                prod.add_assign(alg.product(i, j));
            }
            ideal.insert(&prod);
        }
    }
    // complement basis: A(1) basis elements independent modulo the ideal
    let mut extended = ideal.clone();
    let mut reps = Vec::new();
    for i in 0..d {
        if extended.insert(&F2Vector::unit(d, i)) {
            reps.push(i);
        }
    }
    let mut b = ModuleBuilder::new(AlgebraTag::A1);
    for &i in &reps {
        let deg = alg.degree_of(i);
        let same: Vec<usize> = reps.iter().copied().filter(|&r| alg.degree_of(r) == deg).collect();
        let name = if same.len() == 1 {
            format!("{prefix}{deg}")
        } else {
            let pos = same.iter().position(|&r| r == i).unwrap();
            format!("{prefix}{deg}_{pos}")
        };
        b.add_basis(name, deg as i32);
    }
    // columns: chosen representatives, then an ideal basis
    let ideal_basis: Vec<F2Vector> = ideal.basis().cloned().collect();
    let mut cols: Vec<F2Vector> = reps.iter().map(|&i| F2Vector::unit(d, i)).collect();
    cols.extend(ideal_basis.iter().cloned());
    let solver = F2Matrix::from_columns(d, &cols);
    for (pos, &i) in reps.iter().enumerate() {
        for (k, gen_index) in [(1u32, 1usize), (2, 2)] {
            let image = alg.product(gen_index, i);
            let x = solver
                .solve(image)
                .unwrap()
                .expect("representatives and ideal span A(1)");
            let target = F2Vector::from_indices(reps.len(), x.ones().filter(|&t| t < reps.len()));
            b.add_action_vector(k, pos, target);
        }
    }
    b.build()
}

/// The Joker `A(1)/A(1){Sq^3}`: basis `j0, ..., j4` in degrees 0 to 4.
pub fn joker() -> GradedModule {
    a1_cyclic_quotient(&[SteenrodElement::sq(3)], "j").expect("Sq3 lies in A(1)")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn edge(m: &GradedModule, k: u32, from: &str, to: &str) -> bool {
        let s = m.sq_matrix(k).unwrap();
        s.get(m.index_of(to).unwrap(), m.index_of(from).unwrap())
    }

    #[test]
    fn joker_structure() {
        let j = joker();
        assert_eq!(j.dim(), 5);
        let dims: Vec<usize> = j.dims().values().copied().collect();
        assert_eq!(dims, vec![1, 1, 1, 1, 1]);
        assert!(edge(&j, 1, "j0", "j1"));
        assert!(!edge(&j, 1, "j1", "j2"));
        assert!(edge(&j, 1, "j3", "j4"));
        assert!(edge(&j, 2, "j0", "j2"));
        assert!(edge(&j, 2, "j1", "j3"));
        assert!(edge(&j, 2, "j2", "j4"));
        let sq2sq2 = j.word_matrix(&[2, 2]).unwrap();
        assert!(sq2sq2.get(4, 0));
        let sq3 = j.element_matrix(&SteenrodElement::sq(3)).unwrap();
        assert!(sq3.column(0).is_zero());
    }

    #[test]
    fn dual_of_joker() {
        let d = dualize(&joker());
        assert_eq!(d.degree_range(), Some((-4, 0)));
        assert_eq!(d.dims().values().copied().collect::<Vec<_>>(), vec![1; 5]);
        assert!(edge(&d, 1, "j4*", "j3*"));
        assert!(d.check_axioms().is_ok());
        let f2 = GradedModule::trivial(AlgebraTag::A1, "x", 0);
        let df = dualize(&f2);
        assert_eq!(df.degree_range(), Some((0, 0)));
    }

    #[test]
    fn shifts_compose() {
        let j = joker();
        assert_eq!(shift(&j, 0), j);
        assert_eq!(shift(&j, -6).degree_range(), Some((-6, -2)));
        assert_eq!(shift(&shift(&j, 3), -5), shift(&j, -2));
    }

    #[test]
    fn free_modules() {
        assert_eq!(free_module(AlgebraTag::A1, &[]).unwrap().dim(), 0);
        let a = free_module(AlgebraTag::A1, &[0]).unwrap();
        assert_eq!(a.dim(), 8);
        assert_eq!(a.dims().values().copied().collect::<Vec<_>>(), vec![1, 1, 1, 2, 1, 1, 1]);
        assert!(a.check_axioms().is_ok());
        assert_eq!(free_module(AlgebraTag::A1, &[-4, -2, -3]).unwrap().dim(), 24);
        assert_eq!(free_module(AlgebraTag::A, &[0]), Err(ModuleError::FreeOverA));
    }

    #[test]
    fn tensor_dimensions() {
        let j = joker();
        let jj = tensor(&j, &j).unwrap();
        assert_eq!(jj.dim(), 25);
        assert!(jj.check_axioms().is_ok());
        let unit = GradedModule::trivial(AlgebraTag::A1, "1", 0);
        let ju = tensor(&j, &unit).unwrap();
        assert_eq!(ju.dims(), j.dims());
        for d in -4..=4 {
            let expect: usize = (0..=4).map(|i| j.dim_in(i) * j.dim_in(d - i + 4)).sum();
            assert_eq!(tensor(&j, &shift(&j, -4)).unwrap().dim_in(d), expect);
        }
    }

    #[test]
    fn direct_sum_renames_clashes() {
        let j = joker();
        let s = direct_sum(&j, &j).unwrap();
        assert_eq!(s.dim(), 10);
        assert!(s.index_of("j0'").is_some());
        assert!(s.check_axioms().is_ok());
    }
}
