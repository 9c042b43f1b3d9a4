//! Finite graded left modules over A or A(1), given by action tables for the
//! algebra generators (`Sq^1`, `Sq^2` for A(1); `Sq^{2^i}` for A).

mod format;
mod iso;
mod ops;
mod split;

use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt;
use std::ops::Range;
use std::sync::{Arc, Mutex, OnceLock};

use thiserror::Error;

use crate::f2linalg::{F2Matrix, F2Vector};
use crate::parse::ParseError;
use crate::steenrod::{a1, adem_reduce, admissible_basis, SteenrodElement};

/// Process-wide cache of computed tables.
type Memo<K, V> = OnceLock<Mutex<HashMap<K, Arc<V>>>>;

pub use format::ModuleFile;
pub(crate) use format::position as format_position;
pub use iso::{hom_basis, iso_check};
pub use ops::{direct_sum, dualize, free_module, joker, a1_cyclic_quotient, shift, tensor};
pub use split::{split_free_summands, FreeSplitting};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AlgebraTag {
    A,
    A1,
}

impl AlgebraTag {
    pub fn as_str(self) -> &'static str {
        match self {
            AlgebraTag::A => "A",
            AlgebraTag::A1 => "A(1)",
        }
    }

    /// Whether `Sq^k` is one of the stored generators for this algebra.
    pub fn is_generator(self, k: u32) -> bool {
        match self {
            AlgebraTag::A1 => k == 1 || k == 2,
            AlgebraTag::A => k.is_power_of_two(),
        }
    }

    /// Generators of degree at most `max`.
    pub fn generators_up_to(self, max: u32) -> Vec<u32> {
        (1..=max).filter(|&k| self.is_generator(k)).collect()
    }
}

impl fmt::Display for AlgebraTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl std::str::FromStr for AlgebraTag {
    type Err = ModuleError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" => Ok(AlgebraTag::A),
            "A(1)" => Ok(AlgebraTag::A1),
            other => Err(ModuleError::Malformed(format!("unknown algebra '{other}'"))),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq)]
pub enum ModuleError {
    #[error("malformed module: {0}")]
    Malformed(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("algebra mismatch: {0} vs {1}")]
    TagMismatch(AlgebraTag, AlgebraTag),
    #[error("{0} is not an element of A(1)")]
    NotInA1(String),
    #[error("free modules over A are not finite")]
    FreeOverA,
    #[error("operation requires a module over A(1)")]
    RequiresA1,
    #[error("induced map does not respect the action")]
    NotEquivariant,
    #[error("not a module: {0}")]
    Axioms(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BasisElement {
    pub name: String,
    pub degree: i32,
}

/// A finite graded module with action tables for the algebra generators.
///
/// The basis is kept sorted by degree (stable), so each degree occupies a
/// contiguous index range. `actions[k]` is a square matrix whose `j`-th
/// column is `Sq^k` applied to basis element `j`.
#[derive(Clone, PartialEq, Eq)]
pub struct GradedModule {
    tag: AlgebraTag,
    basis: Vec<BasisElement>,
    actions: BTreeMap<u32, F2Matrix>,
    /// `sq[k]` for all `k` up to the span of the module (A), or up to 3 (A(1)).
    sq: Vec<F2Matrix>,
}

/// Incremental construction of a [`GradedModule`].
#[derive(Debug, Clone)]
pub struct ModuleBuilder {
    tag: AlgebraTag,
    basis: Vec<BasisElement>,
    actions: BTreeMap<u32, Vec<(usize, F2Vector)>>,
}

impl ModuleBuilder {
    pub fn new(tag: AlgebraTag) -> Self {
        ModuleBuilder {
            tag,
            basis: Vec::new(),
            actions: BTreeMap::new(),
        }
    }

    pub fn add_basis(&mut self, name: impl Into<String>, degree: i32) -> usize {
        self.basis.push(BasisElement {
            name: name.into(),
            degree,
        });
        self.basis.len() - 1
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    /// Records `Sq^k(source) = sum of targets`, accumulating with earlier entries.
    pub fn add_action(&mut self, k: u32, source: usize, targets: &[usize]) {
        let n = self.basis.len();
        self.add_action_vector(k, source, F2Vector::from_indices(n, targets.iter().copied()));
    }

    /// Like [`add_action`](Self::add_action) with a target vector over the
    /// basis added so far. The vector is padded if basis elements are added later.
    pub fn add_action_vector(&mut self, k: u32, source: usize, target: F2Vector) {
        self.actions.entry(k).or_default().push((source, target));
    }

    pub fn build(self) -> Result<GradedModule, ModuleError> {
        self.build_with_permutation().map(|(m, _)| m)
    }

    /// Builds and also returns `perm`, where `perm[i]` is the final index of
    /// the `i`-th added basis element.
    pub fn build_with_permutation(self) -> Result<(GradedModule, Vec<usize>), ModuleError> {
        let n = self.basis.len();
        let mut seen = HashSet::new();
        for b in &self.basis {
            if !seen.insert(b.name.as_str()) {
                return Err(ModuleError::Malformed(format!("duplicate basis name '{}'", b.name)));
            }
            if b.name.contains('+') || b.name.trim() != b.name || b.name.is_empty() {
                return Err(ModuleError::Malformed(format!("invalid basis name '{}'", b.name)));
            }
        }
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&i| self.basis[i].degree);
        let mut perm = vec![0; n];
        for (new, &old) in order.iter().enumerate() {
            perm[old] = new;
        }
        let basis: Vec<BasisElement> = order.iter().map(|&i| self.basis[i].clone()).collect();
        let mut actions = BTreeMap::new();
        for (k, entries) in self.actions {
            if !self.tag.is_generator(k) {
                return Err(ModuleError::Malformed(format!(
                    "Sq{k} is not a generator of {}",
                    self.tag
                )));
            }
            let mut m = F2Matrix::zeros(n, n);
            for (src, target) in entries {
                if src >= n || target.len() > n {
                    return Err(ModuleError::Malformed("action index out of range".into()));
                }
                for t in target.ones() {
                    m.flip(perm[t], perm[src]);
                }
            }
            if !m.is_zero() {
                actions.insert(k, m);
            }
        }
        let module = GradedModule::from_parts(self.tag, basis, actions)?;
        Ok((module, perm))
    }
}

impl GradedModule {
    /// Assembles a module from a degree-sorted basis and generator matrices.
    pub(crate) fn from_parts(
        tag: AlgebraTag,
        basis: Vec<BasisElement>,
        actions: BTreeMap<u32, F2Matrix>,
    ) -> Result<Self, ModuleError> {
        validate_tables(tag, &basis, &actions)?;
        let mut m = GradedModule {
            tag,
            basis,
            actions: actions.into_iter().filter(|(_, a)| !a.is_zero()).collect(),
            sq: Vec::new(),
        };
        m.sq = m.compute_sq_matrices();
        Ok(m)
    }

    pub fn zero(tag: AlgebraTag) -> Self {
        GradedModule::from_parts(tag, Vec::new(), BTreeMap::new()).unwrap()
    }

    /// F2 concentrated in degree `degree`, with basis element `name`.
    pub fn trivial(tag: AlgebraTag, name: &str, degree: i32) -> Self {
        let mut b = ModuleBuilder::new(tag);
        b.add_basis(name, degree);
        b.build().unwrap()
    }

    pub fn tag(&self) -> AlgebraTag {
        self.tag
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BasisElement] {
        &self.basis
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b.name == name)
    }

    pub fn degree_of(&self, i: usize) -> i32 {
        self.basis[i].degree
    }

    /// `(lowest, highest)` degree, or `None` for the zero module.
    pub fn degree_range(&self) -> Option<(i32, i32)> {
        Some((self.basis.first()?.degree, self.basis.last()?.degree))
    }

    /// Index range of the basis elements in degree `d`.
    pub fn range(&self, d: i32) -> Range<usize> {
        let start = self.basis.partition_point(|b| b.degree < d);
        let end = self.basis.partition_point(|b| b.degree <= d);
        start..end
    }

    pub fn dim_in(&self, d: i32) -> usize {
        self.range(d).len()
    }

    /// Dimensions per degree from the lowest to the highest degree.
    pub fn dims(&self) -> BTreeMap<i32, usize> {
        let mut out = BTreeMap::new();
        for b in &self.basis {
            *out.entry(b.degree).or_insert(0) += 1;
        }
        out
    }

    pub fn generator_matrix(&self, k: u32) -> F2Matrix {
        self.actions
            .get(&k)
            .cloned()
            .unwrap_or_else(|| F2Matrix::zeros(self.dim(), self.dim()))
    }

    /// The generators with a nonzero action.
    pub fn generators(&self) -> impl Iterator<Item = u32> + '_ {
        self.actions.keys().copied()
    }

    /// Generators relevant to this module: all generators up to its span.
    pub fn relevant_generators(&self) -> Vec<u32> {
        let span = self.span();
        self.tag.generators_up_to(span)
    }

    fn span(&self) -> u32 {
        self.degree_range().map_or(0, |(lo, hi)| (hi - lo) as u32)
    }

    /// Matrix of `Sq^k` on the whole module.
    pub fn sq_matrix(&self, k: u32) -> Result<F2Matrix, ModuleError> {
        if let Some(m) = self.sq.get(k as usize) {
            return Ok(m.clone());
        }
        match self.tag {
            AlgebraTag::A => Ok(F2Matrix::zeros(self.dim(), self.dim())),
            AlgebraTag::A1 => Err(ModuleError::NotInA1(format!("Sq{k}"))),
        }
    }

    fn compute_sq_matrices(&self) -> Vec<F2Matrix> {
        let n = self.dim();
        let mut sq = vec![F2Matrix::identity(n)];
        match self.tag {
            AlgebraTag::A1 => {
                let s1 = self.generator_matrix(1);
                let s2 = self.generator_matrix(2);
                let s3 = s1.mul(&s2);
                sq.extend([s1, s2, s3]);
            }
            AlgebraTag::A => {
                // Sq^n = Sq^m Sq^{2^k} + sum_{c>=1} binom(2^k-c-1, m-2c) Sq^{n-c} Sq^c
                // for n = 2^k + m, 0 < m < 2^k.
                for k in 1..=self.span() {
                    if k.is_power_of_two() {
                        sq.push(self.generator_matrix(k));
                        continue;
                    }
                    let p = 1u32 << (31 - k.leading_zeros());
                    let m = k - p;
                    let mut acc = sq[m as usize].mul(&sq[p as usize]);
                    for c in 1..=m / 2 {
                        if crate::steenrod::binom2((p - c - 1) as i64, (m - 2 * c) as i64) {
                            acc = acc.add(&sq[(k - c) as usize].mul(&sq[c as usize]));
                        }
                    }
                    sq.push(acc);
                }
            }
        }
        sq
    }

    /// Matrix of a word `Sq^{r_1} ... Sq^{r_k}` (rightmost letter acts first).
    pub fn word_matrix(&self, word: &[u32]) -> Result<F2Matrix, ModuleError> {
        let mut acc = F2Matrix::identity(self.dim());
        for &r in word.iter().rev() {
            acc = self.sq_matrix(r)?.mul(&acc);
        }
        Ok(acc)
    }

    /// Matrix of an arbitrary element of the algebra.
    pub fn element_matrix(&self, a: &SteenrodElement) -> Result<F2Matrix, ModuleError> {
        let n = self.dim();
        let mut acc = F2Matrix::zeros(n, n);
        match self.tag {
            AlgebraTag::A => {
                for m in a.terms() {
                    acc = acc.add(&self.word_matrix(m.exponents())?);
                }
            }
            AlgebraTag::A1 => {
                let coords = a1()
                    .coordinates(a)
                    .ok_or_else(|| ModuleError::NotInA1(a.to_string()))?;
                for i in coords.ones() {
                    acc = acc.add(&self.a1_basis_matrix(i));
                }
            }
        }
        Ok(acc)
    }

    /// Matrix of the `i`-th A(1) basis element, via its generator words.
    pub fn a1_basis_matrix(&self, i: usize) -> F2Matrix {
        let n = self.dim();
        let mut acc = F2Matrix::zeros(n, n);
        for w in &a1().basis()[i].words {
            acc = acc.add(&self.word_matrix(w).expect("A(1) words use Sq1 and Sq2"));
        }
        acc
    }

    pub fn act(&self, a: &SteenrodElement, v: &F2Vector) -> Result<F2Vector, ModuleError> {
        Ok(self.element_matrix(a)?.mul_vec(v))
    }

    /// A basis vector by name.
    pub fn vector(&self, name: &str) -> Option<F2Vector> {
        self.index_of(name).map(|i| F2Vector::unit(self.dim(), i))
    }

    /// Human-readable sum of basis names.
    pub fn format_vector(&self, v: &F2Vector) -> String {
        if v.is_zero() {
            return "0".into();
        }
        v.ones().map(|i| self.basis[i].name.as_str()).collect::<Vec<_>>().join(" + ")
    }

    /// Same module with a flipped entry of a generator table: `Sq^k(source)`
    /// gains or loses `target`. Used for mutation testing.
    pub fn with_flipped_action(&self, k: u32, source: usize, target: usize) -> Result<Self, ModuleError> {
        if !self.tag.is_generator(k) {
            return Err(ModuleError::Malformed(format!("Sq{k} is not a generator")));
        }
        let mut actions = self.actions.clone();
        actions
            .entry(k)
            .or_insert_with(|| F2Matrix::zeros(self.dim(), self.dim()))
            .flip(target, source);
        GradedModule::from_parts(self.tag, self.basis.clone(), actions)
    }

    /// Validates the relations of the algebra on every basis element.
    ///
    /// Over A(1) the relations of degree at most 6 generate all others, so
    /// higher degrees are skipped.
    pub fn check_axioms(&self) -> AxiomReport {
        let mut violations = Vec::new();
        let top = match self.tag {
            AlgebraTag::A1 => self.span().min(A1_RELATION_DEGREE),
            AlgebraTag::A => self.span(),
        };
        for n in 2..=top {
            let relations = relations(self.tag, n);
            for rel in relations.iter() {
                let mut acc = F2Matrix::zeros(self.dim(), self.dim());
                for w in &rel.words {
                    acc = acc.add(&self.word_matrix(w).expect("relation words use generators"));
                }
                for j in 0..self.dim() {
                    let image = acc.column(j);
                    if !image.is_zero() {
                        violations.push(AxiomViolation {
                            relation: rel.to_string(),
                            degree: self.basis[j].degree,
                            witness: self.basis[j].name.clone(),
                            image: self.format_vector(&image),
                        });
                    }
                }
            }
        }
        AxiomReport { violations }
    }

    /// The same module regarded over A(1) (keeps `Sq^1`, `Sq^2`).
    pub fn restrict_to_a1(&self) -> GradedModule {
        let actions = self
            .actions
            .iter()
            .filter(|(k, _)| **k <= 2)
            .map(|(k, m)| (*k, m.clone()))
            .collect();
        GradedModule::from_parts(AlgebraTag::A1, self.basis.clone(), actions)
            .expect("restriction keeps valid tables")
    }

    /// Renames basis elements, keeping everything else.
    pub fn renamed(&self, f: impl Fn(&str) -> String) -> Result<GradedModule, ModuleError> {
        let basis: Vec<BasisElement> = self
            .basis
            .iter()
            .map(|b| BasisElement {
                name: f(&b.name),
                degree: b.degree,
            })
            .collect();
        let mut seen = HashSet::new();
        for b in &basis {
            if !seen.insert(b.name.clone()) {
                return Err(ModuleError::Malformed(format!("duplicate basis name '{}'", b.name)));
            }
        }
        GradedModule::from_parts(self.tag, basis, self.actions.clone())
    }
}

impl fmt::Debug for GradedModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "GradedModule over {} (dim {})", self.tag, self.dim())?;
        for (j, b) in self.basis.iter().enumerate() {
            write!(f, "  {} [{}]", b.name, b.degree)?;
            for (k, m) in &self.actions {
                let image = m.column(j);
                if !image.is_zero() {
                    write!(f, "  Sq{k} -> {}", self.format_vector(&image))?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

fn validate_tables(
    tag: AlgebraTag,
    basis: &[BasisElement],
    actions: &BTreeMap<u32, F2Matrix>,
) -> Result<(), ModuleError> {
    let n = basis.len();
    if basis.windows(2).any(|w| w[0].degree > w[1].degree) {
        return Err(ModuleError::Malformed("basis is not sorted by degree".into()));
    }
    for (&k, m) in actions {
        if !tag.is_generator(k) {
            return Err(ModuleError::Malformed(format!("Sq{k} is not a generator of {tag}")));
        }
        if m.rows() != n || m.cols() != n {
            return Err(ModuleError::Malformed(format!(
                "Sq{k} table is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
        for j in 0..n {
            for i in m.column(j).ones() {
                if basis[i].degree != basis[j].degree + k as i32 {
                    return Err(ModuleError::Malformed(format!(
                        "Sq{k}({}) has a term {} in degree {}, expected degree {}",
                        basis[j].name,
                        basis[i].name,
                        basis[i].degree,
                        basis[j].degree + k as i32
                    )));
                }
            }
        }
    }
    Ok(())
}

/// Degree bound for a generating set of the relations of A(1).
const A1_RELATION_DEGREE: u32 = 6;

/// A relation among generator words: the words sum to zero in the algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Relation {
    pub words: Vec<Vec<u32>>,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .words
            .iter()
            .map(|w| w.iter().map(|r| format!("Sq{r}")).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A basis of the relations among generator words in degree `n`.
pub fn relations(tag: AlgebraTag, n: u32) -> Arc<Vec<Relation>> {
    static MEMO: Memo<(AlgebraTag, u32), Vec<Relation>> = OnceLock::new();
    let memo = MEMO.get_or_init(Default::default);
    if let Some(hit) = memo.lock().unwrap().get(&(tag, n)) {
        return hit.clone();
    }
    let gens = tag.generators_up_to(n);
    let mut words = Vec::new();
    compositions(n, &gens, &mut Vec::new(), &mut words);
    let dim = admissible_basis(n).len();
    let cols: Vec<F2Vector> = words.iter().map(|w| adem_reduce(w).coordinates(n)).collect();
    let m = F2Matrix::from_columns(dim, &cols);
    let rels: Vec<Relation> = m
        .kernel_basis()
        .into_iter()
        .map(|v| Relation {
            words: v.ones().map(|i| words[i].clone()).collect(),
        })
        .collect();
    let rels = Arc::new(rels);
    memo.lock().unwrap().insert((tag, n), rels.clone());
    rels
}

fn compositions(n: u32, parts: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if n == 0 {
        out.push(prefix.clone());
        return;
    }
    for &p in parts {
        if p <= n {
            prefix.push(p);
            compositions(n - p, parts, prefix, out);
            prefix.pop();
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomViolation {
    pub relation: String,
    pub degree: i32,
    pub witness: String,
    pub image: String,
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "relation {} = 0 fails on {} (degree {}): gives {}",
            self.relation, self.witness, self.degree, self.image
        )
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct AxiomReport {
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// An equivariant map between modules, given as a target-by-source matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleMap {
    pub source: GradedModule,
    pub target: GradedModule,
    pub matrix: F2Matrix,
    /// Degree shift: basis elements of degree `d` map to degree `d + shift`.
    pub shift: i32,
}

impl ModuleMap {
    pub fn new(source: GradedModule, target: GradedModule, matrix: F2Matrix) -> Self {
        ModuleMap {
            source,
            target,
            matrix,
            shift: 0,
        }
    }

    pub fn identity(m: &GradedModule) -> Self {
        ModuleMap::new(m.clone(), m.clone(), F2Matrix::identity(m.dim()))
    }

    pub fn apply(&self, v: &F2Vector) -> F2Vector {
        self.matrix.mul_vec(v)
    }

    pub fn is_degree_preserving(&self) -> bool {
        (0..self.source.dim()).all(|j| {
            self.matrix
                .column(j)
                .ones()
                .all(|i| self.target.degree_of(i) == self.source.degree_of(j) + self.shift)
        })
    }

    pub fn is_equivariant(&self) -> bool {
        if self.source.tag != self.target.tag {
            return false;
        }
        let span = self.source.span().max(self.target.span());
        self.source.tag.generators_up_to(span).into_iter().all(|k| {
            let (Ok(s), Ok(t)) = (self.source.sq_matrix(k), self.target.sq_matrix(k)) else {
                return false;
            };
            self.matrix.mul(&s) == t.mul(&self.matrix)
        })
    }

    pub fn is_isomorphism(&self) -> bool {
        self.is_degree_preserving() && self.is_equivariant() && self.matrix.is_invertible()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a1_relations_in_low_degrees() {
        let r2: Vec<String> = relations(AlgebraTag::A1, 2).iter().map(|r| r.to_string()).collect();
        assert_eq!(r2, vec!["Sq1 Sq1"]);
        let r4 = relations(AlgebraTag::A1, 4);
        assert!(r4.iter().any(|r| r.to_string().contains("Sq2 Sq2")));
    }

    /// Every word of degree 7 or 8 in the free algebra on `Sq1`, `Sq2` lies in
    /// the two-sided ideal of relations of degree at most 6; by induction
    /// on length so does every longer word, which justifies the bound in
    /// `check_axioms`.
    #[test]
    fn low_relations_generate_a1() {
        let words_of = |n: u32| {
            let mut out = Vec::new();
            compositions(n, &[1, 2], &mut Vec::new(), &mut out);
            out
        };
        for n in 7..=8 {
            let words = words_of(n);
            let index: HashMap<Vec<u32>, usize> =
                words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
            let mut ideal = crate::f2linalg::Span::new(words.len());
            for d in 2..=A1_RELATION_DEGREE.min(n) {
                for rel in relations(AlgebraTag::A1, d).iter() {
                    for a in 0..=n - d {
                        for left in words_of(a) {
                            for right in words_of(n - d - a) {
                                let v = F2Vector::from_indices(
                                    words.len(),
                                    rel.words.iter().map(|w| index[&[left.clone(), w.clone(), right.clone()].concat()]),
                                );
                                ideal.insert(&v);
                            }
                        }
                    }
                }
            }
            assert_eq!(ideal.dim(), words.len(), "degree {n}");
        }
    }

    #[test]
    fn builder_sorts_and_validates() {
        let mut b = ModuleBuilder::new(AlgebraTag::A1);
        let hi = b.add_basis("y", 1);
        let lo = b.add_basis("x", 0);
        b.add_action(1, lo, &[hi]);
        let (m, perm) = b.build_with_permutation().unwrap();
        assert_eq!(perm, vec![1, 0]);
        assert_eq!(m.basis()[0].name, "x");
        assert_eq!(m.sq_matrix(1).unwrap().column(0), F2Vector::unit(2, 1));

        let mut b = ModuleBuilder::new(AlgebraTag::A1);
        let x = b.add_basis("x", 0);
        let y = b.add_basis("y", 2);
        b.add_action(1, x, &[y]);
        assert!(matches!(b.build(), Err(ModuleError::Malformed(_))));

        let mut b = ModuleBuilder::new(AlgebraTag::A1);
        b.add_basis("x", 0);
        b.add_basis("x", 1);
        assert!(matches!(b.build(), Err(ModuleError::Malformed(_))));
    }

    #[test]
    fn zero_module_is_valid() {
        assert!(GradedModule::zero(AlgebraTag::A1).check_axioms().is_ok());
        assert!(GradedModule::zero(AlgebraTag::A).check_axioms().is_ok());
    }

    #[test]
    fn joker_axioms_and_corruption() {
        let j = joker();
        assert!(j.check_axioms().is_ok());
        // Sq1 j1 = j2 makes Sq1 Sq1 j0 nonzero
        let bad = j.with_flipped_action(1, 1, 2).unwrap();
        let report = bad.check_axioms();
        assert!(!report.is_ok());
        assert!(report.violations.iter().any(|v| v.relation == "Sq1 Sq1" && v.witness == "j0"));
    }

    #[test]
    fn a_tag_derived_squares() {
        // F2[x]/(x^4) with deg x = 1 truncated: Sq^k x^n = binom(n, k) x^{n+k}
        let mut b = ModuleBuilder::new(AlgebraTag::A);
        let xs: Vec<usize> = (1..=3).map(|i| b.add_basis(format!("x{i}"), i)).collect();
        b.add_action(1, xs[0], &[xs[1]]);
        b.add_action(1, xs[2], &[]);
        b.add_action(2, xs[0], &[]);
        let m = b.build().unwrap();
        assert!(m.check_axioms().is_ok());
        let sq3 = m.sq_matrix(3).unwrap();
        assert!(sq3.is_zero());
        assert!(m.element_matrix(&SteenrodElement::sq(1)).unwrap().get(1, 0));
    }
}
