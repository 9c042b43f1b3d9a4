//! Dense linear algebra over the two-element field.
//!
//! Vectors and matrix rows are packed into `u64` words so that row
//! operations are word-wide XORs. Pivoting is deterministic (leftmost
//! column, then topmost row), which every downstream basis choice relies on.

use std::fmt;

use thiserror::Error;

const WORD_BITS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LinalgError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
}

fn words_for(len: usize) -> usize {
    len.div_ceil(WORD_BITS)
}

/// A vector over F2 of fixed length.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2Vector {
    len: usize,
    words: Vec<u64>,
}

impl F2Vector {
    pub fn zeros(len: usize) -> Self {
        F2Vector {
            len,
            words: vec![0; words_for(len)],
        }
    }

    /// The standard basis vector `e_i`.
    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in indices {
            v.flip(i);
        }
        v
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        (self.words[i / WORD_BITS] >> (i % WORD_BITS)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        let mask = 1u64 << (i % WORD_BITS);
        if value {
            self.words[i / WORD_BITS] |= mask;
        } else {
            self.words[i / WORD_BITS] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "index {i} out of range for length {}", self.len);
        self.words[i / WORD_BITS] ^= 1u64 << (i % WORD_BITS);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// Indices of the nonzero coordinates, in increasing order.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let tz = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * WORD_BITS + tz)
                }
            })
        })
    }

    pub fn first_one(&self) -> Option<usize> {
        self.ones().next()
    }

    /// `self += other`; both must have the same length.
    pub fn add_assign(&mut self, other: &F2Vector) {
        assert_eq!(self.len, other.len, "vector length mismatch");
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= *b;
        }
    }

    pub fn add(&self, other: &F2Vector) -> F2Vector {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn dot(&self, other: &F2Vector) -> bool {
        assert_eq!(self.len, other.len, "vector length mismatch");
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones())
            .sum::<u32>()
            % 2
            == 1
    }

    /// Coordinates `range` as a new vector.
    pub fn slice(&self, start: usize, end: usize) -> F2Vector {
        F2Vector::from_indices(end - start, self.ones().filter(|&i| i >= start && i < end).map(|i| i - start))
    }

    /// Concatenation `(self, other)`.
    pub fn concat(&self, other: &F2Vector) -> F2Vector {
        let n = self.len;
        F2Vector::from_indices(n + other.len, self.ones().chain(other.ones().map(|i| i + n)))
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.get(i) as u8).collect()
    }
}

impl fmt::Debug for F2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", self.get(i) as u8)?;
        }
        write!(f, "]")
    }
}

/// A dense matrix over F2 stored as packed rows.
///
/// Matrices act on column vectors: `m.mul_vec(v)` has length `m.rows()`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct F2Matrix {
    cols: usize,
    data: Vec<F2Vector>,
}

impl F2Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        F2Matrix {
            cols,
            data: vec![F2Vector::zeros(cols); rows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: Vec<F2Vector>) -> Result<Self, LinalgError> {
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(LinalgError::DimensionMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(F2Matrix { cols, data: rows })
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[F2Vector]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), rows, "column length mismatch");
            for i in c.ones() {
                m.set(i, j, true);
            }
        }
        m
    }

    /// Convenience constructor from nested 0/1 literals.
    pub fn from_dense(rows: &[&[u8]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let data = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged matrix literal");
                F2Vector::from_bits(r)
            })
            .collect();
        F2Matrix { cols, data }
    }

    pub fn rows(&self) -> usize {
        self.data.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.data[i].get(j)
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.data[i].set(j, value)
    }

    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i].flip(j)
    }

    pub fn row(&self, i: usize) -> &F2Vector {
        &self.data[i]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &F2Vector> {
        self.data.iter()
    }

    pub fn column(&self, j: usize) -> F2Vector {
        F2Vector::from_indices(
            self.rows(),
            self.data.iter().enumerate().filter(|(_, r)| r.get(j)).map(|(i, _)| i),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(F2Vector::is_zero)
    }

    pub fn mul_vec(&self, v: &F2Vector) -> F2Vector {
        assert_eq!(v.len(), self.cols, "matrix-vector dimension mismatch");
        F2Vector::from_indices(
            self.rows(),
            self.data.iter().enumerate().filter(|(_, r)| r.dot(v)).map(|(i, _)| i),
        )
    }

    pub fn mul(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.rows(), "matrix product dimension mismatch");
        let data = self
            .data
            .iter()
            .map(|r| {
                let mut out = F2Vector::zeros(other.cols);
                for k in r.ones() {
                    out.add_assign(&other.data[k]);
                }
                out
            })
            .collect();
        F2Matrix {
            cols: other.cols,
            data,
        }
    }

    pub fn add(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!((self.rows(), self.cols), (other.rows(), other.cols));
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        F2Matrix {
            cols: self.cols,
            data,
        }
    }

    pub fn transpose(&self) -> F2Matrix {
        let mut t = F2Matrix::zeros(self.cols, self.rows());
        for (i, r) in self.data.iter().enumerate() {
            for j in r.ones() {
                t.set(j, i, true);
            }
        }
        t
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (F2Matrix, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut next = 0;
        for c in 0..self.cols {
            if next == self.rows() {
                break;
            }
            let Some(p) = (next..self.rows()).find(|&r| self.data[r].get(c)) else {
                continue;
            };
            self.data.swap(next, p);
            let pivot_row = self.data[next].clone();
            for (r, row) in self.data.iter_mut().enumerate() {
                if r != next && row.get(c) {
                    row.add_assign(&pivot_row);
                }
            }
            pivots.push(c);
            next += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// A basis of the null space, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<F2Vector> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&f| !is_pivot[f])
            .map(|f| {
                let mut v = F2Vector::unit(self.cols, f);
                for (i, &p) in pivots.iter().enumerate() {
                    if r.data[i].get(f) {
                        v.set(p, true);
                    }
                }
                v
            })
            .collect()
    }

    /// Some `x` with `self * x = b`, or `None` when the system is inconsistent.
    pub fn solve(&self, b: &F2Vector) -> Result<Option<F2Vector>, LinalgError> {
        if b.len() != self.rows() {
            return Err(LinalgError::DimensionMismatch {
                expected: self.rows(),
                found: b.len(),
            });
        }
        let mut aug = F2Matrix {
            cols: self.cols + 1,
            data: self
                .data
                .iter()
                .enumerate()
                .map(|(i, r)| {
                    let mut row = r.concat(&F2Vector::zeros(1));
                    row.set(self.cols, b.get(i));
                    row
                })
                .collect(),
        };
        let pivots = aug.rref_in_place();
        if pivots.last() == Some(&self.cols) {
            return Ok(None);
        }
        let mut x = F2Vector::zeros(self.cols);
        for (i, &p) in pivots.iter().enumerate() {
            if aug.data[i].get(self.cols) {
                x.set(p, true);
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Option<F2Matrix> {
        let n = self.rows();
        if n != self.cols {
            return None;
        }
        let mut aug = F2Matrix {
            cols: 2 * n,
            data: self
                .data
                .iter()
                .enumerate()
                .map(|(i, r)| r.concat(&F2Vector::unit(n, i)))
                .collect(),
        };
        let pivots = aug.rref_in_place();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(F2Matrix {
            cols: n,
            data: aug.data.iter().map(|r| r.slice(n, 2 * n)).collect(),
        })
    }

    pub fn is_invertible(&self) -> bool {
        self.rows() == self.cols && self.rank() == self.cols
    }

    /// Stacks `other` below `self`.
    pub fn vstack(&self, other: &F2Matrix) -> F2Matrix {
        assert_eq!(self.cols, other.cols);
        let mut data = self.data.clone();
        data.extend(other.data.iter().cloned());
        F2Matrix {
            cols: self.cols,
            data,
        }
    }

    pub fn push_row(&mut self, row: F2Vector) {
        assert_eq!(row.len(), self.cols);
        self.data.push(row);
    }
}

impl fmt::Debug for F2Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "F2Matrix {}x{}", self.rows(), self.cols)?;
        for r in &self.data {
            writeln!(f, "  {r:?}")?;
        }
        Ok(())
    }
}

/// An incrementally built subspace kept in echelon form.
///
/// Used wherever vectors arrive one at a time and we need to know whether
/// each is new (resolution generators, closure computations).
#[derive(Clone, Debug)]
pub struct Span {
    len: usize,
    rows: Vec<(usize, F2Vector)>,
}

impl Span {
    pub fn new(len: usize) -> Self {
        Span { len, rows: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.len
    }

    /// Reduces `v` against the current echelon rows.
    pub fn reduce(&self, v: &F2Vector) -> F2Vector {
        let mut v = v.clone();
        for (p, r) in &self.rows {
            if v.get(*p) {
                v.add_assign(r);
            }
        }
        v
    }

    pub fn contains(&self, v: &F2Vector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Adds `v`; returns `true` if it enlarged the span.
    pub fn insert(&mut self, v: &F2Vector) -> bool {
        assert_eq!(v.len(), self.len);
        let r = self.reduce(v);
        match r.first_one() {
            None => false,
            Some(p) => {
                for (_, row) in self.rows.iter_mut() {
                    if row.get(p) {
                        row.add_assign(&r);
                    }
                }
                self.rows.push((p, r));
                true
            }
        }
    }

    pub fn basis(&self) -> impl Iterator<Item = &F2Vector> {
        self.rows.iter().map(|(_, r)| r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn rref_identity_and_zero() {
        let (r, p) = F2Matrix::identity(3).rref();
        assert_eq!(r, F2Matrix::identity(3));
        assert_eq!(p, vec![0, 1, 2]);
        let (r, p) = F2Matrix::zeros(2, 3).rref();
        assert!(r.is_zero());
        assert!(p.is_empty());
    }

    #[test]
    fn rref_repeated_row() {
        let m = F2Matrix::from_dense(&[&[1, 1], &[1, 1]]);
        let (r, p) = m.rref();
        assert_eq!(r, F2Matrix::from_dense(&[&[1, 1], &[0, 0]]));
        assert_eq!(p, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert!(F2Matrix::identity(4).kernel_basis().is_empty());
        assert_eq!(F2Matrix::zeros(2, 3).kernel_basis().len(), 3);
        let k = F2Matrix::from_dense(&[&[1, 1, 0], &[0, 1, 1]]).kernel_basis();
        assert_eq!(k, vec![F2Vector::from_bits(&[1, 1, 1])]);
    }

    #[test]
    fn solve_examples() {
        let b = F2Vector::from_bits(&[1, 0, 1]);
        assert_eq!(F2Matrix::identity(3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(F2Matrix::zeros(3, 3).solve(&b).unwrap(), None);
        let m = F2Matrix::from_dense(&[&[1, 1], &[0, 1]]);
        let x = m.solve(&F2Vector::from_bits(&[0, 1])).unwrap();
        assert_eq!(x, Some(F2Vector::from_bits(&[1, 1])));
        assert!(matches!(
            m.solve(&F2Vector::zeros(3)),
            Err(LinalgError::DimensionMismatch { expected: 2, found: 3 })
        ));
    }

    #[test]
    fn inverse_round_trip() {
        let m = F2Matrix::from_dense(&[&[1, 1, 0], &[0, 1, 1], &[0, 0, 1]]);
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv), F2Matrix::identity(3));
        assert!(F2Matrix::from_dense(&[&[1, 1], &[1, 1]]).inverse().is_none());
    }

    #[test]
    fn wide_vectors_cross_word_boundaries() {
        let mut v = F2Vector::zeros(130);
        v.set(0, true);
        v.set(64, true);
        v.set(129, true);
        assert_eq!(v.ones().collect::<Vec<_>>(), vec![0, 64, 129]);
        assert_eq!(v.count_ones(), 3);
        assert_eq!(v.slice(60, 130).ones().collect::<Vec<_>>(), vec![4, 69]);
    }

    #[test]
    fn span_tracks_membership() {
        let mut s = Span::new(3);
        assert!(s.insert(&F2Vector::from_bits(&[1, 1, 0])));
        assert!(s.insert(&F2Vector::from_bits(&[0, 1, 1])));
        assert!(!s.insert(&F2Vector::from_bits(&[1, 0, 1])));
        assert!(s.contains(&F2Vector::from_bits(&[1, 0, 1])));
        assert!(!s.contains(&F2Vector::from_bits(&[1, 0, 0])));
        assert_eq!(s.dim(), 2);
    }

    fn arb_matrix() -> impl Strategy<Value = F2Matrix> {
        (1usize..=64, 1usize..=64).prop_flat_map(|(r, c)| {
            proptest::collection::vec(proptest::collection::vec(0u8..2, c), r).prop_map(move |rows| {
                let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
                F2Matrix::from_dense(&refs)
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_nullity(m in arb_matrix()) {
            let kernel = m.kernel_basis();
            prop_assert_eq!(m.rank() + kernel.len(), m.cols());
            for v in &kernel {
                prop_assert!(m.mul_vec(v).is_zero());
            }
            let km = F2Matrix::from_rows(m.cols(), kernel.clone()).unwrap();
            prop_assert_eq!(km.rank(), kernel.len());
        }

        #[test]
        fn rref_is_idempotent_with_increasing_pivots(m in arb_matrix()) {
            let (r, p) = m.rref();
            let (rr, pp) = r.rref();
            prop_assert_eq!(&r, &rr);
            prop_assert_eq!(&p, &pp);
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
            let nonzero: Vec<F2Vector> = r.row_iter().filter(|v| !v.is_zero()).cloned().collect();
            prop_assert_eq!(F2Matrix::from_rows(m.cols(), nonzero.clone()).unwrap().rank(), nonzero.len());
            // row space preserved
            prop_assert_eq!(m.vstack(&r).rank(), m.rank());
        }

        #[test]
        fn solve_reproduces_rhs(m in arb_matrix(), seed in any::<u64>()) {
            let b = F2Vector::from_indices(m.rows(), (0..m.rows()).filter(|i| (seed >> (i % 64)) & 1 == 1));
            if let Some(x) = m.solve(&b).unwrap() {
                prop_assert_eq!(m.mul_vec(&x), b);
            }
        }
    }
}
