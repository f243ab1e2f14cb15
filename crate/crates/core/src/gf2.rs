//! Dense linear algebra over GF(2) on bit-packed rows.
//!
//! Matrices are stored one row per source basis vector: row `i` is the image
//! of source vector `i` written in the target basis. Composition "first `a`,
//! then `b`" is therefore the product `a.compose(&b)`.

use std::fmt;

use crate::error::{Error, Result};

const WORD: usize = 64;

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(WORD)
}

/// A fixed-length bit vector, i.e. a vector in GF(2)^len.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitRow {
    words: Vec<u64>,
    len: usize,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; words_for(len)], len }
    }

    pub fn from_indices(len: usize, ones: &[usize]) -> Self {
        let mut row = BitRow::zeros(len);
        for &i in ones {
            row.flip(i);
        }
        row
    }

    pub fn from_bits(bits: &[u8]) -> Self {
        let mut row = BitRow::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b & 1 == 1 {
                row.set(i, true);
            }
        }
        row
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i / WORD] >> (i % WORD)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        let mask = 1u64 << (i % WORD);
        if value {
            self.words[i / WORD] |= mask;
        } else {
            self.words[i / WORD] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        assert!(i < self.len, "bit {i} out of range {}", self.len);
        self.words[i / WORD] ^= 1u64 << (i % WORD);
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self ^= other`. Lengths must agree.
    pub fn xor_assign(&mut self, other: &BitRow) {
        assert_eq!(self.len, other.len, "xor of rows with different lengths");
        self.xor_from_word(other, 0);
    }

    #[inline]
    fn xor_from_word(&mut self, other: &BitRow, start: usize) {
        for (a, b) in self.words[start..].iter_mut().zip(&other.words[start..]) {
            *a ^= *b;
        }
    }

    pub fn lowest_one(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * WORD + w.trailing_zeros() as usize)
    }

    /// Indices of the set bits, ascending.
    pub fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * WORD + b)
            })
        })
    }

    /// Bits `[start, start + len)` as a new row. `start` must be word aligned.
    fn slice_aligned(&self, start: usize, len: usize) -> BitRow {
        debug_assert_eq!(start % WORD, 0);
        let w0 = start / WORD;
        let mut out = BitRow {
            words: self.words[w0..w0 + words_for(len)].to_vec(),
            len,
        };
        out.clear_tail();
        out
    }

    fn clear_tail(&mut self) {
        let r = self.len % WORD;
        if r != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << r) - 1;
            }
        }
    }
}

impl fmt::Debug for BitRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.len {
            write!(f, "{}", u8::from(self.get(i)))?;
        }
        write!(f, "]")
    }
}

/// A matrix over GF(2) with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GF2Matrix {
    n_rows: usize,
    n_cols: usize,
    rows: Vec<BitRow>,
}

/// Result of row reduction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    /// Reduced row-echelon form; the first `rank` rows are nonzero.
    pub echelon: GF2Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl GF2Matrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Self {
        GF2Matrix { n_rows, n_cols, rows: vec![BitRow::zeros(n_cols); n_rows] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = GF2Matrix::zeros(n, n);
        for i in 0..n {
            m.rows[i].set(i, true);
        }
        m
    }

    /// Builds a matrix from explicit rows, all of which must have length `n_cols`.
    pub fn from_rows(n_cols: usize, rows: Vec<BitRow>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch { left: bad.len(), right: n_cols });
        }
        Ok(GF2Matrix { n_rows: rows.len(), n_cols, rows })
    }

    /// Convenience constructor from 0/1 entries. Panics on ragged input.
    pub fn from_dense(entries: &[Vec<u8>]) -> Self {
        let n_cols = entries.first().map_or(0, Vec::len);
        let rows = entries
            .iter()
            .map(|r| {
                assert_eq!(r.len(), n_cols, "ragged matrix");
                BitRow::from_bits(r)
            })
            .collect();
        GF2Matrix { n_rows: entries.len(), n_cols, rows }
    }

    pub fn n_rows(&self) -> usize {
        self.n_rows
    }

    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    pub fn rows(&self) -> &[BitRow] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &BitRow {
        &self.rows[i]
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        self.rows[r].set(c, value);
    }

    pub fn flip(&mut self, r: usize, c: usize) {
        self.rows[r].flip(c);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BitRow::is_zero)
    }

    /// The map "first `self`, then `next`".
    pub fn compose(&self, next: &GF2Matrix) -> Result<GF2Matrix> {
        if self.n_cols != next.n_rows {
            return Err(Error::DimensionMismatch { left: self.n_cols, right: next.n_rows });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                let mut out = BitRow::zeros(next.n_cols);
                for j in r.ones() {
                    out.xor_assign(&next.rows[j]);
                }
                out
            })
            .collect();
        Ok(GF2Matrix { n_rows: self.n_rows, n_cols: next.n_cols, rows })
    }

    pub fn add(&self, other: &GF2Matrix) -> Result<GF2Matrix> {
        if self.n_rows != other.n_rows || self.n_cols != other.n_cols {
            return Err(Error::DimensionMismatch {
                left: self.n_rows * self.n_cols,
                right: other.n_rows * other.n_cols,
            });
        }
        let mut out = self.clone();
        for (a, b) in out.rows.iter_mut().zip(&other.rows) {
            a.xor_assign(b);
        }
        Ok(out)
    }

    pub fn rref(&self) -> Rref {
        let space = Subspace::from_vectors(self.n_cols, self.rows.iter().cloned())
            .expect("rows have matrix width");
        let rank = space.dim();
        let pivots = space.pivots.clone();
        let mut rows = space.basis;
        rows.resize(self.n_rows, BitRow::zeros(self.n_cols));
        Rref { echelon: GF2Matrix { n_rows: self.n_rows, n_cols: self.n_cols, rows }, rank, pivots }
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.n_cols);
        for r in &self.rows {
            ech.insert(r.clone());
        }
        ech.rows.len()
    }

    /// Row space, as a subspace of the target.
    pub fn image_basis(&self) -> Subspace {
        Subspace::from_vectors(self.n_cols, self.rows.iter().cloned()).expect("rows have matrix width")
    }

    /// `{v : v * self = 0}`, as a subspace of the source.
    pub fn kernel_basis(&self) -> Subspace {
        // Reduce [M | I]; rows whose M-part vanishes carry kernel vectors in the I-part.
        let offset = words_for(self.n_cols) * WORD;
        let width = offset + self.n_rows;
        let mut ech = Echelon::new(width);
        let mut kernel = Vec::new();
        for (i, r) in self.rows.iter().enumerate() {
            let mut aug = BitRow::zeros(width);
            aug.words[..r.words.len()].copy_from_slice(&r.words);
            aug.set(offset + i, true);
            match ech.reduce(&mut aug, self.n_cols) {
                Some(pivot) => ech.push(aug, pivot),
                None => kernel.push(aug.slice_aligned(offset, self.n_rows)),
            }
        }
        Subspace::from_vectors(self.n_rows, kernel).expect("kernel vectors have source width")
    }
}

const NO_PIVOT: u32 = u32::MAX;

/// Row echelon form built by incremental insertion. Each stored row has its
/// lowest set bit at its pivot column and no earlier pivot columns set.
struct Echelon {
    rows: Vec<BitRow>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    fn new(width: usize) -> Self {
        Echelon { rows: Vec::new(), pivot_row: vec![NO_PIVOT; width] }
    }

    /// Clears pivot columns below `limit` from `v`, stopping at the first set
    /// bit below `limit` that is not a pivot column (returned).
    fn reduce(&self, v: &mut BitRow, limit: usize) -> Option<usize> {
        let last_word = words_for(limit.min(v.len));
        for wi in 0..last_word {
            loop {
                let w = v.words[wi];
                if w == 0 {
                    break;
                }
                let col = wi * WORD + w.trailing_zeros() as usize;
                if col >= limit {
                    return None;
                }
                let p = self.pivot_row[col];
                if p == NO_PIVOT {
                    return Some(col);
                }
                v.xor_from_word(&self.rows[p as usize], wi);
            }
        }
        None
    }

    fn push(&mut self, v: BitRow, pivot: usize) {
        self.pivot_row[pivot] = self.rows.len() as u32;
        self.rows.push(v);
    }

    fn insert(&mut self, mut v: BitRow) -> bool {
        let limit = v.len;
        match self.reduce(&mut v, limit) {
            Some(p) => {
                self.push(v, p);
                true
            }
            None => false,
        }
    }

    /// Consumes the builder, returning the reduced echelon basis sorted by pivot.
    fn into_reduced(self) -> (Vec<BitRow>, Vec<usize>) {
        let mut pairs: Vec<(usize, BitRow)> =
            self.rows.into_iter().map(|r| (r.lowest_one().expect("nonzero row"), r)).collect();
        pairs.sort_by_key(|(p, _)| *p);
        let (pivots, mut rows): (Vec<usize>, Vec<BitRow>) = pairs.into_iter().unzip();
        for i in (0..rows.len()).rev() {
            let (head, tail) = rows.split_at_mut(i);
            let pivot_row = &tail[0];
            let p = pivots[i];
            for r in head.iter_mut() {
                if r.get(p) {
                    r.xor_from_word(pivot_row, p / WORD);
                }
            }
        }
        (rows, pivots)
    }
}

/// A subspace of GF(2)^ambient_dim held as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<BitRow>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace { ambient_dim, basis: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient_dim: usize) -> Self {
        let basis = (0..ambient_dim).map(|i| BitRow::from_indices(ambient_dim, &[i])).collect();
        Subspace { ambient_dim, basis, pivots: (0..ambient_dim).collect() }
    }

    /// The span of the given vectors.
    pub fn from_vectors<I>(ambient_dim: usize, vectors: I) -> Result<Self>
    where
        I: IntoIterator<Item = BitRow>,
    {
        let mut ech = Echelon::new(ambient_dim);
        for v in vectors {
            if v.len() != ambient_dim {
                return Err(Error::DimensionMismatch { left: v.len(), right: ambient_dim });
            }
            ech.insert(v);
        }
        let (basis, pivots) = ech.into_reduced();
        Ok(Subspace { ambient_dim, basis, pivots })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[BitRow] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Reduces `v` modulo this subspace; the result vanishes on every pivot column.
    pub fn reduce(&self, v: &BitRow) -> BitRow {
        let mut out = v.clone();
        for (b, &p) in self.basis.iter().zip(&self.pivots) {
            if out.get(p) {
                out.xor_from_word(b, p / WORD);
            }
        }
        out
    }

    pub fn contains_vector(&self, v: &BitRow) -> bool {
        v.len() == self.ambient_dim && self.reduce(v).is_zero()
    }

    pub fn contains(&self, inner: &Subspace) -> bool {
        self.ambient_dim == inner.ambient_dim && inner.basis.iter().all(|v| self.contains_vector(v))
    }

    /// Like [`Subspace::contains`], but reports a witness on failure.
    pub fn check_contains(&self, inner: &Subspace) -> Result<()> {
        if self.ambient_dim != inner.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: inner.ambient_dim });
        }
        match inner.basis.iter().find(|v| !self.contains_vector(v)) {
            Some(w) => Err(Error::ContainmentViolation { witness: w.ones().collect() }),
            None => Ok(()),
        }
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if self.ambient_dim != other.ambient_dim {
            return Err(Error::DimensionMismatch { left: self.ambient_dim, right: other.ambient_dim });
        }
        Subspace::from_vectors(self.ambient_dim, self.basis.iter().chain(&other.basis).cloned())
    }

    /// Representatives of a basis of `self / sub`.
    ///
    /// Each basis vector of `self` is reduced against `sub`, and the survivors
    /// are brought to reduced echelon form. The result is the echelon basis of
    /// the unique complement of `sub` in `self` that vanishes on `sub`'s pivot
    /// columns, ordered by pivot.
    pub fn coset_reps(&self, sub: &Subspace) -> Result<Vec<BitRow>> {
        self.check_contains(sub)?;
        let reduced = self.basis.iter().map(|v| sub.reduce(v));
        Ok(Subspace::from_vectors(self.ambient_dim, reduced)?.basis)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn span(dim: usize, vs: &[&[usize]]) -> Subspace {
        Subspace::from_vectors(dim, vs.iter().map(|v| BitRow::from_indices(dim, v))).unwrap()
    }

    #[test]
    fn rref_examples() {
        let r = GF2Matrix::from_dense(&[vec![1, 0], vec![1, 0]]).rref();
        assert_eq!((r.rank, r.pivots.clone()), (1, vec![0]));
        assert!(r.echelon.row(1).is_zero());

        let r = GF2Matrix::identity(3).rref();
        assert_eq!((r.rank, r.pivots), (3, vec![0, 1, 2]));

        let r = GF2Matrix::zeros(4, 5).rref();
        assert_eq!((r.rank, r.pivots.len()), (0, 0));
    }

    #[test]
    fn rref_is_reduced() {
        let m = GF2Matrix::from_dense(&[
            vec![1, 1, 0, 1],
            vec![0, 1, 1, 0],
            vec![1, 0, 1, 1],
            vec![0, 0, 1, 1],
        ]);
        let r = m.rref();
        assert_eq!(r.rank, 3);
        for (i, &p) in r.pivots.iter().enumerate() {
            for j in 0..r.rank {
                assert_eq!(r.echelon.get(j, p), i == j);
            }
        }
        assert_eq!(r.echelon.rref().echelon, r.echelon);
    }

    #[test]
    fn kernel_examples() {
        let k = GF2Matrix::from_dense(&[vec![0]]).kernel_basis();
        assert_eq!(k.dim(), 1);
        assert_eq!(GF2Matrix::identity(2).kernel_basis().dim(), 0);
        let k = GF2Matrix::from_dense(&[vec![1, 1], vec![1, 1]]).kernel_basis();
        assert_eq!(k.basis(), &[BitRow::from_bits(&[1, 1])]);
    }

    #[test]
    fn kernel_over_word_boundary() {
        // 70 x 3 matrix: rows cycle through e0, e1, e0+e1.
        let rows: Vec<Vec<u8>> = (0..70)
            .map(|i| match i % 3 {
                0 => vec![1, 0, 0],
                1 => vec![0, 1, 0],
                _ => vec![1, 1, 0],
            })
            .collect();
        let m = GF2Matrix::from_dense(&rows);
        let k = m.kernel_basis();
        assert_eq!(k.dim(), 68);
        for v in k.basis() {
            let prod = GF2Matrix::from_rows(70, vec![v.clone()]).unwrap().compose(&m).unwrap();
            assert!(prod.is_zero());
        }
    }

    #[test]
    fn image_examples() {
        assert_eq!(GF2Matrix::zeros(3, 4).image_basis().dim(), 0);
        assert_eq!(GF2Matrix::identity(5).image_basis(), Subspace::full(5));
    }

    #[test]
    fn sum_examples() {
        let a = span(3, &[&[0]]);
        let b = span(3, &[&[1]]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);
        assert_eq!(a.sum(&a).unwrap(), a);
        let c = span(3, &[&[0, 1]]);
        assert_eq!(c.sum(&b).unwrap(), span(3, &[&[0], &[1]]));
        assert!(matches!(a.sum(&Subspace::zero(4)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn containment_and_cosets() {
        let a = span(4, &[&[0, 2], &[1]]);
        assert!(Subspace::full(4).contains(&a));
        assert!(a.coset_reps(&a).unwrap().is_empty());
        let sub = span(4, &[&[0, 1, 2]]);
        let reps = a.coset_reps(&sub).unwrap();
        assert_eq!(reps.len(), 1);
        assert!(a.contains_vector(&reps[0]));
        assert!(!sub.contains_vector(&reps[0]));

        let outside = span(4, &[&[3]]);
        match a.coset_reps(&outside) {
            Err(Error::ContainmentViolation { witness }) => assert_eq!(witness, vec![3]),
            other => panic!("expected violation, got {other:?}"),
        }
    }

    #[test]
    fn compose_order() {
        // a: e0 -> f1, b: f1 -> g0
        let a = GF2Matrix::from_dense(&[vec![0, 1]]);
        let b = GF2Matrix::from_dense(&[vec![0], vec![1]]);
        assert_eq!(a.compose(&b).unwrap(), GF2Matrix::from_dense(&[vec![1]]));
        assert!(b.compose(&b).is_err());
    }
}
