//! Packed boolean vectors and row-major boolean matrices.
//!
//! Every kernel in the crate (frontier steps, matrix chains, OMv rounds,
//! certificate checks) works on these two types. Products are the naive
//! cubic algorithm over 64-bit words.

use std::fmt;

const WORD: usize = 64;

#[inline]
fn words_for(len: usize) -> usize {
    len.div_ceil(WORD)
}

/// Fixed-length packed bit vector. Bits past `len` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Bits {
    len: usize,
    words: Vec<u64>,
}

impl Bits {
    pub fn zeros(len: usize) -> Self {
        Bits {
            len,
            words: vec![0; words_for(len)],
        }
    }

    pub fn ones(len: usize) -> Self {
        let mut b = Bits {
            len,
            words: vec![!0; words_for(len)],
        };
        b.clear_tail();
        b
    }

    pub fn indicator(len: usize, index: usize) -> Self {
        let mut b = Bits::zeros(len);
        b.set(index, true);
        b
    }

    pub fn from_bools(bools: &[bool]) -> Self {
        let mut b = Bits::zeros(bools.len());
        for (i, &x) in bools.iter().enumerate() {
            if x {
                b.set(i, true);
            }
        }
        b
    }

    pub fn to_bools(&self) -> Vec<bool> {
        (0..self.len).map(|i| self.get(i)).collect()
    }

    /// Parses a string of `0`/`1` characters.
    pub fn from_bitstring(s: &str) -> Option<Self> {
        let mut b = Bits::zeros(s.len());
        for (i, ch) in s.bytes().enumerate() {
            match ch {
                b'0' => {}
                b'1' => b.set(i, true),
                _ => return None,
            }
        }
        Some(b)
    }

    pub fn to_bitstring(&self) -> String {
        (0..self.len)
            .map(|i| if self.get(i) { '1' } else { '0' })
            .collect()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        self.words[i / WORD] >> (i % WORD) & 1 == 1
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

    pub fn flip(&mut self, i: usize) {
        let v = self.get(i);
        self.set(i, !v);
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    pub fn any(&self) -> bool {
        self.words.iter().any(|&w| w != 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    /// `self |= other`; lengths must agree.
    #[inline]
    pub fn or_assign(&mut self, other: &Bits) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= *b;
        }
    }

    /// True iff `self & other` has a set bit.
    #[inline]
    pub fn intersects(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .any(|(a, b)| a & b != 0)
    }

    /// `self & !other`, returned as a fresh vector.
    pub fn difference(&self, other: &Bits) -> Bits {
        Bits {
            len: self.len,
            words: self
                .words
                .iter()
                .zip(&other.words)
                .map(|(a, b)| a & !b)
                .collect(),
        }
    }

    /// Entry-wise `self <= other`.
    pub fn is_subset(&self, other: &Bits) -> bool {
        self.words
            .iter()
            .zip(&other.words)
            .all(|(a, b)| a & !b == 0)
    }

    /// Indices of set bits in increasing order.
    pub fn ones_iter(&self) -> OnesIter<'_> {
        OnesIter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    /// Copy of `self` placed at `offset` inside a zero vector of length `len`.
    pub fn embed(&self, len: usize, offset: usize) -> Bits {
        assert!(offset + self.len <= len);
        let mut out = Bits::zeros(len);
        for i in self.ones_iter() {
            out.set(offset + i, true);
        }
        out
    }

    /// Bits `offset..offset+len` of `self`.
    pub fn slice(&self, offset: usize, len: usize) -> Bits {
        assert!(offset + len <= self.len);
        let mut out = Bits::zeros(len);
        for i in 0..len {
            if self.get(offset + i) {
                out.set(i, true);
            }
        }
        out
    }

    fn clear_tail(&mut self) {
        let rem = self.len % WORD;
        if rem != 0 {
            if let Some(last) = self.words.last_mut() {
                *last &= (1u64 << rem) - 1;
            }
        }
    }

    #[inline]
    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub(crate) fn words_mut(&mut self) -> &mut [u64] {
        &mut self.words
    }
}

impl fmt::Debug for Bits {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Bits({})", self.to_bitstring())
    }
}

pub struct OnesIter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for OnesIter<'_> {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let tz = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + tz);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

/// Row-major boolean matrix; each row is a packed [`Bits`] of length `cols`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoolMatrix {
    rows: Vec<Bits>,
    cols: usize,
}

impl BoolMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        BoolMatrix {
            rows: vec![Bits::zeros(cols); rows],
            cols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = BoolMatrix::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(rows: Vec<Bits>, cols: usize) -> Self {
        assert!(rows.iter().all(|r| r.len() == cols));
        BoolMatrix { rows, cols }
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.rows[r].get(c)
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        self.rows[r].set(c, v);
    }

    pub fn row(&self, r: usize) -> &Bits {
        &self.rows[r]
    }

    pub fn rows(&self) -> &[Bits] {
        &self.rows
    }

    pub fn count_ones(&self) -> usize {
        self.rows.iter().map(Bits::count_ones).sum()
    }

    pub fn transpose(&self) -> BoolMatrix {
        let mut t = BoolMatrix::zeros(self.cols, self.rows.len());
        for (r, row) in self.rows.iter().enumerate() {
            for c in row.ones_iter() {
                t.set(c, r, true);
            }
        }
        t
    }

    /// Boolean product `self · rhs`: row `i` of the result is the OR of the
    /// rows `k` of `rhs` with `self[i][k] = 1`.
    pub fn mul(&self, rhs: &BoolMatrix) -> BoolMatrix {
        assert_eq!(self.cols, rhs.rows.len(), "inner dimensions differ");
        let mut out = BoolMatrix::zeros(self.rows.len(), rhs.cols);
        for (i, row) in self.rows.iter().enumerate() {
            let dst = out.rows[i].words_mut();
            for k in row.ones_iter() {
                for (d, s) in dst.iter_mut().zip(rhs.rows[k].words()) {
                    *d |= *s;
                }
            }
        }
        out
    }

    /// Boolean matrix-vector product `self · v`.
    pub fn mul_vec(&self, v: &Bits) -> Bits {
        assert_eq!(self.cols, v.len(), "vector length differs from column count");
        let mut out = Bits::zeros(self.rows.len());
        for (i, row) in self.rows.iter().enumerate() {
            if row.intersects(v) {
                out.set(i, true);
            }
        }
        out
    }

    /// Block-diagonal matrix `diag(self, other)`.
    pub fn block_diagonal(&self, other: &BoolMatrix) -> BoolMatrix {
        let rows = self.n_rows() + other.n_rows();
        let cols = self.cols + other.cols;
        let mut out = Vec::with_capacity(rows);
        out.extend(self.rows.iter().map(|r| r.embed(cols, 0)));
        out.extend(other.rows.iter().map(|r| r.embed(cols, self.cols)));
        BoolMatrix::from_rows(out, cols)
    }
}
