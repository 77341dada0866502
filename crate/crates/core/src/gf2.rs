//! Dense linear algebra over the two-element field.
//!
//! Vectors are packed into a single `u64`, so every vector has between 1 and
//! [`MAX_LEN`] coordinates. Coordinate 1 is the leftmost printed bit and the
//! most significant bit of the packed word, so comparing two vectors of the
//! same length compares them as big-endian integers.

use std::fmt;
use std::ops::{Add, AddAssign};

use crate::error::{Error, Result};

/// Largest supported vector length.
pub const MAX_LEN: usize = 64;

/// A vector in `Z2^len`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitVector {
    len: u8,
    // Coordinate with 0-based index `i` lives at bit `len - 1 - i`.
    bits: u64,
}

fn check_len(len: usize) -> Result<()> {
    if len == 0 || len > MAX_LEN {
        return Err(Error::UnsupportedLength(len));
    }
    Ok(())
}

fn mask(len: usize) -> u64 {
    if len == 64 {
        u64::MAX
    } else {
        (1u64 << len) - 1
    }
}

impl BitVector {
    /// The zero vector. Panics if `len` is 0 or exceeds [`MAX_LEN`].
    pub fn zeros(len: usize) -> Self {
        Self::try_zeros(len).expect("invalid BitVector length")
    }

    pub fn try_zeros(len: usize) -> Result<Self> {
        check_len(len)?;
        Ok(Self {
            len: len as u8,
            bits: 0,
        })
    }

    /// The all-ones vector, written ε in the literature on colourings.
    pub fn ones(len: usize) -> Self {
        Self {
            bits: mask(len),
            ..Self::zeros(len)
        }
    }

    /// The unit vector with a single 1 at 0-based `index`.
    pub fn unit(len: usize, index: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(index, true);
        v
    }

    /// Builds a vector from its big-endian packed value.
    pub fn from_raw(len: usize, raw: u64) -> Result<Self> {
        check_len(len)?;
        if raw & !mask(len) != 0 {
            return Err(Error::LengthMismatch {
                expected: len,
                found: 64 - raw.leading_zeros() as usize,
            });
        }
        Ok(Self {
            len: len as u8,
            bits: raw,
        })
    }

    pub fn from_bools(bits: &[bool]) -> Result<Self> {
        let mut v = Self::try_zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            v.set(i, b);
        }
        Ok(v)
    }

    /// Builds a vector from 0/1 entries. Any other entry is rejected.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut v = Self::try_zeros(bits.len())?;
        for (i, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => v.set(i, true),
                other => {
                    return Err(Error::Parse {
                        line: 0,
                        message: format!("entry {other} is not a bit"),
                    })
                }
            }
        }
        Ok(v)
    }

    /// Vector with ones exactly at the given 0-based indices.
    pub fn from_support<I: IntoIterator<Item = usize>>(len: usize, support: I) -> Result<Self> {
        let mut v = Self::try_zeros(len)?;
        for i in support {
            if i >= len {
                return Err(Error::OutOfRange {
                    index: i + 1,
                    max: len,
                });
            }
            v.set(i, true);
        }
        Ok(v)
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    /// Always false; vectors have at least one coordinate.
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn raw(&self) -> u64 {
        self.bits
    }

    #[inline]
    fn shift(&self, index: usize) -> u32 {
        assert!(index < self.len(), "index {index} out of range");
        (self.len() - 1 - index) as u32
    }

    /// Entry at 0-based `index`.
    #[inline]
    pub fn get(&self, index: usize) -> bool {
        (self.bits >> self.shift(index)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, index: usize, value: bool) {
        let bit = 1u64 << self.shift(index);
        if value {
            self.bits |= bit;
        } else {
            self.bits &= !bit;
        }
    }

    /// Number of 1-entries.
    pub fn weight(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn is_ones(&self) -> bool {
        self.bits == mask(self.len())
    }

    /// 0-based indices of the 1-entries, in increasing order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.len()).filter(move |&i| self.get(i))
    }

    /// Standard dot product over Z2.
    pub fn dot(&self, other: &Self) -> bool {
        assert_eq!(
            self.len, other.len,
            "dot product of vectors of different lengths"
        );
        (self.bits & other.bits).count_ones() % 2 == 1
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if self.len != other.len {
            return Err(Error::LengthMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Self {
            len: self.len,
            bits: self.bits ^ other.bits,
        })
    }

    /// Appends one coordinate at the end.
    pub fn push(&self, value: bool) -> Result<Self> {
        check_len(self.len() + 1)?;
        Ok(Self {
            len: self.len + 1,
            bits: (self.bits << 1) | value as u64,
        })
    }

    /// Coordinates as 0/1 bytes.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len()).map(|i| self.get(i) as u8).collect()
    }

    /// Space-separated rendering, as used by the matrix text format.
    pub fn to_spaced_string(&self) -> String {
        let mut out = String::with_capacity(2 * self.len());
        for i in 0..self.len() {
            if i > 0 {
                out.push(' ');
            }
            out.push(if self.get(i) { '1' } else { '0' });
        }
        out
    }
}

impl Add for BitVector {
    type Output = BitVector;

    fn add(self, rhs: BitVector) -> BitVector {
        self.checked_add(&rhs)
            .expect("adding vectors of different lengths")
    }
}

impl AddAssign for BitVector {
    fn add_assign(&mut self, rhs: BitVector) {
        *self = *self + rhs;
    }
}

impl fmt::Display for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.len() {
            f.write_str(if self.get(i) { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitVector({self})")
    }
}

/// Incremental echelon basis used for rank and span computations.
///
/// Each stored vector has a distinct leading bit and no stored vector has a
/// 1 at another's leading bit, so reduction against the basis is a single pass.
#[derive(Clone, Debug, Default)]
struct EchelonBasis {
    rows: Vec<u64>,
}

impl EchelonBasis {
    fn reduce(&self, mut x: u64) -> u64 {
        for &r in &self.rows {
            let lead = 63 - r.leading_zeros();
            if (x >> lead) & 1 == 1 {
                x ^= r;
            }
        }
        x
    }

    /// Inserts `x`; returns false if it was already in the span.
    fn insert(&mut self, x: u64) -> bool {
        let x = self.reduce(x);
        if x == 0 {
            return false;
        }
        let lead = 63 - x.leading_zeros();
        for r in &mut self.rows {
            if (*r >> lead) & 1 == 1 {
                *r ^= x;
            }
        }
        self.rows.push(x);
        self.rows.sort_unstable_by(|a, b| b.cmp(a));
        true
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }
}

/// A `k × m` matrix over Z2 stored by rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    cols: usize,
    rows: Vec<BitVector>,
}

impl BitMatrix {
    /// Builds a matrix from at least one row; all rows must share a length.
    pub fn new(rows: Vec<BitVector>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyMatrix)?;
        let cols = first.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::LengthMismatch {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(Self { cols, rows })
    }

    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        if rows == 0 {
            return Err(Error::EmptyMatrix);
        }
        Self::new(vec![BitVector::try_zeros(cols)?; rows])
    }

    pub fn identity(size: usize) -> Result<Self> {
        check_len(size)?;
        Self::new((0..size).map(|i| BitVector::unit(size, i)).collect())
    }

    /// Builds a `k × m` matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(columns: &[BitVector]) -> Result<Self> {
        let first = columns.first().ok_or(Error::EmptyMatrix)?;
        let k = first.len();
        let m = columns.len();
        let mut rows = vec![BitVector::try_zeros(m)?; k];
        for (j, c) in columns.iter().enumerate() {
            if c.len() != k {
                return Err(Error::LengthMismatch {
                    expected: k,
                    found: c.len(),
                });
            }
            for (i, row) in rows.iter_mut().enumerate() {
                row.set(j, c.get(i));
            }
        }
        Self::new(rows)
    }

    pub fn from_rows_bits(rows: &[&[u8]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| BitVector::from_bits(r))
                .collect::<Result<_>>()?,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    pub fn row(&self, i: usize) -> BitVector {
        self.rows[i]
    }

    /// Column `j` (0-based) as a vector of length `nrows`.
    pub fn column(&self, j: usize) -> BitVector {
        let mut c = BitVector::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            c.set(i, r.get(j));
        }
        c
    }

    pub fn columns(&self) -> Vec<BitVector> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn rank(&self) -> usize {
        rank_of(&self.rows)
    }

    /// Returns a copy with `row` appended at the bottom.
    pub fn with_row(&self, row: BitVector) -> Result<Self> {
        let mut rows = self.rows.clone();
        rows.push(row);
        Self::new(rows)
    }

    /// Matrix product `self · rhs`.
    pub fn mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.nrows() {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: rhs.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|coeffs| combination(coeffs, &rhs.rows))
            .collect();
        BitMatrix::new(rows)
    }

    /// Matrix-vector product `self · x`.
    pub fn apply(&self, x: &BitVector) -> Result<BitVector> {
        if x.len() != self.cols {
            return Err(Error::LengthMismatch {
                expected: self.cols,
                found: x.len(),
            });
        }
        let mut out = BitVector::zeros(self.nrows());
        for (i, r) in self.rows.iter().enumerate() {
            out.set(i, r.dot(x));
        }
        Ok(out)
    }

    /// Nonzero rows of the reduced row echelon form, pivots left to right.
    pub fn reduced_rows(&self) -> Vec<BitVector> {
        let mut basis = EchelonBasis::default();
        for r in &self.rows {
            basis.insert(r.raw());
        }
        basis
            .rows
            .iter()
            .map(|&raw| BitVector::from_raw(self.cols, raw).expect("row fits"))
            .collect()
    }

    /// Enumerates the row space together with coefficient traces.
    pub fn row_space(&self) -> RowSpace {
        RowSpace::of(self)
    }

    /// Parses `k` lines of `m` space-separated bits. Blank lines are skipped.
    /// `first_line` offsets the line numbers reported in errors.
    pub fn parse_lines<'a, I>(lines: I, first_line: usize) -> Result<Self>
    where
        I: IntoIterator<Item = &'a str>,
    {
        let mut rows = Vec::new();
        for (offset, line) in lines.into_iter().enumerate() {
            let line_no = first_line + offset;
            if line.trim().is_empty() {
                continue;
            }
            rows.push(parse_bit_row(line, line_no)?);
        }
        Self::new(rows).map_err(|e| match e {
            Error::LengthMismatch { expected, found } => Error::Parse {
                line: first_line,
                message: format!("rows have {found} and {expected} entries"),
            },
            Error::EmptyMatrix => Error::Parse {
                line: first_line,
                message: "matrix has no rows".into(),
            },
            other => other,
        })
    }
}

/// Parses one line of space-separated bits.
pub fn parse_bit_row(line: &str, line_no: usize) -> Result<BitVector> {
    let bits = line
        .split_whitespace()
        .map(|tok| match tok {
            "0" => Ok(0u8),
            "1" => Ok(1u8),
            other => Err(Error::Parse {
                line: line_no,
                message: format!("`{other}` is not a bit"),
            }),
        })
        .collect::<Result<Vec<_>>>()?;
    BitVector::from_bits(&bits).map_err(|e| Error::Parse {
        line: line_no,
        message: e.to_string(),
    })
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{}", r.to_spaced_string())?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                write!(f, "; ")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, "]")
    }
}

/// `Σ coeffs_i · vectors_i`.
fn combination(coeffs: &BitVector, vectors: &[BitVector]) -> BitVector {
    assert_eq!(coeffs.len(), vectors.len());
    let mut acc = 0u64;
    for (i, v) in vectors.iter().enumerate() {
        if coeffs.get(i) {
            acc ^= v.raw();
        }
    }
    BitVector::from_raw(vectors[0].len(), acc).expect("same length")
}

/// Dimension of the span of `vectors`.
pub fn rank_of(vectors: &[BitVector]) -> usize {
    let mut basis = EchelonBasis::default();
    for v in vectors {
        basis.insert(v.raw());
    }
    basis.rank()
}

/// True iff `v` is a linear combination of `set`. The empty set spans `{0}`.
pub fn in_span(v: &BitVector, set: &[BitVector]) -> Result<bool> {
    let mut basis = EchelonBasis::default();
    for s in set {
        if s.len() != v.len() {
            return Err(Error::LengthMismatch {
                expected: v.len(),
                found: s.len(),
            });
        }
        basis.insert(s.raw());
    }
    Ok(basis.reduce(v.raw()) == 0)
}

/// A row-space element with the coefficients that produce it: `vector = xᵀA`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RowSpaceElement {
    pub vector: BitVector,
    pub coefficients: BitVector,
}

/// The `2^rank` distinct vectors of a row space.
///
/// Elements are listed by increasing coefficient vector; when several
/// coefficient vectors give the same row-space vector only the first is kept.
#[derive(Clone, Debug)]
pub struct RowSpace {
    elements: Vec<RowSpaceElement>,
    sorted: Vec<BitVector>,
}

impl RowSpace {
    fn of(matrix: &BitMatrix) -> Self {
        let k = matrix.nrows();
        assert!(
            k < 32,
            "row space enumeration limited to fewer than 32 rows"
        );
        let mut seen = std::collections::HashSet::new();
        let mut elements = Vec::new();
        for x in 0..(1u64 << k) {
            let coefficients = BitVector::from_raw(k, x).expect("fits");
            let vector = combination(&coefficients, matrix.rows());
            if seen.insert(vector) {
                elements.push(RowSpaceElement {
                    vector,
                    coefficients,
                });
            }
        }
        let mut sorted: Vec<_> = elements.iter().map(|e| e.vector).collect();
        sorted.sort_unstable();
        Self { elements, sorted }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[RowSpaceElement] {
        &self.elements
    }

    /// Vectors in ascending big-endian order.
    pub fn sorted_vectors(&self) -> &[BitVector] {
        &self.sorted
    }

    pub fn vectors(&self) -> impl Iterator<Item = BitVector> + '_ {
        self.elements.iter().map(|e| e.vector)
    }

    pub fn contains(&self, v: &BitVector) -> bool {
        self.sorted.binary_search(v).is_ok()
    }

    pub fn coefficients_of(&self, v: &BitVector) -> Option<BitVector> {
        self.elements
            .iter()
            .find(|e| e.vector == *v)
            .map(|e| e.coefficients)
    }
}

/// A surjective linear map `Z2^k → Z2^(k-1)` with kernel `{0, v0}`, as a
/// `(k-1) × k` matrix.
///
/// With `j` the first coordinate where `v0` is 1, the map sends `x` to
/// `x + x_j v0` and then deletes coordinate `j`. In the basis `{v0} ∪ {e_i :
/// i ≠ j}` this is deletion of the `v0` coordinate.
pub fn projection_along(v0: &BitVector) -> Result<BitMatrix> {
    if v0.is_zero() {
        return Err(Error::ZeroVector);
    }
    let k = v0.len();
    if k == 1 {
        return Err(Error::UnsupportedLength(0));
    }
    let pivot = v0.support().next().expect("nonzero");
    let rows = (0..k)
        .filter(|&i| i != pivot)
        .map(|i| {
            let mut r = BitVector::unit(k, i);
            if v0.get(i) {
                r.set(pivot, true);
            }
            r
        })
        .collect();
    BitMatrix::new(rows)
}
