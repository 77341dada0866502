//! Abstract simplicial complexes given by their maximal faces, and reduced
//! rational homology.
//!
//! Vertices are positive integer labels up to 64. A face is stored as a
//! bitmask with label `l` at bit `l - 1`.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// Largest supported vertex label.
pub const MAX_VERTEX: usize = 64;

type Face = u64;

fn face_to_labels(face: Face) -> Vec<usize> {
    (0..64)
        .filter(|b| (face >> b) & 1 == 1)
        .map(|b| b + 1)
        .collect()
}

/// A finite abstract simplicial complex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    vertices: Face,
    // sorted, no face contained in another, no empty face
    maximal: Vec<Face>,
}

impl SimplicialComplex {
    /// The complex with no vertices.
    pub fn empty() -> Self {
        Self {
            vertices: 0,
            maximal: Vec::new(),
        }
    }

    /// Builds a complex from its maximal faces.
    ///
    /// Fails if a label is out of range, a face is empty or repeats a vertex,
    /// or one listed face contains another.
    pub fn new<F, I>(maximal_faces: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: AsRef<[usize]>,
    {
        let mut faces = Vec::new();
        for f in maximal_faces {
            faces.push(labels_to_face(f.as_ref())?);
        }
        for (i, &a) in faces.iter().enumerate() {
            for (j, &b) in faces.iter().enumerate() {
                if i != j && a & b == a {
                    return Err(Error::InvalidComplex(format!(
                        "face {:?} is contained in face {:?}",
                        face_to_labels(a),
                        face_to_labels(b)
                    )));
                }
            }
        }
        faces.sort_unstable();
        Ok(Self {
            vertices: faces.iter().fold(0, |acc, f| acc | f),
            maximal: faces,
        })
    }

    /// Builds a complex generated by arbitrary faces, keeping only the maximal ones.
    fn generated_by(faces: impl IntoIterator<Item = Face>) -> Self {
        let mut faces: Vec<Face> = faces.into_iter().filter(|&f| f != 0).collect();
        // larger faces first so containment only needs checking against kept faces
        faces.sort_unstable_by_key(|f| std::cmp::Reverse(f.count_ones()));
        faces.dedup();
        let mut kept: Vec<Face> = Vec::with_capacity(faces.len());
        for f in faces {
            if !kept.iter().any(|&g| f & g == f) {
                kept.push(f);
            }
        }
        kept.sort_unstable();
        Self {
            vertices: kept.iter().fold(0, |acc, f| acc | f),
            maximal: kept,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.vertices == 0
    }

    /// Sorted vertex labels.
    pub fn vertices(&self) -> Vec<usize> {
        face_to_labels(self.vertices)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.count_ones() as usize
    }

    /// Largest vertex label, 0 for the empty complex.
    pub fn max_label(&self) -> usize {
        64 - self.vertices.leading_zeros() as usize
    }

    /// Maximal faces as sorted label lists, in lexicographic order.
    pub fn maximal_faces(&self) -> Vec<Vec<usize>> {
        let mut faces: Vec<Vec<usize>> = self.maximal.iter().map(|&f| face_to_labels(f)).collect();
        faces.sort();
        faces
    }

    pub fn maximal_face_count(&self) -> usize {
        self.maximal.len()
    }

    /// Maximal faces as bitmasks, label `l` at bit `l - 1`.
    pub(crate) fn maximal_face_masks(&self) -> &[u64] {
        &self.maximal
    }

    /// Dimension; -1 for the empty complex.
    pub fn dimension(&self) -> isize {
        self.maximal
            .iter()
            .map(|f| f.count_ones() as isize - 1)
            .max()
            .unwrap_or(-1)
    }

    /// True if every maximal face has the same dimension.
    pub fn is_pure(&self) -> bool {
        let d = self.dimension();
        self.maximal
            .iter()
            .all(|f| f.count_ones() as isize - 1 == d)
    }

    pub fn contains_face(&self, labels: &[usize]) -> bool {
        match labels_to_face(labels) {
            Ok(face) => self.maximal.iter().any(|&g| face & g == face),
            Err(_) => false,
        }
    }

    /// Neighbours of a vertex in the 1-skeleton.
    pub fn neighbours(&self, label: usize) -> Vec<usize> {
        face_to_labels(self.neighbour_mask(label))
    }

    pub(crate) fn neighbour_mask(&self, label: usize) -> u64 {
        let bit = 1u64 << (label - 1);
        self.maximal
            .iter()
            .filter(|&&f| f & bit != 0)
            .fold(0, |acc, f| acc | f)
            & !bit
    }

    /// All faces of dimension `dim` (`dim + 1` vertices), sorted.
    pub fn faces(&self, dim: usize) -> Vec<Vec<usize>> {
        self.face_masks(dim + 1)
            .into_iter()
            .map(face_to_labels)
            .collect()
    }

    fn face_masks(&self, size: usize) -> Vec<Face> {
        let mut out = BTreeSet::new();
        for &f in &self.maximal {
            if f.count_ones() as usize >= size {
                subsets_of_size(f, size, &mut out);
            }
        }
        out.into_iter().collect()
    }

    /// Number of faces in each dimension 0..=dim.
    pub fn f_vector(&self) -> Vec<usize> {
        let d = self.dimension();
        (0..=d)
            .map(|i| self.face_masks(i as usize + 1).len())
            .collect()
    }

    /// The full subcomplex on `{l : support[l - 1] = 1}`.
    ///
    /// The support is indexed by labels `1..=len`, so its length must equal
    /// the largest vertex label (the vertex count for complexes on `1..=m`).
    pub fn induced_subcomplex(&self, support: &BitVector) -> Result<Self> {
        if support.len() != self.max_label() {
            return Err(Error::LengthMismatch {
                expected: self.max_label(),
                found: support.len(),
            });
        }
        let mut mask = 0u64;
        for i in support.support() {
            mask |= 1 << i;
        }
        Ok(self.induced_on_mask(mask))
    }

    pub(crate) fn induced_on_mask(&self, mask: u64) -> Self {
        if mask & self.vertices == self.vertices {
            return self.clone();
        }
        Self::generated_by(self.maximal.iter().map(|&f| f & mask))
    }

    /// Whether the 1-skeleton is connected. The empty complex is not.
    pub fn is_connected(&self) -> bool {
        if self.is_empty() {
            return false;
        }
        let start = self.vertices & self.vertices.wrapping_neg();
        let mut reached = start;
        loop {
            let before = reached;
            for &f in &self.maximal {
                if f & reached != 0 {
                    reached |= f;
                }
            }
            if reached == before {
                break;
            }
        }
        reached == self.vertices
    }

    /// Alternating sum of face counts.
    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &n)| if i % 2 == 0 { n as i64 } else { -(n as i64) })
            .sum()
    }

    /// Reduced rational Betti numbers from exact boundary-matrix ranks.
    pub fn reduced_betti(&self) -> ReducedBettiVector {
        if self.is_empty() {
            return ReducedBettiVector { entries: vec![1] };
        }
        let d = self.dimension() as usize;
        let faces: Vec<Vec<Face>> = (1..=d + 1).map(|s| self.face_masks(s)).collect();
        // ranks[i] = rank of the boundary map out of i-faces; the augmentation has rank 1
        let mut ranks = vec![0usize; d + 2];
        ranks[0] = 1;
        for i in 1..=d {
            ranks[i] = boundary_rank(&faces[i], &faces[i - 1]);
        }
        let mut entries = vec![0usize];
        for i in 0..=d {
            let chains = faces[i].len();
            entries.push(chains - ranks[i] - ranks[i + 1]);
        }
        ReducedBettiVector { entries }
    }

    /// A rational homology point: every reduced Betti number vanishes.
    /// The empty complex has `β̃_{-1} = 1` and is not one.
    pub fn is_qhp(&self) -> bool {
        self.reduced_betti().is_trivial()
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.maximal_faces()).finish()
    }
}

fn labels_to_face(labels: &[usize]) -> Result<Face> {
    if labels.is_empty() {
        return Err(Error::InvalidComplex("empty face".into()));
    }
    let mut face = 0u64;
    for &l in labels {
        if l == 0 || l > MAX_VERTEX {
            return Err(Error::InvalidComplex(format!(
                "vertex label {l} outside 1..={MAX_VERTEX}"
            )));
        }
        let bit = 1u64 << (l - 1);
        if face & bit != 0 {
            return Err(Error::InvalidComplex(format!(
                "vertex {l} repeated in a face"
            )));
        }
        face |= bit;
    }
    Ok(face)
}

fn subsets_of_size(face: Face, size: usize, out: &mut BTreeSet<Face>) {
    // Gosper-style enumeration over the positions of `face`
    let bits: Vec<u64> = (0..64)
        .filter(|b| (face >> b) & 1 == 1)
        .map(|b| 1 << b)
        .collect();
    let n = bits.len();
    if size == 0 || size > n {
        return;
    }
    let mut sel: u64 = (1 << size) - 1;
    while sel < (1 << n) {
        let mut sub = 0u64;
        for (i, b) in bits.iter().enumerate() {
            if (sel >> i) & 1 == 1 {
                sub |= b;
            }
        }
        out.insert(sub);
        let c = sel & sel.wrapping_neg();
        let r = sel + c;
        sel = (((r ^ sel) >> 2) / c) | r;
    }
}

/// Rank of the boundary map from `faces` to `facets` (their codimension-1 faces).
fn boundary_rank(faces: &[Face], facets: &[Face]) -> usize {
    if faces.is_empty() || facets.is_empty() {
        return 0;
    }
    let index: HashMap<Face, usize> = facets.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<i64>> = faces
        .iter()
        .map(|&f| {
            let mut row = vec![0i64; facets.len()];
            let mut rest = f;
            let mut pos = 0;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                rest ^= bit;
                let sign = if pos % 2 == 0 { 1 } else { -1 };
                row[index[&(f ^ bit)]] = sign;
                pos += 1;
            }
            row
        })
        .collect();
    integer_rank(&rows)
}

/// Exact rank over Q of an integer matrix.
pub fn integer_rank(rows: &[Vec<i64>]) -> usize {
    let small: Vec<Vec<i128>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i128).collect())
        .collect();
    if let Some(rank) = bareiss_rank(small) {
        return rank;
    }
    let big: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    bareiss_rank(big).expect("arbitrary precision cannot overflow")
}

/// Ring operations needed by fraction-free elimination; `None` signals overflow.
trait ExactRing: Clone + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `(a * b - c * d) / e`, exact.
    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self>;
}

impl ExactRing for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        let num = a.checked_mul(*b)?.checked_sub(c.checked_mul(*d)?)?;
        Some(num / e)
    }
}

impl ExactRing for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn bareiss_step(a: &Self, b: &Self, c: &Self, d: &Self, e: &Self) -> Option<Self> {
        Some((a * b - c * d) / e)
    }
}

/// Bareiss fraction-free Gaussian elimination. Every intermediate entry is a
/// minor of the input, so divisions are exact.
fn bareiss_rank<T: ExactRing>(mut m: Vec<Vec<T>>) -> Option<usize> {
    let nrows = m.len();
    if nrows == 0 {
        return Some(0);
    }
    let ncols = m[0].len();
    let mut prev = T::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(p) = (rank..nrows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        for r in rank + 1..nrows {
            for c in col + 1..ncols {
                let v = T::bareiss_step(&m[rank][col], &m[r][c], &m[r][col], &m[rank][c], &prev)?;
                m[r][c] = v;
            }
            m[r][col] = T::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    Some(rank)
}

/// Reduced Betti numbers `β̃_{-1}, β̃_0, …, β̃_d`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ReducedBettiVector {
    entries: Vec<usize>,
}

impl ReducedBettiVector {
    /// `β̃_i` for `i ≥ -1`; zero above the dimension.
    pub fn get(&self, i: isize) -> usize {
        assert!(i >= -1, "reduced Betti numbers start at degree -1");
        self.entries.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// Entries starting at degree -1.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn is_trivial(&self) -> bool {
        self.entries.iter().all(|&b| b == 0)
    }
}

impl fmt::Debug for ReducedBettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedBetti{:?}", self.entries)
    }
}
