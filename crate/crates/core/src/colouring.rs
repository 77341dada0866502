//! Colourings of right-angled polytopes by vectors of `Z2^k`, and the
//! rational homology of the manifolds they define.
//!
//! The rational cohomology of `M_λ` splits over the row space of the
//! defining matrix:
//!
//! ```text
//! H^p(M_λ; Q) ≅ ⊕_{ω ∈ Row(Λ)} H̃^{p-1}(K_ω; Q)
//! ```
//!
//! where `K_ω` is the full subcomplex of `K_P` on the facets where `ω` is 1.

use std::fmt;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::gf2::{rank_of, BitMatrix, BitVector, RowSpace};
use crate::polytopes::{self, PolytopeCombinatorics};
use crate::scomplex::SimplicialComplex;

/// A surjective colouring `λ: F → Z2^k`; column `j` of the matrix is the
/// colour of facet `j + 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct Colouring {
    polytope: Arc<PolytopeCombinatorics>,
    matrix: BitMatrix,
}

impl Colouring {
    /// Fails unless the matrix has one column per facet and full row rank.
    pub fn new(polytope: Arc<PolytopeCombinatorics>, matrix: BitMatrix) -> Result<Self> {
        if matrix.ncols() != polytope.facet_count() {
            return Err(Error::LengthMismatch {
                expected: polytope.facet_count(),
                found: matrix.ncols(),
            });
        }
        let rank = matrix.rank();
        if rank != matrix.nrows() {
            return Err(Error::NotSurjective {
                rank,
                rows: matrix.nrows(),
            });
        }
        Ok(Self { polytope, matrix })
    }

    /// Builds a colouring from the colours of facets `1..=m` in order.
    pub fn from_colours(
        polytope: Arc<PolytopeCombinatorics>,
        colours: &[BitVector],
    ) -> Result<Self> {
        Self::new(polytope, BitMatrix::from_columns(colours)?)
    }

    pub fn polytope(&self) -> &Arc<PolytopeCombinatorics> {
        &self.polytope
    }

    /// The defining matrix `Λ`.
    pub fn matrix(&self) -> &BitMatrix {
        &self.matrix
    }

    /// `k = dim W`, which equals the rank since colourings are surjective.
    pub fn rank(&self) -> usize {
        self.matrix.nrows()
    }

    /// Colour of facet `facet` (1-based).
    pub fn colour(&self, facet: usize) -> BitVector {
        self.matrix.column(facet - 1)
    }

    pub fn row_space(&self) -> RowSpace {
        self.matrix.row_space()
    }

    /// `K_ω`, the full subcomplex of `K_P` on the support of `ω`.
    pub fn subcomplex(&self, omega: &BitVector) -> Result<SimplicialComplex> {
        self.polytope.complex().induced_subcomplex(omega)
    }

    /// Colours on every maximal face of `K_P` are linearly independent.
    /// Independence on maximal faces implies it on all faces.
    pub fn is_proper(&self) -> bool {
        let colours = self.matrix.columns();
        self.polytope.complex().maximal_faces().iter().all(|face| {
            let vs: Vec<BitVector> = face.iter().map(|&f| colours[f - 1]).collect();
            rank_of(&vs) == vs.len()
        })
    }

    /// `ε = (1, …, 1)` lies in the row space.
    pub fn is_orientable(&self) -> bool {
        self.row_space()
            .contains(&BitVector::ones(self.matrix.ncols()))
    }

    /// The rank equals the dimension of the polytope.
    pub fn is_small_cover(&self) -> bool {
        self.rank() == self.polytope.dim()
    }

    fn require_proper(&self) -> Result<()> {
        if self.is_proper() {
            Ok(())
        } else {
            Err(Error::Improper)
        }
    }

    /// Rational Betti numbers `β_0, …, β_n` of `M_λ`.
    pub fn manifold_betti(&self) -> Result<BettiVector> {
        self.require_proper()?;
        let n = self.polytope.dim();
        let mut betti = vec![0usize; n + 1];
        for omega in self.row_space().vectors() {
            let reduced = self.subcomplex(&omega)?.reduced_betti();
            for (p, b) in betti.iter_mut().enumerate() {
                *b += reduced.get(p as isize - 1);
            }
        }
        Ok(BettiVector { entries: betti })
    }

    /// `M_λ` is a rational homology sphere: orientable, and every `K_ω` with
    /// `ω ∉ {0, ε}` is a rational homology point. Non-orientable colourings
    /// give `false`.
    pub fn is_qhs(&self) -> Result<bool> {
        self.require_proper()?;
        if !self.is_orientable() {
            return Ok(false);
        }
        for omega in self.row_space().vectors() {
            if omega.is_zero() || omega.is_ones() {
                continue;
            }
            if !self.subcomplex(&omega)?.is_qhp() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Connectivity test for orientable colourings of 3-polytopes: `M_λ` is a
    /// rational homology sphere iff every `K_ω` with `ω ∉ {0, ε}` has a
    /// connected 1-skeleton.
    pub fn is_qhs_fast(&self) -> Result<bool> {
        self.require_proper()?;
        if self.polytope.dim() != 3 {
            return Err(Error::WrongDimension {
                expected: 3,
                found: self.polytope.dim(),
            });
        }
        if !self.is_orientable() {
            return Err(Error::NonOrientable);
        }
        for omega in self.row_space().vectors() {
            if omega.is_zero() || omega.is_ones() {
                continue;
            }
            if !self.subcomplex(&omega)?.is_connected() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    fn cube_pair_vectors(&self) -> Result<Vec<BitVector>> {
        let pairs = self
            .polytope
            .cube_pairing()
            .ok_or_else(|| Error::NotCube(self.polytope.name().to_string()))?;
        let m = self.polytope.facet_count();
        pairs
            .iter()
            .map(|&(a, b)| BitVector::from_support(m, [a - 1, b - 1]))
            .collect()
    }

    /// Betti numbers of a cube colouring by counting `|Row(Λ) ∩ T_j|`.
    pub fn cube_betti(&self) -> Result<BettiVector> {
        let pairs = self.cube_pair_vectors()?;
        self.require_proper()?;
        let rows = self.row_space();
        let n = pairs.len();
        let mut entries = vec![1usize];
        for j in 1..=n {
            let count = t_set(&pairs, j).iter().filter(|t| rows.contains(t)).count();
            entries.push(count);
        }
        Ok(BettiVector { entries })
    }

    /// A cube colouring gives a rational homology sphere iff it is orientable
    /// and its row space misses `T_1 ∪ … ∪ T_{n-1}`. Non-orientable colourings
    /// give `false`.
    pub fn cube_is_qhs(&self) -> Result<bool> {
        let pairs = self.cube_pair_vectors()?;
        self.require_proper()?;
        if !self.is_orientable() {
            return Ok(false);
        }
        let rows = self.row_space();
        let n = pairs.len();
        Ok((1..n).all(|j| t_set(&pairs, j).iter().all(|t| !rows.contains(t))))
    }
}

impl fmt::Debug for Colouring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Colouring({}, {:?})", self.polytope.name(), self.matrix)
    }
}

/// Sums of `j` distinct pair vectors.
fn t_set(pairs: &[BitVector], j: usize) -> Vec<BitVector> {
    let n = pairs.len();
    let mut out: Vec<BitVector> = (0u64..1 << n)
        .filter(|sel| sel.count_ones() as usize == j)
        .map(|sel| {
            pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| (sel >> i) & 1 == 1)
                .fold(BitVector::zeros(pairs[0].len()), |acc, (_, p)| acc + *p)
        })
        .collect();
    out.sort();
    out
}

/// `T_j ⊂ Z2^{2n}` for the `n`-cube with opposite facets `{2i-1, 2i}`.
pub fn cube_t_sets(n: usize, j: usize) -> Result<Vec<BitVector>> {
    if n == 0 || j == 0 || j > n {
        return Err(Error::OutOfRange { index: j, max: n });
    }
    let pairs: Vec<BitVector> = (0..n)
        .map(|i| BitVector::from_support(2 * n, [2 * i, 2 * i + 1]))
        .collect::<Result<_>>()?;
    Ok(t_set(&pairs, j))
}

/// Rational Betti numbers `β_0, …, β_n` of a closed manifold.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BettiVector {
    entries: Vec<usize>,
}

impl BettiVector {
    pub fn new(entries: Vec<usize>) -> Self {
        Self { entries }
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn get(&self, p: usize) -> usize {
        self.entries.get(p).copied().unwrap_or(0)
    }

    /// `Σ (-1)^p β_p`.
    pub fn euler_characteristic(&self) -> i64 {
        self.entries
            .iter()
            .enumerate()
            .map(|(p, &b)| if p % 2 == 0 { b as i64 } else { -(b as i64) })
            .sum()
    }

    /// `(1, 0, …, 0, 1)`.
    pub fn is_sphere(&self) -> bool {
        let n = self.entries.len() - 1;
        self.entries
            .iter()
            .enumerate()
            .all(|(p, &b)| b == usize::from(p == 0 || p == n))
    }
}

impl fmt::Display for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.entries.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Betti{:?}", self.entries)
    }
}

/// One matrix per subspace of `Z2^m` of dimension `rank`, in reduced row
/// echelon form, keeping those that are proper on `polytope`.
///
/// Properness, orientability and homology depend only on the row space, so
/// this lists every proper colouring of the given rank up to a change of
/// basis of `W`.
pub fn proper_colourings(polytope: &Arc<PolytopeCombinatorics>, rank: usize) -> Vec<Colouring> {
    let m = polytope.facet_count();
    let mut out = Vec::new();
    if rank == 0 || rank > m {
        return out;
    }
    for pivots in combinations(m, rank) {
        // free positions: columns right of each pivot that are not pivots
        let free: Vec<(usize, usize)> = pivots
            .iter()
            .enumerate()
            .flat_map(|(r, &p)| {
                (p + 1..m)
                    .filter(|c| !pivots.contains(c))
                    .map(move |c| (r, c))
            })
            .collect();
        for fill in 0u64..(1 << free.len()) {
            let mut rows: Vec<BitVector> = pivots.iter().map(|&p| BitVector::unit(m, p)).collect();
            for (bit, &(r, c)) in free.iter().enumerate() {
                if (fill >> bit) & 1 == 1 {
                    rows[r].set(c, true);
                }
            }
            let c = Colouring::new(polytope.clone(), BitMatrix::new(rows).expect("rows"))
                .expect("echelon rows are independent");
            if c.is_proper() {
                out.push(c);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Contents of a colouring file.
///
/// ```text
/// colouring <name>
/// polytope <catalog-name-or-path>
/// rank <k>
/// <k rows of m space-separated bits>
/// ```
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColouringFile {
    pub name: String,
    pub polytope: String,
    pub matrix: BitMatrix,
}

impl ColouringFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let mut header = |key: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((n, line)) => match line.split_once(char::is_whitespace) {
                    Some((k, rest)) if k == key => Ok((n, rest.trim().to_string())),
                    _ => Err(Error::Parse {
                        line: n,
                        message: format!("expected `{key} …`, found `{line}`"),
                    }),
                },
                None => Err(Error::Parse {
                    line: 0,
                    message: format!("missing `{key}` line"),
                }),
            }
        };
        let (_, name) = header("colouring")?;
        let (_, polytope) = header("polytope")?;
        let (rank_line, rank) = header("rank")?;
        let rank: usize = rank.parse().map_err(|_| Error::Parse {
            line: rank_line,
            message: format!("`{rank}` is not a rank"),
        })?;
        let rows: Vec<(usize, &str)> = lines.collect();
        if rows.len() != rank {
            return Err(Error::Parse {
                line: rows.first().map_or(rank_line, |r| r.0),
                message: format!("expected {rank} matrix rows, found {}", rows.len()),
            });
        }
        let matrix = BitMatrix::new(
            rows.iter()
                .map(|&(n, l)| crate::gf2::parse_bit_row(l, n))
                .collect::<Result<_>>()?,
        )
        .map_err(|e| Error::Parse {
            line: rank_line + 1,
            message: e.to_string(),
        })?;
        Ok(Self {
            name,
            polytope,
            matrix,
        })
    }

    pub fn to_file_string(&self) -> String {
        format!(
            "colouring {}\npolytope {}\nrank {}\n{}",
            self.name,
            self.polytope,
            self.matrix.nrows(),
            self.matrix
        )
    }

    /// Resolves the polytope reference (catalog name, or a path relative to
    /// `base_dir`) and builds the colouring.
    pub fn resolve(&self, base_dir: &Path) -> Result<Colouring> {
        let polytope = match polytopes::by_name(&self.polytope) {
            Ok(p) => p,
            Err(Error::UnknownCatalogEntry(_)) => {
                PolytopeCombinatorics::load(base_dir.join(&self.polytope))?
            }
            Err(e) => return Err(e),
        };
        Colouring::new(Arc::new(polytope), self.matrix.clone())
    }
}

/// Built-in colourings, referenced by name.
pub mod named {
    use super::*;

    fn file(name: &str, polytope: &str, rows: &[&[u8]]) -> ColouringFile {
        ColouringFile {
            name: name.to_string(),
            polytope: polytope.to_string(),
            matrix: BitMatrix::from_rows_bits(rows).expect("built-in matrix"),
        }
    }

    fn build(f: ColouringFile) -> Colouring {
        let p = polytopes::by_name(&f.polytope).expect("catalog polytope");
        Colouring::new(Arc::new(p), f.matrix).expect("built-in colouring")
    }

    pub const GARRISON_SCOTT_ROWS: [[u8; 12]; 3] = [
        [1, 0, 0, 0, 0, 1, 1, 1, 1, 1, 0, 0],
        [0, 1, 0, 0, 1, 1, 0, 1, 1, 0, 0, 1],
        [0, 0, 1, 1, 0, 1, 0, 1, 1, 0, 1, 0],
    ];

    /// Added row of the QHS extension supported on the triangle `{3, 7, 9}`.
    pub const M_EXTRA_ROW: [u8; 12] = [0, 0, 1, 0, 0, 0, 1, 0, 1, 0, 0, 0];

    /// Names accepted by [`by_name`].
    pub const NAMES: [&str; 5] = [
        "garrison-scott",
        "m-extension",
        "hantzsche-wendt",
        "torus-3",
        "klein-square",
    ];

    pub fn file_by_name(name: &str) -> Result<ColouringFile> {
        let gs: Vec<&[u8]> = GARRISON_SCOTT_ROWS.iter().map(|r| &r[..]).collect();
        Ok(match name {
            "garrison-scott" => file(name, "dodecahedron", &gs),
            "m-extension" => {
                let mut rows = gs.clone();
                rows.push(&M_EXTRA_ROW);
                file(name, "dodecahedron", &rows)
            }
            "hantzsche-wendt" => file(
                name,
                "cube-3",
                &[
                    &[1, 0, 0, 0, 1, 1],
                    &[0, 1, 0, 0, 0, 1],
                    &[0, 0, 1, 0, 1, 0],
                    &[0, 0, 0, 1, 1, 1],
                ],
            ),
            "torus-3" => file(
                name,
                "cube-3",
                &[
                    &[1, 1, 0, 0, 0, 0],
                    &[0, 0, 1, 1, 0, 0],
                    &[0, 0, 0, 0, 1, 1],
                ],
            ),
            "klein-square" => file(name, "cube-2", &[&[1, 1, 1, 0], &[0, 0, 1, 1]]),
            _ => return Err(Error::UnknownCatalogEntry(name.to_string())),
        })
    }

    pub fn by_name(name: &str) -> Result<Colouring> {
        file_by_name(name).map(build)
    }

    /// The only orientable small cover of the dodecahedron, up to equivalence.
    pub fn garrison_scott() -> Colouring {
        build(file_by_name("garrison-scott").unwrap())
    }

    /// The Garrison–Scott matrix with `M_EXTRA_ROW` appended.
    pub fn m_extension() -> Colouring {
        build(file_by_name("m-extension").unwrap())
    }

    pub fn hantzsche_wendt() -> Colouring {
        build(file_by_name("hantzsche-wendt").unwrap())
    }

    /// `λ(F_{2i-1}) = λ(F_{2i}) = e_i` on the 3-cube.
    pub fn torus_3() -> Colouring {
        build(file_by_name("torus-3").unwrap())
    }

    /// Square with colours `e1, e1, e1 + e2, e2`.
    pub fn klein_square() -> Colouring {
        build(file_by_name("klein-square").unwrap())
    }

    /// `λ(F_i) = e_i` on the `n`-simplex.
    pub fn canonical_simplex(n: usize) -> Colouring {
        let p = polytopes::n_simplex(n);
        Colouring::new(Arc::new(p), BitMatrix::identity(n + 1).unwrap()).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::named::*;
    use super::*;

    #[test]
    fn garrison_scott_is_an_orientable_small_cover() {
        let gs = garrison_scott();
        assert_eq!(gs.matrix().rank(), 3);
        assert!(gs.is_proper());
        assert!(gs.is_orientable());
        assert!(gs.is_small_cover());
        assert_eq!(gs.manifold_betti().unwrap().entries(), &[1, 0, 0, 1]);
        assert!(gs.is_qhs().unwrap());
        assert!(gs.is_qhs_fast().unwrap());
    }

    #[test]
    fn epsilon_is_the_sum_of_the_garrison_scott_rows() {
        let gs = garrison_scott();
        let rs = gs.row_space();
        assert_eq!(rs.len(), 8);
        let eps = BitVector::ones(12);
        assert_eq!(rs.coefficients_of(&eps).unwrap().to_string(), "111");
    }

    #[test]
    fn m_extension_properties() {
        let m = m_extension();
        assert_eq!(m.matrix().rank(), 4);
        assert!(m.is_proper());
        assert!(!m.is_small_cover());
        assert!(m.is_qhs().unwrap());
        assert!(m.is_qhs_fast().unwrap());
        let v = BitVector::from_bits(&M_EXTRA_ROW).unwrap();
        let kv = m.subcomplex(&v).unwrap();
        assert_eq!(kv.maximal_faces(), vec![vec![3, 7, 9]]);
    }

    #[test]
    fn improper_square_colouring() {
        let sq = Arc::new(polytopes::n_cube(2));
        let e1 = BitVector::unit(2, 0);
        let e2 = BitVector::unit(2, 1);
        // facets 1 and 3 are adjacent and share e1
        let c = Colouring::from_colours(sq, &[e1, e2, e1, e2]).unwrap();
        assert!(!c.is_proper());
        assert_eq!(c.manifold_betti(), Err(Error::Improper));
        assert_eq!(c.is_qhs(), Err(Error::Improper));
    }

    #[test]
    fn canonical_simplex_colourings() {
        for n in 1..=4 {
            let c = canonical_simplex(n);
            assert!(c.is_proper());
            assert!(!c.is_small_cover());
            assert!(c.manifold_betti().unwrap().is_sphere());
        }
    }

    #[test]
    fn klein_bottle() {
        let k = klein_square();
        assert!(k.is_proper());
        assert!(!k.is_orientable());
        assert_eq!(k.manifold_betti().unwrap().entries(), &[1, 1, 0]);
        assert_eq!(k.cube_betti().unwrap().entries(), &[1, 1, 0]);
        assert!(!k.is_qhs().unwrap());
        assert!(!k.cube_is_qhs().unwrap());
    }

    #[test]
    fn torus() {
        let t = torus_3();
        assert!(t.is_proper());
        assert!(t.is_orientable());
        assert!(t.is_small_cover());
        assert_eq!(t.manifold_betti().unwrap().entries(), &[1, 3, 3, 1]);
        assert_eq!(t.cube_betti().unwrap().entries(), &[1, 3, 3, 1]);
        assert!(!t.is_qhs().unwrap());
        assert!(!t.is_qhs_fast().unwrap());
        assert!(!t.cube_is_qhs().unwrap());
        // K_ω for a single row is the two opposite vertices of a pair
        let k = t.subcomplex(&t.matrix().row(0)).unwrap();
        assert_eq!(k.maximal_faces(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn hantzsche_wendt_is_a_qhs() {
        let hw = hantzsche_wendt();
        assert_eq!(hw.rank(), 4);
        assert!(hw.is_proper());
        assert!(hw.is_orientable());
        assert_eq!(hw.cube_betti().unwrap().entries(), &[1, 0, 0, 1]);
        assert_eq!(hw.manifold_betti().unwrap().entries(), &[1, 0, 0, 1]);
        assert!(hw.cube_is_qhs().unwrap());
        assert!(hw.is_qhs().unwrap());
    }

    #[test]
    fn fast_path_preconditions() {
        assert!(matches!(
            canonical_simplex(2).is_qhs_fast(),
            Err(Error::WrongDimension { .. })
        ));
        let nonorientable = proper_colourings(&Arc::new(polytopes::n_cube(3)), 3)
            .into_iter()
            .find(|c| !c.is_orientable())
            .unwrap();
        assert_eq!(nonorientable.is_qhs_fast(), Err(Error::NonOrientable));
        assert!(matches!(
            garrison_scott().cube_betti(),
            Err(Error::NotCube(_))
        ));
    }

    #[test]
    fn t_sets() {
        let t1: Vec<String> = cube_t_sets(3, 1)
            .unwrap()
            .iter()
            .map(|v| v.to_string())
            .collect();
        assert_eq!(t1, ["000011", "001100", "110000"]);
        assert_eq!(cube_t_sets(3, 3).unwrap(), vec![BitVector::ones(6)]);
        assert_eq!(cube_t_sets(4, 2).unwrap().len(), 6);
        assert!(cube_t_sets(3, 0).is_err());
        assert!(cube_t_sets(3, 4).is_err());
    }

    #[test]
    fn surjectivity_is_enforced() {
        let p = Arc::new(polytopes::n_cube(2));
        let m = BitMatrix::from_rows_bits(&[&[1, 1, 0, 0], &[1, 1, 0, 0]]).unwrap();
        assert_eq!(
            Colouring::new(p.clone(), m),
            Err(Error::NotSurjective { rank: 1, rows: 2 })
        );
        let short = BitMatrix::from_rows_bits(&[&[1, 1, 0]]).unwrap();
        assert!(matches!(
            Colouring::new(p, short),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn colouring_file_round_trip_and_errors() {
        let f = file_by_name("garrison-scott").unwrap();
        let text = f.to_file_string();
        assert_eq!(ColouringFile::parse(&text).unwrap(), f);
        assert_eq!(f.resolve(Path::new(".")).unwrap(), garrison_scott());
        let bad = "colouring x\npolytope cube-2\nrank 1\n1 1 2 0\n";
        assert!(matches!(
            ColouringFile::parse(bad),
            Err(Error::Parse { line: 4, .. })
        ));
        let short = "colouring x\npolytope cube-2\nrank 2\n1 1 0 0\n";
        assert!(ColouringFile::parse(short).is_err());
    }

    #[test]
    fn proper_colouring_enumeration_counts() {
        let sq = Arc::new(polytopes::n_cube(2));
        // rank 2 row spaces of Z2^4 that are proper on the 4-cycle
        let r2 = proper_colourings(&sq, 2);
        assert!(r2.iter().all(|c| c.is_proper() && c.rank() == 2));
        assert_eq!(proper_colourings(&sq, 4).len(), 1);
        assert!(proper_colourings(&sq, 1).is_empty());
    }
}
