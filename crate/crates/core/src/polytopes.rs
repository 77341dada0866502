//! Combinatorics of right-angled polytopes, described by the dual boundary
//! complex `K_P` whose vertices are the facets `1..=m`.

use std::collections::{BTreeSet, HashSet};
use std::fmt;
use std::fs;
use std::path::Path;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::gf2::BitVector;
use crate::scomplex::SimplicialComplex;

/// A right-angled polytope, up to combinatorial type.
pub struct PolytopeCombinatorics {
    name: String,
    dim: usize,
    complex: SimplicialComplex,
    cube_pairing: Option<Vec<(usize, usize)>>,
    symmetries: OnceLock<PermutationGroup>,
}

impl PolytopeCombinatorics {
    /// Validates and builds a polytope on facets `1..=facet_count`.
    pub fn new(
        name: impl Into<String>,
        dim: usize,
        facet_count: usize,
        complex: SimplicialComplex,
        cube_pairing: Option<Vec<(usize, usize)>>,
    ) -> Result<Self> {
        let invalid = |msg: String| Err(Error::InvalidComplex(msg));
        if dim == 0 {
            return invalid("dimension must be positive".into());
        }
        if complex.vertices() != (1..=facet_count).collect::<Vec<_>>() {
            return invalid(format!(
                "facets 1..={facet_count} must each occur in some maximal face"
            ));
        }
        if let Some(face) = complex.maximal_faces().iter().find(|f| f.len() != dim) {
            return invalid(format!(
                "maximal face {face:?} has {} vertices, expected {dim}",
                face.len()
            ));
        }
        if let Some(pairs) = &cube_pairing {
            let mut seen = BTreeSet::new();
            for &(a, b) in pairs {
                if !seen.insert(a) || !seen.insert(b) {
                    return invalid(format!("facet pairing repeats a facet in ({a}, {b})"));
                }
                if complex.contains_face(&[a.min(b), a.max(b)]) {
                    return invalid(format!("paired facets {a} and {b} share a face"));
                }
            }
            if seen != (1..=facet_count).collect() {
                return invalid("facet pairing must cover every facet".into());
            }
        }
        Ok(Self {
            name: name.into(),
            dim,
            complex,
            cube_pairing,
            symmetries: OnceLock::new(),
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn facet_count(&self) -> usize {
        self.complex.vertex_count()
    }

    /// The dual boundary complex `K_P`.
    pub fn complex(&self) -> &SimplicialComplex {
        &self.complex
    }

    /// Opposite-facet pairs, present only for cubes.
    pub fn cube_pairing(&self) -> Option<&[(usize, usize)]> {
        self.cube_pairing.as_deref()
    }

    pub fn is_cube(&self) -> bool {
        self.cube_pairing.is_some()
    }

    /// Whether `K_P` is the icosahedron, i.e. `P` is the dodecahedron.
    ///
    /// The icosahedron is the only triangulated 2-sphere whose vertices all
    /// have degree 5, so it is enough to check those conditions.
    pub fn is_dodecahedron(&self) -> bool {
        let k = &self.complex;
        if self.dim != 3 || self.facet_count() != 12 || k.maximal_face_count() != 20 {
            return false;
        }
        if (1..=12).any(|v| k.neighbours(v).len() != 5) {
            return false;
        }
        let triangles = k.maximal_faces();
        k.faces(1).iter().all(|edge| {
            triangles
                .iter()
                .filter(|t| edge.iter().all(|v| t.contains(v)))
                .count()
                == 2
        }) && k.is_connected()
            && k.euler_characteristic() == 2
    }

    /// The combinatorial automorphism group of `K_P`, computed on first use.
    pub fn symmetries(&self) -> &PermutationGroup {
        self.symmetries.get_or_init(|| automorphism_group(self))
    }

    /// Renders the polytope file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!(
            "polytope {}\ndim {}\nfacets {}\n",
            self.name,
            self.dim,
            self.facet_count()
        );
        if let Some(pairs) = &self.cube_pairing {
            let body: Vec<String> = pairs.iter().map(|(a, b)| format!("{a} {b}")).collect();
            out.push_str(&format!("pairs {}\n", body.join("  ")));
        }
        for face in self.complex.maximal_faces() {
            let body: Vec<String> = face.iter().map(|v| v.to_string()).collect();
            out.push_str(&format!("simplex {}\n", body.join(" ")));
        }
        out
    }

    /// Parses the polytope file format.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
            .peekable();

        let mut header = |key: &str| -> Result<(usize, String)> {
            match lines.next() {
                Some((n, line)) => match line.split_once(char::is_whitespace) {
                    Some((k, rest)) if k == key => Ok((n, rest.trim().to_string())),
                    _ => Err(parse_err(n, format!("expected `{key} …`, found `{line}`"))),
                },
                None => Err(parse_err(0, format!("missing `{key}` line"))),
            }
        };
        let (_, name) = header("polytope")?;
        let (dim_line, dim) = header("dim")?;
        let dim: usize = parse_number(&dim, dim_line)?;
        let (facets_line, facets) = header("facets")?;
        let facet_count: usize = parse_number(&facets, facets_line)?;

        let mut pairing = None;
        let mut faces = Vec::new();
        for (n, line) in lines {
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let numbers = rest
                .split_whitespace()
                .map(|t| parse_number(t, n))
                .collect::<Result<Vec<usize>>>()?;
            match key {
                "pairs" if pairing.is_none() && faces.is_empty() => {
                    if numbers.len() % 2 != 0 {
                        return Err(parse_err(n, "odd number of entries in `pairs`".into()));
                    }
                    pairing = Some(numbers.chunks(2).map(|c| (c[0], c[1])).collect());
                }
                "simplex" => {
                    if numbers.is_empty() {
                        return Err(parse_err(n, "empty simplex".into()));
                    }
                    if numbers.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(parse_err(
                            n,
                            "simplex labels must be strictly increasing".into(),
                        ));
                    }
                    if let Some(&bad) = numbers.iter().find(|&&v| v == 0 || v > facet_count) {
                        return Err(parse_err(
                            n,
                            format!("facet {bad} outside 1..={facet_count}"),
                        ));
                    }
                    faces.push(numbers);
                }
                other => return Err(parse_err(n, format!("unexpected `{other}`"))),
            }
        }
        let complex = SimplicialComplex::new(&faces)?;
        Self::new(name, dim, facet_count, complex, pairing)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&fs::read_to_string(path)?)
    }

    pub fn store(&self, path: impl AsRef<Path>) -> Result<()> {
        fs::write(path, self.to_file_string())?;
        Ok(())
    }
}

fn parse_err(line: usize, message: String) -> Error {
    Error::Parse { line, message }
}

fn parse_number(token: &str, line: usize) -> Result<usize> {
    token
        .parse()
        .map_err(|_| parse_err(line, format!("`{token}` is not a non-negative integer")))
}

impl Clone for PolytopeCombinatorics {
    fn clone(&self) -> Self {
        Self {
            name: self.name.clone(),
            dim: self.dim,
            complex: self.complex.clone(),
            cube_pairing: self.cube_pairing.clone(),
            symmetries: self.symmetries.clone(),
        }
    }
}

impl PartialEq for PolytopeCombinatorics {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name
            && self.dim == other.dim
            && self.complex == other.complex
            && self.cube_pairing == other.cube_pairing
    }
}

impl Eq for PolytopeCombinatorics {}

impl fmt::Debug for PolytopeCombinatorics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PolytopeCombinatorics")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("facets", &self.facet_count())
            .finish()
    }
}

/// The right-angled `n`-simplex: `K` is the boundary of an `n`-simplex.
pub fn n_simplex(n: usize) -> PolytopeCombinatorics {
    assert!(n >= 1);
    let m = n + 1;
    let faces: Vec<Vec<usize>> = (1..=m)
        .map(|skip| (1..=m).filter(|&v| v != skip).collect())
        .collect();
    let complex = SimplicialComplex::new(&faces).expect("simplex boundary");
    PolytopeCombinatorics::new(format!("simplex-{n}"), n, m, complex, None).expect("valid")
}

/// The `n`-cube with opposite facets `{2i-1, 2i}`; `K` is the boundary of
/// the cross-polytope.
pub fn n_cube(n: usize) -> PolytopeCombinatorics {
    assert!((1..=16).contains(&n));
    let faces: Vec<Vec<usize>> = (0..1u32 << n)
        .map(|choice| {
            (0..n)
                .map(|i| 2 * i + 1 + ((choice >> i) & 1) as usize)
                .collect()
        })
        .collect();
    let complex = SimplicialComplex::new(&faces).expect("cross-polytope boundary");
    let pairs = (1..=n).map(|i| (2 * i - 1, 2 * i)).collect();
    PolytopeCombinatorics::new(format!("cube-{n}"), n, 2 * n, complex, Some(pairs)).expect("valid")
}

/// Triangles of `K_D` for the right-angled dodecahedron.
///
/// Facet 1 is opposite facet 12; facets 2..=6 and 7..=11 form the two rings
/// of five. Under this labelling the matrix of the Garrison–Scott small
/// cover is proper and `{3, 7, 9}` is a triangle.
pub const DODECAHEDRON_TRIANGLES: [[usize; 3]; 20] = [
    [1, 2, 3],
    [1, 2, 6],
    [1, 3, 5],
    [1, 4, 5],
    [1, 4, 6],
    [2, 3, 9],
    [2, 6, 11],
    [2, 9, 11],
    [3, 5, 7],
    [3, 7, 9],
    [4, 5, 8],
    [4, 6, 10],
    [4, 8, 10],
    [5, 7, 8],
    [6, 10, 11],
    [7, 8, 12],
    [7, 9, 12],
    [8, 10, 12],
    [9, 11, 12],
    [10, 11, 12],
];

pub fn dodecahedron() -> PolytopeCombinatorics {
    let complex = SimplicialComplex::new(DODECAHEDRON_TRIANGLES).expect("icosahedron");
    PolytopeCombinatorics::new("dodecahedron", 3, 12, complex, None).expect("valid")
}

/// Looks up `simplex-<n>`, `cube-<n>` or `dodecahedron`.
pub fn by_name(name: &str) -> Result<PolytopeCombinatorics> {
    let unknown = || Error::UnknownCatalogEntry(name.to_string());
    if name == "dodecahedron" {
        return Ok(dodecahedron());
    }
    let (kind, n) = name.split_once('-').ok_or_else(unknown)?;
    let n: usize = n.parse().map_err(|_| unknown())?;
    match kind {
        "simplex" if (1..=63).contains(&n) => Ok(n_simplex(n)),
        "cube" if (1..=16).contains(&n) => Ok(n_cube(n)),
        _ => Err(unknown()),
    }
}

/// A permutation of `1..=degree`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // images[i] = s(i + 1) - 1
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Self {
            images: (0..degree).collect(),
        }
    }

    /// Builds from 1-based images `s(1), …, s(m)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for &x in images {
            if x == 0 || x > degree || std::mem::replace(&mut seen[x - 1], true) {
                return Err(Error::InvalidComplex(format!(
                    "{images:?} is not a permutation"
                )));
            }
        }
        Ok(Self {
            images: images.iter().map(|x| x - 1).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// `s(label)` for a 1-based label.
    pub fn image(&self, label: usize) -> usize {
        self.images[label - 1] + 1
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// `(self ∘ other)(x) = self(other(x))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (i, &x) in self.images.iter().enumerate() {
            images[x] = i;
        }
        Permutation { images }
    }

    /// Precomposition on coordinates: `w_j = v_{s(j)}`. A colouring with
    /// defining-matrix rows `v` becomes the colouring `λ ∘ s`.
    pub fn act_on_vector(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.degree());
        let mut w = BitVector::zeros(v.len());
        for j in 0..v.len() {
            if v.get(self.images[j]) {
                w.set(j, true);
            }
        }
        w
    }

    /// Image of a face bitmask (bit `l - 1` for label `l`).
    pub(crate) fn act_on_mask(&self, mask: u64) -> u64 {
        let mut out = 0;
        for (i, &x) in self.images.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                out |= 1 << x;
            }
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let images: Vec<usize> = self.images.iter().map(|x| x + 1).collect();
        write!(f, "Perm{images:?}")
    }
}

/// A finite permutation group, stored with all of its elements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
}

impl PermutationGroup {
    /// Builds the group from a complete, closed list of elements.
    pub fn from_elements(degree: usize, mut elements: Vec<Permutation>) -> Self {
        elements.sort();
        elements.dedup();
        debug_assert!(elements.iter().any(Permutation::is_identity));
        let mut generators = Vec::new();
        let mut generated: HashSet<Permutation> = HashSet::from([Permutation::identity(degree)]);
        for e in &elements {
            if !generated.contains(e) {
                generators.push(e.clone());
                generated = closure(degree, &generators);
            }
        }
        Self {
            degree,
            generators,
            elements,
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Elements in sorted order; the identity comes first.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn contains(&self, s: &Permutation) -> bool {
        self.elements.binary_search(s).is_ok()
    }
}

fn closure(degree: usize, generators: &[Permutation]) -> HashSet<Permutation> {
    let mut seen = HashSet::from([Permutation::identity(degree)]);
    let mut frontier = vec![Permutation::identity(degree)];
    while let Some(x) = frontier.pop() {
        for g in generators {
            let y = g.compose(&x);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

/// All permutations of the facets preserving the set of maximal faces of
/// `K_P`, found by backtracking over facet images.
///
/// Candidates for each facet must match its 1-skeleton degree and its count
/// of incident maximal faces, and adjacency to already-placed facets must be
/// preserved in both directions.
pub fn automorphism_group(polytope: &PolytopeCombinatorics) -> PermutationGroup {
    let k = polytope.complex();
    let m = polytope.facet_count();
    let neighbours: Vec<u64> = (1..=m).map(|v| k.neighbour_mask(v)).collect();
    let incidence: Vec<usize> = (0..m)
        .map(|i| {
            k.maximal_face_masks()
                .iter()
                .filter(|&&f| (f >> i) & 1 == 1)
                .count()
        })
        .collect();
    let signature: Vec<(u32, usize)> = (0..m)
        .map(|i| (neighbours[i].count_ones(), incidence[i]))
        .collect();
    let faces: HashSet<u64> = k.maximal_face_masks().iter().copied().collect();

    struct Search<'a> {
        m: usize,
        neighbours: &'a [u64],
        signature: &'a [(u32, usize)],
        faces: &'a HashSet<u64>,
        images: Vec<usize>,
        used: u64,
        found: Vec<Permutation>,
    }

    impl Search<'_> {
        fn extend(&mut self, i: usize) {
            if i == self.m {
                let s = Permutation {
                    images: self.images.clone(),
                };
                if self
                    .faces
                    .iter()
                    .all(|&f| self.faces.contains(&s.act_on_mask(f)))
                {
                    self.found.push(s);
                }
                return;
            }
            for target in 0..self.m {
                if (self.used >> target) & 1 == 1 || self.signature[target] != self.signature[i] {
                    continue;
                }
                let consistent = (0..i).all(|j| {
                    let adjacent = (self.neighbours[i] >> j) & 1 == 1;
                    let image_adjacent = (self.neighbours[target] >> self.images[j]) & 1 == 1;
                    adjacent == image_adjacent
                });
                if !consistent {
                    continue;
                }
                self.images.push(target);
                self.used |= 1 << target;
                self.extend(i + 1);
                self.used &= !(1 << target);
                self.images.pop();
            }
        }
    }

    let mut search = Search {
        m,
        neighbours: &neighbours,
        signature: &signature,
        faces: &faces,
        images: Vec::with_capacity(m),
        used: 0,
        found: Vec::new(),
    };
    search.extend(0);
    PermutationGroup::from_elements(m, search.found)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simplex_catalog() {
        let s1 = n_simplex(1);
        assert_eq!(s1.facet_count(), 2);
        assert_eq!(s1.complex().maximal_faces(), vec![vec![1], vec![2]]);
        let s2 = n_simplex(2);
        assert_eq!(s2.complex().maximal_face_count(), 3);
        assert_eq!(s2.complex().dimension(), 1);
        let s3 = n_simplex(3);
        assert_eq!(s3.facet_count(), 4);
        assert_eq!(s3.complex().maximal_face_count(), 4);
        assert_eq!(s3.complex().reduced_betti().entries(), &[0, 0, 0, 1]);
    }

    #[test]
    fn cube_catalog() {
        let sq = n_cube(2);
        assert_eq!(sq.facet_count(), 4);
        assert_eq!(
            sq.complex().maximal_faces(),
            vec![vec![1, 3], vec![1, 4], vec![2, 3], vec![2, 4]]
        );
        let c3 = n_cube(3);
        assert_eq!(c3.complex().maximal_face_count(), 8);
        for &(a, b) in c3.cube_pairing().unwrap() {
            assert!(!c3.complex().contains_face(&[a, b]));
        }
        assert_eq!(n_cube(1).complex().maximal_faces(), vec![vec![1], vec![2]]);
    }

    #[test]
    fn dodecahedron_is_an_icosahedral_sphere() {
        let d = dodecahedron();
        let k = d.complex();
        assert_eq!(d.facet_count(), 12);
        assert_eq!(k.maximal_face_count(), 20);
        assert_eq!(k.f_vector(), vec![12, 30, 20]);
        assert!(k.contains_face(&[3, 7, 9]));
        assert!((1..=12).all(|v| k.neighbours(v).len() == 5));
        assert_eq!(k.euler_characteristic(), 2);
        assert!(d.is_dodecahedron());
        assert!(!n_cube(3).is_dodecahedron());
    }

    #[test]
    fn automorphism_group_orders() {
        assert_eq!(dodecahedron().symmetries().order(), 120);
        assert_eq!(n_cube(3).symmetries().order(), 48);
        assert_eq!(n_cube(2).symmetries().order(), 8);
        for n in 1..=5 {
            let expected: usize = (1..=n + 1).product();
            assert_eq!(n_simplex(n).symmetries().order(), expected);
        }
    }

    #[test]
    fn generators_preserve_faces_and_generate() {
        for p in [dodecahedron(), n_cube(3), n_simplex(4)] {
            let group = p.symmetries();
            let faces: HashSet<u64> = p.complex().maximal_face_masks().iter().copied().collect();
            for g in group.generators() {
                let image: HashSet<u64> = faces.iter().map(|&f| g.act_on_mask(f)).collect();
                assert_eq!(image, faces);
            }
            assert_eq!(
                closure(group.degree(), group.generators()).len(),
                group.order()
            );
        }
    }

    #[test]
    fn file_round_trip() {
        for p in [n_cube(2), dodecahedron(), n_simplex(3)] {
            let text = p.to_file_string();
            assert_eq!(PolytopeCombinatorics::parse(&text).unwrap(), p);
        }
        let dir = std::env::temp_dir().join(format!("smallcover-poly-{}", std::process::id()));
        fs::create_dir_all(&dir).unwrap();
        let path = dir.join("cube2.txt");
        n_cube(2).store(&path).unwrap();
        assert_eq!(PolytopeCombinatorics::load(&path).unwrap(), n_cube(2));
    }

    #[test]
    fn file_errors() {
        let contained = "polytope bad\ndim 3\nfacets 3\nsimplex 1 2 3\nsimplex 1 2\n";
        assert!(matches!(
            PolytopeCombinatorics::parse(contained),
            Err(Error::InvalidComplex(_))
        ));
        let missing_dim = "polytope bad\nfacets 3\nsimplex 1 2 3\n";
        assert!(matches!(
            PolytopeCombinatorics::parse(missing_dim),
            Err(Error::Parse { line: 2, .. })
        ));
        let impure = "polytope bad\ndim 2\nfacets 4\nsimplex 1 2\nsimplex 2 3 4\n";
        assert!(PolytopeCombinatorics::parse(impure).is_err());
        let unordered = "polytope bad\ndim 2\nfacets 3\nsimplex 2 1\n";
        assert!(matches!(
            PolytopeCombinatorics::parse(unordered),
            Err(Error::Parse { line: 4, .. })
        ));
        let bad_pairs = "polytope sq\ndim 2\nfacets 4\npairs 1 3  2 4\nsimplex 1 3\nsimplex 1 4\nsimplex 2 3\nsimplex 2 4\n";
        assert!(PolytopeCombinatorics::parse(bad_pairs).is_err());
    }

    #[test]
    fn catalog_lookup() {
        assert_eq!(by_name("cube-3").unwrap(), n_cube(3));
        assert_eq!(by_name("simplex-2").unwrap(), n_simplex(2));
        assert_eq!(by_name("dodecahedron").unwrap(), dodecahedron());
        assert!(by_name("cube").is_err());
        assert!(by_name("prism-5").is_err());
    }

    #[test]
    fn permutation_action_on_vectors() {
        let s = Permutation::from_images(&[2, 3, 1]).unwrap();
        let v = BitVector::from_bits(&[1, 0, 0]).unwrap();
        // w_j = v_{s(j)}: only j with s(j) = 1, i.e. j = 3
        assert_eq!(s.act_on_vector(&v).to_string(), "001");
        assert!(s.compose(&s.inverse()).is_identity());
        assert!(Permutation::from_images(&[1, 1]).is_err());
    }
}
