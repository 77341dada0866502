//! Colourings of right-angled polytopes by `Z2`-vector spaces.
//!
//! Decides properness and orientability, computes rational Betti numbers of
//! the associated manifolds from induced subcomplexes of the dual boundary
//! complex, tests for rational homology spheres, and searches extensions up
//! to equivalence.

pub mod colouring;
pub mod equivalence;
pub mod error;
pub mod extension;
pub mod gf2;
pub mod polytopes;
pub mod scomplex;

pub use colouring::{cube_t_sets, named, proper_colourings, BettiVector, Colouring, ColouringFile};
pub use equivalence::{
    colour_fixing_symmetry_group, coloured_symmetry_group, dedupe, dj_canonical_form,
    dj_equivalent, DJClass,
};
pub use error::{Error, Result};
pub use extension::{
    base_colourings, bounds_geometrically_certificate, enumerate_qhs_extensions, extend_by_row,
    is_extension_of, orientable_extension, stabilizer_union_covers, ExtensionWitness,
};
pub use gf2::{in_span, projection_along, BitMatrix, BitVector, RowSpace};
pub use polytopes::{
    automorphism_group, dodecahedron, n_cube, n_simplex, Permutation, PermutationGroup,
    PolytopeCombinatorics,
};
pub use scomplex::{ReducedBettiVector, SimplicialComplex};
