//! Equivalence of colourings up to polytope symmetry and change of basis.
//!
//! `λ` and `μ` are equivalent when `λ = m ∘ μ ∘ s` for a symmetry `s` of the
//! polytope and `m ∈ GL(W)`. Row operations preserve the row space and the
//! row space determines a surjective colouring up to `GL(W)`, so equivalence
//! classes are orbits of row spaces under the symmetry group acting on
//! coordinates.

use std::collections::BTreeMap;
use std::sync::Arc;

use rayon::prelude::*;

use crate::colouring::Colouring;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};
use crate::polytopes::{Permutation, PermutationGroup, PolytopeCombinatorics};

/// Canonical form of an equivalence class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DJClass {
    /// Smallest image of the row space under the symmetry group, as an
    /// ascending list of vectors compared as big-endian integers.
    pub canonical_row_space: Vec<BitVector>,
    /// Colouring whose matrix is the reduced row echelon basis of
    /// `canonical_row_space`.
    pub representative: Colouring,
}

fn sorted_image(s: &Permutation, space: &[BitVector]) -> Vec<BitVector> {
    let mut image: Vec<BitVector> = space.iter().map(|v| s.act_on_vector(v)).collect();
    image.sort_unstable();
    image
}

pub fn dj_canonical_form(c: &Colouring) -> DJClass {
    let space = c.row_space().sorted_vectors().to_vec();
    let canonical = c
        .polytope()
        .symmetries()
        .elements()
        .iter()
        .map(|s| sorted_image(s, &space))
        .min()
        .expect("the identity is always a symmetry");
    let basis = BitMatrix::new(canonical.clone())
        .expect("non-empty")
        .reduced_rows();
    let representative = Colouring::new(
        c.polytope().clone(),
        BitMatrix::new(basis).expect("surjective colourings have rank ≥ 1"),
    )
    .expect("echelon basis is independent");
    DJClass {
        canonical_row_space: canonical,
        representative,
    }
}

pub fn dj_equivalent(a: &Colouring, b: &Colouring) -> Result<bool> {
    if a.polytope() != b.polytope() {
        return Err(Error::PolytopeMismatch);
    }
    if a.rank() != b.rank() {
        return Ok(false);
    }
    Ok(dj_canonical_form(a).canonical_row_space == dj_canonical_form(b).canonical_row_space)
}

/// Symmetries `s` with `λ ∘ s = m ∘ λ` for some `m ∈ GL(W)`, i.e. those
/// whose action on coordinates maps the row space onto itself.
pub fn coloured_symmetry_group(c: &Colouring) -> PermutationGroup {
    let space = c.row_space().sorted_vectors().to_vec();
    let group = c.polytope().symmetries();
    let stabilizer = group
        .elements()
        .iter()
        .filter(|s| sorted_image(s, &space) == space)
        .cloned()
        .collect();
    PermutationGroup::from_elements(group.degree(), stabilizer)
}

/// Symmetries fixing every colour: `λ ∘ s = λ`. A subgroup of
/// [`coloured_symmetry_group`] and not invariant under change of basis.
pub fn colour_fixing_symmetry_group(c: &Colouring) -> PermutationGroup {
    let group = c.polytope().symmetries();
    let fixing = group
        .elements()
        .iter()
        .filter(|s| c.matrix().rows().iter().all(|r| s.act_on_vector(r) == *r))
        .cloned()
        .collect();
    PermutationGroup::from_elements(group.degree(), fixing)
}

/// Distinct images of the row space under the symmetry group.
pub fn row_space_orbit(c: &Colouring) -> Vec<Vec<BitVector>> {
    let space = c.row_space().sorted_vectors().to_vec();
    let mut orbit: Vec<Vec<BitVector>> = c
        .polytope()
        .symmetries()
        .elements()
        .iter()
        .map(|s| sorted_image(s, &space))
        .collect();
    orbit.sort();
    orbit.dedup();
    orbit
}

/// The colouring `λ ∘ s`.
pub fn precompose(c: &Colouring, s: &Permutation) -> Colouring {
    let rows = c
        .matrix()
        .rows()
        .iter()
        .map(|r| s.act_on_vector(r))
        .collect();
    Colouring::new(c.polytope().clone(), BitMatrix::new(rows).expect("rows"))
        .expect("permuting columns keeps the rank")
}

/// One class per canonical form, sorted by canonical form.
pub fn dedupe(colourings: &[Colouring]) -> Result<Vec<DJClass>> {
    let Some(first) = colourings.first() else {
        return Ok(Vec::new());
    };
    let polytope: &Arc<PolytopeCombinatorics> = first.polytope();
    if colourings.iter().any(|c| c.polytope() != polytope) {
        return Err(Error::PolytopeMismatch);
    }
    // warm the cached symmetry group before fanning out
    polytope.symmetries();
    let classes: Vec<DJClass> = colourings.par_iter().map(dj_canonical_form).collect();
    let mut by_form = BTreeMap::new();
    for class in classes {
        by_form
            .entry(class.canonical_row_space.clone())
            .or_insert(class);
    }
    Ok(by_form.into_values().collect())
}
