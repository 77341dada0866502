//! Extensions of colourings.
//!
//! A rank `k + 1` colouring `μ` extends `λ` when `λ = p ∘ μ` for a linear
//! projection `p`. Up to a change of basis this means the defining matrix of
//! `μ` is that of `λ` with one extra row `v ∉ Row(Λ)`, and `M_μ` double
//! covers `M_λ`.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::colouring::{BettiVector, Colouring};
use crate::error::{Error, Result};
use crate::gf2::{projection_along, BitMatrix, BitVector};

/// An extension `μ` of `λ` obtained by appending the row `added_row`,
/// together with the projection `p` satisfying `p · M = Λ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtensionWitness {
    pub base: Colouring,
    pub extended: Colouring,
    pub projection: BitMatrix,
    pub added_row: BitVector,
}

impl ExtensionWitness {
    /// Checks `projection · extended = base` entrywise.
    pub fn projection_commutes(&self) -> bool {
        self.projection
            .mul(self.extended.matrix())
            .is_ok_and(|m| &m == self.base.matrix())
    }

    /// Betti numbers of `M_μ` from those of `M_λ` plus the contribution of
    /// the coset `v + Row(Λ)`:
    /// `β_p(μ) = β_p(λ) + Σ_{ω ∈ Row(Λ)} β̃_{p-1}(K_{ω+v})`.
    pub fn betti_by_additivity(&self) -> Result<BettiVector> {
        let base = self.base.manifold_betti()?;
        let mut entries = base.entries().to_vec();
        for omega in self.base.row_space().vectors() {
            let reduced = self
                .base
                .subcomplex(&(omega + self.added_row))?
                .reduced_betti();
            for (p, b) in entries.iter_mut().enumerate() {
                *b += reduced.get(p as isize - 1);
            }
        }
        Ok(BettiVector::new(entries))
    }
}

/// Appends `v` to the defining matrix. Fails if `v ∈ Row(Λ)`, since the
/// result would not be surjective.
pub fn extend_by_row(c: &Colouring, v: &BitVector) -> Result<ExtensionWitness> {
    let m = c.matrix().ncols();
    if v.len() != m {
        return Err(Error::LengthMismatch {
            expected: m,
            found: v.len(),
        });
    }
    if c.row_space().contains(v) {
        return Err(Error::RowInRowSpace);
    }
    let extended = Colouring::new(c.polytope().clone(), c.matrix().with_row(*v)?)?;
    let k = c.rank();
    let projection = BitMatrix::new((0..k).map(|i| BitVector::unit(k + 1, i)).collect())?;
    Ok(ExtensionWitness {
        base: c.clone(),
        extended,
        projection,
        added_row: *v,
    })
}

/// `μ` extends `λ`: the ranks differ by one and `Row(Λ) ⊂ Row(M)`.
pub fn is_extension_of(mu: &Colouring, lambda: &Colouring) -> Result<bool> {
    if mu.polytope() != lambda.polytope() {
        return Err(Error::PolytopeMismatch);
    }
    if mu.rank() != lambda.rank() + 1 {
        return Ok(false);
    }
    let rows = mu.row_space();
    Ok(lambda.matrix().rows().iter().all(|r| rows.contains(r)))
}

/// Applies `δ(F) = λ(F) + (1 + Σ_i λ(F)_i) e_{k+1}` to every colour.
pub fn orientable_extension_matrix(c: &Colouring) -> BitMatrix {
    let columns: Vec<BitVector> = c
        .matrix()
        .columns()
        .into_iter()
        .map(|col| col.push(col.weight() % 2 == 0).expect("k + 1 fits"))
        .collect();
    BitMatrix::from_columns(&columns).expect("non-empty")
}

/// The orientable extension as a colouring. When every colour already has
/// odd weight the appended row is zero and this returns
/// [`Error::NotSurjective`].
pub fn orientable_extension(c: &Colouring) -> Result<Colouring> {
    Colouring::new(c.polytope().clone(), orientable_extension_matrix(c))
}

/// `⋃_q W_q` over the maximal faces `q` of `K_P`, where `W_q` is the span of
/// the colours on `q`. Sorted.
pub fn stabilizer_union(c: &Colouring) -> Result<Vec<BitVector>> {
    if !c.is_proper() {
        return Err(Error::Improper);
    }
    let colours = c.matrix().columns();
    let mut union = BTreeSet::new();
    for face in c.polytope().complex().maximal_faces() {
        let mut span = vec![BitVector::zeros(c.rank())];
        for &f in &face {
            let extra: Vec<BitVector> = span.iter().map(|&s| s + colours[f - 1]).collect();
            span.extend(extra);
        }
        union.extend(span);
    }
    Ok(union.into_iter().collect())
}

/// Whether `⋃_q W_q = W`. If not, `c` extends some proper colouring.
pub fn stabilizer_union_covers(c: &Colouring) -> Result<bool> {
    Ok(stabilizer_union(c)?.len() == 1usize << c.rank())
}

/// One proper colouring `p ∘ c` for each `v0 ∈ W \ ⋃_q W_q`, where `p` is the
/// projection along `v0`. Ordered by `v0`.
pub fn base_colourings(c: &Colouring) -> Result<Vec<Colouring>> {
    let union = stabilizer_union(c)?;
    let k = c.rank();
    let mut out = Vec::new();
    for raw in 1u64..(1 << k) {
        let v0 = BitVector::from_raw(k, raw)?;
        if union.binary_search(&v0).is_ok() {
            continue;
        }
        let p = projection_along(&v0)?;
        out.push(Colouring::new(c.polytope().clone(), p.mul(c.matrix())?)?);
    }
    Ok(out)
}

/// Every `v ∈ Z2^m \ Row(Λ)`, ascending.
pub fn extension_candidates(c: &Colouring) -> Vec<BitVector> {
    let m = c.matrix().ncols();
    let rows = c.row_space();
    (0u64..1 << m)
        .map(|raw| BitVector::from_raw(m, raw).expect("fits"))
        .filter(|v| !rows.contains(v))
        .collect()
}

/// Representatives of the pairs `{ω, ε + ω}` in an orientable row space,
/// taking the smaller vector of each pair.
fn pair_representatives(c: &Colouring) -> Vec<BitVector> {
    let eps = BitVector::ones(c.matrix().ncols());
    let reps: BTreeSet<BitVector> = c.row_space().vectors().map(|w| w.min(w + eps)).collect();
    reps.into_iter().collect()
}

/// All rows `v` whose extension of a rational homology 3-sphere `M_λ` is
/// again one, sorted by `v`.
///
/// For one representative `ω` of each pair `{ω, ε + ω} ⊂ Row(Λ)`, the complex
/// `K_{ω+v}` must be connected with `β̃_1 = 0`.
pub fn enumerate_qhs_extensions(c: &Colouring) -> Result<Vec<ExtensionWitness>> {
    if c.polytope().dim() != 3 {
        return Err(Error::WrongDimension {
            expected: 3,
            found: c.polytope().dim(),
        });
    }
    if !c.is_qhs()? {
        return Err(Error::NotQhs);
    }
    let reps = pair_representatives(c);
    let complex = c.polytope().complex();
    let hits: Vec<BitVector> = extension_candidates(c)
        .into_par_iter()
        .filter(|v| {
            reps.iter().all(|&w| {
                let k = complex
                    .induced_subcomplex(&(w + *v))
                    .expect("lengths agree");
                k.is_connected() && k.reduced_betti().get(1) == 0
            })
        })
        .collect();
    hits.iter().map(|v| extend_by_row(c, v)).collect()
}

/// Combinatorial certificate that `M_c` bounds geometrically, for proper
/// colourings of the right-angled dodecahedron: `⋃_q W_q ≠ W`, i.e. `c` is an
/// extension of a proper colouring. `false` certifies nothing.
pub fn bounds_geometrically_certificate(c: &Colouring) -> Result<bool> {
    if !c.polytope().is_dodecahedron() {
        return Err(Error::NotDodecahedron(c.polytope().name().to_string()));
    }
    Ok(!stabilizer_union_covers(c)?)
}
