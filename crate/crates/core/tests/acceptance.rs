//! Acceptance suite. Runs every criterion, prints one `PASS`/`FAIL` line per
//! criterion and exits non-zero if any failed.
//!
//! Run with `cargo test --release --test acceptance`.

use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::sync::{Arc, OnceLock};
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use smallcover::extension::{extension_candidates, orientable_extension_matrix};
use smallcover::gf2::rank_of;
use smallcover::{
    base_colourings, bounds_geometrically_certificate, colour_fixing_symmetry_group,
    coloured_symmetry_group, dedupe, dj_equivalent, enumerate_qhs_extensions, extend_by_row,
    is_extension_of, n_cube, named, orientable_extension, polytopes, proper_colourings,
    stabilizer_union_covers, BitMatrix, BitVector, Colouring, DJClass, ExtensionWitness,
    PolytopeCombinatorics,
};

const SEED: u64 = 0x5eed_c010_0a11;

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn within(label: &str, start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    if took > limit {
        return Err(format!("{label} took {took:.2?}, limit {limit:?}"));
    }
    Ok(())
}

struct Census {
    extensions: Vec<ExtensionWitness>,
    classes: Vec<DJClass>,
    elapsed: Duration,
}

fn census() -> &'static Census {
    static CENSUS: OnceLock<Census> = OnceLock::new();
    CENSUS.get_or_init(|| {
        let start = Instant::now();
        let gs = named::garrison_scott();
        let extensions = enumerate_qhs_extensions(&gs).expect("Λ is a QHS");
        let extended: Vec<Colouring> = extensions.iter().map(|w| w.extended.clone()).collect();
        let classes = dedupe(&extended).expect("same polytope");
        Census {
            extensions,
            classes,
            elapsed: start.elapsed(),
        }
    })
}

fn cube3_orientable_qhs_rank4() -> &'static Vec<Colouring> {
    static FOUND: OnceLock<Vec<Colouring>> = OnceLock::new();
    FOUND.get_or_init(|| {
        let cube = Arc::new(n_cube(3));
        proper_colourings(&cube, 4)
            .into_iter()
            .filter(|c| c.is_orientable() && c.is_qhs().unwrap())
            .collect()
    })
}

/// Orientable proper colourings of 3-polytopes touched by criteria 1–5.
fn three_dimensional_census() -> Vec<Colouring> {
    let gs = named::garrison_scott();
    let mut out = vec![gs.clone(), named::m_extension(), named::hantzsche_wendt()];
    for v in extension_candidates(&gs) {
        out.push(extend_by_row(&gs, &v).unwrap().extended);
    }
    let cube = Arc::new(n_cube(3));
    for rank in 1..=6 {
        out.extend(
            proper_colourings(&cube, rank)
                .into_iter()
                .filter(Colouring::is_orientable),
        );
    }
    out
}

/// Random proper colouring of the given rank, built facet by facet so that
/// every face stays independent. `None` after too many dead ends.
fn random_proper(
    polytope: &Arc<PolytopeCombinatorics>,
    rank: usize,
    rng: &mut ChaCha8Rng,
) -> Option<Colouring> {
    let m = polytope.facet_count();
    let faces = polytope.complex().maximal_faces();
    'restart: for _ in 0..200 {
        let mut colours: Vec<Option<BitVector>> = vec![None; m];
        for facet in 1..=m {
            let touching: Vec<&Vec<usize>> = faces.iter().filter(|f| f.contains(&facet)).collect();
            let mut placed = false;
            for _ in 0..64 {
                let raw = rng.gen_range(1u64..1 << rank);
                let c = BitVector::from_raw(rank, raw).unwrap();
                let ok = touching.iter().all(|f| {
                    let mut vs: Vec<BitVector> = f.iter().filter_map(|&g| colours[g - 1]).collect();
                    vs.push(c);
                    rank_of(&vs) == vs.len()
                });
                if ok {
                    colours[facet - 1] = Some(c);
                    placed = true;
                    break;
                }
            }
            if !placed {
                continue 'restart;
            }
        }
        let colours: Vec<BitVector> = colours.into_iter().map(Option::unwrap).collect();
        if rank_of(&colours) != rank {
            continue;
        }
        let c =
            Colouring::new(polytope.clone(), BitMatrix::from_columns(&colours).unwrap()).ok()?;
        if c.is_proper() {
            return Some(c);
        }
    }
    None
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let gs = named::garrison_scott();
    ensure!(
        gs.polytope().is_dodecahedron(),
        "polytope is not the dodecahedron"
    );
    ensure!(gs.is_proper(), "Λ is improper");
    ensure!(gs.is_orientable(), "Λ is non-orientable");
    ensure!(
        gs.rank() == 3 && gs.is_small_cover(),
        "Λ is not a small cover"
    );
    let betti = gs.manifold_betti().map_err(|e| e.to_string())?;
    ensure!(betti.entries() == [1, 0, 0, 1], "betti {betti}");
    ensure!(gs.is_qhs().unwrap(), "Λ is not a QHS");
    within("criterion 1", start, Duration::from_secs(1))?;
    Ok(format!("betti {betti}"))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let gs = named::garrison_scott();
    let v = BitVector::from_bits(&named::M_EXTRA_ROW).unwrap();
    let m = extend_by_row(&gs, &v).map_err(|e| e.to_string())?.extended;
    ensure!(
        m == named::m_extension(),
        "built-in M differs from extend_by_row"
    );
    ensure!(m.is_proper(), "M is improper");
    ensure!(m.is_orientable(), "M is non-orientable");
    ensure!(m.rank() == 4, "rank {}", m.rank());
    ensure!(m.is_qhs().unwrap(), "M is not a QHS");
    ensure!(is_extension_of(&m, &gs).unwrap(), "M does not extend Λ");
    ensure!(
        bounds_geometrically_certificate(&m).unwrap(),
        "no certificate for M"
    );
    within("criterion 2", start, Duration::from_secs(1))?;
    Ok(format!("betti {}", m.manifold_betti().unwrap()))
}

fn criterion_3a() -> Outcome {
    let census = census();
    ensure!(
        census.classes.len() == 7,
        "{} classes from {} extensions",
        census.classes.len(),
        census.extensions.len()
    );
    let m = named::m_extension();
    let with_m = census
        .classes
        .iter()
        .filter(|c| dj_equivalent(&c.representative, &m).unwrap())
        .count();
    ensure!(with_m == 1, "{with_m} classes contain M");
    ensure!(
        census.elapsed <= Duration::from_secs(60),
        "census took {:.2?}",
        census.elapsed
    );
    Ok(format!(
        "{} extensions, 7 classes, {:.2?}",
        census.extensions.len(),
        census.elapsed
    ))
}

fn criterion_3b() -> Outcome {
    let census = census();
    let stabilizers: Vec<usize> = census
        .classes
        .iter()
        .map(|c| coloured_symmetry_group(&c.representative).order())
        .collect();
    let colour_fixing: Vec<usize> = census
        .classes
        .iter()
        .map(|c| colour_fixing_symmetry_group(&c.representative).order())
        .collect();
    ensure!(
        stabilizers.iter().all(|&o| o == 1),
        "row-space stabilizer orders {stabilizers:?} (colour-fixing orders {colour_fixing:?})"
    );
    Ok(format!("orders {stabilizers:?}"))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let found = cube3_orientable_qhs_rank4();
    ensure!(
        !found.is_empty(),
        "no orientable QHS rank-4 colouring of the 3-cube"
    );
    let classes = dedupe(found).unwrap();
    ensure!(classes.len() == 1, "{} classes", classes.len());
    let rep = &classes[0].representative;
    ensure!(
        dj_equivalent(rep, &named::hantzsche_wendt()).unwrap(),
        "built-in Hantzsche-Wendt colouring is in another class"
    );
    ensure!(
        stabilizer_union_covers(rep).unwrap(),
        "stabilizer union misses a vector"
    );
    let bases = base_colourings(rep).unwrap();
    ensure!(bases.is_empty(), "{} base colourings", bases.len());
    within("criterion 4", start, Duration::from_secs(60))?;
    Ok(format!("{} colourings, 1 class", found.len()))
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut exhaustive = 0;
    for n in 2..=3 {
        let cube = Arc::new(n_cube(n));
        for rank in 1..=2 * n {
            for c in proper_colourings(&cube, rank) {
                let a = c.cube_betti().unwrap();
                let b = c.manifold_betti().unwrap();
                ensure!(a == b, "{c:?}: T-sets {a}, subcomplexes {b}");
                exhaustive += 1;
            }
        }
    }
    let cube = Arc::new(n_cube(4));
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut random = 0;
    while random < 1000 {
        let rank = rng.gen_range(4..=8);
        let Some(c) = random_proper(&cube, rank, &mut rng) else {
            continue;
        };
        let a = c.cube_betti().unwrap();
        let b = c.manifold_betti().unwrap();
        ensure!(a == b, "{c:?}: T-sets {a}, subcomplexes {b}");
        random += 1;
    }
    within("criterion 5", start, Duration::from_secs(300))?;
    Ok(format!("{exhaustive} exhaustive, {random} random"))
}

fn criterion_6() -> Outcome {
    let start = Instant::now();
    for n in 1..=6 {
        let betti = named::canonical_simplex(n).manifold_betti().unwrap();
        let mut expected = vec![0; n + 1];
        expected[0] = 1;
        expected[n] = 1;
        ensure!(betti.entries() == expected, "n = {n}: betti {betti}");
    }
    within("criterion 6", start, Duration::from_secs(10))?;
    Ok("n = 1..6".into())
}

fn criterion_7(census: &[Colouring]) -> Outcome {
    let mut pairs = 0;
    for c in census {
        let eps = BitVector::ones(c.matrix().ncols());
        for omega in c.row_space().vectors() {
            if omega.is_zero() || omega.is_ones() {
                continue;
            }
            let a = c.subcomplex(&omega).unwrap().is_qhp();
            let b = c.subcomplex(&(omega + eps)).unwrap().is_qhp();
            ensure!(a == b, "{c:?}, ω = {omega}");
            pairs += 1;
        }
    }
    Ok(format!("{} colourings, {pairs} pairs", census.len()))
}

fn criterion_8(census: &[Colouring]) -> Outcome {
    let mut qhs = 0;
    for c in census {
        let fast = c.is_qhs_fast().map_err(|e| format!("{c:?}: {e}"))?;
        ensure!(fast == c.is_qhs().unwrap(), "{c:?}");
        qhs += usize::from(fast);
    }
    Ok(format!("{} colourings, {qhs} QHS", census.len()))
}

fn criterion_9() -> Outcome {
    let check = |c: &Colouring| -> Result<(), String> {
        let delta = orientable_extension(c).map_err(|e| format!("{c:?}: {e}"))?;
        ensure!(
            delta.matrix() == &orientable_extension_matrix(c),
            "{c:?}: matrix mismatch"
        );
        ensure!(delta.is_orientable(), "{c:?}: δ non-orientable");
        ensure!(
            is_extension_of(&delta, c).unwrap(),
            "{c:?}: δ is not an extension"
        );
        Ok(())
    };
    let klein = named::klein_square();
    ensure!(
        !klein.is_orientable(),
        "Klein-bottle colouring is orientable"
    );
    check(&klein)?;

    let catalog: Vec<Arc<PolytopeCombinatorics>> = [
        "simplex-2",
        "simplex-3",
        "simplex-4",
        "cube-2",
        "cube-3",
        "cube-4",
        "dodecahedron",
    ]
    .iter()
    .map(|name| Arc::new(polytopes::by_name(name).unwrap()))
    .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 9);
    let mut tested = 0;
    while tested < 100 {
        let p = &catalog[rng.gen_range(0..catalog.len())];
        let top = p.facet_count().min(p.dim() + 3);
        let rank = rng.gen_range(p.dim()..=top);
        let Some(c) = random_proper(p, rank, &mut rng) else {
            continue;
        };
        if c.is_orientable() {
            continue;
        }
        check(&c)?;
        tested += 1;
    }
    Ok(format!("Klein bottle and {tested} random"))
}

fn criterion_10() -> Outcome {
    let census = census();
    for w in &census.extensions {
        let additive = w.betti_by_additivity().unwrap();
        let direct = w.extended.manifold_betti().unwrap();
        ensure!(
            additive == direct,
            "v = {}: additivity {additive}, direct {direct}",
            w.added_row
        );
    }
    Ok(format!("{} extensions", census.extensions.len()))
}

fn run(label: &str, f: impl FnOnce() -> Outcome) -> bool {
    let outcome = panic::catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
        let msg = e
            .downcast_ref::<String>()
            .cloned()
            .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
            .unwrap_or_default();
        Err(format!("panicked: {msg}"))
    });
    match outcome {
        Ok(detail) => {
            println!("PASS criterion {label}: {detail}");
            true
        }
        Err(detail) => {
            println!("FAIL criterion {label}: {detail}");
            false
        }
    }
}

fn main() -> ExitCode {
    let three_dim = OnceLock::new();
    let three_dim = || three_dim.get_or_init(three_dimensional_census).as_slice();
    let results = [
        run("1 (Garrison-Scott small cover)", criterion_1),
        run("2 (extension M)", criterion_2),
        run("3a (census: 7 classes, one contains M)", criterion_3a),
        run(
            "3b (census: trivial coloured symmetry groups)",
            criterion_3b,
        ),
        run("4 (Hantzsche-Wendt)", criterion_4),
        run("5 (cube Betti numbers)", criterion_5),
        run("6 (sphere series)", criterion_6),
        run("7 (duality)", || criterion_7(three_dim())),
        run("8 (fast QHS test)", || criterion_8(three_dim())),
        run("9 (orientable extension)", criterion_9),
        run("10 (Betti additivity)", criterion_10),
    ];
    let failed = results.iter().filter(|ok| !**ok).count();
    println!(
        "acceptance: {} passed, {failed} failed",
        results.len() - failed
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
