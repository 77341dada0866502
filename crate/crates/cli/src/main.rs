//! `smallcover`: checks, Betti numbers and extension search for colourings
//! of right-angled polytopes.
//!
//! Exit codes: 0 on success, 1 for unreadable or malformed input, 2 when the
//! input is valid but the command does not apply to it.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand};
use smallcover::extension::extension_candidates;
use smallcover::{
    dedupe, enumerate_qhs_extensions, extend_by_row, named, polytopes, Colouring, ColouringFile,
    Error,
};

#[derive(Parser)]
#[command(name = "smallcover", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Properness, rank, orientability, Betti numbers and QHS verdict.
    Check { file: PathBuf },
    /// Extensions by one extra row.
    Extend {
        file: PathBuf,
        /// Keep only rational homology sphere extensions (needs a QHS on a 3-polytope).
        #[arg(long)]
        qhs: bool,
        /// Group the kept extensions into equivalence classes.
        #[arg(long)]
        dedupe: bool,
        /// Write each kept colouring (or class representative) to this directory.
        #[arg(long, value_name = "DIR")]
        emit_dir: Option<PathBuf>,
    },
    /// Betti numbers of a cube colouring two ways.
    Cube { file: PathBuf },
    /// Print a built-in polytope or colouring file.
    Catalog { name: String },
}

/// Failure split by exit code.
enum Failure {
    Input(anyhow::Error),
    Inapplicable(anyhow::Error),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        match e.downcast_ref::<Error>() {
            Some(
                Error::Improper
                | Error::NonOrientable
                | Error::NotCube(_)
                | Error::NotDodecahedron(_)
                | Error::NotQhs
                | Error::WrongDimension { .. },
            ) => Failure::Inapplicable(e),
            _ => Failure::Input(e),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        anyhow::Error::new(e).into()
    }
}

type Outcome = Result<String, Failure>;

struct Loaded {
    file: ColouringFile,
    base_dir: PathBuf,
    colouring: Colouring,
}

fn load(path: &Path) -> Result<Loaded, Failure> {
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read {}", path.display()))
        .map_err(Failure::Input)?;
    let file = ColouringFile::parse(&text)
        .with_context(|| format!("{}", path.display()))
        .map_err(Failure::Input)?;
    let base_dir = path.parent().unwrap_or(Path::new(".")).to_path_buf();
    let colouring = file
        .resolve(&base_dir)
        .with_context(|| format!("{}", path.display()))
        .map_err(Failure::Input)?;
    Ok(Loaded {
        file,
        base_dir,
        colouring,
    })
}

fn check(path: &Path) -> Outcome {
    let c = load(path)?.colouring;
    let mut out = String::new();
    let proper = c.is_proper();
    writeln!(out, "proper: {proper}").unwrap();
    writeln!(out, "rank: {}", c.rank()).unwrap();
    writeln!(out, "small_cover: {}", c.is_small_cover()).unwrap();
    writeln!(out, "orientable: {}", c.is_orientable()).unwrap();
    if proper {
        writeln!(out, "betti: {}", c.manifold_betti()?).unwrap();
        writeln!(out, "qhs: {}", c.is_qhs()?).unwrap();
    } else {
        writeln!(out, "skipped: improper").unwrap();
    }
    Ok(out)
}

/// Polytope reference usable from any directory: the catalog name, or an
/// absolute path.
fn portable_polytope_ref(loaded: &Loaded) -> Result<String, Failure> {
    let reference = &loaded.file.polytope;
    if polytopes::by_name(reference).is_ok() {
        return Ok(reference.clone());
    }
    let path = loaded.base_dir.join(reference);
    let absolute = path
        .canonicalize()
        .with_context(|| format!("cannot resolve {}", path.display()))
        .map_err(Failure::Input)?;
    Ok(absolute.display().to_string())
}

fn extend(path: &Path, qhs: bool, group: bool, emit_dir: Option<&Path>) -> Outcome {
    let loaded = load(path)?;
    let c = &loaded.colouring;
    let mut out = String::new();
    let candidates = extension_candidates(c);
    writeln!(out, "candidates: {}", candidates.len()).unwrap();
    let kept: Vec<Colouring> = if qhs {
        let found = enumerate_qhs_extensions(c)?;
        writeln!(out, "qhs_extensions: {}", found.len()).unwrap();
        found.into_iter().map(|w| w.extended).collect()
    } else {
        let all = candidates
            .iter()
            .map(|v| extend_by_row(c, v).map(|w| w.extended))
            .collect::<Result<Vec<_>, _>>()?;
        writeln!(out, "extensions: {}", all.len()).unwrap();
        all
    };
    let emitted: Vec<Colouring> = if group {
        let classes = dedupe(&kept)?;
        writeln!(out, "dj_classes: {}", classes.len()).unwrap();
        for (i, class) in classes.iter().enumerate() {
            write!(out, "class {}\n{}", i + 1, class.representative.matrix()).unwrap();
        }
        classes.into_iter().map(|k| k.representative).collect()
    } else {
        kept
    };
    if let Some(dir) = emit_dir {
        let polytope = portable_polytope_ref(&loaded)?;
        fs::create_dir_all(dir)
            .with_context(|| format!("cannot create {}", dir.display()))
            .map_err(Failure::Input)?;
        for (i, e) in emitted.iter().enumerate() {
            let name = format!("{}-ext-{}", loaded.file.name, i + 1);
            let file = ColouringFile {
                name: name.clone(),
                polytope: polytope.clone(),
                matrix: e.matrix().clone(),
            };
            let target = dir.join(format!("{name}.col"));
            fs::write(&target, file.to_file_string())
                .with_context(|| format!("cannot write {}", target.display()))
                .map_err(Failure::Input)?;
        }
        writeln!(out, "emitted: {}", emitted.len()).unwrap();
    }
    Ok(out)
}

fn cube(path: &Path) -> Outcome {
    let c = load(path)?.colouring;
    let tsets = c.cube_betti()?;
    let direct = c.manifold_betti()?;
    let mut out = String::new();
    writeln!(out, "betti_tsets: {tsets}").unwrap();
    writeln!(out, "betti_eq1: {direct}").unwrap();
    writeln!(out, "agree: {}", tsets == direct).unwrap();
    writeln!(out, "qhs: {}", c.cube_is_qhs()?).unwrap();
    Ok(out)
}

fn catalog(name: &str) -> Outcome {
    match polytopes::by_name(name) {
        Ok(p) => return Ok(p.to_file_string()),
        Err(Error::UnknownCatalogEntry(_)) => {}
        Err(e) => return Err(Failure::Input(e.into())),
    }
    named::file_by_name(name)
        .map(|f| f.to_file_string())
        .map_err(|_| {
            Failure::Input(anyhow::anyhow!(
                "unknown catalog entry `{name}` (polytopes: simplex-N, cube-N, dodecahedron; colourings: {})",
                named::NAMES.join(", ")
            ))
        })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match &cli.command {
        Command::Check { file } => check(file),
        Command::Extend {
            file,
            qhs,
            dedupe,
            emit_dir,
        } => extend(file, *qhs, *dedupe, emit_dir.as_deref()),
        Command::Cube { file } => cube(file),
        Command::Catalog { name } => catalog(name),
    };
    match outcome {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Inapplicable(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
