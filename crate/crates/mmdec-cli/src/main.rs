//! mmdec: exact workbench for rank decompositions of the 2x2 matrix
//! multiplication tensor.
//!
//! Exit status: 0 on success / verified, 1 on a computed "no" (failed
//! verification, tensor outside the span, nonzero derivation), 2 on usage
//! and format errors.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use mmdec::catalog::{self, named_decomposition, normalize_triple, AnyDecomposition, PointTriple};
use mmdec::invariants::{coordinates_in_basis, invariant_basis, invariant_dimension};
use mmdec::scalar::{Cyclotomic12, Field, FieldKind, Rational};
use mmdec::symmetry::stabilizer_within;

use mmdec_cli::io::{self, AnyElement, AnyGroup, IoError};
use mmdec_cli::report;

const DEFAULT_SEED: u64 = 12;

#[derive(Parser)]
#[command(
    name = "mmdec",
    about = "Exact workbench for rank decompositions of the matrix multiplication tensor",
    version
)]
struct Cli {
    /// Seed for the randomized spot-checks (reports are deterministic for a
    /// fixed seed).
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Coefficient field used when building named decompositions.
    #[arg(long, global = true, value_parser = parse_field)]
    field: Option<FieldKind>,
    #[command(subcommand)]
    command: Command,
}

fn parse_field(s: &str) -> Result<FieldKind, String> {
    FieldKind::from_str(s).map_err(|_| format!("unknown field `{s}` (rational|cyclotomic12)"))
}

#[derive(Subcommand)]
enum Command {
    /// Construct a named decomposition and print or save it as JSON.
    Build(BuildArgs),
    /// Check that a decomposition expands exactly to the matrix
    /// multiplication tensor.
    Verify {
        /// Decomposition file or builtin name.
        input: String,
    },
    /// Apply a symmetry element to a decomposition.
    Act {
        input: String,
        /// JSON file holding the symmetry element.
        #[arg(long)]
        element: PathBuf,
        /// Write the result here instead of stdout.
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compute the stabilizer of a decomposition within a candidate group.
    Stabilizer {
        input: String,
        /// Builtin group name or JSON group file.
        #[arg(long)]
        group: String,
    },
    /// Invariant-subspace computations for a candidate group.
    Invariants {
        #[arg(long)]
        group: String,
        /// Also print a basis of the invariant subspace.
        #[arg(long)]
        basis: bool,
        /// Express this decomposition's expansion in the invariant basis.
        #[arg(long)]
        coords_of: Option<String>,
    },
    /// Check the nine derivation annihilations on a decomposition's
    /// expansion.
    LieCheck { input: String },
    /// Produce the full structural report for a decomposition.
    Report { input: String },
}

#[derive(Args)]
struct BuildArgs {
    /// One of the builtin names (see the README) or "strassen-projective"
    /// with --points.
    name: String,
    /// Point triples for the projective family, as inline JSON or a path:
    /// {"U": [["1","0"],["0","1"],["-1","-1"]], "V": ..., "W": ...}
    #[arg(long)]
    points: Option<String>,
    /// Write the result here instead of stdout.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

enum CliError {
    /// exit status 2
    Usage(String),
    /// exit status 1
    Failed(String),
}

impl From<IoError> for CliError {
    fn from(e: IoError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<mmdec::Error> for CliError {
    fn from(e: mmdec::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            println!("{msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Build(args) => build(args, cli.field),
        Command::Verify { input } => verify(&input),
        Command::Act {
            input,
            element,
            output,
        } => act(&input, &element, output.as_deref()),
        Command::Stabilizer { input, group } => stabilizer(&input, &group),
        Command::Invariants {
            group,
            basis,
            coords_of,
        } => invariants(&group, basis, coords_of.as_deref()),
        Command::LieCheck { input } => lie_check(&input),
        Command::Report { input } => run_report(&input, cli.seed),
    }
}

/// Resolves a CLI argument as a file if one exists at that path, otherwise
/// as a builtin name.
fn resolve_decomposition(input: &str) -> Result<AnyDecomposition, CliError> {
    let path = Path::new(input);
    if path.exists() {
        return Ok(io::load_decomposition(path)?);
    }
    named_decomposition(input).map_err(|_| {
        CliError::Usage(format!(
            "`{input}` is neither a readable file nor a builtin decomposition name"
        ))
    })
}

fn emit(text: String, output: Option<&Path>) -> Result<(), CliError> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn build(args: BuildArgs, field: Option<FieldKind>) -> Result<(), CliError> {
    let dec = if let Some(points) = &args.points {
        if args.name != "strassen-projective" {
            return Err(CliError::Usage(
                "--points applies only to strassen-projective".to_string(),
            ));
        }
        let triples = parse_points(points)?;
        AnyDecomposition::Rational(catalog::projective_strassen(
            &triples[0],
            &triples[1],
            &triples[2],
        ))
    } else {
        named_decomposition(&args.name)?
    };
    let dec = match (field, &dec) {
        (Some(FieldKind::Cyclotomic12), AnyDecomposition::Rational(_)) => {
            AnyDecomposition::Cyclotomic(dec.into_cyclotomic())
        }
        (Some(FieldKind::Rational), AnyDecomposition::Cyclotomic(_)) => {
            return Err(CliError::Usage(
                "this decomposition lives over cyclotomic12 and cannot be coerced to rational"
                    .to_string(),
            ));
        }
        _ => dec,
    };
    emit(io::render_decomposition(&dec), args.output.as_deref())
}

fn parse_points(spec: &str) -> Result<[PointTriple<Rational>; 3], CliError> {
    let text = if spec.trim_start().starts_with('{') {
        spec.to_string()
    } else {
        std::fs::read_to_string(spec)
            .map_err(|e| CliError::Usage(format!("cannot read points file {spec}: {e}")))?
    };
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| CliError::Usage(format!("malformed points JSON: {e}")))?;
    let mut triples = Vec::new();
    for space in ["U", "V", "W"] {
        let Some(Value::Array(points)) = value.get(space) else {
            return Err(CliError::Usage(format!(
                "points JSON must contain an array for space {space}"
            )));
        };
        if points.len() != 3 {
            return Err(CliError::Usage(format!(
                "space {space} must list exactly 3 points"
            )));
        }
        let mut parsed: Vec<Vec<Rational>> = Vec::new();
        for p in points {
            let Value::Array(coords) = p else {
                return Err(CliError::Usage(format!(
                    "each point of {space} must be an array of scalar strings"
                )));
            };
            let mut point = Vec::new();
            for c in coords {
                let Value::String(s) = c else {
                    return Err(CliError::Usage(
                        "point coordinates must be rational strings".to_string(),
                    ));
                };
                point.push(Rational::from_str(s.trim()).map_err(|e| {
                    CliError::Usage(format!("unparseable coordinate `{s}`: {e}"))
                })?);
            }
            parsed.push(point);
        }
        triples.push(
            normalize_triple(&parsed[0], &parsed[1], &parsed[2])
                .map_err(|e| CliError::Usage(e.to_string()))?,
        );
    }
    Ok([triples[0].clone(), triples[1].clone(), triples[2].clone()])
}

fn format_mismatch<K: Field>(m: &mmdec::tensor::Mismatch<K>) -> String {
    format!(
        "entry (({},{}),({},{}),({},{})): found {}, expected {}",
        m.index[0].0,
        m.index[0].1,
        m.index[1].0,
        m.index[1].1,
        m.index[2].0,
        m.index[2].1,
        m.found,
        m.expected
    )
}

fn verify(input: &str) -> Result<(), CliError> {
    let dec = resolve_decomposition(input)?;
    let (term_count, n, ok, mismatch) = match &dec {
        AnyDecomposition::Rational(d) => {
            let r = d.verify_equals_matmul();
            (r.term_count, d.n(), r.ok, r.mismatch.as_ref().map(format_mismatch))
        }
        AnyDecomposition::Cyclotomic(d) => {
            let r = d.verify_equals_matmul();
            (r.term_count, d.n(), r.ok, r.mismatch.as_ref().map(format_mismatch))
        }
    };
    let verdict = format!(
        "{term_count} terms, equals M<{n}>: {}",
        if ok { "yes" } else { "no" }
    );
    if ok {
        println!("{verdict}");
        Ok(())
    } else {
        let detail = mismatch.unwrap_or_default();
        Err(CliError::Failed(format!("{verdict}\nfirst mismatch at {detail}")))
    }
}

fn load_any_element(path: &Path) -> Result<AnyElement, CliError> {
    Ok(io::load_element(path)?)
}

fn act(input: &str, element: &Path, output: Option<&Path>) -> Result<(), CliError> {
    let dec = resolve_decomposition(input)?;
    let element = load_any_element(element)?;
    let element_n = match &element {
        AnyElement::Rational(e) => e.n(),
        AnyElement::Cyclotomic(e) => e.n(),
    };
    if dec.n() != element_n {
        return Err(CliError::Usage(format!(
            "element acts on {0}x{0} matrices but the decomposition has n = {1}",
            element_n,
            dec.n()
        )));
    }
    // coerce to the larger field when the two disagree
    let moved = match (dec, element) {
        (AnyDecomposition::Rational(d), AnyElement::Rational(e)) => {
            AnyDecomposition::Rational(e.apply_decomposition(&d))
        }
        (AnyDecomposition::Cyclotomic(d), AnyElement::Cyclotomic(e)) => {
            AnyDecomposition::Cyclotomic(e.apply_decomposition(&d))
        }
        (AnyDecomposition::Rational(d), AnyElement::Cyclotomic(e)) => {
            let d = d.map_field(&Cyclotomic12::from_rational);
            AnyDecomposition::Cyclotomic(e.apply_decomposition(&d))
        }
        (AnyDecomposition::Cyclotomic(d), AnyElement::Rational(e)) => {
            let e = e.map_field(&Cyclotomic12::from_rational);
            AnyDecomposition::Cyclotomic(e.apply_decomposition(&d))
        }
    };
    emit(io::render_decomposition(&moved), output)
}

fn resolve_group_rational(spec: &str) -> Result<AnyGroup, CliError> {
    let path = Path::new(spec);
    if path.exists() {
        return Ok(io::load_group(path)?);
    }
    if catalog::GROUP_NAMES.contains(&spec) {
        return Ok(AnyGroup::Rational(catalog::builtin_group::<Rational>(
            spec, None,
        )?));
    }
    Err(CliError::Usage(format!(
        "`{spec}` is neither a readable file nor a builtin group name"
    )))
}

fn stabilizer(input: &str, group: &str) -> Result<(), CliError> {
    let dec = resolve_decomposition(input)?;
    let group = resolve_group_rational(group)?;
    let (group_order, stab_order) = match (&dec, &group) {
        (AnyDecomposition::Rational(d), AnyGroup::Rational(g)) => {
            (g.order(), stabilizer_within(d, g)?.order())
        }
        (AnyDecomposition::Cyclotomic(d), AnyGroup::Rational(g)) => {
            let g = g.map_field(&Cyclotomic12::from_rational)?;
            (g.order(), stabilizer_within(d, &g)?.order())
        }
        (AnyDecomposition::Rational(d), AnyGroup::Cyclotomic(g)) => {
            let d = d.map_field(&Cyclotomic12::from_rational);
            (g.order(), stabilizer_within(&d, g)?.order())
        }
        (AnyDecomposition::Cyclotomic(d), AnyGroup::Cyclotomic(g)) => {
            (g.order(), stabilizer_within(d, g)?.order())
        }
    };
    println!("candidate order: {group_order}");
    println!("stabilizer order: {stab_order}");
    Ok(())
}

fn invariants(group: &str, basis: bool, coords_of: Option<&str>) -> Result<(), CliError> {
    let group = resolve_group_rational(group)?;
    match group {
        AnyGroup::Rational(g) => {
            println!("group order: {}", g.order());
            println!("invariant dimension: {}", invariant_dimension(&g)?);
            if basis || coords_of.is_some() {
                let b = invariant_basis(&g)?;
                if basis {
                    for (i, t) in b.iter().enumerate() {
                        let entries: Vec<String> = nonzero_entries(t);
                        println!("basis[{i}]: {}", entries.join(" "));
                    }
                }
                if let Some(target) = coords_of {
                    let dec = resolve_decomposition(target)?;
                    let AnyDecomposition::Rational(d) = dec else {
                        return Err(CliError::Usage(
                            "coordinates over a rational basis need a rational decomposition"
                                .to_string(),
                        ));
                    };
                    if d.n() != g.n() {
                        return Err(CliError::Usage("dimension mismatch".to_string()));
                    }
                    match coordinates_in_basis(&d.expand(), &b) {
                        Ok(coords) => {
                            let rendered: Vec<String> =
                                coords.iter().map(|c| c.to_string()).collect();
                            println!("coordinates: [{}]", rendered.join(", "));
                        }
                        Err(mmdec::Error::NotInSpan) => {
                            return Err(CliError::Failed(
                                "not in span of the invariant basis".to_string(),
                            ));
                        }
                        Err(e) => return Err(e.into()),
                    }
                }
            }
        }
        AnyGroup::Cyclotomic(g) => {
            println!("group order: {}", g.order());
            println!("invariant dimension: {}", invariant_dimension(&g)?);
            if basis || coords_of.is_some() {
                return Err(CliError::Usage(
                    "--basis/--coords-of are supported for rational groups".to_string(),
                ));
            }
        }
    }
    Ok(())
}

fn nonzero_entries<K: Field>(t: &mmdec::Tensor3<K>) -> Vec<String> {
    let n = t.n();
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    for p in 0..n {
                        for q in 0..n {
                            let v = t.get((i, j), (k, l), (p, q));
                            if !v.is_zero() {
                                out.push(format!("(({i},{j}),({k},{l}),({p},{q}))={v}"));
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn lie_check(input: &str) -> Result<(), CliError> {
    let dec = resolve_decomposition(input)?;
    let (text, all_zero) = report::lie_check(&dec);
    print!("{text}");
    if all_zero {
        Ok(())
    } else {
        Err(CliError::Failed("derivations do not vanish".to_string()))
    }
}

fn run_report(input: &str, seed: u64) -> Result<(), CliError> {
    let dec = resolve_decomposition(input)?;
    let (text, ok) = report::run_report(input, &dec, seed);
    print!("{text}");
    if ok {
        Ok(())
    } else {
        Err(CliError::Failed("decomposition does not verify".to_string()))
    }
}
