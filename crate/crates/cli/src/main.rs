use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mixed_hermitian::census::census_report;
use mixed_hermitian::multigraph::{enumerate_simple_cycles, parse_mmg, parse_mmg_with, serialize_mmg, ParseOptions};
use mixed_hermitian::spectral::{
    antispectral_to_underlying, char_poly_det, char_poly_sachs, cospectral_to_underlying, hermitian_matrix,
    is_antispectral, is_cospectral, poly_from_roots, spectrum, SACHS_MAX_ORDER,
};
use mixed_hermitian::switching::{
    apply_gauge, cycle_weight, decide_switching_equivalence, is_positive, verify_witness, EquivalenceWitness,
    GaugeAssignment,
};
use mixed_hermitian::{BigInt, Error, MixedMultigraph, Poly};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "mixherm",
    version,
    about = "Hermitian spectra and three-way switching of mixed multigraphs"
)]
struct Cli {
    /// Merge opposite arcs into undirected edges instead of rejecting them.
    #[arg(long, global = true)]
    merge_digons: bool,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Write the result to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Spanning-tree selection.
    #[arg(long, global = true, value_enum, default_value_t = TreeChoice::Auto)]
    tree: TreeChoice,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum TreeChoice {
    /// Breadth-first tree from vertex 0.
    Auto,
}

#[derive(Subcommand)]
enum Command {
    /// Exact characteristic polynomial, highest degree first.
    Charpoly {
        file: PathBuf,
        /// Compute by both engines and fail if they differ.
        #[arg(long)]
        check: bool,
    },
    /// Eigenvalues in ascending order.
    Spectrum { file: PathBuf },
    /// Decide switching equivalence and print a witness.
    Equiv { first: PathBuf, second: PathBuf },
    /// Apply a three-way switching given as `vertex:exponent,...`.
    Switch {
        file: PathBuf,
        #[arg(long, value_name = "SPEC")]
        gauge: String,
    },
    /// Reverse every arc.
    Converse { file: PathBuf },
    /// Classify all mixed graphs over the file's (undirected) multigraph.
    Census { file: PathBuf },
    /// Run the invariant checks on one graph.
    Verify { file: PathBuf },
}

/// Exit status plus what to print.
enum Failure {
    /// A well-formed negative answer: exit 1.
    Negative(String),
    /// Usage, I/O, parse or structural error: exit 2.
    Fatal(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::InadmissibleGauge { .. } => Failure::Negative(e.to_string()),
            _ => Failure::Fatal(e.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Fatal(e.to_string())
    }
}

/// Output text and whether it represents a negative result.
struct Report {
    text: String,
    negative: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, negative: false }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|report| {
        emit(cli.out.as_deref(), &report.text)?;
        Ok(report.negative)
    });
    match result {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::from(1),
        Err(Failure::Negative(msg)) => {
            eprintln!("mixherm: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Fatal(msg)) => {
            eprintln!("mixherm: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), Failure> {
    let mut text = text.to_string();
    if !text.ends_with('\n') {
        text.push('\n');
    }
    match out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn load(cli: &Cli, path: &Path) -> Result<MixedMultigraph, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Fatal(format!("{}: {e}", path.display())))?;
    let opts = ParseOptions {
        merge_digons: cli.merge_digons,
    };
    parse_mmg_with(&text, opts).map_err(|e| Failure::Fatal(format!("{}: {e}", path.display())))
}

fn pretty(value: serde_json::Value) -> String {
    serde_json::to_string_pretty(&value).expect("JSON values serialize")
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    match &cli.command {
        Command::Charpoly { file, check } => {
            let g = load(cli, file)?;
            let det = char_poly_det(&hermitian_matrix::<BigInt>(&g))?;
            if !check {
                let text = if cli.json {
                    pretty(json!({ "char_poly": det.to_string() }))
                } else {
                    det.to_string()
                };
                return Ok(Report::ok(text));
            }
            let sachs: Poly = char_poly_sachs(&g)?;
            let agree = sachs == det;
            let text = if cli.json {
                pretty(json!({ "determinant": det.to_string(), "sachs": sachs.to_string(), "agree": agree }))
            } else {
                format!(
                    "determinant: {det}\nsachs: {sachs}\n{}",
                    if agree { "agree" } else { "MISMATCH" }
                )
            };
            Ok(Report { text, negative: !agree })
        }
        Command::Spectrum { file } => {
            let values = spectrum(&load(cli, file)?)?;
            let text = if cli.json {
                pretty(json!({ "eigenvalues": values.iter().map(|&x| round12(x)).collect::<Vec<_>>() }))
            } else {
                values
                    .iter()
                    .map(|&x| format_eigenvalue(x))
                    .collect::<Vec<_>>()
                    .join(" ")
            };
            Ok(Report::ok(text))
        }
        Command::Equiv { first, second } => {
            let a = load(cli, first)?;
            let b = load(cli, second)?;
            let witness = decide_switching_equivalence(&a, &b)?;
            let text = if cli.json {
                match &witness {
                    EquivalenceWitness::Equivalent {
                        gauge,
                        converse_applied,
                    } => pretty(json!({
                        "equivalent": true,
                        "gauge": gauge.to_string(),
                        "converse": converse_applied,
                    })),
                    EquivalenceWitness::NotEquivalent { reason } => {
                        pretty(json!({ "equivalent": false, "reason": reason }))
                    }
                }
            } else {
                witness.to_string()
            };
            Ok(Report {
                text,
                negative: !witness.is_equivalent(),
            })
        }
        Command::Switch { file, gauge } => {
            let g = load(cli, file)?;
            let gauge = GaugeAssignment::parse(gauge, g.order()).map_err(|e| Failure::Fatal(e.to_string()))?;
            let switched = apply_gauge(&g, &gauge)?;
            Ok(Report::ok(graph_output(cli, &switched)))
        }
        Command::Converse { file } => Ok(Report::ok(graph_output(cli, &load(cli, file)?.converse()))),
        Command::Census { file } => {
            let report = census_report(&load(cli, file)?)?;
            Ok(Report {
                text: report.to_json(),
                negative: !report.checks.passed(),
            })
        }
        Command::Verify { file } => {
            let failures = verify(&load(cli, file)?)?;
            let text = if cli.json {
                pretty(json!({ "ok": failures.is_empty(), "failures": failures }))
            } else if failures.is_empty() {
                "ok".to_string()
            } else {
                failures
                    .iter()
                    .map(|f| format!("FAIL {f}"))
                    .collect::<Vec<_>>()
                    .join("\n")
            };
            Ok(Report {
                text,
                negative: !failures.is_empty(),
            })
        }
    }
}

fn graph_output(cli: &Cli, g: &MixedMultigraph) -> String {
    let text = serialize_mmg(g);
    if cli.json {
        pretty(json!({ "mmg": text }))
    } else {
        text
    }
}

/// Rounds to 12 significant digits, folding `-0` into `0`.
fn round12(x: f64) -> f64 {
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn format_eigenvalue(x: f64) -> String {
    round12(x).to_string()
}

/// Invariants every well-formed graph satisfies; returns the violated ones.
fn verify(g: &MixedMultigraph) -> Result<Vec<String>, Failure> {
    let mut failures = Vec::new();
    let mut check = |name: &str, ok: bool, detail: String| {
        if !ok {
            failures.push(format!("{name}: {detail}"));
        }
    };

    let text = serialize_mmg(g);
    let reparsed = parse_mmg(&text);
    check(
        "round-trip",
        reparsed.as_ref() == Ok(g),
        "serialization does not parse back".into(),
    );

    let h = hermitian_matrix::<BigInt>(g);
    let p = char_poly_det(&h)?;
    let expected_c2 = -h.off_diagonal_norm_sum();
    check(
        "coefficients",
        p.degree() == g.order() && p.coeff(1) == &BigInt::from(0) && (g.order() < 2 || p.coeff(2) == &expected_c2),
        format!("unexpected leading coefficients in {p}"),
    );
    if g.order() <= SACHS_MAX_ORDER {
        let sachs: Poly = char_poly_sachs(g)?;
        check("engines", sachs == p, format!("determinant {p}, sachs {sachs}"));
    }
    check(
        "converse",
        is_cospectral(g, &g.converse()),
        "converse is not cospectral".into(),
    );

    let values = spectrum(g)?;
    let rebuilt = poly_from_roots(&values);
    let worst = p
        .to_f64()
        .iter()
        .zip(&rebuilt)
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);
    check("eigenvalues", worst <= 1e-6, format!("coefficient error {worst:e}"));
    let trace: f64 = values.iter().sum();
    check("trace", trace.abs() <= 1e-9, format!("sum of eigenvalues {trace:e}"));

    if g.is_connected() {
        for (name, other) in [("self", g.clone()), ("converse-equivalence", g.converse())] {
            let w = decide_switching_equivalence(g, &other)?;
            check(
                name,
                w.is_equivalent() && verify_witness(g, &other, &w),
                format!("verdict {w}"),
            );
        }
        let underlying = g.underlying();
        let positive = is_positive(g)?;
        let verdict = decide_switching_equivalence(g, &underlying)?.is_equivalent();
        check(
            "positivity",
            positive == verdict,
            format!("positive={positive} switches-to-underlying={verdict}"),
        );
        check(
            "positive-cospectral",
            !positive || is_cospectral(g, &underlying),
            "positive graph is not cospectral to its underlying graph".into(),
        );
        // the cycle forms need every simple cycle; skipped when there are too many
        if let Ok(cycles) = cospectral_to_underlying(g) {
            check(
                "weights-one",
                cycles == positive,
                format!("all-weights-one={cycles} positive={positive}"),
            );
        }
        if let Ok(anti_cycles) = antispectral_to_underlying(g) {
            let anti_coeffs = is_antispectral(&underlying, g)?;
            check(
                "antispectral",
                anti_cycles == anti_coeffs,
                format!("cycle form {anti_cycles}, coefficient form {anti_coeffs}"),
            );
        }
    }

    if let Ok(cycles) = enumerate_simple_cycles(g) {
        for c in &cycles {
            let forward = cycle_weight(g, c)?;
            let backward = cycle_weight(g, &c.reversed())?;
            check(
                "cycle-reversal",
                backward == forward.conj(),
                format!("cycle {:?}", c.vertices().collect::<Vec<_>>()),
            );
        }
    }
    Ok(failures)
}
