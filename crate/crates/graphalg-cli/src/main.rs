//! Command-line driver exposing the graph-algebra computations: Tutte
//! polynomials, Hilbert series via specialization or exact filtration,
//! dimensions with score-census cross-checks, annihilating polynomials,
//! quotient relation checks, and the complete-graph tables.

use graphalg_cli::rows;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use graphalg::{
    hilbert_from_tutte, is_prime_u64, min_annihilating_polynomial, parse_graph,
    parse_rational, partition_product_oracle, sample_generic_weights, score_census,
    total_dimension, tutte_polynomial, verify_hecke_relations, AlgebraContext,
    CensusMode, EdgePartition, Fp, FpConfig, Graph, GraphFile, HilbertPolynomial,
    HilbertVariant, Mode, Rational, Scalar, WeightAssignment, DEFAULT_PRIME,
    FOREST_ORACLE_CAP, MAX_EDGES,
};

#[derive(Parser)]
#[command(
    name = "graphalg",
    version,
    about = "Exact dimensions, Hilbert series, and cross-checks for weighted graph orientation algebras"
)]
struct RunConfig {
    #[command(subcommand)]
    command: Command,

    /// Ground field: `rational`, `prime` (2^61 - 1), or `prime:P`.
    #[arg(long, global = true, default_value = "rational")]
    field: String,

    /// Seed for sampled weight draws.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    /// Edge-count cap for 2^m coordinate enumeration.
    #[arg(long, global = true, default_value_t = MAX_EDGES)]
    max_edges: usize,

    /// Output style.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Tutte polynomial by deletion-contraction, terms in grevlex order.
    Tutte { file: PathBuf },

    /// Hilbert polynomial from the Tutte specialization for the variant.
    Hilbert {
        file: PathBuf,
        /// external | trees | internal
        #[arg(long, default_value = "external")]
        variant: String,
    },

    /// Hilbert polynomial from the exact rank filtration.
    HilbertFiltration {
        file: PathBuf,
        /// external | trees | internal
        #[arg(long, default_value = "external")]
        mode: String,
        /// Root vertex (1-based) for the trees quotient.
        #[arg(long, default_value_t = 1)]
        root: usize,
        /// unit | from-file | hecke:Q | sample[:SEED] | partition:SPEC
        #[arg(long, default_value = "from-file")]
        weights: String,
        /// Allow zero weights and run the square-free monomial-basis
        /// filtration (full algebra only; no score census exists there).
        #[arg(long)]
        experimental_zero_q: bool,
    },

    /// Total dimension by filtration, score census, or both.
    Dim {
        file: PathBuf,
        /// external | trees | internal
        #[arg(long, default_value = "external")]
        mode: String,
        /// Root vertex (1-based) for the trees quotient.
        #[arg(long, default_value_t = 1)]
        root: usize,
        /// filtration | score | both
        #[arg(long, default_value = "both")]
        method: String,
        /// unit | from-file | hecke:Q | sample[:SEED] | partition:SPEC
        #[arg(long, default_value = "from-file")]
        weights: String,
    },

    /// Count distinct score vectors over the orientation class.
    Census {
        file: PathBuf,
        /// all | root:G | strong
        #[arg(long, default_value = "all")]
        mode: String,
        /// unit | from-file | hecke:Q | sample[:SEED] | partition:SPEC
        #[arg(long, default_value = "from-file")]
        weights: String,
    },

    /// Minimal annihilating polynomial of X.t = sum of t_i X_i.
    Annihilator {
        file: PathBuf,
        /// Comma-separated rational coefficients, one per vertex.
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        /// unit | from-file | hecke:Q | sample[:SEED] | partition:SPEC
        #[arg(long, default_value = "from-file")]
        weights: String,
    },

    /// Check the cut-product relations at one equal-weight value.
    VerifyHecke {
        file: PathBuf,
        /// Nonzero rational weight.
        #[arg(long, allow_hyphen_values = true)]
        q: String,
        /// external | trees | internal
        #[arg(long, default_value = "external")]
        mode: String,
        /// Root vertex (1-based) for the trees quotient.
        #[arg(long, default_value_t = 1)]
        root: usize,
    },

    /// Forest count vs distinct unit-weight score vectors.
    CheckForests { file: PathBuf },

    /// Product formula over partition classes of acyclic-subset counts.
    ProductOracle {
        file: PathBuf,
        /// Classes of 1-based edge indices, e.g. "1,2;3-5".
        #[arg(long)]
        partition: String,
    },

    /// Hilbert rows for complete graphs in a weight regime.
    Tables {
        /// Emit the single row for K_N.
        #[arg(long)]
        complete: Option<usize>,
        /// hecke | one-off | generic
        #[arg(long, default_value = "hecke")]
        regime: String,
        /// Emit rows for K_2..K_N.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Rows,
}

#[derive(Clone, Copy)]
enum Field {
    Rational,
    Prime(u64),
}

enum CliError {
    Usage(String),
    Input(String),
    Cap(String),
    Mismatch(String),
    Internal(String),
}

impl CliError {
    fn code(&self) -> u8 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Input(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Mismatch(_) => 4,
            CliError::Internal(_) => 70,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Input(m) => write!(f, "{m}"),
            CliError::Cap(m) => write!(f, "{m}"),
            CliError::Mismatch(m) => write!(f, "cross-check mismatch: {m}"),
            CliError::Internal(m) => write!(f, "internal error: {m}"),
        }
    }
}

impl From<graphalg::Error> for CliError {
    fn from(err: graphalg::Error) -> Self {
        match &err {
            graphalg::Error::CapExceeded { .. } => CliError::Cap(err.to_string()),
            graphalg::Error::GenericityFailed { .. } => CliError::Mismatch(err.to_string()),
            graphalg::Error::Internal(_) => CliError::Internal(err.to_string()),
            _ => CliError::Input(err.to_string()),
        }
    }
}

/// Collected output: plain lines plus machine-readable records, printed
/// in the selected format once the command finishes or fails.
#[derive(Default)]
struct Report {
    plain: Vec<String>,
    notes: Vec<String>,
    rows: rows::Rows,
}

impl Report {
    fn note(&mut self, text: impl Into<String>) {
        let text = text.into();
        self.notes.push(text.clone());
        self.plain.push(text);
    }

    fn line<I, T>(&mut self, plain: impl Into<String>, tokens: I)
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        self.plain.push(plain.into());
        self.rows.push(tokens);
    }

    fn print(&self, format: Format) {
        match format {
            Format::Plain => {
                for line in &self.plain {
                    println!("{line}");
                }
            }
            Format::Rows => {
                for note in &self.notes {
                    println!("# {note}");
                }
                print!("{}", self.rows.emit());
            }
        }
    }
}

fn main() -> ExitCode {
    let config = match RunConfig::try_parse() {
        Ok(config) => config,
        Err(err) => {
            use clap::error::ErrorKind;
            let ok = matches!(
                err.kind(),
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion
            );
            let _ = err.print();
            return if ok { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    let mut report = Report::default();
    let result = run(&config, &mut report);
    report.print(config.format);
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(err.code())
        }
    }
}

fn run(config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let field = parse_field(&config.field)?;
    match &config.command {
        Command::Tutte { file } => {
            let gf = load(file)?;
            let t = tutte_polynomial(&gf.graph);
            report.plain.push(format!("T(x,y) = {t}"));
            for (x, y, c) in t.terms_grevlex() {
                report.rows.push([
                    "tutte".to_string(),
                    x.to_string(),
                    y.to_string(),
                    c.to_string(),
                ]);
            }
            Ok(())
        }
        Command::Hilbert { file, variant } => {
            let gf = load(file)?;
            let variant = parse_variant(variant)?;
            let h = hilbert_from_tutte(&gf.graph, variant)?;
            emit_hilbert(report, "hilbert", variant_name(variant), &h);
            Ok(())
        }
        Command::HilbertFiltration {
            file,
            mode,
            root,
            weights,
            experimental_zero_q,
        } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let mode = parse_mode(mode, *root, &gf.graph)?;
            let w = resolve_weights(weights, &gf, config.seed, report)?;
            let result = if *experimental_zero_q {
                if mode != Mode::External {
                    return Err(CliError::Usage(
                        "--experimental-zero-q supports only --mode external".into(),
                    ));
                }
                match field {
                    Field::Rational => {
                        graphalg::filtration_hilbert_monomial::<Rational>(&gf.graph, &w, &())?
                    }
                    Field::Prime(p) => graphalg::filtration_hilbert_monomial::<Fp>(
                        &gf.graph,
                        &w,
                        &FpConfig { modulus: p },
                    )?,
                }
            } else {
                match field {
                    Field::Rational => {
                        let ctx = AlgebraContext::<Rational>::new(&gf.graph, &w, ())?;
                        graphalg::filtration_hilbert(&ctx, mode)?
                    }
                    Field::Prime(p) => {
                        let ctx = AlgebraContext::<Fp>::new(
                            &gf.graph,
                            &w,
                            FpConfig { modulus: p },
                        )?;
                        graphalg::filtration_hilbert(&ctx, mode)?
                    }
                }
            };
            let dims: Vec<String> = result.dims.iter().map(usize::to_string).collect();
            report.line(
                format!("dims: {}", dims.join(" ")),
                std::iter::once("dims".to_string()).chain(dims.clone()),
            );
            emit_hilbert(report, "hilbert-filtration", mode.name(), &result.hilbert);
            Ok(())
        }
        Command::Dim {
            file,
            mode,
            root,
            method,
            weights,
        } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let mode = parse_mode(mode, *root, &gf.graph)?;
            let w = resolve_weights(weights, &gf, config.seed, report)?;
            let (run_filtration, run_score) = match method.trim() {
                "filtration" => (true, false),
                "score" => (false, true),
                "both" => (true, true),
                other => {
                    return Err(CliError::Usage(format!(
                        "unknown method {other:?}: expected filtration, score, or both"
                    )))
                }
            };
            let mut filtration_dim = None;
            if run_filtration {
                let d = match field {
                    Field::Rational => {
                        let ctx = AlgebraContext::<Rational>::new(&gf.graph, &w, ())?;
                        total_dimension(&ctx, mode)?
                    }
                    Field::Prime(p) => {
                        let ctx = AlgebraContext::<Fp>::new(
                            &gf.graph,
                            &w,
                            FpConfig { modulus: p },
                        )?;
                        total_dimension(&ctx, mode)?
                    }
                };
                report.line(
                    format!("filtration dimension: {d}"),
                    ["dim".to_string(), mode.name().into(), "filtration".into(), d.to_string()],
                );
                filtration_dim = Some(d);
            }
            let mut score_dim = None;
            if run_score {
                let census = score_census::<Rational>(&gf.graph, &w.q, census_mode(mode))?;
                let d = census.count();
                report.line(
                    format!("distinct score vectors: {d}"),
                    ["dim".to_string(), mode.name().into(), "score".into(), d.to_string()],
                );
                score_dim = Some(d);
            }
            if let (Some(a), Some(b)) = (filtration_dim, score_dim) {
                if a == b {
                    report.plain.push("agreement: yes".to_string());
                } else {
                    report.plain.push("agreement: NO".to_string());
                    return Err(CliError::Mismatch(format!(
                        "filtration dimension {a} != score census {b}"
                    )));
                }
            }
            Ok(())
        }
        Command::Census { file, mode, weights } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let mode = parse_census_mode(mode, &gf.graph)?;
            let w = resolve_weights(weights, &gf, config.seed, report)?;
            let census = score_census::<Rational>(&gf.graph, &w.q, mode)?;
            report.plain.push(format!("mode: {}", mode.name()));
            report
                .plain
                .push(format!("orientations considered: {}", census.orientations_considered));
            report.line(
                format!("distinct score vectors: {}", census.count()),
                [
                    "census".to_string(),
                    mode.name().into(),
                    census.count().to_string(),
                    census.orientations_considered.to_string(),
                ],
            );
            Ok(())
        }
        Command::Annihilator { file, t, weights } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let w = resolve_weights(weights, &gf, config.seed, report)?;
            let t_rats = parse_rational_list(t)?;
            match field {
                Field::Rational => {
                    let ctx = AlgebraContext::<Rational>::new(&gf.graph, &w, ())?;
                    let ann = min_annihilating_polynomial(&ctx, &t_rats)?;
                    emit_annihilator(report, &ann);
                }
                Field::Prime(p) => {
                    let cfg = FpConfig { modulus: p };
                    let ctx =
                        AlgebraContext::<Fp>::new(&gf.graph, &w, cfg)?;
                    let t_vals: Vec<Fp> = t_rats
                        .iter()
                        .map(|r| Fp::from_rational(r, &cfg))
                        .collect::<Result<_, _>>()
                        .map_err(graphalg::Error::from)?;
                    let ann = min_annihilating_polynomial(&ctx, &t_vals)?;
                    emit_annihilator(report, &ann);
                }
            }
            Ok(())
        }
        Command::VerifyHecke { file, q, mode, root } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let mode = parse_mode(mode, *root, &gf.graph)?;
            let q = parse_rational(q)
                .ok_or_else(|| CliError::Usage(format!("bad rational {q:?} for --q")))?;
            let hecke = match field {
                Field::Rational => {
                    verify_hecke_relations::<Rational>(&gf.graph, &q, mode, &())?
                }
                Field::Prime(p) => verify_hecke_relations::<Fp>(
                    &gf.graph,
                    &q,
                    mode,
                    &FpConfig { modulus: p },
                )?,
            };
            report.plain.push(format!("mode: {}, q = {}", mode.name(), hecke.q));
            report.line(
                format!("subsets checked: {}", hecke.subsets_checked),
                [
                    "verify-hecke".to_string(),
                    mode.name().into(),
                    hecke.q.to_string(),
                    hecke.subsets_checked.to_string(),
                    hecke.failures.len().to_string(),
                ],
            );
            for &mask in &hecke.failures {
                let set = vertex_set(mask);
                report.line(format!("failed subset: {set}"), ["hecke-failure".to_string(), set.clone()]);
            }
            if hecke.passed() {
                report.plain.push("PASS".to_string());
                Ok(())
            } else {
                report.plain.push("FAIL".to_string());
                Err(CliError::Mismatch(format!(
                    "{} vertex subsets violated the relation",
                    hecke.failures.len()
                )))
            }
        }
        Command::CheckForests { file } => {
            let gf = load(file)?;
            guard_edges(&gf.graph, config, report)?;
            let forests = gf.graph.enumerate_forests(FOREST_ORACLE_CAP)?;
            let unit = WeightAssignment::unit(gf.graph.edge_count());
            let census = score_census::<Rational>(&gf.graph, &unit.q, CensusMode::All)?;
            let count = census.count() as u64;
            let ok = forests == count;
            report.plain.push(format!("forest subsets: {forests}"));
            report
                .plain
                .push(format!("distinct unit-weight score vectors: {count}"));
            report.line(
                format!("agreement: {}", if ok { "yes" } else { "NO" }),
                [
                    "check-forests".to_string(),
                    forests.to_string(),
                    count.to_string(),
                    if ok { "ok" } else { "mismatch" }.to_string(),
                ],
            );
            if ok {
                Ok(())
            } else {
                Err(CliError::Mismatch(format!(
                    "forest count {forests} != distinct score vectors {count}"
                )))
            }
        }
        Command::ProductOracle { file, partition } => {
            let gf = load(file)?;
            let partition = EdgePartition::parse(partition, gf.graph.edge_count())?;
            let count = partition_product_oracle(&gf.graph, &partition)?;
            report.plain.push(format!("classes: {}", partition.class_count()));
            report.line(
                format!("product-formula count: {count}"),
                [
                    "product-oracle".to_string(),
                    partition.class_count().to_string(),
                    count.to_string(),
                ],
            );
            Ok(())
        }
        Command::Tables {
            complete,
            regime,
            max_n,
        } => emit_tables(config, field, complete.as_ref().copied(), regime, *max_n, report),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Regime {
    Hecke,
    OneOff,
    Generic,
}

impl Regime {
    fn name(self) -> &'static str {
        match self {
            Regime::Hecke => "hecke",
            Regime::OneOff => "one-off",
            Regime::Generic => "generic",
        }
    }
}

fn emit_tables(
    config: &RunConfig,
    field: Field,
    complete: Option<usize>,
    regime: &str,
    max_n: usize,
    report: &mut Report,
) -> Result<(), CliError> {
    let regime = match regime.trim() {
        "hecke" => Regime::Hecke,
        "one-off" => Regime::OneOff,
        "generic" => Regime::Generic,
        other => {
            return Err(CliError::Usage(format!(
                "unknown regime {other:?}: expected hecke, one-off, or generic"
            )))
        }
    };
    let ns: Vec<usize> = match complete {
        Some(0) => return Err(CliError::Usage("--complete needs n >= 1".into())),
        Some(n) => vec![n],
        None => (2..=max_n).collect(),
    };
    if regime != Regime::Hecke {
        report.note(format!("seed: {}", config.seed));
    }
    for &n in &ns {
        let g = Graph::complete(n);
        guard_edges(&g, config, report)?;
        let m = g.edge_count();
        let (weights, census): (WeightAssignment, Option<usize>) = match regime {
            Regime::Hecke => (WeightAssignment::unit(m), None),
            Regime::OneOff => {
                let partition = if m == 0 {
                    EdgePartition::singletons(0)
                } else {
                    EdgePartition::one_off(m, m - 1)
                };
                let sampled = sample_generic_weights(&g, &partition, config.seed)?;
                (sampled.weights, Some(sampled.census_count))
            }
            Regime::Generic => {
                let partition = EdgePartition::singletons(m);
                let sampled = sample_generic_weights(&g, &partition, config.seed)?;
                (sampled.weights, Some(sampled.census_count))
            }
        };
        let result = match field {
            Field::Rational => {
                let ctx = AlgebraContext::<Rational>::new(&g, &weights, ())?;
                graphalg::filtration_hilbert(&ctx, Mode::External)?
            }
            Field::Prime(p) => {
                let ctx =
                    AlgebraContext::<Fp>::new(&g, &weights, FpConfig { modulus: p })?;
                graphalg::filtration_hilbert(&ctx, Mode::External)?
            }
        };
        let row = result.hilbert.row();
        report.line(
            format!("K_{n}: {row}"),
            ["table".to_string(), regime.name().into(), n.to_string()]
                .into_iter()
                .chain(result.hilbert.coeffs.iter().map(i64::to_string)),
        );
        match regime {
            Regime::Hecke => {
                let tutte_row = hilbert_from_tutte(&g, HilbertVariant::External)?;
                if tutte_row.coeffs != result.hilbert.coeffs {
                    return Err(CliError::Mismatch(format!(
                        "K_{n}: filtration row {row} != specialization row {}",
                        tutte_row.row()
                    )));
                }
            }
            Regime::OneOff | Regime::Generic => {
                let expected = census.unwrap_or(0);
                if result.total_dim != expected {
                    return Err(CliError::Mismatch(format!(
                        "K_{n}: filtration dimension {} != score census {expected}",
                        result.total_dim
                    )));
                }
            }
        }
    }
    Ok(())
}

fn load(path: &Path) -> Result<GraphFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    Ok(parse_graph(&text).map_err(graphalg::Error::from)?)
}

fn parse_field(text: &str) -> Result<Field, CliError> {
    match text.trim() {
        "rational" => Ok(Field::Rational),
        "prime" => Ok(Field::Prime(DEFAULT_PRIME)),
        other => match other.strip_prefix("prime:") {
            Some(p) => {
                let p: u64 = p
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad prime {p:?} for --field")))?;
                if !is_prime_u64(p) {
                    return Err(CliError::Usage(format!("{p} is not prime")));
                }
                Ok(Field::Prime(p))
            }
            None => Err(CliError::Usage(format!(
                "unknown field {other:?}: expected rational, prime, or prime:P"
            ))),
        },
    }
}

fn parse_variant(text: &str) -> Result<HilbertVariant, CliError> {
    match text.trim() {
        "external" => Ok(HilbertVariant::External),
        "trees" => Ok(HilbertVariant::Trees),
        "internal" => Ok(HilbertVariant::Internal),
        other => Err(CliError::Usage(format!(
            "unknown variant {other:?}: expected external, trees, or internal"
        ))),
    }
}

fn variant_name(variant: HilbertVariant) -> &'static str {
    match variant {
        HilbertVariant::External => "external",
        HilbertVariant::Trees => "trees",
        HilbertVariant::Internal => "internal",
    }
}

fn parse_mode(text: &str, root: usize, g: &Graph) -> Result<Mode, CliError> {
    match text.trim() {
        "external" => Ok(Mode::External),
        "trees" => {
            check_root(root, g)?;
            Ok(Mode::Trees { root: root - 1 })
        }
        "internal" => Ok(Mode::Internal),
        other => Err(CliError::Usage(format!(
            "unknown mode {other:?}: expected external, trees, or internal"
        ))),
    }
}

fn parse_census_mode(text: &str, g: &Graph) -> Result<CensusMode, CliError> {
    let text = text.trim();
    match text {
        "all" => Ok(CensusMode::All),
        "strong" => Ok(CensusMode::StronglyConnected),
        other => match other.strip_prefix("root:") {
            Some(root) => {
                let root: usize = root
                    .parse()
                    .map_err(|_| CliError::Usage(format!("bad root {root:?} for --mode")))?;
                check_root(root, g)?;
                Ok(CensusMode::RootConnected { root: root - 1 })
            }
            None => Err(CliError::Usage(format!(
                "unknown census mode {other:?}: expected all, root:G, or strong"
            ))),
        },
    }
}

fn check_root(root: usize, g: &Graph) -> Result<(), CliError> {
    if root == 0 || root > g.vertex_count() {
        return Err(CliError::Usage(format!(
            "root {root} out of 1..={}",
            g.vertex_count()
        )));
    }
    Ok(())
}

fn census_mode(mode: Mode) -> CensusMode {
    match mode {
        Mode::External => CensusMode::All,
        Mode::Trees { root } => CensusMode::RootConnected { root },
        Mode::Internal => CensusMode::StronglyConnected,
    }
}

fn parse_rational_list(text: &str) -> Result<Vec<Rational>, CliError> {
    text.split(',')
        .map(|item| {
            parse_rational(item.trim())
                .ok_or_else(|| CliError::Usage(format!("bad rational {:?} in list", item.trim())))
        })
        .collect()
}

/// Resolves a weight policy against the parsed file, sampling when asked
/// and recording how the weights were chosen.
fn resolve_weights(
    policy: &str,
    gf: &GraphFile,
    seed: u64,
    report: &mut Report,
) -> Result<WeightAssignment, CliError> {
    let m = gf.graph.edge_count();
    let policy = policy.trim();
    let weights = match policy {
        "from-file" | "file" => gf.weights.clone(),
        "unit" => WeightAssignment::unit(m),
        _ => {
            if let Some(q) = policy.strip_prefix("hecke:") {
                let q = parse_rational(q)
                    .ok_or_else(|| CliError::Usage(format!("bad rational {q:?} in hecke:Q")))?;
                WeightAssignment::constant(m, q)
            } else if policy == "sample" || policy.starts_with("sample:") {
                let seed = match policy.strip_prefix("sample:") {
                    Some(s) => s
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad seed {s:?} in sample:SEED")))?,
                    None => seed,
                };
                let partition = EdgePartition::singletons(m);
                let sampled = sample_generic_weights(&gf.graph, &partition, seed)?;
                report.note(format!(
                    "sampled weights: seed={seed} attempts={} census={}",
                    sampled.attempts, sampled.census_count
                ));
                sampled.weights
            } else if let Some(spec) = policy.strip_prefix("partition:") {
                let partition = EdgePartition::parse(spec, m)?;
                let sampled = sample_generic_weights(&gf.graph, &partition, seed)?;
                report.note(format!(
                    "sampled weights: seed={seed} attempts={} census={}",
                    sampled.attempts, sampled.census_count
                ));
                sampled.weights
            } else {
                return Err(CliError::Usage(format!(
                    "unknown weight policy {policy:?}: expected unit, from-file, hecke:Q, sample[:SEED], or partition:SPEC"
                )));
            }
        }
    };
    if m > 0 {
        let rendered: Vec<String> = weights.q.iter().map(|w| w.to_string()).collect();
        report.line(
            format!("weights: {}", rendered.join(" ")),
            std::iter::once("weights".to_string()).chain(rendered.clone()),
        );
    }
    Ok(weights)
}

fn guard_edges(g: &Graph, config: &RunConfig, report: &mut Report) -> Result<(), CliError> {
    let cap = config.max_edges.min(MAX_EDGES);
    let m = g.edge_count();
    if m > cap {
        return Err(CliError::Cap(format!(
            "graph has {m} edges, cap is {cap} (2^m coordinates)"
        )));
    }
    if m >= 20 {
        let coords = 1u64 << m;
        let mb = coords * 48 / 1_000_000;
        report.note(format!(
            "{m} edges: 2^{m} = {coords} coordinates, a dense rational vector is roughly {mb} MB"
        ));
    }
    Ok(())
}

fn emit_hilbert(report: &mut Report, record: &str, mode: &str, h: &HilbertPolynomial) {
    report.plain.push(format!("mode: {mode}"));
    report.plain.push(format!("H(t) = {h}"));
    report.line(
        format!("row: {}", h.row()),
        [record.to_string(), mode.to_string()]
            .into_iter()
            .chain(h.coeffs.iter().map(i64::to_string)),
    );
    report.line(
        format!("total: {}", h.total()),
        ["total".to_string(), h.total().to_string()],
    );
}

fn emit_annihilator<S: Scalar>(report: &mut Report, ann: &graphalg::Annihilator<S>) {
    report.plain.push(format!("p(x) = {ann}"));
    report.line(
        format!("degree: {}", ann.degree()),
        std::iter::once("annihilator".to_string())
            .chain(std::iter::once(ann.degree().to_string()))
            .chain(ann.roots.iter().map(|r| r.to_string())),
    );
    let coeffs: Vec<String> = ann.coefficients().iter().map(|c| c.to_string()).collect();
    report.line(
        format!("coefficients: {}", coeffs.join(" ")),
        std::iter::once("annihilator-coeffs".to_string()).chain(coeffs.clone()),
    );
}

fn vertex_set(mask: u32) -> String {
    let mut parts = Vec::new();
    for i in 0..32 {
        if mask & (1 << i) != 0 {
            parts.push((i + 1).to_string());
        }
    }
    format!("{{{}}}", parts.join(","))
}
