use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use alphaspec_core::exactpoly::{parse_alpha, rat, Notation, Rational};
use alphaspec_core::graph::{self, Family, Graph};
use alphaspec_core::joins::{self, forge_cospectral_pair};
use alphaspec_core::scan::verify::{self as suites, DsFamily, SuiteOptions, VerificationReport};
use alphaspec_core::scan::{self, enumerate_graphs};
use alphaspec_core::spectra::{self, ModalCharpoly, Mode, DEFAULT_TOL};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: io::Error },
    #[error("cannot write output: {0}")]
    Write(#[from] io::Error),
    #[error("{path}:{line}: {source}")]
    Graph6File { path: PathBuf, line: usize, source: alphaspec_core::Graph6Error },
    #[error(transparent)]
    Core(#[from] alphaspec_core::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Parser, Debug)]
#[command(name = "alphaspec", version, about = "Spectra of A_a(G) = aD(G) + (1-a)A(G) for small graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Characteristic polynomial, in x and a or at a fixed a
    Charpoly(Common),
    /// Numerical eigenvalues at a fixed a
    Spectrum(Common),
    /// Sum of the entries of (xI - A_a)^-1
    Coronal(Common),
    /// n, m and degree moments read back from the characteristic polynomial
    Invariants(Common),
    /// Join of two graphs and its characteristic polynomial
    Join {
        #[command(flatten)]
        common: Common,
        /// Compare the join formula against a direct determinant
        #[arg(long)]
        check: bool,
    },
    /// Cospectral pair G v H1, G v H2 from H1, H2 with equal spectra and coronals
    Forge(Common),
    /// Cospectral classes among all graphs on --min-n..=--max-n vertices or the given graphs
    Scan {
        #[command(flatten)]
        common: Common,
        /// Only emit classes with at least two members
        #[arg(long)]
        mates_only: bool,
    },
    /// Run a verification suite
    Verify {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum)]
        suite: Suite,
        /// Family for the ds suite (default: all)
        #[arg(long)]
        family: Option<String>,
        /// Include wall-clock time in the report
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Args, Debug)]
struct Common {
    /// Graph in graph6, or a named family such as star:5 or complete_split:2,3
    #[arg(short = 'g', long = "graph")]
    graphs: Vec<String>,
    /// File with one graph6 string per line
    #[arg(long = "input")]
    inputs: Vec<PathBuf>,
    /// Value of a as p/q (exact) or a decimal; repeat or comma-separate for several
    #[arg(long, value_delimiter = ',')]
    alpha: Vec<String>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
    #[arg(long)]
    min_n: Option<usize>,
    #[arg(long)]
    max_n: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write output here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker threads
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ModeArg {
    Symbolic,
    Fixed,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Suite {
    Ds,
    #[value(name = "le3.1", alias = "cycle-merge")]
    CycleMerge,
    #[value(name = "le3.2", alias = "path-cycle-split")]
    PathCycleSplit,
    #[value(name = "lem2.1", alias = "dominating")]
    Dominating,
    #[value(name = "thm3.1", alias = "clique-path")]
    CliquePath,
    Transfer,
    RegularShift,
    CorollaryRegression,
}

/// Output sink plus format; records are JSON lines, CSV rows or text lines.
struct Output {
    format: Format,
    sink: Box<dyn Write>,
    csv_header: bool,
}

impl Output {
    fn open(common: &Common) -> CliResult<Output> {
        let sink: Box<dyn Write> = match &common.out {
            Some(p) => Box::new(io::BufWriter::new(fs::File::create(p)?)),
            None => Box::new(io::BufWriter::new(io::stdout().lock())),
        };
        Ok(Output { format: common.format, sink, csv_header: false })
    }

    fn json(&mut self, v: &Value) -> CliResult<()> {
        writeln!(self.sink, "{}", serde_json::to_string(v).expect("json value serializes"))?;
        Ok(())
    }

    fn text(&mut self, line: impl AsRef<str>) -> CliResult<()> {
        writeln!(self.sink, "{}", line.as_ref())?;
        Ok(())
    }

    fn csv(&mut self, header: &[&str], rows: &[Vec<String>]) -> CliResult<()> {
        let mut w = csv::Writer::from_writer(Vec::new());
        if !self.csv_header {
            w.write_record(header)?;
            self.csv_header = true;
        }
        for r in rows {
            w.write_record(r)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Write(e.into_error()))?;
        self.sink.write_all(&bytes)?;
        Ok(())
    }

    fn finish(mut self) -> CliResult<()> {
        self.sink.flush()?;
        Ok(())
    }
}

fn parse_graph_arg(text: &str) -> CliResult<Graph> {
    if let Some((name, params)) = text.split_once(':') {
        let params: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse().map_err(|_| CliError::Usage(format!("bad family parameter in {text:?}"))))
            .collect::<CliResult<_>>()?;
        return Ok(Family::parse(name, &params)?.build()?);
    }
    Graph::parse_graph6(text).map_err(|e| CliError::Core(e.into()))
}

fn load_graphs(common: &Common) -> CliResult<Vec<Graph>> {
    let mut out = Vec::new();
    for g in &common.graphs {
        out.push(parse_graph_arg(g)?);
    }
    for path in &common.inputs {
        let text = fs::read_to_string(path).map_err(|source| CliError::Read { path: path.clone(), source })?;
        let gs = graph::parse_graph6_lines(&text).map_err(|(line, source)| CliError::Graph6File {
            path: path.clone(),
            line,
            source,
        })?;
        out.extend(gs);
    }
    Ok(out)
}

fn require_graphs(common: &Common) -> CliResult<Vec<Graph>> {
    let gs = load_graphs(common)?;
    if gs.is_empty() {
        return Err(CliError::Usage("no graphs given; use -g/--graph or --input".into()));
    }
    Ok(gs)
}

fn alphas(common: &Common) -> CliResult<Vec<Rational>> {
    common
        .alpha
        .iter()
        .map(|text| {
            let (a, notation) = parse_alpha(text)?;
            if notation == Notation::Decimal {
                eprintln!("warning: alpha {text} read as the exact value {a}; write it as p/q to avoid ambiguity");
            }
            Ok(a)
        })
        .collect()
}

fn single_alpha(common: &Common) -> CliResult<Option<Rational>> {
    let mut a = alphas(common)?;
    match a.len() {
        0 => Ok(None),
        1 => Ok(a.pop()),
        _ => Err(CliError::Usage("this subcommand takes a single --alpha".into())),
    }
}

/// Symbolic unless an `α` is given; `--mode fixed` without `α` is an error.
fn resolve_mode(common: &Common) -> CliResult<Mode> {
    let alpha = single_alpha(common)?;
    match (common.mode, alpha) {
        (Some(ModeArg::Symbolic), Some(_)) => Err(CliError::Usage("--mode symbolic does not take --alpha".into())),
        (Some(ModeArg::Fixed), None) => Err(CliError::Usage("--mode fixed needs --alpha".into())),
        (_, Some(a)) => Ok(Mode::fixed(a)?),
        (_, None) => Ok(Mode::Symbolic),
    }
}

fn mode_json(mode: &Mode, v: &mut Value) {
    v["mode"] = json!(mode.name());
    if let Some(a) = mode.alpha() {
        v["alpha"] = json!(a.to_string());
    }
}

fn charpoly_json(p: &ModalCharpoly) -> Value {
    match p {
        ModalCharpoly::Symbolic(b) => b.to_json(),
        ModalCharpoly::Fixed(r) => Value::Array(r.coeffs().iter().map(|c| json!(c.to_string())).collect()),
    }
}

fn fmt_float(v: f64) -> String {
    let r = (v * 1e10).round() / 1e10;
    let r = if r == 0.0 { 0.0 } else { r };
    format!("{r:?}")
}

fn cmd_charpoly(common: &Common) -> CliResult<bool> {
    let mode = resolve_mode(common)?;
    let mut out = Output::open(common)?;
    for g in require_graphs(common)? {
        let p = spectra::charpoly_in_mode(&g, &mode)?;
        match out.format {
            Format::Text => out.text(p.render())?,
            Format::Json => {
                let mut v =
                    json!({ "graph": g.to_graph6(), "charpoly": p.render(), "coefficients": charpoly_json(&p) });
                mode_json(&mode, &mut v);
                out.json(&v)?;
            }
            Format::Csv => out.csv(
                &["graph", "mode", "alpha", "charpoly"],
                &[vec![
                    g.to_graph6(),
                    mode.name().into(),
                    mode.alpha().map(|a| a.to_string()).unwrap_or_default(),
                    p.render(),
                ]],
            )?,
        }
    }
    out.finish()?;
    Ok(true)
}

fn cmd_spectrum(common: &Common) -> CliResult<bool> {
    let alpha = single_alpha(common)?.ok_or_else(|| CliError::Usage("spectrum needs --alpha".into()))?;
    let mut out = Output::open(common)?;
    for g in require_graphs(common)? {
        let report = spectra::eigenvalues_exact_alpha(&g, &alpha, DEFAULT_TOL)?;
        match out.format {
            Format::Text => {
                for (k, l) in report.eigenvalues.iter().enumerate() {
                    out.text(format!("λ_{} = {}", k + 1, fmt_float(*l)))?;
                }
            }
            Format::Json => {
                let mut v = serde_json::to_value(&report).expect("report serializes");
                v["graph"] = json!(g.to_graph6());
                out.json(&v)?;
            }
            Format::Csv => {
                let rows: Vec<Vec<String>> = report
                    .eigenvalues
                    .iter()
                    .enumerate()
                    .map(|(k, l)| vec![g.to_graph6(), report.alpha.clone(), (k + 1).to_string(), l.to_string()])
                    .collect();
                out.csv(&["graph", "alpha", "index", "eigenvalue"], &rows)?;
            }
        }
    }
    out.finish()?;
    Ok(true)
}

fn cmd_coronal(common: &Common) -> CliResult<bool> {
    let mode = resolve_mode(common)?;
    let mut out = Output::open(common)?;
    for g in require_graphs(common)? {
        let c = joins::coronal_in_mode(&g, &mode)?;
        match out.format {
            Format::Text => out.text(c.to_string())?,
            Format::Json => {
                let mut v = json!({ "graph": g.to_graph6(), "coronal": c.to_string(), "value": c.to_json() });
                mode_json(&mode, &mut v);
                out.json(&v)?;
            }
            Format::Csv => out.csv(
                &["graph", "mode", "alpha", "coronal"],
                &[vec![
                    g.to_graph6(),
                    mode.name().into(),
                    mode.alpha().map(|a| a.to_string()).unwrap_or_default(),
                    c.to_string(),
                ]],
            )?,
        }
    }
    out.finish()?;
    Ok(true)
}

fn opt_str<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map(|x| x.to_string()).unwrap_or_default()
}

fn cmd_invariants(common: &Common) -> CliResult<bool> {
    let alpha = single_alpha(common)?.ok_or_else(|| CliError::Usage("invariants needs --alpha".into()))?;
    let mut out = Output::open(common)?;
    for g in require_graphs(common)? {
        let p = spectra::charpoly_at(&g, &alpha)?;
        let mut report = spectra::invariants_from_charpoly(&p, &alpha)?;
        report.regular_r = spectra::regularity_from_spectrum(&p, &alpha);
        match out.format {
            Format::Text => out.text(format!(
                "n = {}, m = {}, sum of squared degrees = {}, sum of degree products = {}, regular = {}",
                report.n,
                report.m,
                report.sum_sq_degrees.map_or("unknown".into(), |v| v.to_string()),
                report.sum_pair_products.map_or("unknown".into(), |v| v.to_string()),
                report.regular_r.map_or("no".into(), |r| r.to_string()),
            ))?,
            Format::Json => {
                let mut v = serde_json::to_value(&report).expect("report serializes");
                v["graph"] = json!(g.to_graph6());
                v["alpha"] = json!(alpha.to_string());
                out.json(&v)?;
            }
            Format::Csv => out.csv(
                &["graph", "alpha", "n", "m", "sum_sq_degrees", "sum_pair_products", "regular_r"],
                &[vec![
                    g.to_graph6(),
                    alpha.to_string(),
                    report.n.to_string(),
                    report.m.to_string(),
                    opt_str(&report.sum_sq_degrees),
                    opt_str(&report.sum_pair_products),
                    opt_str(&report.regular_r),
                ]],
            )?,
        }
    }
    out.finish()?;
    Ok(true)
}

fn cmd_join(common: &Common, check: bool) -> CliResult<bool> {
    let mode = resolve_mode(common)?;
    let gs = require_graphs(common)?;
    let [g1, g2] = gs.as_slice() else {
        return Err(CliError::Usage(format!("join takes exactly two graphs, got {}", gs.len())));
    };
    let joined = graph::join(g1, g2)?;
    let formula = joins::join_charpoly(g1, g2)?;
    let charpoly = match &mode {
        Mode::Symbolic => ModalCharpoly::Symbolic(formula.clone()),
        Mode::Fixed(a) => ModalCharpoly::Fixed(formula.eval_alpha(a)),
    };
    let agrees = if check {
        let direct = spectra::charpoly_exact_bounded(&joined, joined.order())?;
        Some(direct == formula)
    } else {
        None
    };
    let mut out = Output::open(common)?;
    match out.format {
        Format::Text => {
            out.text(format!("join = {}", joined.to_graph6()))?;
            out.text(format!("charpoly = {}", charpoly.render()))?;
            if let Some(ok) = agrees {
                out.text(format!("check = {}", if ok { "pass" } else { "fail" }))?;
            }
        }
        Format::Json => {
            let mut v = json!({
                "left": g1.to_graph6(),
                "right": g2.to_graph6(),
                "join": joined.to_graph6(),
                "charpoly": charpoly.render(),
            });
            mode_json(&mode, &mut v);
            if let Some(ok) = agrees {
                v["check"] = json!(ok);
            }
            out.json(&v)?;
        }
        Format::Csv => out.csv(
            &["left", "right", "join", "charpoly", "check"],
            &[vec![g1.to_graph6(), g2.to_graph6(), joined.to_graph6(), charpoly.render(), opt_str(&agrees)]],
        )?,
    }
    out.finish()?;
    Ok(agrees.unwrap_or(true))
}

fn cmd_forge(common: &Common) -> CliResult<bool> {
    let mode = resolve_mode(common)?;
    let gs = require_graphs(common)?;
    let (g, h1, h2) = match gs.as_slice() {
        [g, h1, h2] => (g.clone(), h1.clone(), h2.clone()),
        [g] => {
            let n_max = common.max_n.unwrap_or(7);
            match scan::find_coronal_mates(n_max, &mode)? {
                Some((h1, h2)) => (g.clone(), h1, h2),
                None => {
                    eprintln!("no pair with equal spectra and coronals on at most {n_max} vertices in {mode} mode");
                    return Ok(false);
                }
            }
        }
        _ => return Err(CliError::Usage("forge takes G, or G H1 H2".into())),
    };
    let cert = forge_cospectral_pair(&g, &h1, &h2, &mode)?;
    let verified = cert.verify()?;
    let mut out = Output::open(common)?;
    match out.format {
        Format::Text => {
            out.text(format!("{} ~ {}", cert.left.to_graph6(), cert.right.to_graph6()))?;
            out.text(format!("charpoly = {}", cert.charpoly.render()))?;
            out.text(format!("coronals = {} | {}", cert.coronal_left, cert.coronal_right))?;
            out.text(format!("verified = {verified}"))?;
        }
        Format::Json => {
            let mut v = cert.to_json();
            v["verified"] = json!(verified);
            out.json(&v)?;
        }
        Format::Csv => out.csv(
            &["left", "right", "mode", "alpha", "charpoly", "verified"],
            &[vec![
                cert.left.to_graph6(),
                cert.right.to_graph6(),
                mode.name().into(),
                mode.alpha().map(|a| a.to_string()).unwrap_or_default(),
                cert.charpoly.render(),
                verified.to_string(),
            ]],
        )?,
    }
    out.finish()?;
    Ok(verified)
}

fn cmd_scan(common: &Common, mates_only: bool) -> CliResult<bool> {
    let mode = resolve_mode(common)?;
    let mut graphs = load_graphs(common)?;
    if graphs.is_empty() {
        let max = common.max_n.ok_or_else(|| CliError::Usage("scan needs --max-n or input graphs".into()))?;
        for n in common.min_n.unwrap_or(max)..=max {
            graphs.extend(enumerate_graphs(n)?);
        }
    } else {
        graphs = scan::dedupe_classes(&graphs);
    }
    let classes = scan::cospectral_classes(&graphs, &mode)?;
    let mut out = Output::open(common)?;
    let mut shown = 0;
    for c in classes.iter().filter(|c| !mates_only || c.members.len() > 1) {
        shown += 1;
        match out.format {
            Format::Text => out.text(format!(
                "{} [{}] {}",
                c.fingerprint.hex(),
                c.members.len(),
                c.members.iter().map(Graph::to_graph6).collect::<Vec<_>>().join(" ")
            ))?,
            Format::Json => out.json(&c.to_json())?,
            Format::Csv => out.csv(
                &["fingerprint", "size", "members", "charpoly"],
                &[vec![
                    c.fingerprint.hex(),
                    c.members.len().to_string(),
                    c.members.iter().map(Graph::to_graph6).collect::<Vec<_>>().join(" "),
                    c.charpoly.clone(),
                ]],
            )?,
        }
    }
    if out.format == Format::Text {
        out.text(format!("{} graphs, {} classes, {shown} shown", graphs.len(), classes.len()))?;
    }
    out.finish()?;
    Ok(true)
}

fn ds_alphas(family: DsFamily) -> Vec<Rational> {
    match family {
        DsFamily::Wheel | DsFamily::Friendship | DsFamily::CompleteSplit | DsFamily::CliqueJoinPath => {
            vec![rat(3, 5), rat(3, 4)]
        }
        DsFamily::Star | DsFamily::MatchingPlusIsolates | DsFamily::MatchingComplements => {
            vec![rat(1, 4), rat(2, 5), rat(1, 1)]
        }
        _ => vec![rat(1, 4), rat(2, 5)],
    }
}

fn cmd_verify(common: &Common, suite: Suite, family: Option<&str>, timing: bool) -> CliResult<bool> {
    let given = alphas(common)?;
    let pick = |default: Vec<Rational>| if given.is_empty() { default } else { given.clone() };
    let opts = |n_min: usize, n_max: usize, alphas: Vec<Rational>| {
        let mut o = SuiteOptions::new(common.min_n.unwrap_or(n_min), common.max_n.unwrap_or(n_max), alphas);
        o.timing = timing;
        o
    };
    let report = match suite {
        Suite::Ds => {
            let families = match family {
                Some(f) if f != "all" => vec![DsFamily::parse(f)?],
                _ => DsFamily::ALL.to_vec(),
            };
            let mut parts = Vec::new();
            for f in &families {
                let alphas = pick(ds_alphas(*f));
                let modes: Vec<Mode> = match common.mode {
                    Some(ModeArg::Symbolic) => vec![Mode::Symbolic],
                    _ => alphas.iter().cloned().map(Mode::fixed).collect::<alphaspec_core::Result<_>>()?,
                };
                parts.push(suites::verify_ds(*f, &opts(1, 8, alphas), &modes)?);
            }
            if parts.len() == 1 {
                parts.pop().expect("one report")
            } else {
                VerificationReport::combine("ds", parts)
            }
        }
        Suite::CycleMerge => suites::verify_cycle_merge(&opts(7, 12, pick(vec![rat(1, 4), rat(1, 2), rat(3, 4)])))?,
        Suite::PathCycleSplit => {
            suites::verify_path_cycle_split(&opts(7, 12, pick(vec![rat(1, 4), rat(1, 2), rat(3, 4)])))?
        }
        Suite::Dominating => suites::verify_dominating(&opts(1, 7, pick(vec![rat(3, 5), rat(3, 4)])))?,
        Suite::CliquePath => suites::verify_clique_path(&opts(3, 8, pick(vec![rat(3, 5), rat(3, 4)])), &[1, 2])?,
        Suite::Transfer => {
            let o = opts(1, 6, pick(vec![rat(3, 5), rat(3, 4)]));
            let total = o.n_max + 3;
            suites::verify_regular_ds_transfer(&o, 3, total)?
        }
        Suite::RegularShift => suites::verify_regular_shift(&opts(1, 7, pick(vec![rat(1, 4), rat(3, 4)])))?,
        Suite::CorollaryRegression => suites::verify_corollary_regression(common.max_n.unwrap_or(6), timing)?,
    };
    let mut out = Output::open(common)?;
    match out.format {
        Format::Json => out.json(&report.to_json())?,
        Format::Text => {
            out.text(format!(
                "{}: {} ({} checks, n = {}..={}, alpha = {})",
                report.suite,
                if report.passed() { "PASS" } else { "FAIL" },
                report.checks,
                report.parameters.n_min,
                report.parameters.n_max,
                report.parameters.alphas.join(", ")
            ))?;
            for c in &report.counterexamples {
                let right = c.right.as_deref().map(|r| format!(" vs {r}")).unwrap_or_default();
                out.text(format!("  counterexample at alpha = {}: {}{right}: {}", c.alpha, c.left, c.detail))?;
            }
        }
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .counterexamples
                .iter()
                .map(|c| {
                    vec![
                        report.suite.clone(),
                        c.alpha.clone(),
                        c.left.clone(),
                        c.right.clone().unwrap_or_default(),
                        c.detail.clone(),
                    ]
                })
                .collect();
            out.csv(&["suite", "alpha", "left", "right", "detail"], &rows)?;
        }
    }
    out.finish()?;
    Ok(report.passed())
}

fn configure_jobs(common: &Common) -> CliResult<()> {
    if let Some(j) = common.jobs {
        if j == 0 {
            return Err(CliError::Usage("--jobs must be at least 1".into()));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(j)
            .build_global()
            .map_err(|e| CliError::Usage(format!("cannot start {j} workers: {e}")))?;
    }
    Ok(())
}

fn run(cli: Cli) -> CliResult<bool> {
    let common = match &cli.command {
        Command::Charpoly(c)
        | Command::Spectrum(c)
        | Command::Coronal(c)
        | Command::Invariants(c)
        | Command::Forge(c) => c,
        Command::Join { common, .. } | Command::Scan { common, .. } | Command::Verify { common, .. } => common,
    };
    configure_jobs(common)?;
    match &cli.command {
        Command::Charpoly(c) => cmd_charpoly(c),
        Command::Spectrum(c) => cmd_spectrum(c),
        Command::Coronal(c) => cmd_coronal(c),
        Command::Invariants(c) => cmd_invariants(c),
        Command::Join { common, check } => cmd_join(common, *check),
        Command::Forge(c) => cmd_forge(c),
        Command::Scan { common, mates_only } => cmd_scan(common, *mates_only),
        Command::Verify { common, suite, family, timing } => cmd_verify(common, *suite, family.as_deref(), *timing),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
