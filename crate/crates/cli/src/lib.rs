//! Command-line surface for the `bottjoin` library.
//!
//! Every subcommand reads JSON or flags, validates them through the library's
//! typed schemas, and prints a deterministic report as JSON or text. Exit
//! codes: 0 success, 1 false verdict under `--strict`, 2 input error,
//! 3 internal invariant violation.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use bottjoin::bott::{self, BottOrbifold, ClassVector};
use bottjoin::cscs::{self, CscParams};
use bottjoin::exactmath::Rational;
use bottjoin::join::{self, JoinTower, WeightPair};
use bottjoin::search::{self, GridSpec, SeedStructure};
use bottjoin::serde_util::{format_rational, parse_rational, JsonInt};
use bottjoin::topology;
use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;
use serde_json::{json, Value};

/// Environment variable naming the default directory for search ledgers.
pub const LEDGER_DIR_ENV: &str = "BOTTJOIN_LEDGER_DIR";

#[derive(Debug, Parser)]
#[command(name = "bottjoin", version, about = "Exact invariants of iterated Sasaki joins and Bott orbifolds")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Exit with code 1 when the mathematical verdict is false.
    #[arg(long, global = true)]
    pub strict: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// c1_orb in every invariant basis and the log-Fano verdict.
    BottCheck {
        /// Orbifold JSON `{"n", "A", "m"}`.
        orbifold: PathBuf,
        /// Class to test for ampleness, as all-x coefficients, e.g. `[1, 3/2]`.
        #[arg(long)]
        class: Option<String>,
    },
    /// Stagewise invariants, smoothness and the quotient Bott orbifold.
    JoinAnalyze {
        /// Tower JSON `{"stages": [...]}`.
        tower: PathBuf,
    },
    /// Smoothness certificates of every stage.
    JoinSmooth { tower: PathBuf },
    /// Number of cscS rays in the w-subcone.
    CscsCount(CountArgs),
    /// Isolating interval of the 1-to-3 transition point `L`.
    CscsThreshold(ThresholdArgs),
    /// Extend a Sasaki-Einstein seed family over a grid of (w, v).
    SearchSe(SearchArgs),
    /// `Y^{p,q}` with a quasi-regular cscS ray.
    SearchYpq {
        #[arg(long)]
        max_p: u64,
    },
    /// Closed-form homotopy and cohomology invariants.
    Topology {
        /// Height of the join.
        #[arg(long, conflicts_with = "tower")]
        k: Option<u32>,
        /// Tower JSON; adds stage-2 Chern data or the torsion of H^4.
        #[arg(required_unless_present = "k")]
        tower: Option<PathBuf>,
    },
    /// Print a built-in seed family as JSON.
    Seed {
        #[arg(value_parser = ["dim7", "dim9"])]
        name: String,
    },
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long)]
    pub l0: u64,
    #[arg(long)]
    pub linf: u64,
    #[arg(long)]
    pub w0: u64,
    #[arg(long)]
    pub winf: u64,
    /// Dimension `d_N` of the base; values above 1 need `--a-n`.
    #[arg(long, default_value_t = 1)]
    pub d_n: u32,
    /// `A_N` as a rational; defaults to the value matched at `d_N = 1`.
    #[arg(long)]
    pub a_n: Option<String>,
    /// Isolating-interval width for irrational roots.
    #[arg(long)]
    pub width: Option<String>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    #[arg(long)]
    pub l0: u64,
    #[arg(long)]
    pub w0: u64,
    #[arg(long)]
    pub winf: u64,
    /// Also classify this `linf` against `L`.
    #[arg(long)]
    pub linf: Option<u64>,
    #[arg(long)]
    pub width: Option<String>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    /// `dim7`, `dim9` or a seed JSON file.
    #[arg(long)]
    pub seed: String,
    #[arg(long, required_unless_present = "pairs")]
    pub w_max: Option<u64>,
    #[arg(long, required_unless_present = "pairs")]
    pub v_max: Option<u64>,
    /// Keep only `vinf/v0 = ratio * winf/w0`.
    #[arg(long)]
    pub ratio: Option<String>,
    /// Also admit candidates with `n <= 0`.
    #[arg(long)]
    pub any_n: bool,
    /// Explicit `[[w0, winf], [v0, vinf]]` list instead of a grid.
    #[arg(long, conflicts_with_all = ["w_max", "v_max", "ratio"])]
    pub pairs: Option<PathBuf>,
    #[arg(long, default_value_t = 1)]
    pub threads: usize,
    /// Ledger file, appended to. Defaults to a file under the ledger directory.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, env = LEDGER_DIR_ENV)]
    pub ledger_dir: Option<PathBuf>,
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Invariant(String),
}

impl From<bottjoin::Error> for Failure {
    fn from(e: bottjoin::Error) -> Self {
        if e.is_input_error() {
            Failure::Input(e.to_string())
        } else {
            Failure::Invariant(e.to_string())
        }
    }
}

type CmdResult = std::result::Result<Report, Failure>;

/// A rendered report plus the verdict `--strict` acts on.
struct Report {
    json: Value,
    text: String,
    verdict: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome { code, stdout: rendered, stderr: String::new() }
            } else {
                Outcome { code, stdout: String::new(), stderr: diagnostic("usage", &e.kind().to_string(), &rendered) }
            };
        }
    };
    execute(&cli)
}

pub fn execute(cli: &Cli) -> Outcome {
    match dispatch(&cli.command) {
        Ok(r) => {
            let stdout = match cli.global.format {
                Format::Json => pretty(&r.json),
                Format::Text => r.text,
            };
            let code = if cli.global.strict && !r.verdict { 1 } else { 0 };
            Outcome { code, stdout, stderr: String::new() }
        }
        Err(Failure::Input(msg)) => Outcome { code: 2, stdout: String::new(), stderr: diagnostic("input", "invalid input", &msg) },
        Err(Failure::Invariant(msg)) => Outcome {
            code: 3,
            stdout: String::new(),
            stderr: diagnostic("invariant", "internal invariant violated", &msg),
        },
    }
}

/// One-line JSON diagnostic for stderr.
fn diagnostic(kind: &str, summary: &str, detail: &str) -> String {
    let v = json!({"error": kind, "summary": summary, "message": detail.trim_end()});
    format!("{v}\n")
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn to_value<T: Serialize>(v: &T) -> std::result::Result<Value, Failure> {
    serde_json::to_value(v).map_err(|e| Failure::Invariant(format!("serialize: {e}")))
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> std::result::Result<T, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn rational_arg(s: &str, what: &str) -> std::result::Result<Rational, Failure> {
    parse_rational(s.trim()).ok_or_else(|| Failure::Input(format!("{what}: cannot parse {s:?} as a rational")))
}

fn width_arg(w: &Option<String>) -> std::result::Result<Rational, Failure> {
    match w {
        None => Ok(cscs::default_width()),
        Some(s) => {
            let r = rational_arg(s, "--width")?;
            if r <= Rational::from_integer(0.into()) {
                return Err(Failure::Input("--width must be positive".into()));
            }
            Ok(r)
        }
    }
}

fn pair(a: u64, b: u64) -> std::result::Result<WeightPair, Failure> {
    Ok(WeightPair::new(a, b)?)
}

fn fmt_rats(xs: &[Rational]) -> String {
    let parts: Vec<String> = xs.iter().map(format_rational).collect();
    format!("[{}]", parts.join(", "))
}

fn fmt_ints(xs: &[bottjoin::exactmath::Integer]) -> String {
    let parts: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(", "))
}

fn dispatch(cmd: &Command) -> CmdResult {
    match cmd {
        Command::BottCheck { orbifold, class } => bott_check(orbifold, class.as_deref()),
        Command::JoinAnalyze { tower } => join_analyze(tower),
        Command::JoinSmooth { tower } => join_smooth(tower),
        Command::CscsCount(a) => cscs_count(a),
        Command::CscsThreshold(a) => cscs_threshold(a),
        Command::SearchSe(a) => search_se(a),
        Command::SearchYpq { max_p } => search_ypq(*max_p),
        Command::Topology { k, tower } => topology_cmd(*k, tower.as_deref()),
        Command::Seed { name } => seed_cmd(name),
    }
}

fn bott_check(path: &Path, class: Option<&str>) -> CmdResult {
    let orb: BottOrbifold = read_json(path)?;
    let report = bott::is_log_fano(&orb);
    let c1 = bott::c1_orb(&orb);
    let mut text = format!("n: {}\nc1_orb (all-x): {}\n", orb.n(), fmt_rats(c1.coeffs()));
    let mut table = Vec::new();
    for row in &report.table.rows {
        text.push_str(&format!("  {}: {}\n", row.basis(), fmt_rats(row.coeffs())));
        let coeffs: Vec<String> = row.coeffs().iter().map(format_rational).collect();
        table.push(json!({"basis": row.basis().to_string(), "coefficients": coeffs, "positive": row.is_strictly_positive()}));
    }
    text.push_str(&format!("log Fano: {}\n", report.log_fano));
    let failing = report.failing_basis().map(|b| b.to_string());
    if let Some(b) = &failing {
        text.push_str(&format!("offending basis: {b}\n"));
    }
    let fano_index = if report.log_fano {
        let i = bott::fano_index(&orb)?;
        text.push_str(&format!("Fano index: {i}\n"));
        Some(i.to_string())
    } else {
        None
    };
    let mut verdict = report.log_fano;
    let mut out = json!({
        "orbifold": to_value(&orb)?,
        "c1_orb": c1.coeffs().iter().map(format_rational).collect::<Vec<_>>(),
        "table": table,
        "log_fano": report.log_fano,
        "failing_basis": failing,
        "fano_index": fano_index,
    });
    if let Some(s) = class {
        let coeffs: Vec<String> = serde_json::from_str::<Vec<Value>>(s)
            .map_err(|e| Failure::Input(format!("--class: {e}")))?
            .into_iter()
            .map(|v| match v {
                Value::String(s) => s,
                other => other.to_string(),
            })
            .collect();
        let coeffs = coeffs
            .iter()
            .map(|c| rational_arg(c, "--class"))
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if coeffs.len() != orb.n() {
            return Err(Failure::Input(format!("--class needs {} coefficients", orb.n())));
        }
        let d = ClassVector::in_x(coeffs);
        let ample = bott::is_ample(&d, &orb)?;
        text.push_str(&format!("class {}: ample: {ample}\n", fmt_rats(d.coeffs())));
        out["class"] = json!(d.coeffs().iter().map(format_rational).collect::<Vec<_>>());
        out["ample"] = json!(ample);
        verdict &= ample;
    }
    Ok(Report { json: out, text, verdict })
}

fn join_analyze(path: &Path) -> CmdResult {
    let tower: JoinTower = read_json(path)?;
    let r = join::analyze_tower(&tower)?;
    let mut text = format!("height: {}\n", tower.height());
    for s in &r.stages {
        text.push_str(&format!("stage {}: l = {}, w = {}", s.stage, s.l, s.w));
        if let Some(v) = s.v {
            text.push_str(&format!(", v = {v}"));
        }
        text.push('\n');
        if let Some(inv) = &s.invariants {
            text.push_str(&format!("  s = {}, m = {}, n = {}\n", inv.s, inv.m, inv.n));
        }
        if let Some(c) = &s.smoothness {
            text.push_str(&format!("  smooth: {}\n", c.smooth));
        }
        if let Some(u) = &s.upsilon {
            text.push_str(&format!("  upsilon: {} = {u}\n", u.value()));
        }
        if let Some(o) = &s.omega_primitive {
            text.push_str(&format!("  omega (primitive): {}\n", fmt_ints(o)));
        }
        if let Some(row) = &s.a_row {
            text.push_str(&format!("  A row: {}\n", fmt_ints(row)));
        }
    }
    if let Some(c) = &r.stage2_c1 {
        text.push_str(&format!(
            "stage-2 c1 coefficient: {}\nGorenstein: {}\n",
            c.coefficient,
            c.coefficient.is_zero()
        ));
    }
    text.push_str(&format!("smooth: {}\n", r.smooth));
    text.push_str(&format!("quotient: {}\n", serde_json::to_string(&r.quotient).map_err(|e| Failure::Invariant(e.to_string()))?));
    Ok(Report { json: to_value(&r)?, text, verdict: r.smooth })
}

fn join_smooth(path: &Path) -> CmdResult {
    let tower: JoinTower = read_json(path)?;
    let r = join::analyze_tower(&tower)?;
    let mut text = String::new();
    let mut certs = Vec::new();
    for s in &r.stages {
        if let Some(c) = &s.smoothness {
            text.push_str(&format!("stage {}: smooth: {}\n", s.stage, c.smooth));
            certs.push(json!({"stage": s.stage, "certificate": to_value(c)?}));
        }
    }
    text.push_str(&format!("smooth: {}\n", r.smooth));
    Ok(Report {
        json: json!({"tower": to_value(&tower)?, "smooth": r.smooth, "stages": certs}),
        text,
        verdict: r.smooth,
    })
}

fn render_roots(roots: &[cscs::RayRoot]) -> String {
    let mut text = String::new();
    for r in roots {
        match r {
            cscs::RayRoot::Rational { value, multiplicity } => {
                text.push_str(&format!("  b = {} (rational, multiplicity {multiplicity})\n", format_rational(value)))
            }
            cscs::RayRoot::Interval(i) => text.push_str(&format!(
                "  b in ({}, {}) (multiplicity {})\n",
                format_rational(&i.lo),
                format_rational(&i.hi),
                i.multiplicity
            )),
        }
    }
    text
}

fn cscs_count(a: &CountArgs) -> CmdResult {
    let l = pair(a.l0, a.linf)?;
    let w = pair(a.w0, a.winf)?;
    let width = width_arg(&a.width)?;
    if a.d_n == 1 && a.a_n.is_none() {
        let r = cscs::analyze(l, w, &width)?;
        let mut text = format!("rays: {}\n", r.count);
        text.push_str(&render_roots(&r.roots));
        text.push_str(&format!(
            "threshold L in ({}, {}): linf is {}\n",
            format_rational(&r.threshold.interval.lo),
            format_rational(&r.threshold.interval.hi),
            match r.threshold.classification {
                cscs::Classification::Below => "below",
                cscs::Classification::At => "at",
                cscs::Classification::Above => "above",
            }
        ));
        text.push_str(&format!("c1 check: {}\n", r.c1_check));
        let verdict = r.c1_check;
        return Ok(Report { json: to_value(&r)?, text, verdict });
    }
    let a_n = match &a.a_n {
        Some(s) => rational_arg(s, "--a-n")?,
        None => return Err(Failure::Input("--a-n is required when --d-n is not 1".into())),
    };
    let params = CscParams::new(a.d_n, a_n, l, w)?;
    let rc = cscs::count_rays_general(&params)?;
    let mut text = format!("rays: {}\n", rc.count);
    text.push_str(&render_roots(&rc.roots));
    Ok(Report {
        json: json!({"params": to_value(&params)?, "count": rc.count, "roots": to_value(&rc.roots)?}),
        text,
        verdict: true,
    })
}

fn cscs_threshold(a: &ThresholdArgs) -> CmdResult {
    let w = pair(a.w0, a.winf)?;
    if a.l0 == 0 {
        return Err(Failure::Input("l0 must be positive".into()));
    }
    let width = width_arg(&a.width)?;
    let th = cscs::threshold_interval(a.l0, w, &width)?;
    let mut text = format!(
        "L in ({}, {})\nbounds: ({}, {})\nwithin bounds: {}\n",
        format_rational(&th.interval.lo),
        format_rational(&th.interval.hi),
        format_rational(&th.lower_bound),
        format_rational(&th.upper_bound),
        th.within_bounds()
    );
    let mut out = json!({"l0": a.l0, "w": to_value(&w)?, "threshold": to_value(&th)?, "within_bounds": th.within_bounds()});
    if let Some(linf) = a.linf {
        let c = cscs::classify(a.l0, w, linf)?;
        text.push_str(&format!("linf = {linf}: {}\n", to_value(&c)?.as_str().unwrap_or_default()));
        out["linf"] = json!(linf);
        out["classification"] = to_value(&c)?;
    }
    Ok(Report { json: out, text, verdict: th.within_bounds() })
}

fn load_seed(s: &str) -> std::result::Result<SeedStructure, Failure> {
    let seed = match s {
        "dim7" => SeedStructure::dim7(),
        "dim9" => SeedStructure::dim9(),
        path => read_json(Path::new(path))?,
    };
    seed.validate()?;
    Ok(seed)
}

fn search_se(a: &SearchArgs) -> CmdResult {
    let seed = load_seed(&a.seed)?;
    let (pairs, spec) = match &a.pairs {
        Some(p) => {
            let raw: Vec<[[u64; 2]; 2]> = read_json(p)?;
            let pairs = raw
                .iter()
                .map(|[w, v]| Ok((pair(w[0], w[1])?, pair(v[0], v[1])?)))
                .collect::<std::result::Result<Vec<_>, Failure>>()?;
            (pairs, None)
        }
        None => {
            let mut spec = GridSpec::new(a.w_max.unwrap_or(0), a.v_max.unwrap_or(0));
            if let Some(r) = &a.ratio {
                spec = spec.with_ratio(rational_arg(r, "--ratio")?);
            }
            spec.positive_n = !a.any_n;
            (spec.pairs()?, Some(spec))
        }
    };
    let ledger_path = match (&a.out, &a.ledger_dir) {
        (Some(p), _) => Some(p.clone()),
        (None, Some(dir)) => Some(dir.join(default_ledger_name(&seed, spec.as_ref()))),
        (None, None) => None,
    };
    let mut buf: Vec<u8> = Vec::new();
    let summary = search::evaluate_pairs(&seed, &pairs, !a.any_n, a.threads, &mut buf)?;
    let ledger_text = String::from_utf8(buf).map_err(|e| Failure::Invariant(e.to_string()))?;
    if let Some(p) = &ledger_path {
        if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir).map_err(|e| Failure::Input(format!("{}: {e}", dir.display())))?;
        }
        let mut f = fs::OpenOptions::new()
            .create(true)
            .append(true)
            .open(p)
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
        f.write_all(ledger_text.as_bytes())
            .map_err(|e| Failure::Input(format!("{}: {e}", p.display())))?;
    }
    let mut candidates = Vec::new();
    let mut text = format!(
        "seed: dimension {}, index {}\nevaluated: {}\nadmitted: {}\n",
        seed.dimension, seed.fano_index, summary.evaluated, summary.admitted
    );
    for (c, ok) in search::replay_ledger(&ledger_text)? {
        if !ok {
            return Err(Failure::Invariant(format!("candidate w = {}, v = {} failed its recheck", c.w, c.v)));
        }
        text.push_str(&format!(
            "  w = {}, v = {}: l = {}, n = {}, upsilon = {}\n",
            c.w, c.v, c.l, c.stage.n, c.upsilon
        ));
        candidates.push(json!({
            "w": c.w,
            "v": c.v,
            "l": c.l,
            "s": JsonInt(c.stage.s.clone()),
            "m": JsonInt(c.stage.m.clone()),
            "n": JsonInt(c.stage.n.clone()),
            "upsilon": c.upsilon.to_string(),
            "modulus": c.smoothness_modulus.to_string(),
        }));
    }
    if let Some(p) = &ledger_path {
        text.push_str(&format!("ledger: {}\n", p.display()));
    }
    let out = json!({
        "seed": to_value(&seed)?,
        "grid": spec.as_ref().map(to_value).transpose()?,
        "summary": to_value(&summary)?,
        "ledger": ledger_path.as_ref().map(|p| p.display().to_string()),
        "candidates": candidates,
    });
    Ok(Report { json: out, text, verdict: summary.admitted > 0 })
}

fn default_ledger_name(seed: &SeedStructure, spec: Option<&GridSpec>) -> String {
    match spec {
        Some(s) => {
            let ratio = s
                .ratio
                .as_ref()
                .map(|r| format!("-r{}", format_rational(r).replace('/', "_")))
                .unwrap_or_default();
            format!("se-dim{}-w{}-v{}{ratio}.jsonl", seed.dimension, s.w_max, s.v_max)
        }
        None => format!("se-dim{}-pairs.jsonl", seed.dimension),
    }
}

fn search_ypq(max_p: u64) -> CmdResult {
    let sols = search::ypq_csc_search(max_p);
    let mut text = format!("solutions: {}\n", sols.len());
    for s in &sols {
        text.push_str(&format!("  (p, q, n) = ({}, {}, {})\n", s.p, s.q, s.n));
    }
    Ok(Report {
        json: json!({"max_p": max_p, "solutions": to_value(&sols)?}),
        text,
        verdict: !sols.is_empty(),
    })
}

fn topology_cmd(k: Option<u32>, tower: Option<&Path>) -> CmdResult {
    let r = match (k, tower) {
        (Some(k), _) => topology::invariants(k)?,
        (None, Some(p)) => {
            let t: JoinTower = read_json(p)?;
            topology::tower_report(&t)?
        }
        (None, None) => return Err(Failure::Input("either --k or a tower is required".into())),
    };
    let opt = |x: Option<u64>| x.map_or("undetermined".to_string(), |v| v.to_string());
    let mut text = format!(
        "k: {}\ndimension: {}\npi1: {}\npi2 rank: {}\npi3 rank: {}\npi4: Z_2^{}\nH2 rank: {}\nH3 rank: {}\nH4 free rank: {}\n",
        r.k,
        r.dimension,
        if r.pi1_trivial { "0" } else { "nontrivial" },
        r.pi2_rank,
        r.pi3_rank,
        r.pi4_2torsion_rank,
        r.h2_rank,
        opt(r.h3),
        opt(r.h4_free_rank)
    );
    for c in &r.even_betti_claims {
        if let (Some(v), Some(ok)) = (c.known_value, c.consistent) {
            text.push_str(&format!("  b{} = {v}: even claim {}\n", c.degree, if ok { "holds" } else { "fails" }));
        }
    }
    if let Some(t) = &r.dim7_torsion {
        text.push_str(&format!("H4 torsion: Z_{} + Z_{}\n", t.first, t.second));
    }
    if let Some(s) = &r.stage2 {
        text.push_str(&format!("stage-2 c1 coefficient: {}\n", s.coefficient));
    }
    Ok(Report { json: to_value(&r)?, text, verdict: true })
}

fn seed_cmd(name: &str) -> CmdResult {
    let seed = load_seed(name)?;
    let v = to_value(&seed)?;
    Ok(Report { text: pretty(&v), json: v, verdict: true })
}
