//! Command implementations behind the `endochain` binary.
//!
//! Every command renders into an [`Output`] instead of printing, so the
//! binary and the tests share one code path.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use endochain::chain::parse_endo_with_form;
use endochain::enumeration::{all_endos_capped, EndoFilter};
use endochain::idempotent::{enumerate_id_family, stabilization_index};
use endochain::roots::{class_report, smallest_congruence_counterexample, type_of, TypeDescriptor};
use endochain::tables::cayley_tables;
use endochain::{
    verify, ClaimId, Endo, LiteralForm, PointSet, Status, VerificationReport, DEFAULT_CAP,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "endochain",
    version,
    about = "Monotone self-maps of finite chains"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Largest chain size accepted for enumeration.
    #[arg(long = "cap-override", default_value_t = DEFAULT_CAP)]
    pub cap: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Fixed points, jump points, idempotent power and type of one map.
    Analyze {
        literal: String,
        #[command(flatten)]
        common: Common,
    },
    /// List the maps on C_n passing every given filter.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        idempotent: bool,
        /// Exact fixed-point set, e.g. `1,5`.
        #[arg(long)]
        fixed: Option<String>,
        /// Exact jump-point set, e.g. `3,4`.
        #[arg(long, conflicts_with = "no_jumps")]
        jumps: Option<String>,
        #[arg(long)]
        no_jumps: bool,
        /// Print only the number of matches.
        #[arg(long)]
        count: bool,
        #[command(flatten)]
        common: Common,
    },
    /// The root class of a map's idempotent power.
    Class {
        literal: String,
        #[command(flatten)]
        common: Common,
    },
    /// Addition and multiplication tables of the idempotents with a given
    /// fixed-point set.
    Tables {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        fixed: String,
        #[command(flatten)]
        common: Common,
    },
    /// Run verification suites on every chain size up to `--n`.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long, required_unless_present = "all", conflicts_with = "all")]
        theorem: Option<String>,
        #[arg(long)]
        all: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Search for the smallest counterexample to a property.
    Counterexample {
        #[arg(long)]
        property: String,
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        common: Common,
    },
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn usage(msg: impl std::fmt::Display) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli),
        Err(e) => {
            let text = e.render().to_string();
            let code = e.exit_code();
            if code == 0 {
                Output {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Output {
                    stdout: String::new(),
                    stderr: text,
                    code: EXIT_USAGE,
                }
            }
        }
    }
}

pub fn run(cli: Cli) -> Output {
    match cli.command {
        Command::Analyze { literal, common } => cmd_analyze(&literal, common.format),
        Command::Enumerate {
            n,
            idempotent,
            fixed,
            jumps,
            no_jumps,
            count,
            common,
        } => {
            let query = EnumerateQuery {
                n,
                idempotent,
                fixed,
                jumps,
                no_jumps,
                count,
            };
            cmd_enumerate(&query, common.format, common.cap)
        }
        Command::Class { literal, common } => cmd_class(&literal, common.format, common.cap),
        Command::Tables { n, fixed, common } => cmd_tables(n, &fixed, common.format),
        Command::Verify {
            n,
            theorem,
            all,
            common,
        } => {
            let selection = if all { None } else { theorem };
            cmd_verify(n, selection.as_deref(), common.format, common.cap)
        }
        Command::Counterexample {
            property,
            n,
            common,
        } => cmd_counterexample(&property, n, common.format, common.cap),
    }
}

fn envelope(command: &str, n: usize, params: Value, result: impl Serialize) -> String {
    let doc = json!({ "command": command, "n": n, "params": params, "result": result });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn csv_rows<I, R>(rows: I) -> String
where
    I: IntoIterator<Item = R>,
    R: IntoIterator,
    R::Item: AsRef<[u8]>,
{
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
}

fn parse_literal(text: &str, stderr: &mut String) -> Result<Endo, Output> {
    match parse_endo_with_form(text) {
        Ok((e, form)) => {
            if form == LiteralForm::Compact {
                let _ = writeln!(
                    stderr,
                    "warning: compact literal {text:?} read as {e}; prefer the comma form"
                );
            }
            Ok(e)
        }
        Err(err) => Err(Output::usage(format_args!("cannot parse {text:?}: {err}"))),
    }
}

/// Parses a comma-separated point list such as `1,5`; the empty string is
/// the empty set.
pub fn parse_point_set(text: &str, n: usize) -> Result<PointSet, String> {
    let mut set = PointSet::empty();
    for token in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let p: usize = token
            .parse()
            .map_err(|_| format!("{token:?} is not a point"))?;
        if p >= n {
            return Err(format!("point {p} is outside C{n}"));
        }
        set.insert(p);
    }
    Ok(set)
}

fn check_size(n: usize, cap: usize) -> Result<(), Output> {
    if n == 0 || n > endochain::chain::MAX_N {
        return Err(Output::usage(format_args!(
            "chain size {n} is not supported"
        )));
    }
    if n > cap {
        return Err(Output::usage(format_args!(
            "n = {n} is above the enumeration cap {cap}; pass --cap-override to raise it"
        )));
    }
    Ok(())
}

fn describe_type(td: &TypeDescriptor) -> String {
    let blocks: Vec<String> = td
        .blocks
        .iter()
        .map(|(a, b)| format!("[{a},{b}]"))
        .collect();
    let jumps: Vec<String> = td.jumps.iter().map(usize::to_string).collect();
    format!(
        "blocks {}; jumps {}",
        blocks.join(" "),
        if jumps.is_empty() {
            "none".to_string()
        } else {
            jumps.join(",")
        }
    )
}

#[derive(Serialize)]
struct Analysis {
    images: Endo,
    fixed_points: PointSet,
    jump_points: PointSet,
    idempotent: bool,
    omega: Endo,
    omega_index: usize,
    stabilization_index: usize,
    blocks: Vec<(usize, usize)>,
    jumps: Vec<usize>,
}

pub fn cmd_analyze(literal: &str, format: Format) -> Output {
    let mut stderr = String::new();
    let e = match parse_literal(literal, &mut stderr) {
        Ok(e) => e,
        Err(out) => return out,
    };
    let om = e.omega();
    let td = type_of(&e);
    let a = Analysis {
        images: e,
        fixed_points: e.fixed_points(),
        jump_points: e.jump_points(),
        idempotent: e.is_idempotent(),
        omega: om.idempotent,
        omega_index: om.index,
        stabilization_index: stabilization_index(&e),
        blocks: td.blocks.clone(),
        jumps: td.jumps.clone(),
    };
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let stdout = match format {
        Format::Json => envelope("analyze", e.n(), json!({ "literal": literal }), &a),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "n: {}", e.n());
            let _ = writeln!(s, "images: {}", a.images);
            let _ = writeln!(s, "fixed points: {}", a.fixed_points);
            let _ = writeln!(s, "jump points: {}", a.jump_points);
            let _ = writeln!(s, "idempotent: {}", yes_no(a.idempotent));
            let _ = writeln!(s, "omega: {} (index {})", a.omega, a.omega_index);
            let _ = writeln!(s, "stabilization index: {}", a.stabilization_index);
            let _ = writeln!(s, "type: {}", describe_type(&td));
            s
        }
        Format::Csv => csv_rows([
            vec!["field".to_string(), "value".to_string()],
            vec!["n".into(), e.n().to_string()],
            vec!["images".into(), a.images.to_string()],
            vec!["fixed_points".into(), a.fixed_points.to_string()],
            vec!["jump_points".into(), a.jump_points.to_string()],
            vec!["idempotent".into(), a.idempotent.to_string()],
            vec!["omega".into(), a.omega.to_string()],
            vec!["omega_index".into(), a.omega_index.to_string()],
            vec![
                "stabilization_index".into(),
                a.stabilization_index.to_string(),
            ],
            vec!["type".into(), describe_type(&td)],
        ]),
    };
    Output {
        stdout,
        stderr,
        code: EXIT_OK,
    }
}

#[derive(Debug, Clone, Default)]
pub struct EnumerateQuery {
    pub n: usize,
    pub idempotent: bool,
    pub fixed: Option<String>,
    pub jumps: Option<String>,
    pub no_jumps: bool,
    pub count: bool,
}

pub fn cmd_enumerate(q: &EnumerateQuery, format: Format, cap: usize) -> Output {
    if let Err(out) = check_size(q.n, cap) {
        return out;
    }
    if q.no_jumps && q.jumps.is_some() {
        return Output::usage("--jumps and --no-jumps cannot be combined");
    }
    let mut filters = Vec::new();
    if q.idempotent {
        filters.push(EndoFilter::Idempotent);
    }
    let sets = (q
        .fixed
        .as_deref()
        .map(|f| parse_point_set(f, q.n))
        .transpose())
    .and_then(|f| {
        Ok((
            f,
            q.jumps
                .as_deref()
                .map(|j| parse_point_set(j, q.n))
                .transpose()?,
        ))
    });
    let (fixed, jumps) = match sets {
        Ok(v) => v,
        Err(msg) => return Output::usage(msg),
    };
    if let Some(f) = fixed {
        filters.push(EndoFilter::FixedSet(f));
    }
    if let Some(j) = jumps {
        if j.contains(0) {
            return Output::usage("0 is never a jump point");
        }
        filters.push(EndoFilter::JumpSet(j));
    }
    if q.no_jumps {
        filters.push(EndoFilter::JumpSet(PointSet::empty()));
    }
    let mut stream = all_endos_capped(q.n, cap).expect("size checked");
    for f in filters {
        stream = stream.with_filter(f);
    }
    let params = json!({
        "idempotent": q.idempotent,
        "fixed": fixed,
        "jumps": jumps,
        "no_jumps": q.no_jumps,
        "count": q.count,
    });
    let stdout = if q.count {
        let total = stream.count();
        match format {
            Format::Text => format!("{total}\n"),
            Format::Csv => csv_rows([["count".to_string()], [total.to_string()]]),
            Format::Json => envelope("enumerate", q.n, params, json!({ "count": total })),
        }
    } else {
        match format {
            Format::Text => stream.map(|e| format!("{e}\n")).collect(),
            Format::Csv => csv_rows(
                std::iter::once(["endo".to_string()]).chain(stream.map(|e| [e.to_string()])),
            ),
            Format::Json => {
                let members: Vec<Endo> = stream.collect();
                envelope(
                    "enumerate",
                    q.n,
                    params,
                    json!({ "count": members.len(), "members": members }),
                )
            }
        }
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

pub fn cmd_class(literal: &str, format: Format, cap: usize) -> Output {
    let mut stderr = String::new();
    let e = match parse_literal(literal, &mut stderr) {
        Ok(e) => e,
        Err(out) => return out,
    };
    if let Err(out) = check_size(e.n(), cap) {
        return out;
    }
    let eps = e.omega().idempotent;
    if eps != e {
        let _ = writeln!(
            stderr,
            "note: {e} is not idempotent; using its idempotent power {eps}"
        );
    }
    let report = class_report(&eps, cap).expect("idempotent within cap");
    if report.order_ct_variant != report.order_bruteforce {
        let _ = writeln!(
            stderr,
            "note: the product with C_{{t_i}} gives {}, the class has {} members",
            report.order_ct_variant, report.order_bruteforce
        );
    }
    let yes_no = |b: bool| if b { "yes" } else { "no" };
    let stdout = match format {
        Format::Json => envelope("class", e.n(), json!({ "literal": literal }), &report),
        Format::Text => {
            let mut s = String::new();
            let _ = writeln!(s, "class of {} on C{}", report.idempotent, report.n);
            let _ = writeln!(s, "type: {}", describe_type(&report.descriptor()));
            let _ = writeln!(s, "members ({}):", report.members.len());
            for m in &report.members {
                let _ = writeln!(s, "  {m}");
            }
            let _ = writeln!(s, "order (brute force): {}", report.order_bruteforce);
            let _ = writeln!(s, "order (segment formula): {}", report.order_formula);
            let flag = if report.order_ct_variant == report.order_bruteforce {
                ""
            } else {
                "  [differs]"
            };
            let _ = writeln!(s, "order (C_t variant): {}{flag}", report.order_ct_variant);
            let _ = writeln!(
                s,
                "constructive listing matches: {}",
                yes_no(report.constructive_matches)
            );
            let _ = writeln!(s, "closed under + and ·: {}", yes_no(report.closure_ok));
            s
        }
        Format::Csv => csv_rows(
            std::iter::once(["member".to_string()])
                .chain(report.members.iter().map(|m| [m.to_string()])),
        ),
    };
    let code = if report.consistent() {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Output {
        stdout,
        stderr,
        code,
    }
}

pub fn cmd_tables(n: usize, fixed: &str, format: Format) -> Output {
    if let Err(out) = check_size(n, endochain::chain::MAX_N) {
        return out;
    }
    let f = match parse_point_set(fixed, n) {
        Ok(f) => f,
        Err(msg) => return Output::usage(msg),
    };
    let family = match enumerate_id_family(n, f) {
        Ok(fam) => fam,
        Err(err) => return Output::usage(err),
    };
    let tables = cayley_tables(&family.members).expect("distinct members of one size");
    let stdout = match format {
        Format::Text => format!(
            "idempotents with fixed set {f} on C{n}: {} elements\n\n{}",
            family.len(),
            tables.render_text()
        ),
        Format::Csv => tables.to_csv(),
        Format::Json => envelope(
            "tables",
            n,
            json!({ "fixed": f }),
            json!({
                "members": family.members,
                "names": tables.default_names(),
                "sum": tables.sum,
                "product": tables.product,
                "closed_under_sum": tables.sum_closed(),
                "closed_under_product": tables.product_closed(),
            }),
        ),
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}

fn render_report(s: &mut String, r: &VerificationReport) {
    let _ = writeln!(
        s,
        "{:<10} {:<17} n={}..{} instances={} failures={}",
        r.claim.as_str(),
        r.status.to_string(),
        r.n_min,
        r.n_max,
        r.instances,
        r.failure_count
    );
    for w in &r.failures {
        let _ = writeln!(
            s,
            "    failure: [{}] expected {} got {}{}",
            w.endos.join(" | "),
            w.expected,
            w.actual,
            if w.note.is_empty() {
                String::new()
            } else {
                format!(" ({})", w.note)
            }
        );
    }
    for w in r.errata.iter().take(3) {
        let _ = writeln!(
            s,
            "    erratum: [{}] brute force {}, C_t variant {}",
            w.endos.join(" | "),
            w.expected,
            w.actual
        );
    }
    for note in &r.notes {
        let _ = writeln!(s, "    note: {note}");
    }
}

/// Runs one suite (`theorem = Some(id)`) or all of them (`None`).
pub fn cmd_verify(n: usize, theorem: Option<&str>, format: Format, cap: usize) -> Output {
    if let Err(out) = check_size(n, cap) {
        return out;
    }
    let reports = match theorem {
        Some(id) => {
            let claim: ClaimId = match id.parse() {
                Ok(c) => c,
                Err(err) => {
                    let known: Vec<&str> = ClaimId::ALL.iter().map(|c| c.as_str()).collect();
                    return Output::usage(format_args!("{err}; known ids: {}", known.join(", ")));
                }
            };
            verify::run_capped(claim, n, cap).map(|r| vec![r])
        }
        None => verify::run_all(n, cap),
    };
    let reports = match reports {
        Ok(r) => r,
        Err(err) => return Output::usage(err),
    };
    let mut stderr = String::new();
    for r in reports
        .iter()
        .filter(|r| r.status == Status::PassWithErratum)
    {
        let _ = writeln!(
            stderr,
            "warning: {} passed with {} recorded erratum witnesses",
            r.claim,
            r.errata.len()
        );
    }
    let stdout = match format {
        Format::Text => {
            let mut s = String::new();
            for r in &reports {
                render_report(&mut s, r);
            }
            s
        }
        Format::Csv => csv_rows(
            std::iter::once(
                [
                    "claim",
                    "status",
                    "n_min",
                    "n_max",
                    "instances",
                    "failures",
                    "errata",
                ]
                .map(String::from),
            )
            .chain(reports.iter().map(|r| {
                [
                    r.claim.to_string(),
                    r.status.to_string(),
                    r.n_min.to_string(),
                    r.n_max.to_string(),
                    r.instances.to_string(),
                    r.failure_count.to_string(),
                    r.errata.len().to_string(),
                ]
            })),
        ),
        Format::Json => envelope(
            "verify",
            n,
            json!({ "theorem": theorem, "all": theorem.is_none() }),
            &reports,
        ),
    };
    let code = if reports.iter().all(VerificationReport::passed) {
        EXIT_OK
    } else {
        EXIT_FAILURE
    };
    Output {
        stdout,
        stderr,
        code,
    }
}

pub fn cmd_counterexample(property: &str, n: usize, format: Format, cap: usize) -> Output {
    if property != "congruence" {
        return Output::usage(format_args!(
            "unknown property {property:?}; supported: congruence"
        ));
    }
    if let Err(out) = check_size(n, cap) {
        return out;
    }
    let found = smallest_congruence_counterexample(n).expect("size checked");
    if let Some((_, w)) = found {
        if !w.is_valid() {
            return Output {
                stdout: String::new(),
                stderr: format!("error: search returned an invalid triple {w:?}\n"),
                code: EXIT_FAILURE,
            };
        }
    }
    let stdout = match (format, found) {
        (Format::Text, None) => "none\n".to_string(),
        (Format::Text, Some((m, w))) => {
            let mut s = String::new();
            let _ = writeln!(s, "n: {m}");
            let _ = writeln!(s, "alpha: {}", w.alpha);
            let _ = writeln!(s, "beta: {}", w.beta);
            let _ = writeln!(s, "gamma: {}", w.gamma);
            let _ = writeln!(s, "alpha·gamma: {}", w.products().0);
            let _ = writeln!(s, "beta·gamma: {}", w.products().1);
            s
        }
        (Format::Csv, found) => {
            let header = ["n", "alpha", "beta", "gamma"].map(String::from);
            let rows = found.map(|(m, w)| {
                [
                    m.to_string(),
                    w.alpha.to_string(),
                    w.beta.to_string(),
                    w.gamma.to_string(),
                ]
            });
            csv_rows(std::iter::once(header).chain(rows))
        }
        (Format::Json, found) => envelope(
            "counterexample",
            n,
            json!({ "property": property }),
            found.map(|(m, w)| {
                json!({
                    "n": m,
                    "alpha": w.alpha,
                    "beta": w.beta,
                    "gamma": w.gamma,
                    "alpha_gamma": w.products().0,
                    "beta_gamma": w.products().1,
                })
            }),
        ),
    };
    Output {
        stdout,
        stderr: String::new(),
        code: EXIT_OK,
    }
}
