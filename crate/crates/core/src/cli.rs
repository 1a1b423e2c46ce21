//! The `ct` command line.
//!
//! Everything runs through [`run`], which writes to caller-supplied streams
//! and returns the process exit code: 0 success, 1 other failure, 2 usage or
//! parse error, 3 violated mathematical invariant.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde::Serialize;

use crate::error::Error;
use crate::graph::{shape_match_horizontal, GraphComponent, ProductGraph, DEFAULT_BUDGET, STAIRCASE_SHAPE};
use crate::group::{
    bsgs_build, conjecture_check, ctk_degree, ctk_generators, ctk_generators_full, factorial,
    verify_reference_orders, GeneratorSet, DEFAULT_MAX_DEGREE,
};
use crate::order::{
    applicable_methods, default_window, product_order_finite, product_order_graph_window,
    product_order_trace, reports_disagree, window_components, Method, OrderReport, OrderStatus,
};
use crate::perm::{embed_phi, horizontal_product_perm, FinitePermutation};
use crate::search::{search_horizontal, write_csv, write_json, OutputFormat, PUBLISHED_WITNESSES};
use crate::transposition::ClassTransposition;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;

/// Half-width of the window `refine` checks pointwise.
pub const REFINE_WINDOW: i64 = 10_000;

#[derive(Debug, Parser)]
#[command(name = "ct", version, about = "Exact computations with class transpositions of the integers")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Order of the product t1·t2, cross-checked by every applicable method.
    Order(OrderArgs),
    /// Connected components of the product graph.
    Components(ComponentsArgs),
    /// All ordered pairs of horizontal transpositions up to a modulus.
    Search(SearchArgs),
    /// Cycle structure of a product of horizontal transpositions.
    Cycles(CyclesArgs),
    /// Split a transposition into n transpositions of n-fold modulus.
    Refine(RefineArgs),
    /// The integral map n ↦ n + (n mod m)^σ − (n mod m).
    Embed(EmbedArgs),
    /// Orders of groups generated by residue-class transpositions.
    Group(GroupArgs),
    /// Compare |⟨CT_2, ..., CT_k⟩| with N! for N = lcm(2, ..., k).
    Conjecture(ConjectureArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Finite,
    Graph,
    Trace,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Finite => Method::Finite,
            MethodArg::Graph => Method::Graph,
            MethodArg::Trace => Method::Trace,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for OutputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => OutputFormat::Csv,
            FormatArg::Json => OutputFormat::Json,
        }
    }
}

#[derive(Debug, Args)]
pub struct OrderArgs {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    /// Method whose result is reported; the others still cross-check it.
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
    /// Vertex / step budget per traversal.
    #[arg(long, env = "CT_DEFAULT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    /// Half-width of the window for pairs that are not both horizontal.
    #[arg(long)]
    pub window: Option<i64>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct ComponentsArgs {
    pub t1: ClassTransposition,
    pub t2: ClassTransposition,
    #[arg(long, env = "CT_DEFAULT_BUDGET", default_value_t = DEFAULT_BUDGET)]
    pub budget: usize,
    #[arg(long)]
    pub window: Option<i64>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[arg(long, default_value_t = 12)]
    pub max_modulus: i64,
    /// Where to write the records; the summary always goes to stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    pub format: FormatArg,
    /// Evaluate on the current thread only.
    #[arg(long)]
    pub sequential: bool,
}

#[derive(Debug, Args)]
pub struct CyclesArgs {
    #[arg(required = true)]
    pub transpositions: Vec<ClassTransposition>,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct RefineArgs {
    pub t: ClassTransposition,
    pub n: i64,
}

#[derive(Debug, Args)]
pub struct EmbedArgs {
    pub m: usize,
    /// σ in cycle notation on {0, ..., m-1}, e.g. "(0,1)".
    pub perm: String,
    #[arg(long, allow_hyphen_values = true)]
    pub at: Option<i64>,
}

#[derive(Debug, Args)]
pub struct GroupArgs {
    #[command(subcommand)]
    pub command: GroupCommand,
}

#[derive(Debug, Subcommand)]
pub enum GroupCommand {
    /// Recompute the reference orders, one PASS/FAIL line each.
    Table,
    /// ⟨CT_k1, CT_k2, ...⟩ for a comma-separated list of k.
    Ctk {
        #[arg(value_delimiter = ',', required = true)]
        ks: Vec<usize>,
        /// Degree of the symmetric group; defaults to lcm of the list.
        #[arg(long)]
        degree: Option<usize>,
        #[arg(long)]
        fixed_points: bool,
        /// Use all C(k,2) transpositions of each modulus.
        #[arg(long)]
        full: bool,
        #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
        max_degree: usize,
    },
    /// Generators from a JSON file `{"degree": n, "generators": [{"cycles": [[..]]}]}`.
    File {
        path: PathBuf,
        #[arg(long)]
        fixed_points: bool,
    },
}

#[derive(Debug, Args)]
pub struct ConjectureArgs {
    pub k: usize,
    #[arg(long, default_value_t = DEFAULT_MAX_DEGREE)]
    pub max_degree: usize,
    #[arg(long)]
    pub json: bool,
}

/// Parses `args` (program name first) and runs the command.
pub fn main_with_args<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(cli, out, err),
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            if e.use_stderr() {
                let _ = write!(err, "{text}");
            } else {
                let _ = write!(out, "{text}");
            }
            code
        }
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let result = match cli.command {
        Command::Order(a) => cmd_order(a, out, err),
        Command::Components(a) => cmd_components(a, out, err),
        Command::Search(a) => cmd_search(a, out, err),
        Command::Cycles(a) => cmd_cycles(a, out),
        Command::Refine(a) => cmd_refine(a, out),
        Command::Embed(a) => cmd_embed(a, out),
        Command::Group(a) => cmd_group(a, out),
        Command::Conjecture(a) => cmd_conjecture(a, out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Json(#[from] serde_json::Error),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) => match e {
                Error::Parse { .. }
                | Error::Range { .. }
                | Error::NotDisjoint { .. }
                | Error::InvalidArgument(_)
                | Error::NotHorizontal(_)
                | Error::DegreeMismatch { .. } => EXIT_USAGE,
                Error::ShapeViolation(_) => EXIT_INVARIANT,
                _ => EXIT_FAILURE,
            },
            _ => EXIT_FAILURE,
        }
    }
}

type CliResult = std::result::Result<i32, CliError>;

fn show_order(r: &OrderReport) -> String {
    match &r.order {
        Some(o) => o.to_string(),
        None => "unknown".to_string(),
    }
}

/// A published witness line whose listed order differs from the computed one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub listed: u64,
    #[serde(serialize_with = "ser_big")]
    pub computed: BigUint,
    pub note: String,
}

fn ser_big<S: serde::Serializer>(v: &BigUint, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Checks the pair against the published witness list.
pub fn published_discrepancy(
    t1: &ClassTransposition,
    t2: &ClassTransposition,
    computed: &BigUint,
) -> Option<Discrepancy> {
    PUBLISHED_WITNESSES.iter().find_map(|&(a, b, listed)| {
        let (a, b): (ClassTransposition, ClassTransposition) = (a.parse().ok()?, b.parse().ok()?);
        (a == *t1 && b == *t2 && *computed != BigUint::from(listed)).then(|| Discrepancy {
            listed,
            computed: computed.clone(),
            note: format!(
                "the published witness list gives order {listed} for this pair; direct computation gives {computed}"
            ),
        })
    })
}

#[derive(Serialize)]
struct OrderOutput<'a> {
    report: &'a OrderReport,
    cross_check: Vec<&'a OrderReport>,
    agree: bool,
    discrepancy: Option<Discrepancy>,
}

fn cmd_order(a: OrderArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let (t1, t2) = (a.t1, a.t2);
    let horizontal = t1.is_horizontal() && t2.is_horizontal();
    let primary = a.method.map(Method::from).unwrap_or(if horizontal {
        Method::Finite
    } else {
        Method::Graph
    });
    if primary == Method::Finite && !horizontal {
        return Err(Error::NotHorizontal(format!(
            "the finite method needs two horizontal transpositions, got {t1} and {t2}"
        ))
        .into());
    }
    let window = a.window.unwrap_or_else(|| default_window(a.budget));
    let compute = |m: Method| match m {
        Method::Finite => product_order_finite(&t1, &t2),
        Method::Graph => product_order_graph_window(&t1, &t2, a.budget, window),
        Method::Trace => product_order_trace(&t1, &t2, a.budget, window),
    };
    let mut reports = vec![compute(primary)?];
    for m in applicable_methods(&t1, &t2) {
        if m != primary {
            reports.push(compute(m)?);
        }
    }
    let agree = !reports
        .iter()
        .any(|r| reports.iter().any(|s| reports_disagree(r, s)));
    let main = &reports[0];
    let discrepancy = main
        .order
        .as_ref()
        .and_then(|o| published_discrepancy(&t1, &t2, o));

    if let Some(d) = &discrepancy {
        writeln!(err, "warning: {}", d.note)?;
    }
    if !agree {
        writeln!(err, "error: methods disagree on the order of τ_{{{t1}}}·τ_{{{t2}}}")?;
    }
    if a.json {
        let o = OrderOutput {
            report: main,
            cross_check: reports[1..].iter().collect(),
            agree,
            discrepancy,
        };
        writeln!(out, "{}", serde_json::to_string_pretty(&o)?)?;
    } else {
        writeln!(out, "{}", show_order(main))?;
        writeln!(out, "status: {}  method: {}", main.status, main.method)?;
        if let Some(w) = main.window {
            writeln!(out, "window: [-{w}, {w}]")?;
        }
        if main.status == OrderStatus::Unknown {
            if let Some(p) = &main.partial_order {
                writeln!(out, "lcm of closed cycles found: {p}")?;
            }
        }
        for r in &reports[1..] {
            writeln!(out, "cross-check {}: {} ({})", r.method, show_order(r), r.status)?;
        }
    }
    Ok(if agree { EXIT_OK } else { EXIT_INVARIANT })
}

fn describe_component(c: &GraphComponent, shape: Option<u8>) -> String {
    let lengths: Vec<String> = match c.cycle_lengths() {
        Ok(ls) => ls.iter().map(|l| l.to_string()).collect(),
        Err(_) => vec!["?".into()],
    };
    let shape = match shape {
        Some(STAIRCASE_SHAPE) => format!(", shape {STAIRCASE_SHAPE} (staircase, not in the seven-shape catalogue)"),
        Some(s) => format!(", shape {s}"),
        None => String::new(),
    };
    format!(
        "{}{}, {} vertices, {} type-1 edges, cycle lengths [{}]\n  {}",
        c.kind,
        shape,
        c.len(),
        c.type1_edges,
        lengths.join(", "),
        c.dump()
    )
}

fn cmd_components(a: ComponentsArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    let graph = ProductGraph::new(a.t1, a.t2);
    if a.t1.is_horizontal() && a.t2.is_horizontal() {
        let period = graph.period()?;
        let components = graph.horizontal_components()?;
        writeln!(out, "{} components per period {period}", components.len())?;
        let mut outside = 0;
        for c in &components {
            let shape = shape_match_horizontal(c)?;
            if !shape.is_catalogued() {
                outside += 1;
            }
            writeln!(out, "{}", describe_component(c, Some(shape.shape)))?;
        }
        let perm = horizontal_product_perm(&[a.t1, a.t2])?;
        let fixed = perm.fixed_points();
        writeln!(out, "fixed points mod {period}: {fixed:?}")?;
        if outside > 0 {
            writeln!(
                err,
                "warning: {outside} component(s) match none of the seven catalogued shapes"
            )?;
            return Ok(EXIT_INVARIANT);
        }
        return Ok(EXIT_OK);
    }
    let window = a.window.unwrap_or_else(|| default_window(a.budget));
    let (components, complete) = window_components(&graph, a.budget, window);
    writeln!(
        out,
        "{} components through vertices with |μ| ≤ {window}{}",
        components.len(),
        if complete { "" } else { " (stopped at a truncated one)" }
    )?;
    for c in &components {
        writeln!(out, "{}", describe_component(c, None))?;
    }
    Ok(EXIT_OK)
}

fn cmd_search(a: SearchArgs, out: &mut dyn Write, err: &mut dyn Write) -> CliResult {
    if a.max_modulus < 2 {
        return Err(Error::InvalidArgument(format!(
            "max modulus must be at least 2, got {}",
            a.max_modulus
        ))
        .into());
    }
    let (records, summary) = search_horizontal(a.max_modulus, !a.sequential)?;
    if let Some(path) = &a.out {
        let mut w = BufWriter::new(File::create(path)?);
        match OutputFormat::from(a.format) {
            OutputFormat::Csv => write_csv(&mut w, &records)?,
            OutputFormat::Json => write_json(&mut w, &records, &summary)?,
        }
        w.flush()?;
    }
    let expected: i64 = (2..=a.max_modulus).map(|n| n * (n - 1) / 2).sum();
    let count_ok = summary.transpositions as i64 == expected;

    writeln!(out, "max modulus: {}", summary.max_modulus)?;
    writeln!(out, "transpositions: {} (expected {expected})", summary.transpositions)?;
    writeln!(out, "ordered pairs: {}", summary.pairs)?;
    let realized: Vec<String> = summary.realized_orders.iter().map(u64::to_string).collect();
    writeln!(out, "realized orders: {{{}}}", realized.join(", "))?;
    for w in &summary.witnesses {
        writeln!(out, "witness {w}")?;
    }
    for p in &summary.published {
        if p.matches {
            writeln!(out, "published |τ_{{{}}} · τ_{{{}}}| = {}: confirmed", p.t1, p.t2, p.listed)?;
        } else {
            write!(
                out,
                "published |τ_{{{}}} · τ_{{{}}}| = {}: DISCREPANCY, computed {}",
                p.t1, p.t2, p.listed, p.computed
            )?;
            match &p.replacement {
                Some(r) => writeln!(out, "; order {} is realized by {r}", p.listed)?,
                None => writeln!(out)?,
            }
        }
    }
    if summary.has_violations() || !count_ok {
        for v in &summary.violations {
            writeln!(err, "violation: {v}")?;
        }
        if !count_ok {
            writeln!(err, "error: transposition count mismatch")?;
        }
        writeln!(out, "violations: {}", summary.violations.len())?;
        return Ok(EXIT_INVARIANT);
    }
    writeln!(out, "violations: none")?;
    Ok(EXIT_OK)
}

fn cmd_cycles(a: CyclesArgs, out: &mut dyn Write) -> CliResult {
    let perm = horizontal_product_perm(&a.transpositions)?;
    let cs = perm.cycle_structure();
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&cs.report())?)?;
    } else {
        writeln!(out, "degree: {}", perm.degree())?;
        writeln!(out, "{}", cs.lift())?;
        writeln!(out, "order: {}", cs.order())?;
    }
    Ok(EXIT_OK)
}

fn cmd_refine(a: RefineArgs, out: &mut dyn Write) -> CliResult {
    let parts = a.t.refine(a.n)?;
    let verified = (-REFINE_WINDOW..=REFINE_WINDOW).all(|x| {
        let y = parts.iter().fold(x, |y, p| p.apply(y));
        y == a.t.apply(x)
    });
    let text: Vec<String> = parts.iter().map(ToString::to_string).collect();
    let tag = if verified { "[verified]" } else { "[MISMATCH]" };
    writeln!(out, "{}  {tag}", text.join("  "))?;
    Ok(if verified { EXIT_OK } else { EXIT_INVARIANT })
}

fn cmd_embed(a: EmbedArgs, out: &mut dyn Write) -> CliResult {
    if a.m == 0 {
        return Err(Error::InvalidArgument("m must be positive".into()).into());
    }
    let sigma = FinitePermutation::parse_cycles(&a.perm, a.m)?;
    let f = embed_phi(a.m, &sigma)?;
    match a.at {
        Some(x) => {
            let y = f
                .checked_apply(x)
                .ok_or_else(|| Error::Overflow(format!("image of {x}")))?;
            writeln!(out, "{y}")?;
        }
        None => writeln!(out, "{f}")?,
    }
    Ok(EXIT_OK)
}

fn report_group(gens: &GeneratorSet, fixed: bool, out: &mut dyn Write) -> std::io::Result<()> {
    let chain = bsgs_build(gens);
    let order = chain.order();
    let degree = gens.degree();
    writeln!(out, "degree: {degree}")?;
    writeln!(out, "generators: {}", gens.len())?;
    writeln!(out, "order: {order}")?;
    if order == factorial(degree) {
        writeln!(out, "order = {degree}!")?;
    }
    if fixed {
        let f = gens.fixed_points();
        if f.is_empty() {
            writeln!(out, "no fixed points")?;
        } else {
            writeln!(out, "fixed points: {f:?}")?;
        }
    }
    Ok(())
}

fn cmd_group(a: GroupArgs, out: &mut dyn Write) -> CliResult {
    match a.command {
        GroupCommand::Table => {
            let lines = verify_reference_orders()?;
            let mut ok = true;
            for l in &lines {
                let ks: Vec<String> = l.ks.iter().map(|k| format!("CT_{k}")).collect();
                writeln!(
                    out,
                    "{} |⟨{}⟩| = {}! in S_{}  ({})",
                    if l.pass { "PASS" } else { "FAIL" },
                    ks.join(", "),
                    l.expected_factorial_of,
                    l.degree,
                    l.computed
                )?;
                ok &= l.pass;
            }
            Ok(if ok { EXIT_OK } else { EXIT_INVARIANT })
        }
        GroupCommand::Ctk {
            ks,
            degree,
            fixed_points,
            full,
            max_degree,
        } => {
            let degree = degree.unwrap_or_else(|| ctk_degree(&ks));
            if degree > max_degree {
                return Err(Error::ResourceLimit {
                    degree,
                    limit: max_degree,
                }
                .into());
            }
            let gens = if full {
                ctk_generators_full(&ks, degree)?
            } else {
                ctk_generators(&ks, degree)?
            };
            report_group(&gens, fixed_points, out)?;
            Ok(EXIT_OK)
        }
        GroupCommand::File { path, fixed_points } => {
            let text = std::fs::read_to_string(&path)?;
            let gens = GeneratorSet::from_json(&text)?;
            report_group(&gens, fixed_points, out)?;
            Ok(EXIT_OK)
        }
    }
}

fn cmd_conjecture(a: ConjectureArgs, out: &mut dyn Write) -> CliResult {
    let r = conjecture_check(a.k, a.max_degree)?;
    if a.json {
        writeln!(out, "{}", serde_json::to_string_pretty(&r)?)?;
    } else {
        writeln!(out, "k = {}, N = {}", r.k, r.degree)?;
        writeln!(out, "|⟨CT_2, ..., CT_{}⟩| = {}", r.k, r.order)?;
        writeln!(out, "N! = {}", r.n_factorial)?;
        writeln!(out, "{}", if r.equal { "equal" } else { "not equal" })?;
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ct(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = main_with_args(
            std::iter::once("ct").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn order_mod_six_product() {
        let (code, out, _) = ct(&["order", "0(2),1(2)", "0(3),1(3)"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().next(), Some("4"));
    }

    #[test]
    fn order_flags_published_discrepancy() {
        let (code, out, err) = ct(&["order", "0(2),1(2)", "0(4),2(4)", "--json"]);
        assert_eq!(code, 0);
        assert!(err.contains("warning"));
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["report"]["order"], "4");
        assert_eq!(v["discrepancy"]["listed"], 2);
        assert_eq!(v["agree"], true);
    }

    #[test]
    fn finite_method_rejects_oblique() {
        let (code, _, err) = ct(&["order", "1(2),0(4)", "0(2),1(2)", "--method", "finite"]);
        assert_eq!(code, 2);
        assert!(err.contains("horizontal"));
    }

    #[test]
    fn parse_errors_exit_two() {
        assert_eq!(ct(&["order", "0(2)1(2)", "0(3),1(3)"]).0, 2);
        assert_eq!(ct(&["order", "0(2),0(2)", "0(3),1(3)"]).0, 2);
        assert_eq!(ct(&["frobnicate"]).0, 2);
    }

    #[test]
    fn refine_and_embed() {
        let (code, out, _) = ct(&["refine", "0(2),1(2)", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim_end(), "0(4),1(4)  2(4),3(4)  [verified]");
        let (_, out, _) = ct(&["refine", "0(3),1(3)", "1"]);
        assert_eq!(out.trim_end(), "0(3),1(3)  [verified]");
        let (code, out, _) = ct(&["embed", "2", "(0,1)", "--at", "7"]);
        assert_eq!(code, 0);
        assert_eq!(out.trim_end(), "6");
        let (_, out, _) = ct(&["embed", "2", "(0,1)", "--at", "-3"]);
        assert_eq!(out.trim_end(), "-4");
    }

    #[test]
    fn group_ctk_small() {
        let (code, out, _) = ct(&["group", "ctk", "4", "--degree", "4"]);
        assert_eq!(code, 0);
        assert!(out.contains("order: 24"));
        let (_, out, _) = ct(&["group", "ctk", "2,3", "--degree", "6", "--fixed-points"]);
        assert!(out.contains("order: 120"));
        assert!(out.contains("no fixed points"));
    }

    #[test]
    fn components_of_disjoint_pair() {
        let (code, out, _) = ct(&["components", "0(4),1(4)", "2(4),3(4)"]);
        assert_eq!(code, 0);
        assert_eq!(out.matches("shape 1,").count(), 2);
    }

    #[test]
    fn cycles_mod_six_product() {
        let (code, out, _) = ct(&["cycles", "0(2),1(2)", "0(3),1(3)"]);
        assert_eq!(code, 0);
        assert!(out.contains("(6s)(1+6s)(2+6s,4+6s,5+6s,3+6s)"));
        assert!(out.contains("order: 4"));
    }
}
