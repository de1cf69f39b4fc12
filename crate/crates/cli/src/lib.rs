//! Commands behind the `pegraph` binary.
//!
//! Every command returns an [`Exit`] code. Group arguments are either a path
//! to a group JSON file or a group expression such as `"Q8 x Z3"`.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use pegraph::graph::{digraph_to_dot, graph_to_dot, graph_to_json, GraphJson};
use pegraph::iso::invariant_screen;
use pegraph::verify::{run_verification, Family, VerifyConfig, MAX_CORPUS_ORDER};
use pegraph::{
    directed_power_graph, graphs_isomorphic_with, parse_group_expr, FiniteGroup, Graph, GraphKind,
    GroupJson, IsoOptions, SearchOutcome,
};

/// Process exit codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
#[repr(u8)]
pub enum Exit {
    /// Success; for `iso`, the graphs are isomorphic.
    Ok = 0,
    /// `iso`: not isomorphic. `verify`: at least one check failed.
    Negative = 1,
    /// A search ran out of budget (and, for `verify`, nothing failed).
    Budget = 2,
    /// Bad arguments or unreadable input.
    Input = 3,
}

/// An input error, reported on stderr with exit code 3.
#[derive(Debug)]
pub struct InputError(pub String);

impl std::fmt::Display for InputError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<pegraph::Error> for InputError {
    fn from(e: pegraph::Error) -> Self {
        InputError(e.to_string())
    }
}

impl From<std::io::Error> for InputError {
    fn from(e: std::io::Error) -> Self {
        InputError(e.to_string())
    }
}

pub type CmdResult = Result<Exit, InputError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Dot,
    Json,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "dot" => Ok(Format::Dot),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format {s:?}; expected dot or json")),
        }
    }
}

/// Reads a group from a JSON file if `arg` names an existing file, otherwise
/// parses it as a group expression.
pub fn load_group(arg: &str) -> Result<FiniteGroup, InputError> {
    let path = Path::new(arg);
    if path.is_file() {
        let text = fs::read_to_string(path)?;
        let json: GroupJson = serde_json::from_str(&text)
            .map_err(|e| InputError(format!("{arg}: malformed group JSON: {e}")))?;
        return FiniteGroup::from_json(&json).map_err(|e| InputError(format!("{arg}: {e}")));
    }
    let expr = parse_group_expr(arg).map_err(|e| {
        InputError(format!(
            "{arg:?} is neither a file nor a group expression: {e}"
        ))
    })?;
    Ok(expr.build()?)
}

pub fn group_to_json(g: &FiniteGroup) -> String {
    let mut s = serde_json::to_string(&g.to_json()).expect("group JSON serializes");
    s.push('\n');
    s
}

fn emit(out: &mut dyn Write, path: Option<&Path>, text: &str) -> Result<(), InputError> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| InputError(format!("{}: {e}", p.display()))),
        None => out.write_all(text.as_bytes()).map_err(InputError::from),
    }
}

pub fn cmd_build(out: &mut dyn Write, expr: &str, out_path: Option<&Path>) -> CmdResult {
    let g = parse_group_expr(expr)?.build()?;
    emit(out, out_path, &group_to_json(&g))?;
    Ok(Exit::Ok)
}

pub fn cmd_graph(
    out: &mut dyn Write,
    group: &str,
    kind: GraphKind,
    format: Format,
    out_path: Option<&Path>,
) -> CmdResult {
    let g = load_group(group)?;
    let source = g.provenance().unwrap_or(g.name()).to_string();
    let text = match (kind, format) {
        (GraphKind::DirectedPower, Format::Json) => {
            GraphJson::from_digraph(&directed_power_graph(&g)).to_canonical_string()
        }
        (GraphKind::DirectedPower, Format::Dot) => {
            digraph_to_dot(&source, &directed_power_graph(&g))
        }
        (kind, Format::Json) => graph_to_json(kind, &kind.build(&g)),
        (kind, Format::Dot) => graph_to_dot(kind, &source, &kind.build(&g)),
    };
    emit(out, out_path, &text)?;
    Ok(Exit::Ok)
}

/// First cheap invariant on which two graphs differ, if any.
pub fn refuting_invariant(a: &Graph, b: &Graph) -> Option<String> {
    if a.vertex_count() != b.vertex_count() {
        return Some(format!(
            "vertex counts differ ({} vs {})",
            a.vertex_count(),
            b.vertex_count()
        ));
    }
    if a.edge_count() != b.edge_count() {
        return Some(format!(
            "edge counts differ ({} vs {})",
            a.edge_count(),
            b.edge_count()
        ));
    }
    let sorted = |mut v: Vec<usize>| {
        v.sort_unstable();
        v
    };
    if sorted(a.degrees()) != sorted(b.degrees()) {
        return Some("degree sequences differ".into());
    }
    if !invariant_screen(a, b) {
        return Some("triangle counts differ".into());
    }
    None
}

pub fn cmd_iso(out: &mut dyn Write, a: &str, b: &str, kind: GraphKind, budget: u64) -> CmdResult {
    let (ga, gb) = (load_group(a)?, load_group(b)?);
    let kind = if kind == GraphKind::DirectedPower {
        GraphKind::Power
    } else {
        kind
    };
    let (x, y) = (kind.build(&ga), kind.build(&gb));
    let result = graphs_isomorphic_with(&x, &y, IsoOptions::with_budget(budget));
    let (code, text) = match result {
        SearchOutcome::Found(cert) => (
            Exit::Ok,
            format!(
                "isomorphic\ncertificate: {}\n",
                serde_json::to_string(&cert.mapping).expect("mapping serializes")
            ),
        ),
        SearchOutcome::Absent => {
            let why = refuting_invariant(&x, &y)
                .unwrap_or_else(|| "exhaustive search found no isomorphism".into());
            (Exit::Negative, format!("not isomorphic: {why}\n"))
        }
        SearchOutcome::BudgetExhausted => (
            Exit::Budget,
            format!("undecided: search budget of {budget} nodes exhausted\n"),
        ),
    };
    out.write_all(text.as_bytes())?;
    Ok(code)
}

pub fn cmd_spectrum(out: &mut dyn Write, group: &str) -> CmdResult {
    let g = load_group(group)?;
    let mut s = serde_json::to_string(&g.order_spectrum()).expect("spectrum serializes");
    s.push('\n');
    out.write_all(s.as_bytes())?;
    Ok(Exit::Ok)
}

pub struct VerifyArgs {
    pub max_order: usize,
    pub families: Vec<String>,
    pub iso_budget: u64,
    pub report_path: Option<PathBuf>,
}

pub fn cmd_verify(out: &mut dyn Write, args: &VerifyArgs) -> CmdResult {
    if args.max_order == 0 || args.max_order > MAX_CORPUS_ORDER {
        return Err(InputError(format!(
            "--max-order must be between 1 and {MAX_CORPUS_ORDER}, got {}",
            args.max_order
        )));
    }
    let families = if args.families.is_empty() {
        None
    } else {
        let mut v = Vec::new();
        for name in args.families.iter().flat_map(|s| s.split(',')) {
            v.push(name.parse::<Family>()?);
        }
        Some(v)
    };
    let config = VerifyConfig {
        max_order: args.max_order,
        iso_budget: args.iso_budget,
        families,
    };
    let report = run_verification(&config)?;
    if let Some(p) = &args.report_path {
        fs::write(p, report.to_json()).map_err(|e| InputError(format!("{}: {e}", p.display())))?;
    }
    out.write_all(report.to_table().as_bytes())?;
    let tally = report.tally();
    Ok(if tally.fail > 0 {
        Exit::Negative
    } else if tally.skipped_budget > 0 {
        Exit::Budget
    } else {
        Exit::Ok
    })
}
