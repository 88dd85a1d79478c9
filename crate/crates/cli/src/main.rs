use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcox_core::factor::{count_reduced_with, enumerate_full_min_with, enumerate_reduced_with, fred_formula_pqc, hurwitz_number, EnumCaps};
use qcox_core::hurwitz::{hurwitz_orbit, DEFAULT_ORBIT_CAP};
use qcox_core::lengths::length_report;
use qcox_core::pqc::{characterization_check, subgroup_closure, count_rgs_formula, enumerate_rgs, is_parabolic_qc, Route, DEFAULT_CLOSURE_CAP};
use qcox_core::weyl::{abc_degree, pairing_matrix, reflection_subgroup_index, weyl_pqc_crosscheck, WeylType};
use qcox_core::{Element, Error, Reflection};
use qcox_verify::{CriterionReport, Suite};
use serde_json::{json, Map, Value};

const EXIT_DOMAIN: u8 = 1;
const EXIT_CAP: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "qcox", version, about = "Reflection factorizations in the groups G(m,p,n)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Worker threads (defaults to all cores).
    #[arg(long, global = true, env = "QCOX_JOBS")]
    jobs: Option<usize>,
    /// Largest Hurwitz orbit explored.
    #[arg(long, global = true, default_value_t = DEFAULT_ORBIT_CAP, value_parser = positive)]
    orbit_cap: usize,
    /// Largest group (or subgroup) indexed for closure checks.
    #[arg(long, global = true, default_value_t = DEFAULT_CLOSURE_CAP, value_parser = positive)]
    closure_cap: usize,
    /// Longest factorization enumerated.
    #[arg(long, global = true, default_value_t = EnumCaps::default().depth, value_parser = positive)]
    depth_cap: usize,
    /// How relative generating sets are found.
    #[arg(long, global = true, default_value = "graph", value_parser = parse_route)]
    route: Route,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Reflection length, full reflection length and fixed-space codimension.
    Len { element: String },
    /// Count reduced reflection factorizations and compare with the closed form.
    Fred { element: String },
    /// Full reflection length; `--count` also enumerates the minimal generating factorizations.
    Full {
        element: String,
        #[arg(long)]
        count: bool,
    },
    /// Relative generating sets.
    Rgs {
        element: String,
        /// Print the sets themselves.
        #[arg(long)]
        list: bool,
    },
    /// Parabolic quasi-Coxeter test.
    Pqc {
        element: String,
        /// Run all four characterizations.
        #[arg(long)]
        all: bool,
    },
    /// Hurwitz orbit of the first reduced factorization.
    HurwitzOrbit {
        element: String,
        /// Print every tuple of the orbit, one JSON line each.
        #[arg(long)]
        emit: bool,
    },
    /// Genus-0 Hurwitz number of a partition such as `3,2,1`.
    HurwitzNumber { partition: String },
    /// Root-lattice checks in types A, B and D.
    Weyl {
        #[arg(long = "type")]
        ty: String,
        #[arg(long, value_enum)]
        check: WeylCheck,
        /// Element for `pdet` (default: every element of the group).
        #[arg(long)]
        element: Option<String>,
        /// Reflections for `gendet`, e.g. `--reflection "[(1 2);0]"` (default: the simple ones).
        #[arg(long = "reflection")]
        reflections: Vec<String>,
    },
    /// Run the acceptance suite.
    Verify {
        #[arg(long, default_value = "core")]
        suite: String,
        #[arg(long, default_value_t = Suite::default().max_order)]
        max_order: u64,
        /// Run only these criteria.
        #[arg(long = "criterion")]
        criteria: Vec<u8>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum WeylCheck {
    Gendet,
    Pdet,
    Abc,
}

fn positive(s: &str) -> Result<usize, String> {
    match s.parse::<usize>() {
        Ok(0) => Err("must be positive".into()),
        Ok(v) => Ok(v),
        Err(e) => Err(e.to_string()),
    }
}

fn parse_route(s: &str) -> Result<Route, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::CapExceeded { .. } => EXIT_CAP,
            Error::Parse(_) => EXIT_USAGE,
            _ => EXIT_DOMAIN,
        };
        Failure { code, message: e.to_string() }
    }
}

/// Output object and exit code; only `verify` reports mismatches through the exit code.
type Outcome = Result<(Value, u8), Failure>;

fn parse_element(text: &str) -> Result<Element, Failure> {
    let text = text.trim();
    if text.starts_with('{') {
        serde_json::from_str(text).map_err(|e| Failure { code: EXIT_USAGE, message: format!("bad element JSON: {e}") })
    } else {
        Ok(text.parse()?)
    }
}

fn caps(cli: &Cli) -> EnumCaps {
    EnumCaps { depth: cli.depth_cap, closure: cli.closure_cap, ..EnumCaps::default() }
}

fn fred(cli: &Cli, g: &Element) -> Outcome {
    let count = count_reduced_with(g, caps(cli))?;
    let formula = if is_parabolic_qc(g)?.is_pqc { Some(fred_formula_pqc(g)?) } else { None };
    let matches = formula.as_ref().map(|f| *f == count);
    Ok((
        json!({
            "element": g.to_string(),
            "count": count.to_string(),
            "formula": formula.map(|f| f.to_string()),
            "match": matches,
        }),
        0,
    ))
}

fn rgs(cli: &Cli, g: &Element, list: bool) -> Outcome {
    let verdict = is_parabolic_qc(g)?;
    let sets = enumerate_rgs(g, cli.route, cli.closure_cap)?;
    let formula = if verdict.is_pqc { Some(count_rgs_formula(g)?) } else { None };
    let matches = match &formula {
        Some(f) => *f == sets.len().into(),
        None => sets.is_empty(),
    };
    let mut out = json!({
        "element": g.to_string(),
        "is_pqc": verdict.is_pqc,
        "rgs_count": sets.len().to_string(),
        "formula": formula.map(|f| f.to_string()),
        "match": matches,
    });
    if list {
        let rendered: Vec<Vec<String>> = sets.iter().map(|s| s.iter().map(Reflection::to_string).collect()).collect();
        out["sets"] = json!(rendered);
    }
    Ok((out, 0))
}

fn hurwitz(cli: &Cli, g: &Element, emit: bool) -> Outcome {
    let caps = EnumCaps { tuples: cli.orbit_cap, ..caps(cli) };
    let red = enumerate_reduced_with(g, caps)?;
    let orbit = hurwitz_orbit(&red[0], cli.orbit_cap)?;
    if emit {
        let mut stdout = io::stdout().lock();
        for t in &orbit {
            let factors: Vec<String> = t.factors.iter().map(Reflection::to_string).collect();
            let _ = writeln!(stdout, "{}", json!({ "factors": factors }));
        }
    }
    Ok((
        json!({
            "element": g.to_string(),
            "start": red[0].to_string(),
            "orbit_size": orbit.len().to_string(),
            "red_count": red.len().to_string(),
            "transitive": orbit == red,
        }),
        0,
    ))
}

fn parse_partition(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>())
        .collect::<Result<_, _>>()
        .map_err(|e| Failure { code: EXIT_USAGE, message: format!("bad partition {text:?}: {e}") })
}

fn weyl(cli: &Cli, ty: &str, check: WeylCheck, element: Option<&str>, reflections: &[String]) -> Outcome {
    let ty: WeylType = ty.parse()?;
    match check {
        WeylCheck::Gendet => {
            let set = if reflections.is_empty() {
                ty.simple_reflections()
            } else {
                reflections.iter().map(|r| r.parse()).collect::<Result<Vec<Reflection>, _>>()?
            };
            let report = pairing_matrix(&set, ty)?;
            let params = ty.params();
            let gens: Vec<Element> = set.iter().map(|r| r.to_element(params)).collect();
            let generates =
                subgroup_closure(params, &gens, cli.closure_cap)?.order() as u64 == params.order_u64().unwrap_or(0);
            let index = ty.connection_index();
            let matches = (report.determinant.unsigned_abs() == index) == generates;
            Ok((
                json!({
                    "type": ty.to_string(),
                    "reflections": set.iter().map(Reflection::to_string).collect::<Vec<_>>(),
                    "pairing_matrix": report.pairing_matrix,
                    "det": report.determinant,
                    "index": index,
                    "generates": generates,
                    "match": matches,
                }),
                0,
            ))
        }
        WeylCheck::Pdet => {
            let elements = match element {
                Some(text) => vec![parse_element(text)?],
                None => ty.params().elements(cli.closure_cap)?,
            };
            let mut rows = Vec::new();
            let mut mismatches = 0;
            for g in &elements {
                let r = weyl_pqc_crosscheck(g, ty)?;
                let factors = qcox_core::pqc::first_reduced(g)?;
                let index = reflection_subgroup_index(&factors, ty, cli.closure_cap)?;
                let ok = r.pdet == index && r.consistent();
                mismatches += usize::from(!ok);
                rows.push(json!({
                    "element": g.to_string(),
                    "pdet": r.pdet,
                    "factor_closure_index": index,
                    "closure_index": r.closure_index,
                    "is_pqc": r.is_pqc,
                    "roots_basis": r.roots_basis,
                    "coroots_basis": r.coroots_basis,
                    "match": ok,
                }));
            }
            if element.is_some() {
                Ok((rows.pop().expect("one row"), 0))
            } else {
                Ok((json!({ "type": ty.to_string(), "elements": rows.len().to_string(), "mismatches": mismatches.to_string() }), 0))
            }
        }
        WeylCheck::Abc => {
            let c = ty.coxeter_element();
            let degree = abc_degree(ty);
            let count = count_reduced_with(&c, caps(cli))?;
            let matches = degree == count;
            Ok((
                json!({
                    "type": ty.to_string(),
                    "coxeter_element": c.to_string(),
                    "abc_degree": degree.to_string(),
                    "count": count.to_string(),
                    "match": matches,
                }),
                0,
            ))
        }
    }
}

fn verify(cli: &Cli, suite: &str, max_order: u64, criteria: &[u8]) -> Outcome {
    if suite != "core" {
        return Err(Failure { code: EXIT_USAGE, message: format!("unknown suite {suite:?} (expected core)") });
    }
    let ids: Vec<u8> = if criteria.is_empty() { (1..=14).collect() } else { criteria.to_vec() };
    let suite = Suite { max_order };
    let mut reports: Vec<CriterionReport> = Vec::new();
    for id in ids {
        let report = qcox_verify::run(id, suite)
            .ok_or_else(|| Failure { code: EXIT_USAGE, message: format!("no criterion {id} (expected 1..14)") })?;
        if cli.format == Format::Text {
            println!("{report}");
        }
        reports.push(report);
    }
    let failed: Vec<u8> = reports.iter().filter(|r| !r.passed).map(|r| r.id).collect();
    let rows: Vec<Value> = reports
        .iter()
        .map(|r| json!({ "criterion": r.id, "title": r.title, "passed": r.passed, "detail": r.detail }))
        .collect();
    let code = if failed.is_empty() { 0 } else { EXIT_MISMATCH };
    Ok((json!({ "criteria": rows, "failed": failed, "passed": failed.is_empty() }), code))
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Len { element } => {
            let g = parse_element(element)?;
            let r = length_report(&g)?;
            let mut out = json!({
                "element": g.to_string(),
                "refl_length": r.refl_length,
                "full_length": r.full_length,
                "codim": r.codim_fixed,
            });
            if let Some(v) = r.v_m {
                out["v_m"] = json!(v);
            }
            Ok((out, 0))
        }
        Command::Fred { element } => fred(cli, &parse_element(element)?),
        Command::Full { element, count } => {
            let g = parse_element(element)?;
            let r = length_report(&g)?;
            let mut out = json!({ "element": g.to_string(), "full_length": r.full_length });
            if *count {
                out["count"] = json!(enumerate_full_min_with(&g, caps(cli))?.len().to_string());
            }
            Ok((out, 0))
        }
        Command::Rgs { element, list } => rgs(cli, &parse_element(element)?, *list),
        Command::Pqc { element, all } => {
            let g = parse_element(element)?;
            let verdict = if *all { characterization_check(&g, cli.closure_cap)? } else { is_parabolic_qc(&g)? };
            let agree = verdict.all_agree();
            let mut out = json!({
                "element": g.to_string(),
                "is_pqc": verdict.is_pqc,
                "is_qc": verdict.is_qc,
            });
            if *all {
                out["witnesses"] = json!(verdict.witnesses);
                out["agree"] = json!(agree);
            }
            Ok((out, 0))
        }
        Command::HurwitzOrbit { element, emit } => hurwitz(cli, &parse_element(element)?, *emit),
        Command::HurwitzNumber { partition } => {
            let lambda = parse_partition(partition)?;
            let h = hurwitz_number(&lambda)?;
            Ok((json!({ "partition": lambda, "hurwitz_number": h.to_string() }), 0))
        }
        Command::Weyl { ty, check, element, reflections } => weyl(cli, ty, *check, element.as_deref(), reflections),
        Command::Verify { suite, max_order, criteria } => verify(cli, suite, *max_order, criteria),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => String::new(),
        other => other.to_string(),
    }
}

fn render(value: Value, format: Format) -> String {
    let Value::Object(mut map) = value else { return value.to_string() };
    match format {
        Format::Json => {
            let mut out = Map::new();
            out.insert("schema".into(), json!(1));
            out.append(&mut map);
            Value::Object(out).to_string()
        }
        Format::Csv => {
            let keys: Vec<&String> = map.keys().collect();
            let quote = |s: String| {
                if s.contains([',', '"', '\n']) {
                    format!("\"{}\"", s.replace('"', "\"\""))
                } else {
                    s
                }
            };
            let header: Vec<String> = keys.iter().map(|k| quote(k.to_string())).collect();
            let row: Vec<String> = keys.iter().map(|k| quote(scalar(&map[*k]))).collect();
            format!("{}\n{}", header.join(","), row.join(","))
        }
        Format::Text => map.iter().map(|(k, v)| format!("{k}: {}", scalar(v))).collect::<Vec<_>>().join("\n"),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    if let Some(jobs) = cli.jobs {
        if jobs == 0 {
            eprintln!("error: --jobs must be positive");
            return ExitCode::from(EXIT_USAGE);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_DOMAIN);
        }
    }
    match dispatch(&cli) {
        Ok((value, code)) => {
            if !(cli.format == Format::Text && matches!(cli.command, Command::Verify { .. })) {
                println!("{}", render(value, cli.format));
            }
            ExitCode::from(code)
        }
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
