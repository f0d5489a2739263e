//! Command-line entry point tying the library together.
//!
//! Exit codes: 0 success, 1 usage or runtime error, 2 verification failure
//! (any failing theorem check or product-law counterexample), 3 budget-
//! degraded exactness under --require-exact.
//!
//! Configuration precedence is flags, then environment (CGDOM_CACHE_DIR,
//! CGDOM_BUDGET_SECS, CGDOM_WORKERS), then defaults. Machine output (--json)
//! contains no wall-clock fields, so repeated runs — cached or not — are
//! byte-identical; timings go to stderr.

use crate::cache::CacheStore;
use crate::commuting;
use crate::domination::{
    self, domination_ratio, exact_domination_number, exact_total_domination_number, Budget,
    DominationResult, SolveMethod,
};
use crate::families::FamilySpec;
use crate::formulas;
use crate::graph::SimpleGraph;
use crate::group::{GroupError, GroupTable, DEFAULT_GROUP_CAP};
use crate::verify::{self, CorpusEntry};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use std::error::Error;
use std::path::PathBuf;

#[derive(Parser)]
#[command(
    name = "cgdom",
    version,
    about = "Finite groups, their commuting graphs, and exact domination numbers"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct GroupArgs {
    /// Group file path, or an inline descriptor such as "dihedral(10)" or
    /// "direct(quaternion(8),cyclic(3))"
    spec: Option<String>,
    /// Family name followed by its parameters, e.g. --family heisenberg 3
    #[arg(long, num_args = 1.., value_name = "NAME PARAMS")]
    family: Option<Vec<String>>,
    /// Maximum group order accepted at construction
    #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
    cap: usize,
}

impl GroupArgs {
    fn resolve_spec(&self) -> Result<FamilySpec, GroupError> {
        if let Some(parts) = &self.family {
            return FamilySpec::parse_cli(&parts[0], &parts[1..]);
        }
        match &self.spec {
            Some(text) if text.contains('(') => FamilySpec::parse_descriptor(text),
            Some(path) => Ok(FamilySpec::File { path: path.clone() }),
            None => Err(GroupError::BadParameter(
                "no group given: pass a file/descriptor or --family".into(),
            )),
        }
    }

    fn build(&self) -> Result<GroupTable, GroupError> {
        self.resolve_spec()?.build(self.cap)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum GraphKind {
    Commuting,
    ProperCommuting,
    Epg,
    ProperEpg,
}

impl GraphKind {
    fn build(&self, g: &GroupTable) -> SimpleGraph {
        match self {
            GraphKind::Commuting => commuting::commuting_graph(g),
            GraphKind::ProperCommuting => commuting::proper_commuting_graph(g).0,
            GraphKind::Epg => commuting::enhanced_power_graph(g),
            GraphKind::ProperEpg => commuting::proper_enhanced_power_graph(g).0,
        }
    }

    fn name(&self) -> &'static str {
        match self {
            GraphKind::Commuting => "commuting",
            GraphKind::ProperCommuting => "proper-commuting",
            GraphKind::Epg => "epg",
            GraphKind::ProperEpg => "proper-epg",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Construct a group and emit its table file
    Make {
        /// Family name, e.g. dihedral, heisenberg, pgl2, perm-closure
        family: String,
        /// Family parameters (integers, or cycles for perm-closure)
        params: Vec<String>,
        /// Write to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_GROUP_CAP)]
        cap: usize,
    },
    /// Group-theoretic invariants feeding the formula gates
    Invariants {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long)]
        json: bool,
        /// Cache directory (also CGDOM_CACHE_DIR)
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Build a group-derived graph and export it
    Graph {
        #[command(flatten)]
        group: GroupArgs,
        #[arg(long, value_enum, default_value = "proper-commuting")]
        kind: GraphKind,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact domination (or total domination) number with certificate
    Gamma {
        #[command(flatten)]
        group: GroupArgs,
        /// Solve a graph file directly instead of a group
        #[arg(long, conflicts_with = "family")]
        graph_file: Option<PathBuf>,
        /// Graph derived from the group (default: proper commuting graph)
        #[arg(long, value_enum, default_value = "proper-commuting")]
        kind: GraphKind,
        /// Total domination instead of domination
        #[arg(long)]
        total: bool,
        /// Also print the exact ratio gamma/|G|
        #[arg(long)]
        ratio: bool,
        /// Time budget in seconds (also CGDOM_BUDGET_SECS; default 60)
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        json: bool,
        /// Exit 3 when the budget degrades the result to bounds
        #[arg(long)]
        require_exact: bool,
        #[arg(long)]
        cache_dir: Option<PathBuf>,
    },
    /// Evaluate a closed-form prediction by theorem id
    Formula {
        /// One of: suzuki, pq, p4, pgl2, psl2, spectrum, lower, upper-tu,
        /// haji, log, gd, ac, codim2, nilpotent
        id: String,
        /// Parameters: integers, or a group descriptor for group-based ids
        params: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Shorthand for `formula suzuki <n>`
    SuzukiFormula {
        n: u32,
        #[arg(long)]
        json: bool,
    },
    /// Run the whole verification harness: corpus sweep plus product laws
    Verify {
        /// Corpus manifest (JSON list of family specs); default is built in
        #[arg(long)]
        corpus: Option<PathBuf>,
        /// Write the machine-readable report here
        #[arg(long)]
        json: Option<PathBuf>,
        /// Write the per-group CSV here
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Write the default corpus manifest here and exit
        #[arg(long)]
        emit_corpus: Option<PathBuf>,
        /// Seed for the product-law trials
        #[arg(long, default_value_t = 42)]
        seed: u64,
        #[arg(long)]
        budget: Option<u64>,
        /// Worker threads for the sweep (also CGDOM_WORKERS)
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        max_order: Option<u64>,
        /// Random product-law trials with two factors (a fifth as many get
        /// three factors)
        #[arg(long, default_value_t = 200)]
        trials: usize,
        #[arg(long)]
        skip_product_laws: bool,
    },
    /// Corpus sweep only
    Sweep {
        #[arg(long)]
        corpus: Option<PathBuf>,
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        csv: Option<PathBuf>,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        workers: Option<usize>,
        #[arg(long)]
        max_order: Option<u64>,
    },
}

/// Deterministic gamma output: everything but wall time, which goes to stderr.
#[derive(Serialize, Deserialize)]
struct GammaOutput {
    target: String,
    kind: String,
    value: Option<usize>,
    exists: bool,
    method: String,
    lower_bound: usize,
    upper_bound: usize,
    node_count: u64,
    witness: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ratio: Option<String>,
}

impl GammaOutput {
    fn from_result(target: String, result: &DominationResult, graph: &SimpleGraph) -> Self {
        let witness = result.witness.as_ref().map(|w| {
            w.iter().map(|v| graph.label(v)).collect::<Vec<String>>()
        });
        GammaOutput {
            target,
            kind: match result.kind {
                domination::DominationKind::Domination => "domination".into(),
                domination::DominationKind::TotalDomination => "total_domination".into(),
            },
            value: result.value,
            exists: result.exists,
            method: match result.method {
                SolveMethod::Exact => "exact".into(),
                SolveMethod::GreedyUpperOnly => "greedy_upper_only".into(),
                SolveMethod::Formula => "formula".into(),
            },
            lower_bound: result.lower_bound,
            upper_bound: result.upper_bound,
            node_count: result.node_count,
            witness,
            ratio: None,
        }
    }

    fn render_human(&self) -> String {
        let mut out = String::new();
        let what = if self.kind == "domination" { "gamma" } else { "gamma_t" };
        if !self.exists {
            out.push_str(&format!("{}: {what} does not exist (isolated vertex)\n", self.target));
            return out;
        }
        match self.value {
            Some(v) => out.push_str(&format!("{}: {what} = {v} ({})\n", self.target, self.method)),
            None => out.push_str(&format!(
                "{}: {what} in [{}, {}] (budget exhausted)\n",
                self.target, self.lower_bound, self.upper_bound
            )),
        }
        if let Some(w) = &self.witness {
            out.push_str(&format!("witness ({}): {}\n", w.len(), w.join(", ")));
        }
        out.push_str(&format!(
            "bounds: [{}, {}], search nodes: {}\n",
            self.lower_bound, self.upper_bound, self.node_count
        ));
        if let Some(r) = &self.ratio {
            out.push_str(&format!("ratio gamma/|G| = {r}\n"));
        }
        out
    }
}

fn env_u64(name: &str) -> Option<u64> {
    std::env::var(name).ok()?.parse().ok()
}

fn env_usize(name: &str) -> Option<usize> {
    std::env::var(name).ok()?.parse().ok()
}

fn cache_from(flag: Option<PathBuf>) -> CacheStore {
    let dir = flag.or_else(|| std::env::var("CGDOM_CACHE_DIR").ok().map(PathBuf::from));
    CacheStore::open(dir.as_deref())
}

fn budget_secs_from(flag: Option<u64>) -> u64 {
    flag.or_else(|| env_u64("CGDOM_BUDGET_SECS")).unwrap_or(60)
}

fn workers_from(flag: Option<usize>) -> Option<usize> {
    flag.or_else(|| env_usize("CGDOM_WORKERS"))
}

fn write_or_print(out: Option<&PathBuf>, text: &str) -> Result<(), std::io::Error> {
    match out {
        Some(path) => std::fs::write(path, text),
        None => {
            print!("{text}");
            if !text.ends_with('\n') {
                println!();
            }
            Ok(())
        }
    }
}

/// Parses argv and runs; returns the process exit code.
pub fn run<I, T>(args: I) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}

fn execute(command: Command) -> Result<u8, Box<dyn Error>> {
    match command {
        Command::Make { family, params, out, cap } => {
            let spec = FamilySpec::parse_cli(&family, &params)?;
            let group = spec.build(cap)?;
            let violations = group.validate();
            if !violations.is_empty() {
                return Err(Box::new(GroupError::NotAGroup(violations)));
            }
            write_or_print(out.as_ref(), &group.to_json())?;
            Ok(0)
        }
        Command::Invariants { group, json, cache_dir } => {
            let spec = group.resolve_spec()?;
            let cache = cache_from(cache_dir);
            let key = CacheStore::key(&spec.descriptor(), "invariants", None);
            let cached: Option<serde_json::Value> = cache.get(&key);
            let value = match cached {
                Some(v) => v,
                None => {
                    let g = spec.build(group.cap)?;
                    let inv = g.compute_invariants();
                    let v = serde_json::to_value(&inv)?;
                    cache.put(&key, &v);
                    v
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&value)?);
            } else {
                println!("group: {}", spec.descriptor());
                let obj = value.as_object().expect("invariants serialize to an object");
                for (field, v) in obj {
                    if field == "center" {
                        continue;
                    }
                    println!("{field}: {v}");
                }
            }
            Ok(0)
        }
        Command::Graph { group, kind, out } => {
            let g = group.build()?;
            let graph = kind.build(&g);
            write_or_print(out.as_ref(), &graph.to_json())?;
            Ok(0)
        }
        Command::Gamma {
            group,
            graph_file,
            kind,
            total,
            ratio,
            budget,
            json,
            require_exact,
            cache_dir,
        } => {
            let budget_secs = budget_secs_from(budget);
            let cache = cache_from(cache_dir);
            let started = std::time::Instant::now();
            let (output, cached) = if let Some(path) = graph_file {
                let graph = SimpleGraph::from_json(&std::fs::read_to_string(&path)?)?;
                let result = solve(&graph, total, budget_secs);
                (
                    GammaOutput::from_result(format!("graph file {}", path.display()), &result, &graph),
                    false,
                )
            } else {
                let spec = group.resolve_spec()?;
                let target = format!("{}[{}]", spec.descriptor(), kind.name());
                let key = CacheStore::key(
                    &target,
                    if total { "gamma_t" } else { "gamma" },
                    Some(budget_secs),
                );
                match cache.get::<GammaOutput>(&key) {
                    Some(hit) => (hit, true),
                    None => {
                        let g = spec.build(group.cap)?;
                        let graph = kind.build(&g);
                        let result = solve(&graph, total, budget_secs);
                        let mut out = GammaOutput::from_result(target, &result, &graph);
                        if ratio && !total && kind == GraphKind::ProperCommuting {
                            if let Ok(r) = domination_ratio(&g, &Budget::from_secs(budget_secs)) {
                                out.ratio = r
                                    .exact_value()
                                    .map(|r| format!("{}/{}", r.numer(), r.denom()));
                            }
                        }
                        cache.put(&key, &out);
                        (out, false)
                    }
                }
            };
            if json {
                println!("{}", serde_json::to_string_pretty(&output)?);
            } else {
                print!("{}", output.render_human());
            }
            eprintln!(
                "wall time: {:?}{}",
                started.elapsed(),
                if cached { " (cache hit)" } else { "" }
            );
            if require_exact && output.exists && output.value.is_none() {
                return Ok(3);
            }
            Ok(0)
        }
        Command::Formula { id, params, json } => run_formula(&id, &params, json),
        Command::SuzukiFormula { n, json } => run_formula("suzuki", &[n.to_string()], json),
        Command::Verify {
            corpus,
            json,
            csv,
            emit_corpus,
            seed,
            budget,
            workers,
            max_order,
            trials,
            skip_product_laws,
        } => {
            if let Some(path) = emit_corpus {
                std::fs::write(&path, verify::corpus_to_json(&verify::default_corpus()))?;
                println!("corpus manifest written to {}", path.display());
                return Ok(0);
            }
            let entries = corpus_entries(corpus.as_deref(), max_order)?;
            let budget_secs = budget_secs_from(budget);
            let sweep = verify::run_family_sweep(&entries, budget_secs, workers_from(workers));
            let product_laws = (!skip_product_laws)
                .then(|| verify::strong_product_property_tests(seed, trials, trials / 4));
            let mut failed = sweep.summary.fail > 0;
            println!(
                "sweep: {} groups, {} pass, {} fail, {} skipped, {} bounds-only",
                sweep.summary.groups,
                sweep.summary.pass,
                sweep.summary.fail,
                sweep.summary.skipped,
                sweep.summary.bounds_only
            );
            for f in sweep.failed_checks() {
                println!(
                    "FAIL {} on {}: predicted {}, computed {}",
                    f.theorem_id, f.group, f.predicted, f.computed
                );
            }
            println!(
                "max ratio gamma/|G| = {} at {}",
                sweep.max_ratio,
                sweep.max_ratio_groups.join(", ")
            );
            println!("spectrum hits: {}", sweep.spectrum_hits.len());
            if let Some(laws) = &product_laws {
                failed |= !laws.ok();
                println!(
                    "product laws: {} two-factor + {} three-factor trials, {} counterexamples, planted case gamma = {}",
                    laws.two_factor_trials,
                    laws.three_factor_trials,
                    laws.counterexamples.len(),
                    laws.planted_case_gamma
                );
                for c in &laws.counterexamples {
                    println!("COUNTEREXAMPLE {c}");
                }
            }
            if let Some(path) = json {
                #[derive(Serialize)]
                struct FullReport<'a> {
                    sweep: &'a verify::SweepReport,
                    #[serde(skip_serializing_if = "Option::is_none")]
                    product_laws: &'a Option<verify::ProductLawReport>,
                }
                let text = serde_json::to_string_pretty(&FullReport {
                    sweep: &sweep,
                    product_laws: &product_laws,
                })?;
                std::fs::write(&path, text)?;
            }
            if let Some(path) = csv {
                std::fs::write(&path, sweep.to_csv())?;
            }
            Ok(if failed { 2 } else { 0 })
        }
        Command::Sweep { corpus, json, csv, budget, workers, max_order } => {
            let entries = corpus_entries(corpus.as_deref(), max_order)?;
            let budget_secs = budget_secs_from(budget);
            let sweep = verify::run_family_sweep(&entries, budget_secs, workers_from(workers));
            println!(
                "sweep: {} groups, {} pass, {} fail, {} skipped, {} bounds-only; max ratio {}",
                sweep.summary.groups,
                sweep.summary.pass,
                sweep.summary.fail,
                sweep.summary.skipped,
                sweep.summary.bounds_only,
                sweep.max_ratio
            );
            for f in sweep.failed_checks() {
                println!(
                    "FAIL {} on {}: predicted {}, computed {}",
                    f.theorem_id, f.group, f.predicted, f.computed
                );
            }
            if let Some(path) = json {
                std::fs::write(&path, verify::report_to_json(&sweep))?;
            }
            if let Some(path) = csv {
                std::fs::write(&path, sweep.to_csv())?;
            }
            Ok(if sweep.summary.fail > 0 { 2 } else { 0 })
        }
    }
}

fn solve(graph: &SimpleGraph, total: bool, budget_secs: u64) -> DominationResult {
    let budget = Budget::from_secs(budget_secs);
    if total {
        exact_total_domination_number(graph, &budget)
    } else {
        exact_domination_number(graph, &budget)
    }
}

fn corpus_entries(
    corpus: Option<&std::path::Path>,
    max_order: Option<u64>,
) -> Result<Vec<CorpusEntry>, Box<dyn Error>> {
    let mut entries = match corpus {
        Some(path) => verify::load_corpus(path)?,
        None => verify::default_corpus(),
    };
    if let Some(cap) = max_order {
        entries.retain(|e| match e.spec.order_hint() {
            Some(order) => order <= cap,
            None => e
                .spec
                .build(DEFAULT_GROUP_CAP)
                .map(|g| g.order() as u64 <= cap)
                .unwrap_or(true),
        });
    }
    Ok(entries)
}

fn parse_u64(params: &[String], index: usize, what: &str) -> Result<u64, Box<dyn Error>> {
    params
        .get(index)
        .ok_or_else(|| format!("missing parameter {index} ({what})"))?
        .parse::<u64>()
        .map_err(|_| format!("bad integer for {what}: {}", params[index]).into())
}

fn group_param(params: &[String]) -> Result<GroupTable, Box<dyn Error>> {
    let text = params
        .first()
        .ok_or("missing group descriptor parameter")?;
    let spec = if text.contains('(') {
        FamilySpec::parse_descriptor(text)?
    } else {
        FamilySpec::File { path: text.clone() }
    };
    Ok(spec.build(DEFAULT_GROUP_CAP)?)
}

fn print_predictions(preds: &[&formulas::FormulaPrediction], json: bool) -> Result<(), Box<dyn Error>> {
    if json {
        println!("{}", serde_json::to_string_pretty(preds)?);
        return Ok(());
    }
    for p in preds {
        let kind = match p.kind {
            formulas::PredictionKind::ExactGamma => "gamma",
            formulas::PredictionKind::ExactGammaT => "gamma_t",
            formulas::PredictionKind::LowerBound => "gamma >=",
            formulas::PredictionKind::UpperBound => "gamma <=",
            formulas::PredictionKind::GammaTNonexistence => "gamma_t",
        };
        match (&p.applicability, &p.value) {
            (formulas::Applicability::NotApplicable(reason), _) => {
                println!("{} [{}]: not applicable ({reason})", p.theorem_id, kind);
            }
            (_, None) => println!("{} [{}]: nonexistent", p.theorem_id, kind),
            (formulas::Applicability::BeyondGate(reason), Some(v)) => {
                println!("{} [{}]: {v} (beyond stated gate: {reason})", p.theorem_id, kind);
            }
            (_, Some(v)) => println!("{} [{}]: {v}", p.theorem_id, kind),
        }
    }
    Ok(())
}

fn run_formula(id: &str, params: &[String], json: bool) -> Result<u8, Box<dyn Error>> {
    match id {
        "suzuki" => {
            let n = parse_u64(params, 0, "n")? as u32;
            let eval = formulas::suzuki_gamma(n)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&eval)?);
            } else {
                println!(
                    "Sz(2^{}): gamma = {} (terms {} + {} + {} + {}), gamma_t = {}",
                    2 * n + 1,
                    eval.gamma,
                    eval.terms[0],
                    eval.terms[1],
                    eval.terms[2],
                    eval.terms[3],
                    eval.gamma_t
                );
            }
        }
        "pq" => {
            let p = formulas::pq_gamma(parse_u64(params, 0, "p")?, parse_u64(params, 1, "q")?)?;
            print_predictions(&[&p.gamma, &p.gamma_t], json)?;
        }
        "p4" => {
            let (g, gt) = formulas::p4_gamma(
                parse_u64(params, 0, "p")?,
                parse_u64(params, 1, "class")? as u32,
            )?;
            print_predictions(&[&g, &gt], json)?;
        }
        "pgl2" => {
            let (g, gt) = formulas::pgl2_gamma(
                parse_u64(params, 0, "p")?,
                parse_u64(params, 1, "n")? as u32,
            )?;
            print_predictions(&[&g, &gt], json)?;
        }
        "psl2" => {
            let p = formulas::psl2_gamma_t(parse_u64(params, 0, "q")?)?;
            print_predictions(&[&p], json)?;
        }
        "spectrum" => {
            let k = parse_u64(params, 0, "k")?;
            let (spec, ratio) = formulas::ratio_spectrum_witness(k)?;
            if json {
                #[derive(Serialize)]
                struct Witness {
                    group: String,
                    ratio: String,
                }
                println!(
                    "{}",
                    serde_json::to_string_pretty(&Witness {
                        group: spec.descriptor(),
                        ratio: format!("{}/{}", ratio.numer(), ratio.denom()),
                    })?
                );
            } else {
                println!(
                    "{} has ratio {}/{}",
                    spec.descriptor(),
                    ratio.numer(),
                    ratio.denom()
                );
            }
        }
        "lower" | "upper-tu" | "haji" | "log" | "ac" | "codim2" => {
            let g = group_param(params)?;
            let inv = g.compute_invariants();
            let is_gd = g.detect_generalized_dihedral().is_some();
            match id {
                "lower" => print_predictions(&[&formulas::bound_lower_m(&inv)], json)?,
                "upper-tu" => print_predictions(&[&formulas::bound_upper_tu(&inv)], json)?,
                "haji" => {
                    let b = formulas::bound_haji(&inv, &g.fingerprint());
                    print_predictions(&[&b.prediction], json)?;
                    if !json {
                        println!("equality expected: {}", b.equality_expected);
                    }
                }
                "log" => print_predictions(&[&formulas::bound_log(&inv, is_gd)], json)?,
                "ac" => {
                    let p = formulas::ac_group_gamma(&inv, is_gd);
                    print_predictions(&[&p.gamma, &p.gamma_t], json)?;
                }
                "codim2" => {
                    let p = formulas::central_codimension2_gamma(&inv);
                    print_predictions(&[&p.gamma, &p.gamma_t], json)?;
                }
                _ => unreachable!(),
            }
        }
        "gd" => {
            let a = group_param(params)?;
            print_predictions(&[&formulas::gen_dihedral_gamma(&a)?], json)?;
        }
        "nilpotent" => {
            let g = group_param(params)?;
            let eval = formulas::nilpotent_gamma(&g, &Budget::from_secs(60))?;
            if json {
                println!("{}", serde_json::to_string_pretty(&eval)?);
            } else {
                print_predictions(&[&eval.gamma, &eval.gamma_t_upper, &eval.gamma_t_exact], false)?;
            }
        }
        other => {
            return Err(format!(
                "unknown formula id '{other}' (try suzuki, pq, p4, pgl2, psl2, spectrum, \
                 lower, upper-tu, haji, log, gd, ac, codim2, nilpotent)"
            )
            .into())
        }
    }
    Ok(0)
}
