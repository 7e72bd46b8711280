//! The `blcalc` command line. `run` takes the full argument vector and
//! returns the captured output and exit code: 0 for success or a positive
//! answer, 1 for a negative answer, 2 for invalid input.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::algebra::{Caps, Chain, Op};
use crate::amalgamation::{
    amalgamate_constructive, find_amalgam_bruteforce, one_sided_amalgam, Bounds, SearchOutcome, Span,
};
use crate::classifier::{
    classify_ap_bh, classify_ap_bl, classify_ap_mv, classify_ap_wh, emit_poset, enumerate_catalog, interval,
    CatalogMode, IntervalId, PosetFormat,
};
use crate::dsl::{parse_chain, parse_class_expr};
use crate::error::{Error, Result};
use crate::laws::check_chain_window;
use crate::logic::{
    consequence, dip_report, find_interpolant, implication_valid, parse_formula, DEFAULT_CLOSURE_LIMIT,
};
use crate::morphisms::DEFAULT_SCALE_BOUND;
use crate::raw::{check_axioms, RawChain};
use crate::structure::{decompose, flatten};
use crate::varieties::VarietyInput;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliOutput {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl CliOutput {
    fn ok(stdout: String) -> Self {
        CliOutput { stdout, stderr: String::new(), code: 0 }
    }

    fn answer(stdout: String, yes: bool) -> Self {
        CliOutput { stdout, stderr: String::new(), code: if yes { 0 } else { 1 } }
    }
}

#[derive(Parser, Debug)]
#[command(name = "blcalc", version, about = "Exact computations with BL-chains and basic hoops")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Evaluate, decompose, check or flatten chains.
    #[command(subcommand)]
    Chain(ChainCmd),
    /// Search for or construct amalgams of spans.
    Amalgam {
        #[arg(value_enum)]
        mode: AmalgamMode,
        #[command(flatten)]
        span: SpanArgs,
    },
    /// Decide the amalgamation property of a variety.
    Classify {
        #[arg(value_enum)]
        mode: ClassifyMode,
        #[command(flatten)]
        input: VarietyArgs,
    },
    /// Print an interval of AP varieties.
    Poset {
        /// Interval such as "I(W1,Z)", "I(Wo2)" or "I(Z)".
        #[arg(long)]
        interval: Option<String>,
        /// Interval family: wn, wo, wnz, z or u.
        #[arg(long)]
        name: Option<String>,
        #[arg(long)]
        params: Option<u32>,
        #[arg(long, default_value = "dot")]
        format: String,
    },
    /// List the AP varieties with bounded parameters.
    Catalog {
        #[arg(long, value_enum, default_value = "bh")]
        mode: CatalogArg,
        #[arg(long, default_value_t = 1)]
        n_max: u32,
        #[arg(long, default_value_t = 1)]
        m_max: u32,
    },
    /// Consequence, interpolation and deductive interpolation.
    #[command(subcommand)]
    Logic(LogicCmd),
}

#[derive(Subcommand, Debug)]
enum ChainCmd {
    /// Apply one operation to two elements.
    Eval {
        chain: String,
        #[arg(long)]
        op: String,
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Decompose a finite table into Wajsberg components.
    Decompose {
        #[arg(long)]
        table: String,
    },
    /// Check the basic-hoop axioms on a table or a window of a chain.
    Check {
        chain: Option<String>,
        #[arg(long)]
        table: Option<String>,
        #[arg(long, default_value_t = Caps::default().window)]
        window: i64,
        #[arg(long, default_value_t = Caps::default().denom)]
        denom: i64,
    },
    /// Print the tables of a finite chain.
    Flatten { chain: String },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum AmalgamMode {
    Search,
    Construct,
    OneSided,
}

#[derive(Args, Debug)]
struct SpanArgs {
    #[arg(long)]
    apex: String,
    #[arg(long)]
    left: String,
    #[arg(long)]
    right: String,
    /// Position of the left leg among the embeddings apex -> left.
    #[arg(long, default_value_t = 0)]
    left_index: usize,
    /// Position of the right leg among the embeddings apex -> right.
    #[arg(long, default_value_t = 0)]
    right_index: usize,
    #[arg(long)]
    universe: String,
    /// Largest component parameter tried by the search.
    #[arg(long, default_value_t = 7)]
    bound: u32,
    /// Largest target index tried; defaults to the sum of both indices.
    #[arg(long)]
    max_index: Option<usize>,
    #[arg(long, default_value_t = DEFAULT_SCALE_BOUND)]
    scale_cap: u32,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ClassifyMode {
    Mv,
    Wh,
    Bh,
    Bl,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum CatalogArg {
    Bh,
    Bl,
}

#[derive(Args, Debug)]
struct VarietyArgs {
    /// A generating chain; repeat for several.
    #[arg(long)]
    gens: Vec<String>,
    /// A class expression such as "[L1 W1*]".
    #[arg(long)]
    class: Option<String>,
}

#[derive(Subcommand, Debug)]
enum LogicCmd {
    /// Premise entails conclusion in the generated variety.
    Consequence(PairArgs),
    /// The implication premise -> conclusion is valid.
    Implies(PairArgs),
    /// Find an interpolant over the shared variables.
    Interpolate {
        #[command(flatten)]
        pair: PairArgs,
        #[arg(long, default_value_t = DEFAULT_CLOSURE_LIMIT)]
        limit: usize,
    },
    /// Report whether the logic of a variety has deductive interpolation.
    Dip {
        #[command(flatten)]
        input: VarietyArgs,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug)]
struct PairArgs {
    #[arg(long)]
    premise: String,
    #[arg(long)]
    conclusion: String,
    #[arg(long, required = true)]
    gens: Vec<String>,
}

fn pretty(v: &Value) -> String {
    format!("{}\n", serde_json::to_string_pretty(v).expect("json values serialize"))
}

fn with_schema(mut v: Value) -> Value {
    if let Value::Object(m) = &mut v {
        m.insert("schema".into(), json!(crate::SCHEMA));
    }
    v
}

fn read_table(path: &str) -> Result<RawChain> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Invalid(format!("cannot read {path}: {e}")))?;
    RawChain::from_json(&text)
}

fn chains(specs: &[String]) -> Result<Vec<Chain>> {
    specs.iter().map(|s| parse_chain(s)).collect()
}

fn variety(input: &VarietyArgs) -> Result<VarietyInput> {
    match (&input.class, input.gens.is_empty()) {
        (Some(c), true) => Ok(VarietyInput::Canonical(parse_class_expr(c)?)),
        (None, false) => Ok(VarietyInput::Generators(chains(&input.gens)?)),
        _ => Err(Error::Invalid("give either --class or one or more --gens".into())),
    }
}

fn chain_cmd(cmd: &ChainCmd) -> Result<CliOutput> {
    match cmd {
        ChainCmd::Eval { chain, op, x, y } => {
            let c = parse_chain(chain)?;
            let op = Op::parse(op)?;
            let r = c.op(op, &c.parse_element(x)?, &c.parse_element(y)?)?;
            Ok(CliOutput::ok(format!("{r}\n")))
        }
        ChainCmd::Decompose { table } => Ok(CliOutput::ok(pretty(&decompose(&read_table(table)?)?.to_json()))),
        ChainCmd::Check { chain, table, window, denom } => {
            let report = match (chain, table) {
                (Some(c), None) => check_chain_window(&parse_chain(c)?, Caps::new(*window, *denom)),
                (None, Some(t)) => check_axioms(&read_table(t)?)?,
                _ => return Err(Error::Invalid("give either a chain or --table".into())),
            };
            let v = with_schema(serde_json::to_value(&report).expect("reports serialize"));
            Ok(CliOutput::answer(pretty(&v), report.basic_hoop()))
        }
        ChainCmd::Flatten { chain } => {
            let t = flatten(&parse_chain(chain)?)?;
            Ok(CliOutput::ok(pretty(&with_schema(serde_json::to_value(&t).expect("tables serialize")))))
        }
    }
}

fn amalgam_cmd(mode: AmalgamMode, a: &SpanArgs) -> Result<CliOutput> {
    let (apex, b, c) = (parse_chain(&a.apex)?, parse_chain(&a.left)?, parse_chain(&a.right)?);
    let universe = parse_class_expr(&a.universe)?;
    let span = Span::from_indices(&apex, &b, &c, a.left_index, a.right_index)?;
    let bounds =
        Bounds { max_index: a.max_index.unwrap_or(b.index() + c.index()), max_k: a.bound, scale_cap: a.scale_cap };
    let result = match mode {
        AmalgamMode::Search => find_amalgam_bruteforce(&span, &universe, bounds)?,
        AmalgamMode::Construct => match amalgamate_constructive(&span, &universe) {
            Ok(am) => SearchOutcome::Found(Box::new(am)),
            Err(Error::Unsupported(msg)) => return Ok(unsupported(&span, &msg)),
            Err(e) => return Err(e),
        },
        AmalgamMode::OneSided => match one_sided_amalgam(&span, &universe, bounds) {
            Ok(am) => SearchOutcome::Found(Box::new(am)),
            Err(Error::Unsupported(msg)) => return Ok(unsupported(&span, &msg)),
            Err(e) => return Err(e),
        },
    };
    let found = result.amalgam().is_some();
    let mut v = result.to_json();
    v["span"] = span.to_json();
    Ok(CliOutput::answer(pretty(&v), found))
}

fn unsupported(span: &Span, msg: &str) -> CliOutput {
    let v = json!({"schema": crate::SCHEMA, "result": "unsupported", "reason": msg, "span": span.to_json()});
    CliOutput::answer(pretty(&v), false)
}

fn logic_cmd(cmd: &LogicCmd) -> Result<CliOutput> {
    match cmd {
        LogicCmd::Consequence(p) | LogicCmd::Implies(p) => {
            let (phi, psi, gens) = (parse_formula(&p.premise)?, parse_formula(&p.conclusion)?, chains(&p.gens)?);
            let r = if matches!(cmd, LogicCmd::Consequence(_)) {
                consequence(&phi, &psi, &gens)?
            } else {
                implication_valid(&phi, &psi, &gens)?
            };
            Ok(CliOutput::answer(pretty(&r.to_json()), r.holds))
        }
        LogicCmd::Interpolate { pair, limit } => {
            let (phi, psi, gens) =
                (parse_formula(&pair.premise)?, parse_formula(&pair.conclusion)?, chains(&pair.gens)?);
            let r = find_interpolant(&phi, &psi, &gens, *limit)?;
            Ok(CliOutput::answer(pretty(&r.to_json()), r.interpolant.is_some()))
        }
        LogicCmd::Dip { input, json } => {
            let r = dip_report(&variety(input)?)?;
            let out = if *json { pretty(&r.to_json()) } else { format!("{}\n", r.summary()) };
            Ok(CliOutput::answer(out, r.interpolation))
        }
    }
}

fn dispatch(cli: &Cli) -> Result<CliOutput> {
    match &cli.command {
        Command::Chain(c) => chain_cmd(c),
        Command::Amalgam { mode, span } => amalgam_cmd(*mode, span),
        Command::Classify { mode, input } => {
            let v = variety(input)?;
            let verdict = match mode {
                ClassifyMode::Mv => classify_ap_mv(&v)?,
                ClassifyMode::Wh => classify_ap_wh(&v)?,
                ClassifyMode::Bh => classify_ap_bh(&v)?,
                ClassifyMode::Bl => classify_ap_bl(&v)?,
            };
            Ok(CliOutput::answer(pretty(&verdict.to_json()), verdict.ap))
        }
        Command::Poset { interval: id, name, params, format } => {
            let format = PosetFormat::parse(format)?;
            let id = match (id, name) {
                (Some(s), None) => IntervalId::parse(s)?,
                (None, Some(n)) => IntervalId::from_name(n, *params)?,
                _ => return Err(Error::Invalid("give either --interval or --name".into())),
            };
            Ok(CliOutput::ok(emit_poset(&interval(id), format)))
        }
        Command::Catalog { mode, n_max, m_max } => {
            if *n_max == 0 || *m_max == 0 {
                return Err(Error::Invalid("catalog bounds must be at least 1".into()));
            }
            let mode = match mode {
                CatalogArg::Bh => CatalogMode::Bh,
                CatalogArg::Bl => CatalogMode::Bl,
            };
            let entries = enumerate_catalog(mode, *n_max, *m_max);
            let v = json!({
                "schema": crate::SCHEMA,
                "count": entries.len(),
                "entries": entries.iter().map(|e| json!({
                    "class": e.class.to_string(),
                    "position": e.position.to_string(),
                })).collect::<Vec<_>>(),
            });
            Ok(CliOutput::ok(pretty(&v)))
        }
        Command::Logic(c) => logic_cmd(c),
    }
}

pub fn run(args: &[String]) -> CliOutput {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                CliOutput { stdout: String::new(), stderr: text, code: 2 }
            } else {
                CliOutput::ok(text)
            };
        }
    };
    match dispatch(&cli) {
        Ok(out) => out,
        Err(e) => {
            let code = match e {
                Error::Axioms(_) => 1,
                _ => 2,
            };
            CliOutput { stdout: String::new(), stderr: format!("error: {e}\n"), code }
        }
    }
}

/// Runs with the program name prepended to the arguments.
pub fn run_args(args: &[&str]) -> CliOutput {
    let mut v = vec!["blcalc".to_string()];
    v.extend(args.iter().map(|s| s.to_string()));
    run(&v)
}
