//! The `hecke` command line.
//!
//! Exit codes: 0 success, 1 a checked property failed, 2 bad input,
//! 3 budget exceeded or conversion failure.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::checks::{run_suite, CheckOptions, Suite};
use crate::coeffring::LaurentScalar;
use crate::error::Error;
use crate::heckeim::{AffineHecke, DEFAULT_BUDGET};
use crate::json::{self, Element, Model};
use crate::rootdata::{CartanType, LatticeElt, LatticeKind, RootDatum};
use crate::satake::{group_orbit_sum, is_w_invariant, GroupAlgElement};

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROPERTY: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hecke", version, about = "Exact affine Hecke algebra computations")]
pub struct Cli {
    #[command(flatten)]
    pub config: ConfigArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct ConfigArgs {
    /// Cartan type: A1, A2, B2, C2, G2 or A<n>.
    #[arg(long = "type", global = true)]
    pub cartan: Option<String>,
    /// Lattice: sc, ad or gl.
    #[arg(long, global = true)]
    pub lattice: Option<String>,
    /// JSON config file; explicit flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Coefficients: `formal`, or a rational value of q to evaluate at.
    #[arg(long, global = true)]
    pub q: Option<String>,
    /// Largest basis length an operation may produce.
    #[arg(long, global = true)]
    pub budget: Option<usize>,
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModelArg {
    Im,
    Bern,
}

impl From<ModelArg> for Model {
    fn from(m: ModelArg) -> Self {
        match m {
            ModelArg::Im => Model::Im,
            ModelArg::Bern => Model::Bern,
        }
    }
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Root datum summary: roots, Weyl group order, rho, [K:I].
    Describe,
    /// Multiply two elements read from JSON files.
    Mul {
        lhs: PathBuf,
        rhs: PathBuf,
        #[arg(long, value_enum)]
        model: ModelArg,
    },
    /// Convert an element between the two bases.
    Convert {
        input: PathBuf,
        #[arg(long, value_enum)]
        to: ModelArg,
        /// Convert back and require the original element.
        #[arg(long)]
        round_trip: bool,
    },
    /// Satake transform of a spherical indicator, or of the center image of
    /// an orbit sum.
    Satake {
        /// Dominant lambda, e.g. `1,0` or `[1,0]`.
        lambda: Option<String>,
        #[arg(long, alias = "center-orbit", conflicts_with = "lambda")]
        orbit: Option<String>,
    },
    /// Run property suites.
    Check {
        #[arg(default_value = "all")]
        suite: String,
        /// Half-width of the coordinate box.
        #[arg(long, default_value_t = 2)]
        radius: i64,
        #[arg(long, default_value_t = 40)]
        samples: usize,
        #[arg(long, default_value_t = 7)]
        seed: u64,
        #[arg(long, hide = true)]
        corrupt_quadratic: bool,
    },
}

struct Failure {
    code: i32,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. }
            | Error::SolveFailed(_)
            | Error::InconclusiveAfterTrials(_)
            | Error::NoDescent(_) => EXIT_BUDGET,
            _ => EXIT_INPUT,
        };
        Failure { code, message: e.to_string() }
    }
}

fn input_failure(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_INPUT, message: message.into() }
}

struct Settings {
    rd: Arc<RootDatum>,
    budget: usize,
    q0: Option<BigRational>,
    format: Format,
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path).map_err(|e| input_failure(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| input_failure(format!("{}: {e}", path.display())))
}

fn settings(args: &ConfigArgs) -> Result<Settings, Failure> {
    let file = args.config.as_deref().map(read_json).transpose()?.unwrap_or_else(|| json!({}));
    let get = |k: &str| file.get(k).and_then(Value::as_str).map(str::to_owned);
    let rd = match (&args.cartan, file.get("simple_roots")) {
        (None, Some(_)) => json::root_datum_from_config(&file)?,
        _ => {
            let ty: CartanType = args
                .cartan
                .clone()
                .or_else(|| get("type"))
                .ok_or_else(|| input_failure("no root datum given; use --type or --config"))?
                .parse()?;
            let lat: LatticeKind = args.lattice.clone().or_else(|| get("lattice")).unwrap_or_else(|| "sc".into()).parse()?;
            RootDatum::build(ty, lat)?
        }
    };
    let budget = args
        .budget
        .or_else(|| file.get("budget").and_then(Value::as_u64).map(|b| b as usize))
        .unwrap_or(DEFAULT_BUDGET);
    if budget < 1 {
        return Err(input_failure("budget must be at least 1"));
    }
    let q = args.q.clone().or_else(|| get("q")).unwrap_or_else(|| "formal".into());
    let q0 = if q == "formal" {
        None
    } else {
        let v: BigRational = q.parse().map_err(|_| input_failure(format!("bad value for --q: {q:?}")))?;
        if v <= BigRational::one() {
            return Err(input_failure("specialized q must exceed 1"));
        }
        Some(v)
    };
    let format = args.format.or_else(|| match get("format").as_deref() {
        Some("text") => Some(Format::Text),
        _ => None,
    });
    Ok(Settings { rd: Arc::new(rd), budget, q0, format: format.unwrap_or(Format::Json) })
}

/// Parses `args` and runs the command, writing to `out`; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INPUT } else { EXIT_OK };
            let _ = if e.use_stderr() { write!(err, "{e}") } else { write!(out, "{e}") };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.code
        }
    }
}

fn emit(out: &mut dyn Write, s: &str) -> Result<(), Failure> {
    out.write_all(s.as_bytes()).map_err(|e| Failure { code: EXIT_INPUT, message: e.to_string() })
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<i32, Failure> {
    let st = settings(&cli.config)?;
    match &cli.command {
        Command::Describe => describe(&st, out),
        Command::Mul { lhs, rhs, model } => {
            let h = AffineHecke::new(st.rd.clone()).with_budget(st.budget);
            let model = Model::from(*model);
            let a = json::element_from_json(h.root_datum(), &read_json(lhs)?)?;
            let b = json::element_from_json(h.root_datum(), &read_json(rhs)?)?;
            if a.model() != model || b.model() != model {
                return Err(input_failure(format!(
                    "model mismatch: --model {} with elements in {} and {}",
                    model.label(),
                    a.model().label(),
                    b.model().label()
                )));
            }
            let prod = match (a, b) {
                (Element::Im(a), Element::Im(b)) => Element::Im(h.im_mul(&a, &b)?),
                (Element::Bern(a), Element::Bern(b)) => Element::Bern(h.bern_mul(&a, &b)?),
                _ => unreachable!(),
            };
            emit_element(&st, &prod, out)
        }
        Command::Convert { input, to, round_trip } => {
            let h = AffineHecke::new(st.rd.clone()).with_budget(st.budget);
            let e = json::element_from_json(h.root_datum(), &read_json(input)?)?;
            let converted = convert(&h, &e, (*to).into())?;
            if *round_trip {
                let back = convert(&h, &converted, e.model())?;
                if back != e {
                    return Err(Failure { code: EXIT_PROPERTY, message: "round trip changed the element".into() });
                }
            }
            emit_element(&st, &converted, out)
        }
        Command::Satake { lambda, orbit } => {
            let h = AffineHecke::new(st.rd.clone()).with_budget(st.budget);
            let rd = h.root_datum();
            let (img, ok, verdict) = if let Some(x) = orbit {
                let x = json::parse_lattice(rd, x)?;
                let img = h.sat_transform_fraction(&h.center_map(&h.orbit_sum(&x))?);
                let ok = img == group_orbit_sum(rd, &x);
                let inv = is_w_invariant(rd, &img);
                (img, ok && inv, json!({"matches_orbit_sum": ok, "w_invariant": inv}))
            } else {
                let lam = match lambda {
                    Some(s) => json::parse_lattice(rd, s)?,
                    None => LatticeElt::zero(rd.dim()),
                };
                if !rd.is_dominant(&lam) {
                    return Err(Error::NotDominant(lam.coords().to_vec()).into());
                }
                let img = h.satake_spherical(&lam)?;
                let ok = is_w_invariant(rd, &img);
                (img, ok, json!({"w_invariant": ok}))
            };
            emit_group_alg(&st, &img, verdict, out)?;
            Ok(if ok { EXIT_OK } else { EXIT_PROPERTY })
        }
        Command::Check { suite, radius, samples, seed, corrupt_quadratic } => {
            let suite: Suite = suite.parse()?;
            let mut h = AffineHecke::new(st.rd.clone()).with_budget(st.budget);
            if *corrupt_quadratic {
                h = h.with_corrupted_quadratic();
            }
            let opts = CheckOptions {
                radius: *radius,
                q0: st.q0.clone().unwrap_or_else(|| BigRational::from_integer(2.into())),
                samples: *samples,
                seed: *seed,
            };
            match run_suite(&h, suite, &opts)? {
                Ok(()) => {
                    emit(out, &format!("{} {}: pass\n", h.root_datum().label(), suite.label()))?;
                    Ok(EXIT_OK)
                }
                Err(v) => {
                    let report = json!({"suite": v.suite, "property": v.property, "witness": v.witness});
                    emit(out, &format!("{} {}: FAIL\n", h.root_datum().label(), suite.label()))?;
                    emit(out, &json::to_canonical_string(&report))?;
                    Ok(EXIT_PROPERTY)
                }
            }
        }
    }
}

fn convert(h: &AffineHecke, e: &Element, to: Model) -> Result<Element, Failure> {
    Ok(match (e, to) {
        (Element::Im(f), Model::Im) => Element::Im(f.clone()),
        (Element::Bern(f), Model::Bern) => Element::Bern(f.clone()),
        (Element::Bern(f), Model::Im) => Element::Im(h.to_im(f)?),
        (Element::Im(f), Model::Bern) => Element::Bern(h.from_im(f)?),
    })
}

fn describe(st: &Settings, out: &mut dyn Write) -> Result<i32, Failure> {
    let rd = &st.rd;
    let wk = crate::satake::poincare_polynomial(rd);
    let roots: Vec<Value> = rd.positive_roots().iter().map(|r| json!(r)).collect();
    let coroots: Vec<Value> = rd.positive_coroots().iter().map(|c| json!(c.coords())).collect();
    match st.format {
        Format::Json => {
            let v = json!({
                "type": rd.label(),
                "lattice": rd.lattice().label(),
                "rank": rd.rank(),
                "dim": rd.dim(),
                "cartan_matrix": rd.cartan_matrix(),
                "positive_roots": roots,
                "positive_coroots": coroots,
                "weyl_order": rd.weyl_order(),
                "rho": rd.rho(),
                "poincare": json::laurent_to_json(&wk),
                "poincare_text": poincare_text(&wk),
            });
            emit(out, &json::to_canonical_string(&v))?;
        }
        Format::Text => {
            let mut s = String::new();
            s += &format!("type      {} ({})\n", rd.label(), rd.lattice().label());
            s += &format!("rank      {}  (lattice dimension {})\n", rd.rank(), rd.dim());
            s += &format!("cartan    {:?}\n", rd.cartan_matrix());
            s += &format!("roots     {} positive\n", rd.positive_roots().len());
            for (r, c) in rd.positive_roots().iter().zip(rd.positive_coroots()) {
                s += &format!("          {r:?}  coroot {:?}\n", c.coords());
            }
            s += &format!("|W|       {}\n", rd.weyl_order());
            s += &format!("rho       {:?}\n", rd.rho());
            s += &format!("[K:I]     {}\n", poincare_text(&wk));
            emit(out, &s)?;
        }
    }
    Ok(EXIT_OK)
}

/// Writes a polynomial in `v` with even exponents as a polynomial in `q`.
fn poincare_text(p: &LaurentScalar) -> String {
    let parts: Vec<String> = p
        .terms()
        .map(|(e, c)| match e / 2 {
            0 => c.to_string(),
            1 if c.is_one() => "q".into(),
            1 => format!("{c}*q"),
            k if c.is_one() => format!("q^{k}"),
            k => format!("{c}*q^{k}"),
        })
        .collect();
    parts.join(" + ")
}

fn specialized(st: &Settings, c: &LaurentScalar) -> Result<Option<String>, Failure> {
    match &st.q0 {
        None => Ok(None),
        Some(q0) => Ok(Some(c.specialize_q(q0)?.to_string())),
    }
}

fn emit_element(st: &Settings, e: &Element, out: &mut dyn Write) -> Result<i32, Failure> {
    let rd = &st.rd;
    let mut v = json::element_to_json(rd, e);
    if st.q0.is_some() {
        if let Some(terms) = v.get_mut("terms").and_then(Value::as_array_mut) {
            for t in terms {
                let c = json::laurent_from_json(&t["c"])?;
                t["c"] = Value::String(specialized(st, &c)?.unwrap());
            }
        }
    }
    match st.format {
        Format::Json => emit(out, &json::to_canonical_string(&v))?,
        Format::Text => {
            let terms = v["terms"].as_array().cloned().unwrap_or_default();
            let name = if e.model() == Model::Im { "T" } else { "theta" };
            let mut s: Vec<String> = Vec::new();
            for t in terms {
                let c = match &t["c"] {
                    Value::String(s) => s.clone(),
                    c => json::laurent_from_json(c)?.to_string(),
                };
                s.push(format!("({c}) {name}[x={}, w={}]", t["x"], t["w"]));
            }
            let body = if s.is_empty() { "0".to_string() } else { s.join("\n  + ") };
            emit(out, &format!("{body}\n"))?;
        }
    }
    Ok(EXIT_OK)
}

fn emit_group_alg(st: &Settings, g: &GroupAlgElement, verdict: Value, out: &mut dyn Write) -> Result<(), Failure> {
    let mut v = json::group_alg_to_json(g);
    if let Some(q0) = &st.q0 {
        let mut terms = Vec::new();
        for (x, c) in g.sorted_terms() {
            let val = c.specialize_q(q0)?.ok_or(Error::DivisionByZero)?;
            terms.push(json!({"x": x.coords(), "c": val.to_string()}));
        }
        v["terms"] = Value::Array(terms);
    }
    if let (Value::Object(m), Value::Object(extra)) = (&mut v, verdict) {
        m.extend(extra);
    }
    match st.format {
        Format::Json => emit(out, &json::to_canonical_string(&v)),
        Format::Text => {
            let mut s: Vec<String> = Vec::new();
            for (x, c) in g.sorted_terms() {
                let c = match &st.q0 {
                    Some(q0) => c.specialize_q(q0)?.unwrap_or_else(BigRational::zero).to_string(),
                    None => c.to_string(),
                };
                s.push(format!("({c}) [{:?}]", x.coords()));
            }
            let body = if s.is_empty() { "0".to_string() } else { s.join(" + ") };
            let flags: Vec<String> = v
                .as_object()
                .map(|m| m.iter().filter(|(k, _)| *k != "terms").map(|(k, b)| format!("{k}: {b}")).collect())
                .unwrap_or_default();
            emit(out, &format!("{body}\n{}\n", flags.join(", ")))
        }
    }
}

/// Entry point for the binary.
pub fn main_with_args(args: impl IntoIterator<Item = OsString>) -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdout.lock(), &mut stderr.lock())
}
