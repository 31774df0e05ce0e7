//! `hgff` command-line front end.
//!
//! Exit codes: 0 success, 1 a theorem failed verification, 2 usage error.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use hgff::chars::{all_chars, iota, kappa, parse_char};
use hgff::config;
use hgff::hyper::{HGSpec, HyperContext};
use hgff::identities::{registry, verify_record, Ctx, Mode, VerifyReport};
use hgff::sums::context;
use hgff::varieties::{count_affine_brute, count_via_periods, glc_trace, GLCurve, HGVariety};
use hgff::zeta::{lifted_period, newton_periods, weil_purity_check, zeta_factor};
use hgff::{CycloNum, Error, FieldElement, FiniteField, MultChar, RationalParam};

#[derive(Parser)]
#[command(name = "hgff", version, about = "Hypergeometric functions over finite fields")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Field construction data.
    #[command(subcommand)]
    Field(FieldCmd),
    /// Character tables.
    #[command(subcommand)]
    Char(CharCmd),
    /// Gauss and Jacobi sum tables as JSON.
    Sums { q: u64 },
    /// Period function P and normalized F at one argument.
    Eval(SpecArgs),
    /// Point counts.
    #[command(subcommand)]
    Count(CountCmd),
    /// Degree-two local factor of a primitive 2P1.
    Zeta {
        #[command(flatten)]
        spec: SpecArgs,
        /// Check the factor against lifted sums up to this degree.
        #[arg(long, default_value_t = 3)]
        rmax: u32,
    },
    /// Verify registry identities.
    Verify(VerifyArgs),
    /// Verify every identity on its default fields.
    Report(OutputArgs),
}

#[derive(Subcommand)]
enum FieldCmd {
    Info { p: u64, e: u32 },
}

#[derive(Subcommand)]
enum CharCmd {
    Table { q: u64 },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long)]
    q: u64,
    /// Comma-separated upper characters (`chi^m`, `order:N,index:k`, `eps`, `phi`)
    /// or rationals with --rational.
    #[arg(long)]
    upper: String,
    #[arg(long)]
    lower: String,
    #[arg(long)]
    lambda: String,
    /// Read parameters as rationals `i/m` and convert with iota.
    #[arg(long)]
    rational: bool,
}

#[derive(Subcommand)]
enum CountCmd {
    /// Generalized Legendre curve `y^N = x^i (1-x)^j (1 - lambda x)^k`.
    Glc {
        #[arg(long)]
        q: u64,
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long)]
        i: i64,
        #[arg(long)]
        j: i64,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        lambda: String,
    },
    /// Hypergeometric variety with exponent lists `--i 1,1 --j 1,2`.
    Hgv {
        #[arg(long)]
        q: u64,
        #[arg(long = "N", visible_alias = "n")]
        n: u32,
        #[arg(long, value_delimiter = ',')]
        i: Vec<i64>,
        #[arg(long, value_delimiter = ',')]
        j: Vec<i64>,
        #[arg(long)]
        k: i64,
        #[arg(long)]
        lambda: String,
    },
}

#[derive(Args)]
struct OutputArgs {
    /// `exhaustive` or `sample:N:SEED`.
    #[arg(long, default_value = "exhaustive")]
    mode: String,
    #[arg(long)]
    json: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity ids; all identities when omitted.
    #[arg(long)]
    id: Vec<String>,
    #[arg(long)]
    all: bool,
    /// Field sizes; each identity's default list when omitted.
    #[arg(long, value_delimiter = ',')]
    q: Vec<u64>,
    #[command(flatten)]
    out: OutputArgs,
}

enum Failure {
    Usage(String),
    Theorem,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Res<T> = std::result::Result<T, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Theorem) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
    }
}

fn run(cmd: Cmd) -> Res<()> {
    match cmd {
        Cmd::Field(FieldCmd::Info { p, e }) => field_info(p, e),
        Cmd::Char(CharCmd::Table { q }) => char_table(q),
        Cmd::Sums { q } => sums(q),
        Cmd::Eval(s) => eval(&s),
        Cmd::Count(c) => count(c),
        Cmd::Zeta { spec, rmax } => zeta(&spec, rmax),
        Cmd::Verify(v) => {
            let ids = if v.id.is_empty() || v.all { Vec::new() } else { v.id };
            verify(&ids, &v.q, &v.out)
        }
        Cmd::Report(out) => verify(&[], &[], &out),
    }
}

fn field(q: u64) -> Res<Arc<FiniteField>> {
    Ok(FiniteField::from_q(q)?)
}

fn print(v: &Value) {
    emit(&serde_json::to_string_pretty(v).expect("json"));
}

// a closed pipe is not an error for a report printer
fn emit(s: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{s}");
}

fn field_info(p: u64, e: u32) -> Res<()> {
    let f = FiniteField::new(p, e)?;
    let (add, mul) = f.table_checksums();
    println!("q = {}", f.q());
    println!("p = {}, e = {}", f.p(), f.e());
    println!("modulus = {:?}", f.modulus());
    println!("generator = {}", f.format_poly(f.generator()));
    println!("checksums = add {add:016x}, mul {mul:016x}");
    Ok(())
}

fn char_table(q: u64) -> Res<()> {
    let f = field(q)?;
    let n = f.q() as u64 - 1;
    println!("{:>6} {:>6} {:>8}", "char", "order", "kappa");
    for c in all_chars(f.q()) {
        let k = kappa(c, n)?;
        println!("{:>6} {:>6} {:>8}", c.to_string(), c.order(), k.to_string());
    }
    Ok(())
}

fn sums(q: u64) -> Res<()> {
    let f = field(q)?;
    let ctx = context(&f);
    let mut gauss = Vec::new();
    let mut jacobi = Vec::new();
    for a in all_chars(f.q()) {
        gauss.push(json!({ "char": a.to_string(), "value": ctx.gauss(a)? }));
        for b in all_chars(f.q()) {
            jacobi.push(json!({ "a": a.to_string(), "b": b.to_string(), "value": ctx.jacobi(a, b) }));
        }
    }
    print(&json!({ "q": f.q(), "gauss": gauss, "jacobi": jacobi }));
    Ok(())
}

fn parse_list(f: &FiniteField, s: &str, rational: bool) -> Res<Vec<MultChar>> {
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    // `order:N,index:k` contains a comma of its own
    let mut parts = s.split(',');
    while let Some(t) = parts.next() {
        let t = t.trim();
        let c = if rational {
            iota(RationalParam::parse(t)?, f)?
        } else if t.starts_with("order:") {
            let idx = parts.next().ok_or_else(|| Failure::Usage(format!("incomplete character '{t}'")))?;
            parse_char(f.q(), &format!("{t},{}", idx.trim()))?
        } else {
            match t {
                "eps" => MultChar::trivial(f.q()),
                "phi" => {
                    if f.q().is_multiple_of(2) {
                        return Err(Failure::Usage("phi needs odd q".into()));
                    }
                    MultChar::quadratic(f.q())
                }
                _ => parse_char(f.q(), t)?,
            }
        };
        out.push(c);
    }
    Ok(out)
}

fn spec_of(f: &FiniteField, s: &SpecArgs) -> Res<(HGSpec, FieldElement)> {
    let upper = parse_list(f, &s.upper, s.rational)?;
    let lower = parse_list(f, &s.lower, s.rational)?;
    let spec = HGSpec::new(upper, lower)?;
    Ok((spec, f.parse(&s.lambda)?))
}

fn spec_json(spec: &HGSpec) -> Value {
    let names = |v: &[MultChar]| v.iter().map(|c| c.to_string()).collect::<Vec<_>>();
    json!({ "upper": names(spec.upper()), "lower": names(spec.lower()) })
}

fn complex(x: &CycloNum) -> [f64; 2] {
    let z = x.to_complex(15);
    [z.re, z.im]
}

fn eval(s: &SpecArgs) -> Res<()> {
    let f = field(s.q)?;
    let (spec, lambda) = spec_of(&f, s)?;
    let h = HyperContext::new(&f);
    let p = h.period_direct(&spec, lambda)?;
    let fv = h.f_normalized(&spec, lambda).ok();
    print(&json!({
        "q": f.q(),
        "spec": spec_json(&spec),
        "lambda": f.format(lambda),
        "primitive": spec.is_primitive(),
        "P": p,
        "P_complex": complex(&p),
        "F": fv,
        "F_complex": fv.as_ref().map(complex),
    }));
    Ok(())
}

fn count(c: CountCmd) -> Res<()> {
    let (f, v, trace) = match c {
        CountCmd::Glc { q, n, i, j, k, lambda } => {
            let f = field(q)?;
            let l = f.parse(&lambda)?;
            let curve = GLCurve::new(n, i, j, k, l)?;
            let t = glc_trace(&f, &curve)?;
            (f, curve.variety(), t)
        }
        CountCmd::Hgv { q, n, i, j, k, lambda } => {
            let f = field(q)?;
            let l = f.parse(&lambda)?;
            let v = HGVariety::new(n, i, j, k, l)?;
            let main = 1 + (f.q() as i64).pow(v.n() as u32);
            let t = CycloNum::from_int(f.q() - 1, main - count_via_periods(&f, &v)?);
            (f, v, t)
        }
    };
    let affine = count_affine_brute(&f, &v)?;
    let formula = count_via_periods(&f, &v)?;
    print(&json!({
        "q": f.q(),
        "variety": v,
        "lambda": f.format(v.lambda),
        "affine": affine,
        "formula": formula,
        "trace": trace.as_i64().map(Value::from).unwrap_or_else(|_| json!(trace)),
    }));
    Ok(())
}

fn zeta(s: &SpecArgs, rmax: u32) -> Res<()> {
    let f = field(s.q)?;
    let (spec, lambda) = spec_of(&f, s)?;
    if spec.n() != 1 {
        return Err(Failure::Usage("zeta takes one lower parameter".into()));
    }
    let h = zeta_factor(&f, &spec, lambda)?;
    let purity = weil_purity_check(&h);
    let rmax = rmax.clamp(2, hgff::zeta::r_budget(f.q(), rmax.max(2)));
    let predicted = newton_periods(&h, rmax);
    let mut series = Vec::new();
    for r in 1..=rmax {
        let a = lifted_period(&f, &spec, lambda, r)?;
        series.push(json!({ "r": r, "ok": a == predicted[r as usize - 1] }));
    }
    print(&json!({
        "q": f.q(),
        "spec": spec_json(&spec),
        "lambda": f.format(lambda),
        "convention": "tr = -P(q), H(T) = T^2 - tr T + det",
        "trace": h.trace(),
        "det": h.det(),
        "poly": h.poly_string(),
        "roots": h.roots().iter().map(|z| [z.re, z.im]).collect::<Vec<_>>(),
        "purity": purity,
        "series": series,
    }));
    Ok(())
}

fn verify(ids: &[String], qs: &[u64], out: &OutputArgs) -> Res<()> {
    let mode = Mode::parse(&out.mode)?;
    let records: Vec<_> = if ids.is_empty() {
        registry().iter().collect()
    } else {
        ids.iter().map(|id| hgff::identities::lookup(id)).collect::<hgff::Result<_>>()?
    };
    let mut fields = Vec::new();
    let mut reports: Vec<VerifyReport> = Vec::new();
    for rec in records {
        let list = if qs.is_empty() { rec.fields } else { qs };
        for &q in list {
            let f = match fields.iter().find(|f: &&Arc<FiniteField>| f.q() as u64 == q) {
                Some(f) => Arc::clone(f),
                None => {
                    let f = field(q)?;
                    fields.push(Arc::clone(&f));
                    f
                }
            };
            reports.push(verify_record(rec, &Ctx::new(&f), mode)?);
        }
    }
    let doc = json!({
        "mode": mode.to_string(),
        "q_max": config::q_max(),
        "reports": reports,
    });
    let text = serde_json::to_string_pretty(&doc).expect("json");
    match &out.json {
        Some(p) => std::fs::write(p, text + "\n").map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => emit(&text),
    }
    if let Some(p) = &out.csv {
        write_csv(p, &reports).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?;
    }
    if reports.iter().any(|r| r.is_theorem_failure()) {
        return Err(Failure::Theorem);
    }
    Ok(())
}

fn write_csv(path: &PathBuf, reports: &[VerifyReport]) -> Result<(), csv::Error> {
    let mut w = csv::Writer::from_path(path)?;
    w.write_record(["id", "q", "status", "tuples_checked", "failures"])?;
    for r in reports {
        let status = serde_json::to_value(&r.status).expect("json");
        w.write_record([
            r.id.clone(),
            r.q.to_string(),
            status.as_str().unwrap_or_default().to_string(),
            r.tuples_checked.to_string(),
            r.failures.len().to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
