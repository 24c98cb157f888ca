//! `su3asym`: exact counts, Witten zeta values, expansion constants and
//! the expansion-versus-exact comparison from the command line.
//!
//! Precision defaults to 60 digits; `RN_PREC` or `--prec` override it.

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex;
use serde_json::{json, Value};
use su3asym::counting::{r_exact, r_oracle};
use su3asym::harness::{compare_table, eta_terms, expansion_residual};
use su3asym::real::{self, Real};
use su3asym::saddle::{c_constants, constants};
use su3asym::witten::{
    omega_continued_eval, omega_direct_eval, omega_eval, verify_zeta_identity, zeta_identity_sides, OmegaEvalConfig,
    OmegaValue,
};
use su3asym::{ComplexHP, Error};

#[derive(Parser)]
#[command(name = "su3asym", version, about = "SU(3) representation counts and their asymptotic expansion")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Exact r(0..=N).
    Rn(RnArgs),
    /// The Witten zeta function ω(s).
    Omega(OmegaArgs),
    /// X, Y, A1..A5 and C_0..C_L.
    Constants(ConstantsArgs),
    /// r(n) against the truncated expansion.
    Compare(CompareArgs),
    /// |Log G(e^-z) - expansion| for the terms below eta.
    Residual(ResidualArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct RnArgs {
    #[arg(long)]
    max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
    /// Recompute through the exp-log route and require agreement.
    #[arg(long)]
    oracle_check: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Auto,
    Direct,
    Mb,
}

#[derive(Args)]
struct OmegaArgs {
    #[arg(long, allow_hyphen_values = true, required_unless_present_any = ["verify_zeros", "verify_identity"])]
    re: Option<String>,
    #[arg(long, allow_hyphen_values = true, default_value = "0")]
    im: String,
    #[arg(long, value_enum, default_value = "auto")]
    method: Method,
    /// Contour shift of the continuation.
    #[arg(long = "M")]
    m: Option<u32>,
    #[arg(long)]
    prec: Option<u32>,
    /// Evaluate ω(-1), ..., ω(-K).
    #[arg(long, conflicts_with_all = ["re", "verify_identity"])]
    verify_zeros: Option<u32>,
    /// Check the ζ(6n+2) identity at this n.
    #[arg(long, conflicts_with = "re")]
    verify_identity: Option<u32>,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long, default_value_t = 2)]
    order: usize,
    #[arg(long)]
    prec: Option<u32>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    /// Comma-separated list of n.
    #[arg(long, value_delimiter = ',', required = true)]
    n: Vec<u64>,
    #[arg(long, default_value_t = 2)]
    terms: usize,
    /// Use the floating-point DP for n beyond the exact limit.
    #[arg(long)]
    approx_beyond_exact: bool,
    #[arg(long)]
    prec: Option<u32>,
}

#[derive(Args)]
struct ResidualArgs {
    /// RE or RE,IM.
    #[arg(long, allow_hyphen_values = true)]
    z: String,
    #[arg(long)]
    eta: f64,
    #[arg(long)]
    prec: Option<u32>,
}

fn parse_real(s: &str) -> Result<Real, Error> {
    Real::parse(s.trim()).ok_or_else(|| Error::Invalid(format!("not a number: {s}")))
}

fn set_prec(p: Option<u32>) {
    if let Some(d) = p {
        real::set_digits(d);
    }
}

fn cjson(z: &ComplexHP) -> Value {
    json!({ "re": z.re.to_string(), "im": z.im.to_string() })
}

fn omega_json(s: &ComplexHP, v: &OmegaValue<Real>) -> Value {
    json!({
        "s": cjson(s),
        "value": cjson(&v.value),
        "method": v.method.name(),
        "est_error": v.est_error,
        "M": v.m,
    })
}

fn rn(a: &RnArgs) -> Result<String, Error> {
    let r = r_exact(a.max);
    if a.oracle_check {
        let o = r_oracle(a.max)?;
        if o != r {
            let n = (0..=a.max).find(|&n| o.get(n) != r.get(n)).unwrap_or(0);
            return Err(Error::Invalid(format!("oracle mismatch at n = {n}")));
        }
    }
    Ok(match a.format {
        Format::Csv => {
            let mut out = String::from("n,r\n");
            for (n, v) in r.coeffs.iter().enumerate() {
                writeln!(out, "{n},{v}").unwrap();
            }
            out
        }
        Format::Json => {
            let vals: Vec<String> = r.coeffs.iter().map(|v| v.to_string()).collect();
            let mut o = json!({ "max": a.max, "r": vals });
            if a.oracle_check {
                o["oracle_check"] = json!("agree");
            }
            format!("{o:#}\n")
        }
    })
}

fn omega(a: &OmegaArgs) -> Result<String, Error> {
    set_prec(a.prec);
    let cfg = OmegaEvalConfig { m: a.m, ..OmegaEvalConfig::default() };
    if let Some(k) = a.verify_zeros {
        let mut rows = Vec::new();
        for n in 1..=k {
            let s = Complex::new(Real::from_i64(-(n as i64)), Real::from_i64(0));
            let v = omega_eval(&s, &cfg)?;
            rows.push(omega_json(&s, &v));
        }
        return Ok(format!("{:#}\n", Value::Array(rows)));
    }
    if let Some(n) = a.verify_identity {
        let (lhs, rhs) = zeta_identity_sides::<Real>(n)?;
        let res = verify_zeta_identity::<Real>(n)?;
        let o = json!({
            "n": n,
            "lhs": lhs.to_string(),
            "rhs": rhs.to_string(),
            "relative_residual": res.to_sci(6),
        });
        return Ok(format!("{o:#}\n"));
    }
    let re = parse_real(a.re.as_deref().unwrap_or_default())?;
    let s = Complex::new(re, parse_real(&a.im)?);
    let v = match a.method {
        Method::Auto => omega_eval(&s, &cfg)?,
        Method::Direct => omega_direct_eval(&s, &cfg)?,
        Method::Mb => omega_continued_eval(&s, &cfg)?,
    };
    Ok(format!("{:#}\n", omega_json(&s, &v)))
}

fn constants_cmd(a: &ConstantsArgs) -> Result<String, Error> {
    set_prec(a.prec);
    let k = constants::<Real>();
    let c = c_constants::<Real>(a.order)?;
    Ok(match a.format {
        Format::Json => {
            let mut o = serde_json::Map::new();
            o.insert("digits".into(), json!(real::digits()));
            for (name, v) in k.named().into_iter().filter(|(n, _)| *n != "C0") {
                o.insert(name.into(), json!(v.to_string()));
            }
            o.insert("C".into(), json!(c.iter().map(|v| v.to_string()).collect::<Vec<_>>()));
            format!("{:#}\n", Value::Object(o))
        }
        Format::Csv => {
            let mut out = String::from("name,value\n");
            for (name, v) in k.named().into_iter().filter(|(n, _)| *n != "C0") {
                writeln!(out, "{name},{v}").unwrap();
            }
            for (j, v) in c.iter().enumerate() {
                writeln!(out, "C_{j},{v}").unwrap();
            }
            out
        }
    })
}

fn compare(a: &CompareArgs) -> Result<String, Error> {
    set_prec(a.prec);
    let l = a.terms;
    let t = compare_table::<Real>(&a.n, l, a.approx_beyond_exact)?;
    let fit = t.exponents[l].map(|e| format!("{e:.6}")).unwrap_or_default();
    let mut out = format!("n,log_r_exact,log_r_asym_{l},ratio,R_{l},fitted_exponent\n");
    for row in t.rows.iter().filter(|r| r.l == l) {
        let exact = if row.exact { row.log_r_exact.to_sci(25) } else { format!("~{}", row.log_r_exact.to_sci(12)) };
        writeln!(
            out,
            "{},{},{},{:.12},{},{}",
            row.n,
            exact,
            row.log_r_asym.to_sci(25),
            row.ratio,
            row.residual_scaled.to_sci(15),
            fit
        )
        .unwrap();
    }
    Ok(out)
}

fn residual(a: &ResidualArgs) -> Result<String, Error> {
    set_prec(a.prec);
    let mut parts = a.z.splitn(2, ',');
    let re = parse_real(parts.next().unwrap_or_default())?;
    let im = match parts.next() {
        Some(s) => parse_real(s)?,
        None => Real::from_i64(0),
    };
    let z = Complex::new(re, im);
    let res = expansion_residual(&z, a.eta)?;
    let modulus = (z.re.clone() * z.re.clone() + z.im.clone() * z.im.clone()).sqrt();
    let scaled = res.clone() / modulus.powf(&Real::from_f64(a.eta));
    let o = json!({
        "z": cjson(&z),
        "eta": a.eta,
        "terms": eta_terms(a.eta),
        "residual": res.to_sci(20),
        "scaled": scaled.to_sci(20),
    });
    Ok(format!("{o:#}\n"))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let out = match &cli.cmd {
        Cmd::Rn(a) => rn(a),
        Cmd::Omega(a) => omega(a),
        Cmd::Constants(a) => constants_cmd(a),
        Cmd::Compare(a) => compare(a),
        Cmd::Residual(a) => residual(a),
    };
    match out {
        Ok(s) => {
            print!("{s}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
