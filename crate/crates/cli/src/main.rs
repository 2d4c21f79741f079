//! `absorb`: decompositions, Noether exponents and absorbing degrees of
//! monomial ideals from the command line.
//!
//! Exit status: 0 on success, 1 on I/O failure or a failed check, 2 on
//! malformed input, 3 when the input violates a precondition.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use absorbing_core::corpus::{ideal_corpus, DEFAULT_SEED};
use absorbing_core::decomposition::{is_primary_shape, PrimaryComponent};
use absorbing_core::graph::{
    edge_ideal, edge_power_linearity, is_bipartite, minimal_vertex_covers,
};
use absorbing_core::json::{DecompositionJson, IdealJson};
use absorbing_core::linear::{
    check_linearity_by_powers, integral_closure_2d, is_integrally_closed_2d, is_omega_linear_2d,
    is_omega_linear_primary, PowerVerdict, Verdict,
};
use absorbing_core::oracle::{brute_noether, monomial_absorbing_lower_bound, verify_certificate};
use absorbing_core::text::render_ideal_text;
use absorbing_core::{
    canonical_primary_decomposition, noether_exponent, omega, parse_ideal, standard_decomposition,
    Error, Graph, MonomialIdeal, OmegaValue, Ring,
};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "absorb",
    version,
    about = "Absorbing degrees and decompositions of monomial ideals"
)]
struct Cli {
    /// Variables of the ambient ring, e.g. `x,y,z` (inferred when omitted)
    #[arg(long, global = true, value_delimiter = ',')]
    vars: Option<Vec<String>>,
    /// Emit JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized corpora
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Standard (irreducible) or canonical primary decomposition
    Decompose {
        #[arg(long, conflicts_with = "canonical")]
        standard: bool,
        #[arg(long)]
        canonical: bool,
        ideal: String,
    },
    /// Noether exponent e(I)
    Noether { ideal: String },
    /// Absorbing degree ω(I)
    Omega {
        /// Print the witness certificate
        #[arg(long)]
        certificate: bool,
        /// Re-check the certificate and the Noether exponent with slow oracles
        #[arg(long)]
        verify: bool,
        ideal: String,
    },
    /// The power I^M
    Power { m: u32, ideal: String },
    /// Compare ω(I^m) with m·ω(I)
    OmegaLinear {
        #[arg(long, default_value_t = 4)]
        max_power: u32,
        ideal: String,
    },
    /// Integral closure of a two-variable ideal
    Closure { ideal: String },
    /// Edge ideal of a graph given as a 1-based edge list
    EdgeIdeal {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value_t = 1)]
        powers: u32,
    },
    /// Cross-check closed forms against brute-force searches
    Oracle(OracleArgs),
}

#[derive(Args)]
struct OracleArgs {
    /// Check this ideal
    #[arg(required_unless_present = "random", conflicts_with = "random")]
    ideal: Option<String>,
    /// Check N seeded random ideals instead
    #[arg(long)]
    random: Option<usize>,
    /// Largest factor count tried by the monomial search
    #[arg(long)]
    t_max: Option<u32>,
    /// Largest factor degree in the monomial search (default: max generator degree + 1)
    #[arg(long)]
    deg_cap: Option<u32>,
}

/// Failures mapped to exit codes.
enum Failure {
    Core(Error),
    Io(String),
    Check(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

type Outcome = Result<String, Failure>;

struct Ctx {
    ring: Option<Ring>,
    json: bool,
    seed: u64,
}

impl Ctx {
    fn ideal(&self, text: &str) -> Result<MonomialIdeal, Failure> {
        Ok(parse_ideal(text, self.ring.as_ref())?)
    }

    fn emit(&self, text: String, value: Value) -> Outcome {
        if self.json {
            Ok(serde_json::to_string(&value).expect("serializable"))
        } else {
            Ok(text)
        }
    }
}

fn ideal_value(i: &MonomialIdeal) -> Value {
    serde_json::to_value(IdealJson::from_ideal(i)).expect("serializable")
}

fn decompose(ctx: &Ctx, ideal: &str, canonical: bool) -> Outcome {
    let i = ctx.ideal(ideal)?;
    let ring = i.ring();
    if canonical {
        let d = canonical_primary_decomposition(&i)?;
        let mut text = format!("canonical primary decomposition of {}\n", i.render());
        for q in &d.components {
            let _ = writeln!(
                text,
                "  {}  radical {}  e = {}",
                q.ideal().render(),
                q.prime().render(ring),
                q.noether_exponent()
            );
        }
        ctx.emit(
            text,
            serde_json::to_value(DecompositionJson::new(ring, &d)).expect("serializable"),
        )
    } else {
        let d = standard_decomposition(&i)?;
        let mut text = format!("standard decomposition of {}\n", i.render());
        for t in &d.components {
            let _ = writeln!(
                text,
                "  {}  e = {}",
                t.ideal().render(),
                t.noether_exponent()
            );
        }
        ctx.emit(
            text,
            serde_json::to_value(DecompositionJson::new(ring, &d)).expect("serializable"),
        )
    }
}

fn noether(ctx: &Ctx, ideal: &str) -> Outcome {
    let i = ctx.ideal(ideal)?;
    let e = noether_exponent(&i);
    ctx.emit(
        format!("e = {e}\n"),
        json!({ "ideal": ideal_value(&i), "noether": e }),
    )
}

fn omega_cmd(ctx: &Ctx, ideal: &str, certificate: bool, verify: bool) -> Outcome {
    let i = ctx.ideal(ideal)?;
    let mut r = omega(&i);
    let mut text = format!(
        "ω = {}\nmethod: {}\n",
        r.value,
        r.method
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(" > ")
    );
    if certificate {
        match &r.certificate {
            Some(c) => {
                let _ = writeln!(text, "certificate ({} factors):", c.len());
                for f in &c.factors {
                    let _ = writeln!(text, "  {f}");
                }
            }
            None => text.push_str("certificate: none\n"),
        }
    }
    let mut verdict = None;
    if verify {
        let cert_ok = r.certificate.as_ref().map(verify_certificate);
        let noether_ok = !i.is_proper_nonzero() || brute_noether(&i)? == noether_exponent(&i);
        let ok = cert_ok.unwrap_or(true) && noether_ok;
        let cert_msg = match cert_ok {
            Some(true) => "certificate verified",
            Some(false) => "CERTIFICATE REJECTED",
            None => "no certificate to verify",
        };
        let _ = writeln!(
            text,
            "verify: {cert_msg}; Noether exponent {}",
            if noether_ok { "confirmed" } else { "MISMATCH" }
        );
        verdict = Some(ok);
    }
    if !certificate {
        r.certificate = None;
    }
    let mut value = serde_json::to_value(r.to_json()).expect("serializable");
    if let Some(ok) = verdict {
        value["verified"] = json!(ok);
    }
    let out = ctx.emit(text, value)?;
    match verdict {
        Some(false) => Err(Failure::Check(out)),
        _ => Ok(out),
    }
}

fn power(ctx: &Ctx, m: u32, ideal: &str) -> Outcome {
    let p = ctx.ideal(ideal)?.power(m)?;
    ctx.emit(format!("{}\n", render_ideal_text(&p)), ideal_value(&p))
}

fn verdict_value(v: &Verdict) -> Value {
    json!({ "holds": v.holds, "reason": v.reason })
}

fn omega_linear(ctx: &Ctx, ideal: &str, max_power: u32) -> Outcome {
    let i = ctx.ideal(ideal)?;
    let table = check_linearity_by_powers(&i, max_power)?;
    let criterion = if i.nvars() == 2 {
        Some(is_omega_linear_2d(&i)?)
    } else if is_primary_shape(&i) {
        Some(is_omega_linear_primary(&PrimaryComponent::new(i.clone())?))
    } else {
        None
    };
    let mut text = String::from("m\tω(I^m)\tm·ω(I)\n");
    for row in &table.rows {
        let _ = writeln!(text, "{}\t{}\t{}", row.m, row.omega, row.scaled);
    }
    let summary = match table.verdict {
        PowerVerdict::LinearUpTo { m_max } => format!("linear up to m = {m_max}"),
        PowerVerdict::NotLinear { first_m } => format!("not linear (fails at m = {first_m})"),
        PowerVerdict::Inconclusive { first_m } => {
            format!("inconclusive from m = {first_m} (bounds only)")
        }
    };
    let _ = writeln!(text, "verdict: {summary}");
    if let Some(c) = &criterion {
        let _ = writeln!(
            text,
            "criterion: {} ({})",
            if c.holds { "linear" } else { "not linear" },
            c.reason
        );
    }
    let value = json!({
        "ideal": ideal_value(&i),
        "table": table,
        "criterion": criterion.as_ref().map(verdict_value),
    });
    ctx.emit(text, value)
}

fn closure(ctx: &Ctx, ideal: &str) -> Outcome {
    let i = ctx.ideal(ideal)?;
    let c = integral_closure_2d(&i)?;
    let closed = is_integrally_closed_2d(&i)?;
    let text = format!(
        "closure: {}\nintegrally closed: {}\n",
        render_ideal_text(&c),
        if closed { "yes" } else { "no" }
    );
    ctx.emit(text, json!({ "ideal": ideal_value(&i), "closure": ideal_value(&c), "integrally_closed": closed }))
}

fn edge(ctx: &Ctx, path: &PathBuf, powers: u32) -> Outcome {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))?;
    let g = Graph::parse(&text)?;
    let i = edge_ideal(&g)?;
    let covers = minimal_vertex_covers(&g)?;
    let report = edge_power_linearity(&g, powers)?;
    let mut out = format!(
        "edge ideal: {}\nbipartite: {}\nminimal vertex covers ({}): {}\n",
        render_ideal_text(&i),
        if is_bipartite(&g) { "yes" } else { "no" },
        covers.len(),
        report
            .covers
            .iter()
            .map(|c| format!("{c:?}"))
            .collect::<Vec<_>>()
            .join(" "),
    );
    out.push_str("m\tω(I^m)\tm·r\tpower=∩P^m\twitness\tmaximal ideal associated\n");
    for row in &report.rows {
        let eq = match row.power_equals_intersection {
            Some(true) => "yes",
            Some(false) => "no",
            None => "-",
        };
        let _ = writeln!(
            out,
            "{}\t{}\t{}\t{eq}\t{}\t{}",
            row.m,
            row.omega,
            row.expected,
            if row.witness_verified { "ok" } else { "FAILED" },
            if row.maximal_ideal_associated {
                "yes"
            } else {
                "no"
            }
        );
    }
    let flagged = report.rows.iter().any(|r| !r.witness_verified);
    let value = json!({ "ideal": ideal_value(&i), "report": report });
    let out = ctx.emit(out, value)?;
    if flagged {
        Err(Failure::Check(out))
    } else {
        Ok(out)
    }
}

fn oracle_row(i: &MonomialIdeal, args: &OracleArgs) -> Result<(bool, String, Value), Failure> {
    let e = noether_exponent(i);
    let brute = brute_noether(i)?;
    let r = omega(i);
    let cert_ok = r
        .certificate
        .as_ref()
        .map(verify_certificate)
        .unwrap_or(true);
    let deg_cap = args.deg_cap.unwrap_or(i.max_degree() as u32 + 1);
    let t_max = args.t_max.unwrap_or(r.value.hi() as u32 + 1);
    let search = monomial_absorbing_lower_bound(i, t_max, deg_cap)?;
    let below = search.best <= r.value.hi();
    let ok = e == brute && cert_ok && below;
    let line = format!(
        "{}  e = {e} (brute {brute})  ω = {}  certificate {}  monomial search ≥ {}{}  {}",
        i.render(),
        r.value,
        if cert_ok { "ok" } else { "REJECTED" },
        search.best,
        if search.exhausted { " (exhausted)" } else { "" },
        if ok { "ok" } else { "MISMATCH" },
    );
    let omega_json = match r.value {
        OmegaValue::Exact(v) => json!({ "exact": v }),
        OmegaValue::Bounds { lo, hi } => json!({ "lo": lo, "hi": hi }),
    };
    let value = json!({
        "ideal": ideal_value(i),
        "noether": e,
        "brute_noether": brute,
        "omega": omega_json,
        "certificate_verified": cert_ok,
        "monomial_lower_bound": search.best,
        "monomial_search_exhausted": search.exhausted,
        "consistent": ok,
    });
    Ok((ok, line, value))
}

fn oracle(ctx: &Ctx, args: &OracleArgs) -> Outcome {
    let ideals = match (&args.ideal, args.random) {
        (Some(text), _) => vec![ctx.ideal(text)?],
        (None, Some(n)) => ideal_corpus(3, 4, n, ctx.seed),
        (None, None) => unreachable!("clap requires one of them"),
    };
    if let Some(i) = ideals.iter().find(|i| !i.is_proper_nonzero()) {
        return Err(Error::Precondition(format!(
            "oracle checks need a proper nonzero ideal, got {}",
            i.render()
        ))
        .into());
    }
    let (mut text, mut rows, mut all_ok) = (String::new(), Vec::new(), true);
    for i in &ideals {
        let (ok, line, value) = oracle_row(i, args)?;
        all_ok &= ok;
        text.push_str(&line);
        text.push('\n');
        rows.push(value);
    }
    let out = ctx.emit(text, json!({ "rows": rows, "consistent": all_ok }))?;
    if all_ok {
        Ok(out)
    } else {
        Err(Failure::Check(out))
    }
}

fn run(cli: &Cli) -> Outcome {
    let ring = cli
        .vars
        .as_ref()
        .map(|v| Ring::new(v.as_slice()))
        .transpose()?;
    let ctx = Ctx {
        ring,
        json: cli.json,
        seed: cli.seed,
    };
    match &cli.command {
        Command::Decompose {
            canonical, ideal, ..
        } => decompose(&ctx, ideal, *canonical),
        Command::Noether { ideal } => noether(&ctx, ideal),
        Command::Omega {
            certificate,
            verify,
            ideal,
        } => omega_cmd(&ctx, ideal, *certificate, *verify),
        Command::Power { m, ideal } => power(&ctx, *m, ideal),
        Command::OmegaLinear { max_power, ideal } => omega_linear(&ctx, ideal, *max_power),
        Command::Closure { ideal } => closure(&ctx, ideal),
        Command::EdgeIdeal { graph, powers } => edge(&ctx, graph, *powers),
        Command::Oracle(args) => oracle(&ctx, args),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(out) => {
            print!("{out}");
            if cli.json {
                println!();
            }
            ExitCode::SUCCESS
        }
        Err(Failure::Check(out)) => {
            print!("{out}");
            if cli.json {
                println!();
            }
            eprintln!("error: a consistency check failed");
            ExitCode::from(1)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Core(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_parse_error() { 2 } else { 3 })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn json_ideal_matches_core_rendering() {
        use absorbing_core::json::ideal_to_json;
        let i = parse_ideal("x*y", None).unwrap();
        assert_eq!(
            serde_json::to_string(&ideal_value(&i)).unwrap(),
            ideal_to_json(&i)
        );
    }
}
