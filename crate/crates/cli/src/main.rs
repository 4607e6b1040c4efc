//! `mdeg`: classify multidegrees, build the automorphisms behind them, and
//! re-run the arithmetic certificates.
//!
//! Exit codes: 0 tame (or success), 1 not tame (or a failed check),
//! 2 unknown, 3 usage or side-condition error.

use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mdeg_core::autos::{
    composed_nagata_family, composed_nagata_multidegree, f_dk, f_dk_multidegree,
    nagata_triangular_family, sigma_form, tame_witness, transposition_t,
};
use mdeg_core::classify::{
    classify_tame, enumerate_wild, semigroup_member, wild_family, Classification,
    ClassificationDocument, Construction, TameStatus,
};
use mdeg_core::lnd::{nagata_exp, nagata_n, ExpBudget};
use mdeg_core::polyalg::sigma;
use mdeg_core::reduction::{even_family_certificate, CaseReport, ReductionCertificate};
use mdeg_core::{Multidegree, PolyMap};
use serde::Serialize;

const EXIT_TAME: u8 = 0;
const EXIT_NOT_TAME: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;
const EXIT_USAGE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "mdeg",
    version,
    about = "Multidegrees of polynomial automorphisms of C^3"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether (d1,d2,d3) is the multidegree of a tame automorphism.
    Classify {
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d1: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d2: u32,
        #[arg(value_parser = clap::value_parser!(u32).range(1..))]
        d3: u32,
    },
    /// Build an automorphism and print its coordinates and multidegree.
    Construct {
        #[command(subcommand)]
        what: Construct,
        /// Compose with the inverse and check the result is the identity.
        #[arg(long, global = true)]
        verify: bool,
    },
    /// List wild multidegrees (d, d2, d3) for a fixed d >= 3.
    WildEnum {
        d: u32,
        #[arg(long, default_value_t = 5)]
        count: usize,
        /// Attach the automorphism realising each triple.
        #[arg(long)]
        with_maps: bool,
    },
    /// Evaluate the reduction inequalities for (d, d+k(d+1), d+2k(d+1)).
    CheckReductions { d: u32, k: u32 },
    /// Run one of the built-in verification suites.
    Verify {
        suite: Suite,
        #[arg(long, default_value_t = 5)]
        kmax: u32,
        #[arg(long, default_value_t = 14)]
        dmax: u32,
        #[arg(long, default_value_t = 4)]
        lmax: u32,
        /// Restrict the reductions suite to one d.
        #[arg(long)]
        d: Option<u32>,
        /// Restrict the reductions suite to one k.
        #[arg(long)]
        k: Option<u32>,
    },
}

#[derive(Subcommand)]
enum Construct {
    /// N_k = exp(σ^k D).
    Nagata { k: u32 },
    /// F_{d,k} = T ∘ N_k ∘ H_d.
    Fdk { d: u32, k: u32 },
    /// (T∘N_k) ∘ (T∘N_l).
    Lemma1 { l: u32, k: u32 },
    /// (T∘N_k) ∘ H_r.
    Lemma2 { r: u32, k: u32 },
    /// A tame map of multidegree (d1,d2,d3) when d3 ∈ d1N + d2N.
    Witness { d1: u32, d2: u32, d3: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    ExpVsClosedForm,
    Identities,
    Reductions,
    Gcds,
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
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
    let result = match cli.command {
        Command::Classify { d1, d2, d3 } => run_classify(d1, d2, d3, cli.format),
        Command::Construct { what, verify } => run_construct(what, verify, cli.format),
        Command::WildEnum {
            d,
            count,
            with_maps,
        } => run_wild_enum(d, count, with_maps, cli.format),
        Command::CheckReductions { d, k } => run_check_reductions(d, k, cli.format),
        Command::Verify {
            suite,
            kmax,
            dmax,
            lmax,
            d,
            k,
        } => run_verify(
            suite,
            Ranges {
                kmax,
                dmax,
                lmax,
                d,
                k,
            },
            cli.format,
        ),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}

fn emit<T: Serialize>(format: Format, doc: &T, text: impl FnOnce() -> String) {
    let body = match format {
        Format::Json => serde_json::to_string_pretty(doc).expect("serializable") + "\n",
        Format::Text => text(),
    };
    // a closed pipe is not an error worth reporting
    let _ = std::io::stdout().lock().write_all(body.as_bytes());
}

fn render_classification(c: &Classification, doc: &ClassificationDocument) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "triple: {}", c.triple);
    let _ = writeln!(out, "status: {}", c.status);
    let _ = writeln!(out, "rule: {} ({})", doc.rule_id, doc.rule);
    let _ = writeln!(out, "certificate: {}", c.certificate.kind());
    if let Some(map) = c.certificate.map() {
        for (v, p) in ["f1", "f2", "f3"].iter().zip(map.coords()) {
            let _ = writeln!(out, "  {v} = {p}");
        }
        if let Some(word) = map.factorization() {
            let word: Vec<String> = word.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  factorization: {}", word.join(" ∘ "));
        }
    }
    if let Some(reports) = c.certificate.reports() {
        out.push_str(&render_reports(reports));
    }
    let realizable = match &doc.aut_realizable.construction {
        Some(how) => format!("yes, {}", describe(how)),
        None => "unknown".to_string(),
    };
    let _ = writeln!(out, "realized by an automorphism: {realizable}");
    out
}

fn describe(c: &Construction) -> String {
    match c {
        Construction::TameWitness => "tame witness above".to_string(),
        Construction::TameByCitation => "tame, by the cited statement".to_string(),
        Construction::Family(p) => format!("family {p}"),
        Construction::ComposedNagata { l, k } => format!("(T∘N_{k}) ∘ (T∘N_{l})"),
        Construction::NagataTriangular { r, k } => format!("(T∘N_{k}) ∘ H_{r}"),
    }
}

fn render_reports(reports: &[CaseReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let _ = writeln!(out, "  {:?} coordinate: {:?}", r.coordinate, r.conclusion);
        for c in &r.inequalities {
            let _ = writeln!(out, "    {c}");
        }
    }
    out
}

fn run_classify(d1: u32, d2: u32, d3: u32, format: Format) -> Result<u8, Failure> {
    let given = Multidegree::new(d1, d2, d3)?;
    let t = given.sorted();
    if t != given {
        eprintln!("note: input {given} sorted to {t}");
    }
    let c = classify_tame(&t)?;
    let doc = c.to_document();
    emit(format, &doc, || render_classification(&c, &doc));
    Ok(match c.status {
        TameStatus::Tame => EXIT_TAME,
        TameStatus::NotTame => EXIT_NOT_TAME,
        TameStatus::Unknown => EXIT_UNKNOWN,
    })
}

#[derive(Serialize)]
struct ConstructionDocument {
    construction: String,
    coords: [String; 3],
    factorization: Option<Vec<String>>,
    multidegree: Multidegree,
    #[serde(skip_serializing_if = "Option::is_none")]
    inverse_verified: Option<bool>,
}

fn run_construct(what: Construct, verify: bool, format: Format) -> Result<u8, Failure> {
    let (name, map) = match what {
        Construct::Nagata { k } => {
            require(k >= 1, "N_k requires k >= 1")?;
            (format!("nagata k={k}"), nagata_n(k))
        }
        Construct::Fdk { d, k } => (format!("fdk d={d} k={k}"), f_dk(d, k)?),
        Construct::Lemma1 { l, k } => {
            (format!("lemma1 l={l} k={k}"), composed_nagata_family(l, k)?)
        }
        Construct::Lemma2 { r, k } => (
            format!("lemma2 r={r} k={k}"),
            nagata_triangular_family(r, k)?,
        ),
        Construct::Witness { d1, d2, d3 } => {
            require(
                d1 >= 1 && d1 <= d2 && d2 <= d3,
                "witness requires 1 <= d1 <= d2 <= d3",
            )?;
            let w = semigroup_member(d1 as u64, d2 as u64, d3 as u64)
                .filter(|w| w.a + w.b > 0)
                .ok_or_else(|| {
                    Failure(format!(
                        "witness requires d3 ∈ d1N + d2N; {d3} ∉ {d1}N + {d2}N"
                    ))
                })?;
            let (a, b) = (u32::try_from(w.a)?, u32::try_from(w.b)?);
            (
                format!("witness a={a} b={b}"),
                tame_witness(d1, d2, d3, a, b)?,
            )
        }
    };
    let inverse_verified = if verify {
        Some(map.verify_inverse()?)
    } else {
        None
    };
    let map_doc = map.to_document();
    let doc = ConstructionDocument {
        construction: name,
        coords: map_doc.coords,
        factorization: map_doc.factorization,
        multidegree: map.multidegree()?,
        inverse_verified,
    };
    emit(format, &doc, || {
        let mut out = String::new();
        let _ = writeln!(out, "construction: {}", doc.construction);
        for (v, p) in ["f1", "f2", "f3"].iter().zip(&doc.coords) {
            let _ = writeln!(out, "{v} = {p}");
        }
        if let Some(word) = &doc.factorization {
            let _ = writeln!(out, "factorization: {}", word.join(" ∘ "));
        }
        let _ = writeln!(out, "multidegree: {}", doc.multidegree);
        if let Some(ok) = doc.inverse_verified {
            let _ = writeln!(
                out,
                "F ∘ F⁻¹ = id: {}",
                if ok { "verified" } else { "FAILED" }
            );
        }
        out
    });
    Ok(if inverse_verified == Some(false) {
        EXIT_NOT_TAME
    } else {
        0
    })
}

fn require(cond: bool, msg: &str) -> Result<(), Failure> {
    if cond {
        Ok(())
    } else {
        Err(Failure(msg.to_string()))
    }
}

fn run_wild_enum(d: u32, count: usize, with_maps: bool, format: Format) -> Result<u8, Failure> {
    let mut docs = Vec::with_capacity(count);
    for (_, params) in enumerate_wild(d, count)? {
        let (_, c) = wild_family(params)?;
        let mut doc = c.to_document();
        if !with_maps {
            doc.maps = None;
        }
        docs.push((params, doc));
    }
    let list: Vec<&ClassificationDocument> = docs.iter().map(|(_, d)| d).collect();
    emit(format, &list, || {
        let mut out = String::new();
        for (params, doc) in &docs {
            let _ = writeln!(
                out,
                "{} {} {} {params}",
                doc.triple, doc.status, doc.rule_id
            );
            if let Some(maps) = &doc.maps {
                for (v, p) in ["f1", "f2", "f3"].iter().zip(maps) {
                    let _ = writeln!(out, "  {v} = {p}");
                }
            }
        }
        out
    });
    Ok(0)
}

fn run_check_reductions(d: u32, k: u32, format: Format) -> Result<u8, Failure> {
    let cert = even_family_certificate(d, k)?;
    emit(format, &cert, || render_certificate(&cert));
    Ok(if cert.excludes_tame { 0 } else { EXIT_NOT_TAME })
}

fn render_certificate(cert: &ReductionCertificate) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "triple: {}", cert.triple);
    out.push_str(&render_reports(&cert.reports));
    let t = cert.type_iii;
    let _ = writeln!(
        out,
        "  type III: 2|d2 {}, (3|d1 or 2d3 = 3d2) {}, excluded {}",
        t.condition1, t.condition2, t.excluded
    );
    let _ = writeln!(out, "excludes tame: {}", cert.excludes_tame);
    out
}

struct Ranges {
    kmax: u32,
    dmax: u32,
    lmax: u32,
    d: Option<u32>,
    k: Option<u32>,
}

#[derive(Serialize)]
struct CaseResult {
    case: String,
    passed: bool,
    detail: String,
}

#[derive(Serialize)]
struct SuiteReport {
    suite: &'static str,
    cases: Vec<CaseResult>,
    passed: usize,
    total: usize,
}

fn case(case: String, passed: bool, detail: impl Into<String>) -> CaseResult {
    CaseResult {
        case,
        passed,
        detail: detail.into(),
    }
}

fn run_verify(suite: Suite, r: Ranges, format: Format) -> Result<u8, Failure> {
    require(
        r.kmax >= 1 && r.dmax >= 1 && r.lmax >= 1,
        "ranges must be positive",
    )?;
    require(
        r.kmax <= 50 && r.dmax <= 200 && r.lmax <= 20,
        "ranges are capped at kmax 50, dmax 200, lmax 20",
    )?;
    let (name, cases) = match suite {
        Suite::ExpVsClosedForm => ("exp-vs-closed-form", verify_exp(&r)?),
        Suite::Identities => ("identities", verify_identities(&r)?),
        Suite::Reductions => ("reductions", verify_reductions(&r)?),
        Suite::Gcds => ("gcds", verify_gcds(&r)),
    };
    let passed = cases.iter().filter(|c| c.passed).count();
    let report = SuiteReport {
        suite: name,
        total: cases.len(),
        passed,
        cases,
    };
    emit(format, &report, || {
        let mut out = String::new();
        for c in &report.cases {
            let tag = if c.passed { "ok  " } else { "FAIL" };
            let _ = writeln!(out, "{tag} {}: {}", c.case, c.detail);
        }
        let _ = writeln!(
            out,
            "{}: {}/{} pass",
            report.suite, report.passed, report.total
        );
        out
    });
    Ok(if passed == report.total {
        0
    } else {
        EXIT_NOT_TAME
    })
}

fn verify_exp(r: &Ranges) -> Result<Vec<CaseResult>, Failure> {
    (1..=r.kmax)
        .map(|k| {
            let series = nagata_exp(k, ExpBudget::default())?;
            let equal = series == nagata_n(k);
            Ok(case(
                format!("k={k}"),
                equal,
                if equal {
                    "exp(σ^k D) = N_k"
                } else {
                    "differs"
                },
            ))
        })
        .collect()
}

fn verify_identities(r: &Ranges) -> Result<Vec<CaseResult>, Failure> {
    let mut out = Vec::new();
    let map_case =
        |name: String, map: &PolyMap, want: Multidegree| -> Result<CaseResult, Failure> {
            let got = map.multidegree()?;
            let inverts = map.verify_inverse()?;
            Ok(case(
                name,
                got == want && inverts,
                format!("mdeg {got} (expected {want}), F ∘ F⁻¹ = id {inverts}"),
            ))
        };
    for d in 1..=r.dmax {
        for k in 1..=r.kmax {
            out.push(map_case(
                format!("F_{{{d},{k}}}"),
                &f_dk(d, k)?,
                f_dk_multidegree(d, k)?,
            )?);
        }
    }
    for l in 1..=r.lmax {
        let inner = transposition_t().compose(&nagata_n(l));
        let holds = sigma_form(&inner) == sigma();
        out.push(case(
            format!("g^2+fh for T∘N_{l}"),
            holds,
            if holds { "= y^2 + xz" } else { "differs" },
        ));
        for k in 1..=r.kmax.min(r.lmax) {
            out.push(map_case(
                format!("composed l={l} k={k}"),
                &composed_nagata_family(l, k)?,
                composed_nagata_multidegree(l, k)?,
            )?);
        }
    }
    Ok(out)
}

fn verify_reductions(r: &Ranges) -> Result<Vec<CaseResult>, Failure> {
    let pairs: Vec<(u32, u32)> = match (r.d, r.k) {
        (Some(d), Some(k)) => vec![(d, k)],
        (d, k) => {
            let ds: Vec<u32> = match d {
                Some(d) => vec![d],
                None => (6..=r.dmax).step_by(2).collect(),
            };
            let ks: Vec<u32> = match k {
                Some(k) => vec![k],
                None => (1..=r.kmax).collect(),
            };
            ds.iter()
                .flat_map(|&d| ks.iter().map(move |&k| (d, k)))
                .filter(|&(d, k)| gcd(d, k) == 1)
                .collect()
        }
    };
    pairs
        .into_iter()
        .map(|(d, k)| {
            let cert = even_family_certificate(d, k)?;
            let conclusions: Vec<String> = cert
                .reports
                .iter()
                .map(|rep| format!("{:?}: {:?}", rep.coordinate, rep.conclusion))
                .collect();
            Ok(case(
                format!("d={d} k={k} {}", cert.triple),
                cert.excludes_tame,
                format!(
                    "{}; type III excluded {}",
                    conclusions.join(", "),
                    cert.type_iii.excluded
                ),
            ))
        })
        .collect()
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn verify_gcds(r: &Ranges) -> Vec<CaseResult> {
    let mut out = Vec::new();
    for d in (6..=r.dmax).step_by(2) {
        for k in (1..=r.kmax).filter(|&k| gcd(d, k) == 1) {
            let (d, k) = (d as u64, k as u64);
            let (d1, d2, d3) = (d, d + k * (d + 1), d + 2 * k * (d + 1));
            let g = |a: u64, b: u64| gcd(a as u32, b as u32) as u64;
            let facts = [
                ("gcd(d1,d2)=1", g(d1, d2) == 1),
                ("gcd(d2,d3)=1", g(d2, d3) == 1),
                ("gcd(d1,d3)=2", g(d1, d3) == 2),
                ("gcd(d,2k)=2", g(d, 2 * k) == 2),
            ];
            let failed: Vec<&str> = facts
                .iter()
                .filter(|(_, ok)| !ok)
                .map(|(n, _)| *n)
                .collect();
            let detail = if failed.is_empty() {
                facts.iter().map(|(n, _)| *n).collect::<Vec<_>>().join(", ")
            } else {
                format!("violated: {}", failed.join(", "))
            };
            out.push(case(
                format!("d={d} k={k} ({d1},{d2},{d3})"),
                failed.is_empty(),
                detail,
            ));
        }
    }
    out
}
