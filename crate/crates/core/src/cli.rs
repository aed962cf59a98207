//! The `hodge-cousin` command line: one verb per operation, JSON reports.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::crgeom::{bicr_from_hodge, induced_cr_image_check};
use crate::doc::{
    elem, int_rows, k_rows, parse_document, q_rows, to_text, CousinDoc, Document, ParseError, PeriodDoc,
    StructureDoc,
};
use crate::error::Error;
use crate::exactfield::FieldError;
use crate::hodge::{is_cousin, weight0_quotient_space, HodgeStructure, Violation};
use crate::linalg::QMatrix;
use crate::metric::{
    geodesic_action, hermitian_extension, induced_cr_hermitian_on, irrational_action_witness, reconstruct,
    AbelianCousinData, CRHermitian,
};
use crate::polarization::{decompose, validate_polarization, PolarizationViolation};
use crate::tori::{
    canonical_embedding, character_space, embedding_cr_linearity, isogeny_check, jacobi_group, kopfermann,
    IsogenyVerdict, PeriodData,
};

pub const FORMAT_VERSION: &str = "1";

#[derive(Debug, Clone, Parser)]
#[command(name = "hodge-cousin", version, about = "Exact computations with Hodge structures and Cousin groups")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Seed for the randomized searches.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// JSON output (the only format).
    #[arg(long, global = true)]
    pub json: bool,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Check the Hodge axioms.
    Validate { input: PathBuf },
    /// Check the polarization stored in the document.
    PolarizeCheck { input: PathBuf },
    /// Decide whether the Jacobi group is Cousin.
    CousinCheck { input: PathBuf },
    /// Period data of the Jacobi group.
    Jacobi { input: PathBuf },
    /// Bi-CR structure of the Abel torus (weight 2).
    Abel { input: PathBuf },
    /// Compare the canonical embedding with the projected lattice.
    EmbedCheck { input: PathBuf },
    /// Character space of period data or of a Jacobi group.
    Characters { input: PathBuf },
    /// Kopfermann splitting of period data or of a Jacobi group.
    Kopfermann { input: PathBuf },
    /// Search for an isogeny between two structures.
    Isogeny { first: PathBuf, second: PathBuf },
    /// Split a polarized structure into orthogonal summands.
    Decompose { input: PathBuf },
    /// Hermitian extension of a polarized weight-2 structure.
    MetricExtend { input: PathBuf },
    /// Recover the structure and polarization from abelian Cousin data.
    Reconstruct { input: PathBuf },
    /// Geodesic actions of lattice vectors under the induced metric.
    Actions { input: PathBuf },
}

impl Command {
    pub fn verb(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::PolarizeCheck { .. } => "polarize-check",
            Command::CousinCheck { .. } => "cousin-check",
            Command::Jacobi { .. } => "jacobi",
            Command::Abel { .. } => "abel",
            Command::EmbedCheck { .. } => "embed-check",
            Command::Characters { .. } => "characters",
            Command::Kopfermann { .. } => "kopfermann",
            Command::Isogeny { .. } => "isogeny",
            Command::Decompose { .. } => "decompose",
            Command::MetricExtend { .. } => "metric-extend",
            Command::Reconstruct { .. } => "reconstruct",
            Command::Actions { .. } => "actions",
        }
    }

    pub fn inputs(&self) -> Vec<&Path> {
        match self {
            Command::Isogeny { first, second } => vec![first, second],
            Command::Validate { input }
            | Command::PolarizeCheck { input }
            | Command::CousinCheck { input }
            | Command::Jacobi { input }
            | Command::Abel { input }
            | Command::EmbedCheck { input }
            | Command::Characters { input }
            | Command::Kopfermann { input }
            | Command::Decompose { input }
            | Command::MetricExtend { input }
            | Command::Reconstruct { input }
            | Command::Actions { input } => vec![input],
        }
    }

    fn uses_seed(&self) -> bool {
        matches!(self, Command::Isogeny { .. } | Command::Decompose { .. })
    }
}

#[derive(Debug, Clone, Serialize)]
struct InputDigest {
    path: String,
    sha256: String,
}

#[derive(Debug, Clone, Serialize)]
struct Report {
    format_version: &'static str,
    verb: &'static str,
    inputs: Vec<InputDigest>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    result: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<Value>,
}

/// Exit status and report text.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub report: String,
}

struct Failure {
    code: i32,
    error: Value,
}

type Step<T> = std::result::Result<T, Failure>;

fn parse_failure(e: &ParseError) -> Failure {
    Failure {
        code: 2,
        error: json!({
            "kind": "parse",
            "line": e.line,
            "column": e.column,
            "field": e.field,
            "message": e.message,
        }),
    }
}

fn witness(v: &[crate::exactfield::FieldElem]) -> Value {
    json!(v.iter().map(elem).collect::<Vec<_>>())
}

fn violation_value(v: &Violation) -> Value {
    let mut out = json!({ "axiom": v.axiom(), "message": v.to_string() });
    match v {
        Violation::Conjugation { p, q, witness: w } => {
            out["piece"] = json!([p, q]);
            out["witness"] = witness(w);
        }
        Violation::Splitting { witness: Some(w), .. } => out["witness"] = witness(w),
        Violation::Index { p, q, .. } => out["piece"] = json!([p, q]),
        Violation::Splitting { witness: None, .. } => {}
    }
    out
}

fn polarization_value(v: &PolarizationViolation) -> Value {
    let mut out = json!({ "condition": v.condition(), "message": v.to_string() });
    match v {
        PolarizationViolation::Orthogonality { first, second, value, .. } => {
            out["pieces"] = json!([[first.0, first.1], [second.0, second.1]]);
            out["value"] = json!(elem(value));
        }
        PolarizationViolation::Positivity { p, q, minor, value } => {
            out["piece"] = json!([p, q]);
            out["minor"] = json!(minor);
            out["value"] = json!(elem(value));
        }
        PolarizationViolation::Symmetry { i, j } => out["entry"] = json!([i, j]),
        PolarizationViolation::Shape { .. } => {}
    }
    out
}

fn domain_failure(e: Error) -> Failure {
    let (code, error) = match &e {
        Error::Shape(msg) => (2, json!({ "kind": "malformed", "message": msg })),
        Error::Field(FieldError::BadParameter(_)) => (2, json!({ "kind": "malformed", "message": e.to_string() })),
        Error::InvalidStructure(v) => {
            let mut out = violation_value(v);
            out["kind"] = json!("invalid_structure");
            (1, out)
        }
        Error::InvalidPolarization(v) => {
            let mut out = polarization_value(v);
            out["kind"] = json!("invalid_polarization");
            (1, out)
        }
        _ => (1, json!({ "kind": "domain", "message": e.to_string() })),
    };
    Failure { code, error }
}

trait OrFail<T> {
    fn or_fail(self) -> Step<T>;
}

impl<T> OrFail<T> for crate::error::Result<T> {
    fn or_fail(self) -> Step<T> {
        self.map_err(domain_failure)
    }
}

fn structure_of(doc: &Document) -> Step<(HodgeStructure, Option<QMatrix>)> {
    let Document::Structure(s) = doc else {
        return Err(Failure {
            code: 2,
            error: json!({ "kind": "malformed", "message": "expected a structure document" }),
        });
    };
    let h = s.structure().or_fail()?;
    h.validate().map_err(|v| domain_failure(Error::InvalidStructure(v)))?;
    let q = s.polarization().or_fail()?;
    Ok((h, q))
}

fn polarized_of(doc: &Document) -> Step<(HodgeStructure, QMatrix)> {
    let (h, q) = structure_of(doc)?;
    let q = q.ok_or_else(|| Failure {
        code: 1,
        error: json!({ "kind": "domain", "message": "document carries no polarization" }),
    })?;
    Ok((h, q))
}

fn periods_of(doc: &Document) -> Step<PeriodData> {
    match doc {
        Document::Periods(p) => p.periods().or_fail(),
        Document::Cousin(c) => c.periods.periods().or_fail(),
        Document::Structure(_) => {
            let (h, _) = structure_of(doc)?;
            jacobi_group(&h).or_fail()
        }
    }
}

fn bigints(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn actions_value(cr: &CRHermitian) -> Value {
    let g = cr.g();
    let r = g.rows();
    let unit = |ks: &[usize]| -> Vec<BigInt> { (0..r).map(|i| BigInt::from(u8::from(ks.contains(&i)))).collect() };
    let mut probes: Vec<Vec<BigInt>> = (0..r).map(|j| unit(&[j])).collect();
    for j in 0..r {
        for k in j + 1..r {
            probes.push(unit(&[j, k]));
        }
    }
    let actions: Vec<Value> = probes
        .iter()
        .map(|v| json!({ "vector": bigints(v), "action": elem(&geodesic_action(g, v)) }))
        .collect();
    json!({
        "polarized": irrational_action_witness(g).is_none(),
        "metric": k_rows(g),
        "actions": actions,
    })
}

fn dispatch(cmd: &Command, docs: &[Document], seed: u64) -> Step<Value> {
    let doc = &docs[0];
    match cmd {
        Command::Validate { .. } => {
            let (h, _) = structure_of(doc)?;
            let numbers: Vec<Value> = h
                .hodge_numbers()
                .into_iter()
                .map(|((p, q), d)| json!({ "p": p, "q": q, "dim": d }))
                .collect();
            Ok(json!({ "valid": true, "weight": h.weight(), "rank": h.rank(), "m": h.m(), "hodge_numbers": numbers }))
        }
        Command::PolarizeCheck { .. } => {
            let (h, q) = polarized_of(doc)?;
            Ok(match validate_polarization(&h, &q) {
                Ok(()) => json!({ "polarized": true }),
                Err(v) => json!({ "polarized": false, "violation": polarization_value(&v) }),
            })
        }
        Command::CousinCheck { .. } => {
            let (h, _) = structure_of(doc)?;
            Ok(json!({ "is_cousin": is_cousin(&h), "weight0_quotient_dim": weight0_quotient_space(&h).dim() }))
        }
        Command::Jacobi { .. } => {
            let (h, _) = structure_of(doc)?;
            let p = jacobi_group(&h).or_fail()?;
            Ok(json!({ "periods": PeriodDoc::new(&p), "character_space_dim": character_space(&p).dim() }))
        }
        Command::Abel { .. } => {
            let (h, _) = structure_of(doc)?;
            let b = bicr_from_hodge(&h).or_fail()?;
            Ok(json!({
                "h10": k_rows(b.h10().basis()),
                "f10": k_rows(b.f10().basis()),
                "h_real_dim": b.h_real().dim(),
                "f_real_dim": b.f_real().dim(),
            }))
        }
        Command::EmbedCheck { .. } => {
            let (h, _) = structure_of(doc)?;
            let emb = canonical_embedding(&h).or_fail()?;
            let lin = embedding_cr_linearity(&h).or_fail()?;
            Ok(json!({
                "gamma_matches_projection": emb.matches_projection(),
                "cr_linear": lin.linear,
                "induced_cr_image": induced_cr_image_check(&h).or_fail()?,
                "gamma": k_rows(&emb.gamma),
            }))
        }
        Command::Characters { .. } => {
            let p = periods_of(doc)?;
            let c = character_space(&p);
            let functionals: Vec<Vec<_>> = c.functionals.iter().map(|f| f.iter().map(elem).collect()).collect();
            Ok(json!({ "dim": c.dim(), "functionals": functionals, "values": q_rows(&c.values) }))
        }
        Command::Kopfermann { .. } => {
            let p = periods_of(doc)?;
            let k = kopfermann(&p).or_fail()?;
            Ok(json!({
                "linear_dim": k.linear_dim,
                "torus_rank": k.torus_rank,
                "cousin_part": PeriodDoc::new(&k.cousin_part),
            }))
        }
        Command::Isogeny { .. } => {
            let (h1, _) = structure_of(doc)?;
            let (h2, _) = structure_of(&docs[1])?;
            let rep = isogeny_check(&h1, &h2, seed).or_fail()?;
            let verdict = match rep.verdict {
                IsogenyVerdict::Isogenous => "isogenous",
                IsogenyVerdict::NotIsogenous => "not_isogenous",
                IsogenyVerdict::Inconclusive => "inconclusive",
            };
            Ok(json!({
                "verdict": verdict,
                "hom_dim": rep.hom_dim,
                "kernel_order": rep.kernel_order.map(|k| k.to_string()),
                "smith_divisors": bigints(&rep.smith_divisors),
                "witness": rep.witness.as_ref().map(int_rows),
            }))
        }
        Command::Decompose { .. } => {
            let (h, q) = polarized_of(doc)?;
            let d = decompose(&h, &q, seed).or_fail()?;
            let summands: Vec<Value> = d
                .summands
                .iter()
                .map(|s| {
                    json!({
                        "lattice": int_rows(&s.lattice),
                        "structure": StructureDoc::new(&s.structure, Some(&s.polarization)),
                        "split_exhausted": s.split_exhausted,
                        "certified_simple": s.certified_simple,
                        "end_dim": s.end_dim,
                    })
                })
                .collect();
            Ok(json!({ "count": summands.len(), "summands": summands }))
        }
        Command::MetricExtend { .. } => {
            let (h, q) = polarized_of(doc)?;
            let ext = hermitian_extension(&h, &q).or_fail()?;
            let document = CousinDoc::new(&ext.periods, &ext.h);
            let verdict = AbelianCousinData::try_from(ext);
            Ok(json!({
                "document": document,
                "positive_definite": true,
                "abelian_cousin": verdict.is_ok(),
                "rejection": verdict.err().map(|e| e.to_string()),
            }))
        }
        Command::Reconstruct { .. } => {
            let Document::Cousin(c) = doc else {
                return Err(Failure {
                    code: 2,
                    error: json!({ "kind": "malformed", "message": "expected an abelian Cousin document" }),
                });
            };
            let data = c.data().or_fail()?;
            let (h, q) = reconstruct(&data).or_fail()?;
            Ok(json!({ "structure": StructureDoc::new(&h, Some(&q)), "is_cousin": is_cousin(&h) }))
        }
        Command::Actions { .. } => {
            let cr = match doc {
                Document::Cousin(c) => {
                    let (p, form) = c.parts().or_fail()?;
                    induced_cr_hermitian_on(&form, &p.realified()).or_fail()?
                }
                _ => {
                    let (h, q) = polarized_of(doc)?;
                    hermitian_extension(&h, &q).or_fail()?.induced().or_fail()?
                }
            };
            Ok(actions_value(&cr))
        }
    }
}

fn load(path: &Path) -> Step<(InputDigest, Document)> {
    let bytes = fs::read(path).map_err(|e| Failure {
        code: 2,
        error: json!({ "kind": "io", "path": path.display().to_string(), "message": e.to_string() }),
    })?;
    let digest = InputDigest {
        path: path.display().to_string(),
        sha256: format!("{:x}", Sha256::digest(&bytes)),
    };
    let text = String::from_utf8(bytes).map_err(|e| Failure {
        code: 2,
        error: json!({ "kind": "parse", "line": 1, "column": 1, "field": ".", "message": e.to_string() }),
    })?;
    let doc = parse_document(&text).map_err(|e| parse_failure(&e))?;
    Ok((digest, doc))
}

/// Runs one command and renders its report; nothing is written to disk.
pub fn execute(cli: &Cli) -> Outcome {
    let cmd = &cli.command;
    let mut inputs = Vec::new();
    let mut docs = Vec::new();
    let mut failure = None;
    for path in cmd.inputs() {
        match load(path) {
            Ok((d, doc)) => {
                inputs.push(d);
                docs.push(doc);
            }
            Err(f) => {
                inputs.push(InputDigest { path: path.display().to_string(), sha256: String::new() });
                failure.get_or_insert(f);
            }
        }
    }
    let outcome = match failure {
        Some(f) => Err(f),
        None => dispatch(cmd, &docs, cli.seed),
    };
    let (code, result, error) = match outcome {
        Ok(v) => (0, Some(v), None),
        Err(f) => (f.code, None, Some(f.error)),
    };
    let report = Report {
        format_version: FORMAT_VERSION,
        verb: cmd.verb(),
        inputs,
        seed: cmd.uses_seed().then_some(cli.seed),
        result,
        error,
    };
    Outcome { code, report: to_text(&report) }
}

/// [`execute`], then writes the report to `--out` or standard output.
pub fn run(cli: &Cli) -> i32 {
    let outcome = execute(cli);
    match &cli.out {
        Some(path) => {
            if let Err(e) = fs::write(path, &outcome.report) {
                eprintln!("cannot write {}: {e}", path.display());
                return 2;
            }
        }
        None => print!("{}", outcome.report),
    }
    outcome.code
}
