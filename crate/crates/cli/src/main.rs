//! Command-line front door: JSON documents in, verdict reports and model
//! dumps out, plus deterministic SVG rendering of 2-atom models.
//!
//! Exit codes: 0 success, 1 semantic failure (confusion, no respect, sure
//! loss; the verdict is still printed), 2 input error.

mod document;
mod render;

use clap::{Parser, Subcommand, ValueEnum};
use document::{Document, Resolved};
use reckon::engine::{
    classify, confusion_statements, is_coherent_over_background, is_deductively_closable,
    maximal_completion, natural_extension, BackgroundModel, CompletionPolicy, Model,
};
use reckon::frameworks::fi_natural_extension;
use reckon::previsions::{
    avoids_sure_loss, is_coherent_lpr, natural_extension_value, PrevisionError,
};
use reckon::relations::relate;
use reckon::symmetry::{
    indifference_span, invariant_atoms, monoid_closure, sym_extension, symmetry_background,
    PermutationGroup, SymmetryError, DEFAULT_MONOID_CAP,
};
use reckon::{format_rat, Gamble};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "reckon", version, about = "accept-reject uncertainty models")]
struct Cli {
    #[command(subcommand)]
    verb: Verb,
}

#[derive(Subcommand)]
enum Verb {
    /// Confusion, closability, background respect and coherence verdicts
    Check(CommonArgs),
    /// Extend the assessment and dump the resulting model's generators
    Extend(CommonArgs),
    /// Classify query gambles and relate query pairs against the model
    Query(CommonArgs),
    /// Sure-loss, coherence and natural-extension report for the document's
    /// lower prevision
    Prevision(CommonArgs),
    /// Symmetry report: monoid closure, background validity, extension
    Sym(CommonArgs),
    /// Render the model's accepted and rejected regions as SVG (2 atoms)
    Plot(CommonArgs),
}

#[derive(Parser)]
struct CommonArgs {
    /// JSON document path
    doc: PathBuf,
    /// Background model preset, overriding the document's
    #[arg(long, value_enum)]
    background: Option<BackgroundArg>,
    /// Resolve unresolved query gambles by maximal completion
    #[arg(long, value_enum)]
    policy: Option<PolicyArg>,
    /// Output path (required for plot)
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum BackgroundArg {
    Nonneg,
    Uniform,
    Positive,
    Trivial,
}

impl BackgroundArg {
    fn to_model(self) -> BackgroundModel {
        match self {
            BackgroundArg::Nonneg => BackgroundModel::Nonneg,
            BackgroundArg::Uniform => BackgroundModel::Uniform,
            BackgroundArg::Positive => BackgroundModel::Positive,
            BackgroundArg::Trivial => BackgroundModel::Trivial,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum PolicyArg {
    AcceptFirst,
    RejectFirst,
}

/// Input problems end the run with exit code 2 and a message on stderr.
struct InputError(String);

impl<T: std::fmt::Display> From<T> for InputError {
    fn from(e: T) -> InputError {
        InputError(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args = match &cli.verb {
        Verb::Check(a) | Verb::Extend(a) | Verb::Query(a) | Verb::Prevision(a) | Verb::Sym(a)
        | Verb::Plot(a) => a,
    };
    let outcome = load(args).and_then(|resolved| match &cli.verb {
        Verb::Check(_) => cmd_check(&resolved, args),
        Verb::Extend(_) => cmd_extend(&resolved, args),
        Verb::Query(_) => cmd_query(&resolved, args),
        Verb::Prevision(_) => cmd_prevision(&resolved),
        Verb::Sym(_) => cmd_sym(&resolved),
        Verb::Plot(_) => cmd_plot(&resolved, args),
    });
    match outcome {
        Ok((report, code)) => {
            if let Some(report) = report {
                println!("{}", serde_json::to_string_pretty(&report).expect("report is json"));
            }
            ExitCode::from(code)
        }
        Err(InputError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn load(args: &CommonArgs) -> Result<Resolved, InputError> {
    let text = std::fs::read_to_string(&args.doc)
        .map_err(|e| InputError(format!("cannot read {}: {e}", args.doc.display())))?;
    let doc: Document = serde_json::from_str(&text)?;
    doc.resolve().map_err(InputError)
}

/// The background in effect: the flag wins over the document.
fn background(resolved: &Resolved, args: &CommonArgs) -> Result<Option<BackgroundModel>, InputError> {
    if let Some(b) = args.background {
        return Ok(Some(b.to_model()));
    }
    match &resolved.background {
        None => Ok(None),
        Some(name) => BackgroundModel::from_name(name)
            .map(Some)
            .ok_or_else(|| InputError(format!("unknown background preset {name:?}"))),
    }
}

/// The model the extend/query/plot verbs operate on: the favour-indifference
/// extension when those statements are present, the natural extension when a
/// background is in effect, the bare reckoning otherwise. The error carries
/// the verdict-bearing report for exit code 1.
fn build_model(
    resolved: &Resolved,
    args: &CommonArgs,
) -> Result<Result<Model, Value>, InputError> {
    if let Some(fi) = &resolved.fi {
        return Ok(fi_natural_extension(fi).map_err(|e| {
            json!({"error": "not_closable", "detail": e.to_string()})
        }));
    }
    let a = &resolved.assessment;
    match background(resolved, args)? {
        Some(s) => Ok(natural_extension(a, s).map_err(|e| {
            json!({"error": "no_respect", "detail": e.to_string()})
        })),
        None => {
            let d = reckon::engine::deductive_extension(a);
            Ok(reckon::engine::reckoning_extension(&d).map_err(|e| {
                json!({"error": "not_closable", "detail": e.to_string()})
            }))
        }
    }
}

fn gamble_json(g: &Gamble) -> Value {
    Value::Array(
        g.values()
            .iter()
            .map(|v| Value::String(format_rat(v)))
            .collect(),
    )
}

/// Display normalization: scale so the first nonzero coordinate has
/// absolute value one. Presentation only.
fn ray_json(g: &Gamble) -> Value {
    match g.values().iter().find(|v| !reckon::rat::is_zero(v)) {
        None => gamble_json(g),
        Some(first) => {
            let scale = reckon::rat::rone() / first;
            let scale = if reckon::rat::is_neg(&scale) { -scale } else { scale };
            gamble_json(&g.scale(&scale))
        }
    }
}

fn cmd_check(resolved: &Resolved, args: &CommonArgs) -> Result<(Option<Value>, u8), InputError> {
    let a = &resolved.assessment;
    let s = background(resolved, args)?.unwrap_or(BackgroundModel::Nonneg);
    let confusing = confusion_statements(a);
    let verdict = is_deductively_closable(a);
    let respect = natural_extension(a, s);
    let coherent = is_coherent_over_background(a, s);
    let report = json!({
        "confusion_free": confusing.is_empty(),
        "confusing": confusing.iter().map(gamble_json).collect::<Vec<_>>(),
        "closable": verdict.closable,
        "closability_witness": verdict.witness.as_ref().map(gamble_json),
        "background": s.name(),
        "respects_background": respect.is_ok(),
        "respect_witness": match &respect {
            Err(reckon::engine::EngineError::NoRespect { witness }) => Some(gamble_json(witness)),
            _ => None,
        },
        "coherent": coherent,
    });
    let ok = confusing.is_empty() && verdict.closable && respect.is_ok();
    Ok((Some(report), u8::from(!ok)))
}

fn cmd_extend(resolved: &Resolved, args: &CommonArgs) -> Result<(Option<Value>, u8), InputError> {
    let m = match build_model(resolved, args)? {
        Ok(m) => m,
        Err(report) => return Ok((Some(report), 1)),
    };
    let mut report = json!({
        "kind": if resolved.fi.is_some() {
            "favour-indifference"
        } else if m.background().is_some() {
            "natural"
        } else {
            "reckoned"
        },
        "background": m.background().map(|s| s.name()),
        "accepted_gens": m.accepted_gens().iter().map(ray_json).collect::<Vec<_>>(),
        "rejected_gens": m.rejected_gens().iter().map(ray_json).collect::<Vec<_>>(),
    });
    if let Some(fi) = &resolved.fi {
        report["indifference_span"] = Value::Array(
            fi.indifferent().iter().map(ray_json).collect(),
        );
    }
    Ok((Some(report), 0))
}

fn cmd_query(resolved: &Resolved, args: &CommonArgs) -> Result<(Option<Value>, u8), InputError> {
    let m = match build_model(resolved, args)? {
        Ok(m) => m,
        Err(report) => return Ok((Some(report), 1)),
    };
    let gambles: Vec<Value> = resolved
        .query_gambles
        .iter()
        .map(|(id, f)| {
            let st = classify(&m, f);
            json!({
                "id": id,
                "nine_class": st.nine_class,
                "accepted": st.accepted,
                "rejected": st.rejected,
                "unresolved": st.unresolved,
                "favourable": st.favourable,
                "indifferent": st.indifferent,
                "indeterminate": st.indeterminate,
            })
        })
        .collect();
    let pairs: Vec<Value> = resolved
        .query_pairs
        .iter()
        .map(|((lid, f), (rid, g))| {
            let v = relate(&m, f, g).expect("same space by construction");
            json!({
                "left": lid,
                "right": rid,
                "accept_exchange": v.accept_exchange,
                "unpreferred": v.unpreferred,
                "indifferent": v.indifferent,
                "preferred": v.preferred,
                "uncomparable": v.uncomparable,
            })
        })
        .collect();
    let mut report = json!({ "gambles": gambles, "pairs": pairs });
    if let Some(policy) = args.policy {
        let policy = match policy {
            PolicyArg::AcceptFirst => CompletionPolicy::AcceptFirst,
            PolicyArg::RejectFirst => CompletionPolicy::RejectFirst,
        };
        let queries: Vec<Gamble> = resolved
            .query_gambles
            .iter()
            .map(|(_, f)| f.clone())
            .collect();
        let completed = maximal_completion(&resolved.assessment, &queries, policy)
            .map_err(|e| InputError(format!("completion failed: {e}")))?;
        report["completion"] = Value::Array(
            resolved
                .query_gambles
                .iter()
                .map(|(id, f)| {
                    let st = classify(&completed, f);
                    json!({"id": id, "accepted": st.accepted, "rejected": st.rejected})
                })
                .collect(),
        );
    }
    Ok((Some(report), 0))
}

fn cmd_prevision(resolved: &Resolved) -> Result<(Option<Value>, u8), InputError> {
    let lp = resolved
        .prevision
        .as_ref()
        .ok_or_else(|| InputError("document has no prevision section".into()))?;
    let verdict = avoids_sure_loss(lp).map_err(|e| InputError(e.to_string()))?;
    if !verdict.avoids {
        let report = json!({
            "avoids_sure_loss": false,
            "certificate": verdict
                .certificate
                .as_ref()
                .map(|c| c.iter().map(|v| format_rat(v)).collect::<Vec<_>>()),
            "coherent": Value::Null,
            "extensions": Vec::<Value>::new(),
        });
        return Ok((Some(report), 1));
    }
    let coherent = is_coherent_lpr(lp).map_err(|e| InputError(e.to_string()))?;
    let extensions: Vec<Value> = resolved
        .prevision_queries
        .iter()
        .map(|(id, f)| match natural_extension_value(lp, f) {
            Ok(v) => Ok(json!({"id": id, "value": format_rat(&v)})),
            Err(PrevisionError::SureLoss { .. }) => unreachable!("checked above"),
            Err(e) => Err(InputError(e.to_string())),
        })
        .collect::<Result<_, _>>()?;
    let report = json!({
        "avoids_sure_loss": true,
        "certificate": Value::Null,
        "coherent": coherent,
        "extensions": extensions,
    });
    Ok((Some(report), 0))
}

fn cmd_sym(resolved: &Resolved) -> Result<(Option<Value>, u8), InputError> {
    if resolved.transformations.is_empty() {
        return Err(InputError("document has no transformations section".into()));
    }
    let space = &resolved.space;
    let monoid = monoid_closure(&resolved.transformations, DEFAULT_MONOID_CAP)
        .map_err(|e| InputError(e.to_string()))?;
    let span = indifference_span(&monoid, space);
    let bijective = resolved.transformations.iter().all(|t| t.is_bijective());
    let orbits: Option<Vec<Vec<usize>>> = if bijective {
        let g = PermutationGroup::from_generators(&resolved.transformations, DEFAULT_MONOID_CAP)
            .map_err(|e| InputError(e.to_string()))?;
        Some(invariant_atoms(&g, space))
    } else {
        None
    };
    let validity = symmetry_background(&monoid, space);
    let mut report = json!({
        "monoid_size": monoid.elements().len(),
        "valid": validity.is_ok(),
        "certificate": match &validity {
            Err(SymmetryError::Confused { certificate }) => Some(gamble_json(certificate)),
            _ => None,
        },
        "indifference_span": span.iter().map(ray_json).collect::<Vec<_>>(),
        "orbits": orbits,
    });
    let mut code = u8::from(validity.is_err());
    if !resolved.sym_favourable.is_empty() && validity.is_ok() {
        let favs: Vec<Gamble> = resolved
            .sym_favourable
            .iter()
            .map(|(_, f)| f.clone())
            .collect();
        match sym_extension(&favs, &monoid, space) {
            Ok(m) => {
                report["extension"] = json!({
                    "respects": true,
                    "accepted_gens": m.accepted_gens().iter().map(ray_json).collect::<Vec<_>>(),
                    "rejected_gens": m.rejected_gens().iter().map(ray_json).collect::<Vec<_>>(),
                });
            }
            Err(SymmetryError::NoRespect) => {
                report["extension"] = json!({"respects": false});
                code = 1;
            }
            Err(e) => return Err(InputError(e.to_string())),
        }
    }
    Ok((Some(report), code))
}

fn cmd_plot(resolved: &Resolved, args: &CommonArgs) -> Result<(Option<Value>, u8), InputError> {
    if resolved.space.dim() != 2 {
        return Err(InputError("plot requires a 2-atom space".into()));
    }
    let out = args
        .out
        .as_ref()
        .ok_or_else(|| InputError("plot requires --out".into()))?;
    let m = match build_model(resolved, args)? {
        Ok(m) => m,
        Err(report) => return Ok((Some(report), 1)),
    };
    let svg = render::render_model(&m);
    std::fs::write(out, svg)
        .map_err(|e| InputError(format!("cannot write {}: {e}", out.display())))?;
    Ok((None, 0))
}
