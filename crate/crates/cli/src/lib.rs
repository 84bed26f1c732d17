//! `gammahom` command line: argument parsing, file loading and JSON reports.
//!
//! Exit codes: 0 success, 1 domain error (bad tables, guard violations,
//! infeasible programs), 2 usage error (bad flags, unreadable or malformed
//! JSON).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use gammahom::chains::{seminorm, ChainJson, NormMode, QChain};
use gammahom::gamma::{ha_gamma_set, hb_gamma_set, FiniteMonoid, GammaSet, IdentityGamma, MonoidSpec};
use gammahom::homotopy::homology_gamma;
use gammahom::rational::{format_q, parse_q, Q};
use gammahom::simplicial::{pi_comb_n, TruncatedSimplicialSet, TruncatedSpec};
use gammahom::surfaces::{self, Verdict};
use gammahom::two_sets::{self, Subobject, TwoSet, TwoSetSpec, CLASSIFIER_EDGE_NAMES};
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
  #[error("{0}")]
  Usage(String),
  #[error(transparent)]
  Domain(#[from] gammahom::Error),
}

impl CliError {
  pub fn exit_code(&self) -> i32 {
    match self {
      CliError::Domain(_) => 1,
      CliError::Usage(_) => 2,
    }
  }
}

type CliResult<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "gammahom", version, about = "Homology with Γ-set coefficients, seminorms and surface models")]
pub struct Cli {
  /// Also write the report to this file.
  #[arg(long, global = true)]
  out:    Option<PathBuf>,
  /// Include wall-clock time in the report (breaks byte-identical output).
  #[arg(long, global = true)]
  timing: bool,
  #[command(subcommand)]
  command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Mode {
  L1,
  Nor,
}

#[derive(Debug, Subcommand)]
enum Command {
  /// The Γ-set table of H_n(X, F) for k ≤ kmax.
  Homology {
    #[arg(long)]
    space:  PathBuf,
    /// `s`, `hb`, or `ha:<monoid.json>`.
    #[arg(long)]
    coeff:  String,
    #[arg(long)]
    degree: usize,
    #[arg(long, default_value_t = 1)]
    kmax:   usize,
  },
  /// π^comb_n(X) as a pointed set.
  PiComb {
    #[arg(long)]
    space:  PathBuf,
    #[arg(long)]
    degree: usize,
  },
  /// The 2-set π^(2)_n(X) and its components.
  PiTwo {
    #[arg(long)]
    space:  PathBuf,
    #[arg(long)]
    degree: usize,
  },
  /// Classifying map of a sub-2-set.
  Classify {
    #[arg(long = "two-set")]
    two_set: PathBuf,
    /// Comma-separated vertex and edge labels of the subobject.
    #[arg(long, value_delimiter = ',')]
    sub:     Vec<String>,
  },
  /// ℓ¹ or normalized seminorm of a rational cycle.
  Norm {
    #[arg(long)]
    space:  PathBuf,
    #[arg(long)]
    cycle:  PathBuf,
    #[arg(long, value_enum)]
    mode:   Mode,
    #[arg(long)]
    lambda: Option<String>,
  },
  /// The genus-g surface model and its normalized fundamental cycle.
  Surface {
    #[arg(long)]
    genus:       usize,
    #[arg(long = "check-class")]
    check_class: bool,
    #[arg(long)]
    lambda:      Option<String>,
    #[arg(long, default_value_t = 1)]
    nmax:        usize,
    /// Solve the normalized-seminorm LP of c/8 on the model.
    #[arg(long)]
    lp:          bool,
  },
  /// Load a simplicial-set file and check every simplicial identity.
  Validate {
    #[arg(long)]
    space: PathBuf,
  },
}

#[derive(Debug, Serialize)]
struct RunReport {
  command: Vec<String>,
  inputs:  BTreeMap<String, String>,
  results: Value,
  #[serde(skip_serializing_if = "Option::is_none")]
  elapsed_ms: Option<u128>,
  version: &'static str,
}

struct Inputs(BTreeMap<String, String>);

impl Inputs {
  fn read(&mut self, path: &Path) -> CliResult<String> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Usage(format!("cannot read {}: {e}", path.display())))?;
    self.0.insert(path.display().to_string(), hex::encode(Sha256::digest(text.as_bytes())));
    Ok(text)
  }

  fn json<T: DeserializeOwned>(&mut self, path: &Path) -> CliResult<T> {
    let text = self.read(path)?;
    serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column())))
  }

  fn space(&mut self, path: &Path, min_cap: usize) -> CliResult<TruncatedSimplicialSet> {
    let x = TruncatedSimplicialSet::from_spec(&self.json::<TruncatedSpec>(path)?)?;
    Ok(if x.dim_cap() < min_cap { x.with_cap(min_cap)? } else { x })
  }
}

fn parse_lambda(s: &str) -> CliResult<Q> { parse_q(s).map_err(|e| CliError::Usage(e.to_string())) }

fn coefficients(spec: &str, inputs: &mut Inputs) -> CliResult<Box<dyn GammaSet>> {
  match spec {
    "s" => Ok(Box::new(IdentityGamma)),
    "hb" => Ok(Box::new(hb_gamma_set())),
    _ => match spec.strip_prefix("ha:") {
      Some(path) => {
        let m = FiniteMonoid::from_spec(&inputs.json::<MonoidSpec>(Path::new(path))?)?;
        Ok(Box::new(ha_gamma_set(m)))
      }
      None => Err(CliError::Usage(format!("unknown coefficients {spec:?}; expected s, hb or ha:<file>"))),
    },
  }
}

fn two_set_json(t: &TwoSet) -> Value {
  let c = two_sets::components(t);
  json!({ "two_set": t.to_spec(), "components": c.labels, "base_component": c.base.map(|b| c.labels[b].clone()) })
}

fn execute(command: &Command, inputs: &mut Inputs) -> CliResult<Value> {
  match command {
    Command::Homology { space, coeff, degree, kmax } => {
      let x = inputs.space(space, degree + 1)?;
      let f = coefficients(coeff, inputs)?;
      let table = homology_gamma(&x, f.as_ref(), *degree, *kmax)?;
      Ok(serde_json::to_value(&table).expect("tables serialize"))
    }
    Command::PiComb { space, degree } => {
      let x = inputs.space(space, degree + 1)?.to_levelwise();
      let p = pi_comb_n(&x, *degree)?;
      Ok(json!({ "degree": degree, "base": p.base_label(), "classes": p.elements() }))
    }
    Command::PiTwo { space, degree } => {
      let x = inputs.space(space, degree + 1)?.to_levelwise();
      Ok(two_set_json(&two_sets::pi2_n(&x, *degree)?))
    }
    Command::Classify { two_set, sub } => {
      let g = TwoSet::from_spec(&inputs.json::<TwoSetSpec>(two_set)?)?;
      let s = Subobject::from_labels(&g, sub)?;
      let chi = two_sets::classify(&g, &s)?;
      let name = |i: usize| CLASSIFIER_EDGE_NAMES[i];
      let vertices: BTreeMap<&str, &str> = g.vertices().iter().zip(&chi.on_vertices).map(|(v, &c)| (v.as_str(), name(c))).collect();
      let edges: BTreeMap<&str, &str> = g.edges().iter().zip(&chi.on_edges).map(|(e, &c)| (e.as_str(), name(c))).collect();
      Ok(json!({ "vertices": vertices, "edges": edges }))
    }
    Command::Norm { space, cycle, mode, lambda } => {
      let chain: ChainJson = inputs.json(cycle)?;
      let x = inputs.space(space, chain.degree + 1)?.to_levelwise();
      let c = QChain::from_json(&chain, &x)?;
      let mode = match mode {
        Mode::L1 => NormMode::L1,
        Mode::Nor => NormMode::Normalized,
      };
      let s = seminorm(&c, &x, mode)?;
      let mut out = json!({ "value": format_q(&s.value), "witness": s.witness.to_json(&x) });
      if let Some(l) = lambda {
        let l = parse_lambda(l)?;
        if l <= Q::from_integer(0.into()) {
          return Err(gammahom::Error::NonPositiveLambda(format_q(&l)).into());
        }
        out["below_lambda"] = json!(s.value < l);
      }
      Ok(out)
    }
    Command::Surface { genus, check_class, lambda, nmax, lp } => surface(*genus, *check_class, lambda.as_deref(), *nmax, *lp),
    Command::Validate { space } => {
      let x = inputs.space(space, 0)?;
      let lw = x.to_levelwise();
      lw.check_identities()?;
      Ok(json!({ "valid": true, "dim_cap": x.dim_cap(), "level_sizes": lw.sizes() }))
    }
  }
}

fn surface(genus: usize, check_class: bool, lambda: Option<&str>, nmax: usize, lp: bool) -> CliResult<Value> {
  let model = surfaces::build_surface(genus)?;
  let x = model.space();
  let c = surfaces::fundamental_normalized_cycle(&model)?;
  let boundaries_zero = (0..=2).all(|j| gammahom::chains::face(&c, x, j).map(|f| f.is_zero()).unwrap_or(false));
  let cells = surfaces::cell_counts(&model);
  let model_value = if lp { Some(surfaces::model_normalized_value(&model)?) } else { None };
  let mut upper_bounds = vec![json!({ "source": "model cycle c/8", "value": format_q(&(c.l1_norm() / Q::from_integer(8.into()))) })];
  let cover = surfaces::cyclic_cover_bound(genus, nmax)?;
  upper_bounds.push(json!({ "source": format!("cyclic cover of degree {nmax}"), "value": format_q(&cover) }));
  if let Some(v) = &model_value {
    upper_bounds.push(json!({ "source": "normalized seminorm LP of c/8", "value": format_q(v) }));
  }
  let mut out = json!({
    "genus": genus,
    "level_sizes": x.sizes(),
    "cells": cells,
    "euler_characteristic": cells.euler_characteristic(),
    "norm_l1": format_q(&c.l1_norm()),
    "boundaries_zero": boundaries_zero,
    "signed_pairing": format_q(&surfaces::signed_pairing(&model, &c)),
    "class_multiplicity": 8,
    "upper_bounds": upper_bounds,
    "witnesses": { "cycle": c.to_json(x) },
  });
  if let Some(l) = lambda {
    let l = parse_lambda(l)?;
    let d = surfaces::lambda_threshold_decision_with_model(genus, &l, nmax, model_value.as_ref())?;
    let verdict = match d.verdict {
      Verdict::True => "True",
      Verdict::False => "False",
      Verdict::Unknown => "Unknown",
    };
    out["decision"] = json!({ "verdict": verdict, "detail": d });
  }
  if check_class {
    let cert = surfaces::class_certificate(&model)?;
    let literal: Vec<Value> = cert
      .literal
      .iter()
      .map(|a| json!({ "block": a.block, "pair": [a.pair.0, a.pair.1], "support": a.support, "found": a.certificate.is_some() }))
      .collect();
    let triangles: Vec<Value> = cert
      .triangles
      .iter()
      .map(|t| json!({ "block": t.block, "pair": [t.pair.0, t.pair.1], "support": t.support, "psi": t.psi.to_json(x) }))
      .collect();
    out["class"] = json!({
      "literal_certificates_found": cert.literal_found(),
      "literal_attempts": literal,
      "corrected_certificates": triangles,
      "z": cert.z.to_json(x),
      "z_nontrivial": cert.z_nontrivial,
      "pair_bounds": cert.pair_bounds.iter().map(|(k, b)| json!({ "pair": k, "chain": b.to_json(x) })).collect::<Vec<_>>(),
    });
  }
  Ok(out)
}

/// Runs the command line and returns the exit code and standard output.
/// Errors go to the returned text as well, prefixed by `error:`.
pub fn run<I, T>(argv: I) -> (i32, String)
where
  I: IntoIterator<Item = T>,
  T: Into<std::ffi::OsString> + Clone,
{
  let argv: Vec<std::ffi::OsString> = argv.into_iter().map(Into::into).collect();
  let cli = match Cli::try_parse_from(&argv) {
    Ok(c) => c,
    Err(e) => {
      let code = if e.use_stderr() { 2 } else { 0 };
      return (code, e.to_string());
    }
  };
  let start = Instant::now();
  let mut inputs = Inputs(BTreeMap::new());
  match execute(&cli.command, &mut inputs) {
    Ok(results) => {
      let report = RunReport {
        command: argv.iter().skip(1).map(|a| a.to_string_lossy().into_owned()).collect(),
        inputs: inputs.0,
        results,
        elapsed_ms: cli.timing.then(|| start.elapsed().as_millis()),
        version: env!("CARGO_PKG_VERSION"),
      };
      let text = serde_json::to_string_pretty(&report).expect("reports serialize") + "\n";
      if let Some(path) = &cli.out {
        if let Err(e) = std::fs::write(path, &text) {
          return (2, format!("error: cannot write {}: {e}\n", path.display()));
        }
      }
      (0, text)
    }
    Err(e) => (e.exit_code(), format!("error: {e}\n")),
  }
}
