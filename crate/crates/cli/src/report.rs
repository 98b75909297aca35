//! Report assembly and command dispatch.

use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};
use torq_core::amitsur::Amitsur;
use torq_core::equiv::{certify_noneffective, effectivize, monomials_up_to, verify_axioms, EffectivizeOptions, ToricRelation};
use torq_core::monoid::{AffineMonoid, ToricPresentation};
use torq_core::quotient::{quotient_compute, QuotientOptions};
use torq_core::Field;

use crate::problem::{self, parse_field, Effective, FieldSpec, Loaded};
use crate::{Cli, CliError, Command};

pub const SCHEMA_VERSION: &str = "1.0";

#[derive(Clone, Debug, Serialize)]
pub struct ErrorInfo {
    pub kind: String,
    pub message: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub schema_version: &'static str,
    pub command: String,
    pub problem: String,
    pub status: &'static str,
    pub exit_code: i32,
    pub field: Option<String>,
    pub budgets: Option<Effective>,
    pub result: Option<Value>,
    pub transcript: Vec<Value>,
    pub error: Option<ErrorInfo>,
}

impl Report {
    pub fn new(command: &str, problem: &Path) -> Self {
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            problem: problem.display().to_string(),
            status: "ok",
            exit_code: 0,
            field: None,
            budgets: None,
            result: None,
            transcript: Vec::new(),
            error: None,
        }
    }

    pub fn fail(&mut self, e: &CliError) {
        self.error = Some(ErrorInfo { kind: e.kind(), message: e.to_string() });
    }

    pub fn finish(&mut self, code: i32) {
        self.exit_code = code;
        self.status = match code {
            0 => "ok",
            1 => "property_failed",
            3 => "budget_exceeded",
            _ => "error",
        };
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize") + "\n"
    }
}

fn field_name(f: Field) -> String {
    match f {
        Field::Rational => "Q".into(),
        Field::Prime(p) => format!("Fp:{p}"),
    }
}

fn presentation_json(p: &ToricPresentation) -> Value {
    let names = |i: usize| format!("z{}", i + 1);
    json!({
        "generators": p.monoid.generators(),
        "nvars": p.nvars,
        "relations": p.ideal.iter().map(|g| g.display_with(&names)).collect::<Vec<_>>(),
    })
}

/// Degrees from `a..b`, `a,b,c` (rank 1) or `x1,x2;y1,y2`.
pub fn parse_degrees(spec: &str, rank: usize) -> Result<Vec<Vec<i64>>, CliError> {
    let bad = || CliError::Input(format!("cannot parse degree list {spec:?}"));
    let num = |s: &str| s.trim().parse::<i64>().map_err(|_| bad());
    if rank == 1 {
        if let Some((a, b)) = spec.split_once("..") {
            let (a, b) = (num(a)?, num(b)?);
            return Ok((a..=b).map(|d| vec![d]).collect());
        }
        return spec.split(',').map(|s| Ok(vec![num(s)?])).collect();
    }
    spec.split(';')
        .map(|v| {
            let d: Vec<i64> = v.split(',').map(num).collect::<Result<_, _>>()?;
            if d.len() != rank {
                return Err(bad());
            }
            Ok(d)
        })
        .collect()
}

fn effectivize_options(b: &Effective) -> EffectivizeOptions {
    EffectivizeOptions { skip_axioms: false, check_lemmas: true, fiber_budget: Some(b.fiber) }
}

fn toric(loaded: &Loaded) -> Result<ToricRelation, CliError> {
    Ok(ToricRelation::new(loaded.relation()?)?)
}

pub(crate) fn execute(cli: &Cli, rep: &mut Report) -> Result<i32, CliError> {
    let file = problem::read(cli.command.file())?;
    let field_override: Option<FieldSpec> = cli.field.as_deref().map(parse_field).transpose()?;
    let loaded = problem::load(file, field_override, cli.budget_gb, cli.budget_fiber)?;
    rep.field = Some(field_name(loaded.field));
    rep.budgets = Some(loaded.budgets.clone());
    match &cli.command {
        Command::Verify { .. } => verify(&loaded, rep),
        Command::Effectivize { .. } => {
            let rel = toric(&loaded)?;
            let m = effectivize(&rel, &effectivize_options(&loaded.budgets))?;
            rep.result = Some(json!({
                "W": m.w,
                "tau_generators": m.tau.generators(),
                "y_presentation": presentation_json(&m.y_presentation),
                "verified": m.verified,
            }));
            rep.transcript = m.transcript.iter().map(|s| json!(s)).collect();
            Ok(if m.verified { 0 } else { 1 })
        }
        Command::Quotient { bound, .. } => {
            let rel = toric(&loaded)?;
            let opts = QuotientOptions {
                bound: bound.or(loaded.budgets.invariant_bound),
                effectivize: effectivize_options(&loaded.budgets),
            };
            let q = quotient_compute(&rel, &opts)?;
            rep.result = Some(json!({
                "verdict": q.verdict,
                "W": q.model.w,
                "effective_verified": q.model.verified,
                "invariant_monoid": q.invariants,
                "finiteness": q.finiteness,
                "tau_in_tau_prime": q.tau_in_tau_prime,
                "difference_ideal_equal": q.difference_ideal_equal,
                "graph_finite": q.graph_finite,
                "y_presentation": q.y_presentation.as_ref().map(presentation_json),
            }));
            rep.transcript = q.model.transcript.iter().map(|s| json!(s)).collect();
            Ok(if q.model.verified && q.tau_in_tau_prime { 0 } else { 1 })
        }
        Command::Amitsur { levels, degrees, .. } => {
            let hom = loaded.hom()?;
            let sigma: &AffineMonoid = hom.target();
            let degs = match degrees {
                Some(s) => parse_degrees(s, sigma.rank())?,
                None => monomials_up_to(sigma, 4)?,
            };
            let a = Amitsur::new(&hom, loaded.field)?.with_fiber_budget(loaded.budgets.fiber);
            let t = a.cohomology_table(*levels, &degs)?;
            rep.result = Some(json!({
                "n_max": t.n_max,
                "exact": t.exact(),
                "d_squared_zero": t.d_squared_zero(),
                "rows": t.rows,
            }));
            Ok(if t.exact() && t.d_squared_zero() { 0 } else { 1 })
        }
        Command::CertifyNoneffective { element, bound, .. } => {
            let rel = loaded.relation()?;
            let g = rel
                .generators()
                .get(*element)
                .ok_or_else(|| CliError::Input(format!("element index {element} out of range")))?
                .clone();
            let cert = certify_noneffective(&rel, &g, *bound)?;
            let f = loaded.field;
            let basis: Vec<Value> = cert
                .basis
                .functions
                .iter()
                .map(|fun| json!(fun.iter().map(|(c, s)| json!({"coeff": f.display(c), "x": s})).collect::<Vec<_>>()))
                .collect();
            rep.result = Some(json!({
                "element": element,
                "bound": cert.bound,
                "holds": cert.holds,
                "basis": basis,
            }));
            Ok(0)
        }
    }
}

fn verify(loaded: &Loaded, rep: &mut Report) -> Result<i32, CliError> {
    let rel = loaded.relation()?;
    let violation = rel.toric_violation()?;
    let axioms = verify_axioms(&rel);
    let names = |v: usize| {
        let k = rel.ambient().k();
        format!("{}{}", if v < k { "x" } else { "y" }, v % k + 1)
    };
    rep.result = Some(json!({
        "toric": violation.is_none(),
        "non_toric_component": violation.map(|(i, c)| json!({"generator": i, "component": c.display_with(&names)})),
        "reflexive": axioms.reflexive,
        "symmetric": axioms.symmetric,
        "transitive": axioms.transitive,
        "finite": axioms.finite,
        "budget_errors": axioms.budget_errors,
    }));
    if !axioms.budget_errors.is_empty() {
        return Ok(3);
    }
    let all = [axioms.reflexive, axioms.symmetric, axioms.transitive, axioms.finite].iter().all(|a| *a == Some(true));
    Ok(if all { 0 } else { 1 })
}
