//! Problem files: the monoid, the coefficient field, the ideal and budgets, as JSON.

use std::path::Path;

use serde::{Deserialize, Serialize};
use torq_core::equiv::{RawTerm, Relation};
use torq_core::gb::GbConfig;
use torq_core::monoid::{hom_new, presentation, AffineMonoid, MonoidHom, ToricPresentation};
use torq_core::tensor::DEFAULT_FIBER_BUDGET;
use torq_core::Field;

use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FieldSpec {
    Q,
    Fp(u64),
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermSpec {
    pub coeff: String,
    pub x: Vec<i64>,
    pub y: Vec<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HomSpec {
    pub tau_generators: Vec<Vec<i64>>,
    pub images: Vec<Vec<i64>>,
}

#[derive(Clone, Debug, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Budgets {
    pub gb_degree: Option<u64>,
    pub gb_basis: Option<usize>,
    pub fiber: Option<usize>,
    pub invariant_bound: Option<i64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    pub ambient_rank: usize,
    pub monoid_generators: Vec<Vec<i64>>,
    #[serde(alias = "field", default = "default_field")]
    pub coefficient_field: FieldSpec,
    #[serde(default)]
    pub ideal_generators: Vec<Vec<TermSpec>>,
    #[serde(default)]
    pub hom: Option<HomSpec>,
    #[serde(default)]
    pub budgets: Budgets,
}

fn default_field() -> FieldSpec {
    FieldSpec::Q
}

/// Budgets after applying command-line overrides.
#[derive(Clone, Debug, Serialize)]
pub struct Effective {
    pub gb_degree: u64,
    pub gb_basis: usize,
    pub fiber: usize,
    pub invariant_bound: Option<i64>,
}

impl Effective {
    pub fn gb(&self) -> GbConfig {
        GbConfig { max_degree: self.gb_degree, max_basis: self.gb_basis }
    }
}

/// A parsed and validated problem.
pub struct Loaded {
    pub file: ProblemFile,
    pub field: Field,
    pub budgets: Effective,
    pub presentation: ToricPresentation,
}

pub fn parse_field(s: &str) -> Result<FieldSpec, CliError> {
    let t = s.trim();
    if t.eq_ignore_ascii_case("q") {
        return Ok(FieldSpec::Q);
    }
    let p = t
        .strip_prefix("Fp:")
        .or_else(|| t.strip_prefix("fp:"))
        .ok_or_else(|| CliError::Input(format!("field must be Q or Fp:P, got {s:?}")))?;
    p.parse::<u64>().map(FieldSpec::Fp).map_err(|_| CliError::Input(format!("bad characteristic in {s:?}")))
}

impl FieldSpec {
    pub fn to_field(&self) -> Result<Field, CliError> {
        match self {
            FieldSpec::Q => Ok(Field::Rational),
            FieldSpec::Fp(p) => Ok(Field::prime(*p)?),
        }
    }
}

pub fn read(path: &Path) -> Result<ProblemFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::Input(format!("{}: line {}, column {}: {e}", path.display(), e.line(), e.column()))
    })
}

pub fn load(file: ProblemFile, field_override: Option<FieldSpec>, gb_degree: Option<u64>, fiber: Option<usize>) -> Result<Loaded, CliError> {
    let spec = field_override.unwrap_or_else(|| file.coefficient_field.clone());
    let field = spec.to_field()?;
    let d = file.ambient_rank;
    for (i, g) in file.monoid_generators.iter().enumerate() {
        if g.len() != d {
            return Err(CliError::Input(format!("monoid_generators[{i}] has length {}, expected {d}", g.len())));
        }
    }
    let budgets = Effective {
        gb_degree: gb_degree.or(file.budgets.gb_degree).unwrap_or(GbConfig::default().max_degree),
        gb_basis: file.budgets.gb_basis.unwrap_or(GbConfig::default().max_basis),
        fiber: fiber.or(file.budgets.fiber).unwrap_or(DEFAULT_FIBER_BUDGET),
        invariant_bound: file.budgets.invariant_bound,
    };
    let sigma = AffineMonoid::new(d, &file.monoid_generators)?;
    let presentation = presentation(&sigma, field, &budgets.gb())?;
    let mut file = file;
    file.coefficient_field = spec;
    Ok(Loaded { file, field, budgets, presentation })
}

impl Loaded {
    pub fn sigma(&self) -> &AffineMonoid {
        &self.presentation.monoid
    }

    pub fn raw_generators(&self) -> Result<Vec<Vec<RawTerm>>, CliError> {
        let d = self.file.ambient_rank;
        let mut out = Vec::new();
        for (i, g) in self.file.ideal_generators.iter().enumerate() {
            let mut terms = Vec::new();
            for (j, t) in g.iter().enumerate() {
                if t.x.len() != d || t.y.len() != d {
                    return Err(CliError::Input(format!("ideal_generators[{i}][{j}]: exponent length must be {d}")));
                }
                let c = self
                    .field
                    .parse(&t.coeff)
                    .map_err(|e| CliError::Input(format!("ideal_generators[{i}][{j}].coeff: {e}")))?;
                for (name, v) in [("x", &t.x), ("y", &t.y)] {
                    if !self.sigma().contains_bool(v)? {
                        return Err(CliError::Input(format!("ideal_generators[{i}][{j}].{name} = {v:?} is not in the monoid")));
                    }
                }
                terms.push((c, t.x.clone(), t.y.clone()));
            }
            out.push(terms);
        }
        Ok(out)
    }

    pub fn relation(&self) -> Result<Relation, CliError> {
        Ok(Relation::from_terms(&self.presentation, &self.raw_generators()?, &self.budgets.gb())?)
    }

    pub fn hom(&self) -> Result<MonoidHom, CliError> {
        let h = self.file.hom.as_ref().ok_or_else(|| CliError::Input("the amitsur command needs a hom block".into()))?;
        let r = h.tau_generators.first().map_or(0, Vec::len);
        let tau = AffineMonoid::new(r, &h.tau_generators)?;
        Ok(hom_new(&tau, self.sigma(), &h.images)?)
    }
}
