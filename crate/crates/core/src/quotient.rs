//! Invariant monoids, module-finiteness and the effective geometric quotient.

use serde::Serialize;

use crate::ambient::Ambient;
use crate::equiv::{difference_ideal, effectivize, monomials_up_to, EffectiveModel, EffectivizeOptions, ToricRelation};
use crate::error::{Error, Result};
use crate::gb::{self, CompareMode};
use crate::monoid::{dot, presentation, AffineMonoid, ToricPresentation};
use crate::poly::Polynomial;
use crate::zlin::{Index, Lattice};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InvariantMonoid {
    pub bound: i64,
    /// Minimal generators of the truncated invariant monoid, by increasing height.
    pub generators: Vec<Vec<i64>>,
    /// No generator appeared in the last two height layers. A heuristic, not a proof.
    pub stabilized: bool,
}

/// `{s ∈ σ : height(s) ≤ bound, x^s − y^s ∈ I}` reduced to monoid generators.
pub fn invariant_monoid(rel: &ToricRelation, bound: i64) -> Result<InvariantMonoid> {
    let r = rel.relation();
    let sigma = r.sigma();
    let amb = r.ambient();
    let mut generators: Vec<Vec<i64>> = Vec::new();
    let mut span: Option<AffineMonoid> = None;
    for s in monomials_up_to(sigma, bound)? {
        if s.iter().all(|&x| x == 0) || !r.contains(&amb.difference(&s, 0, 1)?)? {
            continue;
        }
        let covered = match &span {
            Some(m) => m.contains_bool(&s)?,
            None => false,
        };
        if !covered {
            generators.push(s);
            span = Some(AffineMonoid::new(sigma.rank(), &generators)?);
        }
    }
    let stabilized = generators.iter().all(|g| sigma.height(g) < bound - 1);
    Ok(InvariantMonoid { bound, generators, stabilized })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Finiteness {
    pub cone_equal: bool,
    /// `None` when grp(τ′) has infinite index in grp(σ).
    pub group_index: Option<String>,
    /// Generators of σ outside cone(τ′).
    pub missing_rays: Vec<Vec<i64>>,
}

impl Finiteness {
    pub fn is_finite(&self) -> bool {
        self.cone_equal && self.group_index.is_some()
    }
}

fn in_cone_of(tau: &AffineMonoid, v: &[i64]) -> Result<bool> {
    if !tau.in_cone(v) {
        return Ok(false);
    }
    let with_v = tau.grp().sum(&Lattice::from_generators(v.len(), &[v.to_vec()])?)?;
    Ok(with_v.rank() == tau.grp().rank())
}

/// Whether k[σ] is a finite k[τ′]-module: equal cones and finite index.
pub fn finiteness(tau_gens: &[Vec<i64>], sigma: &AffineMonoid) -> Result<Finiteness> {
    for t in tau_gens {
        if !sigma.contains_bool(t)? {
            return Err(Error::NotASubmonoid(format!("{t:?} is not in σ")));
        }
    }
    let gens: Vec<Vec<i64>> = if tau_gens.is_empty() { vec![sigma.zero()] } else { tau_gens.to_vec() };
    let tau = AffineMonoid::new(sigma.rank(), &gens)?;
    let mut missing_rays = Vec::new();
    for g in sigma.generators() {
        if !in_cone_of(&tau, g)? {
            missing_rays.push(g.clone());
        }
    }
    let q = tau.grp().quotient_in(sigma.grp())?;
    let group_index = match q.index {
        Index::Finite(n) => Some(n.to_string()),
        Index::Infinite => None,
    };
    Ok(Finiteness { cone_equal: missing_rays.is_empty(), group_index, missing_rays })
}

/// A facet of cone(σ) whose face meets τ′ only in 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConeCertificate {
    pub facet: Vec<i64>,
    pub missing_ray: Vec<i64>,
    /// I restricted to the face is generated by the presentation relations, so
    /// no x^s − y^s with s ≠ 0 in the face lies in I, at any degree.
    pub face_restriction_trivial: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum Verdict {
    EffectiveGeometricQuotient,
    NoFiniteQuotient { certificate: ConeCertificate },
    Inconclusive { bound: i64, reason: String },
}

#[derive(Clone, Debug)]
pub struct QuotientReport {
    pub model: EffectiveModel,
    pub invariants: InvariantMonoid,
    pub finiteness: Finiteness,
    pub tau_in_tau_prime: bool,
    /// Difference ideal of τ′ equals I.
    pub difference_ideal_equal: bool,
    /// k[σ] is finite over k[τ′] by an elimination check on the graph ideal.
    pub graph_finite: Option<bool>,
    pub y_presentation: Option<ToricPresentation>,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, Default)]
pub struct QuotientOptions {
    /// Height bound for the invariant monoid; defaults to the largest height in W plus two, at least 4.
    pub bound: Option<i64>,
    pub effectivize: EffectivizeOptions,
}

fn face_certificate(rel: &ToricRelation, tau: &[Vec<i64>], ray: &[i64]) -> Result<Option<ConeCertificate>> {
    let r = rel.relation();
    let sigma = r.sigma();
    let Some(facet) = sigma
        .facets()
        .iter()
        .find(|f| dot(f, ray) == 0 && tau.iter().all(|t| dot(f, t) > 0))
        .cloned()
    else {
        return Ok(None);
    };
    let amb = r.ambient();
    let k = amb.k();
    let mut vars = Vec::new();
    for (j, g) in sigma.generators().iter().enumerate() {
        if dot(&facet, g) > 0 {
            for c in 0..2 {
                vars.push(Polynomial::variable(amb.field(), amb.nvars(), c * k + j));
            }
        }
    }
    let base = amb.with_relations(&vars);
    let mut with_i = base.clone();
    with_i.extend(r.generators().iter().cloned());
    let trivial = gb::ideal_compare(&base, &with_i, amb.field(), amb.nvars(), CompareMode::Contains, r.config())?;
    Ok(Some(ConeCertificate { facet, missing_ray: ray.to_vec(), face_restriction_trivial: trivial }))
}

fn graph_finite(sigma_pres: &ToricPresentation, y: &ToricPresentation, tau: &[Vec<i64>], cfg: &gb::GbConfig) -> Result<bool> {
    let k = sigma_pres.nvars;
    let m = y.nvars;
    let n = k + m;
    let field = sigma_pres.field;
    let x_map: Vec<usize> = (0..k).collect();
    let z_map: Vec<usize> = (k..n).collect();
    let mut gens: Vec<Polynomial> = sigma_pres.ideal.iter().map(|g| g.rename(n, &x_map)).collect();
    gens.extend(y.ideal.iter().map(|g| g.rename(n, &z_map)));
    for (j, t) in tau.iter().enumerate() {
        let e = sigma_pres.monoid.exponent_of(t)?;
        let xt = Polynomial::monomial(field, e).rename(n, &x_map);
        gens.push(Polynomial::variable(field, n, k + j).sub(&xt));
    }
    gb::finite_over_subring(&gens, &x_map, cfg)
}

/// Effectivizes R, computes the invariant monoid and decides module-finiteness.
pub fn quotient_compute(rel: &ToricRelation, opts: &QuotientOptions) -> Result<QuotientReport> {
    let r = rel.relation();
    let sigma = r.sigma();
    let cfg = r.config();
    let model = effectivize(rel, &opts.effectivize)?;
    let default_bound = model.w.iter().map(|w| sigma.height(w)).max().unwrap_or(0) + 2;
    let bound = opts.bound.unwrap_or(default_bound.max(4));
    let invariants = invariant_monoid(rel, bound)?;
    let tp_gens = &invariants.generators;
    let fin = finiteness(tp_gens, sigma)?;
    let tau_prime = AffineMonoid::new(sigma.rank(), &if tp_gens.is_empty() { vec![sigma.zero()] } else { tp_gens.clone() })?;
    let mut tau_in_tau_prime = true;
    for w in &model.w {
        tau_in_tau_prime &= tau_prime.contains_bool(w)?;
    }
    let amb: &Ambient = r.ambient();
    let diff = difference_ideal(amb, tp_gens)?;
    let difference_ideal_equal = gb::ideal_compare(
        &amb.with_relations(r.generators()),
        &amb.with_relations(&diff),
        amb.field(),
        amb.nvars(),
        CompareMode::Equal,
        cfg,
    )?;
    let mut graph = None;
    let mut y_presentation = None;
    let verdict = if !fin.cone_equal {
        let ray = fin.missing_rays[0].clone();
        match face_certificate(rel, tp_gens, &ray)? {
            Some(c) if c.face_restriction_trivial => Verdict::NoFiniteQuotient { certificate: c },
            _ => Verdict::Inconclusive {
                bound,
                reason: format!("cone of the truncated invariant monoid misses {ray:?}, without a proof at all degrees"),
            },
        }
    } else if !invariants.stabilized {
        Verdict::Inconclusive { bound, reason: "invariant generators still appear near the bound".into() }
    } else if !fin.is_finite() {
        Verdict::Inconclusive { bound, reason: "invariant lattice has infinite index".into() }
    } else if !model.verified || !difference_ideal_equal {
        Verdict::Inconclusive { bound, reason: "the relation is not the difference ideal of the invariants".into() }
    } else {
        let y = presentation(&tau_prime, r.field(), cfg)?;
        let gens: Vec<Vec<i64>> = tau_prime.generators().to_vec();
        let g = graph_finite(amb.presentation(), &y, &gens, cfg)?;
        graph = Some(g);
        y_presentation = Some(y);
        if g {
            Verdict::EffectiveGeometricQuotient
        } else {
            return Err(Error::InternalInvariantViolated("equal cones but the graph is not finite".into()));
        }
    };
    Ok(QuotientReport {
        model,
        invariants,
        finiteness: fin,
        tau_in_tau_prime,
        difference_ideal_equal,
        graph_finite: graph,
        y_presentation,
        verdict,
    })
}
