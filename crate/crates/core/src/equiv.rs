//! Equivalence relations on affine toric varieties given by ideals I(x, y) in k[σ²].
//!
//! [`Relation`] holds an arbitrary ideal and checks the relation axioms;
//! [`ToricRelation`] additionally requires homogeneity for the diagonal torus
//! and supports [`effectivize`], which rewrites I as the ideal of differences
//! x^w − y^w over an explicit set W, processing degrees modulo units in
//! increasing order.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::ambient::Ambient;
use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::gb::{self, GbConfig, GroebnerBasis};
use crate::linalg::FMatrix;
use crate::monoid::{presentation, rbar, vadd, vneg, vsub, AffineMonoid, ToricPresentation};
use crate::poly::Polynomial;
use crate::tensor::{TensorMonomial, TensorPower, DEFAULT_FIBER_BUDGET};
use crate::torus::TorusRing;
use crate::zlin::Lattice;

/// A term `c · x^a y^b` of a polynomial in k[σ²].
pub type RawTerm = (Coef, Vec<i64>, Vec<i64>);

#[derive(Debug)]
pub struct Relation {
    ambient: Ambient,
    gens: Vec<Polynomial>,
    cfg: GbConfig,
    ideal: OnceLock<GroebnerBasis>,
}

impl Clone for Relation {
    fn clone(&self) -> Self {
        Relation { ambient: self.ambient.clone(), gens: self.gens.clone(), cfg: self.cfg.clone(), ideal: OnceLock::new() }
    }
}

impl Relation {
    pub fn new(pres: &ToricPresentation, gens: Vec<Polynomial>, cfg: &GbConfig) -> Result<Self> {
        let ambient = Ambient::new(pres, 2);
        if gens.iter().any(|g| g.nvars() != ambient.nvars() || g.field() != ambient.field()) {
            return Err(Error::InvalidAmbient);
        }
        Ok(Relation { ambient, gens, cfg: cfg.clone(), ideal: OnceLock::new() })
    }

    /// Builds the generators from terms `c·x^a y^b` with `a, b ∈ σ`.
    pub fn from_terms(pres: &ToricPresentation, raw: &[Vec<RawTerm>], cfg: &GbConfig) -> Result<Self> {
        let ambient = Ambient::new(pres, 2);
        let mut gens = Vec::with_capacity(raw.len());
        for g in raw {
            let mut p = ambient.zero();
            for (c, a, b) in g {
                let t = ambient.term(c.clone(), &[a.clone(), b.clone()]).map_err(|e| match e {
                    Error::NotInMonoid(v) => Error::InvalidInput(format!("exponent {v:?} is not in the monoid")),
                    other => other,
                })?;
                p = p.add(&t);
            }
            gens.push(p);
        }
        Relation::new(pres, gens, cfg)
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn sigma(&self) -> &AffineMonoid {
        self.ambient.sigma()
    }

    pub fn field(&self) -> Field {
        self.ambient.field()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.gens
    }

    pub fn config(&self) -> &GbConfig {
        &self.cfg
    }

    /// Gröbner basis of I together with the presentation relations.
    pub fn ideal(&self) -> Result<&GroebnerBasis> {
        if let Some(g) = self.ideal.get() {
            return Ok(g);
        }
        let g = self.ambient.groebner(&self.gens, &self.cfg)?;
        Ok(self.ideal.get_or_init(|| g))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.ideal()?.contains(f))
    }

    /// Terms of an element as `(c, a, b)`.
    pub fn raw_terms(&self, f: &Polynomial) -> Vec<RawTerm> {
        f.terms()
            .map(|(e, c)| {
                let d = self.ambient.copy_degrees(e);
                (c.clone(), d[0].clone(), d[1].clone())
            })
            .collect()
    }

    /// First generator with a torus-homogeneous component outside I, if any.
    pub fn toric_violation(&self) -> Result<Option<(usize, Polynomial)>> {
        for (i, g) in self.gens.iter().enumerate() {
            let comps = self.ambient.homogeneous_components(g);
            if comps.len() <= 1 {
                continue;
            }
            for (_, c) in comps {
                if !self.contains(&c)? {
                    return Ok(Some((i, c)));
                }
            }
        }
        Ok(None)
    }
}

/// An ideal homogeneous for the diagonal torus action.
#[derive(Clone, Debug)]
pub struct ToricRelation {
    rel: Relation,
    components: Vec<(Vec<i64>, Polynomial)>,
}

pub fn relation_new(pres: &ToricPresentation, raw: &[Vec<RawTerm>], cfg: &GbConfig) -> Result<ToricRelation> {
    ToricRelation::new(Relation::from_terms(pres, raw, cfg)?)
}

impl ToricRelation {
    pub fn new(rel: Relation) -> Result<Self> {
        if let Some((i, c)) = rel.toric_violation()? {
            let names = |v: usize| {
                let k = rel.ambient.k();
                format!("{}{}", if v < k { "x" } else { "y" }, v % k + 1)
            };
            return Err(Error::NotToric { generator: i, component: c.display_with(&names) });
        }
        let mut components = Vec::new();
        for g in &rel.gens {
            for (d, c) in rel.ambient.homogeneous_components(g) {
                if !c.is_zero() {
                    components.push((d, c));
                }
            }
        }
        Ok(ToricRelation { rel, components })
    }

    pub fn relation(&self) -> &Relation {
        &self.rel
    }

    pub fn components(&self) -> &[(Vec<i64>, Polynomial)] {
        &self.components
    }
}

/// Outcome of the four relation axioms; `None` when a budget ran out.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub reflexive: Option<bool>,
    pub symmetric: Option<bool>,
    pub transitive: Option<bool>,
    pub finite: Option<bool>,
    pub budget_errors: BTreeMap<String, String>,
}

impl AxiomReport {
    pub fn is_equivalence(&self) -> bool {
        self.reflexive == Some(true) && self.symmetric == Some(true) && self.transitive == Some(true)
    }
}

pub fn reflexive(rel: &Relation) -> Result<bool> {
    let one = rel.ambient.with_copies(1);
    let gb = one.groebner(&[], &rel.cfg)?;
    Ok(rel.gens.iter().all(|g| gb.contains(&one.substitute(g, &[0, 0]))))
}

/// I(y, x) ⊆ I(x, y); the swap is an involution, so this is equality.
pub fn symmetric(rel: &Relation) -> Result<bool> {
    let gb = rel.ideal()?;
    Ok(rel.gens.iter().all(|g| gb.contains(&rel.ambient.substitute(g, &[1, 0]))))
}

pub fn transitive(rel: &Relation) -> Result<bool> {
    let three = rel.ambient.with_copies(3);
    let mut gens: Vec<Polynomial> = rel.gens.iter().map(|g| three.substitute(g, &[0, 1])).collect();
    gens.extend(rel.gens.iter().map(|g| three.substitute(g, &[1, 2])));
    let gb = three.groebner(&gens, &rel.cfg)?;
    Ok(rel.gens.iter().all(|g| gb.contains(&three.substitute(g, &[0, 2]))))
}

pub fn finite(rel: &Relation) -> Result<bool> {
    let k = rel.ambient.k();
    let fiber: Vec<usize> = (k..2 * k).collect();
    let gens = rel.ambient.with_relations(&rel.gens);
    if gens.iter().all(Polynomial::is_zero) {
        return Ok(k == 0);
    }
    gb::finite_over_subring(&gens, &fiber, &rel.cfg)
}

pub fn verify_axioms(rel: &Relation) -> AxiomReport {
    let ((r, s), (t, f)) = rayon::join(
        || rayon::join(|| reflexive(rel), || symmetric(rel)),
        || rayon::join(|| transitive(rel), || finite(rel)),
    );
    let mut report = AxiomReport::default();
    let mut record = |name: &str, v: Result<bool>| -> Option<bool> {
        match v {
            Ok(b) => Some(b),
            Err(e) => {
                report.budget_errors.insert(name.to_string(), e.to_string());
                None
            }
        }
    };
    let (r, s, t, f) = (record("reflexive", r), record("symmetric", s), record("transitive", t), record("finite", f));
    report.reflexive = r;
    report.symmetric = s;
    report.transitive = t;
    report.finite = f;
    report
}

/// Degree-0 coefficients of g = p·x^γ + q·y^γ modulo the current difference ideal.
#[derive(Clone, Debug)]
pub struct PQForm {
    pub gamma: Vec<i64>,
    pub p: Vec<Polynomial>,
    pub q: Vec<Polynomial>,
}

/// Classifies every term of each generator (all of degree γ) as a unit
/// character times x^γ or times y^γ, using equality in σ ⊗_τ σ.
pub fn pq_normalize(tp: &TensorPower, amb: &Ambient, torus: &TorusRing, gamma: &[i64], gens: &[Polynomial]) -> Result<PQForm> {
    let zero = amb.sigma().zero();
    let at_x: TensorMonomial = vec![gamma.to_vec(), zero.clone()];
    let at_y: TensorMonomial = vec![zero, gamma.to_vec()];
    let mut ps = Vec::new();
    let mut qs = Vec::new();
    for g in gens {
        let mut p = Polynomial::zero(torus.field(), torus.nvars());
        let mut q = p.clone();
        for (e, c) in g.terms() {
            let m = amb.copy_degrees(e);
            if let Some(cs) = tp.unit_twist_solve(&m, &at_x)? {
                p = p.add(&torus.character(&cs.base)?.scale(c));
            } else if let Some(cs) = tp.unit_twist_solve(&m, &at_y)? {
                q = q.add(&torus.character(&cs.base)?.scale(c));
            } else {
                return Err(Error::InternalInvariantViolated(format!(
                    "term with bidegree {:?} is neither a unit multiple of x^{gamma:?} nor of y^{gamma:?}",
                    m
                )));
            }
        }
        ps.push(p);
        qs.push(q);
    }
    Ok(PQForm { gamma: gamma.to_vec(), p: ps, q: qs })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Dichotomy {
    /// x^{γ−s} ≡ y^{γ−s} modulo the difference ideal.
    Case1 { shift: Vec<i64> },
    /// x^γ and y^γ differ by no unit character.
    Case2,
}

pub fn dichotomy(tp: &TensorPower, gamma: &[i64]) -> Result<Dichotomy> {
    let zero = tp.sigma().zero();
    let c = tp.unit_twist_solve(&vec![gamma.to_vec(), zero.clone()], &vec![zero, gamma.to_vec()])?;
    Ok(match c {
        Some(c) => Dichotomy::Case1 { shift: c.base },
        None => Dichotomy::Case2,
    })
}

/// The lattice of (Ĩ : x^γ)₀: all s with u^s·x^γ ≡ x^γ.
pub fn j0_lattice(tp: &TensorPower, gamma: &[i64]) -> Result<Lattice> {
    let m: TensorMonomial = vec![gamma.to_vec(), tp.sigma().zero()];
    let c = tp
        .unit_twist_solve(&m, &m)?
        .ok_or_else(|| Error::InternalInvariantViolated("a monomial is not equal to itself".into()))?;
    Ok(c.lattice)
}

#[derive(Clone, Debug, Default)]
pub struct EffectivizeOptions {
    /// Skip the relation-axiom precondition.
    pub skip_axioms: bool,
    /// Check the three-copy colon lattices and, in the second case, the cocycle relations.
    pub check_lemmas: bool,
    pub fiber_budget: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaChecks {
    /// (Ĩ(x,y,z) : x^γ)₀ equals the colons by y^γ and z^γ and is invariant under permuting x, y, z.
    pub permutation_invariant: bool,
    /// That ideal equals J₀(x,y) + J₀(x,z) + J₀(y,z).
    pub pairwise_sum: bool,
    /// The cocycle relations among the P, Q, A, B matrices; only checked in the second case.
    pub cocycle_relations: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "kind")]
pub enum StepOutcome {
    AlreadyGenerated,
    Case1 { shift: Vec<i64> },
    Case2 { s1: Vec<i64> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassStep {
    pub gamma: Vec<i64>,
    pub generators: usize,
    pub outcome: StepOutcome,
    pub added: Vec<Vec<i64>>,
    pub lemma_checks: Option<LemmaChecks>,
}

#[derive(Clone, Debug)]
pub struct EffectiveModel {
    pub w: Vec<Vec<i64>>,
    pub tau: AffineMonoid,
    pub y_presentation: ToricPresentation,
    pub verified: bool,
    pub transcript: Vec<ClassStep>,
}

/// Generators of the submonoid τ: W together with negatives of units in W.
pub fn tau_generators(sigma: &AffineMonoid, w: &[Vec<i64>]) -> Result<Vec<Vec<i64>>> {
    let mut out = w.to_vec();
    for x in w {
        if sigma.units().contains_i64(x)? && !out.contains(&vneg(x)) {
            out.push(vneg(x));
        }
    }
    Ok(out)
}

/// The ideal of differences of `w` in the two-copy ambient.
pub fn difference_ideal(amb: &Ambient, w: &[Vec<i64>]) -> Result<Vec<Polynomial>> {
    w.iter().map(|x| amb.difference(x, 0, 1)).collect()
}

fn unit_shift(amb: &Ambient, g: &Polynomial, s: &[i64]) -> Result<Polynomial> {
    let m = amb.monomial(&[s.to_vec(), amb.sigma().zero()])?;
    Ok(g.mul(&m))
}

struct Step<'a> {
    amb: &'a Ambient,
    torus: TorusRing,
    cfg: &'a GbConfig,
    fiber_budget: usize,
    check_lemmas: bool,
}

impl Step<'_> {
    fn tensor(&self, w: &[Vec<i64>], n: usize) -> Result<TensorPower> {
        let sigma = self.amb.sigma();
        Ok(TensorPower::new(sigma, &tau_generators(sigma, w)?, n)?.with_fiber_budget(self.fiber_budget))
    }

    /// New elements of W for the class of γ, with the case taken.
    fn process(&self, tp: &TensorPower, gamma: &[i64], gens: &[Polynomial]) -> Result<(StepOutcome, Vec<Vec<i64>>, Option<bool>)> {
        let torus = &self.torus;
        let one = Polynomial::one(torus.field(), torus.nvars());
        match dichotomy(tp, gamma)? {
            Dichotomy::Case1 { shift } => {
                let g1 = vsub(gamma, &shift);
                let shifted: Vec<Polynomial> =
                    gens.iter().map(|g| unit_shift(self.amb, g, &vneg(&shift))).collect::<Result<_>>()?;
                let pq = pq_normalize(tp, self.amb, torus, &g1, &shifted)?;
                let mut ideal = torus.lattice_ideal(&j0_lattice(tp, &g1)?)?;
                ideal.extend(pq.p.iter().zip(&pq.q).map(|(p, q)| p.add(q)));
                let l = torus.difference_lattice(&ideal, self.cfg)?;
                let added = l.basis_i64()?.iter().map(|b| vadd(&g1, b)).collect();
                Ok((StepOutcome::Case1 { shift }, added, None))
            }
            Dichotomy::Case2 => {
                let pq = pq_normalize(tp, self.amb, torus, gamma, gens)?;
                let j0 = torus.lattice_ideal(&j0_lattice(tp, gamma)?)?;
                let mut pj = pq.p.clone();
                pj.extend(j0.iter().cloned());
                if !torus.is_unit_ideal(&pj, self.cfg)? {
                    return Err(Error::NotAnEquivalenceRelation(format!(
                        "at degree {gamma:?} the x-coefficients do not generate the unit ideal"
                    )));
                }
                let cof = gb::member_certify(&one, &torus.with_relations(&pj), self.cfg)?
                    .ok_or_else(|| Error::InternalInvariantViolated("unit ideal without a certificate".into()))?;
                let mut q1 = Polynomial::zero(torus.field(), torus.nvars());
                for (c, q) in cof.iter().zip(&pq.q) {
                    q1 = q1.add(&c.mul(q));
                }
                let mut jt: Vec<Polynomial> = pq.p.iter().zip(&pq.q).map(|(p, q)| q.sub(&p.mul(&q1))).collect();
                jt.extend(j0.iter().cloned());
                let l3 = torus.difference_lattice(&jt, self.cfg)?;
                let nf = torus.groebner(&jt, self.cfg)?.normal_form(&q1);
                let terms: Vec<_> = nf.terms().collect();
                let minus_one = torus.field().neg(&Coef::one());
                if terms.len() != 1 || *terms[0].1 != minus_one {
                    return Err(Error::InternalInvariantViolated(format!(
                        "at degree {gamma:?} the y-coefficient is not the negative of a character"
                    )));
                }
                let s1 = torus.exponent_of_monomial(terms[0].0);
                let base = vsub(gamma, &s1);
                let mut added = vec![base.clone()];
                added.extend(l3.basis_i64()?.iter().map(|b| vadd(&base, b)));
                let cocycle = if self.check_lemmas { Some(self.cocycle_relations(tp, gamma, gens, &pq)?) } else { None };
                Ok((StepOutcome::Case2 { s1 }, added, cocycle))
            }
        }
    }

    /// Recovers the A, B matrices from a membership certificate of the
    /// transitivity identity and checks the three relations they satisfy with P and Q.
    fn cocycle_relations(&self, tp: &TensorPower, gamma: &[i64], gens: &[Polynomial], pq: &PQForm) -> Result<bool> {
        let three = self.amb.with_copies(3);
        let m = gens.len();
        let w = tp.tau().to_vec();
        let mut basis: Vec<Polynomial> = gens.iter().map(|g| three.substitute(g, &[0, 1])).collect();
        basis.extend(gens.iter().map(|g| three.substitute(g, &[1, 2])));
        for x in &w {
            for (a, b) in [(0, 1), (1, 2), (0, 2)] {
                basis.push(three.difference(x, a, b)?);
            }
        }
        let basis = three.with_relations(&basis);
        let d = self.amb.sigma().rank();
        let units = self.amb.sigma().units();
        let pair_units = Lattice::from_generators_big(
            2 * d,
            &units
                .basis()
                .iter()
                .flat_map(|b| {
                    let z = vec![num_bigint::BigInt::zero(); d];
                    [[b.clone(), z.clone()].concat(), [z, b.clone()].concat()]
                })
                .collect::<Vec<_>>(),
        )?;
        let t2 = TorusRing::new(self.torus.field(), &pair_units)?;
        let l0 = j0_lattice(tp, gamma)?;
        let l0_pairs = Lattice::from_generators_big(
            2 * d,
            &l0.basis()
                .iter()
                .flat_map(|b| {
                    let z = vec![num_bigint::BigInt::zero(); d];
                    [[b.clone(), z.clone()].concat(), [z, b.clone()].concat()]
                })
                .collect::<Vec<_>>(),
        )?;
        let rel_gb = t2.groebner(&t2.lattice_ideal(&l0_pairs)?, self.cfg)?;
        // Embeds a degree-0 element of k[σ³] as a function of (u, v).
        let to_uv = |f: &Polynomial| -> Result<Polynomial> {
            let mut out = Polynomial::zero(t2.field(), t2.nvars());
            for (e, c) in f.terms() {
                let degs = three.copy_degrees(e);
                let s = [degs[0].clone(), vadd(&degs[0], &degs[1])].concat();
                out = out.add(&t2.character(&s)?.scale(c));
            }
            Ok(out)
        };
        // p(u), p(v), p(uv) from an element of the one-copy torus ring.
        let lift = |f: &Polynomial, which: u8| -> Result<Polynomial> {
            let mut out = Polynomial::zero(t2.field(), t2.nvars());
            for (e, c) in f.terms() {
                let s = self.torus.exponent_of_monomial(e);
                let z = vec![0i64; d];
                let st = match which {
                    0 => [s.clone(), z].concat(),
                    1 => [z, s.clone()].concat(),
                    _ => [s.clone(), s.clone()].concat(),
                };
                out = out.add(&t2.character(&st)?.scale(c));
            }
            Ok(out)
        };
        let degree_zero = |f: &Polynomial| -> Polynomial {
            f.split_by(|e| three.degree(e)).remove(&self.amb.sigma().zero()).unwrap_or_else(|| three.zero())
        };
        let mut a = vec![vec![Polynomial::zero(t2.field(), t2.nvars()); m]; m];
        let mut b = a.clone();
        for (i, g) in gens.iter().enumerate() {
            let target = three.substitute(g, &[0, 2]);
            let cof = gb::member_certify(&target, &basis, self.cfg)?
                .ok_or_else(|| Error::NotAnEquivalenceRelation("transitivity fails in the current degree".into()))?;
            for j in 0..m {
                a[i][j] = to_uv(&degree_zero(&cof[j]))?;
                b[i][j] = to_uv(&degree_zero(&cof[m + j]))?;
            }
        }
        let mut ok = true;
        for i in 0..m {
            let mut r8 = lift(&pq.p[i], 2)?;
            let mut r9 = Polynomial::zero(t2.field(), t2.nvars());
            let mut r10 = lift(&pq.q[i], 2)?;
            for j in 0..m {
                r8 = r8.sub(&a[i][j].mul(&lift(&pq.p[j], 0)?));
                r9 = r9.add(&a[i][j].mul(&lift(&pq.q[j], 0)?)).add(&b[i][j].mul(&lift(&pq.p[j], 1)?));
                r10 = r10.sub(&b[i][j].mul(&lift(&pq.q[j], 1)?));
            }
            ok &= rel_gb.contains(&r8) && rel_gb.contains(&r9) && rel_gb.contains(&r10);
        }
        Ok(ok)
    }

    /// Three-copy colon lattices at (γ,0,0), (0,γ,0), (0,0,γ).
    fn permutation_checks(&self, tp: &TensorPower, gamma: &[i64]) -> Result<(bool, bool)> {
        let d = self.amb.sigma().rank();
        let t3 = tp.with_power(3)?;
        let z = self.amb.sigma().zero();
        let place = |k: usize| -> TensorMonomial {
            let mut m = vec![z.clone(); 3];
            m[k] = gamma.to_vec();
            m
        };
        let s: Vec<Lattice> = (0..3).map(|k| t3.stabilizer(&place(k))).collect::<Result<_>>()?;
        let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let permute = |l: &Lattice, p: &[usize; 3]| -> Result<Lattice> {
            let rows: Vec<Vec<i64>> = l
                .basis_i64()?
                .iter()
                .map(|v| {
                    let mut out = vec![0i64; 3 * d];
                    for (slot, &to) in p.iter().enumerate() {
                        out[to * d..(to + 1) * d].copy_from_slice(&v[slot * d..(slot + 1) * d]);
                    }
                    out
                })
                .collect();
            Lattice::from_generators(3 * d, &rows)
        };
        let mut invariant = s[1] == s[0] && s[2] == s[0];
        for p in &perms {
            invariant &= permute(&s[0], p)? == s[0];
        }
        let l0 = j0_lattice(tp, gamma)?;
        let mut rows = Vec::new();
        for b in l0.basis_i64()? {
            for (x, y) in [(0, 1), (0, 2), (1, 2)] {
                let mut v = vec![0i64; 3 * d];
                v[x * d..(x + 1) * d].copy_from_slice(&b);
                v[y * d..(y + 1) * d].copy_from_slice(&vneg(&b));
                rows.push(v);
            }
        }
        let pairwise = Lattice::from_generators(3 * d, &rows)? == s[0];
        Ok((invariant, pairwise))
    }
}

/// Rewrites a toric equivalence relation as the ideal of differences over W.
pub fn effectivize(rel: &ToricRelation, opts: &EffectivizeOptions) -> Result<EffectiveModel> {
    let r = &rel.rel;
    let cfg = &r.cfg;
    if !opts.skip_axioms {
        for (name, check) in [("reflexive", reflexive as fn(&Relation) -> Result<bool>), ("symmetric", symmetric), ("transitive", transitive)] {
            if !check(r)? {
                return Err(Error::NotAnEquivalenceRelation(format!("the {name} axiom fails")));
            }
        }
    }
    let amb = &r.ambient;
    let sigma = amb.sigma();
    let q = rbar(sigma)?;
    let mut classes: BTreeMap<Vec<i64>, Vec<(Vec<i64>, Polynomial)>> = BTreeMap::new();
    for (deg, c) in &rel.components {
        classes.entry(q.class_rep(deg)).or_default().push((deg.clone(), c.clone()));
    }
    let mut order: Vec<Vec<i64>> = classes.keys().cloned().collect();
    order.sort_by(|a, b| q.linear_cmp(a, b));

    let step = Step {
        amb,
        torus: TorusRing::new(r.field(), sigma.units())?,
        cfg,
        fiber_budget: opts.fiber_budget.unwrap_or(DEFAULT_FIBER_BUDGET),
        check_lemmas: opts.check_lemmas,
    };
    let mut w: Vec<Vec<i64>> = Vec::new();
    let mut tilde = amb.groebner(&[], cfg)?;
    let mut transcript = Vec::new();
    for gamma in order {
        let comps = &classes[&gamma];
        let mut gens = Vec::new();
        for (deg, c) in comps {
            let g = unit_shift(amb, c, &vsub(&gamma, deg))?;
            let nf = tilde.normal_form(&g);
            if !nf.is_zero() {
                gens.push(nf);
            }
        }
        if gens.is_empty() {
            transcript.push(ClassStep {
                gamma,
                generators: comps.len(),
                outcome: StepOutcome::AlreadyGenerated,
                added: Vec::new(),
                lemma_checks: None,
            });
            continue;
        }
        let tp = step.tensor(&w, 2)?;
        let (outcome, candidates, cocycle) = step.process(&tp, &gamma, &gens)?;
        let lemma_checks = if opts.check_lemmas {
            let (invariant, pairwise) = step.permutation_checks(&tp, &gamma)?;
            if !invariant || !pairwise {
                return Err(Error::InternalInvariantViolated(format!(
                    "three-copy colon lattices at degree {gamma:?} are not symmetric"
                )));
            }
            if cocycle == Some(false) {
                return Err(Error::InternalInvariantViolated(format!(
                    "cocycle relations fail at degree {gamma:?}"
                )));
            }
            Some(LemmaChecks { permutation_invariant: invariant, pairwise_sum: pairwise, cocycle_relations: cocycle })
        } else {
            None
        };
        let mut added = Vec::new();
        for x in candidates {
            if !tilde.contains(&amb.difference(&x, 0, 1)?) {
                w.push(x.clone());
                added.push(x);
                tilde = amb.groebner(&difference_ideal(amb, &w)?, cfg)?;
            }
        }
        if !tilde.contains_all(&gens) {
            return Err(Error::InternalInvariantViolated(format!(
                "new differences at degree {gamma:?} do not generate the relation there"
            )));
        }
        transcript.push(ClassStep { gamma, generators: comps.len(), outcome, added, lemma_checks });
    }
    let verified = tilde.contains_all(&r.gens) && r.ideal()?.contains_all(&difference_ideal(amb, &w)?);
    let zero = sigma.zero();
    let mut tgens = tau_generators(sigma, &w)?;
    if tgens.is_empty() {
        tgens.push(zero);
    }
    let tau = AffineMonoid::new(sigma.rank(), &tgens)?;
    let y_presentation = presentation(&tau, r.field(), cfg)?;
    Ok(EffectiveModel { w, tau, y_presentation, verified, transcript })
}

/// Elements of σ of height at most `bound` (pointed σ only).
pub fn monomials_up_to(sigma: &AffineMonoid, bound: i64) -> Result<Vec<Vec<i64>>> {
    if !sigma.is_pointed() {
        return Err(Error::NonPointedUnsupported);
    }
    let mut seen = std::collections::BTreeSet::new();
    let mut stack = vec![sigma.zero()];
    seen.insert(sigma.zero());
    while let Some(s) = stack.pop() {
        for g in sigma.generators() {
            let t = vadd(&s, g);
            if sigma.height(&t) <= bound && seen.insert(t.clone()) {
                stack.push(t);
            }
        }
    }
    let mut out: Vec<Vec<i64>> = seen.into_iter().collect();
    out.sort_by_key(|s| (sigma.height(s), s.clone()));
    Ok(out)
}

/// A basis of invariant functions: linear combinations `Σ c_s x^s`.
#[derive(Clone, Debug)]
pub struct InvariantFunctions {
    pub bound: i64,
    pub functions: Vec<Vec<(Coef, Vec<i64>)>>,
}

fn height_homogeneous(rel: &Relation, g: &Polynomial) -> Option<i64> {
    let sigma = rel.sigma();
    let mut h = None;
    for (e, _) in g.terms() {
        let d = rel.ambient.copy_degrees(e);
        let v = sigma.height(&d[0]) + sigma.height(&d[1]);
        match h {
            None => h = Some(v),
            Some(x) if x != v => return None,
            _ => {}
        }
    }
    h.or(Some(0))
}

/// Whether every generator is homogeneous for the height grading on both copies.
pub fn is_height_graded(rel: &Relation) -> bool {
    rel.gens.iter().all(|g| height_homogeneous(rel, g).is_some())
}

/// `{f ∈ k[σ] : height ≤ bound, f(x) − f(y) ∈ I}`, solved per height slice when I is graded.
pub fn invariant_functions(rel: &Relation, bound: i64) -> Result<InvariantFunctions> {
    let sigma = rel.sigma();
    let field = rel.field();
    let monos = monomials_up_to(sigma, bound)?;
    let gb = rel.ideal()?;
    let graded = is_height_graded(rel);
    let mut slices: BTreeMap<i64, Vec<Vec<i64>>> = BTreeMap::new();
    for s in monos {
        let key = if graded { sigma.height(&s) } else { 0 };
        slices.entry(key).or_default().push(s);
    }
    let mut functions = Vec::new();
    for (_, slice) in slices {
        let nfs: Vec<Polynomial> =
            slice.iter().map(|s| Ok(gb.normal_form(&rel.ambient.difference(s, 0, 1)?))).collect::<Result<_>>()?;
        let mut rows: BTreeMap<Vec<u32>, Vec<Coef>> = BTreeMap::new();
        for (j, nf) in nfs.iter().enumerate() {
            for (e, c) in nf.terms() {
                rows.entry(e.clone()).or_insert_with(|| vec![Coef::zero(); slice.len()])[j] = c.clone();
            }
        }
        let m = FMatrix::from_rows(field, slice.len(), rows.into_values().collect());
        for v in m.kernel() {
            let f: Vec<(Coef, Vec<i64>)> =
                v.into_iter().zip(&slice).filter(|(c, _)| !c.is_zero()).map(|(c, s)| (c, s.clone())).collect();
            functions.push(f);
        }
    }
    Ok(InvariantFunctions { bound, functions })
}

#[derive(Clone, Debug)]
pub struct NoneffectiveCertificate {
    pub holds: bool,
    pub bound: i64,
    pub basis: InvariantFunctions,
}

/// Proves `g ∈ I` is not in the ideal generated by differences of invariant
/// functions; for a graded I and g of height `bound` this shows I is not
/// generated by differences at all.
pub fn certify_noneffective(rel: &Relation, g: &Polynomial, bound: i64) -> Result<NoneffectiveCertificate> {
    if !rel.contains(g)? {
        return Err(Error::GNotInI);
    }
    if !is_height_graded(rel) {
        return Err(Error::InvalidInput("the ideal is not graded by height".into()));
    }
    match height_homogeneous(rel, g) {
        Some(h) if h == bound => {}
        _ => return Err(Error::InvalidInput(format!("the element is not homogeneous of degree {bound}"))),
    }
    let basis = invariant_functions(rel, bound)?;
    let amb = &rel.ambient;
    let mut diffs = Vec::new();
    for f in &basis.functions {
        let mut p = amb.zero();
        for (c, s) in f {
            p = p.add(&amb.difference(s, 0, 1)?.scale(c));
        }
        if !p.is_zero() {
            diffs.push(p);
        }
    }
    let holds = !amb.groebner(&diffs, &rel.cfg)?.contains(g);
    Ok(NoneffectiveCertificate { holds, bound, basis })
}
