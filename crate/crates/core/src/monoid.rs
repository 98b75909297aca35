//! Affine monoids inside ℤ^d.
//!
//! An [`AffineMonoid`] caches the group it generates, its unit group, and the
//! facet inequalities of its cone. The reduced monoid (modulo units) and its
//! partial order live in [`QuotientMonoid`]; [`presentation`] realizes the
//! monoid ring as a quotient of a polynomial ring.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};

use itertools::Itertools;
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{self, GbConfig};
use crate::poly::{Exponent, MonomialOrder, Polynomial};
use crate::zlin::{big_vec, left_kernel, solve_integer, to_i64_vec, IntMatrix, Lattice};

/// Default node budget for membership searches.
pub const DEFAULT_MEMBERSHIP_BUDGET: usize = 1_000_000;

pub fn dot(a: &[i64], b: &[i64]) -> i64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn vadd(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vsub(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vneg(a: &[i64]) -> Vec<i64> {
    a.iter().map(|x| -x).collect()
}

#[derive(Clone, Debug)]
pub struct AffineMonoid {
    d: usize,
    generators: Vec<Vec<i64>>,
    grp: Lattice,
    units: Lattice,
    unit_gens: Vec<usize>,
    facets: Vec<Vec<i64>>,
    /// A relation `Σ c_j u_j = 0` among the unit generators with every `c_j ≥ 1`.
    positive_unit_relation: Vec<u64>,
    budget: usize,
}

impl PartialEq for AffineMonoid {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d && self.generators == other.generators
    }
}

impl AffineMonoid {
    /// Builds the monoid generated by `generators`; zero vectors and duplicates are dropped.
    pub fn new(d: usize, generators: &[Vec<i64>]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyGenerators);
        }
        let mut gens: Vec<Vec<i64>> = Vec::new();
        for g in generators {
            if g.len() != d {
                return Err(Error::DimensionMismatch { expected: d, found: g.len() });
            }
            if g.iter().any(|&x| x != 0) && !gens.contains(g) {
                gens.push(g.clone());
            }
        }
        let grp = Lattice::from_generators(d, &gens)?;
        let facets = facets_of(d, &gens, &grp)?;
        let unit_gens: Vec<usize> =
            (0..gens.len()).filter(|&j| facets.iter().all(|f| dot(f, &gens[j]) == 0)).collect();
        let ugens: Vec<Vec<i64>> = unit_gens.iter().map(|&j| gens[j].clone()).collect();
        let units = Lattice::from_generators(d, &ugens)?;
        let positive_unit_relation = positive_relation(d, &ugens, DEFAULT_MEMBERSHIP_BUDGET)?;
        Ok(AffineMonoid {
            d,
            generators: gens,
            grp,
            units,
            unit_gens,
            facets,
            positive_unit_relation,
            budget: DEFAULT_MEMBERSHIP_BUDGET,
        })
    }

    pub fn with_budget(mut self, budget: usize) -> Self {
        self.budget = budget;
        self
    }

    pub fn rank(&self) -> usize {
        self.d
    }

    pub fn generators(&self) -> &[Vec<i64>] {
        &self.generators
    }

    pub fn grp(&self) -> &Lattice {
        &self.grp
    }

    /// The unit group l(σ).
    pub fn units(&self) -> &Lattice {
        &self.units
    }

    /// Indices of the generators that are units.
    pub fn unit_generators(&self) -> &[usize] {
        &self.unit_gens
    }

    pub fn is_pointed(&self) -> bool {
        self.units.rank() == 0
    }

    /// Primitive inner normals of the facets of cone(σ), as functionals on ℤ^d.
    pub fn facets(&self) -> &[Vec<i64>] {
        &self.facets
    }

    /// Sum of the facet functionals: zero on units, positive on every other generator.
    pub fn height(&self, v: &[i64]) -> i64 {
        self.facets.iter().map(|f| dot(f, v)).sum()
    }

    pub fn in_cone(&self, v: &[i64]) -> bool {
        self.facets.iter().all(|f| dot(f, v) >= 0)
    }

    pub fn zero(&self) -> Vec<i64> {
        vec![0; self.d]
    }

    fn check(&self, v: &[i64]) -> Result<()> {
        if v.len() != self.d {
            return Err(Error::DimensionMismatch { expected: self.d, found: v.len() });
        }
        Ok(())
    }

    /// Multiplicities `m` with `Σ m_j g_j = v`, or `None` when `v ∉ σ`.
    pub fn contains(&self, v: &[i64]) -> Result<Option<Vec<u64>>> {
        self.check(v)?;
        if !self.grp.contains_i64(v)? || !self.in_cone(v) {
            return Ok(None);
        }
        let nonunit: Vec<usize> = (0..self.generators.len()).filter(|j| !self.unit_gens.contains(j)).collect();
        let mut mult = vec![0u64; self.generators.len()];
        let mut nodes = 0usize;
        let found = self.search(&nonunit, 0, v.to_vec(), &mut mult, &mut nodes)?;
        Ok(found.then_some(mult))
    }

    pub fn contains_bool(&self, v: &[i64]) -> Result<bool> {
        Ok(self.contains(v)?.is_some())
    }

    fn search(&self, order: &[usize], k: usize, rest: Vec<i64>, mult: &mut Vec<u64>, nodes: &mut usize) -> Result<bool> {
        *nodes += 1;
        if *nodes > self.budget {
            return Err(Error::BudgetExceeded(self.budget));
        }
        if k == order.len() {
            return self.unit_witness(&rest, mult);
        }
        let g = &self.generators[order[k]];
        let mut max = i64::MAX;
        for f in &self.facets {
            let (fv, fg) = (dot(f, &rest), dot(f, g));
            if fg > 0 {
                max = max.min(fv / fg);
            }
        }
        debug_assert!(max != i64::MAX, "non-unit generator has positive height");
        for m in (0..=max).rev() {
            let next: Vec<i64> = rest.iter().zip(g).map(|(r, x)| r - m * x).collect();
            if k + 1 == order.len() && self.height(&next) != 0 {
                continue;
            }
            mult[order[k]] = m as u64;
            if self.search(order, k + 1, next, mult, nodes)? {
                return Ok(true);
            }
        }
        mult[order[k]] = 0;
        Ok(false)
    }

    /// Writes `r` as an ℕ-combination of unit generators, adding into `mult`.
    fn unit_witness(&self, r: &[i64], mult: &mut [u64]) -> Result<bool> {
        if r.iter().all(|&x| x == 0) {
            return Ok(true);
        }
        if self.unit_gens.is_empty() || !self.units.contains_i64(r)? {
            return Ok(false);
        }
        let cols: Vec<Vec<i64>> = (0..self.d)
            .map(|i| self.unit_gens.iter().map(|&j| self.generators[j][i]).collect())
            .collect();
        let a = IntMatrix::from_i64_rows(self.unit_gens.len(), &cols)?;
        let (x, _) = solve_integer(&a, &big_vec(r))?.ok_or(Error::InternalInvariantViolated(
            "unit lattice member without integer coordinates".into(),
        ))?;
        let x = to_i64_vec(&x)?;
        let c = &self.positive_unit_relation;
        let shift = x
            .iter()
            .zip(c)
            .map(|(&xi, &ci)| if xi < 0 { (-xi + ci as i64 - 1) / ci as i64 } else { 0 })
            .max()
            .unwrap_or(0);
        for ((&j, &xi), &ci) in self.unit_gens.iter().zip(&x).zip(c) {
            mult[j] += (xi + shift * ci as i64) as u64;
        }
        Ok(true)
    }

    /// Sum of generators weighted by multiplicities.
    pub fn combine(&self, mult: &[u64]) -> Vec<i64> {
        let mut out = vec![0; self.d];
        for (m, g) in mult.iter().zip(&self.generators) {
            for (o, x) in out.iter_mut().zip(g) {
                *o += *m as i64 * x;
            }
        }
        out
    }

    /// The σ-degree of a monomial in the presentation variables.
    pub fn degree_of_exponent(&self, e: &[u32]) -> Vec<i64> {
        let m: Vec<u64> = e.iter().map(|&x| x as u64).collect();
        self.combine(&m)
    }

    /// Exponent of some monomial of degree `v` in the presentation variables.
    pub fn exponent_of(&self, v: &[i64]) -> Result<Exponent> {
        let m = self.contains(v)?.ok_or_else(|| Error::NotInMonoid(v.to_vec()))?;
        m.iter().map(|&x| u32::try_from(x).map_err(|_| Error::Overflow)).collect()
    }
}

/// Facet normals of cone(gens), enumerated from subsets of rank-1-less generators
/// within the span.
fn facets_of(d: usize, gens: &[Vec<i64>], grp: &Lattice) -> Result<Vec<Vec<i64>>> {
    let dim = grp.rank();
    if dim == 0 {
        return Ok(Vec::new());
    }
    // Orthogonal complement of the span.
    let bt: Vec<Vec<BigInt>> = (0..d).map(|i| grp.basis().iter().map(|r| r[i].clone()).collect()).collect();
    let perp = left_kernel(&IntMatrix::from_rows(grp.rank(), &bt)?);
    let mut out: BTreeSet<Vec<i64>> = BTreeSet::new();
    for subset in (0..gens.len()).combinations(dim - 1) {
        // Columns: chosen generators and the complement basis.
        let mut cols: Vec<Vec<BigInt>> = subset.iter().map(|&j| big_vec(&gens[j])).collect();
        cols.extend(perp.basis().iter().cloned());
        let rows: Vec<Vec<BigInt>> = (0..d).map(|i| cols.iter().map(|c| c[i].clone()).collect()).collect();
        let ker = left_kernel(&IntMatrix::from_rows(cols.len(), &rows)?);
        if ker.rank() != 1 {
            continue;
        }
        let mut a = to_i64_vec(&ker.basis()[0])?;
        let vals: Vec<i64> = gens.iter().map(|g| dot(&a, g)).collect();
        let pos = vals.iter().any(|&v| v > 0);
        let neg = vals.iter().any(|&v| v < 0);
        if pos && neg {
            continue;
        }
        if neg {
            a = vneg(&a);
        }
        out.insert(a);
    }
    Ok(out.into_iter().collect())
}

/// A relation with all coefficients positive among generators spanning a group.
fn positive_relation(d: usize, gens: &[Vec<i64>], budget: usize) -> Result<Vec<u64>> {
    let mut c = vec![0u64; gens.len()];
    for (j, g) in gens.iter().enumerate() {
        let w = bfs_combination(d, gens, &vneg(g), budget)?;
        c[j] += 1;
        for (ci, wi) in c.iter_mut().zip(w) {
            *ci += wi;
        }
    }
    Ok(c)
}

/// Breadth-first search for an ℕ-combination of `gens` equal to `target`.
fn bfs_combination(d: usize, gens: &[Vec<i64>], target: &[i64], budget: usize) -> Result<Vec<u64>> {
    let start = vec![0i64; d];
    let mut parent: HashMap<Vec<i64>, Option<(Vec<i64>, usize)>> = HashMap::new();
    parent.insert(start.clone(), None);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        if p == target {
            let mut out = vec![0u64; gens.len()];
            let mut cur = p;
            while let Some(Some((prev, j))) = parent.get(&cur).cloned() {
                out[j] += 1;
                cur = prev;
            }
            return Ok(out);
        }
        for (j, g) in gens.iter().enumerate() {
            let q = vadd(&p, g);
            if !parent.contains_key(&q) {
                if parent.len() >= budget {
                    return Err(Error::BudgetExceeded(budget));
                }
                parent.insert(q.clone(), Some((p.clone(), j)));
                queue.push_back(q);
            }
        }
    }
    Err(Error::InternalInvariantViolated("unit generator without inverse".into()))
}

/// Comparison outcome in the partial order of the reduced monoid.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PartialOrdering {
    Lt,
    Eq,
    Gt,
    Incomparable,
}

/// σ̄ = σ / l(σ) together with its projection to the torsion-free quotient.
#[derive(Clone, Debug)]
pub struct QuotientMonoid {
    source: AffineMonoid,
    saturated: Lattice,
    torsion_invariants: Vec<BigInt>,
}

pub fn rbar(sigma: &AffineMonoid) -> Result<QuotientMonoid> {
    let saturated = sigma.units.saturation_in(&sigma.grp)?;
    let q = sigma.units.quotient_in(&saturated)?;
    Ok(QuotientMonoid { source: sigma.clone(), saturated, torsion_invariants: q.torsion_invariants })
}

impl QuotientMonoid {
    pub fn source(&self) -> &AffineMonoid {
        &self.source
    }

    pub fn unit_lattice(&self) -> &Lattice {
        &self.source.units
    }

    /// The saturation of l(σ) in grp(σ).
    pub fn saturated_lattice(&self) -> &Lattice {
        &self.saturated
    }

    pub fn torsion_invariants(&self) -> &[BigInt] {
        &self.torsion_invariants
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion_invariants.is_empty()
    }

    /// Canonical representative of the class of `v` modulo units.
    pub fn class_rep(&self, v: &[i64]) -> Vec<i64> {
        self.source.units.reduce(v)
    }

    /// Order key of the image in the torsion-free quotient: height, then facet values.
    pub fn key(&self, v: &[i64]) -> Vec<i64> {
        let mut k = vec![self.source.height(v)];
        k.extend(self.source.facets.iter().map(|f| dot(f, v)));
        k
    }

    /// Total order used to linearize the partial order: key, then class representative.
    pub fn linear_cmp(&self, a: &[i64], b: &[i64]) -> Ordering {
        self.key(a).cmp(&self.key(b)).then_with(|| self.class_rep(a).cmp(&self.class_rep(b)))
    }

    pub fn compare(&self, a: &[i64], b: &[i64]) -> PartialOrdering {
        if self.class_rep(a) == self.class_rep(b) {
            return PartialOrdering::Eq;
        }
        match self.key(a).cmp(&self.key(b)) {
            Ordering::Less => PartialOrdering::Lt,
            Ordering::Greater => PartialOrdering::Gt,
            Ordering::Equal => PartialOrdering::Incomparable,
        }
    }
}

pub fn rdeg_compare(q: &QuotientMonoid, a: &[i64], b: &[i64]) -> PartialOrdering {
    q.compare(a, b)
}

/// A homomorphism of affine monoids given by images of the source generators.
#[derive(Clone, Debug)]
pub struct MonoidHom {
    source: AffineMonoid,
    target: AffineMonoid,
    images: Vec<Vec<i64>>,
}

pub fn hom_new(source: &AffineMonoid, target: &AffineMonoid, images: &[Vec<i64>]) -> Result<MonoidHom> {
    if images.len() != source.generators.len() {
        return Err(Error::DimensionMismatch { expected: source.generators.len(), found: images.len() });
    }
    for img in images {
        target.check(img)?;
        if !target.contains_bool(img)? {
            return Err(Error::ImageNotInTarget(img.clone()));
        }
    }
    let k = source.generators.len();
    let rels = left_kernel(&IntMatrix::from_i64_rows(source.d, &source.generators)?);
    for r in rels.basis() {
        let r = to_i64_vec(r)?;
        let mut out = vec![0i64; target.d];
        for (c, img) in r.iter().zip(images) {
            for (o, x) in out.iter_mut().zip(img) {
                *o += c * x;
            }
        }
        if out.iter().any(|&x| x != 0) {
            return Err(Error::RelationsNotRespected(r));
        }
    }
    debug_assert_eq!(k, images.len());
    Ok(MonoidHom { source: source.clone(), target: target.clone(), images: images.to_vec() })
}

impl MonoidHom {
    /// The inclusion of a submonoid given by generators inside `target`.
    pub fn inclusion(source: &AffineMonoid, target: &AffineMonoid) -> Result<MonoidHom> {
        hom_new(source, target, source.generators())
    }

    pub fn source(&self) -> &AffineMonoid {
        &self.source
    }

    pub fn target(&self) -> &AffineMonoid {
        &self.target
    }

    pub fn images(&self) -> &[Vec<i64>] {
        &self.images
    }
}

/// k[σ] as k[z_1, …, z_k] modulo a toric ideal, one variable per generator.
#[derive(Clone, Debug)]
pub struct ToricPresentation {
    pub monoid: AffineMonoid,
    pub field: Field,
    pub nvars: usize,
    /// Reduced grevlex basis of the defining ideal; empty for a free monoid.
    pub ideal: Vec<Polynomial>,
    pub kernel: Lattice,
}

fn binomial_of(field: Field, r: &[i64]) -> Polynomial {
    let pos: Exponent = r.iter().map(|&x| x.max(0) as u32).collect();
    let neg: Exponent = r.iter().map(|&x| (-x).max(0) as u32).collect();
    Polynomial::binomial(field, pos, neg)
}

pub fn presentation(sigma: &AffineMonoid, field: Field, cfg: &GbConfig) -> Result<ToricPresentation> {
    let k = sigma.generators.len();
    let kernel = left_kernel(&IntMatrix::from_i64_rows(sigma.d, &sigma.generators)?);
    let mut ideal: Vec<Polynomial> = Vec::new();
    if kernel.rank() > 0 {
        let basis = kernel.basis_i64()?;
        ideal = basis.iter().map(|r| binomial_of(field, r)).collect();
        for v in 0..k {
            let z = Polynomial::variable(field, k, v);
            ideal = gb::saturate(&ideal, &z, cfg)?;
        }
        ideal = gb::buchberger(&ideal, &MonomialOrder::Grevlex, cfg)?.basis().to_vec();
    }
    Ok(ToricPresentation { monoid: sigma.clone(), field, nvars: k, ideal, kernel })
}

/// Converts a small nonnegative big integer count.
pub fn to_usize(x: &BigInt) -> Option<usize> {
    if x.is_negative() {
        None
    } else {
        x.to_usize()
    }
}

#[allow(dead_code)]
fn is_zero_vec(v: &[i64]) -> bool {
    v.iter().all(Zero::is_zero)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mono(d: usize, g: &[&[i64]]) -> AffineMonoid {
        AffineMonoid::new(d, &g.iter().map(|v| v.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn construction_examples() {
        let s = mono(1, &[&[2], &[3]]);
        assert!(s.is_pointed());
        assert_eq!(s.grp(), &Lattice::full(1));
        let s = mono(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        assert!(!s.is_pointed());
        assert_eq!(s.units(), &Lattice::from_generators(2, &[vec![1, 0]]).unwrap());
        assert_eq!(s.facets(), &[vec![0, 1]]);
        let s = mono(2, &[&[1, 0], &[0, 1]]);
        assert!(s.is_pointed());
        assert_eq!(s.facets().len(), 2);
        assert!(AffineMonoid::new(1, &[]).is_err());
    }

    #[test]
    fn membership_examples() {
        let s = mono(1, &[&[2], &[3]]);
        let w = s.contains(&[5]).unwrap().unwrap();
        assert_eq!(w, vec![1, 1]);
        assert!(s.contains(&[1]).unwrap().is_none());
        assert_eq!(s.contains(&[0]).unwrap().unwrap(), vec![0, 0]);
        assert!(s.contains(&[-2]).unwrap().is_none());
        let t = mono(2, &[&[2, 0], &[-2, 0], &[1, 1]]);
        let w = t.contains(&[-5, 1]).unwrap().unwrap();
        assert_eq!(t.combine(&w), vec![-5, 1]);
        assert!(t.contains(&[1, 0]).unwrap().is_none());
        let z = mono(1, &[&[1], &[-1]]);
        let w = z.contains(&[-7]).unwrap().unwrap();
        assert_eq!(z.combine(&w), vec![-7]);
    }

    #[test]
    fn quotient_examples() {
        let s = mono(2, &[&[1, 0], &[-1, 0], &[0, 1]]);
        let q = rbar(&s).unwrap();
        assert!(!q.has_torsion());
        assert_eq!(q.compare(&[5, 1], &[-3, 1]), PartialOrdering::Eq);
        assert_eq!(q.compare(&[5, 1], &[0, 2]), PartialOrdering::Lt);
        // (1,0) is not in grp, so l(σ) = ⟨(2,0)⟩ is already saturated there.
        let t = mono(2, &[&[2, 0], &[-2, 0], &[1, 1]]);
        let q = rbar(&t).unwrap();
        assert_eq!(q.saturated_lattice(), t.units());
        assert!(!q.has_torsion());
        let n = mono(1, &[&[1]]);
        let qn = rbar(&n).unwrap();
        assert_eq!(qn.compare(&[2], &[5]), PartialOrdering::Lt);
        assert_eq!(qn.compare(&[3], &[3]), PartialOrdering::Eq);
        // Adding (0,1) makes grp = ℤ², so ⟨(1,0)⟩/⟨(2,0)⟩ is torsion in σ̄.
        let u = mono(2, &[&[2, 0], &[-2, 0], &[1, 1], &[0, 1]]);
        let qu = rbar(&u).unwrap();
        assert_eq!(qu.saturated_lattice(), &Lattice::from_generators(2, &[vec![1, 0]]).unwrap());
        assert_eq!(qu.torsion_invariants(), &[BigInt::from(2)]);
        assert_eq!(qu.compare(&[1, 1], &[3, 1]), PartialOrdering::Eq);
        assert_eq!(qu.compare(&[1, 1], &[0, 1]), PartialOrdering::Incomparable);
    }

    #[test]
    fn hom_examples() {
        let t = mono(1, &[&[2], &[3]]);
        let n = mono(1, &[&[1]]);
        assert!(MonoidHom::inclusion(&t, &n).is_ok());
        assert!(hom_new(&n, &n, &[vec![1]]).is_ok());
        let n2 = mono(2, &[&[1, 0], &[0, 1]]);
        assert!(hom_new(&n2, &n2, &[vec![1, 0], vec![1, 1]]).is_ok());
        assert!(matches!(hom_new(&n, &t, &[vec![1]]), Err(Error::ImageNotInTarget(_))));
        // 2 and 3 satisfy 3·2 = 2·3; sending them to 1 and 1 breaks that.
        assert!(matches!(hom_new(&t, &n, &[vec![1], vec![1]]), Err(Error::RelationsNotRespected(_))));
    }

    #[test]
    fn presentation_examples() {
        let q = Field::Rational;
        let cfg = GbConfig::default();
        let n2 = mono(2, &[&[1, 0], &[0, 1]]);
        assert!(presentation(&n2, q, &cfg).unwrap().ideal.is_empty());
        let t = mono(1, &[&[2], &[3]]);
        let p = presentation(&t, q, &cfg).unwrap();
        let expected = Polynomial::binomial(q, vec![3, 0], vec![0, 2]);
        assert_eq!(p.ideal.len(), 1);
        assert!(p.ideal[0] == expected || p.ideal[0] == expected.neg());
        let c = mono(2, &[&[1, 0], &[1, 1], &[1, 2]]);
        let p = presentation(&c, q, &cfg).unwrap();
        assert_eq!(p.ideal.len(), 1);
        let conic = Polynomial::binomial(q, vec![1, 0, 1], vec![0, 2, 0]);
        assert!(p.ideal[0] == conic || p.ideal[0] == conic.neg());
        for g in &p.ideal {
            let degs: Vec<Vec<i64>> = g.terms().map(|(e, _)| c.degree_of_exponent(e)).collect();
            assert!(degs.windows(2).all(|w| w[0] == w[1]));
        }
        // A non-saturated lattice ideal: generators 1,2,3 of ℕ.
        let n = mono(1, &[&[1], &[2], &[3]]);
        let p = presentation(&n, q, &cfg).unwrap();
        let gb = gb::buchberger(&p.ideal, &MonomialOrder::Grevlex, &cfg).unwrap();
        assert!(gb.contains(&Polynomial::binomial(q, vec![1, 1, 0], vec![0, 0, 1])));
        assert!(gb.contains(&Polynomial::binomial(q, vec![2, 0, 0], vec![0, 1, 0])));
    }
}
