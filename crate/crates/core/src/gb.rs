//! Buchberger's algorithm with the Gebauer–Möller pair criteria and sugar
//! selection, plus the ideal operations built on it: normal forms, membership
//! certificates, containment, elimination, colon ideals, saturation and the
//! integrality test for finiteness over a subring.

use std::cmp::Ordering;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::poly::{coprime, divides, lcm, total_degree, Exponent, MonomialOrder, Polynomial};

/// Resource limits for a single basis computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbConfig {
    pub max_degree: u64,
    pub max_basis: usize,
}

impl Default for GbConfig {
    fn default() -> Self {
        GbConfig { max_degree: 40, max_basis: 5000 }
    }
}

type Sp = Vec<(Exponent, Coef)>;

/// `f - c·x^m·g` for polynomials sorted in descending order.
fn sub_scaled(field: Field, order: &MonomialOrder, f: &[(Exponent, Coef)], c: &Coef, m: &[u32], g: &[(Exponent, Coef)]) -> Sp {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut i = 0;
    let mut j = 0;
    let shifted = |e: &Exponent| -> Exponent { e.iter().zip(m).map(|(a, b)| a + b).collect() };
    let mut gj: Option<Exponent> = g.first().map(|t| shifted(&t.0));
    while i < f.len() || j < g.len() {
        let ord = match (&gj, f.get(i)) {
            (None, _) => Ordering::Greater,
            (Some(_), None) => Ordering::Less,
            (Some(ge), Some(ft)) => order.cmp(&ft.0, ge),
        };
        match ord {
            Ordering::Greater => {
                out.push(f[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let v = field.neg(&field.mul(c, &g[j].1));
                out.push((gj.take().unwrap(), v));
                j += 1;
                gj = g.get(j).map(|t| shifted(&t.0));
            }
            Ordering::Equal => {
                let v = field.sub(&f[i].1, &field.mul(c, &g[j].1));
                if !v.is_zero() {
                    out.push((f[i].0.clone(), v));
                }
                i += 1;
                j += 1;
                gj = g.get(j).map(|t| shifted(&t.0));
            }
        }
    }
    out
}

fn to_sp(p: &Polynomial, order: &MonomialOrder) -> Sp {
    p.sorted_terms(order)
}

fn from_sp(field: Field, nvars: usize, s: &[(Exponent, Coef)]) -> Polynomial {
    Polynomial::from_terms(field, nvars, s.iter().cloned())
}

#[derive(Clone)]
struct Entry {
    poly: Sp,
    sugar: u64,
    cof: Vec<Sp>,
}

struct Engine<'a> {
    field: Field,
    nvars: usize,
    order: &'a MonomialOrder,
    track: bool,
    ngens: usize,
    store: Vec<Entry>,
    active: Vec<usize>,
}

impl<'a> Engine<'a> {
    fn lm(&self, i: usize) -> &Exponent {
        &self.store[i].poly[0].0
    }

    fn find_reducer(&self, e: &[u32]) -> Option<usize> {
        self.active.iter().copied().find(|&k| divides(self.lm(k), e))
    }

    /// Full reduction of `f` by the active set. `cof` tracks `f_current + remainder - f_start`.
    fn reduce(&self, mut f: Sp, mut cof: Vec<Sp>, mut sugar: u64) -> (Sp, Vec<Sp>, u64) {
        let mut rem: Sp = Vec::new();
        while !f.is_empty() {
            let (e, c) = f[0].clone();
            match self.find_reducer(&e) {
                Some(k) => {
                    let g = &self.store[k];
                    let q = self.field.div(&c, &g.poly[0].1);
                    let m: Exponent = e.iter().zip(&g.poly[0].0).map(|(a, b)| a - b).collect();
                    sugar = sugar.max(g.sugar + total_degree(&m));
                    f = sub_scaled(self.field, self.order, &f[1..], &q, &m, &g.poly[1..]);
                    if self.track {
                        for (ck, gk) in cof.iter_mut().zip(&g.cof) {
                            *ck = sub_scaled(self.field, self.order, ck, &q, &m, gk);
                        }
                    }
                }
                None => {
                    rem.push((e, c));
                    f.remove(0);
                }
            }
        }
        (rem, cof, sugar)
    }

    fn monic(&self, mut entry: Entry) -> Entry {
        if let Some((_, c)) = entry.poly.first() {
            if !c.is_one() {
                let inv = self.field.inv(c);
                for t in entry.poly.iter_mut() {
                    t.1 = self.field.mul(&t.1, &inv);
                }
                for ck in entry.cof.iter_mut() {
                    for t in ck.iter_mut() {
                        t.1 = self.field.mul(&t.1, &inv);
                    }
                }
            }
        }
        entry
    }

    fn spoly(&self, i: usize, j: usize) -> (Sp, Vec<Sp>, u64) {
        let (gi, gj) = (&self.store[i], &self.store[j]);
        let l = lcm(&gi.poly[0].0, &gj.poly[0].0);
        let mi: Exponent = l.iter().zip(&gi.poly[0].0).map(|(a, b)| a - b).collect();
        let mj: Exponent = l.iter().zip(&gj.poly[0].0).map(|(a, b)| a - b).collect();
        let ci = self.field.inv(&gi.poly[0].1);
        let cj = self.field.inv(&gj.poly[0].1);
        // s = ci·mi·gi - cj·mj·gj
        let neg_ci = self.field.neg(&ci);
        let a = sub_scaled(self.field, self.order, &[], &neg_ci, &mi, &gi.poly);
        let s = sub_scaled(self.field, self.order, &a, &cj, &mj, &gj.poly);
        let mut cof = Vec::new();
        if self.track {
            for (ai, aj) in gi.cof.iter().zip(&gj.cof) {
                let t = sub_scaled(self.field, self.order, &[], &neg_ci, &mi, ai);
                cof.push(sub_scaled(self.field, self.order, &t, &cj, &mj, aj));
            }
        }
        let sugar = (gi.sugar + total_degree(&mi)).max(gj.sugar + total_degree(&mj));
        (s, cof, sugar)
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Exponent,
    sugar: u64,
}

/// A reduced Gröbner basis.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    field: Field,
    nvars: usize,
    order: MonomialOrder,
    basis: Vec<Polynomial>,
    sorted: Vec<Sp>,
    /// Cofactors of each basis element in terms of the input generators, when tracked.
    cofactors: Option<Vec<Vec<Polynomial>>>,
    ngens: usize,
}

/// Computes the reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: &MonomialOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    run(gens, order, cfg, false)
}

/// Like [`buchberger`], but records every basis element as a combination of the inputs.
pub fn buchberger_tracked(gens: &[Polynomial], order: &MonomialOrder, cfg: &GbConfig) -> Result<GroebnerBasis> {
    run(gens, order, cfg, true)
}

fn ring_of(gens: &[Polynomial]) -> Result<(Field, usize)> {
    let first = gens.first().ok_or(Error::InvalidInput("empty generator list for an ideal".into()))?;
    let (field, nvars) = (first.field(), first.nvars());
    if gens.iter().any(|g| g.field() != field || g.nvars() != nvars) {
        return Err(Error::InvalidAmbient);
    }
    Ok((field, nvars))
}

fn run(gens: &[Polynomial], order: &MonomialOrder, cfg: &GbConfig, track: bool) -> Result<GroebnerBasis> {
    let (field, nvars) = ring_of(gens)?;
    let mut eng = Engine { field, nvars, order, track, ngens: gens.len(), store: Vec::new(), active: Vec::new() };
    let mut pairs: Vec<Pair> = Vec::new();

    let mut pending: Vec<Entry> = Vec::new();
    for (k, g) in gens.iter().enumerate() {
        if g.is_zero() {
            continue;
        }
        let mut cof = Vec::new();
        if track {
            cof = vec![Vec::new(); gens.len()];
            cof[k] = vec![(vec![0; nvars], Coef::one())];
        }
        pending.push(Entry { sugar: g.total_degree().unwrap_or(0), poly: to_sp(g, order), cof });
    }
    // Insert inputs smallest first so early reductions stay cheap.
    pending.sort_by(|a, b| order.cmp(&a.poly[0].0, &b.poly[0].0));
    for e in pending {
        let (r, cof, sugar) = eng.reduce(e.poly, e.cof, e.sugar);
        if r.is_empty() {
            continue;
        }
        insert(&mut eng, &mut pairs, Entry { poly: r, cof, sugar }, cfg)?;
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| {
                let (pa, pb) = (&pairs[a], &pairs[b]);
                pa.sugar
                    .cmp(&pb.sugar)
                    .then_with(|| order.cmp(&pa.lcm, &pb.lcm))
                    .then_with(|| (pa.i, pa.j).cmp(&(pb.i, pb.j)))
            })
            .unwrap();
        let p = pairs.swap_remove(best);
        let (s, cof, sugar) = eng.spoly(p.i, p.j);
        let (r, cof, sugar) = eng.reduce(s, cof, sugar);
        if r.is_empty() {
            continue;
        }
        insert(&mut eng, &mut pairs, Entry { poly: r, cof, sugar }, cfg)?;
    }

    finish(eng)
}

fn insert(eng: &mut Engine, pairs: &mut Vec<Pair>, entry: Entry, cfg: &GbConfig) -> Result<()> {
    let entry = eng.monic(entry);
    let deg = total_degree(&entry.poly[0].0);
    if deg > cfg.max_degree {
        return Err(Error::DegreeBudgetExceeded(format!("basis degree {deg} exceeds {}", cfg.max_degree)));
    }
    if eng.store.len() >= cfg.max_basis {
        return Err(Error::DegreeBudgetExceeded(format!("basis size exceeds {}", cfg.max_basis)));
    }
    let h = eng.store.len();
    eng.store.push(entry);
    let lh = eng.lm(h).clone();

    // Gebauer–Möller update.
    let mut c: Vec<(usize, Exponent)> = eng.active.iter().map(|&g| (g, lcm(eng.lm(g), &lh))).collect();
    let mut d: Vec<(usize, Exponent)> = Vec::new();
    while let Some((g1, l1)) = (!c.is_empty()).then(|| c.remove(0)) {
        let keep = coprime(eng.lm(g1), &lh)
            || !c.iter().chain(d.iter()).any(|(_, l2)| divides(l2, &l1));
        if keep {
            d.push((g1, l1));
        }
    }
    let e: Vec<(usize, Exponent)> = d.into_iter().filter(|(g, _)| !coprime(eng.lm(*g), &lh)).collect();
    pairs.retain(|p| {
        let l1 = lcm(eng.lm(p.i), &lh);
        let l2 = lcm(eng.lm(p.j), &lh);
        !(divides(&lh, &p.lcm) && l1 != p.lcm && l2 != p.lcm)
    });
    for (g, l) in e {
        let (a, b) = (&eng.store[g], &eng.store[h]);
        let ma = total_degree(&l) - total_degree(&a.poly[0].0);
        let mb = total_degree(&l) - total_degree(&b.poly[0].0);
        let sugar = (a.sugar + ma).max(b.sugar + mb);
        pairs.push(Pair { i: g, j: h, lcm: l, sugar });
    }
    let keep: Vec<usize> = eng.active.iter().copied().filter(|&g| !divides(&lh, eng.lm(g))).collect();
    eng.active = keep;
    eng.active.push(h);
    Ok(())
}

fn finish(mut eng: Engine) -> Result<GroebnerBasis> {
    let order = eng.order.clone();
    // Minimal basis: drop elements whose leading monomial is divisible by another's.
    let mut min: Vec<usize> = Vec::new();
    for &g in &eng.active {
        let lg = eng.lm(g);
        let redundant = eng.active.iter().any(|&h| h != g && divides(eng.lm(h), lg) && (eng.lm(h) != lg || h < g));
        if !redundant {
            min.push(g);
        }
    }
    min.sort_by(|&a, &b| order.cmp(eng.lm(a), eng.lm(b)));
    // Inter-reduce tails.
    let mut reduced: Vec<Entry> = Vec::new();
    for &g in &min {
        eng.active = min.iter().copied().filter(|&h| h != g).collect();
        let e = eng.store[g].clone();
        let head = e.poly[0].clone();
        let (tail, cof, sugar) = eng.reduce(e.poly[1..].to_vec(), e.cof.clone(), e.sugar);
        let mut poly = vec![head];
        poly.extend(tail);
        // The tail reduction changed the element by a combination of other basis elements;
        // `cof` already reflects `f_current + remainder` relative to the original tracking.
        reduced.push(eng.monic(Entry { poly, cof, sugar }));
    }
    let basis: Vec<Polynomial> = reduced.iter().map(|e| from_sp(eng.field, eng.nvars, &e.poly)).collect();
    let cofactors = if eng.track {
        Some(
            reduced
                .iter()
                .map(|e| e.cof.iter().map(|c| from_sp(eng.field, eng.nvars, c)).collect())
                .collect(),
        )
    } else {
        None
    };
    Ok(GroebnerBasis {
        field: eng.field,
        nvars: eng.nvars,
        order,
        sorted: reduced.into_iter().map(|e| e.poly).collect(),
        basis,
        cofactors,
        ngens: eng.ngens,
    })
}

impl GroebnerBasis {
    pub fn basis(&self) -> &[Polynomial] {
        &self.basis
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn leading_monomials(&self) -> Vec<Exponent> {
        self.sorted.iter().map(|s| s[0].0.clone()).collect()
    }

    /// True when the ideal is the whole ring.
    pub fn is_unit(&self) -> bool {
        self.sorted.iter().any(|s| s.len() == 1 && s[0].0.iter().all(|&x| x == 0))
    }

    fn reduce_sp(&self, f: Sp, track: bool) -> (Sp, Vec<Sp>) {
        let mut f = f;
        let mut rem = Vec::new();
        let mut acc: Vec<Sp> = if track { vec![Vec::new(); self.ngens] } else { Vec::new() };
        let cofs = self.cofactors.as_ref().map(|c| {
            c.iter().map(|row| row.iter().map(|p| to_sp(p, &self.order)).collect::<Vec<Sp>>()).collect::<Vec<_>>()
        });
        while !f.is_empty() {
            let (e, c) = f[0].clone();
            match self.sorted.iter().position(|g| divides(&g[0].0, &e)) {
                Some(k) => {
                    let g = &self.sorted[k];
                    let q = self.field.div(&c, &g[0].1);
                    let m: Exponent = e.iter().zip(&g[0].0).map(|(a, b)| a - b).collect();
                    f = sub_scaled(self.field, &self.order, &f[1..], &q, &m, &g[1..]);
                    if track {
                        let neg_q = self.field.neg(&q);
                        for (a, gk) in acc.iter_mut().zip(&cofs.as_ref().unwrap()[k]) {
                            *a = sub_scaled(self.field, &self.order, a, &neg_q, &m, gk);
                        }
                    }
                }
                None => {
                    rem.push((e, c));
                    f.remove(0);
                }
            }
        }
        (rem, acc)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.nvars, "normal form in a different ring");
        let (rem, _) = self.reduce_sp(to_sp(f, &self.order), false);
        from_sp(self.field, self.nvars, &rem)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_all(&self, fs: &[Polynomial]) -> bool {
        fs.iter().all(|f| self.contains(f))
    }

    /// Cofactors `h` with `f = Σ hᵢ·genᵢ`, or `None` when `f` is not in the ideal.
    /// Requires a basis from [`buchberger_tracked`].
    pub fn certify(&self, f: &Polynomial) -> Option<Vec<Polynomial>> {
        assert!(self.cofactors.is_some(), "certify needs a tracked basis");
        let (rem, acc) = self.reduce_sp(to_sp(f, &self.order), true);
        if !rem.is_empty() {
            return None;
        }
        Some(acc.iter().map(|a| from_sp(self.field, self.nvars, a)).collect())
    }
}

/// Cofactors expressing `f` in terms of `gens`, or `None` if `f ∉ (gens)`.
pub fn member_certify(f: &Polynomial, gens: &[Polynomial], cfg: &GbConfig) -> Result<Option<Vec<Polynomial>>> {
    if gens.is_empty() {
        return Ok(if f.is_zero() { Some(Vec::new()) } else { None });
    }
    let gb = buchberger_tracked(gens, &MonomialOrder::Grevlex, cfg)?;
    Ok(gb.certify(f))
}

/// Reduced basis under grevlex; the zero ideal gives an empty basis.
pub fn groebner(gens: &[Polynomial], field: Field, nvars: usize, cfg: &GbConfig) -> Result<GroebnerBasis> {
    if gens.iter().all(Polynomial::is_zero) {
        return Ok(GroebnerBasis {
            field,
            nvars,
            order: MonomialOrder::Grevlex,
            basis: Vec::new(),
            sorted: Vec::new(),
            cofactors: Some(Vec::new()),
            ngens: gens.len(),
        });
    }
    buchberger(gens, &MonomialOrder::Grevlex, cfg)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CompareMode {
    /// `J ⊆ I`
    Contains,
    Equal,
}

/// Compares the ideals `I = (big)` and `J = (small)` in one polynomial ring.
pub fn ideal_compare(i: &[Polynomial], j: &[Polynomial], field: Field, nvars: usize, mode: CompareMode, cfg: &GbConfig) -> Result<bool> {
    let gi = groebner(i, field, nvars, cfg)?;
    if !gi.contains_all(j) {
        return Ok(false);
    }
    if mode == CompareMode::Equal {
        let gj = groebner(j, field, nvars, cfg)?;
        return Ok(gj.contains_all(i));
    }
    Ok(true)
}

/// Generators of `(gens) ∩ k[x_k, …, x_{n-1}]`, re-indexed to the remaining variables.
pub fn eliminate(gens: &[Polynomial], k: usize, cfg: &GbConfig) -> Result<Vec<Polynomial>> {
    let (_, nvars) = ring_of(gens)?;
    let gb = buchberger(gens, &MonomialOrder::eliminate_first(k, nvars), cfg)?;
    let keep: Vec<usize> = (k..nvars).collect();
    Ok(gb.basis().iter().filter_map(|g| g.restrict_vars(&keep)).collect())
}

/// `(gens) ∩ (others)` through an auxiliary variable.
pub fn intersect(a: &[Polynomial], b: &[Polynomial], cfg: &GbConfig) -> Result<Vec<Polynomial>> {
    let (field, nvars) = ring_of(&[a, b].concat())?;
    let t = Polynomial::variable(field, nvars + 1, 0);
    let one_minus_t = Polynomial::one(field, nvars + 1).sub(&t);
    let mut gens = Vec::new();
    for g in a {
        gens.push(t.mul(&g.extend_vars(1, true)));
    }
    for g in b {
        gens.push(one_minus_t.mul(&g.extend_vars(1, true)));
    }
    eliminate(&gens, 1, cfg)
}

fn is_pure_difference(p: &Polynomial) -> bool {
    p.len() == 2 && p.is_pure_binomial()
}

/// The colon ideal `(I : x^m)`.
///
/// When every generator of `I` is a difference of monomials the result is
/// checked to be generated by differences as well.
pub fn colon_monomial(gens: &[Polynomial], m: &[u32], cfg: &GbConfig) -> Result<Vec<Polynomial>> {
    let (field, nvars) = ring_of(gens)?;
    if m.len() != nvars {
        return Err(Error::DimensionMismatch { expected: nvars, found: m.len() });
    }
    let mono = Polynomial::monomial(field, m.to_vec());
    let inter = intersect(gens, &[mono], cfg)?;
    let mut out = Vec::new();
    for g in inter {
        let mut q = Polynomial::zero(field, nvars);
        for (e, c) in g.terms() {
            if !divides(m, e) {
                return Err(Error::InternalInvariantViolated("intersection element not divisible by the monomial".into()));
            }
            q.add_term(e.iter().zip(m).map(|(a, b)| a - b).collect(), c);
        }
        out.push(q);
    }
    let binomial_input = gens.iter().all(|g| g.is_zero() || is_pure_difference(g));
    if binomial_input {
        let gb = buchberger(&out, &MonomialOrder::Grevlex, cfg)?;
        if !gb.basis().iter().all(is_pure_difference) {
            return Err(Error::BinomialityViolated);
        }
    }
    Ok(out)
}

/// The saturation `(I : f^∞)`.
pub fn saturate(gens: &[Polynomial], f: &Polynomial, cfg: &GbConfig) -> Result<Vec<Polynomial>> {
    let (field, nvars) = ring_of(gens)?;
    let t = Polynomial::variable(field, nvars + 1, 0);
    let mut ext: Vec<Polynomial> = gens.iter().map(|g| g.extend_vars(1, true)).collect();
    ext.push(Polynomial::one(field, nvars + 1).sub(&t.mul(&f.extend_vars(1, true))));
    eliminate(&ext, 1, cfg)
}

/// Whether `k[x]/I` is a finite module over the subring generated by the
/// variables not listed in `fiber`: some leading monomial of a basis under an
/// order with the fiber variables dominant must be a pure power of each fiber variable.
pub fn finite_over_subring(gens: &[Polynomial], fiber: &[usize], cfg: &GbConfig) -> Result<bool> {
    let (_, nvars) = ring_of(gens)?;
    if fiber.is_empty() {
        return Ok(true);
    }
    let base: Vec<usize> = (0..nvars).filter(|i| !fiber.contains(i)).collect();
    let mut map = vec![0; nvars];
    for (pos, &v) in fiber.iter().chain(base.iter()).enumerate() {
        map[v] = pos;
    }
    let moved: Vec<Polynomial> = gens.iter().map(|g| g.rename(nvars, &map)).collect();
    let order = MonomialOrder::BlockGrevlex(vec![fiber.len(), base.len()]);
    let gb = buchberger(&moved, &order, cfg)?;
    let lms = gb.leading_monomials();
    Ok((0..fiber.len()).all(|v| {
        lms.iter().any(|e| e[v] > 0 && e.iter().enumerate().all(|(i, &x)| i == v || x == 0))
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Rational
    }

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::variable(q(), n, i)
    }

    #[test]
    fn buchberger_example() {
        let (x, y) = (var(2, 0), var(2, 1));
        let gens = vec![x.pow(2).sub(&y.pow(2)), x.pow(3).sub(&y.pow(3))];
        let gb = buchberger(&gens, &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
        let expected = [x.pow(2).sub(&y.pow(2)), x.mul(&y.pow(2)).sub(&y.pow(3))];
        assert_eq!(gb.basis(), &expected[..]);
        assert!(gb.contains(&x.pow(5).sub(&y.pow(5))));
        assert_eq!(gb.normal_form(&x.sub(&y)), x.sub(&y));
        let single = buchberger(std::slice::from_ref(&x), &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
        assert_eq!(single.basis(), std::slice::from_ref(&x));
        let zero = groebner(&[Polynomial::zero(q(), 2)], q(), 2, &GbConfig::default()).unwrap();
        assert!(zero.basis().is_empty());
    }

    #[test]
    fn certificates() {
        let (x, y) = (var(2, 0), var(2, 1));
        let f = x.pow(3).sub(&y.pow(3));
        let c = member_certify(&f, &[x.sub(&y)], &GbConfig::default()).unwrap().unwrap();
        assert_eq!(c[0], x.pow(2).add(&x.mul(&y)).add(&y.pow(2)));
        let one = Polynomial::one(q(), 2);
        assert!(member_certify(&one, std::slice::from_ref(&x), &GbConfig::default()).unwrap().is_none());
        let gens = vec![x.pow(2).sub(&y), x.mul(&y).sub(&one)];
        let c = member_certify(&gens[1], &gens, &GbConfig::default()).unwrap().unwrap();
        let recombined = c[0].mul(&gens[0]).add(&c[1].mul(&gens[1]));
        assert_eq!(recombined, gens[1]);
    }

    #[test]
    fn comparisons() {
        let (x, y) = (var(2, 0), var(2, 1));
        let i = vec![x.pow(2).sub(&y.pow(2)), x.pow(3).sub(&y.pow(3))];
        let sw: Vec<Polynomial> = i.iter().map(|g| g.rename(2, &[1, 0])).collect();
        assert!(ideal_compare(&i, &sw, q(), 2, CompareMode::Equal, &GbConfig::default()).unwrap());
        let xy = vec![x.clone(), y.clone()];
        assert!(ideal_compare(&xy, std::slice::from_ref(&x), q(), 2, CompareMode::Contains, &GbConfig::default()).unwrap());
        assert!(!ideal_compare(std::slice::from_ref(&x), &xy, q(), 2, CompareMode::Contains, &GbConfig::default()).unwrap());
    }

    #[test]
    fn colon_examples() {
        let (x, y) = (var(2, 0), var(2, 1));
        let i = vec![x.pow(2).sub(&y.pow(2))];
        let c = colon_monomial(&i, &[1, 0], &GbConfig::default()).unwrap();
        assert!(ideal_compare(&i, &c, q(), 2, CompareMode::Equal, &GbConfig::default()).unwrap());
        let c = colon_monomial(&i, &[0, 0], &GbConfig::default()).unwrap();
        assert!(ideal_compare(&i, &c, q(), 2, CompareMode::Equal, &GbConfig::default()).unwrap());
        // k[x]/(x² - x⁴): (0 : x²) contains x - x³.
        let x1 = var(1, 0);
        let j = vec![x1.pow(2).sub(&x1.pow(4))];
        let c = colon_monomial(&j, &[2], &GbConfig::default()).unwrap();
        let gb = buchberger(&c, &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
        assert!(gb.contains(&x1.sub(&x1.pow(3))));
    }

    #[test]
    fn saturation_gives_toric_ideal() {
        // Lattice ideal of ⟨(1,-2,1)⟩ is (ac - b²) after saturation.
        let (a, b, c) = (var(3, 0), var(3, 1), var(3, 2));
        let i = vec![a.mul(&c).sub(&b.pow(2))];
        let s = saturate(&i, &a.mul(&b).mul(&c), &GbConfig::default()).unwrap();
        assert!(ideal_compare(&i, &s, q(), 3, CompareMode::Equal, &GbConfig::default()).unwrap());
    }

    #[test]
    fn finiteness_examples() {
        let n = 4; // x1 x2 y1 y2
        let v = |i| var(n, i);
        let fiber = [2, 3];
        let diag = vec![v(0).sub(&v(2)), v(1).sub(&v(3))];
        assert!(finite_over_subring(&diag, &fiber, &GbConfig::default()).unwrap());
        let ex52 = vec![v(0).sub(&v(2)), v(0).mul(&v(1)).sub(&v(2).mul(&v(3)))];
        assert!(!finite_over_subring(&ex52, &fiber, &GbConfig::default()).unwrap());
    }

    #[test]
    fn prime_field_basis() {
        let f = Field::prime(3).unwrap();
        let u = Polynomial::variable(f, 1, 0);
        let one = Polynomial::one(f, 1);
        let gb = buchberger(&[u.sub(&one).pow(3)], &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
        assert_eq!(gb.basis(), &[u.pow(3).sub(&one)]);
    }

    mod props {
        use super::*;
        use num_bigint::BigInt;
        use num_rational::BigRational;
        use proptest::prelude::*;

        fn poly3() -> impl Strategy<Value = Polynomial> {
            prop::collection::vec((prop::collection::vec(0u32..3, 3), -3i64..4), 1..4).prop_map(|ts| {
                Polynomial::from_terms(
                    Field::Rational,
                    3,
                    ts.into_iter().map(|(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
                )
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn normal_form_is_linear(gens in prop::collection::vec(poly3(), 1..3), f in poly3(), g in poly3()) {
                prop_assume!(gens.iter().any(|p| !p.is_zero()));
                let gb = buchberger(&gens, &MonomialOrder::Grevlex, &GbConfig::default()).unwrap();
                let lhs = gb.normal_form(&f.add(&g));
                let rhs = gb.normal_form(&f).add(&gb.normal_form(&g));
                prop_assert_eq!(lhs, rhs);
                for p in &gens {
                    prop_assert!(gb.contains(p));
                }
            }

            #[test]
            fn cofactors_recombine(gens in prop::collection::vec(poly3(), 1..3), hs in prop::collection::vec(poly3(), 3)) {
                let mut f = Polynomial::zero(Field::Rational, 3);
                for (g, h) in gens.iter().zip(&hs) {
                    f = f.add(&g.mul(h));
                }
                let c = member_certify(&f, &gens, &GbConfig::default()).unwrap();
                let c = c.expect("combination must be a member");
                let mut back = Polynomial::zero(Field::Rational, 3);
                for (g, h) in gens.iter().zip(&c) {
                    back = back.add(&g.mul(h));
                }
                prop_assert_eq!(back, f);
            }
        }
    }
}
