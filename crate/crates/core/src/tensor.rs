//! Tensor powers σ^{⊗τ n} of an affine monoid over a submonoid τ.
//!
//! Elements are n-tuples of σ modulo the congruence that moves a generator of
//! τ from one slot to another. Equality is decided on the move graph whose
//! nodes are tuples of unit-class representatives and whose edges carry the
//! unit offsets picked up by a move; the closed-walk labels form a lattice.
//!
//! Slot indices in [`TensorPower::mu`] and [`TensorPower::xi`] are 1-based.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, Mutex};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::monoid::{rbar, vadd, vsub, AffineMonoid, QuotientMonoid};
use crate::zlin::{big_vec, solve_integer, to_i64_vec, IntMatrix, Lattice};

/// Default cap on the number of classes visited in one fiber.
pub const DEFAULT_FIBER_BUDGET: usize = 100_000;

/// A representative in σ^n of an element of the tensor power.
pub type TensorMonomial = Vec<Vec<i64>>;

/// A connected component of the move graph.
#[derive(Debug)]
struct Component {
    index: HashMap<TensorMonomial, usize>,
    nodes: Vec<TensorMonomial>,
    /// Offset accumulated along the spanning tree, flattened to length n·d.
    pots: Vec<Vec<i64>>,
    cycles: Lattice,
}

/// The set `base + lattice`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coset {
    pub base: Vec<i64>,
    pub lattice: Lattice,
}

impl Coset {
    pub fn contains(&self, v: &[i64]) -> Result<bool> {
        self.lattice.contains_i64(&vsub(v, &self.base))
    }
}

#[derive(Debug)]
pub struct TensorPower {
    sigma: AffineMonoid,
    rbar: QuotientMonoid,
    tau: Vec<Vec<i64>>,
    n: usize,
    fiber_budget: usize,
    members: Mutex<HashMap<Vec<i64>, bool>>,
    components: Mutex<HashMap<TensorMonomial, Arc<Component>>>,
}

impl TensorPower {
    /// The `n`-fold power over the submonoid generated by `tau` (each must lie in σ).
    pub fn new(sigma: &AffineMonoid, tau: &[Vec<i64>], n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("tensor power needs n ≥ 1".into()));
        }
        for w in tau {
            if w.len() != sigma.rank() {
                return Err(Error::DimensionMismatch { expected: sigma.rank(), found: w.len() });
            }
            if !sigma.contains_bool(w)? {
                return Err(Error::ImageNotInTarget(w.clone()));
            }
        }
        let mut t: Vec<Vec<i64>> = Vec::new();
        for w in tau {
            if w.iter().any(|&x| x != 0) && !t.contains(w) {
                t.push(w.clone());
            }
        }
        Ok(TensorPower {
            sigma: sigma.clone(),
            rbar: rbar(sigma)?,
            tau: t,
            n,
            fiber_budget: DEFAULT_FIBER_BUDGET,
            members: Mutex::new(HashMap::new()),
            components: Mutex::new(HashMap::new()),
        })
    }

    pub fn with_fiber_budget(mut self, budget: usize) -> Self {
        self.fiber_budget = budget;
        self
    }

    /// The same σ and τ at a different power.
    pub fn with_power(&self, n: usize) -> Result<TensorPower> {
        Ok(TensorPower::new(&self.sigma, &self.tau, n)?.with_fiber_budget(self.fiber_budget))
    }

    pub fn sigma(&self) -> &AffineMonoid {
        &self.sigma
    }

    pub fn quotient(&self) -> &QuotientMonoid {
        &self.rbar
    }

    pub fn tau(&self) -> &[Vec<i64>] {
        &self.tau
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn fiber_budget(&self) -> usize {
        self.fiber_budget
    }

    /// Cached membership in σ.
    pub fn in_sigma(&self, v: &[i64]) -> Result<bool> {
        if let Some(&b) = self.members.lock().unwrap().get(v) {
            return Ok(b);
        }
        let b = self.sigma.contains_bool(v)?;
        self.members.lock().unwrap().insert(v.to_vec(), b);
        Ok(b)
    }

    fn check(&self, m: &TensorMonomial, n: usize) -> Result<()> {
        if m.len() != n {
            return Err(Error::DimensionMismatch { expected: n, found: m.len() });
        }
        for s in m {
            if s.len() != self.sigma.rank() {
                return Err(Error::DimensionMismatch { expected: self.sigma.rank(), found: s.len() });
            }
            if !self.in_sigma(s)? {
                return Err(Error::NotInMonoid(s.clone()));
            }
        }
        Ok(())
    }

    /// `μ^i_j`: slot i becomes `s_i + s_j` and slot j is removed.
    pub fn mu(&self, i: usize, j: usize, m: &TensorMonomial) -> Result<TensorMonomial> {
        let n = m.len();
        if i == j || i == 0 || j == 0 || i > n || j > n {
            return Err(Error::IndexOutOfRange { index: i.max(j), len: n });
        }
        let mut out = m.clone();
        out[i - 1] = vadd(&m[i - 1], &m[j - 1]);
        out.remove(j - 1);
        Ok(out)
    }

    /// `ξ_i`: inserts the identity at position i.
    pub fn xi(&self, i: usize, m: &TensorMonomial) -> Result<TensorMonomial> {
        if i == 0 || i > m.len() + 1 {
            return Err(Error::IndexOutOfRange { index: i, len: m.len() + 1 });
        }
        let mut out = m.clone();
        out.insert(i - 1, self.sigma.zero());
        Ok(out)
    }

    pub fn deg(&self, m: &TensorMonomial) -> Vec<i64> {
        m.iter().fold(self.sigma.zero(), |acc, s| vadd(&acc, s))
    }

    /// Class representatives and unit offsets of a tuple.
    fn split(&self, m: &TensorMonomial) -> (TensorMonomial, Vec<i64>) {
        let mut node = Vec::with_capacity(m.len());
        let mut off = Vec::new();
        for s in m {
            let c = self.rbar.class_rep(s);
            off.extend(vsub(s, &c));
            node.push(c);
        }
        (node, off)
    }

    /// Moves out of a node: (neighbor, offset label).
    fn moves(&self, node: &TensorMonomial) -> Result<Vec<(TensorMonomial, Vec<i64>)>> {
        let n = node.len();
        let d = self.sigma.rank();
        let mut out = Vec::new();
        for i in 0..n {
            for w in &self.tau {
                let a = vsub(&node[i], w);
                if !self.in_sigma(&a)? {
                    continue;
                }
                let ra = self.rbar.class_rep(&a);
                for j in 0..n {
                    if j == i {
                        continue;
                    }
                    let b = vadd(&node[j], w);
                    let rb = self.rbar.class_rep(&b);
                    let mut label = vec![0i64; n * d];
                    label[i * d..(i + 1) * d].copy_from_slice(&vsub(&a, &ra));
                    label[j * d..(j + 1) * d].copy_from_slice(&vsub(&b, &rb));
                    let mut next = node.clone();
                    next[i] = ra.clone();
                    next[j] = rb;
                    out.push((next, label));
                }
            }
        }
        Ok(out)
    }

    fn component(&self, start: &TensorMonomial) -> Result<Arc<Component>> {
        if let Some(c) = self.components.lock().unwrap().get(start) {
            return Ok(c.clone());
        }
        let nd = start.len() * self.sigma.rank();
        let mut index = HashMap::new();
        let mut nodes = vec![start.clone()];
        let mut pots = vec![vec![0i64; nd]];
        index.insert(start.clone(), 0usize);
        let mut cycles = Lattice::zero(nd);
        let mut queue = VecDeque::from([0usize]);
        while let Some(k) = queue.pop_front() {
            let node = nodes[k].clone();
            for (next, label) in self.moves(&node)? {
                let reach = vadd(&pots[k], &label);
                match index.get(&next) {
                    Some(&t) => {
                        let c = vsub(&reach, &pots[t]);
                        if c.iter().any(|&x| x != 0) && !cycles.contains_i64(&c)? {
                            cycles = cycles.sum(&Lattice::from_generators(nd, &[c])?)?;
                        }
                    }
                    None => {
                        if nodes.len() >= self.fiber_budget {
                            return Err(Error::FiberBudgetExceeded(self.fiber_budget));
                        }
                        index.insert(next.clone(), nodes.len());
                        nodes.push(next);
                        pots.push(reach);
                        queue.push_back(nodes.len() - 1);
                    }
                }
            }
        }
        let comp = Arc::new(Component { index, nodes, pots, cycles });
        let mut cache = self.components.lock().unwrap();
        for node in &comp.nodes {
            cache.insert(node.clone(), comp.clone());
        }
        Ok(comp)
    }

    /// The element `t` with `m1 ~ m2 + v` exactly for `v ∈ t + cycles`, or `None`
    /// when the class tuples are in different components.
    fn offset_gap(&self, m1: &TensorMonomial, m2: &TensorMonomial) -> Result<Option<(Vec<i64>, Lattice)>> {
        let (n1, o1) = self.split(m1);
        let (n2, o2) = self.split(m2);
        let comp = self.component(&n1)?;
        let (Some(&a), Some(&b)) = (comp.index.get(&n1), comp.index.get(&n2)) else {
            return Ok(None);
        };
        // m1 reaches n2 with offsets o1 + pots[b] - pots[a] + cycles.
        let reach = vsub(&vadd(&o1, &comp.pots[b]), &comp.pots[a]);
        Ok(Some((vsub(&reach, &o2), comp.cycles.clone())))
    }

    pub fn tensor_equals(&self, m1: &TensorMonomial, m2: &TensorMonomial) -> Result<bool> {
        self.check(m1, self.n)?;
        self.check(m2, self.n)?;
        if self.deg(m1) != self.deg(m2) {
            return Ok(false);
        }
        match self.offset_gap(m1, m2)? {
            None => Ok(false),
            Some((gap, cycles)) => cycles.contains_i64(&gap),
        }
    }

    /// All `s ∈ l(σ)` with `m1 ~ m2 + s·e_i − s·e_j` (0-based slots `i ≠ j`),
    /// as a coset of a sublattice of l(σ).
    pub fn unit_twist_solve_at(&self, m1: &TensorMonomial, m2: &TensorMonomial, i: usize, j: usize) -> Result<Option<Coset>> {
        self.check(m1, self.n)?;
        self.check(m2, self.n)?;
        if i == j || i >= self.n || j >= self.n {
            return Err(Error::IndexOutOfRange { index: i.max(j), len: self.n });
        }
        let d = self.sigma.rank();
        if self.deg(m1) != self.deg(m2) {
            return Ok(None);
        }
        let Some((gap, cycles)) = self.offset_gap(m1, m2)? else {
            return Ok(None);
        };
        let units = self.sigma.units().basis_i64()?;
        // Unknowns y (unit coordinates) and z (cycle coordinates): Σ y_k E(b_k) − Σ z_l λ_l = gap.
        let nd = self.n * d;
        let mut cols: Vec<Vec<i64>> = Vec::new();
        for b in &units {
            let mut c = vec![0i64; nd];
            c[i * d..(i + 1) * d].copy_from_slice(b);
            for (t, x) in c[j * d..(j + 1) * d].iter_mut().zip(b) {
                *t = -x;
            }
            cols.push(c);
        }
        for l in cycles.basis_i64()? {
            cols.push(l.iter().map(|x| -x).collect());
        }
        if cols.is_empty() {
            return Ok(gap.iter().all(|&x| x == 0).then(|| Coset { base: vec![0; d], lattice: Lattice::zero(d) }));
        }
        let rows: Vec<Vec<i64>> = (0..nd).map(|r| cols.iter().map(|c| c[r]).collect()).collect();
        let a = IntMatrix::from_i64_rows(cols.len(), &rows)?;
        let Some((x0, kernel)) = solve_integer(&a, &big_vec(&gap))? else {
            return Ok(None);
        };
        let project = |y: &[BigInt]| -> Result<Vec<i64>> {
            let y = to_i64_vec(&y[..units.len()])?;
            let mut s = vec![0i64; d];
            for (c, b) in y.iter().zip(&units) {
                for (t, x) in s.iter_mut().zip(b) {
                    *t += c * x;
                }
            }
            Ok(s)
        };
        let base = project(&x0)?;
        let gens: Vec<Vec<i64>> = kernel.iter().map(|k| project(k)).collect::<Result<_>>()?;
        let lattice = Lattice::from_generators(d, &gens)?;
        Ok(Some(Coset { base: lattice.reduce(&base), lattice }))
    }

    /// [`Self::unit_twist_solve_at`] on the first two slots.
    pub fn unit_twist_solve(&self, m1: &TensorMonomial, m2: &TensorMonomial) -> Result<Option<Coset>> {
        self.unit_twist_solve_at(m1, m2, 0, 1)
    }

    /// All `v ∈ l(σ)^n` with `m ~ m + v`, a lattice in ℤ^{n·d}.
    pub fn stabilizer(&self, m: &TensorMonomial) -> Result<Lattice> {
        self.check(m, self.n)?;
        let (node, _) = self.split(m);
        Ok(self.component(&node)?.cycles.clone())
    }

    /// Every tuple in the class of `m` (pointed σ only).
    pub fn class_members(&self, m: &TensorMonomial) -> Result<Vec<TensorMonomial>> {
        if !self.sigma.is_pointed() {
            return Err(Error::NonPointedUnsupported);
        }
        self.check(m, m.len())?;
        let comp = self.component(m)?;
        Ok(comp.nodes.clone())
    }

    /// Sort key for canonical representatives.
    fn normal_key(&self, m: &TensorMonomial) -> (usize, Vec<usize>, Vec<(Vec<i64>, Vec<i64>)>) {
        let nonzero: Vec<usize> = (0..m.len()).filter(|&i| m[i].iter().any(|&x| x != 0)).collect();
        let slots = m.iter().map(|s| (self.rbar.key(s), s.clone())).collect();
        (nonzero.len(), nonzero, slots)
    }

    /// Canonical representative with the most identity slots, non-identity
    /// slots leftmost, then lexicographically least (pointed σ only).
    pub fn normalize(&self, m: &TensorMonomial) -> Result<TensorMonomial> {
        let members = self.class_members(m)?;
        Ok(members.into_iter().min_by_key(|x| self.normal_key(x)).expect("class is nonempty"))
    }

    pub fn identity_count(m: &TensorMonomial) -> usize {
        m.iter().filter(|s| s.iter().all(|&x| x == 0)).count()
    }

    /// Whether `m` has the maximal number of identity slots in its class.
    pub fn is_normalized(&self, m: &TensorMonomial) -> Result<bool> {
        let best = self.normalize(m)?;
        Ok(Self::identity_count(m) == Self::identity_count(&best))
    }

    /// Elements `s ∈ σ` with `v − s ∈ σ` (pointed σ only), in increasing key order.
    pub fn divisors(&self, v: &[i64]) -> Result<Vec<Vec<i64>>> {
        if !self.sigma.is_pointed() {
            return Err(Error::NonPointedUnsupported);
        }
        if !self.in_sigma(v)? {
            return Err(Error::NotInMonoid(v.to_vec()));
        }
        let h = self.sigma.height(v);
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut frontier = vec![self.sigma.zero()];
        seen.insert(self.sigma.zero(), ());
        let mut out = Vec::new();
        while let Some(s) = frontier.pop() {
            if self.in_sigma(&vsub(v, &s))? {
                out.push(s.clone());
            }
            for g in self.sigma.generators() {
                let t = vadd(&s, g);
                if self.sigma.height(&t) <= h && self.sigma.in_cone(&vsub(v, &t)) && !seen.contains_key(&t) {
                    if seen.len() >= self.fiber_budget {
                        return Err(Error::FiberBudgetExceeded(self.fiber_budget));
                    }
                    seen.insert(t.clone(), ());
                    frontier.push(t);
                }
            }
        }
        out.sort_by(|a, b| self.rbar.linear_cmp(a, b));
        Ok(out)
    }

    /// All n-tuples in σ summing to `v` (pointed σ only).
    pub fn tuples(&self, v: &[i64], n: usize) -> Result<Vec<TensorMonomial>> {
        let divs = self.divisors(v)?;
        let mut out = Vec::new();
        let mut cur: TensorMonomial = Vec::new();
        self.tuples_rec(&divs, v.to_vec(), n, &mut cur, &mut out)?;
        Ok(out)
    }

    fn tuples_rec(&self, divs: &[Vec<i64>], rest: Vec<i64>, n: usize, cur: &mut TensorMonomial, out: &mut Vec<TensorMonomial>) -> Result<()> {
        if cur.len() + 1 == n {
            cur.push(rest);
            out.push(cur.clone());
            cur.pop();
            return Ok(());
        }
        for s in divs {
            let r = vsub(&rest, s);
            if self.sigma.in_cone(&r) && self.in_sigma(&r)? {
                if out.len() >= self.fiber_budget {
                    return Err(Error::FiberBudgetExceeded(self.fiber_budget));
                }
                cur.push(s.clone());
                self.tuples_rec(divs, r, n, cur, out)?;
                cur.pop();
            }
        }
        Ok(())
    }
}
