//! The Amitsur complex C(A, B) for A = k[τ] → B = k[σ], one σ-degree at a time.
//!
//! Cochain level `n` (counting tensor factors, so C^{n−1} = B^{⊗n}) in degree
//! `d` has a basis of classes of n-tuples in σ summing to `d`. The differential
//! inserts the identity at slot i with sign (−1)^i.

use std::collections::HashMap;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::linalg::FMatrix;
use crate::monoid::{AffineMonoid, MonoidHom};
use crate::tensor::{TensorMonomial, TensorPower, DEFAULT_FIBER_BUDGET};

#[derive(Clone, Debug)]
pub struct AmitsurFiber {
    pub n: usize,
    pub d: Vec<i64>,
    /// One representative per class: most identity slots, then smallest type.
    pub basis: Vec<TensorMonomial>,
    index: HashMap<TensorMonomial, usize>,
}

impl AmitsurFiber {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The class of any tuple in this fiber.
    pub fn class_of(&self, m: &TensorMonomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Number of tuples enumerated.
    pub fn tuple_count(&self) -> usize {
        self.index.len()
    }
}

fn is_identity(s: &[i64]) -> bool {
    s.iter().all(|&x| x == 0)
}

/// Indicator of non-identity slots; compared lexicographically with `true > false`.
fn type_of(m: &TensorMonomial) -> Vec<bool> {
    m.iter().map(|s| !is_identity(s)).collect()
}

#[derive(Clone, Debug)]
pub struct Amitsur {
    sigma: AffineMonoid,
    images: Vec<Vec<i64>>,
    field: Field,
    fiber_budget: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeRow {
    pub degree: Vec<i64>,
    /// Dimensions of C^0, …, C^{n_max}.
    pub fiber_dims: Vec<usize>,
    /// h^0, …, h^{n_max−1}.
    pub h: Vec<usize>,
    pub d_squared_zero: bool,
    #[serde(skip)]
    pub differentials: Vec<FMatrix>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CohomologyTable {
    pub n_max: usize,
    pub rows: Vec<DegreeRow>,
}

impl CohomologyTable {
    /// Whether h^i vanishes for 1 ≤ i ≤ n_max − 1 in every degree.
    pub fn exact(&self) -> bool {
        self.rows.iter().all(|r| r.h.iter().skip(1).all(|&h| h == 0))
    }

    pub fn d_squared_zero(&self) -> bool {
        self.rows.iter().all(|r| r.d_squared_zero)
    }
}

#[derive(Clone, Debug)]
pub struct Reduction {
    /// Coordinates of the preimage on the fiber one level down.
    pub g: Vec<Coef>,
    pub steps: usize,
}

impl Amitsur {
    pub fn new(hom: &MonoidHom, field: Field) -> Result<Self> {
        let sigma = hom.target().clone();
        if !sigma.is_pointed() {
            return Err(Error::NonPointedUnsupported);
        }
        Ok(Amitsur { sigma, images: hom.images().to_vec(), field, fiber_budget: DEFAULT_FIBER_BUDGET })
    }

    pub fn with_fiber_budget(mut self, budget: usize) -> Self {
        self.fiber_budget = budget;
        self
    }

    pub fn field(&self) -> Field {
        self.field
    }

    fn power(&self, n: usize) -> Result<TensorPower> {
        Ok(TensorPower::new(&self.sigma, &self.images, n)?.with_fiber_budget(self.fiber_budget))
    }

    pub fn fiber(&self, n: usize, d: &[i64]) -> Result<AmitsurFiber> {
        let tp = self.power(n)?;
        let tuples = if self.sigma.contains_bool(d)? { tp.tuples(d, n)? } else { Vec::new() };
        let mut index: HashMap<TensorMonomial, usize> = HashMap::new();
        let mut basis = Vec::new();
        for t in &tuples {
            if index.contains_key(t) {
                continue;
            }
            let members = tp.class_members(t)?;
            let rep = members
                .iter()
                .min_by(|a, b| {
                    TensorPower::identity_count(b)
                        .cmp(&TensorPower::identity_count(a))
                        .then_with(|| type_of(a).cmp(&type_of(b)))
                        .then_with(|| a.cmp(b))
                })
                .expect("class is nonempty")
                .clone();
            let k = basis.len();
            for m in members {
                index.insert(m, k);
            }
            basis.push(rep);
        }
        // Deterministic order independent of enumeration.
        let mut order: Vec<usize> = (0..basis.len()).collect();
        order.sort_by(|&a, &b| basis[a].cmp(&basis[b]));
        let mut relabel = vec![0; basis.len()];
        for (new, &old) in order.iter().enumerate() {
            relabel[old] = new;
        }
        let basis: Vec<TensorMonomial> = order.iter().map(|&o| basis[o].clone()).collect();
        for v in index.values_mut() {
            *v = relabel[*v];
        }
        Ok(AmitsurFiber { n, d: d.to_vec(), basis, index })
    }

    /// The matrix of d: C^{n−1} → C^n from `src` (level n) to `dst` (level n+1).
    pub fn differential(&self, src: &AmitsurFiber, dst: &AmitsurFiber) -> Result<FMatrix> {
        if dst.n != src.n + 1 || dst.d != src.d {
            return Err(Error::InvalidInput("fibers are not consecutive levels of one degree".into()));
        }
        let f = self.field;
        let mut m = FMatrix::zeros(f, dst.dim(), src.dim());
        for (j, rep) in src.basis.iter().enumerate() {
            for i in 1..=src.n + 1 {
                let mut t = rep.clone();
                t.insert(i - 1, self.sigma.zero());
                let row = dst
                    .class_of(&t)
                    .ok_or_else(|| Error::InternalInvariantViolated("inserted tuple missing from fiber".into()))?;
                let sign = if i % 2 == 0 { f.one() } else { f.neg(&f.one()) };
                m.add_to(row, j, &sign);
            }
        }
        Ok(m)
    }

    fn degree_row(&self, n_max: usize, d: &[i64]) -> Result<DegreeRow> {
        let fibers: Vec<AmitsurFiber> = (1..=n_max + 1).map(|n| self.fiber(n, d)).collect::<Result<_>>()?;
        let diffs: Vec<FMatrix> = fibers.windows(2).map(|w| self.differential(&w[0], &w[1])).collect::<Result<_>>()?;
        let ranks: Vec<usize> = diffs.iter().map(FMatrix::rank).collect();
        let mut h = Vec::with_capacity(n_max);
        for i in 0..n_max {
            let ker = fibers[i].dim() - ranks[i];
            let im = if i == 0 { 0 } else { ranks[i - 1] };
            h.push(ker - im);
        }
        let d_squared_zero = diffs.windows(2).all(|w| w[1].mul(&w[0]).is_zero());
        Ok(DegreeRow {
            degree: d.to_vec(),
            fiber_dims: fibers.iter().map(AmitsurFiber::dim).collect(),
            h,
            d_squared_zero,
            differentials: diffs,
        })
    }

    /// h^i(d) for 0 ≤ i < n_max in each listed degree, computed in parallel.
    pub fn cohomology_table(&self, n_max: usize, degrees: &[Vec<i64>]) -> Result<CohomologyTable> {
        if n_max == 0 {
            return Err(Error::InvalidInput("n_max must be positive".into()));
        }
        let rows: Vec<DegreeRow> = degrees.par_iter().map(|d| self.degree_row(n_max, d)).collect::<Result<_>>()?;
        Ok(CohomologyTable { n_max, rows })
    }

    /// Writes a cocycle at level `n ≥ 2` as a coboundary by repeatedly
    /// cancelling a dominant term, then checks d(g) = f.
    pub fn cocycle_reduce(&self, n: usize, d: &[i64], f: &[Coef]) -> Result<Reduction> {
        if n < 2 {
            return Err(Error::InvalidInput("cocycle reduction needs at least two tensor factors".into()));
        }
        let field = self.field;
        let lower = self.fiber(n - 1, d)?;
        let here = self.fiber(n, d)?;
        let upper = self.fiber(n + 1, d)?;
        if f.len() != here.dim() {
            return Err(Error::DimensionMismatch { expected: here.dim(), found: f.len() });
        }
        if !self.differential(&here, &upper)?.mul_vec(f).iter().all(Zero::is_zero) {
            return Err(Error::NotACocycle);
        }
        let dmat = self.differential(&lower, &here)?;
        let mut rest = f.to_vec();
        let mut g = vec![Coef::zero(); lower.dim()];
        let cap = 4 * (here.dim() + 1) * (here.dim() + 1);
        let mut steps = 0;
        while let Some(j) = (0..here.dim()).filter(|&j| !rest[j].is_zero()).max_by(|&a, &b| {
            type_of(&here.basis[a]).cmp(&type_of(&here.basis[b])).then_with(|| b.cmp(&a))
        }) {
            steps += 1;
            if steps > cap {
                return Err(Error::InternalInvariantViolated("cocycle reduction did not terminate".into()));
            }
            let s = &here.basis[j];
            let r = s.iter().rposition(|x| !is_identity(x)).map_or(0, |p| p + 1);
            let nonid = s.iter().filter(|x| !is_identity(x)).count();
            let p: TensorMonomial = if r < n {
                // Drop one trailing identity: μ of the last two slots.
                s[..n - 1].to_vec()
            } else if nonid == 1 {
                let mut p = vec![self.sigma.zero(); n - 1];
                p[n - 2] = s[n - 1].clone();
                p
            } else {
                return Err(Error::InternalInvariantViolated(format!("dominant term {s:?} has no trailing identity")));
            };
            let pj = lower
                .class_of(&p)
                .ok_or_else(|| Error::InternalInvariantViolated("preimage tuple missing from fiber".into()))?;
            let c = dmat.get(j, pj).clone();
            if c.is_zero() {
                return Err(Error::InternalInvariantViolated(format!("dominant term {s:?} does not occur in d(p)")));
            }
            let coef = field.div(&rest[j], &c);
            g[pj] = field.add(&g[pj], &coef);
            for (i, r) in rest.iter_mut().enumerate() {
                let e = dmat.get(i, pj);
                if !e.is_zero() {
                    *r = field.sub(r, &field.mul(&coef, e));
                }
            }
        }
        if dmat.mul_vec(&g) != f {
            return Err(Error::InternalInvariantViolated("reduced preimage does not map to the cocycle".into()));
        }
        Ok(Reduction { g, steps })
    }
}

/// The classes of B^{⊗n} in degree `d` for the algebra map given by `hom`.
pub fn fiber_basis(hom: &MonoidHom, n: usize, d: &[i64]) -> Result<AmitsurFiber> {
    Amitsur::new(hom, Field::Rational)?.fiber(n, d)
}
