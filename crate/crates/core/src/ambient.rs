//! The rings k[σ^m] realized as free polynomial rings modulo m copies of the
//! toric presentation of k[σ]. Variable `c·k + j` is generator `j` of copy `c`.

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use crate::gb::{self, GbConfig, GroebnerBasis};
use crate::monoid::{vadd, AffineMonoid, ToricPresentation};
use crate::poly::{Exponent, MonomialOrder, Polynomial};

#[derive(Clone, Debug)]
pub struct Ambient {
    pres: ToricPresentation,
    copies: usize,
    relations: Vec<Polynomial>,
}

impl Ambient {
    pub fn new(pres: &ToricPresentation, copies: usize) -> Self {
        let k = pres.nvars;
        let n = k * copies;
        let mut relations = Vec::new();
        for c in 0..copies {
            let map: Vec<usize> = (0..k).map(|j| c * k + j).collect();
            relations.extend(pres.ideal.iter().map(|g| g.rename(n, &map)));
        }
        Ambient { pres: pres.clone(), copies, relations }
    }

    pub fn with_copies(&self, copies: usize) -> Ambient {
        Ambient::new(&self.pres, copies)
    }

    pub fn sigma(&self) -> &AffineMonoid {
        &self.pres.monoid
    }

    pub fn presentation(&self) -> &ToricPresentation {
        &self.pres
    }

    pub fn field(&self) -> Field {
        self.pres.field
    }

    pub fn copies(&self) -> usize {
        self.copies
    }

    /// Variables per copy.
    pub fn k(&self) -> usize {
        self.pres.nvars
    }

    pub fn nvars(&self) -> usize {
        self.pres.nvars * self.copies
    }

    pub fn relations(&self) -> &[Polynomial] {
        &self.relations
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial::zero(self.field(), self.nvars())
    }

    pub fn one(&self) -> Polynomial {
        Polynomial::one(self.field(), self.nvars())
    }

    /// Exponent of a monomial with the given σ-degree in each copy.
    pub fn exponent(&self, degs: &[Vec<i64>]) -> Result<Exponent> {
        if degs.len() != self.copies {
            return Err(Error::DimensionMismatch { expected: self.copies, found: degs.len() });
        }
        let mut e = Vec::with_capacity(self.nvars());
        for d in degs {
            e.extend(self.sigma().exponent_of(d)?);
        }
        Ok(e)
    }

    pub fn monomial(&self, degs: &[Vec<i64>]) -> Result<Polynomial> {
        Ok(Polynomial::monomial(self.field(), self.exponent(degs)?))
    }

    pub fn term(&self, c: Coef, degs: &[Vec<i64>]) -> Result<Polynomial> {
        Ok(Polynomial::term(self.field(), c, self.exponent(degs)?))
    }

    /// The σ-degree of each copy in a monomial.
    pub fn copy_degrees(&self, e: &[u32]) -> Vec<Vec<i64>> {
        let k = self.k();
        (0..self.copies).map(|c| self.sigma().degree_of_exponent(&e[c * k..(c + 1) * k])).collect()
    }

    /// The diagonal torus degree: sum over copies.
    pub fn degree(&self, e: &[u32]) -> Vec<i64> {
        self.copy_degrees(e).iter().fold(self.sigma().zero(), |a, d| vadd(&a, d))
    }

    /// Moves copy `c` of `f` (an element with `source_copies` copies) to copy `map[c]` here.
    pub fn substitute(&self, f: &Polynomial, map: &[usize]) -> Polynomial {
        let k = self.k();
        let var_map: Vec<usize> = map.iter().flat_map(|&t| (0..k).map(move |j| t * k + j)).collect();
        f.rename(self.nvars(), &var_map)
    }

    pub fn with_relations(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        let mut out: Vec<Polynomial> = gens.to_vec();
        out.extend(self.relations.iter().cloned());
        out
    }

    /// Gröbner basis of `(gens) + relations` under grevlex.
    pub fn groebner(&self, gens: &[Polynomial], cfg: &GbConfig) -> Result<GroebnerBasis> {
        gb::groebner(&self.with_relations(gens), self.field(), self.nvars(), cfg)
    }

    /// Normal form modulo the relations only: a canonical form of elements of k[σ^m].
    pub fn canonical(&self, f: &Polynomial, cfg: &GbConfig) -> Result<Polynomial> {
        Ok(self.groebner(&[], cfg)?.normal_form(f))
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::Grevlex
    }

    /// Difference `x_a^w − x_b^w` between copies `a` and `b`.
    pub fn difference(&self, w: &[i64], a: usize, b: usize) -> Result<Polynomial> {
        let zero = self.sigma().zero();
        let mut da = vec![zero.clone(); self.copies];
        let mut db = vec![zero; self.copies];
        da[a] = w.to_vec();
        db[b] = w.to_vec();
        Ok(self.monomial(&da)?.sub(&self.monomial(&db)?))
    }

    /// Splits a polynomial by diagonal torus degree.
    pub fn homogeneous_components(&self, f: &Polynomial) -> Vec<(Vec<i64>, Polynomial)> {
        f.split_by(|e| self.degree(e)).into_iter().collect()
    }
}
