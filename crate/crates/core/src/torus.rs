//! Coordinate rings of tori and their quotients by character lattices.
//!
//! A torus with character lattice `Λ ⊆ ℤ^D` (given by a basis) is realized as
//! k[u_1..u_r, w_1..w_r]/(u_j w_j − 1). The character of `s ∈ Λ` with
//! coordinates `y` is `u^{y⁺} w^{y⁻}`.

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gb::{self, GbConfig, GroebnerBasis};
use crate::poly::{Exponent, Polynomial};
use crate::zlin::Lattice;

#[derive(Clone, Debug)]
pub struct TorusRing {
    field: Field,
    lattice: Lattice,
    basis: Vec<Vec<i64>>,
}

/// The lattice `{s : u^s − 1 ∈ J}` and whether its differences regenerate `J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExponentLattice {
    pub lattice: Lattice,
    pub verified: bool,
}

impl TorusRing {
    pub fn new(field: Field, lattice: &Lattice) -> Result<Self> {
        Ok(TorusRing { field, lattice: lattice.clone(), basis: lattice.basis_i64()? })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn ambient_rank(&self) -> usize {
        self.lattice.ambient_rank()
    }

    pub fn nvars(&self) -> usize {
        2 * self.rank()
    }

    pub fn character_lattice(&self) -> &Lattice {
        &self.lattice
    }

    pub fn inverse_relations(&self) -> Vec<Polynomial> {
        let r = self.rank();
        (0..r)
            .map(|j| {
                let mut e = vec![0u32; 2 * r];
                e[j] = 1;
                e[r + j] = 1;
                Polynomial::monomial(self.field, e).sub(&Polynomial::one(self.field, 2 * r))
            })
            .collect()
    }

    fn exponent_from_coords(&self, y: &[i64]) -> Exponent {
        let r = self.rank();
        let mut e = vec![0u32; 2 * r];
        for (j, &c) in y.iter().enumerate() {
            if c >= 0 {
                e[j] = c as u32;
            } else {
                e[r + j] = (-c) as u32;
            }
        }
        e
    }

    pub fn coords(&self, s: &[i64]) -> Result<Vec<i64>> {
        self.lattice.member_i64(s)?.ok_or_else(|| Error::NotInMonoid(s.to_vec()))
    }

    /// The character `u^s`.
    pub fn character(&self, s: &[i64]) -> Result<Polynomial> {
        Ok(Polynomial::monomial(self.field, self.exponent_from_coords(&self.coords(s)?)))
    }

    /// The element of Λ represented by a monomial.
    pub fn exponent_of_monomial(&self, e: &[u32]) -> Vec<i64> {
        let r = self.rank();
        let mut s = vec![0i64; self.ambient_rank()];
        for (j, b) in self.basis.iter().enumerate() {
            let c = e[j] as i64 - e[r + j] as i64;
            for (t, x) in s.iter_mut().zip(b) {
                *t += c * x;
            }
        }
        s
    }

    /// Generators `u^ℓ − 1` for a basis of a sublattice of Λ.
    pub fn lattice_ideal(&self, l: &Lattice) -> Result<Vec<Polynomial>> {
        let one = Polynomial::one(self.field, self.nvars());
        l.basis_i64()?.iter().map(|b| Ok(self.character(b)?.sub(&one))).collect()
    }

    pub fn with_relations(&self, gens: &[Polynomial]) -> Vec<Polynomial> {
        let mut out = gens.to_vec();
        out.extend(self.inverse_relations());
        out
    }

    pub fn groebner(&self, gens: &[Polynomial], cfg: &GbConfig) -> Result<GroebnerBasis> {
        gb::groebner(&self.with_relations(gens), self.field, self.nvars(), cfg)
    }

    pub fn is_unit_ideal(&self, gens: &[Polynomial], cfg: &GbConfig) -> Result<bool> {
        Ok(self.groebner(gens, cfg)?.is_unit())
    }

    /// Whether the two ideals agree in the torus ring.
    pub fn ideals_equal(&self, a: &[Polynomial], b: &[Polynomial], cfg: &GbConfig) -> Result<bool> {
        let ga = self.groebner(a, cfg)?;
        let gb_ = self.groebner(b, cfg)?;
        Ok(ga.contains_all(&self.with_relations(b)) && gb_.contains_all(&self.with_relations(a)))
    }

    /// Harvests `{s : u^s − 1 ∈ J}` from the reduced basis and checks that the
    /// differences of a lattice basis regenerate `J`.
    pub fn exponent_lattice(&self, gens: &[Polynomial], cfg: &GbConfig) -> Result<ExponentLattice> {
        let d = self.ambient_rank();
        let g = self.groebner(gens, cfg)?;
        if g.is_unit() {
            return Ok(ExponentLattice { lattice: self.lattice.clone(), verified: false });
        }
        let mut diffs = Vec::new();
        let mut pure = true;
        for b in g.basis() {
            let terms: Vec<_> = b.terms().collect();
            if terms.len() == 2 && b.is_pure_binomial() {
                let a = self.exponent_of_monomial(terms[0].0);
                let c = self.exponent_of_monomial(terms[1].0);
                diffs.push(a.iter().zip(&c).map(|(x, y)| x - y).collect::<Vec<i64>>());
            } else {
                pure = false;
            }
        }
        let lattice = Lattice::from_generators(d, &diffs)?;
        let verified = pure && self.ideals_equal(&self.lattice_ideal(&lattice)?, gens, cfg)?;
        Ok(ExponentLattice { lattice, verified })
    }

    /// [`Self::exponent_lattice`], failing when the ideal is not difference-generated.
    pub fn difference_lattice(&self, gens: &[Polynomial], cfg: &GbConfig) -> Result<Lattice> {
        let e = self.exponent_lattice(gens, cfg)?;
        if !e.verified {
            return Err(Error::NotDifferenceGenerated);
        }
        Ok(e.lattice)
    }
}

/// The exponent lattice of an ideal in the characters of the torus with character lattice ℤ^r.
pub fn exponent_lattice(field: Field, r: usize, gens: &[Polynomial], cfg: &GbConfig) -> Result<ExponentLattice> {
    TorusRing::new(field, &Lattice::full(r))?.exponent_lattice(gens, cfg)
}
