//! Sparse multivariate polynomials over a [`Field`] and monomial orders.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::field::{Coef, Field};
use num_traits::{One, Zero};

pub type Exponent = Vec<u32>;

/// Monomial orders. Variables with smaller index are larger.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Consecutive blocks of the given sizes, compared left to right, each by grevlex.
    /// The sizes must add up to the number of variables.
    BlockGrevlex(Vec<usize>),
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u64 = a.iter().map(|&x| x as u64).sum();
    let db: u64 = b.iter().map(|&x| x as u64).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for (x, y) in a.iter().zip(b).rev() {
        if x != y {
            return y.cmp(x);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    pub fn cmp(&self, a: &[u32], b: &[u32]) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::BlockGrevlex(sizes) => {
                let mut start = 0;
                for &s in sizes {
                    match grevlex(&a[start..start + s], &b[start..start + s]) {
                        Ordering::Equal => start += s,
                        o => return o,
                    }
                }
                grevlex(&a[start..], &b[start..])
            }
        }
    }

    /// Elimination order with the first `k` variables eliminated.
    pub fn eliminate_first(k: usize, nvars: usize) -> Self {
        MonomialOrder::BlockGrevlex(vec![k, nvars - k])
    }
}

pub fn divides(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

pub fn lcm(a: &[u32], b: &[u32]) -> Exponent {
    a.iter().zip(b).map(|(x, y)| *x.max(y)).collect()
}

pub fn coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(x, y)| *x == 0 || *y == 0)
}

pub fn total_degree(a: &[u32]) -> u64 {
    a.iter().map(|&x| x as u64).sum()
}

/// A polynomial in `nvars` variables with coefficients in `field`.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    nvars: usize,
    terms: BTreeMap<Exponent, Coef>,
}

impl Polynomial {
    pub fn zero(field: Field, nvars: usize) -> Self {
        Polynomial { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: Field, nvars: usize, c: Coef) -> Self {
        Self::term(field, c, vec![0; nvars])
    }

    pub fn one(field: Field, nvars: usize) -> Self {
        Self::constant(field, nvars, Coef::one())
    }

    pub fn monomial(field: Field, exp: Exponent) -> Self {
        Self::term(field, Coef::one(), exp)
    }

    pub fn term(field: Field, c: Coef, exp: Exponent) -> Self {
        let mut p = Self::zero(field, exp.len());
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn variable(field: Field, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e)
    }

    /// `x^a - x^b`
    pub fn binomial(field: Field, a: Exponent, b: Exponent) -> Self {
        let mut p = Self::monomial(field, a);
        p.add_term(b, &field.neg(&Coef::one()));
        p
    }

    pub fn from_terms(field: Field, nvars: usize, terms: impl IntoIterator<Item = (Exponent, Coef)>) -> Self {
        let mut p = Self::zero(field, nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars, "exponent length");
            p.add_term(e, &c);
        }
        p
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &Coef)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, e: &[u32]) -> Coef {
        self.terms.get(e).cloned().unwrap_or_else(Coef::zero)
    }

    pub fn add_term(&mut self, e: Exponent, c: &Coef) {
        if c.is_zero() {
            return;
        }
        let f = self.field;
        match self.terms.get_mut(&e) {
            Some(v) => {
                *v = f.add(v, c);
                if v.is_zero() {
                    self.terms.remove(&e);
                }
            }
            None => {
                self.terms.insert(e, c.clone());
            }
        }
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|e| e.iter().all(|&x| x == 0))
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.keys().map(|e| total_degree(e)).max()
    }

    pub fn leading(&self, order: &MonomialOrder) -> Option<(&Exponent, &Coef)> {
        self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0))
    }

    /// Terms sorted in descending order for `order`.
    pub fn sorted_terms(&self, order: &MonomialOrder) -> Vec<(Exponent, Coef)> {
        let mut v: Vec<(Exponent, Coef)> = self.terms.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        v.sort_by(|a, b| order.cmp(&b.0, &a.0));
        v
    }

    fn check(&self, other: &Polynomial) -> Result<()> {
        if self.nvars != other.nvars || self.field != other.field {
            return Err(Error::InvalidAmbient);
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        self.check(other).expect("polynomials in the same ring");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&self.field.neg(&Coef::one()))
    }

    pub fn scale(&self, c: &Coef) -> Polynomial {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), &f.mul(v, c));
        }
        out
    }

    pub fn mul_monomial(&self, c: &Coef, m: &[u32]) -> Polynomial {
        let f = self.field;
        let mut out = Self::zero(f, self.nvars);
        for (e, v) in &self.terms {
            let ne: Exponent = e.iter().zip(m).map(|(a, b)| a + b).collect();
            out.add_term(ne, &f.mul(v, c));
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        self.check(other).expect("polynomials in the same ring");
        let mut out = Self::zero(self.field, self.nvars);
        for (e, c) in &other.terms {
            out = out.add(&self.mul_monomial(c, e));
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Self::one(self.field, self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Renames variable `i` to `map[i]` in a ring with `nvars` variables.
    /// Distinct variables may be sent to the same target.
    pub fn rename(&self, nvars: usize, map: &[usize]) -> Polynomial {
        assert_eq!(map.len(), self.nvars, "variable map length");
        let mut out = Self::zero(self.field, nvars);
        for (e, c) in &self.terms {
            let mut ne = vec![0u32; nvars];
            for (i, &x) in e.iter().enumerate() {
                ne[map[i]] += x;
            }
            out.add_term(ne, c);
        }
        out
    }

    /// Adds `extra` trailing variables (or prepends them with `front = true`).
    pub fn extend_vars(&self, extra: usize, front: bool) -> Polynomial {
        let n = self.nvars + extra;
        let map: Vec<usize> = (0..self.nvars).map(|i| if front { i + extra } else { i }).collect();
        self.rename(n, &map)
    }

    /// Drops variables that do not occur; `keep` lists the retained variables in order.
    pub fn restrict_vars(&self, keep: &[usize]) -> Option<Polynomial> {
        let mut out = Self::zero(self.field, keep.len());
        for (e, c) in &self.terms {
            for (i, &x) in e.iter().enumerate() {
                if x > 0 && !keep.contains(&i) {
                    return None;
                }
            }
            out.add_term(keep.iter().map(|&i| e[i]).collect(), c);
        }
        Some(out)
    }

    /// Groups terms by a key computed from the exponent.
    pub fn split_by<K: Ord>(&self, key: impl Fn(&[u32]) -> K) -> BTreeMap<K, Polynomial> {
        let mut out: BTreeMap<K, Polynomial> = BTreeMap::new();
        for (e, c) in &self.terms {
            out.entry(key(e)).or_insert_with(|| Self::zero(self.field, self.nvars)).add_term(e.clone(), c);
        }
        out
    }

    pub fn make_monic(&self, order: &MonomialOrder) -> Polynomial {
        match self.leading(order) {
            Some((_, c)) => {
                let inv = self.field.inv(c);
                self.scale(&inv)
            }
            None => self.clone(),
        }
    }

    /// True when the polynomial is `c·(m1 - m2)` for monomials `m1 ≠ m2`, or a single term.
    pub fn is_pure_binomial(&self) -> bool {
        match self.terms.len() {
            0 | 1 => true,
            2 => {
                let mut it = self.terms.values();
                let a = it.next().unwrap();
                let b = it.next().unwrap();
                self.field.add(a, b).is_zero()
            }
            _ => false,
        }
    }

    pub fn display_with(&self, names: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut parts = Vec::new();
        for (e, c) in self.terms.iter().rev() {
            let mut mono = Vec::new();
            for (i, &x) in e.iter().enumerate() {
                match x {
                    0 => {}
                    1 => mono.push(names(i)),
                    _ => mono.push(format!("{}^{}", names(i), x)),
                }
            }
            let cs = self.field.display(c);
            let s = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else {
                format!("{}*{}", cs, mono.join("*"))
            };
            parts.push(s);
        }
        parts.join(" + ").replace("+ -", "- ")
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with(&|i| format!("v{i}")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grevlex_and_blocks() {
        let g = MonomialOrder::Grevlex;
        assert_eq!(g.cmp(&[2, 0], &[1, 1]), Ordering::Greater);
        assert_eq!(g.cmp(&[1, 1, 0], &[1, 0, 1]), Ordering::Greater);
        assert_eq!(g.cmp(&[0, 0, 2], &[1, 0, 0]), Ordering::Greater);
        let b = MonomialOrder::eliminate_first(1, 3);
        assert_eq!(b.cmp(&[1, 0, 0], &[0, 5, 5]), Ordering::Greater);
    }

    #[test]
    fn arithmetic() {
        let f = Field::Rational;
        let x = Polynomial::variable(f, 2, 0);
        let y = Polynomial::variable(f, 2, 1);
        let d = x.sub(&y);
        let s = x.mul(&x).add(&x.mul(&y)).add(&y.mul(&y));
        assert_eq!(d.mul(&s), x.pow(3).sub(&y.pow(3)));
        assert!(d.is_pure_binomial());
        assert!(!s.is_pure_binomial());
        let sw = d.rename(2, &[1, 0]);
        assert_eq!(sw, d.neg());
    }
}
