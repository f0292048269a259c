//! Arithmetic in the monoid algebra `B = R[S]`.
//!
//! Elements are finitely supported maps `S → R` stored as key-sorted term
//! lists without zero coefficients, so structural equality is equality in
//! `B`. The content `c(f)` is the ideal generated by the coefficients: `B`
//! is free over `R` with basis `S`, and for a free module `x ∈ IM` holds
//! exactly when every coordinate of `x` lies in `I`, so the intersection
//! defining `c(f)` collapses to the coordinate ideal.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing};
use crate::ideals::Ideal;
use crate::monoids::{Monoid, MonoidElem};

/// An element of `R[S]`. Ordered lexicographically by term list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct MrElem {
    terms: Vec<(MonoidElem, Elem)>,
}

impl MrElem {
    pub fn terms(&self) -> &[(MonoidElem, Elem)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = Elem> + '_ {
        self.terms.iter().map(|(_, c)| *c)
    }

    pub fn coeff(&self, key: &MonoidElem) -> Option<Elem> {
        self.terms
            .binary_search_by(|(k, _)| k.cmp(key))
            .ok()
            .map(|i| self.terms[i].1)
    }
}

/// The context `R[S]`: shared ring and monoid. Elements carry no back
/// reference; operations take them through the context.
#[derive(Clone)]
pub struct MonoidRing {
    ring: Arc<FiniteRing>,
    monoid: Arc<Monoid>,
}

impl fmt::Debug for MonoidRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidRing({})", self.label())
    }
}

impl MonoidRing {
    pub fn new(ring: Arc<FiniteRing>, monoid: Arc<Monoid>) -> MonoidRing {
        MonoidRing { ring, monoid }
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        &self.monoid
    }

    pub fn label(&self) -> String {
        format!("{}[{}]", self.ring.label(), self.monoid.label())
    }

    /// Builds an element, summing repeated keys and dropping zeros.
    pub fn element(&self, terms: Vec<(MonoidElem, Elem)>) -> Result<MrElem> {
        for (k, c) in &terms {
            if !self.monoid.is_canonical(k) {
                return Err(Error::Mismatch(format!(
                    "{} is not an element of {}",
                    self.monoid.fmt_elem(k),
                    self.monoid
                )));
            }
            if c.index() >= self.ring.order() {
                return Err(Error::Mismatch(format!(
                    "coefficient index {} outside {}",
                    c.0, self.ring
                )));
            }
        }
        Ok(self.normalize(terms))
    }

    pub(crate) fn normalize(&self, mut terms: Vec<(MonoidElem, Elem)>) -> MrElem {
        terms.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(MonoidElem, Elem)> = Vec::with_capacity(terms.len());
        for (k, c) in terms {
            match out.last_mut() {
                Some((lk, lc)) if *lk == k => *lc = self.ring.add(*lc, c),
                _ => out.push((k, c)),
            }
        }
        out.retain(|(_, c)| *c != Elem(0));
        MrElem { terms: out }
    }

    pub fn zero(&self) -> MrElem {
        MrElem::default()
    }

    pub fn one(&self) -> MrElem {
        self.constant(self.ring.one())
    }

    pub fn constant(&self, r: Elem) -> MrElem {
        self.monomial(r, self.monoid.identity())
    }

    /// `r·X^s`.
    pub fn monomial(&self, r: Elem, s: MonoidElem) -> MrElem {
        self.normalize(vec![(s, r)])
    }

    pub fn add(&self, f: &MrElem, g: &MrElem) -> MrElem {
        let mut terms = f.terms.clone();
        terms.extend(g.terms.iter().cloned());
        self.normalize(terms)
    }

    pub fn neg(&self, f: &MrElem) -> MrElem {
        MrElem {
            terms: f
                .terms
                .iter()
                .map(|(k, c)| (k.clone(), self.ring.neg(*c)))
                .collect(),
        }
    }

    pub fn sub(&self, f: &MrElem, g: &MrElem) -> MrElem {
        self.add(f, &self.neg(g))
    }

    /// `r·f`.
    pub fn scale(&self, r: Elem, f: &MrElem) -> MrElem {
        let terms = f
            .terms
            .iter()
            .map(|(k, c)| (k.clone(), self.ring.mul(r, *c)))
            .filter(|(_, c)| *c != Elem(0))
            .collect();
        MrElem { terms }
    }

    /// Convolution: `Σ a·b X^{s+t}`.
    pub fn mul(&self, f: &MrElem, g: &MrElem) -> MrElem {
        let mut terms = Vec::with_capacity(f.terms.len() * g.terms.len());
        for (s, a) in &f.terms {
            for (t, b) in &g.terms {
                let c = self.ring.mul(*a, *b);
                if c != Elem(0) {
                    terms.push((self.monoid.combine(s, t), c));
                }
            }
        }
        self.normalize(terms)
    }

    pub fn pow(&self, f: &MrElem, n: u32) -> MrElem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(&acc, f);
        }
        acc
    }

    /// `c(f)`: the ideal generated by the coefficients.
    pub fn content(&self, f: &MrElem) -> Ideal {
        let coeffs: Vec<Elem> = f.coeffs().collect();
        Ideal::generate(&self.ring, &coeffs)
    }

    /// `c(f) = R`.
    pub fn has_unit_content(&self, f: &MrElem) -> bool {
        self.content(f).contains(self.ring.one())
    }

    /// Membership in the extension `IB`, which for free `B` is `c(f) ⊆ I`.
    pub fn in_extension(&self, f: &MrElem, ideal: &Ideal) -> bool {
        f.coeffs().all(|c| ideal.contains(c))
    }

    /// Reduces coefficients along a ring map, e.g. a quotient projection.
    pub fn map_coeffs(&self, target: &MonoidRing, f: &MrElem, map: impl Fn(Elem) -> Elem) -> MrElem {
        target.normalize(f.terms.iter().map(|(k, c)| (k.clone(), map(*c))).collect())
    }

    /// Renders `f` as `c·X^s + …` in key order.
    pub fn fmt_elem(&self, f: &MrElem) -> String {
        crate::expr::render(self, f)
    }

    pub fn parse(&self, text: &str) -> Result<MrElem> {
        crate::expr::parse(self, text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mr(ring: FiniteRing, monoid: Monoid) -> MonoidRing {
        MonoidRing::new(Arc::new(ring), Arc::new(monoid))
    }

    fn key(c: &[i32]) -> MonoidElem {
        MonoidElem::new(c)
    }

    #[test]
    fn absorbing_key_kills_difference() {
        let b = mr(FiniteRing::zmod(4).unwrap(), Monoid::trunc_add(2).unwrap());
        let one = b.ring().one();
        let f = b.monomial(one, key(&[2]));
        let g = b.sub(&b.monomial(one, key(&[1])), &b.monomial(one, key(&[2])));
        assert!(b.mul(&f, &g).is_zero());
        assert!(b.has_unit_content(&f) && b.has_unit_content(&g));
    }

    #[test]
    fn torsion_square_is_zero() {
        let b = mr(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap());
        let one = b.ring().one();
        let f = b.add(&b.one(), &b.monomial(one, key(&[1])));
        // (1 + X)^2 = 1 + 2X + X^2 = 1 + 0 + 1
        assert!(b.mul(&f, &f).is_zero());
        assert_eq!(b.mul(&f, &b.one()), f);
    }

    #[test]
    fn content_of_coefficients() {
        let r = Arc::new(FiniteRing::zmod(4).unwrap());
        let b = MonoidRing::new(r.clone(), Arc::new(Monoid::free(1)));
        let two = r.from_int(2);
        let f = b.element(vec![(key(&[0]), two), (key(&[1]), two)]).unwrap();
        assert_eq!(b.content(&f), Ideal::generate(&r, &[two]));
        assert_eq!(b.content(&b.zero()), Ideal::zero(&r));
        // (2 + 2X)^2 = 4 + 8X + 4X^2 = 0
        assert!(b.pow(&f, 2).is_zero());
    }

    #[test]
    fn element_rejects_foreign_keys() {
        let b = mr(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        let err = b.element(vec![(key(&[-1]), Elem(1))]).unwrap_err();
        assert!(matches!(err, Error::Mismatch(_)));
        assert!(b.element(vec![(key(&[0, 1]), Elem(1))]).is_err());
        assert!(b.element(vec![(key(&[0]), Elem(9))]).is_err());
    }

    #[test]
    fn repeated_keys_merge() {
        let b = mr(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        let f = b
            .element(vec![(key(&[1]), Elem(2)), (key(&[0]), Elem(1)), (key(&[1]), Elem(2))])
            .unwrap();
        assert_eq!(f.terms(), &[(key(&[0]), Elem(1))]);
    }
}
