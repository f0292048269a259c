//! Ideals of a [`FiniteRing`] with fully materialised element sets, and the
//! prime-structure queries built on them.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing};

pub const DEFAULT_GEN_CAP: usize = 3;

#[derive(Clone)]
pub struct Ideal {
    ring: Arc<FiniteRing>,
    gens: Vec<Elem>,
    elements: ElemSet,
}

/// Equality is equality of element sets.
impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.elements == other.elements
    }
}

impl Eq for Ideal {}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ideal{self}")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_proper() {
            return f.write_str("(1)");
        }
        let gens = self.small_generators();
        if gens.is_empty() {
            return f.write_str("(0)");
        }
        let parts: Vec<String> = gens.iter().map(|&g| self.ring.fmt_elem(g)).collect();
        write!(f, "({})", parts.join(", "))
    }
}

pub(crate) fn same_ring(a: &Arc<FiniteRing>, b: &Arc<FiniteRing>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// `{r·g : r ∈ R}`.
pub(crate) fn principal_set(ring: &FiniteRing, g: Elem) -> ElemSet {
    let mut s = ElemSet::empty(ring.order());
    for r in ring.elements() {
        s.insert(ring.mul(r, g).index());
    }
    s
}

/// `{a + b : a ∈ x, b ∈ y}`.
pub(crate) fn sumset(ring: &FiniteRing, x: &ElemSet, y: &ElemSet) -> ElemSet {
    if y.is_subset(x) {
        return x.clone();
    }
    if x.is_subset(y) {
        return y.clone();
    }
    let mut s = ElemSet::empty(ring.order());
    let ys: Vec<usize> = y.iter().collect();
    for a in x.iter() {
        for &b in &ys {
            s.insert(ring.add(Elem(a as u32), Elem(b as u32)).index());
        }
    }
    s
}

/// Sorted element list, used as the canonical ordering key for ideals.
pub(crate) fn order_key(s: &ElemSet) -> Vec<usize> {
    s.iter().collect()
}

impl Ideal {
    /// The smallest ideal containing `gens`: the additive closure of all
    /// `r·g`.
    pub fn generate(ring: &Arc<FiniteRing>, gens: &[Elem]) -> Ideal {
        let mut elements = ElemSet::empty(ring.order());
        elements.insert(0);
        for &g in gens {
            if elements.contains(g.index()) {
                continue;
            }
            elements = sumset(ring, &elements, &principal_set(ring, g));
        }
        Ideal {
            ring: ring.clone(),
            gens: gens.to_vec(),
            elements,
        }
    }

    /// Wraps a set already known to be an ideal.
    pub(crate) fn from_set(ring: &Arc<FiniteRing>, elements: ElemSet) -> Ideal {
        let mut ideal = Ideal {
            ring: ring.clone(),
            gens: Vec::new(),
            elements,
        };
        ideal.gens = ideal.small_generators();
        ideal
    }

    pub fn zero(ring: &Arc<FiniteRing>) -> Ideal {
        Self::generate(ring, &[])
    }

    pub fn unit(ring: &Arc<FiniteRing>) -> Ideal {
        Self::generate(ring, &[ring.one()])
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn gens(&self) -> &[Elem] {
        &self.gens
    }

    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.count()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    pub fn contains(&self, x: Elem) -> bool {
        self.elements.contains(x.index())
    }

    pub fn is_proper(&self) -> bool {
        !self.contains(self.ring.one())
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.elements.is_subset(&other.elements)
    }

    /// Closure under addition and under multiplication by every ring element.
    pub fn is_closed(&self) -> bool {
        let r = &self.ring;
        self.elements.contains(0)
            && self.elements.iter().all(|a| {
                let a = Elem(a as u32);
                self.elements
                    .iter()
                    .all(|b| self.contains(r.add(a, Elem(b as u32))))
                    && r.elements().all(|x| self.contains(r.mul(x, a)))
            })
    }

    /// Greedy ideal generators: scan elements in order, keeping each one not
    /// yet in the ideal generated so far.
    pub fn small_generators(&self) -> Vec<Elem> {
        let r = &self.ring;
        let mut current = ElemSet::empty(r.order());
        current.insert(0);
        let mut gens = Vec::new();
        for x in self.elements.iter() {
            if !current.contains(x) {
                let g = Elem(x as u32);
                gens.push(g);
                current = sumset(r, &current, &principal_set(r, g));
            }
        }
        gens
    }

    /// Greedy generators of the underlying additive group.
    pub fn additive_generators(&self) -> Vec<Elem> {
        let r = &self.ring;
        let mut span = ElemSet::empty(r.order());
        span.insert(0);
        let mut gens = Vec::new();
        for x in self.elements.iter() {
            if span.contains(x) {
                continue;
            }
            let g = Elem(x as u32);
            gens.push(g);
            let mut cyclic = ElemSet::empty(r.order());
            let mut m = r.zero();
            loop {
                cyclic.insert(m.index());
                m = r.add(m, g);
                if m == r.zero() {
                    break;
                }
            }
            span = sumset(r, &span, &cyclic);
        }
        gens
    }

    fn check_ring(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let mut gens = self.gens.clone();
        gens.extend_from_slice(&other.gens);
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
            elements: sumset(&self.ring, &self.elements, &other.elements),
        })
    }

    /// Generated by pairwise products of generators.
    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let r = &self.ring;
        let gens: Vec<Elem> = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| r.mul(a, b)))
            .collect();
        Ok(Ideal::generate(r, &gens))
    }

    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let elements = self.elements.intersection(&other.elements);
        let gens = elements.iter().map(|x| Elem(x as u32)).collect();
        Ok(Ideal {
            ring: self.ring.clone(),
            gens,
            elements,
        })
    }

    /// `(self : other) = {x : x·other ⊆ self}`.
    pub fn colon(&self, other: &Ideal) -> Result<Ideal> {
        self.check_ring(other)?;
        let r = &self.ring;
        let gens: Vec<Elem> = r
            .elements()
            .filter(|&x| other.gens.iter().all(|&g| self.contains(r.mul(x, g))))
            .collect();
        Ok(Ideal::generate(r, &gens))
    }

    pub fn combine(&self, op: IdealOp, other: &Ideal) -> Result<Ideal> {
        match op {
            IdealOp::Sum => self.sum(other),
            IdealOp::Product => self.product(other),
            IdealOp::Intersection => self.intersection(other),
            IdealOp::Colon => self.colon(other),
        }
    }

    /// `I^n`, with `I^0 = R`.
    pub fn power(&self, n: u32) -> Ideal {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self).expect("same ring");
        }
        acc
    }

    /// `{x : x·I = 0}`.
    pub fn annihilator(&self) -> Ideal {
        let r = &self.ring;
        let gens: Vec<Elem> = r
            .elements()
            .filter(|&x| self.gens.iter().all(|&g| r.mul(x, g) == r.zero()))
            .collect();
        Ideal::generate(r, &gens)
    }

    /// `{x : x^n ∈ I for some n ≤ |R|}`.
    pub fn radical(&self) -> Ideal {
        let r = &self.ring;
        let gens: Vec<Elem> = r
            .elements()
            .filter(|&x| {
                let mut p = x;
                for _ in 0..r.order() {
                    if self.contains(p) {
                        return true;
                    }
                    p = r.mul(p, x);
                }
                false
            })
            .collect();
        Ideal::generate(r, &gens)
    }

    pub fn is_prime(&self) -> bool {
        let r = &self.ring;
        self.is_proper()
            && r.elements().all(|a| {
                self.contains(a)
                    || r.elements()
                        .all(|b| !self.contains(r.mul(a, b)) || self.contains(b))
            })
    }

    pub fn is_primary(&self) -> bool {
        if !self.is_proper() {
            return false;
        }
        let r = &self.ring;
        let rad = self.radical();
        r.elements().all(|a| {
            self.contains(a)
                || r.elements()
                    .all(|b| !self.contains(r.mul(a, b)) || rad.contains(b))
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Sum,
    Product,
    Intersection,
    Colon,
}

fn sort_ideals(ideals: &mut [Ideal]) {
    ideals.sort_by_cached_key(|i| (i.len(), order_key(i.elements())));
}

// Prime lists are antichains; plain lexicographic order lists (2) before (3).
fn sort_primes(ideals: &mut [Ideal]) {
    ideals.sort_by_cached_key(|i| order_key(i.elements()));
}

/// Number of generators that always suffices: any subgroup of an additive
/// group of order `n` is generated by at most `log2 n` elements.
fn exhaustive_gen_cap(ring: &FiniteRing) -> usize {
    (usize::BITS - (ring.order() - 1).leading_zeros()) as usize
}

/// All ideals generated by at most `gen_cap` elements, deduplicated and
/// sorted by size. Rings of order ≤ 8 are cross-checked against a brute-force
/// scan of every subset.
pub fn enumerate_ideals(ring: &Arc<FiniteRing>, gen_cap: usize) -> Result<Vec<Ideal>> {
    let gen_cap = gen_cap.max(1);
    let mut seen: BTreeMap<ElemSet, Ideal> = BTreeMap::new();
    let zero = Ideal::zero(ring);
    seen.insert(zero.elements.clone(), zero.clone());
    let mut layer = vec![zero];
    for _ in 0..gen_cap {
        let mut next = Vec::new();
        for base in &layer {
            for x in ring.elements() {
                if base.contains(x) {
                    continue;
                }
                let mut gens = base.gens.clone();
                gens.push(x);
                let elements = sumset(ring, &base.elements, &principal_set(ring, x));
                if seen.contains_key(&elements) {
                    continue;
                }
                let ideal = Ideal {
                    ring: ring.clone(),
                    gens,
                    elements,
                };
                seen.insert(ideal.elements.clone(), ideal.clone());
                next.push(ideal);
            }
        }
        if next.is_empty() {
            break;
        }
        layer = next;
    }
    let mut ideals: Vec<Ideal> = seen.into_values().collect();
    sort_ideals(&mut ideals);

    if ring.order() <= 8 {
        let full = brute_force_ideals(ring);
        let generated_ok = ideals.iter().all(|i| full.contains(&i.elements));
        let complete = gen_cap < exhaustive_gen_cap(ring) || full.len() == ideals.len();
        if !generated_ok || !complete {
            return Err(Error::CrossValidationMismatch(format!(
                "enumerate_ideals({ring}) found {} ideals, subset scan found {}",
                ideals.len(),
                full.len()
            )));
        }
    }
    Ok(ideals)
}

/// Every subset containing 0 that is closed under addition and ring
/// multiplication. Exponential; only for tiny rings.
fn brute_force_ideals(ring: &FiniteRing) -> Vec<ElemSet> {
    let n = ring.order();
    assert!(n <= 16);
    let mut out = Vec::new();
    for mask in 0u32..(1 << (n - 1)) {
        let mut s = ElemSet::empty(n);
        s.insert(0);
        for i in 1..n {
            if mask >> (i - 1) & 1 == 1 {
                s.insert(i);
            }
        }
        let closed = s.iter().all(|a| {
            let a = Elem(a as u32);
            s.iter().all(|b| s.contains(ring.add(a, Elem(b as u32)).index()))
                && ring.elements().all(|x| s.contains(ring.mul(x, a).index()))
        });
        if closed {
            out.push(s);
        }
    }
    out
}

/// All prime ideals, computed by lifting primitive idempotents of
/// `R/Jac(R)`, then cross-validated against primality scans.
pub fn spectrum(ring: &Arc<FiniteRing>) -> Result<Vec<Ideal>> {
    let jac = ring.jacobson();
    let q = ring.quotient(&jac)?;
    let qr = &q.ring;
    let idem: Vec<Elem> = qr.idempotents().iter().map(|x| Elem(x as u32)).collect();
    let primitive: Vec<Elem> = idem
        .iter()
        .copied()
        .filter(|&e| {
            e != qr.zero()
                && !idem
                    .iter()
                    .any(|&f| f != qr.zero() && f != e && qr.mul(f, e) == f)
        })
        .collect();
    let mut primes = Vec::new();
    for e in primitive {
        let complement = qr.sub(qr.one(), e);
        let image = principal_set(qr, complement);
        let mut pre = ElemSet::empty(ring.order());
        for x in ring.elements() {
            if image.contains(q.project(x).index()) {
                pre.insert(x.index());
            }
        }
        primes.push(Ideal::from_set(ring, pre));
    }
    sort_primes(&mut primes);

    if let Some(bad) = primes.iter().find(|p| !p.is_prime()) {
        return Err(Error::CrossValidationMismatch(format!(
            "idempotent lifting produced non-prime {bad}"
        )));
    }
    if ring.order() <= 64 {
        let mut scanned: Vec<Ideal> = enumerate_ideals(ring, exhaustive_gen_cap(ring))?
            .into_iter()
            .filter(Ideal::is_prime)
            .collect();
        sort_primes(&mut scanned);
        if scanned != primes {
            return Err(Error::CrossValidationMismatch(format!(
                "spectrum({ring}): lifting gave {} primes, scan gave {}",
                primes.len(),
                scanned.len()
            )));
        }
    }
    Ok(primes)
}

/// Primes that are minimal under inclusion.
pub fn minimal_primes(primes: &[Ideal]) -> Vec<Ideal> {
    primes
        .iter()
        .filter(|p| !primes.iter().any(|q| q != *p && q.is_subset(p)))
        .cloned()
        .collect()
}

/// `{Ann(x) : Ann(x) prime}`.
pub fn associated_primes(ring: &Arc<FiniteRing>) -> Vec<Ideal> {
    let mut seen: BTreeMap<ElemSet, Ideal> = BTreeMap::new();
    for x in ring.elements() {
        let ann = Ideal::generate(ring, &[x]).annihilator();
        if !seen.contains_key(ann.elements()) && ann.is_prime() {
            seen.insert(ann.elements().clone(), ann);
        }
    }
    let mut out: Vec<Ideal> = seen.into_values().collect();
    sort_primes(&mut out);
    out
}

#[derive(Debug, Clone)]
pub struct PropertyA {
    pub holds: bool,
    pub witness: Option<Ideal>,
    pub gen_cap: usize,
}

/// Every enumerated ideal inside `Z(R)` has a nonzero annihilator.
pub fn has_property_a(ring: &Arc<FiniteRing>, gen_cap: usize) -> Result<PropertyA> {
    let zd = ring.zero_divisor_set();
    for ideal in enumerate_ideals(ring, gen_cap)? {
        if ideal.elements().is_subset(&zd) && ideal.annihilator().is_zero() {
            return Ok(PropertyA {
                holds: false,
                witness: Some(ideal),
                gen_cap,
            });
        }
    }
    Ok(PropertyA {
        holds: true,
        witness: None,
        gen_cap,
    })
}

#[derive(Debug, Clone)]
pub struct Vfzd {
    pub holds: bool,
    pub cover: Vec<Ideal>,
}

/// Whether `Z(R)` is a union of associated primes; returns the smallest
/// covering subfamily (fewest primes, then earliest in order). For a domain
/// the cover is `{(0)}`.
pub fn very_few_zero_divisors(ring: &Arc<FiniteRing>) -> Vfzd {
    let zd = ring.zero_divisor_set();
    let ass = associated_primes(ring);
    let n = ass.len();
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|m| (m.count_ones(), m.reverse_bits()));
    for mask in masks {
        let mut union = ElemSet::empty(ring.order());
        for (i, p) in ass.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union = union.union(p.elements());
            }
        }
        if union == zd {
            let cover = (0..n)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| ass[i].clone())
                .collect();
            return Vfzd { holds: true, cover };
        }
    }
    Vfzd {
        holds: false,
        cover: Vec::new(),
    }
}

/// First index `i` with `I ⊆ primes[i]`.
pub fn prime_avoidance_locate(ideal: &Ideal, primes: &[Ideal]) -> Option<usize> {
    primes.iter().position(|p| ideal.is_subset(p))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zmod(n: u32) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::zmod(n).unwrap())
    }

    fn trunc(cap: u32) -> Arc<FiniteRing> {
        Arc::new(FiniteRing::trunc_poly(2, 2, cap).unwrap())
    }

    fn els(i: &Ideal) -> Vec<usize> {
        i.elements().iter().collect()
    }

    fn principal(r: &Arc<FiniteRing>, n: i64) -> Ideal {
        Ideal::generate(r, &[r.from_int(n)])
    }

    #[test]
    fn generation() {
        let r = zmod(6);
        assert_eq!(els(&principal(&r, 2)), vec![0, 2, 4]);
        assert_eq!(els(&Ideal::generate(&r, &[])), vec![0]);
        let t = trunc(3);
        let m = Ideal::generate(&t, &[t.basis_elem(1), t.basis_elem(2)]);
        assert_eq!(m.len(), 32);
        for x in t.elements() {
            assert_eq!(m.contains(x), t.coords(x)[0] == 0);
        }
        assert!(m.is_closed());
    }

    #[test]
    fn combinations() {
        let r4 = zmod(4);
        let two = principal(&r4, 2);
        assert!(two.product(&two).unwrap().is_zero());
        let r6 = zmod(6);
        let i = principal(&r6, 2).intersection(&principal(&r6, 3)).unwrap();
        assert!(i.is_zero());
        let z = Ideal::zero(&r6);
        assert_eq!(principal(&r6, 2).sum(&z).unwrap(), principal(&r6, 2));
        let c = Ideal::zero(&r4).colon(&two).unwrap();
        assert_eq!(c, two);
        assert_eq!(
            principal(&r4, 2).sum(&principal(&r6, 2)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn annihilators_and_radicals() {
        let r4 = zmod(4);
        let r6 = zmod(6);
        assert_eq!(els(&principal(&r4, 2).annihilator()), vec![0, 2]);
        assert!(Ideal::unit(&r4).annihilator().is_zero());
        assert_eq!(els(&principal(&r6, 2).annihilator()), vec![0, 3]);
        assert_eq!(els(&Ideal::zero(&r4).radical()), vec![0, 2]);
        assert_eq!(els(&principal(&r6, 2).radical()), vec![0, 2, 4]);
        assert_eq!(Ideal::unit(&r6).radical(), Ideal::unit(&r6));
    }

    #[test]
    fn primality() {
        let r4 = zmod(4);
        let r6 = zmod(6);
        assert!(principal(&r6, 2).is_prime());
        assert!(!Ideal::zero(&r4).is_prime());
        assert!(!Ideal::unit(&r4).is_prime());
        assert!(Ideal::zero(&r4).is_primary());
        assert!(!Ideal::zero(&r6).is_primary());
        assert!(principal(&r6, 3).is_primary());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_ideals(&zmod(6), 1).unwrap().len(), 4);
        assert_eq!(enumerate_ideals(&zmod(4), 1).unwrap().len(), 3);
        assert_eq!(enumerate_ideals(&zmod(2), 1).unwrap().len(), 2);
        // F2[a,b]/(a,b)^2: (0), three lines in m, m, R
        assert_eq!(enumerate_ideals(&trunc(2), 3).unwrap().len(), 6);
        // m^2 of F2[a,b]/(a,b)^3 needs three generators
        let t = trunc(3);
        let with2 = enumerate_ideals(&t, 2).unwrap();
        let with3 = enumerate_ideals(&t, 3).unwrap();
        let m = Ideal::generate(&t, &[t.basis_elem(1), t.basis_elem(2)]);
        let m2 = m.product(&m).unwrap();
        assert_eq!(m.power(2), m2);
        assert_eq!(m2.len(), 8);
        assert!(!with2.contains(&m2));
        assert!(with3.contains(&m2));
    }

    #[test]
    fn spectra() {
        let s6 = spectrum(&zmod(6)).unwrap();
        assert_eq!(s6, vec![principal(&zmod(6), 2), principal(&zmod(6), 3)]);
        let r4 = zmod(4);
        assert_eq!(spectrum(&r4).unwrap(), vec![principal(&r4, 2)]);
        let r2 = zmod(2);
        assert_eq!(spectrum(&r2).unwrap(), vec![Ideal::zero(&r2)]);
        let t = trunc(3);
        let s = spectrum(&t).unwrap();
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].len(), 32);
    }

    #[test]
    fn associated() {
        let r6 = zmod(6);
        assert_eq!(
            associated_primes(&r6),
            vec![principal(&r6, 2), principal(&r6, 3)]
        );
        let r4 = zmod(4);
        assert_eq!(associated_primes(&r4), vec![principal(&r4, 2)]);
        let r2 = zmod(2);
        assert_eq!(associated_primes(&r2), vec![Ideal::zero(&r2)]);
    }

    #[test]
    fn property_a_and_vfzd() {
        for n in [2, 4, 6, 8] {
            assert!(has_property_a(&zmod(n), 3).unwrap().holds);
        }
        let v = very_few_zero_divisors(&zmod(6));
        assert!(v.holds);
        assert_eq!(v.cover, associated_primes(&zmod(6)));
        let r8 = zmod(8);
        let v = very_few_zero_divisors(&r8);
        assert!(v.holds);
        assert_eq!(v.cover, vec![principal(&r8, 2)]);
        let r2 = zmod(2);
        assert_eq!(very_few_zero_divisors(&r2).cover, vec![Ideal::zero(&r2)]);
    }

    #[test]
    fn avoidance() {
        let r6 = zmod(6);
        let primes = vec![principal(&r6, 2), principal(&r6, 3)];
        assert_eq!(prime_avoidance_locate(&principal(&r6, 2), &primes), Some(0));
        assert_eq!(prime_avoidance_locate(&Ideal::zero(&r6), &primes[..1]), Some(0));
        assert_eq!(prime_avoidance_locate(&Ideal::unit(&r6), &primes), None);
    }

    #[test]
    fn display() {
        let r6 = zmod(6);
        assert_eq!(principal(&r6, 4).to_string(), "(2)");
        assert_eq!(Ideal::zero(&r6).to_string(), "(0)");
        assert_eq!(Ideal::unit(&r6).to_string(), "(1)");
    }
}
