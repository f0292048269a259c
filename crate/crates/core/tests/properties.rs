//! Algebraic invariants on randomly drawn elements.

use std::sync::Arc;

use contentalg_core::localize::{frac_arith, frac_eq, FracOp, Fraction};
use contentalg_core::modlab::FreeModule;
use contentalg_core::{Elem, FiniteRing, Ideal, Monoid, MonoidElem, MonoidRing, MrElem};
use proptest::prelude::*;

fn ring(i: usize) -> Arc<FiniteRing> {
    Arc::new(match i % 5 {
        0 => FiniteRing::zmod(6).unwrap(),
        1 => FiniteRing::zmod(8).unwrap(),
        2 => FiniteRing::zmod(12).unwrap(),
        3 => FiniteRing::trunc_poly(2, 2, 2).unwrap(),
        _ => FiniteRing::trunc_poly(2, 2, 3).unwrap(),
    })
}

fn monoid(i: usize) -> Arc<Monoid> {
    Arc::new(match i % 4 {
        0 => Monoid::free(1),
        1 => Monoid::free(2),
        2 => Monoid::group(1, vec![]).unwrap(),
        _ => Monoid::group(0, vec![3]).unwrap(),
    })
}

fn elem(r: &FiniteRing, x: u32) -> Elem {
    Elem(x % r.order() as u32)
}

fn poly(b: &MonoidRing, raw: &[(usize, u32)]) -> MrElem {
    let keys: Vec<MonoidElem> = b.monoid().elements_up_to(2);
    raw.iter()
        .map(|&(k, c)| b.monomial(elem(b.ring(), c), keys[k % keys.len()].clone()))
        .fold(b.zero(), |acc, m| b.add(&acc, &m))
}

fn terms() -> impl Strategy<Value = Vec<(usize, u32)>> {
    prop::collection::vec((0usize..16, 0u32..4096), 0..4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_axioms(i in 0usize..5, x in 0u32..4096, y in 0u32..4096, z in 0u32..4096) {
        let r = ring(i);
        let (x, y, z) = (elem(&r, x), elem(&r, y), elem(&r, z));
        prop_assert_eq!(r.mul(x, y), r.mul(y, x));
        prop_assert_eq!(r.mul(r.mul(x, y), z), r.mul(x, r.mul(y, z)));
        prop_assert_eq!(r.mul(x, r.add(y, z)), r.add(r.mul(x, y), r.mul(x, z)));
        prop_assert_eq!(r.mul(r.one(), x), x);
        prop_assert_eq!(r.add(x, r.neg(x)), r.zero());
    }

    #[test]
    fn ideal_laws(i in 0usize..5, x in 0u32..4096, y in 0u32..4096) {
        let r = ring(i);
        let a = Ideal::generate(&r, &[elem(&r, x)]);
        let b = Ideal::generate(&r, &[elem(&r, y)]);
        let prod = a.product(&b).unwrap();
        prop_assert!(prod.is_subset(&a.intersection(&b).unwrap()));
        prop_assert!(a.colon(&b).unwrap().product(&b).unwrap().is_subset(&a));
        prop_assert_eq!(a.radical().radical(), a.radical());
        prop_assert!(a.is_subset(&a.sum(&b).unwrap()));
    }

    #[test]
    fn content_laws(i in 0usize..5, m in 0usize..4, f in terms(), g in terms(), s in 0u32..4096) {
        let b = MonoidRing::new(ring(i), monoid(m));
        let (f, g) = (poly(&b, &f), poly(&b, &g));
        let (cf, cg) = (b.content(&f), b.content(&g));
        prop_assert_eq!(cf.is_zero(), f.is_zero());
        prop_assert!(b.content(&b.add(&f, &g)).is_subset(&cf.sum(&cg).unwrap()));
        prop_assert!(b.content(&b.mul(&f, &g)).is_subset(&cf.product(&cg).unwrap()));
        let s = elem(b.ring(), s);
        let scaled = Ideal::generate(b.ring(), &[s]).product(&cf).unwrap();
        prop_assert_eq!(b.content(&b.scale(s, &f)), scaled);
        prop_assert!(b.in_extension(&f, &cf));
    }

    #[test]
    fn free_content_subadditive(i in 0usize..5, xs in prop::collection::vec(0u32..4096, 4), s in 0u32..4096) {
        let r = ring(i);
        let m = FreeModule::new(&r, 2, 4096).unwrap();
        let x: Vec<Elem> = xs[..2].iter().map(|&v| elem(&r, v)).collect();
        let y: Vec<Elem> = xs[2..].iter().map(|&v| elem(&r, v)).collect();
        let (cx, cy) = (m.free_content(&x), m.free_content(&y));
        prop_assert!(m.free_content(&m.add(&x, &y)).is_subset(&cx.sum(&cy).unwrap()));
        prop_assert!(m.free_content(&m.scale(elem(&r, s), &x)).is_subset(&cx));
        // x lies in c(x)M.
        prop_assert!(m.extension(&cx).contains(m.encode(&x)));
    }

    #[test]
    fn fraction_equality(i in 0usize..5, m in 0usize..3, f in terms(), g in terms(), u in terms()) {
        let b = MonoidRing::new(ring(i), monoid(m));
        let (f, g) = (poly(&b, &f), poly(&b, &g));
        // X^s + u has unit content whenever u avoids the key of X^s.
        let key = b.monoid().elements_up_to(2).last().unwrap().clone();
        let u = poly(&b, &u);
        let den = if u.coeff(&key).is_none() { b.add(&b.monomial(b.ring().one(), key), &u) } else { b.one() };
        let x = Fraction::new(&b, f.clone(), den.clone()).unwrap();
        let y = Fraction::whole(&b, g);
        prop_assert!(frac_eq(&b, &x, &x));
        prop_assert!(frac_eq(&b, &x, &Fraction::new(&b, b.mul(&f, &den), b.mul(&den, &den)).unwrap()));
        let (xy, yx) = (frac_arith(&b, FracOp::Add, &x, &y), frac_arith(&b, FracOp::Add, &y, &x));
        prop_assert!(frac_eq(&b, &xy, &yx));
        let one = Fraction::whole(&b, b.one());
        prop_assert!(frac_eq(&b, &frac_arith(&b, FracOp::Mul, &x, &one), &x));
    }
}
