//! Interned ideals with memoized arithmetic, for scans that compute the
//! same contents, products and radicals millions of times.

use std::collections::HashMap;
use std::sync::Arc;

use crate::elemset::ElemSet;
use crate::finring::{Elem, FiniteRing};
use crate::ideals::Ideal;
use crate::monoidring::MrElem;

pub type IdealId = u32;

#[derive(Clone)]
pub struct IdealCache {
    ring: Arc<FiniteRing>,
    index: HashMap<ElemSet, IdealId>,
    ideals: Vec<Ideal>,
    principal: Vec<Option<IdealId>>,
    sums: HashMap<(IdealId, IdealId), IdealId>,
    products: HashMap<(IdealId, IdealId), IdealId>,
    radicals: HashMap<IdealId, IdealId>,
    zero: IdealId,
    unit: IdealId,
}

impl IdealCache {
    pub fn new(ring: &Arc<FiniteRing>) -> IdealCache {
        let mut cache = IdealCache {
            ring: ring.clone(),
            index: HashMap::new(),
            ideals: Vec::new(),
            principal: vec![None; ring.order()],
            sums: HashMap::new(),
            products: HashMap::new(),
            radicals: HashMap::new(),
            zero: 0,
            unit: 0,
        };
        cache.zero = cache.intern(Ideal::zero(ring));
        cache.unit = cache.intern(Ideal::unit(ring));
        cache
    }

    pub fn intern(&mut self, ideal: Ideal) -> IdealId {
        if let Some(&id) = self.index.get(ideal.elements()) {
            return id;
        }
        let id = self.ideals.len() as IdealId;
        self.index.insert(ideal.elements().clone(), id);
        self.ideals.push(ideal);
        id
    }

    pub fn get(&self, id: IdealId) -> &Ideal {
        &self.ideals[id as usize]
    }

    pub fn zero(&self) -> IdealId {
        self.zero
    }

    pub fn unit(&self) -> IdealId {
        self.unit
    }

    pub fn principal(&mut self, x: Elem) -> IdealId {
        if let Some(id) = self.principal[x.index()] {
            return id;
        }
        let id = self.intern(Ideal::generate(&self.ring, &[x]));
        self.principal[x.index()] = Some(id);
        id
    }

    pub fn sum(&mut self, a: IdealId, b: IdealId) -> IdealId {
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.sums.get(&key) {
            return id;
        }
        let s = self.get(a).sum(self.get(b)).expect("same ring");
        let id = self.intern(s);
        self.sums.insert(key, id);
        id
    }

    pub fn product(&mut self, a: IdealId, b: IdealId) -> IdealId {
        let key = (a.min(b), a.max(b));
        if let Some(&id) = self.products.get(&key) {
            return id;
        }
        let p = self.get(a).product(self.get(b)).expect("same ring");
        let id = self.intern(p);
        self.products.insert(key, id);
        id
    }

    pub fn radical(&mut self, a: IdealId) -> IdealId {
        if let Some(&id) = self.radicals.get(&a) {
            return id;
        }
        let r = self.get(a).radical();
        let id = self.intern(r);
        self.radicals.insert(a, id);
        id
    }

    pub fn power(&mut self, a: IdealId, n: u32) -> IdealId {
        let mut acc = self.unit;
        for _ in 0..n {
            acc = self.product(acc, a);
        }
        acc
    }

    /// `c(f)` as a sum of principal ideals.
    pub fn content(&mut self, f: &MrElem) -> IdealId {
        let mut acc = self.zero;
        for c in f.coeffs() {
            let p = self.principal(c);
            acc = self.sum(acc, p);
        }
        acc
    }

    pub fn is_subset(&self, a: IdealId, b: IdealId) -> bool {
        a == b || self.get(a).is_subset(self.get(b))
    }
}
