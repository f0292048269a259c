//! One instance `(R, S, bounds)` with its scan universe.

use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::cache::{IdealCache, IdealId};
use crate::error::Result;
use crate::finring::{Elem, FiniteRing};
use crate::kernel::{scalar_annihilator, AnnihilatorSearch};
use crate::monoidring::{MonoidRing, MrElem};
use crate::monoids::Monoid;
use crate::universe::{Bounds, Universe};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Route {
    /// `Ann(c(f)) ≠ 0`; sound only for cancellative torsion-free `S`.
    Scalar,
    /// Annihilator search over elements supported on the key set.
    Bounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Killer {
    Scalar(Elem),
    Element(MrElem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ZeroDivisor {
    pub route: Route,
    pub killer: Option<Killer>,
}

impl ZeroDivisor {
    pub fn is_zero_divisor(&self) -> bool {
        self.killer.is_some()
    }
}

pub struct Lab {
    pub b: MonoidRing,
    pub bounds: Bounds,
    pub universe: Universe,
    search: AnnihilatorSearch,
    pairs: OnceLock<PairTable>,
}

/// Contents of every universe element and of every pairwise product,
/// interned in one cache. Checks clone the cache to keep the ids valid.
pub struct PairTable {
    pub cache: IdealCache,
    pub content: Vec<IdealId>,
    products: Vec<IdealId>,
    n: usize,
}

impl PairTable {
    fn build(b: &MonoidRing, elems: &[MrElem]) -> PairTable {
        let n = elems.len();
        let mut cache = IdealCache::new(b.ring());
        let content = elems.iter().map(|f| cache.content(f)).collect();
        let mut products = Vec::with_capacity(n * (n + 1) / 2);
        for i in 0..n {
            for j in i..n {
                let fg = b.mul(&elems[i], &elems[j]);
                products.push(cache.content(&fg));
            }
        }
        PairTable {
            cache,
            content,
            products,
            n,
        }
    }

    /// `c(f_i f_j)`.
    pub fn product(&self, i: usize, j: usize) -> IdealId {
        let (i, j) = (i.min(j), i.max(j));
        self.products[i * (2 * self.n - i + 1) / 2 + (j - i)]
    }

    pub fn is_zero_product(&self, i: usize, j: usize) -> bool {
        self.product(i, j) == self.cache.zero()
    }
}

impl Lab {
    /// `bounds` are resolved against the ring first.
    pub fn new(ring: Arc<FiniteRing>, monoid: Arc<Monoid>, bounds: &Bounds) -> Result<Lab> {
        let bounds = bounds.resolve(&ring)?;
        let b = MonoidRing::new(ring, monoid);
        let universe = Universe::build(&b, &bounds);
        let search = AnnihilatorSearch::new(&b, universe.keys.clone());
        Ok(Lab {
            b,
            bounds,
            universe,
            search,
            pairs: OnceLock::new(),
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        self.b.ring()
    }

    pub fn monoid(&self) -> &Arc<Monoid> {
        self.b.monoid()
    }

    pub fn label(&self) -> String {
        self.b.label()
    }

    pub fn fmt(&self, f: &MrElem) -> String {
        self.b.fmt_elem(f)
    }

    pub fn elems(&self) -> &[MrElem] {
        &self.universe.elems
    }

    pub fn pairs(&self) -> &PairTable {
        self.pairs
            .get_or_init(|| PairTable::build(&self.b, &self.universe.elems))
    }

    /// Nonzero `g` on the key set with `fg = 0`.
    pub fn bounded_killer(&self, f: &MrElem) -> Option<MrElem> {
        self.search.find(f)
    }

    pub fn scalar_killer(&self, f: &MrElem) -> Option<Elem> {
        scalar_annihilator(&self.b.content(f))
    }

    /// The scalar route when `S` is cancellative and torsion-free, the
    /// bounded search otherwise.
    pub fn is_zero_divisor(&self, f: &MrElem) -> ZeroDivisor {
        if self.monoid().is_ct() {
            ZeroDivisor {
                route: Route::Scalar,
                killer: self.scalar_killer(f).map(Killer::Scalar),
            }
        } else {
            ZeroDivisor {
                route: Route::Bounded,
                killer: self.bounded_killer(f).map(Killer::Element),
            }
        }
    }

    pub fn fmt_killer(&self, k: &Killer) -> String {
        match k {
            Killer::Scalar(r) => self.ring().fmt_elem(*r),
            Killer::Element(g) => self.fmt(g),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn routes() {
        let r4 = Arc::new(FiniteRing::zmod(4).unwrap());
        let lab = Lab::new(r4, Arc::new(Monoid::free(1)), &Bounds::default()).unwrap();
        let f = lab.b.parse("2 + 2X").unwrap();
        let zd = lab.is_zero_divisor(&f);
        assert_eq!(zd.route, Route::Scalar);
        assert_eq!(zd.killer, Some(Killer::Scalar(Elem(2))));
        assert!(!lab.is_zero_divisor(&lab.b.one()).is_zero_divisor());

        let f2 = Arc::new(FiniteRing::zmod(2).unwrap());
        let lab = Lab::new(f2, Arc::new(Monoid::group(0, vec![2]).unwrap()), &Bounds::default()).unwrap();
        let f = lab.b.parse("1 + X").unwrap();
        let zd = lab.is_zero_divisor(&f);
        assert_eq!(zd.route, Route::Bounded);
        assert_eq!(zd.killer, Some(Killer::Element(f.clone())));
        assert_eq!(lab.scalar_killer(&f), None);
    }
}
