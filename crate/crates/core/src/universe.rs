//! Bounded element universes for the pair scans.
//!
//! Keys come from `elements_up_to(S, support)`. Elements are enumerated in
//! layers by number of terms, completely while the running total stays
//! within `universe_cap`; the first layer that does not fit is filled with
//! seeded random picks instead. Sample mode restricts layer coefficients
//! to `{1} ∪ ±basis` and adds `sample_size` random elements, half of them
//! with coefficients drawn from a random principal ideal so that contents
//! are often proper.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing, DEFAULT_ORDER_CAP};
use crate::ideals::DEFAULT_GEN_CAP;
use crate::monoidring::{MonoidRing, MrElem};
use crate::monoids::MonoidElem;

/// Rings up to this order may use every nonzero element as a coefficient.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CoeffMode {
    Exhaustive,
    Sample,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Bounds {
    pub support: u32,
    /// Unset means exhaustive for small rings, sample otherwise.
    pub coeff_mode: Option<CoeffMode>,
    pub sample_size: usize,
    pub seed: u64,
    pub gen_cap: usize,
    pub order_cap: usize,
    pub max_terms: usize,
    pub universe_cap: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            support: 3,
            coeff_mode: None,
            sample_size: 500,
            seed: 0,
            gen_cap: DEFAULT_GEN_CAP,
            order_cap: DEFAULT_ORDER_CAP,
            max_terms: 4,
            universe_cap: 2048,
        }
    }
}

impl Bounds {
    pub fn mode_for(&self, order: usize) -> CoeffMode {
        self.coeff_mode.unwrap_or(if order <= EXHAUSTIVE_ORDER_LIMIT {
            CoeffMode::Exhaustive
        } else {
            CoeffMode::Sample
        })
    }

    /// Fills in the coefficient mode for `ring` and checks the field ranges.
    pub fn resolve(&self, ring: &FiniteRing) -> Result<Bounds> {
        let bad = |msg: &str| Err(Error::InvalidDescriptor(msg.to_string()));
        if self.support < 1 {
            return bad("bounds.support must be at least 1");
        }
        if self.gen_cap < 1 {
            return bad("bounds.gen_cap must be at least 1");
        }
        if self.max_terms < 1 || self.universe_cap < 1 {
            return bad("bounds.max_terms and bounds.universe_cap must be positive");
        }
        let mode = self.mode_for(ring.order());
        if mode == CoeffMode::Exhaustive && ring.order() > EXHAUSTIVE_ORDER_LIMIT {
            return Err(Error::InvalidDescriptor(format!(
                "bounds.coeff_mode: exhaustive coefficients need |R| <= {EXHAUSTIVE_ORDER_LIMIT}, {} has order {}",
                ring.label(),
                ring.order()
            )));
        }
        Ok(Bounds {
            coeff_mode: Some(mode),
            ..self.clone()
        })
    }
}

#[derive(Debug, Clone)]
pub struct Universe {
    pub keys: Vec<MonoidElem>,
    /// Nonzero elements, shortest support first, then by term list.
    pub elems: Vec<MrElem>,
    pub enumerated: usize,
    pub sampled: usize,
    pub description: String,
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

impl Universe {
    pub fn build(b: &MonoidRing, bounds: &Bounds) -> Universe {
        let ring = b.ring();
        let keys = b.monoid().elements_up_to(bounds.support);
        let mode = bounds.mode_for(ring.order());
        let coeffs = match mode {
            CoeffMode::Exhaustive => ring.elements().skip(1).collect::<Vec<_>>(),
            CoeffMode::Sample => structured_coeffs(ring),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
        let mut set: BTreeSet<MrElem> = BTreeSet::new();
        let mut full_layers = 0;
        let max_t = bounds.max_terms.min(keys.len());
        for t in 1..=max_t {
            let size = binomial(keys.len(), t) * (coeffs.len() as u128).pow(t as u32);
            if set.len() as u128 + size <= bounds.universe_cap as u128 {
                for combo in combinations(keys.len(), t) {
                    let mut digits = vec![0usize; t];
                    loop {
                        let terms = combo
                            .iter()
                            .zip(&digits)
                            .map(|(&k, &d)| (keys[k].clone(), coeffs[d]))
                            .collect();
                        set.insert(b.normalize(terms));
                        let mut i = 0;
                        while i < t {
                            digits[i] += 1;
                            if digits[i] < coeffs.len() {
                                break;
                            }
                            digits[i] = 0;
                            i += 1;
                        }
                        if i == t {
                            break;
                        }
                    }
                }
                full_layers = t;
            } else {
                let room = bounds.universe_cap - set.len();
                let target = set.len() + room;
                // Bounded attempts: duplicates are possible in tiny layers.
                for _ in 0..room * 4 {
                    if set.len() >= target {
                        break;
                    }
                    let pick = sample(&mut rng, keys.len(), t);
                    let mut chosen: Vec<usize> = pick.into_vec();
                    chosen.sort_unstable();
                    let terms = chosen
                        .iter()
                        .map(|&k| (keys[k].clone(), coeffs[rng.gen_range(0..coeffs.len())]))
                        .collect();
                    set.insert(b.normalize(terms));
                }
                break;
            }
        }
        let enumerated = set.len();
        if mode == CoeffMode::Sample {
            let before = set.len();
            let mut attempts = 0;
            while set.len() < before + bounds.sample_size && attempts < bounds.sample_size * 8 {
                attempts += 1;
                let f = random_element(b, &keys, max_t.max(1), &mut rng);
                if !f.is_zero() {
                    set.insert(f);
                }
            }
        }
        let mut elems: Vec<MrElem> = set.into_iter().collect();
        elems.sort_by(shortlex);
        let sampled = elems.len() - enumerated;
        let description = format!(
            "support {} ({} keys), {} coefficients ({} values), {} elements: {} enumerated \
             (complete through {} terms), {} sampled, seed {}",
            bounds.support,
            keys.len(),
            match mode {
                CoeffMode::Exhaustive => "exhaustive",
                CoeffMode::Sample => "structured",
            },
            coeffs.len(),
            elems.len(),
            enumerated,
            full_layers,
            sampled,
            bounds.seed
        );
        Universe {
            keys,
            elems,
            enumerated,
            sampled,
            description,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}

pub fn shortlex(a: &MrElem, b: &MrElem) -> std::cmp::Ordering {
    a.support_len().cmp(&b.support_len()).then_with(|| a.cmp(b))
}

/// `{1} ∪ {±e_i}`, sorted and deduplicated.
fn structured_coeffs(ring: &FiniteRing) -> Vec<Elem> {
    let mut out: BTreeSet<Elem> = BTreeSet::new();
    out.insert(ring.one());
    for i in 0..ring.basis_len() {
        let e = ring.basis_elem(i);
        out.insert(e);
        out.insert(ring.neg(e));
    }
    out.remove(&ring.zero());
    out.into_iter().collect()
}

fn random_element(b: &MonoidRing, keys: &[MonoidElem], max_terms: usize, rng: &mut ChaCha8Rng) -> MrElem {
    let ring = b.ring();
    let n = ring.order() as u32;
    let t = rng.gen_range(1..=max_terms.min(keys.len()));
    let mut chosen = sample(rng, keys.len(), t).into_vec();
    chosen.sort_unstable();
    let gen = if rng.gen_bool(0.5) {
        Some(Elem(rng.gen_range(1..n)))
    } else {
        None
    };
    let terms = chosen
        .iter()
        .map(|&k| {
            let r = Elem(rng.gen_range(1..n));
            let c = match gen {
                Some(x) => ring.mul(r, x),
                None => r,
            };
            (keys[k].clone(), c)
        })
        .collect();
    b.normalize(terms)
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoids::Monoid;

    fn b(ring: FiniteRing, monoid: Monoid) -> MonoidRing {
        MonoidRing::new(Arc::new(ring), Arc::new(monoid))
    }

    #[test]
    fn small_cells_are_complete() {
        let b4 = b(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        let u = Universe::build(&b4, &Bounds::default());
        // every nonzero polynomial of degree <= 3 over Z/4
        assert_eq!(u.len(), 255);
        assert_eq!(u.sampled, 0);
        let mut sorted = u.elems.clone();
        sorted.sort_by(shortlex);
        assert_eq!(sorted, u.elems);
    }

    #[test]
    fn capped_and_seeded() {
        let bt = b(FiniteRing::trunc_poly(2, 2, 3).unwrap(), Monoid::free(1));
        let bounds = Bounds {
            seed: 7,
            ..Bounds::default()
        };
        let u1 = Universe::build(&bt, &bounds);
        let u2 = Universe::build(&bt, &bounds);
        assert_eq!(u1.elems, u2.elems);
        assert!(u1.sampled >= 500);
        assert!(u1.enumerated <= bounds.universe_cap);
        let other = Universe::build(&bt, &Bounds { seed: 8, ..bounds });
        assert_ne!(u1.elems, other.elems);
    }

    #[test]
    fn exhaustive_refused_on_large_rings() {
        let r = FiniteRing::trunc_poly(2, 2, 3).unwrap();
        let bounds = Bounds {
            coeff_mode: Some(CoeffMode::Exhaustive),
            ..Bounds::default()
        };
        assert!(bounds.resolve(&r).is_err());
        let r4 = FiniteRing::zmod(4).unwrap();
        assert_eq!(bounds.resolve(&r4).unwrap().coeff_mode, Some(CoeffMode::Exhaustive));
        assert_eq!(Bounds::default().resolve(&r).unwrap().coeff_mode, Some(CoeffMode::Sample));
    }
}
