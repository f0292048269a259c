//! Exact search for annihilators of `f ∈ R[S]` among elements supported on
//! a fixed key set `K`.
//!
//! `g ↦ fg` is `R`-linear, so its kernel on `R^K` is an `R`-submodule. A
//! nonzero submodule of a module over a finite ring meets the socle
//! `Soc(R)^K` (with `Soc(R) = Ann(Jac(R))`), and the socle splits by prime
//! `p` into `F_p`-spaces `Soc_p = {y ∈ Soc : py = 0}`. On each `Soc_p^K` the
//! map is `F_p`-linear into `R[p]^T`, so the kernel is a null space found
//! by Gaussian elimination mod `p`.

use std::collections::HashMap;

use crate::finring::{Elem, FiniteRing};
use crate::ideals::Ideal;
use crate::monoidring::{MonoidRing, MrElem};
use crate::monoids::MonoidElem;

struct Layer {
    p: u32,
    /// `F_p` basis of `Soc_p`.
    basis: Vec<Elem>,
    /// Additive coordinates with `p | d_i`, and the step `d_i / p`.
    torsion_coords: Vec<(usize, u32)>,
}

impl Layer {
    fn vector(&self, ring: &FiniteRing, y: Elem) -> Vec<u32> {
        let c = ring.coords(y);
        self.torsion_coords
            .iter()
            .map(|&(i, step)| c[i] / step % self.p)
            .collect()
    }
}

pub struct AnnihilatorSearch {
    b: MonoidRing,
    keys: Vec<MonoidElem>,
    layers: Vec<Layer>,
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

impl AnnihilatorSearch {
    pub fn new(b: &MonoidRing, keys: Vec<MonoidElem>) -> AnnihilatorSearch {
        let ring = b.ring();
        let socle = ring.jacobson().annihilator();
        let exponent = ring.dims().iter().fold(1u32, |acc, &d| lcm(acc, d));
        let mut layers = Vec::new();
        for p in prime_factors(exponent) {
            let torsion_coords: Vec<(usize, u32)> = ring
                .dims()
                .iter()
                .enumerate()
                .filter(|(_, &d)| d % p == 0)
                .map(|(i, &d)| (i, d / p))
                .collect();
            let mut layer = Layer {
                p,
                basis: Vec::new(),
                torsion_coords,
            };
            let mut echelon: Vec<Vec<u32>> = Vec::new();
            for y in socle.elements().iter().map(|i| Elem(i as u32)) {
                if y == ring.zero() || ring.mul_int(y, p as i64) != ring.zero() {
                    continue;
                }
                let v = layer.vector(ring, y);
                if reduce_into(&mut echelon, v, p) {
                    layer.basis.push(y);
                }
            }
            if !layer.basis.is_empty() {
                layers.push(layer);
            }
        }
        AnnihilatorSearch {
            b: b.clone(),
            keys,
            layers,
        }
    }

    pub fn keys(&self) -> &[MonoidElem] {
        &self.keys
    }

    /// A nonzero `g` supported on the key set with `fg = 0`, if one exists.
    pub fn find(&self, f: &MrElem) -> Option<MrElem> {
        let ring = self.b.ring();
        if f.is_zero() {
            return Some(self.b.one());
        }
        for layer in &self.layers {
            let p = layer.p;
            let tdim = layer.torsion_coords.len();
            let mut targets: HashMap<MonoidElem, usize> = HashMap::new();
            let ncols = self.keys.len() * layer.basis.len();
            let mut columns: Vec<Vec<(usize, u32)>> = Vec::with_capacity(ncols);
            for s in &self.keys {
                for &y in &layer.basis {
                    let mut col = Vec::new();
                    for (a, c) in f.terms() {
                        let v = ring.mul(*c, y);
                        if v == ring.zero() {
                            continue;
                        }
                        let key = self.b.monoid().combine(a, s);
                        let next = targets.len();
                        let t = *targets.entry(key).or_insert(next);
                        for (i, x) in layer.vector(ring, v).into_iter().enumerate() {
                            if x != 0 {
                                col.push((t * tdim + i, x));
                            }
                        }
                    }
                    columns.push(col);
                }
            }
            let nrows = targets.len() * tdim;
            let mut m = vec![vec![0u32; ncols]; nrows];
            for (j, col) in columns.iter().enumerate() {
                for &(r, x) in col {
                    m[r][j] = (m[r][j] + x) % p;
                }
            }
            if let Some(lambda) = null_vector(&mut m, ncols, p) {
                let nb = layer.basis.len();
                let terms = lambda
                    .iter()
                    .enumerate()
                    .filter(|(_, &l)| l != 0)
                    .map(|(j, &l)| {
                        (self.keys[j / nb].clone(), ring.mul_int(layer.basis[j % nb], l as i64))
                    })
                    .collect();
                let g = self.b.normalize(terms);
                debug_assert!(!g.is_zero());
                debug_assert!(self.b.mul(f, &g).is_zero());
                return Some(g);
            }
        }
        None
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u32, b: u32) -> u32 {
    a / gcd(a, b) * b
}

fn inv_mod(a: u32, p: u32) -> u32 {
    let mut r = 1u64;
    let (mut base, mut e) = (a as u64 % p as u64, p as u64 - 2);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p as u64;
        }
        base = base * base % p as u64;
        e >>= 1;
    }
    r as u32
}

/// Adds `v` to an echelon basis if independent; returns whether it was.
fn reduce_into(echelon: &mut Vec<Vec<u32>>, mut v: Vec<u32>, p: u32) -> bool {
    for row in echelon.iter() {
        let lead = row.iter().position(|&x| x != 0).expect("nonzero row");
        if v[lead] != 0 {
            let factor = v[lead];
            for (a, b) in v.iter_mut().zip(row) {
                *a = (*a + p - factor * b % p) % p;
            }
        }
    }
    match v.iter().position(|&x| x != 0) {
        None => false,
        Some(lead) => {
            let inv = inv_mod(v[lead], p);
            for x in v.iter_mut() {
                *x = *x * inv % p;
            }
            for row in echelon.iter_mut() {
                if row[lead] != 0 {
                    let factor = row[lead];
                    for (a, b) in row.iter_mut().zip(&v) {
                        *a = (*a + p - factor * b % p) % p;
                    }
                }
            }
            echelon.push(v);
            true
        }
    }
}

/// Reduces `m` to row echelon form and returns the null vector belonging to
/// the first free column, if any.
fn null_vector(m: &mut [Vec<u32>], ncols: usize, p: u32) -> Option<Vec<u32>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut row = 0;
    let mut free = None;
    for col in 0..ncols {
        let Some(r) = (row..m.len()).find(|&r| m[r][col] != 0) else {
            free.get_or_insert(col);
            continue;
        };
        m.swap(row, r);
        let inv = inv_mod(m[row][col], p);
        for x in m[row].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot_row = m[row].clone();
        for (i, other) in m.iter_mut().enumerate() {
            if i != row && other[col] != 0 {
                let factor = other[col];
                for (a, b) in other.iter_mut().zip(&pivot_row) {
                    *a = (*a + p - factor * b % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free = free?;
    let mut v = vec![0u32; ncols];
    v[free] = 1;
    for (r, &pc) in pivots.iter().enumerate() {
        if pc < free {
            v[pc] = (p - m[r][free]) % p;
        }
    }
    Some(v)
}

/// A nonzero scalar killing every coefficient of `f`, if any: the
/// smallest nonzero element of `Ann(c(f))`.
pub fn scalar_annihilator(content: &Ideal) -> Option<Elem> {
    content
        .annihilator()
        .elements()
        .iter()
        .find(|&i| i != 0)
        .map(|i| Elem(i as u32))
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::monoids::Monoid;

    fn setup(ring: FiniteRing, monoid: Monoid, bound: u32) -> (MonoidRing, AnnihilatorSearch) {
        let b = MonoidRing::new(Arc::new(ring), Arc::new(monoid));
        let keys = b.monoid().elements_up_to(bound);
        let s = AnnihilatorSearch::new(&b, keys);
        (b, s)
    }

    #[test]
    fn torsion_group_algebra() {
        let (b, s) = setup(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap(), 3);
        let f = b.parse("1 + X").unwrap();
        assert_eq!(s.find(&f), Some(f.clone()));
        assert_eq!(s.find(&b.one()), None);
        assert_eq!(scalar_annihilator(&b.content(&f)), None);
    }

    #[test]
    fn scalar_killers_found_in_free_case() {
        let (b, s) = setup(FiniteRing::zmod(4).unwrap(), Monoid::free(1), 3);
        let f = b.parse("2 + 2X").unwrap();
        let g = s.find(&f).unwrap();
        assert!(b.mul(&f, &g).is_zero());
        assert_eq!(scalar_annihilator(&b.content(&f)), Some(Elem(2)));
        assert_eq!(s.find(&b.parse("1 + 2X").unwrap()), None);
    }

    #[test]
    fn matches_brute_force_over_small_cells() {
        // Every element of Z/4[trunc-add] and F2[Z/3]: kernel search against
        // a scan of all nonzero g.
        let cells = [
            (FiniteRing::zmod(4).unwrap(), Monoid::trunc_add(2).unwrap()),
            (FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![3]).unwrap()),
            (FiniteRing::zmod(6).unwrap(), Monoid::group(0, vec![2]).unwrap()),
        ];
        for (ring, monoid) in cells {
            let (b, s) = setup(ring, monoid, 3);
            let all = all_elements(&b, s.keys());
            for f in &all {
                let brute = all.iter().any(|g| !g.is_zero() && b.mul(f, g).is_zero());
                let found = s.find(f);
                assert_eq!(brute, found.is_some(), "{} over {}", b.fmt_elem(f), b.label());
                if let Some(g) = found {
                    assert!(!g.is_zero() && b.mul(f, &g).is_zero());
                }
            }
        }
    }

    fn all_elements(b: &MonoidRing, keys: &[MonoidElem]) -> Vec<MrElem> {
        let n = b.ring().order();
        let total = n.pow(keys.len() as u32);
        (0..total)
            .map(|mut idx| {
                let terms = keys
                    .iter()
                    .map(|k| {
                        let c = Elem((idx % n) as u32);
                        idx /= n;
                        (k.clone(), c)
                    })
                    .collect();
                b.element(terms).unwrap()
            })
            .collect()
    }
}
