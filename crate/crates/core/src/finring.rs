//! Finite commutative rings with identity, presented by an additive cyclic
//! decomposition `⊕ Z/dᵢ` and multiplication structure constants.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::elemset::ElemSet;
use crate::error::{Error, Law, Result};
use crate::ideals::Ideal;
use crate::snf;

pub const DEFAULT_ORDER_CAP: usize = 4096;

/// Full addition/multiplication tables are kept below this order.
const TABLE_LIMIT: usize = 1024;

/// An element of a [`FiniteRing`], stored as the mixed-radix index of its
/// reduced coordinate vector. Two elements are equal iff their coordinates
/// are.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Elem(pub u32);

impl Elem {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum RingDescriptor {
    Zmod {
        n: u32,
    },
    TruncPoly {
        p: u32,
        vars: u32,
        cap: u32,
    },
    Product {
        factors: Vec<RingDescriptor>,
    },
    Raw {
        dims: Vec<u32>,
        mul_table: Vec<Vec<Vec<u32>>>,
        one: Vec<u32>,
        #[serde(default)]
        label: Option<String>,
    },
}

#[derive(Debug, Clone)]
struct Tables {
    add: Vec<u16>,
    mul: Vec<u16>,
    neg: Vec<u16>,
}

#[derive(Clone)]
pub struct FiniteRing {
    label: String,
    dims: Vec<u32>,
    /// `mul_table[i][j][k]` is the `e_k`-coordinate of `e_i · e_j`.
    mul_table: Vec<Vec<Vec<u32>>>,
    one: Vec<u32>,
    order: usize,
    strides: Vec<usize>,
    basis_names: Option<Vec<String>>,
    tables: Option<Tables>,
}

impl PartialEq for FiniteRing {
    fn eq(&self, other: &Self) -> bool {
        self.dims == other.dims && self.mul_table == other.mul_table && self.one == other.one
    }
}

impl Eq for FiniteRing {}

impl fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteRing")
            .field("label", &self.label)
            .field("dims", &self.dims)
            .finish_non_exhaustive()
    }
}

impl fmt::Display for FiniteRing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn is_prime(n: u32) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Monomials of total degree `< cap` in `vars` variables: by degree, then
/// with earlier variables carrying higher exponents first.
fn monomials(vars: usize, cap: u32) -> Vec<Vec<u32>> {
    fn rec(vars: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == vars {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in (0..=deg).rev() {
            prefix.push(e);
            rec(vars, deg - e, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    for deg in 0..cap {
        rec(vars, deg, &mut Vec::new(), &mut out);
    }
    out
}

fn monomial_name(exps: &[u32]) -> String {
    let mut s = String::new();
    for (v, &e) in exps.iter().enumerate() {
        if e == 0 {
            continue;
        }
        s.push((b'a' + v as u8) as char);
        if e > 1 {
            s.push('^');
            s.push_str(&e.to_string());
        }
    }
    if s.is_empty() {
        s.push('1');
    }
    s
}

impl FiniteRing {
    /// Builds a ring from a descriptor, rejecting orders above `order_cap`.
    pub fn make(desc: &RingDescriptor, order_cap: usize) -> Result<Arc<FiniteRing>> {
        let ring = match desc {
            RingDescriptor::Zmod { n } => Self::zmod_capped(*n, order_cap)?,
            RingDescriptor::TruncPoly { p, vars, cap } => {
                Self::trunc_poly_capped(*p, *vars, *cap, order_cap)?
            }
            RingDescriptor::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::InvalidDescriptor("empty product".into()));
                }
                let rings = factors
                    .iter()
                    .map(|d| Self::make(d, order_cap))
                    .collect::<Result<Vec<_>>>()?;
                Self::product_capped(&rings, order_cap)?
            }
            RingDescriptor::Raw {
                dims,
                mul_table,
                one,
                label,
            } => Self::from_table(
                dims.clone(),
                mul_table.clone(),
                one.clone(),
                label.clone().unwrap_or_else(|| "raw".into()),
                None,
                order_cap,
            )?,
        };
        Ok(Arc::new(ring))
    }

    pub fn zmod(n: u32) -> Result<FiniteRing> {
        Self::zmod_capped(n, DEFAULT_ORDER_CAP)
    }

    fn zmod_capped(n: u32, order_cap: usize) -> Result<FiniteRing> {
        if n < 2 {
            return Err(Error::InvalidDescriptor(format!("zmod({n}) is the zero ring")));
        }
        Self::from_table(
            vec![n],
            vec![vec![vec![1]]],
            vec![1],
            format!("Z/{n}"),
            Some(vec!["1".into()]),
            order_cap,
        )
    }

    /// `Z/p[x₁..x_v]/(x₁..x_v)^cap`.
    pub fn trunc_poly(p: u32, vars: u32, cap: u32) -> Result<FiniteRing> {
        Self::trunc_poly_capped(p, vars, cap, DEFAULT_ORDER_CAP)
    }

    fn trunc_poly_capped(p: u32, vars: u32, cap: u32, order_cap: usize) -> Result<FiniteRing> {
        if p < 2 || vars == 0 || cap == 0 || vars > 20 {
            return Err(Error::InvalidDescriptor(format!(
                "trunc_poly({p}, {vars}, {cap}) needs p >= 2, 1 <= vars <= 20, cap >= 1"
            )));
        }
        let monos = monomials(vars as usize, cap);
        let m = monos.len();
        let order = (p as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
        if order > order_cap as u128 {
            return Err(Error::OrderCap {
                order,
                cap: order_cap,
            });
        }
        let mut table = vec![vec![vec![0u32; m]; m]; m];
        for (i, a) in monos.iter().enumerate() {
            for (j, b) in monos.iter().enumerate() {
                let prod: Vec<u32> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if let Some(k) = monos.iter().position(|c| *c == prod) {
                    table[i][j][k] = 1;
                }
            }
        }
        let mut one = vec![0; m];
        one[0] = 1;
        let var_names: String = (0..vars)
            .map(|v| ((b'a' + v as u8) as char).to_string())
            .collect::<Vec<_>>()
            .join(",");
        let field = if is_prime(p) { format!("F{p}") } else { format!("Z/{p}") };
        let label = format!("{field}[{var_names}]/({var_names})^{cap}");
        let names = monos.iter().map(|e| monomial_name(e)).collect();
        Self::from_table(vec![p; m], table, one, label, Some(names), order_cap)
    }

    pub fn product(factors: &[Arc<FiniteRing>]) -> Result<FiniteRing> {
        Self::product_capped(factors, DEFAULT_ORDER_CAP)
    }

    fn product_capped(factors: &[Arc<FiniteRing>], order_cap: usize) -> Result<FiniteRing> {
        let m: usize = factors.iter().map(|r| r.dims.len()).sum();
        let mut dims = Vec::with_capacity(m);
        let mut one = Vec::with_capacity(m);
        let mut table = vec![vec![vec![0u32; m]; m]; m];
        let mut offset = 0;
        for r in factors {
            let k = r.dims.len();
            dims.extend_from_slice(&r.dims);
            one.extend_from_slice(&r.one);
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        table[offset + i][offset + j][offset + l] = r.mul_table[i][j][l];
                    }
                }
            }
            offset += k;
        }
        let label = factors
            .iter()
            .map(|r| r.label.clone())
            .collect::<Vec<_>>()
            .join(" x ");
        Self::from_table(dims, table, one, label, None, order_cap)
    }

    /// Validates a raw presentation: well-definedness against the additive
    /// orders, commutativity, identity and associativity on basis triples.
    pub fn from_table(
        dims: Vec<u32>,
        mut mul_table: Vec<Vec<Vec<u32>>>,
        mut one: Vec<u32>,
        label: String,
        basis_names: Option<Vec<String>>,
        order_cap: usize,
    ) -> Result<FiniteRing> {
        let m = dims.len();
        if m == 0 || dims.iter().any(|&d| d == 0) {
            return Err(Error::InvalidDescriptor(
                "dims must be a nonempty list of positive integers".into(),
            ));
        }
        if mul_table.len() != m
            || mul_table
                .iter()
                .any(|row| row.len() != m || row.iter().any(|c| c.len() != m))
            || one.len() != m
        {
            return Err(Error::InvalidDescriptor(format!(
                "mul_table must be {m}x{m}x{m} and one must have {m} coordinates"
            )));
        }
        let order = dims.iter().fold(1u128, |acc, &d| acc.saturating_mul(d as u128));
        if order > order_cap as u128 {
            return Err(Error::OrderCap {
                order,
                cap: order_cap,
            });
        }
        if order < 2 {
            return Err(Error::InvalidDescriptor("the zero ring is not supported".into()));
        }
        for row in mul_table.iter_mut() {
            for cell in row.iter_mut() {
                for (k, c) in cell.iter_mut().enumerate() {
                    *c %= dims[k];
                }
            }
        }
        for (k, c) in one.iter_mut().enumerate() {
            *c %= dims[k];
        }

        for i in 0..m {
            for j in 0..m {
                let g = gcd(dims[i] as u64, dims[j] as u64);
                for k in 0..m {
                    if (g * mul_table[i][j][k] as u64) % dims[k] as u64 != 0 {
                        return Err(Error::AxiomViolation {
                            law: Law::WellDefined,
                            i,
                            j,
                            k,
                        });
                    }
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    if mul_table[i][j][k] != mul_table[j][i][k] {
                        return Err(Error::AxiomViolation {
                            law: Law::Commutativity,
                            i,
                            j,
                            k,
                        });
                    }
                }
            }
        }

        let mut strides = Vec::with_capacity(m);
        let mut s = 1usize;
        for &d in &dims {
            strides.push(s);
            s *= d as usize;
        }
        let mut ring = FiniteRing {
            label,
            dims,
            mul_table,
            one,
            order: order as usize,
            strides,
            basis_names,
            tables: None,
        };

        for j in 0..m {
            let prod = ring.mul_coords(&ring.one.clone(), &ring.unit_vector(j));
            if let Some(k) = (0..m).find(|&k| prod[k] != u32::from(k == j)) {
                return Err(Error::AxiomViolation {
                    law: Law::Identity,
                    i: j,
                    j,
                    k,
                });
            }
        }
        for i in 0..m {
            for j in 0..m {
                let ij = ring.mul_table[i][j].clone();
                for k in 0..m {
                    let left = ring.mul_coords(&ij, &ring.unit_vector(k));
                    let jk = ring.mul_table[j][k].clone();
                    let right = ring.mul_coords(&ring.unit_vector(i), &jk);
                    if left != right {
                        return Err(Error::AxiomViolation {
                            law: Law::Associativity,
                            i,
                            j,
                            k,
                        });
                    }
                }
            }
        }

        if ring.order <= TABLE_LIMIT {
            ring.tables = Some(ring.build_tables());
        }
        Ok(ring)
    }

    fn build_tables(&self) -> Tables {
        let n = self.order;
        let mut add = vec![0u16; n * n];
        let mut mul = vec![0u16; n * n];
        let mut neg = vec![0u16; n];
        let coords: Vec<Vec<u32>> = (0..n).map(|x| self.coords(Elem(x as u32))).collect();
        for x in 0..n {
            neg[x] = self.neg_slow(&coords[x]).0 as u16;
            for y in x..n {
                let s = self.from_reduced(&self.add_coords(&coords[x], &coords[y])).0 as u16;
                let p = self.from_reduced(&self.mul_coords(&coords[x], &coords[y])).0 as u16;
                add[x * n + y] = s;
                add[y * n + x] = s;
                mul[x * n + y] = p;
                mul[y * n + x] = p;
            }
        }
        Tables { add, mul, neg }
    }

    fn unit_vector(&self, i: usize) -> Vec<u32> {
        let mut v = vec![0; self.dims.len()];
        v[i] = 1 % self.dims[i];
        v
    }

    fn add_coords(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        x.iter()
            .zip(y)
            .zip(&self.dims)
            .map(|((a, b), d)| (a + b) % d)
            .collect()
    }

    fn mul_coords(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        let m = self.dims.len();
        let mut acc = vec![0u64; m];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                if yj == 0 {
                    continue;
                }
                let xy = xi as u64 * yj as u64;
                for (k, a) in acc.iter_mut().enumerate() {
                    let c = self.mul_table[i][j][k];
                    if c != 0 {
                        *a = (*a + xy % self.dims[k] as u64 * c as u64) % self.dims[k] as u64;
                    }
                }
            }
        }
        acc.into_iter().map(|a| a as u32).collect()
    }

    fn neg_slow(&self, x: &[u32]) -> Elem {
        let v: Vec<u32> = x
            .iter()
            .zip(&self.dims)
            .map(|(&a, &d)| (d - a) % d)
            .collect();
        self.from_reduced(&v)
    }

    fn from_reduced(&self, coords: &[u32]) -> Elem {
        Elem(
            coords
                .iter()
                .zip(&self.strides)
                .map(|(&c, &s)| c as usize * s)
                .sum::<usize>() as u32,
        )
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dims(&self) -> &[u32] {
        &self.dims
    }

    pub fn basis_len(&self) -> usize {
        self.dims.len()
    }

    pub fn basis_names(&self) -> Option<&[String]> {
        self.basis_names.as_deref()
    }

    /// Structure constants `c[i][j][k]`.
    pub fn mul_table(&self) -> &[Vec<Vec<u32>>] {
        &self.mul_table
    }

    pub fn coords(&self, x: Elem) -> Vec<u32> {
        let mut idx = x.index();
        self.dims
            .iter()
            .map(|&d| {
                let c = (idx % d as usize) as u32;
                idx /= d as usize;
                c
            })
            .collect()
    }

    /// Reduces arbitrary integer coordinates into canonical form.
    pub fn from_coords(&self, coords: &[i64]) -> Elem {
        let v: Vec<u32> = coords
            .iter()
            .zip(&self.dims)
            .map(|(&c, &d)| c.rem_euclid(d as i64) as u32)
            .collect();
        self.from_reduced(&v)
    }

    pub fn zero(&self) -> Elem {
        Elem(0)
    }

    pub fn one(&self) -> Elem {
        self.from_reduced(&self.one)
    }

    /// The `i`-th additive generator `e_i`.
    pub fn basis_elem(&self, i: usize) -> Elem {
        self.from_reduced(&self.unit_vector(i))
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        (0..self.order as u32).map(Elem)
    }

    #[inline]
    pub fn add(&self, x: Elem, y: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.add[x.index() * self.order + y.index()] as u32),
            None => self.from_reduced(&self.add_coords(&self.coords(x), &self.coords(y))),
        }
    }

    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.neg[x.index()] as u32),
            None => self.neg_slow(&self.coords(x)),
        }
    }

    #[inline]
    pub fn sub(&self, x: Elem, y: Elem) -> Elem {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(&self, x: Elem, y: Elem) -> Elem {
        match &self.tables {
            Some(t) => Elem(t.mul[x.index() * self.order + y.index()] as u32),
            None => self.from_reduced(&self.mul_coords(&self.coords(x), &self.coords(y))),
        }
    }

    pub fn pow(&self, x: Elem, n: u64) -> Elem {
        let mut acc = self.one();
        for _ in 0..n {
            acc = self.mul(acc, x);
        }
        acc
    }

    /// `n · x` for an integer `n`.
    pub fn mul_int(&self, x: Elem, n: i64) -> Elem {
        let c: Vec<i64> = self.coords(x).iter().map(|&c| c as i64 * n).collect();
        self.from_coords(&c)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        self.mul_int(self.one(), n)
    }

    pub fn is_unit(&self, x: Elem) -> bool {
        let one = self.one();
        self.elements().any(|y| self.mul(x, y) == one)
    }

    pub fn inverse(&self, x: Elem) -> Option<Elem> {
        let one = self.one();
        self.elements().find(|&y| self.mul(x, y) == one)
    }

    /// `U(R)`.
    pub fn units(&self) -> ElemSet {
        let one = self.one();
        let mut s = ElemSet::empty(self.order);
        for x in self.elements() {
            if s.contains(x.index()) {
                continue;
            }
            if let Some(y) = self.elements().find(|&y| self.mul(x, y) == one) {
                s.insert(x.index());
                s.insert(y.index());
            }
        }
        s
    }

    /// `Z(R)`, with the convention that `0 ∈ Z(R)`.
    pub fn zero_divisor_set(&self) -> ElemSet {
        let zero = self.zero();
        let mut s = ElemSet::empty(self.order);
        s.insert(0);
        for x in self.elements().skip(1) {
            if self.elements().skip(1).any(|y| self.mul(x, y) == zero) {
                s.insert(x.index());
            }
        }
        s
    }

    pub fn idempotents(&self) -> ElemSet {
        let mut s = ElemSet::empty(self.order);
        for x in self.elements() {
            if self.mul(x, x) == x {
                s.insert(x.index());
            }
        }
        s
    }

    /// Whether `x^n = 0` for some `n ≤ |R|`.
    pub fn is_nilpotent(&self, x: Elem) -> bool {
        let mut p = x;
        for _ in 0..self.order {
            if p == self.zero() {
                return true;
            }
            p = self.mul(p, x);
        }
        p == self.zero()
    }

    pub fn nilradical(self: &Arc<Self>) -> Ideal {
        let gens: Vec<Elem> = self.elements().filter(|&x| self.is_nilpotent(x)).collect();
        Ideal::generate(self, &gens)
    }

    /// `{x : 1 − xy is a unit for every y}`.
    pub fn jacobson(self: &Arc<Self>) -> Ideal {
        let units = self.units();
        let one = self.one();
        let gens: Vec<Elem> = self
            .elements()
            .filter(|&x| {
                self.elements()
                    .all(|y| units.contains(self.sub(one, self.mul(x, y)).index()))
            })
            .collect();
        Ideal::generate(self, &gens)
    }

    /// The nonzero coordinates of `x` as `(basis index, multiplier)` pairs.
    pub fn basis_parts(&self, x: Elem) -> Vec<(usize, u32)> {
        self.coords(x)
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    /// Text for a single basis part, e.g. `3`, `a`, `2ab`.
    pub fn fmt_part(&self, basis: usize, mult: u32) -> String {
        match &self.basis_names {
            Some(names) if names[basis] == "1" => mult.to_string(),
            Some(names) if mult == 1 => names[basis].clone(),
            Some(names) => format!("{mult}{}", names[basis]),
            None => {
                let mut v = vec![0; self.dims.len()];
                v[basis] = mult;
                format_vector(&v)
            }
        }
    }

    /// Renders `x`: an integer for `Z/n`, a sum of monomials for truncated
    /// polynomial rings, a coordinate vector otherwise.
    pub fn fmt_elem(&self, x: Elem) -> String {
        if self.basis_names.is_none() {
            return format_vector(&self.coords(x));
        }
        let parts = self.basis_parts(x);
        if parts.is_empty() {
            return "0".into();
        }
        parts
            .iter()
            .map(|&(b, c)| self.fmt_part(b, c))
            .collect::<Vec<_>>()
            .join("+")
    }

    /// `R/I` as a ring in its own presentation, together with the canonical
    /// projection `R → R/I` (indexed by element of `R`).
    pub fn quotient(self: &Arc<Self>, ideal: &Ideal) -> Result<Quotient> {
        if !Arc::ptr_eq(ideal.ring(), self) && **ideal.ring() != **self {
            return Err(Error::RingMismatch);
        }
        if !ideal.is_proper() {
            return Err(Error::InvalidDescriptor("quotient by the unit ideal".into()));
        }
        let m = self.dims.len();
        let mut rows: Vec<Vec<i64>> = (0..m)
            .map(|i| {
                let mut r = vec![0i64; m];
                r[i] = self.dims[i] as i64;
                r
            })
            .collect();
        for g in ideal.additive_generators() {
            rows.push(self.coords(g).into_iter().map(i64::from).collect());
        }
        let d = snf::diagonalize(&rows, m);
        let kept: Vec<usize> = (0..m).filter(|&t| d.diag[t] != 1).collect();
        let new_dims: Vec<u32> = kept.iter().map(|&t| d.diag[t] as u32).collect();
        let project_coords = |x: &[u32]| -> Vec<u32> {
            kept.iter()
                .map(|&t| {
                    let y: i64 = x.iter().zip(&d.v).map(|(&xi, row)| xi as i64 * row[t]).sum();
                    y.rem_euclid(d.diag[t]) as u32
                })
                .collect()
        };
        let lifts: Vec<Vec<u32>> = kept
            .iter()
            .map(|&t| {
                let c: Vec<i64> = d.v_inv[t].clone();
                self.coords(self.from_coords(&c))
            })
            .collect();
        let k = kept.len();
        let mut table = vec![vec![vec![0u32; k]; k]; k];
        for s in 0..k {
            for t in 0..k {
                table[s][t] = project_coords(&self.mul_coords(&lifts[s], &lifts[t]));
            }
        }
        let one = project_coords(&self.one);
        let label = format!("{}/{}", self.label, ideal);
        // Keep the parent's names when every lift is a bare basis element.
        let names = self.basis_names.as_ref().and_then(|parent| {
            lifts
                .iter()
                .map(|l| {
                    let mut nz = l.iter().enumerate().filter(|(_, &c)| c != 0);
                    match (nz.next(), nz.next()) {
                        (Some((i, 1)), None) => Some(parent[i].clone()),
                        _ => None,
                    }
                })
                .collect::<Option<Vec<String>>>()
        });
        let ring = Arc::new(FiniteRing::from_table(
            new_dims,
            table,
            one,
            label,
            names,
            usize::MAX,
        )?);
        let proj: Vec<Elem> = self
            .elements()
            .map(|x| ring.from_reduced(&project_coords(&self.coords(x))))
            .collect();
        Ok(Quotient { ring, proj })
    }
}

pub(crate) fn format_vector(v: &[u32]) -> String {
    let inner: Vec<String> = v.iter().map(|c| c.to_string()).collect();
    format!("[{}]", inner.join(","))
}

/// A quotient ring with its projection map.
#[derive(Debug, Clone)]
pub struct Quotient {
    pub ring: Arc<FiniteRing>,
    pub proj: Vec<Elem>,
}

impl Quotient {
    #[inline]
    pub fn project(&self, x: Elem) -> Elem {
        self.proj[x.index()]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arc(r: Result<FiniteRing>) -> Arc<FiniteRing> {
        Arc::new(r.unwrap())
    }

    fn set(xs: &[u32], n: usize) -> ElemSet {
        let mut s = ElemSet::empty(n);
        for &x in xs {
            s.insert(x as usize);
        }
        s
    }

    #[test]
    fn zmod4_basics() {
        let r = arc(FiniteRing::zmod(4));
        assert_eq!(r.order(), 4);
        assert_eq!(r.coords(r.one()), vec![1]);
        assert_eq!(r.units(), set(&[1, 3], 4));
        assert_eq!(r.zero_divisor_set(), set(&[0, 2], 4));
        assert_eq!(r.idempotents(), set(&[0, 1], 4));
        assert_eq!(r.nilradical().elements(), &set(&[0, 2], 4));
        assert_eq!(r.jacobson().elements(), &set(&[0, 2], 4));
    }

    #[test]
    fn zmod6_sets() {
        let r = arc(FiniteRing::zmod(6));
        assert_eq!(r.zero_divisor_set(), set(&[0, 2, 3, 4], 6));
        assert_eq!(r.idempotents(), set(&[0, 1, 3, 4], 6));
        assert_eq!(r.nilradical().elements(), &set(&[0], 6));
        assert_eq!(r.jacobson().elements(), &set(&[0], 6));
    }

    #[test]
    fn field_sets() {
        let r = arc(FiniteRing::zmod(2));
        assert_eq!(r.units(), set(&[1], 2));
        assert_eq!(r.zero_divisor_set(), set(&[0], 2));
        assert_eq!(r.idempotents(), set(&[0, 1], 2));
        assert_eq!(r.nilradical().elements(), &set(&[0], 2));
        assert_eq!(r.jacobson().elements(), &set(&[0], 2));
    }

    #[test]
    fn trunc_poly_basis_matches_monomial_count() {
        // oracle: count exponent pairs (i, j) with i + j < 3
        let expected = (0..3u32)
            .flat_map(|i| (0..3u32).map(move |j| (i, j)))
            .filter(|(i, j)| i + j < 3)
            .count();
        let r = FiniteRing::trunc_poly(2, 2, 3).unwrap();
        assert_eq!(r.basis_len(), expected);
        assert_eq!(r.order(), 64);
        assert_eq!(
            r.basis_names().unwrap(),
            &["1", "a", "b", "a^2", "ab", "b^2"].map(String::from)
        );
    }

    #[test]
    fn trunc_poly_units_have_constant_term() {
        let r = arc(FiniteRing::trunc_poly(2, 2, 3));
        let units = r.units();
        assert_eq!(units.count(), 32);
        for x in r.elements() {
            // oracle: exhaustive inverse search
            let has_inverse = r.elements().any(|y| r.mul(x, y) == r.one());
            assert_eq!(units.contains(x.index()), has_inverse);
            assert_eq!(has_inverse, r.coords(x)[0] != 0);
        }
    }

    #[test]
    fn raw_table_rejects_bad_identity() {
        // e0 declared as one but e0·e0 = e1
        let err = FiniteRing::from_table(
            vec![2, 2],
            vec![vec![vec![0, 1], vec![0, 1]], vec![vec![0, 1], vec![0, 0]]],
            vec![1, 0],
            "bad".into(),
            None,
            DEFAULT_ORDER_CAP,
        )
        .unwrap_err();
        assert!(matches!(err, Error::AxiomViolation { .. }));
    }

    #[test]
    fn raw_table_rejects_non_associative() {
        // basis 1, u, v with u² = v, uv = 0 but v·u... commutative; break associativity with
        // u·u = v, u·v = 0, v·v = u: (uu)u = vu = 0 vs u(uu) = uv = 0, (uu)v = vv = u vs u(uv) = 0
        let mut t = vec![vec![vec![0u32; 3]; 3]; 3];
        for j in 0..3 {
            t[0][j][j] = 1;
            t[j][0][j] = 1;
        }
        t[1][1] = vec![0, 0, 1];
        t[2][2] = vec![0, 1, 0];
        let err =
            FiniteRing::from_table(vec![2, 2, 2], t, vec![1, 0, 0], "bad".into(), None, 4096)
                .unwrap_err();
        assert!(matches!(
            err,
            Error::AxiomViolation {
                law: Law::Associativity,
                ..
            }
        ));
    }

    #[test]
    fn order_cap_enforced() {
        let err = FiniteRing::make(&RingDescriptor::Zmod { n: 5000 }, 4096).unwrap_err();
        assert!(matches!(err, Error::OrderCap { .. }));
    }

    #[test]
    fn product_is_componentwise() {
        let a = arc(FiniteRing::zmod(2));
        let b = arc(FiniteRing::zmod(3));
        let p = arc(FiniteRing::product(&[a, b]));
        assert_eq!(p.order(), 6);
        assert_eq!(p.idempotents().count(), 4);
        assert_eq!(p.units().count(), 2);
    }

    #[test]
    fn quotient_of_trunc_poly() {
        let r = arc(FiniteRing::trunc_poly(2, 2, 3));
        let a = r.basis_elem(1);
        let b = r.basis_elem(2);
        let i = Ideal::generate(&r, &[a, b]);
        let q = r.quotient(&i).unwrap();
        assert_eq!(q.ring.order(), 2);
        let j = Ideal::generate(&r, &[r.mul(a, b), r.add(r.mul(a, a), r.mul(b, b))]);
        let q = r.quotient(&j).unwrap();
        assert_eq!(q.ring.order(), 16);
        // projection is a ring homomorphism
        for x in r.elements() {
            for y in r.elements() {
                assert_eq!(q.project(r.mul(x, y)), q.ring.mul(q.project(x), q.project(y)));
                assert_eq!(q.project(r.add(x, y)), q.ring.add(q.project(x), q.project(y)));
            }
            assert_eq!(q.project(x) == q.ring.zero(), j.contains(x));
        }
    }

    #[test]
    fn quotient_of_zmod() {
        let r = arc(FiniteRing::zmod(12));
        let i = Ideal::generate(&r, &[r.from_int(4)]);
        let q = r.quotient(&i).unwrap();
        assert_eq!(q.ring.order(), 4);
        assert_eq!(q.project(r.one()), q.ring.one());
    }
}
