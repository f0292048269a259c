//! Content laws on finite free modules `M = R^k` and monoid modules `M[S]`.
//!
//! `M` is free on `e_1, …, e_k`, so `x ∈ IM` exactly when every coordinate
//! of `x` lies in `I`, and the least such `I` (the content) is the ideal
//! generated by the coordinates. The checks below do not use that shortcut
//! for `IM`: they materialize it as the additive closure of products, and
//! compare it with the coordinate description where needed.

use std::collections::{HashMap, VecDeque};
use std::sync::Arc;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::{CheckResult, Verdict};
use crate::elemset::ElemSet;
use crate::error::{Error, Result};
use crate::finring::{Elem, FiniteRing};
use crate::ideals::{associated_primes, enumerate_ideals, Ideal};
use crate::lab::Lab;
use crate::localize::is_chain_ring;
use crate::monoidring::{MonoidRing, MrElem};
use crate::monoids::MonoidElem;
use crate::universe::Bounds;

/// `g` ranges over this many universe elements in module pair scans.
pub const MODULE_G_LIMIT: usize = 256;
/// Seeded triples added to the pairs in the intersection law.
pub const TRIPLE_SAMPLES: usize = 64;

/// `R^k`, with elements indexed in mixed radix over the ring's indices.
#[derive(Debug, Clone)]
pub struct FreeModule {
    ring: Arc<FiniteRing>,
    rank: usize,
    order: usize,
}

/// A submodule as an element set plus an additive generating set.
#[derive(Debug, Clone)]
pub struct Submodule {
    elements: ElemSet,
    gens: Vec<usize>,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.elements == other.elements
    }
}

impl Eq for Submodule {}

impl Submodule {
    pub fn elements(&self) -> &ElemSet {
        &self.elements
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(x)
    }

    pub fn len(&self) -> usize {
        self.elements.count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn is_subset(&self, other: &Submodule) -> bool {
        self.elements.is_subset(&other.elements)
    }

    pub fn intersection(&self, other: &Submodule) -> Submodule {
        let elements = self.elements.intersection(&other.elements);
        let gens = elements.iter().collect();
        Submodule { elements, gens }
    }
}

impl FreeModule {
    pub fn new(ring: &Arc<FiniteRing>, rank: usize, cap: usize) -> Result<FreeModule> {
        if rank == 0 {
            return Err(Error::InvalidDescriptor("module rank must be at least 1".into()));
        }
        let order = (ring.order() as u128).pow(rank as u32);
        if order > cap as u128 {
            return Err(Error::CapExceeded { cap });
        }
        Ok(FreeModule {
            ring: ring.clone(),
            rank,
            order: order as usize,
        })
    }

    pub fn ring(&self) -> &Arc<FiniteRing> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn label(&self) -> String {
        if self.rank == 1 {
            self.ring.label().to_string()
        } else {
            format!("({})^{}", self.ring, self.rank)
        }
    }

    pub fn encode(&self, v: &[Elem]) -> usize {
        let n = self.ring.order();
        v.iter().rev().fold(0, |acc, c| acc * n + c.index())
    }

    pub fn decode(&self, mut x: usize) -> Vec<Elem> {
        let n = self.ring.order();
        (0..self.rank)
            .map(|_| {
                let c = Elem((x % n) as u32);
                x /= n;
                c
            })
            .collect()
    }

    pub fn zero_vec(&self) -> Vec<Elem> {
        vec![self.ring.zero(); self.rank]
    }

    pub fn unit_vec(&self, j: usize) -> Vec<Elem> {
        let mut v = self.zero_vec();
        v[j] = self.ring.one();
        v
    }

    pub fn add(&self, x: &[Elem], y: &[Elem]) -> Vec<Elem> {
        x.iter().zip(y).map(|(&a, &b)| self.ring.add(a, b)).collect()
    }

    pub fn scale(&self, r: Elem, x: &[Elem]) -> Vec<Elem> {
        x.iter().map(|&a| self.ring.mul(r, a)).collect()
    }

    pub fn fmt_vec(&self, x: &[Elem]) -> String {
        let parts: Vec<String> = x.iter().map(|&a| self.ring.fmt_elem(a)).collect();
        format!("({})", parts.join(","))
    }

    /// Additive closure of `gens`.
    pub fn closure(&self, gens: Vec<usize>) -> Submodule {
        let mut elements = ElemSet::empty(self.order);
        elements.insert(0);
        let decoded: Vec<Vec<Elem>> = gens.iter().map(|&g| self.decode(g)).collect();
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            let xv = self.decode(x);
            for g in &decoded {
                let y = self.encode(&self.add(&xv, g));
                if elements.insert(y) {
                    queue.push_back(y);
                }
            }
        }
        Submodule { elements, gens }
    }

    /// The `R`-submodule generated by `vectors`.
    pub fn span(&self, vectors: &[Vec<Elem>]) -> Submodule {
        let basis: Vec<Elem> = (0..self.ring.basis_len()).map(|i| self.ring.basis_elem(i)).collect();
        let gens = vectors
            .iter()
            .flat_map(|v| basis.iter().map(move |&e| self.encode(&self.scale(e, v))))
            .filter(|&x| x != 0)
            .collect();
        self.closure(gens)
    }

    pub fn whole(&self) -> Submodule {
        self.span(&(0..self.rank).map(|j| self.unit_vec(j)).collect::<Vec<_>>())
    }

    /// `IN`, the additive closure of products `a·n`.
    pub fn ideal_times(&self, ideal: &Ideal, n: &Submodule) -> Submodule {
        let mut gens = Vec::new();
        for a in ideal.additive_generators() {
            for &v in &n.gens {
                let x = self.encode(&self.scale(a, &self.decode(v)));
                if x != 0 {
                    gens.push(x);
                }
            }
        }
        gens.sort_unstable();
        gens.dedup();
        self.closure(gens)
    }

    /// `IM`.
    pub fn extension(&self, ideal: &Ideal) -> Submodule {
        self.ideal_times(ideal, &self.whole())
    }

    /// `c(x)`: the ideal generated by the coordinates.
    pub fn free_content(&self, x: &[Elem]) -> Ideal {
        Ideal::generate(&self.ring, x)
    }
}

/// Element of `M[S]`: sorted keys with nonzero coefficient vectors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ModElem {
    terms: Vec<(MonoidElem, Vec<Elem>)>,
}

impl ModElem {
    pub fn terms(&self) -> &[(MonoidElem, Vec<Elem>)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn support_len(&self) -> usize {
        self.terms.len()
    }
}

/// `M[S]` over `B = R[S]`.
pub struct ModuleRing<'a> {
    pub b: &'a MonoidRing,
    pub m: &'a FreeModule,
}

impl<'a> ModuleRing<'a> {
    pub fn new(b: &'a MonoidRing, m: &'a FreeModule) -> Result<ModuleRing<'a>> {
        if **b.ring() != **m.ring() {
            return Err(Error::RingMismatch);
        }
        Ok(ModuleRing { b, m })
    }

    pub fn element(&self, terms: Vec<(MonoidElem, Vec<Elem>)>) -> Result<ModElem> {
        let monoid = self.b.monoid();
        for (s, v) in &terms {
            if !monoid.is_canonical(s) || v.len() != self.m.rank() || v.iter().any(|c| c.index() >= self.m.ring().order()) {
                return Err(Error::Mismatch(format!("bad module term at {}", monoid.fmt_elem(s))));
            }
        }
        Ok(self.normalize(terms))
    }

    fn normalize(&self, mut terms: Vec<(MonoidElem, Vec<Elem>)>) -> ModElem {
        terms.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(MonoidElem, Vec<Elem>)> = Vec::with_capacity(terms.len());
        for (s, v) in terms {
            match out.last_mut() {
                Some((t, w)) if *t == s => *w = self.m.add(w, &v),
                _ => out.push((s, v)),
            }
        }
        let zero = self.m.zero_vec();
        out.retain(|(_, v)| *v != zero);
        ModElem { terms: out }
    }

    /// `f·e_j`.
    pub fn embed(&self, f: &MrElem, j: usize) -> ModElem {
        let terms = f
            .terms()
            .iter()
            .map(|(s, a)| {
                let mut v = self.m.zero_vec();
                v[j] = *a;
                (s.clone(), v)
            })
            .collect();
        self.normalize(terms)
    }

    /// `x` as a constant.
    pub fn constant(&self, x: &[Elem]) -> ModElem {
        self.normalize(vec![(self.b.monoid().identity(), x.to_vec())])
    }

    pub fn mul(&self, f: &MrElem, g: &ModElem) -> ModElem {
        let monoid = self.b.monoid();
        let mut terms = Vec::with_capacity(f.support_len() * g.support_len());
        for (s, a) in f.terms() {
            for (t, v) in &g.terms {
                terms.push((monoid.combine(s, t), self.m.scale(*a, v)));
            }
        }
        self.normalize(terms)
    }

    /// `c(g)`: the submodule generated by the coefficient vectors.
    pub fn module_content(&self, g: &ModElem) -> Submodule {
        let vectors: Vec<Vec<Elem>> = g.terms.iter().map(|(_, v)| v.clone()).collect();
        self.m.span(&vectors)
    }

    pub fn fmt_elem(&self, g: &ModElem) -> String {
        if g.is_zero() {
            return "0".into();
        }
        let monoid = self.b.monoid();
        g.terms
            .iter()
            .map(|(s, v)| {
                if *s == monoid.identity() {
                    self.m.fmt_vec(v)
                } else {
                    format!("{}*X^{}", self.m.fmt_vec(v), monoid.fmt_elem(s))
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Least `n ≥ 1` with `c(f)^n c(g) = c(f)^{n-1} c(fg)`, searched up to
/// `|supp f| + |supp g| + 1`.
pub fn dm_module_exponent(mr: &ModuleRing, f: &MrElem, g: &ModElem) -> Result<u32> {
    let cf = mr.b.content(f);
    let cg = mr.module_content(g);
    let cfg = mr.module_content(&mr.mul(f, g));
    let cap = (f.support_len() + g.support_len() + 1) as u32;
    let mut lhs = mr.m.ideal_times(&cf, &cg);
    let mut rhs = cfg;
    for n in 1..=cap {
        if lhs == rhs {
            return Ok(n);
        }
        lhs = mr.m.ideal_times(&cf, &lhs);
        rhs = mr.m.ideal_times(&cf, &rhs);
    }
    Err(Error::CapExceeded { cap: cap as usize })
}

fn module_or_fail(name: &str, ring: &Arc<FiniteRing>, k: usize, bounds: &Bounds) -> std::result::Result<FreeModule, CheckResult> {
    FreeModule::new(ring, k, bounds.order_cap)
        .map_err(|e| CheckResult::new(name, Verdict::PreconditionViolated).note(e.to_string()))
}

fn ideals_or_fail(name: &str, ring: &Arc<FiniteRing>, bounds: &Bounds) -> std::result::Result<Vec<Ideal>, CheckResult> {
    enumerate_ideals(ring, bounds.gen_cap).map_err(|e| CheckResult::new(name, Verdict::Fail).note(e.to_string()))
}

fn exhaustive(name: String, failed: bool, scans: u64, bounds: &Bounds) -> CheckResult {
    CheckResult::new(name, if failed { Verdict::Fail } else { Verdict::Pass })
        .with_bounds(bounds)
        .scans(scans)
}

/// Memoized `IM` by ideal.
struct Extensions<'m> {
    m: &'m FreeModule,
    memo: HashMap<ElemSet, Submodule>,
}

impl<'m> Extensions<'m> {
    fn new(m: &'m FreeModule) -> Self {
        Extensions { m, memo: HashMap::new() }
    }

    fn get(&mut self, i: &Ideal) -> &Submodule {
        let m = self.m;
        self.memo
            .entry(i.elements().clone())
            .or_insert_with(|| m.extension(i))
    }
}

/// `IM ≠ M` for every enumerated `I ⊆ Jac(R)`.
pub fn nakayama_check(ring: &Arc<FiniteRing>, k: usize, bounds: &Bounds) -> CheckResult {
    let name = format!("nakayama k={k}");
    let m = match module_or_fail(&name, ring, k, bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let ideals = match ideals_or_fail(&name, ring, bounds) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let jac = ring.jacobson();
    let whole = m.whole();
    let mut scans = 0;
    let mut bad = None;
    let mut sizes = Vec::new();
    for i in ideals.iter().filter(|i| i.is_subset(&jac)) {
        scans += 1;
        let im = m.extension(i);
        sizes.push(format!("|{i}M| = {}", im.len()));
        if im == whole {
            bad = Some(i);
            break;
        }
    }
    let mut r = exhaustive(name, bad.is_some(), scans, bounds)
        .note(format!("M = {}, Jac(R) = {jac}", m.label()))
        .note(sizes.join(", "));
    if let Some(i) = bad {
        r = r.witness(&[("I", i.to_string())]);
    }
    r
}

/// `(⋂ Iᵢ)M = ⋂ (IᵢM)` for all pairs and seeded triples of enumerated
/// ideals, next to the content axiom `x ∈ c(x)M` for every `x`. The two hold
/// together or not at all; a split is reported as a failure.
pub fn intersection_law_check(ring: &Arc<FiniteRing>, k: usize, bounds: &Bounds) -> CheckResult {
    let name = format!("intersection_law k={k}");
    let m = match module_or_fail(&name, ring, k, bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let ideals = match ideals_or_fail(&name, ring, bounds) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let mut families: Vec<Vec<usize>> = Vec::new();
    for i in 0..ideals.len() {
        for j in i + 1..ideals.len() {
            families.push(vec![i, j]);
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(bounds.seed);
    let idx: Vec<usize> = (0..ideals.len()).collect();
    if ideals.len() >= 3 {
        for _ in 0..TRIPLE_SAMPLES {
            let mut t: Vec<usize> = idx.choose_multiple(&mut rng, 3).copied().collect();
            t.sort_unstable();
            families.push(t);
        }
    }
    let mut ext = Extensions::new(&m);
    let mut law_bad = None;
    let mut scans = 0;
    for fam in &families {
        scans += 1;
        let mut meet = ideals[fam[0]].clone();
        for &i in &fam[1..] {
            meet = meet.intersection(&ideals[i]).expect("same ring");
        }
        let lhs = ext.get(&meet).clone();
        let mut rhs = ext.get(&ideals[fam[0]]).clone();
        for &i in &fam[1..] {
            rhs = rhs.intersection(ext.get(&ideals[i]));
        }
        if lhs != rhs {
            law_bad = Some(fam.clone());
            break;
        }
    }
    let mut axiom_bad = None;
    for x in 0..m.order() {
        scans += 1;
        let v = m.decode(x);
        let c = m.free_content(&v);
        if !ext.get(&c).contains(x) {
            axiom_bad = Some(v);
            break;
        }
    }
    let failed = law_bad.is_some() || axiom_bad.is_some();
    let mut r = exhaustive(name, failed, scans, bounds).note(format!(
        "{} families ({} pairs, up to {TRIPLE_SAMPLES} seeded triples); content axiom over all {} elements",
        families.len(),
        ideals.len() * ideals.len().saturating_sub(1) / 2,
        m.order()
    ));
    if law_bad.is_some() != axiom_bad.is_some() {
        r = r.note("intersection law and content axiom disagree");
    }
    if let Some(fam) = law_bad {
        let list: Vec<String> = fam.iter().map(|&i| ideals[i].to_string()).collect();
        r = r.witness(&[("family", format!("{{{}}}", list.join(", ")))]);
    } else if let Some(v) = axiom_bad {
        r = r.witness(&[("x", m.fmt_vec(&v))]);
    }
    r
}

/// `r·c(x) = c(rx)` for every `r ∈ R`, `x ∈ M`.
pub fn scalar_content_check(ring: &Arc<FiniteRing>, k: usize, bounds: &Bounds) -> CheckResult {
    let name = format!("scalar_content k={k}");
    let m = match module_or_fail(&name, ring, k, bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let mut cache = crate::cache::IdealCache::new(ring);
    let content: Vec<u32> = (0..m.order())
        .map(|x| cache.intern(m.free_content(&m.decode(x))))
        .collect();
    let mut scaled: HashMap<(Elem, u32), ElemSet> = HashMap::new();
    let mut scans = 0;
    let mut bad = None;
    'scan: for r in ring.elements() {
        for x in 0..m.order() {
            scans += 1;
            let cx = content[x];
            let lhs = scaled.entry((r, cx)).or_insert_with(|| {
                let mut s = ElemSet::empty(ring.order());
                for a in cache.get(cx).elements().iter() {
                    s.insert(ring.mul(r, Elem(a as u32)).index());
                }
                s
            });
            let rx = m.encode(&m.scale(r, &m.decode(x)));
            if cache.get(content[rx]).elements() != lhs {
                bad = Some((r, x));
                break 'scan;
            }
        }
    }
    let mut res = exhaustive(name, bad.is_some(), scans, bounds);
    if let Some((r, x)) = bad {
        res = res.witness(&[("r", ring.fmt_elem(r)), ("x", m.fmt_vec(&m.decode(x)))]);
    }
    res
}

/// Prime and primary submodules in the sense of `rx ∈ P ⇒ x ∈ P or
/// r^n M ⊆ P` (with `n = 1` for prime), tested exhaustively over `(r, x)`.
fn submodule_kind(m: &FreeModule, p: &Submodule) -> (bool, bool) {
    let ring = m.ring();
    let units: Vec<Vec<Elem>> = (0..m.rank()).map(|j| m.unit_vec(j)).collect();
    let kills_m = |r: Elem| units.iter().all(|e| p.contains(m.encode(&m.scale(r, e))));
    let mut prime = true;
    let mut primary = true;
    for r in ring.elements() {
        let r_in = kills_m(r);
        // powers of r cycle within |R| steps
        let mut q = r;
        let mut power_in = r_in;
        for _ in 1..ring.order() {
            if power_in {
                break;
            }
            q = ring.mul(q, r);
            power_in = kills_m(q);
        }
        if r_in && power_in {
            continue;
        }
        for x in 0..m.order() {
            if p.contains(x) {
                continue;
            }
            if p.contains(m.encode(&m.scale(r, &m.decode(x)))) {
                prime &= r_in;
                primary &= power_in;
                if !prime && !primary {
                    return (false, false);
                }
            }
        }
    }
    (prime, primary)
}

/// `pM` is a prime (primary) submodule exactly when `p` is a prime
/// (primary) ideal, for every enumerated proper `p`.
pub fn submodule_transfer_check(ring: &Arc<FiniteRing>, k: usize, bounds: &Bounds) -> CheckResult {
    let name = format!("submodule_transfer k={k}");
    let m = match module_or_fail(&name, ring, k, bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let ideals = match ideals_or_fail(&name, ring, bounds) {
        Ok(v) => v,
        Err(r) => return r,
    };
    let whole = m.whole();
    let mut scans = 0;
    let mut bad = None;
    let mut skipped = 0;
    for p in &ideals {
        if !p.is_proper() {
            skipped += 1;
            continue;
        }
        scans += (ring.order() * m.order()) as u64;
        let pm = m.extension(p);
        if pm == whole {
            bad = Some((p, "pM = M for proper p".to_string()));
            break;
        }
        let (prime, primary) = submodule_kind(&m, &pm);
        if prime != p.is_prime() || primary != p.is_primary() {
            bad = Some((
                p,
                format!(
                    "ideal prime/primary = {}/{}, submodule prime/primary = {prime}/{primary}",
                    p.is_prime(),
                    p.is_primary()
                ),
            ));
            break;
        }
    }
    let mut r = exhaustive(name, bad.is_some(), scans, bounds)
        .note(format!("{skipped} improper ideal skipped (pM = M)"));
    if let Some((p, problem)) = bad {
        r = r.witness(&[("p", p.to_string()), ("problem", problem)]);
    }
    r
}

/// Over a chain ring with `M = R`: `c(fg) = c(f)c(g)` for scanned
/// `f ∈ R[S]`, `g ∈ M[S]`, with both sides materialized as submodules.
pub fn cyclic_gaussian_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "cyclic_gaussian";
    if !lab.monoid().is_ct() {
        return CheckResult::skipped(NAME, format!("{} is not cancellative and torsion-free", lab.monoid()));
    }
    match is_chain_ring(lab) {
        Ok(None) => {}
        Ok(Some((a, c))) => {
            return CheckResult::new(NAME, Verdict::PreconditionViolated)
                .note(format!("{} is not a chain ring: {a} and {c} are incomparable", lab.ring()))
        }
        Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
    }
    let m = match FreeModule::new(lab.ring(), 1, lab.bounds.order_cap) {
        Ok(m) => m,
        Err(e) => return CheckResult::new(NAME, Verdict::PreconditionViolated).note(e.to_string()),
    };
    let mr = ModuleRing::new(&lab.b, &m).expect("same ring");
    let gs: Vec<ModElem> = lab.elems().iter().take(MODULE_G_LIMIT).map(|g| mr.embed(g, 0)).collect();
    let g_content: Vec<Submodule> = gs.iter().map(|g| mr.module_content(g)).collect();
    let mut scans = 0;
    let mut bad = None;
    'scan: for f in lab.elems() {
        let cf = lab.b.content(f);
        for (g, cg) in gs.iter().zip(&g_content) {
            scans += 1;
            if mr.module_content(&mr.mul(f, g)) != m.ideal_times(&cf, cg) {
                bad = Some((f, g));
                break 'scan;
            }
        }
    }
    let mut r = CheckResult::new(NAME, if bad.is_some() { Verdict::Fail } else { Verdict::BoundedPass })
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans)
        .note(format!("g over the first {} universe elements in M[S], M = R", gs.len()));
    if let Some((f, g)) = bad {
        r = r.witness(&[("f", lab.fmt(f)), ("g", mr.fmt_elem(g))]);
    }
    r
}

/// `Ass_R(M)`: the primes among `Ann(x)`, `x ≠ 0`.
pub fn module_associated_primes(m: &FreeModule) -> Vec<(Ideal, Vec<Elem>)> {
    let ring = m.ring();
    let mut found: Vec<(Ideal, Vec<Elem>)> = Vec::new();
    for x in 1..m.order() {
        let v = m.decode(x);
        let ann: Vec<Elem> = ring
            .elements()
            .filter(|&r| v.iter().all(|&a| ring.mul(r, a) == ring.zero()))
            .collect();
        let ann = Ideal::generate(ring, &ann);
        if ann.is_prime() && !found.iter().any(|(p, _)| *p == ann) {
            found.push((ann, v));
        }
    }
    let order: Vec<Ideal> = associated_primes(ring);
    found.sort_by_key(|(p, _)| order.iter().position(|q| q == p).unwrap_or(usize::MAX));
    found
}

/// `Z_R(M) = {r : rx = 0 for some x ≠ 0}`.
pub fn module_zero_divisors(m: &FreeModule) -> ElemSet {
    let ring = m.ring();
    let mut z = ElemSet::empty(ring.order());
    for r in ring.elements() {
        if (1..m.order()).any(|x| m.scale(r, &m.decode(x)).iter().all(|&a| a == ring.zero())) {
            z.insert(r.index());
        }
    }
    z
}

/// `Z_R(M)` a finite union of associated primes `pᵢ` gives
/// `Z_B(M[S]) = ∪ pᵢB` on the scan, in both directions.
pub fn module_vfzd_check(lab: &Lab, k: usize) -> CheckResult {
    let name = format!("module_vfzd k={k}");
    if !lab.monoid().is_ct() {
        return CheckResult::skipped(name, format!("{} is not cancellative and torsion-free", lab.monoid()));
    }
    let m = match module_or_fail(&name, lab.ring(), k, &lab.bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let ring = lab.ring();
    let zm = module_zero_divisors(&m);
    let ass = module_associated_primes(&m);
    // smallest covering subfamily, earliest first
    let n = ass.len();
    let mut masks: Vec<u32> = (1..(1u32 << n)).collect();
    masks.sort_by_key(|mask| (mask.count_ones(), mask.reverse_bits()));
    let cover: Option<Vec<&(Ideal, Vec<Elem>)>> = masks.into_iter().find_map(|mask| {
        let mut union = ElemSet::empty(ring.order());
        for (i, (p, _)) in ass.iter().enumerate() {
            if mask >> i & 1 == 1 {
                union = union.union(p.elements());
            }
        }
        (union == zm).then(|| (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &ass[i]).collect())
    });
    let Some(cover) = cover else {
        return CheckResult::new(name, Verdict::PreconditionViolated)
            .note("Z_R(M) is not a union of associated primes");
    };
    let mr = ModuleRing::new(&lab.b, &m).expect("same ring");
    let mut scans = 0;
    let mut bad = None;
    for f in lab.elems() {
        scans += 1;
        let located = cover.iter().find(|(p, _)| lab.b.in_extension(f, p));
        match (lab.bounded_killer(f), located) {
            (Some(g), None) => {
                let killed = mr.mul(f, &mr.embed(&g, 0)).is_zero();
                bad = Some((f, format!("kills {} (verified: {killed}) but lies in no piB", mr.fmt_elem(&mr.embed(&g, 0)))));
                break;
            }
            (None, Some((p, x))) => {
                let killed = mr.mul(f, &mr.constant(x)).is_zero();
                bad = Some((f, format!("in {p}B, kills constant {} (verified: {killed}), bounded route found no killer", m.fmt_vec(x))));
                break;
            }
            (Some(_), Some((p, x))) => {
                if !mr.mul(f, &mr.constant(x)).is_zero() {
                    bad = Some((f, format!("in {p}B but does not kill {}", m.fmt_vec(x))));
                    break;
                }
            }
            (None, None) => {}
        }
    }
    let list: Vec<String> = cover.iter().map(|(p, x)| format!("{p} = Ann{}", m.fmt_vec(x))).collect();
    let mut r = CheckResult::new(name, if bad.is_some() { Verdict::Fail } else { Verdict::BoundedPass })
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans)
        .note(format!("M = {}; cover: {{{}}}", m.label(), list.join(", ")));
    if let Some((f, problem)) = bad {
        r = r.witness(&[("f", lab.fmt(f)), ("problem", problem)]);
    }
    r
}

/// `dm_module_exponent ≤ |supp g| + 1` on scanned pairs, with `g` embedded
/// in the first coordinate of `R^k`, on cancellative torsion-free cells.
pub fn dm_module_bound_check(lab: &Lab, k: usize) -> CheckResult {
    let name = format!("dm_module_bound k={k}");
    if !lab.monoid().is_ct() {
        return CheckResult::skipped(name, format!("{} is not cancellative and torsion-free", lab.monoid()));
    }
    let m = match module_or_fail(&name, lab.ring(), k, &lab.bounds) {
        Ok(m) => m,
        Err(r) => return r,
    };
    let mr = ModuleRing::new(&lab.b, &m).expect("same ring");
    let elems = lab.elems();
    let limit = elems.len().min(64);
    let mut scans = 0;
    let mut bad = None;
    'scan: for f in &elems[..limit] {
        for g in &elems[..limit] {
            scans += 1;
            let gm = mr.embed(g, k - 1);
            match dm_module_exponent(&mr, f, &gm) {
                Ok(n) if n as usize <= g.support_len() + 1 => {}
                other => {
                    bad = Some((f, gm, other.map(|n| n.to_string()).unwrap_or_else(|e| e.to_string())));
                    break 'scan;
                }
            }
        }
    }
    let mut r = CheckResult::new(name, if bad.is_some() { Verdict::Fail } else { Verdict::BoundedPass })
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans)
        .note(format!("pairs over the first {limit} universe elements"));
    if let Some((f, g, n)) = bad {
        r = r.witness(&[("f", lab.fmt(f)), ("g", mr.fmt_elem(&g)), ("exponent", n)]);
    }
    r
}
