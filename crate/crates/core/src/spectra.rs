//! Prime structure of `R` against `B = R[S]`: extensions and contractions,
//! associated and minimal primes, primary and nilradical extension, and the
//! domainlike, VFZD and regularity transfers.
//!
//! `B` is infinite, so an extension `IB` is kept intensional: since `B` is
//! free over `R`, `f ∈ IB` exactly when `c(f) ⊆ I`. Statements about all of
//! `B` are checked on the scan universe and reported as bounded passes.

use crate::check::{scan_pairs, CheckResult, Verdict};
use crate::error::{Error, Result};
use crate::ideals::{
    associated_primes, enumerate_ideals, has_property_a, prime_avoidance_locate, spectrum,
    very_few_zero_divisors, Ideal,
};
use crate::lab::Lab;
use crate::monoidring::{MonoidRing, MrElem};

/// `IB` for an ideal `I` of `R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtendedIdeal {
    pub base: Ideal,
}

impl ExtendedIdeal {
    pub fn new(base: Ideal) -> ExtendedIdeal {
        ExtendedIdeal { base }
    }

    pub fn contains(&self, b: &MonoidRing, f: &MrElem) -> bool {
        b.in_extension(f, &self.base)
    }

    /// `IB ∩ R`.
    pub fn contraction(&self, b: &MonoidRing) -> Ideal {
        let ring = b.ring();
        let elems = ring
            .elements()
            .filter(|&r| self.contains(b, &b.constant(r)))
            .collect::<Vec<_>>();
        Ideal::generate(ring, &elems)
    }
}

fn not_ct(name: &str, lab: &Lab) -> Option<CheckResult> {
    (!lab.monoid().is_ct()).then(|| {
        CheckResult::skipped(
            name,
            format!("{} is not cancellative and torsion-free", lab.monoid()),
        )
    })
}

fn universe_result(name: &str, lab: &Lab, failed: bool) -> CheckResult {
    CheckResult::new(name, if failed { Verdict::Fail } else { Verdict::BoundedPass })
        .with_universe(&lab.bounds, &lab.universe)
}

/// Nilpotency index of `Nil(R)`: least `t` with `Nil(R)^t = 0`.
pub fn nil_index(b: &MonoidRing) -> u32 {
    let nil = b.ring().nilradical();
    let mut p = nil.clone();
    let mut t = 1;
    while !p.is_zero() {
        p = p.product(&nil).expect("same ring");
        t += 1;
    }
    t
}

/// `f^m = 0` for some `m ≤ cap`.
pub fn is_nilpotent(b: &MonoidRing, f: &MrElem, cap: u32) -> bool {
    let mut p = f.clone();
    for _ in 0..cap {
        if p.is_zero() {
            return true;
        }
        p = b.mul(&p, f);
    }
    p.is_zero()
}

fn nil_cap(b: &MonoidRing, f: &MrElem) -> u32 {
    nil_index(b) * f.support_len().max(1) as u32
}

/// `pB ∩ R = p`, exhaustively over `R`.
pub fn extension_contraction_check(lab: &Lab, p: &Ideal) -> CheckResult {
    let ext = ExtendedIdeal::new(p.clone());
    let ring = lab.ring();
    let bad = ring
        .elements()
        .find(|&r| ext.contains(&lab.b, &lab.b.constant(r)) != p.contains(r));
    let mut r = CheckResult::new(
        format!("extension_contraction {p}"),
        if bad.is_some() { Verdict::Fail } else { Verdict::Pass },
    )
    .scans(ring.order() as u64);
    if let Some(x) = bad {
        r = r.witness(&[("p", p.to_string()), ("r", ring.fmt_elem(x))]);
    }
    r
}

/// Bounded refutation scan for primality of `pB`: no scanned `f, g ∉ pB`
/// with `fg ∈ pB`.
pub fn prime_extension_check(lab: &Lab, p: &Ideal) -> CheckResult {
    let name = format!("prime_extension {p}");
    if !p.is_prime() {
        return CheckResult::skipped(name, format!("{p} is not prime"));
    }
    let pt = lab.pairs();
    let mut cache = pt.cache.clone();
    let pid = cache.intern(p.clone());
    let inside: Vec<bool> = pt.content.iter().map(|&c| cache.is_subset(c, pid)).collect();
    let (scans, hit) = scan_pairs(lab.universe.len(), |i, j| {
        !inside[i] && !inside[j] && cache.is_subset(pt.product(i, j), pid)
    });
    let mut r = universe_result(&name, lab, hit.is_some()).scans(scans);
    if let Some((i, j)) = hit {
        let e = lab.elems();
        r = r.witness(&[
            ("p", p.to_string()),
            ("f", lab.fmt(&e[i])),
            ("g", lab.fmt(&e[j])),
            ("fg", lab.fmt(&lab.b.mul(&e[i], &e[j]))),
        ]);
        if !lab.monoid().is_ct() {
            r = r.note(format!("expected: {} is not cancellative and torsion-free", lab.monoid()));
        }
    }
    r
}

fn primes_or_fail(name: &str, lab: &Lab) -> std::result::Result<Vec<Ideal>, CheckResult> {
    spectrum(lab.ring()).map_err(|e| CheckResult::new(name, Verdict::Fail).note(e.to_string()))
}

fn rollup(name: &str, lab: &Lab, details: Vec<CheckResult>) -> CheckResult {
    let failed = details.iter().any(|d| d.verdict == Verdict::Fail);
    let exhaustive = details.iter().all(|d| d.verdict == Verdict::Pass);
    let verdict = match (failed, exhaustive) {
        (true, _) => Verdict::Fail,
        (false, true) => Verdict::Pass,
        (false, false) => Verdict::BoundedPass,
    };
    let mut r = CheckResult::new(name, verdict).with_universe(&lab.bounds, &lab.universe);
    r.scans = details.iter().map(|d| d.scans).sum();
    if failed {
        if let Some(w) = details.iter().find(|d| d.verdict == Verdict::Fail).and_then(|d| d.witness.clone()) {
            r.witness = Some(w);
        }
    }
    r.details = details;
    r
}

/// `pB` is prime for every prime `p` of `R`.
pub fn prime_extensions(lab: &Lab) -> CheckResult {
    let primes = match primes_or_fail("prime_extension", lab) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let details = primes.iter().map(|p| prime_extension_check(lab, p)).collect();
    rollup("prime_extension", lab, details)
}

/// Contraction of every extended prime.
pub fn extension_contractions(lab: &Lab) -> CheckResult {
    let primes = match primes_or_fail("extension_contraction", lab) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let details = primes.iter().map(|p| extension_contraction_check(lab, p)).collect();
    let mut r = rollup("extension_contraction", lab, details);
    r.universe = None;
    r
}

/// `p ↦ pB` from `Min(R)` to `Min(B)`: extensions are prime and contract
/// back, distinct primes stay distinct, and every scanned zero-divisor or
/// nilpotent has content inside a minimal prime (bounded surjectivity
/// evidence only).
pub fn min_bijection_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "min_bijection";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let primes = match primes_or_fail(NAME, lab) {
        Ok(p) => p,
        Err(r) => return r,
    };
    let min = crate::ideals::minimal_primes(&primes);
    let mut details = Vec::new();
    for p in &min {
        details.push(extension_contraction_check(lab, p));
        details.push(prime_extension_check(lab, p));
    }
    let contractions: Vec<Ideal> = min
        .iter()
        .map(|p| ExtendedIdeal::new(p.clone()).contraction(&lab.b))
        .collect();
    let mut injective = CheckResult::new("injectivity", Verdict::Pass);
    'outer: for i in 0..min.len() {
        for j in i + 1..min.len() {
            if contractions[i] == contractions[j] {
                injective = CheckResult::new("injectivity", Verdict::Fail)
                    .witness(&[("p", min[i].to_string()), ("q", min[j].to_string())]);
                break 'outer;
            }
        }
    }
    details.push(injective);

    let cap_note;
    let mut surj = {
        let mut scans = 0;
        let mut witness = None;
        for f in lab.elems() {
            scans += 1;
            let zd = lab.is_zero_divisor(f).is_zero_divisor();
            let nil = is_nilpotent(&lab.b, f, nil_cap(&lab.b, f));
            if (zd || nil) && !min.iter().any(|p| lab.b.in_extension(f, p)) {
                witness = Some(vec![
                    ("f", lab.fmt(f)),
                    ("kind", if nil { "nilpotent" } else { "zero-divisor" }.to_string()),
                ]);
                break;
            }
        }
        cap_note = format!("nilpotency tested up to (index of Nil(R)) x |supp f| = {} x |supp f|", nil_index(&lab.b));
        let mut r = universe_result("bounded_surjectivity", lab, witness.is_some()).scans(scans);
        if let Some(w) = witness {
            r = r.witness(&w);
        }
        r.note("surrogate: full surjectivity over the infinite B is not decidable; bounded evidence only")
    };
    surj = surj.note(cap_note);
    details.push(surj);
    let mut r = rollup(NAME, lab, details);
    let list: Vec<String> = min.iter().map(|p| format!("{p}B")).collect();
    r.notes.push(format!("Min(B) images: {{{}}}", list.join(", ")));
    r
}

/// For `p = Ann(x) ∈ Ass(R)`: `x·f = 0 ⇔ c(f) ⊆ p` on every scanned `f`.
pub fn ass_extension_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "ass_extension";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let ring = lab.ring();
    let mut details = Vec::new();
    for p in associated_primes(ring) {
        let x = ring
            .elements()
            .find(|&x| Ideal::generate(ring, &[x]).annihilator() == p)
            .expect("associated prime has a witness");
        let mut scans = 0;
        let mut bad = None;
        for f in lab.elems() {
            scans += 1;
            let kills = lab.b.scale(x, f).is_zero();
            if kills != lab.b.in_extension(f, &p) {
                bad = Some(f);
                break;
            }
        }
        let mut d = universe_result(&format!("ass_extension {p} = Ann({})", ring.fmt_elem(x)), lab, bad.is_some())
            .scans(scans);
        if let Some(f) = bad {
            d = d.witness(&[("p", p.to_string()), ("x", ring.fmt_elem(x)), ("f", lab.fmt(f))]);
        }
        details.push(d);
    }
    rollup(NAME, lab, details)
}

/// For every enumerated primary `q` with radical `p`: scanned `fg ∈ qB`,
/// `f ∉ qB` imply `g ∈ pB`.
pub fn primary_extension_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "primary_extension";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let ideals = match enumerate_ideals(lab.ring(), lab.bounds.gen_cap) {
        Ok(v) => v,
        Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
    };
    let pt = lab.pairs();
    let mut details = Vec::new();
    let mut skipped = Vec::new();
    for q in ideals.iter().filter(|q| q.is_proper()) {
        if !q.is_primary() {
            skipped.push(q.to_string());
            continue;
        }
        let p = q.radical();
        let mut cache = pt.cache.clone();
        let qid = cache.intern(q.clone());
        let pid = cache.intern(p.clone());
        let in_q: Vec<bool> = pt.content.iter().map(|&c| cache.is_subset(c, qid)).collect();
        let in_p: Vec<bool> = pt.content.iter().map(|&c| cache.is_subset(c, pid)).collect();
        let (scans, hit) = scan_pairs(lab.universe.len(), |i, j| {
            let fg_in: bool = cache.is_subset(pt.product(i, j), qid);
            fg_in && ((!in_q[i] && !in_p[j]) || (!in_q[j] && !in_p[i]))
        });
        let mut d = universe_result(&format!("primary_extension {q}, radical {p}"), lab, hit.is_some())
            .scans(scans);
        if let Some((i, j)) = hit {
            let e = lab.elems();
            let (f, g) = if !in_q[i] && !in_p[j] { (i, j) } else { (j, i) };
            d = d.witness(&[("q", q.to_string()), ("f", lab.fmt(&e[f])), ("g", lab.fmt(&e[g]))]);
        }
        details.push(d);
    }
    let mut r = rollup(NAME, lab, details);
    if !skipped.is_empty() {
        r.notes.push(format!("skipped, not primary: {}", skipped.join(", ")));
    }
    r
}

/// Scanned `f` is nilpotent exactly when `c(f) ⊆ Nil(R)`.
pub fn nil_extension_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "nil_extension";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let nil = lab.ring().nilradical();
    let mut scans = 0;
    let mut bad = None;
    for f in lab.elems() {
        scans += 1;
        let nilpotent = is_nilpotent(&lab.b, f, nil_cap(&lab.b, f));
        if nilpotent != lab.b.in_extension(f, &nil) {
            bad = Some((f, nilpotent));
            break;
        }
    }
    let mut r = universe_result(NAME, lab, bad.is_some()).scans(scans).note(format!(
        "Nil(R) = {nil}; nilpotency tested up to {} x |supp f| powers",
        nil_index(&lab.b)
    ));
    if let Some((f, nilpotent)) = bad {
        r = r.witness(&[
            ("f", lab.fmt(f)),
            ("nilpotent", nilpotent.to_string()),
            ("c(f)", lab.b.content(f).to_string()),
        ]);
    }
    r
}

/// `Z(R) ⊆ Nil(R)` against "every scanned zero-divisor of `B` is nilpotent".
pub fn domainlike_transfer_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "domainlike_transfer";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let ring = lab.ring();
    let nil = ring.nilradical();
    let dl_r = ring.zero_divisor_set().is_subset(nil.elements());
    let mut scans = 0;
    let mut counter = None;
    for f in lab.elems() {
        scans += 1;
        if lab.is_zero_divisor(f).is_zero_divisor() && !is_nilpotent(&lab.b, f, nil_cap(&lab.b, f)) {
            counter = Some(f);
            break;
        }
    }
    let dl_b = counter.is_none();
    let mut r = universe_result(NAME, lab, dl_r != dl_b)
        .scans(scans)
        .note(format!("R domainlike: {dl_r}; B domainlike on the scan: {dl_b}"));
    if let Some(f) = counter {
        r = r.note(format!("zero-divisor of B that is not nilpotent: {}", lab.fmt(f)));
    }
    if dl_r != dl_b {
        r = r.witness(&[
            ("R_domainlike", dl_r.to_string()),
            ("B_domainlike", dl_b.to_string()),
            ("f", counter.map(|f| lab.fmt(f)).unwrap_or_else(|| "none".into())),
        ]);
    }
    r
}

/// `Z(R) = p₁ ∪ … ∪ pₙ` with `pᵢ ∈ Ass(R)` transfers to
/// `Z(B) = p₁B ∪ … ∪ pₙB` on the scan, and to the `Min(B)` form when the
/// cover consists of minimal primes.
pub fn vfzd_transfer_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "vfzd_transfer";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    let vfzd = very_few_zero_divisors(lab.ring());
    if !vfzd.holds {
        return CheckResult::new(NAME, Verdict::PreconditionViolated)
            .note(format!("{} does not have very few zero-divisors", lab.ring()));
    }
    let cover = vfzd.cover;
    let mut scans = 0;
    let mut witness = None;
    for f in lab.elems() {
        scans += 1;
        let zd = lab.is_zero_divisor(f).is_zero_divisor();
        let located = prime_avoidance_locate(&lab.b.content(f), &cover);
        match (zd, located) {
            (true, None) => {
                witness = Some(vec![("f", lab.fmt(f)), ("problem", "zero-divisor outside every piB".into())]);
                break;
            }
            (false, Some(i)) => {
                witness = Some(vec![
                    ("f", lab.fmt(f)),
                    ("problem", format!("in {}B but regular", cover[i])),
                ]);
                break;
            }
            _ => {}
        }
    }
    let list: Vec<String> = cover.iter().map(|p| format!("{p}B")).collect();
    let mut r = universe_result(NAME, lab, witness.is_some())
        .scans(scans)
        .note(format!("cover: {{{}}}", list.join(", ")));
    if let Some(w) = witness {
        r = r.witness(&w);
    }
    let primes = spectrum(lab.ring()).unwrap_or_default();
    let min = crate::ideals::minimal_primes(&primes);
    if cover.iter().all(|p| min.contains(p)) {
        r = r.note("cover lies in Min(R), so Z(B) is a finite union of primes in Min(B) on the scan");
    }
    r
}

/// With Property (A): the scalar route calls `f` regular exactly when
/// `c(f) ⊄ Z(R)`.
pub fn regular_equiv_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "regular_equiv";
    if let Some(r) = not_ct(NAME, lab) {
        return r;
    }
    match has_property_a(lab.ring(), lab.bounds.gen_cap) {
        Ok(a) if a.holds => {}
        Ok(_) => {
            return CheckResult::new(NAME, Verdict::PreconditionViolated)
                .note(format!("{} lacks Property (A)", lab.ring()))
        }
        Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
    }
    let zd = lab.ring().zero_divisor_set();
    let mut scans = 0;
    let mut bad = None;
    for f in lab.elems() {
        scans += 1;
        let regular = !lab.is_zero_divisor(f).is_zero_divisor();
        let regular_content = !lab.b.content(f).elements().is_subset(&zd);
        if regular != regular_content {
            bad = Some((f, regular));
            break;
        }
    }
    let mut r = universe_result(NAME, lab, bad.is_some()).scans(scans);
    if let Some((f, regular)) = bad {
        r = r.witness(&[("f", lab.fmt(f)), ("regular", regular.to_string())]);
    }
    r
}

fn ideal_by_display(lab: &Lab, text: &str) -> Result<Ideal> {
    enumerate_ideals(lab.ring(), lab.bounds.gen_cap)?
        .into_iter()
        .find(|i| i.to_string() == text)
        .ok_or_else(|| Error::PreconditionViolated(format!("no enumerated ideal displays as {text}")))
}

/// Witness re-evaluation for the checks of this module.
pub(crate) fn recheck(lab: &Lab, name: &str, result: &CheckResult) -> Result<bool> {
    let get = |key: &str| -> Result<&str> {
        result
            .witness_value(key)
            .ok_or_else(|| Error::PreconditionViolated(format!("witness has no '{key}' entry")))
    };
    let base = name.split_whitespace().next().unwrap_or(name);
    match base {
        "prime_extension" => {
            let p = ideal_by_display(lab, get("p")?)?;
            let f = lab.b.parse(get("f")?)?;
            let g = lab.b.parse(get("g")?)?;
            let b = &lab.b;
            Ok(!b.in_extension(&f, &p) && !b.in_extension(&g, &p) && b.in_extension(&b.mul(&f, &g), &p))
        }
        "nil_extension" => {
            let f = lab.b.parse(get("f")?)?;
            let nil = lab.ring().nilradical();
            Ok(is_nilpotent(&lab.b, &f, nil_cap(&lab.b, &f)) != lab.b.in_extension(&f, &nil))
        }
        _ => Err(Error::PreconditionViolated(format!("no witness re-evaluation for {name}"))),
    }
}
