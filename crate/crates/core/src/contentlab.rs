//! Content formulas on `R[S]`: Dedekind–Mertens exponents, the Gaussian,
//! Armendariz, weak-content, unit-content and McCoy properties, and the
//! explicit counterexamples for monoids that are not cancellative or not
//! torsion-free.
//!
//! Checks that can be refuted by those counterexamples try them before the
//! universe scan, so a failing cell reports the structural witness.

use crate::cache::{IdealCache, IdealId};
use crate::check::{scan_pairs, CheckResult, Verdict};
use crate::error::{Error, Result};
use crate::ideals::enumerate_ideals;
use crate::lab::Lab;
use crate::monoidring::{MonoidRing, MrElem};
use crate::universe::Bounds;

/// Least `n ≥ 1` with `c(f)^n c(g) = c(f)^{n-1} c(fg)`, searched up to
/// `|supp f| + |supp g| + 1`.
pub fn dm_exponent(b: &MonoidRing, f: &MrElem, g: &MrElem) -> Result<u32> {
    let mut cache = IdealCache::new(b.ring());
    let cf = cache.content(f);
    let cg = cache.content(g);
    let cfg = cache.content(&b.mul(f, g));
    let cap = dm_cap(f, g);
    dm_cached(&mut cache, cf, cg, cfg, cap).ok_or(Error::CapExceeded { cap: cap as usize })
}

pub fn dm_cap(f: &MrElem, g: &MrElem) -> u32 {
    (f.support_len() + g.support_len() + 1) as u32
}

pub(crate) fn dm_cached(
    cache: &mut IdealCache,
    cf: IdealId,
    cg: IdealId,
    cfg: IdealId,
    cap: u32,
) -> Option<u32> {
    let mut prev = cache.unit();
    for n in 1..=cap {
        let next = cache.product(prev, cf);
        if cache.product(next, cg) == cache.product(prev, cfg) {
            return Some(n);
        }
        prev = next;
    }
    None
}

/// `f = X^s`, `g = X^t − X^u` from a cancellation failure `s+t = s+u`:
/// both have content `R` and `fg = 0`.
pub fn counterexample_noncancellative(b: &MonoidRing) -> Result<(MrElem, MrElem)> {
    let monoid = b.monoid();
    let Some((s, t, u)) = monoid.is_cancellative().1 else {
        return Err(Error::PreconditionViolated(format!("{monoid} is cancellative")));
    };
    let one = b.ring().one();
    let f = b.monomial(one, s);
    let g = b.sub(&b.monomial(one, t), &b.monomial(one, u));
    if !b.mul(&f, &g).is_zero() || !b.has_unit_content(&f) || !b.has_unit_content(&g) {
        return Err(Error::CrossValidationMismatch(format!(
            "cancellation counterexample over {} does not hold",
            b.label()
        )));
    }
    Ok((f, g))
}

/// From `ks = kt` with `s ≠ t` and `k` minimal:
/// `f = X^s − X^t`, `g = Σ_{i<k} X^{(k−i−1)s + it}`, so `fg = X^{ks} − X^{kt} = 0`.
pub fn counterexample_torsion(b: &MonoidRing) -> Result<(MrElem, MrElem)> {
    let monoid = b.monoid();
    if !monoid.is_cancellative().0 {
        return Err(Error::PreconditionViolated(format!("{monoid} is not cancellative")));
    }
    let Some((s, t, k)) = monoid.is_torsion_free().1 else {
        return Err(Error::PreconditionViolated(format!("{monoid} is torsion-free")));
    };
    let one = b.ring().one();
    let f = b.sub(&b.monomial(one, s.clone()), &b.monomial(one, t.clone()));
    let mut terms = Vec::new();
    for i in 0..k {
        let key = monoid.combine(&monoid.multiple(k - i - 1, &s), &monoid.multiple(i, &t));
        terms.push((key, one));
    }
    let g = b.element(terms)?;
    if g.is_zero() || !b.mul(&f, &g).is_zero() {
        return Err(Error::CrossValidationMismatch(format!(
            "torsion factorization over {} does not vanish",
            b.label()
        )));
    }
    Ok((f, g))
}

/// Whichever of the two constructions apply to the monoid.
pub fn structural_pairs(b: &MonoidRing) -> Vec<(MrElem, MrElem)> {
    [counterexample_noncancellative(b), counterexample_torsion(b)]
        .into_iter()
        .filter_map(Result::ok)
        .collect()
}

fn pair_witness(lab: &Lab, f: &MrElem, g: &MrElem, extra: Vec<(&'static str, String)>) -> Vec<(&'static str, String)> {
    let mut w = vec![("f", lab.fmt(f)), ("g", lab.fmt(g))];
    w.extend(extra);
    w
}

fn finish(name: &str, lab: &Lab, scans: u64, witness: Option<Vec<(&'static str, String)>>) -> CheckResult {
    let verdict = if witness.is_some() {
        Verdict::Fail
    } else {
        Verdict::BoundedPass
    };
    let mut r = CheckResult::new(name, verdict)
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans);
    if let Some(w) = witness {
        r = r.witness(&w);
    }
    r
}

// Predicates on a single pair; `Some(extra)` means the pair violates the
// property, with the ideals to report.

fn gaussian_violation(b: &MonoidRing, f: &MrElem, g: &MrElem) -> Option<Vec<(&'static str, String)>> {
    let cfg = b.content(&b.mul(f, g));
    let prod = b.content(f).product(&b.content(g)).expect("same ring");
    (cfg != prod).then(|| vec![("c(fg)", cfg.to_string()), ("c(f)c(g)", prod.to_string())])
}

fn armendariz_violation(b: &MonoidRing, f: &MrElem, g: &MrElem) -> Option<Vec<(&'static str, String)>> {
    let prod = b.content(f).product(&b.content(g)).expect("same ring");
    (b.mul(f, g).is_zero() && !prod.is_zero()).then(|| vec![("c(f)c(g)", prod.to_string())])
}

fn weak_content_violation(b: &MonoidRing, f: &MrElem, g: &MrElem) -> Option<Vec<(&'static str, String)>> {
    let prod = b.content(f).product(&b.content(g)).expect("same ring");
    let rad = b.content(&b.mul(f, g)).radical();
    (!prod.is_subset(&rad)).then(|| vec![("c(f)c(g)", prod.to_string()), ("rad(c(fg))", rad.to_string())])
}

fn unit_content_violation(b: &MonoidRing, f: &MrElem, g: &MrElem) -> Option<Vec<(&'static str, String)>> {
    let cfg = b.content(&b.mul(f, g));
    (b.has_unit_content(f) && b.has_unit_content(g) && cfg.is_proper())
        .then(|| vec![("c(fg)", cfg.to_string())])
}

type PairPredicate = fn(&MonoidRing, &MrElem, &MrElem) -> Option<Vec<(&'static str, String)>>;

fn structural_first(lab: &Lab, pred: PairPredicate) -> Option<Vec<(&'static str, String)>> {
    structural_pairs(&lab.b)
        .into_iter()
        .find_map(|(f, g)| pred(&lab.b, &f, &g).map(|extra| pair_witness(lab, &f, &g, extra)))
}

/// Gaussian scan; the witness indices are also returned for reuse.
fn gaussian_scan(lab: &Lab) -> (u64, Option<(usize, usize)>) {
    let pt = lab.pairs();
    let mut cache = pt.cache.clone();
    scan_pairs(lab.universe.len(), |i, j| {
        cache.product(pt.content[i], pt.content[j]) != pt.product(i, j)
    })
}

/// `c(fg) = c(f)c(g)` on all scanned pairs.
pub fn gaussian_check(lab: &Lab) -> CheckResult {
    let (scans, hit) = gaussian_scan(lab);
    let e = lab.elems();
    let witness = hit.map(|(i, j)| {
        let extra = gaussian_violation(&lab.b, &e[i], &e[j]).expect("scan and recheck agree");
        pair_witness(lab, &e[i], &e[j], extra)
    });
    finish("gaussian", lab, scans, witness)
}

/// `fg = 0 ⇒ c(f)c(g) = 0` on all scanned pairs.
pub fn armendariz_check(lab: &Lab) -> CheckResult {
    let pt = lab.pairs();
    let mut cache = pt.cache.clone();
    let zero = cache.zero();
    let (scans, hit) = scan_pairs(lab.universe.len(), |i, j| {
        pt.is_zero_product(i, j) && cache.product(pt.content[i], pt.content[j]) != zero
    });
    let e = lab.elems();
    let witness = hit.map(|(i, j)| {
        let extra = armendariz_violation(&lab.b, &e[i], &e[j]).expect("scan and recheck agree");
        pair_witness(lab, &e[i], &e[j], extra)
    });
    finish("armendariz", lab, scans, witness)
}

/// `c(f)c(g) ⊆ rad(c(fg))`.
pub fn weak_content_check(lab: &Lab) -> CheckResult {
    let structural = structural_first(lab, weak_content_violation);
    let mut scans = structural_pairs(&lab.b).len() as u64;
    let witness = structural.or_else(|| {
        let pt = lab.pairs();
        let mut cache = pt.cache.clone();
        let (n, hit) = scan_pairs(lab.universe.len(), |i, j| {
            let prod = cache.product(pt.content[i], pt.content[j]);
            let rad = cache.radical(pt.product(i, j));
            !cache.is_subset(prod, rad)
        });
        scans += n;
        let e = lab.elems();
        hit.map(|(i, j)| {
            let extra = weak_content_violation(&lab.b, &e[i], &e[j]).expect("scan and recheck agree");
            pair_witness(lab, &e[i], &e[j], extra)
        })
    });
    finish("weak_content", lab, scans, witness)
}

/// `c(f) = c(g) = R ⇒ c(fg) = R`.
pub fn unit_content_check(lab: &Lab) -> CheckResult {
    let structural = structural_first(lab, unit_content_violation);
    let mut scans = structural_pairs(&lab.b).len() as u64;
    let witness = structural.or_else(|| {
        let pt = lab.pairs();
        let unit = pt.cache.unit();
        let idx: Vec<usize> = (0..lab.universe.len()).filter(|&i| pt.content[i] == unit).collect();
        let (n, hit) = scan_pairs(idx.len(), |a, b| pt.product(idx[a], idx[b]) != unit);
        scans += n;
        let e = lab.elems();
        hit.map(|(a, b)| {
            let (f, g) = (&e[idx[a]], &e[idx[b]]);
            let extra = unit_content_violation(&lab.b, f, g).expect("scan and recheck agree");
            pair_witness(lab, f, g, extra)
        })
    });
    finish("unit_content", lab, scans, witness)
}

/// Every zero-divisor found by annihilator search is killed by a nonzero
/// scalar, and every element with a scalar killer is found by the search.
pub fn mccoy_check(lab: &Lab) -> CheckResult {
    let mut candidates: Vec<MrElem> = Vec::new();
    if let Ok((_, g)) = counterexample_noncancellative(&lab.b) {
        candidates.push(g);
    }
    if let Ok((f, _)) = counterexample_torsion(&lab.b) {
        candidates.push(f);
    }
    candidates.extend(lab.elems().iter().cloned());
    let mut scans = 0;
    let mut witness = None;
    for g in &candidates {
        scans += 1;
        let killer = lab.bounded_killer(g);
        let scalar = lab.scalar_killer(g);
        match (&killer, scalar) {
            (Some(h), None) => {
                witness = Some(vec![
                    ("g", lab.fmt(g)),
                    ("killed_by", lab.fmt(h)),
                    ("scalar_killer", "none".to_string()),
                ]);
                break;
            }
            (None, Some(r)) => {
                witness = Some(vec![
                    ("g", lab.fmt(g)),
                    ("killed_by", "none found".to_string()),
                    ("scalar_killer", lab.ring().fmt_elem(r)),
                ]);
                break;
            }
            _ => {}
        }
    }
    finish("mccoy", lab, scans, witness)
}

/// Cancellative and torsion-free `S` against the unit-content, McCoy and
/// weak-content conditions: all hold together or all fail together.
pub fn theorem13_battery(lab: &Lab) -> CheckResult {
    let monoid = lab.monoid();
    let (canc, _) = monoid.is_cancellative();
    let (tf, _) = monoid.is_torsion_free();
    let flags = canc && tf;
    let flag_result = CheckResult::new("structural_flags", Verdict::Pass).note(format!(
        "{monoid}: cancellative = {canc}, torsion_free = {tf}"
    ));
    let unit = unit_content_check(lab);
    let mccoy = mccoy_check(lab);
    let mut weak = weak_content_check(lab);
    if !flags && weak.verdict != Verdict::Fail {
        weak.verdict = Verdict::Inconclusive;
        weak.notes.push("inconclusive at bounds: no weak-content counterexample found".into());
    }

    let mut constructions = Vec::new();
    match counterexample_noncancellative(&lab.b) {
        Ok((f, g)) => constructions.push(
            CheckResult::new("counterexample_noncancellative", Verdict::Pass)
                .witness(&pair_witness(lab, &f, &g, vec![("fg", lab.fmt(&lab.b.mul(&f, &g)))]))
                .note("c(f) = c(g) = R and fg = 0"),
        ),
        Err(Error::PreconditionViolated(_)) => {}
        Err(e) => constructions.push(CheckResult::new("counterexample_noncancellative", Verdict::Fail).note(e.to_string())),
    }
    match counterexample_torsion(&lab.b) {
        Ok((f, g)) => constructions.push(
            CheckResult::new("counterexample_torsion", Verdict::Pass)
                .witness(&pair_witness(lab, &f, &g, vec![("fg", lab.fmt(&lab.b.mul(&f, &g)))]))
                .note("(X^s - X^t)(sum of X^((k-i-1)s+it)) = X^(ks) - X^(kt) = 0"),
        ),
        Err(Error::PreconditionViolated(_)) => {}
        Err(e) => constructions.push(CheckResult::new("counterexample_torsion", Verdict::Fail).note(e.to_string())),
    }

    let conditions = [&unit, &mccoy, &weak];
    let disagreeing: Vec<&str> = conditions
        .iter()
        .filter(|c| {
            if flags {
                c.verdict == Verdict::Fail
            } else {
                !matches!(c.verdict, Verdict::Fail | Verdict::Inconclusive)
            }
        })
        .map(|c| c.name.as_str())
        .collect();
    let constructions_ok = constructions.iter().all(|c| c.verdict == Verdict::Pass)
        && (flags || !constructions.is_empty());
    let mut result = if disagreeing.is_empty() && constructions_ok {
        let verdict = if conditions.iter().any(|c| c.verdict == Verdict::Inconclusive) {
            Verdict::Inconclusive
        } else {
            Verdict::BoundedPass
        };
        CheckResult::new("theorem13", verdict).note(if flags {
            "all conditions hold on the scanned universe, matching the monoid flags"
        } else {
            "all conditions fail with explicit counterexamples, matching the monoid flags"
        })
    } else {
        let mut r = CheckResult::new("theorem13", Verdict::Fail)
            .witness(&[("disagreeing", disagreeing.join(","))]);
        if !constructions_ok {
            r = r.note("counterexample construction failed");
        }
        r
    };
    result = result.with_universe(&lab.bounds, &lab.universe);
    result.scans = unit.scans + mccoy.scans + weak.scans;
    result.details = vec![flag_result, unit, mccoy, weak];
    result.details.extend(constructions);
    result
}

/// Dedekind–Mertens exponents over scanned pairs (both orders): a cap hit
/// or an exponent above `|supp g| + 1` is reported as a failure.
pub fn dm_bound_check(lab: &Lab) -> CheckResult {
    if !lab.monoid().is_ct() {
        return CheckResult::skipped(
            "dm_bound",
            format!("{} is not cancellative and torsion-free", lab.monoid()),
        );
    }
    let pt = lab.pairs();
    let mut cache = pt.cache.clone();
    let e = lab.elems();
    let mut worst = 0;
    let mut failure = None;
    let (scans, hit) = scan_pairs(e.len(), |i, j| {
        for (a, b) in [(i, j), (j, i)] {
            let cap = dm_cap(&e[a], &e[b]);
            let n = dm_cached(&mut cache, pt.content[a], pt.content[b], pt.product(a, b), cap);
            match n {
                Some(n) if n as usize <= e[b].support_len() + 1 => worst = worst.max(n),
                other => {
                    failure = Some((a, b, other));
                    return true;
                }
            }
        }
        false
    });
    let witness = hit.and(failure).map(|(a, b, n)| {
        let outcome = match n {
            Some(n) => format!("{n} exceeds |supp(g)| + 1 = {}", e[b].support_len() + 1),
            None => format!("cap {} exceeded", dm_cap(&e[a], &e[b])),
        };
        pair_witness(lab, &e[a], &e[b], vec![("exponent", outcome)])
    });
    let failed = witness.is_some();
    let mut r = finish("dm_bound", lab, scans, witness);
    if failed {
        r = r.note("theorem-falsifying: Dedekind-Mertens bound violated on a cancellative torsion-free monoid");
    } else {
        r = r.note(format!("largest exponent found: {worst}"));
    }
    r
}

/// Gaussian `B` ⇔ every `B/IB` is Armendariz over `R/I`. When the Gaussian
/// scan passes, every enumerated proper `I` is scanned; when it fails with
/// `(f, g)`, `I = c(fg)` makes the images of `f, g` an Armendariz failure.
pub fn gaussian_quotient_equivalence(lab: &Lab) -> CheckResult {
    const NAME: &str = "gaussian_quotient";
    let ring = lab.ring();
    let (gscans, hit) = gaussian_scan(lab);
    let quotient_bounds = Bounds {
        coeff_mode: None,
        ..lab.bounds.clone()
    };
    let base = CheckResult::new(NAME, Verdict::BoundedPass).with_universe(&lab.bounds, &lab.universe);
    match hit {
        Some((i, j)) => {
            let (f, g) = (&lab.elems()[i], &lab.elems()[j]);
            let ideal = lab.b.content(&lab.b.mul(f, g));
            let q = match ring.quotient(&ideal) {
                Ok(q) => q,
                Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
            };
            let qb = MonoidRing::new(q.ring.clone(), lab.monoid().clone());
            let fq = lab.b.map_coeffs(&qb, f, |c| q.project(c));
            let gq = lab.b.map_coeffs(&qb, g, |c| q.project(c));
            let projected = armendariz_violation(&qb, &fq, &gq);
            let mut detail = CheckResult::new(
                "armendariz_mod_I",
                if projected.is_some() { Verdict::Fail } else { Verdict::BoundedPass },
            )
            .witness(&[
                ("I", ideal.to_string()),
                ("f", qb.fmt_elem(&fq)),
                ("g", qb.fmt_elem(&gq)),
            ])
            .note(format!("R/I = {} of order {}", q.ring.label(), q.ring.order()));
            let mut result = base.scans(gscans).witness(&[
                ("I", ideal.to_string()),
                ("f", lab.fmt(f)),
                ("g", lab.fmt(g)),
            ]);
            if projected.is_none() {
                result.verdict = Verdict::Fail;
                result = result.note("images of the Gaussian witness are not an Armendariz failure mod c(fg)");
            } else {
                result = result.note("not Gaussian, and B/IB is not Armendariz for I = c(fg)");
            }
            if let Ok(qlab) = Lab::new(q.ring.clone(), lab.monoid().clone(), &quotient_bounds) {
                let scan = armendariz_check(&qlab);
                detail = detail.note(format!("scan of (R/I)[S]: {}", scan.verdict.as_str()));
                result = result.detail(scan);
            }
            result.details.insert(0, detail);
            result
        }
        None => {
            let ideals = match enumerate_ideals(ring, lab.bounds.gen_cap) {
                Ok(v) => v,
                Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
            };
            let mut result = base.scans(gscans);
            for ideal in ideals.iter().filter(|i| i.is_proper()) {
                let q = match ring.quotient(ideal) {
                    Ok(q) => q,
                    Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
                };
                let qlab = match Lab::new(q.ring.clone(), lab.monoid().clone(), &quotient_bounds) {
                    Ok(l) => l,
                    Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
                };
                let mut scan = armendariz_check(&qlab);
                result.scans += scan.scans;
                scan.name = format!("armendariz mod {ideal}");
                if scan.verdict == Verdict::Fail {
                    let mut w = vec![("I", ideal.to_string())];
                    w.push(("f", scan.witness_value("f").unwrap_or_default().to_string()));
                    w.push(("g", scan.witness_value("g").unwrap_or_default().to_string()));
                    result.verdict = Verdict::Fail;
                    result = result.witness(&w).note("Gaussian on the scan, but a quotient is not Armendariz");
                    result.details.push(scan);
                    return result;
                }
                result.details.push(scan);
            }
            result.note(format!(
                "Gaussian on the scan and Armendariz modulo all {} enumerated proper ideals",
                ideals.iter().filter(|i| i.is_proper()).count()
            ))
        }
    }
}

/// Re-evaluates the defining predicate on a stored witness; `true` means
/// the failure reproduces.
pub fn recheck(lab: &Lab, result: &CheckResult) -> Result<bool> {
    let get = |name: &str| -> Result<MrElem> {
        let text = result.witness_value(name).ok_or_else(|| {
            Error::PreconditionViolated(format!("witness has no '{name}' entry"))
        })?;
        lab.b.parse(text)
    };
    let pred: Option<PairPredicate> = match result.name.as_str() {
        "gaussian" => Some(gaussian_violation),
        "armendariz" => Some(armendariz_violation),
        "weak_content" => Some(weak_content_violation),
        "unit_content" => Some(unit_content_violation),
        _ => None,
    };
    if let Some(pred) = pred {
        return Ok(pred(&lab.b, &get("f")?, &get("g")?).is_some());
    }
    match result.name.as_str() {
        "mccoy" => {
            let g = get("g")?;
            let scalar = lab.scalar_killer(&g);
            match get("killed_by") {
                Ok(h) => Ok(!h.is_zero() && lab.b.mul(&g, &h).is_zero() && scalar.is_none()),
                Err(_) => Ok(scalar.is_some() && lab.bounded_killer(&g).is_none()),
            }
        }
        "dm_bound" => {
            let (f, g) = (get("f")?, get("g")?);
            match dm_exponent(&lab.b, &f, &g) {
                Ok(n) => Ok(n as usize > g.support_len() + 1),
                Err(Error::CapExceeded { .. }) => Ok(true),
                Err(e) => Err(e),
            }
        }
        other => crate::spectra::recheck(lab, other, result),
    }
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::finring::FiniteRing;
    use crate::monoids::Monoid;

    fn lab(ring: FiniteRing, monoid: Monoid) -> Lab {
        Lab::new(Arc::new(ring), Arc::new(monoid), &Bounds::default()).unwrap()
    }

    #[test]
    fn dm_examples() {
        let l = lab(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        let f = l.b.parse("1 + X").unwrap();
        let g = l.b.parse("2 + 3X^2").unwrap();
        assert_eq!(dm_exponent(&l.b, &f, &g).unwrap(), 1);
        let h = l.b.parse("2 + 2X").unwrap();
        assert_eq!(dm_exponent(&l.b, &h, &h).unwrap(), 1);
        let t = lab(FiniteRing::trunc_poly(2, 2, 3).unwrap(), Monoid::free(1));
        let f = t.b.parse("a + bX").unwrap();
        let g = t.b.parse("b + aX").unwrap();
        assert_eq!(dm_exponent(&t.b, &f, &g).unwrap(), 2);
    }

    #[test]
    fn constructions() {
        let l = lab(FiniteRing::zmod(4).unwrap(), Monoid::trunc_add(2).unwrap());
        let (f, g) = counterexample_noncancellative(&l.b).unwrap();
        assert_eq!(l.fmt(&f), "X^2");
        assert_eq!(l.fmt(&g), "X^1 + 3*X^2");
        assert!(matches!(counterexample_torsion(&l.b), Err(Error::PreconditionViolated(_))));

        let z2 = lab(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap());
        let (f, g) = counterexample_torsion(&z2.b).unwrap();
        assert_eq!(z2.fmt(&f), "1 + X^1");
        assert_eq!(z2.fmt(&g), "1 + X^1");
        let z3 = lab(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![3]).unwrap());
        let (_, g) = counterexample_torsion(&z3.b).unwrap();
        assert_eq!(g.support_len(), 3);
        let n = lab(FiniteRing::zmod(2).unwrap(), Monoid::free(1));
        assert!(counterexample_noncancellative(&n.b).is_err());
        assert!(counterexample_torsion(&n.b).is_err());
    }

    #[test]
    fn failing_cells_report_structural_witnesses() {
        let l = lab(FiniteRing::zmod(4).unwrap(), Monoid::trunc_add(2).unwrap());
        let u = unit_content_check(&l);
        assert_eq!(u.verdict, Verdict::Fail);
        assert_eq!(u.witness_value("f"), Some("X^2"));
        assert_eq!(u.witness_value("g"), Some("X^1 + 3*X^2"));
        let m = mccoy_check(&l);
        assert_eq!(m.witness_value("g"), Some("X^1 + 3*X^2"));
        assert!(recheck(&l, &u).unwrap() && recheck(&l, &m).unwrap());

        let z2 = lab(FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap());
        let m = mccoy_check(&z2);
        assert_eq!(m.verdict, Verdict::Fail);
        assert_eq!(m.witness_value("g"), Some("1 + X^1"));
        let u = unit_content_check(&z2);
        assert_eq!(u.witness_value("f"), Some("1 + X^1"));
        assert_eq!(u.witness_value("g"), Some("1 + X^1"));
        assert_eq!(weak_content_check(&z2).verdict, Verdict::Fail);
    }

    #[test]
    fn battery_agrees() {
        for (ring, monoid) in [
            (FiniteRing::zmod(6).unwrap(), Monoid::free(1)),
            (FiniteRing::zmod(2).unwrap(), Monoid::group(0, vec![2]).unwrap()),
            (FiniteRing::zmod(4).unwrap(), Monoid::trunc_add(2).unwrap()),
        ] {
            let l = lab(ring, monoid);
            let r = theorem13_battery(&l);
            assert_ne!(r.verdict, Verdict::Fail, "{}: {r:?}", l.label());
        }
    }

    #[test]
    fn gaussian_and_armendariz() {
        let z4 = lab(FiniteRing::zmod(4).unwrap(), Monoid::free(1));
        assert_eq!(gaussian_check(&z4).verdict, Verdict::BoundedPass);
        assert_eq!(armendariz_check(&z4).verdict, Verdict::BoundedPass);
        let z6 = lab(FiniteRing::zmod(6).unwrap(), Monoid::free(1));
        assert_eq!(armendariz_check(&z6).verdict, Verdict::BoundedPass);
        let t = lab(FiniteRing::trunc_poly(2, 2, 3).unwrap(), Monoid::free(1));
        let g = gaussian_check(&t);
        assert_eq!(g.verdict, Verdict::Fail);
        assert_eq!(g.witness_value("f"), Some("a + b*X^1"));
        assert_eq!(g.witness_value("g"), Some("b + a*X^1"));
        assert_eq!(g.witness_value("c(fg)"), Some("(ab, a^2+b^2)"));
        assert!(recheck(&t, &g).unwrap());
        let q = gaussian_quotient_equivalence(&t);
        assert_eq!(q.verdict, Verdict::BoundedPass);
        assert_eq!(q.details[0].verdict, Verdict::Fail);
        assert_eq!(q.details[0].witness_value("f"), Some("a + b*X^1"));
    }
}
