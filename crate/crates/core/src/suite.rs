//! Check registry: names, monoid requirements, and dispatch for one
//! instance `(R, S, bounds)`.

use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::check::{CheckResult, Verdict};
use crate::contentlab;
use crate::error::{Error, Result};
use crate::finring::FiniteRing;
use crate::ideals::{associated_primes, has_property_a, spectrum, very_few_zero_divisors};
use crate::lab::{Killer, Lab};
use crate::localize;
use crate::modlab;
use crate::monoids::Monoid;
use crate::spectra;
use crate::universe::Bounds;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckInfo {
    pub name: &'static str,
    pub needs_monoid: bool,
    pub summary: &'static str,
}

const fn ring(name: &'static str, summary: &'static str) -> CheckInfo {
    CheckInfo { name, needs_monoid: false, summary }
}

const fn alg(name: &'static str, summary: &'static str) -> CheckInfo {
    CheckInfo { name, needs_monoid: true, summary }
}

pub const CHECKS: &[CheckInfo] = &[
    ring("spectrum", "prime spectrum, idempotent lifting against primality scan"),
    ring("property_a", "ideals inside Z(R) have nonzero annihilator"),
    ring("vfzd", "Z(R) is a finite union of associated primes"),
    ring("nakayama", "IM != M for I inside Jac(R), M = R^k"),
    ring("intersection_law", "(meet I)M = meet (IM), and x in c(x)M"),
    ring("scalar_content", "r c(x) = c(rx) on R^k"),
    ring("submodule_transfer", "pM prime/primary iff p prime/primary"),
    alg("content_axioms", "c(fg) in c(f)c(g), c(rf) = r c(f), c(f+g) in c(f)+c(g), product laws"),
    alg("zd_routes", "scalar and bounded zero-divisor routes agree"),
    alg("regular_equiv", "f regular iff c(f) not inside Z(R)"),
    alg("theorem13_battery", "unit content, McCoy and weak content against structural flags"),
    alg("unit_content", "c(f) = c(g) = R implies c(fg) = R"),
    alg("mccoy", "zero-divisors of B are killed by a nonzero scalar"),
    alg("weak_content", "c(f)c(g) inside rad c(fg)"),
    alg("dm_bound", "Dedekind-Mertens exponent at most |supp g| + 1"),
    alg("gaussian", "c(fg) = c(f)c(g)"),
    alg("armendariz", "fg = 0 implies c(f)c(g) = 0"),
    alg("gaussian_quotient", "Gaussian iff B/IB Armendariz for every I"),
    alg("extension_contraction", "pB contracts to p"),
    alg("prime_extension", "pB is prime"),
    alg("min_bijection", "Min(R) -> Min(B), p -> pB"),
    alg("ass_extension", "x f = 0 iff c(f) inside Ann(x)"),
    alg("primary_extension", "qB is primary for primary q"),
    alg("nil_extension", "Nil(B) = Nil(R)B"),
    alg("domainlike_transfer", "R domainlike iff B domainlike"),
    alg("vfzd_transfer", "Z(B) = union of p_i B"),
    alg("cyclic_gaussian", "module Gaussian law over chain rings"),
    alg("module_vfzd", "Z(M[S]) = union of p_i B for M = R^k"),
    alg("dm_module_bound", "module Dedekind-Mertens exponent bound"),
    alg("fraction_laws", "fraction equality is a congruence"),
    alg("max_correspondence", "Max(R) -> Max(R')"),
    alg("jac_correspondence", "Jac(R') = Jac(R)R'"),
    alg("unit_correspondence", "U(R') = fractions with unit-content numerator"),
    alg("presimplifiable_transfer", "R' presimplifiable iff R is"),
    alg("idempotent_coincidence", "idempotents of R' are those of R"),
    alg("valuation_transfer", "R' is a valuation ring when R is"),
];

pub fn lookup(name: &str) -> Option<&'static CheckInfo> {
    CHECKS.iter().find(|c| c.name == name)
}

/// Expands `"all"` and validates names. Without a monoid, `"all"` means the
/// ring-level checks only.
pub fn expand(names: &[String], has_monoid: bool) -> Result<Vec<&'static str>> {
    let mut out = Vec::new();
    for n in names {
        if n == "all" {
            out.extend(CHECKS.iter().filter(|c| has_monoid || !c.needs_monoid).map(|c| c.name));
            continue;
        }
        let info = lookup(n).ok_or_else(|| Error::UnknownCheck(n.clone()))?;
        if info.needs_monoid && !has_monoid {
            return Err(Error::PreconditionViolated(format!("check '{n}' requires a monoid")));
        }
        out.push(info.name);
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|n| seen.insert(*n));
    Ok(out)
}

pub const DEFAULT_MODULE_RANKS: [usize; 2] = [1, 2];
pub const DEFAULT_VALUATION_SAMPLES: usize = 1000;

pub struct Instance {
    pub ring: Arc<FiniteRing>,
    pub bounds: Bounds,
    pub module_ranks: Vec<usize>,
    pub valuation_samples: usize,
    pub lab: Option<Lab>,
}

impl Instance {
    pub fn new(ring: Arc<FiniteRing>, monoid: Option<Arc<Monoid>>, bounds: &Bounds) -> Result<Instance> {
        let bounds = bounds.resolve(&ring)?;
        let lab = monoid.map(|m| Lab::new(ring.clone(), m, &bounds)).transpose()?;
        Ok(Instance {
            ring,
            bounds,
            module_ranks: DEFAULT_MODULE_RANKS.to_vec(),
            valuation_samples: DEFAULT_VALUATION_SAMPLES,
            lab,
        })
    }

    fn lab(&self, name: &str) -> Result<&Lab> {
        self.lab
            .as_ref()
            .ok_or_else(|| Error::PreconditionViolated(format!("check '{name}' requires a monoid")))
    }

    pub fn label(&self) -> String {
        match &self.lab {
            Some(l) => l.label(),
            None => self.ring.label().to_string(),
        }
    }

    /// Runs one check. A failure whose witness no longer refutes the
    /// property on re-evaluation is a cross-validation mismatch.
    pub fn run(&self, name: &str) -> Result<CheckResult> {
        let info = lookup(name).ok_or_else(|| Error::UnknownCheck(name.to_string()))?;
        let result = if info.needs_monoid {
            self.run_algebra(name, self.lab(name)?)?
        } else {
            self.run_ring(name)?
        };
        if result.verdict == Verdict::Fail && result.witness.is_some() {
            if let Some(lab) = &self.lab {
                if let Ok(false) = contentlab::recheck(lab, &result) {
                    return Err(Error::CrossValidationMismatch(format!(
                        "{name}: reported witness does not refute the property"
                    )));
                }
            }
        }
        Ok(result)
    }

    fn per_rank(&self, name: &str, f: impl Fn(usize) -> CheckResult) -> CheckResult {
        let details: Vec<CheckResult> = self.module_ranks.iter().map(|&k| f(k)).collect();
        rollup(name, details).with_bounds(&self.bounds)
    }

    fn run_ring(&self, name: &str) -> Result<CheckResult> {
        let ring = &self.ring;
        let b = &self.bounds;
        Ok(match name {
            "spectrum" => spectrum_check(ring)?,
            "property_a" => property_a_check(ring, b)?,
            "vfzd" => vfzd_check(ring),
            "nakayama" => self.per_rank(name, |k| modlab::nakayama_check(ring, k, b)),
            "intersection_law" => self.per_rank(name, |k| modlab::intersection_law_check(ring, k, b)),
            "scalar_content" => self.per_rank(name, |k| modlab::scalar_content_check(ring, k, b)),
            "submodule_transfer" => self.per_rank(name, |k| modlab::submodule_transfer_check(ring, k, b)),
            _ => return Err(Error::UnknownCheck(name.to_string())),
        })
    }

    fn run_algebra(&self, name: &str, lab: &Lab) -> Result<CheckResult> {
        Ok(match name {
            "content_axioms" => content_axioms_check(lab),
            "zd_routes" => zd_routes_check(lab),
            "regular_equiv" => spectra::regular_equiv_check(lab),
            "theorem13_battery" => contentlab::theorem13_battery(lab),
            "unit_content" => contentlab::unit_content_check(lab),
            "mccoy" => contentlab::mccoy_check(lab),
            "weak_content" => contentlab::weak_content_check(lab),
            "dm_bound" => contentlab::dm_bound_check(lab),
            "gaussian" => contentlab::gaussian_check(lab),
            "armendariz" => contentlab::armendariz_check(lab),
            "gaussian_quotient" => contentlab::gaussian_quotient_equivalence(lab),
            "extension_contraction" => spectra::extension_contractions(lab),
            "prime_extension" => spectra::prime_extensions(lab),
            "min_bijection" => spectra::min_bijection_check(lab),
            "ass_extension" => spectra::ass_extension_check(lab),
            "primary_extension" => spectra::primary_extension_check(lab),
            "nil_extension" => spectra::nil_extension_check(lab),
            "domainlike_transfer" => spectra::domainlike_transfer_check(lab),
            "vfzd_transfer" => spectra::vfzd_transfer_check(lab),
            "cyclic_gaussian" => modlab::cyclic_gaussian_check(lab),
            "module_vfzd" => self.per_rank(name, |k| modlab::module_vfzd_check(lab, k)),
            "dm_module_bound" => self.per_rank(name, |k| modlab::dm_module_bound_check(lab, k)),
            "fraction_laws" => localize::fraction_laws_check(lab),
            "max_correspondence" => localize::max_correspondence_check(lab),
            "jac_correspondence" => localize::jac_correspondence_check(lab),
            "unit_correspondence" => localize::unit_correspondence_check(lab),
            "presimplifiable_transfer" => localize::presimplifiable_transfer_check(lab),
            "idempotent_coincidence" => localize::idempotent_coincidence_check(lab),
            "valuation_transfer" => localize::valuation_transfer_check(lab, self.valuation_samples),
            _ => return Err(Error::UnknownCheck(name.to_string())),
        })
    }
}

/// Worst verdict of the parts: any failure fails, any bounded pass makes
/// the whole bounded, and all-skipped stays skipped.
pub fn rollup(name: &str, details: Vec<CheckResult>) -> CheckResult {
    let vs: Vec<Verdict> = details.iter().map(|d| d.verdict).collect();
    let verdict = if vs.contains(&Verdict::Fail) {
        Verdict::Fail
    } else if vs.contains(&Verdict::PreconditionViolated) {
        Verdict::PreconditionViolated
    } else if vs.contains(&Verdict::Inconclusive) {
        Verdict::Inconclusive
    } else if !vs.is_empty() && vs.iter().all(|v| *v == Verdict::Skipped) {
        Verdict::Skipped
    } else if vs.contains(&Verdict::BoundedPass) {
        Verdict::BoundedPass
    } else {
        Verdict::Pass
    };
    let mut r = CheckResult::new(name, verdict);
    r.scans = details.iter().map(|d| d.scans).sum();
    r.witness = details.iter().find(|d| d.verdict == Verdict::Fail).and_then(|d| d.witness.clone());
    r.details = details;
    r
}

/// The spectrum, which is cross-validated on construction.
pub fn spectrum_check(ring: &Arc<FiniteRing>) -> Result<CheckResult> {
    let primes = spectrum(ring)?;
    let list: Vec<String> = primes.iter().map(|p| p.to_string()).collect();
    let min = crate::ideals::minimal_primes(&primes);
    let min: Vec<String> = min.iter().map(|p| p.to_string()).collect();
    let ass: Vec<String> = associated_primes(ring).iter().map(|p| p.to_string()).collect();
    Ok(CheckResult::new("spectrum", Verdict::Pass)
        .scans(ring.order() as u64)
        .witness(&[
            ("spectrum", format!("{{{}}}", list.join(", "))),
            ("min", format!("{{{}}}", min.join(", "))),
            ("ass", format!("{{{}}}", ass.join(", "))),
        ])
        .note(if ring.order() <= 64 {
            "idempotent lifting agrees with the primality scan over enumerated ideals"
        } else {
            "idempotent lifting only; the primality scan runs up to order 64"
        }))
}

pub fn property_a_check(ring: &Arc<FiniteRing>, bounds: &Bounds) -> Result<CheckResult> {
    let a = has_property_a(ring, bounds.gen_cap)?;
    let mut r = CheckResult::new("property_a", if a.holds { Verdict::Pass } else { Verdict::Fail })
        .with_bounds(bounds)
        .note(format!("ideals enumerated with up to {} generators", a.gen_cap));
    if let Some(i) = a.witness {
        r = r.witness(&[("ideal", i.to_string())]);
    }
    Ok(r)
}

/// Finite rings are Noetherian, so the cover must exist and consist of
/// associated primes.
pub fn vfzd_check(ring: &Arc<FiniteRing>) -> CheckResult {
    let v = very_few_zero_divisors(ring);
    let ass = associated_primes(ring);
    let cover: Vec<String> = v.cover.iter().map(|p| p.to_string()).collect();
    let ok = v.holds && v.cover.iter().all(|p| ass.contains(p));
    CheckResult::new("vfzd", if ok { Verdict::Pass } else { Verdict::Fail })
        .scans(ring.order() as u64)
        .witness(&[("cover", format!("{{{}}}", cover.join(", ")))])
}

/// On cancellative torsion-free `S` the McCoy route and the bounded search
/// must agree. Elsewhere the bounded route is authoritative and
/// disagreements are listed, not failed.
pub fn zd_routes_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "zd_routes";
    let ct = lab.monoid().is_ct();
    let mut scans = 0;
    let mut disagreements = 0u64;
    let mut first = None;
    for f in lab.elems() {
        scans += 1;
        let scalar = lab.scalar_killer(f);
        let bounded = lab.bounded_killer(f);
        if scalar.is_some() != bounded.is_some() {
            disagreements += 1;
            if first.is_none() {
                first = Some((f, scalar, bounded));
            }
            if ct {
                break;
            }
        }
    }
    let verdict = match (ct, disagreements) {
        (true, 0) => Verdict::BoundedPass,
        (true, _) => Verdict::Fail,
        (false, _) => Verdict::BoundedPass,
    };
    let mut r = CheckResult::new(NAME, verdict)
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans);
    if !ct {
        r = r.note(format!(
            "{} is not cancellative and torsion-free: the scalar route is unsound here; {disagreements} disagreements",
            lab.monoid()
        ));
    }
    if let Some((f, s, b)) = first {
        let fmt = |k: Option<Killer>| k.map(|k| lab.fmt_killer(&k)).unwrap_or_else(|| "none".into());
        let entries = [
            ("f", lab.fmt(f)),
            ("scalar_route", fmt(s.map(Killer::Scalar))),
            ("bounded_route", fmt(b.map(Killer::Element))),
        ];
        if ct {
            r = r.witness(&entries);
        } else {
            r = r.note(format!("first disagreement: f = {}, scalar {}, bounded {}", entries[0].1, entries[1].1, entries[2].1));
        }
    }
    r
}

/// Content-algebra axioms and product laws on the universe.
pub fn content_axioms_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "content_axioms";
    const SUB: usize = 128;
    let b = &lab.b;
    let ring = lab.ring();
    let pt = lab.pairs();
    let mut cache = pt.cache.clone();
    let n = lab.universe.len();
    let elems = lab.elems();
    let mut scans = 0;
    let mut problem: Option<(String, Vec<(&str, String)>)> = None;

    'pairs: for i in 0..n {
        for j in i..n {
            scans += 1;
            let prod = cache.product(pt.content[i], pt.content[j]);
            if !cache.is_subset(pt.product(i, j), prod) {
                problem = Some(("c(fg) not inside c(f)c(g)".into(), vec![("f", lab.fmt(&elems[i])), ("g", lab.fmt(&elems[j]))]));
                break 'pairs;
            }
        }
    }
    if problem.is_none() {
        'scalar: for (i, f) in elems.iter().enumerate() {
            for r in ring.elements() {
                scans += 1;
                let lhs = cache.content(&b.scale(r, f));
                let pr = cache.principal(r);
                let rhs = cache.product(pr, pt.content[i]);
                // r·c(f) as a set equals (r)c(f)
                if lhs != rhs {
                    problem = Some(("c(rf) != r c(f)".into(), vec![("r", ring.fmt_elem(r)), ("f", lab.fmt(f))]));
                    break 'scalar;
                }
            }
        }
    }
    let m = n.min(SUB);
    if problem.is_none() {
        'sum: for i in 0..m {
            for j in 0..m {
                scans += 1;
                let s = cache.content(&b.add(&elems[i], &elems[j]));
                let bound = cache.sum(pt.content[i], pt.content[j]);
                let (f, g) = (&elems[i], &elems[j]);
                if !cache.is_subset(s, bound) {
                    problem = Some(("c(f+g) not inside c(f)+c(g)".into(), vec![("f", lab.fmt(f)), ("g", lab.fmt(g))]));
                    break 'sum;
                }
                if b.mul(f, g) != b.mul(g, f) {
                    problem = Some(("fg != gf".into(), vec![("f", lab.fmt(f)), ("g", lab.fmt(g))]));
                    break 'sum;
                }
            }
        }
    }
    let t = n.min(24);
    if problem.is_none() {
        'assoc: for i in 0..t {
            for j in 0..t {
                let fg = b.mul(&elems[i], &elems[j]);
                for k in 0..t {
                    scans += 1;
                    let lhs = b.mul(&fg, &elems[k]);
                    let rhs = b.mul(&elems[i], &b.mul(&elems[j], &elems[k]));
                    if lhs != rhs {
                        problem = Some((
                            "(fg)h != f(gh)".into(),
                            vec![("f", lab.fmt(&elems[i])), ("g", lab.fmt(&elems[j])), ("h", lab.fmt(&elems[k]))],
                        ));
                        break 'assoc;
                    }
                }
            }
        }
    }
    let mut r = CheckResult::new(NAME, if problem.is_some() { Verdict::Fail } else { Verdict::BoundedPass })
        .with_universe(&lab.bounds, &lab.universe)
        .scans(scans)
        .note(format!(
            "products over all pairs; scalars over all (r, f); sums and commutativity over the first {m}; associativity over the first {t}"
        ));
    if let Some((what, mut w)) = problem {
        w.insert(0, ("law", what));
        r = r.witness(&w);
    }
    r
}
