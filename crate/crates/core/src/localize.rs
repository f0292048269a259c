//! The localization `R' = B_{S'}` at `S' = {g ∈ B : c(g) = R}`.
//!
//! Fractions have no normal form. Equality is cross-multiplication, which is
//! a congruence because members of `S'` are regular when `S` is cancellative
//! and torsion-free. Zero-dimensionality of `R'` is automatic for finite `R`
//! and has no check of its own.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::check::{CheckResult, Verdict};
use crate::error::{Error, Result};
use crate::finring::Elem;
use crate::ideals::{enumerate_ideals, spectrum, Ideal};
use crate::lab::Lab;
use crate::monoidring::{MonoidRing, MrElem};
use crate::spectra::extension_contraction_check;

/// Denominators used by the scans: `1` followed by the first few
/// nonconstant unit-content elements of the universe.
pub const DEN_LIMIT: usize = 4;
/// Nonconstant universe elements used as test multipliers `y`.
pub const Y_LIMIT: usize = 32;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Fraction {
    pub num: MrElem,
    pub den: MrElem,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FracOp {
    Add,
    Mul,
}

impl Fraction {
    pub fn new(b: &MonoidRing, num: MrElem, den: MrElem) -> Result<Fraction> {
        if !b.monoid().is_ct() {
            return Err(Error::PreconditionViolated(format!(
                "{} is not cancellative and torsion-free",
                b.monoid()
            )));
        }
        if !b.has_unit_content(&den) {
            return Err(Error::PreconditionViolated(format!(
                "denominator {} does not have unit content",
                b.fmt_elem(&den)
            )));
        }
        Ok(Fraction { num, den })
    }

    /// `f/1`.
    pub fn whole(b: &MonoidRing, num: MrElem) -> Fraction {
        Fraction { num, den: b.one() }
    }

    pub fn fmt(&self, b: &MonoidRing) -> String {
        let wrap = |f: &MrElem| {
            let s = b.fmt_elem(f);
            if f.support_len() > 1 || s.contains(' ') {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(&self.num), wrap(&self.den))
    }
}

pub fn frac_eq(b: &MonoidRing, x: &Fraction, y: &Fraction) -> bool {
    b.mul(&x.num, &y.den) == b.mul(&y.num, &x.den)
}

pub fn frac_arith(b: &MonoidRing, op: FracOp, x: &Fraction, y: &Fraction) -> Fraction {
    let den = b.mul(&x.den, &y.den);
    let num = match op {
        FracOp::Add => b.add(&b.mul(&x.num, &y.den), &b.mul(&y.num, &x.den)),
        FracOp::Mul => b.mul(&x.num, &y.num),
    };
    Fraction { num, den }
}

pub fn is_unit_frac(b: &MonoidRing, x: &Fraction) -> bool {
    b.has_unit_content(&x.num)
}

/// The scanned fractions: universe numerators over the denominator set.
pub struct FractionBase<'a> {
    pub lab: &'a Lab,
    /// `0` followed by the universe.
    pub nums: Vec<MrElem>,
    pub dens: Vec<MrElem>,
    /// Multipliers for quasi-regularity and non-invertibility: constants,
    /// then the first `Y_LIMIT` nonconstant universe elements, all over 1.
    pub ys: Vec<Fraction>,
}

impl<'a> FractionBase<'a> {
    pub fn new(lab: &'a Lab) -> Result<FractionBase<'a>> {
        let b = &lab.b;
        if !lab.monoid().is_ct() {
            return Err(Error::PreconditionViolated(format!(
                "{} is not cancellative and torsion-free",
                lab.monoid()
            )));
        }
        let mut dens = vec![b.one()];
        dens.extend(
            lab.elems()
                .iter()
                .filter(|f| f.support_len() > 1 && b.has_unit_content(f))
                .take(DEN_LIMIT - 1)
                .cloned(),
        );
        let mut ys: Vec<Fraction> = lab
            .ring()
            .elements()
            .map(|r| Fraction::whole(b, b.constant(r)))
            .collect();
        ys.extend(
            lab.elems()
                .iter()
                .filter(|f| f.support_len() > 1)
                .take(Y_LIMIT)
                .map(|f| Fraction::whole(b, f.clone())),
        );
        let mut nums = vec![b.zero()];
        nums.extend(lab.elems().iter().filter(|f| !f.is_zero()).cloned());
        Ok(FractionBase { lab, nums, dens, ys })
    }

    pub fn b(&self) -> &MonoidRing {
        &self.lab.b
    }

    pub fn len(&self) -> usize {
        self.nums.len() * self.dens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn fractions(&self) -> impl Iterator<Item = Fraction> + '_ {
        self.nums.iter().flat_map(move |f| {
            self.dens.iter().map(move |g| Fraction {
                num: f.clone(),
                den: g.clone(),
            })
        })
    }

    fn describe(&self) -> String {
        let dens: Vec<String> = self.dens.iter().map(|g| self.b().fmt_elem(g)).collect();
        format!(
            "{} fractions: 0 and the universe over denominators {{{}}}; {} multipliers",
            self.len(),
            dens.join(", "),
            self.ys.len()
        )
    }

    fn result(&self, name: &str, failed: bool, scans: u64) -> CheckResult {
        let verdict = if failed { Verdict::Fail } else { Verdict::BoundedPass };
        CheckResult::new(name, verdict)
            .with_universe(&self.lab.bounds, &self.lab.universe)
            .scans(scans)
            .note(self.describe())
    }
}

fn base_or_skip<'a>(name: &str, lab: &'a Lab) -> std::result::Result<FractionBase<'a>, CheckResult> {
    FractionBase::new(lab).map_err(|e| CheckResult::skipped(name, e.to_string()))
}

/// `y* = g/f₁` with `f₁ ≡ f (mod mB)` of unit content, for `c(f) ⊄ m`.
/// Then `1 − (f/g)·y* = (f₁ − f)/f₁` has content inside `m`.
fn non_quasi_regular_partner(b: &MonoidRing, x: &Fraction, m: &Ideal) -> Option<Fraction> {
    let ring = b.ring();
    let (key, a) = x.num.terms().iter().find(|(_, a)| !m.contains(*a))?.clone();
    let t = m
        .elements()
        .iter()
        .map(|t| Elem(t as u32))
        .find(|&t| ring.is_unit(ring.add(a, t)))?;
    let f1 = b.add(&x.num, &b.monomial(t, key));
    Some(Fraction {
        num: x.den.clone(),
        den: f1,
    })
}

fn one_minus(b: &MonoidRing, x: &Fraction, y: &Fraction) -> Fraction {
    let xy = frac_arith(b, FracOp::Mul, x, y);
    Fraction {
        num: b.sub(&xy.den, &xy.num),
        den: xy.den,
    }
}

/// `x ∈ Jac(R)R'` (that is, `c(num) ⊆ Jac(R)`) exactly when `1 − xy` is a
/// unit for every scanned `y`. Multipliers are the constants, a slice of the
/// universe, and for `x ∉ Jac(R)R'` the constructed partner `y*`.
pub fn jac_correspondence_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "jac_correspondence";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let b = base.b();
    let jac = lab.ring().jacobson();
    let max = spectrum(lab.ring()).unwrap_or_default();
    let mut scans = 0;
    let mut bad = None;
    'scan: for x in base.fractions() {
        let in_jac = b.in_extension(&x.num, &jac);
        let mut ys: Vec<Fraction> = Vec::new();
        if !in_jac {
            ys.extend(max.iter().filter_map(|m| non_quasi_regular_partner(b, &x, m)));
        }
        let mut quasi = true;
        for y in ys.iter().chain(&base.ys) {
            scans += 1;
            if !is_unit_frac(b, &one_minus(b, &x, y)) {
                quasi = false;
                break;
            }
        }
        if in_jac != quasi {
            bad = Some((x, in_jac));
            break 'scan;
        }
    }
    let mut r = base.result(NAME, bad.is_some(), scans).note(format!("Jac(R) = {jac}"));
    if let Some((x, in_jac)) = bad {
        r = r.witness(&[
            ("x", x.fmt(b)),
            ("in_jac_extension", in_jac.to_string()),
            ("quasi_regular", (!in_jac).to_string()),
        ]);
    }
    r
}

/// Non-units of `R'` lie in `mR'` for some `m ∈ Max(R)`, and distinct
/// maximal ideals give distinct extensions.
pub fn max_correspondence_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "max_correspondence";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let b = base.b();
    let max = match spectrum(lab.ring()) {
        Ok(m) => m,
        Err(e) => return CheckResult::new(NAME, Verdict::Fail).note(e.to_string()),
    };
    let mut scans = 0;
    let mut landing = vec![0u64; max.len()];
    let mut bad = None;
    for x in base.fractions() {
        scans += 1;
        if is_unit_frac(b, &x) {
            continue;
        }
        match max.iter().position(|m| b.in_extension(&x.num, m)) {
            Some(i) => landing[i] += 1,
            None => {
                bad = Some(x);
                break;
            }
        }
    }
    let mut r = base.result(NAME, bad.is_some(), scans);
    for (m, n) in max.iter().zip(&landing) {
        r.notes.push(format!("{n} non-units land first in {m}R'"));
    }
    if let Some(x) = bad {
        r = r.witness(&[("x", x.fmt(b)), ("problem", "non-unit outside every mR'".into())]);
    }
    let mut separated = CheckResult::new("separation", Verdict::Pass);
    for (i, m) in max.iter().enumerate() {
        let ec = extension_contraction_check(lab, m);
        if ec.verdict == Verdict::Fail {
            separated = ec;
            break;
        }
        if max[..i].contains(m) {
            separated = CheckResult::new("separation", Verdict::Fail).witness(&[("m", m.to_string())]);
            break;
        }
    }
    if separated.verdict == Verdict::Fail {
        r.verdict = Verdict::Fail;
        if r.witness.is_none() {
            r.witness = separated.witness.clone();
        }
    }
    r.detail(separated)
}

/// `U(R') = {f/g : c(f) = R}`: unit fractions are inverted by `g/f`, and no
/// scanned multiplier inverts the others.
pub fn unit_correspondence_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "unit_correspondence";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let b = base.b();
    let one = Fraction::whole(b, b.one());
    let mut scans = 0;
    let mut bad = None;
    for x in base.fractions() {
        if is_unit_frac(b, &x) {
            scans += 1;
            let inv = Fraction {
                num: x.den.clone(),
                den: x.num.clone(),
            };
            if !frac_eq(b, &frac_arith(b, FracOp::Mul, &x, &inv), &one) {
                bad = Some((x, "g/f is not an inverse"));
                break;
            }
        } else {
            let inverted = base.ys.iter().any(|y| {
                scans += 1;
                frac_eq(b, &frac_arith(b, FracOp::Mul, &x, y), &one)
            });
            if inverted {
                bad = Some((x, "non-unit content but invertible"));
                break;
            }
        }
    }
    let mut r = base.result(NAME, bad.is_some(), scans);
    if let Some((x, problem)) = bad {
        r = r.witness(&[("x", x.fmt(b)), ("problem", problem.into())]);
    }
    r
}

/// `Z(R) ⊆ Jac(R)` against the same statement for scanned fractions.
pub fn presimplifiable_transfer_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "presimplifiable_transfer";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let b = base.b();
    let ring = lab.ring();
    let jac = ring.jacobson();
    let ps_r = ring.zero_divisor_set().is_subset(jac.elements());
    let mut scans = 0;
    let mut counter = None;
    for x in base.fractions() {
        scans += 1;
        if lab.is_zero_divisor(&x.num).is_zero_divisor() && !b.in_extension(&x.num, &jac) {
            counter = Some(x);
            break;
        }
    }
    let ps_rp = counter.is_none();
    let mut r = base
        .result(NAME, ps_r != ps_rp, scans)
        .note(format!("R presimplifiable: {ps_r}; R' presimplifiable on the scan: {ps_rp}"));
    if let Some(x) = &counter {
        r = r.note(format!("zero-divisor outside Jac(R)R': {}", x.fmt(b)));
    }
    if ps_r != ps_rp {
        r = r.witness(&[
            ("R_presimplifiable", ps_r.to_string()),
            ("Rp_presimplifiable", ps_rp.to_string()),
        ]);
    }
    r
}

/// Ideals of `R` totally ordered by inclusion.
pub fn is_chain_ring(lab: &Lab) -> Result<Option<(Ideal, Ideal)>> {
    let ideals = enumerate_ideals(lab.ring(), lab.bounds.gen_cap)?;
    for (i, a) in ideals.iter().enumerate() {
        for c in &ideals[i + 1..] {
            if !a.is_subset(c) && !c.is_subset(a) {
                return Ok(Some((a.clone(), c.clone())));
            }
        }
    }
    Ok(None)
}

fn require_chain(name: &str, lab: &Lab, verdict: Verdict) -> Option<CheckResult> {
    match is_chain_ring(lab) {
        Ok(None) => None,
        Ok(Some((a, c))) => Some(
            CheckResult::new(name, verdict).note(format!("{} is not a chain ring: {a} and {c} are incomparable", lab.ring())),
        ),
        Err(e) => Some(CheckResult::new(name, Verdict::Fail).note(e.to_string())),
    }
}

/// Idempotent scanned fractions (`f²g = fg²`) are exactly the `e/1` with
/// `e² = e` in `R`. The distinct classes found are listed in the witness.
pub fn idempotent_coincidence_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "idempotent_coincidence";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    if let Some(r) = require_chain(NAME, lab, Verdict::Skipped) {
        return r;
    }
    let b = base.b();
    let ring = lab.ring();
    let idem: Vec<Elem> = ring.idempotents().iter().map(|e| Elem(e as u32)).collect();
    let mut found = vec![false; idem.len()];
    let mut scans = 0;
    let mut bad = None;
    for x in base.fractions() {
        scans += 1;
        let f2g = b.mul(&b.mul(&x.num, &x.num), &x.den);
        let fg2 = b.mul(&b.mul(&x.num, &x.den), &x.den);
        if f2g != fg2 {
            continue;
        }
        let hit = idem
            .iter()
            .position(|&e| frac_eq(b, &x, &Fraction::whole(b, b.constant(e))));
        match hit {
            Some(i) => found[i] = true,
            None => {
                bad = Some(x);
                break;
            }
        }
    }
    let solutions: Vec<String> = idem
        .iter()
        .zip(&found)
        .filter(|(_, &f)| f)
        .map(|(&e, _)| format!("{}/1", ring.fmt_elem(e)))
        .collect();
    let mut r = base.result(NAME, bad.is_some(), scans);
    let mut w = vec![("solutions", format!("{{{}}}", solutions.join(", ")))];
    if let Some(x) = bad {
        w.push(("x", x.fmt(b)));
    }
    r = r.witness(&w);
    r
}

/// `a | b` or `b | a` for all `a, b ∈ R`.
pub fn divisibility_is_total(ring: &crate::finring::FiniteRing) -> Option<(Elem, Elem)> {
    let divides = |a: Elem, c: Elem| ring.elements().any(|t| ring.mul(a, t) == c);
    for a in ring.elements() {
        for c in ring.elements().filter(|c| c.0 > a.0) {
            if !divides(a, c) && !divides(c, a) {
                return Some((a, c));
            }
        }
    }
    None
}

/// `f = r·f₁` with `(r) = c(f)` and `c(f₁) = R`, for chain rings.
pub fn factor_content(b: &MonoidRing, f: &MrElem) -> Option<(Elem, MrElem)> {
    let ring = b.ring();
    if f.is_zero() {
        return Some((ring.zero(), b.one()));
    }
    let c = b.content(f);
    let r = f
        .coeffs()
        .find(|&a| Ideal::generate(ring, &[a]) == c)?;
    let mut terms = Vec::with_capacity(f.support_len());
    for (k, a) in f.terms() {
        let u = if *a == r {
            ring.one()
        } else {
            ring.elements().find(|&u| ring.mul(r, u) == *a)?
        };
        terms.push((k.clone(), u));
    }
    let f1 = b.element(terms).ok()?;
    b.has_unit_content(&f1).then_some((r, f1))
}

/// Over a valuation ring, for seeded pairs `(x, y)` of scanned fractions,
/// one divides the other. The quotient `h` is built from the factorizations
/// `x = r·(unit)`, `y = r'·(unit)` and checked by cross-multiplication.
pub fn valuation_transfer_check(lab: &Lab, samples: usize) -> CheckResult {
    const NAME: &str = "valuation_transfer";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let ring = lab.ring();
    if let Some((a, c)) = divisibility_is_total(ring) {
        return CheckResult::new(NAME, Verdict::PreconditionViolated).note(format!(
            "{ring} is not a valuation ring: {} and {} do not divide each other",
            ring.fmt_elem(a),
            ring.fmt_elem(c)
        ));
    }
    let b = base.b();
    let fracs: Vec<Fraction> = base.fractions().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(lab.bounds.seed);
    let mut bad = None;
    let mut scans = 0;
    for _ in 0..samples {
        let x = &fracs[rng.gen_range(0..fracs.len())];
        let y = &fracs[rng.gen_range(0..fracs.len())];
        scans += 1;
        if divide(b, x, y).or_else(|| divide(b, y, x)).is_none() {
            bad = Some((x.clone(), y.clone()));
            break;
        }
    }
    let mut r = base
        .result(NAME, bad.is_some(), scans)
        .note(format!("{samples} seeded pairs; quotients are constructed, not drawn from the universe"));
    r.seed = Some(lab.bounds.seed);
    if let Some((x, y)) = bad {
        r = r.witness(&[("x", x.fmt(b)), ("y", y.fmt(b))]);
    }
    r
}

/// `h` with `y = h·x`, when `c(num x)` divides `c(num y)`.
pub fn divide(b: &MonoidRing, x: &Fraction, y: &Fraction) -> Option<Fraction> {
    let ring = b.ring();
    let (r, f1) = factor_content(b, &x.num)?;
    let (r2, f2) = factor_content(b, &y.num)?;
    let s = ring.elements().find(|&s| ring.mul(r, s) == r2)?;
    // y = r s f₂/g₂ = x · (s f₂ g₁)/(g₂ f₁)
    let h = Fraction {
        num: b.scale(s, &b.mul(&f2, &x.den)),
        den: b.mul(&y.den, &f1),
    };
    frac_eq(b, &frac_arith(b, FracOp::Mul, &h, x), y).then_some(h)
}

/// Cross-multiplication is an equivalence compatible with the arithmetic,
/// on a block of fractions padded with rescaled copies `fk/gk`.
pub fn fraction_laws_check(lab: &Lab) -> CheckResult {
    const NAME: &str = "fraction_laws";
    let base = match base_or_skip(NAME, lab) {
        Ok(b) => b,
        Err(r) => return r,
    };
    let b = base.b();
    let mut block: Vec<Fraction> = base.fractions().step_by(7).take(24).collect();
    let rescaled: Vec<Fraction> = block
        .iter()
        .take(12)
        .flat_map(|x| {
            base.dens[1..].iter().map(move |k| Fraction {
                num: b.mul(&x.num, k),
                den: b.mul(&x.den, k),
            })
        })
        .collect();
    block.extend(rescaled);
    let n = block.len();
    let mut problem = None;
    if let Some(g) = base.dens.iter().find(|g| lab.is_zero_divisor(g).is_zero_divisor()) {
        problem = Some(format!("denominator {} is a zero-divisor", b.fmt_elem(g)));
    }
    let eq: Vec<Vec<bool>> = (0..n)
        .map(|i| (0..n).map(|j| frac_eq(b, &block[i], &block[j])).collect())
        .collect();
    let mut scans = (n * n) as u64;
    'law: for i in 0..n {
        if !eq[i][i] {
            problem = Some(format!("{} is not equal to itself", block[i].fmt(b)));
            break;
        }
        for j in 0..n {
            if eq[i][j] != eq[j][i] {
                problem = Some(format!("asymmetric at {}, {}", block[i].fmt(b), block[j].fmt(b)));
                break 'law;
            }
            if !eq[i][j] {
                continue;
            }
            for k in 0..n {
                scans += 1;
                if eq[j][k] && !eq[i][k] {
                    problem = Some(format!(
                        "not transitive at {}, {}, {}",
                        block[i].fmt(b),
                        block[j].fmt(b),
                        block[k].fmt(b)
                    ));
                    break 'law;
                }
            }
            if i != j {
                for y in block.iter().take(8) {
                    for op in [FracOp::Add, FracOp::Mul] {
                        scans += 1;
                        let a = frac_arith(b, op, &block[i], y);
                        let c = frac_arith(b, op, &block[j], y);
                        if !frac_eq(b, &a, &c) {
                            problem = Some(format!(
                                "{op:?} does not respect {} = {}",
                                block[i].fmt(b),
                                block[j].fmt(b)
                            ));
                            break 'law;
                        }
                    }
                }
            }
        }
    }
    let mut r = base.result(NAME, problem.is_some(), scans).note(format!("{n} fractions in the block"));
    if let Some(p) = problem {
        r = r.witness(&[("problem", p)]);
    }
    r
}
