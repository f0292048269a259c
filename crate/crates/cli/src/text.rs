//! Plain-text rendering of results, reports and ring facts.

use std::fmt::Write;
use std::sync::Arc;

use contentalg_core::ideals::{associated_primes, has_property_a, minimal_primes, spectrum, very_few_zero_divisors};
use contentalg_core::{CheckResult, ElemSet, Elem, FiniteRing, Ideal, Monoid};
use serde::Serialize;

use crate::report::Report;

fn verdict_tag(r: &CheckResult) -> String {
    r.verdict.as_str().to_uppercase()
}

pub fn render_result(out: &mut String, r: &CheckResult, depth: usize) {
    let pad = "  ".repeat(depth);
    let _ = writeln!(out, "{pad}{:<22} {}  (scans {})", verdict_tag(r), r.name, r.scans);
    if let Some(w) = &r.witness {
        for e in w {
            let _ = writeln!(out, "{pad}    {} = {}", e.name, e.value);
        }
    }
    for n in &r.notes {
        let _ = writeln!(out, "{pad}    note: {n}");
    }
    if depth == 0 {
        if let Some(u) = &r.universe {
            let _ = writeln!(out, "{pad}    universe: {u}");
        }
    }
    for d in &r.details {
        render_result(out, d, depth + 1);
    }
}

pub fn render_report(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "contentalg {}", r.tool_version);
    let _ = writeln!(out, "instance: {}", r.labels.instance);
    let b = &r.config.bounds;
    let _ = writeln!(
        out,
        "bounds: support {}, coefficients {}, sample size {}, seed {}, gen cap {}, max terms {}, universe cap {}",
        b.support,
        b.coeff_mode.map(|m| format!("{m:?}").to_lowercase()).unwrap_or_else(|| "auto".into()),
        b.sample_size,
        b.seed,
        b.gen_cap,
        b.max_terms,
        b.universe_cap
    );
    out.push('\n');
    for res in &r.results {
        render_result(&mut out, res, 0);
    }
    for e in &r.errors {
        let kind = if e.cross_validation { "MISMATCH" } else { "ERROR" };
        let _ = writeln!(out, "{kind:<22} {}: {}", e.check, e.message);
    }
    let s = &r.summary;
    let _ = writeln!(
        out,
        "\nsummary: {} pass, {} bounded pass, {} fail, {} skipped, {} inconclusive, {} precondition violated, {} errors",
        s.pass, s.bounded_pass, s.fail, s.skipped, s.inconclusive, s.precondition_violated, s.errors
    );
    let _ = writeln!(out, "exit code: {}", r.exit_code);
    let _ = writeln!(out, "determinism hash: {}", r.determinism_hash);
    let _ = writeln!(out, "wall time: {} ms", r.wall_time_ms);
    out
}

/// Facts about `R` and, when given, `S`.
#[derive(Debug, Clone, Serialize)]
pub struct Info {
    pub ring: String,
    pub order: usize,
    pub units: Vec<String>,
    pub zero_divisors: Vec<String>,
    pub idempotents: Vec<String>,
    pub nilradical: String,
    pub jacobson: String,
    pub spectrum: Vec<String>,
    pub minimal_primes: Vec<String>,
    pub associated_primes: Vec<String>,
    pub property_a: bool,
    pub vfzd_cover: Option<Vec<String>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub monoid: Option<MonoidInfo>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MonoidInfo {
    pub label: String,
    pub cancellative: bool,
    pub cancellation_witness: Option<String>,
    pub torsion_free: bool,
    pub torsion_witness: Option<String>,
}

fn elems(ring: &FiniteRing, set: &ElemSet) -> Vec<String> {
    set.iter().map(|x| ring.fmt_elem(Elem(x as u32))).collect()
}

fn ideals(list: &[Ideal]) -> Vec<String> {
    list.iter().map(|i| i.to_string()).collect()
}

pub fn info(ring: &Arc<FiniteRing>, monoid: Option<&Monoid>, gen_cap: usize) -> Result<Info, String> {
    let primes = spectrum(ring).map_err(|e| e.to_string())?;
    let vfzd = very_few_zero_divisors(ring);
    let monoid = monoid.map(|m| {
        let (canc, cw) = m.is_cancellative();
        let (tf, tw) = m.is_torsion_free();
        MonoidInfo {
            label: m.label().to_string(),
            cancellative: canc,
            cancellation_witness: cw.map(|(s, t, u)| {
                format!("{0} + {1} = {0} + {2}", m.fmt_elem(&s), m.fmt_elem(&t), m.fmt_elem(&u))
            }),
            torsion_free: tf,
            torsion_witness: tw.map(|(s, t, n)| format!("{n}*{} = {n}*{}", m.fmt_elem(&s), m.fmt_elem(&t))),
        }
    });
    Ok(Info {
        ring: ring.label().to_string(),
        order: ring.order(),
        units: elems(ring, &ring.units()),
        zero_divisors: elems(ring, &ring.zero_divisor_set()),
        idempotents: elems(ring, &ring.idempotents()),
        nilradical: ring.nilradical().to_string(),
        jacobson: ring.jacobson().to_string(),
        minimal_primes: ideals(&minimal_primes(&primes)),
        spectrum: ideals(&primes),
        associated_primes: ideals(&associated_primes(ring)),
        property_a: has_property_a(ring, gen_cap).map_err(|e| e.to_string())?.holds,
        vfzd_cover: vfzd.holds.then(|| ideals(&vfzd.cover)),
        monoid,
    })
}

pub fn render_info(i: &Info) -> String {
    let set = |v: &[String]| format!("{{{}}}", v.join(", "));
    let mut out = String::new();
    let _ = writeln!(out, "ring: {} (order {})", i.ring, i.order);
    let _ = writeln!(out, "units: {}", set(&i.units));
    let _ = writeln!(out, "zero-divisors: {}", set(&i.zero_divisors));
    let _ = writeln!(out, "idempotents: {}", set(&i.idempotents));
    let _ = writeln!(out, "Nil(R) = {}", i.nilradical);
    let _ = writeln!(out, "Jac(R) = {}", i.jacobson);
    let _ = writeln!(out, "Spec(R) = {}", set(&i.spectrum));
    let _ = writeln!(out, "Min(R) = {}", set(&i.minimal_primes));
    let _ = writeln!(out, "Ass(R) = {}", set(&i.associated_primes));
    let _ = writeln!(out, "property (A): {}", i.property_a);
    match &i.vfzd_cover {
        Some(c) => {
            let _ = writeln!(out, "very few zero-divisors: Z(R) = union of {}", set(c));
        }
        None => {
            let _ = writeln!(out, "very few zero-divisors: no");
        }
    }
    if let Some(m) = &i.monoid {
        let _ = writeln!(out, "monoid: {}", m.label);
        let _ = writeln!(
            out,
            "  cancellative: {}{}",
            m.cancellative,
            m.cancellation_witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
        );
        let _ = writeln!(
            out,
            "  torsion-free: {}{}",
            m.torsion_free,
            m.torsion_witness.as_ref().map(|w| format!(" ({w})")).unwrap_or_default()
        );
    }
    out
}
