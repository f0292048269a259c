//! Benchmark fixtures. The benchmarks live in `benches/`.

use std::sync::Arc;

use contentalg_core::{Bounds, FiniteRing, Lab, Monoid};

/// The local ring F2[a,b]/(a,b)^3 of order 64.
pub fn trunc3() -> Arc<FiniteRing> {
    Arc::new(FiniteRing::trunc_poly(2, 2, 3).expect("valid ring"))
}

pub fn lab(ring: Arc<FiniteRing>, monoid: Monoid) -> Lab {
    Lab::new(ring, Arc::new(monoid), &Bounds::default()).expect("valid instance")
}
