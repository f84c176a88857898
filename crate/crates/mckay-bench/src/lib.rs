//! Benchmark-only crate; see `benches/kernels.rs`.
//!
//! Shared fixture helpers live here so the bench targets stay small.

use mckay_core::cyclotomic::{rat, CycNum};
use mckay_core::families;
use mckay_core::group::{Caps, FiniteMatrixGroup};

/// A dense non-monomial element of Q(zeta_60), worst case for products.
pub fn dense_cyc_num(seed: i64) -> CycNum {
    let phi = mckay_core::cyclotomic::euler_phi(60) as usize;
    let coeffs = (0..phi)
        .map(|k| rat(seed + k as i64, 1 + (k as i64 % 5)))
        .collect();
    CycNum::from_coeffs(60, coeffs).expect("phi(60) coordinates")
}

/// The symmetric group on four letters, doubled onto C^4 + C^4.
pub fn s4() -> FiniteMatrixGroup {
    families::symmetric_group_action(4, &Caps::default()).expect("S4 closure")
}
