//! Fitted constants for `(P^m D . C) ≤ c m^j r^m` as the window grows.
//!
//!     cargo run --example growth_bounds

use twisted_coord::dynamics::{
    delta_sequence, growth_bound_check, orbit_pairings, CurveFunctional, DivisorClass, NumericalActionSpec,
};
use twisted_coord::linalg::{self, IntMatrix};
use num_bigint::BigInt;

fn main() -> twisted_coord::error::Result<()> {
    let jordan = NumericalActionSpec::new(
        IntMatrix::from_i64_rows(&[&[1, 1], &[0, 1]])?,
        vec![CurveFunctional::from_i64(&[1, 0])],
        1,
    )?;
    let d = DivisorClass::from_i64(&[0, 1]);
    let c = &jordan.curves()[0];
    let r = linalg::spectral_radius_interval(jordan.action(), &linalg::default_width())?;
    let j = linalg::jordan_growth_exponent(jordan.action(), &BigInt::from(1))? as u32;
    println!("jordan block: r={r}, j={j}");
    for window in [10, 50, 200] {
        let orbit = orbit_pairings(&jordan, &d, c, window)?;
        let sums = delta_sequence(&jordan, &d, c, window)?;
        let fit = growth_bound_check(&orbit, 0, &r, j)?;
        let too_small = growth_bound_check(&sums, 1, &r, j)?;
        let enough = growth_bound_check(&sums, 1, &r, j + 1)?;
        println!(
            "  M={window:>3}: orbit c={}, sums with j={j} c={}, with j={} c={}",
            fit.constant,
            too_small.constant,
            j + 1,
            enough.constant
        );
    }
    Ok(())
}
