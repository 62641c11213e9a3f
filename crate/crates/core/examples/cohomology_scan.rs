//! Right and left vanishing scans for twists of the power-map sequence.
//!
//!     cargo run --example cohomology_scan

use num_bigint::BigInt;
use twisted_coord::cohomology::{left_vanishing_scan, right_vanishing_scan};
use twisted_coord::ring::PowerRingSpec;

fn main() -> twisted_coord::error::Result<()> {
    let spec = PowerRingSpec::new(1, 2)?;
    for t in [-10, -5, -2, 0] {
        let t = BigInt::from(t);
        let right = right_vanishing_scan(&spec, &t, 12)?;
        let left = left_vanishing_scan(&spec, &t, 12)?;
        println!("t={t:>3}: right n0={:?}, left {:?}", right.n0, left.verdict);
    }
    let left = left_vanishing_scan(&spec, &BigInt::from(-2), 6)?;
    print!("{}", left.table.to_csv_string());
    Ok(())
}
