//! Left/right ampleness verdicts for a few numerical actions.
//!
//!     cargo run --example ampleness

use twisted_coord::dynamics::{
    classify_ampleness, non_left_ample_witness, CurveFunctional, DivisorClass, NumericalActionSpec,
    WitnessConfig,
};
use twisted_coord::linalg::IntMatrix;

fn action(rows: &[&[i64]], curves: &[&[i64]]) -> NumericalActionSpec {
    let p = IntMatrix::from_i64_rows(rows).unwrap();
    let curves = curves.iter().map(|c| CurveFunctional::from_i64(c)).collect();
    NumericalActionSpec::new(p, curves, 1).unwrap()
}

fn main() -> twisted_coord::error::Result<()> {
    let cases = [
        ("frobenius, p=3", action(&[&[3]], &[&[1]]), DivisorClass::from_i64(&[1])),
        (
            "identity, ample",
            action(&[&[1, 0], &[0, 1]], &[&[1, 0], &[0, 1]]).with_ample_flag(true),
            DivisorClass::from_i64(&[1, 1]),
        ),
        (
            "diagonal, not an eigenvector",
            action(&[&[2, 0], &[0, 3]], &[&[1, 0], &[0, 1]]),
            DivisorClass::from_i64(&[1, 1]),
        ),
        (
            "fibonacci",
            action(&[&[1, 1], &[1, 0]], &[&[1, 0], &[0, 1]]),
            DivisorClass::from_i64(&[1, 1]),
        ),
    ];
    for (name, spec, d) in &cases {
        let report = classify_ampleness(spec, d)?;
        println!("{name}: left={:?} right={:?} r≈{:.6}", report.left, report.right, report.spectral_radius.midpoint_f64());
        for reason in &report.reasons {
            println!("    [{}] {}", reason.id, reason.detail);
        }
        if report.spectral_radius.lo_f64() > 1.0 {
            let w = non_left_ample_witness(spec, d, d, &WitnessConfig::default())?;
            println!("    H = {} · D, curve #{}, checked for m ≤ {}", w.multiplier, w.curve_index, w.horizon);
        }
    }
    Ok(())
}
