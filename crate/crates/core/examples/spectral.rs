//! Characteristic polynomial, certified spectral radius and quasi-unipotence.
//!
//!     cargo run --example spectral -- '[[1,1],[1,0]]'

use num_rational::BigRational;
use twisted_coord::json::parse_matrix;
use twisted_coord::linalg::{self, char_poly};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "[[2,1,0],[1,1,0],[0,0,1]]".into());
    let p = parse_matrix(&serde_json::from_str(&arg)?)?;
    println!("P = {p}");
    println!("char poly: {}", char_poly(&p));
    println!("quasi-unipotent: {}", linalg::is_quasi_unipotent(&p));
    for digits in [3u32, 9, 30] {
        let width = BigRational::new(1.into(), num_bigint::BigInt::from(10).pow(digits));
        let r = linalg::spectral_radius_interval(&p, &width)?;
        println!("spectral radius (1e-{digits}): {:.12} in {r}", r.midpoint_f64());
        if let Some(k) = r.as_integer() {
            println!("jordan exponent at {k}: {}", linalg::jordan_growth_exponent(&p, &k)?);
        }
    }
    Ok(())
}
