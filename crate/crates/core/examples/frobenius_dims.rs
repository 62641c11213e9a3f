//! Dimensions of the graded pieces `F_n` for a few power maps.
//!
//!     cargo run --example frobenius_dims

use twisted_coord::ring::{dimension_table, growth_class, PowerRingSpec};

fn main() -> twisted_coord::error::Result<()> {
    for (m, r) in [(1, 2), (1, 3), (2, 2), (3, 5)] {
        let spec = PowerRingSpec::new(m, r)?;
        let dims = dimension_table(&spec, 10);
        let shown: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
        println!("P^{m}, r={r}: {}  ({:?})", shown.join(" "), growth_class(&dims)?);
    }
    Ok(())
}
