//! Which grades of the twisted ring need new generators.
//!
//!     cargo run --release --example finite_generation

use twisted_coord::ring::{
    generator_degrees, is_decomposable, odd_exponent_family, PowerRingSpec, DEFAULT_BUDGET,
};

fn main() -> twisted_coord::error::Result<()> {
    for (m, r, max_n) in [(1, 2, 8), (1, 3, 4), (1, 5, 3), (2, 2, 4), (2, 3, 3)] {
        let spec = PowerRingSpec::new(m, r)?;
        let scan = generator_degrees(&spec, max_n, DEFAULT_BUDGET)?;
        println!("P^{m}, r={r}");
        for (n, count) in &scan.counts {
            let sample = scan.samples.get(n).map(|z| z.to_string()).unwrap_or_default();
            println!("  n={n}: {count:>6} of {:>7} new  {sample}", scan.dimensions[n]);
        }
    }

    let spec = PowerRingSpec::new(2, 2)?;
    let family = odd_exponent_family(&spec, 4)?;
    let all_new = family.iter().all(|z| is_decomposable(&spec, z, 4).unwrap().is_none());
    println!("odd-exponent family in grade 4: {} members, all new: {all_new}", family.len());
    Ok(())
}
