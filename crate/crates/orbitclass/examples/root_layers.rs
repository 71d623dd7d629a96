//! Generate root systems and print their height layers, counts and bad
//! primes.
//!
//! Run with: cargo run --example root_layers

use orbitclass::root_system::RootSystem;

fn main() -> orbitclass::Result<()> {
    for name in ["A3", "D4", "G2", "F4", "E8", "A3xB2"] {
        let rs = RootSystem::parse(name)?;
        let bad: Vec<String> = rs.bad_primes().iter().map(u64::to_string).collect();
        println!(
            "{name}: rank {}, {} positive roots, max height {}, Cartan det {}, bad primes [{}]",
            rs.rank(),
            rs.positive_roots().len(),
            rs.max_height(),
            rs.cartan_determinant(),
            bad.join(", "),
        );
        let dims = rs.layer_dims();
        let shown: Vec<String> = dims.iter().map(usize::to_string).collect();
        println!("  layer dims by height: {}", shown.join(" "));
        if rs.rank() <= 4 && rs.rank() > 0 {
            for (h, roots) in rs.layers_by_height() {
                let list: Vec<String> = roots.iter().map(|r| r.to_string()).collect();
                println!("  height {h}: {}", list.join(" "));
            }
        }
    }
    Ok(())
}
