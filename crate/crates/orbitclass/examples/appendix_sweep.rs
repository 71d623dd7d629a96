//! Re-derive every graded bracket computation: for each simple adjoint type
//! and each of its bad primes, check layer surjectivity below p, the
//! one-dimensional cokernel at height p, and the dimension identity.
//!
//! Run with: cargo run --example appendix_sweep

use orbitclass::verifier::appendix_sweep;

fn main() -> orbitclass::Result<()> {
    let reports = appendix_sweep()?;
    let mut failures = 0;
    for r in &reports {
        let status = if r.passed { "pass" } else { "FAIL" };
        println!(
            "{:>3} p={}: surjective below p: {:<5}  coker dim at p: {}  dim identity: {:<5}  {}",
            r.type_label, r.prime, r.surjective_below_p, r.coker_dim_at_p, r.dim_identity, status
        );
        if let Some(at_p) = r.layers.get(r.prime as usize - 1) {
            let snf = at_p
                .snf
                .as_ref()
                .map(|d| format!("{d:?}"))
                .unwrap_or_default();
            println!(
                "      layer map at height p: dim {} -> {}, snf {}, rank mod p {}",
                at_p.dim,
                r.layers[r.prime as usize].dim,
                snf,
                at_p.rank_mod_p.unwrap()
            );
        }
        failures += usize::from(!r.passed);
    }
    println!("\n{} cells, {failures} failures", reports.len());
    std::process::exit(if failures == 0 { 0 } else { 1 });
}
