//! Reproduce the nine-row classification table by sampling n and p.
//!
//! Run with: cargo run --example summary_table

use orbitclass::classifier::intro_table_with_range;

fn main() -> orbitclass::Result<()> {
    let table = intro_table_with_range(2, 9)?;
    println!("G         bad p   kappa_v  rho_v  nHwC   INO");
    for row in &table.rows {
        println!(
            "{:<9} {:<7} {:<8} {:<6} {:<6} {}",
            row.group_label, row.bad_primes, row.kappa_v, row.rho_v, row.nhwc, row.ino
        );
    }
    println!(
        "\nsampled n in {}..{}, p in {:?}",
        table.sample_range.0, table.sample_range.1, table.sample_primes
    );
    for note in &table.notes {
        println!("note: {note}");
    }
    Ok(())
}
