//! Classify a few split groups at small primes and print the verdicts.
//!
//! Run with: cargo run --example classify

use orbitclass::classifier::classify;
use orbitclass::root_datum::datum_from_str;

fn main() -> orbitclass::Result<()> {
    let cases = [
        ("SL:5", 5u64),
        ("PGL:5", 5),
        ("Sp:6", 2),
        ("SOodd:7", 3),
        ("ad:G2", 5),
        ("SL:2xPGL:3xT:1", 3),
    ];
    println!("group            p   good  vgood  p|k  p|r  separable  finite  Howe");
    for (spec, p) in cases {
        let rd = datum_from_str(spec)?;
        let r = classify(&rd, p)?;
        println!(
            "{:<16} {:<3} {:<5} {:<6} {:<4} {:<4} {:<10} {:<7} {}",
            r.group_label,
            r.p,
            r.s1_good,
            r.s2_very_good,
            !r.s3_p_not_div_kappa,
            !r.s4_p_not_div_rho,
            r.s5_all_separable,
            r.s7_finitely_many_orbits,
            r.s8_howe_holds,
        );
    }

    // the same report as JSON, the CLI's --format json payload
    let rd = datum_from_str("SL:5")?;
    let report = classify(&rd, 5)?;
    println!("\n{}", serde_json::to_string_pretty(&report).unwrap());
    Ok(())
}
