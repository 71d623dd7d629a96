//! Audit the implications between the eight properties over a corpus and
//! exhibit the four non-implication witnesses.
//!
//! Run with: cargo run --example implication_audit

use orbitclass::classifier::{implication_audit, witness_corpus};

fn main() -> orbitclass::Result<()> {
    let corpus = witness_corpus()?;
    let audit = implication_audit(&corpus)?;
    println!("pairs checked: {}", audit.pairs_checked);
    println!("violations: {:?}", audit.violations);
    println!("(1)+(3) without (4): {:?}", audit.witnesses_13_not_4);
    println!("(1)+(3)+(4) without (2): {:?}", audit.witnesses_134_not_2);
    println!("(1)+(4) without (3): {:?}", audit.witnesses_14_not_3);
    println!("(3)+(4) without (1): {:?}", audit.witnesses_34_not_1);
    assert!(audit.passed());
    assert!(audit.all_witnesses_found());
    println!("\nall implications hold; all four witnesses present");
    Ok(())
}
