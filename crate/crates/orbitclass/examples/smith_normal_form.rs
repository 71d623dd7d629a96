//! Smith normal forms, cokernel torsion orders and ranks over F_p for a few
//! matrices that matter here: Cartan matrices and graded bracket matrices.
//!
//! Run with: cargo run --example smith_normal_form

use orbitclass::intlinalg::{smith_normal_form, torsion_cokernel_order, IntMatrix};
use orbitclass::root_system::RootSystem;

fn show(name: &str, m: &IntMatrix) {
    let s = smith_normal_form(m);
    let diag: Vec<String> = s.diag.iter().map(|d| d.to_string()).collect();
    println!("{name}: {}x{}", m.rows(), m.cols());
    println!("  invariant factors: [{}]", diag.join(", "));
    println!("  torsion cokernel order: {}", torsion_cokernel_order(m));
    for p in [2u64, 3, 5] {
        println!("  rank mod {p}: {}", m.rank_mod_p(p).unwrap());
    }
    // U M V = D holds exactly
    assert_eq!(s.u.mul(m).mul(&s.v), s.diag_matrix());
}

fn main() -> orbitclass::Result<()> {
    show(
        "height-2 bracket matrix of D_4",
        &IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]),
    );
    for t in ["A2", "A4", "D5", "E6", "E7"] {
        let rs = RootSystem::parse(t)?;
        show(&format!("Cartan matrix of {t}"), &rs.cartan_matrix());
    }
    Ok(())
}
