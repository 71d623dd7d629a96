//! Build the non-simply-laced algebras by diagram folding and show the
//! fixed layer bases and the graded matrices of ad(X).
//!
//! Run with: cargo run --example folding

use orbitclass::chevalley::graded_algebra;
use orbitclass::root_system::RootSystemType;

fn main() -> orbitclass::Result<()> {
    for name in ["B3", "C3", "G2", "F4"] {
        let t = RootSystemType::parse(name)?;
        let alg = graded_algebra(t)?;
        let fold = alg.folding().expect("B/C/F/G are folded");
        println!(
            "{name}: folded from {} by node permutation {:?} of order {}",
            fold.ambient().root_system(),
            fold.node_permutation(),
            fold.order(),
        );
        let rs = fold.ambient().root_system();
        for h in 1..=alg.max_height() {
            let basis: Vec<String> = alg
                .layer_basis(h)
                .iter()
                .map(|v| v.display(rs))
                .collect();
            println!("  n_{h}^sigma = < {} >", basis.join(" ; "));
        }
        for h in 1..alg.max_height() {
            let m = alg.ad_x_matrix(h)?;
            println!("  [X,.]: n_{h} -> n_{}: {}", h + 1, m);
        }
        println!();
    }
    Ok(())
}
