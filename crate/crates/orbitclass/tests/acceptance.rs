//! Acceptance suite: one test per criterion, each printing a pass line.
//! Run as `cargo test --test acceptance -- --nocapture` to see the lines.

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use orbitclass::chevalley::{build_folding, folding_ambient, graded_algebra, simply_laced,
    torus_ad_x_matrix};
use orbitclass::classifier::{implication_audit, intro_table_with_range, witness_corpus};
use orbitclass::intlinalg::{smith_normal_form, IntMatrix};
use orbitclass::root_datum::datum_from_str;
use orbitclass::root_system::{Family, RootSystem, RootSystemType};
use orbitclass::verifier::{appendix_sweep, good_prime_full_surjectivity,
    pgl_weighted_coroot_sum_vanishes, verify_companion_block, verify_phi_bracket_identity};

fn ty(f: Family, r: usize) -> RootSystemType {
    RootSystemType::new(f, r).unwrap()
}

/// Every standard datum the suite sweeps: the classical families over the
/// table range, both isogeny ends of each simple type, tori and products.
fn standard_corpus() -> Vec<String> {
    let mut v: Vec<String> = Vec::new();
    for n in 2..=9 {
        v.push(format!("GL:{n}"));
        v.push(format!("SL:{n}"));
        v.push(format!("PGL:{n}"));
    }
    for n in 1..=9 {
        v.push(format!("SOodd:{}", 2 * n + 1));
        v.push(format!("Sp:{}", 2 * n));
    }
    for n in 2..=9 {
        v.push(format!("SOeven:{}", 2 * n));
    }
    for t in [
        "A1", "A4", "A6", "B2", "B5", "C3", "C6", "D4", "D7", "E6", "E7", "E8", "F4", "G2",
    ] {
        v.push(format!("sc:{t}"));
        v.push(format!("ad:{t}"));
    }
    v.extend(
        ["GL:1", "T:2", "SL:2xPGL:2", "SL:3xSOodd:5xT:1", "Sp:4xSOeven:8"]
            .map(str::to_string),
    );
    v
}

struct Xorshift(u64);

impl Xorshift {
    fn next(&mut self) -> u64 {
        let mut x = self.0;
        x ^= x << 13;
        x ^= x >> 7;
        x ^= x << 17;
        self.0 = x;
        x
    }

    fn range(&mut self, lo: i64, hi: i64) -> i64 {
        lo + (self.next() % (hi - lo + 1) as u64) as i64
    }
}

fn random_matrix(rng: &mut Xorshift, max_dim: usize) -> IntMatrix {
    let rows = rng.range(1, max_dim as i64) as usize;
    let cols = rng.range(1, max_dim as i64) as usize;
    let data: Vec<Vec<i64>> = (0..rows)
        .map(|_| (0..cols).map(|_| rng.range(-9, 9)).collect())
        .collect();
    IntMatrix::from_rows(&data)
}

fn random_unimodular(rng: &mut Xorshift, n: usize) -> IntMatrix {
    let mut u = IntMatrix::identity(n);
    for _ in 0..2 * n + 2 {
        let i = rng.range(0, n as i64 - 1) as usize;
        let j = rng.range(0, n as i64 - 1) as usize;
        if i == j {
            continue;
        }
        let mut e = IntMatrix::identity(n);
        e[(i, j)] = BigInt::from(rng.range(-3, 3));
        u = u.mul(&e);
    }
    u
}

#[test]
fn criterion_1_intro_table_reproduction() {
    let start = Instant::now();
    let table = intro_table_with_range(2, 9).unwrap();
    let expect: Vec<[&str; 6]> = vec![
        ["GL_n", "-", "1", "1", "-", "-"],
        ["SL_n", "-", "n", "1", "p|n", "p|n"],
        ["PGL_n", "-", "1", "n", "-", "p|n"],
        ["SO_2n+1", "2", "1", "2", "2", "2"],
        ["SO_2n", "2", "2", "2", "2", "2"],
        ["Sp_2n", "2", "2", "1", "2", "2"],
        ["F_4", "2,3", "1", "1", "2,3", "2,3"],
        ["G_2", "2,3", "1", "1", "2,3", "2,3"],
        ["E_8", "2,3,5", "1", "1", "2,3,5", "2,3,5"],
    ];
    assert_eq!(table.rows.len(), 9);
    for (row, e) in table.rows.iter().zip(&expect) {
        let got = [
            row.group_label.as_str(),
            row.bad_primes.as_str(),
            row.kappa_v.as_str(),
            row.rho_v.as_str(),
            row.nhwc.as_str(),
            row.ino.as_str(),
        ];
        assert_eq!(got, *e, "row {}", e[0]);
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(5), "took {elapsed:?}");
    println!("acceptance 1 (intro table, n in 2..9, p in 2,3,5,7): pass in {elapsed:?}");
}

#[test]
fn criterion_2_cartan_determinants() {
    let start = Instant::now();
    for l in 1..=12usize {
        assert_eq!(
            RootSystem::simple(ty(Family::A, l)).cartan_determinant(),
            BigInt::from(l as i64 + 1)
        );
        if l >= 2 {
            assert_eq!(
                RootSystem::simple(ty(Family::B, l)).cartan_determinant(),
                BigInt::from(2)
            );
            assert_eq!(
                RootSystem::simple(ty(Family::C, l)).cartan_determinant(),
                BigInt::from(2)
            );
        }
        if l >= 3 {
            assert_eq!(
                RootSystem::simple(ty(Family::D, l)).cartan_determinant(),
                BigInt::from(4)
            );
        }
    }
    assert_eq!(
        RootSystem::simple(ty(Family::E, 6)).cartan_determinant(),
        BigInt::from(3)
    );
    assert_eq!(
        RootSystem::simple(ty(Family::E, 7)).cartan_determinant(),
        BigInt::from(2)
    );
    for t in [ty(Family::E, 8), ty(Family::F, 4), ty(Family::G, 2)] {
        assert_eq!(RootSystem::simple(t).cartan_determinant(), BigInt::one());
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("acceptance 2 (Cartan determinants through rank 12): pass in {elapsed:?}");
}

#[test]
fn criterion_3_appendix_bracket_invariants() {
    // D_4 height-2 map: SNF (1,1,2), rank 2 mod 2
    let d4 = graded_algebra(ty(Family::D, 4)).unwrap();
    let m = d4.ad_x_matrix(2).unwrap();
    let diag: Vec<u64> = smith_normal_form(&m)
        .diag
        .iter()
        .map(|d| u64::try_from(d).unwrap())
        .collect();
    assert_eq!(diag, vec![1, 1, 2]);
    assert_eq!(m.rank_mod_p(2).unwrap(), 2);

    // B_3 and C_3 height-2 maps: 2x2 with |det| = 2
    for f in [Family::B, Family::C] {
        let alg = graded_algebra(ty(f, 3)).unwrap();
        let m = alg.ad_x_matrix(2).unwrap();
        assert_eq!((m.rows(), m.cols()), (2, 2));
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(2));
    }

    // G_2: (+-2) at height 2 and (+-3) at height 3
    let g2 = graded_algebra(ty(Family::G, 2)).unwrap();
    let m2 = g2.ad_x_matrix(2).unwrap();
    assert_eq!((m2.rows(), m2.cols()), (1, 1));
    assert_eq!(m2[(0, 0)].abs(), BigInt::from(2));
    let m3 = g2.ad_x_matrix(3).unwrap();
    assert_eq!((m3.rows(), m3.cols()), (1, 1));
    assert_eq!(m3[(0, 0)].abs(), BigInt::from(3));

    // E_6 height-3 map: 5x5 with |det| = 3, rank 4 mod 3
    let e6 = graded_algebra(ty(Family::E, 6)).unwrap();
    let m = e6.ad_x_matrix(3).unwrap();
    assert_eq!((m.rows(), m.cols()), (5, 5));
    assert_eq!(m.determinant().unwrap().abs(), BigInt::from(3));
    assert_eq!(m.rank_mod_p(3).unwrap(), 4);

    // E_8 height-5 map: 7x7 with |det| = 5, rank 6 mod 5
    let e8 = graded_algebra(ty(Family::E, 8)).unwrap();
    let m = e8.ad_x_matrix(5).unwrap();
    assert_eq!((m.rows(), m.cols()), (7, 7));
    assert_eq!(m.determinant().unwrap().abs(), BigInt::from(5));
    assert_eq!(m.rank_mod_p(5).unwrap(), 6);

    // F_4: 3x3 maps with |det| = 2 at height 2 and |det| = 3 at height 3
    let f4 = graded_algebra(ty(Family::F, 4)).unwrap();
    let m2 = f4.ad_x_matrix(2).unwrap();
    assert_eq!((m2.rows(), m2.cols()), (3, 3));
    assert_eq!(m2.determinant().unwrap().abs(), BigInt::from(2));
    let m3 = f4.ad_x_matrix(3).unwrap();
    assert_eq!((m3.rows(), m3.cols()), (3, 3));
    assert_eq!(m3.determinant().unwrap().abs(), BigInt::from(3));

    println!("acceptance 3 (appendix bracket invariants, exact): pass");
}

#[test]
fn criterion_4_full_appendix_sweep() {
    let start = Instant::now();
    let reports = appendix_sweep().unwrap();
    assert_eq!(reports.len(), 7 + 7 + 5 + 4 + 3 + 4);
    for r in &reports {
        assert!(r.applicable, "{} p={}", r.type_label, r.prime);
        assert!(r.surjective_below_p, "{} p={} item 1", r.type_label, r.prime);
        assert_eq!(r.coker_dim_at_p, 1, "{} p={} item 2", r.type_label, r.prime);
        assert!(r.dim_identity, "{} p={} item 3", r.type_label, r.prime);
        assert!(r.passed);
    }
    // contrast: at sampled good primes the surjectivity holds at every height
    let mut contrasts = 0usize;
    let mut types: Vec<RootSystemType> = Vec::new();
    for (t, _) in orbitclass::verifier::sweep_cells() {
        if !types.contains(&t) {
            types.push(t);
        }
    }
    for t in types {
        for p in [5u64, 7, 11] {
            if t.bad_primes().contains(&p) {
                continue;
            }
            assert!(
                good_prime_full_surjectivity(t, p).unwrap(),
                "{t} at good p={p}"
            );
            contrasts += 1;
        }
    }
    assert!(contrasts > 0);
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!(
        "acceptance 4 (appendix sweep, {} cells + {contrasts} good-prime contrasts): pass in {elapsed:?}",
        reports.len()
    );
}

#[test]
fn criterion_5_coroot_dependence_equivalence() {
    let mut checked = 0usize;
    for spec in standard_corpus() {
        let rd = datum_from_str(&spec).unwrap();
        let rho = rd.rho_v();
        for p in [2u64, 3, 5, 7] {
            let dependent = rd.coroots_dependent_mod_p(p).unwrap();
            let divides = (&rho % p).is_zero();
            assert_eq!(dependent, divides, "{spec} at p={p}");
            checked += 1;
        }
    }
    println!("acceptance 5 (coroot dependence iff p | rho_v, {checked} pairs): pass");
}

#[test]
fn criterion_6_torus_bracket_equals_phi() {
    let mut checked = 0usize;
    for spec in standard_corpus() {
        let rd = datum_from_str(&spec).unwrap();
        assert_eq!(torus_ad_x_matrix(&rd), rd.phi_matrix(), "{spec}");
        let report = verify_phi_bracket_identity(&rd).unwrap();
        assert!(report.matrices_equal, "{spec}");
        assert!(report.passed, "{spec}: rank drop must match p | kappa_v");
        checked += 1;
    }
    println!("acceptance 6 ([X,.]: t -> n_1 equals Phi, {checked} data): pass");
}

#[test]
fn criterion_7_pgl_relation() {
    for n in 2..=12usize {
        for p in [2u64, 3, 5, 7, 11] {
            let vanishes = pgl_weighted_coroot_sum_vanishes(n, p).unwrap();
            assert_eq!(
                vanishes,
                (n as u64).is_multiple_of(p),
                "PGL_{n} weighted coroot sum at p={p}"
            );
        }
    }
    println!("acceptance 7 (PGL_n coroot relation, n <= 12): pass");
}

#[test]
fn criterion_8_companion_block() {
    for p in [2u64, 3, 5, 7, 11, 13] {
        assert!(verify_companion_block(p).unwrap(), "p={p}");
    }
    println!("acceptance 8 (companion block M_x^p = x I over F_p[x]): pass");
}

#[test]
fn criterion_9_property_suites() {
    // SNF round-trip, determinant product, rank mod p, on seeded matrices
    let mut rng = Xorshift(0x9e3779b97f4a7c15);
    for _ in 0..300 {
        let m = random_matrix(&mut rng, 8);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.diag_matrix());
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
        for w in s.diag.windows(2) {
            if !w[0].is_zero() {
                assert!((&w[1] % &w[0]).is_zero());
            } else {
                assert!(w[1].is_zero());
            }
        }
        if m.rows() == m.cols() {
            let det = m.determinant().unwrap();
            let prod: BigInt = s.diag.iter().product();
            assert_eq!(det.abs(), prod);
        }
        for p in [2u64, 3, 5, 7] {
            let expect = s
                .diag
                .iter()
                .filter(|d| !d.is_zero() && !(*d % p).is_zero())
                .count();
            assert_eq!(m.rank_mod_p(p).unwrap(), expect);
        }
    }

    // torsion order is invariant under unimodular multiplication
    for _ in 0..60 {
        let m = random_matrix(&mut rng, 6);
        let e = random_unimodular(&mut rng, m.rows());
        let f = random_unimodular(&mut rng, m.cols());
        let t1 = orbitclass::intlinalg::torsion_cokernel_order(&m);
        let t2 = orbitclass::intlinalg::torsion_cokernel_order(&e.mul(&m).mul(&f));
        assert_eq!(t1, t2);
    }

    // Jacobi for every simply-laced algebra through rank 8 (verified in build)
    for r in 1..=8 {
        simply_laced(ty(Family::A, r)).unwrap();
    }
    for r in 3..=8 {
        simply_laced(ty(Family::D, r)).unwrap();
    }
    for r in 6..=8 {
        simply_laced(ty(Family::E, r)).unwrap();
    }

    // folding automorphism checks through rank 8
    let mut targets: Vec<RootSystemType> = Vec::new();
    for n in 2..=8 {
        targets.push(ty(Family::B, n));
        targets.push(ty(Family::C, n));
    }
    targets.push(ty(Family::F, 4));
    targets.push(ty(Family::G, 2));
    for t in targets {
        let fold = build_folding(folding_ambient(t).unwrap(), t).unwrap();
        assert!(fold.is_automorphism(), "{t}");
        assert!(fold.has_order(), "{t}");
        assert_eq!(fold.fixed_layer_dims(), RootSystem::simple(t).layer_dims());
    }

    // product of exponents = kappa_v; kappa_v | det Cartan for semisimple
    for spec in standard_corpus() {
        let rd = datum_from_str(&spec).unwrap();
        let prod: BigInt = rd.regular_orbit_exponents().iter().product();
        assert_eq!(prod, rd.kappa_v(), "{spec}");
        if rd.is_semisimple() {
            let det = rd.root_system().cartan_determinant();
            assert!((det % rd.kappa_v()).is_zero(), "{spec}");
        }
    }

    // the four non-implication witnesses
    let audit = implication_audit(&witness_corpus().unwrap()).unwrap();
    assert!(audit.passed(), "violations: {:?}", audit.violations);
    assert!(!audit.witnesses_14_not_3.is_empty(), "SL_p witness");
    assert!(!audit.witnesses_134_not_2.is_empty(), "GL_p witness");
    assert!(!audit.witnesses_13_not_4.is_empty(), "PGL_p witness");
    assert!(!audit.witnesses_34_not_1.is_empty(), "exceptional witness");

    println!("acceptance 9 (property suites and audit witnesses): pass");
}
