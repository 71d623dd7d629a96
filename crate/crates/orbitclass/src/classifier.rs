//! Verdicts for the eight split-group properties, the nine-row summary
//! table, and the implication audit with its non-implication witnesses.
//!
//! The decision engine covers split groups only: the finiteness /
//! separability / Howe verdicts are computed from (good prime, kappa_v,
//! rho_v) through the split-case equivalences. Symbolic table rows
//! (conditions like "p|n") are produced by sampling concrete (n, p) pairs
//! and confirming a pattern; the sampled range is part of the output.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{require_prime, Error, Result};
use crate::root_datum::{datum_from_str, RootDatum};

pub const SAMPLE_RANGE_ENV: &str = "ORBITCLASS_SAMPLE_RANGE";
pub const DEFAULT_SAMPLE_RANGE: (usize, usize) = (2, 9);
pub const TABLE_PRIMES: [u64; 4] = [2, 3, 5, 7];

/// Per-(group, prime) verdicts on the eight properties, plus the cokernel
/// invariants they are decided from. Field order is the canonical JSON
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationReport {
    pub group_label: String,
    pub p: u64,
    pub s1_good: bool,
    pub s2_very_good: bool,
    pub s3_p_not_div_kappa: bool,
    pub s4_p_not_div_rho: bool,
    pub s5_all_separable: bool,
    pub s6_regular_separable: bool,
    pub s7_finitely_many_orbits: bool,
    pub s8_howe_holds: bool,
    pub kappa_v: u64,
    pub rho_v: u64,
    pub bad_primes: Vec<u64>,
    pub exponents: Vec<u64>,
}

/// Classify a split root datum at a prime.
pub fn classify(rd: &RootDatum, p: u64) -> Result<ClassificationReport> {
    require_prime(p)?;
    let rs = rd.root_system();
    let s1 = rs.is_good(p)?;
    let s2 = rs.is_very_good(p)?;
    let kappa = rd.kappa_v();
    let rho = rd.rho_v();
    let s3 = !(&kappa % p).is_zero();
    let s4 = !(&rho % p).is_zero();
    let separable = s1 && s3 && s4;
    let report = ClassificationReport {
        group_label: rd.label().to_string(),
        p,
        s1_good: s1,
        s2_very_good: s2,
        s3_p_not_div_kappa: s3,
        s4_p_not_div_rho: s4,
        s5_all_separable: separable,
        s6_regular_separable: separable,
        s7_finitely_many_orbits: separable,
        s8_howe_holds: s1 && s3,
        kappa_v: rd.kappa_v_u64(),
        rho_v: rd.rho_v_u64(),
        bad_primes: rs.bad_primes().into_iter().collect(),
        exponents: rd
            .regular_orbit_exponents()
            .iter()
            .map(|d| u64::try_from(d).expect("exponent fits in u64"))
            .collect(),
    };
    debug_assert!(!report.s2_very_good || (s1 && s3 && s4));
    Ok(report)
}

/// One row of the summary table; the prime-set columns are divisibility
/// descriptors such as `-`, `2,3` or `p|n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntroTableRow {
    pub group_label: String,
    pub bad_primes: String,
    pub kappa_v: String,
    pub rho_v: String,
    pub nhwc: String,
    pub ino: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct IntroTable {
    pub sample_range: (usize, usize),
    pub sample_primes: Vec<u64>,
    pub rows: Vec<IntroTableRow>,
    /// presentation caveats, e.g. the SO_{2n} rank restriction
    pub notes: Vec<String>,
}

/// Read the sampling range from ORBITCLASS_SAMPLE_RANGE ("lo..hi",
/// inclusive), falling back to 2..9.
pub fn sample_range_from_env() -> Result<(usize, usize)> {
    match std::env::var(SAMPLE_RANGE_ENV) {
        Ok(raw) => {
            let (lo, hi) = raw
                .split_once("..")
                .ok_or_else(|| Error::Invalid(format!("{SAMPLE_RANGE_ENV}: expected lo..hi")))?;
            let lo: usize = lo
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("{SAMPLE_RANGE_ENV}: bad lower bound")))?;
            let hi: usize = hi
                .trim()
                .parse()
                .map_err(|_| Error::Invalid(format!("{SAMPLE_RANGE_ENV}: bad upper bound")))?;
            if lo < 2 || hi < lo {
                return Err(Error::Invalid(format!(
                    "{SAMPLE_RANGE_ENV}: need 2 <= lo <= hi"
                )));
            }
            Ok((lo, hi))
        }
        Err(_) => Ok(DEFAULT_SAMPLE_RANGE),
    }
}

/// The nine standard rows, sampled over the environment range.
pub fn intro_table() -> Result<IntroTable> {
    let range = sample_range_from_env()?;
    intro_table_with_range(range.0, range.1)
}

struct RowSpec {
    label: &'static str,
    /// group spec string for the sample parameter n; None = parameter-free
    spec: fn(usize) -> String,
    parametric: bool,
    min_n: usize,
}

pub fn intro_table_with_range(lo: usize, hi: usize) -> Result<IntroTable> {
    let rows_spec: Vec<RowSpec> = vec![
        RowSpec {
            label: "GL_n",
            spec: |n| format!("GL:{n}"),
            parametric: true,
            min_n: 2,
        },
        RowSpec {
            label: "SL_n",
            spec: |n| format!("SL:{n}"),
            parametric: true,
            min_n: 2,
        },
        RowSpec {
            label: "PGL_n",
            spec: |n| format!("PGL:{n}"),
            parametric: true,
            min_n: 2,
        },
        RowSpec {
            label: "SO_2n+1",
            spec: |n| format!("SOodd:{}", 2 * n + 1),
            parametric: true,
            min_n: 2,
        },
        RowSpec {
            label: "SO_2n",
            spec: |n| format!("SOeven:{}", 2 * n),
            parametric: true,
            min_n: 3,
        },
        RowSpec {
            label: "Sp_2n",
            spec: |n| format!("Sp:{}", 2 * n),
            parametric: true,
            min_n: 2,
        },
        RowSpec {
            label: "F_4",
            spec: |_| "ad:F4".to_string(),
            parametric: false,
            min_n: 2,
        },
        RowSpec {
            label: "G_2",
            spec: |_| "ad:G2".to_string(),
            parametric: false,
            min_n: 2,
        },
        RowSpec {
            label: "E_8",
            spec: |_| "ad:E8".to_string(),
            parametric: false,
            min_n: 2,
        },
    ];

    let mut rows = Vec::with_capacity(rows_spec.len());
    for spec in &rows_spec {
        rows.push(build_row(spec, lo, hi)?);
    }
    Ok(IntroTable {
        sample_range: (lo, hi),
        sample_primes: TABLE_PRIMES.to_vec(),
        rows,
        notes: vec![
            format!("SO_2n row sampled over n >= 3 (SO_4 is not simple); other parametric rows over n in {lo}..{hi}."),
            "All verdicts assume a split group; p is the characteristic of the base field.".to_string(),
        ],
    })
}

fn build_row(spec: &RowSpec, lo: usize, hi: usize) -> Result<IntroTableRow> {
    let lo = lo.max(spec.min_n);
    let samples: Vec<usize> = if spec.parametric {
        (lo..=hi.max(lo)).collect()
    } else {
        vec![lo]
    };
    let mut kappa_samples: Vec<(usize, u64)> = Vec::new();
    let mut rho_samples: Vec<(usize, u64)> = Vec::new();
    let mut bad_samples: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut nhwc_samples: Vec<(usize, Vec<u64>)> = Vec::new();
    let mut ino_samples: Vec<(usize, Vec<u64>)> = Vec::new();
    for &n in &samples {
        let rd = datum_from_str(&(spec.spec)(n))?;
        kappa_samples.push((n, rd.kappa_v_u64()));
        rho_samples.push((n, rd.rho_v_u64()));
        bad_samples.push((n, rd.root_system().bad_primes().into_iter().collect()));
        let mut nhwc = Vec::new();
        let mut ino = Vec::new();
        for p in TABLE_PRIMES {
            let rep = classify(&rd, p)?;
            if !rep.s8_howe_holds {
                nhwc.push(p);
            }
            if !rep.s7_finitely_many_orbits {
                ino.push(p);
            }
        }
        nhwc_samples.push((n, nhwc));
        ino_samples.push((n, ino));
    }
    Ok(IntroTableRow {
        group_label: spec.label.to_string(),
        bad_primes: describe_prime_sets(&bad_samples, spec.parametric)?,
        kappa_v: describe_values(&kappa_samples, spec.parametric)?,
        rho_v: describe_values(&rho_samples, spec.parametric)?,
        nhwc: describe_prime_sets(&nhwc_samples, spec.parametric)?,
        ino: describe_prime_sets(&ino_samples, spec.parametric)?,
    })
}

/// Fit the sampled prime sets to one of the table's condition shapes:
/// a constant set (shown as `-` or `2,3`) or divisibility (`p|n`).
fn describe_prime_sets(samples: &[(usize, Vec<u64>)], parametric: bool) -> Result<String> {
    let divides_pattern = parametric
        && samples.iter().all(|(n, set)| {
            let expect: Vec<u64> = TABLE_PRIMES
                .iter()
                .copied()
                .filter(|p| (*n as u64).is_multiple_of(*p))
                .collect();
            *set == expect
        });
    if divides_pattern {
        return Ok("p|n".to_string());
    }
    let first = &samples[0].1;
    if samples.iter().all(|(_, set)| set == first) {
        if first.is_empty() {
            return Ok("-".to_string());
        }
        let parts: Vec<String> = first.iter().map(u64::to_string).collect();
        return Ok(parts.join(","));
    }
    Err(Error::Invalid(format!(
        "no descriptor pattern fits the sampled prime sets {samples:?}"
    )))
}

fn describe_values(samples: &[(usize, u64)], parametric: bool) -> Result<String> {
    if parametric && samples.iter().all(|(n, v)| *v == *n as u64) {
        return Ok("n".to_string());
    }
    let first = samples[0].1;
    if samples.iter().all(|(_, v)| *v == first) {
        return Ok(first.to_string());
    }
    Err(Error::Invalid(format!(
        "no descriptor pattern fits the sampled values {samples:?}"
    )))
}

/// Outcome of checking the general implications and collecting the four
/// non-implication witnesses over a corpus of (datum, prime) pairs.
#[derive(Debug, Clone, Serialize)]
pub struct AuditReport {
    pub pairs_checked: usize,
    pub violations: Vec<String>,
    /// (1)+(3) without (4), e.g. PGL_p at p
    pub witnesses_13_not_4: Vec<String>,
    /// (1)+(3)+(4) without (2), e.g. GL_p at p
    pub witnesses_134_not_2: Vec<String>,
    /// (1)+(4) without (3), e.g. SL_p at p
    pub witnesses_14_not_3: Vec<String>,
    /// (3)+(4) without (1), the exceptional types at their bad primes
    pub witnesses_34_not_1: Vec<String>,
}

impl AuditReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn all_witnesses_found(&self) -> bool {
        !self.witnesses_13_not_4.is_empty()
            && !self.witnesses_134_not_2.is_empty()
            && !self.witnesses_14_not_3.is_empty()
            && !self.witnesses_34_not_1.is_empty()
    }
}

/// Check `very good => good and p | neither cokernel` and
/// `p | kappa_v => p | det(Cartan)` over the corpus, and record which
/// non-implication witnesses the corpus exhibits.
pub fn implication_audit(corpus: &[(RootDatum, u64)]) -> Result<AuditReport> {
    let mut report = AuditReport {
        pairs_checked: corpus.len(),
        violations: Vec::new(),
        witnesses_13_not_4: Vec::new(),
        witnesses_134_not_2: Vec::new(),
        witnesses_14_not_3: Vec::new(),
        witnesses_34_not_1: Vec::new(),
    };
    for (rd, p) in corpus {
        let rep = classify(rd, *p)?;
        let tag = format!("{} at p={p}", rep.group_label);
        if rep.s2_very_good
            && !(rep.s1_good && rep.s3_p_not_div_kappa && rep.s4_p_not_div_rho)
        {
            report
                .violations
                .push(format!("{tag}: very good but (1)+(3)+(4) fails"));
        }
        if !rep.s3_p_not_div_kappa {
            let det = rd.root_system().cartan_determinant();
            if !(det % *p).is_zero() {
                report
                    .violations
                    .push(format!("{tag}: p | kappa_v but p does not divide det(Cartan)"));
            }
        }
        if rep.s1_good && rep.s3_p_not_div_kappa && !rep.s4_p_not_div_rho {
            report.witnesses_13_not_4.push(tag.clone());
        }
        if rep.s1_good && rep.s3_p_not_div_kappa && rep.s4_p_not_div_rho && !rep.s2_very_good {
            report.witnesses_134_not_2.push(tag.clone());
        }
        if rep.s1_good && rep.s4_p_not_div_rho && !rep.s3_p_not_div_kappa {
            report.witnesses_14_not_3.push(tag.clone());
        }
        if rep.s3_p_not_div_kappa && rep.s4_p_not_div_rho && !rep.s1_good {
            report.witnesses_34_not_1.push(tag);
        }
    }
    Ok(report)
}

/// The standard witness corpus: SL_p, GL_p, PGL_p at p in {2,3,5,7} plus the
/// exceptional types at their bad primes.
pub fn witness_corpus() -> Result<Vec<(RootDatum, u64)>> {
    let mut corpus = Vec::new();
    for p in [2usize, 3, 5, 7] {
        for fam in ["SL", "GL", "PGL"] {
            corpus.push((datum_from_str(&format!("{fam}:{p}"))?, p as u64));
        }
    }
    for (s, p) in [("ad:G2", 2), ("ad:F4", 3), ("ad:E8", 5), ("sc:E7", 3)] {
        corpus.push((datum_from_str(s)?, p));
    }
    Ok(corpus)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rep(s: &str, p: u64) -> ClassificationReport {
        classify(&datum_from_str(s).unwrap(), p).unwrap()
    }

    #[test]
    fn sl5_at_5() {
        let r = rep("SL:5", 5);
        assert!(!r.s7_finitely_many_orbits);
        assert!(!r.s8_howe_holds);
        assert_eq!(r.kappa_v, 5);
    }

    #[test]
    fn pgl5_at_5() {
        let r = rep("PGL:5", 5);
        assert!(r.s8_howe_holds);
        assert!(!r.s7_finitely_many_orbits);
        assert_eq!(r.kappa_v, 1);
        assert_eq!(r.rho_v, 5);
    }

    #[test]
    fn adjoint_g2_at_5() {
        let r = rep("ad:G2", 5);
        assert!(
            r.s1_good
                && r.s2_very_good
                && r.s3_p_not_div_kappa
                && r.s4_p_not_div_rho
                && r.s5_all_separable
                && r.s6_regular_separable
                && r.s7_finitely_many_orbits
                && r.s8_howe_holds
        );
    }

    #[test]
    fn so3_at_2_howe_holds_despite_infinite_orbits() {
        // SO_3 = PGL_2 has root system A_1, so 2 is good and kappa_v = 1:
        // Howe holds even though rho_v = 2 makes the orbit count infinite
        let r = rep("SOodd:3", 2);
        assert!(r.s1_good);
        assert!(r.s8_howe_holds);
        assert!(!r.s7_finitely_many_orbits);
        assert!(!r.s5_all_separable);
    }

    #[test]
    fn sp6_at_2() {
        let r = rep("Sp:6", 2);
        assert!(!r.s1_good);
        assert!(!r.s8_howe_holds);
        assert!(!r.s7_finitely_many_orbits);
    }

    #[test]
    fn equivalence_invariants_hold() {
        for s in ["SL:4", "PGL:6", "SOodd:7", "SOeven:8", "Sp:4", "ad:E6", "GL:3"] {
            for p in [2u64, 3, 5, 7, 11] {
                let r = rep(s, p);
                let conj = r.s1_good && r.s3_p_not_div_kappa && r.s4_p_not_div_rho;
                assert_eq!(r.s5_all_separable, conj);
                assert_eq!(r.s6_regular_separable, conj);
                assert_eq!(r.s7_finitely_many_orbits, conj);
                assert_eq!(r.s8_howe_holds, r.s1_good && r.s3_p_not_div_kappa);
                if r.s2_very_good {
                    assert!(conj);
                }
            }
        }
    }

    #[test]
    fn classify_rejects_non_prime() {
        let d = datum_from_str("SL:2").unwrap();
        assert!(classify(&d, 4).is_err());
    }

    #[test]
    fn classify_is_pure() {
        let d = datum_from_str("SOeven:10").unwrap();
        assert_eq!(classify(&d, 3).unwrap(), classify(&d, 3).unwrap());
    }

    #[test]
    fn nhwc_subset_of_ino() {
        for s in ["SL:6", "PGL:4", "SOodd:9", "Sp:8", "ad:F4", "GL:7"] {
            let d = datum_from_str(s).unwrap();
            for p in [2u64, 3, 5, 7] {
                let r = classify(&d, p).unwrap();
                if !r.s8_howe_holds {
                    assert!(!r.s7_finitely_many_orbits, "{s} at {p}");
                }
            }
        }
    }

    #[test]
    fn table_matches_published_rows() {
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
        assert_eq!(table.rows.len(), expect.len());
        for (row, e) in table.rows.iter().zip(&expect) {
            assert_eq!(row.group_label, e[0]);
            assert_eq!(row.bad_primes, e[1], "bad primes for {}", e[0]);
            assert_eq!(row.kappa_v, e[2], "kappa for {}", e[0]);
            assert_eq!(row.rho_v, e[3], "rho for {}", e[0]);
            assert_eq!(row.nhwc, e[4], "nHwC for {}", e[0]);
            assert_eq!(row.ino, e[5], "INO for {}", e[0]);
        }
    }

    #[test]
    fn audit_finds_each_witness() {
        let corpus = vec![(datum_from_str("SL:3").unwrap(), 3u64)];
        let audit = implication_audit(&corpus).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.witnesses_14_not_3.len(), 1);

        let corpus = vec![(datum_from_str("GL:5").unwrap(), 5u64)];
        let audit = implication_audit(&corpus).unwrap();
        assert_eq!(audit.witnesses_134_not_2.len(), 1);

        let corpus = vec![(datum_from_str("PGL:7").unwrap(), 7u64)];
        let audit = implication_audit(&corpus).unwrap();
        assert_eq!(audit.witnesses_13_not_4.len(), 1);

        let corpus = vec![(datum_from_str("ad:E8").unwrap(), 5u64)];
        let audit = implication_audit(&corpus).unwrap();
        assert_eq!(audit.witnesses_34_not_1.len(), 1);
    }

    #[test]
    fn audit_empty_corpus_passes() {
        let audit = implication_audit(&[]).unwrap();
        assert!(audit.passed());
        assert_eq!(audit.pairs_checked, 0);
    }

    #[test]
    fn audit_full_corpus() {
        let corpus = witness_corpus().unwrap();
        let audit = implication_audit(&corpus).unwrap();
        assert!(audit.passed());
        assert!(audit.all_witnesses_found());
    }
}
