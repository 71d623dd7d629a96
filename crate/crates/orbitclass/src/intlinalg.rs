//! Exact integer linear algebra: Smith normal form with unimodular
//! transforms, fraction-free determinants, rank over F_p, and cokernel
//! torsion orders.
//!
//! The three routes are deliberately independent of each other so they can
//! cross-check: `smith_normal_form` is a pivot-gcd reduction,
//! `determinant` is Bareiss elimination, and `rank_mod_p` is plain Gaussian
//! elimination over F_p.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{require_prime, Error, Result};

/// Dense integer matrix with arbitrary-precision entries, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<BigInt>,
}

impl IntMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<BigInt>) -> Self {
        assert_eq!(entries.len(), rows * cols, "entry count mismatch");
        IntMatrix {
            rows,
            cols,
            entries,
        }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            entries: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        for row in rows {
            assert_eq!(row.len(), c, "ragged rows");
        }
        let entries = rows
            .iter()
            .flat_map(|row| row.iter().map(|&x| BigInt::from(x)))
            .collect();
        IntMatrix::new(r, c, entries)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, other.rows, "dimension mismatch in mul");
        let mut out = IntMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a * &other[(k, j)];
                    out[(i, j)] += prod;
                }
            }
        }
        out
    }

    /// Vertical concatenation; both operands must have the same width.
    pub fn stack(&self, below: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, below.cols, "width mismatch in stack");
        let mut entries = self.entries.clone();
        entries.extend_from_slice(&below.entries);
        IntMatrix::new(self.rows + below.rows, self.cols, entries)
    }

    /// Exact determinant via Bareiss fraction-free elimination.
    pub fn determinant(&self) -> Result<BigInt> {
        if self.rows != self.cols {
            return Err(Error::NonSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(BigInt::one());
        }
        let mut a = self.clone();
        let mut sign = 1i64;
        let mut prev = BigInt::one();
        for k in 0..n - 1 {
            if a[(k, k)].is_zero() {
                // find a row to swap in
                let mut found = None;
                for i in k + 1..n {
                    if !a[(i, k)].is_zero() {
                        found = Some(i);
                        break;
                    }
                }
                match found {
                    Some(i) => {
                        a.swap_rows(k, i);
                        sign = -sign;
                    }
                    None => return Ok(BigInt::zero()),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &a[(k, k)] * &a[(i, j)] - &a[(i, k)] * &a[(k, j)];
                    a[(i, j)] = num / &prev; // exact division in Bareiss
                }
                a[(i, k)] = BigInt::zero();
            }
            prev = a[(k, k)].clone();
        }
        let det = a[(n - 1, n - 1)].clone();
        Ok(if sign < 0 { -det } else { det })
    }

    /// Rank of the matrix with entries reduced mod p, by Gaussian
    /// elimination over F_p.
    pub fn rank_mod_p(&self, p: u64) -> Result<usize> {
        require_prime(p)?;
        let pb = BigInt::from(p);
        let mut a: Vec<Vec<u64>> = (0..self.rows)
            .map(|i| {
                (0..self.cols)
                    .map(|j| {
                        let mut r = &self[(i, j)] % &pb;
                        if r.sign() == num_bigint::Sign::Minus {
                            r += &pb;
                        }
                        u64::try_from(r).expect("residue fits in u64")
                    })
                    .collect()
            })
            .collect();
        let mut rank = 0usize;
        let mut col = 0usize;
        while rank < self.rows && col < self.cols {
            let pivot = (rank..self.rows).find(|&i| !a[i][col].is_multiple_of(p));
            let Some(pi) = pivot else {
                col += 1;
                continue;
            };
            a.swap(rank, pi);
            let inv = mod_inverse(a[rank][col] % p, p);
            for j in col..self.cols {
                a[rank][j] = a[rank][j] % p * inv % p;
            }
            for i in 0..self.rows {
                if i != rank && !a[i][col].is_multiple_of(p) {
                    let f = a[i][col] % p;
                    for j in col..self.cols {
                        a[i][j] = (a[i][j] + (p - f) * a[rank][j]) % p;
                    }
                }
            }
            rank += 1;
            col += 1;
        }
        Ok(rank)
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.cols {
            self.entries.swap(i * self.cols + c, j * self.cols + c);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.entries.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row i -= q * row j
    fn row_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for c in 0..self.cols {
            let x = q * &self[(j, c)];
            self[(i, c)] -= x;
        }
    }

    /// col i -= q * col j
    fn col_sub(&mut self, i: usize, j: usize, q: &BigInt) {
        if q.is_zero() {
            return;
        }
        for r in 0..self.rows {
            let x = q * &self[(r, j)];
            self[(r, i)] -= x;
        }
    }

    fn negate_row(&mut self, i: usize) {
        for c in 0..self.cols {
            let x = -self[(i, c)].clone();
            self[(i, c)] = x;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.entries[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.entries[i * self.cols + j]
    }
}

impl std::fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self[(i, j)])?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // p prime, a != 0 mod p; extended Euclid
    let (mut t, mut new_t) = (0i128, 1i128);
    let (mut r, mut new_r) = (p as i128, (a % p) as i128);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    assert_eq!(r, 1, "element not invertible");
    ((t % p as i128 + p as i128) % p as i128) as u64
}

/// Smith normal form `U * M * V = D` with `U`, `V` unimodular and the
/// diagonal of `D` nonnegative with each entry dividing the next.
#[derive(Debug, Clone)]
pub struct SmithForm {
    pub diag: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
    pub source_rows: usize,
    pub source_cols: usize,
}

impl SmithForm {
    /// The D = U*M*V matrix, reconstructed from the stored diagonal.
    pub fn diag_matrix(&self) -> IntMatrix {
        let mut d = IntMatrix::zero(self.source_rows, self.source_cols);
        for (i, e) in self.diag.iter().enumerate() {
            d[(i, i)] = e.clone();
        }
        d
    }

    /// Number of nonzero invariant factors.
    pub fn rank(&self) -> usize {
        self.diag.iter().filter(|d| !d.is_zero()).count()
    }
}

/// Kannan–Bachem-style reduction with pivot gcd selection. Matrices in this
/// crate stay below ~200x200 with small entries, so no modular machinery.
pub fn smith_normal_form(m: &IntMatrix) -> SmithForm {
    let rows = m.rows();
    let cols = m.cols();
    let mut a = m.clone();
    let mut u = IntMatrix::identity(rows);
    let mut v = IntMatrix::identity(cols);
    let n = rows.min(cols);

    let mut t = 0usize;
    while t < n {
        // pick the nonzero entry of minimal absolute value in the submatrix
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if !a[(i, j)].is_zero()
                    && pivot.is_none_or(|(pi, pj)| a[(i, j)].abs() < a[(pi, pj)].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else {
            break; // submatrix is zero; trailing invariant factors are 0
        };
        a.swap_rows(t, pi);
        u.swap_rows(t, pi);
        a.swap_cols(t, pj);
        v.swap_cols(t, pj);

        'reduce: loop {
            // clear column t with row operations
            let mut dirty = false;
            for i in 0..rows {
                if i == t || a[(i, t)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(i, t)], &a[(t, t)]);
                a.row_sub(i, t, &q);
                u.row_sub(i, t, &q);
                if !a[(i, t)].is_zero() {
                    // remainder smaller than pivot: promote it
                    a.swap_rows(t, i);
                    u.swap_rows(t, i);
                    dirty = true;
                }
            }
            if dirty {
                continue 'reduce;
            }
            // clear row t with column operations
            for j in 0..cols {
                if j == t || a[(t, j)].is_zero() {
                    continue;
                }
                let q = div_round(&a[(t, j)], &a[(t, t)]);
                a.col_sub(j, t, &q);
                v.col_sub(j, t, &q);
                if !a[(t, j)].is_zero() {
                    a.swap_cols(t, j);
                    v.swap_cols(t, j);
                    dirty = true;
                }
            }
            if dirty {
                continue 'reduce;
            }
            // divisibility: pivot must divide every remaining entry
            for i in t + 1..rows {
                for j in t + 1..cols {
                    if (&a[(i, j)] % &a[(t, t)]).is_zero() {
                        continue;
                    }
                    a.row_sub(t, i, &BigInt::from(-1)); // row t += row i
                    u.row_sub(t, i, &BigInt::from(-1));
                    continue 'reduce;
                }
            }
            break;
        }

        if a[(t, t)].is_negative() {
            a.negate_row(t);
            u.negate_row(t);
        }
        t += 1;
    }

    let diag: Vec<BigInt> = (0..n).map(|i| a[(i, i)].clone()).collect();
    debug_assert!(divisibility_chain_ok(&diag));
    SmithForm {
        diag,
        u,
        v,
        source_rows: rows,
        source_cols: cols,
    }
}

fn divisibility_chain_ok(diag: &[BigInt]) -> bool {
    let mut seen_zero = false;
    for w in diag.windows(2) {
        if w[0].is_zero() {
            seen_zero = true;
        }
        if seen_zero && !w[1].is_zero() {
            return false;
        }
        if !w[0].is_zero() && !(&w[1] % &w[0]).is_zero() {
            return false;
        }
    }
    true
}

/// Quotient rounded to nearest, so the remainder has magnitude at most
/// half the divisor. Keeps entry growth down during the reduction.
fn div_round(a: &BigInt, b: &BigInt) -> BigInt {
    let (q, r) = num_integer::Integer::div_mod_floor(a, b);
    if (&r * 2u8).abs() > b.abs() {
        q + BigInt::one()
    } else {
        q
    }
}

/// Order of the torsion part of the cokernel of M as a map of free
/// Z-modules: the product of the nonzero invariant factors.
pub fn torsion_cokernel_order(m: &IntMatrix) -> BigInt {
    smith_normal_form(m)
        .diag
        .iter()
        .filter(|d| !d.is_zero())
        .product()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf_diag(rows: &[Vec<i64>]) -> Vec<i64> {
        smith_normal_form(&IntMatrix::from_rows(rows))
            .diag
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn snf_1x1() {
        assert_eq!(snf_diag(&[vec![2]]), vec![2]);
    }

    #[test]
    fn snf_cartan_a2() {
        // gcd of entries 1, |det| = 3, so the invariant factors are (1, 3)
        assert_eq!(snf_diag(&[vec![2, -1], vec![-1, 2]]), vec![1, 3]);
    }

    #[test]
    fn snf_d4_bracket_matrix() {
        // |det| = 2, gcd of entries 1, gcd of 2x2 minors 1 => (1, 1, 2)
        assert_eq!(
            snf_diag(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]),
            vec![1, 1, 2]
        );
    }

    #[test]
    fn snf_transforms_reconstruct() {
        let m = IntMatrix::from_rows(&[vec![4, 6, 2], vec![2, 0, 8]]);
        let s = smith_normal_form(&m);
        assert_eq!(s.u.mul(&m).mul(&s.v), s.diag_matrix());
        assert_eq!(s.u.determinant().unwrap().abs(), BigInt::one());
        assert_eq!(s.v.determinant().unwrap().abs(), BigInt::one());
    }

    #[test]
    fn torsion_zero_matrix() {
        assert_eq!(
            torsion_cokernel_order(&IntMatrix::zero(2, 2)),
            BigInt::one()
        );
    }

    #[test]
    fn torsion_cartan_a_series() {
        // coker of the A_{n-1} Cartan matrix has order n
        for n in 2..=9i64 {
            let size = (n - 1) as usize;
            let rows: Vec<Vec<i64>> = (0..size)
                .map(|i| {
                    (0..size)
                        .map(|j| {
                            if i == j {
                                2
                            } else if i.abs_diff(j) == 1 {
                                -1
                            } else {
                                0
                            }
                        })
                        .collect()
                })
                .collect();
            assert_eq!(
                torsion_cokernel_order(&IntMatrix::from_rows(&rows)),
                BigInt::from(n)
            );
        }
    }

    #[test]
    fn torsion_sl2_phi() {
        assert_eq!(
            torsion_cokernel_order(&IntMatrix::from_rows(&[vec![2]])),
            BigInt::from(2)
        );
    }

    #[test]
    fn rank_mod_p_identity() {
        let id = IntMatrix::identity(3);
        for p in [2, 3, 5, 7] {
            assert_eq!(id.rank_mod_p(p).unwrap(), 3);
        }
    }

    #[test]
    fn rank_mod_2_d4_matrix() {
        let m = IntMatrix::from_rows(&[vec![1, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.rank_mod_p(2).unwrap(), 2);
        assert_eq!(m.rank_mod_p(3).unwrap(), 3);
    }

    #[test]
    fn rank_mod_5_e8_height5_matrix() {
        // 7x7 bracket matrix of the height-5 layer map for E_8
        let m = IntMatrix::from_rows(&[
            vec![1, -1, 0, -1, 0, 0, 0],
            vec![1, 0, 0, 0, 0, 0, -1],
            vec![0, 1, 0, 0, 0, 0, 1],
            vec![0, 1, -1, 0, -1, 0, 0],
            vec![0, 0, 1, 0, 0, -1, 0],
            vec![0, 0, 0, 1, -1, 0, 0],
            vec![0, 0, 0, 0, 1, -1, 0],
        ]);
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(5));
        assert_eq!(m.rank_mod_p(5).unwrap(), 6);
    }

    #[test]
    fn rank_mod_p_rejects_composite() {
        let id = IntMatrix::identity(2);
        assert!(matches!(id.rank_mod_p(6), Err(Error::NonPrime(6))));
        assert!(matches!(id.rank_mod_p(1), Err(Error::NonPrime(1))));
    }

    #[test]
    fn determinant_examples() {
        let m = IntMatrix::from_rows(&[vec![2, 1, 0], vec![1, 0, 1], vec![0, 1, 1]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-3));
        let m = IntMatrix::from_rows(&[vec![-1, -1], vec![0, 2]]);
        assert_eq!(m.determinant().unwrap(), BigInt::from(-2));
        assert_eq!(IntMatrix::identity(5).determinant().unwrap(), BigInt::one());
    }

    #[test]
    fn determinant_rejects_non_square() {
        let m = IntMatrix::zero(2, 3);
        assert!(matches!(
            m.determinant(),
            Err(Error::NonSquare { rows: 2, cols: 3 })
        ));
    }
}
