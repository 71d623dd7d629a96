//! Root data for standard split groups: character/cocharacter lattices with
//! simple-root and simple-coroot coordinate matrices, the induced maps
//! Phi and Phi^vee, and the invariants kappa_v, rho_v and the regular-orbit
//! exponents read off their Smith normal forms.
//!
//! `root_coords` holds the simple roots as rows, written in a fixed basis of
//! X*(T); `coroot_coords` holds the simple coroots as rows in the dual basis
//! of X_*(T). With dual bases, the matrix of Phi: X_* -> Hom(Z Delta, Z) is
//! exactly `root_coords` and the matrix of Phi^vee is `coroot_coords`.
//! The Hom target is taken against Z Delta, which equals Z R.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{require_prime, Error, Result};
use crate::intlinalg::{smith_normal_form, torsion_cokernel_order, IntMatrix};
use crate::root_system::{Family, RootSystem, RootSystemType};

/// A standard split group, or a torus factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupSpec {
    /// GL_n, n >= 1
    Gl(usize),
    /// SL_n, n >= 2
    Sl(usize),
    /// PGL_n, n >= 2
    Pgl(usize),
    /// SO_m with m = 2n+1 >= 3 odd
    SoOdd(usize),
    /// SO_m with m = 2n >= 4 even
    SoEven(usize),
    /// Sp_m with m = 2n >= 2 even
    Sp(usize),
    /// Simply connected group of the given simple type
    SimplyConnected(RootSystemType),
    /// Adjoint group of the given simple type
    Adjoint(RootSystemType),
    /// Split torus of the given rank
    Torus(usize),
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Gl(n) => write!(f, "GL:{n}"),
            GroupSpec::Sl(n) => write!(f, "SL:{n}"),
            GroupSpec::Pgl(n) => write!(f, "PGL:{n}"),
            GroupSpec::SoOdd(m) => write!(f, "SOodd:{m}"),
            GroupSpec::SoEven(m) => write!(f, "SOeven:{m}"),
            GroupSpec::Sp(m) => write!(f, "Sp:{m}"),
            GroupSpec::SimplyConnected(t) => write!(f, "sc:{t}"),
            GroupSpec::Adjoint(t) => write!(f, "ad:{t}"),
            GroupSpec::Torus(r) => write!(f, "T:{r}"),
        }
    }
}

/// Parse one product factor, reporting errors at absolute position `offset`.
fn parse_factor(s: &str, offset: usize) -> Result<GroupSpec> {
    let Some(colon) = s.find(':') else {
        return Err(Error::parse(
            offset + s.len(),
            "expected ':' after group family",
        ));
    };
    let (head, tail) = (&s[..colon], &s[colon + 1..]);
    let param_pos = offset + colon + 1;
    let numeric = |tail: &str| -> Result<usize> {
        if tail.is_empty() || !tail.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(param_pos, "expected a number"));
        }
        tail.parse()
            .map_err(|_| Error::parse(param_pos, "number out of range"))
    };
    let spec = match head {
        "GL" => GroupSpec::Gl(numeric(tail)?),
        "SL" => GroupSpec::Sl(numeric(tail)?),
        "PGL" => GroupSpec::Pgl(numeric(tail)?),
        "SOodd" => GroupSpec::SoOdd(numeric(tail)?),
        "SOeven" => GroupSpec::SoEven(numeric(tail)?),
        "Sp" => GroupSpec::Sp(numeric(tail)?),
        "T" => GroupSpec::Torus(numeric(tail)?),
        "sc" => GroupSpec::SimplyConnected(RootSystemType::parse_at(tail, param_pos)?),
        "ad" => GroupSpec::Adjoint(RootSystemType::parse_at(tail, param_pos)?),
        other => {
            return Err(Error::parse(
                offset,
                format!("unknown group family `{other}` (expected GL, SL, PGL, SOodd, SOeven, Sp, sc, ad or T)"),
            ));
        }
    };
    validate(&spec, offset)?;
    Ok(spec)
}

fn validate(spec: &GroupSpec, offset: usize) -> Result<()> {
    let bad = |msg: &str| Err(Error::parse(offset, msg.to_string()));
    match *spec {
        GroupSpec::Gl(n) if n < 1 => bad("GL needs n >= 1"),
        GroupSpec::Sl(n) if n < 2 => bad("SL needs n >= 2"),
        GroupSpec::Pgl(n) if n < 2 => bad("PGL needs n >= 2"),
        GroupSpec::SoOdd(m) if m < 3 || m % 2 == 0 => bad("SOodd needs an odd size >= 3"),
        GroupSpec::SoEven(m) if m < 4 || m % 2 == 1 => bad("SOeven needs an even size >= 4"),
        GroupSpec::Sp(m) if m < 2 || m % 2 == 1 => bad("Sp needs an even size >= 2"),
        GroupSpec::Torus(r) if r < 1 => bad("T needs rank >= 1"),
        _ => Ok(()),
    }
}

/// Parse a product expression such as `SL:2xPGL:3xT:1`.
///
/// Grammar:
/// ```text
/// spec    := factor ( "x" factor )*
/// factor  := ("GL" | "SL" | "PGL" | "SOodd" | "SOeven" | "Sp" | "T") ":" number
///          | ("sc" | "ad") ":" type
/// type    := ("A".."G") number        # e.g. E6, D4
/// ```
/// `SOodd:m` is SO_m for odd m >= 3, `SOeven:m` is SO_m for even m >= 4,
/// `Sp:m` is Sp_m for even m >= 2. Errors carry the byte position of the
/// offending token.
pub fn parse_group_spec(s: &str) -> Result<Vec<GroupSpec>> {
    if s.is_empty() {
        return Err(Error::parse(0, "empty group spec"));
    }
    let mut specs = Vec::new();
    let mut pos = 0usize;
    for part in s.split('x') {
        if part.is_empty() {
            return Err(Error::parse(pos, "empty product factor"));
        }
        specs.push(parse_factor(part, pos)?);
        pos += part.len() + 1;
    }
    Ok(specs)
}

/// Build the root datum of a (product of) standard group(s) from its spec
/// string.
pub fn datum_from_str(s: &str) -> Result<RootDatum> {
    let specs = parse_group_spec(s)?;
    let mut data = specs.iter().map(RootDatum::standard);
    let mut acc = data.next().expect("at least one factor")?;
    for d in data {
        acc = acc.product(&d?);
    }
    Ok(acc)
}

/// A root datum: lattices with coordinates for simple roots and coroots.
#[derive(Debug, Clone)]
pub struct RootDatum {
    label: String,
    lattice_rank: usize,
    root_system: RootSystem,
    root_coords: IntMatrix,
    coroot_coords: IntMatrix,
}

impl RootDatum {
    /// Assemble and validate a root datum. The pairing of the coordinate
    /// matrices must reproduce the Cartan pairing of the root system:
    /// `(root_coords * coroot_coords^T)[i][j] = <alpha_i, alpha_j^vee>
    /// = cartan[j][i]`.
    pub fn new(
        label: impl Into<String>,
        root_system: RootSystem,
        lattice_rank: usize,
        root_coords: IntMatrix,
        coroot_coords: IntMatrix,
    ) -> Result<RootDatum> {
        let n = root_system.rank();
        if root_coords.rows() != n
            || coroot_coords.rows() != n
            || root_coords.cols() != lattice_rank
            || coroot_coords.cols() != lattice_rank
        {
            return Err(Error::Invalid(format!(
                "coordinate matrices must be {n} x {lattice_rank}"
            )));
        }
        let pairing = root_coords.mul(&coroot_coords.transpose());
        let expected = root_system.cartan_matrix().transpose();
        if pairing != expected {
            return Err(Error::Invalid(format!(
                "pairing mismatch: root_coords * coroot_coords^T = {pairing}, expected {expected}"
            )));
        }
        Ok(RootDatum {
            label: label.into(),
            lattice_rank,
            root_system,
            root_coords,
            coroot_coords,
        })
    }

    /// The root datum of a standard group.
    pub fn standard(spec: &GroupSpec) -> Result<RootDatum> {
        validate(spec, 0).map_err(|e| Error::InvalidGroup(e.to_string()))?;
        let (rs, rank, roots, coroots): (RootSystem, usize, Vec<Vec<i64>>, Vec<Vec<i64>>) =
            match *spec {
                GroupSpec::Gl(1) => (RootSystem::empty(), 1, vec![], vec![]),
                GroupSpec::Gl(n) => {
                    // X* = Z^n, roots e_i - e_{i+1}, self-dual coroots
                    let rows = chain_rows(n - 1, n);
                    (
                        RootSystem::simple(RootSystemType::new(Family::A, n - 1)?),
                        n,
                        rows.clone(),
                        rows,
                    )
                }
                GroupSpec::Sl(n) => {
                    // X_* = coroot lattice in its own basis
                    let rs = RootSystem::simple(RootSystemType::new(Family::A, n - 1)?);
                    let roots = transpose_i64(rs.cartan());
                    let coroots = identity_rows(n - 1);
                    (rs, n - 1, roots, coroots)
                }
                GroupSpec::Pgl(n) => {
                    // dual of SL_n: X* = root lattice in its own basis
                    let rs = RootSystem::simple(RootSystemType::new(Family::A, n - 1)?);
                    let roots = identity_rows(n - 1);
                    let coroots = rs.cartan().to_vec();
                    (rs, n - 1, roots, coroots)
                }
                GroupSpec::SoOdd(m) => {
                    let n = (m - 1) / 2;
                    // roots +-e_i +- e_j, +-e_i on X* = Z^n; alpha_n = e_n short
                    let ty = if n == 1 {
                        RootSystemType::new(Family::A, 1)?
                    } else {
                        RootSystemType::new(Family::B, n)?
                    };
                    let mut roots = chain_rows(n - 1, n);
                    let mut last = vec![0; n];
                    last[n - 1] = 1;
                    roots.push(last);
                    let mut coroots = chain_rows(n - 1, n);
                    let mut last = vec![0; n];
                    last[n - 1] = 2;
                    coroots.push(last);
                    (RootSystem::simple(ty), n, roots, coroots)
                }
                GroupSpec::Sp(m) => {
                    let n = m / 2;
                    // roots +-e_i +- e_j, +-2e_i; alpha_n = 2 e_n long
                    let ty = if n == 1 {
                        RootSystemType::new(Family::A, 1)?
                    } else {
                        RootSystemType::new(Family::C, n)?
                    };
                    let mut roots = chain_rows(n - 1, n);
                    let mut last = vec![0; n];
                    last[n - 1] = 2;
                    roots.push(last);
                    let mut coroots = chain_rows(n - 1, n);
                    let mut last = vec![0; n];
                    last[n - 1] = 1;
                    coroots.push(last);
                    (RootSystem::simple(ty), n, roots, coroots)
                }
                GroupSpec::SoEven(m) => {
                    let n = m / 2;
                    // roots +-e_i +- e_j, all long, self-dual
                    let rs = if n == 2 {
                        // D_2 = A_1 x A_1: e_1 - e_2 and e_1 + e_2
                        RootSystem::build(&[
                            RootSystemType::new(Family::A, 1)?,
                            RootSystemType::new(Family::A, 1)?,
                        ])
                    } else {
                        RootSystem::simple(RootSystemType::new(Family::D, n)?)
                    };
                    let mut rows = chain_rows(n - 1, n);
                    let mut last = vec![0; n];
                    last[n - 2] = 1;
                    last[n - 1] = 1;
                    if n == 2 {
                        rows = vec![vec![1, -1]];
                    }
                    rows.push(last);
                    (rs, n, rows.clone(), rows)
                }
                GroupSpec::SimplyConnected(t) => {
                    let rs = RootSystem::simple(t);
                    let roots = transpose_i64(rs.cartan());
                    let coroots = identity_rows(t.rank);
                    (rs, t.rank, roots, coroots)
                }
                GroupSpec::Adjoint(t) => {
                    let rs = RootSystem::simple(t);
                    let roots = identity_rows(t.rank);
                    let coroots = rs.cartan().to_vec();
                    (rs, t.rank, roots, coroots)
                }
                GroupSpec::Torus(r) => (RootSystem::empty(), r, vec![], vec![]),
            };
        let n = rs.rank();
        RootDatum::new(
            spec.to_string(),
            rs,
            rank,
            matrix_from(&roots, n, rank),
            matrix_from(&coroots, n, rank),
        )
    }

    /// Block direct sum of two data.
    pub fn product(&self, other: &RootDatum) -> RootDatum {
        let mut types = self.root_system.components().to_vec();
        types.extend_from_slice(other.root_system.components());
        let rs = RootSystem::build(&types);
        let rank = self.lattice_rank + other.lattice_rank;
        let block = |a: &IntMatrix, b: &IntMatrix| -> IntMatrix {
            let mut m = IntMatrix::zero(a.rows() + b.rows(), rank);
            for i in 0..a.rows() {
                for j in 0..a.cols() {
                    m[(i, j)] = a[(i, j)].clone();
                }
            }
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m[(a.rows() + i, self.lattice_rank + j)] = b[(i, j)].clone();
                }
            }
            m
        };
        let root_coords = block(&self.root_coords, &other.root_coords);
        let coroot_coords = block(&self.coroot_coords, &other.coroot_coords);
        RootDatum::new(
            format!("{}x{}", self.label, other.label),
            rs,
            rank,
            root_coords,
            coroot_coords,
        )
        .expect("product of valid data is valid")
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn lattice_rank(&self) -> usize {
        self.lattice_rank
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.root_system
    }

    pub fn root_coords(&self) -> &IntMatrix {
        &self.root_coords
    }

    pub fn coroot_coords(&self) -> &IntMatrix {
        &self.coroot_coords
    }

    /// |Delta| == lattice rank.
    pub fn is_semisimple(&self) -> bool {
        self.root_system.rank() == self.lattice_rank
    }

    /// Matrix of Phi: X_*(T) -> Hom(Z Delta, Z), gamma |-> (alpha |-> <gamma, alpha>).
    /// Entry (i, j) = <gamma_j, alpha_i> over the dual basis gamma_j of X_*.
    pub fn phi_matrix(&self) -> IntMatrix {
        self.root_coords.clone()
    }

    /// Matrix of Phi^vee: X*(T) -> Hom(Z Delta^vee, Z).
    pub fn phi_vee_matrix(&self) -> IntMatrix {
        self.coroot_coords.clone()
    }

    /// kappa_v = |coker Phi|, the virtual number of components of Z(G).
    pub fn kappa_v(&self) -> BigInt {
        torsion_cokernel_order(&self.phi_matrix())
    }

    /// rho_v = |coker Phi^vee|, the virtual order of pi_1(G_der).
    pub fn rho_v(&self) -> BigInt {
        torsion_cokernel_order(&self.phi_vee_matrix())
    }

    /// The invariant factors d_1 | ... | d_{|Delta|} of Phi. Over a field of
    /// characteristic p there are infinitely many regular nilpotent orbits
    /// iff p | d_{|Delta|}, i.e. iff p | kappa_v.
    pub fn regular_orbit_exponents(&self) -> Vec<BigInt> {
        let snf = smith_normal_form(&self.phi_matrix());
        debug_assert!(snf.diag.iter().all(|d| !d.is_zero()));
        snf.diag
    }

    /// Whether the simple coroots H_alpha = d alpha^vee(1) become linearly
    /// dependent in t = X_*(T) (x) F_p. Equivalent to p | rho_v.
    pub fn coroots_dependent_mod_p(&self, p: u64) -> Result<bool> {
        require_prime(p)?;
        Ok(self.coroot_coords.rank_mod_p(p)? < self.root_system.rank())
    }

    pub(crate) fn kappa_v_u64(&self) -> u64 {
        u64::try_from(&self.kappa_v()).expect("kappa_v fits in u64 at desk scale")
    }

    pub(crate) fn rho_v_u64(&self) -> u64 {
        u64::try_from(&self.rho_v()).expect("rho_v fits in u64 at desk scale")
    }
}

fn identity_rows(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        })
        .collect()
}

/// Rows e_i - e_{i+1} for i = 0..count in width `width`.
fn chain_rows(count: usize, width: usize) -> Vec<Vec<i64>> {
    (0..count)
        .map(|i| {
            let mut v = vec![0; width];
            v[i] = 1;
            v[i + 1] = -1;
            v
        })
        .collect()
}

fn transpose_i64(m: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = m.len();
    (0..n).map(|i| (0..n).map(|j| m[j][i]).collect()).collect()
}

fn matrix_from(rows: &[Vec<i64>], expect_rows: usize, cols: usize) -> IntMatrix {
    if rows.is_empty() {
        return IntMatrix::zero(expect_rows, cols);
    }
    IntMatrix::from_rows(rows)
}
