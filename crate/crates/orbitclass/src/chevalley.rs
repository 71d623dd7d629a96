//! The positive nilradical with explicit structure constants.
//!
//! Simply-laced algebras (A/D/E) get their signs from the bi-additive
//! function f on simple pairs: f(i,j) = -1 if i is connected with j and
//! i < j, 1 if i = j, 0 otherwise, extended bi-additively, with
//! c_{alpha,beta} = (-1)^{f(alpha,beta)} whenever alpha + beta is a positive
//! root. Non-simply-laced algebras (B/C/F/G) are obtained exclusively by
//! folding: B_n from D_{n+1}, C_n from A_{2n-1}, G_2 from D_4, F_4 from E_6.
//! Both constructions verify themselves eagerly (antisymmetry and Jacobi for
//! the sign table; automorphism identity, sigma^order = id and fixed-layer
//! dimensions for a folding).
//!
//! Brackets are only ever computed on the positive nilradical; the Cartan
//! part enters through `torus_ad_x_matrix`, which reads the pairing off a
//! root datum.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::intlinalg::IntMatrix;
use crate::root_datum::RootDatum;
use crate::root_system::{Family, RootSystem, RootSystemType};

/// Positive nilradical of a simply-laced algebra with its sign table.
#[derive(Debug)]
pub struct SimplyLacedAlgebra {
    rs: RootSystem,
    /// bracket[i * P + j] = Some((k, sign)) when root_i + root_j = root_k
    bracket_table: Vec<Option<(usize, i64)>>,
}

impl SimplyLacedAlgebra {
    /// Build the algebra and verify antisymmetry and the Jacobi identity on
    /// every positive triple.
    pub fn build(rs: RootSystem) -> Result<SimplyLacedAlgebra> {
        if let Some(c) = rs.components().iter().find(|c| !c.is_simply_laced()) {
            return Err(Error::NotSimplyLaced(c.to_string()));
        }
        let n = rs.rank();
        let p = rs.positive_roots().len();

        // parity of f on simple pairs, as row bitmasks
        assert!(n <= 64, "rank bound for the bitmask representation");
        let mut f_rows = vec![0u64; n];
        for i in 0..n {
            for j in 0..n {
                let connected = i != j && rs.cartan()[i][j] != 0;
                if i == j || (connected && i < j) {
                    f_rows[i] |= 1 << j;
                }
            }
        }
        let masks: Vec<u64> = rs
            .positive_roots()
            .iter()
            .map(|r| {
                r.coeffs()
                    .iter()
                    .enumerate()
                    .fold(0u64, |m, (i, &c)| m | (((c & 1) as u64) << i))
            })
            .collect();
        let parity = |a: usize, b: usize| -> u64 {
            let mut acc = 0u64;
            let mut bits = masks[a];
            while bits != 0 {
                let i = bits.trailing_zeros() as usize;
                acc ^= (f_rows[i] & masks[b]).count_ones() as u64;
                bits &= bits - 1;
            }
            acc & 1
        };

        let mut table: Vec<Option<(usize, i64)>> = vec![None; p * p];
        for a in 0..p {
            for b in 0..p {
                if a == b {
                    continue;
                }
                let sum: Vec<i64> = rs.positive_roots()[a]
                    .coeffs()
                    .iter()
                    .zip(rs.positive_roots()[b].coeffs())
                    .map(|(x, y)| x + y)
                    .collect();
                if let Some(k) = rs.root_index(&sum) {
                    let sign = if parity(a, b) == 1 { -1 } else { 1 };
                    table[a * p + b] = Some((k, sign));
                }
            }
        }

        let alg = SimplyLacedAlgebra {
            rs,
            bracket_table: table,
        };
        alg.verify_antisymmetry()?;
        alg.verify_jacobi()?;
        Ok(alg)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// The signed bracket [e_a, e_b] = sign * e_k, or None when a + b is not
    /// a positive root.
    pub fn bracket(&self, a: usize, b: usize) -> Option<(usize, i64)> {
        self.bracket_table[a * self.rs.positive_roots().len() + b]
    }

    /// c(alpha, beta) in {-1, 0, +1}.
    pub fn structure_constant(&self, a: usize, b: usize) -> i64 {
        self.bracket(a, b).map_or(0, |(_, s)| s)
    }

    fn verify_antisymmetry(&self) -> Result<()> {
        let p = self.rs.positive_roots().len();
        for a in 0..p {
            for b in a + 1..p {
                match (self.bracket(a, b), self.bracket(b, a)) {
                    (None, None) => {}
                    (Some((k1, s1)), Some((k2, s2))) if k1 == k2 && s1 == -s2 => {}
                    _ => {
                        return Err(Error::Invalid(format!(
                            "antisymmetry fails on {} and {}",
                            self.rs.positive_roots()[a],
                            self.rs.positive_roots()[b]
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    fn verify_jacobi(&self) -> Result<()> {
        let p = self.rs.positive_roots().len();
        let term = |a: usize, b: usize, c: usize| -> i64 {
            match self.bracket(a, b) {
                Some((ab, s1)) => s1 * self.structure_constant(ab, c),
                None => 0,
            }
        };
        for a in 0..p {
            for b in a + 1..p {
                for c in b + 1..p {
                    // c(a,b) c(a+b,c) + c(b,c) c(b+c,a) + c(c,a) c(c+a,b)
                    let total = term(a, b, c) + term(b, c, a) + term(c, a, b);
                    if total != 0 {
                        return Err(Error::Invalid(format!(
                            "Jacobi fails on {}, {}, {}",
                            self.rs.positive_roots()[a],
                            self.rs.positive_roots()[b],
                            self.rs.positive_roots()[c]
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Build (or fetch) the simply-laced algebra of one simple type.
pub fn simply_laced(t: RootSystemType) -> Result<Arc<SimplyLacedAlgebra>> {
    static CACHE: OnceLock<Mutex<HashMap<RootSystemType, Arc<SimplyLacedAlgebra>>>> =
        OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(hit) = cache.lock().unwrap().get(&t) {
        return Ok(hit.clone());
    }
    let built = Arc::new(SimplyLacedAlgebra::build(RootSystem::simple(t))?);
    cache
        .lock()
        .unwrap()
        .entry(t)
        .or_insert_with(|| built.clone());
    Ok(built)
}

/// Signed diagram automorphism of a simply-laced algebra.
#[derive(Debug)]
pub struct FoldingAutomorphism {
    ambient: Arc<SimplyLacedAlgebra>,
    target: RootSystemType,
    node_perm: Vec<usize>,
    order: usize,
    /// per positive root: (image root index, sign)
    action: Vec<(usize, i64)>,
}

/// The ambient simply-laced type a simple type folds from.
pub fn folding_ambient(target: RootSystemType) -> Result<RootSystemType> {
    match target.family {
        Family::B => RootSystemType::new(Family::D, target.rank + 1),
        Family::C => RootSystemType::new(Family::A, 2 * target.rank - 1),
        Family::F => RootSystemType::new(Family::E, 6),
        Family::G => RootSystemType::new(Family::D, 4),
        _ => Err(Error::UnsupportedFolding {
            ambient: "-".into(),
            target: target.to_string(),
        }),
    }
}

fn folding_perm(ambient: RootSystemType, target: RootSystemType) -> Result<(Vec<usize>, usize)> {
    let unsupported = || Error::UnsupportedFolding {
        ambient: ambient.to_string(),
        target: target.to_string(),
    };
    let m = ambient.rank;
    match (ambient.family, target.family) {
        (Family::D, Family::B) if target.rank + 1 == m => {
            // swap the two fork ends
            let mut p: Vec<usize> = (0..m).collect();
            p.swap(m - 2, m - 1);
            Ok((p, 2))
        }
        (Family::A, Family::C) if 2 * target.rank == m + 1 => {
            let p: Vec<usize> = (0..m).rev().collect();
            Ok((p, 2))
        }
        (Family::D, Family::G) if m == 4 && target.rank == 2 => {
            // triality: rotate the three outer nodes 1, 3, 4 (Bourbaki)
            Ok((vec![2, 1, 3, 0], 3))
        }
        (Family::E, Family::F) if m == 6 && target.rank == 4 => {
            // 1 <-> 6, 3 <-> 5 (Bourbaki), nodes 2 and 4 fixed
            Ok((vec![5, 1, 4, 3, 2, 0], 2))
        }
        _ => Err(unsupported()),
    }
}

/// Construct the signed folding automorphism `ambient -> target` and verify
/// it exhaustively.
pub fn build_folding(
    ambient_type: RootSystemType,
    target: RootSystemType,
) -> Result<FoldingAutomorphism> {
    let (perm, order) = folding_perm(ambient_type, target)?;
    let ambient = simply_laced(ambient_type)?;
    let rs = ambient.root_system();
    let n = rs.rank();

    // diagram automorphism check
    for i in 0..n {
        for j in 0..n {
            if rs.cartan()[perm[i]][perm[j]] != rs.cartan()[i][j] {
                return Err(Error::FoldingVerification {
                    ambient: ambient_type.to_string(),
                    target: target.to_string(),
                    detail: "node permutation is not a diagram automorphism".into(),
                });
            }
        }
    }

    let target_dims = RootSystem::simple(target).layer_dims();
    for signs in generator_sign_candidates(&perm, order) {
        if let Some(action) = extend_action(&ambient, &perm, &signs) {
            let fold = FoldingAutomorphism {
                ambient: ambient.clone(),
                target,
                node_perm: perm.clone(),
                order,
                action,
            };
            if fold.is_automorphism()
                && fold.has_order()
                && fold.fixed_layer_dims() == target_dims
            {
                return Ok(fold);
            }
        }
    }
    Err(Error::FoldingVerification {
        ambient: ambient_type.to_string(),
        target: target.to_string(),
        detail: "no generator sign assignment yields an automorphism".into(),
    })
}

/// Sign assignments on the simple generators compatible with
/// sigma^order = id, ordered with the all-plus assignment first.
fn generator_sign_candidates(perm: &[usize], order: usize) -> Vec<Vec<i64>> {
    let n = perm.len();
    let mut seen = vec![false; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = perm[start];
        while cur != start {
            seen[cur] = true;
            orbit.push(cur);
            cur = perm[cur];
        }
        orbits.push(orbit);
    }
    // per-orbit sign patterns whose product is 1
    let per_orbit: Vec<Vec<Vec<i64>>> = orbits
        .iter()
        .map(|orbit| match (orbit.len(), order) {
            (1, 2) => vec![vec![1], vec![-1]],
            (1, _) => vec![vec![1]],
            (2, _) => vec![vec![1, 1], vec![-1, -1]],
            (3, _) => vec![
                vec![1, 1, 1],
                vec![1, -1, -1],
                vec![-1, 1, -1],
                vec![-1, -1, 1],
            ],
            _ => unreachable!("orbit size divides the order"),
        })
        .collect();
    let mut out: Vec<Vec<i64>> = vec![vec![1; n]];
    let mut partial: Vec<Vec<i64>> = vec![vec![1; n]];
    for (orbit, patterns) in orbits.iter().zip(&per_orbit) {
        let mut next = Vec::new();
        for assignment in &partial {
            for pat in patterns {
                let mut a = assignment.clone();
                for (node, s) in orbit.iter().zip(pat) {
                    a[*node] = *s;
                }
                next.push(a);
            }
        }
        partial = next;
    }
    partial.sort_by_key(|a| a.iter().filter(|s| **s < 0).count());
    for a in partial {
        if !out.contains(&a) {
            out.push(a);
        }
    }
    out
}

/// Propagate generator signs to all positive roots along the canonical
/// decomposition (lowest-index simple root splitting off). Roots are already
/// ordered by height, so the recursion sees its dependencies first.
fn extend_action(
    alg: &SimplyLacedAlgebra,
    perm: &[usize],
    gen_signs: &[i64],
) -> Option<Vec<(usize, i64)>> {
    let rs = alg.root_system();
    let n = rs.rank();
    let p = rs.positive_roots().len();
    let image_index = |idx: usize| -> usize {
        let c = rs.positive_roots()[idx].coeffs();
        let mut img = vec![0i64; n];
        for i in 0..n {
            img[perm[i]] = c[i];
        }
        rs.root_index(&img).expect("image of a root is a root")
    };
    let simple_index =
        |i: usize| -> usize { rs.root_index(rs.simple_roots()[i].coeffs()).unwrap() };

    let mut action: Vec<(usize, i64)> = vec![(0, 0); p];
    for (idx, root) in rs.positive_roots().iter().enumerate() {
        if root.height() == 1 {
            let node = root.coeffs().iter().position(|&c| c == 1).unwrap();
            action[idx] = (image_index(idx), gen_signs[node]);
            continue;
        }
        let i = (0..n).find(|&i| {
            let mut down = root.coeffs().to_vec();
            down[i] -= 1;
            down[i] >= 0 && rs.is_positive_root(&down)
        })?;
        let mut rest = root.coeffs().to_vec();
        rest[i] -= 1;
        let rest_idx = rs.root_index(&rest).unwrap();
        let si = simple_index(i);
        let c = alg.structure_constant(si, rest_idx);
        debug_assert_ne!(c, 0);
        let c_img = alg.structure_constant(action[si].0, action[rest_idx].0);
        if c_img == 0 {
            return None;
        }
        let sign = action[si].1 * action[rest_idx].1 * c_img * c;
        action[idx] = (image_index(idx), sign);
    }
    Some(action)
}

impl FoldingAutomorphism {
    pub fn ambient(&self) -> &Arc<SimplyLacedAlgebra> {
        &self.ambient
    }

    pub fn target(&self) -> RootSystemType {
        self.target
    }

    pub fn node_permutation(&self) -> &[usize] {
        &self.node_perm
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// sigma(e_idx) = sign * e_image.
    pub fn apply(&self, idx: usize) -> (usize, i64) {
        self.action[idx]
    }

    /// sigma[e_a, e_b] = [sigma e_a, sigma e_b] on every positive pair.
    pub fn is_automorphism(&self) -> bool {
        let p = self.ambient.root_system().positive_roots().len();
        for a in 0..p {
            for b in a + 1..p {
                let (ia, sa) = self.action[a];
                let (ib, sb) = self.action[b];
                match (self.ambient.bracket(a, b), self.ambient.bracket(ia, ib)) {
                    (None, None) => {}
                    (Some((k, c)), Some((k2, c2))) => {
                        let (ik, sk) = self.action[k];
                        if ik != k2 || c * sk != sa * sb * c2 {
                            return false;
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// sigma^order fixes every basis vector with sign +1.
    pub fn has_order(&self) -> bool {
        let p = self.ambient.root_system().positive_roots().len();
        (0..p).all(|start| {
            let (mut idx, mut sign) = (start, 1i64);
            for _ in 0..self.order {
                let (next, s) = self.action[idx];
                idx = next;
                sign *= s;
            }
            idx == start && sign == 1
        })
    }

    /// Orbits of sigma on the positive roots, each listed from its
    /// lowest-index representative in sigma-application order.
    fn orbits(&self) -> Vec<Vec<usize>> {
        let p = self.ambient.root_system().positive_roots().len();
        let mut seen = vec![false; p];
        let mut orbits = Vec::new();
        for start in 0..p {
            if seen[start] {
                continue;
            }
            let mut orbit = vec![start];
            seen[start] = true;
            let mut cur = self.action[start].0;
            while cur != start {
                seen[cur] = true;
                orbit.push(cur);
                cur = self.action[cur].0;
            }
            orbits.push(orbit);
        }
        orbits
    }

    /// The sigma-fixed subspace of each height layer, as signed orbit sums.
    /// An orbit contributes one basis vector exactly when the signs close up
    /// around the cycle (they always do except for a sign -1 fixed root).
    pub fn fixed_layer_bases(&self) -> Vec<Vec<BasisVector>> {
        let rs = self.ambient.root_system();
        let mut layers: Vec<Vec<BasisVector>> = vec![Vec::new(); rs.max_height()];
        for orbit in self.orbits() {
            let mut vector: Vec<(usize, i64)> = Vec::with_capacity(orbit.len());
            let mut acc = 1i64;
            let mut closes = true;
            for (step, &idx) in orbit.iter().enumerate() {
                vector.push((idx, acc));
                let (next, s) = self.action[idx];
                acc *= s;
                if step + 1 == orbit.len() && !(next == orbit[0] && acc == 1) {
                    closes = false;
                }
            }
            if closes {
                let h = rs.positive_roots()[orbit[0]].height();
                layers[h - 1].push(BasisVector(vector));
            }
        }
        for layer in &mut layers {
            layer.sort_by_key(|v| v.0[0].0);
        }
        layers
    }

    pub fn fixed_layer_dims(&self) -> Vec<usize> {
        self.fixed_layer_bases().iter().map(Vec::len).collect()
    }
}

/// An element of the nilradical written over the ambient root basis,
/// with the leading (lowest-index) coefficient normalized to +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasisVector(Vec<(usize, i64)>);

impl BasisVector {
    pub fn terms(&self) -> &[(usize, i64)] {
        &self.0
    }

    fn leading_root(&self) -> usize {
        self.0[0].0
    }

    /// Debug format, e.g. `+E[1,1,0,1] -E[0,1,1,1]`.
    pub fn display(&self, rs: &RootSystem) -> String {
        let mut out = String::new();
        for (i, (idx, c)) in self.0.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            let _ = write!(
                out,
                "{}E{}",
                if *c < 0 { "-" } else { "+" },
                rs.positive_roots()[*idx]
            );
        }
        out
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GradedKind {
    Plain,
    Folded,
}

/// Height-graded positive nilradical of one simple adjoint type, with the
/// distinguished regular element X = sum of the layer-1 basis vectors.
#[derive(Debug)]
pub struct GradedNilAlgebra {
    kind: GradedKind,
    type_label: RootSystemType,
    ambient: Arc<SimplyLacedAlgebra>,
    folding: Option<FoldingAutomorphism>,
    layers: Vec<Vec<BasisVector>>,
    x: Vec<(usize, i64)>,
}

/// Build the graded algebra of a simple type: A/D/E directly, B/C/F/G by
/// folding the prescribed ambient.
pub fn graded_algebra(t: RootSystemType) -> Result<GradedNilAlgebra> {
    if t.is_simply_laced() {
        let ambient = simply_laced(t)?;
        let rs = ambient.root_system();
        let layers: Vec<Vec<BasisVector>> = rs
            .layer_indices()
            .iter()
            .map(|idxs| idxs.iter().map(|&i| BasisVector(vec![(i, 1)])).collect())
            .collect();
        let x = layers[0].iter().map(|v| v.0[0]).collect();
        Ok(GradedNilAlgebra {
            kind: GradedKind::Plain,
            type_label: t,
            ambient,
            folding: None,
            layers,
            x,
        })
    } else {
        let fold = build_folding(folding_ambient(t)?, t)?;
        let layers = fold.fixed_layer_bases();
        let mut x: Vec<(usize, i64)> = layers[0].iter().flat_map(|v| v.0.clone()).collect();
        x.sort_by_key(|(i, _)| *i);
        Ok(GradedNilAlgebra {
            kind: GradedKind::Folded,
            type_label: t,
            ambient: fold.ambient().clone(),
            folding: Some(fold),
            layers,
            x,
        })
    }
}

impl GradedNilAlgebra {
    pub fn kind(&self) -> GradedKind {
        self.kind
    }

    pub fn type_label(&self) -> RootSystemType {
        self.type_label
    }

    pub fn ambient(&self) -> &Arc<SimplyLacedAlgebra> {
        &self.ambient
    }

    pub fn folding(&self) -> Option<&FoldingAutomorphism> {
        self.folding.as_ref()
    }

    pub fn max_height(&self) -> usize {
        self.layers.len()
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }

    pub fn layer_basis(&self, h: usize) -> &[BasisVector] {
        &self.layers[h - 1]
    }

    /// X in ambient coordinates.
    pub fn x_terms(&self) -> &[(usize, i64)] {
        &self.x
    }

    fn ad_x(&self, v: &BasisVector) -> BTreeMap<usize, i64> {
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for &(xi, xc) in &self.x {
            for &(bi, bc) in v.terms() {
                if let Some((k, s)) = self.ambient.bracket(xi, bi) {
                    let e = acc.entry(k).or_insert(0);
                    *e += xc * bc * s;
                    if *e == 0 {
                        acc.remove(&k);
                    }
                }
            }
        }
        acc
    }

    /// Integer matrix of [X, .] : n_h -> n_{h+1} in the recorded bases
    /// (rows = target basis).
    pub fn ad_x_matrix(&self, h: usize) -> Result<IntMatrix> {
        if h < 1 || h >= self.max_height() {
            return Err(Error::HeightOutOfRange {
                height: h,
                max: self.max_height(),
            });
        }
        let source = &self.layers[h - 1];
        let target = &self.layers[h];
        let mut m = IntMatrix::zero(target.len(), source.len());
        for (col, v) in source.iter().enumerate() {
            let mut image = self.ad_x(v);
            for (row, w) in target.iter().enumerate() {
                let coeff = image.get(&w.leading_root()).copied().unwrap_or(0);
                if coeff == 0 {
                    continue;
                }
                m[(row, col)] = BigInt::from(coeff);
                for &(idx, c) in w.terms() {
                    let e = image.entry(idx).or_insert(0);
                    *e -= coeff * c;
                    if *e == 0 {
                        image.remove(&idx);
                    }
                }
            }
            // [X, n_h] must land in the recorded (fixed) span of n_{h+1}
            assert!(
                image.is_empty(),
                "ad X image leaves the recorded layer basis for {} at height {h}",
                self.type_label
            );
        }
        Ok(m)
    }

    /// Stacked matrix of [X, .] : n -> n_{>=2}; the top layer contributes
    /// zero columns.
    pub fn stacked_ad_x_matrix(&self) -> IntMatrix {
        let dims = self.layer_dims();
        let rows: usize = dims[1..].iter().sum();
        let cols: usize = dims.iter().sum();
        let mut m = IntMatrix::zero(rows, cols);
        let mut col_off = 0usize;
        let mut row_off = 0usize;
        for h in 1..self.max_height() {
            let block = self.ad_x_matrix(h).expect("height in range");
            for i in 0..block.rows() {
                for j in 0..block.cols() {
                    m[(row_off + i, col_off + j)] = block[(i, j)].clone();
                }
            }
            col_off += dims[h - 1];
            row_off += dims[h];
        }
        m
    }

    pub fn dim_nilradical(&self) -> usize {
        self.layer_dims().iter().sum()
    }
}

/// Matrix of [X, .] : t -> n_1 over t = X_*(T) (x) F, assembled from the
/// eigenvalue relation [dY(1), E_alpha] = <alpha, Y> E_alpha. Identical,
/// entry for entry, to the matrix of Phi.
pub fn torus_ad_x_matrix(rd: &RootDatum) -> IntMatrix {
    let n = rd.root_system().rank();
    let r = rd.lattice_rank();
    let mut m = IntMatrix::zero(n, r);
    for i in 0..n {
        for j in 0..r {
            // coefficient of E_{alpha_i} in [H_j, X] where H_j = d gamma_j(1)
            m[(i, j)] = rd.root_coords()[(i, j)].clone();
        }
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_datum::datum_from_str;
    use num_traits::Signed;

    fn ty(f: Family, r: usize) -> RootSystemType {
        RootSystemType::new(f, r).unwrap()
    }

    fn snf_diag(m: &IntMatrix) -> Vec<i64> {
        crate::intlinalg::smith_normal_form(m)
            .diag
            .iter()
            .map(|d| i64::try_from(d).unwrap())
            .collect()
    }

    #[test]
    fn a2_signs_follow_f() {
        let alg = simply_laced(ty(Family::A, 2)).unwrap();
        let rs = alg.root_system();
        let a1 = rs.root_index(&[1, 0]).unwrap();
        let a2 = rs.root_index(&[0, 1]).unwrap();
        // f(1,2) = -1 so c(a1,a2) = (-1)^{-1} = -1; c(a2,a1) = (-1)^0 = +1
        assert_eq!(alg.structure_constant(a1, a2), -1);
        assert_eq!(alg.structure_constant(a2, a1), 1);
    }

    #[test]
    fn bracket_zero_off_roots() {
        let alg = simply_laced(ty(Family::A, 3)).unwrap();
        let rs = alg.root_system();
        let a1 = rs.root_index(&[1, 0, 0]).unwrap();
        let a3 = rs.root_index(&[0, 0, 1]).unwrap();
        assert_eq!(alg.structure_constant(a1, a3), 0);
        let top = rs.root_index(&[1, 1, 1]).unwrap();
        assert_eq!(alg.structure_constant(a1, top), 0);
    }

    #[test]
    fn d4_center_bracket_identity() {
        // with [E_i, E_j] = 0 for the outer nodes i, j, Jacobi forces
        // [E_i, [E_j, E_m]] = [E_j, [E_i, E_m]] for the center m
        let alg = simply_laced(ty(Family::D, 4)).unwrap();
        let rs = alg.root_system();
        let center = 1usize; // Bourbaki D_4
        let outer = [0usize, 2, 3];
        let m = rs.root_index(rs.simple_roots()[center].coeffs()).unwrap();
        for &i in &outer {
            for &j in &outer {
                if i == j {
                    continue;
                }
                let si = rs.root_index(rs.simple_roots()[i].coeffs()).unwrap();
                let sj = rs.root_index(rs.simple_roots()[j].coeffs()).unwrap();
                let (jm, c1) = alg.bracket(sj, m).unwrap();
                let lhs = c1 * alg.structure_constant(si, jm);
                let (im, c2) = alg.bracket(si, m).unwrap();
                let rhs = c2 * alg.structure_constant(sj, im);
                assert_eq!(lhs, rhs);
                assert_ne!(lhs, 0);
            }
        }
    }

    #[test]
    fn jacobi_holds_through_rank_8() {
        // build() verifies Jacobi eagerly; failure would be an Err here
        for r in 1..=7 {
            simply_laced(ty(Family::A, r)).unwrap();
        }
        for r in 3..=8 {
            simply_laced(ty(Family::D, r)).unwrap();
        }
        for r in 6..=8 {
            simply_laced(ty(Family::E, r)).unwrap();
        }
    }

    #[test]
    fn rejected_non_simply_laced() {
        assert!(matches!(
            SimplyLacedAlgebra::build(RootSystem::simple(ty(Family::B, 2))),
            Err(Error::NotSimplyLaced(_))
        ));
    }

    #[test]
    fn folding_a5_c3_layer_two() {
        let fold = build_folding(ty(Family::A, 5), ty(Family::C, 3)).unwrap();
        let dims = fold.fixed_layer_dims();
        assert_eq!(dims[1], 2);
        assert_eq!(dims, vec![3, 2, 2, 1, 1]);
    }

    #[test]
    fn folding_d4_g2_dims() {
        let fold = build_folding(ty(Family::D, 4), ty(Family::G, 2)).unwrap();
        assert_eq!(fold.order(), 3);
        assert_eq!(fold.fixed_layer_dims(), vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn folding_e6_f4_dims() {
        let fold = build_folding(ty(Family::E, 6), ty(Family::F, 4)).unwrap();
        let dims = fold.fixed_layer_dims();
        assert_eq!(&dims[1..4], &[3, 3, 3]);
        assert_eq!(dims.iter().sum::<usize>(), 24);
    }

    #[test]
    fn folding_dimension_totals() {
        for (a, t) in [
            (ty(Family::D, 3), ty(Family::B, 2)),
            (ty(Family::D, 5), ty(Family::B, 4)),
            (ty(Family::A, 7), ty(Family::C, 4)),
            (ty(Family::E, 6), ty(Family::F, 4)),
            (ty(Family::D, 4), ty(Family::G, 2)),
        ] {
            let fold = build_folding(a, t).unwrap();
            assert_eq!(
                fold.fixed_layer_dims().iter().sum::<usize>(),
                RootSystem::simple(t).positive_roots().len(),
                "dimension total for {a} -> {t}"
            );
            assert_eq!(fold.fixed_layer_dims(), RootSystem::simple(t).layer_dims());
        }
    }

    #[test]
    fn unsupported_folding_rejected() {
        assert!(matches!(
            build_folding(ty(Family::A, 4), ty(Family::C, 3)),
            Err(Error::UnsupportedFolding { .. })
        ));
    }

    #[test]
    fn x_is_sigma_fixed() {
        for t in [ty(Family::B, 3), ty(Family::C, 3), ty(Family::G, 2), ty(Family::F, 4)] {
            let alg = graded_algebra(t).unwrap();
            let fold = alg.folding().unwrap();
            // apply sigma to X and compare
            let mut image: BTreeMap<usize, i64> = BTreeMap::new();
            for &(i, c) in alg.x_terms() {
                let (j, s) = fold.apply(i);
                *image.entry(j).or_insert(0) += c * s;
            }
            let expected: BTreeMap<usize, i64> = alg.x_terms().iter().cloned().collect();
            assert_eq!(image, expected, "X not fixed for {t}");
        }
    }

    #[test]
    fn graded_b2_layer_dims() {
        let alg = graded_algebra(ty(Family::B, 2)).unwrap();
        assert_eq!(alg.kind(), GradedKind::Folded);
        assert_eq!(alg.layer_dims(), vec![2, 1, 1]);
    }

    #[test]
    fn graded_e6_plain_dims() {
        let alg = graded_algebra(ty(Family::E, 6)).unwrap();
        assert_eq!(alg.kind(), GradedKind::Plain);
        let dims = alg.layer_dims();
        assert_eq!(dims[2], 5);
        assert_eq!(dims[3], 5);
    }

    #[test]
    fn graded_g2_x_has_all_ambient_simples() {
        let alg = graded_algebra(ty(Family::G, 2)).unwrap();
        // X = (E_1 + E_2 + E_3) + E_4 in the ambient D_4, up to signs
        assert_eq!(alg.x_terms().len(), 4);
        let idx: Vec<usize> = alg.x_terms().iter().map(|(i, _)| *i).collect();
        assert_eq!(idx, vec![0, 1, 2, 3]);
    }

    #[test]
    fn ad_x_d4_height_two() {
        let alg = graded_algebra(ty(Family::D, 4)).unwrap();
        let m = alg.ad_x_matrix(2).unwrap();
        assert_eq!((m.rows(), m.cols()), (3, 3));
        assert_eq!(snf_diag(&m), vec![1, 1, 2]);
        assert_eq!(m.rank_mod_p(2).unwrap(), 2);
    }

    #[test]
    fn ad_x_g2_heights() {
        let alg = graded_algebra(ty(Family::G, 2)).unwrap();
        let m2 = alg.ad_x_matrix(2).unwrap();
        assert_eq!((m2.rows(), m2.cols()), (1, 1));
        assert_eq!(m2[(0, 0)].abs(), BigInt::from(2));
        let m3 = alg.ad_x_matrix(3).unwrap();
        assert_eq!((m3.rows(), m3.cols()), (1, 1));
        assert_eq!(m3[(0, 0)].abs(), BigInt::from(3));
    }

    #[test]
    fn ad_x_b3_c3_determinants() {
        for f in [Family::B, Family::C] {
            let alg = graded_algebra(ty(f, 3)).unwrap();
            let m = alg.ad_x_matrix(2).unwrap();
            assert_eq!((m.rows(), m.cols()), (2, 2));
            assert_eq!(m.determinant().unwrap().abs(), BigInt::from(2));
        }
    }

    #[test]
    fn ad_x_e6_height_three() {
        let alg = graded_algebra(ty(Family::E, 6)).unwrap();
        let m = alg.ad_x_matrix(3).unwrap();
        assert_eq!((m.rows(), m.cols()), (5, 5));
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(3));
        assert_eq!(m.rank_mod_p(3).unwrap(), 4);
    }

    #[test]
    fn ad_x_e8_height_five() {
        let alg = graded_algebra(ty(Family::E, 8)).unwrap();
        let m = alg.ad_x_matrix(5).unwrap();
        assert_eq!((m.rows(), m.cols()), (7, 7));
        assert_eq!(m.determinant().unwrap().abs(), BigInt::from(5));
        assert_eq!(m.rank_mod_p(5).unwrap(), 6);
    }

    #[test]
    fn ad_x_f4_heights_two_three() {
        let alg = graded_algebra(ty(Family::F, 4)).unwrap();
        let m2 = alg.ad_x_matrix(2).unwrap();
        assert_eq!((m2.rows(), m2.cols()), (3, 3));
        assert_eq!(m2.determinant().unwrap().abs(), BigInt::from(2));
        let m3 = alg.ad_x_matrix(3).unwrap();
        assert_eq!((m3.rows(), m3.cols()), (3, 3));
        assert_eq!(m3.determinant().unwrap().abs(), BigInt::from(3));
    }

    #[test]
    fn ad_x_height_range_enforced() {
        let alg = graded_algebra(ty(Family::A, 2)).unwrap();
        assert!(alg.ad_x_matrix(2).is_err());
        assert!(alg.ad_x_matrix(0).is_err());
        assert!(alg.ad_x_matrix(1).is_ok());
    }

    #[test]
    fn stacked_rank_detects_bad_primes() {
        let cases: Vec<(RootSystemType, Vec<u64>)> = vec![
            (ty(Family::B, 3), vec![2]),
            (ty(Family::C, 4), vec![2]),
            (ty(Family::D, 4), vec![2]),
            (ty(Family::G, 2), vec![2, 3]),
            (ty(Family::F, 4), vec![2, 3]),
            (ty(Family::E, 6), vec![2, 3]),
            (ty(Family::E, 8), vec![2, 3, 5]),
        ];
        for (t, bad) in cases {
            let alg = graded_algebra(t).unwrap();
            let m = alg.stacked_ad_x_matrix();
            let full = m.rows();
            for p in [2u64, 3, 5, 7] {
                let rank = m.rank_mod_p(p).unwrap();
                if bad.contains(&p) {
                    assert!(rank < full, "{t} at bad p={p} should drop rank");
                } else {
                    assert_eq!(rank, full, "{t} at good p={p} should have full rank");
                }
            }
        }
    }

    #[test]
    fn torus_ad_x_equals_phi() {
        for s in ["SL:2", "PGL:2", "GL:2", "SOodd:5", "Sp:6", "sc:E6", "SL:3xT:1"] {
            let d = datum_from_str(s).unwrap();
            assert_eq!(torus_ad_x_matrix(&d), d.phi_matrix(), "mismatch for {s}");
        }
    }

    #[test]
    fn torus_ad_x_values() {
        let sl2 = datum_from_str("SL:2").unwrap();
        assert_eq!(torus_ad_x_matrix(&sl2), IntMatrix::from_rows(&[vec![2]]));
        let pgl2 = datum_from_str("PGL:2").unwrap();
        assert_eq!(torus_ad_x_matrix(&pgl2), IntMatrix::from_rows(&[vec![1]]));
        let gl2 = datum_from_str("GL:2").unwrap();
        assert_eq!(
            torus_ad_x_matrix(&gl2),
            IntMatrix::from_rows(&[vec![1, -1]])
        );
    }

    #[test]
    fn basis_vector_display_format() {
        let alg = graded_algebra(ty(Family::C, 3)).unwrap();
        let rs = alg.ambient().root_system();
        let shown = alg.layer_basis(2)[0].display(rs);
        assert!(shown.starts_with("+E["), "got {shown}");
        assert!(shown.contains("E[") && shown.contains(']'));
    }

    #[test]
    fn folded_x_covers_all_ambient_simples() {
        for t in [ty(Family::B, 4), ty(Family::F, 4)] {
            let alg = graded_algebra(t).unwrap();
            assert!(alg.x_terms().iter().all(|(_, c)| c.abs() == 1));
            assert_eq!(
                alg.x_terms().len(),
                alg.ambient().root_system().rank(),
                "X for {t}"
            );
        }
    }
}
