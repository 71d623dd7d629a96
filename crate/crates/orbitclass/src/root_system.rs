//! Irreducible root systems A–G and their products, generated from the
//! Cartan matrix by root-string closure, with heights, layer gradings and
//! prime classification (bad / good / very good).
//!
//! Convention used throughout the crate: `cartan[i][j] = <alpha_j, alpha_i^vee>
//! = 2(alpha_i, alpha_j)/(alpha_i, alpha_i)`, with Bourbaki node numbering.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{require_prime, Error, Result};
use crate::intlinalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

/// A simple type such as `A5` or `E8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RootSystemType {
    pub family: Family,
    pub rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let ok = match family {
            Family::A => rank >= 1,
            Family::B | Family::C => rank >= 2,
            Family::D => rank >= 3,
            Family::E => (6..=8).contains(&rank),
            Family::F => rank == 4,
            Family::G => rank == 2,
        };
        if ok {
            Ok(RootSystemType { family, rank })
        } else {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
            })
        }
    }

    pub fn is_simply_laced(&self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Parse a string like `E8` or `A13`.
    pub fn parse(s: &str) -> Result<Self> {
        Self::parse_at(s, 0)
    }

    pub(crate) fn parse_at(s: &str, offset: usize) -> Result<Self> {
        let mut chars = s.chars();
        let fam = match chars.next() {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => {
                return Err(Error::parse(offset, "expected family letter A-G"));
            }
        };
        let digits = &s[1..];
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::parse(offset + 1, "expected rank digits"));
        }
        let rank: usize = digits
            .parse()
            .map_err(|_| Error::parse(offset + 1, "rank out of range"))?;
        RootSystemType::new(fam, rank)
    }

    /// Bad primes of the single component.
    pub fn bad_primes(&self) -> BTreeSet<u64> {
        let mut s = BTreeSet::new();
        match self.family {
            Family::A => {}
            Family::B | Family::C | Family::D => {
                s.insert(2);
            }
            Family::E => {
                s.insert(2);
                s.insert(3);
                if self.rank == 8 {
                    s.insert(5);
                }
            }
            Family::F | Family::G => {
                s.insert(2);
                s.insert(3);
            }
        }
        s
    }

    fn cartan(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let chain = |c: &mut Vec<Vec<i64>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n - 1 {
                    chain(&mut c, i, i + 1);
                }
            }
            Family::B => {
                // alpha_n short: <alpha_n, alpha_{n-1}^vee> = -1,
                // <alpha_{n-1}, alpha_n^vee> = -2
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                c[n - 2][n - 1] = -1;
                c[n - 1][n - 2] = -2;
            }
            Family::C => {
                // alpha_n long
                for i in 0..n - 2 {
                    chain(&mut c, i, i + 1);
                }
                c[n - 2][n - 1] = -2;
                c[n - 1][n - 2] = -1;
            }
            Family::D => {
                for i in 0..n - 3 {
                    chain(&mut c, i, i + 1);
                }
                chain(&mut c, n - 3, n - 2);
                chain(&mut c, n - 3, n - 1);
            }
            Family::E => {
                // 1-3-4-5-6(-7)(-8), node 2 attached to node 4
                chain(&mut c, 0, 2);
                chain(&mut c, 1, 3);
                for i in 2..n - 1 {
                    chain(&mut c, i, i + 1);
                }
            }
            Family::F => {
                // alpha_1, alpha_2 long; alpha_3, alpha_4 short
                chain(&mut c, 0, 1);
                c[1][2] = -1;
                c[2][1] = -2;
                chain(&mut c, 2, 3);
            }
            Family::G => {
                // alpha_1 short, alpha_2 long
                c[0][1] = -3;
                c[1][0] = -1;
            }
        }
        c
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family.letter(), self.rank)
    }
}

/// A positive root written in simple-root coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    pub fn new(coeffs: Vec<i64>) -> Self {
        Root { coeffs }
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn height(&self) -> usize {
        self.coeffs.iter().sum::<i64>() as usize
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// A (possibly reducible) root system with its full positive system.
#[derive(Debug, Clone)]
pub struct RootSystem {
    components: Vec<RootSystemType>,
    cartan: Vec<Vec<i64>>,
    positive_roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    max_height: usize,
}

impl RootSystem {
    /// Generate the positive system of a product of simple types.
    ///
    /// Layer h+1 is built from layer h by testing beta + alpha_i against the
    /// alpha_i-string through beta: beta + alpha_i is a root iff
    /// r - <beta, alpha_i^vee> > 0 where r is the largest k with
    /// beta - k alpha_i a root. Everything needed is already known when
    /// layer h is processed.
    pub fn build(types: &[RootSystemType]) -> RootSystem {
        let rank: usize = types.iter().map(|t| t.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut offset = 0;
        for t in types {
            let block = t.cartan();
            for i in 0..t.rank {
                for j in 0..t.rank {
                    cartan[offset + i][offset + j] = block[i][j];
                }
            }
            offset += t.rank;
        }

        let mut positive: Vec<Root> = Vec::new();
        let mut index: HashMap<Vec<i64>, usize> = HashMap::new();
        let mut layer: Vec<Vec<i64>> = Vec::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            layer.push(v);
        }
        // Within a layer, descending lexicographic order; for the height-1
        // layer this is exactly the node order of the simple roots.
        let push_layer = |layer: &mut Vec<Vec<i64>>,
                              positive: &mut Vec<Root>,
                              index: &mut HashMap<Vec<i64>, usize>| {
            layer.sort_by(|a, b| b.cmp(a));
            for v in layer.iter() {
                index.insert(v.clone(), positive.len());
                positive.push(Root::new(v.clone()));
            }
        };
        push_layer(&mut layer, &mut positive, &mut index);

        let mut max_height = if rank > 0 { 1 } else { 0 };
        while !layer.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &layer {
                for i in 0..rank {
                    let mut gamma = beta.clone();
                    gamma[i] += 1;
                    if index.contains_key(&gamma) || next.contains(&gamma) {
                        continue;
                    }
                    let pairing: i64 = (0..rank).map(|j| beta[j] * cartan[i][j]).sum();
                    let mut r = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if down[i] < 0 || !index.contains_key(&down) {
                            break;
                        }
                        r += 1;
                    }
                    if r - pairing > 0 {
                        next.push(gamma);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            max_height += 1;
            push_layer(&mut next, &mut positive, &mut index);
            layer = next;
        }

        RootSystem {
            components: types.to_vec(),
            cartan,
            positive_roots: positive,
            index,
            max_height,
        }
    }

    pub fn simple(t: RootSystemType) -> RootSystem {
        RootSystem::build(&[t])
    }

    /// Rank-zero system (for torus factors).
    pub fn empty() -> RootSystem {
        RootSystem::build(&[])
    }

    /// Parse a type string like `E8` or `A3xB2`.
    pub fn parse(s: &str) -> Result<RootSystem> {
        let mut types = Vec::new();
        let mut pos = 0usize;
        for part in s.split('x') {
            if part.is_empty() {
                return Err(Error::parse(pos, "empty type component"));
            }
            types.push(RootSystemType::parse_at(part, pos)?);
            pos += part.len() + 1;
        }
        Ok(RootSystem::build(&types))
    }

    pub fn components(&self) -> &[RootSystemType] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn cartan_matrix(&self) -> IntMatrix {
        IntMatrix::from_rows(&self.cartan)
    }

    pub fn cartan_determinant(&self) -> BigInt {
        self.cartan_matrix()
            .determinant()
            .expect("cartan matrix is square")
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The simple roots, i.e. the height-1 layer.
    pub fn simple_roots(&self) -> &[Root] {
        &self.positive_roots[..self.rank()]
    }

    pub fn max_height(&self) -> usize {
        self.max_height
    }

    pub fn root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    /// Dynkin diagram edges (i, j) with i < j.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let n = self.rank();
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if self.cartan[i][j] != 0 {
                    e.push((i, j));
                }
            }
        }
        e
    }

    /// Partition of the positive roots by height. Layer 1 is the simple roots.
    pub fn layers_by_height(&self) -> BTreeMap<usize, Vec<Root>> {
        let mut m: BTreeMap<usize, Vec<Root>> = BTreeMap::new();
        for r in &self.positive_roots {
            m.entry(r.height()).or_default().push(r.clone());
        }
        m
    }

    /// Same partition as indices into `positive_roots`, indexed by height-1.
    pub(crate) fn layer_indices(&self) -> Vec<Vec<usize>> {
        let mut v: Vec<Vec<usize>> = vec![Vec::new(); self.max_height];
        for (i, r) in self.positive_roots.iter().enumerate() {
            v[r.height() - 1].push(i);
        }
        v
    }

    pub fn layer_dims(&self) -> Vec<usize> {
        self.layer_indices().iter().map(Vec::len).collect()
    }

    pub fn bad_primes(&self) -> BTreeSet<u64> {
        let mut s = BTreeSet::new();
        for c in &self.components {
            s.extend(c.bad_primes());
        }
        s
    }

    pub fn is_good(&self, p: u64) -> Result<bool> {
        require_prime(p)?;
        Ok(!self.bad_primes().contains(&p))
    }

    pub fn is_very_good(&self, p: u64) -> Result<bool> {
        Ok(self.is_good(p)?
            && !self
                .components
                .iter()
                .any(|c| c.family == Family::A && (c.rank as u64 + 1).is_multiple_of(p)))
    }
}

impl fmt::Display for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}
