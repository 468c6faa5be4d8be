//! Finite reduced root systems of the simple types.
//!
//! Roots are integer coordinate vectors over the simple roots (Bourbaki
//! numbering). The full root set is the fixpoint of the simple reflections
//! applied to the simple roots; the invariant inner product is the
//! symmetrized Cartan matrix scaled so that long roots have squared length 2.

use std::cmp::{Ordering, Reverse};
use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::ops::{Add, Neg, Sub};
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::scalar::{frac, rat, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootSystemType {
    family: Family,
    rank: usize,
}

impl RootSystemType {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let fixed = match family {
            Family::G2 => Some(2),
            Family::F4 => Some(4),
            Family::E6 => Some(6),
            Family::E7 => Some(7),
            Family::E8 => Some(8),
            _ => None,
        };
        let invalid = |reason: &str| LieError::InvalidType {
            family: format!("{family:?}"),
            rank,
            reason: reason.into(),
        };
        match fixed {
            Some(r) if r != rank => return Err(invalid(&format!("rank must be {r}"))),
            _ => {}
        }
        if rank == 0 {
            return Err(invalid("rank must be positive"));
        }
        if family == Family::D && rank < 3 {
            return Err(invalid("type D needs rank at least 3"));
        }
        Ok(RootSystemType { family, rank })
    }

    pub fn a(n: usize) -> Result<Self> {
        Self::new(Family::A, n)
    }
    pub fn b(n: usize) -> Result<Self> {
        Self::new(Family::B, n)
    }
    pub fn c(n: usize) -> Result<Self> {
        Self::new(Family::C, n)
    }
    pub fn d(n: usize) -> Result<Self> {
        Self::new(Family::D, n)
    }
    pub fn g2() -> Self {
        RootSystemType { family: Family::G2, rank: 2 }
    }
    pub fn f4() -> Self {
        RootSystemType { family: Family::F4, rank: 4 }
    }
    pub fn e(n: usize) -> Result<Self> {
        match n {
            6 => Self::new(Family::E6, 6),
            7 => Self::new(Family::E7, 7),
            8 => Self::new(Family::E8, 8),
            _ => Err(LieError::InvalidType {
                family: "E".into(),
                rank: n,
                reason: "type E exists only in ranks 6, 7, 8".into(),
            }),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of roots of the type.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G2 => 12,
            Family::F4 => 48,
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
        }
    }

    /// Simple-root Gram matrix before normalization, as (squared lengths, bonds).
    fn raw_gram(&self) -> Vec<Vec<Rational>> {
        let n = self.rank;
        let mut g = vec![vec![Rational::zero(); n]; n];
        let mut bond = |i: usize, j: usize, v: Rational| {
            g[i][j] = v;
            g[j][i] = v;
        };
        let chain = |len: usize| (0..len.saturating_sub(1)).map(|i| (i, i + 1));
        let mut diag = vec![rat(2); n];
        match self.family {
            Family::A => chain(n).for_each(|(i, j)| bond(i, j, rat(-1))),
            Family::B => {
                chain(n).for_each(|(i, j)| bond(i, j, rat(-1)));
                diag[n - 1] = rat(1);
            }
            Family::C => {
                chain(n).for_each(|(i, j)| bond(i, j, frac(-1, 2)));
                diag.iter_mut().for_each(|d| *d = rat(1));
                diag[n - 1] = rat(2);
                if n >= 2 {
                    bond(n - 2, n - 1, rat(-1));
                }
            }
            Family::D => {
                chain(n - 1).for_each(|(i, j)| bond(i, j, rat(-1)));
                bond(n - 3, n - 1, rat(-1));
            }
            Family::G2 => {
                diag[0] = frac(2, 3);
                bond(0, 1, rat(-1));
            }
            Family::F4 => {
                diag[2] = rat(1);
                diag[3] = rat(1);
                bond(0, 1, rat(-1));
                bond(1, 2, rat(-1));
                bond(2, 3, frac(-1, 2));
            }
            Family::E6 | Family::E7 | Family::E8 => {
                // Bourbaki: 1-3-4-5-6-7-8 with 2 attached to 4.
                bond(0, 2, rat(-1));
                bond(1, 3, rat(-1));
                for i in 2..n - 1 {
                    bond(i, i + 1, rat(-1));
                }
            }
        }
        for (i, d) in diag.into_iter().enumerate() {
            g[i][i] = d;
        }
        g
    }
}

impl fmt::Display for RootSystemType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{:?}{}", self.family, self.rank)
            }
            other => write!(f, "{other:?}"),
        }
    }
}

impl FromStr for RootSystemType {
    type Err = LieError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let unknown = || LieError::UnknownType(s.to_string());
        let mut chars = s.chars();
        let head = chars.next().ok_or_else(unknown)?.to_ascii_uppercase();
        let rank: usize = chars.as_str().parse().map_err(|_| unknown())?;
        let family = match (head, rank) {
            ('A', _) => Family::A,
            ('B', _) => Family::B,
            ('C', _) => Family::C,
            ('D', _) => Family::D,
            ('G', 2) => Family::G2,
            ('F', 4) => Family::F4,
            ('E', 6) => Family::E6,
            ('E', 7) => Family::E7,
            ('E', 8) => Family::E8,
            _ => return Err(unknown()),
        };
        RootSystemType::new(family, rank)
    }
}

impl Serialize for RootSystemType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Integer coordinates of a root (or lattice vector) in the simple-root basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i32>);

impl Root {
    pub fn new(coeffs: Vec<i32>) -> Self {
        Root(coeffs)
    }

    pub fn simple(rank: usize, i: usize) -> Self {
        let mut c = vec![0; rank];
        c[i] = 1;
        Root(c)
    }

    pub fn coeffs(&self) -> &[i32] {
        &self.0
    }

    pub fn height(&self) -> i32 {
        self.0.iter().sum()
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && self.0.iter().any(|&c| c > 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn scaled(&self, k: i32) -> Root {
        Root(self.0.iter().map(|c| c * k).collect())
    }

    /// Key of the fixed total order on roots: height first, then
    /// coefficient vectors in decreasing lexicographic order, so that
    /// `α₁ ≺ α₂ ≺ … ≺ α_r` among the simple roots.
    fn order_key(&self) -> (i32, Reverse<&[i32]>) {
        (self.height(), Reverse(&self.0))
    }
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.order_key().cmp(&other.order_key())
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else if first { "" } else { "+" };
            let mag = c.abs();
            if mag == 1 {
                write!(f, "{sign}a{}", i + 1)?;
            } else {
                write!(f, "{sign}{mag}a{}", i + 1)?;
            }
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl Neg for &Root {
    type Output = Root;
    fn neg(self) -> Root {
        Root(self.0.iter().map(|c| -c).collect())
    }
}

impl Add for &Root {
    type Output = Root;
    fn add(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &Root {
    type Output = Root;
    fn sub(self, rhs: &Root) -> Root {
        Root(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    ty: RootSystemType,
    cartan: Vec<Vec<i32>>,
    gram: Vec<Vec<Rational>>,
    /// Positive roots in increasing order, then their negatives in the same order.
    roots: Vec<Root>,
    index: HashMap<Root, usize>,
}

impl RootSystem {
    pub fn new(ty: RootSystemType) -> Result<Self> {
        let n = ty.rank();
        let mut gram = ty.raw_gram();
        let longest = (0..n).map(|i| gram[i][i]).max().expect("rank > 0");
        let scale = rat(2) / longest;
        for row in gram.iter_mut() {
            for x in row.iter_mut() {
                *x *= scale;
            }
        }

        // cartan[i][j] = <α_i, α_j^∨> = 2(α_i, α_j)/(α_j, α_j)
        let mut cartan = vec![vec![0; n]; n];
        for i in 0..n {
            for j in 0..n {
                let c = rat(2) * gram[i][j] / gram[j][j];
                if !c.is_integer() {
                    return Err(LieError::Internal(format!(
                        "non-integral Cartan entry at ({i},{j}) for {ty}"
                    )));
                }
                cartan[i][j] = c.to_integer() as i32;
            }
        }

        let mut seen: HashMap<Root, ()> = HashMap::new();
        let mut queue: VecDeque<Root> = (0..n).map(|i| Root::simple(n, i)).collect();
        while let Some(r) = queue.pop_front() {
            if seen.contains_key(&r) {
                continue;
            }
            for j in 0..n {
                let pairing: i32 = (0..n).map(|i| r.0[i] * cartan[i][j]).sum();
                if pairing != 0 {
                    let mut s = r.clone();
                    s.0[j] -= pairing;
                    if !seen.contains_key(&s) {
                        queue.push_back(s);
                    }
                }
            }
            seen.insert(r, ());
        }

        let mut positive: Vec<Root> = seen.into_keys().filter(|r| r.is_positive()).collect();
        positive.sort();
        let negative: Vec<Root> = positive.iter().map(|r| -r).collect();
        let roots: Vec<Root> = positive.into_iter().chain(negative).collect();
        let index = roots.iter().cloned().enumerate().map(|(i, r)| (r, i)).collect();

        let rs = RootSystem {
            ty,
            cartan,
            gram,
            roots,
            index,
        };
        if rs.roots.len() != ty.root_count() {
            return Err(LieError::Internal(format!(
                "{ty}: generated {} roots, expected {}",
                rs.roots.len(),
                ty.root_count()
            )));
        }
        Ok(rs)
    }

    pub fn root_type(&self) -> RootSystemType {
        self.ty
    }

    pub fn rank(&self) -> usize {
        self.ty.rank()
    }

    pub fn cartan_matrix(&self) -> &[Vec<i32>] {
        &self.cartan
    }

    pub fn gram(&self) -> &[Vec<Rational>] {
        &self.gram
    }

    /// All roots: positives in increasing order, then the negatives.
    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn num_positive(&self) -> usize {
        self.roots.len() / 2
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.num_positive()]
    }

    pub fn simple_root(&self, i: usize) -> Root {
        Root::simple(self.rank(), i)
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.roots[idx]
    }

    pub fn index_of(&self, r: &Root) -> Option<usize> {
        self.index.get(r).copied()
    }

    pub fn contains(&self, r: &Root) -> bool {
        self.index.contains_key(r)
    }

    /// Index of `−roots[idx]`.
    pub fn neg_index(&self, idx: usize) -> usize {
        let p = self.num_positive();
        if idx < p {
            idx + p
        } else {
            idx - p
        }
    }

    pub fn is_positive_index(&self, idx: usize) -> bool {
        idx < self.num_positive()
    }

    pub(crate) fn ip(&self, a: &[i32], b: &[i32]) -> Rational {
        let mut s = Rational::zero();
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                if y != 0 {
                    s += self.gram[i][j] * Rational::from_integer((x * y) as i64);
                }
            }
        }
        s
    }

    /// The invariant inner product of two lattice vectors.
    pub fn inner(&self, a: &Root, b: &Root) -> Result<Rational> {
        for v in [a, b] {
            if v.0.len() != self.rank() {
                return Err(LieError::DimensionMismatch {
                    expected: self.rank(),
                    found: v.0.len(),
                });
            }
        }
        Ok(self.ip(&a.0, &b.0))
    }

    pub(crate) fn sq(&self, a: &Root) -> Rational {
        self.ip(&a.0, &a.0)
    }

    /// `2(a, b)/(b, b)`, an integer whenever both are roots.
    pub fn cartan_integer(&self, a: &Root, b: &Root) -> Result<i32> {
        self.require_root(b)?;
        let v = rat(2) * self.inner(a, b)? / self.sq(b);
        if !v.is_integer() {
            return Err(LieError::Internal(format!("non-integral pairing <{a}, {b}>")));
        }
        Ok(v.to_integer() as i32)
    }

    fn require_root(&self, r: &Root) -> Result<()> {
        if r.0.len() != self.rank() {
            return Err(LieError::DimensionMismatch {
                expected: self.rank(),
                found: r.0.len(),
            });
        }
        if !self.contains(r) {
            return Err(LieError::NotARoot(r.to_string()));
        }
        Ok(())
    }

    pub fn is_long(&self, r: &Root) -> bool {
        self.sq(r) == rat(2)
    }

    /// The unique positive root of maximal height.
    pub fn highest_root(&self) -> Root {
        self.positive_roots()
            .iter()
            .max_by_key(|r| r.height())
            .cloned()
            .expect("nonempty root system")
    }

    /// `s_α(γ) = γ − <γ, α^∨> α`.
    pub fn reflect(&self, alpha: &Root, gamma: &Root) -> Result<Root> {
        let k = self.cartan_integer(gamma, alpha)?;
        Ok(gamma - &alpha.scaled(k))
    }

    /// `Σ_{γ,n} = { α ∈ Σ : 2(γ, α)/(γ, γ) = n }`, in root order.
    pub fn level_set(&self, gamma: &Root, n: i32) -> Result<Vec<Root>> {
        Ok(self
            .level_indices(gamma, n)?
            .into_iter()
            .map(|i| self.roots[i].clone())
            .collect())
    }

    pub(crate) fn level_indices(&self, gamma: &Root, n: i32) -> Result<Vec<usize>> {
        self.require_root(gamma)?;
        let target = Rational::from_integer(n as i64) * self.sq(gamma);
        Ok((0..self.roots.len())
            .filter(|&i| rat(2) * self.ip(&gamma.0, &self.roots[i].0) == target)
            .collect())
    }

    /// `(p, q)` with `p` maximal such that `γ − pα ∈ Σ` and `q` maximal such
    /// that `γ + qα ∈ Σ`.
    pub fn root_string(&self, alpha: &Root, gamma: &Root) -> Result<(u32, u32)> {
        self.require_root(alpha)?;
        self.require_root(gamma)?;
        if alpha == gamma || *alpha == -gamma {
            return Err(LieError::DegenerateString {
                alpha: alpha.to_string(),
                gamma: gamma.to_string(),
            });
        }
        let walk = |step: &Root| {
            let mut k = 0;
            let mut cur = gamma + step;
            while self.contains(&cur) {
                k += 1;
                cur = &cur + step;
            }
            k
        };
        Ok((walk(&-alpha), walk(alpha)))
    }

    pub fn to_document(&self) -> RootSystemDocument {
        RootSystemDocument {
            root_type: self.ty.to_string(),
            rank: self.rank(),
            cartan_matrix: self.cartan.clone(),
            roots: self.roots.iter().map(|r| r.0.clone()).collect(),
        }
    }
}

/// JSON form: `{type, rank, cartan_matrix, roots}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RootSystemDocument {
    #[serde(rename = "type")]
    pub root_type: String,
    pub rank: usize,
    pub cartan_matrix: Vec<Vec<i32>>,
    pub roots: Vec<Vec<i32>>,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn rank_validation() {
        assert!(RootSystemType::new(Family::G2, 3).is_err());
        assert!(RootSystemType::new(Family::D, 2).is_err());
        assert!(RootSystemType::new(Family::A, 0).is_err());
        assert!("E9".parse::<RootSystemType>().is_err());
        assert!("X3".parse::<RootSystemType>().is_err());
        assert_eq!("e8".parse::<RootSystemType>().unwrap().rank(), 8);
    }

    #[test]
    fn a1_has_two_roots() {
        let a1 = rs("A1");
        assert_eq!(a1.roots(), &[Root::new(vec![1]), Root::new(vec![-1])]);
        assert_eq!(a1.highest_root(), Root::new(vec![1]));
    }

    #[test]
    fn rank_one_b_and_c_are_normalized_long() {
        for t in ["B1", "C1"] {
            let r = rs(t);
            assert_eq!(r.sq(&r.highest_root()), rat(2));
        }
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A3").highest_root(), Root::new(vec![1, 1, 1]));
        let g2 = rs("G2");
        let beta = g2.highest_root();
        assert_eq!(beta, Root::new(vec![3, 2]));
        assert_eq!(g2.inner(&beta, &beta).unwrap(), rat(2));
        assert_eq!(rs("E8").highest_root(), Root::new(vec![2, 3, 4, 6, 5, 4, 3, 2]));
        assert_eq!(rs("F4").highest_root(), Root::new(vec![2, 3, 4, 2]));
    }

    #[test]
    fn inner_products() {
        let a2 = rs("A2");
        assert_eq!(a2.inner(&a2.simple_root(0), &a2.simple_root(1)).unwrap(), rat(-1));
        let g2 = rs("G2");
        assert_eq!(g2.inner(&g2.simple_root(0), &g2.simple_root(0)).unwrap(), frac(2, 3));
        assert!(matches!(
            g2.inner(&Root::new(vec![1]), &g2.simple_root(0)),
            Err(LieError::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn root_strings() {
        let a2 = rs("A2");
        assert_eq!(a2.root_string(&a2.simple_root(0), &a2.simple_root(1)).unwrap(), (0, 1));
        let g2 = rs("G2");
        assert_eq!(g2.root_string(&g2.simple_root(0), &g2.simple_root(1)).unwrap(), (0, 3));
        let a = g2.simple_root(0);
        assert!(matches!(
            g2.root_string(&a, &-&a),
            Err(LieError::DegenerateString { .. })
        ));
        let b3 = rs("B3");
        // α₁ ⊥ α₃ and α₁ ± α₃ are not roots
        assert_eq!(b3.root_string(&b3.simple_root(0), &b3.simple_root(2)).unwrap(), (0, 0));
    }

    #[test]
    fn top_level_is_highest_root() {
        for t in ["G2", "F4", "E6", "A4", "B4", "C3", "D5"] {
            let r = rs(t);
            let beta = r.highest_root();
            assert_eq!(r.level_set(&beta, 2).unwrap(), vec![beta.clone()]);
            assert_eq!(r.level_set(&beta, -2).unwrap(), vec![-&beta]);
        }
    }

    #[test]
    fn simple_roots_order_first_by_index() {
        let a3 = rs("A3");
        assert_eq!(&a3.roots()[..3], &[a3.simple_root(0), a3.simple_root(1), a3.simple_root(2)]);
    }

    #[test]
    fn document_round_trip() {
        let doc = rs("G2").to_document();
        let json = serde_json::to_string(&doc).unwrap();
        assert!(json.starts_with(r#"{"type":"G2","rank":2,"cartan_matrix":[[2,-1],[-3,2]]"#));
        let back: RootSystemDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back, doc);
    }
}
