//! Chevalley bases, the compact real form, and the invariant form.
//!
//! The complex algebra has basis `A_1..A_r` (simple coroots) followed by one
//! root vector `X_α` per root, indexed like [`RootSystem::roots`]. Brackets
//! are
//!
//! ```text
//! [A_i, X_γ]   = <γ, α_i^∨> X_γ
//! [X_α, X_−α]  = A_α            (coroot of α, expanded over the A_j)
//! [X_α, X_γ]   = N_{α,γ} X_{α+γ} when α + γ is a root, else 0
//! ```
//!
//! Signs of `N` follow the extraspecial-pair convention: for every
//! non-simple positive root `ξ`, the pair `(γ, ξ−γ)` with `γ` minimal in the
//! root order gets `N = p + 1 > 0`. Everything else is forced by Jacobi and
//! the rules `N_{−α,−β} = −N_{α,β}` and
//! `N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)` for `a + b + c = 0`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::atomic::{AtomicU64, Ordering};

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{LieError, Result};
use crate::linalg::BilinearForm;
use crate::root_system::{Root, RootSystem};
use crate::scalar::{fmt_gaussian, imag, rat, real, unit_i, GaussianRational, Rational};

/// Structure constants `N_{α,γ}` over a fixed root system.
#[derive(Clone, Debug)]
pub struct StructureConstants {
    n_roots: usize,
    /// Dense `n_roots × n_roots` table, 0 where `α + γ` is not a root.
    table: Vec<i32>,
    /// `sum[a·n + b]` = index of `roots[a] + roots[b]` when it is a root.
    sum: Vec<Option<u32>>,
}

/// One defined entry, for export.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructureConstantEntry {
    pub alpha: Vec<i32>,
    pub gamma: Vec<i32>,
    pub n: i32,
}

impl StructureConstants {
    pub fn build(rs: &RootSystem) -> Result<Self> {
        let n_roots = rs.roots().len();
        let np = rs.num_positive();
        let mut sum = vec![None; n_roots * n_roots];
        for a in 0..n_roots {
            for b in 0..n_roots {
                sum[a * n_roots + b] = rs.index_of(&(rs.root(a) + rs.root(b))).map(|i| i as u32);
            }
        }
        let mut sc = StructureConstants {
            n_roots,
            table: vec![0; n_roots * n_roots],
            sum,
        };
        let sq: Vec<Rational> = rs.roots().iter().map(|r| rs.sq(r)).collect();
        let p_of = |a: usize, b: usize| -> i32 {
            // p = max k with roots[b] − k·roots[a] ∈ Σ
            let mut k = 0;
            let mut cur = rs.root(b) - rs.root(a);
            while rs.contains(&cur) {
                k += 1;
                cur = &cur - rs.root(a);
            }
            k
        };

        for xi in 0..np {
            let pairs: Vec<(usize, usize)> = (0..np)
                .filter_map(|a| xi_minus(rs, xi, a).map(|b| (a, b)))
                .collect();
            let Some(&(gamma, delta)) = pairs.first() else {
                continue;
            };
            let n0 = p_of(gamma, delta) + 1;
            sc.set(gamma, delta, n0);
            sc.set(delta, gamma, -n0);
            for &(a, b) in &pairs[1..] {
                if a > b || a == gamma || a == delta {
                    continue;
                }
                let neg_g = rs.neg_index(gamma);
                let mut acc = Rational::zero();
                if let Some(bg) = sc.sum_index(b, neg_g) {
                    acc += Rational::from_integer(
                        (sc.general(rs, &sq, b, neg_g)? * sc.general(rs, &sq, bg, a)?) as i64,
                    );
                }
                if let Some(ag) = sc.sum_index(a, neg_g) {
                    acc += Rational::from_integer(
                        (sc.general(rs, &sq, neg_g, a)? * sc.general(rs, &sq, ag, b)?) as i64,
                    );
                }
                let denom = sc.general(rs, &sq, xi, neg_g)?;
                let v = -acc / Rational::from_integer(denom as i64);
                if !v.is_integer() || v.is_zero() {
                    return Err(LieError::Internal(format!(
                        "non-integral structure constant for ({}, {})",
                        rs.root(a),
                        rs.root(b)
                    )));
                }
                let v = v.to_integer() as i32;
                sc.set(a, b, v);
                sc.set(b, a, -v);
            }
        }

        for a in 0..n_roots {
            for b in 0..n_roots {
                if sc.sum_index(a, b).is_some() && sc.table[a * n_roots + b] == 0 {
                    let v = sc.general(rs, &sq, a, b)?;
                    sc.set(a, b, v);
                }
            }
        }

        for a in 0..n_roots {
            for b in 0..n_roots {
                if sc.sum_index(a, b).is_some() {
                    let n = sc.table[a * n_roots + b];
                    if n.abs() != p_of(a, b) + 1 {
                        return Err(LieError::Internal(format!(
                            "|N({}, {})| = {} but p + 1 = {}",
                            rs.root(a),
                            rs.root(b),
                            n.abs(),
                            p_of(a, b) + 1
                        )));
                    }
                }
            }
        }
        Ok(sc)
    }

    fn set(&mut self, a: usize, b: usize, v: i32) {
        self.table[a * self.n_roots + b] = v;
    }

    fn sum_index(&self, a: usize, b: usize) -> Option<usize> {
        self.sum[a * self.n_roots + b].map(|i| i as usize)
    }

    /// Value of `N` for any pair with a root sum, reducing to already
    /// computed positive pairs.
    fn general(&self, rs: &RootSystem, sq: &[Rational], a: usize, b: usize) -> Result<i32> {
        let stored = self.table[a * self.n_roots + b];
        if stored != 0 {
            return Ok(stored);
        }
        let Some(s) = self.sum_index(a, b) else {
            return Err(LieError::Internal("N requested for a non-root sum".into()));
        };
        let (pa, pb) = (rs.is_positive_index(a), rs.is_positive_index(b));
        if !pa && !pb {
            let v = self.table[rs.neg_index(a) * self.n_roots + rs.neg_index(b)];
            if v == 0 {
                return Err(LieError::Internal("negative pair reduced before its positive".into()));
            }
            return Ok(-v);
        }
        if pa && pb {
            return Err(LieError::Internal(format!(
                "positive pair ({}, {}) requested before it was set",
                rs.root(a),
                rs.root(b)
            )));
        }
        let c = rs.neg_index(s);
        // N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
        let same_sign = |x: usize, y: usize| rs.is_positive_index(x) == rs.is_positive_index(y);
        let v = if same_sign(b, c) {
            Rational::from_integer(self.general(rs, sq, b, c)? as i64) * sq[c] / sq[a]
        } else {
            Rational::from_integer(self.general(rs, sq, c, a)? as i64) * sq[c] / sq[b]
        };
        if !v.is_integer() {
            return Err(LieError::Internal("non-integral reduced structure constant".into()));
        }
        Ok(v.to_integer() as i32)
    }

    /// `N_{α,γ}` by root indices, `None` when `α + γ` is not a root.
    pub fn by_index(&self, a: usize, b: usize) -> Option<i32> {
        self.sum_index(a, b).map(|_| self.table[a * self.n_roots + b])
    }

    pub fn get(&self, rs: &RootSystem, alpha: &Root, gamma: &Root) -> Result<Option<i32>> {
        let a = rs.index_of(alpha).ok_or_else(|| LieError::NotARoot(alpha.to_string()))?;
        let b = rs.index_of(gamma).ok_or_else(|| LieError::NotARoot(gamma.to_string()))?;
        Ok(self.by_index(a, b))
    }

    /// Every defined entry in root order.
    pub fn entries(&self, rs: &RootSystem) -> Vec<StructureConstantEntry> {
        let mut out = Vec::new();
        for a in 0..self.n_roots {
            for b in 0..self.n_roots {
                if let Some(n) = self.by_index(a, b) {
                    out.push(StructureConstantEntry {
                        alpha: rs.root(a).coeffs().to_vec(),
                        gamma: rs.root(b).coeffs().to_vec(),
                        n,
                    });
                }
            }
        }
        out
    }
}

fn xi_minus(rs: &RootSystem, xi: usize, a: usize) -> Option<usize> {
    let b = rs.index_of(&(rs.root(xi) - rs.root(a)))?;
    rs.is_positive_index(b).then_some(b)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum BasisIndex {
    /// The simple coroot `A_j`.
    Cartan(usize),
    /// `X_α` for the root with this index.
    RootVector(usize),
}

static NEXT_ALGEBRA_ID: AtomicU64 = AtomicU64::new(1);

/// An element of the complexified algebra. Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieElement {
    algebra: u64,
    coeffs: BTreeMap<BasisIndex, GaussianRational>,
}

impl LieElement {
    fn new(algebra: u64) -> Self {
        LieElement {
            algebra,
            coeffs: BTreeMap::new(),
        }
    }

    fn add_term(&mut self, idx: BasisIndex, c: GaussianRational) {
        if c.is_zero() {
            return;
        }
        let e = self.coeffs.entry(idx).or_insert_with(GaussianRational::zero);
        *e += c;
        if e.is_zero() {
            self.coeffs.remove(&idx);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: BasisIndex) -> GaussianRational {
        self.coeffs.get(&idx).copied().unwrap_or_else(GaussianRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (BasisIndex, GaussianRational)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn scale(&self, c: GaussianRational) -> LieElement {
        let mut out = LieElement::new(self.algebra);
        if !c.is_zero() {
            for (k, v) in &self.coeffs {
                out.coeffs.insert(*k, v * c);
            }
        }
        out
    }

    pub fn checked_add(&self, other: &LieElement) -> Result<LieElement> {
        if self.algebra != other.algebra {
            return Err(LieError::MixedAlgebras);
        }
        let mut out = self.clone();
        for (k, v) in &other.coeffs {
            out.add_term(*k, *v);
        }
        Ok(out)
    }
}

/// # Panics
/// When the operands come from different algebras; use
/// [`LieElement::checked_add`] to get an error instead.
impl Add for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        self.checked_add(rhs).expect("adding elements of different algebras")
    }
}

impl Sub for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        self + &-rhs
    }
}

impl Neg for &LieElement {
    type Output = LieElement;
    fn neg(self) -> LieElement {
        self.scale(-GaussianRational::one())
    }
}

impl Mul<&LieElement> for GaussianRational {
    type Output = LieElement;
    fn mul(self, rhs: &LieElement) -> LieElement {
        rhs.scale(self)
    }
}

/// The complex simple Lie algebra of a root system in its Chevalley basis.
#[derive(Debug)]
pub struct ChevalleyAlgebra {
    id: u64,
    rs: RootSystem,
    sc: StructureConstants,
    /// `coroots[k][j]`: coefficient of `A_j` in `A_{roots[k]}`.
    coroots: Vec<Vec<i64>>,
    /// `pairing[k][i]` = `<roots[k], α_i^∨>`.
    pairing: Vec<Vec<i64>>,
    /// `B(A_i, A_j)`.
    cartan_form: Vec<Vec<Rational>>,
    /// `B(X_α, X_−α) = 2/(α, α)` per root index.
    root_form: Vec<Rational>,
}

impl ChevalleyAlgebra {
    pub fn new(rs: RootSystem) -> Result<Self> {
        let sc = StructureConstants::build(&rs)?;
        Ok(Self::with_constants(rs, sc))
    }

    pub fn with_constants(rs: RootSystem, sc: StructureConstants) -> Self {
        let r = rs.rank();
        let g = rs.gram();
        let coroots = rs
            .roots()
            .iter()
            .map(|root| {
                let len = rs.sq(root);
                (0..r)
                    .map(|j| {
                        let c = Rational::from_integer(root.coeffs()[j] as i64) * g[j][j] / len;
                        debug_assert!(c.is_integer());
                        c.to_integer()
                    })
                    .collect()
            })
            .collect();
        let cartan = rs.cartan_matrix();
        let pairing = rs
            .roots()
            .iter()
            .map(|root| {
                (0..r)
                    .map(|i| (0..r).map(|k| (root.coeffs()[k] * cartan[k][i]) as i64).sum())
                    .collect()
            })
            .collect();
        let cartan_form = (0..r)
            .map(|i| (0..r).map(|j| rat(4) * g[i][j] / (g[i][i] * g[j][j])).collect())
            .collect();
        let root_form = rs.roots().iter().map(|root| rat(2) / rs.sq(root)).collect();
        ChevalleyAlgebra {
            id: NEXT_ALGEBRA_ID.fetch_add(1, Ordering::Relaxed),
            rs,
            sc,
            coroots,
            pairing,
            cartan_form,
            root_form,
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn structure_constants(&self) -> &StructureConstants {
        &self.sc
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    /// Complex dimension, equal to the real dimension of the compact form.
    pub fn dim(&self) -> usize {
        self.rank() + self.rs.roots().len()
    }

    pub fn zero(&self) -> LieElement {
        LieElement::new(self.id)
    }

    pub fn basis(&self, idx: BasisIndex) -> LieElement {
        let mut e = self.zero();
        e.add_term(idx, GaussianRational::one());
        e
    }

    /// All basis indices: Cartan part first, then root vectors in root order.
    pub fn basis_indices(&self) -> Vec<BasisIndex> {
        (0..self.rank())
            .map(BasisIndex::Cartan)
            .chain((0..self.rs.roots().len()).map(BasisIndex::RootVector))
            .collect()
    }

    fn root_index(&self, r: &Root) -> Result<usize> {
        self.rs.index_of(r).ok_or_else(|| LieError::NotARoot(r.to_string()))
    }

    /// `A_j` for the simple root `α_j`.
    pub fn h(&self, j: usize) -> Result<LieElement> {
        if j >= self.rank() {
            return Err(LieError::InvalidIndex(format!("Cartan index {j} ≥ rank {}", self.rank())));
        }
        Ok(self.basis(BasisIndex::Cartan(j)))
    }

    pub fn x(&self, r: &Root) -> Result<LieElement> {
        Ok(self.basis(BasisIndex::RootVector(self.root_index(r)?)))
    }

    /// The coroot `A_α = [X_α, X_−α]`.
    pub fn coroot(&self, r: &Root) -> Result<LieElement> {
        Ok(self.coroot_by_index(self.root_index(r)?))
    }

    fn coroot_by_index(&self, k: usize) -> LieElement {
        let mut e = self.zero();
        for (j, &c) in self.coroots[k].iter().enumerate() {
            e.add_term(BasisIndex::Cartan(j), real(Rational::from_integer(c)));
        }
        e
    }

    /// `i·A_α`.
    pub fn i_coroot(&self, r: &Root) -> Result<LieElement> {
        Ok(self.coroot(r)?.scale(unit_i()))
    }

    /// `Z_α = X_α − X_−α`.
    pub fn z(&self, r: &Root) -> Result<LieElement> {
        Ok(&self.x(r)? - &self.x(&-r)?)
    }

    /// `W_α = i(X_α + X_−α)`.
    pub fn w(&self, r: &Root) -> Result<LieElement> {
        Ok((&self.x(r)? + &self.x(&-r)?).scale(unit_i()))
    }

    fn check(&self, x: &LieElement) -> Result<()> {
        if x.algebra != self.id {
            return Err(LieError::MixedAlgebras);
        }
        Ok(())
    }

    fn bracket_basis(&self, a: BasisIndex, b: BasisIndex, c: GaussianRational, out: &mut LieElement) {
        use BasisIndex::*;
        match (a, b) {
            (Cartan(_), Cartan(_)) => {}
            (Cartan(i), RootVector(k)) => {
                let p = self.pairing[k][i];
                out.add_term(b, c * real(Rational::from_integer(p)));
            }
            (RootVector(_), Cartan(_)) => self.bracket_basis(b, a, -c, out),
            (RootVector(ka), RootVector(kb)) => {
                if kb == self.rs.neg_index(ka) {
                    for (j, &v) in self.coroots[ka].iter().enumerate() {
                        out.add_term(Cartan(j), c * real(Rational::from_integer(v)));
                    }
                } else if let Some(n) = self.sc.by_index(ka, kb) {
                    let s = self.sc.sum_index(ka, kb).expect("defined entry has a root sum");
                    out.add_term(RootVector(s), c * real(Rational::from_integer(n as i64)));
                }
            }
        }
    }

    pub fn bracket(&self, x: &LieElement, y: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        self.check(y)?;
        let mut out = self.zero();
        for (a, ca) in x.terms() {
            for (b, cb) in y.terms() {
                self.bracket_basis(a, b, ca * cb, &mut out);
            }
        }
        Ok(out)
    }

    /// The antilinear conjugation fixing the compact form.
    pub fn tau(&self, x: &LieElement) -> Result<LieElement> {
        self.check(x)?;
        let mut out = self.zero();
        for (idx, c) in x.terms() {
            let target = match idx {
                BasisIndex::Cartan(_) => idx,
                BasisIndex::RootVector(k) => BasisIndex::RootVector(self.rs.neg_index(k)),
            };
            out.add_term(target, -c.conj());
        }
        Ok(out)
    }

    /// Complex bilinear invariant form, a positive multiple of the Killing form.
    pub fn invariant_form(&self, x: &LieElement, y: &LieElement) -> Result<GaussianRational> {
        self.check(x)?;
        self.check(y)?;
        let mut s = GaussianRational::zero();
        for (a, ca) in x.terms() {
            match a {
                BasisIndex::Cartan(i) => {
                    for j in 0..self.rank() {
                        let cb = y.coeff(BasisIndex::Cartan(j));
                        if !cb.is_zero() {
                            s += ca * cb * real(self.cartan_form[i][j]);
                        }
                    }
                }
                BasisIndex::RootVector(k) => {
                    let cb = y.coeff(BasisIndex::RootVector(self.rs.neg_index(k)));
                    if !cb.is_zero() {
                        s += ca * cb * real(self.root_form[k]);
                    }
                }
            }
        }
        Ok(s)
    }

    pub fn format(&self, x: &LieElement) -> String {
        if x.is_zero() {
            return "0".into();
        }
        x.terms()
            .map(|(idx, c)| {
                let name = match idx {
                    BasisIndex::Cartan(j) => format!("A{}", j + 1),
                    BasisIndex::RootVector(k) => format!("X[{}]", self.rs.root(k)),
                };
                format!("{}·{}", fmt_gaussian(&c), name)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }

    pub fn compact_basis(&self) -> CompactBasis<'_> {
        CompactBasis { alg: self }
    }
}

/// Which compact generator a coordinate refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CompactGenerator {
    /// `i·A_j`
    ICartan(usize),
    /// `Z_γ` for the positive root with this index.
    Z(usize),
    /// `W_γ` for the positive root with this index.
    W(usize),
}

/// Real coordinates on the compact form: `iA_1..iA_r`, then `Z_γ, W_γ` for
/// each positive root `γ` in root order.
#[derive(Clone, Copy, Debug)]
pub struct CompactBasis<'a> {
    alg: &'a ChevalleyAlgebra,
}

impl<'a> CompactBasis<'a> {
    pub fn algebra(&self) -> &'a ChevalleyAlgebra {
        self.alg
    }

    pub fn dim(&self) -> usize {
        self.alg.dim()
    }

    pub fn generator_at(&self, coord: usize) -> CompactGenerator {
        let r = self.alg.rank();
        if coord < r {
            CompactGenerator::ICartan(coord)
        } else if (coord - r).is_multiple_of(2) {
            CompactGenerator::Z((coord - r) / 2)
        } else {
            CompactGenerator::W((coord - r) / 2)
        }
    }

    pub fn coord_of(&self, g: CompactGenerator) -> usize {
        let r = self.alg.rank();
        match g {
            CompactGenerator::ICartan(j) => j,
            CompactGenerator::Z(k) => r + 2 * k,
            CompactGenerator::W(k) => r + 2 * k + 1,
        }
    }

    /// Coordinate of `Z_γ` and the sign relating it to `Z_{|γ|}`
    /// (`Z_−α = −Z_α`, `W_−α = W_α`).
    pub fn z_coord(&self, gamma: &Root) -> Result<(usize, Rational)> {
        let (k, neg) = self.positive_index(gamma)?;
        let sign = if neg { -Rational::one() } else { Rational::one() };
        Ok((self.coord_of(CompactGenerator::Z(k)), sign))
    }

    pub fn w_coord(&self, gamma: &Root) -> Result<usize> {
        Ok(self.coord_of(CompactGenerator::W(self.positive_index(gamma)?.0)))
    }

    fn positive_index(&self, gamma: &Root) -> Result<(usize, bool)> {
        let idx = self.alg.root_index(gamma)?;
        let rs = &self.alg.rs;
        Ok(if rs.is_positive_index(idx) {
            (idx, false)
        } else {
            (rs.neg_index(idx), true)
        })
    }

    pub fn generator(&self, g: CompactGenerator) -> LieElement {
        let rs = &self.alg.rs;
        match g {
            CompactGenerator::ICartan(j) => self.alg.basis(BasisIndex::Cartan(j)).scale(unit_i()),
            CompactGenerator::Z(k) => {
                let mut e = self.alg.zero();
                e.add_term(BasisIndex::RootVector(k), GaussianRational::one());
                e.add_term(BasisIndex::RootVector(rs.neg_index(k)), -GaussianRational::one());
                e
            }
            CompactGenerator::W(k) => {
                let mut e = self.alg.zero();
                e.add_term(BasisIndex::RootVector(k), unit_i());
                e.add_term(BasisIndex::RootVector(rs.neg_index(k)), unit_i());
                e
            }
        }
    }

    pub fn generators(&self) -> Vec<LieElement> {
        (0..self.dim()).map(|c| self.generator(self.generator_at(c))).collect()
    }

    pub fn unit(&self, coord: usize) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.dim()];
        v[coord] = Rational::one();
        v
    }

    /// Real coordinates of a τ-fixed element.
    pub fn to_compact(&self, x: &LieElement) -> Result<Vec<Rational>> {
        self.alg.check(x)?;
        if self.alg.tau(x)? != *x {
            return Err(LieError::NotCompact);
        }
        let rs = &self.alg.rs;
        let half = Rational::new(1, 2);
        let mut v = vec![Rational::zero(); self.dim()];
        for (idx, c) in x.terms() {
            match idx {
                BasisIndex::Cartan(j) => v[j] = (c * -unit_i()).re,
                BasisIndex::RootVector(k) if rs.is_positive_index(k) => {
                    let b = x.coeff(BasisIndex::RootVector(rs.neg_index(k)));
                    v[self.coord_of(CompactGenerator::Z(k))] = ((c - b) * real(half)).re;
                    v[self.coord_of(CompactGenerator::W(k))] = ((c + b) * imag(-half)).re;
                }
                BasisIndex::RootVector(_) => {}
            }
        }
        Ok(v)
    }

    pub fn from_compact(&self, v: &[Rational]) -> Result<LieElement> {
        if v.len() != self.dim() {
            return Err(LieError::DimensionMismatch {
                expected: self.dim(),
                found: v.len(),
            });
        }
        let rs = &self.alg.rs;
        let mut e = self.alg.zero();
        for (coord, &t) in v.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            match self.generator_at(coord) {
                CompactGenerator::ICartan(j) => e.add_term(BasisIndex::Cartan(j), imag(t)),
                CompactGenerator::Z(k) => {
                    e.add_term(BasisIndex::RootVector(k), real(t));
                    e.add_term(BasisIndex::RootVector(rs.neg_index(k)), real(-t));
                }
                CompactGenerator::W(k) => {
                    e.add_term(BasisIndex::RootVector(k), imag(t));
                    e.add_term(BasisIndex::RootVector(rs.neg_index(k)), imag(t));
                }
            }
        }
        Ok(e)
    }

    /// Bracket in compact coordinates.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        let x = self.from_compact(u)?;
        let y = self.from_compact(v)?;
        self.to_compact(&self.alg.bracket(&x, &y)?)
    }

    pub fn form(&self) -> CompactForm {
        let r = self.alg.rank();
        let np = self.alg.rs.num_positive();
        CompactForm {
            rank: r,
            cartan: self.alg.cartan_form.clone(),
            root: (0..np).map(|k| rat(2) * self.alg.root_form[k]).collect(),
        }
    }

    pub fn name(&self, coord: usize) -> String {
        let rs = &self.alg.rs;
        match self.generator_at(coord) {
            CompactGenerator::ICartan(j) => format!("iA{}", j + 1),
            CompactGenerator::Z(k) => format!("Z[{}]", rs.root(k)),
            CompactGenerator::W(k) => format!("W[{}]", rs.root(k)),
        }
    }

    pub fn format(&self, v: &[Rational]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(c, x)| format!("{}·{}", crate::scalar::fmt_rational(x), self.name(c)))
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// `⟨x, y⟩ = −B(x, y)` in compact coordinates; positive definite.
#[derive(Clone, Debug)]
pub struct CompactForm {
    rank: usize,
    cartan: Vec<Vec<Rational>>,
    /// `⟨Z_γ, Z_γ⟩ = ⟨W_γ, W_γ⟩ = 4/(γ, γ)`.
    root: Vec<Rational>,
}

impl BilinearForm for CompactForm {
    fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        let r = self.rank;
        let mut s = Rational::zero();
        for i in 0..r {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..r {
                if !y[j].is_zero() {
                    s += x[i] * y[j] * self.cartan[i][j];
                }
            }
        }
        for (c, (a, b)) in x[r..].iter().zip(&y[r..]).enumerate() {
            if !a.is_zero() && !b.is_zero() {
                s += a * b * self.root[c / 2];
            }
        }
        s
    }
}

impl fmt::Display for BasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BasisIndex::Cartan(j) => write!(f, "A{}", j + 1),
            BasisIndex::RootVector(k) => write!(f, "X#{k}"),
        }
    }
}

/// Outcome of an exact identity check over basis elements.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub cases: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failure: Option<String>,
}

impl IdentityReport {
    pub fn holds(&self) -> bool {
        self.failure.is_none()
    }

    fn run<I: IntoIterator<Item = T>, T>(
        identity: &str,
        cases: I,
        mut f: impl FnMut(&T) -> Result<Option<String>>,
    ) -> Result<Self> {
        let mut n = 0;
        for c in cases {
            n += 1;
            if let Some(msg) = f(&c)? {
                return Ok(IdentityReport {
                    identity: identity.into(),
                    cases: n,
                    failure: Some(msg),
                });
            }
        }
        Ok(IdentityReport {
            identity: identity.into(),
            cases: n,
            failure: None,
        })
    }
}

impl ChevalleyAlgebra {
    fn basis_elements(&self) -> Vec<LieElement> {
        self.basis_indices().into_iter().map(|i| self.basis(i)).collect()
    }

    /// `[[x, y], z] + [[y, z], x] + [[z, x], y]`.
    pub fn jacobiator(&self, x: &LieElement, y: &LieElement, z: &LieElement) -> Result<LieElement> {
        let a = self.bracket(&self.bracket(x, y)?, z)?;
        let b = self.bracket(&self.bracket(y, z)?, x)?;
        let c = self.bracket(&self.bracket(z, x)?, y)?;
        a.checked_add(&b)?.checked_add(&c)
    }

    /// `[x, y] = −[y, x]` on all basis pairs, including `[x, x] = 0`.
    pub fn verify_antisymmetry(&self) -> Result<IdentityReport> {
        let b = self.basis_elements();
        let pairs = (0..b.len()).flat_map(|i| (i..b.len()).map(move |j| (i, j)));
        IdentityReport::run("antisymmetry", pairs, |&(i, j)| {
            let s = self.bracket(&b[i], &b[j])?.checked_add(&self.bracket(&b[j], &b[i])?)?;
            Ok((!s.is_zero()).then(|| format!("[{0}, {1}] + [{1}, {0}] = {2}", self.format(&b[i]), self.format(&b[j]), self.format(&s))))
        })
    }

    fn jacobi_case(&self, b: &[LieElement], (i, j, k): (usize, usize, usize)) -> Result<Option<String>> {
        let jac = self.jacobiator(&b[i], &b[j], &b[k])?;
        Ok((!jac.is_zero()).then(|| {
            format!("Jacobi({}, {}, {}) = {}", self.format(&b[i]), self.format(&b[j]), self.format(&b[k]), self.format(&jac))
        }))
    }

    /// Jacobi on every triple of distinct basis elements. Triples with a
    /// repeated element follow from antisymmetry.
    pub fn verify_jacobi_exhaustive(&self) -> Result<IdentityReport> {
        let b = self.basis_elements();
        let n = b.len();
        let triples = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (j + 1..n).map(move |k| (i, j, k))));
        IdentityReport::run("jacobi", triples, |&t| self.jacobi_case(&b, t))
    }

    /// Jacobi on `samples` basis triples drawn with a seeded generator.
    pub fn verify_jacobi_sampled(&self, samples: usize, seed: u64) -> Result<IdentityReport> {
        use rand::{Rng, SeedableRng};
        let b = self.basis_elements();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let triples: Vec<_> = (0..samples)
            .map(|_| (rng.gen_range(0..b.len()), rng.gen_range(0..b.len()), rng.gen_range(0..b.len())))
            .collect();
        IdentityReport::run("jacobi (sampled)", triples, |&t| self.jacobi_case(&b, t))
    }

    /// `B([x, y], z) + B(y, [x, z]) = 0` on all basis triples.
    pub fn verify_ad_invariance(&self) -> Result<IdentityReport> {
        let b = self.basis_elements();
        let n = b.len();
        let triples = (0..n).flat_map(|i| (0..n).flat_map(move |j| (j..n).map(move |k| (i, j, k))));
        IdentityReport::run("ad-invariance", triples, |&(i, j, k)| {
            let s = self.invariant_form(&self.bracket(&b[i], &b[j])?, &b[k])?
                + self.invariant_form(&b[j], &self.bracket(&b[i], &b[k])?)?;
            Ok((!s.is_zero()).then(|| format!("x = {}, y = {}, z = {}", self.format(&b[i]), self.format(&b[j]), self.format(&b[k]))))
        })
    }

    /// Every compact generator is fixed by `τ`, and so is the bracket of
    /// any two of them.
    pub fn verify_tau_closure(&self) -> Result<IdentityReport> {
        let gens = self.compact_basis().generators();
        let n = gens.len();
        let pairs = (0..n).flat_map(|i| (i..n).map(move |j| (i, j)));
        IdentityReport::run("tau-closure", pairs, |&(i, j)| {
            for x in [&gens[i], &gens[j], &self.bracket(&gens[i], &gens[j])?] {
                if self.tau(x)? != *x {
                    return Ok(Some(format!("τ moves {}", self.format(x))));
                }
            }
            Ok(None)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::gi;

    fn alg(s: &str) -> ChevalleyAlgebra {
        ChevalleyAlgebra::new(RootSystem::new(s.parse().unwrap()).unwrap()).unwrap()
    }

    #[test]
    fn a2_extraspecial_sign() {
        let a = alg("A2");
        let rs = a.root_system();
        let n = a.structure_constants();
        assert_eq!(n.get(rs, &rs.simple_root(0), &rs.simple_root(1)).unwrap(), Some(1));
        assert_eq!(n.get(rs, &rs.simple_root(1), &rs.simple_root(0)).unwrap(), Some(-1));
        assert_eq!(n.get(rs, &rs.simple_root(0), &rs.simple_root(0)).unwrap(), None);
    }

    #[test]
    fn g2_magnitudes() {
        let a = alg("G2");
        let rs = a.root_system();
        let n = a.structure_constants();
        let (a1, a2) = (rs.simple_root(0), rs.simple_root(1));
        assert_eq!(n.get(rs, &a1, &a2).unwrap().map(i32::abs), Some(1));
        assert_eq!(n.get(rs, &a1, &(&a1 + &a2)).unwrap().map(i32::abs), Some(2));
        assert_eq!(n.get(rs, &a1, &Root::new(vec![2, 1])).unwrap().map(i32::abs), Some(3));
    }

    #[test]
    fn bracket_x_beta_x_minus_beta_is_coroot() {
        for t in ["A3", "G2", "C3", "F4"] {
            let a = alg(t);
            let beta = a.root_system().highest_root();
            let br = a.bracket(&a.x(&beta).unwrap(), &a.x(&-&beta).unwrap()).unwrap();
            assert_eq!(br, a.coroot(&beta).unwrap());
        }
    }

    #[test]
    fn mixed_algebras_rejected() {
        let a = alg("A2");
        let b = alg("A2");
        let x = a.h(0).unwrap();
        let y = b.h(0).unwrap();
        assert_eq!(a.bracket(&x, &y), Err(LieError::MixedAlgebras));
        assert!(x.checked_add(&y).is_err());
    }

    #[test]
    fn tau_rules() {
        let a = alg("B2");
        let rs = a.root_system();
        let al = rs.simple_root(0);
        assert_eq!(a.tau(&a.x(&al).unwrap()).unwrap(), -&a.x(&-&al).unwrap());
        let z = a.z(&al).unwrap();
        assert_eq!(a.tau(&z).unwrap(), z);
        let iz = z.scale(unit_i());
        assert_eq!(a.tau(&iz).unwrap(), iz.scale(-GaussianRational::one()));
        let x = &a.x(&al).unwrap() + &a.h(1).unwrap().scale(unit_i());
        assert_eq!(a.tau(&a.tau(&x).unwrap()).unwrap(), x);
    }

    #[test]
    fn form_values() {
        let a = alg("G2");
        let rs = a.root_system();
        let g = rs.simple_root(0);
        let (z, w) = (a.z(&g).unwrap(), a.w(&g).unwrap());
        assert!(a.invariant_form(&z, &w).unwrap().is_zero());
        let zz = -a.invariant_form(&z, &z).unwrap();
        assert_eq!(zz, -a.invariant_form(&w, &w).unwrap());
        // short root of G2: (γ,γ) = 2/3
        assert_eq!(zz, gi(6));
    }

    #[test]
    fn compact_round_trip() {
        let a = alg("A3");
        let cb = a.compact_basis();
        assert_eq!(cb.dim(), 15);
        for c in 0..cb.dim() {
            let g = cb.generator(cb.generator_at(c));
            assert_eq!(a.tau(&g).unwrap(), g);
            assert_eq!(cb.to_compact(&g).unwrap(), cb.unit(c));
        }
        let x = a.x(&a.root_system().simple_root(0)).unwrap();
        assert_eq!(cb.to_compact(&x), Err(LieError::NotCompact));
    }

    #[test]
    fn i_coroot_on_level_one() {
        let a = alg("G2");
        let rs = a.root_system();
        let beta = rs.highest_root();
        let ib = a.i_coroot(&beta).unwrap();
        for g in rs.level_set(&beta, 1).unwrap().iter().filter(|g| g.is_positive()) {
            let br = a.bracket(&ib, &a.z(g).unwrap()).unwrap();
            assert_eq!(br, a.w(g).unwrap());
        }
    }

    #[test]
    fn generator_counts() {
        assert_eq!(alg("A1").compact_basis().dim(), 3);
        assert_eq!(alg("G2").compact_basis().dim(), 14);
        assert_eq!(alg("E8").compact_basis().dim(), 248);
    }

    #[test]
    fn jacobi_on_basis_triples() {
        for t in ["A3", "B3", "C3", "G2", "D4"] {
            let a = alg(t);
            let r = a.verify_jacobi_exhaustive().unwrap();
            assert!(r.holds(), "{t}: {:?}", r.failure);
            assert!(a.verify_antisymmetry().unwrap().holds());
        }
    }

    #[test]
    fn form_and_tau_checks() {
        for t in ["A2", "B2", "G2"] {
            let a = alg(t);
            assert!(a.verify_ad_invariance().unwrap().holds());
            assert!(a.verify_tau_closure().unwrap().holds());
        }
        let r = alg("E6").verify_jacobi_sampled(200, 7).unwrap();
        assert!(r.holds());
        assert_eq!(r.cases, 200);
    }
}
