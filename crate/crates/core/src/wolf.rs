//! The highest-root grading of a compact simple Lie algebra and the
//! tangent model of the non-compact totally complex submanifold built from
//! a long root `δ` at level one.
//!
//! Everything here works in compact coordinates (see
//! [`crate::chevalley::CompactBasis`]), where every subspace that appears is
//! spanned by `iA`-vectors and `Z_γ, W_γ` pairs.

use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::chevalley::{ChevalleyAlgebra, CompactBasis, CompactForm, CompactGenerator, StructureConstants};
use crate::error::{LieError, Result};
use crate::linalg::{is_zero_vec, BilinearForm, Subspace};
use crate::root_system::{Root, RootSystem};
use crate::scalar::{rat, Rational};

/// A counterexample to a claimed bracket relation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub element: String,
    pub bracket: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Check {
    pub fn pass() -> Self {
        Check {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(element: impl Into<String>, bracket: impl Into<String>, reason: impl Into<String>) -> Self {
        Check {
            holds: false,
            witness: Some(Witness {
                element: element.into(),
                bracket: bracket.into(),
                reason: reason.into(),
            }),
        }
    }

    /// First failure among several checks.
    pub fn all(checks: impl IntoIterator<Item = Check>) -> Self {
        checks.into_iter().find(|c| !c.holds).unwrap_or_else(Check::pass)
    }
}

/// Runs `f` and turns its early-return failure into a [`Check`].
fn check_with(f: impl FnOnce() -> Result<std::result::Result<(), Check>>) -> Result<Check> {
    Ok(match f()? {
        Ok(()) => Check::pass(),
        Err(c) => c,
    })
}

#[derive(Debug)]
pub struct WolfDecomposition {
    alg: ChevalleyAlgebra,
    beta: usize,
    /// Root indices of `Σ_n` for `n = −2..=2`.
    levels: BTreeMap<i32, Vec<usize>>,
    form: CompactForm,
    a: Subspace,
    a_beta: Subspace,
    k: Subspace,
    m: Subspace,
    s: Subspace,
    h: Subspace,
    i_a_beta: Vec<Rational>,
}

pub fn beta_grading(rs: RootSystem, sc: StructureConstants) -> Result<WolfDecomposition> {
    WolfDecomposition::new(ChevalleyAlgebra::with_constants(rs, sc))
}

impl WolfDecomposition {
    pub fn new(alg: ChevalleyAlgebra) -> Result<Self> {
        let rs = alg.root_system();
        let beta_root = rs.highest_root();
        let beta = rs.index_of(&beta_root).expect("highest root is a root");
        let mut levels = BTreeMap::new();
        for n in -2..=2 {
            levels.insert(n, rs.level_indices(&beta_root, n)?);
        }
        let total: usize = levels.values().map(Vec::len).sum();
        if total != rs.roots().len() {
            return Err(LieError::Structural("β-levels do not partition Σ".into()));
        }
        if levels[&2] != vec![beta] || levels[&-2] != vec![rs.neg_index(beta)] {
            return Err(LieError::Structural("Σ_{±2} ≠ {±β}".into()));
        }

        let cb = alg.compact_basis();
        let dim = cb.dim();
        let r = alg.rank();
        let form = cb.form();
        let positive_level0: Vec<usize> =
            levels[&0].iter().copied().filter(|&i| rs.is_positive_index(i)).collect();
        let zw = |roots: &[usize]| {
            Subspace::coordinate(
                dim,
                roots.iter().flat_map(|&k| {
                    [cb.coord_of(CompactGenerator::Z(k)), cb.coord_of(CompactGenerator::W(k))]
                }),
            )
        };

        let a = Subspace::coordinate(dim, 0..r);
        let i_a_beta = cb.to_compact(&alg.i_coroot(&beta_root)?)?;
        let a_beta = Subspace::span(dim, [&i_a_beta])?.orthogonal_complement_in(&a, &form)?;
        let k = a.sum(&zw(&[beta]))?.sum(&zw(&positive_level0))?;
        let m = zw(&levels[&1]);
        let s = Subspace::span(dim, [i_a_beta.clone()])?.sum(&zw(&[beta]))?;
        let h = a_beta.sum(&zw(&positive_level0))?;

        Ok(WolfDecomposition {
            alg,
            beta,
            levels,
            form,
            a,
            a_beta,
            k,
            m,
            s,
            h,
            i_a_beta,
        })
    }

    pub fn algebra(&self) -> &ChevalleyAlgebra {
        &self.alg
    }

    pub fn root_system(&self) -> &RootSystem {
        self.alg.root_system()
    }

    pub fn compact_basis(&self) -> CompactBasis<'_> {
        self.alg.compact_basis()
    }

    pub fn form(&self) -> &CompactForm {
        &self.form
    }

    pub fn beta(&self) -> &Root {
        self.root_system().root(self.beta)
    }

    /// `Σ_n` relative to `β`.
    pub fn level(&self, n: i32) -> Vec<Root> {
        self.levels
            .get(&n)
            .map(|v| v.iter().map(|&i| self.root_system().root(i).clone()).collect())
            .unwrap_or_default()
    }

    pub fn k(&self) -> &Subspace {
        &self.k
    }
    pub fn m(&self) -> &Subspace {
        &self.m
    }
    pub fn s(&self) -> &Subspace {
        &self.s
    }
    pub fn h(&self) -> &Subspace {
        &self.h
    }
    pub fn a(&self) -> &Subspace {
        &self.a
    }
    pub fn a_beta(&self) -> &Subspace {
        &self.a_beta
    }

    pub fn i_a_beta(&self) -> &[Rational] {
        &self.i_a_beta
    }

    pub fn z(&self, gamma: &Root) -> Result<Vec<Rational>> {
        let cb = self.compact_basis();
        let (c, sign) = cb.z_coord(gamma)?;
        let mut v = vec![Rational::zero(); cb.dim()];
        v[c] = sign;
        Ok(v)
    }

    pub fn w(&self, gamma: &Root) -> Result<Vec<Rational>> {
        let cb = self.compact_basis();
        Ok(cb.unit(cb.w_coord(gamma)?))
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Result<Vec<Rational>> {
        self.compact_basis().bracket(u, v)
    }

    /// Orthogonal projection onto `𝔪`. The form is diagonal on root
    /// coordinates and `𝔪` is a coordinate subspace, so this is a mask.
    pub fn pi_m(&self, v: &[Rational]) -> Vec<Rational> {
        let cb = self.compact_basis();
        let level1: BTreeSet<usize> = self.levels[&1].iter().copied().collect();
        v.iter()
            .enumerate()
            .map(|(c, x)| match cb.generator_at(c) {
                CompactGenerator::Z(k) | CompactGenerator::W(k) if level1.contains(&k) => *x,
                _ => Rational::zero(),
            })
            .collect()
    }

    pub fn name(&self, v: &[Rational]) -> String {
        self.compact_basis().format(v)
    }

    /// `[𝔨,𝔨] ⊆ 𝔨`, `[𝔨,𝔪] ⊆ 𝔪`, `[𝔪,𝔪] ⊆ 𝔨`, and `⟨𝔨, 𝔪⟩ = 0`.
    pub fn verify_symmetric_pair(&self) -> Result<Check> {
        let kb = self.k.basis();
        let mb = self.m.basis();
        check_with(|| {
            let cases: [(&[Vec<Rational>], &[Vec<Rational>], &Subspace, &str); 3] = [
                (&kb, &kb, &self.k, "[k,k] ⊄ k"),
                (&kb, &mb, &self.m, "[k,m] ⊄ m"),
                (&mb, &mb, &self.k, "[m,m] ⊄ k"),
            ];
            for (xs, ys, target, reason) in cases {
                let same = std::ptr::eq(xs, ys);
                for (i, x) in xs.iter().enumerate() {
                    for y in ys.iter().skip(if same { i + 1 } else { 0 }) {
                        let br = self.bracket(x, y)?;
                        if !target.contains(&br)? {
                            return Ok(Err(self.witness2(x, y, &br, reason)));
                        }
                    }
                }
            }
            for x in &kb {
                for y in &mb {
                    if !self.form.eval(x, y).is_zero() {
                        return Ok(Err(Check::fail(self.name(x), self.name(y), "⟨k, m⟩ ≠ 0")));
                    }
                }
            }
            if self.m.dim() != 2 * self.levels[&1].len() || self.k.dim() + self.m.dim() != self.alg.dim() {
                return Ok(Err(Check::fail("g", "", "g ≠ k ⊕ m")));
            }
            Ok(Ok(()))
        })
    }

    fn witness2(&self, x: &[Rational], y: &[Rational], br: &[Rational], reason: &str) -> Check {
        Check::fail(
            format!("{} ; {}", self.name(x), self.name(y)),
            self.name(br),
            reason,
        )
    }

    /// `𝔰` is an ideal of `𝔨` and satisfies the `𝔰𝔭(1)` relations
    /// `[iA_β, Z_β] = 2W_β`, `[iA_β, W_β] = −2Z_β`, `[Z_β, W_β] = 2iA_β`.
    pub fn verify_ideal_s(&self) -> Result<Check> {
        check_with(|| {
            for x in self.k.basis() {
                for y in self.s.basis() {
                    let br = self.bracket(&x, &y)?;
                    if !self.s.contains(&br)? {
                        return Ok(Err(self.witness2(&x, &y, &br, "[k, s] ⊄ s")));
                    }
                }
            }
            let ia = &self.i_a_beta;
            let z = self.z(self.beta())?;
            let w = self.w(self.beta())?;
            let two = |v: &[Rational]| v.iter().map(|x| x * rat(2)).collect::<Vec<_>>();
            let relations = [
                (ia.clone(), z.clone(), two(&w), "[iA_β, Z_β] ≠ 2W_β"),
                (ia.clone(), w.clone(), two(&z).iter().map(|x| -x).collect(), "[iA_β, W_β] ≠ −2Z_β"),
                (z.clone(), w.clone(), two(ia), "[Z_β, W_β] ≠ 2iA_β"),
            ];
            for (x, y, expected, reason) in relations {
                let br = self.bracket(&x, &y)?;
                if br != expected {
                    return Ok(Err(self.witness2(&x, &y, &br, reason)));
                }
            }
            Ok(Ok(()))
        })
    }

    /// On `𝔪`: `ad(iA_β)² = −id`, `ad(Z_β)² = ad(W_β)² = −c·id` for one
    /// `c > 0`, and the three maps anticommute pairwise. Returns the check
    /// and `c`.
    pub fn verify_quaternionic(&self) -> Result<(Check, Option<Rational>)> {
        let ops = [
            ("iA_β", self.i_a_beta.clone()),
            ("Z_β", self.z(self.beta())?),
            ("W_β", self.w(self.beta())?),
        ];
        let mut c: Option<Rational> = None;
        let check = check_with(|| {
            for v in self.m.basis() {
                let images: Vec<Vec<Rational>> =
                    ops.iter().map(|(_, t)| self.bracket(t, &v)).collect::<Result<_>>()?;
                for (idx, (name, t)) in ops.iter().enumerate() {
                    let sq = self.bracket(t, &images[idx])?;
                    let ratio = ratio_of(&sq, &v);
                    let expected = if idx == 0 { Some(-Rational::one()) } else { ratio.filter(|r| *r < Rational::zero()) };
                    match (ratio, expected) {
                        (Some(r), Some(e)) if r == e => {
                            if idx > 0 {
                                match c {
                                    None => c = Some(-r),
                                    Some(c0) if c0 == -r => {}
                                    Some(_) => {
                                        return Ok(Err(Check::fail(self.name(&v), *name, "ad² eigenvalue not shared")))
                                    }
                                }
                            }
                        }
                        _ => {
                            return Ok(Err(Check::fail(
                                self.name(&v),
                                format!("ad({name})² v = {}", self.name(&sq)),
                                "not a negative multiple of the identity",
                            )))
                        }
                    }
                }
                for i in 0..3 {
                    for j in i + 1..3 {
                        let ij = self.bracket(&ops[i].1, &images[j])?;
                        let ji = self.bracket(&ops[j].1, &images[i])?;
                        if !is_zero_vec(&add(&ij, &ji)) {
                            return Ok(Err(Check::fail(
                                self.name(&v),
                                format!("ad({})ad({}) + ad({})ad({})", ops[i].0, ops[j].0, ops[j].0, ops[i].0),
                                "structures do not anticommute",
                            )));
                        }
                    }
                }
            }
            Ok(Ok(()))
        })?;
        Ok((check, c))
    }

    /// Long roots at level one; the admissible choices of `δ`.
    pub fn delta_candidates(&self) -> Vec<Root> {
        let rs = self.root_system();
        self.levels[&1]
            .iter()
            .map(|&i| rs.root(i))
            .filter(|r| rs.is_long(r))
            .cloned()
            .collect()
    }

    /// The canonical `δ`: maximal among the candidates in the root order.
    pub fn choose_delta(&self) -> Result<Root> {
        self.delta_candidates().into_iter().max().ok_or_else(|| LieError::NoDelta {
            root_system: self.root_system().root_type().to_string(),
        })
    }
}

fn add(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// `r` with `a = r·b`, if any (`b ≠ 0`).
fn ratio_of(a: &[Rational], b: &[Rational]) -> Option<Rational> {
    let (i, bi) = b.iter().enumerate().find(|(_, x)| !x.is_zero())?;
    let r = a[i] / bi;
    a.iter().zip(b).all(|(x, y)| *x == r * y).then_some(r)
}

pub fn choose_delta(wd: &WolfDecomposition) -> Result<Root> {
    wd.choose_delta()
}

/// The tangent model `𝔪_N` and the subspaces of `𝔥` attached to `δ`.
#[derive(Debug, Clone)]
pub struct SubmanifoldModel {
    pub delta: Root,
    pub h_p: Subspace,
    /// `𝔥ₚ` as the fixed points of the involution `Ad(exp(πZ_δ))` on `𝔥`.
    pub h_p_fixed: Subspace,
    /// Fixed points of the same involution on `𝔨`.
    pub k_p: Subspace,
    pub h1: Subspace,
    pub h2: Subspace,
    pub h3: Subspace,
    pub h4: Subspace,
    /// `𝔪_N` from its `Δ±` presentation.
    pub m_n: Subspace,
    /// `𝔪_N` from `Σ_{β,1} ∩ Σ_{δ,1}`.
    pub m_n_alt: Subspace,
    /// Orthogonal complement of `𝔪_N` in `𝔪`.
    pub m_n_perp: Subspace,
    /// The displayed spanning set of the complement.
    pub m_n_perp_displayed: Subspace,
    pub delta_plus: Vec<Root>,
    pub delta_minus: Vec<Root>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[allow(non_snake_case)]
pub struct Dims {
    pub dim_M: usize,
    pub dim_N: usize,
    pub dim_Hp: usize,
    pub dim_Kp: usize,
    pub dim_k: usize,
    pub dim_h: usize,
    pub dim_h_p: usize,
}

impl SubmanifoldModel {
    pub fn build(wd: &WolfDecomposition, delta: &Root) -> Result<Self> {
        let rs = wd.root_system();
        if !wd.delta_candidates().contains(delta) {
            return Err(LieError::InvalidIndex(format!(
                "{delta} is not a long root at level 1 of {}",
                rs.root_type()
            )));
        }
        Self::build_unchecked(wd, delta)
    }

    /// Builds the model for any level-one root, long or not. Used for
    /// negative controls.
    pub fn build_unchecked(wd: &WolfDecomposition, delta: &Root) -> Result<Self> {
        let rs = wd.root_system();
        let cb = wd.compact_basis();
        let dim = cb.dim();
        let d = rs.index_of(delta).ok_or_else(|| LieError::NotARoot(delta.to_string()))?;
        if !wd.levels[&1].contains(&d) {
            return Err(LieError::InvalidIndex(format!("{delta} is not at level 1")));
        }
        let beta = wd.beta().clone();
        let bmd = &beta - delta;
        let lvl = |g: &Root, a: &Root| -> Result<i32> { rs.cartan_integer(a, g) };
        let positive_level0: Vec<Root> = wd.level(0).into_iter().filter(Root::is_positive).collect();
        let zw = |roots: &[Root]| -> Result<Subspace> {
            let mut coords = Vec::new();
            for g in roots {
                coords.push(cb.z_coord(g)?.0);
                coords.push(cb.w_coord(g)?);
            }
            Ok(Subspace::coordinate(dim, coords))
        };
        let select = |g: &Root, n: i32| -> Result<Vec<Root>> {
            positive_level0
                .iter()
                .filter_map(|a| match lvl(g, a) {
                    Ok(l) if l == n => Some(Ok(a.clone())),
                    Ok(_) => None,
                    Err(e) => Some(Err(e)),
                })
                .collect()
        };

        let h_p = wd.a_beta.sum(&zw(&select(&bmd, 0)?)?)?;
        let fixed_roots: Vec<Root> = positive_level0
            .iter()
            .filter(|a| lvl(&bmd, a).map(|n| n % 2 == 0).unwrap_or(false))
            .cloned()
            .collect();
        let h_p_fixed = wd.a_beta.sum(&zw(&fixed_roots)?)?;
        let k_roots: Vec<Root> = std::iter::once(beta.clone())
            .chain(positive_level0.iter().cloned())
            .filter(|a| lvl(&bmd, a).map(|n| n % 2 == 0).unwrap_or(false))
            .collect();
        let k_p = wd.a.sum(&zw(&k_roots)?)?;

        let h1 = wd.a_beta.clone();
        let h2 = zw(&select(delta, 0)?)?;
        let plus_src = select(delta, 1)?;
        let minus_src = select(delta, -1)?;
        let h3 = zw(&plus_src)?;
        let h4 = zw(&minus_src)?;

        let delta_plus: Vec<Root> = plus_src.iter().map(|g| delta - g).collect();
        let delta_minus: Vec<Root> = minus_src.iter().map(|g| delta + g).collect();
        for r in delta_plus.iter().chain(&delta_minus) {
            if !rs.contains(r) {
                return Err(LieError::Structural(format!("{r} from Δ± is not a root")));
            }
        }
        let mut n_roots = vec![delta.clone()];
        n_roots.extend(delta_plus.iter().cloned());
        n_roots.extend(delta_minus.iter().cloned());
        let m_n = zw(&n_roots)?;

        let level1 = wd.level(1);
        let mut alt_roots = vec![delta.clone()];
        let mut perp_roots = vec![bmd.clone()];
        for g in &level1 {
            match lvl(delta, g) {
                Ok(1) => alt_roots.push(g.clone()),
                Ok(0) => perp_roots.push(g.clone()),
                Ok(_) => {}
                Err(e) => return Err(e),
            }
        }
        let m_n_alt = zw(&alt_roots)?;
        let m_n_perp_displayed = if rs.contains(&bmd) {
            zw(&perp_roots)?
        } else {
            zw(&perp_roots[1..])?
        };
        let m_n_perp = m_n.orthogonal_complement_in(&wd.m, &wd.form)?;

        Ok(SubmanifoldModel {
            delta: delta.clone(),
            h_p,
            h_p_fixed,
            k_p,
            h1,
            h2,
            h3,
            h4,
            m_n,
            m_n_alt,
            m_n_perp,
            m_n_perp_displayed,
            delta_plus,
            delta_minus,
        })
    }

    pub fn dims(&self, wd: &WolfDecomposition) -> Dims {
        Dims {
            dim_M: wd.m.dim(),
            dim_N: self.m_n.dim(),
            dim_Hp: wd.h.dim() - self.h_p.dim(),
            dim_Kp: wd.k.dim() - self.k_p.dim(),
            dim_k: wd.k.dim(),
            dim_h: wd.h.dim(),
            dim_h_p: self.h_p.dim(),
        }
    }

    /// Two presentations of `𝔥ₚ` agree, `𝔥 = Σ𝔥ᵢ` and `𝔥ₚ = 𝔥₁ + 𝔥₂`.
    pub fn verify_h_decomposition(&self, wd: &WolfDecomposition) -> Result<Check> {
        let sum = self.h1.sum(&self.h2)?.sum(&self.h3)?.sum(&self.h4)?;
        let p12 = self.h1.sum(&self.h2)?;
        Ok(if self.h_p != self.h_p_fixed {
            Check::fail("h_p", "", "displayed h_p differs from the fixed points of the involution")
        } else if sum != wd.h {
            Check::fail("h", "", "h ≠ h1 + h2 + h3 + h4")
        } else if p12 != self.h_p {
            Check::fail("h_p", "", "h_p ≠ h1 + h2")
        } else {
            Check::pass()
        })
    }

    /// `𝔪_N` in both presentations, its orthogonal complement, and the
    /// dimension identities.
    pub fn verify_tangent_model(&self, wd: &WolfDecomposition) -> Result<Check> {
        let d = self.dims(wd);
        Ok(if self.m_n != self.m_n_alt {
            Check::fail("m_N", "", "Δ± presentation differs from the Σ_{β,1} ∩ Σ_{δ,1} one")
        } else if !wd.m.contains_subspace(&self.m_n) {
            Check::fail("m_N", "", "m_N ⊄ m")
        } else if self.m_n_perp != self.m_n_perp_displayed {
            Check::fail("m_N^⊥", "", "orthogonal complement differs from the displayed span")
        } else if self.m_n_perp.dim() != self.m_n.dim() || self.m_n.dim() + self.m_n_perp.dim() != wd.m.dim() {
            Check::fail("m_N^⊥", "", "m ≠ m_N ⊕ m_N^⊥ with equal dimensions")
        } else if 2 * d.dim_N != d.dim_M {
            Check::fail("dims", format!("dim N = {}, dim M = {}", d.dim_N, d.dim_M), "2 dim N ≠ dim M")
        } else if d.dim_N != d.dim_Hp + 2 {
            Check::fail("dims", format!("dim N = {}, dim H(p) = {}", d.dim_N, d.dim_Hp), "dim N ≠ dim H(p) + 2")
        } else if d.dim_Kp != d.dim_Hp + 2 {
            Check::fail("dims", format!("dim K(p) = {}, dim H(p) = {}", d.dim_Kp, d.dim_Hp), "dim K(p) ≠ dim H(p) + 2")
        } else {
            Check::pass()
        })
    }

    /// Every `T ∈ 𝔥ₚ` preserves `span{Z_δ, W_δ}`, and the root vectors of
    /// `Σ⁺_{β,0} ∩ Σ_{β−δ,0}` commute with `Z_δ` and `W_δ`.
    pub fn verify_lemma_rotation(&self, wd: &WolfDecomposition) -> Result<Check> {
        let zd = wd.z(&self.delta)?;
        let wdl = wd.w(&self.delta)?;
        let plane = Subspace::span(zd.len(), [&zd, &wdl])?;
        let cb = wd.compact_basis();
        check_with(|| {
            for t in self.h_p.basis() {
                for v in [&zd, &wdl] {
                    let br = wd.bracket(&t, v)?;
                    if !plane.contains(&br)? {
                        return Ok(Err(wd.witness2(&t, v, &br, "[h_p, Z_δ/W_δ] leaves RZ_δ + RW_δ")));
                    }
                }
            }
            for t in self.h_p.basis() {
                let is_root_vector = t
                    .iter()
                    .enumerate()
                    .any(|(c, x)| !x.is_zero() && !matches!(cb.generator_at(c), CompactGenerator::ICartan(_)));
                if !is_root_vector {
                    continue;
                }
                for v in [&zd, &wdl] {
                    let br = wd.bracket(&t, v)?;
                    if !is_zero_vec(&br) {
                        return Ok(Err(wd.witness2(&t, v, &br, "root vector of h_p does not commute with Z_δ/W_δ")));
                    }
                }
            }
            Ok(Ok(()))
        })
    }

    /// The four set identities for `Σ_{β,1} ∩ Σ_{δ,n}`.
    pub fn verify_lemma_root(&self, wd: &WolfDecomposition) -> Result<Check> {
        let rs = wd.root_system();
        let beta = wd.beta();
        let level1 = wd.level(1);
        let at = |n: i32| -> Result<BTreeSet<Root>> {
            let mut out = BTreeSet::new();
            for g in &level1 {
                if rs.cartan_integer(g, &self.delta)? == n {
                    out.insert(g.clone());
                }
            }
            Ok(out)
        };
        let one = at(1)?;
        let plus: BTreeSet<Root> = self.delta_plus.iter().cloned().collect();
        let minus: BTreeSet<Root> = self.delta_minus.iter().cloned().collect();
        let union: BTreeSet<Root> = plus.union(&minus).cloned().collect();
        let reflected: BTreeSet<Root> = one.iter().map(|g| beta - g).collect();
        let fmt = |s: &BTreeSet<Root>| s.iter().map(Root::to_string).collect::<Vec<_>>().join(", ");
        Ok(if !plus.is_disjoint(&minus) || plus.len() != self.delta_plus.len() || minus.len() != self.delta_minus.len() {
            Check::fail("Δ±", fmt(&plus.intersection(&minus).cloned().collect()), "Δ₊ and Δ₋ are not disjoint")
        } else if union != one {
            Check::fail("Σ_{β,1} ∩ Σ_{δ,1}", fmt(&one), "≠ Δ₊ ⊔ Δ₋")
        } else if at(0)? != reflected {
            Check::fail("Σ_{β,1} ∩ Σ_{δ,0}", fmt(&at(0)?), "≠ β − (Σ_{β,1} ∩ Σ_{δ,1})")
        } else if at(2)? != BTreeSet::from([self.delta.clone()]) {
            Check::fail("Σ_{β,1} ∩ Σ_{δ,2}", fmt(&at(2)?), "≠ {δ}")
        } else if at(-1)? != BTreeSet::from([beta - &self.delta]) {
            Check::fail("Σ_{β,1} ∩ Σ_{δ,−1}", fmt(&at(-1)?), "≠ {β − δ}")
        } else {
            Check::pass()
        })
    }

    /// `[iA_β, 𝔪_N] ⊆ 𝔪_N`, `[Z_β, 𝔪_N] ⊥ 𝔪_N`, `[W_β, 𝔪_N] ⊥ 𝔪_N`.
    pub fn verify_lemma_totally_complex(&self, wd: &WolfDecomposition) -> Result<Check> {
        let zb = wd.z(wd.beta())?;
        let wb = wd.w(wd.beta())?;
        let basis = self.m_n.basis();
        check_with(|| {
            for v in &basis {
                let br = wd.bracket(wd.i_a_beta(), v)?;
                if !self.m_n.contains(&br)? {
                    return Ok(Err(wd.witness2(wd.i_a_beta(), v, &br, "[iA_β, m_N] ⊄ m_N")));
                }
                for (t, reason) in [(&zb, "[Z_β, m_N] not ⊥ m_N"), (&wb, "[W_β, m_N] not ⊥ m_N")] {
                    let br = wd.bracket(t, v)?;
                    for w in &basis {
                        if !wd.form.eval(&br, w).is_zero() {
                            return Ok(Err(Check::fail(
                                format!("{} ; {}", wd.name(v), wd.name(w)),
                                wd.name(&br),
                                reason,
                            )));
                        }
                    }
                }
            }
            Ok(Ok(()))
        })
    }

    /// The bracket facts behind the computation of `T_{a(t)}N`.
    pub fn verify_projection_claims(&self, wd: &WolfDecomposition) -> Result<Check> {
        let rs = wd.root_system();
        let zd = wd.z(&self.delta)?;
        let wdl = wd.w(&self.delta)?;
        let dim = zd.len();
        let line_w = Subspace::span(dim, [&wdl])?;
        let zw_of = |roots: &[Root]| -> Result<Subspace> {
            let mut vs = Vec::new();
            for g in roots {
                vs.push(wd.z(g)?);
                vs.push(wd.w(g)?);
            }
            Subspace::span(dim, vs)
        };
        check_with(|| {
            // π_𝔪 ad(Z_δ)^k 𝔥₁: odd powers fill RW_δ, even powers vanish.
            let mut image = Subspace::zero(dim);
            for t in self.h1.basis() {
                let mut v = t.clone();
                for k in 1..=3 {
                    v = wd.bracket(&zd, &v)?;
                    let p = wd.pi_m(&v);
                    let ok = if k % 2 == 0 { is_zero_vec(&p) } else { line_w.contains(&p)? };
                    if !ok {
                        return Ok(Err(Check::fail(
                            wd.name(&t),
                            format!("π_m ad(Z_δ)^{k} = {}", wd.name(&p)),
                            "projection of Ad(b(t)⁻¹)h1 leaves RW_δ",
                        )));
                    }
                    if k == 1 {
                        image.insert(&p)?;
                    }
                }
            }
            if image != line_w {
                return Ok(Err(Check::fail("h1", wd.name(&wdl), "π_m[Z_δ, h1] ≠ RW_δ")));
            }
            for t in self.h2.basis() {
                for v in [&zd, &wdl] {
                    let br = wd.bracket(&t, v)?;
                    if !is_zero_vec(&br) {
                        return Ok(Err(wd.witness2(&t, v, &br, "[h2, Z_δ] ≠ 0")));
                    }
                }
            }
            for (hi, target, label) in [
                (&self.h3, zw_of(&self.delta_plus)?, "[Z_δ, h3] ≠ Δ₊ span"),
                (&self.h4, zw_of(&self.delta_minus)?, "[Z_δ, h4] ≠ Δ₋ span"),
            ] {
                let mut img = Subspace::zero(dim);
                for t in hi.basis() {
                    let br = wd.bracket(&zd, &t)?;
                    if !target.contains(&br)? {
                        return Ok(Err(wd.witness2(&zd, &t, &br, label)));
                    }
                    img.insert(&br)?;
                }
                if img != target {
                    return Ok(Err(Check::fail("h3/h4", "", label)));
                }
            }
            let mut c: Option<Rational> = None;
            for g in rs.level_set(&self.delta, 1)? {
                let target = &self.delta - &g;
                for (v, t, kind) in [(wd.z(&g)?, wd.z(&target)?, "Z"), (wd.w(&g)?, wd.w(&target)?, "W")] {
                    let br = wd.bracket(&zd, &v)?;
                    let r = ratio_of(&br, &t);
                    if r != Some(Rational::one()) && r != Some(-Rational::one()) {
                        return Ok(Err(wd.witness2(&zd, &v, &br, &format!("[Z_δ, {kind}_γ] ≠ ±{kind}_(δ−γ)"))));
                    }
                    let sq = wd.bracket(&zd, &br)?;
                    let ratio = ratio_of(&sq, &v);
                    match (ratio, c) {
                        (Some(r), None) if r < Rational::zero() => c = Some(-r),
                        (Some(r), Some(c0)) if r == -c0 => {}
                        _ => {
                            return Ok(Err(Check::fail(
                                wd.name(&v),
                                format!("ad(Z_δ)² = {}", wd.name(&sq)),
                                "ad(Z_δ)² is not −c·id with one c > 0",
                            )))
                        }
                    }
                }
            }
            let mut tangent = Subspace::span(dim, [&zd])?;
            for t in wd.h.basis() {
                tangent.insert(&wd.bracket(&t, &zd)?)?;
            }
            if tangent != self.m_n {
                return Ok(Err(Check::fail("m_N", "", "m_N ≠ RZ_δ + [h, Z_δ]")));
            }
            Ok(Ok(()))
        })
    }

    /// The four lemma checks in a fixed order.
    pub fn lemma_checks(&self, wd: &WolfDecomposition) -> Result<[(&'static str, Check); 4]> {
        Ok([
            ("lemma_rotation", self.verify_lemma_rotation(wd)?),
            ("lemma_root", self.verify_lemma_root(wd)?),
            ("lemma_totally_complex", self.verify_lemma_totally_complex(wd)?),
            ("projection_claims", self.verify_projection_claims(wd)?),
        ])
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub space: String,
    pub root_system: String,
    pub beta: Vec<i32>,
    pub delta: Vec<i32>,
    pub dims: Dims,
    /// `c` in `ad(Z_β)² = −c·id` on `𝔪`.
    pub quaternionic_c: Option<String>,
    pub deltas_checked: usize,
    pub verdicts: BTreeMap<String, bool>,
    pub witnesses: BTreeMap<String, Witness>,
}

impl VerificationReport {
    pub fn all_hold(&self) -> bool {
        self.verdicts.values().all(|&v| v)
    }
}

/// Lemma verdicts for every admissible `δ`, compared with the canonical one.
pub fn verify_delta_independence(wd: &WolfDecomposition) -> Result<(Check, usize)> {
    let canonical = wd.choose_delta()?;
    let reference = verdict_vector(wd, &canonical)?;
    let candidates = wd.delta_candidates();
    for d in &candidates {
        let v = verdict_vector(wd, d)?;
        if v != reference {
            return Ok((
                Check::fail(d.to_string(), format!("{v:?} vs {reference:?}"), "verdicts depend on δ"),
                candidates.len(),
            ));
        }
    }
    Ok((Check::pass(), candidates.len()))
}

fn verdict_vector(wd: &WolfDecomposition, delta: &Root) -> Result<Vec<bool>> {
    let model = SubmanifoldModel::build(wd, delta)?;
    Ok(model.lemma_checks(wd)?.iter().map(|(_, c)| c.holds).collect())
}

/// Runs the whole pipeline for one root system.
pub fn full_report(space: &str, wd: &WolfDecomposition) -> Result<VerificationReport> {
    let delta = wd.choose_delta()?;
    let model = SubmanifoldModel::build(wd, &delta)?;
    let (quat, c) = wd.verify_quaternionic()?;
    let (indep, n_deltas) = verify_delta_independence(wd)?;
    let mut checks: Vec<(&str, Check)> = vec![
        ("symmetric_pair", wd.verify_symmetric_pair()?),
        ("ideal_s", wd.verify_ideal_s()?),
        ("quaternionic", quat),
        ("h_decomposition", model.verify_h_decomposition(wd)?),
        ("tangent_model", model.verify_tangent_model(wd)?),
    ];
    checks.extend(model.lemma_checks(wd)?);
    checks.push(("delta_independence", indep));

    let mut verdicts = BTreeMap::new();
    let mut witnesses = BTreeMap::new();
    for (name, c) in checks {
        verdicts.insert(name.to_string(), c.holds);
        if let Some(w) = c.witness {
            witnesses.insert(name.to_string(), w);
        }
    }
    Ok(VerificationReport {
        space: space.to_string(),
        root_system: wd.root_system().root_type().to_string(),
        beta: wd.beta().coeffs().to_vec(),
        delta: delta.coeffs().to_vec(),
        dims: model.dims(wd),
        quaternionic_c: c.map(|c| crate::scalar::fmt_rational(&c)),
        deltas_checked: n_deltas,
        verdicts,
        witnesses,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wd(s: &str) -> WolfDecomposition {
        let rs = RootSystem::new(s.parse().unwrap()).unwrap();
        WolfDecomposition::new(ChevalleyAlgebra::new(rs).unwrap()).unwrap()
    }

    #[test]
    fn g2_dimensions() {
        let w = wd("G2");
        assert_eq!((w.k().dim(), w.m().dim(), w.h().dim()), (6, 8, 3));
        let delta = w.choose_delta().unwrap();
        assert_eq!(w.root_system().inner(&delta, &delta).unwrap(), rat(2));
        let m = SubmanifoldModel::build(&w, &delta).unwrap();
        assert_eq!((m.m_n.dim(), m.h_p.dim()), (4, 1));
        assert_eq!(m.dims(&w).dim_Hp, 2);
    }

    #[test]
    fn a1_has_empty_m() {
        let w = wd("A1");
        assert_eq!(w.m().dim(), 0);
        assert!(w.level(0).is_empty());
        assert!(matches!(w.choose_delta(), Err(LieError::NoDelta { .. })));
    }

    #[test]
    fn symplectic_has_no_delta() {
        for n in 2..=4 {
            let w = wd(&format!("C{n}"));
            assert!(matches!(w.choose_delta(), Err(LieError::NoDelta { .. })));
        }
    }

    #[test]
    fn a3_delta_is_at_level_one() {
        let w = wd("A3");
        let d = w.choose_delta().unwrap();
        assert_eq!(w.root_system().cartan_integer(&d, w.beta()).unwrap(), 1);
    }

    #[test]
    fn g2_lemmas_hold() {
        let w = wd("G2");
        let m = SubmanifoldModel::build(&w, &w.choose_delta().unwrap()).unwrap();
        for (name, c) in m.lemma_checks(&w).unwrap() {
            assert!(c.holds, "{name}: {:?}", c.witness);
        }
        assert!(w.verify_symmetric_pair().unwrap().holds);
        assert!(w.verify_ideal_s().unwrap().holds);
        let (q, c) = w.verify_quaternionic().unwrap();
        assert!(q.holds);
        assert_eq!(c, Some(Rational::one()));
    }

    #[test]
    fn short_delta_breaks_rotation() {
        let w = wd("B4");
        let rs = w.root_system();
        let short = w.level(1).into_iter().find(|r| !rs.is_long(r)).unwrap();
        assert!(SubmanifoldModel::build(&w, &short).is_err());
        let m = SubmanifoldModel::build_unchecked(&w, &short).unwrap();
        let c = m.verify_lemma_rotation(&w).unwrap();
        assert!(!c.holds);
        assert!(c.witness.is_some());
    }

    #[test]
    fn pi_m_matches_generic_projector() {
        let w = wd("G2");
        let p = w.m().projector(w.form()).unwrap();
        let v: Vec<Rational> = (0..14).map(|i| rat(i as i64 - 5)).collect();
        assert_eq!(w.pi_m(&v), p.project(&v, w.form()).unwrap());
    }
}
