//! The compact exceptional algebra 𝔤₂ realized inside 𝔰𝔬(7).
//!
//! `G_ij` is the elementary skew map `e_i ↦ e_j`, `e_j ↦ −e_i`, and the
//! seven families `V_i(λ, μ, ν)` are fixed combinations of three `G_ij`
//! each. The 21 families' coefficients are independent coordinates on
//! 𝔰𝔬(7); 𝔤₂ is cut out by `λ + μ + ν = 0` in every family.
//!
//! The orbit `L = Ad(H)Z_δ` through `a = Z_δ = V₆(0,1,−1)` has tangent
//! space `[𝔥, Z_δ]`; its second fundamental form in the round sphere of 𝔪
//! is `h(X, Y) = π_N([X, [Y, Z_δ]])`.

use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{LieError, Result};
use crate::linalg::{BilinearForm, Projector, Subspace};
use crate::scalar::{fmt_rational, rat, Rational};
use crate::wolf::{Check, SubmanifoldModel, WolfDecomposition};

/// A skew-symmetric 7×7 rational matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct So7Matrix([[Rational; 7]; 7]);

impl So7Matrix {
    pub fn zero() -> Self {
        So7Matrix([[Rational::zero(); 7]; 7])
    }

    pub fn from_entries(m: [[Rational; 7]; 7]) -> Result<Self> {
        for i in 0..7 {
            for j in 0..7 {
                if m[i][j] != -m[j][i] {
                    return Err(LieError::Structural(format!("entry ({i},{j}) breaks skew-symmetry")));
                }
            }
        }
        Ok(So7Matrix(m))
    }

    pub fn entries(&self) -> &[[Rational; 7]; 7] {
        &self.0
    }

    pub fn scale(&self, c: Rational) -> Self {
        let mut m = self.0;
        m.iter_mut().flatten().for_each(|x| *x *= c);
        So7Matrix(m)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Zero::is_zero)
    }

    fn product(&self, other: &Self) -> [[Rational; 7]; 7] {
        let mut p = [[Rational::zero(); 7]; 7];
        for i in 0..7 {
            for k in 0..7 {
                if self.0[i][k].is_zero() {
                    continue;
                }
                for j in 0..7 {
                    p[i][j] += self.0[i][k] * other.0[k][j];
                }
            }
        }
        p
    }

    /// `XY − YX`.
    pub fn bracket(&self, other: &Self) -> Self {
        let (a, b) = (self.product(other), other.product(self));
        let mut m = [[Rational::zero(); 7]; 7];
        for i in 0..7 {
            for j in 0..7 {
                m[i][j] = a[i][j] - b[i][j];
            }
        }
        So7Matrix(m)
    }

    pub fn trace_product(&self, other: &Self) -> Rational {
        (0..7).map(|i| (0..7).map(|k| self.0[i][k] * other.0[k][i]).sum::<Rational>()).sum()
    }

    /// Image of `e_k` (1-based).
    pub fn apply_basis(&self, k: usize) -> [Rational; 7] {
        std::array::from_fn(|row| self.0[row][k - 1])
    }

    /// The 21 entries above the diagonal, row by row.
    pub fn coords(&self) -> Vec<Rational> {
        (0..7).flat_map(|i| (i + 1..7).map(move |j| (i, j))).map(|(i, j)| self.0[i][j]).collect()
    }

    pub fn from_coords(c: &[Rational]) -> Result<Self> {
        if c.len() != 21 {
            return Err(LieError::DimensionMismatch {
                expected: 21,
                found: c.len(),
            });
        }
        let mut m = [[Rational::zero(); 7]; 7];
        let mut it = c.iter();
        for i in 0..7 {
            for j in i + 1..7 {
                let x = *it.next().expect("21 coordinates");
                m[i][j] = x;
                m[j][i] = -x;
            }
        }
        Ok(So7Matrix(m))
    }

    /// Coefficients `(λ, μ, ν)` of each family `V_1..V_7`.
    pub fn v_components(&self) -> [[Rational; 3]; 7] {
        std::array::from_fn(|f| {
            std::array::from_fn(|t| {
                let (s, i, j) = V_TABLE[f][t];
                // G_ij has −1 at (i, j)
                -self.0[i - 1][j - 1] * rat(s)
            })
        })
    }

    /// Writes the matrix as one `V_i(λ, μ, ν)` if it lies in a single family.
    pub fn as_single_v(&self) -> Option<VFamily> {
        let comps = self.v_components();
        let nonzero: Vec<usize> = (0..7).filter(|&f| comps[f].iter().any(|x| !x.is_zero())).collect();
        match nonzero.as_slice() {
            [] => Some(VFamily::new(1, rat(0), rat(0), rat(0))),
            [f] => Some(VFamily::new(f + 1, comps[*f][0], comps[*f][1], comps[*f][2])),
            _ => None,
        }
    }

    /// Sum of `V_i(…)` terms, e.g. `V4(2,-1,-1) + V7(0,1,-1)`.
    pub fn describe(&self) -> String {
        let comps = self.v_components();
        let terms: Vec<String> = (0..7)
            .filter(|&f| comps[f].iter().any(|x| !x.is_zero()))
            .map(|f| VFamily::new(f + 1, comps[f][0], comps[f][1], comps[f][2]).to_string())
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl Add for So7Matrix {
    type Output = So7Matrix;
    fn add(self, rhs: Self) -> Self {
        let mut m = self.0;
        for i in 0..7 {
            for j in 0..7 {
                m[i][j] += rhs.0[i][j];
            }
        }
        So7Matrix(m)
    }
}

impl Sub for So7Matrix {
    type Output = So7Matrix;
    fn sub(self, rhs: Self) -> Self {
        self + -rhs
    }
}

impl Neg for So7Matrix {
    type Output = So7Matrix;
    fn neg(self) -> Self {
        self.scale(-Rational::one())
    }
}

/// `G_ij` for `1 ≤ i ≠ j ≤ 7`.
pub fn g_ij(i: usize, j: usize) -> Result<So7Matrix> {
    if i == j || !(1..=7).contains(&i) || !(1..=7).contains(&j) {
        return Err(LieError::InvalidIndex(format!("G_{{{i}{j}}} needs 1 ≤ i ≠ j ≤ 7")));
    }
    let mut m = [[Rational::zero(); 7]; 7];
    m[j - 1][i - 1] = Rational::one();
    m[i - 1][j - 1] = -Rational::one();
    Ok(So7Matrix(m))
}

/// `(sign, i, j)` of the `G_ij` multiplying `λ`, `μ`, `ν` in each family.
const V_TABLE: [[(i64, usize, usize); 3]; 7] = [
    [(1, 2, 3), (1, 4, 5), (1, 6, 7)],
    [(-1, 1, 3), (-1, 4, 6), (1, 5, 7)],
    [(1, 1, 2), (1, 4, 7), (1, 5, 6)],
    [(-1, 1, 5), (1, 2, 6), (-1, 3, 7)],
    [(1, 1, 4), (-1, 2, 7), (-1, 3, 6)],
    [(-1, 1, 7), (-1, 2, 4), (1, 3, 5)],
    [(1, 1, 6), (1, 2, 5), (1, 3, 4)],
];

/// `V_i(λ, μ, ν)` for `1 ≤ i ≤ 7`.
pub fn v(i: usize, lambda: Rational, mu: Rational, nu: Rational) -> Result<So7Matrix> {
    if !(1..=7).contains(&i) {
        return Err(LieError::InvalidIndex(format!("V_{i} needs 1 ≤ i ≤ 7")));
    }
    let mut out = So7Matrix::zero();
    for (&(s, a, b), c) in V_TABLE[i - 1].iter().zip([lambda, mu, nu]) {
        if !c.is_zero() {
            out = out + g_ij(a, b)?.scale(c * rat(s));
        }
    }
    Ok(out)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct VFamily {
    pub i: usize,
    pub lambda: Rational,
    pub mu: Rational,
    pub nu: Rational,
}

impl VFamily {
    pub fn new(i: usize, lambda: Rational, mu: Rational, nu: Rational) -> Self {
        VFamily { i, lambda, mu, nu }
    }

    pub fn int(i: usize, l: i64, m: i64, n: i64) -> Self {
        Self::new(i, rat(l), rat(m), rat(n))
    }

    pub fn in_g2(&self) -> bool {
        (self.lambda + self.mu + self.nu).is_zero()
    }

    pub fn matrix(&self) -> So7Matrix {
        v(self.i, self.lambda, self.mu, self.nu).expect("family index checked at construction")
    }
}

impl fmt::Display for VFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "V{}({},{},{})",
            self.i,
            fmt_rational(&self.lambda),
            fmt_rational(&self.mu),
            fmt_rational(&self.nu)
        )
    }
}

impl Serialize for VFamily {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `−4·trace(xy)`.
pub fn model_form(x: &So7Matrix, y: &So7Matrix) -> Rational {
    rat(-4) * x.trace_product(y)
}

/// [`model_form`] on the 21 upper-triangle coordinates.
#[derive(Clone, Copy, Debug, Default)]
pub struct ModelForm;

impl BilinearForm for ModelForm {
    fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
        rat(8) * x.iter().zip(y).map(|(a, b)| a * b).sum::<Rational>()
    }
}

fn span_of(ms: &[So7Matrix]) -> Subspace {
    Subspace::span(21, ms.iter().map(So7Matrix::coords)).expect("21 coordinates")
}

/// Bases and subspaces of the model.
#[derive(Clone, Debug)]
pub struct G2Decomposition {
    pub g2_basis: Vec<So7Matrix>,
    pub k_basis: Vec<So7Matrix>,
    pub m_basis: Vec<So7Matrix>,
    pub h_basis: [So7Matrix; 3],
    pub a_point: So7Matrix,
    pub g2: Subspace,
    pub m: Subspace,
    pub h: Subspace,
    pub t_al: Subspace,
    pub n_al: Subspace,
    n_projector: Projector,
}

impl G2Decomposition {
    pub fn new() -> Self {
        let pair = |i| [VFamily::int(i, 1, -1, 0).matrix(), VFamily::int(i, 0, 1, -1).matrix()];
        let k_basis: Vec<So7Matrix> = (1..=3).flat_map(pair).collect();
        let m_basis: Vec<So7Matrix> = (4..=7).flat_map(pair).collect();
        let g2_basis: Vec<So7Matrix> = k_basis.iter().chain(&m_basis).copied().collect();
        let h_basis = [1, 2, 3].map(|i| VFamily::int(i, 2, -1, -1).matrix());
        let a_point = VFamily::int(6, 0, 1, -1).matrix();
        let t_al = span_of(&[
            VFamily::int(4, 2, -1, -1).matrix(),
            VFamily::int(5, 2, -1, -1).matrix(),
            VFamily::int(7, 0, 1, -1).matrix(),
        ]);
        let n_al = span_of(&[
            VFamily::int(4, 0, 1, -1).matrix(),
            VFamily::int(5, 0, 1, -1).matrix(),
            VFamily::int(6, 2, -1, -1).matrix(),
            VFamily::int(7, 2, -1, -1).matrix(),
        ]);
        let n_projector = n_al.projector(&ModelForm).expect("form is definite on so(7)");
        G2Decomposition {
            g2: span_of(&g2_basis),
            m: span_of(&m_basis),
            h: span_of(&h_basis),
            g2_basis,
            k_basis,
            m_basis,
            h_basis,
            a_point,
            t_al,
            n_al,
            n_projector,
        }
    }

    /// Orthogonal projection onto `N_aL`.
    pub fn project_normal(&self, x: &So7Matrix) -> So7Matrix {
        let p = self.n_projector.project(&x.coords(), &ModelForm).expect("21 coordinates");
        So7Matrix::from_coords(&p).expect("21 coordinates")
    }

    /// `𝔪 = ℝa ⊕ T_aL ⊕ N_aL` with vanishing cross pairings, and
    /// `T_aL = [𝔥, Z_δ]`.
    pub fn verify_orthogonal_split(&self) -> Result<Check> {
        let line = span_of(&[self.a_point]);
        let parts = [("a", &line), ("T_aL", &self.t_al), ("N_aL", &self.n_al)];
        for (i, (ni, si)) in parts.iter().enumerate() {
            for (nj, sj) in &parts[i + 1..] {
                for x in si.basis() {
                    for y in sj.basis() {
                        if !ModelForm.eval(&x, &y).is_zero() {
                            return Ok(Check::fail(*ni, *nj, "cross pairing is nonzero"));
                        }
                    }
                }
            }
        }
        let total = line.sum(&self.t_al)?.sum(&self.n_al)?;
        if (line.dim(), self.t_al.dim(), self.n_al.dim()) != (1, 3, 4) || total != self.m {
            return Ok(Check::fail("m", "", "m ≠ Ra ⊕ T_aL ⊕ N_aL with dims 1 + 3 + 4"));
        }
        let tangent = span_of(&self.h_basis.map(|x| x.bracket(&self.a_point)));
        if tangent != self.t_al {
            return Ok(Check::fail("T_aL", "", "T_aL ≠ [h, Z_δ]"));
        }
        Ok(Check::pass())
    }
}

impl Default for G2Decomposition {
    fn default() -> Self {
        Self::new()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct ClosureReport {
    pub holds: bool,
    pub dim: usize,
    pub pairs_checked: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

/// Every bracket of two spanning matrices stays in their span.
pub fn verify_closure_of(basis: &[So7Matrix]) -> ClosureReport {
    let span = span_of(basis);
    let mut pairs = 0;
    for (i, x) in basis.iter().enumerate() {
        for y in &basis[i + 1..] {
            pairs += 1;
            let br = x.bracket(y);
            if !span.contains(&br.coords()).expect("21 coordinates") {
                return ClosureReport {
                    holds: false,
                    dim: span.dim(),
                    pairs_checked: pairs,
                    witness: Some(format!("[{}, {}] = {}", x.describe(), y.describe(), br.describe())),
                };
            }
        }
    }
    ClosureReport {
        holds: true,
        dim: span.dim(),
        pairs_checked: pairs,
        witness: None,
    }
}

/// The 14-element basis is closed and spans a 14-dimensional algebra.
pub fn verify_g2_closure() -> ClosureReport {
    let mut r = verify_closure_of(&G2Decomposition::new().g2_basis);
    if r.dim != 14 {
        r.holds = false;
        r.witness.get_or_insert_with(|| format!("span has dimension {}", r.dim));
    }
    r
}

/// One line of a printed bracket table against the computed value.
#[derive(Clone, Debug, Serialize)]
pub struct GoldenBracket {
    pub x: VFamily,
    pub y: VFamily,
    pub printed: VFamily,
    pub computed: String,
    pub matches: bool,
}

fn golden(lines: &[(VFamily, VFamily, VFamily)]) -> Vec<GoldenBracket> {
    lines
        .iter()
        .map(|&(x, y, printed)| {
            let br = x.matrix().bracket(&y.matrix());
            GoldenBracket {
                x,
                y,
                printed,
                computed: br.describe(),
                matches: br == printed.matrix(),
            }
        })
        .collect()
}

/// `[V_i(2,−1,−1), Z_δ]` for `i = 1, 2, 3`, as printed.
pub fn tangent_bracket_table() -> Vec<GoldenBracket> {
    let zd = VFamily::int(6, 0, 1, -1);
    golden(&[
        (VFamily::int(1, 2, -1, -1), zd, VFamily::int(7, 0, -3, 3)),
        (VFamily::int(2, 2, -1, -1), zd, VFamily::int(4, -2, -1, -1)),
        (VFamily::int(3, 2, -1, -1), zd, VFamily::int(5, 2, -1, -1)),
    ])
}

/// The nine brackets feeding the second fundamental form, as printed.
pub fn nine_bracket_table() -> Vec<GoldenBracket> {
    let h = |i| VFamily::int(i, 2, -1, -1);
    let v = VFamily::int;
    golden(&[
        (h(1), v(7, 0, 1, -1), v(6, 0, -3, 3)),
        (h(2), v(7, 0, 1, -1), v(5, -2, 1, 1)),
        (h(3), v(7, 0, 1, -1), v(4, 2, -1, -1)),
        (h(1), h(4), v(5, 2, -1, -1)),
        (h(2), h(4), v(6, -4, 1, 3)),
        (h(3), h(4), v(7, 4, -5, 1)),
        (h(1), h(5), v(4, 2, -1, -1)),
        (h(2), h(5), v(7, 4, 1, -5)),
        (h(3), h(5), v(6, 4, -5, 1)),
    ])
}

/// `[V₁(λ,μ,ν), A ± iB] = s·(±i)·f(λ,μ,ν)·(C ± iD)` for all `λ + μ + ν = 0`.
#[derive(Clone, Debug, Serialize)]
pub struct EigenIdentity {
    pub a: VFamily,
    pub b: VFamily,
    pub rhs_a: VFamily,
    pub rhs_b: VFamily,
    /// `true` when the right-hand side carries the same `±` as the left.
    pub rhs_follows_sign: bool,
    /// `f` as coefficients on `(λ, μ, ν)`.
    pub functional: [i64; 3],
    /// `+1` when the upper sign gives eigenvalue `+i·f`.
    pub sign: i64,
}

impl EigenIdentity {
    fn new(a: VFamily, b: VFamily, rhs: (VFamily, VFamily), follows: bool, f: [i64; 3], sign: i64) -> Self {
        EigenIdentity {
            a,
            b,
            rhs_a: rhs.0,
            rhs_b: rhs.1,
            rhs_follows_sign: follows,
            functional: f,
            sign,
        }
    }

    pub fn describe(&self) -> String {
        let f = self.functional;
        let names = ["λ", "μ", "ν"];
        let terms: Vec<String> = (0..3)
            .filter(|&k| f[k] != 0)
            .map(|k| match f[k] {
                1 => format!("+{}", names[k]),
                -1 => format!("-{}", names[k]),
                c => format!("{c:+}{}", names[k]),
            })
            .collect();
        let s = if self.sign > 0 { "±" } else { "∓" };
        let r = if self.rhs_follows_sign { "±" } else { "+" };
        format!(
            "[V1, {} ± i{}] = ({s}i)({}) ({} {r} i{})",
            self.a,
            self.b,
            terms.join("").trim_start_matches('+'),
            self.rhs_a,
            self.rhs_b
        )
    }

    /// Checks the identity on the basis `(1,−1,0), (0,1,−1)` of `𝔞`, for
    /// both signs.
    pub fn holds(&self) -> bool {
        [[1, -1, 0], [0, 1, -1]].iter().all(|p| {
            let x = VFamily::int(1, p[0], p[1], p[2]).matrix();
            let f = rat((0..3).map(|k| self.functional[k] * p[k]).sum());
            [1i64, -1].iter().all(|&s| {
                // LHS = [x, A] + s·i·[x, B]
                let (lre, lim) = (x.bracket(&self.a.matrix()), x.bracket(&self.b.matrix()).scale(rat(s)));
                // RHS = (sign·s·i·f)(C + t·i·D) = −sign·s·t·f·D + i·sign·s·f·C
                let t = if self.rhs_follows_sign { s } else { 1 };
                let e = rat(self.sign * s) * f;
                let rre = self.rhs_b.matrix().scale(-e * rat(t));
                let rim = self.rhs_a.matrix().scale(e);
                lre == rre && lim == rim
            })
        })
    }
}

/// The six identities as printed.
pub fn printed_eigen_identities() -> Vec<EigenIdentity> {
    let v = VFamily::int;
    vec![
        EigenIdentity::new(v(2, 0, -1, 1), v(3, 0, 1, -1), (v(2, 0, -1, 1), v(3, 0, 1, -1)), false, [0, 1, -1], -1),
        EigenIdentity::new(v(4, 0, -1, 1), v(5, 0, 1, -1), (v(4, 0, -1, 1), v(5, 0, 1, -1)), true, [1, 0, -1], -1),
        EigenIdentity::new(v(6, 0, -1, 1), v(7, 0, 1, -1), (v(4, 0, -1, 1), v(5, 0, 1, -1)), true, [1, 0, -1], -1),
        EigenIdentity::new(v(3, 2, -1, -1), v(2, 2, -1, -1), (v(3, 2, -1, -1), v(2, 2, -1, -1)), true, [2, 0, 0], -1),
        EigenIdentity::new(v(5, 2, -1, -1), v(4, 2, -1, -1), (v(5, 2, -1, -1), v(4, 2, -1, -1)), true, [0, 2, 0], -1),
        EigenIdentity::new(v(7, 2, -1, -1), v(6, 2, -1, -1), (v(7, 2, -1, -1), v(6, 2, -1, -1)), true, [0, 0, 2], -1),
    ]
}

/// The same six eigenvectors with the eigenvalues the model actually has.
pub fn corrected_eigen_identities() -> Vec<EigenIdentity> {
    let v = VFamily::int;
    let same = |a: VFamily, b: VFamily, f: [i64; 3]| EigenIdentity::new(a, b, (a, b), true, f, 1);
    vec![
        same(v(2, 0, -1, 1), v(3, 0, 1, -1), [0, 1, -1]),
        same(v(4, 0, -1, 1), v(5, 0, 1, -1), [1, 0, -1]),
        same(v(6, 0, -1, 1), v(7, 0, 1, -1), [1, -1, 0]),
        same(v(3, 2, -1, -1), v(2, 2, -1, -1), [1, 0, 0]),
        same(v(5, 2, -1, -1), v(4, 2, -1, -1), [0, 1, 0]),
        same(v(7, 2, -1, -1), v(6, 2, -1, -1), [0, 0, 1]),
    ]
}

#[derive(Clone, Debug, Serialize)]
pub struct EigenCheck {
    pub identity: String,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RootDataReport {
    /// All printed identities hold.
    pub holds: bool,
    pub printed: Vec<EigenCheck>,
    pub corrected: Vec<EigenCheck>,
    pub corrected_hold: bool,
    /// Distinct roots `±i·f` produced by the corrected identities.
    pub root_count: usize,
    /// The corrected roots form a G₂ system (length ratio 3, 6 long, 6 short).
    pub g2_shape: bool,
    /// `V₆(0,1,−1)` spans the real root plane of `δ = i(μ − λ)`.
    pub z_delta_line: bool,
    /// `2(β, δ)/(β, β)` with `β = i(μ − ν)`.
    pub beta_delta_level: String,
}

/// Squared length of a functional on the plane `λ + μ + ν = 0`.
fn plane_ip(f: [i64; 3], g: [i64; 3]) -> Rational {
    let proj = |f: [i64; 3]| {
        let m = Rational::new(f.iter().sum(), 3);
        f.map(|x| rat(x) - m)
    };
    let (a, b) = (proj(f), proj(g));
    (0..3).map(|k| a[k] * b[k]).sum()
}

pub fn verify_root_data() -> RootDataReport {
    let report = |ids: &[EigenIdentity]| -> Vec<EigenCheck> {
        ids.iter()
            .map(|e| EigenCheck {
                identity: e.describe(),
                holds: e.holds(),
            })
            .collect()
    };
    let printed = report(&printed_eigen_identities());
    let corrected_ids = corrected_eigen_identities();
    let corrected = report(&corrected_ids);

    let mut roots: Vec<[i64; 3]> = corrected_ids
        .iter()
        .flat_map(|e| [e.functional, e.functional.map(|x| -x)])
        .collect();
    roots.sort();
    roots.dedup();
    let lengths: Vec<Rational> = roots.iter().map(|&r| plane_ip(r, r)).collect();
    let long = lengths.iter().copied().max().unwrap_or_default();
    let short = lengths.iter().copied().min().unwrap_or_default();
    let g2_shape = roots.len() == 12
        && long == short * rat(3)
        && lengths.iter().filter(|&&l| l == long).count() == 6;

    let beta = [0, 1, -1];
    let delta = [-1, 1, 0];
    let beta_delta_level = rat(2) * plane_ip(beta, delta) / plane_ip(beta, beta);

    // ad(H)² acts on the ±δ plane by −δ(H)², and δ is the only root with
    // values (−2, 1) on the two basis points.
    let zd = VFamily::int(6, 0, 1, -1).matrix();
    let z_delta_line = [([1, -1, 0], -2), ([0, 1, -1], 1)].iter().all(|&(p, val)| {
        let h = VFamily::int(1, p[0], p[1], p[2]).matrix();
        h.bracket(&h.bracket(&zd)) == zd.scale(rat(-val * val))
    }) && G2Decomposition::new().m.contains(&zd.coords()).unwrap_or(false);

    RootDataReport {
        holds: printed.iter().all(|c| c.holds),
        corrected_hold: corrected.iter().all(|c| c.holds),
        printed,
        corrected,
        root_count: roots.len(),
        g2_shape,
        z_delta_line,
        beta_delta_level: fmt_rational(&beta_delta_level),
    }
}

/// `h(X, Y) = π_N([X, [Y, Z_δ]])` for `X, Y ∈ 𝔥`.
pub fn second_fundamental_form(dec: &G2Decomposition, x: &So7Matrix, y: &So7Matrix) -> Result<So7Matrix> {
    for (name, m) in [("X", x), ("Y", y)] {
        if !dec.h.contains(&m.coords())? {
            return Err(LieError::OutsideSubspace(format!("{name} = {} is not in h", m.describe())));
        }
    }
    Ok(dec.project_normal(&x.bracket(&y.bracket(&dec.a_point))))
}

#[derive(Clone, Debug, Serialize)]
pub struct SffValue {
    pub x: VFamily,
    pub y: VFamily,
    pub value: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct SffReport {
    /// Some `h(X, Y)` is nonzero, `h` is symmetric, and all values are normal.
    pub not_totally_geodesic: bool,
    pub symmetric: bool,
    pub values_in_normal_space: bool,
    pub nonzero_count: usize,
    pub values: Vec<SffValue>,
    pub tangent_dim: usize,
    pub normal_dim: usize,
    pub orthogonal_split: Check,
    /// Both printed bracket tables agree with the model.
    pub bracket_table_match: bool,
    pub tangent_brackets: Vec<GoldenBracket>,
    pub nine_brackets: Vec<GoldenBracket>,
}

pub fn verify_not_totally_geodesic() -> Result<SffReport> {
    let dec = G2Decomposition::new();
    let h_fam = [1, 2, 3].map(|i| VFamily::int(i, 2, -1, -1));
    let mut values = Vec::new();
    let mut symmetric = true;
    let mut in_normal = true;
    let mut nonzero = 0;
    for x in &h_fam {
        for y in &h_fam {
            let hxy = second_fundamental_form(&dec, &x.matrix(), &y.matrix())?;
            let hyx = second_fundamental_form(&dec, &y.matrix(), &x.matrix())?;
            symmetric &= hxy == hyx;
            in_normal &= dec.n_al.contains(&hxy.coords())?;
            if !hxy.is_zero() {
                nonzero += 1;
            }
            values.push(SffValue {
                x: *x,
                y: *y,
                value: hxy.describe(),
            });
        }
    }
    let tangent_brackets = tangent_bracket_table();
    let nine_brackets = nine_bracket_table();
    Ok(SffReport {
        not_totally_geodesic: symmetric && in_normal && nonzero > 0,
        symmetric,
        values_in_normal_space: in_normal,
        nonzero_count: nonzero,
        values,
        tangent_dim: dec.t_al.dim(),
        normal_dim: dec.n_al.dim(),
        orthogonal_split: dec.verify_orthogonal_split()?,
        bracket_table_match: tangent_brackets.iter().chain(&nine_brackets).all(|g| g.matches),
        tangent_brackets,
        nine_brackets,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ModelDims {
    pub k: usize,
    pub m: usize,
    pub h: usize,
    pub h_p: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CrossValidation {
    pub holds: bool,
    pub matrix_dims: ModelDims,
    pub abstract_dims: ModelDims,
    pub matrix_quaternionic: bool,
    pub abstract_quaternionic: bool,
    pub matrix_totally_complex: bool,
    pub abstract_totally_complex: bool,
    /// `c·⟨iA_β, iA_β⟩/⟨Z_δ, Z_δ⟩`, independent of how each model scales
    /// its form and its `Z_δ`.
    pub matrix_c_ratio: Option<String>,
    pub abstract_c_ratio: Option<String>,
}

/// `I = V₁(0,1,−1)`, `J = V₂(0,−1,1)`, `K = V₃(0,1,−1)` act on 𝔪 as a
/// quaternionic structure.
fn matrix_quaternionic(dec: &G2Decomposition) -> bool {
    let ops = [VFamily::int(1, 0, 1, -1), VFamily::int(2, 0, -1, 1), VFamily::int(3, 0, 1, -1)].map(|f| f.matrix());
    dec.m_basis.iter().all(|x| {
        let sq = ops.iter().all(|o| o.bracket(&o.bracket(x)) == -*x);
        let anti = (0..3).all(|i| {
            (i + 1..3).all(|j| (ops[i].bracket(&ops[j].bracket(x)) + ops[j].bracket(&ops[i].bracket(x))).is_zero())
        });
        sq && anti
    })
}

/// Compares the 𝔰𝔬(7) model with the abstract G₂ pipeline.
pub fn cross_validate_with_abstract(wd: &WolfDecomposition) -> Result<CrossValidation> {
    let dec = G2Decomposition::new();

    // θ_p fixes the eigenvalues 0 and ±2i of ad(H) for the coroot H of β − δ.
    let coroot = VFamily::int(1, 1, 0, -1).matrix();
    let p_of = |x: &So7Matrix| {
        let a1 = coroot.bracket(x);
        let a3 = coroot.bracket(&coroot.bracket(&a1));
        (a3 + a1.scale(rat(4))).coords()
    };
    let images: Vec<Vec<Rational>> = dec.h_basis.iter().map(p_of).collect();
    let image_dim = Subspace::span(21, &images)?.dim();
    let matrix_dims = ModelDims {
        k: span_of(&dec.k_basis).dim(),
        m: dec.m.dim(),
        h: dec.h.dim(),
        h_p: dec.h.dim() - image_dim,
    };

    let delta = wd.choose_delta()?;
    let model = SubmanifoldModel::build(wd, &delta)?;
    let abstract_dims = ModelDims {
        k: wd.k().dim(),
        m: wd.m().dim(),
        h: wd.h().dim(),
        h_p: model.h_p.dim(),
    };

    let (aq, _) = wd.verify_quaternionic()?;
    let abstract_tc = model.verify_lemma_totally_complex(wd)?.holds;

    let ia = VFamily::int(1, 0, 1, -1).matrix();
    let zb = VFamily::int(2, 0, -1, 1).matrix();
    let wb = VFamily::int(3, 0, 1, -1).matrix();
    let zd = dec.a_point;
    let m_n = span_of(&[zd]).sum(&dec.t_al)?;
    let m_n_basis: Vec<So7Matrix> = m_n.basis().iter().map(|c| So7Matrix::from_coords(c)).collect::<Result<_>>()?;
    let matrix_tc = m_n_basis.iter().all(|x| {
        m_n.contains(&ia.bracket(x).coords()).unwrap_or(false)
            && m_n_basis.iter().all(|y| {
                model_form(&zb.bracket(x), y).is_zero() && model_form(&wb.bracket(x), y).is_zero()
            })
    });

    let matrix_c = {
        let c: Vec<Option<Rational>> = dec
            .h_basis[1..]
            .iter()
            .map(|x| {
                let sq = zd.bracket(&zd.bracket(x));
                let r = -sq.coords().iter().zip(x.coords()).find(|(_, b)| !b.is_zero()).map(|(a, b)| a / b)?;
                (sq == x.scale(-r)).then_some(r)
            })
            .collect();
        match c.as_slice() {
            [Some(a), Some(b)] if a == b => Some(*a * model_form(&ia, &ia) / model_form(&zd, &zd)),
            _ => None,
        }
    };
    let abstract_c = {
        let (_, c) = wd.verify_quaternionic()?;
        let zdv = wd.z(&delta)?;
        c.map(|c| {
            use crate::linalg::BilinearForm as _;
            c * wd.form().eval(wd.i_a_beta(), wd.i_a_beta()) / wd.form().eval(&zdv, &zdv)
        })
    };

    let mq = matrix_quaternionic(&dec);
    Ok(CrossValidation {
        holds: matrix_dims == abstract_dims
            && (matrix_dims.k, matrix_dims.m, matrix_dims.h, matrix_dims.h_p) == (6, 8, 3, 1)
            && mq == aq.holds
            && mq
            && matrix_tc == abstract_tc
            && matrix_tc
            && matrix_c.is_some()
            && matrix_c == abstract_c,
        matrix_dims,
        abstract_dims,
        matrix_quaternionic: mq,
        abstract_quaternionic: aq.holds,
        matrix_totally_complex: matrix_tc,
        abstract_totally_complex: abstract_tc,
        matrix_c_ratio: matrix_c.map(|c| fmt_rational(&c)),
        abstract_c_ratio: abstract_c.map(|c| fmt_rational(&c)),
    })
}

/// `model_form(V_i(λ,μ,ν), V_i(λ′,μ′,ν′)) = 8(λλ′ + μμ′ + νν′)` for every
/// family and all coefficients in `−r..=r`, with distinct families
/// orthogonal.
pub fn verify_form_formula(r: i64) -> Check {
    let grid: Vec<[i64; 3]> = (-r..=r)
        .flat_map(|a| (-r..=r).flat_map(move |b| (-r..=r).map(move |c| [a, b, c])))
        .collect();
    for i in 1..=7 {
        let ms: Vec<So7Matrix> = grid.iter().map(|p| VFamily::int(i, p[0], p[1], p[2]).matrix()).collect();
        for (p, x) in grid.iter().zip(&ms) {
            for (q, y) in grid.iter().zip(&ms) {
                let expected = rat(8 * (p[0] * q[0] + p[1] * q[1] + p[2] * q[2]));
                if model_form(x, y) != expected {
                    return Check::fail(format!("V{i}{p:?}"), format!("V{i}{q:?}"), "form differs from 8(λλ′+μμ′+νν′)");
                }
            }
        }
    }
    let units: Vec<So7Matrix> = (1..=7).map(|i| VFamily::int(i, 1, 1, 1).matrix()).collect();
    for i in 0..7 {
        for j in i + 1..7 {
            if !model_form(&units[i], &units[j]).is_zero() {
                return Check::fail(format!("V{}", i + 1), format!("V{}", j + 1), "families are not orthogonal");
            }
        }
    }
    Check::pass()
}

/// `⟨[z, x], y⟩ + ⟨x, [z, y]⟩ = 0` over all triples of the 14-element basis.
pub fn verify_model_ad_invariance() -> Check {
    let b = G2Decomposition::new().g2_basis;
    for z in &b {
        for x in &b {
            for y in &b {
                if !(model_form(&z.bracket(x), y) + model_form(x, &z.bracket(y))).is_zero() {
                    return Check::fail(x.describe(), z.describe(), "form is not ad-invariant");
                }
            }
        }
    }
    Check::pass()
}

/// Everything `g2-check` reports.
#[derive(Clone, Debug, Serialize)]
pub struct G2Report {
    pub closure: ClosureReport,
    pub root_data: RootDataReport,
    pub bracket_table_match: bool,
    pub sff_values: Vec<SffValue>,
    pub not_totally_geodesic: bool,
    pub form_formula: Check,
    pub ad_invariance: Check,
    pub sff: SffReport,
    pub cross_validation: CrossValidation,
}

impl G2Report {
    /// All verifiers pass, including the printed tables.
    pub fn all_hold(&self) -> bool {
        self.closure.holds
            && self.root_data.holds
            && self.root_data.corrected_hold
            && self.root_data.z_delta_line
            && self.bracket_table_match
            && self.not_totally_geodesic
            && self.form_formula.holds
            && self.ad_invariance.holds
            && self.sff.orthogonal_split.holds
            && self.cross_validation.holds
    }

    /// First printed bracket that disagrees with the model.
    pub fn first_mismatch(&self) -> Option<&GoldenBracket> {
        self.sff.tangent_brackets.iter().chain(&self.sff.nine_brackets).find(|g| !g.matches)
    }
}

/// Runs every verifier of the matrix model against the abstract G₂ pipeline.
pub fn g2_report(wd: &WolfDecomposition) -> Result<G2Report> {
    let sff = verify_not_totally_geodesic()?;
    Ok(G2Report {
        closure: verify_g2_closure(),
        root_data: verify_root_data(),
        bracket_table_match: sff.bracket_table_match,
        sff_values: sff.values.clone(),
        not_totally_geodesic: sff.not_totally_geodesic,
        form_formula: verify_form_formula(2),
        ad_invariance: verify_model_ad_invariance(),
        cross_validation: cross_validate_with_abstract(wd)?,
        sff,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn g_ij_rules() {
        let g = g_ij(2, 3).unwrap();
        let e = |k: usize| std::array::from_fn::<Rational, 7, _>(|i| if i + 1 == k { rat(1) } else { rat(0) });
        assert_eq!(g.apply_basis(2), e(3));
        assert_eq!(g.apply_basis(3), e(2).map(|x| -x));
        assert!(g.apply_basis(5).iter().all(Zero::is_zero));
        assert!((g + g_ij(3, 2).unwrap()).is_zero());
        assert!(g_ij(4, 4).is_err());
        assert!(g_ij(0, 3).is_err());
    }

    #[test]
    fn v_examples() {
        assert_eq!(VFamily::int(1, 1, 0, 0).matrix(), g_ij(2, 3).unwrap());
        assert_eq!(VFamily::int(6, 0, 1, -1).matrix(), -g_ij(2, 4).unwrap() - g_ij(3, 5).unwrap());
        for i in 1..=7 {
            assert!(VFamily::int(i, 0, 0, 0).matrix().is_zero());
        }
        assert!(v(8, rat(1), rat(0), rat(0)).is_err());
    }

    #[test]
    fn components_round_trip() {
        let x = VFamily::int(5, 3, -1, 4).matrix() + VFamily::int(2, 1, 1, 0).matrix();
        let c = x.v_components();
        assert_eq!(c[4], [rat(3), rat(-1), rat(4)]);
        assert_eq!(c[1], [rat(1), rat(1), rat(0)]);
        assert_eq!(VFamily::int(7, 4, 1, -5).matrix().as_single_v(), Some(VFamily::int(7, 4, 1, -5)));
        assert_eq!(x.as_single_v(), None);
    }

    #[test]
    fn form_matches_display() {
        let x = VFamily::int(1, 2, -1, -1).matrix();
        assert_eq!(model_form(&x, &x), rat(48));
        assert!(model_form(&x, &VFamily::int(2, 2, -1, -1).matrix()).is_zero());
        assert_eq!(ModelForm.eval(&x.coords(), &x.coords()), rat(48));
    }

    #[test]
    fn closure_and_negative_control() {
        let r = verify_g2_closure();
        assert!(r.holds, "{:?}", r.witness);
        assert_eq!((r.dim, r.pairs_checked), (14, 91));
        let dec = G2Decomposition::new();
        let without_v7: Vec<So7Matrix> = dec.g2_basis[..12].to_vec();
        let bad = verify_closure_of(&without_v7);
        assert!(!bad.holds);
        assert!(bad.witness.is_some());
    }

    #[test]
    fn form_and_invariance() {
        assert!(verify_form_formula(1).holds);
        assert!(verify_model_ad_invariance().holds);
    }

    #[test]
    fn sff_witness() {
        let dec = G2Decomposition::new();
        let h = |i| VFamily::int(i, 2, -1, -1).matrix();
        let val = second_fundamental_form(&dec, &h(2), &h(3)).unwrap();
        assert_eq!(val, VFamily::int(7, 2, -1, -1).matrix().scale(rat(2)));
        assert_eq!(dec.project_normal(&VFamily::int(7, 4, 1, -5).matrix()), val);
        assert!(matches!(
            second_fundamental_form(&dec, &VFamily::int(4, 2, -1, -1).matrix(), &h(1)),
            Err(LieError::OutsideSubspace(_))
        ));
    }

    #[test]
    fn corrected_identities_hold() {
        assert!(corrected_eigen_identities().iter().all(EigenIdentity::holds));
        let r = verify_root_data();
        assert_eq!(r.root_count, 12);
        assert!(r.g2_shape && r.z_delta_line);
        assert_eq!(r.beta_delta_level, "1");
    }
}
