//! Exact linear algebra over the rationals.
//!
//! [`Subspace`] keeps its spanning set as a row-echelon basis of primitive
//! integer vectors. Insertion and membership use fraction-free elimination:
//! a row is combined as `pivot·v − v[col]·row` and then divided by the gcd of
//! its entries, so no denominators ever appear. Rows are sparse because most
//! subspaces in this crate are spanned by a handful of basis vectors.
//!
//! Orthogonality and projection take an explicit [`BilinearForm`]; the
//! small Gram systems they need are solved by rational Gauss-Jordan.

use std::collections::BTreeMap;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{LieError, Result};
use crate::scalar::Rational;

/// A symmetric bilinear form on coordinate vectors.
pub trait BilinearForm {
    fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational;
}

type IntRow = BTreeMap<usize, i128>;

#[derive(Clone, Debug)]
pub struct Subspace {
    ambient: usize,
    rows: Vec<IntRow>,
    /// pivot column -> index into `rows`
    pivots: BTreeMap<usize, usize>,
}

fn primitive(mut row: IntRow) -> IntRow {
    row.retain(|_, v| *v != 0);
    let g = row.values().fold(0i128, |g, v| g.gcd(v));
    if g > 1 {
        for v in row.values_mut() {
            *v /= g;
        }
    }
    row
}

fn to_int_row(v: &[Rational]) -> IntRow {
    let lcm = v
        .iter()
        .filter(|x| !x.is_zero())
        .fold(1i128, |l, x| l.lcm(&(*x.denom() as i128)));
    let row = v
        .iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, x)| (i, *x.numer() as i128 * (lcm / *x.denom() as i128)))
        .collect();
    primitive(row)
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: Vec::new(),
            pivots: BTreeMap::new(),
        }
    }

    pub fn span<V: AsRef<[Rational]>>(
        ambient: usize,
        vectors: impl IntoIterator<Item = V>,
    ) -> Result<Self> {
        let mut s = Subspace::zero(ambient);
        for v in vectors {
            s.insert(v.as_ref())?;
        }
        Ok(s)
    }

    /// Span of standard basis vectors.
    pub fn coordinate(ambient: usize, coords: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Subspace::zero(ambient);
        for c in coords {
            assert!(c < ambient, "coordinate {c} out of range {ambient}");
            s.insert_row(IntRow::from([(c, 1)]));
        }
        s
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    fn check(&self, v: &[Rational]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        Ok(())
    }

    /// Eliminates every pivot column from `v`. Returns `None` when `v` is in
    /// the span, otherwise the reduced (primitive) remainder.
    fn reduce(&self, mut v: IntRow) -> Option<IntRow> {
        loop {
            let (&col, &lead) = v.iter().next()?;
            let Some(&ri) = self.pivots.get(&col) else {
                return Some(v);
            };
            let row = &self.rows[ri];
            let p = row[&col];
            for x in v.values_mut() {
                *x *= p;
            }
            for (&c, &r) in row {
                *v.entry(c).or_insert(0) -= lead * r;
            }
            v = primitive(v);
        }
    }

    fn insert_row(&mut self, v: IntRow) -> bool {
        match self.reduce(primitive(v)) {
            None => false,
            Some(mut r) => {
                let (&col, &lead) = r.iter().next().expect("nonzero remainder");
                if lead < 0 {
                    for x in r.values_mut() {
                        *x = -*x;
                    }
                }
                self.pivots.insert(col, self.rows.len());
                self.rows.push(r);
                true
            }
        }
    }

    /// Adds `v` to the spanning set. Returns whether the dimension grew.
    pub fn insert(&mut self, v: &[Rational]) -> Result<bool> {
        self.check(v)?;
        Ok(self.insert_row(to_int_row(v)))
    }

    pub fn contains(&self, v: &[Rational]) -> Result<bool> {
        self.check(v)?;
        Ok(self.reduce(to_int_row(v)).is_none())
    }

    /// The echelon basis, ordered by pivot column.
    pub fn basis(&self) -> Vec<Vec<Rational>> {
        self.pivots
            .values()
            .map(|&ri| {
                let mut d = vec![Rational::zero(); self.ambient];
                for (&c, &x) in &self.rows[ri] {
                    d[c] = Rational::from_integer(x as i64);
                }
                d
            })
            .collect()
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        if other.ambient != self.ambient {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient,
                found: other.ambient,
            });
        }
        let mut s = self.clone();
        for r in &other.rows {
            s.insert_row(r.clone());
        }
        Ok(s)
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.ambient == self.ambient && other.rows.iter().all(|r| self.reduce(r.clone()).is_none())
    }

    pub fn intersection_dim(&self, other: &Subspace) -> Result<usize> {
        Ok(self.dim() + other.dim() - self.sum(other)?.dim())
    }

    /// `{ w ∈ within : form(w, s) = 0 for all s ∈ self }`.
    pub fn orthogonal_complement_in(
        &self,
        within: &Subspace,
        form: &impl BilinearForm,
    ) -> Result<Subspace> {
        if within.ambient != self.ambient {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient,
                found: within.ambient,
            });
        }
        let wb = within.basis();
        let sb = self.basis();
        let system: Vec<Vec<Rational>> = sb
            .iter()
            .map(|s| wb.iter().map(|w| form.eval(s, w)).collect())
            .collect();
        let kernel = nullspace(&system, wb.len());
        let vectors = kernel.iter().map(|c| combine(&wb, c, self.ambient));
        Subspace::span(self.ambient, vectors)
    }

    /// Orthogonal projector onto this subspace for a form that is
    /// nondegenerate on it.
    pub fn projector(&self, form: &impl BilinearForm) -> Result<Projector> {
        let basis = self.basis();
        let gram: Vec<Vec<Rational>> = basis
            .iter()
            .map(|a| basis.iter().map(|b| form.eval(a, b)).collect())
            .collect();
        let gram_inv = inverse(&gram).ok_or_else(|| {
            LieError::Internal("form is degenerate on the subspace".into())
        })?;
        Ok(Projector {
            ambient: self.ambient,
            basis,
            gram_inv,
        })
    }
}

impl PartialEq for Subspace {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient
            && self.dim() == other.dim()
            && self.contains_subspace(other)
    }
}

impl Eq for Subspace {}

#[derive(Clone, Debug)]
pub struct Projector {
    ambient: usize,
    basis: Vec<Vec<Rational>>,
    gram_inv: Vec<Vec<Rational>>,
}

impl Projector {
    pub fn project(&self, x: &[Rational], form: &impl BilinearForm) -> Result<Vec<Rational>> {
        if x.len() != self.ambient {
            return Err(LieError::DimensionMismatch {
                expected: self.ambient,
                found: x.len(),
            });
        }
        let rhs: Vec<Rational> = self.basis.iter().map(|b| form.eval(b, x)).collect();
        let coeffs: Vec<Rational> = self
            .gram_inv
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(a, b)| a * b).sum())
            .collect();
        Ok(combine(&self.basis, &coeffs, self.ambient))
    }
}

/// `Σ c_k v_k`.
pub fn combine(vectors: &[Vec<Rational>], coeffs: &[Rational], dim: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); dim];
    for (v, c) in vectors.iter().zip(coeffs) {
        if c.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(v) {
            *o += c * x;
        }
    }
    out
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(m: &mut [Vec<Rational>]) -> Vec<usize> {
    let rows = m.len();
    let cols = m.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= inv;
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c];
                let (src, dst) = if i < r {
                    let (a, b) = m.split_at_mut(r);
                    (&b[0], &mut a[i])
                } else {
                    let (a, b) = m.split_at_mut(i);
                    (&a[r], &mut b[0])
                };
                for (d, s) in dst.iter_mut().zip(src.iter()) {
                    *d -= f * s;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &[Vec<Rational>]) -> usize {
    let mut work = m.to_vec();
    rref(&mut work).len()
}

/// Basis of `{ x : M x = 0 }` for an `r × cols` matrix.
pub fn nullspace(m: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut work = m.to_vec();
    let pivots = rref(&mut work);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); cols];
            x[f] = Rational::one();
            for (row, &pc) in pivots.iter().enumerate() {
                x[pc] = -work[row][f];
            }
            x
        })
        .collect()
}

pub fn inverse(m: &[Vec<Rational>]) -> Option<Vec<Vec<Rational>>> {
    let n = m.len();
    let mut aug: Vec<Vec<Rational>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Rational::one() } else { Rational::zero() }));
            r
        })
        .collect();
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots.iter().enumerate().any(|(i, &p)| p != i) {
        return None;
    }
    Some(aug.into_iter().map(|r| r[n..].to_vec()).collect())
}

pub fn is_zero_vec(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{frac, rat};

    struct Euclid;
    impl BilinearForm for Euclid {
        fn eval(&self, x: &[Rational], y: &[Rational]) -> Rational {
            x.iter().zip(y).map(|(a, b)| a * b).sum()
        }
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn membership_and_dimension() {
        let s = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 1, 1]), v(&[1, 2, 1])]).unwrap();
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&v(&[2, 3, 1])).unwrap());
        assert!(s.contains(&[frac(1, 2), frac(1, 2), rat(0)]).unwrap());
        assert!(!s.contains(&v(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s = Subspace::zero(3);
        assert!(matches!(
            s.contains(&v(&[1, 0])),
            Err(LieError::DimensionMismatch { expected: 3, found: 2 })
        ));
    }

    #[test]
    fn complement_and_projection() {
        let plane = Subspace::span(3, [v(&[1, 1, 0]), v(&[0, 0, 1])]).unwrap();
        let all = Subspace::coordinate(3, 0..3);
        let perp = plane.orthogonal_complement_in(&all, &Euclid).unwrap();
        assert_eq!(perp, Subspace::span(3, [v(&[1, -1, 0])]).unwrap());
        let p = plane.projector(&Euclid).unwrap();
        assert_eq!(
            p.project(&v(&[1, 0, 5]), &Euclid).unwrap(),
            vec![frac(1, 2), frac(1, 2), rat(5)]
        );
    }

    #[test]
    fn inverse_of_singular_is_none() {
        assert!(inverse(&[v(&[1, 2]), v(&[2, 4])]).is_none());
        let inv = inverse(&[v(&[2, 1]), v(&[1, 1])]).unwrap();
        assert_eq!(inv, vec![v(&[1, -1]), v(&[-1, 2])]);
    }

    #[test]
    fn nullspace_dimension() {
        let m = vec![v(&[1, 2, 3]), v(&[2, 4, 6])];
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 2);
        for x in &k {
            assert!(Euclid.eval(&m[0], x).is_zero());
        }
    }
}
