//! Exact scalars: rationals and Gaussian rationals.

use num_complex::Complex;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};

pub type Rational = Ratio<i64>;

/// `re + i·im` with rational parts.
pub type GaussianRational = Complex<Rational>;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub fn real(r: Rational) -> GaussianRational {
    Complex::new(r, Rational::zero())
}

pub fn imag(r: Rational) -> GaussianRational {
    Complex::new(Rational::zero(), r)
}

pub fn gi(n: i64) -> GaussianRational {
    real(rat(n))
}

/// The imaginary unit.
pub fn unit_i() -> GaussianRational {
    Complex::new(Rational::zero(), Rational::one())
}

/// `n` if the rational is an integer.
pub fn as_integer(r: &Rational) -> Option<i64> {
    r.is_integer().then(|| r.to_integer())
}

pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn fmt_gaussian(z: &GaussianRational) -> String {
    match (z.re.is_zero(), z.im.is_zero()) {
        (_, true) => fmt_rational(&z.re),
        (true, false) => format!("{}i", fmt_rational(&z.im)),
        (false, false) => {
            let sign = if z.im < Rational::zero() { "-" } else { "+" };
            format!("({}{}{}i)", fmt_rational(&z.re), sign, fmt_rational(&z.im.abs()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting() {
        assert_eq!(fmt_rational(&frac(4, 2)), "2");
        assert_eq!(fmt_rational(&frac(-2, 3)), "-2/3");
        assert_eq!(fmt_gaussian(&Complex::new(rat(1), rat(-2))), "(1-2i)");
        assert_eq!(fmt_gaussian(&imag(frac(1, 2))), "1/2i");
    }

    #[test]
    fn i_squared_is_minus_one() {
        assert_eq!(unit_i() * unit_i(), gi(-1));
    }
}
