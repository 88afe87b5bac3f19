//! Exact rational linear algebra and integer lattice primitives.

mod hnf;
mod matrix;

pub use hnf::{hnf, Hnf};
pub use matrix::{QMatrix, Solution};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(v: i64) -> BigInt {
    BigInt::from(v)
}

pub fn rat(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_vec(v: &[i64]) -> Vec<Rational> {
    v.iter().copied().map(rat).collect()
}

pub fn int_vec(v: &[i64]) -> Vec<BigInt> {
    v.iter().copied().map(int).collect()
}

/// Divides a nonzero integer vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Result<Vec<BigInt>> {
    let g = v.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return Err(Error::ZeroVector);
    }
    Ok(v.iter().map(|x| x / &g).collect())
}

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray.
pub fn primitive_rational(v: &[Rational]) -> Result<Vec<BigInt>> {
    let den = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<BigInt> = v.iter().map(|x| (x * &den).to_integer()).collect();
    primitive(&scaled)
}

/// Least common multiple of the denominators of `v` (1 for an empty slice).
pub fn denominator_lcm<'a>(v: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    v.into_iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn is_integral(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_integer())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primitive_examples() {
        assert_eq!(
            primitive(&int_vec(&[0, 0, 2])).unwrap(),
            int_vec(&[0, 0, 1])
        );
        assert_eq!(
            primitive(&int_vec(&[-2, -2, -2])).unwrap(),
            int_vec(&[-1, -1, -1])
        );
        assert_eq!(
            primitive(&int_vec(&[1, 0, -3])).unwrap(),
            int_vec(&[1, 0, -3])
        );
        assert_eq!(primitive(&int_vec(&[0, 0])), Err(Error::ZeroVector));
    }

    #[test]
    fn primitive_of_rational_direction() {
        let v = vec![ratio(1, 2), rat(0), ratio(-3, 4)];
        assert_eq!(primitive_rational(&v).unwrap(), int_vec(&[2, 0, -3]));
    }
}
