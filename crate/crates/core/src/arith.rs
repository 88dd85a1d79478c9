//! Small exact-arithmetic helpers shared by the counting formulas.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Euler's totient.
pub fn totient(m: u64) -> u64 {
    (1..=m).filter(|&k| gcd(k, m) == 1).count() as u64
}

pub fn factorial(n: u64) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * k)
}

pub fn pow(base: u64, exp: u64) -> BigUint {
    num_traits::pow(BigUint::from(base), exp as usize)
}

/// `base^exp` as an exact rational; negative exponents allowed (base must be nonzero).
pub fn pow_rational(base: u64, exp: i64) -> BigRational {
    let b = BigRational::from_integer(BigInt::from(base));
    if exp >= 0 {
        num_traits::pow(b, exp as usize)
    } else {
        num_traits::pow(b.recip(), (-exp) as usize)
    }
}

/// Multinomial coefficient `(Σ parts)! / ∏ parts!`.
pub fn multinomial(parts: &[u64]) -> BigUint {
    let total: u64 = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// Elementary symmetric polynomial `e_j` of the given values.
pub fn elementary_symmetric(values: &[u64], j: usize) -> BigUint {
    // e[i] holds e_i of the prefix processed so far.
    let mut e = vec![BigUint::zero(); j + 1];
    e[0] = BigUint::one();
    for &v in values {
        for i in (1..=j).rev() {
            let add = &e[i - 1] * v;
            e[i] += add;
        }
    }
    e.swap_remove(j)
}

/// Converts an integral rational into a natural number; `None` if it is not one.
pub fn to_natural(q: &BigRational) -> Option<BigUint> {
    if q.is_integer() {
        q.to_integer().to_biguint()
    } else {
        None
    }
}

pub fn ratio(n: BigUint) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Advances `c` (a strictly increasing k-subset of `0..n`) to the next one in
/// lexicographic order; returns false after the last.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    for i in (0..k).rev() {
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn elementary_symmetric_small() {
        assert_eq!(elementary_symmetric(&[2, 1], 2), BigUint::from(2u32));
        assert_eq!(elementary_symmetric(&[1, 2, 3], 1), BigUint::from(6u32));
        assert_eq!(elementary_symmetric(&[1, 2, 3], 2), BigUint::from(11u32));
        assert_eq!(elementary_symmetric(&[1, 2, 3], 3), BigUint::from(6u32));
        assert_eq!(elementary_symmetric(&[1, 2], 0), BigUint::one());
    }

    #[test]
    fn multinomial_and_totient() {
        assert_eq!(multinomial(&[1, 0]), BigUint::one());
        assert_eq!(multinomial(&[2, 1]), BigUint::from(3u32));
        assert_eq!(totient(1), 1);
        assert_eq!(totient(12), 4);
        assert_eq!(pow_rational(2, -1), BigRational::new(1.into(), 2.into()));
    }
}
