//! Square classes of nonzero rationals — elements of ℚ^× / (ℚ^×)² — with a
//! canonical squarefree-integer representative, multiquadratic field
//! degrees, and the `−4·(fourth power)` membership test.
//!
//! Representatives are computed by trial-division factorization up to a
//! configurable bound.  When a cofactor survives that can be neither
//! certified prime nor recognized as a perfect square, the computation
//! fails loudly with [`SquareClassError::FactorizationLimit`] instead of
//! guessing.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;
use thiserror::Error;

/// Default trial-division bound; ample for desk-scale coefficients.
pub const DEFAULT_FACTOR_BOUND: u64 = 1_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SquareClassError {
    #[error("zero has no square class")]
    ZeroInput,
    #[error("factorization limit reached: cofactor {0} could not be resolved")]
    FactorizationLimit(BigInt),
    #[error("cannot parse rational `{0}`")]
    ParseError(String),
}

/// The square class of a nonzero rational, stored as its unique squarefree
/// integer representative (sign included).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SquareClass {
    representative: BigInt,
}

impl SquareClass {
    pub fn representative(&self) -> &BigInt {
        &self.representative
    }

    /// The class of 1 (all rational squares).
    pub fn is_one(&self) -> bool {
        self.representative.is_one()
    }

    pub fn is_minus_one(&self) -> bool {
        self.representative == BigInt::from(-1)
    }

    /// Product in ℚ^×/(ℚ^×)².  Both representatives are squarefree, so the
    /// squarefree part of their product is `a·b / gcd(a,b)²` — no
    /// factorization needed.
    pub fn mul(&self, other: &SquareClass) -> SquareClass {
        let g = self.representative.gcd(&other.representative);
        SquareClass {
            representative: (&self.representative * &other.representative) / (&g * &g),
        }
    }
}

/// Parses a rational from `"p"`, `"p/q"`, or a decimal integer string; a
/// Unicode minus sign is accepted.
pub fn parse_rational(s: &str) -> Result<BigRational, SquareClassError> {
    let normalized: String = s
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| if c == '\u{2212}' { '-' } else { c })
        .collect();
    let parse_int = |t: &str| {
        t.parse::<BigInt>()
            .map_err(|_| SquareClassError::ParseError(s.to_string()))
    };
    let rational = match normalized.split_once('/') {
        Some((num, den)) => {
            let den = parse_int(den)?;
            if den.is_zero() {
                return Err(SquareClassError::ParseError(s.to_string()));
            }
            BigRational::new(parse_int(num)?, den)
        }
        None => BigRational::from_integer(parse_int(&normalized)?),
    };
    Ok(rational)
}

/// Odd-exponent prime content of `n > 0` by trial division.  Returns the
/// squarefree part, or fails when an unresolvable cofactor remains.
fn squarefree_part(n: &BigInt, bound: u64) -> Result<BigInt, SquareClassError> {
    debug_assert!(n.is_positive());
    let mut remaining = n.clone();
    let mut result = BigInt::one();
    let mut p = BigInt::from(2);
    let limit = BigInt::from(bound);
    while &p <= &limit && &(&p * &p) <= &remaining {
        if (&remaining % &p).is_zero() {
            let mut exponent = 0u32;
            while (&remaining % &p).is_zero() {
                remaining /= &p;
                exponent += 1;
            }
            if exponent % 2 == 1 {
                result *= &p;
            }
        }
        p += if p == BigInt::from(2) { 1 } else { 2 };
    }
    if remaining.is_one() {
        return Ok(result);
    }
    // All prime factors of the cofactor exceed min(bound, sqrt(original)).
    if &(&p * &p) > &remaining {
        // The loop ended because p² outgrew the cofactor: it is prime.
        return Ok(result * remaining);
    }
    if &remaining <= &(&limit * &limit) {
        // Every factor ≤ bound was removed and the cofactor is ≤ bound², so
        // it cannot split into two factors > bound: prime.
        return Ok(result * remaining);
    }
    let root = remaining.sqrt();
    if &root * &root == remaining {
        // A perfect-square cofactor has even exponents throughout and
        // contributes nothing to the square class.
        return Ok(result);
    }
    Err(SquareClassError::FactorizationLimit(remaining))
}

/// Square class of a nonzero rational with an explicit trial-division
/// bound.  `n/d` and `n·d` have the same class, so only one integer is
/// factored.
pub fn square_class_with_bound(
    q: &BigRational,
    bound: u64,
) -> Result<SquareClass, SquareClassError> {
    if q.is_zero() {
        return Err(SquareClassError::ZeroInput);
    }
    let product = q.numer() * q.denom();
    let sign = if product.is_negative() {
        BigInt::from(-1)
    } else {
        BigInt::one()
    };
    let core = squarefree_part(&product.abs(), bound)?;
    Ok(SquareClass {
        representative: sign * core,
    })
}

/// Square class with the default factorization bound.
pub fn square_class(q: &BigRational) -> Result<SquareClass, SquareClassError> {
    square_class_with_bound(q, DEFAULT_FACTOR_BOUND)
}

/// True iff `q` is the square of a rational: in lowest terms, both the
/// numerator and the denominator must be perfect squares.  Unlike
/// [`square_class`], this never factors anything.
pub fn is_square(q: &BigRational) -> Result<bool, SquareClassError> {
    if q.is_zero() {
        return Err(SquareClassError::ZeroInput);
    }
    if !q.is_positive() {
        return Ok(false);
    }
    let is_perfect = |n: &BigInt| {
        let root = n.sqrt();
        &(&root * &root) == n
    };
    Ok(is_perfect(q.numer()) && is_perfect(q.denom()))
}

/// Degree `[ℚ(√q₁, …, √qₙ) : ℚ]`, always a power of two.
///
/// Computed greedily: maintain the subgroup of ℚ^×/(ℚ^×)² generated so far
/// (explicitly, as its ≤ 2^rank squarefree representatives) and double it
/// whenever a new class lies outside.  Class multiplication is gcd-based,
/// so no factorization beyond the class computation itself is needed.
pub fn multiquadratic_degree(qs: &[BigRational]) -> Result<u64, SquareClassError> {
    let mut subgroup: BTreeSet<BigInt> = BTreeSet::new();
    subgroup.insert(BigInt::one());
    let mut basis: Vec<SquareClass> = Vec::new();
    for q in qs {
        let class = square_class(q)?;
        if subgroup.contains(class.representative()) {
            continue;
        }
        let doubled: Vec<BigInt> = subgroup
            .iter()
            .map(|rep| {
                SquareClass {
                    representative: rep.clone(),
                }
                .mul(&class)
                .representative
            })
            .collect();
        subgroup.extend(doubled);
        basis.push(class);
        assert!(basis.len() < 64, "multiquadratic rank exceeds u64 range");
    }
    Ok(subgroup.len() as u64)
}

/// True iff `q ∈ −4·(ℚ^×)⁴`, i.e. `−q/4` is a positive rational whose
/// numerator and denominator (in lowest terms) are both perfect fourth
/// powers.
pub fn in_minus4_fourth_powers(q: &BigRational) -> Result<bool, SquareClassError> {
    if q.is_zero() {
        return Err(SquareClassError::ZeroInput);
    }
    let t4 = -q / BigRational::from_integer(BigInt::from(4));
    if !t4.is_positive() {
        return Ok(false);
    }
    let is_fourth_power = |n: &BigInt| {
        let root = n.nth_root(4);
        &(&root * &root * &root * &root) == n
    };
    Ok(is_fourth_power(t4.numer()) && is_fourth_power(t4.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(s: &str) -> BigRational {
        parse_rational(s).unwrap()
    }

    fn class_of(s: &str) -> BigInt {
        square_class(&rat(s)).unwrap().representative().clone()
    }

    #[test]
    fn squarefree_representatives() {
        assert_eq!(class_of("18"), BigInt::from(2));
        assert_eq!(class_of("-4"), BigInt::from(-1));
        assert_eq!(class_of("8/9"), BigInt::from(2));
        assert_eq!(class_of("1"), BigInt::from(1));
        assert_eq!(class_of("-75"), BigInt::from(-3));
        assert_eq!(class_of("210"), BigInt::from(210));
        assert_eq!(class_of("49/4"), BigInt::from(1));
    }

    #[test]
    fn zero_has_no_class() {
        assert_eq!(
            square_class(&BigRational::zero()).unwrap_err(),
            SquareClassError::ZeroInput
        );
    }

    #[test]
    fn class_multiplication_is_gcd_based() {
        let a = square_class(&rat("6")).unwrap();
        let b = square_class(&rat("10")).unwrap();
        // 6·10 = 60 = 4·15.
        assert_eq!(a.mul(&b).representative(), &BigInt::from(15));
        let c = square_class(&rat("-6")).unwrap();
        assert_eq!(a.mul(&c).representative(), &BigInt::from(-1));
    }

    #[test]
    fn factorization_limit_fails_loudly() {
        // 1000003 and 1000033 are primes beyond a bound of 100, and their
        // product is neither ≤ bound² nor a perfect square.
        let n = rat("1000003") * rat("1000033");
        let err = square_class_with_bound(&n, 100).unwrap_err();
        assert!(matches!(err, SquareClassError::FactorizationLimit(_)));
        // A perfect-square cofactor is harmless at the same bound.
        let sq = rat("1000003") * rat("1000003");
        assert!(square_class_with_bound(&sq, 100).unwrap().is_one());
    }

    #[test]
    fn large_prime_cofactor_within_bound_squared() {
        // 999983 is prime; with bound 1000 the cofactor is ≤ 1000².
        assert_eq!(class_of("999983"), BigInt::from(999983));
    }

    #[test]
    fn multiquadratic_degrees() {
        let deg = |ss: &[&str]| {
            multiquadratic_degree(&ss.iter().map(|s| rat(s)).collect::<Vec<_>>()).unwrap()
        };
        assert_eq!(deg(&["2", "3", "5"]), 8);
        assert_eq!(deg(&["2", "3", "6"]), 4);
        assert_eq!(deg(&["1", "4", "9"]), 1);
        assert_eq!(deg(&["2", "8"]), 2);
        assert_eq!(deg(&["-1", "2", "-2"]), 4);
        assert_eq!(deg(&[]), 1);
        assert_eq!(deg(&["2", "3", "5", "30"]), 8);
    }

    #[test]
    fn minus4_fourth_power_membership() {
        assert!(in_minus4_fourth_powers(&rat("-4")).unwrap());
        assert!(in_minus4_fourth_powers(&rat("-64")).unwrap());
        assert!(!in_minus4_fourth_powers(&rat("-8")).unwrap());
        assert!(!in_minus4_fourth_powers(&rat("4")).unwrap());
        assert!(in_minus4_fourth_powers(&rat("-1/4")).unwrap());
        // −q/4 = 8 is not a fourth power.
        assert!(!in_minus4_fourth_powers(&rat("-32")).unwrap());
        // −4·(3/2)⁴ = −81/4.
        assert!(in_minus4_fourth_powers(&rat("-81/4")).unwrap());
    }

    #[test]
    fn minus4_members_have_class_minus_one() {
        // q = −4t⁴ = −(2t²)², so membership forces square class −1.
        for s in ["-4", "-64", "-81/4", "-1/4", "-2500/4"] {
            let q = rat(s);
            if in_minus4_fourth_powers(&q).unwrap() {
                assert!(square_class(&q).unwrap().is_minus_one(), "q = {s}");
            }
        }
    }

    #[test]
    fn square_detection_avoids_factoring() {
        // 1000003·1000033 would exceed any small factor bound, but square
        // detection doesn't factor.
        let p = rat("1000003") * rat("1000033");
        assert!(!is_square(&p).unwrap());
        assert!(is_square(&(&p * &p)).unwrap());
        assert!(is_square(&rat("4/9")).unwrap());
        assert!(!is_square(&rat("-4")).unwrap());
        assert!(!is_square(&rat("8")).unwrap());
        assert_eq!(
            is_square(&BigRational::zero()).unwrap_err(),
            SquareClassError::ZeroInput
        );
    }

    #[test]
    fn rational_parsing_accepts_unicode_minus() {
        assert_eq!(rat("\u{2212}7"), rat("-7"));
        assert_eq!(rat("3/6"), rat("1/2"));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
    }
}
