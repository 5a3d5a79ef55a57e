use num::{BigInt, BigRational, One, Zero};

/// Exact binomial coefficient; 0 when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Exact ratio of two counts. Returns `None` when the denominator is zero.
pub fn ratio(numerator: BigInt, denominator: BigInt) -> Option<BigRational> {
    if denominator.is_zero() {
        None
    } else {
        Some(BigRational::new(numerator, denominator))
    }
}

pub fn ratio_u64(numerator: u64, denominator: u64) -> Option<BigRational> {
    ratio(BigInt::from(numerator), BigInt::from(denominator))
}
