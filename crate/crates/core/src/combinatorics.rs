//! Binomial and Catalan numbers, and the two diagonal-constrained tuple
//! families whose sizes feed the class-order formula.

use num_integer::Integer;

use crate::enumeration::MonotoneTuples;

/// `binom(m, k)` in exact arithmetic. Panics on `u128` overflow.
pub fn binomial(m: usize, k: usize) -> u128 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (m - i) / (i + 1) stays integral; divide out the gcd first
        let num = (m - i) as u128;
        let den = (i + 1) as u128;
        let g = acc.gcd(&den);
        let (acc_r, den_r) = (acc / g, den / g);
        let num_r = num / den_r;
        debug_assert_eq!(num % den_r, 0);
        acc = acc_r.checked_mul(num_r).expect("binomial overflows u128");
    }
    acc
}

/// Largest `p` for which [`catalan`] fits in `u128`.
pub const MAX_CATALAN_ARG: usize = 69;

/// Standard Catalan numbers: 1, 1, 2, 5, 14, 42, ...
pub fn catalan(p: usize) -> u128 {
    assert!(p <= MAX_CATALAN_ARG, "catalan({p}) overflows u128");
    let mut c: u128 = 1;
    for q in 0..p as u128 {
        // C_{q+1} = C_q * 2(2q+1) / (q+2), reduced so the product stays exact
        let g = c.gcd(&(q + 2));
        let num = 2 * (2 * q + 1) / ((q + 2) / g);
        c = (c / g).checked_mul(num).expect("catalan overflows u128");
    }
    c
}

/// Monotone `p`-tuples over `{0, ..., p-1}` with `i_r < r` for `r >= 1`.
pub fn below_diagonal_tuples(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![Vec::new()];
    }
    MonotoneTuples::new(p, 0, p - 1)
        .filter(|t| t.iter().enumerate().skip(1).all(|(r, &v)| v < r))
        .collect()
}

/// Monotone `p`-tuples over `{1, ..., p}` with `i_r > r` for every `r`.
pub fn above_diagonal_tuples(p: usize) -> Vec<Vec<usize>> {
    if p == 0 {
        return vec![Vec::new()];
    }
    MonotoneTuples::new(p, 1, p)
        .filter(|t| t.iter().enumerate().all(|(r, &v)| v > r))
        .collect()
}

/// Direct count of [`below_diagonal_tuples`]; equals `catalan(p - 1)`.
pub fn count_below_diagonal_tuples(p: usize) -> u128 {
    below_diagonal_tuples(p).len() as u128
}

/// Direct count of [`above_diagonal_tuples`]; equals `catalan(p)`.
pub fn count_above_diagonal_tuples(p: usize) -> u128 {
    above_diagonal_tuples(p).len() as u128
}
