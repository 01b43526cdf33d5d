//! Shape of an idempotent between two adjacent jump points.
//!
//! On `[j_lo, j_hi - 1]` an idempotent is constant, the identity, or a
//! constant/identity/constant concatenation in which some pieces may be
//! missing. Degenerate cases are normalized: a lone fixed point is reported
//! as [`SegmentClass::Constant`], and every identity piece in the other
//! shapes spans at least two points.

use serde::Serialize;

use crate::chain::Endo;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "tag", rename_all = "snake_case")]
pub enum SegmentClass {
    Constant {
        value: usize,
    },
    Identity,
    /// Identity on `[j_lo, k]`, constant `k` on `[k, j_hi - 1]`.
    IdentityThenConstant {
        k: usize,
    },
    /// Constant `k` on `[j_lo, k]`, identity on `[k, j_hi - 1]`.
    ConstantThenIdentity {
        k: usize,
    },
    /// Constant `k` on `[j_lo, k]`, identity on `[k, l]`, constant `l` on
    /// `[l, j_hi - 1]`.
    ConstantIdentityConstant {
        k: usize,
        l: usize,
    },
}

impl SegmentClass {
    /// Case number 1 to 5 in the usual listing.
    pub fn case(&self) -> u8 {
        match self {
            SegmentClass::Constant { .. } => 1,
            SegmentClass::Identity => 2,
            SegmentClass::IdentityThenConstant { .. } => 3,
            SegmentClass::ConstantThenIdentity { .. } => 4,
            SegmentClass::ConstantIdentityConstant { .. } => 5,
        }
    }

    /// Images on `[lo, hi]` described by this class.
    pub fn synthesize(&self, lo: usize, hi: usize) -> Vec<usize> {
        (lo..=hi)
            .map(|x| match *self {
                SegmentClass::Constant { value } => value,
                SegmentClass::Identity => x,
                SegmentClass::IdentityThenConstant { k } => x.min(k),
                SegmentClass::ConstantThenIdentity { k } => x.max(k),
                SegmentClass::ConstantIdentityConstant { k, l } => x.clamp(k, l),
            })
            .collect()
    }
}

fn classify_interval(eps: &Endo, lo: usize, hi: usize) -> Option<SegmentClass> {
    let fixed: Vec<usize> = (lo..=hi).filter(|&x| eps.apply(x) == x).collect();
    let (&first, &last) = (fixed.first()?, fixed.last()?);
    let class = if first == last {
        SegmentClass::Constant { value: first }
    } else {
        match (first > lo, last < hi) {
            (false, false) => SegmentClass::Identity,
            (false, true) => SegmentClass::IdentityThenConstant { k: last },
            (true, false) => SegmentClass::ConstantThenIdentity { k: first },
            (true, true) => SegmentClass::ConstantIdentityConstant { k: first, l: last },
        }
    };
    let actual: Vec<usize> = (lo..=hi).map(|x| eps.apply(x)).collect();
    (class.synthesize(lo, hi) == actual).then_some(class)
}

/// Classifies `eps` on `[j_lo, j_hi - 1]`, where `j_lo < j_hi` are adjacent,
/// non-consecutive jump points of the idempotent `eps`.
pub fn segment_classify(eps: &Endo, j_lo: usize, j_hi: usize) -> Result<SegmentClass> {
    if !eps.is_idempotent() {
        return Err(Error::NotIdempotent { endo: *eps });
    }
    let not_adjacent = || Error::NotAdjacentJumps {
        endo: *eps,
        lo: j_lo,
        hi: j_hi,
    };
    let jumps = eps.jump_points();
    if j_hi <= j_lo + 1 || !jumps.contains(j_lo) || !jumps.contains(j_hi) {
        return Err(not_adjacent());
    }
    if (j_lo + 1..j_hi).any(|j| jumps.contains(j)) {
        return Err(not_adjacent());
    }
    classify_interval(eps, j_lo, j_hi - 1).ok_or_else(not_adjacent)
}

/// Classification of every stretch between adjacent non-consecutive jump
/// points of `eps`, as `(j_lo, j_hi, class)`.
pub fn segments(eps: &Endo) -> Result<Vec<(usize, usize, SegmentClass)>> {
    let jumps = eps.jump_points().to_vec();
    jumps
        .windows(2)
        .filter(|w| w[1] > w[0] + 1)
        .map(|w| segment_classify(eps, w[0], w[1]).map(|c| (w[0], w[1], c)))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Endo {
        s.parse().unwrap()
    }

    #[test]
    fn constant_identity_constant() {
        let eps = e("0,0,3,3,4,4,7,7");
        assert!(eps.is_idempotent());
        assert_eq!(
            segment_classify(&eps, 2, 6).unwrap(),
            SegmentClass::ConstantIdentityConstant { k: 3, l: 4 }
        );
    }

    #[test]
    fn lone_fixed_point_normalizes_to_constant() {
        let eps = e("0,0,2,2,2,5,5");
        assert_eq!(eps.jump_points().to_vec(), vec![2, 5]);
        assert_eq!(
            segment_classify(&eps, 2, 5).unwrap(),
            SegmentClass::Constant { value: 2 }
        );
    }

    #[test]
    fn constant_block() {
        // jumps at 1 and 4; [1,3] is the constant 3
        let eps = e("0,3,3,3,5,5");
        assert_eq!(eps.jump_points().to_vec(), vec![1, 4]);
        assert_eq!(
            segment_classify(&eps, 1, 4).unwrap(),
            SegmentClass::Constant { value: 3 }
        );
    }

    #[test]
    fn identity_pieces() {
        // jumps 2 and 5, identity on [2,4]
        let eps = e("0,0,2,3,4,6,6");
        assert_eq!(eps.jump_points().to_vec(), vec![2, 5]);
        assert_eq!(
            segment_classify(&eps, 2, 5).unwrap(),
            SegmentClass::Identity
        );
        // jumps 2 and 5, identity on [2,3] then constant 3
        let eps = e("0,0,2,3,3,6,6");
        assert_eq!(eps.jump_points().to_vec(), vec![2, 5]);
        assert_eq!(
            segment_classify(&eps, 2, 5).unwrap(),
            SegmentClass::IdentityThenConstant { k: 3 }
        );
        // jumps 1 and 5, constant 3 on [1,3] then identity
        let eps = e("0,3,3,3,4,6,6");
        assert_eq!(eps.jump_points().to_vec(), vec![1, 5]);
        assert_eq!(
            segment_classify(&eps, 1, 5).unwrap(),
            SegmentClass::ConstantThenIdentity { k: 3 }
        );
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(matches!(
            segment_classify(&e("0,0,1"), 1, 2),
            Err(Error::NotIdempotent { .. })
        ));
        let eps = e("0,0,3,3,4,4,7,7");
        assert!(matches!(
            segment_classify(&eps, 2, 5),
            Err(Error::NotAdjacentJumps { .. })
        ));
        // consecutive jumps 3, 4
        assert!(segment_classify(&e("1,1,1,3,5,5"), 3, 4).is_err());
    }

    #[test]
    fn synthesize_round_trip() {
        let c = SegmentClass::ConstantIdentityConstant { k: 3, l: 4 };
        assert_eq!(c.synthesize(2, 5), vec![3, 3, 4, 4]);
        assert_eq!(c.case(), 5);
    }
}
