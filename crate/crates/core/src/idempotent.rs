//! Idempotent endomorphisms: criteria, the families `ID(k_1, ..., k_s)` of
//! idempotents with a prescribed fixed-point set, their ideal property, and
//! jump-point structure.

use std::collections::HashSet;

use serde::Serialize;

use crate::chain::{Endo, FixedPointSet, JumpPointSet, PointSet};
use crate::combinatorics::binomial;
use crate::enumeration::{all_endos, EndoFilter};
use crate::error::{Error, Result};
use crate::report::{ClaimId, ReportBuilder, VerificationReport, Witness};

/// `Ok(())` when every non-fixed point is sent to a fixed point, otherwise
/// the least point `k` whose image `α(k)` is not fixed.
pub fn idempotent_witness(a: &Endo) -> std::result::Result<(), usize> {
    let img = a.images();
    for (k, &v) in img.iter().enumerate() {
        let v = v as usize;
        if v != k && img[v] as usize != v {
            return Err(k);
        }
    }
    Ok(())
}

/// `Im(α) = Fix(α)`.
pub fn image_equals_fixed(a: &Endo) -> bool {
    a.image_set() == a.fixed_points()
}

/// All idempotents whose fixed-point set is exactly `fixed_set`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdFamily {
    pub n: usize,
    pub fixed_set: FixedPointSet,
    /// Lexicographically increasing. With a single non-trivial gap this is
    /// also the pointwise order.
    pub members: Vec<Endo>,
}

impl IdFamily {
    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

fn validate_fixed_set(n: usize, fixed_set: PointSet) -> Result<()> {
    let bad = |reason| {
        Err(Error::InvalidFixedSet {
            set: fixed_set,
            n,
            reason,
        })
    };
    if n == 0 || n > crate::chain::MAX_N {
        return Err(crate::chain::EndoError::InvalidSize { n }.into());
    }
    if fixed_set.is_empty() {
        return bad("must be nonempty");
    }
    if fixed_set.max().is_some_and(|m| m >= n) {
        return bad("contains a point outside the chain");
    }
    Ok(())
}

/// Block-form enumeration: constant `k_1` up to the first threshold, then
/// constant `k_2`, and so on. Each gap `(k_m, k_{m+1})` independently picks a
/// threshold `t` in `k_m + 1 ..= k_{m+1}`; positions `[k_m, t)` map to `k_m`
/// and `[t, k_{m+1}]` to `k_{m+1}`.
pub fn enumerate_id_family(n: usize, fixed_set: FixedPointSet) -> Result<IdFamily> {
    validate_fixed_set(n, fixed_set)?;
    let points = fixed_set.to_vec();
    let mut members = Vec::new();
    let mut thresholds: Vec<usize> = points.windows(2).map(|w| w[0] + 1).collect();
    loop {
        let mut img = vec![0u8; n];
        let first = points[0];
        let last = *points.last().unwrap();
        img[..=first].fill(first as u8);
        img[last..].fill(last as u8);
        for (w, &t) in points.windows(2).zip(&thresholds) {
            img[w[0]..t].fill(w[0] as u8);
            img[t..=w[1]].fill(w[1] as u8);
        }
        members.push(Endo::from_valid_bytes(&img));

        // odometer over the thresholds
        let mut i = thresholds.len();
        loop {
            if i == 0 {
                members.sort();
                return Ok(IdFamily {
                    n,
                    fixed_set,
                    members,
                });
            }
            i -= 1;
            if thresholds[i] < points[i + 1] {
                thresholds[i] += 1;
                break;
            }
            thresholds[i] = points[i] + 1;
        }
    }
}

/// `∏ (k_{m+1} - k_m)` over consecutive fixed points; 1 for a single point.
pub fn id_family_order(n: usize, fixed_set: FixedPointSet) -> Result<u128> {
    validate_fixed_set(n, fixed_set)?;
    let points = fixed_set.to_vec();
    Ok(points.windows(2).map(|w| (w[1] - w[0]) as u128).product())
}

/// Whether a finite set of maps is closed under addition and multiplication.
/// Returns the first offending pair and its result when it is not.
pub fn closure_violation(members: &[Endo]) -> Option<(Endo, Endo, Endo)> {
    let set: HashSet<Endo> = members.iter().copied().collect();
    for a in members {
        for b in members {
            let s = a.join_unchecked(b);
            if !set.contains(&s) {
                return Some((*a, *b, s));
            }
            let p = a.compose_unchecked(b);
            if !set.contains(&p) {
                return Some((*a, *b, p));
            }
        }
    }
    None
}

/// Checks that `ID(F)` is an ideal of the semiring of maps fixing every point
/// of `F`: closed under addition, `α·β = α` and `β·α ∈ ID(F)` for every
/// member `α` and every ambient `β`.
pub fn ideal_check(n: usize, fixed_set: FixedPointSet) -> Result<VerificationReport> {
    validate_fixed_set(n, fixed_set)?;
    if n < 3 || fixed_set.len() > n - 2 {
        return Err(Error::Bounds(format!(
            "ideal check needs n >= 3 and 1 <= |F| <= n - 2, got n = {n}, |F| = {}",
            fixed_set.len()
        )));
    }
    let family = enumerate_id_family(n, fixed_set)?;
    let members: HashSet<Endo> = family.members.iter().copied().collect();
    let ambient: Vec<Endo> = all_endos(n)?
        .with_filter(EndoFilter::FixesAll(fixed_set))
        .collect();

    let mut report = ReportBuilder::new(ClaimId::IdFamilyIdeal, n, n);
    report.note(format!(
        "F = {fixed_set}: |ID| = {}, ambient size {}",
        family.len(),
        ambient.len()
    ));
    for a in &family.members {
        for b in &family.members {
            let s = a.join_unchecked(b);
            report.check(members.contains(&s), || {
                Witness::new([a, b], "sum in ID", s).with_note("additive closure")
            });
        }
        for beta in &ambient {
            let right = a.compose_unchecked(beta);
            report.check(right == *a, || {
                Witness::new([a, beta], a, right).with_note("α·β = α")
            });
            let left = beta.compose_unchecked(a);
            report.check(members.contains(&left), || {
                Witness::new([beta, a], "β·α in ID", left).with_note("left absorption")
            });
        }
    }
    Ok(report.finish())
}

/// Pairs of adjacent fixed points `(k_i, k_{i+1})`, in order.
pub fn fixed_gaps(a: &Endo) -> Vec<(usize, usize)> {
    let pts = a.fixed_points().to_vec();
    pts.windows(2).map(|w| (w[0], w[1])).collect()
}

/// The unique jump point in `(k_i, k_{i+1}]` for the gap between the
/// `gap_index`-th and next fixed point (0-based).
///
/// Walks up from `k_i + 1` while `α(x) < x`; the first point with
/// `α(x) >= x` is the jump.
pub fn gap_jump_point(a: &Endo, gap_index: usize) -> Result<usize> {
    let gaps = fixed_gaps(a);
    let &(lo, hi) = gaps.get(gap_index).ok_or(Error::GapOutOfRange {
        index: gap_index,
        gaps: gaps.len(),
    })?;
    if hi == lo + 1 {
        return Err(Error::ConsecutiveFixedPoints { lo, hi });
    }
    let jump = (lo + 1..=hi)
        .find(|&x| a.apply(x) >= x)
        .expect("the upper fixed point always satisfies α(x) >= x");
    Ok(jump)
}

/// Least `q >= 1` with `α^{q+1} = α^q`.
pub fn stabilization_index(a: &Endo) -> usize {
    let mut current = *a;
    let mut q = 1;
    loop {
        let next = current.compose_unchecked(a);
        if next == current {
            return q;
        }
        current = next;
        q += 1;
    }
}

/// Sufficient condition for idempotence: the number of fixed points `s`
/// satisfies `ceil((n+1)/2) <= s <= n-1` and no two non-fixed points are
/// consecutive. Only the implication "predicate ⇒ idempotent" holds.
pub fn sparse_nonfixed_predicate(a: &Endo) -> bool {
    let n = a.n();
    let fixed = a.fixed_points();
    let s = fixed.len();
    let lower = (n + 2) / 2; // ceil((n+1)/2)
    if s < lower || s + 1 > n {
        return false;
    }
    (1..n).all(|x| fixed.contains(x - 1) || fixed.contains(x))
}

/// All idempotents whose jump-point set is exactly `jumps`.
pub fn idempotents_with_jumps(n: usize, jumps: JumpPointSet) -> Result<Vec<Endo>> {
    if jumps.contains(0) || jumps.max().is_some_and(|m| m >= n) {
        return Err(Error::Bounds(format!(
            "jump points must lie in 1..{n}, got {jumps}"
        )));
    }
    Ok(all_endos(n)?
        .with_filter(EndoFilter::Idempotent)
        .with_filter(EndoFilter::JumpSet(jumps))
        .collect())
}

/// Size of the subsemiring of idempotents without jump points,
/// `binom(n + 1, 2)`.
pub fn no_jump_idempotent_count(n: usize) -> u128 {
    binomial(n + 1, 2)
}
