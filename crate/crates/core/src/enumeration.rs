//! Exhaustive generation of all monotone self-maps of `C_n`.
//!
//! Streams walk the image tuples in lexicographic order with a successor
//! step: raise the last position that can still be raised and reset the
//! suffix to the raised value. No tuple is ever rejected.

use std::collections::BTreeMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::chain::{Endo, EndoError, PointSet, MAX_N};
use crate::combinatorics::binomial;

/// Default ceiling on `n` for anything that walks the whole carrier set.
/// `binom(23, 12)` is about 1.35 million maps.
pub const DEFAULT_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("n = {n} exceeds the enumeration cap {cap}; raise it explicitly to continue")]
    AboveCap { n: usize, cap: usize },
    #[error(transparent)]
    Endo(#[from] EndoError),
}

/// Predicates a stream can be restricted to. Several filters on one stream
/// are combined conjunctively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EndoFilter {
    Idempotent,
    /// Fixed-point set equal to the given set.
    FixedSet(PointSet),
    /// Jump-point set equal to the given set.
    JumpSet(PointSet),
    /// Every point of the set is fixed (other points may be fixed too).
    FixesAll(PointSet),
    /// `α(0) = 0`.
    ZeroPreserving,
}

impl EndoFilter {
    pub fn matches(&self, e: &Endo) -> bool {
        match *self {
            EndoFilter::Idempotent => e.is_idempotent(),
            EndoFilter::FixedSet(f) => e.fixed_points() == f,
            EndoFilter::JumpSet(j) => e.jump_points() == j,
            EndoFilter::FixesAll(f) => f.is_subset(e.fixed_points()),
            EndoFilter::ZeroPreserving => e.preserves_zero(),
        }
    }
}

/// Lexicographic stream over monotone image tuples of length `n`, optionally
/// with a frozen prefix and a conjunction of filters.
#[derive(Debug, Clone)]
pub struct EndoStream {
    n: usize,
    frozen: usize,
    buf: [u8; MAX_N],
    done: bool,
    filters: Vec<EndoFilter>,
}

fn check_cap(n: usize, cap: usize) -> Result<(), EnumError> {
    if n == 0 || n > MAX_N {
        return Err(EndoError::InvalidSize { n }.into());
    }
    if n > cap {
        return Err(EnumError::AboveCap { n, cap });
    }
    Ok(())
}

impl EndoStream {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn with_filter(mut self, filter: EndoFilter) -> Self {
        self.filters.push(filter);
        self
    }

    fn advance(&mut self) {
        let top = (self.n - 1) as u8;
        let mut i = self.n;
        while i > self.frozen {
            i -= 1;
            if self.buf[i] < top {
                let v = self.buf[i] + 1;
                self.buf[i..self.n].fill(v);
                return;
            }
        }
        self.done = true;
    }
}

impl Iterator for EndoStream {
    type Item = Endo;

    fn next(&mut self) -> Option<Endo> {
        while !self.done {
            let current = Endo::from_valid_bytes(&self.buf[..self.n]);
            self.advance();
            if self.filters.iter().all(|f| f.matches(&current)) {
                return Some(current);
            }
        }
        None
    }
}

/// All of `Ê_{C_n}` under the default cap.
pub fn all_endos(n: usize) -> Result<EndoStream, EnumError> {
    all_endos_capped(n, DEFAULT_CAP)
}

pub fn all_endos_capped(n: usize, cap: usize) -> Result<EndoStream, EnumError> {
    check_cap(n, cap)?;
    Ok(EndoStream {
        n,
        frozen: 0,
        buf: [0; MAX_N],
        done: false,
        filters: Vec::new(),
    })
}

/// All maps satisfying `filter`, under the default cap.
pub fn filter_endos(n: usize, filter: EndoFilter) -> Result<EndoStream, EnumError> {
    Ok(all_endos(n)?.with_filter(filter))
}

/// Disjoint sub-range streams keyed by the first two images `(p0, p1)`,
/// `p0 <= p1`. Their concatenation, in order, is exactly [`all_endos`].
pub fn prefix_streams(n: usize, cap: usize) -> Result<Vec<EndoStream>, EnumError> {
    check_cap(n, cap)?;
    if n < 2 {
        return Ok(vec![all_endos_capped(n, cap)?]);
    }
    let mut streams = Vec::new();
    for p0 in 0..n {
        for p1 in p0..n {
            let mut buf = [0u8; MAX_N];
            buf[0] = p0 as u8;
            buf[1..n].fill(p1 as u8);
            streams.push(EndoStream {
                n,
                frozen: 2,
                buf,
                done: false,
                filters: Vec::new(),
            });
        }
    }
    Ok(streams)
}

/// `|Ê_{C_n}| = binom(2n - 1, n)`.
pub fn count_endos(n: usize) -> u128 {
    assert!(n >= 1, "chain size must be positive");
    binomial(2 * n - 1, n)
}

/// Buckets every map under its idempotent power. Keys are idempotents in
/// lexicographic order; members within a bucket are lexicographic too.
pub fn partition_by_omega(n: usize) -> Result<BTreeMap<Endo, Vec<Endo>>, EnumError> {
    partition_by_omega_capped(n, DEFAULT_CAP)
}

pub fn partition_by_omega_capped(
    n: usize,
    cap: usize,
) -> Result<BTreeMap<Endo, Vec<Endo>>, EnumError> {
    let partials: Vec<BTreeMap<Endo, Vec<Endo>>> = prefix_streams(n, cap)?
        .into_par_iter()
        .map(|stream| {
            let mut local: BTreeMap<Endo, Vec<Endo>> = BTreeMap::new();
            for e in stream {
                local.entry(e.omega().idempotent).or_default().push(e);
            }
            local
        })
        .collect();
    // sub-ranges arrive in lexicographic order, so appending keeps buckets sorted
    let mut merged: BTreeMap<Endo, Vec<Endo>> = BTreeMap::new();
    for part in partials {
        for (key, members) in part {
            merged.entry(key).or_default().extend(members);
        }
    }
    Ok(merged)
}

/// Monotone tuples of length `len` with entries in `lo..=hi`, lexicographic.
#[derive(Debug, Clone)]
pub struct MonotoneTuples {
    hi: usize,
    current: Option<Vec<usize>>,
}

impl MonotoneTuples {
    pub fn new(len: usize, lo: usize, hi: usize) -> Self {
        let current = (lo <= hi).then(|| vec![lo; len]);
        MonotoneTuples { hi, current }
    }
}

impl Iterator for MonotoneTuples {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.take()?;
        let mut next = out.clone();
        let mut i = next.len();
        while i > 0 {
            i -= 1;
            if next[i] < self.hi {
                let v = next[i] + 1;
                next[i..].fill(v);
                self.current = Some(next);
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn e(s: &str) -> Endo {
        s.parse().unwrap()
    }

    /// Independent generator: every tuple in `0..n` to the `n`, kept if monotone.
    fn brute_monotone(n: usize) -> Vec<Endo> {
        let total = n.pow(n as u32);
        let mut out = Vec::new();
        for code in 0..total {
            let mut digits = vec![0usize; n];
            let mut c = code;
            for d in digits.iter_mut().rev() {
                *d = c % n;
                c /= n;
            }
            if let Ok(endo) = Endo::new(n, &digits) {
                out.push(endo);
            }
        }
        out
    }

    #[test]
    fn stream_matches_brute_force_generator() {
        for n in 1..=6 {
            let streamed: Vec<Endo> = all_endos(n).unwrap().collect();
            assert_eq!(streamed, brute_monotone(n), "n = {n}");
        }
    }

    #[test]
    fn small_carrier_sets() {
        let c3: Vec<Endo> = all_endos(3).unwrap().collect();
        assert_eq!(c3.len(), 10);
        assert!(c3.contains(&e("0,0,2")));
        assert!(c3.contains(&e("0,1,1")));
        let c1: Vec<Endo> = all_endos(1).unwrap().collect();
        assert_eq!(c1, vec![e("0")]);
        assert_eq!(all_endos(7).unwrap().count(), 1716);
    }

    #[test]
    fn stream_is_strictly_increasing_from_kappa0_to_top() {
        for n in 1..=7 {
            let all: Vec<Endo> = all_endos(n).unwrap().collect();
            assert!(all.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(all[0], Endo::constant(n, 0).unwrap());
            assert_eq!(*all.last().unwrap(), Endo::constant(n, n - 1).unwrap());
        }
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(count_endos(1), 1);
        assert_eq!(count_endos(3), 10);
        assert_eq!(count_endos(8), 6435);
        for n in 1..=10 {
            assert_eq!(all_endos(n).unwrap().count() as u128, count_endos(n));
        }
    }

    #[test]
    fn cap_is_enforced() {
        assert_eq!(
            all_endos(13).unwrap_err(),
            EnumError::AboveCap {
                n: 13,
                cap: DEFAULT_CAP
            }
        );
        assert!(all_endos_capped(13, 13).is_ok());
        assert!(all_endos(0).is_err());
    }

    #[test]
    fn filters() {
        // idempotents of C_3: 000 002 011 012 022 111 112 222
        let idem: Vec<Endo> = filter_endos(3, EndoFilter::Idempotent).unwrap().collect();
        assert_eq!(idem.len(), 8);
        let fixed: PointSet = [1, 5].into_iter().collect();
        let phis: Vec<Endo> = all_endos(7)
            .unwrap()
            .with_filter(EndoFilter::FixedSet(fixed))
            .with_filter(EndoFilter::Idempotent)
            .collect();
        assert_eq!(
            phis,
            vec![
                e("1,1,1,1,1,5,5"),
                e("1,1,1,1,5,5,5"),
                e("1,1,1,5,5,5,5"),
                e("1,1,5,5,5,5,5")
            ]
        );
        for n in 1..=5 {
            let all: Vec<Endo> = all_endos(n).unwrap().collect();
            let free: Vec<Endo> = filter_endos(n, EndoFilter::FixesAll(PointSet::empty()))
                .unwrap()
                .collect();
            assert_eq!(all, free);
            let zero = filter_endos(n, EndoFilter::ZeroPreserving).unwrap().count() as u128;
            // zero-preserving maps are monotone maps of the remaining n-1 points into C_n
            assert_eq!(zero, binomial(2 * n - 2, n - 1));
        }
    }

    #[test]
    fn prefix_streams_tile_the_carrier() {
        for n in 1..=7 {
            let joined: Vec<Endo> = prefix_streams(n, DEFAULT_CAP)
                .unwrap()
                .into_iter()
                .flatten()
                .collect();
            let all: Vec<Endo> = all_endos(n).unwrap().collect();
            assert_eq!(joined, all);
        }
    }

    #[test]
    fn partition_examples() {
        let p3 = partition_by_omega(3).unwrap();
        assert_eq!(p3.len(), 8);
        assert_eq!(p3.values().map(Vec::len).sum::<usize>(), 10);
        assert_eq!(p3[&e("2,2,2")], vec![e("1,2,2"), e("2,2,2")]);

        let p2 = partition_by_omega(2).unwrap();
        assert_eq!(p2.len(), 3);
        assert!(p2.values().all(|b| b.len() == 1));
    }

    #[test]
    fn partition_matches_sequential_scan() {
        for n in 1..=7 {
            let mut seq: BTreeMap<Endo, Vec<Endo>> = BTreeMap::new();
            for a in all_endos(n).unwrap() {
                seq.entry(a.omega().idempotent).or_default().push(a);
            }
            assert_eq!(partition_by_omega(n).unwrap(), seq);
        }
    }

    #[test]
    fn partition_buckets_are_well_formed() {
        for n in 1..=6 {
            let parts = partition_by_omega(n).unwrap();
            let mut seen = HashSet::new();
            for (key, members) in &parts {
                assert!(key.is_idempotent());
                assert!(members.contains(key));
                for m in members {
                    assert_eq!(m.omega().idempotent, *key);
                    assert!(seen.insert(*m));
                }
            }
            assert_eq!(seen.len() as u128, count_endos(n));
        }
    }

    #[test]
    fn monotone_tuples() {
        let all: Vec<Vec<usize>> = MonotoneTuples::new(2, 1, 3).collect();
        assert_eq!(
            all,
            vec![
                vec![1, 1],
                vec![1, 2],
                vec![1, 3],
                vec![2, 2],
                vec![2, 3],
                vec![3, 3]
            ]
        );
        assert_eq!(MonotoneTuples::new(0, 0, 4).count(), 1);
        assert_eq!(MonotoneTuples::new(3, 2, 1).count(), 0);
    }
}
