//! Monotone self-maps of the chain `{0, 1, ..., n-1}` and their semiring algebra.
//!
//! Every join-endomorphism of a finite chain is exactly a monotone map, so an
//! [`Endo`] is stored as its ordered image tuple. Addition is the pointwise
//! maximum and multiplication is composition read left to right: `a · b`
//! means "first `a`, then `b`", i.e. `(a · b)(x) = b(a(x))`.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

/// Largest supported chain size. One byte per image value.
pub const MAX_N: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EndoError {
    #[error("chain size {n} is outside 1..={MAX_N}")]
    InvalidSize { n: usize },
    #[error("expected {expected} images, found {found}")]
    LengthMismatch { expected: usize, found: usize },
    #[error("image {value} at index {index} is outside the chain 0..{n}")]
    OutOfRange {
        index: usize,
        value: usize,
        n: usize,
    },
    #[error("monotonicity violation at index {index}")]
    NotMonotone { index: usize },
    #[error("chain sizes differ: {left} vs {right}")]
    SizeMismatch { left: usize, right: usize },
    #[error("{name} = {value} is not admissible on a chain of size {n}")]
    ParameterOutOfRange {
        name: &'static str,
        value: usize,
        n: usize,
    },
    #[error("power exponent must be at least 1")]
    ZeroPower,
    #[error("malformed token {token:?} at position {position}")]
    MalformedToken { position: usize, token: String },
    #[error("empty endomorphism literal")]
    EmptyLiteral,
}

/// A set of chain points, kept as a bitmask (chains have at most 64 points).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointSet(u64);

/// Points `a` with `α(a) = a`.
pub type FixedPointSet = PointSet;
/// Jump points of an endomorphism, see [`Endo::jump_points`].
pub type JumpPointSet = PointSet;

impl PointSet {
    pub const fn empty() -> Self {
        PointSet(0)
    }

    /// `{0, ..., n-1}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            PointSet(u64::MAX)
        } else {
            PointSet((1u64 << n) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        PointSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn insert(&mut self, point: usize) {
        debug_assert!(point < MAX_N);
        self.0 |= 1u64 << point;
    }

    pub fn contains(self, point: usize) -> bool {
        point < MAX_N && self.0 & (1u64 << point) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: PointSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    /// Points in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let p = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            Some(p)
        })
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for PointSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut set = PointSet::empty();
        for p in iter {
            set.insert(p);
        }
        set
    }
}

impl fmt::Debug for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for PointSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, p) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for PointSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for PointSet {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let points = Vec::<usize>::deserialize(deserializer)?;
        if let Some(&p) = points.iter().find(|&&p| p >= MAX_N) {
            return Err(serde::de::Error::custom(format!("point {p} out of range")));
        }
        Ok(points.into_iter().collect())
    }
}

/// A monotone self-map of the chain `C_n`, stored as its image tuple.
///
/// Unused trailing slots are always zero, so the derived equality, hashing and
/// ordering agree with tuple comparison (ordering is by `n`, then
/// lexicographic in the images).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Endo {
    n: u8,
    images: [u8; MAX_N],
}

/// The idempotent power of an element together with the least exponent that
/// reaches it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OmegaPower {
    pub idempotent: Endo,
    pub index: usize,
}

fn check_size(n: usize) -> Result<(), EndoError> {
    if n == 0 || n > MAX_N {
        Err(EndoError::InvalidSize { n })
    } else {
        Ok(())
    }
}

impl Endo {
    /// Validates an image tuple. Errors carry the offending index.
    pub fn new(n: usize, images: &[usize]) -> Result<Self, EndoError> {
        check_size(n)?;
        if images.len() != n {
            return Err(EndoError::LengthMismatch {
                expected: n,
                found: images.len(),
            });
        }
        let mut out = [0u8; MAX_N];
        for (index, &value) in images.iter().enumerate() {
            if value >= n {
                return Err(EndoError::OutOfRange { index, value, n });
            }
            if index > 0 && value < images[index - 1] {
                return Err(EndoError::NotMonotone { index });
            }
            out[index] = value as u8;
        }
        Ok(Endo {
            n: n as u8,
            images: out,
        })
    }

    /// Builds from bytes already known to be a valid monotone tuple.
    pub(crate) fn from_valid_bytes(images: &[u8]) -> Self {
        debug_assert!(!images.is_empty() && images.len() <= MAX_N);
        debug_assert!(images.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(images.iter().all(|&v| (v as usize) < images.len()));
        let mut out = [0u8; MAX_N];
        out[..images.len()].copy_from_slice(images);
        Endo {
            n: images.len() as u8,
            images: out,
        }
    }

    pub fn identity(n: usize) -> Result<Self, EndoError> {
        check_size(n)?;
        let mut images = [0u8; MAX_N];
        for (x, slot) in images.iter_mut().take(n).enumerate() {
            *slot = x as u8;
        }
        Ok(Endo { n: n as u8, images })
    }

    /// The constant map `κ_k`.
    pub fn constant(n: usize, k: usize) -> Result<Self, EndoError> {
        check_size(n)?;
        if k >= n {
            return Err(EndoError::ParameterOutOfRange {
                name: "k",
                value: k,
                n,
            });
        }
        let mut images = [0u8; MAX_N];
        images[..n].fill(k as u8);
        Ok(Endo { n: n as u8, images })
    }

    /// Identity except that `k` is sent to `k + 1`. Requires `k <= n - 2`.
    pub fn k_plus(n: usize, k: usize) -> Result<Self, EndoError> {
        check_size(n)?;
        if k + 2 > n {
            return Err(EndoError::ParameterOutOfRange {
                name: "k",
                value: k,
                n,
            });
        }
        let mut e = Endo::identity(n)?;
        e.images[k] = (k + 1) as u8;
        Ok(e)
    }

    /// Identity except that `k` is sent to `k - 1`. Requires `1 <= k <= n - 1`.
    pub fn k_minus(n: usize, k: usize) -> Result<Self, EndoError> {
        check_size(n)?;
        if k == 0 || k >= n {
            return Err(EndoError::ParameterOutOfRange {
                name: "k",
                value: k,
                n,
            });
        }
        let mut e = Endo::identity(n)?;
        e.images[k] = (k - 1) as u8;
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images[..self.n as usize]
    }

    /// `α(x)`. Panics if `x >= n`.
    pub fn apply(&self, x: usize) -> usize {
        assert!(x < self.n(), "point {x} outside chain of size {}", self.n);
        self.images[x] as usize
    }

    fn same_size(&self, other: &Endo) -> Result<(), EndoError> {
        if self.n != other.n {
            Err(EndoError::SizeMismatch {
                left: self.n(),
                right: other.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Semiring addition: the pointwise maximum.
    pub fn join(&self, other: &Endo) -> Result<Endo, EndoError> {
        self.same_size(other)?;
        Ok(self.join_unchecked(other))
    }

    pub(crate) fn join_unchecked(&self, other: &Endo) -> Endo {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for x in 0..self.n() {
            out.images[x] = self.images[x].max(other.images[x]);
        }
        out
    }

    /// Semiring multiplication, first `self` then `other`.
    pub fn compose(&self, other: &Endo) -> Result<Endo, EndoError> {
        self.same_size(other)?;
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Endo) -> Endo {
        debug_assert_eq!(self.n, other.n);
        let mut out = *self;
        for x in 0..self.n() {
            out.images[x] = other.images[self.images[x] as usize];
        }
        out
    }

    /// The `m`-fold product of `self` with itself.
    pub fn power(&self, m: usize) -> Result<Endo, EndoError> {
        if m == 0 {
            return Err(EndoError::ZeroPower);
        }
        let mut acc = *self;
        for _ in 1..m {
            acc = acc.compose_unchecked(self);
        }
        Ok(acc)
    }

    pub fn is_idempotent(&self) -> bool {
        self.compose_unchecked(self) == *self
    }

    /// The unique idempotent power `α^m` and the least such `m`.
    ///
    /// Monotone chain maps have no nontrivial cycles, so for `n >= 2` the
    /// index never exceeds `n - 1`.
    pub fn omega(&self) -> OmegaPower {
        let mut acc = *self;
        let mut index = 1;
        while !acc.is_idempotent() {
            acc = acc.compose_unchecked(self);
            index += 1;
        }
        OmegaPower {
            idempotent: acc,
            index,
        }
    }

    pub fn fixed_points(&self) -> FixedPointSet {
        self.images()
            .iter()
            .enumerate()
            .filter(|&(x, &v)| v as usize == x)
            .map(|(x, _)| x)
            .collect()
    }

    /// Image set `Im(α)`.
    pub fn image_set(&self) -> PointSet {
        self.images().iter().map(|&v| v as usize).collect()
    }

    /// Whether `j` is a jump point: `j != 0` and either
    /// `α(j-1) <= j-1` and `α(j) > j`, or `α(j-1) < j-1` and `α(j) >= j`.
    pub fn is_jump_point(&self, j: usize) -> bool {
        if j == 0 || j >= self.n() {
            return false;
        }
        let prev = self.images[j - 1] as usize;
        let here = self.images[j] as usize;
        (prev < j && here > j) || (prev + 1 < j && here >= j)
    }

    pub fn jump_points(&self) -> JumpPointSet {
        (1..self.n()).filter(|&j| self.is_jump_point(j)).collect()
    }

    /// `α(0) = 0`, membership in the zero-preserving subsemiring.
    pub fn preserves_zero(&self) -> bool {
        self.images[0] == 0
    }

    /// Pointwise `self <= other`, the order induced by addition.
    pub fn le_pointwise(&self, other: &Endo) -> bool {
        self.n == other.n
            && self
                .images()
                .iter()
                .zip(other.images())
                .all(|(a, b)| a <= b)
    }
}

impl fmt::Display for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.images().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Endo {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "≀{self}≀")
    }
}

/// How a literal was written.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiteralForm {
    /// `2,2,2,5,5,5,5`
    Canonical,
    /// `2225555`, one digit per image, only for `n <= 10`.
    Compact,
}

/// Parses a literal in canonical or compact form, reporting which one it was.
pub fn parse_endo_with_form(text: &str) -> Result<(Endo, LiteralForm), EndoError> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Err(EndoError::EmptyLiteral);
    }
    let offset = text.len() - text.trim_start().len();

    if !trimmed.contains(',') && trimmed.len() > 1 {
        if trimmed.len() > 10 {
            return Err(EndoError::MalformedToken {
                position: offset,
                token: trimmed.to_string(),
            });
        }
        let mut images = Vec::with_capacity(trimmed.len());
        for (i, c) in trimmed.char_indices() {
            let d = c.to_digit(10).ok_or_else(|| EndoError::MalformedToken {
                position: offset + i,
                token: c.to_string(),
            })?;
            images.push(d as usize);
        }
        return Ok((Endo::new(images.len(), &images)?, LiteralForm::Compact));
    }

    let mut images = Vec::new();
    let mut position = offset;
    for token in trimmed.split(',') {
        let malformed = || EndoError::MalformedToken {
            position,
            token: token.to_string(),
        };
        if token.is_empty() || !token.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let value: usize = token.parse().map_err(|_| malformed())?;
        images.push(value);
        position += token.len() + 1;
    }
    if images.len() > MAX_N {
        return Err(EndoError::InvalidSize { n: images.len() });
    }
    Ok((Endo::new(images.len(), &images)?, LiteralForm::Canonical))
}

/// Parses a literal; the chain size is the number of images.
pub fn parse_endo(text: &str) -> Result<Endo, EndoError> {
    parse_endo_with_form(text).map(|(e, _)| e)
}

/// Canonical text form, e.g. `2,2,2,5,5,5,5`.
pub fn format_endo(e: &Endo) -> String {
    e.to_string()
}

impl FromStr for Endo {
    type Err = EndoError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_endo(s)
    }
}

impl Serialize for Endo {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Endo {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        parse_endo(&s).map_err(serde::de::Error::custom)
    }
}
