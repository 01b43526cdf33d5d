//! Roots of idempotents.
//!
//! `α ~ β` when some power of `α` equals some power of `β` and that power is
//! idempotent. In a finite aperiodic semigroup this is the same as having the
//! same idempotent power, so every class holds exactly one idempotent. A
//! class is named by its [`TypeDescriptor`]: the maximal runs of fixed points
//! and, for each gap between runs, the unique jump point inside it.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::chain::{Endo, PointSet};
use crate::combinatorics::catalan;
use crate::enumeration::{all_endos_capped, partition_by_omega_capped, DEFAULT_CAP};
use crate::error::{Error, Result};
use crate::idempotent::gap_jump_point;
use crate::report::{ClaimId, ReportBuilder, VerificationReport, Witness};

pub fn equivalent(a: &Endo, b: &Endo) -> Result<bool> {
    if a.n() != b.n() {
        return Err(crate::chain::EndoError::SizeMismatch {
            left: a.n(),
            right: b.n(),
        }
        .into());
    }
    Ok(a.omega().idempotent == b.omega().idempotent)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TypeDescriptor {
    pub n: usize,
    /// Maximal runs of consecutive fixed points, as inclusive `(first, last)`.
    pub blocks: Vec<(usize, usize)>,
    /// One jump point per gap between consecutive blocks.
    pub jumps: Vec<usize>,
}

/// Splits a point set into maximal runs of consecutive points.
pub fn runs(points: PointSet) -> Vec<(usize, usize)> {
    let mut out: Vec<(usize, usize)> = Vec::new();
    for p in points.iter() {
        match out.last_mut() {
            Some((_, end)) if *end + 1 == p => *end = p,
            _ => out.push((p, p)),
        }
    }
    out
}

impl TypeDescriptor {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidDescriptor(msg));
        if self.n == 0 || self.n > crate::chain::MAX_N {
            return bad(format!("chain size {} out of range", self.n));
        }
        if self.blocks.is_empty() {
            return bad("at least one fixed block is required".into());
        }
        for &(a, b) in &self.blocks {
            if a > b || b >= self.n {
                return bad(format!("block [{a},{b}] is not inside the chain"));
            }
        }
        for w in self.blocks.windows(2) {
            if w[1].0 < w[0].1 + 2 {
                return bad(format!(
                    "blocks [{},{}] and [{},{}] are not separated by a gap",
                    w[0].0, w[0].1, w[1].0, w[1].1
                ));
            }
        }
        if self.jumps.len() + 1 != self.blocks.len() {
            return bad(format!(
                "{} blocks need {} jumps, got {}",
                self.blocks.len(),
                self.blocks.len() - 1,
                self.jumps.len()
            ));
        }
        for (w, &j) in self.blocks.windows(2).zip(&self.jumps) {
            if j <= w[0].1 || j > w[1].0 {
                return bad(format!("jump {j} outside its gap ({}, {}]", w[0].1, w[1].0));
            }
        }
        Ok(())
    }

    /// Fixed points below the first block.
    pub fn below(&self) -> usize {
        self.blocks[0].0
    }

    /// Points above the last block.
    pub fn above(&self) -> usize {
        self.n - 1 - self.blocks.last().unwrap().1
    }

    /// `t_i = j_i - (last point of block i)`.
    pub fn t(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .zip(&self.jumps)
            .map(|(b, &j)| j - b.1)
            .collect()
    }

    /// `s_i = (first point of block i+1) - j_i`.
    pub fn s(&self) -> Vec<usize> {
        self.blocks[1..]
            .iter()
            .zip(&self.jumps)
            .map(|(b, &j)| b.0 - j)
            .collect()
    }

    pub fn fixed_points(&self) -> PointSet {
        self.blocks.iter().flat_map(|&(a, b)| a..=b).collect()
    }
}

/// Type of the class containing `a`: fixed runs of its idempotent power and
/// the per-gap jump points of `a`.
pub fn type_of(a: &Endo) -> TypeDescriptor {
    let fixed = a.omega().idempotent.fixed_points();
    let blocks = runs(fixed);
    // gaps between blocks are exactly the non-consecutive fixed-point gaps
    let pts = fixed.to_vec();
    let jumps = pts
        .windows(2)
        .enumerate()
        .filter(|(_, w)| w[1] > w[0] + 1)
        .map(|(i, _)| gap_jump_point(a, i).expect("non-consecutive gap has a jump point"))
        .collect();
    TypeDescriptor {
        n: a.n(),
        blocks,
        jumps,
    }
}

/// The unique idempotent of a type: `k_{1,1}` below the first block, identity
/// on each block, and across each gap the lower block end before the jump and
/// the upper block start from the jump on; `k_{ℓ,m_ℓ}` above the last block.
pub fn idempotent_of_type(td: &TypeDescriptor) -> Result<Endo> {
    td.validate()?;
    let mut img = vec![0u8; td.n];
    let first = td.blocks[0].0;
    let last = td.blocks.last().unwrap().1;
    img[..first].fill(first as u8);
    img[last..].fill(last as u8);
    for &(a, b) in &td.blocks {
        for (x, slot) in img.iter_mut().enumerate().take(b + 1).skip(a) {
            *slot = x as u8;
        }
    }
    for (w, &j) in td.blocks.windows(2).zip(&td.jumps) {
        let (lo_end, hi_start) = (w[0].1, w[1].0);
        img[lo_end + 1..j].fill(lo_end as u8);
        img[j..hi_start].fill(hi_start as u8);
    }
    Ok(Endo::from_valid_bytes(&img))
}

/// Brute-force root class of `eps`: every map whose idempotent power is `eps`.
pub fn class_of(eps: &Endo) -> Result<Vec<Endo>> {
    class_of_capped(eps, DEFAULT_CAP)
}

pub fn class_of_capped(eps: &Endo, cap: usize) -> Result<Vec<Endo>> {
    if !eps.is_idempotent() {
        return Err(Error::NotIdempotent { endo: *eps });
    }
    Ok(all_endos_capped(eps.n(), cap)?
        .filter(|a| a.omega().idempotent == *eps)
        .collect())
}

/// Allowed image range for each point of a class: fixed on blocks, strictly
/// above the diagonal on `[0, k_{1,1})` and `[j_i, k_{i+1,1})`, strictly below
/// on `(k_{i,m_i}, j_i)` and `(k_{ℓ,m_ℓ}, n-1]`.
fn root_bounds(td: &TypeDescriptor) -> Vec<(usize, usize)> {
    let n = td.n;
    let mut bounds = vec![(0, 0); n];
    let first = td.blocks[0].0;
    let last = td.blocks.last().unwrap().1;
    for (x, slot) in bounds.iter_mut().enumerate().take(first) {
        *slot = (x + 1, first);
    }
    for &(a, b) in &td.blocks {
        for (x, slot) in bounds.iter_mut().enumerate().take(b + 1).skip(a) {
            *slot = (x, x);
        }
    }
    for (w, &j) in td.blocks.windows(2).zip(&td.jumps) {
        let (lo_end, hi_start) = (w[0].1, w[1].0);
        for (x, slot) in bounds.iter_mut().enumerate().take(j).skip(lo_end + 1) {
            *slot = (lo_end, x - 1);
        }
        for (x, slot) in bounds.iter_mut().enumerate().take(hi_start).skip(j) {
            *slot = (x + 1, hi_start);
        }
    }
    for (x, slot) in bounds.iter_mut().enumerate().skip(last + 1) {
        *slot = (last, x - 1);
    }
    bounds
}

/// Constructive class listing: all monotone maps that fix every block point
/// and sit strictly above or below the diagonal region by region.
pub fn class_members_constructive(td: &TypeDescriptor) -> Result<Vec<Endo>> {
    td.validate()?;
    let bounds = root_bounds(td);
    let mut out = Vec::new();
    let mut img = vec![0u8; td.n];
    fn fill(
        x: usize,
        floor: usize,
        bounds: &[(usize, usize)],
        img: &mut [u8],
        out: &mut Vec<Endo>,
    ) {
        if x == bounds.len() {
            out.push(Endo::from_valid_bytes(img));
            return;
        }
        let (lo, hi) = bounds[x];
        for v in lo.max(floor)..=hi {
            img[x] = v as u8;
            fill(x + 1, v, bounds, img, out);
        }
    }
    fill(0, 0, &bounds, &mut img, &mut out);
    Ok(out)
}

/// `C_{k_{1,1}} · ∏ C_{t_i - 1} C_{s_i} · C_{n-1-k_{ℓ,m_ℓ}}`: each maximal run of
/// non-fixed points contributes the Catalan number of its length.
pub fn class_order(td: &TypeDescriptor) -> Result<u128> {
    td.validate()?;
    let gaps: u128 = td
        .t()
        .into_iter()
        .zip(td.s())
        .map(|(t, s)| catalan(t - 1) * catalan(s))
        .product();
    Ok(catalan(td.below()) * gaps * catalan(td.above()))
}

/// The same product with `C_{t_i}` in place of `C_{t_i - 1}`. Disagrees with
/// the class size whenever some `t_i >= 2`; kept so reports can show it.
pub fn class_order_ct_variant(td: &TypeDescriptor) -> Result<u128> {
    td.validate()?;
    let gaps: u128 = td
        .t()
        .into_iter()
        .zip(td.s())
        .map(|(t, s)| catalan(t) * catalan(s))
        .product();
    Ok(catalan(td.below()) * gaps * catalan(td.above()))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClassReport {
    pub n: usize,
    pub idempotent: Endo,
    pub blocks: Vec<(usize, usize)>,
    pub jumps: Vec<usize>,
    pub order_formula: u128,
    pub order_ct_variant: u128,
    pub order_bruteforce: u128,
    pub members: Vec<Endo>,
    pub constructive_matches: bool,
    pub closure_ok: bool,
}

impl ClassReport {
    pub fn descriptor(&self) -> TypeDescriptor {
        TypeDescriptor {
            n: self.n,
            blocks: self.blocks.clone(),
            jumps: self.jumps.clone(),
        }
    }

    pub fn consistent(&self) -> bool {
        self.members.contains(&self.idempotent)
            && self.order_formula == self.order_bruteforce
            && self.constructive_matches
            && self.closure_ok
    }
}

fn closed(members: &[Endo]) -> bool {
    crate::idempotent::closure_violation(members).is_none()
}

/// Full report for the class of the idempotent `eps`, with brute-force
/// membership cross-checked against the constructive listing.
pub fn class_report(eps: &Endo, cap: usize) -> Result<ClassReport> {
    let members = class_of_capped(eps, cap)?;
    let td = type_of(eps);
    let constructive = class_members_constructive(&td)?;
    Ok(ClassReport {
        n: eps.n(),
        idempotent: *eps,
        order_formula: class_order(&td)?,
        order_ct_variant: class_order_ct_variant(&td)?,
        order_bruteforce: members.len() as u128,
        constructive_matches: constructive == members,
        closure_ok: closed(&members),
        blocks: td.blocks,
        jumps: td.jumps,
        members,
    })
}

/// Closure of a class under `+` and `·`, plus the region inequalities on
/// every sum and product.
pub fn class_semiring_check(td: &TypeDescriptor) -> Result<VerificationReport> {
    let members = class_members_constructive(td)?;
    let eps = idempotent_of_type(td)?;
    let bounds = root_bounds(td);
    let set: HashSet<Endo> = members.iter().copied().collect();
    let in_bounds = |e: &Endo| {
        e.images()
            .iter()
            .zip(&bounds)
            .all(|(&v, &(lo, hi))| (lo..=hi).contains(&(v as usize)))
    };
    let mut report = ReportBuilder::new(ClaimId::RootClassOrder, td.n, td.n);
    for a in &members {
        for b in &members {
            for (op, r) in [("+", a.join_unchecked(b)), ("·", a.compose_unchecked(b))] {
                report.check(set.contains(&r) && in_bounds(&r), || {
                    Witness::new([a, b], format!("{op} stays in class of {eps}"), r)
                });
            }
        }
    }
    Ok(report.finish())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MixedProduct {
    pub left: Endo,
    pub right: Endo,
    pub product: Endo,
}

/// Pairs with the same fixed points but different jump points whose product
/// has strictly more fixed points than either factor.
pub fn mixed_type_product_probe(n: usize) -> Result<Vec<MixedProduct>> {
    let mut by_fixed: BTreeMap<PointSet, Vec<Endo>> = BTreeMap::new();
    for a in all_endos_capped(n, DEFAULT_CAP)? {
        by_fixed.entry(a.fixed_points()).or_default().push(a);
    }
    let mut out = Vec::new();
    for (fixed, group) in &by_fixed {
        for a in group {
            for b in group {
                if a.jump_points() == b.jump_points() {
                    continue;
                }
                let p = a.compose_unchecked(b);
                let pf = p.fixed_points();
                if fixed.is_subset(pf) && pf != *fixed {
                    out.push(MixedProduct {
                        left: *a,
                        right: *b,
                        product: p,
                    });
                }
            }
        }
    }
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct CongruenceWitness {
    pub alpha: Endo,
    pub beta: Endo,
    pub gamma: Endo,
}

impl CongruenceWitness {
    /// `(α·γ, β·γ)`.
    pub fn products(&self) -> (Endo, Endo) {
        (
            self.alpha.compose_unchecked(&self.gamma),
            self.beta.compose_unchecked(&self.gamma),
        )
    }

    /// `α ~ β` but `α·γ ≁ β·γ`.
    pub fn is_valid(&self) -> bool {
        let same = |x: &Endo, y: &Endo| equivalent(x, y).unwrap_or(false);
        let (Ok(ag), Ok(bg)) = (
            self.alpha.compose(&self.gamma),
            self.beta.compose(&self.gamma),
        ) else {
            return false;
        };
        same(&self.alpha, &self.beta) && !same(&ag, &bg)
    }
}

/// Exhaustive search on `C_n` for `α ~ β` with `α·γ ≁ β·γ`. Returns the first
/// witness in lexicographic order of `(γ, class, β)`, with `α` the least
/// member of its class.
pub fn congruence_counterexample(n: usize) -> Result<Option<CongruenceWitness>> {
    let classes = partition_by_omega_capped(n, DEFAULT_CAP)?;
    for gamma in all_endos_capped(n, DEFAULT_CAP)? {
        for members in classes.values() {
            let alpha = members[0];
            let target = alpha.compose_unchecked(&gamma).omega().idempotent;
            for beta in &members[1..] {
                if beta.compose_unchecked(&gamma).omega().idempotent != target {
                    return Ok(Some(CongruenceWitness {
                        alpha,
                        beta: *beta,
                        gamma,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Smallest `n` in `2..=max_n` admitting a witness.
pub fn smallest_congruence_counterexample(
    max_n: usize,
) -> Result<Option<(usize, CongruenceWitness)>> {
    for n in 2..=max_n {
        if let Some(w) = congruence_counterexample(n)? {
            return Ok(Some((n, w)));
        }
    }
    Ok(None)
}
