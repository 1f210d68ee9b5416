//! Reality, strong reality and two-involution factorizations.
//!
//! `x` is real when some `t` satisfies `t^-1 x t = x^-1`, and strongly real
//! when such a `t` can be chosen with `t^2 = e`. For `|x| > 2` this is the same
//! as writing `x` as a product of two involutions: if `t` inverts `x` then
//! `t` and `tx` are involutions with `x = t * tx`; conversely `x = st` gives
//! `x^t = ts = x^-1`.
//!
//! All searches scan candidates in canonical element order, so witnesses do
//! not depend on thread count or scheduling.

use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::groups::{Group, GroupElement, GroupError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JordanPair {
    /// Part of order prime to `p`.
    pub semisimple: GroupElement,
    /// Part of `p`-power order.
    pub unipotent: GroupElement,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessKind {
    Real,
    StronglyReal,
    Factorization,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub t: GroupElement,
    /// First factor of a factorization `x = s t`.
    pub s: Option<GroupElement>,
}

fn is_involution_or_identity(x: &GroupElement) -> bool {
    x.mul(x).is_identity()
}

impl Witness {
    /// Re-checks the defining equation against `x`.
    pub fn verify(&self, x: &GroupElement) -> bool {
        match self.kind {
            WitnessKind::Real => x.conjugate_by(&self.t) == x.inverse(),
            WitnessKind::StronglyReal => {
                is_involution_or_identity(&self.t) && x.conjugate_by(&self.t) == x.inverse()
            }
            WitnessKind::Factorization => match &self.s {
                Some(s) => {
                    is_involution_or_identity(s)
                        && is_involution_or_identity(&self.t)
                        && s.mul(&self.t) == *x
                }
                None => false,
            },
        }
    }
}

/// Splits `x` as `x = su = us` with `s = x^m`, `u = x^j` chosen by the
/// Chinese remainder theorem on `|x| = p^a m'`.
pub fn jordan_decomposition(group: &Group, x: &GroupElement, p: u64) -> Result<JordanPair, GroupError> {
    let n = group.order_of(x)? as u64;
    let mut p_part = 1u64;
    let mut rest = n;
    while rest % p == 0 {
        rest /= p;
        p_part *= p;
    }
    // m ≡ 0 (mod p^a), m ≡ 1 (mod m'); j ≡ 1 (mod p^a), j ≡ 0 (mod m')
    let m = (0..n.max(1)).find(|&m| m % p_part == 0 && m % rest == 1 % rest).unwrap_or(0);
    let j = (0..n.max(1)).find(|&j| j % p_part == 1 % p_part && j % rest == 0).unwrap_or(0);
    Ok(JordanPair { semisimple: x.pow(m), unipotent: x.pow(j) })
}

/// Special witness for `|x| <= 2`: `e` for the identity, `x` for an involution.
fn small_order_witness(x: &GroupElement, kind: WitnessKind) -> Option<Witness> {
    is_involution_or_identity(x).then(|| Witness { kind, t: x.clone(), s: None })
}

/// First `t` in canonical order with `x^t = x^-1`.
pub fn is_real(group: &Group, x: &GroupElement) -> Result<Option<Witness>, GroupError> {
    group.require(x)?;
    if let Some(w) = small_order_witness(x, WitnessKind::Real) {
        return Ok(Some(w));
    }
    let x_inv = x.inverse();
    // x t = t x^-1  <=>  t^-1 x t = x^-1
    Ok(group
        .canonical_order()
        .iter()
        .map(|&i| group.element(i as usize))
        .find(|t| x.mul(t) == t.mul(&x_inv))
        .map(|t| Witness { kind: WitnessKind::Real, t: t.clone(), s: None }))
}

/// Elements with `t^2 = e` (identity included), in canonical order.
fn involutions_with_identity(group: &Group) -> impl Iterator<Item = &GroupElement> {
    let id = group.identity();
    let invs = group.involution_indices();
    // the identity is placed at its canonical position
    let split = invs.partition_point(|&i| group.element(i as usize) < id);
    invs[..split]
        .iter()
        .map(|&i| group.element(i as usize))
        .chain(std::iter::once(id))
        .chain(invs[split..].iter().map(|&i| group.element(i as usize)))
}

/// First `t` with `t^2 = e` and `x^t = x^-1`, in canonical order.
pub fn is_strongly_real(group: &Group, x: &GroupElement) -> Result<Option<Witness>, GroupError> {
    group.require(x)?;
    if let Some(w) = small_order_witness(x, WitnessKind::StronglyReal) {
        return Ok(Some(w));
    }
    let x_inv = x.inverse();
    Ok(involutions_with_identity(group)
        .find(|t| x.mul(t) == t.mul(&x_inv))
        .map(|t| Witness { kind: WitnessKind::StronglyReal, t: t.clone(), s: None }))
}

/// `x = s t` with `s`, `t` involutions or the identity.
///
/// For `|x| > 2` the pair is `(t, t x)` for the strong-reality witness `t`.
/// An involution `x` is first matched with a commuting involution `s != x`
/// (giving `x = s * sx`), then with any pair of involutions, and finally
/// written as `x * e`.
pub fn two_involution_factorization(
    group: &Group,
    x: &GroupElement,
) -> Result<Option<(GroupElement, GroupElement)>, GroupError> {
    group.require(x)?;
    if x.is_identity() {
        return Ok(Some((x.clone(), x.clone())));
    }
    if is_involution_or_identity(x) {
        let invs = group.involution_indices();
        let partner = invs
            .iter()
            .map(|&i| group.element(i as usize))
            .find(|s| *s != x && s.commutes_with(x));
        if let Some(s) = partner {
            return Ok(Some((s.clone(), s.mul(x))));
        }
        let pair = invs.iter().map(|&i| group.element(i as usize)).find_map(|s| {
            let t = s.mul(x);
            (!t.is_identity() && is_involution_or_identity(&t)).then(|| (s.clone(), t))
        });
        return Ok(Some(pair.unwrap_or_else(|| (x.clone(), group.identity().clone()))));
    }
    Ok(is_strongly_real(group, x)?.map(|w| {
        let tx = w.t.mul(x);
        (w.t, tx)
    }))
}

/// Verdict for one conjugacy class.
#[derive(Debug, Clone)]
pub struct ClassRecord {
    pub representative: GroupElement,
    pub rep_order: u32,
    pub class_size: usize,
    pub real: bool,
    pub strongly_real: bool,
    /// Inverting involution if strongly real, else an inverting element if real.
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone)]
pub struct RealityReport {
    pub group_name: String,
    pub order: usize,
    pub classes: Vec<ClassRecord>,
    pub strongly_real: bool,
    pub elapsed: Duration,
}

impl RealityReport {
    pub fn failing_classes(&self) -> impl Iterator<Item = &ClassRecord> {
        self.classes.iter().filter(|c| !c.strongly_real)
    }
}

fn class_record(group: &Group, class_index: usize) -> ClassRecord {
    let class = &group.conjugacy_classes()[class_index];
    let x = &class.representative;
    let strong = is_strongly_real(group, x).expect("representative is a member");
    let strongly_real = strong.is_some();
    let witness = match strong {
        Some(w) => Some(w),
        None => is_real(group, x).expect("member"),
    };
    ClassRecord {
        representative: x.clone(),
        rep_order: group.element_order(class.rep_index),
        class_size: class.size,
        real: witness.is_some(),
        strongly_real,
        witness,
    }
}

/// Decides strong reality class by class on `workers` threads. A class is
/// strongly real iff its representative is, since the property is invariant
/// under conjugation.
pub fn group_strong_reality(group: &Group, name: &str, workers: usize) -> RealityReport {
    let start = Instant::now();
    let n_classes = group.conjugacy_classes().len();
    // warm shared caches before fanning out
    group.involution_indices();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    let classes: Vec<ClassRecord> =
        pool.install(|| (0..n_classes).into_par_iter().map(|i| class_record(group, i)).collect());
    let strongly_real = classes.iter().all(|c| c.strongly_real);
    RealityReport {
        group_name: name.to_string(),
        order: group.order(),
        classes,
        strongly_real,
        elapsed: start.elapsed(),
    }
}
