//! Closures, products, colon ideals and enumeration of graded ideals.
//!
//! Rings are not assumed to be unital, so the ideal generated by a set
//! always includes the additive span of its generators.

use alloc::collections::{BTreeSet, VecDeque};
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::grading::GradedRing;
use crate::ring::Limits;
use crate::set::ElementSet;

/// How `⟨x⟩` is read when a two-sided principal ideal is formed in a unital ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Reading {
    /// Additive closure of `xR`.
    XrOnly,
    /// Additive closure of `RxR`.
    Rxr,
}

impl Reading {
    pub const BOTH: [Reading; 2] = [Reading::XrOnly, Reading::Rxr];

    pub fn name(self) -> &'static str {
        match self {
            Reading::XrOnly => "xr",
            Reading::Rxr => "rxr",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    Right,
    TwoSided,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct IdealFlags {
    pub is_additive_subgroup: bool,
    pub is_right_ideal: bool,
    pub is_twosided: bool,
    pub is_graded: bool,
    pub is_proper: bool,
    pub is_idempotent: bool,
}

/// Smallest additive subgroup containing `s`.
pub fn additive_closure(gr: &GradedRing, s: &ElementSet) -> ElementSet {
    let r = gr.ring();
    let mut h = ElementSet::zero(gr.order());
    let mut members = vec_of(&h);
    for g in s {
        if h.contains(g) {
            continue;
        }
        // H + ⟨g⟩ is the union of the cosets H + kg.
        let base = members.clone();
        let mut c = g;
        while !h.contains(c) {
            for &b in &base {
                let v = r.add(b, c);
                if h.insert(v) {
                    members.push(v);
                }
            }
            c = r.add(c, g);
        }
    }
    h
}

fn vec_of(s: &ElementSet) -> Vec<usize> {
    s.iter().collect()
}

/// Closes `s ∪ {0}` under multiplication by ring elements on the given side(s).
fn multiplicative_closure(gr: &GradedRing, s: &ElementSet, side: Side) -> ElementSet {
    let r = gr.ring();
    let n = gr.order();
    let mut m = s.clone();
    m.insert(0);
    let mut queue: VecDeque<usize> = m.iter().collect();
    while let Some(a) = queue.pop_front() {
        for x in 0..n {
            if m.insert(r.mul(a, x)) {
                queue.push_back(r.mul(a, x));
            }
            if side == Side::TwoSided && m.insert(r.mul(x, a)) {
                queue.push_back(r.mul(x, a));
            }
        }
    }
    m
}

/// Smallest right ideal containing `s`.
pub fn right_ideal_closure(gr: &GradedRing, s: &ElementSet) -> ElementSet {
    additive_closure(gr, &multiplicative_closure(gr, s, Side::Right))
}

/// Smallest two-sided ideal containing `s`.
pub fn twosided_ideal_closure(gr: &GradedRing, s: &ElementSet) -> ElementSet {
    additive_closure(gr, &multiplicative_closure(gr, s, Side::TwoSided))
}

fn graded_ideal_closure(gr: &GradedRing, s: &ElementSet, side: Side) -> ElementSet {
    let close = |t: &ElementSet| match side {
        Side::Right => right_ideal_closure(gr, t),
        Side::TwoSided => twosided_ideal_closure(gr, t),
    };
    let mut t = close(s);
    loop {
        let mut extended = t.clone();
        for x in &t {
            for c in gr.decompose(x) {
                extended.insert(c);
            }
        }
        if extended == t {
            return t;
        }
        t = close(&extended);
    }
}

/// Smallest graded right ideal containing `s`.
pub fn graded_right_ideal_closure(gr: &GradedRing, s: &ElementSet) -> ElementSet {
    graded_ideal_closure(gr, s, Side::Right)
}

/// Smallest graded two-sided ideal containing `s`.
pub fn graded_twosided_ideal_closure(gr: &GradedRing, s: &ElementSet) -> ElementSet {
    graded_ideal_closure(gr, s, Side::TwoSided)
}

/// `ℤa + aR`.
pub fn principal_right(gr: &GradedRing, a: usize) -> ElementSet {
    right_ideal_closure(gr, &ElementSet::from_indices(gr.order(), [a]))
}

/// `⟨a⟩` under the given reading. Requires a unity.
pub fn principal_twosided(gr: &GradedRing, a: usize, reading: Reading) -> Result<ElementSet> {
    if !gr.is_unital() {
        return Err(AlgebraError::NoUnity);
    }
    let r = gr.ring();
    let n = gr.order();
    let ar = ElementSet::from_indices(n, (0..n).map(|x| r.mul(a, x)));
    let gens = match reading {
        Reading::XrOnly => ar,
        Reading::Rxr => {
            ElementSet::from_indices(n, (0..n).flat_map(|x| ar.iter().map(move |y| r.mul(x, y))))
        }
    };
    Ok(additive_closure(gr, &gens))
}

/// `XY`: the additive closure of all products `ab`, `a ∈ X`, `b ∈ Y`.
pub fn product(gr: &GradedRing, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let r = gr.ring();
    let ys = vec_of(y);
    let mut gens = ElementSet::empty(gr.order());
    for a in x {
        for &b in &ys {
            gens.insert(r.mul(a, b));
        }
    }
    additive_closure(gr, &gens)
}

/// `P^k`, associated to the left. Panics when `k == 0`.
pub fn power(gr: &GradedRing, p: &ElementSet, k: usize) -> ElementSet {
    assert!(k >= 1, "ideal powers start at 1");
    let mut acc = p.clone();
    for _ in 1..k {
        acc = product(gr, &acc, p);
    }
    acc
}

/// `(P:K) = {x : Kx ⊆ P}`.
pub fn colon_right(gr: &GradedRing, p: &ElementSet, k: &ElementSet) -> ElementSet {
    let r = gr.ring();
    let ks = vec_of(k);
    ElementSet::from_indices(
        gr.order(),
        (0..gr.order()).filter(|&x| ks.iter().all(|&a| p.contains(r.mul(a, x)))),
    )
}

/// `(P:*K) = {x : xK ⊆ P}`.
pub fn colon_left(gr: &GradedRing, p: &ElementSet, k: &ElementSet) -> ElementSet {
    let r = gr.ring();
    let ks = vec_of(k);
    ElementSet::from_indices(
        gr.order(),
        (0..gr.order()).filter(|&x| ks.iter().all(|&a| p.contains(r.mul(x, a)))),
    )
}

pub fn is_additive_subgroup(gr: &GradedRing, s: &ElementSet) -> bool {
    let r = gr.ring();
    s.contains(0) && s.iter().all(|a| s.iter().all(|b| s.contains(r.add(a, b))))
}

fn absorbs_right(gr: &GradedRing, s: &ElementSet) -> bool {
    let r = gr.ring();
    s.iter()
        .all(|a| (0..gr.order()).all(|x| s.contains(r.mul(a, x))))
}

fn absorbs_left(gr: &GradedRing, s: &ElementSet) -> bool {
    let r = gr.ring();
    s.iter()
        .all(|a| (0..gr.order()).all(|x| s.contains(r.mul(x, a))))
}

pub fn is_right_ideal(gr: &GradedRing, s: &ElementSet) -> bool {
    is_additive_subgroup(gr, s) && absorbs_right(gr, s)
}

pub fn is_twosided_ideal(gr: &GradedRing, s: &ElementSet) -> bool {
    is_right_ideal(gr, s) && absorbs_left(gr, s)
}

/// Every member's homogeneous components are members.
pub fn is_graded(gr: &GradedRing, s: &ElementSet) -> bool {
    s.iter()
        .all(|x| gr.decompose(x).into_iter().all(|c| s.contains(c)))
}

pub fn is_graded_right_ideal(gr: &GradedRing, s: &ElementSet) -> bool {
    is_right_ideal(gr, s) && is_graded(gr, s)
}

pub fn is_graded_twosided_ideal(gr: &GradedRing, s: &ElementSet) -> bool {
    is_twosided_ideal(gr, s) && is_graded(gr, s)
}

pub fn classify_subset(gr: &GradedRing, s: &ElementSet) -> IdealFlags {
    let is_additive_subgroup = is_additive_subgroup(gr, s);
    let is_right_ideal = is_additive_subgroup && absorbs_right(gr, s);
    IdealFlags {
        is_additive_subgroup,
        is_right_ideal,
        is_twosided: is_right_ideal && absorbs_left(gr, s),
        is_graded: is_graded(gr, s),
        is_proper: !s.is_full(),
        is_idempotent: product(gr, s, s) == *s,
    }
}

/// All graded right ideals, including `R`, in ascending bit-vector order.
pub fn enumerate_graded_right_ideals(gr: &GradedRing, limits: &Limits) -> Result<Vec<ElementSet>> {
    let homogeneous = vec_of(gr.homogeneous_elements());
    saturate(gr, limits, &homogeneous, |s| {
        graded_ideal_closure(gr, s, Side::Right)
    })
}

/// All right ideals, graded or not, including `R`, in ascending bit-vector order.
pub fn enumerate_right_ideals(gr: &GradedRing, limits: &Limits) -> Result<Vec<ElementSet>> {
    let all: Vec<usize> = (0..gr.order()).collect();
    saturate(gr, limits, &all, |s| right_ideal_closure(gr, s))
}

/// All graded two-sided ideals, including `R`, in ascending bit-vector order.
pub fn enumerate_graded_twosided_ideals(
    gr: &GradedRing,
    limits: &Limits,
) -> Result<Vec<ElementSet>> {
    let homogeneous = vec_of(gr.homogeneous_elements());
    saturate(gr, limits, &homogeneous, |s| {
        graded_ideal_closure(gr, s, Side::TwoSided)
    })
}

/// Breadth-first saturation from `{0}`: every ideal is reached by adjoining
/// its elements from `adjoin` one at a time and closing.
fn saturate(
    gr: &GradedRing,
    limits: &Limits,
    adjoin: &[usize],
    close: impl Fn(&ElementSet) -> ElementSet,
) -> Result<Vec<ElementSet>> {
    let n = gr.order();
    if n > limits.max_enum_order {
        return Err(AlgebraError::CapExceeded {
            order: n,
            cap: limits.max_enum_order,
        });
    }
    let start = ElementSet::zero(n);
    let mut seen = BTreeSet::new();
    seen.insert(start.clone());
    let mut frontier = VecDeque::from([start]);
    while let Some(ideal) = frontier.pop_front() {
        for &h in adjoin {
            if ideal.contains(h) {
                continue;
            }
            let mut grown = ideal.clone();
            grown.insert(h);
            let next = close(&grown);
            if !seen.contains(&next) {
                if seen.len() >= limits.max_ideals {
                    return Err(AlgebraError::CapExceeded {
                        order: seen.len() + 1,
                        cap: limits.max_ideals,
                    });
                }
                seen.insert(next.clone());
                frontier.push_back(next);
            }
        }
    }
    Ok(seen.into_iter().collect())
}
