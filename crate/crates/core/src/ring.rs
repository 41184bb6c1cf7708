//! Finite rings given by addition and multiplication tables.

use alloc::format;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Axiom, Result};
use crate::group::flatten_table;

/// Size bounds applied by validation and ideal enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest ring order accepted by validation.
    pub max_order: usize,
    /// Largest ring order for which ideal lattices are enumerated.
    pub max_enum_order: usize,
    /// Largest number of ideals an enumeration may produce.
    pub max_ideals: usize,
}

impl Limits {
    pub const DEFAULT_MAX_ORDER: usize = 4096;
    pub const DEFAULT_MAX_ENUM_ORDER: usize = 256;
    pub const DEFAULT_MAX_IDEALS: usize = 1 << 16;

    /// Same cap for validation and enumeration.
    pub fn with_max_order(order: usize) -> Self {
        Self {
            max_order: order,
            max_enum_order: order,
            ..Self::default()
        }
    }
}

impl Default for Limits {
    fn default() -> Self {
        Self {
            max_order: Self::DEFAULT_MAX_ORDER,
            max_enum_order: Self::DEFAULT_MAX_ENUM_ORDER,
            max_ideals: Self::DEFAULT_MAX_IDEALS,
        }
    }
}

/// A validated finite ring, possibly non-unital and non-commutative.
/// Element 0 is the additive identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteRing {
    order: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
    unity: Option<usize>,
}

impl FiniteRing {
    pub fn new(add: &[Vec<usize>], mul: &[Vec<usize>], unity: Option<usize>) -> Result<Self> {
        Self::with_cap(add, mul, unity, Limits::DEFAULT_MAX_ORDER)
    }

    pub fn with_cap(
        add: &[Vec<usize>],
        mul: &[Vec<usize>],
        unity: Option<usize>,
        max_order: usize,
    ) -> Result<Self> {
        if add.len() > max_order {
            return Err(AlgebraError::CapExceeded {
                order: add.len(),
                cap: max_order,
            });
        }
        let (n, add) = flatten_table(add, "add")?;
        let (n_mul, mul) = flatten_table(mul, "mul")?;
        if n_mul != n {
            return Err(AlgebraError::Domain(format!(
                "add table has order {n} but mul table has order {n_mul}"
            )));
        }
        Self::from_flat(n, add, mul, unity)
    }

    /// Builds the tables from closures over element indices, then validates.
    pub fn from_fn(
        order: usize,
        add: impl Fn(usize, usize) -> usize,
        mul: impl Fn(usize, usize) -> usize,
        unity: Option<usize>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(AlgebraError::Domain("ring order must be positive".into()));
        }
        if order > Limits::DEFAULT_MAX_ORDER {
            return Err(AlgebraError::CapExceeded {
                order,
                cap: Limits::DEFAULT_MAX_ORDER,
            });
        }
        let mut a = Vec::with_capacity(order * order);
        let mut m = Vec::with_capacity(order * order);
        for x in 0..order {
            for y in 0..order {
                let (s, p) = (add(x, y), mul(x, y));
                if s >= order || p >= order {
                    return Err(AlgebraError::Domain(format!(
                        "table entry at ({x}, {y}) is out of range [0, {order})"
                    )));
                }
                a.push(s as u32);
                m.push(p as u32);
            }
        }
        Self::from_flat(order, a, m, unity)
    }

    fn from_flat(n: usize, add: Vec<u32>, mul: Vec<u32>, unity: Option<usize>) -> Result<Self> {
        if let Some(u) = unity {
            if u >= n {
                return Err(AlgebraError::Domain(format!(
                    "unity {u} is out of range [0, {n})"
                )));
            }
        }
        let mut ring = Self {
            order: n,
            add,
            mul,
            neg: Vec::new(),
            unity,
        };
        ring.check_additive_group()?;
        ring.neg = (0..n)
            .map(|a| (0..n).find(|&b| ring.add(a, b) == 0).unwrap() as u32)
            .collect();
        ring.check_multiplication()?;
        Ok(ring)
    }

    /// Identity, associativity, commutativity and inverses of addition.
    ///
    /// Associativity uses Light's test over an additive generating set and
    /// commutativity only needs generators once addition is associative.
    /// When a fast check fails, an exhaustive scan finds the smallest witness.
    fn check_additive_group(&self) -> Result<()> {
        let n = self.order;
        for a in 0..n {
            if self.add(0, a) != a || self.add(a, 0) != a {
                return Err(AlgebraError::violation(Axiom::AdditiveIdentity, &[a]));
            }
        }
        let gens = self.additive_generators();
        let light = gens.iter().all(|&g| {
            (0..n).all(|x| {
                let xg = self.add(x, g);
                (0..n).all(|y| self.add(xg, y) == self.add(x, self.add(g, y)))
            })
        });
        if !light {
            return Err(
                self.smallest_triple(Axiom::AdditiveAssociativity, |a, b, c| {
                    self.add(self.add(a, b), c) == self.add(a, self.add(b, c))
                }),
            );
        }
        let commutes = gens
            .iter()
            .all(|&g| (0..n).all(|a| self.add(a, g) == self.add(g, a)));
        if !commutes {
            for a in 0..n {
                for b in a + 1..n {
                    if self.add(a, b) != self.add(b, a) {
                        return Err(AlgebraError::violation(
                            Axiom::AdditiveCommutativity,
                            &[a, b],
                        ));
                    }
                }
            }
        }
        for a in 0..n {
            if !(0..n).any(|b| self.add(a, b) == 0) {
                return Err(AlgebraError::violation(Axiom::AdditiveInverse, &[a]));
            }
        }
        Ok(())
    }

    /// Greedy generating set: every element is a left-nested sum of generators.
    fn additive_generators(&self) -> Vec<usize> {
        let n = self.order;
        let mut reached = alloc::vec![false; n];
        reached[0] = true;
        let mut gens = Vec::new();
        for a in 0..n {
            if reached[a] {
                continue;
            }
            gens.push(a);
            let mut stack: Vec<usize> = (0..n).filter(|&x| reached[x]).collect();
            while let Some(x) = stack.pop() {
                for &g in &gens {
                    let y = self.add(x, g);
                    if !reached[y] {
                        reached[y] = true;
                        stack.push(y);
                    }
                }
            }
        }
        gens
    }

    fn smallest_triple(
        &self,
        axiom: Axiom,
        holds: impl Fn(usize, usize, usize) -> bool,
    ) -> AlgebraError {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !holds(a, b, c) {
                        return AlgebraError::violation(axiom, &[a, b, c]);
                    }
                }
            }
        }
        unreachable!("fast check failed but no exhaustive witness exists for {axiom}")
    }

    /// Distributivity with one argument restricted to additive generators,
    /// then associativity on generator triples (the associator is
    /// tri-additive once both distributive laws hold).
    fn check_multiplication(&self) -> Result<()> {
        let n = self.order;
        let gens = self.additive_generators();
        let left = |a: usize, b: usize, c: usize| {
            self.mul(a, self.add(b, c)) == self.add(self.mul(a, b), self.mul(a, c))
        };
        let right = |a: usize, b: usize, c: usize| {
            self.mul(self.add(a, b), c) == self.add(self.mul(a, c), self.mul(b, c))
        };
        let assoc = |a: usize, b: usize, c: usize| {
            self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c))
        };

        let gens_assoc = gens
            .iter()
            .all(|&a| gens.iter().all(|&b| gens.iter().all(|&c| assoc(a, b, c))));
        let left_ok = (0..n).all(|a| (0..n).all(|b| gens.iter().all(|&c| left(a, b, c))));
        let right_ok =
            left_ok && (0..n).all(|a| gens.iter().all(|&b| (0..n).all(|c| right(a, b, c))));
        if !(gens_assoc && left_ok && right_ok) {
            // Report in a fixed axiom order with exhaustive smallest witnesses.
            for (axiom, holds) in [
                (
                    Axiom::MulAssociativity,
                    &assoc as &dyn Fn(usize, usize, usize) -> bool,
                ),
                (Axiom::LeftDistributivity, &left),
                (Axiom::RightDistributivity, &right),
            ] {
                if let Some(w) = first_failure(n, holds) {
                    return Err(AlgebraError::violation(axiom, &w));
                }
            }
        }
        if let Some(u) = self.unity {
            for x in 0..n {
                if self.mul(u, x) != x || self.mul(x, u) != x {
                    return Err(AlgebraError::violation(Axiom::Unity, &[x]));
                }
            }
        }
        Ok(())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn unity(&self) -> Option<usize> {
        self.unity
    }

    pub fn is_unity_present(&self) -> bool {
        self.unity.is_some()
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.order + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b] as usize
    }

    /// Additive inverse. Not available while the additive group is still
    /// being validated.
    #[inline]
    pub fn neg(&self, a: usize) -> usize {
        self.neg[a] as usize
    }

    pub fn checked_add(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.add(a, b))
    }

    pub fn checked_mul(&self, a: usize, b: usize) -> Result<usize> {
        self.check_index(a)?;
        self.check_index(b)?;
        Ok(self.mul(a, b))
    }

    pub fn checked_neg(&self, a: usize) -> Result<usize> {
        self.check_index(a)?;
        Ok(self.neg(a))
    }

    fn check_index(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(AlgebraError::Domain(format!(
                "element {a} is out of range [0, {})",
                self.order
            )))
        }
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.order).all(|a| (a + 1..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `true` when every product is zero.
    pub fn has_zero_multiplication(&self) -> bool {
        self.mul.iter().all(|&v| v == 0)
    }

    pub fn add_rows(&self) -> Vec<Vec<usize>> {
        rows(&self.add, self.order)
    }

    pub fn mul_rows(&self) -> Vec<Vec<usize>> {
        rows(&self.mul, self.order)
    }
}

fn first_failure(n: usize, holds: &dyn Fn(usize, usize, usize) -> bool) -> Option<[usize; 3]> {
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if !holds(a, b, c) {
                    return Some([a, b, c]);
                }
            }
        }
    }
    None
}

fn rows(flat: &[u32], n: usize) -> Vec<Vec<usize>> {
    flat.chunks(n)
        .map(|r| r.iter().map(|&v| v as usize).collect())
        .collect()
}
