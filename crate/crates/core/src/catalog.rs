//! Built-in graded rings.
//!
//! Element encodings are stable:
//!
//! * `example2`: `0, x, y, z` are `0, 1, 2, 3`.
//! * `matrix-z2`: `0, A, B, C` are `0, 1, 2, 3` with `A = [[1,1],[0,0]]`,
//!   `B = [[0,0],[1,1]]`, `C = [[1,1],[1,1]]` over ℤ₂.
//! * `gaussian-mod n`: `a + bi` is `a + n·b`.
//! * `upper-tri p`: `[[a,b],[0,c]]` is `b + p·a + p²·c`.
//! * `square-zero k`: a vector in (ℤ₂)ᵏ is its bitmask.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{AlgebraError, Result};
use crate::grading::GradedRing;
use crate::group::FiniteGroup;
use crate::ring::FiniteRing;
use crate::set::ElementSet;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Meaning and accepted range of the parameter, `None` if the entry takes none.
    pub parameter: Option<&'static str>,
    pub description: &'static str,
}

pub const ENTRIES: &[CatalogEntry] = &[
    CatalogEntry {
        name: "example2",
        parameter: None,
        description: "non-unital ring {0,x,y,z} of order 4, ℤ₃-graded by S0={0,x}, S1={0,z}, S2={0}",
    },
    CatalogEntry {
        name: "matrix-z2",
        parameter: None,
        description: "subring {0,A,B,C} of M2(ℤ₂), ℤ₃-graded by S0={0,A}, S1={0,C}, S2={0}",
    },
    CatalogEntry {
        name: "gaussian-mod",
        parameter: Some("modulus n, 1 <= n <= 64"),
        description: "ℤₙ[i] with i² = -1, ℤ₂-graded by S0=ℤₙ, S1=iℤₙ",
    },
    CatalogEntry {
        name: "upper-tri",
        parameter: Some("prime p <= 7"),
        description: "upper-triangular 2x2 matrices over ℤₚ, ℤ₄-graded by diagonal (0) and strictly upper (2)",
    },
    CatalogEntry {
        name: "square-zero",
        parameter: Some("dimension k, 1 <= k <= 4"),
        description: "(ℤ₂)ᵏ with all products zero, ℤ₂-graded by S0=span(e1), S1=span(e2..ek)",
    },
];

/// Builds a catalog ring by name.
pub fn build(name: &str, param: Option<i64>) -> Result<GradedRing> {
    let entry = ENTRIES
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| AlgebraError::UnknownEntry(name.into()))?;
    let p = match (entry.parameter, param) {
        (None, None) => 0,
        (None, Some(v)) => {
            return Err(AlgebraError::ParamOutOfRange {
                param: v,
                reason: "entry takes no parameter",
            })
        }
        (Some(_), None) => {
            return Err(AlgebraError::Domain(format!(
                "catalog entry `{name}` needs a parameter"
            )))
        }
        (Some(_), Some(v)) => v,
    };
    match name {
        "example2" => Ok(example2()),
        "matrix-z2" => Ok(matrix_z2()),
        "gaussian-mod" => gaussian_mod(p),
        "upper-tri" => upper_tri(p),
        "square-zero" => square_zero(p),
        _ => unreachable!("entry table and builder disagree"),
    }
}

/// Canonical name of a built entry, e.g. `gaussian-mod-12`.
pub fn instance_name(name: &str, param: Option<i64>) -> String {
    match param {
        Some(p) => format!("{name}-{p}"),
        None => name.into(),
    }
}

/// The rings used by `--corpus` audits.
pub fn default_corpus() -> Vec<(String, GradedRing)> {
    let mut out = vec![
        ("example2".into(), example2()),
        ("matrix-z2".into(), matrix_z2()),
    ];
    for n in [2, 3, 4, 5, 6, 8, 9, 12] {
        out.push((
            instance_name("gaussian-mod", Some(n)),
            gaussian_mod(n).unwrap(),
        ));
    }
    for p in [2, 3] {
        out.push((instance_name("upper-tri", Some(p)), upper_tri(p).unwrap()));
    }
    for k in 1..=4 {
        out.push((
            instance_name("square-zero", Some(k)),
            square_zero(k).unwrap(),
        ));
    }
    out
}

fn klein_add(a: usize, b: usize) -> usize {
    a ^ b
}

fn set(n: usize, items: &[usize]) -> ElementSet {
    ElementSet::from_indices(n, items.iter().copied())
}

pub fn example2() -> GradedRing {
    // Rows: 0, x, y, z.  r·0 = r·z = 0 and r·x = r·y = r.
    let mul = |a: usize, b: usize| if b == 1 || b == 2 { a } else { 0 };
    let ring = FiniteRing::from_fn(4, klein_add, mul, None).expect("example2 tables are a ring");
    GradedRing::new(
        ring,
        FiniteGroup::cyclic(3),
        vec![set(4, &[0, 1]), set(4, &[0, 3]), set(4, &[0])],
    )
    .expect("example2 grading is valid")
}

type Mat2 = [[u8; 2]; 2];

fn mat_mul_z2(a: &Mat2, b: &Mat2) -> Mat2 {
    let mut c = [[0u8; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            c[i][j] = (a[i][0] * b[0][j] + a[i][1] * b[1][j]) % 2;
        }
    }
    c
}

pub fn matrix_z2() -> GradedRing {
    let elems: [Mat2; 4] = [
        [[0, 0], [0, 0]],
        [[1, 1], [0, 0]],
        [[0, 0], [1, 1]],
        [[1, 1], [1, 1]],
    ];
    let index = |m: Mat2| {
        elems
            .iter()
            .position(|e| *e == m)
            .expect("subring is closed")
    };
    let add = |a: usize, b: usize| {
        let (x, y) = (elems[a], elems[b]);
        let mut s = [[0u8; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                s[i][j] = (x[i][j] + y[i][j]) % 2;
            }
        }
        index(s)
    };
    let mul = |a: usize, b: usize| index(mat_mul_z2(&elems[a], &elems[b]));
    let ring = FiniteRing::from_fn(4, add, mul, None).expect("matrix-z2 is a ring");
    GradedRing::new(
        ring,
        FiniteGroup::cyclic(3),
        vec![set(4, &[0, 1]), set(4, &[0, 3]), set(4, &[0])],
    )
    .expect("matrix-z2 grading is valid")
}

pub fn gaussian_mod(n: i64) -> Result<GradedRing> {
    if !(1..=64).contains(&n) {
        return Err(AlgebraError::ParamOutOfRange {
            param: n,
            reason: "modulus must lie in 1..=64",
        });
    }
    let n = n as usize;
    let split = |x: usize| (x % n, x / n);
    let enc = |a: usize, b: usize| a % n + n * (b % n);
    let add = |x: usize, y: usize| {
        let ((a, b), (c, d)) = (split(x), split(y));
        enc(a + c, b + d)
    };
    let mul = |x: usize, y: usize| {
        let ((a, b), (c, d)) = (split(x), split(y));
        // (a + bi)(c + di) = (ac - bd) + (ad + bc)i
        enc(a * c + n * n - (b * d) % (n * n), a * d + b * c)
    };
    let unity = if n == 1 { 0 } else { 1 };
    let ring = FiniteRing::from_fn(n * n, add, mul, Some(unity))?;
    let real = ElementSet::from_indices(n * n, (0..n).map(|a| enc(a, 0)));
    let imag = ElementSet::from_indices(n * n, (0..n).map(|b| enc(0, b)));
    GradedRing::new(ring, FiniteGroup::cyclic(2), vec![real, imag])
}

fn is_prime(p: i64) -> bool {
    p >= 2 && (2..p).all(|d| p % d != 0)
}

pub fn upper_tri(p: i64) -> Result<GradedRing> {
    if !is_prime(p) || p > 7 {
        return Err(AlgebraError::ParamOutOfRange {
            param: p,
            reason: "p must be a prime at most 7",
        });
    }
    let p = p as usize;
    let split = |x: usize| (x / p % p, x % p, x / (p * p));
    let enc = |a: usize, b: usize, c: usize| b % p + p * (a % p) + p * p * (c % p);
    let add = |x: usize, y: usize| {
        let ((a, b, c), (d, e, f)) = (split(x), split(y));
        enc(a + d, b + e, c + f)
    };
    let mul = |x: usize, y: usize| {
        let ((a, b, c), (d, e, f)) = (split(x), split(y));
        // [[a,b],[0,c]]·[[d,e],[0,f]] = [[ad, ae+bf],[0, cf]]
        enc(a * d, a * e + b * f, c * f)
    };
    let order = p * p * p;
    let ring = FiniteRing::from_fn(order, add, mul, Some(enc(1, 0, 1)))?;
    let diagonal = ElementSet::from_indices(
        order,
        (0..p)
            .flat_map(|a| (0..p).map(move |c| (a, c)))
            .map(|(a, c)| enc(a, 0, c)),
    );
    let upper = ElementSet::from_indices(order, (0..p).map(|b| enc(0, b, 0)));
    let zero = ElementSet::zero(order);
    GradedRing::new(
        ring,
        FiniteGroup::cyclic(4),
        vec![diagonal, zero.clone(), upper, zero],
    )
}

pub fn square_zero(k: i64) -> Result<GradedRing> {
    if !(1..=4).contains(&k) {
        return Err(AlgebraError::ParamOutOfRange {
            param: k,
            reason: "dimension must lie in 1..=4",
        });
    }
    let order = 1usize << k;
    let ring = FiniteRing::from_fn(order, klein_add, |_, _| 0, None)?;
    let low = set(order, &[0, 1]);
    let high = ElementSet::from_indices(order, (0..order).filter(|v| v & 1 == 0));
    GradedRing::new(ring, FiniteGroup::cyclic(2), vec![low, high])
}
