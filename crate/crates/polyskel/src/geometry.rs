//! Lattice points, hyperplanes, and exact point-on-system filtering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// A 0/1 point in d coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LatticePoint {
    coords: Vec<u8>,
}

impl LatticePoint {
    /// Builds a point from 0/1 entries.
    pub fn new(coords: Vec<u8>) -> LatticePoint {
        assert!(
            coords.iter().all(|&c| c <= 1),
            "lattice point entries must be 0 or 1"
        );
        LatticePoint { coords }
    }

    /// The indicator vector of `s` inside `{0, .., dim-1}`.
    pub fn indicator(dim: usize, s: Subset) -> LatticePoint {
        let coords = (0..dim).map(|i| u8::from(s.contains(i))).collect();
        LatticePoint { coords }
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coord(&self, i: usize) -> u8 {
        self.coords[i]
    }

    pub fn coords(&self) -> &[u8] {
        &self.coords
    }

    /// The support as a subset (requires `dim <= Subset::MAX_GROUND`).
    pub fn support(&self) -> Subset {
        let mut s = Subset::EMPTY;
        for (i, &c) in self.coords.iter().enumerate() {
            if c == 1 {
                s = s.insert(i);
            }
        }
        s
    }
}

impl std::fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

impl std::fmt::Debug for LatticePoint {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{self}")
    }
}

/// Constraint sense.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

impl Relation {
    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

/// An exact linear condition `a . x (=|<=|>=) b` on d coordinates.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperplane {
    coeffs: Vec<BigRational>,
    relation: Relation,
    bound: BigRational,
}

impl Hyperplane {
    /// A hyperplane or halfspace with the given coefficient row. The row
    /// must not be identically zero.
    pub fn new(coeffs: Vec<BigRational>, relation: Relation, bound: BigRational) -> Hyperplane {
        assert!(
            coeffs.iter().any(|c| !c.is_zero()),
            "support hyperplanes need a nonzero coefficient row"
        );
        Hyperplane {
            coeffs,
            relation,
            bound,
        }
    }

    /// Convenience constructor from integer data.
    pub fn from_ints(coeffs: &[i64], relation: Relation, bound: i64) -> Hyperplane {
        Hyperplane::new(
            coeffs
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
            relation,
            BigRational::from(BigInt::from(bound)),
        )
    }

    /// The equality `x_i = x_j` in `dim` coordinates.
    pub fn coords_equal(dim: usize, i: usize, j: usize) -> Hyperplane {
        let mut coeffs = vec![0i64; dim];
        coeffs[i] = 1;
        coeffs[j] = -1;
        Hyperplane::from_ints(&coeffs, Relation::Eq, 0)
    }

    /// The equality `x_i = value` in `dim` coordinates.
    pub fn coord_fixed(dim: usize, i: usize, value: i64) -> Hyperplane {
        let mut coeffs = vec![0i64; dim];
        coeffs[i] = 1;
        Hyperplane::from_ints(&coeffs, Relation::Eq, value)
    }

    /// The equality `sum_{i in s} x_i = value` in `dim` coordinates.
    pub fn subset_sum(dim: usize, s: Subset, relation: Relation, value: i64) -> Hyperplane {
        let mut coeffs = vec![0i64; dim];
        for i in s.iter() {
            coeffs[i] = 1;
        }
        Hyperplane::from_ints(&coeffs, relation, value)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn relation(&self) -> Relation {
        self.relation
    }

    pub fn bound(&self) -> &BigRational {
        &self.bound
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    /// Exact evaluation of the linear form at a lattice point.
    pub fn eval(&self, p: &LatticePoint) -> BigRational {
        assert_eq!(p.dim(), self.dim(), "dimension mismatch");
        let mut acc = BigRational::zero();
        for (c, &x) in self.coeffs.iter().zip(p.coords()) {
            if x == 1 {
                acc += c;
            }
        }
        acc
    }

    pub fn satisfied_by(&self, p: &LatticePoint) -> bool {
        let v = self.eval(p);
        match self.relation {
            Relation::Eq => v == self.bound,
            Relation::Le => v <= self.bound,
            Relation::Ge => v >= self.bound,
        }
    }
}

impl std::fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                if *c == BigRational::from(BigInt::from(-1)) {
                    write!(f, "-")?;
                } else if *c != BigRational::from(BigInt::from(1)) {
                    write!(f, "{c} ")?;
                }
                first = false;
            } else if *c == BigRational::from(BigInt::from(1)) {
                write!(f, " + ")?;
            } else if *c == BigRational::from(BigInt::from(-1)) {
                write!(f, " - ")?;
            } else if c > &BigRational::zero() {
                write!(f, " + {c} ")?;
            } else {
                write!(f, " - {} ", -c.clone())?;
            }
            write!(f, "x{}", i + 1)?;
        }
        write!(f, " {} {}", self.relation.symbol(), self.bound)
    }
}

/// Indices of the vertices satisfying every condition of `system` exactly.
///
/// An empty system keeps everything. Integer-coefficient systems (the
/// common case here) are evaluated over machine integers; anything else
/// falls back to full rational arithmetic. Both paths are exact.
pub fn vertices_on_system(vertices: &[LatticePoint], system: &[Hyperplane]) -> Vec<usize> {
    let int_rows: Option<Vec<(Vec<i64>, Relation, i64)>> = system
        .iter()
        .map(|h| {
            let coeffs: Option<Vec<i64>> = h
                .coeffs()
                .iter()
                .map(|c| {
                    if c.denom() == &BigInt::one() {
                        c.numer().to_i64()
                    } else {
                        None
                    }
                })
                .collect();
            let bound = if h.bound().denom() == &BigInt::one() {
                h.bound().numer().to_i64()
            } else {
                None
            };
            Some((coeffs?, h.relation(), bound?))
        })
        .collect();

    match int_rows {
        Some(rows) => vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| {
                rows.iter().all(|(coeffs, relation, bound)| {
                    let val: i64 = coeffs
                        .iter()
                        .zip(v.coords())
                        .filter(|(_, &x)| x == 1)
                        .map(|(c, _)| c)
                        .sum();
                    match relation {
                        Relation::Eq => val == *bound,
                        Relation::Le => val <= *bound,
                        Relation::Ge => val >= *bound,
                    }
                })
            })
            .map(|(i, _)| i)
            .collect(),
        None => vertices
            .iter()
            .enumerate()
            .filter(|(_, v)| system.iter().all(|h| h.satisfied_by(v)))
            .map(|(i, _)| i)
            .collect(),
    }
}

/// Check that the 0/1 solutions of `system` within `{0,1}^dim` are exactly
/// the given vertex set; returns the first offending point otherwise.
pub fn zero_one_solutions_match(
    dim: usize,
    system: &[Hyperplane],
    vertices: &[LatticePoint],
) -> Result<Option<LatticePoint>> {
    if dim >= 26 {
        return Err(Error::GroundSetTooLarge { size: dim, max: 25 });
    }
    let vertex_set: std::collections::HashSet<&LatticePoint> = vertices.iter().collect();
    for bits in 0..(1u128 << dim) {
        let p = LatticePoint::indicator(dim, Subset::from_bits(bits));
        let satisfies = system.iter().all(|h| h.satisfied_by(&p));
        if satisfies != vertex_set.contains(&p) {
            return Ok(Some(p));
        }
    }
    Ok(None)
}
