//! Exact rational linear-programming feasibility.
//!
//! The solver is a dense phase-one simplex with Bland's anti-cycling rule.
//! Two arithmetic backends share the same pivoting logic: an integer
//! (fraction-free) tableau over `i128` with overflow-checked operations,
//! and an arbitrary-precision rational tableau the solver falls back to
//! when the integers would overflow. No floating point is involved in
//! any decision, and every feasible answer is re-checked by exact
//! substitution before it is returned.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::geometry::Relation;

pub type Rational = BigRational;

/// One row `coeffs . x (=|<=|>=) bound` over free variables.
#[derive(Clone, Debug)]
pub struct LinearConstraint {
    pub coeffs: Vec<Rational>,
    pub relation: Relation,
    pub bound: Rational,
}

impl LinearConstraint {
    pub fn from_ints(coeffs: &[i64], relation: Relation, bound: i64) -> LinearConstraint {
        LinearConstraint {
            coeffs: coeffs.iter().map(|&c| int(c)).collect(),
            relation,
            bound: int(bound),
        }
    }
}

/// A feasibility problem over `num_vars` free rational variables.
#[derive(Clone, Debug, Default)]
pub struct LpProblem {
    pub num_vars: usize,
    pub constraints: Vec<LinearConstraint>,
}

impl LpProblem {
    pub fn new(num_vars: usize) -> LpProblem {
        LpProblem {
            num_vars,
            constraints: Vec::new(),
        }
    }

    pub fn push(&mut self, c: LinearConstraint) {
        self.constraints.push(c);
    }

    fn validate(&self) -> Result<()> {
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != self.num_vars {
                return Err(Error::DimensionMismatch {
                    row,
                    got: c.coeffs.len(),
                    expected: self.num_vars,
                });
            }
        }
        Ok(())
    }

    /// Exact check that `x` satisfies every constraint.
    pub fn satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && self.constraints.iter().all(|c| {
                let v: Rational = c
                    .coeffs
                    .iter()
                    .zip(x)
                    .filter(|(a, _)| !a.is_zero())
                    .map(|(a, b)| a * b)
                    .sum();
                match c.relation {
                    Relation::Eq => v == c.bound,
                    Relation::Le => v <= c.bound,
                    Relation::Ge => v >= c.bound,
                }
            })
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Feasibility {
    /// A witness satisfying every constraint exactly.
    Feasible(Vec<Rational>),
    Infeasible,
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible(_))
    }
}

fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Decides feasibility of `prob` exactly.
pub fn lp_feasible(prob: &LpProblem) -> Result<Feasibility> {
    prob.validate()?;
    if prob.constraints.is_empty() {
        return Ok(Feasibility::Feasible(vec![Rational::zero(); prob.num_vars]));
    }
    let answer = match lp_feasible_int(prob) {
        Some(a) => a,
        None => lp_feasible_big(prob),
    };
    if let Feasibility::Feasible(w) = &answer {
        // Feasible answers ship only with a witness that substitutes exactly.
        assert!(prob.satisfied_by(w), "witness failed exact substitution");
    }
    Ok(answer)
}

/// A constraint row over machine integers, the form the face oracle emits.
#[derive(Clone, Debug)]
pub struct IntConstraint {
    pub coeffs: Vec<i64>,
    pub relation: Relation,
    pub bound: i64,
}

/// [`lp_feasible`] for integer rows, skipping the rational scaling layer.
/// Falls back to arbitrary precision on i128 overflow.
pub fn lp_feasible_ints(num_vars: usize, rows: &[IntConstraint]) -> Result<Feasibility> {
    for (row, c) in rows.iter().enumerate() {
        if c.coeffs.len() != num_vars {
            return Err(Error::DimensionMismatch {
                row,
                got: c.coeffs.len(),
                expected: num_vars,
            });
        }
    }
    if rows.is_empty() {
        return Ok(Feasibility::Feasible(vec![Rational::zero(); num_vars]));
    }

    let split = 2 * num_vars;
    let num_slacks = rows.iter().filter(|c| c.relation != Relation::Eq).count();
    let structural = split + num_slacks;
    let mut std_rows = Vec::with_capacity(rows.len());
    let mut slack_idx = 0usize;
    for c in rows {
        let negate = c.bound < 0;
        let mut entries = vec![0i128; structural];
        for (j, &a) in c.coeffs.iter().enumerate() {
            let v = if negate { -(a as i128) } else { a as i128 };
            entries[2 * j] = v;
            entries[2 * j + 1] = -v;
        }
        let b = if negate {
            -(c.bound as i128)
        } else {
            c.bound as i128
        };
        let relation = match (c.relation, negate) {
            (Relation::Eq, _) => Relation::Eq,
            (r, false) => r,
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
        };
        let needs_artificial = match relation {
            Relation::Eq => true,
            Relation::Le => {
                entries[split + slack_idx] = 1;
                slack_idx += 1;
                false
            }
            Relation::Ge => {
                entries[split + slack_idx] = -1;
                slack_idx += 1;
                true
            }
        };
        std_rows.push(StandardRow {
            entries,
            rhs: b,
            needs_artificial,
        });
    }

    let answer = match solve_standard_int(num_vars, structural, std_rows) {
        Some(a) => a,
        None => {
            let prob = LpProblem {
                num_vars,
                constraints: rows
                    .iter()
                    .map(|c| LinearConstraint::from_ints(&c.coeffs, c.relation, c.bound))
                    .collect(),
            };
            lp_feasible_big(&prob)
        }
    };
    if let Feasibility::Feasible(w) = &answer {
        let ok = rows.iter().all(|c| {
            let v: Rational = c
                .coeffs
                .iter()
                .zip(w)
                .filter(|(&a, _)| a != 0)
                .map(|(&a, x)| int(a) * x)
                .sum();
            match c.relation {
                Relation::Eq => v == int(c.bound),
                Relation::Le => v <= int(c.bound),
                Relation::Ge => v >= int(c.bound),
            }
        });
        assert!(ok, "witness failed exact substitution");
    }
    Ok(answer)
}

// ---------------------------------------------------------------------------
// Shared standard form
//
// Free variables split into nonnegative pairs, one slack per inequality,
// rhs normalized nonnegative, and artificial columns for rows without a
// basic slack. Phase one minimizes the artificial sum.
// ---------------------------------------------------------------------------

struct StandardRow {
    /// Structural coefficients (split vars then slacks), integer-scaled.
    entries: Vec<i128>,
    rhs: i128,
    needs_artificial: bool,
}

fn integer_rows(prob: &LpProblem) -> Option<(usize, Vec<StandardRow>)> {
    let split = 2 * prob.num_vars;
    let num_slacks = prob
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let structural = split + num_slacks;
    let mut rows = Vec::with_capacity(prob.constraints.len());
    let mut slack_idx = 0usize;
    for c in &prob.constraints {
        // Common denominator of the row, so entries become integers. Rows
        // that are already integral (the usual case) skip the lcm work.
        let integral = c
            .coeffs
            .iter()
            .chain(std::iter::once(&c.bound))
            .all(|v| v.denom().is_one());
        let denom = if integral {
            BigInt::one()
        } else {
            let mut denom = BigInt::one();
            for v in c.coeffs.iter().chain(std::iter::once(&c.bound)) {
                denom = num_integer::lcm(denom, v.denom().clone());
            }
            denom
        };
        let scale = |v: &Rational| -> Option<i128> {
            if integral {
                v.numer().to_i128()
            } else {
                ((v.numer() * &denom) / v.denom()).to_i128()
            }
        };
        let mut entries = vec![0i128; structural];
        let mut b = scale(&c.bound)?;
        let negate = b < 0;
        for (j, a) in c.coeffs.iter().enumerate() {
            let v = scale(a)?;
            let v = if negate { v.checked_neg()? } else { v };
            entries[2 * j] = v;
            entries[2 * j + 1] = v.checked_neg()?;
        }
        if negate {
            b = b.checked_neg()?;
        }
        let relation = match (c.relation, negate) {
            (Relation::Eq, _) => Relation::Eq,
            (r, false) => r,
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
        };
        let needs_artificial = match relation {
            Relation::Eq => true,
            Relation::Le => {
                entries[split + slack_idx] = 1;
                slack_idx += 1;
                false
            }
            Relation::Ge => {
                entries[split + slack_idx] = -1;
                slack_idx += 1;
                true
            }
        };
        rows.push(StandardRow {
            entries,
            rhs: b,
            needs_artificial,
        });
    }
    Some((structural, rows))
}

// ---------------------------------------------------------------------------
// Integer (fraction-free) backend
//
// The tableau keeps integer entries with a single positive denominator
// (the previous pivot); pivoting follows the Bareiss update
//   M'[i][j] = (M[i][j] * piv - M[i][e] * M[r][j]) / denom
// whose division is exact. Signs and ratio comparisons carry over from the
// rational tableau because the denominator stays positive. `None` means an
// i128 product overflowed and the caller must use big arithmetic.
// ---------------------------------------------------------------------------

fn lp_feasible_int(prob: &LpProblem) -> Option<Feasibility> {
    let (structural, std_rows) = integer_rows(prob)?;
    solve_standard_int(prob.num_vars, structural, std_rows)
}

fn solve_standard_int(
    num_vars: usize,
    structural: usize,
    std_rows: Vec<StandardRow>,
) -> Option<Feasibility> {
    let m = std_rows.len();
    let num_art = std_rows.iter().filter(|r| r.needs_artificial).count();
    let cols = structural + num_art;

    let mut tab: Vec<Vec<i128>> = Vec::with_capacity(m);
    let mut rhs: Vec<i128> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = vec![usize::MAX; m];
    let mut art_idx = 0usize;
    for (i, row) in std_rows.into_iter().enumerate() {
        let mut entries = row.entries;
        entries.resize(cols, 0);
        if row.needs_artificial {
            entries[structural + art_idx] = 1;
            basis[i] = structural + art_idx;
            art_idx += 1;
        } else {
            let slack = entries[2 * num_vars..structural]
                .iter()
                .position(|&v| v == 1)
                .expect("non-artificial row has a +1 slack");
            basis[i] = 2 * num_vars + slack;
        }
        tab.push(entries);
        rhs.push(row.rhs);
    }

    // Objective row: reduced costs of "minimize artificial sum", with the
    // artificials basic. obj_rhs tracks the negated objective value; the
    // run is feasible exactly when it ends at zero.
    let mut reduced: Vec<i128> = vec![0; cols];
    let mut obj_rhs: i128 = 0;
    for i in 0..m {
        if basis[i] >= structural {
            for (r, v) in reduced.iter_mut().zip(&tab[i]) {
                *r = r.checked_sub(*v)?;
            }
            obj_rhs = obj_rhs.checked_sub(rhs[i])?;
        }
    }
    for i in 0..m {
        if basis[i] >= structural {
            reduced[basis[i]] = 0;
        }
    }

    let mut denom: i128 = 1;
    while let Some(e) = (0..structural).find(|&j| reduced[j] < 0) {
        let mut leave: Option<usize> = None;
        for i in 0..m {
            if tab[i][e] > 0 {
                let better = match leave {
                    None => true,
                    Some(l) => {
                        // rhs[i]/tab[i][e] vs rhs[l]/tab[l][e], positive denominators
                        let lhs = rhs[i].checked_mul(tab[l][e])?;
                        let rhl = rhs[l].checked_mul(tab[i][e])?;
                        lhs < rhl || (lhs == rhl && basis[i] < basis[l])
                    }
                };
                if better {
                    leave = Some(i);
                }
            }
        }
        let r = leave.expect("phase-one simplex cannot be unbounded");
        let piv = tab[r][e];

        // Fraction-free update: every non-pivot row is rescaled by the new
        // pivot and reduced exactly by the old denominator.
        let update_row = |row: &mut [i128], factor: i128, pivot_row: &[i128]| -> Option<()> {
            for (v, &p) in row.iter_mut().zip(pivot_row) {
                let a = v.checked_mul(piv)?;
                let b = factor.checked_mul(p)?;
                *v = a.checked_sub(b)? / denom;
            }
            Some(())
        };
        let pivot_row = std::mem::take(&mut tab[r]);
        let pivot_rhs = rhs[r];
        for (i, row) in tab.iter_mut().enumerate() {
            if i == r {
                continue;
            }
            let factor = row[e];
            update_row(row, factor, &pivot_row)?;
            let a = rhs[i].checked_mul(piv)?;
            let b = factor.checked_mul(pivot_rhs)?;
            rhs[i] = a.checked_sub(b)? / denom;
        }
        let factor = reduced[e];
        if factor != 0 {
            update_row(&mut reduced, factor, &pivot_row)?;
            let a = obj_rhs.checked_mul(piv)?;
            let b = factor.checked_mul(pivot_rhs)?;
            obj_rhs = a.checked_sub(b)? / denom;
        }
        tab[r] = pivot_row;
        denom = piv;
        basis[r] = e;
    }

    if obj_rhs != 0 {
        return Some(Feasibility::Infeasible);
    }

    let mut split_values = vec![Rational::zero(); structural];
    for (i, &b) in basis.iter().enumerate() {
        if b < structural {
            split_values[b] = Rational::new(rhs[i].into(), denom.into());
        }
    }
    let witness: Vec<Rational> = (0..num_vars)
        .map(|j| &split_values[2 * j] - &split_values[2 * j + 1])
        .collect();
    Some(Feasibility::Feasible(witness))
}

// ---------------------------------------------------------------------------
// Arbitrary-precision backend
// ---------------------------------------------------------------------------

fn lp_feasible_big(prob: &LpProblem) -> Feasibility {
    let split = 2 * prob.num_vars;
    let num_slacks = prob
        .constraints
        .iter()
        .filter(|c| c.relation != Relation::Eq)
        .count();
    let structural = split + num_slacks;
    let m = prob.constraints.len();

    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(m);
    let mut rhs: Vec<Rational> = Vec::with_capacity(m);
    let mut basis: Vec<usize> = vec![usize::MAX; m];
    let mut needs_artificial: Vec<bool> = Vec::with_capacity(m);
    let mut slack_idx = 0usize;

    for c in &prob.constraints {
        let mut row = vec![Rational::zero(); structural];
        let mut b = c.bound.clone();
        let negate = b.is_negative();
        for (j, a) in c.coeffs.iter().enumerate() {
            let v = if negate { -a.clone() } else { a.clone() };
            row[2 * j + 1] = -v.clone();
            row[2 * j] = v;
        }
        if negate {
            b = -b;
        }
        let relation = match (c.relation, negate) {
            (Relation::Eq, _) => Relation::Eq,
            (r, false) => r,
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
        };
        match relation {
            Relation::Eq => needs_artificial.push(true),
            Relation::Le => {
                row[split + slack_idx] = Rational::one();
                basis[rows.len()] = split + slack_idx;
                slack_idx += 1;
                needs_artificial.push(false);
            }
            Relation::Ge => {
                row[split + slack_idx] = -Rational::one();
                slack_idx += 1;
                needs_artificial.push(true);
            }
        }
        rows.push(row);
        rhs.push(b);
    }

    let num_art = needs_artificial.iter().filter(|&&x| x).count();
    let cols = structural + num_art;
    let mut art_idx = 0usize;
    for (i, row) in rows.iter_mut().enumerate() {
        row.resize(cols, Rational::zero());
        if needs_artificial[i] {
            row[structural + art_idx] = Rational::one();
            basis[i] = structural + art_idx;
            art_idx += 1;
        }
    }

    let mut reduced = vec![Rational::zero(); cols];
    let mut objective = Rational::zero();
    for i in 0..m {
        if needs_artificial[i] {
            for (r, v) in reduced.iter_mut().zip(&rows[i]) {
                *r -= v;
            }
            objective += &rhs[i];
        }
    }
    for (i, &b) in basis.iter().enumerate() {
        if needs_artificial[i] {
            reduced[b] = Rational::zero();
        }
    }

    while let Some(e) = (0..structural).find(|&j| reduced[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if rows[i][e].is_positive() {
                let ratio = &rhs[i] / &rows[i][e];
                let better = match &leave {
                    None => true,
                    Some((li, lr)) => ratio < *lr || (ratio == *lr && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
        }
        let Some((r, _)) = leave else {
            unreachable!("phase-one simplex cannot be unbounded");
        };

        let piv = rows[r][e].clone();
        if !piv.is_one() {
            for v in rows[r].iter_mut() {
                if !v.is_zero() {
                    *v /= &piv;
                }
            }
            rhs[r] /= &piv;
        }
        let pivot_row = rows[r].clone();
        let pivot_rhs = rhs[r].clone();
        for i in 0..m {
            if i != r && !rows[i][e].is_zero() {
                let factor = rows[i][e].clone();
                for (v, p) in rows[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *v -= &factor * p;
                    }
                }
                rhs[i] -= &factor * &pivot_rhs;
            }
        }
        if !reduced[e].is_zero() {
            let factor = reduced[e].clone();
            for (v, p) in reduced.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *v -= &factor * p;
                }
            }
            // Raising the entering variable to pivot_rhs moves the
            // objective by rc_e * pivot_rhs.
            objective += &factor * &pivot_rhs;
        }
        basis[r] = e;
    }

    if !objective.is_zero() {
        return Feasibility::Infeasible;
    }

    let mut split_values = vec![Rational::zero(); structural];
    for (i, &b) in basis.iter().enumerate() {
        if b < structural {
            split_values[b] = rhs[i].clone();
        }
    }
    let witness: Vec<Rational> = (0..prob.num_vars)
        .map(|j| &split_values[2 * j] - &split_values[2 * j + 1])
        .collect();
    if !prob.satisfied_by(&witness) {
        unreachable!("rational simplex produced a witness that fails substitution");
    }
    Feasibility::Feasible(witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Both backends on the same problem; they must agree, and any
    /// witnesses must substitute exactly.
    fn solve_both(p: &LpProblem) -> Feasibility {
        let fast = lp_feasible_int(p).expect("test problems fit i128");
        let big = lp_feasible_big(p);
        assert_eq!(fast.is_feasible(), big.is_feasible());
        if let Feasibility::Feasible(w) = &fast {
            assert!(p.satisfied_by(w));
        }
        if let Feasibility::Feasible(w) = &big {
            assert!(p.satisfied_by(w));
        }
        fast
    }

    #[test]
    fn contradictory_bounds_infeasible() {
        let mut p = LpProblem::new(1);
        p.push(LinearConstraint::from_ints(&[1], Relation::Ge, 1));
        p.push(LinearConstraint::from_ints(&[1], Relation::Le, 0));
        assert_eq!(solve_both(&p), Feasibility::Infeasible);
        assert_eq!(lp_feasible(&p).unwrap(), Feasibility::Infeasible);
    }

    #[test]
    fn simplex_face_system_feasible() {
        // x + y = 1, x >= 0, y >= 0
        let mut p = LpProblem::new(2);
        p.push(LinearConstraint::from_ints(&[1, 1], Relation::Eq, 1));
        p.push(LinearConstraint::from_ints(&[1, 0], Relation::Ge, 0));
        p.push(LinearConstraint::from_ints(&[0, 1], Relation::Ge, 0));
        assert!(solve_both(&p).is_feasible());
    }

    #[test]
    fn free_variables_can_go_negative() {
        let mut p = LpProblem::new(1);
        p.push(LinearConstraint::from_ints(&[1], Relation::Le, -3));
        match solve_both(&p) {
            Feasibility::Feasible(w) => assert!(w[0] <= int(-3)),
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn equality_chain_propagates() {
        // x = y, y = z, x + y + z = 2 -> x = y = z = 2/3
        let mut p = LpProblem::new(3);
        p.push(LinearConstraint::from_ints(&[1, -1, 0], Relation::Eq, 0));
        p.push(LinearConstraint::from_ints(&[0, 1, -1], Relation::Eq, 0));
        p.push(LinearConstraint::from_ints(&[1, 1, 1], Relation::Eq, 2));
        match solve_both(&p) {
            Feasibility::Feasible(w) => {
                assert_eq!(w[0], Rational::new(2.into(), 3.into()));
                assert_eq!(w[0], w[1]);
                assert_eq!(w[1], w[2]);
            }
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn rational_coefficients_are_scaled_exactly() {
        // x/2 + y/3 = 1 with x = y forces x = 6/5.
        let mut p = LpProblem::new(2);
        p.push(LinearConstraint {
            coeffs: vec![
                Rational::new(1.into(), 2.into()),
                Rational::new(1.into(), 3.into()),
            ],
            relation: Relation::Eq,
            bound: Rational::one(),
        });
        p.push(LinearConstraint::from_ints(&[1, -1], Relation::Eq, 0));
        match solve_both(&p) {
            Feasibility::Feasible(w) => {
                assert_eq!(w[0], Rational::new(6.into(), 5.into()));
            }
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let mut p = LpProblem::new(2);
        p.push(LinearConstraint::from_ints(&[1], Relation::Eq, 0));
        assert!(matches!(
            lp_feasible(&p),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn no_constraints_is_trivially_feasible() {
        let p = LpProblem::new(3);
        assert!(lp_feasible(&p).unwrap().is_feasible());
    }

    #[test]
    fn square_bottom_edge_support() {
        // Witness system for the bottom edge of the unit square:
        // a.(0,0) = b, a.(1,0) = b, a.(0,1) <= b - 1, a.(1,1) <= b - 1
        // over variables (a1, a2, b).
        let mut p = LpProblem::new(3);
        p.push(LinearConstraint::from_ints(&[0, 0, -1], Relation::Eq, 0));
        p.push(LinearConstraint::from_ints(&[1, 0, -1], Relation::Eq, 0));
        p.push(LinearConstraint::from_ints(&[0, 1, -1], Relation::Le, -1));
        p.push(LinearConstraint::from_ints(&[1, 1, -1], Relation::Le, -1));
        assert!(solve_both(&p).is_feasible());
    }

    #[test]
    fn backends_agree_on_seeded_random_problems() {
        let mut rng = crate::random::SplitMix64::new(0xfeed);
        for _ in 0..400 {
            let num_vars = 1 + rng.below(4) as usize;
            let num_rows = 1 + rng.below(6) as usize;
            let mut p = LpProblem::new(num_vars);
            for _ in 0..num_rows {
                let coeffs: Vec<i64> = (0..num_vars).map(|_| rng.below(7) as i64 - 3).collect();
                if coeffs.iter().all(|&c| c == 0) {
                    continue;
                }
                let relation = match rng.below(3) {
                    0 => Relation::Eq,
                    1 => Relation::Le,
                    _ => Relation::Ge,
                };
                p.push(LinearConstraint::from_ints(
                    &coeffs,
                    relation,
                    rng.below(9) as i64 - 4,
                ));
            }
            if p.constraints.is_empty() {
                continue;
            }
            solve_both(&p);
        }
    }

    #[test]
    fn huge_coefficients_take_the_big_path() {
        // The i128 scaling fails, so lp_feasible must still answer through
        // the arbitrary-precision backend.
        let huge = Rational::from_integer(BigInt::from(i128::MAX) * BigInt::from(4));
        let mut p = LpProblem::new(1);
        p.push(LinearConstraint {
            coeffs: vec![huge.clone()],
            relation: Relation::Eq,
            bound: huge,
        });
        assert!(lp_feasible_int(&p).is_none());
        match lp_feasible(&p).unwrap() {
            Feasibility::Feasible(w) => assert_eq!(w[0], Rational::one()),
            Feasibility::Infeasible => panic!("expected feasible"),
        }
    }
}
