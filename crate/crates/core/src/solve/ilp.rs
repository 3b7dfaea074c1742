use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::simplex::{solve_lp, LpOutcome};
use super::system::{Feasibility, LinearSystem, VarId};
use super::{Rational, SolveError};

/// Decides whether `sys` has an integer solution and returns one.
///
/// Systems whose solution set is closed under positive scaling (see
/// [`LinearSystem`]) are solved by scaling a rational vertex. Anything else is
/// solved by branch-and-bound, which requires every variable to carry both a
/// lower and an upper bound.
pub fn solve_integer_feasibility(sys: &LinearSystem) -> Result<Feasibility, SolveError> {
    let lower: Vec<Option<BigInt>> = sys.variables.iter().map(|v| v.lower.clone()).collect();
    let upper: Vec<Option<BigInt>> = sys.variables.iter().map(|v| v.upper.clone()).collect();
    let objective = sys.objective.as_deref();

    if sys.is_scale_invariant() {
        let outcome = match solve_lp(sys, &lower, &upper, objective) {
            LpOutcome::Unbounded => solve_lp(sys, &lower, &upper, None),
            other => other,
        };
        let LpOutcome::Optimal(point) = outcome else {
            return Ok(Feasibility::Infeasible);
        };
        let solution = scale_to_integers(&point);
        debug_assert!(sys.is_satisfied_by(&solution));
        return Ok(Feasibility::Feasible(solution));
    }

    if let Some(var) = sys
        .variables
        .iter()
        .find(|v| v.lower.is_none() || v.upper.is_none())
    {
        return Err(SolveError::UnboundedBox(var.name.clone()));
    }
    let found = branch_and_bound(sys, lower, upper, objective);
    if let Some(solution) = &found {
        debug_assert!(sys.is_satisfied_by(solution));
    }
    Ok(found.map_or(Feasibility::Infeasible, Feasibility::Feasible))
}

fn scale_to_integers(point: &[Rational]) -> Vec<BigInt> {
    let lcm = point
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    point
        .iter()
        .map(|x| x.numer() * (&lcm / x.denom()))
        .collect()
}

fn objective_value(objective: &[(VarId, Rational)], point: &[Rational]) -> Rational {
    objective.iter().map(|(v, a)| a * &point[*v]).sum()
}

fn branch_and_bound(
    sys: &LinearSystem,
    lower: Vec<Option<BigInt>>,
    upper: Vec<Option<BigInt>>,
    objective: Option<&[(VarId, Rational)]>,
) -> Option<Vec<BigInt>> {
    let mut incumbent: Option<(Vec<BigInt>, Rational)> = None;
    let mut stack = vec![(lower, upper)];
    while let Some((lower, upper)) = stack.pop() {
        let LpOutcome::Optimal(point) = solve_lp(sys, &lower, &upper, objective) else {
            continue;
        };
        if let (Some(obj), Some((_, best))) = (objective, &incumbent) {
            // The objective has integer coefficients, so it is integral on
            // integer points.
            if objective_value(obj, &point).ceil() >= *best {
                continue;
            }
        }
        match point.iter().position(|x| !x.is_integer()) {
            None => {
                let solution: Vec<BigInt> = point.iter().map(|x| x.to_integer()).collect();
                match objective {
                    None => return Some(solution),
                    Some(obj) => {
                        let value = objective_value(obj, &point);
                        incumbent = Some((solution, value));
                    }
                }
            }
            Some(j) => {
                let mut up_lower = lower.clone();
                up_lower[j] = Some(point[j].ceil().to_integer());
                let mut down_upper = upper.clone();
                down_upper[j] = Some(point[j].floor().to_integer());
                // Pushed last so the floor branch is explored first.
                stack.push((up_lower, upper));
                stack.push((lower, down_upper));
            }
        }
    }
    incumbent.map(|(solution, _)| solution)
}
