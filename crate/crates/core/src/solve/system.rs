use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::Rational;

pub type VarId = usize;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Eq,
    Le,
    Ge,
}

#[derive(Clone, Debug)]
pub struct Variable {
    pub name: String,
    pub lower: Option<BigInt>,
    pub upper: Option<BigInt>,
}

#[derive(Clone, Debug)]
pub struct Constraint {
    /// Sparse coefficients, one entry per variable, no zeros.
    pub terms: Vec<(VarId, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl Constraint {
    fn evaluate(&self, values: &[BigInt]) -> Rational {
        self.terms
            .iter()
            .map(|(v, a)| a * Rational::from_integer(values[*v].clone()))
            .sum()
    }
}

/// A system of linear constraints over integer variables.
///
/// Strict inequalities are not representable; over the integers `a < b` is
/// written `a <= b - 1`.
#[derive(Clone, Debug, Default)]
pub struct LinearSystem {
    pub(crate) variables: Vec<Variable>,
    pub(crate) constraints: Vec<Constraint>,
    pub(crate) objective: Option<Vec<(VarId, Rational)>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<BigInt>),
    Infeasible,
}

impl Feasibility {
    pub fn solution(&self) -> Option<&[BigInt]> {
        match self {
            Feasibility::Feasible(x) => Some(x),
            Feasibility::Infeasible => None,
        }
    }
}

fn normalize_terms(terms: impl IntoIterator<Item = (VarId, Rational)>) -> Vec<(VarId, Rational)> {
    let mut merged: Vec<(VarId, Rational)> = Vec::new();
    for (v, a) in terms {
        match merged.iter_mut().find(|(w, _)| *w == v) {
            Some((_, b)) => *b += a,
            None => merged.push((v, a)),
        }
    }
    merged.retain(|(_, a)| !a.is_zero());
    merged.sort_by_key(|(v, _)| *v);
    merged
}

impl LinearSystem {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_variable(
        &mut self,
        name: impl Into<String>,
        lower: Option<i64>,
        upper: Option<i64>,
    ) -> VarId {
        self.variables.push(Variable {
            name: name.into(),
            lower: lower.map(BigInt::from),
            upper: upper.map(BigInt::from),
        });
        self.variables.len() - 1
    }

    pub fn set_bounds(&mut self, var: VarId, lower: Option<i64>, upper: Option<i64>) {
        self.variables[var].lower = lower.map(BigInt::from);
        self.variables[var].upper = upper.map(BigInt::from);
    }

    pub fn add_constraint(
        &mut self,
        terms: impl IntoIterator<Item = (VarId, i64)>,
        relation: Relation,
        rhs: i64,
    ) {
        self.add_rational_constraint(
            terms
                .into_iter()
                .map(|(v, a)| (v, Rational::from_integer(a.into()))),
            relation,
            Rational::from_integer(rhs.into()),
        );
    }

    pub fn add_rational_constraint(
        &mut self,
        terms: impl IntoIterator<Item = (VarId, Rational)>,
        relation: Relation,
        rhs: Rational,
    ) {
        let terms = normalize_terms(terms);
        assert!(terms.iter().all(|(v, _)| *v < self.variables.len()));
        self.constraints.push(Constraint {
            terms,
            relation,
            rhs,
        });
    }

    /// Objective to minimize among feasible points (best effort).
    pub fn minimize(&mut self, terms: impl IntoIterator<Item = (VarId, i64)>) {
        self.objective = Some(normalize_terms(
            terms
                .into_iter()
                .map(|(v, a)| (v, Rational::from_integer(a.into()))),
        ));
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    /// Exact substitution check of bounds and constraints.
    pub fn is_satisfied_by(&self, values: &[BigInt]) -> bool {
        if values.len() != self.variables.len() {
            return false;
        }
        let bounds_ok = self.variables.iter().zip(values).all(|(var, x)| {
            var.lower.as_ref().is_none_or(|l| x >= l) && var.upper.as_ref().is_none_or(|u| x <= u)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                let lhs = c.evaluate(values);
                match c.relation {
                    Relation::Eq => lhs == c.rhs,
                    Relation::Le => lhs <= c.rhs,
                    Relation::Ge => lhs >= c.rhs,
                }
            })
    }

    /// True when scaling any rational solution by a positive integer keeps it
    /// feasible: every constraint is homogeneous or of the form
    /// `a.x <= c` with `c <= -1`, and bounds are absent or zero.
    pub(crate) fn is_scale_invariant(&self) -> bool {
        let minus_one = Rational::from_integer((-1).into());
        let bounds_ok = self.variables.iter().all(|v| {
            v.lower.as_ref().is_none_or(Zero::is_zero) && v.upper.as_ref().is_none_or(Zero::is_zero)
        });
        bounds_ok
            && self.constraints.iter().all(|c| {
                c.rhs.is_zero()
                    || match c.relation {
                        Relation::Le => c.rhs <= minus_one,
                        Relation::Ge => c.rhs.is_positive() && c.rhs >= -&minus_one,
                        Relation::Eq => false,
                    }
            })
    }
}
