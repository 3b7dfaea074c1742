//! Dense two-phase simplex over exact rationals with Bland's rule.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::system::{LinearSystem, Relation, VarId};
use super::Rational;

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum LpOutcome {
    Optimal(Vec<Rational>),
    Infeasible,
    Unbounded,
}

/// How an original variable is expressed through nonnegative columns.
#[derive(Clone)]
enum Column {
    /// `x = lower + y`
    Shift(usize, BigInt),
    /// `x = upper - y`
    Flip(usize, BigInt),
    /// `x = y+ - y-`
    Split(usize, usize),
}

struct Tableau {
    /// Constraint rows followed by the objective row; last column is the rhs.
    rows: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn m(&self) -> usize {
        self.basis.len()
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = self.rows[r][c].recip();
        let nonzero: Vec<usize> = (0..=self.width)
            .filter(|&j| !self.rows[r][j].is_zero())
            .collect();
        for &j in &nonzero {
            self.rows[r][j] = &self.rows[r][j] * &inv;
        }
        let (before, rest) = self.rows.split_at_mut(r);
        let (pivot_row, after) = rest.split_first_mut().unwrap();
        for row in before.iter_mut().chain(after.iter_mut()) {
            if row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for &j in &nonzero {
                let delta = &factor * &pivot_row[j];
                row[j] -= delta;
            }
        }
        self.basis[r] = c;
    }

    /// Runs primal simplex on the objective row. Returns false if unbounded.
    fn optimize(&mut self, allowed: usize) -> bool {
        let m = self.m();
        loop {
            let Some(c) = (0..allowed).find(|&j| self.rows[m][j].is_negative()) else {
                return true;
            };
            let mut best: Option<(usize, Rational)> = None;
            for i in 0..m {
                let a = &self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rows[i][self.width] / a;
                let better = match &best {
                    None => true,
                    Some((b, r)) => ratio < *r || (ratio == *r && self.basis[i] < self.basis[*b]),
                };
                if better {
                    best = Some((i, ratio));
                }
            }
            match best {
                Some((r, _)) => self.pivot(r, c),
                None => return false,
            }
        }
    }

    fn set_objective(&mut self, costs: &[Rational]) {
        let m = self.m();
        let mut obj = vec![Rational::zero(); self.width + 1];
        obj[..costs.len()].clone_from_slice(costs);
        for i in 0..m {
            let cb = obj[self.basis[i]].clone();
            if cb.is_zero() {
                continue;
            }
            for (o, a) in obj.iter_mut().zip(&self.rows[i]) {
                *o -= &cb * a;
            }
        }
        self.rows[m] = obj;
    }
}

/// Solves the LP relaxation of `sys` under the given bounds (overriding the
/// variables' own), minimizing `objective` if present.
pub(crate) fn solve_lp(
    sys: &LinearSystem,
    lower: &[Option<BigInt>],
    upper: &[Option<BigInt>],
    objective: Option<&[(VarId, Rational)]>,
) -> LpOutcome {
    let n = sys.num_variables();
    let mut structural = 0;
    let mut columns = Vec::with_capacity(n);
    // (coefficients over structural columns, relation, rhs)
    let mut rows: Vec<(Vec<(usize, Rational)>, Relation, Rational)> = Vec::new();
    for j in 0..n {
        match (&lower[j], &upper[j]) {
            (Some(l), u) => {
                if let Some(u) = u {
                    if u < l {
                        return LpOutcome::Infeasible;
                    }
                    rows.push((
                        vec![(structural, Rational::one())],
                        Relation::Le,
                        Rational::from_integer(u - l),
                    ));
                }
                columns.push(Column::Shift(structural, l.clone()));
                structural += 1;
            }
            (None, Some(u)) => {
                columns.push(Column::Flip(structural, u.clone()));
                structural += 1;
            }
            (None, None) => {
                columns.push(Column::Split(structural, structural + 1));
                structural += 2;
            }
        }
    }

    let substitute = |terms: &[(VarId, Rational)]| {
        let mut out = Vec::with_capacity(terms.len());
        let mut constant = Rational::zero();
        for (v, a) in terms {
            match &columns[*v] {
                Column::Shift(c, l) => {
                    out.push((*c, a.clone()));
                    constant += a * Rational::from_integer(l.clone());
                }
                Column::Flip(c, u) => {
                    out.push((*c, -a.clone()));
                    constant += a * Rational::from_integer(u.clone());
                }
                Column::Split(p, q) => {
                    out.push((*p, a.clone()));
                    out.push((*q, -a.clone()));
                }
            }
        }
        (out, constant)
    };

    for c in sys.constraints() {
        let (terms, constant) = substitute(&c.terms);
        if terms.is_empty() {
            let ok = match c.relation {
                Relation::Eq => constant == c.rhs,
                Relation::Le => constant <= c.rhs,
                Relation::Ge => constant >= c.rhs,
            };
            if !ok {
                return LpOutcome::Infeasible;
            }
            continue;
        }
        rows.push((terms, c.relation, &c.rhs - constant));
    }

    // Normalize to nonnegative right-hand sides.
    for (terms, rel, rhs) in rows.iter_mut() {
        if rhs.is_negative() {
            for (_, a) in terms.iter_mut() {
                *a = -a.clone();
            }
            *rhs = -rhs.clone();
            *rel = match rel {
                Relation::Le => Relation::Ge,
                Relation::Ge => Relation::Le,
                Relation::Eq => Relation::Eq,
            };
        }
    }

    let slacks = rows.iter().filter(|r| r.1 != Relation::Eq).count();
    let artificials = rows.iter().filter(|r| r.1 != Relation::Le).count();
    let art_start = structural + slacks;
    let width = art_start + artificials;
    let m = rows.len();
    let mut tableau = Tableau {
        rows: Vec::with_capacity(m + 1),
        basis: Vec::with_capacity(m),
        width,
    };
    let (mut next_slack, mut next_art) = (structural, art_start);
    for (terms, rel, rhs) in rows {
        let mut row = vec![Rational::zero(); width + 1];
        for (c, a) in terms {
            row[c] += a;
        }
        row[width] = rhs;
        match rel {
            Relation::Le => {
                row[next_slack] = Rational::one();
                tableau.basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -Rational::one();
                next_slack += 1;
                row[next_art] = Rational::one();
                tableau.basis.push(next_art);
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = Rational::one();
                tableau.basis.push(next_art);
                next_art += 1;
            }
        }
        tableau.rows.push(row);
    }
    tableau.rows.push(vec![Rational::zero(); width + 1]);

    if artificials > 0 {
        let mut costs = vec![Rational::zero(); width];
        for c in costs.iter_mut().skip(art_start) {
            *c = Rational::one();
        }
        tableau.set_objective(&costs);
        tableau.optimize(width);
        if !tableau.rows[m][width].is_zero() {
            return LpOutcome::Infeasible;
        }
        // Drive remaining (zero-valued) artificials out of the basis.
        let mut redundant = Vec::new();
        for i in 0..tableau.m() {
            if tableau.basis[i] < art_start {
                continue;
            }
            match (0..art_start).find(|&j| !tableau.rows[i][j].is_zero()) {
                Some(j) => tableau.pivot(i, j),
                None => redundant.push(i),
            }
        }
        for &i in redundant.iter().rev() {
            tableau.rows.remove(i);
            tableau.basis.remove(i);
        }
    }

    let mut costs = vec![Rational::zero(); structural];
    if let Some(objective) = objective {
        let (terms, _) = substitute(objective);
        for (c, a) in terms {
            costs[c] += a;
        }
    }
    tableau.set_objective(&costs);
    if !tableau.optimize(art_start) {
        return LpOutcome::Unbounded;
    }

    let mut values = vec![Rational::zero(); structural];
    for (i, &b) in tableau.basis.iter().enumerate() {
        if b < structural {
            values[b] = tableau.rows[i][width].clone();
        }
    }
    let point = columns
        .iter()
        .map(|col| match col {
            Column::Shift(c, l) => Rational::from_integer(l.clone()) + &values[*c],
            Column::Flip(c, u) => Rational::from_integer(u.clone()) - &values[*c],
            Column::Split(p, q) => &values[*p] - &values[*q],
        })
        .collect();
    LpOutcome::Optimal(point)
}
