//! The separation-problem solvers: two fast paths working on the region basis
//! and the general system over `ℝ(s0)`, `𝔹` and `𝔽`.

use num_traits::{ToPrimitive, Zero};

use super::region::{minimal_initial, Region};
use super::{Properties, SeparationProblem};
use crate::lts::{LabelId, Lts, StateId};
use crate::solve::{
    integer_kernel_basis, solve_integer_feasibility, BigInt, Feasibility, LinearSystem, Rational,
    Relation, SolveError, VarId,
};

/// Which algorithm solves the separation problems.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    /// Fast paths where the properties allow them, the general system otherwise.
    Auto,
    /// Always the general system.
    General,
}

/// Everything derived once from the input before problems are solved.
pub(crate) struct Context<'a> {
    pub lts: &'a Lts,
    pub props: &'a Properties,
    /// Parikh vector of the spanning-tree path to each state.
    pub psi: Vec<Vec<i64>>,
    /// One Parikh row per fundamental cycle.
    pub cycles: Vec<Vec<i64>>,
    pub basis: Vec<Vec<BigInt>>,
    /// Labels enabled at each state.
    enabled: Vec<Vec<bool>>,
    /// Effective location index per label (output-nonbranching gives every
    /// label its own).
    locations: Vec<Option<usize>>,
    max_path: i64,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum ConflictMode {
    Off,
    OutputNonbranching,
    NonNegativeEffects,
}

impl<'a> Context<'a> {
    pub fn new(lts: &'a Lts, props: &'a Properties) -> Result<Self, crate::LtsError> {
        let tree = lts.spanning_tree()?;
        let psi: Vec<Vec<i64>> = lts
            .states()
            .map(|s| tree.parikh(s).counts().iter().map(|&c| c as i64).collect())
            .collect();
        let cycles = tree.cycle_rows(lts);
        let basis = integer_kernel_basis(&cycles, lts.num_labels());
        let enabled = lts
            .states()
            .map(|s| {
                let mut row = vec![false; lts.num_labels()];
                for arc in lts.outgoing(s) {
                    row[arc.label] = true;
                }
                row
            })
            .collect();
        let mut names: Vec<&str> = Vec::new();
        let locations = lts
            .labels()
            .map(|t| {
                lts.location(t).map(|loc| match names.iter().position(|n| *n == loc) {
                    Some(i) => i,
                    None => {
                        names.push(loc);
                        names.len() - 1
                    }
                })
            })
            .collect();
        let max_path = psi.iter().map(|p| p.iter().sum::<i64>()).max().unwrap_or(0);
        Ok(Context {
            lts,
            props,
            psi,
            cycles,
            basis,
            enabled,
            locations,
            max_path,
        })
    }

    pub fn is_enabled(&self, s: StateId, t: LabelId) -> bool {
        self.enabled[s][t]
    }

    fn has_locations(&self) -> bool {
        self.locations.iter().any(Option::is_some)
    }

    pub fn solve(&self, problem: SeparationProblem, strategy: Strategy) -> Result<Option<Region>, SolveError> {
        let props = self.props;
        let fast = strategy == Strategy::Auto && !self.has_locations();
        let region = if fast && props.is_unconstrained() {
            self.solve_fast_none(problem)
        } else if fast
            && props.pure
            && !props.output_nonbranching
            && !props.tnet
            && !props.conflict_free
            && props.k_bounded.is_none()
        {
            self.solve_fast_pure(problem, props.plain)?
        } else {
            self.solve_general(problem)?
        };
        if let Some(r) = &region {
            debug_assert!(r.is_region_of(self.lts), "solver produced an invalid region");
        }
        Ok(region)
    }

    fn dot_basis(&self, j: usize, d: &[i64]) -> BigInt {
        self.basis[j].iter().zip(d).map(|(b, &x)| b * x).sum()
    }

    fn effect_from_coefficients(&self, coefficients: &[BigInt]) -> Vec<i64> {
        (0..self.lts.num_labels())
            .map(|t| {
                let e: BigInt = coefficients
                    .iter()
                    .zip(&self.basis)
                    .map(|(c, b)| c * &b[t])
                    .sum();
                e.to_i64().expect("region weight fits in i64")
            })
            .collect()
    }

    fn pure_region(&self, effect: &[i64]) -> Region {
        let mut r = Region::from_effect(0, effect);
        r.initial = minimal_initial(self.lts, &self.psi, &r.backward, effect);
        r
    }

    fn diff(&self, s: StateId, s2: StateId) -> Vec<i64> {
        self.psi[s].iter().zip(&self.psi[s2]).map(|(a, b)| a - b).collect()
    }

    /// Some basis vector separating the two states, as a pure region.
    fn basis_separation(&self, s: StateId, s2: StateId) -> Option<Region> {
        let d = self.diff(s, s2);
        (0..self.basis.len())
            .find(|&j| !self.dot_basis(j, &d).is_zero())
            .map(|j| {
                let effect: Vec<i64> = self.basis[j]
                    .iter()
                    .map(|b| b.to_i64().expect("basis entry fits in i64"))
                    .collect();
                self.pure_region(&effect)
            })
    }

    /// Solves `Σ_j c_j (b_j · d) <= -1` for every `d` over free basis
    /// coefficients; returns the effect vector.
    fn solve_over_basis(&self, rows: &[Vec<i64>]) -> Option<Vec<i64>> {
        let mut sys = LinearSystem::new();
        let coefficients: Vec<VarId> = (0..self.basis.len())
            .map(|j| sys.add_variable(format!("c{j}"), None, None))
            .collect();
        for d in rows {
            let terms: Vec<(VarId, Rational)> = coefficients
                .iter()
                .enumerate()
                .map(|(j, &c)| (c, Rational::from_integer(self.dot_basis(j, d))))
                .collect();
            sys.add_rational_constraint(terms, Relation::Le, Rational::from_integer((-1).into()));
        }
        match solve_integer_feasibility(&sys).expect("free variables keep the system scale-invariant") {
            Feasibility::Feasible(c) => Some(self.effect_from_coefficients(&c)),
            Feasibility::Infeasible => None,
        }
    }

    /// No properties: `𝔼(Ψ_s - Ψ_s') <= -1` for every `s'` enabling `t`, then
    /// `𝔹(t)` and `𝔽(t)` are raised together until `t` is blocked at `s`.
    fn solve_fast_none(&self, problem: SeparationProblem) -> Option<Region> {
        match problem {
            SeparationProblem::State(s, s2) => self.basis_separation(s, s2),
            SeparationProblem::Event(s, t) => {
                let rows: Vec<Vec<i64>> = self
                    .lts
                    .states()
                    .filter(|&s2| self.is_enabled(s2, t))
                    .map(|s2| self.diff(s, s2))
                    .collect();
                let effect = self.solve_over_basis(&rows)?;
                let mut region = self.pure_region(&effect);
                let value = region.initial as i64
                    + self.psi[s].iter().zip(&effect).map(|(p, e)| p * e).sum::<i64>();
                let raise = (value - region.backward[t] as i64 + 1).max(0) as u64;
                region.backward[t] += raise;
                region.forward[t] += raise;
                Some(region)
            }
        }
    }

    /// Pure (optionally plain) regions. ESSP: `𝔼(Ψ_s - Ψ_s' + 1_t) <= -1` for
    /// every state `s'`.
    fn solve_fast_pure(&self, problem: SeparationProblem, plain: bool) -> Result<Option<Region>, SolveError> {
        let n = self.lts.num_labels();
        let rows: Vec<Vec<i64>> = match problem {
            SeparationProblem::State(s, s2) if !plain => return Ok(self.basis_separation(s, s2)),
            SeparationProblem::State(s, s2) => vec![self.diff(s, s2)],
            SeparationProblem::Event(s, t) => self
                .lts
                .states()
                .map(|s2| {
                    let mut d = self.diff(s, s2);
                    d[t] += 1;
                    d
                })
                .collect(),
        };
        if !plain {
            return Ok(self.solve_over_basis(&rows).map(|e| self.pure_region(&e)));
        }
        // Plain and pure: effects in {-1, 0, 1}, constrained directly by the
        // cycle equations so that the box stays finite.
        let mut sys = LinearSystem::new();
        let effect: Vec<VarId> = (0..n)
            .map(|t| sys.add_variable(format!("E({})", self.lts.label_name(t)), Some(-1), Some(1)))
            .collect();
        for gamma in &self.cycles {
            sys.add_constraint(effect.iter().zip(gamma).map(|(&v, &g)| (v, g)), Relation::Eq, 0);
        }
        for d in &rows {
            sys.add_constraint(effect.iter().zip(d).map(|(&v, &x)| (v, x)), Relation::Le, -1);
        }
        Ok(match solve_integer_feasibility(&sys)? {
            Feasibility::Feasible(e) => {
                let e: Vec<i64> = e.iter().map(|x| x.to_i64().expect("bounded by 1")).collect();
                Some(self.pure_region(&e))
            }
            Feasibility::Infeasible => None,
        })
    }

    /// Location restrictions to try: each entry marks the labels that may not
    /// consume from the region.
    fn consumer_restrictions(&self, problem: SeparationProblem, mode: ConflictMode) -> Vec<Vec<bool>> {
        let n = self.lts.num_labels();
        let locations: Vec<Option<usize>> =
            if self.props.output_nonbranching || mode == ConflictMode::OutputNonbranching {
                (0..n).map(Some).collect()
            } else {
                self.locations.clone()
            };
        let forbid_except = |loc: usize| -> Vec<bool> {
            locations.iter().map(|l| l.is_some_and(|l| l != loc)).collect()
        };
        if let SeparationProblem::Event(_, t) = problem {
            if let Some(loc) = locations[t] {
                return vec![forbid_except(loc)];
            }
        }
        let mut distinct: Vec<usize> = Vec::new();
        for &l in locations.iter().flatten() {
            if !distinct.contains(&l) {
                distinct.push(l);
            }
        }
        if distinct.is_empty() {
            return vec![vec![false; n]];
        }
        distinct.into_iter().map(forbid_except).collect()
    }

    fn solve_general(&self, problem: SeparationProblem) -> Result<Option<Region>, SolveError> {
        let modes: &[ConflictMode] = if self.props.conflict_free {
            &[ConflictMode::OutputNonbranching, ConflictMode::NonNegativeEffects]
        } else {
            &[ConflictMode::Off]
        };
        for &mode in modes {
            for forbidden in self.consumer_restrictions(problem, mode) {
                let directions: &[bool] = match problem {
                    SeparationProblem::State(..) => &[false, true],
                    SeparationProblem::Event(..) => &[false],
                };
                for &reverse in directions {
                    let system = self.general_system(problem, mode, &forbidden, reverse);
                    if let Some(region) = self.solve_general_system(&system)? {
                        return Ok(Some(region));
                    }
                }
            }
        }
        Ok(None)
    }

    fn general_system(
        &self,
        problem: SeparationProblem,
        mode: ConflictMode,
        forbidden: &[bool],
        reverse: bool,
    ) -> GeneralSystem {
        let props = self.props;
        let n = self.lts.num_labels();
        let weight_bound: Option<i64> = if props.requires_plain() {
            Some(1)
        } else {
            props.k_bounded.map(|k| k as i64)
        };
        let initial_bound = match (props.k_bounded, weight_bound) {
            (Some(k), _) => Some(k as i64),
            (None, Some(w)) => Some(w * (1 + self.max_path)),
            (None, None) => None,
        };
        let mut sys = LinearSystem::new();
        let r0 = sys.add_variable("R(s0)", Some(0), initial_bound);
        let b: Vec<VarId> = (0..n)
            .map(|t| {
                let upper = if forbidden[t] { Some(0) } else { weight_bound };
                sys.add_variable(format!("B({})", self.lts.label_name(t)), Some(0), upper)
            })
            .collect();
        let f: Vec<VarId> = (0..n)
            .map(|t| sys.add_variable(format!("F({})", self.lts.label_name(t)), Some(0), weight_bound))
            .collect();

        // Σ_t coeff(t)·𝔼(t)
        let effect_terms = |coeffs: &[i64]| -> Vec<(VarId, i64)> {
            let mut terms = Vec::with_capacity(2 * n);
            for t in 0..n {
                if coeffs[t] != 0 {
                    terms.push((f[t], coeffs[t]));
                    terms.push((b[t], -coeffs[t]));
                }
            }
            terms
        };
        // ℝ(s) = ℝ(s0) + 𝔼(Ψ_s)
        let value_terms = |s: StateId| -> Vec<(VarId, i64)> {
            let mut terms = effect_terms(&self.psi[s]);
            terms.push((r0, 1));
            terms
        };

        for gamma in &self.cycles {
            sys.add_constraint(effect_terms(gamma), Relation::Eq, 0);
        }
        if props.pure {
            for s in self.lts.states() {
                sys.add_constraint(value_terms(s), Relation::Ge, 0);
            }
        } else {
            for arc in self.lts.arcs() {
                let mut terms = value_terms(arc.source);
                terms.push((b[arc.label], -1));
                sys.add_constraint(terms, Relation::Ge, 0);
            }
        }
        if let Some(k) = props.k_bounded {
            for s in self.lts.states() {
                sys.add_constraint(value_terms(s), Relation::Le, k as i64);
            }
        }
        if props.tnet {
            sys.add_constraint(f.iter().map(|&v| (v, 1)), Relation::Le, 1);
            sys.add_constraint(b.iter().map(|&v| (v, 1)), Relation::Le, 1);
        }
        if mode == ConflictMode::NonNegativeEffects {
            for t in 0..n {
                sys.add_constraint([(f[t], 1), (b[t], -1)], Relation::Ge, 0);
            }
        }
        match problem {
            SeparationProblem::Event(s, t) => {
                let mut terms = value_terms(s);
                if props.pure {
                    terms.push((f[t], 1));
                }
                terms.push((b[t], -1));
                sys.add_constraint(terms, Relation::Le, -1);
            }
            SeparationProblem::State(s, s2) => {
                let d = if reverse { self.diff(s2, s) } else { self.diff(s, s2) };
                sys.add_constraint(effect_terms(&d), Relation::Le, -1);
            }
        }
        sys.minimize(std::iter::once((r0, 1)).chain(b.iter().chain(&f).map(|&v| (v, 1))));
        GeneralSystem { sys, b, f }
    }

    fn solve_general_system(&self, system: &GeneralSystem) -> Result<Option<Region>, SolveError> {
        let Feasibility::Feasible(x) = solve_integer_feasibility(&system.sys)? else {
            return Ok(None);
        };
        let value = |v: VarId| x[v].to_u64().expect("region weight fits in u64");
        let backward: Vec<u64> = system.b.iter().map(|&v| value(v)).collect();
        let forward: Vec<u64> = system.f.iter().map(|&v| value(v)).collect();
        let mut region = Region {
            initial: 0,
            backward,
            forward,
        };
        if self.props.pure {
            region = Region::from_effect(0, &region.effects());
        }
        region.initial = minimal_initial(self.lts, &self.psi, &region.backward, &region.effects());
        Ok(Some(region))
    }
}

struct GeneralSystem {
    sys: LinearSystem,
    b: Vec<VarId>,
    f: Vec<VarId>,
}
