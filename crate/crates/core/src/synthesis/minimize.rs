/// Picks a subset of regions that still solves every problem.
///
/// `solves[r]` lists the problems (by index) region `r` solves. A region that
/// is the only solver of some problem is required. Problems left over after
/// the required regions are covered by the first region, in the given order,
/// that solves them. Returns the kept region indices in ascending order.
pub fn minimize_regions(num_problems: usize, solves: &[Vec<usize>]) -> Vec<usize> {
    let mut solvers: Vec<Vec<usize>> = vec![Vec::new(); num_problems];
    for (r, problems) in solves.iter().enumerate() {
        for &p in problems {
            if !solvers[p].contains(&r) {
                solvers[p].push(r);
            }
        }
    }
    let mut keep = vec![false; solves.len()];
    for list in &solvers {
        if let [only] = list.as_slice() {
            keep[*only] = true;
        }
    }
    let mut covered = vec![false; num_problems];
    for (r, problems) in solves.iter().enumerate() {
        if keep[r] {
            for &p in problems {
                covered[p] = true;
            }
        }
    }
    for p in 0..num_problems {
        if covered[p] {
            continue;
        }
        if let Some(&r) = solvers[p].first() {
            keep[r] = true;
            for &q in &solves[r] {
                covered[q] = true;
            }
        }
    }
    (0..solves.len()).filter(|&r| keep[r]).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn duplicate_regions_collapse() {
        assert_eq!(minimize_regions(1, &[vec![0], vec![0]]), vec![0]);
    }

    #[test]
    fn unique_solver_is_required() {
        // A solves P0; B solves P0 and P1, and is the only solver of P1.
        assert_eq!(minimize_regions(2, &[vec![0], vec![0, 1]]), vec![1]);
    }

    #[test]
    fn unsolved_problems_are_ignored() {
        assert_eq!(minimize_regions(3, &[vec![1], vec![1]]), vec![0]);
    }
}
