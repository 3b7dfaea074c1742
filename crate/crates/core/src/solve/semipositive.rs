use std::collections::BTreeSet;

use num_integer::Integer;

/// Which vectors of a matrix `M` a solution multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    /// `x` indexes rows: solutions of `Mᵀ·x = 0` (S-invariants of an incidence matrix).
    Rows,
    /// `x` indexes columns: solutions of `M·x = 0` (T-invariants).
    Columns,
}

/// The homogeneous system as a list of "unit images": `images[j]` is the
/// image of the j-th unit vector, so `A·x = Σ x_j · images[j]`.
fn unit_images(matrix: &[Vec<i64>], side: Side) -> Vec<Vec<i64>> {
    match side {
        Side::Rows => matrix.to_vec(),
        Side::Columns => {
            let cols = matrix.first().map_or(0, Vec::len);
            (0..cols)
                .map(|j| matrix.iter().map(|row| row[j]).collect())
                .collect()
        }
    }
}

fn dot(a: &[i64], b: &[i64]) -> i128 {
    a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum()
}

fn dominates(big: &[u64], small: &[u64]) -> bool {
    big.iter().zip(small).all(|(b, s)| b >= s)
}

/// All ⪇-minimal nonzero `x ≥ 0` with `A·x = 0`, that is, the Hilbert basis of
/// the solution monoid, sorted lexicographically.
///
/// Uses the completion procedure of Contejean and Devie: starting from the
/// unit vectors, a partial solution `x` is only extended by `e_j` when
/// `A·x` and `A·e_j` point in opposing directions.
pub fn minimal_semipositive_solutions(matrix: &[Vec<i64>], side: Side) -> Vec<Vec<u64>> {
    let images = unit_images(matrix, side);
    let n = images.len();
    let mut basis: Vec<Vec<u64>> = Vec::new();
    let mut frontier: BTreeSet<Vec<u64>> = (0..n)
        .map(|j| {
            let mut e = vec![0u64; n];
            e[j] = 1;
            e
        })
        .collect();
    let dim = images.first().map_or(0, Vec::len);
    while !frontier.is_empty() {
        let mut open = Vec::new();
        for x in frontier {
            let mut image = vec![0i64; dim];
            for (j, &c) in x.iter().enumerate() {
                if c > 0 {
                    for (acc, &a) in image.iter_mut().zip(&images[j]) {
                        *acc = acc
                            .checked_add(a.checked_mul(c as i64).expect("coefficient overflow"))
                            .expect("coefficient overflow");
                    }
                }
            }
            if image.iter().all(|&v| v == 0) {
                if !basis.iter().any(|b| dominates(&x, b)) {
                    basis.push(x);
                }
            } else {
                open.push((x, image));
            }
        }
        let mut next = BTreeSet::new();
        for (x, image) in open {
            for (j, img) in images.iter().enumerate() {
                if dot(&image, img) >= 0 {
                    continue;
                }
                let mut y = x.clone();
                y[j] += 1;
                if !basis.iter().any(|b| dominates(&y, b)) {
                    next.insert(y);
                }
            }
        }
        frontier = next;
    }
    basis.sort();
    basis
}

fn support(v: &[u64]) -> Vec<usize> {
    (0..v.len()).filter(|&i| v[i] > 0).collect()
}

fn support_subset(a: &[u64], b: &[u64]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y > 0)
}

/// The semipositive solutions of `A·x = 0` with minimal support, each
/// primitive, sorted lexicographically. Computed by Farkas elimination.
///
/// Every semipositive solution's support is a union of these supports, so
/// they decide coveredness; they are in general a proper subset of
/// [`minimal_semipositive_solutions`].
pub fn minimal_support_solutions(matrix: &[Vec<i64>], side: Side) -> Vec<Vec<u64>> {
    let images = unit_images(matrix, side);
    let n = images.len();
    let dim = images.first().map_or(0, Vec::len);
    // Each row: (residual image under A, solution part).
    let mut rows: Vec<(Vec<i64>, Vec<u64>)> = images
        .iter()
        .enumerate()
        .map(|(j, img)| {
            let mut e = vec![0u64; n];
            e[j] = 1;
            (img.clone(), e)
        })
        .collect();
    for i in 0..dim {
        let mut next: Vec<(Vec<i64>, Vec<u64>)> = Vec::new();
        let (positive, negative): (Vec<_>, Vec<_>) = rows
            .iter()
            .filter(|r| r.0[i] != 0)
            .partition(|r| r.0[i] > 0);
        for p in &positive {
            for q in &negative {
                let (a, b) = (p.0[i], -q.0[i]);
                let residual: Vec<i64> = p
                    .0
                    .iter()
                    .zip(&q.0)
                    .map(|(&x, &y)| {
                        (b.checked_mul(x).and_then(|u| a.checked_mul(y).and_then(|v| u.checked_add(v))))
                            .expect("coefficient overflow")
                    })
                    .collect();
                let solution: Vec<u64> = p
                    .1
                    .iter()
                    .zip(&q.1)
                    .map(|(&x, &y)| b as u64 * x + a as u64 * y)
                    .collect();
                next.push(normalize(residual, solution));
            }
        }
        next.extend(rows.into_iter().filter(|r| r.0[i] == 0));
        rows = prune_supersets(next);
    }
    let mut result: Vec<Vec<u64>> = rows.into_iter().map(|r| r.1).collect();
    result.sort();
    result.dedup();
    let minimal: Vec<Vec<u64>> = result
        .iter()
        .filter(|v| {
            !result
                .iter()
                .any(|w| w != *v && support_subset(w, v) && support(w) != support(v))
        })
        .cloned()
        .collect();
    minimal
}

fn normalize(residual: Vec<i64>, solution: Vec<u64>) -> (Vec<i64>, Vec<u64>) {
    let g = solution
        .iter()
        .map(|&x| x as i64)
        .chain(residual.iter().copied())
        .fold(0i64, |acc, x| acc.gcd(&x));
    if g > 1 {
        (
            residual.iter().map(|x| x / g).collect(),
            solution.iter().map(|&x| x / g as u64).collect(),
        )
    } else {
        (residual, solution)
    }
}

/// Drops rows whose solution support strictly contains another row's support,
/// and exact duplicates.
fn prune_supersets(mut rows: Vec<(Vec<i64>, Vec<u64>)>) -> Vec<(Vec<i64>, Vec<u64>)> {
    rows.sort();
    rows.dedup();
    let supports: Vec<Vec<usize>> = rows.iter().map(|r| support(&r.1)).collect();
    rows.iter()
        .enumerate()
        .filter(|(k, r)| {
            !rows.iter().enumerate().any(|(l, s)| {
                l != *k && supports[l] != supports[*k] && support_subset(&s.1, &r.1)
            })
        })
        .map(|(_, r)| r.clone())
        .collect()
}
