use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Rational;

/// Reduced row echelon form in place. Returns the pivot columns.
pub(crate) fn row_reduce(m: &mut [Vec<Rational>], dim: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..dim {
        let Some(i) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, i);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let factor = m[i][c].clone();
                for j in c..dim {
                    let delta = &factor * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == m.len() {
            break;
        }
    }
    pivots
}

fn to_rational_rows(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
    rows.iter()
        .map(|row| row.iter().map(|&x| Rational::from_integer(x.into())).collect())
        .collect()
}

pub fn rank(rows: &[Vec<i64>], dim: usize) -> usize {
    let mut m = to_rational_rows(rows);
    row_reduce(&mut m, dim).len()
}

/// Scales a rational vector to the primitive integer vector on the same ray
/// whose first nonzero entry is positive.
pub(crate) fn primitive(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let mut ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !gcd.is_zero() {
        for x in ints.iter_mut() {
            *x = &*x / &gcd;
        }
    }
    if ints.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in ints.iter_mut() {
            *x = -&*x;
        }
    }
    ints
}

/// A basis of `{x : row . x = 0 for every row}` made of primitive integer
/// vectors, one per free column of the reduced echelon form, in column order.
/// Its size is `dim - rank`.
pub fn integer_kernel_basis(rows: &[Vec<i64>], dim: usize) -> Vec<Vec<BigInt>> {
    assert!(rows.iter().all(|r| r.len() == dim), "rows must have dimension {dim}");
    let mut m = to_rational_rows(rows);
    let pivots = row_reduce(&mut m, dim);
    let mut is_pivot = vec![false; dim];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    (0..dim)
        .filter(|&f| !is_pivot[f])
        .map(|free| {
            let mut v = vec![Rational::zero(); dim];
            v[free] = Rational::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][free].clone();
            }
            primitive(&v)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dot(row: &[i64], v: &[BigInt]) -> BigInt {
        row.iter().zip(v).map(|(&a, b)| BigInt::from(a) * b).sum()
    }

    #[test]
    fn all_ones_row() {
        let rows = vec![vec![1, 1, 1, 1]];
        let basis = integer_kernel_basis(&rows, 4);
        assert_eq!(basis.len(), 3);
        for v in &basis {
            assert!(dot(&rows[0], v).is_zero());
        }
        let as_i64: Vec<Vec<i64>> = basis
            .iter()
            .map(|v| v.iter().map(|x| i64::try_from(x).unwrap()).collect())
            .collect();
        assert_eq!(rank(&as_i64, 4), 3);
        assert_eq!(as_i64[0], vec![1, -1, 0, 0]);
    }

    #[test]
    fn no_rows_gives_unit_vectors() {
        let basis = integer_kernel_basis(&[], 2);
        let one = BigInt::from(1);
        let zero = BigInt::from(0);
        assert_eq!(basis, vec![vec![one.clone(), zero.clone()], vec![zero, one]]);
    }

    #[test]
    fn full_rank_has_trivial_kernel() {
        assert!(integer_kernel_basis(&[vec![1, 2], vec![3, 4]], 2).is_empty());
    }

    #[test]
    fn basis_vectors_are_primitive() {
        let basis = integer_kernel_basis(&[vec![2, 3, 0]], 3);
        let expect: Vec<Vec<BigInt>> = vec![
            vec![3.into(), (-2).into(), 0.into()],
            vec![0.into(), 0.into(), 1.into()],
        ];
        assert_eq!(basis, expect);
    }
}
