//! Exact Gaussian elimination over the rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Solves the square system `m x = rhs` exactly.
pub(crate) fn solve(m: &[Vec<BigInt>], rhs: &[BigInt]) -> Result<Vec<BigRational>> {
    let n = m.len();
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<BigRational>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            assert_eq!(row.len(), n);
            row.iter()
                .chain(std::iter::once(b))
                .map(|x| BigRational::from_integer(x.clone()))
                .collect()
        })
        .collect();

    for col in 0..n {
        let pivot = (col..n)
            .find(|&r| !a[r][col].is_zero())
            .ok_or(Error::SingularSystem)?;
        a.swap(col, pivot);
        let inv = BigRational::one() / &a[col][col];
        for x in a[col].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = a[col].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r == col || row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row).skip(col) {
                *x -= &f * p;
            }
        }
    }
    Ok(a.into_iter().map(|row| row[n].clone()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn solves_small_system() {
        let m = vec![ints(&[2, 1]), ints(&[1, 3])];
        let x = solve(&m, &ints(&[3, 5])).unwrap();
        assert_eq!(x[0], BigRational::new(4.into(), 5.into()));
        assert_eq!(x[1], BigRational::new(7.into(), 5.into()));
    }

    #[test]
    fn needs_pivoting() {
        let m = vec![ints(&[0, 1]), ints(&[1, 0])];
        let x = solve(&m, &ints(&[7, 9])).unwrap();
        assert_eq!(
            x,
            vec![
                BigRational::from_integer(9.into()),
                BigRational::from_integer(7.into())
            ]
        );
    }

    #[test]
    fn singular() {
        let m = vec![ints(&[1, 2]), ints(&[2, 4])];
        assert_eq!(
            solve(&m, &ints(&[1, 2])).unwrap_err(),
            Error::SingularSystem
        );
    }
}
