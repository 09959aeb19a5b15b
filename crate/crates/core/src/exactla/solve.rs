use super::{FieldSpec, Scalar};
use crate::error::{Error, Result};

/// Solves `A x = b` by exact Gauss–Jordan elimination.
///
/// `rows` is `A` row by row. Returns `Ok(None)` when the system is
/// inconsistent; otherwise one solution with every free variable set to zero.
pub fn solve_linear(
    field: FieldSpec,
    rows: Vec<Vec<Scalar>>,
    rhs: Vec<Scalar>,
) -> Result<Option<Vec<Scalar>>> {
    if rows.len() != rhs.len() {
        return Err(Error::Shape {
            expected: rows.len(),
            found: rhs.len(),
        });
    }
    let n = rows.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Scalar>> = Vec::with_capacity(rows.len());
    for (mut row, b) in rows.into_iter().zip(rhs) {
        if row.len() != n {
            return Err(Error::Shape {
                expected: n,
                found: row.len(),
            });
        }
        for s in row.iter().chain(std::iter::once(&b)) {
            field.ensure_same(s.field())?;
        }
        row.push(b);
        aug.push(row);
    }

    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..aug.len()).find(|&i| !aug[i][c].is_zero()) else {
            continue;
        };
        aug.swap(r, p);
        let inv = aug[r][c].inverse()?;
        for x in aug[r].iter_mut() {
            *x = &*x * &inv;
        }
        let pivot_row = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = &*x - &(&factor * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == aug.len() {
            break;
        }
    }

    if aug[r..].iter().any(|row| !row[n].is_zero()) {
        return Ok(None);
    }
    let mut x = vec![Scalar::zero(field); n];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = aug[i][n].clone();
    }
    Ok(Some(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(v: &[i64]) -> Vec<Scalar> {
        v.iter()
            .map(|&x| Scalar::from_i64(FieldSpec::Rationals, x))
            .collect()
    }

    #[test]
    fn unique_solution() {
        let x = solve_linear(
            FieldSpec::Rationals,
            vec![row(&[2, 1]), row(&[1, 3])],
            row(&[3, 5]),
        )
        .unwrap()
        .unwrap();
        assert_eq!(x[0].to_string(), "4/5");
        assert_eq!(x[1].to_string(), "7/5");
    }

    #[test]
    fn inconsistent() {
        let x = solve_linear(
            FieldSpec::Rationals,
            vec![row(&[1, 1]), row(&[2, 2])],
            row(&[1, 3]),
        )
        .unwrap();
        assert!(x.is_none());
    }

    #[test]
    fn underdetermined_sets_free_to_zero() {
        let x = solve_linear(FieldSpec::Rationals, vec![row(&[0, 1, 1])], row(&[2]))
            .unwrap()
            .unwrap();
        assert_eq!(x, row(&[0, 2, 0]));
    }

    #[test]
    fn prime_field() {
        let f = FieldSpec::prime(7).unwrap();
        let r = |v: &[i64]| {
            v.iter()
                .map(|&x| Scalar::from_i64(f, x))
                .collect::<Vec<_>>()
        };
        let x = solve_linear(f, vec![r(&[3])], r(&[1])).unwrap().unwrap();
        assert_eq!(x, r(&[5]));
    }
}
