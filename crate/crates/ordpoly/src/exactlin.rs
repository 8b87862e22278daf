//! Exact rational linear algebra: fraction-free rank computation and the
//! incremental rank accumulator behind all dimension and facet decisions.
//!
//! Everything here is exact; there is no floating-point path.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::{Error, Result};

/// Exact rational scalar. Always reduced, denominator positive.
pub type Rational = BigRational;

/// Convenience constructor for small rationals.
pub fn rat(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

/// A dense matrix of rationals.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn new(rows: usize, cols: usize, data: Vec<Rational>) -> Self {
        assert_eq!(rows * cols, data.len(), "matrix data must be rectangular");
        Matrix { rows, cols, data }
    }

    pub fn zero(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![Rational::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zero(n, n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn from_int_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let data = rows.iter().flat_map(|r| r.iter().map(|&v| rat(v))).collect();
        Matrix::new(rows.len(), cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }
}

impl std::ops::Index<(usize, usize)> for Matrix {
    type Output = Rational;

    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        &mut self.data[i * self.cols + j]
    }
}

fn clear_row_denominators(row: &[Rational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for v in row {
        lcm = lcm.lcm(v.denom());
    }
    row.iter().map(|v| v.numer() * (&lcm / v.denom())).collect()
}

/// Rank over the rationals via fraction-free (Bareiss) elimination with
/// partial pivoting on exact values.
pub fn linear_rank(m: &Matrix) -> usize {
    let rows: Vec<Vec<BigInt>> = (0..m.rows()).map(|i| clear_row_denominators(m.row(i))).collect();
    bareiss_rank(rows)
}

pub(crate) fn bareiss_rank(mut rows: Vec<Vec<BigInt>>) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cols = rows[0].len();
    let mut rank = 0;
    let mut prev_pivot = BigInt::one();
    for col in 0..cols {
        if rank == rows.len() {
            break;
        }
        // partial pivoting: pick the largest entry to keep growth tame
        let Some(p) = (rank..rows.len())
            .filter(|&r| !rows[r][col].is_zero())
            .max_by_key(|&r| rows[r][col].abs())
        else {
            continue;
        };
        rows.swap(rank, p);
        let pivot = rows[rank][col].clone();
        for r in rank + 1..rows.len() {
            let factor = rows[r][col].clone();
            for c in col..cols {
                let v = &pivot * &rows[r][c] - &factor * &rows[rank][c];
                rows[r][c] = &v / &prev_pivot;
            }
        }
        prev_pivot = pivot;
        rank += 1;
    }
    rank
}

/// Dimension of the affine hull of a nonempty point set:
/// the linear rank of `{p_k - p_0 : k >= 1}`. A single point has rank 0.
pub fn affine_rank(points: &[Vec<Rational>]) -> Result<usize> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let base = &points[0];
    let rows: Vec<Vec<Rational>> = points[1..]
        .iter()
        .map(|p| p.iter().zip(base).map(|(a, b)| a - b).collect())
        .collect();
    if rows.is_empty() {
        return Ok(0);
    }
    let cols = rows[0].len();
    Ok(linear_rank(&Matrix::new(rows.len(), cols, rows.concat())))
}

/// Incremental integer row basis with early exit.
///
/// Rows are reduced fraction-free against the basis accumulated so far, so
/// `rank()` equals the Bareiss rank of all inserted rows. Intermediate
/// entries are minors of the input matrix; for the ±1 entries produced by
/// 0/1 vertex differences, Hadamard bounds every minor of dimension <= 44
/// well inside `i128`, which covers every polytope this crate can build.
#[derive(Clone, Debug, Default)]
pub struct IntRankAccumulator {
    // reduced rows, each with its leading column and the pivot cascade value
    basis: Vec<(usize, Vec<i128>)>,
    pivots: Vec<i128>,
}

impl IntRankAccumulator {
    pub fn new() -> Self {
        IntRankAccumulator::default()
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    /// Inserts a row; returns true if it enlarged the span.
    pub fn insert(&mut self, row: &[i128]) -> bool {
        let mut v: Vec<i128> = row.to_vec();
        let mut prev = 1i128;
        for (k, (lead, b)) in self.basis.iter().enumerate() {
            let pivot = self.pivots[k];
            let factor = v[*lead];
            if factor != 0 {
                for c in 0..v.len() {
                    let t = pivot
                        .checked_mul(v[c])
                        .and_then(|x| x.checked_sub(factor.checked_mul(b[c])?))
                        .expect("integer rank overflow: input outside supported bounds");
                    v[c] = t / prev;
                }
            } else {
                for x in v.iter_mut() {
                    let t = pivot
                        .checked_mul(*x)
                        .expect("integer rank overflow: input outside supported bounds");
                    *x = t / prev;
                }
            }
            prev = pivot;
        }
        let Some(lead) = v.iter().position(|&x| x != 0) else {
            return false;
        };
        self.pivots.push(v[lead]);
        self.basis.push((lead, v));
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Plain Gaussian elimination over `BigRational`, used as an
    /// independent oracle for the fraction-free path.
    pub(crate) fn naive_rank(m: &Matrix) -> usize {
        let mut rows: Vec<Vec<Rational>> = (0..m.rows()).map(|i| m.row(i).to_vec()).collect();
        let cols = m.cols();
        let mut rank = 0;
        for col in 0..cols {
            let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, p);
            let inv = Rational::one() / rows[rank][col].clone();
            for c in col..cols {
                let v = rows[rank][c].clone() * &inv;
                rows[rank][c] = v;
            }
            for r in 0..rows.len() {
                if r != rank && !rows[r][col].is_zero() {
                    let f = rows[r][col].clone();
                    for c in col..cols {
                        let v = rows[r][c].clone() - &f * &rows[rank][c];
                        rows[r][c] = v;
                    }
                }
            }
            rank += 1;
            if rank == rows.len() {
                break;
            }
        }
        rank
    }

    #[test]
    fn rank_examples() {
        assert_eq!(linear_rank(&Matrix::zero(3, 3)), 0);
        assert_eq!(linear_rank(&Matrix::identity(3)), 3);
        assert_eq!(linear_rank(&Matrix::from_int_rows(&[vec![1, 2], vec![2, 4]])), 1);
    }

    #[test]
    fn affine_rank_examples() {
        assert_eq!(affine_rank(&[vec![rat(3), rat(5)]]).unwrap(), 0);
        let collinear = vec![vec![rat(0), rat(0)], vec![rat(1), rat(2)], vec![rat(2), rat(4)]];
        assert_eq!(affine_rank(&collinear).unwrap(), 1);
        assert!(matches!(affine_rank(&[]), Err(Error::EmptyPointSet)));
    }

    #[test]
    fn rank_equals_transpose_rank_and_naive_oracle() {
        // deterministic pseudo-random 0/1 matrices up to 30x30
        let mut state = 0x2545f4914f6cdd1du64;
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        for &(r, c) in &[(5, 7), (12, 12), (20, 9), (30, 30)] {
            let data: Vec<Rational> = (0..r * c).map(|_| rat((next() & 1) as i64)).collect();
            let m = Matrix::new(r, c, data);
            let rank = linear_rank(&m);
            assert_eq!(rank, naive_rank(&m));
            assert_eq!(rank, linear_rank(&m.transpose()));

            let mut acc = IntRankAccumulator::new();
            for i in 0..r {
                let row: Vec<i128> =
                    m.row(i).iter().map(|v| i128::try_from(v.numer()).unwrap()).collect();
                acc.insert(&row);
            }
            assert_eq!(acc.rank(), rank);
        }
    }

    #[test]
    fn affine_rank_translation_invariant() {
        let pts = vec![
            vec![rat(0), rat(0), rat(1)],
            vec![rat(1), rat(0), rat(0)],
            vec![rat(0), rat(1), rat(0)],
            vec![rat(1), rat(1), rat(-1)],
        ];
        let r0 = affine_rank(&pts).unwrap();
        let shifted: Vec<Vec<Rational>> = pts
            .iter()
            .map(|p| p.iter().map(|v| v + rat(7)).collect())
            .collect();
        assert_eq!(affine_rank(&shifted).unwrap(), r0);
        let mut permuted = pts.clone();
        permuted.rotate_left(2);
        assert_eq!(affine_rank(&permuted).unwrap(), r0);
    }
}
