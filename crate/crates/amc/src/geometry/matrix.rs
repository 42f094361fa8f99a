//! Small dense matrices over exact rationals. Dimensions stay <= 8, so
//! plain Gaussian elimination is all we need.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::geometry::point::Point;
use crate::rational::Rat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if n == 0 || n > crate::geometry::point::MAX_DIM {
            return Err(Error::DimensionOutOfRange(n));
        }
        for r in &rows {
            if r.len() != n {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
        }
        Ok(RatMatrix { n, rows })
    }

    pub fn identity(n: usize) -> Self {
        let rows = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { Rat::one() } else { Rat::zero() })
                    .collect()
            })
            .collect();
        RatMatrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn transpose(&self) -> RatMatrix {
        let rows = (0..self.n)
            .map(|j| (0..self.n).map(|i| self.rows[i][j].clone()).collect())
            .collect();
        RatMatrix { n: self.n, rows }
    }

    pub fn mul(&self, other: &RatMatrix) -> Result<RatMatrix> {
        if self.n != other.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: other.n,
            });
        }
        let rows = (0..self.n)
            .map(|i| {
                (0..self.n)
                    .map(|j| (0..self.n).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
                    .collect()
            })
            .collect();
        Ok(RatMatrix { n: self.n, rows })
    }

    pub fn apply(&self, p: &Point) -> Result<Point> {
        if p.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: p.dim(),
            });
        }
        let coords = (0..self.n)
            .map(|i| (0..self.n).map(|j| &self.rows[i][j] * p.coord(j)).sum())
            .collect();
        Point::new(coords)
    }

    pub fn scale(&self, k: &Rat) -> RatMatrix {
        RatMatrix {
            n: self.n,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|x| x * k).collect())
                .collect(),
        }
    }

    pub fn det(&self) -> Rat {
        let mut m = self.rows.clone();
        let n = self.n;
        let mut det = Rat::one();
        for col in 0..n {
            let pivot = (col..n).find(|&r| !m[r][col].is_zero());
            let Some(pivot) = pivot else {
                return Rat::zero();
            };
            if pivot != col {
                m.swap(pivot, col);
                det = -det;
            }
            det *= &m[col][col].clone();
            let inv = m[col][col].clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &inv;
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        det
    }

    /// Exact solve `A x = b`; `None` when `A` is singular.
    pub fn solve(&self, b: &Point) -> Result<Option<Point>> {
        if b.dim() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                got: b.dim(),
            });
        }
        let n = self.n;
        let mut m: Vec<Vec<Rat>> = self
            .rows
            .iter()
            .zip(b.coords())
            .map(|(row, bi)| {
                let mut r = row.clone();
                r.push(bi.clone());
                r
            })
            .collect();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Ok(None);
            };
            m.swap(pivot, col);
            let inv = m[col][col].clone();
            for c in col..=n {
                m[col][c] = &m[col][c] / &inv;
            }
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let factor = m[r][col].clone();
                    for c in col..=n {
                        let delta = &factor * &m[col][c];
                        m[r][c] -= delta;
                    }
                }
            }
        }
        let coords = (0..n).map(|i| m[i][n].clone()).collect();
        Ok(Some(Point::new(coords)?))
    }

    /// Exact orthogonality check `M^T M = I`.
    pub fn is_orthogonal(&self) -> bool {
        self.transpose()
            .mul(self)
            .map(|p| p == RatMatrix::identity(self.n))
            .unwrap_or(false)
    }

    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows
            .iter()
            .map(|r| r.iter().map(crate::rational::format_rat).collect())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, ratio};

    #[test]
    fn det_and_solve() {
        let m = RatMatrix::new(vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]]).unwrap();
        assert_eq!(m.det(), rat(5));
        let b = Point::from_ints(&[5, 10]).unwrap();
        let x = m.solve(&b).unwrap().unwrap();
        assert_eq!(x.coords(), &[rat(1), rat(3)]);
    }

    #[test]
    fn orthogonality_of_pythagorean_rotation() {
        let r = RatMatrix::new(vec![
            vec![ratio(4, 5), ratio(-3, 5)],
            vec![ratio(3, 5), ratio(4, 5)],
        ])
        .unwrap();
        assert!(r.is_orthogonal());
        assert_eq!(r.det(), rat(1));
    }

    #[test]
    fn singular_solve_is_none() {
        let m = RatMatrix::new(vec![vec![rat(1), rat(2)], vec![rat(2), rat(4)]]).unwrap();
        assert_eq!(m.det(), rat(0));
        assert!(m.solve(&Point::from_ints(&[1, 1]).unwrap()).unwrap().is_none());
    }
}
