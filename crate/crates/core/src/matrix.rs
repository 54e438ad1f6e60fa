//! Square rational matrices and division-free characteristic polynomials.

use std::fmt;

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::ops::tick;
use crate::poly::UniPoly;
use crate::rat::Rat;

/// The commutative-ring operations Berkowitz's algorithm needs.
pub trait Ring: Clone {
    fn zero_elem() -> Self;
    fn one_elem() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Rat {
    fn zero_elem() -> Self {
        Zero::zero()
    }
    fn one_elem() -> Self {
        One::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BiPoly {
    fn zero_elem() -> Self {
        BiPoly::zero()
    }
    fn one_elem() -> Self {
        BiPoly::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Coefficients of `det(zI - A)` in descending powers of `z`, computed
/// without division (Berkowitz).
///
/// Step `r` borders the leading `r x r` block `A_r` with column `S`, row `R`
/// and corner `a`, and multiplies the previous coefficient vector by the
/// lower-triangular Toeplitz matrix with first column
/// `(1, -a, -R S, -R A_r S, ..., -R A_r^(r-1) S)`.
pub fn berkowitz<T: Ring>(a: &[Vec<T>]) -> Vec<T> {
    let n = a.len();
    let mut poly = vec![T::one_elem()];
    for r in 0..n {
        let mut col = vec![T::one_elem(), a[r][r].neg()];
        // v = A_r^k S, starting from S.
        let mut v: Vec<T> = (0..r).map(|i| a[i][r].clone()).collect();
        for k in 0..r {
            let rv = dot(&a[r][..r], &v);
            col.push(rv.neg());
            if k + 1 < r {
                v = (0..r).map(|i| dot(&a[i][..r], &v)).collect();
            }
        }
        let mut next = vec![T::zero_elem(); r + 2];
        for (i, slot) in next.iter_mut().enumerate() {
            for j in 0..=i.min(r) {
                tick(2);
                *slot = slot.add(&col[i - j].mul(&poly[j]));
            }
        }
        poly = next;
    }
    poly
}

fn dot<T: Ring>(a: &[T], b: &[T]) -> T {
    tick(2 * a.len());
    a.iter()
        .zip(b)
        .fold(T::zero_elem(), |acc, (x, y)| acc.add(&x.mul(y)))
}

/// Determinant over any commutative ring: `(-1)^n` times the constant term
/// of the characteristic polynomial.
pub fn det_divfree<T: Ring>(a: &[Vec<T>]) -> T {
    let cp = berkowitz(a);
    let c = cp.last().cloned().unwrap_or_else(T::one_elem);
    if a.len() % 2 == 1 {
        c.neg()
    } else {
        c
    }
}

/// A square matrix of rationals, stored row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct RatMatrix {
    n: usize,
    rows: Vec<Vec<Rat>>,
}

impl RatMatrix {
    pub fn new(rows: Vec<Vec<Rat>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(RatMatrix { n, rows })
    }

    pub fn from_ints(rows: &[&[i64]]) -> Result<Self> {
        Self::new(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rat::int(v)).collect())
                .collect(),
        )
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

    /// The `n x n` Hankel matrix `H[k][l] = entries[k + l]`; needs
    /// `entries.len() >= 2n - 1`.
    pub fn hankel(entries: &[Rat], n: usize) -> Self {
        let rows = (0..n)
            .map(|k| (0..n).map(|l| entries[k + l].clone()).collect())
            .collect();
        RatMatrix { n, rows }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<Rat>] {
        &self.rows
    }

    pub fn get(&self, i: usize, j: usize) -> &Rat {
        &self.rows[i][j]
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.n).all(|i| (0..i).all(|j| self.rows[i][j] == self.rows[j][i]))
    }

    pub fn is_hankel(&self) -> bool {
        (0..self.n).all(|i| {
            (0..self.n).all(|j| i == 0 || j + 1 == self.n || self.rows[i][j] == self.rows[i - 1][j + 1])
        })
    }

    /// Determinant of the leading `k x k` block by exact elimination.
    pub fn leading_minor(&self, k: usize) -> Rat {
        let block: Vec<Vec<Rat>> = self.rows[..k].iter().map(|r| r[..k].to_vec()).collect();
        det_gauss(block)
    }

    pub fn det(&self) -> Rat {
        det_gauss(self.rows.clone())
    }
}

impl fmt::Debug for RatMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, r) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
            write!(f, "[{}]", cells.join(", "))?;
        }
        f.write_str("]")
    }
}

/// `det(zI - M)` as a polynomial in `z`.
pub fn charpoly_divfree(m: &RatMatrix) -> UniPoly {
    let mut desc = berkowitz(&m.rows);
    desc.reverse();
    UniPoly::new(desc)
}

/// Determinant by fraction-producing Gaussian elimination.
pub fn det_gauss(mut a: Vec<Vec<Rat>>) -> Rat {
    let n = a.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return Rat::zero();
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            tick(1 + 2 * (n - col));
            for c in col..n {
                let sub = &f * &a[col][c];
                a[r][c] -= sub;
            }
        }
    }
    det
}

/// Rank of a (not necessarily square) rational matrix.
pub fn rank(rows: &[Vec<Rat>]) -> usize {
    let mut a = rows.to_vec();
    let ncols = a.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(piv, rank);
        let p = a[rank][col].clone();
        for r in rank + 1..a.len() {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..ncols {
                let sub = &f * &a[rank][c];
                a[r][c] -= sub;
            }
        }
        rank += 1;
    }
    rank
}
