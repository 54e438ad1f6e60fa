//! Linear operators on polynomials of bounded degree and whether they map
//! real-rooted polynomials to real-rooted polynomials.
//!
//! `T: R_n[x] -> R_m[x]` preserves real-rootedness iff its symbol
//! `T[(x + y)^n] = Σ_k C(n, k) T[x^k](x) y^(n-k)` is real stable.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::family::binomial;
use crate::matrix::rank;
use crate::poly::UniPoly;
use crate::rat::{self, Rat};
use crate::stability::{is_real_stable, Algorithm, StabilityVerdict};
use crate::univar::is_real_rooted;

/// `matrix[r][k]` is the coefficient of `x^r` in `T[x^k]`; there are `m + 1`
/// rows and `n + 1` columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyOperator {
    n: usize,
    m: usize,
    matrix: Vec<Vec<Rat>>,
}

impl PolyOperator {
    pub fn new(n: usize, m: usize, matrix: Vec<Vec<Rat>>) -> Result<Self> {
        if matrix.len() != m + 1 {
            return Err(Error::OperatorShape {
                what: "rows",
                found: matrix.len(),
                expected: m + 1,
            });
        }
        if let Some(row) = matrix.iter().find(|r| r.len() != n + 1) {
            return Err(Error::OperatorShape {
                what: "columns",
                found: row.len(),
                expected: n + 1,
            });
        }
        Ok(PolyOperator { n, m, matrix })
    }

    /// The operator with `T[x^k] = images[k]` on `R_n[x]`, `n = images.len() - 1`.
    pub fn from_images(images: &[UniPoly]) -> Result<Self> {
        let n = images.len().checked_sub(1).ok_or(Error::EmptySize)?;
        let m = images.iter().filter_map(UniPoly::degree).max().unwrap_or(0);
        let matrix = (0..=m)
            .map(|r| images.iter().map(|img| img.coeff(r)).collect())
            .collect();
        Self::new(n, m, matrix)
    }

    pub fn identity(n: usize) -> Self {
        let images: Vec<UniPoly> = (0..=n).map(|k| UniPoly::monomial(rat::int(1), k)).collect();
        Self::from_images(&images).unwrap()
    }

    /// `d/dx` on `R_n[x]`, `n >= 1`.
    pub fn derivative(n: usize) -> Self {
        let images: Vec<UniPoly> = (0..=n)
            .map(|k| UniPoly::monomial(rat::int(1), k).derivative())
            .collect();
        Self::new(n, n - 1, transpose_images(&images, n - 1)).unwrap()
    }

    /// `p -> q · p` on `R_n[x]`.
    pub fn multiplication(n: usize, q: &UniPoly) -> Self {
        let images: Vec<UniPoly> = (0..=n)
            .map(|k| q * &UniPoly::monomial(rat::int(1), k))
            .collect();
        let m = n + q.degree().unwrap_or(0);
        Self::new(n, m, transpose_images(&images, m)).unwrap()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn matrix(&self) -> &[Vec<Rat>] {
        &self.matrix
    }

    /// `T[x^k]`.
    pub fn image(&self, k: usize) -> UniPoly {
        UniPoly::new(self.matrix.iter().map(|row| row[k].clone()).collect())
    }

    /// `T[p]`; coefficients of `p` above `x^n` are ignored.
    pub fn apply(&self, p: &UniPoly) -> UniPoly {
        (0..=self.n).fold(UniPoly::zero(), |acc, k| {
            let c = p.coeff(k);
            if c.is_zero() {
                acc
            } else {
                &acc + &self.image(k).scale(&c)
            }
        })
    }

    pub fn rank(&self) -> usize {
        rank(&self.matrix)
    }
}

fn transpose_images(images: &[UniPoly], m: usize) -> Vec<Vec<Rat>> {
    (0..=m)
        .map(|r| images.iter().map(|img| img.coeff(r)).collect())
        .collect()
}

/// `Σ_k C(n, k) T[x^k](x) y^(n-k)`.
pub fn symbol(t: &PolyOperator) -> BiPoly {
    let n = t.n;
    BiPoly::from_terms((0..=n).flat_map(|k| {
        let b = binomial(n, k);
        t.matrix
            .iter()
            .enumerate()
            .filter(|(_, row)| !row[k].is_zero())
            .map(move |(r, row)| ((r, n - k), &row[k] * &b))
            .collect::<Vec<_>>()
    }))
}

/// Cases where the single-symbol criterion is known to be delicate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OperatorWarning {
    ZeroSymbol,
    LowRank(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OperatorVerdict {
    /// Stability of the symbol; `stable` means the operator preserves
    /// real-rootedness.
    pub verdict: StabilityVerdict,
    pub symbol: BiPoly,
    pub warning: Option<OperatorWarning>,
}

impl OperatorVerdict {
    pub fn preserver(&self) -> bool {
        self.verdict.stable
    }
}

pub fn preserves_real_rootedness(t: &PolyOperator, algorithm: Algorithm) -> Result<OperatorVerdict> {
    let symbol = symbol(t);
    let verdict = is_real_stable(&symbol, algorithm)?;
    let r = t.rank();
    let warning = if symbol.is_zero() {
        Some(OperatorWarning::ZeroSymbol)
    } else if r <= 2 {
        Some(OperatorWarning::LowRank(r))
    } else {
        None
    };
    Ok(OperatorVerdict {
        verdict,
        symbol,
        warning,
    })
}

/// A random real-rooted polynomial of degree at most `n`: a product of
/// linear factors with small rational roots.
pub fn random_real_rooted(rng: &mut ChaCha8Rng, n: usize) -> UniPoly {
    let deg = rng.gen_range(0..=n);
    let roots: Vec<Rat> = (0..deg)
        .map(|_| rat::ratio(rng.gen_range(-12..=12), rng.gen_range(1..=4)))
        .collect();
    let lc = rat::int(if rng.gen_bool(0.5) { 1 } else { -1 } * rng.gen_range(1..=5));
    UniPoly::from_roots(&roots).scale(&lc)
}

/// Applies `t` to `samples` random real-rooted inputs and returns the first
/// input whose image is not real-rooted.
pub fn spot_check(t: &PolyOperator, samples: usize, seed: u64) -> Option<UniPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples)
        .map(|_| random_real_rooted(&mut rng, t.n))
        .find(|r| !is_real_rooted(&t.apply(r)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn eval_at_zero_times(q: &UniPoly, n: usize) -> PolyOperator {
        let mut images = vec![UniPoly::zero(); n + 1];
        images[0] = q.clone();
        PolyOperator::from_images(&images).unwrap()
    }

    #[test]
    fn symbol_examples() {
        let s = &BiPoly::x() + &BiPoly::y();
        assert_eq!(symbol(&PolyOperator::identity(2)), s.pow(2));
        assert_eq!(symbol(&PolyOperator::derivative(2)), s.scale(&int(2)));
        let t = eval_at_zero_times(&UniPoly::from_ints(&[1, 0, 1]), 2);
        assert_eq!(
            symbol(&t),
            BiPoly::from_int_terms(&[(2, 2, 1), (0, 2, 1)])
        );
    }

    #[test]
    fn derivative_matrix_layout() {
        let d = PolyOperator::derivative(2);
        let expect: Vec<Vec<Rat>> = vec![vec![int(0), int(1), int(0)], vec![int(0), int(0), int(2)]];
        assert_eq!(d.matrix(), expect.as_slice());
        assert_eq!(d.apply(&UniPoly::from_ints(&[5, 3, 1])), UniPoly::from_ints(&[3, 2]));
    }

    #[test]
    fn shape_errors() {
        assert_eq!(
            PolyOperator::new(2, 2, vec![vec![int(0); 3]; 2]),
            Err(Error::OperatorShape { what: "rows", found: 2, expected: 3 })
        );
        assert_eq!(
            PolyOperator::new(2, 1, vec![vec![int(0); 3], vec![int(0); 2]]),
            Err(Error::OperatorShape { what: "columns", found: 2, expected: 3 })
        );
    }

    #[test]
    fn classification() {
        let alg = Algorithm::Fast;
        assert!(preserves_real_rootedness(&PolyOperator::derivative(2), alg).unwrap().preserver());
        assert!(preserves_real_rootedness(&PolyOperator::identity(3), alg).unwrap().preserver());
        let t = eval_at_zero_times(&UniPoly::from_ints(&[1, 0, 1]), 2);
        let v = preserves_real_rootedness(&t, alg).unwrap();
        assert!(!v.preserver());
        assert_eq!(v.warning, Some(OperatorWarning::LowRank(1)));
        assert!(spot_check(&t, 50, 1).is_some());
        let mul = PolyOperator::multiplication(3, &UniPoly::from_ints(&[2, 3]));
        assert!(preserves_real_rootedness(&mul, alg).unwrap().preserver());
        assert_eq!(spot_check(&mul, 50, 2), None);
    }

    #[test]
    fn zero_operator_warns() {
        let z = PolyOperator::new(1, 0, vec![vec![int(0), int(0)]]).unwrap();
        let v = preserves_real_rootedness(&z, Algorithm::Fast).unwrap();
        assert!(v.preserver());
        assert_eq!(v.warning, Some(OperatorWarning::ZeroSymbol));
    }

    #[test]
    fn symbol_degrees() {
        let mul = PolyOperator::multiplication(3, &UniPoly::from_ints(&[-1, 0, 4]));
        let s = symbol(&mul);
        assert!(s.degree_y().unwrap() <= 3);
        assert!(s.degree_x().unwrap() <= 5);
    }
}
