//! Real-rootedness of a one-parameter family through moment matrices.
//!
//! For `p` of degree `m` with leading coefficient `c`, the Hankel matrix of
//! power sums `M[k][l] = m_(k+l)` is positive semidefinite exactly when `p`
//! is real-rooted. Scaling by `c^ν` with `ν >= 2m - 2` makes every entry
//! polynomial in the family parameter, so the elementary symmetric functions
//! `e_k` of the scaled matrix are polynomials `q_k(γ)`, and the family is
//! real-rooted for all `γ` iff each `q_k` is nonnegative on the real line.

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::family::{admissible_nodes, nudge_negative, FamilyVerdict, ParamPoly};
use crate::interp::Interpolator;
use crate::matrix::{charpoly_divfree, RatMatrix};
use crate::ops::tick;
use crate::poly::UniPoly;
use crate::rat::{self, Rat};
use crate::univar::{find_negative_witness, is_nonnegative_on_r};

/// Power sums `m_0, m_1, ...` of the roots of a polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentVector {
    values: Vec<Rat>,
}

impl MomentVector {
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &Rat {
        &self.values[k]
    }
}

/// Power sums `m_0..=m_upto` of the roots of `p` by Newton's identities.
///
/// With `b_i = a_(n-i) / a_n`:
/// `m_k = -k b_k - Σ_(i<k) b_i m_(k-i)` for `k <= n`, and
/// `m_k = -Σ_(i<=n) b_i m_(k-i)` beyond.
pub fn newton_moments(p: &UniPoly, upto: usize) -> Result<MomentVector> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    let lc = p.leading().unwrap();
    let b: Vec<Rat> = (0..=n).map(|i| p.coeff(n - i) / lc).collect();
    tick(n);
    let mut m = vec![rat::int(n as i64)];
    for k in 1..=upto {
        let mut acc = if k <= n {
            -(&b[k] * rat::int(k as i64))
        } else {
            Rat::zero()
        };
        for i in 1..=k.min(n) {
            if i < k {
                acc -= &b[i] * &m[k - i];
            }
        }
        tick(2 * k.min(n) + 1);
        m.push(acc);
    }
    Ok(MomentVector { values: m })
}

/// Smallest admissible scaling exponent for a family of degree `m`.
pub fn min_nu(m: usize) -> usize {
    (2 * m).saturating_sub(2)
}

/// The `m x m` matrix `c_m(γ0)^ν · m_(k+l)(p_γ0)`.
pub fn hankel_at(family: &ParamPoly, gamma0: &Rat, nu: usize) -> Result<RatMatrix> {
    let m = family.degree().ok_or(Error::ZeroPolynomial)?;
    let min = min_nu(m);
    if nu % 2 == 1 || nu < min {
        return Err(Error::InvalidExponent { nu, min });
    }
    let p = family.specialize(gamma0);
    if p.degree() != Some(m) {
        return Err(Error::SkipNode(gamma0.clone()));
    }
    let scale = rat::pow(p.leading().unwrap(), nu);
    let moments = newton_moments(&p, min)?;
    tick(moments.values.len());
    let entries: Vec<Rat> = moments.values.iter().map(|v| v * &scale).collect();
    Ok(RatMatrix::hankel(&entries, m))
}

/// `e_1..=e_m` of a matrix, read off its characteristic polynomial.
fn elementary_symmetric(h: &RatMatrix) -> Vec<Rat> {
    let cp = charpoly_divfree(h);
    let m = h.dim();
    (1..=m)
        .map(|k| {
            let c = cp.coeff(m - k);
            if k % 2 == 1 {
                -c
            } else {
                c
            }
        })
        .collect()
}

/// The polynomials `q_k(γ) = e_k(H(γ))`, `k = 1..=m`.
pub fn simple_rr(family: &ParamPoly) -> Result<Vec<UniPoly>> {
    let m = family.degree().ok_or(Error::ZeroPolynomial)?;
    if m == 0 {
        return Ok(Vec::new());
    }
    let d = family.gamma_degree();
    let nu = min_nu(m);
    let bound = m * d * nu;
    let nodes = admissible_nodes(family.leading().unwrap(), bound + 1);
    let mut columns = vec![Vec::with_capacity(nodes.len()); m];
    for g in &nodes {
        let e = elementary_symmetric(&hankel_at(family, g, nu)?);
        for (col, v) in columns.iter_mut().zip(e) {
            col.push(v);
        }
    }
    let interp = Interpolator::new(nodes)?;
    columns.iter().map(|v| interp.interpolate(v)).collect()
}

/// Decides whether every specialization of `family` is real-rooted.
pub fn family_real_rooted_simple(family: &ParamPoly) -> Result<FamilyVerdict> {
    let q = simple_rr(family)?;
    let leading = family.leading().unwrap();
    for qk in &q {
        if is_nonnegative_on_r(qk) {
            continue;
        }
        // q_k(γ) < 0 forces H(γ) != 0, so the leading coefficient is nonzero
        // there and the moment matrix is not semidefinite.
        let start = find_negative_witness(qk).expect("negative somewhere");
        debug_assert!(qk.eval(&start).is_negative());
        return Ok(FamilyVerdict {
            real_rooted: false,
            witness: nudge_negative(qk, leading, &start),
        });
    }
    Ok(FamilyVerdict::holds())
}
