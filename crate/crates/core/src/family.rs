//! One-parameter families `t -> Σ c_k(γ) t^k` and the two univariate
//! polynomials a bivariate input is reduced to.

use num_traits::{One, Zero};

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::ops::tick;
use crate::poly::UniPoly;
use crate::rat::{self, Rat};

/// A polynomial in `t` whose coefficients are polynomials in `γ`.
///
/// `coeffs[k]` is the coefficient of `t^k`; the vector is trimmed so the last
/// entry is never identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct ParamPoly {
    coeffs: Vec<UniPoly>,
}

impl ParamPoly {
    pub fn new(mut coeffs: Vec<UniPoly>) -> Self {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        ParamPoly { coeffs }
    }

    /// A family that does not depend on `γ`.
    pub fn constant(p: &UniPoly) -> Self {
        Self::new(p.coeffs().iter().cloned().map(UniPoly::constant).collect())
    }

    /// Builds a family from integer coefficient rows: `rows[k]` lists the
    /// ascending `γ`-coefficients of the coefficient of `t^k`.
    pub fn from_int_rows(rows: &[&[i64]]) -> Self {
        Self::new(rows.iter().map(|r| UniPoly::from_ints(r)).collect())
    }

    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True degree in `t`; `None` for the zero family.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Largest `γ`-degree among the coefficients (0 for the zero family).
    pub fn gamma_degree(&self) -> usize {
        self.coeffs.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }

    /// The coefficient of `t^m`, which is not identically zero.
    pub fn leading(&self) -> Option<&UniPoly> {
        self.coeffs.last()
    }

    /// Evaluates every coefficient at `γ0`.
    pub fn specialize(&self, gamma0: &Rat) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| c.eval(gamma0)).collect())
    }

    pub fn eval(&self, gamma0: &Rat, t0: &Rat) -> Rat {
        self.specialize(gamma0).eval(t0)
    }
}

pub fn specialize(f: &ParamPoly, gamma0: &Rat) -> UniPoly {
    f.specialize(gamma0)
}

/// The family `q_γ(t) = p(γ + t, t)`.
///
/// Expanding `(γ + t)^i = Σ_l C(i, l) γ^(i-l) t^l`, the term `c_ij x^i y^j`
/// contributes `c_ij C(i, l) γ^(i-l)` to the coefficient of `t^(l+j)`.
pub fn shift_substitute(p: &BiPoly) -> ParamPoly {
    let Some(m) = p.total_degree() else {
        return ParamPoly::default();
    };
    let d = p.degree_x().unwrap_or(0);
    let mut table = vec![vec![Rat::zero(); d + 1]; m + 1];
    let binoms = binomial_rows(d);
    for (i, j, c) in p.terms() {
        for (l, b) in binoms[i].iter().enumerate() {
            tick(2);
            table[l + j][i - l] += c * b;
        }
    }
    ParamPoly::new(table.into_iter().map(UniPoly::new).collect())
}

/// The top homogeneous form along the segment from `(0, 1)` to `(1, 0)`:
/// `r(t) = Σ_{i+j=m} c_ij t^i (1 - t)^j` with `m` the total degree.
pub fn edge_restriction(p: &BiPoly) -> Result<UniPoly> {
    let m = p.total_degree().ok_or(Error::ZeroPolynomial)?;
    let t = UniPoly::x();
    let one_minus_t = UniPoly::from_ints(&[1, -1]);
    let tp: Vec<UniPoly> = (0..=m).map(|k| t.pow(k)).collect();
    let sp: Vec<UniPoly> = (0..=m).map(|k| one_minus_t.pow(k)).collect();
    Ok(p
        .terms()
        .filter(|&(i, j, _)| i + j == m)
        .fold(UniPoly::zero(), |acc, (i, j, c)| {
            &acc + &(&tp[i] * &sp[j]).scale(c)
        }))
}

/// Outcome of a real-rootedness test over every `γ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyVerdict {
    pub real_rooted: bool,
    /// A parameter value whose specialization is not real-rooted.
    pub witness: Option<Rat>,
}

impl FamilyVerdict {
    pub fn holds() -> Self {
        FamilyVerdict {
            real_rooted: true,
            witness: None,
        }
    }
}

/// Integers `0, 1, -1, 2, -2, ...`.
pub(crate) fn small_integers() -> impl Iterator<Item = Rat> {
    (0i64..).flat_map(|k| {
        if k == 0 {
            vec![Rat::zero()]
        } else {
            vec![rat::int(k), rat::int(-k)]
        }
    })
}

/// The first `count` small integers at which `leading` does not vanish.
pub(crate) fn admissible_nodes(leading: &UniPoly, count: usize) -> Vec<Rat> {
    small_integers()
        .filter(|g| !leading.eval(g).is_zero())
        .take(count)
        .collect()
}

/// A point near `start` where `q` is negative and `leading` is not zero.
/// `q(start) < 0` guarantees success since `leading` has finitely many roots.
pub(crate) fn nudge_negative(q: &UniPoly, leading: &UniPoly, start: &Rat) -> Option<Rat> {
    let ok = |g: &Rat| q.eval(g) < Rat::zero() && !leading.eval(g).is_zero();
    if ok(start) {
        return Some(start.clone());
    }
    let mut step = Rat::one();
    for _ in 0..256 {
        step /= rat::int(2);
        for g in [start + &step, start - &step] {
            if ok(&g) {
                return Some(g);
            }
        }
    }
    None
}

/// A small integer where neither `q` nor `leading` vanishes.
pub(crate) fn generic_point(q: &UniPoly, leading: &UniPoly) -> Rat {
    small_integers()
        .find(|g| !q.eval(g).is_zero() && !leading.eval(g).is_zero())
        .expect("nonzero polynomials have finitely many roots")
}

/// Rows `C(i, 0..=i)` for `i = 0..=n`.
pub(crate) fn binomial_rows(n: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<Rat>> = vec![vec![Rat::one()]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![Rat::one(); i + 1];
        for k in 1..i {
            row[k] = &prev[k - 1] + &prev[k];
        }
        rows.push(row);
    }
    rows
}

pub(crate) fn binomial(n: usize, k: usize) -> Rat {
    (0..k).fold(Rat::one(), |acc, i| {
        acc * rat::int((n - i) as i64) / rat::int((i + 1) as i64)
    })
}
