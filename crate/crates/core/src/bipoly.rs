//! Sparse bivariate polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::poly::UniPoly;
use crate::rat::{self, Rat};

/// A polynomial in `x` and `y` stored as a map from exponent pairs `(i, j)`
/// (power of `x`, power of `y`) to nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::from_terms([((0, 0), c)])
    }

    pub fn x() -> Self {
        Self::from_terms([((1, 0), Rat::one())])
    }

    pub fn y() -> Self {
        Self::from_terms([((0, 1), Rat::one())])
    }

    /// Builds a polynomial from `((i, j), c)` pairs; repeated exponents are
    /// summed and zero coefficients dropped.
    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), Rat)>) -> Self {
        let mut map: BTreeMap<(usize, usize), Rat> = BTreeMap::new();
        for (e, c) in terms {
            *map.entry(e).or_insert_with(Rat::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        BiPoly { terms: map }
    }

    /// Integer coefficients, convenient in tests and generators.
    pub fn from_int_terms(terms: &[(usize, usize, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(i, j, c)| ((i, j), rat::int(c))))
    }

    /// Embeds a univariate polynomial in `x`.
    pub fn from_x_poly(p: &UniPoly) -> Self {
        Self::from_terms(p.coeffs().iter().cloned().enumerate().map(|(i, c)| ((i, 0), c)))
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &Rat)> + '_ {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn coeff(&self, i: usize, j: usize) -> Rat {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|&e| e == (0, 0))
    }

    /// `None` for the zero polynomial.
    pub fn degree_x(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, _)| i).max()
    }

    pub fn degree_y(&self) -> Option<usize> {
        self.terms.keys().map(|&(_, j)| j).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(i, j)| i + j).max()
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        self.terms
            .iter()
            .map(|(&(i, j), c)| c * rat::pow(x, i) * rat::pow(y, j))
            .sum()
    }

    /// The restriction `t -> p(e1 t + x1, e2 t + x2)`.
    pub fn restrict_line(&self, e1: &Rat, x1: &Rat, e2: &Rat, x2: &Rat) -> UniPoly {
        let lx = UniPoly::new(vec![x1.clone(), e1.clone()]);
        let ly = UniPoly::new(vec![x2.clone(), e2.clone()]);
        let px = powers(&lx, self.degree_x().unwrap_or(0));
        let py = powers(&ly, self.degree_y().unwrap_or(0));
        self.terms.iter().fold(UniPoly::zero(), |acc, (&(i, j), c)| {
            &acc + &(&px[i] * &py[j]).scale(c)
        })
    }

    /// `p(x + c, y)`.
    pub fn shift_x(&self, c: &Rat) -> Self {
        let lin = UniPoly::new(vec![c.clone(), Rat::one()]);
        let pw = powers(&lin, self.degree_x().unwrap_or(0));
        Self::from_terms(self.terms.iter().flat_map(|(&(i, j), a)| {
            pw[i]
                .coeffs()
                .iter()
                .enumerate()
                .map(move |(k, b)| ((k, j), a * b))
                .collect::<Vec<_>>()
        }))
    }

    /// `∂p/∂x`.
    pub fn partial_x(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|(&(i, _), _)| i > 0)
                .map(|(&(i, j), c)| ((i - 1, j), c * rat::int(i as i64))),
        )
    }

    /// Swaps the roles of `x` and `y`.
    pub fn swap_xy(&self) -> Self {
        Self::from_terms(self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())))
    }

    pub fn pow(&self, e: usize) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::from_terms(self.terms.iter().map(|(&e, a)| (e, a * c)))
    }
}

fn powers(base: &UniPoly, max: usize) -> Vec<UniPoly> {
    let mut out = Vec::with_capacity(max + 1);
    out.push(UniPoly::one());
    for k in 1..=max {
        let next = &out[k - 1] * base;
        out.push(next);
    }
    out
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(
            self.terms
                .iter()
                .chain(rhs.terms.iter())
                .map(|(&e, c)| (e, c.clone())),
        )
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        self + &(-rhs)
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        BiPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        BiPoly::from_terms(self.terms.iter().flat_map(|(&(i, j), a)| {
            rhs.terms
                .iter()
                .map(move |(&(k, l), b)| ((i + k, j + l), a * b))
        }))
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        // Graded order: total degree, then power of x, both descending.
        let mut terms: Vec<_> = self.terms().collect();
        terms.sort_by(|a, b| (b.0 + b.1, b.0).cmp(&(a.0 + a.1, a.0)));
        for (n, (i, j, c)) in terms.into_iter().enumerate() {
            let mag = c.abs();
            match (n, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mono = match (i, j) {
                (0, 0) => String::new(),
                _ => {
                    let part = |v: &str, e: usize| match e {
                        0 => String::new(),
                        1 => v.to_string(),
                        _ => format!("{v}^{e}"),
                    };
                    format!("{}{}", part("x", i), part("y", j))
                }
            };
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                f.write_str(&mono)?;
            } else if mag.is_integer() {
                write!(f, "{mag}{mono}")?;
            } else {
                write!(f, "({mag}){mono}")?;
            }
        }
        Ok(())
    }
}
