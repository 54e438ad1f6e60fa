//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ops::tick;
use crate::rat::{self, Rat};

/// Below this length products use the schoolbook method.
const KARATSUBA_CUTOFF: usize = 24;

/// A univariate polynomial with ascending coefficients.
///
/// The coefficient vector is always trimmed: the zero polynomial is the empty
/// vector and otherwise the last entry is nonzero. Equality is therefore
/// structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rat>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| rat::int(c)).collect())
    }

    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// `c * x^k`.
    pub fn monomial(c: Rat, k: usize) -> Self {
        let mut v = vec![Rat::zero(); k + 1];
        v[k] = c;
        Self::new(v)
    }

    /// `x - r`.
    pub fn linear_root(r: &Rat) -> Self {
        Self::new(vec![-r.clone(), Rat::one()])
    }

    /// `Π (x - r)` over the given roots.
    pub fn from_roots<'a>(roots: impl IntoIterator<Item = &'a Rat>) -> Self {
        roots
            .into_iter()
            .fold(Self::one(), |acc, r| &acc * &Self::linear_root(r))
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^k`, zero beyond the degree.
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// True for nonzero constants and for zero.
    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &Rat) -> Rat {
        tick(2 * self.coeffs.len().saturating_sub(1));
        let mut it = self.coeffs.iter().rev();
        let Some(first) = it.next() else {
            return Rat::zero();
        };
        it.fold(first.clone(), |acc, c| acc * x + c)
    }

    pub fn derivative(&self) -> Self {
        tick(self.coeffs.len().saturating_sub(1));
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * rat::int(k as i64))
                .collect(),
        )
    }

    pub fn scale(&self, c: &Rat) -> Self {
        tick(self.coeffs.len());
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Divides by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Euclidean division over the rationals.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::ZeroPolynomial)?;
        let Some(nd) = self.degree() else {
            return Ok((Self::zero(), Self::zero()));
        };
        if nd < dd {
            return Ok((Self::zero(), self.clone()));
        }
        let inv_lc = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Rat::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &inv_lc;
            tick(1 + 2 * dd);
            if !c.is_zero() {
                for (j, b) in divisor.coeffs[..dd].iter().enumerate() {
                    rem[k + j] -= &c * b;
                }
            }
            rem[k + dd] = Rat::zero();
            quot[k] = c;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        Ok(self.div_rem(divisor)?.1)
    }

    /// Exact quotient; debug builds assert the remainder vanishes.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (q, r) = self.div_rem(divisor)?;
        debug_assert!(r.is_zero(), "inexact polynomial division");
        Ok(q)
    }

    /// `self(x + shift)`.
    pub fn shift(&self, shift: &Rat) -> Self {
        let lin = Self::new(vec![shift.clone(), Rat::one()]);
        self.coeffs
            .iter()
            .rev()
            .fold(Self::zero(), |acc, c| &(&acc * &lin) + &Self::constant(c.clone()))
    }

    /// Writes the polynomial using `var` as the indeterminate.
    pub fn display_with(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if out.is_empty() {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let show_coeff = k == 0 || !mag.is_one();
            if show_coeff {
                if mag.is_integer() || k == 0 {
                    out.push_str(&mag.to_string());
                } else {
                    out.push_str(&format!("({mag})"));
                }
            }
            match k {
                0 => {}
                1 => out.push_str(var),
                _ => out.push_str(&format!("{var}^{k}")),
            }
        }
        out
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({})", self.display_with("x"))
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("x"))
    }
}

fn add_slices(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    let (long, short) = if a.len() >= b.len() { (a, b) } else { (b, a) };
    tick(short.len());
    let mut out = long.to_vec();
    for (o, s) in out.iter_mut().zip(short) {
        *o += s;
    }
    out
}

fn schoolbook(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    tick(2 * a.len() * b.len());
    let mut out = vec![Rat::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn karatsuba(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    if a.len().min(b.len()) < KARATSUBA_CUTOFF {
        return schoolbook(a, b);
    }
    let full = a.len() + b.len() - 1;
    let half = a.len().max(b.len()) / 2;
    if a.len() <= half || b.len() <= half {
        // Unbalanced: split only the longer operand.
        let (long, short) = if a.len() <= half { (b, a) } else { (a, b) };
        let (l0, l1) = long.split_at(half);
        let lo = karatsuba(l0, short);
        let hi = karatsuba(l1, short);
        let mut out = vec![Rat::zero(); full];
        tick(hi.len());
        for (i, c) in lo.into_iter().enumerate() {
            out[i] += c;
        }
        for (i, c) in hi.into_iter().enumerate() {
            out[i + half] += c;
        }
        return out;
    }
    let (a0, a1) = a.split_at(half);
    let (b0, b1) = b.split_at(half);
    let z0 = karatsuba(a0, b0);
    let z2 = karatsuba(a1, b1);
    let z1 = karatsuba(&add_slices(a0, a1), &add_slices(b0, b1));
    // z1 may carry cancelling entries past the true degree.
    let mut out = vec![Rat::zero(); full.max(z1.len() + half).max(z2.len() + 2 * half)];
    tick(z1.len() + 2 * (z0.len() + z2.len()));
    for (i, c) in z1.into_iter().enumerate() {
        out[i + half] += c;
    }
    for (i, c) in z0.into_iter().enumerate() {
        out[i + half] -= &c;
        out[i] += c;
    }
    for (i, c) in z2.into_iter().enumerate() {
        out[i + half] -= &c;
        out[i + 2 * half] += c;
    }
    debug_assert!(out[full..].iter().all(Zero::is_zero));
    out.truncate(full);
    out
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::new(add_slices(&self.coeffs, &rhs.coeffs))
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        UniPoly::new(karatsuba(&self.coeffs, &rhs.coeffs))
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly { (&self).$m(&rhs) }
        }
        impl $tr<&UniPoly> for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: &UniPoly) -> UniPoly { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add::add, Sub::sub, Mul::mul);

impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}

/// Exact value of `p` at `x0`.
pub fn eval(p: &UniPoly, x0: &Rat) -> Rat {
    p.eval(x0)
}

pub fn derivative(p: &UniPoly) -> UniPoly {
    p.derivative()
}

/// Monic greatest common divisor by Euclid's algorithm.
pub fn gcd(p: &UniPoly, q: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() && q.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (p.clone(), q.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        // Keep remainders monic so coefficient sizes stay moderate.
        a = b;
        b = r.monic();
    }
    Ok(a.monic())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{int, ratio};
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(eval(&p(&[2, -3, 1]), &int(2)), int(0));
        assert_eq!(eval(&UniPoly::zero(), &ratio(7, 3)), int(0));
        assert_eq!(eval(&p(&[-1, 2]), &ratio(1, 2)), int(0));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(derivative(&p(&[2, -3, 1])), p(&[-3, 2]));
        assert_eq!(derivative(&p(&[5])), UniPoly::zero());
        assert_eq!(derivative(&p(&[0, 1, 0, 1])), p(&[1, 0, 3]));
    }

    #[test]
    fn canonical_form() {
        let a = UniPoly::new(vec![int(1), int(0), int(0)]);
        assert_eq!(a, UniPoly::one());
        assert_eq!(a.degree(), Some(0));
        assert_eq!(UniPoly::new(vec![int(0)]).degree(), None);
        assert!((&p(&[1, 1]) - &p(&[1, 1])).is_zero());
    }

    #[test]
    fn gcd_examples() {
        let x1 = p(&[-1, 1]);
        let f = &(&x1 * &x1) * &p(&[2, 1]);
        let g = &x1 * &p(&[-5, 1]);
        assert_eq!(gcd(&f, &g).unwrap(), x1);
        assert_eq!(gcd(&p(&[1, 0, 1]), &p(&[-1, 0, 1])).unwrap(), UniPoly::one());
        // oracle: factor multisets {1,1,-2} and {1,1} (from f') share exactly {1}
        assert_eq!(gcd(&f, &f.derivative()).unwrap(), x1);
        assert_eq!(gcd(&p(&[4, 2]), &UniPoly::zero()).unwrap(), p(&[2, 1]));
        assert_eq!(gcd(&UniPoly::zero(), &UniPoly::zero()), Err(Error::GcdOfZeros));
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(p(&[1, 1]).div_rem(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn display() {
        assert_eq!(p(&[2, -3, 1]).to_string(), "x^2 - 3x + 2");
        assert_eq!(p(&[1, 0, -1]).display_with("t"), "-t^2 + 1");
        assert_eq!(UniPoly::new(vec![ratio(1, 2), ratio(-3, 4)]).to_string(), "-(3/4)x + 1/2");
    }

    #[test]
    fn shift_matches_evaluation() {
        let f = p(&[3, -1, 0, 2]);
        let g = f.shift(&ratio(1, 3));
        for x in -3..4 {
            assert_eq!(g.eval(&int(x)), f.eval(&(int(x) + ratio(1, 3))));
        }
    }

    #[test]
    fn karatsuba_matches_schoolbook_on_long_inputs() {
        let a: Vec<Rat> = (0..70).map(|i| int((i * 7 % 13) - 6)).collect();
        let b: Vec<Rat> = (0..41).map(|i| ratio((i * 5 % 11) - 5, 1 + i % 3)).collect();
        for (la, lb) in [(70, 41), (30, 41), (25, 25), (49, 25), (48, 26), (70, 36)] {
            assert_eq!(karatsuba(&a[..la], &b[..lb]), schoolbook(&a[..la], &b[..lb]));
            assert_eq!(karatsuba(&b[..lb], &a[..la]), schoolbook(&b[..lb], &a[..la]));
        }
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-20i64..20, 0..8).prop_map(|v| p(&v))
    }

    fn long_poly() -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-9i64..9, 20..60).prop_map(|v| p(&v))
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        }

        #[test]
        fn long_products_distribute(a in long_poly(), b in long_poly(), c in long_poly()) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
        }

        #[test]
        fn division_identity(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let (q, r) = a.div_rem(&b).unwrap();
            prop_assert_eq!(&(&q * &b) + &r, a);
            prop_assert!(r.degree() < b.degree());
        }

        #[test]
        fn gcd_divides_both(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!c.is_zero() && !(a.is_zero() && b.is_zero()));
            let g = gcd(&(&a * &c), &(&b * &c)).unwrap();
            prop_assert!((&a * &c).rem(&g).unwrap().is_zero());
            prop_assert!((&b * &c).rem(&g).unwrap().is_zero());
            prop_assert!(g.rem(&c.monic()).unwrap().is_zero());
        }
    }
}
