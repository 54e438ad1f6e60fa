//! Real roots of univariate polynomials: Sturm sequences, square-free
//! decomposition, real-rootedness, nonnegativity and negative-point search.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, UniPoly};
use crate::rat::{self, Rat};

/// The signed remainder sequence `p, p', -rem(p, p'), ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SturmSequence {
    polys: Vec<UniPoly>,
}

impl SturmSequence {
    pub fn new(p: &UniPoly) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let mut polys = vec![p.clone()];
        let mut next = p.derivative();
        while !next.is_zero() {
            let r = polys.last().unwrap().rem(&next)?;
            polys.push(next);
            next = -r;
        }
        Ok(SturmSequence { polys })
    }

    pub fn polys(&self) -> &[UniPoly] {
        &self.polys
    }

    fn variations(signs: impl Iterator<Item = i8>) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for s in signs.filter(|&s| s != 0) {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Sign variations of the sequence evaluated at `x`, zeros dropped.
    pub fn variations_at(&self, x: &Rat) -> usize {
        Self::variations(self.polys.iter().map(|p| rat::sign(&p.eval(x))))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| lead_sign(p)))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.polys.iter().map(|p| {
            let s = lead_sign(p);
            if p.degree().unwrap_or(0) % 2 == 1 {
                -s
            } else {
                s
            }
        }))
    }

    /// Distinct roots in `(a, b]`; exact when the first entry is square-free.
    pub fn count_between(&self, a: &Rat, b: &Rat) -> usize {
        self.variations_at(a) - self.variations_at(b)
    }
}

fn lead_sign(p: &UniPoly) -> i8 {
    p.leading().map_or(0, rat::sign)
}

pub fn sturm_sequence(p: &UniPoly) -> Result<SturmSequence> {
    SturmSequence::new(p)
}

/// Number of distinct real roots.
pub fn count_distinct_real_roots(p: &UniPoly) -> Result<usize> {
    let seq = SturmSequence::new(p)?;
    Ok(seq.variations_at_neg_inf() - seq.variations_at_pos_inf())
}

/// Number of distinct real roots in the half-open interval `(a, b]`.
pub fn count_roots_halfopen(p: &UniPoly, a: &Rat, b: &Rat) -> Result<usize> {
    if a >= b {
        return Err(Error::EmptyInterval(a.clone(), b.clone()));
    }
    let seq = SturmSequence::new(&squarefree_part(p)?)?;
    Ok(seq.count_between(a, b))
}

/// `p = leading · Π parts[i]^(i+1)` with monic, square-free, pairwise coprime
/// parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SquareFreeDecomposition {
    pub parts: Vec<UniPoly>,
    pub leading: Rat,
}

impl SquareFreeDecomposition {
    /// `a_k`, the product of the linear factors of multiplicity exactly `k`.
    pub fn part(&self, k: usize) -> UniPoly {
        k.checked_sub(1)
            .and_then(|i| self.parts.get(i).cloned())
            .unwrap_or_else(UniPoly::one)
    }

    pub fn reconstruct(&self) -> UniPoly {
        self.parts
            .iter()
            .enumerate()
            .fold(UniPoly::constant(self.leading.clone()), |acc, (i, a)| {
                &acc * &a.pow(i + 1)
            })
    }
}

/// Yun's square-free decomposition.
pub fn squarefree_decompose(p: &UniPoly) -> Result<SquareFreeDecomposition> {
    let leading = p.leading().cloned().ok_or(Error::ZeroPolynomial)?;
    let f = p.monic();
    let df = f.derivative();
    let mut parts = Vec::new();
    if !df.is_zero() {
        let g = gcd(&f, &df)?;
        let mut b = f.div_exact(&g)?;
        let mut d = &df.div_exact(&g)? - &b.derivative();
        while !b.is_constant() {
            let a = gcd(&b, &d)?;
            b = b.div_exact(&a)?;
            let c = d.div_exact(&a)?;
            d = &c - &b.derivative();
            parts.push(a);
        }
    }
    Ok(SquareFreeDecomposition { parts, leading })
}

/// `p / gcd(p, p')`, made monic.
pub fn squarefree_part(p: &UniPoly) -> Result<UniPoly> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let g = gcd(p, &p.derivative())?;
    Ok(p.div_exact(&g)?.monic())
}

/// True when every complex root is real. The zero polynomial and nonzero
/// constants count as real-rooted.
pub fn is_real_rooted(p: &UniPoly) -> bool {
    if p.is_constant() {
        return true;
    }
    let sq = squarefree_decompose(p).expect("nonzero");
    sq.parts.iter().filter(|a| !a.is_constant()).all(|a| {
        count_distinct_real_roots(a).expect("nonzero") == a.degree().unwrap()
    })
}

/// True when `p(x) >= 0` for every real `x`.
pub fn is_nonnegative_on_r(p: &UniPoly) -> bool {
    let Some(deg) = p.degree() else {
        return true;
    };
    let lc = p.leading().unwrap();
    if deg % 2 == 1 || lc.is_negative() {
        return false;
    }
    if deg == 0 {
        return true;
    }
    // Sign changes happen exactly at real roots of odd multiplicity.
    let sq = squarefree_decompose(p).expect("nonzero");
    sq.parts.iter().step_by(2).all(|a| {
        a.is_constant() || count_distinct_real_roots(a).expect("nonzero") == 0
    })
}

/// True when `p(t) > 0` for every `t` in the open interval `(0, 1)`.
pub fn is_strictly_positive_on_01(p: &UniPoly) -> Result<bool> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let (zero, one) = (Rat::zero(), Rat::one());
    let sq = squarefree_part(p)?;
    let seq = SturmSequence::new(&sq)?;
    let mut interior = seq.count_between(&zero, &one);
    if sq.eval(&one).is_zero() {
        interior -= 1;
    }
    Ok(interior == 0 && p.eval(&rat::ratio(1, 2)).is_positive())
}

/// Strict bound: every root satisfies `|x| < 1 + max |a_i / a_n|`.
pub fn root_bound(p: &UniPoly) -> Rat {
    let Some(lc) = p.leading() else {
        return Rat::one();
    };
    let n = p.coeffs().len() - 1;
    let max = p.coeffs()[..n]
        .iter()
        .map(|c| (c / lc).abs())
        .max()
        .unwrap_or_else(Rat::zero);
    max + Rat::one()
}

/// Isolating intervals `(lo, hi]` for the distinct real roots of `p` inside
/// `(a, b]`, sorted and pairwise disjoint, each containing exactly one root.
pub fn isolate_real_roots_in(p: &UniPoly, a: &Rat, b: &Rat) -> Result<Vec<(Rat, Rat)>> {
    let sq = squarefree_part(p)?;
    let seq = SturmSequence::new(&sq)?;
    Ok(isolate_with(&seq, a.clone(), b.clone()))
}

/// Isolating intervals for all distinct real roots.
pub fn isolate_real_roots(p: &UniPoly) -> Result<Vec<(Rat, Rat)>> {
    let b = root_bound(p);
    isolate_real_roots_in(p, &-b.clone(), &b)
}

fn isolate_with(seq: &SturmSequence, a: Rat, b: Rat) -> Vec<(Rat, Rat)> {
    let mut out = Vec::new();
    // Stack of (lo, hi, V(lo), V(hi)); processed so output stays sorted.
    let va = seq.variations_at(&a);
    let vb = seq.variations_at(&b);
    let mut stack = vec![(a, b, va, vb)];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        match vlo - vhi {
            0 => {}
            1 => out.push((lo, hi)),
            _ => {
                let mid = (&lo + &hi) / rat::int(2);
                let vm = seq.variations_at(&mid);
                stack.push((mid.clone(), hi, vm, vhi));
                stack.push((lo, mid, vlo, vm));
            }
        }
    }
    out
}

/// A point strictly between `floor` (or the previous root, whichever is
/// larger) and the unique root of the square-free `sq` in `(lo, hi]`.
/// Requires `lo >= floor` and that no root lies in `(floor, lo)`.
fn point_below_root(seq: &SturmSequence, lo: Rat, mut hi: Rat, floor: &Rat) -> Rat {
    let sq = &seq.polys[0];
    if &lo > floor && !sq.eval(&lo).is_zero() {
        return lo;
    }
    loop {
        let mid = (&lo + &hi) / rat::int(2);
        if seq.count_between(&mid, &hi) == 1 {
            return mid;
        }
        hi = mid;
    }
}

/// A point strictly between the unique root in `(lo, hi]` and `ceil`, given
/// `hi <= ceil` and no root in `(hi, ceil)`.
fn point_above_root(seq: &SturmSequence, mut lo: Rat, hi: Rat, ceil: &Rat) -> Rat {
    let sq = &seq.polys[0];
    if sq.eval(&hi).is_zero() {
        return (&hi + ceil) / rat::int(2);
    }
    if &hi < ceil {
        return hi;
    }
    loop {
        let mid = (&lo + &hi) / rat::int(2);
        if seq.count_between(&lo, &mid) == 1 {
            if !sq.eval(&mid).is_zero() {
                return mid;
            }
            // The root is mid itself; (mid, hi] is root-free.
            return (&mid + &hi) / rat::int(2);
        }
        lo = mid;
    }
}

/// One point in every open cell that the distinct real roots of `p` cut out
/// of the open interval `(a, b)`. `p` has constant nonzero sign on each cell.
pub fn cell_points(p: &UniPoly, a: &Rat, b: &Rat) -> Result<Vec<Rat>> {
    let sq = squarefree_part(p)?;
    let seq = SturmSequence::new(&sq)?;
    let mut roots = isolate_with(&seq, a.clone(), b.clone());
    // A root at b itself is not inside the open interval.
    if sq.eval(b).is_zero() {
        roots.pop();
    }
    if roots.is_empty() {
        return Ok(vec![(a + b) / rat::int(2)]);
    }
    let mut pts = Vec::with_capacity(roots.len() + 1);
    for (lo, hi) in &roots {
        pts.push(point_below_root(&seq, lo.clone(), hi.clone(), a));
    }
    let (lo, hi) = roots.last().unwrap().clone();
    pts.push(point_above_root(&seq, lo, hi, b));
    Ok(pts)
}

/// A rational `x0` with `p(x0) < 0`, or `None` when `p` is nonnegative on
/// the real line.
pub fn find_negative_witness(p: &UniPoly) -> Option<Rat> {
    if is_nonnegative_on_r(p) {
        return None;
    }
    let bound = root_bound(p);
    let lc = p.leading().expect("nonzero");
    if lc.is_negative() {
        return Some(bound);
    }
    if p.degree().unwrap() % 2 == 1 {
        return Some(-bound);
    }
    let pts = cell_points(p, &-bound.clone(), &bound).expect("nonzero");
    pts.into_iter().find(|x| p.eval(x).is_negative())
}
