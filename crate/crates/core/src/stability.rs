//! Real stability of bivariate polynomials.
//!
//! `p` is real stable iff (1) `t -> p(γ + t, t)` is real-rooted for every
//! real `γ` and (2) the edge polynomial `r(t)` (the top homogeneous form of
//! `p` at `(t, 1 - t)`) has no zero in `(0, 1)`. Multiplying `p` by `-1`
//! preserves stability, so the sign is fixed first to make `r(1/2) >= 0`;
//! condition (2) then reads "`r > 0` on `(0, 1)`".

use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bipoly::BiPoly;
use crate::error::{Error, Result};
use crate::family::{edge_restriction, shift_substitute, FamilyVerdict, ParamPoly};
use crate::matrix::det_divfree;
use crate::ops;
use crate::poly::UniPoly;
use crate::rat::{self, Rat};
use crate::univar::{
    cell_points, count_roots_halfopen, is_real_rooted, is_strictly_positive_on_01,
    squarefree_part, SturmSequence,
};
use crate::{fastrr, simplerr};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum Algorithm {
    /// Subdiscriminants via subresultants.
    #[default]
    Fast,
    /// Elementary symmetric functions of Hankel moment matrices.
    Simple,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Fast => "fast",
            Algorithm::Simple => "simple",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "fast" => Ok(Algorithm::Fast),
            "simple" => Ok(Algorithm::Simple),
            other => Err(format!("unknown algorithm `{other}` (expected fast or simple)")),
        }
    }
}

/// Evidence that a polynomial is not real stable.
///
/// For the edge conditions, `edge` is the edge polynomial multiplied by
/// `±1` so that `edge(1/2) >= 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    /// `restriction = p(γ + t, t)` at `γ = gamma` is not real-rooted.
    Condition1 { gamma: Rat, restriction: UniPoly },
    /// `edge(t0) = edge_value <= 0` with `0 < t0 < 1`.
    Condition2 {
        t0: Rat,
        edge_value: Rat,
        edge: UniPoly,
    },
    /// `edge` has an irrational root in `(lo, hi]`, where `0 <= lo < hi < 1`.
    Condition2Interval { lo: Rat, hi: Rat, edge: UniPoly },
}

impl Witness {
    /// Re-checks the witness against `p` from scratch.
    pub fn verify(&self, p: &BiPoly) -> bool {
        match self {
            Witness::Condition1 { gamma, restriction } => {
                &shift_substitute(p).specialize(gamma) == restriction
                    && !is_real_rooted(restriction)
            }
            Witness::Condition2 {
                t0,
                edge_value,
                edge,
            } => {
                edge_matches(p, edge)
                    && t0.is_positive()
                    && t0 < &Rat::one()
                    && &edge.eval(t0) == edge_value
                    && !edge_value.is_positive()
            }
            Witness::Condition2Interval { lo, hi, edge } => {
                edge_matches(p, edge)
                    && !lo.is_negative()
                    && hi < &Rat::one()
                    && lo < hi
                    && count_roots_halfopen(edge, lo, hi).is_ok_and(|c| c > 0)
            }
        }
    }

    pub fn condition(&self) -> u8 {
        match self {
            Witness::Condition1 { .. } => 1,
            _ => 2,
        }
    }
}

fn edge_matches(p: &BiPoly, edge: &UniPoly) -> bool {
    let Ok(r) = edge_restriction(p) else {
        return false;
    };
    (edge == &r || edge == &-&r) && !edge.eval(&rat::ratio(1, 2)).is_negative()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StabilityVerdict {
    pub stable: bool,
    pub witness: Option<Witness>,
    pub algorithm: Algorithm,
    /// Scalar arithmetic operations spent on the decision.
    pub op_count: u64,
}

/// Decides real stability of `p`.
///
/// The zero polynomial and nonzero constants are stable. The edge condition
/// is always checked, and checked first since it is cheap; a restriction
/// that is vacuously real-rooted (such as a constant) cannot reveal zeros
/// like the one of `x - y` at `(i, i)`.
///
/// Errors only with [`Error::Inconsistent`], when a witness fails to
/// re-verify.
pub fn is_real_stable(p: &BiPoly, algorithm: Algorithm) -> Result<StabilityVerdict> {
    let (witness, op_count) = ops::measure(|| find_witness(p, algorithm));
    let witness = witness?;
    if let Some(w) = &witness {
        if !w.verify(p) {
            return Err(Error::Inconsistent(format!("witness {w:?} does not verify")));
        }
    }
    Ok(StabilityVerdict {
        stable: witness.is_none(),
        witness,
        algorithm,
        op_count,
    })
}

fn find_witness(p: &BiPoly, algorithm: Algorithm) -> Result<Option<Witness>> {
    if p.is_constant() {
        return Ok(None);
    }
    if let Some(w) = edge_witness(p)? {
        return Ok(Some(w));
    }
    let family = shift_substitute(p);
    let verdict = family_verdict(&family, algorithm)?;
    if verdict.real_rooted {
        return Ok(None);
    }
    let gamma = verdict
        .witness
        .and_then(|g| confirm_gamma(&family, g))
        .ok_or_else(|| Error::Inconsistent("no parameter value confirms the family verdict".into()))?;
    let restriction = family.specialize(&gamma);
    Ok(Some(Witness::Condition1 { gamma, restriction }))
}

/// Condition (1) alone: is `p(γ + t, t)` real-rooted for every `γ`?
pub fn family_verdict(family: &ParamPoly, algorithm: Algorithm) -> Result<FamilyVerdict> {
    match (family.degree(), algorithm) {
        (None, _) => Ok(FamilyVerdict::holds()),
        (Some(m), _) if m < 2 => Ok(FamilyVerdict::holds()),
        (_, Algorithm::Fast) => fastrr::family_real_rooted(family),
        (_, Algorithm::Simple) => simplerr::family_real_rooted_simple(family),
    }
}

/// Returns `gamma` if its specialization is not real-rooted, otherwise the
/// first nearby dyadic perturbation that is.
fn confirm_gamma(family: &ParamPoly, gamma: Rat) -> Option<Rat> {
    let bad = |g: &Rat| !is_real_rooted(&family.specialize(g));
    if bad(&gamma) {
        return Some(gamma);
    }
    let mut step = Rat::one();
    for _ in 0..64 {
        step /= rat::int(2);
        for g in [&gamma + &step, &gamma - &step] {
            if bad(&g) {
                return Some(g);
            }
        }
    }
    None
}

/// A witness that the sign-normalized edge polynomial is not strictly
/// positive on `(0, 1)`, if there is one.
fn edge_witness(p: &BiPoly) -> Result<Option<Witness>> {
    let mut edge = edge_restriction(p)?;
    let half = rat::ratio(1, 2);
    if edge.eval(&half).is_negative() {
        edge = -&edge;
    }
    if is_strictly_positive_on_01(&edge)? {
        return Ok(None);
    }
    let value = edge.eval(&half);
    if !value.is_positive() {
        return Ok(Some(Witness::Condition2 {
            t0: half,
            edge_value: value,
            edge,
        }));
    }
    let (zero, one) = (Rat::zero(), Rat::one());
    if let Some(t0) = cell_points(&edge, &zero, &one)?
        .into_iter()
        .find(|t| edge.eval(t).is_negative())
    {
        let edge_value = edge.eval(&t0);
        return Ok(Some(Witness::Condition2 {
            t0,
            edge_value,
            edge,
        }));
    }
    // Only roots of even multiplicity remain; report one exactly when it is
    // rational, otherwise by an isolating interval.
    let sq = squarefree_part(&edge)?;
    let seq = SturmSequence::new(&sq)?;
    let mut roots = crate::univar::isolate_real_roots_in(&sq, &zero, &one)?;
    if sq.eval(&one).is_zero() {
        roots.pop();
    }
    let Some((lo, hi)) = roots.into_iter().next() else {
        return Err(Error::Inconsistent("edge polynomial has no interior root".into()));
    };
    let (lo, hi) = shrink_below_one(&seq, lo, hi);
    if let Some(t0) = rational_root_in(&seq, lo.clone(), hi.clone()) {
        return Ok(Some(Witness::Condition2 {
            t0,
            edge_value: Rat::zero(),
            edge,
        }));
    }
    Ok(Some(Witness::Condition2Interval { lo, hi, edge }))
}

/// Bisects `(lo, hi]` around its unique root until `hi < 1`.
fn shrink_below_one(seq: &SturmSequence, mut lo: Rat, mut hi: Rat) -> (Rat, Rat) {
    while hi >= Rat::one() {
        let mid = (&lo + &hi) / rat::int(2);
        if seq.count_between(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    (lo, hi)
}

/// The root of the square-free `seq.polys()[0]` in `(lo, hi]`, if rational.
///
/// After scaling to a primitive integer polynomial with leading coefficient
/// `L`, a rational root has denominator dividing `L`, and two such rationals
/// differ by at least `1 / L^2`. Once the interval is narrower than that,
/// the simplest rational in it is the only candidate.
fn rational_root_in(seq: &SturmSequence, mut lo: Rat, mut hi: Rat) -> Option<Rat> {
    let sq = &seq.polys()[0];
    let lcm = sq
        .coeffs()
        .iter()
        .fold(num_bigint::BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<num_bigint::BigInt> = sq
        .coeffs()
        .iter()
        .map(|c| (c * Rat::from_integer(lcm.clone())).to_integer())
        .collect();
    let content = ints
        .iter()
        .fold(num_bigint::BigInt::zero(), |acc, c| acc.gcd(c));
    let lead = (ints.last().unwrap() / &content).abs();
    let width = Rat::new(One::one(), &lead * &lead);
    while &hi - &lo >= width {
        let mid = (&lo + &hi) / rat::int(2);
        if seq.count_between(&lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let cand = rat::simplest_between(&lo, &hi);
    (cand > lo && sq.eval(&cand).is_zero()).then_some(cand)
}

/// A line `t -> (e1 t + x1, e2 t + x2)` drawn by the sampling oracle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineSample {
    pub e1: Rat,
    pub e2: Rat,
    pub x1: Rat,
    pub x2: Rat,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub samples: usize,
    pub seed: u64,
    /// Lines checked before stopping (all of them when nothing was found).
    pub checked: usize,
    /// The first line whose restriction is not real-rooted, with that
    /// restriction.
    pub falsifier: Option<(LineSample, UniPoly)>,
}

fn small_rational(rng: &mut ChaCha8Rng, lo: i64, hi: i64) -> Rat {
    rat::ratio(rng.gen_range(lo..=hi), rng.gen_range(1..=6))
}

/// Checks real-rootedness of `p` along `samples` random lines with positive
/// direction. Finding nothing proves nothing; finding a line refutes
/// stability.
pub fn sampling_oracle(p: &BiPoly, samples: usize, seed: u64) -> OracleReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for n in 0..samples {
        let line = LineSample {
            e1: small_rational(&mut rng, 1, 24),
            e2: small_rational(&mut rng, 1, 24),
            x1: small_rational(&mut rng, -24, 24),
            x2: small_rational(&mut rng, -24, 24),
        };
        let r = p.restrict_line(&line.e1, &line.x1, &line.e2, &line.x2);
        if !is_real_rooted(&r) {
            return OracleReport {
                samples,
                seed,
                checked: n + 1,
                falsifier: Some((line, r)),
            };
        }
    }
    OracleReport {
        samples,
        seed,
        checked: samples,
        falsifier: None,
    }
}

/// `det(xA + yB + C)` for square matrices of equal size.
pub fn determinantal(a: &[Vec<Rat>], b: &[Vec<Rat>], c: &[Vec<Rat>]) -> BiPoly {
    let n = a.len();
    let entries: Vec<Vec<BiPoly>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    BiPoly::from_terms([
                        ((1, 0), a[i][j].clone()),
                        ((0, 1), b[i][j].clone()),
                        ((0, 0), c[i][j].clone()),
                    ])
                })
                .collect()
        })
        .collect();
    det_divfree(&entries)
}

fn gram(g: &[Vec<i64>]) -> Vec<Vec<Rat>> {
    g.iter()
        .map(|r| {
            g.iter()
                .map(|s| rat::int(r.iter().zip(s).map(|(a, b)| a * b).sum()))
                .collect()
        })
        .collect()
}

/// A random real stable `det(xA + yB + C)` with `A = GGᵀ`, `B = HHᵀ` and
/// symmetric `C`, all with small integer entries.
pub fn gen_determinantal(size: usize, seed: u64) -> Result<BiPoly> {
    if size == 0 {
        return Err(Error::EmptySize);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut square = |lo: i64, hi: i64| -> Vec<Vec<i64>> {
        (0..size)
            .map(|_| (0..size).map(|_| rng.gen_range(lo..=hi)).collect())
            .collect()
    };
    let g = square(-2, 2);
    let h = square(-2, 2);
    let raw = square(-3, 3);
    let c: Vec<Vec<Rat>> = (0..size)
        .map(|i| {
            (0..size)
                .map(|j| rat::int(if i <= j { raw[i][j] } else { raw[j][i] }))
                .collect()
        })
        .collect();
    Ok(determinantal(&gram(&g), &gram(&h), &c))
}
