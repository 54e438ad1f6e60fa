//! Real-rootedness of a one-parameter family through subdiscriminants.
//!
//! `p` of degree `n` is real-rooted iff the signs of `sDisc_1, ..., sDisc_n`
//! are a run of `+1` followed by a run of `0`. The subdiscriminants come from
//! the signed subresultants of `(p, p')`, which a single remainder sequence
//! produces in `O(n^2)` operations. For a family, each `sDisc_k(p_γ)` is a
//! polynomial in `γ` of degree at most `2dm`, recovered by interpolation.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::family::{admissible_nodes, generic_point, nudge_negative, FamilyVerdict, ParamPoly};
use crate::interp::Interpolator;
use crate::ops::tick;
use crate::poly::UniPoly;
use crate::rat::{self, Rat};
use crate::univar::{find_negative_witness, is_nonnegative_on_r};

/// `sRes_0(p, p'), ..., sRes_(n-1)(p, p')`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubresultantSequence {
    values: Vec<Rat>,
}

impl SubresultantSequence {
    pub fn values(&self) -> &[Rat] {
        &self.values
    }

    pub fn get(&self, k: usize) -> &Rat {
        &self.values[k]
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// Signed subresultant coefficients of `(p, p')`.
///
/// Runs the signed subresultant remainder sequence: `srp[j]` is the `j`-th
/// signed subresultant polynomial, `s[j]` its formal coefficient of `x^j`
/// and `t[j]` its actual leading coefficient. Defective steps (a degree drop
/// of more than one) fill in the skipped coefficients via the structure
/// theorem instead of recomputing determinants.
pub fn subresultants(p: &UniPoly) -> Result<SubresultantSequence> {
    let n = p.degree().ok_or(Error::ZeroPolynomial)?;
    if n < 2 {
        return Err(Error::DegreeTooSmall {
            found: n,
            required: 2,
        });
    }
    let mut srp = vec![UniPoly::zero(); n + 1];
    let mut s = vec![Rat::zero(); n + 1];
    let mut t = vec![Rat::zero(); n + 1];
    srp[n] = p.clone();
    s[n] = Rat::one();
    t[n] = Rat::one();
    srp[n - 1] = p.derivative();
    t[n - 1] = srp[n - 1].leading().unwrap().clone();
    s[n - 1] = t[n - 1].clone();
    let (mut i, mut j) = (n + 1, n);
    while !srp[j - 1].is_zero() {
        let k = srp[j - 1].degree().unwrap();
        let num = if k == j - 1 {
            s[j - 1] = t[j - 1].clone();
            if k == 0 {
                break;
            }
            tick(1);
            &s[j - 1] * &s[j - 1]
        } else {
            s[j - 1] = Rat::zero();
            for delta in 1..j - k {
                let v = &t[j - 1] * &t[j - delta] / &s[j];
                tick(2);
                t[j - delta - 1] = if delta % 2 == 1 { -v } else { v };
            }
            s[k] = t[k].clone();
            for l in k + 1..j - 1 {
                srp[l] = UniPoly::zero();
                s[l] = Rat::zero();
            }
            srp[k] = srp[j - 1].scale(&(&s[k] / &t[j - 1]));
            if k == 0 {
                break;
            }
            tick(1);
            &t[j - 1] * &s[k]
        };
        let r = srp[i - 1].scale(&num).rem(&srp[j - 1])?;
        let den = &s[j] * &t[i - 1];
        tick(1);
        srp[k - 1] = -r.scale(&den.recip());
        t[k - 1] = srp[k - 1].leading().cloned().unwrap_or_else(Rat::zero);
        i = j;
        j = k;
    }
    s.truncate(n);
    Ok(SubresultantSequence { values: s })
}

/// `sDisc_1, ..., sDisc_n`, with `sDisc_k = sRes_(n-k)(p, p') / a_n`.
pub fn subdiscriminants(p: &UniPoly) -> Result<Vec<Rat>> {
    let sres = subresultants(p)?;
    let n = sres.len();
    let inv = p.leading().unwrap().recip();
    tick(n);
    Ok((1..=n).map(|k| sres.get(n - k) * &inv).collect())
}

/// True when the signs are some `+1`s followed only by `0`s.
pub fn ones_then_zeros(signs: &[i8]) -> bool {
    let ones = signs.iter().take_while(|&&s| s == 1).count();
    signs[ones..].iter().all(|&s| s == 0)
}

/// Real-rootedness of a single polynomial from the subdiscriminant signs.
pub fn real_rooted_single(p: &UniPoly) -> Result<bool> {
    match p.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0 | 1) => Ok(true),
        Some(_) => {
            let signs: Vec<i8> = subdiscriminants(p)?.iter().map(rat::sign).collect();
            Ok(ones_then_zeros(&signs))
        }
    }
}

/// `q_k(γ) = sDisc_k(p_γ)` for `k = 1..=m`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubdiscriminantProfile {
    pub q: Vec<UniPoly>,
    /// Leading coefficient `c_m(γ)` of the family.
    pub leading: UniPoly,
    pub m: usize,
    pub d: usize,
}

/// Interpolates every subdiscriminant of the family from `2dm + 1` nodes.
pub fn fast_rr(family: &ParamPoly) -> Result<SubdiscriminantProfile> {
    let m = family.degree().ok_or(Error::ZeroPolynomial)?;
    if m < 2 {
        return Err(Error::DegreeTooSmall {
            found: m,
            required: 2,
        });
    }
    let d = family.gamma_degree();
    let leading = family.leading().unwrap().clone();
    let nodes = admissible_nodes(&leading, 2 * d * m + 1);
    let mut columns = vec![Vec::with_capacity(nodes.len()); m];
    for g in &nodes {
        let sd = subdiscriminants(&family.specialize(g))?;
        for (col, v) in columns.iter_mut().zip(sd) {
            col.push(v);
        }
    }
    let interp = Interpolator::new(nodes)?;
    let q = columns
        .iter()
        .map(|v| interp.interpolate(v))
        .collect::<Result<_>>()?;
    Ok(SubdiscriminantProfile { q, leading, m, d })
}

/// Applies the sign-pattern rule to a profile: real-rooted for all `γ` iff
/// for some `k`, `q_1..q_k` are nonnegative and not identically zero and the
/// rest vanish identically.
pub fn family_real_rooted_fast(profile: &SubdiscriminantProfile) -> FamilyVerdict {
    let lead = &profile.leading;
    let mut zero_run = false;
    for qi in &profile.q {
        if qi.is_zero() {
            zero_run = true;
            continue;
        }
        let negative = (!is_nonnegative_on_r(qi)).then(|| find_negative_witness(qi).unwrap());
        // Where c_m does not vanish, q_i < 0 breaks the sign pattern, and so
        // does q_i != 0 after an identically zero entry.
        let witness = match (zero_run, negative) {
            (_, Some(start)) => nudge_negative(qi, lead, &start),
            (true, None) => Some(generic_point(qi, lead)),
            (false, None) => continue,
        };
        return FamilyVerdict {
            real_rooted: false,
            witness,
        };
    }
    FamilyVerdict::holds()
}

/// Decides whether every specialization of `family` is real-rooted.
pub fn family_real_rooted(family: &ParamPoly) -> Result<FamilyVerdict> {
    match family.degree() {
        None => Err(Error::ZeroPolynomial),
        Some(0 | 1) => Ok(FamilyVerdict::holds()),
        Some(_) => Ok(family_real_rooted_fast(&fast_rr(family)?)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::det_gauss;
    use crate::rat::{int, ratio};
    use crate::univar::is_real_rooted;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(c)
    }

    fn ints(v: &[i64]) -> Vec<Rat> {
        v.iter().map(|&x| int(x)).collect()
    }

    /// Determinant of the truncated Sylvester-type matrix: `n - 1 - k` shifted
    /// rows of `p` followed by `n - k` rows of `p'` in reverse shift order,
    /// keeping the first `2n - 1 - 2k` columns.
    fn sres_by_determinant(f: &UniPoly, k: usize) -> Rat {
        let n = f.degree().unwrap();
        let df = f.derivative();
        let size = 2 * n - 1 - 2 * k;
        let desc = |q: &UniPoly, deg: usize| -> Vec<Rat> {
            (0..=deg).rev().map(|e| q.coeff(e)).collect()
        };
        let (pc, dc) = (desc(f, n), desc(&df, n - 1));
        let row = |coeffs: &[Rat], shift: usize| -> Vec<Rat> {
            (0..size)
                .map(|c| {
                    c.checked_sub(shift)
                        .and_then(|i| coeffs.get(i).cloned())
                        .unwrap_or_else(Rat::zero)
                })
                .collect()
        };
        let mut rows = Vec::new();
        for r in 0..n - 1 - k {
            rows.push(row(&pc, r));
        }
        for u in 0..n - k {
            rows.push(row(&dc, n - k - 1 - u));
        }
        det_gauss(rows)
    }

    /// `a_n^(2k-2) Σ_(|S|=k) Π_(i<j in S) (x_i - x_j)^2` over a root multiset.
    fn sdisc_from_roots(lc: &Rat, roots: &[Rat], k: usize) -> Rat {
        let n = roots.len();
        let mut total = Rat::zero();
        for mask in 0u32..(1 << n) {
            if mask.count_ones() as usize != k {
                continue;
            }
            let s: Vec<&Rat> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| &roots[i]).collect();
            let mut prod = Rat::one();
            for a in 0..s.len() {
                for b in a + 1..s.len() {
                    let diff = s[a] - s[b];
                    prod *= &diff * &diff;
                }
            }
            total += prod;
        }
        total * rat::pow(lc, 2 * k - 2)
    }

    #[test]
    fn subresultant_examples() {
        assert_eq!(subresultants(&p(&[2, -3, 1])).unwrap().values(), ints(&[1, 2]).as_slice());
        assert_eq!(subresultants(&p(&[1, 0, 1])).unwrap().values(), ints(&[-4, 2]).as_slice());
        assert_eq!(subresultants(&p(&[-2, 0, 1])).unwrap().get(0), &int(8));
        assert_eq!(
            subresultants(&p(&[1, 1])),
            Err(Error::DegreeTooSmall { found: 1, required: 2 })
        );
        assert_eq!(subresultants(&UniPoly::zero()), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn subdiscriminant_examples() {
        assert_eq!(subdiscriminants(&p(&[2, -3, 1])).unwrap(), ints(&[2, 1]));
        assert_eq!(subdiscriminants(&p(&[1, 0, 1])).unwrap(), ints(&[2, -4]));
        assert_eq!(subdiscriminants(&p(&[1, -2, 1])).unwrap(), ints(&[2, 0]));
    }

    #[test]
    fn defective_sequences_match_determinants() {
        // Sparse and repeated-root inputs exercise the degree-drop branch.
        for f in [
            p(&[1, 0, 0, 0, 1]),
            p(&[0, 0, 0, 0, 0, 1]),
            p(&[-1, 0, 0, 1]),
            p(&[1, 0, 0, 0, 0, 0, 1]),
            UniPoly::from_roots(&ints(&[1, 1, 1, 2, 2])),
            UniPoly::from_roots(&ints(&[0, 0, 0, 0])),
            &p(&[1, 0, 1]).pow(2) * &p(&[3, 1]),
        ] {
            let sres = subresultants(&f).unwrap();
            for k in 0..f.degree().unwrap() {
                assert_eq!(sres.get(k), &sres_by_determinant(&f, k), "{f} k={k}");
            }
        }
    }

    #[test]
    fn single_examples() {
        assert!(real_rooted_single(&p(&[2, -3, 1])).unwrap());
        assert!(!real_rooted_single(&p(&[1, 0, 1])).unwrap());
        assert!(real_rooted_single(&p(&[1, -2, 1])).unwrap());
        assert!(ones_then_zeros(&[1, 1, 0]));
        assert!(!ones_then_zeros(&[1, 0, 1]));
        assert!(!ones_then_zeros(&[1, -1]));
        assert!(ones_then_zeros(&[]));
    }

    #[test]
    fn fast_rr_examples() {
        let f = ParamPoly::from_int_rows(&[&[1], &[0, 1], &[1]]);
        let prof = fast_rr(&f).unwrap();
        assert_eq!(prof.q, vec![p(&[2]), p(&[-4, 0, 1])]);
        let v = family_real_rooted_fast(&prof);
        assert!(!v.real_rooted);
        assert_eq!(v.witness, Some(int(0)));

        let f = ParamPoly::from_int_rows(&[&[0, 0, 1], &[0, 4], &[4]]);
        let prof = fast_rr(&f).unwrap();
        assert_eq!(prof.q, vec![p(&[2]), UniPoly::zero()]);
        assert!(family_real_rooted_fast(&prof).real_rooted);

        let f = ParamPoly::from_int_rows(&[&[2], &[-3], &[1]]);
        let prof = fast_rr(&f).unwrap();
        assert_eq!(prof.q, vec![p(&[2]), p(&[1])]);
        assert!(family_real_rooted_fast(&prof).real_rooted);
    }

    #[test]
    fn zero_then_nonzero_pattern_gives_witness() {
        // Profile (2, 0, 1): a zero followed by a positive entry.
        let prof = SubdiscriminantProfile {
            q: vec![p(&[2]), UniPoly::zero(), p(&[1])],
            leading: p(&[1]),
            m: 3,
            d: 0,
        };
        let v = family_real_rooted_fast(&prof);
        assert!(!v.real_rooted);
        assert!(v.witness.is_some());
    }

    #[test]
    fn witness_avoids_leading_roots() {
        // γ t^2 + 1: q_2 = -4γ is negative for γ > 0 only, and γ = 0 drops the degree.
        let f = ParamPoly::from_int_rows(&[&[1], &[], &[0, 1]]);
        let v = family_real_rooted(&f).unwrap();
        assert!(!v.real_rooted);
        assert!(!is_real_rooted(&f.specialize(&v.witness.unwrap())));
    }

    fn small_poly(max_deg: usize) -> impl Strategy<Value = UniPoly> {
        proptest::collection::vec(-9i64..10, 3..=max_deg + 1)
            .prop_map(|c| p(&c))
            .prop_filter("degree >= 2", |f| f.degree().is_some_and(|d| d >= 2))
    }

    proptest! {
        #[test]
        fn matches_determinant_oracle(f in small_poly(5)) {
            let sres = subresultants(&f).unwrap();
            prop_assert_eq!(sres.get(f.degree().unwrap() - 1), &(f.leading().unwrap() * int(f.degree().unwrap() as i64)));
            for k in 0..f.degree().unwrap() {
                prop_assert_eq!(sres.get(k), &sres_by_determinant(&f, k));
            }
        }

        #[test]
        fn matches_root_formula(r in proptest::collection::vec(-5i64..6, 2..7), lc in -3i64..4) {
            prop_assume!(lc != 0);
            let roots = ints(&r);
            let f = UniPoly::from_roots(&roots).scale(&int(lc));
            let sd = subdiscriminants(&f).unwrap();
            for k in 1..=roots.len() {
                prop_assert_eq!(&sd[k - 1], &sdisc_from_roots(&int(lc), &roots, k));
            }
        }

        #[test]
        fn single_agrees_with_sturm(f in small_poly(7)) {
            prop_assert_eq!(real_rooted_single(&f).unwrap(), is_real_rooted(&f));
        }

        #[test]
        fn profile_round_trip(
            rows in proptest::collection::vec(proptest::collection::vec(-4i64..5, 0..4), 3..6),
            gn in -40i64..40, gd in 1i64..9
        ) {
            let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            let f = ParamPoly::from_int_rows(&refs);
            prop_assume!(f.degree().is_some_and(|m| m >= 2));
            let prof = fast_rr(&f).unwrap();
            let g = ratio(gn, gd);
            let spec = f.specialize(&g);
            prop_assume!(spec.degree() == f.degree());
            let at: Vec<Rat> = prof.q.iter().map(|q| q.eval(&g)).collect();
            prop_assert_eq!(at, subdiscriminants(&spec).unwrap());
            for q in &prof.q {
                prop_assert!(q.degree().map_or(true, |e| e <= 2 * prof.d * prof.m));
            }
        }
    }
}
