//! Exact positivity certificates on open intervals via Sturm sequences.
//!
//! All decisions are made in exact arithmetic over an [`OrderedField`], so
//! the returned classification is a proof, not an approximation. Roots at
//! the interval endpoints are divided out first: the classification concerns
//! the open interval only.

use crate::poly::Poly;
use crate::scalar::OrderedField;
use thiserror::Error;

/// Sign classification of a polynomial on an open interval.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IntervalSign<T> {
    /// Positive everywhere on the open interval.
    StrictlyPositive,
    /// Nonnegative with at least one interior zero; the witness locates one.
    HasInteriorZero { witness: RootWitness<T> },
    /// Takes a negative value; the witness is a rational point where it does.
    NegativeSomewhere { witness: T },
}

/// Location of an interior root: exact when the root is rational, otherwise
/// an isolating interval with rational endpoints.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RootWitness<T> {
    Exact(T),
    Isolated { lo: T, hi: T },
}

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum SturmError {
    /// The zero polynomial has no sign; callers must treat this as a
    /// degenerate input, never as a positivity result.
    #[error("degenerate-polynomial")]
    DegeneratePolynomial,
    #[error("empty interval: left endpoint must be strictly below right")]
    EmptyInterval,
}

// ---- Sturm sequences ----

fn sturm_chain<T: OrderedField>(p: &Poly<T>) -> Vec<Poly<T>> {
    let mut chain = vec![p.clone(), p.derivative()];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero_poly() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].divrem(&chain[n - 1]);
        if r.is_zero_poly() {
            return chain;
        }
        chain.push(-&r);
    }
}

fn sign_changes<T: OrderedField>(chain: &[Poly<T>], at: &T) -> usize {
    let mut last: Option<bool> = None;
    let mut changes = 0;
    for p in chain {
        let v = p.eval(at);
        if v.is_zero() {
            continue;
        }
        let pos = v > T::zero();
        if let Some(prev) = last {
            if prev != pos {
                changes += 1;
            }
        }
        last = Some(pos);
    }
    changes
}

/// Number of distinct real roots in the half-open interval `(a, b]` of a
/// squarefree polynomial.
fn count_roots_halfopen<T: OrderedField>(chain: &[Poly<T>], a: &T, b: &T) -> usize {
    sign_changes(chain, a) - sign_changes(chain, b)
}

// ---- Root isolation ----

/// Isolates the distinct real roots of `p` inside the open interval
/// `(a, b)`, assuming `p(a) != 0 != p(b)`. Returns witnesses in increasing
/// order; exact witnesses where bisection lands on a root.
pub fn isolate_roots<T: OrderedField>(p: &Poly<T>, a: &T, b: &T) -> Vec<RootWitness<T>> {
    assert!(
        !p.eval(a).is_zero() && !p.eval(b).is_zero(),
        "isolate_roots requires nonvanishing endpoints; divide endpoint roots out first"
    );
    let sf = p.squarefree_part();
    let chain = sturm_chain(&sf);
    let mut out = Vec::new();
    isolate_rec(&sf, &chain, a, b, &mut out);
    out
}

fn midpoint<T: OrderedField>(a: &T, b: &T) -> T {
    (a.clone() + b.clone()) / T::from_i64(2)
}

fn isolate_rec<T: OrderedField>(
    sf: &Poly<T>,
    chain: &[Poly<T>],
    lo: &T,
    hi: &T,
    out: &mut Vec<RootWitness<T>>,
) {
    // Precondition: sf has no root at lo or hi.
    debug_assert!(!sf.eval(lo).is_zero() && !sf.eval(hi).is_zero());
    let n = count_roots_halfopen(chain, lo, hi);
    if n == 0 {
        return;
    }
    if n == 1 {
        out.push(shrink_to_witness(sf, chain, lo.clone(), hi.clone()));
        return;
    }
    let mid = midpoint(lo, hi);
    if sf.eval(&mid).is_zero() {
        // The midpoint is itself a root; peel it off and recurse on the two
        // halves of the reduced polynomial, whose endpoints are now clean.
        let (reduced, _) = sf.remove_root(&mid);
        let rchain = sturm_chain(&reduced);
        isolate_rec(&reduced, &rchain, lo, &mid, out);
        out.push(RootWitness::Exact(mid.clone()));
        isolate_rec(&reduced, &rchain, &mid, hi, out);
        return;
    }
    isolate_rec(sf, chain, lo, &mid, out);
    isolate_rec(sf, chain, &mid, hi, out);
}

/// Given an interval known to contain exactly one root of squarefree `sf`,
/// refines it until either the root is hit exactly or the bracket is
/// strictly inside the original interval, then returns the witness.
fn shrink_to_witness<T: OrderedField>(
    sf: &Poly<T>,
    chain: &[Poly<T>],
    mut lo: T,
    mut hi: T,
) -> RootWitness<T> {
    // A couple of refinement rounds tighten the bracket so later gap
    // sampling has room on both sides.
    for _ in 0..4 {
        let mid = midpoint(&lo, &hi);
        if sf.eval(&mid).is_zero() {
            return RootWitness::Exact(mid);
        }
        if count_roots_halfopen(chain, &lo, &mid) == 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    RootWitness::Isolated { lo, hi }
}

// ---- Open-interval positivity trichotomy ----

/// Decides whether `p > 0`, `p >= 0` with an interior zero, or `p < 0`
/// somewhere on the interval from `a` to `b`.
///
/// With `open = true` the classification concerns the open interval: roots
/// at the endpoints are divided out first, so e.g. a quartic vanishing at
/// both endpoints and positive between them is classified strictly positive.
/// With `open = false` the endpoints participate: a negative endpoint value
/// is witnessed and an endpoint root counts as a zero of the closed
/// interval. The zero polynomial is rejected as degenerate.
pub fn sturm_positive_on<T: OrderedField>(
    p: &Poly<T>,
    a: &T,
    b: &T,
    open: bool,
) -> Result<IntervalSign<T>, SturmError> {
    if p.is_zero_poly() {
        return Err(SturmError::DegeneratePolynomial);
    }
    if a >= b {
        return Err(SturmError::EmptyInterval);
    }
    if !open {
        let va = p.eval(a);
        let vb = p.eval(b);
        if va < T::zero() {
            return Ok(IntervalSign::NegativeSomewhere { witness: a.clone() });
        }
        if vb < T::zero() {
            return Ok(IntervalSign::NegativeSomewhere { witness: b.clone() });
        }
        let interior = sturm_positive_on(p, a, b, true)?;
        return Ok(match interior {
            IntervalSign::NegativeSomewhere { witness } => {
                IntervalSign::NegativeSomewhere { witness }
            }
            _ if va.is_zero() => IntervalSign::HasInteriorZero {
                witness: RootWitness::Exact(a.clone()),
            },
            _ if vb.is_zero() => IntervalSign::HasInteriorZero {
                witness: RootWitness::Exact(b.clone()),
            },
            other => other,
        });
    }
    let (p, _) = p.remove_root(a);
    let (p, mult_b) = p.remove_root(b);
    // On (a, b) the removed factor (z - a)^k (z - b)^m has the sign of
    // (-1)^m, so the quotient must be negated for odd m to keep the same
    // sign as the original polynomial there.
    let p = if mult_b % 2 == 1 { -&p } else { p };
    if p.degree() == Some(0) {
        // Constant after removing endpoint roots.
        return Ok(if *p.leading().unwrap() > T::zero() {
            IntervalSign::StrictlyPositive
        } else {
            IntervalSign::NegativeSomewhere { witness: midpoint(a, b) }
        });
    }
    let roots = isolate_roots(&p, a, b);
    // Sample one rational point per gap between consecutive roots (and
    // against the interval ends); the polynomial has constant sign there.
    let mut cuts: Vec<(T, T)> = vec![(a.clone(), a.clone())];
    for w in &roots {
        match w {
            RootWitness::Exact(r) => cuts.push((r.clone(), r.clone())),
            RootWitness::Isolated { lo, hi } => cuts.push((lo.clone(), hi.clone())),
        }
    }
    cuts.push((b.clone(), b.clone()));
    let mut negative_witness = None;
    for pair in cuts.windows(2) {
        let gap_lo = &pair[0].1;
        let gap_hi = &pair[1].0;
        // Isolating intervals are disjoint and interior, so each gap is a
        // genuine interval; its midpoint cannot be a root of p because all
        // roots lie inside the isolating brackets.
        let sample = if gap_lo < gap_hi { midpoint(gap_lo, gap_hi) } else { gap_lo.clone() };
        let v = p.eval(&sample);
        assert!(!v.is_zero(), "gap sample landed on a root; isolation is broken");
        if v < T::zero() {
            negative_witness = Some(sample);
            break;
        }
    }
    if let Some(witness) = negative_witness {
        return Ok(IntervalSign::NegativeSomewhere { witness });
    }
    if let Some(w) = roots.into_iter().next() {
        return Ok(IntervalSign::HasInteriorZero { witness: w });
    }
    Ok(IntervalSign::StrictlyPositive)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int, RatPoly};

    fn p(cs: &[i64]) -> RatPoly {
        Poly::new(cs.iter().map(|&c| rat_int(c)).collect())
    }

    #[test]
    fn positive_without_roots() {
        // z^2 + 1 on (0, 1)
        let f = p(&[1, 0, 1]);
        assert_eq!(
            sturm_positive_on(&f, &rat_int(0), &rat_int(1), true).unwrap(),
            IntervalSign::StrictlyPositive
        );
    }

    #[test]
    fn endpoint_roots_are_divided_out() {
        // -(z+1) z (z-2) (z-3) on (2, 3): vanishes at both endpoints,
        // positive strictly inside.
        let f = RatPoly::from_roots(&[rat_int(-1), rat_int(0), rat_int(2), rat_int(3)]).scale(&rat_int(-1));
        assert_eq!(
            sturm_positive_on(&f, &rat_int(2), &rat_int(3), true).unwrap(),
            IntervalSign::StrictlyPositive
        );
    }

    #[test]
    fn interior_double_root() {
        // (z - 1/2)^2 on (0, 1)
        let f = &p(&[-1, 2]) * &p(&[-1, 2]);
        match sturm_positive_on(&f, &rat_int(0), &rat_int(1), true).unwrap() {
            IntervalSign::HasInteriorZero { witness: RootWitness::Exact(r) } => {
                assert_eq!(r, rat(1, 2))
            }
            other => panic!("expected exact interior zero, got {other:?}"),
        }
    }

    #[test]
    fn negative_dip_is_witnessed() {
        // (z - 1/3)(z - 2/3) is negative between its roots.
        let f = RatPoly::from_roots(&[rat(1, 3), rat(2, 3)]);
        match sturm_positive_on(&f, &rat_int(0), &rat_int(1), true).unwrap() {
            IntervalSign::NegativeSomewhere { witness } => {
                assert!(f.eval(&witness) < rat_int(0));
                assert!(witness > rat(1, 3) && witness < rat(2, 3));
            }
            other => panic!("expected negative witness, got {other:?}"),
        }
    }

    #[test]
    fn zero_polynomial_is_degenerate() {
        assert_eq!(
            sturm_positive_on(&RatPoly::zero_poly(), &rat_int(0), &rat_int(1), true),
            Err(SturmError::DegeneratePolynomial)
        );
    }

    #[test]
    fn irrational_roots_are_isolated() {
        // (z^2 - 2)^2 on (1, 2): nonnegative with an interior zero at sqrt 2.
        let g = p(&[-2, 0, 1]);
        let f = &g * &g;
        match sturm_positive_on(&f, &rat_int(1), &rat_int(2), true).unwrap() {
            IntervalSign::HasInteriorZero { witness: RootWitness::Isolated { lo, hi } } => {
                assert!(lo < hi);
                assert!(g.eval(&lo) < rat_int(0) && g.eval(&hi) > rat_int(0));
            }
            other => panic!("expected isolated interior zero, got {other:?}"),
        }
    }

    #[test]
    fn closed_interval_sees_endpoints() {
        // z(1 - z) vanishes at both ends of [0, 1]: strictly positive on the
        // open interval, has a zero on the closed one.
        let f = p(&[0, 1]) * p(&[1, -1]);
        assert_eq!(
            sturm_positive_on(&f, &rat_int(0), &rat_int(1), true).unwrap(),
            IntervalSign::StrictlyPositive
        );
        assert_eq!(
            sturm_positive_on(&f, &rat_int(0), &rat_int(1), false).unwrap(),
            IntervalSign::HasInteriorZero { witness: RootWitness::Exact(rat_int(0)) }
        );
        // z - 1 is negative at the left endpoint of [0, 2].
        let g = p(&[-1, 1]);
        match sturm_positive_on(&g, &rat_int(0), &rat_int(2), false).unwrap() {
            IntervalSign::NegativeSomewhere { witness } => assert_eq!(witness, rat_int(0)),
            other => panic!("expected endpoint witness, got {other:?}"),
        }
    }

    #[test]
    fn clustered_roots_separate() {
        let roots = [rat(1, 7), rat(2, 13), rat(3, 19), rat(1, 2)];
        let f = RatPoly::from_roots(&roots);
        let isolated = isolate_roots(&f, &rat_int(0), &rat_int(1));
        assert_eq!(isolated.len(), roots.len());
    }
}
