//! Randomized property tests for the exact arithmetic layer.
//!
//! Each test uses a fixed seed so failures are reproducible.

use exactcore::{
    parse_rat, quadratic_orthogonal_complement, rat_to_string, solve_linear, sturm_positive_on,
    IntervalSign, LinearOutcome, Mat, Quadratic2, Rat, RatPoly,
};
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn rat(n: i64, d: i64) -> Rat {
    Rat::new(n.into(), d.into())
}

fn rand_rat(rng: &mut ChaCha8Rng, max_num: i64, max_den: i64) -> Rat {
    let n = rng.gen_range(-max_num..=max_num);
    let d = rng.gen_range(1..=max_den);
    rat(n, d)
}

/// Sturm positivity agrees with dense sampling plus bisection refinement on
/// random quartics with rational roots.
#[test]
fn sturm_agrees_with_dense_sampling_on_random_quartics() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let a = rat(0, 1);
    let b = rat(1, 1);
    for _ in 0..1000 {
        // Quartic with four rational roots and a random sign, so every
        // classification branch occurs.
        let roots: Vec<Rat> = (0..4).map(|_| rand_rat(&mut rng, 6, 4)).collect();
        let sign = if rng.gen_bool(0.5) { rat(1, 1) } else { rat(-1, 1) };
        let p = RatPoly::from_roots(&roots).scale(&sign);

        let verdict = sturm_positive_on(&p, &a, &b, true).unwrap();

        // Dense rational sampling: 97 interior points plus every interior
        // rational root (so even-multiplicity touches are seen exactly).
        let mut samples: Vec<Rat> = (1..97).map(|k| rat(k, 97)).collect();
        for r in &roots {
            if *r > a && *r < b {
                samples.push(r.clone());
            }
        }
        let mut any_zero = false;
        let mut any_negative = false;
        for s in &samples {
            let v = p.eval(s);
            if v.is_zero() {
                any_zero = true;
            } else if v.is_negative() {
                any_negative = true;
            }
        }
        // All roots are rational and included in the samples, so sampling
        // decides the trichotomy exactly: a sign change between consecutive
        // samples is impossible without a root between them, and all roots
        // are sampled.
        match (&verdict, any_negative, any_zero) {
            (IntervalSign::NegativeSomewhere { witness }, true, _) => {
                assert!(p.eval(witness).is_negative());
            }
            (IntervalSign::HasInteriorZero { .. }, false, true) => {}
            (IntervalSign::StrictlyPositive, false, false) => {}
            (v, neg, zero) => {
                panic!("disagreement: verdict {v:?}, sampled negative={neg} zero={zero}, p={p:?}")
            }
        }
    }
}

/// Random rationals survive a round trip through the string serialization.
#[test]
fn rational_serialization_round_trips() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..500 {
        let r = rand_rat(&mut rng, 1_000_000, 1_000_000);
        let s = rat_to_string(&r);
        assert_eq!(parse_rat(&s), Some(r));
    }
}

/// Solutions returned by the exact linear solver satisfy the system exactly,
/// and reported kernels are genuine.
#[test]
fn linear_solutions_are_exact() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..200 {
        let rows = rng.gen_range(1..=5);
        let cols = rng.gen_range(1..=5);
        let m = Mat::from_rows(
            (0..rows)
                .map(|_| (0..cols).map(|_| rand_rat(&mut rng, 5, 3)).collect())
                .collect(),
        );
        let rhs: Vec<Rat> = (0..rows).map(|_| rand_rat(&mut rng, 5, 3)).collect();
        match solve_linear(&m, &rhs) {
            LinearOutcome::Solved { particular, kernel } => {
                assert_eq!(m.mul_vec(&particular), rhs);
                for k in &kernel {
                    let img = m.mul_vec(k);
                    assert!(img.iter().all(Rat::is_zero));
                    assert!(!k.iter().all(Rat::is_zero));
                }
            }
            LinearOutcome::Inconsistent { certificate } => {
                // certificate^T M = 0 while certificate^T rhs != 0.
                let ct_m = m.vec_mul(&certificate);
                assert!(ct_m.iter().all(Rat::is_zero));
                let ct_b: Rat = certificate
                    .iter()
                    .zip(&rhs)
                    .map(|(c, b)| c * b)
                    .fold(Rat::zero(), |acc, x| acc + x);
                assert!(!ct_b.is_zero());
            }
        }
    }
}

/// The orthogonal complement basis pairs to zero against q, is independent,
/// and the pairing's self-value is the fixed multiple of the discriminant.
#[test]
fn orthocomplement_and_pairing_invariants() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..300 {
        let q = Quadratic2::new(
            rand_rat(&mut rng, 4, 3),
            rand_rat(&mut rng, 4, 3),
            rand_rat(&mut rng, 4, 3),
        );
        if q.is_zero_quadratic() {
            continue;
        }
        // <q, q> = 2 (q0 q2 - q1^2) = -2 disc(q).
        let minus_two = -Rat::one() - Rat::one();
        assert_eq!(Quadratic2::pairing(&q, &q), minus_two * q.disc());
        let [u, v] = quadratic_orthogonal_complement(&q);
        // Orthogonality holds whenever the pairing admits a transverse
        // orthogonal complement, i.e. away from the parabolic locus.
        if !q.disc().is_zero() {
            assert!(Quadratic2::pairing(&u, &q).is_zero());
            assert!(Quadratic2::pairing(&v, &q).is_zero());
        }
        // u, v, q span: 3x3 determinant of coefficients nonzero.
        let m = Mat::from_rows(vec![q.c.to_vec(), u.c.to_vec(), v.c.to_vec()]);
        assert!(!exactcore::det(&m).is_zero());
    }
}
