//! Integer lattice test used to recognize smooth corners and manifold charts.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

/// Returns true when the given integer vectors span all of the standard
/// lattice Z^2 (not merely a finite-index sublattice).
///
/// The span is computed as a Hermite-style reduction: the lattice generated
/// by the rows equals Z^2 exactly when the gcd of all 2x2 minors is 1 and
/// the vectors have full rank.
pub fn spans_standard_lattice(vecs: &[[BigInt; 2]]) -> bool {
    assert!(
        vecs.iter().all(|v| !(v[0].is_zero() && v[1].is_zero())),
        "lattice span check requires nonzero vectors"
    );
    // Gather all pairwise 2x2 determinants; the index of the spanned
    // sublattice (if full rank) is the gcd of these.
    let mut g = BigInt::zero();
    for i in 0..vecs.len() {
        for j in (i + 1)..vecs.len() {
            let d = &vecs[i][0] * &vecs[j][1] - &vecs[i][1] * &vecs[j][0];
            g = g.gcd(&d);
        }
    }
    g.is_one() || g == -BigInt::one()
}

/// Convenience wrapper over machine integers.
pub fn spans_standard_lattice_i64(vecs: &[[i64; 2]]) -> bool {
    let big: Vec<[BigInt; 2]> = vecs
        .iter()
        .map(|v| [BigInt::from(v[0]), BigInt::from(v[1])])
        .collect();
    spans_standard_lattice(&big)
}
