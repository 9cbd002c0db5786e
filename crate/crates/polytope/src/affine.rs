//! Affine functions on the plane and exact affine maps between planes.

use exactcore::{rat_int, Rat};
use num_traits::{One, Signed, Zero};

/// A point of the rational plane, `[x, y]`.
pub type P2 = [Rat; 2];

/// Convenience constructor for a rational point from integers.
pub fn p2(x: i64, y: i64) -> P2 {
    [rat_int(x), rat_int(y)]
}

/// Midpoint of two points.
pub fn midpoint(p: &P2, q: &P2) -> P2 {
    let half = Rat::new(1.into(), 2.into());
    [
        (&p[0] + &q[0]) * &half,
        (&p[1] + &q[1]) * &half,
    ]
}

/// An affine function `a + b·x + c·y` on the plane, stored as `(a, b, c)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFn {
    coeffs: [Rat; 3],
}

impl AffineFn {
    pub fn new(a: Rat, b: Rat, c: Rat) -> Self {
        AffineFn { coeffs: [a, b, c] }
    }

    pub fn constant(a: Rat) -> Self {
        AffineFn::new(a, Rat::zero(), Rat::zero())
    }

    pub fn zero() -> Self {
        AffineFn::constant(Rat::zero())
    }

    pub fn one() -> Self {
        AffineFn::constant(Rat::one())
    }

    /// The coordinate function `x`.
    pub fn coord_x() -> Self {
        AffineFn::new(Rat::zero(), Rat::one(), Rat::zero())
    }

    /// The coordinate function `y`.
    pub fn coord_y() -> Self {
        AffineFn::new(Rat::zero(), Rat::zero(), Rat::one())
    }

    /// Coefficients `(a, b, c)` of `a + b·x + c·y`.
    pub fn coeffs(&self) -> &[Rat; 3] {
        &self.coeffs
    }

    /// The linear part `(b, c)`.
    pub fn linear_part(&self) -> [Rat; 2] {
        [self.coeffs[1].clone(), self.coeffs[2].clone()]
    }

    pub fn eval(&self, p: &P2) -> Rat {
        &self.coeffs[0] + &self.coeffs[1] * &p[0] + &self.coeffs[2] * &p[1]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Is the linear part zero (i.e. the function constant)?
    pub fn is_constant(&self) -> bool {
        self.coeffs[1].is_zero() && self.coeffs[2].is_zero()
    }

    pub fn add(&self, other: &AffineFn) -> AffineFn {
        AffineFn {
            coeffs: [
                &self.coeffs[0] + &other.coeffs[0],
                &self.coeffs[1] + &other.coeffs[1],
                &self.coeffs[2] + &other.coeffs[2],
            ],
        }
    }

    pub fn sub(&self, other: &AffineFn) -> AffineFn {
        AffineFn {
            coeffs: [
                &self.coeffs[0] - &other.coeffs[0],
                &self.coeffs[1] - &other.coeffs[1],
                &self.coeffs[2] - &other.coeffs[2],
            ],
        }
    }

    pub fn neg(&self) -> AffineFn {
        self.scale(&-Rat::one())
    }

    pub fn scale(&self, k: &Rat) -> AffineFn {
        AffineFn {
            coeffs: [
                &self.coeffs[0] * k,
                &self.coeffs[1] * k,
                &self.coeffs[2] * k,
            ],
        }
    }

    /// An affine function vanishing on the line through `p` and `q`
    /// (the sign convention is `det [q−p, ·−p]`; callers fix signs as needed).
    /// Panics if `p == q`.
    pub fn through(p: &P2, q: &P2) -> AffineFn {
        let dx = &q[0] - &p[0];
        let dy = &q[1] - &p[1];
        assert!(
            !(dx.is_zero() && dy.is_zero()),
            "cannot span a line through a repeated point"
        );
        // det [[dx, x - p0], [dy, y - p1]] = dx·(y - p1) - dy·(x - p0)
        let a = &dy * &p[0] - &dx * &p[1];
        AffineFn::new(a, -dy, dx)
    }

    /// Pre-compose with an affine map: returns `self ∘ t`.
    pub fn compose(&self, t: &AffineMap) -> AffineFn {
        let [_, b, c] = &self.coeffs;
        let a_new = self.eval(&t.translation);
        let b_new = b * &t.matrix[0][0] + c * &t.matrix[1][0];
        let c_new = b * &t.matrix[0][1] + c * &t.matrix[1][1];
        AffineFn::new(a_new, b_new, c_new)
    }
}

/// An invertible affine map `p ↦ M·p + v` of the plane.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineMap {
    pub matrix: [[Rat; 2]; 2],
    pub translation: P2,
}

impl AffineMap {
    pub fn identity() -> Self {
        AffineMap {
            matrix: [
                [Rat::one(), Rat::zero()],
                [Rat::zero(), Rat::one()],
            ],
            translation: [Rat::zero(), Rat::zero()],
        }
    }

    pub fn apply(&self, p: &P2) -> P2 {
        [
            &self.matrix[0][0] * &p[0] + &self.matrix[0][1] * &p[1] + &self.translation[0],
            &self.matrix[1][0] * &p[0] + &self.matrix[1][1] * &p[1] + &self.translation[1],
        ]
    }

    pub fn det(&self) -> Rat {
        &self.matrix[0][0] * &self.matrix[1][1] - &self.matrix[0][1] * &self.matrix[1][0]
    }

    /// The unique affine map sending `src[i] ↦ dst[i]` for three point pairs.
    /// Returns `None` when the source triple is collinear.
    pub fn from_three_points(src: &[P2; 3], dst: &[P2; 3]) -> Option<AffineMap> {
        let e1 = [&src[1][0] - &src[0][0], &src[1][1] - &src[0][1]];
        let e2 = [&src[2][0] - &src[0][0], &src[2][1] - &src[0][1]];
        let det = &e1[0] * &e2[1] - &e1[1] * &e2[0];
        if det.is_zero() {
            return None;
        }
        let f1 = [&dst[1][0] - &dst[0][0], &dst[1][1] - &dst[0][1]];
        let f2 = [&dst[2][0] - &dst[0][0], &dst[2][1] - &dst[0][1]];
        // M·e1 = f1, M·e2 = f2  ⇒  M = [f1 f2]·[e1 e2]⁻¹.
        let inv00 = &e2[1] / &det;
        let inv01 = -(&e2[0] / &det);
        let inv10 = -(&e1[1] / &det);
        let inv11 = &e1[0] / &det;
        let m = [
            [
                &f1[0] * &inv00 + &f2[0] * &inv10,
                &f1[0] * &inv01 + &f2[0] * &inv11,
            ],
            [
                &f1[1] * &inv00 + &f2[1] * &inv10,
                &f1[1] * &inv01 + &f2[1] * &inv11,
            ],
        ];
        let mv0 = &m[0][0] * &src[0][0] + &m[0][1] * &src[0][1];
        let mv1 = &m[1][0] * &src[0][0] + &m[1][1] * &src[0][1];
        let translation = [&dst[0][0] - &mv0, &dst[0][1] - &mv1];
        Some(AffineMap {
            matrix: m,
            translation,
        })
    }
}

/// Signed area of a triangle (positive when the vertices wind counter-clockwise).
pub fn signed_area(a: &P2, b: &P2, c: &P2) -> Rat {
    let half = Rat::new(1.into(), 2.into());
    ((&b[0] - &a[0]) * (&c[1] - &a[1]) - (&b[1] - &a[1]) * (&c[0] - &a[0])) * half
}

/// Absolute area of a triangle.
pub fn triangle_area(a: &P2, b: &P2, c: &P2) -> Rat {
    signed_area(a, b, c).abs()
}
