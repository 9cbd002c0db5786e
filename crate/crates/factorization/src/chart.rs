//! The ambitoric coordinate chart extracted from a labelled quadrilateral.
//!
//! A chart consists of a branch (which momentum model applies), a quadratic
//! `q`, four root parameters `β0 < β∞ ≤ α0 < α∞` cutting out the coordinate
//! box `[α0, α∞] × [β0, β∞]`, and four boundary weights `r` (one per box
//! facet; zero marks an omitted facet).  Quadratics follow the convention
//! `q(z) = q0·z² + 2·q1·z + q2` with stored coefficients `(q0, q1, q2)`.
//!
//! The chart determines the original quadrilateral through its momentum map
//! (see [`crate::momentum::chart_to_quad`]); two charts related by the gauge
//! actions in [`crate::gauge`] describe the same quadrilateral.

use crate::FactorError;
use exactcore::{parse_rat, rat_to_string, Rat, RatQuadratic};
use num_traits::{Signed, Zero};
use polytope::FacetId;
use serde_json::{json, Map, Value};

/// Which momentum model the chart uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Branch {
    /// Nonsingular conic: momentum map `(x, y) ↦ (x·y, (x+y)/2, 1) / q(x, y)`.
    Positive,
    /// Line-pair conic: momentum map `(x, y) ↦ (1, x, y) / (x − y)`, with
    /// `q ≡ 1`.
    Negative,
}

impl Branch {
    pub fn as_str(self) -> &'static str {
        match self {
            Branch::Positive => "positive",
            Branch::Negative => "negative",
        }
    }

    pub fn from_str_tag(s: &str) -> Option<Branch> {
        match s {
            "positive" => Some(Branch::Positive),
            "negative" => Some(Branch::Negative),
            _ => None,
        }
    }
}

/// Projective type of the chart quadratic `q`, by the sign of its
/// discriminant.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    /// `disc(q) < 0`: no real roots.
    Elliptic,
    /// `disc(q) = 0`: a double root.
    Parabolic,
    /// `disc(q) > 0`: two real roots.
    Hyperbolic,
}

/// Which quadrilateral facet plays each chart role.  Roles are named by the
/// same enum as quadrilateral facets; `by_role[role.index()]` is the facet
/// of the original quadrilateral sitting at that chart boundary.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChartFacetMap {
    pub by_role: [FacetId; 4],
}

impl ChartFacetMap {
    pub fn identity() -> Self {
        ChartFacetMap {
            by_role: FacetId::ALL,
        }
    }

    /// The quadrilateral facet playing `role`.
    pub fn quad_facet(&self, role: FacetId) -> FacetId {
        self.by_role[role.index()]
    }

    /// The chart role played by quadrilateral facet `f`.
    pub fn role_of(&self, f: FacetId) -> FacetId {
        for role in FacetId::ALL {
            if self.by_role[role.index()] == f {
                return role;
            }
        }
        unreachable!("facet map is a permutation");
    }

    fn is_permutation(&self) -> bool {
        let mut seen = [false; 4];
        for f in self.by_role {
            seen[f.index()] = true;
        }
        seen.iter().all(|&s| s)
    }
}

/// Bookkeeping of the normalisations applied during extraction: the Möbius
/// matrix taking the raw stereographic parameter to the chart coordinate,
/// and the factor applied to the conic identification so that the polarised
/// `q` equals `1` at the box centre.  Identity for directly constructed
/// charts; not consumed by any downstream computation.
#[derive(Clone, Debug)]
pub struct GaugeRecord {
    pub mobius: [[Rat; 2]; 2],
    pub phi_scale: Rat,
}

impl GaugeRecord {
    pub fn identity() -> Self {
        GaugeRecord {
            mobius: [
                [Rat::from_integer(1.into()), Rat::zero()],
                [Rat::zero(), Rat::from_integer(1.into())],
            ],
            phi_scale: Rat::from_integer(1.into()),
        }
    }
}

/// An ambitoric chart: branch, quadratic, root parameters and weights.
#[derive(Clone, Debug)]
pub struct AmbitoricChart {
    pub branch: Branch,
    /// `q(z) = q0·z² + 2·q1·z + q2`; constant `1` on the negative branch.
    pub q: RatQuadratic,
    /// `(α0, α∞)` with `α0 < α∞`.
    pub alpha: [Rat; 2],
    /// `(β0, β∞)` with `β0 < β∞ ≤ α0` (strict `<` on the negative branch).
    pub beta: [Rat; 2],
    /// Boundary weights on the `x = α0` and `x = α∞` facets; sign pattern
    /// `r_alpha[0] < 0 < r_alpha[1]`, zero marking an omitted facet.
    pub r_alpha: [Rat; 2],
    /// Boundary weights on the `y = β0` and `y = β∞` facets; sign pattern
    /// `r_beta[0] > 0 > r_beta[1]`, zero marking an omitted facet.
    pub r_beta: [Rat; 2],
    pub facet_map: ChartFacetMap,
    pub gauge: GaugeRecord,
}

impl AmbitoricChart {
    /// Construct and validate.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        branch: Branch,
        q: RatQuadratic,
        alpha: [Rat; 2],
        beta: [Rat; 2],
        r_alpha: [Rat; 2],
        r_beta: [Rat; 2],
        facet_map: ChartFacetMap,
        gauge: GaugeRecord,
    ) -> Result<Self, FactorError> {
        let chart = AmbitoricChart {
            branch,
            q,
            alpha,
            beta,
            r_alpha,
            r_beta,
            facet_map,
            gauge,
        };
        chart.validate()?;
        Ok(chart)
    }

    /// Check the chart invariants: ordering of the root parameters
    /// (`β0 < β∞ ≤ α0 < α∞`, strict between `β∞` and `α0` on the negative
    /// branch), positivity of the polarised `q` at the four box corners
    /// (hence on the whole closed box, by bi-affineness), `q ≡ 1` on the
    /// negative branch, the sign pattern of the weights (zeros allowed for
    /// omitted facets, but not all four), and `facet_map` being a
    /// permutation.
    pub fn validate(&self) -> Result<(), FactorError> {
        let [a0, ai] = &self.alpha;
        let [b0, bi] = &self.beta;
        if !(b0 < bi) || !(a0 < ai) {
            return Err(FactorError::InvalidChart(
                "root parameters out of order within a family".into(),
            ));
        }
        match self.branch {
            Branch::Positive => {
                if !(bi <= a0) {
                    return Err(FactorError::InvalidChart(
                        "beta-interval must not overlap alpha-interval".into(),
                    ));
                }
                for (x, y) in self.corners() {
                    if !self.q.eval_pol(&x, &y).is_positive() {
                        return Err(FactorError::InvalidChart(format!(
                            "q not positive at box corner ({x}, {y})"
                        )));
                    }
                }
            }
            Branch::Negative => {
                if !(bi < a0) {
                    return Err(FactorError::InvalidChart(
                        "negative branch requires beta-infinity strictly below alpha-zero".into(),
                    ));
                }
                let c = &self.q.c;
                if !c[0].is_zero() || !c[1].is_zero() || c[2] != Rat::from_integer(1.into()) {
                    return Err(FactorError::InvalidChart(
                        "negative branch requires q identically 1".into(),
                    ));
                }
            }
        }
        let sign_ok = |r: &Rat, negative: bool| -> bool {
            r.is_zero() || (negative && r.is_negative()) || (!negative && r.is_positive())
        };
        if !sign_ok(&self.r_alpha[0], true)
            || !sign_ok(&self.r_alpha[1], false)
            || !sign_ok(&self.r_beta[0], false)
            || !sign_ok(&self.r_beta[1], true)
        {
            return Err(FactorError::InvalidChart(
                "weight sign pattern must be (-, +, +, -) across (alpha0, alphaInf, beta0, betaInf)"
                    .into(),
            ));
        }
        if self.r_alpha.iter().chain(self.r_beta.iter()).all(Zero::is_zero) {
            return Err(FactorError::InvalidChart("all four weights are zero".into()));
        }
        if !self.facet_map.is_permutation() {
            return Err(FactorError::InvalidChart(
                "facet map is not a permutation".into(),
            ));
        }
        Ok(())
    }

    /// Box corners in the order `(α0,β0), (α∞,β0), (α0,β∞), (α∞,β∞)`.
    pub fn corners(&self) -> [(Rat, Rat); 4] {
        [
            (self.alpha[0].clone(), self.beta[0].clone()),
            (self.alpha[1].clone(), self.beta[0].clone()),
            (self.alpha[0].clone(), self.beta[1].clone()),
            (self.alpha[1].clone(), self.beta[1].clone()),
        ]
    }

    /// Centre of the coordinate box.
    pub fn box_center(&self) -> (Rat, Rat) {
        let half = Rat::new(1.into(), 2.into());
        (
            (&self.alpha[0] + &self.alpha[1]) * &half,
            (&self.beta[0] + &self.beta[1]) * &half,
        )
    }

    /// Root parameter of a chart role.
    pub fn role_gamma(&self, role: FacetId) -> &Rat {
        match role {
            FacetId::Alpha0 => &self.alpha[0],
            FacetId::AlphaInf => &self.alpha[1],
            FacetId::Beta0 => &self.beta[0],
            FacetId::BetaInf => &self.beta[1],
        }
    }

    /// Weight of a chart role.
    pub fn role_r(&self, role: FacetId) -> &Rat {
        match role {
            FacetId::Alpha0 => &self.r_alpha[0],
            FacetId::AlphaInf => &self.r_alpha[1],
            FacetId::Beta0 => &self.r_beta[0],
            FacetId::BetaInf => &self.r_beta[1],
        }
    }

    /// Is the chart facet at `role` omitted (weight zero)?
    pub fn role_omitted(&self, role: FacetId) -> bool {
        self.role_r(role).is_zero()
    }

    /// Projective type of the chart quadratic.
    pub fn classify_type(&self) -> ConicClass {
        let d = self.q.disc();
        if d.is_negative() {
            ConicClass::Elliptic
        } else if d.is_zero() {
            ConicClass::Parabolic
        } else {
            ConicClass::Hyperbolic
        }
    }

    /// Serialise to the chart JSON schema:
    ///
    /// ```json
    /// {"branch": "positive",
    ///  "q": ["q0", "q1", "q2"],
    ///  "alpha": ["a0", "a1"],
    ///  "beta": ["b0", "b1"],
    ///  "r": {"alpha": ["...", "..."], "beta": ["...", "..."]}}
    /// ```
    ///
    /// All numbers are exact rationals as strings; `q` lists the stored
    /// coefficients of `q(z) = q0·z² + 2·q1·z + q2`.
    pub fn to_json(&self) -> Value {
        let rs = |v: &Rat| Value::String(rat_to_string(v));
        let mut m = Map::new();
        m.insert("branch".into(), json!(self.branch.as_str()));
        m.insert(
            "q".into(),
            Value::Array(self.q.c.iter().map(&rs).collect()),
        );
        m.insert(
            "alpha".into(),
            Value::Array(self.alpha.iter().map(&rs).collect()),
        );
        m.insert(
            "beta".into(),
            Value::Array(self.beta.iter().map(&rs).collect()),
        );
        let mut r = Map::new();
        r.insert(
            "alpha".into(),
            Value::Array(self.r_alpha.iter().map(&rs).collect()),
        );
        r.insert(
            "beta".into(),
            Value::Array(self.r_beta.iter().map(&rs).collect()),
        );
        m.insert("r".into(), Value::Object(r));
        Value::Object(m)
    }

    /// Parse the chart JSON schema produced by [`AmbitoricChart::to_json`].
    /// The facet map and gauge record are not part of the schema; a parsed
    /// chart carries the identity for both (any consistent relabelling
    /// yields an equivalent quadrilateral).
    pub fn from_json(v: &Value) -> Result<Self, FactorError> {
        let obj = v
            .as_object()
            .ok_or_else(|| FactorError::InvalidChart("chart JSON must be an object".into()))?;
        let branch_str = obj
            .get("branch")
            .and_then(Value::as_str)
            .ok_or_else(|| FactorError::InvalidChart("missing or non-string 'branch'".into()))?;
        let branch = Branch::from_str_tag(branch_str).ok_or_else(|| {
            FactorError::InvalidChart(format!("unknown branch tag '{branch_str}'"))
        })?;
        let rat_at = |key: &str, len: usize| -> Result<Vec<Rat>, FactorError> {
            let arr = obj
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| FactorError::InvalidChart(format!("missing array '{key}'")))?;
            if arr.len() != len {
                return Err(FactorError::InvalidChart(format!(
                    "'{key}' must have {len} entries"
                )));
            }
            arr.iter().map(|e| json_rat(e, key)).collect()
        };
        let q = rat_at("q", 3)?;
        let alpha = rat_at("alpha", 2)?;
        let beta = rat_at("beta", 2)?;
        let robj = obj
            .get("r")
            .and_then(Value::as_object)
            .ok_or_else(|| FactorError::InvalidChart("missing object 'r'".into()))?;
        let r_of = |key: &str| -> Result<Vec<Rat>, FactorError> {
            let arr = robj
                .get(key)
                .and_then(Value::as_array)
                .ok_or_else(|| FactorError::InvalidChart(format!("missing array 'r.{key}'")))?;
            if arr.len() != 2 {
                return Err(FactorError::InvalidChart(format!(
                    "'r.{key}' must have 2 entries"
                )));
            }
            arr.iter().map(|e| json_rat(e, key)).collect()
        };
        let ra = r_of("alpha")?;
        let rb = r_of("beta")?;
        AmbitoricChart::new(
            branch,
            RatQuadratic::new(q[0].clone(), q[1].clone(), q[2].clone()),
            [alpha[0].clone(), alpha[1].clone()],
            [beta[0].clone(), beta[1].clone()],
            [ra[0].clone(), ra[1].clone()],
            [rb[0].clone(), rb[1].clone()],
            ChartFacetMap::identity(),
            GaugeRecord::identity(),
        )
    }

    /// Parse from a JSON string.
    pub fn from_json_str(s: &str) -> Result<Self, FactorError> {
        let v: Value = serde_json::from_str(s)
            .map_err(|e| FactorError::InvalidChart(format!("bad JSON: {e}")))?;
        AmbitoricChart::from_json(&v)
    }
}

/// Exact rational from a JSON value: a string `"p/q"` or an integer.
/// Floats are rejected (they cannot be trusted to carry exact data).
fn json_rat(v: &Value, context: &str) -> Result<Rat, FactorError> {
    match v {
        Value::String(s) => parse_rat(s).ok_or_else(|| {
            FactorError::InvalidChart(format!("bad rational in '{context}': '{s}'"))
        }),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Err(FactorError::InvalidChart(format!(
                    "non-integer number in '{context}': exact rationals must be strings"
                )))
            }
        }
        _ => Err(FactorError::InvalidChart(format!(
            "expected rational string in '{context}'"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use exactcore::rat;

    fn sample_chart() -> AmbitoricChart {
        // The cubic family instance: q = z, alpha = (3/2, 2), beta = (0, 3/4).
        AmbitoricChart::new(
            Branch::Positive,
            RatQuadratic::new(Rat::zero(), rat(1, 2), Rat::zero()),
            [rat(3, 2), rat(2, 1)],
            [rat(0, 1), rat(3, 4)],
            [rat(-3, 8), rat(1, 2)],
            [rat(3, 4), rat(-3, 16)],
            ChartFacetMap::identity(),
            GaugeRecord::identity(),
        )
        .unwrap()
    }

    #[test]
    fn json_round_trip() {
        let chart = sample_chart();
        let v = chart.to_json();
        let back = AmbitoricChart::from_json(&v).unwrap();
        assert_eq!(back.q.c, chart.q.c);
        assert_eq!(back.alpha, chart.alpha);
        assert_eq!(back.beta, chart.beta);
        assert_eq!(back.r_alpha, chart.r_alpha);
        assert_eq!(back.r_beta, chart.r_beta);
        assert_eq!(back.branch, chart.branch);
    }

    #[test]
    fn validation_rejects_bad_sign_pattern() {
        let mut chart = sample_chart();
        chart.r_alpha[0] = rat(3, 8);
        assert!(matches!(
            chart.validate(),
            Err(FactorError::InvalidChart(_))
        ));
    }

    #[test]
    fn validation_rejects_overlapping_intervals() {
        let mut chart = sample_chart();
        chart.beta[1] = rat(8, 5);
        assert!(matches!(
            chart.validate(),
            Err(FactorError::InvalidChart(_))
        ));
    }

    #[test]
    fn classify_by_discriminant() {
        let chart = sample_chart();
        // q = z has disc (1/2)^2 > 0.
        assert_eq!(chart.classify_type(), ConicClass::Hyperbolic);
    }

    #[test]
    fn floats_rejected_in_json() {
        let s = r#"{"branch":"positive","q":[0.5,"1","0"],"alpha":["1","2"],
                    "beta":["0","1"],"r":{"alpha":["-1","1"],"beta":["1","-1"]}}"#;
        assert!(AmbitoricChart::from_json_str(s).is_err());
    }
}
