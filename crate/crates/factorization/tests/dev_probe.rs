//! Temporary development probe (will be replaced by the real integration
//! suite): prints what the selection/extraction pipeline does on a few
//! instances.

use exactcore::{rat, Rat};
use factorization::{
    chart_to_quad, extract_chart, select_conic, ConicKind, ConicSelection,
};
use num_traits::{One, Zero};
use polytope::{classify_quad, LabelledQuad};

fn quad(eps: (i64, i64), eta: (i64, i64), r: [(i64, i64); 4]) -> LabelledQuad {
    LabelledQuad::from_normal_form(
        rat(eps.0, eps.1),
        rat(eta.0, eta.1),
        [
            rat(r[0].0, r[0].1),
            rat(r[1].0, r[1].1),
            rat(r[2].0, r[2].1),
            rat(r[3].0, r[3].1),
        ],
    )
    .unwrap()
}

fn probe(name: &str, q: &LabelledQuad) {
    let class = classify_quad(q);
    println!(
        "--- {name}: shape {:?} equipoised {} temperate {}",
        class.shape, class.equipoised, class.temperate
    );
    match select_conic(q) {
        Ok(ConicSelection::Unique(sel)) => {
            println!(
                "    conic kind {:?} iota_on_conic {} det {}",
                sel.kind(),
                sel.iota_on_conic(),
                sel.form().det()
            );
            match extract_chart(q, &sel) {
                Ok(chart) => {
                    println!(
                        "    chart branch {:?} alpha ({}, {}) beta ({}, {}) q {:?}",
                        chart.branch, chart.alpha[0], chart.alpha[1], chart.beta[0], chart.beta[1],
                        chart.q.c
                    );
                    println!(
                        "    r_alpha ({}, {}) r_beta ({}, {}) roles {:?}",
                        chart.r_alpha[0], chart.r_alpha[1], chart.r_beta[0], chart.r_beta[1],
                        chart.facet_map.by_role
                    );
                    let back = chart_to_quad(&chart).unwrap();
                    println!(
                        "    round trip eps {} eta {} labels {:?}",
                        back.eps(),
                        back.eta(),
                        back.labels()
                    );
                }
                Err(e) => println!("    extraction error: {e}"),
            }
        }
        Ok(ConicSelection::FullPencil { .. }) => println!("    FULL PENCIL"),
        Ok(ConicSelection::ParallelogramDegenerate { .. }) => println!("    PARALLELOGRAM"),
        Err(e) => println!("    selection error: {e}"),
    }
}

#[test]
fn dev_probe() {
    let one = (1i64, 1i64);
    probe("generic (1/2,1/3) unit", &quad((1, 2), (1, 3), [one; 4]));
    probe("generic (1/5,-2/7) unit", &quad((1, 5), (-2, 7), [one; 4]));
    probe(
        "generic (1/2,1/3) labels (1,2,3,4)",
        &quad((1, 2), (1, 3), [(1, 1), (2, 1), (3, 1), (4, 1)]),
    );
    probe("trapezoid (1/3,1/3) unit", &quad((1, 3), (1, 3), [one; 4]));
    probe("trapezoid (1/3,-1/3) unit", &quad((1, 3), (-1, 3), [one; 4]));
    probe(
        "trapezoid (1/3,1/3) labels (2,1,1,1)",
        &quad((1, 3), (1, 3), [(2, 1), (1, 1), (1, 1), (1, 1)]),
    );
    probe(
        "trapezoid (1/3,1/3) labels (1,1,2,1)",
        &quad((1, 3), (1, 3), [(1, 1), (1, 1), (2, 1), (1, 1)]),
    );
    probe(
        "trapezoid (1/3,1/3) labels (1,1,1,3)",
        &quad((1, 3), (1, 3), [(1, 1), (1, 1), (1, 1), (3, 1)]),
    );
    probe(
        "trapezoid (2/5,-2/5) labels (1,2,1,1)",
        &quad((2, 5), (-2, 5), [(1, 1), (2, 1), (1, 1), (1, 1)]),
    );
    probe(
        "trapezoid (1/2,1/2) labels (1,1,5,1)",
        &quad((1, 2), (1, 2), [(1, 1), (1, 1), (5, 1), (1, 1)]),
    );
    probe("near-square (1/7,1/9) unit", &quad((1, 7), (1, 9), [one; 4]));

    // The cubic-family chart reconstructed as a quad, then re-extracted.
    use factorization::{AmbitoricChart, Branch, ChartFacetMap, GaugeRecord};
    use exactcore::RatQuadratic;
    let chart = AmbitoricChart::new(
        Branch::Positive,
        RatQuadratic::new(Rat::zero(), rat(1, 2), Rat::zero()),
        [rat(3, 2), rat(2, 1)],
        [rat(0, 1), rat(3, 4)],
        [rat(-3, 8), rat(1, 2)],
        [rat(3, 4), rat(-3, 16)],
        ChartFacetMap::identity(),
        GaugeRecord::identity(),
    )
    .unwrap();
    let q = chart_to_quad(&chart).unwrap();
    println!(
        "cubic-family quad: eps {} eta {} labels {:?} shape {:?}",
        q.eps(),
        q.eta(),
        q.labels(),
        q.shape()
    );
    probe("cubic-family chart quad", &q);

    // --- negative-branch probe: hand-built chart -> quad -> re-extraction ---
    {
        use factorization::{AmbitoricChart, Branch, ChartFacetMap, GaugeRecord};
        use exactcore::RatQuadratic;
        let mk = |a0: (i64, i64), ai: (i64, i64), ra: [(i64, i64); 2], rb: [(i64, i64); 2]| {
            AmbitoricChart::new(
                Branch::Negative,
                RatQuadratic::one_quadratic(),
                [rat(a0.0, a0.1), rat(ai.0, ai.1)],
                [Rat::zero(), Rat::one()],
                [rat(ra[0].0, ra[0].1), rat(ra[1].0, ra[1].1)],
                [rat(rb[0].0, rb[0].1), rat(rb[1].0, rb[1].1)],
                ChartFacetMap::identity(),
                GaugeRecord::identity(),
            )
        };
        let candidates: Vec<((i64,i64),(i64,i64),[(i64,i64);2],[(i64,i64);2])> = vec![
            ((2,1),(3,1),[(-1,4),(1,3)],[(1,2),(-1,5)]),
            ((3,2),(5,2),[(-1,2),(1,2)],[(1,2),(-1,2)]),
            ((2,1),(4,1),[(-1,1),(1,1)],[(1,1),(-1,1)]),
            ((5,4),(2,1),[(-1,3),(2,5)],[(3,4),(-1,6)]),
        ];
        for (a0, ai, ra, rb) in candidates {
            let tag = format!("neg chart a=({}/{},{}/{})", a0.0, a0.1, ai.0, ai.1);
            let chart = match mk(a0, ai, ra, rb) {
                Ok(c) => c,
                Err(e) => { println!("{tag}: chart invalid: {e}"); continue; }
            };
            match chart_to_quad(&chart) {
                Err(e) => println!("{tag}: chart_to_quad failed: {e}"),
                Ok(quad) => {
                    let class = classify_quad(&quad);
                    println!("{tag}: quad eps {} eta {} labels {:?} shape {:?} equipoised {} temperate {}",
                        quad.eps(), quad.eta(), quad.labels(), class.shape, class.equipoised, class.temperate);
                    match select_conic(&quad) {
                        Err(e) => println!("    select failed: {e}"),
                        Ok(ConicSelection::Unique(sel)) => {
                            println!("    conic kind {:?} iota_on {} det {}", sel.kind(), sel.iota_on_conic(), sel.form().det());
                            match extract_chart(&quad, &sel) {
                                Err(e) => println!("    extract error: {e}"),
                                Ok(back) => {
                                    println!("    back branch {:?} alpha ({}, {}) beta ({}, {})",
                                        back.branch, back.alpha[0], back.alpha[1], back.beta[0], back.beta[1]);
                                    println!("    back r_alpha ({}, {}) r_beta ({}, {}) roles {:?}",
                                        back.r_alpha[0], back.r_alpha[1], back.r_beta[0], back.r_beta[1], back.facet_map.by_role);
                                    let same = back.branch == chart.branch
                                        && back.alpha == chart.alpha && back.beta == chart.beta
                                        && back.r_alpha == chart.r_alpha && back.r_beta == chart.r_beta;
                                    println!("    exact chart match: {same}");
                                }
                            }
                        }
                        Ok(_) => println!("    select gave a non-unique selection"),
                    }
                }
            }
        }
    }

    // An equipoised trapezoid: solve the equipoise condition in the labels.
    // zeta is linear in r, so zeta(v_eps) - zeta(v_eta) = sum_j r_j * g_j.
    use polytope::extremal_components;
    let base = quad((1, 3), (1, 3), [one; 4]);
    let comps = extremal_components(&base);
    let veps = base.v_eps();
    let veta = base.v_eta();
    let g: Vec<Rat> = comps
        .iter()
        .map(|z| z.eval(&veps) - z.eval(&veta))
        .collect();
    println!("equipoise gradient {:?}", g);
    // find positive labels r = 1 + t e_j with sum r_j g_j = 0
    let total: Rat = g.iter().sum();
    for j in 0..4 {
        if g[j].is_zero() {
            continue;
        }
        let t = -&total / &g[j];
        let mut r = [Rat::one(), Rat::one(), Rat::one(), Rat::one()];
        r[j] += &t;
        if r[j] > Rat::from_integer(0.into()) {
            let qq = LabelledQuad::from_normal_form(rat(1, 3), rat(1, 3), r.clone()).unwrap();
            let cls = classify_quad(&qq);
            println!("equipoised trapezoid try j={j}: r {:?} equipoised {}", r, cls.equipoised);
            if cls.equipoised {
                probe("equipoised trapezoid", &qq);
                break;
            }
        }
    }
}
