//! Flexes of the Fermat and Klein quartics over finite fields, and where their
//! tangent lines meet the curve again.

use gql::quartic::{flex_report, residual_report, FlexOptions, PlaneCurve};

fn main() {
    let opts = FlexOptions::default();
    for (name, curve) in [("Fermat", PlaneCurve::fermat_quartic()), ("Klein", PlaneCurve::klein_quartic())] {
        let flexes = flex_report(&curve, opts).unwrap();
        println!("{name}: flex form of degree {}, squarefree degree {}", flexes.degree, flexes.squarefree_degree);
        println!("  coordinate change {:?}", flexes.coordinate_change);
        for (p, pattern) in &flexes.patterns {
            println!("  factor degrees mod {p}: {pattern:?}");
        }
        let c = &flexes.counts;
        println!(
            "  over F_{}^{}: {} flexes ({} with multiplicity), {} hyperflexes",
            flexes.field.prime, flexes.field.ext_degree, c.distinct, c.with_multiplicity, c.hyperflexes
        );
        let residuals = residual_report(&curve, opts, 1000).unwrap();
        println!("  residual points: {:?}", residuals.distinct_residuals.unwrap());
    }
}
