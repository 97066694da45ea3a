//! The polynomial satisfied by the x-coordinates of the residual points, and
//! its comparison against residuals computed flex by flex modulo primes.

use gql::algebra::display_zpoly;
use gql::quartic::{residual_eliminant, PlaneCurve};

fn main() {
    let path = std::env::args().nth(1);
    let curve = match &path {
        Some(p) => PlaneCurve::from_json(&std::fs::read_to_string(p).unwrap()).unwrap(),
        None => PlaneCurve::klein_quartic(),
    };
    let (e, report) = residual_eliminant(&curve, 0).unwrap();
    println!("eliminant of degree {} ({} primes):", report.degree, report.reconstruction_primes);
    println!("  {}", display_zpoly(&e, "u"));
    println!("squarefree degree {}, residuals are flexes: {}", report.squarefree_degree, report.residuals_are_flexes);
    for c in &report.checks {
        println!("mod {} over F_p^{}: matches direct residuals = {}", c.prime, c.ext_degree, c.matches);
    }
    println!("irreducibility: {:?}", report.irreducibility);
}
