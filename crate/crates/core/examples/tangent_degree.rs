//! Degree of the tangent variety, with the tangent-line class X in G(1, t+1)
//! and the tangent-plane class T in G(2, t+1).
//!
//! cargo run --example tangent_degree

use k3_secant::enumerative::{k3_tangent_classes, k3_tangent_degree};
use k3_secant::schubert::plucker_degree;

fn main() -> Result<(), k3_secant::Error> {
    for t in 6..=10 {
        let classes = k3_tangent_classes(t)?;
        println!("t = {t}: deg Tan = {}", k3_tangent_degree(t)?);
        println!(
            "  X = {}   (Plücker degree {})",
            classes.x,
            plucker_degree(&classes.x)?
        );
        println!(
            "  T = {}   (Plücker degree {})",
            classes.t,
            plucker_degree(&classes.t)?
        );
    }
    Ok(())
}
