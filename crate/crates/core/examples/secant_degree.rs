//! Degree of the secant variety of a generic K3 surface in P^{t+1}, and the
//! class of its secant lines in G(1, t+1).
//!
//! cargo run --example secant_degree

use k3_secant::enumerative::{coefficients, k3_secant_class, k3_secant_degree, K3Polarization};
use k3_secant::schubert::plucker_degree;

fn main() -> Result<(), k3_secant::Error> {
    for t in 4..=10 {
        let k3 = K3Polarization::new(t)?;
        let c = coefficients(&k3.numerics())?;
        let sigma = k3_secant_class(t)?;
        println!(
            "t = {t:>2} in P^{:<2} genus {:>2}: deg Sec = {:>4}   [beta {}, gamma {}, Plücker {}]",
            k3.n(),
            k3.genus(),
            k3_secant_degree(t)?,
            c.beta,
            c.gamma,
            plucker_degree(&sigma)?
        );
        println!("        Sigma(S) = {sigma}");
    }
    if let Err(e) = k3_secant_degree(3) {
        println!("t = 3: {e}");
    }
    Ok(())
}
