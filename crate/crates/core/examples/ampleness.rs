//! k-very ampleness of the polarization of a generic K3 surface.
//!
//! cargo run --example ampleness

use k3_secant::ampleness::{is_k_very_ample, knutsen_obstruction, max_k, AmpleQuery};

fn main() -> Result<(), k3_secant::Error> {
    println!("{:>3} {:>6}  k-very ample for k = 0..6", "t", "max k");
    for t in 2..=12 {
        let row: String = (0..=6)
            .map(|k| {
                let q = AmpleQuery::new(t, k).unwrap();
                debug_assert!(knutsen_obstruction(q).is_none());
                if is_k_very_ample(q) {
                    'y'
                } else {
                    '.'
                }
            })
            .collect();
        println!("{t:>3} {:>6}  {row}", max_k(t)?);
    }
    Ok(())
}
