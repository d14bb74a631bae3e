//! The Beauville-Bogomolov-Fujiki lattice of Hilb^2 of a K3 surface.
//!
//! cargo run --example hilbert_square -- 6

use k3_secant::hilb2k3::{BbfLattice, HilbClass};

fn main() -> Result<(), k3_secant::Error> {
    let t: u64 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("t must be an integer"))
        .unwrap_or(6);
    let lattice = BbfLattice::new(t)?;
    let (h, d) = (HilbClass::H, HilbClass::DELTA);

    println!("t = {t}, Gram matrix {:?}", lattice.gram());
    for (name, class) in [
        ("H", h),
        ("delta", d),
        ("H-delta", h - d),
        ("H+2delta", h + d * 2),
    ] {
        println!(
            "  {name:>8}: q = {:>4}, D^4 = {:>6}, chi = {}",
            lattice.q(class),
            lattice.top_self(class),
            lattice.riemann_roch_chi(class)?
        );
    }

    let m = lattice.monomial_table()?;
    println!(
        "H^4 = {}, H^3 delta = {}, H^2 delta^2 = {}, H delta^3 = {}, delta^4 = {}",
        m.h4, m.h3d, m.h2d2, m.hd3, m.d4
    );
    let p = HilbClass::PLUCKER;
    println!(
        "E . (H-delta)^3 = {}",
        lattice.mixed4(HilbClass::E, p, p, p)
    );
    Ok(())
}
