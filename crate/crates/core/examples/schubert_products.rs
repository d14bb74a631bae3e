//! Pieri powers, a Littlewood-Richardson product and the duality tables.
//!
//! cargo run --example schubert_products

use k3_secant::schubert::{
    multiply, pairing, plucker_degree, sigma1_power, sigma_label, CohClass, GrassContext, Partition,
};

fn main() -> Result<(), k3_secant::Error> {
    let g15 = GrassContext::new(1, 5)?;
    println!("in {g15}:");
    println!("  sigma_1^3 = {}", sigma1_power(g15, 3));
    println!("  sigma_1^4 = {}", sigma1_power(g15, 4));

    let s21 = CohClass::basis(g15, Partition::new(vec![2, 1])?)?;
    println!("  sigma[2,1]^2 = {}", multiply(&s21, &s21)?);
    println!(
        "  deg {g15} = {}",
        plucker_degree(&CohClass::fundamental(g15))?
    );

    // codimension 4 against dimension 4 in G(1, 7)
    let n = 7;
    let ctx = GrassContext::new(1, n)?;
    let dims = [[n - 1, n - 5], [n - 2, n - 4], [n - 3, n - 3]];
    let codims = [[4, 0], [3, 1], [2, 2]];
    println!("\nintersection table in {ctx}:");
    for d in dims {
        let p = Partition::new(d.to_vec())?;
        let a = CohClass::basis(ctx, p.clone())?;
        let row: Vec<String> = codims
            .iter()
            .map(|c| {
                let b = CohClass::basis(ctx, Partition::new(c.to_vec()).unwrap()).unwrap();
                pairing(&a, &b).unwrap().to_string()
            })
            .collect();
        println!("  {}: {}", sigma_label(&p, 2), row.join(" "));
    }
    Ok(())
}
