//! Test-only oracles, independent of the library's product routines.

#![allow(dead_code)]

use std::collections::{BTreeMap, HashMap};

use k3_secant::schubert::Partition;

type Poly = HashMap<Vec<usize>, i64>;

/// Schur polynomial `s_lambda(x_1, ..., x_k)` by enumerating semistandard
/// Young tableaux with entries in `1..=k`.
pub fn schur_poly(lambda: &Partition, k: usize) -> Poly {
    let shape: Vec<usize> = lambda.parts().to_vec();
    let mut out = Poly::new();
    if shape.len() > k {
        return out;
    }
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&l| vec![0; l]).collect();

    fn go(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        k: usize,
        out: &mut Poly,
    ) {
        if idx == cells.len() {
            let mut exps = vec![0; k];
            for row in grid.iter() {
                for &v in row {
                    exps[v - 1] += 1;
                }
            }
            *out.entry(exps).or_default() += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=k {
            grid[r][c] = v;
            go(idx + 1, cells, grid, k, out);
        }
        grid[r][c] = 0;
    }

    go(0, &cells, &mut grid, k, &mut out);
    out
}

pub fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_default() += ca * cb;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

/// Expands a symmetric polynomial in `k` variables in the Schur basis by
/// repeatedly peeling off the lexicographically leading monomial.
pub fn schur_expand(mut p: Poly, k: usize) -> BTreeMap<Partition, i64> {
    let mut out = BTreeMap::new();
    while let Some(lead) = p.keys().max().cloned() {
        let c = p[&lead];
        assert!(
            lead.windows(2).all(|w| w[0] >= w[1]),
            "not symmetric: {lead:?}"
        );
        let nu = Partition::new(lead).unwrap();
        for (e, v) in schur_poly(&nu, k) {
            *p.entry(e).or_default() -= c * v;
        }
        p.retain(|_, c| *c != 0);
        out.insert(nu, c);
    }
    out
}

/// `s_lambda * s_mu` in `rows` variables, truncated to partitions with first
/// part at most `cols`.
pub fn schur_product_in_box(
    lambda: &Partition,
    mu: &Partition,
    rows: usize,
    cols: usize,
) -> BTreeMap<Partition, i64> {
    let prod = poly_mul(&schur_poly(lambda, rows), &schur_poly(mu, rows));
    schur_expand(prod, rows)
        .into_iter()
        .filter(|(nu, _)| nu.part(0) <= cols)
        .collect()
}

/// Number of standard Young tableaux of a rectangular `rows x cols` shape,
/// by the hook length formula.
pub fn rectangle_syt(rows: usize, cols: usize) -> u128 {
    let n = rows * cols;
    let num: u128 = (1..=n as u128).product();
    let hooks: u128 = (0..rows)
        .flat_map(|r| (0..cols).map(move |c| ((cols - c - 1) + (rows - r - 1) + 1) as u128))
        .product();
    assert_eq!(num % hooks, 0);
    num / hooks
}
