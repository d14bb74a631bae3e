use k3_secant::hilb2k3::{BbfLattice, HilbClass};
use k3_secant::BigInt;
use proptest::prelude::*;

fn class() -> impl Strategy<Value = HilbClass> {
    (-50i64..50, -50i64..50).prop_map(|(a, b)| HilbClass::new(a, b))
}

fn lattice() -> impl Strategy<Value = BbfLattice> {
    (2u64..=20).prop_map(|t| BbfLattice::new(t).unwrap())
}

/// Every ordering of four slots.
fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&i| seen[i] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

proptest! {
    #[test]
    fn mixed4_is_symmetric(l in lattice(), ds in prop::array::uniform4(class())) {
        let perms = permutations();
        prop_assert_eq!(perms.len(), 24);
        let base = l.mixed4(ds[0], ds[1], ds[2], ds[3]);
        for p in perms {
            prop_assert_eq!(l.mixed4(ds[p[0]], ds[p[1]], ds[p[2]], ds[p[3]]), base.clone());
        }
    }

    #[test]
    fn diagonal_is_fujiki(l in lattice(), d in class()) {
        let q = l.q(d);
        prop_assert_eq!(l.mixed4(d, d, d, d), l.top_self(d));
        prop_assert_eq!(l.top_self(d), BigInt::from(3) * &q * &q);
    }

    #[test]
    fn mixed4_is_linear(
        l in lattice(),
        d1 in class(), d1b in class(), d2 in class(), d3 in class(), d4 in class(),
        x in -20i64..20, y in -20i64..20,
    ) {
        let combo = d1 * x + d1b * y;
        let lhs = l.mixed4(combo, d2, d3, d4);
        let rhs = BigInt::from(x) * l.mixed4(d1, d2, d3, d4)
            + BigInt::from(y) * l.mixed4(d1b, d2, d3, d4);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chi_is_even(l in lattice(), d in class()) {
        prop_assert_eq!(l.riemann_roch_chi(d).unwrap(), l.riemann_roch_chi(-d).unwrap());
    }

    #[test]
    fn table_expansion_matches_polarization(l in lattice(), ds in prop::array::uniform4(class())) {
        let table = l.monomial_table().unwrap();
        prop_assert_eq!(table.evaluate(ds), l.mixed4(ds[0], ds[1], ds[2], ds[3]));
    }
}

#[test]
fn monomial_table_two_routes() {
    let (h, d) = (HilbClass::H, HilbClass::DELTA);
    for t in 2..=100u64 {
        let l = BbfLattice::new(t).unwrap();
        let solved = l.monomial_table().unwrap();
        let polarized = [
            l.mixed4(h, h, h, h),
            l.mixed4(h, h, h, d),
            l.mixed4(h, h, d, d),
            l.mixed4(h, d, d, d),
            l.mixed4(d, d, d, d),
        ];
        let ti = t as i64;
        let closed = [12 * ti * ti, 0, -4 * ti, 0, 12].map(BigInt::from);
        assert_eq!(solved.as_array().map(Clone::clone), polarized);
        assert_eq!(polarized, closed);
    }
}

#[test]
fn probe_powers() {
    let (h, d) = (HilbClass::H, HilbClass::DELTA);
    for t in 2..=60u64 {
        let l = BbfLattice::new(t).unwrap();
        let sq = |x: i64| BigInt::from(12 * x * x);
        let ti = t as i64;
        assert_eq!(l.top_self(h + d), sq(ti - 1));
        assert_eq!(l.top_self(h - d), sq(ti - 1));
        assert_eq!(l.top_self(h + d * 2), sq(ti - 4));
    }
}

#[test]
fn chi_of_plucker_class_counts_sections() {
    for t in 2..=100u64 {
        let l = BbfLattice::new(t).unwrap();
        let want = BigInt::from((t + 1) * (t + 2) / 2);
        assert_eq!(l.riemann_roch_chi(HilbClass::PLUCKER).unwrap(), want);
    }
}
