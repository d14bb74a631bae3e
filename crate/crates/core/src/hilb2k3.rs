//! Intersection theory on `Hilb^2 S` for a K3 surface `S` with `Pic S = Z h`.
//!
//! `NS(Hilb^2 S)` is spanned by `H` (induced by `h`) and `delta` (half the
//! exceptional divisor). In that basis the Beauville-Bogomolov-Fujiki form has
//! Gram matrix `diag(2t, -2)`, and top intersections follow from the Fujiki
//! relation `D^4 = 3 q(D)^2`.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg;

/// Fujiki constant of `Hilb^2` of a K3 surface.
pub const FUJIKI_CONSTANT: i64 = 3;

/// The Néron-Severi lattice of `Hilb^2 S` for `h^2 = 2t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BbfLattice {
    t: u64,
}

impl BbfLattice {
    pub fn new(t: u64) -> Result<Self> {
        if t < 2 {
            return Err(Error::DomainError { t, min: 2 });
        }
        Ok(BbfLattice { t })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// `[[2t, 0], [0, -2]]`.
    pub fn gram(&self) -> [[BigInt; 2]; 2] {
        [
            [BigInt::from(2 * self.t), BigInt::zero()],
            [BigInt::zero(), BigInt::from(-2)],
        ]
    }

    /// The BBF bilinear form `q(D1, D2) = 2t a1 a2 - 2 b1 b2`.
    pub fn bbf(&self, d1: HilbClass, d2: HilbClass) -> BigInt {
        let t = BigInt::from(self.t);
        BigInt::from(2) * t * d1.a * d2.a - BigInt::from(2) * d1.b * d2.b
    }

    pub fn q(&self, d: HilbClass) -> BigInt {
        self.bbf(d, d)
    }

    /// `D^4 = 3 q(D)^2`.
    pub fn top_self(&self, d: HilbClass) -> BigInt {
        let q = self.q(d);
        BigInt::from(FUJIKI_CONSTANT) * &q * &q
    }

    /// The intersection number `D1 . D2 . D3 . D4`, as the full polarization
    /// of the Fujiki quartic.
    pub fn mixed4(&self, d1: HilbClass, d2: HilbClass, d3: HilbClass, d4: HilbClass) -> BigInt {
        self.bbf(d1, d2) * self.bbf(d3, d4)
            + self.bbf(d1, d3) * self.bbf(d2, d4)
            + self.bbf(d1, d4) * self.bbf(d2, d3)
    }

    /// The monomials `H^{4-i} delta^i`, recovered from the fourth powers of
    /// `H, delta, H+delta, H-delta, H+2delta` by an exact linear solve.
    pub fn monomial_table(&self) -> Result<MonomialTable> {
        let probes = [
            HilbClass::H,
            HilbClass::DELTA,
            HilbClass::H + HilbClass::DELTA,
            HilbClass::H - HilbClass::DELTA,
            HilbClass::H + HilbClass::DELTA * 2,
        ];
        // (xH + y delta)^4 = sum_i C(4,i) x^{4-i} y^i H^{4-i} delta^i
        let binom = [1i64, 4, 6, 4, 1];
        let matrix: Vec<Vec<BigInt>> = probes
            .iter()
            .map(|d| {
                (0..5u32)
                    .map(|i| {
                        BigInt::from(binom[i as usize])
                            * BigInt::from(d.a).pow(4 - i)
                            * BigInt::from(d.b).pow(i)
                    })
                    .collect()
            })
            .collect();
        let rhs: Vec<BigInt> = probes.iter().map(|&d| self.top_self(d)).collect();
        let sol = linalg::solve(&matrix, &rhs)?;
        let mut ints = sol.into_iter().map(|x| {
            if x.is_integer() {
                Ok(x.to_integer())
            } else {
                Err(Error::Inconsistent(format!("non-integral monomial {x}")))
            }
        });
        let mut next = || ints.next().expect("five unknowns");
        Ok(MonomialTable {
            h4: next()?,
            h3d: next()?,
            h2d2: next()?,
            hd3: next()?,
            d4: next()?,
        })
    }

    /// Holomorphic Euler characteristic `(q + 4)(q + 6) / 8`.
    pub fn riemann_roch_chi(&self, d: HilbClass) -> Result<BigInt> {
        let q = self.q(d);
        let chi = BigRational::new((&q + 4) * (&q + 6), BigInt::from(8));
        if chi.is_integer() {
            Ok(chi.to_integer())
        } else {
            Err(Error::NonIntegralChi(chi.to_string()))
        }
    }
}

/// `a H + b delta` in `NS(Hilb^2 S)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct HilbClass {
    pub a: i64,
    pub b: i64,
}

impl HilbClass {
    pub const H: HilbClass = HilbClass { a: 1, b: 0 };
    pub const DELTA: HilbClass = HilbClass { a: 0, b: 1 };
    /// The exceptional divisor of the Hilbert-Chow morphism, `2 delta`.
    pub const E: HilbClass = HilbClass { a: 0, b: 2 };
    /// Pull-back of the Plücker hyperplane under `Hilb^2 S -> G(1, t+1)`.
    pub const PLUCKER: HilbClass = HilbClass { a: 1, b: -1 };

    pub const fn new(a: i64, b: i64) -> Self {
        HilbClass { a, b }
    }
}

impl Add for HilbClass {
    type Output = HilbClass;
    fn add(self, o: HilbClass) -> HilbClass {
        HilbClass::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for HilbClass {
    type Output = HilbClass;
    fn sub(self, o: HilbClass) -> HilbClass {
        HilbClass::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for HilbClass {
    type Output = HilbClass;
    fn neg(self) -> HilbClass {
        HilbClass::new(-self.a, -self.b)
    }
}

impl Mul<i64> for HilbClass {
    type Output = HilbClass;
    fn mul(self, k: i64) -> HilbClass {
        HilbClass::new(self.a * k, self.b * k)
    }
}

/// `(H^4, H^3 delta, H^2 delta^2, H delta^3, delta^4)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialTable {
    pub h4: BigInt,
    pub h3d: BigInt,
    pub h2d2: BigInt,
    pub hd3: BigInt,
    pub d4: BigInt,
}

impl MonomialTable {
    pub fn as_array(&self) -> [&BigInt; 5] {
        [&self.h4, &self.h3d, &self.h2d2, &self.hd3, &self.d4]
    }

    /// `D1 . D2 . D3 . D4` by multilinear expansion over the table.
    pub fn evaluate(&self, ds: [HilbClass; 4]) -> BigInt {
        let table = self.as_array();
        let mut total = BigInt::zero();
        // choose H or delta from each factor
        for mask in 0u32..16 {
            let mut coeff = BigInt::one();
            for (i, d) in ds.iter().enumerate() {
                coeff *= if mask & (1 << i) == 0 { d.a } else { d.b };
            }
            total += coeff * table[mask.count_ones() as usize];
        }
        total
    }
}
