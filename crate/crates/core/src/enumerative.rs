//! Secant and tangent varieties through their Grassmannian classes.
//!
//! For a surface `S` in `P^n` embedded by a 2-very ample `h`, the variety of
//! secant lines is a 4-dimensional cycle in `G(1, n)`:
//!
//! ```text
//! Sigma(S) = alpha sigma_{n-1,n-5} + beta sigma_{n-2,n-4} + gamma sigma_{n-3,n-3}
//! ```
//!
//! with `alpha = deg Sec S`. The tangent-line locus `X` (image of the
//! exceptional divisor) and the tangent-plane locus `T` in `G(2, n)` decompose
//! as `X = alpha' sigma_{n-1,n-4} + beta'' sigma_{n-2,n-3}` and
//! `T = alpha' sigma_{n-2,n-2,n-4} + beta' sigma_{n-2,n-3,n-3}`, with
//! `alpha' = deg Tan S`.
//!
//! For a generic K3 the Plücker degrees of these cycles are known from
//! `Hilb^2 S`, and `alpha`, `alpha'` are obtained by subtracting the
//! contributions of the other coefficients.

use num_bigint::BigInt;

use crate::ampleness::{is_k_very_ample, AmpleQuery};
use crate::error::{Error, Result};
use crate::hilb2k3::{BbfLattice, HilbClass};
use crate::schubert::{CohClass, GrassContext, Partition};

/// Numerical invariants of a smooth surface embedded by `h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct SurfaceNumerics {
    /// `h^2`
    pub d: i64,
    /// `h . K_S`
    pub hk: i64,
    /// topological Euler characteristic
    pub chi_top: i64,
}

impl SurfaceNumerics {
    pub fn new(d: i64, hk: i64, chi_top: i64) -> Result<Self> {
        let s = SurfaceNumerics { d, hk, chi_top };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.d < 1 {
            return Err(Error::Inconsistent(format!(
                "degree h^2 = {} must be positive",
                self.d
            )));
        }
        if (self.d + self.hk).rem_euclid(2) != 0 {
            return Err(Error::ParityError(self.d + self.hk));
        }
        Ok(())
    }
}

/// A K3 surface with `Pic S = Z h`, `h^2 = 2t`, embedded in `P^{t+1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct K3Polarization {
    t: u64,
}

impl K3Polarization {
    pub fn new(t: u64) -> Result<Self> {
        if t < 2 {
            return Err(Error::DomainError { t, min: 2 });
        }
        Ok(K3Polarization { t })
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    /// Ambient projective dimension `t + 1`.
    pub fn n(&self) -> u64 {
        self.t + 1
    }

    pub fn numerics(&self) -> SurfaceNumerics {
        SurfaceNumerics {
            d: 2 * self.t as i64,
            hk: 0,
            chi_top: 24,
        }
    }

    /// Genus of a hyperplane section, `t + 1`.
    pub fn genus(&self) -> i64 {
        hyperplane_genus(&self.numerics()).expect("K3 numerics are even")
    }
}

/// Degree and genus of a smooth curve.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CurveNumerics {
    pub d: u64,
    pub g: u64,
}

/// Genus of a smooth hyperplane section: `1 + (h.K + h^2) / 2`.
pub fn hyperplane_genus(s: &SurfaceNumerics) -> Result<i64> {
    s.validate()?;
    Ok(1 + (s.hk + s.d) / 2)
}

/// `binom(d-1, 2) - g`.
pub fn curve_secant_degree(c: CurveNumerics) -> BigInt {
    let d = BigInt::from(c.d);
    (&d - 1) * (&d - 2) / 2 - BigInt::from(c.g)
}

/// `2d + 2g - 2`.
pub fn curve_tangent_degree(c: CurveNumerics) -> BigInt {
    BigInt::from(2 * c.d) + BigInt::from(2 * c.g) - 2
}

/// The coefficients of the secant and tangent loci that are determined by
/// the numerics of the surface alone.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coefficients {
    /// secant lines inside a fixed `P^{n-2}`
    pub gamma: BigInt,
    /// degree of the secant variety of a hyperplane section
    pub beta: BigInt,
    /// singular curves in a pencil of hyperplane sections
    pub beta_prime: BigInt,
    /// degree of the tangent variety of a hyperplane section
    pub beta_dprime: BigInt,
}

pub fn coefficients(s: &SurfaceNumerics) -> Result<Coefficients> {
    let g = hyperplane_genus(s)?;
    let d = BigInt::from(s.d);
    let hk = BigInt::from(s.hk);
    let out = Coefficients {
        gamma: &d * (&d - 1) / 2,
        beta: (&d * (&d - 4) - &hk) / 2,
        beta_prime: BigInt::from(s.chi_top) + 2 * &hk + 3 * &d,
        beta_dprime: &hk + 3 * &d,
    };

    // the same numbers through a smooth hyperplane section, when it is a
    // genuine curve of non-negative genus
    if g >= 0 {
        let curve = CurveNumerics {
            d: s.d as u64,
            g: g as u64,
        };
        let sec = curve_secant_degree(curve);
        if sec != out.beta {
            return Err(Error::Inconsistent(format!(
                "beta {} vs curve secant {sec}",
                out.beta
            )));
        }
        let tan = curve_tangent_degree(curve);
        if tan != out.beta_dprime {
            return Err(Error::Inconsistent(format!(
                "beta'' {} vs curve tangent {tan}",
                out.beta_dprime
            )));
        }
    }
    Ok(out)
}

/// Secant pipeline gate: `h` 2-very ample and `n = t + 1 >= 5`.
fn secant_gate(t: u64) -> Result<K3Polarization> {
    let gate = Error::PreconditionError { t, required: 4 };
    if t < 4 || !is_k_very_ample(AmpleQuery::new(t, 2).map_err(|_| gate.clone())?) {
        return Err(gate);
    }
    K3Polarization::new(t)
}

/// Tangent pipeline gate: `h` 3-very ample.
fn tangent_gate(t: u64) -> Result<K3Polarization> {
    let gate = Error::PreconditionError { t, required: 6 };
    if t < 6 || !is_k_very_ample(AmpleQuery::new(t, 3).map_err(|_| gate.clone())?) {
        return Err(gate);
    }
    K3Polarization::new(t)
}

/// `deg Sec S`, as `(H - delta)^4 - 3 beta - 2 gamma`.
pub fn k3_secant_degree(t: u64) -> Result<BigInt> {
    let k3 = secant_gate(t)?;
    let lattice = BbfLattice::new(t)?;
    let c = coefficients(&k3.numerics())?;
    let total = lattice.top_self(HilbClass::PLUCKER);
    let alpha = total - 3 * &c.beta - 2 * &c.gamma;

    let ti = BigInt::from(t);
    let closed = 2 * (&ti - 2) * (&ti - 3);
    if alpha != closed {
        return Err(Error::Inconsistent(format!(
            "alpha = {alpha}, expected {closed}"
        )));
    }
    Ok(alpha)
}

/// `deg Tan S`, as `E . (H - delta)^3 - 2 beta''`.
pub fn k3_tangent_degree(t: u64) -> Result<BigInt> {
    let k3 = tangent_gate(t)?;
    let lattice = BbfLattice::new(t)?;
    let c = coefficients(&k3.numerics())?;
    let p = HilbClass::PLUCKER;
    let total = lattice.mixed4(HilbClass::E, p, p, p);
    let alpha_prime = total - 2 * &c.beta_dprime;

    let closed = 12 * (BigInt::from(t) - 2);
    if alpha_prime != closed {
        return Err(Error::Inconsistent(format!(
            "alpha' = {alpha_prime}, expected {closed}"
        )));
    }
    Ok(alpha_prime)
}

fn term(parts: &[u64], coeff: BigInt) -> (Partition, BigInt) {
    let parts: Vec<usize> = parts.iter().map(|&p| p as usize).collect();
    (
        Partition::new(parts).expect("decreasing by construction"),
        coeff,
    )
}

/// `Sigma(S) = alpha sigma_{t,t-4} + 2t(t-2) sigma_{t-1,t-3} + t(2t-1) sigma_{t-2,t-2}`
/// in `G(1, t+1)`.
pub fn k3_secant_class(t: u64) -> Result<CohClass> {
    let alpha = k3_secant_degree(t)?;
    let k3 = K3Polarization::new(t)?;
    let c = coefficients(&k3.numerics())?;
    let ctx = GrassContext::new(1, k3.n() as usize)?;
    CohClass::make(
        ctx,
        [
            term(&[t, t - 4], alpha),
            term(&[t - 1, t - 3], c.beta),
            term(&[t - 2, t - 2], c.gamma),
        ],
    )
}

/// Tangent-line locus `X` in `G(1, t+1)` and tangent-plane locus `T` in `G(2, t+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentClasses {
    pub x: CohClass,
    pub t: CohClass,
}

pub fn k3_tangent_classes(t: u64) -> Result<TangentClasses> {
    let alpha_prime = k3_tangent_degree(t)?;
    let k3 = K3Polarization::new(t)?;
    let c = coefficients(&k3.numerics())?;
    let n = k3.n() as usize;
    let x = CohClass::make(
        GrassContext::new(1, n)?,
        [
            term(&[t, t - 3], alpha_prime.clone()),
            term(&[t - 1, t - 2], c.beta_dprime),
        ],
    )?;
    let planes = CohClass::make(
        GrassContext::new(2, n)?,
        [
            term(&[t - 1, t - 1, t - 3], alpha_prime),
            term(&[t - 1, t - 2, t - 2], c.beta_prime),
        ],
    )?;
    Ok(TangentClasses { x, t: planes })
}

/// Everything the pipeline knows about one value of `t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K3Summary {
    pub t: u64,
    pub max_k: u64,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub plucker_sigma: BigInt,
    pub tangent: Option<TangentSummary>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TangentSummary {
    pub alpha_prime: BigInt,
    pub beta_prime: BigInt,
    pub beta_dprime: BigInt,
    pub plucker_x: BigInt,
    pub plucker_t: BigInt,
}

impl K3Summary {
    pub fn deg_sec(&self) -> &BigInt {
        &self.alpha
    }

    pub fn deg_tan(&self) -> Option<&BigInt> {
        self.tangent.as_ref().map(|s| &s.alpha_prime)
    }
}

/// Runs the whole pipeline for `t >= 4`; tangent data is present for `t >= 6`.
///
/// Plücker degrees come from the Schubert engine and are checked against the
/// lattice side.
pub fn k3_summary(t: u64) -> Result<K3Summary> {
    use crate::schubert::plucker_degree;

    let sigma = k3_secant_class(t)?;
    let k3 = K3Polarization::new(t)?;
    let lattice = BbfLattice::new(t)?;
    let c = coefficients(&k3.numerics())?;
    let plucker_sigma = plucker_degree(&sigma)?;
    let expected = lattice.top_self(HilbClass::PLUCKER);
    if plucker_sigma != expected {
        return Err(Error::Inconsistent(format!(
            "Plücker degree of Sigma(S) {plucker_sigma} vs (H-delta)^4 = {expected}"
        )));
    }

    let tangent = if t >= 6 {
        let classes = k3_tangent_classes(t)?;
        let plucker_x = plucker_degree(&classes.x)?;
        let p = HilbClass::PLUCKER;
        let expected = lattice.mixed4(HilbClass::E, p, p, p);
        if plucker_x != expected {
            return Err(Error::Inconsistent(format!(
                "Plücker degree of X {plucker_x} vs E.(H-delta)^3 = {expected}"
            )));
        }
        Some(TangentSummary {
            alpha_prime: k3_tangent_degree(t)?,
            beta_prime: c.beta_prime,
            beta_dprime: c.beta_dprime,
            plucker_x,
            plucker_t: plucker_degree(&classes.t)?,
        })
    } else {
        None
    };

    Ok(K3Summary {
        t,
        max_k: crate::ampleness::max_k(t)?,
        alpha: k3_secant_degree(t)?,
        beta: c.beta,
        gamma: c.gamma,
        plucker_sigma,
        tangent,
    })
}
