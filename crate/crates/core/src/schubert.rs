//! Schubert calculus on Grassmannians `G(l, n)` of projective `l`-planes in `P^n`.
//!
//! The cohomology ring of `G(l, n) = Grass(l+1, n+1)` has a Z-basis of Schubert
//! classes `sigma_lambda`, indexed by partitions fitting in a box with
//! `l + 1` rows and `n - l` columns. Products are computed with the Pieri rule
//! for special classes and the Littlewood-Richardson rule in general; anything
//! falling outside the box is zero.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of non-negative integers.
///
/// Trailing zeros are dropped on construction, so `(4, 0)` and `(4)` are the
/// same partition.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<usize>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// The empty partition, indexing the fundamental class.
    pub fn empty() -> Self {
        Partition::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The `i`-th part, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn weight(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    /// Parts padded with zeros to exactly `rows` entries.
    ///
    /// Panics if the partition has more than `rows` nonzero parts.
    pub fn padded(&self, rows: usize) -> Vec<usize> {
        assert!(
            self.parts.len() <= rows,
            "partition longer than {rows} rows"
        );
        let mut v = self.parts.clone();
        v.resize(rows, 0);
        v
    }

    /// True if the Young diagram of `self` contains that of `other`.
    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(o, s)| o <= s)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The Grassmannian `G(ell, n)` of `ell`-dimensional linear subspaces of `P^n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct GrassContext {
    ell: usize,
    n: usize,
}

impl GrassContext {
    pub fn new(ell: usize, n: usize) -> Result<Self> {
        if ell >= n {
            return Err(Error::InvalidContext { ell, n });
        }
        Ok(GrassContext { ell, n })
    }

    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Box height, `ell + 1`.
    pub fn rows(&self) -> usize {
        self.ell + 1
    }

    /// Box width, `n - ell`.
    pub fn cols(&self) -> usize {
        self.n - self.ell
    }

    pub fn dim(&self) -> usize {
        self.rows() * self.cols()
    }

    pub fn admits(&self, p: &Partition) -> bool {
        p.length() <= self.rows() && p.part(0) <= self.cols()
    }

    pub fn check(&self, p: &Partition) -> Result<()> {
        if self.admits(p) {
            Ok(())
        } else {
            Err(Error::InadmissiblePartition {
                partition: p.to_string(),
                rows: self.rows(),
                cols: self.cols(),
            })
        }
    }

    /// The full box, indexing the class of a point.
    pub fn point_partition(&self) -> Partition {
        Partition {
            parts: vec![self.cols(); self.rows()],
        }
    }

    /// All admissible partitions of the given weight, in ascending order.
    pub fn partitions(&self, weight: usize) -> Vec<Partition> {
        fn go(
            rows: usize,
            max_part: usize,
            remaining: usize,
            prefix: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if remaining == 0 {
                out.push(Partition {
                    parts: prefix.clone(),
                });
                return;
            }
            if rows == 0 || max_part * rows < remaining {
                return;
            }
            for p in 1..=max_part.min(remaining) {
                prefix.push(p);
                go(rows - 1, p, remaining - p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if weight <= self.dim() {
            go(self.rows(), self.cols(), weight, &mut Vec::new(), &mut out);
        }
        out.sort();
        out
    }

    /// Every admissible partition, by weight and then in ascending order.
    pub fn all_partitions(&self) -> Vec<Partition> {
        (0..=self.dim()).flat_map(|w| self.partitions(w)).collect()
    }
}

impl fmt::Display for GrassContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "G({},{})", self.ell, self.n)
    }
}

/// A homogeneous integer combination of Schubert classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohClass {
    ctx: GrassContext,
    codim: usize,
    terms: BTreeMap<Partition, BigInt>,
}

impl CohClass {
    pub fn zero(ctx: GrassContext, codim: usize) -> Self {
        CohClass {
            ctx,
            codim,
            terms: BTreeMap::new(),
        }
    }

    /// Builds a class from `(partition, coefficient)` pairs.
    ///
    /// Repeated partitions accumulate and zero coefficients are dropped. An
    /// empty list gives the zero class in codimension 0.
    pub fn make<I, C>(ctx: GrassContext, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Partition, C)>,
        C: Into<BigInt>,
    {
        let mut codim = None;
        let mut map: BTreeMap<Partition, BigInt> = BTreeMap::new();
        for (p, c) in terms {
            ctx.check(&p)?;
            let w = p.weight();
            match codim {
                None => codim = Some(w),
                Some(k) if k != w => return Err(Error::MixedCodimension(k, w)),
                _ => {}
            }
            *map.entry(p).or_default() += c.into();
        }
        map.retain(|_, c| !c.is_zero());
        Ok(CohClass {
            ctx,
            codim: codim.unwrap_or(0),
            terms: map,
        })
    }

    /// The single Schubert class `sigma_lambda`.
    pub fn basis(ctx: GrassContext, lambda: Partition) -> Result<Self> {
        CohClass::make(ctx, [(lambda, 1)])
    }

    /// The special class `sigma_p = sigma_{p,0,...,0}`.
    pub fn special(ctx: GrassContext, p: usize) -> Result<Self> {
        CohClass::basis(ctx, Partition::new(vec![p])?)
    }

    pub fn fundamental(ctx: GrassContext) -> Self {
        CohClass::basis(ctx, Partition::empty()).expect("empty partition fits")
    }

    pub fn point(ctx: GrassContext) -> Self {
        CohClass::basis(ctx, ctx.point_partition()).expect("full box fits")
    }

    pub fn ctx(&self) -> GrassContext {
        self.ctx
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    /// Dimension of the cycle, `dim G - codim`.
    pub fn dimension(&self) -> Option<usize> {
        self.ctx.dim().checked_sub(self.codim)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, p: &Partition) -> BigInt {
        self.terms.get(p).cloned().unwrap_or_default()
    }

    /// Nonzero terms in ascending partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &CohClass) -> Result<CohClass> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        if self.codim != other.codim {
            return Err(Error::MixedCodimension(self.codim, other.codim));
        }
        let mut out = self.clone();
        for (p, c) in &other.terms {
            *out.terms.entry(p.clone()).or_default() += c;
        }
        out.terms.retain(|_, c| !c.is_zero());
        Ok(out)
    }

    pub fn scale(&self, k: &BigInt) -> CohClass {
        let mut out = CohClass::zero(self.ctx, self.codim);
        if !k.is_zero() {
            out.terms = self.terms.iter().map(|(p, c)| (p.clone(), c * k)).collect();
        }
        out
    }
}

impl fmt::Display for CohClass {
    /// Highest partition first, zero-padded to the number of rows:
    /// `sigma[4,0] + 3*sigma[3,1] + 2*sigma[2,2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if !c.is_one() {
                write!(f, "{c}*")?;
            }
            write!(f, "{}", sigma_label(p, self.ctx.rows()))?;
        }
        Ok(())
    }
}

/// `sigma[a,b,...]` with the partition padded to `rows` entries.
pub fn sigma_label(p: &Partition, rows: usize) -> String {
    let parts: Vec<String> = p.padded(rows).iter().map(|x| x.to_string()).collect();
    format!("sigma[{}]", parts.join(","))
}

/// The dual partition: `lambda^[i] = cols - lambda[rows - 1 - i]`.
pub fn complement(lambda: &Partition, ctx: GrassContext) -> Result<Partition> {
    ctx.check(lambda)?;
    let rows = ctx.rows();
    let padded = lambda.padded(rows);
    Partition::new(
        (0..rows)
            .map(|i| ctx.cols() - padded[rows - 1 - i])
            .collect::<Vec<_>>(),
    )
}

/// Partitions obtained from `lambda` by adding a horizontal strip of `p`
/// boxes inside the box of `ctx`.
fn horizontal_strips(lambda: &Partition, p: usize, ctx: GrassContext) -> Vec<Partition> {
    fn go(
        i: usize,
        lam: &[usize],
        cols: usize,
        remaining: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Partition>,
    ) {
        if i == lam.len() {
            if remaining == 0 {
                out.push(Partition::new(cur.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let upper = if i == 0 { cols } else { lam[i - 1] };
        let max_add = upper.saturating_sub(lam[i]).min(remaining);
        for add in 0..=max_add {
            cur.push(lam[i] + add);
            go(i + 1, lam, cols, remaining - add, cur, out);
            cur.pop();
        }
    }
    let lam = lambda.padded(ctx.rows());
    let mut out = Vec::new();
    go(
        0,
        &lam,
        ctx.cols(),
        p,
        &mut Vec::with_capacity(lam.len()),
        &mut out,
    );
    out
}

/// `c * sigma_p` by the Pieri rule.
pub fn pieri(c: &CohClass, p: usize) -> CohClass {
    let mut out = CohClass::zero(c.ctx, c.codim + p);
    for (lambda, coeff) in &c.terms {
        for mu in horizontal_strips(lambda, p, c.ctx) {
            *out.terms.entry(mu).or_default() += coeff;
        }
    }
    out.terms.retain(|_, c| !c.is_zero());
    out
}

/// `sigma_1^d` computed by `d` Pieri steps from the fundamental class.
pub fn sigma1_power(ctx: GrassContext, d: usize) -> CohClass {
    (0..d).fold(CohClass::fundamental(ctx), |acc, _| pieri(&acc, 1))
}

/// Littlewood-Richardson coefficient `c^nu_{lambda mu}`: the number of
/// semistandard fillings of `nu / lambda` with content `mu` whose reverse
/// reading word is a lattice word.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.weight() != lambda.weight() + mu.weight() || !nu.contains(lambda) || !nu.contains(mu) {
        return 0;
    }
    if mu.length() == 0 {
        return 1;
    }
    let rows = nu.length();
    // skew cells in reading order: top row first, right to left
    let cells: Vec<(usize, usize)> = (0..rows)
        .flat_map(|r| (lambda.part(r)..nu.part(r)).rev().map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = (0..rows).map(|r| vec![0; nu.part(r)]).collect();
    let mut counts = vec![0usize; mu.length() + 1];
    let content = mu.parts();

    struct Search<'a> {
        lambda: &'a Partition,
        nu: &'a Partition,
        content: &'a [usize],
        cells: &'a [(usize, usize)],
    }

    fn fill(s: &Search<'_>, idx: usize, grid: &mut [Vec<usize>], counts: &mut [usize]) -> u64 {
        if idx == s.cells.len() {
            return 1;
        }
        let (r, c) = s.cells[idx];
        // rows are weakly increasing left to right; the right neighbour is filled
        let hi = if c + 1 < s.nu.part(r) {
            grid[r][c + 1]
        } else {
            s.content.len()
        };
        // columns strictly increase downward
        let lo = if r > 0 && c >= s.lambda.part(r - 1) {
            grid[r - 1][c] + 1
        } else {
            1
        };
        // an entry in row r (0-based) is at most r + 1
        let hi = hi.min(r + 1);
        let mut total = 0;
        for v in lo..=hi {
            if counts[v] >= s.content[v - 1] {
                continue;
            }
            if v > 1 && counts[v - 1] <= counts[v] {
                continue;
            }
            counts[v] += 1;
            grid[r][c] = v;
            total += fill(s, idx + 1, grid, counts);
            grid[r][c] = 0;
            counts[v] -= 1;
        }
        total
    }

    let search = Search {
        lambda,
        nu,
        content,
        cells: &cells,
    };
    fill(&search, 0, &mut grid, &mut counts)
}

/// General product by the Littlewood-Richardson rule, truncated to the box.
pub fn multiply(a: &CohClass, b: &CohClass) -> Result<CohClass> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    let ctx = a.ctx;
    let codim = a.codim + b.codim;
    let mut out = CohClass::zero(ctx, codim);
    if a.is_zero() || b.is_zero() || codim > ctx.dim() {
        return Ok(out);
    }
    let targets = ctx.partitions(codim);
    for (lambda, ca) in &a.terms {
        for (mu, cb) in &b.terms {
            let prod = ca * cb;
            for nu in targets
                .iter()
                .filter(|nu| nu.contains(lambda) && nu.contains(mu))
            {
                let lr = lr_coefficient(lambda, mu, nu);
                if lr != 0 {
                    *out.terms.entry(nu.clone()).or_default() += &prod * BigInt::from(lr);
                }
            }
        }
    }
    out.terms.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// Intersection number of two classes of complementary codimension.
pub fn pairing(a: &CohClass, b: &CohClass) -> Result<BigInt> {
    if a.ctx != b.ctx {
        return Err(Error::ContextMismatch);
    }
    let dim = a.ctx.dim();
    if a.codim + b.codim != dim && !(a.is_zero() || b.is_zero()) {
        return Err(Error::CodimensionMismatch(a.codim, b.codim, dim));
    }
    let mut total = BigInt::zero();
    for (lambda, c) in &a.terms {
        let dual = complement(lambda, a.ctx)?;
        if let Some(d) = b.terms.get(&dual) {
            total += c * d;
        }
    }
    Ok(total)
}

/// Degree of the cycle `c` under the Plücker embedding: `c . sigma_1^d`
/// with `d` the dimension of `c`.
pub fn plucker_degree(c: &CohClass) -> Result<BigInt> {
    let d = c
        .dimension()
        .ok_or(Error::CodimensionMismatch(c.codim, 0, c.ctx.dim()))?;
    pairing(c, &sigma1_power(c.ctx, d))
}
