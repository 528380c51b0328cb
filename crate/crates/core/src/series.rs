//! Truncated power series in up to three variables `x, q, t` with exact
//! coefficients, the cycle construction, and verification of the quadratic
//! generating-function identities against brute-force counting series.
//!
//! Every series carries a degree bound per variable; products drop all
//! monomials beyond the bounds.  When every factor has `q`- and `t`-degree
//! at most its `x`-degree, truncating `q` and `t` at the `x` bound is exact
//! for all coefficients of `x`-degree within the bound.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Num, One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::generate_linear;
use crate::formulas::{divisors, totient, FormulaError};
use crate::homology::{ext_profile, is_regular_profile, pdim_simple, Dim};
use crate::kupisch::KupischSeries;

/// Exponent vector `(x, q, t)`.
pub type Exponent = [usize; 3];

/// A dense truncated power series in `x, q, t`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries<T> {
    bound: Exponent,
    coeffs: Vec<T>,
}

impl<T: Num + Clone> TruncatedSeries<T> {
    /// The zero series with the given degree bounds.
    pub fn zero(bound: Exponent) -> Self {
        let len = (bound[0] + 1) * (bound[1] + 1) * (bound[2] + 1);
        Self { bound, coeffs: vec![T::zero(); len] }
    }

    /// A single monomial `coeff · x^a q^b t^c` (zero if beyond the bounds).
    pub fn monomial(bound: Exponent, e: Exponent, coeff: T) -> Self {
        let mut s = Self::zero(bound);
        if s.in_bounds(e) {
            s.set(e, coeff);
        }
        s
    }

    /// The constant series `c`.
    pub fn constant(bound: Exponent, c: T) -> Self {
        Self::monomial(bound, [0, 0, 0], c)
    }

    /// Builds a polynomial from `(coefficient, exponent)` terms.
    pub fn from_terms(bound: Exponent, terms: &[(i64, Exponent)]) -> Self
    where
        T: From<i64>,
    {
        let mut s = Self::zero(bound);
        for &(c, e) in terms {
            if s.in_bounds(e) {
                let v = s.coeff(e).clone() + T::from(c);
                s.set(e, v);
            }
        }
        s
    }

    /// Degree bounds.
    pub fn bound(&self) -> Exponent {
        self.bound
    }

    fn in_bounds(&self, e: Exponent) -> bool {
        e.iter().zip(&self.bound).all(|(a, b)| a <= b)
    }

    fn index(&self, e: Exponent) -> usize {
        (e[0] * (self.bound[1] + 1) + e[1]) * (self.bound[2] + 1) + e[2]
    }

    fn exponent(&self, idx: usize) -> Exponent {
        let t = idx % (self.bound[2] + 1);
        let rest = idx / (self.bound[2] + 1);
        [rest / (self.bound[1] + 1), rest % (self.bound[1] + 1), t]
    }

    /// Coefficient of `x^a q^b t^c`.
    pub fn coeff(&self, e: Exponent) -> &T {
        &self.coeffs[self.index(e)]
    }

    /// Sets a coefficient.
    pub fn set(&mut self, e: Exponent, v: T) {
        let idx = self.index(e);
        self.coeffs[idx] = v;
    }

    /// Adds `v` to a coefficient (ignored beyond the bounds).
    pub fn add_to(&mut self, e: Exponent, v: T) {
        if self.in_bounds(e) {
            let idx = self.index(e);
            let old = std::mem::replace(&mut self.coeffs[idx], T::zero());
            self.coeffs[idx] = old + v;
        }
    }

    /// Non-zero terms in index order.
    pub fn terms(&self) -> Vec<(Exponent, T)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (self.exponent(i), c.clone()))
            .collect()
    }

    /// Whether every coefficient vanishes.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Self { bound: self.bound, coeffs: self.coeffs.iter().map(|v| v.clone() * c.clone()).collect() }
    }

    /// The part of `x`-degree exactly `a`, as a polynomial in `q, t`.
    pub fn x_slice(&self, a: usize) -> Vec<(Exponent, T)> {
        self.terms().into_iter().filter(|(e, _)| e[0] == a).collect()
    }

    /// Truncated power `self^m`.
    pub fn pow(&self, m: usize) -> Self {
        let mut acc = Self::constant(self.bound, T::one());
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    fn check_bounds(&self, other: &Self) {
        assert_eq!(self.bound, other.bound, "series with different truncation bounds");
    }
}

impl<T: Num + Clone> Add for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn add(self, rhs: Self) -> TruncatedSeries<T> {
        self.check_bounds(rhs);
        TruncatedSeries {
            bound: self.bound,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<T: Num + Clone> Sub for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn sub(self, rhs: Self) -> TruncatedSeries<T> {
        self.check_bounds(rhs);
        TruncatedSeries {
            bound: self.bound,
            coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<T: Num + Clone + Neg<Output = T>> Neg for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn neg(self) -> TruncatedSeries<T> {
        TruncatedSeries { bound: self.bound, coeffs: self.coeffs.iter().map(|a| -a.clone()).collect() }
    }
}

impl<T: Num + Clone> Mul for &TruncatedSeries<T> {
    type Output = TruncatedSeries<T>;
    fn mul(self, rhs: Self) -> TruncatedSeries<T> {
        self.check_bounds(rhs);
        let mut out = TruncatedSeries::zero(self.bound);
        let left = self.terms();
        let right = rhs.terms();
        for (ea, a) in &left {
            for (eb, b) in &right {
                let e = [ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]];
                if out.in_bounds(e) {
                    let idx = out.index(e);
                    let old = std::mem::replace(&mut out.coeffs[idx], T::zero());
                    out.coeffs[idx] = old + a.clone() * b.clone();
                }
            }
        }
        out
    }
}

impl<T: Num + Clone + fmt::Display + Signed> fmt::Display for TruncatedSeries<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (e, c)) in terms.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if idx > 0 { "+" } else { "" };
            let abs = c.abs();
            let mut mono = String::new();
            for (name, p) in ["x", "q", "t"].iter().zip(e) {
                match p {
                    0 => {}
                    1 => mono.push_str(name),
                    _ => mono.push_str(&format!("{name}^{p}")),
                }
            }
            let coef = if abs.is_one() && !mono.is_empty() { String::new() } else { abs.to_string() };
            write!(f, "{sign}{coef}{mono}")?;
        }
        Ok(())
    }
}

/// `log(1/(1 − D)) = Σ_{m ≥ 1} D^m / m` for a series without constant term.
pub fn log_inverse_one_minus(d: &TruncatedSeries<BigRational>) -> TruncatedSeries<BigRational> {
    assert!(d.coeff([0, 0, 0]).is_zero(), "series must have zero constant term");
    let bound = d.bound();
    let mut acc = TruncatedSeries::zero(bound);
    let mut power = TruncatedSeries::constant(bound, BigRational::one());
    for m in 1..=bound[0] {
        power = &power * d;
        let term = power.scale(&BigRational::new(BigInt::one(), BigInt::from(m)));
        acc = &acc + &term;
    }
    acc
}

/// The cycle construction: the number of cycles of atoms whose sizes add up
/// to `n` and whose weights add up to `ℓ`, given the atom series `D(x, q)`:
/// `Σ_{k | gcd(ℓ, n)} (φ(k)/k) [x^{n/k} q^{ℓ/k}] log(1/(1 − D))`.
pub fn cycle_construction(
    d: &TruncatedSeries<BigRational>,
    n: usize,
    ell: usize,
) -> Result<BigUint, FormulaError> {
    use num_integer::Integer;
    let log = log_inverse_one_minus(d);
    let g = n.gcd(&ell);
    let total: BigRational = divisors(g)
        .into_iter()
        .map(|k| {
            let e = [n / k, ell / k, 0];
            let c = if e[0] <= log.bound()[0] && e[1] <= log.bound()[1] {
                log.coeff(e).clone()
            } else {
                BigRational::zero()
            };
            BigRational::new(BigInt::from(totient(k)), BigInt::from(k)) * c
        })
        .sum();
    if !total.is_integer() || total.is_negative() {
        return Err(FormulaError::NonIntegerResult {
            name: "cycle_construction",
            n,
            ell,
            value: total.to_string(),
        });
    }
    Ok(total.to_integer().to_biguint().expect("non-negative"))
}

/// The two generating-function identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GfIdentity {
    /// `q` marks simples of projective dimension 1, `t` those of dimension 2.
    Pdim,
    /// `q` marks 1-regular simples, `t` 2-regular simples.
    Regularity,
}

impl GfIdentity {
    /// Both identities.
    pub const ALL: [GfIdentity; 2] = [GfIdentity::Pdim, GfIdentity::Regularity];

    /// Snake-case name.
    pub fn name(self) -> &'static str {
        match self {
            GfIdentity::Pdim => "pdim",
            GfIdentity::Regularity => "regularity",
        }
    }

    /// Quadratic coefficients `(A, B, C)` of `A N² + B N + C = 0`.
    pub fn equation(self, bound: Exponent) -> [TruncatedSeries<BigInt>; 3] {
        let p = |terms: &[(i64, Exponent)]| TruncatedSeries::<BigInt>::from_terms(bound, terms);
        match self {
            // x²(q−t)q(t−1) − x(2qt − 2q + t) + t − 1
            GfIdentity::Pdim => [
                p(&[
                    (1, [2, 2, 1]),
                    (-1, [2, 2, 0]),
                    (-1, [2, 1, 2]),
                    (1, [2, 1, 1]),
                    (-2, [1, 1, 1]),
                    (2, [1, 1, 0]),
                    (-1, [1, 0, 1]),
                    (1, [0, 0, 1]),
                    (-1, [0, 0, 0]),
                ]),
                // (qt − 2q + t)x − t + 2
                p(&[(1, [1, 1, 1]), (-2, [1, 1, 0]), (1, [1, 0, 1]), (-1, [0, 0, 1]), (2, [0, 0, 0])]),
                p(&[(-1, [0, 0, 0])]),
            ],
            // x³(t−1)² + x²(t−1)(q−1) − x(t − 1 + q − 1) + 1
            GfIdentity::Regularity => [
                p(&[
                    (1, [3, 0, 2]),
                    (-2, [3, 0, 1]),
                    (1, [3, 0, 0]),
                    (1, [2, 1, 1]),
                    (-1, [2, 0, 1]),
                    (-1, [2, 1, 0]),
                    (1, [2, 0, 0]),
                    (-1, [1, 0, 1]),
                    (-1, [1, 1, 0]),
                    (2, [1, 0, 0]),
                    (1, [0, 0, 0]),
                ]),
                // 2x²(t−1) + x(q−1) − 1
                p(&[(2, [2, 0, 1]), (-2, [2, 0, 0]), (1, [1, 1, 0]), (-1, [1, 0, 0]), (-1, [0, 0, 0])]),
                p(&[(1, [1, 0, 0])]),
            ],
        }
    }

    /// The displayed low-degree expansion `1 + qx + …` up to `x³`.
    pub fn displayed_prefix(self) -> Vec<(i64, Exponent)> {
        match self {
            GfIdentity::Pdim => vec![
                (1, [0, 0, 0]),
                (1, [1, 1, 0]),
                (1, [2, 2, 0]),
                (1, [2, 1, 1]),
                (1, [3, 3, 0]),
                (3, [3, 2, 1]),
                (1, [3, 1, 1]),
            ],
            GfIdentity::Regularity => vec![
                (1, [0, 0, 0]),
                (1, [1, 1, 0]),
                (1, [2, 2, 0]),
                (1, [2, 0, 1]),
                (1, [3, 3, 0]),
                (2, [3, 1, 1]),
                (1, [3, 1, 0]),
                (1, [3, 0, 0]),
            ],
        }
    }

    /// Power of `x` by which the counting series (indexed by rank − 1) must be
    /// multiplied for the quadratic equation to hold.  The regularity
    /// equation is stated for the series indexed by the rank itself, while its
    /// displayed expansion is indexed by rank − 1; substituting the displayed
    /// series directly leaves the residual `(2 + q − t)x + …`.
    pub fn x_offset(self) -> usize {
        match self {
            GfIdentity::Pdim => 0,
            GfIdentity::Regularity => 1,
        }
    }

    /// The per-algebra weights `(q-exponent, t-exponent)`, computed
    /// homologically.
    pub fn weight(self, k: &KupischSeries) -> (usize, usize) {
        let rank = k.rank();
        match self {
            GfIdentity::Pdim => {
                let dims: Vec<Dim> = (0..rank).map(|i| pdim_simple(k, i)).collect();
                (
                    dims.iter().filter(|d| **d == Dim::Finite(1)).count(),
                    dims.iter().filter(|d| **d == Dim::Finite(2)).count(),
                )
            }
            GfIdentity::Regularity => {
                let profiles: Vec<(Dim, Vec<usize>)> = (0..rank).map(|i| ext_profile(k, i)).collect();
                (
                    profiles.iter().filter(|(p, e)| is_regular_profile(*p, e, 1)).count(),
                    profiles.iter().filter(|(p, e)| is_regular_profile(*p, e, 2)).count(),
                )
            }
        }
    }
}

/// The brute-force counting series `Σ x^{rank−1} q^a t^b` over all linear
/// algebras of rank `1..=degree+1`.
pub fn brute_series(id: GfIdentity, degree: usize) -> TruncatedSeries<BigInt> {
    let bound = [degree, degree, degree];
    let mut s = TruncatedSeries::zero(bound);
    for n in 0..=degree {
        let weights: Vec<(usize, usize)> =
            generate_linear(n + 1).par_iter().map(|k| id.weight(k)).collect();
        for (a, b) in weights {
            s.add_to([n, a, b], BigInt::one());
        }
    }
    s
}

/// Outcome of a generating-function check.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GfReport {
    /// Identity checked.
    pub identity: GfIdentity,
    /// Truncation degree of the counting series in `x`.
    pub degree: usize,
    /// Power of `x` applied to the series before substitution.
    pub x_offset: usize,
    /// Whether the residual vanishes through the checked degree.
    pub residual_zero: bool,
    /// First non-vanishing residual coefficient, if any.
    pub first_residual: Option<(Exponent, String)>,
    /// Whether substituting the series without the offset also gives a
    /// vanishing residual.
    pub literal_residual_zero: bool,
    /// Whether the displayed expansion matches.
    pub prefix_matches: bool,
    /// First mismatching prefix coefficient `(exponent, expected, actual)`.
    pub first_prefix_mismatch: Option<(Exponent, String, String)>,
}

impl GfReport {
    /// Both parts hold.
    pub fn passed(&self) -> bool {
        self.residual_zero && self.prefix_matches
    }
}

fn residual(id: GfIdentity, n: &TruncatedSeries<BigInt>, offset: usize) -> TruncatedSeries<BigInt> {
    let b = n.bound();
    let bound = [b[0] + offset, b[1], b[2]];
    let mut shifted = TruncatedSeries::zero(bound);
    for (e, v) in n.terms() {
        shifted.add_to([e[0] + offset, e[1], e[2]], v);
    }
    let [a, bb, c] = id.equation(bound);
    let sq = &shifted * &shifted;
    &(&(&a * &sq) + &(&bb * &shifted)) + &c
}

/// Checks an identity on a counting series indexed by rank − 1.
pub fn check_identity(id: GfIdentity, n: &TruncatedSeries<BigInt>) -> GfReport {
    let bound = n.bound();
    let offset = id.x_offset();
    let first_residual = residual(id, n, offset)
        .terms()
        .into_iter()
        .next()
        .map(|(e, v)| (e, v.to_string()));
    let literal_residual_zero = offset == 0 || residual(id, n, 0).is_zero();
    let prefix_bound = [3.min(bound[0]), 3.min(bound[1]), 3.min(bound[2])];
    let expected = TruncatedSeries::<BigInt>::from_terms(prefix_bound, &id.displayed_prefix());
    let mut first_prefix_mismatch = None;
    'outer: for x in 0..=prefix_bound[0] {
        for q in 0..=prefix_bound[1] {
            for t in 0..=prefix_bound[2] {
                let e = [x, q, t];
                if expected.coeff(e) != n.coeff(e) {
                    first_prefix_mismatch =
                        Some((e, expected.coeff(e).to_string(), n.coeff(e).to_string()));
                    break 'outer;
                }
            }
        }
    }
    GfReport {
        identity: id,
        degree: bound[0],
        x_offset: offset,
        residual_zero: first_residual.is_none(),
        first_residual,
        literal_residual_zero,
        prefix_matches: first_prefix_mismatch.is_none(),
        first_prefix_mismatch,
    }
}

/// Builds the brute-force series and checks the identity through `degree`.
pub fn gf_verify(id: GfIdentity, degree: usize) -> GfReport {
    check_identity(id, &brute_series(id, degree))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat_series(bound: Exponent, terms: &[(i64, Exponent)]) -> TruncatedSeries<BigRational> {
        let mut s = TruncatedSeries::zero(bound);
        for &(c, e) in terms {
            s.add_to(e, BigRational::from_integer(BigInt::from(c)));
        }
        s
    }

    #[test]
    fn arithmetic() {
        let b = [4, 2, 0];
        let x = TruncatedSeries::<BigInt>::monomial(b, [1, 0, 0], BigInt::one());
        let one = TruncatedSeries::constant(b, BigInt::one());
        let s = &one + &x;
        let sq = &s * &s;
        assert_eq!(sq.coeff([1, 0, 0]), &BigInt::from(2));
        assert_eq!(s.pow(5).coeff([4, 0, 0]), &BigInt::from(5));
        assert!((&sq - &sq).is_zero());
        assert_eq!(s.to_string(), "1+x");
    }

    #[test]
    fn single_atom_cycles() {
        let d = rat_series([8, 8, 0], &[(1, [1, 0, 0])]);
        for n in 1..=8 {
            assert_eq!(cycle_construction(&d, n, 0).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn necklaces_of_two_atoms() {
        // Atoms x and xq: binary necklaces of length n with ℓ ones.
        let d = rat_series([6, 6, 0], &[(1, [1, 0, 0]), (1, [1, 1, 0])]);
        assert_eq!(cycle_construction(&d, 4, 2).unwrap(), BigUint::from(2u8));
        assert_eq!(cycle_construction(&d, 6, 3).unwrap(), BigUint::from(4u8));
    }

    #[test]
    fn low_degree_identities() {
        for id in GfIdentity::ALL {
            let report = gf_verify(id, 6);
            assert!(report.passed(), "{report:?}");
            assert_eq!(report.literal_residual_zero, id == GfIdentity::Pdim);
        }
    }
}
