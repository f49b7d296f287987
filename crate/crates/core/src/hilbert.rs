//! Hilbert series, Hilbert polynomial and multiplicity of face rings.
//!
//! All arithmetic is over big integers, or big rationals for the Hilbert
//! polynomial in the monomial basis.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::betti::GradedBettiTable;
use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::scalar::{binomial, binomial_signed, factorial};
use crate::{IntPoly, RatPoly};

/// `numerator(z) / (1 - z)^denominator_exponent`, reduced so that the
/// numerator does not vanish at `z = 1` (unless it is zero).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct HilbertSeries {
    pub numerator: IntPoly,
    pub denominator_exponent: usize,
}

impl HilbertSeries {
    /// Cancels every factor `1 - z` shared by numerator and denominator.
    pub fn reduced(numerator: IntPoly, denominator_exponent: usize) -> Self {
        let mut numerator = numerator;
        let mut exp = denominator_exponent;
        if numerator.is_zero() {
            exp = 0;
        }
        while exp > 0 {
            match numerator.div_one_minus_z() {
                Some(q) => {
                    numerator = q;
                    exp -= 1;
                }
                None => break,
            }
        }
        HilbertSeries {
            numerator,
            denominator_exponent: exp,
        }
    }

    /// Krull dimension, the pole order at `z = 1`.
    pub fn dimension(&self) -> usize {
        self.denominator_exponent
    }

    /// `numerator(1)`, the multiplicity when the series is reduced.
    pub fn multiplicity(&self) -> BigInt {
        self.numerator.eval(&BigInt::one())
    }

    /// The coefficient of `z^s`:
    /// `Σ_k N_k C(s - k + d - 1, d - 1)`.
    pub fn coefficient(&self, s: usize) -> BigInt {
        let d = self.denominator_exponent;
        self.numerator
            .coeffs()
            .iter()
            .enumerate()
            .filter(|&(k, _)| k <= s)
            .map(|(k, c)| {
                if d == 0 {
                    if k == s {
                        c.clone()
                    } else {
                        BigInt::zero()
                    }
                } else {
                    c * binomial((s - k + d - 1) as u64, (d - 1) as u64)
                }
            })
            .sum()
    }

    /// First `count` coefficients of the power series.
    pub fn expansion(&self, count: usize) -> Vec<BigInt> {
        (0..count).map(|s| self.coefficient(s)).collect()
    }

    /// The polynomial `P` with `P(s)` equal to the Hilbert function for all
    /// `s` past the numerator degree, in the monomial basis.
    pub fn hilbert_polynomial(&self) -> RatPoly {
        let d = self.denominator_exponent;
        if d == 0 {
            return Poly::zero();
        }
        let denom = BigRational::from_integer(factorial((d - 1) as u64));
        let mut total = Poly::zero();
        for (k, c) in self.numerator.coeffs().iter().enumerate() {
            // C(s - k + d - 1, d - 1) = Π_{t=1}^{d-1} (s - k + t) / (d-1)!
            let mut term = Poly::constant(BigRational::from_integer(c.clone()));
            for t in 1..d {
                let shift = BigRational::from_integer(BigInt::from(t as i64 - k as i64));
                term = &term * &Poly::linear(shift);
            }
            total = &total + &term;
        }
        total.scale(&(BigRational::one() / denom))
    }

    /// Integers `m_0, ..., m_{d-1}` with
    /// `P(s) = m_0 C(s, d-1) + m_1 C(s, d-2) + ... + m_{d-1}`; `m_0` is the
    /// multiplicity.
    pub fn binomial_basis(&self) -> Vec<BigInt> {
        let d = self.denominator_exponent;
        let poly = self.hilbert_polynomial();
        // forward differences of P at 0 give the coefficients of C(s, r)
        let mut values: Vec<BigRational> = (0..d)
            .map(|s| poly.eval(&BigRational::from_integer(BigInt::from(s))))
            .collect();
        let mut diffs = Vec::with_capacity(d);
        for _ in 0..d {
            diffs.push(values[0].clone());
            values = values.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        diffs
            .into_iter()
            .rev()
            .map(|r| {
                assert!(r.is_integer(), "Hilbert polynomials are integer valued");
                r.to_integer()
            })
            .collect()
    }
}

impl fmt::Display for HilbertSeries {
    /// `(c0 + c1*z + ...) / (1-z)^d`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}) / (1-z)^{}",
            self.numerator, self.denominator_exponent
        )
    }
}

/// `h(z) / (1 - z)^d` with `h` the h-vector and `d = dim Δ + 1`.
pub fn series_from_complex(complex: &SimplicialComplex) -> Result<HilbertSeries> {
    if complex.is_void() {
        return Err(Error::VoidComplex);
    }
    let h = complex.h_vector();
    Ok(HilbertSeries {
        numerator: h.as_poly(),
        denominator_exponent: complex.krull_dim(),
    })
}

/// `Σ_{i,j} (-1)^i β_{i,j} z^j / (1 - z)^n`, reduced.
pub fn series_from_resolution(table: &GradedBettiTable) -> HilbertSeries {
    let numerator = table
        .triples()
        .into_iter()
        .fold(Poly::zero(), |acc: IntPoly, (i, j, b)| {
            let c = if i % 2 == 0 {
                BigInt::from(b)
            } else {
                -BigInt::from(b)
            };
            &acc + &Poly::monomial(c, j)
        });
    HilbertSeries::reduced(numerator, table.n)
}

/// `dim_k k[Δ]_s = Σ_i f_{i-1} C(s-1, i-1)` by direct face counting
/// (`1` in degree 0).
pub fn hilbert_function(complex: &SimplicialComplex, s: usize) -> BigInt {
    if complex.is_void() {
        return BigInt::zero();
    }
    if s == 0 {
        return BigInt::one();
    }
    let f = complex.f_vector();
    (1..=f.d())
        .map(|i| binomial_signed(s as i64 - 1, (i - 1) as u64) * f.entries()[i])
        .sum()
}

/// Hilbert-Samuel multiplicity `e(k[Δ]) = f_{d-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Multiplicity(pub u64);

/// `f_{d-1}`, cross-checked against the numerator of the Hilbert series at
/// `z = 1`.
pub fn multiplicity(complex: &SimplicialComplex) -> Result<Multiplicity> {
    let series = series_from_complex(complex)?;
    let top = complex.f_vector().top();
    assert_eq!(
        series.multiplicity().to_u64(),
        Some(top),
        "h-vector sum must equal the number of facets of top dimension"
    );
    Ok(Multiplicity(top))
}
