//! The Chow ring of projective space, `A_*(P^n) = Q[H]/(H^{n+1})`.
//!
//! A [`ChowClass`] stores exactly `n + 1` rational coefficients indexed by
//! codimension: `coeffs[i]` is the coefficient of `H^i`. Everything of
//! codimension greater than `n` is discarded on construction and after every
//! product, so all arithmetic here is truncated power-series arithmetic.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational coefficient. Always reduced with a positive denominator.
pub type Rational = num_rational::BigRational;

/// Integer as a [`Rational`].
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `p / q` as a reduced [`Rational`]. Panics on `q == 0`.
pub fn ratio(p: i64, q: i64) -> Rational {
    Rational::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `"p/q"`, `"-p/q"` or a bare integer. Rejects zero denominators.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Canonical string: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// A class in `A_*(P^n)`, graded by codimension.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ChowClass {
    dim: usize,
    coeffs: Vec<Rational>,
}

impl ChowClass {
    /// Builds a class from coefficients listed by codimension. Missing
    /// trailing coefficients are zero.
    pub fn new(dim: usize, coeffs: Vec<Rational>) -> Result<Self> {
        if coeffs.len() > dim + 1 {
            return Err(Error::DimensionMismatch {
                dim,
                max: dim + 1,
                found: coeffs.len(),
            });
        }
        let mut coeffs = coeffs;
        coeffs.resize(dim + 1, Rational::zero());
        Ok(ChowClass { dim, coeffs })
    }

    pub fn from_ints(dim: usize, coeffs: &[i64]) -> Result<Self> {
        Self::new(dim, coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Builds a class from a longer coefficient list, dropping everything
    /// past codimension `dim`.
    pub fn truncated(dim: usize, mut coeffs: Vec<Rational>) -> Self {
        coeffs.truncate(dim + 1);
        coeffs.resize(dim + 1, Rational::zero());
        ChowClass { dim, coeffs }
    }

    pub fn zero(dim: usize) -> Self {
        ChowClass {
            dim,
            coeffs: vec![Rational::zero(); dim + 1],
        }
    }

    pub fn unit(dim: usize) -> Self {
        Self::constant(dim, Rational::one())
    }

    pub fn constant(dim: usize, q: Rational) -> Self {
        let mut c = Self::zero(dim);
        c.coeffs[0] = q;
        c
    }

    /// `H^i`, the class of a linear subspace of codimension `i`. Zero when
    /// `i > dim`.
    pub fn hyperplane_power(dim: usize, i: usize) -> Self {
        let mut c = Self::zero(dim);
        if i <= dim {
            c.coeffs[i] = Rational::one();
        }
        c
    }

    /// `1 + d·H`, the total Chern class of `O(d)`.
    pub fn one_plus(dim: usize, d: i64) -> Self {
        let mut c = Self::unit(dim);
        if dim >= 1 {
            c.coeffs[1] = rat(d);
        }
        c
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficient of `H^i`; zero past the truncation degree.
    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Lowest codimension carrying a nonzero coefficient.
    pub fn min_codim(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn same_ambient(&self, other: &ChowClass) -> Result<()> {
        if self.dim != other.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: other.dim,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ambient(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(ChowClass { dim: self.dim, coeffs })
    }

    pub fn checked_sub(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ambient(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(ChowClass { dim: self.dim, coeffs })
    }

    /// Truncated product: the `H^k` coefficient is `Σ_{i+j=k} a_i b_j`.
    pub fn checked_mul(&self, other: &ChowClass) -> Result<ChowClass> {
        self.same_ambient(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &ChowClass) -> ChowClass {
        let n = self.dim;
        let mut out = vec![Rational::zero(); n + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        ChowClass { dim: n, coeffs: out }
    }

    pub fn scalar_mul(&self, q: &Rational) -> ChowClass {
        ChowClass {
            dim: self.dim,
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
        }
    }

    /// Formal inverse in the truncated power-series ring.
    pub fn invert_unit(&self) -> Result<ChowClass> {
        let a0 = &self.coeffs[0];
        if a0.is_zero() {
            return Err(Error::NotInvertible);
        }
        let inv0 = a0.recip();
        let n = self.dim;
        let mut out: Vec<Rational> = Vec::with_capacity(n + 1);
        out.push(inv0.clone());
        for k in 1..=n {
            let mut acc = Rational::zero();
            for i in 1..=k {
                let a = &self.coeffs[i];
                if !a.is_zero() {
                    acc += a * &out[k - i];
                }
            }
            out.push(-(acc * &inv0));
        }
        Ok(ChowClass { dim: n, coeffs: out })
    }

    /// Integer power; negative exponents go through [`invert_unit`](Self::invert_unit).
    pub fn power(&self, k: i64) -> Result<ChowClass> {
        let base = if k < 0 {
            self.invert_unit()?
        } else {
            self.clone()
        };
        let mut e = k.unsigned_abs();
        let mut acc = ChowClass::unit(self.dim);
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul_unchecked(&sq);
            }
        }
        Ok(acc)
    }

    /// The codimension-`i` part of the class, all other grades zeroed.
    pub fn component(&self, i: usize) -> Result<ChowClass> {
        if i > self.dim {
            return Err(Error::CodimOutOfRange {
                codim: i,
                dim: self.dim,
            });
        }
        let mut c = ChowClass::zero(self.dim);
        c.coeffs[i] = self.coeffs[i].clone();
        Ok(c)
    }

    /// Degree of the dimension-zero part.
    pub fn integral(&self) -> Rational {
        self.coeffs[self.dim].clone()
    }

    /// Drops everything past codimension `dim`, which must not exceed the
    /// current ambient dimension.
    pub fn restrict_to(&self, dim: usize) -> Result<ChowClass> {
        if dim > self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: dim,
            });
        }
        Ok(ChowClass::truncated(dim, self.coeffs.clone()))
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Largest absolute numerator or denominator; useful for bounding
    /// random instances.
    pub fn height(&self) -> BigInt {
        self.coeffs
            .iter()
            .flat_map(|c| [c.numer().abs(), c.denom().clone()])
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

impl std::ops::Neg for ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        ChowClass {
            dim: self.dim,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl std::ops::Neg for &ChowClass {
    type Output = ChowClass;

    fn neg(self) -> ChowClass {
        -self.clone()
    }
}

impl std::fmt::Display for ChowClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&crate::render::pretty(self))
    }
}

/// Projective space `P^n` together with `c(TP^n) = (1 + H)^{n+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbientSpace {
    dim: usize,
    tangent_chern: ChowClass,
}

impl AmbientSpace {
    pub fn projective(dim: usize) -> Self {
        let tangent_chern = ChowClass::one_plus(dim, 1)
            .power(dim as i64 + 1)
            .expect("non-negative power");
        AmbientSpace { dim, tangent_chern }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tangent_chern(&self) -> &ChowClass {
        &self.tangent_chern
    }

    pub fn check(&self, class: &ChowClass) -> Result<()> {
        if class.dim() != self.dim {
            return Err(Error::AmbientMismatch {
                left: self.dim,
                right: class.dim(),
            });
        }
        Ok(())
    }
}
