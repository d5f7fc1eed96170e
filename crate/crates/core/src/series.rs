//! Truncated formal power series with exact `i64` coefficients.
//!
//! A [`TruncatedSeries`] of order `N` stores the coefficients of
//! `q^0, ..., q^N`, i.e. a power series modulo `q^(N+1)`. Every operation is
//! checked: an overflow of the coefficient type is an error, never a wrap.
//! Operands must share the same order; mixing orders is rejected instead of
//! silently truncating.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("integer overflow in {0}")]
    Overflow(&'static str),
    #[error("constant term {0} is not a unit")]
    NonUnit(i64),
    #[error("coefficient index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("term {index} violates its declared valuation {valuation} (nonzero coefficient at q^{exponent})")]
    Valuation {
        index: usize,
        valuation: usize,
        exponent: usize,
    },
    #[error("valuation decreased from {previous} to {current} at term {index}")]
    ValuationDecreasing {
        index: usize,
        previous: usize,
        current: usize,
    },
    #[error("valuation stayed at or below the order for {0} consecutive terms")]
    NotConvergent(usize),
    #[error("series must have {expected} coefficients, got {actual}")]
    BadLength { expected: usize, actual: usize },
}

pub type Result<T> = std::result::Result<T, SeriesError>;

/// Upper bound on how many factors/terms a convergent product or sum may
/// contribute before we assume the valuation function is not unbounded.
const MAX_CONVERGENT_TERMS: usize = 1 << 20;

/// A power series modulo `q^(order+1)`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawSeries")]
pub struct TruncatedSeries {
    order: usize,
    coeffs: Vec<i64>,
}

#[derive(Deserialize)]
struct RawSeries {
    order: usize,
    coeffs: Vec<i64>,
}

impl TryFrom<RawSeries> for TruncatedSeries {
    type Error = SeriesError;

    fn try_from(raw: RawSeries) -> Result<Self> {
        TruncatedSeries::from_coeffs(raw.order, raw.coeffs)
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries {
            order,
            coeffs: vec![0; order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(1, 0, order)
    }

    /// `c * q^k`, or zero when `k > order`.
    pub fn monomial(c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Builds a series from exactly `order + 1` coefficients.
    pub fn from_coeffs(order: usize, coeffs: Vec<i64>) -> Result<Self> {
        if coeffs.len() != order + 1 {
            return Err(SeriesError::BadLength {
                expected: order + 1,
                actual: coeffs.len(),
            });
        }
        Ok(TruncatedSeries { order, coeffs })
    }

    /// Builds a series from a sparse list of `(exponent, coefficient)` pairs,
    /// dropping exponents above `order` and summing duplicates.
    pub fn from_terms<I>(order: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, i64)>,
    {
        let mut s = Self::zero(order);
        for (k, c) in terms {
            if k <= order {
                s.coeffs[k] = s.coeffs[k].checked_add(c).ok_or(SeriesError::Overflow("from_terms"))?;
            }
        }
        Ok(s)
    }

    /// `sum_{m >= 1} q^(m d)`, the expansion of `q^d / (1 - q^d)`.
    pub fn geometric(d: usize, order: usize) -> Self {
        assert!(d >= 1, "geometric series needs d >= 1");
        let mut s = Self::zero(order);
        for k in (d..=order).step_by(d) {
            s.coeffs[k] = 1;
        }
        s
    }

    /// `1 + c q^k`, the usual building block of infinite products.
    pub fn binomial(c: i64, k: usize, order: usize) -> Self {
        let mut s = Self::one(order);
        if k <= order {
            // k == 0 folds into the constant term
            s.coeffs[k] += c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<i64> {
        self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Result<i64> {
        self.coeffs.get(k).copied().ok_or(SeriesError::IndexOutOfRange {
            index: k,
            order: self.order,
        })
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// Exponent of the lowest nonzero coefficient, or `None` for zero.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|&c| c != 0)
    }

    fn check_order(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            return Err(SeriesError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_add(*b).ok_or(SeriesError::Overflow("add")))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a.checked_sub(*b).ok_or(SeriesError::Overflow("sub")))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    pub fn neg(&self) -> Result<Self> {
        self.scale(-1)
    }

    pub fn scale(&self, c: i64) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|a| a.checked_mul(c).ok_or(SeriesError::Overflow("scale")))
            .collect::<Result<Vec<_>>>()?;
        Ok(TruncatedSeries {
            order: self.order,
            coeffs,
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_order(other)?;
        let n = self.order;
        let mut out = vec![0i64; n + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs[..=n - i].iter().enumerate() {
                if b == 0 {
                    continue;
                }
                let term = a.checked_mul(b).ok_or(SeriesError::Overflow("mul"))?;
                out[i + j] = out[i + j].checked_add(term).ok_or(SeriesError::Overflow("mul"))?;
            }
        }
        Ok(TruncatedSeries { order: n, coeffs: out })
    }

    /// Multiplicative inverse of a series whose constant term is `±1`.
    pub fn invert_unit(&self) -> Result<Self> {
        let a0 = self.coeffs[0];
        if a0 != 1 && a0 != -1 {
            return Err(SeriesError::NonUnit(a0));
        }
        let n = self.order;
        let mut inv = vec![0i64; n + 1];
        // a0 is its own inverse
        inv[0] = a0;
        for k in 1..=n {
            let mut acc: i64 = 0;
            for i in 1..=k {
                let a = self.coeffs[i];
                if a == 0 {
                    continue;
                }
                let t = a.checked_mul(inv[k - i]).ok_or(SeriesError::Overflow("invert_unit"))?;
                acc = acc.checked_add(t).ok_or(SeriesError::Overflow("invert_unit"))?;
            }
            inv[k] = acc.checked_mul(-a0).ok_or(SeriesError::Overflow("invert_unit"))?;
        }
        Ok(TruncatedSeries { order: n, coeffs: inv })
    }

    /// `self / other` for a unit `other`.
    pub fn div_unit(&self, other: &Self) -> Result<Self> {
        self.mul(&other.invert_unit()?)
    }

    /// Least exponent where the two series differ, `None` when equal.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<usize>> {
        self.check_order(other)?;
        Ok(self.coeffs.iter().zip(&other.coeffs).position(|(a, b)| a != b))
    }

    /// Nonzero `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, i64)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(k, &c)| (k, c))
    }
}

/// Evaluates `prod_{j >= 1} factor(j)` modulo `q^(order+1)`.
///
/// `valuation(j)` must be nondecreasing and unbounded, and `factor(j) - 1`
/// must vanish below `q^valuation(j)`. Factors with `valuation(j) > order`
/// are congruent to 1 and are not evaluated.
pub fn product_converging<F, V>(mut factor: F, mut valuation: V, order: usize) -> Result<TruncatedSeries>
where
    F: FnMut(usize) -> Result<TruncatedSeries>,
    V: FnMut(usize) -> usize,
{
    let mut acc = TruncatedSeries::one(order);
    let mut previous = 0;
    for j in 1.. {
        let v = valuation(j);
        if v < previous {
            return Err(SeriesError::ValuationDecreasing {
                index: j,
                previous,
                current: v,
            });
        }
        previous = v;
        if v > order {
            break;
        }
        if j > MAX_CONVERGENT_TERMS {
            return Err(SeriesError::NotConvergent(MAX_CONVERGENT_TERMS));
        }
        let f = factor(j)?;
        check_valuation(&f, 1, j, v)?;
        acc = acc.mul(&f)?;
    }
    Ok(acc)
}

/// Evaluates `sum_{d >= 1} term(d)` modulo `q^(order+1)`, with the same
/// valuation contract as [`product_converging`] (here `term(d)` itself must
/// vanish below `q^valuation(d)`).
pub fn sum_converging<F, V>(mut term: F, mut valuation: V, order: usize) -> Result<TruncatedSeries>
where
    F: FnMut(usize) -> Result<TruncatedSeries>,
    V: FnMut(usize) -> usize,
{
    let mut acc = TruncatedSeries::zero(order);
    let mut previous = 0;
    for d in 1.. {
        let v = valuation(d);
        if v < previous {
            return Err(SeriesError::ValuationDecreasing {
                index: d,
                previous,
                current: v,
            });
        }
        previous = v;
        if v > order {
            break;
        }
        if d > MAX_CONVERGENT_TERMS {
            return Err(SeriesError::NotConvergent(MAX_CONVERGENT_TERMS));
        }
        let t = term(d)?;
        check_valuation(&t, 0, d, v)?;
        acc = acc.add(&t)?;
    }
    Ok(acc)
}

fn check_valuation(s: &TruncatedSeries, constant: i64, index: usize, valuation: usize) -> Result<()> {
    for (k, &c) in s.coeffs.iter().enumerate().take(valuation) {
        let expected = if k == 0 { constant } else { 0 };
        if c != expected {
            return Err(SeriesError::Valuation {
                index,
                valuation,
                exponent: k,
            });
        }
    }
    Ok(())
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + O(q^{})", self, self.order + 1)
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.terms() {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {} ", sign)?;
            }
            let mag = c.unsigned_abs();
            match (k, mag) {
                (0, m) => write!(f, "{}", m)?,
                (1, 1) => f.write_str("q")?,
                (1, m) => write!(f, "{}q", m)?,
                (k, 1) => write!(f, "q^{}", k)?,
                (k, m) => write!(f, "{}q^{}", m, k)?,
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
