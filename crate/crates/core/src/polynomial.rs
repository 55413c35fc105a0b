//! The generating polynomial of the lucky statistic.
//!
//! For a set of preference lists, the polynomial `sum_alpha q^lucky(alpha)`
//! packs the whole lucky histogram into one object: the coefficient of `q^k`
//! counts the lists with exactly `k` lucky cars. Restricted to parking
//! functions this is the polynomial with the Gessel–Seo product form (see
//! [`sequences::gessel_seo_rhs`](crate::sequences::gessel_seo_rhs)); the
//! brute-force counterpart is
//! [`enumeration::pf_lucky_polynomial`](crate::enumeration::pf_lucky_polynomial).

use std::fmt;

use crate::scalar::CountScalar;
use crate::Count;

/// A polynomial in `q` with counting coefficients, indexed by exponent.
///
/// `coeffs()[k]` is the coefficient of `q^k`. Since car 1 is always lucky,
/// polynomials arising from the lucky statistic have zero constant term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LuckyPolynomial<C = Count> {
    coeffs: Vec<C>,
}

impl<C: CountScalar> LuckyPolynomial<C> {
    /// Wraps a coefficient vector; `coeffs[k]` multiplies `q^k`.
    pub fn new(coeffs: Vec<C>) -> Self {
        Self { coeffs }
    }

    /// The coefficients, indexed by exponent. May carry trailing zeros if
    /// constructed with them; [`degree`](Self::degree) ignores those.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Largest exponent with a nonzero coefficient; 0 for the zero
    /// polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
    }

    /// The value at `q = 1`, i.e. the sum of all coefficients — the total
    /// number of lists the polynomial counts.
    pub fn eval_at_one(&self) -> C {
        self.coeffs.iter().fold(C::zero(), |acc, c| acc + c.clone())
    }
}

impl<C: CountScalar + fmt::Display> fmt::Display for LuckyPolynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (k, c.is_one()) {
                (0, _) => write!(f, "{c}")?,
                (1, true) => write!(f, "q")?,
                (1, false) => write!(f, "{c}q")?,
                (_, true) => write!(f, "q^{k}")?,
                (_, false) => write!(f, "{c}q^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}
