//! Closed forms, recurrences, and identities in exact arithmetic — the
//! formula side of the story, fully independent of any enumeration.
//!
//! The cast, for `n` cars / `n` distinct keys:
//!
//! - `H_n = 1 + 1/2 + ... + 1/n`, the harmonic numbers ([`harmonic`]);
//! - `Q_n = 2(n+1)H_n - 4n`, the expected pivot-comparison count of
//!   Quicksort on a uniformly random ordering ([`q_expected_closed`]), also
//!   derivable from the divide-and-conquer recursion
//!   `Q_n = (n-1) + (1/n) sum_{k=1..n} (Q_{k-1} + Q_{n-k})`
//!   ([`q_expected_recursive`]);
//! - `A_n = n! Q_n`, the comparison count totalled over all orderings
//!   (OEIS A288964) — via the rational product ([`a_total`]), the one-step
//!   recurrence `A_n = (n+1) A_{n-1} + 2(n-1)(n-1)!` ([`a_stepwise`]), and
//!   the two-step form `f_n = 2n f_{n-1} - n(n-1) f_{n-2} + 2(n-1)!`
//!   ([`recurrence_f`]);
//! - `L_n`, the number of preference lists with exactly `n - 1` lucky cars,
//!   via a double-sum closed form ([`l_closed_form`]) that splits into the
//!   "some car fails to park" and "everyone parks" cases
//!   ([`count_unable_to_park`], [`count_able_to_park`]);
//! - the Gessel–Seo product form of the lucky-statistic polynomial over
//!   parking functions ([`gessel_seo_rhs`]) and the count
//!   `|PF_n| = (n+1)^(n-1)` ([`pf_count`]).
//!
//! Everything is generic over the scalar (see [`crate::scalar`]); exact
//! instantiations are the point, floats come along for free.

use num_rational::Ratio;
use num_traits::pow;

use crate::polynomial::LuckyPolynomial;
use crate::scalar::{count, CountScalar, Scalar};
use crate::{Error, Result};

/// A table of factorials `0!..=max!` with exact binomials on top, so the
/// double sums don't recompute factorials in their inner loops.
#[derive(Debug, Clone)]
pub struct Factorials<C> {
    fact: Vec<C>,
}

impl<C: CountScalar> Factorials<C> {
    /// Builds `0!, 1!, ..., max!`.
    pub fn up_to(max: usize) -> Self {
        let mut fact = Vec::with_capacity(max + 1);
        fact.push(C::one());
        for k in 1..=max {
            let next = fact[k - 1].clone() * count::<C>(k);
            fact.push(next);
        }
        Self { fact }
    }

    /// `k!` for `k <= max`.
    pub fn factorial(&self, k: usize) -> &C {
        &self.fact[k]
    }

    /// `C(n, k)`, zero when `k > n`. Requires `n <= max`.
    pub fn binomial(&self, n: usize, k: usize) -> C {
        if k > n {
            return C::zero();
        }
        let denom = self.fact[k].clone() * self.fact[n - k].clone();
        let (quot, rem) = self.fact[n].div_rem(&denom);
        debug_assert!(rem.is_zero(), "n!/(k!(n-k)!) must divide exactly");
        quot
    }
}

/// `n!` as a standalone value.
pub fn factorial<C: CountScalar>(n: usize) -> C {
    (1..=n).fold(C::one(), |acc, k| acc * count::<C>(k))
}

/// The harmonic number `H_n = sum_{i=1..=n} 1/i`, with `H_0 = 0`.
pub fn harmonic<S: Scalar>(n: usize) -> S {
    let mut h = S::zero();
    for i in 1..=n {
        h = h + S::one() / S::from_usize(i);
    }
    h
}

/// Expected Quicksort pivot comparisons via the closed form
/// `Q_n = 2(n+1) H_n - 4n`.
pub fn q_expected_closed<S: Scalar>(n: usize) -> S {
    let two = S::from_usize(2);
    two * S::from_usize(n + 1) * harmonic::<S>(n) - S::from_usize(4 * n)
}

/// The table `Q_0, Q_1, ..., Q_n` computed purely from the recursion
/// `Q_m = (m-1) + (1/m) sum_{k=1..=m} (Q_{k-1} + Q_{m-k})`,
/// which averages the cost over the `m` equally likely pivot ranks.
pub fn q_expected_recursive_table<S: Scalar>(n: usize) -> Vec<S> {
    let mut q: Vec<S> = Vec::with_capacity(n + 1);
    q.push(S::zero());
    for m in 1..=n {
        let mut sum = S::zero();
        for k in 1..=m {
            sum = sum + q[k - 1].clone() + q[m - k].clone();
        }
        q.push(S::from_usize(m - 1) + sum / S::from_usize(m));
    }
    q
}

/// `Q_n` by the recursion alone — an independent route to
/// [`q_expected_closed`].
pub fn q_expected_recursive<S: Scalar>(n: usize) -> S {
    q_expected_recursive_table::<S>(n)
        .pop()
        .expect("table always holds Q_0")
}

/// `A_n = n! * Q_n`, reduced from the exact rational product.
///
/// The product provably reduces to an integer; if it ever did not, the
/// arithmetic would be broken, and that is surfaced as an error rather
/// than asserted away.
pub fn a_total<C: CountScalar>(n: usize) -> Result<C> {
    let q: Ratio<C> = q_expected_closed(n);
    let total = Ratio::from_integer(factorial::<C>(n)) * q;
    if total.is_integer() {
        Ok(total.to_integer())
    } else {
        Err(Error::NonIntegralTotal { n })
    }
}

/// `A_n` via the integer recurrence `A_m = (m+1) A_{m-1} + 2(m-1)(m-1)!`
/// with `A_0 = 0` — no rational arithmetic anywhere.
pub fn a_stepwise<C: CountScalar>(n: usize) -> C {
    let mut a = C::zero();
    let mut fact = C::one(); // (m-1)! for the m about to be processed
    for m in 1..=n {
        a = count::<C>(m + 1) * a + count::<C>(2 * (m - 1)) * fact.clone();
        fact = fact * count::<C>(m);
    }
    a
}

/// The second-order recurrence
/// `f_m = 2m f_{m-1} - m(m-1) f_{m-2} + 2(m-1)!`, `f_0 = f_1 = 0`,
/// whose solution is again `A_n`.
///
/// Computed additions-first so the subtraction stays in the nonnegative
/// cone: `2m f_{m-1} + 2(m-1)! >= m(m-1) f_{m-2}` holds because
/// `f_m >= m f_{m-1}` for every `m`.
pub fn recurrence_f<C: CountScalar>(n: usize) -> C {
    if n <= 1 {
        return C::zero();
    }
    let mut prev2 = C::zero(); // f_{m-2}
    let mut prev = C::zero(); // f_{m-1}
    let mut fact = C::one(); // (m-1)! for the m about to be processed
    for m in 2..=n {
        let next = count::<C>(2 * m) * prev.clone() + count::<C>(2) * fact.clone()
            - count::<C>(m * (m - 1)) * prev2;
        prev2 = prev;
        prev = next;
        fact = fact * count::<C>(m);
    }
    prev
}

/// `L_n` — preference lists with exactly `n - 1` lucky cars — by the
/// closed form
///
/// ```text
/// L_n = 2 * sum_{i=2..=n} sum_{l=0..=i-1}
///           l * (n-i+1) * (i-1)! * (n-l-1)! / (i-1-l)!
/// ```
///
/// Defined for `n >= 2`. The factorial quotient is evaluated as the falling
/// product `(n-l-1)(n-l-2)...(i-l)`, so every summand is an integer by
/// construction; a debug assertion cross-checks it against the
/// divide-the-factorials route.
pub fn l_closed_form<C: CountScalar>(n: usize) -> Result<C> {
    if n < 2 {
        return Err(Error::SizeBelowMin { n, min: 2 });
    }
    let facts = Factorials::<C>::up_to(n);
    let mut total = C::zero();
    for i in 2..=n {
        for l in 0..i {
            let mut quotient = C::one();
            for v in (i - l)..=(n - l - 1) {
                quotient = quotient * count::<C>(v);
            }
            #[cfg(debug_assertions)]
            {
                let (q, r) = facts
                    .factorial(n - l - 1)
                    .div_rem(facts.factorial(i - 1 - l));
                debug_assert!(r.is_zero() && q == quotient, "falling product disagrees");
            }
            let summand =
                count::<C>(l) * count::<C>(n - i + 1) * facts.factorial(i - 1).clone() * quotient;
            total = total + summand;
        }
    }
    Ok(count::<C>(2) * total)
}

/// The lists behind `L_n` in which some car fails to park, counted by
/// choosing the duplicated value, the cars carrying it, and the
/// arrangement of everyone else:
///
/// ```text
/// sum_{i=2..=n} sum_{l=1..=i-1}
///     l * C(i-1,l) l! * C(n-l-1,i-1-l) (i-1-l)! * C(n-i+1,n-i) (n-i)!
/// ```
///
/// Defined for `n >= 2`; always exactly half of [`l_closed_form`].
pub fn count_unable_to_park<C: CountScalar>(n: usize) -> Result<C> {
    if n < 2 {
        return Err(Error::SizeBelowMin { n, min: 2 });
    }
    let facts = Factorials::<C>::up_to(n);
    let mut total = C::zero();
    for i in 2..=n {
        for l in 1..i {
            let term = count::<C>(l)
                * facts.binomial(i - 1, l)
                * facts.factorial(l).clone()
                * facts.binomial(n - l - 1, i - 1 - l)
                * facts.factorial(i - 1 - l).clone()
                * facts.binomial(n - i + 1, n - i)
                * facts.factorial(n - i).clone();
            total = total + term;
        }
    }
    Ok(total)
}

/// The lists behind `L_n` in which every car parks (so the list is a
/// parking function), counted the same way but weighted by the cars that
/// are *not* carrying the duplicate:
///
/// ```text
/// sum_{i=2..=n} sum_{l=0..=i-1}
///     (i-1-l) * C(i-1,l) l! * C(n-l-1,i-1-l) (i-1-l)! * (n-i)!
/// ```
///
/// Defined for `n >= 2`; the other half of [`l_closed_form`].
pub fn count_able_to_park<C: CountScalar>(n: usize) -> Result<C> {
    if n < 2 {
        return Err(Error::SizeBelowMin { n, min: 2 });
    }
    let facts = Factorials::<C>::up_to(n);
    let mut total = C::zero();
    for i in 2..=n {
        for l in 0..i {
            let term = count::<C>(i - 1 - l)
                * facts.binomial(i - 1, l)
                * facts.factorial(l).clone()
                * facts.binomial(n - l - 1, i - 1 - l)
                * facts.factorial(i - 1 - l).clone()
                * facts.factorial(n - i).clone();
            total = total + term;
        }
    }
    Ok(total)
}

/// Both sides of the binomial identity
/// `sum_{l=0..=i-1} l * C(n-l-1, i-l-1) = C(n, i-2)`
/// that collapses the inner sum of the closed form.
///
/// Returns `(lhs, rhs)` so callers can see the agreement rather than take
/// it on faith. Requires `2 <= i <= n`.
pub fn binomial_identity_check<C: CountScalar>(n: usize, i: usize) -> Result<(C, C)> {
    if i < 2 || i > n {
        return Err(Error::IdentityIndexOutOfRange { i, n });
    }
    let facts = Factorials::<C>::up_to(n);
    let mut lhs = C::zero();
    for l in 0..i {
        lhs = lhs + count::<C>(l) * facts.binomial(n - l - 1, i - l - 1);
    }
    let rhs = facts.binomial(n, i - 2);
    Ok((lhs, rhs))
}

/// The Gessel–Seo product form of the lucky-statistic polynomial over
/// parking functions of length `n`, expanded into coefficients:
///
/// ```text
/// sum_{alpha in PF_n} q^lucky(alpha)  =  q * prod_{i=1..=n-1} (i + (n-i+1) q)
/// ```
///
/// The upper limit of the product is `n - 1`: that makes the value at
/// `q = 1` equal `(n+1)^(n-1) = |PF_n|`, as it must, whereas `n` factors
/// would give `(n+1)^n`. Defined for `n >= 1` (at `n = 1` the product is
/// empty and the polynomial is `q`).
pub fn gessel_seo_rhs<C: CountScalar>(n: usize) -> LuckyPolynomial<C> {
    assert!(n >= 1, "the polynomial is defined for n >= 1");
    let mut poly = vec![C::one()];
    for i in 1..n {
        let constant = count::<C>(i);
        let linear = count::<C>(n - i + 1);
        let mut next = vec![C::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k] = next[k].clone() + constant.clone() * c.clone();
            next[k + 1] = next[k + 1].clone() + linear.clone() * c.clone();
        }
        poly = next;
    }
    let mut coeffs = Vec::with_capacity(poly.len() + 1);
    coeffs.push(C::zero()); // the leading factor q shifts everything up
    coeffs.extend(poly);
    LuckyPolynomial::new(coeffs)
}

/// `|PF_n| = (n+1)^(n-1)`, the number of parking functions of length `n`.
/// Defined for `n >= 1`.
pub fn pf_count<C: CountScalar>(n: usize) -> C {
    assert!(n >= 1, "parking functions need at least one car");
    pow(count::<C>(n + 1), n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Count, Rational};

    /// A_0..A_9, cross-checked by hand against the recurrences.
    const A: [u64; 10] = [0, 0, 2, 16, 116, 888, 7416, 67968, 682272, 7467840];

    fn rat(p: u64, q: u64) -> Rational {
        Rational::new(Count::from(p), Count::from(q))
    }

    #[test]
    fn harmonic_small_values_exact() {
        assert_eq!(harmonic::<Rational>(0), rat(0, 1));
        assert_eq!(harmonic::<Rational>(1), rat(1, 1));
        assert_eq!(harmonic::<Rational>(2), rat(3, 2));
        assert_eq!(harmonic::<Rational>(3), rat(11, 6));
        assert_eq!(harmonic::<Rational>(4), rat(25, 12));
        assert_eq!(harmonic::<Rational>(5), rat(137, 60));
    }

    #[test]
    fn harmonic_floats_track_the_exact_values() {
        assert!((harmonic::<f64>(4) - 25.0 / 12.0).abs() < 1e-12);
        assert!((harmonic::<f32>(4) - 25.0 / 12.0).abs() < 1e-5);
    }

    #[test]
    fn q_closed_small_values_exact() {
        let expected = [
            rat(0, 1),
            rat(0, 1),
            rat(1, 1),
            rat(8, 3),
            rat(29, 6),
            rat(37, 5),
            rat(103, 10),
            rat(472, 35),
            rat(2369, 140),
        ];
        for (n, want) in expected.iter().enumerate() {
            assert_eq!(&q_expected_closed::<Rational>(n), want, "Q_{n}");
        }
    }

    #[test]
    fn q_recursive_equals_q_closed() {
        let table = q_expected_recursive_table::<Rational>(60);
        for (n, q) in table.iter().enumerate() {
            assert_eq!(q, &q_expected_closed::<Rational>(n), "Q_{n}");
        }
        assert_eq!(q_expected_recursive::<Rational>(8), rat(2369, 140));
    }

    #[test]
    fn q_roundtrips_through_f64() {
        for n in 0..30 {
            let exact = q_expected_closed::<Rational>(n);
            let float = q_expected_closed::<f64>(n);
            let as_f64 = exact.numer().to_string().parse::<f64>().unwrap()
                / exact.denom().to_string().parse::<f64>().unwrap();
            assert!((float - as_f64).abs() < 1e-9, "Q_{n}");
        }
    }

    #[test]
    fn a_total_matches_table() {
        for (n, &want) in A.iter().enumerate() {
            assert_eq!(a_total::<Count>(n).unwrap(), Count::from(want), "A_{n}");
        }
    }

    #[test]
    fn a_stepwise_matches_table() {
        for (n, &want) in A.iter().enumerate() {
            assert_eq!(a_stepwise::<Count>(n), Count::from(want), "A_{n}");
        }
        assert_eq!(a_stepwise::<u64>(9), A[9]);
    }

    #[test]
    fn recurrence_f_matches_table() {
        for (n, &want) in A.iter().enumerate() {
            assert_eq!(recurrence_f::<Count>(n), Count::from(want), "f_{n}");
        }
        assert_eq!(recurrence_f::<u128>(9), A[9] as u128);
    }

    #[test]
    fn three_a_routes_agree_far_past_the_table() {
        for n in 0..=120 {
            let total = a_total::<Count>(n).unwrap();
            assert_eq!(total, a_stepwise::<Count>(n), "A_{n} stepwise");
            assert_eq!(total, recurrence_f::<Count>(n), "A_{n} two-step");
        }
    }

    #[test]
    fn l_closed_form_matches_a() {
        for (n, want) in A.iter().enumerate().skip(2) {
            assert_eq!(
                l_closed_form::<Count>(n).unwrap(),
                Count::from(*want),
                "L_{n}"
            );
        }
        assert_eq!(l_closed_form::<u64>(5).unwrap(), 888);
    }

    #[test]
    fn l_closed_form_rejects_tiny_n() {
        assert_eq!(
            l_closed_form::<Count>(0),
            Err(Error::SizeBelowMin { n: 0, min: 2 })
        );
        assert_eq!(
            l_closed_form::<Count>(1),
            Err(Error::SizeBelowMin { n: 1, min: 2 })
        );
    }

    #[test]
    fn case_counts_split_l_in_half() {
        for n in 2..=40 {
            let l = l_closed_form::<Count>(n).unwrap();
            let unable = count_unable_to_park::<Count>(n).unwrap();
            let able = count_able_to_park::<Count>(n).unwrap();
            assert_eq!(unable, able, "halves at n = {n}");
            assert_eq!(unable.clone() + able, l, "sum at n = {n}");
        }
        assert_eq!(count_unable_to_park::<Count>(2).unwrap(), Count::from(1u32));
        assert_eq!(count_able_to_park::<Count>(2).unwrap(), Count::from(1u32));
        assert_eq!(count_unable_to_park::<Count>(3).unwrap(), Count::from(8u32));
    }

    #[test]
    fn case_counts_reject_tiny_n() {
        assert_eq!(
            count_unable_to_park::<Count>(1),
            Err(Error::SizeBelowMin { n: 1, min: 2 })
        );
        assert_eq!(
            count_able_to_park::<Count>(1),
            Err(Error::SizeBelowMin { n: 1, min: 2 })
        );
    }

    #[test]
    fn binomial_identity_holds_and_guards_its_domain() {
        for n in 2..=30usize {
            for i in 2..=n {
                let (lhs, rhs) = binomial_identity_check::<Count>(n, i).unwrap();
                assert_eq!(lhs, rhs, "n = {n}, i = {i}");
            }
        }
        let (lhs, rhs) = binomial_identity_check::<u64>(4, 3).unwrap();
        assert_eq!((lhs, rhs), (4, 4));
        assert_eq!(
            binomial_identity_check::<u64>(4, 1),
            Err(Error::IdentityIndexOutOfRange { i: 1, n: 4 })
        );
        assert_eq!(
            binomial_identity_check::<u64>(4, 5),
            Err(Error::IdentityIndexOutOfRange { i: 5, n: 4 })
        );
    }

    #[test]
    fn gessel_seo_small_expansions() {
        let p3 = gessel_seo_rhs::<u64>(3);
        assert_eq!(p3.coeffs(), &[0, 2, 8, 6]);
        let p4 = gessel_seo_rhs::<u64>(4);
        assert_eq!(p4.coeffs(), &[0, 6, 37, 58, 24]);
        let p1 = gessel_seo_rhs::<u64>(1);
        assert_eq!(p1.coeffs(), &[0, 1]);
    }

    #[test]
    fn gessel_seo_sums_to_pf_count() {
        for n in 1..=25 {
            let poly = gessel_seo_rhs::<Count>(n);
            assert_eq!(poly.eval_at_one(), pf_count::<Count>(n), "n = {n}");
            assert_eq!(poly.degree(), n, "top coefficient is n! at n = {n}");
            assert_eq!(poly.coeffs()[n], factorial::<Count>(n), "n = {n}");
        }
    }

    #[test]
    fn pf_count_small_values() {
        assert_eq!(pf_count::<u64>(1), 1);
        assert_eq!(pf_count::<u64>(2), 3);
        assert_eq!(pf_count::<u64>(3), 16);
        assert_eq!(pf_count::<u64>(4), 125);
        assert_eq!(pf_count::<Count>(9), Count::from(100_000_000u64));
    }

    #[test]
    fn factorials_table_and_binomials() {
        let facts = Factorials::<u64>::up_to(10);
        assert_eq!(*facts.factorial(0), 1);
        assert_eq!(*facts.factorial(5), 120);
        assert_eq!(*facts.factorial(10), 3_628_800);
        assert_eq!(facts.binomial(10, 3), 120);
        assert_eq!(facts.binomial(10, 0), 1);
        assert_eq!(facts.binomial(3, 7), 0);
        assert_eq!(
            factorial::<Count>(20),
            Count::from(2_432_902_008_176_640_000u64)
        );
    }
}
