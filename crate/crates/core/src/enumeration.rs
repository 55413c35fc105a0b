//! Exhaustive sweeps over all `n^n` preference lists — the brute-force
//! ground truth that the closed forms in [`crate::sequences`] are checked
//! against.
//!
//! Lists are ordered lexicographically and addressed by rank (`(1,1,..,1)`
//! is rank 0), so a sweep can be cut into contiguous rank ranges, tallied
//! independently, and merged; the merge is associative and commutative,
//! which makes the parallel totals identical to the sequential ones. The
//! inner loop works on a reused digit buffer with a bitmask parking
//! routine; unit tests pin that routine to [`crate::parking::simulate`] on
//! every list up to `n = 5`.

use std::ops::Range;

use rayon::prelude::*;

use crate::parking::PreferenceList;
use crate::polynomial::LuckyPolynomial;
use crate::{Count, Error, Result};

/// Largest `n` any sweep in this module will attempt. `9^9` is about
/// 387 million lists — minutes of work; `10^10` would be ten billion.
pub const MAX_ENUM_N: usize = 9;

/// `n^n`, the number of preference lists of length `n`.
///
/// Callers gate on [`MAX_ENUM_N`], so this cannot overflow.
pub fn list_count(n: usize) -> u64 {
    debug_assert!(n <= MAX_ENUM_N);
    (n as u64).pow(n as u32)
}

fn check_n(n: usize, min: usize) -> Result<()> {
    if n < min || n > MAX_ENUM_N {
        return Err(Error::SizeOutOfRange {
            n,
            min,
            max: MAX_ENUM_N,
        });
    }
    Ok(())
}

/// The digits of `rank` in base `n`, most significant first, shifted to
/// 1-based preference entries.
fn unrank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut digits = vec![1; n];
    for d in digits.iter_mut().rev() {
        *d = (rank % n as u64) as usize + 1;
        rank /= n as u64;
    }
    digits
}

/// Advances the digit buffer to the lexicographically next list, wrapping
/// from the last list back to the first.
fn advance(digits: &mut [usize], n: usize) {
    for d in digits.iter_mut().rev() {
        if *d < n {
            *d += 1;
            return;
        }
        *d = 1;
    }
}

/// Streams every preference list of length `n` in lexicographic order,
/// starting from `(1, 1, ..., 1)`. Requires `1 <= n <= MAX_ENUM_N`.
pub fn enumerate_lists(n: usize) -> Result<ListIter> {
    check_n(n, 1)?;
    Ok(ListIter::over(n, 0..list_count(n)))
}

/// Streams the lists whose lexicographic ranks lie in `ranks`. Disjoint
/// ranges cover disjoint lists, so partial sweeps can be combined.
pub fn enumerate_lists_range(n: usize, ranks: Range<u64>) -> Result<ListIter> {
    check_n(n, 1)?;
    let total = list_count(n);
    if ranks.end > total || ranks.start > ranks.end {
        return Err(Error::RankRangeOutOfBounds {
            start: ranks.start,
            end: ranks.end,
            total,
            n,
        });
    }
    Ok(ListIter::over(n, ranks))
}

/// Iterator over a rank range of `[n]^n` in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListIter {
    n: usize,
    digits: Vec<usize>,
    remaining: u64,
}

impl ListIter {
    fn over(n: usize, ranks: Range<u64>) -> Self {
        Self {
            n,
            digits: unrank(n, ranks.start),
            remaining: ranks.end - ranks.start,
        }
    }
}

impl Iterator for ListIter {
    type Item = PreferenceList;

    fn next(&mut self) -> Option<PreferenceList> {
        if self.remaining == 0 {
            return None;
        }
        self.remaining -= 1;
        let list = PreferenceList::new(self.digits.clone()).expect("odometer digits stay in 1..=n");
        advance(&mut self.digits, self.n);
        Some(list)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let r = self.remaining as usize;
        (r, Some(r))
    }
}

impl ExactSizeIterator for ListIter {}

/// Lucky count and did-everyone-park for one digit buffer, with occupancy
/// kept in a `u32` bitmask: the candidate spots at or past `p` are
/// `!occupied & full & (!0 << (p-1))`, and `trailing_zeros` finds the
/// nearest one. Behaviorally identical to [`parking::simulate`]
/// (exhaustively tested); this exists because the sweep calls it `n^n`
/// times.
#[inline]
fn lucky_and_parked(prefs: &[usize]) -> (usize, bool) {
    let n = prefs.len();
    debug_assert!(n <= 32);
    let full = if n == 32 { !0u32 } else { (1u32 << n) - 1 };
    let mut occupied = 0u32;
    let mut lucky = 0usize;
    let mut parked = 0usize;
    for &p in prefs {
        let open = !occupied & full & (u32::MAX << (p - 1));
        if open != 0 {
            let spot = open.trailing_zeros();
            occupied |= 1 << spot;
            parked += 1;
            lucky += usize::from(spot as usize + 1 == p);
        }
    }
    (lucky, parked == n)
}

/// Per-range tallies. Merging is pointwise addition, so any partition of
/// the rank space yields the same totals.
#[derive(Debug, Clone, PartialEq, Eq)]
struct Tally {
    /// Histogram of the lucky statistic over every list in the range.
    all: Vec<u64>,
    /// The same histogram restricted to parking functions.
    pf: Vec<u64>,
    /// Lists with `n-1` lucky cars where some later car shares car 1's
    /// preference ("car 1 is competing").
    car1_competing: u64,
    /// Lists with `n-1` lucky cars where car 1's preference is unshared.
    car1_uncontested: u64,
    /// Lists with `n-1` lucky cars that do NOT have exactly one duplicated
    /// value — expected to stay zero; counted so violations surface.
    bad_duplicate_shape: u64,
}

impl Tally {
    fn zero(n: usize) -> Self {
        Self {
            all: vec![0; n + 1],
            pf: vec![0; n + 1],
            car1_competing: 0,
            car1_uncontested: 0,
            bad_duplicate_shape: 0,
        }
    }

    fn merge(mut self, other: Self) -> Self {
        for (a, b) in self.all.iter_mut().zip(&other.all) {
            *a += b;
        }
        for (a, b) in self.pf.iter_mut().zip(&other.pf) {
            *a += b;
        }
        self.car1_competing += other.car1_competing;
        self.car1_uncontested += other.car1_uncontested;
        self.bad_duplicate_shape += other.bad_duplicate_shape;
        self
    }
}

/// Tallies one contiguous rank range sequentially.
fn tally_range(n: usize, ranks: Range<u64>) -> Tally {
    let mut tally = Tally::zero(n);
    let mut digits = unrank(n, ranks.start);
    let mut multiplicity = [0u8; MAX_ENUM_N + 1];
    for _ in ranks.start..ranks.end {
        let (lucky, all_parked) = lucky_and_parked(&digits);
        tally.all[lucky] += 1;
        if all_parked {
            tally.pf[lucky] += 1;
        }
        if n >= 2 && lucky == n - 1 {
            if digits[1..].contains(&digits[0]) {
                tally.car1_competing += 1;
            } else {
                tally.car1_uncontested += 1;
            }
            multiplicity[..=n].fill(0);
            for &p in &digits {
                multiplicity[p] += 1;
            }
            let pairs = multiplicity[1..=n].iter().filter(|&&m| m == 2).count();
            let singles = multiplicity[1..=n].iter().filter(|&&m| m == 1).count();
            if pairs != 1 || singles != n - 2 {
                tally.bad_duplicate_shape += 1;
            }
        }
        advance(&mut digits, n);
    }
    tally
}

/// Sweeps all of `[n]^n`, in parallel over contiguous rank chunks.
fn survey(n: usize) -> Tally {
    let total = list_count(n);
    let chunk: u64 = 1 << 16;
    let chunks = total.div_ceil(chunk);
    (0..chunks)
        .into_par_iter()
        .map(|c| tally_range(n, (c * chunk)..((c + 1) * chunk).min(total)))
        .reduce(|| Tally::zero(n), Tally::merge)
}

fn to_counts(histogram: &[u64]) -> Vec<Count> {
    histogram.iter().map(|&c| Count::from(c)).collect()
}

/// The distribution of the lucky statistic at size `n`, over all lists and
/// restricted to parking functions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LuckyDistribution {
    pub n: usize,
    /// `all_lists[k]` = number of lists in `[n]^n` with exactly `k` lucky
    /// cars; index 0 is always zero.
    pub all_lists: Vec<Count>,
    /// The same, restricted to parking functions.
    pub pf_only: Vec<Count>,
}

/// Brute-forces the full lucky histogram at size `n`
/// (`1 <= n <= MAX_ENUM_N`).
pub fn lucky_distribution(n: usize) -> Result<LuckyDistribution> {
    check_n(n, 1)?;
    let tally = survey(n);
    Ok(LuckyDistribution {
        n,
        all_lists: to_counts(&tally.all),
        pf_only: to_counts(&tally.pf),
    })
}

/// Brute-forces `L_n`: the number of lists in `[n]^n` with exactly `n - 1`
/// lucky cars (`2 <= n <= MAX_ENUM_N`).
pub fn count_lucky_n_minus_1(n: usize) -> Result<Count> {
    check_n(n, 2)?;
    let tally = survey(n);
    Ok(Count::from(tally.all[n - 1]))
}

/// The lists behind `L_n`, split by whether car 1 has to compete for its
/// spot. Every such list repeats exactly one value; `competing` counts the
/// lists where car 1 carries the duplicate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompetingSplit {
    pub n: usize,
    /// Car 1's preference is not repeated by any later car.
    pub uncontested: Count,
    /// Some later car shares car 1's preference.
    pub competing: Count,
}

/// Brute-forces the competing/uncontested split of the `n-1`-lucky lists
/// (`2 <= n <= MAX_ENUM_N`).
///
/// While sweeping, every `n-1`-lucky list is checked to repeat exactly one
/// value (with all others distinct); any violation is returned as an error
/// because the split would be meaningless without that shape.
pub fn competing_car_split(n: usize) -> Result<CompetingSplit> {
    check_n(n, 2)?;
    let tally = survey(n);
    if tally.bad_duplicate_shape > 0 {
        return Err(Error::DuplicateShapeViolation {
            n,
            count: tally.bad_duplicate_shape,
        });
    }
    Ok(CompetingSplit {
        n,
        uncontested: Count::from(tally.car1_uncontested),
        competing: Count::from(tally.car1_competing),
    })
}

/// Brute-forces the split of the `n-1`-lucky lists into (parking functions,
/// lists where a car fails to park) (`2 <= n <= MAX_ENUM_N`). The two
/// halves are conjecturally — and, at every reachable size, actually —
/// equal.
pub fn split_by_pf(n: usize) -> Result<(Count, Count)> {
    check_n(n, 2)?;
    let tally = survey(n);
    let pf = tally.pf[n - 1];
    let non_pf = tally.all[n - 1] - pf;
    Ok((Count::from(pf), Count::from(non_pf)))
}

/// Brute-forces the lucky-statistic generating polynomial over the parking
/// functions of length `n` (`1 <= n <= MAX_ENUM_N`): coefficient `k` counts
/// parking functions with exactly `k` lucky cars.
pub fn pf_lucky_polynomial(n: usize) -> Result<LuckyPolynomial> {
    check_n(n, 1)?;
    let tally = survey(n);
    Ok(LuckyPolynomial::new(to_counts(&tally.pf)))
}
