//! Quicksort with the rightmost element as pivot, instrumented to count
//! pivot comparisons exactly.
//!
//! Partitioning a segment of length `m` compares each of the other `m - 1`
//! elements against the pivot once, so a run's comparison count is the sum
//! of `m - 1` over all partitioned segments. Three independent routes are
//! provided: actually sorting ([`count_comparisons`], with the full
//! recursion tree available via [`sort_tree`]), recursing on rank structure
//! without moving keys ([`count_from_pivot_ranks`]), and — in tests — a
//! pairwise formula that decides for each pair of values whether they are
//! ever compared.
//!
//! [`total_over_all_permutations`] sums the count over all `n!` orderings of
//! `1..=n`; the result equals `A_n = n! * Q_n` and, less obviously, the
//! lucky-car count `L_n`.

use num_traits::Zero;
use rayon::prelude::*;

use crate::{Count, Error, Rational, Result};

/// Largest `n` for which all `n!` permutations are swept. `9! = 362880`
/// sorts is cheap; the bound keeps the API honest about what it will do.
pub const MAX_SORT_N: usize = 9;

/// Full record of one instrumented sort.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SortTrace<K> {
    /// The keys as given.
    pub input: Vec<K>,
    /// The keys in ascending order.
    pub output: Vec<K>,
    /// Total pivot comparisons across all recursive calls.
    pub comparisons: Count,
    /// `(segment length, pivot)` for every partitioned segment, in
    /// recursion order (a segment precedes its left, then right, parts).
    /// Segments of length < 2 are not partitioned and do not appear.
    pub pivot_log: Vec<(usize, K)>,
}

/// The recursion tree of one sort, for rendering or inspection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SortTree<K> {
    /// A segment of length 0 or 1: nothing to do.
    Settled(Vec<K>),
    /// A partitioned segment.
    Split(Box<SplitNode<K>>),
}

/// One partitioned segment: the keys as they entered the call, the pivot
/// (its rightmost key), and the two sub-sorts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitNode<K> {
    /// The segment in the order the recursion received it.
    pub segment: Vec<K>,
    pub pivot: K,
    pub left: SortTree<K>,
    pub right: SortTree<K>,
}

impl<K: Clone> SortTree<K> {
    /// The keys of this subtree in sorted order.
    pub fn sorted(&self) -> Vec<K> {
        match self {
            SortTree::Settled(keys) => keys.clone(),
            SortTree::Split(node) => {
                let mut out = node.left.sorted();
                out.push(node.pivot.clone());
                out.extend(node.right.sorted());
                out
            }
        }
    }
}

/// Rejects inputs with equal keys; returns the two offending 0-based
/// positions. Comparison counts are only meaningful on distinct keys.
fn find_duplicate<K: Ord>(keys: &[K]) -> Option<(usize, usize)> {
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| keys[a].cmp(&keys[b]));
    order
        .windows(2)
        .find(|w| keys[w[0]] == keys[w[1]])
        .map(|w| (w[0].min(w[1]), w[0].max(w[1])))
}

/// Splits off the rightmost key as pivot and partitions the rest,
/// preserving relative order on both sides.
fn split<K: Ord + Clone>(mut segment: Vec<K>) -> (Vec<K>, K, Vec<K>) {
    let pivot = segment.pop().expect("split is called with len >= 2");
    let (left, right) = segment.into_iter().partition(|key| *key <= pivot);
    (left, pivot, right)
}

fn sort_segment<K: Ord + Clone>(
    segment: Vec<K>,
    comparisons: &mut u64,
    pivot_log: &mut Vec<(usize, K)>,
) -> Vec<K> {
    let len = segment.len();
    if len <= 1 {
        return segment;
    }
    *comparisons += (len - 1) as u64;
    let (left, pivot, right) = split(segment);
    pivot_log.push((len, pivot.clone()));
    let mut output = sort_segment(left, comparisons, pivot_log);
    output.push(pivot);
    output.extend(sort_segment(right, comparisons, pivot_log));
    output
}

/// Sorts a copy of `input` with rightmost-pivot Quicksort and counts every
/// pivot comparison. Keys must be pairwise distinct.
pub fn count_comparisons<K: Ord + Clone>(input: &[K]) -> Result<SortTrace<K>> {
    if let Some((first, second)) = find_duplicate(input) {
        return Err(Error::DuplicateKeys { first, second });
    }
    let mut comparisons = 0u64;
    let mut pivot_log = Vec::new();
    let output = sort_segment(input.to_vec(), &mut comparisons, &mut pivot_log);
    Ok(SortTrace {
        input: input.to_vec(),
        output,
        comparisons: Count::from(comparisons),
        pivot_log,
    })
}

/// Builds the full recursion tree of the sort. Keys must be pairwise
/// distinct.
pub fn sort_tree<K: Ord + Clone>(input: &[K]) -> Result<SortTree<K>> {
    if let Some((first, second)) = find_duplicate(input) {
        return Err(Error::DuplicateKeys { first, second });
    }
    Ok(build_tree(input.to_vec()))
}

fn build_tree<K: Ord + Clone>(segment: Vec<K>) -> SortTree<K> {
    if segment.len() <= 1 {
        return SortTree::Settled(segment);
    }
    let (left, pivot, right) = split(segment.clone());
    SortTree::Split(Box::new(SplitNode {
        segment,
        pivot,
        left: build_tree(left),
        right: build_tree(right),
    }))
}

/// Comparison count for a permutation of `1..=n`, computed from rank
/// structure alone: a segment costs its length minus one, plus the costs
/// of the subsequences of values below and above its last element. No keys
/// are moved; agreement with [`count_comparisons`] is a structural check.
pub fn count_from_pivot_ranks(perm: &[usize]) -> Result<Count> {
    validate_permutation(perm)?;

    fn cost(values: &[usize]) -> u64 {
        let m = values.len();
        if m <= 1 {
            return 0;
        }
        let pivot = values[m - 1];
        let below: Vec<usize> = values[..m - 1]
            .iter()
            .copied()
            .filter(|&v| v < pivot)
            .collect();
        let above: Vec<usize> = values[..m - 1]
            .iter()
            .copied()
            .filter(|&v| v > pivot)
            .collect();
        (m - 1) as u64 + cost(&below) + cost(&above)
    }

    Ok(Count::from(cost(perm)))
}

fn validate_permutation(perm: &[usize]) -> Result<()> {
    let n = perm.len();
    let mut seen = vec![false; n];
    for &v in perm {
        if v < 1 || v > n || seen[v - 1] {
            return Err(Error::NotAPermutation { n });
        }
        seen[v - 1] = true;
    }
    Ok(())
}

fn factorial_u64(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The permutation of `1..=n` at lexicographic `rank`, via the factorial
/// number system.
fn permutation_at_rank(n: usize, mut rank: u64) -> Vec<usize> {
    let mut available: Vec<usize> = (1..=n).collect();
    let mut perm = Vec::with_capacity(n);
    for slot in (0..n).rev() {
        let block = factorial_u64(slot);
        let index = (rank / block) as usize;
        rank %= block;
        perm.push(available.remove(index));
    }
    perm
}

/// Advances to the lexicographically next permutation in place; returns
/// false when the input was the last one.
fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
        return false;
    };
    let j = (i + 1..n)
        .rev()
        .find(|&j| perm[j] > perm[i])
        .expect("tail has a bigger element");
    perm.swap(i, j);
    perm[i + 1..].reverse();
    true
}

/// Sums [`count_comparisons`] over all `n!` permutations of `1..=n`,
/// in parallel over contiguous blocks of the lexicographic order
/// (`1 <= n <= MAX_SORT_N`). The total equals `A_n = n! * Q_n`.
pub fn total_over_all_permutations(n: usize) -> Result<Count> {
    if !(1..=MAX_SORT_N).contains(&n) {
        return Err(Error::SizeOutOfRange {
            n,
            min: 1,
            max: MAX_SORT_N,
        });
    }
    let total = factorial_u64(n);
    let chunk: u64 = 1 << 12;
    let chunks = total.div_ceil(chunk);
    let sum = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * chunk;
            let end = ((c + 1) * chunk).min(total);
            let mut perm = permutation_at_rank(n, start);
            let mut acc = 0u64;
            for _ in start..end {
                let trace = count_comparisons(&perm).expect("permutations have distinct keys");
                let batch: u64 = trace
                    .comparisons
                    .try_into()
                    .expect("single-sort counts fit in u64");
                acc += batch;
                next_permutation(&mut perm);
            }
            Count::from(acc)
        })
        .reduce(Count::zero, |a, b| a + b);
    Ok(sum)
}

/// The exact mean comparison count over all `n!` orderings:
/// `total / n!`, as a reduced rational. Equals `Q_n`.
pub fn empirical_mean(n: usize) -> Result<Rational> {
    let total = total_over_all_permutations(n)?;
    Ok(Rational::new(total, Count::from(factorial_u64(n))))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn comparisons(keys: &[i64]) -> u64 {
        count_comparisons(keys)
            .unwrap()
            .comparisons
            .try_into()
            .unwrap()
    }

    /// Pairwise oracle: with rightmost pivots and order-preserving
    /// partitions, values `a < b` are compared exactly when, among the
    /// values `a..=b`, the one sitting furthest right in the input is `a`
    /// or `b`.
    fn pairwise_count(perm: &[usize]) -> u64 {
        let n = perm.len();
        let pos = {
            let mut pos = vec![0; n + 1];
            for (i, &v) in perm.iter().enumerate() {
                pos[v] = i;
            }
            pos
        };
        let mut count = 0;
        for a in 1..=n {
            for b in a + 1..=n {
                let rightmost = (a..=b).max_by_key(|&v| pos[v]).unwrap();
                if rightmost == a || rightmost == b {
                    count += 1;
                }
            }
        }
        count
    }

    #[test]
    fn worked_example_costs_14() {
        let trace = count_comparisons(&[2i64, 5, 3, 1, 8, 7, 6, 4]).unwrap();
        assert_eq!(trace.comparisons, Count::from(14u32));
        assert_eq!(trace.output, vec![1, 2, 3, 4, 5, 6, 7, 8]);
        assert_eq!(trace.input, vec![2, 5, 3, 1, 8, 7, 6, 4]);
        // Root partitions all 8 keys around pivot 4, then [2,3,1] around 1
        // and [5,8,7,6] around 6, and so on.
        assert_eq!(
            trace.pivot_log,
            vec![(8, 4), (3, 1), (2, 3), (4, 6), (2, 7)]
        );
    }

    #[test]
    fn base_cases_cost_nothing() {
        assert_eq!(comparisons(&[]), 0);
        assert_eq!(comparisons(&[42]), 0);
        assert_eq!(comparisons(&[1, 2]), 1);
        assert_eq!(comparisons(&[2, 1]), 1);
    }

    #[test]
    fn sorted_input_is_worst_case() {
        // Already-sorted keys put the pivot at the extreme every time:
        // (n-1) + (n-2) + ... + 1.
        for n in 1..=10u64 {
            let keys: Vec<i64> = (1..=n as i64).collect();
            assert_eq!(comparisons(&keys), n * (n - 1) / 2);
            let reversed: Vec<i64> = keys.iter().rev().copied().collect();
            assert_eq!(comparisons(&reversed), n * (n - 1) / 2);
        }
    }

    #[test]
    fn duplicate_keys_are_rejected_with_positions() {
        assert_eq!(
            count_comparisons(&[3, 1, 3]).unwrap_err(),
            Error::DuplicateKeys {
                first: 0,
                second: 2
            }
        );
        assert_eq!(
            sort_tree(&[5, 5]).unwrap_err(),
            Error::DuplicateKeys {
                first: 0,
                second: 1
            }
        );
    }

    #[test]
    fn arbitrary_ord_keys_work() {
        let trace = count_comparisons(&["pear", "apple", "quince", "fig"]).unwrap();
        assert_eq!(trace.output, vec!["apple", "fig", "pear", "quince"]);
        // Same rank structure as (3,1,4,2): root pivot "fig", etc.
        assert_eq!(
            trace.comparisons,
            count_from_pivot_ranks(&[3, 1, 4, 2]).unwrap()
        );
    }

    #[test]
    fn rank_route_agrees_with_sorting_route_exhaustively() {
        for n in 1..=7usize {
            let mut perm: Vec<usize> = (1..=n).collect();
            loop {
                let keys: Vec<i64> = perm.iter().map(|&v| v as i64).collect();
                let by_sort = comparisons(&keys);
                let by_rank: u64 = count_from_pivot_ranks(&perm).unwrap().try_into().unwrap();
                let by_pairs = pairwise_count(&perm);
                assert_eq!(by_sort, by_rank, "{perm:?}");
                assert_eq!(by_sort, by_pairs, "{perm:?}");
                if !next_permutation(&mut perm) {
                    break;
                }
            }
        }
    }

    #[test]
    fn rank_route_validates_input() {
        assert_eq!(
            count_from_pivot_ranks(&[1, 3]).unwrap_err(),
            Error::NotAPermutation { n: 2 }
        );
        assert_eq!(
            count_from_pivot_ranks(&[2, 2, 1]).unwrap_err(),
            Error::NotAPermutation { n: 3 }
        );
        assert_eq!(count_from_pivot_ranks(&[]).unwrap(), Count::from(0u32));
    }

    #[test]
    fn tree_reconstructs_the_sort() {
        let tree = sort_tree(&[2i64, 5, 3, 1, 8, 7, 6, 4]).unwrap();
        assert_eq!(tree.sorted(), vec![1, 2, 3, 4, 5, 6, 7, 8]);
        let SortTree::Split(root) = &tree else {
            panic!("eight keys must split");
        };
        assert_eq!(root.pivot, 4);
        assert_eq!(root.segment, vec![2, 5, 3, 1, 8, 7, 6, 4]);
        let SortTree::Split(left) = &root.left else {
            panic!("left part [2,3,1] must split");
        };
        assert_eq!(left.segment, vec![2, 3, 1]);
        assert_eq!(left.pivot, 1);
    }

    #[test]
    fn permutation_unranking_is_lexicographic() {
        assert_eq!(permutation_at_rank(3, 0), vec![1, 2, 3]);
        assert_eq!(permutation_at_rank(3, 5), vec![3, 2, 1]);
        let mut perm = permutation_at_rank(4, 0);
        for rank in 1..24 {
            assert!(next_permutation(&mut perm));
            assert_eq!(perm, permutation_at_rank(4, rank), "rank {rank}");
        }
        assert!(!next_permutation(&mut perm));
    }

    #[test]
    fn totals_match_known_values() {
        let expected: [u64; 8] = [0, 2, 16, 116, 888, 7416, 67968, 682272];
        for (i, &want) in expected.iter().enumerate() {
            let n = i + 1;
            assert_eq!(
                total_over_all_permutations(n).unwrap(),
                Count::from(want),
                "n = {n}"
            );
        }
        assert_eq!(
            total_over_all_permutations(0).unwrap_err(),
            Error::SizeOutOfRange {
                n: 0,
                min: 1,
                max: 9
            }
        );
        assert_eq!(
            total_over_all_permutations(10).unwrap_err(),
            Error::SizeOutOfRange {
                n: 10,
                min: 1,
                max: 9
            }
        );
    }

    #[test]
    fn empirical_mean_is_q() {
        assert_eq!(
            empirical_mean(3).unwrap(),
            Rational::new(Count::from(8u32), Count::from(3u32))
        );
        assert_eq!(
            empirical_mean(5).unwrap(),
            Rational::new(Count::from(37u32), Count::from(5u32))
        );
    }
}
