//! Small text renderers shared by the subcommands: exact rationals,
//! comma-joined lists, and the per-level Quicksort trace.

use std::fmt::Display;

use lucky_cars::quicksort::SortTree;
use lucky_cars::Rational;

/// A rational as `p/q` in lowest terms. The denominator is always shown
/// (`1/1`, not `1`) so columns stay uniform and trivially parseable.
pub fn ratio(value: &Rational) -> String {
    format!("{}/{}", value.numer(), value.denom())
}

/// Values joined with commas: `3,1,1,2`.
pub fn join<T: Display>(values: &[T]) -> String {
    values
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(",")
}

/// A parking assignment joined with commas, unparked cars as `-`:
/// `2,1,4,-`.
pub fn join_assignment(assignment: &[Option<usize>]) -> String {
    assignment
        .iter()
        .map(|spot| spot.map_or_else(|| "-".to_string(), |s| s.to_string()))
        .collect::<Vec<_>>()
        .join(",")
}

/// The keys of a subtree in the order the recursion received them.
fn segment_items<K>(tree: &SortTree<K>) -> &[K] {
    match tree {
        SortTree::Settled(keys) => keys,
        SortTree::Split(node) => &node.segment,
    }
}

/// One line per partitioned segment, grouped by recursion level (the whole
/// array is level 1) and ordered left to right within a level:
///
/// ```text
/// level 1: (2,5,3,1,8,7,6,4) pivot 4 -> (2,3,1) | (5,8,7,6)
/// level 2: (2,3,1) pivot 1 -> () | (2,3)
/// ...
/// ```
///
/// Segments that arrive with fewer than two keys have nothing to
/// partition and produce no line.
pub fn trace_lines<K: Display>(tree: &SortTree<K>) -> Vec<String> {
    let mut lines = Vec::new();
    let mut level: Vec<&SortTree<K>> = vec![tree];
    let mut depth = 1usize;
    while !level.is_empty() {
        let mut next = Vec::new();
        for tree in level {
            if let SortTree::Split(node) = tree {
                lines.push(format!(
                    "level {depth}: ({}) pivot {} -> ({}) | ({})",
                    join(&node.segment),
                    node.pivot,
                    join(segment_items(&node.left)),
                    join(segment_items(&node.right)),
                ));
                next.push(&node.left);
                next.push(&node.right);
            }
        }
        level = next;
        depth += 1;
    }
    lines
}
