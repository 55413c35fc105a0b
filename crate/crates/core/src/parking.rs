//! The one-way-street parking process and the lucky-car statistic.
//!
//! `n` cars enter a one-way street with spots `1..=n`, in car order. Car `i`
//! drives to its preferred spot `p_i`; if it is free the car takes it,
//! otherwise the car rolls forward and takes the first free spot after it.
//! A car that finds every spot from `p_i` to `n` occupied leaves the street
//! without parking — the remaining cars still take their turns. A car that
//! parks *exactly* on its preferred spot is **lucky**.
//!
//! A list under which every car parks is a *parking function*. Two classical
//! facts anchor the statistic: car 1 is always lucky (the street is empty
//! when it arrives), and a list is a parking function if and only if its
//! sorted rearrangement `b_1 <= ... <= b_n` satisfies `b_i <= i` — exposed
//! separately as [`sorted_prefix_criterion`] so the two routes can be played
//! against each other.

use std::fmt;

use crate::{Error, Result};

/// A validated preference list: car `i` (1-based) prefers spot
/// `prefs()[i - 1]`, and every preference lies in `1..=n`.
///
/// The order of entries matters. `(1, 1, 2)` and `(2, 1, 1)` contain the
/// same spots but park differently and have different lucky counts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PreferenceList {
    prefs: Vec<usize>,
}

impl PreferenceList {
    /// Wraps a list of 1-based preferences.
    ///
    /// Rejects empty lists and any entry outside `1..=n`, where `n` is the
    /// list length.
    pub fn new(prefs: Vec<usize>) -> Result<Self> {
        if prefs.is_empty() {
            return Err(Error::EmptyPreferenceList);
        }
        let n = prefs.len();
        for (i, &p) in prefs.iter().enumerate() {
            if p < 1 || p > n {
                return Err(Error::PreferenceOutOfRange {
                    car: i + 1,
                    value: p,
                    n,
                });
            }
        }
        Ok(Self { prefs })
    }

    /// Number of cars, which equals the number of spots.
    pub fn len(&self) -> usize {
        self.prefs.len()
    }

    /// Always false: construction rejects empty lists.
    pub fn is_empty(&self) -> bool {
        self.prefs.is_empty()
    }

    /// The raw 1-based preferences, one per car.
    pub fn prefs(&self) -> &[usize] {
        &self.prefs
    }
}

impl fmt::Display for PreferenceList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.prefs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Everything the parking process produced for one preference list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParkingOutcome {
    /// `assignment[i]` is the 1-based spot car `i + 1` ended up in, or
    /// `None` if it left the street without parking.
    pub assignment: Vec<Option<usize>>,
    /// `lucky[i]` is true when car `i + 1` parked exactly on its preference.
    pub lucky: Vec<bool>,
    /// True when every car parked, i.e. the list is a parking function.
    pub is_pf: bool,
}

impl ParkingOutcome {
    /// Number of lucky cars.
    pub fn lucky_count(&self) -> usize {
        self.lucky.iter().filter(|&&l| l).count()
    }
}

/// Runs the parking process for one preference list.
///
/// Cars move in index order; each scans forward from its preference for the
/// first free spot. The process never fails — cars that find nothing simply
/// end up unassigned.
pub fn simulate(list: &PreferenceList) -> ParkingOutcome {
    let n = list.len();
    let mut occupied = vec![false; n + 1]; // 1-based spots
    let mut assignment = Vec::with_capacity(n);
    let mut lucky = Vec::with_capacity(n);
    for &p in list.prefs() {
        let spot = (p..=n).find(|&s| !occupied[s]);
        if let Some(s) = spot {
            occupied[s] = true;
        }
        assignment.push(spot);
        lucky.push(spot == Some(p));
    }
    let is_pf = assignment.iter().all(|a| a.is_some());
    ParkingOutcome {
        assignment,
        lucky,
        is_pf,
    }
}

/// Number of cars that park exactly on their preferred spot.
///
/// Car 1 always does, so the result lies in `1..=n`.
pub fn lucky_count(list: &PreferenceList) -> usize {
    simulate(list).lucky_count()
}

/// True when every car parks, i.e. the list is a parking function.
pub fn is_parking_function(list: &PreferenceList) -> bool {
    simulate(list).is_pf
}

/// The sorted characterization of parking functions: with the preferences
/// rearranged into nondecreasing order `b_1 <= ... <= b_n`, the list parks
/// everyone if and only if `b_i <= i` for every `i`.
///
/// Computed without running the process, as an independent route to
/// [`is_parking_function`].
pub fn sorted_prefix_criterion(list: &PreferenceList) -> bool {
    let mut sorted = list.prefs().to_vec();
    sorted.sort_unstable();
    sorted.iter().enumerate().all(|(i, &b)| b <= i + 1)
}
