//! Run counters shared by the streams of one enumeration.

use std::cell::Cell;
use std::rc::Rc;
use std::time::Duration;

/// Live counters for a single enumeration run.
///
/// `hold`/`release` track how many vertex sets the run's streams keep
/// alive between steps. The high-water mark is reported as
/// `peak_retained_sets`.
#[derive(Debug, Default)]
pub struct Meter {
    is_pmc_calls: Cell<u64>,
    separator_yields: Cell<u64>,
    live_sets: Cell<usize>,
    peak_sets: Cell<usize>,
}

impl Meter {
    pub fn shared() -> Rc<Meter> {
        Rc::new(Meter::default())
    }

    #[inline]
    pub fn hold(&self, sets: usize) {
        let live = self.live_sets.get() + sets;
        self.live_sets.set(live);
        if live > self.peak_sets.get() {
            self.peak_sets.set(live);
        }
    }

    #[inline]
    pub fn release(&self, sets: usize) {
        let live = self.live_sets.get();
        debug_assert!(live >= sets, "released more sets than held");
        self.live_sets.set(live.saturating_sub(sets));
    }

    #[inline]
    pub(crate) fn count_pmc_test(&self) {
        self.is_pmc_calls.set(self.is_pmc_calls.get() + 1);
    }

    #[inline]
    pub(crate) fn count_separator(&self) {
        self.separator_yields.set(self.separator_yields.get() + 1);
    }

    pub fn is_pmc_calls(&self) -> u64 {
        self.is_pmc_calls.get()
    }

    pub fn separator_yields(&self) -> u64 {
        self.separator_yields.get()
    }

    pub fn live_sets(&self) -> usize {
        self.live_sets.get()
    }

    pub fn peak_sets(&self) -> usize {
        self.peak_sets.get()
    }
}

/// A snapshot of a finished (or paused) run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Metrics {
    pub is_pmc_calls: u64,
    pub separator_yields: u64,
    pub pmc_yields: u64,
    pub peak_retained_sets: usize,
    /// Only filled in by validation runs.
    pub duplicates_detected: u64,
    pub wall_time: Duration,
}

impl Metrics {
    pub(crate) fn from_meter(meter: &Meter, pmc_yields: u64, wall_time: Duration) -> Metrics {
        Metrics {
            is_pmc_calls: meter.is_pmc_calls(),
            separator_yields: meter.separator_yields(),
            pmc_yields,
            peak_retained_sets: meter.peak_sets(),
            duplicates_detected: 0,
            wall_time,
        }
    }
}
