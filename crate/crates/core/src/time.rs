//! Virtual time. The engine runs entirely on integer nanoseconds so event
//! ordering is exact and runs are reproducible across hosts.

use std::fmt;
use std::ops::{Add, AddAssign, Sub};

/// A point in simulated time, in nanoseconds since the start of the run.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimTime(pub u64);

/// A span of simulated time, in nanoseconds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SimDuration(pub u64);

impl SimTime {
    pub const ZERO: SimTime = SimTime(0);

    pub fn as_secs_f64(self) -> f64 {
        self.0 as f64 / 1e9
    }
}

impl SimDuration {
    pub const ZERO: SimDuration = SimDuration(0);

    /// Converts non-negative seconds to a duration, rounding to the nearest
    /// nanosecond.
    pub fn from_secs_f64(secs: f64) -> SimDuration {
        assert!(secs >= 0.0 && secs.is_finite(), "duration must be finite and >= 0");
        SimDuration((secs * 1e9).round() as u64)
    }

    /// Time to push `bytes` through a link of `bits_per_sec`.
    pub fn transmission(bytes: u64, bits_per_sec: f64) -> SimDuration {
        if bytes == 0 {
            return SimDuration::ZERO;
        }
        SimDuration(((bytes * 8) as f64 * 1e9 / bits_per_sec).round() as u64)
    }

    pub fn as_secs_f64(self) -> f64 {
        self.0 as f64 / 1e9
    }
}

impl Add<SimDuration> for SimTime {
    type Output = SimTime;
    fn add(self, rhs: SimDuration) -> SimTime {
        SimTime(self.0 + rhs.0)
    }
}

impl AddAssign<SimDuration> for SimTime {
    fn add_assign(&mut self, rhs: SimDuration) {
        self.0 += rhs.0;
    }
}

impl Sub<SimTime> for SimTime {
    type Output = SimDuration;
    fn sub(self, rhs: SimTime) -> SimDuration {
        SimDuration(self.0 - rhs.0)
    }
}

impl fmt::Display for SimTime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{:09}", self.0 / 1_000_000_000, self.0 % 1_000_000_000)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn transmission_arithmetic() {
        // 15 bytes at 1.2 mbps = 100 microseconds exactly.
        assert_eq!(SimDuration::transmission(15, 1.2e6), SimDuration(100_000));
        assert_eq!(SimDuration::transmission(0, 1.0), SimDuration::ZERO);
    }

    #[test]
    fn display_is_seconds_with_nanos() {
        assert_eq!(SimTime(1_500_000_000).to_string(), "1.500000000");
        assert_eq!(SimTime(42).to_string(), "0.000000042");
    }
}
