use serde::Serialize;

use crate::alphabet::Symbol;
use crate::view::{Interval, StringView};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "type")]
pub enum WitnessKind {
    SubCadence,
    Cadence,
    LrCadence { l: Interval, r: Interval },
}

/// An arithmetic progression `i, i+d, ..., i+(k-1)d` of equal symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub i: u64,
    pub d: u64,
    pub k: u64,
    pub symbol: Symbol,
    pub kind: WitnessKind,
}

impl Witness {
    pub fn new(i: u64, d: u64, k: u64, symbol: Symbol, kind: WitnessKind) -> Self {
        Witness {
            i,
            d,
            k,
            symbol,
            kind,
        }
    }

    /// Index of the last element of the progression.
    pub fn last(&self) -> u64 {
        self.i + (self.k - 1) * self.d
    }

    /// Re-checks every defining condition of the witness against `v`.
    pub fn verify(&self, v: &StringView) -> bool {
        let n = v.len();
        if self.i == 0 || self.d == 0 || self.k == 0 {
            return false;
        }
        let Some(last) = (self.k - 1)
            .checked_mul(self.d)
            .and_then(|x| x.checked_add(self.i))
        else {
            return false;
        };
        if last > n {
            return false;
        }
        let all_equal = (0..self.k).all(|t| v.get(self.i + t * self.d) == self.symbol);
        if !all_equal {
            return false;
        }
        match self.kind {
            WitnessKind::SubCadence => true,
            WitnessKind::Cadence => is_maximal(self.i, self.d, self.k, n),
            WitnessKind::LrCadence { l, r } => l.contains(self.i) && r.contains(last),
        }
    }
}

/// Both maximality inequalities: `i - d <= 0` and `i + k*d > n`.
pub fn is_maximal(i: u64, d: u64, k: u64, n: u64) -> bool {
    i <= d && (i as u128) + (k as u128) * (d as u128) > n as u128
}

/// Result of one shrinking step of a detection loop.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StepOutcome {
    Found(Witness),
    NoCadence,
    /// The search continues with a strictly larger lower end of the right range.
    Shrunk(u64),
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn verification() {
        let v = StringView::from_str_plain("10101").unwrap();
        assert!(Witness::new(1, 2, 3, Symbol::One, WitnessKind::Cadence).verify(&v));
        assert!(!Witness::new(1, 2, 3, Symbol::Zero, WitnessKind::Cadence).verify(&v));
        assert!(!Witness::new(1, 3, 3, Symbol::One, WitnessKind::SubCadence).verify(&v));
        let w = StringView::from_str_plain("01110").unwrap();
        assert!(Witness::new(2, 1, 3, Symbol::One, WitnessKind::SubCadence).verify(&w));
        assert!(!Witness::new(2, 1, 3, Symbol::One, WitnessKind::Cadence).verify(&w));
        let lr = WitnessKind::LrCadence {
            l: Interval::new(1, 3),
            r: Interval::new(7, 9),
        };
        let s = StringView::from_str_plain("000100011").unwrap();
        assert!(Witness::new(3, 2, 3, Symbol::Zero, lr).verify(&s));
        assert!(!Witness::new(1, 1, 3, Symbol::Zero, lr).verify(&s));
    }
}
