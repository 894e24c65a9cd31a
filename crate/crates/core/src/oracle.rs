//! Exhaustive reference searches over plain strings.

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::Symbol;
use crate::cadence::VdwEntry;
use crate::view::Interval;
use crate::witness::{Witness, WitnessKind};

/// Upper bound on candidate triples any single oracle call will inspect.
pub const MAX_CANDIDATES: u64 = 50_000_000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("input too large for exhaustive search ({candidates} candidates, limit {limit})")]
    TooLarge { candidates: u64, limit: u64 },
    #[error("no exhaustive verifier for k = {k}, sigma = {sigma}")]
    Unsupported { k: u64, sigma: u8 },
}

/// All matches of one predicate, sorted by `(i, d)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct OracleReport {
    pub witnesses: Vec<Witness>,
    /// Number of witnesses per symbol, indexed by `Symbol::index`.
    pub counts: [u64; 3],
}

impl OracleReport {
    fn push(&mut self, w: Witness) {
        self.counts[w.symbol.index()] += 1;
        self.witnesses.push(w);
    }

    pub fn is_empty(&self) -> bool {
        self.witnesses.is_empty()
    }

    pub fn len(&self) -> usize {
        self.witnesses.len()
    }

    /// The `(i, d)` pairs of all witnesses.
    pub fn pairs(&self) -> Vec<(u64, u64)> {
        self.witnesses.iter().map(|w| (w.i, w.d)).collect()
    }
}

fn budget(candidates: u64) -> Result<(), OracleError> {
    if candidates > MAX_CANDIDATES {
        Err(OracleError::TooLarge {
            candidates,
            limit: MAX_CANDIDATES,
        })
    } else {
        Ok(())
    }
}

/// Symbol shared by `s[i], s[i+d], ...` (1-based), if all `k` agree.
fn progression(s: &[Symbol], i: u64, d: u64, k: u64) -> Option<Symbol> {
    let c = s[(i - 1) as usize];
    (1..k)
        .all(|t| s[(i + t * d - 1) as usize] == c)
        .then_some(c)
}

fn accept(c: Symbol, filter: Option<Symbol>) -> bool {
    filter.is_none_or(|f| f == c)
}

pub fn enum_subcadences(s: &[Symbol], k: u64, filter: Option<Symbol>) -> Result<OracleReport, OracleError> {
    let n = s.len() as u64;
    let k = k.max(2);
    budget(n * n / (2 * (k - 1)))?;
    let mut rep = OracleReport::default();
    for i in 1..=n {
        for d in 1..=(n - i) / (k - 1) {
            if let Some(c) = progression(s, i, d, k) {
                if accept(c, filter) {
                    rep.push(Witness::new(i, d, k, c, WitnessKind::SubCadence));
                }
            }
        }
    }
    Ok(rep)
}

pub fn enum_cadences(s: &[Symbol], k: u64, filter: Option<Symbol>) -> Result<OracleReport, OracleError> {
    let n = s.len() as u64;
    let k = k.max(2);
    budget(n * n / (4 * (k - 1)))?;
    let mut rep = OracleReport::default();
    for i in 1..=n {
        // i + k*d > n and i + (k-1)*d <= n and i <= d
        let d_lo = ((n - i) / k + 1).max(i);
        let d_hi = (n - i) / (k - 1);
        for d in d_lo..=d_hi {
            if let Some(c) = progression(s, i, d, k) {
                if accept(c, filter) {
                    rep.push(Witness::new(i, d, k, c, WitnessKind::Cadence));
                }
            }
        }
    }
    Ok(rep)
}

pub fn enum_lr(
    s: &[Symbol],
    l: Interval,
    r: Interval,
    k: u64,
    filter: Option<Symbol>,
) -> Result<OracleReport, OracleError> {
    let n = s.len() as u64;
    let k = k.max(2);
    let l = l.intersect(&Interval::new(1, n));
    let r = r.intersect(&Interval::new(1, n));
    budget(l.len().saturating_mul(r.len()))?;
    let mut rep = OracleReport::default();
    let kind = WitnessKind::LrCadence { l, r };
    for i in l.lo..=l.hi.min(n) {
        for last in r.lo.max(i + 1)..=r.hi {
            if (last - i) % (k - 1) != 0 {
                continue;
            }
            let d = (last - i) / (k - 1);
            if let Some(c) = progression(s, i, d, k) {
                if accept(c, filter) {
                    rep.push(Witness::new(i, d, k, c, kind));
                }
            }
        }
    }
    Ok(rep)
}

fn has_subcadence(s: &[Symbol], k: u64) -> bool {
    let n = s.len() as u64;
    (1..=n).any(|i| (1..=(n - i) / (k - 1)).any(|d| progression(s, i, d, k).is_some()))
}

fn binary_string(bits: u32, len: u32) -> Vec<Symbol> {
    (0..len)
        .map(|t| {
            if bits >> t & 1 == 1 {
                Symbol::One
            } else {
                Symbol::Zero
            }
        })
        .collect()
}

/// Exhaustively confirms `m(3, 2) = 9`. Returns the entry and the first
/// length-8 binary string without a 3-sub-cadence.
pub fn vdw_verify(k: u64, sigma: u8) -> Result<(VdwEntry, Vec<Symbol>), OracleError> {
    if (k, sigma) != (3, 2) {
        return Err(OracleError::Unsupported { k, sigma });
    }
    let m = 9u32;
    let all_long = (0..1u32 << m).all(|b| has_subcadence(&binary_string(b, m), k));
    let free = (0..1u32 << (m - 1))
        .map(|b| binary_string(b, m - 1))
        .find(|s| !has_subcadence(s, k));
    match (all_long, free) {
        (true, Some(free)) => Ok((
            VdwEntry {
                k,
                sigma,
                m: m as u64,
            },
            free,
        )),
        _ => unreachable!("the van der Waerden number W(3, 2) is 9"),
    }
}

/// Smallest 1-based `l` with `p[l] = q[l] = 1`.
pub fn common_one_index(p: &[Symbol], q: &[Symbol]) -> Option<u64> {
    p.iter()
        .zip(q)
        .position(|(&a, &b)| a == Symbol::One && b == Symbol::One)
        .map(|x| x as u64 + 1)
}
