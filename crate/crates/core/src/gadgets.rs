//! Reduction instances from the common-1-position problem: given binary
//! `P` and `P'`, is there an `l` with `P[l] = P'[l] = 1`?

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::alphabet::Symbol;
use crate::oracle::{enum_lr, OracleError};
use crate::slp::{Slp, SlpError};
use crate::view::Interval;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GadgetError {
    #[error("{0}")]
    AlphabetMismatch(String),
    #[error(transparent)]
    Slp(#[from] SlpError),
    #[error("k must be at least 3, got {0}")]
    InvalidK(u64),
    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum GadgetKind {
    Char1,
    Ternary3,
    Lr3,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetInstance {
    pub slp: Slp,
    pub kind: GadgetKind,
    pub k: u64,
    pub l: Option<Interval>,
    pub r: Option<Interval>,
    /// Length of the longer input pattern.
    pub plen: u64,
    /// Length of the shorter input pattern.
    pub pplen: u64,
    /// The inputs were exchanged so that `|P'| <= |P|`.
    pub swapped: bool,
}

/// JSON description written next to an instance's grammar file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Sidecar {
    pub kind: GadgetKind,
    pub k: u64,
    pub n: u64,
    #[serde(rename = "L")]
    pub l: Option<[u64; 2]>,
    #[serde(rename = "R")]
    pub r: Option<[u64; 2]>,
    pub plen: u64,
    pub pplen: u64,
}

impl GadgetInstance {
    pub fn len(&self) -> u64 {
        self.slp.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slp.is_empty()
    }

    pub fn sidecar(&self) -> Sidecar {
        let pair = |x: Interval| [x.lo, x.hi];
        Sidecar {
            kind: self.kind,
            k: self.k,
            n: self.len(),
            l: self.l.map(pair),
            r: self.r.map(pair),
            plen: self.plen,
            pplen: self.pplen,
        }
    }

    /// Expansion length predicted from the pattern length alone.
    pub fn expected_len(&self) -> u64 {
        match self.kind {
            GadgetKind::Char1 | GadgetKind::Ternary3 => self.k * (2 * self.k * self.plen + 1),
            GadgetKind::Lr3 => 1 + 4 * self.plen,
        }
    }
}

fn ensure_binary_slp(g: &Slp, name: &str) -> Result<(), GadgetError> {
    if g.symbols_used().contains(Symbol::Two) {
        return Err(GadgetError::AlphabetMismatch(format!("{name} must be binary")));
    }
    Ok(())
}

/// `c` repeated `m` times, or `None` for `m = 0`.
fn run(c: Symbol, m: u64) -> Result<Option<Slp>, SlpError> {
    if m == 0 {
        return Ok(None);
    }
    Slp::from_symbols(&[c])?.power(m).map(Some)
}

fn join(parts: &[Option<&Slp>]) -> Result<Slp, SlpError> {
    let present: Vec<&Slp> = parts.iter().flatten().copied().collect();
    Slp::concat_all(&present)
}

/// Orders the inputs so the second is not longer, and pads it with `0` to
/// the length of the first.
fn prepare(p: &Slp, pp: &Slp) -> Result<(Slp, Slp, bool), GadgetError> {
    ensure_binary_slp(p, "P")?;
    ensure_binary_slp(pp, "P'")?;
    let swapped = pp.len() > p.len();
    let (p, pp) = if swapped { (pp, p) } else { (p, pp) };
    let pad = run(Symbol::Zero, p.len() - pp.len())?;
    let padded = join(&[Some(pp), pad.as_ref()])?;
    Ok((p.clone(), padded, swapped))
}

fn bracket_gadget(p: &Slp, pp: &Slp, k: u64, fill: Symbol) -> Result<(Slp, u64, u64, bool), GadgetError> {
    if k < 3 {
        return Err(GadgetError::InvalidK(k));
    }
    let pplen = p.len().min(pp.len());
    let (p, padded, swapped) = prepare(p, pp)?;
    let m = p.len();
    let km = k.checked_mul(m).ok_or(SlpError::LengthOverflow)?;
    let zero = Symbol::Zero;
    let b1 = join(&[run(zero, (k - 1) * m)?.as_ref(), Some(&p), run(zero, km + 1)?.as_ref()])?;
    let one = Slp::from_symbols(&[Symbol::One])?;
    let side = run(fill, km)?;
    let b2 = join(&[side.as_ref(), Some(&one), side.as_ref()])?;
    let rev = padded.reverse();
    let b3 = join(&[run(zero, km + 1)?.as_ref(), Some(&rev), run(zero, (k - 1) * m)?.as_ref()])?;
    let ones = if k > 3 {
        let block = run(Symbol::One, 2 * km + 1)?.expect("positive length");
        Some(block.power(k - 3)?)
    } else {
        None
    };
    let g = join(&[Some(&b1), Some(&b2), Some(&b3), ones.as_ref()])?;
    Ok((g, m, pplen, swapped))
}

/// Binary instance: has a `k`-cadence with symbol `1` iff `P` and `P'`
/// share a 1-position.
pub fn gadget_cadence_char1(p: &Slp, pp: &Slp, k: u64) -> Result<GadgetInstance, GadgetError> {
    let (slp, plen, pplen, swapped) = bracket_gadget(p, pp, k, Symbol::Zero)?;
    Ok(GadgetInstance {
        slp,
        kind: GadgetKind::Char1,
        k,
        l: None,
        r: None,
        plen,
        pplen,
        swapped,
    })
}

/// Ternary instance: has a 3-cadence iff `P` and `P'` share a 1-position.
pub fn gadget_cadence_ternary3(p: &Slp, pp: &Slp) -> Result<GadgetInstance, GadgetError> {
    let (slp, plen, pplen, swapped) = bracket_gadget(p, pp, 3, Symbol::Two)?;
    Ok(GadgetInstance {
        slp,
        kind: GadgetKind::Ternary3,
        k: 3,
        l: None,
        r: None,
        plen,
        pplen,
        swapped,
    })
}

/// `1 0^m P double(pad(P'))` with `L = [1, 1]` and `R` the doubled part: has
/// an L-R-3-cadence iff `P` and `P'` share a 1-position.
pub fn gadget_lr3(p: &Slp, pp: &Slp) -> Result<GadgetInstance, GadgetError> {
    let pplen = p.len().min(pp.len());
    let (p, padded, swapped) = prepare(p, pp)?;
    let m = p.len();
    let one = Slp::from_symbols(&[Symbol::One])?;
    let zeros = run(Symbol::Zero, m)?;
    let doubled = padded.double_chars()?;
    let slp = join(&[Some(&one), zeros.as_ref(), Some(&p), Some(&doubled)])?;
    Ok(GadgetInstance {
        slp,
        kind: GadgetKind::Lr3,
        k: 3,
        l: Some(Interval::new(1, 1)),
        r: Some(Interval::new(2 * m + 2, 4 * m + 1)),
        plen: m,
        pplen,
        swapped,
    })
}

/// Replaces `2` by `1`. Equidistant occurrences of `212` then correspond to
/// L-R-3-cadences with symbol `1`.
pub fn esm_212_project(s: &Slp) -> Slp {
    s.substitute(Symbol::Two, Symbol::One)
}

/// Equidistant occurrences `(i, d)` of `212` at `i, i+d, i+2d`.
pub fn occurrences_212(s: &[Symbol]) -> Vec<(u64, u64)> {
    let n = s.len() as u64;
    let at = |i: u64| s[(i - 1) as usize];
    let mut out = Vec::new();
    for i in 1..=n {
        if at(i) != Symbol::Two {
            continue;
        }
        for d in 1..=(n - i) / 2 {
            if at(i + d) == Symbol::One && at(i + 2 * d) == Symbol::Two {
                out.push((i, d));
            }
        }
    }
    out
}

/// Brute-force check that the `212` occurrences of `s` are exactly the
/// symbol-`1` L-R-3-cadences of its projection.
///
/// Requires `L` before `R`, only `0` and `2` inside `L` and `R`, only `0`
/// and `1` elsewhere, and every middle `(l + r) / 2` with `l` in `L` and `r`
/// in `R` outside both intervals.
pub fn esm_212_equiv_check(s: &[Symbol], l: Interval, r: Interval) -> Result<bool, GadgetError> {
    let n = s.len() as u64;
    let bad = |msg: String| Err(GadgetError::HypothesisViolated(msg));
    if l.is_empty() || r.is_empty() || l.lo == 0 || r.hi > n || l.hi >= r.lo {
        return bad(format!("L = {l} must lie before R = {r} inside 1..{n}"));
    }
    let mids = Interval::new((l.lo + r.lo) / 2, (l.hi + r.hi).div_ceil(2));
    if !mids.intersect(&l).is_empty() || !mids.intersect(&r).is_empty() {
        return bad(format!("middles {mids} meet L = {l} or R = {r}"));
    }
    for (idx, &c) in s.iter().enumerate() {
        let i = idx as u64 + 1;
        let inside = l.contains(i) || r.contains(i);
        if inside && c == Symbol::One {
            return bad(format!("position {i} in L or R holds 1"));
        }
        if !inside && c == Symbol::Two {
            return bad(format!("position {i} outside L and R holds 2"));
        }
    }
    let projected: Vec<Symbol> = s
        .iter()
        .map(|&c| if c == Symbol::Two { Symbol::One } else { c })
        .collect();
    let cadences: BTreeSet<(u64, u64)> = enum_lr(&projected, l, r, 3, Some(Symbol::One))?
        .pairs()
        .into_iter()
        .collect();
    let occurrences: BTreeSet<(u64, u64)> = occurrences_212(s).into_iter().collect();
    Ok(cadences == occurrences)
}
