use serde::Serialize;

use crate::alphabet::{Parity, Symbol};
use crate::lr::{
    certify, ensure_binary, leading_runs, lr_parity, shrink_loop, shrink_step, unreverse,
    DetectError, Probes, Reach, Search,
};
use crate::view::{Interval, StringView, ViewError};
use crate::witness::{is_maximal, StepOutcome, Witness, WitnessKind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// Run the shrinking loop to completion. Linear work on plain strings.
    Uncompressed,
    /// Stop the loop at the tail threshold and finish with one L-R check.
    Compressed,
}

impl Mode {
    pub fn for_view(v: &StringView) -> Mode {
        if v.is_compressed() {
            Mode::Compressed
        } else {
            Mode::Uncompressed
        }
    }
}

/// One run of the parity-`p` subsequence, clipped to the first third, used
/// as the set of candidate start positions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RunContext {
    pub p: Parity,
    pub run_index: u8,
    pub c: Symbol,
    pub l_min: u64,
    pub l_max: u64,
    /// First parity-`p` index after the run.
    pub a: u64,
    pub r_stop: u64,
    pub mode: Mode,
}

impl RunContext {
    pub fn new(n: u64, p: Parity, run_index: u8, c: Symbol, run: Interval, mode: Mode) -> Option<Self> {
        let (l_min, l_max) = run.parity_span(p)?;
        let a = l_max + 2;
        Some(RunContext {
            p,
            run_index,
            c,
            l_min,
            l_max,
            a,
            r_stop: r1_threshold(a, n, p),
            mode,
        })
    }

    fn search(&self, n: u64) -> Search {
        Search {
            p: self.p,
            c: self.c,
            l_min: self.l_min,
            l_max: self.l_max,
            reach: Reach::Cadence { n },
            kind: WitnessKind::Cadence,
        }
    }
}

/// Every string of length `m` over `sigma` symbols has a `k`-sub-cadence,
/// and some string of length `m - 1` has none.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VdwEntry {
    pub k: u64,
    pub sigma: u8,
    pub m: u64,
}

pub const VDW_3_2: VdwEntry = VdwEntry { k: 3, sigma: 2, m: 9 };

/// True iff `(i, d, k)` is a k-sub-cadence that is structurally maximal.
pub fn is_k_cadence(v: &StringView, i: u64, d: u64, k: u64) -> Result<bool, ViewError> {
    let n = v.len();
    let last = (k.max(1) - 1).checked_mul(d).and_then(|x| x.checked_add(i));
    match last {
        Some(last) if i >= 1 && d >= 1 && k >= 2 && last <= n => {}
        _ => {
            return Err(ViewError::OutOfRange {
                index: last.unwrap_or(u64::MAX),
                len: n,
            })
        }
    }
    let c = v.get(i);
    Ok((1..k).all(|t| v.get(i + t * d) == c) && is_maximal(i, d, k, n))
}

/// A 3-sub-cadence inside the first `min(n, 9)` positions. Always present
/// once `n >= 9` on binary input.
pub fn detect_3subcadence(v: &StringView) -> Option<Witness> {
    let m = v.len().min(VDW_3_2.m);
    for i in 1..=m {
        let c = v.get(i);
        for d in 1..=(m.saturating_sub(i)) / 2 {
            if v.get(i + d) == c && v.get(i + 2 * d) == c {
                return Some(Witness::new(i, d, 3, c, WitnessKind::SubCadence));
            }
        }
    }
    None
}

/// Smallest `r` of parity `p` with `3a <= r` and `3r > 2n + a`; every pair
/// `(l, r')` with `l <= a <= r <= r'` is then structurally maximal.
pub fn r1_threshold(a: u64, n: u64, p: Parity) -> u64 {
    let base = (3 * a as i128).max((2 * n as i128 + a as i128) / 3 + 1);
    p.snap_up(base) as u64
}

/// Largest even start for end `r0` under both maximality inequalities.
pub fn lem30_bounds(l_max: i64, n: i64, r0: i64) -> i64 {
    let a = 2 * r0.div_euclid(6);
    let b = 2 * ((3 * r0 - 2 * n + 1).div_euclid(2) - 1);
    l_max.min(a).min(b)
}

/// Even starts `l` in `[l_min, l_max]` whose triple with middle `m0` stays
/// inside the string and is structurally maximal.
pub fn lem30_mid_bounds(l_min: i64, l_max: i64, n: i64, m0: i64) -> (i64, i64) {
    let lo = l_min.max(2 * (m0 - n.div_euclid(2)));
    let hi = l_max
        .min(2 * m0.div_euclid(4))
        .min(2 * ((3 * m0 - n + 3).div_euclid(4) - 1));
    (lo, hi)
}

fn check_context(v: &StringView, ctx: &RunContext, r_min: u64) -> Result<(), DetectError> {
    ensure_binary(v)?;
    let n = v.len();
    let ok = ctx.l_min <= ctx.l_max
        && ctx.p.matches(ctx.l_min)
        && ctx.p.matches(ctx.l_max)
        && ctx.l_max <= n
        && r_min > 2 * n / 3;
    if !ok || !v.is_uniform(ctx.c, ctx.p, Interval::new(ctx.l_min, ctx.l_max)) {
        return Err(DetectError::Precondition(format!(
            "context {ctx:?} with r_min = {r_min} is inconsistent"
        )));
    }
    Ok(())
}

/// One shrinking pass over right ends `>= r_min` for starts in the context's run.
pub fn cor3_step(v: &StringView, ctx: &RunContext, r_min: u64) -> Result<StepOutcome, DetectError> {
    Ok(cor3_step_probes(v, ctx, r_min)?.0)
}

/// [`cor3_step`] together with the first end `r0` and middle `m0` it probed.
pub fn cor3_step_probes(
    v: &StringView,
    ctx: &RunContext,
    r_min: u64,
) -> Result<(StepOutcome, Probes), DetectError> {
    check_context(v, ctx, r_min)?;
    shrink_step(v, &ctx.search(v.len()), r_min)
}

/// Cadences with start in `[1, a]` and end in `[r_stop, n]`. All such
/// L-R triples are structurally maximal.
pub fn tail_check(v: &StringView, ctx: &RunContext) -> Result<Option<Witness>, DetectError> {
    ensure_binary(v)?;
    let n = v.len();
    if ctx.r_stop > n || ctx.a >= ctx.r_stop {
        return Ok(None);
    }
    let l = Interval::new(1, ctx.a.min(n));
    let r = Interval::new(ctx.r_stop, n);
    match lr_parity(v, ctx.p, l, r, WitnessKind::Cadence)? {
        Some((w, _)) => certify(v, w).map(Some),
        None => Ok(None),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ContextReport {
    pub reversed: bool,
    pub context: RunContext,
    /// Shrinking steps taken before the context resolved or reached the tail.
    pub steps: u64,
    pub tail_checked: bool,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct DetectReport {
    pub contexts: Vec<ContextReport>,
}

impl DetectReport {
    pub fn total_steps(&self) -> u64 {
        self.contexts.iter().map(|c| c.steps).sum()
    }

    pub fn max_steps(&self) -> u64 {
        self.contexts.iter().map(|c| c.steps).max().unwrap_or(0)
    }
}

fn run_context(v: &StringView, ctx: &RunContext, rep: &mut ContextReport) -> Result<Option<Witness>, DetectError> {
    let n = v.len();
    let s = ctx.search(n);
    let mut r = ctx.p.at_or_after(2 * n / 3 + 1);
    match ctx.mode {
        Mode::Uncompressed => {
            let (w, steps) = shrink_loop(v, &s, r)?;
            rep.steps = steps;
            Ok(w)
        }
        Mode::Compressed => {
            while r < ctx.r_stop {
                rep.steps += 1;
                match shrink_step(v, &s, r)?.0 {
                    StepOutcome::Found(w) => return Ok(Some(w)),
                    StepOutcome::NoCadence => return Ok(None),
                    StepOutcome::Shrunk(next) => r = next,
                }
            }
            rep.tail_checked = true;
            tail_check(v, ctx)
        }
    }
}

/// 3-cadence detection on a binary string in the mode suited to its backend.
pub fn detect_3cadence(v: &StringView) -> Result<Option<Witness>, DetectError> {
    Ok(detect_3cadence_with(v, Mode::for_view(v))?.0)
}

/// 3-cadence detection with an explicit mode, reporting per-context work.
///
/// A cadence that starts in neither of the first two parity runs of the
/// first third forces both transition orientations before its start; the
/// same holds mirrored at the end, and the outermost such transitions yield
/// a cadence that starts in one of those runs. So the forward and reversed
/// views at both parities, with two runs each, cover every input.
pub fn detect_3cadence_with(v: &StringView, mode: Mode) -> Result<(Option<Witness>, DetectReport), DetectError> {
    ensure_binary(v)?;
    let n = v.len();
    let mut report = DetectReport::default();
    if n < 3 {
        return Ok((None, report));
    }
    let third = Interval::new(1, n / 3);
    for (p, reversed) in [
        (Parity::Even, false),
        (Parity::Even, true),
        (Parity::Odd, false),
        (Parity::Odd, true),
    ] {
        let w = if reversed { v.reversed() } else { v.clone() };
        for (idx, (c, run)) in leading_runs(&w, p, third, 2).into_iter().enumerate() {
            let Some(ctx) = RunContext::new(n, p, idx as u8 + 1, c, run, mode) else {
                continue;
            };
            let mut rep = ContextReport {
                reversed,
                context: ctx,
                steps: 0,
                tail_checked: false,
            };
            let found = run_context(&w, &ctx, &mut rep)?;
            report.contexts.push(rep);
            if let Some(x) = found {
                let x = if reversed {
                    unreverse(x, n, WitnessKind::Cadence)
                } else {
                    x
                };
                return Ok((Some(certify(v, x)?), report));
            }
        }
    }
    Ok((None, report))
}
