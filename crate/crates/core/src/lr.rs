use thiserror::Error;

use crate::alphabet::{Parity, Symbol};
use crate::view::{Interval, RunShape, StringView, ViewError};
use crate::witness::{StepOutcome, Witness, WitnessKind};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DetectError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("invalid intervals: {0}")]
    Interval(String),
    #[error("{0}")]
    AlphabetMismatch(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

impl From<ViewError> for DetectError {
    fn from(e: ViewError) -> Self {
        match e {
            ViewError::AlphabetMismatch(m) => DetectError::AlphabetMismatch(m),
            other => DetectError::Precondition(other.to_string()),
        }
    }
}

pub(crate) fn ensure_binary(v: &StringView) -> Result<(), DetectError> {
    if v.alphabet_size() > 2 {
        return Err(DetectError::AlphabetMismatch(
            "input contains the symbol 2; a binary string is required".into(),
        ));
    }
    Ok(())
}

/// Returns `w` if it holds in `v`, otherwise an internal error.
pub(crate) fn certify(v: &StringView, w: Witness) -> Result<Witness, DetectError> {
    if w.verify(v) {
        Ok(w)
    } else {
        Err(DetectError::Internal(format!(
            "candidate ({}, {}, {}) failed verification",
            w.i, w.d, w.k
        )))
    }
}

/// Maps a 3-term witness found on the reversed view back to forward indices.
pub(crate) fn unreverse(w: Witness, n: u64, kind: WitnessKind) -> Witness {
    Witness::new(n + 1 - w.last(), w.d, w.k, w.symbol, kind)
}

/// State of the L-R shrinking loop at one parity for one searched symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrState {
    pub p: Parity,
    pub c: Symbol,
    pub l_min: u64,
    pub l_max: u64,
    pub r_min: u64,
    pub r_max: u64,
    pub r0: Option<u64>,
    pub m0: Option<u64>,
}

impl LrState {
    pub fn new(p: Parity, c: Symbol, l_run: Interval, r: Interval) -> Option<Self> {
        let (l_min, l_max) = l_run.parity_span(p)?;
        let (r_min, r_max) = r.parity_span(p)?;
        Some(LrState {
            p,
            c,
            l_min,
            l_max,
            r_min,
            r_max,
            r0: None,
            m0: None,
        })
    }
}

/// Which endpoint pairs `(l, r)` are admissible.
#[derive(Clone, Copy, Debug)]
pub(crate) enum Reach {
    /// Any `r` up to `r_max`.
    Lr { r_max: u64 },
    /// `r <= n` and `(l, (r-l)/2, 3)` is structurally maximal.
    Cadence { n: u64 },
}

/// Endpoint search with `l` ranging over a run of `c` at parity `p`.
/// For fixed `r` the admissible `l` form a prefix of the run, and that
/// prefix grows with `r`.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Search {
    pub p: Parity,
    pub c: Symbol,
    pub l_min: u64,
    pub l_max: u64,
    pub reach: Reach,
    pub kind: WitnessKind,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Probes {
    pub r0: Option<u64>,
    pub m0: Option<u64>,
}

impl Search {
    fn r_top(&self) -> i128 {
        let top = match self.reach {
            Reach::Lr { r_max } => r_max,
            Reach::Cadence { n } => n,
        };
        self.p.snap_down(top as i128)
    }

    /// Largest admissible `l` (parity `p`) for right end `r`.
    pub(crate) fn last_limit(&self, r: i128) -> i128 {
        let l_max = self.l_max as i128;
        match self.reach {
            Reach::Lr { .. } => l_max,
            Reach::Cadence { n } => {
                let n = n as i128;
                l_max
                    .min(self.p.snap_down(r.div_euclid(3)))
                    .min(self.p.snap_down(3 * r - 2 * n - 1))
            }
        }
    }

    /// Range of admissible `l` for middle `m` and right ends in `[r_floor, r_top]`.
    pub(crate) fn mid_bounds(&self, m: i128, r_floor: i128) -> (i128, i128) {
        let lo = (self.l_min as i128).max(2 * m - self.r_top());
        let mut hi = (self.l_max as i128).min(2 * m - r_floor);
        if let Reach::Cadence { n } = self.reach {
            let n = n as i128;
            hi = hi
                .min(self.p.snap_down(m.div_euclid(2)))
                .min(self.p.snap_down((3 * m - n - 1).div_euclid(2)));
        }
        (lo, hi)
    }

    fn reaches(&self, r: i128, target: i128) -> bool {
        let ll = self.last_limit(r);
        ll >= self.l_min as i128 && ll + r > target
    }

    /// Smallest `r` of parity `p` in `[from, r_top]` that pairs with some
    /// admissible `l` so that the middle exceeds `target / 2`.
    fn first_reaching(&self, from: i128, target: i128) -> Option<i128> {
        let top = self.r_top();
        if from > top || !self.reaches(top, target) {
            return None;
        }
        let (mut lo, mut hi) = (0i128, (top - from) / 2);
        while lo < hi {
            let mid = lo + (hi - lo) / 2;
            if self.reaches(from + 2 * mid, target) {
                hi = mid;
            } else {
                lo = mid + 1;
            }
        }
        Some(from + 2 * lo)
    }

    fn witness(&self, v: &StringView, l: i128, r: i128) -> Result<Witness, DetectError> {
        let (l, r) = (l as u64, r as u64);
        certify(v, Witness::new(l, (r - l) / 2, 3, self.c, self.kind))
    }
}

fn iv(lo: i128, hi: i128) -> Interval {
    if lo > hi || hi < 1 {
        Interval::EMPTY
    } else {
        Interval::new(lo.max(1) as u64, hi as u64)
    }
}

/// One shrinking pass. Assumes no admissible triple has its right end below
/// `r_min`; on `Shrunk(r)` the same holds for `r`.
pub(crate) fn shrink_step(
    v: &StringView,
    s: &Search,
    r_min: u64,
) -> Result<(StepOutcome, Probes), DetectError> {
    let mut probes = Probes::default();
    let (c, p) = (s.c, s.p);
    let top = s.r_top();
    let (l_min, l_max) = (s.l_min as i128, s.l_max as i128);
    let Some(r0) = v.first_in(c, p, iv(r_min as i128, top)) else {
        return Ok((StepOutcome::NoCadence, probes));
    };
    probes.r0 = Some(r0);
    let r0 = r0 as i128;

    let lm = s.last_limit(r0);
    if lm >= l_min {
        if let Some(m) = v.first_in(c, Parity::Both, iv((l_min + r0) / 2, (lm + r0) / 2)) {
            let w = s.witness(v, 2 * m as i128 - r0, r0)?;
            return Ok((StepOutcome::Found(w), probes));
        }
    }

    let m_lo = (lm.max(l_min) + r0) / 2 + 1;
    let m_hi = (l_max + top) / 2;
    let Some(m0) = v.first_in(c, Parity::Both, iv(m_lo, m_hi)) else {
        return Ok((StepOutcome::NoCadence, probes));
    };
    probes.m0 = Some(m0);
    let m0 = m0 as i128;

    let r_floor = r0 + 2;
    let (lo, hi) = s.mid_bounds(m0, r_floor);
    let window = (lo <= hi).then(|| (2 * m0 - hi, 2 * m0 - lo));
    if let Some((w_lo, w_hi)) = window {
        if let Some(r) = v.first_in(c, p, iv(w_lo, w_hi)) {
            let r = r as i128;
            let w = s.witness(v, 2 * m0 - r, r)?;
            return Ok((StepOutcome::Found(w), probes));
        }
    }

    let Some(mut next) = s.first_reaching(r_floor, 2 * m0) else {
        return Ok((StepOutcome::NoCadence, probes));
    };
    if let Some((w_lo, w_hi)) = window {
        if (w_lo..=w_hi).contains(&next) {
            next = w_hi + 2;
        }
    }
    if next > top {
        return Ok((StepOutcome::NoCadence, probes));
    }
    Ok((StepOutcome::Shrunk(next as u64), probes))
}

/// Iterates [`shrink_step`] from `r_min` until it resolves. Returns the
/// witness, if any, and the number of steps taken.
pub(crate) fn shrink_loop(
    v: &StringView,
    s: &Search,
    mut r_min: u64,
) -> Result<(Option<Witness>, u64), DetectError> {
    let mut steps = 0;
    loop {
        steps += 1;
        match shrink_step(v, s, r_min)?.0 {
            StepOutcome::Found(w) => return Ok((Some(w), steps)),
            StepOutcome::NoCadence => return Ok((None, steps)),
            StepOutcome::Shrunk(r) => {
                if r <= r_min {
                    return Err(DetectError::Internal("shrink did not advance".into()));
                }
                r_min = r;
            }
        }
    }
}

/// Witness from two same-parity positions with opposite transitions:
/// `S[i] = S[j] != S[i+2] = S[j-2]`.
pub fn lr2_witness(v: &StringView, i: u64, j: u64) -> Result<Witness, DetectError> {
    ensure_binary(v)?;
    if i == 0 || j > v.len() || i % 2 != j % 2 || i + 4 >= j {
        return Err(DetectError::Precondition(format!(
            "positions {i} and {j} do not form an opposite pair"
        )));
    }
    let (a, b) = (v.get(i), v.get(i + 2));
    if a == b || v.get(j) != a || v.get(j - 2) != b {
        return Err(DetectError::Precondition(format!(
            "S[{i}] = S[{j}] != S[{}] = S[{}] does not hold",
            i + 2,
            j - 2
        )));
    }
    let m = (i + j) / 2;
    let w = if v.get(m) == a {
        Witness::new(i, (j - i) / 2, 3, a, WitnessKind::SubCadence)
    } else {
        Witness::new(i + 2, (j - i - 4) / 2, 3, b, WitnessKind::SubCadence)
    };
    certify(v, w)
}

/// L-R check for one run of `c` on each side: some middle between the runs
/// carries `c`.
pub fn lr01_check(
    v: &StringView,
    p: Parity,
    c: Symbol,
    l_run: Interval,
    r_run: Interval,
) -> Result<Option<Witness>, DetectError> {
    let (Some((l_min, l_max)), Some((r_min, r_max))) = (l_run.parity_span(p), r_run.parity_span(p))
    else {
        return Ok(None);
    };
    if l_max >= r_min || r_max > v.len() {
        return Err(DetectError::Precondition(format!(
            "runs {l_run} and {r_run} are not ordered inside the string"
        )));
    }
    if !v.is_uniform(c, p, l_run) || !v.is_uniform(c, p, r_run) {
        return Err(DetectError::Precondition(format!(
            "runs {l_run} and {r_run} do not consist of {c}"
        )));
    }
    let kind = WitnessKind::LrCadence { l: l_run, r: r_run };
    lr01_unchecked(v, c, (l_min, l_max), (r_min, r_max), kind)
}

fn lr01_unchecked(
    v: &StringView,
    c: Symbol,
    (l_min, l_max): (u64, u64),
    (r_min, r_max): (u64, u64),
    kind: WitnessKind,
) -> Result<Option<Witness>, DetectError> {
    let mids = Interval::new((l_min + r_min) / 2, (l_max + r_max) / 2);
    let Some(m) = v.first_in(c, Parity::Both, mids) else {
        return Ok(None);
    };
    let l = l_min.max((2 * m).saturating_sub(r_max));
    let r = 2 * m - l;
    certify(v, Witness::new(l, (r - l) / 2, 3, c, kind)).map(Some)
}

/// One pass of the L-R shrinking loop. The L-run `[l_min, l_max]` must carry
/// `c` at parity `p`. Records the probes in `st` and advances `st.r_min` on
/// `Shrunk`.
pub fn lr0_step(v: &StringView, st: &mut LrState) -> Result<StepOutcome, DetectError> {
    ensure_binary(v)?;
    let p = st.p;
    let ok = st.l_min <= st.l_max
        && p.matches(st.l_min)
        && p.matches(st.l_max)
        && p.matches(st.r_min)
        && st.l_max < st.r_min
        && st.r_max <= v.len();
    if !ok {
        return Err(DetectError::Precondition(format!("inconsistent state {st:?}")));
    }
    let l_run = Interval::new(st.l_min, st.l_max);
    if !v.is_uniform(st.c, p, l_run) {
        return Err(DetectError::Precondition(format!(
            "L-run {l_run} does not consist of {}",
            st.c
        )));
    }
    let s = Search {
        p,
        c: st.c,
        l_min: st.l_min,
        l_max: st.l_max,
        reach: Reach::Lr { r_max: st.r_max },
        kind: WitnessKind::LrCadence {
            l: l_run,
            r: Interval::new(st.r_min, st.r_max),
        },
    };
    let (out, probes) = shrink_step(v, &s, st.r_min)?;
    st.r0 = probes.r0;
    st.m0 = probes.m0;
    if let StepOutcome::Shrunk(r) = out {
        st.r_min = r;
    }
    Ok(out)
}

/// The first `k` runs of the parity-`p` subsequence of `r`, as
/// (symbol, index span) pairs.
pub(crate) fn leading_runs(v: &StringView, p: Parity, r: Interval, k: usize) -> Vec<(Symbol, Interval)> {
    let r = r.intersect(&v.full());
    let mut out = Vec::new();
    let Some((mut start, last)) = r.parity_span(p) else {
        return out;
    };
    while out.len() < k {
        let c = v.get(start);
        let rest = Interval::new(start, last);
        match v.first_in(c.complement(), p, rest) {
            Some(j) => {
                out.push((c, Interval::new(start, j - 2)));
                start = j;
            }
            None => {
                out.push((c, rest));
                break;
            }
        }
    }
    out
}

/// All runs of the parity-`p` subsequence of `r`, or `None` if there are
/// more than `max`.
pub(crate) fn parity_runs(
    v: &StringView,
    p: Parity,
    r: Interval,
    max: usize,
) -> Option<Vec<(Symbol, Interval)>> {
    let runs = leading_runs(v, p, r, max + 1);
    (runs.len() <= max).then_some(runs)
}

/// Transition evidence of a shape: positions holding `0` (resp. `1`) whose
/// next same-parity position holds the other symbol.
fn transitions(s: RunShape) -> (Option<u64>, Option<u64>) {
    match s {
        RunShape::Empty | RunShape::AllOf(_) => (None, None),
        RunShape::TwoRuns { first, boundary } => match first {
            Symbol::Zero => (Some(boundary), None),
            _ => (None, Some(boundary)),
        },
        RunShape::Complex {
            zero_one, one_zero, ..
        } => (Some(zero_one), Some(one_zero)),
    }
}

fn shape_runs(s: RunShape, span: (u64, u64)) -> Vec<(Symbol, Interval)> {
    match s {
        RunShape::AllOf(c) => vec![(c, Interval::new(span.0, span.1))],
        RunShape::TwoRuns { first, boundary } => vec![
            (first, Interval::new(span.0, boundary)),
            (first.complement(), Interval::new(boundary + 2, span.1)),
        ],
        _ => Vec::new(),
    }
}

/// Checks every pair of equal-symbol runs with `lr01_unchecked`.
fn run_pairs(
    v: &StringView,
    p: Parity,
    left: &[(Symbol, Interval)],
    right: &[(Symbol, Interval)],
    kind: WitnessKind,
) -> Result<Option<Witness>, DetectError> {
    for &(c, lr) in left {
        for &(c2, rr) in right {
            if c != c2 {
                continue;
            }
            if let (Some(ls), Some(rs)) = (lr.parity_span(p), rr.parity_span(p)) {
                if let Some(w) = lr01_unchecked(v, c, ls, rs, kind)? {
                    return Ok(Some(w));
                }
            }
        }
    }
    Ok(None)
}

/// Complete L-R-3-cadence search at one parity for `l_iv` entirely before `r_iv`.
pub(crate) fn lr_parity(
    v: &StringView,
    p: Parity,
    l_iv: Interval,
    r_iv: Interval,
    kind: WitnessKind,
) -> Result<Option<(Witness, u64)>, DetectError> {
    let (Some(l_span), Some(r_span)) = (l_iv.parity_span(p), r_iv.parity_span(p)) else {
        return Ok(None);
    };
    let sl = v.shape(p, l_iv);
    let sr = v.shape(p, r_iv);
    let (l01, l10) = transitions(sl);
    let (r01, r10) = transitions(sr);
    let relabel = |w: Witness| Witness { kind, ..w };
    if let (Some(i), Some(q)) = (l01, r10) {
        return Ok(Some((relabel(lr2_witness(v, i, q + 2)?), 0)));
    }
    if let (Some(i), Some(q)) = (l10, r01) {
        return Ok(Some((relabel(lr2_witness(v, i, q + 2)?), 0)));
    }
    match (sl, sr) {
        (RunShape::AllOf(c), RunShape::Complex { .. }) => {
            if let Some(rr) = parity_runs(v, p, r_iv, 3) {
                let w = run_pairs(v, p, &shape_runs(sl, l_span), &rr, kind)?;
                return Ok(w.map(|w| (w, 0)));
            }
            let s = Search {
                p,
                c,
                l_min: l_span.0,
                l_max: l_span.1,
                reach: Reach::Lr { r_max: r_span.1 },
                kind,
            };
            let (w, steps) = shrink_loop(v, &s, r_span.0)?;
            Ok(w.map(|w| (w, steps)))
        }
        (RunShape::Complex { .. }, RunShape::AllOf(c)) => {
            if let Some(lr) = parity_runs(v, p, l_iv, 3) {
                let w = run_pairs(v, p, &lr, &shape_runs(sr, r_span), kind)?;
                return Ok(w.map(|w| (w, 0)));
            }
            let n = v.len();
            let rv = v.reversed();
            let rp = if n.is_multiple_of(2) { p.flip() } else { p };
            let flip = |x: u64| n + 1 - x;
            let s = Search {
                p: rp,
                c,
                l_min: flip(r_span.1),
                l_max: flip(r_span.0),
                reach: Reach::Lr {
                    r_max: flip(l_span.0),
                },
                kind: WitnessKind::SubCadence,
            };
            let (w, steps) = shrink_loop(&rv, &s, flip(l_span.1))?;
            match w {
                Some(w) => Ok(Some((certify(v, unreverse(w, n, kind))?, steps))),
                None => Ok(None),
            }
        }
        _ => {
            let w = run_pairs(v, p, &shape_runs(sl, l_span), &shape_runs(sr, r_span), kind)?;
            Ok(w.map(|w| (w, 0)))
        }
    }
}

fn check_range(v: &StringView, x: Interval, name: &str) -> Result<(), DetectError> {
    if !x.is_empty() && (x.lo == 0 || x.hi > v.len()) {
        return Err(DetectError::Interval(format!(
            "{name} = {x} lies outside 1..{}",
            v.len()
        )));
    }
    Ok(())
}

/// L-R-3-cadence detection for `l` entirely before `r`.
pub fn detect_lr_disjoint(
    v: &StringView,
    l: Interval,
    r: Interval,
) -> Result<Option<Witness>, DetectError> {
    ensure_binary(v)?;
    check_range(v, l, "L")?;
    check_range(v, r, "R")?;
    if l.is_empty() || r.is_empty() {
        return Ok(None);
    }
    if l.hi >= r.lo {
        return Err(DetectError::Interval(format!(
            "L = {l} must end before R = {r} starts"
        )));
    }
    let kind = WitnessKind::LrCadence { l, r };
    for p in [Parity::Even, Parity::Odd] {
        if let Some((w, _)) = lr_parity(v, p, l, r, kind)? {
            return certify(v, w).map(Some);
        }
    }
    Ok(None)
}

/// L-R-3-cadence detection for intervals that may overlap, with
/// `min L <= min R` and `max L <= max R`.
pub fn detect_lr(v: &StringView, l: Interval, r: Interval) -> Result<Option<Witness>, DetectError> {
    ensure_binary(v)?;
    check_range(v, l, "L")?;
    check_range(v, r, "R")?;
    if l.is_empty() || r.is_empty() {
        return Ok(None);
    }
    if l.lo > r.lo || l.hi > r.hi {
        return Err(DetectError::Interval(format!(
            "L = {l} and R = {r} need min L <= min R and max L <= max R"
        )));
    }
    if l.hi < r.lo {
        return detect_lr_disjoint(v, l, r);
    }
    let kind = WitnessKind::LrCadence { l, r };
    let m = l.intersect(&r);
    let scan = Interval::new(m.lo, m.hi.min(m.lo + 8));
    for i in scan.lo..=scan.hi {
        let c = v.get(i);
        for d in 1..=(scan.hi - i) / 2 {
            if v.get(i + d) == c && v.get(i + 2 * d) == c {
                return certify(v, Witness::new(i, d, 3, c, kind)).map(Some);
            }
        }
    }
    let relabel = |w: Witness| Witness { kind, ..w };
    if l.lo < m.lo {
        let left = Interval::new(l.lo, m.lo - 1);
        if let Some(w) = detect_lr_disjoint(v, left, Interval::new(m.lo, r.hi))? {
            return certify(v, relabel(w)).map(Some);
        }
    }
    if m.hi < r.hi {
        let right = Interval::new(m.hi + 1, r.hi);
        if let Some(w) = detect_lr_disjoint(v, Interval::new(l.lo, m.hi), right)? {
            return certify(v, relabel(w)).map(Some);
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn view(s: &str) -> StringView {
        StringView::from_str_plain(s).unwrap()
    }

    #[test]
    fn lr2_examples() {
        let w = lr2_witness(&view("000100000100"), 2, 12).unwrap();
        assert_eq!((w.i, w.d, w.k, w.symbol), (2, 5, 3, Symbol::Zero));
        let w = lr2_witness(&view("000100100100"), 2, 12).unwrap();
        assert_eq!((w.i, w.d, w.k, w.symbol), (4, 3, 3, Symbol::One));
        assert!(matches!(
            lr2_witness(&view("000100100100"), 2, 11),
            Err(DetectError::Precondition(_))
        ));
    }

    #[test]
    fn lr01_examples() {
        let w = lr01_check(&view("00000"), Parity::Even, Symbol::Zero, Interval::new(2, 2), Interval::new(4, 4))
            .unwrap()
            .unwrap();
        assert_eq!((w.i, w.d, w.k), (2, 1, 3));
        let none = lr01_check(&view("00100"), Parity::Even, Symbol::Zero, Interval::new(2, 2), Interval::new(4, 4));
        assert_eq!(none, Ok(None));
        let comp = view("00100").adapt(crate::view::Adapter::Complement).unwrap();
        let none = lr01_check(&comp, Parity::Even, Symbol::One, Interval::new(2, 2), Interval::new(4, 4));
        assert_eq!(none, Ok(None));
        assert!(lr01_check(&view("00100"), Parity::Odd, Symbol::Zero, Interval::new(1, 3), Interval::new(5, 5)).is_err());
    }

    #[test]
    fn lr0_examples() {
        let v = view("0000000000");
        let mut st = LrState::new(Parity::Even, Symbol::Zero, Interval::new(2, 4), Interval::new(8, 10)).unwrap();
        match lr0_step(&v, &mut st).unwrap() {
            StepOutcome::Found(w) => assert_eq!((w.i, w.d, w.k), (2, 3, 3)),
            o => panic!("{o:?}"),
        }
        let v = view("0000000101");
        let mut st = LrState::new(Parity::Even, Symbol::Zero, Interval::new(2, 4), Interval::new(8, 10)).unwrap();
        assert_eq!(lr0_step(&v, &mut st).unwrap(), StepOutcome::NoCadence);
    }

    #[test]
    fn disjoint_examples() {
        let w = detect_lr_disjoint(&view("000100011"), Interval::new(1, 3), Interval::new(7, 9))
            .unwrap()
            .unwrap();
        assert_eq!((w.i, w.d, w.k), (3, 2, 3));
        let w = detect_lr_disjoint(&view("1000101001111"), Interval::new(1, 1), Interval::new(8, 13))
            .unwrap()
            .unwrap();
        assert_eq!((w.i, w.d, w.k), (1, 6, 3));
        assert!(matches!(
            detect_lr_disjoint(&view("0000"), Interval::new(1, 2), Interval::new(2, 4)),
            Err(DetectError::Interval(_))
        ));
    }

    #[test]
    fn overlap_examples() {
        let w = detect_lr(&view("000000000"), Interval::new(1, 6), Interval::new(4, 9))
            .unwrap()
            .unwrap();
        assert_eq!((w.i, w.d, w.k), (4, 1, 3));
        assert!(matches!(
            detect_lr(&view("000000000"), Interval::new(4, 9), Interval::new(1, 6)),
            Err(DetectError::Interval(_))
        ));
    }

    #[test]
    fn parity_run_listing() {
        let v = view("0101110000");
        let runs = parity_runs(&v, Parity::Even, v.full(), 5).unwrap();
        assert_eq!(
            runs,
            vec![(Symbol::One, Interval::new(2, 6)), (Symbol::Zero, Interval::new(8, 10))]
        );
        assert_eq!(parity_runs(&v, Parity::Odd, v.full(), 1), None);
    }
}
