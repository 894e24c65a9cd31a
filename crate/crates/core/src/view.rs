//! Read-only query interface over plain and grammar-compressed strings.
//!
//! All indices are 1-based. A query names a symbol (or a set of symbols), a
//! [`Parity`] and an [`Interval`], and only positions whose global index has
//! that parity take part. Plain strings answer by scanning with stride; SLPs
//! answer by parity-aware rank and select descents, so no query ever
//! materializes a parity subsequence.
//!
//! Adapters (reversal, complement, projection of `2` onto `1`) are applied
//! lazily: a view carries a reversal flag and a symbol map, and every query
//! is translated into a query on the shared backend.

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::alphabet::{Parity, Symbol, SymbolSet};
use crate::slp::{Rule, Slp};

/// A 1-based inclusive index range. Empty when `lo > hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Interval {
    pub lo: u64,
    pub hi: u64,
}

impl Interval {
    pub const EMPTY: Interval = Interval { lo: 1, hi: 0 };

    pub const fn new(lo: u64, hi: u64) -> Self {
        Interval { lo, hi }
    }

    pub const fn is_empty(&self) -> bool {
        self.lo > self.hi
    }

    pub const fn len(&self) -> u64 {
        if self.is_empty() {
            0
        } else {
            self.hi - self.lo + 1
        }
    }

    pub const fn contains(&self, i: u64) -> bool {
        self.lo <= i && i <= self.hi
    }

    pub fn intersect(&self, other: &Interval) -> Interval {
        let r = Interval::new(self.lo.max(other.lo), self.hi.min(other.hi));
        if r.is_empty() {
            Interval::EMPTY
        } else {
            r
        }
    }

    /// Number of indices of parity `p` inside the interval.
    pub fn count_parity(&self, p: Parity) -> u64 {
        if self.is_empty() {
            return 0;
        }
        let first = p.at_or_after(self.lo);
        if first > self.hi {
            0
        } else {
            (self.hi - first) / p.step() + 1
        }
    }

    /// Smallest and largest index of parity `p` inside, if any.
    pub fn parity_span(&self, p: Parity) -> Option<(u64, u64)> {
        if self.is_empty() {
            return None;
        }
        let lo = p.at_or_after(self.lo);
        let hi = p.at_or_before(self.hi)?;
        (lo <= hi).then_some((lo, hi))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}..{}", self.lo, self.hi)
    }
}

impl FromStr for Interval {
    type Err = String;

    /// Parses `lo..hi` (inclusive) or a single index `i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let num = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("invalid interval bound {t:?}"))
        };
        match s.split_once("..") {
            Some((a, b)) => Ok(Interval::new(num(a)?, num(b)?)),
            None => {
                let i = num(s)?;
                Ok(Interval::new(i, i))
            }
        }
    }
}

/// Classification of the parity-filtered subsequence of an interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RunShape {
    Empty,
    AllOf(Symbol),
    /// `first` up to and including `boundary`, the other symbol afterwards.
    TwoRuns { first: Symbol, boundary: u64 },
    /// Both orientations occur. `zero_one` is an index holding `0` whose next
    /// same-parity position holds `1`; `one_zero` is the reverse pattern.
    Complex {
        first: Symbol,
        zero_one: u64,
        one_zero: u64,
    },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ViewError {
    #[error("index {index} outside 1..={len}")]
    OutOfRange { index: u64, len: u64 },
    #[error("{0}")]
    AlphabetMismatch(String),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Adapter {
    Reverse,
    Complement,
    Project2to1,
}

#[derive(Debug, Default)]
struct Counters {
    accesses: AtomicU64,
    rule_visits: AtomicU64,
}

/// Instrumentation totals since the view family was created (or last reset).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AccessStats {
    /// Characters read by plain scans, or point/rank queries answered on an SLP.
    pub char_accesses: u64,
    /// Grammar rules visited by SLP descents.
    pub rule_visits: u64,
}

#[derive(Debug)]
enum Backend {
    Plain(Vec<Symbol>),
    Slp(Slp),
}

impl Backend {
    fn len(&self) -> u64 {
        match self {
            Backend::Plain(s) => s.len() as u64,
            Backend::Slp(g) => g.len(),
        }
    }
}

/// Cheap-to-clone handle; clones and adapted views share the backend and
/// the instrumentation counters.
#[derive(Clone, Debug)]
pub struct StringView {
    backend: Arc<Backend>,
    counters: Arc<Counters>,
    n: u64,
    reversed: bool,
    /// View symbol for each backend symbol.
    map: [Symbol; 3],
    alphabet: u8,
}

#[inline]
fn local_parity(p: Parity, offset: u64) -> Parity {
    if offset.is_multiple_of(2) {
        p
    } else {
        p.flip()
    }
}

impl StringView {
    pub fn plain(s: Vec<Symbol>) -> Self {
        let alphabet = if s.contains(&Symbol::Two) { 3 } else { 2 };
        Self::with_backend(Backend::Plain(s), alphabet)
    }

    pub fn from_str_plain(s: &str) -> Result<Self, ViewError> {
        let syms = crate::alphabet::parse_symbols(s)
            .map_err(|c| ViewError::AlphabetMismatch(format!("invalid symbol {c:?}")))?;
        Ok(Self::plain(syms))
    }

    pub fn slp(g: Slp) -> Self {
        let alphabet = g.alphabet_size();
        Self::with_backend(Backend::Slp(g), alphabet)
    }

    fn with_backend(b: Backend, alphabet: u8) -> Self {
        StringView {
            n: b.len(),
            backend: Arc::new(b),
            counters: Arc::default(),
            reversed: false,
            map: Symbol::ALL,
            alphabet,
        }
    }

    pub fn len(&self) -> u64 {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// 3 if the viewed string may contain `2`, else 2.
    pub fn alphabet_size(&self) -> u8 {
        self.alphabet
    }

    pub fn is_compressed(&self) -> bool {
        matches!(*self.backend, Backend::Slp(_))
    }

    pub fn is_reversed(&self) -> bool {
        self.reversed
    }

    /// The grammar behind this view, if any.
    pub fn grammar(&self) -> Option<&Slp> {
        match &*self.backend {
            Backend::Slp(g) => Some(g),
            Backend::Plain(_) => None,
        }
    }

    pub fn full(&self) -> Interval {
        Interval::new(1, self.n)
    }

    pub fn stats(&self) -> AccessStats {
        AccessStats {
            char_accesses: self.counters.accesses.load(Ordering::Relaxed),
            rule_visits: self.counters.rule_visits.load(Ordering::Relaxed),
        }
    }

    pub fn reset_stats(&self) {
        self.counters.accesses.store(0, Ordering::Relaxed);
        self.counters.rule_visits.store(0, Ordering::Relaxed);
    }

    #[inline]
    fn note(&self, accesses: u64, visits: u64) {
        if accesses > 0 {
            self.counters.accesses.fetch_add(accesses, Ordering::Relaxed);
        }
        if visits > 0 {
            self.counters.rule_visits.fetch_add(visits, Ordering::Relaxed);
        }
    }

    pub fn adapt(&self, a: Adapter) -> Result<StringView, ViewError> {
        let mut v = self.clone();
        match a {
            Adapter::Reverse => v.reversed = !v.reversed,
            Adapter::Complement => {
                if self.alphabet != 2 {
                    return Err(ViewError::AlphabetMismatch(
                        "complement needs a binary string".into(),
                    ));
                }
                v.map = v.map.map(Symbol::complement);
            }
            Adapter::Project2to1 => {
                if self.alphabet != 3 {
                    return Err(ViewError::AlphabetMismatch(
                        "projection needs a ternary string".into(),
                    ));
                }
                v.map = v.map.map(|c| if c == Symbol::Two { Symbol::One } else { c });
                v.alphabet = 2;
            }
        }
        Ok(v)
    }

    pub fn reversed(&self) -> StringView {
        self.adapt(Adapter::Reverse).expect("reversal always applies")
    }

    /// Backend symbols that read as a member of `set` in this view.
    #[inline]
    fn base_set(&self, set: SymbolSet) -> SymbolSet {
        let mut b = SymbolSet::EMPTY;
        for c in Symbol::ALL {
            if set.contains(self.map[c.index()]) {
                b.insert(c);
            }
        }
        b
    }

    /// Parity of backend positions that correspond to view positions of parity `p`.
    #[inline]
    fn base_parity(&self, p: Parity) -> Parity {
        if self.reversed && self.n.is_multiple_of(2) {
            p.flip()
        } else {
            p
        }
    }

    #[inline]
    fn to_base(&self, i: u64) -> u64 {
        if self.reversed {
            self.n + 1 - i
        } else {
            i
        }
    }

    pub fn char_at(&self, i: u64) -> Result<Symbol, ViewError> {
        if i == 0 || i > self.n {
            return Err(ViewError::OutOfRange {
                index: i,
                len: self.n,
            });
        }
        Ok(self.get(i))
    }

    /// [`StringView::char_at`] for indices already known to be in range.
    #[inline]
    pub fn get(&self, i: u64) -> Symbol {
        debug_assert!(i >= 1 && i <= self.n);
        let b = self.to_base(i);
        let c = match &*self.backend {
            Backend::Plain(s) => {
                self.note(1, 0);
                s[(b - 1) as usize]
            }
            Backend::Slp(g) => self.slp_char(g, b),
        };
        self.map[c.index()]
    }

    /// Positions `j <= i` of parity `p` holding `c`.
    pub fn count_prefix(&self, c: Symbol, p: Parity, i: u64) -> Result<u64, ViewError> {
        if i > self.n {
            return Err(ViewError::OutOfRange {
                index: i,
                len: self.n,
            });
        }
        let set = self.base_set(SymbolSet::only(c));
        let bp = self.base_parity(p);
        Ok(if self.reversed {
            self.base_rank(set, bp, self.n) - self.base_rank(set, bp, self.n - i)
        } else {
            self.base_rank(set, bp, i)
        })
    }

    pub fn first_in(&self, c: Symbol, p: Parity, r: Interval) -> Option<u64> {
        self.first_in_set(SymbolSet::only(c), p, r)
    }

    pub fn last_in(&self, c: Symbol, p: Parity, r: Interval) -> Option<u64> {
        self.last_in_set(SymbolSet::only(c), p, r)
    }

    /// Smallest index of parity `p` in `r` whose symbol is in `set`.
    /// The interval is clipped to `[1, n]`.
    pub fn first_in_set(&self, set: SymbolSet, p: Parity, r: Interval) -> Option<u64> {
        let r = r.intersect(&self.full());
        if r.is_empty() {
            return None;
        }
        let bset = self.base_set(set);
        let bp = self.base_parity(p);
        if self.reversed {
            let b = self.base_last(bset, bp, self.to_base(r.hi), self.to_base(r.lo))?;
            Some(self.to_base(b))
        } else {
            self.base_first(bset, bp, r.lo, r.hi)
        }
    }

    /// Largest index of parity `p` in `r` whose symbol is in `set`.
    pub fn last_in_set(&self, set: SymbolSet, p: Parity, r: Interval) -> Option<u64> {
        let r = r.intersect(&self.full());
        if r.is_empty() {
            return None;
        }
        let bset = self.base_set(set);
        let bp = self.base_parity(p);
        if self.reversed {
            let b = self.base_first(bset, bp, self.to_base(r.hi), self.to_base(r.lo))?;
            Some(self.to_base(b))
        } else {
            self.base_last(bset, bp, r.lo, r.hi)
        }
    }

    /// True iff every position of parity `p` in `r` holds `c`.
    pub fn is_uniform(&self, c: Symbol, p: Parity, r: Interval) -> bool {
        self.first_in_set(SymbolSet::except(c), p, r).is_none()
    }

    /// Run structure of the parity-`p` subsequence of `r` (binary views).
    pub fn shape(&self, p: Parity, r: Interval) -> RunShape {
        let r = r.intersect(&self.full());
        let Some((first_pos, _)) = r.parity_span(p) else {
            return RunShape::Empty;
        };
        let step = p.step();
        let first = self.get(first_pos);
        let Some(j) = self.first_in_set(SymbolSet::except(first), p, r) else {
            return RunShape::AllOf(first);
        };
        let boundary = j - step;
        let rest = Interval::new(j + step, r.hi);
        let Some(k) = self.first_in(first, p, rest) else {
            return RunShape::TwoRuns { first, boundary };
        };
        let back = k - step;
        let (zero_one, one_zero) = if first == Symbol::Zero {
            (boundary, back)
        } else {
            (back, boundary)
        };
        RunShape::Complex {
            first,
            zero_one,
            one_zero,
        }
    }

    /// Expands the viewed string. Intended for tests and small inputs.
    pub fn to_symbols(&self) -> Vec<Symbol> {
        (1..=self.n).map(|i| self.get(i)).collect()
    }

    pub fn to_text(&self) -> String {
        crate::alphabet::symbols_to_string(&self.to_symbols())
    }

    // Backend queries, in backend coordinates.

    fn base_rank(&self, set: SymbolSet, p: Parity, i: u64) -> u64 {
        match &*self.backend {
            Backend::Plain(s) => {
                let mut total = 0;
                let mut reads = 0;
                let mut j = p.at_or_after(1);
                while j <= i {
                    reads += 1;
                    if set.contains(s[(j - 1) as usize]) {
                        total += 1;
                    }
                    j += p.step();
                }
                self.note(reads, 0);
                total
            }
            Backend::Slp(g) => {
                self.note(1, 0);
                self.slp_rank(g, set, p, i)
            }
        }
    }

    fn base_first(&self, set: SymbolSet, p: Parity, lo: u64, hi: u64) -> Option<u64> {
        match &*self.backend {
            Backend::Plain(s) => {
                let mut j = p.at_or_after(lo);
                let mut reads = 0;
                let mut hit = None;
                while j <= hi {
                    reads += 1;
                    if set.contains(s[(j - 1) as usize]) {
                        hit = Some(j);
                        break;
                    }
                    j += p.step();
                }
                self.note(reads, 0);
                hit
            }
            Backend::Slp(g) => {
                self.note(1, 0);
                let k = self.slp_rank(g, set, p, lo - 1);
                let total = g.stats()[g.start()].count(set, p);
                if k == total {
                    return None;
                }
                let j = self.slp_select(g, set, p, k + 1);
                (j <= hi).then_some(j)
            }
        }
    }

    fn base_last(&self, set: SymbolSet, p: Parity, lo: u64, hi: u64) -> Option<u64> {
        match &*self.backend {
            Backend::Plain(s) => {
                let mut j = p.at_or_before(hi)?;
                let mut reads = 0;
                let mut hit = None;
                while j >= lo {
                    reads += 1;
                    if set.contains(s[(j - 1) as usize]) {
                        hit = Some(j);
                        break;
                    }
                    if j <= p.step() {
                        break;
                    }
                    j -= p.step();
                }
                self.note(reads, 0);
                hit
            }
            Backend::Slp(g) => {
                self.note(1, 0);
                let k = self.slp_rank(g, set, p, hi);
                if k == 0 {
                    return None;
                }
                let j = self.slp_select(g, set, p, k);
                (j >= lo).then_some(j)
            }
        }
    }

    fn slp_char(&self, g: &Slp, i: u64) -> Symbol {
        let (rules, stats) = (g.rules(), g.stats());
        let mut node = g.start();
        let mut pos = i;
        let mut visits = 1;
        loop {
            match rules[node] {
                Rule::Terminal(c) => {
                    self.note(1, visits);
                    return c;
                }
                Rule::Pair(l, r) => {
                    let ll = stats[l].len;
                    if pos <= ll {
                        node = l;
                    } else {
                        pos -= ll;
                        node = r;
                    }
                    visits += 1;
                }
            }
        }
    }

    /// Single descent counting matches among backend positions `1..=i`.
    fn slp_rank(&self, g: &Slp, set: SymbolSet, p: Parity, i: u64) -> u64 {
        let (rules, stats) = (g.rules(), g.stats());
        let mut node = g.start();
        let mut offset = 0;
        let mut acc = 0;
        let mut visits = 1;
        loop {
            let stat = &stats[node];
            if i - offset >= stat.len {
                acc += stat.count(set, local_parity(p, offset));
                break;
            }
            if i == offset {
                break;
            }
            match rules[node] {
                Rule::Terminal(_) => unreachable!("a terminal is either fully counted or skipped"),
                Rule::Pair(l, r) => {
                    let ll = stats[l].len;
                    if i - offset >= ll {
                        acc += stats[l].count(set, local_parity(p, offset));
                        offset += ll;
                        node = r;
                    } else {
                        node = l;
                    }
                    visits += 1;
                }
            }
        }
        self.note(0, visits);
        acc
    }

    /// Backend position of the `k`-th match (1-based); `k` must not exceed the total.
    fn slp_select(&self, g: &Slp, set: SymbolSet, p: Parity, mut k: u64) -> u64 {
        let (rules, stats) = (g.rules(), g.stats());
        let mut node = g.start();
        let mut offset = 0;
        let mut visits = 1;
        loop {
            match rules[node] {
                Rule::Terminal(_) => {
                    self.note(0, visits);
                    return offset + 1;
                }
                Rule::Pair(l, r) => {
                    let cl = stats[l].count(set, local_parity(p, offset));
                    if k <= cl {
                        node = l;
                    } else {
                        k -= cl;
                        offset += stats[l].len;
                        node = r;
                    }
                    visits += 1;
                }
            }
        }
    }
}
