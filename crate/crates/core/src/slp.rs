//! Straight-line programs in Chomsky normal form.
//!
//! An [`Slp`] is an ordered list of rules. Every rule is either a terminal
//! symbol or a pair of strictly earlier rules, and the last rule is the start
//! symbol. Construction validates the grammar and precomputes a [`RuleStat`]
//! per rule: expansion length, depth and per-symbol counts split by the
//! parity of the 1-based offset inside the rule's expansion. Those counts
//! compose across a pair (the right child's parities flip when the left
//! child has odd length), which is what lets the string view answer
//! parity-filtered rank/select queries by a single root-to-leaf descent.
//!
//! Constructors never share rules between grammars: operands are copied and
//! renumbered so that every `Slp` stays self-contained.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::alphabet::{Parity, Symbol, SymbolSet};

/// Largest expansion length accepted anywhere in the crate.
pub const MAX_LEN: u64 = i64::MAX as u64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    Terminal(Symbol),
    /// Children are 0-based rule indices, both smaller than the rule's own index.
    Pair(usize, usize),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SlpError {
    #[error("grammar has no rules")]
    EmptyGrammar,
    #[error("rule {rule} references rule {child}, which is not defined before it")]
    ForwardReference { rule: usize, child: usize },
    #[error("expansion length exceeds 2^63-1")]
    LengthOverflow,
    #[error("empty input string")]
    EmptyInput,
    #[error("invalid symbol {0:?}")]
    InvalidSymbol(char),
    #[error("expansion has {len} characters, more than the limit of {max}")]
    TooLong { len: u64, max: u64 },
    #[error("repetition count must be at least 1")]
    ZeroPower,
    #[error("SLPv1 line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// Precomputed facts about one rule's expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RuleStat {
    pub len: u64,
    /// Longest root-to-leaf path in nodes; a terminal has depth 1.
    pub depth: u32,
    /// `counts[c][0]` counts symbol `c` at odd local offsets, `counts[c][1]` at even ones.
    pub counts: [[u64; 2]; 3],
}

impl RuleStat {
    fn terminal(c: Symbol) -> Self {
        let mut counts = [[0; 2]; 3];
        counts[c.index()][0] = 1;
        RuleStat {
            len: 1,
            depth: 1,
            counts,
        }
    }

    fn pair(l: &RuleStat, r: &RuleStat) -> Option<Self> {
        let len = l.len.checked_add(r.len).filter(|&n| n <= MAX_LEN)?;
        let shift = (l.len % 2) as usize;
        let mut counts = [[0; 2]; 3];
        for (c, row) in counts.iter_mut().enumerate() {
            for (p, slot) in row.iter_mut().enumerate() {
                *slot = l.counts[c][p] + r.counts[c][p ^ shift];
            }
        }
        Some(RuleStat {
            len,
            depth: l.depth.max(r.depth) + 1,
            counts,
        })
    }

    /// Occurrences of symbols in `set` at local offsets of parity `p`.
    #[inline]
    pub fn count(&self, set: SymbolSet, p: Parity) -> u64 {
        let mut total = 0;
        for c in set.iter() {
            let row = &self.counts[c.index()];
            total += match p {
                Parity::Odd => row[0],
                Parity::Even => row[1],
                Parity::Both => row[0] + row[1],
            };
        }
        total
    }
}

/// Per-rule statistics, indexed like the rule list.
pub type RuleStats = Vec<RuleStat>;

/// Checks the CNF ordering invariant and computes the statistics of every rule.
pub fn validate(rules: &[Rule]) -> Result<RuleStats, SlpError> {
    if rules.is_empty() {
        return Err(SlpError::EmptyGrammar);
    }
    let mut stats: RuleStats = Vec::with_capacity(rules.len());
    for (i, rule) in rules.iter().enumerate() {
        let stat = match *rule {
            Rule::Terminal(c) => RuleStat::terminal(c),
            Rule::Pair(l, r) => {
                for child in [l, r] {
                    if child >= i {
                        return Err(SlpError::ForwardReference { rule: i, child });
                    }
                }
                RuleStat::pair(&stats[l], &stats[r]).ok_or(SlpError::LengthOverflow)?
            }
        };
        stats.push(stat);
    }
    Ok(stats)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Slp {
    rules: Vec<Rule>,
    stats: RuleStats,
}

impl Slp {
    pub fn from_rules(rules: Vec<Rule>) -> Result<Self, SlpError> {
        let stats = validate(&rules)?;
        Ok(Slp { rules, stats })
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    pub fn stats(&self) -> &[RuleStat] {
        &self.stats
    }

    pub fn rule_count(&self) -> usize {
        self.rules.len()
    }

    /// Index of the start rule (always the last one).
    pub fn start(&self) -> usize {
        self.rules.len() - 1
    }

    /// Length of the expansion of the start rule.
    pub fn len(&self) -> u64 {
        self.stats[self.start()].len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn depth(&self) -> u32 {
        self.stats[self.start()].depth
    }

    /// 3 if any rule derives the symbol `2`, else 2.
    pub fn alphabet_size(&self) -> u8 {
        let used = self.symbols_used();
        if used.contains(Symbol::Two) {
            3
        } else {
            2
        }
    }

    /// Symbols occurring in the expansion of the start rule.
    pub fn symbols_used(&self) -> SymbolSet {
        let root = &self.stats[self.start()];
        let mut set = SymbolSet::EMPTY;
        for c in Symbol::ALL {
            if root.count(SymbolSet::only(c), Parity::Both) > 0 {
                set.insert(c);
            }
        }
        set
    }

    pub fn literal(s: &str) -> Result<Self, SlpError> {
        let syms: Vec<Symbol> = s
            .chars()
            .map(|c| Symbol::from_char(c).ok_or(SlpError::InvalidSymbol(c)))
            .collect::<Result<_, _>>()?;
        Self::from_symbols(&syms)
    }

    /// Balanced grammar for `s`: one terminal per distinct symbol plus
    /// `|s| - 1` pair rules.
    pub fn from_symbols(s: &[Symbol]) -> Result<Self, SlpError> {
        if s.is_empty() {
            return Err(SlpError::EmptyInput);
        }
        let mut rules = Vec::with_capacity(2 * s.len());
        let mut terminal = [usize::MAX; 3];
        for &c in s {
            if terminal[c.index()] == usize::MAX {
                terminal[c.index()] = rules.len();
                rules.push(Rule::Terminal(c));
            }
        }
        // Post-order build keeps children before parents; the root comes last.
        fn build(s: &[Symbol], terminal: &[usize; 3], rules: &mut Vec<Rule>) -> usize {
            if s.len() == 1 {
                return terminal[s[0].index()];
            }
            let mid = s.len() / 2;
            let l = build(&s[..mid], terminal, rules);
            let r = build(&s[mid..], terminal, rules);
            rules.push(Rule::Pair(l, r));
            rules.len() - 1
        }
        let root = build(s, &terminal, &mut rules);
        debug_assert_eq!(root, rules.len() - 1);
        Self::from_rules(rules)
    }

    /// Appends `other`'s rules to a copy of `self`'s rules, reusing any rule
    /// that already occurs with the same children. Returns the rules and the
    /// index of `other`'s start.
    fn with_appended(&self, other: &Slp) -> (Vec<Rule>, usize) {
        let mut rules = Vec::with_capacity(self.rules.len() + other.rules.len() + 1);
        rules.extend_from_slice(&self.rules);
        let mut known: HashMap<Rule, usize> = HashMap::with_capacity(rules.len());
        for (i, r) in rules.iter().enumerate() {
            known.entry(*r).or_insert(i);
        }
        let mut map = Vec::with_capacity(other.rules.len());
        for r in &other.rules {
            let r = match *r {
                Rule::Terminal(c) => Rule::Terminal(c),
                Rule::Pair(l, r) => Rule::Pair(map[l], map[r]),
            };
            let idx = *known.entry(r).or_insert_with(|| {
                rules.push(r);
                rules.len() - 1
            });
            map.push(idx);
        }
        (rules, map[other.start()])
    }

    pub fn concat(&self, other: &Slp) -> Result<Self, SlpError> {
        self.len()
            .checked_add(other.len())
            .filter(|&n| n <= MAX_LEN)
            .ok_or(SlpError::LengthOverflow)?;
        let (mut rules, other_start) = self.with_appended(other);
        rules.push(Rule::Pair(self.start(), other_start));
        Self::from_rules(rules)
    }

    /// Left-to-right concatenation of all parts.
    pub fn concat_all(parts: &[&Slp]) -> Result<Self, SlpError> {
        let (first, rest) = parts.split_first().ok_or(SlpError::EmptyInput)?;
        let mut acc = (*first).clone();
        for part in rest {
            acc = acc.concat(part)?;
        }
        Ok(acc)
    }

    /// The expansion repeated `m` times, by repeated squaring.
    pub fn power(&self, m: u64) -> Result<Self, SlpError> {
        if m == 0 {
            return Err(SlpError::ZeroPower);
        }
        self.len()
            .checked_mul(m)
            .filter(|&n| n <= MAX_LEN)
            .ok_or(SlpError::LengthOverflow)?;
        if m == 1 {
            return Ok(self.clone());
        }
        let mut rules = self.rules.clone();
        let top_bit = 63 - m.leading_zeros();
        // squares[j] derives the expansion repeated 2^j times
        let mut squares = vec![self.start()];
        for _ in 0..top_bit {
            let last = *squares.last().unwrap();
            rules.push(Rule::Pair(last, last));
            squares.push(rules.len() - 1);
        }
        let mut acc = squares[top_bit as usize];
        for j in (0..top_bit).rev() {
            if m >> j & 1 == 1 {
                rules.push(Rule::Pair(acc, squares[j as usize]));
                acc = rules.len() - 1;
            }
        }
        debug_assert_eq!(acc, rules.len() - 1);
        Self::from_rules(rules)
    }

    /// Mirror image of the expansion; swaps the children of every pair.
    pub fn reverse(&self) -> Self {
        let rules = self
            .rules
            .iter()
            .map(|r| match *r {
                Rule::Pair(l, r) => Rule::Pair(r, l),
                t => t,
            })
            .collect();
        Self::from_rules(rules).expect("reversal preserves validity")
    }

    /// Replaces every character `c` by `cc`.
    pub fn double_chars(&self) -> Result<Self, SlpError> {
        self.len()
            .checked_mul(2)
            .filter(|&n| n <= MAX_LEN)
            .ok_or(SlpError::LengthOverflow)?;
        let used = self
            .rules
            .iter()
            .filter_map(|r| match r {
                Rule::Terminal(c) => Some(*c),
                _ => None,
            })
            .fold(SymbolSet::EMPTY, |mut s, c| {
                s.insert(c);
                s
            });
        let mut rules = Vec::with_capacity(self.rules.len() + 6);
        let mut doubled = [usize::MAX; 3];
        // A terminal start symbol must have its doubled rule emitted last.
        let mut order: Vec<Symbol> = used.iter().collect();
        if let Rule::Terminal(c) = self.rules[self.start()] {
            order.retain(|&x| x != c);
            order.push(c);
        }
        for c in order {
            rules.push(Rule::Terminal(c));
            rules.push(Rule::Pair(rules.len() - 1, rules.len() - 1));
            doubled[c.index()] = rules.len() - 1;
        }
        // Old rule index -> new rule index.
        let mut remap = Vec::with_capacity(self.rules.len());
        for rule in &self.rules {
            match *rule {
                Rule::Terminal(c) => remap.push(doubled[c.index()]),
                Rule::Pair(l, r) => {
                    rules.push(Rule::Pair(remap[l], remap[r]));
                    remap.push(rules.len() - 1);
                }
            }
        }
        Self::from_rules(rules)
    }

    /// Rewrites every terminal `from` to `to`.
    pub fn substitute(&self, from: Symbol, to: Symbol) -> Self {
        let rules = self
            .rules
            .iter()
            .map(|r| match *r {
                Rule::Terminal(c) if c == from => Rule::Terminal(to),
                other => other,
            })
            .collect();
        Self::from_rules(rules).expect("substitution preserves validity")
    }

    /// Full expansion, provided it has at most `max_len` characters.
    pub fn decompress(&self, max_len: u64) -> Result<String, SlpError> {
        Ok(crate::alphabet::symbols_to_string(
            &self.expand_symbols(max_len)?,
        ))
    }

    pub fn expand_symbols(&self, max_len: u64) -> Result<Vec<Symbol>, SlpError> {
        let len = self.len();
        if len > max_len {
            return Err(SlpError::TooLong { len, max: max_len });
        }
        let mut out = Vec::with_capacity(len as usize);
        let mut stack = vec![self.start()];
        while let Some(i) = stack.pop() {
            match self.rules[i] {
                Rule::Terminal(c) => out.push(c),
                Rule::Pair(l, r) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        Ok(out)
    }

    /// Serializes to the `SLPv1` text format (1-based rule numbers, LF endings).
    pub fn to_slpv1(&self) -> String {
        let mut out = String::with_capacity(16 + 12 * self.rules.len());
        out.push_str("SLPv1\n");
        out.push_str(&self.rules.len().to_string());
        out.push('\n');
        for rule in &self.rules {
            match *rule {
                Rule::Terminal(c) => {
                    out.push_str("T ");
                    out.push(c.as_char());
                }
                Rule::Pair(l, r) => {
                    out.push_str(&format!("N {} {}", l + 1, r + 1));
                }
            }
            out.push('\n');
        }
        out
    }

    /// Parses the `SLPv1` format. A single trailing LF after the last rule is
    /// accepted; anything else that deviates from the format is rejected.
    pub fn parse_slpv1(text: &str) -> Result<Self, SlpError> {
        let err = |line: usize, msg: &str| SlpError::Parse {
            line,
            msg: msg.to_string(),
        };
        let body = text.strip_suffix('\n').unwrap_or(text);
        let mut lines = body.split('\n');
        match lines.next() {
            Some("SLPv1") => {}
            _ => return Err(err(1, "expected header `SLPv1`")),
        }
        let count = lines
            .next()
            .ok_or_else(|| err(2, "missing rule count"))
            .and_then(|l| parse_number(l).ok_or_else(|| err(2, "malformed rule count")))?;
        if count == 0 {
            return Err(SlpError::EmptyGrammar);
        }
        let mut rules = Vec::with_capacity(count.min(1 << 20));
        for (k, line) in lines.enumerate() {
            let lineno = k + 3;
            if rules.len() == count {
                return Err(err(lineno, "more rules than declared"));
            }
            let rule_no = rules.len() + 1;
            let mut parts = line.split(' ');
            let rule = match (parts.next(), parts.next(), parts.next(), parts.next()) {
                (Some("T"), Some(c), None, None) => {
                    let mut chars = c.chars();
                    match (chars.next().and_then(Symbol::from_char), chars.next()) {
                        (Some(s), None) => Rule::Terminal(s),
                        _ => return Err(err(lineno, "terminal must be one of 0, 1, 2")),
                    }
                }
                (Some("N"), Some(j), Some(k), None) => {
                    let j = parse_number(j).ok_or_else(|| err(lineno, "malformed child index"))?;
                    let k = parse_number(k).ok_or_else(|| err(lineno, "malformed child index"))?;
                    for child in [j, k] {
                        if child == 0 || child >= rule_no {
                            return Err(SlpError::ForwardReference {
                                rule: rule_no - 1,
                                child: child.wrapping_sub(1),
                            });
                        }
                    }
                    Rule::Pair(j - 1, k - 1)
                }
                _ => return Err(err(lineno, "expected `T <c>` or `N <j> <k>`")),
            };
            rules.push(rule);
        }
        if rules.len() != count {
            return Err(err(rules.len() + 3, "fewer rules than declared"));
        }
        Self::from_rules(rules)
    }
}

/// Plain decimal without sign, leading zeros or surrounding whitespace.
fn parse_number(s: &str) -> Option<usize> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) || (s.len() > 1 && s.starts_with('0'))
    {
        return None;
    }
    s.parse().ok()
}

impl fmt::Display for Slp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_slpv1())
    }
}

impl FromStr for Slp {
    type Err = SlpError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Slp::parse_slpv1(s)
    }
}
