#![allow(dead_code)]

use cadence_core::alphabet::Symbol;
use cadence_core::cadence::detect_3cadence;
use cadence_core::view::StringView;
use cadence_core::slp::{Rule, Slp};
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn bits(x: u64, n: u32) -> Vec<Symbol> {
    (0..n)
        .map(|t| if x >> t & 1 == 1 { Symbol::One } else { Symbol::Zero })
        .collect()
}

pub fn text(s: &str) -> Vec<Symbol> {
    cadence_core::alphabet::parse_symbols(s).unwrap()
}

/// Random binary string where each position is `1` with probability `ones`.
pub fn random_binary(r: &mut ChaCha8Rng, n: usize, ones: f64) -> Vec<Symbol> {
    (0..n)
        .map(|_| if r.gen_bool(ones) { Symbol::One } else { Symbol::Zero })
        .collect()
}

/// Flips positions of remaining cadences for a few rounds, pushing a
/// random string towards having few or no 3-cadences.
pub fn thin_cadences(r: &mut ChaCha8Rng, s: &mut [Symbol], rounds: usize) {
    for _ in 0..rounds {
        let v = StringView::plain(s.to_vec());
        let Some(w) = detect_3cadence(&v).unwrap() else {
            return;
        };
        let t = r.gen_range(0..3u64);
        let idx = (w.i + t * w.d - 1) as usize;
        s[idx] = s[idx].complement();
    }
}

/// A mix of uniform, biased and cadence-thinned strings of length `n`.
pub fn mixed_binary(r: &mut ChaCha8Rng, n: usize) -> Vec<Symbol> {
    match r.gen_range(0..4) {
        0 => random_binary(r, n, 0.5),
        1 => {
            let p = if r.gen_bool(0.5) { 0.1 } else { 0.9 };
            random_binary(r, n, p)
        }
        _ => {
            let mut s = random_binary(r, n, 0.5);
            thin_cadences(r, &mut s, 40);
            s
        }
    }
}

/// Random binary grammar with at most `max_rules` rules and expansion at
/// most `max_len`. Later rules tend to combine recent large ones.
pub fn random_slp(r: &mut ChaCha8Rng, max_rules: usize, max_len: u64) -> Slp {
    let mut rules = vec![Rule::Terminal(Symbol::Zero), Rule::Terminal(Symbol::One)];
    let mut lens = vec![1u64, 1];
    let target = r.gen_range(3..=max_rules);
    let mut attempts = 0;
    while rules.len() < target && attempts < 1000 {
        attempts += 1;
        let k = rules.len();
        let pick = |r: &mut ChaCha8Rng| {
            if r.gen_bool(0.7) {
                r.gen_range(k.saturating_sub(3)..k)
            } else {
                r.gen_range(0..k)
            }
        };
        let (a, b) = (pick(r), pick(r));
        if lens[a] + lens[b] <= max_len {
            lens.push(lens[a] + lens[b]);
            rules.push(Rule::Pair(a, b));
        }
    }
    Slp::from_rules(rules).unwrap()
}

pub fn run(c: Symbol, m: u64) -> Slp {
    Slp::from_symbols(&[c]).unwrap().power(m).unwrap()
}

/// `0^a 1 0^b 1 0^c`.
pub fn two_ones(a: u64, b: u64, c: u64) -> Slp {
    let one = Slp::from_symbols(&[Symbol::One]).unwrap();
    let mut parts = Vec::new();
    let za = (a > 0).then(|| run(Symbol::Zero, a));
    let zb = (b > 0).then(|| run(Symbol::Zero, b));
    let zc = (c > 0).then(|| run(Symbol::Zero, c));
    if let Some(x) = &za {
        parts.push(x);
    }
    parts.push(&one);
    if let Some(x) = &zb {
        parts.push(x);
    }
    parts.push(&one);
    if let Some(x) = &zc {
        parts.push(x);
    }
    Slp::concat_all(&parts).unwrap()
}

/// `w^e`.
pub fn period_power(w: &[Symbol], e: u64) -> Slp {
    Slp::from_symbols(w).unwrap().power(e).unwrap()
}

fn fill_thirds(n: usize) -> Vec<char> {
    vec!['1'; n]
}

/// Builds a length-48 string from the even positions of the first third,
/// all of the middle third and the even positions of the last third; odd
/// positions of the outer thirds hold `1`.
fn trace_input(first_even: &str, middle: &str, last_even: &str) -> String {
    let mut s = fill_thirds(48);
    for (t, c) in first_even.chars().enumerate() {
        s[2 * t + 1] = c;
    }
    for (t, c) in middle.chars().enumerate() {
        s[16 + t] = c;
    }
    for (t, c) in last_even.chars().enumerate() {
        s[33 + 2 * t] = c;
    }
    s.into_iter().collect()
}

pub fn lr_trace_input() -> String {
    trace_input("00000110", "1111110100111000", "01111101")
}

pub fn cadence_trace_input() -> String {
    trace_input("00000110", "1110110100111000", "01101101")
}
