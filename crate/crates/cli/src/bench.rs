use std::time::Instant;

use cadence_core::alphabet::Symbol;
use cadence_core::cadence::{detect_3cadence_with, Mode};
use cadence_core::gadgets::gadget_cadence_char1;
use cadence_core::slp::Slp;
use cadence_core::view::StringView;
use clap::ValueEnum;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    /// Uniformly random plain strings.
    Random,
    /// `0^n` as a grammar.
    Allzero,
    /// Binary reduction instances without a common 1-position.
    Gadget,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sizes(pub Vec<u64>);

fn parse_size(s: &str) -> Result<u64, String> {
    let s = s.trim();
    let (digits, scale) = match s.chars().last() {
        Some('k' | 'K') => (&s[..s.len() - 1], 1_000),
        Some('M') => (&s[..s.len() - 1], 1_000_000),
        Some('G') => (&s[..s.len() - 1], 1_000_000_000),
        _ => (s, 1),
    };
    let v: u64 = digits.parse().map_err(|e| format!("size {s:?}: {e}"))?;
    let v = v
        .checked_mul(scale)
        .ok_or_else(|| format!("size {s:?} overflows"))?;
    if v == 0 {
        return Err("sizes must be positive".into());
    }
    Ok(v)
}

/// `"1k,5k"` lists sizes; `"1k..1M"` doubles from the first bound while not
/// exceeding the second.
pub fn parse_sizes(s: &str) -> Result<Sizes, String> {
    let mut out = Vec::new();
    for part in s.split(',') {
        if let Some((a, b)) = part.split_once("..") {
            let (mut x, hi) = (parse_size(a)?, parse_size(b)?);
            if x > hi {
                return Err(format!("empty range {part:?}"));
            }
            while x <= hi {
                out.push(x);
                x = match x.checked_mul(2) {
                    Some(y) => y,
                    None => break,
                };
            }
        } else {
            out.push(parse_size(part)?);
        }
    }
    Ok(Sizes(out))
}

/// Random plain strings above this length would not fit comfortably in memory.
const MAX_PLAIN: u64 = 1 << 28;

fn instance(family: Family, n: u64, rng: &mut ChaCha8Rng) -> Result<StringView, String> {
    match family {
        Family::Random => {
            if n > MAX_PLAIN {
                return Err(format!("random family supports n <= {MAX_PLAIN}"));
            }
            let s = (0..n)
                .map(|_| if rng.gen_bool(0.5) { Symbol::One } else { Symbol::Zero })
                .collect();
            Ok(StringView::plain(s))
        }
        Family::Allzero => {
            let g = Slp::from_symbols(&[Symbol::Zero])
                .and_then(|z| z.power(n))
                .map_err(|e| e.to_string())?;
            Ok(StringView::slp(g))
        }
        Family::Gadget => {
            // The k = 3 instance has length 3(6m + 1).
            let m = (n / 3).saturating_sub(1) / 6;
            let m = m.max(2);
            let build = |first: bool| -> Result<Slp, String> {
                let zeros = Slp::from_symbols(&[Symbol::Zero])
                    .and_then(|z| z.power(m - 1))
                    .map_err(|e| e.to_string())?;
                let one = Slp::from_symbols(&[Symbol::One]).map_err(|e| e.to_string())?;
                let parts = if first { [&zeros, &one] } else { [&one, &zeros] };
                Slp::concat_all(&parts).map_err(|e| e.to_string())
            };
            let g = gadget_cadence_char1(&build(true)?, &build(false)?, 3).map_err(|e| e.to_string())?;
            Ok(StringView::slp(g.slp))
        }
    }
}

pub fn run(family: Family, sizes: &Sizes, seed: u64) -> Result<u8, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    println!("n,char_accesses,iterations,elapsed_ms");
    for &n in &sizes.0 {
        let v = instance(family, n, &mut rng)?;
        v.reset_stats();
        let start = Instant::now();
        let (_, rep) = detect_3cadence_with(&v, Mode::for_view(&v)).map_err(|e| e.to_string())?;
        let elapsed = start.elapsed().as_secs_f64() * 1e3;
        println!(
            "{},{},{},{:.3}",
            v.len(),
            v.stats().char_accesses,
            rep.total_steps(),
            elapsed
        );
    }
    Ok(0)
}
