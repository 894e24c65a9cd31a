mod common;

use cadence_core::alphabet::Symbol;
use cadence_core::lr::{detect_lr, detect_lr_disjoint, lr2_witness, DetectError};
use cadence_core::oracle::enum_lr;
use cadence_core::slp::Slp;
use cadence_core::view::{Interval, StringView};
use common::*;
use proptest::prelude::*;
use rand::Rng;

fn agrees(s: &[Symbol], l: Interval, r: Interval) {
    let v = StringView::plain(s.to_vec());
    let got = detect_lr(&v, l, r).unwrap();
    let want = enum_lr(s, l, r, 3, None).unwrap();
    match got {
        Some(w) => {
            assert!(w.verify(&v), "{w:?}");
            assert!(l.contains(w.i) && r.contains(w.last()), "{w:?} outside {l} {r}");
        }
        None => assert!(want.is_empty(), "missed {:?} for {l} {r}", want.witnesses[0]),
    }
    assert_eq!(got.is_some(), !want.is_empty());
}

#[test]
fn exhaustive_disjoint_small() {
    for n in 4..=10u32 {
        for x in 0..1u64 << n {
            let s = bits(x, n);
            let n = n as u64;
            for lh in 1..n {
                for rl in lh + 1..=n {
                    agrees(&s, Interval::new(1, lh), Interval::new(rl, n));
                }
            }
        }
    }
}

#[test]
fn exhaustive_overlapping_small() {
    let n = 9u32;
    for x in 0..1u64 << n {
        let s = bits(x, n);
        let n = n as u64;
        for ll in 1..=n {
            for lh in ll..=n {
                for rl in ll..=n {
                    for rh in lh.max(rl)..=n {
                        agrees(&s, Interval::new(ll, lh), Interval::new(rl, rh));
                    }
                }
            }
        }
    }
}

#[test]
fn random_intervals_against_oracle() {
    let mut r = rng(11);
    for _ in 0..3000 {
        let n = r.gen_range(4..300usize);
        let s = mixed_binary(&mut r, n);
        let n = n as u64;
        let ll = r.gen_range(1..=n);
        let lh = r.gen_range(ll..=n);
        let rl = r.gen_range(ll..=n);
        let rh = r.gen_range(lh.max(rl)..=n);
        agrees(&s, Interval::new(ll, lh), Interval::new(rl, rh));
    }
}

/// Strings with few 3-progressions inside `L` and `R` make the search run
/// longest: take a thinned prefix and suffix around a biased middle.
#[test]
fn sparse_sides_against_oracle() {
    let mut r = rng(12);
    for _ in 0..400 {
        let a = r.gen_range(8..120usize);
        let b = r.gen_range(1..200usize);
        let mut s = random_binary(&mut r, a, 0.5);
        thin_cadences(&mut r, &mut s, 60);
        let ones = if r.gen_bool(0.5) { 0.05 } else { 0.95 };
        s.extend(random_binary(&mut r, b, ones));
        let mut tail = random_binary(&mut r, a, 0.5);
        thin_cadences(&mut r, &mut tail, 60);
        s.extend(tail);
        let n = s.len() as u64;
        agrees(&s, Interval::new(1, a as u64), Interval::new(n - a as u64 + 1, n));
    }
}

#[test]
fn compressed_view_matches_plain() {
    let mut r = rng(13);
    for _ in 0..200 {
        let g = random_slp(&mut r, 40, 5000);
        let n = g.len();
        if n < 4 {
            continue;
        }
        let lh = r.gen_range(1..n);
        let rl = r.gen_range(lh + 1..=n);
        let (l, rr) = (Interval::new(1, lh), Interval::new(rl, n));
        let c = detect_lr_disjoint(&StringView::slp(g.clone()), l, rr).unwrap();
        let s = g.expand_symbols(u64::MAX).unwrap();
        let p = detect_lr_disjoint(&StringView::plain(s.clone()), l, rr).unwrap();
        assert_eq!(c.is_some(), p.is_some());
        if let Some(w) = c {
            assert!(w.verify(&StringView::plain(s)));
        }
    }
}

/// Probe count stays linear in `n` on inputs where no witness exists near
/// the ends of the intervals.
#[test]
fn accesses_linear_on_block_strings() {
    for e in 6..=14u32 {
        let n = 1u64 << e;
        let half = n / 2;
        let g = run(Symbol::Zero, half - 1)
            .concat(&Slp::literal("1").unwrap())
            .unwrap()
            .concat(&run(Symbol::One, half))
            .unwrap();
        let v = StringView::plain(g.expand_symbols(u64::MAX).unwrap());
        v.reset_stats();
        let _ = detect_lr_disjoint(&v, Interval::new(1, half), Interval::new(half + 1, n)).unwrap();
        assert!(v.stats().char_accesses <= 64 * n, "n = {n}: {:?}", v.stats());
    }
}

#[test]
fn interval_errors() {
    let v = StringView::from_str_plain("0101010101").unwrap();
    assert!(matches!(
        detect_lr(&v, Interval::new(3, 5), Interval::new(1, 8)),
        Err(DetectError::Interval(_))
    ));
    assert!(matches!(
        detect_lr(&v, Interval::new(1, 9), Interval::new(2, 8)),
        Err(DetectError::Interval(_))
    ));
    assert!(detect_lr(&v, Interval::new(1, 3), Interval::new(5, 11)).is_err());
    assert!(matches!(
        detect_lr_disjoint(&v, Interval::new(1, 5), Interval::new(5, 10)),
        Err(DetectError::Interval(_))
    ));
    assert!(detect_lr(&v, Interval::EMPTY, Interval::new(1, 10)).unwrap().is_none());
}

#[test]
fn ternary_input_rejected() {
    let v = StringView::from_str_plain("0120").unwrap();
    assert!(detect_lr(&v, Interval::new(1, 1), Interval::new(3, 4)).is_err());
}

#[test]
fn lr2_endpoints() {
    let v = StringView::from_str_plain("0001000100").unwrap();
    let w = lr2_witness(&v, 2, 10).unwrap();
    assert!(w.verify(&v));
    assert!(w.i >= 2 && w.last() <= 10);
    assert!(lr2_witness(&v, 2, 5).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn reversal_symmetry(x in proptest::collection::vec(0u8..2, 4..80), cut in 0.0f64..1.0) {
        let s: Vec<Symbol> = x.iter().map(|&b| Symbol::from_index(b as usize).unwrap()).collect();
        let n = s.len() as u64;
        let lh = ((n - 1) as f64 * cut) as u64 + 1;
        let lh = lh.min(n - 1);
        let (l, r) = (Interval::new(1, lh), Interval::new(lh + 1, n));
        let fwd = detect_lr_disjoint(&StringView::plain(s.clone()), l, r).unwrap();
        let mut rs = s.clone();
        rs.reverse();
        let back = detect_lr_disjoint(
            &StringView::plain(rs),
            Interval::new(1, n - lh),
            Interval::new(n - lh + 1, n),
        ).unwrap();
        prop_assert_eq!(fwd.is_some(), back.is_some());
    }

    #[test]
    fn complement_symmetry(x in proptest::collection::vec(0u8..2, 4..80), lh in 1u64..40, rl in 2u64..80) {
        let s: Vec<Symbol> = x.iter().map(|&b| Symbol::from_index(b as usize).unwrap()).collect();
        let n = s.len() as u64;
        let lh = lh.min(n - 1);
        let rl = rl.clamp(lh + 1, n);
        let (l, r) = (Interval::new(1, lh), Interval::new(rl, n));
        let a = detect_lr_disjoint(&StringView::plain(s.clone()), l, r).unwrap();
        let c: Vec<Symbol> = s.iter().map(|c| c.complement()).collect();
        let b = detect_lr_disjoint(&StringView::plain(c), l, r).unwrap();
        prop_assert_eq!(a.is_some(), b.is_some());
    }

    #[test]
    fn witnesses_are_sound(x in proptest::collection::vec(0u8..2, 4..120), a in 1u64..60, b in 1u64..60) {
        let s: Vec<Symbol> = x.iter().map(|&b| Symbol::from_index(b as usize).unwrap()).collect();
        let n = s.len() as u64;
        let l = Interval::new(a.min(n), b.max(a).min(n));
        let r = Interval::new(l.lo.max(b.min(n)), n);
        let v = StringView::plain(s);
        if let Some(w) = detect_lr(&v, l, r).unwrap() {
            prop_assert!(w.verify(&v));
            prop_assert!(l.contains(w.i) && r.contains(w.last()));
        }
    }
}
