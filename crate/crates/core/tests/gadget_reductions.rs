mod common;

use cadence_core::alphabet::Symbol;
use cadence_core::cadence::detect_3cadence;
use cadence_core::gadgets::*;
use cadence_core::lr::detect_lr;
use cadence_core::oracle::{common_one_index, enum_cadences, enum_lr};
use cadence_core::slp::Slp;
use cadence_core::view::{Interval, StringView};
use common::*;
use rand::Rng;

fn pattern(r: &mut rand_chacha::ChaCha8Rng, max: usize) -> Vec<Symbol> {
    let n = r.gen_range(1..=max);
    let ones = r.gen_range(0.05..0.6);
    random_binary(r, n, ones)
}

#[test]
fn char1_gadget_against_oracle() {
    let mut r = rng(41);
    for _ in 0..150 {
        let (p, q) = (pattern(&mut r, 10), pattern(&mut r, 10));
        let k = r.gen_range(3..=5);
        let g = gadget_cadence_char1(&Slp::from_symbols(&p).unwrap(), &Slp::from_symbols(&q).unwrap(), k).unwrap();
        assert_eq!(g.len(), g.expected_len());
        let s = g.slp.expand_symbols(u64::MAX).unwrap();
        let found = !enum_cadences(&s, k, Some(Symbol::One)).unwrap().is_empty();
        assert_eq!(found, common_one_index(&p, &q).is_some(), "{p:?} {q:?} k = {k}");
    }
}

#[test]
fn ternary_gadget_against_oracle() {
    let mut r = rng(42);
    for _ in 0..150 {
        let (p, q) = (pattern(&mut r, 12), pattern(&mut r, 12));
        let g = gadget_cadence_ternary3(&Slp::from_symbols(&p).unwrap(), &Slp::from_symbols(&q).unwrap()).unwrap();
        assert_eq!(g.len(), g.expected_len());
        let s = g.slp.expand_symbols(u64::MAX).unwrap();
        let found = !enum_cadences(&s, 3, None).unwrap().is_empty();
        assert_eq!(found, common_one_index(&p, &q).is_some());
    }
}

#[test]
fn lr3_gadget_against_oracle_and_detector() {
    let mut r = rng(43);
    for _ in 0..300 {
        let (p, q) = (pattern(&mut r, 30), pattern(&mut r, 30));
        let g = gadget_lr3(&Slp::from_symbols(&p).unwrap(), &Slp::from_symbols(&q).unwrap()).unwrap();
        assert_eq!(g.len(), g.expected_len());
        let (l, rr) = (g.l.unwrap(), g.r.unwrap());
        let s = g.slp.expand_symbols(u64::MAX).unwrap();
        let want = common_one_index(&p, &q).is_some();
        assert_eq!(!enum_lr(&s, l, rr, 3, None).unwrap().is_empty(), want);
        let w = detect_lr(&StringView::slp(g.slp.clone()), l, rr).unwrap();
        assert_eq!(w.is_some(), want);
    }
}

/// Gadgets built from huge run-length patterns stay small as grammars and
/// the compressed detector agrees with the pattern test.
#[test]
fn gadgets_on_compressed_patterns() {
    for (a, b) in [(1000u64, 1000u64), (1 << 20, 77), (12345, 54321), (1 << 30, 1 << 30)] {
        let p = run(Symbol::Zero, a).concat(&Slp::literal("1").unwrap()).unwrap();
        let q = run(Symbol::Zero, b).concat(&Slp::literal("1").unwrap()).unwrap();
        let g = gadget_lr3(&p, &q).unwrap();
        assert!(g.slp.rule_count() <= 4 * (p.rule_count() + q.rule_count()) + 200);
        let w = detect_lr(&StringView::slp(g.slp.clone()), g.l.unwrap(), g.r.unwrap()).unwrap();
        assert_eq!(w.is_some(), a == b);
        let t = gadget_cadence_ternary3(&p, &q).unwrap();
        assert_eq!(t.len(), t.expected_len());
        assert!(t.slp.rule_count() <= 4 * (p.rule_count() + q.rule_count()) + 200);
    }
}

#[test]
fn char1_gadget_detected_by_compressed_search() {
    let mut r = rng(44);
    for _ in 0..100 {
        let (p, q) = (pattern(&mut r, 16), pattern(&mut r, 16));
        let g = gadget_cadence_char1(&Slp::from_symbols(&p).unwrap(), &Slp::from_symbols(&q).unwrap(), 3).unwrap();
        let s = g.slp.expand_symbols(u64::MAX).unwrap();
        let any = !enum_cadences(&s, 3, None).unwrap().is_empty();
        assert_eq!(detect_3cadence(&StringView::slp(g.slp)).unwrap().is_some(), any);
    }
}

#[test]
fn sidecar_fields() {
    let p = Slp::literal("0101").unwrap();
    let q = Slp::literal("11").unwrap();
    let g = gadget_lr3(&q, &p).unwrap();
    assert!(g.swapped);
    let sc = g.sidecar();
    assert_eq!((sc.n, sc.plen, sc.pplen), (17, 4, 2));
    assert_eq!(sc.l, Some([1, 1]));
    assert_eq!(sc.r, Some([10, 17]));
    assert!(matches!(gadget_cadence_char1(&p, &q, 2), Err(GadgetError::InvalidK(2))));
    let t = Slp::literal("2").unwrap();
    assert!(matches!(gadget_lr3(&t, &p), Err(GadgetError::AlphabetMismatch(_))));
}

#[test]
fn esm_212_correspondence_random() {
    let mut r = rng(45);
    let mut checked = 0;
    for _ in 0..400 {
        let a = r.gen_range(1..8u64);
        let gap = r.gen_range(2 * a..3 * a + 10);
        let b = r.gen_range(1..=a);
        let n = a + gap + b + r.gen_range(0..6);
        let l = Interval::new(1, a);
        let rr = Interval::new(a + gap + 1, a + gap + b);
        let s: Vec<Symbol> = (1..=n)
            .map(|i| {
                let inside = l.contains(i) || rr.contains(i);
                let hit = r.gen_bool(0.5);
                match (inside, hit) {
                    (true, true) => Symbol::Two,
                    (false, true) => Symbol::One,
                    _ => Symbol::Zero,
                }
            })
            .collect();
        match esm_212_equiv_check(&s, l, rr) {
            Ok(ok) => {
                assert!(ok);
                checked += 1;
            }
            Err(GadgetError::HypothesisViolated(_)) => {}
            Err(e) => panic!("{e}"),
        }
    }
    assert!(checked > 100);
}
