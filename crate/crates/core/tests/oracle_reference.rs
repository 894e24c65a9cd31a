mod common;

use cadence_core::oracle::*;
use cadence_core::view::Interval;
use cadence_core::witness::is_maximal;
use common::*;
use proptest::prelude::*;
use rand::Rng;

#[test]
fn cadences_are_maximal_subcadences() {
    let mut r = rng(51);
    for _ in 0..300 {
        let n = r.gen_range(1..120usize);
        let s = mixed_binary(&mut r, n);
        let k = r.gen_range(2..6u64);
        let subs = enum_subcadences(&s, k, None).unwrap();
        let cads = enum_cadences(&s, k, None).unwrap();
        let expect: Vec<_> = subs
            .pairs()
            .into_iter()
            .filter(|&(i, d)| is_maximal(i, d, k, n as u64))
            .collect();
        assert_eq!(cads.pairs(), expect);
        assert_eq!(cads.counts.iter().sum::<u64>() as usize, cads.len());
    }
}

#[test]
fn lr_over_full_range_contains_all_subcadences() {
    let mut r = rng(52);
    for _ in 0..200 {
        let n = r.gen_range(3..80usize);
        let s = mixed_binary(&mut r, n);
        let full = Interval::new(1, n as u64);
        let mut a = enum_lr(&s, full, full, 3, None).unwrap().pairs();
        a.sort();
        assert_eq!(a, enum_subcadences(&s, 3, None).unwrap().pairs());
    }
}

#[test]
fn budget_is_enforced() {
    let s = text(&"01".repeat(10_000));
    assert!(matches!(enum_subcadences(&s, 3, None), Err(OracleError::TooLarge { .. })));
    assert!(enum_cadences(&s, 3, None).is_ok());
}

#[test]
fn vdw_entry() {
    let (e, free) = vdw_verify(3, 2).unwrap();
    assert_eq!((e.k, e.sigma, e.m), (3, 2, 9));
    assert!(enum_subcadences(&free, 3, None).unwrap().is_empty());
}

proptest! {
    #[test]
    fn output_is_sorted(x in proptest::collection::vec(0u8..3, 0..60)) {
        let s: Vec<_> = x.iter().map(|&b| cadence_core::alphabet::Symbol::from_index(b as usize).unwrap()).collect();
        for rep in [enum_subcadences(&s, 3, None).unwrap(), enum_cadences(&s, 3, None).unwrap()] {
            let p = rep.pairs();
            prop_assert!(p.windows(2).all(|w| w[0] < w[1]));
        }
    }
}
