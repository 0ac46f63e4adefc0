use lattice_bounce::bounce_gf::{self, Side};
use lattice_bounce::closed_forms::binomial;
use lattice_bounce::oracle::{self, classify};
use lattice_bounce::{Restriction, Slope, Step, StepWord};
use num_bigint::BigInt;

#[test]
fn transposed_slope_swaps_bounce_sides() {
    for (a, b) in [(1, 2), (2, 3), (1, 4)] {
        let s = Slope::new(a, b).unwrap();
        let t = s.transpose();
        for k in 1..=3 {
            let p = oracle::enumerate_profiles(s, k).unwrap();
            let q = oracle::enumerate_profiles(t, k).unwrap();
            for l in 0..=k {
                for r in 0..=k {
                    let here = p.count_where(|x| x.left == l && x.right == r);
                    let there = q.count_where(|x| x.left == r && x.right == l);
                    assert_eq!(here, there, "slope {s}, k = {k}, ({l}, {r})");
                }
            }
        }
    }
}

#[test]
fn enumeration_total_is_binomial() {
    for s in Slope::all_up_to(6) {
        for k in 1..=2 {
            let p = oracle::enumerate_profiles(s, k).unwrap();
            let n = u64::from(s.path_len(k));
            assert_eq!(BigInt::from(p.total()), binomial(n, i64::from(s.alpha() * k)));
        }
    }
}

#[test]
fn one_sided_series_match_oracle() {
    let s = Slope::new(3, 2).unwrap();
    let order = 4;
    let profiles: Vec<_> = (1..=order as u32).map(|k| oracle::enumerate_profiles(s, k).unwrap()).collect();
    for count in 0..=3 {
        let left = bounce_gf::one_sided_bounce_series(s, Side::Left, count, order);
        let right = bounce_gf::one_sided_bounce_series(s, Side::Right, count, order);
        for p in &profiles {
            let k = p.k as usize;
            let l = p.count_where(|x| x.left == count && x.right == 0);
            let r = p.count_where(|x| x.right == count && x.left == 0);
            assert_eq!(left.coeff(k), &BigInt::from(l), "left {count}, k = {k}");
            assert_eq!(right.coeff(k), &BigInt::from(r), "right {count}, k = {k}");
        }
    }
}

#[test]
fn no_right_bounce_series_match_oracle() {
    for s in Slope::all_up_to(5) {
        let order = (1..).take_while(|&k| s.path_len(k) <= 15).last().unwrap() as usize;
        for r in Restriction::ALL {
            let series = bounce_gf::nrb_series(s, r, order);
            for k in 1..=order as u32 {
                let p = oracle::enumerate_profiles(s, k).unwrap();
                let brute = p.count_where(|x| x.right == 0 && r.admits(x.first, x.last));
                assert_eq!(series.coeff(k as usize), &BigInt::from(brute), "slope {s}, {r}, k = {k}");
            }
        }
    }
}

#[test]
fn classify_reports_ends_and_bounces() {
    let s = Slope::new(1, 1).unwrap();
    let word: StepWord = "NENENE".parse().unwrap();
    let profile = classify(&word, s).unwrap();
    assert_eq!((profile.left, profile.right), (2, 0));
    assert_eq!((profile.first, profile.last), (Step::N, Step::E));
    assert!(!profile.bounce_free);

    let word: StepWord = "ENENNE".parse().unwrap();
    let profile = classify(&word, s).unwrap();
    assert_eq!((profile.left, profile.right), (0, 1));

    let word: StepWord = "ENNE".parse().unwrap();
    let profile = classify(&word, s).unwrap();
    assert_eq!((profile.left, profile.right), (0, 0));
    assert!(profile.bounce_free);
    assert_eq!(profile.horizontal_crosses, Some(0));
}

#[test]
fn classify_rejects_wrong_endpoint() {
    let s = Slope::new(2, 1).unwrap();
    let word: StepWord = "EEEN".parse().unwrap();
    assert!(classify(&word, s).is_err());
}
