use coxdet::binmath::{bin_set, binom_parity, count_a, k_of};
use coxdet::partition::Partition;
use coxdet::sn::*;
use coxdet::tower::*;
use coxdet::typeb::{x_parity, Bipartition};
use num_bigint::BigUint;

fn all_upto(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(Partition::all)
}

#[test]
fn core_quotient_round_trip() {
    for lambda in all_upto(20) {
        let cq = core_quotient(&lambda);
        let (q0, q1) = &cq.quotient;
        assert_eq!(lambda.size(), cq.core.size() + 2 * (q0.size() + q1.size()));
        assert!(cq.core.is_two_core());
        assert_eq!(from_core_quotient(&cq.core, q0, q1).unwrap(), lambda);
    }
}

#[test]
fn quotient_round_trip() {
    for k in 0..6usize {
        let core = Partition::staircase(k);
        let room = 20usize.saturating_sub(core.size());
        if core.size() > 20 {
            break;
        }
        for w in 0..=room / 2 {
            for a in 0..=w {
                for q0 in Partition::all(a) {
                    for q1 in Partition::all(w - a) {
                        let lambda = from_core_quotient(&core, &q0, &q1).unwrap();
                        let cq = core_quotient(&lambda);
                        assert_eq!((cq.core, cq.quotient), (core.clone(), (q0.clone(), q1)));
                    }
                }
            }
        }
    }
}

#[test]
fn non_core_is_rejected() {
    let bad: Partition = "2".parse().unwrap();
    assert!(from_core_quotient(&bad, &Partition::empty(), &Partition::empty()).is_err());
}

#[test]
fn tower_round_trip_and_weights() {
    for lambda in all_upto(20) {
        let tower = build_tower(&lambda);
        assert_eq!(expand_tower(&tower).unwrap(), lambda);
        let weighted: usize = row_weights(&lambda)
            .iter()
            .enumerate()
            .map(|(i, w)| w << i)
            .sum();
        assert_eq!(weighted, lambda.size(), "{lambda}");
        assert_eq!(CoreTower::from_json(&tower.to_json()).unwrap(), tower);
    }
}

#[test]
fn two_cores_are_staircases() {
    for n in 0..=36 {
        for lambda in Partition::all(n) {
            let no_even_hook = lambda.hook_lengths().iter().all(|h| h % 2 == 1);
            assert_eq!(no_even_hook, lambda.is_two_core(), "{lambda}");
        }
    }
    for k in 0..=8 {
        assert!(Partition::staircase(k).hook_lengths().iter().all(|h| h % 2 == 1));
    }
}

#[test]
fn merge_is_commutative_and_associative() {
    let parts: Vec<_> = all_upto(7).collect();
    for x in &parts {
        for y in &parts {
            let xy = merge_towers(x, y);
            assert_eq!(xy, merge_towers(y, x));
            let Ok(xy) = xy else { continue };
            assert_eq!(xy.size(), x.size() + y.size());
            for z in parts.iter().filter(|z| z.size() <= 3) {
                let left = merge_towers(&xy, z);
                let right = merge_towers(y, z).and_then(|yz| merge_towers(x, &yz));
                if let (Ok(l), Ok(r)) = (&left, &right) {
                    assert_eq!(l, r);
                }
                assert_eq!(left.is_ok(), right.is_ok());
            }
        }
    }
}

#[test]
fn odd_partitions_are_counted_by_a() {
    for n in 0..=20usize {
        let mut odd = 0u64;
        for lambda in Partition::all(n) {
            let is_odd = is_odd_partition(&lambda);
            assert_eq!(is_odd, lambda.f_parity() == 1, "{lambda}");
            if is_odd {
                odd += 1;
                let rows: Vec<u32> = row_weights(&lambda)
                    .iter()
                    .enumerate()
                    .filter(|(_, &w)| w > 0)
                    .map(|(i, _)| i as u32)
                    .collect();
                assert_eq!(rows, bin_set(n as u64), "{lambda}");
            }
        }
        assert_eq!(BigUint::from(odd), count_a(n as u64), "n = {n}");
    }
}

#[test]
fn chiral_partitions_are_counted_by_b() {
    for n in 2..=20usize {
        let mut chiral = 0u64;
        for lambda in Partition::all(n) {
            let c = is_chiral(&lambda).unwrap();
            assert_eq!(c, lambda.g_parity() == 1, "{lambda}");
            chiral += u64::from(c);
        }
        assert_eq!(BigUint::from(chiral), count_b(n as u64).unwrap(), "n = {n}");
        assert_eq!(BigUint::from(chiral), enumerate_chiral(n));
    }
}

#[test]
fn domino_census() {
    for n in 2..=20usize {
        let k = k_of(n as u64).unwrap();
        let mut by_j = vec![0u64; 8];
        for lambda in Partition::all(n) {
            if let Some(j) = domino_info(&lambda).j {
                by_j[j] += 1;
            }
        }
        for (j, &found) in by_j.iter().enumerate() {
            let want = count_dj(n as u64, j as u32).unwrap_or_default();
            assert_eq!(BigUint::from(found), want, "n = {n}, j = {j}, k = {k}");
        }
        assert_eq!(BigUint::from(by_j.iter().sum::<u64>()), count_d(n as u64));
    }
}

#[test]
fn class_counts_match_enumeration() {
    for n in 0..=20 {
        assert_eq!(parity_class_counts(n), ParityClassCounts::enumerate(n as usize), "n = {n}");
    }
}

#[test]
fn phi_chirality() {
    // φ(α, β) is chiral iff f_α f_β C(n-1; a-1, b) is odd.
    for n in 2..=12usize {
        for a in 0..=n {
            let b = n - a;
            let c = binom_parity(n as i64 - 1, a as i64 - 1, b as i64);
            for bp in Bipartition::all_ab(a, b) {
                let lambda = phi(&bp.alpha, &bp.beta);
                assert_eq!(lambda.size(), 2 * n);
                assert_eq!(lambda.f_parity(), coxdet::typeb::dim_b_parity(&bp));
                let want = bp.alpha.f_parity() & bp.beta.f_parity() & c == 1;
                assert_eq!(is_chiral(&lambda).unwrap(), want, "{bp}");
                assert_eq!(x_parity(&bp), phi(&bp.beta, &bp.alpha).g_parity(), "{bp}");
            }
        }
    }
}

#[test]
fn merge_identities() {
    for n in 2..=200u64 {
        for a in 0..=n {
            if merge_case(a, n - a).is_some() {
                assert!(merge_count_identities_check(a, n - a).unwrap(), "({a}, {})", n - a);
            }
        }
    }
}
