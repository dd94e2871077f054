use std::collections::HashMap;

use coxdet::partition::{partition_count, Partition};
use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

fn all_upto(n: usize) -> impl Iterator<Item = Partition> {
    (0..=n).flat_map(Partition::all)
}

/// `f_λ` by removing corners, memoized.
fn branching_dim(parts: &[usize], memo: &mut HashMap<Vec<usize>, BigUint>) -> BigUint {
    if parts.iter().sum::<usize>() <= 1 {
        return BigUint::from(1u8);
    }
    if let Some(v) = memo.get(parts) {
        return v.clone();
    }
    let mut total = BigUint::ZERO;
    for i in 0..parts.len() {
        let is_corner = i + 1 == parts.len() || parts[i + 1] < parts[i];
        if is_corner {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            if smaller[i] == 0 {
                smaller.pop();
            }
            total += branching_dim(&smaller, memo);
        }
    }
    memo.insert(parts.to_vec(), total.clone());
    total
}

/// `χ_λ(s_1)` by Murnaghan–Nakayama: strip each domino rim hook with sign
/// `(-1)^{height}` and take `f` of what remains.
fn mn_char_s1(lambda: &Partition) -> BigInt {
    let len = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + len - 1 - i)
        .collect();
    let mut total = BigInt::ZERO;
    for (i, &x) in beta.iter().enumerate() {
        if x < 2 || beta.contains(&(x - 2)) {
            continue;
        }
        // The hook has height 1 iff the bead jumps over an occupied x - 1.
        let crossed = beta.iter().filter(|&&y| y == x - 1).count();
        let mut moved = beta.clone();
        moved[i] = x - 2;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let m = moved.len();
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &y)| y - (m - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        let f = BigInt::from(Partition::new(parts).unwrap().dim());
        if crossed % 2 == 1 {
            total -= f;
        } else {
            total += f;
        }
    }
    total
}

#[test]
fn hook_length_matches_branching() {
    let mut memo = HashMap::new();
    for lambda in all_upto(15) {
        assert_eq!(lambda.dim(), branching_dim(lambda.parts(), &mut memo), "{lambda}");
    }
}

#[test]
fn squares_of_dimensions_sum_to_factorial() {
    for n in 0..=12usize {
        let sum: BigUint = Partition::all(n).iter().map(|l| l.dim().pow(2)).sum();
        let fact: BigUint = (1..=n as u64).product();
        assert_eq!(sum, fact, "n = {n}");
    }
}

#[test]
fn content_formula_matches_murnaghan_nakayama() {
    for n in 2..=12 {
        for lambda in Partition::all(n) {
            let chi = lambda.char_s1().unwrap();
            assert_eq!(chi, mn_char_s1(&lambda), "{lambda}");
            assert!(chi.abs() <= BigInt::from(lambda.dim()));
        }
    }
}

#[test]
fn conjugation_shifts_g_by_f() {
    // g is pinned to 0 below size 2, where there is no s_1.
    for lambda in all_upto(20).filter(|l| l.size() >= 2) {
        let (f, g) = lambda.parities();
        assert_eq!(lambda.conjugate().g_parity(), g ^ f, "{lambda}");
    }
}

#[test]
fn generation_matches_partition_count() {
    for n in 0..=25 {
        let all = Partition::all(n);
        assert_eq!(BigUint::from(all.len()), partition_count(n));
        let distinct: std::collections::HashSet<_> = all.iter().collect();
        assert_eq!(distinct.len(), all.len());
        assert!(all.iter().all(|l| l.size() == n));
    }
}

#[test]
fn display_round_trips() {
    for lambda in all_upto(10) {
        assert_eq!(lambda.to_string().parse::<Partition>().unwrap(), lambda);
    }
}
