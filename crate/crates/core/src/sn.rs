//! Odd and chiral partitions of `n` and their closed-form counts.
//!
//! A partition is *odd* when `f_λ` is odd and *chiral* when `det ρ_λ` is
//! the sign character. Both properties are read off the 2-core tower here;
//! the character-theoretic definitions in [`crate::partition`] serve as the
//! independent check.

use num_bigint::BigUint;

use crate::binmath::{self, choose2, count_a, k_of, pow2, rat, to_count};
use crate::error::{domain, Result};
use crate::partition::{partition_count, Partition};
use crate::tower::{build_tower, core_quotient, phi};

/// Joint parity of `(f_λ, g_λ)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParityClass {
    pub f_parity: u8,
    pub g_parity: u8,
}

impl ParityClass {
    pub fn of(lambda: &Partition) -> Self {
        let (f_parity, g_parity) = lambda.parities();
        ParityClass { f_parity, g_parity }
    }
}

/// Number of partitions of `n` in each parity class.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ParityClassCounts {
    /// `f ≡ g ≡ 1`
    pub odd_chiral: BigUint,
    /// `f ≡ 1, g ≡ 0`
    pub odd_achiral: BigUint,
    /// `f ≡ 0, g ≡ 1`
    pub even_chiral: BigUint,
    /// `f ≡ g ≡ 0`
    pub even_achiral: BigUint,
}

impl ParityClassCounts {
    pub fn get(&self, class: ParityClass) -> &BigUint {
        match (class.f_parity, class.g_parity) {
            (1, 1) => &self.odd_chiral,
            (1, _) => &self.odd_achiral,
            (_, 1) => &self.even_chiral,
            _ => &self.even_achiral,
        }
    }

    pub fn total(&self) -> BigUint {
        &self.odd_chiral + &self.odd_achiral + &self.even_chiral + &self.even_achiral
    }

    /// Tallies the classes by direct enumeration of the partitions of `n`.
    pub fn enumerate(n: usize) -> Self {
        let mut c = ParityClassCounts::default();
        for lambda in Partition::all(n) {
            let slot = match lambda.parities() {
                (1, 1) => &mut c.odd_chiral,
                (1, _) => &mut c.odd_achiral,
                (_, 1) => &mut c.even_chiral,
                _ => &mut c.even_achiral,
            };
            *slot += 1u8;
        }
        c
    }
}

/// Whether a tower is a `j`-domino tower, and which `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DominoInfo {
    pub is_domino: bool,
    pub j: Option<usize>,
}

impl DominoInfo {
    const NO: DominoInfo = DominoInfo {
        is_domino: false,
        j: None,
    };
}

/// True iff `f_λ` is odd, decided by every tower row carrying at most one
/// cell.
pub fn is_odd_partition(lambda: &Partition) -> bool {
    build_tower(lambda).row_weights().iter().all(|&w| w <= 1)
}

/// Detects `j`-domino towers: two cells in row `j ≥ 1`, one per half, rows
/// `1..j` empty, every other row at most one cell, root `∅` or `(1)`.
pub fn domino_info(lambda: &Partition) -> DominoInfo {
    let tower = build_tower(lambda);
    let weights = tower.row_weights();
    let Some(j) = weights.iter().position(|&w| w == 2) else {
        return DominoInfo::NO;
    };
    let shape_ok = j >= 1
        && weights.first().is_none_or(|&w| w <= 1)
        && weights[1..j].iter().all(|&w| w == 0)
        && weights[j + 1..].iter().all(|&w| w <= 1);
    if !shape_ok {
        return DominoInfo::NO;
    }
    let mut halves = tower.row(j).map(|(pos, label)| (pos.half(), label.size()));
    let split = matches!(
        (halves.next(), halves.next(), halves.next()),
        (Some((Some(0), 1)), Some((Some(1), 1)), None)
    );
    if split {
        DominoInfo {
            is_domino: true,
            j: Some(j),
        }
    } else {
        DominoInfo::NO
    }
}

/// Chirality by the tower classification of odd, domino and `(2,1)`-core
/// partitions.
pub fn is_chiral(lambda: &Partition) -> Result<bool> {
    let n = lambda.size() as u64;
    if n < 2 {
        return domain("chirality requires |λ| ≥ 2");
    }
    let k = k_of(n).expect("n ≥ 2 has n' > 0");
    let cq = core_quotient(lambda);
    let (alpha, beta) = &cq.quotient;
    let (a, b) = (alpha.size() as u64, beta.size() as u64);

    if is_odd_partition(lambda) {
        let probe = if n % 2 == 0 { a } else { b };
        return Ok(probe >> (k - 1) & 1 == 1);
    }
    let core = cq.core.size();
    if core <= 1 {
        let domino = a > 0
            && b > 0
            && a.trailing_zeros() == b.trailing_zeros()
            && a & b == 1 << a.trailing_zeros()
            && is_odd_partition(alpha)
            && is_odd_partition(beta);
        return Ok(domino);
    }
    if core == 3 {
        return Ok(is_odd_partition(&phi(alpha, beta)));
    }
    Ok(false)
}

/// `A(n)`, the number of odd partitions of `n`.
pub fn count_a_sn(n: u64) -> BigUint {
    count_a(n)
}

/// `B(n)`, the number of chiral partitions of `n ≥ 2`.
pub fn count_b(n: u64) -> Result<BigUint> {
    if n < 2 {
        return domain("B(n) is defined for n ≥ 2");
    }
    let eps = (n & 1) as i64;
    let k = k_of(n).expect("n ≥ 2") as i64;
    let ck = choose2(k as u32);
    let mut factor = pow2(-1);
    if eps == 1 {
        factor += pow2(ck - k);
    }
    for j in 1..k {
        factor += pow2(ck - choose2(j as u32) - k + j - 2);
    }
    Ok(to_count(rat(&count_a(n)) * factor, "B(n)"))
}

/// `B(n)` extended by 0 to `n ≤ 1`, where every determinant is trivial.
pub fn count_b_or_zero(n: u64) -> BigUint {
    count_b(n).unwrap_or_default()
}

/// `D_j(n) = 4^{j-1} A(n - 2^{j+1})`, the number of `j`-domino towers of
/// size `n`, for `1 ≤ j ≤ k - 1`.
pub fn count_dj(n: u64, j: u32) -> Result<BigUint> {
    let k = k_of(n).unwrap_or(0);
    if j < 1 || j + 1 > k {
        return domain(format!("D_j(n) needs 1 ≤ j ≤ k - 1; got j = {j}, k = {k}"));
    }
    let shift = 1u64 << (j + 1);
    if shift > n {
        return domain("n - 2^{j+1} is negative");
    }
    Ok(count_a(n - shift) << (2 * (j - 1)))
}

/// `D(n) = Σ_{j=1}^{k-1} D_j(n)`, zero when `n' ≡ 2 (mod 4)`.
pub fn count_d(n: u64) -> BigUint {
    count_d_below(n, u32::MAX)
}

/// `D_{<j}(n) = Σ_{i=1}^{j-1} D_i(n)`; terms with `i ≥ k` vanish.
pub fn count_d_below(n: u64, j: u32) -> BigUint {
    let k = k_of(n).unwrap_or(0);
    (1..j.min(k))
        .map(|i| count_dj(n, i).expect("1 ≤ i ≤ k - 1"))
        .sum()
}

/// Class counts from the closed formulas.
///
/// For `n ≥ 2` the two odd classes each hold `A(n)/2`. For `n ≤ 1` the
/// only partition is odd with `g = 0`.
pub fn parity_class_counts(n: u64) -> ParityClassCounts {
    if n < 2 {
        return ParityClassCounts {
            odd_achiral: BigUint::from(1u8),
            ..Default::default()
        };
    }
    let a = count_a(n);
    let half_a = binmath::half(&a);
    let b = count_b(n).expect("n ≥ 2");
    let p = partition_count(n as usize);
    let even_chiral = &b - &half_a;
    let even_achiral = p - &a - &even_chiral;
    ParityClassCounts {
        odd_chiral: half_a.clone(),
        odd_achiral: half_a,
        even_chiral,
        even_achiral,
    }
}

/// Which merge identities apply to a pair of sizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MergeCase {
    /// `a + b` is carry-free.
    Neat,
    /// `bin(a) ∩ bin(b) = {j}` with `j = ord(a) = ord(b) ≥ 1`.
    Domino { j: u32 },
}

pub fn merge_case(a: u64, b: u64) -> Option<MergeCase> {
    if binmath::is_neat(a, b) {
        return Some(MergeCase::Neat);
    }
    if a > 0 && b > 0 {
        // j = 0 would put both root labels in row 0, where the towers
        // cannot be merged.
        let j = a.trailing_zeros();
        if j >= 1 && b.trailing_zeros() == j && a & b == 1 << j {
            return Some(MergeCase::Domino { j });
        }
    }
    None
}

/// Checks the count identities that tower merging proves bijectively:
///
/// * `a + b` neat: `A(n) = A(a) A(b)`, and if `k ∈ bin(b)` also
///   `A(a) D(b) = D(n)`;
/// * `a + b` meeting in the single bit `j = ord(a) = ord(b)`:
///   `A(a) D(b) = D_{<j}(n)`.
///
/// Here `k = ord(n')` with `n = a + b`.
pub fn merge_count_identities_check(a: u64, b: u64) -> Result<bool> {
    let n = a + b;
    match merge_case(a, b) {
        None => domain(format!("{a} + {b} is neither neat nor a single-bit domino sum")),
        Some(MergeCase::Neat) => {
            let mut ok = count_a(n) == count_a(a) * count_a(b);
            if let Some(k) = k_of(n) {
                if b >> k & 1 == 1 {
                    ok &= count_a(a) * count_d(b) == count_d(n);
                }
            }
            Ok(ok)
        }
        Some(MergeCase::Domino { j }) => Ok(count_a(a) * count_d(b) == count_d_below(n, j)),
    }
}

/// Number of chiral partitions of `n` found by enumeration.
pub fn enumerate_chiral(n: usize) -> BigUint {
    let c = ParityClassCounts::enumerate(n);
    c.odd_chiral + c.even_chiral
}
