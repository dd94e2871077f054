//! Integer partitions and the few character-theoretic quantities of `S_n`
//! needed here: the dimension `f_λ`, the value `χ_λ(s_1)` at a
//! transposition and the parity of `g_λ = (f_λ - χ_λ(s_1)) / 2`.

use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition, rejecting increasing or zero parts.
    ///
    /// Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) {
            return domain("partition has a zero part before a positive one");
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return domain(format!("parts {parts:?} are not weakly decreasing"));
        }
        Ok(Self::from_sorted(parts))
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Partition::default()
    }

    /// The one-row partition `(n)`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The staircase `(k, k-1, ..., 1)`.
    pub fn staircase(k: usize) -> Self {
        Self::from_sorted((1..=k).rev().collect())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.parts.first().copied().unwrap_or(0);
        let cols = (0..width)
            .map(|j| self.parts.iter().take_while(|&&p| p > j).count())
            .collect();
        Partition::from_sorted(cols)
    }

    /// True for partitions of the form `(a, 1^b)`, including `∅`.
    pub fn is_hook(&self) -> bool {
        self.parts.get(1).is_none_or(|&p| p <= 1)
    }

    /// Hook lengths of all cells, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size);
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                hooks.push(row - j + conj.parts[j] - i - 1);
            }
        }
        hooks
    }

    /// True iff no hook length is even.
    pub fn is_two_core(&self) -> bool {
        // 2-cores are exactly the staircases.
        self.parts
            .iter()
            .enumerate()
            .all(|(i, &p)| p == self.parts.len() - i)
    }

    /// Exact dimension `f_λ` of the Specht module, by the hook-length formula.
    pub fn dim(&self) -> BigUint {
        let mut num = BigUint::one();
        for i in 2..=self.size as u64 {
            num *= i;
        }
        let den = self
            .hook_lengths()
            .into_iter()
            .fold(BigUint::one(), |acc, h| acc * h as u64);
        let (q, r) = num.div_rem(&den);
        debug_assert!(r.is_zero());
        q
    }

    /// `χ_λ(s_1)`, the character at a transposition.
    ///
    /// Uses `χ_λ(s_1) = f_λ (Σ C(λ_i, 2) - Σ C(λ'_j, 2)) / C(n, 2)`.
    pub fn char_s1(&self) -> Result<BigInt> {
        if self.size < 2 {
            return domain("χ(s_1) requires |λ| ≥ 2");
        }
        let c2 = |m: usize| (m * m.saturating_sub(1) / 2) as i64;
        let rows: i64 = self.parts.iter().map(|&p| c2(p)).sum();
        let cols: i64 = self.conjugate().parts.iter().map(|&p| c2(p)).sum();
        let num = BigInt::from(self.dim()) * (rows - cols);
        let (q, r) = num.div_rem(&BigInt::from(c2(self.size)));
        debug_assert!(r.is_zero(), "content formula division must be exact");
        Ok(q)
    }

    /// Parity of `f_λ`.
    pub fn f_parity(&self) -> u8 {
        u8::from(self.dim().is_odd())
    }

    /// Parity of `g_λ`, the multiplicity of `-1` as an eigenvalue of
    /// `ρ_λ(s_1)`. Defined as 0 when `|λ| ≤ 1`.
    pub fn g_parity(&self) -> u8 {
        match self.char_s1() {
            Ok(chi) => {
                let g: BigInt = (BigInt::from(self.dim()) - chi) / 2;
                u8::from(g.is_odd())
            }
            Err(_) => 0,
        }
    }

    /// Both parities at once, sharing the dimension computation.
    pub fn parities(&self) -> (u8, u8) {
        (self.f_parity(), self.g_parity())
    }

    /// Determinant of `ρ_λ` as a character of `S_n`.
    pub fn sn_determinant(&self) -> Result<SnDet> {
        if self.size < 2 {
            return domain("S_0 and S_1 have only the trivial determinant");
        }
        Ok(if self.g_parity() == 1 {
            SnDet::Sgn
        } else {
            SnDet::Triv
        })
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fill(n, n, &mut cur, &mut out);
        out
    }
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition::from_sorted(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// Determinant of an irreducible representation of `S_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SnDet {
    Triv,
    Sgn,
}

impl fmt::Display for SnDet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SnDet::Triv => "triv",
            SnDet::Sgn => "sgn",
        })
    }
}

/// Comma-separated parts, largest first; `∅` prints as the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"12,2,1,1"`. Both `""` and `"0"` denote `∅`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let err = |token: &str, reason| Error::Parse {
            input: s.to_string(),
            token: token.to_string(),
            reason,
        };
        let mut parts = Vec::new();
        for token in trimmed.split(',') {
            let t = token.trim();
            let p: usize = t.parse().map_err(|_| err(t, "not a nonnegative integer"))?;
            if p == 0 {
                return Err(err(t, "parts must be positive"));
            }
            if parts.last().is_some_and(|&prev| prev < p) {
                return Err(err(t, "parts must be weakly decreasing"));
            }
            parts.push(p);
        }
        Ok(Partition::from_sorted(parts))
    }
}

/// Short human form: `(12,2,1,1)` or `∅`.
pub fn pretty(p: &Partition) -> String {
    if p.is_empty() {
        "∅".to_string()
    } else {
        format!("({p})")
    }
}

/// Number of partitions `p(m)` for every `m ≤ n`, by Euler's pentagonal
/// recurrence.
pub fn partition_counts_upto(n: usize) -> Vec<BigUint> {
    let mut p: Vec<BigInt> = vec![BigInt::one()];
    for m in 1..=n {
        let mut acc = BigInt::zero();
        for k in 1.. {
            let g1 = k * (3 * k - 1) / 2;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            acc += &p[m - g1] * sign;
            let g2 = k * (3 * k + 1) / 2;
            if g2 <= m {
                acc += &p[m - g2] * sign;
            }
        }
        p.push(acc);
    }
    p.into_iter()
        .map(|x| x.to_biguint().expect("p(n) is positive"))
        .collect()
}

/// `p(n)`.
pub fn partition_count(n: usize) -> BigUint {
    partition_counts_upto(n).pop().expect("nonempty")
}

/// `p₂(n) = Σ_a p(a) p(n - a)`, the number of bipartitions.
pub fn bipartition_count(n: usize) -> BigUint {
    let p = partition_counts_upto(n);
    (0..=n).map(|a| &p[a] * &p[n - a]).sum()
}
