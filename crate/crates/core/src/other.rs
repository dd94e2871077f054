//! Type `D_n`, the dihedral groups `I₂(p)` and the exceptional groups.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::binmath::{binom_parity, multinomial};
use crate::error::{domain, Error, Result};
use crate::partition::{bipartition_count, partition_count, Partition, SnDet};
use crate::report::{CountReport, GroupTag, Method, MultChar};
use crate::typeb::{closed_counts, y_from, Bipartition, MultCharB, ParityTable};

/// Sign of a Type II constituent of `Res ρ_{αα}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Half {
    Plus,
    Minus,
}

/// An irreducible representation of `D_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TypeDIrrep {
    /// `Res ρ_{αβ}` with `α ≠ β`; the pair is unordered.
    TypeI(Bipartition),
    /// `ρ^±_α` for `α ⊢ n/2`.
    TypeII(Partition, Half),
}

impl TypeDIrrep {
    /// A Type I irrep, with the pair put in a canonical order.
    pub fn type_i(alpha: Partition, beta: Partition) -> Result<Self> {
        if alpha == beta {
            return domain("a Type I pair needs α ≠ β");
        }
        let (alpha, beta) = if beta < alpha { (beta, alpha) } else { (alpha, beta) };
        Ok(TypeDIrrep::TypeI(Bipartition::new(alpha, beta)))
    }

    pub fn size(&self) -> usize {
        match self {
            TypeDIrrep::TypeI(bp) => bp.n(),
            TypeDIrrep::TypeII(alpha, _) => 2 * alpha.size(),
        }
    }
}

impl fmt::Display for TypeDIrrep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeDIrrep::TypeI(bp) => write!(
                f,
                "{{{}, {}}}",
                crate::partition::pretty(&bp.alpha),
                crate::partition::pretty(&bp.beta)
            ),
            TypeDIrrep::TypeII(alpha, h) => {
                let s = if *h == Half::Plus { '+' } else { '-' };
                write!(f, "{}{s}", crate::partition::pretty(alpha))
            }
        }
    }
}

fn is_pow2(n: usize) -> bool {
    n.is_power_of_two()
}

fn is_pow2_plus2(n: usize) -> bool {
    n >= 3 && is_pow2(n - 2)
}

/// `x⁺_α = (dim ρ⁺_α - χ⁺_α(s_1)) / 2` as an exact integer, for `α ⊢ n/2`,
/// `n ≥ 4`, using `dim ρ⁺_α = ½ C(n; a, a) f_α²` and
/// `χ⁺_α(s_1) = C(n-2; a, a-2) f_α χ_α(s_1)`.
pub fn x_plus(alpha: &Partition) -> Result<BigInt> {
    let a = alpha.size() as i64;
    if a < 2 {
        return domain("x⁺ needs n = 2|α| ≥ 4");
    }
    let f = BigInt::from(alpha.dim());
    let dim = BigInt::from(multinomial(2 * a, a, a)) * &f * &f;
    let chi = BigInt::from(multinomial(2 * a - 2, a, a - 2)) * &f * alpha.char_s1()?;
    let (half_dim, r) = dim.div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero());
    let (x, r) = (half_dim - chi).div_rem(&BigInt::from(2));
    debug_assert!(r.is_zero());
    Ok(x)
}

/// Type II determinant from the three-case classification on `n`.
///
/// For `n = 4` the parity of `x⁺` is evaluated directly: there `(2)` gives
/// `sgn` and `(1,1)` gives `triv`, the reverse of the `2^k` rule.
fn det_type_ii(alpha: &Partition) -> Result<SnDet> {
    let n = 2 * alpha.size();
    if n < 4 {
        return domain("type D needs n ≥ 4");
    }
    if n == 4 {
        return Ok(if x_plus(alpha)?.is_odd() { SnDet::Sgn } else { SnDet::Triv });
    }
    let (f, g) = alpha.parities();
    let sgn = if is_pow2(n) {
        f == 1 && g == 1
    } else if is_pow2_plus2(n) {
        f == 1
    } else {
        false
    };
    Ok(if sgn { SnDet::Sgn } else { SnDet::Triv })
}

/// Determinant of an irreducible representation of `D_n`, `n ≥ 4`.
pub fn det_d(irrep: &TypeDIrrep, n: usize) -> Result<SnDet> {
    if n < 4 {
        return domain("type D needs n ≥ 4");
    }
    if irrep.size() != n {
        return domain(format!("{irrep} is not an irrep of D_{n}"));
    }
    match irrep {
        TypeDIrrep::TypeI(bp) => {
            let y = y_from(bp.a(), bp.b(), bp.alpha.parities(), bp.beta.parities());
            Ok(if y == 1 { SnDet::Sgn } else { SnDet::Triv })
        }
        TypeDIrrep::TypeII(alpha, _) => {
            if n % 2 == 1 {
                return domain("Type II irreps need n even");
            }
            det_type_ii(alpha)
        }
    }
}

/// `N'_sgn(n)` from the type B totals plus the Type II correction.
pub fn n_d_sgn(n: usize) -> Result<BigUint> {
    if n < 4 {
        return domain("type D needs n ≥ 4");
    }
    let b = closed_counts(n)?;
    let base = (b.get(MultCharB::Sgn0) + b.get(MultCharB::Sgn1)) / 2u8;
    let correction = if is_pow2(n) {
        n / 2
    } else if is_pow2_plus2(n) {
        n - 2
    } else {
        0
    };
    Ok(base + correction)
}

/// `|Irr(D_n)|`: `½p₂(n)`, plus `3/2 p(n/2)` when `n` is even.
pub fn n_d_total(n: usize) -> Result<BigUint> {
    if n < 2 {
        return domain("type D needs n ≥ 2");
    }
    let mut twice = bipartition_count(n);
    if n % 2 == 0 {
        twice += partition_count(n / 2) * 3u8;
    }
    Ok(twice / 2u8)
}

pub fn n_d_triv(n: usize) -> Result<BigUint> {
    Ok(n_d_total(n)? - n_d_sgn(n)?)
}

/// `N'_sgn(n)` by listing `Irr(D_n)`: unordered pairs `{α, β}` with
/// `α ≠ β` and `y_{αβ}` odd, plus both halves of each `α ⊢ n/2` with
/// `x⁺_α` odd.
pub fn n_d_sgn_enumerated(n: usize) -> Result<BigUint> {
    Ok(d_counts_enumerated(n)?.1)
}

/// `(N'_1, N'_sgn)` by enumeration.
pub fn d_counts_enumerated(n: usize) -> Result<(BigUint, BigUint)> {
    if n < 4 {
        return domain("type D needs n ≥ 4");
    }
    let table = ParityTable::new(n);
    let (triv, sgn) = (0..=n / 2)
        .into_par_iter()
        .map(|a| {
            let b = n - a;
            let (pa, pb) = (table.size(a), table.size(b));
            let (mut triv, mut sgn) = (0u64, 0u64);
            for (i, &x) in pa.iter().enumerate() {
                // For a = b only the pairs with α before β, so each
                // unordered pair is seen once and α = β is skipped.
                let start = if a == b { i + 1 } else { 0 };
                for &y in &pb[start..] {
                    if y_from(a, b, x, y) == 1 {
                        sgn += 1;
                    } else {
                        triv += 1;
                    }
                }
            }
            (triv, sgn)
        })
        .reduce(|| (0, 0), |x, y| (x.0 + y.0, x.1 + y.1));
    let (mut triv, mut sgn) = (BigUint::from(triv), BigUint::from(sgn));
    if n % 2 == 0 {
        for alpha in Partition::all(n / 2) {
            if x_plus(&alpha)?.is_odd() {
                sgn += 2u8;
            } else {
                triv += 2u8;
            }
        }
    }
    Ok((triv, sgn))
}

pub fn d_report(n: usize, method: Method) -> Result<CountReport> {
    let (triv, sgn) = match method {
        Method::Enumeration => d_counts_enumerated(n)?,
        _ => (n_d_triv(n)?, n_d_sgn(n)?),
    };
    Ok(CountReport {
        group: GroupTag::D,
        n: n as u64,
        method,
        counts: vec![(MultChar::Triv, triv), (MultChar::Sgn, sgn)],
    })
}

/// For `n = 2a`, returns `(C(n-2; a-1, a-1) mod 4, C(n-2; a, a-2) mod 2)`.
pub fn type_ii_binomials(n: usize) -> (u8, u8) {
    let a = (n / 2) as i64;
    let n = n as i64;
    let mid = multinomial(n - 2, a - 1, a - 1) % 4u8;
    let mid = mid.to_u32_digits().first().copied().unwrap_or(0) as u8;
    (mid, binom_parity(n - 2, a, a - 2))
}

/// Counts for `I₂(p)`: with `p` odd only `triv` and `ε_W` exist; with `p`
/// even the abelianization is a Klein four-group.
///
/// `p = 1, 2` follow the same formulas: `I₂(1) = Z/2` and `I₂(2)` is the
/// Klein four-group.
pub fn dihedral_counts(p: u64) -> Result<CountReport> {
    if p == 0 {
        return domain("I₂(p) needs p ≥ 1");
    }
    let one = || BigUint::from(1u8);
    let counts = if p % 2 == 1 {
        vec![(MultChar::Triv, one()), (MultChar::EpsW, BigUint::from((p + 1) / 2))]
    } else {
        vec![
            (MultChar::Triv, one()),
            (MultChar::EpsW, BigUint::from(p / 2)),
            (MultChar::Omega1, one()),
            (MultChar::Omega2, one()),
        ]
    };
    Ok(CountReport {
        group: GroupTag::I2,
        n: p,
        method: Method::Closed,
        counts,
    })
}

const EXCEPTIONAL_CSV: &str = include_str!("../data/exceptional.csv");

/// Counts for an exceptional group, read from the bundled table.
pub fn exceptional_counts(group: GroupTag) -> Result<CountReport> {
    let rank = group
        .rank()
        .ok_or_else(|| Error::UnknownGroup(format!("{group} is not exceptional")))?;
    let mut lines = EXCEPTIONAL_CSV.lines();
    let header: Vec<MultChar> = lines
        .next()
        .unwrap_or_default()
        .split(',')
        .skip(1)
        .map(str::parse)
        .collect::<Result<_>>()?;
    for line in lines {
        let mut cells = line.split(',');
        if cells.next() != Some(group.name()) {
            continue;
        }
        let counts = header
            .iter()
            .zip(cells)
            .filter(|(_, v)| !v.is_empty())
            .map(|(c, v)| {
                v.parse::<BigUint>()
                    .map(|v| (*c, v))
                    .map_err(|_| Error::Json(format!("bad table cell {v:?}")))
            })
            .collect::<Result<_>>()?;
        return Ok(CountReport {
            group,
            n: rank,
            method: Method::Table,
            counts,
        });
    }
    Err(Error::UnknownGroup(group.name().to_string()))
}

pub fn exceptional_counts_by_name(name: &str) -> Result<CountReport> {
    exceptional_counts(name.parse()?)
}
