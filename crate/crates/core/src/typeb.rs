//! The hyperoctahedral groups `B_n = (Z/2) ≀ S_n`.
//!
//! The irreducible `ρ_{αβ}` is indexed by a bipartition `(α, β)` with
//! `|α| = a`, `|β| = b`. Its determinant is `ε^x · (sgn⁰)^y` with
//!
//! ```text
//! x = f_α f_β C(n-1; a, b-1)
//! y = f_α f_β C(n-2; a-1, b-1) + f_β g_α C(n-2; a-2, b) + f_α g_β C(n-2; a, b-2)
//! ```
//!
//! read mod 2, where multinomials with a negative index vanish.

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;
use rayon::prelude::*;

use crate::binmath::{binom_parity, choose2, count_a, k_of, multinomial, pow2, rat, to_count};
use crate::error::{domain, Error, Result};
use crate::partition::{bipartition_count, Partition};
use crate::report::{CountReport, GroupTag, Method, MultChar};
use crate::sn::{count_b_or_zero, parity_class_counts, ParityClassCounts};

/// An ordered pair of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Bipartition {
    pub alpha: Partition,
    pub beta: Partition,
}

impl Bipartition {
    pub fn new(alpha: Partition, beta: Partition) -> Self {
        Bipartition { alpha, beta }
    }

    pub fn a(&self) -> usize {
        self.alpha.size()
    }

    pub fn b(&self) -> usize {
        self.beta.size()
    }

    pub fn n(&self) -> usize {
        self.a() + self.b()
    }

    /// All bipartitions of `n`: `a = 0..=n`, then partitions of `a` times
    /// partitions of `n - a`, each in [`Partition::all`] order.
    pub fn all(n: usize) -> Vec<Bipartition> {
        (0..=n).flat_map(|a| Self::all_ab(a, n - a)).collect()
    }

    pub fn all_ab(a: usize, b: usize) -> Vec<Bipartition> {
        let betas = Partition::all(b);
        Partition::all(a)
            .into_iter()
            .flat_map(|alpha| {
                betas
                    .iter()
                    .map(move |beta| Bipartition::new(alpha.clone(), beta.clone()))
            })
            .collect()
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}; {})",
            crate::partition::pretty(&self.alpha),
            crate::partition::pretty(&self.beta)
        )
    }
}

/// A multiplicative character of `B_n`: the Klein four-group generated by
/// `ε` and `sgn⁰`, with `sgn¹ = ε · sgn⁰`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultCharB {
    Triv,
    Sgn0,
    Sgn1,
    Eps,
}

impl MultCharB {
    /// Column order of the count tables.
    pub const ALL: [MultCharB; 4] = [
        MultCharB::Triv,
        MultCharB::Sgn0,
        MultCharB::Sgn1,
        MultCharB::Eps,
    ];

    /// `ε^x (sgn⁰)^y`.
    pub fn from_exponents(x_eps: u8, y_sgn0: u8) -> Self {
        match (x_eps & 1, y_sgn0 & 1) {
            (0, 0) => MultCharB::Triv,
            (0, _) => MultCharB::Sgn0,
            (_, 0) => MultCharB::Eps,
            _ => MultCharB::Sgn1,
        }
    }

    /// Exponents `(x, y)` with `self = ε^x (sgn⁰)^y`.
    pub fn exponents(self) -> (u8, u8) {
        match self {
            MultCharB::Triv => (0, 0),
            MultCharB::Sgn0 => (0, 1),
            MultCharB::Eps => (1, 0),
            MultCharB::Sgn1 => (1, 1),
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

impl Mul for MultCharB {
    type Output = MultCharB;

    fn mul(self, rhs: MultCharB) -> MultCharB {
        let (x1, y1) = self.exponents();
        let (x2, y2) = rhs.exponents();
        MultCharB::from_exponents(x1 ^ x2, y1 ^ y2)
    }
}

impl From<MultCharB> for MultChar {
    fn from(c: MultCharB) -> MultChar {
        match c {
            MultCharB::Triv => MultChar::Triv,
            MultCharB::Sgn0 => MultChar::Sgn0,
            MultCharB::Sgn1 => MultChar::Sgn1,
            MultCharB::Eps => MultChar::Eps,
        }
    }
}

impl fmt::Display for MultCharB {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        MultChar::from(*self).fmt(f)
    }
}

impl FromStr for MultCharB {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultCharB::ALL
            .into_iter()
            .find(|c| c.to_string() == s)
            .ok_or_else(|| Error::Domain(format!("{s:?} is not a character of B_n")))
    }
}

/// Parities of the three multinomials `C(n-2; a-2, b)`, `C(n-2; a-1, b-1)`,
/// `C(n-2; a, b-2)` that drive `y`, in that order, plus `C(n-1; a, b-1)`
/// which drives `x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Code {
    pub left: u8,
    pub mid: u8,
    pub right: u8,
    pub x: u8,
}

impl Code {
    pub fn of(a: usize, b: usize) -> Code {
        let (n, a, b) = ((a + b) as i64, a as i64, b as i64);
        Code {
            left: binom_parity(n - 2, a - 2, b),
            mid: binom_parity(n - 2, a - 1, b - 1),
            right: binom_parity(n - 2, a, b - 2),
            x: binom_parity(n - 1, a, b - 1),
        }
    }
}

impl fmt::Display for Code {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}{}", self.left, self.mid, self.right)
    }
}

/// Parities `(f, g)` of one partition.
pub type Parities = (u8, u8);

/// `x_{αβ}` from the component parities.
pub fn x_from(a: usize, b: usize, fa: u8, fb: u8) -> u8 {
    let (n, a, b) = ((a + b) as i64, a as i64, b as i64);
    fa & fb & binom_parity(n - 1, a, b - 1)
}

/// `y_{αβ}` from the component parities.
pub fn y_from(a: usize, b: usize, (fa, ga): Parities, (fb, gb): Parities) -> u8 {
    let c = Code::of(a, b);
    (fa & fb & c.mid) ^ (fb & ga & c.left) ^ (fa & gb & c.right)
}

pub fn det_from(a: usize, b: usize, pa: Parities, pb: Parities) -> MultCharB {
    MultCharB::from_exponents(x_from(a, b, pa.0, pb.0), y_from(a, b, pa, pb))
}

pub fn x_parity(bp: &Bipartition) -> u8 {
    x_from(bp.a(), bp.b(), bp.alpha.f_parity(), bp.beta.f_parity())
}

pub fn y_parity(bp: &Bipartition) -> u8 {
    y_from(bp.a(), bp.b(), bp.alpha.parities(), bp.beta.parities())
}

/// `det ρ_{αβ} = ε^x (sgn⁰)^y`.
pub fn det_b(bp: &Bipartition) -> MultCharB {
    det_from(bp.a(), bp.b(), bp.alpha.parities(), bp.beta.parities())
}

/// Exact character values of `ρ_{αβ}` at the identity, at `s_1 = (12)`
/// and at the sign change `e_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BCharacterValues {
    pub dim: BigInt,
    pub at_s1: BigInt,
    pub at_e1: BigInt,
}

pub fn character_values(bp: &Bipartition) -> BCharacterValues {
    let (n, a, b) = (bp.n() as i64, bp.a() as i64, bp.b() as i64);
    let fa = BigInt::from(bp.alpha.dim());
    let fb = BigInt::from(bp.beta.dim());
    let chi = |p: &Partition| p.char_s1().unwrap_or_default();
    let big = |x: BigUint| BigInt::from(x);
    let dim = big(multinomial(n, a, b)) * &fa * &fb;
    let at_s1 = big(multinomial(n - 2, a - 2, b)) * &fb * chi(&bp.alpha)
        + big(multinomial(n - 2, a, b - 2)) * &fa * chi(&bp.beta);
    let at_e1 = &fa * &fb * (big(multinomial(n - 1, a - 1, b)) * 2 - big(multinomial(n, a, b)));
    BCharacterValues { dim, at_s1, at_e1 }
}

/// The determinant from the character at the two non-conjugate generators
/// `s_1` and `e_1`: the exponent of `sgn⁰` is `(dim - χ(s_1))/2` and the
/// exponent of `ε` is `(dim - χ(e_1))/2`.
pub fn det_b_via_characters(bp: &Bipartition) -> Result<MultCharB> {
    if bp.n() < 2 {
        return domain("the character route needs n ≥ 2");
    }
    let v = character_values(bp);
    let exponent = |chi: &BigInt| -> u8 {
        let (q, r) = (&v.dim - chi).div_rem(&BigInt::from(2));
        debug_assert!(r.is_zero());
        u8::from(q.is_odd())
    };
    Ok(MultCharB::from_exponents(exponent(&v.at_e1), exponent(&v.at_s1)))
}

/// `σ(α, β) = (α', β')`.
pub fn sigma(bp: &Bipartition) -> Bipartition {
    Bipartition::new(bp.alpha.conjugate(), bp.beta.conjugate())
}

/// Counts indexed by the four characters of `B_n`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BCounts([BigUint; 4]);

impl BCounts {
    pub fn get(&self, c: MultCharB) -> &BigUint {
        &self.0[c.index()]
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    fn add(&mut self, c: MultCharB, by: impl Into<BigUint>) {
        self.0[c.index()] += by.into();
    }

    pub fn report(&self, n: usize, method: Method) -> CountReport {
        CountReport {
            group: GroupTag::B,
            n: n as u64,
            method,
            counts: MultCharB::ALL
                .into_iter()
                .map(|c| (c.into(), self.get(c).clone()))
                .collect(),
        }
    }
}

impl std::ops::AddAssign<&BCounts> for BCounts {
    fn add_assign(&mut self, rhs: &BCounts) {
        for (x, y) in self.0.iter_mut().zip(&rhs.0) {
            *x += y;
        }
    }
}

/// Per-size class counts used by the `(a, b)` case tables.
struct Classes {
    odd: BigUint,
    chiral: BigUint,
    c11: BigUint,
    c10: BigUint,
    c01: BigUint,
}

impl Classes {
    fn of(m: usize) -> Self {
        let ParityClassCounts {
            odd_chiral,
            odd_achiral,
            even_chiral,
            ..
        } = parity_class_counts(m as u64);
        Classes {
            odd: count_a(m as u64),
            chiral: count_b_or_zero(m as u64),
            c11: odd_chiral,
            c10: odd_achiral,
            c01: even_chiral,
        }
    }
}

/// `N_ω(a, b)`: how many `(α, β)` with `α ⊢ a`, `β ⊢ b` have determinant `ω`.
///
/// Follows the case split on the parities of `C(n-1; a, b-1)` and of the
/// code `(C(n-2; a-2, b), C(n-2; a-1, b-1), C(n-2; a, b-2))`. Sizes enter
/// only through `A`, `B` and the `(f, g)` class counts; when `a, b ≥ 2`
/// the two odd classes are each `A/2` and the entries collapse to the
/// familiar `½A(a)A(b)`, `A(a)B(b)` forms. Sizes 0 and 1 have a single odd
/// achiral partition, which the class counts handle directly.
pub fn n_ab(omega: MultCharB, a: usize, b: usize) -> BigUint {
    let code = Code::of(a, b);
    let n_even = (a + b) % 2 == 0;
    let (ca, cb) = (Classes::of(a), Classes::of(b));
    let both_odd = |fa: &BigUint, fb: &BigUint| fa * fb;
    match omega {
        MultCharB::Triv => {
            let total = crate::partition::partition_count(a) * crate::partition::partition_count(b);
            let others: BigUint = [MultCharB::Sgn0, MultCharB::Sgn1, MultCharB::Eps]
                .into_iter()
                .map(|w| n_ab(w, a, b))
                .sum();
            total - others
        }
        MultCharB::Eps => {
            if code.x == 0 || (n_even && code.mid == 1) {
                return BigUint::zero();
            }
            if code.mid == 0 && code.right == 0 {
                // Only at n = 1, where y vanishes.
                both_odd(&ca.odd, &cb.odd)
            } else if code.mid == 1 {
                // right even, left odd: y = 1 + g_α.
                both_odd(&ca.c11, &cb.odd)
            } else if code.left == 0 {
                // y = g_β.
                both_odd(&ca.odd, &cb.c11)
            } else {
                // y = g_α + g_β.
                &ca.c10 * &cb.c10 + &ca.c11 * &cb.c11
            }
        }
        MultCharB::Sgn1 => {
            if code.x == 0 || (code.mid == 0 && code.right == 0) {
                return BigUint::zero();
            }
            match (code.mid, code.left) {
                // y = 1
                (1, 0) => both_odd(&ca.odd, &cb.odd),
                // y = 1 + g_α
                (1, _) => both_odd(&ca.c10, &cb.odd),
                // y = g_β
                (_, 0) => both_odd(&ca.odd, &cb.c11),
                // y = g_α + g_β
                _ => &ca.c11 * &cb.c10 + &ca.c10 * &cb.c11,
            }
        }
        MultCharB::Sgn0 => match (code.left, code.mid, code.right) {
            (0, 0, 0) | (0, 1, 0) => BigUint::zero(),
            (1, 0, 0) => &ca.chiral * &cb.odd,
            (0, 1, 1) => &ca.odd * (&cb.c10 + &cb.c01),
            (1, 1, 1) => &ca.c11 * &cb.chiral + &ca.c01 * &cb.odd + &ca.c10 * (&cb.c10 + &cb.c01),
            (1, 1, 0) => &ca.c01 * &cb.odd,
            (0, 0, 1) => &ca.odd * &cb.c01,
            _ => &ca.c01 * &cb.odd + &ca.odd * &cb.c01,
        },
    }
}

fn ord_k(n: usize) -> i64 {
    i64::from(k_of(n as u64).expect("n ≥ 2"))
}

/// `N_ε(n)` for `n ≥ 2`.
pub fn n_eps_closed(n: usize) -> Result<BigUint> {
    if n < 2 {
        return domain("closed formulas need n ≥ 2");
    }
    let a2n = rat(&count_a(2 * n as u64));
    if n % 2 == 1 {
        return Ok(to_count(a2n * pow2(-2), "N_eps"));
    }
    let k = ord_k(n);
    let ck = choose2(k as u32);
    let mut factor = pow2(1);
    for j in 1..k {
        factor += pow2(ck - choose2(j as u32));
    }
    Ok(to_count(a2n * pow2(-3) * factor, "N_eps"))
}

/// `N_{sgn⁰}(n)` for `n ≥ 2`.
pub fn n_sgn0_closed(n: usize) -> Result<BigUint> {
    if n < 2 {
        return domain("closed formulas need n ≥ 2");
    }
    let a2n = rat(&count_a(2 * n as u64));
    match n % 4 {
        1 => {
            let k = ord_k(n);
            let ck = choose2(k as u32);
            let mut factor = pow2(0) + pow2(ck - 1) * BigInt::from(3) + pow2(ck - k + 1);
            for j in 2..k {
                factor += pow2(ck - choose2(j as u32)) + pow2(ck - j);
            }
            Ok(to_count(a2n * pow2(-2) * factor, "N_sgn0"))
        }
        3 => Ok(to_count(a2n * pow2(-1), "N_sgn0")),
        _ => n_eps_closed(n),
    }
}

/// `N_{sgn¹}(n)` for `n ≥ 2`.
pub fn n_sgn1_closed(n: usize) -> Result<BigUint> {
    if n < 2 {
        return domain("closed formulas need n ≥ 2");
    }
    let a2n = rat(&count_a(2 * n as u64));
    if n % 2 == 1 {
        return Ok(to_count(a2n * pow2(-2), "N_sgn1"));
    }
    let k = ord_k(n);
    let ck = choose2(k as u32);
    let mut factor = pow2(1) + pow2(k);
    for j in 1..k {
        factor += pow2(ck - choose2(j as u32)) * (pow2(j) - pow2(0));
    }
    Ok(to_count(a2n * pow2(-3) * factor, "N_sgn1"))
}

/// All four totals from the closed formulas; `N_1` by subtraction from
/// `p₂(n)`.
pub fn closed_counts(n: usize) -> Result<BCounts> {
    let sgn0 = n_sgn0_closed(n)?;
    let sgn1 = n_sgn1_closed(n)?;
    let eps = n_eps_closed(n)?;
    let triv = bipartition_count(n) - &sgn0 - &sgn1 - &eps;
    Ok(BCounts([triv, sgn0, sgn1, eps]))
}

pub fn n_total_closed(omega: MultCharB, n: usize) -> Result<BigUint> {
    if n < 1 {
        return domain("B_n needs n ≥ 1");
    }
    Ok(closed_counts(n)?.get(omega).clone())
}

/// `(f, g)` parities of every partition of each size up to `n`, in
/// [`Partition::all`] order.
#[derive(Debug, Clone)]
pub struct ParityTable {
    by_size: Vec<Vec<Parities>>,
}

impl ParityTable {
    pub fn new(n: usize) -> Self {
        let by_size = (0..=n)
            .into_par_iter()
            .map(|m| Partition::all(m).iter().map(Partition::parities).collect())
            .collect();
        ParityTable { by_size }
    }

    pub fn size(&self, m: usize) -> &[Parities] {
        &self.by_size[m]
    }
}

/// Classifies every bipartition of `n` with sizes `(a, n - a)` and tallies
/// the determinants.
pub fn enumerate_ab(table: &ParityTable, a: usize, b: usize) -> BCounts {
    let mut counts = BCounts::default();
    for &pa in table.size(a) {
        for &pb in table.size(b) {
            counts.add(det_from(a, b, pa, pb), 1u8);
        }
    }
    counts
}

/// Brute-force totals over all `p₂(n)` bipartitions, sharded by `a`.
pub fn enumerated_counts(n: usize) -> BCounts {
    enumerated_counts_with(&ParityTable::new(n), n)
}

pub fn enumerated_counts_with(table: &ParityTable, n: usize) -> BCounts {
    (0..=n)
        .into_par_iter()
        .map(|a| enumerate_ab(table, a, n - a))
        .reduce(BCounts::default, |mut x, y| {
            x += &y;
            x
        })
}

pub fn n_total_enumerated(omega: MultCharB, n: usize) -> Result<BigUint> {
    if n < 1 {
        return domain("B_n needs n ≥ 1");
    }
    Ok(enumerated_counts(n).get(omega).clone())
}

/// The bipartitions with sizes `(a, b)` and determinant `omega`, in
/// enumeration order.
pub fn bip_set(omega: MultCharB, a: usize, b: usize) -> Vec<Bipartition> {
    Bipartition::all_ab(a, b)
        .into_iter()
        .filter(|bp| det_b(bp) == omega)
        .collect()
}

/// For odd `n`, `σ` carries `Bip_{sgn¹}(a, b)` onto `Bip_ε(a, b)`. Both
/// components are conjugated in place, so the sizes stay `(a, b)`.
pub fn sigma_maps_sgn1_onto_eps(a: usize, b: usize) -> bool {
    let mut image: Vec<_> = bip_set(MultCharB::Sgn1, a, b).iter().map(sigma).collect();
    let mut target = bip_set(MultCharB::Eps, a, b);
    image.sort();
    target.sort();
    image == target
}

/// The strict chain `N_ε = N_{sgn¹} < N_{sgn⁰} < N_1` (odd `n`) or
/// `N_ε = N_{sgn⁰} < N_{sgn¹} < N_1` (even `n`), for `n ≥ 10`.
pub fn inequality_check(n: usize) -> Result<bool> {
    if n < 10 {
        return domain("the inequality chain is asserted for n ≥ 10");
    }
    Ok(inequality_holds(&closed_counts(n)?, n))
}

pub fn inequality_holds(c: &BCounts, n: usize) -> bool {
    use MultCharB::*;
    let (mid, top) = if n % 2 == 1 { (Sgn1, Sgn0) } else { (Sgn0, Sgn1) };
    c.get(Eps) == c.get(mid) && c.get(mid) < c.get(top) && c.get(top) < c.get(Triv)
}

/// `f_{αβ} = C(n; a, b) f_α f_β`.
pub fn dim_b(bp: &Bipartition) -> BigUint {
    let (n, a, b) = (bp.n() as i64, bp.a() as i64, bp.b() as i64);
    multinomial(n, a, b) * bp.alpha.dim() * bp.beta.dim()
}

/// Parity of `f_{αβ}`.
pub fn dim_b_parity(bp: &Bipartition) -> u8 {
    u8::from(!dim_b(bp).is_even())
}

/// `N_1(a, b) + N_{sgn⁰} + N_{sgn¹} + N_ε` over a fixed `(a, b)` must be
/// `p(a) p(b)`.
pub fn ab_counts(a: usize, b: usize) -> BCounts {
    BCounts(MultCharB::ALL.map(|w| n_ab(w, a, b)))
}
