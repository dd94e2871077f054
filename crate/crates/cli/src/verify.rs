//! The `verify` suite: closed formulas against enumeration and the exact
//! identities between them.

use std::fmt::Write as _;

use coxdet::binmath::count_a;
use coxdet::other::{d_counts_enumerated, n_d_sgn};
use coxdet::sn::{count_b, merge_case, merge_count_identities_check, ParityClassCounts};
use coxdet::typeb::{closed_counts, enumerated_counts_with, inequality_holds, BCounts, MultCharB, ParityTable};
use num_bigint::BigUint;

/// The closed formulas under test. Swapping one out lets a test confirm
/// that `verify` notices a wrong formula.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub b_totals: fn(usize) -> coxdet::Result<BCounts>,
    pub d_sgn: fn(usize) -> coxdet::Result<BigUint>,
    pub count_a: fn(u64) -> BigUint,
    pub count_b: fn(u64) -> coxdet::Result<BigUint>,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            b_totals: closed_counts,
            d_sgn: n_d_sgn,
            count_a,
            count_b,
        }
    }
}

#[derive(Debug, Clone)]
pub enum Status {
    Pass,
    Skip(&'static str),
    Fail(String),
}

#[derive(Debug, Clone)]
pub struct Check {
    pub name: &'static str,
    pub range: String,
    pub status: Status,
}

#[derive(Debug, Clone)]
pub struct VerifyOutcome {
    pub checks: Vec<Check>,
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        !self.checks.iter().any(|c| matches!(c.status, Status::Fail(_)))
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| matches!(c.status, Status::Fail(_)))
    }

    pub fn render(&self) -> String {
        let mut s = String::new();
        for c in &self.checks {
            match &c.status {
                Status::Pass => writeln!(s, "PASS  {} ({})", c.name, c.range),
                Status::Skip(why) => writeln!(s, "SKIP  {} ({why})", c.name),
                Status::Fail(msg) => writeln!(s, "FAIL  {} ({}): {msg}", c.name, c.range),
            }
            .expect("writing to a String");
        }
        match self.first_failure() {
            None => s.push_str("all checks passed\n"),
            Some(c) => {
                let failed = self.checks.iter().filter(|c| matches!(c.status, Status::Fail(_))).count();
                writeln!(s, "{failed} check(s) failed; first: {}", c.name).expect("writing to a String");
            }
        }
        s
    }
}

fn check(name: &'static str, range: String, f: impl FnOnce() -> Option<String>) -> Check {
    let status = match f() {
        None => Status::Pass,
        Some(msg) => Status::Fail(msg),
    };
    Check { name, range, status }
}

fn first<T>(it: impl IntoIterator<Item = T>, mut bad: impl FnMut(T) -> Option<String>) -> Option<String> {
    it.into_iter().find_map(|x| bad(x))
}

fn compare_b(n: usize, left: &BCounts, right: &BCounts, names: (&str, &str)) -> Option<String> {
    MultCharB::ALL.into_iter().find_map(|w| {
        (left.get(w) != right.get(w)).then(|| {
            format!(
                "n={n}, ω={w}: {}={} {}={}",
                names.0,
                left.get(w),
                names.1,
                right.get(w)
            )
        })
    })
}

fn err_text(e: coxdet::Error) -> String {
    e.to_string()
}

/// Runs every check whose hypotheses are met for `n ≤ max_n`.
pub fn run_verify(max_n: usize, f: &Formulas) -> VerifyOutcome {
    let table = ParityTable::new(max_n);
    let mut checks = Vec::new();

    checks.push(check("type B closed = enumerated", format!("2 ≤ n ≤ {max_n}"), || {
        first(2..=max_n, |n| match (f.b_totals)(n) {
            Ok(closed) => compare_b(n, &closed, &enumerated_counts_with(&table, n), ("closed", "enumerated")),
            Err(e) => Some(format!("n={n}: {}", err_text(e))),
        })
    }));

    checks.push(if max_n < 4 {
        Check {
            name: "type D closed = enumerated",
            range: String::new(),
            status: Status::Skip("needs n ≥ 4"),
        }
    } else {
        check("type D closed = enumerated", format!("4 ≤ n ≤ {max_n}"), || {
            first(4..=max_n, |n| {
                let closed = match (f.d_sgn)(n) {
                    Ok(v) => v,
                    Err(e) => return Some(format!("n={n}: {}", err_text(e))),
                };
                let (_, sgn) = d_counts_enumerated(n).ok()?;
                (closed != sgn).then(|| format!("n={n}, ω=sgn: closed={closed} enumerated={sgn}"))
            })
        })
    });

    checks.push(check("odd partitions = A(n)", format!("1 ≤ n ≤ {max_n}"), || {
        first(1..=max_n, |n| {
            let c = ParityClassCounts::enumerate(n);
            let odd = c.odd_chiral + c.odd_achiral;
            let want = (f.count_a)(n as u64);
            (odd != want).then(|| format!("n={n}: enumerated={odd} A(n)={want}"))
        })
    }));

    checks.push(check("chiral partitions = B(n)", format!("2 ≤ n ≤ {max_n}"), || {
        first(2..=max_n, |n| {
            let c = ParityClassCounts::enumerate(n);
            let chiral = c.odd_chiral + c.even_chiral;
            match (f.count_b)(n as u64) {
                Ok(want) => (chiral != want).then(|| format!("n={n}: enumerated={chiral} B(n)={want}")),
                Err(e) => Some(format!("n={n}: {}", err_text(e))),
            }
        })
    }));

    checks.push(check("N_eps + N_sgn1 = B(2n)", format!("2 ≤ n ≤ {max_n}"), || {
        first(2..=max_n, |n| {
            let c = (f.b_totals)(n).ok()?;
            let lhs = c.get(MultCharB::Eps) + c.get(MultCharB::Sgn1);
            let rhs = (f.count_b)(2 * n as u64).ok()?;
            (lhs != rhs).then(|| format!("n={n}, ω=eps+sgn1: {lhs} vs B(2n)={rhs}"))
        })
    }));

    checks.push(check("N_eps = N_sgn0 (n even)", format!("2 ≤ n ≤ {max_n}"), || {
        first((2..=max_n).step_by(2), |n| {
            let c = (f.b_totals)(n).ok()?;
            (c.get(MultCharB::Eps) != c.get(MultCharB::Sgn0)).then(|| {
                format!(
                    "n={n}, ω=sgn0: eps={} sgn0={}",
                    c.get(MultCharB::Eps),
                    c.get(MultCharB::Sgn0)
                )
            })
        })
    }));

    checks.push(if max_n < 3 {
        Check {
            name: "N_eps = N_sgn1 = A(2n)/4 (n odd)",
            range: String::new(),
            status: Status::Skip("needs n ≥ 3"),
        }
    } else {
        check("N_eps = N_sgn1 = A(2n)/4 (n odd)", format!("3 ≤ n ≤ {max_n}"), || {
            first((3..=max_n).step_by(2), |n| {
                let c = (f.b_totals)(n).ok()?;
                let quarter = (f.count_a)(2 * n as u64) / 4u8;
                MultCharB::ALL
                    .into_iter()
                    .filter(|w| matches!(w, MultCharB::Eps | MultCharB::Sgn1))
                    .find_map(|w| {
                        (c.get(w) != &quarter).then(|| format!("n={n}, ω={w}: {} vs A(2n)/4={quarter}", c.get(w)))
                    })
            })
        })
    });

    checks.push(check("tower merge identities", format!("a + b ≤ {max_n}"), || {
        first(2..=max_n as u64, |n| {
            first(0..=n, |a| {
                merge_case(a, n - a)?;
                match merge_count_identities_check(a, n - a) {
                    Ok(true) => None,
                    Ok(false) => Some(format!("n={n}: (a, b) = ({a}, {})", n - a)),
                    Err(e) => Some(err_text(e)),
                }
            })
        })
    }));

    checks.push(if max_n < 10 {
        Check {
            name: "inequality chain",
            range: String::new(),
            status: Status::Skip("needs n ≥ 10"),
        }
    } else {
        check("inequality chain", format!("10 ≤ n ≤ {max_n}"), || {
            first(10..=max_n, |n| match (f.b_totals)(n) {
                Ok(c) => (!inequality_holds(&c, n)).then(|| format!("n={n}")),
                Err(e) => Some(format!("n={n}: {}", err_text(e))),
            })
        })
    });

    VerifyOutcome { checks }
}
