use coxdet::other::*;
use coxdet::partition::{bipartition_count, Partition};
use coxdet::report::{GroupTag, MultChar};
use coxdet::SnDet;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;

#[test]
fn sgn_closed_matches_enumeration() {
    for n in 4..=14 {
        assert_eq!(n_d_sgn(n).unwrap(), n_d_sgn_enumerated(n).unwrap(), "n = {n}");
    }
    assert_eq!(n_d_sgn_enumerated(4).unwrap(), BigUint::from(8u8));
    assert_eq!(n_d_sgn_enumerated(5).unwrap(), BigUint::from(12u8));
    assert_eq!(n_d_sgn_enumerated(6).unwrap(), BigUint::from(16u8));
}

#[test]
fn totals_match_enumeration() {
    for n in 4..=14 {
        let (triv, sgn) = d_counts_enumerated(n).unwrap();
        assert_eq!(&triv + &sgn, n_d_total(n).unwrap(), "n = {n}");
        assert_eq!(triv, n_d_triv(n).unwrap(), "n = {n}");
    }
}

/// The total with `p(n)` in place of `p(n/2)` disagrees with the count of
/// irreducibles as soon as `p(n) ≠ p(n/2)`.
#[test]
fn total_uses_half_size_partition_count() {
    use coxdet::partition::partition_count;
    for n in (4..=14).step_by(2) {
        let (triv, sgn) = d_counts_enumerated(n).unwrap();
        let wrong = (bipartition_count(n) + partition_count(n) * 3u8) / 2u8;
        assert_ne!(triv + sgn, wrong, "n = {n}");
    }
}

#[test]
fn odd_n_total_is_half_of_bipartitions() {
    for n in (5..=25).step_by(2) {
        assert!(bipartition_count(n).is_even());
        assert_eq!(n_d_total(n).unwrap() * 2u8, bipartition_count(n));
    }
}

#[test]
fn type_ii_classification_agrees_with_x_plus() {
    for n in (4..=16).step_by(2) {
        for alpha in Partition::all(n / 2) {
            let d = det_d(&TypeDIrrep::TypeII(alpha.clone(), Half::Plus), n).unwrap();
            let x = x_plus(&alpha).unwrap();
            assert_eq!(d == SnDet::Sgn, x.is_odd(), "n = {n}, α = {alpha}");
        }
    }
}

#[test]
fn x_plus_displayed_form() {
    // ¼ C(n; a, a) f² - ½ C(n-2; a-2, a) f² + C(n-2; a, a-2) f g
    use coxdet::binmath::multinomial;
    for n in (4..=16).step_by(2) {
        let a = (n / 2) as i64;
        for alpha in Partition::all(n / 2) {
            let f = BigInt::from(alpha.dim());
            let g = (&f - alpha.char_s1().unwrap()) / 2;
            let m = |x, y, z| BigInt::from(multinomial(x, y, z));
            let four_x = m(2 * a, a, a) * &f * &f - m(2 * a - 2, a - 2, a) * &f * &f * 2
                + m(2 * a - 2, a, a - 2) * &f * g * 4;
            assert_eq!(four_x, x_plus(&alpha).unwrap() * 4);
        }
    }
}

#[test]
fn lemma_binomial_parities() {
    for a in 3..=64usize {
        let n = 2 * a;
        let (mid_mod4, side) = type_ii_binomials(n);
        if n.is_power_of_two() {
            assert_eq!((mid_mod4, side), (0, 1), "n = {n}");
        } else if (n - 2).is_power_of_two() {
            assert_eq!((mid_mod4, side), (2, 0), "n = {n}");
        } else {
            assert_eq!((mid_mod4, side), (0, 0), "n = {n}");
        }
    }
}

#[test]
fn four_is_exceptional() {
    let d = |s: &str| det_d(&TypeDIrrep::TypeII(s.parse().unwrap(), Half::Minus), 4).unwrap();
    assert_eq!(d("2"), SnDet::Sgn);
    assert_eq!(d("1,1"), SnDet::Triv);
}

/// Irreducibles of the dihedral group of order `2p`: the linear characters,
/// each its own determinant, and `⌊(p-1)/2⌋` planes on which a reflection
/// has eigenvalues `±1`, so the determinant is `ε_W`.
fn dihedral_oracle(p: u64) -> Vec<MultChar> {
    let mut dets = vec![MultChar::Triv, MultChar::EpsW];
    if p % 2 == 0 {
        dets.extend([MultChar::Omega1, MultChar::Omega2]);
    }
    dets.extend(std::iter::repeat_n(MultChar::EpsW, ((p - 1) / 2) as usize));
    dets
}

#[test]
fn dihedral_matches_oracle() {
    for p in 1..=50u64 {
        let r = dihedral_counts(p).unwrap();
        let dets = dihedral_oracle(p);
        for (c, v) in &r.counts {
            let want = dets.iter().filter(|d| *d == c).count();
            assert_eq!(*v, BigUint::from(want), "p = {p}, {c}");
        }
        let irreps = if p % 2 == 1 { (p + 3) / 2 } else { p / 2 + 3 };
        assert_eq!(r.total(), BigUint::from(irreps), "p = {p}");
        assert_eq!(r.total(), BigUint::from(dets.len()));
    }
}

#[test]
fn exceptional_checksums() {
    let irreps = [
        (GroupTag::H3, 10u32),
        (GroupTag::H4, 34),
        (GroupTag::E6, 25),
        (GroupTag::E7, 60),
        (GroupTag::E8, 112),
        (GroupTag::F4, 25),
    ];
    for (g, total) in irreps {
        assert_eq!(exceptional_counts(g).unwrap().total(), BigUint::from(total), "{g}");
    }
    let want = [
        (GroupTag::H3, 6u32, 4u32),
        (GroupTag::H4, 19, 15),
        (GroupTag::E6, 13, 12),
        (GroupTag::E7, 44, 16),
        (GroupTag::E8, 63, 49),
        (GroupTag::F4, 9, 8),
    ];
    for (g, t, e) in want {
        let r = exceptional_counts(g).unwrap();
        assert_eq!(r.get(MultChar::Triv), Some(&BigUint::from(t)));
        assert_eq!(r.get(MultChar::EpsW), Some(&BigUint::from(e)));
    }
}
