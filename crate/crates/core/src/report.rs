//! Multiplicative characters and count reports.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A multiplicative character of some finite Coxeter group.
///
/// `Triv`/`Sgn` serve types `A` and `D`; `Triv`/`Sgn0`/`Sgn1`/`Eps` serve
/// `B_n`; `Triv`/`EpsW` (plus `Omega1`/`Omega2` when the abelianization is
/// a Klein four-group) serve the dihedral and exceptional types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MultChar {
    Triv,
    Sgn,
    Sgn0,
    Sgn1,
    Eps,
    EpsW,
    Omega1,
    Omega2,
}

impl MultChar {
    pub const ALL: [MultChar; 8] = [
        MultChar::Triv,
        MultChar::Sgn,
        MultChar::Sgn0,
        MultChar::Sgn1,
        MultChar::Eps,
        MultChar::EpsW,
        MultChar::Omega1,
        MultChar::Omega2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            MultChar::Triv => "triv",
            MultChar::Sgn => "sgn",
            MultChar::Sgn0 => "sgn0",
            MultChar::Sgn1 => "sgn1",
            MultChar::Eps => "eps",
            MultChar::EpsW => "eps_W",
            MultChar::Omega1 => "omega1",
            MultChar::Omega2 => "omega2",
        }
    }
}

impl fmt::Display for MultChar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MultChar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MultChar::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Json(format!("unknown character {s:?}")))
    }
}

/// Which family or exceptional group a report describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupTag {
    A,
    B,
    D,
    I2,
    H3,
    H4,
    E6,
    E7,
    E8,
    F4,
}

impl GroupTag {
    pub const EXCEPTIONAL: [GroupTag; 6] = [
        GroupTag::H3,
        GroupTag::H4,
        GroupTag::E6,
        GroupTag::E7,
        GroupTag::E8,
        GroupTag::F4,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GroupTag::A => "A",
            GroupTag::B => "B",
            GroupTag::D => "D",
            GroupTag::I2 => "I2",
            GroupTag::H3 => "H3",
            GroupTag::H4 => "H4",
            GroupTag::E6 => "E6",
            GroupTag::E7 => "E7",
            GroupTag::E8 => "E8",
            GroupTag::F4 => "F4",
        }
    }

    /// Rank of an exceptional group.
    pub fn rank(self) -> Option<u64> {
        Some(match self {
            GroupTag::H3 => 3,
            GroupTag::H4 | GroupTag::F4 => 4,
            GroupTag::E6 => 6,
            GroupTag::E7 => 7,
            GroupTag::E8 => 8,
            _ => return None,
        })
    }
}

impl fmt::Display for GroupTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GroupTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let all = [
            GroupTag::A,
            GroupTag::B,
            GroupTag::D,
            GroupTag::I2,
            GroupTag::H3,
            GroupTag::H4,
            GroupTag::E6,
            GroupTag::E7,
            GroupTag::E8,
            GroupTag::F4,
        ];
        all.into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownGroup(s.to_string()))
    }
}

/// How the counts in a report were obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Closed,
    Enumeration,
    Table,
}

/// Number of irreducibles per determinant for one group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountReport {
    pub group: GroupTag,
    /// `n` for the families, `p` for `I2(p)`, the rank for exceptional groups.
    pub n: u64,
    pub method: Method,
    /// Counts in display order.
    pub counts: Vec<(MultChar, BigUint)>,
}

impl CountReport {
    pub fn get(&self, c: MultChar) -> Option<&BigUint> {
        self.counts.iter().find(|(k, _)| *k == c).map(|(_, v)| v)
    }

    pub fn total(&self) -> BigUint {
        self.counts.iter().map(|(_, v)| v).sum()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))
    }
}

struct OrderedCounts<'a>(&'a [(MultChar, BigUint)]);

impl Serialize for OrderedCounts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(self.0.len()))?;
        for (c, v) in self.0 {
            map.serialize_entry(c.name(), &v.to_string())?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct WireOut<'a> {
    group: &'static str,
    n: u64,
    method: Method,
    counts: OrderedCounts<'a>,
}

#[derive(Deserialize)]
struct WireIn {
    group: String,
    n: u64,
    method: Method,
    counts: BTreeMap<String, String>,
}

impl Serialize for CountReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        WireOut {
            group: self.group.name(),
            n: self.n,
            method: self.method,
            counts: OrderedCounts(&self.counts),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CountReport {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let wire = WireIn::deserialize(d)?;
        let group = wire.group.parse().map_err(D::Error::custom)?;
        let mut counts = Vec::with_capacity(wire.counts.len());
        for (k, v) in wire.counts {
            let c: MultChar = k.parse().map_err(D::Error::custom)?;
            let v: BigUint = v
                .parse()
                .map_err(|_| D::Error::custom(format!("count {v:?} is not a decimal integer")))?;
            counts.push((c, v));
        }
        counts.sort_by_key(|(c, _)| *c);
        Ok(CountReport {
            group,
            n: wire.n,
            method: wire.method,
            counts,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_layout() {
        let r = CountReport {
            group: GroupTag::B,
            n: 6,
            method: Method::Closed,
            counts: vec![
                (MultChar::Triv, 33u8.into()),
                (MultChar::Sgn0, 8u8.into()),
                (MultChar::Sgn1, 16u8.into()),
                (MultChar::Eps, 8u8.into()),
            ],
        };
        let s = r.to_json();
        assert_eq!(
            s,
            r#"{"group":"B","n":6,"method":"closed","counts":{"triv":"33","sgn0":"8","sgn1":"16","eps":"8"}}"#
        );
        assert_eq!(CountReport::from_json(&s).unwrap(), r);
        assert_eq!(r.total(), BigUint::from(65u8));
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(CountReport::from_json(r#"{"group":"Z","n":1,"method":"closed","counts":{}}"#).is_err());
        assert!(CountReport::from_json(r#"{"group":"B","n":1,"method":"closed","counts":{"triv":"x"}}"#).is_err());
        assert!(CountReport::from_json(r#"{"group":"B","n":1,"method":"closed","counts":{"foo":"1"}}"#).is_err());
    }

    #[test]
    fn names_round_trip() {
        for c in MultChar::ALL {
            assert_eq!(c.name().parse::<MultChar>().unwrap(), c);
        }
        assert_eq!("f4".parse::<GroupTag>().unwrap(), GroupTag::F4);
        assert!("Q7".parse::<GroupTag>().is_err());
    }
}
