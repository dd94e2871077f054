//! 2-cores, 2-quotients and 2-core towers.
//!
//! The quotient is read off a 2-runner abacus holding an even number of
//! beads; runner `r` carries the beta-numbers congruent to `r` mod 2. With
//! this convention `(12,2,1,1)` has quotient `((1,1),(6))`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// The 2-core and ordered 2-quotient of a partition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoreQuotient {
    pub core: Partition,
    pub quotient: (Partition, Partition),
}

/// First-column hook lengths of `lambda` padded to `beads` entries.
fn beta_set(lambda: &Partition, beads: usize) -> Vec<usize> {
    debug_assert!(beads >= lambda.len());
    (0..beads)
        .map(|i| lambda.parts().get(i).copied().unwrap_or(0) + beads - 1 - i)
        .collect()
}

fn from_beta(mut beta: Vec<usize>) -> Partition {
    beta.sort_unstable_by(|a, b| b.cmp(a));
    let m = beta.len();
    let parts = beta
        .iter()
        .enumerate()
        .map(|(i, &b)| b - (m - 1 - i))
        .filter(|&p| p > 0)
        .collect();
    Partition::from_sorted(parts)
}

pub fn core_quotient(lambda: &Partition) -> CoreQuotient {
    let beads = lambda.len() + lambda.len() % 2;
    let beta = beta_set(lambda, beads);
    let mut runners: [Vec<usize>; 2] = [Vec::new(), Vec::new()];
    for b in beta {
        runners[b % 2].push(b / 2);
    }
    let counts = [runners[0].len(), runners[1].len()];
    let [q0, q1] = runners.map(from_beta);
    let core_beta = (0..counts[0])
        .map(|p| 2 * p)
        .chain((0..counts[1]).map(|p| 2 * p + 1))
        .collect();
    CoreQuotient {
        core: from_beta(core_beta),
        quotient: (q0, q1),
    }
}

/// Inverse of [`core_quotient`].
pub fn from_core_quotient(core: &Partition, q0: &Partition, q1: &Partition) -> Result<Partition> {
    if !core.is_two_core() {
        return Err(Error::NotACore {
            row: 0,
            label: core.to_string(),
        });
    }
    let mut beads = core.len() + core.len() % 2;
    let runner_counts = |beads: usize| {
        let beta = beta_set(core, beads);
        let odd = beta.iter().filter(|&&b| b % 2 == 1).count();
        (beads - odd, odd)
    };
    let (mut c0, mut c1) = runner_counts(beads);
    while c0 < q0.len() || c1 < q1.len() {
        beads += 2;
        (c0, c1) = (c0 + 1, c1 + 1);
    }
    debug_assert_eq!(runner_counts(beads), (c0, c1));
    let beta = beta_set(q0, c0)
        .into_iter()
        .map(|p| 2 * p)
        .chain(beta_set(q1, c1).into_iter().map(|p| 2 * p + 1))
        .collect();
    Ok(from_beta(beta))
}

/// `φ(α, β)`: the partition with empty 2-core and 2-quotient `(α, β)`.
pub fn phi(alpha: &Partition, beta: &Partition) -> Partition {
    from_core_quotient(&Partition::empty(), alpha, beta).expect("∅ is a 2-core")
}

/// A node of the infinite binary tree: a row index and a bit string of
/// that length, stored most significant bit first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TowerPos {
    pub row: usize,
    pub bits: u64,
}

impl TowerPos {
    pub const ROOT: TowerPos = TowerPos { row: 0, bits: 0 };

    pub fn child(self, bit: u64) -> TowerPos {
        TowerPos {
            row: self.row + 1,
            bits: self.bits << 1 | bit,
        }
    }

    fn parent(self) -> Option<TowerPos> {
        (self.row > 0).then(|| TowerPos {
            row: self.row - 1,
            bits: self.bits >> 1,
        })
    }

    /// First bit of the position (0 = left half), `None` at the root.
    pub fn half(self) -> Option<u64> {
        (self.row > 0).then(|| self.bits >> (self.row - 1) & 1)
    }

    pub fn bit_string(self) -> String {
        (0..self.row)
            .rev()
            .map(|i| if self.bits >> i & 1 == 1 { '1' } else { '0' })
            .collect()
    }

    pub fn parse(s: &str) -> Result<TowerPos> {
        if s.len() > 63 || !s.chars().all(|c| c == '0' || c == '1') {
            return Err(Error::Json(format!("bad tower position {s:?}")));
        }
        let bits = s.chars().fold(0u64, |acc, c| acc << 1 | u64::from(c == '1'));
        Ok(TowerPos { row: s.len(), bits })
    }
}

/// A finitely supported 2-core tower. Only nonempty labels are stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CoreTower {
    labels: BTreeMap<TowerPos, Partition>,
}

impl CoreTower {
    /// Builds a tower from explicit labels, dropping empty ones.
    pub fn from_labels(labels: impl IntoIterator<Item = (TowerPos, Partition)>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for (pos, label) in labels {
            if pos.row < 64 && pos.bits >> pos.row != 0 {
                return Err(Error::Json(format!("position bits exceed row {}", pos.row)));
            }
            if !label.is_two_core() {
                return Err(Error::NotACore {
                    row: pos.row,
                    label: label.to_string(),
                });
            }
            if !label.is_empty() {
                map.insert(pos, label);
            }
        }
        Ok(CoreTower { labels: map })
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// Label at a position; `∅` when absent.
    pub fn label(&self, pos: TowerPos) -> Partition {
        self.labels.get(&pos).cloned().unwrap_or_default()
    }

    /// Nonempty labels in (row, lexicographic position) order.
    pub fn entries(&self) -> impl Iterator<Item = (TowerPos, &Partition)> {
        self.labels.iter().map(|(p, l)| (*p, l))
    }

    /// Nonempty labels of row `i`, in lexicographic order.
    pub fn row(&self, i: usize) -> impl Iterator<Item = (TowerPos, &Partition)> {
        let lo = TowerPos { row: i, bits: 0 };
        let hi = TowerPos {
            row: i + 1,
            bits: 0,
        };
        self.labels.range(lo..hi).map(|(p, l)| (*p, l))
    }

    /// Index of the lowest nonempty row, if any.
    pub fn max_row(&self) -> Option<usize> {
        self.labels.keys().next_back().map(|p| p.row)
    }

    /// `w_i`: total size of the labels in row `i`, up to the last nonempty row.
    pub fn row_weights(&self) -> Vec<usize> {
        let mut w = vec![0; self.max_row().map_or(0, |r| r + 1)];
        for (pos, label) in &self.labels {
            w[pos.row] += label.size();
        }
        w
    }

    /// `Σ w_i 2^i`, the size of the partition the tower encodes.
    pub fn weight(&self) -> usize {
        self.labels
            .iter()
            .map(|(pos, label)| label.size() << pos.row)
            .sum()
    }
}

/// The 2-core tower `T_λ`.
pub fn build_tower(lambda: &Partition) -> CoreTower {
    let mut labels = BTreeMap::new();
    let mut stack = vec![(TowerPos::ROOT, lambda.clone())];
    while let Some((pos, part)) = stack.pop() {
        if part.is_empty() {
            continue;
        }
        let cq = core_quotient(&part);
        if !cq.core.is_empty() {
            labels.insert(pos, cq.core);
        }
        let (q0, q1) = cq.quotient;
        stack.push((pos.child(0), q0));
        stack.push((pos.child(1), q1));
    }
    CoreTower { labels }
}

/// Reconstructs the partition whose tower is `tower`.
pub fn expand_tower(tower: &CoreTower) -> Result<Partition> {
    for (pos, label) in tower.entries() {
        if !label.is_two_core() {
            return Err(Error::NotACore {
                row: pos.row,
                label: label.to_string(),
            });
        }
    }
    // Nodes with a nonempty label somewhere below them.
    let mut live = BTreeSet::new();
    for (pos, _) in tower.entries() {
        let mut p = Some(pos);
        while let Some(q) = p {
            if !live.insert(q) {
                break;
            }
            p = q.parent();
        }
    }
    fn expand(pos: TowerPos, tower: &CoreTower, live: &BTreeSet<TowerPos>) -> Partition {
        if !live.contains(&pos) {
            return Partition::empty();
        }
        let q0 = expand(pos.child(0), tower, live);
        let q1 = expand(pos.child(1), tower, live);
        from_core_quotient(&tower.label(pos), &q0, &q1).expect("labels checked above")
    }
    Ok(expand(TowerPos::ROOT, tower, &live))
}

/// Row weights of `T_λ`.
pub fn row_weights(lambda: &Partition) -> Vec<usize> {
    build_tower(lambda).row_weights()
}

/// Merges the towers of `lambda` and `mu`, which must not share a nonempty
/// row.
pub fn merge_towers(lambda: &Partition, mu: &Partition) -> Result<Partition> {
    let (t1, t2) = (build_tower(lambda), build_tower(mu));
    let (w1, w2) = (t1.row_weights(), t2.row_weights());
    if let Some(row) = (0..w1.len().min(w2.len())).find(|&i| w1[i] > 0 && w2[i] > 0) {
        return Err(Error::TowerOverlap { row });
    }
    let merged = CoreTower {
        labels: t1.labels.into_iter().chain(t2.labels).collect(),
    };
    expand_tower(&merged)
}

/// One row of the tower JSON document.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerRowJson {
    pub i: usize,
    pub entries: Vec<TowerEntryJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerEntryJson {
    pub pos: String,
    pub core: String,
}

/// `{"rows": [{"i": 2, "entries": [{"pos": "00", "core": "1"}]}]}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TowerJson {
    pub rows: Vec<TowerRowJson>,
}

impl From<&CoreTower> for TowerJson {
    fn from(t: &CoreTower) -> Self {
        let mut rows: Vec<TowerRowJson> = Vec::new();
        for (pos, label) in t.entries() {
            let entry = TowerEntryJson {
                pos: pos.bit_string(),
                core: label.to_string(),
            };
            match rows.last_mut() {
                Some(r) if r.i == pos.row => r.entries.push(entry),
                _ => rows.push(TowerRowJson {
                    i: pos.row,
                    entries: vec![entry],
                }),
            }
        }
        TowerJson { rows }
    }
}

impl TryFrom<&TowerJson> for CoreTower {
    type Error = Error;

    fn try_from(doc: &TowerJson) -> Result<CoreTower> {
        let mut labels = Vec::new();
        for row in &doc.rows {
            for e in &row.entries {
                let pos = TowerPos::parse(&e.pos)?;
                if pos.row != row.i {
                    return Err(Error::Json(format!(
                        "position {:?} does not have length {}",
                        e.pos, row.i
                    )));
                }
                labels.push((pos, e.core.parse()?));
            }
        }
        CoreTower::from_labels(labels)
    }
}

impl CoreTower {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&TowerJson::from(self)).expect("serializable")
    }

    pub fn from_json(s: &str) -> Result<CoreTower> {
        let doc: TowerJson = serde_json::from_str(s).map_err(|e| Error::Json(e.to_string()))?;
        CoreTower::try_from(&doc)
    }
}
