//! Score normalization and the linear global score
//!
//! ```text
//! S(t) = α·S_L(t) + β·S_C(t) + (1 − α − β)·S_Z(t)
//! ```
//!
//! over components max-normalized across the topic's candidate set.

use std::collections::{BTreeMap, BTreeSet};

use crate::corpus::PageId;
use crate::error::{Error, Result};
use crate::linkrank::LinkTable;
use crate::textindex::SearchHit;

const WEIGHT_SLACK: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FusionParams {
    alpha: f64,
    beta: f64,
}

impl FusionParams {
    /// Default weights: α = 0.1 (links), β = 0.8 (categories).
    pub const DEFAULT: FusionParams = FusionParams {
        alpha: 0.1,
        beta: 0.8,
    };
    pub const CATEGORY_ONLY: FusionParams = FusionParams {
        alpha: 0.0,
        beta: 1.0,
    };
    pub const TEXT_ONLY: FusionParams = FusionParams {
        alpha: 0.0,
        beta: 0.0,
    };
    pub const LINK_ONLY: FusionParams = FusionParams {
        alpha: 1.0,
        beta: 0.0,
    };

    pub fn new(alpha: f64, beta: f64) -> Result<FusionParams> {
        if !(alpha.is_finite() && beta.is_finite()) || alpha < 0.0 || beta < 0.0 {
            return Err(Error::InvalidArgument(format!(
                "alpha and beta must be non-negative, got alpha={alpha} beta={beta}"
            )));
        }
        if alpha + beta > 1.0 + WEIGHT_SLACK {
            return Err(Error::InvalidArgument(format!(
                "alpha + beta must not exceed 1, got {}",
                alpha + beta
            )));
        }
        Ok(FusionParams { alpha, beta })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    /// Weight of the full-text score, `1 − α − β`.
    pub fn gamma(&self) -> f64 {
        1.0 - self.alpha - self.beta
    }

    pub fn combine(&self, s_l: f64, s_c: f64, s_z: f64) -> f64 {
        self.alpha * s_l + self.beta * s_c + self.gamma() * s_z
    }
}

impl Default for FusionParams {
    fn default() -> Self {
        FusionParams::DEFAULT
    }
}

/// A ranked candidate with its normalized components.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ScoredEntity {
    pub id: PageId,
    pub s_l: f64,
    pub s_c: f64,
    pub s_z: f64,
    pub s: f64,
}

/// Retrieved pages plus every link target of the table, minus `exclude`
/// (the example entities in list completion).
pub fn candidate_set(
    hits: &[SearchHit],
    table: &LinkTable,
    exclude: &BTreeSet<PageId>,
) -> BTreeSet<PageId> {
    hits.iter()
        .map(SearchHit::page)
        .chain(table.targets())
        .filter(|p| !exclude.contains(p))
        .collect()
}

/// `S_Z(t)`: the retrieval score of `t`, or 0 if it was not retrieved.
pub fn z_score(hits: &[SearchHit], t: PageId) -> f64 {
    hits.iter()
        .find(|h| h.page() == t)
        .map_or(0.0, |h| h.score)
}

/// Divides every value by the maximum; an all-zero map stays all-zero.
pub fn normalize(raw: &BTreeMap<PageId, f64>) -> Result<BTreeMap<PageId, f64>> {
    if let Some((&page, &value)) = raw.iter().find(|(_, &v)| v < 0.0 || v.is_nan()) {
        return Err(Error::NegativeScore { page, value });
    }
    let max = raw.values().copied().fold(0.0_f64, f64::max);
    Ok(raw
        .iter()
        .map(|(&k, &v)| (k, if max > 0.0 { v / max } else { 0.0 }))
        .collect())
}

/// Normalized component scores of one candidate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Components {
    pub id: PageId,
    pub s_l: f64,
    pub s_c: f64,
    pub s_z: f64,
}

/// Combines components and sorts by descending global score, ties by
/// ascending page id.
pub fn fuse(components: &[Components], params: FusionParams) -> Vec<ScoredEntity> {
    let mut out: Vec<ScoredEntity> = components
        .iter()
        .map(|c| ScoredEntity {
            id: c.id,
            s_l: c.s_l,
            s_c: c.s_c,
            s_z: c.s_z,
            s: params.combine(c.s_l, c.s_c, c.s_z),
        })
        .collect();
    out.sort_by(|a, b| b.s.total_cmp(&a.s).then(a.id.cmp(&b.id)));
    out
}
