use serde::Serialize;

/// Enumeration caps. Every exhaustive enumeration checks its size against one
/// of these and either reports a bounded check or fails with
/// [`crate::Error::CapExceeded`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Caps {
    /// Largest carrier for enumerations that walk every subset.
    pub carrier: usize,
    /// Largest carrier of a materialized power space.
    pub powerspace: usize,
    /// Most continuous maps enumerated for one map-quantified check.
    pub maps: usize,
    /// Most subfamilies enumerated for one family-quantified check before
    /// switching to a bounded sample.
    pub families: usize,
    /// Most down-sets (or up-sets) listed for one poset.
    pub lattice: usize,
    /// Targets `Y` for map-quantified checks have at most this many points.
    pub target_size: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            carrier: 12,
            powerspace: 64,
            maps: 1 << 16,
            families: 1 << 14,
            lattice: 1 << 16,
            target_size: 3,
        }
    }
}
