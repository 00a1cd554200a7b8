//! The inductive construction of uniform 7/9 combinations.
//!
//! [`Certifier`] dispatches on the shape of the graph: an essential 3-edge
//! cut is split and the two contracted sides glued back together; small
//! essentially 4-edge-connected graphs are solved directly by an exact
//! feasibility LP; everything else goes through the pivot-edge reduction,
//! averaged over all pivots and padded to 7/9.

mod base;
mod certificate;
mod certify;
mod combination;

pub use base::{base_case_combination, base_case_graphs};
pub use certificate::{
    min_support_subgraph, verify_certificate, Certificate, Check, PivotRecord, Step, TraceRecord,
    VerificationReport,
};
pub use certify::{
    case1_profile, edge_profiles, glue, lift, z_vector, Case1Outcome, Case1Profile, Certifier,
    DEFAULT_MAX_N,
};
pub use combination::{
    average, edge_occurrences, is_uniform_pattern, pad_to_uniform, vertex_patterns,
    ConvexCombination, Entry,
};

/// `floor(7n/6)`, the size bound on the lightest member of a certificate.
pub fn support_bound(n: usize) -> usize {
    7 * n / 6
}
