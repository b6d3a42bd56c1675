//! Base-size machinery for finite permutation groups: base verification and
//! search with certificates, exact minimal base size with exhaustive
//! lower-bound transcripts, exact and Monte Carlo non-base probabilities,
//! prime-order-class bound ledgers, and conjugate-intersection witnesses.
//!
//! Ledgers and certificates are exact arithmetic throughout; Monte Carlo
//! results carry confidence intervals and never feed certificates.

pub mod cert;
pub mod ledger;
pub mod prob;
pub mod search;
pub mod tree;
pub mod witness;

pub use cert::{certify_base, BaseCertificate};
pub use ledger::{
    aggregate_bound, qhat_from_inventory, qhat_from_table, rational_to_f64, BoundLedger,
    LedgerRow, LedgerSource,
};
pub use prob::{q_exact, q_montecarlo, wilson, MonteCarloEstimate};
pub use search::{
    greedy_base, is_base, minimal_base_size_exact, no_base_of_size_raw, ExactBaseResult,
    LowerBoundTranscript, SearchBudget,
};
pub use tree::PrefixTree;
pub use witness::{
    base_to_witness, conjugate_intersection_witness, IntersectionWitness, WitnessOutcome,
};
