//! Certificates that a presented group admits no left order.

pub mod certificate;
pub mod search;
pub mod table_proof;
pub mod universe;
pub mod verify;

pub use certificate::{CertificateJson, Contradiction, DecisionNode, NloCertificate, NodeJson};
pub use search::{
    cone_search, finite_group_shortcut, nlo_search, CertificateSource, InconclusiveReason, NloOptions,
    NloOutcome, NotApplicable,
};
pub use table_proof::TableProver;
pub use universe::{ball, build_universe, ElementUniverse};
pub use verify::{verify_certificate, Verdict};
