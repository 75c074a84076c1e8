//! Presentations of the fundamental groups of double branched covers of the
//! links `L(k1, ..., kn)`, together with the machinery to check them:
//! relator rewriting with replayable proofs, integer homology, coset
//! enumeration and certificates of non-left-orderability.

pub mod budget;
pub mod coset;
pub mod error;
pub mod family;
pub mod homology;
pub mod orderability;
pub mod presentation;
pub mod proof;
pub mod replay;
pub mod rewrite;
pub mod tietze;
pub mod word;

pub use budget::SearchBudget;
pub use error::{Error, Result};
pub use family::FamilyParams;
pub use presentation::{Generator, NamedWord, Presentation, PresentationJson};
pub use proof::{EqualityProof, ProofStep};
pub use rewrite::{prove_equal, ProveOutcome, Rewriter};
pub use tietze::{check_tietze_equivalence, Substitution, TietzeOutcome};
pub use word::{Letter, Syllable, Word};
