//! Independent certificate checker. No search: it only walks the tree and
//! replays the recorded relator insertions.

use std::fmt;

use crate::orderability::certificate::{DecisionNode, NloCertificate};
use crate::presentation::Presentation;
use crate::proof::apply_step;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Accept,
    /// `path` is the branch sequence from the root, e.g. `+-+`.
    Reject { path: String, reason: String },
}

impl Verdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, Verdict::Accept)
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::Accept => write!(f, "accept"),
            Verdict::Reject { path, reason } => {
                let path = if path.is_empty() { "root" } else { path.as_str() };
                write!(f, "reject at {path}: {reason}")
            }
        }
    }
}

pub fn verify_certificate(p: &Presentation, cert: &NloCertificate) -> Verdict {
    for w in &cert.witness {
        if let Err(e) = p.check_word(w) {
            return reject("", format!("witness outside the alphabet: {e}"));
        }
    }
    let mut signs = Vec::new();
    match walk(p, cert, &cert.tree, &mut signs, &mut String::new()) {
        Ok(()) => Verdict::Accept,
        Err(v) => v,
    }
}

fn reject(path: &str, reason: String) -> Verdict {
    Verdict::Reject {
        path: path.to_string(),
        reason,
    }
}

fn walk(
    p: &Presentation,
    cert: &NloCertificate,
    node: &DecisionNode,
    signs: &mut Vec<(Word, bool)>,
    path: &mut String,
) -> Result<(), Verdict> {
    match node {
        DecisionNode::Branch {
            element,
            positive,
            negative,
        } => {
            if !cert.witness.contains(element) {
                return Err(reject(path, "branch element is not a witness".into()));
            }
            if element.is_identity() {
                return Err(reject(path, "branching on the identity".into()));
            }
            if signs.iter().any(|(w, _)| w == element) {
                return Err(reject(path, "element already signed on this branch".into()));
            }
            for (sign, child, mark) in [(true, positive, '+'), (false, negative, '-')] {
                let Some(child) = child else {
                    return Err(reject(
                        path,
                        format!("missing {} branch", if sign { "positive" } else { "negative" }),
                    ));
                };
                signs.push((element.clone(), sign));
                path.push(mark);
                walk(p, cert, child, signs, path)?;
                path.pop();
                signs.pop();
            }
            Ok(())
        }
        DecisionNode::Leaf(c) => {
            if c.chain.is_empty() {
                return Err(reject(path, "empty chain".into()));
            }
            for (i, factor) in c.chain.iter().enumerate() {
                let positive = signs
                    .iter()
                    .any(|(w, s)| if *s { factor == w } else { *factor == w.invert() });
                if !positive {
                    return Err(reject(
                        path,
                        format!("chain factor {i} ({}) is not positive here", p.format_word(factor)),
                    ));
                }
            }
            let mut word = c.chain.iter().fold(Word::identity(), |acc, w| acc.concat(w));
            for (i, step) in c.proof.iter().enumerate() {
                word = apply_step(p, &word, step)
                    .map_err(|e| reject(path, format!("proof step {i} does not replay: {e}")))?;
            }
            if !word.is_identity() {
                return Err(reject(
                    path,
                    format!("proof ends at {} instead of the identity", p.format_word(&word)),
                ));
            }
            Ok(())
        }
    }
}
