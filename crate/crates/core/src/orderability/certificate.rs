//! Certificates of non-left-orderability and their JSON form.
//!
//! A certificate is a binary decision tree over the signs of witness elements.
//! Every leaf names a chain of elements that are positive on that branch and
//! a proof that their product is the identity, which no positive cone allows.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::presentation::{NamedWord, Presentation};
use crate::proof::{step_from_json, step_to_json, ProofStep, ProofStepJson};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NloCertificate {
    pub witness: Vec<Word>,
    pub tree: DecisionNode,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecisionNode {
    Branch {
        element: Word,
        positive: Option<Box<DecisionNode>>,
        negative: Option<Box<DecisionNode>>,
    },
    Leaf(Contradiction),
}

/// `chain[0] · chain[1] ⋯` rewrites to the identity via `proof`, yet every
/// factor is positive on the branch.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Contradiction {
    pub chain: Vec<Word>,
    pub proof: Vec<ProofStep>,
}

impl DecisionNode {
    pub fn branch(element: Word, positive: DecisionNode, negative: DecisionNode) -> Self {
        DecisionNode::Branch {
            element,
            positive: Some(Box::new(positive)),
            negative: Some(Box::new(negative)),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            DecisionNode::Leaf(_) => 1,
            DecisionNode::Branch {
                positive, negative, ..
            } => {
                positive.as_ref().map_or(0, |n| n.leaf_count())
                    + negative.as_ref().map_or(0, |n| n.leaf_count())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CertificateJson {
    pub witness: Vec<NamedWord>,
    pub tree: NodeJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum NodeJson {
    Branch {
        element: NamedWord,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        positive: Option<Box<NodeJson>>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        negative: Option<Box<NodeJson>>,
    },
    Leaf {
        chain: Vec<NamedWord>,
        proof: Vec<ProofStepJson>,
    },
}

impl NloCertificate {
    pub fn to_json(&self, p: &Presentation) -> CertificateJson {
        CertificateJson {
            witness: self.witness.iter().map(|w| p.word_to_named(w)).collect(),
            tree: node_to_json(p, &self.tree),
        }
    }

    pub fn from_json(p: &Presentation, json: &CertificateJson) -> Result<Self> {
        Ok(NloCertificate {
            witness: json
                .witness
                .iter()
                .map(|w| p.word_from_named(w))
                .collect::<Result<_>>()?,
            tree: node_from_json(p, &json.tree)?,
        })
    }

    pub fn to_json_string(&self, p: &Presentation) -> String {
        serde_json::to_string_pretty(&self.to_json(p)).expect("certificate serializes")
    }

    pub fn from_json_str(p: &Presentation, text: &str) -> Result<Self> {
        let json: CertificateJson = serde_json::from_str(text)?;
        NloCertificate::from_json(p, &json)
    }
}

fn node_to_json(p: &Presentation, node: &DecisionNode) -> NodeJson {
    match node {
        DecisionNode::Branch {
            element,
            positive,
            negative,
        } => NodeJson::Branch {
            element: p.word_to_named(element),
            positive: positive.as_ref().map(|n| Box::new(node_to_json(p, n))),
            negative: negative.as_ref().map(|n| Box::new(node_to_json(p, n))),
        },
        DecisionNode::Leaf(c) => NodeJson::Leaf {
            chain: c.chain.iter().map(|w| p.word_to_named(w)).collect(),
            proof: c.proof.iter().map(|s| step_to_json(p, s)).collect(),
        },
    }
}

fn node_from_json(p: &Presentation, node: &NodeJson) -> Result<DecisionNode> {
    Ok(match node {
        NodeJson::Branch {
            element,
            positive,
            negative,
        } => DecisionNode::Branch {
            element: p.word_from_named(element)?,
            positive: match positive {
                Some(n) => Some(Box::new(node_from_json(p, n)?)),
                None => None,
            },
            negative: match negative {
                Some(n) => Some(Box::new(node_from_json(p, n)?)),
                None => None,
            },
        },
        NodeJson::Leaf { chain, proof } => DecisionNode::Leaf(Contradiction {
            chain: chain.iter().map(|w| p.word_from_named(w)).collect::<Result<_>>()?,
            proof: proof.iter().map(|s| step_from_json(p, s)).collect::<Result<_>>()?,
        }),
    })
}
