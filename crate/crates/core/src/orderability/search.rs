//! Positive-cone contradiction search.
//!
//! Classes of the universe are signed one at a time in shortlex order,
//! positive first. Each sign choice makes an element positive; products of
//! positive elements that land back in the ball are positive too. A branch
//! closes when the identity becomes positive or a class and its inverse class
//! both do. Proofs are only assembled for the derivations that close a branch.

use std::rc::Rc;

use crate::budget::SearchBudget;
use crate::coset::{order_of_element, todd_coxeter, Enumeration};
use crate::orderability::certificate::{Contradiction, DecisionNode, NloCertificate};
use crate::orderability::table_proof::TableProver;
use crate::orderability::universe::{build_universe, ElementUniverse};
use crate::presentation::Presentation;
use crate::proof::EqualityProof;
use crate::word::Word;

#[derive(Clone, Debug)]
pub struct NloOptions {
    pub budget: SearchBudget,
    /// Longest product chain the closure may build.
    pub max_chain_factors: usize,
    pub try_shortcut: bool,
}

impl Default for NloOptions {
    fn default() -> Self {
        NloOptions {
            budget: SearchBudget::default(),
            max_chain_factors: 8,
            try_shortcut: true,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NotApplicable {
    /// The group is trivial, hence not left-orderable by convention.
    TrivialGroup,
    Exceeded { cosets_defined: usize },
    ProofFailed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateSource {
    Torsion { order: u64, group_order: usize },
    ConeSearch,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InconclusiveReason {
    /// Some branch signed every class without a contradiction.
    ConsistentBranch,
    NodeBudget,
}

#[derive(Clone, Debug)]
pub enum NloOutcome {
    Certified {
        certificate: NloCertificate,
        source: CertificateSource,
    },
    TrivialGroup,
    Inconclusive {
        reason: InconclusiveReason,
        classes: usize,
        nodes: usize,
    },
}

impl NloOutcome {
    /// `certified`, `trivial-group` or `inconclusive`.
    pub fn label(&self) -> &'static str {
        match self {
            NloOutcome::Certified { .. } => "certified",
            NloOutcome::TrivialGroup => "trivial-group",
            NloOutcome::Inconclusive { .. } => "inconclusive",
        }
    }

    pub fn certificate(&self) -> Option<&NloCertificate> {
        match self {
            NloOutcome::Certified { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// Certificate from a torsion element when the group enumerates as finite.
pub fn finite_group_shortcut(
    p: &Presentation,
    budget: &SearchBudget,
) -> std::result::Result<(NloCertificate, CertificateSource), NotApplicable> {
    let enumeration = todd_coxeter(p, budget);
    let (group_order, table) = match &enumeration {
        Enumeration::Exceeded { cosets_defined } => {
            return Err(NotApplicable::Exceeded {
                cosets_defined: *cosets_defined,
            })
        }
        Enumeration::FiniteOrder { order, table } => (*order, table),
    };
    if group_order == 1 {
        return Err(NotApplicable::TrivialGroup);
    }
    let g = (0..p.generator_count() as u32)
        .map(Word::generator)
        .find(|g| table.trace(0, g) != Some(0))
        .ok_or(NotApplicable::ProofFailed)?;
    let m = order_of_element(table, &g).map_err(|_| NotApplicable::ProofFailed)?;
    let mut prover = TableProver::new(p, table, *budget).map_err(|_| NotApplicable::ProofFailed)?;
    let mut leaf = |factor: &Word| -> std::result::Result<DecisionNode, NotApplicable> {
        let chain = vec![factor.clone(); m as usize];
        let product = chain.iter().fold(Word::identity(), |acc, w| acc.concat(w));
        let proof = prover
            .prove_trivial(&product)
            .ok()
            .flatten()
            .ok_or(NotApplicable::ProofFailed)?;
        Ok(DecisionNode::Leaf(Contradiction {
            chain,
            proof: proof.steps,
        }))
    };
    let positive = leaf(&g)?;
    let negative = leaf(&g.invert())?;
    Ok((
        NloCertificate {
            witness: vec![g.clone()],
            tree: DecisionNode::branch(g, positive, negative),
        },
        CertificateSource::Torsion {
            order: m,
            group_order,
        },
    ))
}

enum Derivation {
    /// A signed witness: `word` is the universe element at `index`.
    Base { word: Word, index: usize },
    /// `left · right`, whose canonical product is the universe element at `index`.
    Product {
        left: Rc<Node>,
        right: Rc<Node>,
        index: usize,
    },
}

struct Node {
    class: usize,
    factors: usize,
    derivation: Derivation,
}

impl Node {
    /// Chain of signed witnesses and a proof from their product to the
    /// canonical word of `class`.
    fn materialize(&self, p: &Presentation, u: &ElementUniverse) -> (Vec<Word>, EqualityProof) {
        match &self.derivation {
            Derivation::Base { word, index } => {
                debug_assert_eq!(&u.representatives[*index], word);
                (vec![word.clone()], u.to_canonical[*index].clone())
            }
            Derivation::Product { left, right, index } => {
                let (mut chain, lp) = left.materialize(p, u);
                let (rchain, rp) = right.materialize(p, u);
                let proof = joined(p, &lp, &rp).then(u.to_canonical[*index].clone());
                chain.extend(rchain);
                (chain, proof.expect("product proofs meet"))
            }
        }
    }
}

/// From `l: v1 -> c1` and `r: v2 -> c2`, a proof `v1 v2 -> c1 c2`.
fn joined(p: &Presentation, l: &EqualityProof, r: &EqualityProof) -> EqualityProof {
    let first = l.in_context(p, &Word::identity(), &r.start).expect("proof replays");
    let second = r.in_context(p, &l.end, &Word::identity()).expect("proof replays");
    first.then(second).expect("contexts meet")
}

struct Searcher<'a> {
    p: &'a Presentation,
    u: &'a ElementUniverse,
    inverse_class: Vec<usize>,
    max_factors: usize,
    max_nodes: usize,
    nodes: usize,
    witness: Vec<Word>,
}

enum Stop {
    Consistent,
    Budget,
}

enum Closure {
    Open,
    Closed(Contradiction),
}

type Cone = Vec<Option<Rc<Node>>>;

impl<'a> Searcher<'a> {
    fn contradiction(&self, a: &Node, b: Option<&Node>) -> Contradiction {
        let (mut chain, proof) = a.materialize(self.p, self.u);
        let proof = match b {
            None => proof,
            Some(b) => {
                let (rchain, rp) = b.materialize(self.p, self.u);
                chain.extend(rchain);
                // c_inv -> c^-1, so c · c_inv -> 1
                let c = &self.u.representatives[a.class];
                let c_inv = self.u.index_of(&c.invert()).expect("ball is closed under inverses");
                let back = self.u.to_canonical[c_inv].reversed(self.p).expect("proof replays");
                let tail = back
                    .in_context(self.p, c, &Word::identity())
                    .expect("proof replays");
                joined(self.p, &proof, &rp).then(tail).expect("proofs meet")
            }
        };
        debug_assert!(proof.end.is_identity());
        Contradiction {
            chain,
            proof: proof.steps,
        }
    }

    /// Adds `node` to the cone and closes under products.
    fn add(&mut self, cone: &mut Cone, node: Node) -> Result<Closure, Stop> {
        let mut pending = vec![node];
        while let Some(node) = pending.pop() {
            self.nodes += 1;
            if self.nodes > self.max_nodes {
                return Err(Stop::Budget);
            }
            let c = node.class;
            if c == 0 {
                return Ok(Closure::Closed(self.contradiction(&node, None)));
            }
            if cone[c].is_some() {
                continue;
            }
            let inv = self.inverse_class[c];
            if inv == c {
                return Ok(Closure::Closed(self.contradiction(&node, Some(&node))));
            }
            if let Some(other) = &cone[inv] {
                return Ok(Closure::Closed(self.contradiction(&node, Some(other))));
            }
            let node = Rc::new(node);
            cone[c] = Some(node.clone());
            let word = &self.u.representatives[c];
            for (d, other) in cone.iter().enumerate() {
                let Some(other) = other else { continue };
                if node.factors + other.factors > self.max_factors {
                    continue;
                }
                let dword = &self.u.representatives[d];
                for (left, right, product) in [
                    (&node, other, word.concat(dword)),
                    (other, &node, dword.concat(word)),
                ] {
                    let Some(index) = self.u.index_of(&product) else { continue };
                    pending.push(Node {
                        class: self.u.class_of[index],
                        factors: left.factors + right.factors,
                        derivation: Derivation::Product {
                            left: left.clone(),
                            right: right.clone(),
                            index,
                        },
                    });
                    if d == c {
                        break;
                    }
                }
            }
            // products closing a branch first, shortest chains next
            pending.sort_by_key(|n| std::cmp::Reverse((n.class != 0, n.factors)));
        }
        Ok(Closure::Open)
    }

    fn signed(&mut self, cone: &Cone, index: usize) -> Result<DecisionNode, Stop> {
        let mut cone = cone.clone();
        let word = self.u.representatives[index].clone();
        let node = Node {
            class: self.u.class_of[index],
            factors: 1,
            derivation: Derivation::Base { word, index },
        };
        match self.add(&mut cone, node)? {
            Closure::Closed(c) => Ok(DecisionNode::Leaf(c)),
            Closure::Open => self.branch(&cone),
        }
    }

    fn branch(&mut self, cone: &Cone) -> Result<DecisionNode, Stop> {
        let next = self
            .u
            .classes()
            .into_iter()
            .find(|&c| c != 0 && cone[c].is_none() && cone[self.inverse_class[c]].is_none());
        let Some(c) = next else {
            return Err(Stop::Consistent);
        };
        let element = self.u.representatives[c].clone();
        let inverse = self.u.index_of(&element.invert()).expect("ball is closed under inverses");
        let positive = self.signed(cone, c)?;
        let negative = self.signed(cone, inverse)?;
        if !self.witness.contains(&element) {
            self.witness.push(element.clone());
        }
        Ok(DecisionNode::branch(element, positive, negative))
    }
}

/// Contradiction search over the ball of the given radius.
pub fn cone_search(p: &Presentation, universe: &ElementUniverse, opts: &NloOptions) -> NloOutcome {
    let inverse_class = (0..universe.len())
        .map(|i| universe.inverse_class(universe.class_of[i]))
        .collect();
    let mut s = Searcher {
        p,
        u: universe,
        inverse_class,
        max_factors: opts.max_chain_factors.max(1),
        max_nodes: opts.budget.max_states,
        nodes: 0,
        witness: Vec::new(),
    };
    let cone: Cone = vec![None; universe.len()];
    match s.branch(&cone) {
        Ok(tree) => {
            let mut witness = s.witness;
            witness.sort_by(Word::shortlex_cmp);
            NloOutcome::Certified {
                certificate: NloCertificate { witness, tree },
                source: CertificateSource::ConeSearch,
            }
        }
        Err(stop) => NloOutcome::Inconclusive {
            reason: match stop {
                Stop::Consistent => InconclusiveReason::ConsistentBranch,
                Stop::Budget => InconclusiveReason::NodeBudget,
            },
            classes: universe.class_count(),
            nodes: s.nodes,
        },
    }
}

/// Torsion shortcut first, then the cone search on the ball of `radius`.
pub fn nlo_search(p: &Presentation, radius: usize, opts: &NloOptions) -> NloOutcome {
    if opts.try_shortcut {
        match finite_group_shortcut(p, &opts.budget) {
            Ok((certificate, source)) => return NloOutcome::Certified { certificate, source },
            Err(NotApplicable::TrivialGroup) => return NloOutcome::TrivialGroup,
            Err(_) => {}
        }
    }
    let universe = build_universe(p, radius, &opts.budget);
    cone_search(p, &universe, opts)
}
