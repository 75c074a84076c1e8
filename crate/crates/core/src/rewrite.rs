//! Bounded, sound search for equality proofs by relator insertion.
//!
//! A move inserts a cyclic rotation of a relator (or of its inverse) at a
//! letter boundary and freely reduces. Only insertions that cancel at least
//! one letter against a neighbour are generated; every face of a reduced van
//! Kampen diagram can be peeled off by such a move, so the pruning keeps the
//! search complete in the limit.

use std::collections::HashMap;

use crate::budget::SearchBudget;
use crate::presentation::Presentation;
use crate::proof::{relator_piece, EqualityProof, ProofStep};
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
struct Piece {
    relator: usize,
    rotation: usize,
    inverse: bool,
    word: Word,
}

/// Precomputed relator rotations for one presentation.
#[derive(Clone, Debug)]
pub struct Rewriter<'a> {
    presentation: &'a Presentation,
    pieces: Vec<Piece>,
    by_first: HashMap<Letter, Vec<usize>>,
    by_last: HashMap<Letter, Vec<usize>>,
}

impl<'a> Rewriter<'a> {
    pub fn new(presentation: &'a Presentation) -> Self {
        let mut pieces = Vec::new();
        let mut seen = HashMap::new();
        for (relator, r) in presentation.relators().iter().enumerate() {
            let len = r.letter_len();
            for rotation in 0..len {
                for inverse in [false, true] {
                    let word = relator_piece(presentation, relator, rotation, inverse)
                        .expect("rotation within relator length");
                    if seen.insert(word.clone(), ()).is_some() {
                        continue;
                    }
                    pieces.push(Piece {
                        relator,
                        rotation,
                        inverse,
                        word,
                    });
                }
            }
        }
        let mut by_first: HashMap<Letter, Vec<usize>> = HashMap::new();
        let mut by_last: HashMap<Letter, Vec<usize>> = HashMap::new();
        for (i, piece) in pieces.iter().enumerate() {
            let letters = piece.word.letter_vec();
            by_first.entry(letters[0]).or_default().push(i);
            by_last.entry(*letters.last().unwrap()).or_default().push(i);
        }
        Rewriter {
            presentation,
            pieces,
            by_first,
            by_last,
        }
    }

    pub fn presentation(&self) -> &'a Presentation {
        self.presentation
    }

    /// All cancelling insertions into `w` whose result has at most
    /// `max_syllables` syllables, in a fixed order.
    pub fn moves(&self, w: &Word, max_syllables: usize) -> Vec<(Word, ProofStep)> {
        let letters = w.letter_vec();
        let mut out = Vec::new();
        let mut candidates: Vec<usize> = Vec::new();
        for pos in 0..=letters.len() {
            candidates.clear();
            if pos > 0 {
                if let Some(list) = self.by_first.get(&letters[pos - 1].inv()) {
                    candidates.extend_from_slice(list);
                }
            }
            if pos < letters.len() {
                if let Some(list) = self.by_last.get(&letters[pos].inv()) {
                    candidates.extend_from_slice(list);
                }
            }
            candidates.sort_unstable();
            candidates.dedup();
            for &i in &candidates {
                let piece = &self.pieces[i];
                let next = w.insert_at(pos, &piece.word);
                if next.syllable_len() > max_syllables {
                    continue;
                }
                out.push((
                    next,
                    ProofStep::at(pos, piece.relator, piece.rotation, piece.inverse),
                ));
            }
        }
        out
    }

    pub fn prove_equal(&self, u: &Word, v: &Word, budget: &SearchBudget) -> ProveOutcome {
        prove_with(self, u, v, budget)
    }
}

/// Result of a bounded search. `Unknown` never means the words differ.
#[derive(Clone, Debug)]
pub enum ProveOutcome {
    Proved(EqualityProof),
    Unknown(SearchReport),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchReport {
    pub states: usize,
    /// True when the state budget ran out; false when no moves were left.
    pub budget_exhausted: bool,
}

impl ProveOutcome {
    pub fn proof(&self) -> Option<&EqualityProof> {
        match self {
            ProveOutcome::Proved(p) => Some(p),
            ProveOutcome::Unknown(_) => None,
        }
    }

    pub fn into_proof(self) -> Option<EqualityProof> {
        match self {
            ProveOutcome::Proved(p) => Some(p),
            ProveOutcome::Unknown(_) => None,
        }
    }
}

/// Search tree rooted at one word; `parent[i]` is the step leading into node `i`.
pub(crate) struct SearchTree {
    pub words: Vec<Word>,
    pub parent: Vec<Option<(usize, ProofStep)>>,
    pub index: HashMap<Word, usize>,
}

impl SearchTree {
    pub fn new(root: Word) -> Self {
        let mut index = HashMap::new();
        index.insert(root.clone(), 0);
        SearchTree {
            words: vec![root],
            parent: vec![None],
            index,
        }
    }

    pub fn add(&mut self, word: Word, parent: usize, step: ProofStep) -> usize {
        let id = self.words.len();
        self.index.insert(word.clone(), id);
        self.words.push(word);
        self.parent.push(Some((parent, step)));
        id
    }

    /// Proof from the root to node `id`.
    pub fn path(&self, id: usize) -> EqualityProof {
        let mut steps = Vec::new();
        let mut cur = id;
        while let Some((parent, step)) = &self.parent[cur] {
            steps.push(step.clone());
            cur = *parent;
        }
        steps.reverse();
        EqualityProof {
            start: self.words[0].clone(),
            end: self.words[id].clone(),
            steps,
        }
    }
}

fn prove_with(rw: &Rewriter<'_>, u: &Word, v: &Word, budget: &SearchBudget) -> ProveOutcome {
    let p = rw.presentation;
    if u == v {
        return ProveOutcome::Proved(EqualityProof::reflexive(u.clone()));
    }
    let mut trees = [SearchTree::new(u.clone()), SearchTree::new(v.clone())];
    let mut frontiers: [Vec<usize>; 2] = [vec![0], vec![0]];
    let mut states = 2usize;

    loop {
        let side = match (frontiers[0].is_empty(), frontiers[1].is_empty()) {
            (true, true) => {
                return ProveOutcome::Unknown(SearchReport {
                    states,
                    budget_exhausted: false,
                })
            }
            (false, true) => 0,
            (true, false) => 1,
            (false, false) => usize::from(frontiers[1].len() < frontiers[0].len()),
        };
        let other = 1 - side;
        let mut layer = std::mem::take(&mut frontiers[side]);
        layer.sort_by(|&a, &b| {
            let t = &trees[side];
            t.words[a].shortlex_cmp(&t.words[b]).then(a.cmp(&b))
        });
        let mut next_layer = Vec::new();
        for id in layer {
            let word = trees[side].words[id].clone();
            for (next, step) in rw.moves(&word, budget.max_word_length) {
                if trees[side].index.contains_key(&next) {
                    continue;
                }
                let new_id = trees[side].add(next.clone(), id, step);
                states += 1;
                if let Some(&meet) = trees[other].index.get(&next) {
                    let (fwd, bwd) = if side == 0 {
                        (trees[0].path(new_id), trees[1].path(meet))
                    } else {
                        (trees[0].path(meet), trees[1].path(new_id))
                    };
                    let back = bwd.reversed(p).expect("search steps replay");
                    let proof = fwd.then(back).expect("paths meet at the same word");
                    return ProveOutcome::Proved(proof);
                }
                next_layer.push(new_id);
                if states >= budget.max_states {
                    return ProveOutcome::Unknown(SearchReport {
                        states,
                        budget_exhausted: true,
                    });
                }
            }
        }
        frontiers[side] = next_layer;
    }
}

/// Convenience wrapper building a fresh [`Rewriter`].
pub fn prove_equal(p: &Presentation, u: &Word, v: &Word, budget: &SearchBudget) -> ProveOutcome {
    Rewriter::new(p).prove_equal(u, v, budget)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pres(names: &[&str], rels: Vec<Word>) -> Presentation {
        Presentation::new(names.iter().map(|s| s.to_string()).collect(), rels, "test").unwrap()
    }

    #[test]
    fn free_group_distinct_words_unknown() {
        let p = pres(&["a"], vec![]);
        let out = prove_equal(&p, &Word::generator(0), &Word::power(0, 2), &SearchBudget::default());
        match out {
            ProveOutcome::Unknown(r) => assert!(!r.budget_exhausted),
            ProveOutcome::Proved(_) => panic!("a = a^2 in the free group"),
        }
    }

    #[test]
    fn order_two_torsion() {
        let p = pres(&["a"], vec![Word::power(0, 2)]);
        let proof = prove_equal(&p, &Word::generator(0), &Word::power(0, -1), &SearchBudget::default())
            .into_proof()
            .unwrap();
        proof.verify(&p).unwrap();
        assert_eq!(proof.len(), 1);
    }

    #[test]
    fn commuting_generators() {
        let p = pres(&["a", "b"], vec![Word::free_reduce([(0, 1), (1, 1), (0, -1), (1, -1)])]);
        let u = Word::free_reduce([(0, 2), (1, 1)]);
        let v = Word::free_reduce([(1, 1), (0, 2)]);
        let proof = prove_equal(&p, &u, &v, &SearchBudget::default()).into_proof().unwrap();
        proof.verify(&p).unwrap();
        assert_eq!(proof.start, u);
        assert_eq!(proof.end, v);
    }

    #[test]
    fn budget_exhaustion_is_reported() {
        let p = pres(&["a", "b"], vec![Word::free_reduce([(0, 1), (1, 1), (0, -1), (1, -1)])]);
        let tiny = SearchBudget::new(5, 64, 10);
        let out = prove_equal(&p, &Word::generator(0), &Word::generator(1), &tiny);
        match out {
            ProveOutcome::Unknown(r) => assert!(r.budget_exhausted),
            ProveOutcome::Proved(_) => panic!("a != b in Z^2"),
        }
    }
}
