//! Turns a complete coset table into relator-insertion proofs.
//!
//! Each coset gets a Schreier-tree representative. For an edge `c·x = d` we
//! need a proof `rep(c) x = rep(d)`; tree edges are free, the rest are deduced
//! from relator traces that have exactly one unproven edge, exactly as the
//! enumeration itself deduces entries. Edges no trace can reach are handed to
//! the rewriting search.

use std::collections::VecDeque;

use crate::budget::SearchBudget;
use crate::coset::{CosetTable, TableStatus};
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::proof::{EqualityProof, ProofStep};
use crate::rewrite::{ProveOutcome, Rewriter};
use crate::word::{Letter, Word};

/// Derived proofs longer than this are abandoned.
const MAX_EDGE_STEPS: usize = 1 << 20;

/// State cap for the first pass over open edges.
const SMALL_SEARCH: usize = 5_000;

pub struct TableProver<'a> {
    p: &'a Presentation,
    table: &'a CosetTable,
    rewriter: Rewriter<'a>,
    budget: SearchBudget,
    reps: Vec<Word>,
    /// `edges[c * G + g]`: proof `rep(c) g -> rep(c g)`.
    edges: Vec<Option<EqualityProof>>,
}

impl<'a> TableProver<'a> {
    pub fn new(p: &'a Presentation, table: &'a CosetTable, budget: SearchBudget) -> Result<Self> {
        if table.status != TableStatus::Complete {
            return Err(Error::IncompleteTable);
        }
        let gens = p.generator_count();
        let n = table.cosets();
        let mut reps: Vec<Option<Word>> = vec![None; n];
        let mut edges: Vec<Option<EqualityProof>> = vec![None; n * gens];
        reps[0] = Some(Word::identity());
        let mut queue = VecDeque::from([0usize]);
        while let Some(c) = queue.pop_front() {
            let rc = reps[c].clone().unwrap();
            for g in 0..gens as u32 {
                for inverse in [false, true] {
                    let l = Letter::new(g, inverse);
                    let d = table.act(c, l).expect("complete table");
                    if reps[d].is_some() {
                        continue;
                    }
                    let rd = rc.concat(&Word::from_letters([l]));
                    // rep(from) g reduces freely to rep(to)
                    let (from, to_rep) = if inverse { (d, rc.clone()) } else { (c, rd.clone()) };
                    edges[from * gens + g as usize] = Some(EqualityProof::reflexive(to_rep));
                    reps[d] = Some(rd);
                    queue.push_back(d);
                }
            }
        }
        Ok(TableProver {
            p,
            table,
            rewriter: Rewriter::new(p),
            budget,
            reps: reps.into_iter().map(|r| r.expect("connected table")).collect(),
            edges,
        })
    }

    pub fn representative(&self, coset: usize) -> &Word {
        &self.reps[coset]
    }

    fn gens(&self) -> usize {
        self.p.generator_count()
    }

    fn edge_slot(&self, c: usize, l: Letter) -> usize {
        if l.inverse {
            let d = self.table.act(c, l).unwrap();
            d * self.gens() + l.gen as usize
        } else {
            c * self.gens() + l.gen as usize
        }
    }

    /// Proof `rep(c) l -> rep(c l)`; requires the underlying edge.
    fn letter_fact(&self, c: usize, l: Letter) -> Result<EqualityProof> {
        let edge = self.edges[self.edge_slot(c, l)].as_ref().ok_or(Error::IncompleteTable)?;
        if !l.inverse {
            return Ok(edge.clone());
        }
        // edge: rep(c l) x -> rep(c); times x^-1 on the right: rep(c l) -> rep(c) x^-1
        let back = Word::from_letters([l]);
        edge.in_context(self.p, &Word::identity(), &back)?.reversed(self.p)
    }

    /// Proof `rep(c) w -> rep(c w)` for the letter sequence `w`.
    pub fn trace_proof(&self, c: usize, w: &[Letter]) -> Result<EqualityProof> {
        let mut cur = c;
        let mut proof = EqualityProof::reflexive(self.reps[c].concat(&Word::from_letters(w.iter().copied())));
        for (j, &l) in w.iter().enumerate() {
            let rest = Word::from_letters(w[j + 1..].iter().copied());
            let fact = self.letter_fact(cur, l)?;
            proof = proof.then(fact.in_context(self.p, &Word::identity(), &rest)?)?;
            cur = self.table.act(cur, l).unwrap();
        }
        Ok(proof)
    }

    fn try_deduce(&mut self) -> Result<bool> {
        let mut progress = false;
        let relators: Vec<Vec<Letter>> = self.p.relators().iter().map(Word::letter_vec).collect();
        for c in 0..self.table.cosets() {
            for (ri, w) in relators.iter().enumerate() {
                if w.is_empty() {
                    continue;
                }
                let mut cosets = Vec::with_capacity(w.len() + 1);
                cosets.push(c);
                for &l in w {
                    cosets.push(self.table.act(*cosets.last().unwrap(), l).unwrap());
                }
                let unknown: Vec<usize> = (0..w.len())
                    .filter(|&j| self.edges[self.edge_slot(cosets[j], w[j])].is_none())
                    .collect();
                if unknown.len() != 1 {
                    continue;
                }
                let j = unknown[0];
                let l = w[j];
                let (cj, cj1) = (cosets[j], cosets[j + 1]);
                // rep(c_{j+1}) -> rep(c_{j+1}) · w[j+1..] w[..j] l
                let start = self.reps[cj1].clone();
                let step = ProofStep::at(start.letter_len(), ri, (j + 1) % w.len(), false);
                let after = crate::proof::apply_step(self.p, &start, &step)?;
                let mut proof = EqualityProof {
                    start,
                    end: after,
                    steps: vec![step],
                };
                let tail = Word::from_letters(w[..j].iter().copied().chain([l]));
                proof = proof.then(self.trace_proof(cj1, &w[j + 1..])?.in_context(
                    self.p,
                    &Word::identity(),
                    &tail,
                )?)?;
                let last = Word::from_letters([l]);
                proof = proof.then(self.trace_proof(c, &w[..j])?.in_context(self.p, &Word::identity(), &last)?)?;
                // proof: rep(c_{j+1}) -> rep(c_j) l
                let edge = if l.inverse {
                    proof.in_context(self.p, &Word::identity(), &Word::generator(l.gen))?
                } else {
                    proof.reversed(self.p)?
                };
                if edge.len() > MAX_EDGE_STEPS {
                    return Ok(false);
                }
                let slot = self.edge_slot(cj, l);
                self.edges[slot] = Some(edge);
                progress = true;
            }
        }
        Ok(progress)
    }

    /// Proves one open edge by rewriting. Every open edge is tried at a level
    /// before the next level is spent on any of them, so that cheap edges can
    /// unblock deduction.
    fn prove_one_by_search(&mut self) -> Result<bool> {
        let gens = self.gens();
        let mut open: Vec<(usize, usize, u32)> = Vec::new();
        for c in 0..self.table.cosets() {
            for g in 0..gens as u32 {
                if self.edges[c * gens + g as usize].is_none() {
                    let d = self.table.act(c, Letter::new(g, false)).unwrap();
                    let cost = self.reps[c].letter_len() + self.reps[d].letter_len();
                    open.push((cost, c, g));
                }
            }
        }
        open.sort();
        let longest = self.p.relators().iter().map(Word::syllable_len).max().unwrap_or(0);
        let base = &self.budget;
        let small = SearchBudget {
            max_states: base.max_states.min(SMALL_SEARCH),
            ..*base
        };
        let levels = [
            (small, true),
            (*base, true),
            (*base, false),
            (base.scaled(4), false),
            (base.scaled(16), false),
        ];
        for (level, tight) in levels {
            for &(_, c, g) in &open {
                let d = self.table.act(c, Letter::new(g, false)).unwrap();
                let lhs = self.reps[c].concat(&Word::generator(g));
                let mut budget = level;
                if tight {
                    // words kept near the size of the edge plus two relators
                    let near = lhs.syllable_len() + self.reps[d].syllable_len() + 2 * longest;
                    budget.max_word_length = budget.max_word_length.min(near);
                }
                if let ProveOutcome::Proved(proof) = self.rewriter.prove_equal(&lhs, &self.reps[d], &budget) {
                    self.edges[c * gens + g as usize] = Some(proof);
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Fills every edge proof; false if some edge could not be proven.
    pub fn complete(&mut self) -> Result<bool> {
        loop {
            while self.try_deduce()? {}
            if self.edges.iter().all(Option::is_some) {
                return Ok(true);
            }
            if !self.prove_one_by_search()? {
                return Ok(false);
            }
        }
    }

    /// Proof `w -> 1`, when `w` traces from coset 0 back to coset 0.
    pub fn prove_trivial(&mut self, w: &Word) -> Result<Option<EqualityProof>> {
        if self.table.trace(0, w) != Some(0) {
            return Ok(None);
        }
        if !self.complete()? {
            return Ok(None);
        }
        let proof = self.trace_proof(0, &w.letter_vec())?;
        debug_assert!(proof.end.is_identity());
        Ok(Some(proof))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coset::todd_coxeter;

    #[test]
    fn proves_powers_trivial_in_s3() {
        let p = Presentation::new(
            vec!["x".into(), "y".into()],
            vec![
                Word::power(0, 2),
                Word::power(1, 3),
                Word::free_reduce([(0, 1), (1, 1)]).pow(2),
            ],
            "s3",
        )
        .unwrap();
        let e = todd_coxeter(&p, &SearchBudget::default());
        let table = e.table().unwrap();
        let mut prover = TableProver::new(&p, table, SearchBudget::default()).unwrap();
        for w in [
            Word::power(1, 3),
            Word::free_reduce([(1, 1), (0, 1)]).pow(2),
            Word::free_reduce([(0, 1), (1, -1)]).pow(2),
            Word::free_reduce([(1, 1), (0, 1), (1, 1), (0, 1)]),
        ] {
            let proof = prover.prove_trivial(&w).unwrap().unwrap();
            proof.verify(&p).unwrap();
            assert_eq!(proof.start, w);
            assert!(proof.end.is_identity());
        }
        assert!(prover.prove_trivial(&Word::generator(0)).unwrap().is_none());
    }
}
