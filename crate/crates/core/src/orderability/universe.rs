//! A finite ball of group elements with proof-backed equality classes.

use std::collections::{HashMap, VecDeque};

use crate::budget::SearchBudget;
use crate::presentation::Presentation;
use crate::proof::{EqualityProof, ProofStep};
use crate::rewrite::Rewriter;
use crate::word::{Letter, Word};

#[derive(Clone, Debug)]
pub struct ElementUniverse {
    /// Every freely reduced word of letter length at most the radius, in
    /// shortlex order. Index 0 is the identity.
    pub representatives: Vec<Word>,
    /// Class id of each representative: the smallest index in its class.
    pub class_of: Vec<usize>,
    /// `to_canonical[i]`: proof `representatives[i] -> representatives[class_of[i]]`.
    pub to_canonical: Vec<EqualityProof>,
    pub radius: usize,
    /// Rewriting states spent while merging classes.
    pub states: usize,
    index: HashMap<Word, usize>,
}

/// All reduced words with at most `radius` letters, shortlex sorted.
pub fn ball(generators: usize, radius: usize) -> Vec<Word> {
    let mut out = vec![Word::identity()];
    let mut layer: Vec<Vec<Letter>> = vec![Vec::new()];
    for _ in 0..radius {
        let mut next = Vec::new();
        for w in &layer {
            for g in 0..generators as u32 {
                for inverse in [false, true] {
                    let l = Letter::new(g, inverse);
                    if w.last() == Some(&l.inv()) {
                        continue;
                    }
                    let mut v = w.clone();
                    v.push(l);
                    next.push(v);
                }
            }
        }
        out.extend(next.iter().map(|v| Word::from_letters(v.iter().copied())));
        layer = next;
    }
    out.sort_by(Word::shortlex_cmp);
    out
}

impl ElementUniverse {
    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.index.get(w).copied()
    }

    pub fn class_count(&self) -> usize {
        self.class_of.iter().enumerate().filter(|(i, c)| *i == **c).count()
    }

    /// Class ids in shortlex order of their canonical words.
    pub fn classes(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.class_of[i] == i).collect()
    }

    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.class_of[i] == self.class_of[j]
    }

    /// Indices proven equal to the identity.
    pub fn trivial_set(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.class_of[i] == 0).collect()
    }

    /// Every non-canonical member paired with its canonical word and the proof.
    pub fn equal_pairs(&self) -> Vec<(usize, usize, &EqualityProof)> {
        (0..self.len())
            .filter(|&i| self.class_of[i] != i)
            .map(|i| (i, self.class_of[i], &self.to_canonical[i]))
            .collect()
    }

    /// Proof `representatives[i] -> representatives[j]` when they share a class.
    pub fn proof_between(&self, p: &Presentation, i: usize, j: usize) -> Option<EqualityProof> {
        if !self.same_class(i, j) {
            return None;
        }
        let back = self.to_canonical[j].reversed(p).ok()?;
        self.to_canonical[i].clone().then(back).ok()
    }

    /// Class of the inverses of the members of class `c`.
    pub fn inverse_class(&self, c: usize) -> usize {
        let inv = self.representatives[c].invert();
        self.class_of[self.index[&inv]]
    }
}

struct Forest {
    words: Vec<Word>,
    parent: Vec<Option<(usize, ProofStep)>>,
    root: Vec<usize>,
}

impl Forest {
    fn path(&self, id: usize) -> EqualityProof {
        let mut steps = Vec::new();
        let mut cur = id;
        while let Some((parent, step)) = &self.parent[cur] {
            steps.push(step.clone());
            cur = *parent;
        }
        steps.reverse();
        EqualityProof {
            start: self.words[cur].clone(),
            end: self.words[id].clone(),
            steps,
        }
    }
}

fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

/// Builds the ball of the given radius and merges elements whose equality the
/// rewriting search can prove.
///
/// All ball elements are searched from at once: each rewriting state belongs to
/// the element whose search reached it first, and a state reached from two
/// elements proves them equal. Proven equalities are closed under inversion.
pub fn build_universe(p: &Presentation, radius: usize, budget: &SearchBudget) -> ElementUniverse {
    let representatives = ball(p.generator_count(), radius);
    let n = representatives.len();
    let index: HashMap<Word, usize> = representatives
        .iter()
        .enumerate()
        .map(|(i, w)| (w.clone(), i))
        .collect();

    let rewriter = Rewriter::new(p);
    let mut forest = Forest {
        words: representatives.clone(),
        parent: vec![None; n],
        root: (0..n).collect(),
    };
    let mut seen: HashMap<Word, usize> = index.clone();
    let mut uf: Vec<usize> = (0..n).collect();
    let mut components = n;
    let mut edges: Vec<(usize, usize, EqualityProof)> = Vec::new();
    let mut queue: VecDeque<usize> = (0..n).collect();

    'search: while let Some(x) = queue.pop_front() {
        if components == 1 || forest.words.len() >= budget.max_states {
            break;
        }
        let word = forest.words[x].clone();
        for (next, step) in rewriter.moves(&word, budget.max_word_length) {
            if let Some(&y) = seen.get(&next) {
                let (ra, rb) = (forest.root[x], forest.root[y]);
                let (ca, cb) = (find(&mut uf, ra), find(&mut uf, rb));
                if ca == cb {
                    continue;
                }
                let mut proof = forest.path(x);
                proof.steps.push(step);
                proof.end = next;
                let back = forest.path(y).reversed(p).expect("search paths replay");
                edges.push((ra, rb, proof.then(back).expect("paths meet")));
                uf[ca.max(cb)] = ca.min(cb);
                components -= 1;
                if components == 1 {
                    break 'search;
                }
                continue;
            }
            let id = forest.words.len();
            seen.insert(next.clone(), id);
            forest.words.push(next);
            forest.parent.push(Some((x, step)));
            forest.root.push(forest.root[x]);
            queue.push_back(id);
            if forest.words.len() >= budget.max_states {
                break 'search;
            }
        }
    }
    let states = forest.words.len() - n;

    // inverse closure: u -> v gives v^-1 -> u^-1
    let direct = edges.len();
    for e in 0..direct {
        let (i, j) = (edges[e].0, edges[e].1);
        let (ui, uj) = (&representatives[i], &representatives[j]);
        let (ii, ij) = (index[&ui.invert()], index[&uj.invert()]);
        if let Ok(proof) = edges[e].2.in_context(p, &uj.invert(), &ui.invert()) {
            edges.push((ij, ii, proof));
        }
    }

    let mut uf: Vec<usize> = (0..n).collect();
    let mut adjacency: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (e, (i, j, _)) in edges.iter().enumerate() {
        adjacency[*i].push(e);
        adjacency[*j].push(e);
        let (a, b) = (find(&mut uf, *i), find(&mut uf, *j));
        uf[a.max(b)] = a.min(b);
    }
    let class_of: Vec<usize> = (0..n).map(|i| find(&mut uf, i)).collect();

    let mut to_canonical: Vec<Option<EqualityProof>> = vec![None; n];
    for c in 0..n {
        if class_of[c] != c {
            continue;
        }
        to_canonical[c] = Some(EqualityProof::reflexive(representatives[c].clone()));
        let mut queue = VecDeque::from([c]);
        while let Some(u) = queue.pop_front() {
            for &e in &adjacency[u] {
                let (i, j, proof) = &edges[e];
                let v = if *i == u { *j } else { *i };
                if to_canonical[v].is_some() {
                    continue;
                }
                // proof of v -> u, then u -> canonical
                let v_to_u = if *i == u {
                    proof.reversed(p).expect("edge replays")
                } else {
                    proof.clone()
                };
                let done = to_canonical[u].clone().unwrap();
                to_canonical[v] = Some(v_to_u.then(done).expect("edge meets path"));
                queue.push_back(v);
            }
        }
    }

    ElementUniverse {
        representatives,
        class_of,
        to_canonical: to_canonical.into_iter().map(|p| p.expect("class is connected")).collect(),
        radius,
        states,
        index,
    }
}
