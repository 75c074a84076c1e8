//! Two-sided check that a substitution of generators identifies two
//! presentations of the same group.

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::presentation::Presentation;
use crate::proof::EqualityProof;
use crate::rewrite::{ProveOutcome, Rewriter};
use crate::word::Word;

/// Images of the source generators, indexed by source generator id, as words
/// over the target alphabet.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Substitution {
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(images: Vec<Word>) -> Self {
        Substitution { images }
    }

    /// Identity map on `p`'s generators.
    pub fn identity(p: &Presentation) -> Self {
        Substitution {
            images: (0..p.generator_count() as u32).map(Word::generator).collect(),
        }
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, gen: u32) -> &Word {
        &self.images[gen as usize]
    }

    pub fn apply(&self, w: &Word) -> Word {
        w.syllables()
            .iter()
            .fold(Word::identity(), |acc, s| acc.concat(&self.images[s.gen as usize].pow(s.exp)))
    }
}

#[derive(Clone, Debug)]
pub enum TietzeOutcome {
    /// Proofs for every raw relator image (in the target) and every target
    /// relator (in the substituted raw presentation).
    Verified {
        forward: Vec<EqualityProof>,
        backward: Vec<EqualityProof>,
        image: Presentation,
    },
    Unknown {
        /// Which direction failed, and the relator index within it.
        direction: Direction,
        relator: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// Raw relator image proven trivial in the target.
    Forward,
    /// Target relator proven trivial in the substituted raw presentation.
    Backward,
}

impl TietzeOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, TietzeOutcome::Verified { .. })
    }
}

pub fn check_tietze_equivalence(
    raw: &Presentation,
    target: &Presentation,
    substitution: &Substitution,
    budget: &SearchBudget,
) -> Result<TietzeOutcome> {
    if substitution.images.len() != raw.generator_count() {
        return Err(Error::SubstitutionSize {
            expected: raw.generator_count(),
            got: substitution.images.len(),
        });
    }
    for img in &substitution.images {
        target.check_word(img)?;
    }

    let rw_target = Rewriter::new(target);
    let mut forward = Vec::with_capacity(raw.relators().len());
    for (i, r) in raw.relators().iter().enumerate() {
        let img = substitution.apply(r);
        match rw_target.prove_equal(&img, &Word::identity(), budget) {
            ProveOutcome::Proved(p) => forward.push(p),
            ProveOutcome::Unknown(_) => {
                return Ok(TietzeOutcome::Unknown {
                    direction: Direction::Forward,
                    relator: i,
                })
            }
        }
    }

    let names = target.generators().iter().map(|g| g.name.clone()).collect();
    let image_relators = raw
        .relators()
        .iter()
        .map(|r| substitution.apply(r))
        .filter(|w| !w.is_identity())
        .collect();
    let image = Presentation::new(names, image_relators, format!("image of {}", raw.label()))?;
    let rw_image = Rewriter::new(&image);
    let mut backward = Vec::with_capacity(target.relators().len());
    for (i, r) in target.relators().iter().enumerate() {
        match rw_image.prove_equal(r, &Word::identity(), budget) {
            ProveOutcome::Proved(p) => backward.push(p),
            ProveOutcome::Unknown(_) => {
                return Ok(TietzeOutcome::Unknown {
                    direction: Direction::Backward,
                    relator: i,
                })
            }
        }
    }
    Ok(TietzeOutcome::Verified {
        forward,
        backward,
        image,
    })
}
