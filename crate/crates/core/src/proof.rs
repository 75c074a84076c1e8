//! Replayable equality proofs.
//!
//! A step inserts `c · R · c^-1` after `position` letters of the current word
//! and freely reduces, where `R` is a cyclic rotation of a relator (or of its
//! inverse) and `c` is an optional conjugator. Search-produced steps leave the
//! conjugator empty; composed proofs move everything to position 0 and carry
//! the prefix in the conjugator instead.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::presentation::{NamedWord, Presentation};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ProofStep {
    pub position: usize,
    pub relator: usize,
    pub rotation: usize,
    pub inverse: bool,
    pub conjugator: Word,
}

impl ProofStep {
    pub fn at(position: usize, relator: usize, rotation: usize, inverse: bool) -> Self {
        ProofStep {
            position,
            relator,
            rotation,
            inverse,
            conjugator: Word::identity(),
        }
    }
}

/// The rotated relator piece `rot(R)` or `rot(R)^-1`.
pub fn relator_piece(p: &Presentation, relator: usize, rotation: usize, inverse: bool) -> Result<Word> {
    let r = p.relators().get(relator).ok_or_else(|| Error::Replay {
        step: 0,
        reason: format!("relator index {relator} out of range"),
    })?;
    let letters = r.letter_vec();
    if letters.is_empty() {
        if rotation != 0 {
            return Err(Error::Replay {
                step: 0,
                reason: format!("rotation {rotation} of an empty relator"),
            });
        }
        return Ok(Word::identity());
    }
    if rotation >= letters.len() {
        return Err(Error::Replay {
            step: 0,
            reason: format!("rotation {rotation} exceeds relator length {}", letters.len()),
        });
    }
    let rotated = Word::from_letters(letters[rotation..].iter().chain(&letters[..rotation]).copied());
    Ok(if inverse { rotated.invert() } else { rotated })
}

/// Applies one step to `word`.
pub fn apply_step(p: &Presentation, word: &Word, step: &ProofStep) -> Result<Word> {
    if step.position > word.letter_len() {
        return Err(Error::Replay {
            step: 0,
            reason: format!(
                "position {} beyond word of {} letters",
                step.position,
                word.letter_len()
            ),
        });
    }
    p.check_word(&step.conjugator)?;
    let piece = relator_piece(p, step.relator, step.rotation, step.inverse)?;
    let inserted = step.conjugator.concat(&piece).concat(&step.conjugator.invert());
    Ok(word.insert_at(step.position, &inserted))
}

/// Replays `steps` from `start`, returning every intermediate word (including
/// `start` and the final word).
pub fn replay_steps(p: &Presentation, start: &Word, steps: &[ProofStep]) -> Result<Vec<Word>> {
    p.check_word(start)?;
    let mut words = Vec::with_capacity(steps.len() + 1);
    words.push(start.clone());
    for (i, step) in steps.iter().enumerate() {
        let next = apply_step(p, words.last().unwrap(), step).map_err(|e| match e {
            Error::Replay { reason, .. } => Error::Replay { step: i, reason },
            other => other,
        })?;
        words.push(next);
    }
    Ok(words)
}

/// `start = end` in the group, witnessed by `steps`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualityProof {
    pub start: Word,
    pub end: Word,
    pub steps: Vec<ProofStep>,
}

impl EqualityProof {
    /// Zero-step proof `w = w`.
    pub fn reflexive(w: Word) -> Self {
        EqualityProof {
            start: w.clone(),
            end: w,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Replays the steps and checks the final word is `end`.
    pub fn verify(&self, p: &Presentation) -> Result<()> {
        let words = replay_steps(p, &self.start, &self.steps)?;
        let last = words.last().unwrap();
        if *last != self.end {
            return Err(Error::Replay {
                step: self.steps.len(),
                reason: format!(
                    "replay ends at {} instead of {}",
                    p.format_word(last),
                    p.format_word(&self.end)
                ),
            });
        }
        Ok(())
    }

    /// Proof of `end = start`.
    pub fn reversed(&self, p: &Presentation) -> Result<EqualityProof> {
        let words = replay_steps(p, &self.start, &self.steps)?;
        let mut steps = Vec::with_capacity(self.steps.len());
        for (step, before) in self.steps.iter().zip(&words).rev() {
            // W_{t+1} = c' R c'^-1 W_t with c' = W_t[..pos] · c, hence
            // W_t = c' R^-1 c'^-1 W_{t+1}.
            let (prefix, _) = before.split_at_letter(step.position);
            steps.push(ProofStep {
                position: 0,
                relator: step.relator,
                rotation: step.rotation,
                inverse: !step.inverse,
                conjugator: prefix.concat(&step.conjugator),
            });
        }
        Ok(EqualityProof {
            start: self.end.clone(),
            end: self.start.clone(),
            steps,
        })
    }

    /// Proof of `left·start·right = left·end·right`.
    pub fn in_context(&self, p: &Presentation, left: &Word, right: &Word) -> Result<EqualityProof> {
        if left.is_identity() && right.is_identity() {
            return Ok(self.clone());
        }
        let words = replay_steps(p, &self.start, &self.steps)?;
        let steps = self
            .steps
            .iter()
            .zip(&words)
            .map(|(step, before)| {
                let (prefix, _) = before.split_at_letter(step.position);
                ProofStep {
                    position: 0,
                    relator: step.relator,
                    rotation: step.rotation,
                    inverse: step.inverse,
                    conjugator: left.concat(&prefix).concat(&step.conjugator),
                }
            })
            .collect();
        Ok(EqualityProof {
            start: left.concat(&self.start).concat(right),
            end: left.concat(&self.end).concat(right),
            steps,
        })
    }

    /// Chains `self: u = v` with `next: v = w`.
    pub fn then(mut self, next: EqualityProof) -> Result<EqualityProof> {
        if self.end != next.start {
            return Err(Error::Replay {
                step: self.steps.len(),
                reason: "chained proofs do not meet".to_string(),
            });
        }
        self.steps.extend(next.steps);
        self.end = next.end;
        Ok(self)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofStepJson {
    pub position: usize,
    pub relator: usize,
    #[serde(default)]
    pub rotation: usize,
    #[serde(default)]
    pub inverse: bool,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub conjugator: NamedWord,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EqualityProofJson {
    pub start: NamedWord,
    pub end: NamedWord,
    pub steps: Vec<ProofStepJson>,
}

pub fn step_to_json(p: &Presentation, step: &ProofStep) -> ProofStepJson {
    ProofStepJson {
        position: step.position,
        relator: step.relator,
        rotation: step.rotation,
        inverse: step.inverse,
        conjugator: p.word_to_named(&step.conjugator),
    }
}

pub fn step_from_json(p: &Presentation, json: &ProofStepJson) -> Result<ProofStep> {
    Ok(ProofStep {
        position: json.position,
        relator: json.relator,
        rotation: json.rotation,
        inverse: json.inverse,
        conjugator: p.word_from_named(&json.conjugator)?,
    })
}

impl EqualityProof {
    pub fn to_json(&self, p: &Presentation) -> EqualityProofJson {
        EqualityProofJson {
            start: p.word_to_named(&self.start),
            end: p.word_to_named(&self.end),
            steps: self.steps.iter().map(|s| step_to_json(p, s)).collect(),
        }
    }

    pub fn from_json(p: &Presentation, json: &EqualityProofJson) -> Result<Self> {
        Ok(EqualityProof {
            start: p.word_from_named(&json.start)?,
            end: p.word_from_named(&json.end)?,
            steps: json
                .steps
                .iter()
                .map(|s| step_from_json(p, s))
                .collect::<Result<_>>()?,
        })
    }
}
