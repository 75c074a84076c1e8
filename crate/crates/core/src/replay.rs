//! Word identities behind the non-orderability argument, replayed for
//! concrete parameters.
//!
//! I1 to I3 hold in the group of the standard presentation and are proven by
//! rewriting. I4pos and I4neg are free-group telescoping identities and must
//! hold by free reduction alone.

use std::fmt;
use std::ops::RangeInclusive;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::budget::SearchBudget;
use crate::error::{Error, Result};
use crate::family::{build_standard_presentation, std_a, std_b, FamilyParams};
use crate::presentation::Presentation;
use crate::proof::EqualityProof;
use crate::rewrite::{ProveOutcome, Rewriter};
use crate::word::Word;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IdentityId {
    I1,
    I2,
    I3,
    I4pos,
    I4neg,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::I1,
        IdentityId::I2,
        IdentityId::I3,
        IdentityId::I4pos,
        IdentityId::I4neg,
    ];

    pub fn takes_exponent(self) -> bool {
        self != IdentityId::I3
    }

    /// Whether the identity is stated for this exponent.
    pub fn accepts(self, m: i64) -> bool {
        match self {
            IdentityId::I4pos => m >= 0,
            IdentityId::I4neg => m < 0,
            _ => true,
        }
    }

    pub fn is_free(self) -> bool {
        matches!(self, IdentityId::I4pos | IdentityId::I4neg)
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityInstance {
    pub identity: IdentityId,
    pub params: FamilyParams,
    /// 1-based.
    pub i: usize,
    pub m: Option<i64>,
}

impl IdentityInstance {
    pub fn new(identity: IdentityId, params: FamilyParams, i: usize, m: Option<i64>) -> Result<Self> {
        if i == 0 || i > params.n() {
            return Err(Error::IndexOutOfRange { i, n: params.n() });
        }
        let shape = |reason: &str| Error::InstanceShape {
            identity: identity.to_string(),
            reason: reason.to_string(),
        };
        match (identity.takes_exponent(), m) {
            (true, None) => return Err(shape("needs an exponent")),
            (false, Some(_)) => return Err(shape("takes no exponent")),
            (true, Some(m)) if !identity.accepts(m) => {
                return Err(shape(if identity == IdentityId::I4pos {
                    "needs m >= 0"
                } else {
                    "needs m < 0"
                }))
            }
            _ => {}
        }
        Ok(IdentityInstance {
            identity,
            params,
            i,
            m,
        })
    }

    /// The displayed forms; every later form is to be proven equal to the first.
    pub fn forms(&self) -> Vec<Word> {
        let params = &self.params;
        let i = self.i as i64;
        let a = |j: i64| Word::generator(std_a(params, j));
        let b = |j: i64| Word::generator(std_b(params, j));
        let ap = |j: i64, e: i64| Word::power(std_a(params, j), e);
        let cat = |ws: &[Word]| ws.iter().fold(Word::identity(), |acc, w| acc.concat(w));
        let m = self.m.unwrap_or(0);
        let k = params.k_at(i);
        match self.identity {
            IdentityId::I1 => vec![
                cat(&[a(i + 1).concat(&a(i).invert()).pow(m), b(i).invert()]),
                cat(&[b(i).invert(), ap(i, m)]),
            ],
            IdentityId::I2 => vec![
                cat(&[b(i - 1).invert(), ap(i, m)]),
                cat(&[b(i).invert(), a(i).invert(), b(i).invert(), ap(i, m + k)]),
                cat(&[b(i).invert(), a(i + 1).invert(), b(i).invert(), ap(i, m + k + 1)]),
            ],
            IdentityId::I3 => vec![
                cat(&[b(i).invert(), ap(i, k)]),
                cat(&[a(i), b(i), b(i - 1).invert()]),
                cat(&[b(i), a(i + 1), cat(&[b(i - 1), a(i)]).invert()]),
            ],
            IdentityId::I4pos | IdentityId::I4neg => vec![
                self.telescoped_lhs(),
                self.telescoped_rhs(),
            ],
        }
    }

    fn telescoped_lhs(&self) -> Word {
        let params = &self.params;
        let i = self.i as i64;
        let m = self.m.unwrap_or(0);
        Word::free_reduce([(std_a(params, i + 1), 1), (std_a(params, i), -1)]).pow(m)
    }

    /// The displayed telescoping product, reduced only once fully assembled.
    fn telescoped_rhs(&self) -> Word {
        let params = &self.params;
        let i = self.i as i64;
        let m = self.m.unwrap_or(0);
        let (up, ai) = (std_a(params, i + 1), std_a(params, i));
        let mut raw: Vec<(u32, i64)> = vec![(up, m)];
        if m >= 0 {
            for j in (0..m).rev() {
                raw.extend([(up, -j), (ai, -1), (up, j)]);
            }
        } else {
            for j in (1..=-m).rev() {
                raw.extend([(up, j), (ai, 1), (up, -j)]);
            }
        }
        Word::free_reduce(raw)
    }

    pub fn describe(&self, p: &Presentation) -> String {
        let forms: Vec<String> = self.forms().iter().map(|w| p.format_word(w)).collect();
        format!("{} i={} m={:?}: {}", self.identity, self.i, self.m, forms.join(" = "))
    }
}

#[derive(Clone, Debug)]
pub enum ReplayOutcome {
    /// One proof per later form, each from the first form.
    Proved(Vec<EqualityProof>),
    Unknown { states: usize },
}

impl ReplayOutcome {
    pub fn proof_steps(&self) -> usize {
        match self {
            ReplayOutcome::Proved(proofs) => proofs.iter().map(EqualityProof::len).sum(),
            ReplayOutcome::Unknown { .. } => 0,
        }
    }
}

/// Replays one instance in the standard presentation of its parameters.
pub fn replay_identity(inst: &IdentityInstance, budget: &SearchBudget) -> Result<ReplayOutcome> {
    let p = build_standard_presentation(&inst.params);
    replay_in(&p, &Rewriter::new(&p), inst, budget)
}

fn replay_in(
    p: &Presentation,
    rewriter: &Rewriter<'_>,
    inst: &IdentityInstance,
    budget: &SearchBudget,
) -> Result<ReplayOutcome> {
    let forms = inst.forms();
    let first = &forms[0];
    if inst.identity.is_free() {
        // both sides are already freely reduced words
        if forms[1] != *first {
            return Err(Error::FreeIdentity(inst.describe(p)));
        }
        return Ok(ReplayOutcome::Proved(vec![EqualityProof::reflexive(first.clone())]));
    }
    let mut proofs = Vec::with_capacity(forms.len() - 1);
    for form in &forms[1..] {
        match rewriter.prove_equal(first, form, budget) {
            ProveOutcome::Proved(proof) => {
                proof.verify(p)?;
                proofs.push(proof);
            }
            ProveOutcome::Unknown(report) => return Ok(ReplayOutcome::Unknown { states: report.states }),
        }
    }
    Ok(ReplayOutcome::Proved(proofs))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReplayStatus {
    Proved,
    Unknown,
    Error,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportEntry {
    pub identity: IdentityId,
    pub i: usize,
    pub m: Option<i64>,
    pub status: ReplayStatus,
    pub proof_steps: usize,
    pub millis: u64,
    /// Steps of each proof from the first displayed form.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub form_steps: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub budget: SearchBudget,
    /// Measure wall time per instance; zero otherwise.
    pub timing: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            budget: SearchBudget::default(),
            timing: true,
        }
    }
}

/// Every instance for `i` in `1..=n` and `m` in the range, ordered by
/// identity, then `i`, then `m`. I3 has no exponent and appears once per `i`
/// when the range is non-empty.
pub fn suite_instances(params: &FamilyParams, m_range: RangeInclusive<i64>) -> Vec<IdentityInstance> {
    if m_range.is_empty() {
        return Vec::new();
    }
    let mut out = Vec::new();
    for id in IdentityId::ALL {
        for i in 1..=params.n() {
            if !id.takes_exponent() {
                out.push(IdentityInstance::new(id, params.clone(), i, None).expect("valid shape"));
                continue;
            }
            for m in m_range.clone().filter(|&m| id.accepts(m)) {
                out.push(IdentityInstance::new(id, params.clone(), i, Some(m)).expect("valid shape"));
            }
        }
    }
    out
}

/// Runs the suite in parallel; an Unknown is retried once at four times the
/// budget before it is recorded.
pub fn replay_suite(params: &FamilyParams, m_range: RangeInclusive<i64>, opts: &SuiteOptions) -> Vec<ReportEntry> {
    let p = build_standard_presentation(params);
    let rewriter = Rewriter::new(&p);
    suite_instances(params, m_range)
        .par_iter()
        .map(|inst| {
            let start = Instant::now();
            let mut outcome = replay_in(&p, &rewriter, inst, &opts.budget);
            if matches!(outcome, Ok(ReplayOutcome::Unknown { .. })) {
                outcome = replay_in(&p, &rewriter, inst, &opts.budget.scaled(4));
            }
            let millis = if opts.timing {
                start.elapsed().as_millis() as u64
            } else {
                0
            };
            let (status, proof_steps, form_steps, error) = match &outcome {
                Ok(ReplayOutcome::Proved(proofs)) => (
                    ReplayStatus::Proved,
                    proofs.iter().map(EqualityProof::len).sum(),
                    if proofs.len() > 1 {
                        proofs.iter().map(EqualityProof::len).collect()
                    } else {
                        Vec::new()
                    },
                    None,
                ),
                Ok(ReplayOutcome::Unknown { .. }) => (ReplayStatus::Unknown, 0, Vec::new(), None),
                Err(e) => (ReplayStatus::Error, 0, Vec::new(), Some(e.to_string())),
            };
            ReportEntry {
                identity: inst.identity,
                i: inst.i,
                m: inst.m,
                status,
                proof_steps,
                millis,
                form_steps,
                error,
            }
        })
        .collect()
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SuiteSummary {
    pub proved: usize,
    pub unknown: usize,
    pub error: usize,
}

pub fn summarize(report: &[ReportEntry]) -> SuiteSummary {
    let mut s = SuiteSummary::default();
    for e in report {
        match e.status {
            ReplayStatus::Proved => s.proved += 1,
            ReplayStatus::Unknown => s.unknown += 1,
            ReplayStatus::Error => s.error += 1,
        }
    }
    s
}
