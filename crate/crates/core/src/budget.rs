/// Limits shared by the rewriting search, coset enumeration and the
/// orderability search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Words visited by one rewriting search (or nodes of a decision tree).
    pub max_states: usize,
    /// Longest intermediate word, in syllables.
    pub max_word_length: usize,
    /// Cosets that may be defined during one enumeration.
    pub max_cosets: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_states: 200_000,
            max_word_length: 64,
            max_cosets: 2_000_000,
        }
    }
}

impl SearchBudget {
    pub fn new(max_states: usize, max_word_length: usize, max_cosets: usize) -> Self {
        SearchBudget {
            max_states: max_states.max(1),
            max_word_length: max_word_length.max(1),
            max_cosets: max_cosets.max(1),
        }
    }

    /// Every limit multiplied by `factor`.
    pub fn scaled(&self, factor: usize) -> Self {
        SearchBudget {
            max_states: self.max_states.saturating_mul(factor),
            max_word_length: self.max_word_length.saturating_mul(factor),
            max_cosets: self.max_cosets.saturating_mul(factor),
        }
    }
}
