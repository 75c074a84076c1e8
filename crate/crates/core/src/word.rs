//! Freely reduced words stored as syllables `(generator, exponent)`.

use std::cmp::Ordering;
use std::fmt;

/// A single power `g^exp` inside a word. `exp` is never zero in a reduced word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Syllable {
    pub gen: u32,
    pub exp: i64,
}

/// One letter `g` or `g^-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub gen: u32,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: u32, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn exp(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// A freely reduced word. The empty word is the identity.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<Syllable>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(gen: u32) -> Self {
        Word::power(gen, 1)
    }

    pub fn power(gen: u32, exp: i64) -> Self {
        if exp == 0 {
            Word::identity()
        } else {
            Word {
                syllables: vec![Syllable { gen, exp }],
            }
        }
    }

    /// Free reduction of an arbitrary sequence of powers. Zero exponents are dropped.
    pub fn free_reduce<I>(raw: I) -> Self
    where
        I: IntoIterator<Item = (u32, i64)>,
    {
        let mut out: Vec<Syllable> = Vec::new();
        for (gen, exp) in raw {
            push_syllable(&mut out, gen, exp);
        }
        Word { syllables: out }
    }

    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        Word::free_reduce(letters.into_iter().map(|l| (l.gen, l.exp())))
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn syllable_len(&self) -> usize {
        self.syllables.len()
    }

    /// Number of letters, i.e. the sum of absolute exponents.
    pub fn letter_len(&self) -> usize {
        self.syllables.iter().map(|s| s.exp.unsigned_abs() as usize).sum()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        self.syllables.iter().flat_map(|s| {
            let l = Letter::new(s.gen, s.exp < 0);
            std::iter::repeat_n(l, s.exp.unsigned_abs() as usize)
        })
    }

    pub fn letter_vec(&self) -> Vec<Letter> {
        self.letters().collect()
    }

    /// Largest generator index used, if any.
    pub fn max_generator(&self) -> Option<u32> {
        self.syllables.iter().map(|s| s.gen).max()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut out = self.syllables.clone();
        for s in &other.syllables {
            push_syllable(&mut out, s.gen, s.exp);
        }
        Word { syllables: out }
    }

    pub fn invert(&self) -> Word {
        Word {
            syllables: self
                .syllables
                .iter()
                .rev()
                .map(|s| Syllable {
                    gen: s.gen,
                    exp: -s.exp,
                })
                .collect(),
        }
    }

    /// `by^-1 · self · by`, freely reduced.
    pub fn conjugate(&self, by: &Word) -> Word {
        by.invert().concat(self).concat(by)
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.invert() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Splits after `pos` letters. Both halves of a reduced word are reduced.
    pub fn split_at_letter(&self, pos: usize) -> (Word, Word) {
        let mut left = Vec::new();
        let mut right = Vec::new();
        let mut seen = 0usize;
        for s in &self.syllables {
            let len = s.exp.unsigned_abs() as usize;
            if seen >= pos {
                right.push(*s);
            } else if seen + len <= pos {
                left.push(*s);
            } else {
                let take = (pos - seen) as i64;
                let sign = s.exp.signum();
                left.push(Syllable {
                    gen: s.gen,
                    exp: sign * take,
                });
                right.push(Syllable {
                    gen: s.gen,
                    exp: s.exp - sign * take,
                });
            }
            seen += len;
        }
        (Word { syllables: left }, Word { syllables: right })
    }

    /// `prefix · piece · suffix` where the split happens after `pos` letters.
    pub fn insert_at(&self, pos: usize, piece: &Word) -> Word {
        let (left, right) = self.split_at_letter(pos);
        left.concat(piece).concat(&right)
    }

    /// Removes matching inverse letters from both ends.
    pub fn cyclically_reduce(&self) -> Word {
        let mut syl = self.syllables.clone();
        loop {
            if syl.len() < 2 {
                break;
            }
            let first = syl[0];
            let last = syl[syl.len() - 1];
            if first.gen != last.gen {
                break;
            }
            // merge the two end syllables into the first one
            let merged = first.exp + last.exp;
            syl.pop();
            if merged == 0 {
                syl.remove(0);
            } else {
                syl[0].exp = merged;
                break;
            }
        }
        Word { syllables: syl }
    }

    /// Shortlex comparison: letter length first, then letter by letter with
    /// `x0 < x0^-1 < x1 < x1^-1 < ...`.
    pub fn shortlex_cmp(&self, other: &Word) -> Ordering {
        self.letter_len()
            .cmp(&other.letter_len())
            .then_with(|| self.letters().cmp(other.letters()))
    }
}

fn push_syllable(out: &mut Vec<Syllable>, gen: u32, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(top) = out.last_mut() {
        if top.gen == gen {
            top.exp += exp;
            if top.exp == 0 {
                out.pop();
            }
            return;
        }
    }
    out.push(Syllable { gen, exp });
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, s) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if s.exp == 1 {
                write!(f, "x{}", s.gen)?;
            } else {
                write!(f, "x{}^{}", s.gen, s.exp)?;
            }
        }
        Ok(())
    }
}
