//! Finite presentations and their JSON form.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub id: u32,
    pub name: String,
}

/// Generators plus relators read as `r = 1`.
///
/// Relators are cyclically reduced on construction; the words as supplied are
/// kept in `original_relators`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<Generator>,
    relators: Vec<Word>,
    original_relators: Vec<Word>,
    label: String,
    by_name: HashMap<String, u32>,
}

/// A word written with generator names, `[["a1", 2], ["b1", -1]]` in JSON.
pub type NamedWord = Vec<(String, i64)>;

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PresentationJson {
    pub generators: Vec<String>,
    pub relators: Vec<NamedWord>,
    pub label: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub original_relators: Option<Vec<NamedWord>>,
}

impl Presentation {
    pub fn new<S: Into<String>>(names: Vec<String>, relators: Vec<Word>, label: S) -> Result<Self> {
        let mut by_name = HashMap::with_capacity(names.len());
        let mut generators = Vec::with_capacity(names.len());
        for (id, name) in names.into_iter().enumerate() {
            if by_name.insert(name.clone(), id as u32).is_some() {
                return Err(Error::DuplicateGenerator(name));
            }
            generators.push(Generator { id: id as u32, name });
        }
        let size = generators.len();
        for r in &relators {
            check_alphabet(r, size)?;
        }
        let reduced = relators.iter().map(Word::cyclically_reduce).collect();
        Ok(Presentation {
            generators,
            relators: reduced,
            original_relators: relators,
            label: label.into(),
            by_name,
        })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn original_relators(&self) -> &[Word] {
        &self.original_relators
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn generator_id(&self, name: &str) -> Option<u32> {
        self.by_name.get(name).copied()
    }

    pub fn generator_name(&self, id: u32) -> &str {
        &self.generators[id as usize].name
    }

    /// The word `name^1`.
    pub fn gen(&self, name: &str) -> Result<Word> {
        self.generator_id(name)
            .map(Word::generator)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        check_alphabet(w, self.generators.len())
    }

    /// Product of two words after checking both belong to this alphabet.
    pub fn concat(&self, u: &Word, v: &Word) -> Result<Word> {
        if self.check_word(u).is_err() || self.check_word(v).is_err() {
            return Err(Error::AlphabetMismatch);
        }
        Ok(u.concat(v))
    }

    pub fn word_from_named(&self, named: &[(String, i64)]) -> Result<Word> {
        let mut raw = Vec::with_capacity(named.len());
        for (name, exp) in named {
            let id = self
                .generator_id(name)
                .ok_or_else(|| Error::UnknownGenerator(name.clone()))?;
            raw.push((id, *exp));
        }
        Ok(Word::free_reduce(raw))
    }

    pub fn word_to_named(&self, w: &Word) -> NamedWord {
        w.syllables()
            .iter()
            .map(|s| (self.generator_name(s.gen).to_string(), s.exp))
            .collect()
    }

    /// Human-readable form, e.g. `a2^-1 b1^-1 a1 b1 a1`.
    pub fn format_word(&self, w: &Word) -> String {
        if w.is_identity() {
            return "1".to_string();
        }
        w.syllables()
            .iter()
            .map(|s| {
                let name = self.generator_name(s.gen);
                if s.exp == 1 {
                    name.to_string()
                } else {
                    format!("{name}^{}", s.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Parses `a1^2 b1^-1`-style text; `1` or an empty string is the identity.
    pub fn parse_word(&self, text: &str) -> Result<Word> {
        let mut raw = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let exp = e
                        .parse::<i64>()
                        .map_err(|_| Error::UnknownGenerator(token.to_string()))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            let id = self
                .generator_id(name)
                .ok_or_else(|| Error::UnknownGenerator(name.to_string()))?;
            raw.push((id, exp));
        }
        Ok(Word::free_reduce(raw))
    }

    pub fn to_json(&self) -> PresentationJson {
        let originals_differ = self.original_relators != self.relators;
        PresentationJson {
            generators: self.generators.iter().map(|g| g.name.clone()).collect(),
            relators: self.relators.iter().map(|r| self.word_to_named(r)).collect(),
            label: self.label.clone(),
            original_relators: originals_differ.then(|| {
                self.original_relators
                    .iter()
                    .map(|r| self.word_to_named(r))
                    .collect()
            }),
        }
    }

    pub fn from_json(json: &PresentationJson) -> Result<Self> {
        let shell = Presentation::new(json.generators.clone(), Vec::new(), json.label.clone())?;
        let relators = json
            .relators
            .iter()
            .map(|r| shell.word_from_named(r))
            .collect::<Result<Vec<_>>>()?;
        Presentation::new(json.generators.clone(), relators, json.label.clone())
    }
}

fn check_alphabet(w: &Word, size: usize) -> Result<()> {
    match w.max_generator() {
        Some(g) if g as usize >= size => Err(Error::GeneratorOutOfRange { index: g, size }),
        _ => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn rejects_duplicate_names() {
        let err = Presentation::new(names(&["a", "a"]), vec![], "x").unwrap_err();
        assert!(matches!(err, Error::DuplicateGenerator(_)));
    }

    #[test]
    fn rejects_foreign_generators() {
        let err = Presentation::new(names(&["a"]), vec![Word::generator(1)], "x").unwrap_err();
        assert!(matches!(err, Error::GeneratorOutOfRange { .. }));
    }

    #[test]
    fn relators_are_cyclically_reduced() {
        let p = Presentation::new(
            names(&["a", "b"]),
            vec![Word::free_reduce([(0, -1), (1, -1), (0, 1), (1, 1), (0, 1)])],
            "t",
        )
        .unwrap();
        assert_eq!(p.format_word(&p.relators()[0]), "a");
        assert_eq!(p.format_word(&p.original_relators()[0]), "a^-1 b^-1 a b a");
    }

    #[test]
    fn json_round_trip() {
        let p = Presentation::new(
            names(&["a1", "b1"]),
            vec![Word::free_reduce([(0, 2), (1, -1)])],
            "standard",
        )
        .unwrap();
        let text = serde_json::to_string(&p.to_json()).unwrap();
        assert_eq!(
            text,
            r#"{"generators":["a1","b1"],"relators":[[["a1",2],["b1",-1]]],"label":"standard"}"#
        );
        let back: PresentationJson = serde_json::from_str(&text).unwrap();
        assert_eq!(Presentation::from_json(&back).unwrap(), p);
    }

    #[test]
    fn parse_and_format() {
        let p = Presentation::new(names(&["a1", "b1"]), vec![], "t").unwrap();
        let w = p.parse_word("a1^2 b1^-1 b1 b1").unwrap();
        assert_eq!(p.format_word(&w), "a1^2 b1");
        assert!(p.parse_word("1").unwrap().is_identity());
        assert!(p.parse_word("c7").is_err());
    }

    #[test]
    fn concat_checks_alphabet() {
        let p = Presentation::new(names(&["a"]), vec![], "t").unwrap();
        assert!(p.concat(&Word::generator(0), &Word::generator(0)).is_ok());
        assert!(matches!(
            p.concat(&Word::generator(0), &Word::generator(3)),
            Err(Error::AlphabetMismatch)
        ));
    }
}
