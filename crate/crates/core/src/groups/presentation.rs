use std::fmt;

use super::parse::{parse_presentation, parse_word};
use super::{GroupError, Word};

/// Finitely presented group: generator names and relators.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Presentation {
    gens: Vec<String>,
    relators: Vec<Word>,
}

impl Presentation {
    pub fn new(gens: Vec<String>, relators: Vec<Word>) -> Result<Self, GroupError> {
        for r in &relators {
            if let Some(g) = r.max_gen() {
                if g >= gens.len() {
                    return Err(GroupError::AlphabetMismatch(format!(
                        "relator uses generator #{} but only {} generators exist",
                        g + 1,
                        gens.len()
                    )));
                }
            }
        }
        Ok(Presentation { gens, relators })
    }

    /// Free group on the given names.
    pub fn free(names: &[&str]) -> Self {
        Presentation {
            gens: names.iter().map(|s| s.to_string()).collect(),
            relators: Vec::new(),
        }
    }

    pub fn parse(text: &str) -> Result<Self, GroupError> {
        parse_presentation(text)
    }

    pub fn gens(&self) -> &[String] {
        &self.gens
    }

    pub fn n_gens(&self) -> usize {
        self.gens.len()
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn name(&self, g: usize) -> &str {
        &self.gens[g]
    }

    pub fn gen_index(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g == name)
    }

    pub(crate) fn single_letter_alphabet(&self) -> bool {
        self.gens
            .iter()
            .all(|g| g.chars().count() == 1 && g.chars().all(|c| c.is_lowercase()))
    }

    pub fn word(&self, text: &str) -> Result<Word, GroupError> {
        parse_word(self, text)
    }

    pub fn check_word(&self, w: &Word) -> Result<(), GroupError> {
        match w.max_gen() {
            Some(g) if g >= self.n_gens() => Err(GroupError::AlphabetMismatch(format!(
                "word uses generator #{} outside an alphabet of {}",
                g + 1,
                self.n_gens()
            ))),
            _ => Ok(()),
        }
    }

    pub fn fmt_word(&self, w: &Word) -> String {
        if self.single_letter_alphabet() {
            w.display_compact(&self.gens)
        } else {
            w.display_with(&self.gens)
        }
    }

    /// Renders in the text grammar accepted by [`Presentation::parse`].
    pub fn to_text(&self) -> String {
        let mut s = format!("gens: {};\nrels:", self.gens.join(" "));
        for r in &self.relators {
            s.push_str(&format!(" {};", self.fmt_word(r)));
        }
        s.push('\n');
        s
    }
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rels: Vec<String> = self.relators.iter().map(|r| self.fmt_word(r)).collect();
        write!(f, "< {} | {} >", self.gens.join(", "), rels.join(", "))
    }
}
