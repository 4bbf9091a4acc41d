use super::parse::parse_map;
use super::{GroupError, Presentation, Word};
use crate::groups::word::Letter;

/// Homomorphism of free groups given by generator images.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Substitution {
    source: Presentation,
    target: Presentation,
    images: Vec<Word>,
}

impl Substitution {
    pub fn new(
        source: Presentation,
        target: Presentation,
        images: Vec<Word>,
    ) -> Result<Self, GroupError> {
        if images.len() != source.n_gens() {
            return Err(GroupError::PartialMap(format!(
                "{} images for {} generators",
                images.len(),
                source.n_gens()
            )));
        }
        for w in &images {
            target.check_word(w)?;
        }
        Ok(Substitution {
            source,
            target,
            images,
        })
    }

    pub fn identity(p: &Presentation) -> Self {
        let images = (0..p.n_gens()).map(Word::gen).collect();
        Substitution {
            source: p.clone(),
            target: p.clone(),
            images,
        }
    }

    /// Parses a `map:` block; every source generator must be mapped exactly once.
    pub fn parse(
        text: &str,
        source: &Presentation,
        target: &Presentation,
    ) -> Result<Self, GroupError> {
        let images = parse_map(text, source, target)?;
        Self::new(source.clone(), target.clone(), images)
    }

    pub fn source(&self) -> &Presentation {
        &self.source
    }

    pub fn target(&self) -> &Presentation {
        &self.target
    }

    pub fn images(&self) -> &[Word] {
        &self.images
    }

    pub fn image(&self, g: usize) -> &Word {
        &self.images[g]
    }

    fn letter_image(&self, l: Letter) -> Word {
        if l.inverse {
            self.images[l.gen].inverse()
        } else {
            self.images[l.gen].clone()
        }
    }

    pub fn apply(&self, w: &Word) -> Result<Word, GroupError> {
        self.source.check_word(w)?;
        Ok(Word::from_letters(
            w.letters()
                .iter()
                .flat_map(|&l| self.letter_image(l).letters().to_vec()),
        ))
    }

    /// `outer ∘ inner`: first apply `inner`, then `outer`.
    pub fn compose(outer: &Substitution, inner: &Substitution) -> Result<Substitution, GroupError> {
        if inner.target.gens() != outer.source.gens() {
            return Err(GroupError::AlphabetMismatch(format!(
                "cannot compose: inner target {:?} differs from outer source {:?}",
                inner.target.gens(),
                outer.source.gens()
            )));
        }
        let images = inner
            .images
            .iter()
            .map(|w| outer.apply(w))
            .collect::<Result<Vec<_>, _>>()?;
        Substitution::new(inner.source.clone(), outer.target.clone(), images)
    }

    /// `self ∘ self ∘ … ∘ self` (`k` times) for an endomorphism.
    pub fn power(&self, k: u32) -> Result<Substitution, GroupError> {
        let mut acc = Substitution::identity(&self.source);
        for _ in 0..k {
            acc = Substitution::compose(self, &acc)?;
        }
        Ok(acc)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source.gens() == self.target.gens()
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("map:\n");
        for (g, w) in self.images.iter().enumerate() {
            s.push_str(&format!(
                "  {} -> {};\n",
                self.source.name(g),
                self.target.fmt_word(w)
            ));
        }
        s
    }
}

/// Free-function form of [`Substitution::apply`].
pub fn substitute(s: &Substitution, w: &Word) -> Result<Word, GroupError> {
    s.apply(w)
}

/// Free-function form of [`Substitution::compose`]: `s2 ∘ s1`.
pub fn compose(s2: &Substitution, s1: &Substitution) -> Result<Substitution, GroupError> {
    Substitution::compose(s2, s1)
}
