use std::fmt;

/// A generator or its inverse.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Letter {
    pub gen: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen, inverse }
    }

    pub fn inv(self) -> Self {
        Letter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    pub fn sign(self) -> i32 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Freely reduced word in a free group.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn gen(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, false)],
        }
    }

    pub fn gen_inv(g: usize) -> Self {
        Word {
            letters: vec![Letter::new(g, true)],
        }
    }

    /// Freely reduces the given letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out: Vec<Letter> = Vec::new();
        for l in letters {
            if out.last() == Some(&l.inv()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word { letters: out }
    }

    /// Builds a word from signed 1-based generator indices (`-2` is the inverse of generator 1).
    pub fn from_signed(seq: &[i32]) -> Self {
        Self::from_letters(seq.iter().map(|&s| {
            assert!(s != 0, "signed generator index 0");
            Letter::new(s.unsigned_abs() as usize - 1, s < 0)
        }))
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, o: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(&o.letters).copied())
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|l| l.inv()).collect(),
        }
    }

    pub fn pow(&self, e: i64) -> Word {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        (0..e.unsigned_abs()).fold(Word::identity(), |acc, _| acc.mul(&base))
    }

    /// `[x, y] = x y x⁻¹ y⁻¹`
    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    /// Prefix of the first `k` letters (already reduced).
    pub fn prefix(&self, k: usize) -> Word {
        Word {
            letters: self.letters[..k].to_vec(),
        }
    }

    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self, n_gens: usize) -> Vec<i64> {
        let mut v = vec![0; n_gens];
        for l in &self.letters {
            v[l.gen] += l.sign() as i64;
        }
        v
    }

    /// Renders with the given generator names; inverses as `name^-1`.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.is_identity() {
            return "1".into();
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| {
                let n = names
                    .get(l.gen)
                    .cloned()
                    .unwrap_or_else(|| format!("x{}", l.gen + 1));
                if l.inverse {
                    format!("{n}^-1")
                } else {
                    n
                }
            })
            .collect();
        parts.join(" ")
    }

    /// Compact rendering for single-letter alphabets: inverses in upper case.
    pub fn display_compact(&self, names: &[String]) -> String {
        if self.is_identity() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let n = &names[l.gen];
                if l.inverse {
                    n.to_uppercase()
                } else {
                    n.clone()
                }
            })
            .collect()
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| format!("{}{}", if l.inverse { "-" } else { "" }, l.gen + 1))
            .collect();
        write!(f, "Word[{}]", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduction_cancels_adjacent_pairs() {
        let w = Word::from_signed(&[1, 2, -2, -1, 3]);
        assert_eq!(w, Word::gen(2));
        assert_eq!(w.mul(&w.inverse()), Word::identity());
    }

    #[test]
    fn powers() {
        let a = Word::gen(0);
        assert_eq!(a.pow(3).len(), 3);
        assert_eq!(a.pow(-2), Word::from_signed(&[-1, -1]));
        assert_eq!(a.pow(0), Word::identity());
    }

    #[test]
    fn commutator_is_reduced() {
        let c = Word::commutator(&Word::gen(0), &Word::gen(1));
        assert_eq!(c, Word::from_signed(&[1, 2, -1, -2]));
        assert_eq!(c.abelianize(2), vec![0, 0]);
    }
}
