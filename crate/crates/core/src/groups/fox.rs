use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use super::word::Word;

/// Element of the integral group ring of a free group: a finite Z-combination of words.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct FoxSum {
    terms: BTreeMap<Word, i64>,
}

impl FoxSum {
    pub fn zero() -> Self {
        FoxSum::default()
    }

    pub fn term(w: Word, c: i64) -> Self {
        let mut s = FoxSum::zero();
        s.add_term(w, c);
        s
    }

    pub fn add_term(&mut self, w: Word, c: i64) {
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if *o.get() == 0 {
                    o.remove();
                }
            }
            Entry::Vacant(v) => {
                v.insert(c);
            }
        }
    }

    pub fn add(&self, o: &FoxSum) -> FoxSum {
        let mut s = self.clone();
        for (w, c) in &o.terms {
            s.add_term(w.clone(), *c);
        }
        s
    }

    /// Left multiplication by a group element.
    pub fn left_mul(&self, u: &Word) -> FoxSum {
        let mut s = FoxSum::zero();
        for (w, c) in &self.terms {
            s.add_term(u.mul(w), *c);
        }
        s
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, i64)> {
        self.terms.iter().map(|(w, c)| (w, *c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sum of coefficients (image under the augmentation map).
    pub fn augmentation(&self) -> i64 {
        self.terms.values().sum()
    }
}

/// Fox derivative `∂w/∂g`.
pub fn fox_derivative(w: &Word, g: usize) -> FoxSum {
    let mut s = FoxSum::zero();
    for (k, l) in w.letters().iter().enumerate() {
        if l.gen != g {
            continue;
        }
        if l.inverse {
            s.add_term(w.prefix(k + 1), -1);
        } else {
            s.add_term(w.prefix(k), 1);
        }
    }
    s
}

/// All Fox derivatives of `w` over an alphabet of `n_gens` generators.
pub fn fox_jacobian_row(w: &Word, n_gens: usize) -> Vec<FoxSum> {
    (0..n_gens).map(|g| fox_derivative(w, g)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn derivative_of_generator() {
        assert_eq!(
            fox_derivative(&Word::gen(0), 0),
            FoxSum::term(Word::identity(), 1)
        );
        assert!(fox_derivative(&Word::gen(1), 0).is_zero());
        assert_eq!(
            fox_derivative(&Word::gen_inv(0), 0),
            FoxSum::term(Word::gen_inv(0), -1)
        );
    }

    #[test]
    fn commutator_derivative() {
        let c = Word::from_signed(&[1, 2, -1, -2]);
        let expect = FoxSum::term(Word::identity(), 1)
            .add(&FoxSum::term(Word::from_signed(&[1, 2, -1]), -1));
        assert_eq!(fox_derivative(&c, 0), expect);
    }

    #[test]
    fn fundamental_formula_augmentation() {
        // Σ (∂w/∂g)·(g − 1) = w − 1, checked through augmentation of exponent sums
        let w = Word::from_signed(&[1, 2, 2, -1, 3, -2]);
        let sums: Vec<i64> = (0..3)
            .map(|g| fox_derivative(&w, g).augmentation())
            .collect();
        assert_eq!(sums, w.abelianize(3));
    }
}
