use crate::exact::{RationalMatrix, Vector};
use crate::groups::Substitution;
use crate::quaternions::{ad, check_fixed, FiniteGroup, UnitQuaternion};

use super::blocks::restrict_to_block;
use super::space::evaluation_row;
use super::{CohomologyError, CohomologySpace};

/// Matrix of `u ↦ Ad_{h⁻¹}(u ∘ endo)` on `H¹`, where `ρ ∘ endo = h ρ h⁻¹`.
/// Column `j` holds the image of basis vector `j`.
#[derive(Clone, Debug)]
pub struct MonodromyMatrix {
    pub matrix: RationalMatrix,
    pub witness: UnitQuaternion,
}

/// How a word `x₁x₂…x_k` in monodromy letters becomes a matrix product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ProductOrder {
    /// `M(x₁)·M(x₂)·…·M(x_k)`
    LeftToRight,
    /// `M(x_k)·…·M(x₁)`
    RightToLeft,
}

/// Pullback `u ↦ u ∘ endo` on cochains, as a 3n×3n matrix.
fn pullback(
    space: &CohomologySpace,
    endo: &Substitution,
) -> Result<RationalMatrix, CohomologyError> {
    let n = space.presentation().n_gens();
    (0..n).try_fold(RationalMatrix::zeros(0, 3 * n), |acc, g| {
        Ok(acc.vstack(&evaluation_row(space.representation(), endo.image(g))?)?)
    })
}

pub fn induced_matrix(
    space: &CohomologySpace,
    endo: &Substitution,
    ambient: &FiniteGroup,
) -> Result<MonodromyMatrix, CohomologyError> {
    let gens = space.presentation().gens();
    if endo.source().gens() != gens || endo.target().gens() != gens {
        return Err(crate::groups::GroupError::AlphabetMismatch(
            "endomorphism alphabet differs".into(),
        )
        .into());
    }
    let witness = check_fixed(space.representation(), endo, ambient)?
        .witness
        .ok_or(CohomologyError::NoWitness)?;
    let adh = ad(&witness.inverse())?
        .to_rational()
        .ok_or_else(|| CohomologyError::IrrationalAdjoint(witness.to_string()))?;
    let p = pullback(space, endo)?;
    let columns = space
        .basis()
        .iter()
        .map(|e| {
            let v = p.mul_vec(e);
            let twisted: Vector = v.chunks(3).flat_map(|c| adh.mul_vec(c)).collect();
            space.class_coords(&twisted)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(MonodromyMatrix {
        matrix: RationalMatrix::from_columns(&columns)?,
        witness,
    })
}

/// Splits `T^6 S^4 T^4 S^6` (or the compact `T6S4T4S6`) into
/// `[("T", 6), ("S", 4), ...]`. A letter without exponent counts once.
pub fn parse_monodromy_word(word: &str) -> Result<Vec<(String, i64)>, CohomologyError> {
    let bad = || CohomologyError::BadWord(word.to_string());
    let mut out = Vec::new();
    let mut chars = word
        .chars()
        .filter(|c| !c.is_whitespace() && *c != '^')
        .peekable();
    while let Some(c) = chars.next() {
        if !c.is_alphabetic() {
            return Err(bad());
        }
        let mut digits = String::new();
        if chars.peek() == Some(&'-') {
            digits.push(chars.next().unwrap_or('-'));
        }
        while let Some(d) = chars.peek().filter(|d| d.is_ascii_digit()) {
            digits.push(*d);
            chars.next();
        }
        let e = match digits.as_str() {
            "" => 1,
            d => d.parse::<i64>().map_err(|_| bad())?,
        };
        out.push((c.to_string(), e));
    }
    Ok(out)
}

/// Product of letter matrices along `word`, optionally restricted to an invariant block.
///
/// Each letter is `(name, step, matrix)`: `matrix` represents `name^step`, so
/// exponents in `word` must be multiples of `step`.
pub fn word_monodromy(
    letters: &[(&str, i64, &RationalMatrix)],
    word: &str,
    order: ProductOrder,
    block: Option<&[usize]>,
) -> Result<RationalMatrix, CohomologyError> {
    let dim = letters
        .first()
        .map(|l| l.2.rows())
        .ok_or_else(|| CohomologyError::BadWord("no letters".into()))?;
    let mut factors = Vec::new();
    for (name, e) in parse_monodromy_word(word)? {
        let &(_, step, m) = letters
            .iter()
            .find(|l| l.0 == name)
            .ok_or_else(|| CohomologyError::UnknownLetter(name.clone()))?;
        if e % step != 0 {
            return Err(CohomologyError::BadWord(format!(
                "{name}^{e} is not a power of {name}^{step}"
            )));
        }
        let base = if e < 0 {
            m.inverse()
                .ok_or_else(|| CohomologyError::BadWord(format!("{name} is singular")))?
        } else {
            m.clone()
        };
        factors.push(base.pow((e / step).unsigned_abs() as u32));
    }
    if order == ProductOrder::RightToLeft {
        factors.reverse();
    }
    let product = factors
        .iter()
        .fold(RationalMatrix::identity(dim), |acc, f| &acc * f);
    match block {
        Some(b) => restrict_to_block(&product, b),
        None => Ok(product),
    }
}

/// A nondegenerate skew-symmetric `J` with `MᵀJM = J` for every `M`, if one exists.
pub fn invariant_symplectic_form(mats: &[RationalMatrix]) -> Option<RationalMatrix> {
    let n = mats.first()?.rows();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    let skew = |v: &[crate::exact::Rational]| {
        let mut j = RationalMatrix::zeros(n, n);
        for (&(a, b), x) in pairs.iter().zip(v) {
            j = &j
                + &RationalMatrix::from_fn(n, n, |r, c| {
                    if (r, c) == (a, b) {
                        x.clone()
                    } else if (r, c) == (b, a) {
                        -x
                    } else {
                        crate::exact::int(0)
                    }
                });
        }
        j
    };
    let mut cols = Vec::new();
    for k in 0..pairs.len() {
        let mut e = vec![crate::exact::int(0); pairs.len()];
        e[k] = crate::exact::int(1);
        let j = skew(&e);
        let col: Vector = mats
            .iter()
            .flat_map(|m| (&(&(&m.transpose() * &j) * m) - &j).entries().to_vec())
            .collect();
        cols.push(col);
    }
    let system = RationalMatrix::from_columns(&cols).ok()?;
    let kernel = system.kernel();
    let mut candidates: Vec<RationalMatrix> = kernel.iter().map(|v| skew(v)).collect();
    if kernel.len() > 1 {
        candidates.push(
            candidates
                .iter()
                .skip(1)
                .fold(candidates[0].clone(), |acc, j| &acc + j),
        );
    }
    candidates
        .into_iter()
        .find(|j| j.det().map(|d| d != crate::exact::int(0)).unwrap_or(false))
}
