use crate::exact::{int, ExactError, Rational, RationalMatrix, Vector};
use crate::groups::{fox_derivative, FoxSum, Presentation, Word};
use crate::quaternions::{ad, QuatError, Representation};

use super::CohomologyError;

/// A 1-cochain stored as one su(2) vector per generator: entry `3g + k` is the
/// `u_{k+1}` coordinate of `u(g)`.
pub type Cocycle = Vector;

/// `Z¹`, `B¹` and a chosen basis of `H¹ = Z¹/B¹`.
#[derive(Clone, Debug)]
pub struct CohomologySpace {
    rep: Representation,
    ad_gens: Vec<RationalMatrix>,
    jacobian: RationalMatrix,
    z1: Vec<Cocycle>,
    b1: Vec<Cocycle>,
    basis: Vec<Cocycle>,
    labels: Vec<String>,
}

/// `Ad ρ(w)` as a rational 3×3 matrix.
pub(crate) fn ad_word(rep: &Representation, w: &Word) -> Result<RationalMatrix, CohomologyError> {
    let q = rep.evaluate(w)?;
    ad(&q)?
        .to_rational()
        .ok_or_else(|| CohomologyError::IrrationalAdjoint(rep.presentation().fmt_word(w)))
}

/// `Σ c·Ad ρ(w)` over the terms of a Fox sum.
pub(crate) fn ad_fox(rep: &Representation, s: &FoxSum) -> Result<RationalMatrix, CohomologyError> {
    let mut m = RationalMatrix::zeros(3, 3);
    for (w, c) in s.terms() {
        m = &m + &ad_word(rep, w)?.scale(&int(c));
    }
    Ok(m)
}

/// The 3×3n block row sending a cochain to `u(w)`.
pub(crate) fn evaluation_row(
    rep: &Representation,
    w: &Word,
) -> Result<RationalMatrix, CohomologyError> {
    let n = rep.presentation().n_gens();
    let mut row = RationalMatrix::zeros(3, 0);
    for g in 0..n {
        row = row.hstack(&ad_fox(rep, &fox_derivative(w, g))?)?;
    }
    Ok(row)
}

fn stack(blocks: Vec<RationalMatrix>, cols: usize) -> Result<RationalMatrix, ExactError> {
    blocks
        .into_iter()
        .try_fold(RationalMatrix::zeros(0, cols), |acc, b| acc.vstack(&b))
}

/// Columns of `vs` that are independent of everything before them.
fn independent(vs: &[Vector], after: &[Vector]) -> Vec<Vector> {
    let mut kept: Vec<Vector> = Vec::new();
    let mut rank = if after.is_empty() {
        0
    } else {
        RationalMatrix::from_columns(after).expect("len").rank()
    };
    for v in vs {
        let cols: Vec<Vector> = after
            .iter()
            .chain(&kept)
            .chain(std::iter::once(v))
            .cloned()
            .collect();
        let r = RationalMatrix::from_columns(&cols).expect("len").rank();
        if r > rank {
            rank = r;
            kept.push(v.clone());
        }
    }
    kept
}

/// Builds `Z¹`, `B¹` and the default `H¹` basis: the `Z¹` kernel vectors (in
/// reduced-echelon order) that are independent modulo `B¹`.
pub fn cohomology(rep: &Representation) -> Result<CohomologySpace, CohomologyError> {
    let pres: &Presentation = rep.presentation();
    for r in pres.relators() {
        let v = rep.evaluate(r)?;
        if !v.is_one() {
            return Err(QuatError::RelatorViolated {
                relator: pres.fmt_word(r),
                value: v.to_string(),
            }
            .into());
        }
    }
    let n = pres.n_gens();
    let ad_gens = (0..n)
        .map(|g| ad_word(rep, &Word::gen(g)))
        .collect::<Result<Vec<_>, _>>()?;
    let rows = pres
        .relators()
        .iter()
        .map(|r| evaluation_row(rep, r))
        .collect::<Result<Vec<_>, _>>()?;
    let jacobian = stack(rows, 3 * n)?;
    let z1 = jacobian.kernel();
    let delta = stack(
        ad_gens
            .iter()
            .map(|a| a - &RationalMatrix::identity(3))
            .collect(),
        3,
    )?;
    let b1 = independent(&delta.columns(), &[]);
    let basis = independent(&z1, &b1);
    let labels = (1..=basis.len()).map(|k| format!("v{k}")).collect();
    Ok(CohomologySpace {
        rep: rep.clone(),
        ad_gens,
        jacobian,
        z1,
        b1,
        basis,
        labels,
    })
}

impl CohomologySpace {
    pub fn representation(&self) -> &Representation {
        &self.rep
    }

    pub fn presentation(&self) -> &Presentation {
        self.rep.presentation()
    }

    pub fn dim_z1(&self) -> usize {
        self.z1.len()
    }

    pub fn dim_b1(&self) -> usize {
        self.b1.len()
    }

    pub fn dim_h1(&self) -> usize {
        self.basis.len()
    }

    pub fn z1(&self) -> &[Cocycle] {
        &self.z1
    }

    pub fn b1(&self) -> &[Cocycle] {
        &self.b1
    }

    pub fn basis(&self) -> &[Cocycle] {
        &self.basis
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn ad_generators(&self) -> &[RationalMatrix] {
        &self.ad_gens
    }

    /// Stacked Fox Jacobian; its kernel is `Z¹`.
    pub fn jacobian(&self) -> &RationalMatrix {
        &self.jacobian
    }

    pub fn is_cocycle(&self, u: &[Rational]) -> bool {
        u.len() == self.jacobian.cols() && self.jacobian.mul_vec(u).iter().all(|x| *x == int(0))
    }

    /// Replaces the `H¹` basis, checking it is a basis of `Z¹/B¹`.
    pub fn with_basis(
        mut self,
        basis: Vec<Cocycle>,
        labels: Vec<String>,
    ) -> Result<Self, CohomologyError> {
        if basis.len() != self.dim_h1() || labels.len() != basis.len() {
            return Err(CohomologyError::BasisSize {
                expected: self.dim_h1(),
                got: basis.len(),
            });
        }
        if !basis.iter().all(|u| self.is_cocycle(u)) {
            return Err(CohomologyError::NotCocycle);
        }
        if independent(&basis, &self.b1).len() != basis.len() {
            return Err(CohomologyError::DependentBasis);
        }
        self.basis = basis;
        self.labels = labels;
        Ok(self)
    }

    /// Coordinates of a cocycle's class in the chosen basis.
    pub fn class_coords(&self, u: &[Rational]) -> Result<Vector, CohomologyError> {
        if !self.is_cocycle(u) {
            return Err(CohomologyError::NotCocycle);
        }
        Ok(crate::exact::coords_mod_subspace(u, &self.basis, &self.b1)?)
    }

    /// `u(w)` for a word `w`, from the cocycle rule.
    pub fn evaluate(&self, u: &[Rational], w: &Word) -> Result<Vector, CohomologyError> {
        Ok(evaluation_row(&self.rep, w)?.mul_vec(u))
    }

    /// Value of the cochain on generator `g`.
    pub fn value(u: &[Rational], g: usize) -> [Rational; 3] {
        [u[3 * g].clone(), u[3 * g + 1].clone(), u[3 * g + 2].clone()]
    }

    /// Set of Pauli axes on which `u` has a nonzero component.
    pub fn axis_support(u: &[Rational]) -> Vec<usize> {
        let mut axes: Vec<usize> = u
            .iter()
            .enumerate()
            .filter(|(_, x)| **x != int(0))
            .map(|(i, _)| i % 3)
            .collect();
        axes.sort_unstable();
        axes.dedup();
        axes
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternions::{rho_ew, UnitQuaternion};
    use std::sync::Arc;

    #[test]
    fn free_rank_one_trivial_rep() {
        let p = Arc::new(Presentation::free(&["x"]));
        let rep = Representation::new(p, vec![UnitQuaternion::one()]).unwrap();
        let h = cohomology(&rep).unwrap();
        assert_eq!((h.dim_z1(), h.dim_b1(), h.dim_h1()), (3, 0, 3));
    }

    #[test]
    fn genus_three_dimensions() {
        let h = cohomology(&rho_ew()).unwrap();
        assert_eq!(h.dim_z1() - h.dim_b1(), h.dim_h1());
        assert_eq!(h.dim_h1(), 12);
        assert!(h
            .basis()
            .iter()
            .all(|u| CohomologySpace::axis_support(u).len() == 1));
    }

    #[test]
    fn coboundaries_are_cocycles() {
        let h = cohomology(&rho_ew()).unwrap();
        assert!(h.b1().iter().all(|u| h.is_cocycle(u)));
    }
}
