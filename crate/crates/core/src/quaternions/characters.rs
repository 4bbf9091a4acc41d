use std::collections::HashMap;
use std::sync::Arc;

use super::{FiniteGroup, QuatError, Representation, UnitQuaternion};
use crate::groups::{Presentation, Substitution, Word};

/// A conjugation orbit inside a list of homomorphisms.
#[derive(Clone, Debug)]
pub struct Orbit {
    /// Least member in the canonical order.
    pub representative: Representation,
    /// Positions of the members in the input list, ascending.
    pub members: Vec<usize>,
}

impl Orbit {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// Outcome of testing `ρ ∘ action ~ ρ` up to conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixedCheck {
    pub fixed: bool,
    /// Least `h` with `ρ ∘ action = h ρ h⁻¹`.
    pub witness: Option<UnitQuaternion>,
}

fn eval_indices(g: &FiniteGroup, w: &Word, vals: &[usize]) -> usize {
    w.letters().iter().fold(g.identity(), |acc, l| {
        let v = vals[l.gen];
        g.mul(acc, if l.inverse { g.inv(v) } else { v })
    })
}

/// `Some((gen, n))` when the relator is `gen^n`.
fn as_power(r: &Word) -> Option<(usize, i64)> {
    let first = r.letters().first()?;
    r.letters()
        .iter()
        .all(|l| l == first)
        .then(|| (first.gen, r.len() as i64))
}

/// All homomorphisms `pres → G`, in lexicographic order of element indices.
pub fn enumerate_homs(pres: &Presentation, g: &FiniteGroup) -> Vec<Representation> {
    let n = pres.n_gens();
    let mut candidates: Vec<Vec<usize>> = vec![(0..g.order()).collect(); n];
    for r in pres.relators() {
        if let Some((gen, e)) = as_power(r) {
            candidates[gen].retain(|&x| g.pow(x, e) == g.identity());
        }
    }
    // each relator is checked as soon as its last generator is assigned
    let mut due: Vec<Vec<&Word>> = vec![Vec::new(); n];
    for r in pres.relators() {
        match r.max_gen() {
            Some(m) if as_power(r).is_none() => due[m].push(r),
            _ => {}
        }
    }
    let pres = Arc::new(pres.clone());
    let mut out = Vec::new();
    let mut vals = vec![0usize; n];
    search(g, &candidates, &due, 0, &mut vals, &mut |vals| {
        let values = vals.iter().map(|&i| g.element(i).clone()).collect();
        out.push(Representation::new_unchecked(pres.clone(), values).expect("length matches"));
    });
    out
}

fn search(
    g: &FiniteGroup,
    cands: &[Vec<usize>],
    due: &[Vec<&Word>],
    depth: usize,
    vals: &mut Vec<usize>,
    emit: &mut dyn FnMut(&[usize]),
) {
    if depth == cands.len() {
        emit(vals);
        return;
    }
    for &x in &cands[depth] {
        vals[depth] = x;
        if due[depth]
            .iter()
            .all(|r| eval_indices(g, r, vals) == g.identity())
        {
            search(g, cands, due, depth + 1, vals, emit);
        }
    }
}

/// Pulls every homomorphism back along `phi`, then removes duplicates and sorts.
pub fn pushforward(
    homs: &[Representation],
    phi: &Substitution,
) -> Result<Vec<Representation>, QuatError> {
    let mut out = homs
        .iter()
        .map(|h| h.precompose(phi))
        .collect::<Result<Vec<_>, _>>()?;
    sort_dedup(&mut out);
    Ok(out)
}

fn sort_dedup(v: &mut Vec<Representation>) {
    v.sort_by(|a, b| a.values().cmp(b.values()));
    v.dedup_by(|a, b| a.values() == b.values());
}

/// Keeps the homomorphisms with non-abelian image.
pub fn filter_irreducible(homs: &[Representation]) -> Vec<Representation> {
    homs.iter()
        .filter(|h| {
            let v = h.values();
            v.iter()
                .enumerate()
                .any(|(i, x)| v[i + 1..].iter().any(|y| !x.commutes_with(y)))
        })
        .cloned()
        .collect()
}

/// Partitions `homs` into orbits under simultaneous conjugation by `c`.
pub fn classify_conjugacy(homs: &[Representation], c: &FiniteGroup) -> Vec<Orbit> {
    let lookup: HashMap<&[UnitQuaternion], usize> = homs
        .iter()
        .enumerate()
        .map(|(i, h)| (h.values(), i))
        .collect();
    let mut assigned = vec![false; homs.len()];
    let mut orbits = Vec::new();
    for start in 0..homs.len() {
        if assigned[start] {
            continue;
        }
        let mut members: Vec<usize> = c
            .elements()
            .iter()
            .filter_map(|h| lookup.get(homs[start].conjugate(h).values()).copied())
            .collect();
        members.sort_unstable();
        members.dedup();
        for &m in &members {
            assigned[m] = true;
        }
        let rep = members
            .iter()
            .map(|&m| &homs[m])
            .min_by(|a, b| a.values().cmp(b.values()))
            .expect("nonempty");
        orbits.push(Orbit {
            representative: rep.clone(),
            members,
        });
    }
    orbits.sort_by(|a, b| a.representative.values().cmp(b.representative.values()));
    orbits
}

/// Index of the orbit containing a homomorphism with the same values as `hom`.
pub fn orbit_of(orbits: &[Orbit], homs: &[Representation], hom: &Representation) -> Option<usize> {
    orbits
        .iter()
        .position(|o| o.members.iter().any(|&m| homs[m].values() == hom.values()))
}

/// Searches `c` in canonical order for `h` with `hom ∘ action = h·hom·h⁻¹`.
pub fn check_fixed(
    hom: &Representation,
    action: &Substitution,
    c: &FiniteGroup,
) -> Result<FixedCheck, QuatError> {
    let moved = hom.precompose(action)?;
    let witness = c
        .elements()
        .iter()
        .find(|h| hom.conjugate(h).values() == moved.values())
        .cloned();
    Ok(FixedCheck {
        fixed: witness.is_some(),
        witness,
    })
}
