use std::collections::{HashMap, VecDeque};

use super::{QuatError, UnitQuaternion};

pub const DEFAULT_CLOSURE_BOUND: usize = 10_000;

/// Finite subgroup of SU(2) with its multiplication and inverse tables.
///
/// Elements are sorted in the canonical quaternion order, so element indices
/// follow that order.
#[derive(Clone, Debug)]
pub struct FiniteGroup {
    elements: Vec<UnitQuaternion>,
    index: HashMap<UnitQuaternion, usize>,
    mul: Vec<usize>,
    inv: Vec<usize>,
    identity: usize,
}

impl FiniteGroup {
    /// Builds the tables for a set that is already closed.
    pub fn from_closed_set(mut elements: Vec<UnitQuaternion>) -> Result<Self, QuatError> {
        elements.sort();
        elements.dedup();
        let n = elements.len();
        let index: HashMap<UnitQuaternion, usize> = elements
            .iter()
            .cloned()
            .enumerate()
            .map(|(i, q)| (q, i))
            .collect();
        let mut mul = Vec::with_capacity(n * n);
        for a in &elements {
            for b in &elements {
                let p = a * b;
                mul.push(*index.get(&p).ok_or(QuatError::NotClosed)?);
            }
        }
        let identity = *index
            .get(&UnitQuaternion::one())
            .ok_or(QuatError::NotClosed)?;
        let inv = elements
            .iter()
            .map(|q| index.get(&q.inverse()).copied().ok_or(QuatError::NotClosed))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(FiniteGroup {
            elements,
            index,
            mul,
            inv,
            identity,
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[UnitQuaternion] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &UnitQuaternion {
        &self.elements[i]
    }

    pub fn index_of(&self, q: &UnitQuaternion) -> Option<usize> {
        self.index.get(q).copied()
    }

    pub fn contains(&self, q: &UnitQuaternion) -> bool {
        self.index.contains_key(q)
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order() + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn pow(&self, a: usize, e: i64) -> usize {
        let base = if e < 0 { self.inv(a) } else { a };
        (0..e.unsigned_abs()).fold(self.identity, |acc, _| self.mul(acc, base))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut n = 1;
        while x != self.identity {
            x = self.mul(x, a);
            n += 1;
        }
        n
    }

    pub fn is_subgroup_of(&self, ambient: &FiniteGroup) -> bool {
        self.elements.iter().all(|q| ambient.contains(q))
    }

    pub fn centre(&self) -> FiniteGroup {
        centralizer(self, self)
    }

    /// Indices of the subgroup generated by the given element indices.
    fn closure_indices(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.order()];
        seen[self.identity] = true;
        let mut queue = VecDeque::from([self.identity]);
        while let Some(x) = queue.pop_front() {
            for &g in gens {
                let y = self.mul(x, g);
                if !seen[y] {
                    seen[y] = true;
                    queue.push_back(y);
                }
            }
        }
        (0..self.order()).filter(|&i| seen[i]).collect()
    }

    fn subgroup_from_indices(&self, idx: &[usize]) -> FiniteGroup {
        FiniteGroup::from_closed_set(idx.iter().map(|&i| self.elements[i].clone()).collect())
            .expect("index set is a subgroup")
    }
}

/// Closure of `gens` under multiplication, failing past `bound` elements.
pub fn generate_group_bounded(
    gens: &[UnitQuaternion],
    bound: usize,
) -> Result<FiniteGroup, QuatError> {
    for g in gens {
        if g.norm_squared() != crate::exact::QSqrt2::one() {
            return Err(QuatError::NotUnit(g.to_string()));
        }
    }
    let mut seen: HashMap<UnitQuaternion, ()> = HashMap::new();
    seen.insert(UnitQuaternion::one(), ());
    let mut queue = VecDeque::from([UnitQuaternion::one()]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = &x * g;
            if !seen.contains_key(&y) {
                if seen.len() >= bound {
                    return Err(QuatError::ClosureBound(bound));
                }
                seen.insert(y.clone(), ());
                queue.push_back(y);
            }
        }
    }
    FiniteGroup::from_closed_set(seen.into_keys().collect())
}

pub fn generate_group(gens: &[UnitQuaternion]) -> Result<FiniteGroup, QuatError> {
    generate_group_bounded(gens, DEFAULT_CLOSURE_BOUND)
}

/// `{g ∈ ambient : g x = x g for all x ∈ sub}`.
pub fn centralizer(sub: &FiniteGroup, ambient: &FiniteGroup) -> FiniteGroup {
    let els: Vec<UnitQuaternion> = ambient
        .elements()
        .iter()
        .filter(|g| sub.elements().iter().all(|x| g.commutes_with(x)))
        .cloned()
        .collect();
    FiniteGroup::from_closed_set(els).expect("centralizer is a subgroup")
}

/// `{g ∈ ambient : g·sub·g⁻¹ = sub}`.
pub fn normalizer(sub: &FiniteGroup, ambient: &FiniteGroup) -> FiniteGroup {
    let els: Vec<UnitQuaternion> = ambient
        .elements()
        .iter()
        .filter(|g| {
            sub.elements()
                .iter()
                .all(|x| sub.contains(&x.conjugate_by(g)))
        })
        .cloned()
        .collect();
    FiniteGroup::from_closed_set(els).expect("normalizer is a subgroup")
}

/// Number of automorphisms of `g`, by testing every assignment of images to `gens`.
pub fn automorphism_count(g: &FiniteGroup, gens: &[usize]) -> Result<usize, QuatError> {
    if g.closure_indices(gens).len() != g.order() {
        return Err(QuatError::DoesNotGenerate);
    }
    let n = g.order();
    let mut count = 0;
    let mut images = vec![0usize; gens.len()];
    loop {
        if extends_to_automorphism(g, gens, &images) {
            count += 1;
        }
        // odometer over n^|gens| assignments
        let mut k = 0;
        loop {
            if k == images.len() {
                return Ok(count);
            }
            images[k] += 1;
            if images[k] < n {
                break;
            }
            images[k] = 0;
            k += 1;
        }
    }
}

fn extends_to_automorphism(g: &FiniteGroup, gens: &[usize], images: &[usize]) -> bool {
    let n = g.order();
    let mut map: Vec<Option<usize>> = vec![None; n];
    map[g.identity()] = Some(g.identity());
    let mut queue = VecDeque::from([g.identity()]);
    while let Some(x) = queue.pop_front() {
        let fx = map[x].expect("visited");
        for (&s, &fs) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = g.mul(fx, fs);
            match map[y] {
                Some(v) if v != fy => return false,
                Some(_) => {}
                None => {
                    map[y] = Some(fy);
                    queue.push_back(y);
                }
            }
        }
    }
    let mut hit = vec![false; n];
    map.iter().all(|m| {
        let v = m.expect("generated");
        !std::mem::replace(&mut hit[v], true)
    })
}

/// The quaternion group {±1, ±𝐢, ±𝐣, ±𝐤}.
pub fn quaternion_group() -> FiniteGroup {
    generate_group(&[UnitQuaternion::i(), UnitQuaternion::j()]).expect("Q is finite")
}

/// Binary tetrahedral group generated by `t` and `s`.
pub fn btet() -> FiniteGroup {
    generate_group(&[UnitQuaternion::t(), UnitQuaternion::s()]).expect("BTet is finite")
}

/// Binary octahedral group generated by BTet and `c₈`.
pub fn boct() -> FiniteGroup {
    generate_group(&[
        UnitQuaternion::t(),
        UnitQuaternion::s(),
        UnitQuaternion::c8(),
    ])
    .expect("BOct is finite")
}

/// Subgroup of `g` generated by the given elements.
pub fn subgroup(g: &FiniteGroup, gens: &[UnitQuaternion]) -> Result<FiniteGroup, QuatError> {
    let idx = gens
        .iter()
        .map(|q| g.index_of(q).ok_or(QuatError::NotClosed))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(g.subgroup_from_indices(&g.closure_indices(&idx)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(quaternion_group().order(), 8);
        assert_eq!(btet().order(), 24);
        assert_eq!(boct().order(), 48);
    }

    #[test]
    fn closure_bound_is_enforced() {
        assert_eq!(
            generate_group_bounded(&[UnitQuaternion::t(), UnitQuaternion::s()], 10).unwrap_err(),
            QuatError::ClosureBound(10)
        );
    }

    #[test]
    fn trivial_centralizer_is_everything() {
        let one = FiniteGroup::from_closed_set(vec![UnitQuaternion::one()]).unwrap();
        assert_eq!(centralizer(&one, &btet()).order(), 24);
    }

    #[test]
    fn aut_of_sign_group() {
        let z2 = generate_group(&[UnitQuaternion::minus_one()]).unwrap();
        let m = z2.index_of(&UnitQuaternion::minus_one()).unwrap();
        assert_eq!(automorphism_count(&z2, &[m]).unwrap(), 1);
    }

    #[test]
    fn centralizers_and_normalizers_in_boct() {
        let (q, t, o) = (quaternion_group(), btet(), boct());
        assert_eq!(centralizer(&q, &o).order(), 2);
        assert_eq!(centralizer(&t, &o).order(), 2);
        assert_eq!(normalizer(&t, &o).order(), 48);
        assert_eq!(normalizer(&q, &o).order(), 48);
        assert_eq!(normalizer(&o, &o).order(), 48);
        assert!(t.is_subgroup_of(&o));
    }

    #[test]
    fn automorphisms_of_q_and_btet() {
        let q = quaternion_group();
        let ij = [UnitQuaternion::i(), UnitQuaternion::j()].map(|x| q.index_of(&x).unwrap());
        assert_eq!(automorphism_count(&q, &ij).unwrap(), 24);
        let t = btet();
        let ts = [UnitQuaternion::t(), UnitQuaternion::s()].map(|x| t.index_of(&x).unwrap());
        assert_eq!(automorphism_count(&t, &ts).unwrap(), 24);
        let m = t.index_of(&UnitQuaternion::minus_one()).unwrap();
        assert_eq!(
            automorphism_count(&t, &[m]).unwrap_err(),
            QuatError::DoesNotGenerate
        );
    }

    #[test]
    fn table_is_associative_and_indices_sorted() {
        let g = btet();
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for a in 0..24 {
            for b in 0..24 {
                for c in [0, 5, 17] {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}
