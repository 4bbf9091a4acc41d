use std::collections::{BTreeMap, HashSet};
use std::sync::Arc;

use super::curve::{genus, CurveSpec};
use super::differential::MonomialDifferential;
use super::SuperellError;
use crate::exact::{int, rank, RatPoly, RationalMatrix};

/// Every monomial `m`-differential in the box `0 ≤ aᵢ ≤ N`, `0 ≤ n ≤ mN + K`,
/// restricted to integral (`step = 2`) or half-integral (`step = 1`) exponents.
fn box_candidates(curve: &Arc<CurveSpec>, m: u32, step: i64) -> Vec<MonomialDifferential> {
    let r = curve.n_branch();
    let top = 2 * i64::from(curve.degree());
    let n_max = i64::from(m * curve.degree() + curve.total_multiplicity());
    let mut out = Vec::new();
    let mut halves = vec![0i64; r];
    loop {
        for n in 0..=n_max {
            out.push(MonomialDifferential::from_halves(
                curve.clone(),
                halves.clone(),
                n,
                m,
            ));
        }
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            halves[k] += step;
            if halves[k] <= top {
                break;
            }
            halves[k] = 0;
            k += 1;
        }
    }
}

/// Fewest factors first, then smaller w-power, then lower total degree.
fn preference(eta: &MonomialDifferential) -> (usize, i64, i64, Vec<i64>) {
    let h = eta.halves();
    (
        h.iter().filter(|x| **x != 0).count(),
        eta.w_power(),
        h.iter().sum(),
        h.iter().map(|x| -x).collect(),
    )
}

/// Keeps holomorphic candidates that are new up to the curve relation, in preference order.
fn distinct_holomorphic(mut cands: Vec<MonomialDifferential>) -> Vec<MonomialDifferential> {
    cands.retain(MonomialDifferential::is_holomorphic);
    cands.sort_by_key(preference);
    let mut seen = HashSet::new();
    cands.retain(|c| seen.insert(c.canonical_key()));
    cands
}

/// Distinct values standing in for generic branch points in independence tests.
fn generic_point(i: usize) -> i64 {
    let i = i as i64;
    (i + 2).pow(3) + i
}

/// Greedy linearly independent subset. Monomials with different reduced
/// w-power or half-integral pattern are independent; within a group the
/// integral parts are compared as polynomials at generic branch values.
fn independent(cands: Vec<MonomialDifferential>) -> Vec<MonomialDifferential> {
    let mut groups: BTreeMap<(Vec<i64>, i64), Vec<usize>> = BTreeMap::new();
    let keys: Vec<(Vec<i64>, i64, u32)> = cands
        .iter()
        .map(MonomialDifferential::canonical_key)
        .collect();
    for (i, (h, n, _)) in keys.iter().enumerate() {
        groups
            .entry((h.iter().map(|x| x.rem_euclid(2)).collect(), *n))
            .or_default()
            .push(i);
    }
    let mut keep = vec![false; cands.len()];
    for members in groups.values() {
        // integral exponents (aᵢ − χᵢ/2), shifted to be non-negative
        let ints: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| {
                keys[i]
                    .0
                    .iter()
                    .map(|h| (h - h.rem_euclid(2)) / 2)
                    .collect()
            })
            .collect();
        let r = ints[0].len();
        let shift: Vec<i64> = (0..r)
            .map(|j| ints.iter().map(|v| -v[j]).max().unwrap_or(0).max(0))
            .collect();
        let polys: Vec<RatPoly> = ints
            .iter()
            .map(|v| {
                (0..r).fold(RatPoly::one(), |acc, j| {
                    let lin = RatPoly::new(vec![int(-generic_point(j)), int(1)]);
                    &acc * &lin.pow((v[j] + shift[j]) as u32)
                })
            })
            .collect();
        let width = polys.iter().filter_map(RatPoly::degree).max().unwrap_or(0) + 1;
        let mut rows: Vec<Vec<_>> = Vec::new();
        for (&i, p) in members.iter().zip(&polys) {
            rows.push((0..width).map(|k| p.coeff(k)).collect());
            let m = RationalMatrix::from_rows(&rows).expect("rectangular");
            if rank(&m) == rows.len() {
                keep[i] = true;
            } else {
                rows.pop();
            }
        }
    }
    cands
        .into_iter()
        .zip(keep)
        .filter_map(|(c, k)| k.then_some(c))
        .collect()
}

fn monomial_basis(
    curve: &CurveSpec,
    m: u32,
    expected: usize,
    what: &'static str,
) -> Result<Vec<MonomialDifferential>, SuperellError> {
    let c = Arc::new(curve.clone());
    let basis = independent(distinct_holomorphic(box_candidates(&c, m, 2)));
    if basis.len() != expected {
        return Err(SuperellError::CountMismatch {
            what,
            expected,
            got: basis.len(),
        });
    }
    Ok(basis)
}

/// Monomial basis of holomorphic 1-forms; its size must equal the genus.
pub fn holomorphic_basis(curve: &CurveSpec) -> Result<Vec<MonomialDifferential>, SuperellError> {
    monomial_basis(
        curve,
        1,
        genus(curve).max(0) as usize,
        "holomorphic differentials",
    )
}

/// Monomial basis of holomorphic quadratic differentials (`3g − 3` of them, `g ≥ 2`).
pub fn quadratic_basis(curve: &CurveSpec) -> Result<Vec<MonomialDifferential>, SuperellError> {
    let g = genus(curve);
    if g < 2 {
        return Err(SuperellError::InvalidCurve(format!("genus {g} < 2")));
    }
    monomial_basis(curve, 2, (3 * g - 3) as usize, "quadratic differentials")
}

/// Multi-valued monomial 1-forms with integral w-power whose square is a
/// single-valued holomorphic quadratic differential.
pub fn sqrt_sections(curve: &CurveSpec) -> Vec<MonomialDifferential> {
    let c = Arc::new(curve.clone());
    let mut cands = box_candidates(&c, 1, 1);
    cands.retain(|e| e.is_holomorphic() && !e.is_single_valued());
    independent(distinct_holomorphic(cands))
}

/// Sets of `size` square-root sections whose pairwise products are all
/// single-valued holomorphic quadratic differentials.
pub fn compatible_sets(curve: &CurveSpec, size: usize) -> Vec<Vec<MonomialDifferential>> {
    let secs = sqrt_sections(curve);
    let ok = |a: &MonomialDifferential, b: &MonomialDifferential| {
        a.multiply(b)
            .map(|p| p.is_single_valued() && p.is_holomorphic())
            .unwrap_or(false)
    };
    let mut out = Vec::new();
    let mut pick: Vec<usize> = Vec::new();
    fn rec(
        secs: &[MonomialDifferential],
        size: usize,
        start: usize,
        pick: &mut Vec<usize>,
        ok: &dyn Fn(&MonomialDifferential, &MonomialDifferential) -> bool,
        out: &mut Vec<Vec<MonomialDifferential>>,
    ) {
        if pick.len() == size {
            out.push(pick.iter().map(|&i| secs[i].clone()).collect());
            return;
        }
        for i in start..secs.len() {
            if pick.iter().all(|&j| ok(&secs[j], &secs[i])) {
                pick.push(i);
                rec(secs, size, i + 1, pick, ok, out);
                pick.pop();
            }
        }
    }
    if size > 0 {
        rec(&secs, size, 0, &mut pick, &ok, &mut out);
    }
    out
}

pub fn compatible_triples(curve: &CurveSpec) -> Vec<Vec<MonomialDifferential>> {
    compatible_sets(curve, 3)
}
