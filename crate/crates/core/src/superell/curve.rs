use std::fmt;

use num_integer::gcd;
use serde::Serialize;

use super::SuperellError;

/// The curve `w^N = ∏ (z − zᵢ)^{kᵢ}` over P¹, with branch points as labels.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CurveSpec {
    degree: u32,
    branch: Vec<(String, u32)>,
    z_name: String,
    w_name: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum PlaceId {
    Branch(usize),
    Infinity,
}

/// The `points` points of the curve above one branch value, each with ramification index `ramification`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Place {
    pub id: PlaceId,
    pub points: u32,
    pub ramification: u32,
    /// Order of `w` at each point.
    pub w_order: i64,
}

impl CurveSpec {
    pub fn new(degree: u32, branch: Vec<(String, u32)>) -> Result<Self, SuperellError> {
        if degree < 2 {
            return Err(SuperellError::InvalidCurve(format!("degree {degree} < 2")));
        }
        if branch.is_empty() || branch.iter().any(|(_, k)| *k == 0) {
            return Err(SuperellError::InvalidCurve(
                "multiplicities must be at least 1".into(),
            ));
        }
        for (i, (l, _)) in branch.iter().enumerate() {
            if branch[..i].iter().any(|(m, _)| m == l) {
                return Err(SuperellError::InvalidCurve(format!("duplicate label {l}")));
            }
        }
        Ok(CurveSpec {
            degree,
            branch,
            z_name: "z".into(),
            w_name: "w".into(),
        })
    }

    /// Renames the coordinates used in printed formulas.
    pub fn with_names(mut self, z: &str, w: &str) -> Self {
        self.z_name = z.into();
        self.w_name = w.into();
        self
    }

    /// Branch points labelled `z1, z2, …`.
    pub fn with_multiplicities(degree: u32, ks: &[u32]) -> Result<Self, SuperellError> {
        Self::new(
            degree,
            ks.iter()
                .enumerate()
                .map(|(i, k)| (format!("z{}", i + 1), *k))
                .collect(),
        )
    }

    /// `w⁶ = (z−z1)(z−z2)(z−z3)(z−z4)³`.
    pub fn plat() -> Self {
        Self::with_multiplicities(6, &[1, 1, 1, 3]).expect("valid")
    }

    /// `y⁴ = x(x−1)(x−λ)`.
    pub fn ew() -> Self {
        Self::new(4, vec![("0".into(), 1), ("1".into(), 1), ("λ".into(), 1)])
            .expect("valid")
            .with_names("x", "y")
    }

    /// Parses `"N=6; k=1,1,1,3"`.
    pub fn parse(text: &str) -> Result<Self, SuperellError> {
        let err = || SuperellError::Parse(text.to_string());
        let (mut n, mut ks) = (None, None);
        for part in text.split(';').map(str::trim).filter(|p| !p.is_empty()) {
            let (key, val) = part.split_once('=').ok_or_else(err)?;
            match key.trim() {
                "N" => n = Some(val.trim().parse::<u32>().map_err(|_| err())?),
                "k" => {
                    ks = Some(
                        val.split(',')
                            .map(|x| x.trim().parse::<u32>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| err())?,
                    )
                }
                _ => return Err(err()),
            }
        }
        Self::with_multiplicities(n.ok_or_else(err)?, &ks.ok_or_else(err)?)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn branch(&self) -> &[(String, u32)] {
        &self.branch
    }

    pub fn n_branch(&self) -> usize {
        self.branch.len()
    }

    pub fn multiplicity(&self, i: usize) -> u32 {
        self.branch[i].1
    }

    pub fn total_multiplicity(&self) -> u32 {
        self.branch.iter().map(|b| b.1).sum()
    }

    pub fn z_name(&self) -> &str {
        &self.z_name
    }

    pub fn w_name(&self) -> &str {
        &self.w_name
    }

    /// `(z − zᵢ)`, or plain `z` for the label `0`.
    pub fn factor_name(&self, i: usize) -> String {
        match self.branch[i].0.as_str() {
            "0" => self.z_name.clone(),
            l => format!("({}-{l})", self.z_name),
        }
    }

    pub fn place(&self, id: PlaceId) -> Place {
        let n = self.degree;
        let k = match id {
            PlaceId::Branch(i) => self.branch[i].1,
            PlaceId::Infinity => self.total_multiplicity(),
        };
        let d = gcd(n, k);
        let w_order = i64::from(k / d);
        Place {
            id,
            points: d,
            ramification: n / d,
            w_order: if id == PlaceId::Infinity {
                -w_order
            } else {
                w_order
            },
        }
    }

    /// Branch places followed by infinity.
    pub fn places(&self) -> Vec<Place> {
        (0..self.n_branch())
            .map(PlaceId::Branch)
            .chain([PlaceId::Infinity])
            .map(|p| self.place(p))
            .collect()
    }

    /// `2g − 2` by Riemann–Hurwitz.
    pub fn euler_degree(&self) -> i64 {
        let n = i64::from(self.degree);
        -2 * n
            + self
                .places()
                .iter()
                .map(|p| n - i64::from(p.points))
                .sum::<i64>()
    }
}

impl fmt::Display for CurveSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rhs: Vec<String> = (0..self.n_branch())
            .map(|i| match self.branch[i].1 {
                1 => self.factor_name(i),
                k => format!("{}^{k}", self.factor_name(i)),
            })
            .collect();
        write!(f, "{}^{} = {}", self.w_name, self.degree, rhs.join(""))
    }
}

pub fn genus(curve: &CurveSpec) -> i64 {
    (curve.euler_degree() + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genera() {
        assert_eq!(genus(&CurveSpec::plat()), 4);
        assert_eq!(genus(&CurveSpec::ew()), 3);
        assert_eq!(
            genus(&CurveSpec::with_multiplicities(2, &[1, 1]).unwrap()),
            0
        );
        assert_eq!(
            genus(&CurveSpec::with_multiplicities(2, &[1, 1, 1, 1]).unwrap()),
            1
        );
        assert_eq!(
            genus(&CurveSpec::with_multiplicities(2, &[1, 1, 1]).unwrap()),
            1
        );
    }

    #[test]
    fn plat_places() {
        let c = CurveSpec::plat();
        let z4 = c.place(PlaceId::Branch(3));
        assert_eq!((z4.points, z4.ramification, z4.w_order), (3, 2, 1));
        let inf = c.place(PlaceId::Infinity);
        assert_eq!((inf.points, inf.ramification, inf.w_order), (6, 1, -1));
    }

    #[test]
    fn parse_and_display() {
        let c = CurveSpec::parse("N=6; k=1,1,1,3").unwrap();
        assert_eq!(c, CurveSpec::plat());
        assert_eq!(c.to_string(), "w^6 = (z-z1)(z-z2)(z-z3)(z-z4)^3");
        assert_eq!(CurveSpec::ew().to_string(), "y^4 = x(x-1)(x-λ)");
        assert!(matches!(
            CurveSpec::parse("N=6"),
            Err(SuperellError::Parse(_))
        ));
        assert!(matches!(
            CurveSpec::parse("N=1; k=1"),
            Err(SuperellError::InvalidCurve(_))
        ));
    }
}
