//! Seifert matrices: validation, Seifert's algorithm on braid closures, and
//! the standard matrix-level constructions.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::IntMatrix;

/// An integer Seifert matrix of a connected surface with `components`
/// boundary components and genus `surface_genus`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawSeifert", into = "RawSeifert")]
pub struct SeifertData {
    v: IntMatrix,
    components: usize,
    surface_genus: usize,
    label: String,
}

#[derive(Serialize, Deserialize)]
struct RawSeifert {
    seifert_matrix: Vec<Vec<i64>>,
    components: usize,
    #[serde(default)]
    label: String,
}

impl TryFrom<RawSeifert> for SeifertData {
    type Error = Error;

    fn try_from(raw: RawSeifert) -> Result<Self> {
        SeifertData::from_rows(&raw.seifert_matrix, raw.components, raw.label)
    }
}

impl From<SeifertData> for RawSeifert {
    fn from(s: SeifertData) -> Self {
        RawSeifert {
            seifert_matrix: s.rows_i64(),
            components: s.components,
            label: s.label,
        }
    }
}

impl SeifertData {
    /// Validate `v` as the Seifert matrix of a connected surface with `components`
    /// boundary components: `rank(V - V^T) = 2g`, `n = 2g + m - 1`, and for knots
    /// `|det(V - V^T)| = 1`.
    pub fn new(v: IntMatrix, components: usize, label: impl Into<String>) -> Result<Self> {
        if !v.is_square() {
            return Err(Error::InvalidSeifert(format!(
                "matrix is {}x{}, not square",
                v.rows(),
                v.cols()
            )));
        }
        if components == 0 {
            return Err(Error::InvalidSeifert("a link has at least one component".into()));
        }
        let n = v.rows();
        let skew = v.sub(&v.transpose());
        let rank = skew.rank();
        if n + 1 != rank + components {
            return Err(Error::InvalidSeifert(format!(
                "size {n} with rank(V - V^T) = {rank} does not match {components} boundary components"
            )));
        }
        if components == 1 && !skew.det().abs().is_one() {
            return Err(Error::InvalidSeifert(format!(
                "det(V - V^T) = {}, expected ±1 for a knot",
                skew.det()
            )));
        }
        Ok(SeifertData {
            v,
            components,
            surface_genus: rank / 2,
            label: label.into(),
        })
    }

    pub fn from_rows(rows: &[Vec<i64>], components: usize, label: impl Into<String>) -> Result<Self> {
        let v = IntMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
                .collect(),
        )
        .ok_or_else(|| Error::InvalidSeifert("rows have different lengths".into()))?;
        SeifertData::new(v, components, label)
    }

    /// The unknot, bounding a disc.
    pub fn unknot() -> Self {
        SeifertData {
            v: IntMatrix::zeros(0, 0),
            components: 1,
            surface_genus: 0,
            label: "unknot".into(),
        }
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.v
    }

    pub fn size(&self) -> usize {
        self.v.rows()
    }

    pub fn components(&self) -> usize {
        self.components
    }

    pub fn surface_genus(&self) -> usize {
        self.surface_genus
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = label.into();
        self
    }

    pub fn rows_i64(&self) -> Vec<Vec<i64>> {
        self.v
            .to_rows()
            .into_iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).expect("Seifert entries fit in i64"))
                    .collect()
            })
            .collect()
    }
}

/// A basis loop of the braid Seifert surface: it runs between the bands at
/// word positions `a0 < a1`, consecutive occurrences of generator `gen`.
struct Loop {
    gen: usize,
    a0: usize,
    a1: usize,
    e0: i64,
    e1: i64,
}

/// Seifert's algorithm on the closure of `b`: one disc per strand, one band
/// per letter. The first homology has a basis of loops through consecutive
/// occurrences of each generator, ordered by (generator, occurrence).
pub fn seifert_matrix_from_braid(b: &BraidWord) -> Result<SeifertData> {
    let s = b.strands();
    let mut loops: Vec<Loop> = Vec::new();
    let mut first_loop = vec![0usize; s];
    for (gen, first) in first_loop.iter_mut().enumerate().skip(1) {
        let occ: Vec<(usize, i64)> = b
            .letters()
            .iter()
            .enumerate()
            .filter(|(_, l)| l.unsigned_abs() as usize == gen)
            .map(|(p, l)| (p, l.signum()))
            .collect();
        if occ.is_empty() {
            return Err(Error::DisconnectedSurface(gen));
        }
        *first = loops.len();
        loops.extend(occ.windows(2).map(|w| Loop {
            gen,
            a0: w[0].0,
            a1: w[1].0,
            e0: w[0].1,
            e1: w[1].1,
        }));
    }

    let n = loops.len();
    let mut v = vec![vec![0i64; n]; n];
    for (a, la) in loops.iter().enumerate() {
        v[a][a] = -(la.e0 + la.e1) / 2;
        if let Some(lb) = loops.get(a + 1).filter(|lb| lb.gen == la.gen) {
            debug_assert_eq!(lb.a0, la.a1);
            if la.e1 > 0 {
                v[a][a + 1] = 1;
            } else {
                v[a + 1][a] = -1;
            }
        }
        for (b_idx, lb) in loops
            .iter()
            .enumerate()
            .skip(first_loop.get(la.gen + 1).copied().unwrap_or(n))
        {
            if lb.gen != la.gen + 1 {
                break;
            }
            if la.a0 < lb.a0 && lb.a0 < la.a1 && la.a1 < lb.a1 {
                v[a][b_idx] += 1;
            } else if lb.a0 < la.a0 && la.a0 < lb.a1 && lb.a1 < la.a1 {
                v[a][b_idx] -= 1;
            }
        }
    }
    SeifertData::from_rows(&v, b.closure_components(), b.to_string())
}

pub fn connected_sum(a: &SeifertData, b: &SeifertData) -> Result<SeifertData> {
    if a.components != 1 || b.components != 1 {
        return Err(Error::KnotsOnly("connected sum"));
    }
    Ok(SeifertData {
        v: a.v.direct_sum(&b.v),
        components: 1,
        surface_genus: a.surface_genus + b.surface_genus,
        label: format!("{}#{}", a.label, b.label),
    })
}

/// Seifert matrix of the mirror image, `-V^T`.
pub fn mirror(a: &SeifertData) -> SeifertData {
    SeifertData {
        v: a.v.transpose().map(|x| -x.clone()),
        components: a.components,
        surface_genus: a.surface_genus,
        label: format!("mirror({})", a.label),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Direction {
    RowFirst,
    ColumnFirst,
}

/// Enlarge by an S-equivalence stabilization block. Row-first gives
/// `[[V, 0, 0], [ξ^T, 0, 1], [0, 0, 0]]`, column-first gives
/// `[[V, ξ, 0], [0, 0, 0], [0, 1, 0]]`.
pub fn stabilize(a: &SeifertData, direction: Direction, new_column: &[i64]) -> Result<SeifertData> {
    let n = a.size();
    if new_column.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: new_column.len(),
        });
    }
    let mut v = IntMatrix::zeros(n + 2, n + 2);
    for i in 0..n {
        for j in 0..n {
            v[(i, j)] = a.v[(i, j)].clone();
        }
    }
    match direction {
        Direction::RowFirst => {
            for (j, &x) in new_column.iter().enumerate() {
                v[(n, j)] = BigInt::from(x);
            }
            v[(n, n + 1)] = BigInt::one();
        }
        Direction::ColumnFirst => {
            for (i, &x) in new_column.iter().enumerate() {
                v[(i, n)] = BigInt::from(x);
            }
            v[(n + 1, n)] = BigInt::one();
        }
    }
    debug_assert!(v[(n, n)].is_zero());
    Ok(SeifertData {
        v,
        components: a.components,
        surface_genus: a.surface_genus + 1,
        label: a.label.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;

    #[test]
    fn trefoil_matrix() {
        let s = seifert_matrix_from_braid(&torus_braid(2, 3).unwrap()).unwrap();
        assert_eq!(s.rows_i64(), vec![vec![-1, 1], vec![0, -1]]);
        assert_eq!((s.components(), s.surface_genus()), (1, 1));
    }

    #[test]
    fn torus_3_5_dimensions() {
        let s = seifert_matrix_from_braid(&torus_braid(3, 5).unwrap()).unwrap();
        assert_eq!((s.size(), s.components(), s.surface_genus()), (8, 1, 4));
    }

    #[test]
    fn one_strand_unknot() {
        let s = seifert_matrix_from_braid(&BraidWord::new(1, vec![]).unwrap()).unwrap();
        assert_eq!((s.size(), s.components(), s.surface_genus()), (0, 1, 0));
    }

    #[test]
    fn rejects_split_closure() {
        let b = BraidWord::new(3, vec![1, 1]).unwrap();
        assert!(matches!(
            seifert_matrix_from_braid(&b),
            Err(Error::DisconnectedSurface(2))
        ));
    }

    #[test]
    fn validation() {
        assert!(SeifertData::from_rows(&[vec![1]], 2, "hopf").is_ok());
        assert!(SeifertData::from_rows(&[vec![0]], 2, "unlink").is_ok());
        assert!(SeifertData::from_rows(&[vec![1]], 1, "").is_err());
        assert!(SeifertData::from_rows(&[vec![1, 2], vec![0, 1]], 1, "").is_err());
        assert!(SeifertData::from_rows(&[vec![1, 2]], 1, "").is_err());
        assert!(SeifertData::from_rows(&[vec![-1, 1], vec![0, 2]], 1, "").is_ok());
    }

    #[test]
    fn constructions() {
        let t = seifert_matrix_from_braid(&torus_braid(2, 3).unwrap()).unwrap();
        let sum = connected_sum(&SeifertData::unknot(), &t).unwrap();
        assert_eq!(sum.matrix(), t.matrix());
        assert_eq!(mirror(&mirror(&t)).matrix(), t.matrix());
        assert_eq!(mirror(&SeifertData::unknot()).size(), 0);

        let st = stabilize(&SeifertData::unknot(), Direction::RowFirst, &[]).unwrap();
        assert_eq!(st.rows_i64(), vec![vec![0, 1], vec![0, 0]]);
        assert_eq!(st.surface_genus(), 1);
        let st = stabilize(&t, Direction::ColumnFirst, &[2, -1]).unwrap();
        assert!(SeifertData::new(st.matrix().clone(), 1, "").is_ok());
        assert!(stabilize(&t, Direction::RowFirst, &[1]).is_err());

        let hopf = SeifertData::from_rows(&[vec![1]], 2, "hopf").unwrap();
        assert!(matches!(connected_sum(&hopf, &t), Err(Error::KnotsOnly(_))));
    }

    #[test]
    fn json_round_trip() {
        let t = seifert_matrix_from_braid(&torus_braid(2, 3).unwrap()).unwrap();
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(
            json,
            r#"{"seifert_matrix":[[-1,1],[0,-1]],"components":1,"label":"strands=2; 1 1 1"}"#
        );
        assert_eq!(serde_json::from_str::<SeifertData>(&json).unwrap(), t);
        assert!(serde_json::from_str::<SeifertData>(r#"{"seifert_matrix":[[1]],"components":1}"#).is_err());
    }
}
