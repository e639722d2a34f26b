//! Hermitian matrices over `Q(t)` with the involution `t -> t^-1`, and their
//! evaluation at points of the unit circle.
//!
//! A point `z = e^{iθ}` is described by `x = z + z^-1 = 2 cos θ`. Every
//! principal minor of a hermitian family is a self-conjugate Laurent
//! polynomial, hence an integer polynomial in `x`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::quad::QuadFieldElem;
use crate::scalar::{rat, rational_to_string, sign_of, InvolutiveField};
use crate::{IntLaurent, IntMatrix, IntPoly};

/// Counts of positive, negative and zero eigenvalues.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Inertia {
    pub positive: usize,
    pub negative: usize,
    pub nullity: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.positive as i64 - self.negative as i64
    }

    pub fn rank(&self) -> usize {
        self.positive + self.negative
    }
}

/// Inertia of a hermitian matrix by exact congruence diagonalization.
///
/// A nonzero real diagonal entry is used as pivot when one exists. Otherwise
/// some off-diagonal `h = H[i][j]` is nonzero and replacing `e_i` by
/// `e_i + conj(h) e_j` produces the diagonal entry `2 h conj(h) > 0`.
pub fn inertia<F: InvolutiveField>(m: &Matrix<F>) -> Inertia {
    assert!(m.is_square());
    let mut h = m.clone();
    let mut live: Vec<usize> = (0..m.rows()).collect();
    let mut out = Inertia::default();
    while !live.is_empty() {
        let pivot = match live.iter().position(|&i| !h[(i, i)].is_zero()) {
            Some(p) => p,
            None => {
                let pair = live
                    .iter()
                    .enumerate()
                    .flat_map(|(p, &i)| live.iter().map(move |&j| (p, i, j)))
                    .find(|&(_, i, j)| !h[(i, j)].is_zero());
                let Some((p, i, j)) = pair else {
                    out.nullity += live.len();
                    break;
                };
                let c = h[(i, j)].conj();
                // column i += c * column j, then row i += conj(c) * row j
                for &r in &live {
                    let v = h[(r, i)].clone() + c.clone() * h[(r, j)].clone();
                    h[(r, i)] = v;
                }
                let cc = c.conj();
                for &col in &live {
                    let v = h[(i, col)].clone() + cc.clone() * h[(j, col)].clone();
                    h[(i, col)] = v;
                }
                p
            }
        };
        let i = live.remove(pivot);
        let d = h[(i, i)].clone();
        debug_assert!(d.is_self_conjugate());
        match d.real_sign() {
            1 => out.positive += 1,
            -1 => out.negative += 1,
            _ => unreachable!("pivot is nonzero"),
        }
        let d_inv = d.inv().expect("nonzero pivot");
        for &r in &live {
            let f = h[(r, i)].clone() * d_inv.clone();
            if f.is_zero() {
                continue;
            }
            for &c in &live {
                let v = h[(r, c)].clone() - f.clone() * h[(i, c)].clone();
                h[(r, c)] = v;
            }
        }
    }
    out
}

/// Signature from the leading principal minors `d_1, ..., d_n` (with
/// `d_0 = 1`), valid when none of them vanishes: `n - 2 * (sign changes)`.
pub fn jacobi_signature(minor_signs: &[i32]) -> Option<i64> {
    if minor_signs.contains(&0) {
        return None;
    }
    let mut prev = 1;
    let mut changes = 0i64;
    for &s in minor_signs {
        if s != prev {
            changes += 1;
        }
        prev = s;
    }
    Some(minor_signs.len() as i64 - 2 * changes)
}

/// Square matrix of Laurent polynomials with `A[j][i] = involution(A[i][j])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HermitianFamily {
    a: Matrix<IntLaurent>,
}

impl HermitianFamily {
    pub fn new(a: Matrix<IntLaurent>) -> Result<Self> {
        if !a.is_square() {
            return Err(Error::DimensionMismatch {
                expected: a.rows(),
                got: a.cols(),
            });
        }
        for i in 0..a.rows() {
            for j in i..a.cols() {
                if a[(j, i)] != a[(i, j)].involution() {
                    return Err(Error::NotHermitian(i, j));
                }
            }
        }
        Ok(HermitianFamily { a })
    }

    pub fn size(&self) -> usize {
        self.a.rows()
    }

    pub fn entries(&self) -> &Matrix<IntLaurent> {
        &self.a
    }

    /// Value at the circle point with `2 cos θ = x`, for rational `-2 < x < 2`.
    pub fn at_quad(&self, x: &BigRational) -> Result<Matrix<QuadFieldElem<BigRational>>> {
        if x <= &rat(-2) || x >= &rat(2) {
            return Err(Error::InvalidPoint(format!(
                "x = {} is not inside (-2, 2)",
                rational_to_string(x)
            )));
        }
        let z = QuadFieldElem::z(x.clone());
        let zi = z.conj();
        let rows = self.a.to_rows();
        let span = rows
            .iter()
            .flatten()
            .flat_map(|e| [e.min_exponent(), e.max_exponent()])
            .flatten();
        let k = span.map(i64::abs).max().unwrap_or(0);
        let mut pos = vec![QuadFieldElem::one()];
        let mut neg = vec![QuadFieldElem::one()];
        for i in 1..=k as usize {
            pos.push(pos[i - 1].clone() * z.clone());
            neg.push(neg[i - 1].clone() * zi.clone());
        }
        Ok(self.a.map(|e| {
            e.terms().fold(QuadFieldElem::zero(), |acc, (exp, c)| {
                let p = if exp >= 0 {
                    &pos[exp as usize]
                } else {
                    &neg[(-exp) as usize]
                };
                acc + p.clone() * QuadFieldElem::real(BigRational::from_integer(c.clone()))
            })
        }))
    }

    /// Value at `t = s` for `s = ±1`, where the matrix is real symmetric.
    pub fn at_real(&self, s: i64) -> Matrix<BigRational> {
        assert!(s == 1 || s == -1);
        self.a.map(|e| {
            let v: BigInt = e
                .terms()
                .map(|(exp, c)| if exp % 2 == 0 { c.clone() } else { c * s })
                .sum();
            BigRational::from_integer(v)
        })
    }

    /// Exact inertia at the circle point `x`, for rational `x` in `[-2, 2]`.
    pub fn inertia_at(&self, x: &BigRational) -> Result<Inertia> {
        if x == &rat(2) {
            Ok(inertia(&self.at_real(1)))
        } else if x == &rat(-2) {
            Ok(inertia(&self.at_real(-1)))
        } else {
            Ok(inertia(&self.at_quad(x)?))
        }
    }

    /// The principal minor on `idx`, as a polynomial in `x`.
    pub fn principal_minor(&self, idx: &[usize]) -> IntPoly {
        self.a
            .select(idx, idx)
            .det()
            .to_x_poly()
            .expect("principal minors of a hermitian family are self-conjugate")
    }

    /// `d_1, ..., d_n` as polynomials in `x`.
    pub fn leading_minors(&self) -> Vec<IntPoly> {
        (1..=self.size())
            .map(|k| self.principal_minor(&(0..k).collect::<Vec<_>>()))
            .collect()
    }

    pub fn det(&self) -> IntPoly {
        self.principal_minor(&(0..self.size()).collect::<Vec<_>>())
    }

    /// Rank over `Q(t)`.
    pub fn generic_rank(&self) -> usize {
        self.a.rank()
    }

    /// Gcd of all principal `k x k` minors as a primitive polynomial in `x`;
    /// zero when they all vanish identically. For a hermitian matrix the rank
    /// at a point is the largest `k` with some principal `k x k` minor nonzero there.
    pub fn principal_minor_gcd(&self, k: usize) -> IntPoly {
        let mut g = IntPoly::zero();
        for idx in combinations(self.size(), k) {
            let m = self.principal_minor(&idx);
            g = if g.is_zero() { m.primitive_part() } else { g.gcd_int(&m) };
            if g.degree() == Some(0) {
                break;
            }
        }
        g
    }
}

/// `k`-element subsets of `0..n` in lexicographic order.
pub(crate) fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    go(0, n, k, &mut cur, &mut out);
    out
}

/// `B(t) = (1 - t) V + (1 - t^-1) V^T`.
pub fn b_family(v: &IntMatrix) -> HermitianFamily {
    let one_minus_t = IntLaurent::from_i64_terms(&[(0, 1), (1, -1)]);
    let one_minus_ti = one_minus_t.involution();
    let n = v.rows();
    let a = Matrix::from_fn(n, n, |i, j| {
        one_minus_t.clone() * IntLaurent::constant(v[(i, j)].clone())
            + one_minus_ti.clone() * IntLaurent::constant(v[(j, i)].clone())
    });
    HermitianFamily { a }
}

/// Signs of the leading minors at a rational point, for the Jacobi rule.
pub(crate) fn minor_signs(minors: &[IntPoly], x: &BigRational) -> Vec<i32> {
    minors.iter().map(|d| sign_of(&d.eval_rational(x))).collect()
}
