//! Levine-Tristram signature functions, Alexander polynomials and nullities.
//!
//! The circle is parametrized by `x = z + z^-1 = 2 cos θ` on the closed upper
//! half; the lower half is its complex conjugate and carries the same values.
//! Between consecutive roots of the breakpoint polynomial `D(x)` the rank of
//! `B(z)` is constant, so the signature is constant too and is computed
//! exactly at one rational sample point.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hermitian::{b_family, jacobi_signature, minor_signs, HermitianFamily, Inertia};
use crate::matrix::Matrix;
use crate::roots::{rational_str, real_roots, IsolatingInterval, RealRoot, SturmChain, Window};
use crate::scalar::{rat, ratio, rational_to_f64, rational_to_string, HalfInt};
use crate::seifert::SeifertData;
use crate::{IntLaurent, IntMatrix, IntPoly};

/// A point `x = 2 cos θ` of the closed upper half circle: either rational,
/// or the unique root of `polynomial` inside `interval`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum CirclePoint {
    Rational {
        #[serde(with = "rational_str")]
        x: BigRational,
    },
    Algebraic {
        polynomial: IntPoly,
        interval: IsolatingInterval,
    },
}

impl CirclePoint {
    pub fn rational(x: BigRational) -> Self {
        CirclePoint::Rational { x }
    }

    pub fn from_int(x: i64) -> Self {
        CirclePoint::Rational { x: rat(x) }
    }

    /// Checks that a rational point lies in `[-2, 2]`, or that an algebraic
    /// one is a root of its polynomial isolated inside `(-2, 2)`.
    pub fn validate(&self) -> Result<()> {
        match self {
            CirclePoint::Rational { x } => {
                if x < &rat(-2) || x > &rat(2) {
                    return Err(Error::InvalidPoint(format!(
                        "x = {} outside [-2, 2]",
                        rational_to_string(x)
                    )));
                }
            }
            CirclePoint::Algebraic { polynomial, interval } => {
                if interval.lo < rat(-2) || interval.hi > rat(2) || interval.lo >= interval.hi {
                    return Err(Error::InvalidPoint("isolating interval must lie in [-2, 2]".into()));
                }
                let sqf = polynomial.square_free_part_int();
                if sqf.is_zero()
                    || sqf.sign_at(&interval.lo) == 0
                    || sqf.sign_at(&interval.hi) == 0
                    || SturmChain::new(&sqf).count_open(&interval.lo, &interval.hi) != 1
                {
                    return Err(Error::InvalidPoint("interval does not isolate exactly one root".into()));
                }
            }
        }
        Ok(())
    }

    pub fn approx(&self) -> f64 {
        match self {
            CirclePoint::Rational { x } => rational_to_f64(x),
            CirclePoint::Algebraic { interval, .. } => interval.approx(),
        }
    }

    /// The angle `θ` in `[0, π]` with `2 cos θ = x`.
    pub fn angle(&self) -> f64 {
        (self.approx() / 2.0).clamp(-1.0, 1.0).acos()
    }

    fn lower(&self) -> &BigRational {
        match self {
            CirclePoint::Rational { x } => x,
            CirclePoint::Algebraic { interval, .. } => &interval.lo,
        }
    }

    fn upper(&self) -> &BigRational {
        match self {
            CirclePoint::Rational { x } => x,
            CirclePoint::Algebraic { interval, .. } => &interval.hi,
        }
    }
}

/// Signature and nullity on an open interval of `x` between breakpoints.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntervalValue {
    pub lo: CirclePoint,
    pub hi: CirclePoint,
    /// The rational point at which the value was computed.
    #[serde(with = "rational_str")]
    pub sample: BigRational,
    pub sigma: i64,
    pub nullity: usize,
}

/// A jump location of the signature function inside `(-2, 2)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Breakpoint {
    pub point: CirclePoint,
    /// Mean of the values on the two adjacent intervals.
    pub averaged_sigma: HalfInt,
    pub nullity: usize,
    /// Value on the interval to the left (smaller `x`, angle closer to `π`).
    pub left_sigma: i64,
    pub right_sigma: i64,
    /// Signature of `B(z)` at the point itself, when the point is rational.
    pub sigma: Option<i64>,
}

/// Values at `x = ±2`. The averaged value is the limit from the adjacent
/// interval, which is the same from both halves of the circle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EndpointValue {
    pub averaged_sigma: i64,
    pub sigma: i64,
    pub nullity: usize,
}

/// The exact Levine-Tristram signature function of a hermitian family.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignatureFunction {
    pub size: usize,
    pub generic_rank: usize,
    /// `det B` in `x` when the family is nonsingular, otherwise the gcd of
    /// the principal minors of maximal nonvanishing size.
    pub breakpoint_polynomial: IntPoly,
    pub breakpoints: Vec<Breakpoint>,
    pub intervals: Vec<IntervalValue>,
    pub at_minus_two: EndpointValue,
    pub at_two: EndpointValue,
}

/// Gcds of principal minors, computed on first use.
struct MinorGcds<'a> {
    family: &'a HermitianFamily,
    cache: Vec<Option<IntPoly>>,
}

impl<'a> MinorGcds<'a> {
    fn new(family: &'a HermitianFamily) -> Self {
        MinorGcds {
            family,
            cache: vec![None; family.size() + 1],
        }
    }

    fn get(&mut self, k: usize) -> &IntPoly {
        if self.cache[k].is_none() {
            let g = if k == 0 {
                IntPoly::one()
            } else {
                self.family.principal_minor_gcd(k)
            };
            self.cache[k] = Some(g);
        }
        self.cache[k].as_ref().unwrap()
    }
}

/// Dyadic points of `(lo, hi)`: midpoint first, then quarters, eighths, ...
fn dyadic_candidates<'a>(
    lo: &'a BigRational,
    hi: &'a BigRational,
    depth: u32,
) -> impl Iterator<Item = BigRational> + 'a {
    (1..=depth).flat_map(move |j| {
        let den = 1i64 << j;
        (1..den).step_by(2).map(move |k| lo + (hi - lo) * ratio(k, den))
    })
}

pub fn family_signature_function(family: &HermitianFamily) -> Result<SignatureFunction> {
    let n = family.size();
    let r = family.generic_rank();
    let mut gcds = MinorGcds::new(family);
    let d = if r == n {
        family.det().primitive_part()
    } else {
        gcds.get(r).clone()
    };
    debug_assert!(!d.is_zero());

    let sqf = d.square_free_part_int();
    let tol = BigRational::new(BigInt::one(), BigInt::one() << 40u32);
    let roots: Vec<CirclePoint> = if d.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        real_roots(&d, &Window::open(rat(-2), rat(2)))?
            .into_iter()
            .map(|root| match root {
                RealRoot::Rational { value, .. } => CirclePoint::Rational { x: value },
                RealRoot::Algebraic(iv) => CirclePoint::Algebraic {
                    polynomial: sqf.clone(),
                    interval: iv.refine(&sqf, &tol),
                },
            })
            .collect()
    };

    let leading = if r == n { family.leading_minors() } else { Vec::new() };
    let jacobi_usable = r == n && leading.iter().all(|m| !m.is_zero());

    let mut bounds = vec![CirclePoint::from_int(-2)];
    bounds.extend(roots.iter().cloned());
    bounds.push(CirclePoint::from_int(2));
    let mut intervals = Vec::with_capacity(bounds.len() - 1);
    for w in bounds.windows(2) {
        let (lo, hi) = (w[0].upper(), w[1].lower());
        let mut value = None;
        if jacobi_usable {
            for x in dyadic_candidates(lo, hi, 12) {
                if let Some(s) = jacobi_signature(&minor_signs(&leading, &x)) {
                    value = Some((x, s, 0));
                    break;
                }
            }
        }
        let (sample, sigma, nullity) = match value {
            Some(v) => v,
            None => {
                let x = (lo + hi) / rat(2);
                let inertia = family.inertia_at(&x)?;
                (x, inertia.signature(), inertia.nullity)
            }
        };
        debug_assert_eq!(nullity, n - r);
        intervals.push(IntervalValue {
            lo: w[0].clone(),
            hi: w[1].clone(),
            sample,
            sigma,
            nullity,
        });
    }

    let mut breakpoints = Vec::with_capacity(roots.len());
    for (i, point) in roots.into_iter().enumerate() {
        let (left, right) = (intervals[i].sigma, intervals[i + 1].sigma);
        let (nullity, sigma) = match &point {
            CirclePoint::Rational { x } => {
                let inertia = family.inertia_at(x)?;
                (inertia.nullity, Some(inertia.signature()))
            }
            CirclePoint::Algebraic { interval, .. } => (n - rank_at_root(&mut gcds, r, &sqf, interval), None),
        };
        breakpoints.push(Breakpoint {
            point,
            averaged_sigma: HalfInt::mean(left, right),
            nullity,
            left_sigma: left,
            right_sigma: right,
            sigma,
        });
    }

    let endpoint = |x: i64, averaged: i64| -> Result<EndpointValue> {
        let inertia = family.inertia_at(&rat(x))?;
        Ok(EndpointValue {
            averaged_sigma: averaged,
            sigma: inertia.signature(),
            nullity: inertia.nullity,
        })
    };
    let at_minus_two = endpoint(-2, intervals[0].sigma)?;
    let at_two = endpoint(2, intervals[intervals.len() - 1].sigma)?;

    Ok(SignatureFunction {
        size: n,
        generic_rank: r,
        breakpoint_polynomial: d,
        breakpoints,
        intervals,
        at_minus_two,
        at_two,
    })
}

/// Rank of the family at the root of `sqf` isolated by `iv`: the largest
/// `k` for which the gcd of principal `k x k` minors does not vanish there.
fn rank_at_root(gcds: &mut MinorGcds, generic_rank: usize, sqf: &IntPoly, iv: &IsolatingInterval) -> usize {
    for k in (1..generic_rank).rev() {
        let g = gcds.get(k);
        if g.is_zero() {
            continue;
        }
        let common = g.gcd_int(sqf);
        if common.degree().unwrap_or(0) == 0 || SturmChain::new(&common).count_open(&iv.lo, &iv.hi) == 0 {
            return k;
        }
    }
    0
}

impl SignatureFunction {
    /// Largest `|σ|` over the open intervals, with the index of the first
    /// interval attaining it. Averaged values never exceed this, being means
    /// of neighbouring interval values.
    pub fn max_abs_sigma(&self) -> (i64, usize) {
        self.intervals.iter().enumerate().fold((0, 0), |(best, at), (i, iv)| {
            if iv.sigma.abs() > best {
                (iv.sigma.abs(), i)
            } else {
                (best, at)
            }
        })
    }

    /// Where a rational `x` in `[-2, 2]` sits: on breakpoint `i` or inside interval `i`.
    fn locate(&self, x: &BigRational) -> Location {
        for (i, bp) in self.breakpoints.iter().enumerate() {
            match &bp.point {
                CirclePoint::Rational { x: b } => match x.cmp(b) {
                    Ordering::Equal => return Location::Breakpoint(i),
                    Ordering::Less => return Location::Interval(i),
                    Ordering::Greater => {}
                },
                CirclePoint::Algebraic { polynomial, interval } => {
                    if x <= &interval.lo {
                        return Location::Interval(i);
                    }
                    if x < &interval.hi {
                        let s = polynomial.sign_at(x);
                        debug_assert_ne!(
                            s, 0,
                            "isolating interval of an irrational root contains a rational root"
                        );
                        let left_sign = polynomial.sign_at(&interval.lo);
                        return if s == left_sign {
                            Location::Interval(i)
                        } else {
                            Location::Interval(i + 1)
                        };
                    }
                }
            }
        }
        Location::Interval(self.breakpoints.len())
    }

    /// The Levine-Tristram value at `p`: averaged signature (the mean of the
    /// one-sided limits) and exact nullity of `B(z)`.
    pub fn value_at(&self, p: &CirclePoint) -> Result<(HalfInt, usize)> {
        p.validate()?;
        match p {
            CirclePoint::Rational { x } => {
                if x == &rat(-2) {
                    return Ok((
                        HalfInt::from_int(self.at_minus_two.averaged_sigma),
                        self.at_minus_two.nullity,
                    ));
                }
                if x == &rat(2) {
                    return Ok((HalfInt::from_int(self.at_two.averaged_sigma), self.at_two.nullity));
                }
                Ok(match self.locate(x) {
                    Location::Breakpoint(i) => (self.breakpoints[i].averaged_sigma, self.breakpoints[i].nullity),
                    Location::Interval(i) => (HalfInt::from_int(self.intervals[i].sigma), self.intervals[i].nullity),
                })
            }
            CirclePoint::Algebraic { polynomial, interval } => {
                let q = polynomial.square_free_part_int();
                let mut iv = interval.clone();
                let d = self.breakpoint_polynomial.square_free_part_int();
                let common = q.gcd_int(&d);
                if common.degree().unwrap_or(0) > 0 && SturmChain::new(&common).count_open(&iv.lo, &iv.hi) > 0 {
                    // `p` is a root of D: find the breakpoint sharing it.
                    for bp in &self.breakpoints {
                        let lo = iv.lo.clone().max(bp.point.lower().clone());
                        let hi = iv.hi.clone().min(bp.point.upper().clone());
                        let hit = match &bp.point {
                            CirclePoint::Rational { x } => iv.contains(x),
                            CirclePoint::Algebraic { .. } => {
                                lo < hi && SturmChain::new(&common).count_open(&lo, &hi) > 0
                            }
                        };
                        if hit {
                            return Ok((bp.averaged_sigma, bp.nullity));
                        }
                    }
                    unreachable!("root of the breakpoint polynomial missing from the breakpoint list");
                }
                // Not a breakpoint: shrink the interval until it avoids every breakpoint.
                loop {
                    let clear = self
                        .breakpoints
                        .iter()
                        .all(|bp| &iv.hi <= bp.point.lower() || &iv.lo >= bp.point.upper());
                    if clear {
                        let Location::Interval(i) = self.locate(&iv.midpoint()) else {
                            unreachable!("midpoint of a breakpoint-free interval is not a breakpoint")
                        };
                        return Ok((HalfInt::from_int(self.intervals[i].sigma), self.intervals[i].nullity));
                    }
                    let w = iv.width() / rat(4);
                    iv = iv.refine(&q, &w);
                }
            }
        }
    }

    /// Rows `(x_lo, x_hi, sigma, nullity)`: one per open interval and one per
    /// breakpoint (with `x_lo = x_hi` and the averaged value).
    pub fn csv_rows(&self) -> Vec<(f64, f64, f64, usize)> {
        let mut rows = Vec::new();
        for (i, iv) in self.intervals.iter().enumerate() {
            rows.push((iv.lo.approx(), iv.hi.approx(), iv.sigma as f64, iv.nullity));
            if let Some(bp) = self.breakpoints.get(i) {
                let x = bp.point.approx();
                rows.push((x, x, bp.averaged_sigma.to_f64(), bp.nullity));
            }
        }
        rows
    }
}

enum Location {
    Breakpoint(usize),
    Interval(usize),
}

/// Signature function of `B(t) = (1 - t) V + (1 - t^-1) V^T`.
pub fn signature_function(s: &SeifertData) -> Result<SignatureFunction> {
    matrix_signature_function(s.matrix())
}

/// As [`signature_function`], for an arbitrary square integer matrix.
pub fn matrix_signature_function(v: &IntMatrix) -> Result<SignatureFunction> {
    family_signature_function(&b_family(v))
}

/// Averaged signature and exact nullity of `B(z)` at one point.
pub fn signature_nullity_at(s: &SeifertData, p: &CirclePoint) -> Result<(HalfInt, usize)> {
    p.validate()?;
    let family = b_family(s.matrix());
    if let CirclePoint::Rational { x } = p {
        // Off the breakpoint locus the value can be read off directly.
        if x > &rat(-2) && x < &rat(2) {
            let d = family.det();
            if !d.is_zero() && !d.eval_rational(x).is_zero() {
                let inertia = family.inertia_at(x)?;
                return Ok((HalfInt::from_int(inertia.signature()), inertia.nullity));
            }
        }
    }
    family_signature_function(&family)?.value_at(p)
}

/// Evaluate the Witt class of a nonsingular hermitian form over `Q(t)` at a
/// circle point: the averaged signature of `A(z)`.
pub fn witt_evaluate(a: &HermitianFamily, p: &CirclePoint) -> Result<HalfInt> {
    if a.generic_rank() < a.size() {
        return Err(Error::SingularFamily);
    }
    Ok(family_signature_function(a)?.value_at(p)?.0)
}

/// `tV - V^T` over `Z[t, t^-1]`.
pub fn alexander_matrix(v: &IntMatrix) -> Matrix<IntLaurent> {
    let n = v.rows();
    Matrix::from_fn(n, n, |i, j| {
        IntLaurent::monomial(v[(i, j)].clone(), 1) - IntLaurent::constant(v[(j, i)].clone())
    })
}

/// `det(tV - V^T)` normalized to lowest exponent 0 and positive leading
/// coefficient; zero when the determinant vanishes.
pub fn alexander_from_seifert(s: &SeifertData) -> IntLaurent {
    alexander_of_matrix(s.matrix())
}

pub fn alexander_of_matrix(v: &IntMatrix) -> IntLaurent {
    let det = alexander_matrix(v).det();
    det.normalize().unwrap_or(det)
}

/// Corank of `tV - V^T` over `Q(t)`, checked against `0 <= β <= m - 1`.
pub fn link_nullity(s: &SeifertData) -> Result<usize> {
    let beta = s.size() - alexander_matrix(s.matrix()).rank();
    let max = s.components() - 1;
    if beta > max {
        return Err(Error::NullityOutOfRange { beta, max });
    }
    Ok(beta)
}

/// Exact inertia of `B(z)` at a rational circle point.
pub fn inertia_at(s: &SeifertData, x: &BigRational) -> Result<Inertia> {
    b_family(s.matrix()).inertia_at(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;
    use crate::seifert::seifert_matrix_from_braid;

    fn trefoil() -> SeifertData {
        SeifertData::from_rows(&[vec![-1, 1], vec![0, -1]], 1, "trefoil").unwrap()
    }

    #[test]
    fn unknot_is_trivial() {
        let f = signature_function(&SeifertData::unknot()).unwrap();
        assert!(f.breakpoints.is_empty());
        assert_eq!(f.intervals.len(), 1);
        assert_eq!((f.intervals[0].sigma, f.intervals[0].nullity), (0, 0));
        assert_eq!(alexander_from_seifert(&SeifertData::unknot()), IntLaurent::one());
    }

    #[test]
    fn trefoil_signature_function() {
        let f = signature_function(&trefoil()).unwrap();
        assert_eq!(f.breakpoints.len(), 1);
        let bp = &f.breakpoints[0];
        assert_eq!(bp.point, CirclePoint::from_int(1));
        assert_eq!((bp.averaged_sigma, bp.nullity), (HalfInt::mean(-2, 0), 1));
        assert_eq!(bp.sigma, Some(-1));
        assert_eq!((f.intervals[0].sigma, f.intervals[1].sigma), (-2, 0));
        assert_eq!(
            f.at_minus_two,
            EndpointValue {
                averaged_sigma: -2,
                sigma: -2,
                nullity: 0
            }
        );
        assert_eq!(f.at_two.averaged_sigma, 0);
    }

    #[test]
    fn trefoil_point_values() {
        let t = trefoil();
        let at = |p: CirclePoint| signature_nullity_at(&t, &p).unwrap();
        assert_eq!(at(CirclePoint::from_int(-2)), (HalfInt::from_int(-2), 0));
        assert_eq!(at(CirclePoint::from_int(1)), (HalfInt::mean(-2, 0), 1));
        assert_eq!(at(CirclePoint::from_int(0)), (HalfInt::from_int(-2), 0));
        assert_eq!(at(CirclePoint::rational(ratio(3, 2))), (HalfInt::from_int(0), 0));
        assert!(signature_nullity_at(&t, &CirclePoint::from_int(3)).is_err());
    }

    #[test]
    fn torus_3_5() {
        let s = seifert_matrix_from_braid(&torus_braid(3, 5).unwrap()).unwrap();
        let expected = IntLaurent::from_poly(0, &IntPoly::from_i64s(&[1, -1, 0, 1, -1, 1, 0, -1, 1]));
        assert_eq!(alexander_from_seifert(&s), expected);
        let f = signature_function(&s).unwrap();
        let (max, at) = f.max_abs_sigma();
        assert_eq!((max, at), (8, 0));
        assert_eq!(link_nullity(&s).unwrap(), 0);
    }

    #[test]
    fn algebraic_breakpoints_and_lookup() {
        // Figure-eight knot: all roots of D on the circle side lie outside (-2, 2).
        let s = SeifertData::from_rows(&[vec![1, 1], vec![0, -1]], 1, "4_1").unwrap();
        let f = signature_function(&s).unwrap();
        assert!(f.intervals.iter().all(|iv| iv.sigma == 0));
        let s = SeifertData::from_rows(&[vec![-1, 1], vec![0, 2]], 1, "6_1").unwrap();
        let f = signature_function(&s).unwrap();
        assert!(f.intervals.iter().all(|iv| iv.sigma == 0));
        for bp in &f.breakpoints {
            assert_eq!(f.value_at(&bp.point).unwrap(), (bp.averaged_sigma, bp.nullity));
        }

        // T(2,5): two algebraic breakpoints, roots of x^2 - x - 1.
        let t25 = seifert_matrix_from_braid(&torus_braid(2, 5).unwrap()).unwrap();
        let f = signature_function(&t25).unwrap();
        assert_eq!(f.breakpoints.len(), 2);
        let sig: Vec<i64> = f.intervals.iter().map(|iv| iv.sigma).collect();
        assert_eq!(sig, vec![-4, -2, 0]);
        for bp in &f.breakpoints {
            assert!(matches!(bp.point, CirclePoint::Algebraic { .. }));
            assert_eq!(bp.nullity, 1);
            assert_eq!(f.value_at(&bp.point).unwrap(), (bp.averaged_sigma, 1));
        }
        let golden = CirclePoint::Algebraic {
            polynomial: IntPoly::from_i64s(&[-1, -1, 1]),
            interval: IsolatingInterval {
                lo: rat(1),
                hi: rat(2),
                multiplicity: 1,
            },
        };
        assert_eq!(f.value_at(&golden).unwrap(), (HalfInt::mean(-2, 0), 1));
        let sqrt2 = CirclePoint::Algebraic {
            polynomial: IntPoly::from_i64s(&[-2, 0, 1]),
            interval: IsolatingInterval {
                lo: rat(1),
                hi: rat(2),
                multiplicity: 1,
            },
        };
        assert_eq!(f.value_at(&sqrt2).unwrap(), (HalfInt::from_int(-2), 0));
    }

    #[test]
    fn link_nullities() {
        let hopf = SeifertData::from_rows(&[vec![1]], 2, "hopf").unwrap();
        assert_eq!(link_nullity(&hopf).unwrap(), 0);
        let unlink = SeifertData::from_rows(&[vec![0]], 2, "unlink").unwrap();
        assert_eq!(link_nullity(&unlink).unwrap(), 1);
        assert!(alexander_from_seifert(&unlink).is_zero());
        let f = signature_function(&unlink).unwrap();
        assert_eq!((f.generic_rank, f.intervals.len()), (0, 1));
        assert_eq!(f.intervals[0].nullity, 1);
    }

    #[test]
    fn witt_examples() {
        let x = IntLaurent::from_i64_terms(&[(-1, 1), (1, 1)]);
        let a = HermitianFamily::new(Matrix::from_rows(vec![vec![x]]).unwrap()).unwrap();
        assert_eq!(
            witt_evaluate(&a, &CirclePoint::from_int(1)).unwrap(),
            HalfInt::from_int(1)
        );
        let h = HermitianFamily::new(
            Matrix::from_rows(vec![
                vec![IntLaurent::zero(), IntLaurent::one()],
                vec![IntLaurent::one(), IntLaurent::zero()],
            ])
            .unwrap(),
        )
        .unwrap();
        for p in [-2, 0, 1, 2] {
            assert_eq!(
                witt_evaluate(&h, &CirclePoint::from_int(p)).unwrap(),
                HalfInt::from_int(0)
            );
        }
        let b = b_family(trefoil().matrix());
        assert_eq!(
            witt_evaluate(&b, &CirclePoint::from_int(-2)).unwrap(),
            HalfInt::from_int(-2)
        );
        let singular = HermitianFamily::new(Matrix::from_rows(vec![vec![IntLaurent::zero()]]).unwrap()).unwrap();
        assert!(matches!(
            witt_evaluate(&singular, &CirclePoint::from_int(0)),
            Err(Error::SingularFamily)
        ));
    }

    #[test]
    fn json_round_trip() {
        let t25 = seifert_matrix_from_braid(&torus_braid(2, 5).unwrap()).unwrap();
        let f = signature_function(&t25).unwrap();
        let json = serde_json::to_string(&f).unwrap();
        assert_eq!(serde_json::from_str::<SignatureFunction>(&json).unwrap(), f);
    }
}
