//! Exact real-root isolation for integer polynomials.
//!
//! Roots are located by Sturm sequences over the rationals after a
//! square-free decomposition; rational roots are found separately by the
//! rational root test so they can be reported exactly. Interval endpoints
//! are always rational and never roots.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::{rat, ratio, rational_to_f64, rational_to_string, sign_of};
use crate::{IntPoly, RatPoly};

/// Open rational interval `(lo, hi)` holding exactly one distinct real root
/// of the polynomial it was computed for.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsolatingInterval {
    #[serde(with = "rational_str")]
    pub lo: BigRational,
    #[serde(with = "rational_str")]
    pub hi: BigRational,
    pub multiplicity: usize,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / rat(2)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        &self.lo < x && x < &self.hi
    }

    /// Bisect until narrower than `tol`. `sqf` must be square-free with a
    /// simple root in the interval and nonzero at both endpoints.
    pub fn refine(&self, sqf: &IntPoly, tol: &BigRational) -> IsolatingInterval {
        let mut out = self.clone();
        let lo_sign = sqf.sign_at(&out.lo);
        while &out.width() >= tol {
            let mid = out.midpoint();
            match sqf.sign_at(&mid) {
                0 => {
                    let quarter = tol / rat(4);
                    let half = out.width() / rat(4);
                    let delta = if quarter < half { quarter } else { half };
                    out.lo = &mid - &delta;
                    out.hi = &mid + &delta;
                    break;
                }
                s if s == lo_sign => out.lo = mid,
                _ => out.hi = mid,
            }
        }
        out
    }

    pub fn approx(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }
}

/// One distinct real root, exact when rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealRoot {
    Rational { value: BigRational, multiplicity: usize },
    Algebraic(IsolatingInterval),
}

impl RealRoot {
    pub fn multiplicity(&self) -> usize {
        match self {
            RealRoot::Rational { multiplicity, .. } => *multiplicity,
            RealRoot::Algebraic(iv) => iv.multiplicity,
        }
    }

    pub fn approx(&self) -> f64 {
        match self {
            RealRoot::Rational { value, .. } => rational_to_f64(value),
            RealRoot::Algebraic(iv) => iv.approx(),
        }
    }

    /// A rational number strictly below the root, no smaller than any
    /// previously stored lower bracket.
    pub fn lower(&self) -> &BigRational {
        match self {
            RealRoot::Rational { value, .. } => value,
            RealRoot::Algebraic(iv) => &iv.lo,
        }
    }

    pub fn upper(&self) -> &BigRational {
        match self {
            RealRoot::Rational { value, .. } => value,
            RealRoot::Algebraic(iv) => &iv.hi,
        }
    }
}

/// Rational window for root search. Endpoints may be open or closed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Window {
    pub lo: BigRational,
    pub hi: BigRational,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Window {
    pub fn closed(lo: BigRational, hi: BigRational) -> Self {
        Window {
            lo,
            hi,
            lo_closed: true,
            hi_closed: true,
        }
    }

    pub fn open(lo: BigRational, hi: BigRational) -> Self {
        Window {
            lo,
            hi,
            lo_closed: false,
            hi_closed: false,
        }
    }

    /// Closed window containing every real root of `q` (Cauchy bound).
    pub fn all_roots(q: &IntPoly) -> Self {
        let lead = q
            .lead()
            .map(|c| BigRational::from_integer(c.abs()))
            .unwrap_or_else(BigRational::one);
        let max = q
            .coeffs()
            .iter()
            .map(|c| BigRational::from_integer(c.abs()) / &lead)
            .fold(BigRational::zero(), |m, c| if c > m { c } else { m });
        let b = max + rat(1);
        Window::closed(-b.clone(), b)
    }

    pub fn contains(&self, x: &BigRational) -> bool {
        let above = if self.lo_closed { x >= &self.lo } else { x > &self.lo };
        let below = if self.hi_closed { x <= &self.hi } else { x < &self.hi };
        above && below
    }
}

/// Sturm sequence of a square-free polynomial.
#[derive(Clone, Debug)]
pub struct SturmChain {
    seq: Vec<IntPoly>,
}

impl SturmChain {
    pub fn new(p: &IntPoly) -> Self {
        let mut seq = vec![p.clone()];
        if p.degree().unwrap_or(0) == 0 {
            return SturmChain { seq };
        }
        let mut a = p.to_rational();
        let mut b = p.derivative().to_rational();
        while !b.is_zero() {
            seq.push(positive_integer_multiple(&b));
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = -r;
        }
        SturmChain { seq }
    }

    pub fn sign_changes(&self, x: &BigRational) -> usize {
        let signs: Vec<i32> = self.seq.iter().map(|q| q.sign_at(x)).filter(|&s| s != 0).collect();
        signs.windows(2).filter(|w| w[0] != w[1]).count()
    }

    /// Distinct roots in the half-open interval `(a, b]`.
    pub fn count_half_open(&self, a: &BigRational, b: &BigRational) -> usize {
        self.sign_changes(a).saturating_sub(self.sign_changes(b))
    }

    /// Distinct roots in the open interval `(a, b)`.
    pub fn count_open(&self, a: &BigRational, b: &BigRational) -> usize {
        if a >= b {
            return 0;
        }
        let n = self.count_half_open(a, b);
        if self.seq[0].sign_at(b) == 0 {
            n - 1
        } else {
            n
        }
    }
}

/// Scale by a positive rational so the coefficients are coprime integers.
fn positive_integer_multiple(p: &RatPoly) -> IntPoly {
    let lcm = p.coeffs().iter().fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let ints: IntPoly = p.map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer());
    let g = ints.content();
    if g.is_zero() {
        ints
    } else {
        ints.map(|c| c / &g)
    }
}

/// Square-free factors `f_1, ..., f_k` of `q = c * f_1 * f_2^2 * ... * f_k^k`,
/// as primitive integer polynomials.
pub fn square_free_factors(q: &IntPoly) -> Vec<IntPoly> {
    q.to_rational()
        .square_free_decomposition()
        .iter()
        .map(RatPoly::to_primitive_integer)
        .collect()
}

/// Positive divisors in increasing order; `None` for zero or very large input.
pub(crate) fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64()?;
    if n == 0 || n > 1_000_000_000_000 {
        return None;
    }
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            small.push(BigInt::from(d));
            if d * d != n {
                large.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    Some(small)
}

/// All rational roots of a nonzero integer polynomial, by the rational root
/// test. Returns `None` when the coefficients are too large to enumerate
/// divisors, in which case roots are simply not reported as rational.
pub fn rational_roots(q: &IntPoly) -> Option<Vec<BigRational>> {
    let mut out = Vec::new();
    let mut p = q.clone();
    if p.is_zero() {
        return Some(out);
    }
    if p.coeff(0).is_zero() {
        out.push(BigRational::zero());
        let skip = p.coeffs().iter().take_while(|c| c.is_zero()).count();
        p = IntPoly::new(p.coeffs()[skip..].to_vec());
    }
    if p.degree() == Some(0) {
        return Some(out);
    }
    let num = divisors(&p.coeff(0))?;
    let den = divisors(p.lead().unwrap())?;
    let mut cands: Vec<BigRational> = Vec::new();
    for u in &num {
        for v in &den {
            if u.gcd(v).is_one() {
                let r = BigRational::new(u.clone(), v.clone());
                cands.push(-r.clone());
                cands.push(r);
            }
        }
    }
    cands.sort();
    cands.dedup();
    out.extend(cands.into_iter().filter(|r| p.sign_at(r) == 0));
    out.sort();
    Some(out)
}

/// Distinct real roots of `q` inside `window`, in increasing order, exact
/// where rational.
pub fn real_roots(q: &IntPoly, window: &Window) -> Result<Vec<RealRoot>> {
    if q.is_zero() {
        return Err(Error::ZeroPolynomial("isolate_real_roots"));
    }
    let factors = square_free_factors(q);
    if factors.is_empty() {
        return Ok(Vec::new());
    }
    let sqf = factors.iter().fold(IntPoly::one(), |acc, f| acc * f.clone());
    let multiplicity_at = |x: &BigRational| {
        factors
            .iter()
            .position(|f| f.sign_at(x) == 0)
            .map(|i| i + 1)
            .unwrap_or(1)
    };

    let rational = rational_roots(&sqf).unwrap_or_default();
    let mut rest = sqf.clone();
    for r in &rational {
        let lin = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        rest = rest
            .to_rational()
            .div_rem(&lin.to_rational())
            .unwrap()
            .0
            .to_primitive_integer();
    }
    let mut out: Vec<RealRoot> = rational
        .iter()
        .filter(|r| window.contains(r))
        .map(|r| RealRoot::Rational {
            value: r.clone(),
            multiplicity: multiplicity_at(r),
        })
        .collect();

    if rest.degree().unwrap_or(0) > 0 && window.lo < window.hi {
        // `rest` has no rational roots, so window endpoints are never roots of it.
        let chain = SturmChain::new(&rest);
        let mut stack = vec![(window.lo.clone(), window.hi.clone())];
        while let Some((a, b)) = stack.pop() {
            let n = chain.count_half_open(&a, &b);
            if n == 0 {
                continue;
            }
            let blocked = rational.iter().any(|r| &a <= r && r <= &b);
            if n == 1 && !blocked {
                let iv = IsolatingInterval {
                    lo: a,
                    hi: b,
                    multiplicity: 0,
                };
                let mult = factors
                    .iter()
                    .position(|f| f.sign_at(&iv.lo) * f.sign_at(&iv.hi) < 0)
                    .map(|i| i + 1)
                    .unwrap_or(1);
                out.push(RealRoot::Algebraic(IsolatingInterval {
                    multiplicity: mult,
                    ..iv
                }));
                continue;
            }
            let mid = split_point(&a, &b, &rational);
            stack.push((a, mid.clone()));
            stack.push((mid, b));
        }
    }
    out.sort_by(compare_roots);
    Ok(out)
}

/// A rational strictly inside `(a, b)` avoiding every value in `avoid`.
fn split_point(a: &BigRational, b: &BigRational, avoid: &[BigRational]) -> BigRational {
    let width = b - a;
    for den in 2i64.. {
        for num in 1..den {
            let x = a + &width * ratio(num, den);
            if !avoid.contains(&x) {
                return x;
            }
        }
    }
    unreachable!()
}

fn compare_roots(x: &RealRoot, y: &RealRoot) -> Ordering {
    // Distinct roots have disjoint brackets, so comparing lower brackets orders them.
    match (x, y) {
        (RealRoot::Algebraic(a), RealRoot::Algebraic(b)) => a.lo.cmp(&b.lo),
        (RealRoot::Rational { value, .. }, RealRoot::Algebraic(b)) => {
            if value <= &b.lo {
                Ordering::Less
            } else {
                Ordering::Greater
            }
        }
        (RealRoot::Algebraic(_), RealRoot::Rational { .. }) => compare_roots(y, x).reverse(),
        (RealRoot::Rational { value: a, .. }, RealRoot::Rational { value: b, .. }) => a.cmp(b),
    }
}

/// Pairwise-disjoint isolating intervals for the distinct real roots of `q`
/// in `window`, each with its multiplicity.
pub fn isolate_real_roots(q: &IntPoly, window: &Window) -> Result<Vec<IsolatingInterval>> {
    let roots = real_roots(q, window)?;
    let sqf = q.square_free_part_int();
    let chain = SturmChain::new(&sqf);
    let brackets: Vec<IsolatingInterval> = roots
        .iter()
        .filter_map(|r| match r {
            RealRoot::Algebraic(iv) => Some(iv.clone()),
            RealRoot::Rational { .. } => None,
        })
        .collect();
    Ok(roots
        .into_iter()
        .map(|root| match root {
            RealRoot::Algebraic(iv) => iv,
            RealRoot::Rational { value, multiplicity } => {
                let mut delta = rat(1);
                loop {
                    let lo = &value - &delta;
                    let hi = &value + &delta;
                    let clear = brackets.iter().all(|b| hi <= b.lo || lo >= b.hi);
                    if clear && sqf.sign_at(&lo) != 0 && sqf.sign_at(&hi) != 0 && chain.count_open(&lo, &hi) == 1 {
                        break IsolatingInterval { lo, hi, multiplicity };
                    }
                    delta /= rat(2);
                }
            }
        })
        .collect())
}

pub(crate) mod rational_str {
    use num_rational::BigRational;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&super::rational_to_string(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigRational, D::Error> {
        let s = String::deserialize(d)?;
        crate::scalar::parse_rational(&s).ok_or_else(|| serde::de::Error::custom(format!("bad rational {s:?}")))
    }
}

/// Sign of `q` at a rational, as -1/0/1.
pub fn sign_at(q: &IntPoly, x: &BigRational) -> i32 {
    sign_of(&q.eval_rational(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn linear_root() {
        let ivs = isolate_real_roots(&z(&[-1, 1]), &Window::closed(rat(-2), rat(2))).unwrap();
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(&rat(1)));
        assert_eq!(ivs[0].multiplicity, 1);
    }

    #[test]
    fn boundary_roots_excluded_from_open_window() {
        let q = z(&[-4, 0, 1]);
        assert!(isolate_real_roots(&q, &Window::open(rat(-2), rat(2)))
            .unwrap()
            .is_empty());
        assert_eq!(
            isolate_real_roots(&q, &Window::closed(rat(-2), rat(2))).unwrap().len(),
            2
        );
    }

    #[test]
    fn trefoil_breakpoint_polynomial() {
        // det B(t) for V = [[-1,1],[0,-1]] equals (x - 2)(x - 1) in x = t + 1/t:
        // 4 - 2x - ... see signature tests; here only its root structure matters.
        let q = z(&[-1, 1]) * z(&[-2, 1]) * z(&[-2, 1]);
        let roots = real_roots(&q, &Window::open(rat(-2), rat(2))).unwrap();
        assert_eq!(
            roots,
            vec![RealRoot::Rational {
                value: rat(1),
                multiplicity: 1
            }]
        );
        let closed = real_roots(&q, &Window::closed(rat(-2), rat(2))).unwrap();
        assert_eq!(
            closed[1],
            RealRoot::Rational {
                value: rat(2),
                multiplicity: 2
            }
        );
    }

    #[test]
    fn irrational_roots_and_multiplicity() {
        // (x^2 - 2)^2 (x - 1/3)
        let q = z(&[-2, 0, 1]) * z(&[-2, 0, 1]) * z(&[-1, 3]);
        let roots = real_roots(&q, &Window::all_roots(&q)).unwrap();
        assert_eq!(roots.len(), 3);
        assert_eq!(
            roots[1],
            RealRoot::Rational {
                value: ratio(1, 3),
                multiplicity: 1
            }
        );
        for r in [&roots[0], &roots[2]] {
            let RealRoot::Algebraic(iv) = r else {
                panic!("expected interval")
            };
            assert_eq!(iv.multiplicity, 2);
            let fine = iv.refine(&z(&[-2, 0, 1]), &ratio(1, 1_000_000));
            assert!((fine.approx().abs() - 2f64.sqrt()).abs() < 1e-5);
        }
    }

    #[test]
    fn isolating_intervals_are_disjoint() {
        let q = z(&[0, -1, 0, 1]) * z(&[-1, 0, 2]);
        let ivs = isolate_real_roots(&q, &Window::all_roots(&q)).unwrap();
        assert_eq!(ivs.len(), 5);
        for w in ivs.windows(2) {
            assert!(w[0].hi <= w[1].lo);
        }
    }

    #[test]
    fn zero_polynomial_rejected() {
        assert!(isolate_real_roots(&IntPoly::zero(), &Window::closed(rat(0), rat(1))).is_err());
    }

    #[test]
    fn sturm_counts() {
        let chain = SturmChain::new(&z(&[-2, 0, 1]));
        assert_eq!(chain.count_open(&rat(-2), &rat(2)), 2);
        assert_eq!(chain.count_open(&rat(0), &rat(2)), 1);
        let chain = SturmChain::new(&z(&[-1, 1]));
        assert_eq!(chain.count_open(&rat(0), &rat(1)), 0);
        assert_eq!(chain.count_half_open(&rat(0), &rat(1)), 1);
    }
}
