//! Factorization of integer polynomials by Kronecker's interpolation method,
//! and the Fox-Milnor factorization test built on it.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::roots::{divisors, rational_roots, square_free_factors};
use crate::scalar::Ring;
use crate::{IntLaurent, IntPoly};

/// Default bound on the degree handed to the factorizer.
pub const DEFAULT_DEGREE_CAP: usize = 12;

/// `p = unit * prod(f_i^e_i)` with each `f_i` irreducible over `Z`, primitive,
/// with positive leading coefficient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: BigInt,
    pub factors: Vec<(IntPoly, usize)>,
}

impl Factorization {
    pub fn expand(&self) -> IntPoly {
        self.factors
            .iter()
            .fold(IntPoly::constant(self.unit.clone()), |acc, (f, e)| acc * f.pow(*e))
    }
}

/// Complete factorization over the integers. Exponential in the worst case;
/// intended for the small degrees that occur for Alexander polynomials.
pub fn factor(p: &IntPoly) -> Result<Factorization> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial("factor"));
    }
    let mut factors: Vec<(IntPoly, usize)> = Vec::new();
    for (i, sf) in square_free_factors(p).into_iter().enumerate() {
        if sf.degree() == Some(0) {
            continue;
        }
        for irr in split_square_free(&sf) {
            factors.push((irr, i + 1));
        }
    }
    factors.sort_by(|a, b| {
        a.0.degree()
            .cmp(&b.0.degree())
            .then_with(|| a.0.coeffs().cmp(b.0.coeffs()))
    });
    let prod = factors.iter().fold(IntPoly::one(), |acc, (f, e)| acc * f.pow(*e));
    let unit = p
        .exact_div(&prod)
        .and_then(|u| (u.degree() == Some(0)).then(|| u.coeff(0)));
    let unit = unit.expect("factors divide the input");
    Ok(Factorization { unit, factors })
}

/// Irreducible factors of a primitive square-free polynomial.
fn split_square_free(f: &IntPoly) -> Vec<IntPoly> {
    let mut rest = f.primitive_part();
    let mut out = Vec::new();
    for r in rational_roots(&rest).unwrap_or_default() {
        let lin = IntPoly::new(vec![-r.numer().clone(), r.denom().clone()]);
        rest = rest
            .exact_div(&lin)
            .expect("rational root gives a primitive linear factor");
        out.push(lin);
    }
    let mut work = vec![rest];
    while let Some(g) = work.pop() {
        match g.degree() {
            None | Some(0) => {}
            Some(1) => out.push(g.primitive_part()),
            Some(_) => match kronecker_split(&g) {
                Some((a, b)) => {
                    work.push(a);
                    work.push(b);
                }
                None => out.push(g.primitive_part()),
            },
        }
    }
    out
}

/// Find a nontrivial factorization `f = a * b` or prove `f` irreducible.
///
/// A factor of degree `d` is determined by its values at `d + 1` integer
/// points, each of which divides the corresponding value of `f`. Newton
/// coefficients of an integer polynomial at integer nodes are integers, so
/// candidates are built one point at a time and pruned on the first
/// non-integral divided difference.
fn kronecker_split(f: &IntPoly) -> Option<(IntPoly, IntPoly)> {
    let n = f.degree()?;
    // Sample points with few divisors keep the search small.
    let span = n as i64 + 24;
    let mut pts: Vec<(BigInt, Vec<BigInt>)> = (-span..=span)
        .filter_map(|a| {
            let a = BigInt::from(a);
            let v = f.eval(&a);
            if v.is_zero() {
                return None;
            }
            divisors(&v).map(|d| (a, d))
        })
        .collect();
    pts.sort_by_key(|(a, d)| (d.len(), a.abs()));

    for d in 1..=n / 2 {
        if pts.len() < d + 1 {
            break;
        }
        let mut search = Search {
            f,
            xs: pts[..d + 1].iter().map(|(a, _)| a.clone()).collect(),
            diag: Vec::new(),
        };
        // First point: positive divisors only, fixing the overall sign of the factor.
        let choices: Vec<Vec<BigInt>> = pts[..d + 1]
            .iter()
            .enumerate()
            .map(|(i, (_, ds))| {
                if i == 0 {
                    ds.clone()
                } else {
                    ds.iter().flat_map(|v| [v.clone(), -v.clone()]).collect()
                }
            })
            .collect();
        if let Some(found) = search.run(&choices, Vec::new()) {
            return Some(found);
        }
    }
    None
}

struct Search<'a> {
    f: &'a IntPoly,
    xs: Vec<BigInt>,
    diag: Vec<Vec<BigInt>>,
}

impl Search<'_> {
    /// `newton` holds the Newton coefficients fixed so far; `diag` the last
    /// diagonal of the divided-difference table at each depth.
    fn run(&mut self, choices: &[Vec<BigInt>], newton: Vec<BigInt>) -> Option<(IntPoly, IntPoly)> {
        let k = newton.len();
        if k == self.xs.len() {
            return self.candidate(&newton);
        }
        for y in &choices[k] {
            let mut row = vec![y.clone()];
            let mut ok = true;
            for j in 1..=k {
                let num = &row[j - 1] - &self.diag[k - 1][j - 1];
                let den = &self.xs[k] - &self.xs[k - j];
                if !(&num % &den).is_zero() {
                    ok = false;
                    break;
                }
                row.push(num / den);
            }
            if !ok {
                continue;
            }
            let mut next = newton.clone();
            next.push(row[k].clone());
            self.diag.push(row);
            let found = self.run(choices, next);
            self.diag.pop();
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn candidate(&self, newton: &[BigInt]) -> Option<(IntPoly, IntPoly)> {
        let d = newton.len() - 1;
        if newton[d].is_zero() {
            return None;
        }
        let mut g = IntPoly::constant(newton[d].clone());
        for i in (0..d).rev() {
            g = g * IntPoly::new(vec![-self.xs[i].clone(), BigInt::one()]) + IntPoly::constant(newton[i].clone());
        }
        self.f.lead()?.exact_div(g.lead()?)?;
        self.f.coeff(0).exact_div(&g.coeff(0))?;
        let h = self.f.exact_div(&g)?;
        Some((g, h))
    }
}

/// Outcome of the Fox-Milnor test `p = ±t^k f(t) f(t^-1)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum FoxMilnor {
    Passes { witness: IntLaurent },
    Fails { reason: String },
    Inconclusive { reason: String },
}

impl FoxMilnor {
    pub fn passes(&self) -> bool {
        matches!(self, FoxMilnor::Passes { .. })
    }

    pub fn fails(&self) -> bool {
        matches!(self, FoxMilnor::Fails { .. })
    }
}

fn is_perfect_square(n: &BigInt) -> bool {
    if n.is_negative() {
        return false;
    }
    let r = n.sqrt();
    &(&r * &r) == n
}

/// Decide whether a knot Alexander polynomial factors as `±t^k f(t) f(t^-1)`.
///
/// Necessary conditions (`|p(1)| = 1`, even width, `|p(-1)|` a square) are
/// checked first; then the polynomial is fully factored when its normalized
/// degree is at most `degree_cap`, otherwise the result is inconclusive.
pub fn fox_milnor_test(p: &IntLaurent, degree_cap: usize) -> Result<FoxMilnor> {
    let norm = p.normalized_poly()?;
    let at_one = norm.eval(&BigInt::one());
    if at_one.abs() != BigInt::one() {
        return Ok(FoxMilnor::Fails {
            reason: format!("p(1) = {at_one}, not ±1"),
        });
    }
    let deg = norm.degree().unwrap_or(0);
    if deg % 2 == 1 {
        return Ok(FoxMilnor::Fails {
            reason: format!("odd width {deg}"),
        });
    }
    let at_minus_one = norm.eval(&BigInt::from(-1)).abs();
    if !is_perfect_square(&at_minus_one) {
        return Ok(FoxMilnor::Fails {
            reason: format!("|p(-1)| = {at_minus_one} is not a perfect square"),
        });
    }
    if deg > degree_cap {
        return Ok(FoxMilnor::Inconclusive {
            reason: format!("degree {deg} exceeds cap {degree_cap}"),
        });
    }

    let fac = factor(&norm)?;
    let mut witness = IntPoly::one();
    for (g, e) in &fac.factors {
        let recip = g.reciprocal().primitive_part();
        if &recip == g {
            if e % 2 == 1 {
                return Ok(FoxMilnor::Fails {
                    reason: format!("self-reciprocal factor {g} occurs to odd power {e}"),
                });
            }
            witness = witness * g.pow(e / 2);
            continue;
        }
        match fac.factors.iter().find(|(h, _)| h == &recip) {
            Some((_, e2)) if e2 == e => {
                if factor_order(g, &recip) == std::cmp::Ordering::Less {
                    witness = witness * g.pow(*e);
                }
            }
            Some((_, e2)) => {
                return Ok(FoxMilnor::Fails {
                    reason: format!("factor {g} has exponent {e} but its reciprocal has {e2}"),
                });
            }
            None => {
                return Ok(FoxMilnor::Fails {
                    reason: format!("reciprocal of factor {g} does not divide"),
                });
            }
        }
    }
    let check = IntLaurent::from_poly(0, &witness) * IntLaurent::from_poly(0, &witness).involution();
    debug_assert!(check.equals_up_to_units(p));
    if !check.equals_up_to_units(p) {
        return Ok(FoxMilnor::Fails {
            reason: "no symmetric pairing of factors".into(),
        });
    }
    Ok(FoxMilnor::Passes {
        witness: IntLaurent::from_poly(0, &witness),
    })
}

/// Deterministic choice between a factor and its reciprocal: smaller
/// leading coefficient first, then coefficient order.
fn factor_order(a: &IntPoly, b: &IntPoly) -> std::cmp::Ordering {
    let la = a.lead().map(|c| c.abs());
    let lb = b.lead().map(|c| c.abs());
    la.cmp(&lb).then_with(|| a.coeffs().cmp(b.coeffs()))
}
