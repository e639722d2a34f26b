//! Lower and upper bounds on the topological 4-genus, slice obstructions,
//! and transfer of bounds along infection by a string link.

use num_traits::Zero;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::factor::{fox_milnor_test, FoxMilnor};
use crate::seifert::SeifertData;
use crate::signature::{alexander_from_seifert, link_nullity, signature_function, IntervalValue, SignatureFunction};
use crate::IntLaurent;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SliceVerdict {
    Obstructed,
    ConsistentWithSlice,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundKind {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Category {
    Topological,
    Smooth,
}

/// One bound together with what produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub kind: BoundKind,
    pub value: u64,
    pub source: String,
    pub category: Category,
    pub detail: String,
}

/// A hypothesis supplied by the user and not checked by this tool.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Assumption {
    pub tag: String,
    pub statement: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundReport {
    pub label: String,
    pub components: usize,
    pub lower: u64,
    #[serde(serialize_with = "upper_ser", deserialize_with = "upper_de")]
    pub upper: Option<u64>,
    pub exact: bool,
    pub slice_verdict: SliceVerdict,
    pub provenance: Vec<Provenance>,
    pub assumptions: Vec<Assumption>,
    #[serde(default)]
    pub notes: Vec<String>,
}

fn upper_ser<S: Serializer>(v: &Option<u64>, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v {
        Some(u) => s.serialize_u64(*u),
        None => s.serialize_str("unknown"),
    }
}

fn upper_de<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<Option<u64>, D::Error> {
    match serde_json::Value::deserialize(d)? {
        serde_json::Value::Number(n) => n
            .as_u64()
            .map(Some)
            .ok_or_else(|| serde::de::Error::custom("upper bound must be a nonnegative integer")),
        serde_json::Value::String(s) if s == "unknown" => Ok(None),
        other => Err(serde::de::Error::custom(format!(
            "upper bound must be an integer or \"unknown\", got {other}"
        ))),
    }
}

impl BoundReport {
    /// Rejects a report whose lower bound exceeds its upper bound.
    pub fn check_consistent(&self) -> Result<()> {
        match self.upper {
            Some(u) if self.lower > u => Err(Error::InconsistentBounds {
                lower: self.lower,
                upper: u,
            }),
            _ => Ok(()),
        }
    }
}

/// `b` band moves turning a knot into a `u`-component unlink.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BandCertificate {
    pub bands: u64,
    pub resulting_unlink_components: u64,
}

/// The signature lower bound with the data that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub bound: u64,
    pub max_abs_sigma: i64,
    pub beta: usize,
    pub components: usize,
    /// An interval of `x` on which `|σ|` attains its maximum.
    pub witness: IntervalValue,
}

/// `ceil((S + m - 1 - β) / 2)` where `S` is the largest `|σ|` over the
/// circle. Interval values suffice for `S`: an averaged value at a jump is
/// the mean of its neighbours and so never exceeds both in absolute value.
pub fn lt_lower_bound(v: &SeifertData) -> Result<LowerBound> {
    let f = signature_function(v)?;
    lt_lower_bound_from(v, &f)
}

pub fn lt_lower_bound_from(v: &SeifertData, f: &SignatureFunction) -> Result<LowerBound> {
    let (s, at) = f.max_abs_sigma();
    let m = v.components();
    // A nonzero Alexander polynomial forces β = 0.
    let beta = if alexander_from_seifert(v).is_zero() {
        link_nullity(v)?
    } else {
        0
    };
    let total = s as u64 + m as u64 - 1 - beta as u64;
    Ok(LowerBound {
        bound: total.div_ceil(2),
        max_abs_sigma: s,
        beta,
        components: m,
        witness: f.intervals[at].clone(),
    })
}

/// `ceil(width / 2)` for the Alexander polynomial of a knot.
pub fn width_upper_bound(delta: &IntLaurent) -> Result<u64> {
    Ok(delta.width()?.div_ceil(2))
}

/// Genus `(1 - χ) / 2` of the surface `χ = u - b` built from a band-move
/// certificate on a knot. Requires `b >= u - 1` and `u - b` odd.
pub fn band_certificate_genus(cert: &BandCertificate) -> Result<u64> {
    let (b, u) = (cert.bands, cert.resulting_unlink_components);
    if u == 0 {
        return Err(Error::InvalidCertificate(
            "the resulting unlink needs at least one component".into(),
        ));
    }
    if b + 1 < u {
        return Err(Error::InvalidCertificate(format!(
            "{b} bands cannot split a knot into {u} components"
        )));
    }
    if (b + 1 - u) % 2 == 1 {
        return Err(Error::InvalidCertificate(format!(
            "euler characteristic {u} - {b} is even"
        )));
    }
    Ok((b + 1 - u) / 2)
}

/// Genus of the Seifert surface itself, pushed into the 4-ball.
pub fn seifert_genus_upper_bound(v: &SeifertData) -> Result<u64> {
    if v.components() != 1 {
        return Err(Error::KnotsOnly("the Seifert genus bound"));
    }
    Ok(v.surface_genus() as u64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SliceObstruction {
    pub verdict: SliceVerdict,
    pub fox_milnor: FoxMilnor,
    pub signature_bound: u64,
}

/// Fox-Milnor test on the Alexander polynomial, plus the signature bound
/// as an independent obstruction.
pub fn slice_obstruction(v: &SeifertData, degree_cap: usize) -> Result<SliceObstruction> {
    if v.components() != 1 {
        return Err(Error::KnotsOnly("the Fox-Milnor slice test"));
    }
    let lower = lt_lower_bound(v)?;
    slice_obstruction_from(v, lower.bound, degree_cap)
}

fn slice_obstruction_from(v: &SeifertData, signature_bound: u64, degree_cap: usize) -> Result<SliceObstruction> {
    let fm = fox_milnor_test(&alexander_from_seifert(v), degree_cap)?;
    let verdict = if fm.fails() || signature_bound > 0 {
        SliceVerdict::Obstructed
    } else if fm.passes() {
        SliceVerdict::ConsistentWithSlice
    } else {
        SliceVerdict::Inconclusive
    };
    Ok(SliceObstruction {
        verdict,
        fox_milnor: fm,
        signature_bound,
    })
}

/// Collect every available bound for `v` into one report.
pub fn assemble_report(v: &SeifertData, certs: &[BandCertificate], degree_cap: usize) -> Result<BoundReport> {
    let f = signature_function(v)?;
    let lower = lt_lower_bound_from(v, &f)?;
    let mut provenance = vec![Provenance {
        kind: BoundKind::Lower,
        value: lower.bound,
        source: "Levine-Tristram signature".into(),
        category: Category::Topological,
        detail: format!(
            "max |sigma| = {} near x = {:.6}, m = {}, beta = {}",
            lower.max_abs_sigma,
            crate::scalar::rational_to_f64(&lower.witness.sample),
            lower.components,
            lower.beta
        ),
    }];
    let mut notes = Vec::new();
    let mut uppers: Vec<u64> = Vec::new();
    let mut verdict = if lower.bound > 0 {
        SliceVerdict::Obstructed
    } else {
        SliceVerdict::Inconclusive
    };

    if v.components() == 1 {
        let delta = alexander_from_seifert(v);
        let w = width_upper_bound(&delta)?;
        provenance.push(Provenance {
            kind: BoundKind::Upper,
            value: w,
            source: "Alexander polynomial width".into(),
            category: Category::Topological,
            detail: format!("width({delta}) = {}", delta.width()?),
        });
        let g = seifert_genus_upper_bound(v)?;
        provenance.push(Provenance {
            kind: BoundKind::Upper,
            value: g,
            source: "pushed-in Seifert surface".into(),
            category: Category::Smooth,
            detail: format!("Seifert matrix of size {}", v.size()),
        });
        uppers.extend([w, g]);
        for cert in certs {
            let g = band_certificate_genus(cert)?;
            provenance.push(Provenance {
                kind: BoundKind::Upper,
                value: g,
                source: "band-move certificate (user-supplied)".into(),
                category: Category::Smooth,
                detail: format!(
                    "{} bands to a {}-component unlink",
                    cert.bands, cert.resulting_unlink_components
                ),
            });
            uppers.push(g);
        }
        let slice = slice_obstruction_from(v, lower.bound, degree_cap)?;
        match &slice.fox_milnor {
            FoxMilnor::Passes { witness } => notes.push(format!("Fox-Milnor condition holds with f = {witness}")),
            FoxMilnor::Fails { reason } => notes.push(format!("Fox-Milnor condition fails: {reason}")),
            FoxMilnor::Inconclusive { reason } => notes.push(format!("Fox-Milnor test inconclusive: {reason}")),
        }
        verdict = slice.verdict;
    } else {
        if !certs.is_empty() {
            return Err(Error::KnotsOnly("band-move certificates"));
        }
        notes.push("upper bounds for links require certificates; none available".into());
    }

    let upper = uppers.iter().copied().min();
    if upper == Some(0) && verdict != SliceVerdict::Obstructed {
        verdict = SliceVerdict::ConsistentWithSlice;
    }
    let report = BoundReport {
        label: v.label().to_string(),
        components: v.components(),
        lower: lower.bound,
        upper,
        exact: upper == Some(lower.bound),
        slice_verdict: verdict,
        provenance,
        assumptions: Vec::new(),
        notes,
    };
    report.check_consistent()?;
    Ok(report)
}

/// Hypotheses for infecting along `r` axis curves with a string link.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InfectionDecl {
    pub axes: usize,
    /// `linking_numbers[k][i] = lk(η_k, L_i)`.
    pub linking_numbers: Vec<Vec<i64>>,
    /// Total number of intersection and self-intersection points of the
    /// immersed discs bounded by the axes.
    #[serde(alias = "c")]
    pub double_points: u64,
    /// Length up to which the Milnor invariants of the axes are declared to vanish.
    #[serde(default)]
    pub milnor_vanishing_length: Option<u64>,
    #[serde(default)]
    pub notes: String,
}

/// Bounds for the infected link from those of the base link.
///
/// The upper bound carries over under the declared hypotheses. When every
/// axis is null-homologous in the complement, the axes lie in the
/// commutator subgroup, the Seifert form is unchanged, and so are the
/// signature and Alexander lower bounds.
pub fn infection_transfer(base: &BoundReport, decl: &InfectionDecl) -> Result<BoundReport> {
    if decl.axes == 0 {
        return Err(Error::InvalidDeclaration("at least one axis is required".into()));
    }
    if decl.linking_numbers.len() != decl.axes {
        return Err(Error::InvalidDeclaration(format!(
            "{} rows of linking numbers for {} axes",
            decl.linking_numbers.len(),
            decl.axes
        )));
    }
    if let Some(row) = decl.linking_numbers.iter().find(|r| r.len() != base.components) {
        return Err(Error::InvalidDeclaration(format!(
            "linking-number row of length {} for a {}-component link",
            row.len(),
            base.components
        )));
    }
    let c = decl.double_points;
    let mu = decl
        .milnor_vanishing_length
        .ok_or_else(|| Error::UndeclaredHypotheses("no Milnor invariant vanishing length declared".into()))?;
    if mu < 2 * c {
        return Err(Error::UndeclaredHypotheses(format!(
            "Milnor invariants declared to vanish up to length {mu}, but {} is needed for {c} double points",
            2 * c
        )));
    }
    base.check_consistent()?;

    let mut assumptions = base.assumptions.clone();
    assumptions.push(Assumption {
        tag: "immersed-discs".into(),
        statement: format!(
            "the {} axis curve(s) bound immersed discs with {c} intersection and self-intersection points in total",
            decl.axes
        ),
    });
    if c > 0 {
        assumptions.push(Assumption {
            tag: "milnor-invariants".into(),
            statement: format!(
                "Milnor invariants of the axes vanish up to and including length {}",
                2 * c
            ),
        });
    }

    let null_homologous = decl.linking_numbers.iter().flatten().all(|&l| l == 0);
    let mut notes = base.notes.clone();
    if !decl.notes.is_empty() {
        notes.push(decl.notes.clone());
    }
    let mut provenance: Vec<Provenance> = base
        .provenance
        .iter()
        .filter(|p| p.kind == BoundKind::Upper || null_homologous)
        .map(|p| Provenance {
            detail: format!("{} (carried through infection)", p.detail),
            ..p.clone()
        })
        .collect();
    let (lower, mut verdict) = if null_homologous {
        (base.lower, base.slice_verdict)
    } else {
        notes.push("an axis links the base link nontrivially; lower bounds do not transfer".into());
        provenance.push(Provenance {
            kind: BoundKind::Lower,
            value: 0,
            source: "trivial bound".into(),
            category: Category::Topological,
            detail: "lower bounds of the base link do not apply".into(),
        });
        (0, SliceVerdict::Inconclusive)
    };
    if base.upper == Some(0) {
        verdict = SliceVerdict::ConsistentWithSlice;
    }
    let report = BoundReport {
        label: format!("infection of {}", base.label),
        components: base.components,
        lower,
        upper: base.upper,
        exact: base.upper == Some(lower),
        slice_verdict: verdict,
        provenance,
        assumptions,
        notes,
    };
    report.check_consistent()?;
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::torus_braid;
    use crate::seifert::seifert_matrix_from_braid;

    fn trefoil() -> SeifertData {
        seifert_matrix_from_braid(&torus_braid(2, 3).unwrap()).unwrap()
    }

    fn cert(b: u64, u: u64) -> BandCertificate {
        BandCertificate {
            bands: b,
            resulting_unlink_components: u,
        }
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(lt_lower_bound(&SeifertData::unknot()).unwrap().bound, 0);
        assert_eq!(lt_lower_bound(&trefoil()).unwrap().bound, 1);
        let t35 = seifert_matrix_from_braid(&torus_braid(3, 5).unwrap()).unwrap();
        let lb = lt_lower_bound(&t35).unwrap();
        assert_eq!((lb.bound, lb.max_abs_sigma), (4, 8));
    }

    #[test]
    fn band_certificates() {
        assert_eq!(band_certificate_genus(&cert(11, 4)).unwrap(), 4);
        assert_eq!(band_certificate_genus(&cert(0, 1)).unwrap(), 0);
        assert_eq!(band_certificate_genus(&cert(2, 3)).unwrap(), 0);
        assert_eq!(band_certificate_genus(&cert(3, 2)).unwrap(), 1);
        assert_eq!(band_certificate_genus(&cert(2, 1)).unwrap(), 1);
        assert!(band_certificate_genus(&cert(2, 2)).is_err());
        assert!(band_certificate_genus(&cert(1, 4)).is_err());
        assert!(band_certificate_genus(&cert(1, 0)).is_err());
    }

    #[test]
    fn width_bounds() {
        assert_eq!(width_upper_bound(&IntLaurent::from_i64_terms(&[(0, 1)])).unwrap(), 0);
        assert_eq!(
            width_upper_bound(&IntLaurent::from_i64_terms(&[(0, 1), (1, -1), (2, 1)])).unwrap(),
            1
        );
        assert!(width_upper_bound(&IntLaurent::from_i64_terms(&[])).is_err());
    }

    #[test]
    fn reports() {
        let r = assemble_report(&SeifertData::unknot(), &[], 12).unwrap();
        assert_eq!(
            (r.lower, r.upper, r.exact, r.slice_verdict),
            (0, Some(0), true, SliceVerdict::ConsistentWithSlice)
        );
        let r = assemble_report(&trefoil(), &[cert(3, 2)], 12).unwrap();
        assert_eq!(
            (r.lower, r.upper, r.exact, r.slice_verdict),
            (1, Some(1), true, SliceVerdict::Obstructed)
        );
        let t35 = seifert_matrix_from_braid(&torus_braid(3, 5).unwrap()).unwrap();
        let r = assemble_report(&t35, &[], 12).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (4, Some(4), true));
        // A certificate claiming genus 0 contradicts the signature bound.
        assert!(matches!(
            assemble_report(&trefoil(), &[cert(0, 1)], 12),
            Err(Error::InconsistentBounds { .. })
        ));
    }

    #[test]
    fn link_reports() {
        let hopf = SeifertData::from_rows(&[vec![1]], 2, "hopf").unwrap();
        let r = assemble_report(&hopf, &[], 12).unwrap();
        assert_eq!((r.lower, r.upper), (1, None));
        let unlink = SeifertData::from_rows(&[vec![0]], 2, "unlink").unwrap();
        assert_eq!(assemble_report(&unlink, &[], 12).unwrap().lower, 0);
        assert!(assemble_report(&hopf, &[cert(1, 2)], 12).is_err());
        let json = serde_json::to_value(assemble_report(&hopf, &[], 12).unwrap()).unwrap();
        assert_eq!(json["upper"], "unknown");
    }

    fn base44() -> BoundReport {
        BoundReport {
            label: "K".into(),
            components: 1,
            lower: 4,
            upper: Some(4),
            exact: true,
            slice_verdict: SliceVerdict::Obstructed,
            provenance: Vec::new(),
            assumptions: Vec::new(),
            notes: Vec::new(),
        }
    }

    fn decl(lk: Vec<Vec<i64>>, c: u64, mu: Option<u64>) -> InfectionDecl {
        InfectionDecl {
            axes: lk.len(),
            linking_numbers: lk,
            double_points: c,
            milnor_vanishing_length: mu,
            notes: String::new(),
        }
    }

    #[test]
    fn infection() {
        let r = infection_transfer(&base44(), &decl(vec![vec![0], vec![0]], 3, Some(6))).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (4, Some(4), true));
        assert_eq!(r.assumptions.len(), 2);

        let r = infection_transfer(&base44(), &decl(vec![vec![0]], 0, Some(0))).unwrap();
        assert_eq!(
            r.assumptions.iter().map(|a| a.tag.as_str()).collect::<Vec<_>>(),
            vec!["immersed-discs"]
        );

        let r = infection_transfer(&base44(), &decl(vec![vec![1]], 1, Some(2))).unwrap();
        assert_eq!((r.lower, r.upper, r.exact), (0, Some(4), false));

        assert!(matches!(
            infection_transfer(&base44(), &decl(vec![vec![0]], 3, Some(5))),
            Err(Error::UndeclaredHypotheses(_))
        ));
        assert!(matches!(
            infection_transfer(&base44(), &decl(vec![vec![0]], 3, None)),
            Err(Error::UndeclaredHypotheses(_))
        ));
        assert!(matches!(
            infection_transfer(&base44(), &decl(vec![vec![0, 0]], 0, Some(0))),
            Err(Error::InvalidDeclaration(_))
        ));
    }
}
