//! A small catalog of knots and links with expected invariants, and the
//! regression check that compares them against fresh computations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::bounds::{
    assemble_report, band_certificate_genus, infection_transfer, width_upper_bound, BandCertificate, BoundReport,
    InfectionDecl,
};
use crate::braid::torus_braid;
use crate::error::{Error, Result};
use crate::factor::{fox_milnor_test, FoxMilnor};
use crate::input::LinkInput;
use crate::oracle::float_oracle;
use crate::scalar::{rational_to_f64, HalfInt};
use crate::seifert::{seifert_matrix_from_braid, SeifertData};
use crate::signature::{alexander_from_seifert, link_nullity, signature_function, SignatureFunction};
use crate::IntLaurent;

const BUILTIN: &str = include_str!("../data/catalog.json");

/// Everything `invariants` reports about one input.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Invariants {
    pub label: String,
    pub components: usize,
    /// Genus of the Seifert surface the matrix comes from.
    pub genus: usize,
    pub seifert_matrix: Vec<Vec<i64>>,
    /// Normalized, as text.
    pub alexander: String,
    pub alexander_coefficients: IntLaurent,
    /// `None` when the Alexander polynomial vanishes.
    pub width: Option<u64>,
    pub beta: usize,
    pub max_abs_sigma: i64,
    pub signature_function: SignatureFunction,
}

pub fn invariants(s: &SeifertData) -> Result<Invariants> {
    let delta = alexander_from_seifert(s);
    let width = if num_traits::Zero::is_zero(&delta) {
        None
    } else {
        Some(delta.width()?)
    };
    let f = signature_function(s)?;
    Ok(Invariants {
        label: s.label().to_string(),
        components: s.components(),
        genus: s.surface_genus(),
        seifert_matrix: s.rows_i64(),
        alexander: if width.is_some() { delta.to_string() } else { "0".into() },
        alexander_coefficients: delta,
        width,
        beta: link_nullity(s)?,
        max_abs_sigma: f.max_abs_sigma().0.abs(),
        signature_function: f,
    })
}

/// Expected 4-genus bounds: an exact value or a range, `upper: None`
/// meaning no upper bound is produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ExpectedGenus {
    Exact(u64),
    Range {
        lower: u64,
        #[serde(default)]
        upper: Option<u64>,
    },
}

impl ExpectedGenus {
    fn bounds(self) -> (u64, Option<u64>) {
        match self {
            ExpectedGenus::Exact(g) => (g, Some(g)),
            ExpectedGenus::Range { lower, upper } => (lower, upper),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Expected {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub alexander: Option<IntLaurent>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_abs_sigma: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub g4: Option<ExpectedGenus>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub name: String,
    pub input: LinkInput,
    #[serde(default)]
    pub band_certificates: Vec<BandCertificate>,
    #[serde(default)]
    pub expected: Option<Expected>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn builtin() -> Self {
        Self::parse(BUILTIN).expect("built-in catalog is valid")
    }

    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn get(&self, name: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

impl CatalogEntry {
    pub fn seifert_data(&self) -> Result<SeifertData> {
        let s = self.input.seifert_data()?;
        Ok(if s.label().is_empty() {
            s.with_label(self.name.clone())
        } else {
            s
        })
    }

    pub fn report(&self, degree_cap: usize) -> Result<BoundReport> {
        assemble_report(&self.seifert_data()?, &self.band_certificates, degree_cap)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EntryOutcome {
    pub name: String,
    pub passed: bool,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub entries: Vec<EntryOutcome>,
    pub warnings: Vec<String>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn failed(&self) -> usize {
        self.entries.iter().filter(|e| !e.passed).count()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.entries {
            writeln!(f, "{} {}", if e.passed { "PASS" } else { "FAIL" }, e.name)?;
            for msg in &e.failures {
                writeln!(f, "    {msg}")?;
            }
        }
        write!(
            f,
            "{} entries, {} passed, {} failed",
            self.entries.len(),
            self.entries.len() - self.failed(),
            self.failed()
        )
    }
}

fn diff<T: fmt::Display + PartialEq>(what: &str, expected: T, got: T, failures: &mut Vec<String>) {
    if expected != got {
        failures.push(format!("{what}: expected {expected}, got {got}"));
    }
}

fn show_upper(u: Option<u64>) -> String {
    u.map_or_else(|| "unknown".into(), |v| v.to_string())
}

/// Internal consistency of a signature function: averaged values at jumps
/// and agreement with the float oracle at interval samples.
fn check_signature_function(s: &SeifertData, f: &SignatureFunction, failures: &mut Vec<String>) {
    for (i, bp) in f.breakpoints.iter().enumerate() {
        let (l, r) = (f.intervals[i].sigma, f.intervals[i + 1].sigma);
        if bp.left_sigma != l || bp.right_sigma != r || bp.averaged_sigma != HalfInt::mean(l, r) {
            failures.push(format!(
                "breakpoint {i}: averaged value is not the mean of its neighbours"
            ));
        }
    }
    for (i, iv) in f.intervals.iter().enumerate() {
        let x = rational_to_f64(&iv.sample);
        if x.abs() >= 2.0 {
            continue;
        }
        let (sigma, nullity) = float_oracle(s.matrix(), (x / 2.0).acos());
        if (sigma, nullity) != (iv.sigma, iv.nullity) {
            failures.push(format!(
                "interval {i}: exact (sigma, nullity) = ({}, {}), oracle gives ({sigma}, {nullity})",
                iv.sigma, iv.nullity
            ));
        }
    }
}

fn verify_entry(entry: &CatalogEntry, degree_cap: usize) -> Result<Vec<String>> {
    let s = entry.seifert_data()?;
    let inv = invariants(&s)?;
    let report = entry.report(degree_cap)?;
    let mut failures = Vec::new();
    if inv.beta + 1 > s.components() {
        failures.push(format!("beta = {} outside [0, {}]", inv.beta, s.components() - 1));
    }
    if report.upper.is_some_and(|u| report.lower > u) {
        failures.push(format!(
            "lower bound {} exceeds upper bound {}",
            report.lower,
            show_upper(report.upper)
        ));
    }
    check_signature_function(&s, &inv.signature_function, &mut failures);
    if let Some(exp) = &entry.expected {
        if let Some(a) = &exp.alexander {
            if !a.equals_up_to_units(&inv.alexander_coefficients) {
                failures.push(format!("alexander: expected {a}, got {}", inv.alexander));
            }
        }
        if let Some(m) = exp.max_abs_sigma {
            diff("max |sigma|", m, inv.max_abs_sigma, &mut failures);
        }
        if let Some(b) = exp.beta {
            diff("beta", b, inv.beta, &mut failures);
        }
        if let Some(g) = exp.g4 {
            let (lo, up) = g.bounds();
            diff("g4 lower bound", lo, report.lower, &mut failures);
            diff(
                "g4 upper bound",
                show_upper(up),
                show_upper(report.upper),
                &mut failures,
            );
        }
    }
    Ok(failures)
}

fn t35_alexander() -> IntLaurent {
    IntLaurent::from_i64_terms(&[(8, 1), (7, -1), (5, 1), (4, -1), (3, 1), (1, -1), (0, 1)])
}

fn ribbon_alexander() -> IntLaurent {
    IntLaurent::from_i64_terms(&[(2, 2), (1, -5), (0, 2)])
}

fn check_torus_knot(_: usize, failures: &mut Vec<String>) -> Result<()> {
    let s = seifert_matrix_from_braid(&torus_braid(3, 5)?)?;
    diff(
        "alexander of T(3,5)",
        t35_alexander(),
        alexander_from_seifert(&s),
        failures,
    );
    let f = signature_function(&s)?;
    diff(
        "|sigma| on the interval at x = -2",
        8,
        f.intervals[0].sigma.abs(),
        failures,
    );
    let r = assemble_report(&s, &[], crate::factor::DEFAULT_DEGREE_CAP)?;
    diff(
        "bounds for T(3,5)",
        "4..4".to_string(),
        format!("{}..{}", r.lower, show_upper(r.upper)),
        failures,
    );
    Ok(())
}

fn check_product(degree_cap: usize, failures: &mut Vec<String>) -> Result<()> {
    let p = t35_alexander() * ribbon_alexander();
    diff("width of the product", 10, p.width()?, failures);
    diff("width bound of the product", 5, width_upper_bound(&p)?, failures);
    let band = band_certificate_genus(&BandCertificate {
        bands: 11,
        resulting_unlink_components: 4,
    })?;
    diff("genus from 11 bands to a 4-component unlink", 4, band, failures);
    if !fox_milnor_test(&p, degree_cap)?.fails() {
        failures.push("Fox-Milnor test does not reject the product".into());
    }
    match fox_milnor_test(&ribbon_alexander(), degree_cap)? {
        FoxMilnor::Passes { witness } => diff(
            "Fox-Milnor witness for 2t^2-5t+2",
            IntLaurent::from_i64_terms(&[(1, 1), (0, -2)]),
            witness,
            failures,
        ),
        other => failures.push(format!("Fox-Milnor on 2t^2-5t+2: {other:?}")),
    }
    Ok(())
}

fn check_infection(_: usize, failures: &mut Vec<String>) -> Result<()> {
    let s = seifert_matrix_from_braid(&torus_braid(3, 5)?)?;
    let base = assemble_report(&s, &[], crate::factor::DEFAULT_DEGREE_CAP)?;
    let decl = InfectionDecl {
        axes: 2,
        linking_numbers: vec![vec![0], vec![0]],
        double_points: 3,
        milnor_vanishing_length: Some(6),
        notes: String::new(),
    };
    let r = infection_transfer(&base, &decl)?;
    diff(
        "bounds after infection",
        "4..4".to_string(),
        format!("{}..{}", r.lower, show_upper(r.upper)),
        failures,
    );
    if r.assumptions.is_empty() {
        failures.push("infection report records no assumptions".into());
    }
    Ok(())
}

/// Fixed regression checks that do not depend on the catalog.
pub fn standard_checks(degree_cap: usize) -> Vec<EntryOutcome> {
    type Check = fn(usize, &mut Vec<String>) -> Result<()>;
    let checks: [(&str, Check); 3] = [
        ("check: T(3,5) invariants", check_torus_knot),
        ("check: width, band and Fox-Milnor data", check_product),
        ("check: infection transfer", check_infection),
    ];
    checks
        .iter()
        .map(|(name, run)| {
            let mut failures = Vec::new();
            if let Err(e) = run(degree_cap, &mut failures) {
                failures.push(format!("error: {e}"));
            }
            EntryOutcome {
                name: name.to_string(),
                passed: failures.is_empty(),
                failures,
            }
        })
        .collect()
}

/// Check every catalog entry, then the standard checks. Computation errors
/// count as failures.
pub fn verify(catalog: &Catalog, degree_cap: usize) -> VerifyReport {
    let mut report = VerifyReport::default();
    if catalog.entries.is_empty() {
        report
            .warnings
            .push("catalog is empty; only the standard checks ran".into());
    }
    for entry in &catalog.entries {
        let failures = match verify_entry(entry, degree_cap) {
            Ok(f) => f,
            Err(e) => vec![format!("error: {e}")],
        };
        report.entries.push(EntryOutcome {
            name: entry.name.clone(),
            passed: failures.is_empty(),
            failures,
        });
    }
    report.entries.extend(standard_checks(degree_cap));
    report
}

/// Look up a built-in entry by name.
pub fn builtin_entry(name: &str) -> Result<CatalogEntry> {
    Catalog::builtin()
        .get(name)
        .cloned()
        .ok_or_else(|| Error::Parse(format!("no catalog entry named {name:?}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor::DEFAULT_DEGREE_CAP;

    #[test]
    fn builtin_catalog_passes() {
        let r = verify(&Catalog::builtin(), DEFAULT_DEGREE_CAP);
        assert!(r.passed(), "{r}");
        assert!(r.warnings.is_empty());
    }

    #[test]
    fn corrupted_alexander_is_reported() {
        let mut c = Catalog::builtin();
        c.entries.retain(|e| e.name == "trefoil");
        c.entries[0].expected.as_mut().unwrap().alexander =
            Some(IntLaurent::from_i64_terms(&[(0, 1), (1, -3), (2, 1)]));
        let r = verify(&c, DEFAULT_DEGREE_CAP);
        assert!(!r.passed());
        assert_eq!(r.failed(), 1);
        assert_eq!(
            r.entries[0].failures,
            vec!["alexander: expected t^2-3t+1, got t^2-t+1".to_string()]
        );
    }

    #[test]
    fn empty_catalog_warns() {
        let r = verify(&Catalog::default(), DEFAULT_DEGREE_CAP);
        assert!(r.passed());
        assert_eq!(r.warnings.len(), 1);
    }

    #[test]
    fn invariants_round_trip() {
        let s = builtin_entry("trefoil").unwrap().seifert_data().unwrap();
        let inv = invariants(&s).unwrap();
        assert_eq!(inv.alexander, "t^2-t+1");
        assert_eq!(inv.beta, 0);
        let text = serde_json::to_string(&inv).unwrap();
        let back: Invariants = serde_json::from_str(&text).unwrap();
        assert_eq!(back, inv);
    }

    #[test]
    fn expected_genus_forms() {
        let e: ExpectedGenus = serde_json::from_str("4").unwrap();
        assert_eq!(e, ExpectedGenus::Exact(4));
        let r: ExpectedGenus = serde_json::from_str(r#"{"lower": 1}"#).unwrap();
        assert_eq!(r.bounds(), (1, None));
    }
}
