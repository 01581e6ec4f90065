//! JSON problem and result files.
//!
//! A problem file fixes the coefficient field, the graded variables, an
//! optional quotient ideal, the system of parameters and the complex. Twists
//! are the shifts `a` of `R(a)`, so a basis element of `R(-2)` has degree 2.
//! `maps[k-1]` is `φ_k` written row-major, `rank F_{k-1} × rank F_k`.
//!
//! ```json
//! {"field":{"type":"rational"},
//!  "variables":[{"name":"x","degree":1},{"name":"y","degree":1}],
//!  "sop":["x","y"],
//!  "complex":{"twists":[[0],[-2,-2],[-4]],
//!             "maps":[[["x^2","y^2"]],[["-y^2"],["x^2"]]]}}
//! ```
//!
//! A result file has the same shape plus `top_vanished`, per-module basis
//! `labels` and an optional verification `report`.

use std::path::Path;

use serde::de::Error as _;
use serde::ser::SerializeSeq;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::Value;

use crate::complex::{check_complex, validate_sop, FreeComplex, KoszulIndex, SopData};
use crate::error::{Error, Result};
use crate::groebner::{BaseRing, QuotientRingSpec};
use crate::poly::{parse_polynomial, Field, PolyMatrix, PolyRing, Polynomial};
use crate::transform::{BasisLabel, StarComplex};
use crate::verify::VerificationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum FieldSpec {
    Rational,
    Prime { modulus: u64 },
}

impl FieldSpec {
    pub fn to_field(self) -> Result<Field> {
        match self {
            FieldSpec::Rational => Ok(Field::Rational),
            FieldSpec::Prime { modulus } => Field::prime(modulus),
        }
    }

    pub fn from_field(f: Field) -> Self {
        match f {
            Field::Rational => FieldSpec::Rational,
            Field::Prime(p) => FieldSpec::Prime { modulus: p },
        }
    }
}

/// `rational` or `p:<prime>`.
pub fn parse_field(text: &str) -> Result<Field> {
    let t = text.trim();
    if t == "rational" || t == "QQ" {
        return Ok(Field::Rational);
    }
    let Some(p) = t.strip_prefix("p:") else {
        return Err(Error::Parse(format!(
            "unknown field {t:?}, expected rational or p:<prime>"
        )));
    };
    let p: u64 = p
        .parse()
        .map_err(|_| Error::Parse(format!("bad modulus in field {t:?}")))?;
    Field::prime(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VariableSpec {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexSpec {
    pub twists: Vec<Vec<i64>>,
    pub maps: Vec<Vec<Vec<String>>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProblemFile {
    pub field: FieldSpec,
    pub variables: Vec<VariableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Vec<String>>,
    pub sop: Vec<String>,
    pub complex: ComplexSpec,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct StarFile {
    pub field: FieldSpec,
    pub variables: Vec<VariableSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub quotient: Option<Vec<String>>,
    pub sop: Vec<String>,
    pub complex: ComplexSpec,
    pub top_vanished: bool,
    pub labels: Vec<Vec<BasisLabel>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub report: Option<VerificationReport>,
}

/// A validated problem: base ring, input complex and system of parameters.
#[derive(Clone, Debug)]
pub struct Problem {
    pub base: BaseRing,
    pub complex: FreeComplex,
    pub sop: SopData,
}

impl Serialize for BasisLabel {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            BasisLabel::Bracket { lambda, set } => {
                let mut seq = s.serialize_seq(Some(3))?;
                seq.serialize_element("bracket")?;
                seq.serialize_element(lambda)?;
                seq.serialize_element(set.elements())?;
                seq.end()
            }
            BasisLabel::Angle(u) => {
                let mut seq = s.serialize_seq(Some(2))?;
                seq.serialize_element("angle")?;
                seq.serialize_element(u)?;
                seq.end()
            }
            BasisLabel::Star { mu, j } => {
                let mut seq = s.serialize_seq(Some(3))?;
                seq.serialize_element("star")?;
                seq.serialize_element(mu)?;
                seq.serialize_element(j)?;
                seq.end()
            }
        }
    }
}

impl<'de> Deserialize<'de> for BasisLabel {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let v = serde_json::Value::deserialize(d)?;
        let bad = || D::Error::custom(format!("invalid basis label {v}"));
        let items = v.as_array().ok_or_else(bad)?;
        let index = |k: usize| {
            items
                .get(k)
                .and_then(|x| x.as_u64())
                .map(|x| x as usize)
                .ok_or_else(bad)
        };
        match (items.first().and_then(|t| t.as_str()), items.len()) {
            (Some("bracket"), 3) => {
                let set: Vec<usize> = items[2]
                    .as_array()
                    .ok_or_else(bad)?
                    .iter()
                    .map(|x| x.as_u64().map(|x| x as usize).ok_or_else(bad))
                    .collect::<std::result::Result<_, _>>()?;
                if set.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(bad());
                }
                let set = KoszulIndex::new(set).map_err(|e| D::Error::custom(e.to_string()))?;
                Ok(BasisLabel::Bracket { lambda: index(1)?, set })
            }
            (Some("angle"), 2) => Ok(BasisLabel::Angle(index(1)?)),
            (Some("star"), 3) => Ok(BasisLabel::Star {
                mu: index(1)?,
                j: index(2)?,
            }),
            _ => Err(bad()),
        }
    }
}

fn parse_at(text: &str, ring: &std::sync::Arc<PolyRing>, at: impl FnOnce() -> String) -> Result<Polynomial> {
    parse_polynomial(text, ring).map_err(|e| Error::Parse(format!("{}: {e}", at())))
}

fn validation(e: Error) -> Error {
    match e {
        Error::Parse(_) | Error::Validation(_) | Error::PreconditionFailed(_) | Error::NotASop { .. } => e,
        other => Error::Validation(other.to_string()),
    }
}

fn build_base(
    field: FieldSpec,
    variables: &[VariableSpec],
    quotient: Option<&[String]>,
    over: Option<Field>,
) -> Result<BaseRing> {
    let field = match over {
        Some(f) => f,
        None => field.to_field()?,
    };
    let ring = PolyRing::new(
        field,
        variables.iter().map(|v| v.name.clone()).collect(),
        variables.iter().map(|v| v.degree).collect(),
    )?;
    match quotient {
        None => Ok(BaseRing::polynomial(ring)),
        Some(gens) => {
            let gens = gens
                .iter()
                .enumerate()
                .map(|(k, g)| parse_at(g, &ring, || format!("quotient[{k}]")))
                .collect::<Result<Vec<_>>>()?;
            Ok(BaseRing::quotient(ring, QuotientRingSpec::new(gens)?))
        }
    }
}

fn build_complex(base: &BaseRing, spec: &ComplexSpec, require_complex: bool) -> Result<FreeComplex> {
    let ring = base.ring();
    if spec.twists.is_empty() {
        return Err(Error::Validation("complex.twists: at least F_0 is required".into()));
    }
    if spec.maps.len() + 1 != spec.twists.len() {
        return Err(Error::Validation(format!(
            "complex: {} twist lists need {} maps, found {}",
            spec.twists.len(),
            spec.twists.len() - 1,
            spec.maps.len()
        )));
    }
    let mut maps = Vec::with_capacity(spec.maps.len());
    for (k, rows) in spec.maps.iter().enumerate() {
        let (nrows, ncols) = (spec.twists[k].len(), spec.twists[k + 1].len());
        if rows.len() != nrows {
            return Err(Error::Validation(format!(
                "complex.maps[{k}]: {} rows but rank F_{k} = {nrows}",
                rows.len()
            )));
        }
        let mut parsed = Vec::with_capacity(nrows);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != ncols {
                return Err(Error::Validation(format!(
                    "complex.maps[{k}][{i}]: {} entries but rank F_{} = {ncols}",
                    row.len(),
                    k + 1
                )));
            }
            let entries = row
                .iter()
                .enumerate()
                .map(|(j, t)| parse_at(t, ring, || format!("complex.maps[{k}][{i}][{j}]")))
                .collect::<Result<Vec<_>>>()?;
            parsed.push(entries);
        }
        maps.push(PolyMatrix::from_rows(ring, parsed, ncols)?);
    }
    let degrees = spec.twists.iter().map(|t| t.iter().map(|a| -a).collect()).collect();
    let c = FreeComplex::new(base.clone(), degrees, maps).map_err(validation)?;
    if require_complex {
        check_complex(&c).map_err(|d| Error::Validation(d.to_string()))?;
    }
    Ok(c)
}

fn complex_spec(c: &FreeComplex) -> ComplexSpec {
    ComplexSpec {
        twists: (0..=c.length())
            .map(|p| c.degrees(p).iter().map(|d| -d).collect())
            .collect(),
        maps: c
            .maps()
            .iter()
            .map(|m| {
                (0..m.rows())
                    .map(|i| m.row(i).iter().map(|e| e.to_string()).collect())
                    .collect()
            })
            .collect(),
    }
}

fn variables(ring: &PolyRing) -> Vec<VariableSpec> {
    ring.names()
        .iter()
        .zip(ring.weights())
        .map(|(n, &w)| VariableSpec {
            name: n.clone(),
            degree: w,
        })
        .collect()
}

fn strings(ps: &[Polynomial]) -> Vec<String> {
    ps.iter().map(|p| p.to_string()).collect()
}

fn json_error(e: serde_json::Error) -> Error {
    Error::Parse(format!("line {} column {}: {e}", e.line(), e.column()))
}

fn parse_sop(base: &BaseRing, sop: &[String]) -> Result<SopData> {
    let elems = sop
        .iter()
        .enumerate()
        .map(|(k, t)| parse_at(t, base.ring(), || format!("sop[{k}]")))
        .collect::<Result<Vec<_>>>()?;
    validate_sop(base, elems).map_err(validation)
}

impl ProblemFile {
    pub fn from_problem(complex: &FreeComplex, sop: &SopData) -> Self {
        let base = complex.base();
        ProblemFile {
            field: FieldSpec::from_field(base.ring().field()),
            variables: variables(base.ring()),
            quotient: base.quotient_spec().map(|q| strings(q.generators())),
            sop: strings(sop.elements()),
            complex: complex_spec(complex),
        }
    }

    /// Builds and validates the problem; `field` overrides the declared field.
    pub fn to_problem(&self, field: Option<Field>) -> Result<Problem> {
        let base = build_base(self.field, &self.variables, self.quotient.as_deref(), field)?;
        let complex = build_complex(&base, &self.complex, true)?;
        if self.sop.len() != complex.length() {
            return Err(Error::Validation(format!(
                "sop has {} elements but the complex has length {}",
                self.sop.len(),
                complex.length()
            )));
        }
        let sop = parse_sop(&base, &self.sop)?;
        Ok(Problem { base, complex, sop })
    }
}

pub fn parse_problem(text: &str, field: Option<Field>) -> Result<Problem> {
    let file: ProblemFile = serde_json::from_str(text).map_err(json_error)?;
    file.to_problem(field)
}

pub fn read_problem(path: &Path, field: Option<Field>) -> Result<Problem> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_problem(&text, field)
}

fn depth(v: &Value) -> usize {
    match v {
        Value::Array(a) => 1 + a.iter().map(depth).max().unwrap_or(0),
        Value::Object(o) => 1 + o.values().map(depth).max().unwrap_or(0),
        _ => 0,
    }
}

/// Objects of scalars and arrays nested at most twice go on one line;
/// everything else is broken up one element per line.
fn layout(v: &Value, indent: usize, out: &mut String) {
    let flat = match v {
        Value::Array(_) => depth(v) <= 2 && !has_object(v),
        Value::Object(_) => depth(v) <= 1,
        _ => true,
    };
    if flat {
        out.push_str(&v.to_string());
        return;
    }
    let pad = "  ".repeat(indent + 1);
    let (open, close) = if v.is_array() { ('[', ']') } else { ('{', '}') };
    out.push(open);
    let items: Vec<(Option<&String>, &Value)> = match v {
        Value::Array(a) => a.iter().map(|x| (None, x)).collect(),
        Value::Object(o) => o.iter().map(|(k, x)| (Some(k), x)).collect(),
        _ => unreachable!(),
    };
    for (i, (key, x)) in items.iter().enumerate() {
        out.push('\n');
        out.push_str(&pad);
        if let Some(k) = key {
            out.push_str(&Value::String(k.to_string()).to_string());
            out.push_str(": ");
        }
        layout(x, indent + 1, out);
        if i + 1 < items.len() {
            out.push(',');
        }
    }
    out.push('\n');
    out.push_str(&"  ".repeat(indent));
    out.push(close);
}

fn has_object(v: &Value) -> bool {
    match v {
        Value::Object(_) => true,
        Value::Array(a) => a.iter().any(has_object),
        _ => false,
    }
}

fn to_text<T: Serialize>(data: &T) -> String {
    let v = serde_json::to_value(data).expect("plain data serializes");
    let mut out = String::new();
    layout(&v, 0, &mut out);
    out.push('\n');
    out
}

pub fn emit_problem(complex: &FreeComplex, sop: &SopData) -> String {
    to_text(&ProblemFile::from_problem(complex, sop))
}

pub fn emit_star(star: &StarComplex, sop: &SopData, report: Option<&VerificationReport>) -> String {
    let base = star.complex.base();
    let file = StarFile {
        field: FieldSpec::from_field(base.ring().field()),
        variables: variables(base.ring()),
        quotient: base.quotient_spec().map(|q| strings(q.generators())),
        sop: strings(sop.elements()),
        complex: complex_spec(&star.complex),
        top_vanished: star.top_vanished,
        labels: star.labels.clone(),
        report: report.cloned(),
    };
    to_text(&file)
}

/// A parsed result file.
#[derive(Clone, Debug)]
pub struct ParsedStar {
    pub star: StarComplex,
    pub sop: SopData,
    pub report: Option<VerificationReport>,
}

/// Parses a result file. `field` overrides the declared field. The maps are
/// not required to compose to zero; that is left to the verifier.
pub fn parse_star(text: &str, field: Option<Field>) -> Result<ParsedStar> {
    let file: StarFile = serde_json::from_str(text).map_err(json_error)?;
    let base = build_base(file.field, &file.variables, file.quotient.as_deref(), field)?;
    let complex = build_complex(&base, &file.complex, false)?;
    if file.labels.len() != complex.length() + 1 {
        return Err(Error::Validation(format!(
            "labels: {} levels for a complex of length {}",
            file.labels.len(),
            complex.length()
        )));
    }
    for (p, l) in file.labels.iter().enumerate() {
        if l.len() != complex.rank(p) {
            return Err(Error::Validation(format!(
                "labels[{p}]: {} labels but rank {}",
                l.len(),
                complex.rank(p)
            )));
        }
    }
    let sop = parse_sop(&base, &file.sop)?;
    Ok(ParsedStar {
        star: StarComplex {
            complex,
            labels: file.labels,
            top_vanished: file.top_vanished,
        },
        sop,
        report: file.report,
    })
}

pub fn read_star(path: &Path, field: Option<Field>) -> Result<ParsedStar> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_star(&text, field)
}

/// Same ring, same twists, same matrices.
pub fn same_complex(a: &FreeComplex, b: &FreeComplex) -> bool {
    a.ring().names() == b.ring().names()
        && a.ring().weights() == b.ring().weights()
        && a.ring().field() == b.ring().field()
        && a.length() == b.length()
        && (0..=a.length()).all(|p| a.degrees(p) == b.degrees(p))
        && a.maps().iter().zip(b.maps()).all(|(m, n)| {
            m.rows() == n.rows() && m.cols() == n.cols() && m.entries().zip(n.entries()).all(|(x, y)| x == y)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::transform::star_transform;
    use crate::verify::verify_star;

    pub(crate) const EXA: &str = r#"{"field":{"type":"rational"},"variables":[{"name":"x","degree":1},{"name":"y","degree":1}],"sop":["x","y"],"complex":{"twists":[[0],[-2,-2],[-4]],"maps":[[["x^2","y^2"]],[["-y^2"],["x^2"]]]}}"#;

    #[test]
    fn example_a_file_parses() {
        let p = parse_problem(EXA, None).unwrap();
        assert_eq!(p.complex.length(), 2);
        assert_eq!(p.complex.degrees(1), &[2, 2]);
        let a = crate::corpus::example_a();
        assert!(same_complex(&p.complex, &a.complex));
        let again = parse_problem(&emit_problem(&p.complex, &p.sop), None).unwrap();
        assert!(same_complex(&again.complex, &p.complex));
    }

    #[test]
    fn parse_and_validation_errors_are_distinct() {
        let bad_poly = EXA.replace(r#""x^2","y^2""#, r#""x^","y^2""#);
        assert!(matches!(parse_problem(&bad_poly, None), Err(Error::Parse(m)) if m.contains("complex.maps[0][0][0]")));
        let bad_rows = EXA.replace(r#"[["-y^2"],["x^2"]]"#, r#"[["-y^2"]]"#);
        assert!(matches!(parse_problem(&bad_rows, None), Err(Error::Validation(_))));
        assert!(matches!(parse_problem("{", None), Err(Error::Parse(_))));
        let not_complex = EXA.replace(r#"["x^2"]]]"#, r#"["x^3"]]]"#);
        assert!(matches!(parse_problem(&not_complex, None), Err(Error::Validation(_))));
    }

    #[test]
    fn field_override_and_syntax() {
        assert_eq!(parse_field("rational").unwrap(), Field::Rational);
        assert_eq!(parse_field("p:101").unwrap(), Field::Prime(101));
        assert!(parse_field("p:100").is_err());
        assert!(parse_field("reals").is_err());
        let p = parse_problem(EXA, Some(Field::Prime(7))).unwrap();
        assert_eq!(p.complex.ring().field(), Field::Prime(7));
        assert!(emit_problem(&p.complex, &p.sop).contains(r#"{"type":"prime","modulus":7}"#));
    }

    #[test]
    fn star_round_trip_is_bit_identical() {
        let p = parse_problem(EXA, None).unwrap();
        let t = star_transform(&p.complex, &p.sop).unwrap();
        let report = verify_star(&p.complex, &p.sop, &t.star);
        let text = emit_star(&t.star, &p.sop, Some(&report));
        let back = parse_star(&text, None).unwrap();
        assert_eq!(back.star.labels, t.star.labels);
        assert_eq!(back.star.top_vanished, t.star.top_vanished);
        assert!(same_complex(&back.star.complex, &t.star.complex));
        assert_eq!(back.report.as_ref(), Some(&report));
        assert_eq!(emit_star(&back.star, &back.sop, back.report.as_ref()), text);
        assert!(text.contains(r#""bracket","#) || text.contains("\"bracket\""));
        let reverify = verify_star(&p.complex, &p.sop, &back.star);
        assert!(reverify.passed());
    }

    #[test]
    fn labels_serialize_as_tagged_arrays() {
        let l = vec![
            BasisLabel::Bracket {
                lambda: 0,
                set: KoszulIndex::empty(),
            },
            BasisLabel::Angle(1),
            BasisLabel::Star { mu: 0, j: 2 },
        ];
        let s = serde_json::to_string(&l).unwrap();
        assert_eq!(s, r#"[["bracket",0,[]],["angle",1],["star",0,2]]"#);
        let back: Vec<BasisLabel> = serde_json::from_str(&s).unwrap();
        assert_eq!(back, l);
        assert!(serde_json::from_str::<BasisLabel>(r#"["angle"]"#).is_err());
        assert!(serde_json::from_str::<BasisLabel>(r#"["bracket",0,[2,1]]"#).is_err());
    }

    #[test]
    fn quotient_ring_is_carried() {
        let text = r#"{"field":{"type":"rational"},"variables":[{"name":"x","degree":1},{"name":"y","degree":1},{"name":"z","degree":1}],"quotient":["x*z - y^2"],"sop":["x","z"],"complex":{"twists":[[0],[-2,-2],[-4]],"maps":[[["x^2","z^2"]],[["-z^2"],["x^2"]]]}}"#;
        let p = parse_problem(text, None).unwrap();
        assert!(p.base.quotient_spec().is_some());
        let t = star_transform(&p.complex, &p.sop).unwrap();
        let report = verify_star(&p.complex, &p.sop, &t.star);
        assert!(report.passed(), "{report}");
        assert_eq!(report.assumptions.len(), 1);
        let out = emit_star(&t.star, &p.sop, Some(&report));
        assert!(out.contains("quotient"));
        let back = parse_star(&out, None).unwrap();
        assert_eq!(emit_star(&back.star, &back.sop, back.report.as_ref()), out);

        let short = text.replace(r#""sop":["x","z"]"#, r#""sop":["x"]"#);
        assert!(matches!(parse_problem(&short, None), Err(Error::Validation(_))));
    }
}
