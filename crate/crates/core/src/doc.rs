//! JSON documents for structures, period data and abelian Cousin data.
//!
//! Rationals are strings `"p/q"` (or `"p"`); plain JSON integers are also
//! accepted on input. A field element is `[a0, a1, a2, a3]` for
//! `a0 + a1·√m + a2·i + a3·i·√m` under the document's `m`. Matrices are
//! lists of rows; the columns of a piece basis span the piece.

use std::fmt;

use num_bigint::BigInt;
use serde::de::{self, Deserializer, Visitor};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactfield::{format_rational, parse_rational, FieldElem, Rational};
use crate::hodge::{HodgeStructure, Piece};
use crate::linalg::{IntMatrix, KMatrix, Matrix, QMatrix};
use crate::metric::{AbelianCousinData, HermitianForm};
use crate::tori::PeriodData;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rat(pub Rational);

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(&self.0))
    }
}

struct RatVisitor;

impl Visitor<'_> for RatVisitor {
    type Value = Rat;

    fn expecting(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("a rational \"p/q\" or an integer")
    }

    fn visit_str<E: de::Error>(self, v: &str) -> std::result::Result<Rat, E> {
        parse_rational(v).map(Rat).ok_or_else(|| E::custom(format!("invalid rational {v:?}")))
    }

    fn visit_i64<E: de::Error>(self, v: i64) -> std::result::Result<Rat, E> {
        Ok(Rat(Rational::from_integer(BigInt::from(v))))
    }

    fn visit_u64<E: de::Error>(self, v: u64) -> std::result::Result<Rat, E> {
        Ok(Rat(Rational::from_integer(BigInt::from(v))))
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Rat, D::Error> {
        d.deserialize_any(RatVisitor)
    }
}

pub type Elem = [Rat; 4];
pub type Rows<T> = Vec<Vec<T>>;

pub fn elem(x: &FieldElem) -> Elem {
    x.coeffs().clone().map(Rat)
}

pub fn field_elem(m: u64, e: &Elem) -> Result<FieldElem> {
    Ok(FieldElem::new(m, e.clone().map(|r| r.0))?)
}

pub fn k_rows(a: &KMatrix) -> Rows<Elem> {
    a.to_rows().iter().map(|r| r.iter().map(elem).collect()).collect()
}

pub fn q_rows(a: &QMatrix) -> Rows<Rat> {
    a.to_rows().iter().map(|r| r.iter().cloned().map(Rat).collect()).collect()
}

pub fn int_rows(a: &IntMatrix) -> Rows<String> {
    a.to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect()
}

fn width<T>(rows: &[Vec<T>], cols: usize, what: &str) -> Result<()> {
    match rows.iter().position(|r| r.len() != cols) {
        Some(i) => Err(Error::Shape(format!("{what}: row {i} has {} entries, expected {cols}", rows[i].len()))),
        None => Ok(()),
    }
}

/// `rows × cols` K-matrix; `cols` is taken from the first row when absent.
pub fn k_matrix(m: u64, rows: &Rows<Elem>, cols: Option<usize>, what: &str) -> Result<KMatrix> {
    let cols = cols.unwrap_or_else(|| rows.first().map_or(0, Vec::len));
    width(rows, cols, what)?;
    let parsed = rows
        .iter()
        .map(|r| r.iter().map(|e| field_elem(m, e)).collect::<Result<Vec<_>>>())
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(parsed, cols, m)?)
}

pub fn q_matrix(rows: &Rows<Rat>, what: &str) -> Result<QMatrix> {
    let cols = rows.first().map_or(0, Vec::len);
    width(rows, cols, what)?;
    let parsed = rows.iter().map(|r| r.iter().map(|x| x.0.clone()).collect()).collect();
    Ok(Matrix::from_rows(parsed, cols, ())?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PieceDoc {
    pub p: i32,
    pub q: i32,
    pub basis: Rows<Elem>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StructureDoc {
    pub m: u64,
    pub weight: u32,
    pub rank: usize,
    pub pieces: Vec<PieceDoc>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub polarization: Option<Rows<Rat>>,
}

impl StructureDoc {
    pub fn new(h: &HodgeStructure, q: Option<&QMatrix>) -> Self {
        StructureDoc {
            m: h.m(),
            weight: h.weight(),
            rank: h.rank(),
            pieces: h
                .pieces()
                .iter()
                .map(|pc| PieceDoc { p: pc.p, q: pc.q, basis: k_rows(&pc.basis) })
                .collect(),
            polarization: q.map(q_rows),
        }
    }

    /// The splitting as written, without validating the Hodge axioms.
    pub fn structure(&self) -> Result<HodgeStructure> {
        let pieces = self
            .pieces
            .iter()
            .map(|pc| {
                if pc.basis.len() != self.rank {
                    return Err(Error::Shape(format!(
                        "piece ({},{}) has {} rows, rank is {}",
                        pc.p,
                        pc.q,
                        pc.basis.len(),
                        self.rank
                    )));
                }
                let what = format!("piece ({},{})", pc.p, pc.q);
                Ok(Piece { p: pc.p, q: pc.q, basis: k_matrix(self.m, &pc.basis, None, &what)? })
            })
            .collect::<Result<Vec<_>>>()?;
        HodgeStructure::from_parts(self.weight, self.rank, self.m, pieces)
    }

    pub fn polarization(&self) -> Result<Option<QMatrix>> {
        self.polarization.as_ref().map(|q| q_matrix(q, "polarization")).transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PeriodDoc {
    pub m: u64,
    pub ambient_dim: usize,
    pub generators: Rows<Elem>,
}

impl PeriodDoc {
    pub fn new(p: &PeriodData) -> Self {
        PeriodDoc {
            m: p.m(),
            ambient_dim: p.ambient_dim(),
            generators: p.generators().iter().map(|g| g.iter().map(elem).collect()).collect(),
        }
    }

    pub fn periods(&self) -> Result<PeriodData> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.iter().map(|e| field_elem(self.m, e)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        PeriodData::new(self.ambient_dim, self.m, gens)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CousinDoc {
    pub periods: PeriodDoc,
    pub h_re: Rows<Elem>,
    pub h_im: Rows<Elem>,
}

impl CousinDoc {
    pub fn new(periods: &PeriodData, h: &HermitianForm) -> Self {
        CousinDoc { periods: PeriodDoc::new(periods), h_re: k_rows(&h.re), h_im: k_rows(&h.im) }
    }

    pub fn parts(&self) -> Result<(PeriodData, HermitianForm)> {
        let periods = self.periods.periods()?;
        let n = periods.ambient_dim();
        let m = periods.m();
        if self.h_re.len() != n || self.h_im.len() != n {
            return Err(Error::Shape(format!("Hermitian form must be {n}x{n}")));
        }
        let re = k_matrix(m, &self.h_re, Some(n), "h_re")?;
        let im = k_matrix(m, &self.h_im, Some(n), "h_im")?;
        Ok((periods, HermitianForm::new(re, im)?))
    }

    pub fn data(&self) -> Result<AbelianCousinData> {
        let (periods, h) = self.parts()?;
        AbelianCousinData::try_new(periods, h)
    }
}

/// Any input document, recognized by its fields.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Document {
    Structure(StructureDoc),
    Periods(PeriodDoc),
    Cousin(CousinDoc),
}

/// Where a document failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub field: String,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}, field `{}`: {}", self.line, self.column, self.field, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse<T: de::DeserializeOwned>(text: &str) -> std::result::Result<T, ParseError> {
    let mut de = serde_json::Deserializer::from_str(text);
    let value: T = serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let field = e.path().to_string();
        let inner = e.into_inner();
        ParseError { line: inner.line(), column: inner.column(), field, message: inner.to_string() }
    })?;
    de.end().map_err(|e| ParseError {
        line: e.line(),
        column: e.column(),
        field: ".".into(),
        message: e.to_string(),
    })?;
    Ok(value)
}

/// Reads any of the three document kinds; the field is reported against
/// the schema suggested by the top-level keys.
pub fn parse_document(text: &str) -> std::result::Result<Document, ParseError> {
    let probe: serde_json::Value = parse(text)?;
    let has = |k: &str| probe.get(k).is_some();
    if has("pieces") || has("weight") {
        parse(text).map(Document::Structure)
    } else if has("h_re") || has("h_im") || has("periods") {
        parse(text).map(Document::Cousin)
    } else if has("generators") || has("ambient_dim") {
        parse(text).map(Document::Periods)
    } else {
        Err(ParseError {
            line: 1,
            column: 1,
            field: ".".into(),
            message: "unrecognized document: expected `pieces`, `generators` or `periods`".into(),
        })
    }
}

/// Pretty JSON with a trailing newline.
pub fn to_text<T: Serialize>(doc: &T) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}
