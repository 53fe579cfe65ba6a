//! The `mlv-datum/1` JSON schema for motivic datum files, and conversions
//! to the in-memory types. Period values and rationals travel as strings in
//! the textual syntax of the period field.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::{ConjError, LObject, MotivicDatum};
use crate::frob::EulerFactor;
use crate::hodge::{Filtration, HodgeDatum, Weight};
use crate::linalg::PMatrix;
use crate::period::{parse_period, Conjugation, SymbolTable};
use crate::qdet::{QComplex, QSpace};
use crate::zeta::ZetaWord;

pub const SCHEMA: &str = "mlv-datum/1";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SymbolDecl {
    pub name: String,
    #[serde(default)]
    pub negated: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QPieceFile {
    pub degree: i64,
    pub dim: usize,
    pub qgen: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub basis_label: Option<String>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HodgeFile {
    pub degree: i64,
    pub rank: usize,
    pub weight: Weight,
    pub finf: Vec<Vec<String>>,
    pub filtration_dims: Vec<(i64, usize)>,
    pub comparison: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MatrixAt {
    pub degree: i64,
    pub matrix: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WordFile {
    #[serde(default)]
    pub shifts: Vec<(i64, i64)>,
    #[serde(default)]
    pub factors: Vec<EulerFactor>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub enum LObjectFile {
    #[serde(rename = "word")]
    Word(WordFile),
    #[serde(rename = "factors")]
    Factors(Vec<EulerFactor>),
}

/// One motivic datum document.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DatumFile {
    pub schema: String,
    pub label: String,
    #[serde(default)]
    pub symbols: Vec<SymbolDecl>,
    #[serde(default, rename = "hM")]
    pub h_m: Vec<QPieceFile>,
    #[serde(default, rename = "hDM")]
    pub h_dm: Vec<QPieceFile>,
    #[serde(default)]
    pub hodge: Vec<HodgeFile>,
    #[serde(default)]
    pub regulators: Vec<MatrixAt>,
    #[serde(default)]
    pub pairings: Vec<MatrixAt>,
    pub lobject: LObjectFile,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k_ranks: Option<BTreeMap<String, Vec<i64>>>,
}

fn parse_matrix(rows: &[Vec<String>]) -> Result<PMatrix, ConjError> {
    let r = rows.len();
    let c = rows.first().map(|x| x.len()).unwrap_or(0);
    if rows.iter().any(|row| row.len() != c) {
        return Err(ConjError::InvalidDatum("ragged matrix".into()));
    }
    let mut data = Vec::with_capacity(r * c);
    for row in rows {
        for s in row {
            data.push(parse_period(s)?);
        }
    }
    Ok(PMatrix::new(r, c, data))
}

fn matrix_to_strings(m: &PMatrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| (0..m.cols()).map(|j| m[(i, j)].to_string()).collect())
        .collect()
}

fn parse_complex(pieces: &[QPieceFile]) -> Result<QComplex, ConjError> {
    let mut out = Vec::new();
    for p in pieces {
        if p.dim == 0 {
            continue;
        }
        out.push((p.degree, QSpace::new(p.dim, parse_period(&p.qgen)?)?));
    }
    Ok(QComplex::from_pieces(out))
}

fn complex_to_pieces(c: &QComplex) -> Vec<QPieceFile> {
    c.support()
        .into_iter()
        .map(|d| QPieceFile {
            degree: d,
            dim: c.dim(d),
            qgen: c.piece(d).qgen().to_string(),
            basis_label: None,
        })
        .collect()
}

impl DatumFile {
    pub fn to_datum(&self) -> Result<MotivicDatum, ConjError> {
        if self.schema != SCHEMA {
            return Err(ConjError::InvalidDatum(format!(
                "unsupported schema `{}` (expected `{SCHEMA}`)",
                self.schema
            )));
        }
        for decl in &self.symbols {
            let conj = if decl.negated {
                Conjugation::Negated
            } else {
                Conjugation::Fixed
            };
            SymbolTable::declare(&decl.name, conj)?;
        }
        let mut hodge = Vec::new();
        for h in &self.hodge {
            let datum = HodgeDatum::new(
                h.rank,
                h.weight.clone(),
                parse_matrix(&h.finf)?,
                Filtration::new(h.filtration_dims.clone())?,
                parse_matrix(&h.comparison)?,
            )?;
            hodge.push((h.degree, datum));
        }
        let to_map = |items: &[MatrixAt]| -> Result<BTreeMap<i64, PMatrix>, ConjError> {
            let mut out = BTreeMap::new();
            for item in items {
                if out.insert(item.degree, parse_matrix(&item.matrix)?).is_some() {
                    return Err(ConjError::InvalidDatum(format!(
                        "duplicate matrix at degree {}",
                        item.degree
                    )));
                }
            }
            Ok(out)
        };
        let lobject = match &self.lobject {
            LObjectFile::Word(w) => LObject::Word(
                ZetaWord {
                    shifts: w.shifts.clone(),
                    factors: w.factors.clone(),
                }
                .normalized(),
            ),
            LObjectFile::Factors(f) => LObject::Factors(f.clone()),
        };
        let k_ranks = match &self.k_ranks {
            None => None,
            Some(table) => {
                let mut out = BTreeMap::new();
                for (k, v) in table {
                    let m: i64 = k.parse().map_err(|_| {
                        ConjError::InvalidDatum(format!("bad twist key `{k}` in kRanks"))
                    })?;
                    out.insert(m, v.clone());
                }
                Some(out)
            }
        };
        let datum = MotivicDatum {
            label: self.label.clone(),
            h_m: parse_complex(&self.h_m)?,
            h_dm: parse_complex(&self.h_dm)?,
            hodge,
            regulators: to_map(&self.regulators)?,
            pairings: to_map(&self.pairings)?,
            lobject,
            k_ranks,
        };
        datum.validate()?;
        Ok(datum)
    }

    pub fn from_datum(d: &MotivicDatum) -> DatumFile {
        let from_map = |m: &BTreeMap<i64, PMatrix>| -> Vec<MatrixAt> {
            m.iter()
                .map(|(&degree, mat)| MatrixAt {
                    degree,
                    matrix: matrix_to_strings(mat),
                })
                .collect()
        };
        let symbols: Vec<SymbolDecl> = {
            let mut ids = Vec::new();
            for (_, h) in &d.hodge {
                for i in 0..h.rank {
                    for j in 0..h.rank {
                        ids.extend(h.comparison[(i, j)].symbols());
                    }
                }
            }
            for m in d.regulators.values().chain(d.pairings.values()) {
                for i in 0..m.rows() {
                    for j in 0..m.cols() {
                        ids.extend(m[(i, j)].symbols());
                    }
                }
            }
            ids.sort();
            ids.dedup();
            ids.into_iter()
                .map(|id| SymbolDecl {
                    name: SymbolTable::name(id),
                    negated: SymbolTable::conjugation(id) == Conjugation::Negated,
                })
                .collect()
        };
        DatumFile {
            schema: SCHEMA.to_string(),
            label: d.label.clone(),
            symbols,
            h_m: complex_to_pieces(&d.h_m),
            h_dm: complex_to_pieces(&d.h_dm),
            hodge: d
                .hodge
                .iter()
                .map(|(degree, h)| HodgeFile {
                    degree: *degree,
                    rank: h.rank,
                    weight: h.weight.clone(),
                    finf: matrix_to_strings(&h.finf),
                    filtration_dims: h.filtration.jumps().to_vec(),
                    comparison: matrix_to_strings(&h.comparison),
                })
                .collect(),
            regulators: from_map(&d.regulators),
            pairings: from_map(&d.pairings),
            lobject: match &d.lobject {
                LObject::Word(w) => LObjectFile::Word(WordFile {
                    shifts: w.shifts.clone(),
                    factors: w.factors.clone(),
                }),
                LObject::Factors(f) => LObjectFile::Factors(f.clone()),
            },
            k_ranks: d.k_ranks.as_ref().map(|t| {
                t.iter().map(|(m, v)| (m.to_string(), v.clone())).collect()
            }),
        }
    }
}

/// A standalone Hodge datum document (for the hodge subcommands).
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct HodgeDatumFile {
    #[serde(default)]
    pub symbols: Vec<SymbolDecl>,
    pub rank: usize,
    pub weight: Weight,
    pub finf: Vec<Vec<String>>,
    pub filtration_dims: Vec<(i64, usize)>,
    pub comparison: Vec<Vec<String>>,
}

impl HodgeDatumFile {
    pub fn to_datum(&self) -> Result<HodgeDatum, ConjError> {
        for decl in &self.symbols {
            let conj = if decl.negated {
                Conjugation::Negated
            } else {
                Conjugation::Fixed
            };
            SymbolTable::declare(&decl.name, conj)?;
        }
        Ok(HodgeDatum::new(
            self.rank,
            self.weight.clone(),
            parse_matrix(&self.finf)?,
            Filtration::new(self.filtration_dims.clone())?,
            parse_matrix(&self.comparison)?,
        )?)
    }

    pub fn from_datum(h: &HodgeDatum) -> HodgeDatumFile {
        HodgeDatumFile {
            symbols: Vec::new(),
            rank: h.rank,
            weight: h.weight.clone(),
            finf: matrix_to_strings(&h.finf),
            filtration_dims: h.filtration.jumps().to_vec(),
            comparison: matrix_to_strings(&h.comparison),
        }
    }
}

/// Parse a datum document from JSON text.
pub fn datum_from_json(text: &str) -> Result<MotivicDatum, ConjError> {
    let file: DatumFile = serde_json::from_str(text)
        .map_err(|e| ConjError::InvalidDatum(format!("JSON: {e}")))?;
    file.to_datum()
}

/// Serialize a datum to pretty JSON.
pub fn datum_to_json(d: &MotivicDatum) -> String {
    serde_json::to_string_pretty(&DatumFile::from_datum(d)).expect("serializable")
}
