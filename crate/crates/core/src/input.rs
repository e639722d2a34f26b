//! The JSON input format shared by every command:
//! `{"braid": {"strands": n, "word": [...]}}` or
//! `{"seifert_matrix": [[...]], "components": m, "label": "..."}`.
//! A braid may also be given as text, `{"braid": "strands=3; 1 2 1 2"}`.

use serde::{Deserialize, Serialize};

use crate::braid::{parse_braid, BraidWord};
use crate::error::{Error, Result};
use crate::seifert::{seifert_matrix_from_braid, SeifertData};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum BraidSpec {
    Text(String),
    Word { strands: usize, word: Vec<i64> },
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinkInput {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    braid: Option<BraidSpec>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    seifert_matrix: Option<Vec<Vec<i64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    components: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    label: Option<String>,
}

/// A link given either way, before the Seifert matrix is built.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Link {
    Braid {
        braid: BraidWord,
        label: Option<String>,
    },
    Seifert {
        matrix: Vec<Vec<i64>>,
        components: usize,
        label: String,
    },
}

impl LinkInput {
    pub fn from_braid(b: &BraidWord, label: Option<String>) -> Self {
        LinkInput {
            braid: Some(BraidSpec::Word {
                strands: b.strands(),
                word: b.letters().to_vec(),
            }),
            label,
            ..Default::default()
        }
    }

    pub fn from_seifert(s: &SeifertData) -> Self {
        LinkInput {
            seifert_matrix: Some(s.rows_i64()),
            components: Some(s.components()),
            label: Some(s.label().to_string()),
            ..Default::default()
        }
    }

    /// Check the shape of the input: exactly one of the two forms.
    pub fn link(&self) -> Result<Link> {
        match (&self.braid, &self.seifert_matrix) {
            (Some(spec), None) => {
                if self.components.is_some() {
                    return Err(Error::Parse(
                        "\"components\" is derived from the braid; do not give it".into(),
                    ));
                }
                let braid = match spec {
                    BraidSpec::Text(t) => parse_braid(t)?,
                    BraidSpec::Word { strands, word } => BraidWord::new(*strands, word.clone())?,
                };
                Ok(Link::Braid {
                    braid,
                    label: self.label.clone(),
                })
            }
            (None, Some(m)) => {
                let components = self
                    .components
                    .ok_or_else(|| Error::Parse("\"seifert_matrix\" needs \"components\"".into()))?;
                if m.iter().any(|r| r.len() != m.len()) {
                    return Err(Error::Parse("\"seifert_matrix\" must be square".into()));
                }
                Ok(Link::Seifert {
                    matrix: m.clone(),
                    components,
                    label: self.label.clone().unwrap_or_default(),
                })
            }
            (Some(_), Some(_)) => Err(Error::Parse(
                "give either \"braid\" or \"seifert_matrix\", not both".into(),
            )),
            (None, None) => Err(Error::Parse("expected a \"braid\" or \"seifert_matrix\" field".into())),
        }
    }

    /// Build and validate the Seifert data.
    pub fn seifert_data(&self) -> Result<SeifertData> {
        match self.link()? {
            Link::Braid { braid, label } => {
                let s = seifert_matrix_from_braid(&braid)?;
                Ok(match label {
                    Some(l) => s.with_label(l),
                    None => s,
                })
            }
            Link::Seifert {
                matrix,
                components,
                label,
            } => SeifertData::from_rows(&matrix, components, label),
        }
    }
}

/// Parse input text; syntax and schema errors report line and column.
pub fn parse_input(text: &str) -> Result<LinkInput> {
    let input: LinkInput = serde_json::from_str(text)?;
    input.link()?;
    Ok(input)
}
