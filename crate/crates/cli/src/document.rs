//! JSON documents carrying named states and a POVM.
//!
//! Wire format (schema version "1"):
//!
//! ```json
//! {
//!   "schema_version": "1",
//!   "states": { "psi": { "r": [0.0, 0.0, 1.0] } },
//!   "povm": { "elements": [ { "a": 1.0, "v": [0.0, 0.0, 1.0] } ] }
//! }
//! ```
//!
//! Parsing is strict: unknown fields are rejected, every element must be
//! a positive operator and every state vector must fit in the unit ball.
//! Set-level closure (vectors summing to zero, weights to two) is *not*
//! a document invariant — checking it is what `validate` is for.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use bloch_povm::{BlochState, PovmElement, PovmSet, Vec3};

pub const SCHEMA_VERSION: &str = "1";

/// A parsed and validated document.
#[derive(Debug, Clone, PartialEq)]
pub struct Document {
    pub schema_version: String,
    /// Named states; empty when the document has none.
    pub states: BTreeMap<String, BlochState>,
    pub povm: Option<PovmSet>,
}

/// Errors from [`parse_document`], ordered by how early they strike:
/// malformed JSON, then shape mismatches, then domain invariants.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DocumentError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("schema error: {message}")]
    Schema { message: String },
    #[error("validation error: {message}")]
    Validation { message: String },
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct DocumentWire {
    schema_version: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    states: Option<BTreeMap<String, StateWire>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    povm: Option<PovmWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct StateWire {
    r: [f64; 3],
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct PovmWire {
    elements: Vec<ElementWire>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ElementWire {
    a: f64,
    v: [f64; 3],
}

/// Parse a document from JSON text, rejecting unknown fields and
/// domain-invalid values.
pub fn parse_document(text: &str) -> Result<Document, DocumentError> {
    let wire: DocumentWire = serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => DocumentError::Schema {
                message: e.to_string(),
            },
            _ => DocumentError::Parse {
                line: e.line(),
                column: e.column(),
                message: e.to_string(),
            },
        }
    })?;

    if wire.schema_version != SCHEMA_VERSION {
        return Err(DocumentError::Schema {
            message: format!(
                "unsupported schema_version {:?} (expected {:?})",
                wire.schema_version, SCHEMA_VERSION
            ),
        });
    }

    let mut states = BTreeMap::new();
    for (name, s) in wire.states.unwrap_or_default() {
        let vector = Vec3::new(s.r[0], s.r[1], s.r[2]).map_err(|e| DocumentError::Validation {
            message: format!("state {name:?}: {e}"),
        })?;
        let state = BlochState::new(vector).map_err(|e| DocumentError::Validation {
            message: format!("state {name:?}: {e}"),
        })?;
        states.insert(name, state);
    }

    let povm = match wire.povm {
        None => None,
        Some(p) => {
            let mut elements = Vec::with_capacity(p.elements.len());
            for (i, e) in p.elements.iter().enumerate() {
                let vector =
                    Vec3::new(e.v[0], e.v[1], e.v[2]).map_err(|err| DocumentError::Validation {
                        message: format!("element {i}: {err}"),
                    })?;
                let element =
                    PovmElement::new(e.a, vector).map_err(|err| DocumentError::Validation {
                        message: format!("element {i}: {err}"),
                    })?;
                if !element.validate().positive {
                    return Err(DocumentError::Validation {
                        message: format!(
                            "element {i}: not a positive operator (a = {}, |v| = {})",
                            e.a,
                            vector.norm()
                        ),
                    });
                }
                elements.push(element);
            }
            Some(
                PovmSet::new(elements).map_err(|e| DocumentError::Validation {
                    message: e.to_string(),
                })?,
            )
        }
    };

    Ok(Document {
        schema_version: wire.schema_version,
        states,
        povm,
    })
}

impl Document {
    pub fn new(states: BTreeMap<String, BlochState>, povm: Option<PovmSet>) -> Self {
        Document {
            schema_version: SCHEMA_VERSION.to_string(),
            states,
            povm,
        }
    }

    /// Serialize to pretty JSON. `parse_document` inverts this exactly.
    pub fn to_json(&self) -> String {
        let wire = DocumentWire {
            schema_version: self.schema_version.clone(),
            states: if self.states.is_empty() {
                None
            } else {
                Some(
                    self.states
                        .iter()
                        .map(|(name, s)| {
                            let r = s.vector();
                            (
                                name.clone(),
                                StateWire {
                                    r: [r.x(), r.y(), r.z()],
                                },
                            )
                        })
                        .collect(),
                )
            },
            povm: self.povm.as_ref().map(|set| PovmWire {
                elements: set
                    .elements()
                    .iter()
                    .map(|e| {
                        let v = e.vector();
                        ElementWire {
                            a: e.weight(),
                            v: [v.x(), v.y(), v.z()],
                        }
                    })
                    .collect(),
            }),
        };
        let mut out = serde_json::to_string_pretty(&wire).expect("documents serialize");
        out.push('\n');
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_von_neumann_set() {
        let doc = parse_document(
            r#"{"schema_version":"1","povm":{"elements":[{"a":1,"v":[0,0,1]},{"a":1,"v":[0,0,-1]}]}}"#,
        )
        .unwrap();
        let set = doc.povm.unwrap();
        assert_eq!(set.len(), 2);
        assert!(set.validate().valid);
        assert!(doc.states.is_empty());
    }

    #[test]
    fn parses_named_state() {
        let doc =
            parse_document(r#"{"schema_version":"1","states":{"psi":{"r":[0,0,1]}}}"#).unwrap();
        assert!(doc.states["psi"].is_pure());
        assert!(doc.povm.is_none());
    }

    #[test]
    fn rejects_non_positive_element() {
        let err =
            parse_document(r#"{"schema_version":"1","povm":{"elements":[{"a":1,"v":[0,0,2]}]}}"#)
                .unwrap_err();
        assert!(matches!(err, DocumentError::Validation { .. }));
    }

    #[test]
    fn rejects_overlong_state() {
        let err =
            parse_document(r#"{"schema_version":"1","states":{"s":{"r":[0,0,1.5]}}}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Validation { .. }));
    }

    #[test]
    fn rejects_unknown_fields_and_bad_versions() {
        let err = parse_document(r#"{"schema_version":"1","extra":1}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Schema { .. }));

        let err = parse_document(r#"{"schema_version":"2"}"#).unwrap_err();
        assert!(matches!(err, DocumentError::Schema { .. }));
    }

    #[test]
    fn reports_parse_position() {
        let err = parse_document("{\n  \"schema_version\": \"1\",,\n}").unwrap_err();
        match err {
            DocumentError::Parse { line, .. } => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn round_trips_preserve_documents() {
        let text = r#"{
            "schema_version": "1",
            "states": {"psi": {"r": [0, 0, 1]}, "phi": {"r": [0.7071067811865476, 0, 0.7071067811865476]}},
            "povm": {"elements": [{"a": 1, "v": [0, 0, 1]}, {"a": 1, "v": [0, 0, -1]}]}
        }"#;
        let doc = parse_document(text).unwrap();
        let again = parse_document(&doc.to_json()).unwrap();
        assert_eq!(doc, again);
    }
}
