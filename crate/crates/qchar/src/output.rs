//! Serializable output documents for the command-line front end.
//!
//! The JSON layout is fixed (schema version "1") and fully typed, so parsing
//! and re-serializing a document is byte-identical and independent runs of
//! the same command produce identical bytes.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::partitions::{PartitionCtx, Sign};
use crate::qcharacter::{dominant_entries, LCharacter};
use crate::root_system::RootSystem;

pub const SCHEMA_VERSION: &str = "1";

/// Generator rendering style for text output.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    /// `w[i;k]`, matching the fundamental generators.
    #[default]
    Omega,
    /// `Y[i;k]`, the common alternative naming of the same generators.
    Y,
}

impl Notation {
    fn letter(self) -> char {
        match self {
            Notation::Omega => 'w',
            Notation::Y => 'Y',
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Meta {
    #[serde(rename = "type")]
    pub kind: String,
    pub rank: usize,
    pub node: usize,
    pub base_exp: i64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct CharacterEntry {
    pub monomial: Vec<[i64; 3]>,
    pub weight: Vec<i64>,
    pub mult: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct DominantRow {
    pub monomial: Vec<[i64; 3]>,
    pub weight: Vec<i64>,
    pub mult: u64,
    pub partition: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub class: Option<Vec<Vec<usize>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mult_exponent: Option<u32>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct ResidueGroup {
    pub r: usize,
    pub rows: Vec<DominantRow>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct Payload {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub character: Option<Vec<CharacterEntry>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dominant: Option<Vec<ResidueGroup>>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct Totals {
    pub entries: usize,
    pub mass: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct OutputDocument {
    pub schema: String,
    pub meta: Meta,
    pub payload: Payload,
    pub totals: Totals,
}

impl OutputDocument {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("document serializes");
        s.push('\n');
        s
    }
}

/// Document for a full q-character; entries sorted by weight, then monomial.
pub fn character_document(ch: &LCharacter) -> OutputDocument {
    let mut entries: Vec<CharacterEntry> = ch
        .entries
        .iter()
        .map(|(x, &m)| CharacterEntry {
            monomial: x.to_triples(),
            weight: x.weight(ch.rank).0,
            mult: m,
        })
        .collect();
    entries.sort_by(|a, b| (&a.weight, &a.monomial).cmp(&(&b.weight, &b.monomial)));
    let totals = Totals {
        entries: entries.len(),
        mass: ch.mass(),
    };
    OutputDocument {
        schema: SCHEMA_VERSION.to_string(),
        meta: Meta {
            kind: ch.kind.to_string(),
            rank: ch.rank,
            node: ch.node,
            base_exp: ch.base_exp,
        },
        payload: Payload {
            character: Some(entries),
            dominant: None,
        },
        totals,
    }
}

/// Document for the dominant loop weights of a node, one row per producing
/// partition (and sign variant for type D), grouped by residue.
pub fn dominant_document(
    rs: &RootSystem,
    node: usize,
    only_r: Option<usize>,
) -> Result<OutputDocument> {
    let residues: Vec<usize> = match only_r {
        Some(r) => {
            // surfaces the residue validation error for out-of-family r
            PartitionCtx::new(rs, node, r)?;
            vec![r]
        }
        None => PartitionCtx::residues(rs, node),
    };
    let mut groups = Vec::new();
    let mut n_rows = 0usize;
    let mut mass = 0u64;
    for r in residues {
        let ctx = PartitionCtx::new(rs, node, r)?;
        let mut rows = Vec::new();
        for entry in dominant_entries(&ctx)? {
            mass += entry.multiplicity;
            let class: Vec<Vec<usize>> = entry.partitions.iter().map(|p| p.0.clone()).collect();
            for p in &entry.partitions {
                rows.push(DominantRow {
                    monomial: entry.monomial.to_triples(),
                    weight: entry.monomial.weight(rs.rank()).0,
                    mult: entry.multiplicity,
                    partition: p.0.clone(),
                    variant: entry.sign.map(|s: Sign| s.to_string()),
                    class: if ctx.kind() == crate::root_system::Kind::D {
                        Some(class.clone())
                    } else {
                        None
                    },
                    mult_exponent: if ctx.kind() == crate::root_system::Kind::D {
                        Some(entry.mult_exponent)
                    } else {
                        None
                    },
                });
            }
        }
        n_rows += rows.len();
        groups.push(ResidueGroup { r, rows });
    }
    Ok(OutputDocument {
        schema: SCHEMA_VERSION.to_string(),
        meta: Meta {
            kind: rs.kind().to_string(),
            rank: rs.rank(),
            node,
            base_exp: 0,
        },
        payload: Payload {
            character: None,
            dominant: Some(groups),
        },
        totals: Totals { entries: n_rows, mass },
    })
}

fn render_monomial(triples: &[[i64; 3]], notation: Notation) -> String {
    if triples.is_empty() {
        return "1".to_string();
    }
    let c = notation.letter();
    let mut out = String::new();
    for (idx, [i, k, m]) in triples.iter().enumerate() {
        if idx > 0 {
            out.push(' ');
        }
        out.push_str(&format!("{c}[{i};{k}]"));
        if *m != 1 {
            out.push_str(&format!("^{m}"));
        }
    }
    out
}

fn render_weight(w: &[i64]) -> String {
    let inner: Vec<String> = w.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

/// Human-readable rendering of a document.
pub fn render_text(doc: &OutputDocument, notation: Notation) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "{}{} node {} (base exponent {})\n",
        doc.meta.kind, doc.meta.rank, doc.meta.node, doc.meta.base_exp
    ));
    if let Some(entries) = &doc.payload.character {
        out.push_str(&format!(
            "q-character: {} distinct monomials, total mass {}\n",
            doc.totals.entries, doc.totals.mass
        ));
        for e in entries {
            out.push_str(&format!(
                "  {:<12} {:>3}  {}\n",
                render_weight(&e.weight),
                e.mult,
                render_monomial(&e.monomial, notation)
            ));
        }
    }
    if let Some(groups) = &doc.payload.dominant {
        out.push_str(&format!(
            "dominant loop weights: {} rows, total mass {}\n",
            doc.totals.entries, doc.totals.mass
        ));
        for g in groups {
            out.push_str(&format!("  r = {}\n", g.r));
            for row in &g.rows {
                let mut tags = format!("j={}", render_partition(&row.partition));
                if let Some(v) = &row.variant {
                    tags.push_str(&format!(" sign={v}"));
                }
                if let Some(me) = row.mult_exponent {
                    tags.push_str(&format!(" 2^{me}"));
                }
                if let Some(class) = &row.class {
                    if class.len() > 1 {
                        let members: Vec<String> =
                            class.iter().map(|p| render_partition(p)).collect();
                        tags.push_str(&format!(" class={{{}}}", members.join(",")));
                    }
                }
                out.push_str(&format!(
                    "    {:<12} {:>3}  {:<28} {}\n",
                    render_weight(&row.weight),
                    row.mult,
                    render_monomial(&row.monomial, notation),
                    tags
                ));
            }
        }
    }
    out
}

fn render_partition(p: &[usize]) -> String {
    let inner: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", inner.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qcharacter::full_character;
    use crate::root_system::Kind;

    #[test]
    fn json_round_trip_is_byte_identical() {
        let rs = RootSystem::new(Kind::C, 2).unwrap();
        let doc = character_document(&full_character(&rs, 2, 0).unwrap());
        let json = doc.to_json();
        let back: OutputDocument = serde_json::from_str(&json).unwrap();
        assert_eq!(back.to_json(), json);
        assert_eq!(back, doc);
    }

    #[test]
    fn character_document_is_sorted_and_consistent() {
        let rs = RootSystem::new(Kind::C, 2).unwrap();
        let doc = character_document(&full_character(&rs, 2, 0).unwrap());
        let entries = doc.payload.character.as_ref().unwrap();
        assert_eq!(entries.len(), doc.totals.entries);
        assert_eq!(entries.iter().map(|e| e.mult).sum::<u64>(), doc.totals.mass);
        let mut sorted = entries.clone();
        sorted.sort_by(|a, b| (&a.weight, &a.monomial).cmp(&(&b.weight, &b.monomial)));
        assert_eq!(&sorted, entries);
    }

    #[test]
    fn dominant_document_d4() {
        let rs = RootSystem::new(Kind::D, 4).unwrap();
        let doc = dominant_document(&rs, 2, Some(0)).unwrap();
        let groups = doc.payload.dominant.as_ref().unwrap();
        assert_eq!(groups.len(), 1);
        assert_eq!(groups[0].rows.len(), 5);
        assert_eq!(doc.totals.mass, 5);
        // residue parity validation
        let c2 = RootSystem::new(Kind::C, 2).unwrap();
        assert!(dominant_document(&c2, 2, Some(1)).is_err());
    }

    #[test]
    fn text_rendering_mentions_monomials() {
        let rs = RootSystem::new(Kind::A, 2).unwrap();
        let doc = character_document(&full_character(&rs, 1, 0).unwrap());
        let text = render_text(&doc, Notation::Omega);
        assert!(text.contains("w[1;0]"));
        let text_y = render_text(&doc, Notation::Y);
        assert!(text_y.contains("Y[1;0]"));
    }
}
