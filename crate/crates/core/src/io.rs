//! JSON and Graphviz formats.
//!
//! Quiver:
//!
//! ```json
//! {"vertices": ["1", "2"], "arrows": [{"from": "1", "to": "2", "mult": 1}], "frozen": []}
//! ```
//!
//! Labels may be given as strings or integers; `mult` defaults to 1 and
//! `frozen` to empty. A sequence is `{"steps": [...], "order": "execution"}`
//! (`order` may be `"composition"`) or a bare array in execution order. A
//! decomposition is `{"chains": [[...], ...], "oblique": [{"from", "to"}]}`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::qn::{QnCandidate, QnDecomposition};
use crate::quiver::{Arrow, Color, IceQuiver, Quiver, QuiverError, VertexId};
use crate::sequence::MutationSequence;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Quiver(#[from] QuiverError),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
enum Label {
    Text(String),
    Number(i64),
}

impl From<Label> for VertexId {
    fn from(l: Label) -> VertexId {
        match l {
            Label::Text(s) => VertexId::new(s),
            Label::Number(n) => VertexId::new(n.to_string()),
        }
    }
}

fn default_mult() -> u32 {
    1
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ArrowIn {
    from: Label,
    to: Label,
    #[serde(default = "default_mult")]
    mult: u32,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct QuiverIn {
    vertices: Vec<Label>,
    #[serde(default)]
    arrows: Vec<ArrowIn>,
    #[serde(default)]
    frozen: Vec<Label>,
}

#[derive(Serialize)]
struct ArrowOut<'a> {
    from: &'a VertexId,
    to: &'a VertexId,
    mult: u32,
}

#[derive(Serialize)]
struct QuiverOut<'a> {
    vertices: &'a [VertexId],
    arrows: Vec<ArrowOut<'a>>,
    frozen: Vec<VertexId>,
}

/// A parsed quiver file. Without frozen vertices it is a plain quiver.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuiverFile {
    pub quiver: Quiver,
    pub frozen: Vec<VertexId>,
}

impl QuiverFile {
    pub fn ice(&self) -> Result<IceQuiver, QuiverError> {
        IceQuiver::new(self.quiver.clone(), self.frozen.iter())
    }
}

pub fn parse_quiver(text: &str) -> Result<QuiverFile, IoError> {
    let raw: QuiverIn = serde_json::from_str(text)?;
    let arrows = raw.arrows.into_iter().map(|a| Arrow::new(VertexId::from(a.from), VertexId::from(a.to), a.mult));
    let quiver = Quiver::new(raw.vertices, arrows)?;
    let frozen: Vec<VertexId> = raw.frozen.into_iter().map(VertexId::from).collect();
    if let Some(f) = frozen.iter().find(|f| !quiver.contains(f)) {
        return Err(QuiverError::UnknownVertex(f.clone()).into());
    }
    Ok(QuiverFile { quiver, frozen })
}

fn quiver_out<'a>(q: &'a Quiver, arrows: &'a [Arrow], frozen: Vec<VertexId>) -> QuiverOut<'a> {
    QuiverOut {
        vertices: q.vertices(),
        arrows: arrows.iter().map(|a| ArrowOut { from: &a.from, to: &a.to, mult: a.mult }).collect(),
        frozen,
    }
}

pub fn quiver_to_json(q: &Quiver) -> serde_json::Value {
    let arrows = q.arrows();
    serde_json::to_value(quiver_out(q, &arrows, Vec::new())).expect("serializable")
}

pub fn ice_quiver_to_json(iq: &IceQuiver) -> serde_json::Value {
    let arrows = iq.quiver().arrows();
    serde_json::to_value(quiver_out(iq.quiver(), &arrows, iq.frozen_vertices())).expect("serializable")
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Order {
    /// First step first.
    #[default]
    Execution,
    /// Last step first, as in `μ_k ∘ ... ∘ μ_1`.
    Composition,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum SequenceIn {
    Bare(Vec<Label>),
    Tagged {
        steps: Vec<Label>,
        #[serde(default)]
        order: Order,
    },
}

/// Parses a sequence, keeping consecutive repeats so that verification can
/// report them.
pub fn parse_sequence_steps(text: &str) -> Result<Vec<VertexId>, IoError> {
    parse_sequence_steps_as(text, None)
}

/// Like [`parse_sequence_steps`]; a given `order` replaces the one in the
/// file.
pub fn parse_sequence_steps_as(text: &str, order: Option<Order>) -> Result<Vec<VertexId>, IoError> {
    let (steps, file_order) = match serde_json::from_str(text)? {
        SequenceIn::Bare(s) => (s, Order::Execution),
        SequenceIn::Tagged { steps, order } => (steps, order),
    };
    let order = order.unwrap_or(file_order);
    let mut steps: Vec<VertexId> = steps.into_iter().map(VertexId::from).collect();
    if order == Order::Composition {
        steps.reverse();
    }
    Ok(steps)
}

pub fn parse_sequence(text: &str) -> Result<MutationSequence, IoError> {
    Ok(MutationSequence::new(parse_sequence_steps(text)?)?)
}

pub fn sequence_to_json(seq: &MutationSequence, order: Order) -> serde_json::Value {
    let steps = match order {
        Order::Execution => seq.steps().to_vec(),
        Order::Composition => seq.composition(),
    };
    serde_json::json!({ "steps": steps, "order": order })
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ObliqueIn {
    from: Label,
    to: Label,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct DecompositionIn {
    chains: Vec<Vec<Label>>,
    #[serde(default)]
    oblique: Vec<ObliqueIn>,
}

pub fn parse_decomposition(text: &str) -> Result<QnCandidate, IoError> {
    let raw: DecompositionIn = serde_json::from_str(text)?;
    Ok(QnCandidate::new(raw.chains, raw.oblique.into_iter().map(|o| (o.from, o.to))))
}

pub fn candidate_to_json(c: &QnCandidate) -> serde_json::Value {
    let oblique: Vec<_> = c.oblique.iter().map(|(a, b)| serde_json::json!({ "from": a, "to": b })).collect();
    serde_json::json!({ "chains": c.chains, "oblique": oblique })
}

pub fn decomposition_to_json(qn: &QnDecomposition) -> serde_json::Value {
    candidate_to_json(&qn.candidate())
}

fn dot_id(v: &VertexId) -> String {
    format!("\"{}\"", v.as_str().replace('\\', "\\\\").replace('"', "\\\""))
}

fn write_arrows(out: &mut String, q: &Quiver) {
    for a in q.arrows() {
        let label = if a.mult > 1 { format!(" [label=\"{}\"]", a.mult) } else { String::new() };
        let _ = writeln!(out, "  {} -> {}{};", dot_id(&a.from), dot_id(&a.to), label);
    }
}

/// Graphviz rendering with vertices and arrows in sorted order.
pub fn quiver_to_dot(q: &Quiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for v in q.vertices() {
        let _ = writeln!(out, "  {} [shape=circle];", dot_id(v));
    }
    write_arrows(&mut out, q);
    out.push_str("}\n");
    out
}

/// Frozen vertices are boxes; mutable ones are filled green or red when
/// their color is defined.
pub fn ice_quiver_to_dot(iq: &IceQuiver) -> String {
    let mut out = String::from("digraph quiver {\n");
    for (i, v) in iq.quiver().vertices().iter().enumerate() {
        if iq.is_frozen_index(i) {
            let _ = writeln!(out, "  {} [shape=box];", dot_id(v));
            continue;
        }
        match iq.color_index(i) {
            Ok(c) => {
                let fill = match c {
                    Color::Green => "green",
                    Color::Red => "red",
                };
                let _ = writeln!(out, "  {} [shape=circle, style=filled, fillcolor={fill}];", dot_id(v));
            }
            Err(_) => {
                let _ = writeln!(out, "  {} [shape=circle];", dot_id(v));
            }
        }
    }
    write_arrows(&mut out, iq.quiver());
    out.push_str("}\n");
    out
}
