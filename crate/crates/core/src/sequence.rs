//! Mutation sequences, traces, and the green / maximal green verdicts.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::quiver::{frame, Color, IceQuiver, Quiver, QuiverError, VertexId};

/// A sequence of mutations stored in execution order: `steps[0]` is applied
/// first. The written composition `μ_k ∘ ⋯ ∘ μ_1` corresponds to
/// `from_composition([k, …, 1])`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MutationSequence {
    steps: Vec<VertexId>,
}

impl MutationSequence {
    pub fn new<I>(steps: I) -> Result<MutationSequence, QuiverError>
    where
        I: IntoIterator,
        I::Item: Into<VertexId>,
    {
        let steps: Vec<VertexId> = steps.into_iter().map(Into::into).collect();
        if let Some(index) = first_repeat(&steps) {
            return Err(QuiverError::ConsecutiveRepeat { index, vertex: steps[index].clone() });
        }
        Ok(MutationSequence { steps })
    }

    /// Reads a sequence written as a composition of mutations, rightmost
    /// factor first.
    pub fn from_composition<I>(factors: I) -> Result<MutationSequence, QuiverError>
    where
        I: IntoIterator,
        I::Item: Into<VertexId>,
    {
        let mut steps: Vec<VertexId> = factors.into_iter().map(Into::into).collect();
        steps.reverse();
        MutationSequence::new(steps)
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<VertexId>) -> MutationSequence {
        debug_assert!(first_repeat(&steps).is_none());
        MutationSequence { steps }
    }

    pub fn steps(&self) -> &[VertexId] {
        &self.steps
    }

    pub fn into_steps(self) -> Vec<VertexId> {
        self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Steps in composition order (last executed first).
    pub fn composition(&self) -> Vec<VertexId> {
        self.steps.iter().rev().cloned().collect()
    }

    /// Keeps only the steps whose vertex lies in `keep`.
    pub fn restrict<'a, I>(&self, keep: I) -> Result<MutationSequence, QuiverError>
    where
        I: IntoIterator<Item = &'a VertexId>,
    {
        let keep: BTreeSet<&VertexId> = keep.into_iter().collect();
        let steps: Vec<VertexId> = self.steps.iter().filter(|v| keep.contains(v)).cloned().collect();
        if let Some(index) = first_repeat(&steps) {
            return Err(QuiverError::ConsecutiveRepeatAfterRestriction {
                index,
                vertex: steps[index].clone(),
            });
        }
        Ok(MutationSequence { steps })
    }

    pub fn prefix(&self, len: usize) -> MutationSequence {
        MutationSequence { steps: self.steps[..len.min(self.steps.len())].to_vec() }
    }
}

fn first_repeat(steps: &[VertexId]) -> Option<usize> {
    steps.windows(2).position(|w| w[0] == w[1])
}

/// Whether [`apply_sequence`] insists on green vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Policy {
    Unchecked,
    RequireGreen,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    pub vertex: VertexId,
    /// `None` when the vertex had no well-defined color before the step.
    pub color_before: Option<Color>,
    pub after: IceQuiver,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub initial: IceQuiver,
    pub records: Vec<StepRecord>,
}

impl Trace {
    pub fn final_state(&self) -> &IceQuiver {
        self.records.last().map_or(&self.initial, |r| &r.after)
    }

    /// Colors of the mutable vertices at the end of the run.
    pub fn final_colors(&self) -> Result<Vec<(VertexId, Color)>, QuiverError> {
        self.final_state().colors()
    }
}

/// Executes `seq` on `iq` and records every intermediate state.
pub fn apply_sequence(iq: &IceQuiver, seq: &MutationSequence, policy: Policy) -> Result<Trace, QuiverError> {
    let mut records: Vec<StepRecord> = Vec::with_capacity(seq.len());
    let mut state = iq.clone();
    for (index, v) in seq.steps().iter().enumerate() {
        let color_before = state.color(v).ok();
        if policy == Policy::RequireGreen && color_before != Some(Color::Green) {
            // Frozen or unknown vertices report their own error first.
            state.color(v).map_err(|e| match e {
                QuiverError::NotSignCoherent(_) | QuiverError::ZeroRow(_) => {
                    QuiverError::NotGreenAtStep { index, vertex: v.clone() }
                }
                QuiverError::FrozenVertexColor(v) => QuiverError::FrozenVertexMutation(v),
                other => other,
            })?;
            return Err(QuiverError::NotGreenAtStep { index, vertex: v.clone() });
        }
        state = state.mutate(v)?;
        records.push(StepRecord { vertex: v.clone(), color_before, after: state.clone() });
    }
    Ok(Trace { initial: iq.clone(), records })
}

/// Why a sequence failed to be a (maximal) green sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    /// The same vertex appears twice in a row.
    ConsecutiveRepeat { index: usize, vertex: VertexId },
    /// The step names a vertex that is not in the quiver.
    UnknownVertex { index: usize, vertex: VertexId },
    /// The vertex at this step was red (or had no color).
    NotGreen { index: usize, vertex: VertexId },
    /// The run finished with these vertices still green.
    StillGreen { vertices: Vec<VertexId> },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::ConsecutiveRepeat { index, vertex } => {
                write!(f, "steps {index} and {} both mutate {vertex}", index + 1)
            }
            Violation::UnknownVertex { index, vertex } => write!(f, "step {index}: unknown vertex {vertex}"),
            Violation::NotGreen { index, vertex } => write!(f, "step {index}: vertex {vertex} is not green"),
            Violation::StillGreen { vertices } => {
                let names: Vec<&str> = vertices.iter().map(VertexId::as_str).collect();
                write!(f, "vertex still green at the end: {}", names.join(", "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub is_green: bool,
    pub is_maximal: bool,
    pub violation: Option<Violation>,
}

impl Verdict {
    fn failed(v: Violation) -> Verdict {
        Verdict { is_green: false, is_maximal: false, violation: Some(v) }
    }
}

/// Runs `steps` from the framed quiver of `q`, folding every failure into
/// the verdict.
pub fn verdict(q: &Quiver, steps: &[VertexId]) -> Verdict {
    if let Some(index) = first_repeat(steps) {
        return Verdict::failed(Violation::ConsecutiveRepeat { index, vertex: steps[index].clone() });
    }
    let mut state = frame(q);
    for (index, v) in steps.iter().enumerate() {
        if !q.contains(v) {
            return Verdict::failed(Violation::UnknownVertex { index, vertex: v.clone() });
        }
        // Frozen labels interleave with the originals, so indices differ.
        let k = state.quiver().index_of(v).expect("vertex of q is in its framing");
        if state.color_index(k) != Ok(Color::Green) {
            return Verdict::failed(Violation::NotGreen { index, vertex: v.clone() });
        }
        state = state.mutate_index(k).expect("mutable vertex");
    }
    let still_green: Vec<VertexId> = state
        .colors()
        .map(|cs| cs.into_iter().filter(|(_, c)| *c == Color::Green).map(|(v, _)| v).collect())
        .unwrap_or_default();
    if still_green.is_empty() {
        Verdict { is_green: true, is_maximal: true, violation: None }
    } else {
        Verdict { is_green: true, is_maximal: false, violation: Some(Violation::StillGreen { vertices: still_green }) }
    }
}

/// True when every step mutates a green vertex of the running state,
/// starting from `frame(q)`.
pub fn is_green_sequence(q: &Quiver, steps: &[VertexId]) -> bool {
    verdict(q, steps).is_green
}

/// A green sequence after which every mutable vertex is red.
pub fn is_maximal_green_sequence(q: &Quiver, steps: &[VertexId]) -> bool {
    verdict(q, steps).is_maximal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::Arrow;

    fn a2() -> Quiver {
        Quiver::new(["1", "2"], [Arrow::new("2", "1", 1)]).unwrap()
    }

    fn ids(xs: &[&str]) -> Vec<VertexId> {
        xs.iter().map(|&s| s.into()).collect()
    }

    #[test]
    fn sequence_construction() {
        assert!(matches!(
            MutationSequence::new(["1", "1"]),
            Err(QuiverError::ConsecutiveRepeat { index: 0, .. })
        ));
        let s = MutationSequence::from_composition(["3", "2", "1"]).unwrap();
        assert_eq!(s.steps(), ids(&["1", "2", "3"]).as_slice());
        assert_eq!(s.composition(), ids(&["3", "2", "1"]));
    }

    #[test]
    fn restrict_examples() {
        let s = MutationSequence::new(["1", "2", "1", "3"]).unwrap();
        assert_eq!(s.restrict(&ids(&["1", "2", "3"])).unwrap(), s);
        assert!(s.restrict(&[]).unwrap().is_empty());
        assert!(matches!(
            s.restrict(&ids(&["1", "3"])),
            Err(QuiverError::ConsecutiveRepeatAfterRestriction { index: 0, .. })
        ));
    }

    #[test]
    fn apply_empty_and_two_steps() {
        let f = frame(&a2());
        let t = apply_sequence(&f, &MutationSequence::default(), Policy::RequireGreen).unwrap();
        assert!(t.records.is_empty());
        assert_eq!(t.final_state(), &f);

        let t = apply_sequence(&f, &MutationSequence::new(["2", "1"]).unwrap(), Policy::RequireGreen).unwrap();
        assert_eq!(t.records.len(), 2);
        assert!(t.final_colors().unwrap().iter().all(|(_, c)| *c == Color::Red));
    }

    #[test]
    fn apply_rejects_red_step() {
        let f = frame(&a2());
        let s = MutationSequence::new(["1", "2", "1", "2"]).unwrap();
        assert_eq!(
            apply_sequence(&f, &s, Policy::RequireGreen),
            Err(QuiverError::NotGreenAtStep { index: 3, vertex: "2".into() })
        );
        assert!(apply_sequence(&f, &s, Policy::Unchecked).is_ok());
        let s = MutationSequence::new(["1'"]).unwrap();
        assert_eq!(
            apply_sequence(&f, &s, Policy::Unchecked),
            Err(QuiverError::FrozenVertexMutation("1'".into()))
        );
        assert_eq!(
            apply_sequence(&f, &s, Policy::RequireGreen),
            Err(QuiverError::FrozenVertexMutation("1'".into()))
        );
    }

    #[test]
    fn verdicts_on_a2() {
        let q = a2();
        assert!(is_green_sequence(&q, &ids(&["1"])));
        assert!(!is_green_sequence(&q, &ids(&["1", "1"])));
        assert!(is_maximal_green_sequence(&q, &ids(&["1", "2", "1"])));
        assert!(is_maximal_green_sequence(&q, &ids(&["2", "1"])));
        let v = verdict(&q, &ids(&["1"]));
        assert!(v.is_green && !v.is_maximal);
        assert_eq!(v.violation, Some(Violation::StillGreen { vertices: ids(&["2"]) }));
        assert!(matches!(verdict(&q, &ids(&["9"])).violation, Some(Violation::UnknownVertex { .. })));
        assert!(matches!(verdict(&q, &ids(&["1'"])).violation, Some(Violation::UnknownVertex { .. })));
    }
}
