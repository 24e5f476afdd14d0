//! JSON form of a pulse schedule.
//!
//! ```json
//! {"label": "h", "instructions": [
//!   {"kind": "local_rotation", "qubit": 0, "axis": "z", "angle": "-pi/2"},
//!   {"kind": "local_unitary", "qubit": 1, "gate": "h"},
//!   {"kind": "evolve", "duration": "pi/4"},
//!   {"kind": "measure_z", "qubit": 0},
//!   {"kind": "ideal_pauli_exp", "factors": [[0, "x"], [1, "x"]], "angle": "pi/64"}
//! ]}
//! ```
//!
//! Angles and durations keep their exact π-multiple form; any other float is
//! written as a hex float, so a round trip is bit exact. Arbitrary local
//! unitaries are a row-major 2×2 `matrix` of `[re, im]` pairs.

use serde::{Deserialize, Serialize};

use super::{Instruction, LocalGate, PulseSchedule, Quantity};
use crate::statevector::{Axis, Gate2};
use crate::{Error, Result, C64};

#[derive(Serialize, Deserialize)]
struct Document {
    #[serde(default)]
    label: String,
    instructions: Vec<Entry>,
}

#[derive(Serialize, Deserialize, Default)]
#[serde(deny_unknown_fields)]
struct Entry {
    kind: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    qubit: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    axis: Option<Axis>,
    #[serde(skip_serializing_if = "Option::is_none")]
    angle: Option<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    duration: Option<Quantity>,
    #[serde(skip_serializing_if = "Option::is_none")]
    gate: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    matrix: Option<[[[Quantity; 2]; 2]; 2]>,
    #[serde(skip_serializing_if = "Option::is_none")]
    factors: Option<Vec<(usize, Axis)>>,
}

fn entry(ins: &Instruction) -> Entry {
    match ins {
        Instruction::LocalRotation { qubit, axis, angle } => Entry {
            kind: "local_rotation".into(),
            qubit: Some(*qubit),
            axis: Some(*axis),
            angle: Some(*angle),
            ..Entry::default()
        },
        Instruction::LocalUnitary { qubit, gate } => {
            let mut e = Entry { kind: "local_unitary".into(), qubit: Some(*qubit), ..Entry::default() };
            match gate.name() {
                Some(name) => e.gate = Some(name.into()),
                None => {
                    let m = gate.matrix();
                    let c = |r: usize, k: usize| [Quantity::Float(m[(r, k)].re), Quantity::Float(m[(r, k)].im)];
                    e.matrix = Some([[c(0, 0), c(0, 1)], [c(1, 0), c(1, 1)]]);
                }
            }
            e
        }
        Instruction::Evolve { duration } => {
            Entry { kind: "evolve".into(), duration: Some(*duration), ..Entry::default() }
        }
        Instruction::MeasureZ { qubit } => Entry { kind: "measure_z".into(), qubit: Some(*qubit), ..Entry::default() },
        Instruction::IdealPauliExp { factors, angle } => Entry {
            kind: "ideal_pauli_exp".into(),
            factors: Some(factors.clone()),
            angle: Some(*angle),
            ..Entry::default()
        },
    }
}

fn instruction(e: Entry) -> std::result::Result<Instruction, String> {
    fn need<T>(v: Option<T>, field: &str, kind: &str) -> std::result::Result<T, String> {
        v.ok_or_else(|| format!("`{kind}` needs field `{field}`"))
    }
    let k = e.kind.as_str();
    Ok(match k {
        "local_rotation" => Instruction::LocalRotation {
            qubit: need(e.qubit, "qubit", k)?,
            axis: need(e.axis, "axis", k)?,
            angle: need(e.angle, "angle", k)?,
        },
        "local_unitary" => {
            let qubit = need(e.qubit, "qubit", k)?;
            let gate = match (e.gate, e.matrix) {
                (Some(_), Some(_)) => return Err("give either `gate` or `matrix`, not both".into()),
                (Some(name), None) => match name.to_ascii_lowercase().as_str() {
                    "h" => LocalGate::H,
                    "x" => LocalGate::X,
                    "y" => LocalGate::Y,
                    "z" => LocalGate::Z,
                    _ => return Err(format!("unknown gate `{name}`")),
                },
                (None, Some(m)) => {
                    let c = |r: usize, k: usize| C64::new(m[r][k][0].value(), m[r][k][1].value());
                    LocalGate::Matrix(Gate2::new(c(0, 0), c(0, 1), c(1, 0), c(1, 1)))
                }
                (None, None) => return Err("`local_unitary` needs `gate` or `matrix`".into()),
            };
            Instruction::LocalUnitary { qubit, gate }
        }
        "evolve" => Instruction::Evolve { duration: need(e.duration, "duration", k)? },
        "measure_z" => Instruction::MeasureZ { qubit: need(e.qubit, "qubit", k)? },
        "ideal_pauli_exp" => {
            Instruction::IdealPauliExp { factors: need(e.factors, "factors", k)?, angle: need(e.angle, "angle", k)? }
        }
        other => return Err(format!("unknown instruction kind `{other}`")),
    })
}

/// Pretty-printed JSON document.
pub fn serialize(sched: &PulseSchedule) -> String {
    let doc = Document { label: sched.label.clone(), instructions: sched.instructions.iter().map(entry).collect() };
    serde_json::to_string_pretty(&doc).expect("schedule documents always serialize")
}

/// Parses and validates a document. Errors carry the JSON position or the
/// offending instruction index.
pub fn deserialize(text: &str) -> Result<PulseSchedule> {
    let doc: Document = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let mut sched = PulseSchedule::new(doc.label);
    for (i, e) in doc.instructions.into_iter().enumerate() {
        let ins = instruction(e).map_err(|m| Error::Parse(format!("instructions[{i}]: {m}")))?;
        ins.validate().map_err(|err| Error::Parse(format!("instructions[{i}]: {err}")))?;
        sched.push(ins);
    }
    Ok(sched)
}
