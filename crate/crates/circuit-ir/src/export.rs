use crate::circuit::{zyz, Circuit};
use crate::error::IrError;
use crate::gate::{Gate, GateKind, GateTag, Mat2f};
use num_complex::Complex;
use serde::{Deserialize, Serialize};
use std::fmt::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Qasm2,
    Qasm3,
    Json,
}

/// Formats `x` with 17 significant digits, positional when the exponent is modest.
pub fn fmt_angle(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    let sci = format!("{:.16e}", x);
    let (mant, exp) = sci.split_once('e').unwrap();
    let exp: i32 = exp.parse().unwrap();
    if !(-5..=16).contains(&exp) {
        return sci;
    }
    let neg = mant.starts_with('-');
    let digits: String = mant.chars().filter(|c| c.is_ascii_digit()).collect();
    let point = exp + 1;
    let mut s = if point <= 0 {
        format!("0.{}{}", "0".repeat((-point) as usize), digits)
    } else if point as usize >= digits.len() {
        format!("{}{}", digits, "0".repeat(point as usize - digits.len()))
    } else {
        format!("{}.{}", &digits[..point as usize], &digits[point as usize..])
    };
    if s.contains('.') {
        s = s.trim_end_matches('0').trim_end_matches('.').to_string();
    }
    if neg {
        s.insert(0, '-');
    }
    s
}

fn u3_params(m: &Mat2f) -> (f64, f64, f64) {
    let alpha = m.det().arg() / 2.0;
    let v = m.scale(Complex::from_polar(1.0, -alpha));
    let (beta, gamma, delta) = zyz(&v);
    (gamma, beta, delta)
}

fn qasm(c: &Circuit, v3: bool) -> Result<String, IrError> {
    let format = if v3 { "qasm3" } else { "qasm2" };
    let mut s = String::new();
    if v3 {
        let _ = writeln!(s, "OPENQASM 3.0;\ninclude \"stdgates.inc\";\nqubit[{}] q;", c.num_qubits());
    } else {
        let _ = writeln!(s, "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[{}];", c.num_qubits());
    }
    for g in c.gates() {
        let qs: Vec<String> = g.qubits.iter().map(|q| format!("q[{q}]")).collect();
        let qs = qs.join(",");
        let head = match &g.kind {
            GateKind::Rx(t) | GateKind::Ry(t) | GateKind::Rz(t) => format!("{}({})", g.kind.name(), fmt_angle(*t)),
            GateKind::U2(m) => {
                let (th, ph, la) = u3_params(m);
                let name = if v3 { "U" } else { "u3" };
                format!("{name}({},{},{})", fmt_angle(th), fmt_angle(ph), fmt_angle(la))
            }
            GateKind::Rccx | GateKind::Cu2(_) => return Err(IrError::Unsupported { kind: g.kind.name(), format }),
            k => k.name().to_string(),
        };
        let _ = writeln!(s, "{head} {qs};");
    }
    Ok(s)
}

#[derive(Serialize, Deserialize)]
struct JsonCircuit {
    n: usize,
    gates: Vec<JsonGate>,
}

#[derive(Serialize, Deserialize)]
struct JsonGate {
    kind: String,
    qubits: Vec<usize>,
    #[serde(default)]
    params: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    matrix: Option<Vec<[f64; 2]>>,
}

pub fn matrix_to_json(m: &Mat2f) -> Vec<[f64; 2]> {
    m.m.iter().flatten().map(|z| [z.re, z.im]).collect()
}

pub fn matrix_from_json(v: &[[f64; 2]]) -> Result<Mat2f, IrError> {
    if v.len() != 4 {
        return Err(IrError::Parse(format!("matrix needs 4 entries, got {}", v.len())));
    }
    let z = |i: usize| Complex::new(v[i][0], v[i][1]);
    let m = Mat2f::new(z(0), z(1), z(2), z(3));
    if !m.is_unitary(1e-10) {
        return Err(IrError::NotUnitary);
    }
    Ok(m)
}

fn to_json(c: &Circuit) -> String {
    let gates = c
        .gates()
        .iter()
        .map(|g| {
            let (params, matrix) = match &g.kind {
                GateKind::Rx(t) | GateKind::Ry(t) | GateKind::Rz(t) => (vec![*t], None),
                GateKind::U2(m) | GateKind::Cu2(m) => (vec![], Some(matrix_to_json(m))),
                _ => (vec![], None),
            };
            JsonGate { kind: g.kind.name().into(), qubits: g.qubits.clone(), params, matrix }
        })
        .collect();
    serde_json::to_string(&JsonCircuit { n: c.num_qubits(), gates }).unwrap()
}

pub fn parse_json(text: &str) -> Result<Circuit, IrError> {
    let jc: JsonCircuit = serde_json::from_str(text).map_err(|e| IrError::Parse(e.to_string()))?;
    let mut c = Circuit::new(jc.n);
    for jg in jc.gates {
        let angle = || jg.params.first().copied().ok_or_else(|| IrError::Parse(format!("{} needs an angle", jg.kind)));
        let mat = || matrix_from_json(jg.matrix.as_deref().unwrap_or(&[]));
        let kind = match jg.kind.as_str() {
            "x" => GateKind::X,
            "h" => GateKind::H,
            "t" => GateKind::T,
            "tdg" => GateKind::Tdg,
            "rx" => GateKind::Rx(angle()?),
            "ry" => GateKind::Ry(angle()?),
            "rz" => GateKind::Rz(angle()?),
            "u2" => GateKind::U2(mat()?),
            "cx" => GateKind::Cx,
            "ccx" => GateKind::Ccx,
            "rccx" => GateKind::Rccx,
            "cu2" => GateKind::Cu2(mat()?),
            other => return Err(IrError::Parse(format!("unknown gate kind {other:?}"))),
        };
        c.push_gate(Gate::new(kind, jg.qubits)?)?;
    }
    Ok(c)
}

pub fn export(c: &Circuit, format: Format) -> Result<String, IrError> {
    match format {
        Format::Qasm2 => qasm(c, false),
        Format::Qasm3 => qasm(c, true),
        Format::Json => Ok(to_json(c)),
    }
}

/// Tag count summary, handy for reports.
pub fn tag_counts(c: &Circuit) -> Vec<(GateTag, usize)> {
    let mut out: Vec<(GateTag, usize)> = Vec::new();
    for g in c.gates() {
        let t = g.kind.tag();
        match out.iter_mut().find(|(k, _)| *k == t) {
            Some((_, n)) => *n += 1,
            None => out.push((t, 1)),
        }
    }
    out
}
