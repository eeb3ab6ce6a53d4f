use circuit_ir::{matrix_from_json, Mat2f};
use std::f64::consts::PI;

/// `x`, `y`, `z`, `s`, `t`, `h`, `rx(a)`, `ry(a)`, `rz(a)`, or a JSON list of four `[re, im]` entries.
pub fn parse_gate(s: &str) -> Result<Mat2f, String> {
    let s = s.trim();
    if s.starts_with('[') {
        let v: Vec<[f64; 2]> = serde_json::from_str(s).map_err(|e| format!("bad matrix JSON: {e}"))?;
        return matrix_from_json(&v).map_err(|e| e.to_string());
    }
    let lower = s.to_ascii_lowercase();
    match lower.as_str() {
        "x" => return Ok(Mat2f::x()),
        "y" => return Ok(Mat2f::y()),
        "z" => return Ok(Mat2f::z()),
        "s" => return Ok(Mat2f::s()),
        "t" => return Ok(Mat2f::t()),
        "h" => return Ok(Mat2f::h()),
        _ => {}
    }
    let (name, rest) = lower.split_at(lower.find('(').ok_or_else(|| format!("unknown gate `{s}`"))?);
    let arg = rest
        .strip_prefix('(')
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| format!("unbalanced parentheses in `{s}`"))?;
    let a = parse_angle(arg)?;
    match name {
        "rx" => Ok(Mat2f::rx(a)),
        "ry" => Ok(Mat2f::ry(a)),
        "rz" => Ok(Mat2f::rz(a)),
        _ => Err(format!("unknown gate `{s}`")),
    }
}

/// Products and quotients of numbers and `pi`, with an optional leading minus: `-3pi/4`, `0.25*pi`.
pub fn parse_angle(s: &str) -> Result<f64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let (neg, body) = match t.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, t.as_str()),
    };
    if body.is_empty() {
        return Err(format!("empty angle `{s}`"));
    }
    let mut val = 1.0;
    let mut op = '*';
    let mut start = 0;
    for (i, c) in body.char_indices().chain(std::iter::once((body.len(), '*'))) {
        if c == '*' || c == '/' {
            let f = factor(&body[start..i]).ok_or_else(|| format!("bad angle `{s}`"))?;
            if op == '*' {
                val *= f
            } else {
                val /= f
            }
            op = c;
            start = i + 1;
        }
    }
    if !val.is_finite() {
        return Err(format!("angle `{s}` is not finite"));
    }
    Ok(if neg { -val } else { val })
}

fn factor(f: &str) -> Option<f64> {
    match f.strip_suffix("pi") {
        Some("") => Some(PI),
        Some(k) => k.parse::<f64>().ok().map(|k| k * PI),
        None => f.parse().ok(),
    }
}
