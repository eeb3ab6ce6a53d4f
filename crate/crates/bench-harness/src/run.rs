use crate::oracle::check_circuit;
use crate::BenchError;
use circuit_ir::Mat2f;
use rayon::prelude::*;
use std::fmt;
use std::io::Write;
use su2_synth::{baseline_counts, BaselineFamily};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    McxClean,
    McxDirty,
    McmtX,
    McmtSu2,
    ApproxU,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::McxClean, Family::McxDirty, Family::McmtX, Family::McmtSu2, Family::ApproxU];

    pub fn name(self) -> &'static str {
        match self {
            Family::McxClean => "mcx_clean",
            Family::McxDirty => "mcx_dirty",
            Family::McmtX => "mcmt_x",
            Family::McmtSu2 => "mcmt_su2",
            Family::ApproxU => "approx_u",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Family {
    type Err = BenchError;
    fn from_str(s: &str) -> Result<Self, BenchError> {
        Family::ALL.into_iter().find(|f| f.name() == s).ok_or_else(|| BenchError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BenchParams {
    /// Target count for the multi-target families.
    pub m: usize,
    /// Target gate for mcmt_su2 (rescaled into SU(2)) and approx_u.
    pub gate: Mat2f,
    pub epsilon: f64,
    pub verify: bool,
}

impl Default for BenchParams {
    fn default() -> Self {
        BenchParams { m: 1, gate: Mat2f::x(), epsilon: 0.1, verify: false }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRow {
    pub family: Family,
    pub n: usize,
    pub m: usize,
    pub cnot: usize,
    pub depth: usize,
    pub baseline_cnot: Option<f64>,
    pub baseline_depth: Option<f64>,
}

fn row(family: Family, n: usize, p: &BenchParams) -> Result<BenchRow, BenchError> {
    let (circuit, m, base) = match family {
        Family::ApproxU => {
            let s = approx_u2::approx_mcu(n, &p.gate, p.epsilon)?;
            (s.circuit, 1, baseline_counts(BaselineFamily::ApproxBound, n, s.params.n_b))
        }
        Family::McxClean | Family::McxDirty => {
            let c = crate::synthesize(family, n, p)?;
            let bf = if family == Family::McxClean { BaselineFamily::PriorClean } else { BaselineFamily::PriorDirty };
            let depth = baseline_counts(BaselineFamily::FitPrior, n, 1).depth;
            (c, 1, su2_synth::BaselineCounts { depth, ..baseline_counts(bf, n, 1) })
        }
        Family::McmtX | Family::McmtSu2 => {
            (crate::synthesize(family, n, p)?, p.m, baseline_counts(BaselineFamily::LinearSu2, n, p.m))
        }
    };
    if p.verify {
        let r = check_circuit(family, n, p, &circuit)?;
        if !r.passed {
            return Err(BenchError::Verification { family, n, distance: r.distance, tol: r.tol });
        }
    }
    let rep = circuit.report();
    Ok(BenchRow { family, n, m, cnot: rep.cx, depth: rep.depth, baseline_cnot: base.cnot, baseline_depth: base.depth })
}

/// One row per entry of `ns`, in ascending `n`.
pub fn run_family(family: Family, ns: &[usize], p: &BenchParams) -> Result<Vec<BenchRow>, BenchError> {
    let mut ns = ns.to_vec();
    ns.sort_unstable();
    ns.dedup();
    ns.par_iter().map(|&n| row(family, n, p)).collect()
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| format!("{v:.4}")).unwrap_or_default()
}

pub fn write_csv<W: Write>(out: W, rows: &[BenchRow]) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["family", "n", "m", "cnot", "depth", "baseline_cnot", "baseline_depth"])?;
    for r in rows {
        w.write_record([
            r.family.name().to_string(),
            r.n.to_string(),
            r.m.to_string(),
            r.cnot.to_string(),
            r.depth.to_string(),
            opt(r.baseline_cnot),
            opt(r.baseline_depth),
        ])?;
    }
    w.flush()?;
    Ok(())
}
