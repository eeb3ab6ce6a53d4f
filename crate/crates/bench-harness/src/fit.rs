use crate::{BenchError, BenchRow};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogFit {
    pub a: f64,
    pub b: f64,
    pub r2: f64,
}

/// Least squares `depth ~ a log2(n) + b` over the rows.
pub fn fit_log(rows: &[BenchRow]) -> Result<LogFit, BenchError> {
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| (r.n as f64, r.depth as f64)).collect();
    fit_log_points(&pts)
}

pub fn fit_log_points(pts: &[(f64, f64)]) -> Result<LogFit, BenchError> {
    if pts.len() < 3 {
        return Err(BenchError::Degenerate);
    }
    let k = pts.len() as f64;
    let xs: Vec<f64> = pts.iter().map(|p| p.0.log2()).collect();
    let mx = xs.iter().sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    if sxx < 1e-24 {
        return Err(BenchError::Degenerate);
    }
    let sxy: f64 = xs.iter().zip(pts).map(|(x, p)| (x - mx) * (p.1 - my)).sum();
    let a = sxy / sxx;
    let b = my - a * mx;
    let ss_res: f64 = xs.iter().zip(pts).map(|(x, p)| (p.1 - a * x - b).powi(2)).sum();
    let ss_tot: f64 = pts.iter().map(|p| (p.1 - my).powi(2)).sum();
    // a constant series is fit exactly by a = 0
    let r2 = if ss_tot < 1e-24 { 1.0 } else { 1.0 - ss_res / ss_tot };
    Ok(LogFit { a, b, r2 })
}
