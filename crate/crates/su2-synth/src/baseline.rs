use crate::Su2Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaselineFamily {
    LinearSu2,
    PriorClean,
    PriorDirty,
    FitOurs,
    FitPrior,
    /// CX bound of the approximate multi-controlled U(2) construction.
    ApproxBound,
}

impl std::str::FromStr for BaselineFamily {
    type Err = Su2Error;
    fn from_str(s: &str) -> Result<Self, Su2Error> {
        Ok(match s {
            "silva_linear_su2" => BaselineFamily::LinearSu2,
            "khattar_clean" => BaselineFamily::PriorClean,
            "khattar_dirty" => BaselineFamily::PriorDirty,
            "fit_ours" => BaselineFamily::FitOurs,
            "fit_khattar" => BaselineFamily::FitPrior,
            "approx_bound" => BaselineFamily::ApproxBound,
            other => return Err(Su2Error::UnknownFamily(other.to_string())),
        })
    }
}

/// Published gate counts and depth fits; `None` where a family has no such figure.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BaselineCounts {
    pub cnot: Option<f64>,
    pub depth: Option<f64>,
}

/// `m` doubles as `n_b` for [`BaselineFamily::ApproxBound`].
pub fn baseline_counts(family: BaselineFamily, n: usize, m: usize) -> BaselineCounts {
    let (n, m) = (n as f64, m as f64);
    let lg = n.log2();
    match family {
        BaselineFamily::LinearSu2 => {
            BaselineCounts { cnot: Some(16.0 * n + 8.0 * m - 32.0), depth: Some(32.0 * n + 8.0 * m - 52.0) }
        }
        BaselineFamily::PriorClean => BaselineCounts { cnot: Some(8.0 * n - 12.0), depth: None },
        BaselineFamily::PriorDirty => BaselineCounts { cnot: Some(16.0 * n - 32.0), depth: None },
        BaselineFamily::FitOurs => BaselineCounts { cnot: None, depth: Some(25.5903 * lg - 12.1237) },
        BaselineFamily::FitPrior => BaselineCounts { cnot: None, depth: Some(29.3675 * lg - 28.2752) },
        BaselineFamily::ApproxBound => {
            BaselineCounts { cnot: Some(4.0 * (m - 1.0).powi(2) + 24.0 * n - 8.0 * m - 4.0), depth: None }
        }
    }
}
