use crate::su2::{align_to_yz, find_conjugating_gate, Su2Gate};
use crate::Su2Error;
use circuit_ir::{AncillaRole, Circuit, Mat2f};
use mcx_synth::{append_mcx, AncillaMode};

/// Copy tree from `targets[0]`: layer p holds at most 2^p CX.
pub fn fanout_layers(targets: &[usize]) -> Vec<Vec<(usize, usize)>> {
    let mut layers = Vec::new();
    let mut span = 1;
    while span < targets.len() {
        let layer: Vec<(usize, usize)> =
            (0..span).filter(|i| i + span < targets.len()).map(|i| (targets[i], targets[i + span])).collect();
        layers.push(layer);
        span *= 2;
    }
    layers
}

/// Wraps `core`, which flips `targets[0]`, so that every target is flipped instead.
fn fanned(
    c: &mut Circuit,
    targets: &[usize],
    core: impl FnOnce(&mut Circuit) -> Result<(), Su2Error>,
) -> Result<(), Su2Error> {
    let layers = fanout_layers(targets);
    for layer in layers.iter().rev() {
        for &(a, b) in layer {
            c.cx(a, b)?;
        }
    }
    core(c)?;
    for layer in &layers {
        for &(a, b) in layer {
            c.cx(a, b)?;
        }
    }
    Ok(())
}

/// C^n(X^{(x)m}) on `controls -> targets`; `ancilla` is needed once there are three or more controls.
pub fn append_mcmt_x(
    c: &mut Circuit,
    controls: &[usize],
    targets: &[usize],
    ancilla: Option<usize>,
    mode: AncillaMode,
) -> Result<(), Su2Error> {
    if targets.is_empty() {
        return Err(Su2Error::NoTargets);
    }
    fanned(c, targets, |c| Ok(append_mcx(c, controls, targets[0], ancilla, mode)?))
}

/// Layout: controls `[0..n)`, targets `[n..n+m)`, clean ancilla `n + m`.
pub fn mcmt_x(n: usize, m: usize) -> Result<Circuit, Su2Error> {
    if n == 0 {
        return Err(Su2Error::NoControls);
    }
    let mut c = Circuit::new(n + m + 1);
    c.mark_ancilla(n + m, AncillaRole::Clean)?;
    let controls: Vec<usize> = (0..n).collect();
    let targets: Vec<usize> = (n..n + m).collect();
    append_mcmt_x(&mut c, &controls, &targets, Some(n + m), AncillaMode::Clean)?;
    Ok(c)
}

/// Layout: controls `[0..n)`, targets `[n..n+m)`, one gate per target.
#[derive(Debug, Clone, PartialEq)]
pub struct McmtSpec {
    pub n: usize,
    pub gates: Vec<Su2Gate>,
}

impl McmtSpec {
    pub fn new(n: usize, gates: Vec<Su2Gate>) -> Result<Self, Su2Error> {
        if n == 0 {
            return Err(Su2Error::NoControls);
        }
        if gates.is_empty() {
            return Err(Su2Error::NoTargets);
        }
        Ok(McmtSpec { n, gates })
    }

    pub fn m(&self) -> usize {
        self.gates.len()
    }
}

/// Appends C^k(W_1 (x) ... (x) W_m) with no ancilla: the last control serves as the
/// conditionally clean qubit for the (k-1)-controlled X stages.
pub fn append_mcmt_su2(
    c: &mut Circuit,
    controls: &[usize],
    targets: &[usize],
    gates: &[Su2Gate],
) -> Result<(), Su2Error> {
    if controls.is_empty() {
        return Err(Su2Error::NoControls);
    }
    if targets.is_empty() || targets.len() != gates.len() {
        return Err(Su2Error::NoTargets);
    }
    if controls.len() == 1 {
        for (&t, g) in targets.iter().zip(gates) {
            c.cu2(g.matrix(), controls[0], t)?;
        }
        return Ok(());
    }
    let (k1, k2) = (&controls[..controls.len() - 1], controls[controls.len() - 1]);
    let mut frames = Vec::with_capacity(gates.len());
    for g in gates {
        let (s, w) = align_to_yz(g);
        frames.push((s, find_conjugating_gate(&w)?.matrix()));
    }
    let needs_anc = k1.len() >= 3;
    let k1_stage = |c: &mut Circuit| -> Result<(), Su2Error> {
        if needs_anc {
            c.x(k2)?;
        }
        append_mcmt_x(c, k1, targets, Some(k2), AncillaMode::Clean)?;
        if needs_anc {
            c.x(k2)?;
        }
        Ok(())
    };
    let k2_stage = |c: &mut Circuit| fanned(c, targets, |c| Ok(c.cx(k2, targets[0])?));
    let layer = |c: &mut Circuit, f: &dyn Fn(&Mat2f, &Mat2f) -> Mat2f| -> Result<(), Su2Error> {
        for (&t, (s, a)) in targets.iter().zip(&frames) {
            let m = f(s, a);
            if m.max_diff(&Mat2f::identity()) > 1e-15 {
                c.u2(m, t)?;
            }
        }
        Ok(())
    };
    layer(c, &|s, a| a.adjoint() * s.adjoint())?;
    k1_stage(c)?;
    layer(c, &|_, a| *a)?;
    k2_stage(c)?;
    layer(c, &|_, a| a.adjoint())?;
    k1_stage(c)?;
    layer(c, &|_, a| *a)?;
    k2_stage(c)?;
    layer(c, &|s, _| *s)?;
    Ok(())
}

pub fn mcmt_su2(spec: &McmtSpec) -> Result<Circuit, Su2Error> {
    let (n, m) = (spec.n, spec.m());
    let mut c = Circuit::new(n + m);
    let controls: Vec<usize> = (0..n).collect();
    let targets: Vec<usize> = (n..n + m).collect();
    append_mcmt_su2(&mut c, &controls, &targets, &spec.gates)?;
    Ok(c)
}
