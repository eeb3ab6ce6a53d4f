use circuit_ir::GateTag;
use dense_sim::{embed, equiv, unitary_of, EquivMode, StateVector, Unitary};
use mcx_synth::{cnx_oracle, mcx_log, rccx, toffoli_ladder, AncillaMode, McxSpec};
use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn spec(n: usize, mode: AncillaMode) -> McxSpec {
    McxSpec::new(n, mode).unwrap()
}

fn reference(n: usize) -> Unitary {
    let qs: Vec<usize> = (0..=n).collect();
    embed(&cnx_oracle(n).unwrap(), &qs, n + 2)
}

#[test]
fn clean_full_unitary_up_to_nine() {
    for n in 1..=9 {
        let c = mcx_log(spec(n, AncillaMode::Clean));
        let u: Unitary = unitary_of(&c).unwrap();
        let r = equiv(&u, &reference(n), &EquivMode::CleanSubspace(vec![n + 1]), 1e-9).unwrap();
        assert!(r.equivalent, "n={n} distance {}", r.distance);
    }
}

#[test]
fn dirty_full_unitary_up_to_nine() {
    for n in 1..=9 {
        let c = mcx_log(spec(n, AncillaMode::Dirty));
        let u: Unitary = unitary_of(&c).unwrap();
        let r = equiv(&u, &reference(n), &EquivMode::TensorIdentity(vec![n + 1]), 1e-9).unwrap();
        assert!(r.equivalent, "n={n} distance {}", r.distance);
    }
}

#[test]
fn small_n_is_exact_and_ancilla_free() {
    for n in 1..=2 {
        let c = mcx_log(spec(n, AncillaMode::Clean));
        assert!(c.gates().iter().all(|g| !g.qubits.contains(&(n + 1))));
        let u: Unitary = unitary_of(&c).unwrap();
        assert!(equiv(&u, &reference(n), &EquivMode::Exact, 1e-12).unwrap().equivalent);
    }
    assert_eq!(mcx_log(spec(1, AncillaMode::Clean)).lower().count(GateTag::Cx), 1);
}

#[test]
fn ccx_oracle_matches_gate() {
    let mut c = circuit_ir::Circuit::new(3);
    c.ccx(0, 1, 2).unwrap();
    let u: Unitary = unitary_of(&c).unwrap();
    assert_eq!(u, cnx_oracle(2).unwrap());
}

fn random_amps(rng: &mut ChaCha8Rng, k: usize) -> Vec<Complex<f64>> {
    let v: Vec<Complex<f64>> =
        (0..1usize << k).map(|_| Complex::new(rng.gen::<f64>() - 0.5, rng.gen::<f64>() - 0.5)).collect();
    let norm = v.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt();
    v.into_iter().map(|a| a / norm).collect()
}

fn product_amps(rng: &mut ChaCha8Rng, k: usize) -> Vec<Complex<f64>> {
    let mut v = vec![Complex::new(1.0, 0.0)];
    for _ in 0..k {
        let q = random_amps(rng, 1);
        // each new factor becomes the most significant qubit
        v = q.iter().flat_map(|b| v.iter().map(move |a| a * b)).collect();
    }
    v
}

/// C^nX on the low n+1 qubits of an (n+2)-qubit state, ancilla untouched.
fn expected(amps: &[Complex<f64>], n: usize) -> Vec<Complex<f64>> {
    let all = (1usize << n) - 1;
    let mut out = amps.to_vec();
    for (i, a) in amps.iter().enumerate() {
        if i & all == all {
            out[i ^ (1 << n)] = *a;
        }
    }
    out
}

fn spot_check(n: usize, mode: AncillaMode, rng: &mut ChaCha8Rng) {
    let c = mcx_log(spec(n, mode));
    for k in 0..70 {
        let sys = if k < 50 { product_amps(rng, n + 1) } else { random_amps(rng, n + 1) };
        let anc = match mode {
            AncillaMode::Clean => 0,
            AncillaMode::Dirty => rng.gen_range(0..2usize),
        };
        let mut full = vec![Complex::new(0.0, 0.0); 1 << (n + 2)];
        for (i, a) in sys.iter().enumerate() {
            full[i | (anc << (n + 1))] = *a;
        }
        let want = expected(&full, n);
        let mut s = StateVector::from_amps(full).unwrap();
        s.apply(&c).unwrap();
        let d = s.amps.iter().zip(&want).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
        assert!(d < 1e-7, "n={n} {mode:?} state {k} distance {d}");
    }
}

#[test]
fn statevector_spot_checks_ten_to_eighteen() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in 10..=18 {
        spot_check(n, AncillaMode::Clean, &mut rng);
        spot_check(n, AncillaMode::Dirty, &mut rng);
    }
}

#[test]
fn counts_match_closed_forms() {
    for n in 3..=256 {
        assert_eq!(mcx_log(spec(n, AncillaMode::Clean)).cx_count(), 6 * n - 6, "clean n={n}");
        assert_eq!(mcx_log(spec(n, AncillaMode::Dirty)).cx_count(), 12 * n - 18, "dirty n={n}");
    }
}

#[test]
fn lowered_count_agrees_with_macro_count() {
    for n in [3, 7, 20] {
        let c = mcx_log(spec(n, AncillaMode::Clean));
        assert_eq!(c.lower().count(GateTag::Cx), c.cx_count());
    }
}

#[test]
fn rccx_magnitudes_follow_ccx() {
    let m: Unitary = unitary_of(&rccx()).unwrap();
    let t = cnx_oracle::<f64>(2).unwrap();
    for i in 0..8 {
        for j in 0..8 {
            assert!((m.get(i, j).norm() - t.get(i, j).norm()).abs() < 1e-12);
        }
    }
    // |110> -> |111>, qubit 0 least significant
    assert!((m.get(0b111, 0b011).norm() - 1.0).abs() < 1e-12);
    let r = equiv(&m, &t, &EquivMode::Diagonal, 1e-12).unwrap();
    assert!(r.distance < 1e-12);
}

#[test]
fn one_block_ladder_is_dressed_rccx() {
    let lad: Unitary = unitary_of(&toffoli_ladder(&[((0, 1), 2)]).unwrap()).unwrap();
    let mut want = circuit_ir::Circuit::new(3);
    want.x(2).unwrap();
    want.ccx(0, 1, 2).unwrap();
    let w: Unitary = unitary_of(&want).unwrap();
    assert!(equiv(&lad, &w, &EquivMode::Diagonal, 1e-12).unwrap().equivalent);
    let mut dressed = circuit_ir::Circuit::new(3);
    dressed.x(2).unwrap();
    dressed.append(&rccx()).unwrap();
    let d: Unitary = unitary_of(&dressed).unwrap();
    assert!(equiv(&lad, &d, &EquivMode::Exact, 1e-12).unwrap().equivalent);
}

#[test]
fn three_block_ladder_matches_dressed_toffolis() {
    let blocks = [((0, 1), 4), ((1, 2), 5), ((2, 3), 6)];
    let lad = toffoli_ladder(&blocks).unwrap();
    assert_eq!(lad.lower().depth(), 7);
    let mut want = circuit_ir::Circuit::new(7);
    for ((a, b), t) in blocks {
        want.x(t).unwrap();
        want.ccx(a, b, t).unwrap();
    }
    let r = equiv(&unitary_of::<f64>(&lad).unwrap(), &unitary_of(&want).unwrap(), &EquivMode::Diagonal, 1e-9).unwrap();
    assert!(r.equivalent);
}

#[test]
fn depth_window_across_doublings() {
    let ns = [16, 32, 64, 128, 256, 512];
    let d: Vec<i64> = ns.iter().map(|&n| mcx_log(spec(n, AncillaMode::Clean)).lower().depth() as i64).collect();
    let steps: Vec<i64> = d.windows(2).map(|w| w[1] - w[0]).collect();
    let spread = steps.iter().max().unwrap() - steps.iter().min().unwrap();
    assert!(spread <= 8, "depth steps across doublings {steps:?} (depths {d:?})");
}

mod relabelled {
    use circuit_ir::{Circuit, Mat2f};
    use dense_sim::{controlled_product, equiv, unitary_of, EquivMode, Unitary};
    use mcx_synth::{append_mcx, AncillaMode};
    use proptest::prelude::*;

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn any_qubit_placement(n in 1usize..7, perm in Just((0..8).collect::<Vec<usize>>()).prop_shuffle(), dirty in any::<bool>()) {
            let q: Vec<usize> = perm.into_iter().filter(|&x| x < n + 2).collect();
            let (controls, target, anc) = (&q[..n], q[n], q[n + 1]);
            let mode = if dirty { AncillaMode::Dirty } else { AncillaMode::Clean };
            let mut c = Circuit::new(n + 2);
            append_mcx(&mut c, controls, target, Some(anc), mode).unwrap();
            let u: Unitary = unitary_of(&c).unwrap();
            let want = controlled_product(n + 2, controls, &[(target, Mat2f::x())]);
            let m = if dirty { EquivMode::TensorIdentity(vec![anc]) } else { EquivMode::CleanSubspace(vec![anc]) };
            prop_assert!(equiv(&u, &want, &m, 1e-9).unwrap().equivalent);
        }
    }
}
