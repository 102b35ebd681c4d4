use msd_core::driving::{build_a0, build_a1, build_h1, h0_matrix, h1_eigensystem, interaction_picture};
use msd_core::dynamics::TimeGrid;
use msd_core::linalg::{ComplexMatrix, I};
use msd_core::pulse::{transfer_waveform, TransferParams};

fn off_diagonal(m: &ComplexMatrix) -> f64 {
    let d = m.dim();
    let mut worst: f64 = 0.0;
    for i in 0..d {
        for j in 0..d {
            if i != j {
                worst = worst.max(m[(i, j)].norm());
            }
        }
    }
    worst
}

#[test]
fn frames_diagonalise_and_first_iteration_matches_finite_differences() {
    let w = transfer_waveform(&TransferParams::standard()).unwrap();
    let grid = TimeGrid::new(-0.2, 1.2, 14000).unwrap();
    let a0_at = |t: f64| build_a0(&w.derived(t).unwrap());
    let dt = 1e-4;
    let (mut d0, mut d1, mut fd) = (0.0f64, 0.0f64, 0.0f64);
    for t in grid.times() {
        let a = w.derived(t).unwrap();
        let a0 = build_a0(&a);
        d0 = d0.max(off_diagonal(&interaction_picture(
            &a0,
            &h0_matrix(&a),
            &ComplexMatrix::zeros(3),
        )));

        let a0_dot = (&a0_at(t + dt) - &a0_at(t - dt)).scale_real(0.5 / dt);
        let k0 = (&a0_dot * &a0.adjoint()).scale(I);
        let h1 = build_h1(&a);
        fd = fd.max(interaction_picture(&a0, &h0_matrix(&a), &k0).max_abs_diff(&h1));

        let a1 = build_a1(&h1_eigensystem(&a)).unwrap();
        d1 = d1.max(off_diagonal(&(&(&a1.adjoint() * &h1) * &a1)));
    }
    assert!(d0 < 1e-10, "A0†H0A0 off-diagonal {d0:e}");
    assert!(fd < 1e-6, "H1 vs finite differences {fd:e}");
    assert!(d1 < 1e-10, "A1†H1A1 off-diagonal {d1:e}");
}
