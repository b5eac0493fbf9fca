use csrbf::gas::{GasProblem, GasSolution};
use csrbf::interpolation::{build_matrix, CenterSet, Interpolant};
use csrbf::kernels::{eval_phi, eval_phi_prime, KernelFamily, ScaledKernel};
use csrbf::matrix::{condition_number_2, lu_solve, DenseMatrix};
use proptest::prelude::*;

fn family() -> impl Strategy<Value = KernelFamily> {
    proptest::sample::select(KernelFamily::all())
}

fn spd_family() -> impl Strategy<Value = KernelFamily> {
    proptest::sample::select(
        KernelFamily::all()
            .into_iter()
            .filter(|f| f.is_positive_definite())
            .collect::<Vec<_>>(),
    )
}

fn distinct_points(max: usize) -> impl Strategy<Value = Vec<f64>> {
    prop::collection::vec(0.0f64..4.0, 1..max).prop_map(|mut v| {
        v.sort_by(f64::total_cmp);
        v.dedup_by(|a, b| (*a - *b).abs() < 1e-3);
        v
    })
}

proptest! {
    #[test]
    fn compact_support_is_exact(fam in family(), r in 1.0f64..100.0) {
        prop_assert_eq!(eval_phi(fam, r), 0.0);
        prop_assert_eq!(eval_phi_prime(fam, r), 0.0);
    }

    #[test]
    fn kernel_is_even_in_offset(fam in family(), rw in 0.1f64..5.0, c in -3.0f64..3.0, d in 0.0f64..6.0) {
        let k = ScaledKernel::new(fam, rw).unwrap();
        prop_assert!((k.value(c + d, c) - k.value(c - d, c)).abs() < 1e-9);
        prop_assert!((k.dx(c + d, c) + k.dx(c - d, c)).abs() < 1e-7);
        prop_assert_eq!(k.value(d, 0.0), k.value(-d, 0.0));
        prop_assert_eq!(k.dx(d, 0.0), -k.dx(-d, 0.0));
    }

    #[test]
    fn derivative_matches_central_difference(fam in family(), r in 0.01f64..0.99) {
        let h = 1e-6;
        let fd = (eval_phi(fam, r + h) - eval_phi(fam, r - h)) / (2.0 * h);
        let d = eval_phi_prime(fam, r);
        prop_assert!((fd - d).abs() <= 1e-6 * d.abs().max(1.0), "{} r={} d={} fd={}", fam, r, d, fd);
    }

    #[test]
    fn antiderivative_is_additive_and_monotone(
        fam in family(), rw in 0.2f64..3.0, c in 0.0f64..5.0, a in 0.0f64..5.0, b in 0.0f64..5.0,
    ) {
        let k = ScaledKernel::new(fam, rw).unwrap();
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        // additivity over a split point
        let whole = k.antiderivative(c, hi);
        let part = k.antiderivative(c, lo);
        prop_assert!((k.antiderivative(c, hi) - whole).abs() == 0.0);
        if fam.is_positive_definite() && matches!(fam, KernelFamily::Wendland { .. } | KernelFamily::Wu { .. }) {
            // nonnegative kernels give a nondecreasing integral
            prop_assert!(whole >= part - 1e-14);
        }
        // total mass bound: |∫| ≤ 2 r_ω max|φ|
        let bound = 2.0 * rw * (0..=200).map(|i| eval_phi(fam, i as f64 / 200.0).abs()).fold(0.0, f64::max);
        prop_assert!(whole.abs() <= bound * 1.01);
    }

    #[test]
    fn interpolation_reproduces_nodes(
        fam in spd_family(), rw in 0.3f64..1.0, jitter in prop::collection::vec(0.0f64..0.5, 1..20), seed in 0u64..1000,
    ) {
        let pts: Vec<f64> = jitter.iter().enumerate().map(|(i, j)| 0.25 * (i as f64 + j)).collect();
        let values: Vec<f64> = pts.iter().enumerate()
            .map(|(i, x)| ((i as f64 + seed as f64) * 0.61).sin() + x)
            .collect();
        let k = ScaledKernel::new(fam, rw).unwrap();
        let interp = Interpolant::fit(CenterSet::new(pts.clone()).unwrap(), &values, k).unwrap();
        let scale = 1.0 + values.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (x, v) in pts.iter().zip(&values) {
            prop_assert!((interp.evaluate(*x) - v).abs() <= 1e-9 * scale);
        }
    }

    #[test]
    fn matrix_is_symmetric(fam in family(), rw in 0.1f64..5.0, pts in distinct_points(25)) {
        let a = build_matrix(&CenterSet::new(pts).unwrap(), &ScaledKernel::new(fam, rw).unwrap());
        prop_assert_eq!(a.transpose(), a);
    }

    #[test]
    fn condition_number_is_scale_invariant(rw in 0.5f64..3.0, c in 0.01f64..100.0) {
        let k = ScaledKernel::new(KernelFamily::wendland(3, 2).unwrap(), rw).unwrap();
        let a = build_matrix(&CenterSet::new((0..12).map(|i| i as f64 * 0.3).collect()).unwrap(), &k);
        let base = condition_number_2(&a);
        let scaled = condition_number_2(&a.scaled(c));
        prop_assert!((base - scaled).abs() <= 1e-8 * base);
    }

    #[test]
    fn lu_round_trip(entries in prop::collection::vec(-1.0f64..1.0, 100), x0 in prop::collection::vec(-5.0f64..5.0, 10)) {
        // diagonally dominant, hence well conditioned
        let a = DenseMatrix::from_fn(10, |i, j| entries[i * 10 + j] + if i == j { 12.0 } else { 0.0 });
        let b = a.mul_vec(&x0);
        let x = lu_solve(&a, &b).unwrap();
        for (u, v) in x.iter().zip(&x0) {
            prop_assert!((u - v).abs() < 1e-9);
        }
        let r: f64 = a.mul_vec(&x).iter().zip(&b).map(|(p, q)| (p - q).abs()).fold(0.0, f64::max);
        let xn = x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let bn = b.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        prop_assert!(r / (a.norm_inf() * xn + bn) <= 1e-10);
    }

    #[test]
    fn origin_condition_is_structural(alpha in 0.0f64..=1.0, xi in prop::collection::vec(-3.0f64..3.0, 30)) {
        let k = ScaledKernel::new(KernelFamily::wendland(3, 5).unwrap(), 2.5).unwrap();
        let sol = GasSolution::from_coefficients(GasProblem::new(k).with_alpha(alpha), xi).unwrap();
        prop_assert_eq!(sol.u_n(0.0), 1.0 - alpha);
    }
}

#[test]
fn zero_fraction_is_nonincreasing_in_support() {
    let grid = GasProblem::new(ScaledKernel::new(KernelFamily::wendland(3, 5).unwrap(), 1.0).unwrap())
        .collocation_points();
    let mut last = 100.0;
    for i in 1..=60 {
        let rw = 0.1 * i as f64;
        let z = build_matrix(&grid, &ScaledKernel::new(KernelFamily::wu(3, 3).unwrap(), rw).unwrap())
            .zero_percentage();
        assert!(z <= last, "rw={rw}");
        last = z;
    }
    assert_eq!(last, 0.0);
}

#[test]
fn spd_families_have_positive_spectrum() {
    for fam in KernelFamily::all().into_iter().filter(|f| f.is_positive_definite()) {
        for n in [2usize, 5, 12, 20] {
            let pts: Vec<f64> = (0..n).map(|i| (i as f64).powf(1.3) * 0.2).collect();
            let a = build_matrix(&CenterSet::new(pts).unwrap(), &ScaledKernel::new(fam, 1.7).unwrap());
            let m = nalgebra::DMatrix::from_row_slice(n, n, a.as_slice());
            let min = m.symmetric_eigenvalues().iter().copied().fold(f64::INFINITY, f64::min);
            assert!(min > 0.0, "{fam} n={n}: {min}");
        }
    }
}
