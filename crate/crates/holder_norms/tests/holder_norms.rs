use approx::assert_relative_eq;
use fields::{Grid2, ScalarField2, Vec2, VectorField2};
use holder_norms::{
    curve_c1alpha_norm, holder_report, holder_report_points, holder_report_vec, local_holder,
    neg_holder_estimate, neg_holder_from_field, potential_gradient, HolderError, PairMode, Shell,
};
use std::f64::consts::{PI, TAU};

fn unit_box_grid(n: usize) -> Grid2 {
    // Cell centers running exactly from 0 to 1 on each axis.
    Grid2::new(n, n, Vec2::ZERO, 1.0 / (n - 1) as f64).unwrap()
}

#[test]
fn constant_field_has_zero_seminorm() {
    let grid = unit_box_grid(17);
    let f = ScalarField2::from_fn(grid, |_| 3.25);
    let shell = Shell::new(0.1, 1.0).unwrap();
    let r = holder_report(&f, 0.5, shell, PairMode::Exhaustive).unwrap();
    assert_eq!(r.seminorm, 0.0);
    assert_eq!(r.linf, 3.25);
    assert_eq!(r.norm(), 3.25);
}

#[test]
fn linear_field_matches_brute_force_and_sampling_agrees() {
    let n = 41;
    let grid = unit_box_grid(n);
    let f = ScalarField2::from_fn(grid, |p| p.x);
    let shell = Shell::new(0.1, 1.0).unwrap();
    let ex = holder_report(&f, 0.5, shell, PairMode::Exhaustive).unwrap();

    // Independent brute force over all admissible grid pairs.
    let mut brute = 0.0f64;
    let pts: Vec<Vec2> = (0..grid.len())
        .map(|i| grid.point(i % n, i / n))
        .collect();
    for i in 0..pts.len() {
        for j in i + 1..pts.len() {
            let r = (pts[i] - pts[j]).norm();
            if (0.1..=1.0).contains(&r) {
                brute = brute.max((pts[i].x - pts[j].x).abs() / r.sqrt());
            }
        }
    }
    assert_relative_eq!(ex.seminorm, brute, max_relative = 1e-12);
    // The sup sits on the longest axis-aligned pair: |dx| / |dx|^1/2 = 1.
    assert_relative_eq!(ex.seminorm, 1.0, max_relative = 1e-12);

    let sa = holder_report(
        &f,
        0.5,
        shell,
        PairMode::Sampled { pairs_per_shell: 8192, seed: 42 },
    )
    .unwrap();
    assert!(sa.seminorm <= ex.seminorm * (1.0 + 1e-12));
    assert!(
        sa.seminorm >= ex.seminorm * 0.98,
        "sampled {} vs exhaustive {}",
        sa.seminorm,
        ex.seminorm
    );
}

#[test]
fn jump_discontinuity_seminorm_scales_with_resolution() {
    let alpha = 0.5;
    let mut values = Vec::new();
    for n in [64usize, 128] {
        let grid = Grid2::centered_square(n, 2.0).unwrap();
        let s = grid.spacing;
        let f = ScalarField2::from_fn(grid, |p| if p.norm() <= 1.0 { 1.0 } else { 0.0 });
        let shell = Shell::new(s, 6.0 * s).unwrap();
        let r = holder_report(&f, alpha, shell, PairMode::Exhaustive).unwrap();
        values.push(r.seminorm);
    }
    let ratio = values[1] / values[0];
    let expected = 2f64.powf(alpha);
    assert!(
        ratio >= expected * 0.8 && ratio <= expected * 1.2,
        "refinement ratio {ratio} vs {expected}"
    );
}

#[test]
fn seminorm_grows_with_alpha_below_unit_separation_and_scales_exactly() {
    let grid = unit_box_grid(31);
    let f = ScalarField2::from_fn(grid, |p| (3.0 * p.x).sin() * (2.0 * p.y).cos());
    let shell = Shell::new(0.1, 0.9).unwrap();
    let lo = holder_report(&f, 0.3, shell, PairMode::Exhaustive).unwrap();
    let hi = holder_report(&f, 0.7, shell, PairMode::Exhaustive).unwrap();
    // All separations are below 1, so dividing by r^alpha can only grow
    // the quotient as alpha increases.
    assert!(hi.seminorm >= lo.seminorm);

    let scaled = ScalarField2::from_fn(grid, |p| -7.5 * (3.0 * p.x).sin() * (2.0 * p.y).cos());
    let rs = holder_report(&scaled, 0.3, shell, PairMode::Exhaustive).unwrap();
    assert_relative_eq!(rs.seminorm, 7.5 * lo.seminorm, max_relative = 1e-12);
    assert_relative_eq!(rs.linf, 7.5 * lo.linf, max_relative = 1e-12);
}

#[test]
fn composition_and_product_bounds_hold_with_slack() {
    let alpha = 0.5;
    let f = |p: Vec2| (3.0 * p.x).sin() * (2.0 * p.y).cos();
    let lip = 0.7;
    let g = |p: Vec2| Vec2::new(
        lip * (0.5f64.cos() * p.x - 0.5f64.sin() * p.y),
        lip * (0.5f64.sin() * p.x + 0.5f64.cos() * p.y),
    );

    let inner_grid = unit_box_grid(41);
    let composed = ScalarField2::from_fn(inner_grid, |p| f(g(p)));
    let comp = holder_report(&composed, alpha, Shell::new(0.1, 1.4).unwrap(), PairMode::Exhaustive)
        .unwrap();

    // f sampled over a box containing the image of g.
    let outer_grid = Grid2::centered_square(45, 1.0).unwrap();
    let f_field = ScalarField2::from_fn(outer_grid, f);
    let base = holder_report(&f_field, alpha, Shell::new(0.05, 2.8).unwrap(), PairMode::Exhaustive)
        .unwrap();
    assert!(
        comp.seminorm <= base.seminorm * lip.powf(alpha) * 1.05,
        "composition: {} vs {}",
        comp.seminorm,
        base.seminorm * lip.powf(alpha)
    );

    let h = |p: Vec2| (2.0 * p.x + p.y).cos();
    let shell = Shell::new(0.1, 1.4).unwrap();
    let ff = ScalarField2::from_fn(inner_grid, f);
    let hh = ScalarField2::from_fn(inner_grid, h);
    let prod = ScalarField2::from_fn(inner_grid, |p| f(p) * h(p));
    let rf = holder_report(&ff, alpha, shell, PairMode::Exhaustive).unwrap();
    let rh = holder_report(&hh, alpha, shell, PairMode::Exhaustive).unwrap();
    let rp = holder_report(&prod, alpha, shell, PairMode::Exhaustive).unwrap();
    assert!(rp.norm() <= rf.norm() * rh.norm() * 1.05);
}

#[test]
fn point_set_report_and_error_cases() {
    let pts = [Vec2::new(0.0, 0.0), Vec2::new(1.0, 0.0), Vec2::new(2.0, 0.0)];
    let vals = [0.0, 1.0, 0.0];
    let r = holder_report_points(&pts, &vals, 0.5, Shell::new(0.5, 3.0).unwrap()).unwrap();
    assert_relative_eq!(r.seminorm, 1.0, max_relative = 1e-14);
    assert_eq!(r.pairs_used, 3);

    assert!(matches!(
        holder_report_points(&pts, &vals, 1.5, Shell::new(0.5, 3.0).unwrap()),
        Err(HolderError::BadExponent(_))
    ));
    assert!(matches!(
        holder_report_points(&pts, &vals, 0.5, Shell::new(5.0, 6.0).unwrap()),
        Err(HolderError::EmptyShell)
    ));
    assert!(Shell::new(-1.0, 2.0).is_err());

    let grid = unit_box_grid(17);
    let f = ScalarField2::from_fn(grid, |p| p.x);
    let too_fine = Shell::new(grid.spacing * 0.5, 1.0).unwrap();
    assert!(matches!(
        holder_report(&f, 0.5, too_fine, PairMode::Exhaustive),
        Err(HolderError::ShellBelowSpacing { .. })
    ));
}

#[test]
fn masked_reports_restrict_the_pair_set() {
    let grid = Grid2::centered_square(64, 2.0).unwrap();
    let s = grid.spacing;
    let beta = 0.5;
    let f = ScalarField2::from_fn(grid, |p| if p.norm() <= 1.0 { 1.0 } else { 0.0 });
    let shell = Shell::new(s, 8.0 * s).unwrap();

    let all = vec![true; grid.len()];
    let full = local_holder(&f, &all, beta, shell, PairMode::Exhaustive).unwrap();
    let plain = holder_report(&f, beta, shell, PairMode::Exhaustive).unwrap();
    assert_eq!(full.seminorm, plain.seminorm);
    assert_eq!(full.pairs_used, plain.pairs_used);

    let inside: Vec<bool> = (0..grid.len())
        .map(|i| grid.point(i % grid.nx, i / grid.nx).norm() < 0.5)
        .collect();
    let ri = local_holder(&f, &inside, beta, shell, PairMode::Exhaustive).unwrap();
    assert_eq!(ri.seminorm, 0.0);

    let straddle: Vec<bool> = (0..grid.len())
        .map(|i| {
            let r = grid.point(i % grid.nx, i / grid.nx).norm();
            (0.8..1.2).contains(&r)
        })
        .collect();
    let rs = local_holder(&f, &straddle, beta, shell, PairMode::Exhaustive).unwrap();
    assert!(rs.seminorm >= 0.5 * s.powf(-beta));
}

#[test]
fn zero_divergence_gives_zero_negative_estimate() {
    let grid = Grid2::centered_square(64, 2.0).unwrap();
    let zero = ScalarField2::zeros(grid);
    let shell = Shell::new(0.2, 2.0).unwrap();
    let r = neg_holder_estimate(&zero, 0.5, shell, PairMode::Exhaustive, 2).unwrap();
    assert_eq!(r.value, 0.0);
    assert_eq!(r.method, "potential_estimate");

    // Divergence-free field (a rotated Gaussian), divergence taken by
    // finite differences inside the estimator.
    let sigma2 = 0.16;
    let grid2 = Grid2::centered_square(128, 2.0).unwrap();
    let z = VectorField2::from_fn(grid2, |p| {
        let phi = (-p.norm_sq() / (2.0 * sigma2)).exp();
        Vec2::new(p.y * phi / sigma2, -p.x * phi / sigma2)
    });
    let r2 = neg_holder_from_field(&z, 0.5, shell, PairMode::Exhaustive, 2).unwrap();
    assert!(r2.value <= 1e-3, "got {}", r2.value);
}

#[test]
fn potential_gradient_matches_spectral_convolution_for_a_gaussian() {
    let sigma = 0.35;
    let grid = Grid2::centered_square(128, 2.0).unwrap();
    let div_z = ScalarField2::from_fn(grid, |p| {
        -(p.x / (sigma * sigma)) * (-p.norm_sq() / (2.0 * sigma * sigma)).exp()
    });

    let v_quad = potential_gradient(&div_z, 2).unwrap();
    let sub = v_quad.grid;

    // Fourier side: v-hat = (xi xi_1 / |xi|^2) f-hat with f-hat Gaussian.
    let m = 240usize;
    let dxi = 0.25;
    let mut nodes = Vec::with_capacity(m * m);
    for a in 0..m {
        for b in 0..m {
            let xi = Vec2::new(
                -30.0 + (a as f64 + 0.5) * dxi,
                -30.0 + (b as f64 + 0.5) * dxi,
            );
            let w = (sigma * sigma / (2.0 * PI))
                * (-sigma * sigma * xi.norm_sq() / 2.0).exp()
                * dxi
                * dxi;
            nodes.push((xi, w * xi.x / xi.norm_sq()));
        }
    }
    let mut v_spec = VectorField2::zeros(sub);
    let vals: Vec<Vec2> = fields::par::map_collect(sub.len(), |k| {
        let x = sub.point(k % sub.nx, k / sub.nx);
        let mut acc = Vec2::ZERO;
        for &(xi, wm) in &nodes {
            let c = (x.x * xi.x + x.y * xi.y).cos() * wm;
            acc += Vec2::new(c * xi.x, c * xi.y);
        }
        acc
    });
    for (k, v) in vals.iter().enumerate() {
        v_spec.x[k] = v.x;
        v_spec.y[k] = v.y;
    }

    let shell = Shell::new(0.125, 2.0).unwrap();
    let rq = holder_report_vec(&v_quad, 0.5, shell, PairMode::Exhaustive).unwrap();
    let rs = holder_report_vec(&v_spec, 0.5, shell, PairMode::Exhaustive).unwrap();
    assert!(
        (rq.norm() - rs.norm()).abs() <= 0.1 * rs.norm(),
        "quadrature {} vs spectral {}",
        rq.norm(),
        rs.norm()
    );
}

#[test]
fn circle_curve_norm_matches_closed_form() {
    let n = 256;
    let pts: Vec<Vec2> = (0..n)
        .map(|i| {
            let t = TAU * i as f64 / n as f64;
            Vec2::new(t.cos(), t.sin())
        })
        .collect();
    let alpha = 0.5;
    let parts = holder_norms::curve_c1alpha_parts(&pts, alpha, true).unwrap();
    assert!((parts.sup_deriv - 1.0).abs() <= 1e-3);
    assert_relative_eq!(parts.sup, 1.0, max_relative = 1e-12);

    // The derivative seminorm has the closed form
    // sup_k 2 sin(theta_k/2) / theta_k^alpha over the sampled angular gaps.
    let dtheta = TAU / n as f64;
    let mut sem = 0.0f64;
    for k in 1..=n / 2 {
        let th = dtheta * k as f64;
        sem = sem.max(2.0 * (th / 2.0).sin() / th.powf(alpha));
    }
    assert!(
        (parts.deriv_seminorm - sem).abs() <= 0.05 * sem,
        "{} vs {sem}",
        parts.deriv_seminorm
    );
    let norm = curve_c1alpha_norm(&pts, alpha, true).unwrap();
    assert_relative_eq!(norm, parts.total(), max_relative = 1e-15);
}

#[test]
fn straight_segment_has_zero_derivative_seminorm() {
    let pts: Vec<Vec2> = (0..32).map(|i| Vec2::new(i as f64 * 0.1, 0.5)).collect();
    let norm = curve_c1alpha_norm(&pts, 0.5, false).unwrap();
    // sup|gamma| + sup|gamma'| with no Holder excess.
    let sup: f64 = pts.iter().map(|p| p.norm()).fold(0.0, f64::max);
    assert_relative_eq!(norm, sup + 1.0, max_relative = 1e-12);
}

#[test]
fn ellipse_curve_norm_is_stable_under_refinement() {
    let resample = |n: usize| -> Vec<Vec2> {
        let fine = 32768usize;
        let gamma = |t: f64| Vec2::new(2.0 * t.cos(), t.sin());
        let mut cum = vec![0.0f64; fine + 1];
        for i in 0..fine {
            let a = gamma(TAU * i as f64 / fine as f64);
            let b = gamma(TAU * (i + 1) as f64 / fine as f64);
            cum[i + 1] = cum[i] + (b - a).norm();
        }
        let total = cum[fine];
        let mut out = Vec::with_capacity(n);
        let mut seg = 0usize;
        for k in 0..n {
            let target = total * k as f64 / n as f64;
            while cum[seg + 1] < target {
                seg += 1;
            }
            let frac = (target - cum[seg]) / (cum[seg + 1] - cum[seg]);
            let a = gamma(TAU * seg as f64 / fine as f64);
            let b = gamma(TAU * (seg + 1) as f64 / fine as f64);
            out.push(a + (b - a) * frac);
        }
        out
    };
    let n1 = curve_c1alpha_norm(&resample(256), 0.5, true).unwrap();
    let n2 = curve_c1alpha_norm(&resample(512), 0.5, true).unwrap();
    assert!((n2 / n1 - 1.0).abs() <= 0.02, "{n1} vs {n2}");
}

#[test]
fn degenerate_and_self_intersecting_curves_are_rejected() {
    let mut gappy: Vec<Vec2> = (0..8).map(|i| Vec2::new(i as f64, 0.0)).collect();
    gappy.push(Vec2::new(100.0, 0.0));
    assert!(matches!(
        curve_c1alpha_norm(&gappy, 0.5, false),
        Err(HolderError::DegenerateSpacing(_))
    ));

    // Figure-eight with no sample at the crossing point.
    let eight: Vec<Vec2> = (0..16)
        .map(|i| {
            let t = 0.2 + TAU * i as f64 / 16.0;
            Vec2::new((2.0 * t).sin() / 2.0, t.sin())
        })
        .collect();
    assert!(matches!(
        curve_c1alpha_norm(&eight, 0.5, true),
        Err(HolderError::SelfIntersecting)
    ));
}

#[test]
fn csv_row_lists_all_report_fields() {
    let grid = unit_box_grid(17);
    let f = ScalarField2::from_fn(grid, |p| p.x);
    let r = holder_report(&f, 0.5, Shell::new(0.1, 1.0).unwrap(), PairMode::Exhaustive).unwrap();
    let row = r.csv_row();
    assert_eq!(row.split(',').count(), 6);
    assert!(row.starts_with("5.0000000000000000e-1,"));
}
