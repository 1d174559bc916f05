//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any failed.

use std::f64::consts::PI;
use std::process::Command;
use std::time::Instant;

use confschro_core::audit::FreeParticle;
use confschro_core::calculus::{conformable_deriv, conformable_deriv2, conformable_deriv_limit};
use confschro_core::freeparticle::{enumerate_chains, radial_wavefunction, time_factor, wavenumber};
use confschro_core::geometry::{cartesian_to_polar, polar_to_cartesian};
use confschro_core::laplacian::{laplacian_cartesian, laplacian_polar};
use confschro_core::special::{
    assoc_conformable_gegenbauer, bessel_series, conformable_bessel_j, conformable_gegenbauer,
};
use confschro_core::{
    BesselOrderQ, CartesianSolution, Complex64, ConformalPolar, DimensionSpec, GegenbauerSpec, Order,
    PhysicalParams, PolarSolution, QuantumNumbers, SeparationConvention, WaveVector,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);
type Field = (&'static str, fn(&[f64]) -> f64);

fn ord(b: f64) -> Order {
    Order::new(b).unwrap()
}

/// Fails with `msg` unless `ok`.
fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn power_rule() -> Outcome {
    let mut worst: f64 = 0.0;
    for beta in [0.25, 0.5, 0.75, 1.0] {
        let o = ord(beta);
        for p in [-1.0, 0.5, 1.0, 2.0, 3.0] {
            for t in [0.5f64, 1.0, 2.0, 5.0] {
                let got = conformable_deriv(|x: f64| x.powf(p), t, o).map_err(|e| e.to_string())?;
                let want = p * t.powf(p - beta);
                let err = (got - want).abs() / want.abs();
                worst = worst.max(err);
                ensure(err <= 1e-6, || format!("beta={beta} p={p} t={t}: rel err {err:e}"))?;
            }
        }
    }
    Ok(format!("80 cases, worst relative error {worst:.1e}"))
}

/// `a sin(b t) + c t² + d`
fn smooth(rng: &mut ChaCha8Rng) -> impl Fn(f64) -> f64 {
    let (a, b, c, d) = (
        rng.gen_range(-2.0..2.0),
        rng.gen_range(0.2..2.0),
        rng.gen_range(-1.0..1.0),
        rng.gen_range(-1.0..1.0),
    );
    move |t: f64| a * (b * t).sin() + c * t * t + d
}

fn algebraic_rules() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst: f64 = 0.0;
    for case in 0..1000 {
        let o = ord(rng.gen_range(0.1..=1.0));
        let t = rng.gen_range(0.2..5.0);
        let f = smooth(&mut rng);
        let g = smooth(&mut rng);
        let (a, c) = (rng.gen_range(-3.0..3.0), rng.gen_range(-3.0..3.0));
        let d = |h: &dyn Fn(f64) -> f64| conformable_deriv(h, t, o).unwrap();
        let den = |x: f64| 3.0 + g(x).tanh();
        let checks = [
            ("linearity", d(&|x| a * f(x) + c * g(x)), a * d(&f) + c * d(&g)),
            ("leibniz", d(&|x| f(x) * g(x)), f(t) * d(&g) + g(t) * d(&f)),
            ("quotient", d(&|x| f(x) / den(x)), (den(t) * d(&f) - f(t) * d(&den)) / (den(t) * den(t))),
            ("constant", d(&|_| c), 0.0),
        ];
        for (name, lhs, rhs) in checks {
            let scale = lhs.abs() + rhs.abs() + 1.0;
            let err = (lhs - rhs).abs() / scale;
            worst = worst.max(err);
            ensure(err <= 1e-6, || format!("case {case} {name}: {lhs} vs {rhs}"))?;
        }
    }
    Ok(format!("1000 cases x 4 rules, worst scaled residual {worst:.1e}"))
}

fn limit_oracle() -> Outcome {
    let mut rates = Vec::new();
    for beta in [0.3, 0.6, 1.0] {
        let o = ord(beta);
        for t in [0.7f64, 1.7, 3.0] {
            let f = |x: f64| (1.3 * x).sin() + x * x;
            let identity = conformable_deriv(f, t, o).unwrap();
            let errs: Vec<f64> = [1e-3, 1e-4, 1e-5]
                .iter()
                .map(|&e| (conformable_deriv_limit(f, t, o, e).unwrap() - identity).abs())
                .collect();
            let rate = (errs[0] / errs[2]).log10() / 2.0;
            ensure((rate - 1.0).abs() <= 0.2, || format!("beta={beta} t={t}: order {rate}"))?;
            rates.push(rate);
        }
    }
    let lo = rates.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = rates.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    Ok(format!("measured order in [{lo:.3}, {hi:.3}]"))
}

/// Series with each term built from scratch; `g` is `Γ(q+1)`.
fn reference_j(q: f64, g: f64, u: f64) -> f64 {
    let mut acc = 0.0;
    for s in 0..60u32 {
        let fact: f64 = (1..=s).map(f64::from).product();
        let rising: f64 = (1..=s).map(|i| q + f64::from(i)).product();
        let mag = (u / 2.0).powf(2.0 * f64::from(s) + q) / (fact * g * rising);
        acc += if s % 2 == 0 { mag } else { -mag };
    }
    acc
}

fn bessel() -> Outcome {
    // Γ(q+1) from mpmath
    let orders = [(0.0, 1.0), (0.5, PI.sqrt() / 2.0), (1.0, 1.0), (2.3, 2.683437381955768)];
    let mut worst_ref: f64 = 0.0;
    for (q, g) in orders {
        for i in 1..=100 {
            let u = 0.1 * i as f64;
            let a = bessel_series(q, u).unwrap();
            let b = reference_j(q, g, u);
            let err = (a - b).abs() / b.abs().max(1e-3);
            worst_ref = worst_ref.max(err);
            ensure(err <= 1e-10, || format!("J_{q}({u}) = {a}, reference {b}"))?;
        }
    }
    let mut worst_ode: f64 = 0.0;
    for beta in [0.4, 0.7, 1.0] {
        let o = ord(beta);
        for q in [0.0, 0.5, 1.3, 2.0, 3.7] {
            let qq = BesselOrderQ::new(q).unwrap();
            for rho in [0.3, 1.0, 2.5, 6.0, 15.0] {
                let y = |r: f64| conformable_bessel_j(qq, r, o).unwrap();
                let u = o.power(rho);
                let terms = [
                    u * u * conformable_deriv2(y, rho, o).unwrap(),
                    beta * u * conformable_deriv(y, rho, o).unwrap(),
                    beta * beta * (u * u - q * q) * y(rho),
                ];
                let scale: f64 = terms.iter().map(|v| v.abs()).sum::<f64>() + beta * beta;
                let res = terms.iter().sum::<f64>().abs() / scale;
                worst_ode = worst_ode.max(res);
                ensure(res <= 1e-4, || format!("ODE beta={beta} q={q} rho={rho}: {res:e}"))?;
            }
        }
    }
    let half = BesselOrderQ::new(0.5).unwrap();
    for beta in [0.5, 1.0] {
        let o = ord(beta);
        for i in 1..=60 {
            let rho = 0.25 * i as f64;
            let u = o.power(rho);
            let want = (2.0 / (PI * u)).sqrt() * u.sin();
            let got = conformable_bessel_j(half, rho, o).unwrap();
            ensure((got - want).abs() <= 1e-8, || format!("half order beta={beta} rho={rho}"))?;
        }
    }
    Ok(format!("reference rel err {worst_ref:.1e}, ODE scaled residual {worst_ode:.1e}, half-order ok"))
}

fn gegenbauer_residual(spec: GegenbauerSpec, x: f64, o: Order, assoc: bool) -> f64 {
    let beta = o.beta();
    let alpha = spec.alpha();
    let (n, m) = (spec.degree as f64, spec.assoc_order as f64);
    let y = |t: f64| {
        if assoc {
            assoc_conformable_gegenbauer(spec, t, o).unwrap()
        } else {
            conformable_gegenbauer(spec, t, o).unwrap()
        }
    };
    let u = o.power(x);
    let w = 1.0 - u * u;
    let eigen = n * (n + 2.0 * alpha) - if assoc { m * (m + 2.0 * alpha - 1.0) / w } else { 0.0 };
    let terms = [
        w * conformable_deriv2(y, x, o).unwrap(),
        -beta * (2.0 * alpha + 1.0) * u * conformable_deriv(y, x, o).unwrap(),
        beta * beta * eigen * y(x),
    ];
    terms.iter().sum::<f64>().abs() / (terms.iter().map(|v| v.abs()).sum::<f64>() + 1e-12)
}

fn gegenbauer() -> Outcome {
    let mut worst: f64 = 0.0;
    for beta in [0.5, 0.8, 1.0] {
        let o = ord(beta);
        for n in 0..=6 {
            for gamma in [-0.3, 0.2, 1.0, 2.5] {
                for x in [0.15, 0.4, 0.7, 0.9] {
                    let r = gegenbauer_residual(GegenbauerSpec::plain(n, gamma), x, o, false);
                    worst = worst.max(r);
                    ensure(r <= 1e-4, || format!("beta={beta} n={n} gamma={gamma} x={x}: {r:e}"))?;
                }
            }
        }
        for degree in 0..=5 {
            for m in 0..=degree {
                for gamma in [-0.2, 0.5, 1.7] {
                    for x in [0.2, 0.5, 0.8] {
                        let r = gegenbauer_residual(GegenbauerSpec::new(degree, gamma, m), x, o, true);
                        worst = worst.max(r);
                        ensure(r <= 1e-4, || format!("assoc beta={beta} n={degree} m={m} x={x}: {r:e}"))?;
                    }
                }
            }
        }
    }
    // mpmath gegenbauer(n, alpha, u)
    let classical = [
        (3, 0.7, 0.35, -0.6493234999999999),
        (6, 1.5, -0.8, -3.890347999999999),
        (5, 0.25, 0.9, -0.05908253906249996),
        (6, 0.8, 0.3, 0.3374487846912),
        (5, 2.2, -0.7, 6.894652047360003),
        (4, 1.0, 0.95, 3.2020999999999984),
    ];
    for (n, alpha, u, want) in classical {
        let got = conformable_gegenbauer(GegenbauerSpec::plain(n, alpha - 0.5), u, Order::ONE).unwrap();
        ensure((got - want).abs() <= 1e-12 * want.abs().max(1.0), || {
            format!("C_{n}^({alpha})({u}) = {got}")
        })?;
    }
    Ok(format!("worst scaled ODE residual {worst:.1e}; classical values to 1e-12"))
}

fn geometry() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut worst: f64 = 0.0;
    for n in [2usize, 3, 4, 6] {
        for _ in 0..1000 {
            let angles: Vec<f64> = (0..n - 1)
                .map(|a| {
                    if a + 1 < n - 1 {
                        rng.gen_range(1e-3..PI - 1e-3)
                    } else {
                        rng.gen_range(0.0..2.0 * PI)
                    }
                })
                .collect();
            let p = ConformalPolar::new(rng.gen_range(0.05..20.0), angles).unwrap();
            let c = polar_to_cartesian(&p);
            let norm2: f64 = c.xbeta().iter().map(|v| v * v).sum();
            let e_norm = (norm2 - p.rbeta().powi(2)).abs() / p.rbeta().powi(2);
            let back = cartesian_to_polar(&c).unwrap();
            let mut e = (back.rbeta() - p.rbeta()).abs() / p.rbeta();
            for (a, b) in back.angles().iter().zip(p.angles()) {
                let d = (a - b).abs();
                e = e.max(d.min(2.0 * PI - d));
            }
            worst = worst.max(e).max(e_norm);
            ensure(e <= 1e-12 && e_norm <= 1e-12, || format!("n={n} {:?}", p.angles()))?;
        }
    }
    Ok(format!("4000 points, worst deviation {worst:.1e}"))
}

fn laplacian() -> Outcome {
    let fields: [Field; 2] = [
        ("gaussian", |y| (-0.5 * y.iter().map(|v| v * v).sum::<f64>()).exp()),
        ("radial wave", |y| (1.3 * y.iter().map(|v| v * v).sum::<f64>().sqrt()).cos()),
    ];
    let mut worst: f64 = 0.0;
    for (name, g) in fields {
        for n in [2usize, 3] {
            for ds in [n as f64 - 0.2, n as f64] {
                for beta in [0.6, 1.0] {
                    let o = ord(beta);
                    let dims = DimensionSpec::single_parameter(n, ds).unwrap();
                    let cart = |x: &[f64]| g(&x.iter().map(|v| o.power(*v)).collect::<Vec<_>>());
                    let polar = |p: &[f64]| {
                        g(polar_to_cartesian(&ConformalPolar::from_raw(p[0], &p[1..], o).unwrap()).xbeta())
                    };
                    for r in [0.6, 1.4] {
                        let mut pp = vec![r];
                        pp.extend((0..n - 1).map(|a| o.unreduce(0.35 + 0.3 * a as f64)));
                        let q = ConformalPolar::from_raw(pp[0], &pp[1..], o).unwrap();
                        let cp: Vec<f64> =
                            polar_to_cartesian(&q).xbeta().iter().map(|v| v.powf(1.0 / beta)).collect();
                        let a = laplacian_cartesian(cart, &cp, &dims, o).unwrap();
                        let b = laplacian_polar(polar, &pp, &dims, o).unwrap();
                        let rel = (a - b).abs() / a.abs().max(b.abs());
                        worst = worst.max(rel);
                        ensure(rel <= 1e-3, || format!("{name} n={n} ds={ds} beta={beta}: {a} vs {b}"))?;
                    }
                }
            }
        }
    }
    for (n, ds, beta) in [(2, 1.5, 0.5), (3, 2.7, 0.75), (3, 3.0, 1.0), (5, 4.3, 0.9)] {
        let o = ord(beta);
        let dims = DimensionSpec::single_parameter(n, ds).unwrap();
        let point: Vec<f64> = (0..n).map(|i| 0.5 + 0.3 * i as f64).collect();
        let all = laplacian_cartesian(
            |x: &[f64]| x.iter().map(|v| v.powf(2.0 * beta)).sum::<f64>(),
            &point,
            &dims,
            o,
        )
        .unwrap();
        let last = laplacian_cartesian(|x: &[f64]| x[n - 1].powf(2.0 * beta), &point, &dims, o).unwrap();
        ensure((all - 2.0 * beta * beta * ds).abs() <= 1e-5, || format!("sum checkpoint n={n}: {all}"))?;
        ensure((last - 2.0 * beta * beta * (ds - n as f64 + 1.0)).abs() <= 1e-5, || {
            format!("last-axis checkpoint n={n}: {last}")
        })?;
    }
    Ok(format!("frame mismatch at most {worst:.1e}; symbolic checkpoints to 1e-5"))
}

fn polar_point(rng: &mut ChaCha8Rng, n: usize, o: Order) -> Vec<f64> {
    let mut p = vec![rng.gen_range(0.3..4.0)];
    for a in 0..n - 1 {
        let hi = if a + 1 < n - 1 { PI } else { 2.0 * PI };
        p.push(o.unreduce(rng.gen_range(0.15..hi - 0.15)));
    }
    p
}

fn certification() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let (mut worst, mut control_min, mut states) = (0.0f64, f64::INFINITY, 0);
    for n in [3usize, 4] {
        for ds in [n as f64 - 0.8, n as f64 - 0.2] {
            for beta in [0.6, 1.0] {
                let o = ord(beta);
                let params = PhysicalParams::new(1.1, 0.9, o).unwrap();
                for qn in enumerate_chains(2, n) {
                    let label = format!("{qn} ds={ds} beta={beta}");
                    let s = PolarSolution::new(qn, ds, 1.7, params, Complex64::new(0.8, -0.3)).unwrap();
                    let state = FreeParticle::Polar(s);
                    let pts: Vec<Vec<f64>> = (0..50).map(|_| polar_point(&mut rng, n, o)).collect();
                    let (w, c) = audit_points(&state, &pts)?;
                    ensure(w <= 1e-3, || format!("{label}: residual {w:e}"))?;
                    ensure(c > 1e-3, || format!("{label}: doubled energy passed ({c:e})"))?;
                    worst = worst.max(w);
                    control_min = control_min.min(c);
                    states += 1;
                }
            }
        }
    }
    for n in [2usize, 3, 4] {
        for ds in [n as f64 - 0.8, n as f64 - 0.2, n as f64] {
            for beta in [0.6, 1.0] {
                let params = PhysicalParams::natural(ord(beta));
                let k: Vec<f64> = (0..n).map(|_| rng.gen_range(0.5..2.0)).collect();
                let label = format!("cartesian n={n} ds={ds} beta={beta} k={k:?}");
                let s =
                    CartesianSolution::new(WaveVector::new(k).unwrap(), ds, params, Complex64::new(1.0, 0.0))
                        .unwrap();
                let state = FreeParticle::Cartesian(s);
                let pts: Vec<Vec<f64>> =
                    (0..50).map(|_| (0..n).map(|_| rng.gen_range(0.2..3.0)).collect()).collect();
                let (w, c) = audit_points(&state, &pts)?;
                ensure(w <= 1e-3, || format!("{label}: residual {w:e}"))?;
                ensure(c > 1e-3, || format!("{label}: doubled energy passed ({c:e})"))?;
                worst = worst.max(w);
                control_min = control_min.min(c);
                states += 1;
            }
        }
    }
    Ok(format!("{states} states x 50 points, worst {worst:.1e}; E->2E control at least {control_min:.1e}"))
}

/// Worst scaled residual at the state's energy and at twice it.
fn audit_points(state: &FreeParticle, pts: &[Vec<f64>]) -> Result<(f64, f64), String> {
    let (mut w, mut c) = (0.0f64, 0.0f64);
    for p in pts {
        w = w.max(state.residual(p).map_err(|e| e.to_string())?.scaled);
        c = c.max(state.residual_at_energy(p, 2.0 * state.energy()).map_err(|e| e.to_string())?.scaled);
    }
    Ok((w, c))
}

fn classical_limit() -> Outcome {
    let params = PhysicalParams::natural(Order::ONE);
    let k3 = 1.7;
    let s = CartesianSolution::new(
        WaveVector::new(vec![1.0, 0.4, k3]).unwrap(),
        3.0,
        params,
        Complex64::new(1.0, 0.0),
    )
    .unwrap();
    let c = (2.0 / PI).sqrt();
    for i in 1..=100 {
        let w = 0.1 * i as f64;
        let got = s.tail(w / k3).unwrap();
        ensure((got - c * w.sin()).abs() <= 1e-8, || format!("tail at k x3 = {w}: {got}"))?;
    }
    let energy = 0.5;
    let k = wavenumber(energy, &params).unwrap();
    let conv = SeparationConvention::Certified;
    let mut worst: f64 = 0.0;
    for i in 0..=99 {
        let r = 0.1 + 0.1 * i as f64;
        let radial = radial_wavefunction(r, energy, &params, 3.0, 0, Complex64::new(1.0, 0.0), conv).unwrap();
        let ratio = radial.re / ((k * r).sin() / (k * r));
        let err = (ratio - c).abs() / c;
        worst = worst.max(err);
        ensure(err <= 1e-6, || format!("radial ratio at r={r}: {ratio}"))?;
    }
    Ok(format!("tail = sqrt(2/pi) sin(k x3) to 1e-8; radial ratio deviation {worst:.1e}"))
}

fn enumeration() -> Outcome {
    for n in 3..=7usize {
        for lmax in 0..=6u32 {
            let base = lmax as usize + 1;
            let width = n - 1;
            let brute = (0..base.pow(width as u32))
                .filter(|code| {
                    let digits: Vec<usize> = (0..width).map(|i| code / base.pow(i as u32) % base).collect();
                    digits.windows(2).all(|w| w[0] >= w[1])
                })
                .count();
            let got = enumerate_chains(lmax, n).len();
            ensure(got == brute, || format!("n={n} lmax={lmax}: {got} vs {brute}"))?;
        }
    }
    let n4 = enumerate_chains(2, 4).len();
    ensure(n4 == 10, || format!("N=4, l<=2 gave {n4}"))?;
    Ok("N in 3..=7, lmax in 0..=6 match brute force; N=4, l<=2 -> 10".into())
}

fn stationary() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for _ in 0..100 {
        let o = ord(rng.gen_range(0.3..=1.0));
        let params = PhysicalParams::new(rng.gen_range(0.5..2.0), rng.gen_range(0.5..2.0), o).unwrap();
        let qn = QuantumNumbers::new(1, vec![0]).unwrap();
        let energy = rng.gen_range(0.1..3.0);
        let s = PolarSolution::new(qn, 2.6, energy, params, Complex64::new(1.0, 0.2)).unwrap();
        let x = polar_point(&mut rng, 3, o);
        let psi = s.evaluate(&x).map_err(|e| e.to_string())?;
        let t = rng.gen_range(0.2..5.0);
        let big = |tt: f64| psi * time_factor(energy, tt, &params);
        let d = conformable_deriv(big, t, o).unwrap();
        let ratio = Complex64::new(0.0, params.hbar_pow_beta()) * d / big(t);
        let err = (ratio - energy).norm() / energy;
        worst = worst.max(err);
        ensure(err <= 1e-6, || format!("i hbar D_t Psi / Psi = {ratio}, E = {energy}"))?;
        let modulus = time_factor(energy, t, &params).norm();
        ensure((modulus - 1.0).abs() <= 1e-12, || format!("|time factor| = {modulus}"))?;
    }
    Ok(format!("100 random (x, t), worst relative error {worst:.1e}"))
}

fn cli_determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_confschro");
    let dir = std::env::temp_dir().join(format!("confschro-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).map_err(|e| e.to_string())?;
    let cfg = dir.join("polar.json");
    std::fs::write(
        &cfg,
        r#"{"beta": 0.8, "n_dims": 3, "ds": 2.8, "frame": "polar", "quantum_numbers": [1, 1], "energy": 1.5,
            "grid": {"min": [0.5, 0.3, 0.2], "max": [3.0, 2.0, 5.0], "count": [4, 3, 5]}, "seed": 17}"#,
    )
    .map_err(|e| e.to_string())?;
    let cfg = cfg.to_str().unwrap();
    let run = |args: &[&str]| {
        Command::new(bin).args(args).env_remove("CONFSCHRO_TOLERANCE").output().map_err(|e| e.to_string())
    };
    let mut csv = Vec::new();
    let mut json = Vec::new();
    for i in 0..2 {
        let out = dir.join(format!("run{i}.csv"));
        let o = run(&["solve", "--config", cfg, "--out", out.to_str().unwrap()])?;
        ensure(o.status.success(), || "solve failed".into())?;
        csv.push(std::fs::read(&out).map_err(|e| e.to_string())?);
        json.push(run(&["audit", "--config", cfg])?);
    }
    ensure(csv[0] == csv[1], || "CSV outputs differ".into())?;
    ensure(json[0].stdout == json[1].stdout, || "audit reports differ".into())?;
    let codes = [
        json[0].status.code(),
        run(&["audit", "--config", cfg, "--energy-factor", "2"])?.status.code(),
        run(&["audit", "--config", cfg, "--points", "0"])?.status.code(),
    ];
    ensure(codes == [Some(0), Some(1), Some(2)], || format!("exit codes {codes:?}"))?;
    let _ = std::fs::remove_dir_all(&dir);
    Ok("byte-identical CSV and JSON; exit codes pass/fail/usage = 0/1/2".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("power rule", power_rule),
        ("linearity, Leibniz, quotient", algebraic_rules),
        ("limit-definition oracle", limit_oracle),
        ("conformable Bessel", bessel),
        ("conformable Gegenbauer", gegenbauer),
        ("geometry round trip", geometry),
        ("Laplacian frame consistency", laplacian),
        ("free-particle certification", certification),
        ("classical limit", classical_limit),
        ("quantum-number enumeration", enumeration),
        ("stationary factorization", stationary),
        ("CLI determinism and exit codes", cli_determinism),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match result {
            Ok(detail) => println!("criterion {:>2} PASS  {name}: {detail} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL  {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed in {:.1} s",
        criteria.len() - failed,
        criteria.len(),
        start.elapsed().as_secs_f64()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
