//! Acceptance suite: one PASS/FAIL line per criterion.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;

use liekit::bch::{bch_heisenberg, bch_integral, bch_series, BchOrder};
use liekit::expmlog::{exp_directional_derivative, in_exp_image_sl2r, lie_product_step, mat_exp, mat_exp_nilpotent, mat_log};
use liekit::groups::is_member;
use liekit::liealg::{
    ad_matrix, bracket, combine, real_basis_complex, sl3_basis, so3_basis, structure_constants, su2_basis, AlgebraId,
};
use liekit::matcore::{determinant, inverse};
use liekit::repcore::{tensor_product, verify_relations};
use liekit::repsl2::{sl2_decompose, sl2_intertwiner, sl2_irrep, sl2_poly_irrep};
use liekit::repsl3::{
    sl3_dim_formula, sl3_highest_weight_irrep, sl3_roots, weight_multiplicities, weyl_invariance_check,
};
use liekit::su2so3::{adjoint_to_so3, so3_lift};
use liekit::{BigRational, Complex64, ComplexMatrix, RationalMatrix, Scalar, Tolerance};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const CLOSED_FORM_TOL: f64 = 1e-12;
const DET_TRACE_REL_TOL: f64 = 1e-10;
const LOG_INVERSION_TOL: f64 = 1e-9;
const LIE_PRODUCT_FINAL: f64 = 0.05;
const DERIVATIVE_TOL: f64 = 1e-8;
const FD_STEP: f64 = 1e-5;
const BCH_MIN_EXPONENT: f64 = 3.5;
const BCH_INTEGRAL_TOL: f64 = 1e-8;
const SO3_MEMBERSHIP_TOL: f64 = 1e-12;
const HOMOMORPHISM_TOL: f64 = 1e-10;
const LIFT_TOL: f64 = 1e-9;
const GROUP_MEMBERSHIP_TOL: f64 = 1e-8;

type Outcome = Result<(), String>;

fn check(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

fn q(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn real(rows: &[&[f64]]) -> ComplexMatrix {
    ComplexMatrix::real_rows(rows)
}

fn diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    (a - b).frobenius_norm()
}

fn max_entry_diff(a: &ComplexMatrix, b: &ComplexMatrix) -> f64 {
    a.iter().zip(b.iter()).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

/// Random complex `n x n` matrix with Frobenius norm uniform in `(0, r]`.
fn random_matrix(rng: &mut ChaCha8Rng, n: usize, r: f64) -> ComplexMatrix {
    let m = ComplexMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)));
    let target = rng.gen_range(0.01..=r);
    m.scale_real(target / m.frobenius_norm())
}

fn random_su2_element(rng: &mut ChaCha8Rng, r: f64) -> ComplexMatrix {
    let basis: Vec<ComplexMatrix> = su2_basis().elements.iter().map(|e| e.to_complex()).collect();
    let coeffs: Vec<f64> = (0..3).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let x = combine(&basis, &coeffs).unwrap();
    let target = rng.gen_range(0.01..=r);
    x.scale_real(target / x.frobenius_norm())
}

fn exp(x: &ComplexMatrix) -> ComplexMatrix {
    mat_exp(x, &Tolerance::series()).unwrap()
}

fn criterion_1() -> Outcome {
    for a in [0.3, std::f64::consts::FRAC_PI_2, 2.0] {
        let got = exp(&real(&[&[0.0, -a], &[a, 0.0]]));
        let want = real(&[&[a.cos(), -a.sin()], &[a.sin(), a.cos()]]);
        let e = max_entry_diff(&got, &want);
        check(e <= CLOSED_FORM_TOL, || format!("rotation a={a}: error {e:e}"))?;
    }
    let (a, b, cc) = (q(3, 2), q(-5, 7), q(2, 3));
    let x = RationalMatrix::from_rows(vec![
        vec![q(0, 1), a.clone(), b.clone()],
        vec![q(0, 1), q(0, 1), cc.clone()],
        vec![q(0, 1), q(0, 1), q(0, 1)],
    ]);
    let want = RationalMatrix::from_rows(vec![
        vec![q(1, 1), a.clone(), b + a * &cc / q(2, 1)],
        vec![q(0, 1), q(1, 1), cc],
        vec![q(0, 1), q(0, 1), q(1, 1)],
    ]);
    check(mat_exp_nilpotent(&x).unwrap() == want, || "nilpotent case differs".into())?;
    for (a, b) in [(0.5, 2.0), (-1.2, 0.3)] {
        let got = exp(&real(&[&[a, b], &[0.0, a]]));
        let ea: f64 = f64::exp(a);
        let want = real(&[&[ea, ea * b], &[0.0, ea]]);
        let e = max_entry_diff(&got, &want);
        check(e <= CLOSED_FORM_TOL * ea.max(1.0) * (1.0 + b.abs()), || format!("a={a} b={b}: error {e:e}"))?;
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for i in 0..100 {
        let n = 2 + i % 4;
        let x = random_matrix(&mut rng, n, 2.0);
        let det = determinant(&exp(&x)).unwrap();
        let et = x.trace().exp();
        let rel = (det - et).norm() / et.norm();
        check(rel <= DET_TRACE_REL_TOL, || format!("sample {i}: relative error {rel:e}"))?;
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for i in 0..100 {
        let n = 2 + i % 4;
        let x = random_matrix(&mut rng, n, 0.599);
        let back = mat_log(&exp(&x), &Tolerance::series()).unwrap();
        let e = diff(&back, &x);
        check(e <= LOG_INVERSION_TOL, || format!("sample {i}: error {e:e}"))?;
    }
    for a in [ComplexMatrix::identity(2).scale_real(2.0), real(&[&[1.0, 1.0], &[0.0, 1.0]]), real(&[&[0.0, 0.0], &[0.0, 0.0]])] {
        check(mat_log(&a, &Tolerance::series()).is_err(), || format!("log accepted |A-I| >= 1: {a:?}"))?;
    }
    Ok(())
}

fn criterion_4() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for i in 0..20 {
        let n = 2 + i % 3;
        let (x, y) = (random_matrix(&mut rng, n, 0.5), random_matrix(&mut rng, n, 0.5));
        let target = exp(&(&x + &y));
        let errs: Vec<f64> = [4, 8, 16, 32, 64].iter().map(|&m| diff(&lie_product_step(&x, &y, m).unwrap(), &target)).collect();
        check(errs.windows(2).all(|w| w[1] < w[0]), || format!("pair {i}: not monotone {errs:?}"))?;
        check(errs[4] <= LIE_PRODUCT_FINAL, || format!("pair {i}: error at m=64 is {}", errs[4]))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for i in 0..50 {
        let n = 2 + i % 2;
        let (x, y) = (random_matrix(&mut rng, n, 0.3), random_matrix(&mut rng, n, 0.3));
        let d = exp_directional_derivative(&x, &y, 20).unwrap();
        let fd = (&exp(&(&x + &y.scale_real(FD_STEP))) - &exp(&(&x - &y.scale_real(FD_STEP)))).scale_real(0.5 / FD_STEP);
        let e = diff(&d, &fd);
        check(e <= DERIVATIVE_TOL, || format!("pair {i}: error {e:e}"))?;
    }
    Ok(())
}

fn heis_exp(x: &RationalMatrix) -> RationalMatrix {
    let (a, b, cc) = (x[(0, 1)].clone(), x[(0, 2)].clone(), x[(1, 2)].clone());
    RationalMatrix::from_rows(vec![
        vec![q(1, 1), a.clone(), b + a * &cc / q(2, 1)],
        vec![q(0, 1), q(1, 1), cc],
        vec![q(0, 1), q(0, 1), q(1, 1)],
    ])
}

/// Closed-form logarithm on `SU(2)`: `U = cos t I + sin t N` with `N^2 = -I`.
fn su2_log(u: &ComplexMatrix) -> ComplexMatrix {
    let ct = (u.trace().re / 2.0).clamp(-1.0, 1.0);
    let t = ct.acos();
    let s = t.sin();
    let n = &(u - &ComplexMatrix::identity(2).scale_real(ct));
    if s.abs() < 1e-300 {
        return ComplexMatrix::zeros(2, 2);
    }
    n.scale_real(t / s)
}

fn criterion_6() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let heis = |rng: &mut ChaCha8Rng| {
        let mut v = || q(rng.gen_range(-20..=20), rng.gen_range(1..=9));
        RationalMatrix::from_rows(vec![
            vec![q(0, 1), v(), v()],
            vec![q(0, 1), q(0, 1), v()],
            vec![q(0, 1), q(0, 1), q(0, 1)],
        ])
    };
    for i in 0..50 {
        let (x, y) = (heis(&mut rng), heis(&mut rng));
        let z = bch_heisenberg(&x, &y).unwrap();
        check(&heis_exp(&x) * &heis_exp(&y) == heis_exp(&z), || format!("Heisenberg pair {i} differs"))?;
    }

    let x0 = real(&[&[0.3, 0.8, -0.2], &[0.1, -0.5, 0.4], &[0.7, 0.2, 0.1]]);
    let y0 = ComplexMatrix::from_fn(3, 3, |i, j| c(((i * 3 + j) as f64 * 0.37).sin(), ((i + 2 * j) as f64 * 0.21).cos() * 0.3));
    let (x0, y0) = (x0.scale_real(1.0 / x0.frobenius_norm()), y0.scale_real(1.0 / y0.frobenius_norm()));
    let scales = [0.2, 0.1, 0.05];
    let res: Vec<f64> = scales
        .iter()
        .map(|&s| {
            let (x, y) = (x0.scale_real(s), y0.scale_real(s));
            let direct = mat_log(&(&exp(&x) * &exp(&y)), &Tolerance::series()).unwrap();
            diff(&direct, &bch_series(&x, &y, BchOrder::new(3).unwrap()).unwrap())
        })
        .collect();
    let lx: Vec<f64> = scales.iter().map(|s| s.ln()).collect();
    let ly: Vec<f64> = res.iter().map(|r| r.ln()).collect();
    let (mx, my) = (lx.iter().sum::<f64>() / 3.0, ly.iter().sum::<f64>() / 3.0);
    let slope = lx.iter().zip(&ly).map(|(a, b)| (a - mx) * (b - my)).sum::<f64>()
        / lx.iter().map(|a| (a - mx).powi(2)).sum::<f64>();
    check(slope >= BCH_MIN_EXPONENT, || format!("fitted exponent {slope:.3} from residuals {res:?}"))?;

    let basis = su2_basis().map(|z| z.to_complex64());
    for i in 0..20 {
        let (x, y) = (random_su2_element(&mut rng, 0.2), random_su2_element(&mut rng, 0.2));
        let z = bch_integral(&x, &y, 64, 30, Some(&basis)).unwrap();
        let oracle = su2_log(&(&exp(&x) * &exp(&y)));
        let e = diff(&z, &oracle);
        check(e <= BCH_INTEGRAL_TOL, || format!("su(2) pair {i}: error {e:e}"))?;
    }
    Ok(())
}

fn random_su2(rng: &mut ChaCha8Rng) -> ComplexMatrix {
    let v: Vec<f64> = (0..4).map(|_| rng.gen_range(-1.0..1.0)).collect();
    let n = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let (a, b) = (c(v[0] / n, v[1] / n), c(v[2] / n, v[3] / n));
    ComplexMatrix::from_rows(vec![vec![a, -b.conj()], vec![b, a.conj()]])
}

fn criterion_7() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let tol = Tolerance::default();
    let so3: liekit::groups::GroupId = "SO(3)".parse().unwrap();
    for i in 0..50 {
        let (u, v) = (random_su2(&mut rng), random_su2(&mut rng));
        let (pu, pv) = (adjoint_to_so3(&u, &tol).unwrap(), adjoint_to_so3(&v, &tol).unwrap());
        check(is_member(&pu, &so3, &Tolerance::new(SO3_MEMBERSHIP_TOL, 0.0)).unwrap(), || format!("pair {i}: not in SO(3)"))?;
        let e = diff(&adjoint_to_so3(&(&u * &v), &tol).unwrap(), &(&pu * &pv));
        check(e <= HOMOMORPHISM_TOL, || format!("pair {i}: homomorphism error {e:e}"))?;
        check(adjoint_to_so3(&-&u, &tol).unwrap() == pu, || format!("pair {i}: phi(-U) != phi(U)"))?;
        let (p, m) = so3_lift(&pu, &tol).unwrap();
        let e = diff(&p, &u).min(diff(&m, &u));
        check(e <= LIFT_TOL, || format!("pair {i}: lift error {e:e}"))?;
    }
    let (su2, so3b) = (su2_basis(), so3_basis());
    for k in 0..3 {
        check(ad_matrix(&su2.elements[k], &su2).unwrap() == so3b.elements[k].to_gaussian(), || format!("ad E{} != F{}", k + 1, k + 1))?;
    }
    Ok(())
}

fn peel(mut w: BTreeMap<i64, usize>) -> Vec<u32> {
    let mut out = Vec::new();
    while let Some((&top, _)) = w.iter().next_back() {
        out.push(top as u32);
        let mut l = top;
        while l >= -top {
            let e = w.get_mut(&l).unwrap();
            *e -= 1;
            if *e == 0 {
                w.remove(&l);
            }
            l -= 2;
        }
    }
    out
}

fn criterion_8() -> Outcome {
    let b = liekit::liealg::sl2_basis();
    for m in 0..=8 {
        check(verify_relations(&sl2_irrep(m), &b).unwrap(), || format!("relations fail for m={m}"))?;
    }
    for m in 0..=6 {
        let t = sl2_intertwiner(m);
        let ti = inverse(&t).unwrap();
        for (p, a) in sl2_poly_irrep(m).generators().iter().zip(sl2_irrep(m).generators()) {
            check(&(&ti * p) * &t == *a, || format!("intertwiner fails for m={m}"))?;
        }
    }
    for m in 0..=4u32 {
        for n in 0..=4u32 {
            let got = sl2_decompose(&tensor_product(&sl2_irrep(m), &sl2_irrep(n)).unwrap()).unwrap();
            let expect: Vec<u32> = (0..=m.min(n)).map(|j| m + n - 2 * j).collect();
            let mut sums = BTreeMap::new();
            for a in 0..=m as i64 {
                for bb in 0..=n as i64 {
                    *sums.entry(m as i64 - 2 * a + n as i64 - 2 * bb).or_insert(0) += 1;
                }
            }
            check(got == expect, || format!("V{m} x V{n}: got {got:?}"))?;
            check(peel(sums) == expect, || format!("V{m} x V{n}: weight oracle disagrees"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    let b = sl3_basis();
    let table: [(&str, &str, &[(i64, &str)]); 28] = [
        ("H1", "H2", &[]),
        ("H1", "X1", &[(2, "X1")]),
        ("H1", "Y1", &[(-2, "Y1")]),
        ("H2", "X1", &[(-1, "X1")]),
        ("H2", "Y1", &[(1, "Y1")]),
        ("H1", "X2", &[(-1, "X2")]),
        ("H1", "Y2", &[(1, "Y2")]),
        ("H2", "X2", &[(2, "X2")]),
        ("H2", "Y2", &[(-2, "Y2")]),
        ("H1", "X3", &[(1, "X3")]),
        ("H1", "Y3", &[(-1, "Y3")]),
        ("H2", "X3", &[(1, "X3")]),
        ("H2", "Y3", &[(-1, "Y3")]),
        ("X1", "Y1", &[(1, "H1")]),
        ("X2", "Y2", &[(1, "H2")]),
        ("X3", "Y3", &[(1, "H1"), (1, "H2")]),
        ("X1", "X2", &[(1, "X3")]),
        ("Y1", "Y2", &[(-1, "Y3")]),
        ("X1", "Y2", &[]),
        ("X2", "Y1", &[]),
        ("X1", "X3", &[]),
        ("Y1", "Y3", &[]),
        ("X2", "X3", &[]),
        ("Y2", "Y3", &[]),
        ("X2", "Y3", &[(1, "Y1")]),
        ("X3", "Y2", &[(1, "X1")]),
        ("X1", "Y3", &[(-1, "Y2")]),
        ("X3", "Y1", &[(-1, "X2")]),
    ];
    for (x, y, rhs) in table {
        let lhs = bracket(b.get(x).unwrap(), b.get(y).unwrap()).unwrap();
        let want = rhs.iter().fold(RationalMatrix::zeros(3, 3), |acc, (k, z)| &acc + &b.get(z).unwrap().scale(&q(*k, 1)));
        check(lhs == want, || format!("[{x},{y}] differs"))?;
    }
    let sc = structure_constants(&b).unwrap();
    let exact = Tolerance::new(0.0, 0.0);
    check(sc.is_skew(&exact) && sc.satisfies_jacobi(&exact), || "skew or Jacobi fails".into())?;
    let expect = [((2, -1), "X1"), ((-1, 2), "X2"), ((1, 1), "X3"), ((-2, 1), "Y1"), ((1, -2), "Y2"), ((-1, -1), "Y3")];
    let got: Vec<((i64, i64), &str)> = sl3_roots().iter().map(|r| (r.weight, r.vector_label)).collect();
    check(got == expect, || format!("roots {got:?}"))?;
    for (w, l) in expect {
        let z = b.get(l).unwrap();
        check(
            bracket(b.get("H1").unwrap(), z).unwrap() == z.scale(&q(w.0, 1))
                && bracket(b.get("H2").unwrap(), z).unwrap() == z.scale(&q(w.1, 1)),
            || format!("ad H eigenvalues of {l}"),
        )?;
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let mut dims = Vec::new();
    for s in 0..=4u32 {
        for m1 in 0..=s {
            let m2 = s - m1;
            let rep = sl3_highest_weight_irrep(m1, m2).unwrap();
            check(rep.dim() as u64 == sl3_dim_formula(m1, m2), || format!("({m1},{m2}): dim {}", rep.dim()))?;
            check(weyl_invariance_check(&rep).unwrap(), || format!("({m1},{m2}): Weyl invariance fails"))?;
            let v = RationalMatrix::column((0..rep.dim()).map(|i| q((i == 0) as i64, 1)).collect());
            let g = |l: &str| rep.generator(l).unwrap();
            check(
                (g("X1") * &v).is_zero()
                    && (g("X2") * &v).is_zero()
                    && g("H1") * &v == v.scale(&q(m1 as i64, 1))
                    && g("H2") * &v == v.scale(&q(m2 as i64, 1)),
                || format!("({m1},{m2}): cyclic vector conditions fail"),
            )?;
            dims.push(rep.dim());
        }
    }
    dims.sort_unstable();
    check(dims == [1, 3, 3, 6, 6, 8, 10, 10, 15, 15, 15, 15, 24, 24, 27], || format!("grid dims {dims:?}"))?;
    let m = weight_multiplicities(&sl3_highest_weight_irrep(1, 1).unwrap()).unwrap();
    check(m.get(&(0, 0)) == Some(&2), || "(0,0) multiplicity is not 2".into())?;
    for r in sl3_roots() {
        check(m.get(&r.weight) == Some(&1), || format!("root {:?} multiplicity", r.weight))?;
    }
    check(m.len() == 7, || "(1,1) has extra weights".into())
}

const CATALOG: [&str; 18] = [
    "gl(2,R)", "gl(2,C)", "sl(2,R)", "sl(3,C)", "so(3)", "so(3,C)", "so(1,1)", "so(3,1)", "u(2)", "su(2)", "su(3)",
    "sp(1,R)", "sp(2,R)", "sp(1,C)", "sp(1)", "heis", "e(3)", "p(3,1)",
];

fn criterion_11() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let tol = Tolerance::new(GROUP_MEMBERSHIP_TOL, 0.0);
    for name in CATALOG {
        let a: AlgebraId = name.parse().unwrap();
        let g = a.group();
        let basis = real_basis_complex(&a).unwrap();
        for i in 0..20 {
            let coeffs: Vec<f64> = (0..basis.len()).map(|_| rng.gen_range(-1.0..1.0)).collect();
            let e = exp(&combine(&basis, &coeffs).unwrap());
            check(is_member(&e, &g, &tol).unwrap(), || format!("{name}: sample {i} not in {g}"))?;
            let n = e.rows();
            let bad = if name == "gl(2,C)" {
                let mut z = e.clone();
                for j in 0..n {
                    z[(0, j)] = c(0.0, 0.0);
                }
                z
            } else {
                &e + &ComplexMatrix::from_fn(n, n, |_, _| c(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))).scale_real(1e-3)
            };
            check(!is_member(&bad, &g, &tol).unwrap(), || format!("{name}: perturbed sample {i} accepted by {g}"))?;
        }
    }
    Ok(())
}

fn criterion_12() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let tol = Tolerance::default();
    for i in 0..200 {
        let (a, b, cc) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
        let x = real(&[&[a, b], &[cc, -a]]);
        let x = x.scale_real(rng.gen_range(0.01..=3.0) / x.frobenius_norm());
        check(in_exp_image_sl2r(&exp(&x), &tol).unwrap(), || format!("sample {i} rejected"))?;
    }
    check(!in_exp_image_sl2r(&real(&[&[-2.0, 0.0], &[0.0, -0.5]]), &tol).unwrap(), || "diag(-2,-1/2) accepted".into())
}

fn criterion_13() -> Outcome {
    let run = |args: &[&str]| Command::new(env!("CARGO_BIN_EXE_liekit")).args(args).env_remove("LIEKIT_TOL").output().unwrap();
    let o = run(&["dim", "sl3", "1", "1"]);
    check(o.status.success() && o.stdout == b"8\n", || format!("dim sl3 1 1 printed {:?}", String::from_utf8_lossy(&o.stdout)))?;
    let o = run(&["rep", "sl3", "1", "1", "--weights-csv", "-"]);
    check(o.stdout == include_bytes!("golden/sl3_1_1_weights.csv"), || "weight CSV differs from golden".into())?;
    let o = run(&["log", r#"{"rows":1,"cols":1,"re":[5]}"#]);
    check(o.status.code() == Some(1) && o.stderr == include_bytes!("golden/error_log_out_of_domain.json"), || {
        format!("error object differs: {}", String::from_utf8_lossy(&o.stderr))
    })?;
    let v: serde_json::Value = serde_json::from_slice(&run(&["rep", "sl3", "9", "0"]).stderr).map_err(|e| e.to_string())?;
    let keys: Vec<&String> = v.as_object().map(|o| o.keys().collect()).unwrap_or_default();
    check(keys == ["detail", "error"] && v["error"] == "resource", || format!("error object {v}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 13] = [
        ("closed-form exponentials", criterion_1),
        ("det(exp X) = exp(trace X)", criterion_2),
        ("log inverts exp", criterion_3),
        ("Lie product formula", criterion_4),
        ("derivative of exp", criterion_5),
        ("Baker-Campbell-Hausdorff", criterion_6),
        ("SU(2) -> SO(3) double cover", criterion_7),
        ("sl(2,C) representations", criterion_8),
        ("sl(3,C) structure", criterion_9),
        ("sl(3,C) representations", criterion_10),
        ("group/algebra consistency", criterion_11),
        ("SL(2,R) exponential image", criterion_12),
        ("CLI golden files", criterion_13),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_else(|| "panic".into()))
        });
        match outcome {
            Ok(()) => println!("PASS {:>2} {name}", i + 1),
            Err(e) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {e}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
