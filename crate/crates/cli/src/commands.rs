use std::fmt::Display;

use liekit::bch::{bch_heisenberg, bch_integral, bch_series, BchOrder};
use liekit::expmlog::{heisenberg_log, mat_exp, mat_log};
use liekit::groups::{is_member, polar_decompose_sl, GroupId};
use liekit::liealg::{
    ad_matrix, bracket, heis_basis, in_algebra, sl2_basis, sl3_basis, so3_basis, structure_constants, su2_basis,
    AlgebraId, Basis, StructureConstants,
};
use liekit::matcore::json::{complex_to_json, rational_to_json};
use liekit::matcore::GaussianRational;
use liekit::repcore::Representation;
use liekit::repsl2::{cg, sl2_decompose, sl2_irrep, sl2_poly_irrep};
use liekit::repsl3::{sl3_dim_formula, sl3_highest_weight_irrep_capped, weight_multiplicities, weights_to_csv};
use liekit::su2so3::{adjoint_to_so3, so3_lift};
use liekit::{BigRational, Complex64, Error, Scalar, Tolerance};
use serde_json::{json, Value};

use crate::input::{complex, rational, read_json, CliError, CliResult, Mat};
use crate::{BasisName, BchForm, Cli, Command, DecomposeCommand, DimCommand, Direction, Global, Model, RepCommand};

fn tolerance(g: &Global) -> CliResult<Tolerance> {
    let mut tol = Tolerance::default();
    if let Ok(v) = std::env::var("LIEKIT_TOL") {
        let t: f64 = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("LIEKIT_TOL is not a number: {v:?}")))?;
        tol = Tolerance::new(t, t);
    }
    if let Some(t) = g.tol {
        tol = Tolerance::new(t, t);
    }
    if let Some(a) = g.tol_abs {
        tol.abs = a;
    }
    if let Some(r) = g.tol_rel {
        tol.rel = r;
    }
    Ok(Tolerance::try_new(tol.abs, tol.rel)?)
}

fn render(v: &Value, pretty: bool) -> String {
    let s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    };
    s.expect("JSON values always serialise") + "\n"
}

fn mat_json(m: Mat) -> Value {
    match m {
        Mat::Exact(r) => rational_to_json(&r),
        Mat::Float(c) => complex_to_json(&c),
    }
}

fn pair(x: &str, y: &str) -> CliResult<(Mat, Mat)> {
    match (Mat::parse(x)?, Mat::parse(y)?) {
        (Mat::Exact(a), Mat::Exact(b)) => Ok((Mat::Exact(a), Mat::Exact(b))),
        (a, b) => Ok((Mat::Float(a.complex()), Mat::Float(b.complex()))),
    }
}

fn constants_json<T: Scalar>(c: &StructureConstants<T>, show: impl Fn(&T) -> String) -> Value {
    let d = c.dim();
    Value::Array(
        (0..d)
            .map(|i| {
                Value::Array(
                    (0..d)
                        .map(|j| Value::Array((0..d).map(|k| Value::String(show(c.get(i, j, k)))).collect()))
                        .collect(),
                )
            })
            .collect(),
    )
}

fn exact_string<T: Display>(x: &T) -> String {
    x.to_string()
}

fn gaussian_string(z: &GaussianRational) -> String {
    if Scalar::is_zero(&z.im) {
        z.re.to_string()
    } else {
        z.to_string()
    }
}

fn structconst(name: BasisName) -> CliResult<Value> {
    let (labels, constants) = match name {
        BasisName::Su2 => {
            let b = su2_basis();
            (b.labels.clone(), constants_json(&structure_constants(&b)?, gaussian_string))
        }
        other => {
            let b = rational_basis(other);
            (b.labels.clone(), constants_json(&structure_constants(&b)?, exact_string))
        }
    };
    Ok(json!({ "labels": labels, "constants": constants }))
}

fn rational_basis(name: BasisName) -> Basis<BigRational> {
    match name {
        BasisName::So3 => so3_basis(),
        BasisName::Sl2 => sl2_basis(),
        BasisName::Sl3 => sl3_basis(),
        BasisName::Heis => heis_basis(),
        BasisName::Su2 => unreachable!("su(2) basis is Gaussian"),
    }
}

fn complex_basis(name: BasisName) -> Basis<Complex64> {
    match name {
        BasisName::Su2 => su2_basis().map(|z| z.to_complex64()),
        other => rational_basis(other).map(|x| x.to_complex64()),
    }
}

fn bch(form: BchForm, order: u32, panels: usize, terms: usize, x: &str, y: &str) -> CliResult<Value> {
    Ok(match form {
        BchForm::Heis => match pair(x, y)? {
            (Mat::Exact(a), Mat::Exact(b)) => rational_to_json(&bch_heisenberg(&a, &b)?),
            (a, b) => complex_to_json(&bch_heisenberg(&a.complex(), &b.complex())?),
        },
        BchForm::Series => {
            let order = BchOrder::new(order)?;
            match pair(x, y)? {
                (Mat::Exact(a), Mat::Exact(b)) => rational_to_json(&bch_series(&a, &b, order)?),
                (a, b) => complex_to_json(&bch_series(&a.complex(), &b.complex(), order)?),
            }
        }
        BchForm::Integral => complex_to_json(&bch_integral(&complex(x)?, &complex(y)?, panels, terms, None)?),
    })
}

fn rep_json(r: &Representation<BigRational>) -> Value {
    r.to_json()
}

pub fn run(cli: &Cli) -> CliResult<String> {
    let tol = tolerance(&cli.global)?;
    let pretty = cli.global.pretty;
    let out = |v: Value| Ok(render(&v, pretty));
    match &cli.command {
        Command::Exp { x } => out(complex_to_json(&mat_exp(&complex(x)?, &Tolerance::series())?)),
        Command::Log { a } => out(complex_to_json(&mat_log(&complex(a)?, &Tolerance::series())?)),
        Command::Heislog { a } => out(rational_to_json(&heisenberg_log(&rational(a)?)?)),
        Command::Member { group, a } => {
            let g: GroupId = group.parse()?;
            out(json!(is_member(&complex(a)?, &g, &tol)?))
        }
        Command::Algebra { algebra, x } => {
            let a: AlgebraId = algebra.parse()?;
            out(json!(in_algebra(&complex(x)?, &a, &tol)?))
        }
        Command::Bracket { x, y } => out(match pair(x, y)? {
            (Mat::Exact(a), Mat::Exact(b)) => mat_json(Mat::Exact(bracket(&a, &b)?)),
            (a, b) => mat_json(Mat::Float(bracket(&a.complex(), &b.complex())?)),
        }),
        Command::Ad { basis, x } => {
            let b = complex_basis(*basis);
            out(json!({ "labels": b.labels, "matrix": complex_to_json(&ad_matrix(&complex(x)?, &b)?) }))
        }
        Command::Structconst { basis } => out(structconst(*basis)?),
        Command::Bch { form, order, panels, terms, x, y } => out(bch(*form, *order, *panels, *terms, x, y)?),
        Command::Su2so3 { direction, m } => {
            let m = complex(m)?;
            match direction {
                Direction::Fwd => out(complex_to_json(&adjoint_to_so3(&m, &tol)?)),
                Direction::Lift => {
                    let (u, v) = so3_lift(&m, &tol)?;
                    out(json!([complex_to_json(&u), complex_to_json(&v)]))
                }
            }
        }
        Command::Rep { which } => match which {
            RepCommand::Sl2 { m, model } => {
                let r = if *model == Model::Poly { sl2_poly_irrep(*m) } else { sl2_irrep(*m) };
                out(rep_json(&r))
            }
            RepCommand::Sl3 { m1, m2, weights_csv, cap } => {
                let r = sl3_highest_weight_irrep_capped(*m1, *m2, *cap)?;
                match weights_csv.as_deref() {
                    Some("-") => Ok(weights_to_csv(&weight_multiplicities(&r)?)),
                    Some(path) => {
                        std::fs::write(path, weights_to_csv(&weight_multiplicities(&r)?))
                            .map_err(|e| CliError::Io(format!("{path}: {e}")))?;
                        out(rep_json(&r))
                    }
                    None => out(rep_json(&r)),
                }
            }
        },
        Command::Decompose { which: DecomposeCommand::Sl2 { rep } } => {
            let r = Representation::<BigRational>::from_json(&read_json(rep)?)?;
            out(json!(sl2_decompose(&r)?))
        }
        Command::Cg { m, n } => out(json!(cg(*m, *n)?)),
        Command::Dim { which: DimCommand::Sl3 { m1, m2 } } => Ok(format!("{}\n", sl3_dim_formula(*m1, *m2))),
        Command::Polar { a } => {
            let (r, h) = polar_decompose_sl(&complex(a)?, &tol)?;
            out(json!({ "R": complex_to_json(&r), "H": complex_to_json(&h) }))
        }
    }
}
