use std::fmt::Write;
use std::path::Path;

use lgtypes::automorphism::orbit_equivalent;
use lgtypes::formula::enumerate_formulas;
use lgtypes::freeword::{semigroup_extend, verify_f2_counterexample, FreeWordError, SgWord};
use lgtypes::semantics::{ef_equivalent_with, val_member, Bounds, Comparison, FormulaClasses};
use lgtypes::text::{
    parse_algebra, parse_formula, parse_matrix, parse_point, parse_pool, parse_sgwords, parse_vectors,
};
use lgtypes::translate::translate;
use lgtypes::zlattice::{abelian_extend, eval_u_abelian, eval_v_abelian, smith_normal_form, IntVector, LatticeError};
use lgtypes::{FiniteAlgebra, Sort, Substitution, Var};

use crate::input::{parse_file, parse_inline, CliError};
use crate::{Command, Family};

type Report = Result<String, CliError>;

fn algebra(path: &Path) -> Result<FiniteAlgebra, CliError> {
    parse_file(path, parse_algebra)
}

fn second_algebra(first: &FiniteAlgebra, path: Option<&Path>) -> Result<FiniteAlgebra, CliError> {
    path.map_or_else(|| Ok(first.clone()), algebra)
}

fn pool(path: Option<&Path>) -> Result<Vec<Substitution>, CliError> {
    path.map_or_else(|| Ok(Vec::new()), |p| parse_file(p, parse_pool))
}

fn tuple(flag: &str, value: &str) -> Result<Vec<usize>, CliError> {
    Ok(parse_inline(flag, value, parse_point)?.values().to_vec())
}

fn execution(sequential: bool) -> lgtypes::Execution {
    if sequential {
        lgtypes::Execution::Sequential
    } else {
        lgtypes::Execution::Parallel
    }
}

fn boolean(b: bool) -> String {
    format!("{b}\n")
}

fn vectors_line(v: &[impl ToString]) -> String {
    v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

pub fn run(command: Command) -> Report {
    match command {
        Command::Eval {
            algebra: a,
            formula,
            point,
        } => {
            let h = algebra(&a)?;
            let u = parse_file(&formula, parse_formula)?;
            let p = parse_inline("--point", &point, parse_point)?;
            Ok(boolean(val_member(&h, &u, &p).map_err(CliError::input)?))
        }
        Command::LkerEq {
            algebra: a,
            algebra2,
            point,
            point2,
            max_length,
            max_term_depth,
            pool: pool_path,
            exec,
        } => {
            let h1 = algebra(&a)?;
            let h2 = second_algebra(&h1, algebra2.as_deref())?;
            let p1 = parse_inline("--point", &point, parse_point)?;
            let p2 = parse_inline("--point2", &point2, parse_point)?;
            if p1.sort() != p2.sort() {
                return Err(CliError::Input(format!(
                    "points of different sorts: {} and {}",
                    p1.sort(),
                    p2.sort()
                )));
            }
            let pool = pool(pool_path.as_deref())?;
            let bounds = Bounds::new(max_length, max_term_depth);
            let classes = FormulaClasses::build(&h1, &h2, p1.sort(), bounds, &pool, execution(exec.sequential))
                .map_err(CliError::input)?;
            Ok(match classes.separate(&p1, &p2).map_err(CliError::input)? {
                Comparison::Equivalent => boolean(true),
                Comparison::Separated(f) => format!("false\nseparator: {f}\n"),
            })
        }
        Command::TypeEq {
            algebra: a,
            tuple: t1,
            tuple2: t2,
        } => {
            let h = algebra(&a)?;
            let (a, b) = (tuple("--tuple", &t1)?, tuple("--tuple2", &t2)?);
            Ok(match orbit_equivalent(&h, &a, &b).map_err(CliError::input)? {
                Some(w) => {
                    let maps: Vec<String> = w.iter().enumerate().map(|(x, y)| format!("{x}->{y}")).collect();
                    format!("true\nautomorphism: {}\n", maps.join(" "))
                }
                None => boolean(false),
            })
        }
        Command::Ef {
            algebra: a,
            algebra2,
            tuple: t1,
            tuple2: t2,
            rounds,
            exec,
        } => {
            let h1 = algebra(&a)?;
            let h2 = second_algebra(&h1, algebra2.as_deref())?;
            let (a, b) = (tuple("--tuple", &t1)?, tuple("--tuple2", &t2)?);
            let won =
                ef_equivalent_with(&h1, &a, &h2, &b, rounds, execution(exec.sequential)).map_err(CliError::input)?;
            Ok(boolean(won))
        }
        Command::Translate { formula } => {
            let u = parse_file(&formula, parse_formula)?;
            Ok(format!("{}\n", translate(&u).map_err(CliError::input)?))
        }
        Command::Snf { matrix } => {
            let m = parse_file(&matrix, parse_matrix)?;
            let s = smith_normal_form(&m);
            Ok(format!(
                "U:\n{}D:\n{}V:\n{}invariants: {}\n",
                s.u,
                s.d,
                s.v,
                vectors_line(&s.invariants)
            ))
        }
        Command::AbelianExtend { from, to, dim } => {
            let a = parse_file(&from, parse_vectors)?;
            let b = parse_file(&to, parse_vectors)?;
            let n = match (dim, a.first().or(b.first())) {
                (Some(n), _) => n,
                (None, Some(v)) => v.len(),
                (None, None) => return Err(CliError::Input("both tuples are empty; pass --dim".into())),
            };
            match abelian_extend(n, &a, &b) {
                Ok(c) => Ok(format!(
                    "true\nPhi:\n{}det: {}\nrank: {}\nS:\n{}T:\n{}",
                    c.phi,
                    c.determinant,
                    c.rank(),
                    c.s,
                    c.t
                )),
                Err(e @ (LatticeError::NoForwardEndo | LatticeError::NoBackwardEndo)) => {
                    Ok(format!("false\nreason: {e}\n"))
                }
                Err(LatticeError::InternalCheckFailed(m)) => Err(CliError::Internal(m)),
                Err(e) => Err(CliError::input(e)),
            }
        }
        Command::AbelianFormula { kind, q, q0, tuple } => {
            let coefficients = |flag: &str, text: &str| -> Result<IntVector, CliError> {
                let rows = parse_inline(flag, text, parse_vectors)?;
                match <[IntVector; 1]>::try_from(rows) {
                    Ok([row]) => Ok(row),
                    Err(_) => Err(CliError::Input(format!("{flag} takes a single line of integers"))),
                }
            };
            let q = coefficients("--q", &q)?;
            let g = parse_file(&tuple, parse_vectors)?;
            let value = match kind {
                Family::U => eval_u_abelian(&q, &g),
                Family::V => {
                    let q0 = q0.ok_or_else(|| CliError::Input("the v family needs --q0".into()))?;
                    match coefficients("--q0", &q0)?.as_slice() {
                        [q0] => eval_v_abelian(&q, q0, &g),
                        _ => return Err(CliError::Input("--q0 takes a single integer".into())),
                    }
                }
            };
            Ok(boolean(value.map_err(CliError::input)?))
        }
        Command::SemigroupExtend { letters, from, to } => {
            let a = parse_inline("--from", &from, parse_sgwords)?;
            let b = parse_inline("--to", &to, parse_sgwords)?;
            let used = a.iter().chain(&b).flat_map(SgWord::letters).max().map_or(1, |&l| l + 1);
            let k = letters.unwrap_or(used);
            match semigroup_extend(k, &a, &b) {
                Ok(alpha) => {
                    let mut out = String::from("true\n");
                    for (x, y) in alpha.iter().enumerate() {
                        writeln!(out, "x{} -> x{}", x + 1, y + 1).expect("string write");
                    }
                    Ok(out)
                }
                Err(
                    e @ (FreeWordError::LengthMismatch { .. }
                    | FreeWordError::ConflictingAlignment { .. }
                    | FreeWordError::NotInjective { .. }),
                ) => Ok(format!("false\nreason: {e}\n")),
                Err(e) => Err(CliError::input(e)),
            }
        }
        Command::F2Verify => {
            let report = verify_f2_counterexample();
            report
                .ensure_passed()
                .map_err(|e| CliError::Internal(format!("{e}\n{report}")))?;
            Ok(report.to_string())
        }
        Command::Enumerate {
            algebra: a,
            sort,
            max_length,
            max_term_depth,
            pool: pool_path,
            limit,
        } => {
            let h = algebra(&a)?;
            let sort = Sort::new(sort.split_whitespace().map(Var::new)).map_err(CliError::input)?;
            let pool = pool(pool_path.as_deref())?;
            for s in &pool {
                for t in s.images() {
                    h.signature().check_term(t).map_err(CliError::input)?;
                }
            }
            let mut out = String::new();
            let stream = enumerate_formulas(&sort, h.signature(), max_length, max_term_depth, &pool);
            for f in stream.take(limit.unwrap_or(usize::MAX)) {
                writeln!(out, "{f}").expect("string write");
            }
            Ok(out)
        }
    }
}
