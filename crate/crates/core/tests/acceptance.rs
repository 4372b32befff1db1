//! One line per acceptance criterion. Exits nonzero if any criterion fails.

mod common;

use std::process::ExitCode;

use qflag_core::flagext::{build_relations, classical_limit_check, derive_relations_via_omega, nakayama_report, ExteriorAlgebra};
use qflag_core::geometry::{
    acs_report, bigrading_report, classical_volume, connection_space_dims, integrability_report, no_covariant_kahler,
};
use qflag_core::qpair::{flag_generator, omega};
use qflag_core::{Coefficient, Letter, TensorSquare, VerificationReport};

type Outcome = (bool, String);
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn failures(r: &VerificationReport) -> String {
    let bad: Vec<String> = r
        .checks
        .iter()
        .filter(|c| !c.pass)
        .map(|c| format!("{}: expected {}, got {}", c.id, c.expected, c.actual))
        .collect();
    if bad.is_empty() { format!("{} checks", r.checks.len()) } else { bad.join("; ") }
}

fn from_report(r: VerificationReport) -> Outcome {
    (r.overall, failures(&r))
}

fn dimensions(a: &ExteriorAlgebra) -> Outcome {
    let h = a.hilbert_series();
    let total: usize = h.iter().sum();
    (h == [1, 6, 15, 20, 15, 6, 1] && total == 64, format!("{h:?}, total {total}"))
}

fn confluence(a: &ExteriorAlgebra) -> Outcome {
    use Letter::*;
    let mut r = a.system().confluence_check();
    let got = a.normal_form(&a.monomial(&[E1, E2, F1]));
    let target = &(-&a.monomial(&[F1, E2, E1])) - &a.monomial(&[F12, E2, E12]);
    r.push("worked-triple", "e1.e2.f1", a.render(&target), a.render(&got), got == target);
    from_report(r)
}

fn derivation(a: &ExteriorAlgebra) -> Outcome {
    let mut r = derive_relations_via_omega(a).unwrap().report;
    let q = Coefficient::q_pow;
    let w = omega(&flag_generator(1, 2, 2).plus()).unwrap();
    let expected = &(&TensorSquare::basis(Letter::F1, Letter::E1).scale(&-q(-1))
        + &TensorSquare::basis(Letter::E1, Letter::F1).scale(&-q(-3)))
        + &TensorSquare::basis(Letter::E12, Letter::F12).scale(&(&q(-5) * &Coefficient::nu()));
    r.push("omega-z1_22", "omega(z1_22 - 1)", expected.to_string(), w.to_string(), w == expected);
    from_report(r)
}

fn nakayama(a: &ExteriorAlgebra) -> Outcome {
    from_report(nakayama_report(a, "nakayama").unwrap())
}

fn census() -> Outcome {
    from_report(acs_report())
}

fn bigrading(a: &ExteriorAlgebra) -> Outcome {
    from_report(bigrading_report(a))
}

fn integrability(a: &ExteriorAlgebra) -> Outcome {
    from_report(integrability_report(a).unwrap())
}

fn connections(a: &ExteriorAlgebra) -> Outcome {
    let d = connection_space_dims(a).unwrap();
    let oracle: usize = Letter::ALL
        .iter()
        .flat_map(|&x| Letter::ALL.iter().map(move |&y| (x, y)))
        .map(|(x, y)| {
            Letter::ALL
                .iter()
                .filter(|&&l| a.word_weight(&a.word(&[x, y])) == a.word_weight(&a.word(&[l])))
                .count()
        })
        .sum();
    let ok = (d.total, d.torsion_free, d.kernel_dim) == (12, 6, 21) && oracle == d.total;
    (ok, format!("total {}, torsion-free {}, ker {}, oracle {}", d.total, d.torsion_free, d.kernel_dim, oracle))
}

fn kahler(a: &ExteriorAlgebra) -> Outcome {
    from_report(no_covariant_kahler(a))
}

fn classical(a: &ExteriorAlgebra) -> Outcome {
    let mut r = classical_limit_check(a).unwrap();
    let v = classical_volume(a).unwrap();
    r.push("classical-volume", "cube at q = 1, c = (1, 1, 1)", "nonzero", v.to_string(), !v.is_zero());
    from_report(r)
}

fn oracle(a: &ExteriorAlgebra) -> Outcome {
    let rewrite: Vec<usize> = (0..=3).map(|k| a.basis(k).len()).collect();
    let gauss = common::quotient_dims(a, 3);
    (rewrite == gauss, format!("rewrite {rewrite:?}, elimination {gauss:?}"))
}

fn main() -> ExitCode {
    let a = build_relations();
    let criteria: Vec<Criterion> = vec![
        ("dimensions", Box::new(|| dimensions(&a))),
        ("confluence", Box::new(|| confluence(&a))),
        ("relation derivation", Box::new(|| derivation(&a))),
        ("nakayama", Box::new(|| nakayama(&a))),
        ("foacs census", Box::new(census)),
        ("bigrading", Box::new(|| bigrading(&a))),
        ("integrability", Box::new(|| integrability(&a))),
        ("connections", Box::new(|| connections(&a))),
        ("kahler obstruction", Box::new(|| kahler(&a))),
        ("classical limit", Box::new(|| classical(&a))),
        ("oracle equivalence", Box::new(|| oracle(&a))),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let (pass, detail) = run();
        failed += usize::from(!pass);
        println!("{} {:>2} {name}: {detail}", if pass { "PASS" } else { "FAIL" }, i + 1);
    }
    println!("{} of {} criteria pass", criteria.len() - failed, criteria.len());
    if failed == 0 { ExitCode::SUCCESS } else { ExitCode::FAILURE }
}
