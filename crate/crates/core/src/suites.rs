//! Named verification suites, each producing one report.

use crate::flagext::{
    build_relations, classical_limit_check, derive_relations_via_omega, nakayama_report, ExteriorAlgebra, FlagError,
};
use crate::geometry::{
    acs_report, bigrading_report, classical_volume, connections_report, integrability_report, no_covariant_kahler,
};
use crate::qpair::{flag_generator, omega, TensorSquare};
use crate::report::VerificationReport;
use crate::rootdata::Letter;
use crate::scalar::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Acs,
    Bigrading,
    Classical,
    Confluence,
    Connections,
    Integrability,
    Kahler,
    Nakayama,
    Relations,
}

impl Suite {
    /// Every suite, sorted by name.
    pub const ALL: [Suite; 9] = [
        Suite::Acs,
        Suite::Bigrading,
        Suite::Classical,
        Suite::Confluence,
        Suite::Connections,
        Suite::Integrability,
        Suite::Kahler,
        Suite::Nakayama,
        Suite::Relations,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Acs => "acs",
            Suite::Bigrading => "bigrading",
            Suite::Classical => "classical",
            Suite::Confluence => "confluence",
            Suite::Connections => "connections",
            Suite::Integrability => "integrability",
            Suite::Kahler => "kahler",
            Suite::Nakayama => "nakayama",
            Suite::Relations => "relations",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Suites that only read the relations and so can run on the `q = 1`
    /// algebra.
    pub fn runs_at_q_one(self) -> bool {
        matches!(self, Suite::Bigrading | Suite::Classical | Suite::Confluence | Suite::Connections)
    }

    /// Runs the suite on `alg`; `classical` marks `alg` as the `q = 1`
    /// algebra, which drops checks of generic-q values.
    pub fn run(self, alg: &ExteriorAlgebra, classical: bool) -> Result<VerificationReport, FlagError> {
        let mut r = match self {
            Suite::Acs => acs_report(),
            Suite::Bigrading => bigrading_report(alg),
            Suite::Classical => {
                let mut r = classical_limit_check(alg)?;
                let v = classical_volume(alg)?;
                r.push("classical-volume", "cube of the coinvariant form at q = 1", "nonzero", v.to_string(), !v.is_zero());
                r
            }
            Suite::Confluence => {
                let mut r = alg.system().confluence_check();
                r.push_eq("hilbert-series", "irreducible words per degree", "[1, 6, 15, 20, 15, 6, 1]", format!("{:?}", alg.hilbert_series()));
                if !classical {
                    worked_triple(alg, &mut r);
                }
                r
            }
            Suite::Connections => connections_report(alg)?,
            Suite::Integrability => integrability_report(alg)?,
            Suite::Kahler => no_covariant_kahler(alg),
            Suite::Nakayama => nakayama_report(alg, "nakayama")?,
            Suite::Relations => {
                let mut r = derive_relations_via_omega(alg)?.report;
                omega_z22(&mut r);
                r
            }
        };
        r.suite = self.name().to_string();
        Ok(r)
    }
}

fn worked_triple(alg: &ExteriorAlgebra, r: &mut VerificationReport) {
    use Letter::*;
    let got = alg.normal_form(&alg.monomial(&[E1, E2, F1]));
    let target = &(-&alg.monomial(&[F1, E2, E1])) - &alg.monomial(&[F12, E2, E12]);
    r.push("worked-triple", "normal form of e1.e2.f1", alg.render(&target), alg.render(&got), got == target);
}

fn omega_z22(r: &mut VerificationReport) {
    let q = Coefficient::q_pow;
    let got = omega(&flag_generator(1, 2, 2).plus()).expect("zero counit");
    let expected = &(&TensorSquare::basis(Letter::F1, Letter::E1).scale(&-q(-1))
        + &TensorSquare::basis(Letter::E1, Letter::F1).scale(&-q(-3)))
        + &TensorSquare::basis(Letter::E12, Letter::F12).scale(&(&q(-5) * &Coefficient::nu()));
    r.push("omega-z1_22", "omega(z1_22 - 1)", expected.to_string(), got.to_string(), got == expected);
}

/// The algebra a suite runs on.
pub fn algebra(classical: bool) -> Result<ExteriorAlgebra, FlagError> {
    let a = build_relations();
    if classical {
        a.at_q_one()
    } else {
        Ok(a)
    }
}
