//! Almost-complex structures on the cotangent space, bigradings,
//! integrability, connection counts and the Kahler obstruction.

use std::collections::BTreeMap;

use crate::flagext::{Bidegrees, ExteriorAlgebra, FlagError};
use crate::linalg::{Echelon, SparseVec};
use crate::ncpoly::{NCPolynomial, Word};
use crate::qpair::{coset, flag_generators, omega, right_act, right_act_deg2, CotangentVector, GeneratorWord, TensorSquare};
use crate::report::VerificationReport;
use crate::rootdata::{generator_weight, Letter, Root};
use crate::scalar::{Coefficient, Symbol};

/// A splitting of the six letters into holomorphic and anti-holomorphic
/// halves.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Foacs {
    pub holomorphic: Vec<Letter>,
    pub anti: Vec<Letter>,
}

impl Foacs {
    /// The structure with holomorphic letters `h`; the rest are
    /// anti-holomorphic.
    pub fn new(h: &[Letter]) -> Self {
        let mut holomorphic = h.to_vec();
        holomorphic.sort();
        holomorphic.dedup();
        let anti = Letter::ALL.into_iter().filter(|l| !holomorphic.contains(l)).collect();
        Self { holomorphic, anti }
    }

    pub fn opposite(&self) -> Self {
        Self { holomorphic: self.anti.clone(), anti: self.holomorphic.clone() }
    }

    pub fn is_holomorphic(&self, l: Letter) -> bool {
        self.holomorphic.contains(&l)
    }

    /// `e_g` is holomorphic exactly when `f_g` is not.
    pub fn is_star_swapped(&self) -> bool {
        Letter::ALL.into_iter().all(|l| self.is_holomorphic(l) != self.is_holomorphic(l.star()))
    }

    pub fn bidegrees(&self) -> Bidegrees {
        Letter::ALL
            .into_iter()
            .map(|l| (l, if self.is_holomorphic(l) { (1, 0) } else { (0, 1) }))
            .collect()
    }

    pub fn name(&self) -> String {
        let names: Vec<&str> = self.holomorphic.iter().map(|l| l.name()).collect();
        format!("H={{{}}}", names.join(","))
    }

    /// `I`, `II`, their opposites `I-op`, `II-op`, or the full name.
    pub fn label(&self) -> String {
        let (one, two) = (structure_one(), structure_two());
        match self {
            s if *s == one => "I".into(),
            s if *s == two => "II".into(),
            s if *s == one.opposite() => "I-op".into(),
            s if *s == two.opposite() => "II-op".into(),
            s => s.name(),
        }
    }
}

/// Holomorphic letters are the three `e`s.
pub fn structure_one() -> Foacs {
    Foacs::new(&[Letter::E1, Letter::E2, Letter::E12])
}

/// The mixed structure found by the census: `f1, f12, e2` holomorphic.
pub fn structure_two() -> Foacs {
    Foacs::new(&[Letter::F1, Letter::F12, Letter::E2])
}

/// The mixed splitting `f1, e2, e12`, which is star-swapped but not closed
/// under the right action.
pub fn structure_two_listed() -> Foacs {
    Foacs::new(&[Letter::F1, Letter::E2, Letter::E12])
}

/// First flag generator and letter of `set` whose image leaves the span of
/// `set`.
pub fn module_closure_witness(set: &[Letter]) -> Option<(String, Letter, CotangentVector)> {
    let gens = flag_generators();
    for &l in set {
        for (name, z) in &gens {
            let img = right_act(&CotangentVector::basis(l), z);
            if img.support().iter().any(|m| !set.contains(m)) {
                return Some((name.clone(), l, img));
            }
        }
    }
    None
}

/// All star-swapped splittings whose halves are right submodules, in
/// increasing order.
pub fn enumerate_foacs() -> Vec<Foacs> {
    let mut out = Vec::new();
    for mask in 0u32..64 {
        let h: Vec<Letter> = Letter::ALL.into_iter().filter(|l| mask >> l.rank() & 1 == 1).collect();
        let s = Foacs::new(&h);
        if s.is_star_swapped()
            && module_closure_witness(&s.holomorphic).is_none()
            && module_closure_witness(&s.anti).is_none()
        {
            out.push(s);
        }
    }
    out.sort();
    out
}

/// Census of structures: survivors, opposites and the two named ones.
pub fn acs_report() -> VerificationReport {
    let mut report = VerificationReport::new("acs");
    let all = enumerate_foacs();
    report.push_eq("foacs-count", "covariant almost-complex structures", 4, all.len());
    let closed = all.iter().all(|s| all.contains(&s.opposite()));
    report.push_eq("opposite-closed", "census is closed under opposites", true, closed);
    let mut classes: Vec<Foacs> = all.iter().map(|s| s.clone().min(s.opposite())).collect();
    classes.sort();
    classes.dedup();
    report.push_eq("classes-up-to-opposite", "two structures up to opposites", 2, classes.len());
    report.push_eq("structure-one-present", "all-e structure survives", true, all.contains(&structure_one()));
    let listed = structure_two_listed();
    let witness = module_closure_witness(&listed.holomorphic)
        .or_else(|| module_closure_witness(&listed.anti))
        .map_or("closed".to_string(), |(z, l, v)| format!("{l} . {z} = {v}"));
    report.push(
        "structure-two-present",
        "mixed structure f1, e2, e12 survives",
        format!("{} survives", listed.name()),
        if all.contains(&listed) { format!("{} survives", listed.name()) } else { format!("not closed: {witness}") },
        all.contains(&listed),
    );
    report.push_eq(
        "mixed-structure-present",
        "mixed structure f1, f12, e2 survives",
        true,
        all.contains(&structure_two()),
    );
    report
}

/// Bidegree dimension table `dims[a][b]` by irreducible-word count.
pub fn bidegree_table(alg: &ExteriorAlgebra, s: &Foacs) -> [[usize; 4]; 4] {
    let mut a = alg.clone();
    a.set_bidegree(s.bidegrees());
    let mut t = [[0; 4]; 4];
    for k in 0..=6 {
        for w in a.basis(k) {
            let (x, y) = a.word_bidegree(&w).expect("bidegree set");
            t[x as usize][y as usize] += 1;
        }
    }
    t
}

fn binom3(k: usize) -> usize {
    [1, 3, 3, 1][k]
}

/// Bihomogeneity of every rule and the bidegree dimension table.
pub fn check_bigrading(alg: &ExteriorAlgebra, s: &Foacs) -> (VerificationReport, [[usize; 4]; 4]) {
    let mut report = VerificationReport::new("bigrading");
    let mut a = alg.clone();
    a.set_bidegree(s.bidegrees());
    let bad: Vec<String> = a
        .system()
        .rules()
        .iter()
        .filter(|r| {
            let d = a.word_bidegree(&r.lhs());
            r.rhs().terms().any(|(w, _)| a.word_bidegree(w) != d)
        })
        .map(|r| format!("{} -> {}", a.render_word(&r.lhs()), a.render(r.rhs())))
        .collect();
    let n = a.system().rules().len();
    report.push(
        format!("bihomogeneous-{}", s.label()),
        "relations are bihomogeneous",
        format!("{n} of {n}"),
        if bad.is_empty() { format!("{n} of {n}") } else { format!("broken: {}", bad.join("; ")) },
        bad.is_empty(),
    );
    let table = bidegree_table(alg, s);
    let expected: [[usize; 4]; 4] = std::array::from_fn(|i| std::array::from_fn(|j| binom3(i) * binom3(j)));
    report.push_eq(
        format!("bidegree-dims-{}", s.label()),
        "bidegree dimensions factorise",
        format!("{expected:?}"),
        format!("{table:?}"),
    );
    (report, table)
}

/// Bigrading checks for the all-e structure and the mixed survivor.
pub fn bigrading_report(alg: &ExteriorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("bigrading");
    for s in [structure_one(), structure_two()] {
        report.absorb(check_bigrading(alg, &s).0);
    }
    report
}

fn names(ls: &[Letter]) -> String {
    ls.iter().map(|l| l.name()).collect::<Vec<_>>().join(",")
}

fn project(t: &TensorSquare, keep: &[Letter]) -> SparseVec {
    let mut v = SparseVec::new();
    for &a in keep {
        for &b in keep {
            let c = t.get(a, b);
            if !c.is_zero() {
                v.insert(6 * a.rank() as usize + b.rank() as usize, c.clone());
            }
        }
    }
    v
}

fn project_sparse(v: &SparseVec, keep: &[Letter]) -> SparseVec {
    v.iter()
        .filter(|(i, _)| {
            let (a, b) = (Letter::from_rank((*i / 6) as u8), Letter::from_rank((*i % 6) as u8));
            keep.contains(&a) && keep.contains(&b)
        })
        .map(|(i, c)| (*i, c.clone()))
        .collect()
}

/// Subalgebra on `keep` cut out by the rules among its letters.
pub fn side_subalgebra(alg: &ExteriorAlgebra, keep: &[Letter]) -> Result<ExteriorAlgebra, FlagError> {
    let mut letters = keep.to_vec();
    letters.sort_by_key(|&l| alg.rank(l));
    let mut rules = Vec::new();
    for r in alg.system().rules() {
        let lhs = [alg.letter(r.lhs().0[0]), alg.letter(r.lhs().0[1])];
        if !(keep.contains(&lhs[0]) && keep.contains(&lhs[1])) {
            continue;
        }
        let rhs = r
            .rhs()
            .terms()
            .map(|(w, c)| (c.clone(), [alg.letter(w.0[0]), alg.letter(w.0[1])]))
            .filter(|(_, w)| keep.contains(&w[0]) && keep.contains(&w[1]))
            .collect();
        rules.push((lhs, rhs));
    }
    ExteriorAlgebra::from_rules(letters, rules)
}

/// Flag generators whose coset is nonzero and lies in the span of `kill`.
pub fn extra_generators(kill: &[Letter]) -> Vec<(String, GeneratorWord)> {
    flag_generators()
        .into_iter()
        .filter(|(_, z)| {
            let c = coset(z);
            !c.is_zero() && c.support().iter().all(|l| kill.contains(l))
        })
        .collect()
}

/// Integrability of the calculus left on `keep` after killing the other
/// three letters: the subalgebra has dimensions `[1, 3, 3, 1]` and omega of
/// every extra generator, projected to `keep (x) keep`, is already a relation.
fn side_integrability(alg: &ExteriorAlgebra, keep: &[Letter], tag: &str) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new("integrability");
    let kill: Vec<Letter> = Letter::ALL.into_iter().filter(|l| !keep.contains(l)).collect();
    let sub = side_subalgebra(alg, keep)?;
    report.push_eq(
        format!("subalgebra-dims-{tag}"),
        format!("subalgebra on {{{}}} has classical dimensions", names(keep)),
        "[1, 3, 3, 1]",
        format!("{:?}", sub.hilbert_series()),
    );
    let mut span = Echelon::new();
    for r in alg.system().rules() {
        span.insert(&project_sparse(&alg.tensor_coords(&r.relation()), keep))?;
    }
    let extras = extra_generators(&kill);
    let mut cosets = Echelon::new();
    for (_, z) in &extras {
        let c = coset(z);
        cosets.insert(&Letter::ALL.into_iter().map(|l| (l.rank() as usize, c.get(l).clone())).filter(|(_, c)| !c.is_zero()).collect())?;
    }
    let listed: Vec<&str> = extras.iter().map(|(n, _)| n.as_str()).collect();
    report.push(
        format!("extra-generators-{tag}"),
        "degree-one generators added to the ideal span the killed letters",
        format!("cosets span {{{}}}", names(&kill)),
        format!("{} with coset rank {}", listed.join(","), cosets.rank()),
        cosets.rank() == kill.len(),
    );
    for (name, z) in extras {
        let t = omega(&z.plus()).expect("plus has zero counit");
        let p = project(&t, keep);
        let rendered = if p.is_empty() {
            "0".to_string()
        } else {
            alg.render(&NCPolynomial::from_terms(p.iter().map(|(i, c)| {
                let (a, b) = (Letter::from_rank((*i / 6) as u8), Letter::from_rank((*i % 6) as u8));
                (Word(vec![alg.rank(a), alg.rank(b)]), c.clone())
            })))
        };
        let ok = span.contains(&p)?;
        report.push(
            format!("omega-{name}-{tag}"),
            "projected omega of an extra generator is a relation",
            "in relation span",
            if ok { format!("in relation span ({rendered})") } else { format!("new relation {rendered}") },
            ok,
        );
    }
    Ok(report)
}

/// Runs the integrability procedure on both halves of `s`.
pub fn check_integrability(alg: &ExteriorAlgebra, s: &Foacs) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new("integrability");
    report.absorb(side_integrability(alg, &s.anti, &format!("{}-anti", s.label()))?);
    report.absorb(side_integrability(alg, &s.holomorphic, &format!("{}-holo", s.label()))?);
    Ok(report)
}

pub fn integrability_report(alg: &ExteriorAlgebra) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new("integrability");
    for s in [structure_one(), structure_two()] {
        report.absorb(check_integrability(alg, &s)?);
    }
    let z = omega(&crate::qpair::flag_generator(2, 2, 3).plus()).expect("zero counit");
    let e = [Letter::E1, Letter::E2, Letter::E12];
    report.push_eq("omega-z2_23-e-part", "omega of z2_23 has no e (x) e part", true, project(&z, &e).is_empty());
    Ok(report)
}

/// Dimensions of the connection space and of its torsion-free part.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ConnectionDims {
    pub total: usize,
    pub torsion_free: usize,
    pub kernel_dim: usize,
}

pub fn connection_space_dims(alg: &ExteriorAlgebra) -> Result<ConnectionDims, FlagError> {
    let weights: Vec<Root> = Letter::ALL.into_iter().map(generator_weight).collect();
    let mut total = 0;
    for &mu in &weights {
        for a in Letter::ALL {
            for b in Letter::ALL {
                if generator_weight(a) + generator_weight(b) == mu {
                    total += 1;
                }
            }
        }
    }
    let mut blocks: BTreeMap<Root, Echelon> = BTreeMap::new();
    for r in alg.system().rules() {
        let w = alg.word_weight(&r.lhs());
        blocks.entry(w).or_default().insert(&alg.tensor_coords(&r.relation()))?;
    }
    let kernel_dim = blocks.values().map(Echelon::rank).sum();
    let torsion_free = weights.iter().filter_map(|w| blocks.get(w)).map(Echelon::rank).sum();
    Ok(ConnectionDims { total, torsion_free, kernel_dim })
}

pub fn connections_report(alg: &ExteriorAlgebra) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new("connections");
    let d = connection_space_dims(alg)?;
    report.push_eq("connections-total", "dimension of the space of connections", 12, d.total);
    report.push_eq("connections-torsion-free", "dimension of torsion-free connections", 6, d.torsion_free);
    report.push_eq("wedge-kernel-dim", "kernel of the wedge on the tensor square", 21, d.kernel_dim);
    Ok(report)
}

/// Weight-zero irreducible words of degree `k`.
pub fn coinvariant_forms(alg: &ExteriorAlgebra, k: usize) -> Vec<Word> {
    alg.basis(k).into_iter().filter(|w| alg.word_weight(w) == Root::ZERO).collect()
}

/// `c1 f1 e1 + c2 f2 e2 + c3 f12 e12`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoinvariantForm(pub [Coefficient; 3]);

/// The three weight-zero 2-forms, in the order of the coefficients.
pub const FORM_BASIS: [[Letter; 2]; 3] = [[Letter::F1, Letter::E1], [Letter::F2, Letter::E2], [Letter::F12, Letter::E12]];

impl CoinvariantForm {
    pub fn symbolic() -> Self {
        Self(Symbol::ALL.map(Coefficient::symbol))
    }

    pub fn to_poly(&self, alg: &ExteriorAlgebra) -> NCPolynomial {
        NCPolynomial::from_terms(FORM_BASIS.iter().zip(&self.0).map(|(w, c)| (alg.word(w), c.clone())))
    }
}

/// Outcome of the centrality test on one degree-two coinvariant form.
#[derive(Clone, Debug)]
pub struct CentralityResult {
    pub form: [Letter; 2],
    pub central: bool,
    pub failure: Option<String>,
}

fn act_on_form(alg: &ExteriorAlgebra, form: &[Letter; 2], b: &GeneratorWord) -> NCPolynomial {
    let t = right_act_deg2(&TensorSquare::basis(form[0], form[1]), b);
    let p = NCPolynomial::from_terms(
        Letter::ALL
            .into_iter()
            .flat_map(|x| Letter::ALL.into_iter().map(move |y| (x, y)))
            .map(|(x, y)| (alg.word(&[x, y]), t.get(x, y).clone())),
    );
    alg.normal_form(&p)
}

/// Tests `v . z = eps(z) v` over the flag generators for each basis form.
pub fn centrality(alg: &ExteriorAlgebra) -> Vec<CentralityResult> {
    let gens = flag_generators();
    FORM_BASIS
        .iter()
        .map(|form| {
            let v = alg.monomial(form);
            let failure = gens.iter().find_map(|(name, z)| {
                let lhs = act_on_form(alg, form, z);
                let rhs = v.scale(&z.counit());
                (lhs != rhs).then(|| format!("{} . {name} = {}", alg.render(&v), alg.render(&lhs)))
            });
            CentralityResult { form: *form, central: failure.is_none(), failure }
        })
        .collect()
}

/// The element `u11 u32 u23` of zero counit used to separate `f1 e1`.
pub fn centrality_witness() -> GeneratorWord {
    GeneratorWord::monomial(&[(1, 1), (3, 2), (2, 3)])
}

pub fn centrality_report(alg: &ExteriorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("centrality");
    let results = centrality(alg);
    for r in &results {
        let name = alg.render(&alg.monomial(&r.form));
        let expected_central = r.form != FORM_BASIS[0];
        report.push(
            format!("central-{name}"),
            "central coinvariant 2-forms",
            if expected_central { "central" } else { "not central" },
            r.failure.clone().map_or("central".to_string(), |f| format!("not central: {f}")),
            r.central == expected_central,
        );
    }
    let dim = results.iter().filter(|r| r.central).count();
    report.push_eq("central-dim", "dimension of central coinvariant 2-forms", 2, dim);
    let b = centrality_witness();
    let form = FORM_BASIS[0];
    let got = act_on_form(alg, &form, &b);
    let nu = Coefficient::nu();
    let target = alg.monomial(&form).scale(&-&(&Coefficient::q_pow(-3) * &(&nu * &nu)));
    report.push(
        "witness-value",
        "f1 e1 under u11 u32 u23",
        alg.render(&target),
        alg.render(&got),
        got == target,
    );
    report.push_eq(
        "witness-separates",
        "f1 e1 under u11 u32 u23 differs from eps times f1 e1",
        true,
        got != alg.monomial(&form).scale(&b.counit()),
    );
    report
}

/// Top coefficient of the cube of the coinvariant form.
#[derive(Clone, Debug)]
pub struct KahlerCube {
    pub coefficient: Coefficient,
    pub divisible_by_c1: bool,
}

/// Cube of `c1 f1 e1 + c2 f2 e2 + c3 f12 e12`, with symbolic `c` or with
/// `c = (1, 1, 1)`.
pub fn kahler_cube(alg: &ExteriorAlgebra, symbolic: bool) -> KahlerCube {
    let form = if symbolic { CoinvariantForm::symbolic() } else { CoinvariantForm([1, 1, 1].map(Coefficient::from)) };
    let w = form.to_poly(alg);
    let cube = alg.wedge_all(&[w.clone(), w.clone(), w]);
    let coefficient = alg.top_word().map_or(Coefficient::zero(), |t| cube.coeff(&t));
    let divisible_by_c1 = coefficient.is_divisible_by_symbol(Symbol::C1);
    KahlerCube { coefficient, divisible_by_c1 }
}

/// Combines centrality with the cube: no central coinvariant 2-form is
/// nondegenerate.
pub fn no_covariant_kahler(alg: &ExteriorAlgebra) -> VerificationReport {
    let mut report = VerificationReport::new("kahler");
    report.push_eq("coinvariant-2-forms", "coinvariant 2-forms", 3, coinvariant_forms(alg, 2).len());
    let cent = centrality_report(alg);
    let central = centrality(alg);
    report.absorb(cent);
    let cube = kahler_cube(alg, true);
    report.push_eq("cube-divisible-c1", "cube is divisible by c1", true, cube.divisible_by_c1);
    let zero_c1 = cube.coefficient.substitute(&[Coefficient::zero(), Coefficient::symbol(Symbol::C2), Coefficient::symbol(Symbol::C3)]);
    report.push_eq("cube-vanishes-c1-zero", "cube vanishes when c1 = 0", "0", zero_c1.to_string());
    let ones = cube.coefficient.substitute(&[1, 1, 1].map(Coefficient::from));
    report.push_eq("cube-nonzero-at-ones", "cube is nonzero at c = (1, 1, 1)", true, !ones.is_zero());
    let restricted: [Coefficient; 3] = std::array::from_fn(|i| {
        if central[i].central { Coefficient::symbol(Symbol::ALL[i]) } else { Coefficient::zero() }
    });
    let on_central = cube.coefficient.substitute(&restricted);
    report.push(
        "central-nondegenerate-empty",
        "no central coinvariant 2-form is nondegenerate",
        "0",
        on_central.to_string(),
        on_central.is_zero(),
    );
    report.push_eq(
        "nondegenerate-without-centrality",
        "dropping centrality admits nondegenerate forms",
        true,
        !cube.coefficient.is_zero(),
    );
    report
}

/// Cube at `q = 1`, `c = (1, 1, 1)`.
pub fn classical_volume(alg: &ExteriorAlgebra) -> Result<Coefficient, FlagError> {
    Ok(kahler_cube(&alg.at_q_one()?, false).coefficient)
}
