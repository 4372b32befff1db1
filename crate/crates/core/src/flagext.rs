//! The quantum exterior algebra on the six cotangent letters: its quadratic
//! relations, their rederivation from the omega map, wedge products, the star
//! map, the Frobenius pairing and its Nakayama automorphism.

use std::collections::HashMap;

use thiserror::Error;

use crate::linalg::{sparse_from_dense, Echelon, LinalgError, Matrix, SparseVec};
use crate::ncpoly::{Alphabet, NCPolynomial, NcError, ReductionSystem, RewriteRule, Word};
use crate::qpair::{ideal_generators, omega, TensorSquare};
use crate::report::VerificationReport;
use crate::rootdata::{cotangent_alphabet, generator_weight, inner_product, Letter, Root, POSITIVE_ROOTS};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlagError {
    #[error(transparent)]
    Nc(#[from] NcError),
    #[error("pairing between degrees {0} and {1} is degenerate")]
    DegeneratePairing(usize, usize),
    #[error("degree {0} is out of range 0..=6")]
    DegreeOutOfRange(usize),
    #[error("linear algebra failure: {0}")]
    Linalg(#[from] LinalgError),
}

/// A rule `lhs -> sum c * word` on letters.
pub type RuleSpec = ([Letter; 2], Vec<(Coefficient, [Letter; 2])>);

/// Bidegree `(holomorphic, anti-holomorphic)` of each letter, by letter.
pub type Bidegrees = HashMap<Letter, (u8, u8)>;

/// A quadratic algebra on the six letters, presented by a reduction system.
#[derive(Clone, Debug)]
pub struct ExteriorAlgebra {
    system: ReductionSystem,
    letters: Vec<Letter>,
    bidegree: Option<Bidegrees>,
}

/// A normal-form element of an [`ExteriorAlgebra`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExteriorElement {
    poly: NCPolynomial,
    weight: Option<Root>,
}

impl ExteriorElement {
    pub fn poly(&self) -> &NCPolynomial {
        &self.poly
    }

    /// Root-lattice weight, when all terms share it.
    pub fn weight(&self) -> Option<Root> {
        self.weight
    }
}

fn neg_q(e: i32) -> Coefficient {
    Coefficient::signed_q_pow(true, e)
}

impl ExteriorAlgebra {
    /// Builds an algebra whose alphabet lists `letters` in rank order, from
    /// rules given as `(lhs, [(coefficient, word)])`.
    pub fn from_rules(
        letters: Vec<Letter>,
        rules: Vec<RuleSpec>,
    ) -> Result<Self, FlagError> {
        let alphabet = Alphabet::new(letters.iter().map(|l| l.name()))?;
        let rank = |l: Letter| letters.iter().position(|&x| x == l).expect("letter in alphabet") as u8;
        let rules = rules
            .into_iter()
            .map(|(lhs, rhs)| {
                let rhs = NCPolynomial::from_terms(
                    rhs.into_iter().map(|(c, w)| (Word(vec![rank(w[0]), rank(w[1])]), c)),
                );
                RewriteRule::new(&Word(vec![rank(lhs[0]), rank(lhs[1])]), rhs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self { system: ReductionSystem::new(alphabet, rules)?, letters, bidegree: None })
    }

    pub fn system(&self) -> &ReductionSystem {
        &self.system
    }

    pub fn alphabet(&self) -> &Alphabet {
        self.system.alphabet()
    }

    pub fn letter(&self, rank: u8) -> Letter {
        self.letters[rank as usize]
    }

    pub fn rank(&self, l: Letter) -> u8 {
        self.letters.iter().position(|&x| x == l).expect("letter in alphabet") as u8
    }

    pub fn word(&self, letters: &[Letter]) -> Word {
        Word(letters.iter().map(|&l| self.rank(l)).collect())
    }

    pub fn monomial(&self, letters: &[Letter]) -> NCPolynomial {
        NCPolynomial::word(self.word(letters))
    }

    pub fn generator(&self, l: Letter) -> NCPolynomial {
        NCPolynomial::letter(self.rank(l))
    }

    pub fn word_weight(&self, w: &Word) -> Root {
        w.0.iter().fold(Root::ZERO, |acc, &r| acc + generator_weight(self.letter(r)))
    }

    pub fn normal_form(&self, p: &NCPolynomial) -> NCPolynomial {
        self.system.normal_form(p)
    }

    pub fn element(&self, p: &NCPolynomial) -> ExteriorElement {
        let poly = self.normal_form(p);
        let weights: Vec<Root> = poly.terms().map(|(w, _)| self.word_weight(w)).collect();
        let weight = match weights.first() {
            None => Some(Root::ZERO),
            Some(&w0) => weights.iter().all(|&w| w == w0).then_some(w0),
        };
        ExteriorElement { poly, weight }
    }

    pub fn wedge(&self, a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        self.system.multiply(a, b)
    }

    /// Product of several factors, reduced after each step.
    pub fn wedge_all(&self, factors: &[NCPolynomial]) -> NCPolynomial {
        factors.iter().fold(NCPolynomial::one(), |acc, f| self.wedge(&acc, f))
    }

    pub fn basis(&self, k: usize) -> Vec<Word> {
        self.system.irreducible_words(k)
    }

    pub fn hilbert_series(&self) -> Vec<usize> {
        let mut h = self.system.hilbert_series(7);
        while h.last() == Some(&0) {
            h.pop();
        }
        h
    }

    pub fn render(&self, p: &NCPolynomial) -> String {
        self.alphabet().render_poly(p)
    }

    pub fn render_word(&self, w: &Word) -> String {
        self.alphabet().render_word(w)
    }

    pub fn set_bidegree(&mut self, b: Bidegrees) {
        self.bidegree = Some(b);
    }

    pub fn bidegree(&self) -> Option<&Bidegrees> {
        self.bidegree.as_ref()
    }

    /// Bidegree of a word under the current assignment.
    pub fn word_bidegree(&self, w: &Word) -> Option<(u8, u8)> {
        let b = self.bidegree.as_ref()?;
        Some(w.0.iter().fold((0, 0), |(x, y), &r| {
            let (a, c) = b[&self.letter(r)];
            (x + a, y + c)
        }))
    }

    /// `e1 e2 e12 f1 f2 f12`, the product on which the integral is 1.
    pub fn reference_product(&self) -> NCPolynomial {
        use Letter::*;
        self.normal_form(&self.monomial(&[E1, E2, E12, F1, F2, F12]))
    }

    /// The unique irreducible word of degree six.
    pub fn top_word(&self) -> Option<Word> {
        let b = self.basis(6);
        (b.len() == 1).then(|| b[0].clone())
    }

    /// Linear functional vanishing below degree six with value 1 on the
    /// reference product.
    pub fn integral(&self, x: &NCPolynomial) -> Coefficient {
        let Some(top) = self.top_word() else {
            return Coefficient::zero();
        };
        let r = self.reference_product().coeff(&top);
        let c = self.normal_form(x).coeff(&top);
        c.checked_div(&r).expect("reference product is nonzero")
    }

    /// `B(x, y) = integral(x y)`.
    pub fn frobenius(&self, x: &NCPolynomial, y: &NCPolynomial) -> Coefficient {
        self.integral(&self.wedge(x, y))
    }

    /// `M[i][j] = B(x_i, y_j)` for the degree-`k` basis `x` and the
    /// degree-`6-k` basis `y`.
    pub fn pairing_matrix(&self, k: usize) -> Result<Matrix, FlagError> {
        if k > 6 {
            return Err(FlagError::DegreeOutOfRange(k));
        }
        let xs = self.basis(k);
        let ys = self.basis(6 - k);
        if xs.len() != ys.len() {
            return Err(FlagError::DegeneratePairing(k, 6 - k));
        }
        Ok(Matrix::from_fn(xs.len(), |i, j| {
            self.frobenius(&NCPolynomial::word(xs[i].clone()), &NCPolynomial::word(ys[j].clone()))
        }))
    }

    /// Nakayama automorphism on degree `k`: for each basis word `x`, the
    /// unique `s(x)` of degree `k` with `B(x, y) = B(y, s(x))` for all `y`.
    pub fn nakayama(&self, k: usize) -> Result<NakayamaMap, FlagError> {
        if k > 6 {
            return Err(FlagError::DegreeOutOfRange(k));
        }
        let xs = self.basis(k);
        let ys = self.basis(6 - k);
        if xs.len() != ys.len() {
            return Err(FlagError::DegeneratePairing(k, 6 - k));
        }
        let n = xs.len();
        let polys = |v: &[Word]| v.iter().map(|w| NCPolynomial::word(w.clone())).collect::<Vec<_>>();
        let (px, py) = (polys(&xs), polys(&ys));
        let m = Matrix::from_fn(n, |i, j| self.frobenius(&py[i], &px[j]));
        let mut images = Vec::with_capacity(n);
        for x in &px {
            let rhs: Vec<Coefficient> = py.iter().map(|y| self.frobenius(x, y)).collect();
            let sol = m.solve(&rhs).map_err(|e| match e {
                LinalgError::Singular => FlagError::DegeneratePairing(6 - k, k),
                other => FlagError::Linalg(other),
            })?;
            images.push(NCPolynomial::from_terms(xs.iter().cloned().zip(sol)));
        }
        Ok(NakayamaMap { basis: xs, images })
    }

    /// Eigenvalue of the Nakayama automorphism on a generator, if the
    /// generator is an eigenvector.
    pub fn nakayama_eigenvalue(&self, l: Letter) -> Result<Option<Coefficient>, FlagError> {
        let map = self.nakayama(1)?;
        let w = Word::letter(self.rank(l));
        let img = map.image(&w).expect("generator in degree-one basis");
        let c = img.coeff(&w);
        Ok((img == &NCPolynomial::monomial(w, c.clone())).then_some(c))
    }

    /// Substitutes `q = 1` in every rule coefficient.
    pub fn at_q_one(&self) -> Result<ExteriorAlgebra, FlagError> {
        let rules = self
            .system
            .rules()
            .iter()
            .map(|r| {
                let rhs = NCPolynomial::from_terms(
                    r.rhs().terms().map(|(w, c)| (w.clone(), c.at_q_one().expect("no pole at q = 1"))),
                );
                RewriteRule::new(&r.lhs(), rhs)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Self {
            system: ReductionSystem::new(self.alphabet().clone(), rules)?,
            letters: self.letters.clone(),
            bidegree: self.bidegree.clone(),
        })
    }

    /// Flattens a degree-two polynomial into the 36 coordinates
    /// `letter(r) (x) letter(s)` indexed by letter rank (not alphabet rank).
    pub fn tensor_coords(&self, p: &NCPolynomial) -> SparseVec {
        let mut v = SparseVec::new();
        for (w, c) in p.terms() {
            if let [a, b] = w.0[..] {
                let (a, b) = (self.letter(a).rank() as usize, self.letter(b).rank() as usize);
                v.insert(6 * a + b, c.clone());
            }
        }
        v
    }

    /// Span of the rule relations `lhs - rhs` inside the tensor square.
    pub fn relation_span(&self) -> Result<Echelon, FlagError> {
        let mut e = Echelon::new();
        for r in self.system.rules() {
            e.insert(&self.tensor_coords(&r.relation()))?;
        }
        Ok(e)
    }
}

/// Images of a degree's basis words under the Nakayama automorphism.
#[derive(Clone, Debug)]
pub struct NakayamaMap {
    pub basis: Vec<Word>,
    pub images: Vec<NCPolynomial>,
}

impl NakayamaMap {
    pub fn image(&self, w: &Word) -> Option<&NCPolynomial> {
        self.basis.iter().position(|b| b == w).map(|i| &self.images[i])
    }
}

/// Three families of relations, on the alphabet ordered by letter rank.
pub fn build_relations() -> ExteriorAlgebra {
    let mut rules = Vec::new();
    for (i, &b) in POSITIVE_ROOTS.iter().enumerate() {
        for &g in &POSITIVE_ROOTS[i..] {
            let ip = inner_product(b, g);
            let (eb, eg, fb, fg) = (Letter::e(b), Letter::e(g), Letter::f(b), Letter::f(g));
            if b == g {
                rules.push(([eg, eg], vec![]));
                rules.push(([fg, fg], vec![]));
            } else {
                rules.push(([eg, eb], vec![(neg_q(ip), [eb, eg])]));
                rules.push(([fg, fb], vec![(neg_q(-ip), [fb, fg])]));
            }
        }
    }
    let nu = Coefficient::nu();
    for &g in &POSITIVE_ROOTS {
        for &b in &POSITIVE_ROOTS {
            let (eg, fb) = (Letter::e(g), Letter::f(b));
            let mut rhs = vec![(neg_q(inner_product(b, g)), [fb, eg])];
            if b == g && g == Root::ALPHA1 {
                rhs.push((-nu.clone(), [Letter::F12, Letter::E12]));
            } else if b == g && g == Root::ALPHA2 {
                rhs.push((nu.clone(), [Letter::F12, Letter::E12]));
            }
            rules.push(([eg, fb], rhs));
        }
    }
    ExteriorAlgebra::from_rules(Letter::ALL.to_vec(), rules).expect("relations form a valid reduction system")
}

/// Skew-commutative relations without the nu-corrections, normal form with
/// every e-letter before every f-letter.
pub fn associated_graded() -> ExteriorAlgebra {
    use Letter::*;
    let letters = vec![E2, E12, E1, F2, F12, F1];
    let mut rules = Vec::new();
    for (i, &b) in POSITIVE_ROOTS.iter().enumerate() {
        for &g in &POSITIVE_ROOTS[i..] {
            let ip = inner_product(b, g);
            let (eb, eg, fb, fg) = (Letter::e(b), Letter::e(g), Letter::f(b), Letter::f(g));
            if b == g {
                rules.push(([eg, eg], vec![]));
                rules.push(([fg, fg], vec![]));
            } else {
                rules.push(([eg, eb], vec![(neg_q(ip), [eb, eg])]));
                rules.push(([fg, fb], vec![(neg_q(-ip), [fb, fg])]));
            }
        }
    }
    for &g in &POSITIVE_ROOTS {
        for &b in &POSITIVE_ROOTS {
            // e_g f_b = -q^{(b,g)} f_b e_g, solved for f_b e_g
            let (eg, fb) = (Letter::e(g), Letter::f(b));
            rules.push(([fb, eg], vec![(neg_q(-inner_product(b, g)), [eg, fb])]));
        }
    }
    ExteriorAlgebra::from_rules(letters, rules).expect("graded relations form a valid reduction system")
}

/// `x -> x*`: swaps `e_g` and `f_g`, reverses words with sign
/// `(-1)^{k(k-1)/2}` in degree `k`, keeps coefficients, then normalizes.
pub fn star(alg: &ExteriorAlgebra, x: &NCPolynomial) -> NCPolynomial {
    let mut out = NCPolynomial::zero();
    for (w, c) in x.terms() {
        let k = w.len();
        let letters: Vec<u8> = w.0.iter().rev().map(|&r| alg.rank(alg.letter(r).star())).collect();
        let c = if (k * k.saturating_sub(1) / 2) % 2 == 1 { -c } else { c.clone() };
        out.add_term(Word(letters), c);
    }
    alg.normal_form(&out)
}

/// Result of rederiving the degree-two relations from the omega map.
pub struct Derivation {
    pub images: Vec<(String, TensorSquare)>,
    pub omega_span: Echelon,
    pub encoded_span: Echelon,
    pub report: VerificationReport,
}

fn tensor_sparse(t: &TensorSquare) -> SparseVec {
    sparse_from_dense(&t.flatten())
}

/// Computes omega on every ideal generator and compares the span with the
/// encoded relations.
pub fn derive_relations_via_omega(alg: &ExteriorAlgebra) -> Result<Derivation, FlagError> {
    let mut report = VerificationReport::new("relations");
    let mut images = Vec::new();
    let mut omega_span = Echelon::new();
    for g in ideal_generators() {
        let t = omega(&g.element).expect("ideal generators have zero counit");
        omega_span.insert(&tensor_sparse(&t))?;
        images.push((g.label, t));
    }
    let encoded_span = alg.relation_span()?;
    report.push_eq("omega-span-rank", "omega images span the degree-two relations", 21, omega_span.rank());
    report.push_eq("encoded-span-rank", "encoded relations are independent", 21, encoded_span.rank());

    let mut witness = None;
    for (label, t) in &images {
        if !encoded_span.contains(&tensor_sparse(t))? {
            witness = Some(format!("{label}: {t}"));
            break;
        }
    }
    report.push(
        "omega-in-encoded",
        "omega images lie in the encoded relation span",
        "all",
        witness.clone().map_or("all".to_string(), |w| format!("outside: {w}")),
        witness.is_none(),
    );
    let mut missing = None;
    for r in alg.system().rules() {
        if !omega_span.contains(&alg.tensor_coords(&r.relation()))? {
            missing = Some(alg.render(&r.relation()));
            break;
        }
    }
    report.push(
        "encoded-in-omega",
        "encoded relations lie in the omega span",
        "all",
        missing.clone().map_or("all".to_string(), |w| format!("outside: {w}")),
        missing.is_none(),
    );
    Ok(Derivation { images, omega_span, encoded_span, report })
}

/// Generator eigenvalues of the Nakayama automorphism, in the order
/// e1, e2, e12, f1, f2, f12.
pub const NAKAYAMA_ORDER: [Letter; 6] = [Letter::E1, Letter::E2, Letter::E12, Letter::F1, Letter::F2, Letter::F12];

pub fn expected_nakayama(l: Letter) -> Coefficient {
    match l {
        Letter::E1 | Letter::E2 => neg_q(2),
        Letter::E12 => neg_q(4),
        Letter::F1 | Letter::F2 => neg_q(-2),
        Letter::F12 => neg_q(-4),
    }
}

/// Checks the generator eigenvalues, the shape of every pairing matrix and
/// multiplicativity of the automorphism on the relations.
pub fn nakayama_report(alg: &ExteriorAlgebra, suite: &str) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new(suite);
    let mut eigen = HashMap::new();
    for l in NAKAYAMA_ORDER {
        let actual = alg.nakayama_eigenvalue(l)?;
        let rendered = actual.as_ref().map_or("not an eigenvector".to_string(), |c| c.to_string());
        report.push_eq(
            format!("sigma-{}", l.name()),
            format!("Nakayama automorphism on {}", l.name()),
            expected_nakayama(l),
            rendered,
        );
        if let Some(c) = actual {
            eigen.insert(l, c);
        }
    }
    let mut shapes = Vec::new();
    let mut ok = true;
    for k in 0..=6 {
        let m = alg.pairing_matrix(k)?;
        let invertible = m.rank()? == m.size();
        let perm = m.is_generalized_permutation();
        ok &= invertible && perm;
        shapes.push(format!("{k}:{}{}", if perm { "P" } else { "-" }, if invertible { "I" } else { "-" }));
    }
    report.push(
        "pairing-permutation-invertible",
        "Frobenius pairing is a generalized permutation in every degree",
        "0:PI 1:PI 2:PI 3:PI 4:PI 5:PI 6:PI",
        shapes.join(" "),
        ok,
    );
    if eigen.len() == 6 {
        let scale = |p: &NCPolynomial| {
            NCPolynomial::from_terms(p.terms().map(|(w, c)| {
                let s = w.0.iter().fold(c.clone(), |acc, &r| &acc * &eigen[&alg.letter(r)]);
                (w.clone(), s)
            }))
        };
        let bad: Vec<String> = alg
            .system()
            .rules()
            .iter()
            .filter(|r| !alg.normal_form(&scale(&r.relation())).is_zero())
            .map(|r| alg.render_word(&r.lhs()))
            .collect();
        report.push(
            "sigma-respects-relations",
            "Nakayama automorphism is an algebra map",
            "all rules preserved",
            if bad.is_empty() { "all rules preserved".to_string() } else { format!("broken: {}", bad.join(", ")) },
            bad.is_empty(),
        );
    }
    Ok(report)
}

/// Classical limit: every rule at `q = 1` is a plain anticommutation.
pub fn classical_limit_check(alg: &ExteriorAlgebra) -> Result<VerificationReport, FlagError> {
    let mut report = VerificationReport::new("classical");
    let classical = alg.at_q_one()?;
    let mut bad = Vec::new();
    for r in classical.system().rules() {
        let lhs = r.lhs();
        let swapped = Word(vec![lhs.0[1], lhs.0[0]]);
        let ok = if lhs.0[0] == lhs.0[1] {
            r.rhs().is_zero()
        } else {
            *r.rhs() == NCPolynomial::monomial(swapped, Coefficient::from(-1))
        };
        if !ok {
            bad.push(format!("{} -> {}", classical.render_word(&lhs), classical.render(r.rhs())));
        }
    }
    report.push(
        "rules-anticommute-at-one",
        "at q = 1 every relation is an anticommutation",
        format!("{} rules", alg.system().rules().len()),
        if bad.is_empty() { format!("{} rules", alg.system().rules().len()) } else { bad.join("; ") },
        bad.is_empty(),
    );
    report.push_eq(
        "dimensions-at-one",
        "classical exterior algebra dimensions",
        "[1, 6, 15, 20, 15, 6, 1]",
        format!("{:?}", classical.hilbert_series()),
    );
    report.push_eq(
        "confluent-at-one",
        "classical relations are confluent",
        true,
        classical.system().is_confluent(),
    );
    Ok(report)
}

/// Bookkeeping helper: weight of a word in the main algebra.
pub fn weight_of(alg: &ExteriorAlgebra, w: &Word) -> Root {
    alg.word_weight(w)
}

/// Checks that every rule is weight-homogeneous.
pub fn rules_weight_homogeneous(alg: &ExteriorAlgebra) -> bool {
    alg.system().rules().iter().all(|r| {
        let w = alg.word_weight(&r.lhs());
        r.rhs().terms().all(|(m, _)| alg.word_weight(m) == w)
    })
}

/// The exterior alphabet, for callers that only need names.
pub fn exterior_alphabet() -> Alphabet {
    cotangent_alphabet()
}
