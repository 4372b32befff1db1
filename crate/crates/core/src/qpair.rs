//! Dual pairing between a closed family of U_q(sl3) functionals and words in
//! the matrix coefficients `u_ij`, together with the maps built on it: cosets
//! in the cotangent space, the omega map into its tensor square, and the
//! right module action of words on cotangent vectors.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use thiserror::Error;

use crate::ncpoly::{Alphabet, NCPolynomial, Word};
use crate::rootdata::{column_weight, cotangent_alphabet, inner_product, pair_epsilon, Letter, Weight};
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QpairError {
    #[error("omega needs an element with zero counit, got counit {0}")]
    NonzeroCounit(String),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
}

/// Rank of `u_ij` in the nine-letter alphabet, `i, j` in `1..=3`.
pub fn u_rank(i: usize, j: usize) -> u8 {
    assert!((1..=3).contains(&i) && (1..=3).contains(&j), "index out of range");
    (3 * (i - 1) + (j - 1)) as u8
}

/// Inverse of [`u_rank`].
pub fn u_indices(rank: u8) -> (usize, usize) {
    (rank as usize / 3 + 1, rank as usize % 3 + 1)
}

pub fn u_alphabet() -> Alphabet {
    Alphabet::new((1..=3).flat_map(|i| (1..=3).map(move |j| format!("u{i}{j}")))).expect("distinct names")
}

/// A polynomial in the `u_ij`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct GeneratorWord {
    poly: NCPolynomial,
}

impl GeneratorWord {
    pub fn zero() -> Self {
        Self { poly: NCPolynomial::zero() }
    }

    pub fn one() -> Self {
        Self { poly: NCPolynomial::one() }
    }

    pub fn u(i: usize, j: usize) -> Self {
        Self { poly: NCPolynomial::letter(u_rank(i, j)) }
    }

    /// Product of the given `u_ij` in order.
    pub fn monomial(indices: &[(usize, usize)]) -> Self {
        let w = Word(indices.iter().map(|&(i, j)| u_rank(i, j)).collect());
        Self { poly: NCPolynomial::word(w) }
    }

    pub fn from_poly(poly: NCPolynomial) -> Self {
        Self { poly }
    }

    pub fn poly(&self) -> &NCPolynomial {
        &self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self { poly: self.poly.scale(c) }
    }

    /// Product of Kronecker deltas, summed over terms.
    pub fn counit(&self) -> Coefficient {
        self.poly
            .terms()
            .filter(|(w, _)| w.0.iter().all(|&r| {
                let (i, j) = u_indices(r);
                i == j
            }))
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// `self - counit(self)`
    pub fn plus(&self) -> Self {
        let e = self.counit();
        self - &Self::one().scale(&e)
    }

    /// Sum of column weights, when every term has the same one.
    pub fn weight(&self) -> Option<Weight> {
        let mut out: Option<Weight> = None;
        for (w, _) in self.poly.terms() {
            let wt = w.0.iter().fold(Weight::ZERO, |a, &r| a + column_weight(u_indices(r).1));
            match out {
                None => out = Some(wt),
                Some(o) if o != wt => return None,
                _ => {}
            }
        }
        Some(out.unwrap_or(Weight::ZERO))
    }
}

impl fmt::Display for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&u_alphabet().render_poly(&self.poly))
    }
}

impl fmt::Debug for GeneratorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &GeneratorWord {
    type Output = GeneratorWord;
    fn add(self, o: &GeneratorWord) -> GeneratorWord {
        GeneratorWord { poly: &self.poly + &o.poly }
    }
}

impl Sub for &GeneratorWord {
    type Output = GeneratorWord;
    fn sub(self, o: &GeneratorWord) -> GeneratorWord {
        GeneratorWord { poly: &self.poly - &o.poly }
    }
}

impl Neg for &GeneratorWord {
    type Output = GeneratorWord;
    fn neg(self) -> GeneratorWord {
        GeneratorWord { poly: -&self.poly }
    }
}

impl Mul for &GeneratorWord {
    type Output = GeneratorWord;
    fn mul(self, o: &GeneratorWord) -> GeneratorWord {
        GeneratorWord { poly: &self.poly * &o.poly }
    }
}

/// Members of the closed family of functionals.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FunctionalId {
    Eps,
    E1,
    E2,
    E12,
    Fa1,
    Fa2,
    Fa12,
    K1,
    K2,
    K1K2,
    E2K1,
    Fa2K1,
}

impl FunctionalId {
    pub const ALL: [FunctionalId; 12] = [
        FunctionalId::Eps,
        FunctionalId::E1,
        FunctionalId::E2,
        FunctionalId::E12,
        FunctionalId::Fa1,
        FunctionalId::Fa2,
        FunctionalId::Fa12,
        FunctionalId::K1,
        FunctionalId::K2,
        FunctionalId::K1K2,
        FunctionalId::E2K1,
        FunctionalId::Fa2K1,
    ];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> &'static str {
        match self {
            FunctionalId::Eps => "eps",
            FunctionalId::E1 => "E1",
            FunctionalId::E2 => "E2",
            FunctionalId::E12 => "E12",
            FunctionalId::Fa1 => "Fa1",
            FunctionalId::Fa2 => "Fa2",
            FunctionalId::Fa12 => "Fa12",
            FunctionalId::K1 => "K1",
            FunctionalId::K2 => "K2",
            FunctionalId::K1K2 => "K1K2",
            FunctionalId::E2K1 => "E2K1",
            FunctionalId::Fa2K1 => "Fa2K1",
        }
    }

    /// The tangent functional dual to a cotangent letter.
    pub fn tangent(l: Letter) -> FunctionalId {
        match l {
            Letter::E1 => FunctionalId::E1,
            Letter::E2 => FunctionalId::E2,
            Letter::E12 => FunctionalId::E12,
            Letter::F1 => FunctionalId::Fa1,
            Letter::F2 => FunctionalId::Fa2,
            Letter::F12 => FunctionalId::Fa12,
        }
    }

    pub fn as_letter(self) -> Option<Letter> {
        Letter::ALL.into_iter().find(|&l| FunctionalId::tangent(l) == self)
    }
}

pub type Mat3 = [[Coefficient; 3]; 3];

fn mat_unit(i: usize, j: usize, c: Coefficient) -> Mat3 {
    let mut m: Mat3 = Default::default();
    m[i - 1][j - 1] = c;
    m
}

fn mat_diag(exps: [i32; 3]) -> Mat3 {
    let mut m: Mat3 = Default::default();
    for (k, e) in exps.into_iter().enumerate() {
        m[k][k] = Coefficient::q_pow(e);
    }
    m
}

pub fn mat_mul(a: &Mat3, b: &Mat3) -> Mat3 {
    let mut m: Mat3 = Default::default();
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = (0..3).map(|k| &a[i][k] * &b[k][j]).sum();
        }
    }
    m
}

/// A functional given by its values on the `u_ij` and its coproduct inside
/// the family.
#[derive(Clone, Debug)]
pub struct Functional {
    pub id: FunctionalId,
    pub eval: Mat3,
    pub counit: Coefficient,
    pub coproduct: Vec<(FunctionalId, FunctionalId, Coefficient)>,
}

pub struct FunctionalTable {
    members: Vec<Functional>,
}

impl FunctionalTable {
    pub fn get(&self, id: FunctionalId) -> &Functional {
        &self.members[id.index()]
    }

    pub fn members(&self) -> &[Functional] {
        &self.members
    }
}

fn build_table() -> FunctionalTable {
    use FunctionalId::*;
    let one = Coefficient::one;
    let q = Coefficient::q_pow;
    let nu = Coefficient::nu();
    let e1 = mat_unit(2, 1, one());
    let e2 = mat_unit(3, 2, one());
    let f1 = mat_unit(1, 2, one());
    let f2 = mat_unit(2, 3, one());
    let k1 = mat_diag([-1, 1, 0]);
    let k2 = mat_diag([0, -1, 1]);
    let k1k2 = mat_mul(&k1, &k2);
    let scaled = |m: &Mat3, c: &Coefficient| -> Mat3 {
        let mut out = m.clone();
        out.iter_mut().flatten().for_each(|x| *x = &*x * c);
        out
    };
    let minus = |a: &Mat3, b: &Mat3| -> Mat3 {
        let mut out = a.clone();
        for i in 0..3 {
            for j in 0..3 {
                out[i][j] = &a[i][j] - &b[i][j];
            }
        }
        out
    };
    // E12 = E2 E1 - q^-1 E1 E2
    let e12 = minus(&mat_mul(&e2, &e1), &scaled(&mat_mul(&e1, &e2), &q(-1)));
    let fa1 = mat_mul(&k1, &f1);
    let fa2 = mat_mul(&k2, &f2);
    // Fa12 = q^-1 K1 K2 (F1 F2 - q^-1 F2 F1)
    let bracket = minus(&mat_mul(&f1, &f2), &scaled(&mat_mul(&f2, &f1), &q(-1)));
    let fa12 = scaled(&mat_mul(&k1k2, &bracket), &q(-1));
    let e2k1 = mat_mul(&e2, &k1);
    let fa2k1 = mat_mul(&fa2, &k1);
    let mut eps: Mat3 = Default::default();
    (0..3).for_each(|k| eps[k][k] = one());

    let c = |id, l, r| (l, r, id);
    let members = vec![
        (Eps, eps, one(), vec![c(one(), Eps, Eps)]),
        (E1, e1, Coefficient::zero(), vec![c(one(), E1, K1), c(one(), Eps, E1)]),
        (E2, e2, Coefficient::zero(), vec![c(one(), E2, K2), c(one(), Eps, E2)]),
        (
            E12,
            e12,
            Coefficient::zero(),
            vec![c(one(), E12, K1K2), c(&q(-1) * &nu, E1, E2K1), c(one(), Eps, E12)],
        ),
        (Fa1, fa1, Coefficient::zero(), vec![c(one(), Fa1, K1), c(one(), Eps, Fa1)]),
        (Fa2, fa2, Coefficient::zero(), vec![c(one(), Fa2, K2), c(one(), Eps, Fa2)]),
        (
            Fa12,
            fa12,
            Coefficient::zero(),
            vec![c(one(), Fa12, K1K2), c(nu.clone(), Fa1, Fa2K1), c(one(), Eps, Fa12)],
        ),
        (K1, k1, one(), vec![c(one(), K1, K1)]),
        (K2, k2, one(), vec![c(one(), K2, K2)]),
        (K1K2, k1k2, one(), vec![c(one(), K1K2, K1K2)]),
        (E2K1, e2k1, Coefficient::zero(), vec![c(one(), E2K1, K1K2), c(one(), K1, E2K1)]),
        (Fa2K1, fa2k1, Coefficient::zero(), vec![c(one(), Fa2K1, K1K2), c(one(), K1, Fa2K1)]),
    ];
    FunctionalTable {
        members: members
            .into_iter()
            .map(|(id, eval, counit, coproduct)| Functional { id, eval, counit, coproduct })
            .collect(),
    }
}

/// The twelve-member closed family.
pub fn functional_table() -> &'static FunctionalTable {
    static TABLE: OnceLock<FunctionalTable> = OnceLock::new();
    TABLE.get_or_init(build_table)
}

/// Values of every functional on the word `letters[pos..]`.
fn suffix_values(letters: &[u8]) -> Vec<Coefficient> {
    let table = functional_table();
    let mut val: Vec<Coefficient> = table.members().iter().map(|f| f.counit.clone()).collect();
    for &r in letters.iter().rev() {
        let (i, j) = u_indices(r);
        let next = table
            .members()
            .iter()
            .map(|f| {
                f.coproduct
                    .iter()
                    .filter(|(l, _, _)| !table.get(*l).eval[i - 1][j - 1].is_zero())
                    .map(|(l, rt, c)| &(c * &table.get(*l).eval[i - 1][j - 1]) * &val[rt.index()])
                    .sum()
            })
            .collect();
        val = next;
    }
    val
}

/// Pairing of a single word with a functional.
pub fn pair_word(l: FunctionalId, w: &Word) -> Coefficient {
    suffix_values(&w.0)[l.index()].clone()
}

pub fn pair(l: FunctionalId, w: &GeneratorWord) -> Coefficient {
    w.poly.terms().map(|(word, c)| c * &pair_word(l, word)).sum()
}

/// An element of the cotangent space in the letter basis, indexed by rank.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CotangentVector(pub [Coefficient; 6]);

impl CotangentVector {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(l: Letter) -> Self {
        Self::basis_scaled(l, Coefficient::one())
    }

    pub fn basis_scaled(l: Letter, c: Coefficient) -> Self {
        let mut v = Self::zero();
        v.0[l.rank() as usize] = c;
        v
    }

    pub fn get(&self, l: Letter) -> &Coefficient {
        &self.0[l.rank() as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Coefficient::is_zero)
    }

    pub fn support(&self) -> Vec<Letter> {
        Letter::ALL.into_iter().filter(|l| !self.get(*l).is_zero()).collect()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self(std::array::from_fn(|i| &self.0[i] * c))
    }

    pub fn to_poly(&self) -> NCPolynomial {
        NCPolynomial::from_terms(Letter::ALL.into_iter().map(|l| (Word::letter(l.rank()), self.get(l).clone())))
    }
}

impl Add for &CotangentVector {
    type Output = CotangentVector;
    fn add(self, o: &CotangentVector) -> CotangentVector {
        CotangentVector(std::array::from_fn(|i| &self.0[i] + &o.0[i]))
    }
}

impl fmt::Display for CotangentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cotangent_alphabet().render_poly(&self.to_poly()))
    }
}

impl fmt::Debug for CotangentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn coset(w: &GeneratorWord) -> CotangentVector {
    let mut out = CotangentVector::zero();
    for (word, c) in w.poly.terms() {
        let vals = suffix_values(&word.0);
        for l in Letter::ALL {
            let v = &vals[FunctionalId::tangent(l).index()];
            if !v.is_zero() {
                let slot = &mut out.0[l.rank() as usize];
                *slot = &*slot + &(c * v);
            }
        }
    }
    out
}

/// An element of the tensor square of the cotangent space; entry `[r][s]`
/// is the coefficient of `letter(r) (x) letter(s)`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct TensorSquare(pub [[Coefficient; 6]; 6]);

impl TensorSquare {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn basis(a: Letter, b: Letter) -> Self {
        let mut t = Self::zero();
        t.0[a.rank() as usize][b.rank() as usize] = Coefficient::one();
        t
    }

    pub fn get(&self, a: Letter, b: Letter) -> &Coefficient {
        &self.0[a.rank() as usize][b.rank() as usize]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().flatten().all(Coefficient::is_zero)
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self(std::array::from_fn(|r| std::array::from_fn(|s| &self.0[r][s] * c)))
    }

    pub fn to_poly(&self) -> NCPolynomial {
        let mut p = NCPolynomial::zero();
        for r in 0..6u8 {
            for s in 0..6u8 {
                p.add_term(Word(vec![r, s]), self.0[r as usize][s as usize].clone());
            }
        }
        p
    }

    /// Reads the degree-two part of `p`.
    pub fn from_poly(p: &NCPolynomial) -> Self {
        let mut t = Self::zero();
        for (w, c) in p.terms() {
            if let [r, s] = w.0[..] {
                t.0[r as usize][s as usize] = c.clone();
            }
        }
        t
    }

    /// Coordinates in the 36-dimensional basis, row-major by rank.
    pub fn flatten(&self) -> Vec<Coefficient> {
        self.0.iter().flatten().cloned().collect()
    }
}

impl Add for &TensorSquare {
    type Output = TensorSquare;
    fn add(self, o: &TensorSquare) -> TensorSquare {
        TensorSquare(std::array::from_fn(|r| std::array::from_fn(|s| &self.0[r][s] + &o.0[r][s])))
    }
}

impl Sub for &TensorSquare {
    type Output = TensorSquare;
    fn sub(self, o: &TensorSquare) -> TensorSquare {
        TensorSquare(std::array::from_fn(|r| std::array::from_fn(|s| &self.0[r][s] - &o.0[r][s])))
    }
}

impl fmt::Display for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&cotangent_alphabet().render_poly(&self.to_poly()))
    }
}

impl fmt::Debug for TensorSquare {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Values of all products `A*B` of family members on a word, indexed
/// `[A][B]`.
fn pair_products(letters: &[u8]) -> Vec<Vec<Coefficient>> {
    let table = functional_table();
    let n = FunctionalId::ALL.len();
    let prods: Vec<Vec<Mat3>> = (0..n)
        .map(|a| (0..n).map(|b| mat_mul(&table.members()[a].eval, &table.members()[b].eval)).collect())
        .collect();
    let mut val: Vec<Vec<Coefficient>> = (0..n)
        .map(|a| (0..n).map(|b| &table.members()[a].counit * &table.members()[b].counit).collect())
        .collect();
    for &r in letters.iter().rev() {
        let (i, j) = u_indices(r);
        let mut next = vec![vec![Coefficient::zero(); n]; n];
        for (a, fa) in table.members().iter().enumerate() {
            for (b, fb) in table.members().iter().enumerate() {
                let mut acc = Coefficient::zero();
                for (a1, a2, ca) in &fa.coproduct {
                    for (b1, b2, cb) in &fb.coproduct {
                        let m = &prods[a1.index()][b1.index()][i - 1][j - 1];
                        let rest = &val[a2.index()][b2.index()];
                        if m.is_zero() || rest.is_zero() {
                            continue;
                        }
                        acc = &acc + &(&(&(ca * cb) * m) * rest);
                    }
                }
                next[a][b] = acc;
            }
        }
        val = next;
    }
    val
}

/// `[y_(1)] (x) [y_(2)]` for `y` with zero counit.
pub fn omega(y: &GeneratorWord) -> Result<TensorSquare, QpairError> {
    let e = y.counit();
    if !e.is_zero() {
        return Err(QpairError::NonzeroCounit(e.to_string()));
    }
    let mut out = TensorSquare::zero();
    for (word, c) in y.poly.terms() {
        let vals = pair_products(&word.0);
        for a in Letter::ALL {
            for b in Letter::ALL {
                let v = &vals[FunctionalId::tangent(a).index()][FunctionalId::tangent(b).index()];
                if !v.is_zero() {
                    let slot = &mut out.0[a.rank() as usize][b.rank() as usize];
                    *slot = &*slot + &(c * v);
                }
            }
        }
    }
    Ok(out)
}

/// Action of the single letter `u_ij` on a cotangent vector.
pub fn right_act_letter(v: &CotangentVector, i: usize, j: usize) -> CotangentVector {
    let mut out = CotangentVector::zero();
    if i == j {
        for l in Letter::ALL {
            let s = Coefficient::q_pow(-pair_epsilon(l.root(), i));
            out.0[l.rank() as usize] = &s * v.get(l);
        }
    } else if (i, j) == (3, 2) {
        out.0[Letter::E12.rank() as usize] = &Coefficient::nu() * v.get(Letter::E1);
    } else if (i, j) == (2, 3) {
        out.0[Letter::F12.rank() as usize] = &(&Coefficient::q_pow(-1) * &Coefficient::nu()) * v.get(Letter::F1);
    }
    out
}

pub fn right_act(v: &CotangentVector, w: &GeneratorWord) -> CotangentVector {
    let mut out = CotangentVector::zero();
    for (word, c) in w.poly.terms() {
        let mut cur = v.clone();
        for &r in &word.0 {
            let (i, j) = u_indices(r);
            cur = right_act_letter(&cur, i, j);
        }
        out = &out + &cur.scale(c);
    }
    out
}

fn act_basis(l: Letter, i: usize, j: usize) -> CotangentVector {
    right_act_letter(&CotangentVector::basis(l), i, j)
}

/// Diagonal action on the tensor square through the coproduct
/// `u_ij -> sum_k u_ik (x) u_kj`.
pub fn right_act_deg2(t: &TensorSquare, w: &GeneratorWord) -> TensorSquare {
    let mut out = TensorSquare::zero();
    for (word, c) in w.poly.terms() {
        let mut cur = t.clone();
        for &r in &word.0 {
            let (i, j) = u_indices(r);
            let mut next = TensorSquare::zero();
            for a in Letter::ALL {
                for b in Letter::ALL {
                    let x = cur.get(a, b);
                    if x.is_zero() {
                        continue;
                    }
                    for k in 1..=3 {
                        let va = act_basis(a, i, k);
                        let vb = act_basis(b, k, j);
                        for a2 in va.support() {
                            for b2 in vb.support() {
                                let slot = &mut next.0[a2.rank() as usize][b2.rank() as usize];
                                *slot = &*slot + &(&(x * va.get(a2)) * vb.get(b2));
                            }
                        }
                    }
                }
            }
            cur = next;
        }
        out = &out + &cur.scale(c);
    }
    out
}

fn complement(x: usize) -> (usize, usize) {
    match x {
        1 => (2, 3),
        2 => (1, 3),
        3 => (1, 2),
        _ => panic!("index {x} out of range"),
    }
}

/// `S(u_ij) = (-q)^(i-j) (u_km u_ln - q u_kn u_lm)`.
pub fn antipode_word(i: usize, j: usize) -> GeneratorWord {
    let (k, l) = complement(j);
    let (m, n) = complement(i);
    let e = i as i32 - j as i32;
    let sign = Coefficient::signed_q_pow(e.rem_euclid(2) == 1, e);
    let a = GeneratorWord::monomial(&[(k, m), (l, n)]);
    let b = GeneratorWord::monomial(&[(k, n), (l, m)]).scale(&Coefficient::q_pow(1));
    (&a - &b).scale(&sign)
}

/// `z^{alpha_p}_{ab}`: `u_a1 S(u_1b)` for `p = 1`, `u_a3 S(u_3b)` for `p = 2`.
pub fn flag_generator(p: usize, a: usize, b: usize) -> GeneratorWord {
    let c = match p {
        1 => 1,
        2 => 3,
        _ => panic!("flag generator family {p} out of range"),
    };
    &GeneratorWord::u(a, c) * &antipode_word(c, b)
}

pub fn flag_generator_name(p: usize, a: usize, b: usize) -> String {
    format!("z{p}_{a}{b}")
}

/// All eighteen flag generators with their names.
pub fn flag_generators() -> Vec<(String, GeneratorWord)> {
    let mut out = Vec::new();
    for p in 1..=2 {
        for a in 1..=3 {
            for b in 1..=3 {
                out.push((flag_generator_name(p, a, b), flag_generator(p, a, b)));
            }
        }
    }
    out
}

/// Parses `uIJ`, `zP_AB` or `S(uIJ)`.
pub fn parse_generator(name: &str) -> Result<GeneratorWord, QpairError> {
    let bad = || QpairError::UnknownGenerator(name.to_string());
    let digits = |s: &str, n: usize| -> Option<Vec<usize>> {
        let d: Vec<usize> = s.chars().map(|c| c.to_digit(10).map(|x| x as usize)).collect::<Option<_>>()?;
        (d.len() == n && d.iter().all(|x| (1..=3).contains(x))).then_some(d)
    };
    if let Some(rest) = name.strip_prefix("S(u").and_then(|r| r.strip_suffix(')')) {
        let d = digits(rest, 2).ok_or_else(bad)?;
        return Ok(antipode_word(d[0], d[1]));
    }
    if let Some(rest) = name.strip_prefix('u') {
        let d = digits(rest, 2).ok_or_else(bad)?;
        return Ok(GeneratorWord::u(d[0], d[1]));
    }
    if let Some(rest) = name.strip_prefix('z') {
        let (p, ab) = rest.split_once('_').ok_or_else(bad)?;
        let p = digits(p, 1).filter(|p| p[0] <= 2).ok_or_else(bad)?;
        let d = digits(ab, 2).ok_or_else(bad)?;
        return Ok(flag_generator(p[0], d[0], d[1]));
    }
    Err(bad())
}

/// Index triples `(i, a, b)` of the flag generators with a nonzero coset.
pub const B_SET: [(usize, usize, usize); 8] =
    [(1, 2, 1), (1, 1, 2), (1, 3, 1), (1, 1, 3), (2, 3, 2), (2, 2, 3), (2, 3, 1), (2, 1, 3)];

/// One generator of the right ideal defining the cotangent space.
#[derive(Clone, Debug)]
pub struct IdealGenerator {
    pub family: u8,
    pub label: String,
    pub element: GeneratorWord,
}

/// Which transcription of the generator set to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IdealVariant {
    /// Every generator has zero coset: the second family skips the left
    /// factors `z1_21`, `z1_12`, and the last element uses `q*nu`.
    Kernel,
    /// Literal transcription: the second family skips `z1_21`, `z2_32`
    /// and the last element uses `nu`. Two of its elements have nonzero coset.
    Printed,
}

/// The generator set `G1 u G2 u G3 u G4`, counit-corrected so every element
/// has zero counit.
pub fn ideal_generators() -> Vec<IdealGenerator> {
    ideal_generators_variant(IdealVariant::Kernel)
}

pub fn ideal_generators_variant(variant: IdealVariant) -> Vec<IdealGenerator> {
    let mut out = Vec::new();
    let z = flag_generator;
    let name = flag_generator_name;
    let all: Vec<(usize, usize, usize)> =
        (1..=2).flat_map(|p| (1..=3).flat_map(move |a| (1..=3).map(move |b| (p, a, b)))).collect();
    for &(p, a, b) in &all {
        if !B_SET.contains(&(p, a, b)) {
            out.push(IdealGenerator { family: 1, label: name(p, a, b), element: z(p, a, b).plus() });
        }
    }
    out.push(IdealGenerator { family: 1, label: "z1_31 + z2_31".into(), element: &z(1, 3, 1) + &z(2, 3, 1) });
    out.push(IdealGenerator {
        family: 1,
        label: "q^2*z1_13 + z2_13".into(),
        element: &z(1, 1, 3).scale(&Coefficient::q_pow(2)) + &z(2, 1, 3),
    });
    let skipped_left = match variant {
        IdealVariant::Kernel => [(1, 2, 1), (1, 1, 2)],
        IdealVariant::Printed => [(1, 2, 1), (2, 3, 2)],
    };
    for &(i, k, l) in &B_SET {
        if skipped_left.contains(&(i, k, l)) {
            continue;
        }
        for &(p, a, b) in &all {
            out.push(IdealGenerator {
                family: 2,
                label: format!("{}*({})^+", name(i, k, l), name(p, a, b)),
                element: &z(i, k, l) * &z(p, a, b).plus(),
            });
        }
    }
    for &(i, k, l) in &B_SET {
        for &(p, a, b) in &all {
            if (p, a, b) == (2, 3, 2) || (p, a, b) == (2, 2, 3) {
                continue;
            }
            out.push(IdealGenerator {
                family: 3,
                label: format!("{}*({})^+", name(i, k, l), name(p, a, b)),
                element: &z(i, k, l) * &z(p, a, b).plus(),
            });
        }
    }
    let nu = Coefficient::nu();
    out.push(IdealGenerator {
        family: 4,
        label: "z1_21*z2_32 - nu*z2_31".into(),
        element: &(&z(1, 2, 1) * &z(2, 3, 2)) - &z(2, 3, 1).scale(&nu),
    });
    let (label, c) = match variant {
        IdealVariant::Kernel => ("z1_12*z2_23 - q*nu*z1_13", &Coefficient::q_pow(1) * &nu),
        IdealVariant::Printed => ("z1_12*z2_23 - nu*z1_13", nu),
    };
    out.push(IdealGenerator {
        family: 4,
        label: label.into(),
        element: &(&z(1, 1, 2) * &z(2, 2, 3)) - &z(1, 1, 3).scale(&c),
    });
    out
}

/// `q^{-(gamma, epsilon_k)}` as used by the diagonal action, exposed for
/// reporting.
pub fn diagonal_scalar(l: Letter, k: usize) -> Coefficient {
    Coefficient::q_pow(-pair_epsilon(l.root(), k))
}

/// `(beta, gamma)` between the roots of two letters.
pub fn letter_inner(a: Letter, b: Letter) -> i32 {
    inner_product(a.root(), b.root())
}
