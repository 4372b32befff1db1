//! Free associative algebra over a finite ordered alphabet, together with
//! quadratic reduction systems: normal forms, overlap ambiguities, graded
//! bases of irreducible words and Hilbert series.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::report::VerificationReport;
use crate::scalar::Coefficient;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NcError {
    #[error("duplicate letter name `{0}`")]
    DuplicateLetter(String),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("rule left-hand side must have length 2, got {0}")]
    LhsLength(usize),
    #[error("two rules share the left-hand side `{0}`")]
    DuplicateLhs(String),
    #[error("rule `{lhs}` rewrites to the word `{word}`, which does not precede it")]
    NotDecreasing { lhs: String, word: String },
    #[error("rule `{lhs}` has a right-hand side word of degree {degree}")]
    NotQuadratic { lhs: String, degree: usize },
}

/// Ordered list of generator names. A letter's index is its rank.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Alphabet {
    letters: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>, I: IntoIterator<Item = S>>(letters: I) -> Result<Self, NcError> {
        let letters: Vec<String> = letters.into_iter().map(Into::into).collect();
        for (i, l) in letters.iter().enumerate() {
            if letters[..i].contains(l) {
                return Err(NcError::DuplicateLetter(l.clone()));
            }
        }
        Ok(Self { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn name(&self, rank: u8) -> &str {
        &self.letters[rank as usize]
    }

    pub fn rank(&self, name: &str) -> Option<u8> {
        self.letters.iter().position(|l| l == name).map(|i| i as u8)
    }

    pub fn names(&self) -> &[String] {
        &self.letters
    }

    /// Parses a `.`-joined word such as `f1.e2`; the empty string is the
    /// empty word.
    pub fn parse_word(&self, s: &str) -> Result<Word, NcError> {
        if s.is_empty() {
            return Ok(Word::empty());
        }
        s.split('.')
            .map(|n| self.rank(n).ok_or_else(|| NcError::UnknownLetter(n.to_string())))
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }

    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.0.iter().map(|&l| self.name(l)).collect::<Vec<_>>().join(".")
    }

    pub fn render_poly(&self, p: &NCPolynomial) -> String {
        if p.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (w, c)) in p.terms.iter().rev().enumerate() {
            let word = self.render_word(w);
            let single = c.denominator().is_one()
                && c.numerator().values().map(|p| p.terms().count()).sum::<usize>() == 1;
            let (neg, body) = if c.is_one() {
                (false, word)
            } else if (-c).is_one() {
                (true, word)
            } else if single {
                let cs = c.to_string();
                match cs.strip_prefix('-') {
                    Some(rest) => (true, format!("{rest}*{word}")),
                    None => (false, format!("{cs}*{word}")),
                }
            } else {
                (false, format!("({c})*{word}"))
            };
            match (i, neg) {
                (0, false) => {}
                (0, true) => s.push('-'),
                (_, false) => s.push_str(" + "),
                (_, true) => s.push_str(" - "),
            }
            s.push_str(&body);
        }
        s
    }
}

/// A sequence of letter ranks. Words are ordered degree-first, then
/// lexicographically by rank.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<u8>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letter(l: u8) -> Self {
        Word(vec![l])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.0
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

/// Finite linear combination of words with no zero coefficients stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct NCPolynomial {
    terms: BTreeMap<Word, Coefficient>,
}

impl NCPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(Word::empty(), Coefficient::one())
    }

    pub fn monomial(w: Word, c: Coefficient) -> Self {
        let mut p = Self::zero();
        p.add_term(w, c);
        p
    }

    pub fn word(w: Word) -> Self {
        Self::monomial(w, Coefficient::one())
    }

    pub fn letter(l: u8) -> Self {
        Self::word(Word::letter(l))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Coefficient)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in iter {
            p.add_term(w, c);
        }
        p
    }

    pub fn add_term(&mut self, w: Word, c: Coefficient) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing word order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Coefficient)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: &Word) -> Coefficient {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn scale(&self, c: &Coefficient) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, a)| (w.clone(), a * c)))
    }

    /// Common degree of all words, if there is one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Word::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn map_coefficients<F: Fn(&Coefficient) -> Coefficient>(&self, f: F) -> Self {
        Self::from_terms(self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }
}

impl Add for &NCPolynomial {
    type Output = NCPolynomial;
    fn add(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }
}

impl Sub for &NCPolynomial {
    type Output = NCPolynomial;
    fn sub(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = self.clone();
        for (w, c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Neg for &NCPolynomial {
    type Output = NCPolynomial;
    fn neg(self) -> NCPolynomial {
        self.scale(&Coefficient::from(-1))
    }
}

/// Concatenation product in the free algebra.
impl Mul for &NCPolynomial {
    type Output = NCPolynomial;
    fn mul(self, rhs: &NCPolynomial) -> NCPolynomial {
        let mut out = NCPolynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &rhs.terms {
                out.add_term(w1.concat(w2), c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_map().entries(self.terms.iter()).finish()
    }
}

/// A rewrite `lhs -> rhs` with `lhs` a word of length two and `rhs`
/// homogeneous of degree two.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RewriteRule {
    lhs: [u8; 2],
    rhs: NCPolynomial,
}

impl RewriteRule {
    pub fn new(lhs: &Word, rhs: NCPolynomial) -> Result<Self, NcError> {
        if lhs.len() != 2 {
            return Err(NcError::LhsLength(lhs.len()));
        }
        Ok(Self { lhs: [lhs.0[0], lhs.0[1]], rhs })
    }

    pub fn lhs(&self) -> Word {
        Word(self.lhs.to_vec())
    }

    pub fn rhs(&self) -> &NCPolynomial {
        &self.rhs
    }

    /// `lhs - rhs`, the relation this rule encodes.
    pub fn relation(&self) -> NCPolynomial {
        &NCPolynomial::word(self.lhs()) - &self.rhs
    }
}

/// An overlap `w1 w2 w3` where `w1 w2` and `w2 w3` are both rule left-hand
/// sides. The two rule indices point into [`ReductionSystem::rules`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ambiguity {
    pub word: Word,
    pub left_rule: usize,
    pub right_rule: usize,
}

/// Ordered quadratic rewrite rules over an alphabet. Every right-hand side
/// word strictly precedes its left-hand side, which certifies termination.
#[derive(Clone, Debug)]
pub struct ReductionSystem {
    alphabet: Alphabet,
    rules: Vec<RewriteRule>,
    index: HashMap<[u8; 2], usize>,
}

impl ReductionSystem {
    pub fn new(alphabet: Alphabet, rules: Vec<RewriteRule>) -> Result<Self, NcError> {
        let mut index = HashMap::new();
        for (i, r) in rules.iter().enumerate() {
            let lhs = r.lhs();
            if index.insert(r.lhs, i).is_some() {
                return Err(NcError::DuplicateLhs(alphabet.render_word(&lhs)));
            }
            for (w, _) in r.rhs.terms() {
                if w.len() != 2 {
                    return Err(NcError::NotQuadratic {
                        lhs: alphabet.render_word(&lhs),
                        degree: w.len(),
                    });
                }
                if *w >= lhs {
                    return Err(NcError::NotDecreasing {
                        lhs: alphabet.render_word(&lhs),
                        word: alphabet.render_word(w),
                    });
                }
            }
        }
        Ok(Self { alphabet, rules, index })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    pub fn rule_for(&self, a: u8, b: u8) -> Option<&RewriteRule> {
        self.index.get(&[a, b]).map(|&i| &self.rules[i])
    }

    fn first_redex(&self, w: &Word) -> Option<(usize, usize)> {
        w.0.windows(2)
            .enumerate()
            .find_map(|(pos, p)| self.index.get(&[p[0], p[1]]).map(|&r| (pos, r)))
    }

    pub fn is_irreducible(&self, w: &Word) -> bool {
        self.first_redex(w).is_none()
    }

    /// Applies `rule` once at position `pos` of `w` (the rule's left-hand side
    /// must occur there).
    pub fn reduce_at(&self, w: &Word, pos: usize, rule: usize) -> NCPolynomial {
        let r = &self.rules[rule];
        debug_assert_eq!(&w.0[pos..pos + 2], &r.lhs);
        let prefix = Word(w.0[..pos].to_vec());
        let suffix = Word(w.0[pos + 2..].to_vec());
        NCPolynomial::from_terms(
            r.rhs.terms().map(|(m, c)| (prefix.concat(m).concat(&suffix), c.clone())),
        )
    }

    /// Fully reduces `p`. Words are processed from the largest down, so every
    /// word is rewritten at most once after all contributions to it are known.
    pub fn normal_form(&self, p: &NCPolynomial) -> NCPolynomial {
        let mut pending = p.terms.clone();
        let mut done = NCPolynomial::zero();
        while let Some((w, c)) = pending.pop_last() {
            match self.first_redex(&w) {
                None => done.add_term(w, c),
                Some((pos, rule)) => {
                    for (m, rc) in self.reduce_at(&w, pos, rule).terms {
                        let v = &c * &rc;
                        match pending.entry(m) {
                            std::collections::btree_map::Entry::Vacant(e) => {
                                if !v.is_zero() {
                                    e.insert(v);
                                }
                            }
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                let s = e.get() + &v;
                                if s.is_zero() {
                                    e.remove();
                                } else {
                                    *e.get_mut() = s;
                                }
                            }
                        }
                    }
                }
            }
        }
        done
    }

    /// Product in the quotient algebra: concatenate, then reduce.
    pub fn multiply(&self, a: &NCPolynomial, b: &NCPolynomial) -> NCPolynomial {
        self.normal_form(&(a * b))
    }

    /// All words `x y z` such that both `x y` and `y z` are left-hand sides.
    pub fn overlap_ambiguities(&self) -> Vec<Ambiguity> {
        let mut out = Vec::new();
        for (i, r1) in self.rules.iter().enumerate() {
            for (j, r2) in self.rules.iter().enumerate() {
                if r1.lhs[1] == r2.lhs[0] {
                    out.push(Ambiguity {
                        word: Word(vec![r1.lhs[0], r1.lhs[1], r2.lhs[1]]),
                        left_rule: i,
                        right_rule: j,
                    });
                }
            }
        }
        out.sort_by(|a, b| a.word.cmp(&b.word));
        out
    }

    /// Resolves one ambiguity along both branches. Returns the two fully
    /// reduced results (left rule first, right rule first).
    pub fn resolve(&self, a: &Ambiguity) -> (NCPolynomial, NCPolynomial) {
        let left = self.normal_form(&self.reduce_at(&a.word, 0, a.left_rule));
        let right = self.normal_form(&self.reduce_at(&a.word, 1, a.right_rule));
        (left, right)
    }

    /// Diamond-lemma check over all overlap ambiguities. Inclusion
    /// ambiguities cannot occur since every left-hand side has length two.
    pub fn confluence_check(&self) -> VerificationReport {
        let mut report = VerificationReport::new("confluence");
        let amb = self.overlap_ambiguities();
        let mut failures = Vec::new();
        for a in &amb {
            let (l, r) = self.resolve(a);
            if l != r {
                failures.push(format!(
                    "{}: {} vs {}",
                    self.alphabet.render_word(&a.word),
                    self.alphabet.render_poly(&l),
                    self.alphabet.render_poly(&r)
                ));
            }
        }
        report.push(
            "overlap-ambiguities-resolve",
            "every overlap ambiguity of the reduction system resolves",
            format!("0 of {} unresolved", amb.len()),
            if failures.is_empty() {
                format!("0 of {} unresolved", amb.len())
            } else {
                format!("{} of {} unresolved; first {}", failures.len(), amb.len(), failures[0])
            },
            failures.is_empty(),
        );
        report
    }

    pub fn is_confluent(&self) -> bool {
        self.overlap_ambiguities().iter().all(|a| {
            let (l, r) = self.resolve(a);
            l == r
        })
    }

    /// Degree-`k` words containing no left-hand side, in increasing order.
    pub fn irreducible_words(&self, k: usize) -> Vec<Word> {
        let n = self.alphabet.len() as u8;
        let mut layer = vec![Word::empty()];
        for _ in 0..k {
            let mut next = Vec::new();
            for w in &layer {
                for l in 0..n {
                    if let Some(&last) = w.0.last() {
                        if self.index.contains_key(&[last, l]) {
                            continue;
                        }
                    }
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            layer = next;
        }
        layer.sort();
        layer
    }

    /// Number of irreducible words in each degree `0..=max_degree`.
    pub fn hilbert_series(&self, max_degree: usize) -> Vec<usize> {
        // transfer-matrix count over the last letter
        let n = self.alphabet.len();
        let mut out = vec![1];
        if max_degree == 0 {
            return out;
        }
        let mut ending = vec![1usize; n];
        out.push(n);
        for _ in 2..=max_degree {
            let mut next = vec![0usize; n];
            for (last, &cnt) in ending.iter().enumerate() {
                if cnt == 0 {
                    continue;
                }
                for (l, slot) in next.iter_mut().enumerate() {
                    if !self.index.contains_key(&[last as u8, l as u8]) {
                        *slot += cnt;
                    }
                }
            }
            out.push(next.iter().sum());
            ending = next;
        }
        out
    }

    /// One line per rule: `LHS -> c1*W1 + c2*W2`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for r in &self.rules {
            s.push_str(&self.alphabet.render_word(&r.lhs()));
            s.push_str(" -> ");
            s.push_str(&self.alphabet.render_poly(&r.rhs));
            s.push('\n');
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toy(names: &[&str], rules: &[(&str, &[(&str, i64)])]) -> ReductionSystem {
        let a = Alphabet::new(names.iter().copied()).unwrap();
        let rules = rules
            .iter()
            .map(|(lhs, rhs)| {
                let rhs = NCPolynomial::from_terms(
                    rhs.iter().map(|(w, c)| (a.parse_word(w).unwrap(), Coefficient::from(*c))),
                );
                RewriteRule::new(&a.parse_word(lhs).unwrap(), rhs).unwrap()
            })
            .collect();
        ReductionSystem::new(a, rules).unwrap()
    }

    #[test]
    fn empty_system() {
        let s = toy(&["x", "y"], &[]);
        assert!(s.overlap_ambiguities().is_empty());
        assert!(s.confluence_check().overall);
        assert_eq!(s.hilbert_series(3), vec![1, 2, 4, 8]);
        assert_eq!(s.irreducible_words(0), vec![Word::empty()]);
    }

    #[test]
    fn single_square_rule() {
        let s = toy(&["x"], &[("x.x", &[])]);
        let amb = s.overlap_ambiguities();
        assert_eq!(amb.len(), 1);
        assert_eq!(amb[0].word, Word(vec![0, 0, 0]));
        assert!(s.is_confluent());
    }

    #[test]
    fn detects_non_confluence() {
        // c.b -> a.a and b.a -> 0 disagree on c.b.a
        let s = toy(&["a", "b", "c"], &[("c.b", &[("a.a", 1)]), ("b.a", &[])]);
        let rep = s.confluence_check();
        assert!(!rep.overall);
        assert!(rep.checks[0].actual.contains("c.b.a"));
    }

    #[test]
    fn rejects_increasing_rule() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let rhs = NCPolynomial::word(a.parse_word("y.x").unwrap());
        let rule = RewriteRule::new(&a.parse_word("x.y").unwrap(), rhs).unwrap();
        assert!(matches!(
            ReductionSystem::new(a, vec![rule]),
            Err(NcError::NotDecreasing { .. })
        ));
    }

    #[test]
    fn duplicate_letters_rejected() {
        assert_eq!(Alphabet::new(["x", "x"]), Err(NcError::DuplicateLetter("x".into())));
    }

    #[test]
    fn commutative_polynomial_ring() {
        // y.x -> x.y gives the commutative ring in two variables
        let s = toy(&["x", "y"], &[("y.x", &[("x.y", 1)])]);
        assert_eq!(s.hilbert_series(4), vec![1, 2, 3, 4, 5]);
        let w = s.alphabet().parse_word("y.y.x.x").unwrap();
        let nf = s.normal_form(&NCPolynomial::word(w));
        assert_eq!(s.alphabet().render_poly(&nf), "x.x.y.y");
    }

    #[test]
    fn render_polynomials() {
        let a = Alphabet::new(["x", "y"]).unwrap();
        let p = NCPolynomial::from_terms([
            (a.parse_word("x.y").unwrap(), Coefficient::signed_q_pow(true, 2)),
            (a.parse_word("y.x").unwrap(), Coefficient::nu()),
        ]);
        assert_eq!(a.render_poly(&p), "(q - q^-1)*y.x - q^2*x.y");
    }
}
