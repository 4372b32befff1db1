//! Exact coefficients: Laurent polynomials in `q` over the rationals, their
//! field of fractions, and a polynomial extension by three commuting symbols
//! `c1`, `c2`, `c3`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("divisor depends on the symbols c1..c3")]
    SymbolicDivisor,
    #[error("pole at q = 1")]
    PoleAtOne,
    #[error("value still depends on the symbols c1..c3")]
    SymbolsPresent,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A finite sum `sum_k a_k q^k` with rational `a_k`. Zero coefficients are
/// never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(rat(1), 0)
    }

    pub fn monomial(c: BigRational, exp: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        Self { terms }
    }

    /// `q^exp`
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(rat(1), exp)
    }

    pub fn from_terms<I: IntoIterator<Item = (i32, BigRational)>>(iter: I) -> Self {
        let mut p = Self::zero();
        for (e, c) in iter {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_int_terms(terms: &[(i32, i64)]) -> Self {
        Self::from_terms(terms.iter().map(|&(e, c)| (e, rat(c))))
    }

    fn add_term(&mut self, exp: i32, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigRational::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigRational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.terms.values().next_back()
    }

    pub fn shift(&self, by: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (e + by, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, a)| (*e, a * c)).collect(),
        }
    }

    pub fn eval_at_one(&self) -> BigRational {
        self.terms.values().fold(BigRational::zero(), |acc, c| acc + c)
    }

    /// Exponents rewritten with `q` replaced by `q^-1`.
    pub fn invert_q(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect(),
        }
    }

    // Dense coefficients of `q^-min * self`, lowest degree first.
    fn to_dense(&self) -> (i32, Vec<BigRational>) {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return (0, Vec::new());
        };
        let mut v = vec![BigRational::zero(); (hi - lo) as usize + 1];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    fn from_dense(shift: i32, v: &[BigRational]) -> Self {
        Self::from_terms(
            v.iter()
                .enumerate()
                .filter(|(_, c)| !c.is_zero())
                .map(|(i, c)| (i as i32 + shift, c.clone())),
        )
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c.clone());
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, -c.clone());
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c.clone())).collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", Coefficient::from(self.clone()))
    }
}

// ---- dense univariate helpers (polynomials in q, index = exponent) ----

fn trim(v: &mut Vec<BigRational>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

fn poly_divrem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let db = b.len() - 1;
    let lead = &b[db];
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut quot = vec![BigRational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() / lead;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &factor * bc;
        }
        quot[shift] = factor;
        r.pop();
        trim(&mut r);
    }
    (quot, r)
}

fn poly_gcd(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(l) = x.last().cloned() {
        for c in &mut x {
            *c /= &l;
        }
    }
    x
}

/// Exponent vector of a monomial in the commuting symbols `c1, c2, c3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SymbolMonomial(pub [u16; 3]);

impl SymbolMonomial {
    pub const ONE: SymbolMonomial = SymbolMonomial([0; 3]);

    pub fn symbol(s: Symbol) -> Self {
        let mut e = [0; 3];
        e[s.index()] = 1;
        SymbolMonomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    fn mul(self, other: Self) -> Self {
        SymbolMonomial([
            self.0[0] + other.0[0],
            self.0[1] + other.0[1],
            self.0[2] + other.0[2],
        ])
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Symbol {
    C1,
    C2,
    C3,
}

impl Symbol {
    pub const ALL: [Symbol; 3] = [Symbol::C1, Symbol::C2, Symbol::C3];

    pub fn index(self) -> usize {
        self as usize
    }
}

/// An element of `Q(q)[c1, c2, c3]` with a symbol-free denominator, kept in
/// canonical form: the denominator is a monic polynomial in `q` with nonzero
/// constant term, coprime to the numerator.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Coefficient {
    num: BTreeMap<SymbolMonomial, LaurentPoly>,
    den: LaurentPoly,
}

impl Default for Coefficient {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for Coefficient {
    fn from(p: LaurentPoly) -> Self {
        let mut num = BTreeMap::new();
        if !p.is_zero() {
            num.insert(SymbolMonomial::ONE, p);
        }
        Coefficient { num, den: LaurentPoly::one() }
    }
}

impl From<i64> for Coefficient {
    fn from(n: i64) -> Self {
        Coefficient::from(LaurentPoly::monomial(rat(n), 0))
    }
}

impl From<BigRational> for Coefficient {
    fn from(r: BigRational) -> Self {
        Coefficient::from(LaurentPoly::monomial(r, 0))
    }
}

impl Coefficient {
    pub fn zero() -> Self {
        Coefficient { num: BTreeMap::new(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self::from(1)
    }

    /// `q^exp`
    pub fn q_pow(exp: i32) -> Self {
        Self::from(LaurentPoly::q_pow(exp))
    }

    /// `sign * q^exp`
    pub fn signed_q_pow(negative: bool, exp: i32) -> Self {
        let c = if negative { -1 } else { 1 };
        Self::from(LaurentPoly::monomial(rat(c), exp))
    }

    /// `nu = q - q^-1`
    pub fn nu() -> Self {
        Self::from(LaurentPoly::from_int_terms(&[(1, 1), (-1, -1)]))
    }

    pub fn symbol(s: Symbol) -> Self {
        let mut num = BTreeMap::new();
        num.insert(SymbolMonomial::symbol(s), LaurentPoly::one());
        Coefficient { num, den: LaurentPoly::one() }
    }

    pub fn from_ratio(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let mut n = BTreeMap::new();
        if !num.is_zero() {
            n.insert(SymbolMonomial::ONE, num);
        }
        Ok(Self::canonical(n, den))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one()
            && self.num.len() == 1
            && self.num.get(&SymbolMonomial::ONE).is_some_and(|p| p.is_one())
    }

    pub fn has_symbols(&self) -> bool {
        self.num.keys().any(|m| *m != SymbolMonomial::ONE)
    }

    pub fn numerator(&self) -> &BTreeMap<SymbolMonomial, LaurentPoly> {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    /// Numerator as a plain Laurent polynomial, when symbol-free.
    pub fn scalar_numerator(&self) -> Option<LaurentPoly> {
        if self.has_symbols() {
            return None;
        }
        Some(self.num.get(&SymbolMonomial::ONE).cloned().unwrap_or_default())
    }

    /// Returns the value as a Laurent polynomial when it is one.
    pub fn as_laurent(&self) -> Option<LaurentPoly> {
        if self.den.is_one() {
            self.scalar_numerator()
        } else {
            None
        }
    }

    fn canonical(mut num: BTreeMap<SymbolMonomial, LaurentPoly>, den: LaurentPoly) -> Self {
        num.retain(|_, p| !p.is_zero());
        if num.is_empty() {
            return Self::zero();
        }
        if den.is_one() {
            return Coefficient { num, den };
        }
        // Move q-powers of the denominator into the numerator.
        let lo = den.min_exp().expect("nonzero denominator");
        let den = den.shift(-lo);
        for p in num.values_mut() {
            *p = p.shift(-lo);
        }
        let (_, mut dd) = den.to_dense();
        if dd.len() > 1 {
            let mut g = dd.clone();
            for p in num.values() {
                let (_, pd) = p.to_dense();
                g = poly_gcd(&g, &pd);
                if g.len() == 1 {
                    break;
                }
            }
            if g.len() > 1 {
                dd = poly_divrem(&dd, &g).0;
                for p in num.values_mut() {
                    let (s, pd) = p.to_dense();
                    *p = LaurentPoly::from_dense(s, &poly_divrem(&pd, &g).0);
                }
            }
        }
        let lead = dd.last().cloned().expect("nonzero denominator");
        if !lead.is_one() {
            for c in &mut dd {
                *c /= &lead;
            }
            let inv = lead.recip();
            for p in num.values_mut() {
                *p = p.scale(&inv);
            }
        }
        Coefficient { num, den: LaurentPoly::from_dense(0, &dd) }
    }

    /// Re-normalises a value; a no-op on values built through the public API.
    pub fn normalized(&self) -> Self {
        Self::canonical(self.num.clone(), self.den.clone())
    }

    pub fn checked_div(&self, rhs: &Coefficient) -> Result<Coefficient, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let rnum = rhs.scalar_numerator().ok_or(ScalarError::SymbolicDivisor)?;
        let num = self.num.iter().map(|(m, p)| (*m, p * &rhs.den)).collect();
        Ok(Self::canonical(num, &self.den * &rnum))
    }

    pub fn inverse(&self) -> Result<Coefficient, ScalarError> {
        Coefficient::one().checked_div(self)
    }

    pub fn pow(&self, n: u32) -> Coefficient {
        (0..n).fold(Coefficient::one(), |acc, _| &acc * self)
    }

    /// Exact value at `q = 1`.
    pub fn evaluate_at_one(&self) -> Result<BigRational, ScalarError> {
        if self.has_symbols() {
            return Err(ScalarError::SymbolsPresent);
        }
        let d = self.den.eval_at_one();
        if d.is_zero() {
            // canonical form is reduced, so a zero here is a genuine pole
            return Err(ScalarError::PoleAtOne);
        }
        let n = self
            .num
            .get(&SymbolMonomial::ONE)
            .map(LaurentPoly::eval_at_one)
            .unwrap_or_else(BigRational::zero);
        Ok(n / d)
    }

    /// Substitutes `q = 1` while keeping the symbols.
    pub fn at_q_one(&self) -> Result<Coefficient, ScalarError> {
        let d = self.den.eval_at_one();
        if d.is_zero() {
            return Err(ScalarError::PoleAtOne);
        }
        let num = self
            .num
            .iter()
            .map(|(m, p)| (*m, LaurentPoly::monomial(p.eval_at_one() / &d, 0)))
            .collect();
        Ok(Self::canonical(num, LaurentPoly::one()))
    }

    /// True iff every monomial of the numerator contains `s`.
    pub fn is_divisible_by_symbol(&self, s: Symbol) -> bool {
        self.num.keys().all(|m| m.0[s.index()] > 0)
    }

    /// Replaces each symbol by the given value.
    pub fn substitute(&self, values: &[Coefficient; 3]) -> Coefficient {
        let mut acc = Coefficient::zero();
        for (m, p) in &self.num {
            let mut term = Coefficient::from(p.clone());
            for s in Symbol::ALL {
                term = &term * &values[s.index()].pow(m.0[s.index()] as u32);
            }
            acc = &acc + &term;
        }
        let den = Coefficient::from(self.den.clone());
        acc.checked_div(&den).expect("canonical denominator is nonzero")
    }

    /// Image under the bar involution `q -> q^-1`.
    pub fn bar(&self) -> Coefficient {
        let num = self.num.iter().map(|(m, p)| (*m, p.invert_q())).collect();
        Self::canonical(num, self.den.invert_q())
    }

    /// Expanded terms `(symbol monomial, q exponent, rational)` in display order.
    fn display_terms(poly: &BTreeMap<SymbolMonomial, LaurentPoly>) -> Vec<(SymbolMonomial, i32, BigRational)> {
        let mut out = Vec::new();
        for (m, p) in poly.iter().rev() {
            for (e, c) in p.terms().rev() {
                out.push((*m, e, c.clone()));
            }
        }
        out
    }

    fn render_sum(poly: &BTreeMap<SymbolMonomial, LaurentPoly>, spaced: bool) -> String {
        let terms = Self::display_terms(poly);
        if terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (i, (m, e, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let body = render_term(m, *e, &c.abs());
            match (i, neg, spaced) {
                (0, false, _) => {}
                (0, true, _) => s.push('-'),
                (_, false, true) => s.push_str(" + "),
                (_, true, true) => s.push_str(" - "),
                (_, false, false) => s.push('+'),
                (_, true, false) => s.push('-'),
            }
            s.push_str(&body);
        }
        s
    }
}

fn render_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

// `c` is positive here.
fn render_term(m: &SymbolMonomial, e: i32, c: &BigRational) -> String {
    let mut factors = Vec::new();
    if !c.is_one() {
        factors.push(render_rational(c));
    }
    for s in Symbol::ALL {
        match m.0[s.index()] {
            0 => {}
            1 => factors.push(format!("c{}", s.index() + 1)),
            k => factors.push(format!("c{}^{}", s.index() + 1, k)),
        }
    }
    match e {
        0 => {}
        1 => factors.push("q".to_string()),
        k => factors.push(format!("q^{k}")),
    }
    if factors.is_empty() {
        "1".to_string()
    } else {
        factors.join("*")
    }
}

/// Canonical text form, e.g. `-q^2`, `q - q^-1`, `c1*q^-3`, `(q^2-1)/(q^3+1)`.
impl fmt::Display for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return f.write_str(&Self::render_sum(&self.num, true));
        }
        let mut den = BTreeMap::new();
        den.insert(SymbolMonomial::ONE, self.den.clone());
        write!(f, "({})/({})", Self::render_sum(&self.num, false), Self::render_sum(&den, false))
    }
}

impl fmt::Debug for Coefficient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &Coefficient {
    type Output = Coefficient;
    fn add(self, rhs: &Coefficient) -> Coefficient {
        if rhs.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return rhs.clone();
        }
        if self.den == rhs.den {
            let mut num = self.num.clone();
            for (m, p) in &rhs.num {
                let slot = num.entry(*m).or_default();
                *slot = &*slot + p;
            }
            return Coefficient::canonical(num, self.den.clone());
        }
        let mut num: BTreeMap<SymbolMonomial, LaurentPoly> =
            self.num.iter().map(|(m, p)| (*m, p * &rhs.den)).collect();
        for (m, p) in &rhs.num {
            let slot = num.entry(*m).or_default();
            *slot = &*slot + &(p * &self.den);
        }
        Coefficient::canonical(num, &self.den * &rhs.den)
    }
}

impl Neg for &Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        Coefficient {
            num: self.num.iter().map(|(m, p)| (*m, -p)).collect(),
            den: self.den.clone(),
        }
    }
}

impl Sub for &Coefficient {
    type Output = Coefficient;
    fn sub(self, rhs: &Coefficient) -> Coefficient {
        self + &(-rhs)
    }
}

impl Mul for &Coefficient {
    type Output = Coefficient;
    fn mul(self, rhs: &Coefficient) -> Coefficient {
        if self.is_zero() || rhs.is_zero() {
            return Coefficient::zero();
        }
        let mut num: BTreeMap<SymbolMonomial, LaurentPoly> = BTreeMap::new();
        for (m1, p1) in &self.num {
            for (m2, p2) in &rhs.num {
                let slot = num.entry(m1.mul(*m2)).or_default();
                *slot = &*slot + &(p1 * p2);
            }
        }
        let den = &self.den * &rhs.den;
        if den.is_one() {
            num.retain(|_, p| !p.is_zero());
            return Coefficient { num, den };
        }
        Coefficient::canonical(num, den)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: Coefficient) -> Coefficient {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Coefficient> for Coefficient {
            type Output = Coefficient;
            fn $m(self, rhs: &Coefficient) -> Coefficient {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Coefficient {
    type Output = Coefficient;
    fn neg(self) -> Coefficient {
        -&self
    }
}

impl std::iter::Sum for Coefficient {
    fn sum<I: Iterator<Item = Coefficient>>(iter: I) -> Coefficient {
        iter.fold(Coefficient::zero(), |a, b| &a + &b)
    }
}

/// Arithmetic selector used by the generic entry point [`arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn arith(a: &Coefficient, b: &Coefficient, op: ArithOp) -> Result<Coefficient, ScalarError> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::Div => a.checked_div(b)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(t: &[(i32, i64)]) -> Coefficient {
        Coefficient::from(LaurentPoly::from_int_terms(t))
    }

    #[test]
    fn difference_of_squares() {
        let a = lp(&[(1, 1), (-1, -1)]);
        let b = lp(&[(1, 1), (-1, 1)]);
        assert_eq!(&a * &b, lp(&[(2, 1), (-2, -1)]));
    }

    #[test]
    fn exact_division() {
        let a = lp(&[(2, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, -1)]);
        assert_eq!(a.checked_div(&b).unwrap(), lp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn nu_squared() {
        let nu = Coefficient::nu();
        assert_eq!(&nu * &nu, lp(&[(2, 1), (0, -2), (-2, 1)]));
        assert_eq!((&nu * &nu).to_string(), "q^2 - 2 + q^-2");
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(
            Coefficient::one().checked_div(&Coefficient::zero()),
            Err(ScalarError::DivisionByZero)
        );
        assert_eq!(
            Coefficient::one().checked_div(&Coefficient::symbol(Symbol::C1)),
            Err(ScalarError::SymbolicDivisor)
        );
    }

    #[test]
    fn evaluate_at_one() {
        assert!(Coefficient::nu().evaluate_at_one().unwrap().is_zero());
        assert_eq!(Coefficient::signed_q_pow(true, 7).evaluate_at_one().unwrap(), rat(-1));
        let v = &Coefficient::signed_q_pow(true, -3) * &Coefficient::nu().pow(2);
        assert!(v.evaluate_at_one().unwrap().is_zero());
        let pole = Coefficient::one().checked_div(&Coefficient::nu()).unwrap();
        assert_eq!(pole.evaluate_at_one(), Err(ScalarError::PoleAtOne));
        assert_eq!(
            Coefficient::symbol(Symbol::C2).evaluate_at_one(),
            Err(ScalarError::SymbolsPresent)
        );
    }

    #[test]
    fn symbol_divisibility() {
        let c1 = Coefficient::symbol(Symbol::C1);
        let c2 = Coefficient::symbol(Symbol::C2);
        let c3 = Coefficient::symbol(Symbol::C3);
        let a = &(&c1 * &c2) + &(&(&c1 * &c1) * &Coefficient::q_pow(1));
        assert!(a.is_divisible_by_symbol(Symbol::C1));
        assert!(!(&c2 * &c3).is_divisible_by_symbol(Symbol::C1));
        assert!(Coefficient::zero().is_divisible_by_symbol(Symbol::C1));
    }

    #[test]
    fn rendering() {
        assert_eq!(Coefficient::signed_q_pow(true, 2).to_string(), "-q^2");
        assert_eq!(Coefficient::nu().to_string(), "q - q^-1");
        let c = &Coefficient::symbol(Symbol::C1) * &Coefficient::q_pow(-3);
        assert_eq!(c.to_string(), "c1*q^-3");
        let f = lp(&[(2, 1), (0, -1)]).checked_div(&lp(&[(3, 1), (0, 1)])).unwrap();
        assert_eq!(f.to_string(), "(q-1)/(q^2-q+1)");
        assert_eq!(Coefficient::zero().to_string(), "0");
        let half = Coefficient::from(BigRational::new(BigInt::from(-1), BigInt::from(2)));
        assert_eq!((&half * &Coefficient::q_pow(1)).to_string(), "-1/2*q");
    }

    #[test]
    fn canonical_denominator() {
        // q / (2 q^3 + 2 q) = 1/2 * 1/(q^2 + 1)
        let f = lp(&[(1, 1)]).checked_div(&lp(&[(3, 2), (1, 2)])).unwrap();
        assert_eq!(f.denominator(), &LaurentPoly::from_int_terms(&[(2, 1), (0, 1)]));
        assert_eq!(f.to_string(), "(1/2)/(q^2+1)");
        assert_eq!(f.normalized(), f);
    }

    #[test]
    fn bar_involution() {
        let x = lp(&[(3, 2), (-1, 5)]).checked_div(&lp(&[(1, 1), (0, 3)])).unwrap();
        assert_eq!(x.bar().bar(), x);
        assert_eq!(Coefficient::nu().bar(), -Coefficient::nu());
    }
}
