//! Exact bivariate Laurent polynomials over the integers.
//!
//! Every invariant in this crate lives in `Z[u, u⁻¹, v, v⁻¹]`. Terms are kept
//! in a sparse map keyed by [`Monomial`], whose ordering is (total degree,
//! u-degree) ascending. That ordering is also the print order and makes the
//! normalization tie-break a lookup of the first key.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("negative power {power} of non-unit coefficient {coeff}")]
    NonUnitNegativePower { coeff: BigInt, power: i64 },
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{dividend} is not divisible by {divisor}")]
    NotDivisible { dividend: String, divisor: String },
    #[error("a negative exponent was evaluated at zero")]
    EvalAtZero,
    #[error("polynomial parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// The monomial `u^u · v^v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub u: i64,
    pub v: i64,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { u: 0, v: 0 };

    pub fn new(u: i64, v: i64) -> Self {
        Monomial { u, v }
    }

    pub fn total_degree(&self) -> i64 {
        self.u + self.v
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.total_degree(), self.u).cmp(&(other.total_degree(), other.u))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(self, rhs: Monomial) -> Monomial {
        Monomial::new(self.u + rhs.u, self.v + rhs.v)
    }
}

#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

/// Result of [`LaurentPoly::normalize`]: `input = unit_sign · (uv)^unit_exponent · poly`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Normalized {
    pub poly: LaurentPoly,
    pub unit_exponent: i64,
    pub unit_sign: i8,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<C: Into<BigInt>>(c: C) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c · u^i · v^j`
    pub fn term<C: Into<BigInt>>(c: C, i: i64, j: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::new(i, j), c);
        }
        LaurentPoly { terms }
    }

    pub fn u() -> Self {
        Self::term(1, 1, 0)
    }

    pub fn v() -> Self {
        Self::term(1, 0, 1)
    }

    /// `(uv)^k`
    pub fn uv_pow(k: i64) -> Self {
        Self::term(1, k, k)
    }

    /// `(-uv)^k`
    pub fn neg_uv_pow(k: i64) -> Self {
        let c = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::term(c, k, k)
    }

    /// Builds a polynomial from `(coeff, u-exp, v-exp)` triples, merging repeats.
    pub fn from_terms<I, C>(it: I) -> Self
    where
        I: IntoIterator<Item = (C, i64, i64)>,
        C: Into<BigInt>,
    {
        let mut p = LaurentPoly::zero();
        for (c, i, j) in it {
            p.add_term(Monomial::new(i, j), c.into());
        }
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::ONE).is_some_and(|c| c.is_one())
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in print order: (total degree, u-degree) ascending.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, i: i64, j: i64) -> BigInt {
        self.terms.get(&Monomial::new(i, j)).cloned().unwrap_or_default()
    }

    /// True for `±u^i v^j`, the units of the ring.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms.values().all(|c| c.abs().is_one())
    }

    pub fn as_monomial(&self) -> Option<(Monomial, &BigInt)> {
        if self.terms.len() == 1 {
            self.terms.iter().next().map(|(m, c)| (*m, c))
        } else {
            None
        }
    }

    pub fn min_u(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.u).min()
    }

    pub fn max_u(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.u).max()
    }

    pub fn min_v(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.v).min()
    }

    pub fn max_v(&self) -> Option<i64> {
        self.terms.keys().map(|m| m.v).max()
    }

    /// Multiplies by the monomial `u^du v^dv`.
    pub fn shift(&self, du: i64, dv: i64) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (Monomial::new(m.u + du, m.v + dv), c.clone())).collect();
        LaurentPoly { terms }
    }

    pub fn scale<C: Into<BigInt>>(&self, c: C) -> Self {
        let c = c.into();
        if c.is_zero() {
            return LaurentPoly::zero();
        }
        let terms = self.terms.iter().map(|(m, x)| (*m, x * &c)).collect();
        LaurentPoly { terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `(c · u^i v^j)^k`. Negative `k` is only defined for `c = ±1`.
    pub fn monomial_pow(c: i64, i: i64, j: i64, k: i64) -> Result<Self, LaurentError> {
        if k < 0 && c.abs() != 1 {
            return Err(LaurentError::NonUnitNegativePower { coeff: BigInt::from(c), power: k });
        }
        let coeff = if k >= 0 {
            num_traits::pow(BigInt::from(c), k as usize)
        } else if c == -1 && k % 2 != 0 {
            BigInt::from(-1)
        } else {
            BigInt::one()
        };
        Ok(LaurentPoly::term(coeff, i * k, j * k))
    }

    /// `p(u, v) ↦ p(v, u)`
    pub fn swap_uv(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (Monomial::new(m.v, m.u), c.clone())).collect();
        LaurentPoly { terms }
    }

    /// `p(u, v) ↦ p(u⁻¹, v⁻¹)`
    pub fn invert_vars(&self) -> Self {
        let terms = self.terms.iter().map(|(m, c)| (Monomial::new(-m.u, -m.v), c.clone())).collect();
        LaurentPoly { terms }
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Both operands are shifted by monomials so their minimal u- and
    /// v-exponents are zero, then divided as polynomials in `u` whose
    /// coefficients are polynomials in `v`. A nonzero remainder at any stage
    /// means no Laurent quotient exists.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, LaurentError> {
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(LaurentPoly::zero());
        }
        if let Some((m, c)) = divisor.as_monomial() {
            if c.abs().is_one() {
                let sign = c.signum();
                let terms = self.terms.iter().map(|(t, x)| (Monomial::new(t.u - m.u, t.v - m.v), x * &sign)).collect();
                return Ok(LaurentPoly { terms });
            }
        }
        let not_divisible = || LaurentError::NotDivisible { dividend: self.to_string(), divisor: divisor.to_string() };

        let (au, av) = (self.min_u().unwrap(), self.min_v().unwrap());
        let (bu, bv) = (divisor.min_u().unwrap(), divisor.min_v().unwrap());
        let mut rem = to_dense(self, au, av);
        let den = to_dense(divisor, bu, bv);
        let db = den.len() - 1;
        if rem.len() - 1 < db {
            return Err(not_divisible());
        }
        let lead = &den[db];
        let mut quot: Vec<Vec<BigInt>> = vec![Vec::new(); rem.len() - db];
        for k in (db..rem.len()).rev() {
            if rem[k].is_empty() {
                continue;
            }
            let q = upoly_exact_div(&rem[k], lead).ok_or_else(not_divisible)?;
            for (i, row) in den.iter().enumerate() {
                let prod = upoly_mul(&q, row);
                upoly_sub_assign(&mut rem[k - db + i], &prod);
            }
            debug_assert!(rem[k].is_empty());
            quot[k - db] = q;
        }
        if rem.iter().any(|r| !r.is_empty()) {
            return Err(not_divisible());
        }
        let mut out = LaurentPoly::zero();
        for (i, row) in quot.iter().enumerate() {
            for (j, c) in row.iter().enumerate() {
                if !c.is_zero() {
                    out.terms.insert(Monomial::new(i as i64 + au - bu, j as i64 + av - bv), c.clone());
                }
            }
        }
        Ok(out)
    }

    /// Exact substitution `u = u0, v = v0`.
    pub fn evaluate_int(&self, u0: i64, v0: i64) -> Result<BigRational, LaurentError> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let fu = rational_pow(u0, m.u)?;
            let fv = rational_pow(v0, m.v)?;
            acc += BigRational::from_integer(c.clone()) * fu * fv;
        }
        Ok(acc)
    }

    /// Value at `u = v = -1`; always an integer.
    pub fn eval_minus_one(&self) -> BigInt {
        self.terms.iter().map(|(m, c)| if (m.u + m.v).rem_euclid(2) == 0 { c.clone() } else { -c }).sum()
    }

    /// Removes the unit `±(uv)^s`: the lowest u-power becomes zero and the
    /// lowest term in (total degree, u-degree) order gets a positive sign.
    pub fn normalize(&self) -> Normalized {
        let Some(s) = self.min_u() else {
            return Normalized { poly: LaurentPoly::zero(), unit_exponent: 0, unit_sign: 1 };
        };
        let shifted = self.shift(-s, -s);
        let lowest = shifted.terms.values().next().expect("nonzero polynomial");
        if lowest.is_negative() {
            Normalized { poly: -shifted, unit_exponent: s, unit_sign: -1 }
        } else {
            Normalized { poly: shifted, unit_exponent: s, unit_sign: 1 }
        }
    }

    pub fn normalized(&self) -> LaurentPoly {
        self.normalize().poly
    }

    /// Equality up to a unit `±u^i v^j`.
    pub fn equal_up_to_unit(&self, other: &LaurentPoly) -> bool {
        match (self.terms.iter().next(), other.terms.iter().next()) {
            (None, None) => true,
            (Some((ma, ca)), Some((mb, cb))) => {
                if self.len() != other.len() {
                    return false;
                }
                let (du, dv) = (mb.u - ma.u, mb.v - ma.v);
                let sign = if ca.signum() == cb.signum() { 1 } else { -1 };
                self.shift(du, dv).scale(sign) == *other
            }
            _ => false,
        }
    }
}

fn rational_pow(base: i64, exp: i64) -> Result<BigRational, LaurentError> {
    if exp >= 0 {
        Ok(BigRational::from_integer(num_traits::pow(BigInt::from(base), exp as usize)))
    } else if base == 0 {
        Err(LaurentError::EvalAtZero)
    } else {
        let d = num_traits::pow(BigInt::from(base), (-exp) as usize);
        Ok(BigRational::new(BigInt::one(), d))
    }
}

// Dense helpers: outer index is the u-degree, inner vectors are polynomials in v
// with trailing zeros trimmed (an empty vector is the zero polynomial).

fn to_dense(p: &LaurentPoly, du: i64, dv: i64) -> Vec<Vec<BigInt>> {
    let deg_u = (p.max_u().unwrap() - du) as usize;
    let mut out: Vec<Vec<BigInt>> = vec![Vec::new(); deg_u + 1];
    for (m, c) in &p.terms {
        let row = &mut out[(m.u - du) as usize];
        let j = (m.v - dv) as usize;
        if row.len() <= j {
            row.resize(j + 1, BigInt::zero());
        }
        row[j] = c.clone();
    }
    out
}

fn upoly_trim(p: &mut Vec<BigInt>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

fn upoly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    upoly_trim(&mut out);
    out
}

fn upoly_sub_assign(a: &mut Vec<BigInt>, b: &[BigInt]) {
    if a.len() < b.len() {
        a.resize(b.len(), BigInt::zero());
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x -= y;
    }
    upoly_trim(a);
}

/// Exact division of univariate integer polynomials, `None` if not exact.
fn upoly_exact_div(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    if a.is_empty() {
        return Some(Vec::new());
    }
    if a.len() < b.len() {
        return None;
    }
    let db = b.len() - 1;
    let lead = &b[db];
    let mut rem = a.to_vec();
    let mut q = vec![BigInt::zero(); a.len() - db];
    for k in (db..a.len()).rev() {
        if rem[k].is_zero() {
            continue;
        }
        let (c, r) = rem[k].div_rem(lead);
        if !r.is_zero() {
            return None;
        }
        for (i, y) in b.iter().enumerate() {
            rem[k - db + i] -= &c * y;
        }
        q[k - db] = c;
    }
    if rem.iter().any(|c| !c.is_zero()) {
        return None;
    }
    upoly_trim(&mut q);
    Some(q)
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, c.clone());
        }
    }
}

impl AddAssign for LaurentPoly {
    fn add_assign(&mut self, rhs: LaurentPoly) {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(mut self, rhs: LaurentPoly) -> LaurentPoly {
        self -= &rhs;
        self
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(*m, -c);
        }
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(*ma * *mb, ca * cb);
            }
        }
        out
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -self.clone()
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::zero(), |acc, p| acc + p)
    }
}

impl std::iter::Product for LaurentPoly {
    fn product<I: Iterator<Item = LaurentPoly>>(iter: I) -> LaurentPoly {
        iter.fold(LaurentPoly::one(), |acc, p| &acc * &p)
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: char, e: i64, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        write!(f, "{name}")
    } else {
        write!(f, "{name}^{e}")
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            match (idx, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mut first = true;
            if !mag.is_one() || *m == Monomial::ONE {
                write!(f, "{mag}")?;
                first = false;
            }
            write_var(f, 'u', m.u, &mut first)?;
            write_var(f, 'v', m.v, &mut first)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = LaurentError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        PolyParser::new(s).parse()
    }
}

pub fn parse_poly(text: &str) -> Result<LaurentPoly, LaurentError> {
    text.parse()
}

pub fn format_poly(p: &LaurentPoly) -> String {
    p.to_string()
}

struct PolyParser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl<'a> PolyParser<'a> {
    fn new(s: &'a str) -> Self {
        PolyParser { src: s.as_bytes(), pos: 0 }
    }

    fn err<T>(&self, msg: impl Into<String>) -> Result<T, LaurentError> {
        Err(LaurentError::Parse { pos: self.pos, msg: msg.into() })
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn digits(&mut self) -> Option<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        (self.pos > start).then(|| std::str::from_utf8(&self.src[start..self.pos]).unwrap())
    }

    fn exponent(&mut self) -> Result<i64, LaurentError> {
        if !self.eat(b'^') {
            return Ok(1);
        }
        let paren = self.eat(b'(');
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        let Some(d) = self.digits() else {
            return self.err("expected exponent");
        };
        let Ok(mut e) = d.parse::<i64>() else {
            return self.err("exponent out of range");
        };
        if neg {
            e = -e;
        }
        if paren && !self.eat(b')') {
            return self.err("expected ')'");
        }
        Ok(e)
    }

    fn factor(&mut self, coeff: &mut BigInt, mono: &mut Monomial) -> Result<(), LaurentError> {
        match self.peek() {
            Some(b'u') => {
                self.pos += 1;
                mono.u += self.exponent()?;
            }
            Some(b'v') => {
                self.pos += 1;
                mono.v += self.exponent()?;
            }
            Some(b) if b.is_ascii_digit() => {
                let d = self.digits().unwrap();
                *coeff *= d.parse::<BigInt>().expect("digits");
            }
            Some(b'(') => {
                // parenthesized monomial such as (uv)^-1
                self.pos += 1;
                let mut c = BigInt::one();
                let mut m = Monomial::ONE;
                self.factor(&mut c, &mut m)?;
                while self.eat(b'*') || matches!(self.peek(), Some(b'u' | b'v')) {
                    self.factor(&mut c, &mut m)?;
                }
                if !self.eat(b')') {
                    return self.err("expected ')'");
                }
                let e = self.exponent()?;
                if e < 0 && !c.abs().is_one() {
                    return self.err("negative power of a non-unit coefficient");
                }
                *coeff *= if e >= 0 {
                    num_traits::pow(c.clone(), e as usize)
                } else if c.is_negative() && e % 2 != 0 {
                    BigInt::from(-1)
                } else {
                    BigInt::one()
                };
                mono.u += m.u * e;
                mono.v += m.v * e;
            }
            Some(_) => return self.err("unexpected character"),
            None => return self.err("unexpected end of input"),
        }
        Ok(())
    }

    fn parse(mut self) -> Result<LaurentPoly, LaurentError> {
        let mut out = LaurentPoly::zero();
        if self.peek().is_none() {
            return self.err("empty polynomial");
        }
        let mut first = true;
        while self.peek().is_some() {
            let neg = self.eat(b'-');
            if !neg && !self.eat(b'+') && !first {
                return self.err("expected '+' or '-'");
            }
            first = false;
            let mut coeff = BigInt::one();
            let mut mono = Monomial::ONE;
            self.factor(&mut coeff, &mut mono)?;
            // `*` is optional before a variable or a parenthesized factor
            while self.eat(b'*') || matches!(self.peek(), Some(b'u' | b'v' | b'(')) {
                self.factor(&mut coeff, &mut mono)?;
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(mono, coeff);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn factor() -> LaurentPoly {
        p("u - 1") * p("v - 1") * p("u*v - 1")
    }

    #[test]
    fn add_examples() {
        assert!((p("u") + p("-u")).is_zero());
        assert_eq!(p("1 + u*v") + p("u*v"), p("1 + 2*u*v"));
        let s = p("u^-1*v") + p("u*v^-1");
        assert_eq!(s.len(), 2);
        assert_eq!(s.coeff(-1, 1), BigInt::from(1));
        assert_eq!(s.coeff(1, -1), BigInt::from(1));
    }

    #[test]
    fn mul_examples() {
        assert_eq!(p("u - 1") * p("v - 1"), p("u*v - u - v + 1"));
        assert!((p("u*v") * p("u^-1*v^-1")).is_one());
    }

    #[test]
    fn factor_product_by_second_route() {
        // expand (u-1)(v-1)(uv-1) as a signed sum over the 8 choices of one
        // summand per factor
        let mut expected = LaurentPoly::zero();
        for pick in 0..8u32 {
            let mut c = 1i64;
            let (mut i, mut j) = (0, 0);
            if pick & 1 == 1 {
                i += 1
            } else {
                c = -c
            }
            if pick & 2 == 2 {
                j += 1
            } else {
                c = -c
            }
            if pick & 4 == 4 {
                i += 1;
                j += 1
            } else {
                c = -c
            }
            expected += LaurentPoly::term(c, i, j);
        }
        let k = factor();
        assert_eq!(k, expected);
        assert_eq!(k.coeff(0, 0), BigInt::from(-1));
        assert_eq!(k.coeff(2, 2), BigInt::from(1));
        assert_eq!(k.normalize().poly.terms().next().unwrap().1, &BigInt::from(1));
    }

    #[test]
    fn monomial_pow_examples() {
        assert_eq!(LaurentPoly::monomial_pow(-1, 1, 1, 2).unwrap(), p("u^2*v^2"));
        assert_eq!(LaurentPoly::monomial_pow(1, 1, 1, -1).unwrap(), p("u^-1*v^-1"));
        assert_eq!(LaurentPoly::monomial_pow(-1, 1, 1, 12).unwrap(), p("u^12*v^12"));
        assert_eq!(LaurentPoly::monomial_pow(-1, 1, 1, -3).unwrap(), p("-u^-3*v^-3"));
        assert_eq!(LaurentPoly::monomial_pow(3, 0, 1, 2).unwrap(), p("9*v^2"));
        assert!(matches!(LaurentPoly::monomial_pow(2, 1, 0, -1), Err(LaurentError::NonUnitNegativePower { .. })));
        assert_eq!(LaurentPoly::neg_uv_pow(3), LaurentPoly::monomial_pow(-1, 1, 1, 3).unwrap());
    }

    #[test]
    fn exact_div_examples() {
        let k = factor();
        assert_eq!(k.exact_div(&p("u - 1")).unwrap(), p("v - 1") * p("u*v - 1"));
        assert_eq!(k.exact_div(&LaurentPoly::one()).unwrap(), k);
        assert!(matches!(k.exact_div(&p("u + 1")), Err(LaurentError::NotDivisible { .. })));
        assert!(matches!(k.exact_div(&LaurentPoly::zero()), Err(LaurentError::DivisionByZero)));
        assert!(LaurentPoly::zero().exact_div(&k).unwrap().is_zero());
        // Laurent operands
        let a = p("u^-3*v^2 - u^-2*v^5");
        let b = p("u^-1*v - v^4");
        assert_eq!(a.exact_div(&b).unwrap(), p("u^-2*v"));
        assert!(p("2*u + 2").exact_div(&p("4")).is_err());
        assert_eq!(p("2*u + 2").exact_div(&p("2")).unwrap(), p("u + 1"));
    }

    #[test]
    fn evaluate_examples() {
        let q = p("2 + 5*u*v - u^2*v^3 + 2*u^2*v^2 + 4*u^3*v^3");
        assert_eq!(q.evaluate_int(-1, -1).unwrap(), BigRational::from_integer(14.into()));
        assert_eq!(q.eval_minus_one(), BigInt::from(14));
        assert!(factor().evaluate_int(-1, -1).unwrap().is_zero());
        assert!(LaurentPoly::zero().evaluate_int(-1, -1).unwrap().is_zero());
        assert_eq!(p("u^-1").evaluate_int(2, 5).unwrap(), BigRational::new(1.into(), 2.into()));
        assert_eq!(p("u^-1 + v").evaluate_int(0, 1), Err(LaurentError::EvalAtZero));
        assert_eq!(p("u^2 + v").evaluate_int(0, 3).unwrap(), BigRational::from_integer(3.into()));
    }

    #[test]
    fn normalize_examples() {
        let n = (LaurentPoly::neg_uv_pow(2).scale(3)).normalize();
        assert_eq!(n.poly, p("3"));
        assert_eq!((n.unit_exponent, n.unit_sign), (2, 1));

        let body = p("-u*v^2 + 5 + 2*(u*v)^-1 + 2*u*v + 4*(u*v)^2");
        let n = (LaurentPoly::neg_uv_pow(12) * body).normalize();
        assert_eq!(n.poly, p("2 + 5*u*v - u^2*v^3 + 2*u^2*v^2 + 4*u^3*v^3"));
        assert_eq!((n.unit_exponent, n.unit_sign), (11, 1));

        let body = p("-u^2*v - 4*(u*v)^2 + u*v - (u*v)^-1 - 1");
        let n = (LaurentPoly::neg_uv_pow(8) * body).normalize();
        assert_eq!(n.poly, p("1 + u*v - u^2*v^2 + u^3*v^2 + 4*u^3*v^3"));

        let z = LaurentPoly::zero().normalize();
        assert!(z.poly.is_zero());
        assert_eq!((z.unit_exponent, z.unit_sign), (0, 1));
    }

    #[test]
    fn normalize_tie_break_prefers_low_u_degree() {
        // u and v share total degree 1; the rule looks at the v term first
        let n = p("u - v").normalize();
        assert_eq!(n.poly, p("v - u"));
        assert_eq!(n.unit_sign, -1);
    }

    #[test]
    fn parse_examples() {
        let q = p("1 + u + u*v");
        assert_eq!(q, LaurentPoly::from_terms([(1, 0, 0), (1, 1, 0), (1, 1, 1)]));
        assert_eq!(p("u^-1*v^-1"), LaurentPoly::term(1, -1, -1));
        assert!(p("0").is_zero());
        assert_eq!(p(" - 3 * u ^ 2 v + u^(-2)"), LaurentPoly::from_terms([(-3, 2, 1), (1, -2, 0)]));
        assert_eq!(p("2uv"), LaurentPoly::term(2, 1, 1));
    }

    #[test]
    fn parse_errors_carry_position() {
        for bad in ["", "u +", "u^", "3 4 x", "u ** v", "(u"] {
            assert!(matches!(bad.parse::<LaurentPoly>(), Err(LaurentError::Parse { .. })), "{bad}");
        }
        match "1 + w".parse::<LaurentPoly>() {
            Err(LaurentError::Parse { pos, .. }) => assert_eq!(pos, 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn format_order() {
        let q = p("4*u^3*v^3 - u^2*v^3 + 2 + 2*u^2*v^2 + 5*u*v");
        assert_eq!(q.to_string(), "2 + 5*u*v + 2*u^2*v^2 - u^2*v^3 + 4*u^3*v^3");
        assert_eq!(p("-1 + u^-1").to_string(), "u^-1 - 1");
        assert_eq!(p("-v").to_string(), "-v");
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        prop::collection::vec((-9i64..=9, -3i64..=3, -3i64..=3), 0..6).prop_map(LaurentPoly::from_terms)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn exact_div_inverts_mul(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b).unwrap(), a);
        }

        #[test]
        fn normalize_reconstructs_and_is_idempotent(a in arb_poly()) {
            let n = a.normalize();
            let back = n.poly.shift(n.unit_exponent, n.unit_exponent).scale(n.unit_sign);
            prop_assert_eq!(back, a);
            let again = n.poly.normalize();
            prop_assert_eq!(&again.poly, &n.poly);
            prop_assert_eq!((again.unit_exponent, again.unit_sign), (0, 1));
        }

        #[test]
        fn evaluation_is_a_homomorphism(a in arb_poly(), b in arb_poly(), u0 in -3i64..=3, v0 in -3i64..=3) {
            prop_assume!(u0 != 0 && v0 != 0);
            let ea = a.evaluate_int(u0, v0).unwrap();
            let eb = b.evaluate_int(u0, v0).unwrap();
            prop_assert_eq!((&a * &b).evaluate_int(u0, v0).unwrap(), &ea * &eb);
            prop_assert_eq!((&a + &b).evaluate_int(u0, v0).unwrap(), ea + eb);
        }

        #[test]
        fn format_parse_round_trip(a in arb_poly()) {
            prop_assert_eq!(a.to_string().parse::<LaurentPoly>().unwrap(), a);
        }
    }
}
