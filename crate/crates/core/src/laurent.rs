//! Multivariate Laurent polynomials in x-variables (any integer exponent) and
//! y-variables (non-negative exponents).
//!
//! The coefficient ring is a type parameter; [`Poly`] fixes it to [`BigInt`].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("polynomials live over different variable tables")]
    TableMismatch,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),
    #[error("y-exponent would become negative")]
    NegativeY,
    #[error("cannot substitute a non-monomial for `{0}` which occurs with a negative exponent")]
    NonUnitSubstitution(String),
    #[error("division is not exact")]
    Inexact,
    #[error("the zero polynomial has no leading exponent")]
    Zero,
    #[error("parse error: {0}")]
    Parse(String),
}

/// A variable of a [`VarTable`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Var {
    X(usize),
    Y(usize),
}

/// Ordered variable names. x-variables print as `x_<name>`, y-variables as `y_<name>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarTable {
    x_names: Vec<String>,
    y_names: Vec<String>,
    x_index: HashMap<String, usize>,
    y_index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new<S: Into<String>>(
        x_names: impl IntoIterator<Item = S>,
        y_names: impl IntoIterator<Item = S>,
    ) -> Result<Arc<Self>, LaurentError> {
        let x_names: Vec<String> = x_names.into_iter().map(Into::into).collect();
        let y_names: Vec<String> = y_names.into_iter().map(Into::into).collect();
        let mut x_index = HashMap::new();
        for (i, n) in x_names.iter().enumerate() {
            if x_index.insert(n.clone(), i).is_some() {
                return Err(LaurentError::DuplicateName(n.clone()));
            }
        }
        let mut y_index = HashMap::new();
        for (i, n) in y_names.iter().enumerate() {
            if y_index.insert(n.clone(), i).is_some() {
                return Err(LaurentError::DuplicateName(n.clone()));
            }
        }
        Ok(Arc::new(VarTable { x_names, y_names, x_index, y_index }))
    }

    pub fn nx(&self) -> usize {
        self.x_names.len()
    }

    pub fn ny(&self) -> usize {
        self.y_names.len()
    }

    pub fn x_names(&self) -> &[String] {
        &self.x_names
    }

    pub fn y_names(&self) -> &[String] {
        &self.y_names
    }

    pub fn x(&self, name: &str) -> Option<usize> {
        self.x_index.get(name).copied()
    }

    pub fn y(&self, name: &str) -> Option<usize> {
        self.y_index.get(name).copied()
    }

    /// Resolves a printed name such as `x_4` or `y_12`.
    pub fn var(&self, printed: &str) -> Option<Var> {
        if let Some(n) = printed.strip_prefix("x_") {
            self.x(n).map(Var::X)
        } else if let Some(n) = printed.strip_prefix("y_") {
            self.y(n).map(Var::Y)
        } else {
            None
        }
    }

    pub fn var_name(&self, v: Var) -> String {
        match v {
            Var::X(i) => format!("x_{}", self.x_names[i]),
            Var::Y(i) => format!("y_{}", self.y_names[i]),
        }
    }
}

/// Exponent vector. Ordering is lexicographic on the concatenation `(x, y)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExpVec {
    x: Vec<i32>,
    y: Vec<i32>,
}

impl ExpVec {
    pub fn zero(table: &VarTable) -> Self {
        ExpVec { x: vec![0; table.nx()], y: vec![0; table.ny()] }
    }

    pub fn new(x: Vec<i32>, y: Vec<i32>) -> Result<Self, LaurentError> {
        if y.iter().any(|&e| e < 0) {
            return Err(LaurentError::NegativeY);
        }
        Ok(ExpVec { x, y })
    }

    pub fn x(&self) -> &[i32] {
        &self.x
    }

    pub fn y(&self) -> &[i32] {
        &self.y
    }

    pub fn get(&self, v: Var) -> i32 {
        match v {
            Var::X(i) => self.x[i],
            Var::Y(i) => self.y[i],
        }
    }

    pub fn set(&mut self, v: Var, e: i32) {
        match v {
            Var::X(i) => self.x[i] = e,
            Var::Y(i) => self.y[i] = e,
        }
    }

    pub fn bump(&mut self, v: Var, by: i32) {
        match v {
            Var::X(i) => self.x[i] += by,
            Var::Y(i) => self.y[i] += by,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.x.iter().chain(&self.y).all(|&e| e == 0)
    }

    pub fn has_x(&self) -> bool {
        self.x.iter().any(|&e| e != 0)
    }

    fn plus(&self, o: &ExpVec) -> ExpVec {
        ExpVec {
            x: self.x.iter().zip(&o.x).map(|(a, b)| a + b).collect(),
            y: self.y.iter().zip(&o.y).map(|(a, b)| a + b).collect(),
        }
    }

    fn minus(&self, o: &ExpVec) -> ExpVec {
        ExpVec {
            x: self.x.iter().zip(&o.x).map(|(a, b)| a - b).collect(),
            y: self.y.iter().zip(&o.y).map(|(a, b)| a - b).collect(),
        }
    }

    fn y_nonnegative(&self) -> bool {
        self.y.iter().all(|&e| e >= 0)
    }
}

/// Total orders available for [`LaurentPoly::leading_exponent`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MonomialOrder {
    /// Lexicographic on x-exponents, y-exponents break ties.
    #[default]
    XLex,
    /// Lexicographic on y-exponents, x-exponents break ties.
    YLex,
}

impl MonomialOrder {
    pub fn cmp(self, a: &ExpVec, b: &ExpVec) -> std::cmp::Ordering {
        match self {
            MonomialOrder::XLex => a.cmp(b),
            MonomialOrder::YLex => a.y.cmp(&b.y).then_with(|| a.x.cmp(&b.x)),
        }
    }
}

/// Requirements on a coefficient ring.
pub trait Coeff:
    Clone
    + PartialEq
    + fmt::Debug
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
}

impl<T> Coeff for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
{
}

/// A Laurent polynomial stored as a canonical map from exponents to nonzero coefficients.
#[derive(Clone)]
pub struct LaurentPoly<C> {
    table: Arc<VarTable>,
    terms: BTreeMap<ExpVec, C>,
}

pub type Poly = LaurentPoly<BigInt>;

impl<C: Coeff> PartialEq for LaurentPoly<C> {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

fn same_table(a: &Arc<VarTable>, b: &Arc<VarTable>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl<C: Coeff> LaurentPoly<C> {
    pub fn zero(table: &Arc<VarTable>) -> Self {
        LaurentPoly { table: table.clone(), terms: BTreeMap::new() }
    }

    pub fn one(table: &Arc<VarTable>) -> Self {
        Self::constant(table, C::one())
    }

    pub fn constant(table: &Arc<VarTable>, c: C) -> Self {
        Self::monomial(table, ExpVec::zero(table), c)
    }

    pub fn monomial(table: &Arc<VarTable>, e: ExpVec, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { table: table.clone(), terms }
    }

    pub fn var(table: &Arc<VarTable>, v: Var) -> Self {
        let mut e = ExpVec::zero(table);
        e.set(v, 1);
        Self::monomial(table, e, C::one())
    }

    pub fn x(table: &Arc<VarTable>, name: &str) -> Result<Self, LaurentError> {
        let i = table.x(name).ok_or_else(|| LaurentError::UnknownVariable(format!("x_{name}")))?;
        Ok(Self::var(table, Var::X(i)))
    }

    pub fn y(table: &Arc<VarTable>, name: &str) -> Result<Self, LaurentError> {
        let i = table.y(name).ok_or_else(|| LaurentError::UnknownVariable(format!("y_{name}")))?;
        Ok(Self::var(table, Var::Y(i)))
    }

    /// Builds a polynomial from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms(table: &Arc<VarTable>, terms: impl IntoIterator<Item = (ExpVec, C)>) -> Self {
        let mut p = Self::zero(table);
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn table(&self) -> &Arc<VarTable> {
        &self.table
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

    pub fn terms(&self) -> impl Iterator<Item = (&ExpVec, &C)> {
        self.terms.iter()
    }

    pub fn coeff(&self, e: &ExpVec) -> Option<&C> {
        self.terms.get(e)
    }

    /// The single term of a monomial, if it is one.
    pub fn as_monomial(&self) -> Option<(&ExpVec, &C)> {
        if self.terms.len() == 1 {
            self.terms.iter().next()
        } else {
            None
        }
    }

    pub fn add_term(&mut self, e: ExpVec, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&e) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(e, s);
                }
            }
            None => {
                self.terms.insert(e, c);
            }
        }
    }

    fn check(&self, other: &Self) -> Result<(), LaurentError> {
        if same_table(&self.table, &other.table) {
            Ok(())
        } else {
            Err(LaurentError::TableMismatch)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check(other)?;
        let mut acc: HashMap<ExpVec, C> = HashMap::with_capacity(self.len() * other.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.plus(eb);
                let c = ca.clone() * cb.clone();
                match acc.get_mut(&e) {
                    Some(v) => *v = v.clone() + c,
                    None => {
                        acc.insert(e, c);
                    }
                }
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly { table: self.table.clone(), terms })
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero(&self.table);
        }
        let terms =
            self.terms.iter().map(|(e, v)| (e.clone(), v.clone() * c.clone())).filter(|(_, v)| !v.is_zero()).collect();
        LaurentPoly { table: self.table.clone(), terms }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.table);
        for _ in 0..k {
            out = &out * self;
        }
        out
    }

    /// Multiplies by the monomial with exponent `e`.
    pub fn mul_exp(&self, e: &ExpVec) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let n = k.plus(e);
            if !n.y_nonnegative() {
                return Err(LaurentError::NegativeY);
            }
            terms.insert(n, c.clone());
        }
        Ok(LaurentPoly { table: self.table.clone(), terms })
    }

    /// Divides every term by the monomial with exponent `e`.
    pub fn div_exp(&self, e: &ExpVec) -> Result<Self, LaurentError> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            let n = k.minus(e);
            if !n.y_nonnegative() {
                return Err(LaurentError::NegativeY);
            }
            terms.insert(n, c.clone());
        }
        Ok(LaurentPoly { table: self.table.clone(), terms })
    }

    /// Simultaneous substitution of variables by polynomials.
    pub fn substitute(&self, map: &BTreeMap<Var, LaurentPoly<C>>) -> Result<Self, LaurentError> {
        for img in map.values() {
            self.check(img)?;
        }
        let mut out = Self::zero(&self.table);
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let mut term = Self::one(&self.table);
            for (&v, img) in map {
                let k = e.get(v);
                if k == 0 {
                    continue;
                }
                rest.set(v, 0);
                let factor = if k > 0 {
                    img.pow(k as u32)
                } else {
                    let (me, mc) =
                        img.as_monomial().ok_or_else(|| LaurentError::NonUnitSubstitution(self.table.var_name(v)))?;
                    if !(mc.is_one() || (-mc.clone()).is_one()) {
                        return Err(LaurentError::NonUnitSubstitution(self.table.var_name(v)));
                    }
                    let inv = LaurentPoly::monomial(&self.table, ExpVec::zero(&self.table), mc.clone()).div_exp(me)?;
                    inv.pow((-k) as u32)
                };
                term = &term * &factor;
            }
            let term = term.mul_exp(&rest)?.scale(c);
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn leading_term(&self, order: MonomialOrder) -> Option<(&ExpVec, &C)> {
        match order {
            MonomialOrder::XLex => self.terms.iter().next_back(),
            _ => self.terms.iter().max_by(|a, b| order.cmp(a.0, b.0)),
        }
    }

    pub fn leading_exponent(&self, order: MonomialOrder) -> Result<ExpVec, LaurentError> {
        self.leading_term(order).map(|(e, _)| e.clone()).ok_or(LaurentError::Zero)
    }

    /// Per-variable exponent ranges `(min, max)`, x-variables first.
    pub fn exponent_box(&self) -> Option<(ExpVec, ExpVec)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let (mut lo, mut hi) = (first.clone(), first.clone());
        for e in it {
            for (i, &v) in e.x.iter().enumerate() {
                lo.x[i] = lo.x[i].min(v);
                hi.x[i] = hi.x[i].max(v);
            }
            for (i, &v) in e.y.iter().enumerate() {
                lo.y[i] = lo.y[i].min(v);
                hi.y[i] = hi.y[i].max(v);
            }
        }
        Some((lo, hi))
    }

    /// Evaluates at the given point, converting coefficients with `conv`.
    pub fn eval_with<S, F>(&self, xs: &[S], ys: &[S], conv: F) -> S
    where
        S: num_traits::Num + Clone,
        F: Fn(&C) -> S,
    {
        let mut total = S::zero();
        for (e, c) in &self.terms {
            let mut v = conv(c);
            for (i, &k) in e.x.iter().enumerate() {
                v = v * signed_pow(&xs[i], k);
            }
            for (i, &k) in e.y.iter().enumerate() {
                v = v * signed_pow(&ys[i], k);
            }
            total = total + v;
        }
        total
    }

    pub fn eval<S>(&self, xs: &[S], ys: &[S]) -> S
    where
        S: num_traits::Num + Clone + From<C>,
    {
        self.eval_with(xs, ys, |c| S::from(c.clone()))
    }
}

fn signed_pow<S: num_traits::Num + Clone>(base: &S, k: i32) -> S {
    let p = num_traits::pow(base.clone(), k.unsigned_abs() as usize);
    if k < 0 {
        S::one() / p
    } else {
        p
    }
}

impl<C: Coeff + PartialOrd> LaurentPoly<C> {
    /// True iff every stored coefficient is strictly positive.
    pub fn is_positive(&self) -> bool {
        self.terms.values().all(|c| *c > C::zero())
    }
}

impl<C: Coeff + Integer> LaurentPoly<C> {
    /// Exact division by an arbitrary Laurent polynomial.
    ///
    /// Runs lexicographic long division and fails once a quotient exponent leaves the
    /// box that any exact quotient must lie in.
    pub fn div_exact(&self, d: &Self) -> Result<Self, LaurentError> {
        self.check(d)?;
        let (dl, dc) = match d.terms.iter().next_back() {
            Some((e, c)) => (e.clone(), c.clone()),
            None => return Err(LaurentError::Inexact),
        };
        if self.is_zero() {
            return Ok(Self::zero(&self.table));
        }
        let (nlo, nhi) = self.exponent_box().expect("nonzero");
        let (dlo, dhi) = d.exponent_box().expect("nonzero");
        let lo = nlo.minus(&dhi);
        let hi = nhi.minus(&dlo);
        let inside = |e: &ExpVec| {
            e.x.iter().zip(&lo.x).zip(&hi.x).all(|((v, l), h)| l <= v && v <= h)
                && e.y.iter().zip(&lo.y).zip(&hi.y).all(|((v, l), h)| l <= v && v <= h)
        };
        let mut rem = self.clone();
        let mut quot = Self::zero(&self.table);
        while let Some((re, rc)) = rem.terms.iter().next_back() {
            let e = re.minus(&dl);
            let (q, r) = rc.div_rem(&dc);
            if !r.is_zero() || !inside(&e) || !e.y_nonnegative() {
                return Err(LaurentError::Inexact);
            }
            for (de, dcoef) in &d.terms {
                rem.add_term(de.plus(&e), -(dcoef.clone() * q.clone()));
            }
            quot.add_term(e, q);
        }
        Ok(quot)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<C: Coeff> $tr<&LaurentPoly<C>> for &LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: &LaurentPoly<C>) -> LaurentPoly<C> {
                self.$checked(rhs).expect("operands share a variable table")
            }
        }
        impl<C: Coeff> $tr<LaurentPoly<C>> for LaurentPoly<C> {
            type Output = LaurentPoly<C>;
            fn $m(self, rhs: LaurentPoly<C>) -> LaurentPoly<C> {
                (&self).$m(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl<C: Coeff> Neg for &LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { table: self.table.clone(), terms }
    }
}

impl<C: Coeff> Neg for LaurentPoly<C> {
    type Output = LaurentPoly<C>;
    fn neg(self) -> LaurentPoly<C> {
        -&self
    }
}

impl<C: Coeff + fmt::Display + Signed> fmt::Display for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let body = monomial_text(&self.table, e);
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = c.abs();
            if body.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{body}")?;
            } else {
                write!(f, "{a} * {body}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coeff + fmt::Display + Signed> fmt::Debug for LaurentPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Renders an exponent vector as `x_a^2 * x_b * y_c`, or the empty string for 1.
pub fn monomial_text(table: &VarTable, e: &ExpVec) -> String {
    let mut parts = Vec::new();
    for (i, &k) in e.x.iter().enumerate() {
        push_factor(&mut parts, &table.var_name(Var::X(i)), k);
    }
    for (i, &k) in e.y.iter().enumerate() {
        push_factor(&mut parts, &table.var_name(Var::Y(i)), k);
    }
    parts.join(" * ")
}

fn push_factor(parts: &mut Vec<String>, name: &str, k: i32) {
    match k {
        0 => {}
        1 => parts.push(name.to_string()),
        _ => parts.push(format!("{name}^{k}")),
    }
}

impl Poly {
    /// Parses the canonical text form, accepting any term order and optional coefficients.
    pub fn parse(table: &Arc<VarTable>, s: &str) -> Result<Self, LaurentError> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero(table));
        }
        let mut out = Self::zero(table);
        for (neg, term) in split_terms(s)? {
            let mut e = ExpVec::zero(table);
            let mut coef = BigInt::one();
            for factor in term.split('*').map(str::trim) {
                if factor.is_empty() {
                    return Err(LaurentError::Parse(format!("empty factor in `{term}`")));
                }
                if factor.starts_with(|ch: char| ch.is_ascii_digit()) {
                    let c: BigInt =
                        factor.parse().map_err(|_| LaurentError::Parse(format!("bad coefficient `{factor}`")))?;
                    coef *= c;
                    continue;
                }
                let (name, exp) = match factor.split_once('^') {
                    Some((n, k)) => {
                        let k: i32 =
                            k.trim().parse().map_err(|_| LaurentError::Parse(format!("bad exponent in `{factor}`")))?;
                        (n.trim(), k)
                    }
                    None => (factor, 1),
                };
                let v = table.var(name).ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))?;
                e.bump(v, exp);
            }
            if !e.y_nonnegative() {
                return Err(LaurentError::NegativeY);
            }
            out.add_term(e, if neg { -coef } else { coef });
        }
        Ok(out)
    }
}

fn split_terms(s: &str) -> Result<Vec<(bool, String)>, LaurentError> {
    let mut out = Vec::new();
    let mut neg = false;
    let mut cur = String::new();
    let mut prev_caret = false;
    for ch in s.chars() {
        match ch {
            '+' | '-' if !prev_caret => {
                if !cur.trim().is_empty() {
                    out.push((neg, cur.trim().to_string()));
                    cur.clear();
                    neg = ch == '-';
                } else if ch == '-' {
                    neg = !neg;
                }
            }
            _ => {
                if !ch.is_whitespace() {
                    prev_caret = ch == '^';
                }
                cur.push(ch);
                continue;
            }
        }
        prev_caret = false;
    }
    if cur.trim().is_empty() {
        return Err(LaurentError::Parse("dangling sign".into()));
    }
    out.push((neg, cur.trim().to_string()));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn table() -> Arc<VarTable> {
        VarTable::new(["1", "2", "B"], ["1", "2"]).unwrap()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(&table(), s).unwrap()
    }

    #[test]
    fn additive_identity_and_cancellation() {
        let t = table();
        let a = p("x_1 + 3 * y_2");
        assert_eq!(&a + &Poly::zero(&t), a);
        assert!((&p("x_1") + &p("-x_1")).is_zero());
        assert_eq!(&p("x_1 + y_1") + &p("x_1 - y_1"), p("2 * x_1"));
    }

    #[test]
    fn exponents_add() {
        assert_eq!(&p("x_1 + y_1 * x_1^-1") * &p("x_1"), p("x_1^2 + y_1"));
        let a = p("x_1 - 7 * x_2^-3 * y_1");
        assert_eq!(&a * &Poly::one(&table()), a);
    }

    #[test]
    fn substitution() {
        let t = table();
        let mut m = BTreeMap::new();
        m.insert(Var::X(1), p("x_1"));
        assert_eq!(p("x_1 + x_2").substitute(&m).unwrap(), p("2 * x_1"));
        assert_eq!(p("x_1 + x_2").substitute(&BTreeMap::new()).unwrap(), p("x_1 + x_2"));
        let mut m = BTreeMap::new();
        m.insert(Var::X(1), p("x_1 + 1"));
        assert_eq!(p("x_2^-1").substitute(&m), Err(LaurentError::NonUnitSubstitution("x_2".into())));
        let mut m = BTreeMap::new();
        m.insert(Var::X(2), Poly::one(&t));
        assert_eq!(p("x_1 * x_B^-2 + x_B").substitute(&m).unwrap(), p("x_1 + 1"));
    }

    #[test]
    fn positivity() {
        assert!(p("x_1^2 + y_1").is_positive());
        assert!(!p("x_1 - x_2").is_positive());
    }

    #[test]
    fn leading_exponents() {
        let t = table();
        let e = p("x_1^2 + y_1").leading_exponent(MonomialOrder::XLex).unwrap();
        assert_eq!(e.x(), &[2, 0, 0]);
        let m = p("3 * x_2^-1 * y_2");
        assert_eq!(m.leading_exponent(MonomialOrder::XLex).unwrap(), m.terms().next().unwrap().0.clone());
        assert_eq!(Poly::zero(&t).leading_exponent(MonomialOrder::XLex), Err(LaurentError::Zero));
        let e = p("x_1^2 + y_1").leading_exponent(MonomialOrder::YLex).unwrap();
        assert_eq!(e.y(), &[1, 0]);
    }

    #[test]
    fn printing_round_trips() {
        for s in ["0", "1", "-1", "x_1^2 * y_2 + 3 * x_B^-1", "-2 * x_1 * x_2^-3 + 5 * y_1^4"] {
            let a = p(s);
            let text = a.to_string();
            assert_eq!(Poly::parse(&table(), &text).unwrap(), a, "{text}");
            assert_eq!(Poly::parse(&table(), &text).unwrap().to_string(), text);
        }
        assert_eq!(p("x_B").to_string(), "x_B");
        assert_eq!(p("2 * x_B + 1").to_string(), "1 + 2 * x_B");
        assert_eq!(p("y_1 + x_1^-1").to_string(), "x_1^-1 + y_1");
    }

    #[test]
    fn parse_errors() {
        let t = table();
        assert!(matches!(Poly::parse(&t, "x_7"), Err(LaurentError::UnknownVariable(_))));
        assert_eq!(Poly::parse(&t, "y_1^-1"), Err(LaurentError::NegativeY));
        assert!(Poly::parse(&t, "x_1 +").is_err());
    }

    #[test]
    fn table_mismatch() {
        let other = VarTable::new(["9"], ["9"]).unwrap();
        let a = p("x_1");
        let b = Poly::x(&other, "9").unwrap();
        assert_eq!(a.checked_add(&b), Err(LaurentError::TableMismatch));
        assert_eq!(a.checked_mul(&b), Err(LaurentError::TableMismatch));
    }

    #[test]
    fn exact_division() {
        let a = p("x_1 + x_2 * y_1");
        let b = p("x_1^-1 * x_B + 2 * y_2");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&b).unwrap(), a);
        assert_eq!(prod.div_exact(&a).unwrap(), b);
        assert_eq!(p("x_1 + 1").div_exact(&p("x_1 + 2")), Err(LaurentError::Inexact));
        assert_eq!(p("x_1^2 + x_2^2").div_exact(&p("x_1 + x_2")), Err(LaurentError::Inexact));
    }

    #[test]
    fn generic_coefficients() {
        let t = table();
        let a: LaurentPoly<i64> = &LaurentPoly::x(&t, "1").unwrap() + &LaurentPoly::constant(&t, 3);
        let sq = &a * &a;
        assert_eq!(sq.len(), 3);
        let v: f64 = sq.eval_with(&[2.0, 0.0, 0.0], &[0.0, 0.0], |c| *c as f64);
        assert_eq!(v, 25.0);
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        let term = (proptest::collection::vec(-2i32..3, 3), proptest::collection::vec(0i32..3, 2), -4i64..5);
        proptest::collection::vec(term, 0..5).prop_map(|ts| {
            let t = table();
            Poly::from_terms(&t, ts.into_iter().map(|(x, y, c)| (ExpVec::new(x, y).unwrap(), BigInt::from(c))))
        })
    }

    fn arb_positive() -> impl Strategy<Value = Poly> {
        arb_poly().prop_map(|q| {
            let t = q.table().clone();
            Poly::from_terms(&t, q.terms().map(|(e, c)| (e.clone(), c.abs())))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn positivity_is_closed(a in arb_positive(), b in arb_positive()) {
            prop_assert!((&a + &b).is_positive());
            prop_assert!((&a * &b).is_positive());
        }

        #[test]
        fn text_round_trip(a in arb_poly()) {
            let s = a.to_string();
            prop_assert_eq!(Poly::parse(a.table(), &s).unwrap(), a);
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).div_exact(&b).unwrap(), a);
        }

        #[test]
        fn substitution_composes(a in arb_poly(), s in arb_poly(), r in arb_poly()) {
            let mut m1 = BTreeMap::new();
            m1.insert(Var::Y(0), s.clone());
            let mut m2 = BTreeMap::new();
            m2.insert(Var::Y(1), r.clone());
            let mut both = m1.clone();
            both.insert(Var::Y(1), r.clone());
            prop_assume!(!s.terms().any(|(e, _)| e.get(Var::Y(1)) != 0));
            let lhs = a.substitute(&m1).unwrap().substitute(&m2).unwrap();
            prop_assert_eq!(lhs, a.substitute(&both).unwrap());
        }
    }
}
