//! Exact sparse multivariate polynomials over the rationals.
//!
//! A [`Polynomial`] always carries the [`RingContext`] it lives in. Terms are
//! kept sorted in strictly descending monomial order with no zero
//! coefficients, so structural equality is ring equality and the printed form
//! is canonical.
//!
//! Every variable has a positive integer weight. For the spin rings each
//! boundary class has weight 1, so ring degree `k` corresponds to
//! cohomological degree `2k`.

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact arbitrary-precision fraction, always in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` as an exact rational. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    /// Graded (by weighted degree) reverse lexicographic.
    Grevlex,
    /// Pure lexicographic.
    Lex,
}

impl MonomialOrder {
    pub fn keyword(self) -> &'static str {
        match self {
            MonomialOrder::Grevlex => "grevlex",
            MonomialOrder::Lex => "lex",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        match s {
            "grevlex" => Some(MonomialOrder::Grevlex),
            "lex" => Some(MonomialOrder::Lex),
            _ => None,
        }
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}

/// Named, weighted variable set together with a monomial order.
/// Variables compare in declaration order: the first one is the largest.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    names: Vec<String>,
    weights: Vec<u32>,
    order: MonomialOrder,
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: Into<String>>(
        names: impl IntoIterator<Item = S>,
        weights: Option<Vec<u32>>,
        order: MonomialOrder,
    ) -> Result<Arc<Self>> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let weights = weights.unwrap_or_else(|| vec![1; names.len()]);
        if weights.len() != names.len() {
            return Err(Error::InvalidRing(format!(
                "{} weights given for {} variables",
                weights.len(),
                names.len()
            )));
        }
        let mut seen = BTreeSet::new();
        for name in &names {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!(
                    "invalid variable name {name:?}"
                )));
            }
            if !seen.insert(name.as_str()) {
                return Err(Error::InvalidRing(format!("duplicate variable {name}")));
            }
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::InvalidRing(format!(
                "weight of {} must be at least 1",
                names[pos]
            )));
        }
        Ok(Arc::new(RingContext {
            names,
            weights,
            order,
        }))
    }

    /// Unit-weight grevlex ring on the given names.
    pub fn grevlex<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Arc<Self>> {
        Self::new(names, None, MonomialOrder::Grevlex)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn num_vars(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.0.iter().zip(&self.weights).map(|(e, w)| e * w).sum()
    }

    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        debug_assert_eq!(a.0.len(), b.0.len());
        match self.order {
            MonomialOrder::Lex => a.0.cmp(&b.0),
            MonomialOrder::Grevlex => self.degree(a).cmp(&self.degree(b)).then_with(|| {
                // the last differing variable decides; a smaller exponent wins
                for (x, y) in a.0.iter().zip(&b.0).rev() {
                    if x != y {
                        return y.cmp(x);
                    }
                }
                Ordering::Equal
            }),
        }
    }

    pub(crate) fn describe(&self) -> String {
        format!("[{}] {}", self.names.join(", "), self.order)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        let parts: Vec<String> =
            m.0.iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| {
                    if e == 1 {
                        self.names[i].clone()
                    } else {
                        format!("{}^{}", self.names[i], e)
                    }
                })
                .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

/// Exponent vector, one entry per ring variable.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / divisor`, if exact.
    pub fn div(&self, divisor: &Monomial) -> Option<Monomial> {
        divisor
            .divides(self)
            .then(|| Monomial(self.0.iter().zip(&divisor.0).map(|(a, b)| a - b).collect()))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// If this is a pure power `x_i^e` with `e > 0`, returns `(i, e)`.
    pub fn as_pure_power(&self) -> Option<(usize, u32)> {
        let mut found = None;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some((i, e));
            }
        }
        found
    }
}

/// Result of [`Polynomial::weighted_degree`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(u32),
    Inhomogeneous(BTreeSet<u32>),
}

#[derive(Clone, Debug)]
pub struct Polynomial {
    ctx: Arc<RingContext>,
    // strictly descending under ctx's order, nonzero coefficients
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_context(&self.ctx, &other.ctx) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

pub(crate) fn same_context(a: &Arc<RingContext>, b: &Arc<RingContext>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(ctx: &Arc<RingContext>) -> Self {
        Polynomial {
            ctx: ctx.clone(),
            terms: Vec::new(),
        }
    }

    pub fn one(ctx: &Arc<RingContext>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn constant(ctx: &Arc<RingContext>, c: Rational) -> Self {
        Self::term(ctx, Monomial::one(ctx.num_vars()), c)
    }

    pub fn term(ctx: &Arc<RingContext>, m: Monomial, c: Rational) -> Self {
        assert_eq!(
            m.0.len(),
            ctx.num_vars(),
            "monomial arity does not match ring"
        );
        let terms = if c.is_zero() {
            Vec::new()
        } else {
            vec![(m, c)]
        };
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn var(ctx: &Arc<RingContext>, i: usize) -> Self {
        Self::term(ctx, Monomial::var(ctx.num_vars(), i), Rational::one())
    }

    pub fn var_named(ctx: &Arc<RingContext>, name: &str) -> Option<Self> {
        ctx.index_of(name).map(|i| Self::var(ctx, i))
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms(
        ctx: &Arc<RingContext>,
        terms: impl IntoIterator<Item = (Monomial, Rational)>,
    ) -> Self {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in terms {
            assert_eq!(
                m.0.len(),
                ctx.num_vars(),
                "monomial arity does not match ring"
            );
            *acc.entry(m).or_insert_with(Rational::zero) += c;
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| ctx.cmp_monomials(&b.0, &a.0));
        Polynomial {
            ctx: ctx.clone(),
            terms,
        }
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
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

    pub fn coefficient(&self, m: &Monomial) -> Rational {
        self.terms
            .iter()
            .find(|(t, _)| t == m)
            .map(|(_, c)| c.clone())
            .unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Result<(&Monomial, &Rational)> {
        self.terms
            .first()
            .map(|(m, c)| (m, c))
            .ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn weighted_degree(&self) -> Degree {
        let degrees: BTreeSet<u32> = self.terms.iter().map(|(m, _)| self.ctx.degree(m)).collect();
        match degrees.len() {
            0 => Degree::Zero,
            1 => Degree::Homogeneous(*degrees.iter().next().unwrap()),
            _ => Degree::Inhomogeneous(degrees),
        }
    }

    /// The weighted-degree `d` part.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| self.ctx.degree(m) == d)
                .cloned()
                .collect(),
        }
    }

    fn check_context(&self, other: &Polynomial) -> Result<()> {
        if same_context(&self.ctx, &other.ctx) {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.describe(),
                right: other.ctx.describe(),
            })
        }
    }

    /// `self + factor * other`, by a merge of the two sorted term lists.
    fn merge_scaled(&self, other: &Polynomial, factor: &Rational) -> Polynomial {
        let ctx = &self.ctx;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut a = self.terms.iter().peekable();
        let mut b = other.terms.iter().peekable();
        loop {
            let step = match (a.peek(), b.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(x), Some(y)) => ctx.cmp_monomials(&x.0, &y.0),
            };
            match step {
                Ordering::Greater => out.push(a.next().unwrap().clone()),
                Ordering::Less => {
                    let (m, c) = b.next().unwrap();
                    out.push((m.clone(), c * factor));
                }
                Ordering::Equal => {
                    let (m, c) = a.next().unwrap();
                    let (_, d) = b.next().unwrap();
                    let s = c + d * factor;
                    if !s.is_zero() {
                        out.push((m.clone(), s));
                    }
                }
            }
        }
        Polynomial {
            ctx: ctx.clone(),
            terms: out,
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        Ok(self.merge_scaled(other, &Rational::one()))
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        Ok(self.merge_scaled(other, &-Rational::one()))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_context(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for (m, c) in &self.terms {
            for (n, d) in &other.terms {
                *acc.entry(m.mul(n)).or_insert_with(Rational::zero) += c * d;
            }
        }
        Ok(Self::from_terms(&self.ctx, acc))
    }

    /// `self - c * m * other`, the elementary reduction step.
    pub(crate) fn sub_scaled_shifted(
        &self,
        c: &Rational,
        m: &Monomial,
        other: &Polynomial,
    ) -> Polynomial {
        let shifted = other.mul_term(m, &Rational::one());
        self.merge_scaled(&shifted, &-c)
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    /// Multiplication by the single term `c * m`; order is preserved.
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ctx);
        }
        Polynomial {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(n, d)| (n.mul(m), d * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.ctx);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Divides through by the leading coefficient. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, lc)) => self.scale(&lc.recip()),
        }
    }

    /// Substitutes `images[i]` for variable `i`; the result lives in the
    /// images' ring.
    pub fn substitute(
        &self,
        images: &[Polynomial],
        target: &Arc<RingContext>,
    ) -> Result<Polynomial> {
        if images.len() != self.ctx.num_vars() {
            return Err(Error::InvalidRing(format!(
                "substitution needs {} images, got {}",
                self.ctx.num_vars(),
                images.len()
            )));
        }
        let mut out = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (img, &e) in images.iter().zip(&m.0) {
                if e > 0 {
                    t = t.try_mul(&img.pow(e))?;
                }
            }
            out = out.try_add(&t)?;
        }
        Ok(out)
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&self.ctx.format_monomial(m))?;
            } else {
                write!(f, "{abs}*{}", self.ctx.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

// Operator forms panic on a context mismatch; use the `try_*` methods where
// the rings are not known to agree.

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("polynomial addition across rings")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs)
            .expect("polynomial subtraction across rings")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs)
            .expect("polynomial multiplication across rings")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&-Rational::one())
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}
