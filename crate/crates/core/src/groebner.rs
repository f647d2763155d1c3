//! Buchberger's algorithm, multivariate division and ideal membership.

use std::cmp::Ordering;
use std::sync::Arc;

use num_traits::One;

use crate::error::{Error, Result};
use crate::poly::{same_context, Monomial, Polynomial, RingContext};

/// An ideal given by generators. Zero generators are dropped on construction.
#[derive(Clone, Debug)]
pub struct Ideal {
    ctx: Arc<RingContext>,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ctx: &Arc<RingContext>, generators: Vec<Polynomial>) -> Result<Self> {
        for g in &generators {
            if !same_context(ctx, g.context()) {
                return Err(Error::ContextMismatch {
                    left: ctx.describe(),
                    right: g.context().describe(),
                });
            }
        }
        Ok(Ideal {
            ctx: ctx.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }
}

/// The reduced Gröbner basis of an ideal: monic, inter-reduced and sorted by
/// leading monomial, descending. For a fixed ring and order it is unique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    ctx: Arc<RingContext>,
    elements: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn context(&self) -> &Arc<RingContext> {
        &self.ctx
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.elements.iter().filter_map(|g| g.leading_monomial())
    }

    pub fn reduce(&self, f: &Polynomial) -> Polynomial {
        normal_form(f, &self.elements)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.reduce(f).is_zero()
    }

    /// Checks the defining properties of a reduced basis.
    pub fn is_reduced(&self) -> bool {
        let lms: Vec<&Monomial> = self.leading_monomials().collect();
        if lms.len() != self.elements.len() {
            return false;
        }
        for (i, g) in self.elements.iter().enumerate() {
            if !g.leading_term().map(|(_, c)| c.is_one()).unwrap_or(false) {
                return false;
            }
            for (j, lm) in lms.iter().enumerate() {
                if i != j && g.terms().iter().any(|(m, _)| lm.divides(m)) {
                    return false;
                }
            }
        }
        self.elements.windows(2).all(|w| {
            self.ctx
                .cmp_monomials(&w[0].terms()[0].0, &w[1].terms()[0].0)
                == Ordering::Greater
        })
    }
}

/// `S(f, g) = (L/lt(f))·f − (L/lt(g))·g` with `L` the lcm of the leading
/// monomials.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fm, fc) = f.leading_term()?;
    let (gm, gc) = g.leading_term()?;
    let lcm = fm.lcm(gm);
    let left = f.mul_term(&lcm.div(fm).unwrap(), &fc.recip());
    let right = g.mul_term(&lcm.div(gm).unwrap(), &gc.recip());
    left.try_sub(&right)
}

/// Picks the reducer for `m`: the largest leading monomial dividing it,
/// earliest index on ties.
fn find_reducer(ctx: &RingContext, m: &Monomial, basis: &[Polynomial]) -> Option<usize> {
    let mut best: Option<(usize, &Monomial)> = None;
    for (i, b) in basis.iter().enumerate() {
        let Some(lm) = b.leading_monomial() else {
            continue;
        };
        if !lm.divides(m) {
            continue;
        }
        match best {
            Some((_, cur)) if ctx.cmp_monomials(lm, cur) != Ordering::Greater => {}
            _ => best = Some((i, lm)),
        }
    }
    best.map(|(i, _)| i)
}

/// Full multivariate division: returns the quotients (one per basis element)
/// and the remainder, with `f = Σ qᵢ·basisᵢ + r` and no term of `r`
/// divisible by any leading monomial of the basis.
pub fn divide(f: &Polynomial, basis: &[Polynomial]) -> (Vec<Polynomial>, Polynomial) {
    let ctx = f.context().clone();
    let mut quotients = vec![Polynomial::zero(&ctx); basis.len()];
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.terms().first().cloned() {
        match find_reducer(&ctx, &m, basis) {
            Some(i) => {
                let (lm, lc) = basis[i].leading_term().unwrap();
                let shift = m.div(lm).unwrap();
                let factor = &c / lc;
                quotients[i] =
                    &quotients[i] + &Polynomial::term(&ctx, shift.clone(), factor.clone());
                p = p.sub_scaled_shifted(&factor, &shift, &basis[i]);
            }
            None => {
                let lead = Polynomial::term(&ctx, m.clone(), c.clone());
                remainder.push((m, c));
                p = &p - &lead;
            }
        }
    }
    (quotients, Polynomial::from_terms(&ctx, remainder))
}

/// Remainder of `f` under division by `basis`. Zero basis elements are
/// ignored.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
    let ctx = f.context().clone();
    let mut remainder = Vec::new();
    let mut p = f.clone();
    while let Some((m, c)) = p.terms().first().cloned() {
        match find_reducer(&ctx, &m, basis) {
            Some(i) => {
                let (lm, lc) = basis[i].leading_term().unwrap();
                let shift = m.div(lm).unwrap();
                p = p.sub_scaled_shifted(&(&c / lc), &shift, &basis[i]);
            }
            None => {
                remainder.push((m.clone(), c.clone()));
                let lead = Polynomial::term(&ctx, m, c);
                p = &p - &lead;
            }
        }
    }
    Polynomial::from_terms(&ctx, remainder)
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Computes the reduced Gröbner basis of `ideal` under its ring's order.
///
/// Pairs are processed smallest lcm first; pairs with coprime leading
/// monomials are skipped.
pub fn buchberger(ideal: &Ideal) -> Result<GroebnerBasis> {
    let ctx = ideal.context().clone();
    if ideal.generators().is_empty() {
        return Err(Error::EmptyIdeal);
    }
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let h = normal_form(g, &basis);
        if !h.is_zero() {
            basis.push(h.monic());
        }
    }
    let mut pairs: Vec<Pair> = Vec::new();
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(make_pair(&basis, i, j));
        }
    }

    while !pairs.is_empty() {
        if basis
            .iter()
            .any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
        {
            break;
        }
        let next = select_pair(&ctx, &pairs);
        let Pair { i, j, .. } = pairs.swap_remove(next);
        let (li, lj) = (
            basis[i].leading_monomial().unwrap(),
            basis[j].leading_monomial().unwrap(),
        );
        if li.is_coprime(lj) {
            continue;
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let h = normal_form(&s, &basis);
        if h.is_zero() {
            continue;
        }
        basis.push(h.monic());
        let k = basis.len() - 1;
        for i in 0..k {
            pairs.push(make_pair(&basis, i, k));
        }
    }

    Ok(GroebnerBasis {
        elements: reduce_basis(&ctx, basis),
        ctx,
    })
}

fn make_pair(basis: &[Polynomial], i: usize, j: usize) -> Pair {
    let lcm = basis[i]
        .leading_monomial()
        .unwrap()
        .lcm(basis[j].leading_monomial().unwrap());
    Pair { i, j, lcm }
}

fn select_pair(ctx: &RingContext, pairs: &[Pair]) -> usize {
    let mut best = 0;
    for (k, p) in pairs.iter().enumerate().skip(1) {
        let b = &pairs[best];
        let ord = ctx
            .degree(&p.lcm)
            .cmp(&ctx.degree(&b.lcm))
            .then_with(|| ctx.cmp_monomials(&p.lcm, &b.lcm))
            .then_with(|| (p.j, p.i).cmp(&(b.j, b.i)));
        if ord == Ordering::Less {
            best = k;
        }
    }
    best
}

/// Minimalizes, inter-reduces, normalizes and sorts a Gröbner basis.
fn reduce_basis(ctx: &Arc<RingContext>, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    if basis
        .iter()
        .any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    {
        return vec![Polynomial::one(ctx)];
    }
    // drop elements whose leading monomial is divisible by another's; among
    // equal leading monomials keep the first
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(j, h)| {
            let other = h.leading_monomial().unwrap();
            j != i && other.divides(lm) && (other != lm || j < i)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, g)| g.clone())
            .collect();
        let (lm, lc) = minimal[i].leading_term().unwrap();
        let lead = Polynomial::term(ctx, lm.clone(), lc.clone());
        let tail = normal_form(&(&minimal[i] - &lead), &others);
        reduced.push((&lead + &tail).monic());
    }
    reduced.sort_by(|a, b| {
        ctx.cmp_monomials(b.leading_monomial().unwrap(), a.leading_monomial().unwrap())
    });
    reduced
}

/// `f ∈ ideal`. The zero polynomial is a member of every ideal, including
/// the zero ideal.
pub fn is_member(f: &Polynomial, ideal: &Ideal) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if !same_context(f.context(), ideal.context()) {
        return Err(Error::ContextMismatch {
            left: f.context().describe(),
            right: ideal.context().describe(),
        });
    }
    if ideal.generators().is_empty() {
        return Ok(false);
    }
    Ok(buchberger(ideal)?.contains(f))
}
