//! Independent linear-algebra oracle for ideals in a standard-graded
//! polynomial ring.
//!
//! Polynomials are plain exponent-vector maps and every answer comes from
//! Gaussian elimination on Macaulay matrices (spans of monomial multiples of
//! the generators), so nothing here depends on the Gröbner engine.

#![allow(dead_code)]

pub mod engine;

use std::collections::BTreeMap;
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};
use spinring::{Monomial, Polynomial, RingContext};

pub type Q = BigRational;
pub type Poly = BTreeMap<Vec<u32>, Q>;

pub fn q(n: i64, d: i64) -> Q {
    BigRational::new(n.into(), d.into())
}

pub fn from_poly(f: &Polynomial) -> Poly {
    f.terms()
        .iter()
        .map(|(m, c)| (m.exponents().to_vec(), c.clone()))
        .collect()
}

pub fn to_poly(ctx: &Arc<RingContext>, f: &Poly) -> Polynomial {
    f.iter().fold(Polynomial::zero(ctx), |acc, (e, c)| {
        &acc + &Polynomial::term(ctx, Monomial::new(e.clone()), c.clone())
    })
}

fn insert(out: &mut Poly, e: Vec<u32>, c: Q) {
    let slot = out.entry(e.clone()).or_insert_with(Q::zero);
    *slot += c;
    if slot.is_zero() {
        out.remove(&e);
    }
}

pub fn add(a: &Poly, b: &Poly) -> Poly {
    let mut out = a.clone();
    for (e, c) in b {
        insert(&mut out, e.clone(), c.clone());
    }
    out
}

pub fn scale(a: &Poly, c: &Q) -> Poly {
    if c.is_zero() {
        return Poly::new();
    }
    a.iter().map(|(e, x)| (e.clone(), x * c)).collect()
}

pub fn mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            insert(&mut out, e, ca * cb);
        }
    }
    out
}

pub fn pow(a: &Poly, k: u32, n: usize) -> Poly {
    (0..k).fold(constant(n, Q::one()), |acc, _| mul(&acc, a))
}

pub fn constant(n: usize, c: Q) -> Poly {
    let mut out = Poly::new();
    insert(&mut out, vec![0; n], c);
    out
}

pub fn var(n: usize, i: usize) -> Poly {
    let mut e = vec![0; n];
    e[i] = 1;
    constant_at(e, Q::one())
}

pub fn constant_at(e: Vec<u32>, c: Q) -> Poly {
    let mut out = Poly::new();
    insert(&mut out, e, c);
    out
}

/// Linear combination `Σ coeffs[i] * vars[i]`.
pub fn linear(n: usize, coeffs: &[Q]) -> Poly {
    coeffs
        .iter()
        .enumerate()
        .fold(Poly::new(), |acc, (i, c)| add(&acc, &scale(&var(n, i), c)))
}

pub fn degree_of(e: &[u32]) -> u32 {
    e.iter().sum()
}

pub fn part(f: &Poly, d: u32) -> Poly {
    f.iter()
        .filter(|(e, _)| degree_of(e) == d)
        .map(|(e, c)| (e.clone(), c.clone()))
        .collect()
}

pub fn is_homogeneous(f: &Poly) -> bool {
    let mut degs = f.keys().map(|e| degree_of(e));
    match degs.next() {
        None => true,
        Some(d) => degs.all(|x| x == d),
    }
}

/// All exponent vectors of total degree `d` in `n` variables.
pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Exponent vectors of total degree at most `d`.
pub fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    (0..=d).flat_map(|k| monomials(n, k)).collect()
}

fn row(f: &Poly, columns: &BTreeMap<Vec<u32>, usize>) -> Option<Vec<Q>> {
    let mut r = vec![Q::zero(); columns.len()];
    for (e, c) in f {
        r[*columns.get(e)?] = c.clone();
    }
    Some(r)
}

/// Reduced row echelon form: `(rows, pivot columns)`.
pub fn rref(mut rows: Vec<Vec<Q>>) -> (Vec<Vec<Q>>, Vec<usize>) {
    let width = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Q::one() / rows[r][col].clone();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][col].is_zero() {
                let f = rows[i][col].clone();
                let pivot_row = rows[r].clone();
                for (x, y) in rows[i].iter_mut().zip(pivot_row) {
                    *x = &*x - &(&f * &y);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    (rows, pivots)
}

pub fn rank(rows: Vec<Vec<Q>>) -> usize {
    rref(rows).1.len()
}

/// Spanning set of the ideal restricted to the given monomial columns:
/// every `m * g` whose support lies in the columns.
fn macaulay_rows(
    gens: &[Poly],
    n: usize,
    max_multiplier: u32,
    columns: &BTreeMap<Vec<u32>, usize>,
) -> Vec<Vec<Q>> {
    let mut rows = Vec::new();
    for g in gens {
        for m in monomials_up_to(n, max_multiplier) {
            let shifted = mul(g, &constant_at(m, Q::one()));
            if let Some(r) = row(&shifted, columns) {
                rows.push(r);
            }
        }
    }
    rows
}

fn index(cols: Vec<Vec<u32>>) -> BTreeMap<Vec<u32>, usize> {
    cols.into_iter().enumerate().map(|(i, e)| (e, i)).collect()
}

fn in_row_space(rows: Vec<Vec<Q>>, v: Vec<Q>) -> bool {
    let base = rank(rows.clone());
    let mut with = rows;
    with.push(v);
    rank(with) == base
}

/// Degree-`d` piece of an ideal with homogeneous generators.
pub fn ideal_piece(gens: &[Poly], n: usize, d: u32) -> (BTreeMap<Vec<u32>, usize>, Vec<Vec<Q>>) {
    let columns = index(monomials(n, d));
    let rows = macaulay_rows(gens, n, d, &columns);
    (columns, rows)
}

/// Membership for homogeneous generators, exact: an element lies in a
/// homogeneous ideal iff each homogeneous component does.
pub fn member_homogeneous(gens: &[Poly], n: usize, f: &Poly) -> bool {
    assert!(gens.iter().all(is_homogeneous));
    let degrees: std::collections::BTreeSet<u32> = f.keys().map(|e| degree_of(e)).collect();
    degrees.into_iter().all(|d| {
        let (columns, rows) = ideal_piece(gens, n, d);
        in_row_space(rows, row(&part(f, d), &columns).unwrap())
    })
}

/// Whether `f` is a combination `Σ h_i g_i` with every product of total
/// degree at most `bound`. A positive answer is a membership certificate.
pub fn member_bounded(gens: &[Poly], n: usize, f: &Poly, bound: u32) -> bool {
    let columns = index(monomials_up_to(n, bound));
    let Some(target) = row(f, &columns) else {
        return false;
    };
    let rows = macaulay_rows(gens, n, bound, &columns);
    in_row_space(rows, target)
}

/// Hilbert function value at `d` for homogeneous generators.
pub fn hilbert(gens: &[Poly], n: usize, d: u32) -> usize {
    let (columns, rows) = ideal_piece(gens, n, d);
    columns.len() - rank(rows)
}

/// Linear functional on the degree-`d` piece that kills the ideal and
/// takes `value` on `witness`. Requires the quotient piece to be a line.
pub struct TopFunctional {
    columns: BTreeMap<Vec<u32>, usize>,
    weights: Vec<Q>,
    degree: u32,
}

impl TopFunctional {
    pub fn new(gens: &[Poly], n: usize, d: u32, witness: &Poly, value: Q) -> Self {
        let (columns, rows) = ideal_piece(gens, n, d);
        let (reduced, pivots) = rref(rows);
        assert_eq!(
            columns.len() - pivots.len(),
            1,
            "quotient piece is not one-dimensional"
        );
        let free = (0..columns.len()).find(|c| !pivots.contains(c)).unwrap();
        let mut weights = vec![Q::zero(); columns.len()];
        weights[free] = Q::one();
        for (r, &p) in reduced.iter().zip(&pivots) {
            weights[p] = -r[free].clone();
        }
        let mut out = TopFunctional {
            columns,
            weights,
            degree: d,
        };
        let raw = out.apply(witness);
        assert!(!raw.is_zero(), "witness vanishes in the quotient");
        let factor = value / raw;
        for w in out.weights.iter_mut() {
            *w = &*w * &factor;
        }
        out
    }

    pub fn apply(&self, f: &Poly) -> Q {
        assert!(
            f.keys().all(|e| degree_of(e) == self.degree),
            "not of top degree"
        );
        f.iter()
            .map(|(e, c)| c * &self.weights[self.columns[e]])
            .sum()
    }
}
