//! Artinian graded quotients `k[x]/I`: standard monomials, Hilbert function,
//! multiplication, integration against a point class and exact ranks.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::poly::{Degree, Monomial, Polynomial, Rational, RingContext};

/// Dense rational matrix, row-major.
pub type Matrix = Vec<Vec<Rational>>;

#[derive(Clone, Debug)]
pub struct QuotientRing {
    gb: GroebnerBasis,
    // standard monomials of weighted degree d, descending in the ring order
    standard: Vec<Vec<Monomial>>,
}

impl QuotientRing {
    /// Enumerates the standard monomials of `gb` degree by degree. Fails if
    /// some variable has no pure power among the leading monomials.
    pub fn build(gb: GroebnerBasis) -> Result<Self> {
        let ctx = gb.context().clone();
        let n = ctx.num_vars();
        let lms: Vec<Monomial> = gb.leading_monomials().cloned().collect();

        if lms.iter().any(Monomial::is_one) {
            return Ok(QuotientRing {
                gb,
                standard: Vec::new(),
            });
        }

        let mut bounds = vec![None::<u32>; n];
        for (i, e) in lms.iter().filter_map(Monomial::as_pure_power) {
            bounds[i] = Some(bounds[i].map_or(e, |b: u32| b.min(e)));
        }
        let bounds: Vec<u32> = bounds
            .iter()
            .enumerate()
            .map(|(i, b)| {
                b.ok_or_else(|| Error::NonArtinian {
                    variable: ctx.names()[i].clone(),
                })
            })
            .collect::<Result<_>>()?;

        let mut standard: Vec<Vec<Monomial>> = Vec::new();
        let mut exps = vec![0u32; n];
        loop {
            let m = Monomial::new(exps.clone());
            if !lms.iter().any(|lm| lm.divides(&m)) {
                let d = ctx.degree(&m) as usize;
                if standard.len() <= d {
                    standard.resize(d + 1, Vec::new());
                }
                standard[d].push(m);
            }
            // odometer over the box 0 <= e_i < bound_i
            let mut i = 0;
            while i < n {
                exps[i] += 1;
                if exps[i] < bounds[i] {
                    break;
                }
                exps[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
        }
        for piece in &mut standard {
            piece.sort_by(|a, b| ctx.cmp_monomials(b, a));
        }
        while standard.last().is_some_and(Vec::is_empty) {
            standard.pop();
        }
        Ok(QuotientRing { gb, standard })
    }

    pub fn context(&self) -> &Arc<RingContext> {
        self.gb.context()
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Highest degree with a nonzero piece; `None` for the zero ring.
    pub fn top_degree(&self) -> Option<u32> {
        self.standard.len().checked_sub(1).map(|d| d as u32)
    }

    /// Dimensions of the graded pieces from degree 0 through the top degree.
    pub fn hilbert_function(&self) -> Vec<usize> {
        self.standard.iter().map(Vec::len).collect()
    }

    pub fn dimension(&self) -> usize {
        self.standard.iter().map(Vec::len).sum()
    }

    pub fn basis(&self, degree: u32) -> &[Monomial] {
        self.standard
            .get(degree as usize)
            .map_or(&[], Vec::as_slice)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.gb.reduce(f)
    }

    /// Coordinates of the degree-`degree` part of `normal_form(f)` in the
    /// standard-monomial basis.
    pub fn coordinates(&self, f: &Polynomial, degree: u32) -> Vec<Rational> {
        let nf = self.normal_form(f);
        self.basis(degree)
            .iter()
            .map(|m| nf.coefficient(m))
            .collect()
    }

    pub fn multiply(&self, f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
        Ok(self.normal_form(&f.try_mul(g)?))
    }

    /// The matrix of `x ↦ multiplier·x` from the degree-`from_degree` piece
    /// to the degree-`from_degree + deg(multiplier)` piece. Columns index the
    /// source basis, rows the target basis.
    pub fn multiplication_matrix(
        &self,
        multiplier: &Polynomial,
        from_degree: u32,
    ) -> Result<Matrix> {
        let shift = match multiplier.weighted_degree() {
            Degree::Homogeneous(d) => d,
            Degree::Zero => {
                return Err(Error::InhomogeneousMultiplier {
                    degrees: Vec::new(),
                })
            }
            Degree::Inhomogeneous(ds) => {
                return Err(Error::InhomogeneousMultiplier {
                    degrees: ds.into_iter().collect(),
                })
            }
        };
        let source = self.basis(from_degree);
        let target_degree = from_degree + shift;
        let target = self.basis(target_degree);
        let mut matrix = vec![vec![Rational::zero(); source.len()]; target.len()];
        for (col, m) in source.iter().enumerate() {
            let image = multiplier.mul_term(m, &Rational::one());
            for (row, c) in self
                .coordinates(&image, target_degree)
                .into_iter()
                .enumerate()
            {
                matrix[row][col] = c;
            }
        }
        Ok(matrix)
    }

    /// Integral of a top-degree class. The zero class integrates to zero;
    /// anything whose normal form leaves the top degree, or a homogeneous
    /// class of another degree, is rejected.
    pub fn integrate(&self, f: &Polynomial, norm: &PointNormalization) -> Result<Rational> {
        let top = self.top_degree().ok_or_else(|| {
            Error::DegenerateNormalization("quotient is the zero ring".to_string())
        })?;
        if f.is_zero() {
            return Ok(Rational::zero());
        }
        if let Degree::Homogeneous(d) = f.weighted_degree() {
            if d != top {
                return Err(Error::NotTopDegree {
                    top,
                    degrees: vec![d],
                });
            }
        }
        let nf = self.normal_form(f);
        let mut stray: Vec<u32> = nf
            .terms()
            .iter()
            .map(|(m, _)| self.context().degree(m))
            .filter(|&d| d != top)
            .collect();
        if !stray.is_empty() {
            stray.dedup();
            return Err(Error::NotTopDegree {
                top,
                degrees: stray,
            });
        }
        Ok(nf.coefficient(&norm.top_monomial) * &norm.top_value)
    }

    /// Matrix of the pairing `(a, b) ↦ ∫ a·b` between the standard bases of
    /// degrees `left` and `left_complement`.
    pub fn pairing_matrix(
        &self,
        left: u32,
        right: u32,
        norm: &PointNormalization,
    ) -> Result<Matrix> {
        let ctx = self.context();
        let mut out = Vec::new();
        for a in self.basis(left) {
            let mut row = Vec::new();
            for b in self.basis(right) {
                let prod = Polynomial::term(ctx, a.mul(b), Rational::one());
                row.push(self.integrate(&prod, norm)?);
            }
            out.push(row);
        }
        Ok(out)
    }
}

/// Fixes integration on a quotient with one-dimensional top piece by naming
/// a top-degree class and its integral.
#[derive(Clone, Debug)]
pub struct PointNormalization {
    witness: Polynomial,
    value: Rational,
    top_monomial: Monomial,
    // integral of the standard top monomial
    top_value: Rational,
}

impl PointNormalization {
    pub fn new(q: &QuotientRing, witness: Polynomial, value: Rational) -> Result<Self> {
        let top = q.top_degree().ok_or_else(|| {
            Error::DegenerateNormalization("quotient is the zero ring".to_string())
        })?;
        let top_basis = q.basis(top);
        if top_basis.len() != 1 {
            return Err(Error::DegenerateNormalization(format!(
                "top piece (degree {top}) has dimension {}",
                top_basis.len()
            )));
        }
        let top_monomial = top_basis[0].clone();
        let nf = q.normal_form(&witness);
        if nf.is_zero() {
            return Err(Error::DegenerateNormalization(format!(
                "witness {witness} reduces to 0"
            )));
        }
        let degrees: Vec<u32> = nf
            .terms()
            .iter()
            .map(|(m, _)| q.context().degree(m))
            .collect();
        if degrees.iter().any(|&d| d != top) {
            return Err(Error::NotTopDegree { top, degrees });
        }
        if value.is_zero() {
            return Err(Error::DegenerateNormalization(
                "point value is 0".to_string(),
            ));
        }
        let top_value = &value / nf.coefficient(&top_monomial);
        Ok(PointNormalization {
            witness,
            value,
            top_monomial,
            top_value,
        })
    }

    pub fn witness(&self) -> &Polynomial {
        &self.witness
    }

    pub fn value(&self) -> &Rational {
        &self.value
    }
}

/// Exact rank by fraction-free (Bareiss) elimination over the integers.
pub fn rank(matrix: &[Vec<Rational>]) -> usize {
    // clear denominators row by row; row scaling does not change the rank
    let mut rows: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| {
            let lcm = row.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
            row.iter().map(|c| c.numer() * (&lcm / c.denom())).collect()
        })
        .collect();
    let ncols = rows.first().map_or(0, Vec::len);
    let nrows = rows.len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for col in 0..ncols {
        let Some(pivot) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        for i in r + 1..nrows {
            for j in col + 1..ncols {
                let v = &rows[r][col] * &rows[i][j] - &rows[i][col] * &rows[r][j];
                rows[i][j] = v / &prev;
            }
            rows[i][col] = BigInt::zero();
        }
        prev = rows[r][col].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}
