//! Engine properties shared by the proptest targets and the acceptance
//! suite. Each property is a plain function over a generated input so it can
//! run under `proptest!` or under an explicit deterministic runner.

use std::sync::Arc;

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};
use spinring::groebner::divide;
use spinring::{
    buchberger, normal_form, Ideal, Monomial, MonomialOrder, Polynomial, QuotientRing, RingContext,
};

use super::*;

pub const VARS: usize = 3;

pub fn ring(order: MonomialOrder) -> Arc<RingContext> {
    RingContext::new(vec!["x", "y", "z"], None, order).unwrap()
}

pub fn coeff() -> impl Strategy<Value = Q> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

fn nonzero_coeff() -> impl Strategy<Value = Q> {
    coeff().prop_filter("nonzero", |c| !c.is_zero())
}

/// Homogeneous polynomial of degree `d` with up to three terms.
pub fn homogeneous(d: u32) -> impl Strategy<Value = Poly> {
    let mons = monomials(VARS, d);
    let len = mons.len();
    proptest::collection::vec((0..len, nonzero_coeff()), 1..=3).prop_map(move |ts| {
        ts.into_iter().fold(Poly::new(), |acc, (i, c)| {
            add(&acc, &constant_at(mons[i].clone(), c))
        })
    })
}

/// Polynomial of total degree at most `d` with up to `terms` terms.
pub fn bounded(d: u32, terms: usize) -> impl Strategy<Value = Poly> {
    let mons = monomials_up_to(VARS, d);
    let len = mons.len();
    proptest::collection::vec((0..len, nonzero_coeff()), 0..=terms).prop_map(move |ts| {
        ts.into_iter().fold(Poly::new(), |acc, (i, c)| {
            add(&acc, &constant_at(mons[i].clone(), c))
        })
    })
}

pub fn homogeneous_ideal() -> impl Strategy<Value = Vec<Poly>> {
    proptest::collection::vec((1u32..=2).prop_flat_map(homogeneous), 1..=3)
        .prop_filter("nonzero generators", |g| g.iter().all(|p| !p.is_empty()))
}

pub fn small_ideal() -> impl Strategy<Value = Vec<Poly>> {
    proptest::collection::vec(bounded(2, 3), 1..=3)
        .prop_filter("nonzero generators", |g| g.iter().all(|p| !p.is_empty()))
}

pub fn order() -> impl Strategy<Value = MonomialOrder> {
    prop_oneof![Just(MonomialOrder::Grevlex), Just(MonomialOrder::Lex)]
}

fn lift(ctx: &Arc<RingContext>, gens: &[Poly]) -> Vec<Polynomial> {
    gens.iter().map(|g| to_poly(ctx, g)).collect()
}

fn gb_of(ctx: &Arc<RingContext>, gens: &[Polynomial]) -> Vec<Polynomial> {
    buchberger(&Ideal::new(ctx, gens.to_vec()).unwrap())
        .unwrap()
        .elements()
        .to_vec()
}

#[derive(Clone, Debug)]
pub struct UniquenessInput {
    pub order: MonomialOrder,
    pub gens: Vec<Poly>,
    pub scales: Vec<Q>,
    pub redundant: Poly,
}

pub fn uniqueness_input() -> impl Strategy<Value = UniquenessInput> {
    (
        order(),
        small_ideal(),
        proptest::collection::vec(nonzero_coeff(), 3),
        bounded(1, 2),
    )
        .prop_map(|(order, gens, scales, redundant)| UniquenessInput {
            order,
            gens,
            scales,
            redundant,
        })
}

/// Reordering, rescaling and adding a redundant generator leave the reduced
/// basis unchanged; recomputing from the basis is a fixed point.
pub fn prop_uniqueness(input: UniquenessInput) -> Result<(), TestCaseError> {
    let ctx = ring(input.order);
    let gens = lift(&ctx, &input.gens);
    let gb = buchberger(&Ideal::new(&ctx, gens.clone()).unwrap()).unwrap();
    prop_assert!(gb.is_reduced());

    let mut other: Vec<Polynomial> = gens
        .iter()
        .rev()
        .zip(&input.scales)
        .map(|(g, c)| g.scale(c))
        .collect();
    let extra = &to_poly(&ctx, &input.redundant) * &gens[0];
    other.push(extra);
    prop_assert_eq!(gb_of(&ctx, &other), gb.elements().to_vec());
    prop_assert_eq!(gb_of(&ctx, gb.elements()), gb.elements().to_vec());
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ConfluenceInput {
    pub order: MonomialOrder,
    pub gens: Vec<Poly>,
    pub target: Poly,
    pub rotation: usize,
}

pub fn confluence_input() -> impl Strategy<Value = ConfluenceInput> {
    (order(), small_ideal(), bounded(4, 6), 0usize..8).prop_map(
        |(order, gens, target, rotation)| ConfluenceInput {
            order,
            gens,
            target,
            rotation,
        },
    )
}

/// Normal forms modulo a Gröbner basis do not depend on the divisor order,
/// and the division identity `f = Σ qᵢgᵢ + r` holds for any divisor list.
pub fn prop_confluence(input: ConfluenceInput) -> Result<(), TestCaseError> {
    let ctx = ring(input.order);
    let f = to_poly(&ctx, &input.target);
    let gens = lift(&ctx, &input.gens);

    let (quotients, remainder) = divide(&f, &gens);
    let rebuilt = quotients
        .iter()
        .zip(&gens)
        .fold(remainder.clone(), |acc, (q, g)| &acc + &(q * g));
    prop_assert_eq!(&rebuilt, &f);
    for (m, _) in remainder.terms() {
        prop_assert!(gens
            .iter()
            .all(|g| !g.leading_monomial().unwrap().divides(m)));
    }

    let basis = gb_of(&ctx, &gens);
    let reference = normal_form(&f, &basis);
    let mut permuted = basis.clone();
    permuted.rotate_left(input.rotation % basis.len().max(1));
    prop_assert_eq!(&normal_form(&f, &permuted), &reference);
    permuted.reverse();
    prop_assert_eq!(&normal_form(&f, &permuted), &reference);
    prop_assert_eq!(&normal_form(&reference, &basis), &reference);
    Ok(())
}

#[derive(Clone, Debug)]
pub struct MembershipInput {
    pub order: MonomialOrder,
    pub gens: Vec<Poly>,
    /// `(generator, multiplier monomial, coefficient)` picks for a member.
    pub combination: Vec<(usize, usize, Q)>,
    pub degree: u32,
    pub noise: Option<Poly>,
}

pub fn membership_input() -> impl Strategy<Value = MembershipInput> {
    (
        order(),
        homogeneous_ideal(),
        proptest::collection::vec((0usize..3, 0usize..64, nonzero_coeff()), 1..=4),
        2u32..=3,
        proptest::option::of((2u32..=3).prop_flat_map(homogeneous)),
    )
        .prop_map(
            |(order, gens, combination, degree, noise)| MembershipInput {
                order,
                gens,
                combination,
                degree,
                noise,
            },
        )
}

impl MembershipInput {
    pub fn candidate(&self) -> Poly {
        let mut f = Poly::new();
        for (gi, mi, c) in &self.combination {
            let g = &self.gens[gi % self.gens.len()];
            let dg = degree_of(g.keys().next().unwrap());
            if dg > self.degree {
                continue;
            }
            let mons = monomials(VARS, self.degree - dg);
            let m = constant_at(mons[mi % mons.len()].clone(), c.clone());
            f = add(&f, &mul(&m, g));
        }
        match &self.noise {
            Some(n) => add(&f, n),
            None => f,
        }
    }
}

/// Gröbner membership agrees exactly with the Macaulay-matrix oracle on
/// homogeneous ideals; every basis element is an oracle member.
pub fn prop_membership(input: MembershipInput) -> Result<(), TestCaseError> {
    let ctx = ring(input.order);
    let gb = buchberger(&Ideal::new(&ctx, lift(&ctx, &input.gens)).unwrap()).unwrap();
    let f = input.candidate();
    let expected = member_homogeneous(&input.gens, VARS, &f);
    prop_assert_eq!(
        gb.contains(&to_poly(&ctx, &f)),
        expected,
        "candidate {:?}",
        f
    );
    for g in gb.elements() {
        prop_assert!(
            member_homogeneous(&input.gens, VARS, &from_poly(g)),
            "basis element {} not in ideal",
            g
        );
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct InhomogeneousInput {
    pub gens: Vec<Poly>,
    pub multipliers: Vec<Poly>,
    pub noise: Poly,
}

pub fn inhomogeneous_input() -> impl Strategy<Value = InhomogeneousInput> {
    (
        small_ideal(),
        proptest::collection::vec(bounded(1, 2), 3),
        bounded(2, 2),
    )
        .prop_map(|(gens, multipliers, noise)| InhomogeneousInput {
            gens,
            multipliers,
            noise,
        })
}

/// For arbitrary ideals the oracle only certifies membership up to a degree
/// bound, so agreement is checked in the direction the certificate allows.
pub fn prop_membership_certified(input: InhomogeneousInput) -> Result<(), TestCaseError> {
    let ctx = ring(MonomialOrder::Grevlex);
    let gb = buchberger(&Ideal::new(&ctx, lift(&ctx, &input.gens)).unwrap()).unwrap();
    let member = input
        .gens
        .iter()
        .zip(&input.multipliers)
        .fold(Poly::new(), |acc, (g, h)| add(&acc, &mul(g, h)));
    prop_assert!(gb.contains(&to_poly(&ctx, &member)));
    for f in [member.clone(), add(&member, &input.noise)] {
        if member_bounded(&input.gens, VARS, &f, 4) {
            prop_assert!(
                gb.contains(&to_poly(&ctx, &f)),
                "certified member {:?} rejected",
                f
            );
        }
    }
    Ok(())
}

#[derive(Clone, Debug)]
pub struct MonomialIdealInput {
    pub powers: Vec<u32>,
    pub extra: Vec<Vec<u32>>,
}

pub fn monomial_ideal_input() -> impl Strategy<Value = MonomialIdealInput> {
    (
        proptest::collection::vec(1u32..=4, VARS),
        proptest::collection::vec(proptest::collection::vec(0u32..=3, VARS), 0..=4),
    )
        .prop_map(|(powers, extra)| MonomialIdealInput { powers, extra })
}

impl MonomialIdealInput {
    pub fn generators(&self) -> Vec<Vec<u32>> {
        let mut gens: Vec<Vec<u32>> = (0..VARS)
            .map(|i| {
                let mut e = vec![0; VARS];
                e[i] = self.powers[i];
                e
            })
            .collect();
        gens.extend(
            self.extra
                .iter()
                .filter(|e| e.iter().any(|&x| x > 0))
                .cloned(),
        );
        gens
    }
}

/// Counts exponent vectors of each degree outside the monomial ideal.
pub fn count_standard(gens: &[Vec<u32>]) -> Vec<usize> {
    let divides = |g: &Vec<u32>, e: &Vec<u32>| g.iter().zip(e).all(|(a, b)| a <= b);
    let mut out = Vec::new();
    for d in 0.. {
        let n = monomials(VARS, d)
            .into_iter()
            .filter(|e| !gens.iter().any(|g| divides(g, e)))
            .count();
        if n == 0 {
            break;
        }
        out.push(n);
    }
    out
}

pub fn prop_monomial_hilbert(input: MonomialIdealInput) -> Result<(), TestCaseError> {
    let ctx = ring(MonomialOrder::Grevlex);
    let gens = input.generators();
    let polys: Vec<Polynomial> = gens
        .iter()
        .map(|e| Polynomial::term(&ctx, Monomial::new(e.clone()), q(1, 1)))
        .collect();
    let quotient =
        QuotientRing::build(buchberger(&Ideal::new(&ctx, polys).unwrap()).unwrap()).unwrap();
    prop_assert_eq!(quotient.hilbert_function(), count_standard(&gens));
    Ok(())
}

#[derive(Clone, Debug)]
pub struct ArtinianInput {
    pub order: MonomialOrder,
    pub quadrics: Vec<Poly>,
}

pub fn artinian_input() -> impl Strategy<Value = ArtinianInput> {
    (order(), proptest::collection::vec(homogeneous(2), 0..=3))
        .prop_map(|(order, quadrics)| ArtinianInput { order, quadrics })
}

impl ArtinianInput {
    pub fn generators(&self) -> Vec<Poly> {
        let mut gens: Vec<Poly> = (0..VARS).map(|i| pow(&var(VARS, i), 3, VARS)).collect();
        gens.extend(self.quadrics.iter().filter(|p| !p.is_empty()).cloned());
        gens
    }
}

/// Hilbert functions of Artinian homogeneous ideals match the oracle's
/// `dim R_d − rank I_d` degree by degree.
pub fn prop_artinian_hilbert(input: ArtinianInput) -> Result<(), TestCaseError> {
    let ctx = ring(input.order);
    let gens = input.generators();
    let quotient =
        QuotientRing::build(buchberger(&Ideal::new(&ctx, lift(&ctx, &gens)).unwrap()).unwrap())
            .unwrap();
    let h = quotient.hilbert_function();
    for d in 0..=(3 * VARS as u32) {
        let expected = hilbert(&gens, VARS, d);
        prop_assert_eq!(
            h.get(d as usize).copied().unwrap_or(0),
            expected,
            "degree {}",
            d
        );
    }
    Ok(())
}

/// Number of generated cases each property receives in the full suite.
#[derive(Clone, Copy, Debug)]
pub struct SuiteSizes {
    pub uniqueness: u32,
    pub confluence: u32,
    pub membership: u32,
    pub inhomogeneous: u32,
    pub monomial_hilbert: u32,
    pub artinian_hilbert: u32,
}

impl Default for SuiteSizes {
    fn default() -> Self {
        SuiteSizes {
            uniqueness: 64,
            confluence: 64,
            membership: 64,
            inhomogeneous: 64,
            monomial_hilbert: 64,
            artinian_hilbert: 48,
        }
    }
}

fn runner(cases: u32) -> TestRunner {
    let config = Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

/// Runs every property with a fixed seed; returns the first failure.
pub fn run_suite(sizes: SuiteSizes) -> Result<(), String> {
    fn go<S: Strategy>(
        name: &str,
        cases: u32,
        s: S,
        p: impl Fn(S::Value) -> Result<(), TestCaseError>,
    ) -> Result<(), String>
    where
        S::Value: std::fmt::Debug,
    {
        runner(cases).run(&s, p).map_err(|e| format!("{name}: {e}"))
    }
    go(
        "uniqueness",
        sizes.uniqueness,
        uniqueness_input(),
        prop_uniqueness,
    )?;
    go(
        "confluence",
        sizes.confluence,
        confluence_input(),
        prop_confluence,
    )?;
    go(
        "membership",
        sizes.membership,
        membership_input(),
        prop_membership,
    )?;
    go(
        "membership_certified",
        sizes.inhomogeneous,
        inhomogeneous_input(),
        prop_membership_certified,
    )?;
    go(
        "monomial_hilbert",
        sizes.monomial_hilbert,
        monomial_ideal_input(),
        prop_monomial_hilbert,
    )?;
    go(
        "artinian_hilbert",
        sizes.artinian_hilbert,
        artinian_input(),
        prop_artinian_hilbert,
    )?;
    Ok(())
}

/// Members and non-members among the membership candidates the suite
/// generates, so agreement is not vacuous on either side.
pub fn membership_tally(cases: u32) -> (usize, usize) {
    let tally = std::cell::Cell::new((0, 0));
    let _ = runner(cases).run(&membership_input(), |input| {
        let (yes, no) = tally.get();
        if member_homogeneous(&input.gens, VARS, &input.candidate()) {
            tally.set((yes + 1, no));
        } else {
            tally.set((yes, no + 1));
        }
        Ok(())
    });
    tally.get()
}
