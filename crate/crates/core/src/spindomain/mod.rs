//! Built-in data for the two components of the genus-2 spin moduli space:
//! the presentations of their cohomology rings, the named classes `λ₂` and
//! `Δ`, pullbacks of boundary classes from `M̄₂`, point normalizations and
//! the stratum catalog.
//!
//! Each component is modeled as its own ring; the cohomology of the whole
//! space is the direct product of the two.

mod report;
mod strata;

use std::fmt;
use std::sync::{Arc, OnceLock};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::groebner::{buchberger, GroebnerBasis, Ideal};
use crate::parser::{parse_polynomial, RingFile};
use crate::poly::{rat, Degree, MonomialOrder, Polynomial, Rational, RingContext};
use crate::quotient::{PointNormalization, QuotientRing};

pub use report::{verify, verify_all, CheckResult, VerificationReport, SCHEMA_VERSION};
pub use strata::{strata, GraphType, Stratum};

const EVEN_RING: &str = include_str!("../../data/even.ring");
const ODD_RING: &str = include_str!("../../data/odd.ring");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Even,
    Odd,
}

impl Component {
    pub const ALL: [Component; 2] = [Component::Even, Component::Odd];

    pub fn name(self) -> &'static str {
        match self {
            Component::Even => "even",
            Component::Odd => "odd",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "even" | "+" => Some(Component::Even),
            "odd" | "-" => Some(Component::Odd),
            _ => None,
        }
    }

    pub fn sign(self) -> char {
        match self {
            Component::Even => '⁺',
            Component::Odd => '⁻',
        }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Presentation of the cohomology ring of one component as a graded
/// quotient of a polynomial ring in the boundary classes.
#[derive(Clone, Debug)]
pub struct SpinRingPresentation {
    pub component: Component,
    pub file: RingFile,
    /// Top-degree class and its integral.
    pub point_witness: Polynomial,
    pub point_value: Rational,
    pub point_name: &'static str,
    pub expected_hilbert: Vec<usize>,
    /// Number of theta-characteristics of the given parity on a genus-2
    /// curve; the degree of the forgetful map onto `M̄₂`.
    pub covering_degree: u32,
}

fn build_presentation(component: Component) -> SpinRingPresentation {
    let text = match component {
        Component::Even => EVEN_RING,
        Component::Odd => ODD_RING,
    };
    let file = RingFile::parse(text).expect("built-in ring file parses");
    let ctx = file.context.clone();
    let (witness, value, point_name, hilbert, degree) = match component {
        Component::Even => ("a0^2*b1", rat(5, 4), "[p]", vec![1, 4, 4, 1], 10),
        Component::Odd => ("a1*a0^2", rat(3, 16), "[q]", vec![1, 3, 3, 1], 6),
    };
    SpinRingPresentation {
        component,
        point_witness: parse_polynomial(witness, &ctx).expect("built-in witness parses"),
        point_value: value,
        point_name,
        expected_hilbert: hilbert,
        covering_degree: degree,
        file,
    }
}

/// The hard-coded presentation for `component`.
pub fn builtin(component: Component) -> &'static SpinRingPresentation {
    static EVEN: OnceLock<SpinRingPresentation> = OnceLock::new();
    static ODD: OnceLock<SpinRingPresentation> = OnceLock::new();
    match component {
        Component::Even => EVEN.get_or_init(|| build_presentation(Component::Even)),
        Component::Odd => ODD.get_or_init(|| build_presentation(Component::Odd)),
    }
}

impl SpinRingPresentation {
    pub fn context(&self) -> &Arc<RingContext> {
        &self.file.context
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.file.generators
    }

    pub fn ideal(&self) -> Ideal {
        self.file.ideal()
    }

    /// Display name of a ring variable, e.g. `a0` ↦ `α₀⁺`.
    pub fn display_name(&self, var: &str) -> String {
        let base = match var {
            "a0" => "α₀",
            "a1" => "α₁",
            "b0" => "β₀",
            "b1" => "β₁",
            other => return other.to_string(),
        };
        format!("{base}{}", self.component.sign())
    }

    pub fn legend(&self) -> String {
        self.context()
            .names()
            .iter()
            .map(|n| format!("{n}={}", self.display_name(n)))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn poly(&self, text: &str) -> Polynomial {
        parse_polynomial(text, self.context()).expect("built-in expression parses")
    }

    pub fn var(&self, name: &str) -> Polynomial {
        Polynomial::var_named(self.context(), name).expect("built-in variable")
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.data().0
    }

    pub fn quotient(&self) -> &QuotientRing {
        &self.data().1
    }

    pub fn point_normalization(&self) -> &PointNormalization {
        &self.data().2
    }

    fn data(&self) -> &(GroebnerBasis, QuotientRing, PointNormalization) {
        static EVEN: OnceLock<(GroebnerBasis, QuotientRing, PointNormalization)> = OnceLock::new();
        static ODD: OnceLock<(GroebnerBasis, QuotientRing, PointNormalization)> = OnceLock::new();
        let cell = match self.component {
            Component::Even => &EVEN,
            Component::Odd => &ODD,
        };
        cell.get_or_init(|| {
            let gb = buchberger(&self.ideal()).expect("built-in ideal is nonzero");
            let q = QuotientRing::build(gb.clone()).expect("built-in quotient is Artinian");
            let norm =
                PointNormalization::new(&q, self.point_witness.clone(), self.point_value.clone())
                    .expect("built-in point normalization is valid");
            (gb, q, norm)
        })
    }

    pub fn integrate(&self, f: &Polynomial) -> Result<Rational> {
        self.quotient().integrate(f, self.point_normalization())
    }

    pub fn is_member(&self, f: &Polynomial) -> bool {
        self.groebner_basis().contains(f)
    }

    /// Degrees of the generators, in order.
    pub fn generator_degrees(&self) -> Vec<Option<u32>> {
        self.generators()
            .iter()
            .map(|g| match g.weighted_degree() {
                Degree::Homogeneous(d) => Some(d),
                _ => None,
            })
            .collect()
    }
}

/// A named class written in the boundary generators.
#[derive(Clone, Debug, PartialEq)]
pub struct NamedClass {
    pub name: &'static str,
    pub component: Component,
    pub expression: Polynomial,
}

/// Pullback of the Hodge class: `λ₂ = (δ_irr + 2δ₁)/10` pulled back.
pub fn lambda2(component: Component) -> NamedClass {
    let p = builtin(component);
    let expression = match component {
        Component::Even => p.poly("1/10*(a0 + 2*b0 + 4*b1 + 4*a1)"),
        Component::Odd => p.poly("1/10*(a0 + 2*b0 + 4*a1)"),
    };
    NamedClass {
        name: "lambda2",
        component,
        expression,
    }
}

/// Sum of all boundary classes of the component.
pub fn delta(component: Component) -> NamedClass {
    let p = builtin(component);
    let expression = p
        .context()
        .names()
        .iter()
        .fold(Polynomial::zero(p.context()), |acc, n| &acc + &p.var(n));
    NamedClass {
        name: "Delta",
        component,
        expression,
    }
}

/// Ring of formal expressions in `d_irr`, `d1` (boundary classes of `M̄₂`).
pub fn mumford_context() -> &'static Arc<RingContext> {
    static CTX: OnceLock<Arc<RingContext>> = OnceLock::new();
    CTX.get_or_init(|| {
        RingContext::new(["d_irr", "d1"], None, MonomialOrder::Grevlex).expect("valid ring")
    })
}

/// A class on `M̄₂` written in `δ_irr` and `δ₁`; `λ` is always eliminated
/// through `10λ = δ_irr + 2δ₁`.
#[derive(Clone, Debug, PartialEq)]
pub struct MumfordClassExpr(pub Polynomial);

impl MumfordClassExpr {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(MumfordClassExpr(parse_polynomial(text, mumford_context())?))
    }

    pub fn d_irr() -> Self {
        MumfordClassExpr(Polynomial::var(mumford_context(), 0))
    }

    pub fn d1() -> Self {
        MumfordClassExpr(Polynomial::var(mumford_context(), 1))
    }

    pub fn lambda() -> Self {
        Self::parse("1/10*(d_irr + 2*d1)").unwrap()
    }
}

impl fmt::Display for MumfordClassExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// Relations and intersection numbers on `M̄₂` used by the checks.
pub struct MumfordCatalog;

impl MumfordCatalog {
    /// `δ_irr δ₁ + 12 δ₁² = 0`.
    pub fn boundary_relation() -> MumfordClassExpr {
        MumfordClassExpr::parse("d_irr*d1 + 12*d1^2").unwrap()
    }

    /// `λδ₁ − (1/12)δ_irr δ₁ = 0`, with `λ` eliminated.
    pub fn lambda_delta1_relation() -> MumfordClassExpr {
        let lam = MumfordClassExpr::lambda().0;
        let d1 = MumfordClassExpr::d1().0;
        let dd = MumfordClassExpr::parse("1/12*d_irr*d1").unwrap().0;
        MumfordClassExpr(&(&lam * &d1) - &dd)
    }

    /// `∫ δ₁³ = 1/576`.
    pub fn delta1_cubed() -> (MumfordClassExpr, Rational) {
        (MumfordClassExpr::parse("d1^3").unwrap(), rat(1, 576))
    }

    /// `∫ δ_irr δ₁² = −1/48`.
    pub fn dirr_delta1_squared() -> (MumfordClassExpr, Rational) {
        (MumfordClassExpr::parse("d_irr*d1^2").unwrap(), rat(-1, 48))
    }
}

/// Pulls a class on `M̄₂` back to `component`:
/// `δ_irr ↦ α₀ + 2β₀`, `δ₁ ↦ 2α₁ + 2β₁` (even) or `2α₁` (odd; `β₁⁻ = 0`).
pub fn pullback(expr: &MumfordClassExpr, component: Component) -> Polynomial {
    let p = builtin(component);
    let images = match component {
        Component::Even => [p.poly("a0 + 2*b0"), p.poly("2*a1 + 2*b1")],
        Component::Odd => [p.poly("a0 + 2*b0"), p.poly("2*a1")],
    };
    expr.0
        .substitute(&images, p.context())
        .expect("pullback images live in the component ring")
}

/// Outcome of comparing top intersection numbers on the cover with those on
/// `M̄₂`.
#[derive(Clone, Debug, PartialEq)]
pub struct CoveringCheck {
    pub component: Component,
    /// `∫ pullback(δ₁)³`
    pub delta1_cubed: Rational,
    /// `∫ pullback(δ_irr δ₁²)`
    pub dirr_delta1_squared: Rational,
    pub inferred_from_cube: Rational,
    pub inferred_from_mixed: Rational,
    pub expected_degree: u32,
}

impl CoveringCheck {
    pub fn passes(&self) -> bool {
        let d = Rational::from_integer(self.expected_degree.into());
        self.inferred_from_cube == d && self.inferred_from_mixed == d
    }
}

pub fn covering_degree_check(component: Component) -> Result<CoveringCheck> {
    let p = builtin(component);
    let (cube, cube_base) = MumfordCatalog::delta1_cubed();
    let (mixed, mixed_base) = MumfordCatalog::dirr_delta1_squared();
    let delta1_cubed = p.integrate(&pullback(&cube, component))?;
    let dirr_delta1_squared = p.integrate(&pullback(&mixed, component))?;
    Ok(CoveringCheck {
        component,
        inferred_from_cube: &delta1_cubed / &cube_base,
        inferred_from_mixed: &dirr_delta1_squared / &mixed_base,
        delta1_cubed,
        dirr_delta1_squared,
        expected_degree: p.covering_degree,
    })
}

/// Hodge numbers `h^{p,q}` for `0 <= p, q <= 3`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HodgeDiamond {
    pub h: [[usize; 4]; 4],
}

impl HodgeDiamond {
    /// The tabulated diamond of the full space.
    pub fn expected() -> Self {
        let mut h = [[0; 4]; 4];
        h[0][0] = 2;
        h[1][1] = 7;
        h[2][2] = 7;
        h[3][3] = 2;
        HodgeDiamond { h }
    }

    pub fn euler_characteristic(&self) -> i64 {
        let mut e = 0i64;
        for (p, row) in self.h.iter().enumerate() {
            for (q, &v) in row.iter().enumerate() {
                let sign = if (p + q) % 2 == 0 { 1 } else { -1 };
                e += sign * v as i64;
            }
        }
        e
    }
}

/// Assembles the diamond from the two quotients. All cohomology is
/// algebraic and odd-degree cohomology vanishes, so only `h^{k,k}` can be
/// nonzero and it is the sum of the degree-`k` dimensions.
pub fn hodge_diamond() -> HodgeDiamond {
    let mut h = [[0; 4]; 4];
    for c in Component::ALL {
        for (k, dim) in builtin(c)
            .quotient()
            .hilbert_function()
            .into_iter()
            .enumerate()
            .take(4)
        {
            h[k][k] += dim;
        }
    }
    HodgeDiamond { h }
}

/// Genus-1 identities used only in derivations; carried as documentation.
pub fn genus_one_constants() -> Vec<&'static str> {
    vec![
        "λ₁⁺ = (1/4) α₀⁺ on S̄₁,ₙ⁺",
        "λ₁⁻ = (1/12) α₀⁻ on S̄₁,ₙ⁻",
        "(λ₁⁺)² = (λ₁⁻)² = 0",
    ]
}
