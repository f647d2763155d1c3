//! Stratification of the genus-2 spin moduli space by topological type.
//!
//! Strata are grouped by the dual graph of the stable model (G1..G7). G2 is
//! the irreducible one-node type and G3 the type of two elliptic curves
//! meeting at a point; the remaining types follow the number of nodes.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::Component;
use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum GraphType {
    G1,
    G2,
    G3,
    G4,
    G5,
    G6,
    G7,
}

impl GraphType {
    pub const ALL: [GraphType; 7] = [
        GraphType::G1,
        GraphType::G2,
        GraphType::G3,
        GraphType::G4,
        GraphType::G5,
        GraphType::G6,
        GraphType::G7,
    ];

    /// Nodes of a general stable curve of this type.
    pub fn nodes(self) -> u32 {
        match self {
            GraphType::G1 => 0,
            GraphType::G2 | GraphType::G3 => 1,
            GraphType::G4 | GraphType::G5 => 2,
            GraphType::G6 | GraphType::G7 => 3,
        }
    }

    pub fn dimension(self) -> u32 {
        3 - self.nodes()
    }

    /// Count of strata stated in words for this preimage, where that count
    /// is given separately from the list (G2 and G3 share one count).
    pub fn stated_count(self) -> Option<usize> {
        match self {
            GraphType::G1 => Some(2),
            GraphType::G6 | GraphType::G7 => Some(7),
            _ => None,
        }
    }
}

impl fmt::Display for GraphType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for GraphType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        GraphType::ALL
            .into_iter()
            .find(|g| g.to_string().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownGraphType(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Stratum {
    pub name: &'static str,
    pub graph: GraphType,
    pub component: Component,
    pub dimension: u32,
    pub description: &'static str,
    /// Set on `A1-` and `B1-`: `β₁⁻` is zero as a class, so whether the two
    /// loci coincide is left open.
    pub identification_open: bool,
}

const CATALOG: &[(&str, GraphType, Component, &str)] = {
    use Component::{Even as E, Odd as O};
    use GraphType::*;
    &[
        ("S+", G1, E, "smooth genus-2 curve, even theta-characteristic"),
        ("S-", G1, O, "smooth genus-2 curve, odd theta-characteristic"),
        ("A0+", G2, E, "irreducible one-nodal curve, even spin structure"),
        ("A0-", G2, O, "irreducible one-nodal curve, odd spin structure"),
        ("B0+", G2, E, "irreducible one-nodal curve blown up at the node, even spin structure, O(1) on the exceptional line"),
        ("B0-", G2, O, "irreducible one-nodal curve blown up at the node, odd spin structure, O(1) on the exceptional line"),
        ("A1+", G3, E, "two elliptic curves joined through an exceptional line, even/even theta-characteristics"),
        ("A1-", G3, O, "two elliptic curves joined through an exceptional line, even/odd theta-characteristics"),
        ("B1+", G3, E, "two elliptic curves joined through an exceptional line, odd/odd theta-characteristics"),
        ("B1-", G3, O, "two elliptic curves joined through an exceptional line, odd/even theta-characteristics"),
        ("C+", G4, E, "irreducible curve with two nodes, even spin structure"),
        ("C-", G4, O, "irreducible curve with two nodes, odd spin structure"),
        ("D+", G4, E, "rational curve with two nodes, one blown up, even spin structure"),
        ("D-", G4, O, "rational curve with two nodes, one blown up, odd spin structure"),
        ("E", G4, E, "rational curve with two nodes, both blown up, even spin structure"),
        ("X+", G5, E, "elliptic curve and nodal curve joined by a rational bridge, even/even theta-characteristics"),
        ("X-", G5, O, "elliptic curve and nodal curve joined by a rational bridge, even/odd theta-characteristics"),
        ("Y+", G5, E, "elliptic curve and nodal curve joined by a rational bridge, odd/odd theta-characteristics"),
        ("Y-", G5, O, "elliptic curve and nodal curve joined by a rational bridge, odd/even theta-characteristics"),
        ("Z+", G5, E, "elliptic curve (even) and nodal curve blown up at its node (even) joined by a rational bridge"),
        ("Z-", G5, O, "elliptic curve (odd) and nodal curve blown up at its node (even) joined by a rational bridge"),
        ("L+", G6, E, "two rational curves meeting in three points, one point blown up, even spin structure"),
        ("L-", G6, O, "two rational curves meeting in three points, one point blown up, odd spin structure"),
        ("M", G6, E, "two rational curves meeting in three points, all three blown up, even spin structure"),
        ("P+", G7, E, "two nodal genus-1 curves joined by a rational bridge, even/even theta-characteristics"),
        ("Q+", G7, E, "two nodal genus-1 curves joined by a rational bridge, odd/odd theta-characteristics"),
        ("P-", G7, O, "two nodal genus-1 curves joined by a rational bridge, odd/even theta-characteristics (P- = Q-)"),
        ("R", G7, E, "two one-nodal curves, each blown up at its node, joined by a rational bridge, even spin structure"),
        ("U+", G7, E, "nodal genus-1 curve (even) and one-nodal curve blown up at its node joined by a rational bridge"),
        ("U-", G7, O, "nodal genus-1 curve (odd) and one-nodal curve blown up at its node joined by a rational bridge"),
    ]
};

/// The stratum catalog, optionally filtered, ordered by graph type then name.
pub fn strata(graph: Option<GraphType>, component: Option<Component>) -> Vec<Stratum> {
    let mut out: Vec<Stratum> = CATALOG
        .iter()
        .filter(|(_, g, c, _)| graph.is_none_or(|x| x == *g) && component.is_none_or(|x| x == *c))
        .map(|&(name, graph, component, description)| Stratum {
            name,
            graph,
            component,
            dimension: graph.dimension(),
            description,
            identification_open: matches!(name, "A1-" | "B1-"),
        })
        .collect();
    out.sort_by(|a, b| (a.graph, a.name).cmp(&(b.graph, b.name)));
    out
}
