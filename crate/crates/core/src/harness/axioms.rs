//! Axiom identifiers.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;
use crate::ops::VbProduct;

/// Laws shared by the bicycle theories and the vector-bundle products.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Law {
    /// Associativity of the product.
    A1,
    /// Units are two-sided identities.
    Unit,
    /// Functoriality of proper pushforward.
    A2a,
    /// Functoriality of smooth pushforward.
    A2b,
    /// The two pushforwards commute.
    A2p,
    /// Functoriality of smooth pullback.
    A3a,
    /// Functoriality of proper pullback.
    A3b,
    /// The two pullbacks commute.
    A3p,
    /// Product and proper pushforward.
    A12a,
    /// Product and smooth pushforward.
    A12b,
    /// Product and smooth pullback.
    A13a,
    /// Product and proper pullback.
    A13b,
    /// Proper pushforward and proper pullback commute.
    A23a,
    /// Smooth pullback and smooth pushforward commute.
    A23b,
    /// Base change on the left across a fiber square.
    A23c,
    /// Base change on the right across a fiber square.
    A23d,
    /// Projection formula for a smooth map.
    A123a,
    /// Projection formula for a proper map.
    A123b,
}

impl Law {
    pub const ALL: [Law; 18] = [
        Law::A1,
        Law::Unit,
        Law::A2a,
        Law::A2b,
        Law::A2p,
        Law::A3a,
        Law::A3b,
        Law::A3p,
        Law::A12a,
        Law::A12b,
        Law::A13a,
        Law::A13b,
        Law::A23a,
        Law::A23b,
        Law::A23c,
        Law::A23d,
        Law::A123a,
        Law::A123b,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Law::A1 => "A1",
            Law::Unit => "UNIT",
            Law::A2a => "A2a",
            Law::A2b => "A2b",
            Law::A2p => "A2'",
            Law::A3a => "A3a",
            Law::A3b => "A3b",
            Law::A3p => "A3'",
            Law::A12a => "A12a",
            Law::A12b => "A12b",
            Law::A13a => "A13a",
            Law::A13b => "A13b",
            Law::A23a => "A23a",
            Law::A23b => "A23b",
            Law::A23c => "A23c",
            Law::A23d => "A23d",
            Law::A123a => "A123a",
            Law::A123b => "A123b",
        }
    }
}

/// Axioms checked in an arbitrary theory.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoryAxiom {
    Law(Law),
    /// Compatibility of the unit with a smooth pushforward and a proper
    /// pushforward across a fiber square.
    Pppu,
    /// Chern operators on pulled-back units commute past the unit.
    Ppu,
    /// Isomorphic bundles give equal Chern operators.
    Ch1,
    /// Chern operators commute with each other.
    Ch2,
    /// Chern operators commute with the product.
    Ch3,
    /// Chern operators and pushforwards.
    Ch4,
    /// Chern operators and pullbacks.
    Ch5,
    /// Chern operators on units act the same from both sides.
    Uc,
    /// The position of the unit among the Chern operators in the normal form
    /// of a generator does not matter.
    Psrel,
}

/// Laws saying the universal transformation into a theory is a
/// Grothendieck transformation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GammaLaw {
    Unit,
    Product,
    Pushforward,
    Pullback,
    Chern,
}

/// Closed forms against the representative-level oracles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleCheck {
    Product,
    ProperPushforward,
    SmoothPushforward,
    SmoothPullback,
    ProperPullback,
    Chern,
    Whitney,
    Tensor,
    Cycles,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VbLaw {
    Law(Law),
    Bilinear,
    Bigrading,
}

/// Compatibilities of the forget map from cycles to bicycles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ForgetLaw {
    Product,
    Pushforward,
    Chern,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AxiomId {
    Theory(TheoryAxiom),
    Gamma(GammaLaw),
    Oracle(OracleCheck),
    Vector(VbProduct, VbLaw),
    Forget(ForgetLaw),
}

impl AxiomId {
    /// Every axiom, in report order.
    pub fn all() -> Vec<AxiomId> {
        let mut out = Self::theory_axioms();
        out.extend(
            [
                OracleCheck::Product,
                OracleCheck::ProperPushforward,
                OracleCheck::SmoothPushforward,
                OracleCheck::SmoothPullback,
                OracleCheck::ProperPullback,
                OracleCheck::Chern,
                OracleCheck::Whitney,
                OracleCheck::Tensor,
                OracleCheck::Cycles,
            ]
            .map(AxiomId::Oracle),
        );
        for prod in [VbProduct::Whitney, VbProduct::Tensor] {
            out.extend(Law::ALL.map(|l| AxiomId::Vector(prod, VbLaw::Law(l))));
            out.push(AxiomId::Vector(prod, VbLaw::Bilinear));
            out.push(AxiomId::Vector(prod, VbLaw::Bigrading));
        }
        out.extend([ForgetLaw::Product, ForgetLaw::Pushforward, ForgetLaw::Chern].map(AxiomId::Forget));
        out
    }

    /// The axioms that make sense in an arbitrary theory: the theory axioms
    /// and the laws of the universal transformation into it.
    pub fn theory_axioms() -> Vec<AxiomId> {
        let mut out: Vec<AxiomId> = Law::ALL.map(|l| AxiomId::Theory(TheoryAxiom::Law(l))).to_vec();
        out.extend(
            [
                TheoryAxiom::Pppu,
                TheoryAxiom::Ppu,
                TheoryAxiom::Ch1,
                TheoryAxiom::Ch2,
                TheoryAxiom::Ch3,
                TheoryAxiom::Ch4,
                TheoryAxiom::Ch5,
                TheoryAxiom::Uc,
                TheoryAxiom::Psrel,
            ]
            .map(AxiomId::Theory),
        );
        out.extend(
            [
                GammaLaw::Unit,
                GammaLaw::Product,
                GammaLaw::Pushforward,
                GammaLaw::Pullback,
                GammaLaw::Chern,
            ]
            .map(AxiomId::Gamma),
        );
        out
    }

    pub fn is_theory_axiom(self) -> bool {
        matches!(self, AxiomId::Theory(_) | AxiomId::Gamma(_))
    }

    /// Position in [`AxiomId::all`], used to separate random streams.
    pub fn ordinal(self) -> u64 {
        Self::all().iter().position(|a| *a == self).expect("listed") as u64
    }

    pub fn name(self) -> String {
        match self {
            AxiomId::Theory(TheoryAxiom::Law(l)) => l.name().to_owned(),
            AxiomId::Theory(a) => match a {
                TheoryAxiom::Pppu => "PPPU",
                TheoryAxiom::Ppu => "PPU",
                TheoryAxiom::Ch1 => "CH1",
                TheoryAxiom::Ch2 => "CH2",
                TheoryAxiom::Ch3 => "CH3",
                TheoryAxiom::Ch4 => "CH4",
                TheoryAxiom::Ch5 => "CH5",
                TheoryAxiom::Uc => "UC",
                TheoryAxiom::Psrel => "PSREL",
                TheoryAxiom::Law(_) => unreachable!(),
            }
            .to_owned(),
            AxiomId::Gamma(g) => format!(
                "GT-{}",
                match g {
                    GammaLaw::Unit => "UNIT",
                    GammaLaw::Product => "PRODUCT",
                    GammaLaw::Pushforward => "PUSHFORWARD",
                    GammaLaw::Pullback => "PULLBACK",
                    GammaLaw::Chern => "CHERN",
                }
            ),
            AxiomId::Oracle(o) => format!(
                "ORACLE-{}",
                match o {
                    OracleCheck::Product => "PRODUCT",
                    OracleCheck::ProperPushforward => "PROPER-PUSHFORWARD",
                    OracleCheck::SmoothPushforward => "SMOOTH-PUSHFORWARD",
                    OracleCheck::SmoothPullback => "SMOOTH-PULLBACK",
                    OracleCheck::ProperPullback => "PROPER-PULLBACK",
                    OracleCheck::Chern => "CHERN",
                    OracleCheck::Whitney => "WHITNEY",
                    OracleCheck::Tensor => "TENSOR",
                    OracleCheck::Cycles => "CYCLES",
                }
            ),
            AxiomId::Vector(p, l) => format!(
                "VB-{}-{}",
                match p {
                    VbProduct::Whitney => "SUM",
                    VbProduct::Tensor => "TENSOR",
                },
                match l {
                    VbLaw::Law(l) => l.name(),
                    VbLaw::Bilinear => "BILINEAR",
                    VbLaw::Bigrading => "BIGRADING",
                }
            ),
            AxiomId::Forget(f) => format!(
                "FORGET-{}",
                match f {
                    ForgetLaw::Product => "PRODUCT",
                    ForgetLaw::Pushforward => "PUSHFORWARD",
                    ForgetLaw::Chern => "CHERN",
                }
            ),
        }
    }

    /// All axiom names, in report order.
    pub fn names() -> Vec<String> {
        Self::all().into_iter().map(AxiomId::name).collect()
    }
}

impl fmt::Display for AxiomId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for AxiomId {
    type Err = Error;

    /// Exact match first, then a case-insensitive match with `p` accepted for `'`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let all = Self::all();
        if let Some(a) = all.iter().find(|a| a.name() == s) {
            return Ok(*a);
        }
        let norm = |t: &str| t.to_ascii_uppercase().replace('\'', "P");
        let want = norm(s);
        all.into_iter()
            .find(|a| norm(&a.name()) == want)
            .ok_or_else(|| Error::UnknownAxiom(s.to_owned()))
    }
}
