use alloc::format;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Identifier of a closed-form bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormulaId {
    /// `ex(n, C_2k) ≤ 100 k n^{1+1/k}`.
    BondySimonovits,
    /// `ex(n, C_2k) ≤ (k−1) n^{1+1/k} + 16 (k−1) n`.
    Pikhurko1,
    /// `ex(n, C_2k) ≤ 80 √(k log k) n^{1+1/k} + 10 k² n`.
    BukhJiang2,
    /// `ex(n, n, C_4) ≤ n^{3/2} + 2n`.
    Kst3,
    /// `C(k,2) ex(⌊n/(k+1)⌋, ⌊n/(k+1)⌋, 𝒞_2k) ≤ t_{2k+1}(n)`.
    GyoriLiLower4,
    /// `t_{2k+1}(n) ≤ (2k−1)(16k−2)/3 · ex(n, C_2k)`.
    GyoriLiUpper4,
    /// `t_{2k+1}(n) ≤ 9 (k−1) ex(⌈n/3⌉, ⌈n/3⌉, C_2k)`.
    Thm11Odd5,
    /// `t_2k(n) ≤ (2k−3)/3 · ex(n, C_2k)`.
    Thm11Even6,
    /// `ex₃(n, C⁽³⁾_{2k+1}) < 4k⁴ n^{1+1/k} + 15 k⁴ n + 10 k² n`.
    GyoriLemons7,
    /// `ex₃(n, C⁽³⁾_{2k+1}) ≤ t_{2k+1}(n) + 4 ex(n, C_2k) + 12 ex₃^lin(n, C⁽³⁾_{2k+1})`.
    Thm21Odd9,
    /// `ex₃(n, C⁽³⁾_2k) ≤ t_2k(n) + ex(n, C_2k)`.
    Thm21Even10,
    /// `ex₃^lin(n, C⁽³⁾_{2k+1}) ≤ 2k n^{1+1/k} + 9kn`.
    Thm22Linear11,
    /// `ex(n, P_k) ≤ (k−2)/2 · n`.
    ErdosGallai12,
    /// `ex(n, Θ_{≥ℓ}) ≤ (ℓ−2) n`.
    Theta15,
    /// At most `(n/5)^5` pentagons in a triangle-free graph.
    ErdosPentagon,
    /// `t_{2k+1}(n) ≤ (16/3)(k−1) ex(⌈n/2⌉, C_2k)`.
    AlonShikhelman,
    /// `ex₃(n, C⁽³⁾_{2k+1}) ≤ (9k² + 10k + 5) n^{1+1/k} + O(k² n)`.
    CombinedOdd,
}

impl FormulaId {
    pub const ALL: [FormulaId; 17] = [
        FormulaId::BondySimonovits,
        FormulaId::Pikhurko1,
        FormulaId::BukhJiang2,
        FormulaId::Kst3,
        FormulaId::GyoriLiLower4,
        FormulaId::GyoriLiUpper4,
        FormulaId::Thm11Odd5,
        FormulaId::Thm11Even6,
        FormulaId::GyoriLemons7,
        FormulaId::Thm21Odd9,
        FormulaId::Thm21Even10,
        FormulaId::Thm22Linear11,
        FormulaId::ErdosGallai12,
        FormulaId::Theta15,
        FormulaId::ErdosPentagon,
        FormulaId::AlonShikhelman,
        FormulaId::CombinedOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FormulaId::BondySimonovits => "bondy-simonovits",
            FormulaId::Pikhurko1 => "pikhurko-1",
            FormulaId::BukhJiang2 => "bukh-jiang-2",
            FormulaId::Kst3 => "kst-3",
            FormulaId::GyoriLiLower4 => "gyori-li-lower-4",
            FormulaId::GyoriLiUpper4 => "gyori-li-upper-4",
            FormulaId::Thm11Odd5 => "thm11-odd-5",
            FormulaId::Thm11Even6 => "thm11-even-6",
            FormulaId::GyoriLemons7 => "gyori-lemons-7",
            FormulaId::Thm21Odd9 => "thm21-odd-9",
            FormulaId::Thm21Even10 => "thm21-even-10",
            FormulaId::Thm22Linear11 => "thm22-linear-11",
            FormulaId::ErdosGallai12 => "erdos-gallai-12",
            FormulaId::Theta15 => "theta-15",
            FormulaId::ErdosPentagon => "erdos-pentagon",
            FormulaId::AlonShikhelman => "alon-shikhelman",
            FormulaId::CombinedOdd => "combined-odd",
        }
    }

    /// What the parameter means, if the formula has one.
    pub fn parameter(self) -> Option<ParameterKind> {
        match self {
            FormulaId::Kst3 | FormulaId::ErdosPentagon => None,
            FormulaId::Theta15 => Some(ParameterKind::Order),
            FormulaId::ErdosGallai12 => Some(ParameterKind::PathOrder),
            _ => Some(ParameterKind::HalfLength),
        }
    }

    fn min_parameter(self) -> usize {
        match self {
            FormulaId::Theta15 => 4,
            _ => 2,
        }
    }
}

impl fmt::Display for FormulaId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FormulaId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FormulaId::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::InvalidProblem(format!("unknown formula {s:?}")))
    }
}

/// Meaning of a formula parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterKind {
    /// `k`, with cycles of length `2k` or `2k + 1`.
    HalfLength,
    /// `k` in `P_k`.
    PathOrder,
    /// `ℓ` in `Θ_{≥ℓ}`.
    Order,
}

/// A formula with its parameter fixed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundFormula {
    pub id: FormulaId,
    /// `k` or `ℓ`; `None` for parameter-free formulas.
    pub parameter: Option<usize>,
}

impl BoundFormula {
    pub fn new(id: FormulaId, parameter: Option<usize>) -> Result<Self> {
        let f = BoundFormula { id, parameter };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<()> {
        match (self.id.parameter(), self.parameter) {
            (None, None) => Ok(()),
            (None, Some(_)) => Err(Error::InvalidProblem(format!("{} takes no parameter", self.id))),
            (Some(_), None) => Err(Error::InvalidProblem(format!("{} needs a parameter", self.id))),
            (Some(kind), Some(p)) if p < self.id.min_parameter() => Err(Error::ParameterOutOfRange {
                name: match kind {
                    ParameterKind::Order => "ℓ",
                    _ => "k",
                },
                value: p,
                expected: if self.id == FormulaId::Theta15 { "at least 4" } else { "at least 2" },
            }),
            _ => Ok(()),
        }
    }

    /// The parameter, or 0 when there is none.
    pub(crate) fn k(&self) -> usize {
        self.parameter.unwrap_or(0)
    }
}

impl fmt::Display for BoundFormula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.parameter {
            Some(p) => write!(f, "{}[{}]", self.id, p),
            None => write!(f, "{}", self.id),
        }
    }
}
