//! Closed-form Turán bounds.
//!
//! Every formula bounds one [`Quantity`] from above or below. Formulas with
//! an inner Turán term take it as a [`BaseEstimate`]: an exact searched
//! value, a user value, or another formula (which must bound the inner
//! quantity in the same direction).
//!
//! Values are computed in double precision, and additionally as exact
//! rationals whenever every ingredient is rational: `n^{1+1/k}` is exact
//! when `n` is a perfect `k`-th power.

mod formula;
mod table;

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul};

pub use formula::{BoundFormula, FormulaId, ParameterKind};
pub use table::{bound_table, default_bases, CompositionPolicy, TableRow};

use crate::{Error, Result};

/// An extremal quantity a formula (or a search) can speak about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Quantity {
    /// `ex(n, C_len)`.
    ExCycle { n: usize, len: usize },
    /// `ex(m, n, C_len)`.
    ExBipartiteCycle { m: usize, n: usize, len: usize },
    /// `ex(m, n, 𝒞_len)`: bipartite, no cycle of length at most `len`.
    ExBipartiteGirth { m: usize, n: usize, len: usize },
    /// `t_len(n)`: most triangles in a `C_len`-free graph.
    Triangles { n: usize, len: usize },
    /// `ex₃(n, C⁽³⁾_len)`.
    ExBerge { n: usize, len: usize },
    /// `ex₃^lin(n, C⁽³⁾_len)`.
    ExLinearBerge { n: usize, len: usize },
    /// `ex(n, P_order)`.
    ExPath { n: usize, order: usize },
    /// `ex(n, Θ_{≥order})`.
    ExTheta { n: usize, order: usize },
    /// Most pentagons in a triangle-free graph.
    Pentagons { n: usize },
}

impl Quantity {
    /// Host size at which a formula for this quantity is evaluated.
    pub fn size(&self) -> usize {
        match *self {
            Quantity::ExBipartiteCycle { n, .. } | Quantity::ExBipartiteGirth { n, .. } => n,
            Quantity::ExCycle { n, .. }
            | Quantity::Triangles { n, .. }
            | Quantity::ExBerge { n, .. }
            | Quantity::ExLinearBerge { n, .. }
            | Quantity::ExPath { n, .. }
            | Quantity::ExTheta { n, .. }
            | Quantity::Pentagons { n } => n,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Quantity::ExCycle { n, len } => write!(f, "ex({n}, C{len})"),
            Quantity::ExBipartiteCycle { m, n, len } => write!(f, "ex({m}, {n}, C{len})"),
            Quantity::ExBipartiteGirth { m, n, len } => write!(f, "ex({m}, {n}, C≤{len})"),
            Quantity::Triangles { n, len } => write!(f, "t{len}({n})"),
            Quantity::ExBerge { n, len } => write!(f, "ex3({n}, Berge C{len})"),
            Quantity::ExLinearBerge { n, len } => write!(f, "ex3lin({n}, Berge C{len})"),
            Quantity::ExPath { n, order } => write!(f, "ex({n}, P{order})"),
            Quantity::ExTheta { n, order } => write!(f, "ex({n}, Θ≥{order})"),
            Quantity::Pentagons { n } => write!(f, "N({n}, C3; C5)"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
}

/// Where an inner term's value comes from.
#[derive(Clone, Debug, PartialEq)]
pub enum BaseSource {
    /// Another formula evaluated at the inner size, with its own bases.
    Formula { formula: BoundFormula, bases: Vec<BaseEstimate> },
    /// An exact extremal value (e.g. from an exhausted search).
    Exact(u64),
    /// A value supplied by the caller.
    User(f64),
}

/// Value provider for one inner term.
#[derive(Clone, Debug, PartialEq)]
pub struct BaseEstimate {
    pub quantity: Quantity,
    pub source: BaseSource,
}

impl BaseEstimate {
    pub fn exact(quantity: Quantity, value: u64) -> Self {
        BaseEstimate { quantity, source: BaseSource::Exact(value) }
    }

    pub fn user(quantity: Quantity, value: f64) -> Self {
        BaseEstimate { quantity, source: BaseSource::User(value) }
    }

    pub fn formula(quantity: Quantity, formula: BoundFormula, bases: Vec<BaseEstimate>) -> Self {
        BaseEstimate { quantity, source: BaseSource::Formula { formula, bases } }
    }
}

/// Result of evaluating a formula.
#[derive(Clone, Debug, PartialEq)]
pub struct Evaluation {
    pub formula: BoundFormula,
    pub n: usize,
    pub target: Quantity,
    pub direction: Direction,
    pub value: f64,
    /// Exact rational value when every ingredient is rational.
    pub exact: Option<Ratio<i128>>,
    /// The formula drops an unspecified lower-order term.
    pub asymptotic: bool,
    pub notes: Vec<String>,
}

impl Evaluation {
    /// `⌊value⌋`, from the exact value when available.
    pub fn floor(&self) -> i128 {
        match self.exact {
            Some(r) => r.floor().to_integer(),
            None => libm::floor(self.value) as i128,
        }
    }
}

impl BoundFormula {
    /// The quantity bounded at host size `n`, and the direction.
    pub fn target(&self, n: usize) -> (Quantity, Direction) {
        let k = self.k();
        use Direction::*;
        match self.id {
            FormulaId::BondySimonovits | FormulaId::Pikhurko1 | FormulaId::BukhJiang2 => {
                (Quantity::ExCycle { n, len: 2 * k }, Upper)
            }
            FormulaId::Kst3 => (Quantity::ExBipartiteCycle { m: n, n, len: 4 }, Upper),
            FormulaId::GyoriLiLower4 => (Quantity::Triangles { n, len: 2 * k + 1 }, Lower),
            FormulaId::GyoriLiUpper4 | FormulaId::Thm11Odd5 | FormulaId::AlonShikhelman => {
                (Quantity::Triangles { n, len: 2 * k + 1 }, Upper)
            }
            FormulaId::Thm11Even6 => (Quantity::Triangles { n, len: 2 * k }, Upper),
            FormulaId::GyoriLemons7 | FormulaId::Thm21Odd9 | FormulaId::CombinedOdd => {
                (Quantity::ExBerge { n, len: 2 * k + 1 }, Upper)
            }
            FormulaId::Thm21Even10 => (Quantity::ExBerge { n, len: 2 * k }, Upper),
            FormulaId::Thm22Linear11 => (Quantity::ExLinearBerge { n, len: 2 * k + 1 }, Upper),
            FormulaId::ErdosGallai12 => (Quantity::ExPath { n, order: k }, Upper),
            FormulaId::Theta15 => (Quantity::ExTheta { n, order: k }, Upper),
            FormulaId::ErdosPentagon => (Quantity::Pentagons { n }, Upper),
        }
    }

    /// Inner terms needed at host size `n`, in formula order.
    pub fn inner_terms(&self, n: usize) -> Vec<Quantity> {
        let k = self.k();
        match self.id {
            FormulaId::GyoriLiLower4 => {
                let m = n / (k + 1);
                vec![Quantity::ExBipartiteGirth { m, n: m, len: 2 * k }]
            }
            FormulaId::GyoriLiUpper4 | FormulaId::Thm11Even6 => vec![Quantity::ExCycle { n, len: 2 * k }],
            FormulaId::Thm11Odd5 => {
                let c = n.div_ceil(3);
                vec![Quantity::ExBipartiteCycle { m: c, n: c, len: 2 * k }]
            }
            FormulaId::AlonShikhelman => vec![Quantity::ExCycle { n: n.div_ceil(2), len: 2 * k }],
            FormulaId::Thm21Odd9 => vec![
                Quantity::Triangles { n, len: 2 * k + 1 },
                Quantity::ExCycle { n, len: 2 * k },
                Quantity::ExLinearBerge { n, len: 2 * k + 1 },
            ],
            FormulaId::Thm21Even10 => vec![Quantity::Triangles { n, len: 2 * k }, Quantity::ExCycle { n, len: 2 * k }],
            _ => Vec::new(),
        }
    }
}

/// Real number with an optional exact rational shadow.
#[derive(Clone, Copy, Debug)]
struct Num {
    approx: f64,
    exact: Option<Ratio<i128>>,
}

impl Num {
    fn int(v: i128) -> Self {
        Num { approx: v as f64, exact: Some(Ratio::from_integer(v)) }
    }

    fn frac(a: i128, b: i128) -> Self {
        let r = Ratio::new(a, b);
        Num { approx: a as f64 / b as f64, exact: Some(r) }
    }

    fn real(x: f64) -> Self {
        Num { approx: x, exact: None }
    }

    fn user(x: f64) -> Self {
        if libm::trunc(x) == x && libm::fabs(x) < 1e15 {
            Num::int(x as i128)
        } else {
            Num::real(x)
        }
    }

    /// `n^{1 + 1/k}`, exact when `n` is a perfect `k`-th power.
    fn power(n: usize, k: usize) -> Self {
        let approx = libm::pow(n as f64, 1.0 + 1.0 / k as f64);
        let guess = libm::round(libm::pow(n as f64, 1.0 / k as f64)) as i128;
        let root = (guess.saturating_sub(1)..=guess + 1)
            .find(|&r| r >= 0 && r.checked_pow(k as u32) == Some(n as i128));
        match root {
            Some(r) => Num { approx, exact: Some(Ratio::from_integer(n as i128 * r)) },
            None => Num::real(approx),
        }
    }

    fn add(self, o: Num) -> Num {
        Num {
            approx: self.approx + o.approx,
            exact: self.exact.zip(o.exact).and_then(|(a, b)| a.checked_add(&b)),
        }
    }

    fn mul(self, o: Num) -> Num {
        Num {
            approx: self.approx * o.approx,
            exact: self.exact.zip(o.exact).and_then(|(a, b)| a.checked_mul(&b)),
        }
    }

    fn from_evaluation(e: &Evaluation) -> Num {
        Num { approx: e.value, exact: e.exact }
    }
}

/// Evaluates `formula` at host size `n`.
///
/// `bases` must supply exactly the formula's inner terms (none for closed
/// formulas).
pub fn evaluate(formula: &BoundFormula, n: usize, bases: &[BaseEstimate]) -> Result<Evaluation> {
    formula.validate()?;
    if n == 0 {
        return Err(Error::ParameterOutOfRange { name: "n", value: 0, expected: "at least 1" });
    }
    let (target, direction) = formula.target(n);
    let terms = formula.inner_terms(n);
    if terms.is_empty() && !bases.is_empty() {
        return Err(Error::BaseMismatch(format!("{formula} has no inner term")));
    }
    if let Some(stray) = bases.iter().find(|b| !terms.contains(&b.quantity)) {
        return Err(Error::BaseMismatch(format!("{formula} does not use {}", stray.quantity)));
    }
    let mut notes = Vec::new();
    let mut inner = Vec::with_capacity(terms.len());
    for q in &terms {
        let base = bases.iter().find(|b| b.quantity == *q).ok_or(Error::MissingBase(formula.id.name()))?;
        inner.push(resolve(base, direction, &mut notes)?);
    }

    let k = formula.k() as i128;
    let nn = Num::int(n as i128);
    let int = Num::int;
    let mut asymptotic = false;
    let value = match formula.id {
        FormulaId::BondySimonovits => int(100 * k).mul(Num::power(n, k as usize)),
        FormulaId::Pikhurko1 => int(k - 1).mul(Num::power(n, k as usize)).add(int(16 * (k - 1)).mul(nn)),
        FormulaId::BukhJiang2 => {
            notes.push("log taken as the natural logarithm".into());
            let c = 80.0 * libm::sqrt(k as f64 * libm::log(k as f64));
            Num::real(c).mul(Num::power(n, k as usize)).add(int(10 * k * k).mul(nn))
        }
        FormulaId::Kst3 => Num::power(n, 2).add(int(2).mul(nn)),
        FormulaId::GyoriLiLower4 => int(k * (k - 1) / 2).mul(inner[0]),
        FormulaId::GyoriLiUpper4 => Num::frac((2 * k - 1) * (16 * k - 2), 3).mul(inner[0]),
        FormulaId::Thm11Odd5 => int(9 * (k - 1)).mul(inner[0]),
        FormulaId::Thm11Even6 => Num::frac(2 * k - 3, 3).mul(inner[0]),
        FormulaId::GyoriLemons7 => {
            let k4 = k.pow(4);
            int(4 * k4).mul(Num::power(n, k as usize)).add(int(15 * k4 + 10 * k * k).mul(nn))
        }
        FormulaId::Thm21Odd9 => inner[0].add(int(4).mul(inner[1])).add(int(12).mul(inner[2])),
        FormulaId::Thm21Even10 => inner[0].add(inner[1]),
        FormulaId::Thm22Linear11 => int(2 * k).mul(Num::power(n, k as usize)).add(int(9 * k).mul(nn)),
        FormulaId::ErdosGallai12 => Num::frac(k - 2, 2).mul(nn),
        FormulaId::Theta15 => int(k - 2).mul(nn),
        FormulaId::ErdosPentagon => Num::frac((n as i128).pow(5), 3125),
        FormulaId::AlonShikhelman => Num::frac(16 * (k - 1), 3).mul(inner[0]),
        FormulaId::CombinedOdd => {
            asymptotic = true;
            notes.push("asymptotic: the O(k² n) term is unspecified and omitted".into());
            int(9 * k * k + 10 * k + 5).mul(Num::power(n, k as usize))
        }
    };
    let value = Num {
        approx: value.exact.map(|r| *r.numer() as f64 / *r.denom() as f64).unwrap_or(value.approx),
        exact: value.exact,
    };
    Ok(Evaluation { formula: *formula, n, target, direction, value: value.approx, exact: value.exact, asymptotic, notes })
}

fn resolve(base: &BaseEstimate, direction: Direction, notes: &mut Vec<String>) -> Result<Num> {
    match &base.source {
        BaseSource::Exact(v) => {
            notes.push(format!("{} = {} (exact)", base.quantity, v));
            Ok(Num::int(*v as i128))
        }
        BaseSource::User(x) => {
            notes.push(format!("{} = {} (user)", base.quantity, x));
            Ok(Num::user(*x))
        }
        BaseSource::Formula { formula, bases } => {
            let size = base.quantity.size();
            let (q, d) = formula.target(size);
            if q != base.quantity {
                return Err(Error::BaseMismatch(format!("{formula} bounds {q}, not {}", base.quantity)));
            }
            if d != direction {
                return Err(Error::BaseMismatch(format!(
                    "{formula} bounds {q} from the wrong side for this formula"
                )));
            }
            let e = evaluate(formula, size, bases)?;
            notes.extend(e.notes.iter().cloned());
            notes.push(format!("{} ≤ {} via {}", base.quantity, fmt_value(&e), formula));
            if e.asymptotic {
                return Err(Error::BaseMismatch(format!("{formula} is asymptotic and cannot serve as an inner bound")));
            }
            Ok(Num::from_evaluation(&e))
        }
    }
}

/// Short rendering of an evaluation's value.
pub fn fmt_value(e: &Evaluation) -> String {
    match e.exact {
        Some(r) if r.is_integer() => format!("{}", r.to_integer()),
        Some(r) => format!("{}/{}", r.numer(), r.denom()),
        None => format!("{:.6}", e.value),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(id: FormulaId, p: Option<usize>) -> BoundFormula {
        BoundFormula::new(id, p).unwrap()
    }

    fn exact(e: &Evaluation) -> Ratio<i128> {
        e.exact.expect("exact value")
    }

    #[test]
    fn golden_values() {
        let e = evaluate(&f(FormulaId::Pikhurko1, Some(2)), 16, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(320));
        let e = evaluate(&f(FormulaId::Kst3, None), 9, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(45));
        let e = evaluate(&f(FormulaId::ErdosGallai12, Some(4)), 10, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(10));
        let e = evaluate(&f(FormulaId::Theta15, Some(6)), 10, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(40));
        let e = evaluate(&f(FormulaId::ErdosPentagon, None), 10, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(32));
    }

    #[test]
    fn irrational_powers_are_inexact() {
        let e = evaluate(&f(FormulaId::Pikhurko1, Some(2)), 10, &[]).unwrap();
        assert!(e.exact.is_none());
        let want = 10f64.powf(1.5) + 160.0;
        assert!((e.value - want).abs() <= 1e-9 * want);
        assert_eq!(e.floor(), 191);
        let e = evaluate(&f(FormulaId::BondySimonovits, Some(3)), 8, &[]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(300 * 16));
    }

    #[test]
    fn natural_log_in_bukh_jiang() {
        let e = evaluate(&f(FormulaId::BukhJiang2, Some(2)), 4, &[]).unwrap();
        let want = 80.0 * (2.0 * 2f64.ln()).sqrt() * 8.0 + 160.0;
        assert!((e.value - want).abs() <= 1e-9 * want);
        assert!(e.notes.iter().any(|n| n.contains("natural")));
    }

    #[test]
    fn inner_terms_follow_the_rounding_marks() {
        let odd5 = f(FormulaId::Thm11Odd5, Some(2));
        assert_eq!(odd5.inner_terms(7), vec![Quantity::ExBipartiteCycle { m: 3, n: 3, len: 4 }]);
        let lower = f(FormulaId::GyoriLiLower4, Some(2));
        assert_eq!(lower.inner_terms(8), vec![Quantity::ExBipartiteGirth { m: 2, n: 2, len: 4 }]);
        let alon = f(FormulaId::AlonShikhelman, Some(2));
        assert_eq!(alon.inner_terms(7), vec![Quantity::ExCycle { n: 4, len: 4 }]);
    }

    #[test]
    fn composition_with_exact_and_formula_bases() {
        let odd5 = f(FormulaId::Thm11Odd5, Some(2));
        let base = BaseEstimate::exact(Quantity::ExBipartiteCycle { m: 3, n: 3, len: 4 }, 6);
        let e = evaluate(&odd5, 9, &[base]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(54));

        let via_kst = BaseEstimate::formula(
            Quantity::ExBipartiteCycle { m: 3, n: 3, len: 4 },
            f(FormulaId::Kst3, None),
            vec![],
        );
        let e = evaluate(&odd5, 9, &[via_kst]).unwrap();
        let want = 9.0 * (27f64.sqrt() + 6.0);
        assert!((e.value - want).abs() <= 1e-9 * want);

        let even6 = f(FormulaId::Thm11Even6, Some(2));
        let e = evaluate(&even6, 5, &[BaseEstimate::exact(Quantity::ExCycle { n: 5, len: 4 }, 6)]).unwrap();
        assert_eq!(exact(&e), Ratio::from_integer(2));
    }

    #[test]
    fn base_errors() {
        let odd5 = f(FormulaId::Thm11Odd5, Some(2));
        assert_eq!(evaluate(&odd5, 9, &[]), Err(Error::MissingBase("thm11-odd-5")));
        let wrong = BaseEstimate::exact(Quantity::ExCycle { n: 9, len: 4 }, 6);
        assert!(matches!(evaluate(&odd5, 9, core::slice::from_ref(&wrong)), Err(Error::BaseMismatch(_))));
        assert!(matches!(
            evaluate(&f(FormulaId::Kst3, None), 9, &[wrong]),
            Err(Error::BaseMismatch(_))
        ));
        // an upper-bound formula cannot feed a lower bound
        let lower = f(FormulaId::GyoriLiLower4, Some(2));
        let q = Quantity::ExBipartiteGirth { m: 3, n: 3, len: 4 };
        let bad = BaseEstimate::formula(q, f(FormulaId::Kst3, None), vec![]);
        assert!(matches!(evaluate(&lower, 9, &[bad]), Err(Error::BaseMismatch(_))));
        assert!(BoundFormula::new(FormulaId::Theta15, Some(3)).is_err());
        assert!(BoundFormula::new(FormulaId::Thm11Odd5, Some(1)).is_err());
        assert!(BoundFormula::new(FormulaId::Kst3, Some(2)).is_err());
    }

    #[test]
    fn combined_bound_is_flagged() {
        let e = evaluate(&f(FormulaId::CombinedOdd, Some(2)), 16, &[]).unwrap();
        assert!(e.asymptotic);
        assert_eq!(exact(&e), Ratio::from_integer(61 * 64));
    }

    #[test]
    fn monotone_in_n() {
        for id in [FormulaId::Pikhurko1, FormulaId::BukhJiang2, FormulaId::GyoriLemons7, FormulaId::Thm22Linear11, FormulaId::CombinedOdd] {
            for k in 2..5 {
                let form = f(id, Some(k));
                let vals: Vec<f64> = (1..40).map(|n| evaluate(&form, n, &[]).unwrap().value).collect();
                assert!(vals.windows(2).all(|w| w[0] <= w[1]), "{id} k={k}");
            }
        }
    }
}
