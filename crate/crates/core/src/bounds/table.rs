use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use super::{evaluate, BaseEstimate, BoundFormula, Direction, FormulaId, Quantity};

/// How inner terms are filled in when building a table.
#[derive(Clone, Debug, Default)]
pub struct CompositionPolicy {
    /// Known exact values, preferred over formulas.
    pub exact: BTreeMap<Quantity, u64>,
    /// Fall back to the default upper-bound formula for an inner term.
    pub use_formulas: bool,
}

impl CompositionPolicy {
    pub fn formulas() -> Self {
        CompositionPolicy { exact: BTreeMap::new(), use_formulas: true }
    }
}

/// One row of a bound table.
#[derive(Clone, Debug, PartialEq)]
pub struct TableRow {
    pub formula: BoundFormula,
    pub n: usize,
    pub value: f64,
    pub floor: i128,
    pub exact: bool,
    pub asymptotic: bool,
    /// Inner-term provenance and caveats, `; `-separated. For rows that
    /// could not be evaluated, the reason.
    pub note: String,
    pub evaluated: bool,
}

const MAX_DEPTH: usize = 4;

fn default_formula(q: Quantity) -> Option<BoundFormula> {
    let pick = |id, k: usize| BoundFormula::new(id, Some(k)).ok();
    match q {
        Quantity::ExCycle { len, .. } if len % 2 == 0 => pick(FormulaId::Pikhurko1, len / 2),
        Quantity::ExBipartiteCycle { m, n, len: 4 } if m == n => BoundFormula::new(FormulaId::Kst3, None).ok(),
        Quantity::Triangles { len, .. } if len % 2 == 1 => pick(FormulaId::Thm11Odd5, len / 2),
        Quantity::Triangles { len, .. } => pick(FormulaId::Thm11Even6, len / 2),
        Quantity::ExLinearBerge { len, .. } if len % 2 == 1 => pick(FormulaId::Thm22Linear11, len / 2),
        _ => None,
    }
}

fn base_for(q: Quantity, direction: Direction, policy: &CompositionPolicy, depth: usize) -> Option<BaseEstimate> {
    if let Some(&v) = policy.exact.get(&q) {
        return Some(BaseEstimate::exact(q, v));
    }
    if !policy.use_formulas || direction != Direction::Upper || depth >= MAX_DEPTH {
        return None;
    }
    let f = default_formula(q)?;
    let bases = default_bases_at(&f, q.size(), policy, depth + 1)?;
    Some(BaseEstimate::formula(q, f, bases))
}

fn default_bases_at(f: &BoundFormula, n: usize, policy: &CompositionPolicy, depth: usize) -> Option<Vec<BaseEstimate>> {
    let (_, direction) = f.target(n);
    f.inner_terms(n).into_iter().map(|q| base_for(q, direction, policy, depth)).collect()
}

/// Bases for every inner term of `f` at size `n` under `policy`, or `None`
/// if some term has no source.
pub fn default_bases(f: &BoundFormula, n: usize, policy: &CompositionPolicy) -> Option<Vec<BaseEstimate>> {
    default_bases_at(f, n, policy, 0)
}

/// Evaluates every formula in `formulas` for every parameter in `params`
/// (once, for parameter-free formulas) and every `n` in `ns`.
///
/// Parameters a formula does not accept are skipped. Rows whose inner terms
/// cannot be filled are kept with `evaluated == false`.
pub fn bound_table(formulas: &[FormulaId], params: &[usize], ns: &[usize], policy: &CompositionPolicy) -> Vec<TableRow> {
    let mut rows = Vec::new();
    for &id in formulas {
        let fs: Vec<BoundFormula> = if id.parameter().is_none() {
            BoundFormula::new(id, None).into_iter().collect()
        } else {
            params.iter().filter_map(|&p| BoundFormula::new(id, Some(p)).ok()).collect()
        };
        for f in fs {
            for &n in ns {
                rows.push(row(&f, n, policy));
            }
        }
    }
    rows
}

fn row(f: &BoundFormula, n: usize, policy: &CompositionPolicy) -> TableRow {
    let blank = |note: String| TableRow {
        formula: *f,
        n,
        value: f64::NAN,
        floor: 0,
        exact: false,
        asymptotic: false,
        note,
        evaluated: false,
    };
    let Some(bases) = default_bases(f, n, policy) else {
        let missing: Vec<String> = f
            .inner_terms(n)
            .into_iter()
            .filter(|&q| base_for(q, f.target(n).1, policy, 0).is_none())
            .map(|q| alloc::format!("{q}"))
            .collect();
        return blank(alloc::format!("no value for {}", missing.join(", ")));
    };
    match evaluate(f, n, &bases) {
        Ok(e) => TableRow {
            formula: *f,
            n,
            value: e.value,
            floor: e.floor(),
            exact: e.exact.is_some(),
            asymptotic: e.asymptotic,
            note: e.notes.join("; "),
            evaluated: true,
        },
        Err(err) => blank(alloc::format!("{err}")),
    }
}

impl TableRow {
    /// `value` rendered exactly when possible.
    pub fn display_value(&self) -> String {
        if !self.evaluated {
            return "-".into();
        }
        if self.exact && libm::trunc(self.value) == self.value {
            return alloc::format!("{}", self.value as i128);
        }
        alloc::format!("{:.6}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() <= 1e-9 * b.abs().max(1.0)
    }

    #[test]
    fn golden_rows() {
        let policy = CompositionPolicy::formulas();
        let t = bound_table(&[FormulaId::Pikhurko1], &[2], &[16], &policy);
        assert!(close(t[0].value, 320.0) && t[0].exact);
        let t = bound_table(&[FormulaId::Kst3], &[2, 3], &[9], &policy);
        assert_eq!(t.len(), 1);
        assert!(close(t[0].value, 45.0));
        let t = bound_table(&[FormulaId::ErdosGallai12], &[4], &[10], &policy);
        assert!(close(t[0].value, 10.0));
        let t = bound_table(&[FormulaId::Theta15], &[3, 6], &[10], &policy);
        assert_eq!(t.len(), 1);
        assert!(close(t[0].value, 40.0));
        let t = bound_table(&[FormulaId::ErdosPentagon], &[], &[10], &policy);
        assert!(close(t[0].value, 32.0));
    }

    #[test]
    fn composed_rows() {
        let policy = CompositionPolicy::formulas();
        let t = bound_table(&[FormulaId::Thm21Odd9], &[2], &[16], &policy);
        assert!(t[0].evaluated, "{}", t[0].note);
        // t5 ≤ 9·ex(6,6,C4) bound, ex(16,C4) ≤ 320, lin ≤ 4·64 + 18·16
        let kst6 = 6f64.powf(1.5) + 12.0;
        let want = 9.0 * kst6 + 4.0 * 320.0 + 12.0 * (4.0 * 64.0 + 18.0 * 16.0);
        assert!(close(t[0].value, want), "{} vs {}", t[0].value, want);
        assert!(t[0].note.contains("kst-3"));

        let none = CompositionPolicy::default();
        let t = bound_table(&[FormulaId::Thm21Odd9], &[2], &[16], &none);
        assert!(!t[0].evaluated);
        let lower = bound_table(&[FormulaId::GyoriLiLower4], &[2], &[9], &policy);
        assert!(!lower[0].evaluated);
    }

    #[test]
    fn exact_values_take_precedence() {
        let mut policy = CompositionPolicy::formulas();
        policy.exact.insert(Quantity::ExCycle { n: 5, len: 4 }, 6);
        let t = bound_table(&[FormulaId::Thm11Even6], &[2], &[5], &policy);
        assert!(close(t[0].value, 2.0) && t[0].exact);
        policy.exact.insert(Quantity::ExBipartiteGirth { m: 3, n: 3, len: 4 }, 6);
        let t = bound_table(&[FormulaId::GyoriLiLower4], &[2], &[9, 12], &policy);
        assert!(t[0].evaluated && close(t[0].value, 6.0));
        assert!(!t[1].evaluated);
    }
}
