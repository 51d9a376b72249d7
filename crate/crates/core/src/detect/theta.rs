use alloc::vec::Vec;
use core::ops::ControlFlow;

use super::cycles::cycles_in;
use crate::graph::Graph;
use crate::set::{VertexSet, WideSet};
use crate::{Error, Result};

/// A cycle together with a chord joining two non-consecutive cycle vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ThetaWitness {
    pub cycle: Vec<usize>,
    pub chord: (usize, usize),
}

impl ThetaWitness {
    /// Order of the theta graph (length of its cycle).
    pub fn order(&self) -> usize {
        self.cycle.len()
    }

    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !super::cycles::is_cycle(g, &self.cycle) {
            return Err(Error::InvalidWitness("theta cycle is not a cycle of the host"));
        }
        let l = self.cycle.len();
        let (a, b) = self.chord;
        let (Some(i), Some(j)) = (
            self.cycle.iter().position(|&v| v == a),
            self.cycle.iter().position(|&v| v == b),
        ) else {
            return Err(Error::InvalidWitness("chord endpoint off the cycle"));
        };
        let gap = i.abs_diff(j);
        if gap <= 1 || gap == l - 1 {
            return Err(Error::InvalidWitness("chord joins consecutive cycle vertices"));
        }
        if !g.has_edge(a, b) {
            return Err(Error::InvalidWitness("chord is not an edge of the host"));
        }
        Ok(())
    }
}

/// A theta graph of order at least `min_order`: cycles are enumerated by
/// increasing length and scanned for a chord.
pub fn find_theta_at_least(g: &Graph, min_order: usize) -> Result<Option<ThetaWitness>> {
    if min_order < 4 {
        return Err(Error::ParameterOutOfRange {
            name: "theta order",
            value: min_order,
            expected: "at least 4",
        });
    }
    Ok(if g.n() <= 64 {
        theta_in(&g.rows::<u64>(), min_order)
    } else {
        theta_in(&g.rows::<WideSet>(), min_order)
    })
}

pub(crate) fn theta_in<S: VertexSet>(rows: &[S], min_order: usize) -> Option<ThetaWitness> {
    let n = rows.len();
    let mut found = None;
    for len in min_order..=n {
        let _ = cycles_in(rows, len, |cycle| match chord_of(rows, cycle) {
            Some(chord) => {
                found = Some(ThetaWitness { cycle: cycle.to_vec(), chord });
                ControlFlow::Break(())
            }
            None => ControlFlow::Continue(()),
        });
        if found.is_some() {
            break;
        }
    }
    found
}

fn chord_of<S: VertexSet>(rows: &[S], cycle: &[usize]) -> Option<(usize, usize)> {
    let l = cycle.len();
    for i in 0..l {
        for j in i + 2..l {
            if i == 0 && j == l - 1 {
                continue;
            }
            if rows[cycle[i]].contains(cycle[j]) {
                return Some((cycle[i], cycle[j]));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn theta_examples() {
        let mut c6 = Graph::cycle(6);
        assert_eq!(find_theta_at_least(&c6, 4).unwrap(), None);
        c6.add_edge(0, 3).unwrap();
        let w = find_theta_at_least(&c6, 6).unwrap().unwrap();
        assert_eq!(w.order(), 6);
        assert_eq!(w.validate(&c6), Ok(()));
        let k4 = Graph::complete(4);
        let w = find_theta_at_least(&k4, 4).unwrap().unwrap();
        assert_eq!(w.validate(&k4), Ok(()));
        assert_eq!(find_theta_at_least(&k4, 5).unwrap(), None);
        assert!(find_theta_at_least(&k4, 3).is_err());
    }

    #[test]
    fn short_chord_found_in_long_cycle() {
        // C6 with chord 0-2 carries Θ6 (the chord spans two cycle edges)
        let mut g = Graph::cycle(6);
        g.add_edge(0, 2).unwrap();
        let w = find_theta_at_least(&g, 6).unwrap().unwrap();
        assert_eq!(w.chord, (0, 2));
        assert!(find_theta_at_least(&g, 7).unwrap().is_none());
    }
}
