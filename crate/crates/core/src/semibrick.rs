//! The linearly oriented path algebra Lambda = n -> n-1 -> ... -> 1: the
//! closed-form Hom/Ext index sets for its interval modules M_ij, semibrick
//! enumeration with the Catalan count, and the semibrick criterion for
//! shifted intervals in the bounded derived category.
//!
//! Indexing convention here is the 0-based one (M_ij, 0 <= i < j <= n,
//! support i < l <= j); `bridge` converts to the 1-based intervals used by
//! the rest of the crate (M_ij corresponds to [i+1, j+1)).

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::quiver_rep::{Interval, ModCtx, TypeAQuiver};

/// Lambda itself: every arrow points from a+1 to a.
pub fn lambda_quiver(n: usize) -> Result<TypeAQuiver> {
    "<".repeat(n.saturating_sub(1)).parse()
}

/// M_ij as a 1-based interval.
pub fn bridge(i: u8, j: u8) -> Result<Interval> {
    Interval::new(i + 1, j + 1)
}

fn check_pair(i: u8, j: u8, n: u8) -> Result<()> {
    if i >= j || j > n {
        return Err(Error::BadInterval(format!("M_{{{i},{j}}} over Lambda_{n}")));
    }
    Ok(())
}

/// The four closed-form index sets attached to M_ij: modules it maps to
/// (h0_plus), modules mapping to it (h0_minus), modules it extends
/// (h1_plus: Ext^1(M_ij, -) != 0) and modules extending it (h1_minus).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HSets {
    pub h0_plus: BTreeSet<(u8, u8)>,
    pub h0_minus: BTreeSet<(u8, u8)>,
    pub h1_plus: BTreeSet<(u8, u8)>,
    pub h1_minus: BTreeSet<(u8, u8)>,
}

pub fn h_sets(i: u8, j: u8, n: u8) -> Result<HSets> {
    check_pair(i, j, n)?;
    let mut out = HSets {
        h0_plus: BTreeSet::new(),
        h0_minus: BTreeSet::new(),
        h1_plus: BTreeSet::new(),
        h1_minus: BTreeSet::new(),
    };
    for s in 0..n {
        for t in s + 1..=n {
            if s >= i && s + 1 <= j && t >= j {
                out.h0_plus.insert((s, t));
            }
            if s <= i && t >= i + 1 && t <= j {
                out.h0_minus.insert((s, t));
            }
            if s + 1 <= i && t >= i && t + 1 <= j {
                out.h1_plus.insert((s, t));
            }
            if s >= i + 1 && s <= j && t >= j + 1 {
                out.h1_minus.insert((s, t));
            }
        }
    }
    Ok(out)
}

// Pairwise predicates; these do not need n because (s,t) is already a valid
// index pair.
fn hom_nonzero(from: (u8, u8), to: (u8, u8)) -> bool {
    let ((i, j), (s, t)) = (from, to);
    s >= i && s + 1 <= j && t >= j
}

fn ext_nonzero(from: (u8, u8), to: (u8, u8)) -> bool {
    let ((i, j), (s, t)) = (from, to);
    s + 1 <= i && t >= i && t + 1 <= j
}

/// Semibrick criterion in mod Lambda: the first coordinates are pairwise
/// distinct, and after sorting by them, every earlier y_a satisfies
/// y_a <= x_b or y_a >= y_b + 1 against every later member (x_b, y_b).
pub fn is_semibrick_linear(items: &BTreeSet<(u8, u8)>) -> bool {
    let sorted: Vec<(u8, u8)> = items.iter().copied().collect();
    for (a, &(xa, _)) in sorted.iter().enumerate() {
        for &(xb, _) in &sorted[a + 1..] {
            if xa == xb {
                return false;
            }
        }
    }
    for (a, &(_, ya)) in sorted.iter().enumerate() {
        for &(xb, yb) in &sorted[a + 1..] {
            if !(ya <= xb || ya >= yb + 1) {
                return false;
            }
        }
    }
    true
}

/// The Catalan number counting semibricks in mod Lambda_n:
/// (1/(n+2)) * C(2n+2, n+1).
pub fn catalan_count(n: u8) -> u128 {
    let m = n as u128 + 1;
    let mut binom: u128 = 1;
    for k in 0..m {
        binom = binom * (2 * m - k) / (k + 1);
    }
    binom / (m + 1)
}

/// All subsets of { M_ij } that are semibricks, the empty set included.
pub fn enumerate_semibricks_linear(n: u8) -> Result<Vec<BTreeSet<(u8, u8)>>> {
    let indec: Vec<(u8, u8)> = (0..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
    if indec.len() > 22 {
        return Err(Error::BoundExceeded(format!("2^{} subsets", indec.len())));
    }
    let mut out = Vec::new();
    for bits in 0u64..1 << indec.len() {
        let subset: BTreeSet<(u8, u8)> = indec
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &p)| p)
            .collect();
        if is_semibrick_linear(&subset) {
            out.push(subset);
        }
    }
    out.sort();
    Ok(out)
}

/// M_ij[k] in the bounded derived category of Lambda.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ShiftedInterval {
    pub i: u8,
    pub j: u8,
    pub shift: i32,
}

impl ShiftedInterval {
    pub fn new(i: u8, j: u8, shift: i32) -> Result<Self> {
        if i >= j {
            return Err(Error::BadInterval(format!("M({i},{j})[{shift}]")));
        }
        Ok(ShiftedInterval { i, j, shift })
    }

    fn pair(&self) -> (u8, u8) {
        (self.i, self.j)
    }
}

impl fmt::Display for ShiftedInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "M({},{})[{}]", self.i, self.j, self.shift)
    }
}

impl FromStr for ShiftedInterval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadInterval(s.to_string());
        let body = s.strip_prefix("M(").ok_or_else(bad)?;
        let (pair, rest) = body.split_once(')').ok_or_else(bad)?;
        let (i, j) = pair.split_once(',').ok_or_else(bad)?;
        let shift = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        ShiftedInterval::new(
            i.trim().parse().map_err(|_| bad())?,
            j.trim().parse().map_err(|_| bad())?,
            shift.trim().parse().map_err(|_| bad())?,
        )
    }
}

impl Serialize for ShiftedInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Hom in the derived category between shifted intervals: shift difference 0
/// gives Hom, +1 gives Ext^1, everything else vanishes (Lambda is
/// hereditary).  The `ctx` must live over `lambda_quiver`.
pub fn shifted_hom_dim(x: ShiftedInterval, y: ShiftedInterval, ctx: &ModCtx) -> Result<usize> {
    let n = ctx.quiver.n() as u8;
    check_pair(x.i, x.j, n)?;
    check_pair(y.i, y.j, n)?;
    let a = bridge(x.i, x.j)?;
    let b = bridge(y.i, y.j)?;
    Ok(match y.shift - x.shift {
        0 => ctx.hom_interval(a, b),
        1 => ctx.ext_interval(a, b),
        _ => 0,
    })
}

/// Semibrick criterion for a set of shifted intervals, by the closed-form
/// case split on the shift difference of each pair.
pub fn is_semibrick_shifted(items: &BTreeSet<ShiftedInterval>) -> bool {
    let all: Vec<ShiftedInterval> = items.iter().copied().collect();
    for (k, &x) in all.iter().enumerate() {
        for &y in &all[k + 1..] {
            let ok = match y.shift - x.shift {
                0 => !hom_nonzero(x.pair(), y.pair()) && !hom_nonzero(y.pair(), x.pair()),
                1 => !ext_nonzero(x.pair(), y.pair()),
                -1 => !ext_nonzero(y.pair(), x.pair()),
                _ => true,
            };
            if !ok {
                return false;
            }
        }
    }
    true
}

/// The four semibrick sets of shifted intervals used as fixed test points on
/// Lambda_3 (the AR-quiver top row restricted to shifts in [-2,2], and three
/// smaller sets), in the M_ij labelling.
pub fn example_shifted_sets() -> [BTreeSet<ShiftedInterval>; 4] {
    let m = |i, j, k| ShiftedInterval::new(i, j, k).unwrap();
    [
        // top AR-row restriction: both period-2 translates of the simples + M_03
        [
            m(0, 1, -1),
            m(1, 2, -1),
            m(2, 3, -1),
            m(0, 3, 0),
            m(0, 1, 1),
            m(1, 2, 1),
            m(2, 3, 1),
            m(0, 3, 2),
        ]
        .into(),
        [m(0, 1, -1), m(1, 2, -1), m(2, 3, -1), m(0, 3, 0)].into(),
        [m(1, 2, -1), m(2, 3, -1), m(0, 3, 0)].into(),
        [m(1, 2, -1), m(2, 3, -1), m(2, 3, 0)].into(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver_rep::interval_to_rep;

    #[test]
    fn h_sets_of_m02() {
        let h = h_sets(0, 2, 3).unwrap();
        assert_eq!(h.h0_plus, [(0, 2), (0, 3), (1, 2), (1, 3)].into());
        assert!(h.h0_minus.contains(&(0, 2)));
        assert!(h_sets(2, 2, 3).is_err());
    }

    #[test]
    fn h_sets_match_linear_algebra() {
        for n in 2u8..=4 {
            let quiver = lambda_quiver(n as usize).unwrap();
            for i in 0..n {
                for j in i + 1..=n {
                    let h = h_sets(i, j, n).unwrap();
                    let m = interval_to_rep(&quiver, bridge(i, j).unwrap(), 2);
                    for s in 0..n {
                        for t in s + 1..=n {
                            let other = interval_to_rep(&quiver, bridge(s, t).unwrap(), 2);
                            let hom_fwd = crate::quiver_rep::hom_dim(&m, &other).unwrap() > 0;
                            let hom_bwd = crate::quiver_rep::hom_dim(&other, &m).unwrap() > 0;
                            let ext_fwd = crate::quiver_rep::ext_dim(&m, &other).unwrap() > 0;
                            let ext_bwd = crate::quiver_rep::ext_dim(&other, &m).unwrap() > 0;
                            assert_eq!(h.h0_plus.contains(&(s, t)), hom_fwd, "h0+ {i}{j} {s}{t}");
                            assert_eq!(h.h0_minus.contains(&(s, t)), hom_bwd, "h0- {i}{j} {s}{t}");
                            assert_eq!(h.h1_plus.contains(&(s, t)), ext_fwd, "h1+ {i}{j} {s}{t}");
                            assert_eq!(h.h1_minus.contains(&(s, t)), ext_bwd, "h1- {i}{j} {s}{t}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn linear_semibrick_examples() {
        assert!(is_semibrick_linear(&[(0, 1), (1, 2)].into()));
        assert!(!is_semibrick_linear(&[(0, 1), (0, 2)].into()));
        assert!(is_semibrick_linear(&[(0, 2)].into()));
        assert!(is_semibrick_linear(&BTreeSet::new()));
    }

    #[test]
    fn semibrick_counts_are_catalan() {
        assert_eq!(
            (1..=5).map(catalan_count).collect::<Vec<_>>(),
            vec![2, 5, 14, 42, 132]
        );
        for n in 1..=4 {
            assert_eq!(
                enumerate_semibricks_linear(n).unwrap().len() as u128,
                catalan_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn linear_criterion_agrees_with_hom_vanishing() {
        for n in 1u8..=3 {
            let quiver_n = n.max(2); // lambda_quiver needs >= 2 vertices
            let quiver = lambda_quiver(quiver_n as usize).unwrap();
            let ctx = ModCtx::new(&quiver, 2).unwrap();
            let indec: Vec<(u8, u8)> =
                (0..n).flat_map(|i| (i + 1..=n).map(move |j| (i, j))).collect();
            for bits in 0u64..1 << indec.len() {
                let subset: BTreeSet<(u8, u8)> = indec
                    .iter()
                    .enumerate()
                    .filter(|(k, _)| bits >> k & 1 == 1)
                    .map(|(_, &p)| p)
                    .collect();
                let direct = subset.iter().all(|&a| {
                    subset.iter().all(|&b| {
                        let h = ctx.hom_interval(
                            bridge(a.0, a.1).unwrap(),
                            bridge(b.0, b.1).unwrap(),
                        );
                        h == usize::from(a == b)
                    })
                });
                assert_eq!(is_semibrick_linear(&subset), direct, "n={n} {subset:?}");
            }
        }
    }

    #[test]
    fn shifted_hom_cases() {
        let ctx = ModCtx::new(&lambda_quiver(3).unwrap(), 2).unwrap();
        let m = |i, j, k| ShiftedInterval::new(i, j, k).unwrap();
        assert_eq!(shifted_hom_dim(m(0, 2, 0), m(1, 2, 0), &ctx).unwrap(), 1);
        assert_eq!(shifted_hom_dim(m(0, 2, 0), m(1, 2, 5), &ctx).unwrap(), 0);
        assert_eq!(shifted_hom_dim(m(1, 2, 0), m(1, 2, 0), &ctx).unwrap(), 1);
        // Ext^1(S_2-analogue, its predecessor) under a unit shift
        assert_eq!(shifted_hom_dim(m(1, 2, 0), m(0, 1, 1), &ctx).unwrap(), 1);
        assert_eq!(shifted_hom_dim(m(1, 2, 1), m(0, 1, 0), &ctx).unwrap(), 0);
    }

    #[test]
    fn shifted_criterion_agrees_with_hom_vanishing() {
        let n = 2u8;
        let ctx = ModCtx::new(&lambda_quiver(2).unwrap(), 2).unwrap();
        let mut objs = Vec::new();
        for i in 0..n {
            for j in i + 1..=n {
                for k in -2..=2 {
                    objs.push(ShiftedInterval::new(i, j, k).unwrap());
                }
            }
        }
        for a in 0..objs.len() {
            for b in a + 1..objs.len() {
                for c in b + 1..objs.len() {
                    let set: BTreeSet<_> = [objs[a], objs[b], objs[c]].into();
                    let direct = set.iter().all(|&x| {
                        set.iter().all(|&y| {
                            x == y
                                || (shifted_hom_dim(x, y, &ctx).unwrap() == 0
                                    && shifted_hom_dim(y, x, &ctx).unwrap() == 0)
                        })
                    });
                    assert_eq!(is_semibrick_shifted(&set), direct, "{set:?}");
                }
            }
        }
    }

    #[test]
    fn example_sets_are_semibricks() {
        for set in example_shifted_sets() {
            assert!(is_semibrick_shifted(&set), "{set:?}");
        }
        // spoiler: adding M_02[0] to the simples set breaks it
        let mut bad = example_shifted_sets()[2].clone();
        bad.insert(ShiftedInterval::new(0, 2, 0).unwrap());
        assert!(!is_semibrick_shifted(&bad));
    }

    #[test]
    fn parse_display_round_trip() {
        let s: ShiftedInterval = "M(0,2)[-1]".parse().unwrap();
        assert_eq!(s, ShiftedInterval::new(0, 2, -1).unwrap());
        assert_eq!(s.to_string(), "M(0,2)[-1]");
        assert!("M(2,1)[0]".parse::<ShiftedInterval>().is_err());
        assert!("M(0,2)".parse::<ShiftedInterval>().is_err());
    }
}
