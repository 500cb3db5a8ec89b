//! Brute-force filtration oracle: X-filtrations, X-length, the weak and full
//! Jordan-Hölder checks over a bounded universe of iso-classes, semibrick
//! detection, and simple objects of additively closed interval sets.
//!
//! Everything here is independent of the symmetric-group criteria: the only
//! inputs are monomorphism searches over F_p.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver_rep::{
    hom_dim, iso_classes_up_to_dim, Interval, IsoClass, ModCtx, TypeAQuiver,
};

/// The class X generating Filt(X); members pairwise non-isomorphic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorSet {
    pub quiver: TypeAQuiver,
    pub members: Vec<IsoClass>,
}

impl GeneratorSet {
    pub fn new(quiver: &TypeAQuiver, members: impl IntoIterator<Item = IsoClass>) -> Self {
        let mut members: Vec<IsoClass> = members.into_iter().filter(|m| !m.is_zero()).collect();
        members.sort();
        members.dedup();
        GeneratorSet { quiver: quiver.clone(), members }
    }

    pub fn of_intervals(quiver: &TypeAQuiver, intervals: impl IntoIterator<Item = Interval>) -> Self {
        GeneratorSet::new(quiver, intervals.into_iter().map(IsoClass::single))
    }
}

/// An ordered cone sequence of an X-filtration: entry 0 is the bottom
/// submodule's class, entry k the k-th subquotient.
pub type ConeSequence = Vec<IsoClass>;

type Outcomes = BTreeSet<ConeSequence>;

fn outcomes(
    m: &IsoClass,
    x: &GeneratorSet,
    ctx: &ModCtx,
    memo: &mut HashMap<IsoClass, Outcomes>,
) -> Result<Outcomes> {
    if m.is_zero() {
        return Ok([Vec::new()].into());
    }
    if let Some(hit) = memo.get(m) {
        return Ok(hit.clone());
    }
    let mut out = Outcomes::new();
    for member in &x.members {
        for coker in ctx.monos_up_to_cokernel(member, m)? {
            for rest in outcomes(&coker, x, ctx, memo)? {
                let mut seq = Vec::with_capacity(rest.len() + 1);
                seq.push(member.clone());
                seq.extend(rest);
                out.insert(seq);
            }
        }
    }
    memo.insert(m.clone(), out.clone());
    Ok(out)
}

/// All cone sequences of X-filtrations of M; empty iff M is outside Filt(X).
pub fn filtrations(
    m: &IsoClass,
    x: &GeneratorSet,
    ctx: &ModCtx,
    cap: usize,
) -> Result<Outcomes> {
    if m.total_dim() > cap {
        return Err(Error::BoundExceeded(format!(
            "module of dimension {} above the cap {cap}",
            m.total_dim()
        )));
    }
    outcomes(m, x, ctx, &mut HashMap::new())
}

/// The minimal X-filtration length of M, or None when M is not in Filt(X).
pub fn x_length(m: &IsoClass, x: &GeneratorSet, ctx: &ModCtx, cap: usize) -> Result<Option<usize>> {
    Ok(filtrations(m, x, ctx, cap)?.iter().map(Vec::len).min())
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltCounterexample {
    pub module: IsoClass,
    pub seq_a: ConeSequence,
    pub seq_b: ConeSequence,
}

#[derive(Debug, Clone, Serialize)]
pub struct FiltReport {
    pub generator_set: Vec<String>,
    pub universe_bound: usize,
    pub verdict: bool,
    pub counterexamples: Vec<FiltCounterexample>,
    pub inconclusive: bool,
}

fn sorted(seq: &ConeSequence) -> ConeSequence {
    let mut s = seq.clone();
    s.sort();
    s
}

fn report_scaffold(x: &GeneratorSet, universe_dim: usize) -> FiltReport {
    FiltReport {
        generator_set: x.members.iter().map(|m| m.to_string()).collect(),
        universe_bound: universe_dim,
        verdict: true,
        counterexamples: Vec::new(),
        // members too big for the universe leave part of Filt(X) unexplored
        inconclusive: x.members.iter().any(|m| m.total_dim() > universe_dim),
    }
}

/// Weak Jordan-Hölder check: for every M in Filt(X) with dim <= universe_dim,
/// all minimal-length cone sequences agree as multisets.
pub fn check_wjhp(x: &GeneratorSet, ctx: &ModCtx, universe_dim: usize) -> Result<FiltReport> {
    let mut report = report_scaffold(x, universe_dim);
    let mut memo = HashMap::new();
    for m in iso_classes_up_to_dim(x.quiver.n(), universe_dim) {
        if m.is_zero() {
            continue;
        }
        let all = outcomes(&m, x, ctx, &mut memo)?;
        let Some(min) = all.iter().map(Vec::len).min() else { continue };
        let minimal: Vec<&ConeSequence> = all.iter().filter(|s| s.len() == min).collect();
        let first = sorted(minimal[0]);
        if let Some(other) = minimal.iter().find(|s| sorted(s) != first) {
            report.verdict = false;
            report.counterexamples.push(FiltCounterexample {
                module: m.clone(),
                seq_a: minimal[0].clone(),
                seq_b: (*other).clone(),
            });
        }
    }
    Ok(report)
}

/// Full Jordan-Hölder check: for every M in Filt(X) within the universe, all
/// cone sequences (of any length) agree as multisets.
pub fn check_jhp(x: &GeneratorSet, ctx: &ModCtx, universe_dim: usize) -> Result<FiltReport> {
    let mut report = report_scaffold(x, universe_dim);
    let mut memo = HashMap::new();
    for m in iso_classes_up_to_dim(x.quiver.n(), universe_dim) {
        if m.is_zero() {
            continue;
        }
        let all = outcomes(&m, x, ctx, &mut memo)?;
        let mut iter = all.iter();
        let Some(first) = iter.next() else { continue };
        let first_sorted = sorted(first);
        if let Some(other) = iter.find(|s| sorted(s) != first_sorted) {
            report.verdict = false;
            report.counterexamples.push(FiltCounterexample {
                module: m.clone(),
                seq_a: first.clone(),
                seq_b: other.clone(),
            });
        }
    }
    Ok(report)
}

/// Pairwise Hom-orthogonality, with each member a brick.
pub fn is_semibrick(x: &GeneratorSet, ctx: &ModCtx) -> Result<bool> {
    let reps: Vec<_> = x.members.iter().map(|m| ctx.rep_of(m)).collect();
    for (a, ra) in reps.iter().enumerate() {
        for (b, rb) in reps.iter().enumerate() {
            let want = usize::from(a == b);
            if hom_dim(ra, rb)? != want {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Multisets (as iso-classes) of members of `items` with total dimension in
/// 1..=max_dim.
fn sums_up_to(items: &[Interval], max_dim: usize) -> Vec<IsoClass> {
    fn rec(
        items: &[Interval],
        k: usize,
        dim: usize,
        max_dim: usize,
        cur: &mut Vec<Interval>,
        out: &mut Vec<IsoClass>,
    ) {
        if !cur.is_empty() {
            out.push(IsoClass::from_multiset(cur.iter().map(|&i| (i, 1))));
        }
        for j in k..items.len() {
            if dim + items[j].dim() <= max_dim {
                cur.push(items[j]);
                rec(items, j, dim + items[j].dim(), max_dim, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    rec(items, 0, 0, max_dim, &mut Vec::new(), &mut out);
    out
}

/// Simple objects of add S: members M with no short exact sequence
/// 0 -> A -> M -> B -> 0 whose ends are nonzero objects of add S.
pub fn simples_in(s: &BTreeSet<Interval>, ctx: &ModCtx) -> Result<BTreeSet<Interval>> {
    let members: Vec<Interval> = s.iter().copied().collect();
    let mut out = BTreeSet::new();
    'member: for &m in &members {
        let target = IsoClass::single(m);
        for sub in sums_up_to(&members, m.dim().saturating_sub(1)) {
            for coker in ctx.monos_up_to_cokernel(&sub, &target)? {
                if !coker.is_zero() && coker.summands().all(|(iv, _)| s.contains(&iv)) {
                    continue 'member;
                }
            }
        }
        out.insert(m);
    }
    Ok(out)
}
