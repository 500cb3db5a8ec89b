//! Torsion-free classes F(w): construction from sortable permutations, their
//! simple objects, the counting criterion for the Jordan-Hölder property, a
//! bounded brute-force torsion-freeness oracle, and the fan-quiver pattern
//! criterion.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::quiver_rep::{Dir, Interval, IsoClass, ModCtx, TypeAQuiver};
use crate::reflect::alpha;
use crate::symgroup::{
    apply_transposition, bruhat_inversions, inversions, is_c_sortable, support, Permutation,
    Transposition,
};

/// An additively closed set of intervals, usually F(w) for a c_Q-sortable w.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TorsionFreeClass {
    pub quiver: TypeAQuiver,
    pub intervals: BTreeSet<Interval>,
    pub source: Option<Permutation>,
}

impl TorsionFreeClass {
    /// Raw constructor: records an interval set without any torsion-freeness
    /// guarantee (use the oracle to verify).
    pub fn raw(quiver: &TypeAQuiver, intervals: BTreeSet<Interval>) -> Self {
        TorsionFreeClass { quiver: quiver.clone(), intervals, source: None }
    }
}

fn intervals_of_transpositions(ts: &BTreeSet<Transposition>) -> BTreeSet<Interval> {
    ts.iter()
        .map(|t| Interval::new(t.i(), t.j()).expect("i < j <= n+1"))
        .collect()
}

/// F(w) = add{ M_[i,j) : (i j) in inv(w) }, for c_Q-sortable w only.
pub fn tf_class_of(w: &Permutation, quiver: &TypeAQuiver) -> Result<TorsionFreeClass> {
    if is_c_sortable(w, quiver)?.is_none() {
        return Err(Error::NotSortable { perm: w.to_string(), quiver: quiver.to_string() });
    }
    Ok(TorsionFreeClass {
        quiver: quiver.clone(),
        intervals: intervals_of_transpositions(&inversions(w)),
        source: Some(w.clone()),
    })
}

/// sim(F(w)) = { M_[i,j) : (i j) in Binv(w) }.
pub fn simples_of(class: &TorsionFreeClass) -> Result<BTreeSet<Interval>> {
    let w = class.source.as_ref().ok_or(Error::MissingSource)?;
    Ok(intervals_of_transpositions(&bruhat_inversions(w)))
}

/// The counting criterion: F(w) has the Jordan-Hölder property iff
/// |supp(w)| = |Binv(w)|.
pub fn jhp_by_count(w: &Permutation) -> bool {
    support(w).len() == bruhat_inversions(w).len()
}

/// supp(F) = union of the supports of its intervals.
pub fn supp_of_class(class: &TorsionFreeClass) -> BTreeSet<u8> {
    class.intervals.iter().flat_map(|i| i.support()).collect()
}

/// Bounds for the brute-force oracle: `pair_sum` is the maximum number of
/// indecomposable summands per side in the submodule-closure check, `max_dim`
/// the total-dimension cap on any module the oracle constructs.
#[derive(Debug, Clone, Copy)]
pub struct TfBounds {
    pub pair_sum: usize,
    pub max_dim: usize,
}

impl Default for TfBounds {
    fn default() -> Self {
        TfBounds { pair_sum: 2, max_dim: 8 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TfVerdict {
    TorsionFree,
    NotTorsionFree,
    /// No violation found, but some closure check was skipped at the
    /// dimension cap.
    Inconclusive,
}

impl fmt::Display for TfVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TfVerdict::TorsionFree => "torsion-free",
            TfVerdict::NotTorsionFree => "not-torsion-free",
            TfVerdict::Inconclusive => "inconclusive-at-bound",
        })
    }
}

/// All multisets of 1..=max_len members of `items` (nondecreasing index
/// order), pruned at total dimension max_dim; sets `skipped` when the cap cut
/// anything off.
fn bounded_multisets(
    items: &[Interval],
    max_len: usize,
    max_dim: usize,
    skipped: &mut bool,
) -> Vec<IsoClass> {
    fn rec(
        items: &[Interval],
        k: usize,
        len_left: usize,
        dim: usize,
        max_dim: usize,
        cur: &mut Vec<Interval>,
        out: &mut Vec<IsoClass>,
        skipped: &mut bool,
    ) {
        if !cur.is_empty() {
            out.push(IsoClass::from_multiset(cur.iter().map(|&i| (i, 1))));
        }
        if len_left == 0 {
            return;
        }
        for j in k..items.len() {
            if dim + items[j].dim() > max_dim {
                *skipped = true;
                continue;
            }
            cur.push(items[j]);
            rec(items, j, len_left - 1, dim + items[j].dim(), max_dim, cur, out, skipped);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, 0, max_len, 0, max_dim, &mut Vec::new(), &mut out, skipped);
    out
}

/// Bounded closure check: refutation-sound, with an explicit inconclusive
/// verdict whenever a closure witness was skipped at the dimension cap.
pub fn is_torsion_free_oracle(
    s: &BTreeSet<Interval>,
    ctx: &ModCtx,
    bounds: TfBounds,
) -> Result<TfVerdict> {
    let members: Vec<Interval> = s.iter().copied().collect();
    let mut skipped = false;

    // submodule closure on direct sums of at most 2*pair_sum members
    for sum in bounded_multisets(&members, 2 * bounds.pair_sum, bounds.max_dim, &mut skipped) {
        for &iv in &ctx.intervals {
            if !s.contains(&iv) && ctx.has_mono(&IsoClass::single(iv), &sum)? {
                return Ok(TfVerdict::NotTorsionFree);
            }
        }
    }

    // extension closure: middle terms of 0 -> Y -> E -> X -> 0 for X, Y in S
    for &x in &members {
        for &y in &members {
            if x.dim() + y.dim() > bounds.max_dim {
                skipped = true;
                continue;
            }
            for e in ctx.middle_terms(x, y)? {
                if e.summands().any(|(iv, _)| !s.contains(&iv)) {
                    return Ok(TfVerdict::NotTorsionFree);
                }
            }
        }
    }

    Ok(if skipped { TfVerdict::Inconclusive } else { TfVerdict::TorsionFree })
}

/// Power-set filter: every interval subset the oracle does not refute, in
/// deterministic (lexicographic set) order.
pub fn enumerate_tf_classes_bruteforce(
    quiver: &TypeAQuiver,
    ctx: &ModCtx,
    bounds: TfBounds,
) -> Result<Vec<BTreeSet<Interval>>> {
    let intervals = Interval::all(quiver.n());
    let mut out = Vec::new();
    for bits in 0u64..1 << intervals.len() {
        let s: BTreeSet<Interval> = intervals
            .iter()
            .enumerate()
            .filter(|(k, _)| bits >> k & 1 == 1)
            .map(|(_, &iv)| iv)
            .collect();
        if is_torsion_free_oracle(&s, ctx, bounds)? != TfVerdict::NotTorsionFree {
            out.push(s);
        }
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum BbVerdict {
    NotTorsionFree,
    TorsionFreeJHP,
    TorsionFreeNotJHP,
}

impl fmt::Display for BbVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BbVerdict::NotTorsionFree => "not-torsion-free",
            BbVerdict::TorsionFreeJHP => "torsion-free, JHP holds",
            BbVerdict::TorsionFreeNotJHP => "torsion-free, JHP fails",
        })
    }
}

fn is_fan_quiver(quiver: &TypeAQuiver) -> bool {
    let dirs = quiver.dirs();
    dirs[0] == Dir::Left && dirs[1..].iter().all(|&d| d == Dir::Right)
}

/// Closed-form classification for the fan quiver 1 <- 2 -> 3 -> ... -> n:
/// pattern avoidance decides torsion-freeness (= c_Q-sortability of w), then
/// the position of the letters 1, 2 and the alpha statistic decide JHP.
pub fn bb_criterion(w: &Permutation, quiver: &TypeAQuiver) -> Result<BbVerdict> {
    if !is_fan_quiver(quiver) {
        return Err(Error::NotFanQuiver(quiver.to_string()));
    }
    if w.rank() != quiver.rank() {
        return Err(Error::RankMismatch(w.rank(), quiver.rank()));
    }
    let rank = w.rank() as u8;
    let n = rank - 1;
    let pos = |x: u8| w.position_of(x);

    // (i') the 1 <- 2 edge forbids the letter order c ... 1 ... 2 for c >= 3
    for c in 3..=rank {
        if pos(c) < pos(1) && pos(1) < pos(2) {
            return Ok(BbVerdict::NotTorsionFree);
        }
    }
    // (ii') each b-1 -> b edge (b >= 3) forbids the letter order b ... c ... a
    // for a < b < c
    for b in 3..=n {
        for c in b + 1..=rank {
            for a in 1..b {
                if pos(b) < pos(c) && pos(c) < pos(a) {
                    return Ok(BbVerdict::NotTorsionFree);
                }
            }
        }
    }
    // (iii) JHP subclassification
    if pos(1) < pos(2) || w.apply(1) == 2 {
        return Ok(BbVerdict::TorsionFreeJHP);
    }
    let s1w = apply_transposition(Transposition::new(1, 2, w.rank())?, w)?;
    Ok(if alpha(&s1w).len() == 1 {
        BbVerdict::TorsionFreeJHP
    } else {
        BbVerdict::TorsionFreeNotJHP
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symgroup::{enumerate_c_sortables, AllPermutations};

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn q(s: &str) -> TypeAQuiver {
        s.parse().unwrap()
    }

    fn ivs(strs: &[&str]) -> BTreeSet<Interval> {
        strs.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn class_and_simples_of_4312() {
        let class = tf_class_of(&p("4312"), &q("><")).unwrap();
        assert_eq!(class.intervals, ivs(&["[1,3)", "[1,4)", "[2,3)", "[2,4)", "[3,4)"]));
        assert_eq!(simples_of(&class).unwrap(), ivs(&["[1,3)", "[2,3)", "[3,4)"]));
        assert_eq!(supp_of_class(&class), [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn class_of_3412_has_four_simples() {
        let class = tf_class_of(&p("3412"), &q("><")).unwrap();
        assert_eq!(class.intervals, ivs(&["[1,3)", "[1,4)", "[2,3)", "[2,4)"]));
        assert_eq!(simples_of(&class).unwrap(), class.intervals);
    }

    #[test]
    fn unsortable_input_refused() {
        assert!(matches!(
            tf_class_of(&p("312"), &q("<")),
            Err(Error::NotSortable { .. })
        ));
    }

    #[test]
    fn counting_criterion() {
        assert!(jhp_by_count(&p("4312")));
        assert!(!jhp_by_count(&p("3412")));
        assert!(jhp_by_count(&Permutation::identity(4).unwrap()));
    }

    #[test]
    fn supp_class_matches_supp_perm() {
        for quiver in TypeAQuiver::all_orientations(3) {
            for w in enumerate_c_sortables(&quiver).unwrap() {
                let class = tf_class_of(&w, &quiver).unwrap();
                assert_eq!(supp_of_class(&class), support(&w));
            }
        }
    }

    #[test]
    fn oracle_refutes_missing_submodule() {
        let quiver = q("<");
        let ctx = ModCtx::new(&quiver, 2).unwrap();
        // P_2 = [1,3) without its submodule S_1
        let verdict = is_torsion_free_oracle(&ivs(&["[1,3)"]), &ctx, TfBounds::default()).unwrap();
        assert_eq!(verdict, TfVerdict::NotTorsionFree);
        assert_eq!(
            is_torsion_free_oracle(&BTreeSet::new(), &ctx, TfBounds::default()).unwrap(),
            TfVerdict::TorsionFree
        );
        // the whole module category
        let all: BTreeSet<Interval> = Interval::all(2).into_iter().collect();
        assert_eq!(
            is_torsion_free_oracle(&all, &ctx, TfBounds::default()).unwrap(),
            TfVerdict::TorsionFree
        );
    }

    #[test]
    fn oracle_refutes_missing_extension() {
        // {S_1, S_2} on 1 <- 2 is extension-closed only if [1,3) joins in
        let quiver = q("<");
        let ctx = ModCtx::new(&quiver, 2).unwrap();
        let verdict =
            is_torsion_free_oracle(&ivs(&["[1,2)", "[2,3)"]), &ctx, TfBounds::default()).unwrap();
        assert_eq!(verdict, TfVerdict::NotTorsionFree);
    }

    #[test]
    fn bruteforce_enumeration_matches_sortables() {
        for s in ["<", ">", "><"] {
            let quiver = q(s);
            let ctx = ModCtx::new(&quiver, 2).unwrap();
            let brute = enumerate_tf_classes_bruteforce(&quiver, &ctx, TfBounds::default()).unwrap();
            let mut from_sortables: Vec<BTreeSet<Interval>> = enumerate_c_sortables(&quiver)
                .unwrap()
                .iter()
                .map(|w| tf_class_of(w, &quiver).unwrap().intervals)
                .collect();
            from_sortables.sort();
            assert_eq!(brute, from_sortables, "quiver {quiver}");
        }
    }

    #[test]
    fn bb_criterion_spot_values() {
        let fan2 = q("<");
        assert_eq!(bb_criterion(&p("123"), &fan2).unwrap(), BbVerdict::TorsionFreeJHP);
        assert_eq!(bb_criterion(&p("312"), &fan2).unwrap(), BbVerdict::NotTorsionFree);
        assert_eq!(bb_criterion(&p("231"), &fan2).unwrap(), BbVerdict::TorsionFreeJHP);
        let fan3 = q("<>");
        assert_eq!(bb_criterion(&p("2134"), &fan3).unwrap(), BbVerdict::TorsionFreeJHP);
        // 2314 = s_1 s_2 is sortable with |supp| = |Binv| = 2
        assert_eq!(bb_criterion(&p("2314"), &fan3).unwrap(), BbVerdict::TorsionFreeJHP);
        assert_eq!(bb_criterion(&p("1342"), &fan3).unwrap(), BbVerdict::NotTorsionFree);
        assert!(bb_criterion(&p("1234"), &q(">>")).is_err());
    }

    #[test]
    fn bb_criterion_agrees_with_sortability_and_count() {
        for n in 2..=3 {
            let mut dirs = String::from("<");
            dirs.push_str(&">".repeat(n - 2));
            let quiver = q(&dirs);
            for w in AllPermutations::new(n + 1).unwrap() {
                let want = match is_c_sortable(&w, &quiver).unwrap() {
                    None => BbVerdict::NotTorsionFree,
                    Some(_) if jhp_by_count(&w) => BbVerdict::TorsionFreeJHP,
                    Some(_) => BbVerdict::TorsionFreeNotJHP,
                };
                assert_eq!(bb_criterion(&w, &quiver).unwrap(), want, "w = {w}");
            }
        }
    }
}
