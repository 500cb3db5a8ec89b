//! Reflection functors on interval modules, the alpha/beta/gamma inversion
//! statistics, the dagger/double-dagger step invariants, reflection sequences
//! along sink-mutation plans, and the resulting JHP decision procedure.

use std::collections::{BTreeSet, HashMap, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fp::Mat;
use crate::quiver_rep::{Interval, Rep, TypeAQuiver};
use crate::symgroup::{
    apply_transposition, bruhat_inversions, is_c_sortable, length, Permutation, Transposition,
};

/// Case table for R+ at a sink i (and, unchanged, for R- at a source i): the
/// only intervals that move are those with an endpoint adjacent to i.  The
/// table is an involution away from the simple S_i, which is annihilated.
fn reflect_table(i: u8, iv: Interval) -> Option<Interval> {
    let (s, t) = (iv.lo(), iv.hi());
    let mk = |a, b| Some(Interval::new(a, b).expect("table rows keep lo < hi"));
    if s == i && t == i + 1 {
        None
    } else if t == i {
        mk(s, i + 1)
    } else if t == i + 1 && s < i {
        mk(s, i)
    } else if s == i + 1 {
        mk(i, t)
    } else if s == i && t >= i + 2 {
        mk(i + 1, t)
    } else {
        Some(iv)
    }
}

fn check_vertex(quiver: &TypeAQuiver, i: u8) -> Result<()> {
    if i == 0 || i as usize > quiver.n() {
        return Err(Error::VertexOutOfRange(i));
    }
    Ok(())
}

/// R+_i on an interval module; `None` is the zero object (only S_i dies).
pub fn reflect_plus_interval(
    quiver: &TypeAQuiver,
    i: u8,
    iv: Interval,
) -> Result<Option<Interval>> {
    check_vertex(quiver, i)?;
    if !quiver.is_sink(i) {
        return Err(Error::NotASink(i));
    }
    Ok(reflect_table(i, iv))
}

/// R-_i on an interval module over a quiver with source i.
pub fn reflect_minus_interval(
    quiver: &TypeAQuiver,
    i: u8,
    iv: Interval,
) -> Result<Option<Interval>> {
    check_vertex(quiver, i)?;
    if !quiver.is_source(i) {
        return Err(Error::NotASource(i));
    }
    Ok(reflect_table(i, iv))
}

/// Kernel construction of R+_i on an arbitrary representation: replace M_i by
/// ker(direct sum of incoming spaces -> M_i) and re-aim the incident arrows.
/// Internal cross-check for the interval table.
pub(crate) fn reflect_plus_rep(i: u8, rep: &Rep) -> Result<Rep> {
    let quiver = &rep.quiver;
    check_vertex(quiver, i)?;
    if !quiver.is_sink(i) {
        return Err(Error::NotASink(i));
    }
    let n = quiver.n();
    let ii = i as usize - 1;
    // incoming edges in index order, with their column offsets in the sum
    let incoming: Vec<usize> = (1..n).filter(|&e| quiver.arrow(e).1 == i).collect();
    let mut offsets = Vec::new();
    let mut total = 0;
    for &e in &incoming {
        offsets.push(total);
        total += rep.dims[quiver.arrow(e).0 as usize - 1];
    }
    let mut big = Mat::zero(rep.dims[ii], total, rep.p);
    for (k, &e) in incoming.iter().enumerate() {
        let m = &rep.maps[e - 1];
        for r in 0..m.rows {
            for c in 0..m.cols {
                big.set(r, offsets[k] + c, m.get(r, c));
            }
        }
    }
    let kernel = big.kernel_basis();
    let mutated = quiver.mutate(i)?;
    let mut dims = rep.dims.clone();
    dims[ii] = kernel.cols;
    let mut maps = Vec::new();
    for e in 1..n {
        if let Some(k) = incoming.iter().position(|&f| f == e) {
            // arrow now points i -> s; the map is the s-block of the kernel basis
            let s = quiver.arrow(e).0 as usize - 1;
            let mut m = Mat::zero(rep.dims[s], kernel.cols, rep.p);
            for r in 0..rep.dims[s] {
                for c in 0..kernel.cols {
                    m.set(r, c, kernel.get(offsets[k] + r, c));
                }
            }
            maps.push(m);
        } else {
            maps.push(rep.maps[e - 1].clone());
        }
    }
    Ok(Rep { quiver: mutated, p: rep.p, dims, maps })
}

/// alpha_u = { t >= 3 : (2 t) in Binv(u) and u^{-1}(t) < u^{-1}(1) }.
///
/// The positional condition keeps only the Bruhat inversions whose interval
/// module actually lies in the relevant torsion-free class; without it the
/// statistic over- or under-counts and the step identity for the double dagger
/// fails (e.g. at 4231 over 1 <- 2 -> 3).
pub fn alpha(u: &Permutation) -> BTreeSet<u8> {
    let binv = bruhat_inversions(u);
    (3..=u.rank() as u8)
        .filter(|&t| {
            binv.contains(&Transposition::new(2, t, u.rank()).expect("t in range"))
                && u.position_of(t) < u.position_of(1)
        })
        .collect()
}

fn check_interior(u: &Permutation, i: u8) -> Result<()> {
    let n = u.rank() as u8 - 1;
    if i <= 1 || i >= n {
        return Err(Error::VertexOutOfRange(i));
    }
    Ok(())
}

/// beta^i_u = { t <= i-1 : (t i) in Binv(u), u^{-1}(i) < u^{-1}(i+1) < u^{-1}(t) }.
pub fn beta(u: &Permutation, i: u8) -> Result<BTreeSet<u8>> {
    check_interior(u, i)?;
    Ok((1..i)
        .filter(|&t| {
            bruhat_inversions(u).contains(&Transposition::new(t, i, u.rank()).expect("in range"))
                && u.position_of(i) < u.position_of(i + 1)
                && u.position_of(i + 1) < u.position_of(t)
        })
        .collect())
}

/// gamma^i_u = { t >= i+2 : (i+1 t) in Binv(u), u^{-1}(t) < u^{-1}(i) < u^{-1}(i+1) }.
pub fn gamma(u: &Permutation, i: u8) -> Result<BTreeSet<u8>> {
    check_interior(u, i)?;
    Ok((i + 2..=u.rank() as u8)
        .filter(|&t| {
            bruhat_inversions(u)
                .contains(&Transposition::new(i + 1, t, u.rank()).expect("in range"))
                && u.position_of(t) < u.position_of(i)
                && u.position_of(i) < u.position_of(i + 1)
        })
        .collect())
}

fn check_step(i: u8, w: &Permutation) -> Result<Permutation> {
    let n = w.rank() as u8 - 1;
    if i == 0 || i >= n {
        return Err(Error::VertexOutOfRange(i));
    }
    let siw = apply_transposition(Transposition::new(i, i + 1, w.rank())?, w)?;
    if length(&siw) + 1 != length(w) {
        return Err(Error::LengthPrecondition(i));
    }
    Ok(siw)
}

/// dagger_i(w): the support change |supp(w)| - |supp(s_i w)|, read off
/// directly.  Requires l(s_i w) = l(w) - 1 and 1 <= i < n.
pub fn dagger(i: u8, w: &Permutation) -> Result<u8> {
    let siw = check_step(i, w)?;
    if i == 1 {
        Ok(u8::from(w.apply(1) == 2))
    } else {
        let prefix_max = (1..=i).map(|k| siw.apply(k)).max().unwrap();
        Ok(u8::from(prefix_max <= i))
    }
}

/// ddagger_i(w): the Bruhat-inversion change |Binv(w)| - |Binv(s_i w)|, via
/// the alpha/beta/gamma statistics.  Same preconditions as `dagger`.
pub fn ddagger(i: u8, w: &Permutation) -> Result<i64> {
    let siw = check_step(i, w)?;
    if i == 1 {
        if w.apply(1) == 2 {
            Ok(1)
        } else {
            Ok(1 - alpha(&siw).len() as i64)
        }
    } else {
        Ok(1 - (beta(&siw, i)?.len() + gamma(&siw, i)?.len()) as i64)
    }
}

/// A sequence of sink mutations at vertices < n ending at the linear
/// orientation 1 -> 2 -> ... -> n.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReflectionPlan {
    vertices: Vec<u8>,
    quivers: Vec<TypeAQuiver>,
}

impl ReflectionPlan {
    pub fn new(quiver: &TypeAQuiver, vertices: Vec<u8>) -> Result<Self> {
        let n = quiver.n();
        let mut quivers = vec![quiver.clone()];
        for &v in &vertices {
            if v == 0 || v as usize >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            let cur = quivers.last().unwrap();
            if !cur.is_sink(v) {
                return Err(Error::NotASink(v));
            }
            quivers.push(cur.mutate(v)?);
        }
        if !quivers.last().unwrap().is_linear() {
            return Err(Error::BadQuiver(format!(
                "plan ends at {}, not the linear orientation",
                quivers.last().unwrap()
            )));
        }
        Ok(ReflectionPlan { vertices, quivers })
    }

    pub fn vertices(&self) -> &[u8] {
        &self.vertices
    }

    pub fn initial_quiver(&self) -> &TypeAQuiver {
        &self.quivers[0]
    }

    /// The quiver after the first `k` mutations of the plan.
    pub fn quiver_after(&self, k: usize) -> &TypeAQuiver {
        &self.quivers[k]
    }

    pub fn final_quiver(&self) -> &TypeAQuiver {
        self.quivers.last().unwrap()
    }
}

/// Shortest sink-mutation plan from Q to the linear orientation (BFS over the
/// 2^(n-1) orientations; lexicographically smallest among shortest).
pub fn sink_plan_to_linear(quiver: &TypeAQuiver) -> Result<ReflectionPlan> {
    let n = quiver.n();
    let mut parent: HashMap<TypeAQuiver, (TypeAQuiver, u8)> = HashMap::new();
    let mut queue = VecDeque::new();
    queue.push_back(quiver.clone());
    let mut seen: BTreeSet<TypeAQuiver> = [quiver.clone()].into();
    while let Some(cur) = queue.pop_front() {
        if cur.is_linear() {
            let mut path = Vec::new();
            let mut at = cur;
            while let Some((prev, v)) = parent.get(&at) {
                path.push(*v);
                at = prev.clone();
            }
            path.reverse();
            return ReflectionPlan::new(quiver, path);
        }
        for v in 1..n as u8 {
            if cur.is_sink(v) {
                let next = cur.mutate(v)?;
                if seen.insert(next.clone()) {
                    parent.insert(next.clone(), (cur.clone(), v));
                    queue.push_back(next);
                }
            }
        }
    }
    Err(Error::Internal(format!(
        "no sink-mutation path from {quiver} to the linear orientation"
    )))
}

#[derive(Debug, Clone, Serialize)]
pub struct ReflectStep {
    pub vertex: u8,
    pub dagger: u8,
    pub ddagger: i64,
    pub perm_before: Permutation,
    pub perm_after: Permutation,
}

/// The greedy reflection sequence of w along a plan, with the step statistics
/// and the final image permutation.
#[derive(Debug, Clone, Serialize)]
pub struct ReflectionTrace {
    pub sequence: Vec<u8>,
    /// 0-based plan positions of the used steps (strictly increasing).
    pub positions: Vec<usize>,
    pub steps: Vec<ReflectStep>,
    pub image: Permutation,
    pub dagger_total: i64,
    pub ddagger_total: i64,
}

/// Greedy scan: t_1 is the first plan position shortening w, each t_{m+1} the
/// first later position shortening the current permutation; `None` when no
/// plan vertex shortens w at all.
pub fn reflection_sequence(
    w: &Permutation,
    plan: &ReflectionPlan,
) -> Result<Option<ReflectionTrace>> {
    if w.rank() != plan.initial_quiver().rank() {
        return Err(Error::RankMismatch(w.rank(), plan.initial_quiver().rank()));
    }
    let js = plan.vertices();
    let mut cur = w.clone();
    let mut steps: Vec<ReflectStep> = Vec::new();
    let mut positions: Vec<usize> = Vec::new();
    let mut from = 0;
    while let Some(y) = (from..js.len()).find(|&y| {
        let t = Transposition::new(js[y], js[y] + 1, cur.rank()).expect("plan vertex in range");
        length(&apply_transposition(t, &cur).expect("in range")) + 1 == length(&cur)
    }) {
        let j = js[y];
        let d = dagger(j, &cur)?;
        let dd = ddagger(j, &cur)?;
        let next = apply_transposition(Transposition::new(j, j + 1, cur.rank())?, &cur)?;
        steps.push(ReflectStep {
            vertex: j,
            dagger: d,
            ddagger: dd,
            perm_before: cur.clone(),
            perm_after: next.clone(),
        });
        cur = next;
        positions.push(y);
        from = y + 1;
    }
    if steps.is_empty() {
        return Ok(None);
    }
    Ok(Some(ReflectionTrace {
        sequence: steps.iter().map(|s| s.vertex).collect(),
        positions,
        dagger_total: steps.iter().map(|s| s.dagger as i64).sum(),
        ddagger_total: steps.iter().map(|s| s.ddagger).sum(),
        steps,
        image: cur,
    }))
}

#[derive(Debug, Clone, Serialize)]
pub struct Main6Report {
    pub plan: ReflectionPlan,
    pub trace: Option<ReflectionTrace>,
    pub dagger_total: i64,
    pub ddagger_total: i64,
    pub jhp: bool,
}

/// Decide JHP for F(w) by comparing the dagger and double-dagger totals along
/// the canonical sink plan (both totals are 0 when the sequence is absent).
pub fn main6_jhp(w: &Permutation, quiver: &TypeAQuiver) -> Result<Main6Report> {
    let plan = sink_plan_to_linear(quiver)?;
    main6_jhp_with_plan(w, quiver, &plan)
}

/// Same decision along a caller-supplied plan (to probe plan-independence).
pub fn main6_jhp_with_plan(
    w: &Permutation,
    quiver: &TypeAQuiver,
    plan: &ReflectionPlan,
) -> Result<Main6Report> {
    if plan.initial_quiver() != quiver {
        return Err(Error::QuiverMismatch);
    }
    if is_c_sortable(w, quiver)?.is_none() {
        return Err(Error::NotSortable { perm: w.to_string(), quiver: quiver.to_string() });
    }
    let trace = reflection_sequence(w, plan)?;
    // every intermediate permutation must stay sortable for the quiver at
    // that point of the plan; a failure here is a bug, not a user error
    if let Some(trace) = &trace {
        for (step, &pos) in trace.steps.iter().zip(&trace.positions) {
            let cur_quiver = plan.quiver_after(pos + 1);
            if is_c_sortable(&step.perm_after, cur_quiver)?.is_none() {
                return Err(Error::Internal(format!(
                    "intermediate image {} is not sortable for {cur_quiver}",
                    step.perm_after
                )));
            }
        }
        if is_c_sortable(&trace.image, plan.final_quiver())?.is_none() {
            return Err(Error::Internal(format!(
                "image {} is not sortable for the linear orientation",
                trace.image
            )));
        }
    }
    let (dagger_total, ddagger_total) = trace
        .as_ref()
        .map_or((0, 0), |t| (t.dagger_total, t.ddagger_total));
    Ok(Main6Report { plan: plan.clone(), trace, dagger_total, ddagger_total, jhp: dagger_total == ddagger_total })
}
