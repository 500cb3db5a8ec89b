//! Type-A quivers, interval modules, and explicit matrix representations.
//!
//! All module-level computation bottoms out here: Hom/Ext dimensions by
//! solving the commuting-square system over F_p, Krull-Schmidt decomposition
//! by inverting the hom-count system, and monomorphism/cokernel enumeration.

use std::collections::HashMap;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::fp::{check_char, Mat};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Dir {
    /// arrow a -> a+1
    Right,
    /// arrow a+1 -> a
    Left,
}

/// An orientation of the A_n path 1 - 2 - ... - n.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TypeAQuiver {
    dirs: Vec<Dir>,
}

impl TypeAQuiver {
    pub fn new(dirs: Vec<Dir>) -> Result<Self> {
        if dirs.is_empty() || dirs.len() + 2 > crate::error::MAX_RANK + 1 {
            return Err(Error::BadQuiver(format!("{} edges", dirs.len())));
        }
        Ok(TypeAQuiver { dirs })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.dirs.len() + 1
    }

    /// Rank of the ambient symmetric group S_{n+1}.
    pub fn rank(&self) -> usize {
        self.n() + 1
    }

    pub fn dirs(&self) -> &[Dir] {
        &self.dirs
    }

    /// Endpoints (source, target) of edge a, 1 <= a <= n-1.
    pub fn arrow(&self, a: usize) -> (u8, u8) {
        match self.dirs[a - 1] {
            Dir::Right => (a as u8, a as u8 + 1),
            Dir::Left => (a as u8 + 1, a as u8),
        }
    }

    pub fn arrows(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        (1..self.n()).map(|a| self.arrow(a))
    }

    pub fn is_sink(&self, v: u8) -> bool {
        self.arrows().all(|(s, _)| s != v)
    }

    pub fn is_source(&self, v: u8) -> bool {
        self.arrows().all(|(_, t)| t != v)
    }

    pub fn sinks(&self) -> Vec<u8> {
        (1..=self.n() as u8).filter(|&v| self.is_sink(v)).collect()
    }

    pub fn sources(&self) -> Vec<u8> {
        (1..=self.n() as u8).filter(|&v| self.is_source(v)).collect()
    }

    /// Reverse all edges incident to `v`; only legal at a sink or source.
    pub fn mutate(&self, v: u8) -> Result<TypeAQuiver> {
        if v == 0 || v as usize > self.n() {
            return Err(Error::VertexOutOfRange(v));
        }
        if !self.is_sink(v) && !self.is_source(v) {
            return Err(Error::NotMutable(v));
        }
        let mut dirs = self.dirs.clone();
        let flip = |d: Dir| match d {
            Dir::Right => Dir::Left,
            Dir::Left => Dir::Right,
        };
        let v = v as usize;
        if v >= 2 {
            dirs[v - 2] = flip(dirs[v - 2]);
        }
        if v <= dirs.len() {
            dirs[v - 1] = flip(dirs[v - 1]);
        }
        Ok(TypeAQuiver { dirs })
    }

    /// The linear orientation 1 -> 2 -> ... -> n.
    pub fn linear(n: usize) -> Result<TypeAQuiver> {
        TypeAQuiver::new(vec![Dir::Right; n.saturating_sub(1)])
    }

    pub fn is_linear(&self) -> bool {
        self.dirs.iter().all(|&d| d == Dir::Right)
    }

    /// All 2^(n-1) orientations of the A_n path.
    pub fn all_orientations(n: usize) -> Vec<TypeAQuiver> {
        let e = n - 1;
        (0..1u32 << e)
            .map(|bits| TypeAQuiver {
                dirs: (0..e)
                    .map(|k| if bits >> k & 1 == 0 { Dir::Right } else { Dir::Left })
                    .collect(),
            })
            .collect()
    }
}

impl fmt::Display for TypeAQuiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in &self.dirs {
            f.write_str(match d {
                Dir::Right => ">",
                Dir::Left => "<",
            })?;
        }
        Ok(())
    }
}

impl FromStr for TypeAQuiver {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let dirs = s
            .chars()
            .map(|c| match c {
                '>' => Ok(Dir::Right),
                '<' => Ok(Dir::Left),
                _ => Err(Error::BadQuiver(s.to_string())),
            })
            .collect::<Result<Vec<_>>>()?;
        TypeAQuiver::new(dirs)
    }
}

impl Serialize for TypeAQuiver {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// The interval [i,j) naming the indecomposable M_{[i,j)} supported on
/// vertices i..j-1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Interval {
    lo: u8,
    hi: u8,
}

impl Interval {
    pub fn new(lo: u8, hi: u8) -> Result<Self> {
        if lo == 0 || lo >= hi {
            return Err(Error::BadInterval(format!("[{lo},{hi})")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn lo(&self) -> u8 {
        self.lo
    }

    pub fn hi(&self) -> u8 {
        self.hi
    }

    pub fn simple(v: u8) -> Self {
        Interval { lo: v, hi: v + 1 }
    }

    pub fn contains_vertex(&self, v: u8) -> bool {
        self.lo <= v && v < self.hi
    }

    pub fn dim(&self) -> usize {
        (self.hi - self.lo) as usize
    }

    pub fn support(&self) -> impl Iterator<Item = u8> {
        self.lo..self.hi
    }

    /// All intervals over an n-vertex quiver, ordered.
    pub fn all(n: usize) -> Vec<Interval> {
        let mut out = Vec::new();
        for lo in 1..=n as u8 {
            for hi in lo + 1..=n as u8 + 1 {
                out.push(Interval { lo, hi });
            }
        }
        out
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{})", self.lo, self.hi)
    }
}

impl FromStr for Interval {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadInterval(s.to_string());
        let body = s.strip_prefix('[').and_then(|t| t.strip_suffix(')')).ok_or_else(bad)?;
        let (a, b) = body.split_once(',').ok_or_else(bad)?;
        let lo = a.trim().parse::<u8>().map_err(|_| bad())?;
        let hi = b.trim().parse::<u8>().map_err(|_| bad())?;
        Interval::new(lo, hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Krull-Schmidt normal form: a multiset of intervals with multiplicities.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IsoClass {
    summands: BTreeMap<Interval, usize>,
}

impl IsoClass {
    pub fn zero() -> Self {
        IsoClass::default()
    }

    pub fn single(i: Interval) -> Self {
        let mut summands = BTreeMap::new();
        summands.insert(i, 1);
        IsoClass { summands }
    }

    pub fn from_multiset(items: impl IntoIterator<Item = (Interval, usize)>) -> Self {
        let mut summands = BTreeMap::new();
        for (i, m) in items {
            if m > 0 {
                *summands.entry(i).or_insert(0) += m;
            }
        }
        IsoClass { summands }
    }

    pub fn push(&mut self, i: Interval) {
        *self.summands.entry(i).or_insert(0) += 1;
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    pub fn summands(&self) -> impl Iterator<Item = (Interval, usize)> + '_ {
        self.summands.iter().map(|(&i, &m)| (i, m))
    }

    pub fn summand_count(&self) -> usize {
        self.summands.values().sum()
    }

    pub fn intervals(&self) -> impl Iterator<Item = Interval> + '_ {
        self.summands
            .iter()
            .flat_map(|(&i, &m)| std::iter::repeat(i).take(m))
    }

    pub fn total_dim(&self) -> usize {
        self.summands.iter().map(|(i, m)| i.dim() * m).sum()
    }

    pub fn dim_vec(&self, n: usize) -> Vec<usize> {
        let mut d = vec![0; n];
        for (i, m) in self.summands() {
            for v in i.support() {
                if (v as usize) <= n {
                    d[v as usize - 1] += m;
                }
            }
        }
        d
    }
}

impl fmt::Display for IsoClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, m) in self.summands() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if m == 1 {
                write!(f, "{i}")?;
            } else {
                write!(f, "{m}*{i}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for IsoClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// An explicit matrix representation of a type-A quiver over F_p.
#[derive(Debug, Clone)]
pub struct Rep {
    pub quiver: TypeAQuiver,
    pub p: u8,
    pub dims: Vec<usize>,
    /// maps[a-1] is the matrix of edge a, mapping the source vertex space to
    /// the target vertex space (rows = dim target, cols = dim source).
    pub maps: Vec<Mat>,
}

impl Rep {
    pub fn zero(quiver: &TypeAQuiver, p: u8) -> Rep {
        let n = quiver.n();
        let maps = (1..n).map(|_| Mat::zero(0, 0, p)).collect();
        Rep { quiver: quiver.clone(), p, dims: vec![0; n], maps }
    }

    pub fn total_dim(&self) -> usize {
        self.dims.iter().sum()
    }
}

/// The indicator representation of an interval: k on the support, identity on
/// internal arrows.
pub fn interval_to_rep(quiver: &TypeAQuiver, iv: Interval, p: u8) -> Rep {
    let n = quiver.n();
    let dims: Vec<usize> = (1..=n as u8)
        .map(|v| if iv.contains_vertex(v) && (v as usize) <= n { 1 } else { 0 })
        .collect();
    let maps = (1..n)
        .map(|a| {
            let (s, t) = quiver.arrow(a);
            let (ds, dt) = (dims[s as usize - 1], dims[t as usize - 1]);
            if ds == 1 && dt == 1 {
                Mat::identity(1, p)
            } else {
                Mat::zero(dt, ds, p)
            }
        })
        .collect();
    Rep { quiver: quiver.clone(), p, dims, maps }
}

pub fn direct_sum(a: &Rep, b: &Rep) -> Result<Rep> {
    if a.quiver != b.quiver || a.p != b.p {
        return Err(Error::QuiverMismatch);
    }
    let dims: Vec<usize> = a.dims.iter().zip(&b.dims).map(|(x, y)| x + y).collect();
    let mut maps = Vec::new();
    for e in 1..a.quiver.n() {
        let (s, t) = a.quiver.arrow(e);
        let (si, ti) = (s as usize - 1, t as usize - 1);
        let mut m = Mat::zero(dims[ti], dims[si], a.p);
        let (ma, mb) = (&a.maps[e - 1], &b.maps[e - 1]);
        for r in 0..ma.rows {
            for c in 0..ma.cols {
                m.set(r, c, ma.get(r, c));
            }
        }
        for r in 0..mb.rows {
            for c in 0..mb.cols {
                m.set(a.dims[ti] + r, a.dims[si] + c, mb.get(r, c));
            }
        }
        maps.push(m);
    }
    Ok(Rep { quiver: a.quiver.clone(), p: a.p, dims, maps })
}

pub fn rep_of_iso_class(quiver: &TypeAQuiver, cls: &IsoClass, p: u8) -> Rep {
    let mut acc = Rep::zero(quiver, p);
    for iv in cls.intervals() {
        acc = direct_sum(&acc, &interval_to_rep(quiver, iv, p)).expect("same quiver");
    }
    acc
}

/// dim Hom(M,N) over F_p: nullity of the commuting-square system
/// { phi_t M_a = N_a phi_s } over all arrows a: s -> t.
pub fn hom_dim(m: &Rep, n: &Rep) -> Result<usize> {
    Ok(hom_system(m, n)?.nullity())
}

fn hom_system(m: &Rep, n: &Rep) -> Result<Mat> {
    if m.quiver != n.quiver || m.p != n.p {
        return Err(Error::QuiverMismatch);
    }
    let nv = m.quiver.n();
    // variable layout: phi_v entry (r,c) at offset[v-1] + r*m.dims[v-1] + c
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let nvars = offset[nv];
    let mut rows: Vec<Vec<(usize, u8)>> = Vec::new();
    for e in 1..nv {
        let (s, t) = m.quiver.arrow(e);
        let (si, ti) = (s as usize - 1, t as usize - 1);
        let ma = &m.maps[e - 1];
        let na = &n.maps[e - 1];
        for i in 0..n.dims[ti] {
            for j in 0..m.dims[si] {
                let mut row: Vec<(usize, u8)> = Vec::new();
                for k in 0..m.dims[ti] {
                    let coef = ma.get(k, j);
                    if coef != 0 {
                        row.push((offset[ti] + i * m.dims[ti] + k, coef));
                    }
                }
                for k in 0..n.dims[si] {
                    let coef = na.get(i, k);
                    if coef != 0 {
                        row.push((offset[si] + k * m.dims[si] + j, (m.p - coef) % m.p));
                    }
                }
                if !row.is_empty() {
                    rows.push(row);
                }
            }
        }
    }
    let mut sys = Mat::zero(rows.len().max(1), nvars.max(1), m.p);
    if nvars == 0 {
        // no variables at all: rank 0 system of the right shape
        return Ok(Mat::zero(1, 0, m.p));
    }
    for (r, row) in rows.iter().enumerate() {
        for &(c, v) in row {
            let cur = sys.get(r, c);
            sys.set(r, c, (cur + v) % m.p);
        }
    }
    Ok(sys)
}

/// A basis of Hom(M,N), each element given by its per-vertex matrices.
pub fn hom_basis(m: &Rep, n: &Rep) -> Result<Vec<Vec<Mat>>> {
    let sys = hom_system(m, n)?;
    let kernel = sys.kernel_basis();
    let nv = m.quiver.n();
    let mut offset = vec![0usize; nv + 1];
    for v in 0..nv {
        offset[v + 1] = offset[v] + n.dims[v] * m.dims[v];
    }
    let mut out = Vec::new();
    for k in 0..kernel.cols {
        let mut phis = Vec::new();
        for v in 0..nv {
            let mut phi = Mat::zero(n.dims[v], m.dims[v], m.p);
            for r in 0..n.dims[v] {
                for c in 0..m.dims[v] {
                    phi.set(r, c, kernel.get(offset[v] + r * m.dims[v] + c, k));
                }
            }
            phis.push(phi);
        }
        out.push(phis);
    }
    Ok(out)
}

/// Euler form <d,e> = sum_v d_v e_v - sum_{a:s->t} d_s e_t; for hereditary kQ
/// this equals dim Hom - dim Ext^1.
pub fn euler_form(quiver: &TypeAQuiver, d: &[usize], e: &[usize]) -> i64 {
    let mut val: i64 = d.iter().zip(e).map(|(&x, &y)| (x * y) as i64).sum();
    for (s, t) in quiver.arrows() {
        val -= (d[s as usize - 1] * e[t as usize - 1]) as i64;
    }
    val
}

pub fn ext_dim(m: &Rep, n: &Rep) -> Result<usize> {
    let h = hom_dim(m, n)? as i64;
    let e = h - euler_form(&m.quiver, &m.dims, &n.dims);
    if e < 0 {
        return Err(Error::Internal(format!("negative Ext dimension {e}")));
    }
    Ok(e as usize)
}

/// Per-quiver computation context: interval list, memoized Hom/Ext tables
/// between intervals, and memoized mono/cokernel searches.
pub struct ModCtx {
    pub quiver: TypeAQuiver,
    pub p: u8,
    pub intervals: Vec<Interval>,
    hom_tab: Vec<Vec<usize>>,
    ext_tab: Vec<Vec<usize>>,
    index: HashMap<Interval, usize>,
    monos_memo: Mutex<HashMap<(IsoClass, IsoClass), std::collections::BTreeSet<IsoClass>>>,
    middle_memo: Mutex<HashMap<(Interval, Interval), Vec<IsoClass>>>,
}

impl ModCtx {
    pub fn new(quiver: &TypeAQuiver, p: u8) -> Result<ModCtx> {
        let p = check_char(p)?;
        let intervals = Interval::all(quiver.n());
        let reps: Vec<Rep> = intervals.iter().map(|&i| interval_to_rep(quiver, i, p)).collect();
        let mut hom_tab = vec![vec![0; intervals.len()]; intervals.len()];
        let mut ext_tab = vec![vec![0; intervals.len()]; intervals.len()];
        for (a, ra) in reps.iter().enumerate() {
            for (b, rb) in reps.iter().enumerate() {
                hom_tab[a][b] = hom_dim(ra, rb)?;
                ext_tab[a][b] = ext_dim(ra, rb)?;
            }
        }
        let index = intervals.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        Ok(ModCtx {
            quiver: quiver.clone(),
            p,
            intervals,
            hom_tab,
            ext_tab,
            index,
            monos_memo: Mutex::new(HashMap::new()),
            middle_memo: Mutex::new(HashMap::new()),
        })
    }

    pub fn hom_interval(&self, a: Interval, b: Interval) -> usize {
        self.hom_tab[self.index[&a]][self.index[&b]]
    }

    pub fn ext_interval(&self, a: Interval, b: Interval) -> usize {
        self.ext_tab[self.index[&a]][self.index[&b]]
    }

    pub fn rep_of(&self, cls: &IsoClass) -> Rep {
        rep_of_iso_class(&self.quiver, cls, self.p)
    }

    /// Krull-Schmidt decomposition by solving hom_dim(I, M) = sum_J mult_J *
    /// hom_dim(I, J) over all intervals; the hom-count matrix of a rep-finite
    /// hereditary algebra is invertible over Z.
    pub fn decompose(&self, m: &Rep) -> Result<IsoClass> {
        let k = self.intervals.len();
        if m.total_dim() == 0 {
            return Ok(IsoClass::zero());
        }
        let mut b: Vec<Ratio<i64>> = Vec::with_capacity(k);
        for &iv in &self.intervals {
            let r = interval_to_rep(&self.quiver, iv, self.p);
            b.push(Ratio::from_integer(hom_dim(&r, m)? as i64));
        }
        // exact Gaussian elimination on [H | b]
        let mut a: Vec<Vec<Ratio<i64>>> = (0..k)
            .map(|i| (0..k).map(|j| Ratio::from_integer(self.hom_tab[i][j] as i64)).collect())
            .collect();
        let mut perm: Vec<usize> = (0..k).collect();
        for col in 0..k {
            let piv = (col..k)
                .find(|&r| a[r][col] != Ratio::from_integer(0))
                .ok_or_else(|| Error::Internal("singular hom-count matrix".into()))?;
            a.swap(col, piv);
            b.swap(col, piv);
            perm.swap(col, piv);
            let inv = a[col][col].recip();
            for j in col..k {
                a[col][j] *= inv;
            }
            b[col] *= inv;
            for r in 0..k {
                if r != col && a[r][col] != Ratio::from_integer(0) {
                    let f = a[r][col];
                    for j in col..k {
                        let t = a[col][j] * f;
                        a[r][j] -= t;
                    }
                    let t = b[col] * f;
                    b[r] -= t;
                }
            }
        }
        let mut out = IsoClass::zero();
        let mut dim = 0usize;
        for (row, &_p) in perm.iter().enumerate() {
            let v = b[row];
            if !v.is_integer() || v < Ratio::from_integer(0) {
                return Err(Error::Internal(format!("non-integral multiplicity {v}")));
            }
            let mult = v.to_integer() as usize;
            if mult > 0 {
                let iv = self.intervals[row];
                dim += iv.dim() * mult;
                for _ in 0..mult {
                    out.push(iv);
                }
            }
        }
        if dim != m.total_dim() {
            return Err(Error::Internal(format!(
                "decomposition dim {dim} != module dim {}",
                m.total_dim()
            )));
        }
        Ok(out)
    }

    fn all_homs(&self, m: &Rep, n: &Rep) -> Result<Vec<Vec<Mat>>> {
        let basis = hom_basis(m, n)?;
        let h = basis.len();
        let total = (self.p as u64).checked_pow(h as u32).unwrap_or(u64::MAX);
        if total > 2_000_000 {
            return Err(Error::BoundExceeded(format!("{h}-dimensional hom space over F_{}", self.p)));
        }
        let nv = self.quiver.n();
        let mut out = Vec::with_capacity(total as usize);
        let mut coef = vec![0u8; h];
        loop {
            let mut phis: Vec<Mat> = (0..nv)
                .map(|v| Mat::zero(n.dims[v], m.dims[v], self.p))
                .collect();
            for (k, &c) in coef.iter().enumerate() {
                if c == 0 {
                    continue;
                }
                for v in 0..nv {
                    let bmat = &basis[k][v];
                    for r in 0..bmat.rows {
                        for cc in 0..bmat.cols {
                            let val = (phis[v].get(r, cc) as u16 + c as u16 * bmat.get(r, cc) as u16)
                                % self.p as u16;
                            phis[v].set(r, cc, val as u8);
                        }
                    }
                }
            }
            out.push(phis);
            // odometer
            let mut k = 0;
            while k < h {
                coef[k] += 1;
                if coef[k] < self.p {
                    break;
                }
                coef[k] = 0;
                k += 1;
            }
            if k == h {
                break;
            }
        }
        Ok(out)
    }

    fn cokernel(&self, m: &Rep, phi: &[Mat]) -> Rep {
        let nv = self.quiver.n();
        let qs: Vec<Mat> = (0..nv).map(|v| phi[v].left_kernel_basis()).collect();
        let dims: Vec<usize> = qs.iter().map(|q| q.rows).collect();
        let mut maps = Vec::new();
        for e in 1..nv {
            let (s, t) = self.quiver.arrow(e);
            let (si, ti) = (s as usize - 1, t as usize - 1);
            if dims[si] == 0 || dims[ti] == 0 {
                maps.push(Mat::zero(dims[ti], dims[si], self.p));
                continue;
            }
            // C_a Q_s = Q_t M_a; solve via a right inverse of Q_s (well defined
            // because Q_t M_a vanishes on im phi_s = ker Q_s).
            let srinv = qs[si].right_inverse();
            maps.push(qs[ti].mul(&m.maps[e - 1]).mul(&srinv));
        }
        Rep { quiver: self.quiver.clone(), p: self.p, dims, maps }
    }

    /// The set of cokernel iso-classes over all monomorphisms X -> M; empty
    /// iff no mono exists.
    pub fn monos_up_to_cokernel(
        &self,
        x: &IsoClass,
        m: &IsoClass,
    ) -> Result<std::collections::BTreeSet<IsoClass>> {
        let key = (x.clone(), m.clone());
        if let Some(hit) = self.monos_memo.lock().unwrap().get(&key) {
            return Ok(hit.clone());
        }
        let mut out = std::collections::BTreeSet::new();
        if x.total_dim() > m.total_dim() {
            self.monos_memo.lock().unwrap().insert(key, out.clone());
            return Ok(out);
        }
        let xr = self.rep_of(x);
        let mr = self.rep_of(m);
        for phi in self.all_homs(&xr, &mr)? {
            if phi.iter().all(|f| f.is_injective()) {
                let coker = self.cokernel(&mr, &phi);
                out.insert(self.decompose(&coker)?);
            }
        }
        self.monos_memo.lock().unwrap().insert(key, out.clone());
        Ok(out)
    }

    pub fn has_mono(&self, x: &IsoClass, m: &IsoClass) -> Result<bool> {
        Ok(!self.monos_up_to_cokernel(x, m)?.is_empty())
    }

    /// Interval-to-interval monomorphism with its closed-form cokernel
    /// {[i,l), [l',j)} (empty pieces dropped), or None if no mono exists.
    pub fn interval_mono_cokernel(&self, sub: Interval, big: Interval) -> Result<Option<IsoClass>> {
        if !self.has_mono(&IsoClass::single(sub), &IsoClass::single(big))? {
            return Ok(None);
        }
        debug_assert!(big.lo() <= sub.lo() && sub.hi() <= big.hi());
        let mut out = IsoClass::zero();
        if big.lo() < sub.lo() {
            out.push(Interval::new(big.lo(), sub.lo())?);
        }
        if sub.hi() < big.hi() {
            out.push(Interval::new(sub.hi(), big.hi())?);
        }
        Ok(Some(out))
    }

    /// All iso-classes E fitting in a short exact sequence 0 -> y -> E -> x -> 0,
    /// found by searching every iso-class with dim vector dim x + dim y for a
    /// mono from y with cokernel x.
    pub fn middle_terms(&self, x: Interval, y: Interval) -> Result<Vec<IsoClass>> {
        if let Some(hit) = self.middle_memo.lock().unwrap().get(&(x, y)) {
            return Ok(hit.clone());
        }
        let n = self.quiver.n();
        let mut target = vec![0usize; n];
        for v in x.support().chain(y.support()) {
            if (v as usize) <= n {
                target[v as usize - 1] += 1;
            }
        }
        let mut found = Vec::new();
        let want_coker = IsoClass::single(x);
        for cls in iso_classes_with_dim_vec(n, &target) {
            if self
                .monos_up_to_cokernel(&IsoClass::single(y), &cls)?
                .contains(&want_coker)
            {
                found.push(cls);
            }
        }
        self.middle_memo.lock().unwrap().insert((x, y), found.clone());
        Ok(found)
    }
}

/// All multisets of intervals with the given dimension vector.
pub fn iso_classes_with_dim_vec(n: usize, target: &[usize]) -> Vec<IsoClass> {
    let intervals = Interval::all(n);
    let mut out = Vec::new();
    let mut acc = Vec::new();
    fn rec(
        intervals: &[Interval],
        k: usize,
        left: &mut [usize],
        acc: &mut Vec<Interval>,
        out: &mut Vec<IsoClass>,
    ) {
        if left.iter().all(|&d| d == 0) {
            out.push(IsoClass::from_multiset(acc.iter().map(|&i| (i, 1))));
            return;
        }
        if k == intervals.len() {
            return;
        }
        let iv = intervals[k];
        let fits = |left: &[usize]| iv.support().all(|v| left[v as usize - 1] > 0);
        // try 0,1,2,... copies of intervals[k]
        rec(intervals, k + 1, left, acc, out);
        let mut used = 0;
        while fits(left) {
            for v in iv.support() {
                left[v as usize - 1] -= 1;
            }
            acc.push(iv);
            used += 1;
            rec(intervals, k + 1, left, acc, out);
        }
        for _ in 0..used {
            acc.pop();
            for v in iv.support() {
                left[v as usize - 1] += 1;
            }
        }
    }
    let mut left = target.to_vec();
    rec(&intervals, 0, &mut left, &mut acc, &mut out);
    out.sort();
    out.dedup();
    out
}

/// All iso-classes with total dimension <= max_dim (including zero).
pub fn iso_classes_up_to_dim(n: usize, max_dim: usize) -> Vec<IsoClass> {
    let intervals = Interval::all(n);
    let mut out = vec![IsoClass::zero()];
    let mut frontier = vec![IsoClass::zero()];
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for cls in &frontier {
            let min = cls.intervals().last();
            for &iv in &intervals {
                if let Some(m) = min {
                    if iv < m {
                        continue;
                    }
                }
                if cls.total_dim() + iv.dim() <= max_dim {
                    let mut bigger = cls.clone();
                    bigger.push(iv);
                    next.push(bigger);
                }
            }
        }
        next.sort();
        next.dedup();
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out.sort();
    out.dedup();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> TypeAQuiver {
        s.parse().unwrap()
    }

    #[test]
    fn sinks_sources_mutate() {
        let w = q("><"); // 1 -> 2 <- 3
        assert_eq!(w.sinks(), vec![2]);
        assert_eq!(w.sources(), vec![1, 3]);
        let m = w.mutate(2).unwrap();
        assert_eq!(m.to_string(), "<>");
        assert_eq!(m.mutate(2).unwrap(), w);
        assert!(q(">>").mutate(2).is_err()); // pass-through vertex
    }

    #[test]
    fn interval_reps() {
        let w = q("><");
        let r = interval_to_rep(&w, Interval::new(1, 2).unwrap(), 2);
        assert_eq!(r.dims, vec![1, 0, 0]);
        let r = interval_to_rep(&w, Interval::new(1, 4).unwrap(), 2);
        assert_eq!(r.dims, vec![1, 1, 1]);
        assert_eq!(r.maps[0], Mat::identity(1, 2));
        assert_eq!(r.maps[1], Mat::identity(1, 2));
        let r = interval_to_rep(&w, Interval::new(2, 4).unwrap(), 2);
        assert_eq!(r.dims, vec![0, 1, 1]);
        assert_eq!(r.maps[1], Mat::identity(1, 2));
    }

    #[test]
    fn hom_ext_basics() {
        // 1 <- 2
        let w = q("<");
        let s1 = interval_to_rep(&w, Interval::simple(1), 2);
        let s2 = interval_to_rep(&w, Interval::simple(2), 2);
        let p2 = interval_to_rep(&w, Interval::new(1, 3).unwrap(), 2);
        assert_eq!(hom_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(hom_dim(&p2, &p2).unwrap(), 1);
        assert_eq!(ext_dim(&s2, &s1).unwrap(), 1);
        assert_eq!(ext_dim(&s1, &s2).unwrap(), 0);
        assert_eq!(ext_dim(&p2, &p2).unwrap(), 0);
    }

    #[test]
    fn hom_linear_quiver_example() {
        // descending linear quiver 3 -> 2 -> 1 is "<<"; M_{02} = [1,3), M_{12} = [2,3)
        let w = q("<<");
        let m02 = interval_to_rep(&w, Interval::new(1, 3).unwrap(), 2);
        let m12 = interval_to_rep(&w, Interval::new(2, 3).unwrap(), 2);
        assert_eq!(hom_dim(&m02, &m12).unwrap(), 1);
    }

    #[test]
    fn decompose_round_trip() {
        for s in ["<", ">", "><", "<>", ">>"] {
            let w = q(s);
            let ctx = ModCtx::new(&w, 2).unwrap();
            for &a in &ctx.intervals {
                for &b in &ctx.intervals {
                    let sum = direct_sum(
                        &interval_to_rep(&w, a, 2),
                        &interval_to_rep(&w, b, 2),
                    )
                    .unwrap();
                    let mut want = IsoClass::single(a);
                    want.push(b);
                    assert_eq!(ctx.decompose(&sum).unwrap(), want);
                }
            }
        }
    }

    #[test]
    fn decompose_twisted_sum_of_simples() {
        // dims (1,1) with zero map on 1 <- 2 is S_1 + S_2; with identity it is [1,3)
        let w = q("<");
        let ctx = ModCtx::new(&w, 2).unwrap();
        let mut zero_map = interval_to_rep(&w, Interval::new(1, 3).unwrap(), 2);
        zero_map.maps[0] = Mat::zero(1, 1, 2);
        let mut want = IsoClass::single(Interval::simple(1));
        want.push(Interval::simple(2));
        assert_eq!(ctx.decompose(&zero_map).unwrap(), want);
    }

    #[test]
    fn mono_cokernels() {
        let w = q("><");
        let ctx = ModCtx::new(&w, 2).unwrap();
        let sub = Interval::new(2, 3).unwrap();
        let big = Interval::new(1, 4).unwrap();
        let coker = ctx.interval_mono_cokernel(sub, big).unwrap().unwrap();
        let mut want = IsoClass::single(Interval::new(1, 2).unwrap());
        want.push(Interval::new(3, 4).unwrap());
        assert_eq!(coker, want);
        // vertex 1 is a source here, so S_1 is not a submodule of [1,4)
        assert!(ctx.interval_mono_cokernel(Interval::simple(1), big).unwrap().is_none());
        // [2,4) into [1,4): cokernel S_1
        let coker = ctx
            .interval_mono_cokernel(Interval::new(2, 4).unwrap(), big)
            .unwrap()
            .unwrap();
        assert_eq!(coker, IsoClass::single(Interval::new(1, 2).unwrap()));
        // identity: zero cokernel
        let coker = ctx.interval_mono_cokernel(big, big).unwrap().unwrap();
        assert!(coker.is_zero());
    }

    #[test]
    fn socle_embedding_only() {
        // X = S_1, M = P_2 = [1,3) on 1 <- 2: only the socle embedding
        let w = q("<");
        let ctx = ModCtx::new(&w, 2).unwrap();
        let cokers = ctx
            .monos_up_to_cokernel(
                &IsoClass::single(Interval::simple(1)),
                &IsoClass::single(Interval::new(1, 3).unwrap()),
            )
            .unwrap();
        assert_eq!(cokers.len(), 1);
        assert!(cokers.contains(&IsoClass::single(Interval::simple(2))));
        // S_2 is a quotient of [1,3), not a sub
        let cokers = ctx
            .monos_up_to_cokernel(
                &IsoClass::single(Interval::simple(2)),
                &IsoClass::single(Interval::new(1, 3).unwrap()),
            )
            .unwrap();
        assert!(cokers.is_empty());
    }

    #[test]
    fn middle_terms_of_extension() {
        // on 1 <- 2: 0 -> S_1 -> ? -> S_2 -> 0 has middle terms S_1+S_2 and [1,3)
        let w = q("<");
        let ctx = ModCtx::new(&w, 2).unwrap();
        let mids = ctx.middle_terms(Interval::simple(2), Interval::simple(1)).unwrap();
        assert_eq!(mids.len(), 2);
    }

    #[test]
    fn hom_multiplicity_free() {
        for n in 2..=4 {
            for w in TypeAQuiver::all_orientations(n) {
                let ctx = ModCtx::new(&w, 2).unwrap();
                for &a in &ctx.intervals {
                    for &b in &ctx.intervals {
                        assert!(ctx.hom_interval(a, b) <= 1);
                        assert!(ctx.ext_interval(a, b) <= 1);
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display() {
        assert_eq!(q("><").to_string(), "><");
        assert!("x>".parse::<TypeAQuiver>().is_err());
        let iv: Interval = "[2,4)".parse().unwrap();
        assert_eq!(iv.to_string(), "[2,4)");
        assert!("[4,2)".parse::<Interval>().is_err());
    }
}
