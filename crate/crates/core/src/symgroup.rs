//! Symmetric-group combinatorics: one-line permutations, length, inversions,
//! Bruhat inversions, support, Coxeter elements and c-sortability.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result, MAX_RANK};
use crate::quiver_rep::TypeAQuiver;

/// An element of S_{n+1} in one-line notation w(1)...w(n+1).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn from_word(word: Vec<u8>) -> Result<Self> {
        let rank = word.len();
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        let mut seen = vec![false; rank + 1];
        for &x in &word {
            if x == 0 || x as usize > rank || seen[x as usize] {
                return Err(Error::BadPermutation(format!("{word:?}")));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation { word })
    }

    pub fn identity(rank: usize) -> Result<Self> {
        Permutation::from_word((1..=rank as u8).collect())
    }

    /// The simple reflection s_i as a one-line word.
    pub fn simple(i: u8, rank: usize) -> Result<Self> {
        if i == 0 || i as usize >= rank {
            return Err(Error::BadTransposition { i, j: i + 1, rank });
        }
        let mut word: Vec<u8> = (1..=rank as u8).collect();
        word.swap(i as usize - 1, i as usize);
        Permutation::from_word(word)
    }

    pub fn rank(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// w(k), 1-based.
    pub fn apply(&self, k: u8) -> u8 {
        self.word[k as usize - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word.iter().enumerate().all(|(k, &x)| x as usize == k + 1)
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.rank()];
        for (k, &x) in self.word.iter().enumerate() {
            word[x as usize - 1] = k as u8 + 1;
        }
        Permutation { word }
    }

    /// Position of the letter x in the one-line word, 1-based: w^{-1}(x).
    pub fn position_of(&self, x: u8) -> u8 {
        self.inverse_apply(x)
    }

    pub fn inverse_apply(&self, x: u8) -> u8 {
        self.word.iter().position(|&y| y == x).expect("letter in range") as u8 + 1
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rank() <= 9 {
            for &x in &self.word {
                write!(f, "{x}")?;
            }
        } else {
            let strs: Vec<String> = self.word.iter().map(|x| x.to_string()).collect();
            f.write_str(&strs.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::BadPermutation(s.to_string());
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<u8>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            s.trim()
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as u8).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        Permutation::from_word(word)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// (u o v)(k) = u(v(k)).
pub fn compose(u: &Permutation, v: &Permutation) -> Result<Permutation> {
    if u.rank() != v.rank() {
        return Err(Error::RankMismatch(u.rank(), v.rank()));
    }
    let word = (1..=u.rank() as u8).map(|k| u.apply(v.apply(k))).collect();
    Ok(Permutation { word })
}

/// The transposition (i j), normalized so i < j.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    i: u8,
    j: u8,
}

impl Transposition {
    pub fn new(i: u8, j: u8, rank: usize) -> Result<Self> {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == 0 || i == j || j as usize > rank {
            return Err(Error::BadTransposition { i, j, rank });
        }
        Ok(Transposition { i, j })
    }

    pub fn i(&self) -> u8 {
        self.i
    }

    pub fn j(&self) -> u8 {
        self.j
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} {})", self.i, self.j)
    }
}

impl Serialize for Transposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Left multiplication sigma * w: interchange the letters i and j in the
/// one-line word of w.
pub fn apply_transposition(sigma: Transposition, w: &Permutation) -> Result<Permutation> {
    if sigma.j as usize > w.rank() {
        return Err(Error::BadTransposition { i: sigma.i, j: sigma.j, rank: w.rank() });
    }
    Ok(swap_letters(w, sigma.i, sigma.j))
}

fn swap_letters(w: &Permutation, a: u8, b: u8) -> Permutation {
    let word = w
        .word
        .iter()
        .map(|&x| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        })
        .collect();
    Permutation { word }
}

/// l(w) = number of inversions.
pub fn length(w: &Permutation) -> usize {
    let mut count = 0;
    for a in 0..w.rank() {
        for b in a + 1..w.rank() {
            if w.word[a] > w.word[b] {
                count += 1;
            }
        }
    }
    count
}

/// inv(w) = { (i j) : i < j and j precedes i in the one-line word }.
pub fn inversions(w: &Permutation) -> BTreeSet<Transposition> {
    let mut out = BTreeSet::new();
    for a in 0..w.rank() {
        for b in a + 1..w.rank() {
            if w.word[a] > w.word[b] {
                out.insert(Transposition { i: w.word[b], j: w.word[a] });
            }
        }
    }
    out
}

/// Binv(w): inversions (i j) admitting no l with i < l < j and both (i l) and
/// (l j) inversions.  Equivalently the sigma in inv(w) with l(sigma w) = l(w) - 1.
pub fn bruhat_inversions(w: &Permutation) -> BTreeSet<Transposition> {
    let inv = inversions(w);
    inv.iter()
        .filter(|t| {
            !(t.i + 1..t.j).any(|l| {
                inv.contains(&Transposition { i: t.i, j: l })
                    && inv.contains(&Transposition { i: l, j: t.j })
            })
        })
        .copied()
        .collect()
}

/// supp(w) = { i in [1,n] : max{ w(k) : k <= i } > i }; the set of simple
/// reflections occurring in any reduced word for w.
pub fn support(w: &Permutation) -> BTreeSet<u8> {
    let mut out = BTreeSet::new();
    let mut prefix_max = 0u8;
    for i in 1..w.rank() as u8 {
        prefix_max = prefix_max.max(w.apply(i));
        if prefix_max > i {
            out.insert(i);
        }
    }
    out
}

/// Smallest-available-sink topological order of the vertices in `active`:
/// s_i comes before s_j whenever the induced quiver has an arrow j -> i.
fn sink_order(quiver: &TypeAQuiver, active: &BTreeSet<u8>) -> Vec<u8> {
    let mut remaining = active.clone();
    let mut order = Vec::with_capacity(remaining.len());
    while !remaining.is_empty() {
        let v = *remaining
            .iter()
            .find(|&&v| {
                quiver
                    .arrows()
                    .all(|(s, t)| s != v || !remaining.contains(&t))
            })
            .expect("acyclic quiver always has a sink");
        order.push(v);
        remaining.remove(&v);
    }
    order
}

/// The Coxeter element c_Q: the product of all simple reflections, ordered so
/// that s_i precedes s_j whenever Q has an arrow j -> i.  Returns the defining
/// word together with the resulting permutation.
pub fn coxeter_element(quiver: &TypeAQuiver) -> (Vec<u8>, Permutation) {
    let active: BTreeSet<u8> = (1..=quiver.n() as u8).collect();
    let word = sink_order(quiver, &active);
    let rank = quiver.rank();
    let mut perm = Permutation::identity(rank).expect("rank bounded by quiver ctor");
    for &i in &word {
        let s = Permutation::simple(i, rank).expect("vertex in range");
        perm = compose(&perm, &s).expect("same rank");
    }
    (word, perm)
}

/// Witness of c_Q-sortability: a reduced expression c^0 c^1 ... c^t where each
/// factor is a subword of c_Q and the supports are weakly nested.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SortabilityCertificate {
    factors: Vec<Vec<u8>>,
    rank: usize,
}

impl SortabilityCertificate {
    pub fn factors(&self) -> &[Vec<u8>] {
        &self.factors
    }

    /// The full reduced word, factors concatenated in order.
    pub fn word(&self) -> Vec<u8> {
        self.factors.concat()
    }

    /// The permutation the certificate multiplies out to.
    pub fn permutation(&self) -> Permutation {
        let mut perm = Permutation::identity(self.rank).expect("rank validated at build");
        for i in self.word() {
            let s = Permutation::simple(i, self.rank).expect("letter in range");
            perm = compose(&perm, &s).expect("same rank");
        }
        perm
    }
}

impl fmt::Display for SortabilityCertificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("e");
        }
        let parts: Vec<String> = self
            .factors
            .iter()
            .map(|factor| {
                factor
                    .iter()
                    .map(|i| format!("s{i}"))
                    .collect::<Vec<_>>()
                    .join("·")
            })
            .collect();
        f.write_str(&parts.join("|"))
    }
}

/// Decide c_Q-sortability by the sink recursion: peel sinks of the evolving
/// quiver in pass order, left-multiplying whenever the length drops and
/// permanently discarding a sink q only when q is outside the support of what
/// remains.  The letters absorbed per pass are exactly the factors c^k.
pub fn is_c_sortable(
    w: &Permutation,
    quiver: &TypeAQuiver,
) -> Result<Option<SortabilityCertificate>> {
    if w.rank() != quiver.rank() {
        return Err(Error::RankMismatch(w.rank(), quiver.rank()));
    }
    let mut cur = w.clone();
    let mut active: BTreeSet<u8> = (1..=quiver.n() as u8).collect();
    let mut factors: Vec<Vec<u8>> = Vec::new();
    while !cur.is_identity() {
        let mut factor = Vec::new();
        let mut len = length(&cur);
        for q in sink_order(quiver, &active) {
            let next = swap_letters(&cur, q, q + 1);
            let next_len = length(&next);
            if next_len < len {
                cur = next;
                len = next_len;
                factor.push(q);
            } else if support(&cur).contains(&q) {
                return Ok(None);
            } else {
                active.remove(&q);
            }
        }
        if factor.is_empty() {
            // no progress and still not the identity: not sortable
            return Ok(None);
        }
        factors.push(factor);
    }
    Ok(Some(SortabilityCertificate { factors, rank: w.rank() }))
}

/// Iterator over all of S_rank in lexicographic one-line order.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl AllPermutations {
    pub fn new(rank: usize) -> Result<Self> {
        if rank == 0 || rank > MAX_RANK {
            return Err(Error::RankTooLarge(rank));
        }
        Ok(AllPermutations { next: Some((1..=rank as u8).collect()) })
    }
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let word = self.next.take()?;
        // standard next_permutation step
        let mut succ = word.clone();
        let n = succ.len();
        if let Some(k) = (0..n.saturating_sub(1)).rev().find(|&k| succ[k] < succ[k + 1]) {
            let l = (k + 1..n).rev().find(|&l| succ[l] > succ[k]).unwrap();
            succ.swap(k, l);
            succ[k + 1..].reverse();
            self.next = Some(succ);
        }
        Some(Permutation { word })
    }
}

/// All c_Q-sortable elements, in lexicographic order on one-line words.
pub fn enumerate_c_sortables(quiver: &TypeAQuiver) -> Result<Vec<Permutation>> {
    let mut out = Vec::new();
    for w in AllPermutations::new(quiver.rank())? {
        if is_c_sortable(&w, quiver)?.is_some() {
            out.push(w);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn q(s: &str) -> TypeAQuiver {
        s.parse().unwrap()
    }

    fn t(i: u8, j: u8) -> Transposition {
        Transposition::new(i, j, MAX_RANK).unwrap()
    }

    #[test]
    fn compose_basics() {
        let e = Permutation::identity(3).unwrap();
        let w = p("231");
        assert_eq!(compose(&e, &w).unwrap(), w);
        assert_eq!(compose(&p("21"), &p("21")).unwrap(), p("12"));
        // s_2 o s_1 sends 1 -> 2 -> 3, 2 -> 1, 3 -> 3 -> 2
        let s1 = Permutation::simple(1, 3).unwrap();
        let s2 = Permutation::simple(2, 3).unwrap();
        let u = compose(&s2, &s1).unwrap();
        assert_eq!(u, p("312"));
        assert_eq!(length(&u), 2);
    }

    #[test]
    fn transposition_swaps_letters() {
        assert_eq!(apply_transposition(t(1, 2), &p("12")).unwrap(), p("21"));
        assert_eq!(apply_transposition(t(2, 5), &p("534216")).unwrap(), p("234516"));
        let w = p("534216");
        let back = apply_transposition(t(2, 5), &apply_transposition(t(2, 5), &w).unwrap()).unwrap();
        assert_eq!(back, w);
    }

    #[test]
    fn length_and_inversions() {
        assert_eq!(length(&Permutation::identity(4).unwrap()), 0);
        assert_eq!(length(&p("534216")), 9);
        assert_eq!(length(&p("4321")), 6);
        let want: BTreeSet<_> = [
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 5),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 5),
            (4, 5),
        ]
        .iter()
        .map(|&(i, j)| t(i, j))
        .collect();
        assert_eq!(inversions(&p("534216")), want);
        assert_eq!(
            inversions(&p("3412")),
            [(1, 3), (1, 4), (2, 3), (2, 4)].iter().map(|&(i, j)| t(i, j)).collect()
        );
    }

    #[test]
    fn bruhat_inversion_lists() {
        let want: BTreeSet<_> = [(1, 2), (2, 3), (2, 4), (3, 5), (4, 5)]
            .iter()
            .map(|&(i, j)| t(i, j))
            .collect();
        assert_eq!(bruhat_inversions(&p("534216")), want);
        assert!(bruhat_inversions(&Permutation::identity(3).unwrap()).is_empty());
        assert_eq!(
            bruhat_inversions(&p("321")),
            [(1, 2), (2, 3)].iter().map(|&(i, j)| t(i, j)).collect()
        );
    }

    #[test]
    fn support_by_prefix_maxima() {
        assert!(support(&Permutation::identity(5).unwrap()).is_empty());
        assert_eq!(support(&p("1423")), [2, 3].into_iter().collect());
        assert_eq!(support(&p("3412")), [1, 2, 3].into_iter().collect());
    }

    #[test]
    fn coxeter_elements() {
        // 1 <- 2: vertex 1 is the sink
        let (word, _) = coxeter_element(&q("<"));
        assert_eq!(word, vec![1, 2]);
        let (word, c) = coxeter_element(&q("><"));
        assert_eq!(word, vec![2, 1, 3]);
        assert_eq!(c, p("3142"));
        let (word, _) = coxeter_element(&q(">>"));
        assert_eq!(word, vec![3, 2, 1]);
    }

    #[test]
    fn sortables_for_one_edge() {
        // Q = 1 <- 2: exactly e, s_1, s_2, s_1 s_2, s_1 s_2 s_1
        let quiver = q("<");
        let sortables = enumerate_c_sortables(&quiver).unwrap();
        let words: Vec<String> = sortables.iter().map(|w| w.to_string()).collect();
        assert_eq!(words, vec!["123", "132", "213", "231", "321"]);
        let cert = is_c_sortable(&p("321"), &quiver).unwrap().unwrap();
        assert_eq!(cert.factors(), &[vec![1, 2], vec![1]]);
        // s_2 s_1 = 312 is the unique element of S_3 that is not c_Q-sortable
        assert!(is_c_sortable(&p("312"), &quiver).unwrap().is_none());
    }

    #[test]
    fn fourteen_sortables_and_certificates() {
        let quiver = q("><");
        let sortables = enumerate_c_sortables(&quiver).unwrap();
        assert_eq!(sortables.len(), 14);
        let cert = is_c_sortable(&p("3412"), &quiver).unwrap().unwrap();
        assert_eq!(cert.factors(), &[vec![2, 1, 3], vec![2]]);
        assert_eq!(cert.to_string(), "s2·s1·s3|s2");
        assert_eq!(cert.permutation(), p("3412"));
        let cert = is_c_sortable(&p("1432"), &quiver).unwrap().unwrap();
        assert_eq!(cert.factors(), &[vec![2, 3], vec![2]]);
    }

    #[test]
    fn sortable_counts_are_catalan() {
        // |sortables| = Catalan(n+1) for every orientation
        let catalan = [1usize, 1, 2, 5, 14, 42, 132];
        for n in 2..=4 {
            for quiver in TypeAQuiver::all_orientations(n) {
                assert_eq!(
                    enumerate_c_sortables(&quiver).unwrap().len(),
                    catalan[n + 1],
                    "orientation {quiver}"
                );
            }
        }
    }

    #[test]
    fn certificate_supports_nested_and_reduced() {
        for quiver in TypeAQuiver::all_orientations(3) {
            for w in AllPermutations::new(4).unwrap() {
                if let Some(cert) = is_c_sortable(&w, &quiver).unwrap() {
                    assert_eq!(cert.word().len(), length(&w));
                    assert_eq!(cert.permutation(), w);
                    for pair in cert.factors().windows(2) {
                        let a: BTreeSet<u8> = pair[0].iter().copied().collect();
                        let b: BTreeSet<u8> = pair[1].iter().copied().collect();
                        assert!(b.is_subset(&a));
                    }
                }
            }
        }
    }

    #[test]
    fn parse_display_round_trip() {
        assert_eq!(p("534216").to_string(), "534216");
        let long: Permutation = "10,9,8,7,6,5,4,3,2,1".parse().unwrap();
        assert_eq!(long.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert!("1224".parse::<Permutation>().is_err());
        assert!("120".parse::<Permutation>().is_err());
    }

    proptest! {
        #[test]
        fn compose_associative(a in 0usize..120, b in 0usize..120, c in 0usize..120) {
            let all: Vec<Permutation> = AllPermutations::new(5).unwrap().collect();
            let (u, v, w) = (&all[a], &all[b], &all[c]);
            let left = compose(&compose(u, v).unwrap(), w).unwrap();
            let right = compose(u, &compose(v, w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn inverse_is_inverse(a in 0usize..120) {
            let all: Vec<Permutation> = AllPermutations::new(5).unwrap().collect();
            let w = &all[a];
            prop_assert!(compose(w, &w.inverse()).unwrap().is_identity());
            prop_assert_eq!(length(&w.inverse()), length(w));
        }

        #[test]
        fn bruhat_inversions_drop_length(a in 0usize..120) {
            let all: Vec<Permutation> = AllPermutations::new(5).unwrap().collect();
            let w = &all[a];
            let inv = inversions(w);
            for sigma in inv.iter() {
                let sw = apply_transposition(*sigma, w).unwrap();
                let is_bruhat = bruhat_inversions(w).contains(sigma);
                prop_assert_eq!(is_bruhat, length(&sw) == length(w) - 1);
            }
        }
    }
}
