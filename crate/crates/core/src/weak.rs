//! Weak order on ASMs: the operators `pi_i` and `pi_i^C`, descents, the
//! operator graph and saturated chains.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use crate::asm::{check_index, Asm, Permutation, RankMatrix};
use crate::error::{Error, Result};
use crate::order::{enumerate_asms, leq_strong, meet, perm_set, AsmSet};
use crate::poset::{operator_graph, reachable, PosetGraph};

/// `pi_i(A)`: raises row `i` of the rank function to
/// `min(rk(i-1, j) + 1, rk(i+1, j))`, the pointwise largest admissible row.
pub fn pi(a: &Asm, i: usize) -> Result<Asm> {
    check_index(i, a.n())?;
    let rk = RankMatrix::from_fn(a.n(), |r, j| {
        if r == i {
            (a.rank(i - 1, j) + 1).min(a.rank(i + 1, j)) as i64
        } else {
            a.rank(r, j) as i64
        }
    })?;
    Ok(rk.to_asm())
}

/// `pi_i` by definition: the meet of all ASMs whose rank function agrees
/// with `rk_A` outside row `i`.
pub fn pi_brute(a: &Asm, i: usize) -> Result<Asm> {
    check_index(i, a.n())?;
    let n = a.n();
    let all = enumerate_asms(n)?;
    let agreeing: Vec<&Asm> = all
        .iter()
        .filter(|b| {
            (0..=n)
                .filter(|&r| r != i)
                .all(|r| (0..=n).all(|j| b.rank(r, j) == a.rank(r, j)))
        })
        .collect();
    meet(agreeing)
}

/// `pi_i^C(A) = pi_i(A^T)^T`.
pub fn pi_col(a: &Asm, i: usize) -> Result<Asm> {
    Ok(pi(&a.transpose(), i)?.transpose())
}

/// Applies a chain word right to left: `(a_1, ..., a_k)` applies `pi_{a_k}` first.
pub fn pi_word(a: &Asm, word: &[usize]) -> Result<Asm> {
    word.iter().rev().try_fold(a.clone(), |x, &i| pi(&x, i))
}

/// Column version of [`pi_word`].
pub fn pi_col_word(a: &Asm, word: &[usize]) -> Result<Asm> {
    word.iter().rev().try_fold(a.clone(), |x, &i| pi_col(&x, i))
}

fn pi_unchecked(a: &Asm, i: usize) -> Asm {
    pi(a, i).expect("index in range")
}

/// `{i : pi_i(A) != A}`.
pub fn descents(a: &Asm) -> Vec<usize> {
    (1..a.n()).filter(|&i| &pi_unchecked(a, i) != a).collect()
}

pub fn maj(a: &Asm) -> usize {
    descents(a).iter().sum()
}

/// `A ⪯ B`: `A` is reached from `B` by operator applications.
///
/// The search is pruned to elements strongly above `A`, since weak order
/// refines strong order.
pub fn is_weak_leq(a: &Asm, b: &Asm) -> Result<bool> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    let n = a.n();
    let mut seen = BTreeSet::new();
    let mut queue = VecDeque::from([b.clone()]);
    seen.insert(b.clone());
    while let Some(x) = queue.pop_front() {
        if &x == a {
            return Ok(true);
        }
        for i in 1..n {
            let y = pi_unchecked(&x, i);
            if y != x && leq_strong(a, &y)? && seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    Ok(false)
}

/// Operator graph on all of `ASM(n)`.
pub fn weak_poset(n: usize) -> Result<PosetGraph> {
    let all = enumerate_asms(n)?;
    Ok(operator_graph(n, all.members(), pi_unchecked))
}

/// Operator graph on the interval below `A`.
pub fn weak_interval(a: &Asm) -> PosetGraph {
    let nodes = reachable(a.n(), a.clone(), pi_unchecked);
    operator_graph(a.n(), &nodes, pi_unchecked)
}

/// Elements of the interval below `A`, sorted.
pub fn weak_interval_elements(a: &Asm) -> Vec<Asm> {
    reachable(a.n(), a.clone(), pi_unchecked)
}

/// Elements with nothing strictly above them in weak order.
///
/// `A` has a strict upper bound iff it is a strict operator image of some
/// element, since the order is the closure of those steps.
pub fn maximal_weak_elements(n: usize) -> Result<AsmSet> {
    let all = enumerate_asms(n)?;
    let mut images = BTreeSet::new();
    for x in &all {
        for i in 1..n {
            let y = pi_unchecked(x, i);
            if &y != x {
                images.insert(y);
            }
        }
    }
    let max = all.iter().filter(|a| !images.contains(*a)).cloned().collect();
    AsmSet::new(n, max)
}

/// `(a_1, ..., a_k)` with `A_{m-1} = pi_{a_m}(A_m)`, `A_0` the identity
/// and `A_k` the top.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ChainWord {
    pub word: Vec<usize>,
}

impl ChainWord {
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    /// `s_{a_1} s_{a_2} ... s_{a_k}` in `S_n`.
    pub fn product(&self, n: usize) -> Result<Permutation> {
        Permutation::from_word(n, &self.word)
    }
}

impl fmt::Display for ChainWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.word.iter().map(|a| a.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Depth-first enumeration of saturated chains from `A` down to the
/// identity, descents taken in ascending order.
pub struct Chains {
    n: usize,
    max_len: Option<usize>,
    // (element, next label to try); `path` holds labels in application order
    stack: Vec<(Asm, usize)>,
    path: Vec<usize>,
}

impl Iterator for Chains {
    type Item = ChainWord;

    fn next(&mut self) -> Option<ChainWord> {
        loop {
            let depth = self.stack.len();
            let top = self.stack.last_mut()?;
            if top.1 == 1 && top.0.to_permutation().is_some_and(|w| w.is_identity()) {
                let mut word = self.path.clone();
                word.reverse();
                self.stack.pop();
                self.path.pop();
                return Some(ChainWord { word });
            }
            let bounded = self.max_len.is_some_and(|m| depth > m);
            let mut found = None;
            while !bounded && top.1 < self.n {
                let i = top.1;
                top.1 += 1;
                let y = pi_unchecked(&top.0, i);
                if y != top.0 {
                    found = Some((y, i));
                    break;
                }
            }
            match found {
                Some((y, i)) => {
                    self.stack.push((y, 1));
                    self.path.push(i);
                }
                None => {
                    self.stack.pop();
                    self.path.pop();
                }
            }
        }
    }
}

/// All saturated chains below `A`, optionally truncated at `max_len` steps.
pub fn chains(a: &Asm, max_len: Option<usize>) -> Chains {
    Chains {
        n: a.n(),
        max_len,
        stack: vec![(a.clone(), 1)],
        path: Vec::new(),
    }
}

/// Length of a shortest saturated chain, by breadth-first search.
pub fn min_chain_length(a: &Asm) -> usize {
    let n = a.n();
    let id = Asm::identity(n);
    let mut dist = HashMap::from([(a.clone(), 0usize)]);
    let mut queue = VecDeque::from([a.clone()]);
    while let Some(x) = queue.pop_front() {
        let d = dist[&x];
        if x == id {
            return d;
        }
        for i in 1..n {
            let y = pi_unchecked(&x, i);
            if y != x && !dist.contains_key(&y) {
                dist.insert(y.clone(), d + 1);
                queue.push_back(y);
            }
        }
    }
    unreachable!("every ASM reaches the identity")
}

/// Shortest and longest chain lengths from each element down to the identity.
fn chain_length_range(a: &Asm, memo: &mut BTreeMap<Asm, (usize, usize)>) -> (usize, usize) {
    if let Some(&r) = memo.get(a) {
        return r;
    }
    let mut range: Option<(usize, usize)> = None;
    for i in 1..a.n() {
        let y = pi_unchecked(a, i);
        if &y != a {
            let (lo, hi) = chain_length_range(&y, memo);
            range = Some(match range {
                None => (lo + 1, hi + 1),
                Some((l, h)) => (l.min(lo + 1), h.max(hi + 1)),
            });
        }
    }
    let r = range.unwrap_or((0, 0));
    memo.insert(a.clone(), r);
    r
}

/// Whether every saturated chain below `A` has the same length.
pub fn all_chains_equal_length(a: &Asm) -> bool {
    let (lo, hi) = chain_length_range(a, &mut BTreeMap::new());
    lo == hi
}

/// Whether all members of the permutation set share one length.
pub fn is_equidimensional(a: &Asm) -> bool {
    let lengths: BTreeSet<usize> = perm_set(a)
        .perms()
        .iter()
        .map(Permutation::coxeter_length)
        .collect();
    lengths.len() <= 1
}

/// Every chain word is reduced, and its product lies above some member of
/// the permutation set.
pub fn every_chain_word_is_reduced(a: &Asm) -> bool {
    let n = a.n();
    let ps = perm_set(a);
    chains(a, None).all(|c| {
        let w = c.product(n).expect("labels in range");
        w.coxeter_length() == c.len() && ps.perms().iter().any(|v| v.bruhat_leq(&w))
    })
}
