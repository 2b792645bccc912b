//! Strong order on ASMs: comparison, lattice operations, covers,
//! enumeration and the permutation set.

use crate::antichain::Antichain;
use crate::asm::{Asm, BigrassTriple, Cell, Permutation, RankMatrix};
use crate::error::{Error, Result};
use crate::poset::PosetGraph;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest `n` accepted by [`enumerate_asms`].
pub const DEFAULT_ENUM_BOUND: usize = 6;

/// A set of same-size ASMs, kept sorted by entries without duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AsmSet {
    n: usize,
    members: Vec<Asm>,
}

impl AsmSet {
    pub fn new(n: usize, mut members: Vec<Asm>) -> Result<Self> {
        if let Some(a) = members.iter().find(|a| a.n() != n) {
            return Err(Error::SizeMismatch {
                left: n,
                right: a.n(),
            });
        }
        members.sort();
        members.dedup();
        Ok(AsmSet { n, members })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn members(&self) -> &[Asm] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, a: &Asm) -> bool {
        self.members.binary_search(a).is_ok()
    }

    /// Position of `a` in the sorted member list.
    pub fn index_of(&self, a: &Asm) -> Option<usize> {
        self.members.binary_search(a).ok()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Asm> {
        self.members.iter()
    }
}

impl IntoIterator for AsmSet {
    type Item = Asm;
    type IntoIter = std::vec::IntoIter<Asm>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.into_iter()
    }
}

impl<'a> IntoIterator for &'a AsmSet {
    type Item = &'a Asm;
    type IntoIter = std::slice::Iter<'a, Asm>;

    fn into_iter(self) -> Self::IntoIter {
        self.members.iter()
    }
}

fn same_n(a: &Asm, b: &Asm) -> Result<()> {
    if a.n() != b.n() {
        return Err(Error::SizeMismatch {
            left: a.n(),
            right: b.n(),
        });
    }
    Ok(())
}

/// `A <= B` in strong order, i.e. `rk_A >= rk_B` pointwise.
pub fn leq_strong(a: &Asm, b: &Asm) -> Result<bool> {
    same_n(a, b)?;
    let n = a.n();
    for i in 1..n {
        for j in 1..n {
            if a.rank(i, j) < b.rank(i, j) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn combine<'a>(
    items: impl IntoIterator<Item = &'a Asm>,
    pick: impl Fn(u8, u8) -> u8,
) -> Result<Asm> {
    let ranks: Vec<&RankMatrix> = items.into_iter().map(Asm::rank_matrix).collect();
    let r = RankMatrix::pointwise(&ranks, pick)?;
    let checked = RankMatrix::from_fn(r.n(), |i, j| r.get(i, j) as i64)?;
    Ok(checked.to_asm())
}

/// Least upper bound: pointwise minimum of rank functions.
pub fn join<'a>(items: impl IntoIterator<Item = &'a Asm>) -> Result<Asm> {
    combine(items, u8::min)
}

/// Greatest lower bound: pointwise maximum of rank functions.
pub fn meet<'a>(items: impl IntoIterator<Item = &'a Asm>) -> Result<Asm> {
    combine(items, u8::max)
}

/// All of `ASM(n)`, lexicographic on flattened entries, for `n <= 6`.
pub fn enumerate_asms(n: usize) -> Result<AsmSet> {
    enumerate_asms_bounded(n, DEFAULT_ENUM_BOUND)
}

pub fn enumerate_asms_bounded(n: usize, bound: usize) -> Result<AsmSet> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "ASM enumeration",
            n,
            bound,
        });
    }
    let mut out = Vec::new();
    let mut entries = vec![0i8; n * n];
    let mut cols = vec![0i8; n];
    extend(n, 0, 0, &mut entries, &mut cols, &mut out);
    Ok(AsmSet { n, members: out })
}

// Fills position `pos` (row-major); `row_sum` is the prefix sum of the current row.
fn extend(
    n: usize,
    pos: usize,
    row_sum: i8,
    entries: &mut [i8],
    cols: &mut [i8],
    out: &mut Vec<Asm>,
) {
    if pos == n * n {
        out.push(Asm::from_entries(n, entries.to_vec()));
        return;
    }
    let c = pos % n;
    for v in [-1i8, 0, 1] {
        let rs = row_sum + v;
        let cs = cols[c] + v;
        if !(0..=1).contains(&rs) || !(0..=1).contains(&cs) {
            continue;
        }
        if c == n - 1 && rs != 1 {
            continue;
        }
        entries[pos] = v;
        cols[c] = cs;
        let next = if c == n - 1 { 0 } else { rs };
        extend(n, pos + 1, next, entries, cols, out);
        cols[c] -= v;
    }
    entries[pos] = 0;
}

/// The ASM covered by `A` obtained by raising `rk_A` by one at an
/// essential cell.
pub fn bump_at_essential(a: &Asm, c: Cell) -> Result<Asm> {
    if !a.essential_set().contains(&c) {
        return Err(Error::NotEssential {
            row: c.row,
            col: c.col,
        });
    }
    let mut rows = a.rows();
    let (i, j) = (c.row - 1, c.col - 1);
    rows[i][j] += 1;
    rows[i + 1][j + 1] += 1;
    rows[i + 1][j] -= 1;
    rows[i][j + 1] -= 1;
    Asm::new(&rows)
}

/// ASMs covered by `A` in strong order, sorted.
pub fn lower_covers(a: &Asm) -> AsmSet {
    let members = a
        .essential_set()
        .into_iter()
        .map(|c| bump_at_essential(a, c).expect("essential cells admit a bump"))
        .collect();
    AsmSet::new(a.n(), members).expect("uniform size")
}

/// ASMs covering `A` in strong order, sorted.
pub fn upper_covers(a: &Asm) -> AsmSet {
    let n = a.n();
    let mut members = Vec::new();
    for i in 1..n {
        for j in 1..n {
            if a.rank(i, j) == 0 {
                continue;
            }
            let candidate = RankMatrix::from_fn(n, |r, s| {
                let v = a.rank(r, s) as i64;
                if (r, s) == (i, j) {
                    v - 1
                } else {
                    v
                }
            });
            if let Ok(rk) = candidate {
                let b = rk.to_asm();
                if b.essential_set().contains(&Cell::new(i, j)) {
                    members.push(b);
                }
            }
        }
    }
    AsmSet::new(n, members).expect("uniform size")
}

/// Bruhat-minimal permutations `w >= A`.
pub fn perm_set(a: &Asm) -> Antichain {
    if let Some(w) = a.to_permutation() {
        return Antichain::from_sorted_unchecked(a.n(), vec![w]);
    }
    let ess: Vec<(usize, usize, usize)> = a
        .essential_set()
        .into_iter()
        .map(|c| (c.row, c.col, a.rank(c.row, c.col)))
        .collect();
    let mut above: Vec<Permutation> = Permutation::all(a.n())
        .into_iter()
        .filter(|w| ess.iter().all(|&(i, j, r)| w.rank(i, j) <= r))
        .collect();
    above.sort_by_cached_key(|w| (w.coxeter_length(), w.clone()));
    let mut minimal: Vec<Permutation> = Vec::new();
    for w in above {
        if !minimal.iter().any(|v| v.bruhat_leq(&w)) {
            minimal.push(w);
        }
    }
    minimal.sort();
    Antichain::from_sorted_unchecked(a.n(), minimal)
}

/// Minimum Coxeter length over the permutation set.
pub fn codim(a: &Asm) -> usize {
    perm_set(a)
        .perms()
        .iter()
        .map(Permutation::coxeter_length)
        .min()
        .unwrap_or(0)
}

/// One bigrassmannian per essential cell; their join is `A`.
pub fn bigrass_decomposition(a: &Asm) -> Vec<BigrassTriple> {
    a.essential_set()
        .into_iter()
        .map(|c| {
            BigrassTriple::new(c.row, c.col, a.rank(c.row, c.col), a.n())
                .expect("essential cells give valid triples")
        })
        .collect()
}

/// Hasse diagram of strong order on `ASM(n)`, built from lower covers.
pub fn strong_poset(n: usize) -> Result<PosetGraph> {
    let all = enumerate_asms(n)?;
    Ok(cover_graph(n, all.members()))
}

/// Hasse diagram of the strong-order interval below `A`.
pub fn strong_interval(a: &Asm) -> PosetGraph {
    let mut seen = BTreeSet::from([a.clone()]);
    let mut stack = vec![a.clone()];
    while let Some(x) = stack.pop() {
        for y in lower_covers(&x) {
            if seen.insert(y.clone()) {
                stack.push(y);
            }
        }
    }
    let nodes: Vec<Asm> = seen.into_iter().collect();
    cover_graph(a.n(), &nodes)
}

// `nodes` is sorted and closed under lower covers
fn cover_graph(n: usize, nodes: &[Asm]) -> PosetGraph {
    let edges = nodes
        .par_iter()
        .enumerate()
        .map(|(s, x)| {
            lower_covers(x)
                .iter()
                .map(|y| (s, nodes.binary_search(y).expect("closed under covers"), None))
                .collect::<Vec<_>>()
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect();
    PosetGraph {
        n,
        nodes: nodes.iter().map(Asm::to_string).collect(),
        edges,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use num_bigint::BigUint;
    use num_traits::One;
    use proptest::prelude::*;

    fn p(s: &str) -> Asm {
        s.parse::<Permutation>().unwrap().to_asm()
    }

    fn product_formula(n: usize) -> BigUint {
        let fact = |m: usize| (1..=m).fold(BigUint::one(), |acc, k| acc * BigUint::from(k));
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for k in 0..n {
            num *= fact(3 * k + 1);
            den *= fact(n + k);
        }
        num / den
    }

    fn brute_force_asms(n: usize) -> Vec<Asm> {
        let cells = n * n;
        let mut out = Vec::new();
        for code in 0..3usize.pow(cells as u32) {
            let mut c = code;
            let mut rows = vec![vec![0i64; n]; n];
            for k in (0..cells).rev() {
                rows[k / n][k % n] = (c % 3) as i64 - 1;
                c /= 3;
            }
            if let Ok(a) = Asm::new(&rows) {
                out.push(a);
            }
        }
        out
    }

    #[test]
    fn counts_match_brute_force_and_product_formula() {
        for n in 1..=3 {
            let e = enumerate_asms(n).unwrap();
            assert_eq!(e.members().to_vec(), brute_force_asms(n));
        }
        for n in 1..=6 {
            let e = enumerate_asms(n).unwrap();
            assert_eq!(BigUint::from(e.len()), product_formula(n));
        }
        assert!(matches!(
            enumerate_asms(7),
            Err(Error::BoundExceeded { .. })
        ));
    }

    #[test]
    fn asm3_has_one_non_permutation() {
        let e = enumerate_asms(3).unwrap();
        let non: Vec<_> = e.iter().filter(|a| !a.is_permutation()).collect();
        assert_eq!(non.len(), 1);
        assert_eq!(non[0].to_string(), "0,1,0;1,-1,1;0,1,0");
    }

    #[test]
    fn enumeration_is_sorted() {
        let e = enumerate_asms(5).unwrap();
        assert!(e.members().windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn identity_is_bottom() {
        for b in &enumerate_asms(4).unwrap() {
            assert!(leq_strong(&Asm::identity(4), b).unwrap());
        }
        assert!(leq_strong(&Asm::identity(3), &Asm::identity(4)).is_err());
    }

    #[test]
    fn example_chain_is_strongly_ordered() {
        let w = p("31524");
        let a = fixtures::example_a5();
        let b = fixtures::example_b5();
        let ws = p("31254");
        assert!(leq_strong(&ws, &b).unwrap());
        assert!(leq_strong(&b, &a).unwrap());
        assert!(leq_strong(&a, &w).unwrap());
        assert!(!leq_strong(&w, &a).unwrap());
    }

    #[test]
    fn join_and_meet_examples() {
        let a = fixtures::rothe_example();
        assert_eq!(join([&p("3124"), &p("1423")]).unwrap(), a);
        assert_eq!(meet([&p("2341"), &p("3124")]).unwrap(), fixtures::meet_counterexample());
        assert_eq!(join([&a]).unwrap(), a);
        assert_eq!(meet([&a]).unwrap(), a);
        assert_eq!(join(std::iter::empty()), Err(Error::EmptySet));
        assert_eq!(join([&p("231"), &p("312")]).unwrap(), p("321"));
    }

    #[test]
    fn strong_order_is_partial_order_on_asm4() {
        let e = enumerate_asms(4).unwrap();
        let m = e.members();
        let leq: Vec<Vec<bool>> = m
            .iter()
            .map(|a| m.iter().map(|b| leq_strong(a, b).unwrap()).collect())
            .collect();
        for x in 0..m.len() {
            assert!(leq[x][x]);
            for y in 0..m.len() {
                if x != y {
                    assert!(!(leq[x][y] && leq[y][x]));
                }
                for z in 0..m.len() {
                    if leq[x][y] && leq[y][z] {
                        assert!(leq[x][z]);
                    }
                }
            }
        }
    }

    #[test]
    fn lattice_axioms_on_asm4() {
        let e = enumerate_asms(4).unwrap();
        let m = e.members();
        for a in m {
            assert_eq!(&join([a, a]).unwrap(), a);
            assert_eq!(&meet([a, a]).unwrap(), a);
            for b in m {
                let j = join([a, b]).unwrap();
                let mt = meet([a, b]).unwrap();
                assert_eq!(j, join([b, a]).unwrap());
                assert_eq!(mt, meet([b, a]).unwrap());
                assert_eq!(&join([a, &mt]).unwrap(), a);
                assert_eq!(&meet([a, &j]).unwrap(), a);
                assert!(leq_strong(a, &j).unwrap() && leq_strong(&mt, a).unwrap());
            }
        }
        for a in m.iter().step_by(3) {
            for b in m.iter().step_by(2) {
                for c in m.iter().step_by(5) {
                    let l = join([&join([a, b]).unwrap(), c]).unwrap();
                    let r = join([a, &join([b, c]).unwrap()]).unwrap();
                    assert_eq!(l, r);
                    let l = meet([&meet([a, b]).unwrap(), c]).unwrap();
                    let r = meet([a, &meet([b, c]).unwrap()]).unwrap();
                    assert_eq!(l, r);
                }
            }
        }
    }

    #[test]
    fn bump_reproduces_example() {
        let w = p("31524");
        let a = bump_at_essential(&w, Cell::new(3, 4)).unwrap();
        assert_eq!(a, fixtures::example_a5());
        for i in 0..=5 {
            for j in 0..=5 {
                let d = if (i, j) == (3, 4) { 1 } else { 0 };
                assert_eq!(a.rank(i, j), w.rank(i, j) + d);
            }
        }
        assert!(matches!(
            bump_at_essential(&w, Cell::new(1, 1)),
            Err(Error::NotEssential { .. })
        ));
    }

    #[test]
    fn identity_has_no_lower_covers() {
        assert!(lower_covers(&Asm::identity(4)).is_empty());
        assert!(upper_covers(&p("4321")).is_empty());
    }

    #[test]
    fn covers_are_mutually_consistent_on_asm4() {
        let e = enumerate_asms(4).unwrap();
        let lower: Vec<AsmSet> = e.iter().map(lower_covers).collect();
        let upper: Vec<AsmSet> = e.iter().map(upper_covers).collect();
        for (x, a) in e.iter().enumerate() {
            for (y, b) in e.iter().enumerate() {
                assert_eq!(lower[x].contains(b), upper[y].contains(a));
            }
        }
    }

    #[test]
    fn covers_match_order_on_asm4() {
        // b covered by a iff b < a with nothing strictly between
        let e = enumerate_asms(4).unwrap();
        let m = e.members();
        for a in m {
            let lc = lower_covers(a);
            for b in m {
                let below = b != a && leq_strong(b, a).unwrap();
                let gap = m.iter().any(|c| {
                    c != a && c != b && leq_strong(b, c).unwrap() && leq_strong(c, a).unwrap()
                });
                assert_eq!(lc.contains(b), below && !gap, "{a} / {b}");
            }
        }
    }

    #[test]
    fn perm_set_examples() {
        let a = fixtures::rothe_example();
        let ps: Vec<String> = perm_set(&a).perms().iter().map(|w| w.to_string()).collect();
        assert_eq!(ps, vec!["3412", "4123"]);
        assert_eq!(codim(&a), 3);
        for w in Permutation::all(4) {
            assert_eq!(perm_set(&w.to_asm()).perms(), std::slice::from_ref(&w));
            assert_eq!(codim(&w.to_asm()), w.coxeter_length());
        }
        // 2314 < 2341 and 2314 already lies above the meet
        let mc = perm_set(&fixtures::meet_counterexample());
        let names: Vec<String> = mc.perms().iter().map(|w| w.to_string()).collect();
        assert_eq!(names, vec!["2314", "3124"]);
        assert_eq!(brute_perm_set(&fixtures::meet_counterexample()).len(), 2);
        assert_eq!(codim(&Asm::identity(5)), 0);
    }

    fn brute_perm_set(a: &Asm) -> BTreeSet<Permutation> {
        let above: Vec<Permutation> = Permutation::all(a.n())
            .into_iter()
            .filter(|w| leq_strong(a, &w.to_asm()).unwrap())
            .collect();
        above
            .iter()
            .filter(|w| !above.iter().any(|v| v != *w && leq_strong(&v.to_asm(), &w.to_asm()).unwrap()))
            .cloned()
            .collect()
    }

    #[test]
    fn perm_set_matches_brute_force_on_asm4() {
        for a in &enumerate_asms(4).unwrap() {
            let fast: BTreeSet<Permutation> = perm_set(a).perms().iter().cloned().collect();
            assert_eq!(fast, brute_perm_set(a), "{a}");
            for w in &fast {
                assert!(leq_strong(a, &w.to_asm()).unwrap());
            }
        }
    }

    #[test]
    fn eight_by_eight_codim_gap() {
        let a = fixtures::codim_gap_8x8();
        assert_eq!(a.rothe_diagram().len(), 17);
        assert_eq!(codim(&a), 16);
    }

    #[test]
    fn bigrass_decomposition_example() {
        let a = fixtures::rothe_example();
        let d = bigrass_decomposition(&a);
        let perms: Vec<String> = d.iter().map(|t| t.permutation().to_string()).collect();
        assert_eq!(perms, vec!["3124", "1423"]);
        assert_eq!((d[0].row, d[0].col, d[0].rank), (1, 2, 0));
        assert_eq!((d[1].row, d[1].col, d[1].rank), (2, 3, 1));
        assert!(bigrass_decomposition(&Asm::identity(4)).is_empty());
    }

    #[test]
    fn join_of_bigrass_decomposition_is_identity_map_on_asm4() {
        for a in &enumerate_asms(4).unwrap() {
            let parts: Vec<Asm> = bigrass_decomposition(a)
                .iter()
                .map(|t| t.permutation().to_asm())
                .collect();
            if parts.is_empty() {
                assert_eq!(a, &Asm::identity(4));
            } else {
                assert_eq!(&join(&parts).unwrap(), a);
            }
        }
    }

    #[test]
    fn bigrassmannian_is_meet_of_rank_condition_on_asm4() {
        let e = enumerate_asms(4).unwrap();
        for t in BigrassTriple::all(4) {
            let u = t.permutation().to_asm();
            let sat: Vec<&Asm> = e.iter().filter(|a| a.rank(t.row, t.col) <= t.rank).collect();
            for a in &sat {
                assert!(leq_strong(&u, a).unwrap());
            }
            assert_eq!(meet(sat).unwrap(), u);
        }
    }

    #[test]
    fn codim_is_transpose_invariant_on_asm4() {
        for a in &enumerate_asms(4).unwrap() {
            assert_eq!(codim(a), codim(&a.transpose()));
        }
    }

    fn asm_strategy(n: usize) -> impl Strategy<Value = Asm> {
        let all = enumerate_asms(n).unwrap().members().to_vec();
        (0..all.len()).prop_map(move |k| all[k].clone())
    }

    proptest! {
        #[test]
        fn join_is_upper_bound(a in asm_strategy(5), b in asm_strategy(5)) {
            let j = join([&a, &b]).unwrap();
            prop_assert!(leq_strong(&a, &j).unwrap());
            prop_assert!(leq_strong(&b, &j).unwrap());
            let m = meet([&a, &b]).unwrap();
            prop_assert!(leq_strong(&m, &a).unwrap());
            prop_assert!(leq_strong(&m, &b).unwrap());
        }

        #[test]
        fn perm_set_is_antichain_above(a in asm_strategy(5)) {
            let ps = perm_set(&a);
            for w in ps.perms() {
                prop_assert!(leq_strong(&a, &w.to_asm()).unwrap());
                for v in ps.perms() {
                    prop_assert!(v == w || !v.bruhat_leq(w));
                }
            }
            prop_assert_eq!(join(ps.perms().iter().map(Permutation::to_asm).collect::<Vec<_>>().iter()).is_ok(), true);
        }

        #[test]
        fn meet_of_perm_set_is_asm(a in asm_strategy(5)) {
            let members: Vec<Asm> = perm_set(&a).perms().iter().map(Permutation::to_asm).collect();
            prop_assert_eq!(meet(&members).unwrap(), a);
        }
    }

    #[test]
    fn strong_poset_matches_hasse_of_relation() {
        for n in 1..=4 {
            let g = strong_poset(n).unwrap();
            let all = enumerate_asms(n).unwrap();
            let h = crate::poset::hasse_graph(n, all.members(), |a, b| leq_strong(a, b).unwrap());
            assert_eq!(g.labeled_edges(), h.labeled_edges());
        }
        assert_eq!(strong_poset(1).unwrap().node_count(), 1);
        let top = Asm::from_permutation(&Permutation::longest(3));
        assert_eq!(strong_interval(&top).node_count(), 7);
        let iv = strong_interval(&fixtures::rothe_example());
        let want = enumerate_asms(4)
            .unwrap()
            .iter()
            .filter(|b| leq_strong(b, &fixtures::rothe_example()).unwrap())
            .count();
        assert_eq!(iv.node_count(), want);
    }
}
