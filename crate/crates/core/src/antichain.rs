//! Antichains in Bruhat order, indexing unions of matrix Schubert
//! varieties: order, operators, ideal sums and polynomials.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::asm::{check_index, Asm, Permutation};
use crate::error::{Error, Result};
use crate::groth::{groth_asm, schub_perm, PolyCache, Variant};
use crate::order::{join, meet, perm_set};
use crate::poly::MultiPoly;
use crate::poset::{hasse_graph, operator_graph, PosetGraph};

/// Largest `n` for which antichains are enumerated.
pub const DEFAULT_ANTI_BOUND: usize = 4;

/// Nonempty, pairwise Bruhat-incomparable, sorted by one-line notation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Antichain {
    n: usize,
    perms: Vec<Permutation>,
}

impl Antichain {
    /// Validates incomparability; input order is irrelevant.
    pub fn new(mut perms: Vec<Permutation>) -> Result<Self> {
        let n = uniform_n(&perms)?;
        perms.sort();
        perms.dedup();
        for (k, a) in perms.iter().enumerate() {
            for b in &perms[k + 1..] {
                if a.bruhat_leq(b) || b.bruhat_leq(a) {
                    return Err(Error::NotAntichain(a.to_string(), b.to_string()));
                }
            }
        }
        Ok(Antichain { n, perms })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, perms: Vec<Permutation>) -> Self {
        debug_assert!(perms.windows(2).all(|w| w[0] < w[1]));
        Antichain { n, perms }
    }

    /// Keeps the Bruhat-minimal elements.
    pub fn normalize(perms: impl IntoIterator<Item = Permutation>) -> Result<Self> {
        let set: BTreeSet<Permutation> = perms.into_iter().collect();
        let all: Vec<Permutation> = set.into_iter().collect();
        let n = uniform_n(&all)?;
        let minimal = all
            .iter()
            .filter(|w| !all.iter().any(|v| v != *w && v.bruhat_leq(w)))
            .cloned()
            .collect();
        Ok(Antichain { n, perms: minimal })
    }

    pub fn singleton(w: Permutation) -> Self {
        Antichain {
            n: w.n(),
            perms: vec![w],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn perms(&self) -> &[Permutation] {
        &self.perms
    }

    pub fn len(&self) -> usize {
        self.perms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perms.is_empty()
    }

    pub fn contains(&self, w: &Permutation) -> bool {
        self.perms.binary_search(w).is_ok()
    }

    /// The permutation set of `A`.
    pub fn from_asm(a: &Asm) -> Self {
        perm_set(a)
    }

    /// The ASM whose permutation set is this antichain, if any.
    pub fn try_to_asm(&self) -> Option<Asm> {
        let asms: Vec<Asm> = self.perms.iter().map(Permutation::to_asm).collect();
        let b = meet(&asms).ok()?;
        (perm_set(&b) == *self).then_some(b)
    }

    pub fn transpose(&self) -> Self {
        let inv: Vec<Permutation> = self.perms.iter().map(Permutation::inverse).collect();
        Antichain::normalize(inv).expect("nonempty")
    }

    pub fn to_json(&self) -> Value {
        let perms: Vec<&[usize]> = self.perms.iter().map(Permutation::oneline).collect();
        json!({ "n": self.n, "perms": perms })
    }
}

fn uniform_n(perms: &[Permutation]) -> Result<usize> {
    let n = perms.first().ok_or(Error::EmptySet)?.n();
    if let Some(w) = perms.iter().find(|w| w.n() != n) {
        return Err(Error::SizeMismatch {
            left: n,
            right: w.n(),
        });
    }
    Ok(n)
}

impl fmt::Display for Antichain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.perms.iter().map(|w| w.to_string()).collect();
        if self.n > 9 {
            write!(f, "{{{}}}", parts.join(";"))
        } else {
            write!(f, "{{{}}}", parts.join(","))
        }
    }
}

impl FromStr for Antichain {
    type Err = Error;

    /// Parses `{213,132}`; for `n > 9` members are separated by `;`.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|t| t.strip_suffix('}'))
            .ok_or_else(|| Error::Parse(format!("antichain must be braced: {s:?}")))?;
        let sep = if inner.contains(';') { ';' } else { ',' };
        let perms: Result<Vec<Permutation>> = inner.split(sep).map(str::parse).collect();
        Antichain::new(perms?)
    }
}

fn same_n(a: &Antichain, b: &Antichain) -> Result<()> {
    if a.n != b.n {
        return Err(Error::SizeMismatch {
            left: a.n,
            right: b.n,
        });
    }
    Ok(())
}

/// `X_A ⊇ X_B`: every member of `B` lies above some member of `A`.
pub fn leq_strong_anti(a: &Antichain, b: &Antichain) -> Result<bool> {
    same_n(a, b)?;
    Ok(b.perms
        .iter()
        .all(|u| a.perms.iter().any(|w| w.bruhat_leq(u))))
}

fn pi_perm(w: &Permutation, i: usize) -> Permutation {
    if w.has_descent(i) {
        w.times_simple(i)
    } else {
        w.clone()
    }
}

pub fn pi_anti(a: &Antichain, i: usize) -> Result<Antichain> {
    check_index(i, a.n)?;
    Antichain::normalize(a.perms.iter().map(|w| pi_perm(w, i)))
}

/// `pi_i^C(A) = pi_i(A^T)^T`.
pub fn pi_col_anti(a: &Antichain, i: usize) -> Result<Antichain> {
    Ok(pi_anti(&a.transpose(), i)?.transpose())
}

pub fn transpose_anti(a: &Antichain) -> Antichain {
    a.transpose()
}

pub fn codim_anti(a: &Antichain) -> usize {
    a.perms
        .iter()
        .map(Permutation::coxeter_length)
        .min()
        .unwrap_or(0)
}

/// `{i : pi_i(A) != A}`.
pub fn descents_anti(a: &Antichain) -> Vec<usize> {
    (1..a.n)
        .filter(|&i| &pi_anti(a, i).expect("index in range") != a)
        .collect()
}

pub fn maj_anti(a: &Antichain) -> usize {
    descents_anti(a).iter().sum()
}

/// The antichain of the ideal `I_{A_1} + ... + I_{A_r}`: joins of every
/// tuple, expanded to permutation sets, minimal elements kept.
pub fn sum_of_antichain_ideals(parts: &[Antichain]) -> Result<Antichain> {
    let first = parts.first().ok_or(Error::EmptySet)?;
    for p in parts {
        same_n(first, p)?;
    }
    let mut tuples: Vec<Vec<Asm>> = vec![Vec::new()];
    for p in parts {
        let mut next = Vec::with_capacity(tuples.len() * p.len());
        for t in &tuples {
            for w in &p.perms {
                let mut t = t.clone();
                t.push(w.to_asm());
                next.push(t);
            }
        }
        tuples = next;
    }
    let mut union = Vec::new();
    for t in &tuples {
        union.extend(perm_set(&join(t)?).perms().iter().cloned());
    }
    Antichain::normalize(union)
}

/// Every nonempty antichain of Bruhat order on `S_n`, sorted, for `n <= 4`.
pub fn enumerate_antichains(n: usize) -> Result<Vec<Antichain>> {
    if n == 0 {
        return Err(Error::EmptySet);
    }
    if n > DEFAULT_ANTI_BOUND {
        return Err(Error::BoundExceeded {
            what: "antichain enumeration",
            n,
            bound: DEFAULT_ANTI_BOUND,
        });
    }
    let all = Permutation::all(n);
    let m = all.len();
    let comparable: Vec<Vec<bool>> = (0..m)
        .map(|a| {
            (0..m)
                .map(|b| all[a].bruhat_leq(&all[b]) || all[b].bruhat_leq(&all[a]))
                .collect()
        })
        .collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    grow(0, &all, &comparable, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn grow(
    next: usize,
    all: &[Permutation],
    comparable: &[Vec<bool>],
    chosen: &mut Vec<usize>,
    out: &mut Vec<Antichain>,
) {
    if next == all.len() {
        if !chosen.is_empty() {
            let perms = chosen.iter().map(|&k| all[k].clone()).collect();
            out.push(Antichain::from_sorted_unchecked(all[0].n(), perms));
        }
        return;
    }
    if chosen.iter().all(|&k| !comparable[k][next]) {
        chosen.push(next);
        grow(next + 1, all, comparable, chosen, out);
        chosen.pop();
    }
    grow(next + 1, all, comparable, chosen, out);
}

/// Hasse diagram of containment order on `anti(n)`.
pub fn strong_poset_anti(n: usize) -> Result<PosetGraph> {
    let all = enumerate_antichains(n)?;
    Ok(hasse_graph(n, &all, |a, b| leq_strong_anti(a, b).expect("same n")))
}

/// Hasse diagram of the antichains below `a` in containment order.
pub fn strong_interval_anti(a: &Antichain) -> Result<PosetGraph> {
    let below: Vec<Antichain> = enumerate_antichains(a.n)?
        .into_iter()
        .filter(|x| leq_strong_anti(x, a).expect("same n"))
        .collect();
    Ok(hasse_graph(a.n, &below, |x, y| leq_strong_anti(x, y).expect("same n")))
}

/// Operator graph on `anti(n)`.
pub fn weak_poset_anti(n: usize) -> Result<PosetGraph> {
    let all = enumerate_antichains(n)?;
    Ok(operator_graph(n, &all, |a, i| pi_anti(a, i).expect("index in range")))
}

/// Operator graph on everything reachable from `a`.
pub fn weak_interval_anti(a: &Antichain) -> PosetGraph {
    let op = |x: &Antichain, i: usize| pi_anti(x, i).expect("index in range");
    let nodes = crate::poset::reachable(a.n, a.clone(), op);
    operator_graph(a.n, &nodes, op)
}

/// Inclusion-exclusion over nonempty subsets of the members.
pub fn groth_anti(a: &Antichain, variant: Variant) -> MultiPoly {
    if a.len() == 1 {
        return groth_asm(&a.perms[0].to_asm(), variant);
    }
    let asms: Vec<Asm> = a.perms.iter().map(Permutation::to_asm).collect();
    PolyCache::global().inclusion_exclusion(variant, &asms)
}

/// Sum of Schubert polynomials over the members of minimum length, the
/// multidegree of the union.
pub fn schub_anti(a: &Antichain, variant: Variant) -> MultiPoly {
    let min = codim_anti(a);
    a.perms
        .iter()
        .filter(|w| w.coxeter_length() == min)
        .fold(MultiPoly::zero(a.n), |acc, w| &acc + &schub_perm(w, variant))
}

/// `pi_i(G_A) = G_{pi_i(A)}`, double and single.
pub fn check_ddo_anti(a: &Antichain, i: usize) -> Result<bool> {
    let b = pi_anti(a, i)?;
    for v in [Variant::Double, Variant::Single] {
        if groth_anti(a, v).k_divided_difference(i)? != groth_anti(&b, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `(maj(A^T) + nabla - E) G_A(x) = sum_i i G_{pi_i^C(A)}(x)`.
pub fn check_derivative_anti(a: &Antichain) -> Result<bool> {
    let g = groth_anti(a, Variant::Single);
    let lhs = &(&g.scale(maj_anti(&a.transpose()) as i64) + &g.nabla()) - &g.euler();
    let mut rhs = MultiPoly::zero(a.n);
    for i in 1..a.n {
        let b = pi_col_anti(a, i)?;
        if &b != a {
            rhs = &rhs + &groth_anti(&b, Variant::Single).scale(i as i64);
        }
    }
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::order::enumerate_asms;
    use crate::weak::pi;

    fn ac(s: &str) -> Antichain {
        s.parse().unwrap()
    }

    fn w(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    #[test]
    fn construction_and_normalize() {
        assert!(matches!(
            Antichain::new(vec![w("213"), w("312")]),
            Err(Error::NotAntichain(..))
        ));
        assert_eq!(Antichain::normalize([w("213"), w("312")]).unwrap(), ac("{213}"));
        assert_eq!(Antichain::normalize([w("231")]).unwrap(), ac("{231}"));
        assert!(matches!(Antichain::normalize([]), Err(Error::EmptySet)));
        assert_eq!(ac("{213,132}").to_string(), "{132,213}");
        assert_eq!(ac("{213,132}").to_json(), json!({"n": 3, "perms": [[1,3,2],[2,1,3]]}));
        let ps = perm_set(&fixtures::rothe_example());
        assert_eq!(Antichain::normalize(ps.perms().to_vec()).unwrap(), ps);
    }

    #[test]
    fn asm_round_trip() {
        assert_eq!(ac("{4123,3412}").try_to_asm(), Some(fixtures::rothe_example()));
        assert_eq!(ac("{213,132}").try_to_asm(), None);
        for p in Permutation::all(3) {
            assert_eq!(Antichain::from_asm(&p.to_asm()), Antichain::singleton(p.clone()));
        }
        for a in &enumerate_asms(4).unwrap() {
            assert_eq!(Antichain::from_asm(a).try_to_asm().as_ref(), Some(a));
        }
    }

    #[test]
    fn strong_order_examples() {
        let all = enumerate_antichains(3).unwrap();
        let id = ac("{123}");
        for a in &all {
            assert!(leq_strong_anti(&id, a).unwrap());
        }
        for u in Permutation::all(3) {
            for v in Permutation::all(3) {
                let l = leq_strong_anti(&Antichain::singleton(u.clone()), &Antichain::singleton(v.clone()));
                assert_eq!(l.unwrap(), u.bruhat_leq(&v));
            }
        }
    }

    #[test]
    fn counts() {
        assert_eq!(enumerate_antichains(1).unwrap().len(), 1);
        assert_eq!(enumerate_antichains(2).unwrap().len(), 2);
        assert_eq!(enumerate_antichains(3).unwrap().len(), 8);
        assert!(matches!(enumerate_antichains(5), Err(Error::BoundExceeded { .. })));
    }

    #[test]
    fn enumeration_matches_subset_filter_on_s3() {
        let all = Permutation::all(3);
        let mut want = Vec::new();
        for mask in 1u32..(1 << all.len()) {
            let chosen: Vec<Permutation> =
                (0..all.len()).filter(|b| mask >> b & 1 == 1).map(|b| all[b].clone()).collect();
            if let Ok(a) = Antichain::new(chosen) {
                want.push(a);
            }
        }
        want.sort();
        assert_eq!(enumerate_antichains(3).unwrap(), want);
    }

    #[test]
    fn pi_examples() {
        assert_eq!(pi_anti(&ac("{231,312}"), 2).unwrap(), ac("{213}"));
        assert_eq!(pi_anti(&ac("{213,132}"), 1).unwrap(), ac("{123}"));
        assert_eq!(pi_anti(&ac("{213,132}"), 2).unwrap(), ac("{123}"));
        for i in 1..3 {
            assert_eq!(pi_anti(&ac("{123}"), i).unwrap(), ac("{123}"));
        }
        assert!(pi_anti(&ac("{123}"), 3).is_err());
    }

    #[test]
    fn pi_restricts_to_asms_on_asm4() {
        for a in &enumerate_asms(4).unwrap() {
            for i in 1..4 {
                let l = pi_anti(&Antichain::from_asm(a), i).unwrap();
                assert_eq!(l, Antichain::from_asm(&pi(a, i).unwrap()));
            }
        }
    }

    #[test]
    fn strong_order_restricts_to_asms_on_asm4() {
        let all = enumerate_asms(4).unwrap();
        let anti: Vec<Antichain> = all.iter().map(Antichain::from_asm).collect();
        for (x, a) in all.iter().enumerate() {
            for (y, b) in all.iter().enumerate() {
                assert_eq!(
                    leq_strong_anti(&anti[x], &anti[y]).unwrap(),
                    crate::order::leq_strong(a, b).unwrap()
                );
            }
        }
    }

    #[test]
    fn ideal_sums() {
        let s = sum_of_antichain_ideals(&[ac("{213}"), ac("{132}")]).unwrap();
        assert_eq!(s, ac("{231,312}"));
        let s = sum_of_antichain_ideals(&[ac("{231}"), ac("{312}")]).unwrap();
        assert_eq!(s, ac("{321}"));
        let s = sum_of_antichain_ideals(&[ac("{213,132}"), ac("{231,312}")]).unwrap();
        assert_eq!(s, ac("{231,312}"));
        let v = w("3124");
        let u = w("1423");
        let s = sum_of_antichain_ideals(&[Antichain::singleton(v.clone()), Antichain::singleton(u.clone())]);
        assert_eq!(s.unwrap(), Antichain::from_asm(&join([&v.to_asm(), &u.to_asm()]).unwrap()));
    }

    #[test]
    fn ideal_sum_brute_force_on_anti3() {
        // the sum ideal's variety is the intersection: permutations above
        // some member of every part
        let all = enumerate_antichains(3).unwrap();
        for a in &all {
            for b in &all {
                let inter: Vec<Permutation> = Permutation::all(3)
                    .into_iter()
                    .filter(|u| {
                        a.perms().iter().any(|x| x.bruhat_leq(u)) && b.perms().iter().any(|x| x.bruhat_leq(u))
                    })
                    .collect();
                let want = Antichain::normalize(inter).unwrap();
                assert_eq!(sum_of_antichain_ideals(&[a.clone(), b.clone()]).unwrap(), want);
            }
        }
    }

    #[test]
    fn transpose_and_statistics() {
        let a = ac("{213,132}");
        assert_eq!(transpose_anti(&a), a);
        assert_eq!(maj_anti(&transpose_anti(&a)), 3);
        assert_eq!(codim_anti(&ac("{123}")), 0);
        assert_eq!(codim_anti(&ac("{4123,3412}")), 3);
        assert_eq!(transpose_anti(&ac("{231}")), ac("{312}"));
        assert_eq!(pi_col_anti(&ac("{231}"), 1).unwrap(), ac("{132}"));
    }

    #[test]
    fn polynomial_example() {
        let a = ac("{213,132}");
        let g = groth_anti(&a, Variant::Single);
        assert_eq!(g.to_string(), "2*x1 + x2 - 2*x1*x2 - x1^2 + x1^2*x2");
        let d = &(&g.scale(3) + &g.nabla()) - &g.euler();
        assert_eq!(d, MultiPoly::one(3).scale(3));
        assert!(check_derivative_anti(&a).unwrap());
        for p in Permutation::all(3) {
            assert_eq!(
                groth_anti(&Antichain::singleton(p.clone()), Variant::Double),
                crate::groth::groth_perm(&p, Variant::Double)
            );
        }
    }

    #[test]
    fn schubert_is_lowest_degree_part() {
        for a in &enumerate_antichains(3).unwrap() {
            let s = schub_anti(a, Variant::Single);
            assert_eq!(groth_anti(a, Variant::Single).lowest_degree_part(), s);
            if let Some(b) = a.try_to_asm() {
                assert_eq!(crate::groth::schub_asm(&b, Variant::Double), schub_anti(a, Variant::Double));
            }
        }
    }

    #[test]
    fn anti3_operator_identities() {
        let all = enumerate_antichains(3).unwrap();
        for a in &all {
            for i in 1..3 {
                let x = pi_anti(a, i).unwrap();
                assert_eq!(pi_anti(&x, i).unwrap(), x);
                assert!(check_ddo_anti(a, i).unwrap());
            }
            let l = pi_anti(&pi_anti(&pi_anti(a, 1).unwrap(), 2).unwrap(), 1).unwrap();
            let r = pi_anti(&pi_anti(&pi_anti(a, 2).unwrap(), 1).unwrap(), 2).unwrap();
            assert_eq!(l, r);
            assert!(check_derivative_anti(a).unwrap());
        }
    }

    #[test]
    fn posets_of_anti3() {
        let g = strong_poset_anti(3).unwrap();
        assert_eq!((g.node_count(), g.edge_count()), (8, 9));
        let wg = weak_poset_anti(3).unwrap();
        assert_eq!(wg.edge_count(), 10);
        assert_eq!(strong_interval_anti(&ac("{321}")).unwrap(), g);
        assert_eq!(strong_interval_anti(&ac("{123}")).unwrap().node_count(), 1);
        let top = weak_interval_anti(&ac("{321}"));
        assert_eq!(top.node_count(), 6);
    }
}
