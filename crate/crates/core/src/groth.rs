//! Grothendieck and Schubert polynomials of permutations and ASMs, and
//! executable checks of their operator identities.

use std::collections::HashMap;
use std::sync::{OnceLock, RwLock};

use crate::asm::{Asm, Permutation};
use crate::error::{Error, Result};
use crate::order::{codim, enumerate_asms, join, perm_set};
use crate::poly::MultiPoly;
use crate::weak::{maj, pi, pi_col};

/// Largest `n` for which [`distinctness_check`] runs by default.
pub const DEFAULT_POLY_BOUND: usize = 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Groth,
    Schub,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Variant {
    Single,
    Double,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Groth => "groth",
            Family::Schub => "schub",
        }
    }
}

impl Variant {
    pub fn name(self) -> &'static str {
        match self {
            Variant::Single => "single",
            Variant::Double => "double",
        }
    }
}

type Key = (Family, Variant, String);

/// Memo table keyed by family, variant and canonical ASM encoding.
#[derive(Debug, Default)]
pub struct PolyCache {
    store: RwLock<HashMap<Key, MultiPoly>>,
}

impl PolyCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// Process-wide cache used by the free functions of this module.
    pub fn global() -> &'static PolyCache {
        static CACHE: OnceLock<PolyCache> = OnceLock::new();
        CACHE.get_or_init(PolyCache::new)
    }

    pub fn len(&self) -> usize {
        self.store.read().expect("cache lock").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn get(&self, family: Family, variant: Variant, key: &str) -> Option<MultiPoly> {
        self.store
            .read()
            .expect("cache lock")
            .get(&(family, variant, key.to_string()))
            .cloned()
    }

    pub fn insert(&self, family: Family, variant: Variant, key: String, p: MultiPoly) {
        self.store
            .write()
            .expect("cache lock")
            .insert((family, variant, key), p);
    }

    /// Snapshot of every entry, sorted by key.
    pub fn entries(&self) -> Vec<(Family, Variant, String, MultiPoly)> {
        let mut v: Vec<_> = self
            .store
            .read()
            .expect("cache lock")
            .iter()
            .map(|((f, var, k), p)| (*f, *var, k.clone(), p.clone()))
            .collect();
        v.sort_by(|a, b| (a.0, a.1, &a.2).cmp(&(b.0, b.1, &b.2)));
        v
    }

    /// Top class for `w_0`.
    pub fn top(family: Family, variant: Variant, n: usize) -> MultiPoly {
        let mut out = MultiPoly::one(n);
        for i in 1..n {
            for j in 1..=n - i {
                let x = MultiPoly::x(n, i);
                let factor = match (family, variant) {
                    (_, Variant::Single) => x,
                    (Family::Groth, Variant::Double) => {
                        let y = MultiPoly::y(n, j);
                        &(&x + &y) - &(&x * &y)
                    }
                    (Family::Schub, Variant::Double) => &x - &MultiPoly::y(n, j),
                };
                out = &out * &factor;
            }
        }
        out
    }

    fn step(family: Family, f: &MultiPoly, i: usize) -> MultiPoly {
        match family {
            Family::Groth => f.k_divided_difference(i),
            Family::Schub => f.divided_difference(i),
        }
        .expect("index in range")
    }

    /// Polynomial of a permutation, descending from `w_0` through the
    /// smallest ascent at each level.
    pub fn perm(&self, family: Family, variant: Variant, w: &Permutation) -> MultiPoly {
        let key = w.to_asm().canonical();
        if let Some(p) = self.get(family, variant, &key) {
            return p;
        }
        let n = w.n();
        let p = match (1..n).find(|&i| !w.has_descent(i)) {
            None => Self::top(family, variant, n),
            Some(i) => {
                let up = self.perm(family, variant, &w.times_simple(i));
                Self::step(family, &up, i)
            }
        };
        self.insert(family, variant, key, p.clone());
        p
    }

    /// Polynomial of `w_0 s_{b_m} ... s_{b_1}` where `word = (b_1, ..., b_m)`
    /// is a reduced word of `w^{-1} w_0`; `b_m` is applied first.
    pub fn perm_along(family: Family, variant: Variant, n: usize, word: &[usize]) -> MultiPoly {
        word.iter()
            .rev()
            .fold(Self::top(family, variant, n), |f, &b| Self::step(family, &f, b))
    }

    /// Polynomial of an ASM: inclusion-exclusion over its permutation set
    /// for Grothendieck, minimum-length members for Schubert.
    pub fn asm(&self, family: Family, variant: Variant, a: &Asm) -> MultiPoly {
        if let Some(w) = a.to_permutation() {
            return self.perm(family, variant, &w);
        }
        let key = a.canonical();
        if let Some(p) = self.get(family, variant, &key) {
            return p;
        }
        let ps = perm_set(a);
        let members = ps.perms();
        let p = match family {
            Family::Groth => {
                let asms: Vec<Asm> = members.iter().map(Permutation::to_asm).collect();
                self.inclusion_exclusion(variant, &asms)
            }
            Family::Schub => {
                let min = members.iter().map(Permutation::coxeter_length).min().unwrap_or(0);
                members
                    .iter()
                    .filter(|w| w.coxeter_length() == min)
                    .fold(MultiPoly::zero(a.n()), |acc, w| &acc + &self.perm(family, variant, w))
            }
        };
        self.insert(family, variant, key, p.clone());
        p
    }

    /// `sum over nonempty U of (-1)^(|U|-1) G(join U)`.
    pub(crate) fn inclusion_exclusion(&self, variant: Variant, parts: &[Asm]) -> MultiPoly {
        let n = parts[0].n();
        let k = parts.len();
        let mut out = MultiPoly::zero(n);
        for mask in 1u32..(1 << k) {
            let chosen = (0..k).filter(|b| mask >> b & 1 == 1).map(|b| &parts[b]);
            let top = join(chosen).expect("nonempty subset");
            let g = self.asm(Family::Groth, variant, &top);
            out = if mask.count_ones() % 2 == 1 { &out + &g } else { &out - &g };
        }
        out
    }
}

pub fn groth_top(n: usize) -> MultiPoly {
    PolyCache::top(Family::Groth, Variant::Double, n)
}

pub fn schub_top(n: usize) -> MultiPoly {
    PolyCache::top(Family::Schub, Variant::Double, n)
}

pub fn groth_perm(w: &Permutation, variant: Variant) -> MultiPoly {
    PolyCache::global().perm(Family::Groth, variant, w)
}

pub fn schub_perm(w: &Permutation, variant: Variant) -> MultiPoly {
    PolyCache::global().perm(Family::Schub, variant, w)
}

pub fn groth_asm(a: &Asm, variant: Variant) -> MultiPoly {
    PolyCache::global().asm(Family::Groth, variant, a)
}

pub fn schub_asm(a: &Asm, variant: Variant) -> MultiPoly {
    PolyCache::global().asm(Family::Schub, variant, a)
}

const BOTH: [Variant; 2] = [Variant::Double, Variant::Single];

/// `pi_i(G_A) = G_{pi_i(A)}`, double and single.
pub fn check_ddo(a: &Asm, i: usize) -> Result<bool> {
    let b = pi(a, i)?;
    for v in BOTH {
        if groth_asm(a, v).k_divided_difference(i)? != groth_asm(&b, v) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `delta_i(S_A)` vanishes when codim is unchanged by `pi_i`, and equals
/// `S_{pi_i(A)}` when it drops.
pub fn check_schubert_delta(a: &Asm, i: usize) -> Result<bool> {
    let b = pi(a, i)?;
    let same = codim(a) == codim(&b);
    for v in BOTH {
        let d = schub_asm(a, v).divided_difference(i)?;
        let ok = if same { d.is_zero() } else { d == schub_asm(&b, v) };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Codim unchanged by `pi_i` iff `S_A` is symmetric in `x_i, x_{i+1}`,
/// single and double.
pub fn check_symmetry(a: &Asm, i: usize) -> Result<bool> {
    let same = codim(a) == codim(&pi(a, i)?);
    let single = schub_asm(a, Variant::Single).is_symmetric_in(i)?;
    let double = schub_asm(a, Variant::Double).is_symmetric_in(i)?;
    Ok(same == single && single == double)
}

/// `(maj(A^T) + nabla - E) G_A(x) = sum_i i G_{pi_i^C(A)}(x)` over `i`
/// with `pi_i^C(A) != A`.
pub fn check_derivative(a: &Asm) -> Result<bool> {
    let n = a.n();
    let g = groth_asm(a, Variant::Single);
    let lhs = &(&g.scale(maj(&a.transpose()) as i64) + &g.nabla()) - &g.euler();
    let mut rhs = MultiPoly::zero(n);
    for i in 1..n {
        let b = pi_col(a, i)?;
        if &b != a {
            rhs = &rhs + &groth_asm(&b, Variant::Single).scale(i as i64);
        }
    }
    Ok(lhs == rhs)
}

/// Single Grothendieck polynomials of `ASM(n)` are pairwise distinct.
pub fn distinctness_check(n: usize) -> Result<bool> {
    distinctness_check_bounded(n, DEFAULT_POLY_BOUND)
}

pub fn distinctness_check_bounded(n: usize, bound: usize) -> Result<bool> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "Grothendieck distinctness",
            n,
            bound,
        });
    }
    let all = enumerate_asms(n)?;
    let mut seen: Vec<MultiPoly> = all.iter().map(|a| groth_asm(a, Variant::Single)).collect();
    let total = seen.len();
    seen.sort_by_key(|p| p.to_string());
    seen.dedup();
    Ok(seen.len() == total)
}
