//! Sparse integer polynomials in `x_1..x_n, y_1..y_n` with divided
//! difference and derivative operators.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::asm::check_index;
use crate::error::{Error, Result};

/// Exponent vector of width `2n`: x-exponents then y-exponents.
pub type Exponent = Vec<u32>;

/// Invariant: no stored coefficient is zero, every key has width `2n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    n: usize,
    terms: BTreeMap<Exponent, BigInt>,
}

impl MultiPoly {
    pub fn zero(n: usize) -> Self {
        MultiPoly {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    pub fn constant(n: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(n, vec![0; 2 * n], c)
    }

    pub fn monomial(n: usize, exp: Exponent, c: impl Into<BigInt>) -> Self {
        assert_eq!(exp.len(), 2 * n, "exponent width");
        let mut p = Self::zero(n);
        p.add_term(exp, c.into());
        p
    }

    /// The variable `x_i`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[i - 1] = 1;
        Self::monomial(n, e, 1)
    }

    /// The variable `y_j`, 1-based.
    pub fn y(n: usize, j: usize) -> Self {
        let mut e = vec![0; 2 * n];
        e[n + j - 1] = 1;
        Self::monomial(n, e, 1)
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Exponent, BigInt)>) -> Result<Self> {
        let mut p = Self::zero(n);
        for (e, c) in terms {
            if e.len() != 2 * n {
                return Err(Error::SizeMismatch {
                    left: 2 * n,
                    right: e.len(),
                });
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, exp: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, exp: &[u32]) -> BigInt {
        self.terms.get(exp).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in canonical display order.
    pub fn sorted_terms(&self) -> Vec<(&Exponent, &BigInt)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| canonical_cmp(a.0, b.0));
        v
    }

    fn check_same(&self, other: &MultiPoly) -> Result<()> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_same(other)?;
        let mut out = Self::zero(self.n);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: impl Into<BigInt>) -> MultiPoly {
        let c = c.into();
        let mut out = Self::zero(self.n);
        for (e, v) in &self.terms {
            out.add_term(e.clone(), v * &c);
        }
        out
    }

    fn map_terms(&self, f: impl Fn(&Exponent, &BigInt) -> Option<(Exponent, BigInt)>) -> MultiPoly {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            if let Some((e2, c2)) = f(e, c) {
                out.add_term(e2, c2);
            }
        }
        out
    }

    /// Exchanges `x_i` and `x_{i+1}`, fixing every `y_j`.
    pub fn swap_x(&self, i: usize) -> Result<MultiPoly> {
        check_index(i, self.n)?;
        Ok(self.map_terms(|e, c| {
            let mut e = e.clone();
            e.swap(i - 1, i);
            Some((e, c.clone()))
        }))
    }

    pub fn is_symmetric_in(&self, i: usize) -> Result<bool> {
        Ok(&self.swap_x(i)? == self)
    }

    /// `delta_i(f) = (f - s_i f) / (x_i - x_{i+1})`, term by term.
    pub fn divided_difference(&self, i: usize) -> Result<MultiPoly> {
        check_index(i, self.n)?;
        let (p, q) = (i - 1, i);
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let (a, b) = (e[p], e[q]);
            // x_p^a x_q^b - x_p^b x_q^a
            //   = (x_p - x_q) (x_p x_q)^lo sum_k x_p^(hi-lo-1-k) x_q^k, up to sign
            let (hi, lo, coef) = match a.cmp(&b) {
                Ordering::Equal => continue,
                Ordering::Greater => (a, b, c.clone()),
                Ordering::Less => (b, a, -c),
            };
            for k in 0..hi - lo {
                let mut t = e.clone();
                t[p] = lo + (hi - lo - 1 - k);
                t[q] = lo + k;
                out.add_term(t, coef.clone());
            }
        }
        Ok(out)
    }

    /// Quotient and remainder of division by `x_i - x_{i+1}`, treating the
    /// polynomial as univariate in `x_i`.
    pub fn divide_by_difference(&self, i: usize) -> Result<(MultiPoly, MultiPoly)> {
        check_index(i, self.n)?;
        let (p, q) = (i - 1, i);
        // group by x_p-degree: f = sum_d c_d x_p^d
        let mut by_deg: BTreeMap<u32, MultiPoly> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            let d = rest[p];
            rest[p] = 0;
            by_deg
                .entry(d)
                .or_insert_with(|| Self::zero(self.n))
                .add_term(rest, c.clone());
        }
        let Some(&top) = by_deg.keys().next_back() else {
            return Ok((Self::zero(self.n), Self::zero(self.n)));
        };
        let xq = {
            let mut e = vec![0; 2 * self.n];
            e[q] = 1;
            Self::monomial(self.n, e, 1)
        };
        let xp_pow = |d: u32| {
            let mut e = vec![0; 2 * self.n];
            e[p] = d;
            Self::monomial(self.n, e, 1)
        };
        // synthetic division by (x_p - x_q): carry = c_d + x_q * carry
        let mut quotient = Self::zero(self.n);
        let mut carry = Self::zero(self.n);
        for d in (0..=top).rev() {
            let c = by_deg.remove(&d).unwrap_or_else(|| Self::zero(self.n));
            carry = &c + &(&xq * &carry);
            if d > 0 {
                quotient = &quotient + &(&carry * &xp_pow(d - 1));
            }
        }
        Ok((quotient, carry))
    }

    /// `delta_i` through generic long division; panics on a nonzero remainder.
    pub fn divided_difference_by_division(&self, i: usize) -> Result<MultiPoly> {
        let numerator = self.checked_sub(&self.swap_x(i)?)?;
        let (quotient, remainder) = numerator.divide_by_difference(i)?;
        assert!(remainder.is_zero(), "division by x_i - x_(i+1) left a remainder");
        Ok(quotient)
    }

    /// K-theoretic divided difference `pi_i(f) = delta_i((1 - x_{i+1}) f)`.
    pub fn k_divided_difference(&self, i: usize) -> Result<MultiPoly> {
        check_index(i, self.n)?;
        let shifted = self.map_terms(|e, c| {
            let mut e = e.clone();
            e[i] += 1;
            Some((e, -c))
        });
        (self + &shifted).divided_difference(i)
    }

    /// `sum_i d/dx_i`.
    pub fn nabla(&self) -> MultiPoly {
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            for k in 0..self.n {
                if e[k] > 0 {
                    let mut t = e.clone();
                    t[k] -= 1;
                    out.add_term(t, c * BigInt::from(e[k]));
                }
            }
        }
        out
    }

    /// `sum_i x_i d/dx_i`: scales each term by its x-degree.
    pub fn euler(&self) -> MultiPoly {
        let n = self.n;
        self.map_terms(|e, c| {
            let d: u32 = e[..n].iter().sum();
            Some((e.clone(), c * BigInt::from(d)))
        })
    }

    /// Sets every `y_j` to zero.
    pub fn substitute_y_zero(&self) -> MultiPoly {
        let n = self.n;
        self.map_terms(|e, c| e[n..].iter().all(|&v| v == 0).then(|| (e.clone(), c.clone())))
    }

    /// Replaces each `y_j` by `-y_j`.
    pub fn negate_y(&self) -> MultiPoly {
        let n = self.n;
        self.map_terms(|e, c| {
            let d: u32 = e[n..].iter().sum();
            Some((e.clone(), if d % 2 == 1 { -c } else { c.clone() }))
        })
    }

    pub fn total_degree(exp: &[u32]) -> u32 {
        exp.iter().sum()
    }

    /// The homogeneous component of least total degree.
    pub fn lowest_degree_part(&self) -> MultiPoly {
        let Some(min) = self.terms.keys().map(|e| Self::total_degree(e)).min() else {
            return self.clone();
        };
        self.map_terms(|e, c| (Self::total_degree(e) == min).then(|| (e.clone(), c.clone())))
    }

    /// Univariate coefficients after `x_i -> t` for all `i` and `y_j -> 0`.
    pub fn diagonal_specialization(&self) -> Vec<BigInt> {
        let mut out: Vec<BigInt> = Vec::new();
        for (e, c) in self.substitute_y_zero().terms() {
            let d = e[..self.n].iter().sum::<u32>() as usize;
            if out.len() <= d {
                out.resize(d + 1, BigInt::zero());
            }
            out[d] += c;
        }
        while out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    pub fn to_json(&self) -> Value {
        let terms: Vec<Value> = self
            .sorted_terms()
            .into_iter()
            .map(|(e, c)| {
                let coef = match c.to_i64() {
                    Some(v) => json!(v),
                    None => json!(c.to_string()),
                };
                json!({ "exp": e, "coef": coef })
            })
            .collect();
        json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(v: &Value) -> Result<MultiPoly> {
        let bad = |what: &str| Error::Parse(format!("polynomial JSON: {what}"));
        let n = v["n"].as_u64().ok_or_else(|| bad("missing n"))? as usize;
        let terms = v["terms"].as_array().ok_or_else(|| bad("missing terms"))?;
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            let exp: Exponent = t["exp"]
                .as_array()
                .ok_or_else(|| bad("missing exp"))?
                .iter()
                .map(|x| x.as_u64().map(|x| x as u32).ok_or_else(|| bad("bad exponent")))
                .collect::<Result<_>>()?;
            let coef = match &t["coef"] {
                Value::Number(num) => num
                    .as_i64()
                    .map(BigInt::from)
                    .ok_or_else(|| bad("bad coefficient"))?,
                Value::String(s) => s.parse::<BigInt>().map_err(|_| bad("bad coefficient"))?,
                _ => return Err(bad("missing coef")),
            };
            out.push((exp, coef));
        }
        Self::from_terms(n, out)
    }
}

/// Display order: total degree ascending, then the sorted exponent
/// partition ascending, then exponent vector descending.
pub fn canonical_cmp(a: &[u32], b: &[u32]) -> Ordering {
    let partition = |e: &[u32]| {
        let mut p = e.to_vec();
        p.sort_unstable_by(|x, y| y.cmp(x));
        p
    };
    MultiPoly::total_degree(a)
        .cmp(&MultiPoly::total_degree(b))
        .then_with(|| partition(a).cmp(&partition(b)))
        .then_with(|| b.cmp(a))
}

fn render_monomial(n: usize, e: &[u32]) -> String {
    let mut factors = Vec::new();
    for (k, &d) in e.iter().enumerate() {
        if d == 0 {
            continue;
        }
        let name = if k < n {
            format!("x{}", k + 1)
        } else {
            format!("y{}", k - n + 1)
        };
        factors.push(if d == 1 { name } else { format!("{name}^{d}") });
    }
    factors.join("*")
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            let mono = render_monomial(self.n, e);
            let abs = c.abs();
            let body = if mono.is_empty() {
                abs.to_string()
            } else if abs.is_one() {
                mono
            } else {
                format!("{abs}*{mono}")
            };
            match (k, c.is_negative()) {
                (0, false) => write!(f, "{body}")?,
                (0, true) => write!(f, "-{body}")?,
                (_, false) => write!(f, " + {body}")?,
                (_, true) => write!(f, " - {body}")?,
            }
        }
        Ok(())
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        self.map_terms(|e, c| Some((e.clone(), -c)))
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;

    fn neg(self) -> MultiPoly {
        -&self
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;

            /// Panics when the variable blocks differ in size.
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomials over the same variables")
            }
        }

        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;

            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);
