//! Sparse multivariate Laurent polynomials with big-integer coefficients.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("operands live over different variable sets")]
    VarSetMismatch,
    #[error("{0} does not divide {1}")]
    NotDivisible(String, String),
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("image of {0} is not a single monomial")]
    NonMonomialImage(String),
    #[error("operation is undefined on the zero polynomial")]
    ZeroPolynomial,
    #[error("unknown variable {0:?}")]
    UnknownVariable(String),
    #[error("duplicate variable name {0:?}")]
    DuplicateVariable(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// An ordered list of distinct variable names. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct VarSet {
    names: Arc<Vec<String>>,
}

impl fmt::Debug for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.names.iter()).finish()
    }
}

impl VarSet {
    pub fn new<I, S>(names: I) -> Result<Self, LaurentError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        for (k, name) in names.iter().enumerate() {
            if names[..k].contains(name) {
                return Err(LaurentError::DuplicateVariable(name.clone()));
            }
        }
        Ok(VarSet {
            names: Arc::new(names),
        })
    }

    /// `prefix1, ..., prefix{n}`.
    pub fn numbered(prefix: &str, n: usize) -> Self {
        VarSet::new((1..=n).map(|k| format!("{prefix}{k}"))).expect("numbered names are distinct")
    }

    pub fn concat(&self, other: &VarSet) -> Result<Self, LaurentError> {
        VarSet::new(self.names.iter().chain(other.names.iter()).cloned())
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn position(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    fn require(&self, name: &str) -> Result<usize, LaurentError> {
        self.position(name)
            .ok_or_else(|| LaurentError::UnknownVariable(name.to_string()))
    }
}

type Exponent = Vec<i32>;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    vars: VarSet,
    terms: BTreeMap<Exponent, BigInt>,
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl LaurentPoly {
    pub fn zero(vars: &VarSet) -> Self {
        LaurentPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, BigInt::one())
    }

    pub fn constant(vars: &VarSet, c: BigInt) -> Self {
        Self::monomial(vars, vec![0; vars.len()], c)
    }

    pub fn monomial(vars: &VarSet, exponent: Vec<i32>, c: BigInt) -> Self {
        assert_eq!(exponent.len(), vars.len(), "exponent length");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exponent, c);
        }
        LaurentPoly {
            vars: vars.clone(),
            terms,
        }
    }

    pub fn var(vars: &VarSet, name: &str) -> Result<Self, LaurentError> {
        let k = vars.require(name)?;
        let mut e = vec![0; vars.len()];
        e[k] = 1;
        Ok(Self::monomial(vars, e, BigInt::one()))
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, merging duplicates.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut map: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in terms {
            assert_eq!(e.len(), vars.len(), "exponent length");
            *map.entry(e).or_default() += c;
        }
        map.retain(|_, c| !c.is_zero());
        LaurentPoly {
            vars: vars.clone(),
            terms: map,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Terms in ascending lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(e, c)| c.is_one() && e.iter().all(|&x| x == 0))
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// The single term of a monomial.
    pub fn as_monomial(&self) -> Option<(&[i32], &BigInt)> {
        if self.is_monomial() {
            self.terms().next()
        } else {
            None
        }
    }

    pub fn coefficient(&self, exponent: &[i32]) -> BigInt {
        self.terms.get(exponent).cloned().unwrap_or_default()
    }

    pub fn has_positive_coefficients(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// Componentwise minimum of the exponents; `None` for the zero polynomial.
    pub fn min_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::min)
    }

    pub fn max_exponents(&self) -> Option<Vec<i32>> {
        self.fold_exponents(i32::max)
    }

    fn fold_exponents(&self, f: fn(i32, i32) -> i32) -> Option<Vec<i32>> {
        let mut it = self.terms.keys();
        let mut acc = it.next()?.clone();
        for e in it {
            for (a, &b) in acc.iter_mut().zip(e) {
                *a = f(*a, b);
            }
        }
        Some(acc)
    }

    /// True when every named variable occurs with non-negative exponent only.
    pub fn is_polynomial_in(&self, names: &[&str]) -> Result<bool, LaurentError> {
        let ks = names
            .iter()
            .map(|n| self.vars.require(n))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self
            .terms
            .keys()
            .all(|e| ks.iter().all(|&k| e[k] >= 0)))
    }

    fn check_same(&self, other: &Self) -> Result<(), LaurentError> {
        if self.vars == other.vars {
            Ok(())
        } else {
            Err(LaurentError::VarSetMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            accumulate(&mut terms, e, c.clone());
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, LaurentError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, LaurentError> {
        self.check_same(other)?;
        let mut acc: HashMap<Exponent, BigInt> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponent = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                *acc.entry(e).or_default() += ca * cb;
            }
        }
        let terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms,
        })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut result = LaurentPoly::one(&self.vars);
        for _ in 0..k {
            result = &result * self;
        }
        result
    }

    /// Exact quotient `self / divisor` in the Laurent ring.
    ///
    /// Repeatedly cancels the lexicographically leading term. Quotient
    /// exponents are confined to the box forced by the Newton polytopes, so a
    /// non-divisible input is detected after finitely many steps.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        self.check_same(divisor)?;
        if divisor.is_zero() {
            return Err(LaurentError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(self.clone());
        }
        let not_divisible = || LaurentError::NotDivisible(divisor.to_string(), self.to_string());
        if let Some((e, c)) = divisor.as_monomial() {
            let mut terms = BTreeMap::new();
            for (ea, ca) in &self.terms {
                let (q, r) = ca.div_rem(c);
                if !r.is_zero() {
                    return Err(not_divisible());
                }
                terms.insert(ea.iter().zip(e).map(|(a, b)| a - b).collect(), q);
            }
            return Ok(LaurentPoly {
                vars: self.vars.clone(),
                terms,
            });
        }
        let lo: Vec<i32> = self
            .min_exponents()
            .unwrap()
            .iter()
            .zip(divisor.min_exponents().unwrap())
            .map(|(a, b)| a - b)
            .collect();
        let hi: Vec<i32> = self
            .max_exponents()
            .unwrap()
            .iter()
            .zip(divisor.max_exponents().unwrap())
            .map(|(a, b)| a - b)
            .collect();
        let (lead_e, lead_c) = divisor.terms.iter().next_back().unwrap();
        let mut remainder = self.terms.clone();
        let mut quotient = BTreeMap::new();
        while let Some((e, c)) = remainder.iter().next_back() {
            let qe: Exponent = e.iter().zip(lead_e).map(|(a, b)| a - b).collect();
            if qe.iter().zip(&lo).zip(&hi).any(|((x, l), h)| x < l || x > h) {
                return Err(not_divisible());
            }
            let (qc, r) = c.div_rem(lead_c);
            if !r.is_zero() {
                return Err(not_divisible());
            }
            for (eb, cb) in &divisor.terms {
                let key: Exponent = eb.iter().zip(&qe).map(|(a, b)| a + b).collect();
                accumulate(&mut remainder, &key, -(cb * &qc));
            }
            quotient.insert(qe, qc);
        }
        Ok(LaurentPoly {
            vars: self.vars.clone(),
            terms: quotient,
        })
    }

    /// Ring homomorphism into `target`. Variables listed in `images` go to the
    /// given monomials; all others go to the variable of the same name.
    pub fn substitute(
        &self,
        target: &VarSet,
        images: &HashMap<String, LaurentPoly>,
    ) -> Result<Self, LaurentError> {
        let mut columns: Vec<(Vec<i32>, BigInt)> = Vec::with_capacity(self.vars.len());
        for name in self.vars.names() {
            match images.get(name) {
                Some(img) => {
                    if img.vars != *target {
                        return Err(LaurentError::VarSetMismatch);
                    }
                    let (e, c) = img
                        .as_monomial()
                        .ok_or_else(|| LaurentError::NonMonomialImage(name.clone()))?;
                    columns.push((e.to_vec(), c.clone()));
                }
                None => {
                    let k = target.require(name)?;
                    let mut e = vec![0; target.len()];
                    e[k] = 1;
                    columns.push((e, BigInt::one()));
                }
            }
        }
        let mut out: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0i32; target.len()];
            let mut nc = c.clone();
            for (&power, (col, cc)) in e.iter().zip(&columns) {
                if power == 0 {
                    continue;
                }
                for (x, y) in ne.iter_mut().zip(col) {
                    *x += power * y;
                }
                if !cc.is_one() {
                    if power < 0 {
                        if cc.abs() != BigInt::one() {
                            return Err(LaurentError::NonMonomialImage(format!(
                                "inverse of a coefficient {cc}"
                            )));
                        }
                        nc *= cc.pow(power.unsigned_abs());
                    } else {
                        nc *= cc.pow(power.unsigned_abs());
                    }
                }
            }
            accumulate(&mut out, &ne, nc);
        }
        Ok(LaurentPoly {
            vars: target.clone(),
            terms: out,
        })
    }

    /// The monomial whose exponent in each observed variable is the minimum
    /// over all terms; unobserved variables get exponent zero.
    pub fn tropical_eval(&self, observed: &[&str]) -> Result<Self, LaurentError> {
        let ks = observed
            .iter()
            .map(|n| self.vars.require(n))
            .collect::<Result<Vec<_>, _>>()?;
        let min = self.min_exponents().ok_or(LaurentError::ZeroPolynomial)?;
        let mut e = vec![0; self.vars.len()];
        for k in ks {
            e[k] = min[k];
        }
        Ok(Self::monomial(&self.vars, e, BigInt::one()))
    }

    /// Evaluates the named variables at 1; the result lives over the
    /// remaining variables.
    pub fn set_vars_to_one(&self, kill: &[&str]) -> Result<Self, LaurentError> {
        for n in kill {
            self.vars.require(n)?;
        }
        let keep: Vec<usize> = (0..self.vars.len())
            .filter(|&k| !kill.contains(&self.vars.names()[k].as_str()))
            .collect();
        let vars = VarSet::new(keep.iter().map(|&k| self.vars.names()[k].clone()))?;
        Ok(self.project(&vars, &keep))
    }

    fn project(&self, vars: &VarSet, keep: &[usize]) -> Self {
        let mut out: BTreeMap<Exponent, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let ne: Exponent = keep.iter().map(|&k| e[k]).collect();
            accumulate(&mut out, &ne, c.clone());
        }
        LaurentPoly {
            vars: vars.clone(),
            terms: out,
        }
    }

    /// Distinct exponent vectors restricted to `names`, sorted.
    pub fn newton_points(&self, names: &[&str]) -> Result<Vec<Vec<i32>>, LaurentError> {
        if self.is_zero() {
            return Err(LaurentError::ZeroPolynomial);
        }
        let ks = names
            .iter()
            .map(|n| self.vars.require(n))
            .collect::<Result<Vec<_>, _>>()?;
        let mut pts: Vec<Vec<i32>> = self
            .terms
            .keys()
            .map(|e| ks.iter().map(|&k| e[k]).collect())
            .collect();
        pts.sort_unstable();
        pts.dedup();
        Ok(pts)
    }

    /// Re-expresses the polynomial over `target`, which must contain every
    /// variable that actually occurs.
    pub fn with_vars(&self, target: &VarSet) -> Result<Self, LaurentError> {
        let map: Vec<Option<usize>> = self
            .vars
            .names()
            .iter()
            .map(|n| target.position(n))
            .collect();
        let mut out = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut ne = vec![0; target.len()];
            for (k, &x) in e.iter().enumerate() {
                if x != 0 {
                    let t = map[k].ok_or_else(|| {
                        LaurentError::UnknownVariable(self.vars.names()[k].clone())
                    })?;
                    ne[t] = x;
                }
            }
            out.insert(ne, c.clone());
        }
        Ok(LaurentPoly {
            vars: target.clone(),
            terms: out,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "vars": self.vars.names(),
            "terms": self
                .terms
                .iter()
                .rev()
                .map(|(e, c)| json!({"e": e, "c": c.to_string()}))
                .collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &Value) -> Result<Self, LaurentError> {
        let bad = |m: &str| LaurentError::Parse(m.to_string());
        let names = v["vars"]
            .as_array()
            .ok_or_else(|| bad("missing \"vars\""))?
            .iter()
            .map(|n| n.as_str().map(str::to_string).ok_or_else(|| bad("variable names must be strings")))
            .collect::<Result<Vec<_>, _>>()?;
        let vars = VarSet::new(names)?;
        let mut terms = Vec::new();
        for t in v["terms"].as_array().ok_or_else(|| bad("missing \"terms\""))? {
            let e = t["e"]
                .as_array()
                .ok_or_else(|| bad("term without \"e\""))?
                .iter()
                .map(|x| {
                    x.as_i64()
                        .and_then(|x| i32::try_from(x).ok())
                        .ok_or_else(|| bad("exponent out of range"))
                })
                .collect::<Result<Vec<_>, _>>()?;
            if e.len() != vars.len() {
                return Err(bad("exponent length differs from variable count"));
            }
            let c: BigInt = t["c"]
                .as_str()
                .ok_or_else(|| bad("coefficient must be a string"))?
                .parse()
                .map_err(|_| bad("bad coefficient"))?;
            terms.push((e, c));
        }
        Ok(Self::from_terms(&vars, terms))
    }

    /// Parses expressions such as `"(x2^2 + 2*x2 + x1*x3 + 1)/(x1*x2*x3)"`.
    /// Division is exact division; `^` takes an integer exponent.
    pub fn parse(vars: &VarSet, text: &str) -> Result<Self, LaurentError> {
        let mut p = Parser {
            vars,
            src: text.as_bytes(),
            pos: 0,
        };
        let result = p.expr()?;
        p.skip_ws();
        if p.pos != p.src.len() {
            return Err(LaurentError::Parse(format!(
                "unexpected input at byte {} of {text:?}",
                p.pos
            )));
        }
        Ok(result)
    }
}

fn accumulate(terms: &mut BTreeMap<Exponent, BigInt>, e: &[i32], c: BigInt) {
    if c.is_zero() {
        return;
    }
    match terms.get_mut(e) {
        Some(existing) => {
            *existing += c;
            if existing.is_zero() {
                terms.remove(e);
            }
        }
        None => {
            terms.insert(e.to_vec(), c);
        }
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mag = c.abs();
            let mut factors: Vec<String> = Vec::new();
            for (k, &x) in e.iter().enumerate() {
                let name = &self.vars.names()[k];
                match x {
                    0 => {}
                    1 => factors.push(name.clone()),
                    _ => factors.push(format!("{name}^{x}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                write!(f, "{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&LaurentPoly> for &LaurentPoly {
            type Output = LaurentPoly;
            /// Panics if the operands use different variable sets.
            fn $method(self, rhs: &LaurentPoly) -> LaurentPoly {
                self.$checked(rhs).expect("operands share a variable set")
            }
        }
        impl $trait<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $method(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

binop!(Add, add, try_add);
binop!(Sub, sub, try_sub);
binop!(Mul, mul, try_mul);

struct Parser<'a> {
    vars: &'a VarSet,
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn err(&self, msg: &str) -> LaurentError {
        LaurentError::Parse(format!("{msg} at byte {}", self.pos))
    }

    fn expr(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -self.term()?
            }
            _ => self.term()?,
        };
        loop {
            match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    acc = acc.try_add(&self.term()?)?;
                }
                Some(b'-') => {
                    self.pos += 1;
                    acc = acc.try_sub(&self.term()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<LaurentPoly, LaurentError> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(b'*') => {
                    self.pos += 1;
                    acc = acc.try_mul(&self.factor()?)?;
                }
                Some(b'/') => {
                    self.pos += 1;
                    acc = acc.div_exact(&self.factor()?)?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<LaurentPoly, LaurentError> {
        let base = match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                inner
            }
            Some(ch) if ch.is_ascii_digit() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                LaurentPoly::constant(self.vars, digits.parse().unwrap())
            }
            Some(ch) if ch.is_ascii_alphabetic() || ch == b'_' => {
                let start = self.pos;
                while self.pos < self.src.len()
                    && (self.src[self.pos].is_ascii_alphanumeric() || self.src[self.pos] == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                LaurentPoly::var(self.vars, name)?
            }
            _ => return Err(self.err("expected a factor")),
        };
        if self.peek() != Some(b'^') {
            return Ok(base);
        }
        self.pos += 1;
        let negative = if self.peek() == Some(b'-') {
            self.pos += 1;
            true
        } else {
            false
        };
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected an exponent"))?;
        if !negative {
            return Ok(base.pow(k));
        }
        let (e, c) = base
            .as_monomial()
            .ok_or_else(|| self.err("negative powers need a monomial base"))?;
        if !c.is_one() {
            return Err(self.err("negative powers need coefficient 1"));
        }
        let exp = i32::try_from(k).map_err(|_| self.err("exponent too large"))?;
        Ok(LaurentPoly::monomial(
            self.vars,
            e.iter().map(|x| -x * exp).collect(),
            BigInt::one(),
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy() -> VarSet {
        VarSet::new(["x1", "x2", "x3", "y1", "y2", "y3"]).unwrap()
    }

    fn p(vars: &VarSet, s: &str) -> LaurentPoly {
        LaurentPoly::parse(vars, s).unwrap()
    }

    #[test]
    fn display_orders_terms_descending() {
        let v = VarSet::numbered("y", 3);
        let f = p(&v, "1 + y3 + y1 + y1*y3 + y1*y2*y3");
        assert_eq!(f.to_string(), "y1*y2*y3 + y1*y3 + y1 + y3 + 1");
        assert_eq!(p(&v, "2*y2 - y1^-1").to_string(), "2*y2 - y1^-1");
        assert_eq!(LaurentPoly::zero(&v).to_string(), "0");
    }

    #[test]
    fn basic_arithmetic() {
        let v = xy();
        assert_eq!(p(&v, "(1+y1)*1"), p(&v, "1+y1"));
        assert_eq!(p(&v, "(x2+y1)*(x2-y1)"), p(&v, "x2^2 - y1^2"));
        assert!(p(&v, "x1 - x1").is_zero());
    }

    #[test]
    fn exact_division() {
        let v = xy();
        assert_eq!(p(&v, "x2^2 - 1").div_exact(&p(&v, "x2 - 1")).unwrap(), p(&v, "x2 + 1"));
        assert_eq!(
            p(&v, "(x2+1)*x1^-1*x3").div_exact(&p(&v, "x3")).unwrap(),
            p(&v, "(x2+1)*x1^-1")
        );
        assert!(matches!(
            p(&v, "x2^2 + 1").div_exact(&p(&v, "x2 + 1")),
            Err(LaurentError::NotDivisible(..))
        ));
        assert!(matches!(
            p(&v, "3*x1").div_exact(&p(&v, "2")),
            Err(LaurentError::NotDivisible(..))
        ));
        assert_eq!(
            p(&v, "x1").div_exact(&LaurentPoly::zero(&v)),
            Err(LaurentError::DivisionByZero)
        );
    }

    #[test]
    fn mismatched_var_sets() {
        let a = p(&VarSet::numbered("x", 2), "x1");
        let b = p(&VarSet::numbered("x", 3), "x1");
        assert_eq!(a.try_add(&b), Err(LaurentError::VarSetMismatch));
    }

    #[test]
    fn substitution() {
        let y = VarSet::numbered("y", 1);
        let z = VarSet::new(["z"]).unwrap();
        let images = HashMap::from([("y1".to_string(), p(&z, "z"))]);
        assert_eq!(p(&y, "1 + y1").substitute(&z, &images).unwrap(), p(&z, "1 + z"));

        let src = VarSet::new(["x2", "y3"]).unwrap();
        let tgt = VarSet::new(["x2", "z"]).unwrap();
        let images = HashMap::from([("y3".to_string(), p(&tgt, "z^-1"))]);
        assert_eq!(
            p(&src, "x2 + y3").substitute(&tgt, &images).unwrap(),
            p(&tgt, "x2 + z^-1")
        );
        let bad = HashMap::from([("y3".to_string(), p(&tgt, "z + 1"))]);
        assert_eq!(
            p(&src, "x2 + y3").substitute(&tgt, &bad),
            Err(LaurentError::NonMonomialImage("y3".into()))
        );
        assert_eq!(
            p(&src, "x2 + y3").substitute(&src, &HashMap::new()).unwrap(),
            p(&src, "x2 + y3")
        );
    }

    #[test]
    fn tropical_evaluation() {
        let v = VarSet::new(["x1", "x2", "x3", "z"]).unwrap();
        assert_eq!(
            p(&v, "x1*x3*z^-1 + x2 + z^-1").tropical_eval(&["z"]).unwrap(),
            p(&v, "z^-1")
        );
        assert!(p(&v, "x1*x3 + 1").tropical_eval(&["z"]).unwrap().is_one());
        assert_eq!(
            p(&v, "x1^2*z^3").tropical_eval(&["z"]).unwrap(),
            p(&v, "z^3")
        );
        assert_eq!(
            LaurentPoly::zero(&v).tropical_eval(&["z"]),
            Err(LaurentError::ZeroPolynomial)
        );
    }

    #[test]
    fn kill_variables() {
        let v = xy();
        let y = VarSet::numbered("y", 3);
        let xs = ["x1", "x2", "x3"];
        assert_eq!(p(&v, "(x2 + y1)/x1").set_vars_to_one(&xs).unwrap(), p(&y, "1 + y1"));
        assert_eq!(p(&v, "(x1*x3*y2 + 1)/x2").set_vars_to_one(&xs).unwrap(), p(&y, "y2 + 1"));
        assert_eq!(p(&v, "7").set_vars_to_one(&xs).unwrap(), p(&y, "7"));
    }

    #[test]
    fn newton_point_sets() {
        let y = VarSet::numbered("y", 3);
        let names = ["y1", "y2", "y3"];
        assert_eq!(
            p(&y, "1 + y1").newton_points(&names).unwrap(),
            vec![vec![0, 0, 0], vec![1, 0, 0]]
        );
        assert_eq!(
            p(&y, "y1*y2*y3 + y1*y3 + y1 + y3 + 1").newton_points(&names).unwrap().len(),
            5
        );
        assert_eq!(p(&y, "y2").newton_points(&names).unwrap(), vec![vec![0, 1, 0]]);
    }

    #[test]
    fn json_round_trip() {
        let v = xy();
        let f = p(&v, "(x2^2 + 2*x2*y1 - x1*x3*y3 + 1)/(x1*x2)");
        assert_eq!(LaurentPoly::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn parse_errors() {
        let v = xy();
        assert!(matches!(LaurentPoly::parse(&v, "x1 +"), Err(LaurentError::Parse(_))));
        assert!(matches!(
            LaurentPoly::parse(&v, "w"),
            Err(LaurentError::UnknownVariable(_))
        ));
        assert!(VarSet::new(["a", "a"]).is_err());
    }
}
