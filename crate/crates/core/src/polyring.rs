//! Multivariate polynomial arithmetic over GF(p) with weighted graded
//! reverse-lexicographic term orders.
//!
//! Monomials cache their weighted degree, so comparisons never touch the
//! weight vector except in elimination mode. All polynomial operations take
//! the owning [`RingPresentation`] explicitly; polynomials themselves are
//! plain sorted term lists with no back-reference.

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::fmt::Write as _;
use std::sync::{Arc, OnceLock};

/// Exponent vector with cached weighted degree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: SmallVec<[u8; 12]>,
    wdeg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial {
            exps: SmallVec::from_elem(0, nvars),
            wdeg: 0,
        }
    }

    pub fn from_exps(exps: &[u8], weights: &[u32]) -> Monomial {
        assert_eq!(exps.len(), weights.len());
        let wdeg = exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as u32 * w)
            .sum();
        Monomial {
            exps: SmallVec::from_slice(exps),
            wdeg,
        }
    }

    pub fn var(i: usize, nvars: usize, weights: &[u32]) -> Monomial {
        let mut exps = SmallVec::from_elem(0u8, nvars);
        exps[i] = 1;
        Monomial {
            exps,
            wdeg: weights[i],
        }
    }

    #[inline]
    pub fn exps(&self) -> &[u8] {
        &self.exps
    }

    #[inline]
    pub fn weighted_degree(&self) -> u32 {
        self.wdeg
    }

    /// Unweighted total degree.
    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.wdeg == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| {
                let s = a as u16 + b as u16;
                assert!(s <= u8::MAX as u16, "exponent overflow");
                s as u8
            })
            .collect();
        Monomial {
            exps,
            wdeg: self.wdeg + other.wdeg,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.wdeg <= other.wdeg && self.exps.iter().zip(&other.exps).all(|(&a, &b)| a <= b)
    }

    /// `other / self`, if divisible.
    pub fn div_into(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let exps = other
            .exps
            .iter()
            .zip(&self.exps)
            .map(|(&b, &a)| b - a)
            .collect();
        Some(Monomial {
            exps,
            wdeg: other.wdeg - self.wdeg,
        })
    }

    pub fn lcm(&self, other: &Monomial, weights: &[u32]) -> Monomial {
        let exps: SmallVec<[u8; 12]> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(&a, &b)| a.max(b))
            .collect();
        let wdeg = exps.iter().zip(weights).map(|(&e, &w)| e as u32 * w).sum();
        Monomial { exps, wdeg }
    }

    /// True when the supports are disjoint (Buchberger's product criterion).
    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(&a, &b)| a == 0 || b == 0)
    }

    /// Raise to the q-th power (Frobenius). Errors on exponent overflow.
    pub fn power(&self, q: u32) -> Result<Monomial> {
        let mut exps = SmallVec::with_capacity(self.exps.len());
        for &e in &self.exps {
            let v = e as u32 * q;
            if v > u8::MAX as u32 {
                return Err(Error::Resource {
                    what: "monomial exponent",
                    reached: v as u64,
                    limit: u8::MAX as u64,
                });
            }
            exps.push(v as u8);
        }
        Ok(Monomial {
            exps,
            wdeg: self.wdeg * q,
        })
    }
}

/// Weighted grevlex, optionally in two blocks for elimination.
///
/// With `elim_split = Some(k)`, variables `k..` form the block to be
/// eliminated: monomials are compared first by weighted grevlex on that
/// block, ties broken by weighted grevlex on variables `..k`. Any term
/// containing an eliminated variable therefore outranks every term free of
/// them, which is exactly the property subring-intersection proofs need.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialOrder {
    weights: Vec<u32>,
    elim_split: Option<usize>,
}

impl MonomialOrder {
    pub fn grevlex(weights: Vec<u32>) -> MonomialOrder {
        MonomialOrder {
            weights,
            elim_split: None,
        }
    }

    pub fn eliminating(weights: Vec<u32>, split: usize) -> MonomialOrder {
        assert!(split <= weights.len());
        MonomialOrder {
            weights,
            elim_split: Some(split),
        }
    }

    #[inline]
    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn nvars(&self) -> usize {
        self.weights.len()
    }

    pub fn elim_split(&self) -> Option<usize> {
        self.elim_split
    }

    /// Weighted degree of a slice of the exponent vector.
    fn block_wdeg(&self, m: &Monomial, range: std::ops::Range<usize>) -> u32 {
        m.exps[range.clone()]
            .iter()
            .zip(&self.weights[range])
            .map(|(&e, &w)| e as u32 * w)
            .sum()
    }

    /// Grevlex comparison restricted to `range`, assuming equal block degree.
    fn revlex_tiebreak(a: &Monomial, b: &Monomial, range: std::ops::Range<usize>) -> Ordering {
        // Scan from the last variable: the first difference decides, and the
        // smaller exponent there belongs to the larger monomial.
        for i in range.rev() {
            match a.exps[i].cmp(&b.exps[i]) {
                Ordering::Equal => {}
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
            }
        }
        Ordering::Equal
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let n = self.weights.len();
        match self.elim_split {
            None => a
                .wdeg
                .cmp(&b.wdeg)
                .then_with(|| Self::revlex_tiebreak(a, b, 0..n)),
            Some(k) => {
                let da = self.block_wdeg(a, k..n);
                let db = self.block_wdeg(b, k..n);
                da.cmp(&db)
                    .then_with(|| Self::revlex_tiebreak(a, b, k..n))
                    .then_with(|| (a.wdeg - da).cmp(&(b.wdeg - db)))
                    .then_with(|| Self::revlex_tiebreak(a, b, 0..k))
            }
        }
    }
}

/// One summand of a polynomial: a nonzero residue times a monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: u16,
    pub mono: Monomial,
}

/// Polynomial as a term list, sorted strictly descending under the ring's
/// order, coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Polynomial {
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero() -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Wrap a term list that is already strictly descending and zero-free.
    pub(crate) fn from_sorted_terms(terms: Vec<Term>) -> Polynomial {
        debug_assert!(terms.iter().all(|t| t.coeff != 0));
        Polynomial { terms }
    }

    /// Build from raw (coeff, monomial) pairs; merges duplicates, drops zeros.
    pub fn from_terms(mut terms: Vec<Term>, ring: &RingPresentation) -> Polynomial {
        terms.retain(|t| t.coeff != 0);
        terms.sort_by(|a, b| ring.order.cmp(&b.mono, &a.mono));
        let mut out: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.mono == t.mono => {
                    last.coeff = ring.field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        Polynomial { terms: out }
    }

    pub fn constant(c: u16, ring: &RingPresentation) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term {
                coeff: c,
                mono: Monomial::one(ring.nvars()),
            }],
        }
    }

    pub fn variable(i: usize, ring: &RingPresentation) -> Polynomial {
        Polynomial {
            terms: vec![Term {
                coeff: 1,
                mono: Monomial::var(i, ring.nvars(), ring.order.weights()),
            }],
        }
    }

    pub fn monomial(m: Monomial, c: u16) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: vec![Term { coeff: c, mono: m }],
        }
    }

    pub fn add(&self, other: &Polynomial, ring: &RingPresentation) -> Polynomial {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match ring.order.cmp(&a.mono, &b.mono) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b.clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = ring.field.add(a.coeff, b.coeff);
                    if c != 0 {
                        out.push(Term {
                            coeff: c,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Polynomial { terms: out }
    }

    pub fn neg(&self, ring: &RingPresentation) -> Polynomial {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: ring.field.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial, ring: &RingPresentation) -> Polynomial {
        self.add(&other.neg(ring), ring)
    }

    /// Multiply by a single term.
    pub fn mul_term(&self, c: u16, m: &Monomial, ring: &RingPresentation) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: ring.field.mul(t.coeff, c),
                    mono: t.mono.mul(m),
                })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial, ring: &RingPresentation) -> Polynomial {
        let mut products = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                products.push(Term {
                    coeff: ring.field.mul(a.coeff, b.coeff),
                    mono: a.mono.mul(&b.mono),
                });
            }
        }
        Polynomial::from_terms(products, ring)
    }

    pub fn scale(&self, c: u16, ring: &RingPresentation) -> Polynomial {
        if c == 0 {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: ring.field.mul(t.coeff, c),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Term-wise q-th power with q a power of the characteristic. Prime-field
    /// coefficients are Frobenius-fixed, so only exponents scale.
    pub fn frobenius_power(&self, q: u32, ring: &RingPresentation) -> Result<Polynomial> {
        let _ = ring;
        let terms = self
            .terms
            .iter()
            .map(|t| {
                Ok(Term {
                    coeff: t.coeff,
                    mono: t.mono.power(q)?,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        // Term order is preserved by x -> x^q on grevlex-comparable terms,
        // but re-sorting costs little and keeps the invariant unconditional.
        Ok(Polynomial::from_terms(terms, ring))
    }

    /// Weighted degree of the polynomial (max over terms); `None` for zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.weighted_degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(first) => {
                let d = first.mono.weighted_degree();
                self.terms.iter().all(|t| t.mono.weighted_degree() == d)
            }
        }
    }

    /// Constant coefficient (the coefficient of the monomial 1).
    pub fn constant_coeff(&self) -> u16 {
        self.terms
            .iter()
            .find(|t| t.mono.is_one())
            .map_or(0, |t| t.coeff)
    }

    /// True when the polynomial has a unit constant term, i.e. is invertible
    /// in the local ring at the irrelevant maximal ideal.
    pub fn has_unit_constant(&self) -> bool {
        self.constant_coeff() != 0
    }

    /// Rebuild this polynomial over `target`, sending variable `i` of the
    /// source to variable `var_map[i]` of the target. Weighted degrees are
    /// recomputed with the target's weights.
    pub fn map_vars(
        &self,
        var_map: &[usize],
        target: &RingPresentation,
    ) -> Result<Polynomial> {
        let tn = target.nvars();
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            if t.mono.exps().len() != var_map.len() {
                return Err(Error::RingMismatch(
                    "variable map length does not match source arity".into(),
                ));
            }
            let mut exps = vec![0u8; tn];
            for (i, &e) in t.mono.exps().iter().enumerate() {
                if e > 0 {
                    let j = var_map[i];
                    if j >= tn {
                        return Err(Error::RingMismatch(format!(
                            "variable map sends {i} out of range"
                        )));
                    }
                    exps[j] += e;
                }
            }
            terms.push(Term {
                coeff: t.coeff,
                mono: Monomial::from_exps(&exps, target.order.weights()),
            });
        }
        Ok(Polynomial::from_terms(terms, target))
    }

    /// Render in the exchange grammar: terms joined by `+`, each term an
    /// optional coefficient and `*`-separated variable powers.
    pub fn render(&self, ring: &RingPresentation) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push('+');
            }
            let mut factors: Vec<String> = Vec::new();
            for (i, &e) in t.mono.exps().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(ring.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", ring.vars[i], e)),
                }
            }
            if factors.is_empty() {
                let _ = write!(s, "{}", t.coeff);
            } else {
                if t.coeff != 1 {
                    let _ = write!(s, "{}*", t.coeff);
                }
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

/// A quotient ring presentation: ambient polynomial ring (named, weighted
/// variables over GF(p)) together with defining-ideal generators.
///
/// An empty ideal presents the polynomial ring itself.
#[derive(Debug)]
pub struct RingPresentation {
    pub(crate) field: FieldSpec,
    vars: Vec<String>,
    order: MonomialOrder,
    ideal: Vec<Polynomial>,
    /// Reduced Groebner basis of `ideal`, filled on first use by the
    /// `groebner` module.
    pub(crate) ideal_gb: OnceLock<Vec<Polynomial>>,
}

impl PartialEq for RingPresentation {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field
            && self.vars == other.vars
            && self.order == other.order
            && self.ideal == other.ideal
    }
}

impl RingPresentation {
    /// Build a presentation; when `require_homogeneous` is set, every ideal
    /// generator must be homogeneous for the given weights.
    pub fn new(
        field: FieldSpec,
        vars: Vec<(String, u32)>,
        ideal: Vec<Polynomial>,
        require_homogeneous: bool,
    ) -> Result<Arc<RingPresentation>> {
        let weights: Vec<u32> = vars.iter().map(|(_, w)| *w).collect();
        Self::with_order(
            field,
            vars,
            MonomialOrder::grevlex(weights),
            ideal,
            require_homogeneous,
        )
    }

    /// Like [`RingPresentation::new`] but with an explicit monomial order
    /// (e.g. a two-block elimination order). The order's weights must agree
    /// with the per-variable weights.
    pub fn with_order(
        field: FieldSpec,
        vars: Vec<(String, u32)>,
        order: MonomialOrder,
        ideal: Vec<Polynomial>,
        require_homogeneous: bool,
    ) -> Result<Arc<RingPresentation>> {
        let names: Vec<String> = vars.iter().map(|(n, _)| n.clone()).collect();
        let weights: Vec<u32> = vars.iter().map(|(_, w)| *w).collect();
        if weights.iter().any(|&w| w == 0) {
            return Err(Error::Precondition("weights must be positive".into()));
        }
        if order.weights() != weights.as_slice() {
            return Err(Error::Precondition(
                "order weights disagree with variable weights".into(),
            ));
        }
        let mut uniq = names.clone();
        uniq.sort();
        uniq.dedup();
        if uniq.len() != names.len() {
            return Err(Error::Precondition("duplicate variable names".into()));
        }
        for (i, g) in ideal.iter().enumerate() {
            for t in g.terms() {
                if t.mono.exps().len() != names.len() {
                    return Err(Error::RingMismatch(format!(
                        "ideal generator {i} has wrong arity"
                    )));
                }
            }
            if require_homogeneous && !g.is_homogeneous() {
                return Err(Error::Precondition(format!(
                    "ideal generator {i} is not homogeneous under the stored weights"
                )));
            }
        }
        Ok(Arc::new(RingPresentation {
            field,
            vars: names,
            order,
            ideal,
            ideal_gb: OnceLock::new(),
        }))
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    #[inline]
    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn ideal(&self) -> &[Polynomial] {
        &self.ideal
    }

    /// Short human description of the order, echoed into reports.
    pub fn order_description(&self) -> String {
        let kind = match self.order.elim_split() {
            Some(s) => format!("block-elimination(split={s})/grevlex"),
            None => "grevlex".to_string(),
        };
        format!(
            "{kind}, vars ({}), weights {:?}",
            self.vars.join(","),
            self.order.weights()
        )
    }

    /// All monomials of weighted degree at most `bound`, sorted descending.
    pub fn monomials_up_to(&self, bound: u32) -> Vec<Monomial> {
        let weights = self.order.weights();
        let n = weights.len();
        let mut out = Vec::new();
        let mut exps = vec![0u8; n];
        fn rec(
            i: usize,
            left: u32,
            exps: &mut [u8],
            weights: &[u32],
            out: &mut Vec<Monomial>,
        ) {
            if i == weights.len() {
                out.push(Monomial::from_exps(exps, weights));
                return;
            }
            let max_e = (left / weights[i]).min(u8::MAX as u32);
            for e in 0..=max_e {
                exps[i] = e as u8;
                rec(i + 1, left - e * weights[i], exps, weights, out);
            }
            exps[i] = 0;
        }
        rec(0, bound, &mut exps, weights, &mut out);
        out.sort_by(|a, b| self.order.cmp(b, a));
        out
    }

    /// Parse the exchange grammar. Accepts `-` as a term separator and sign
    /// for readability; coefficients are reduced into `[0, p)`.
    pub fn parse(&self, text: &str) -> Result<Polynomial> {
        let text = text.trim();
        if text.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        if text == "0" {
            return Ok(Polynomial::zero());
        }
        let mut terms: Vec<Term> = Vec::new();
        let mut rest = text;
        let mut sign_neg = false;
        if let Some(r) = rest.strip_prefix('-') {
            sign_neg = true;
            rest = r.trim_start();
        } else if let Some(r) = rest.strip_prefix('+') {
            rest = r.trim_start();
        }
        loop {
            // Take the next term: up to an unparenthesised + or -.
            let end = rest
                .char_indices()
                .find(|&(_, c)| c == '+' || c == '-')
                .map(|(i, _)| i)
                .unwrap_or(rest.len());
            let (term_str, tail) = rest.split_at(end);
            let term_str = term_str.trim();
            if term_str.is_empty() {
                return Err(Error::Parse("empty term".into()));
            }
            terms.push(self.parse_term(term_str, sign_neg)?);
            if tail.is_empty() {
                break;
            }
            sign_neg = tail.starts_with('-');
            rest = tail[1..].trim_start();
        }
        Ok(Polynomial::from_terms(terms, self))
    }

    fn parse_term(&self, s: &str, negate: bool) -> Result<Term> {
        let mut coeff: i64 = 1;
        let mut exps = vec![0u8; self.nvars()];
        for factor in s.split('*') {
            let factor = factor.trim();
            if factor.is_empty() {
                return Err(Error::Parse(format!("empty factor in term `{s}`")));
            }
            if factor.chars().next().unwrap().is_ascii_digit() {
                let v: i64 = factor
                    .parse()
                    .map_err(|e| Error::Parse(format!("coefficient `{factor}`: {e}")))?;
                coeff = coeff
                    .checked_mul(v)
                    .ok_or_else(|| Error::Parse("coefficient overflow".into()))?;
                continue;
            }
            let (name, exp) = match factor.split_once('^') {
                Some((n, e)) => {
                    let exp: u32 = e
                        .trim()
                        .parse()
                        .map_err(|err| Error::Parse(format!("exponent `{e}`: {err}")))?;
                    (n.trim(), exp)
                }
                None => (factor, 1),
            };
            let idx = self
                .var_index(name)
                .ok_or_else(|| Error::Parse(format!("unknown variable `{name}`")))?;
            let total = exps[idx] as u32 + exp;
            if total > u8::MAX as u32 {
                return Err(Error::Parse(format!("exponent too large on `{name}`")));
            }
            exps[idx] = total as u8;
        }
        if negate {
            coeff = -coeff;
        }
        Ok(Term {
            coeff: self.field.from_i64(coeff),
            mono: Monomial::from_exps(&exps, self.order.weights()),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring_a() -> Arc<RingPresentation> {
        let field = FieldSpec::new(2).unwrap();
        let vars: Vec<(String, u32)> = ["u", "v", "w", "x", "y", "z"]
            .iter()
            .map(|s| (s.to_string(), 1))
            .collect();
        let r = RingPresentation::new(field, vars, vec![], false).unwrap();
        let hyp = r.parse("u*x+v*y+w*z").unwrap();
        RingPresentation::new(r.field(), r.vars().iter().map(|v| (v.clone(), 1)).collect(), vec![hyp], true)
            .unwrap()
    }

    #[test]
    fn grevlex_ordering_matches_convention() {
        let r = ring_a();
        // In grevlex with u > v > w > x > y > z: u*x > v*y > w*z.
        let ux = r.parse("u*x").unwrap();
        let vy = r.parse("v*y").unwrap();
        let wz = r.parse("w*z").unwrap();
        let ord = r.order();
        assert_eq!(
            ord.cmp(&ux.leading_term().unwrap().mono, &vy.leading_term().unwrap().mono),
            Ordering::Greater
        );
        assert_eq!(
            ord.cmp(&vy.leading_term().unwrap().mono, &wz.leading_term().unwrap().mono),
            Ordering::Greater
        );
        // Leading term of the hypersurface relation is u*x.
        let hyp = r.parse("u*x+v*y+w*z").unwrap();
        assert_eq!(hyp.leading_term().unwrap().mono, ux.leading_term().unwrap().mono);
        // Classic grevlex check: y^2 > x*z in three of the variables.
        let y2 = r.parse("y^2").unwrap();
        let xz = r.parse("x*z").unwrap();
        assert_eq!(
            ord.cmp(&y2.leading_term().unwrap().mono, &xz.leading_term().unwrap().mono),
            Ordering::Greater
        );
    }

    #[test]
    fn arithmetic_respects_characteristic() {
        let r = ring_a();
        let f = r.parse("u+v").unwrap();
        let sq = f.mul(&f, &r);
        // (u+v)^2 = u^2 + v^2 in characteristic 2.
        assert_eq!(sq, r.parse("u^2+v^2").unwrap());
        assert!(f.sub(&f, &r).is_zero());
    }

    #[test]
    fn frobenius_power_is_termwise() {
        let r = ring_a();
        let f = r.parse("u*x+v*y+w*z").unwrap();
        let f2 = f.frobenius_power(2, &r).unwrap();
        assert_eq!(f2, r.parse("u^2*x^2+v^2*y^2+w^2*z^2").unwrap());
        let f4 = f.frobenius_power(4, &r).unwrap();
        assert_eq!(f4, f2.frobenius_power(2, &r).unwrap());
    }

    #[test]
    fn parse_render_roundtrip() {
        let r = ring_a();
        for src in ["0", "1", "u", "u^2*v+w", "u*x+v*y+w*z", "z^5"] {
            let p = r.parse(src).unwrap();
            let rendered = p.render(&r);
            assert_eq!(r.parse(&rendered).unwrap(), p, "roundtrip of {src}");
        }
        // Signs fold into the characteristic.
        let m = r.parse("u-v").unwrap();
        assert_eq!(m, r.parse("u+v").unwrap());
        assert!(r.parse("q+1").is_err());
        assert!(r.parse("").is_err());
    }

    #[test]
    fn weighted_homogeneity() {
        let field = FieldSpec::new(2).unwrap();
        let vars = vec![("s".to_string(), 2), ("t".to_string(), 3)];
        let r = RingPresentation::new(field, vars, vec![], false).unwrap();
        let f = r.parse("s^3+t^2").unwrap(); // degrees 6 and 6
        assert!(f.is_homogeneous());
        assert_eq!(f.weighted_degree(), Some(6));
        let g = r.parse("s+t").unwrap();
        assert!(!g.is_homogeneous());
    }

    #[test]
    fn elimination_order_separates_blocks() {
        // Variables (x, y | t): t is the eliminated block.
        let ord = MonomialOrder::eliminating(vec![1, 1, 1], 2);
        let w = &[1u32, 1, 1];
        let t = Monomial::from_exps(&[0, 0, 1], w);
        let x5 = Monomial::from_exps(&[5, 0, 0], w);
        assert_eq!(ord.cmp(&t, &x5), Ordering::Greater);
        let xt = Monomial::from_exps(&[1, 0, 1], w);
        assert_eq!(ord.cmp(&xt, &t), Ordering::Greater);
    }

    #[test]
    fn monomial_enumeration_counts() {
        let r = ring_a();
        // Degrees 0..=2 in six unit-weight variables: 1 + 6 + 21.
        assert_eq!(r.monomials_up_to(2).len(), 28);
        let field = FieldSpec::new(2).unwrap();
        let wr = RingPresentation::new(
            field,
            vec![("s".to_string(), 2), ("t".to_string(), 3)],
            vec![],
            false,
        )
        .unwrap();
        // Weighted degree <= 6: 1, s, s^2, s^3, t, t^2, s*t.
        assert_eq!(wr.monomials_up_to(6).len(), 7);
    }

    #[test]
    fn map_vars_swaps_and_lifts() {
        let r = ring_a();
        let f = r.parse("u*x+v*y+w*z").unwrap();
        // Swap u and x: the relation is symmetric under it.
        let swapped = f.map_vars(&[3, 1, 2, 0, 4, 5], &r).unwrap();
        assert_eq!(swapped, f);
        let g = r.parse("u^2+y").unwrap();
        let gs = g.map_vars(&[3, 1, 2, 0, 4, 5], &r).unwrap();
        assert_eq!(gs, r.parse("x^2+y").unwrap());
    }
}
