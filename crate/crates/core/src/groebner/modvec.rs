//! Vectors over a free module `Ring^rank`, the term order that drives all
//! Groebner computations, and elementary merge arithmetic.
//!
//! Components at or past the order's *fence* are ranked strictly below every
//! component in front of it. Kernel computations tag each input generator
//! with such a trailing component; because any term in the leading block
//! outranks the whole tag block, an element whose leading term sits behind
//! the fence is entirely supported behind it, which is what makes collected
//! tag vectors generate the kernel.

use crate::exactlin::FieldSpec;
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingPresentation, Term};
use std::cmp::Ordering;

/// Order on (component, monomial) pairs: term-over-position inside each side
/// of the fence, fenced components strictly smaller.
#[derive(Debug, Clone)]
pub struct ModOrder {
    mono: MonomialOrder,
    fence: u32,
}

impl ModOrder {
    pub fn new(mono: MonomialOrder, fence: u32) -> ModOrder {
        ModOrder { mono, fence }
    }

    pub fn for_ring(ring: &RingPresentation, fence: u32) -> ModOrder {
        ModOrder {
            mono: ring.order().clone(),
            fence,
        }
    }

    #[inline]
    pub fn fence(&self) -> u32 {
        self.fence
    }

    pub fn mono_order(&self) -> &MonomialOrder {
        &self.mono
    }

    #[inline]
    pub fn cmp(&self, ac: u32, am: &Monomial, bc: u32, bm: &Monomial) -> Ordering {
        let a_back = ac >= self.fence;
        let b_back = bc >= self.fence;
        if a_back != b_back {
            return if a_back {
                Ordering::Less
            } else {
                Ordering::Greater
            };
        }
        self.mono
            .cmp(am, bm)
            .then_with(|| bc.cmp(&ac)) // earlier component ranks higher
    }
}

/// Single term of a module vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MTerm {
    pub comp: u32,
    pub coeff: u16,
    pub mono: Monomial,
}

/// Module vector: term list sorted strictly descending under a [`ModOrder`],
/// all coefficients nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ModVec {
    terms: Vec<MTerm>,
}

impl ModVec {
    pub fn zero() -> ModVec {
        ModVec { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[MTerm] {
        &self.terms
    }

    pub fn leading(&self) -> Option<&MTerm> {
        self.terms.first()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Sort, merge duplicates, and drop zero coefficients.
    pub fn from_terms(mut terms: Vec<MTerm>, ord: &ModOrder, field: FieldSpec) -> ModVec {
        terms.retain(|t| t.coeff != 0);
        terms.sort_by(|a, b| ord.cmp(b.comp, &b.mono, a.comp, &a.mono));
        let mut out: Vec<MTerm> = Vec::with_capacity(terms.len());
        for t in terms {
            match out.last_mut() {
                Some(last) if last.comp == t.comp && last.mono == t.mono => {
                    last.coeff = field.add(last.coeff, t.coeff);
                }
                _ => out.push(t),
            }
        }
        out.retain(|t| t.coeff != 0);
        ModVec { terms: out }
    }

    /// Place a polynomial into component `comp`.
    pub fn embed(p: &Polynomial, comp: u32) -> ModVec {
        ModVec {
            terms: p
                .terms()
                .iter()
                .map(|t| MTerm {
                    comp,
                    coeff: t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// `self + c * mono * other`, one merge pass. `c` must be nonzero.
    pub fn axpy(
        &self,
        c: u16,
        mono: &Monomial,
        other: &ModVec,
        ord: &ModOrder,
        field: FieldSpec,
    ) -> ModVec {
        debug_assert!(c != 0);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            let bm = b.mono.mul(mono);
            match ord.cmp(a.comp, &a.mono, b.comp, &bm) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(MTerm {
                        comp: b.comp,
                        coeff: field.mul(b.coeff, c),
                        mono: bm,
                    });
                    j += 1;
                }
                Ordering::Equal => {
                    let s = field.add(a.coeff, field.mul(b.coeff, c));
                    if s != 0 {
                        out.push(MTerm {
                            comp: a.comp,
                            coeff: s,
                            mono: a.mono.clone(),
                        });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        for b in &other.terms[j..] {
            out.push(MTerm {
                comp: b.comp,
                coeff: field.mul(b.coeff, c),
                mono: b.mono.mul(mono),
            });
        }
        ModVec { terms: out }
    }

    pub fn add(&self, other: &ModVec, ord: &ModOrder, field: FieldSpec) -> ModVec {
        if other.is_zero() {
            return self.clone();
        }
        self.axpy(1, &Monomial::one(other.terms[0].mono.exps().len()), other, ord, field)
    }

    pub fn sub(&self, other: &ModVec, ord: &ModOrder, field: FieldSpec) -> ModVec {
        if other.is_zero() {
            return self.clone();
        }
        self.axpy(
            field.neg(1),
            &Monomial::one(other.terms[0].mono.exps().len()),
            other,
            ord,
            field,
        )
    }

    pub fn mul_term(&self, c: u16, mono: &Monomial, field: FieldSpec) -> ModVec {
        if c == 0 {
            return ModVec::zero();
        }
        // Monomial orders are multiplication-invariant, so sortedness holds.
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp,
                    coeff: field.mul(t.coeff, c),
                    mono: t.mono.mul(mono),
                })
                .collect(),
        }
    }

    pub fn neg(&self, field: FieldSpec) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp,
                    coeff: field.neg(t.coeff),
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Scale so the leading coefficient is 1.
    pub fn monic(&self, field: FieldSpec) -> ModVec {
        match self.terms.first() {
            None => ModVec::zero(),
            Some(lead) if lead.coeff == 1 => self.clone(),
            Some(lead) => {
                let inv = field.inv(lead.coeff);
                ModVec {
                    terms: self
                        .terms
                        .iter()
                        .map(|t| MTerm {
                            comp: t.comp,
                            coeff: field.mul(t.coeff, inv),
                            mono: t.mono.clone(),
                        })
                        .collect(),
                }
            }
        }
    }

    /// Remove the leading term, returning it.
    pub fn pop_leading(&mut self) -> Option<MTerm> {
        if self.terms.is_empty() {
            None
        } else {
            Some(self.terms.remove(0))
        }
    }

    /// Coefficient polynomial sitting in component `comp` (terms stay sorted
    /// under the underlying monomial order because the fence never splits a
    /// single component).
    pub fn component(&self, comp: u32) -> Polynomial {
        let terms: Vec<Term> = self
            .terms
            .iter()
            .filter(|t| t.comp == comp)
            .map(|t| Term {
                coeff: t.coeff,
                mono: t.mono.clone(),
            })
            .collect();
        Polynomial::from_sorted_terms(terms)
    }

    /// Keep only components in `range`, shifting them down by `range.start`.
    pub fn restrict(&self, range: std::ops::Range<u32>) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .filter(|t| range.contains(&t.comp))
                .map(|t| MTerm {
                    comp: t.comp - range.start,
                    coeff: t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Shift every component up by `delta`.
    pub fn shift(&self, delta: u32) -> ModVec {
        ModVec {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm {
                    comp: t.comp + delta,
                    coeff: t.coeff,
                    mono: t.mono.clone(),
                })
                .collect(),
        }
    }

    /// Largest component index present, if any.
    pub fn max_comp(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.comp).max()
    }

    /// Maximum weighted degree over all terms; `None` when zero.
    pub fn weighted_degree(&self) -> Option<u32> {
        self.terms.iter().map(|t| t.mono.weighted_degree()).max()
    }

    /// All terms lie strictly behind the fence.
    pub fn is_behind(&self, fence: u32) -> bool {
        self.terms.iter().all(|t| t.comp >= fence)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::polyring::RingPresentation;
    use std::sync::Arc;

    fn simple_ring() -> Arc<RingPresentation> {
        RingPresentation::new(
            FieldSpec::new(5).unwrap(),
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
            vec![],
            false,
        )
        .unwrap()
    }

    #[test]
    fn fence_dominates_component_order() {
        let r = simple_ring();
        let ord = ModOrder::for_ring(&r, 2);
        let x = r.parse("x").unwrap();
        let big = r.parse("x^9*y^9").unwrap();
        let m_small = &x.leading_term().unwrap().mono;
        let m_big = &big.leading_term().unwrap().mono;
        // Component 0 with a tiny monomial still beats component 2 (behind
        // the fence) with a huge one.
        assert_eq!(ord.cmp(0, m_small, 2, m_big), Ordering::Greater);
        // In front of the fence, the monomial decides first.
        assert_eq!(ord.cmp(1, m_big, 0, m_small), Ordering::Greater);
        // Equal monomials: earlier component wins.
        assert_eq!(ord.cmp(0, m_small, 1, m_small), Ordering::Greater);
    }

    #[test]
    fn axpy_merges_and_cancels() {
        let r = simple_ring();
        let ord = ModOrder::for_ring(&r, 4);
        let f = FieldSpec::new(5).unwrap();
        let p = r.parse("x^2+2*y").unwrap();
        let q = r.parse("x+3").unwrap();
        let a = ModVec::embed(&p, 0);
        let b = ModVec::embed(&q, 0);
        // a + x*b = x^2 + 2y + x^2 + 3x = 2x^2 + 3x + 2y.
        let x_mono = r.parse("x").unwrap().leading_term().unwrap().mono.clone();
        let s = a.axpy(1, &x_mono, &b, &ord, f);
        assert_eq!(s.component(0), r.parse("2*x^2+3*x+2*y").unwrap());
        // Subtracting it back in two steps returns a.
        let t = s.axpy(f.neg(1), &x_mono, &b, &ord, f);
        assert_eq!(t, a);
    }

    #[test]
    fn component_extraction_roundtrip() {
        let r = simple_ring();
        let ord = ModOrder::for_ring(&r, 4);
        let f = FieldSpec::new(5).unwrap();
        let p0 = r.parse("x^3+y").unwrap();
        let p2 = r.parse("4*y^2+1").unwrap();
        let v = ModVec::embed(&p0, 0).add(&ModVec::embed(&p2, 2), &ord, f);
        assert_eq!(v.component(0), p0);
        assert_eq!(v.component(1), Polynomial::zero());
        assert_eq!(v.component(2), p2);
        let r2 = v.restrict(2..3);
        assert_eq!(r2.component(0), p2);
        assert_eq!(v.max_comp(), Some(2));
    }

    #[test]
    fn monic_scales_leading_coefficient() {
        let r = simple_ring();
        let f = FieldSpec::new(5).unwrap();
        let v = ModVec::embed(&r.parse("3*x^2+y").unwrap(), 0);
        let m = v.monic(f);
        assert_eq!(m.leading().unwrap().coeff, 1);
        // 3 * inv(3) = 1 and 1 * inv(3) = 2 over GF(5).
        assert_eq!(m.component(0), r.parse("x^2+2*y").unwrap());
    }
}
