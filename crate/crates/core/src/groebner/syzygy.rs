//! Kernel generators for maps into free modules and quotients of free
//! modules over a presented ring.
//!
//! To find all relations `sum a_i * g_i = 0` (modulo the span of the
//! `untagged` vectors and the defining ideal), each tagged generator is
//! extended with a unit in its own fresh component behind the fence. The
//! completion of the extended family is run with the fenced order; every
//! element whose support lies entirely behind the fence *is* a relation, and
//! together they generate all of them. Untagged vectors take part in the
//! completion but contribute no coordinates to the output — exactly right
//! for presenting kernels of maps into quotient modules and for colon
//! computations.

use crate::error::Result;
use crate::groebner::engine::{ideal_basis, reduce_mod_ideal, Budget, IncrementalGb};
use crate::groebner::modvec::{MTerm, ModOrder, ModVec};
use crate::polyring::{Monomial, RingPresentation};
use std::sync::Arc;

/// A saturated fenced completion over a tagged generator family. Exposes
/// both the relation generators (syzygies of the tagged family) and exact
/// span-membership queries against the same basis, so callers that need both
/// pay for a single completion.
pub struct KernelRun {
    eng: IncrementalGb,
    ring: Arc<RingPresentation>,
    rank: usize,
    s: usize,
    budget: Budget,
}

impl KernelRun {
    pub fn new(
        ring: &Arc<RingPresentation>,
        rank: usize,
        tagged: &[ModVec],
        untagged: &[ModVec],
        budget: &Budget,
    ) -> Result<KernelRun> {
        Self::build(ring, rank, tagged, untagged, budget, None)
    }

    /// Like [`KernelRun::new`], but the completion only processes pairs whose
    /// lcm weighted degree is at most `through`. The relations collected are
    /// then merely a certified *subset* of a generating set — each one is
    /// still an exact relation — so this run is suitable for pre-filtering
    /// redundant generators, not for exhaustive kernel computation, and
    /// `in_span` must not be trusted on it.
    pub fn new_bounded(
        ring: &Arc<RingPresentation>,
        rank: usize,
        tagged: &[ModVec],
        untagged: &[ModVec],
        budget: &Budget,
        through: u32,
    ) -> Result<KernelRun> {
        Self::build(ring, rank, tagged, untagged, budget, Some(through))
    }

    fn build(
        ring: &Arc<RingPresentation>,
        rank: usize,
        tagged: &[ModVec],
        untagged: &[ModVec],
        budget: &Budget,
        through: Option<u32>,
    ) -> Result<KernelRun> {
        let s = tagged.len();
        let field = ring.field();
        let mut eng = IncrementalGb::new(ring, rank, s, true, true, budget)?;
        for (i, g) in tagged.iter().enumerate() {
            let mut terms = g.terms().to_vec();
            terms.push(MTerm {
                comp: (rank + i) as u32,
                coeff: 1,
                mono: Monomial::one(ring.nvars()),
            });
            let w = ModVec::from_terms(terms, eng.order(), field);
            eng.add_generator(w, false)?;
        }
        for u in untagged {
            eng.add_generator(u.clone(), false)?;
        }
        match through {
            Some(b) => eng.saturate_through(b)?,
            None => eng.saturate()?,
        }
        Ok(KernelRun {
            eng,
            ring: Arc::clone(ring),
            rank,
            s,
            budget: budget.clone(),
        })
    }

    /// Exact membership of a leading-block vector in the span of the tagged
    /// family (plus untagged vectors and the defining ideal): the normal
    /// form must fall entirely behind the fence, where its tag residue is
    /// precisely the cofactor expression.
    pub fn in_span(&self, v: &ModVec) -> bool {
        self.eng.normal_form(v).is_behind(self.rank as u32)
    }

    /// Collected relation generators, projected to the tag block and
    /// canonicalised modulo the defining ideal. Consumes the collected raw
    /// elements, so call once.
    pub fn syzygies(&mut self) -> Result<Vec<ModVec>> {
        let field = self.ring.field();
        let out_ord = ModOrder::for_ring(&self.ring, self.s as u32);
        let raw = self.eng.take_syzygies();
        let mut out: Vec<ModVec> = Vec::new();
        if !self.ring.ideal().is_empty() {
            ideal_basis(&self.ring, &self.budget)?;
        }
        for v in raw {
            let proj = v.restrict(self.rank as u32..(self.rank + self.s) as u32);
            let mut terms: Vec<MTerm> = Vec::new();
            for c in 0..self.s as u32 {
                let coeff = proj.component(c);
                if coeff.is_zero() {
                    continue;
                }
                let reduced = reduce_mod_ideal(&self.ring, &coeff, &self.budget)?;
                for t in reduced.terms() {
                    terms.push(MTerm {
                        comp: c,
                        coeff: t.coeff,
                        mono: t.mono.clone(),
                    });
                }
            }
            let w = ModVec::from_terms(terms, &out_ord, field);
            if !w.is_zero() {
                out.push(w.monic(field));
            }
        }
        out.sort_by(|a, b| {
            let la = a.leading().unwrap();
            let lb = b.leading().unwrap();
            out_ord.cmp(la.comp, &la.mono, lb.comp, &lb.mono)
        });
        out.dedup();
        Ok(out)
    }
}

/// Generators of `{ (a_1..a_s) : sum a_i * tagged_i  in  <untagged> + J*F }`
/// as vectors over `Ring^s`, coefficients reduced modulo the defining ideal.
pub fn kernel_generators(
    ring: &Arc<RingPresentation>,
    rank: usize,
    tagged: &[ModVec],
    untagged: &[ModVec],
    budget: &Budget,
) -> Result<Vec<ModVec>> {
    KernelRun::new(ring, rank, tagged, untagged, budget)?.syzygies()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::groebner::engine::module_groebner;
    use crate::polyring::Polynomial;

    fn poly_ring(p: u64, names: &[&str]) -> Arc<RingPresentation> {
        RingPresentation::new(
            FieldSpec::new(p).unwrap(),
            names.iter().map(|n| (n.to_string(), 1)).collect(),
            vec![],
            false,
        )
        .unwrap()
    }

    /// Evaluate a relation vector against the generators it talks about.
    fn apply(
        rel: &ModVec,
        gens: &[ModVec],
        ring: &Arc<RingPresentation>,
        rank: usize,
    ) -> ModVec {
        let ord = ModOrder::for_ring(ring, rank as u32);
        let field = ring.field();
        let mut acc = ModVec::zero();
        for (i, g) in gens.iter().enumerate() {
            let coeff = rel.component(i as u32);
            for t in coeff.terms() {
                acc = acc.axpy(t.coeff, &t.mono, g, &ord, field);
            }
        }
        acc
    }

    #[test]
    fn koszul_relation_between_two_variables() {
        let r = poly_ring(5, &["x", "y"]);
        let gens = vec![
            ModVec::embed(&r.parse("x").unwrap(), 0),
            ModVec::embed(&r.parse("y").unwrap(), 0),
        ];
        let syz = kernel_generators(&r, 1, &gens, &[], &Budget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        // The relation must actually annihilate, and must involve both slots.
        let ev = apply(&syz[0], &gens, &r, 1);
        assert!(ev.is_zero());
        assert!(!syz[0].component(0).is_zero());
        assert!(!syz[0].component(1).is_zero());
        // And (y, -x) lies in its span.
        let ord = ModOrder::for_ring(&r, 2);
        let f = r.field();
        let expected = ModVec::embed(&r.parse("y").unwrap(), 0).add(
            &ModVec::embed(&r.parse("4*x").unwrap(), 1),
            &ord,
            f,
        );
        let span = module_groebner(&r, 2, &syz, &Budget::default()).unwrap();
        assert!(span.is_member(&expected));
    }

    #[test]
    fn colon_through_the_defining_ideal() {
        // S = GF(2)[x,y]/(x*y): the annihilator of x is (y).
        let f2 = FieldSpec::new(2).unwrap();
        let names = vec![("x".to_string(), 1), ("y".to_string(), 1)];
        let amb = RingPresentation::new(f2, names.clone(), vec![], false).unwrap();
        let ring =
            RingPresentation::new(f2, names, vec![amb.parse("x*y").unwrap()], true).unwrap();
        let gens = vec![ModVec::embed(&ring.parse("x").unwrap(), 0)];
        let syz = kernel_generators(&ring, 1, &gens, &[], &Budget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].component(0), ring.parse("y").unwrap());
    }

    #[test]
    fn untagged_relations_shape_the_target() {
        // Target F = S^1 / (x^2): kernel of 1 -> x is (x).
        let r = poly_ring(5, &["x"]);
        let tagged = vec![ModVec::embed(&r.parse("x").unwrap(), 0)];
        let untagged = vec![ModVec::embed(&r.parse("x^2").unwrap(), 0)];
        let syz = kernel_generators(&r, 1, &tagged, &untagged, &Budget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].component(0), r.parse("x").unwrap());
    }

    #[test]
    fn free_generators_have_no_relations()
    {
        let r = poly_ring(5, &["x", "y"]);
        // e0 and e1 of a rank-2 free module.
        let gens = vec![
            ModVec::embed(&Polynomial::constant(1, &r), 0),
            ModVec::embed(&Polynomial::constant(1, &r), 1),
        ];
        let syz = kernel_generators(&r, 2, &gens, &[], &Budget::default()).unwrap();
        assert!(syz.is_empty(), "free module generators admit no relations");
    }

    #[test]
    fn zero_generator_yields_unit_relation() {
        let r = poly_ring(5, &["x"]);
        let gens = vec![ModVec::zero()];
        let syz = kernel_generators(&r, 1, &gens, &[], &Budget::default()).unwrap();
        assert_eq!(syz.len(), 1);
        assert_eq!(syz[0].component(0), Polynomial::constant(1, &r));
    }
}
