//! Incremental Buchberger engine for submodules of `Ring^rank`, where `Ring`
//! is a quotient presentation: the defining ideal's reduced basis is adjoined
//! to every leading-block component, so normal forms are computed over the
//! quotient without special cases.
//!
//! Pair selection is the normal strategy (lowest weighted degree of the pair
//! lcm first). Two shortcuts are applied:
//!
//! * the coprimality shortcut only in the rank-one untagged case, where it is
//!   valid — for modules it is not, and with tag components present skipping
//!   such a pair would silently lose a kernel generator;
//! * the classical chain shortcut (a third leading term divides the pair lcm
//!   and both sub-pairs were already treated), which is sound for modules.
//!
//! Pairs between two adjoined ideal rows of the same component reduce to zero
//! by construction (the adjoined set is itself a reduced basis) and are never
//! scheduled. Elements whose leading term lies behind the fence are recorded
//! as kernel output and kept as reducers, but never paired: completeness of
//! the collected tag vectors follows from the rewriting argument for the
//! leading block alone.

use crate::error::{Error, Result};
use crate::exactlin::FieldSpec;
use crate::groebner::modvec::{MTerm, ModOrder, ModVec};
use crate::polyring::{Monomial, Polynomial, RingPresentation};
use smallvec::SmallVec;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

/// Resource ceilings for a Groebner run. Hitting one aborts with a
/// distinguished error; results are never silently truncated.
#[derive(Debug, Clone)]
pub struct Budget {
    /// Cap on the weighted degree of any stored leading term.
    pub max_weighted_degree: u32,
    /// Cap on the number of basis elements.
    pub max_basis: usize,
    /// Cap on scheduled pair pops.
    pub max_pairs: u64,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_weighted_degree: 64,
            max_basis: 1 << 20,
            max_pairs: 50_000_000,
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct GbStats {
    pub pairs_popped: u64,
    pub pairs_skipped: u64,
    pub zero_reductions: u64,
    pub max_lead_degree: u32,
}

struct Elt {
    v: ModVec,
    /// Adjoined ideal row: pairs between two of these are never scheduled.
    ideal: bool,
}

#[derive(Debug, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    deg: u32,
    comp: u32,
    lcm_exps: SmallVec<[u8; 12]>,
    i: u32,
    j: u32,
}

/// Finished, interreduced basis of a submodule `U + J*Ring^rank` of the free
/// module, where `J` is the ring's defining ideal.
#[derive(Debug)]
pub struct GroebnerBasis {
    ring: Arc<RingPresentation>,
    ord: ModOrder,
    rank: usize,
    elements: Vec<ModVec>,
    index: Vec<Vec<usize>>,
    stats: GbStats,
}

impl GroebnerBasis {
    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn order(&self) -> &ModOrder {
        &self.ord
    }

    pub fn elements(&self) -> &[ModVec] {
        &self.elements
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// Leading monomials in a given component.
    pub fn leading_monomials(&self, comp: u32) -> Vec<&Monomial> {
        self.index
            .get(comp as usize)
            .map(|ix| {
                ix.iter()
                    .map(|&i| &self.elements[i].leading().unwrap().mono)
                    .collect()
            })
            .unwrap_or_default()
    }

    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        normal_form_against(
            v.clone(),
            &self.ord,
            self.ring.field(),
            |comp| self.index.get(comp).map(|v| &v[..]).unwrap_or(&[]),
            |i| &self.elements[i],
        )
    }

    pub fn is_member(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }
}

/// Shared full-reduction routine: repeatedly rewrite the leading term by any
/// basis element with the same component whose leading monomial divides it;
/// irreducible leads are peeled off, so the result is fully reduced.
fn normal_form_against<'a>(
    mut work: ModVec,
    ord: &ModOrder,
    field: FieldSpec,
    index: impl Fn(usize) -> &'a [usize],
    elem: impl Fn(usize) -> &'a ModVec,
) -> ModVec {
    let mut done: Vec<MTerm> = Vec::new();
    'outer: while let Some(lead) = work.leading() {
        let comp = lead.comp as usize;
        for &bi in index(comp) {
            let b = elem(bi);
            let blt = b.leading().expect("basis elements are nonzero");
            debug_assert_eq!(blt.comp as usize, comp);
            if blt.mono.divides(&lead.mono) {
                let mu = blt.mono.div_into(&lead.mono).unwrap();
                let c = field.neg(lead.coeff); // basis is monic
                work = work.axpy(c, &mu, b, ord, field);
                continue 'outer;
            }
        }
        done.push(work.pop_leading().unwrap());
    }
    ModVec::from_terms(done, ord, field)
}

/// Buchberger state that accepts generators incrementally; used directly by
/// the greedy generator-minimisation pass and wrapped by [`module_groebner`]
/// and the kernel routines.
pub struct IncrementalGb {
    ring: Arc<RingPresentation>,
    ord: ModOrder,
    /// Number of leading-block components.
    rank: usize,
    /// Leading block plus tag components.
    total: usize,
    syzygy_mode: bool,
    budget: Budget,
    basis: Vec<Elt>,
    index: Vec<Vec<usize>>,
    heap: BinaryHeap<Reverse<PairKey>>,
    done: HashSet<(u32, u32)>,
    syzygies: Vec<ModVec>,
    stats: GbStats,
}

impl IncrementalGb {
    /// `tags` extra components are appended behind the fence. When
    /// `syzygy_mode` is set, elements led by a tag component are collected as
    /// kernel output. The ring's defining ideal is adjoined to each
    /// leading-block component unless `adjoin_ideal` is false (used when
    /// computing the ideal's own basis).
    pub fn new(
        ring: &Arc<RingPresentation>,
        rank: usize,
        tags: usize,
        syzygy_mode: bool,
        adjoin_ideal: bool,
        budget: &Budget,
    ) -> Result<IncrementalGb> {
        let total = rank + tags;
        let mut eng = IncrementalGb {
            ring: Arc::clone(ring),
            ord: ModOrder::for_ring(ring, rank as u32),
            rank,
            total,
            syzygy_mode,
            budget: budget.clone(),
            basis: Vec::new(),
            index: vec![Vec::new(); total],
            heap: BinaryHeap::new(),
            done: HashSet::new(),
            syzygies: Vec::new(),
            stats: GbStats::default(),
        };
        if adjoin_ideal && !ring.ideal().is_empty() {
            let gb = ideal_basis(ring, budget)?;
            for c in 0..rank {
                for h in gb {
                    eng.add_generator(ModVec::embed(h, c as u32), true)?;
                }
            }
        }
        Ok(eng)
    }

    pub fn stats(&self) -> &GbStats {
        &self.stats
    }

    /// Number of basis rows held (including adjoined ideal rows).
    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> &ModOrder {
        &self.ord
    }

    fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn normal_form(&self, v: &ModVec) -> ModVec {
        normal_form_against(
            v.clone(),
            &self.ord,
            self.field(),
            |comp| self.index.get(comp).map(|v| &v[..]).unwrap_or(&[]),
            |i| &self.basis[i].v,
        )
    }

    /// Membership in the module generated so far (meaningful once saturated).
    pub fn contains(&self, v: &ModVec) -> bool {
        self.normal_form(v).is_zero()
    }

    /// Reduce and insert a generator, scheduling its pairs. `ideal_flag`
    /// marks adjoined ideal rows, whose mutual pairs are skipped.
    pub fn add_generator(&mut self, v: ModVec, ideal_flag: bool) -> Result<()> {
        if let Some(mc) = v.max_comp() {
            if mc as usize >= self.total {
                return Err(Error::ShapeMismatch(format!(
                    "generator touches component {mc}, free module has {}",
                    self.total
                )));
            }
        }
        let h = self.normal_form(&v);
        self.insert_reduced(h, ideal_flag)
    }

    fn insert_reduced(&mut self, h: ModVec, ideal_flag: bool) -> Result<()> {
        let Some(lead) = h.leading() else {
            self.stats.zero_reductions += 1;
            return Ok(());
        };
        let lead_comp = lead.comp;
        let lead_deg = lead.mono.weighted_degree();
        if lead_deg > self.budget.max_weighted_degree {
            return Err(Error::Resource {
                what: "leading-term weighted degree",
                reached: lead_deg as u64,
                limit: self.budget.max_weighted_degree as u64,
            });
        }
        if self.basis.len() + 1 > self.budget.max_basis {
            return Err(Error::Resource {
                what: "basis size",
                reached: (self.basis.len() + 1) as u64,
                limit: self.budget.max_basis as u64,
            });
        }
        self.stats.max_lead_degree = self.stats.max_lead_degree.max(lead_deg);
        let monic = h.monic(self.field());
        let behind_fence = lead_comp >= self.rank as u32;
        if behind_fence && self.syzygy_mode {
            self.syzygies.push(monic.clone());
        }
        let n = self.basis.len();
        self.basis.push(Elt {
            v: monic,
            ideal: ideal_flag,
        });
        self.index[lead_comp as usize].push(n);
        if !behind_fence {
            self.schedule_pairs(n);
        }
        Ok(())
    }

    fn schedule_pairs(&mut self, n: usize) {
        let lead_n = self.basis[n].v.leading().unwrap().clone();
        let new_ideal = self.basis[n].ideal;
        let weights = self.ring.order().weights().to_vec();
        // With a single component and no tags every element is a polynomial,
        // so the coprimality shortcut is sound; in genuine module situations
        // it is not and stays off.
        let pure_ideal_case = self.total == 1;
        let peers: Vec<usize> = self.index[lead_n.comp as usize]
            .iter()
            .copied()
            .filter(|&i| i != n)
            .collect();
        for i in peers {
            if self.basis[i].ideal && new_ideal {
                self.mark_done(i, n);
                continue;
            }
            let lead_i = self.basis[i].v.leading().unwrap();
            if pure_ideal_case && lead_i.mono.coprime(&lead_n.mono) {
                // Coprime leads over a polynomial ring in a single untagged
                // component: the pair reduces to zero.
                self.mark_done(i, n);
                self.stats.pairs_skipped += 1;
                continue;
            }
            let lcm = lead_i.mono.lcm(&lead_n.mono, &weights);
            self.heap.push(Reverse(PairKey {
                deg: lcm.weighted_degree(),
                comp: lead_n.comp,
                lcm_exps: SmallVec::from_slice(lcm.exps()),
                i: i as u32,
                j: n as u32,
            }));
        }
    }

    fn mark_done(&mut self, i: usize, j: usize) {
        let key = (i.min(j) as u32, i.max(j) as u32);
        self.done.insert(key);
    }

    fn is_done(&self, i: u32, j: u32) -> bool {
        self.done.contains(&(i.min(j), i.max(j)))
    }

    /// Process all scheduled pairs.
    pub fn saturate(&mut self) -> Result<()> {
        self.saturate_bounded(None)
    }

    /// Process scheduled pairs whose lcm weighted degree is at most `bound`.
    /// Higher pairs stay queued; completion resumes where it stopped. Useful
    /// for membership scans over inputs sorted by ascending degree, where a
    /// full completion after every insertion would chase pairs far beyond
    /// the degrees that remaining candidates can reach.
    pub fn saturate_through(&mut self, bound: u32) -> Result<()> {
        self.saturate_bounded(Some(bound))
    }

    fn saturate_bounded(&mut self, bound: Option<u32>) -> Result<()> {
        while let Some(Reverse(top)) = self.heap.peek() {
            if let Some(b) = bound {
                if top.deg > b {
                    return Ok(());
                }
            }
            let Some(Reverse(pair)) = self.heap.pop() else {
                unreachable!("peeked element vanished");
            };
            self.stats.pairs_popped += 1;
            if self.stats.pairs_popped > self.budget.max_pairs {
                return Err(Error::Resource {
                    what: "pair pops",
                    reached: self.stats.pairs_popped,
                    limit: self.budget.max_pairs,
                });
            }
            let (i, j) = (pair.i as usize, pair.j as usize);
            self.mark_done(i, j);
            if self.chain_redundant(&pair) {
                self.stats.pairs_skipped += 1;
                continue;
            }
            let spoly = self.s_vector(i, j);
            let h = self.normal_form(&spoly);
            if h.is_zero() {
                self.stats.zero_reductions += 1;
                continue;
            }
            self.insert_reduced(h, false)?;
        }
        Ok(())
    }

    fn chain_redundant(&self, pair: &PairKey) -> bool {
        let weights = self.ring.order().weights();
        let lcm = Monomial::from_exps(&pair.lcm_exps, weights);
        for &k in &self.index[pair.comp as usize] {
            let k32 = k as u32;
            if k32 == pair.i || k32 == pair.j {
                continue;
            }
            let lt = &self.basis[k].v.leading().unwrap().mono;
            if lt.divides(&lcm) && self.is_done(pair.i, k32) && self.is_done(pair.j, k32) {
                return true;
            }
        }
        false
    }

    fn s_vector(&self, i: usize, j: usize) -> ModVec {
        let a = &self.basis[i].v;
        let b = &self.basis[j].v;
        let la = a.leading().unwrap();
        let lb = b.leading().unwrap();
        debug_assert_eq!(la.comp, lb.comp);
        let weights = self.ring.order().weights();
        let lcm = la.mono.lcm(&lb.mono, weights);
        let ma = la.mono.div_into(&lcm).unwrap();
        let mb = lb.mono.div_into(&lcm).unwrap();
        // Both monic, so the cancellation is coefficient-free.
        a.mul_term(1, &ma, self.field())
            .axpy(self.field().neg(1), &mb, b, &self.ord, self.field())
    }

    /// Collected tag-led elements (kernel output), raw.
    pub fn take_syzygies(&mut self) -> Vec<ModVec> {
        std::mem::take(&mut self.syzygies)
    }

    /// Saturate, interreduce the leading block, and package the result.
    pub fn into_basis(mut self) -> Result<GroebnerBasis> {
        self.saturate()?;
        let field = self.field();
        let ord = self.ord.clone();
        let elems: Vec<ModVec> = self.basis.into_iter().map(|e| e.v).collect();
        let reduced = interreduce(elems, &ord, field);
        let mut index = vec![Vec::new(); self.total];
        for (i, e) in reduced.iter().enumerate() {
            index[e.leading().unwrap().comp as usize].push(i);
        }
        Ok(GroebnerBasis {
            ring: self.ring,
            ord,
            rank: self.total,
            elements: reduced,
            index,
            stats: self.stats,
        })
    }
}

/// Minimalize (drop elements whose lead divides away) and tail-reduce until
/// stable; output sorted by leading term ascending, each element monic. For a
/// fixed module this is the reduced basis, hence canonical.
fn interreduce(mut elems: Vec<ModVec>, ord: &ModOrder, field: FieldSpec) -> Vec<ModVec> {
    elems.retain(|e| !e.is_zero());
    // Sort by leading term ascending so smaller leads are preferred keepers.
    elems.sort_by(|a, b| {
        let la = a.leading().unwrap();
        let lb = b.leading().unwrap();
        ord.cmp(la.comp, &la.mono, lb.comp, &lb.mono)
    });
    let mut kept: Vec<ModVec> = Vec::with_capacity(elems.len());
    'cand: for e in elems {
        let le = e.leading().unwrap();
        for k in &kept {
            let lk = k.leading().unwrap();
            if lk.comp == le.comp && lk.mono.divides(&le.mono) {
                continue 'cand;
            }
        }
        kept.push(e);
    }
    // Tail reduction passes. Leads are pairwise indivisible, so normal forms
    // keep each element's lead; iterate to a fixpoint.
    loop {
        let mut changed = false;
        for i in 0..kept.len() {
            let v = kept[i].clone();
            let others: Vec<&ModVec> = kept
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, w)| w)
                .collect();
            let reduced = normal_form_list(v, ord, field, &others).monic(field);
            if reduced != kept[i] {
                kept[i] = reduced;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    kept
}

fn normal_form_list(v: ModVec, ord: &ModOrder, field: FieldSpec, reducers: &[&ModVec]) -> ModVec {
    let mut done: Vec<MTerm> = Vec::new();
    let mut work = v;
    'outer: while let Some(lead) = work.leading() {
        for b in reducers {
            let blt = b.leading().unwrap();
            if blt.comp == lead.comp && blt.mono.divides(&lead.mono) {
                let mu = blt.mono.div_into(&lead.mono).unwrap();
                let lc = blt.coeff;
                let c = field.neg(field.mul(lead.coeff, field.inv(lc)));
                work = work.axpy(c, &mu, b, ord, field);
                continue 'outer;
            }
        }
        done.push(work.pop_leading().unwrap());
    }
    ModVec::from_terms(done, ord, field)
}

/// Basis of the submodule generated by `gens` plus the ideal block, suitable
/// for normal forms and quotient queries over the presented ring.
pub fn module_groebner(
    ring: &Arc<RingPresentation>,
    rank: usize,
    gens: &[ModVec],
    budget: &Budget,
) -> Result<GroebnerBasis> {
    let mut eng = IncrementalGb::new(ring, rank, 0, false, true, budget)?;
    for g in gens {
        eng.add_generator(g.clone(), false)?;
    }
    eng.into_basis()
}

/// Reduced basis of the ring's defining ideal, cached on the presentation.
pub fn ideal_basis<'r>(
    ring: &'r Arc<RingPresentation>,
    budget: &Budget,
) -> Result<&'r [Polynomial]> {
    if let Some(gb) = ring.ideal_gb.get() {
        return Ok(gb);
    }
    let computed = compute_ideal_basis(ring, budget)?;
    Ok(ring.ideal_gb.get_or_init(|| computed))
}

fn compute_ideal_basis(
    ring: &Arc<RingPresentation>,
    budget: &Budget,
) -> Result<Vec<Polynomial>> {
    let mut eng = IncrementalGb::new(ring, 1, 0, false, false, budget)?;
    // Pairs among the ideal's own generators must run here, so none of them
    // carries the adjoined-row flag.
    for g in ring.ideal() {
        eng.add_generator(ModVec::embed(g, 0), false)?;
    }
    let gb = eng.into_basis()?;
    Ok(gb.elements().iter().map(|v| v.component(0)).collect())
}

/// Normal form of a polynomial against the ring's defining ideal.
pub fn reduce_mod_ideal(
    ring: &Arc<RingPresentation>,
    p: &Polynomial,
    budget: &Budget,
) -> Result<Polynomial> {
    if ring.ideal().is_empty() {
        return Ok(p.clone());
    }
    let gb = ideal_basis(ring, budget)?;
    let ord = ModOrder::for_ring(ring, 1);
    let field = ring.field();
    let embedded: Vec<ModVec> = gb.iter().map(|h| ModVec::embed(h, 0)).collect();
    let refs: Vec<&ModVec> = embedded.iter().collect();
    let nf = normal_form_list(ModVec::embed(p, 0), &ord, field, &refs);
    Ok(nf.component(0))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polyring::RingPresentation;

    fn poly_ring(p: u64, names: &[&str]) -> Arc<RingPresentation> {
        RingPresentation::new(
            FieldSpec::new(p).unwrap(),
            names.iter().map(|n| (n.to_string(), 1)).collect(),
            vec![],
            false,
        )
        .unwrap()
    }

    fn gb_polys(ring: &Arc<RingPresentation>, gens: &[&str]) -> Vec<String> {
        let vecs: Vec<ModVec> = gens
            .iter()
            .map(|s| ModVec::embed(&ring.parse(s).unwrap(), 0))
            .collect();
        let gb = module_groebner(ring, 1, &vecs, &Budget::default()).unwrap();
        gb.elements()
            .iter()
            .map(|v| v.component(0).render(ring))
            .collect()
    }

    #[test]
    fn textbook_grevlex_basis() {
        // Over GF(7), x^2+y and xy+x: classic small completion.
        let r = poly_ring(7, &["x", "y"]);
        let gb = gb_polys(&r, &["x^2+y", "x*y+x"]);
        // Reduced basis: y^2+y, x*y+x, x^2+y.
        assert_eq!(gb, vec!["y^2+y", "x*y+x", "x^2+y"]);
    }

    #[test]
    fn basis_is_input_order_invariant() {
        let r = poly_ring(5, &["x", "y", "z"]);
        let a = gb_polys(&r, &["x*y+z", "y*z+x", "x*z+y"]);
        let b = gb_polys(&r, &["x*z+y", "x*y+z", "y*z+x"]);
        assert_eq!(a, b);
    }

    #[test]
    fn membership_after_completion() {
        let r = poly_ring(5, &["x", "y"]);
        let gens = vec![
            ModVec::embed(&r.parse("x^2+y").unwrap(), 0),
            ModVec::embed(&r.parse("x*y+x").unwrap(), 0),
        ];
        let gb = module_groebner(&r, 1, &gens, &Budget::default()).unwrap();
        // x^2*y + x*y is in the ideal: x*(xy+x) = x^2y+x^2 ... check a known
        // combination instead: y*(x^2+y) - x*(xy+x) = y^2 - x^2 ... simply
        // test that both generators and a random combination are members.
        let f = r.parse("x^2+y").unwrap();
        let g = r.parse("x*y+x").unwrap();
        let combo = f.mul(&r.parse("x+2*y").unwrap(), &r).add(&g.mul(&r.parse("y^2").unwrap(), &r), &r);
        assert!(gb.is_member(&ModVec::embed(&combo, 0)));
        assert!(!gb.is_member(&ModVec::embed(&r.parse("x").unwrap(), 0)));
        assert!(!gb.is_member(&ModVec::embed(&r.parse("1").unwrap(), 0)));
    }

    #[test]
    fn quotient_ring_normal_forms() {
        // Ring GF(2)[x,y]/(x^2+y^2): NF of x^2 is y^2.
        let f2 = FieldSpec::new(2).unwrap();
        let amb = RingPresentation::new(
            f2,
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
            vec![],
            false,
        )
        .unwrap();
        let rel = amb.parse("x^2+y^2").unwrap();
        let ring = RingPresentation::new(
            f2,
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
            vec![rel],
            true,
        )
        .unwrap();
        let p = ring.parse("x^2").unwrap();
        let nf = reduce_mod_ideal(&ring, &p, &Budget::default()).unwrap();
        assert_eq!(nf, ring.parse("y^2").unwrap());
        // Module over the quotient: the submodule (x e0) contains x^3 e0 and,
        // because x^2 = y^2, also y^2*x e0.
        let gens = vec![ModVec::embed(&ring.parse("x").unwrap(), 0)];
        let gb = module_groebner(&ring, 1, &gens, &Budget::default()).unwrap();
        assert!(gb.is_member(&ModVec::embed(&ring.parse("y^2*x").unwrap(), 0)));
        // y^2 = x*x - (x^2+y^2) lies in the preimage of (x), so it IS a
        // member over the quotient; y is not.
        assert!(gb.is_member(&ModVec::embed(&ring.parse("y^2").unwrap(), 0)));
        assert!(!gb.is_member(&ModVec::embed(&ring.parse("y").unwrap(), 0)));
    }

    #[test]
    fn budget_overflow_is_distinguished() {
        let r = poly_ring(2, &["x", "y"]);
        let tight = Budget {
            max_weighted_degree: 1,
            ..Budget::default()
        };
        let gens = vec![ModVec::embed(&r.parse("x^2+y").unwrap(), 0)];
        let err = module_groebner(&r, 1, &gens, &tight).unwrap_err();
        assert!(err.is_resource_cap(), "expected resource error, got {err}");
    }

    #[test]
    fn module_basis_separates_components() {
        // Submodule of R^2 over GF(5)[x,y] generated by (x, y) and (y, x):
        // membership of (x^2, xy) = x*(x, y).
        let r = poly_ring(5, &["x", "y"]);
        let ord = ModOrder::for_ring(&r, 2);
        let f = r.field();
        let g1 = ModVec::embed(&r.parse("x").unwrap(), 0)
            .add(&ModVec::embed(&r.parse("y").unwrap(), 1), &ord, f);
        let g2 = ModVec::embed(&r.parse("y").unwrap(), 0)
            .add(&ModVec::embed(&r.parse("x").unwrap(), 1), &ord, f);
        let gb = module_groebner(&r, 2, &[g1.clone(), g2], &Budget::default()).unwrap();
        let member = g1.mul_term(1, &r.parse("x").unwrap().leading_term().unwrap().mono, f);
        assert!(gb.is_member(&member));
        let non = ModVec::embed(&r.parse("x").unwrap(), 1);
        assert!(!gb.is_member(&non));
    }
}
