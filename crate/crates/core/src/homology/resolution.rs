//! Free resolutions: presentation extraction for finite-length modules,
//! minimal generating sets, and iterated syzygy steps.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, ScalarMatrix};
use crate::groebner::{
    kernel_generators, module_groebner, quotient_length, Budget, IncrementalGb, KernelRun, MTerm,
    ModOrder, ModVec,
};
use crate::homology::complex::ChainComplex;
use crate::homology::flmodule::FiniteLengthModule;
use crate::homology::polymatrix::PolyMatrix;
use crate::polyring::{Monomial, RingPresentation};
use std::cmp::Reverse;
use std::collections::BTreeSet;
use std::sync::Arc;

/// Mutually reduced scalar rows with tracked pivot columns; `absorb` reduces
/// a vector against the rows and, when a nonzero remainder survives, installs
/// it as a new pivot row and reports true.
struct PivotRows {
    field: FieldSpec,
    rows: Vec<(usize, Vec<u16>)>,
}

impl PivotRows {
    fn new(field: FieldSpec) -> Self {
        PivotRows { field, rows: Vec::new() }
    }

    fn absorb(&mut self, mut v: Vec<u16>) -> bool {
        let f = self.field;
        for (p, row) in &self.rows {
            let c = v[*p];
            if c != 0 {
                for (x, y) in v.iter_mut().zip(row.iter()) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        let Some(p) = v.iter().position(|&c| c != 0) else {
            return false;
        };
        let inv = f.inv(v[p]);
        for x in v.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for (_, row) in self.rows.iter_mut() {
            let c = row[p];
            if c != 0 {
                for (x, y) in row.iter_mut().zip(v.iter()) {
                    *x = f.sub(*x, f.mul(c, *y));
                }
            }
        }
        self.rows.push((p, v));
        true
    }
}

/// Split a candidate list into a minimal generating sublist and the
/// redundant remainder, given generators of the relation module of the full
/// list. A scalar combination of candidates lies in `m*K` exactly when it is
/// the constant part of a relation, so row-reducing the relations' constant
/// vectors presents `K/mK`, and scanning the candidates in order picks the
/// earliest basis of it. Minimality is meant over the localization at the
/// irrelevant maximal ideal (the Nakayama sense); the dropped remainder is
/// certified redundant there, not over the ring itself.
#[doc(hidden)]
pub fn minimal_split(
    field: FieldSpec,
    cands: &[ModVec],
    relations: &[ModVec],
) -> (Vec<ModVec>, Vec<ModVec>) {
    let r = cands.len();
    let mut elim = PivotRows::new(field);
    for s in relations {
        let mut v = vec![0u16; r];
        for (c, slot) in v.iter_mut().enumerate() {
            *slot = s.component(c as u32).constant_coeff();
        }
        elim.absorb(v);
    }
    let mut kept: Vec<ModVec> = Vec::new();
    let mut dropped: Vec<ModVec> = Vec::new();
    for (i, g) in cands.iter().enumerate() {
        let mut e = vec![0u16; r];
        e[i] = 1;
        if elim.absorb(e) {
            kept.push(g.clone());
        } else {
            dropped.push(g.clone());
        }
    }
    (kept, dropped)
}

/// Reduce a generating list of a submodule of `Ring^rank` to a minimal one.
///
/// Minimality is meant over the localization at the irrelevant maximal ideal
/// `m` (the Nakayama sense): a candidate is redundant exactly when its class
/// in K/mK depends on the classes of candidates kept so far. The quotient
/// K/mK is presented by the relation module of the candidate list — computed
/// once with the fenced syzygy engine — because a scalar combination of
/// candidates lies in mK precisely when it extends to a relation whose
/// coefficient vector has those scalars as its constant part. Candidates are
/// scanned in ascending weighted degree, which makes the result deterministic
/// for a fixed input list.
pub fn minimal_generators(
    ring: &Arc<RingPresentation>,
    rank: usize,
    candidates: &[ModVec],
    budget: &Budget,
) -> Result<Vec<ModVec>> {
    let mut cands: Vec<ModVec> = candidates.iter().filter(|v| !v.is_zero()).cloned().collect();
    if cands.is_empty() {
        return Ok(vec![]);
    }
    cands.sort_by_key(|v| v.weighted_degree().unwrap_or(0));
    let relations = kernel_generators(ring, rank, &cands, &[], budget)?;
    let (kept, _) = minimal_split(ring.field(), &cands, &relations);
    Ok(kept)
}

/// Mutually tail-reduce a generating list, preserving its span at every
/// replacement step.
///
/// Each element is repeatedly rewritten to its full normal form against all
/// the others (and against the defining ideal in every coordinate); elements
/// that reduce to zero are certified members of the remaining span and are
/// dropped. No completion is attempted, so this is cheap — a quadratic
/// number of divisibility scans — and it shrinks the huge redundant tails
/// that relation generators inherit from their reduction history.
pub fn slim_generators(
    ring: &Arc<RingPresentation>,
    rank: usize,
    list: &[ModVec],
    budget: &Budget,
) -> Result<Vec<ModVec>> {
    let field = ring.field();
    let ord = ModOrder::for_ring(ring, rank as u32);
    let ideal_rows: Vec<ModVec> = {
        let mut rows = Vec::new();
        for h in crate::groebner::ideal_basis(ring, budget)? {
            for c in 0..rank as u32 {
                rows.push(ModVec::embed(h, c));
            }
        }
        rows
    };
    let mut work: Vec<ModVec> = list.iter().filter(|v| !v.is_zero()).cloned().collect();
    work.sort_by(|a, b| {
        let la = a.leading().unwrap();
        let lb = b.leading().unwrap();
        ord.cmp(la.comp, &la.mono, lb.comp, &lb.mono)
    });
    // Full normal form of `v` against the reducers selected by `skip`. A
    // rewrite cap keeps one bad element from stalling the sweep; stopping
    // early is harmless because every individual rewrite preserves the span.
    let reduce = |v: ModVec, work: &[ModVec], skip: usize| -> ModVec {
        let mut v = v;
        let mut done: Vec<MTerm> = Vec::new();
        let mut moves = 0usize;
        'peel: while let Some(lt) = v.leading().cloned() {
            if moves > 20_000 {
                done.extend(v.terms().iter().cloned());
                break;
            }
            for (j, r) in work.iter().enumerate() {
                if j == skip || r.is_zero() {
                    continue;
                }
                let lr = r.leading().unwrap();
                if lr.comp == lt.comp {
                    if let Some(q) = lr.mono.div_into(&lt.mono) {
                        let c = field.neg(field.mul(lt.coeff, field.inv(lr.coeff)));
                        v = v.axpy(c, &q, r, &ord, field);
                        moves += 1;
                        continue 'peel;
                    }
                }
            }
            for r in &ideal_rows {
                let lr = r.leading().unwrap();
                if lr.comp == lt.comp {
                    if let Some(q) = lr.mono.div_into(&lt.mono) {
                        let c = field.neg(field.mul(lt.coeff, field.inv(lr.coeff)));
                        v = v.axpy(c, &q, r, &ord, field);
                        moves += 1;
                        continue 'peel;
                    }
                }
            }
            done.push(v.pop_leading().unwrap());
        }
        ModVec::from_terms(done, &ord, field)
    };
    // Two sweeps reach a fixpoint in practice; a third confirms stability
    // cheaply because reductions then find nothing to do.
    for _ in 0..3 {
        let mut changed = false;
        for i in 0..work.len() {
            if work[i].is_zero() {
                continue;
            }
            let before = work[i].len();
            let v = std::mem::replace(&mut work[i], ModVec::zero());
            let h = reduce(v, &work, i);
            changed |= h.len() != before;
            work[i] = h;
        }
        if !changed {
            break;
        }
    }
    work.retain(|v| !v.is_zero());
    Ok(work)
}

/// Trim a candidate list to a sublist with the same span over the ring.
///
/// Candidates are scanned in ascending weighted degree; each one is reduced
/// against an incrementally saturated basis of the span of those already
/// kept, so every drop is an exact membership certificate (no localization
/// involved). Survivors are stored as their normal forms, which keeps the
/// output slim even when the input carries large redundant tails.
pub fn span_trim(
    ring: &Arc<RingPresentation>,
    rank: usize,
    candidates: &[ModVec],
    budget: &Budget,
) -> Result<Vec<ModVec>> {
    let mut cands: Vec<ModVec> = candidates.iter().filter(|v| !v.is_zero()).cloned().collect();
    cands.sort_by_key(|v| v.weighted_degree().unwrap_or(0));
    let mut eng = IncrementalGb::new(ring, rank, 0, false, true, budget)?;
    let mut kept: Vec<ModVec> = Vec::new();
    for g in &cands {
        // Completing only through the candidate's own degree keeps the pair
        // queue from chasing lcm degrees no remaining candidate can reach;
        // drops stay certified because a vanishing normal form witnesses
        // membership against any basis state.
        eng.saturate_through(g.weighted_degree().unwrap_or(0))?;
        let h = eng.normal_form(g);
        if h.is_zero() {
            continue;
        }
        eng.add_generator(h.clone(), false)?;
        kept.push(h);
    }
    Ok(kept)
}

/// A partial or complete free resolution: the stored complex carries the
/// differentials `d_1..d_L`; `complete` records whether the kernel of the
/// last stored differential is zero (so the resolution stops there).
/// `certified_minimal` records that at every step the relations among the
/// generators just used all had zero constant coordinates — the Nakayama
/// certificate that each step's generating set was minimal over the
/// localization at the irrelevant maximal ideal.
#[derive(Debug, Clone)]
pub struct Resolution {
    pub complex: ChainComplex,
    pub complete: bool,
    pub certified_minimal: bool,
}

impl Resolution {
    /// Number of differentials computed.
    pub fn length(&self) -> usize {
        self.complex.top_degree()
    }

    /// Free ranks, i.e. the Betti numbers when the resolution is minimal.
    pub fn betti(&self) -> &[usize] {
        self.complex.ranks()
    }

    /// True when every differential entry lies in the maximal ideal.
    pub fn is_minimal(&self) -> bool {
        self.complex
            .differentials()
            .iter()
            .all(|d| d.entries().iter().all(|e| !e.has_unit_constant()))
    }
}

/// Fully saturated tagless basis of the span of `gens` (plus the defining
/// ideal in every coordinate): the exact membership oracle used to settle
/// debts and certify evictions. A vanishing normal form against it proves
/// membership over the ring itself, with no localization involved.
fn membership_engine(
    ring: &Arc<RingPresentation>,
    rank: usize,
    gens: &[ModVec],
    budget: &Budget,
) -> Result<IncrementalGb> {
    let mut eng = IncrementalGb::new(ring, rank, 0, false, true, budget)?;
    for g in gens {
        eng.add_generator(g.clone(), false)?;
    }
    eng.saturate()?;
    Ok(eng)
}

/// Resolve the cokernel of `d1` by iterated syzygy computation.
///
/// Each step keeps two certificates honest at once:
///
/// * Exactness over the ring itself. A differential's columns are obtained
///   from the exact relation generators of the previous step by span
///   trimming (membership-certified drops) followed by a Nakayama
///   minimization. The vectors the minimization discards are only known to
///   be redundant locally, so they are carried forward as debts: each is
///   reduced against a saturated basis of the span actually kept, and a
///   nonzero residue is appended back (exactness first).
/// * Minimality. A step's generators are minimal (over the localization at
///   the irrelevant maximal ideal) exactly when the relations among them all
///   have zero constant coordinates. When settling debts breaks this, the
///   step attempts an exchange — evicting locally redundant generators whose
///   removal is certified by exact membership of the evictee in the span of
///   the rest. `certified_minimal` records whether minimality held (or was
///   restored) at every step.
///
/// Stops after `max_length` differentials; `complete` is false if a nonzero
/// kernel remains at that point (e.g. for modules of infinite projective
/// dimension over a hypersurface, where the tail is periodic).
pub fn free_resolution(
    d1: &PolyMatrix,
    max_length: usize,
    budget: &Budget,
) -> Result<Resolution> {
    let ring = d1.ring();
    let field = ring.field();
    if max_length == 0 {
        return Err(Error::Precondition("max_length must be at least 1".into()));
    }
    let mut diffs: Vec<PolyMatrix> = Vec::new();
    let mut certified_minimal = true;
    let mut rank = d1.rows();

    // First differential: minimize the presentation columns; the discarded
    // columns become the first debts.
    let cols: Vec<ModVec> = {
        let mut c: Vec<ModVec> = d1
            .columns_as_vectors()
            .into_iter()
            .filter(|v| !v.is_zero())
            .collect();
        c.sort_by_key(|v| v.weighted_degree().unwrap_or(0));
        c
    };
    let first_relations = kernel_generators(ring, rank, &cols, &[], budget)?;
    let (mut current, mut debts) = minimal_split(field, &cols, &first_relations);

    let mut complete = current.is_empty();
    while !current.is_empty() && diffs.len() < max_length {
        // Settle and re-minimize. On entry, `current` together with `debts`
        // spans the kernel of the previous differential over the ring, while
        // the classes of `current` alone span it modulo the maximal ideal.
        // Absorbing the residue of every debt the membership oracle rejects
        // restores exact spanning; the eviction pass afterwards removes an
        // equal number of locally redundant generators when their removal can
        // be certified by a vanishing normal form, recovering minimality
        // without giving up exactness. (The two can genuinely conflict: a
        // subset minimal after localization need not span over the ring
        // itself, so an exchange is the only sound repair.)
        let raw = loop {
            if !debts.is_empty() {
                let mut eng = membership_engine(ring, rank, &current, budget)?;
                for d in std::mem::take(&mut debts) {
                    let h = eng.normal_form(&d);
                    if !h.is_zero() {
                        eng.add_generator(h.clone(), false)?;
                        eng.saturate()?;
                        current.push(h);
                    }
                }
            }
            let raw = match cached_raw.take() {
                Some(r) => r,
                None => KernelRun::new(ring, rank, &current, &[], budget)?.syzygies()?,
            };
            // Nakayama certificate: `current` is minimal over the
            // localization exactly when no relation among its members has a
            // nonzero constant coordinate.
            let mut elim = PivotRows::new(field);
            for s in &raw {
                let mut v = vec![0u16; current.len()];
                for (c, slot) in v.iter_mut().enumerate() {
                    *slot = s.component(c as u32).constant_coeff();
                }
                elim.absorb(v);
            }
            if elim.rows.is_empty() {
                break raw;
            }
            // One generator is evictable per independent dependency row, and
            // only coordinates appearing in those rows are candidates. Try
            // the highest degrees first.
            let quota = elim.rows.len();
            let mut cands: Vec<usize> = (0..current.len())
                .filter(|&i| elim.rows.iter().any(|(_, row)| row[i] != 0))
                .collect();
            cands.sort_by_key(|&i| Reverse(current[i].weighted_degree().unwrap_or(0)));
            let mut evicted: BTreeSet<usize> = BTreeSet::new();
            for i in cands {
                if evicted.len() == quota {
                    break;
                }
                let others: Vec<ModVec> = current
                    .iter()
                    .enumerate()
                    .filter(|(j, _)| *j != i && !evicted.contains(j))
                    .map(|(_, v)| v.clone())
                    .collect();
                let eng = membership_engine(ring, rank, &others, budget)?;
                if eng.normal_form(&current[i]).is_zero() {
                    evicted.insert(i);
                }
            }
            if evicted.is_empty() {
                // No exchange partner could be certified; keep the larger
                // exact generating set and report the loss of minimality.
                certified_minimal = false;
                break raw;
            }
            let mut idx = 0usize;
            current.retain(|_| {
                let keep = !evicted.contains(&idx);
                idx += 1;
                keep
            });
            // The relation generators are stale after an eviction; recompute.
        };
        diffs.push(PolyMatrix::from_columns(ring, rank, &current)?);
        if raw.is_empty() {
            complete = true;
            break;
        }
        if diffs.len() == max_length {
            break;
        }
        // Next step: exact span trim, then local minimization whose drops
        // become the debts checked (and if need be repaired) next round.
        let kept = span_trim(ring, current.len(), &raw, budget)?;
        let mut run2 = KernelRun::new(ring, current.len(), &kept, &[], budget)?;
        let kept_relations = run2.syzygies()?;
        let (next, dropped) = minimal_split(field, &kept, &kept_relations);
        cached_raw = if dropped.is_empty() {
            Some(kept_relations)
        } else {
            None
        };
        rank = current.len();
        current = next;
        debts = dropped;
    }
    let complex = if diffs.is_empty() {
        ChainComplex::single_term(ring, d1.rows())
    } else {
        ChainComplex::from_differentials(ring, diffs)?
    };
    Ok(Resolution {
        complex,
        complete,
        certified_minimal,
    })
}

/// Minimal presentation matrix of a finite-length module given by its
/// variable actions: generators are a basis of `M / mM`, relations are the
/// kernel of the induced evaluation map `Ring^s -> M`.
///
/// The kernel is assembled from two certified pieces: coefficient vectors of
/// entry degree below the annihilator degree `D` (a finite linear-algebra
/// kernel), plus the pure relations `mu * e_j` for every degree-`D` monomial
/// `mu` (these act by zero since `m^D` kills the module). Completeness is
/// certified by comparing the quotient length of the candidate relation
/// module with `dim M`.
pub fn presentation_of(
    module: &FiniteLengthModule,
    budget: &Budget,
) -> Result<PolyMatrix> {
    let ring = module.ring();
    if ring.order().weights().iter().any(|&w| w != 1) {
        return Err(Error::Precondition(
            "presentation extraction expects unit variable weights".into(),
        ));
    }
    let field = ring.field();
    let gens = module.minimal_generator_vectors()?;
    let s = gens.len();
    if s == 0 {
        return Ok(PolyMatrix::identity(ring, 0));
    }
    let dann = module.annihilator_degree()?;
    let low_monos = ring.monomials_up_to(dann.saturating_sub(1));
    let ord = ModOrder::for_ring(ring, s as u32);

    // Evaluate each monomial once; columns of E are mono(actions) * gen.
    let dim = module.dim();
    let mut col_index: Vec<(usize, Monomial)> = Vec::with_capacity(s * low_monos.len());
    let mut e = ScalarMatrix::zero(field, dim, s * low_monos.len());
    let mut col = 0;
    for mono in &low_monos {
        let action = module.evaluate(&crate::polyring::Polynomial::monomial(mono.clone(), 1))?;
        for (j, g) in gens.iter().enumerate() {
            for r in 0..dim {
                let mut acc = 0u16;
                for (k, &gv) in g.iter().enumerate() {
                    if gv != 0 {
                        acc = field.add(acc, field.mul(action.get(r, k), gv));
                    }
                }
                if acc != 0 {
                    e.set(r, col, acc);
                }
            }
            col_index.push((j, mono.clone()));
            col += 1;
        }
    }
    debug_assert_eq!(col, e.cols());

    let mut relations: Vec<ModVec> = Vec::new();
    for kv in e.kernel_basis() {
        let mut terms = Vec::new();
        for (c, &coeff) in kv.iter().enumerate() {
            if coeff != 0 {
                let (j, mono) = &col_index[c];
                terms.push(MTerm {
                    comp: *j as u32,
                    coeff,
                    mono: mono.clone(),
                });
            }
        }
        relations.push(ModVec::from_terms(terms, &ord, field));
    }
    // Pure annihilator relations in exact degree D.
    let all_monos = ring.monomials_up_to(dann);
    for mono in all_monos
        .iter()
        .filter(|m| m.weighted_degree() == dann)
    {
        for j in 0..s {
            relations.push(ModVec::from_terms(
                vec![MTerm {
                    comp: j as u32,
                    coeff: 1,
                    mono: mono.clone(),
                }],
                &ord,
                field,
            ));
        }
    }

    // Certificate: the candidate relations present a module of the right
    // vector-space dimension, hence they generate the whole kernel.
    let gb = module_groebner(ring, s, &relations, budget)?;
    let len = quotient_length(&gb)?;
    if len != dim as u64 {
        return Err(Error::Precondition(format!(
            "relation search failed to close: quotient length {len} != module dimension {dim}"
        )));
    }

    // Minimize from the interreduced basis rather than the raw relation list:
    // same submodule, far fewer candidates. The minimization certificate is
    // local, so re-certify globally: the quotient by the trimmed span must
    // still have the module's dimension; a smaller submodule would make the
    // quotient strictly longer.
    let minimal = minimal_generators(ring, s, gb.elements(), budget)?;
    let gb_min = module_groebner(ring, s, &minimal, budget)?;
    let len_min = quotient_length(&gb_min)?;
    if len_min != dim as u64 {
        return Err(Error::Precondition(format!(
            "relation minimization lost span: quotient length {len_min} != {dim}"
        )));
    }
    PolyMatrix::from_columns(ring, s, &minimal)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;

    fn ring_a(p: u64) -> Arc<RingPresentation> {
        let field = FieldSpec::new(p).unwrap();
        let vars: Vec<(String, u32)> = ["u", "v", "w", "x", "y", "z"]
            .iter()
            .map(|s| (s.to_string(), 1))
            .collect();
        let free = RingPresentation::new(field, vars.clone(), vec![], false).unwrap();
        let hyp = free.parse("u*x+v*y+w*z").unwrap();
        RingPresentation::new(field, vars, vec![hyp], true).unwrap()
    }

    fn poly_ring_xy() -> Arc<RingPresentation> {
        let field = FieldSpec::new(2).unwrap();
        let vars = vec![("x".to_string(), 1), ("y".to_string(), 1)];
        RingPresentation::new(field, vars, vec![], false).unwrap()
    }

    #[test]
    fn minimal_generators_drops_multiples() {
        let ring = poly_ring_xy();
        let ord = ModOrder::for_ring(&ring, 1);
        let gens = vec![
            ModVec::embed(&ring.parse("x").unwrap(), 0),
            ModVec::embed(&ring.parse("x^2").unwrap(), 0),
            ModVec::embed(&ring.parse("x*y+x^3").unwrap(), 0),
            ModVec::embed(&ring.parse("y").unwrap(), 0),
        ];
        let _ = ord;
        let min = minimal_generators(&ring, 1, &gens, &Budget::default()).unwrap();
        assert_eq!(min.len(), 2);
        let rendered: Vec<String> = min
            .iter()
            .map(|v| v.component(0).render(&ring))
            .collect();
        assert!(rendered.contains(&"x".to_string()));
        assert!(rendered.contains(&"y".to_string()));
    }

    #[test]
    fn residue_field_presentation_is_the_variable_row() {
        let ring = ring_a(2);
        let k = FiniteLengthModule::residue_field(&ring);
        let d1 = presentation_of(&k, &Budget::default()).unwrap();
        assert_eq!(d1.rows(), 1);
        assert_eq!(d1.cols(), 6);
        let mut entries: Vec<String> = (0..6).map(|j| d1.get(0, j).render(&ring)).collect();
        entries.sort();
        assert_eq!(entries, vec!["u", "v", "w", "x", "y", "z"]);
    }

    #[test]
    fn koszul_style_resolution_over_polynomial_ring_terminates() {
        // coker(x y) over k[x,y]: the Koszul relation gives length 2.
        let ring = poly_ring_xy();
        let d1 = PolyMatrix::new(
            &ring,
            1,
            2,
            vec![ring.parse("x").unwrap(), ring.parse("y").unwrap()],
        )
        .unwrap();
        let res = free_resolution(&d1, 5, &Budget::default()).unwrap();
        assert!(res.complete);
        assert_eq!(res.length(), 2);
        assert_eq!(res.betti(), &[1, 2, 1]);
        assert!(res.is_minimal());
        assert!(res
            .complex
            .composition_violations(&Budget::default())
            .unwrap()
            .is_empty());
    }

    #[test]
    fn regular_element_resolution_over_a_domain_has_length_one() {
        // The quadric relation is irreducible, so u is a nonzerodivisor and
        // the cyclic quotient by it resolves in one step.
        let ring = ring_a(2);
        let d1 = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("u").unwrap()]).unwrap();
        let res = free_resolution(&d1, 6, &Budget::default()).unwrap();
        assert!(res.complete);
        assert_eq!(res.betti(), &[1, 1]);
    }

    #[test]
    fn zerodivisor_resolution_over_monomial_hypersurface_is_periodic() {
        // R/(s) over k[s,t]/(s*t): the tail alternates s, t, s, ... forever.
        let field = FieldSpec::new(2).unwrap();
        let vars = vec![("s".to_string(), 1), ("t".to_string(), 1)];
        let free = RingPresentation::new(field, vars.clone(), vec![], false).unwrap();
        let rel = free.parse("s*t").unwrap();
        let ring = RingPresentation::new(field, vars, vec![rel], true).unwrap();
        let d1 = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("s").unwrap()]).unwrap();
        let res = free_resolution(&d1, 6, &Budget::default()).unwrap();
        assert!(!res.complete);
        assert_eq!(res.length(), 6);
        assert_eq!(res.betti(), &[1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(res.complex.diff(2).unwrap().get(0, 0).render(&ring), "t");
        assert_eq!(res.complex.diff(3).unwrap().get(0, 0).render(&ring), "s");
    }

    #[test]
    fn presentation_of_a_cyclic_quotient_recovers_its_length() {
        // M = k[x,y]/(x^2, y^2) as a module: dim 4, one generator.
        let ring = poly_ring_xy();
        let x2 = ring.parse("x^2").unwrap();
        let y2 = ring.parse("y^2").unwrap();
        let quot = RingPresentation::new(
            ring.field(),
            vec![("x".to_string(), 1), ("y".to_string(), 1)],
            vec![x2, y2],
            false,
        )
        .unwrap();
        let gb = module_groebner(&quot, 1, &[], &Budget::default()).unwrap();
        let m = FiniteLengthModule::from_quotient(&gb).unwrap();
        assert_eq!(m.dim(), 4);
        // Present it back over the free polynomial ring.
        let free_actions = m.actions().to_vec();
        let free_m = FiniteLengthModule::new(&ring, 4, free_actions).unwrap();
        let d1 = presentation_of(&free_m, &Budget::default()).unwrap();
        assert_eq!(d1.rows(), 1);
        let gb2 = module_groebner(&ring, 1, &d1.columns_as_vectors(), &Budget::default()).unwrap();
        assert_eq!(quotient_length(&gb2).unwrap(), 4);
        // And the relations are exactly (x^2, y^2) up to minimalization.
        assert_eq!(d1.cols(), 2);
    }
}
