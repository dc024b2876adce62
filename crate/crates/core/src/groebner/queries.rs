//! Questions answered from a finished basis: vector-space dimension of a
//! quotient, its monomial basis, multiplication operators, socle, Krull
//! dimension, regularity of an element — plus a slow windowed dimension
//! count that uses nothing but linear algebra, kept as an independent
//! cross-check for the combinatorial answers.

use crate::error::{Error, Result};
use crate::exactlin::ScalarMatrix;
use crate::groebner::engine::{ideal_basis, Budget, GroebnerBasis};
use crate::groebner::modvec::{ModVec, MTerm};
use crate::groebner::syzygy::kernel_generators;
use crate::polyring::{Monomial, Polynomial, RingPresentation};
use std::collections::HashMap;
use std::sync::Arc;

/// Guard for runaway standard-monomial enumerations.
const MAX_STD_MONOMIALS: u64 = 50_000_000;

/// Monomial basis of `Ring^rank / U`, i.e. all `(component, monomial)` pairs
/// outside the leading-term module. Errors with [`Error::InfiniteLength`]
/// when the quotient is not finite-dimensional, which is detected per
/// component by the absence of a pure power of some variable.
pub fn std_monomials(gb: &GroebnerBasis) -> Result<Vec<(u32, Monomial)>> {
    let ring = gb.ring();
    let nvars = ring.nvars();
    let weights = ring.order().weights();
    let mut out: Vec<(u32, Monomial)> = Vec::new();
    let mut count: u64 = 0;
    for comp in 0..gb.rank() as u32 {
        let leads: Vec<&Monomial> = gb.leading_monomials(comp);
        if leads.iter().any(|m| m.is_one()) {
            continue; // whole component collapses
        }
        // Finiteness: every variable needs a pure-power leading term in this
        // component, otherwise its powers are all standard.
        let mut bound = vec![0u8; nvars];
        for v in 0..nvars {
            let mut best: Option<u8> = None;
            for m in &leads {
                let e = m.exps();
                if e[v] > 0 && e.iter().enumerate().all(|(j, &x)| j == v || x == 0) {
                    let cand = e[v];
                    best = Some(best.map_or(cand, |b| b.min(cand)));
                }
            }
            match best {
                Some(b) => bound[v] = b,
                None => {
                    return Err(Error::InfiniteLength(format!(
                        "component {comp}: no pure power of {} among leading terms",
                        ring.vars()[v]
                    )))
                }
            }
        }
        // Enumerate exponent boxes below the pure-power bounds, skipping
        // anything divisible by a leading term.
        let mut exps = vec![0u8; nvars];
        enumerate_std(
            0,
            &mut exps,
            &bound,
            &leads,
            weights,
            comp,
            &mut out,
            &mut count,
        )?;
    }
    // Deterministic order: component, then ascending monomial order.
    let ord = ring.order().clone();
    out.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| ord.cmp(&a.1, &b.1)));
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_std(
    var: usize,
    exps: &mut [u8],
    bound: &[u8],
    leads: &[&Monomial],
    weights: &[u32],
    comp: u32,
    out: &mut Vec<(u32, Monomial)>,
    count: &mut u64,
) -> Result<()> {
    if var == exps.len() {
        let m = Monomial::from_exps(exps, weights);
        if !leads.iter().any(|l| l.divides(&m)) {
            *count += 1;
            if *count > MAX_STD_MONOMIALS {
                return Err(Error::Resource {
                    what: "standard monomials",
                    reached: *count,
                    limit: MAX_STD_MONOMIALS,
                });
            }
            out.push((comp, m));
        }
        return Ok(());
    }
    for e in 0..bound[var] {
        exps[var] = e;
        enumerate_std(var + 1, exps, bound, leads, weights, comp, out, count)?;
    }
    exps[var] = 0;
    Ok(())
}

/// Vector-space dimension of the quotient; the headline length query.
pub fn quotient_length(gb: &GroebnerBasis) -> Result<u64> {
    Ok(std_monomials(gb)?.len() as u64)
}

/// Position lookup for expansion in a computed monomial basis.
pub fn basis_positions(basis: &[(u32, Monomial)]) -> HashMap<(u32, Monomial), usize> {
    basis
        .iter()
        .enumerate()
        .map(|(i, bm)| (bm.clone(), i))
        .collect()
}

/// Coordinates of the class of `v` in the quotient, expanded in `basis`.
pub fn coords(
    gb: &GroebnerBasis,
    v: &ModVec,
    positions: &HashMap<(u32, Monomial), usize>,
) -> Result<Vec<u16>> {
    let nf = gb.normal_form(v);
    let mut out = vec![0u16; positions.len()];
    for t in nf.terms() {
        let key = (t.comp, t.mono.clone());
        let Some(&i) = positions.get(&key) else {
            return Err(Error::Precondition(
                "normal form leaves the provided basis; was it computed from this basis?".into(),
            ));
        };
        out[i] = t.coeff;
    }
    Ok(out)
}

/// One square matrix per ring variable: the action of multiplication on the
/// finite-dimensional quotient, columns indexed by `basis`.
pub fn multiplication_matrices(
    gb: &GroebnerBasis,
    basis: &[(u32, Monomial)],
) -> Result<Vec<ScalarMatrix>> {
    let ring = gb.ring();
    let field = ring.field();
    let n = basis.len();
    let positions = basis_positions(basis);
    let weights = ring.order().weights();
    let mut mats = Vec::with_capacity(ring.nvars());
    for v in 0..ring.nvars() {
        let xv = Monomial::var(v, ring.nvars(), weights);
        let mut m = ScalarMatrix::zero(field, n, n);
        for (j, (comp, mono)) in basis.iter().enumerate() {
            let shifted = ModVec::from_terms(
                vec![MTerm {
                    comp: *comp,
                    coeff: 1,
                    mono: mono.mul(&xv),
                }],
                gb.order(),
                field,
            );
            let col = coords(gb, &shifted, &positions)?;
            for (i, &c) in col.iter().enumerate() {
                if c != 0 {
                    m.set(i, j, c);
                }
            }
        }
        mats.push(m);
    }
    Ok(mats)
}

/// Socle of the quotient: classes killed by every variable. Returns the
/// monomial basis used and the socle vectors in its coordinates.
pub struct SocleInfo {
    pub basis: Vec<(u32, Monomial)>,
    pub vectors: Vec<Vec<u16>>,
}

impl SocleInfo {
    pub fn dimension(&self) -> usize {
        self.vectors.len()
    }
}

pub fn socle(gb: &GroebnerBasis) -> Result<SocleInfo> {
    let basis = std_monomials(gb)?;
    let mats = multiplication_matrices(gb, &basis)?;
    if basis.is_empty() {
        return Ok(SocleInfo {
            basis,
            vectors: vec![],
        });
    }
    let refs: Vec<&ScalarMatrix> = mats.iter().collect();
    let stacked = ScalarMatrix::vstack(&refs)?;
    let vectors = stacked.kernel_basis();
    Ok(SocleInfo { basis, vectors })
}

/// Krull dimension of the presented ring itself, read off the defining
/// ideal's leading terms: the largest set of variables meeting no leading
/// support. The zero ring reports -1.
pub fn ring_dimension(ring: &Arc<RingPresentation>, budget: &Budget) -> Result<i64> {
    let n = ring.nvars();
    if n > 20 {
        return Err(Error::Precondition(
            "dimension by support enumeration is limited to 20 variables".into(),
        ));
    }
    let leads: Vec<Vec<usize>> = if ring.ideal().is_empty() {
        vec![]
    } else {
        ideal_basis(ring, budget)?
            .iter()
            .map(|g| {
                let lt = &g.leading_term().expect("reduced basis has no zeros").mono;
                (0..n).filter(|&v| lt.exps()[v] > 0).collect()
            })
            .collect()
    };
    if leads.iter().any(|s| s.is_empty()) {
        return Ok(-1); // a unit leading term: the ring is zero
    }
    let mut best: i64 = 0;
    for mask in 0u32..(1u32 << n) {
        let popcount = mask.count_ones() as i64;
        if popcount <= best {
            continue;
        }
        let independent = leads
            .iter()
            .all(|supp| !supp.iter().all(|&v| mask & (1 << v) != 0));
        if independent {
            best = popcount;
        }
    }
    Ok(best)
}

/// Is `f` a nonzerodivisor on `Ring/(extra)`? Decided by an annihilator
/// computation: the kernel of multiplication by `f` must vanish.
pub fn is_regular_element(
    ring: &Arc<RingPresentation>,
    extra: &[Polynomial],
    f: &Polynomial,
    budget: &Budget,
) -> Result<bool> {
    let field = ring.field();
    let vars: Vec<(String, u32)> = ring
        .vars()
        .iter()
        .cloned()
        .zip(ring.order().weights().iter().copied())
        .map(|(n, w)| (n, w))
        .collect();
    let mut ideal = ring.ideal().to_vec();
    ideal.extend_from_slice(extra);
    let quot = RingPresentation::new(field, vars, ideal, false)?;
    let fq = crate::groebner::engine::reduce_mod_ideal(&quot, f, budget)?;
    if fq.is_zero() {
        // Zero is regular only on the zero module.
        let one = Polynomial::constant(1, &quot);
        let one_nf = crate::groebner::engine::reduce_mod_ideal(&quot, &one, budget)?;
        return Ok(one_nf.is_zero());
    }
    let ann = kernel_generators(&quot, 1, &[ModVec::embed(&fq, 0)], &[], budget)?;
    Ok(ann.is_empty())
}

/// Windowed dimension count by plain rank computations, no completion
/// involved: dimension of the span of monomials of weighted degree at most
/// `window` modulo all generator multiples that stay inside the window.
/// Converges to the true quotient dimension once the window clears every
/// standard monomial and every necessary cancellation; callers compare
/// successive windows for stability.
pub fn windowed_quotient_dim(
    ring: &Arc<RingPresentation>,
    rank: usize,
    gens: &[ModVec],
    window: u32,
    budget: &Budget,
) -> Result<u64> {
    let field = ring.field();
    let monos = ring.monomials_up_to(window);
    let mut col_of: HashMap<(u32, Monomial), usize> = HashMap::new();
    for c in 0..rank as u32 {
        for m in &monos {
            let k = col_of.len();
            col_of.insert((c, m.clone()), k);
        }
    }
    let cols = col_of.len();
    let mut all_gens: Vec<ModVec> = gens.to_vec();
    if !ring.ideal().is_empty() {
        for h in ideal_basis(ring, budget)? {
            for c in 0..rank as u32 {
                all_gens.push(ModVec::embed(h, c));
            }
        }
    }
    let mut rows: Vec<Vec<u16>> = Vec::new();
    for g in &all_gens {
        let Some(d) = g.weighted_degree() else { continue };
        if d > window {
            continue;
        }
        for mu in ring.monomials_up_to(window - d) {
            let shifted = g.mul_term(1, &mu, field);
            let mut row = vec![0u16; cols];
            for t in shifted.terms() {
                let idx = col_of[&(t.comp, t.mono.clone())];
                row[idx] = field.add(row[idx], t.coeff);
            }
            rows.push(row);
        }
    }
    let rank_rows = if rows.is_empty() {
        0
    } else {
        ScalarMatrix::from_rows(field, &rows)?.rank()
    };
    Ok((cols - rank_rows) as u64)
}

/// Convenience: report the windowed dimension at `window` and `window +
/// step`; equality is the caller's stabilisation evidence.
pub fn windowed_quotient_stable(
    ring: &Arc<RingPresentation>,
    rank: usize,
    gens: &[ModVec],
    window: u32,
    step: u32,
    budget: &Budget,
) -> Result<(u64, u64)> {
    let a = windowed_quotient_dim(ring, rank, gens, window, budget)?;
    let b = windowed_quotient_dim(ring, rank, gens, window + step, budget)?;
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::FieldSpec;
    use crate::groebner::engine::module_groebner;

    fn quotient(p: u64, names: &[&str], gens: &[&str]) -> (Arc<RingPresentation>, GroebnerBasis) {
        let ring = RingPresentation::new(
            FieldSpec::new(p).unwrap(),
            names.iter().map(|n| (n.to_string(), 1)).collect(),
            vec![],
            false,
        )
        .unwrap();
        let vecs: Vec<ModVec> = gens
            .iter()
            .map(|s| ModVec::embed(&ring.parse(s).unwrap(), 0))
            .collect();
        let gb = module_groebner(&ring, 1, &vecs, &Budget::default()).unwrap();
        (ring, gb)
    }

    #[test]
    fn monomial_count_of_a_box_quotient() {
        // k[x,y]/(x^2, y^3) has dimension 6.
        let (_, gb) = quotient(5, &["x", "y"], &["x^2", "y^3"]);
        assert_eq!(quotient_length(&gb).unwrap(), 6);
        let basis = std_monomials(&gb).unwrap();
        assert_eq!(basis.len(), 6);
    }

    #[test]
    fn infinite_quotients_are_rejected() {
        let (_, gb) = quotient(5, &["x", "y"], &["x^2"]);
        match quotient_length(&gb) {
            Err(Error::InfiniteLength(_)) => {}
            other => panic!("expected infinite-length error, got {other:?}"),
        }
    }

    #[test]
    fn multiplication_matrices_commute_and_are_nilpotent() {
        let (ring, gb) = quotient(5, &["x", "y"], &["x^2+y^2", "x*y"]);
        // k[x,y]/(x^2+y^2, xy): basis 1, x, y, x^2 (y^2 = -x^2): dim 4.
        let basis = std_monomials(&gb).unwrap();
        assert_eq!(basis.len(), 4);
        let mats = multiplication_matrices(&gb, &basis).unwrap();
        let (mx, my) = (&mats[0], &mats[1]);
        assert_eq!(mx.mul(my).unwrap(), my.mul(mx).unwrap());
        // The maximal ideal is nilpotent: x^3 acts as zero.
        let x3 = mx.mul(mx).unwrap().mul(mx).unwrap();
        assert!(x3.is_zero());
        let _ = ring;
    }

    #[test]
    fn socle_of_a_complete_intersection_box() {
        // k[x,y]/(x^2, y^2): socle is spanned by xy alone.
        let (_, gb) = quotient(2, &["x", "y"], &["x^2", "y^2"]);
        let s = socle(&gb).unwrap();
        assert_eq!(s.dimension(), 1);
        let idx = s
            .basis
            .iter()
            .position(|(_, m)| m.exps() == [1, 1])
            .unwrap();
        assert_eq!(s.vectors[0][idx], 1);
        assert!(s.vectors[0]
            .iter()
            .enumerate()
            .all(|(i, &c)| i == idx || c == 0));
    }

    #[test]
    fn dimensions_of_familiar_rings() {
        let b = Budget::default();
        let f5 = FieldSpec::new(5).unwrap();
        let names: Vec<(String, u32)> =
            ["x", "y", "z"].iter().map(|n| (n.to_string(), 1)).collect();
        let poly = RingPresentation::new(f5, names.clone(), vec![], false).unwrap();
        assert_eq!(ring_dimension(&poly, &b).unwrap(), 3);
        let hyp = RingPresentation::new(
            f5,
            names.clone(),
            vec![poly.parse("x*y+z^2").unwrap()],
            true,
        )
        .unwrap();
        assert_eq!(ring_dimension(&hyp, &b).unwrap(), 2);
        let zero = RingPresentation::new(f5, names, vec![poly.parse("1").unwrap()], true).unwrap();
        assert_eq!(ring_dimension(&zero, &b).unwrap(), -1);
    }

    #[test]
    fn regularity_detects_zerodivisors() {
        let b = Budget::default();
        let f5 = FieldSpec::new(5).unwrap();
        let names: Vec<(String, u32)> = ["x", "y"].iter().map(|n| (n.to_string(), 1)).collect();
        let poly = RingPresentation::new(f5, names, vec![], false).unwrap();
        let xy = poly.parse("x*y").unwrap();
        // On k[x,y]/(xy): x is a zerodivisor, x+y is regular.
        assert!(!is_regular_element(&poly, &[xy.clone()], &poly.parse("x").unwrap(), &b).unwrap());
        assert!(is_regular_element(&poly, &[xy], &poly.parse("x+y").unwrap(), &b).unwrap());
        // On the polynomial ring itself, any variable is regular.
        assert!(is_regular_element(&poly, &[], &poly.parse("y").unwrap(), &b).unwrap());
    }

    #[test]
    fn windowed_count_agrees_with_basis_count() {
        let f5 = FieldSpec::new(5).unwrap();
        let names: Vec<(String, u32)> = ["x", "y"].iter().map(|n| (n.to_string(), 1)).collect();
        let ring = RingPresentation::new(f5, names, vec![], false).unwrap();
        let gens = vec![
            ModVec::embed(&ring.parse("x^2+y^2").unwrap(), 0),
            ModVec::embed(&ring.parse("x*y").unwrap(), 0),
        ];
        let gb = module_groebner(&ring, 1, &gens, &Budget::default()).unwrap();
        let exact = quotient_length(&gb).unwrap();
        let (w1, w2) =
            windowed_quotient_stable(&ring, 1, &gens, 6, 1, &Budget::default()).unwrap();
        assert_eq!(w1, w2, "window must have stabilised");
        assert_eq!(w1, exact);
    }

    #[test]
    fn windowed_count_handles_inhomogeneous_generators() {
        // (x^2 - y, y^3) in k[x,y]: quotient has basis 1, x, y, xy, y^2, xy^2.
        let f5 = FieldSpec::new(5).unwrap();
        let names: Vec<(String, u32)> = ["x", "y"].iter().map(|n| (n.to_string(), 1)).collect();
        let ring = RingPresentation::new(f5, names, vec![], false).unwrap();
        let gens = vec![
            ModVec::embed(&ring.parse("x^2-y").unwrap(), 0),
            ModVec::embed(&ring.parse("y^3").unwrap(), 0),
        ];
        let gb = module_groebner(&ring, 1, &gens, &Budget::default()).unwrap();
        let exact = quotient_length(&gb).unwrap();
        assert_eq!(exact, 6);
        let (w1, w2) =
            windowed_quotient_stable(&ring, 1, &gens, 8, 1, &Budget::default()).unwrap();
        assert_eq!(w1, w2);
        assert_eq!(w1, exact);
    }
}
