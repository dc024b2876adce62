//! Chain complexes of free modules over a presented ring, their scalar
//! shadows after substituting a finite-length module, and homology lengths
//! computed either by rank-nullity or by Groebner kernels.

use crate::error::{Error, Result};
use crate::exactlin::ScalarMatrix;
use crate::groebner::{
    kernel_generators, module_groebner, quotient_length, Budget, MTerm, ModOrder, ModVec,
};
use crate::homology::flmodule::FiniteLengthModule;
use crate::homology::polymatrix::PolyMatrix;
use crate::polyring::{Polynomial, RingPresentation};
use serde_json::json;
use std::sync::Arc;

/// `ranks[i]` is the free rank of the degree-`i` term; `diffs[k]` is the
/// differential `d_{k+1}: C_{k+1} -> C_k`, so `diffs.len() + 1 == ranks.len()`.
#[derive(Debug, Clone)]
pub struct ChainComplex {
    ring: Arc<RingPresentation>,
    ranks: Vec<usize>,
    diffs: Vec<PolyMatrix>,
}

impl ChainComplex {
    pub fn new(
        ring: &Arc<RingPresentation>,
        ranks: Vec<usize>,
        diffs: Vec<PolyMatrix>,
    ) -> Result<ChainComplex> {
        if ranks.is_empty() {
            return Err(Error::Precondition("complex needs at least one term".into()));
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(Error::ShapeMismatch(format!(
                "{} terms require {} differentials, got {}",
                ranks.len(),
                ranks.len() - 1,
                diffs.len()
            )));
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.ring().as_ref() != ring.as_ref() {
                return Err(Error::RingMismatch(format!(
                    "differential {} lives over a different ring",
                    k + 1
                )));
            }
            if d.rows() != ranks[k] || d.cols() != ranks[k + 1] {
                return Err(Error::ShapeMismatch(format!(
                    "differential {}: got {}x{}, expected {}x{}",
                    k + 1,
                    d.rows(),
                    d.cols(),
                    ranks[k],
                    ranks[k + 1]
                )));
            }
        }
        Ok(ChainComplex {
            ring: Arc::clone(ring),
            ranks,
            diffs,
        })
    }

    /// Build from consecutive differentials `d_1, d_2, ...`; ranks inferred.
    pub fn from_differentials(
        ring: &Arc<RingPresentation>,
        diffs: Vec<PolyMatrix>,
    ) -> Result<ChainComplex> {
        if diffs.is_empty() {
            return Err(Error::Precondition(
                "cannot infer ranks without differentials".into(),
            ));
        }
        let mut ranks = vec![diffs[0].rows()];
        for d in &diffs {
            ranks.push(d.cols());
        }
        ChainComplex::new(ring, ranks, diffs)
    }

    /// A single free module in degree zero.
    pub fn single_term(ring: &Arc<RingPresentation>, rank: usize) -> ChainComplex {
        ChainComplex {
            ring: Arc::clone(ring),
            ranks: vec![rank],
            diffs: vec![],
        }
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    /// Highest homological degree carried by the complex.
    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_i: C_i -> C_{i-1}` for `1 <= i <= top_degree()`.
    pub fn diff(&self, i: usize) -> Option<&PolyMatrix> {
        if i == 0 {
            return None;
        }
        self.diffs.get(i - 1)
    }

    pub fn differentials(&self) -> &[PolyMatrix] {
        &self.diffs
    }

    /// Degrees `i` where `d_i . d_{i+1}` fails to vanish modulo the ideal.
    pub fn composition_violations(&self, budget: &Budget) -> Result<Vec<usize>> {
        let mut bad = Vec::new();
        for i in 1..self.ranks.len() - 1 {
            let prod = self.diffs[i - 1].mul(&self.diffs[i])?;
            if !prod.is_zero_mod_ideal(budget)? {
                bad.push(i);
            }
        }
        Ok(bad)
    }

    /// Keep degrees `0..=len` only.
    pub fn truncate(&self, len: usize) -> ChainComplex {
        let len = len.min(self.top_degree());
        ChainComplex {
            ring: Arc::clone(&self.ring),
            ranks: self.ranks[..=len].to_vec(),
            diffs: self.diffs[..len].to_vec(),
        }
    }

    pub fn substitute(&self, module: &FiniteLengthModule) -> Result<ScalarComplex> {
        let dims = self.ranks.iter().map(|r| r * module.dim()).collect();
        let mut maps = Vec::with_capacity(self.diffs.len());
        for d in &self.diffs {
            maps.push(d.substitute(module)?);
        }
        Ok(ScalarComplex { dims, maps })
    }

    pub fn frobenius(&self, steps: u32) -> Result<ChainComplex> {
        let mut diffs = Vec::with_capacity(self.diffs.len());
        for d in &self.diffs {
            diffs.push(d.frobenius(steps)?);
        }
        Ok(ChainComplex {
            ring: Arc::clone(&self.ring),
            ranks: self.ranks.clone(),
            diffs,
        })
    }

    /// Base change along a variable re-indexing. Verifies that the source
    /// ring's defining ideal lands inside the target's.
    pub fn map_vars(
        &self,
        target: &Arc<RingPresentation>,
        var_map: &[usize],
        budget: &Budget,
    ) -> Result<ChainComplex> {
        for g in self.ring.ideal() {
            let image = g.map_vars(var_map, target)?;
            let nf = crate::groebner::reduce_mod_ideal(target, &image, budget)?;
            if !nf.is_zero() {
                return Err(Error::RingMismatch(
                    "variable mapping does not send the defining ideal into the target's".into(),
                ));
            }
        }
        let mut diffs = Vec::with_capacity(self.diffs.len());
        for d in &self.diffs {
            diffs.push(d.map_vars(target, var_map)?);
        }
        Ok(ChainComplex {
            ring: Arc::clone(target),
            ranks: self.ranks.clone(),
            diffs,
        })
    }

    /// Length of `H_i` of this free complex over the presented ring, via
    /// Groebner kernels: cycles as a syzygy module, boundaries quotiented out.
    pub fn homology_length(&self, i: usize, budget: &Budget) -> Result<u64> {
        if i > self.top_degree() {
            return Ok(0);
        }
        let boundary_cols: Vec<ModVec> = match self.diff(i + 1) {
            Some(d) => d.columns_as_vectors(),
            None => vec![],
        };
        if i == 0 {
            let gb = module_groebner(&self.ring, self.ranks[0], &boundary_cols, budget)?;
            return quotient_length(&gb);
        }
        let cycle_gens = kernel_generators(
            &self.ring,
            self.ranks[i - 1],
            &self.diffs[i - 1].columns_as_vectors(),
            &[],
            budget,
        )?;
        subquotient_length(&self.ring, self.ranks[i], &cycle_gens, &boundary_cols, budget)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "characteristic": self.ring.field().p(),
            "vars": self.ring.vars(),
            "weights": self.ring.order().weights(),
            "ranks": self.ranks,
            "differentials": self
                .diffs
                .iter()
                .map(|d| {
                    (0..d.rows())
                        .map(|i| {
                            (0..d.cols())
                                .map(|j| d.get(i, j).render(&self.ring))
                                .collect::<Vec<_>>()
                        })
                        .collect::<Vec<_>>()
                })
                .collect::<Vec<_>>(),
        })
    }
}

/// Length of `(<numerator> + <denominator>) / <denominator>` inside
/// `Ring^rank`, by presenting the subquotient on the numerator generators.
pub fn subquotient_length(
    ring: &Arc<RingPresentation>,
    rank: usize,
    numerator: &[ModVec],
    denominator: &[ModVec],
    budget: &Budget,
) -> Result<u64> {
    if numerator.is_empty() {
        return Ok(0);
    }
    let relations = kernel_generators(ring, rank, numerator, denominator, budget)?;
    let gb = module_groebner(ring, numerator.len(), &relations, budget)?;
    quotient_length(&gb)
}

/// Homology length of `self tensor coker(coeff)` at degree `i`, where
/// `coeff: Ring^s -> Ring^t` presents the coefficient module. The tensored
/// complex has terms `Ring^(r_i * t)` with per-term presentation relations.
pub fn tensored_homology_length(
    cx: &ChainComplex,
    coeff: &PolyMatrix,
    i: usize,
    budget: &Budget,
) -> Result<u64> {
    if i > cx.top_degree() {
        return Ok(0);
    }
    let ring = cx.ring();
    let t = coeff.rows();
    let term_relations = |deg: usize| -> Vec<ModVec> {
        kron_identity_columns(ring, cx.ranks()[deg], coeff)
    };
    let mut boundary: Vec<ModVec> = match cx.diff(i + 1) {
        Some(d) => kron_right(d, t).columns_as_vectors(),
        None => vec![],
    };
    boundary.extend(term_relations(i));
    if i == 0 {
        let gb = module_groebner(ring, cx.ranks()[0] * t, &boundary, budget)?;
        return quotient_length(&gb);
    }
    let d_i = kron_right(cx.diff(i).expect("checked degree"), t);
    let cycles = kernel_generators(
        ring,
        cx.ranks()[i - 1] * t,
        &d_i.columns_as_vectors(),
        &term_relations(i - 1),
        budget,
    )?;
    subquotient_length(ring, cx.ranks()[i] * t, &cycles, &boundary, budget)
}

/// `d tensor I_t`: block entry `(a, c)` of the source becomes a `t x t`
/// scalar-diagonal block.
pub fn kron_right(d: &PolyMatrix, t: usize) -> PolyMatrix {
    let mut out = PolyMatrix::zero(d.ring(), d.rows() * t, d.cols() * t);
    for a in 0..d.rows() {
        for c in 0..d.cols() {
            let e = d.get(a, c);
            if e.is_zero() {
                continue;
            }
            for b in 0..t {
                out.set(a * t + b, c * t + b, e.clone());
            }
        }
    }
    out
}

/// Columns of `I_r tensor coeff` as vectors in `Ring^(r * t)`: the
/// coefficient-module relations copied into each free summand.
fn kron_identity_columns(
    ring: &Arc<RingPresentation>,
    r: usize,
    coeff: &PolyMatrix,
) -> Vec<ModVec> {
    let t = coeff.rows();
    let ord = ModOrder::for_ring(ring, (r * t) as u32);
    let field = ring.field();
    let mut out = Vec::with_capacity(r * coeff.cols());
    for a in 0..r {
        for j in 0..coeff.cols() {
            let mut terms = Vec::new();
            for row in 0..t {
                for term in coeff.get(row, j).terms() {
                    terms.push(MTerm {
                        comp: (a * t + row) as u32,
                        coeff: term.coeff,
                        mono: term.mono.clone(),
                    });
                }
            }
            let v = ModVec::from_terms(terms, &ord, field);
            if !v.is_zero() {
                out.push(v);
            }
        }
    }
    out
}

/// The Koszul complex on a list of ring elements: degree-`k` term is free on
/// the size-`k` subsets, with the usual alternating-sign differential.
pub fn koszul_complex(
    ring: &Arc<RingPresentation>,
    elements: &[Polynomial],
) -> Result<ChainComplex> {
    let n = elements.len();
    if n == 0 {
        return Ok(ChainComplex::single_term(ring, 1));
    }
    if n > 20 {
        return Err(Error::Precondition("Koszul complex limited to 20 elements".into()));
    }
    // Degree-k basis: subsets of {0..n} of size k, ordered lexicographically.
    let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
    for mask in 0u32..(1 << n) {
        let s: Vec<usize> = (0..n).filter(|&b| mask >> b & 1 == 1).collect();
        subsets[s.len()].push(s);
    }
    for level in &mut subsets {
        level.sort();
    }
    let ranks: Vec<usize> = subsets.iter().map(Vec::len).collect();
    let mut diffs = Vec::with_capacity(n);
    for k in 1..=n {
        let lower = &subsets[k - 1];
        let index_of = |s: &[usize]| lower.binary_search_by(|probe| probe.as_slice().cmp(s));
        let mut d = PolyMatrix::zero(ring, ranks[k - 1], ranks[k]);
        for (j, s) in subsets[k].iter().enumerate() {
            for (pos, &elem) in s.iter().enumerate() {
                let mut face = s.clone();
                face.remove(pos);
                let row = index_of(&face).expect("face subset present");
                let mut entry = elements[elem].clone();
                if pos % 2 == 1 {
                    entry = entry.neg(ring);
                }
                d.set(row, j, entry);
            }
        }
        diffs.push(d);
    }
    ChainComplex::new(ring, ranks, diffs)
}

/// A complex of finite-dimensional vector spaces: `maps[k]` sends degree
/// `k + 1` to degree `k`.
#[derive(Debug, Clone)]
pub struct ScalarComplex {
    pub dims: Vec<usize>,
    pub maps: Vec<ScalarMatrix>,
}

impl ScalarComplex {
    pub fn top_degree(&self) -> usize {
        self.dims.len() - 1
    }

    pub fn composition_is_zero(&self) -> Result<bool> {
        for k in 0..self.maps.len().saturating_sub(1) {
            if !self.maps[k].mul(&self.maps[k + 1])?.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `dim H_i` for `i = 0..=top`, by rank-nullity on consecutive maps.
    pub fn homology_dims(&self) -> Vec<usize> {
        let ranks: Vec<usize> = self.maps.iter().map(ScalarMatrix::rank).collect();
        (0..self.dims.len())
            .map(|i| {
                let incoming = if i < ranks.len() { ranks[i] } else { 0 };
                let outgoing = if i >= 1 { ranks[i - 1] } else { 0 };
                self.dims[i] - outgoing - incoming
            })
            .collect()
    }

    /// Alternating sum of homology dimensions (equals the alternating sum of
    /// term dimensions, which is how it is computed).
    pub fn euler_characteristic(&self) -> i64 {
        self.homology_dims()
            .iter()
            .enumerate()
            .map(|(i, &h)| if i % 2 == 0 { h as i64 } else { -(h as i64) })
            .sum()
    }
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
    fn koszul_on_two_variables_resolves_the_origin() {
        let ring = poly_ring_xy();
        let elems = vec![ring.parse("x").unwrap(), ring.parse("y").unwrap()];
        let kos = koszul_complex(&ring, &elems).unwrap();
        assert_eq!(kos.ranks(), &[1, 2, 1]);
        assert!(kos.composition_violations(&Budget::default()).unwrap().is_empty());
        // Quotient by (x, y) is the field: H_0 = 1, higher homology zero.
        assert_eq!(kos.homology_length(0, &Budget::default()).unwrap(), 1);
        assert_eq!(kos.homology_length(1, &Budget::default()).unwrap(), 0);
        assert_eq!(kos.homology_length(2, &Budget::default()).unwrap(), 0);
    }

    #[test]
    fn koszul_substituted_into_residue_field_gives_binomial_homology() {
        let ring = ring_a(2);
        let elems = vec![ring.parse("v").unwrap(), ring.parse("w").unwrap()];
        let kos = koszul_complex(&ring, &elems).unwrap();
        let k = FiniteLengthModule::residue_field(&ring);
        let scalar = kos.substitute(&k).unwrap();
        assert!(scalar.composition_is_zero().unwrap());
        assert_eq!(scalar.homology_dims(), vec![1, 2, 1]);
        assert_eq!(scalar.euler_characteristic(), 0);
    }

    #[test]
    fn groebner_homology_detects_nonexactness() {
        // 0 -> R --x--> R: kernel of x in k[x,y]/(xy) is (y), so H_1 is the
        // infinite-length module (y) — expect an explicit infinite marker.
        let field = FieldSpec::new(2).unwrap();
        let vars = vec![("x".to_string(), 1), ("y".to_string(), 1)];
        let free = RingPresentation::new(field, vars.clone(), vec![], false).unwrap();
        let xy = free.parse("x*y").unwrap();
        let ring = RingPresentation::new(field, vars, vec![xy], true).unwrap();
        let d1 = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("x").unwrap()]).unwrap();
        let cx = ChainComplex::from_differentials(&ring, vec![d1]).unwrap();
        let err = cx.homology_length(1, &Budget::default()).unwrap_err();
        assert!(matches!(err, Error::InfiniteLength(_)));
        // H_0 = R/(x) = k[y], also infinite.
        assert!(matches!(
            cx.homology_length(0, &Budget::default()).unwrap_err(),
            Error::InfiniteLength(_)
        ));
    }

    #[test]
    fn tensored_homology_matches_direct_computation() {
        // Over k[x,y]: complex R --(x)--> R tensored with R/(y) has
        // H_0 = R/(x,y) = k and H_1 = ker(x on R/(y)) = 0.
        let ring = poly_ring_xy();
        let d1 = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("x").unwrap()]).unwrap();
        let cx = ChainComplex::from_differentials(&ring, vec![d1]).unwrap();
        let coeff = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("y").unwrap()]).unwrap();
        assert_eq!(tensored_homology_length(&cx, &coeff, 0, &Budget::default()).unwrap(), 1);
        assert_eq!(tensored_homology_length(&cx, &coeff, 1, &Budget::default()).unwrap(), 0);
        // Same complex tensored with R/(x): H_1 = ker(x on R/(x)) = everything,
        // which is R/(x) = k[y] — infinite.
        let coeff_x = PolyMatrix::new(&ring, 1, 1, vec![ring.parse("x").unwrap()]).unwrap();
        assert!(matches!(
            tensored_homology_length(&cx, &coeff_x, 1, &Budget::default()).unwrap_err(),
            Error::InfiniteLength(_)
        ));
    }

    #[test]
    fn scalar_homology_satisfies_rank_nullity_bookkeeping() {
        let field = FieldSpec::new(3).unwrap();
        // 0 -> k^2 --m--> k^2 -> 0 with m of rank 1: H_0 = H_1 = 1.
        let m = ScalarMatrix::from_rows(field, &[vec![1, 2], vec![2, 1]]).unwrap();
        let sc = ScalarComplex {
            dims: vec![2, 2],
            maps: vec![m],
        };
        assert_eq!(sc.homology_dims(), vec![1, 1]);
        assert_eq!(sc.euler_characteristic(), 0);
    }

    #[test]
    fn frobenius_composition_law_on_complexes() {
        let ring = ring_a(2);
        let d1 = PolyMatrix::new(
            &ring,
            1,
            2,
            vec![ring.parse("u+v*y").unwrap(), ring.parse("w").unwrap()],
        )
        .unwrap();
        let cx = ChainComplex::from_differentials(&ring, vec![d1]).unwrap();
        let a = cx.frobenius(1).unwrap().frobenius(2).unwrap();
        let b = cx.frobenius(3).unwrap();
        for (da, db) in a.differentials().iter().zip(b.differentials()) {
            for i in 0..da.rows() {
                for j in 0..da.cols() {
                    assert_eq!(da.get(i, j), db.get(i, j));
                }
            }
        }
    }
}
