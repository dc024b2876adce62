//! The specific rings, modules and maps under verification, loaded from the
//! audited text assets embedded at build time.
//!
//! Naming used throughout:
//!
//! * the *hypersurface ring* is `K[u,v,w,x,y,z]/(ux+vy+wz)` over GF(p);
//! * the *psi module* is the 55-dimensional module over it given by the
//!   eleven 0/1 block matrices in `data/psi/`;
//! * the *phi matrices* are the four polynomial matrices in `data/phi/`
//!   forming the eventually two-periodic free resolution of the cyclic
//!   quotient by `(u, v, w)`;
//! * the *extension ring* is the eleven-variable quotient in `data/rings/
//!   R.ring`, defined only in characteristic 2, which is a free module of
//!   rank 6 over the hypersurface ring on the classes of `1, a, b, c, d, e`.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, ScalarMatrix};
use crate::groebner::{
    module_groebner, reduce_mod_ideal, Budget, MTerm, ModOrder, ModVec,
};
use crate::homology::{ChainComplex, FiniteLengthModule, PolyMatrix};
use crate::polyring::{Monomial, MonomialOrder, Polynomial, RingPresentation, Term};
use sha2::{Digest, Sha256};
use std::sync::Arc;

/// Embedded copies of every file under `data/`, keyed by path relative to
/// that directory.
pub const ASSETS: [(&str, &str); 17] = [
    ("psi/a1.mat", include_str!("../../../data/psi/a1.mat")),
    ("psi/a2.mat", include_str!("../../../data/psi/a2.mat")),
    ("psi/a3.mat", include_str!("../../../data/psi/a3.mat")),
    ("psi/b1.mat", include_str!("../../../data/psi/b1.mat")),
    ("psi/b2.mat", include_str!("../../../data/psi/b2.mat")),
    ("psi/b3.mat", include_str!("../../../data/psi/b3.mat")),
    ("psi/c6.mat", include_str!("../../../data/psi/c6.mat")),
    ("psi/d3.mat", include_str!("../../../data/psi/d3.mat")),
    ("psi/d4.mat", include_str!("../../../data/psi/d4.mat")),
    ("psi/d5.mat", include_str!("../../../data/psi/d5.mat")),
    ("psi/d6.mat", include_str!("../../../data/psi/d6.mat")),
    ("phi/phi1.pmat", include_str!("../../../data/phi/phi1.pmat")),
    ("phi/phi2.pmat", include_str!("../../../data/phi/phi2.pmat")),
    ("phi/phi3.pmat", include_str!("../../../data/phi/phi3.pmat")),
    ("phi/phi4.pmat", include_str!("../../../data/phi/phi4.pmat")),
    ("rings/A.ring", include_str!("../../../data/rings/A.ring")),
    ("rings/R.ring", include_str!("../../../data/rings/R.ring")),
];

/// Embedded checksum manifest (`sha256  relative-path` per line).
pub const CHECKSUMS: &str = include_str!("../../../data/CHECKSUMS");

/// Block sizes of the psi module: the 55 basis vectors split into four
/// groups and every variable action maps later groups to earlier ones.
pub const PSI_BLOCK_DIMS: [usize; 4] = [4, 15, 12, 24];

/// Variable permutation swapping `u` and `x` (an automorphism of the
/// hypersurface ring).
pub const SIGMA: [usize; 6] = [3, 1, 2, 0, 4, 5];

fn hex(bytes: &[u8]) -> String {
    let mut s = String::with_capacity(bytes.len() * 2);
    for b in bytes {
        s.push_str(&format!("{b:02x}"));
    }
    s
}

fn sha256_hex(text: &str) -> String {
    let mut h = Sha256::new();
    h.update(text.as_bytes());
    hex(&h.finalize())
}

/// Text of one embedded asset.
pub fn asset_text(name: &str) -> Result<&'static str> {
    ASSETS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, t)| *t)
        .ok_or_else(|| Error::AssetIntegrity(format!("unknown asset {name}")))
}

/// Check every embedded asset against the checksum manifest, and that the
/// manifest lists exactly the embedded assets.
pub fn verify_asset_integrity() -> Result<()> {
    let mut listed = 0usize;
    for line in CHECKSUMS.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let (digest, name) = line.split_once("  ").ok_or_else(|| {
            Error::AssetIntegrity(format!("malformed checksum line: {line}"))
        })?;
        let text = asset_text(name)?;
        let actual = sha256_hex(text);
        if actual != digest {
            return Err(Error::AssetIntegrity(format!(
                "checksum mismatch for {name}: manifest {digest}, computed {actual}"
            )));
        }
        listed += 1;
    }
    if listed != ASSETS.len() {
        return Err(Error::AssetIntegrity(format!(
            "manifest lists {listed} assets, {} embedded",
            ASSETS.len()
        )));
    }
    Ok(())
}

/// Digest identifying the whole asset set (hash of the checksum manifest).
pub fn assets_digest() -> String {
    sha256_hex(CHECKSUMS)
}

// ---------------------------------------------------------------------------
// Ring files
// ---------------------------------------------------------------------------

struct RingFile {
    p: u64,
    vars: Vec<(String, u32)>,
    rels: Vec<String>,
}

fn parse_ring_file(text: &str) -> Result<RingFile> {
    let mut p = None;
    let mut vars: Vec<(String, u32)> = Vec::new();
    let mut rels = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        if let Some(rest) = line.strip_prefix("p ") {
            p = Some(rest.trim().parse::<u64>().map_err(|e| {
                Error::Parse(format!("bad characteristic {rest:?}: {e}"))
            })?);
        } else if let Some(rest) = line.strip_prefix("vars ") {
            for tok in rest.split_whitespace() {
                let (name, w) = tok.split_once(':').ok_or_else(|| {
                    Error::Parse(format!("bad variable token {tok:?}, expected name:weight"))
                })?;
                let w: u32 = w
                    .parse()
                    .map_err(|e| Error::Parse(format!("bad weight in {tok:?}: {e}")))?;
                vars.push((name.to_string(), w));
            }
        } else if let Some(rest) = line.strip_prefix("rel ") {
            rels.push(rest.trim().to_string());
        } else {
            return Err(Error::Parse(format!("unrecognised ring file line: {line}")));
        }
    }
    let p = p.ok_or_else(|| Error::Parse("ring file missing characteristic".into()))?;
    if vars.is_empty() {
        return Err(Error::Parse("ring file declares no variables".into()));
    }
    Ok(RingFile { p, vars, rels })
}

fn assemble_ring(rf: &RingFile, p: u64) -> Result<Arc<RingPresentation>> {
    let field = FieldSpec::new(p)?;
    let free = RingPresentation::new(field, rf.vars.clone(), vec![], false)?;
    let mut rels = Vec::with_capacity(rf.rels.len());
    for r in &rf.rels {
        rels.push(free.parse(r)?);
    }
    RingPresentation::new(field, rf.vars.clone(), rels, true)
}

/// `K[u,v,w,x,y,z]/(ux+vy+wz)` over GF(p) with unit weights.
pub fn hypersurface_ring(p: u64) -> Result<Arc<RingPresentation>> {
    let rf = parse_ring_file(asset_text("rings/A.ring")?)?;
    assemble_ring(&rf, p)
}

/// The eleven-variable quotient ring; only defined in characteristic 2.
pub fn extension_ring() -> Result<Arc<RingPresentation>> {
    let rf = parse_ring_file(asset_text("rings/R.ring")?)?;
    if rf.p != 2 {
        return Err(Error::BadCharacteristic(rf.p));
    }
    assemble_ring(&rf, 2)
}

/// The same eleven variables and weights as the extension ring, but as a
/// free polynomial ring under a two-block elimination order that sorts the
/// adjoined block `a..e` above the base block `u..z`. Used to extract the
/// base-ring module presentation of the extension ring.
pub fn elimination_ring() -> Result<Arc<RingPresentation>> {
    let rf = parse_ring_file(asset_text("rings/R.ring")?)?;
    let field = FieldSpec::new(2)?;
    let weights: Vec<u32> = rf.vars.iter().map(|(_, w)| *w).collect();
    let order = MonomialOrder::eliminating(weights, 6);
    RingPresentation::with_order(field, rf.vars.clone(), order, vec![], false)
}

/// The defining relations of the extension ring, parsed into the
/// elimination ring (same variables, free).
pub fn extension_relations_in(ring: &Arc<RingPresentation>) -> Result<Vec<Polynomial>> {
    let rf = parse_ring_file(asset_text("rings/R.ring")?)?;
    rf.rels.iter().map(|r| ring.parse(r)).collect()
}

// ---------------------------------------------------------------------------
// The psi module
// ---------------------------------------------------------------------------

/// A 0/1 block asset lifted to GF(p).
pub fn psi_block(name: &str, p: u64) -> Result<ScalarMatrix> {
    let text = asset_text(&format!("psi/{name}.mat"))?;
    let m = ScalarMatrix::from_exchange(text)?;
    m.lift_to(FieldSpec::new(p)?)
}

fn place(dst: &mut ScalarMatrix, src: &ScalarMatrix, r0: usize, c0: usize) -> Result<()> {
    if r0 + src.rows() > dst.rows() || c0 + src.cols() > dst.cols() {
        return Err(Error::ShapeMismatch(format!(
            "block {}x{} does not fit at ({r0},{c0}) in {}x{}",
            src.rows(),
            src.cols(),
            dst.rows(),
            dst.cols()
        )));
    }
    for i in 0..src.rows() {
        for j in 0..src.cols() {
            let v = src.get(i, j);
            if v != 0 {
                dst.set(r0 + i, c0 + j, v);
            }
        }
    }
    Ok(())
}

/// The six 55x55 variable action matrices of the psi module over GF(p), in
/// variable order `u, v, w, x, y, z`.
///
/// Row/column offsets follow [`PSI_BLOCK_DIMS`]: group offsets 0, 4, 19, 31.
/// Per variable the nonzero blocks are
///
/// * `u`: `a1` (group 1 <- group 3), `b1` (group 3 <- group 4);
/// * `v`: `a2`, `b2` likewise;
/// * `w`: `a3`, `b3`, and `d3` (group 2 <- group 4);
/// * `x`: `d4`;
/// * `y`: `d5`;
/// * `z`: `c6` (group 1 <- group 4) and `d6` (group 2 <- group 4).
pub fn psi_actions(p: u64) -> Result<Vec<ScalarMatrix>> {
    let field = FieldSpec::new(p)?;
    let off = [0usize, 4, 19, 31];
    let dim: usize = PSI_BLOCK_DIMS.iter().sum();
    // (variable index, asset, row group, col group), groups 0-based.
    let placements: [(usize, &str, usize, usize); 11] = [
        (0, "a1", 0, 2),
        (0, "b1", 2, 3),
        (1, "a2", 0, 2),
        (1, "b2", 2, 3),
        (2, "a3", 0, 2),
        (2, "b3", 2, 3),
        (2, "d3", 1, 3),
        (3, "d4", 1, 3),
        (4, "d5", 1, 3),
        (5, "c6", 0, 3),
        (5, "d6", 1, 3),
    ];
    let mut actions: Vec<ScalarMatrix> =
        (0..6).map(|_| ScalarMatrix::zero(field, dim, dim)).collect();
    for (var, name, rg, cg) in placements {
        let b = psi_block(name, p)?;
        let expect = (PSI_BLOCK_DIMS[rg], PSI_BLOCK_DIMS[cg]);
        if (b.rows(), b.cols()) != expect {
            return Err(Error::ShapeMismatch(format!(
                "asset {name} is {}x{}, expected {}x{}",
                b.rows(),
                b.cols(),
                expect.0,
                expect.1
            )));
        }
        place(&mut actions[var], &b, off[rg], off[cg])?;
    }
    Ok(actions)
}

/// The 55-dimensional module over the hypersurface ring, with all action
/// invariants (commutation, relation vanishing, nilpotency) verified.
pub fn psi_module(p: u64) -> Result<FiniteLengthModule> {
    let ring = hypersurface_ring(p)?;
    let m = FiniteLengthModule::new(&ring, PSI_BLOCK_DIMS.iter().sum(), psi_actions(p)?)?;
    m.check_invariants()?;
    Ok(m)
}

/// The psi module with the actions of `u` and `x` exchanged, i.e. the
/// restriction of scalars along the hypersurface automorphism `SIGMA`.
pub fn psi_module_twisted(p: u64) -> Result<FiniteLengthModule> {
    Ok(psi_module(p)?.swap_actions(0, 3))
}

// ---------------------------------------------------------------------------
// The phi complexes
// ---------------------------------------------------------------------------

/// One of the four polynomial matrices `phi1..phi4` over GF(p).
pub fn phi(i: usize, p: u64) -> Result<PolyMatrix> {
    if !(1..=4).contains(&i) {
        return Err(Error::Precondition(format!("phi index {i} out of range 1..=4")));
    }
    let ring = hypersurface_ring(p)?;
    PolyMatrix::parse_exchange(&ring, asset_text(&format!("phi/phi{i}.pmat"))?)
}

/// The free resolution of the cyclic quotient by `(u, v, w)`: differentials
/// `phi1, phi2, phi3, phi4, phi3, phi4, ...`, two-periodic from step 3 on,
/// truncated to `len` differentials.
pub fn phi_complex(len: usize, p: u64) -> Result<ChainComplex> {
    let ring = hypersurface_ring(p)?;
    let mut diffs = Vec::with_capacity(len);
    for k in 1..=len {
        let m = match k {
            1 => phi(1, p)?,
            2 => phi(2, p)?,
            _ if k % 2 == 1 => phi(3, p)?,
            _ => phi(4, p)?,
        };
        diffs.push(m);
    }
    ChainComplex::from_differentials(&ring, diffs)
}

/// The phi complex with `u` and `x` exchanged: a free resolution of the
/// cyclic quotient by `(x, v, w)`.
pub fn phi_complex_twisted(len: usize, p: u64) -> Result<ChainComplex> {
    let ring = hypersurface_ring(p)?;
    let budget = Budget::default();
    phi_complex(len, p)?.map_vars(&ring, &SIGMA, &budget)
}

// ---------------------------------------------------------------------------
// Block-matrix rank decompositions
// ---------------------------------------------------------------------------

/// The 72x72 reduced core of `phi3` substituted into the psi module: the
/// claim under test is `rank(substitute(phi3)) = 40 + rank(core)`.
///
/// Block rows, with the first two d-blocks zero: `[0 0 d3]`, `[0 d6 -d5]`,
/// `[-d6 0 d4]`, `[d5 -d4 0]`, `[b1 b2 b3]`.
pub fn alpha_core(p: u64) -> Result<ScalarMatrix> {
    let field = FieldSpec::new(p)?;
    let b1 = psi_block("b1", p)?;
    let b2 = psi_block("b2", p)?;
    let b3 = psi_block("b3", p)?;
    let d3 = psi_block("d3", p)?;
    let d4 = psi_block("d4", p)?;
    let d5 = psi_block("d5", p)?;
    let d6 = psi_block("d6", p)?;
    let n4 = d4.neg();
    let n5 = d5.neg();
    let n6 = d6.neg();
    let zd = ScalarMatrix::zero(field, 15, 24);
    let rows: Vec<Vec<Option<&ScalarMatrix>>> = vec![
        vec![Some(&zd), Some(&zd), Some(&d3)],
        vec![Some(&zd), Some(&d6), Some(&n5)],
        vec![Some(&n6), Some(&zd), Some(&d4)],
        vec![Some(&d5), Some(&n4), Some(&zd)],
        vec![Some(&b1), Some(&b2), Some(&b3)],
    ];
    ScalarMatrix::from_blocks(&rows, field)
}

/// The 100x96 reduced core of `phi4` substituted into the psi module: the
/// claim under test is `rank(substitute(phi4)) = 12 + rank(core)`.
///
/// Block rows, with the first two d-blocks and the first five c-blocks
/// zero: `[0 0 0 c6]`, `[0 d4 d5 d6]`, `[d4 0 -d3 0]`, `[d5 d3 0 0]`,
/// `[d6 0 0 0]`, `[0 0 -b3 b2]`, `[0 b3 0 -b1]`, `[0 -b2 b1 0]`.
pub fn beta_core(p: u64) -> Result<ScalarMatrix> {
    let field = FieldSpec::new(p)?;
    let b1 = psi_block("b1", p)?;
    let b2 = psi_block("b2", p)?;
    let b3 = psi_block("b3", p)?;
    let c6 = psi_block("c6", p)?;
    let d3 = psi_block("d3", p)?;
    let d4 = psi_block("d4", p)?;
    let d5 = psi_block("d5", p)?;
    let d6 = psi_block("d6", p)?;
    let nb1 = b1.neg();
    let nb2 = b2.neg();
    let nb3 = b3.neg();
    let nd3 = d3.neg();
    let zc = ScalarMatrix::zero(field, 4, 24);
    let zd = ScalarMatrix::zero(field, 15, 24);
    let zb = ScalarMatrix::zero(field, 12, 24);
    let rows: Vec<Vec<Option<&ScalarMatrix>>> = vec![
        vec![Some(&zc), Some(&zc), Some(&zc), Some(&c6)],
        vec![Some(&zd), Some(&d4), Some(&d5), Some(&d6)],
        vec![Some(&d4), Some(&zd), Some(&nd3), Some(&zd)],
        vec![Some(&d5), Some(&d3), Some(&zd), Some(&zd)],
        vec![Some(&d6), Some(&zd), Some(&zd), Some(&zd)],
        vec![Some(&zb), Some(&zb), Some(&nb3), Some(&b2)],
        vec![Some(&zb), Some(&b3), Some(&zb), Some(&nb1)],
        vec![Some(&zb), Some(&nb2), Some(&b1), Some(&zb)],
    ];
    ScalarMatrix::from_blocks(&rows, field)
}

// ---------------------------------------------------------------------------
// Ideals
// ---------------------------------------------------------------------------

/// Generators of the height-two prime `(u, v, w)` in the hypersurface ring.
pub fn ideal_uvw(ring: &Arc<RingPresentation>) -> Result<Vec<Polynomial>> {
    ["u", "v", "w"].iter().map(|s| ring.parse(s)).collect()
}

/// Generators of the twisted prime `(x, v, w)`.
pub fn ideal_xvw(ring: &Arc<RingPresentation>) -> Result<Vec<Polynomial>> {
    ["x", "v", "w"].iter().map(|s| ring.parse(s)).collect()
}

/// The five-element system of parameters `(u, x, v, y, w - z)` in the
/// extension ring, in regular-sequence order.
pub fn parameter_sequence(ring: &Arc<RingPresentation>) -> Result<Vec<Polynomial>> {
    ["u", "x", "v", "y", "w-z"].iter().map(|s| ring.parse(s)).collect()
}

// ---------------------------------------------------------------------------
// The extension ring as a module over the hypersurface ring
// ---------------------------------------------------------------------------

/// Split an elimination-ring polynomial of adjoined-block degree at most
/// one into six hypersurface-ring coefficients, for the generators
/// `1, a, b, c, d, e`. Returns `None` when some term has two or more
/// adjoined variables.
fn split_slots(
    poly: &Polynomial,
    base: &Arc<RingPresentation>,
) -> Option<Vec<Polynomial>> {
    let base_weights: Vec<u32> = base.order().weights().to_vec();
    let mut slots: Vec<Vec<Term>> = vec![Vec::new(); 6];
    for t in poly.terms() {
        let exps = t.mono.exps();
        let block_deg: u32 = exps[6..].iter().map(|&e| e as u32).sum();
        if block_deg > 1 {
            return None;
        }
        let slot = if block_deg == 0 {
            0
        } else {
            let pos = exps[6..].iter().position(|&e| e == 1).unwrap();
            1 + pos
        };
        let mono = Monomial::from_exps(&exps[..6], &base_weights);
        slots[slot].push(Term {
            coeff: t.coeff,
            mono,
        });
    }
    Some(
        slots
            .into_iter()
            .map(|ts| Polynomial::from_terms(ts, base))
            .collect(),
    )
}

/// Presentation of the extension ring as a module over the hypersurface
/// ring: a `6 x r` matrix whose cokernel is the extension ring on the
/// generators `1, a, b, c, d, e`.
///
/// Computed by a Groebner basis of the defining relations under the
/// two-block elimination order; basis elements all of whose terms involve
/// at most one adjoined variable are exactly the module relations. Two
/// integrity checks run every time: basis elements lying entirely in the
/// base block must reduce to zero modulo the quadric, and every extracted
/// relation must reduce to zero in the extension ring itself.
pub fn extension_module_presentation(budget: &Budget) -> Result<PolyMatrix> {
    let elim = elimination_ring()?;
    let rels = extension_relations_in(&elim)?;
    let gens: Vec<ModVec> = rels.iter().map(|p| ModVec::embed(p, 0)).collect();
    let gb = module_groebner(&elim, 1, &gens, budget)?;

    let base = hypersurface_ring(2)?;
    let ord = ModOrder::for_ring(&base, 6);
    let field = base.field();
    let mut cols: Vec<ModVec> = Vec::new();
    for g in gb.elements() {
        let poly = g.component(0);
        let Some(slots) = split_slots(&poly, &base) else {
            continue;
        };
        if slots[1..].iter().all(|s| s.is_zero()) {
            // Entirely in the base block: must be a multiple of the quadric.
            let nf = reduce_mod_ideal(&base, &slots[0], budget)?;
            if !nf.is_zero() {
                return Err(Error::Precondition(format!(
                    "elimination produced a base-block element not in the quadric ideal: {}",
                    slots[0].render(&base)
                )));
            }
            continue;
        }
        let mut terms = Vec::new();
        for (k, s) in slots.iter().enumerate() {
            for t in s.terms() {
                terms.push(MTerm {
                    comp: k as u32,
                    coeff: t.coeff,
                    mono: t.mono.clone(),
                });
            }
        }
        cols.push(ModVec::from_terms(terms, &ord, field));
    }

    // Re-embed each relation into the extension ring and confirm it is zero.
    let rr = extension_ring()?;
    let embed: Vec<usize> = (0..6).collect();
    for col in &cols {
        let mut acc = Polynomial::zero();
        for k in 0..6u32 {
            let coeff = col.component(k).map_vars(&embed, &rr)?;
            let gen = if k == 0 {
                Polynomial::constant(1, &rr)
            } else {
                Polynomial::variable(5 + k as usize, &rr)
            };
            acc = acc.add(&coeff.mul(&gen, &rr), &rr);
        }
        let nf = reduce_mod_ideal(&rr, &acc, budget)?;
        if !nf.is_zero() {
            return Err(Error::Precondition(
                "extracted module relation does not vanish in the extension ring".into(),
            ));
        }
    }

    let m = PolyMatrix::from_columns(&base, 6, &cols)?;
    if m.entries().iter().any(|e| e.has_unit_constant()) {
        return Err(Error::Precondition(
            "module presentation of the extension ring has a unit entry".into(),
        ));
    }
    Ok(m)
}

/// The quotient map from the extension ring onto the prime `(u, v, w)`,
/// written on the module generators: `1, d, e` map to zero and `a, b, c`
/// to `u, v, w`. A `1 x 6` matrix over the hypersurface ring.
pub fn extension_quotient_map(p: u64) -> Result<PolyMatrix> {
    let ring = hypersurface_ring(p)?;
    let entries = vec![
        Polynomial::zero(),
        ring.parse("u")?,
        ring.parse("v")?,
        ring.parse("w")?,
        Polynomial::zero(),
        Polynomial::zero(),
    ];
    PolyMatrix::new(&ring, 1, 6, entries)
}

/// Indices (into the six module generators) of the claimed free kernel of
/// the quotient map: the classes of `1`, `d` and `e`.
pub const KERNEL_GENERATOR_SLOTS: [usize; 3] = [0, 4, 5];

// ---------------------------------------------------------------------------
// Derived scalar helpers
// ---------------------------------------------------------------------------

/// Alternating sum of homology dimensions of the phi complex (or a twist of
/// it) substituted into a finite-length module.
///
/// Requires the tail to vanish: homology in degrees 3 and 4 must be zero,
/// which by two-periodicity kills all higher degrees; returns an error
/// otherwise since the alternating sum would not stabilise. The complex
/// must carry at least 6 differentials.
pub fn euler_characteristic_against(
    cx: &ChainComplex,
    module: &FiniteLengthModule,
) -> Result<(i64, Vec<usize>)> {
    if cx.top_degree() < 6 {
        return Err(Error::Precondition(
            "need at least 6 differentials for a stable Euler characteristic".into(),
        ));
    }
    let sc = cx.substitute(module)?;
    let dims = sc.homology_dims();
    let usable = &dims[..cx.top_degree() - 1];
    if usable.len() < 5 || usable[3] != 0 || usable[4] != 0 {
        return Err(Error::Precondition(format!(
            "homology tail does not vanish: dims {usable:?}"
        )));
    }
    let chi = usable
        .iter()
        .enumerate()
        .map(|(i, &d)| if i % 2 == 0 { d as i64 } else { -(d as i64) })
        .sum();
    Ok((chi, usable.to_vec()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{quotient_length, socle, std_monomials};

    #[test]
    fn assets_match_their_checksums() {
        verify_asset_integrity().unwrap();
        assert_eq!(assets_digest().len(), 64);
    }

    #[test]
    fn psi_blocks_have_documented_support_counts() {
        let counts: [(&str, usize); 11] = [
            ("a1", 4),
            ("a2", 4),
            ("a3", 4),
            ("b1", 12),
            ("b2", 12),
            ("b3", 12),
            ("c6", 4),
            ("d3", 15),
            ("d4", 14),
            ("d5", 9),
            ("d6", 15),
        ];
        let mut total = 0;
        for (name, expect) in counts {
            let m = psi_block(name, 2).unwrap();
            let ones: usize = m.row_weights().iter().sum();
            assert_eq!(ones, expect, "support of {name}");
            total += ones;
        }
        assert_eq!(total, 105);
    }

    #[test]
    fn psi_module_is_well_defined_in_small_characteristics() {
        for p in [2, 3, 5] {
            let m = psi_module(p).unwrap();
            assert_eq!(m.dim(), 55);
            assert!(m.invariant_violations().unwrap().is_empty());
        }
    }

    #[test]
    fn psi_module_has_24_minimal_generators_and_cube_zero_radical() {
        let m = psi_module(2).unwrap();
        assert_eq!(m.minimal_generator_vectors().unwrap().len(), 24);
        assert_eq!(m.annihilator_degree().unwrap(), 3);
    }

    #[test]
    fn substituted_ranks_match_the_block_decompositions() {
        let m = psi_module(2).unwrap();
        let a = phi(3, 2).unwrap().substitute(&m).unwrap();
        let b = phi(4, 2).unwrap().substitute(&m).unwrap();
        assert_eq!(a.rows(), 220);
        assert_eq!(a.cols(), 220);
        let ra = a.rank();
        let rb = b.rank();
        assert_eq!(ra, 112);
        assert_eq!(rb, 108);
        assert_eq!(ra + rb, 220);
        assert_eq!(alpha_core(2).unwrap().rank() + 40, ra);
        assert_eq!(beta_core(2).unwrap().rank() + 12, rb);
    }

    #[test]
    fn phi_complex_squares_to_zero_and_twist_is_valid() {
        let budget = Budget::default();
        for p in [2, 5] {
            let cx = phi_complex(8, p).unwrap();
            assert!(cx.composition_violations(&budget).unwrap().is_empty());
            let tw = phi_complex_twisted(8, p).unwrap();
            assert!(tw.composition_violations(&budget).unwrap().is_empty());
        }
    }

    #[test]
    fn extension_ring_quotient_by_parameters_has_length_8_and_simple_socle() {
        let ring = extension_ring().unwrap();
        let budget = Budget::default();
        let gens: Vec<ModVec> = parameter_sequence(&ring)
            .unwrap()
            .iter()
            .map(|p| ModVec::embed(p, 0))
            .collect();
        let gb = module_groebner(&ring, 1, &gens, &budget).unwrap();
        assert_eq!(quotient_length(&gb).unwrap(), 8);
        let basis = std_monomials(&gb).unwrap();
        let rendered: Vec<String> = basis
            .iter()
            .map(|(_, m)| Polynomial::monomial(m.clone(), 1).render(&ring))
            .collect();
        assert!(rendered.contains(&"z*e".to_string()), "basis: {rendered:?}");
        let soc = socle(&gb).unwrap();
        assert_eq!(soc.dimension(), 1);
        // The unique socle vector is the class of z*e.
        let ze = basis
            .iter()
            .position(|(_, m)| Polynomial::monomial(m.clone(), 1).render(&ring) == "z*e")
            .unwrap();
        let v = &soc.vectors[0];
        for (i, &c) in v.iter().enumerate() {
            assert_eq!(c != 0, i == ze, "socle vector support at {i}");
        }
    }

    #[test]
    fn extension_module_presentation_passes_its_integrity_checks() {
        let budget = Budget::default();
        let m = extension_module_presentation(&budget).unwrap();
        assert_eq!(m.rows(), 6);
        // The module relations are the four linear defining relations; the
        // multiplicative ones only fix ring structure. None of them touch
        // the generators 1 and e.
        assert_eq!(m.cols(), 4);
        for j in 0..4 {
            assert!(m.get(0, j).is_zero());
            assert!(m.get(5, j).is_zero());
        }
        // Quotient by the parameter ideal must reproduce length 8 over the
        // base ring: independent route to the extension-ring computation.
        let base = hypersurface_ring(2).unwrap();
        let ord = ModOrder::for_ring(&base, 6);
        let mut gens = m.columns_as_vectors();
        for f in ["u", "x", "v", "y", "w-z"] {
            let p = base.parse(f).unwrap();
            for c in 0..6u32 {
                gens.push(ModVec::from_terms(
                    p.terms()
                        .iter()
                        .map(|t| MTerm {
                            comp: c,
                            coeff: t.coeff,
                            mono: t.mono.clone(),
                        })
                        .collect(),
                    &ord,
                    base.field(),
                ));
            }
        }
        let gb = module_groebner(&base, 6, &gens, &budget).unwrap();
        assert_eq!(quotient_length(&gb).unwrap(), 8);
    }

    #[test]
    fn quotient_map_is_well_defined_on_the_presentation() {
        let budget = Budget::default();
        let pres = extension_module_presentation(&budget).unwrap();
        let qm = extension_quotient_map(2).unwrap();
        let comp = qm.mul(&pres).unwrap();
        assert!(comp.is_zero_mod_ideal(&budget).unwrap());
    }

    #[test]
    fn euler_characteristic_of_the_psi_module_is_minus_two() {
        let m = psi_module(2).unwrap();
        let cx = phi_complex(8, 2).unwrap();
        let (chi, dims) = euler_characteristic_against(&cx, &m).unwrap();
        assert_eq!(chi, -2);
        assert_eq!(dims[3], 0);
        assert_eq!(dims[4], 0);
        // Twisted module and twisted complex agree with each other.
        let tw_mod = psi_module_twisted(2).unwrap();
        let (chi_tm, _) = euler_characteristic_against(&cx, &tw_mod).unwrap();
        assert_eq!(chi_tm, 2);
        let tw_cx = phi_complex_twisted(8, 2).unwrap();
        let (chi_tc, _) = euler_characteristic_against(&tw_cx, &m).unwrap();
        assert_eq!(chi_tc, 2);
    }
}
