//! Finite-length modules presented as vector spaces with one commuting
//! nilpotent action matrix per ring variable.

use crate::error::{Error, Result};
use crate::exactlin::{FieldSpec, ScalarMatrix};
use crate::groebner::{multiplication_matrices, std_monomials, GroebnerBasis};
use crate::polyring::{Polynomial, RingPresentation};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct FiniteLengthModule {
    ring: Arc<RingPresentation>,
    dim: usize,
    actions: Vec<ScalarMatrix>,
}

impl FiniteLengthModule {
    pub fn new(
        ring: &Arc<RingPresentation>,
        dim: usize,
        actions: Vec<ScalarMatrix>,
    ) -> Result<FiniteLengthModule> {
        if actions.len() != ring.nvars() {
            return Err(Error::ShapeMismatch(format!(
                "need one action per variable ({}), got {}",
                ring.nvars(),
                actions.len()
            )));
        }
        for (i, a) in actions.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim {
                return Err(Error::ShapeMismatch(format!(
                    "action {i} is {}x{}, expected {dim}x{dim}",
                    a.rows(),
                    a.cols()
                )));
            }
            if a.field() != ring.field() {
                return Err(Error::RingMismatch(
                    "action matrix field differs from the ring's".into(),
                ));
            }
        }
        Ok(FiniteLengthModule {
            ring: Arc::clone(ring),
            dim,
            actions,
        })
    }

    /// The zero module.
    pub fn zero_module(ring: &Arc<RingPresentation>) -> FiniteLengthModule {
        let actions = (0..ring.nvars())
            .map(|_| ScalarMatrix::zero(ring.field(), 0, 0))
            .collect();
        FiniteLengthModule {
            ring: Arc::clone(ring),
            dim: 0,
            actions,
        }
    }

    /// The residue field: one-dimensional, every variable acts by zero.
    pub fn residue_field(ring: &Arc<RingPresentation>) -> FiniteLengthModule {
        let actions = (0..ring.nvars())
            .map(|_| ScalarMatrix::zero(ring.field(), 1, 1))
            .collect();
        FiniteLengthModule {
            ring: Arc::clone(ring),
            dim: 1,
            actions,
        }
    }

    /// Realize a finite-length cyclic-or-module quotient concretely: basis =
    /// standard monomials of `gb`, actions = multiplication matrices.
    pub fn from_quotient(gb: &GroebnerBasis) -> Result<FiniteLengthModule> {
        let basis = std_monomials(gb)?;
        let actions = multiplication_matrices(gb, &basis)?;
        FiniteLengthModule::new(gb.ring(), basis.len(), actions)
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    pub fn field(&self) -> FieldSpec {
        self.ring.field()
    }

    pub fn actions(&self) -> &[ScalarMatrix] {
        &self.actions
    }

    pub fn action(&self, var: usize) -> &ScalarMatrix {
        &self.actions[var]
    }

    /// Swap the actions of two variables. Only legal when the defining ideal
    /// is fixed by that variable transposition (verified by the caller or by
    /// `check_invariants` on the result).
    pub fn swap_actions(&self, i: usize, j: usize) -> FiniteLengthModule {
        let mut actions = self.actions.clone();
        actions.swap(i, j);
        FiniteLengthModule {
            ring: Arc::clone(&self.ring),
            dim: self.dim,
            actions,
        }
    }

    /// Evaluate a polynomial on the action matrices (a ring homomorphism
    /// into the endomorphism algebra, since the actions commute).
    pub fn evaluate(&self, f: &Polynomial) -> Result<ScalarMatrix> {
        let field = self.field();
        let mut acc = ScalarMatrix::zero(field, self.dim, self.dim);
        for t in f.terms() {
            if t.mono.exps().len() != self.ring.nvars() {
                return Err(Error::RingMismatch(
                    "polynomial arity differs from the module's ring".into(),
                ));
            }
            let mut term = ScalarMatrix::identity(field, self.dim).scale(t.coeff);
            for (v, &e) in t.mono.exps().iter().enumerate() {
                for _ in 0..e {
                    term = term.mul(&self.actions[v])?;
                }
            }
            acc = acc.add(&term)?;
        }
        Ok(acc)
    }

    /// Verify the structural contract: all action pairs commute, every
    /// defining-ideal generator evaluates to zero, and each action is
    /// nilpotent. Returns the list of violated conditions.
    pub fn invariant_violations(&self) -> Result<Vec<String>> {
        let mut bad = Vec::new();
        let n = self.actions.len();
        for i in 0..n {
            for j in i + 1..n {
                let ab = self.actions[i].mul(&self.actions[j])?;
                let ba = self.actions[j].mul(&self.actions[i])?;
                if ab.sub(&ba)?.is_zero() == false {
                    bad.push(format!(
                        "actions of {} and {} do not commute",
                        self.ring.vars()[i],
                        self.ring.vars()[j]
                    ));
                }
            }
        }
        for (k, g) in self.ring.ideal().iter().enumerate() {
            if !self.evaluate(g)?.is_zero() {
                bad.push(format!("defining relation {k} does not vanish"));
            }
        }
        for (i, a) in self.actions.iter().enumerate() {
            let mut pow = a.clone();
            let mut nilpotent = a.is_zero();
            for _ in 0..self.dim {
                if nilpotent {
                    break;
                }
                pow = pow.mul(a)?;
                nilpotent = pow.is_zero();
            }
            if !nilpotent && self.dim > 0 {
                bad.push(format!("action of {} is not nilpotent", self.ring.vars()[i]));
            }
        }
        Ok(bad)
    }

    pub fn check_invariants(&self) -> Result<()> {
        let bad = self.invariant_violations()?;
        if bad.is_empty() {
            Ok(())
        } else {
            Err(Error::Precondition(bad.join("; ")))
        }
    }

    /// Column span dimension of `m * M` (the radical layer), used to pick
    /// minimal generators: stack all actions side by side and take the rank.
    pub fn radical_span(&self) -> Result<ScalarMatrix> {
        let refs: Vec<&ScalarMatrix> = self.actions.iter().collect();
        ScalarMatrix::hstack(&refs)
    }

    /// Coordinate vectors forming a basis of `M / mM`: standard basis vectors
    /// chosen greedily to complete the column space of `[actions | I]`.
    pub fn minimal_generator_vectors(&self) -> Result<Vec<Vec<u16>>> {
        if self.dim == 0 {
            return Ok(vec![]);
        }
        let span = self.radical_span()?;
        let id = ScalarMatrix::identity(self.field(), self.dim);
        let both = ScalarMatrix::hstack(&[&span, &id])?;
        let (_, pivots) = both.rref();
        let offset = span.cols();
        let mut out = Vec::new();
        for p in pivots {
            if p >= offset {
                let j = p - offset;
                let mut v = vec![0u16; self.dim];
                v[j] = 1;
                out.push(v);
            }
        }
        Ok(out)
    }

    /// Smallest `D` with `m^D * M = 0`, found by iterating the radical
    /// filtration. Errors only if an action fails to be nilpotent.
    pub fn annihilator_degree(&self) -> Result<u32> {
        if self.dim == 0 {
            return Ok(0);
        }
        // layer = basis matrix of m^k * M, starting at k = 0 with all of M.
        let mut layer = ScalarMatrix::identity(self.field(), self.dim);
        let mut k = 0u32;
        loop {
            if layer.cols() == 0 || layer.is_zero() {
                return Ok(k);
            }
            if k > self.dim as u32 {
                return Err(Error::Precondition(
                    "radical filtration fails to terminate; actions are not all nilpotent".into(),
                ));
            }
            let mut images: Vec<ScalarMatrix> = Vec::with_capacity(self.actions.len());
            for a in &self.actions {
                images.push(a.mul(&layer)?);
            }
            let refs: Vec<&ScalarMatrix> = images.iter().collect();
            let next = ScalarMatrix::hstack(&refs)?;
            // Reduce to an independent column set via the transpose trick:
            // row-reduce next^T and keep nonzero rows as the new layer basis.
            let (rr, _) = next.transpose().rref();
            let mut rows_kept: Vec<Vec<u16>> = Vec::new();
            for i in 0..rr.rows() {
                let row: Vec<u16> = (0..rr.cols()).map(|j| rr.get(i, j)).collect();
                if row.iter().any(|&v| v != 0) {
                    rows_kept.push(row);
                }
            }
            layer = if rows_kept.is_empty() {
                ScalarMatrix::zero(self.field(), self.dim, 0)
            } else {
                ScalarMatrix::from_rows(self.field(), &rows_kept)?.transpose()
            };
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

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

    #[test]
    fn residue_field_passes_invariants() {
        let ring = ring_a(2);
        let k = FiniteLengthModule::residue_field(&ring);
        assert_eq!(k.dim(), 1);
        assert!(k.invariant_violations().unwrap().is_empty());
        assert_eq!(k.annihilator_degree().unwrap(), 1);
        assert_eq!(k.minimal_generator_vectors().unwrap().len(), 1);
    }

    #[test]
    fn evaluate_is_multiplicative_on_a_jordan_block() {
        // One variable acting as a 3x3 Jordan block, the rest zero; the ideal
        // u*x+v*y+w*z vanishes because x acts as zero.
        let ring = ring_a(5);
        let mut j = ScalarMatrix::zero(ring.field(), 3, 3);
        j.set(0, 1, 1);
        j.set(1, 2, 1);
        let mut actions = vec![j.clone()];
        for _ in 1..6 {
            actions.push(ScalarMatrix::zero(ring.field(), 3, 3));
        }
        let m = FiniteLengthModule::new(&ring, 3, actions).unwrap();
        m.check_invariants().unwrap();
        let f = ring.parse("u^2+3*u+1").unwrap();
        let ev = m.evaluate(&f).unwrap();
        let direct = j
            .mul(&j)
            .unwrap()
            .add(&j.scale(3))
            .unwrap()
            .add(&ScalarMatrix::identity(ring.field(), 3))
            .unwrap();
        assert_eq!(ev.to_exchange(), direct.to_exchange());
        assert_eq!(m.annihilator_degree().unwrap(), 3);
        // u, u^2 span mM; one minimal generator.
        assert_eq!(m.minimal_generator_vectors().unwrap().len(), 1);
    }

    #[test]
    fn invariant_checker_flags_noncommuting_actions() {
        let ring = ring_a(2);
        let mut a = ScalarMatrix::zero(ring.field(), 2, 2);
        a.set(0, 1, 1);
        let b = a.transpose();
        let c = ScalarMatrix::identity(ring.field(), 2);
        let mut actions = vec![a, b, c];
        for _ in 3..6 {
            actions.push(ScalarMatrix::zero(ring.field(), 2, 2));
        }
        let m = FiniteLengthModule::new(&ring, 2, actions).unwrap();
        let bad = m.invariant_violations().unwrap();
        assert!(bad.iter().any(|s| s.contains("commute")));
        assert!(bad.iter().any(|s| s.contains("nilpotent")));
    }

    #[test]
    fn swap_actions_is_an_involution() {
        let ring = ring_a(2);
        let mut a = ScalarMatrix::zero(ring.field(), 2, 2);
        a.set(0, 1, 1);
        let mut actions = vec![ScalarMatrix::zero(ring.field(), 2, 2); 6];
        actions[0] = a;
        let m = FiniteLengthModule::new(&ring, 2, actions).unwrap();
        let twisted = m.swap_actions(0, 3);
        assert!(twisted.action(0).is_zero());
        assert!(!twisted.action(3).is_zero());
        let back = twisted.swap_actions(0, 3);
        for v in 0..6 {
            assert_eq!(back.action(v).to_exchange(), m.action(v).to_exchange());
        }
    }
}
