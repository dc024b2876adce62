//! Matrices with polynomial entries over a presented ring.
//!
//! A `PolyMatrix` with `r` rows and `c` columns represents a module map
//! `Ring^c -> Ring^r` (columns are images of the source basis vectors).

use crate::error::{Error, Result};
use crate::exactlin::ScalarMatrix;
use crate::groebner::{reduce_mod_ideal, Budget, MTerm, ModOrder, ModVec};
use crate::homology::flmodule::FiniteLengthModule;
use crate::polyring::{Polynomial, RingPresentation};
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct PolyMatrix {
    ring: Arc<RingPresentation>,
    rows: usize,
    cols: usize,
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(
        ring: &Arc<RingPresentation>,
        rows: usize,
        cols: usize,
        entries: Vec<Polynomial>,
    ) -> Result<PolyMatrix> {
        if entries.len() != rows * cols {
            return Err(Error::ShapeMismatch(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                entries.len()
            )));
        }
        for e in &entries {
            for t in e.terms() {
                if t.mono.exps().len() != ring.nvars() {
                    return Err(Error::RingMismatch(
                        "matrix entry has wrong variable arity".into(),
                    ));
                }
            }
        }
        Ok(PolyMatrix {
            ring: Arc::clone(ring),
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ring: &Arc<RingPresentation>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            ring: Arc::clone(ring),
            rows,
            cols,
            entries: vec![Polynomial::zero(); rows * cols],
        }
    }

    pub fn identity(ring: &Arc<RingPresentation>, n: usize) -> PolyMatrix {
        let mut m = Self::zero(ring, n, n);
        for i in 0..n {
            m.set(i, i, Polynomial::constant(1, ring));
        }
        m
    }

    /// Parse the exchange layout: a `rows cols` header line, then one
    /// grammar-format entry per line in row-major order.
    pub fn parse_exchange(ring: &Arc<RingPresentation>, text: &str) -> Result<PolyMatrix> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty polynomial-matrix payload".into()))?;
        let dims: Vec<usize> = header
            .split_whitespace()
            .map(|t| t.parse::<usize>().map_err(|e| Error::Parse(format!("header: {e}"))))
            .collect::<Result<_>>()?;
        if dims.len() != 2 {
            return Err(Error::Parse("header must be `rows cols`".into()));
        }
        let (rows, cols) = (dims[0], dims[1]);
        let mut entries = Vec::with_capacity(rows * cols);
        for _ in 0..rows * cols {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse("missing matrix entries".into()))?;
            entries.push(ring.parse(line)?);
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing data after matrix entries".into()));
        }
        PolyMatrix::new(ring, rows, cols, entries)
    }

    pub fn to_exchange(&self) -> String {
        let mut out = format!("{} {}\n", self.rows, self.cols);
        for e in &self.entries {
            out.push_str(&e.render(&self.ring));
            out.push('\n');
        }
        out
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn ring(&self) -> &Arc<RingPresentation> {
        &self.ring
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn entries(&self) -> &[Polynomial] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Polynomial::is_zero)
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut out = Self::zero(&self.ring, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn mul(&self, other: &PolyMatrix) -> Result<PolyMatrix> {
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} * {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zero(&self.ring, self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Polynomial::zero();
                for k in 0..self.cols {
                    let prod = self.get(i, k).mul(other.get(k, j), &self.ring);
                    acc = acc.add(&prod, &self.ring);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    /// Entry-wise normal form against the ring's defining ideal.
    pub fn reduce(&self, budget: &Budget) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(reduce_mod_ideal(&self.ring, e, budget)?);
        }
        PolyMatrix::new(&self.ring, self.rows, self.cols, entries)
    }

    pub fn is_zero_mod_ideal(&self, budget: &Budget) -> Result<bool> {
        Ok(self.reduce(budget)?.is_zero())
    }

    /// Entry-wise `p^n`-th power (the Frobenius action on a free-module map).
    pub fn frobenius(&self, steps: u32) -> Result<PolyMatrix> {
        let q = (self.ring.field().p() as u64)
            .checked_pow(steps)
            .filter(|&q| q <= u32::MAX as u64)
            .ok_or(Error::Resource {
                what: "frobenius exponent",
                reached: u64::MAX,
                limit: u32::MAX as u64,
            })? as u32;
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.frobenius_power(q, &self.ring)?);
        }
        PolyMatrix::new(&self.ring, self.rows, self.cols, entries)
    }

    /// Push every entry through a variable re-indexing into `target`.
    /// `var_map[i]` is the target index of source variable `i`.
    pub fn map_vars(
        &self,
        target: &Arc<RingPresentation>,
        var_map: &[usize],
    ) -> Result<PolyMatrix> {
        let mut entries = Vec::with_capacity(self.entries.len());
        for e in &self.entries {
            entries.push(e.map_vars(var_map, target)?);
        }
        PolyMatrix::new(target, self.rows, self.cols, entries)
    }

    /// Replace each variable by its action matrix, turning a free-module map
    /// into a scalar map of block matrices: block `(i, j)` of the result is
    /// `entry(i, j)` evaluated on the module's actions.
    pub fn substitute(&self, module: &FiniteLengthModule) -> Result<ScalarMatrix> {
        if !Arc::ptr_eq(module.ring(), &self.ring) && module.ring().as_ref() != self.ring.as_ref()
        {
            return Err(Error::RingMismatch(
                "module actions belong to a different ring than the matrix".into(),
            ));
        }
        let d = module.dim();
        let field = module.field();
        let mut out = ScalarMatrix::zero(field, self.rows * d, self.cols * d);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let block = module.evaluate(self.get(i, j))?;
                for bi in 0..d {
                    for bj in 0..d {
                        let v = block.get(bi, bj);
                        if v != 0 {
                            out.set(i * d + bi, j * d + bj, v);
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Columns as vectors in `Ring^rows` (the generators of the image).
    pub fn columns_as_vectors(&self) -> Vec<ModVec> {
        let ord = ModOrder::for_ring(&self.ring, self.rows as u32);
        let field = self.ring.field();
        (0..self.cols)
            .map(|j| {
                let mut terms = Vec::new();
                for i in 0..self.rows {
                    for t in self.get(i, j).terms() {
                        terms.push(MTerm {
                            comp: i as u32,
                            coeff: t.coeff,
                            mono: t.mono.clone(),
                        });
                    }
                }
                ModVec::from_terms(terms, &ord, field)
            })
            .collect()
    }

    /// Assemble a matrix whose columns are the given vectors in `Ring^rows`.
    pub fn from_columns(
        ring: &Arc<RingPresentation>,
        rows: usize,
        cols: &[ModVec],
    ) -> Result<PolyMatrix> {
        let mut m = Self::zero(ring, rows, cols.len());
        for (j, v) in cols.iter().enumerate() {
            if let Some(mc) = v.max_comp() {
                if mc as usize >= rows {
                    return Err(Error::ShapeMismatch(format!(
                        "column {j} uses component {mc}, but the matrix has {rows} rows"
                    )));
                }
            }
            for i in 0..rows {
                let p = v.component(i as u32);
                if !p.is_zero() {
                    m.set(i, j, p);
                }
            }
        }
        Ok(m)
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

    fn pm(ring: &Arc<RingPresentation>, rows: usize, cols: usize, entries: &[&str]) -> PolyMatrix {
        let es: Vec<Polynomial> = entries.iter().map(|s| ring.parse(s).unwrap()).collect();
        PolyMatrix::new(ring, rows, cols, es).unwrap()
    }

    #[test]
    fn product_of_resolution_steps_vanishes_mod_ideal() {
        let ring = ring_a(2);
        let phi1 = pm(&ring, 1, 3, &["u", "v", "w"]);
        let phi2 = pm(
            &ring,
            3,
            4,
            &["x", "0", "-w", "v", "y", "w", "0", "-u", "z", "-v", "u", "0"],
        );
        let prod = phi1.mul(&phi2).unwrap();
        assert!(!prod.is_zero(), "product is the hypersurface, not zero on the nose");
        assert!(prod.is_zero_mod_ideal(&Budget::default()).unwrap());
    }

    #[test]
    fn exchange_roundtrip() {
        let ring = ring_a(5);
        let m = pm(&ring, 2, 2, &["u^2+3*v", "0", "-w", "4"]);
        let text = m.to_exchange();
        let back = PolyMatrix::parse_exchange(&ring, &text).unwrap();
        for i in 0..2 {
            for j in 0..2 {
                assert_eq!(m.get(i, j), back.get(i, j));
            }
        }
    }

    #[test]
    fn frobenius_squares_entries_in_char_two() {
        let ring = ring_a(2);
        let m = pm(&ring, 1, 1, &["u+v*y"]);
        let f = m.frobenius(1).unwrap();
        assert_eq!(f.get(0, 0), &ring.parse("u^2+v^2*y^2").unwrap());
        // Composition law: two single steps equal one double step.
        let ff = f.frobenius(1).unwrap();
        assert_eq!(ff.get(0, 0), &m.frobenius(2).unwrap().get(0, 0).clone());
    }

    #[test]
    fn column_vector_roundtrip() {
        let ring = ring_a(2);
        let m = pm(&ring, 2, 3, &["u", "0", "v+w", "x", "y*z", "0"]);
        let cols = m.columns_as_vectors();
        let back = PolyMatrix::from_columns(&ring, 2, &cols).unwrap();
        for i in 0..2 {
            for j in 0..3 {
                assert_eq!(m.get(i, j), back.get(i, j));
            }
        }
    }
}
