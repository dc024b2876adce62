//! Exact dense linear algebra over prime fields GF(p), p < 2^16.
//!
//! The characteristic-2 path stores rows as packed 64-bit words and
//! eliminates with XOR; every other prime uses dense residue arithmetic
//! with table lookups for inverses. Both paths are exact: there is no
//! floating point anywhere in this crate.

use crate::error::{Error, Result};
use std::fmt::Write as _;

/// A validated prime field description.
///
/// Construction checks primality and the `p < 2^16` bound; everything
/// downstream can then assume residues fit in `u16` and products in `u32`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    p: u16,
}

impl FieldSpec {
    pub fn new(p: u64) -> Result<FieldSpec> {
        if p < 2 || p >= (1 << 16) || !is_prime(p) {
            return Err(Error::BadCharacteristic(p));
        }
        Ok(FieldSpec { p: p as u16 })
    }

    #[inline]
    pub fn p(&self) -> u16 {
        self.p
    }

    #[inline]
    pub fn add(&self, a: u16, b: u16) -> u16 {
        let s = a as u32 + b as u32;
        let p = self.p as u32;
        (if s >= p { s - p } else { s }) as u16
    }

    #[inline]
    pub fn sub(&self, a: u16, b: u16) -> u16 {
        let p = self.p as u32;
        ((a as u32 + p - b as u32) % p) as u16
    }

    #[inline]
    pub fn neg(&self, a: u16) -> u16 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u16, b: u16) -> u16 {
        ((a as u32 * b as u32) % self.p as u32) as u16
    }

    /// Multiplicative inverse; panics on zero (callers pivot on nonzero entries).
    pub fn inv(&self, a: u16) -> u16 {
        assert!(a != 0, "inverse of zero");
        // Fermat: a^(p-2). p < 2^16 so this is at most 31 squarings.
        let mut base = a as u64;
        let mut e = self.p as u64 - 2;
        let p = self.p as u64;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % p;
            }
            base = base * base % p;
            e >>= 1;
        }
        acc as u16
    }

    /// Reduce a signed integer into `[0, p)`.
    #[inline]
    pub fn from_i64(&self, v: i64) -> u16 {
        let p = self.p as i64;
        (((v % p) + p) % p) as u16
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Storage {
    /// GF(2): each row is `words_per_row` packed u64 words, bit c of word
    /// `c / 64` holds entry `(r, c)`.
    Bits { wpr: usize, words: Vec<u64> },
    /// Any other prime: row-major residues.
    Dense(Vec<u16>),
}

/// A dense matrix over GF(p).
#[derive(Debug, Clone)]
pub struct ScalarMatrix {
    rows: usize,
    cols: usize,
    field: FieldSpec,
    data: Storage,
}

impl ScalarMatrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> ScalarMatrix {
        let data = if field.p() == 2 {
            let wpr = cols.div_ceil(64);
            Storage::Bits {
                wpr,
                words: vec![0u64; rows * wpr],
            }
        } else {
            Storage::Dense(vec![0u16; rows * cols])
        };
        ScalarMatrix {
            rows,
            cols,
            field,
            data,
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> ScalarMatrix {
        let mut m = ScalarMatrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    /// Build from explicit rows; every entry must already lie in `[0, p)`.
    pub fn from_rows(field: FieldSpec, rows: &[Vec<u16>]) -> Result<ScalarMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        let mut m = ScalarMatrix::zero(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            if row.len() != c {
                return Err(Error::ShapeMismatch(format!(
                    "row {i} has {} entries, expected {c}",
                    row.len()
                )));
            }
            for (j, &v) in row.iter().enumerate() {
                if v >= field.p() {
                    return Err(Error::ShapeMismatch(format!(
                        "entry ({i},{j}) = {v} out of range for p = {}",
                        field.p()
                    )));
                }
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn from_fn(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u16,
    ) -> ScalarMatrix {
        let mut m = ScalarMatrix::zero(field, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                let v = f(i, j);
                debug_assert!(v < field.p());
                if v != 0 {
                    m.set(i, j, v);
                }
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> u16 {
        debug_assert!(r < self.rows && c < self.cols);
        match &self.data {
            Storage::Bits { wpr, words } => ((words[r * wpr + c / 64] >> (c % 64)) & 1) as u16,
            Storage::Dense(e) => e[r * self.cols + c],
        }
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: u16) {
        debug_assert!(r < self.rows && c < self.cols && v < self.field.p());
        match &mut self.data {
            Storage::Bits { wpr, words } => {
                let w = &mut words[r * *wpr + c / 64];
                let bit = 1u64 << (c % 64);
                if v == 1 {
                    *w |= bit;
                } else {
                    *w &= !bit;
                }
            }
            Storage::Dense(e) => e[r * self.cols + c] = v,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.data {
            Storage::Bits { words, .. } => words.iter().all(|&w| w == 0),
            Storage::Dense(e) => e.iter().all(|&v| v == 0),
        }
    }

    pub fn transpose(&self) -> ScalarMatrix {
        let mut t = ScalarMatrix::zero(self.field, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v != 0 {
                    t.set(j, i, v);
                }
            }
        }
        t
    }

    pub fn add(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        match (&mut out.data, &other.data) {
            (Storage::Bits { words, .. }, Storage::Bits { words: ow, .. }) => {
                for (a, b) in words.iter_mut().zip(ow) {
                    *a ^= b;
                }
            }
            (Storage::Dense(a), Storage::Dense(b)) => {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = self.field.add(*x, *y);
                }
            }
            _ => unreachable!("storage follows the field"),
        }
        Ok(out)
    }

    pub fn sub(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> ScalarMatrix {
        let mut out = self.clone();
        if let Storage::Dense(e) = &mut out.data {
            for v in e.iter_mut() {
                *v = self.field.neg(*v);
            }
        }
        out
    }

    pub fn scale(&self, c: u16) -> ScalarMatrix {
        let mut out = self.clone();
        match &mut out.data {
            Storage::Bits { words, .. } => {
                if c == 0 {
                    words.fill(0);
                }
            }
            Storage::Dense(e) => {
                for v in e.iter_mut() {
                    *v = self.field.mul(*v, c);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &ScalarMatrix) -> Result<ScalarMatrix> {
        if self.field != other.field {
            return Err(Error::RingMismatch("matrix product over different fields".into()));
        }
        if self.cols != other.rows {
            return Err(Error::ShapeMismatch(format!(
                "product of {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = ScalarMatrix::zero(self.field, self.rows, other.cols);
        match (&self.data, &other.data, &mut out.data) {
            (
                Storage::Bits { wpr, words },
                Storage::Bits { wpr: bw, words: bwords },
                Storage::Bits { words: ow, .. },
            ) => {
                // Row-oriented GF(2) product: OR of B-rows selected by A-bits.
                for i in 0..self.rows {
                    let arow = &words[i * wpr..(i + 1) * wpr];
                    let orow = &mut ow[i * bw..(i + 1) * bw];
                    for (wi, &w) in arow.iter().enumerate() {
                        let mut w = w;
                        while w != 0 {
                            let k = wi * 64 + w.trailing_zeros() as usize;
                            w &= w - 1;
                            let brow = &bwords[k * bw..(k + 1) * bw];
                            for (o, b) in orow.iter_mut().zip(brow) {
                                *o ^= b;
                            }
                        }
                    }
                }
            }
            _ => {
                for i in 0..self.rows {
                    for k in 0..self.cols {
                        let a = self.get(i, k);
                        if a == 0 {
                            continue;
                        }
                        for j in 0..other.cols {
                            let b = other.get(k, j);
                            if b != 0 {
                                let cur = out.get(i, j);
                                out.set(i, j, self.field.add(cur, self.field.mul(a, b)));
                            }
                        }
                    }
                }
            }
        }
        Ok(out)
    }

    /// Horizontal concatenation `[a | b | ...]`.
    pub fn hstack(parts: &[&ScalarMatrix]) -> Result<ScalarMatrix> {
        let rows = parts.first().map_or(0, |m| m.rows);
        let field = parts.first().map(|m| m.field).unwrap_or(FieldSpec { p: 2 });
        let cols: usize = parts.iter().map(|m| m.cols).sum();
        let mut out = ScalarMatrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            if m.rows != rows {
                return Err(Error::ShapeMismatch("hstack row mismatch".into()));
            }
            for i in 0..m.rows {
                for j in 0..m.cols {
                    let v = m.get(i, j);
                    if v != 0 {
                        out.set(i, off + j, v);
                    }
                }
            }
            off += m.cols;
        }
        Ok(out)
    }

    /// Vertical concatenation.
    pub fn vstack(parts: &[&ScalarMatrix]) -> Result<ScalarMatrix> {
        let cols = parts.first().map_or(0, |m| m.cols);
        let field = parts.first().map(|m| m.field).unwrap_or(FieldSpec { p: 2 });
        let rows: usize = parts.iter().map(|m| m.rows).sum();
        let mut out = ScalarMatrix::zero(field, rows, cols);
        let mut off = 0;
        for m in parts {
            if m.cols != cols {
                return Err(Error::ShapeMismatch("vstack column mismatch".into()));
            }
            for i in 0..m.rows {
                for j in 0..m.cols {
                    let v = m.get(i, j);
                    if v != 0 {
                        out.set(off + i, j, v);
                    }
                }
            }
            off += m.rows;
        }
        Ok(out)
    }

    /// Assemble a block matrix; `blocks[i][j]` may be `None` for a zero block
    /// whose shape is inferred from its row and column partners.
    pub fn from_blocks(blocks: &[Vec<Option<&ScalarMatrix>>], field: FieldSpec) -> Result<ScalarMatrix> {
        let brows = blocks.len();
        let bcols = blocks.first().map_or(0, |r| r.len());
        let mut row_heights = vec![None; brows];
        let mut col_widths = vec![None; bcols];
        for (i, row) in blocks.iter().enumerate() {
            if row.len() != bcols {
                return Err(Error::ShapeMismatch("ragged block grid".into()));
            }
            for (j, b) in row.iter().enumerate() {
                if let Some(m) = b {
                    if let Some(h) = row_heights[i] {
                        if h != m.rows {
                            return Err(Error::ShapeMismatch(format!("block row {i} height")));
                        }
                    }
                    row_heights[i] = Some(m.rows);
                    if let Some(w) = col_widths[j] {
                        if w != m.cols {
                            return Err(Error::ShapeMismatch(format!("block col {j} width")));
                        }
                    }
                    col_widths[j] = Some(m.cols);
                }
            }
        }
        let heights: Vec<usize> = row_heights
            .iter()
            .map(|h| h.ok_or_else(|| Error::ShapeMismatch("block row of all-None".into())))
            .collect::<Result<_>>()?;
        let widths: Vec<usize> = col_widths
            .iter()
            .map(|w| w.ok_or_else(|| Error::ShapeMismatch("block col of all-None".into())))
            .collect::<Result<_>>()?;
        let mut out = ScalarMatrix::zero(field, heights.iter().sum(), widths.iter().sum());
        let mut roff = 0;
        for (i, row) in blocks.iter().enumerate() {
            let mut coff = 0;
            for (j, b) in row.iter().enumerate() {
                if let Some(m) = b {
                    for r in 0..m.rows {
                        for c in 0..m.cols {
                            let v = m.get(r, c);
                            if v != 0 {
                                out.set(roff + r, coff + c, v);
                            }
                        }
                    }
                }
                coff += widths[j];
            }
            roff += heights[i];
        }
        Ok(out)
    }

    fn check_same_shape(&self, other: &ScalarMatrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::RingMismatch("matrices over different fields".into()));
        }
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::ShapeMismatch(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Rank by Gaussian elimination on a working copy.
    pub fn rank(&self) -> usize {
        match &self.data {
            Storage::Bits { wpr, words } => {
                let mut w = words.clone();
                bit_echelon(&mut w, self.rows, self.cols, *wpr, false).len()
            }
            Storage::Dense(e) => {
                let mut e = e.clone();
                dense_echelon(&mut e, self.rows, self.cols, self.field, false).len()
            }
        }
    }

    /// Reduced row echelon form together with the pivot column indices.
    pub fn rref(&self) -> (ScalarMatrix, Vec<usize>) {
        let mut out = self.clone();
        let pivots = match &mut out.data {
            Storage::Bits { wpr, words } => bit_echelon(words, self.rows, self.cols, *wpr, true),
            Storage::Dense(e) => dense_echelon(e, self.rows, self.cols, self.field, true),
        };
        (out, pivots)
    }

    /// A basis of the right kernel `{x : M x = 0}`, one `Vec<u16>` of length
    /// `cols` per basis vector. Deterministic: free columns in increasing order.
    pub fn kernel_basis(&self) -> Vec<Vec<u16>> {
        let (r, pivots) = self.rref();
        let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut v = vec![0u16; self.cols];
            v[free] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                let coeff = r.get(i, free);
                if coeff != 0 {
                    v[pc] = self.field.neg(coeff);
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Matrix-exchange text form: `rows cols p` then one line per row of
    /// space-separated residues.
    pub fn to_exchange(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.rows, self.cols, self.field.p());
        for i in 0..self.rows {
            let mut line = String::new();
            for j in 0..self.cols {
                if j > 0 {
                    line.push(' ');
                }
                let _ = write!(line, "{}", self.get(i, j));
            }
            s.push_str(&line);
            s.push('\n');
        }
        s
    }

    pub fn from_exchange(text: &str) -> Result<ScalarMatrix> {
        let mut lines = text.lines().filter(|l| !l.trim().is_empty() && !l.trim_start().starts_with('#'));
        let header = lines
            .next()
            .ok_or_else(|| Error::Parse("empty matrix-exchange payload".into()))?;
        let dims: Vec<u64> = header
            .split_whitespace()
            .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("header: {e}"))))
            .collect::<Result<_>>()?;
        if dims.len() != 3 {
            return Err(Error::Parse("header must be `rows cols p`".into()));
        }
        let (rows, cols) = (dims[0] as usize, dims[1] as usize);
        let field = FieldSpec::new(dims[2])?;
        let mut m = ScalarMatrix::zero(field, rows, cols);
        for i in 0..rows {
            let line = lines
                .next()
                .ok_or_else(|| Error::Parse(format!("missing row {i}")))?;
            let vals: Vec<u64> = line
                .split_whitespace()
                .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("row {i}: {e}"))))
                .collect::<Result<_>>()?;
            if vals.len() != cols {
                return Err(Error::Parse(format!(
                    "row {i} has {} entries, expected {cols}",
                    vals.len()
                )));
            }
            for (j, &v) in vals.iter().enumerate() {
                if v >= field.p() as u64 {
                    return Err(Error::Parse(format!("entry ({i},{j}) = {v} not reduced mod {}", field.p())));
                }
                m.set(i, j, v as u16);
            }
        }
        if lines.next().is_some() {
            return Err(Error::Parse("trailing content after last row".into()));
        }
        Ok(m)
    }

    /// Count of nonzero entries per row (transcription audits).
    pub fn row_weights(&self) -> Vec<usize> {
        (0..self.rows)
            .map(|i| (0..self.cols).filter(|&j| self.get(i, j) != 0).count())
            .collect()
    }

    /// Count of nonzero entries per column.
    pub fn col_weights(&self) -> Vec<usize> {
        let mut w = vec![0usize; self.cols];
        for i in 0..self.rows {
            for (j, wj) in w.iter_mut().enumerate() {
                if self.get(i, j) != 0 {
                    *wj += 1;
                }
            }
        }
        w
    }

    /// Re-target a 0/1 matrix to another prime field (used for data assets,
    /// which are stored characteristic-uniformly).
    pub fn lift_to(&self, field: FieldSpec) -> Result<ScalarMatrix> {
        let mut out = ScalarMatrix::zero(field, self.rows, self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let v = self.get(i, j);
                if v >= field.p() {
                    return Err(Error::ShapeMismatch(format!(
                        "entry ({i},{j}) = {v} does not survive re-targeting to p = {}",
                        field.p()
                    )));
                }
                if v != 0 {
                    out.set(i, j, v);
                }
            }
        }
        Ok(out)
    }
}

impl PartialEq for ScalarMatrix {
    fn eq(&self, other: &Self) -> bool {
        if self.rows != other.rows || self.cols != other.cols || self.field != other.field {
            return false;
        }
        (0..self.rows).all(|i| (0..self.cols).all(|j| self.get(i, j) == other.get(i, j)))
    }
}

impl Eq for ScalarMatrix {}

/// GF(2) row echelon; returns pivot columns. `full` additionally clears above
/// pivots (RREF) and sorts pivot rows to the top.
fn bit_echelon(words: &mut [u64], rows: usize, cols: usize, wpr: usize, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0; // next pivot row
    for c in 0..cols {
        let (wi, bit) = (c / 64, 1u64 << (c % 64));
        let mut sel = None;
        for r in pr..rows {
            if words[r * wpr + wi] & bit != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        if sel != pr {
            for k in 0..wpr {
                words.swap(pr * wpr + k, sel * wpr + k);
            }
        }
        let range = if full { 0..rows } else { pr + 1..rows };
        for r in range {
            if r != pr && words[r * wpr + wi] & bit != 0 {
                // Split at the row boundary to appease the borrow checker.
                let (pslice, rslice) = if r > pr {
                    let (a, b) = words.split_at_mut(r * wpr);
                    (&a[pr * wpr..pr * wpr + wpr], &mut b[..wpr])
                } else {
                    let (a, b) = words.split_at_mut(pr * wpr);
                    (&b[..wpr], &mut a[r * wpr..r * wpr + wpr])
                };
                for k in 0..wpr {
                    rslice[k] ^= pslice[k];
                }
            }
        }
        pivots.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    pivots
}

/// Dense GF(p) row echelon; returns pivot columns.
fn dense_echelon(e: &mut [u16], rows: usize, cols: usize, f: FieldSpec, full: bool) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut pr = 0;
    for c in 0..cols {
        let mut sel = None;
        for r in pr..rows {
            if e[r * cols + c] != 0 {
                sel = Some(r);
                break;
            }
        }
        let Some(sel) = sel else { continue };
        if sel != pr {
            for k in 0..cols {
                e.swap(pr * cols + k, sel * cols + k);
            }
        }
        let inv = f.inv(e[pr * cols + c]);
        if inv != 1 {
            for k in 0..cols {
                e[pr * cols + k] = f.mul(e[pr * cols + k], inv);
            }
        }
        let range = if full { 0..rows } else { pr + 1..rows };
        for r in range {
            if r == pr {
                continue;
            }
            let factor = e[r * cols + c];
            if factor != 0 {
                for k in 0..cols {
                    let sub = f.mul(factor, e[pr * cols + k]);
                    e[r * cols + k] = f.sub(e[r * cols + k], sub);
                }
            }
        }
        pivots.push(c);
        pr += 1;
        if pr == rows {
            break;
        }
    }
    pivots
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::new(2).unwrap()
    }

    fn f5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    #[test]
    fn field_validation() {
        assert!(FieldSpec::new(0).is_err());
        assert!(FieldSpec::new(1).is_err());
        assert!(FieldSpec::new(4).is_err());
        assert!(FieldSpec::new(65536).is_err());
        assert!(FieldSpec::new(65521).is_ok()); // largest prime below 2^16
        assert_eq!(f5().inv(3), 2);
        assert_eq!(f5().from_i64(-1), 4);
    }

    #[test]
    fn rank_and_rref_gf2() {
        let m = ScalarMatrix::from_rows(
            f2(),
            &[vec![1, 0, 1], vec![1, 1, 0], vec![0, 1, 1]],
        )
        .unwrap();
        assert_eq!(m.rank(), 2);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        // Third row must be zero after reduction.
        assert_eq!(r.get(2, 0), 0);
        assert_eq!(r.get(2, 1), 0);
        assert_eq!(r.get(2, 2), 0);
    }

    #[test]
    fn rank_gf5_matches_hand_computation() {
        let m = ScalarMatrix::from_rows(
            f5(),
            &[vec![1, 2, 3], vec![0, 1, 4], vec![2, 0, 1]],
        )
        .unwrap();
        // det = 1*(1-0) - 2*(0-8) + 3*(0-2) = 11 = 1 mod 5.
        assert_eq!(m.rank(), 3);
        let singular = ScalarMatrix::from_rows(f5(), &[vec![1, 2], vec![2, 4]]).unwrap();
        assert_eq!(singular.rank(), 1);
        // Rows 2 and 3 here are scalar multiples of row 1 mod 5.
        let collapsed = ScalarMatrix::from_rows(
            f5(),
            &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4]],
        )
        .unwrap();
        assert_eq!(collapsed.rank(), 1);
    }

    #[test]
    fn kernel_vectors_annihilate() {
        for field in [f2(), f5()] {
            let m = ScalarMatrix::from_rows(
                field,
                &[vec![1, 1, 0, 1], vec![0, 1, 1, 1]],
            )
            .unwrap();
            let basis = m.kernel_basis();
            assert_eq!(basis.len(), 4 - m.rank());
            for v in &basis {
                for i in 0..m.rows() {
                    let mut acc = 0u16;
                    for j in 0..m.cols() {
                        acc = field.add(acc, field.mul(m.get(i, j), v[j]));
                    }
                    assert_eq!(acc, 0);
                }
            }
        }
    }

    #[test]
    fn kernel_of_empty_shapes() {
        let m = ScalarMatrix::zero(f2(), 0, 3);
        assert_eq!(m.rank(), 0);
        assert_eq!(m.kernel_basis().len(), 3);
        let n = ScalarMatrix::zero(f2(), 3, 0);
        assert_eq!(n.kernel_basis().len(), 0);
    }

    #[test]
    fn product_and_blocks() {
        let a = ScalarMatrix::from_rows(f2(), &[vec![1, 1], vec![0, 1]]).unwrap();
        let b = ScalarMatrix::from_rows(f2(), &[vec![1, 0], vec![1, 1]]).unwrap();
        let ab = a.mul(&b).unwrap();
        assert_eq!(ab, ScalarMatrix::from_rows(f2(), &[vec![0, 1], vec![1, 1]]).unwrap());

        let id = ScalarMatrix::identity(f2(), 2);
        let block = ScalarMatrix::from_blocks(
            &[vec![Some(&id), None], vec![None, Some(&a)]],
            f2(),
        )
        .unwrap();
        assert_eq!(block.rows(), 4);
        assert_eq!(block.get(2, 2), 1);
        assert_eq!(block.get(2, 3), 1);
        assert_eq!(block.get(0, 2), 0);
    }

    #[test]
    fn exchange_roundtrip() {
        let m = ScalarMatrix::from_rows(f5(), &[vec![0, 4, 1], vec![2, 0, 3]]).unwrap();
        let text = m.to_exchange();
        assert!(text.starts_with("2 3 5\n"));
        let back = ScalarMatrix::from_exchange(&text).unwrap();
        assert_eq!(m, back);
        assert!(ScalarMatrix::from_exchange("2 3\n").is_err());
        assert!(ScalarMatrix::from_exchange("1 1 5\n7\n").is_err());
    }

    #[test]
    fn weights_audit_helpers() {
        let m = ScalarMatrix::from_rows(f2(), &[vec![1, 0, 1], vec![0, 0, 1]]).unwrap();
        assert_eq!(m.row_weights(), vec![2, 1]);
        assert_eq!(m.col_weights(), vec![1, 0, 2]);
    }

    #[test]
    fn wide_gf2_rank_crosses_word_boundaries() {
        // 3 rows, 130 columns: forces multi-word rows.
        let mut m = ScalarMatrix::zero(f2(), 3, 130);
        m.set(0, 0, 1);
        m.set(0, 129, 1);
        m.set(1, 64, 1);
        m.set(2, 0, 1);
        m.set(2, 64, 1);
        m.set(2, 129, 1);
        assert_eq!(m.rank(), 2);
        let basis = m.kernel_basis();
        assert_eq!(basis.len(), 128);
    }
}
