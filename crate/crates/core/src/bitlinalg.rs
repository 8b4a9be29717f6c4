//! Dense linear algebra over F_2 in dimension ≤ 8.
//!
//! Rows are bit-packed; elimination is word XOR. The affine solver also
//! handles the flattened matrix-plus-scalars systems used by the orthogonal
//! group search, so [`BinVector`] allows up to 32 coordinates while
//! [`BinMatrix`] stays at 8.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt::Write as _;

/// A vector over F_2, bit i holding coordinate i.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinVector {
    n: u8,
    bits: u32,
}

impl BinVector {
    pub fn new(n: u8, bits: u32) -> BinVector {
        assert!(n <= 32 && (n == 32 || bits < (1u32 << n)), "bits exceed dimension");
        BinVector { n, bits }
    }

    pub fn zero(n: u8) -> BinVector {
        BinVector { n, bits: 0 }
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn get(&self, i: u8) -> bool {
        (self.bits >> i) & 1 != 0
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }
}

/// A square matrix over F_2, dimension ≤ 8, bit-packed rows.
///
/// Bit c of `rows[r]` is the entry in row r, column c. The product with a
/// column vector v (a bit mask) has bit r equal to the parity of
/// `rows[r] & v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinMatrix {
    n: u8,
    rows: [u8; 8],
}

impl BinMatrix {
    pub fn from_rows(n: u8, row_masks: &[u8]) -> BinMatrix {
        assert!(n as usize <= 8 && row_masks.len() == n as usize);
        let mut rows = [0u8; 8];
        let mask = row_mask(n);
        for (r, &m) in row_masks.iter().enumerate() {
            assert!(m & !mask == 0, "row bits exceed dimension");
            rows[r] = m;
        }
        BinMatrix { n, rows }
    }

    pub fn identity(n: u8) -> BinMatrix {
        let mut rows = [0u8; 8];
        for r in 0..n {
            rows[r as usize] = 1 << r;
        }
        BinMatrix { n, rows }
    }

    pub fn zero(n: u8) -> BinMatrix {
        BinMatrix { n, rows: [0; 8] }
    }

    pub fn dim(&self) -> u8 {
        self.n
    }

    pub fn row(&self, r: u8) -> u8 {
        self.rows[r as usize]
    }

    pub fn set(&mut self, r: u8, c: u8, v: bool) {
        if v {
            self.rows[r as usize] |= 1 << c;
        } else {
            self.rows[r as usize] &= !(1 << c);
        }
    }

    pub fn get(&self, r: u8, c: u8) -> bool {
        (self.rows[r as usize] >> c) & 1 != 0
    }

    /// Matrix-vector product; v and the result are bit masks.
    #[inline]
    pub fn apply(&self, v: u8) -> u8 {
        let mut out = 0u8;
        for r in 0..self.n {
            out |= parity(self.rows[r as usize] & v) << r;
        }
        out
    }

    /// Matrix product self * rhs.
    #[inline]
    pub fn mul(&self, rhs: &BinMatrix) -> BinMatrix {
        debug_assert_eq!(self.n, rhs.n);
        let mut rows = [0u8; 8];
        for r in 0..self.n as usize {
            let mut acc = 0u8;
            let mut sel = self.rows[r];
            while sel != 0 {
                let k = sel.trailing_zeros() as usize;
                acc ^= rhs.rows[k];
                sel &= sel - 1;
            }
            rows[r] = acc;
        }
        BinMatrix { n: self.n, rows }
    }

    pub fn transpose(&self) -> BinMatrix {
        let mut out = BinMatrix::zero(self.n);
        for r in 0..self.n {
            for c in 0..self.n {
                if self.get(r, c) {
                    out.set(c, r, true);
                }
            }
        }
        out
    }

    /// Column c as a bit mask.
    pub fn column(&self, c: u8) -> u8 {
        let mut out = 0u8;
        for r in 0..self.n {
            out |= ((self.rows[r as usize] >> c) & 1) << r;
        }
        out
    }

    /// Row-reduction rank over F_2.
    pub fn rank(&self) -> u8 {
        let mut rows = self.rows;
        let mut rank = 0u8;
        for c in 0..self.n {
            let pivot = (rank..self.n).find(|&r| (rows[r as usize] >> c) & 1 != 0);
            if let Some(p) = pivot {
                rows.swap(rank as usize, p as usize);
                for r in 0..self.n {
                    if r != rank && (rows[r as usize] >> c) & 1 != 0 {
                        rows[r as usize] ^= rows[rank as usize];
                    }
                }
                rank += 1;
            }
        }
        rank
    }

    /// Basis of the right null space, in reduced echelon order.
    pub fn kernel(&self) -> Vec<BinVector> {
        let n = self.n;
        let mut rows: Vec<u8> = self.rows[..n as usize].to_vec();
        let mut pivots: Vec<(u8, usize)> = Vec::new(); // (column, row index)
        let mut rank = 0usize;
        for c in 0..n {
            if let Some(p) = (rank..n as usize).find(|&r| (rows[r] >> c) & 1 != 0) {
                rows.swap(rank, p);
                for r in 0..n as usize {
                    if r != rank && (rows[r] >> c) & 1 != 0 {
                        rows[r] ^= rows[rank];
                    }
                }
                pivots.push((c, rank));
                rank += 1;
            }
        }
        let pivot_cols: u8 = pivots.iter().fold(0, |m, &(c, _)| m | (1 << c));
        let mut basis = Vec::new();
        for c in 0..n {
            if pivot_cols >> c & 1 != 0 {
                continue;
            }
            let mut v: u32 = 1 << c;
            for &(pc, r) in &pivots {
                if (rows[r] >> c) & 1 != 0 {
                    v |= 1 << pc;
                }
            }
            basis.push(BinVector::new(n, v));
        }
        basis
    }

    /// Inverse when the matrix has full rank, `None` otherwise.
    pub fn invert(&self) -> Option<BinMatrix> {
        let n = self.n;
        let mut a = self.rows;
        let mut inv = BinMatrix::identity(n).rows;
        let mut rank = 0u8;
        for c in 0..n {
            let pivot = (rank..n).find(|&r| (a[r as usize] >> c) & 1 != 0)?;
            a.swap(rank as usize, pivot as usize);
            inv.swap(rank as usize, pivot as usize);
            for r in 0..n {
                if r != rank && (a[r as usize] >> c) & 1 != 0 {
                    a[r as usize] ^= a[rank as usize];
                    inv[r as usize] ^= inv[rank as usize];
                }
            }
            rank += 1;
        }
        Some(BinMatrix { n, rows: inv })
    }

    pub fn is_invertible(&self) -> bool {
        self.rank() == self.n
    }

    /// n hex-encoded row masks, row 0 first.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for r in 0..self.n {
            let _ = write!(s, "{:02x}", self.rows[r as usize]);
        }
        s
    }
}

#[inline]
fn parity(x: u8) -> u8 {
    (x.count_ones() & 1) as u8
}

fn row_mask(n: u8) -> u8 {
    if n == 8 {
        0xff
    } else {
        (1u8 << n) - 1
    }
}

/// All solutions of an affine system over F_2: `particular` plus the span of
/// `basis`. Enumeration yields exactly 2^basis.len() members.
#[derive(Debug, Clone)]
pub struct AffineSolutionSpace {
    particular: BinVector,
    basis: Vec<BinVector>,
}

impl AffineSolutionSpace {
    pub fn particular(&self) -> BinVector {
        self.particular
    }

    pub fn basis(&self) -> &[BinVector] {
        &self.basis
    }

    pub fn dimension(&self) -> u32 {
        self.basis.len() as u32
    }

    pub fn len(&self) -> u64 {
        1u64 << self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Member for a subset index; bit j of `idx` selects basis[j].
    pub fn member(&self, idx: u64) -> BinVector {
        let mut bits = self.particular.bits;
        let mut sel = idx;
        while sel != 0 {
            let j = sel.trailing_zeros() as usize;
            bits ^= self.basis[j].bits;
            sel &= sel - 1;
        }
        BinVector { n: self.particular.n, bits }
    }

    /// Gray-code walk over all members: one XOR per step.
    pub fn iter(&self) -> AffineIter<'_> {
        AffineIter { space: self, idx: 0, current: self.particular.bits }
    }
}

pub struct AffineIter<'a> {
    space: &'a AffineSolutionSpace,
    idx: u64,
    current: u32,
}

impl<'a> Iterator for AffineIter<'a> {
    type Item = u32;

    #[inline]
    fn next(&mut self) -> Option<u32> {
        if self.idx == self.space.len() {
            return None;
        }
        let out = self.current;
        self.idx += 1;
        if self.idx < self.space.len() {
            // Gray-code: flip the basis vector indexed by the lowest set bit.
            let j = self.idx.trailing_zeros() as usize;
            self.current ^= self.space.basis[j].bits;
        }
        Some(out)
    }
}

/// Parametrize all solutions over `m` unknowns of the system
/// `constraint · x = rhs`, or `None` when inconsistent. All constraint
/// vectors must have length `m`.
pub fn solve_affine(m: u8, system: &[(BinVector, bool)]) -> Option<AffineSolutionSpace> {
    assert!(system.iter().all(|(v, _)| v.n == m), "mixed constraint lengths");
    // Augmented rows: constraint bits plus the rhs in bit position m.
    let mut rows: Vec<u64> = system
        .iter()
        .map(|(v, b)| v.bits as u64 | ((*b as u64) << m))
        .collect();
    let mut pivots: Vec<(u8, usize)> = Vec::new();
    let mut rank = 0usize;
    for c in 0..m {
        if let Some(p) = (rank..rows.len()).find(|&r| (rows[r] >> c) & 1 != 0) {
            rows.swap(rank, p);
            for r in 0..rows.len() {
                if r != rank && (rows[r] >> c) & 1 != 0 {
                    rows[r] ^= rows[rank];
                }
            }
            pivots.push((c, rank));
            rank += 1;
        }
    }
    // A leftover row 0 = 1 marks inconsistency.
    if rows[rank..].iter().any(|&r| r >> m & 1 != 0) {
        return None;
    }
    let pivot_cols: u32 = pivots.iter().fold(0, |acc, &(c, _)| acc | (1u32 << c));
    let mut particular = 0u32;
    for &(c, r) in &pivots {
        if rows[r] >> m & 1 != 0 {
            particular |= 1 << c;
        }
    }
    let mut basis = Vec::new();
    for c in 0..m {
        if pivot_cols >> c & 1 != 0 {
            continue;
        }
        let mut v: u32 = 1 << c;
        for &(pc, r) in &pivots {
            if (rows[r] >> c) & 1 != 0 {
                v |= 1 << pc;
            }
        }
        basis.push(BinVector::new(m, v));
    }
    Some(AffineSolutionSpace { particular: BinVector::new(m, particular), basis })
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    #[test]
    fn rank_examples() {
        assert_eq!(BinMatrix::identity(5).rank(), 5);
        assert_eq!(BinMatrix::zero(5).rank(), 0);
        // Gram matrix of vw + xy + z^2: pairs (v,w) and (x,y) swapped, z row zero.
        let gram = BinMatrix::from_rows(5, &[0b00010, 0b00001, 0b01000, 0b00100, 0b00000]);
        assert_eq!(gram.rank(), 4);
    }

    #[test]
    fn kernel_examples() {
        assert!(BinMatrix::identity(5).kernel().is_empty());
        assert_eq!(BinMatrix::zero(5).kernel().len(), 5);
        // Gram of vw + x^2: only the (v,w) pair couples; rad = span(x,y,z).
        let gram = BinMatrix::from_rows(5, &[0b00010, 0b00001, 0, 0, 0]);
        let ker = gram.kernel();
        assert_eq!(ker.len(), 3);
        let expect = [0b00100u32, 0b01000, 0b10000];
        for (v, e) in ker.iter().zip(expect) {
            assert_eq!(v.bits(), e);
        }
    }

    #[test]
    fn invert_examples() {
        let id = BinMatrix::identity(5);
        assert_eq!(id.invert().unwrap(), id);
        let swap = BinMatrix::from_rows(3, &[0b010, 0b001, 0b100]);
        // A permutation's inverse is its transpose; the (1 2 3) cycle squared.
        assert_eq!(swap.invert().unwrap(), swap.transpose());
        let t = BinMatrix::from_rows(2, &[0b01, 0b10]);
        assert_eq!(t.invert().unwrap(), t);
        let sing = BinMatrix::from_rows(3, &[0b111, 0b111, 0b001]);
        assert_eq!(sing.invert(), None);
    }

    #[test]
    fn rank_plus_nullity_exhaustive_dim3() {
        for code in 0u32..(1 << 9) {
            let rows = [(code & 7) as u8, ((code >> 3) & 7) as u8, ((code >> 6) & 7) as u8];
            let m = BinMatrix::from_rows(3, &rows);
            assert_eq!(m.rank() as usize + m.kernel().len(), 3);
            if let Some(inv) = m.invert() {
                assert_eq!(inv.mul(&m), BinMatrix::identity(3));
                assert_eq!(m.mul(&inv), BinMatrix::identity(3));
            } else {
                assert!(m.rank() < 3);
            }
        }
    }

    #[test]
    fn invert_random_dim5() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut seen_invertible = 0;
        for _ in 0..500 {
            let rows: [u8; 5] = core::array::from_fn(|_| rng.gen_range(0..32) as u8);
            let m = BinMatrix::from_rows(5, &rows);
            assert_eq!(m.rank() as usize + m.kernel().len(), 5);
            if let Some(inv) = m.invert() {
                seen_invertible += 1;
                assert_eq!(inv.mul(&m), BinMatrix::identity(5));
            }
            for v in m.kernel() {
                assert_eq!(m.apply(v.bits() as u8), 0);
            }
        }
        assert!(seen_invertible > 50);
    }

    #[test]
    fn solve_affine_examples() {
        // Empty system over 3 unknowns: the whole space.
        let sol = solve_affine(3, &[]).unwrap();
        assert_eq!(sol.dimension(), 3);
        assert_eq!(sol.len(), 8);

        // x1 = 1 and x1 = 0 is inconsistent.
        let sys = vec![
            (BinVector::new(3, 0b001), true),
            (BinVector::new(3, 0b001), false),
        ];
        assert!(solve_affine(3, &sys).is_none());
    }

    #[test]
    fn solve_affine_members_satisfy_constraints() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(3);
        for _ in 0..200 {
            let m = rng.gen_range(1..=10u8);
            let rows = rng.gen_range(0..=6usize);
            let sys: Vec<(BinVector, bool)> = (0..rows)
                .map(|_| {
                    (BinVector::new(m, rng.gen_range(0..(1u32 << m))), rng.gen_bool(0.5))
                })
                .collect();
            if let Some(sol) = solve_affine(m, &sys) {
                // Spot-check every member on small spaces, a sample otherwise.
                let count = sol.len().min(64);
                for (i, x) in sol.iter().enumerate() {
                    if i as u64 >= count {
                        break;
                    }
                    for (v, b) in &sys {
                        let dot = (x & v.bits()).count_ones() & 1;
                        assert_eq!(dot == 1, *b);
                    }
                }
            } else {
                // Inconsistency is only reported when no brute-force solution exists.
                if m <= 12 {
                    let found = (0u32..(1 << m)).any(|x| {
                        sys.iter().all(|(v, b)| (((x & v.bits()).count_ones() & 1) == 1) == *b)
                    });
                    assert!(!found);
                }
            }
        }
    }

    #[test]
    fn gray_iter_visits_whole_space() {
        let sys = vec![(BinVector::new(4, 0b0011), true)];
        let sol = solve_affine(4, &sys).unwrap();
        let mut seen: Vec<u32> = sol.iter().collect();
        assert_eq!(seen.len() as u64, sol.len());
        seen.sort_unstable();
        seen.dedup();
        assert_eq!(seen.len() as u64, sol.len());
        for i in 0..sol.len() {
            let x = sol.member(i).bits();
            assert_eq!((x & 0b0011).count_ones() & 1, 1);
        }
    }
}
