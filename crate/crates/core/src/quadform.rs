//! Quadratic forms over F_2 in at most 5 variables.
//!
//! A form Q(x) = Σ_{i≤j} c_{i,j} x_i x_j is stored as a bit-packed
//! coefficient vector: bit 0 is c_{1,1} and the pairs (i,j) follow in
//! lexicographic order, so a 5-variable form is a 15-bit id. The module
//! computes the bilinear-form anatomy (Gram matrix, radical, singular
//! subspace), projective point counts, the type I–IV classification of
//! geometrically irreducible forms, and a constructive normal form with its
//! witnessing change of basis.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;

use crate::binfield::FieldDesc;
use crate::bitlinalg::{BinMatrix, BinVector};

/// Variable names used when rendering forms, keyed by variable count.
/// Five variables are the P^4 convention v,w,x,y,z; four are the P^3
/// convention x,y,z,w; fewer use x,y,z.
pub fn variable_names(n: u8) -> &'static [char] {
    match n {
        5 => &['v', 'w', 'x', 'y', 'z'],
        4 => &['x', 'y', 'z', 'w'],
        3 => &['x', 'y', 'z'],
        _ => &['x', 'y'],
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuadFormError {
    /// Operation requires a nonzero form.
    ZeroForm,
    /// Variable count outside 2..=5.
    BadVariableCount(u8),
    /// Coefficient bits beyond n(n+1)/2.
    CoeffsOutOfRange,
    /// Point enumeration would exceed the budget.
    EnumerationTooLarge,
}

impl fmt::Display for QuadFormError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QuadFormError::ZeroForm => write!(f, "zero form"),
            QuadFormError::BadVariableCount(n) => write!(f, "variable count {} not in 2..=5", n),
            QuadFormError::CoeffsOutOfRange => write!(f, "coefficient bits exceed n(n+1)/2"),
            QuadFormError::EnumerationTooLarge => write!(f, "point enumeration exceeds budget"),
        }
    }
}

/// Index of the coefficient bit for the pair (i, j), 0-based, i ≤ j < n.
#[inline]
pub fn pair_index(n: u8, i: u8, j: u8) -> u8 {
    debug_assert!(i <= j && j < n);
    let before_row: u8 = (0..i).map(|a| n - a).sum();
    before_row + (j - i)
}

/// Mask of coefficient bits (i,j) with both v_i and v_j set; XOR-parity of
/// `coeffs & pair_mask` evaluates the form at an F_2 vector.
#[inline]
pub fn pair_mask(n: u8, v: u8) -> u16 {
    let mut m = 0u16;
    for i in 0..n {
        if v >> i & 1 == 0 {
            continue;
        }
        for j in i..n {
            if v >> j & 1 != 0 {
                m |= 1 << pair_index(n, i, j);
            }
        }
    }
    m
}

/// A quadratic form over F_2 in n ≤ 5 variables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticForm {
    n: u8,
    coeffs: u16,
}

impl QuadraticForm {
    pub fn new(n: u8, coeffs: u16) -> Result<QuadraticForm, QuadFormError> {
        if !(2..=5).contains(&n) {
            return Err(QuadFormError::BadVariableCount(n));
        }
        let nbits = n as u16 * (n as u16 + 1) / 2;
        if coeffs >> nbits != 0 {
            return Err(QuadFormError::CoeffsOutOfRange);
        }
        Ok(QuadraticForm { n, coeffs })
    }

    /// Build from monomials x_i x_j given as 0-based index pairs.
    pub fn from_terms(n: u8, terms: &[(u8, u8)]) -> QuadraticForm {
        let mut coeffs = 0u16;
        for &(i, j) in terms {
            let (i, j) = if i <= j { (i, j) } else { (j, i) };
            coeffs ^= 1 << pair_index(n, i, j);
        }
        QuadraticForm::new(n, coeffs).expect("term indices within n")
    }

    pub fn vars(&self) -> u8 {
        self.n
    }

    pub fn coeffs(&self) -> u16 {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == 0
    }

    pub fn coeff(&self, i: u8, j: u8) -> bool {
        let (i, j) = if i <= j { (i, j) } else { (j, i) };
        self.coeffs >> pair_index(self.n, i, j) & 1 != 0
    }

    /// Evaluate at an F_2 vector given as a bit mask.
    #[inline]
    pub fn eval_f2(&self, v: u8) -> bool {
        (self.coeffs & pair_mask(self.n, v)).count_ones() & 1 != 0
    }

    /// The associated bilinear form b(u, v) = Q(u+v) + Q(u) + Q(v).
    #[inline]
    pub fn bilin(&self, u: u8, v: u8) -> bool {
        self.eval_f2(u ^ v) ^ self.eval_f2(u) ^ self.eval_f2(v)
    }

    /// Evaluate at a point with coordinates in F_{2^k}.
    pub fn eval_field(&self, field: &FieldDesc, coords: &[u8]) -> u8 {
        debug_assert_eq!(coords.len(), self.n as usize);
        let mut acc = 0u8;
        let mut c = self.coeffs;
        while c != 0 {
            let idx = c.trailing_zeros() as u8;
            c &= c - 1;
            let (i, j) = pair_from_index(self.n, idx);
            acc ^= field.mul_bits(coords[i as usize], coords[j as usize]);
        }
        acc
    }

    /// Gram matrix of the bilinear form: entry (i,j) = c_{i,j} for i ≠ j,
    /// zero diagonal (characteristic 2 makes b alternating).
    pub fn gram(&self) -> BinMatrix {
        let mut g = BinMatrix::zero(self.n);
        for i in 0..self.n {
            for j in (i + 1)..self.n {
                if self.coeff(i, j) {
                    g.set(i, j, true);
                    g.set(j, i, true);
                }
            }
        }
        g
    }

    /// Radical, singular subspace, and F_2 point count of the form.
    pub fn anatomy(&self) -> Result<FormAnatomy, QuadFormError> {
        if self.coeffs == 0 {
            return Err(QuadFormError::ZeroForm);
        }
        let gram = self.gram();
        let radical_basis = gram.kernel();
        // Q is additive on the radical, and a ↦ Q(a) is F_2-linear there, so
        // the singular subspace is the kernel of that functional.
        let vals: Vec<bool> = radical_basis
            .iter()
            .map(|v| self.eval_f2(v.bits() as u8))
            .collect();
        let singular_basis: Vec<BinVector> = match vals.iter().position(|&b| b) {
            None => radical_basis.clone(),
            Some(p) => radical_basis
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != p)
                .map(|(i, v)| {
                    let bits = if vals[i] {
                        v.bits() ^ radical_basis[p].bits()
                    } else {
                        v.bits()
                    };
                    BinVector::new(self.n, bits)
                })
                .collect(),
        };
        let proj_point_count = (1u8..(1 << self.n))
            .filter(|&v| !self.eval_f2(v))
            .count() as u32;
        let sing_proj_dim = singular_basis.len() as i8 - 1;
        Ok(FormAnatomy { gram, radical_basis, singular_basis, proj_point_count, sing_proj_dim })
    }

    /// Number of points of V(Q) in P^{n-1}(F_{2^k}).
    pub fn count_proj_points(&self, k: u8) -> Result<u64, QuadFormError> {
        if k == 1 {
            return Ok((1u8..(1 << self.n)).filter(|&v| !self.eval_f2(v)).count() as u64);
        }
        let field = FieldDesc::new(k).map_err(|_| QuadFormError::EnumerationTooLarge)?;
        let total = proj_space_size(field.order() as u64, self.n);
        if total > 10_000_000 {
            return Err(QuadFormError::EnumerationTooLarge);
        }
        let mut count = 0u64;
        let mut coords = [0u8; 5];
        for lead in 0..self.n {
            for c in &mut coords[..lead as usize] {
                *c = 0;
            }
            coords[lead as usize] = 1;
            let free = (lead + 1..self.n).collect::<Vec<_>>();
            let q = field.order() as u64;
            let mut idx = 0u64;
            let span = q.pow(free.len() as u32);
            while idx < span {
                let mut t = idx;
                for &f in &free {
                    coords[f as usize] = (t % q) as u8;
                    t /= q;
                }
                if self.eval_field(&field, &coords[..self.n as usize]) == 0 {
                    count += 1;
                }
                idx += 1;
            }
        }
        Ok(count)
    }

    /// Substitution action: the coefficient vector of x ↦ Q(g·x).
    ///
    /// Recovered by evaluation: the diagonal coefficients are Q(g·e_i) and
    /// the cross terms are the transformed bilinear values, which folds the
    /// characteristic-2 square contributions correctly.
    pub fn substitute(&self, g: &BinMatrix) -> QuadraticForm {
        debug_assert_eq!(g.dim(), self.n);
        let mut coeffs = 0u16;
        let mut images = [0u8; 5];
        for (i, im) in images.iter_mut().enumerate().take(self.n as usize) {
            *im = g.apply(1 << i);
        }
        for i in 0..self.n {
            if self.eval_f2(images[i as usize]) {
                coeffs |= 1 << pair_index(self.n, i, i);
            }
            for j in (i + 1)..self.n {
                let b = self.eval_f2(images[i as usize] ^ images[j as usize])
                    ^ self.eval_f2(images[i as usize])
                    ^ self.eval_f2(images[j as usize]);
                if b {
                    coeffs |= 1 << pair_index(self.n, i, j);
                }
            }
        }
        QuadraticForm { n: self.n, coeffs }
    }

    /// Type of the form, determined by the dimension of its singular locus
    /// and its rational point count.
    pub fn classify(&self) -> FormType {
        if self.coeffs == 0 {
            return FormType::Zero;
        }
        let a = self.anatomy().expect("nonzero");
        let dim_s = a.singular_basis.len() as u8;
        let m = self.n - dim_s;
        if m <= 2 {
            return FormType::NotGeomIrreducible;
        }
        let square_tail = a.radical_basis.len() as u8 == dim_s + 1;
        match (m, square_tail) {
            (3, true) => FormType::I,
            (5, true) => FormType::IV,
            (4, false) => {
                let hyp = expected_points(self.n, 4, NormalShape::Hyperbolic);
                let nrm = expected_points(self.n, 4, NormalShape::NormTail);
                if a.proj_point_count == hyp {
                    FormType::II
                } else {
                    debug_assert_eq!(a.proj_point_count, nrm);
                    FormType::III
                }
            }
            _ => unreachable!("no quadratic form over F_2 has this (m, shape)"),
        }
    }

    /// Constructive reduction to the classification's normal form.
    ///
    /// Splits off hyperbolic planes greedily, preferring isotropic non-radical
    /// vectors; at most one anisotropic (norm) plane can remain, and the
    /// additive tail contributes at most one square. The returned transform
    /// conjugates the form to the reported shape exactly.
    pub fn normal_form(&self) -> Result<NormalFormReport, QuadFormError> {
        if self.coeffs == 0 {
            return Err(QuadFormError::ZeroForm);
        }
        let n = self.n;
        let mut rem: Vec<u8> = (0..n).map(|i| 1 << i).collect();
        let mut pairs: Vec<(u8, u8)> = Vec::new();
        let mut norm_pair = false;
        loop {
            let combos = span_nonzero(&rem);
            let mut hyp: Option<u8> = None;
            let mut anis: Option<u8> = None;
            for &u in &combos {
                if !rem.iter().any(|&w| self.bilin(u, w)) {
                    continue;
                }
                if !self.eval_f2(u) {
                    hyp = Some(u);
                    break;
                }
                if anis.is_none() {
                    anis = Some(u);
                }
            }
            let u = match hyp.or(anis) {
                Some(u) => u,
                None => break,
            };
            let v0 = combos
                .iter()
                .copied()
                .find(|&v| self.bilin(u, v))
                .expect("u pairs with the span");
            let (u, v) = if !self.eval_f2(u) {
                (u, if self.eval_f2(v0) { v0 ^ u } else { v0 })
            } else {
                debug_assert!(self.eval_f2(v0), "isotropic partner would have been found");
                norm_pair = true;
                (u, v0)
            };
            // Project the remaining basis onto the orthogonal complement of
            // the split plane, then re-extract an independent set.
            let projected: Vec<u8> = rem
                .iter()
                .map(|&e| {
                    let mut x = e;
                    if self.bilin(e, v) {
                        x ^= u;
                    }
                    if self.bilin(e, u) {
                        x ^= v;
                    }
                    x
                })
                .collect();
            rem = independent_subset(&projected);
            debug_assert_eq!(rem.len() + 2 * (pairs.len() + 1), n as usize);
            pairs.push((u, v));
            if norm_pair {
                break;
            }
        }
        // The leftover span is bilinear-orthogonal to everything: Q is
        // additive there, so at most one square survives.
        let mut tail: Option<u8> = None;
        let mut s_vectors: Vec<u8> = Vec::new();
        for &e in &rem {
            if self.eval_f2(e) {
                match tail {
                    None => tail = Some(e),
                    Some(t) => s_vectors.push(e ^ t),
                }
            } else {
                s_vectors.push(e);
            }
        }
        debug_assert!(
            !(norm_pair && tail.is_some()),
            "norm plane and square tail cannot coexist"
        );
        let m = 2 * pairs.len() as u8 + tail.is_some() as u8;
        let shape = if norm_pair {
            NormalShape::NormTail
        } else if tail.is_some() {
            NormalShape::SquareTail
        } else {
            NormalShape::Hyperbolic
        };
        let mut transform = BinMatrix::zero(n);
        let mut basis: Vec<u8> = Vec::with_capacity(n as usize);
        for &(u, v) in &pairs {
            basis.push(u);
            basis.push(v);
        }
        if let Some(t) = tail {
            basis.push(t);
        }
        basis.extend_from_slice(&s_vectors);
        for (col, &b) in basis.iter().enumerate() {
            for row in 0..n {
                if b >> row & 1 != 0 {
                    transform.set(row, col as u8, true);
                }
            }
        }
        let report = NormalFormReport { shape, m, transform };
        debug_assert_eq!(self.substitute(&transform), report.canonical(n));
        Ok(report)
    }

    /// Render as a polynomial string, leading term first.
    pub fn render(&self) -> String {
        if self.coeffs == 0 {
            return String::from("0");
        }
        let names = variable_names(self.n);
        let mut terms: Vec<(u8, u8)> = Vec::new();
        for i in 0..self.n {
            for j in i..self.n {
                if self.coeff(i, j) {
                    terms.push((i, j));
                }
            }
        }
        // Degrevlex on quadratic monomials: sort ascending by (j, i).
        terms.sort_by_key(|&(i, j)| (j, i));
        let mut s = String::new();
        for (k, &(i, j)) in terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if i == j {
                let _ = write!(s, "{}^2", names[i as usize]);
            } else {
                let _ = write!(s, "{}{}", names[i as usize], names[j as usize]);
            }
        }
        s
    }

    /// 4-hex-digit id of the 15-bit packing; shorter packings pad the same way.
    pub fn hex_id(&self) -> String {
        let mut s = String::new();
        let _ = write!(s, "{:04x}", self.coeffs);
        s
    }
}

/// Inverse of [`pair_index`].
pub fn pair_from_index(n: u8, idx: u8) -> (u8, u8) {
    let mut rem = idx;
    for i in 0..n {
        let row = n - i;
        if rem < row {
            return (i, i + rem);
        }
        rem -= row;
    }
    unreachable!("index out of range")
}

/// Points of P^{n-1}(F_q): (q^n - 1)/(q - 1).
pub fn proj_space_size(q: u64, n: u8) -> u64 {
    (q.pow(n as u32) - 1) / (q - 1)
}

/// All nonzero vectors in the span of the given independent set, ascending.
fn span_nonzero(basis: &[u8]) -> Vec<u8> {
    let mut out: Vec<u8> = (1u32..(1 << basis.len()))
        .map(|sel| {
            let mut v = 0u8;
            for (i, &b) in basis.iter().enumerate() {
                if sel >> i & 1 != 0 {
                    v ^= b;
                }
            }
            v
        })
        .collect();
    out.sort_unstable();
    out
}

/// Extract a basis of the span of `vs` by elimination.
fn independent_subset(vs: &[u8]) -> Vec<u8> {
    let mut rows: Vec<u8> = Vec::new();
    for &v in vs {
        let mut x = v;
        for &r in &rows {
            let pivot = 7 - r.leading_zeros() as u8;
            if x >> pivot & 1 != 0 {
                x ^= r;
            }
        }
        if x != 0 {
            rows.push(x);
        }
    }
    rows
}

/// Bilinear-form data of a quadratic form.
#[derive(Debug, Clone)]
pub struct FormAnatomy {
    /// Alternating Gram matrix of b_Q.
    pub gram: BinMatrix,
    /// Basis of the radical of b_Q, reduced echelon order.
    pub radical_basis: Vec<BinVector>,
    /// Basis of the subspace S ⊆ rad on which Q vanishes.
    pub singular_basis: Vec<BinVector>,
    /// Points of V(Q) in P^{n-1}(F_2).
    pub proj_point_count: u32,
    /// Projective dimension of P(S); -1 when S = 0.
    pub sing_proj_dim: i8,
}

/// The linear-equivalence classes of quadratic forms in 5 variables over F_2.
///
/// Geometrically irreducible forms fall into the four classes I–IV; forms
/// equivalent to a form in at most 2 variables are geometrically reducible.
/// The ordering I < II < III < IV is the one the pencil filter uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FormType {
    Zero,
    NotGeomIrreducible,
    I,
    II,
    III,
    IV,
}

impl fmt::Display for FormType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormType::Zero => write!(f, "zero"),
            FormType::NotGeomIrreducible => write!(f, "not geometrically irreducible"),
            FormType::I => write!(f, "I"),
            FormType::II => write!(f, "II"),
            FormType::III => write!(f, "III"),
            FormType::IV => write!(f, "IV"),
        }
    }
}

/// Shape of the normal form a quadratic form reduces to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormalShape {
    /// x1x2 + x3x4 + … + x_{m-1}x_m
    Hyperbolic,
    /// x1x2 + … + x_{m-3}x_{m-2} + N(x_{m-1}, x_m)
    NormTail,
    /// x1x2 + … + x_{m-2}x_{m-1} + x_m²
    SquareTail,
}

impl fmt::Display for NormalShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormalShape::Hyperbolic => write!(f, "hyperbolic"),
            NormalShape::NormTail => write!(f, "norm-tail"),
            NormalShape::SquareTail => write!(f, "square-tail"),
        }
    }
}

/// Result of the constructive normal-form reduction.
#[derive(Debug, Clone)]
pub struct NormalFormReport {
    pub shape: NormalShape,
    /// Active variable count of the normal form.
    pub m: u8,
    /// Change of basis: substituting it into the original form yields the
    /// canonical coefficient vector exactly.
    pub transform: BinMatrix,
}

impl NormalFormReport {
    /// The canonical form this report names, in n variables.
    pub fn canonical(&self, n: u8) -> QuadraticForm {
        canonical_form(n, self.m, self.shape)
    }
}

/// The canonical coefficient vector for (m, shape) padded to n variables.
pub fn canonical_form(n: u8, m: u8, shape: NormalShape) -> QuadraticForm {
    let mut terms: Vec<(u8, u8)> = Vec::new();
    match shape {
        NormalShape::Hyperbolic => {
            for p in 0..m / 2 {
                terms.push((2 * p, 2 * p + 1));
            }
        }
        NormalShape::NormTail => {
            for p in 0..(m - 2) / 2 {
                terms.push((2 * p, 2 * p + 1));
            }
            terms.push((m - 2, m - 2));
            terms.push((m - 2, m - 1));
            terms.push((m - 1, m - 1));
        }
        NormalShape::SquareTail => {
            for p in 0..(m - 1) / 2 {
                terms.push((2 * p, 2 * p + 1));
            }
            terms.push((m - 1, m - 1));
        }
    }
    QuadraticForm::from_terms(n, &terms)
}

/// F_2 projective point count of the canonical (m, shape) form in n variables.
fn expected_points(n: u8, m: u8, shape: NormalShape) -> u32 {
    let zeros_active: u32 = match shape {
        NormalShape::Hyperbolic => (1 << (m - 1)) + (1 << (m / 2 - 1)),
        NormalShape::NormTail => (1 << (m - 1)) - (1 << (m / 2 - 1)),
        NormalShape::SquareTail => 1 << (m - 1),
    };
    zeros_active * (1 << (n - m)) - 1
}

/// The norm form N(x1, x2) = x1² + x1x2 + x2² of F_4/F_2, anisotropic over F_2.
pub fn norm_form() -> QuadraticForm {
    QuadraticForm::from_terms(2, &[(0, 0), (0, 1), (1, 1)])
}

/// Classification of every nonzero quadratic form in 5 variables.
///
/// Indexed by the 15-bit coefficient packing; built once and then shared
/// read-only.
pub struct TypeTable {
    types: Vec<FormType>,
}

/// Classify all 2^15 - 1 nonzero forms in 5 variables.
pub fn build_type_table() -> TypeTable {
    let mut types = Vec::with_capacity(1 << 15);
    types.push(FormType::Zero);
    // Point counts batched through precomputed evaluation masks.
    let masks: Vec<u16> = (0u8..32).map(|v| pair_mask(5, v)).collect();
    for coeffs in 1u16..(1 << 15) {
        let q = QuadraticForm { n: 5, coeffs };
        let gram = q.gram();
        let radical = gram.kernel();
        let vals: Vec<bool> = radical.iter().map(|v| q.eval_f2(v.bits() as u8)).collect();
        let dim_s = if vals.iter().any(|&b| b) {
            radical.len() - 1
        } else {
            radical.len()
        };
        let m = 5 - dim_s as u8;
        let t = if m <= 2 {
            FormType::NotGeomIrreducible
        } else if m == 3 {
            FormType::I
        } else if m == 5 {
            FormType::IV
        } else {
            let points = masks[1..]
                .iter()
                .filter(|&&mm| (coeffs & mm).count_ones() & 1 == 0)
                .count() as u32;
            if points == expected_points(5, 4, NormalShape::Hyperbolic) {
                FormType::II
            } else {
                debug_assert_eq!(points, expected_points(5, 4, NormalShape::NormTail));
                FormType::III
            }
        };
        types.push(t);
    }
    TypeTable { types }
}

impl TypeTable {
    #[inline]
    pub fn type_of(&self, coeffs: u16) -> FormType {
        self.types[coeffs as usize]
    }

    /// Number of classified nonzero forms (32,767).
    pub fn num_forms(&self) -> usize {
        self.types.len() - 1
    }

    pub fn count(&self, t: FormType) -> usize {
        self.types.iter().filter(|&&x| x == t).count()
    }

    /// Ids of all forms whose type satisfies the predicate, ascending.
    pub fn forms_where(&self, mut pred: impl FnMut(FormType) -> bool) -> Vec<u16> {
        (1u16..(1 << 15)).filter(|&c| pred(self.types[c as usize])).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};

    pub(crate) fn form(terms: &[(u8, u8)]) -> QuadraticForm {
        QuadraticForm::from_terms(5, terms)
    }

    // The four standard forms, 0-based variables v,w,x,y,z = 0..4.
    pub(crate) fn type_i() -> QuadraticForm {
        form(&[(0, 1), (2, 2)]) // vw + x^2
    }
    pub(crate) fn type_ii() -> QuadraticForm {
        form(&[(0, 1), (2, 3)]) // vw + xy
    }
    pub(crate) fn type_iii() -> QuadraticForm {
        form(&[(0, 1), (2, 2), (2, 3), (3, 3)]) // vw + x^2 + xy + y^2
    }
    pub(crate) fn type_iv() -> QuadraticForm {
        form(&[(0, 1), (2, 3), (4, 4)]) // vw + xy + z^2
    }

    #[test]
    fn pair_index_round_trip() {
        for n in 2..=5u8 {
            let mut seen = 0u16;
            for i in 0..n {
                for j in i..n {
                    let idx = pair_index(n, i, j);
                    assert_eq!(pair_from_index(n, idx), (i, j));
                    assert_eq!(seen >> idx & 1, 0);
                    seen |= 1 << idx;
                }
            }
            assert_eq!(seen.count_ones(), n as u32 * (n as u32 + 1) / 2);
        }
    }

    #[test]
    fn known_ids() {
        assert_eq!(type_i().coeffs(), 0x0202);
        assert_eq!(type_ii().coeffs(), 0x0402);
        assert_eq!(type_iii().coeffs(), 0x1602);
        assert_eq!(type_iv().coeffs(), 0x4402);
        assert_eq!(type_iv().hex_id(), "4402");
    }

    #[test]
    fn render_matches_convention() {
        assert_eq!(type_iv().render(), "vw + xy + z^2");
        assert_eq!(type_iii().render(), "vw + x^2 + xy + y^2");
        assert_eq!(type_i().render(), "vw + x^2");
    }

    #[test]
    fn anatomy_examples() {
        // vw + x^2: radical spans x,y,z; S spans y,z; a singular line.
        let a = type_i().anatomy().unwrap();
        assert_eq!(a.radical_basis.len(), 3);
        assert_eq!(a.singular_basis.len(), 2);
        assert_eq!(a.sing_proj_dim, 1);
        assert_eq!(a.proj_point_count, 15);

        // vw + xy + z^2: radical spans z, S = 0, smooth quadric.
        let a = type_iv().anatomy().unwrap();
        assert_eq!(a.radical_basis.len(), 1);
        assert_eq!(a.radical_basis[0].bits(), 0b10000);
        assert!(a.singular_basis.is_empty());
        assert_eq!(a.sing_proj_dim, -1);
        assert_eq!(a.proj_point_count, 15);

        // vw + x^2 + xy + y^2: isolated singularity at the z point.
        let a = type_iii().anatomy().unwrap();
        assert_eq!(a.singular_basis.len(), 1);
        assert_eq!(a.singular_basis[0].bits(), 0b10000);
        assert_eq!(a.sing_proj_dim, 0);
        assert_eq!(a.proj_point_count, 11);

        assert_eq!(
            QuadraticForm::new(5, 0).unwrap().anatomy().unwrap_err(),
            QuadFormError::ZeroForm
        );
    }

    #[test]
    fn count_proj_points_examples() {
        assert_eq!(type_ii().count_proj_points(1).unwrap(), 19);
        // x^2 in 5 variables: the hyperplane x = 0 in P^4.
        assert_eq!(form(&[(2, 2)]).count_proj_points(1).unwrap(), 15);
        // The anisotropic quadric surface has 5 rational points.
        let q4 = QuadraticForm::from_terms(4, &[(0, 1), (2, 2), (2, 3), (3, 3)]);
        assert_eq!(q4.count_proj_points(1).unwrap(), 5);
    }

    #[test]
    fn count_proj_points_budget() {
        assert_eq!(
            QuadraticForm::from_terms(5, &[(0, 1)]).count_proj_points(8),
            Err(QuadFormError::EnumerationTooLarge)
        );
    }

    #[test]
    fn classify_examples() {
        assert_eq!(type_i().classify(), FormType::I);
        assert_eq!(type_ii().classify(), FormType::II);
        assert_eq!(type_iii().classify(), FormType::III);
        assert_eq!(type_iv().classify(), FormType::IV);
        assert_eq!(form(&[(0, 0)]).classify(), FormType::NotGeomIrreducible);
        // Binary norm form embedded in 5 variables.
        assert_eq!(
            form(&[(2, 2), (2, 3), (3, 3)]).classify(),
            FormType::NotGeomIrreducible
        );
        assert_eq!(QuadraticForm::new(5, 0).unwrap().classify(), FormType::Zero);
    }

    #[test]
    fn norm_form_examples() {
        let nf = norm_form();
        let f2 = FieldDesc::new(1).unwrap();
        assert_eq!(nf.eval_field(&f2, &[1, 0]), 1);
        assert_eq!(nf.eval_field(&f2, &[1, 1]), 1);
        assert_eq!(nf.count_proj_points(1).unwrap(), 0);
    }

    #[test]
    fn normal_form_examples() {
        // Already canonical.
        let r = type_iv().normal_form().unwrap();
        assert_eq!(r.shape, NormalShape::SquareTail);
        assert_eq!(r.m, 5);
        assert_eq!(type_iv().substitute(&r.transform).classify(), FormType::IV);

        // N(x,y) + z^2 collapses to xy + z^2.
        let q = form(&[(2, 2), (2, 3), (3, 3), (4, 4)]);
        let r = q.normal_form().unwrap();
        assert_eq!(r.shape, NormalShape::SquareTail);
        assert_eq!(r.m, 3);
    }

    #[test]
    fn normal_form_of_random_conjugates() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(23);
        let q = type_iii();
        let mut seen = 0;
        while seen < 40 {
            let rows: [u8; 5] = core::array::from_fn(|_| rng.gen_range(0..32) as u8);
            let g = BinMatrix::from_rows(5, &rows);
            if !g.is_invertible() {
                continue;
            }
            seen += 1;
            let conj = q.substitute(&g);
            let r = conj.normal_form().unwrap();
            assert_eq!(r.shape, NormalShape::NormTail);
            assert_eq!(r.m, 4);
            assert_eq!(conj.classify(), FormType::III);
        }
    }

    #[test]
    fn classify_is_linear_invariant_random() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        let mut done = 0;
        while done < 1000 {
            let coeffs = rng.gen_range(1u16..(1 << 15));
            let rows: [u8; 5] = core::array::from_fn(|_| rng.gen_range(0..32) as u8);
            let g = BinMatrix::from_rows(5, &rows);
            if !g.is_invertible() {
                continue;
            }
            done += 1;
            let q = QuadraticForm::new(5, coeffs).unwrap();
            assert_eq!(q.classify(), q.substitute(&g).classify());
        }
    }

    #[test]
    fn bilinear_identity_random_pairs() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(9);
        for _ in 0..2000 {
            let q = QuadraticForm::new(5, rng.gen_range(0..(1 << 15))).unwrap();
            let a = rng.gen_range(0..32u8);
            let b = rng.gen_range(0..32u8);
            assert_eq!(q.eval_f2(a ^ b), q.bilin(a, b) ^ q.eval_f2(a) ^ q.eval_f2(b));
        }
    }

    #[test]
    fn type_table_counts() {
        let table = build_type_table();
        assert_eq!(table.num_forms(), 32767);
        assert_eq!(table.count(FormType::IV), 13888);
        assert_eq!(
            table.count(FormType::III) + table.count(FormType::IV),
            19096
        );
        // Derived from the two published counts by subtraction.
        assert_eq!(table.count(FormType::III), 5208);
        let total: usize = [
            FormType::I,
            FormType::II,
            FormType::III,
            FormType::IV,
            FormType::NotGeomIrreducible,
        ]
        .iter()
        .map(|&t| table.count(t))
        .sum();
        assert_eq!(total, 32767);
        assert_eq!(table.count(FormType::Zero), 1);
    }

    #[test]
    fn exhaustive_structure_over_all_forms() {
        // codim(S, rad) <= 1 everywhere; table agrees with per-form classify;
        // the normal-form transform reproduces the canonical vector exactly.
        let table = build_type_table();
        for coeffs in 1u16..(1 << 15) {
            let q = QuadraticForm::new(5, coeffs).unwrap();
            let a = q.anatomy().unwrap();
            let codim = a.radical_basis.len() - a.singular_basis.len();
            assert!(codim <= 1, "codim(S, rad) > 1 for {:04x}", coeffs);
            assert_eq!(table.type_of(coeffs), q.classify(), "table mismatch {:04x}", coeffs);
            let r = q.normal_form().unwrap();
            assert_eq!(
                q.substitute(&r.transform),
                r.canonical(5),
                "round trip failed for {:04x}",
                coeffs
            );
            assert_eq!(r.m as usize, 5 - a.singular_basis.len());
        }
    }
}
