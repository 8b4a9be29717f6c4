//! Sparse multivariate polynomials over F_2 in at most 5 variables and a
//! Buchberger engine.
//!
//! Coefficients live in F_2, so polynomials are plain sets of monomials and
//! every arithmetic operation is a sorted XOR merge. The engine computes
//! reduced Gröbner bases w.r.t. degrevlex and everything the curve search
//! needs on top of them: Krull/projective dimension from the leading-term
//! staircase, Hilbert functions, Jacobian minors (characteristic-2 partials),
//! and the smooth-curve verdict for triples of quadrics.

use alloc::collections::{BTreeSet, BinaryHeap};
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;
use core::fmt;
use core::fmt::Write as _;

use crate::binfield::FieldDesc;
use crate::bitlinalg::BinMatrix;
use crate::quadform::{pair_from_index, QuadraticForm};

pub const MAX_VARS: usize = 5;

/// Default cap on reduction steps for a single basis computation.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroebnerError {
    /// A single basis computation exceeded its reduction-step budget.
    BudgetExceeded,
    /// The operation requires a homogeneous ideal.
    NotHomogeneous,
    /// Jacobian minors expect exactly 3 forms in 5 variables.
    WrongArity,
    /// Degree out of the supported range.
    DegreeTooLarge,
    /// Unparseable polynomial text.
    Parse(String),
}

impl fmt::Display for GroebnerError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroebnerError::BudgetExceeded => write!(f, "reduction budget exceeded"),
            GroebnerError::NotHomogeneous => write!(f, "ideal is not homogeneous"),
            GroebnerError::WrongArity => write!(f, "expected exactly 3 forms in 5 variables"),
            GroebnerError::DegreeTooLarge => write!(f, "degree exceeds supported range"),
            GroebnerError::Parse(msg) => write!(f, "parse error: {}", msg),
        }
    }
}

const EXP_MASK: u64 = 0x00FF_FFFF_FFFF;
const DEG_MASK: u64 = 0xFF00_0000_0000;
const SWAR_HIGH: u64 = 0x8080_8080_8080;

/// A monomial in ≤ 5 variables: exponent bytes packed with the total degree.
///
/// Byte i (i < 5) is the exponent of variable i; byte 5 caches the degree.
/// Exponents stay below 128 so SWAR divisibility tests need no carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial(u64);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn from_exps(exps: &[u8]) -> Monomial {
        debug_assert!(exps.len() <= MAX_VARS);
        let mut packed = 0u64;
        let mut deg = 0u64;
        for (i, &e) in exps.iter().enumerate() {
            debug_assert!(e < 128);
            packed |= (e as u64) << (8 * i);
            deg += e as u64;
        }
        debug_assert!(deg < 128);
        Monomial(packed | (deg << 40))
    }

    pub fn var(i: u8) -> Monomial {
        let mut exps = [0u8; MAX_VARS];
        exps[i as usize] = 1;
        Monomial::from_exps(&exps)
    }

    pub fn exp(&self, i: u8) -> u8 {
        (self.0 >> (8 * i)) as u8
    }

    pub fn degree(&self) -> u8 {
        (self.0 >> 40) as u8
    }

    pub fn exps(&self) -> [u8; MAX_VARS] {
        core::array::from_fn(|i| self.exp(i as u8))
    }

    /// Bit mask of variables with positive exponent.
    pub fn support(&self) -> u8 {
        let mut s = 0u8;
        for i in 0..MAX_VARS as u8 {
            if self.exp(i) > 0 {
                s |= 1 << i;
            }
        }
        s
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0 + other.0)
    }

    /// True when `d` divides this monomial (bytewise exponent dominance).
    #[inline]
    pub fn divisible_by(&self, d: &Monomial) -> bool {
        ((self.0 | SWAR_HIGH) - d.0) & SWAR_HIGH == SWAR_HIGH
    }

    /// Quotient by a divisor; caller guarantees divisibility.
    #[inline]
    pub fn div(&self, d: &Monomial) -> Monomial {
        debug_assert!(self.divisible_by(d));
        Monomial(self.0 - d.0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let exps: [u8; MAX_VARS] =
            core::array::from_fn(|i| self.exp(i as u8).max(other.exp(i as u8)));
        Monomial::from_exps(&exps)
    }

    /// Comparison key: total degree first, then reversed exponents from the
    /// last variable down — larger key means larger monomial in degrevlex.
    #[inline]
    fn key(&self) -> u64 {
        (self.0 & DEG_MASK) | (!self.0 & EXP_MASK)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Monomial) -> Option<core::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    #[inline]
    fn cmp(&self, other: &Monomial) -> core::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

/// A polynomial over F_2: a set of monomials, stored leading-term first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct MultiPoly {
    terms: Vec<Monomial>,
}

impl MultiPoly {
    pub fn zero() -> MultiPoly {
        MultiPoly { terms: Vec::new() }
    }

    pub fn one() -> MultiPoly {
        MultiPoly { terms: vec![Monomial::ONE] }
    }

    /// Normalize an arbitrary monomial list: sort descending, cancel pairs.
    pub fn from_monomials(mut ms: Vec<Monomial>) -> MultiPoly {
        ms.sort_unstable_by(|a, b| b.cmp(a));
        let mut terms: Vec<Monomial> = Vec::with_capacity(ms.len());
        for m in ms {
            if terms.last() == Some(&m) {
                terms.pop();
            } else {
                terms.push(m);
            }
        }
        MultiPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn leading(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Sum over F_2: symmetric difference of term sets.
    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        MultiPoly { terms: xor_merge(&self.terms, &other.terms) }
    }

    pub fn mul_mono(&self, m: &Monomial) -> MultiPoly {
        MultiPoly { terms: self.terms.iter().map(|t| t.mul(m)).collect() }
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut acc = MultiPoly::zero();
        for t in &other.terms {
            acc = acc.add(&self.mul_mono(t));
        }
        acc
    }

    /// Formal partial derivative; in characteristic 2 even exponents vanish.
    pub fn derivative(&self, var: u8) -> MultiPoly {
        let terms: Vec<Monomial> = self
            .terms
            .iter()
            .filter(|t| t.exp(var) % 2 == 1)
            .map(|t| {
                let mut exps = t.exps();
                exps[var as usize] -= 1;
                Monomial::from_exps(&exps)
            })
            .collect();
        // Division by a variable preserves the term order.
        MultiPoly { terms }
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some(t) => self.terms.iter().all(|m| m.degree() == t.degree()),
        }
    }

    pub fn total_degree(&self) -> Option<u8> {
        self.terms.iter().map(|m| m.degree()).max()
    }

    /// Evaluate with coordinates in F_{2^k}.
    pub fn eval_field(&self, field: &FieldDesc, coords: &[u8]) -> u8 {
        let mut acc = 0u8;
        for t in &self.terms {
            let mut prod = 1u8;
            for (i, &c) in coords.iter().enumerate() {
                let e = t.exp(i as u8);
                if e > 0 {
                    prod = field.mul_bits(prod, field.pow_bits(c, e as u32));
                }
                if prod == 0 {
                    break;
                }
            }
            acc ^= prod;
        }
        acc
    }

    /// Substitute each variable by the linear form in the matching matrix
    /// row: the polynomial x ↦ p(g·x).
    pub fn substitute_linear(&self, g: &BinMatrix) -> MultiPoly {
        let n = g.dim();
        let linear: Vec<MultiPoly> = (0..n)
            .map(|r| {
                let ms: Vec<Monomial> =
                    (0..n).filter(|&c| g.get(r, c)).map(Monomial::var).collect();
                MultiPoly::from_monomials(ms)
            })
            .collect();
        let mut acc = MultiPoly::zero();
        for t in &self.terms {
            let mut prod = MultiPoly::one();
            for i in 0..n {
                for _ in 0..t.exp(i) {
                    prod = prod.mul(&linear[i as usize]);
                }
            }
            acc = acc.add(&prod);
        }
        acc
    }

    /// Render with the given variable names, leading term first.
    pub fn render(&self, names: &[char]) -> String {
        if self.terms.is_empty() {
            return String::from("0");
        }
        let mut s = String::new();
        for (k, t) in self.terms.iter().enumerate() {
            if k > 0 {
                s.push_str(" + ");
            }
            if t.degree() == 0 {
                s.push('1');
                continue;
            }
            for (i, &name) in names.iter().enumerate() {
                let e = t.exp(i as u8);
                match e {
                    0 => {}
                    1 => s.push(name),
                    _ => {
                        let _ = write!(s, "{}^{}", name, e);
                    }
                }
            }
        }
        s
    }
}

/// Merge two descending term lists, cancelling equal monomials.
fn xor_merge(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// Parse a polynomial from text like `vw + x^2` or `x*y + z^3`.
///
/// Terms are separated by `+`; factors are variables with optional `^e`,
/// juxtaposed or `*`-separated, with an optional integer coefficient taken
/// mod 2.
pub fn parse_poly(input: &str, names: &[char]) -> Result<MultiPoly, GroebnerError> {
    let cleaned: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if cleaned.is_empty() {
        return Err(GroebnerError::Parse(String::from("empty input")));
    }
    let mut monomials: Vec<Monomial> = Vec::new();
    for term in cleaned.split('+') {
        if term.is_empty() {
            return Err(GroebnerError::Parse(String::from("empty term")));
        }
        let mut exps = [0u8; MAX_VARS];
        let mut coeff: u64 = 1;
        let mut chars = term.chars().peekable();
        let mut saw_factor = false;
        while let Some(&c) = chars.peek() {
            if c == '*' {
                chars.next();
                continue;
            }
            if c.is_ascii_digit() {
                let mut num = 0u64;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        num = num * 10 + v as u64;
                        chars.next();
                    } else {
                        break;
                    }
                }
                coeff *= num;
                saw_factor = true;
                continue;
            }
            let var = names.iter().position(|&n| n == c);
            let Some(var) = var else {
                return Err(GroebnerError::Parse(alloc::format!("unknown variable '{}'", c)));
            };
            chars.next();
            let mut e: u8 = 1;
            if chars.peek() == Some(&'^') {
                chars.next();
                let mut num = 0u32;
                let mut any = false;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        num = num * 10 + v;
                        any = true;
                        chars.next();
                    } else {
                        break;
                    }
                }
                if !any || num > 100 {
                    return Err(GroebnerError::Parse(String::from("bad exponent")));
                }
                e = num as u8;
            }
            exps[var] = exps[var]
                .checked_add(e)
                .ok_or_else(|| GroebnerError::Parse(String::from("exponent overflow")))?;
            saw_factor = true;
        }
        if !saw_factor {
            return Err(GroebnerError::Parse(String::from("empty term")));
        }
        if coeff % 2 == 1 {
            monomials.push(Monomial::from_exps(&exps));
        }
    }
    Ok(MultiPoly::from_monomials(monomials))
}

impl QuadraticForm {
    /// The form as a sparse polynomial.
    pub fn to_poly(&self) -> MultiPoly {
        let mut ms = Vec::new();
        let mut c = self.coeffs();
        while c != 0 {
            let idx = c.trailing_zeros() as u8;
            c &= c - 1;
            let (i, j) = pair_from_index(self.vars(), idx);
            let mut exps = [0u8; MAX_VARS];
            exps[i as usize] += 1;
            exps[j as usize] += 1;
            ms.push(Monomial::from_exps(&exps));
        }
        MultiPoly::from_monomials(ms)
    }

    /// Recover a quadratic form from a degree-2 polynomial in n variables.
    pub fn from_poly(p: &MultiPoly, n: u8) -> Option<QuadraticForm> {
        let mut terms: Vec<(u8, u8)> = Vec::new();
        for t in p.terms() {
            if t.degree() != 2 {
                return None;
            }
            let mut vars: Vec<u8> = Vec::new();
            for i in 0..MAX_VARS as u8 {
                for _ in 0..t.exp(i) {
                    vars.push(i);
                }
            }
            if vars.len() != 2 || vars.iter().any(|&v| v >= n) {
                return None;
            }
            terms.push((vars[0], vars[1]));
        }
        Some(QuadraticForm::from_terms(n, &terms))
    }
}

/// An ideal given by generators in a fixed number of variables.
#[derive(Debug, Clone)]
pub struct Ideal {
    generators: Vec<MultiPoly>,
    nvars: u8,
    homogeneous: bool,
}

impl Ideal {
    pub fn new(generators: Vec<MultiPoly>, nvars: u8) -> Ideal {
        assert!(nvars as usize <= MAX_VARS);
        let homogeneous = generators.iter().all(|g| g.is_homogeneous());
        Ideal { generators, nvars, homogeneous }
    }

    pub fn generators(&self) -> &[MultiPoly] {
        &self.generators
    }

    pub fn nvars(&self) -> u8 {
        self.nvars
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }
}

/// Full reduction of a polynomial modulo a basis: every term is brought to
/// normal form, not just the head.
fn reduce_full(
    p: &MultiPoly,
    basis: &[MultiPoly],
    steps: &mut usize,
    budget: usize,
) -> Result<MultiPoly, GroebnerError> {
    let mut rest = p.terms.clone();
    let mut out: Vec<Monomial> = Vec::new();
    while let Some(&lead) = rest.first() {
        let reducer = basis
            .iter()
            .find(|b| b.leading().map(|lt| lead.divisible_by(&lt)).unwrap_or(false));
        match reducer {
            Some(b) => {
                *steps += 1;
                if *steps > budget {
                    return Err(GroebnerError::BudgetExceeded);
                }
                let q = lead.div(&b.leading().unwrap());
                let shifted: Vec<Monomial> = b.terms.iter().map(|t| t.mul(&q)).collect();
                rest = xor_merge(&rest, &shifted);
            }
            None => {
                out.push(lead);
                rest.remove(0);
            }
        }
    }
    Ok(MultiPoly { terms: out })
}

fn s_poly(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let (ltf, ltg) = (f.leading().unwrap(), g.leading().unwrap());
    let l = ltf.lcm(&ltg);
    f.mul_mono(&l.div(&ltf)).add(&g.mul_mono(&l.div(&ltg)))
}

/// Reduced Gröbner basis w.r.t. degrevlex, with the default step budget.
pub fn groebner_basis(ideal: &Ideal) -> Result<Vec<MultiPoly>, GroebnerError> {
    groebner_basis_with_budget(ideal, DEFAULT_BUDGET)
}

/// Buchberger with the normal selection strategy and both elimination
/// criteria. Aborts with `BudgetExceeded` when a single computation performs
/// more reduction steps than allowed.
pub fn groebner_basis_with_budget(
    ideal: &Ideal,
    budget: usize,
) -> Result<Vec<MultiPoly>, GroebnerError> {
    let mut steps = 0usize;
    let mut basis: Vec<MultiPoly> = Vec::new();
    for g in &ideal.generators {
        if !g.is_zero() {
            let r = reduce_full(g, &basis, &mut steps, budget)?;
            if !r.is_zero() {
                basis.push(r);
            }
        }
    }
    let mut queue: BinaryHeap<Reverse<(u64, usize, usize)>> = BinaryHeap::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();
    fn push_pairs(
        basis: &[MultiPoly],
        queue: &mut BinaryHeap<Reverse<(u64, usize, usize)>>,
        pending: &mut BTreeSet<(usize, usize)>,
        j: usize,
    ) {
        let ltj = basis[j].leading().unwrap();
        for i in 0..j {
            let l = basis[i].leading().unwrap().lcm(&ltj);
            queue.push(Reverse((l.key(), i, j)));
            pending.insert((i, j));
        }
    }
    for j in 0..basis.len() {
        push_pairs(&basis, &mut queue, &mut pending, j);
    }
    while let Some(Reverse((_, i, j))) = queue.pop() {
        if !pending.remove(&(i, j)) {
            continue;
        }
        let (lti, ltj) = (basis[i].leading().unwrap(), basis[j].leading().unwrap());
        let l = lti.lcm(&ltj);
        // First criterion: coprime leading terms.
        if l == lti.mul(&ltj) {
            continue;
        }
        // Second criterion: a third generator divides the lcm and both
        // companion pairs were already treated.
        let chained = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && l.divisible_by(&basis[k].leading().unwrap())
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chained {
            continue;
        }
        let s = s_poly(&basis[i], &basis[j]);
        let r = reduce_full(&s, &basis, &mut steps, budget)?;
        if !r.is_zero() {
            basis.push(r);
            push_pairs(&basis, &mut queue, &mut pending, basis.len() - 1);
        }
    }
    // Minimalize: drop elements whose leading term another one divides.
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        if !keep[i] {
            continue;
        }
        let lti = basis[i].leading().unwrap();
        for (j, bj) in basis.iter().enumerate() {
            if i == j || !keep[j] {
                continue;
            }
            let ltj = bj.leading().unwrap();
            if lti.divisible_by(&ltj) && (lti != ltj || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let minimal: Vec<MultiPoly> = basis
        .into_iter()
        .zip(keep)
        .filter_map(|(b, k)| k.then_some(b))
        .collect();
    // Interreduce tails for the unique reduced basis.
    let mut reduced: Vec<MultiPoly> = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<MultiPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, b)| b.clone())
            .collect();
        reduced.push(reduce_full(&minimal[i], &others, &mut steps, budget)?);
    }
    reduced.retain(|b| !b.is_zero());
    reduced.sort_unstable_by_key(|b| Reverse(b.leading()));
    Ok(reduced)
}

/// Check the Buchberger criterion post hoc: every S-polynomial of the basis
/// reduces to zero. Independent of construction order.
pub fn buchberger_criterion_holds(basis: &[MultiPoly]) -> bool {
    let mut steps = 0usize;
    for i in 0..basis.len() {
        for j in (i + 1)..basis.len() {
            let s = s_poly(&basis[i], &basis[j]);
            match reduce_full(&s, basis, &mut steps, DEFAULT_BUDGET) {
                Ok(r) if r.is_zero() => {}
                _ => return false,
            }
        }
    }
    true
}

/// Normal form of a polynomial modulo a Gröbner basis.
pub fn normal_form_mod(p: &MultiPoly, basis: &[MultiPoly]) -> Result<MultiPoly, GroebnerError> {
    let mut steps = 0usize;
    reduce_full(p, basis, &mut steps, DEFAULT_BUDGET)
}

/// Krull dimension of R/I from the staircase of a Gröbner basis: the largest
/// variable subset meeting no leading monomial's support.
fn krull_dimension(gb: &[MultiPoly], nvars: u8) -> i32 {
    let supports: Vec<u8> = gb.iter().filter_map(|b| b.leading()).map(|m| m.support()).collect();
    let mut best: i32 = -1;
    for subset in 0u8..(1 << nvars) {
        if supports.iter().any(|&s| s & !subset == 0) {
            continue;
        }
        best = best.max(subset.count_ones() as i32);
    }
    best
}

/// Projective dimension of V(I) for a homogeneous ideal: the Krull dimension
/// of the quotient minus one; -1 when only the origin vanishes.
pub fn proj_dimension(ideal: &Ideal) -> Result<i32, GroebnerError> {
    if !ideal.homogeneous {
        return Err(GroebnerError::NotHomogeneous);
    }
    let gb = groebner_basis(ideal)?;
    Ok(proj_dimension_of_basis(&gb, ideal.nvars))
}

/// Projective dimension from an already-computed Gröbner basis.
pub fn proj_dimension_of_basis(gb: &[MultiPoly], nvars: u8) -> i32 {
    krull_dimension(gb, nvars) - 1
}

/// Number of degree-d standard monomials (monomials outside the leading-term
/// ideal).
pub fn hilbert_function(ideal: &Ideal, d: u8) -> Result<u64, GroebnerError> {
    if !ideal.homogeneous {
        return Err(GroebnerError::NotHomogeneous);
    }
    if d > 12 {
        return Err(GroebnerError::DegreeTooLarge);
    }
    let gb = groebner_basis(ideal)?;
    Ok(hilbert_function_of_basis(&gb, ideal.nvars, d))
}

/// Hilbert function from an already-computed Gröbner basis.
pub fn hilbert_function_of_basis(gb: &[MultiPoly], nvars: u8, d: u8) -> u64 {
    let lts: Vec<Monomial> = gb.iter().filter_map(|b| b.leading()).collect();
    let mut count = 0u64;
    let mut exps = [0u8; MAX_VARS];
    count_standard(&lts, nvars, d, 0, &mut exps, &mut count);
    count
}

fn count_standard(
    lts: &[Monomial],
    nvars: u8,
    remaining: u8,
    var: u8,
    exps: &mut [u8; MAX_VARS],
    count: &mut u64,
) {
    if var == nvars - 1 {
        exps[var as usize] = remaining;
        let m = Monomial::from_exps(&exps[..nvars as usize]);
        if !lts.iter().any(|lt| m.divisible_by(lt)) {
            *count += 1;
        }
        exps[var as usize] = 0;
        return;
    }
    for e in 0..=remaining {
        exps[var as usize] = e;
        count_standard(lts, nvars, remaining - e, var + 1, exps, count);
    }
    exps[var as usize] = 0;
}

/// The ten 3×3 minors of the Jacobian of exactly three forms in 5 variables.
///
/// Characteristic 2 folds determinants into permanents, and ∂(x²)/∂x = 0.
pub fn jacobian_minors(forms: &[MultiPoly]) -> Result<Vec<MultiPoly>, GroebnerError> {
    if forms.len() != 3 {
        return Err(GroebnerError::WrongArity);
    }
    let jac: Vec<Vec<MultiPoly>> = forms
        .iter()
        .map(|f| (0..MAX_VARS as u8).map(|v| f.derivative(v)).collect())
        .collect();
    let mut minors = Vec::with_capacity(10);
    for a in 0..MAX_VARS {
        for b in (a + 1)..MAX_VARS {
            for c in (b + 1)..MAX_VARS {
                minors.push(permanent3(&jac, [a, b, c]));
            }
        }
    }
    Ok(minors)
}

fn permanent3(jac: &[Vec<MultiPoly>], cols: [usize; 3]) -> MultiPoly {
    const PERMS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let mut acc = MultiPoly::zero();
    for p in PERMS {
        let prod = jac[0][cols[p[0]]]
            .mul(&jac[1][cols[p[1]]])
            .mul(&jac[2][cols[p[2]]]);
        acc = acc.add(&prod);
    }
    acc
}

/// 2×2 minors of the Jacobian of two forms in `nvars` variables, used for
/// curves in P^3.
pub fn jacobian_minors_pair(forms: &[MultiPoly; 2], nvars: u8) -> Vec<MultiPoly> {
    let jac: Vec<Vec<MultiPoly>> = forms
        .iter()
        .map(|f| (0..nvars).map(|v| f.derivative(v)).collect())
        .collect();
    let mut minors = Vec::new();
    for a in 0..nvars as usize {
        for b in (a + 1)..nvars as usize {
            let m = jac[0][a].mul(&jac[1][b]).add(&jac[0][b].mul(&jac[1][a]));
            minors.push(m);
        }
    }
    minors
}

/// Verdict of the dimension-and-smoothness test for a triple of quadrics.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SmoothCurveVerdict {
    /// Projective dimension of V(Q1,Q2,Q3); -1 for the empty set.
    pub proj_dim: i32,
    pub smooth: bool,
    /// Populated only when proj_dim = 1 and the curve is smooth.
    pub degree: Option<u8>,
    pub arithmetic_genus: Option<i64>,
}

impl SmoothCurveVerdict {
    /// A smooth irreducible canonical genus-5 curve of degree 8.
    pub fn is_genus5_curve(&self) -> bool {
        self.proj_dim == 1
            && self.smooth
            && self.degree == Some(8)
            && self.arithmetic_genus == Some(5)
    }
}

/// Dimension and smoothness of V(Q1,Q2,Q3) in P^4.
///
/// A triple of dimension 1 is a complete intersection; adding the ten
/// Jacobian minors must cut the locus down to nothing for smoothness, and a
/// smooth complete intersection of dimension ≥ 1 in P^4 is connected, hence
/// irreducible. Degree and genus come from the Hilbert polynomial.
pub fn smooth_curve_check(
    q1: &QuadraticForm,
    q2: &QuadraticForm,
    q3: &QuadraticForm,
) -> Result<SmoothCurveVerdict, GroebnerError> {
    let polys = vec![q1.to_poly(), q2.to_poly(), q3.to_poly()];
    let ideal = Ideal::new(polys.clone(), 5);
    let gb = groebner_basis(&ideal)?;
    let proj_dim = proj_dimension_of_basis(&gb, 5);
    if proj_dim != 1 {
        return Ok(SmoothCurveVerdict {
            proj_dim,
            smooth: false,
            degree: None,
            arithmetic_genus: None,
        });
    }
    let minors = jacobian_minors(&polys)?;
    let mut jac_gens = gb.clone();
    jac_gens.extend(minors);
    let jac_ideal = Ideal::new(jac_gens, 5);
    let jac_gb = groebner_basis(&jac_ideal)?;
    let smooth = proj_dimension_of_basis(&jac_gb, 5) == -1;
    if !smooth {
        return Ok(SmoothCurveVerdict { proj_dim, smooth, degree: None, arithmetic_genus: None });
    }
    // Hilbert polynomial a·d + b of a curve: degree a, genus 1 - b.
    let h6 = hilbert_function_of_basis(&gb, 5, 6) as i64;
    let h7 = hilbert_function_of_basis(&gb, 5, 7) as i64;
    let h8 = hilbert_function_of_basis(&gb, 5, 8) as i64;
    let a = h8 - h7;
    let b = h7 - 7 * a;
    let stable = h6 == 6 * a + b && a > 0 && a <= u8::MAX as i64;
    Ok(SmoothCurveVerdict {
        proj_dim,
        smooth,
        degree: stable.then_some(a as u8),
        arithmetic_genus: stable.then_some(1 - b),
    })
}
