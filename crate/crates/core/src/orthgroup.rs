//! Orthogonal groups of quadratic forms over F_2 and their orbit machinery.
//!
//! Two routes compute O(Q) = { g ∈ GL_n(F_2) : Q(g(x)) = Q(x) }: a naive
//! sweep over all n×n matrices, kept for cross-validation, and the
//! transitivity-accelerated search. The latter fixes a base tuple p0 in the
//! product 𝒴 of the nonempty Witt strata (quadric points, radical points,
//! singular points) and, for every tuple p ∈ 𝒴, enumerates the affine space
//! of matrices with g·p0 proportional to p componentwise, keeping the
//! invertible solutions that preserve Q. Transitivity of O(Q) on 𝒴
//! guarantees the union over p is the whole group.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitlinalg::{solve_affine, BinMatrix, BinVector};
use crate::quadform::{FormType, QuadraticForm};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrthError {
    /// The substitution action requires an invertible matrix.
    SingularMatrix,
    /// The fast search needs a nonempty stratum product.
    EmptyWitt,
    /// The acted-on form set is not closed under the group action.
    FormsNotClosed(u16),
}

impl fmt::Display for OrthError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrthError::SingularMatrix => write!(f, "matrix is singular"),
            OrthError::EmptyWitt => write!(f, "stratum product is empty"),
            OrthError::FormsNotClosed(c) => {
                write!(f, "form set not closed under action (image {:04x})", c)
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupMethod {
    Naive,
    Transitivity,
}

/// The orthogonal group of a form, stored as its full sorted element list.
#[derive(Debug, Clone)]
pub struct OrthGroup {
    form: QuadraticForm,
    elements: Vec<BinMatrix>,
    method: GroupMethod,
}

impl OrthGroup {
    pub fn form(&self) -> QuadraticForm {
        self.form
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[BinMatrix] {
        &self.elements
    }

    pub fn method(&self) -> GroupMethod {
        self.method
    }

    pub fn contains(&self, g: &BinMatrix) -> bool {
        self.elements.binary_search(g).is_ok()
    }

    /// Sorted list of hex row-mask strings, one per element.
    pub fn render(&self) -> Vec<String> {
        self.elements.iter().map(|m| m.render()).collect()
    }
}

/// The substitution action g · Q = Q ∘ g.
pub fn act(g: &BinMatrix, q: &QuadraticForm) -> Result<QuadraticForm, OrthError> {
    if !g.is_invertible() {
        return Err(OrthError::SingularMatrix);
    }
    Ok(q.substitute(g))
}

fn matrix_from_code(n: u8, code: u64) -> BinMatrix {
    let mask = (1u64 << n) - 1;
    let mut rows = [0u8; 8];
    for r in 0..n {
        rows[r as usize] = ((code >> (r * n)) & mask) as u8;
    }
    BinMatrix::from_rows(n, &rows[..n as usize])
}

/// Q(g(v)) = Q(v) for every F_2 vector v, with early exit.
#[inline]
fn preserves(qv: &[bool], g: &BinMatrix, n: u8) -> bool {
    for v in 1u8..(1 << n) {
        if qv[g.apply(v) as usize] != qv[v as usize] {
            return false;
        }
    }
    true
}

/// Exact orthogonal group by looping over all n×n matrices.
pub fn orth_naive(q: &QuadraticForm) -> OrthGroup {
    let n = q.vars();
    let qv: Vec<bool> = (0u8..(1 << n)).map(|v| q.eval_f2(v)).collect();
    let mut elements = Vec::new();
    for code in 0..(1u64 << (n as u32 * n as u32)) {
        let g = matrix_from_code(n, code);
        if preserves(&qv, &g, n) && g.is_invertible() {
            elements.push(g);
        }
    }
    elements.sort_unstable();
    OrthGroup { form: *q, elements, method: GroupMethod::Naive }
}

/// The Witt strata of a form: quadric points 𝒬, radical points ℛ, their
/// intersection 𝒮 (the rational singular points), and the factors of the
/// product 𝒴 the orthogonal group acts transitively on.
#[derive(Debug, Clone)]
pub struct WittStrata {
    pub qset: Vec<u8>,
    pub rset: Vec<u8>,
    pub sset: Vec<u8>,
    /// The nonempty sets among 𝒬∖𝒮, ℛ∖𝒮, 𝒮, in that order.
    pub y_factors: Vec<Vec<u8>>,
}

impl WittStrata {
    /// Number of factors i in the product 𝒴.
    pub fn num_factors(&self) -> usize {
        self.y_factors.len()
    }

    /// #𝒴, the product of the factor sizes.
    pub fn y_size(&self) -> u64 {
        self.y_factors.iter().map(|f| f.len() as u64).product()
    }

    /// All tuples of 𝒴 in lexicographic factor order.
    pub fn y_tuples(&self) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = vec![Vec::new()];
        for f in &self.y_factors {
            let mut next = Vec::with_capacity(out.len() * f.len());
            for t in &out {
                for &p in f {
                    let mut t2 = t.clone();
                    t2.push(p);
                    next.push(t2);
                }
            }
            out = next;
        }
        out
    }

    /// Size of the fast search's candidate space: #𝒴 · 2^(n² + i - n·i),
    /// the affine solution dimension counting the i scaling unknowns.
    pub fn candidate_space(&self, n: u8) -> u64 {
        let n = n as u32;
        let i = self.num_factors() as u32;
        self.y_size() << (n * n + i - n * i)
    }
}

/// Compute the Witt strata of a form; the radical points come from the Gram
/// kernel, the singular points by evaluation.
pub fn witt_strata(q: &QuadraticForm) -> WittStrata {
    let n = q.vars();
    let qset: Vec<u8> = (1u8..(1 << n)).filter(|&v| !q.eval_f2(v)).collect();
    let rad = q.gram().kernel();
    let mut rset: Vec<u8> = (1u32..(1u32 << rad.len()))
        .map(|sel| {
            let mut v = 0u8;
            for (i, b) in rad.iter().enumerate() {
                if sel >> i & 1 != 0 {
                    v ^= b.bits() as u8;
                }
            }
            v
        })
        .collect();
    rset.sort_unstable();
    let sset: Vec<u8> = rset.iter().copied().filter(|&v| !q.eval_f2(v)).collect();
    let q_minus_s: Vec<u8> = qset
        .iter()
        .copied()
        .filter(|v| sset.binary_search(v).is_err())
        .collect();
    let r_minus_s: Vec<u8> = rset
        .iter()
        .copied()
        .filter(|v| sset.binary_search(v).is_err())
        .collect();
    let y_factors: Vec<Vec<u8>> = [q_minus_s, r_minus_s, sset.clone()]
        .into_iter()
        .filter(|f| !f.is_empty())
        .collect();
    WittStrata { qset, rset, sset, y_factors }
}

/// Orthogonal group via the transitivity-accelerated search.
///
/// For each tuple p ∈ 𝒴 the proportionality conditions g·p0_j = λ_j·p_j give
/// i·n linear equations in n² + i unknowns (matrix entries plus scaling
/// factors); the affine solution space is enumerated and filtered.
pub fn orth_fast(q: &QuadraticForm) -> Result<OrthGroup, OrthError> {
    let n = q.vars();
    let strata = witt_strata(q);
    if strata.y_factors.is_empty() {
        return Err(OrthError::EmptyWitt);
    }
    let i = strata.num_factors();
    // Deterministic base: the lexicographically least member of 𝒴.
    let p0: Vec<u8> = strata.y_factors.iter().map(|f| f[0]).collect();
    let unknowns = n * n + i as u8;
    let g_mask: u64 = (1u64 << (n as u32 * n as u32)) - 1;
    let qv: Vec<bool> = (0u8..(1 << n)).map(|v| q.eval_f2(v)).collect();
    let mut elements = Vec::new();
    for p in strata.y_tuples() {
        let mut sys: Vec<(BinVector, bool)> = Vec::with_capacity(i * n as usize);
        for (j, (&base, &target)) in p0.iter().zip(p.iter()).enumerate() {
            for r in 0..n {
                let mut mask = (base as u32) << (r * n);
                if target >> r & 1 != 0 {
                    mask |= 1 << (n * n + j as u8);
                }
                sys.push((BinVector::new(unknowns, mask), false));
            }
        }
        let sol = solve_affine(unknowns, &sys).expect("base tuple components independent");
        for x in sol.iter() {
            let g = matrix_from_code(n, x as u64 & g_mask);
            if preserves(&qv, &g, n) && g.is_invertible() {
                elements.push(g);
            }
        }
    }
    elements.sort_unstable();
    debug_assert!(elements.windows(2).all(|w| w[0] != w[1]));
    Ok(OrthGroup { form: *q, elements, method: GroupMethod::Transitivity })
}

/// Orbit decomposition of a G-closed form set; representatives are the
/// minimum coefficient ids of their orbits.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    representatives: Vec<QuadraticForm>,
    orbit_of: Vec<u16>,
}

impl OrbitPartition {
    pub fn representatives(&self) -> &[QuadraticForm] {
        &self.representatives
    }

    /// Index into `representatives` of the orbit containing the form.
    pub fn orbit_index(&self, q: &QuadraticForm) -> Option<usize> {
        let idx = self.orbit_of[q.coeffs() as usize];
        (idx != u16::MAX).then_some(idx as usize)
    }

    pub fn orbit_count(&self) -> usize {
        self.representatives.len()
    }
}

/// Decompose a form set into orbits under the group.
///
/// The set must be closed under the action; a violation signals a
/// classification bug upstream and is reported as an error.
pub fn orbit_representatives(
    group: &OrthGroup,
    forms: &[QuadraticForm],
) -> Result<OrbitPartition, OrthError> {
    let mut member = vec![false; 1 << 15];
    for f in forms {
        member[f.coeffs() as usize] = true;
    }
    let mut sorted: Vec<QuadraticForm> = forms.to_vec();
    sorted.sort_unstable();
    let mut orbit_of = vec![u16::MAX; 1 << 15];
    let mut representatives = Vec::new();
    for f in &sorted {
        if orbit_of[f.coeffs() as usize] != u16::MAX {
            continue;
        }
        let rep_idx = representatives.len() as u16;
        representatives.push(*f);
        for g in &group.elements {
            let img = f.substitute(g);
            if !member[img.coeffs() as usize] {
                return Err(OrthError::FormsNotClosed(img.coeffs()));
            }
            orbit_of[img.coeffs() as usize] = rep_idx;
        }
    }
    Ok(OrbitPartition { representatives, orbit_of })
}

/// Discard Q1 itself and every representative whose span with Q1 contains a
/// nonzero form of disallowed type; the span of two distinct forms over F_2
/// is {Q, Q1, Q1+Q}.
pub fn span_discard(
    q1: &QuadraticForm,
    reps: &[QuadraticForm],
    allowed: &[FormType],
) -> Vec<QuadraticForm> {
    let ok = |t: FormType| allowed.contains(&t);
    reps.iter()
        .copied()
        .filter(|q| {
            if q == q1 {
                return false;
            }
            let sum = QuadraticForm::new(q1.vars(), q1.coeffs() ^ q.coeffs()).expect("same arity");
            ok(q1.classify()) && ok(q.classify()) && !sum.is_zero() && ok(sum.classify())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quadform::{build_type_table, FormType};

    fn form5(terms: &[(u8, u8)]) -> QuadraticForm {
        QuadraticForm::from_terms(5, terms)
    }

    fn type_i() -> QuadraticForm {
        form5(&[(0, 1), (2, 2)])
    }
    fn type_ii() -> QuadraticForm {
        form5(&[(0, 1), (2, 3)])
    }
    fn type_iii() -> QuadraticForm {
        form5(&[(0, 1), (2, 2), (2, 3), (3, 3)])
    }
    fn type_iv() -> QuadraticForm {
        form5(&[(0, 1), (2, 3), (4, 4)])
    }

    #[test]
    fn act_examples() {
        let q = type_i();
        let id = BinMatrix::identity(5);
        assert_eq!(act(&id, &q).unwrap(), q);
        // Swapping v and w fixes vw + x^2.
        let swap = BinMatrix::from_rows(5, &[0b00010, 0b00001, 0b00100, 0b01000, 0b10000]);
        assert_eq!(act(&swap, &q).unwrap(), q);
        assert_eq!(act(&BinMatrix::zero(5), &q), Err(OrthError::SingularMatrix));
    }

    #[test]
    fn act_inverse_round_trip() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(31);
        let mut done = 0;
        while done < 100 {
            let rows: [u8; 5] = core::array::from_fn(|_| rng.gen_range(0..32) as u8);
            let g = BinMatrix::from_rows(5, &rows);
            let Some(ginv) = g.invert() else { continue };
            done += 1;
            let q = QuadraticForm::new(5, rng.gen_range(1..(1 << 15))).unwrap();
            assert_eq!(act(&g, &act(&ginv, &q).unwrap()).unwrap(), q);
        }
    }

    /// Brute-force oracle over all of GL_2(F_2): O(xy) has two elements.
    #[test]
    fn orth_of_xy_in_two_variables() {
        let q = QuadraticForm::from_terms(2, &[(0, 1)]);
        let mut by_definition = Vec::new();
        for code in 0..16u64 {
            let g = matrix_from_code(2, code);
            if g.is_invertible() && (0..4u8).all(|v| q.eval_f2(g.apply(v)) == q.eval_f2(v)) {
                by_definition.push(g);
            }
        }
        by_definition.sort_unstable();
        assert_eq!(by_definition.len(), 2);
        let grp = orth_naive(&q);
        assert_eq!(grp.elements(), &by_definition[..]);
        let fast = orth_fast(&q).unwrap();
        assert_eq!(fast.elements(), grp.elements());
    }

    #[test]
    fn witt_strata_examples() {
        // vw + x^2: the strata sizes of the running example.
        let s = witt_strata(&type_i());
        assert_eq!(s.y_factors.len(), 3);
        assert_eq!(s.y_factors[0].len(), 12); // Q \ S
        assert_eq!(s.y_factors[1].len(), 4); // R \ S
        assert_eq!(s.y_factors[2].len(), 3); // S
        assert_eq!(s.y_size(), 144);
        assert_eq!(s.candidate_space(5), 144 << 13);
        assert_eq!(s.candidate_space(5), 1_179_648);

        // vw + xy + z^2: S empty, R is the single z point, two factors.
        let s = witt_strata(&type_iv());
        assert!(s.sset.is_empty());
        assert_eq!(s.rset, alloc::vec![0b10000]);
        assert_eq!(s.num_factors(), 2);

        // vw + xy in 4 variables is strictly non-degenerate: Y = Q.
        let q = QuadraticForm::from_terms(4, &[(0, 1), (2, 3)]);
        let s = witt_strata(&q);
        assert!(s.rset.is_empty());
        assert_eq!(s.num_factors(), 1);
        assert_eq!(s.y_factors[0], s.qset);
    }

    #[test]
    fn fast_orders_match_published_table() {
        assert_eq!(orth_fast(&type_iii()).unwrap().order(), 1920);
        assert_eq!(orth_fast(&type_iv()).unwrap().order(), 720);
    }

    #[test]
    fn base_tuple_system_has_dimension_13() {
        // For vw + x^2 the proportionality system g·p0 = λp has 25 + 3
        // unknowns and rank 15, leaving a 13-dimensional solution space.
        let q = type_i();
        let strata = witt_strata(&q);
        let p0: alloc::vec::Vec<u8> = strata.y_factors.iter().map(|f| f[0]).collect();
        let unknowns = 25 + 3;
        let mut sys: alloc::vec::Vec<(crate::bitlinalg::BinVector, bool)> = alloc::vec::Vec::new();
        for (j, &base) in p0.iter().enumerate() {
            for r in 0..5u8 {
                let mut mask = (base as u32) << (r * 5);
                if p0[j] >> r & 1 != 0 {
                    mask |= 1 << (25 + j as u8);
                }
                sys.push((crate::bitlinalg::BinVector::new(unknowns, mask), false));
            }
        }
        let sol = crate::bitlinalg::solve_affine(unknowns, &sys).unwrap();
        assert_eq!(sol.dimension(), 13);
    }

    #[test]
    fn identity_always_present() {
        for q in [type_i(), type_ii(), type_iii(), type_iv()] {
            let g = orth_fast(&q).unwrap();
            assert!(g.contains(&BinMatrix::identity(5)));
        }
    }

    #[test]
    fn naive_fast_agree_dim4() {
        for terms in [
            &[(0u8, 1u8), (2, 3)][..],          // xy + zw
            &[(0, 1), (2, 2)][..],              // xy + z^2
            &[(0, 1), (2, 2), (2, 3), (3, 3)][..], // xy + N(z,w)
        ] {
            let q = QuadraticForm::from_terms(4, terms);
            let naive = orth_naive(&q);
            let fast = orth_fast(&q).unwrap();
            assert_eq!(naive.elements(), fast.elements());
        }
    }

    #[test]
    fn group_axioms_sampled() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(17);
        for q in [type_iii(), type_iv()] {
            let grp = orth_fast(&q).unwrap();
            assert_eq!(9_999_360 % grp.order(), 0);
            for _ in 0..200 {
                let a = grp.elements()[rng.gen_range(0..grp.order())];
                let b = grp.elements()[rng.gen_range(0..grp.order())];
                assert!(grp.contains(&a.mul(&b)));
                assert!(grp.contains(&a.invert().unwrap()));
            }
        }
    }

    #[test]
    fn transitivity_on_y_exhaustive_small() {
        // Exhaustive over Y x Y via full reachability sets, for the two
        // census groups; the remaining normal forms run in the acceptance
        // suite.
        for q in [type_iii(), type_iv()] {
            let grp = orth_fast(&q).unwrap();
            let strata = witt_strata(&q);
            let tuples = strata.y_tuples();
            for t in &tuples {
                let mut reached: Vec<Vec<u8>> = grp
                    .elements()
                    .iter()
                    .map(|g| t.iter().map(|&p| g.apply(p)).collect())
                    .collect();
                reached.sort_unstable();
                reached.dedup();
                assert_eq!(reached.len(), tuples.len(), "orbit of {:?} is not all of Y", t);
            }
        }
    }

    #[test]
    fn orbit_representatives_reject_unclosed_sets() {
        // A single non-fixed form is not action-closed.
        let q1 = type_iv();
        let grp = orth_fast(&q1).unwrap();
        let lone = QuadraticForm::new(5, 0x4078).unwrap();
        assert_eq!(lone.classify(), FormType::IV);
        match orbit_representatives(&grp, &[lone]) {
            Err(OrthError::FormsNotClosed(_)) => {}
            other => panic!("expected closure error, got {:?}", other.map(|p| p.orbit_count())),
        }
    }

    #[test]
    fn block_decomposition_of_isometries() {
        // In a basis adapted to U ⊕ S, no isometry maps S into U.
        for q in [type_i(), type_ii(), type_iii()] {
            let grp = orth_fast(&q).unwrap();
            let report = q.normal_form().unwrap();
            let basis = report.transform;
            let inv = basis.invert().unwrap();
            let m = report.m;
            for g in grp.elements() {
                let adapted = inv.mul(g).mul(&basis);
                for r in 0..m {
                    for c in m..5 {
                        assert!(!adapted.get(r, c), "S leaks into U for {}", g.render());
                    }
                }
            }
        }
    }

    #[test]
    fn orbit_representatives_and_discard_counts() {
        let table = build_type_table();
        // Type III case: O(Q1) acts on forms of type III or IV.
        let q1 = type_iii();
        let grp = orth_fast(&q1).unwrap();
        let forms: Vec<QuadraticForm> = table
            .forms_where(|t| t >= FormType::III)
            .into_iter()
            .map(|c| QuadraticForm::new(5, c).unwrap())
            .collect();
        let part = orbit_representatives(&grp, &forms).unwrap();
        let reps = span_discard(&q1, part.representatives(), &[FormType::III, FormType::IV]);
        assert_eq!(reps.len(), 17);

        // Type IV case: O(Q1) acts on forms of type IV.
        let q1 = type_iv();
        let grp = orth_fast(&q1).unwrap();
        let forms: Vec<QuadraticForm> = table
            .forms_where(|t| t == FormType::IV)
            .into_iter()
            .map(|c| QuadraticForm::new(5, c).unwrap())
            .collect();
        let part = orbit_representatives(&grp, &forms).unwrap();
        let reps = span_discard(&q1, part.representatives(), &[FormType::IV]);
        assert_eq!(reps.len(), 10);

        // Orbit sizes partition the acted-on set.
        let mut total = 0usize;
        for (i, _) in part.representatives().iter().enumerate() {
            total += forms
                .iter()
                .filter(|f| part.orbit_index(f) == Some(i))
                .count();
        }
        assert_eq!(total, forms.len());
    }

    #[test]
    fn singleton_orbit() {
        let q1 = type_iv();
        let grp = orth_fast(&q1).unwrap();
        let part = orbit_representatives(&grp, &[q1]).unwrap();
        assert_eq!(part.orbit_count(), 1);
        assert_eq!(part.representatives()[0], q1);
    }

    #[test]
    fn orbit_stabilizer_sampled() {
        let q1 = type_iv();
        let grp = orth_fast(&q1).unwrap();
        let table = build_type_table();
        let forms: Vec<QuadraticForm> = table
            .forms_where(|t| t == FormType::IV)
            .into_iter()
            .map(|c| QuadraticForm::new(5, c).unwrap())
            .collect();
        let part = orbit_representatives(&grp, &forms).unwrap();
        for rep in part.representatives().iter().take(3) {
            let orbit: usize = {
                let idx = part.orbit_index(rep).unwrap();
                forms.iter().filter(|f| part.orbit_index(f) == Some(idx)).count()
            };
            let stab = grp
                .elements()
                .iter()
                .filter(|g| rep.substitute(g) == *rep)
                .count();
            assert_eq!(orbit * stab, grp.order());
        }
    }

    #[test]
    #[ignore = "slow tier: naive O(Q) over 2^25 matrices for n=5 forms"]
    fn naive_fast_agree_dim5_long() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(41);
        let table = build_type_table();
        let mut picks: Vec<QuadraticForm> =
            alloc::vec![type_i(), type_ii(), type_iii(), type_iv()];
        for t in [FormType::I, FormType::II, FormType::III, FormType::IV] {
            let pool = table.forms_where(|x| x == t);
            for _ in 0..20 {
                let c = pool[rng.gen_range(0..pool.len())];
                picks.push(QuadraticForm::new(5, c).unwrap());
            }
        }
        for q in picks {
            let naive = orth_naive(&q);
            let fast = orth_fast(&q).unwrap();
            assert_eq!(naive.elements(), fast.elements(), "mismatch for {:04x}", q.coeffs());
        }
    }
}
