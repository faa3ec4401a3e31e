use std::fmt;

use serde::{Deserialize, Serialize};

use super::enumerate::{for_each_in_span, partial_min_weight, weight_extrema};
use super::matrix::{rref_in_place, Matrix};
use super::vector::Codeword;
use crate::error::{check_budget, Error, Result};
use crate::gf2e::FieldSpec;

/// Default enumeration budget: at most 2^24 codewords per exhaustive scan.
pub const DEFAULT_CAP: u128 = 1 << 24;

/// A linear code C ⊆ F_q^n, held as its reduced row-echelon generator matrix.
///
/// The generator rows are canonical, so two codes are equal exactly when
/// their `LinearCode` values compare equal.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "CodeFile", into = "CodeFile")]
pub struct LinearCode {
    spec: FieldSpec,
    n: usize,
    gen: Vec<Codeword>,
    pivots: Vec<usize>,
}

/// On-disk form of a code: `{"field": {...}, "length": n, "generators": [[...], ...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CodeFile {
    pub field: FieldSpec,
    pub length: usize,
    pub generators: Vec<Vec<u32>>,
}

impl TryFrom<CodeFile> for LinearCode {
    type Error = Error;
    fn try_from(f: CodeFile) -> Result<Self> {
        LinearCode::from_generators(f.field, f.length, &f.generators)
    }
}

impl From<LinearCode> for CodeFile {
    fn from(c: LinearCode) -> Self {
        CodeFile { field: c.spec, length: c.n, generators: c.gen.iter().map(|g| g.values()).collect() }
    }
}

impl LinearCode {
    /// Row space of `rows`; dependent and duplicate rows collapse.
    pub fn from_generators(spec: FieldSpec, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        let m = Matrix::new(spec, n, rows)?;
        Ok(Self::from_rows(spec, n, m.into_rows()))
    }

    pub fn from_codewords(spec: FieldSpec, n: usize, rows: Vec<Codeword>) -> Result<Self> {
        let m = Matrix::from_rows(spec, n, rows)?;
        Ok(Self::from_rows(spec, n, m.into_rows()))
    }

    pub(crate) fn from_rows(spec: FieldSpec, n: usize, mut rows: Vec<Codeword>) -> Self {
        let pivots = rref_in_place(&mut rows, n);
        LinearCode { spec, n, gen: rows, pivots }
    }

    pub fn zero(spec: FieldSpec, n: usize) -> Self {
        LinearCode { spec, n, gen: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(spec: FieldSpec, n: usize) -> Self {
        Self::from_rows(spec, n, Matrix::identity(spec, n).into_rows())
    }

    /// The repetition code spanned by the all-ones vector.
    pub fn repetition(spec: FieldSpec, n: usize) -> Self {
        if n == 0 {
            return Self::zero(spec, 0);
        }
        Self::from_rows(spec, n, vec![Codeword::ones(spec, n)])
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.gen.len()
    }

    pub fn generators(&self) -> &[Codeword] {
        &self.gen
    }

    pub fn generator_matrix(&self) -> Matrix {
        Matrix::from_rows(self.spec, self.n, self.gen.clone()).expect("canonical rows are consistent")
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.gen.is_empty()
    }

    fn check_same(&self, other: &LinearCode) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::FieldMismatch(self.spec.s(), other.spec.s()));
        }
        if self.n != other.n {
            return Err(Error::LengthMismatch { expected: self.n, found: other.n });
        }
        Ok(())
    }

    fn check_word(&self, v: &Codeword) -> Result<()> {
        if v.spec() != self.spec {
            return Err(Error::FieldMismatch(self.spec.s(), v.spec().s()));
        }
        if v.len() != self.n {
            return Err(Error::LengthMismatch { expected: self.n, found: v.len() });
        }
        Ok(())
    }

    /// `sum_i msg_i * g_i` over the canonical generators.
    pub fn encode(&self, msg: &[u32]) -> Result<Codeword> {
        self.generator_matrix().left_mul(msg)
    }

    /// Message coordinates of a codeword: its values on the pivot columns.
    pub fn message_of(&self, v: &Codeword) -> Vec<u32> {
        self.pivots.iter().map(|&p| v.get(p)).collect()
    }

    /// Residue of `v` after eliminating the pivot columns; zero iff `v ∈ C`.
    /// Two vectors share a coset of C exactly when their residues agree.
    pub fn reduce(&self, v: &Codeword) -> Codeword {
        let mut r = v.clone();
        for (g, &p) in self.gen.iter().zip(&self.pivots) {
            match r.get(p) {
                0 => {}
                1 => r.xor_assign(g),
                c => r.xor_assign(&g.scale(c)),
            }
        }
        r
    }

    pub fn contains_word(&self, v: &Codeword) -> Result<bool> {
        self.check_word(v)?;
        Ok(self.reduce(v).is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &LinearCode) -> Result<bool> {
        self.check_same(other)?;
        Ok(other.gen.iter().all(|g| self.reduce(g).is_zero()))
    }

    /// The dual code under the standard bilinear form.
    pub fn dual(&self) -> LinearCode {
        let mut is_pivot = vec![false; self.n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let rows = (0..self.n)
            .filter(|&j| !is_pivot[j])
            .map(|j| {
                let mut v = Codeword::zeros(self.spec, self.n);
                v.set(j, 1);
                for (g, &p) in self.gen.iter().zip(&self.pivots) {
                    v.set(p, g.get(j));
                }
                v
            })
            .collect();
        Self::from_rows(self.spec, self.n, rows)
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_same(other)?;
        let rows = self.gen.iter().chain(&other.gen).cloned().collect();
        Ok(Self::from_rows(self.spec, self.n, rows))
    }

    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        Ok(self.dual().sum(&other.dual())?.dual())
    }

    /// `A ⋆ B`, spanned by the products of basis pairs.
    pub fn star(&self, other: &LinearCode) -> Result<LinearCode> {
        self.check_same(other)?;
        let same = self == other;
        let mut rows = Vec::with_capacity(self.dim() * other.dim());
        for (i, a) in self.gen.iter().enumerate() {
            let start = if same { i } else { 0 };
            for b in &other.gen[start..] {
                rows.push(a.star_unchecked(b));
            }
        }
        Ok(Self::from_rows(self.spec, self.n, rows))
    }

    /// `C^{⋆t}`, with `C^{⋆0}` the repetition code.
    pub fn star_power(&self, t: usize) -> LinearCode {
        let mut acc = LinearCode::repetition(self.spec, self.n);
        for _ in 0..t {
            acc = self.star(&acc).expect("same field and length");
        }
        acc
    }

    /// `{a^j g_i}`: an F_2-basis of C viewed as a binary space.
    pub fn f2_basis(&self) -> Vec<Codeword> {
        let mut out = Vec::with_capacity(self.dim() * self.spec.s() as usize);
        for g in &self.gen {
            for j in 0..self.spec.s() {
                out.push(g.scale(self.spec.alpha_pow(j)));
            }
        }
        out
    }

    /// The binary trace code `tr(C)`.
    pub fn trace_code(&self) -> LinearCode {
        let rows = self.f2_basis().iter().map(Codeword::trace).collect();
        Self::from_rows(FieldSpec::binary(), self.n, rows)
    }

    /// The binary subfield subcode `C ∩ F_2^n`.
    ///
    /// A binary `x` lies in C iff `H x = 0` over F_q, which splits into one
    /// binary equation per bit-plane of each parity-check row.
    pub fn subfield_subcode(&self) -> LinearCode {
        let binary = FieldSpec::binary();
        let checks: Vec<Codeword> = self
            .dual()
            .gen
            .iter()
            .flat_map(|h| (0..self.spec.s() as usize).map(move |p| plane_as_binary(h, p)))
            .collect();
        Self::from_rows(binary, self.n, checks).dual()
    }

    /// `C ⊗ F_q` for a binary code `C`.
    pub fn extend_scalars(&self, spec: FieldSpec) -> Result<LinearCode> {
        if !self.spec.is_binary() {
            return Err(Error::NotBinary(self.spec.s()));
        }
        let rows = self.gen.iter().map(|g| g.embed(spec)).collect::<Result<Vec<_>>>()?;
        Ok(Self::from_rows(spec, self.n, rows))
    }

    /// Image under the componentwise Frobenius map `x -> x^2`.
    pub fn frobenius_image(&self) -> LinearCode {
        Self::from_rows(self.spec, self.n, self.gen.iter().map(Codeword::frobenius).collect())
    }

    /// Closed under componentwise squaring.
    pub fn is_galois_invariant(&self) -> bool {
        self.gen.iter().all(|g| self.reduce(&g.frobenius()).is_zero())
    }

    pub fn is_self_orthogonal(&self) -> bool {
        self.gen
            .iter()
            .enumerate()
            .all(|(i, a)| self.gen[i..].iter().all(|b| a.inner_unchecked(b) == 0))
    }

    /// Every codeword has coordinate sum zero, i.e. the all-ones vector lies in `C^⊥`.
    pub fn is_sum_zero(&self) -> bool {
        self.n == 0 || self.dual().reduce(&Codeword::ones(self.spec, self.n)).is_zero()
    }

    /// Binary codes only: every codeword has even weight.
    pub fn is_even_binary(&self) -> Result<bool> {
        if !self.spec.is_binary() {
            return Err(Error::NotBinary(self.spec.s()));
        }
        Ok(self.is_sum_zero())
    }

    /// Subcode of words vanishing outside `keep`, restricted to `keep`.
    pub fn shorten(&self, keep: &[usize]) -> LinearCode {
        let mut kept = vec![false; self.n];
        for &k in keep {
            kept[k] = true;
        }
        let outside: Vec<usize> = (0..self.n).filter(|&i| !kept[i]).collect();
        let order: Vec<usize> = outside.iter().chain(keep).copied().collect();
        let mut rows: Vec<Codeword> = self.gen.iter().map(|g| g.project(&order)).collect();
        let pivots = rref_in_place(&mut rows, self.n);
        let tail: Vec<usize> = (outside.len()..self.n).collect();
        let sub = rows
            .iter()
            .zip(&pivots)
            .filter(|(_, &p)| p >= outside.len())
            .map(|(r, _)| r.project(&tail))
            .collect();
        Self::from_rows(self.spec, keep.len(), sub)
    }

    /// Restriction of every codeword to `cols`.
    pub fn puncture_to(&self, cols: &[usize]) -> LinearCode {
        Self::from_rows(self.spec, cols.len(), self.gen.iter().map(|g| g.project(cols)).collect())
    }

    /// Every codeword, zero first, in Gray-code order.
    pub fn codewords(&self, cap: u128) -> Result<Vec<Codeword>> {
        check_budget(self.spec.q() as u64, self.dim(), cap)?;
        if self.is_zero() {
            return Ok(vec![Codeword::zeros(self.spec, self.n)]);
        }
        let mut out = Vec::with_capacity(1 << (self.dim() * self.spec.s() as usize));
        for_each_in_span(&self.f2_basis(), |_, v| out.push(v.clone()));
        Ok(out)
    }

    /// Exact minimum distance by exhaustive enumeration.
    pub fn min_distance(&self, cap: u128) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroCode);
        }
        check_budget(self.spec.q() as u64, self.dim(), cap)?;
        Ok(weight_extrema(&self.f2_basis(), 0).expect("nonzero code").0)
    }

    /// Largest weight of any codeword (0 for the zero code).
    pub fn max_weight(&self, cap: u128) -> Result<usize> {
        check_budget(self.spec.q() as u64, self.dim(), cap)?;
        Ok(weight_extrema(&self.f2_basis(), 0).map_or(0, |(_, hi)| hi))
    }

    /// F_2-basis of `self` ordered as (basis of `sub`, basis of a complement).
    fn basis_over(&self, sub: &LinearCode) -> Result<(Vec<Codeword>, usize)> {
        if !self.contains(sub)? {
            return Err(Error::NotNested);
        }
        let residues: Vec<Codeword> = self.gen.iter().map(|g| sub.reduce(g)).collect();
        let complement = Self::from_rows(self.spec, self.n, residues);
        let mut basis = sub.f2_basis();
        let low = basis.len();
        basis.extend(complement.f2_basis());
        Ok((basis, low))
    }

    /// `min{wt(c) : c ∈ self \ sub}`; `None` when `sub = self`.
    pub fn min_weight_outside(&self, sub: &LinearCode, cap: u128) -> Result<Option<usize>> {
        let (basis, low) = self.basis_over(sub)?;
        check_budget(self.spec.q() as u64, self.dim(), cap)?;
        Ok(weight_extrema(&basis, low).map(|(lo, _)| lo))
    }

    /// Upper bound on [`min_weight_outside`](Self::min_weight_outside) from the
    /// first `cap` vectors of the enumeration; exact when the full scan fits.
    pub fn min_weight_outside_bounded(&self, sub: &LinearCode, cap: u128) -> Result<(Option<usize>, bool)> {
        let (basis, low) = self.basis_over(sub)?;
        if check_budget(self.spec.q() as u64, self.dim(), cap).is_ok() {
            return Ok((weight_extrema(&basis, low).map(|(lo, _)| lo), true));
        }
        let limit = u64::try_from(cap).unwrap_or(u64::MAX);
        Ok((partial_min_weight(&basis, low, limit), false))
    }
}

fn plane_as_binary(v: &Codeword, p: usize) -> Codeword {
    let mut out = Codeword::zeros(FieldSpec::binary(), v.len());
    for i in 0..v.len() {
        if v.get(i) >> p & 1 == 1 {
            out.set(i, 1);
        }
    }
    out
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over {}", self.n, self.dim(), self.spec)?;
        for g in &self.gen {
            writeln!(f, "  {:?}", g.values())?;
        }
        Ok(())
    }
}

impl fmt::Display for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}, {}] code over {}", self.n, self.dim(), self.spec)?;
        for g in &self.gen {
            writeln!(f, "  {g}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn f4() -> FieldSpec {
        FieldSpec::with_degree(2).unwrap()
    }

    fn code(spec: FieldSpec, rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::from_generators(spec, rows[0].len(), rows).unwrap()
    }

    fn arb_word(s: u32, n: usize) -> impl Strategy<Value = Codeword> {
        let spec = FieldSpec::with_degree(s).unwrap();
        proptest::collection::vec(0..spec.q(), n).prop_map(move |v| Codeword::from_values(spec, &v).unwrap())
    }

    fn arb_code(s: u32, n: usize, kmax: usize) -> impl Strategy<Value = LinearCode> {
        let q = 1u32 << s;
        prop::collection::vec(prop::collection::vec(0..q, n), 0..=kmax).prop_map(move |rows| {
            let spec = FieldSpec::with_degree(s).unwrap();
            LinearCode::from_generators(spec, n, &rows).unwrap()
        })
    }

    #[test]
    fn hamming_code_parameters() {
        let h = code(
            FieldSpec::binary(),
            &[vec![1, 0, 0, 0, 0, 1, 1], vec![0, 1, 0, 0, 1, 0, 1], vec![0, 0, 1, 0, 1, 1, 0], vec![0, 0, 0, 1, 1, 1, 1]],
        );
        assert_eq!(h.dim(), 4);
        assert_eq!(h.min_distance(DEFAULT_CAP).unwrap(), 3);
        assert_eq!(h.max_weight(DEFAULT_CAP).unwrap(), 7);
        let d = h.dual();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.min_distance(DEFAULT_CAP).unwrap(), 4);
        assert!(d.is_self_orthogonal());
        assert!(h.contains(&d).unwrap());
        assert_eq!(h.min_weight_outside(&d, DEFAULT_CAP).unwrap(), Some(3));
        assert_eq!(d.min_weight_outside(&d, DEFAULT_CAP).unwrap(), None);
    }

    #[test]
    fn zero_code_has_no_distance() {
        let z = LinearCode::zero(f4(), 4);
        assert!(matches!(z.min_distance(DEFAULT_CAP), Err(Error::ZeroCode)));
        assert_eq!(z.dual(), LinearCode::full(f4(), 4));
        assert_eq!(z.codewords(DEFAULT_CAP).unwrap().len(), 1);
    }

    #[test]
    fn budget_is_enforced() {
        let full = LinearCode::full(FieldSpec::with_degree(4).unwrap(), 7);
        assert!(matches!(full.min_distance(1 << 24), Err(Error::BudgetExceeded { .. })));
    }

    #[test]
    fn star_power_zero_is_repetition() {
        let c = code(f4(), &[vec![1, 2, 3]]);
        assert_eq!(c.star_power(0), LinearCode::repetition(f4(), 3));
        assert_eq!(c.star_power(1), c);
    }

    #[test]
    fn galois_invariance_is_frobenius_closure() {
        let inv = code(f4(), &[vec![1, 1, 0], vec![0, 1, 1]]);
        assert!(inv.is_galois_invariant());
        // Galois-invariant, yet its square is the whole space.
        assert_eq!(inv.star_power(2), LinearCode::full(f4(), 3));
        let not_inv = code(f4(), &[vec![1, 2]]);
        assert!(!not_inv.is_galois_invariant());
    }

    #[test]
    fn trace_code_of_f4_line() {
        // span{(1, a)}: traces of (1, a) and (a, a^2) = (0, 1) and (1, 1).
        let c = code(f4(), &[vec![1, 2]]);
        assert_eq!(c.trace_code(), LinearCode::full(FieldSpec::binary(), 2));
        assert_eq!(c.subfield_subcode(), LinearCode::zero(FieldSpec::binary(), 2));
    }

    #[test]
    fn canonical_form_ignores_generator_choice() {
        // Different generator choices give the same code and the same square.
        let a = code(f4(), &[vec![1, 2]]);
        let b = code(f4(), &[vec![2, 3]]);
        assert_eq!(a, b);
        assert_eq!(a.star_power(2), b.star_power(2));
    }

    #[test]
    fn shorten_keeps_words_vanishing_outside() {
        let c = code(FieldSpec::binary(), &[vec![1, 1, 0, 0], vec![0, 1, 1, 0], vec![0, 0, 1, 1]]);
        let s = c.shorten(&[1, 2]);
        assert_eq!(s, code(FieldSpec::binary(), &[vec![1, 1]]));
        let p = c.puncture_to(&[0, 3]);
        assert_eq!(p, LinearCode::full(FieldSpec::binary(), 2));
    }

    #[test]
    fn serde_round_trip() {
        let c = code(f4(), &[vec![1, 2, 3, 0], vec![0, 1, 1, 1]]);
        let json = serde_json::to_string(&c).unwrap();
        let back: LinearCode = serde_json::from_str(&json).unwrap();
        assert_eq!(c, back);
        assert!(serde_json::from_str::<LinearCode>(
            r#"{"field":{"s":2,"primitive_poly":7},"length":2,"generators":[[1,4]]}"#
        )
        .is_err());
    }

    #[test]
    fn trace_monotonicity_has_no_converse() {
        let a = code(f4(), &[vec![1, 2]]);
        let b = code(f4(), &[vec![1, 0], vec![0, 2]]);
        assert_eq!(a.trace_code(), b.trace_code());
        assert_eq!(a.trace_code(), LinearCode::full(FieldSpec::binary(), 2));
        assert!(!a.contains(&b).unwrap());
    }

    fn brute_dual(c: &LinearCode) -> Vec<Codeword> {
        let spec = c.spec();
        let n = c.length();
        let q = spec.q() as usize;
        let words = c.codewords(DEFAULT_CAP).unwrap();
        (0..q.pow(n as u32))
            .map(|mut idx| {
                let vals: Vec<u32> = (0..n)
                    .map(|_| {
                        let v = (idx % q) as u32;
                        idx /= q;
                        v
                    })
                    .collect();
                Codeword::from_values(spec, &vals).unwrap()
            })
            .filter(|v| words.iter().all(|w| w.inner_unchecked(v) == 0))
            .collect()
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn dual_matches_brute_force(c in arb_code(2, 4, 3)) {
            let d = c.dual();
            prop_assert_eq!(d.dim() + c.dim(), 4);
            let brute = brute_dual(&c);
            prop_assert_eq!(brute.len(), 1usize << (2 * d.dim()));
            for v in &brute {
                prop_assert!(d.contains_word(v).unwrap());
            }
        }

        #[test]
        fn rref_is_idempotent(c in arb_code(3, 5, 4)) {
            let again = LinearCode::from_codewords(c.spec(), 5, c.generators().to_vec()).unwrap();
            prop_assert_eq!(&again, &c);
            prop_assert_eq!(c.dual().dual(), c);
        }

        #[test]
        fn delsarte_duality(c in arb_code(2, 6, 4)) {
            prop_assert_eq!(c.trace_code().dual(), c.dual().subfield_subcode());
        }

        #[test]
        fn subfield_subcode_inside_trace_code(c in arb_code(3, 5, 3)) {
            let sub = c.subfield_subcode();
            prop_assert!(c.trace_code().contains(&sub).unwrap());
            prop_assert!(c.contains(&sub.extend_scalars(c.spec()).unwrap()).unwrap());
        }

        #[test]
        fn star_adjunction(a in arb_code(2, 5, 3), b in arb_code(2, 5, 3)) {
            // (A ⋆ B)^⊥ = {x : A ⋆ x ⊆ B^⊥}, checked by dimension on both inclusions.
            let ab = a.star(&b).unwrap();
            prop_assert_eq!(b.star(&a).unwrap(), ab.clone());
            let bd = b.dual();
            for x in ab.dual().generators() {
                for g in a.generators() {
                    prop_assert!(bd.contains_word(&g.star_unchecked(x)).unwrap());
                }
            }
        }

        #[test]
        fn sum_and_intersection_dimensions(a in arb_code(2, 5, 3), b in arb_code(2, 5, 3)) {
            let s = a.sum(&b).unwrap();
            let i = a.intersection(&b).unwrap();
            prop_assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
            prop_assert!(a.contains(&i).unwrap() && b.contains(&i).unwrap());
            prop_assert!(s.contains(&a).unwrap() && s.contains(&b).unwrap());
        }

        #[test]
        fn galois_invariance_three_ways(c in arb_code(2, 4, 3)) {
            // Frobenius-closed iff generated by binary vectors iff tr(C) = C|F_2.
            let by_closure = c.is_galois_invariant();
            let sub = c.subfield_subcode();
            let by_subcode = sub.extend_scalars(c.spec()).unwrap() == c;
            let by_trace = c.trace_code() == sub;
            prop_assert_eq!(by_closure, by_subcode);
            prop_assert_eq!(by_closure, by_trace);
        }

        #[test]
        fn min_weight_outside_matches_scan(c in arb_code(1, 10, 5), sub_rows in 0usize..3) {
            let sub = LinearCode::from_codewords(c.spec(), 10, c.generators()[..sub_rows.min(c.dim())].to_vec()).unwrap();
            let words = c.codewords(DEFAULT_CAP).unwrap();
            let expect = words.iter().filter(|w| !sub.contains_word(w).unwrap()).map(Codeword::weight).min();
            prop_assert_eq!(c.min_weight_outside(&sub, DEFAULT_CAP).unwrap(), expect);
        }
        #[test]
        fn trace_is_monotone(b in arb_code(2, 5, 3), rows in 0usize..3) {
            let a = LinearCode::from_codewords(b.spec(), 5, b.generators()[..rows.min(b.dim())].to_vec()).unwrap();
            prop_assert!(b.trace_code().contains(&a.trace_code()).unwrap());
            prop_assert!(b.trace_code().dim() <= (2 * b.dim()).min(5));
        }

        #[test]
        fn star_cyclicity(a in arb_word(3, 6), b in arb_word(3, 6), c in arb_word(3, 6)) {
            let abc = a.star_unchecked(&b).inner_unchecked(&c);
            prop_assert_eq!(abc, b.star_unchecked(&c).inner_unchecked(&a));
            prop_assert_eq!(abc, c.star_unchecked(&a).inner_unchecked(&b));
        }
    }
}
