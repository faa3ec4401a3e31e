//! CSS and CSS-T predicates, CSS parameters and the rate/distance bounds.

use serde::{Serialize, Serializer};

use crate::codelin::{Codeword, LinearCode};
use crate::error::{check_budget, Error, Result};
use crate::gf2e::FieldSpec;

/// A nested pair `C2 ⊆ C1` over the same field and length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CssPair {
    c1: LinearCode,
    c2: LinearCode,
}

impl CssPair {
    pub fn new(c1: LinearCode, c2: LinearCode) -> Result<Self> {
        if !c1.contains(&c2)? {
            return Err(Error::NotNested);
        }
        Ok(CssPair { c1, c2 })
    }

    pub fn c1(&self) -> &LinearCode {
        &self.c1
    }

    pub fn c2(&self) -> &LinearCode {
        &self.c2
    }

    pub fn spec(&self) -> FieldSpec {
        self.c1.spec()
    }

    pub fn length(&self) -> usize {
        self.c1.length()
    }

    /// Number of logical qudits, `dim C1 - dim C2`.
    pub fn k(&self) -> usize {
        self.c1.dim() - self.c2.dim()
    }
}

pub fn is_css_pair(c1: &LinearCode, c2: &LinearCode) -> Result<bool> {
    c1.contains(c2)
}

/// Codewords `a, b ∈ C1` and `z ∈ C2` with `⟨tr(a) ⋆ tr(b), tr(z)⟩ = 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Witness {
    pub a: Codeword,
    pub b: Codeword,
    pub z: Codeword,
}

impl Witness {
    /// Recomputes the violated inner product and the membership claims.
    pub fn holds(&self, pair: &CssPair) -> bool {
        let ok = |c: &LinearCode, v: &Codeword| c.contains_word(v).unwrap_or(false);
        ok(pair.c1(), &self.a)
            && ok(pair.c1(), &self.b)
            && ok(pair.c2(), &self.z)
            && self.a.trace().star_unchecked(&self.b.trace()).inner_unchecked(&self.z.trace()) == 1
    }
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct W {
            a: Vec<u32>,
            b: Vec<u32>,
            z: Vec<u32>,
        }
        W { a: self.a.values(), b: self.b.values(), z: self.z.values() }.serialize(s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CsstVerdict {
    pub method: &'static str,
    pub is_csst: bool,
    pub witness: Option<Witness>,
}

impl CsstVerdict {
    fn from_witness(method: &'static str, witness: Option<Witness>) -> Self {
        CsstVerdict { method, is_csst: witness.is_none(), witness }
    }
}

fn require_binary(pair: &CssPair) -> Result<()> {
    if pair.spec().is_binary() {
        Ok(())
    } else {
        Err(Error::NotBinary(pair.spec().s()))
    }
}

/// First triple `(a, b, z)` in index order with `a_i ⋆ b_j` not orthogonal to
/// `z_l`, scanning `i ≤ j`. The traced vectors decide the inner product.
fn first_violation(ones: &[Codeword], twos: &[Codeword]) -> Option<(usize, usize, usize)> {
    let t1: Vec<Codeword> = ones.iter().map(Codeword::trace).collect();
    let t2: Vec<Codeword> = twos.iter().map(Codeword::trace).collect();
    for i in 0..t1.len() {
        for j in i..t1.len() {
            let ab = t1[i].star_unchecked(&t1[j]);
            if let Some(l) = t2.iter().position(|z| ab.inner_unchecked(z) == 1) {
                return Some((i, j, l));
            }
        }
    }
    None
}

/// Binary pairs: `C1 ⋆ C1 ⊆ C2^⊥`, with the first violating generator triple as witness.
pub fn csst_binary_star(pair: &CssPair) -> Result<CsstVerdict> {
    require_binary(pair)?;
    let g1 = pair.c1().generators();
    let g2 = pair.c2().generators();
    let witness = first_violation(g1, g2).map(|(i, j, l)| Witness { a: g1[i].clone(), b: g1[j].clone(), z: g2[l].clone() });
    Ok(CsstVerdict::from_witness("csst-binary-star", witness))
}

/// Binary pairs: `C2 ⊆ C1 ∩ (C1^{⋆2})^⊥`.
pub fn csst_binary_intersection(pair: &CssPair) -> Result<bool> {
    require_binary(pair)?;
    let square = pair.c1().star_power(2);
    pair.c1().intersection(&square.dual())?.contains(pair.c2())
}

/// Binary pairs, straight from the definition: every `x ∈ C2` has even weight
/// and the words of `C1^⊥` supported on `supp(x)` contain a self-dual code.
///
/// The second clause holds iff the shortened code `S_x` contains its own dual
/// within `supp(x)`; evenness of the support size is the first clause.
pub fn csst_binary_definition(pair: &CssPair, cap: u128) -> Result<bool> {
    require_binary(pair)?;
    let c1_dual = pair.c1().dual();
    for x in pair.c2().codewords(cap)? {
        let support = x.support();
        if support.len() % 2 == 1 {
            return Ok(false);
        }
        let s_x = c1_dual.shorten(&support);
        if !s_x.contains(&s_x.dual())? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `tr(C1) ⋆ tr(C1) ⊆ tr(C2)^⊥`.
///
/// Scans triples of the F_2-spanning sets `{a^j g}` of C1 and C2, whose
/// traces span the two trace codes, so a failure always comes with q-ary
/// codewords as witness.
pub fn csst_qary(pair: &CssPair) -> CsstVerdict {
    let b1 = pair.c1().f2_basis();
    let b2 = pair.c2().f2_basis();
    let witness = first_violation(&b1, &b2).map(|(i, j, l)| Witness { a: b1[i].clone(), b: b1[j].clone(), z: b2[l].clone() });
    CsstVerdict::from_witness("csst-qary", witness)
}

/// Necessary condition for CSS-T: `tr(C2)` is self-orthogonal.
pub fn trace_c2_self_orthogonal(c2: &LinearCode) -> bool {
    c2.trace_code().is_self_orthogonal()
}

/// Whether every coset state `|w + C2⟩` picks up a single phase under
/// `T^{⊗n}`: `wt(c) - 2 wt(a ⋆ c) ≡ 0 (mod 8)` for all `a ∈ tr(C1)`,
/// `c ∈ tr(C2)`. This is exactly what the state-vector oracle measures.
pub fn coset_phase_invariant(pair: &CssPair, cap: u128) -> Result<bool> {
    let t1 = pair.c1().trace_code();
    let t2 = pair.c2().trace_code();
    check_budget(2, t1.dim() + t2.dim(), cap)?;
    let words2 = t2.codewords(cap)?;
    if words2.iter().any(|c| c.weight() % 8 != 0) {
        return Ok(false);
    }
    let words1 = t1.codewords(cap)?;
    Ok(words1.iter().all(|a| words2.iter().all(|c| (a.star_unchecked(c).weight() % 4) == 0)))
}

/// Screening conditions observed for the other q-ary CSS-T notion: C2 has
/// zero coordinate sums, C1 is self-orthogonal, and every nonzero word of C2
/// has full support. These are necessary checks only.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BcrScreen {
    pub c2_sum_zero: bool,
    pub c1_self_orthogonal: bool,
    pub c2_full_support: bool,
}

pub fn bcr_screen(pair: &CssPair, cap: u128) -> Result<BcrScreen> {
    let full = if pair.c2().is_zero() { true } else { pair.c2().min_distance(cap)? == pair.length() };
    Ok(BcrScreen {
        c2_sum_zero: pair.c2().is_sum_zero(),
        c1_self_orthogonal: pair.c1().is_self_orthogonal(),
        c2_full_support: full,
    })
}

/// Parameters `[[n, k, d]]` of a CSS pair.
///
/// `d_z = min wt(C1 \ C2)`, `d_x = min wt(C2^⊥ \ C1^⊥)` and `d = min(d_x, d_z)`;
/// all three are `None` when `k = 0`. `d_perp` is the classical distance of
/// `C1^⊥`. When `exact` is false the distances are upper bounds from a
/// truncated enumeration.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CssParams {
    pub n: usize,
    pub k: usize,
    pub k1: usize,
    pub k2: usize,
    pub d: Option<usize>,
    pub d_x: Option<usize>,
    pub d_z: Option<usize>,
    pub d_perp: Option<usize>,
    pub exact: bool,
    pub rate: f64,
    pub rel_dist: Option<f64>,
}

fn params_from(pair: &CssPair, d_x: Option<usize>, d_z: Option<usize>, d_perp: Option<usize>, exact: bool) -> CssParams {
    let n = pair.length();
    let k = pair.k();
    let d = match (d_x, d_z) {
        (Some(x), Some(z)) => Some(x.min(z)),
        _ => None,
    };
    CssParams {
        n,
        k,
        k1: pair.c1().dim(),
        k2: pair.c2().dim(),
        d,
        d_x,
        d_z,
        d_perp,
        exact,
        rate: if n == 0 { 0.0 } else { k as f64 / n as f64 },
        rel_dist: d.map(|d| d as f64 / n as f64),
    }
}

/// Exact parameters; fails if any enumeration exceeds `cap`.
pub fn css_parameters(pair: &CssPair, cap: u128) -> Result<CssParams> {
    let c1_dual = pair.c1().dual();
    let d_z = pair.c1().min_weight_outside(pair.c2(), cap)?;
    let d_x = pair.c2().dual().min_weight_outside(&c1_dual, cap)?;
    let d_perp = if c1_dual.is_zero() { None } else { Some(c1_dual.min_distance(cap)?) };
    Ok(params_from(pair, d_x, d_z, d_perp, true))
}

/// Like [`css_parameters`] but never fails on budget: distances whose scan
/// exceeds `cap` become upper bounds and `exact` is cleared.
pub fn css_parameters_bounded(pair: &CssPair, cap: u128) -> Result<CssParams> {
    let c1_dual = pair.c1().dual();
    let (d_z, ez) = pair.c1().min_weight_outside_bounded(pair.c2(), cap)?;
    let (d_x, ex) = pair.c2().dual().min_weight_outside_bounded(&c1_dual, cap)?;
    let (d_perp, ep) = if c1_dual.is_zero() {
        (None, true)
    } else {
        c1_dual.min_weight_outside_bounded(&LinearCode::zero(c1_dual.spec(), c1_dual.length()), cap)?
    };
    Ok(params_from(pair, d_x, d_z, d_perp, ez && ex && ep))
}

/// One rate/distance inequality and its premise on the heaviest word of C2.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundClause {
    pub inequality: &'static str,
    pub premise: String,
    pub premise_met: bool,
    /// `None` when the premise fails or the clause cannot be decided.
    pub satisfied: Option<bool>,
    pub inconclusive: bool,
}

impl BoundClause {
    pub fn violated(&self) -> bool {
        self.premise_met && self.satisfied == Some(false)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    pub max_weight_c2: usize,
    pub d1: Option<usize>,
    pub d2: Option<usize>,
    pub clauses: Vec<BoundClause>,
}

impl BoundsReport {
    pub fn any_violated(&self) -> bool {
        self.clauses.iter().any(BoundClause::violated)
    }
}

/// Evaluates the three rate/distance inequalities for a CSS-T pair, in the
/// integer forms `2k + d ≤ n`, `2k + 2d ≤ n + 2` and `2k + 3d ≤ n + 4`.
///
/// Each applies when some `x ∈ C2` has weight at least `n + 1 - k2`,
/// `n - d2` or `n - d1` respectively. If `params.d` is only an upper bound,
/// a clause that fails with it is reported inconclusive.
pub fn bounds_check(pair: &CssPair, params: &CssParams, cap: u128) -> Result<BoundsReport> {
    let n = pair.length();
    let k2 = pair.c2().dim();
    let max_w = pair.c2().max_weight(cap)?;
    let d1 = if pair.c1().is_zero() { None } else { Some(pair.c1().min_distance(cap)?) };
    let d2 = if pair.c2().is_zero() { None } else { Some(pair.c2().min_distance(cap)?) };
    let premise = |threshold: Option<usize>| threshold.is_some_and(|t| max_w >= t);
    let k = params.k;
    let rows: [(&'static str, String, bool, usize, usize); 3] = [
        ("R + delta/2 <= 1/2", format!("max wt(C2) = {max_w} >= n + 1 - k2 = {}", n + 1 - k2), premise(Some(n + 1 - k2)), 1, n),
        (
            "R + delta <= 1/2 + 1/n",
            format!("max wt(C2) = {max_w} >= n - d2 = {:?}", d2.map(|d| n - d)),
            premise(d2.map(|d| n - d)),
            2,
            n + 2,
        ),
        (
            "R + 3 delta/2 <= 1/2 + 2/n",
            format!("max wt(C2) = {max_w} >= n - d1 = {:?}", d1.map(|d| n - d)),
            premise(d1.map(|d| n - d)),
            3,
            n + 4,
        ),
    ];
    let clauses = rows
        .into_iter()
        .map(|(inequality, premise, met, coeff, rhs)| {
            let holds = params.d.map(|d| 2 * k + coeff * d <= rhs);
            let (satisfied, inconclusive) = match (met, holds) {
                (false, _) => (None, false),
                (true, None) => (None, true),
                (true, Some(true)) => (Some(true), false),
                (true, Some(false)) if params.exact => (Some(false), false),
                (true, Some(false)) => (None, true),
            };
            BoundClause { inequality, premise, premise_met: met, satisfied, inconclusive }
        })
        .collect();
    Ok(BoundsReport { max_weight_c2: max_w, d1, d2, clauses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codelin::DEFAULT_CAP;
    use proptest::prelude::*;

    fn bin(rows: &[Vec<u32>]) -> LinearCode {
        LinearCode::from_generators(FieldSpec::binary(), rows[0].len(), rows).unwrap()
    }

    fn rm13() -> LinearCode {
        bin(&[
            vec![1, 1, 1, 1, 1, 1, 1, 1],
            vec![0, 1, 0, 1, 0, 1, 0, 1],
            vec![0, 0, 1, 1, 0, 0, 1, 1],
            vec![0, 0, 0, 0, 1, 1, 1, 1],
        ])
    }

    #[test]
    fn rm13_over_repetition_is_csst() {
        let pair = CssPair::new(rm13(), LinearCode::repetition(FieldSpec::binary(), 8)).unwrap();
        assert!(csst_binary_star(&pair).unwrap().is_csst);
        assert!(csst_binary_intersection(&pair).unwrap());
        assert!(csst_binary_definition(&pair, DEFAULT_CAP).unwrap());
        let p = css_parameters(&pair, DEFAULT_CAP).unwrap();
        assert_eq!((p.n, p.k), (8, 3));
        assert_eq!(p.d_z, Some(4));
        assert_eq!(p.d_x, Some(2));
        assert_eq!(p.d, Some(2));
        assert_eq!(p.d_perp, Some(4));
        let b = bounds_check(&pair, &p, DEFAULT_CAP).unwrap();
        assert!(b.clauses.iter().all(|c| c.premise_met && c.satisfied == Some(true)));
    }

    #[test]
    fn trivial_pairs() {
        let c = rm13();
        let same = CssPair::new(c.clone(), c.clone()).unwrap();
        assert_eq!(css_parameters(&same, DEFAULT_CAP).unwrap().k, 0);
        assert_eq!(css_parameters(&same, DEFAULT_CAP).unwrap().d, None);
        let zero = CssPair::new(c.clone(), LinearCode::zero(c.spec(), 8)).unwrap();
        assert!(csst_binary_star(&zero).unwrap().is_csst);
        assert!(csst_binary_definition(&zero, DEFAULT_CAP).unwrap());
        assert!(trace_c2_self_orthogonal(zero.c2()));
        assert!(matches!(CssPair::new(LinearCode::zero(c.spec(), 8), c), Err(Error::NotNested)));
    }

    #[test]
    fn witness_rechecks() {
        let c1 = LinearCode::full(FieldSpec::binary(), 4);
        let c2 = bin(&[vec![1, 1, 0, 0]]);
        let pair = CssPair::new(c1, c2).unwrap();
        let v = csst_binary_star(&pair).unwrap();
        assert!(!v.is_csst);
        assert!(v.witness.as_ref().unwrap().holds(&pair));
        assert!(!csst_binary_definition(&pair, DEFAULT_CAP).unwrap());
    }

    #[test]
    fn binary_methods_require_binary() {
        let f4 = FieldSpec::with_degree(2).unwrap();
        let pair = CssPair::new(LinearCode::full(f4, 2), LinearCode::zero(f4, 2)).unwrap();
        assert!(matches!(csst_binary_star(&pair), Err(Error::NotBinary(2))));
    }

    #[test]
    fn bell_pair_passes_star_but_not_phase() {
        let c = bin(&[vec![1, 1]]);
        let pair = CssPair::new(c.clone(), c).unwrap();
        assert!(csst_binary_star(&pair).unwrap().is_csst);
        assert!(!coset_phase_invariant(&pair, DEFAULT_CAP).unwrap());
    }

    fn arb_pair(s: u32, n: usize, k1: usize) -> impl Strategy<Value = CssPair> {
        let q = 1u32 << s;
        (prop::collection::vec(prop::collection::vec(0..q, n), 1..=k1), 0usize..=k1).prop_map(move |(rows, k2)| {
            let spec = FieldSpec::with_degree(s).unwrap();
            let c1 = LinearCode::from_generators(spec, n, &rows).unwrap();
            let c2 = LinearCode::from_codewords(spec, n, c1.generators()[..k2.min(c1.dim())].to_vec()).unwrap();
            CssPair::new(c1, c2).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn binary_characterizations_agree(pair in arb_pair(1, 8, 5)) {
            let star = csst_binary_star(&pair).unwrap().is_csst;
            prop_assert_eq!(star, csst_binary_intersection(&pair).unwrap());
            prop_assert_eq!(star, csst_binary_definition(&pair, DEFAULT_CAP).unwrap());
        }

        #[test]
        fn qary_matches_traced_binary(pair in arb_pair(2, 5, 3)) {
            let v = csst_qary(&pair);
            let traced = CssPair::new(pair.c1().trace_code(), pair.c2().trace_code()).unwrap();
            prop_assert_eq!(v.is_csst, csst_binary_star(&traced).unwrap().is_csst);
            if v.is_csst {
                prop_assert!(trace_c2_self_orthogonal(pair.c2()));
            } else {
                prop_assert!(v.witness.unwrap().holds(&pair));
            }
        }

        #[test]
        fn phase_invariance_implies_star(pair in arb_pair(2, 5, 3)) {
            if coset_phase_invariant(&pair, DEFAULT_CAP).unwrap() {
                prop_assert!(csst_qary(&pair).is_csst);
            }
        }

        #[test]
        fn bounded_params_match_exact(pair in arb_pair(1, 9, 5)) {
            let exact = css_parameters(&pair, DEFAULT_CAP).unwrap();
            let bounded = css_parameters_bounded(&pair, DEFAULT_CAP).unwrap();
            prop_assert_eq!(exact, bounded);
        }
    }
}
