//! Cyclic codes over F_q with odd length n, described by a generator
//! polynomial or by defining/generating sets of q-cyclotomic cosets.
//!
//! Roots of x^n - 1 live in the splitting field F_(q^ord), ord being the
//! multiplicative order of q mod n, represented as an F_(2^(s*ord)) into which
//! F_q is embedded through a root of its defining polynomial. The primitive
//! n-th root β is the smallest element (by integer encoding) of order n.

use std::collections::BTreeSet;

use log::warn;
use serde::{Deserialize, Serialize};

use crate::codelin::{Codeword, LinearCode};
use crate::csst::{css_parameters_bounded, csst_qary, CssPair, CssParams};
use crate::error::{check_budget, Error, Result};
use crate::gf2e::{FieldSpec, MAX_DEGREE};

/// Polynomial coefficients, constant term first.
pub type Poly = Vec<u32>;

fn trim(mut p: Poly) -> Poly {
    while p.last() == Some(&0) {
        p.pop();
    }
    p
}

/// Degree of a polynomial; `None` for the zero polynomial.
pub fn poly_degree(p: &[u32]) -> Option<usize> {
    p.iter().rposition(|&c| c != 0)
}

pub fn poly_mul(f: FieldSpec, a: &[u32], b: &[u32]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] ^= f.mul(x, y);
        }
    }
    trim(out)
}

/// Quotient and remainder of `a / b`.
pub fn poly_divrem(f: FieldSpec, a: &[u32], b: &[u32]) -> Result<(Poly, Poly)> {
    let db = poly_degree(b).ok_or(Error::ZeroInverse)?;
    let lead_inv = f.inv(b[db])?;
    let mut rem = trim(a.to_vec());
    let mut quot = vec![0; rem.len().saturating_sub(db).max(1)];
    while let Some(dr) = poly_degree(&rem) {
        if dr < db {
            break;
        }
        let c = f.mul(rem[dr], lead_inv);
        quot[dr - db] = c;
        for (i, &bi) in b[..=db].iter().enumerate() {
            rem[dr - db + i] ^= f.mul(c, bi);
        }
        rem = trim(rem);
    }
    Ok((trim(quot), rem))
}

pub fn poly_eval(f: FieldSpec, p: &[u32], x: u32) -> u32 {
    p.iter().rev().fold(0, |acc, &c| f.mul(acc, x) ^ c)
}

/// `x^n - 1`, which is `x^n + 1` in characteristic 2.
pub fn x_n_minus_one(n: usize) -> Poly {
    let mut p = vec![0; n + 1];
    p[0] = 1;
    p[n] = 1;
    p
}

fn check_coprime(n: usize, q: usize) -> Result<()> {
    if n == 0 || num_gcd(n, q) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    Ok(())
}

fn num_gcd(mut a: usize, mut b: usize) -> usize {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Multiplicative order of `q` modulo `n` (1 when n = 1).
pub fn multiplicative_order(q: usize, n: usize) -> usize {
    if n == 1 {
        return 1;
    }
    let mut x = q % n;
    let mut ord = 1;
    while x != 1 {
        x = x * q % n;
        ord += 1;
    }
    ord
}

/// Orbits of multiplication by `q` on Z_n, each listed from its smallest
/// element in orbit order, sorted by that smallest element.
pub fn cyclotomic_cosets(n: usize, q: usize) -> Result<Vec<Vec<usize>>> {
    check_coprime(n, q)?;
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for i in 0..n {
        if seen[i] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut j = i;
        while !seen[j] {
            seen[j] = true;
            orbit.push(j);
            j = j * q % n;
        }
        out.push(orbit);
    }
    Ok(out)
}

/// `{a + b mod n}`, sorted.
pub fn minkowski_sum(a: &[usize], b: &[usize], n: usize) -> Vec<usize> {
    let set: BTreeSet<usize> = a.iter().flat_map(|&x| b.iter().map(move |&y| (x + y) % n)).collect();
    set.into_iter().collect()
}

fn complement(set: &[usize], n: usize) -> Vec<usize> {
    let mut inside = vec![false; n];
    for &x in set {
        inside[x] = true;
    }
    (0..n).filter(|&i| !inside[i]).collect()
}

/// Union of the q-cyclotomic cosets fully contained in `set`, sorted.
fn cosets_inside(set: &[usize], n: usize, q: usize) -> Result<Vec<usize>> {
    let inside: BTreeSet<usize> = set.iter().copied().collect();
    let mut out: Vec<usize> = cyclotomic_cosets(n, q)?
        .into_iter()
        .filter(|c| c.iter().all(|x| inside.contains(x)))
        .flatten()
        .collect();
    out.sort_unstable();
    Ok(out)
}

fn check_coset_union(set: &[usize], n: usize, q: usize) -> Result<Vec<usize>> {
    let sorted: Vec<usize> = set.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
    if let Some(&bad) = sorted.iter().find(|&&x| x >= n) {
        return Err(Error::OutOfRange(format!("index {bad} not in Z_{n}")));
    }
    if cosets_inside(&sorted, n, q)? != sorted {
        return Err(Error::NotCosetUnion(sorted));
    }
    Ok(sorted)
}

/// The field holding the n-th roots of unity, with F_q embedded in it.
#[derive(Clone, Debug)]
pub struct SplittingField {
    base: FieldSpec,
    ext: FieldSpec,
    n: usize,
    embed: Vec<u32>,
    beta: u32,
}

impl SplittingField {
    pub fn new(base: FieldSpec, n: usize) -> Result<Self> {
        let q = base.q() as usize;
        check_coprime(n, q)?;
        let ord = multiplicative_order(q, n) as u32;
        let degree = base.s() * ord;
        if degree > MAX_DEGREE {
            return Err(Error::SplittingFieldTooLarge(degree));
        }
        let ext = if ord == 1 { base } else { FieldSpec::with_degree(degree)? };
        let base_poly: Vec<u32> = (0..=base.s()).map(|i| base.poly() >> i & 1).collect();
        let theta = (1..ext.q())
            .find(|&x| poly_eval(ext, &base_poly, x) == 0)
            .expect("an extension of degree divisible by s contains F_q");
        let embed = (0..base.q())
            .map(|a| (0..base.s()).filter(|i| a >> i & 1 == 1).fold(0, |acc, i| acc ^ ext.pow(theta, i as u64)))
            .collect();
        let beta = (1..ext.q()).find(|&x| element_order(ext, x) == n as u64).expect("n divides 2^degree - 1");
        Ok(SplittingField { base, ext, n, embed, beta })
    }

    pub fn base(&self) -> FieldSpec {
        self.base
    }

    pub fn ext(&self) -> FieldSpec {
        self.ext
    }

    pub fn beta(&self) -> u32 {
        self.beta
    }

    pub fn beta_pow(&self, j: usize) -> u32 {
        self.ext.pow(self.beta, (j % self.n) as u64)
    }

    pub fn embed(&self, a: u32) -> u32 {
        self.embed[a as usize]
    }

    /// Inverse of [`embed`](Self::embed) on its image.
    pub fn restrict(&self, x: u32) -> Option<u32> {
        self.embed.iter().position(|&e| e == x).map(|a| a as u32)
    }

    /// `{j : g(β^j) = 0}` for a polynomial over F_q.
    pub fn defining_set(&self, g: &[u32]) -> Vec<usize> {
        let lifted: Vec<u32> = g.iter().map(|&c| self.embed(c)).collect();
        (0..self.n).filter(|&j| poly_eval(self.ext, &lifted, self.beta_pow(j)) == 0).collect()
    }

    /// `prod_{j in J} (x - β^j)` over the extension field.
    fn root_product(&self, set: &[usize]) -> Poly {
        set.iter().fold(vec![1], |acc, &j| poly_mul(self.ext, &acc, &[self.beta_pow(j), 1]))
    }

    /// Monic polynomial over F_q with roots `{β^j : j ∈ J}`; `J` must be a
    /// union of q-cyclotomic cosets.
    pub fn generator_from_defining_set(&self, set: &[usize]) -> Result<Poly> {
        let set = check_coset_union(set, self.n, self.base.q() as usize)?;
        self.root_product(&set)
            .into_iter()
            .map(|c| self.restrict(c).ok_or_else(|| Error::Malformed("coefficient outside F_q".into())))
            .collect()
    }
}

fn element_order(f: FieldSpec, x: u32) -> u64 {
    let mut acc = x;
    let mut ord = 1;
    while acc != 1 {
        acc = f.mul(acc, x);
        ord += 1;
    }
    ord
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CyclicDescription {
    GeneratorPoly(Poly),
    DefiningSet(Vec<usize>),
    GeneratingSet(Vec<usize>),
}

/// A cyclic code of length `n` over `field`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "CyclicFile", into = "CyclicFile")]
pub struct CyclicSpec {
    pub n: usize,
    pub field: FieldSpec,
    pub description: CyclicDescription,
}

/// JSON form: `n`, `field` and exactly one of the three descriptions.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CyclicFile {
    pub n: usize,
    pub field: FieldSpec,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generator_poly: Option<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub defining_set: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generating_set: Option<Vec<usize>>,
}

impl TryFrom<CyclicFile> for CyclicSpec {
    type Error = Error;
    fn try_from(f: CyclicFile) -> Result<Self> {
        let description = match (f.generator_poly, f.defining_set, f.generating_set) {
            (Some(g), None, None) => CyclicDescription::GeneratorPoly(g),
            (None, Some(j), None) => CyclicDescription::DefiningSet(j),
            (None, None, Some(i)) => CyclicDescription::GeneratingSet(i),
            _ => {
                return Err(Error::Malformed(
                    "expected exactly one of generator_poly, defining_set, generating_set".into(),
                ))
            }
        };
        Ok(CyclicSpec { n: f.n, field: f.field, description })
    }
}

impl From<CyclicSpec> for CyclicFile {
    fn from(c: CyclicSpec) -> Self {
        let mut f = CyclicFile { n: c.n, field: c.field, generator_poly: None, defining_set: None, generating_set: None };
        match c.description {
            CyclicDescription::GeneratorPoly(g) => f.generator_poly = Some(g),
            CyclicDescription::DefiningSet(j) => f.defining_set = Some(j),
            CyclicDescription::GeneratingSet(i) => f.generating_set = Some(i),
        }
        f
    }
}

/// All three descriptions of one cyclic code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ResolvedCyclic {
    pub n: usize,
    pub field: FieldSpec,
    pub generator_poly: Poly,
    pub defining_set: Vec<usize>,
    pub generating_set: Vec<usize>,
}

impl CyclicSpec {
    pub fn generator(n: usize, field: FieldSpec, g: Poly) -> Self {
        CyclicSpec { n, field, description: CyclicDescription::GeneratorPoly(g) }
    }

    pub fn defining(n: usize, field: FieldSpec, j: Vec<usize>) -> Self {
        CyclicSpec { n, field, description: CyclicDescription::DefiningSet(j) }
    }

    pub fn generating(n: usize, field: FieldSpec, i: Vec<usize>) -> Self {
        CyclicSpec { n, field, description: CyclicDescription::GeneratingSet(i) }
    }

    pub fn resolve(&self) -> Result<ResolvedCyclic> {
        let sf = SplittingField::new(self.field, self.n)?;
        self.resolve_in(&sf)
    }

    fn resolve_in(&self, sf: &SplittingField) -> Result<ResolvedCyclic> {
        let n = self.n;
        let q = self.field.q() as usize;
        let (g, j) = match &self.description {
            CyclicDescription::GeneratorPoly(g) => {
                let g = trim(g.clone());
                if let Some(&bad) = g.iter().find(|&&c| !self.field.contains(c)) {
                    return Err(Error::ElementOutOfRange { value: bad, s: self.field.s() });
                }
                if g.is_empty() || !poly_divrem(self.field, &x_n_minus_one(n), &g)?.1.is_empty() {
                    return Err(Error::NotDivisor);
                }
                let j = sf.defining_set(&g);
                (g, j)
            }
            CyclicDescription::DefiningSet(j) => {
                let j = check_coset_union(j, n, q)?;
                (sf.generator_from_defining_set(&j)?, j)
            }
            CyclicDescription::GeneratingSet(i) => {
                let i = check_coset_union(i, n, q)?;
                let j = complement(&i, n);
                (sf.generator_from_defining_set(&j)?, j)
            }
        };
        Ok(ResolvedCyclic { n, field: self.field, generating_set: complement(&j, n), generator_poly: g, defining_set: j })
    }
}

/// Code spanned by the cyclic shifts `x^i g(x)`, `0 <= i < n - deg g`.
pub fn cyclic_code(spec: &CyclicSpec) -> Result<LinearCode> {
    let r = spec.resolve()?;
    code_from_generator(spec.field, spec.n, &r.generator_poly)
}

fn code_from_generator(field: FieldSpec, n: usize, g: &[u32]) -> Result<LinearCode> {
    let deg = poly_degree(g).ok_or(Error::NotDivisor)?;
    let rows = (0..n - deg)
        .map(|shift| {
            let mut v = Codeword::zeros(field, n);
            for (i, &c) in g[..=deg].iter().enumerate() {
                v.set(shift + i, c);
            }
            v
        })
        .collect();
    LinearCode::from_codewords(field, n, rows)
}

/// Binary generator polynomial of `tr(C)` for the cyclic code generated by `g`:
/// the product of the binary minimal polynomials whose roots all lie in the
/// defining set of `g`. Coefficients are 0/1.
pub fn eta_trace_generator(field: FieldSpec, n: usize, g: &[u32]) -> Result<Poly> {
    let sf = SplittingField::new(field, n)?;
    let r = CyclicSpec::generator(n, field, g.to_vec()).resolve_in(&sf)?;
    let j2 = cosets_inside(&r.defining_set, n, 2)?;
    sf.root_product(&j2)
        .into_iter()
        .map(|c| match c {
            0 | 1 => Ok(c),
            _ => Err(Error::Malformed("binary minimal polynomial has a non-binary coefficient".into())),
        })
        .collect()
}

/// Generating set of `tr(C)` for a q-ary generating set `I`: the union of the
/// binary cyclotomic cosets meeting `I`.
pub fn trace_generating_set(n: usize, i: &[usize]) -> Result<Vec<usize>> {
    Ok(complement(&cosets_inside(&complement(i, n), n, 2)?, n))
}

/// The two cyclic CSS-T conditions for a pair given by q-ary generating sets,
/// together with the algebraic verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicConditions {
    pub n: usize,
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
    pub i1_binary: Vec<usize>,
    pub i2_binary: Vec<usize>,
    /// `I2 ⊆ I1`, i.e. `C2 ⊆ C1`.
    pub cond1: bool,
    /// `0 ∉ I1' + I1' + I2'` over the trace generating sets.
    pub cond2: bool,
    /// `None` when the codes are not nested.
    pub csst_qary: Option<bool>,
}

impl CyclicConditions {
    /// The conditions and the trace criterion disagree on a nested pair.
    pub fn diverges(&self) -> bool {
        self.csst_qary.is_some_and(|v| v != self.cond2)
    }
}

pub fn cyclic_csst_conditions(spec1: &CyclicSpec, spec2: &CyclicSpec) -> Result<CyclicConditions> {
    if spec1.field != spec2.field {
        return Err(Error::FieldMismatch(spec1.field.s(), spec2.field.s()));
    }
    if spec1.n != spec2.n {
        return Err(Error::LengthMismatch { expected: spec1.n, found: spec2.n });
    }
    let sf = SplittingField::new(spec1.field, spec1.n)?;
    let r1 = spec1.resolve_in(&sf)?;
    let r2 = spec2.resolve_in(&sf)?;
    conditions_for(&r1, &r2)
}

fn conditions_for(r1: &ResolvedCyclic, r2: &ResolvedCyclic) -> Result<CyclicConditions> {
    let n = r1.n;
    let i1 = &r1.generating_set;
    let i2 = &r2.generating_set;
    let cond1 = i2.iter().all(|x| i1.contains(x));
    let i1_binary = trace_generating_set(n, i1)?;
    let i2_binary = trace_generating_set(n, i2)?;
    let triple = minkowski_sum(&minkowski_sum(&i1_binary, &i1_binary, n), &i2_binary, n);
    let cond2 = !triple.contains(&0);
    let csst = if cond1 {
        let c1 = code_from_generator(r1.field, n, &r1.generator_poly)?;
        let c2 = code_from_generator(r2.field, n, &r2.generator_poly)?;
        Some(csst_qary(&CssPair::new(c1, c2)?).is_csst)
    } else {
        None
    };
    let report = CyclicConditions { n, i1: i1.clone(), i2: i2.clone(), i1_binary, i2_binary, cond1, cond2, csst_qary: csst };
    if report.diverges() {
        warn!("cyclic conditions disagree with the trace criterion: {report:?}");
    }
    Ok(report)
}

/// A confirmed CSS-T pair of cyclic codes.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchRecord {
    pub n: usize,
    pub field: FieldSpec,
    pub i1: Vec<usize>,
    pub i2: Vec<usize>,
    pub g1: Poly,
    pub g2: Poly,
    pub conditions: CyclicConditions,
    pub params: CssParams,
}

/// Search summary: confirmed pairs in a fixed order plus divergence counts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SearchOutcome {
    pub examined: usize,
    pub divergences: usize,
    pub records: Vec<SearchRecord>,
}

/// Enumerates pairs `I2 ⊊ I1` of unions of q-cyclotomic cosets (I1 nonempty),
/// keeps those satisfying both conditions and confirmed by the trace
/// criterion. Pairs are ordered by the bitmask of cosets in I1, then I2.
pub fn search_cyclic(field: FieldSpec, n: usize, cap: u128) -> Result<SearchOutcome> {
    let sf = SplittingField::new(field, n)?;
    let cosets = cyclotomic_cosets(n, field.q() as usize)?;
    let c = cosets.len();
    check_budget(3, c, cap)?;
    let union = |mask: u64| -> Vec<usize> {
        let mut v: Vec<usize> = (0..c).filter(|b| mask >> b & 1 == 1).flat_map(|b| cosets[b].iter().copied()).collect();
        v.sort_unstable();
        v
    };
    let mut resolved = Vec::with_capacity(1 << c);
    for mask in 0..1u64 << c {
        resolved.push(CyclicSpec::generating(n, field, union(mask)).resolve_in(&sf)?);
    }
    let mut out = SearchOutcome { examined: 0, divergences: 0, records: Vec::new() };
    for m1 in 1..1u64 << c {
        // Proper submasks of m1, in increasing order.
        let mut subs: Vec<u64> = Vec::new();
        let mut sub = m1;
        loop {
            sub = (sub.wrapping_sub(1)) & m1;
            subs.push(sub);
            if sub == 0 {
                break;
            }
        }
        subs.reverse();
        for m2 in subs {
            let (r1, r2) = (&resolved[m1 as usize], &resolved[m2 as usize]);
            let cond = conditions_for(r1, r2)?;
            out.examined += 1;
            if cond.diverges() {
                out.divergences += 1;
            }
            if cond.cond1 && cond.cond2 && cond.csst_qary == Some(true) {
                let pair = CssPair::new(
                    code_from_generator(field, n, &r1.generator_poly)?,
                    code_from_generator(field, n, &r2.generator_poly)?,
                )?;
                out.records.push(SearchRecord {
                    n,
                    field,
                    i1: r1.generating_set.clone(),
                    i2: r2.generating_set.clone(),
                    g1: r1.generator_poly.clone(),
                    g2: r2.generator_poly.clone(),
                    params: css_parameters_bounded(&pair, cap)?,
                    conditions: cond,
                });
            }
        }
    }
    Ok(out)
}
