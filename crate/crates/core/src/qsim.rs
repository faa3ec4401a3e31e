//! Dense state-vector oracle for transversal gates on CSS code spaces.
//!
//! A basis state `|x⟩`, `x ∈ F_q^n`, sits at index `sum_i x_i q^(n-1-i)`:
//! the first qudit is the most significant base-q digit. With `q = 2^s` the
//! index is the concatenation of the s-bit encodings of the coordinates.

use std::fmt::Debug;

use num_complex::Complex;
use num_traits::{Float, FloatConst};
use rayon::prelude::*;
use serde::Serialize;

use crate::codelin::{Codeword, LinearCode};
use crate::csst::CssPair;
use crate::error::{check_budget, Error, Result};
use crate::gf2e::FieldSpec;

/// Default cap on the number of amplitudes `q^n`.
pub const DEFAULT_AMP_CAP: u128 = 1 << 20;
/// Default residual tolerance for code-space preservation.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Real scalar used for amplitudes.
pub trait Amplitude: Float + FloatConst + Send + Sync + Debug + 'static {}

impl<T: Float + FloatConst + Send + Sync + Debug + 'static> Amplitude for T {}

fn cast<T: Amplitude>(x: f64) -> T {
    T::from(x).expect("finite constant")
}

/// `e^{iπk/4}` for k = 0..8.
fn eighth_roots<T: Amplitude>() -> [Complex<T>; 8] {
    let h = T::FRAC_1_SQRT_2();
    let (o, z) = (T::one(), T::zero());
    [
        Complex::new(o, z),
        Complex::new(h, h),
        Complex::new(z, o),
        Complex::new(-h, h),
        Complex::new(-o, z),
        Complex::new(-h, -h),
        Complex::new(z, -o),
        Complex::new(h, -h),
    ]
}

#[derive(Clone, Debug, PartialEq)]
pub struct StateVector<T: Amplitude> {
    spec: FieldSpec,
    n: usize,
    amps: Vec<Complex<T>>,
}

/// Index of a basis state.
pub fn basis_index(x: &Codeword) -> usize {
    let s = x.spec().s() as usize;
    (0..x.len()).fold(0, |acc, i| (acc << s) | x.get(i) as usize)
}

impl<T: Amplitude> StateVector<T> {
    /// All-zero amplitudes on `q^n` basis states.
    pub fn zeros(spec: FieldSpec, n: usize, amp_cap: u128) -> Result<Self> {
        let dim = check_budget(spec.q() as u64, n, amp_cap)? as usize;
        Ok(StateVector { spec, n, amps: vec![Complex::new(T::zero(), T::zero()); dim] })
    }

    /// The computational basis state `|x⟩`.
    pub fn basis(x: &Codeword, amp_cap: u128) -> Result<Self> {
        let mut v = Self::zeros(x.spec(), x.len(), amp_cap)?;
        v.amps[basis_index(x)] = Complex::new(T::one(), T::zero());
        Ok(v)
    }

    pub fn from_amplitudes(spec: FieldSpec, n: usize, amps: Vec<Complex<T>>) -> Result<Self> {
        let dim = (spec.q() as usize).checked_pow(n as u32);
        if dim != Some(amps.len()) {
            return Err(Error::DimensionMismatch(format!("{} amplitudes for q = {}, n = {n}", amps.len(), spec.q())));
        }
        Ok(StateVector { spec, n, amps })
    }

    pub fn spec(&self) -> FieldSpec {
        self.spec
    }

    pub fn qudits(&self) -> usize {
        self.n
    }

    pub fn amplitudes(&self) -> &[Complex<T>] {
        &self.amps
    }

    pub fn norm(&self) -> T {
        self.amps.iter().fold(T::zero(), |acc, a| acc + a.norm_sqr()).sqrt()
    }

    /// `⟨self|other⟩`.
    pub fn inner(&self, other: &Self) -> Complex<T> {
        self.amps.iter().zip(&other.amps).fold(Complex::new(T::zero(), T::zero()), |acc, (a, b)| acc + a.conj() * b)
    }

    /// Per-digit lookup: `table[v]` for each coordinate value, summed over
    /// all qudits of each basis index.
    fn digit_sums(&self, table: &[u32]) -> impl Iterator<Item = u32> + '_ {
        let s = self.spec.s();
        let mask = (1usize << s) - 1;
        let table = table.to_vec();
        (0..self.amps.len()).map(move |idx| (0..self.n).map(|i| table[(idx >> (s as usize * i)) & mask]).sum())
    }

    fn diagonal(&self, table: &[u32], phases: &[Complex<T>]) -> Self {
        let m = phases.len() as u32;
        let amps = self.digit_sums(table).zip(&self.amps).map(|(c, a)| *a * phases[(c % m) as usize]).collect();
        StateVector { spec: self.spec, n: self.n, amps }
    }

    fn trace_table(&self, lambda: u32) -> Vec<u32> {
        (0..self.spec.q()).map(|v| self.spec.trace(self.spec.mul(lambda, v))).collect()
    }

    /// `(T^(λ))^{⊗n}`: phase `e^{iπ/4 · Σ_i tr(λ x_i)}` with traces lifted to {0, 1}.
    pub fn apply_t(&self, lambda: u32) -> Self {
        self.diagonal(&self.trace_table(lambda), &eighth_roots())
    }

    /// `(Z^(λ))^{⊗n}`: sign `(-1)^{Σ_i tr(λ x_i)}`.
    pub fn apply_z(&self, lambda: u32) -> Self {
        let o = T::one();
        self.diagonal(&self.trace_table(lambda), &[Complex::new(o, T::zero()), Complex::new(-o, T::zero())])
    }

    /// `(X^(λ))^{⊗n}`: `|x⟩ -> |x + λ·1⟩`.
    pub fn apply_x(&self, lambda: u32) -> Self {
        let ones = Codeword::ones(self.spec, self.n).scale(lambda);
        self.shift(&ones)
    }

    /// `|x⟩ -> |x + a⟩`.
    pub fn shift(&self, a: &Codeword) -> Self {
        let mask = basis_index(a);
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.amps.len()];
        for (idx, amp) in self.amps.iter().enumerate() {
            amps[idx ^ mask] = *amp;
        }
        StateVector { spec: self.spec, n: self.n, amps }
    }

    /// `|x⟩ -> (-1)^{Σ_i tr(b_i x_i)} |x⟩`.
    pub fn phase_flip(&self, b: &Codeword) -> Self {
        let s = self.spec.s() as usize;
        let mask = (1usize << s) - 1;
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(idx, a)| {
                let parity: u32 = (0..self.n)
                    .map(|i| self.spec.trace(self.spec.mul(b.get(i), ((idx >> (s * (self.n - 1 - i))) & mask) as u32)))
                    .sum();
                if parity % 2 == 1 {
                    -*a
                } else {
                    *a
                }
            })
            .collect();
        StateVector { spec: self.spec, n: self.n, amps }
    }

    /// Weyl-Heisenberg `E(a, b)` without its global phase: the shift by `a`
    /// followed by the sign flip for `b`.
    pub fn apply_weyl(&self, a: &Codeword, b: &Codeword) -> Self {
        self.shift(a).phase_flip(b)
    }
}

/// The Steane-basis code space of a CSS pair: one state
/// `|w + C2⟩ = |C2|^{-1/2} Σ_{c ∈ C2} |w + c⟩` per coset of C2 in C1, with `w`
/// the lexicographically smallest word of its coset.
#[derive(Clone, Debug)]
pub struct CodeSpace<T: Amplitude> {
    pair: CssPair,
    reps: Vec<Codeword>,
    /// Basis-state indices of each coset, in C2 enumeration order.
    supports: Vec<Vec<usize>>,
    amp: T,
    dim: usize,
}

impl<T: Amplitude> CodeSpace<T> {
    pub fn build(pair: &CssPair, amp_cap: u128) -> Result<Self> {
        let spec = pair.spec();
        let n = pair.length();
        let dim = check_budget(spec.q() as u64, n, amp_cap)? as usize;
        let c2_words = pair.c2().codewords(amp_cap)?;
        let mut cosets: std::collections::HashMap<Codeword, Codeword> = std::collections::HashMap::new();
        for w in pair.c1().codewords(amp_cap)? {
            let key = pair.c2().reduce(&w);
            cosets
                .entry(key)
                .and_modify(|best| {
                    if w.lex_cmp(best).is_lt() {
                        *best = w.clone();
                    }
                })
                .or_insert(w);
        }
        let mut reps: Vec<Codeword> = cosets.into_values().collect();
        reps.sort_by(|a, b| a.lex_cmp(b));
        let supports = reps
            .iter()
            .map(|w| {
                let base = basis_index(w);
                c2_words.iter().map(|c| base ^ basis_index(c)).collect()
            })
            .collect();
        let amp = T::one() / cast::<T>(c2_words.len() as f64).sqrt();
        Ok(CodeSpace { pair: pair.clone(), reps, supports, amp, dim })
    }

    pub fn pair(&self) -> &CssPair {
        &self.pair
    }

    /// Number of basis states, `q^k`.
    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn representatives(&self) -> &[Codeword] {
        &self.reps
    }

    /// Dense `|w_j + C2⟩`.
    pub fn basis_vector(&self, j: usize) -> StateVector<T> {
        let mut amps = vec![Complex::new(T::zero(), T::zero()); self.dim];
        for &idx in &self.supports[j] {
            amps[idx] = Complex::new(self.amp, T::zero());
        }
        StateVector { spec: self.pair.spec(), n: self.pair.length(), amps }
    }

    /// `coset[idx]` = basis state whose support holds `idx`, if any.
    fn coset_table(&self) -> Vec<u32> {
        let mut table = vec![u32::MAX; self.dim];
        for (j, sup) in self.supports.iter().enumerate() {
            for &idx in sup {
                table[idx] = j as u32;
            }
        }
        table
    }

    /// Projects `u` onto the code space: returns the coefficients
    /// `⟨v_i|u⟩` and the norm of `u - Σ_i ⟨v_i|u⟩ v_i`.
    fn project(&self, table: &[u32], u: &StateVector<T>) -> (Vec<Complex<T>>, T) {
        let zero = Complex::new(T::zero(), T::zero());
        let mut coeff = vec![zero; self.len()];
        for (idx, a) in u.amps.iter().enumerate() {
            if let Some(c) = coeff.get_mut(table[idx] as usize) {
                *c = *c + a * self.amp;
            }
        }
        let mut res = T::zero();
        for (idx, a) in u.amps.iter().enumerate() {
            let expected = coeff.get(table[idx] as usize).map_or(zero, |c| c * self.amp);
            res = res + (a - expected).norm_sqr();
        }
        (coeff, res.sqrt())
    }
}

/// Outcome of applying `(T^(λ))^{⊗n}` to every basis state of a code space.
#[derive(Clone, Debug, PartialEq)]
pub struct Preservation<T: Amplitude> {
    pub lambda: u32,
    pub preserved: bool,
    pub max_residual: T,
    /// `M[i][j] = ⟨v_i| T v_j⟩`, present when preserved.
    pub restriction: Option<Vec<Vec<Complex<T>>>>,
}

/// Applies the transversal gate densely to each basis state and projects the
/// result back onto the code space.
pub fn preserves_code_space<T: Amplitude>(space: &CodeSpace<T>, lambda: u32, tol: T) -> Preservation<T> {
    let table = space.coset_table();
    let columns: Vec<(Vec<Complex<T>>, T)> = (0..space.len())
        .into_par_iter()
        .map(|j| space.project(&table, &space.basis_vector(j).apply_t(lambda)))
        .collect();
    let max_residual = columns.iter().fold(T::zero(), |m, (_, r)| m.max(*r));
    let preserved = max_residual <= tol;
    let restriction = preserved.then(|| {
        let k = space.len();
        (0..k).map(|i| (0..k).map(|j| columns[j].0[i]).collect()).collect()
    });
    Preservation { lambda, preserved, max_residual, restriction }
}

/// Whether every `λ ∈ F_q` preserves the code space.
pub fn all_lambda_transversal<T: Amplitude>(space: &CodeSpace<T>, tol: T) -> bool {
    (0..space.pair().spec().q()).all(|lambda| preserves_code_space(space, lambda, tol).preserved)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum LogicalOrder {
    /// Smallest `r ∈ {1, 2, 4, 8}` with `M^r = I`.
    Order(u32),
    Exceeds8,
    NotPreserved,
}

impl LogicalOrder {
    pub fn value(self) -> Option<u32> {
        match self {
            LogicalOrder::Order(r) => Some(r),
            _ => None,
        }
    }
}

fn mat_mul<T: Amplitude>(a: &[Vec<Complex<T>>], b: &[Vec<Complex<T>>]) -> Vec<Vec<Complex<T>>> {
    let k = a.len();
    let zero = Complex::new(T::zero(), T::zero());
    (0..k)
        .map(|i| (0..k).map(|j| (0..k).fold(zero, |acc, l| acc + a[i][l] * b[l][j])).collect())
        .collect()
}

fn distance_to_identity<T: Amplitude>(m: &[Vec<Complex<T>>]) -> T {
    let one = Complex::new(T::one(), T::zero());
    let mut worst = T::zero();
    for (i, row) in m.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            let target = if i == j { one } else { Complex::new(T::zero(), T::zero()) };
            worst = worst.max((x - target).norm());
        }
    }
    worst
}

/// Whether `M† M = I` within `tol` entrywise.
pub fn is_unitary<T: Amplitude>(m: &[Vec<Complex<T>>], tol: T) -> bool {
    let k = m.len();
    let adj: Vec<Vec<Complex<T>>> = (0..k).map(|i| (0..k).map(|j| m[j][i].conj()).collect()).collect();
    distance_to_identity(&mat_mul(&adj, m)) <= tol
}

/// Order of the logical operator implemented by `T^{⊗n}` (λ = 1).
pub fn logical_order<T: Amplitude>(space: &CodeSpace<T>, tol: T) -> LogicalOrder {
    let Some(m) = preserves_code_space(space, 1, tol).restriction else {
        return LogicalOrder::NotPreserved;
    };
    let mut power = m.clone();
    for r in [1u32, 2, 4, 8] {
        if distance_to_identity(&power) <= tol {
            return LogicalOrder::Order(r);
        }
        power = mat_mul(&power, &power);
    }
    LogicalOrder::Exceeds8
}

/// Per-λ oracle report.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SimulationRecord {
    pub lambda: u32,
    pub preserved: bool,
    pub max_residual: f64,
    pub logical_order: Option<u32>,
}

/// Runs the oracle for each λ, reporting `M`'s order for preserved spaces.
pub fn simulate<T: Amplitude>(space: &CodeSpace<T>, lambdas: &[u32], tol: T) -> Vec<SimulationRecord> {
    lambdas
        .iter()
        .map(|&lambda| {
            let p = preserves_code_space(space, lambda, tol);
            let order = p.restriction.as_ref().map(|m| {
                let mut power = m.clone();
                let mut found = None;
                for r in [1u32, 2, 4, 8] {
                    if distance_to_identity(&power) <= tol {
                        found = Some(r);
                        break;
                    }
                    power = mat_mul(&power, &power);
                }
                found
            });
            SimulationRecord {
                lambda,
                preserved: p.preserved,
                max_residual: p.max_residual.to_f64().unwrap_or(f64::NAN),
                logical_order: order.flatten(),
            }
        })
        .collect()
}

/// Convenience: the code space of `(C1, C2)` in double precision.
pub fn build_code_space(pair: &CssPair, amp_cap: u128) -> Result<CodeSpace<f64>> {
    CodeSpace::build(pair, amp_cap)
}

/// The pair `(C, C)` has a one-dimensional code space.
pub fn trivial_space(c: &LinearCode, amp_cap: u128) -> Result<CodeSpace<f64>> {
    CodeSpace::build(&CssPair::new(c.clone(), c.clone())?, amp_cap)
}
