//! Chevalley involutions of `sl_{ℓ+1}(K_q)`, the pre-Chevalley
//! anti-involutions of the coordinate tori, and the existence decision.
//!
//! A Chevalley involution `τ` and a pre-Chevalley anti-involution `¯` on
//! the coordinates determine each other: `τ(X) = −(X̄)ᵀ` in one direction
//! and `e_{−α}(ā) = −τ(e_α(a))` in the other.

use std::collections::BTreeMap;
use std::time::Instant;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::error::{Error, Result};
use crate::lie::{base_root, GradedComponentKey, LieElement, LieTorus};
use crate::octonion::OctonionTorus;
use crate::quantum_torus::QuantumTorus;
use crate::report::{run_check, CheckReport};
use crate::root_system::Root;
use crate::scalars::{degree_window, format_rational, parse_rational, Degree, QuantumMatrix, Rational};
use crate::torus::{GradedTorus, TorusElement, TorusElementJson, TorusKind};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AntiInvolutionRule {
    /// `x̄_i = x_i^{-1}` extended anti-multiplicatively over `K_q`.
    GeneratorInverse(QuantumMatrix),
    /// `σ ∘ τ` on the octonion torus of the given rank.
    OctonionBar(usize),
    /// Explicit values `s(λ)` on a finite set of degrees.
    Tabulated(BTreeMap<Degree, Rational>),
}

/// A grade-reversing linear map `x^λ ↦ s(λ) x^{−λ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AntiInvolutionTable {
    pub kind: TorusKind,
    pub rank: usize,
    pub rule: AntiInvolutionRule,
}

impl AntiInvolutionTable {
    /// `s(λ)`.
    pub fn sign(&self, degree: &Degree) -> Result<Rational> {
        degree.check_rank(self.rank)?;
        match &self.rule {
            AntiInvolutionRule::GeneratorInverse(q) => {
                // x̄^λ = x_n^{-λ_n} ⋯ x_1^{-λ_1}
                QuantumTorus::new(q.clone()).reversal_scalar(&-degree)
            }
            AntiInvolutionRule::OctonionBar(rank) => {
                let o = OctonionTorus::new(*rank)?;
                let image = o.pre_chevalley(&TorusElement::x(degree.clone()))?;
                Ok(image.coefficient(&-degree))
            }
            AntiInvolutionRule::Tabulated(signs) => signs
                .get(degree)
                .cloned()
                .ok_or_else(|| Error::InvalidInput(format!("anti-involution table has no entry for degree {degree}"))),
        }
    }

    pub fn apply(&self, a: &TorusElement) -> Result<TorusElement> {
        a.check_rank(self.rank)?;
        let mut out = TorusElement::zero(self.rank);
        for (d, c) in a.terms() {
            out.add_term(-d, self.sign(d)? * c);
        }
        Ok(out)
    }

    /// The values of `s` on `[-window, window]ⁿ`.
    pub fn tabulate(&self, window: i64) -> Result<AntiInvolutionTable> {
        let signs = degree_window(self.rank, window)
            .into_iter()
            .map(|d| Ok((d.clone(), self.sign(&d)?)))
            .collect::<Result<BTreeMap<_, _>>>()?;
        Ok(AntiInvolutionTable { kind: self.kind, rank: self.rank, rule: AntiInvolutionRule::Tabulated(signs) })
    }

    /// The first degree in the window where the two maps differ.
    pub fn first_disagreement(&self, other: &AntiInvolutionTable, window: i64) -> Result<Option<Degree>> {
        for d in degree_window(self.rank, window) {
            if self.sign(&d)? != other.sign(&d)? {
                return Ok(Some(d));
            }
        }
        Ok(None)
    }
}

/// The pre-Chevalley anti-involution `x̄_i = x_i^{-1}` of an elementary
/// quantum torus.
pub fn synthesize_pre_chevalley_qt(q: &QuantumMatrix) -> Result<AntiInvolutionTable> {
    if let Some((i, j)) = q.first_non_elementary() {
        return Err(Error::NotElementary { i: i + 1, j: j + 1, value: format_rational(q.entry(i, j)) });
    }
    Ok(AntiInvolutionTable {
        kind: TorusKind::Quantum,
        rank: q.n(),
        rule: AntiInvolutionRule::GeneratorInverse(q.clone()),
    })
}

/// The pre-Chevalley anti-involution `σ ∘ τ` of the octonion torus.
pub fn synthesize_pre_chevalley_octonion(rank: usize) -> Result<AntiInvolutionTable> {
    OctonionTorus::new(rank)?;
    Ok(AntiInvolutionTable { kind: TorusKind::Octonion, rank, rule: AntiInvolutionRule::OctonionBar(rank) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OracleOutcome {
    Found(AntiInvolutionTable),
    /// `t(λ, μ) s(λ+μ) = s(λ) s(μ) t(μ, λ)` fails for this pair.
    NoSolution {
        lhs: Degree,
        rhs: Degree,
    },
}

impl OracleOutcome {
    pub fn table(&self) -> Option<&AntiInvolutionTable> {
        match self {
            OracleOutcome::Found(t) => Some(t),
            OracleOutcome::NoSolution { .. } => None,
        }
    }
}

/// Solves for a grade-reversing anti-involution `x^λ ↦ s(λ) x^{−λ}` on
/// `[-window, window]ⁿ` by brute force.
///
/// `s(0) = 1` is forced, and rescaling `x_i` lets us take `s(ε_i) = 1`
/// without loss. Values are propagated along lattice edges by the
/// constraint with `μ = ±ε_i`; then every constraint with `λ`, `μ`, `λ+μ`
/// inside the window is checked.
pub fn oracle_search_pre_chevalley(q: &QuantumMatrix, window: i64) -> Result<OracleOutcome> {
    let n = q.n();
    let in_window = |d: &Degree| d.max_abs() <= window;
    let twist = |a: &Degree, b: &Degree| q.twist(a, b);

    let mut s: BTreeMap<Degree, Rational> = BTreeMap::new();
    let origin = Degree::zero(n);
    s.insert(origin.clone(), Rational::one());
    let mut frontier = vec![origin];
    while let Some(lambda) = frontier.pop() {
        let s_lambda = s[&lambda].clone();
        for i in 0..n {
            let e = Degree::unit(n, i);
            // Upward: t(λ, ε_i) s(λ+ε_i) = s(λ) s(ε_i) t(ε_i, λ).
            let up = &lambda + &e;
            if in_window(&up) && !s.contains_key(&up) {
                let value = &s_lambda * twist(&e, &lambda)? / twist(&lambda, &e)?;
                s.insert(up.clone(), value);
                frontier.push(up);
            }
            // Downward: t(λ−ε_i, ε_i) s(λ) = s(λ−ε_i) s(ε_i) t(ε_i, λ−ε_i).
            let down = &lambda - &e;
            if in_window(&down) && !s.contains_key(&down) {
                let value = &s_lambda * twist(&down, &e)? / twist(&e, &down)?;
                s.insert(down.clone(), value);
                frontier.push(down);
            }
        }
    }

    // Generator pairs first so a failure is reported at the smallest
    // witness, then every pair in the window.
    let degrees = degree_window(n, window);
    let generator_pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (Degree::unit(n, i), Degree::unit(n, j))));
    let all_pairs = degrees.iter().flat_map(|l| degrees.iter().map(move |m| (l.clone(), m.clone())));
    for (lambda, mu) in generator_pairs.chain(all_pairs) {
        let sum = &lambda + &mu;
        if !in_window(&sum) {
            continue;
        }
        let lhs = twist(&lambda, &mu)? * &s[&sum];
        let rhs = &s[&lambda] * &s[&mu] * twist(&mu, &lambda)?;
        if lhs != rhs {
            return Ok(OracleOutcome::NoSolution { lhs: lambda, rhs: mu });
        }
    }
    Ok(OracleOutcome::Found(AntiInvolutionTable {
        kind: TorusKind::Quantum,
        rank: n,
        rule: AntiInvolutionRule::Tabulated(s),
    }))
}

/// A linear map on a Lie torus, used as a black box by the verifiers.
pub trait LieMap: Sync {
    fn apply(&self, x: &LieElement) -> Result<LieElement>;
}

impl<F> LieMap for F
where
    F: Fn(&LieElement) -> Result<LieElement> + Sync,
{
    fn apply(&self, x: &LieElement) -> Result<LieElement> {
        self(x)
    }
}

/// `τ(X) = −(X̄)ᵀ` over a coordinate anti-involution.
#[derive(Clone, Debug)]
pub struct ChevalleyInvolutionDescriptor {
    pub lie: LieTorus,
    pub bar: AntiInvolutionTable,
}

impl ChevalleyInvolutionDescriptor {
    pub fn apply(&self, x: &LieElement) -> Result<LieElement> {
        if x.size() != self.lie.size() {
            return Err(Error::ShapeMismatch(format!("expected {0}x{0}, got {1}x{1}", self.lie.size(), x.size())));
        }
        Ok(x.map_entries(|a| self.bar.apply(a))?.transpose().neg())
    }
}

impl LieMap for ChevalleyInvolutionDescriptor {
    fn apply(&self, x: &LieElement) -> Result<LieElement> {
        ChevalleyInvolutionDescriptor::apply(self, x)
    }
}

pub fn synthesize_chevalley(ell: usize, q: &QuantumMatrix) -> Result<ChevalleyInvolutionDescriptor> {
    let lie = LieTorus::new(ell, q.clone())?;
    let bar = synthesize_pre_chevalley_qt(q)?;
    Ok(ChevalleyInvolutionDescriptor { lie, bar })
}

pub fn apply_chevalley(desc: &ChevalleyInvolutionDescriptor, x: &LieElement) -> Result<LieElement> {
    desc.apply(x)
}

/// `ā = −θ_{α,−α}(τ(e_α(a)))` for `α = ε_1 − ε_2`.
pub fn extract_anti_involution(tau: &dyn LieMap, lie: &LieTorus, a: &TorusElement) -> Result<TorusElement> {
    let alpha = base_root();
    let minus_alpha = alpha.neg();
    let image = tau.apply(&lie.root_vector(&alpha, a)?)?;
    let Root::Pair(i, j) = minus_alpha else { unreachable!() };
    if image.nonzero_entries().any(|(r, c, _)| (r, c) != (i, j)) {
        return Err(Error::NotHomogeneousImage(minus_alpha));
    }
    Ok(-&lie.coordinate(&minus_alpha, &image)?)
}

/// The map `x^λ ↦ s(λ) x^{−λ}` read off from `τ` on the window. Fails if
/// some `x̄^λ` is not a multiple of `x^{−λ}`.
pub fn extract_anti_involution_table(tau: &dyn LieMap, lie: &LieTorus, window: i64) -> Result<AntiInvolutionTable> {
    let mut signs = BTreeMap::new();
    for d in degree_window(lie.rank(), window) {
        let bar = extract_anti_involution(tau, lie, &TorusElement::x(d.clone()))?;
        let neg = -&d;
        if bar.len() != 1 || bar.coefficient(&neg).is_zero() {
            return Err(Error::ConstraintViolation(format!("image of x^{d} is {bar}, not a multiple of x^{neg}")));
        }
        signs.insert(d, bar.coefficient(&neg));
    }
    Ok(AntiInvolutionTable { kind: TorusKind::Quantum, rank: lie.rank(), rule: AntiInvolutionRule::Tabulated(signs) })
}

/// The coordinate torus of a centerless Lie torus of type `A_ℓ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoordinateDescriptor {
    Quantum(QuantumMatrix),
    Octonion { rank: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decision {
    pub exists: bool,
    pub reason: String,
}

/// Whether the Lie torus of type `A_ℓ` with these coordinates admits a
/// Chevalley involution: exactly when the coordinates are the octonion
/// torus or an elementary quantum torus.
pub fn decide_chevalley_existence(coords: &CoordinateDescriptor, ell: usize) -> Result<Decision> {
    if ell < 2 {
        return Err(Error::RankTooSmall(ell));
    }
    match coords {
        CoordinateDescriptor::Octonion { rank } => {
            if *rank < 3 {
                return Err(Error::OctonionRankBelow3(*rank));
            }
            if ell != 2 {
                return Err(Error::OctonionNeedsA2(ell));
            }
            Ok(Decision {
                exists: true,
                reason: format!("octonion {rank}-torus: σ∘τ is a pre-Chevalley anti-involution"),
            })
        }
        CoordinateDescriptor::Quantum(q) => Ok(match q.first_non_elementary() {
            None => Decision {
                exists: true,
                reason: "elementary quantum torus: x_i ↦ x_i^{-1} is a pre-Chevalley anti-involution".into(),
            },
            Some((i, j)) => Decision {
                exists: false,
                reason: format!("q_{}{} = {} is not ±1", i + 1, j + 1, format_rational(q.entry(i, j))),
            },
        }),
    }
}

fn lie_json(lie: &LieTorus, x: &LieElement) -> serde_json::Value {
    serde_json::to_value(lie.to_json(x)).unwrap_or(serde_json::Value::Null)
}

fn key_of(x: &LieElement) -> GradedComponentKey {
    x.support().into_iter().next().expect("nonzero homogeneous element")
}

/// Homogeneous elements used to test involutions: the window of root
/// vectors and `h_k x^λ`, plus `E_11 x^λ` wherever `x^λ ∈ [A, A]`.
pub fn involution_test_elements(lie: &LieTorus, window: i64) -> Result<Vec<LieElement>> {
    let mut out = lie.homogeneous_window(window);
    for d in degree_window(lie.rank(), window) {
        if lie.torus().commutator_component_full(&d, window)? {
            out.push(lie.unit(0, 0, d));
        }
    }
    Ok(out)
}

/// The six defining properties of a Chevalley involution, checked on the
/// homogeneous elements of the window.
pub fn verify_chevalley(tau: &dyn LieMap, lie: &LieTorus, window: i64) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("chevalley-involution", Some(window));
    let elements = involution_test_elements(lie, window)?;
    let images: Vec<LieElement> = elements.iter().map(|x| tau.apply(x)).collect::<Result<_>>()?;
    let indices: Vec<usize> = (0..elements.len()).collect();
    let err = |e: Error| (e.to_string(), None);

    report.push(run_check("involutive", &indices, |&k| {
        let back = tau.apply(&images[k]).map_err(err)?;
        if back == elements[k] {
            Ok(())
        } else {
            Err((format!("τ²(X) ≠ X for X = {}", elements[k]), Some(json!({ "x": lie_json(lie, &elements[k]) }))))
        }
    }));

    let pairs: Vec<(usize, usize)> =
        (0..elements.len()).flat_map(|a| (a..elements.len()).map(move |b| (a, b))).collect();
    report.push(run_check("bracket", &pairs, |&(a, b)| {
        let lhs = tau.apply(&lie.bracket(&elements[a], &elements[b]).map_err(err)?).map_err(err)?;
        let rhs = lie.bracket(&images[a], &images[b]).map_err(err)?;
        if lhs == rhs {
            Ok(())
        } else {
            Err((
                format!("τ[X,Y] ≠ [τX,τY] for X = {}, Y = {}", elements[a], elements[b]),
                Some(json!({ "x": lie_json(lie, &elements[a]), "y": lie_json(lie, &elements[b]) })),
            ))
        }
    }));

    report.push(run_check("degree_flip", &indices, |&k| {
        let key = key_of(&elements[k]);
        let flipped = GradedComponentKey { root: key.root.neg(), degree: -&key.degree };
        let image = &images[k];
        let ok = !image.is_zero() && lie.is_homogeneous(image, &flipped).map_err(err)?;
        if ok {
            Ok(())
        } else {
            Err((
                format!("τ maps {key} to {image}, expected a nonzero element of {flipped}"),
                Some(json!({ "x": lie_json(lie, &elements[k]) })),
            ))
        }
    }));

    let zero = Degree::zero(lie.rank());
    let cartan: Vec<LieElement> = (0..lie.ell()).map(|k| lie.h(k, zero.clone())).collect();
    report.push(run_check("minus_identity_on_L00", &cartan, |h| {
        let image = tau.apply(h).map_err(err)?;
        if image == h.neg() {
            Ok(())
        } else {
            Err((format!("τ({h}) = {image} ≠ −{h}"), Some(json!({ "x": lie_json(lie, h) }))))
        }
    }));

    let mut g_basis = cartan.clone();
    for root in lie.system().roots() {
        g_basis.push(lie.e(&root)?);
    }
    report.push(run_check("preserves_g", &g_basis, |x| {
        let image = tau.apply(x).map_err(err)?;
        match image.as_scalar_matrix() {
            Some(m) if m.trace().is_zero() => Ok(()),
            _ => Err((format!("τ({x}) = {image} is not in sl(ℚ) ⊗ 1"), Some(json!({ "x": lie_json(lie, x) })))),
        }
    }));

    let simple = lie.system().simple_roots();
    let eta_cases: Vec<(usize, Root)> = indices.iter().flat_map(|&k| simple.iter().map(move |a| (k, *a))).collect();
    report.push(run_check("commutes_with_ad_eta", &eta_cases, |&(k, alpha)| {
        let lhs = tau.apply(&lie.ad_eta(&alpha, &elements[k]).map_err(err)?).map_err(err)?;
        let rhs = lie.ad_eta(&alpha, &images[k]).map_err(err)?;
        if lhs == rhs {
            Ok(())
        } else {
            Err((
                format!("τ Ad η_{alpha}(1) ≠ Ad η_{alpha}(1) τ on {}", elements[k]),
                Some(json!({ "x": lie_json(lie, &elements[k]), "root": alpha })),
            ))
        }
    }));

    Ok(report.finish(started))
}

/// Checks that `bar` is a pre-Chevalley anti-involution of `torus` on
/// monomials of the window: `bar² = id`, `bar(ab) = bar(b) bar(a)` and
/// `bar(A^λ) = A^{−λ}`.
pub fn verify_pre_chevalley(
    torus: &dyn GradedTorus,
    bar: &(dyn Fn(&TorusElement) -> Result<TorusElement> + Sync),
    window: i64,
) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("pre-chevalley", Some(window));
    let degrees = degree_window(torus.rank(), window);
    let err = |e: Error| (e.to_string(), None);
    let elem_json = |d: &Degree| json!({ "deg": d });

    report.push(run_check("involutive", &degrees, |d| {
        let x = TorusElement::x(d.clone());
        let back = bar(&bar(&x).map_err(err)?).map_err(err)?;
        if back == x {
            Ok(())
        } else {
            Err((format!("bar(bar(x^{d})) = {back}"), Some(elem_json(d))))
        }
    }));

    report.push(run_check("degree_flip", &degrees, |d| {
        let image = bar(&TorusElement::x(d.clone())).map_err(err)?;
        let neg = -d;
        if image.len() == 1 && !image.coefficient(&neg).is_zero() {
            Ok(())
        } else {
            Err((format!("bar(x^{d}) = {image} is not a nonzero multiple of x^{neg}"), Some(elem_json(d))))
        }
    }));

    let pairs: Vec<(Degree, Degree)> =
        degrees.iter().flat_map(|a| degrees.iter().map(move |b| (a.clone(), b.clone()))).collect();
    report.push(run_check("anti_multiplicative", &pairs, |(a, b)| {
        let xa = TorusElement::x(a.clone());
        let xb = TorusElement::x(b.clone());
        let lhs = bar(&torus.mul(&xa, &xb).map_err(err)?).map_err(err)?;
        let rhs = torus.mul(&bar(&xb).map_err(err)?, &bar(&xa).map_err(err)?).map_err(err)?;
        if lhs == rhs {
            Ok(())
        } else {
            Err((format!("bar(x^{a} x^{b}) ≠ bar(x^{b}) bar(x^{a})"), Some(json!({ "lhs": a, "rhs": b }))))
        }
    }));

    Ok(report.finish(started))
}

/// On-disk form of a synthesized involution.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InvolutionJson {
    pub ell: usize,
    pub q: QuantumMatrix,
    /// Always `"neg-bar-transpose"`: `τ(X) = −(X̄)ᵀ`.
    pub action: String,
    pub anti_involution: AntiInvolutionJson,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct AntiInvolutionJson {
    pub kind: TorusKind,
    /// `"generator-inverse"` or `"table"`.
    pub rule: String,
    /// `s(λ)` with `x̄^λ = s(λ) x^{−λ}`. Required for `"table"`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub signs: Vec<TermSign>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermSign {
    pub deg: Vec<i64>,
    pub sign: String,
}

pub const NEG_BAR_TRANSPOSE: &str = "neg-bar-transpose";

impl InvolutionJson {
    /// Serializes the descriptor, tabulating `s` on `[-window, window]ⁿ`
    /// when `table_window` is given.
    pub fn from_descriptor(desc: &ChevalleyInvolutionDescriptor, table_window: Option<i64>) -> Result<Self> {
        let (rule, signs) = match table_window {
            None => ("generator-inverse".to_string(), Vec::new()),
            Some(w) => {
                let AntiInvolutionRule::Tabulated(map) = desc.bar.tabulate(w)?.rule else { unreachable!() };
                let signs = map
                    .into_iter()
                    .map(|(d, s)| TermSign { deg: d.coords().to_vec(), sign: format_rational(&s) })
                    .collect();
                ("table".to_string(), signs)
            }
        };
        Ok(InvolutionJson {
            ell: desc.lie.ell(),
            q: desc.lie.q().clone(),
            action: NEG_BAR_TRANSPOSE.into(),
            anti_involution: AntiInvolutionJson { kind: TorusKind::Quantum, rule, signs },
        })
    }

    pub fn to_descriptor(&self) -> Result<ChevalleyInvolutionDescriptor> {
        if self.action != NEG_BAR_TRANSPOSE {
            return Err(Error::InvalidInput(format!("unsupported action {:?}", self.action)));
        }
        if self.anti_involution.kind != TorusKind::Quantum {
            return Err(Error::InvalidInput("matrix Lie tori need quantum-torus coordinates".into()));
        }
        let lie = LieTorus::new(self.ell, self.q.clone())?;
        let rank = self.q.n();
        let bar = match self.anti_involution.rule.as_str() {
            "generator-inverse" => synthesize_pre_chevalley_qt(&self.q)?,
            "table" => {
                let mut signs = BTreeMap::new();
                for t in &self.anti_involution.signs {
                    let d = Degree::new(t.deg.clone());
                    d.check_rank(rank)?;
                    signs.insert(d, parse_rational(&t.sign)?);
                }
                AntiInvolutionTable { kind: TorusKind::Quantum, rank, rule: AntiInvolutionRule::Tabulated(signs) }
            }
            other => return Err(Error::InvalidInput(format!("unknown anti-involution rule {other:?}"))),
        };
        Ok(ChevalleyInvolutionDescriptor { lie, bar })
    }
}

/// JSON for a single torus element image, used in round-trip reports.
pub fn element_json(a: &TorusElement, kind: TorusKind) -> serde_json::Value {
    serde_json::to_value(TorusElementJson::from_element(a, Some(kind))).unwrap_or(serde_json::Value::Null)
}
