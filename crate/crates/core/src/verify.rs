//! Axiom suites: root grading, division, Lie torus, coordinate torus.

use std::time::Instant;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use crate::error::{Error, Result};
use crate::lie::{GradedComponentKey, LieElement, LieTorus};
use crate::report::{run_check, Check, CheckReport};
use crate::root_system::{cartan_integer, RatMatrix, Root};
use crate::scalars::{degree_window, rat, Degree, QuantumMatrix, Rational};
use crate::torus::{GradedTorus, TorusElement, TorusKind};

/// Above this many cases, triple checks are sampled with the seed.
pub const EXHAUSTIVE_LIMIT: usize = 200_000;

type Failure = (String, Option<serde_json::Value>);

fn fail(e: Error) -> Failure {
    (e.to_string(), None)
}

/// Degrees of the window ordered by `max |λ_i|`, then lexicographically.
fn degrees_by_size(rank: usize, window: i64) -> Vec<Degree> {
    let mut out = degree_window(rank, window);
    out.sort_by_key(|d| d.max_abs());
    out
}

fn lie_json(lie: &LieTorus, x: &LieElement) -> serde_json::Value {
    serde_json::to_value(lie.to_json(x)).unwrap_or(serde_json::Value::Null)
}

/// Rank over ℚ of a list of vectors.
pub fn rational_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else { continue };
        m.swap(rank, p);
        let pivot = m[rank][c].clone();
        for r in 0..m.len() {
            if r != rank && !m[r][c].is_zero() {
                let f = &m[r][c] / &pivot;
                for k in c..cols {
                    let v = &f * &m[rank][k];
                    m[r][k] -= v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// Whether the integer vectors generate `ℤⁿ`, by integer row reduction.
pub fn generates_lattice(rank: usize, vectors: &[Degree]) -> bool {
    let mut rows: Vec<Vec<i128>> =
        vectors.iter().map(|d| d.coords().iter().map(|&c| i128::from(c)).collect()).collect();
    for c in 0..rank {
        let top = c;
        // Euclid down the column until one row holds the gcd.
        loop {
            let nonzero: Vec<usize> = (top..rows.len()).filter(|&r| rows[r][c] != 0).collect();
            if nonzero.len() <= 1 {
                break;
            }
            let p = *nonzero.iter().min_by_key(|&&r| rows[r][c].abs()).unwrap();
            for &r in &nonzero {
                if r != p {
                    let f = rows[r][c] / rows[p][c];
                    let pivot_row = rows[p].clone();
                    for (x, y) in rows[r].iter_mut().zip(pivot_row) {
                        *x -= f * y;
                    }
                }
            }
        }
        let Some(p) = (top..rows.len()).find(|&r| rows[r][c] != 0) else { return false };
        if rows[p][c].abs() != 1 {
            return false;
        }
        rows.swap(top, p);
    }
    true
}

/// RG1–RG3 for `sl_{ℓ+1}(K_q)` on the window.
pub fn verify_root_grading(ell: usize, q: &QuantumMatrix, window: i64) -> Result<CheckReport> {
    let lie = LieTorus::new(ell, q.clone())?;
    verify_root_grading_with(&lie, window, &|x, y| lie.bracket(x, y))
}

/// [`verify_root_grading`] with the bracket supplied by the caller.
pub fn verify_root_grading_with(
    lie: &LieTorus,
    window: i64,
    bracket: &(dyn Fn(&LieElement, &LieElement) -> Result<LieElement> + Sync),
) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("root-grading", Some(window));
    let rank = lie.rank();
    let size = lie.size();
    let ell = lie.ell();
    let zero = Degree::zero(rank);
    let basis = lie.system().chevalley_basis();

    // RG1: g = sl(ℚ) ⊗ 1 is a subalgebra with the expected bracket.
    let mut g: Vec<(RatMatrix, LieElement)> = Vec::new();
    for k in 0..ell {
        let m = basis.h(k);
        g.push((m.clone(), LieElement::embed(&m, rank)));
    }
    for root in lie.system().roots() {
        let m = basis.e(&root)?;
        g.push((m.clone(), LieElement::embed(&m, rank)));
    }
    let pairs: Vec<(usize, usize)> = (0..g.len()).flat_map(|a| (a + 1..g.len()).map(move |b| (a, b))).collect();
    report.push(run_check("RG1", &pairs, |&(a, b)| {
        let got = bracket(&g[a].1, &g[b].1).map_err(fail)?;
        let expected = LieElement::embed(&g[a].0.bracket(&g[b].0), rank);
        if got == expected {
            Ok(())
        } else {
            Err((
                format!("[{}, {}] = {got}, expected {expected} in g", g[a].1, g[b].1),
                Some(json!({ "x": lie_json(lie, &g[a].1), "y": lie_json(lie, &g[b].1) })),
            ))
        }
    }));

    // RG2: L_α is the α-eigenspace of ad h, and every element is the sum
    // of its components.
    let homogeneous = lie.homogeneous_window(window);
    report.push(run_check("RG2/eigenspaces", &homogeneous, |x| {
        let key = x.support()[0].clone();
        for k in 0..ell {
            let h = lie.h(k, zero.clone());
            let expected = match key.root {
                Root::Zero => lie.zero(),
                root => x.scale(&rat(cartan_integer(&root, &Root::Pair(k, k + 1)).map_err(fail)?)),
            };
            if bracket(&h, x).map_err(fail)? != expected {
                return Err((
                    format!("[h_{}, {x}] ≠ ⟨{}, α_{}^∨⟩ · x", k + 1, key.root, k + 1),
                    Some(json!({ "x": lie_json(lie, x), "k": k })),
                ));
            }
        }
        Ok(())
    }));

    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let mixed: Vec<LieElement> = (0..64)
        .map(|_| {
            let mut x = lie.zero();
            for _ in 0..4 {
                let term = homogeneous.choose(&mut rng).expect("nonempty window");
                x = x.add(&term.scale(&rat(rng.gen_range(-3..=3))));
            }
            x
        })
        .collect();
    report.push(run_check("RG2/decomposition", &mixed, |x| {
        let parts = lie.components(x).map_err(fail)?;
        let sum = parts.iter().fold(lie.zero(), |acc, (_, c)| acc.add(c));
        let disjoint = parts.windows(2).all(|w| w[0].0 != w[1].0);
        if sum == *x && disjoint {
            Ok(())
        } else {
            Err((format!("components of {x} do not sum back"), Some(json!({ "x": lie_json(lie, x) }))))
        }
    }));

    // RG3: for each λ, brackets [E_ij x^μ, E_ji x^{λ−μ}] span L_0^λ.
    let degrees = degrees_by_size(rank, window);
    let window_degrees = degree_window(rank, window);
    let roots = lie.system().roots();
    report.push(run_check("RG3", &degrees, |lambda| {
        let key = GradedComponentKey { root: Root::Zero, degree: lambda.clone() };
        let mut rows = Vec::new();
        for root in &roots {
            let Root::Pair(i, j) = *root else { unreachable!() };
            for mu in &window_degrees {
                let x = lie.unit(i, j, mu.clone());
                let y = lie.unit(j, i, lambda - mu);
                let b = bracket(&x, &y).map_err(fail)?;
                if !b.is_zero() && !lie.is_homogeneous(&b, &key).map_err(fail)? {
                    return Err((
                        format!("[{x}, {y}] = {b} leaves L_0^{lambda}"),
                        Some(json!({ "x": lie_json(lie, &x), "y": lie_json(lie, &y) })),
                    ));
                }
                rows.push((0..size).map(|k| b.entry(k, k).coefficient(lambda)).collect::<Vec<_>>());
            }
        }
        let full = lie.torus().commutator_component_full(lambda, window).map_err(fail)?;
        let expected = if full { size } else { size - 1 };
        let got = rational_rank(&rows);
        if got == expected {
            Ok(())
        } else {
            Err((
                format!("brackets span a {got}-dimensional subspace of L_0^{lambda}, expected {expected}"),
                Some(json!({ "degree": lambda })),
            ))
        }
    }));

    Ok(report.finish(started))
}

/// A division witness for every `(α, λ)` with `α ≠ 0` and `λ` in the window.
pub fn verify_division(ell: usize, q: &QuantumMatrix, window: i64) -> Result<CheckReport> {
    let lie = LieTorus::new(ell, q.clone())?;
    verify_division_on_support(&lie, window, &|_| true)
}

/// [`verify_division`] restricted to degrees where `supported` holds. Keys
/// outside the support are vacuous and only counted.
pub fn verify_division_on_support(
    lie: &LieTorus,
    window: i64,
    supported: &(dyn Fn(&Degree) -> bool + Sync),
) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("division", Some(window));
    let mut keys = Vec::new();
    let mut vacuous = 0usize;
    for root in lie.system().roots() {
        for degree in degree_window(lie.rank(), window) {
            if supported(&degree) {
                keys.push(GradedComponentKey { root, degree });
            } else {
                vacuous += 1;
            }
        }
    }
    let mut check = run_check("division_witness", &keys, |key| {
        let replay = json!({ "root": key.root, "degree": key.degree });
        let (e, f) = lie.division_witness(key, window).map_err(|err| (err.to_string(), Some(replay.clone())))?;
        let flipped = GradedComponentKey { root: key.root.neg(), degree: -&key.degree };
        let in_place = lie.is_homogeneous(&e, key).map_err(fail)? && lie.is_homogeneous(&f, &flipped).map_err(fail)?;
        if in_place && !f.is_zero() {
            Ok(())
        } else {
            Err((format!("witness for {key} has the wrong degree"), Some(replay)))
        }
    });
    if vacuous > 0 {
        let previous = check.detail.as_ref().map(|d| format!("; {d}")).unwrap_or_default();
        check = check.with_detail(format!("{vacuous} keys outside the support skipped as vacuous{previous}"));
    }
    report.push(check);
    Ok(report.finish(started))
}

/// Lie-torus axioms beyond the root grading: Jacobi, `Ad η` automorphism,
/// `dim L_α^λ ≤ 1`, and centerlessness against the generating set.
pub fn verify_lie_torus(ell: usize, q: &QuantumMatrix, window: i64, seed: u64) -> Result<CheckReport> {
    let started = Instant::now();
    let lie = LieTorus::new(ell, q.clone())?;
    let mut report = CheckReport::new("lie-torus", Some(window));
    let elements = lie.homogeneous_window(window);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let triples: Vec<[usize; 3]> = (0..200).map(|_| [0; 3].map(|_| rng.gen_range(0..elements.len()))).collect();

    report.push(run_check("jacobi", &triples, |&[a, b, c]| {
        let (x, y, z) = (&elements[a], &elements[b], &elements[c]);
        let br = |u: &LieElement, v: &LieElement| lie.bracket(u, v).map_err(fail);
        let sum = br(x, &br(y, z)?)?.add(&br(y, &br(z, x)?)?).add(&br(z, &br(x, y)?)?);
        if sum.is_zero() {
            Ok(())
        } else {
            Err((
                format!("Jacobi fails on {x}, {y}, {z}"),
                Some(json!({ "x": lie_json(&lie, x), "y": lie_json(&lie, y), "z": lie_json(&lie, z) })),
            ))
        }
    }));

    let simple = lie.system().simple_roots();
    let eta_cases: Vec<(usize, usize, Root)> =
        triples.iter().map(|&[a, b, _]| (a, b, *simple.choose(&mut rng).expect("ℓ ≥ 2"))).collect();
    report.push(run_check("ad_eta_automorphism", &eta_cases, |&(a, b, alpha)| {
        let (x, y) = (&elements[a], &elements[b]);
        let lhs = lie.ad_eta(&alpha, &lie.bracket(x, y).map_err(fail)?).map_err(fail)?;
        let rhs =
            lie.bracket(&lie.ad_eta(&alpha, x).map_err(fail)?, &lie.ad_eta(&alpha, y).map_err(fail)?).map_err(fail)?;
        if lhs == rhs {
            Ok(())
        } else {
            Err((
                format!("Ad η_{alpha}(1) does not preserve [{x}, {y}]"),
                Some(json!({ "x": lie_json(&lie, x), "y": lie_json(&lie, y), "root": alpha })),
            ))
        }
    }));

    // Off-diagonal slots carry one torus coordinate each, so L_α^λ is
    // spanned by E_ij x^λ; check the projection lands there.
    report.push(run_check("graded_dim_one", &triples, |&[a, b, _]| {
        let x = elements[a].add(&elements[b]);
        for (key, part) in lie.components(&x).map_err(fail)? {
            if let Root::Pair(i, j) = key.root {
                let c = part.entry(i, j).coefficient(&key.degree);
                if part != lie.unit(i, j, key.degree.clone()).scale(&c) {
                    return Err((format!("{key} component is not a multiple of E_ij x^λ"), None));
                }
            }
        }
        Ok(())
    }));

    let generators = lie.default_generators();
    report.push(run_check("centerless", &elements, |x| {
        if lie.is_central(x, Some(&generators)).map_err(fail)? {
            Err((format!("{x} commutes with every generator"), Some(json!({ "x": lie_json(&lie, x) }))))
        } else {
            Ok(())
        }
    }));

    Ok(report.finish(started))
}

/// Coordinate-torus axioms on the window: unit, monomial invertibility,
/// support generation, plus associativity (quantum) or the alternative
/// laws and the octonion presentation.
pub fn verify_torus_axioms(torus: &dyn GradedTorus, window: i64, seed: u64) -> Result<CheckReport> {
    let started = Instant::now();
    let mut report = CheckReport::new("torus-axioms", Some(window));
    let n = torus.rank();
    let degrees = degrees_by_size(n, window);
    let supported: Vec<Degree> = degrees.iter().filter(|d| torus.is_supported(d)).cloned().collect();
    let x = |d: &Degree| TorusElement::x(d.clone());
    let one = TorusElement::one(n);
    let deg_json = |d: &Degree| json!({ "degree": d });

    report.push(run_check("unit", &supported, |d| {
        if torus.mul(&one, &x(d)).map_err(fail)? == x(d) && torus.mul(&x(d), &one).map_err(fail)? == x(d) {
            Ok(())
        } else {
            Err((format!("1 is not a unit for x^{d}"), Some(deg_json(d))))
        }
    }));

    report.push(run_check("invertibility", &supported, |d| {
        let inverse = torus.invert_monomial(d).map_err(|e| (e.to_string(), Some(deg_json(d))))?;
        if torus.mul(&x(d), &inverse).map_err(fail)? == one && torus.mul(&inverse, &x(d)).map_err(fail)? == one {
            Ok(())
        } else {
            Err((format!("x^{d} has no two-sided inverse"), Some(deg_json(d))))
        }
    }));

    let generated = generates_lattice(n, &supported);
    report.push(if generated {
        Check::passed("support_generates", supported.len())
    } else {
        Check::failed(
            "support_generates",
            supported.len(),
            format!("support in the window does not generate ℤ^{n}"),
            Some(json!({ "window": window })),
        )
    });

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = degrees.len().pow(3);
    let triples: Vec<[usize; 3]> = if total <= EXHAUSTIVE_LIMIT {
        let m = degrees.len();
        (0..total).map(|k| [k / (m * m), (k / m) % m, k % m]).collect()
    } else {
        (0..EXHAUSTIVE_LIMIT).map(|_| [0; 3].map(|_| rng.gen_range(0..degrees.len()))).collect()
    };
    let c = |a: &Degree, b: &Degree| torus.structure_constant(a, b);

    match torus.kind() {
        TorusKind::Quantum => {
            let mut check = run_check("associativity", &triples, |&[a, b, cc]| {
                let (l, m, r) = (&degrees[a], &degrees[b], &degrees[cc]);
                if c(l, m) * c(&(l + m), r) == c(m, r) * c(l, &(m + r)) {
                    Ok(())
                } else {
                    Err((format!("(x^{l} x^{m}) x^{r} ≠ x^{l} (x^{m} x^{r})"), Some(json!({ "degrees": [l, m, r] }))))
                }
            });
            if total > EXHAUSTIVE_LIMIT && check.pass {
                check = check.with_detail(format!("{EXHAUSTIVE_LIMIT} seeded triples of {total}"));
            }
            report.push(check);
        }
        TorusKind::Octonion => {
            let m = degrees.len();
            let pairs: Vec<(usize, usize)> = if m * m <= EXHAUSTIVE_LIMIT {
                (0..m).flat_map(|a| (0..m).map(move |b| (a, b))).collect()
            } else {
                (0..EXHAUSTIVE_LIMIT).map(|_| (rng.gen_range(0..m), rng.gen_range(0..m))).collect()
            };
            let mut check = run_check("alternative_monomials", &pairs, |&(a, b)| {
                let (u, v) = (&degrees[a], &degrees[b]);
                let uu = u + u;
                let left = c(u, u) * c(&uu, v) == c(u, v) * c(u, &(u + v));
                let right = c(v, u) * c(&(v + u), u) == c(u, u) * c(v, &uu);
                if left && right {
                    Ok(())
                } else {
                    Err((format!("alternative law fails for x^{u}, x^{v}"), Some(json!({ "degrees": [u, v] }))))
                }
            });
            if m * m > EXHAUSTIVE_LIMIT && check.pass {
                check = check.with_detail(format!("{EXHAUSTIVE_LIMIT} seeded pairs of {}", m * m));
            }
            report.push(check);

            let samples: Vec<(TorusElement, TorusElement)> = (0..100)
                .map(|_| (random_element(&mut rng, &degrees, 3), random_element(&mut rng, &degrees, 3)))
                .collect();
            report.push(run_check("alternative_elements", &samples, |(a, b)| {
                let ok = torus.associator(a, a, b).map_err(fail)?.is_zero()
                    && torus.associator(b, a, a).map_err(fail)?.is_zero();
                if ok {
                    Ok(())
                } else {
                    Err((format!("alternative law fails for a = {a}, b = {b}"), Some(json!({ "a": a, "b": b }))))
                }
            }));

            report.push(octonion_presentation(torus, &degrees));
        }
    }

    Ok(report.finish(started))
}

fn random_element(rng: &mut ChaCha8Rng, degrees: &[Degree], terms: usize) -> TorusElement {
    let rank = degrees[0].rank();
    let mut out = TorusElement::zero(rank);
    for _ in 0..terms {
        let d = degrees.choose(rng).expect("nonempty window").clone();
        let mut coef = rat(rng.gen_range(-4..=4));
        if coef.is_zero() {
            coef = Rational::one();
        }
        out.add_term(d, coef);
    }
    out
}

/// `x_i x_j = −x_j x_i` (`i ≠ j ≤ 3`), `(x_1 x_2) x_3 = −x_1 (x_2 x_3)`,
/// and `x_j` (`j ≥ 4`) central and associating with monomials of degree
/// in `[-1, 1]ⁿ`.
fn octonion_presentation(torus: &dyn GradedTorus, degrees: &[Degree]) -> Check {
    let n = torus.rank();
    let e = |i: usize| Degree::unit(n, i);
    let c = |a: &Degree, b: &Degree| torus.structure_constant(a, b);
    let minus_one = -Rational::one();
    let mut cases = 0;
    for i in 0..3 {
        for j in 0..3 {
            if i != j {
                cases += 1;
                if c(&e(i), &e(j)) != &minus_one * c(&e(j), &e(i)) {
                    return Check::failed(
                        "presentation",
                        cases,
                        format!("x_{} x_{} ≠ −x_{} x_{}", i + 1, j + 1, j + 1, i + 1),
                        Some(json!({ "degrees": [e(i), e(j)] })),
                    );
                }
            }
        }
    }
    cases += 1;
    let (e1, e2, e3) = (e(0), e(1), e(2));
    if c(&e1, &e2) * c(&(&e1 + &e2), &e3) != &minus_one * c(&e2, &e3) * c(&e1, &(&e2 + &e3)) {
        return Check::failed(
            "presentation",
            cases,
            "(x_1 x_2) x_3 ≠ −x_1 (x_2 x_3)",
            Some(json!({ "degrees": [e1, e2, e3] })),
        );
    }
    let small: Vec<&Degree> = degrees.iter().filter(|d| d.max_abs() <= 1).collect();
    for j in 3..n {
        let xj = e(j);
        for &a in &small {
            for &b in &small {
                cases += 1;
                let commutes = c(&xj, a) == c(a, &xj);
                let assoc = c(&xj, a) * c(&(&xj + a), b) == c(a, b) * c(&xj, &(a + b));
                if !commutes || !assoc {
                    return Check::failed(
                        "presentation",
                        cases,
                        format!("x_{} is not in the nucleus: fails with x^{a}, x^{b}", j + 1),
                        Some(json!({ "degrees": [xj, a, b] })),
                    );
                }
            }
        }
    }
    Check::passed("presentation", cases)
}

/// Recovers the coordinate algebra from the Lie bracket: for the A₂-pair
/// `(ε_1−ε_2, ε_2−ε_3)` the bracket gives `ab`, for the reversed pair `ba`,
/// on `samples` seeded monomial pairs. For elementary `q` the
/// anti-involution read off from the synthesized Chevalley involution is
/// compared with `x_i ↦ x_i^{-1}` on every window monomial.
pub fn verify_coordinate_recovery(
    ell: usize,
    q: &QuantumMatrix,
    window: i64,
    seed: u64,
    samples: usize,
) -> Result<CheckReport> {
    use crate::involutions::{extract_anti_involution, synthesize_chevalley, synthesize_pre_chevalley_qt};

    let started = Instant::now();
    let lie = LieTorus::new(ell, q.clone())?;
    let mut report = CheckReport::new("coordinate-recovery", Some(window));
    let degrees = degree_window(lie.rank(), window);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let monomial = |rng: &mut ChaCha8Rng| {
        let d = degrees.choose(rng).expect("nonempty window").clone();
        let c = rat(*[-3, -2, -1, 1, 2, 3].choose(rng).expect("nonempty"));
        TorusElement::monomial(d, c)
    };
    let pairs: Vec<(TorusElement, TorusElement)> =
        (0..samples).map(|_| (monomial(&mut rng), monomial(&mut rng))).collect();
    let (beta, gamma) = (Root::Pair(0, 1), Root::Pair(1, 2));
    let torus = lie.torus();

    for (name, first, second, reversed) in
        [("canonical_pair", beta, gamma, false), ("reversed_pair", gamma, beta, true)]
    {
        report.push(run_check(name, &pairs, |(a, b)| {
            let got = lie.extract_coordinate_mul(&first, &second, a, b).map_err(fail)?;
            let expected = if reversed { torus.mul(b, a) } else { torus.mul(a, b) }.map_err(fail)?;
            if got == expected {
                Ok(())
            } else {
                Err((
                    format!("m_({first},{second})({a}, {b}) = {got}, expected {expected}"),
                    Some(json!({ "a": a, "b": b, "pair": [first, second] })),
                ))
            }
        }));
    }

    match synthesize_chevalley(ell, q) {
        Ok(desc) => {
            let bar = synthesize_pre_chevalley_qt(q)?;
            report.exists = Some(true);
            report.push(run_check("anti_involution_round_trip", &degrees, |d| {
                let x = TorusElement::x(d.clone());
                let got = extract_anti_involution(&desc, &lie, &x).map_err(fail)?;
                let expected = bar.apply(&x).map_err(fail)?;
                if got == expected {
                    Ok(())
                } else {
                    Err((format!("extracted bar(x^{d}) = {got}, expected {expected}"), Some(json!({ "degree": d }))))
                }
            }));
        }
        Err(Error::NotElementary { i, j, value }) => {
            report.exists = Some(false);
            report.reason = Some(format!("no Chevalley involution to extract from: q_{i}{j} = {value} is not ±1"));
        }
        Err(e) => return Err(e),
    }
    Ok(report.finish(started))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::OctonionTorus;
    use crate::quantum_torus::QuantumTorus;

    fn q2(v: i64) -> QuantumMatrix {
        QuantumMatrix::with_pair(2, 0, 1, rat(v)).unwrap()
    }

    #[test]
    fn lattice_generation() {
        let d = |c: &[i64]| Degree::new(c.to_vec());
        assert!(generates_lattice(2, &[d(&[2, 1]), d(&[1, 1])]));
        assert!(!generates_lattice(2, &[d(&[2, 0]), d(&[0, 1])]));
        assert!(!generates_lattice(2, &[d(&[1, 0])]));
        assert!(generates_lattice(2, &[d(&[3, 0]), d(&[2, 0]), d(&[0, -1])]));
    }

    #[test]
    fn rank_over_q() {
        let r = |v: &[i64]| v.iter().map(|&x| rat(x)).collect::<Vec<_>>();
        assert_eq!(rational_rank(&[r(&[1, -1, 0]), r(&[0, 1, -1]), r(&[1, 0, -1])]), 2);
        assert_eq!(rational_rank(&[r(&[1, 0]), r(&[0, 2])]), 2);
        assert_eq!(rational_rank(&[]), 0);
    }

    #[test]
    fn root_grading_small() {
        let report = verify_root_grading(2, &QuantumMatrix::identity(2), 1).unwrap();
        assert!(report.pass, "{report:?}");
    }

    #[test]
    fn zeroed_brackets_fail_rg3_at_origin() {
        let lie = LieTorus::new(2, QuantumMatrix::identity(2)).unwrap();
        let mock = |x: &LieElement, y: &LieElement| {
            let b = lie.bracket(x, y)?;
            let diagonal = b.nonzero_entries().all(|(i, j, _)| i == j);
            Ok(if diagonal { lie.zero() } else { b })
        };
        let report = verify_root_grading_with(&lie, 1, &mock).unwrap();
        let rg3 = report.check("RG3").unwrap();
        assert!(!rg3.pass);
        assert_eq!(rg3.counterexample, Some(json!({ "degree": [0, 0] })));
    }

    #[test]
    fn division_small() {
        assert!(verify_division(2, &q2(-1), 1).unwrap().pass);
        let lie = LieTorus::new(2, q2(1)).unwrap();
        let even = |d: &Degree| d.coords().iter().all(|c| c % 2 == 0);
        let report = verify_division_on_support(&lie, 1, &even).unwrap();
        assert!(report.pass);
        assert!(report.checks[0].detail.as_ref().unwrap().contains("vacuous"));
    }

    #[test]
    fn torus_suites() {
        for v in [1, -1, 2] {
            let report = verify_torus_axioms(&QuantumTorus::new(q2(v)), 2, 0).unwrap();
            assert!(report.pass, "{report:?}");
        }
        let report = verify_torus_axioms(&OctonionTorus::new(3).unwrap(), 1, 0).unwrap();
        assert!(report.pass, "{report:?}");
    }

    struct Holed;

    impl GradedTorus for Holed {
        fn kind(&self) -> TorusKind {
            TorusKind::Quantum
        }
        fn rank(&self) -> usize {
            1
        }
        fn structure_constant(&self, lhs: &Degree, rhs: &Degree) -> Rational {
            // x^2 · x^{-2} = 0
            if lhs.coords()[0].abs() == 2 && lhs.coords()[0] + rhs.coords()[0] == 0 {
                Rational::zero()
            } else {
                Rational::one()
            }
        }
    }

    #[test]
    fn mock_non_invertible_degree() {
        let report = verify_torus_axioms(&Holed, 2, 0).unwrap();
        let check = report.check("invertibility").unwrap();
        assert!(!check.pass);
        assert_eq!(check.counterexample, Some(json!({ "degree": [-2] })));
    }

    #[test]
    fn coordinate_recovery_small() {
        let report = verify_coordinate_recovery(3, &q2(-1), 1, 0, 10).unwrap();
        assert!(report.pass, "{report:?}");
        let report = verify_coordinate_recovery(3, &q2(2), 1, 0, 10).unwrap();
        assert_eq!(report.exists, Some(false));
        assert!(report.checks.iter().all(|c| c.pass));
    }

    #[test]
    fn lie_torus_small() {
        let report = verify_lie_torus(2, &q2(-1), 1, 0).unwrap();
        assert!(report.pass, "{report:?}");
    }
}
