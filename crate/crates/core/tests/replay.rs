//! Counterexamples in failing reports reproduce the failure when fed
//! back through the library.

use lietorus::involutions::verify_chevalley;
use lietorus::lie::LieElementJson;
use lietorus::scalars::rat;
use lietorus::verify::verify_root_grading_with;
use lietorus::{Degree, GradedComponentKey, LieElement, LieTorus, QuantumMatrix, Result};

fn lie() -> LieTorus {
    LieTorus::new(2, QuantumMatrix::with_pair(2, 0, 1, rat(-1)).unwrap()).unwrap()
}

#[test]
fn degree_flip_counterexample_replays() {
    let lie = lie();
    let transpose_only = |x: &LieElement| -> Result<LieElement> { Ok(x.transpose().neg()) };
    let report = verify_chevalley(&transpose_only, &lie, 1).unwrap();
    let check = report.check("degree_flip").unwrap();
    assert!(!check.pass);
    let json: LieElementJson = serde_json::from_value(check.counterexample.clone().unwrap()["x"].clone()).unwrap();
    let (replayed, x) = LieTorus::from_json(&json).unwrap();
    let key = x.support()[0].clone();
    let flipped = GradedComponentKey { root: key.root.neg(), degree: -&key.degree };
    assert!(!replayed.is_homogeneous(&transpose_only(&x).unwrap(), &flipped).unwrap());
}

#[test]
fn bracket_counterexample_replays() {
    let lie = lie();
    // Drops every term of nonzero degree: linear and degree-flipping on
    // L^0 but not bracket-preserving.
    let truncate = |x: &LieElement| -> Result<LieElement> {
        let zero = Degree::zero(2);
        Ok(x.map_entries(|a| Ok(a.component(&zero)))?.transpose().neg())
    };
    let report = verify_chevalley(&truncate, &lie, 1).unwrap();
    assert!(!report.pass);
    for check in report.failures() {
        let payload = check.counterexample.as_ref().expect("failing checks carry a counterexample");
        if check.name == "bracket" {
            let x: LieElementJson = serde_json::from_value(payload["x"].clone()).unwrap();
            let y: LieElementJson = serde_json::from_value(payload["y"].clone()).unwrap();
            let (l, x) = LieTorus::from_json(&x).unwrap();
            let (_, y) = LieTorus::from_json(&y).unwrap();
            let lhs = truncate(&l.bracket(&x, &y).unwrap()).unwrap();
            let rhs = l.bracket(&truncate(&x).unwrap(), &truncate(&y).unwrap()).unwrap();
            assert_ne!(lhs, rhs);
        }
    }
}

#[test]
fn rg3_counterexample_replays() {
    let lie = LieTorus::new(2, QuantumMatrix::identity(2)).unwrap();
    let zeroed = |x: &LieElement, y: &LieElement| -> Result<LieElement> {
        let b = lie.bracket(x, y)?;
        Ok(if b.nonzero_entries().all(|(i, j, _)| i == j) { lie.zero() } else { b })
    };
    let report = verify_root_grading_with(&lie, 1, &zeroed).unwrap();
    let check = report.check("RG3").unwrap();
    let degree: Degree = serde_json::from_value(check.counterexample.clone().unwrap()["degree"].clone()).unwrap();
    assert_eq!(degree, Degree::zero(2));
    // at λ = 0 the mock bracket of E_12 and E_21 vanishes, so nothing spans L_0^0
    let b = zeroed(&lie.unit(0, 1, degree.clone()), &lie.unit(1, 0, degree)).unwrap();
    assert!(b.is_zero());
}
