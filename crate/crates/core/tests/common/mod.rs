//! Independent models used as oracles by the integration tests.

#![allow(dead_code)]

use lietorus::scalars::{rat, ratio, rational_pow};
use lietorus::{Degree, QuantumMatrix, Rational};
use num_traits::One;

pub fn deg(c: &[i64]) -> Degree {
    Degree::new(c.to_vec())
}

pub fn q_pair(n: usize, i: usize, j: usize, v: Rational) -> QuantumMatrix {
    QuantumMatrix::with_pair(n, i, j, v).unwrap()
}

/// The matrices used across the suites: n = 2 with q_12 in {1, −1, 2, 1/3}
/// and n = 3 with mixed signs, with and without a bad entry.
pub fn matrix_family() -> Vec<QuantumMatrix> {
    let mut out: Vec<QuantumMatrix> =
        [rat(1), rat(-1), rat(2), ratio(1, 3)].into_iter().map(|v| q_pair(2, 0, 1, v)).collect();
    out.push(mixed3(None));
    out.push(mixed3(Some(rat(5))));
    out
}

/// q_12 = −1, q_13 = 1, q_23 = −1, optionally with q_13 replaced.
pub fn mixed3(q13: Option<Rational>) -> QuantumMatrix {
    let q13 = q13.unwrap_or_else(|| rat(1));
    let upper = [[rat(1), rat(-1), q13.clone()], [rat(0), rat(1), rat(-1)], [rat(0), rat(0), rat(1)]];
    let mut e = vec![vec![rat(1); 3]; 3];
    for i in 0..3 {
        for j in i + 1..3 {
            e[i][j] = upper[i][j].clone();
            e[j][i] = upper[i][j].recip();
        }
    }
    QuantumMatrix::new(e).unwrap()
}

/// Expands `x^λ` as a word of letters `x_i^{±1}` in normal order.
pub fn word_of(d: &Degree) -> Vec<(usize, i64)> {
    let mut w = Vec::new();
    for (i, &c) in d.coords().iter().enumerate() {
        for _ in 0..c.abs() {
            w.push((i, c.signum()));
        }
    }
    w
}

/// Rewrites a word into normal order using only `x_i x_j = q_ij x_j x_i`
/// and `x_i x_i^{-1} = 1`; returns the scalar and the resulting degree.
pub fn normalize_word(q: &QuantumMatrix, word: &[(usize, i64)]) -> (Rational, Degree) {
    let mut w = word.to_vec();
    let mut coef = Rational::one();
    loop {
        let mut changed = false;
        let mut k = 0;
        while k + 1 < w.len() {
            let ((i, e), (j, f)) = (w[k], w[k + 1]);
            if i == j && e == -f {
                w.drain(k..k + 2);
                changed = true;
                continue;
            }
            if i > j {
                // x_i^e x_j^f = q_ij^{ef} x_j^f x_i^e
                coef *= rational_pow(q.entry(i, j), e * f);
                w.swap(k, k + 1);
                changed = true;
            }
            k += 1;
        }
        if !changed {
            break;
        }
    }
    let mut coords = vec![0; q.n()];
    for (i, e) in w {
        coords[i] += e;
    }
    (coef, Degree::new(coords))
}

/// `x^λ x^μ = t(λ, μ) x^{λ+μ}` computed by word rewriting.
pub fn twist_by_rewriting(q: &QuantumMatrix, lambda: &Degree, mu: &Degree) -> Rational {
    let mut word = word_of(lambda);
    word.extend(word_of(mu));
    let (coef, d) = normalize_word(q, &word);
    assert_eq!(d, lambda + mu);
    coef
}

/// Unit octonions `±e_k` (`k = 0` is 1) with the Fano-plane table
/// `e_i e_j = e_k` for the cyclic triples below.
pub mod fano {
    const LINES: [[usize; 3]; 7] = [[1, 2, 3], [1, 4, 5], [1, 7, 6], [2, 4, 6], [2, 5, 7], [3, 4, 7], [3, 6, 5]];

    /// `(sign, k)` with `e_a e_b = sign · e_k`.
    pub fn mul(a: usize, b: usize) -> (i8, usize) {
        if a == 0 {
            return (1, b);
        }
        if b == 0 {
            return (1, a);
        }
        if a == b {
            return (-1, 0);
        }
        for line in LINES {
            for r in 0..3 {
                let (x, y, z) = (line[r], line[(r + 1) % 3], line[(r + 2) % 3]);
                if (x, y) == (a, b) {
                    return (1, z);
                }
                if (y, x) == (a, b) {
                    return (-1, z);
                }
            }
        }
        unreachable!("every pair of distinct imaginary units lies on one line")
    }

    /// The unit `±e_k` for parity mask `m` over the generators
    /// `g_1 = e_1, g_2 = e_2, g_3 = e_4`, multiplied left to right.
    pub fn unit_of_mask(m: u8) -> (i8, usize) {
        let gens = [1usize, 2, 4];
        let mut acc = (1i8, 0usize);
        for (bit, &g) in gens.iter().enumerate() {
            if (m >> bit) & 1 == 1 {
                let (s, k) = mul(acc.1, g);
                acc = (acc.0 * s, k);
            }
        }
        acc
    }

    /// `ab = ± ba` for the units with these masks.
    pub fn commutation_sign(a: u8, b: u8) -> i8 {
        let (_, x) = unit_of_mask(a);
        let (_, y) = unit_of_mask(b);
        let (s1, k1) = mul(x, y);
        let (s2, k2) = mul(y, x);
        assert_eq!(k1, k2);
        s1 * s2
    }

    /// `(ab)c = ± a(bc)` for the units with these masks.
    pub fn associator_sign(a: u8, b: u8, c: u8) -> i8 {
        let (_, x) = unit_of_mask(a);
        let (_, y) = unit_of_mask(b);
        let (_, z) = unit_of_mask(c);
        let (s1, xy) = mul(x, y);
        let (s2, left) = mul(xy, z);
        let (s3, yz) = mul(y, z);
        let (s4, right) = mul(x, yz);
        assert_eq!(left, right);
        s1 * s2 * s3 * s4
    }
}

pub fn parity_mask(d: &Degree) -> u8 {
    let mut m = 0;
    for i in 0..3 {
        if d.coords()[i].rem_euclid(2) == 1 {
            m |= 1 << i;
        }
    }
    m
}
