//! Orthogonality and symmetry of the 3j/6j symbols for all momenta up to 6.

use raman_core::{triangle_ok, wigner_3j, wigner_6j, HalfInt};

const MAX_TWICE: i32 = 12;

fn momenta() -> impl Iterator<Item = HalfInt> + Clone {
    (0..=MAX_TWICE).map(HalfInt::from_twice)
}

fn weight(j: HalfInt) -> f64 {
    j.multiplicity() as f64
}

#[test]
fn three_j_orthogonality() {
    let mut checked = 0;
    for j1 in momenta() {
        for j2 in momenta() {
            for j3 in momenta().filter(|&j3| triangle_ok(j1, j2, j3)) {
                let mut sum = 0.0;
                for m1 in j1.projections() {
                    for m2 in j2.projections() {
                        let m3 = -(m1 + m2);
                        if !j3.admits_projection(m3) {
                            continue;
                        }
                        let s = wigner_3j(j1, j2, j3, m1, m2, m3).unwrap();
                        sum += s * s;
                    }
                }
                assert!((sum - 1.0).abs() < 1e-12, "({j1} {j2} {j3}): {sum}");
                checked += 1;
            }
        }
    }
    assert!(checked > 500);
}

#[test]
fn three_j_second_orthogonality() {
    // Σ_{m1 m2} (j1 j2 j3; m1 m2 m3)(j1 j2 j3'; m1 m2 m3) = δ_{j3 j3'} / (2j3+1) at fixed m3
    for j1 in momenta().step_by(2) {
        for j2 in momenta() {
            for m3 in HalfInt::range_inclusive(-(j1 + j2), j1 + j2) {
                let js: Vec<HalfInt> = HalfInt::range_inclusive((j1 - j2).abs(), j1 + j2)
                    .filter(|j| j.admits_projection(m3))
                    .collect();
                for &a in &js {
                    for &b in &js {
                        let mut sum = 0.0;
                        for m1 in j1.projections() {
                            let m2 = -(m1 + m3);
                            if !j2.admits_projection(m2) {
                                continue;
                            }
                            sum += wigner_3j(j1, j2, a, m1, m2, m3).unwrap()
                                * wigner_3j(j1, j2, b, m1, m2, m3).unwrap();
                        }
                        let expected = if a == b { 1.0 / weight(a) } else { 0.0 };
                        assert!((sum - expected).abs() < 1e-12);
                    }
                }
            }
        }
    }
}

#[test]
fn six_j_orthogonality() {
    let mut checked = 0usize;
    for a in momenta() {
        for b in momenta() {
            let xs: Vec<HalfInt> = momenta().filter(|&x| triangle_ok(a, b, x)).collect();
            for c in momenta() {
                for d in momenta() {
                    let ps: Vec<HalfInt> = momenta()
                        .filter(|&p| triangle_ok(a, d, p) && triangle_ok(c, b, p))
                        .collect();
                    if ps.is_empty() {
                        continue;
                    }
                    // completeness requires every admissible x to be within range
                    let x_hi = (a + b).min(c + d);
                    if x_hi.twice() > MAX_TWICE {
                        continue;
                    }
                    let rows: Vec<Vec<f64>> = ps
                        .iter()
                        .map(|&p| xs.iter().map(|&x| wigner_6j(a, b, x, c, d, p)).collect())
                        .collect();
                    for (i, &p) in ps.iter().enumerate() {
                        for (j, _) in ps.iter().enumerate() {
                            let sum: f64 = xs
                                .iter()
                                .enumerate()
                                .map(|(k, &x)| weight(x) * rows[i][k] * rows[j][k])
                                .sum();
                            let expected = if i == j { 1.0 / weight(p) } else { 0.0 };
                            assert!(
                                (sum - expected).abs() < 1e-12,
                                "{{{a} {b} x; {c} {d} {p}}}: {sum}"
                            );
                            checked += 1;
                        }
                    }
                }
            }
        }
    }
    assert!(checked > 10_000);
}

#[test]
fn six_j_permutation_symmetry() {
    let small = || (0..=8).map(HalfInt::from_twice);
    for j1 in small() {
        for j2 in small() {
            for j3 in small().filter(|&j3| triangle_ok(j1, j2, j3)) {
                for j4 in small() {
                    for j5 in small() {
                        for j6 in small() {
                            let v = wigner_6j(j1, j2, j3, j4, j5, j6);
                            let perms = [
                                wigner_6j(j2, j1, j3, j5, j4, j6),
                                wigner_6j(j1, j3, j2, j4, j6, j5),
                                wigner_6j(j3, j2, j1, j6, j5, j4),
                                wigner_6j(j2, j3, j1, j5, j6, j4),
                                // swap upper and lower in two columns
                                wigner_6j(j4, j5, j3, j1, j2, j6),
                                wigner_6j(j1, j5, j6, j4, j2, j3),
                            ];
                            for p in perms {
                                assert!((p - v).abs() < 1e-13);
                            }
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn selection_rules_are_exact_zeros() {
    let h = HalfInt::from_twice;
    assert_eq!(wigner_3j(h(2), h(2), h(6), h(0), h(0), h(0)).unwrap(), 0.0);
    assert_eq!(wigner_3j(h(2), h(2), h(2), h(2), h(0), h(0)).unwrap(), 0.0);
    assert_eq!(wigner_6j(h(2), h(2), h(2), h(2), h(2), h(6)), 0.0);
    // odd perimeter with all-zero projections vanishes
    assert_eq!(wigner_3j(h(2), h(2), h(2), h(0), h(0), h(0)).unwrap(), 0.0);
}
