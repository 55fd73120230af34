//! Dimensionless dipole operators between a ground hyperfine component and
//! the whole excited level, and their projections on polarization vectors.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::angular::{sign_of, wigner_3j, wigner_6j, HalfInt};
use crate::error::Error;
use crate::operator::LabeledOperator;
use crate::polarization::PolVector;
use crate::scheme::{BasisLayout, LevelScheme, Manifold};

/// Reduced Planck constant in erg·s (Gaussian units).
pub const HBAR_CGS: f64 = 1.054_571_817e-27;

/// `g_{F F_b} = (-1)^{F + J_a + I + 1} √((2F+1)(2F_b+1)) {I F J_a; 1 J_b F_b}`.
pub fn reduced_coupling(f: HalfInt, f_b: HalfInt, scheme: &LevelScheme) -> f64 {
    let six_j = wigner_6j(
        scheme.nuclear_spin,
        f,
        scheme.j_a,
        HalfInt::ONE,
        scheme.j_b,
        f_b,
    );
    if six_j == 0.0 {
        return 0.0;
    }
    let phase = sign_of((f + scheme.j_a + scheme.nuclear_spin + HalfInt::ONE).twice());
    let degeneracy = (f.multiplicity() * f_b.multiplicity()) as f64;
    phase * libm::sqrt(degeneracy) * six_j
}

/// Spherical components `ĝ_q`, `q = -1, 0, 1`, of the dipole operator that
/// lowers the excited level to one ground component.
///
/// Each component has the ground component's states as rows and the full
/// excited basis as columns, so the sum over `F_b` is carried by the
/// column blocks.
#[derive(Clone, Debug, PartialEq)]
pub struct DipoleComponents {
    manifold: Manifold,
    components: [LabeledOperator; 3],
}

impl DipoleComponents {
    pub fn manifold(&self) -> Manifold {
        self.manifold
    }

    /// `ĝ_q` for `q ∈ {-1, 0, 1}`.
    pub fn component(&self, q: i32) -> &LabeledOperator {
        assert!((-1..=1).contains(&q), "spherical index out of range");
        &self.components[(q + 1) as usize]
    }
}

/// Entry `(M, (F_b, M_b))` of `ĝ_q` is `(-1)^{F-M} (F 1 F_b; -M q M_b) g_{F F_b}`.
pub fn build_g(manifold: Manifold, layout: &BasisLayout) -> DipoleComponents {
    let scheme = layout.scheme();
    let f = scheme.ground_f(manifold);
    let rows = layout.ground_labels_of(manifold);
    let cols = layout.excited_labels();
    let couplings: Vec<f64> = layout
        .excited_components()
        .iter()
        .map(|&f_b| reduced_coupling(f, f_b, scheme))
        .collect();

    let build = |q: i32| {
        let q = HalfInt::int(q);
        let mut matrix = DMatrix::<Complex64>::zeros(rows.len(), cols.len());
        for (i, row) in rows.iter().enumerate() {
            let m = row.m;
            let m_b = m - q;
            for (slot, &f_b) in layout.excited_components().iter().enumerate() {
                if couplings[slot] == 0.0 {
                    continue;
                }
                let Some(j) = layout.excited_index(f_b, m_b) else {
                    continue;
                };
                let symbol = wigner_3j(f, HalfInt::ONE, f_b, -m, q, m_b)
                    .expect("projections from the layout");
                matrix[(i, j)] =
                    Complex64::new(sign_of((f - m).twice()) * symbol * couplings[slot], 0.0);
            }
        }
        LabeledOperator::new(matrix, rows.clone(), cols.clone())
    };
    DipoleComponents {
        manifold,
        components: [build(-1), build(0), build(1)],
    }
}

/// `p̂ = ĝ·l* = Σ_q ĝ_q (l_q)*`.
pub fn project(g: &DipoleComponents, l: &PolVector) -> LabeledOperator {
    let first = g.component(-1);
    let mut matrix = DMatrix::<Complex64>::zeros(first.nrows(), first.ncols());
    for q in -1..=1 {
        matrix += g.component(q).matrix() * l.spherical(q).conj();
    }
    first.with_matrix(matrix)
}

/// Field and atom parameters in Gaussian units.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhysicalParams {
    /// Amplitude `e_c` of the coherent pulse.
    pub pulse_amplitude: f64,
    /// Angular frequency `ω` of the cavity mode.
    pub cavity_frequency: f64,
    /// Quantization volume `V_c`.
    pub cavity_volume: f64,
    /// Reduced dipole matrix element `|d|` of the electronic transition.
    pub dipole_moment: f64,
    /// Pulse duration `T`.
    pub pulse_duration: f64,
}

impl PhysicalParams {
    /// Single-photon field `e_0 = √(2πħω / V_c)`.
    pub fn photon_field(&self) -> f64 {
        libm::sqrt(
            2.0 * core::f64::consts::PI * HBAR_CGS * self.cavity_frequency / self.cavity_volume,
        )
    }
}

/// Reduced Rabi angles `(θ_c, θ) = (|d| e_c T/ħ, |d| e_0 T/ħ)`.
pub fn reduced_rabi(params: &PhysicalParams) -> Result<(f64, f64), Error> {
    let positive = [
        ("cavity_frequency", params.cavity_frequency),
        ("cavity_volume", params.cavity_volume),
        ("dipole_moment", params.dipole_moment),
        ("pulse_duration", params.pulse_duration),
    ];
    for (name, value) in positive {
        if !(value.is_finite() && value > 0.0) {
            return Err(Error::NonPositiveParameter { name, value });
        }
    }
    if !(params.pulse_amplitude.is_finite() && params.pulse_amplitude >= 0.0) {
        return Err(Error::NonPositiveParameter {
            name: "pulse_amplitude",
            value: params.pulse_amplitude,
        });
    }
    let scale = params.dipole_moment * params.pulse_duration / HBAR_CGS;
    Ok((
        scale * params.pulse_amplitude,
        scale * params.photon_field(),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    fn rb() -> (LevelScheme, BasisLayout) {
        let scheme = LevelScheme::rb85();
        (scheme, scheme.validate().unwrap())
    }

    #[test]
    fn reduced_coupling_values() {
        let (scheme, _) = rb();
        assert_eq!(
            reduced_coupling(HalfInt::int(2), HalfInt::int(4), &scheme),
            0.0
        );
        // +√35 · {5/2 2 1/2; 1 3/2 3} = -√7/3
        let g = reduced_coupling(HalfInt::int(2), HalfInt::int(3), &scheme);
        assert!((g + libm::sqrt(7.0) / 3.0).abs() < 1e-14);
        let six_j = wigner_6j(
            h(5),
            HalfInt::int(2),
            h(1),
            HalfInt::ONE,
            h(3),
            HalfInt::int(3),
        );
        assert!((g.abs() - libm::sqrt(35.0) * six_j.abs()).abs() < 1e-14);
    }

    #[test]
    fn dipole_entries() {
        let (_, layout) = rb();
        let g = build_g(Manifold::Laser, &layout);
        let row = |m: i32| {
            layout
                .ground_index(Manifold::Laser, HalfInt::int(m))
                .unwrap()
        };
        let col = |f_b: i32, m_b: i32| {
            layout
                .excited_index(HalfInt::int(f_b), HalfInt::int(m_b))
                .unwrap()
        };
        // (2 1 2; 0 0 0) vanishes by parity
        assert_eq!(
            g.component(0).get(row(0), col(2, 0)),
            Complex64::new(0.0, 0.0)
        );
        // (+1)(2 1 3; 0 0 0) g_23 = √15/15
        assert!((g.component(0).get(row(0), col(3, 0)).re - libm::sqrt(15.0) / 15.0).abs() < 1e-14);
        // (-1)(2 1 2; -1 1 0) g_22 = -√14/12
        assert!((g.component(1).get(row(1), col(2, 0)).re + libm::sqrt(14.0) / 12.0).abs() < 1e-14);
    }

    #[test]
    fn selection_rules_and_reality() {
        let (_, layout) = rb();
        for manifold in [Manifold::Laser, Manifold::Cavity] {
            let g = build_g(manifold, &layout);
            let f = layout.scheme().ground_f(manifold);
            for q in -1..=1 {
                let op = g.component(q);
                for (i, row) in op.rows().iter().enumerate() {
                    for (j, col) in op.cols().iter().enumerate() {
                        let entry = op.get(i, j);
                        assert_eq!(entry.im, 0.0);
                        let allowed =
                            col.m == row.m - HalfInt::int(q) && (f - col.f).abs() <= HalfInt::ONE;
                        if !allowed {
                            assert_eq!(entry.re, 0.0);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn column_norms_match_brute_force() {
        let schemes = [
            LevelScheme::rb85(),
            LevelScheme::cs133(),
            LevelScheme::new(h(1), h(3), h(2), h(1), h(3)),
        ];
        for scheme in schemes {
            let layout = scheme.validate().unwrap();
            for manifold in [Manifold::Laser, Manifold::Cavity] {
                let g = build_g(manifold, &layout);
                let f = scheme.ground_f(manifold);
                for j in 0..layout.excited_dim() {
                    let label = layout.excited_label(j).unwrap();
                    // brute force: direct double loop over q and M
                    let mut sum = 0.0;
                    for q in -1..=1 {
                        for m in f.projections() {
                            let symbol =
                                wigner_3j(f, HalfInt::ONE, label.f, -m, HalfInt::int(q), label.m)
                                    .unwrap();
                            sum += symbol * symbol;
                        }
                    }
                    let coupling = reduced_coupling(f, label.f, &scheme);
                    let brute = sum * coupling * coupling;
                    let from_matrix: f64 = (-1..=1)
                        .map(|q| g.component(q).matrix().column(j).norm_squared())
                        .sum();
                    assert!((from_matrix - brute).abs() < 1e-13);
                    // orthogonality: Σ_{M,q} (3j)² = 1/(2F_b+1) when the triad is allowed
                    if coupling != 0.0 {
                        assert!((sum - 1.0 / label.f.multiplicity() as f64).abs() < 1e-13);
                    }
                }
            }
        }
    }

    #[test]
    fn projection_selection_rules() {
        let (_, layout) = rb();
        let g = build_g(Manifold::Cavity, &layout);
        let p = project(&g, &PolVector::z_hat());
        assert_eq!(p, g.component(0).clone());
        let p = project(&g, &PolVector::x_hat());
        for (i, row) in p.rows().iter().enumerate() {
            for (j, col) in p.cols().iter().enumerate() {
                if p.get(i, j).norm() > 0.0 {
                    assert_eq!((col.m - row.m).abs(), HalfInt::ONE);
                }
            }
        }
    }

    #[test]
    fn projection_adjoint_and_phase() {
        let (_, layout) = rb();
        let g = build_g(Manifold::Laser, &layout);
        let l = PolVector::from_cartesian([
            Complex64::new(0.2, 0.5),
            Complex64::new(-0.4, 0.1),
            Complex64::new(0.7, -0.3),
        ])
        .unwrap();
        let p = project(&g, &l);
        // (ĝ·l*)† = Σ_q ĝ_q† l_q
        let mut adjoint = DMatrix::<Complex64>::zeros(p.ncols(), p.nrows());
        for q in -1..=1 {
            adjoint += g.component(q).matrix().adjoint() * l.spherical(q);
        }
        assert!((p.adjoint().matrix() - adjoint).norm() < 1e-14);
        let shifted = project(&g, &l.with_phase(1.3));
        assert!((shifted.frobenius_norm() - p.frobenius_norm()).abs() < 1e-14);
    }

    #[test]
    fn reduced_rabi_scaling() {
        let base = PhysicalParams {
            pulse_amplitude: 3.0,
            cavity_frequency: 2.4e15,
            cavity_volume: 1e-9,
            dipole_moment: 2.5e-18,
            pulse_duration: 1e-8,
        };
        let (tc, t) = reduced_rabi(&base).unwrap();
        let (tc2, t2) = reduced_rabi(&PhysicalParams {
            pulse_duration: 2e-8,
            ..base
        })
        .unwrap();
        assert!((tc2 / tc - 2.0).abs() < 1e-12 && (t2 / t - 2.0).abs() < 1e-12);
        let (tc4, t4) = reduced_rabi(&PhysicalParams {
            cavity_volume: 4e-9,
            ..base
        })
        .unwrap();
        assert!((tc4 - tc).abs() < 1e-12 * tc && (t4 / t - 0.5).abs() < 1e-12);
        let (tc0, _) = reduced_rabi(&PhysicalParams {
            pulse_amplitude: 0.0,
            ..base
        })
        .unwrap();
        assert_eq!(tc0, 0.0);
        let expected = base.dipole_moment * base.pulse_amplitude * base.pulse_duration / HBAR_CGS;
        assert!((tc - expected).abs() < 1e-12 * expected);
        assert!(reduced_rabi(&PhysicalParams {
            cavity_volume: 0.0,
            ..base
        })
        .is_err());
        assert!(reduced_rabi(&PhysicalParams {
            pulse_amplitude: -1.0,
            ..base
        })
        .is_err());
    }
}
