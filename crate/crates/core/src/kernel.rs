//! Single-photon emission probability from the ground-manifold operator `Q_a²`.
//!
//! With `p̂_c` (laser) and `p̂` (cavity) the projected dipole operators,
//!
//! ```text
//! Q_a² = θ_c² p̂_c p̂_c† + θ² p̂ p̂† + θ θ_c (p̂ p̂_c† + p̂_c p̂†)
//! R    = P_{F'_a} cos(Q_a) P_{F_a}
//! w    = Tr(R R†) / (2F_a + 1)
//! ```
//!
//! `Q_a²` is built both from the dipole products and from the recoupled
//! closed form in which the sums over the excited hyperfine components and
//! their projections have been carried out with 6j symbols. The equivalent
//! excited-manifold route through `Q_b²` is kept as a cross-check.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::angular::{sign_of, wigner_3j, wigner_6j, HalfInt};
use crate::dipole::{build_g, project};
use crate::error::Error;
use crate::linalg::{matrix_cos, matrix_sinc2_half, HermitianSpectrum};
use crate::operator::LabeledOperator;
use crate::polarization::{linear_pair, pol_tensor, PolTensor, PolVector};
use crate::scheme::{BasisLayout, LevelScheme, Manifold};
use crate::Result;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RamanInput {
    pub scheme: LevelScheme,
    /// Reduced area of the coherent pulse.
    pub theta_c: f64,
    /// Vacuum Rabi angle of the cavity mode.
    pub theta: f64,
    /// Laser polarization.
    pub l_c: PolVector,
    /// Cavity polarization.
    pub l: PolVector,
}

impl RamanInput {
    pub fn new(
        scheme: LevelScheme,
        theta_c: f64,
        theta: f64,
        l_c: PolVector,
        l: PolVector,
    ) -> Self {
        RamanInput {
            scheme,
            theta_c,
            theta,
            l_c,
            l,
        }
    }

    /// Linear polarizations separated by `psi` radians.
    pub fn linear(scheme: LevelScheme, theta_c: f64, theta: f64, psi: f64) -> Self {
        let (l_c, l) = linear_pair(psi);
        RamanInput::new(scheme, theta_c, theta, l_c, l)
    }

    /// Exchanges the laser and cavity roles: `F_a ↔ F'_a`, `θ ↔ θ_c`, `l ↔ l_c`.
    pub fn swapped(&self) -> Self {
        RamanInput {
            scheme: self.scheme.swapped(),
            theta_c: self.theta,
            theta: self.theta_c,
            l_c: self.l,
            l: self.l_c,
        }
    }

    pub fn layout(&self) -> Result<BasisLayout> {
        for (name, value) in [("theta_c", self.theta_c), ("theta", self.theta)] {
            if !(value.is_finite() && value >= 0.0) {
                return Err(Error::InvalidAngle { name, value });
            }
        }
        Ok(self.scheme.validate()?)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct EmissionResult {
    /// Probability of one photon in the cavity after the pulse.
    pub w: f64,
    /// Eigenvalues of `Q_a` on the ground manifold, ascending.
    pub qa_eigenvalues: Vec<f64>,
    /// Frobenius distance between the direct and recoupled `Q_a²`.
    pub direct_summed_residual: f64,
}

/// Projected dipole operators for one input.
pub(crate) struct Couplings {
    pub layout: BasisLayout,
    /// `p̂_c`: excited → `F_a`.
    pub laser: LabeledOperator,
    /// `p̂`: excited → `F'_a`.
    pub cavity: LabeledOperator,
}

impl Couplings {
    pub fn new(input: &RamanInput) -> Result<Self> {
        let layout = input.layout()?;
        let laser = project(&build_g(Manifold::Laser, &layout), &input.l_c);
        let cavity = project(&build_g(Manifold::Cavity, &layout), &input.l);
        Ok(Couplings {
            layout,
            laser,
            cavity,
        })
    }
}

/// Places the four `F_a`/`F'_a` blocks into one ground-manifold operator.
fn assemble_ground(
    layout: &BasisLayout,
    laser_laser: &DMatrix<Complex64>,
    laser_cavity: &DMatrix<Complex64>,
    cavity_laser: &DMatrix<Complex64>,
    cavity_cavity: &DMatrix<Complex64>,
) -> LabeledOperator {
    let n = layout.ground_dim();
    let a = layout.ground_block(Manifold::Laser);
    let c = layout.ground_block(Manifold::Cavity);
    let mut matrix = DMatrix::<Complex64>::zeros(n, n);
    matrix
        .view_mut((a.start, a.start), (a.len(), a.len()))
        .copy_from(laser_laser);
    matrix
        .view_mut((a.start, c.start), (a.len(), c.len()))
        .copy_from(laser_cavity);
    matrix
        .view_mut((c.start, a.start), (c.len(), a.len()))
        .copy_from(cavity_laser);
    matrix
        .view_mut((c.start, c.start), (c.len(), c.len()))
        .copy_from(cavity_cavity);
    let labels = layout.ground_labels();
    LabeledOperator::new(matrix, labels.clone(), labels)
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

fn qa_squared_from(couplings: &Couplings, input: &RamanInput) -> Result<LabeledOperator> {
    let (tc, t) = (input.theta_c, input.theta);
    let (pc, p) = (&couplings.laser, &couplings.cavity);
    let laser_laser = pc.matmul(&pc.adjoint())?.scale(real(tc * tc));
    let cavity_cavity = p.matmul(&p.adjoint())?.scale(real(t * t));
    let cavity_laser = p.matmul(&pc.adjoint())?.scale(real(t * tc));
    let laser_cavity = pc.matmul(&p.adjoint())?.scale(real(t * tc));
    Ok(assemble_ground(
        &couplings.layout,
        laser_laser.matrix(),
        laser_cavity.matrix(),
        cavity_laser.matrix(),
        cavity_cavity.matrix(),
    ))
}

/// `Q_a²` from products of the projected dipole operators; the excited
/// index is summed by the matrix products.
pub fn qa_squared_direct(input: &RamanInput) -> Result<LabeledOperator> {
    let couplings = Couplings::new(input)?;
    qa_squared_from(&couplings, input)
}

/// One ground block of the recoupled `Q_a²`, rows in `row`, columns in `col`:
///
/// ```text
/// X_{M M'} = (-1)^{I - J_b + M'} Σ_{k,q} (k F F'; q M -M') a_k f^k_q
/// a_k      = (2k+1) {k 1 1; J_b J_a J_a} b_k
/// b_k      = √((2F+1)(2F'+1)) {k F F'; I J_a J_a}
/// ```
///
/// `(F, F') = (F_a, F'_a)` with `f(l_c*, l)` gives `B̂`; `(F_a, F_a)` with
/// `f(l_c*, l_c)` gives `Â_c`; `(F'_a, F'_a)` with `f(l*, l)` gives `Â`.
fn recoupled_block(
    scheme: &LevelScheme,
    row: Manifold,
    col: Manifold,
    tensor: &PolTensor,
) -> DMatrix<Complex64> {
    let f_row = scheme.ground_f(row);
    let f_col = scheme.ground_f(col);
    let mut block = DMatrix::<Complex64>::zeros(f_row.multiplicity(), f_col.multiplicity());
    // no dipole coupling between J_a and J_b at all
    if !(scheme.j_a + scheme.j_b).is_integer() {
        return block;
    }
    let (i, j_a, j_b) = (scheme.nuclear_spin, scheme.j_a, scheme.j_b);
    let one = HalfInt::ONE;
    let degeneracy = libm::sqrt((f_row.multiplicity() * f_col.multiplicity()) as f64);
    let a_k: [f64; 3] = core::array::from_fn(|k| {
        let k_h = HalfInt::int(k as i32);
        let b_k = degeneracy * wigner_6j(k_h, f_row, f_col, i, j_a, j_a);
        (2 * k + 1) as f64 * wigner_6j(k_h, one, one, j_b, j_a, j_a) * b_k
    });
    for (r, m) in f_row.projections().enumerate() {
        for (c, m_prime) in f_col.projections().enumerate() {
            let mut sum = Complex64::new(0.0, 0.0);
            for (k, &a) in a_k.iter().enumerate() {
                if a == 0.0 {
                    continue;
                }
                let k = k as i32;
                let q = m_prime - m;
                if q.abs() > HalfInt::int(k) {
                    continue;
                }
                let symbol = wigner_3j(HalfInt::int(k), f_row, f_col, q, m, -m_prime)
                    .expect("valid projections");
                sum += tensor.get(k, q.twice() / 2) * (symbol * a);
            }
            block[(r, c)] = sum * sign_of((i - j_b + m_prime).twice());
        }
    }
    block
}

/// `Q_a² = θ_c² Â_c + θ² Â + θ θ_c (B̂ + B̂†)` from the recoupled closed form.
pub fn qa_squared_summed(input: &RamanInput) -> Result<LabeledOperator> {
    let layout = input.layout()?;
    let scheme = layout.scheme();
    let (tc, t) = (input.theta_c, input.theta);
    let laser_conj = input.l_c.conj();
    let a_c = recoupled_block(
        scheme,
        Manifold::Laser,
        Manifold::Laser,
        &pol_tensor(&laser_conj, &input.l_c),
    );
    let a = recoupled_block(
        scheme,
        Manifold::Cavity,
        Manifold::Cavity,
        &pol_tensor(&input.l.conj(), &input.l),
    );
    let b = recoupled_block(
        scheme,
        Manifold::Laser,
        Manifold::Cavity,
        &pol_tensor(&laser_conj, &input.l),
    );
    let cross = real(t * tc);
    Ok(assemble_ground(
        &layout,
        &(a_c * real(tc * tc)),
        &(&b * cross),
        &(b.adjoint() * cross),
        &(a * real(t * t)),
    ))
}

/// `w = ‖P_{F'_a} cos(Q_a) P_{F_a}‖_F² / (2F_a + 1)`.
pub fn emission_probability(input: &RamanInput) -> Result<EmissionResult> {
    let q_squared = qa_squared_summed(input)?;
    let direct = qa_squared_direct(input)?;
    let direct_summed_residual = q_squared.frobenius_distance(&direct)?;

    let layout = input.layout()?;
    let cos_q = matrix_cos(&q_squared)?;
    let r = cos_q.block(
        layout.ground_block(Manifold::Cavity),
        layout.ground_block(Manifold::Laser),
    );
    let w = r.frobenius_norm_squared() / input.scheme.f_a.multiplicity() as f64;

    let spectrum =
        HermitianSpectrum::positive_semidefinite(q_squared.matrix()).map_err(Error::from)?;
    let mut qa_eigenvalues: Vec<f64> = spectrum
        .eigenvalues()
        .iter()
        .map(|&x| libm::sqrt(x))
        .collect();
    qa_eigenvalues.sort_by(f64::total_cmp);
    Ok(EmissionResult {
        w,
        qa_eigenvalues,
        direct_summed_residual,
    })
}

/// Same probability through the excited manifold:
/// `R = (θ θ_c / 2) p̂ F(Q_b) p̂_c†` with `Q_b² = θ_c² p̂_c† p̂_c + θ² p̂† p̂`.
pub fn emission_probability_qb(input: &RamanInput) -> Result<f64> {
    let couplings = Couplings::new(input)?;
    let qb_squared = qb_squared(&couplings, input)?;
    let sinc2 = matrix_sinc2_half(&qb_squared)?;
    let prefactor = input.theta * input.theta_c / 2.0;
    let r = couplings
        .cavity
        .matmul(&sinc2)?
        .matmul(&couplings.laser.adjoint())?;
    Ok(prefactor * prefactor * r.frobenius_norm_squared() / input.scheme.f_a.multiplicity() as f64)
}

fn qb_squared(couplings: &Couplings, input: &RamanInput) -> Result<LabeledOperator> {
    let (pc, p) = (&couplings.laser, &couplings.cavity);
    let laser = pc
        .adjoint()
        .matmul(pc)?
        .scale(real(input.theta_c * input.theta_c));
    let cavity = p
        .adjoint()
        .matmul(p)?
        .scale(real(input.theta * input.theta));
    Ok(laser.add(&cavity)?)
}

/// Frobenius residual of `θ θ_c p̂ (Q_b²)^n p̂_c† = P_{F'_a} (Q_a²)^{n+1} P_{F_a}`.
pub fn bridge_identity_check(input: &RamanInput, n: u32) -> Result<f64> {
    if n > 3 {
        return Err(Error::BridgePower(n));
    }
    let couplings = Couplings::new(input)?;
    let qb = qb_squared(&couplings, input)?;
    let lhs = couplings
        .cavity
        .matmul(&qb.pow(n)?)?
        .matmul(&couplings.laser.adjoint())?
        .scale(real(input.theta * input.theta_c));
    let qa = qa_squared_from(&couplings, input)?.pow(n + 1)?;
    let layout = &couplings.layout;
    let rhs = qa.block(
        layout.ground_block(Manifold::Cavity),
        layout.ground_block(Manifold::Laser),
    );
    Ok(lhs.frobenius_distance(&rhs)?)
}
