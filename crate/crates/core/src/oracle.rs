//! Brute-force reference on the truncated atom ⊗ Fock space.
//!
//! The generator `G + G†` with `G = θ_c p̂_c - i θ â† p̂` is exponentiated
//! directly, the initial state `P_{F_a}/(2F_a+1) ⊗ |0><0|` is evolved and
//! the one-photon population is read out. Starting from the vacuum only the
//! manifolds `(F_a, 0)`, `(b, 0)` and `(F'_a, 1)` are reached, so `n_max = 1`
//! is already exact.

use alloc::vec::Vec;

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::Error;
use crate::kernel::{Couplings, RamanInput};
use crate::linalg::{exp_i_hermitian, HermitianSpectrum};
use crate::operator::LabeledOperator;
use crate::scheme::{BasisLabel, BasisLayout, Manifold};
use crate::Result;

pub const DEFAULT_PHOTON_CUTOFF: usize = 1;

/// Atomic states (ground then excited) times photon numbers `0..=n_max`,
/// photon number outermost.
#[derive(Clone, Debug, PartialEq)]
pub struct FockBasis {
    atom: Vec<BasisLabel>,
    ground_dim: usize,
    n_max: usize,
    labels: Vec<BasisLabel>,
}

impl FockBasis {
    pub fn new(layout: &BasisLayout, n_max: usize) -> Result<Self> {
        if n_max < 1 {
            return Err(Error::PhotonCutoff(n_max));
        }
        let mut atom = layout.ground_labels();
        atom.extend(layout.excited_labels());
        let labels = (0..=n_max as u32)
            .flat_map(|n| atom.iter().map(move |l| l.with_photons(n)))
            .collect();
        Ok(FockBasis {
            atom,
            ground_dim: layout.ground_dim(),
            n_max,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn atom_dim(&self) -> usize {
        self.atom.len()
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn labels(&self) -> &[BasisLabel] {
        &self.labels
    }

    /// Index of atomic state `atom_index` (in the ground-then-excited order) with `n` photons.
    pub fn index(&self, atom_index: usize, n: usize) -> usize {
        debug_assert!(atom_index < self.atom.len() && n <= self.n_max);
        n * self.atom.len() + atom_index
    }

    fn excited_index(&self, excited: usize, n: usize) -> usize {
        self.index(self.ground_dim + excited, n)
    }

    pub fn index_of(&self, label: &BasisLabel) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

/// `G` and the excited-manifold `Q²` on the truncated space.
#[derive(Clone, Debug)]
pub struct GeneratorParts {
    pub basis: FockBasis,
    /// `θ_c p̂_c - i θ â† p̂`, mapping excited states to ground states.
    pub g: LabeledOperator,
    /// `θ_c² p̂_c† p̂_c + θ² â â† p̂† p̂`, supported on the excited states only.
    /// In the truncated space `â â†` annihilates `|n_max>`.
    pub q_squared: LabeledOperator,
}

pub fn generator_parts(input: &RamanInput, n_max: usize) -> Result<GeneratorParts> {
    let couplings = Couplings::new(input)?;
    let layout = &couplings.layout;
    let basis = FockBasis::new(layout, n_max)?;
    let dim = basis.dim();
    let laser_rows = layout.ground_block(Manifold::Laser);
    let cavity_rows = layout.ground_block(Manifold::Cavity);
    let (pc, p) = (couplings.laser.matrix(), couplings.cavity.matrix());

    let mut g = DMatrix::<Complex64>::zeros(dim, dim);
    for n in 0..=n_max {
        for (r, row) in laser_rows.clone().enumerate() {
            for c in 0..layout.excited_dim() {
                g[(basis.index(row, n), basis.excited_index(c, n))] += pc[(r, c)] * input.theta_c;
            }
        }
        if n < n_max {
            let amplitude = Complex64::new(0.0, -input.theta * libm::sqrt((n + 1) as f64));
            for (r, row) in cavity_rows.clone().enumerate() {
                for c in 0..layout.excited_dim() {
                    g[(basis.index(row, n + 1), basis.excited_index(c, n))] +=
                        p[(r, c)] * amplitude;
                }
            }
        }
    }

    let laser_block = pc.adjoint() * pc * Complex64::new(input.theta_c * input.theta_c, 0.0);
    let cavity_block = p.adjoint() * p * Complex64::new(input.theta * input.theta, 0.0);
    let mut q_squared = DMatrix::<Complex64>::zeros(dim, dim);
    for n in 0..=n_max {
        let occupation = if n < n_max { (n + 1) as f64 } else { 0.0 };
        let block = &laser_block + &cavity_block * Complex64::new(occupation, 0.0);
        for i in 0..layout.excited_dim() {
            for j in 0..layout.excited_dim() {
                q_squared[(basis.excited_index(i, n), basis.excited_index(j, n))] = block[(i, j)];
            }
        }
    }

    let labels = basis.labels().to_vec();
    Ok(GeneratorParts {
        g: LabeledOperator::new(g, labels.clone(), labels.clone()),
        q_squared: LabeledOperator::new(q_squared, labels.clone(), labels),
        basis,
    })
}

/// The Hermitian generator `G + G†`.
pub fn build_generator(input: &RamanInput, n_max: usize) -> Result<LabeledOperator> {
    let parts = generator_parts(input, n_max)?;
    Ok(parts.g.add(&parts.g.adjoint())?)
}

/// `S = exp(i(G + G†))` by eigendecomposition.
pub fn evolution_operator(input: &RamanInput, n_max: usize) -> Result<LabeledOperator> {
    Ok(exp_i_hermitian(&build_generator(input, n_max)?)?)
}

/// `S = P_{F_a} + P_{F'_a} + C - ½ G F G† + i G H + i H G†` with `C = cos Q`,
/// `H = sin Q / Q`, `F = sin²(Q/2)/(Q/2)²` evaluated on the excited states.
pub fn closed_form_s(input: &RamanInput, n_max: usize) -> Result<LabeledOperator> {
    let parts = generator_parts(input, n_max)?;
    let basis = &parts.basis;
    let excited: Vec<usize> = (0..=n_max)
        .flat_map(|n| (basis.ground_dim..basis.atom_dim()).map(move |a| basis.index(a, n)))
        .collect();
    let ground: Vec<usize> = (0..=n_max)
        .flat_map(|n| (0..basis.ground_dim).map(move |a| basis.index(a, n)))
        .collect();

    let q_sub = parts
        .q_squared
        .matrix()
        .select_rows(&excited)
        .select_columns(&excited);
    let spectrum = HermitianSpectrum::positive_semidefinite(&q_sub)?;
    let embed = |f: fn(f64) -> f64| {
        let sub = spectrum.apply(|x| Complex64::new(f(x), 0.0));
        let mut full = DMatrix::<Complex64>::zeros(basis.dim(), basis.dim());
        for (a, &i) in excited.iter().enumerate() {
            for (b, &j) in excited.iter().enumerate() {
                full[(i, j)] = sub[(a, b)];
            }
        }
        full
    };
    let cos_q = embed(crate::linalg::cos_sqrt);
    let sinc_q = embed(crate::linalg::sinc_sqrt);
    let sinc2_half = embed(crate::linalg::sinc2_half_sqrt);

    let g = parts.g.matrix();
    let g_dag = g.adjoint();
    let i = Complex64::i();
    let mut s = cos_q - g * &sinc2_half * &g_dag * Complex64::new(0.5, 0.0)
        + (g * &sinc_q + &sinc_q * &g_dag) * i;
    for &k in &ground {
        s[(k, k)] += Complex64::new(1.0, 0.0);
    }
    Ok(parts.g.with_matrix(s))
}

/// Post-pulse density matrix on the truncated space.
#[derive(Clone, Debug)]
pub struct FockEvolution {
    basis: FockBasis,
    rho: DMatrix<Complex64>,
}

impl FockEvolution {
    pub fn basis(&self) -> &FockBasis {
        &self.basis
    }

    pub fn density_matrix(&self) -> &DMatrix<Complex64> {
        &self.rho
    }

    pub fn trace(&self) -> f64 {
        self.rho.trace().re
    }

    /// `Tr_atom <n|ρ|n>`.
    pub fn photon_population(&self, n: usize) -> f64 {
        if n > self.basis.n_max {
            return 0.0;
        }
        (0..self.basis.atom_dim())
            .map(|a| self.rho[(self.basis.index(a, n), self.basis.index(a, n))].re)
            .sum()
    }
}

/// `ρ = S ρ₀ S†` with `ρ₀ = P_{F_a}/(2F_a+1) ⊗ |0><0|`.
pub fn evolve(input: &RamanInput, n_max: usize) -> Result<FockEvolution> {
    let layout = input.layout()?;
    let s = evolution_operator(input, n_max)?;
    let basis = FockBasis::new(&layout, n_max)?;
    let populated: Vec<usize> = layout
        .ground_block(Manifold::Laser)
        .map(|a| basis.index(a, 0))
        .collect();
    let weight = 1.0 / input.scheme.f_a.multiplicity() as f64;
    // ρ = Σ_k weight |S e_k><S e_k| over the initially populated states
    let columns = s.matrix().select_columns(&populated);
    let rho = &columns * columns.adjoint() * Complex64::new(weight, 0.0);
    Ok(FockEvolution { basis, rho })
}

/// One-photon probability `Tr_atom <1|ρ|1>`.
pub fn evolve_and_measure(input: &RamanInput, n_max: usize) -> Result<f64> {
    Ok(evolve(input, n_max)?.photon_population(1))
}
