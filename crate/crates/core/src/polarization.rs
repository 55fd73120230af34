//! Polarization vectors and the rank-k polarization tensor.

use num_complex::Complex64;

use crate::angular::{wigner_3j, HalfInt};
use crate::error::Error;

const FRAC_1_SQRT_2: f64 = core::f64::consts::FRAC_1_SQRT_2;

/// Unit complex polarization vector.
///
/// Spherical components follow `l_{+1} = -(l_x + i l_y)/√2`, `l_0 = l_z`,
/// `l_{-1} = (l_x - i l_y)/√2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolVector {
    cartesian: [Complex64; 3],
}

impl PolVector {
    /// Normalizes the given Cartesian components.
    pub fn from_cartesian(cartesian: [Complex64; 3]) -> Result<Self, Error> {
        let norm = libm::sqrt(cartesian.iter().map(|c| c.norm_sqr()).sum::<f64>());
        if !(norm > 0.0 && norm.is_finite()) {
            return Err(Error::ZeroPolarization);
        }
        Ok(PolVector {
            cartesian: cartesian.map(|c| c / norm),
        })
    }

    pub fn from_real(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        PolVector::from_cartesian([x, y, z].map(|v| Complex64::new(v, 0.0)))
    }

    /// Builds a vector from spherical components indexed `[l_{-1}, l_0, l_{+1}]`.
    pub fn from_spherical(spherical: [Complex64; 3]) -> Result<Self, Error> {
        let [minus, zero, plus] = spherical;
        let x = (minus - plus) * FRAC_1_SQRT_2;
        let y = (minus + plus) * Complex64::new(0.0, FRAC_1_SQRT_2);
        PolVector::from_cartesian([x, y, zero])
    }

    pub fn x_hat() -> Self {
        PolVector::from_real(1.0, 0.0, 0.0).unwrap()
    }

    pub fn y_hat() -> Self {
        PolVector::from_real(0.0, 1.0, 0.0).unwrap()
    }

    pub fn z_hat() -> Self {
        PolVector::from_real(0.0, 0.0, 1.0).unwrap()
    }

    /// Real vector in the xy plane at angle `psi` from x̂.
    pub fn in_plane(psi: f64) -> Self {
        PolVector::from_real(libm::cos(psi), libm::sin(psi), 0.0).unwrap()
    }

    pub fn cartesian(&self) -> [Complex64; 3] {
        self.cartesian
    }

    /// Spherical component `l_q`, `q ∈ {-1, 0, 1}`.
    pub fn spherical(&self, q: i32) -> Complex64 {
        let [x, y, z] = self.cartesian;
        let i = Complex64::i();
        match q {
            1 => -(x + i * y) * FRAC_1_SQRT_2,
            0 => z,
            -1 => (x - i * y) * FRAC_1_SQRT_2,
            _ => Complex64::new(0.0, 0.0),
        }
    }

    pub fn conj(&self) -> Self {
        PolVector {
            cartesian: self.cartesian.map(|c| c.conj()),
        }
    }

    /// Multiplies by the global phase `e^{i phi}`.
    pub fn with_phase(&self, phi: f64) -> Self {
        let phase = Complex64::from_polar(1.0, phi);
        PolVector {
            cartesian: self.cartesian.map(|c| c * phase),
        }
    }

    /// Bilinear dot product `Σ a_i b_i` (no conjugation).
    pub fn dot(&self, other: &PolVector) -> Complex64 {
        self.cartesian
            .iter()
            .zip(other.cartesian.iter())
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        libm::sqrt(self.cartesian.iter().map(|c| c.norm_sqr()).sum::<f64>())
    }

    pub fn is_real(&self) -> bool {
        self.cartesian.iter().all(|c| c.im == 0.0)
    }
}

/// Laser polarization along x̂ and cavity polarization at angle `psi` in the xy plane.
pub fn linear_pair(psi: f64) -> (PolVector, PolVector) {
    (PolVector::x_hat(), PolVector::in_plane(psi))
}

/// Components `f^k_q` for `k = 0, 1, 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PolTensor {
    // components[k][q + 2]
    components: [[Complex64; 5]; 3],
}

impl PolTensor {
    /// `f^k_q`; zero whenever `|q| > k` or `k > 2`.
    pub fn get(&self, k: i32, q: i32) -> Complex64 {
        if !(0..=2).contains(&k) || q.abs() > k {
            return Complex64::new(0.0, 0.0);
        }
        self.components[k as usize][(q + 2) as usize]
    }
}

/// `f^k_q = Σ_{q1,q2} (-1)^q (a)_{-q1} (b)_{-q2} (k 1 1; q q1 q2)`.
pub fn pol_tensor(a: &PolVector, b: &PolVector) -> PolTensor {
    let one = HalfInt::ONE;
    let mut components = [[Complex64::new(0.0, 0.0); 5]; 3];
    for k in 0..=2i32 {
        for q in -k..=k {
            let mut sum = Complex64::new(0.0, 0.0);
            for q1 in -1..=1i32 {
                let q2 = -q - q1;
                if q2.abs() > 1 {
                    continue;
                }
                let symbol = wigner_3j(
                    HalfInt::int(k),
                    one,
                    one,
                    HalfInt::int(q),
                    HalfInt::int(q1),
                    HalfInt::int(q2),
                )
                .expect("integer projections");
                sum += a.spherical(-q1) * b.spherical(-q2) * symbol;
            }
            let sign = if q % 2 == 0 { 1.0 } else { -1.0 };
            components[k as usize][(q + 2) as usize] = sum * sign;
        }
    }
    PolTensor { components }
}
