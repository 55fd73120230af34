//! Level configurations and the canonical basis ordering.
//!
//! Ground states: the laser-coupled component `F_a` first, `M` ascending,
//! then the cavity-coupled component `F'_a`. Excited states: `F_b`
//! ascending, `M_b` ascending within each component.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;

use crate::angular::{triangle_ok, HalfInt};
use crate::error::SchemeError;

/// Which hyperfine manifold a basis state belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Manifold {
    /// Ground component `F_a`, coupled to the excited level by the laser.
    Laser,
    /// Ground component `F'_a`, coupled to the excited level by the cavity.
    Cavity,
    /// Any hyperfine component `F_b` of the excited level.
    Excited,
}

/// `|F M>` tagged with its manifold, optionally dressed with a photon number.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct BasisLabel {
    pub manifold: Manifold,
    pub f: HalfInt,
    pub m: HalfInt,
    pub photons: Option<u32>,
}

impl BasisLabel {
    pub fn atomic(manifold: Manifold, f: HalfInt, m: HalfInt) -> Self {
        BasisLabel {
            manifold,
            f,
            m,
            photons: None,
        }
    }

    pub fn with_photons(self, n: u32) -> Self {
        BasisLabel {
            photons: Some(n),
            ..self
        }
    }

    pub fn is_ground(&self) -> bool {
        self.manifold != Manifold::Excited
    }
}

impl fmt::Display for BasisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.manifold {
            Manifold::Laser => "a",
            Manifold::Cavity => "a'",
            Manifold::Excited => "b",
        };
        write!(f, "{tag}|{},{}>", self.f, self.m)?;
        if let Some(n) = self.photons {
            write!(f, "|{n}>")?;
        }
        Ok(())
    }
}

/// Quantum numbers of the Λ configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LevelScheme {
    /// Laser-coupled ground component.
    pub f_a: HalfInt,
    /// Cavity-coupled ground component.
    pub f_prime_a: HalfInt,
    pub nuclear_spin: HalfInt,
    /// Electronic momentum of the ground level.
    pub j_a: HalfInt,
    /// Electronic momentum of the excited level.
    pub j_b: HalfInt,
}

impl LevelScheme {
    pub const PRESETS: [&'static str; 2] = ["rb85", "cs133"];

    pub const fn new(
        f_a: HalfInt,
        f_prime_a: HalfInt,
        nuclear_spin: HalfInt,
        j_a: HalfInt,
        j_b: HalfInt,
    ) -> Self {
        LevelScheme {
            f_a,
            f_prime_a,
            nuclear_spin,
            j_a,
            j_b,
        }
    }

    /// 85Rb D2 line: F_a = 2, F'_a = 3, I = 5/2, J_a = 1/2, J_b = 3/2.
    pub const fn rb85() -> Self {
        LevelScheme::new(
            HalfInt::int(2),
            HalfInt::int(3),
            HalfInt::from_twice(5),
            HalfInt::HALF,
            HalfInt::from_twice(3),
        )
    }

    /// 133Cs D2 line: F_a = 3, F'_a = 4, I = 7/2, J_a = 1/2, J_b = 3/2.
    pub const fn cs133() -> Self {
        LevelScheme::new(
            HalfInt::int(3),
            HalfInt::int(4),
            HalfInt::from_twice(7),
            HalfInt::HALF,
            HalfInt::from_twice(3),
        )
    }

    pub fn preset(name: &str) -> Result<Self, SchemeError> {
        match name.to_ascii_lowercase().as_str() {
            "rb85" => Ok(LevelScheme::rb85()),
            "cs133" => Ok(LevelScheme::cs133()),
            _ => Err(SchemeError::UnknownPreset(name.to_string())),
        }
    }

    /// Exchanges the roles of the two ground components.
    pub fn swapped(&self) -> Self {
        LevelScheme {
            f_a: self.f_prime_a,
            f_prime_a: self.f_a,
            ..*self
        }
    }

    /// Allowed ground hyperfine components `|J_a - I|..=J_a + I`.
    pub fn ground_components(&self) -> impl Iterator<Item = HalfInt> + Clone {
        HalfInt::range_inclusive(
            (self.j_a - self.nuclear_spin).abs(),
            self.j_a + self.nuclear_spin,
        )
    }

    /// Excited hyperfine components `|J_b - I|..=J_b + I`.
    pub fn excited_components(&self) -> impl Iterator<Item = HalfInt> + Clone {
        HalfInt::range_inclusive(
            (self.j_b - self.nuclear_spin).abs(),
            self.j_b + self.nuclear_spin,
        )
    }

    /// Momentum of the given ground manifold.
    pub fn ground_f(&self, manifold: Manifold) -> HalfInt {
        match manifold {
            Manifold::Laser => self.f_a,
            Manifold::Cavity => self.f_prime_a,
            Manifold::Excited => panic!("ground_f called with the excited manifold"),
        }
    }

    pub fn validate(&self) -> Result<BasisLayout, SchemeError> {
        BasisLayout::new(*self)
    }
}

/// Dimensions and index maps of the canonical basis for a validated scheme.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisLayout {
    scheme: LevelScheme,
    excited: Vec<HalfInt>,
    excited_offsets: Vec<usize>,
    ground_dim: usize,
    excited_dim: usize,
    dark: bool,
}

impl BasisLayout {
    fn new(scheme: LevelScheme) -> Result<Self, SchemeError> {
        for (name, value) in [
            ("F_a", scheme.f_a),
            ("F'_a", scheme.f_prime_a),
            ("I", scheme.nuclear_spin),
            ("J_a", scheme.j_a),
            ("J_b", scheme.j_b),
        ] {
            if value.is_negative() {
                return Err(SchemeError::Negative { name, value });
            }
        }
        let lo = (scheme.j_a - scheme.nuclear_spin).abs();
        let hi = scheme.j_a + scheme.nuclear_spin;
        for (name, value) in [("F_a", scheme.f_a), ("F'_a", scheme.f_prime_a)] {
            if !scheme.ground_components().any(|f| f == value) {
                return Err(SchemeError::OutOfRange {
                    name,
                    value,
                    lo,
                    hi,
                });
            }
        }
        if scheme.f_a == scheme.f_prime_a {
            return Err(SchemeError::SameGroundComponent(scheme.f_a));
        }
        let excited: Vec<HalfInt> = scheme.excited_components().collect();
        if excited.is_empty() {
            return Err(SchemeError::NoExcitedComponents);
        }
        let mut excited_offsets = Vec::with_capacity(excited.len());
        let mut excited_dim = 0;
        for f_b in &excited {
            excited_offsets.push(excited_dim);
            excited_dim += f_b.multiplicity();
        }
        let one = HalfInt::ONE;
        let dark = !excited.iter().any(|&f_b| {
            triangle_ok(scheme.f_a, one, f_b) && triangle_ok(scheme.f_prime_a, one, f_b)
        });
        if dark {
            log::warn!(
                "no excited component is dipole-coupled to both F_a = {} and F'_a = {}; emission probability is zero",
                scheme.f_a,
                scheme.f_prime_a
            );
        }
        Ok(BasisLayout {
            scheme,
            excited,
            excited_offsets,
            ground_dim: scheme.f_a.multiplicity() + scheme.f_prime_a.multiplicity(),
            excited_dim,
            dark,
        })
    }

    pub fn scheme(&self) -> &LevelScheme {
        &self.scheme
    }

    /// Excited hyperfine components in ascending order.
    pub fn excited_components(&self) -> &[HalfInt] {
        &self.excited
    }

    pub fn ground_dim(&self) -> usize {
        self.ground_dim
    }

    pub fn excited_dim(&self) -> usize {
        self.excited_dim
    }

    /// True when no excited component couples to both ground components.
    pub fn is_dark(&self) -> bool {
        self.dark
    }

    /// Row range occupied by a ground manifold in the ground ordering.
    pub fn ground_block(&self, manifold: Manifold) -> core::ops::Range<usize> {
        let n_a = self.scheme.f_a.multiplicity();
        match manifold {
            Manifold::Laser => 0..n_a,
            Manifold::Cavity => n_a..self.ground_dim,
            Manifold::Excited => panic!("ground_block called with the excited manifold"),
        }
    }

    pub fn ground_index(&self, manifold: Manifold, m: HalfInt) -> Option<usize> {
        let f = match manifold {
            Manifold::Excited => return None,
            _ => self.scheme.ground_f(manifold),
        };
        if !f.admits_projection(m) {
            return None;
        }
        Some(self.ground_block(manifold).start + ((m + f).twice() / 2) as usize)
    }

    pub fn ground_label(&self, index: usize) -> Option<BasisLabel> {
        if index >= self.ground_dim {
            return None;
        }
        let n_a = self.scheme.f_a.multiplicity();
        let (manifold, f, local) = if index < n_a {
            (Manifold::Laser, self.scheme.f_a, index)
        } else {
            (Manifold::Cavity, self.scheme.f_prime_a, index - n_a)
        };
        Some(BasisLabel::atomic(
            manifold,
            f,
            HalfInt::from_twice(2 * local as i32) - f,
        ))
    }

    pub fn excited_index(&self, f_b: HalfInt, m_b: HalfInt) -> Option<usize> {
        let slot = self.excited.iter().position(|&f| f == f_b)?;
        if !f_b.admits_projection(m_b) {
            return None;
        }
        Some(self.excited_offsets[slot] + ((m_b + f_b).twice() / 2) as usize)
    }

    pub fn excited_label(&self, index: usize) -> Option<BasisLabel> {
        if index >= self.excited_dim {
            return None;
        }
        let slot = self
            .excited_offsets
            .partition_point(|&offset| offset <= index)
            - 1;
        let f_b = self.excited[slot];
        let local = index - self.excited_offsets[slot];
        Some(BasisLabel::atomic(
            Manifold::Excited,
            f_b,
            HalfInt::from_twice(2 * local as i32) - f_b,
        ))
    }

    /// Labels of one ground manifold, `M` ascending.
    pub fn ground_labels_of(&self, manifold: Manifold) -> Vec<BasisLabel> {
        self.ground_block(manifold)
            .map(|i| self.ground_label(i).unwrap())
            .collect()
    }

    pub fn ground_labels(&self) -> Vec<BasisLabel> {
        (0..self.ground_dim)
            .map(|i| self.ground_label(i).unwrap())
            .collect()
    }

    pub fn excited_labels(&self) -> Vec<BasisLabel> {
        (0..self.excited_dim)
            .map(|i| self.excited_label(i).unwrap())
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn h(twice: i32) -> HalfInt {
        HalfInt::from_twice(twice)
    }

    #[test]
    fn rb85_dimensions() {
        let layout = LevelScheme::rb85().validate().unwrap();
        assert_eq!(layout.ground_dim(), 12);
        assert_eq!(layout.excited_dim(), 24);
        assert_eq!(layout.excited_components(), &[h(2), h(4), h(6), h(8)]);
        assert!(!layout.is_dark());
    }

    #[test]
    fn cs133_dimensions() {
        let layout = LevelScheme::cs133().validate().unwrap();
        assert_eq!(layout.ground_dim(), 16);
        assert_eq!(layout.excited_dim(), 32);
        assert_eq!(layout.excited_components(), &[h(4), h(6), h(8), h(10)]);
    }

    #[test]
    fn ground_dim_matches_closed_form() {
        for scheme in [LevelScheme::rb85(), LevelScheme::cs133()] {
            let layout = scheme.validate().unwrap();
            let expected = 2 * ((scheme.f_a + scheme.f_prime_a).twice() / 2 + 1);
            assert_eq!(layout.ground_dim(), expected as usize);
        }
    }

    #[test]
    fn rejects_out_of_range_component() {
        let scheme = LevelScheme {
            f_a: HalfInt::int(5),
            ..LevelScheme::rb85()
        };
        assert!(matches!(
            scheme.validate(),
            Err(SchemeError::OutOfRange { name: "F_a", .. })
        ));
        let wrong_parity = LevelScheme {
            f_prime_a: h(5),
            ..LevelScheme::rb85()
        };
        assert!(matches!(
            wrong_parity.validate(),
            Err(SchemeError::OutOfRange { name: "F'_a", .. })
        ));
    }

    #[test]
    fn rejects_coincident_components_and_negatives() {
        let scheme = LevelScheme {
            f_prime_a: HalfInt::int(2),
            ..LevelScheme::rb85()
        };
        assert_eq!(
            scheme.validate(),
            Err(SchemeError::SameGroundComponent(HalfInt::int(2)))
        );
        let negative = LevelScheme {
            j_b: h(-1),
            ..LevelScheme::rb85()
        };
        assert!(matches!(
            negative.validate(),
            Err(SchemeError::Negative { name: "J_b", .. })
        ));
    }

    #[test]
    fn dark_scheme_is_accepted() {
        // F_b in {1/2, 3/2} never couples to integer ground components.
        let scheme = LevelScheme::new(HalfInt::ZERO, HalfInt::ONE, h(1), h(1), h(2));
        let layout = scheme.validate().unwrap();
        assert!(layout.is_dark());
        // F_a = 0 and F'_a = 3 share no excited component within one unit.
        let far = LevelScheme::new(HalfInt::ZERO, HalfInt::int(3), h(3), h(3), h(1));
        assert!(far.validate().unwrap().is_dark());
    }

    #[test]
    fn presets_by_name() {
        assert_eq!(LevelScheme::preset("rb85").unwrap(), LevelScheme::rb85());
        assert_eq!(LevelScheme::preset("CS133").unwrap(), LevelScheme::cs133());
        assert!(LevelScheme::preset("na23").is_err());
    }

    #[test]
    fn index_maps_are_inverse() {
        let schemes = [
            LevelScheme::rb85(),
            LevelScheme::cs133(),
            LevelScheme::new(h(1), h(3), h(2), h(1), h(3)),
            LevelScheme::new(h(3), h(1), HalfInt::ONE, HalfInt::HALF, h(1)),
        ];
        for scheme in schemes {
            let layout = scheme.validate().unwrap();
            for i in 0..layout.ground_dim() {
                let label = layout.ground_label(i).unwrap();
                assert_eq!(layout.ground_index(label.manifold, label.m), Some(i));
            }
            for i in 0..layout.excited_dim() {
                let label = layout.excited_label(i).unwrap();
                assert_eq!(layout.excited_index(label.f, label.m), Some(i));
            }
            assert!(layout.ground_label(layout.ground_dim()).is_none());
            assert!(layout.excited_label(layout.excited_dim()).is_none());
            assert_eq!(layout.ground_labels()[0].m, -scheme.f_a);
            assert_eq!(layout, scheme.validate().unwrap());
        }
    }
}
