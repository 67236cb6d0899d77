//! Physical constants (CODATA 2018, SI units).

/// The handful of constants that enter the gate budgets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhysConstants {
    /// Reduced Planck constant, J·s.
    pub hbar: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Speed of light, m/s.
    pub c_light: f64,
    /// Elementary charge, C.
    pub e_charge: f64,
    /// Bohr radius, m.
    pub a0: f64,
}

pub const CODATA_2018: PhysConstants = PhysConstants {
    hbar: 1.054_571_817e-34,
    eps0: 8.854_187_812_8e-12,
    c_light: 299_792_458.0,
    e_charge: 1.602_176_634e-19,
    a0: 5.291_772_109_03e-11,
};

impl PhysConstants {
    /// One atomic unit of dipole moment, e·a₀ (C·m).
    pub fn atomic_dipole(&self) -> f64 {
        self.e_charge * self.a0
    }

    /// One atomic unit of quadrupole moment, e·a₀² (C·m²).
    pub fn atomic_quadrupole(&self) -> f64 {
        self.e_charge * self.a0 * self.a0
    }

    /// Angular frequency of light with the given vacuum wavelength.
    pub fn angular_frequency(&self, wavelength: f64) -> f64 {
        std::f64::consts::TAU * self.c_light / wavelength
    }
}

impl Default for PhysConstants {
    fn default() -> Self {
        CODATA_2018
    }
}
