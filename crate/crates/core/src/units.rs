/// Angular frequency per wavenumber: 2 pi c in cm/fs.
///
/// Energies are stored in cm^-1 and times in fs throughout; a phase
/// `omega * t` is `energy_cm * CM_FS * t_fs` radians.
pub const CM_FS: f64 = 2.0 * std::f64::consts::PI * 2.99792458e-5;
