use std::f64::consts::FRAC_PI_2;

use super::complex::C64;
use super::NumericsError;

/// Samples whose modulus falls below this fraction of the largest modulus
/// are treated as zero.
const RELATIVE_ZERO: f64 = 1e-12;

/// Continuous argument variation along a sampled path.
///
/// Sums the principal-branch argument increments `Arg(z[k+1] / z[k])`. The
/// caller must sample densely enough that every increment stays below π/2;
/// larger jumps are rejected because the branch could be ambiguous.
pub fn unwrap_phase(samples: &[C64]) -> Result<f64, NumericsError> {
    let scale = samples.iter().map(|z| z.abs()).fold(0.0, f64::max);
    for (index, z) in samples.iter().enumerate() {
        let m = z.abs();
        if !(m > RELATIVE_ZERO * scale) || !m.is_finite() {
            return Err(NumericsError::ZeroSample { index });
        }
    }
    let mut total = 0.0;
    for (index, pair) in samples.windows(2).enumerate() {
        let delta = (pair[1] / pair[0]).arg();
        if delta.abs() >= FRAC_PI_2 {
            return Err(NumericsError::UnderSampled { index, delta });
        }
        total += delta;
    }
    Ok(total)
}
