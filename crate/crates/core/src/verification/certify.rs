use crate::construction::{ConstructionError, TriangleConfiguration};
use crate::hermitian::HermitianError;
use crate::numerics::{
    certify_on_interval, Centered, Certificate, CertifyFailure, Interval, NumericsError,
};

use super::conditions::{condition_specs, ConditionValues};

/// Parameter range of the published certification claim.
pub const CERTIFY_RANGE: (f64, f64) = (2.13, 2.34);
pub const DEFAULT_MAX_DEPTH: usize = 24;

fn from_hermitian(e: HermitianError) -> NumericsError {
    match e {
        HermitianError::Numerics(n) => n,
        HermitianError::Undecided => NumericsError::Domain {
            message: e.to_string(),
            refinable: true,
        },
        other => NumericsError::Domain {
            message: other.to_string(),
            refinable: false,
        },
    }
}

fn from_construction(e: ConstructionError) -> NumericsError {
    match e {
        ConstructionError::Numerics(n) => n,
        ConstructionError::Hermitian(h) => from_hermitian(h),
        other => NumericsError::Domain {
            refinable: other.is_refinable(),
            message: format!("{} ({})", other, other.precondition()),
        },
    }
}

/// Enclosures of the eleven condition quantities over a parameter interval,
/// evaluated in centred form.
pub fn condition_enclosures(t: Interval) -> Result<Vec<Interval>, NumericsError> {
    let cfg = TriangleConfiguration::build(Centered::variable(t)).map_err(from_construction)?;
    let values = ConditionValues::compute(&cfg).map_err(from_hermitian)?;
    Ok(values.quantities().iter().map(|q| q.range()).collect())
}

/// Certifies conditions (3)–(8) over `[lo, hi]` by adaptive bisection.
pub fn certify_conditions(lo: f64, hi: f64, max_depth: usize) -> Result<Certificate, CertifyFailure> {
    certify_on_interval(&condition_enclosures, &condition_specs(), lo, hi, max_depth)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_interval_around_published_parameter() {
        let cert = certify_conditions(2.215, 2.225, DEFAULT_MAX_DEPTH).unwrap();
        cert.replay(&condition_enclosures).unwrap();
        assert_eq!(cert.conditions.len(), 11);
    }

    #[test]
    fn centred_enclosures_contain_point_values() {
        let (lo, hi) = (2.25, 2.2505);
        let enc = condition_enclosures(Interval::new(lo, hi)).unwrap();
        for k in 0..=8 {
            let t = lo + (hi - lo) * k as f64 / 8.0;
            let cfg = TriangleConfiguration::build(t).unwrap();
            let point = ConditionValues::compute(&cfg).unwrap().quantities();
            for (e, p) in enc.iter().zip(point) {
                assert!(e.lo() - 1e-9 * p.abs() <= p && p <= e.hi() + 1e-9 * p.abs(), "{p} vs {e}");
            }
        }
    }

    #[test]
    fn published_range_certifies() {
        let cert = certify_conditions(CERTIFY_RANGE.0, CERTIFY_RANGE.1, DEFAULT_MAX_DEPTH).unwrap();
        cert.replay(&condition_enclosures).unwrap();
        for id in super::super::conditions::CONDITION_IDS {
            assert!(cert.leaves_for(id).count() > 0);
        }
    }

    #[test]
    fn invalid_domain() {
        assert!(matches!(
            certify_conditions(2.3, 2.2, 4),
            Err(CertifyFailure::InvalidDomain { .. })
        ));
    }

    #[test]
    fn below_the_domain_is_not_certified() {
        assert!(certify_conditions(1.2, 1.4, 6).is_err());
    }
}
