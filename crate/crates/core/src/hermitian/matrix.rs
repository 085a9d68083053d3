//! Fixed-size 3×3 complex matrices.

use crate::numerics::{Complex, Real, C64};

pub type Mat3<R> = [[Complex<R>; 3]; 3];

pub fn identity<R: Real>() -> Mat3<R> {
    let mut m = [[Complex::zero(); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = Complex::one();
    }
    m
}

pub fn scalar<R: Real>(c: Complex<R>) -> Mat3<R> {
    let mut m = [[Complex::zero(); 3]; 3];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = c;
    }
    m
}

pub fn mul<R: Real>(a: &Mat3<R>, b: &Mat3<R>) -> Mat3<R> {
    let mut out = [[Complex::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            let mut acc = Complex::zero();
            for k in 0..3 {
                acc = acc + a[i][k] * b[k][j];
            }
            out[i][j] = acc;
        }
    }
    out
}

pub fn conj<R: Real>(a: &Mat3<R>) -> Mat3<R> {
    a.map(|row| row.map(Complex::conj))
}

pub fn transpose<R: Real>(a: &Mat3<R>) -> Mat3<R> {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[j][i];
        }
    }
    out
}

pub fn apply<R: Real>(a: &Mat3<R>, v: &[Complex<R>; 3]) -> [Complex<R>; 3] {
    let mut out = [Complex::zero(); 3];
    for i in 0..3 {
        out[i] = a[i][0] * v[0] + a[i][1] * v[1] + a[i][2] * v[2];
    }
    out
}

pub fn trace<R: Real>(a: &Mat3<R>) -> Complex<R> {
    a[0][0] + a[1][1] + a[2][2]
}

pub fn sub<R: Real>(a: &Mat3<R>, b: &Mat3<R>) -> Mat3<R> {
    let mut out = *a;
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    out
}

pub fn det<R: Real>(a: &Mat3<R>) -> Complex<R> {
    a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1])
        - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0])
        + a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0])
}

/// Classical adjoint; its columns span the kernel of a rank-2 matrix.
pub fn adjugate(a: &Mat3<f64>) -> Mat3<f64> {
    let mut out = [[C64::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            // cofactor of entry (j, i)
            let r: Vec<usize> = (0..3).filter(|&k| k != j).collect();
            let c: Vec<usize> = (0..3).filter(|&k| k != i).collect();
            let minor = a[r[0]][c[0]] * a[r[1]][c[1]] - a[r[0]][c[1]] * a[r[1]][c[0]];
            out[i][j] = if (i + j) % 2 == 0 { minor } else { -minor };
        }
    }
    out
}

/// Largest entrywise distance `max |a_ij − b_ij|` (real and imaginary parts
/// taken separately).
pub fn max_dist(a: &Mat3<f64>, b: &Mat3<f64>) -> f64 {
    let mut d: f64 = 0.0;
    for i in 0..3 {
        for j in 0..3 {
            d = d.max(a[i][j].dist_max(b[i][j]));
        }
    }
    d
}

pub fn max_abs(a: &Mat3<f64>) -> f64 {
    a.iter()
        .flat_map(|row| row.iter())
        .map(|z| z.abs())
        .fold(0.0, f64::max)
}

pub fn mid<R: Real>(a: &Mat3<R>) -> Mat3<f64> {
    a.map(|row| row.map(Complex::mid))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Mat3<f64> {
        [
            [C64::new(1.0, 2.0), C64::new(0.5, 0.0), C64::new(-1.0, 1.0)],
            [C64::new(0.0, -1.0), C64::new(3.0, 0.0), C64::new(2.0, 2.0)],
            [C64::new(1.5, 0.5), C64::new(0.0, 0.0), C64::new(-2.0, 0.25)],
        ]
    }

    #[test]
    fn adjugate_times_matrix_is_det_identity() {
        let a = sample();
        let prod = mul(&adjugate(&a), &a);
        assert!(max_dist(&prod, &scalar(det(&a))) < 1e-12);
    }

    #[test]
    fn identity_is_neutral() {
        let a = sample();
        assert!(max_dist(&mul(&identity(), &a), &a) < 1e-15);
        assert!(max_dist(&mul(&a, &identity()), &a) < 1e-15);
    }
}
