//! Real roots of quadratics and cubics known to have only real roots.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Discriminant slack, relative to the coefficient scale.
const DISC_TOL: f64 = 1e-12;
/// Largest positive discriminant, relative to `(q/2)^2 + |p/3|^3`, still
/// read as a double real root. A rounded double root shows a spurious
/// imaginary part of order `sqrt(eps)`, so the test is on the discriminant.
const COMPLEX_TOL: f64 = 1e-9;

/// Both real roots of `a x^2 + b x + c`, ascending.
///
/// One root comes from `q = -(b + sign(b) sqrt(disc)) / 2`, the other from
/// `c / q`, which avoids cancellation when `b^2 >> |4ac|`.
pub fn real_roots_quadratic(a: f64, b: f64, c: f64) -> Result<[f64; 2]> {
    if a == 0.0 {
        return Err(Error::DegeneratePolynomial);
    }
    let mut disc = b * b - 4.0 * a * c;
    if disc < 0.0 {
        let scale = (b * b).max((4.0 * a * c).abs()).max(1.0);
        if disc < -DISC_TOL * scale {
            return Err(Error::NegativeDiscriminant(disc));
        }
        disc = 0.0;
    }
    let sign = if b < 0.0 { -1.0 } else { 1.0 };
    let q = -0.5 * (b + sign * disc.sqrt());
    let (x1, x2) = if q == 0.0 { (0.0, 0.0) } else { (q / a, c / q) };
    Ok(if x1 <= x2 { [x1, x2] } else { [x2, x1] })
}

/// All three roots of `a x^3 + b x^2 + c x + d`, ascending.
///
/// The depressed cubic `y^3 + p y + q` is solved trigonometrically when it
/// has three real roots. Otherwise Cardano's form is used and the complex
/// pair is accepted as a double real root only if the discriminant is
/// within `1e-9` of zero, relative to its terms. Each root then gets one
/// Newton step on the monic cubic, kept only if it reduces the residual.
pub fn real_roots_cubic(a: f64, b: f64, c: f64, d: f64) -> Result<[f64; 3]> {
    if a == 0.0 {
        return Err(Error::DegeneratePolynomial);
    }
    let (b, c, d) = (b / a, c / a, d / a);
    let shift = b / 3.0;
    let p = c - b * b / 3.0;
    let q = 2.0 * b * b * b / 27.0 - b * c / 3.0 + d;

    let half_q = q / 2.0;
    let third_p = p / 3.0;
    let delta = half_q * half_q + third_p * third_p * third_p;

    let mut roots = if p == 0.0 && q == 0.0 {
        [0.0; 3]
    } else if delta <= 0.0 {
        // p < 0 here
        let radius = 2.0 * (-third_p).sqrt();
        let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
        let phi = arg.acos() / 3.0;
        [0, 1, 2].map(|k| radius * (phi - 2.0 * PI * k as f64 / 3.0).cos())
    } else {
        let sq = delta.sqrt();
        let u = (-half_q + sq).cbrt();
        let v = (-half_q - sq).cbrt();
        if delta > COMPLEX_TOL * (half_q * half_q + third_p.abs().powi(3)) {
            return Err(Error::ComplexRoots(3f64.sqrt() / 2.0 * (u - v).abs()));
        }
        let real = u + v;
        [real, -real / 2.0, -real / 2.0]
    };

    let monic = |x: f64| ((x + b) * x + c) * x + d;
    let slope = |x: f64| (3.0 * x + 2.0 * b) * x + c;
    for y in &mut roots {
        let x = *y - shift;
        let fx = monic(x);
        let dfx = slope(x);
        let mut best = x;
        if dfx != 0.0 {
            let stepped = x - fx / dfx;
            if monic(stepped).abs() < fx.abs() {
                best = stepped;
            }
        }
        *y = best;
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}
