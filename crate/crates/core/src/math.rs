//! Float helpers that work without `std`.

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    libm::fabs(x)
}

#[inline]
pub(crate) fn powi(x: f64, n: i32) -> f64 {
    libm::pow(x, n as f64)
}

#[cfg(test)]
/// `1/k!` for small `k`, computed by repeated division to stay finite.
pub(crate) fn inv_factorial(k: usize) -> f64 {
    let mut acc = 1.0;
    for i in 2..=k {
        acc /= i as f64;
    }
    acc
}

pub(crate) fn factorial(k: usize) -> f64 {
    (2..=k).fold(1.0, |acc, i| acc * i as f64)
}
