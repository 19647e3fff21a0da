//! Fixed-precision number formatting shared by every data file.

/// `x` in scientific notation with 17 significant digits.
///
/// Exact round trip through `str::parse::<f64>`; identical inputs always
/// give identical text.
pub fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}
