//! The exponents T and T1 of a monic principal ideal
//! `I = <(x+1)^s + u(x+1)^t h>`: the least T with `u(x+1)^T` in I and the least
//! T1 with `2u(x+1)^T1` in I.

use crate::error::{Error, Result};

use super::descriptor::HClass;

fn bad(msg: String) -> Error {
    Error::BadParameters(msg)
}

fn check_common(s: usize, t: usize, n: usize) -> Result<()> {
    if s == 0 || s >= 2 * n {
        return Err(bad(format!("s = {s} outside 1..{}", 2 * n)));
    }
    if t >= n {
        return Err(bad(format!("t = {t} must be below n = {n}")));
    }
    Ok(())
}

fn check_reduced_tail(s: usize, t: usize, n: usize) -> Result<()> {
    if s <= n || t + n >= s {
        return Err(bad(format!(
            "need n < s and t < s - n, got s = {s}, t = {t}, n = {n}"
        )));
    }
    Ok(())
}

/// Least T with `u(x+1)^T` in the ideal. A zero tail gives `<(x+1)^s>`, so T = s.
pub fn compute_t(s: usize, t: usize, class: HClass, n: usize) -> Result<usize> {
    check_common(s, t, n)?;
    let (s, t, n) = (s as i64, t as i64, n as i64);
    let value = match class {
        HClass::Zero => s,
        _ if s < n => s,
        HClass::Unit => {
            if t < 2 * s - 2 * n {
                2 * n - s + t
            } else {
                s
            }
        }
        HClass::TwoTimesUnit => {
            check_reduced_tail(s as usize, t as usize, n as usize)?;
            if t < 2 * s - 3 * n {
                3 * n - s + t
            } else {
                s
            }
        }
        HClass::Mixed { l } => {
            check_reduced_tail(s as usize, t as usize, n as usize)?;
            let l = l as i64;
            if l + t < 2 * s - 2 * n {
                2 * n - s + l + t
            } else {
                s
            }
        }
    };
    Ok(value as usize)
}

/// Least T1 with `2u(x+1)^T1` in the ideal. A zero tail gives `max(0, s - n)`.
pub fn compute_t1(s: usize, t: usize, class: HClass, n: usize) -> Result<usize> {
    check_common(s, t, n)?;
    let (s, t, n) = (s as i64, t as i64, n as i64);
    let value = match class {
        HClass::Zero => (s - n).max(0),
        _ if s < n => 0,
        HClass::Unit => {
            if t < s - n {
                0
            } else if t < 2 * s - 2 * n {
                n - s + t
            } else {
                s - n
            }
        }
        HClass::TwoTimesUnit => {
            check_reduced_tail(s as usize, t as usize, n as usize)?;
            if t < 2 * s - 3 * n {
                2 * n - s + t
            } else {
                s - n
            }
        }
        HClass::Mixed { l } => {
            check_reduced_tail(s as usize, t as usize, n as usize)?;
            let l = l as i64;
            if l + t <= s - n {
                0
            } else if l + t < 2 * s - 2 * n {
                l + t - s + n
            } else {
                s - n
            }
        }
    };
    Ok(value as usize)
}
