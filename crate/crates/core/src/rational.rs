//! Exact rational helpers: parsing of `p/q` and decimal literals, rendering.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Q = BigRational;

pub fn int(v: i64) -> Q {
    Q::from_integer(BigInt::from(v))
}

pub fn ratio(p: i64, q: i64) -> Q {
    Q::new(BigInt::from(p), BigInt::from(q))
}

/// Parses `p/q`, an integer, or a decimal literal such as `-2.00001` or
/// `1e-3` into an exact rational.
pub fn parse_rational(text: &str) -> Option<Q> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((p, q)) = t.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Q::new(p, q));
    }
    let (mantissa, exponent) = match t.find(['e', 'E']) {
        Some(pos) => (&t[..pos], t[pos + 1..].parse::<i32>().ok()?),
        None => (t, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let joined = format!("{whole}{frac}");
    let mut numer: BigInt = if joined.is_empty() {
        BigInt::zero()
    } else {
        joined.parse().ok()?
    };
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac.len() as i32;
    let ten = BigInt::from(10);
    let value = if scale >= 0 {
        Q::from_integer(numer * num_traits::pow(ten, scale as usize))
    } else {
        Q::new(numer, num_traits::pow(ten, (-scale) as usize))
    };
    Some(value)
}

/// `p/q` rendering, or just `p` for integers.
pub fn format_rational(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Q) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact rational value of a finite float.
pub fn from_f64(x: f64) -> Option<Q> {
    Q::from_float(x)
}

/// Exact square root when `q` is the square of a rational.
pub fn exact_sqrt(q: &Q) -> Option<Q> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    if &(&n * &n) == q.numer() && &(&d * &d) == q.denom() {
        Some(Q::new(n, d))
    } else {
        None
    }
}

/// Best rational approximation of `x` with denominator at most `max_denom`,
/// from the continued-fraction convergents and semiconvergents.
pub fn approximate(x: f64, max_denom: u64) -> Option<Q> {
    if !x.is_finite() {
        return None;
    }
    let exact = from_f64(x)?;
    let floor = exact.floor();
    let mut frac = &exact - &floor;
    // convergents h/k of the fractional part
    let (mut h0, mut k0) = (BigInt::one(), BigInt::zero());
    let (mut h1, mut k1) = (BigInt::zero(), BigInt::one());
    let limit = BigInt::from(max_denom);
    let mut best = Q::zero();
    loop {
        if frac.is_zero() {
            break;
        }
        let inv = frac.recip();
        let a = inv.floor().to_integer();
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > limit {
            // largest admissible semiconvergent
            let t = (&limit - &k0) / &k1;
            if t > BigInt::zero() {
                let cand = Q::new(&t * &h1 + &h0, &t * &k1 + &k0);
                let conv = Q::new(h1.clone(), k1.clone());
                let target = &exact - &floor;
                if (&cand - &target).abs() < (&conv - &target).abs() {
                    best = cand;
                } else {
                    best = conv;
                }
            } else {
                best = Q::new(h1.clone(), k1.clone());
            }
            return Some(floor + best);
        }
        h0 = std::mem::replace(&mut h1, h2);
        k0 = std::mem::replace(&mut k1, k2);
        best = Q::new(h1.clone(), k1.clone());
        frac = &inv - Q::from_integer(a);
    }
    Some(floor + best)
}
