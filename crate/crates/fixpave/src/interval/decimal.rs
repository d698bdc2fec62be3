//! Directed conversion of decimal literals to `f64`.
//!
//! `str::parse::<f64>` rounds to nearest, which is the wrong direction for
//! half of all box endpoints: a lower endpoint must never move up and an
//! upper endpoint must never move down. The conversion here parses to
//! nearest, then decides exactly — by integer comparison — which side of the
//! written decimal the parsed value landed on, and steps one representable
//! when it landed on the wrong side.

use num_bigint::BigUint;

/// Rounding direction for a parsed endpoint.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Round {
    /// Result must be `<=` the written decimal value.
    Down,
    /// Result must be `>=` the written decimal value.
    Up,
}

/// Error for literals that cannot be converted.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DecimalError {
    #[error("not a decimal number: {0:?}")]
    Malformed(String),
    #[error("decimal value out of f64 range: {0:?}")]
    OutOfRange(String),
}

/// Parses a JSON-style decimal literal with the requested rounding
/// direction. The result is always a finite `f64` on the correct side of the
/// exact written value, at most one representable away from the nearest.
pub fn parse_directed(text: &str, dir: Round) -> Result<f64, DecimalError> {
    let lit = DecimalLit::parse(text)?;
    let nearest: f64 = text
        .parse()
        .map_err(|_| DecimalError::Malformed(text.to_owned()))?;
    if nearest.is_infinite() {
        // The written value exceeds f64 range; only the inward direction has
        // a finite representative.
        return match (nearest > 0.0, dir) {
            (true, Round::Down) => Ok(f64::MAX),
            (false, Round::Up) => Ok(f64::MIN),
            _ => Err(DecimalError::OutOfRange(text.to_owned())),
        };
    }
    if !nearest.is_finite() {
        return Err(DecimalError::Malformed(text.to_owned()));
    }

    let v = if nearest == 0.0 { 0.0 } else { nearest };
    Ok(match lit.cmp_f64(v) {
        std::cmp::Ordering::Equal => v,
        // Written value sits above the parsed one.
        std::cmp::Ordering::Greater => match dir {
            Round::Down => v,
            Round::Up => v.next_up(),
        },
        std::cmp::Ordering::Less => match dir {
            Round::Down => v.next_down(),
            Round::Up => v,
        },
    })
}

/// A decimal literal in exact form: `sign * digits * 10^exp10`.
struct DecimalLit {
    negative: bool,
    digits: BigUint,
    exp10: i64,
}

impl DecimalLit {
    fn parse(text: &str) -> Result<Self, DecimalError> {
        let malformed = || DecimalError::Malformed(text.to_owned());
        let mut rest = text;
        let negative = if let Some(r) = rest.strip_prefix('-') {
            rest = r;
            true
        } else {
            false
        };

        let mut mantissa = String::new();
        let mut exp10: i64 = 0;

        let (num_part, exp_part) = match rest.find(['e', 'E']) {
            Some(i) => (&rest[..i], Some(&rest[i + 1..])),
            None => (rest, None),
        };
        let (int_part, frac_part) = match num_part.find('.') {
            Some(i) => (&num_part[..i], Some(&num_part[i + 1..])),
            None => (num_part, None),
        };

        if int_part.is_empty() || !int_part.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        mantissa.push_str(int_part);
        if let Some(frac) = frac_part {
            if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
                return Err(malformed());
            }
            mantissa.push_str(frac);
            exp10 -= frac.len() as i64;
        }
        if let Some(exp) = exp_part {
            let exp: i64 = exp.parse().map_err(|_| malformed())?;
            exp10 += exp;
        }
        if mantissa.len() > 1100 || exp10.abs() > 40_000 {
            return Err(DecimalError::OutOfRange(text.to_owned()));
        }

        let digits = BigUint::parse_bytes(mantissa.as_bytes(), 10).ok_or_else(malformed)?;
        Ok(DecimalLit {
            negative,
            digits,
            exp10,
        })
    }

    /// Exact comparison of the written value against a finite `f64`.
    fn cmp_f64(&self, v: f64) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        let zero_lit = self.digits == BigUint::ZERO;
        let lit_sign = if zero_lit {
            Ordering::Equal
        } else if self.negative {
            Ordering::Less
        } else {
            Ordering::Greater
        };
        let v_sign = v.partial_cmp(&0.0).expect("finite value");
        if lit_sign != v_sign {
            return lit_sign.cmp(&v_sign);
        }
        if lit_sign == Ordering::Equal {
            return Ordering::Equal;
        }

        // Same nonzero sign: compare magnitudes D*10^p vs m*2^e by clearing
        // the negative exponents on both sides.
        let (m, e) = decompose(v.abs());
        let mut lhs = self.digits.clone();
        let mut rhs = BigUint::from(m);
        if self.exp10 >= 0 {
            lhs *= BigUint::from(10u32).pow(self.exp10 as u32);
        } else {
            rhs *= BigUint::from(10u32).pow((-self.exp10) as u32);
        }
        if e >= 0 {
            rhs <<= e as u32;
        } else {
            lhs <<= (-e) as u32;
        }
        let mag = lhs.cmp(&rhs);
        if self.negative {
            mag.reverse()
        } else {
            mag
        }
    }
}

/// Exact integer decomposition `|v| = m * 2^e` of a positive finite double.
fn decompose(v: f64) -> (u64, i32) {
    debug_assert!(v > 0.0 && v.is_finite());
    let bits = v.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i32;
    let frac = bits & ((1u64 << 52) - 1);
    if exp == 0 {
        (frac, -1074)
    } else {
        (frac | (1u64 << 52), exp - 1075)
    }
}
