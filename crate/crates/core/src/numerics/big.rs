//! Extended-precision real scalar backed by `astro-float`.
//!
//! All operations run at [`PRECISION_BITS`] bits of mantissa (~96 decimal
//! digits) with round-to-nearest-even, well beyond the 50 significant
//! digits the formulas are specified at.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_traits::{FromPrimitive, One, Zero};

use super::scalar::Scalar;

/// Working mantissa precision in bits.
pub const PRECISION_BITS: usize = 320;

const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constants cache allocation"));
}

fn with_cc<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Extended-precision real number.
#[derive(Clone, Debug)]
pub struct BigReal(BigFloat);

impl BigReal {
    pub fn from_bigfloat(v: BigFloat) -> Self {
        BigReal(v)
    }

    pub fn as_bigfloat(&self) -> &BigFloat {
        &self.0
    }

    pub fn is_finite(&self) -> bool {
        !self.0.is_nan() && !self.0.is_inf()
    }

    /// 10^n for integer n of either sign.
    pub fn pow10(n: i64) -> Self {
        let ten = BigFloat::from_i8(10, PRECISION_BITS);
        let p = ten.powi(n.unsigned_abs() as usize, PRECISION_BITS, RM);
        if n < 0 {
            BigReal(p.reciprocal(PRECISION_BITS, RM))
        } else {
            BigReal(p)
        }
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for BigReal {
            type Output = BigReal;
            fn $method(self, rhs: BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, PRECISION_BITS, RM))
            }
        }
        impl $trait for &BigReal {
            type Output = BigReal;
            fn $method(self, rhs: &BigReal) -> BigReal {
                BigReal(self.0.$method(&rhs.0, PRECISION_BITS, RM))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.neg())
    }
}

impl Neg for &BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal(self.0.clone().neg())
    }
}

impl Zero for BigReal {
    fn zero() -> Self {
        BigReal(BigFloat::new(PRECISION_BITS))
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
}

impl One for BigReal {
    fn one() -> Self {
        BigReal(BigFloat::from_i8(1, PRECISION_BITS))
    }
}

impl FromPrimitive for BigReal {
    fn from_i64(n: i64) -> Option<Self> {
        Some(BigReal(BigFloat::from_i64(n, PRECISION_BITS)))
    }
    fn from_u64(n: u64) -> Option<Self> {
        Some(BigReal(BigFloat::from_u64(n, PRECISION_BITS)))
    }
    fn from_f64(n: f64) -> Option<Self> {
        n.is_finite()
            .then(|| BigReal(BigFloat::from_f64(n, PRECISION_BITS)))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.is_finite() {
            return write!(f, "{:?}", self.0);
        }
        f.write_str(&self.format_sig(36))
    }
}

fn decimal_literal_ok(s: &str) -> bool {
    let s = s.strip_prefix(['+', '-']).unwrap_or(s);
    let (mantissa, exp) = match s.split_once(['e', 'E']) {
        Some((m, e)) => (m, Some(e)),
        None => (s, None),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, fr)) => (i, fr),
        None => (mantissa, ""),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !(digits(int_part) || digits(frac_part))
        || !(int_part.is_empty() || digits(int_part))
        || !(frac_part.is_empty() || digits(frac_part))
    {
        return false;
    }
    match exp {
        None => true,
        Some(e) => digits(e.strip_prefix(['+', '-']).unwrap_or(e)),
    }
}

impl Scalar for BigReal {
    fn pi() -> Self {
        BigReal(with_cc(|cc| cc.pi(PRECISION_BITS, RM)))
    }
    fn sqrt(&self) -> Self {
        BigReal(self.0.sqrt(PRECISION_BITS, RM))
    }
    fn abs(&self) -> Self {
        BigReal(self.0.abs())
    }
    fn cos(&self) -> Self {
        BigReal(with_cc(|cc| self.0.cos(PRECISION_BITS, RM, cc)))
    }
    fn tan(&self) -> Self {
        BigReal(with_cc(|cc| self.0.tan(PRECISION_BITS, RM, cc)))
    }
    fn ln(&self) -> Self {
        BigReal(with_cc(|cc| self.0.ln(PRECISION_BITS, RM, cc)))
    }
    fn exp(&self) -> Self {
        BigReal(with_cc(|cc| self.0.exp(PRECISION_BITS, RM, cc)))
    }

    fn from_decimal(s: &str) -> Option<Self> {
        if !decimal_literal_ok(s) {
            return None;
        }
        let v = with_cc(|cc| BigFloat::parse(s, Radix::Dec, PRECISION_BITS, RM, cc));
        (!v.is_nan()).then_some(BigReal(v))
    }

    fn inversion_tolerance() -> Self {
        Self::pow10(-30)
    }

    fn powi(&self, n: i32) -> Self {
        let p = self.0.powi(n.unsigned_abs() as usize, PRECISION_BITS, RM);
        if n < 0 {
            BigReal(p.reciprocal(PRECISION_BITS, RM))
        } else {
            BigReal(p)
        }
    }

    fn format_places(&self, places: usize) -> String {
        assert!(self.is_finite(), "cannot format {:?}", self.0);
        if self.0.is_zero() {
            return zero_places(places);
        }
        let (sign, digits, e) = with_cc(|cc| {
            self.0
                .convert_to_radix(Radix::Dec, RoundingMode::None, cc)
                .expect("finite value converts to decimal")
        });
        // value = 0.d1 d2 ... dk * 10^e; keep m leading digits to round
        // at the 10^-places position
        let m = e as i64 + places as i64;
        let mut kept: Vec<u8> = if m <= 0 {
            Vec::new()
        } else {
            let mut v: Vec<u8> = digits.iter().copied().take(m as usize).collect();
            v.resize(m as usize, 0);
            v
        };
        let (first_dropped, rest_nonzero) = if m < 0 {
            (0u8, false)
        } else {
            let idx = m as usize;
            let fd = digits.get(idx).copied().unwrap_or(0);
            let rest = digits.iter().skip(idx + 1).any(|&d| d != 0);
            (fd, rest)
        };
        let round_up = first_dropped > 5
            || (first_dropped == 5
                && (rest_nonzero || kept.last().is_some_and(|&d| d % 2 == 1)));
        if round_up {
            let mut i = kept.len();
            loop {
                if i == 0 {
                    kept.insert(0, 1);
                    break;
                }
                i -= 1;
                if kept[i] == 9 {
                    kept[i] = 0;
                } else {
                    kept[i] += 1;
                    break;
                }
            }
        }
        if kept.len() < places {
            let pad = places - kept.len();
            kept.splice(0..0, std::iter::repeat(0).take(pad));
        }
        let all_zero = kept.iter().all(|&d| d == 0);
        let mut out = String::new();
        if sign == Sign::Neg && !all_zero {
            out.push('-');
        }
        let split = kept.len() - places;
        if split == 0 {
            out.push('0');
        } else {
            for &d in &kept[..split] {
                out.push((b'0' + d) as char);
            }
        }
        if places > 0 {
            out.push('.');
            for &d in &kept[split..] {
                out.push((b'0' + d) as char);
            }
        }
        out
    }
}

fn zero_places(places: usize) -> String {
    if places == 0 {
        "0".to_string()
    } else {
        format!("0.{}", "0".repeat(places))
    }
}
