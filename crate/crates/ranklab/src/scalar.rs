//! Exact scalars over Q(i) and its real quadratic extensions Q(i)(sqrt(d)).
//!
//! A scalar is four arbitrary-precision rationals `(a_re, a_im, b_re, b_im)` read as
//! `(a_re + a_im*i) + (b_re + b_im*i)*sqrt(d)`, with the radicand `d` fixed by a
//! [`FieldSpec`]. Components stay in lowest terms with positive denominators (the
//! backing rational type normalizes on construction), so structural equality is value
//! equality. Values from different fields never mix: arithmetic rejects the pair
//! instead of promoting either side.

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// Arbitrary-precision rational, always normalized.
pub type Rat = Ratio<BigInt>;

/// Shorthand for a rational from an integer pair. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// Shorthand for an integer as a rational.
pub fn rat_int(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ScalarError {
    /// Radicand is not 0 and not a squarefree non-square >= 2.
    #[error("invalid radicand {0}: must be 0 or a squarefree non-square >= 2")]
    InvalidRadicand(u64),
    /// Two operands live in different fields.
    #[error("field mismatch: sqrt({0}) vs sqrt({1})")]
    FieldMismatch(u64, u64),
    /// Division by the zero scalar.
    #[error("division by zero scalar")]
    DivisionByZero,
    /// Text form did not parse.
    #[error("unparsable scalar {0:?}: {1}")]
    Parse(String, String),
}

/// The coefficient field: Q(i) when `radicand == 0`, else Q(i)(sqrt(radicand)).
///
/// Valid radicands are 0 or squarefree non-squares >= 2, so `sqrt(radicand)` is
/// irrational over Q(i) and the four components of a scalar are a basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    radicand: u64,
}

impl FieldSpec {
    /// The plain Gaussian-rational field Q(i).
    pub const RATIONAL: FieldSpec = FieldSpec { radicand: 0 };

    /// Field with an adjoined square root. Rejects radicands that would collapse
    /// the basis (squares) or hide a square factor.
    pub fn new(radicand: u64) -> Result<Self, ScalarError> {
        if radicand == 0 {
            return Ok(Self::RATIONAL);
        }
        if radicand < 2 || is_square(radicand) || !is_squarefree(radicand) {
            return Err(ScalarError::InvalidRadicand(radicand));
        }
        Ok(FieldSpec { radicand })
    }

    /// The adjoined radicand, 0 for plain Q(i).
    pub fn radicand(&self) -> u64 {
        self.radicand
    }

    /// Whether the field has a quadratic extension part.
    pub fn has_root(&self) -> bool {
        self.radicand != 0
    }

    fn check(self, other: FieldSpec) -> Result<(), ScalarError> {
        if self == other {
            Ok(())
        } else {
            Err(ScalarError::FieldMismatch(self.radicand, other.radicand))
        }
    }
}

fn is_square(n: u64) -> bool {
    let r = (n as f64).sqrt() as u64;
    (r.saturating_sub(1)..=r + 1).any(|k| k * k == n)
}

fn is_squarefree(n: u64) -> bool {
    let mut n = n;
    let mut p = 2u64;
    while p * p <= n {
        if n % (p * p) == 0 {
            return false;
        }
        while n % p == 0 {
            n /= p;
        }
        p += 1;
    }
    true
}

/// Element of Q(i) or Q(i)(sqrt(d)); see the module doc for the representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactScalar {
    a_re: Rat,
    a_im: Rat,
    b_re: Rat,
    b_im: Rat,
    field: FieldSpec,
}

/// Complex rational helper: (re, im) pairs under Gaussian arithmetic.
type Cx = (Rat, Rat);

fn cx_add(x: &Cx, y: &Cx) -> Cx {
    (&x.0 + &y.0, &x.1 + &y.1)
}

fn cx_sub(x: &Cx, y: &Cx) -> Cx {
    (&x.0 - &y.0, &x.1 - &y.1)
}

fn cx_mul(x: &Cx, y: &Cx) -> Cx {
    (&x.0 * &y.0 - &x.1 * &y.1, &x.0 * &y.1 + &x.1 * &y.0)
}

fn cx_scale(x: &Cx, s: &Rat) -> Cx {
    (&x.0 * s, &x.1 * s)
}

fn cx_is_zero(x: &Cx) -> bool {
    x.0.is_zero() && x.1.is_zero()
}

/// Inverse of a nonzero complex rational.
fn cx_inv(x: &Cx) -> Cx {
    let norm = &x.0 * &x.0 + &x.1 * &x.1;
    (&x.0 / &norm, -&x.1 / &norm)
}

impl ExactScalar {
    /// Builds a scalar from all four components. The sqrt components must be zero
    /// when the field has no root; that combination is rejected as a field mismatch.
    pub fn from_components(
        a_re: Rat,
        a_im: Rat,
        b_re: Rat,
        b_im: Rat,
        field: FieldSpec,
    ) -> Result<Self, ScalarError> {
        if !field.has_root() && (!b_re.is_zero() || !b_im.is_zero()) {
            return Err(ScalarError::FieldMismatch(field.radicand, 0));
        }
        Ok(ExactScalar { a_re, a_im, b_re, b_im, field })
    }

    pub fn zero(field: FieldSpec) -> Self {
        ExactScalar {
            a_re: Rat::zero(),
            a_im: Rat::zero(),
            b_re: Rat::zero(),
            b_im: Rat::zero(),
            field,
        }
    }

    pub fn one(field: FieldSpec) -> Self {
        Self::from_rat(Rat::one(), field)
    }

    /// The imaginary unit.
    pub fn i(field: FieldSpec) -> Self {
        ExactScalar {
            a_re: Rat::zero(),
            a_im: Rat::one(),
            b_re: Rat::zero(),
            b_im: Rat::zero(),
            field,
        }
    }

    /// `sqrt(d)` itself. Panics if the field has no root; callers select the field first.
    pub fn root(field: FieldSpec) -> Self {
        assert!(field.has_root(), "field Q(i) has no adjoined root");
        ExactScalar {
            a_re: Rat::zero(),
            a_im: Rat::zero(),
            b_re: Rat::one(),
            b_im: Rat::zero(),
            field,
        }
    }

    pub fn from_rat(q: Rat, field: FieldSpec) -> Self {
        ExactScalar {
            a_re: q,
            a_im: Rat::zero(),
            b_re: Rat::zero(),
            b_im: Rat::zero(),
            field,
        }
    }

    pub fn from_int(n: i64, field: FieldSpec) -> Self {
        Self::from_rat(rat_int(n), field)
    }

    /// Gaussian value `re + im*i` from integer parts.
    pub fn gaussian(re: i64, im: i64, field: FieldSpec) -> Self {
        ExactScalar {
            a_re: rat_int(re),
            a_im: rat_int(im),
            b_re: Rat::zero(),
            b_im: Rat::zero(),
            field,
        }
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn components(&self) -> (&Rat, &Rat, &Rat, &Rat) {
        (&self.a_re, &self.a_im, &self.b_re, &self.b_im)
    }

    pub fn is_zero(&self) -> bool {
        self.a_re.is_zero() && self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a_re.is_one() && self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    /// True when the value lies in Q (no imaginary and no root component).
    pub fn is_rational(&self) -> bool {
        self.a_im.is_zero() && self.b_re.is_zero() && self.b_im.is_zero()
    }

    fn a(&self) -> Cx {
        (self.a_re.clone(), self.a_im.clone())
    }

    fn b(&self) -> Cx {
        (self.b_re.clone(), self.b_im.clone())
    }

    fn from_cx(a: Cx, b: Cx, field: FieldSpec) -> Self {
        ExactScalar { a_re: a.0, a_im: a.1, b_re: b.0, b_im: b.1, field }
    }

    pub fn add(&self, other: &Self) -> Result<Self, ScalarError> {
        self.field.check(other.field)?;
        Ok(ExactScalar {
            a_re: &self.a_re + &other.a_re,
            a_im: &self.a_im + &other.a_im,
            b_re: &self.b_re + &other.b_re,
            b_im: &self.b_im + &other.b_im,
            field: self.field,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, ScalarError> {
        self.field.check(other.field)?;
        Ok(ExactScalar {
            a_re: &self.a_re - &other.a_re,
            a_im: &self.a_im - &other.a_im,
            b_re: &self.b_re - &other.b_re,
            b_im: &self.b_im - &other.b_im,
            field: self.field,
        })
    }

    pub fn neg(&self) -> Self {
        ExactScalar {
            a_re: -&self.a_re,
            a_im: -&self.a_im,
            b_re: -&self.b_re,
            b_im: -&self.b_im,
            field: self.field,
        }
    }

    /// `(a1 + b1 r)(a2 + b2 r) = (a1 a2 + b1 b2 d) + (a1 b2 + b1 a2) r` with complex parts.
    pub fn mul(&self, other: &Self) -> Result<Self, ScalarError> {
        self.field.check(other.field)?;
        let (a1, b1) = (self.a(), self.b());
        let (a2, b2) = (other.a(), other.b());
        let d = rat_int(self.field.radicand as i64);
        let a = cx_add(&cx_mul(&a1, &a2), &cx_scale(&cx_mul(&b1, &b2), &d));
        let b = cx_add(&cx_mul(&a1, &b2), &cx_mul(&b1, &a2));
        Ok(Self::from_cx(a, b, self.field))
    }

    /// Multiplicative inverse. `(a + b r)^-1 = (a - b r) / (a^2 - b^2 d)`; the
    /// denominator is nonzero for nonzero input because r is irrational over Q(i).
    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let (a, b) = (self.a(), self.b());
        if cx_is_zero(&b) {
            let ia = cx_inv(&a);
            return Ok(Self::from_cx(ia, (Rat::zero(), Rat::zero()), self.field));
        }
        let d = rat_int(self.field.radicand as i64);
        let norm = cx_sub(&cx_mul(&a, &a), &cx_scale(&cx_mul(&b, &b), &d));
        debug_assert!(!cx_is_zero(&norm), "norm vanished for nonzero scalar");
        let inv_norm = cx_inv(&norm);
        let na = cx_mul(&a, &inv_norm);
        let nb = cx_mul(&cx_scale(&b, &-Rat::one()), &inv_norm);
        Ok(Self::from_cx(na, nb, self.field))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ScalarError> {
        self.mul(&other.inv()?)
    }

    /// Complex conjugation; fixes sqrt(d), which embeds as a positive real.
    pub fn conj(&self) -> Self {
        ExactScalar {
            a_re: self.a_re.clone(),
            a_im: -&self.a_im,
            b_re: self.b_re.clone(),
            b_im: -&self.b_im,
            field: self.field,
        }
    }

    /// Parses the text form produced by `Display`: terms `p/q`, `p/q*i`,
    /// `p/q*sqrt(d)`, `p/q*i*sqrt(d)` joined by `+`/`-`, each shape at most once.
    pub fn parse(text: &str, field: FieldSpec) -> Result<Self, ScalarError> {
        let err = |msg: &str| ScalarError::Parse(text.to_string(), msg.to_string());
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(err("empty"));
        }
        let mut value = Self::zero(field);
        let mut seen = [false; 4];
        for (sign, term) in split_signed_terms(&compact).map_err(|m| err(&m))? {
            let (slot, coeff) = parse_term(&term, field).map_err(|m| err(&m))?;
            if seen[slot] {
                return Err(err("duplicate term shape"));
            }
            seen[slot] = true;
            let coeff = if sign { -coeff } else { coeff };
            match slot {
                0 => value.a_re = coeff,
                1 => value.a_im = coeff,
                2 => value.b_re = coeff,
                _ => value.b_im = coeff,
            }
        }
        if !field.has_root() && (!value.b_re.is_zero() || !value.b_im.is_zero()) {
            return Err(err("sqrt term in a field without a root"));
        }
        Ok(value)
    }
}

/// Splits `a+b-c` into sign/term pairs; the leading term may carry a `-`.
fn split_signed_terms(s: &str) -> Result<Vec<(bool, String)>, String> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut sign = false;
    let mut started = false;
    for (idx, ch) in s.char_indices() {
        match ch {
            '+' | '-' if started => {
                if current.is_empty() {
                    return Err(format!("dangling sign at byte {idx}"));
                }
                terms.push((sign, std::mem::take(&mut current)));
                sign = ch == '-';
            }
            '-' if !started => {
                sign = true;
                started = true;
            }
            '+' if !started => {
                started = true;
            }
            _ => {
                started = true;
                current.push(ch);
            }
        }
    }
    if current.is_empty() {
        return Err("trailing sign".to_string());
    }
    terms.push((sign, current));
    Ok(terms)
}

/// Parses one unsigned term into (component slot, coefficient).
/// Slots: 0 real, 1 imaginary, 2 sqrt, 3 imaginary sqrt.
fn parse_term(term: &str, field: FieldSpec) -> Result<(usize, Rat), String> {
    let mut parts = term.split('*').peekable();
    let first = parts.peek().copied().unwrap_or("");
    let coeff = if first != "i" && !first.starts_with("sqrt(") {
        let c = parse_rat(parts.next().unwrap_or(""))?;
        Some(c)
    } else {
        None
    };
    let mut imag = false;
    let mut root = false;
    for p in parts {
        if p == "i" && !imag && !root {
            imag = true;
        } else if p.starts_with("sqrt(") && p.ends_with(')') && !root {
            let inner: u64 = p[5..p.len() - 1]
                .parse()
                .map_err(|_| format!("bad radicand in {p:?}"))?;
            if inner != field.radicand() {
                return Err(format!("radicand {inner} does not match field {}", field.radicand()));
            }
            root = true;
        } else {
            return Err(format!("unexpected factor {p:?}"));
        }
    }
    let coeff = match coeff {
        Some(c) => c,
        None if imag || root => Rat::one(),
        None => return Err("empty term".to_string()),
    };
    Ok((usize::from(imag) + 2 * usize::from(root), coeff))
}

fn parse_rat(s: &str) -> Result<Rat, String> {
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    if num.is_empty() || !num.bytes().all(|b| b.is_ascii_digit()) {
        return Err(format!("bad numerator {num:?}"));
    }
    if den.is_empty() || !den.bytes().all(|b| b.is_ascii_digit()) || den.bytes().all(|b| b == b'0')
    {
        return Err(format!("bad denominator {den:?}"));
    }
    let n: BigInt = num.parse().map_err(|_| "numerator overflow".to_string())?;
    let d: BigInt = den.parse().map_err(|_| "denominator overflow".to_string())?;
    Ok(Ratio::new(n, d))
}

fn fmt_rat(q: &Rat) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for ExactScalar {
    /// Emits the canonical text form; `parse` round-trips it bit-exactly.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let d = self.field.radicand();
        let units = ["", "*i", "*sqrt(D)", "*i*sqrt(D)"];
        let comps = [&self.a_re, &self.a_im, &self.b_re, &self.b_im];
        let mut first = true;
        for (q, unit) in comps.into_iter().zip(units) {
            if q.is_zero() {
                continue;
            }
            let mag = fmt_rat(&q.abs());
            let unit = unit.replace('D', &d.to_string());
            if first {
                let sign = if q.is_negative() { "-" } else { "" };
                write!(f, "{sign}{mag}{unit}")?;
                first = false;
            } else {
                let sign = if q.is_negative() { "-" } else { "+" };
                write!(f, "{sign}{mag}{unit}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q5() -> FieldSpec {
        FieldSpec::new(5).unwrap()
    }

    #[test]
    fn radicand_validation() {
        assert!(FieldSpec::new(0).is_ok());
        assert!(FieldSpec::new(5).is_ok());
        assert!(FieldSpec::new(13).is_ok());
        assert!(FieldSpec::new(21).is_ok());
        assert_eq!(FieldSpec::new(1), Err(ScalarError::InvalidRadicand(1)));
        assert_eq!(FieldSpec::new(4), Err(ScalarError::InvalidRadicand(4)));
        assert_eq!(FieldSpec::new(9), Err(ScalarError::InvalidRadicand(9)));
        assert_eq!(FieldSpec::new(12), Err(ScalarError::InvalidRadicand(12)));
        assert_eq!(FieldSpec::new(18), Err(ScalarError::InvalidRadicand(18)));
    }

    #[test]
    fn gaussian_product() {
        let f = FieldSpec::RATIONAL;
        let x = ExactScalar::gaussian(1, 1, f);
        let y = ExactScalar::gaussian(1, -1, f);
        assert_eq!(x.mul(&y).unwrap(), ExactScalar::from_int(2, f));
    }

    #[test]
    fn root_inverse_matches_conjugate_trick() {
        // 1/(2 + sqrt(5)) = -2 + sqrt(5).
        let f = q5();
        let two_plus = ExactScalar::from_int(2, f).add(&ExactScalar::root(f)).unwrap();
        let inv = two_plus.inv().unwrap();
        let expected = ExactScalar::root(f).sub(&ExactScalar::from_int(2, f)).unwrap();
        assert_eq!(inv, expected);
        assert!(two_plus.mul(&inv).unwrap().is_one());
    }

    #[test]
    fn mixed_field_rejected() {
        let x = ExactScalar::one(FieldSpec::RATIONAL);
        let y = ExactScalar::one(q5());
        assert_eq!(x.add(&y), Err(ScalarError::FieldMismatch(0, 5)));
        assert_eq!(y.mul(&x), Err(ScalarError::FieldMismatch(5, 0)));
    }

    #[test]
    fn conjugation_negates_imaginary_parts() {
        let f = q5();
        let z = ExactScalar::from_components(rat(3, 1), rat(2, 1), rat(1, 2), rat(-1, 3), f)
            .unwrap();
        let c = z.conj();
        assert_eq!(c.components().1, &rat(-2, 1));
        assert_eq!(c.components().3, &rat(1, 3));
        // Conjugation is a ring involution.
        assert_eq!(c.conj(), z);
        let w = ExactScalar::gaussian(1, 4, f);
        assert_eq!(z.mul(&w).unwrap().conj(), z.conj().mul(&w.conj()).unwrap());
    }

    #[test]
    fn display_and_parse_round_trip() {
        let f = q5();
        let z = ExactScalar::from_components(rat(-1, 2), rat(3, 1), rat(0, 1), rat(-2, 7), f)
            .unwrap();
        let text = z.to_string();
        assert_eq!(text, "-1/2+3*i-2/7*i*sqrt(5)");
        assert_eq!(ExactScalar::parse(&text, f).unwrap(), z);
        assert_eq!(ExactScalar::parse("0", f).unwrap(), ExactScalar::zero(f));
        assert_eq!(
            ExactScalar::parse("1/2+1/2*i", FieldSpec::RATIONAL).unwrap(),
            ExactScalar::from_components(rat(1, 2), rat(1, 2), rat(0, 1), rat(0, 1), FieldSpec::RATIONAL)
                .unwrap()
        );
        assert!(ExactScalar::parse("1*sqrt(3)", f).is_err());
        assert!(ExactScalar::parse("1++2", f).is_err());
        assert!(ExactScalar::parse("1/0", f).is_err());
    }

    #[test]
    fn division_by_zero_reported() {
        let f = FieldSpec::RATIONAL;
        assert_eq!(
            ExactScalar::one(f).div(&ExactScalar::zero(f)),
            Err(ScalarError::DivisionByZero)
        );
    }
}
