//! Outward-rounded interval arithmetic and axis-aligned boxes.
//!
//! Every operation returns an interval guaranteed to contain the exact real
//! result for all points of the operands; endpoints move outward only when
//! hardware rounding would otherwise lose that guarantee. Boxes carry the
//! product structure used by the paving engine: the metric is always the
//! max-difference across components.

mod decimal;
pub(crate) mod round;

pub use decimal::{parse_directed, DecimalError, Round};

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Errors from interval and box operations.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum IntervalError {
    #[error("interval endpoints must be finite with lo <= hi (got [{lo}, {hi}])")]
    InvalidEndpoints { lo: f64, hi: f64 },
    #[error("division by an interval containing zero")]
    DivisionByZeroInterval,
    #[error("result endpoint overflowed the finite range")]
    Overflow,
    #[error("box dimensions do not match ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("cannot bisect a box of zero diameter")]
    DegenerateBox,
    #[error("a box needs at least one dimension")]
    EmptyBox,
}

/// A closed interval `[lo, hi]` with finite endpoints.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    /// Builds an interval, validating finiteness and orientation.
    pub fn new(lo: f64, hi: f64) -> Result<Interval, IntervalError> {
        if !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(IntervalError::InvalidEndpoints { lo, hi });
        }
        // Normalise -0.0 so serialized output has a single spelling.
        let lo = if lo == 0.0 { 0.0 } else { lo };
        let hi = if hi == 0.0 { 0.0 } else { hi };
        Ok(Interval { lo, hi })
    }

    /// The degenerate interval `[x, x]`.
    pub fn point(x: f64) -> Result<Interval, IntervalError> {
        Interval::new(x, x)
    }

    pub fn lo(self) -> f64 {
        self.lo
    }

    pub fn hi(self) -> f64 {
        self.hi
    }

    /// Upper bound on `hi - lo`.
    pub fn width(self) -> f64 {
        round::sub_up(self.hi, self.lo)
    }

    /// A point inside the interval, halfway up to rounding.
    pub fn midpoint(self) -> f64 {
        let m = self.lo / 2.0 + self.hi / 2.0;
        m.clamp(self.lo, self.hi)
    }

    pub fn contains(self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn contains_interval(self, other: Interval) -> bool {
        self.lo <= other.lo && other.hi <= self.hi
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(self, other: Interval) -> Option<Interval> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }

    /// Smallest interval containing both operands.
    pub fn hull(self, other: Interval) -> Interval {
        Interval {
            lo: self.lo.min(other.lo),
            hi: self.hi.max(other.hi),
        }
    }

    /// Widens both endpoints outward by `eps` (saturating at the finite range).
    pub fn inflate(self, eps: f64) -> Interval {
        debug_assert!(eps >= 0.0);
        Interval {
            lo: round::sub_down(self.lo, eps).max(f64::MIN),
            hi: round::add_up(self.hi, eps).min(f64::MAX),
        }
    }

    pub fn add(self, o: Interval) -> Result<Interval, IntervalError> {
        Interval::finite(round::add_down(self.lo, o.lo), round::add_up(self.hi, o.hi))
    }

    pub fn sub(self, o: Interval) -> Result<Interval, IntervalError> {
        Interval::finite(round::sub_down(self.lo, o.hi), round::sub_up(self.hi, o.lo))
    }

    pub fn mul(self, o: Interval) -> Result<Interval, IntervalError> {
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let lo = round::mul_down(a, c)
            .min(round::mul_down(a, d))
            .min(round::mul_down(b, c))
            .min(round::mul_down(b, d));
        let hi = round::mul_up(a, c)
            .max(round::mul_up(a, d))
            .max(round::mul_up(b, c))
            .max(round::mul_up(b, d));
        Interval::finite(lo, hi)
    }

    /// Division; errors when the divisor contains zero.
    pub fn div(self, o: Interval) -> Result<Interval, IntervalError> {
        if o.contains(0.0) {
            return Err(IntervalError::DivisionByZeroInterval);
        }
        let (a, b, c, d) = (self.lo, self.hi, o.lo, o.hi);
        let lo = round::div_down(a, c)
            .min(round::div_down(a, d))
            .min(round::div_down(b, c))
            .min(round::div_down(b, d));
        let hi = round::div_up(a, c)
            .max(round::div_up(a, d))
            .max(round::div_up(b, c))
            .max(round::div_up(b, d));
        Interval::finite(lo, hi)
    }

    pub fn neg(self) -> Interval {
        Interval {
            lo: -self.hi,
            hi: -self.lo,
        }
    }

    pub fn abs(self) -> Interval {
        if self.lo >= 0.0 {
            self
        } else if self.hi <= 0.0 {
            self.neg()
        } else {
            Interval {
                lo: 0.0,
                hi: self.hi.max(-self.lo),
            }
        }
    }

    /// Pointwise minimum of the two operands.
    pub fn min(self, o: Interval) -> Interval {
        Interval {
            lo: self.lo.min(o.lo),
            hi: self.hi.min(o.hi),
        }
    }

    /// Pointwise maximum of the two operands.
    pub fn max(self, o: Interval) -> Interval {
        Interval {
            lo: self.lo.max(o.lo),
            hi: self.hi.max(o.hi),
        }
    }

    /// Integer power with even/odd case analysis, so `[-1, 1]^2 = [0, 1]`
    /// rather than the naive `[-1, 1]`. `x^0` is `[1, 1]`.
    pub fn pow_int(self, n: u32) -> Result<Interval, IntervalError> {
        match n {
            0 => Interval::new(1.0, 1.0),
            1 => Ok(self),
            _ if n % 2 == 0 => {
                let m = self.abs();
                Interval::finite(pow_point(m.lo, n).lo, pow_point(m.hi, n).hi)
            }
            _ => Interval::finite(pow_point(self.lo, n).lo, pow_point(self.hi, n).hi),
        }
    }

    /// Exponential; errors when the upper endpoint overflows.
    pub fn exp(self) -> Result<Interval, IntervalError> {
        let lo = round::step_down(self.lo.exp(), 2).max(0.0);
        let hi = round::step_up(self.hi.exp(), 2);
        Interval::finite(lo, hi)
    }

    /// Sine enclosure: endpoint values plus any interior critical points.
    pub fn sin(self) -> Interval {
        self.trig_enclosure(
            f64::sin,
            std::f64::consts::FRAC_PI_2,
            -std::f64::consts::FRAC_PI_2,
        )
    }

    /// Cosine enclosure.
    pub fn cos(self) -> Interval {
        self.trig_enclosure(f64::cos, 0.0, std::f64::consts::PI)
    }

    /// Shared sine/cosine body: `f` attains +1 at `max_at + 2πk` and -1 at
    /// `min_at + 2πk`.
    fn trig_enclosure(self, f: fn(f64) -> f64, max_at: f64, min_at: f64) -> Interval {
        let full = Interval { lo: -1.0, hi: 1.0 };
        if round::sub_down(self.hi, self.lo) >= 7.0 {
            return full;
        }
        let (va, vb) = (f(self.lo), f(self.hi));
        let mut lo = round::step_down(va.min(vb), 3);
        let mut hi = round::step_up(va.max(vb), 3);
        if self.meets_angle(max_at) {
            hi = 1.0;
        }
        if self.meets_angle(min_at) {
            lo = -1.0;
        }
        Interval {
            lo: lo.max(-1.0),
            hi: hi.min(1.0),
        }
    }

    /// Conservative test for `offset + 2πk ∈ [lo, hi]` over integer `k`:
    /// never answers "no" when the true angle is inside.
    fn meets_angle(self, offset: f64) -> bool {
        let tau = std::f64::consts::TAU;
        let k0 = ((self.lo - offset) / tau).floor();
        for dk in -1..=2 {
            let c = offset + (k0 + f64::from(dk)) * tau;
            let margin = 4.0 * (c.abs() * 1e-15).max(1e-12);
            if self.lo - margin <= c && c <= self.hi + margin {
                return true;
            }
        }
        false
    }

    fn finite(lo: f64, hi: f64) -> Result<Interval, IntervalError> {
        if !lo.is_finite() || !hi.is_finite() {
            return Err(IntervalError::Overflow);
        }
        debug_assert!(lo <= hi);
        Interval::new(lo, hi)
    }
}

/// Enclosure of the exact point power `x^n` via binary interval powering.
fn pow_point(x: f64, n: u32) -> Interval {
    let mut acc = Interval { lo: 1.0, hi: 1.0 };
    let mut base = Interval { lo: x, hi: x };
    let mut k = n;
    loop {
        if k % 2 == 1 {
            acc = mul_wide(acc, base);
        }
        k /= 2;
        if k == 0 {
            return acc;
        }
        base = mul_wide(base, base);
    }
}

/// Interval product without the finiteness check; overflow saturates and is
/// caught by the caller's validation.
fn mul_wide(x: Interval, y: Interval) -> Interval {
    let (a, b, c, d) = (x.lo, x.hi, y.lo, y.hi);
    Interval {
        lo: round::mul_down(a, c)
            .min(round::mul_down(a, d))
            .min(round::mul_down(b, c))
            .min(round::mul_down(b, d)),
        hi: round::mul_up(a, c)
            .max(round::mul_up(a, d))
            .max(round::mul_up(b, c))
            .max(round::mul_up(b, d)),
    }
}

impl std::ops::Add for Interval {
    type Output = Interval;
    fn add(self, o: Interval) -> Interval {
        Interval::add(self, o).expect("interval addition overflowed")
    }
}

impl std::ops::Sub for Interval {
    type Output = Interval;
    fn sub(self, o: Interval) -> Interval {
        Interval::sub(self, o).expect("interval subtraction overflowed")
    }
}

impl std::ops::Mul for Interval {
    type Output = Interval;
    fn mul(self, o: Interval) -> Interval {
        Interval::mul(self, o).expect("interval multiplication overflowed")
    }
}

impl std::ops::Neg for Interval {
    type Output = Interval;
    fn neg(self) -> Interval {
        Interval::neg(self)
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

impl Serialize for Interval {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        (self.lo, self.hi).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Interval {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Interval, D::Error> {
        let (lo, hi) = <(f64, f64)>::deserialize(d)?;
        Interval::new(lo, hi).map_err(D::Error::custom)
    }
}

/// An axis-aligned box: a nonempty product of intervals.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct BoxN {
    dims: Vec<Interval>,
}

impl BoxN {
    pub fn new(dims: Vec<Interval>) -> Result<BoxN, IntervalError> {
        if dims.is_empty() {
            return Err(IntervalError::EmptyBox);
        }
        Ok(BoxN { dims })
    }

    /// Convenience constructor from `[lo, hi]` pairs.
    pub fn from_pairs(pairs: &[[f64; 2]]) -> Result<BoxN, IntervalError> {
        BoxN::new(
            pairs
                .iter()
                .map(|p| Interval::new(p[0], p[1]))
                .collect::<Result<_, _>>()?,
        )
    }

    pub fn dim(&self) -> usize {
        self.dims.len()
    }

    pub fn dims(&self) -> &[Interval] {
        &self.dims
    }

    pub fn get(&self, i: usize) -> Interval {
        self.dims[i]
    }

    /// Max-difference diameter: the largest component width.
    pub fn diameter(&self) -> f64 {
        self.dims.iter().map(|d| d.width()).fold(0.0, f64::max)
    }

    pub fn midpoint(&self) -> Vec<f64> {
        self.dims.iter().map(|d| d.midpoint()).collect()
    }

    pub fn contains_point(&self, p: &[f64]) -> bool {
        p.len() == self.dims.len() && self.dims.iter().zip(p).all(|(d, &x)| d.contains(x))
    }

    pub fn contains_box(&self, o: &BoxN) -> bool {
        self.dims.len() == o.dims.len()
            && self
                .dims
                .iter()
                .zip(&o.dims)
                .all(|(a, b)| a.contains_interval(*b))
    }

    /// Componentwise intersection; `None` when any component is disjoint.
    pub fn intersect(&self, o: &BoxN) -> Result<Option<BoxN>, IntervalError> {
        if self.dims.len() != o.dims.len() {
            return Err(IntervalError::DimensionMismatch {
                left: self.dims.len(),
                right: o.dims.len(),
            });
        }
        let mut dims = Vec::with_capacity(self.dims.len());
        for (a, b) in self.dims.iter().zip(&o.dims) {
            match a.intersect(*b) {
                Some(c) => dims.push(c),
                None => return Ok(None),
            }
        }
        Ok(Some(BoxN { dims }))
    }

    /// Smallest box containing both operands.
    pub fn hull(&self, o: &BoxN) -> Result<BoxN, IntervalError> {
        if self.dims.len() != o.dims.len() {
            return Err(IntervalError::DimensionMismatch {
                left: self.dims.len(),
                right: o.dims.len(),
            });
        }
        Ok(BoxN {
            dims: self
                .dims
                .iter()
                .zip(&o.dims)
                .map(|(a, b)| a.hull(*b))
                .collect(),
        })
    }

    pub fn inflate(&self, eps: f64) -> BoxN {
        BoxN {
            dims: self.dims.iter().map(|d| d.inflate(eps)).collect(),
        }
    }

    /// Index of the widest component; ties go to the lowest index.
    pub fn widest_dim(&self) -> usize {
        let mut best = 0;
        let mut best_w = self.dims[0].width();
        for (i, d) in self.dims.iter().enumerate().skip(1) {
            let w = d.width();
            if w > best_w {
                best = i;
                best_w = w;
            }
        }
        best
    }

    /// Splits the widest component at its midpoint. The two halves cover the
    /// box exactly and overlap only on the shared face.
    pub fn bisect(&self) -> Result<(BoxN, BoxN), IntervalError> {
        if self.diameter() == 0.0 {
            return Err(IntervalError::DegenerateBox);
        }
        let k = self.widest_dim();
        let d = self.dims[k];
        let mut mid = d.midpoint();
        if mid <= d.lo || mid >= d.hi {
            // Component is a couple of representables wide; take the
            // neighbour so both halves stay well formed.
            mid = d.lo.next_up().min(d.hi);
        }
        let mut left = self.dims.clone();
        let mut right = self.dims.clone();
        left[k] = Interval { lo: d.lo, hi: mid };
        right[k] = Interval { lo: mid, hi: d.hi };
        Ok((BoxN { dims: left }, BoxN { dims: right }))
    }

    /// All `2^n` corner points, in binary counting order over dimensions.
    pub fn corners(&self) -> Vec<Vec<f64>> {
        let n = self.dims.len();
        assert!(n <= 24, "corner enumeration limited to 24 dimensions");
        let mut out = Vec::with_capacity(1 << n);
        for mask in 0u32..(1u32 << n) {
            out.push(
                self.dims
                    .iter()
                    .enumerate()
                    .map(|(i, d)| if mask >> i & 1 == 0 { d.lo } else { d.hi })
                    .collect(),
            );
        }
        out
    }
}

impl<'de> Deserialize<'de> for BoxN {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<BoxN, D::Error> {
        let dims = Vec::<Interval>::deserialize(d)?;
        BoxN::new(dims).map_err(D::Error::custom)
    }
}

impl std::fmt::Display for BoxN {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, d) in self.dims.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// Max-difference distance between two points of equal dimension.
pub fn linf_distance(a: &[f64], b: &[f64]) -> f64 {
    assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .fold(0.0, f64::max)
}

/// Max-difference distance from a point to a box (zero inside).
pub fn linf_distance_to_box(p: &[f64], b: &BoxN) -> f64 {
    assert_eq!(p.len(), b.dim());
    p.iter()
        .zip(b.dims())
        .map(|(&x, d)| {
            if x < d.lo() {
                d.lo() - x
            } else if x > d.hi() {
                x - d.hi()
            } else {
                0.0
            }
        })
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn construction_validates_endpoints() {
        assert!(Interval::new(1.0, 0.0).is_err());
        assert!(Interval::new(f64::NAN, 0.0).is_err());
        assert!(Interval::new(0.0, f64::INFINITY).is_err());
        assert!(Interval::new(-1.5, -1.5).is_ok());
        assert!(BoxN::new(vec![]).is_err());
    }

    #[test]
    fn exact_arithmetic_examples() {
        assert_eq!(iv(1.0, 2.0) + iv(3.0, 4.0), iv(4.0, 6.0));
        assert_eq!(iv(-1.0, 2.0) * iv(3.0, 4.0), iv(-4.0, 8.0));
        assert_eq!(iv(1.0, 2.0).div(iv(2.0, 2.0)).unwrap(), iv(0.5, 1.0));
        assert_eq!(-iv(1.0, 3.0), iv(-3.0, -1.0));
        assert_eq!(iv(-3.0, 1.0).abs(), iv(0.0, 3.0));
        assert_eq!(iv(0.0, 2.0).min(iv(1.0, 3.0)), iv(0.0, 2.0));
        assert_eq!(iv(0.0, 2.0).max(iv(1.0, 3.0)), iv(1.0, 3.0));
    }

    #[test]
    fn division_by_zero_interval_is_an_error() {
        assert_eq!(
            iv(1.0, 2.0).div(iv(-1.0, 1.0)),
            Err(IntervalError::DivisionByZeroInterval)
        );
        assert_eq!(
            iv(1.0, 2.0).div(iv(0.0, 1.0)),
            Err(IntervalError::DivisionByZeroInterval)
        );
    }

    #[test]
    fn subtraction_of_identical_intervals_brackets_zero() {
        let a = iv(0.0, 1.0);
        let d = a - a;
        assert_eq!(d, iv(-1.0, 1.0));
    }

    #[test]
    fn power_uses_even_odd_case_analysis() {
        let sq = iv(-1.0, 1.0).pow_int(2).unwrap();
        assert_eq!(sq.lo(), 0.0);
        assert!((sq.hi() - 1.0).abs() <= 4.0 * f64::EPSILON);

        let cube = iv(-2.0, 1.0).pow_int(3).unwrap();
        assert!(cube.contains(-8.0) && cube.contains(1.0) && cube.contains(0.0));
        assert!(cube.lo() >= -8.0 - 1e-14 && cube.hi() <= 1.0 + 1e-15);

        assert_eq!(iv(-5.0, 3.0).pow_int(0).unwrap(), iv(1.0, 1.0));
        assert_eq!(iv(-5.0, 3.0).pow_int(1).unwrap(), iv(-5.0, 3.0));
        // 1.5^3 is exact in binary.
        let c = iv(1.5, 1.5).pow_int(3).unwrap();
        assert_eq!(c, iv(3.375, 3.375));
    }

    #[test]
    fn sine_encloses_samples_and_finds_critical_points() {
        let a = iv(0.0, 3.2);
        let s = a.sin();
        assert_eq!(s.hi(), 1.0, "pi/2 lies inside");
        for k in 0..=10_000 {
            let x = 3.2 * f64::from(k) / 10_000.0;
            assert!(s.contains(x.sin()), "sin({x}) escaped {s}");
        }
        // Tightness: the lower end comes from sin(3.2), not from -1.
        assert!((s.lo() - 3.2f64.sin()).abs() < 1e-12);

        assert_eq!(iv(0.0, 7.0).sin(), iv(-1.0, 1.0));
        let c = iv(-0.5, 0.5).cos();
        assert_eq!(c.hi(), 1.0, "cos peaks at 0");
        assert!((c.lo() - 0.5f64.cos()).abs() < 1e-12);
    }

    #[test]
    fn exp_is_monotone_and_positive() {
        let e = iv(0.0, 1.0).exp().unwrap();
        assert!(e.contains(1.0) && e.contains(std::f64::consts::E));
        assert!(e.lo() <= 1.0 && e.lo() > 1.0 - 1e-12);
        assert!(e.hi() >= std::f64::consts::E && e.hi() < std::f64::consts::E + 1e-12);
        assert_eq!(iv(-800.0, -700.0).exp().unwrap().lo(), 0.0);
        assert_eq!(iv(0.0, 1000.0).exp(), Err(IntervalError::Overflow));
    }

    #[test]
    fn box_intersection_and_mismatch() {
        let a = BoxN::from_pairs(&[[0.0, 1.0], [0.0, 1.0]]).unwrap();
        let b = BoxN::from_pairs(&[[0.5, 2.0], [-1.0, 0.25]]).unwrap();
        let c = a.intersect(&b).unwrap().unwrap();
        assert_eq!(c, BoxN::from_pairs(&[[0.5, 1.0], [0.0, 0.25]]).unwrap());

        let disjoint = BoxN::from_pairs(&[[2.0, 3.0], [0.0, 1.0]]).unwrap();
        assert_eq!(a.intersect(&disjoint).unwrap(), None);

        let one_d = BoxN::from_pairs(&[[0.0, 1.0]]).unwrap();
        assert!(matches!(
            a.intersect(&one_d),
            Err(IntervalError::DimensionMismatch { left: 2, right: 1 })
        ));
    }

    #[test]
    fn bisect_splits_widest_dimension_exactly() {
        let b = BoxN::from_pairs(&[[0.0, 2.0], [0.0, 1.0]]).unwrap();
        let (l, r) = b.bisect().unwrap();
        assert_eq!(l, BoxN::from_pairs(&[[0.0, 1.0], [0.0, 1.0]]).unwrap());
        assert_eq!(r, BoxN::from_pairs(&[[1.0, 2.0], [0.0, 1.0]]).unwrap());

        // Ties split the lowest index.
        let b = BoxN::from_pairs(&[[0.0, 1.0], [4.0, 5.0]]).unwrap();
        let (l, _) = b.bisect().unwrap();
        assert_eq!(l, BoxN::from_pairs(&[[0.0, 0.5], [4.0, 5.0]]).unwrap());

        let point = BoxN::from_pairs(&[[1.0, 1.0]]).unwrap();
        assert_eq!(point.bisect(), Err(IntervalError::DegenerateBox));
    }

    #[test]
    fn diameter_is_the_largest_component_width() {
        let b = BoxN::from_pairs(&[[0.0, 0.25], [1.0, 2.5]]).unwrap();
        assert_eq!(b.diameter(), 1.5);
        assert_eq!(b.widest_dim(), 1);
    }

    #[test]
    fn corners_enumerate_in_binary_order() {
        let b = BoxN::from_pairs(&[[0.0, 1.0], [2.0, 3.0]]).unwrap();
        assert_eq!(
            b.corners(),
            vec![
                vec![0.0, 2.0],
                vec![1.0, 2.0],
                vec![0.0, 3.0],
                vec![1.0, 3.0]
            ]
        );
    }

    #[test]
    fn distances() {
        assert_eq!(linf_distance(&[0.0, 0.0], &[3.0, -4.0]), 4.0);
        let b = BoxN::from_pairs(&[[0.0, 1.0], [0.0, 1.0]]).unwrap();
        assert_eq!(linf_distance_to_box(&[0.5, 0.5], &b), 0.0);
        assert_eq!(linf_distance_to_box(&[2.0, 0.5], &b), 1.0);
        assert_eq!(linf_distance_to_box(&[-0.25, 3.0], &b), 2.0);
    }

    #[test]
    fn serde_round_trip_uses_pair_arrays() {
        let b = BoxN::from_pairs(&[[0.0, 0.5], [-1.0, 2.0]]).unwrap();
        let json = serde_json::to_string(&b).unwrap();
        assert_eq!(json, "[[0.0,0.5],[-1.0,2.0]]");
        let back: BoxN = serde_json::from_str(&json).unwrap();
        assert_eq!(back, b);
        assert!(serde_json::from_str::<BoxN>("[[2.0,1.0]]").is_err());
    }
}
