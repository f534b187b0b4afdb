//! Error-free transformations and a double-double accumulator.
//!
//! The profiled objective and the angle objective are quadratic forms whose
//! terms are of the size of the largest eigenvalue while their value, near the
//! optimum, is the smallest one. Evaluating them with plain `f64` arithmetic
//! leaves an absolute error of a few ulps of the largest eigenvalue, which
//! swamps the result for near-collinear data. Carrying the sum in two words
//! keeps the result accurate relative to itself.

/// Unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct TwoFloat {
    pub hi: f64,
    pub lo: f64,
}

#[inline]
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

#[inline]
pub(crate) fn two_prod(a: f64, b: f64) -> (f64, f64) {
    let p = a * b;
    (p, a.mul_add(b, -p))
}

impl TwoFloat {
    pub fn from_sum(terms: &[f64]) -> Self {
        let mut s = 0.0;
        let mut c = 0.0;
        for &t in terms {
            let (ns, e) = two_sum(s, t);
            s = ns;
            c += e;
        }
        let (hi, lo) = two_sum(s, c);
        TwoFloat { hi, lo }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    pub fn div(self, rhs: TwoFloat) -> TwoFloat {
        let q1 = self.hi / rhs.hi;
        if !q1.is_finite() || q1 == 0.0 {
            return TwoFloat { hi: q1, lo: 0.0 };
        }
        let (p, pe) = two_prod(q1, rhs.hi);
        let r = (((self.hi - p) - pe) + self.lo) - q1 * rhs.lo;
        let (hi, lo) = two_sum(q1, r / rhs.hi);
        TwoFloat { hi, lo }
    }

    /// Sign-exact comparison helper: returns `self - rhs` rounded to `f64`.
    pub fn diff(self, rhs: TwoFloat) -> f64 {
        let (s, e) = two_sum(self.hi, -rhs.hi);
        s + (e + (self.lo - rhs.lo))
    }
}

/// `a_xx u² + 2 a_xy u v + a_yy v²` in double-double precision.
pub(crate) fn quadratic_form(a_xx: f64, a_xy: f64, a_yy: f64, u: f64, v: f64) -> TwoFloat {
    let (uu, uu_e) = two_prod(u, u);
    let (uv, uv_e) = two_prod(u, v);
    let (vv, vv_e) = two_prod(v, v);
    let two_xy = 2.0 * a_xy;
    let (t1, t1_e) = two_prod(a_xx, uu);
    let (t2, t2_e) = two_prod(two_xy, uv);
    let (t3, t3_e) = two_prod(a_yy, vv);
    TwoFloat::from_sum(&[
        t1,
        t2,
        t3,
        t1_e + a_xx * uu_e,
        t2_e + two_xy * uv_e,
        t3_e + a_yy * vv_e,
    ])
}

/// `u² + v²` in double-double precision.
pub(crate) fn sum_of_squares(u: f64, v: f64) -> TwoFloat {
    let (uu, uu_e) = two_prod(u, u);
    let (vv, vv_e) = two_prod(v, v);
    TwoFloat::from_sum(&[uu, vv, uu_e, vv_e])
}

/// `a·d − b·c` with Kahan's fused-multiply-add correction.
pub(crate) fn det2(a: f64, b: f64, c: f64, d: f64) -> f64 {
    let w = b * c;
    let e = (-b).mul_add(c, w);
    let f = a.mul_add(d, -w);
    f + e
}
