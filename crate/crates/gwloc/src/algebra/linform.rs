//! Linear forms c_1 u_1 + ... + c_m u_m with exact rational coefficients.

use super::{Rat, Specialization};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A linear form in the torus variables. Weights of a GKM graph are integer
/// forms; forms derived from them during evaluation (w/d, w_1/d_1 + w_2/d_2,
/// shifts w - j*u) may have rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LinearForm {
    coeffs: Vec<Rat>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Rat>) -> Self {
        LinearForm { coeffs }
    }

    pub fn zero(nvars: usize) -> Self {
        LinearForm {
            coeffs: vec![Rat::zero(); nvars],
        }
    }

    /// The form `u_i` (0-based index).
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); nvars];
        coeffs[i] = Rat::one();
        LinearForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm {
            coeffs: coeffs.iter().map(|&c| super::rat_int(c)).collect(),
        }
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// True if every coefficient is an integer (weights of a GKM graph must be).
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.denom().is_one())
    }

    pub fn add(&self, other: &LinearForm) -> LinearForm {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn sub(&self, other: &LinearForm) -> LinearForm {
        assert_eq!(self.coeffs.len(), other.coeffs.len());
        LinearForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }

    pub fn neg(&self) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|a| -a).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> LinearForm {
        LinearForm {
            coeffs: self.coeffs.iter().map(|a| a * s).collect(),
        }
    }

    pub fn eval(&self, point: &Specialization) -> Rat {
        assert_eq!(self.coeffs.len(), point.values.len());
        self.coeffs
            .iter()
            .zip(&point.values)
            .map(|(c, v)| c * v)
            .fold(Rat::zero(), |acc, t| acc + t)
    }

    /// Two forms are proportional iff they span the same line (zero forms are
    /// proportional to everything by this definition's caller conventions; the
    /// GKM validator rejects zero weights separately).
    pub fn proportional_to(&self, other: &LinearForm) -> bool {
        let n = self.coeffs.len();
        for i in 0..n {
            for j in (i + 1)..n {
                let det = &self.coeffs[i] * &other.coeffs[j] - &self.coeffs[j] * &other.coeffs[i];
                if !det.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// If `self == t * other` for a scalar t, returns t.
    pub fn ratio_to(&self, other: &LinearForm) -> Option<Rat> {
        if !self.proportional_to(other) {
            return None;
        }
        for (a, b) in self.coeffs.iter().zip(&other.coeffs) {
            if !b.is_zero() {
                return Some(a / b);
            }
        }
        // other == 0: ratio exists only if self == 0 too.
        if self.is_zero() {
            Some(Rat::zero())
        } else {
            None
        }
    }

    /// Canonical representative: primitive integer coefficients with the first
    /// nonzero one positive. Returns `(canonical, scale)` with
    /// `self = scale * canonical`. Panics on the zero form.
    pub fn normalize(&self) -> (LinearForm, Rat) {
        assert!(!self.is_zero(), "cannot normalize the zero form");
        // Clear denominators, then divide by the gcd of the numerators.
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let mut gcd = BigInt::zero();
        for v in &ints {
            gcd = gcd.gcd(v);
        }
        let first = ints.iter().find(|v| !v.is_zero()).unwrap();
        if first.is_negative() {
            gcd = -gcd;
        }
        let canonical = LinearForm {
            coeffs: ints.iter().map(|v| Rat::from_integer(v / &gcd)).collect(),
        };
        // self = (gcd / lcm) * canonical
        let scale = Rat::new(gcd, lcm);
        (canonical, scale)
    }

    /// Apply a variable substitution u_i -> sum_j rho[j][i] * t_j, i.e. map the
    /// coefficient vector by the given m' x m integer matrix.
    pub fn map_vars(&self, rho: &[Vec<i64>]) -> LinearForm {
        let m_new = rho.len();
        let mut out = vec![Rat::zero(); m_new];
        for (j, row) in rho.iter().enumerate() {
            assert_eq!(row.len(), self.coeffs.len());
            for (i, c) in self.coeffs.iter().enumerate() {
                if row[i] != 0 && !c.is_zero() {
                    out[j] += c * super::rat_int(row[i]);
                }
            }
        }
        LinearForm { coeffs: out }
    }
}

impl std::fmt::Display for LinearForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mag.is_one() {
                write!(f, "u{}", i + 1)?;
            } else {
                write!(f, "{}*u{}", mag, i + 1)?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    #[test]
    fn normalize_makes_primitive_positive_leading() {
        let lf = LinearForm::new(vec![rat(-2, 3), rat(4, 3)]);
        let (canon, scale) = lf.normalize();
        assert_eq!(canon, LinearForm::from_ints(&[1, -2]));
        assert_eq!(scale, rat(-2, 3));
        assert_eq!(canon.scale(&scale), lf);
    }

    #[test]
    fn proportionality() {
        let a = LinearForm::from_ints(&[1, -1, 0]);
        let b = LinearForm::from_ints(&[-3, 3, 0]);
        let c = LinearForm::from_ints(&[1, 1, 0]);
        assert!(a.proportional_to(&b));
        assert_eq!(a.ratio_to(&b), Some(rat(-1, 3)));
        assert!(!a.proportional_to(&c));
    }

    #[test]
    fn display_reads_naturally() {
        let lf = LinearForm::new(vec![rat_int(1), rat_int(-2), rat_int(0)]);
        assert_eq!(lf.to_string(), "u1 - 2*u2");
    }
}
