//! Sparse multivariate polynomials over Q with exponent-vector keys.

use super::{LinearForm, Rat, Specialization};
use num_traits::{One, Zero};
use std::collections::BTreeMap;

/// Sparse polynomial in u_1..u_m. Terms are keyed by exponent vectors in
/// lexicographic order (the BTreeMap order), which fixes a deterministic
/// term order for printing and iteration. No zero coefficient is stored.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SparsePoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl SparsePoly {
    pub fn zero(nvars: usize) -> Self {
        SparsePoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        SparsePoly::constant(nvars, Rat::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut exp = vec![0u32; nvars];
        exp[i] = 1;
        SparsePoly::monomial(nvars, exp, Rat::one())
    }

    pub fn monomial(nvars: usize, exp: Vec<u32>, c: Rat) -> Self {
        assert_eq!(exp.len(), nvars);
        let mut p = SparsePoly::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exp, c);
        }
        p
    }

    pub fn from_linear(lf: &LinearForm) -> Self {
        let nvars = lf.nvars();
        let mut p = SparsePoly::zero(nvars);
        for (i, c) in lf.coeffs().iter().enumerate() {
            if !c.is_zero() {
                let mut exp = vec![0u32; nvars];
                exp[i] = 1;
                p.terms.insert(exp, c.clone());
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    /// The constant coefficient.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&vec![0u32; self.nvars])
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_zero() {
            return Some(Rat::zero());
        }
        if self.terms.len() == 1 {
            let (exp, c) = self.terms.iter().next().unwrap();
            if exp.iter().all(|&e| e == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_term(&mut self, exp: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert_term(exp.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (exp, c) in &other.terms {
            out.insert_term(exp.clone(), -c.clone());
        }
        out
    }

    pub fn neg(&self) -> SparsePoly {
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, s: &Rat) -> SparsePoly {
        if s.is_zero() {
            return SparsePoly::zero(self.nvars);
        }
        SparsePoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * s)).collect(),
        }
    }

    pub fn mul(&self, other: &SparsePoly) -> SparsePoly {
        assert_eq!(self.nvars, other.nvars);
        let mut out = SparsePoly::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exp: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.insert_term(exp, ca * cb);
            }
        }
        out
    }

    pub fn mul_linear(&self, lf: &LinearForm) -> SparsePoly {
        self.mul(&SparsePoly::from_linear(lf))
    }

    pub fn pow(&self, e: u32) -> SparsePoly {
        let mut out = SparsePoly::one(self.nvars);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, point: &Specialization) -> Rat {
        assert_eq!(point.values.len(), self.nvars);
        let mut acc = Rat::zero();
        for (exp, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                for _ in 0..e {
                    t *= &point.values[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// If every monomial has the same total degree, return it.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut deg = None;
        for exp in self.terms.keys() {
            let d: u32 = exp.iter().sum();
            match deg {
                None => deg = Some(d),
                Some(prev) if prev != d => return None,
                _ => {}
            }
        }
        deg
    }

    /// Exact division by a nonzero linear form. Returns `q` with `q * lf = self`,
    /// or None if no such polynomial exists.
    pub fn divide_by_linear(&self, lf: &LinearForm) -> Option<SparsePoly> {
        assert!(!lf.is_zero(), "division by the zero form");
        assert_eq!(lf.nvars(), self.nvars);
        if self.is_zero() {
            return Some(SparsePoly::zero(self.nvars));
        }
        // Pivot on the first variable of lf; peel the top u_i-degree slice of
        // the remainder each round. The slice degree strictly decreases.
        let pivot = lf.coeffs().iter().position(|c| !c.is_zero()).unwrap();
        let pivot_coeff = lf.coeffs()[pivot].clone();
        let mut rem = self.clone();
        let mut quot = SparsePoly::zero(self.nvars);
        loop {
            if rem.is_zero() {
                return Some(quot);
            }
            let top = rem.terms.keys().map(|e| e[pivot]).max().unwrap();
            if top == 0 {
                return None;
            }
            let mut slice = SparsePoly::zero(self.nvars);
            for (exp, c) in &rem.terms {
                if exp[pivot] == top {
                    let mut e = exp.clone();
                    e[pivot] -= 1;
                    slice.insert_term(e, c / &pivot_coeff);
                }
            }
            quot = quot.add(&slice);
            rem = rem.sub(&slice.mul_linear(lf));
        }
    }

    /// Substitute u_i -> sum_j rho[j][i] * t_j (integer matrix, m' rows).
    pub fn map_vars(&self, rho: &[Vec<i64>]) -> SparsePoly {
        let m_new = rho.len();
        let images: Vec<SparsePoly> = (0..self.nvars)
            .map(|i| {
                let col: Vec<i64> = rho.iter().map(|row| row[i]).collect();
                let mut p = SparsePoly::zero(m_new);
                for (j, &c) in col.iter().enumerate() {
                    if c != 0 {
                        let mut exp = vec![0u32; m_new];
                        exp[j] = 1;
                        p.insert_term(exp, super::rat_int(c));
                    }
                }
                p
            })
            .collect();
        let mut out = SparsePoly::zero(m_new);
        for (exp, c) in &self.terms {
            let mut t = SparsePoly::constant(m_new, c.clone());
            for (i, &e) in exp.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&images[i].pow(e));
                }
            }
            out = out.add(&t);
        }
        out
    }
}

impl std::fmt::Display for SparsePoly {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        use num_traits::Signed;
        if self.is_zero() {
            return write!(f, "0");
        }
        // Leading (lex-greatest) term first.
        let mut first = true;
        for (exp, c) in self.terms.iter().rev() {
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
            let is_const = exp.iter().all(|&e| e == 0);
            if !mag.is_one() || is_const {
                write!(f, "{}", mag)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut firstvar = true;
            for (i, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !firstvar {
                    write!(f, "*")?;
                }
                firstvar = false;
                if e == 1 {
                    write!(f, "u{}", i + 1)?;
                } else {
                    write!(f, "u{}^{}", i + 1, e)?;
                }
            }
            Ok(())?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::super::rat_int;
    use super::*;

    fn u(nvars: usize, i: usize) -> SparsePoly {
        SparsePoly::var(nvars, i)
    }

    #[test]
    fn divide_difference_of_squares() {
        // (u1^2 - u2^2) / (u1 - u2) = u1 + u2
        let p = u(2, 0).mul(&u(2, 0)).sub(&u(2, 1).mul(&u(2, 1)));
        let lf = LinearForm::from_ints(&[1, -1]);
        let q = p.divide_by_linear(&lf).unwrap();
        assert_eq!(q, u(2, 0).add(&u(2, 1)));
        assert_eq!(q.mul_linear(&lf), p);
    }

    #[test]
    fn divide_not_divisible() {
        // (u1 + u2) / u1 fails: constant-in-u1 part survives.
        let p = u(2, 0).add(&u(2, 1));
        let lf = LinearForm::from_ints(&[1, 0]);
        assert!(p.divide_by_linear(&lf).is_none());
    }

    #[test]
    fn divide_zero() {
        let p = SparsePoly::zero(2);
        let lf = LinearForm::from_ints(&[1, -1]);
        assert_eq!(p.divide_by_linear(&lf), Some(SparsePoly::zero(2)));
    }

    #[test]
    fn homogeneous_degree_detects_mixed() {
        let p = u(2, 0).add(&SparsePoly::one(2));
        assert_eq!(p.homogeneous_degree(), None);
        let q = u(2, 0).mul(&u(2, 1));
        assert_eq!(q.homogeneous_degree(), Some(2));
    }

    #[test]
    fn map_vars_collapses() {
        // u1 - u2 under u_i |-> i*t becomes -t.
        let p = u(2, 0).sub(&u(2, 1));
        let q = p.map_vars(&[vec![1, 2]]);
        assert_eq!(q, SparsePoly::monomial(1, vec![1], rat_int(-1)));
    }
}
