//! Fractions with linear-form denominators: numerator / prod (L_i)^(k_i).

use super::{AlgebraError, LinearForm, Rat, SparsePoly, Specialization};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// An element of Q(u_1,...,u_m) whose denominator is a product of linear
/// forms, stored as a multiset of canonical forms with multiplicities.
/// After `normalize` no denominator factor divides the numerator, and zero
/// is the zero polynomial over the empty multiset.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinFrac {
    num: SparsePoly,
    den: BTreeMap<LinearForm, u32>,
}

impl LinFrac {
    pub fn zero(nvars: usize) -> Self {
        LinFrac {
            num: SparsePoly::zero(nvars),
            den: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        LinFrac::from_poly(SparsePoly::one(nvars))
    }

    pub fn from_poly(num: SparsePoly) -> Self {
        LinFrac {
            num,
            den: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        LinFrac::from_poly(SparsePoly::constant(nvars, c))
    }

    pub fn from_linear(lf: &LinearForm) -> Self {
        LinFrac::from_poly(SparsePoly::from_linear(lf))
    }

    /// 1 / lf, for a nonzero linear form.
    pub fn inv_linear(lf: &LinearForm) -> Self {
        LinFrac::one(lf.nvars()).div_linear(lf)
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn numerator(&self) -> &SparsePoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<LinearForm, u32> {
        &self.den
    }

    /// Cancel every denominator factor that exactly divides the numerator.
    /// Idempotent and value-preserving.
    pub fn normalize(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        let factors: Vec<LinearForm> = self.den.keys().cloned().collect();
        for lf in factors {
            while self.den.get(&lf).copied().unwrap_or(0) > 0 {
                match self.num.divide_by_linear(&lf) {
                    Some(q) => {
                        self.num = q;
                        let k = self.den.get_mut(&lf).unwrap();
                        *k -= 1;
                        if *k == 0 {
                            self.den.remove(&lf);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Multiply by 1/lf for a nonzero linear form.
    pub fn div_linear(mut self, lf: &LinearForm) -> Self {
        if self.num.is_zero() {
            return self;
        }
        let (canon, scale) = lf.normalize();
        self.num = self.num.scale(&scale.recip());
        *self.den.entry(canon).or_insert(0) += 1;
        self.normalize()
    }

    /// Multiply by lf.
    pub fn mul_linear(mut self, lf: &LinearForm) -> Self {
        if lf.is_zero() {
            return LinFrac::zero(self.nvars());
        }
        let (canon, scale) = lf.normalize();
        if let Some(k) = self.den.get_mut(&canon) {
            *k -= 1;
            if *k == 0 {
                self.den.remove(&canon);
            }
            self.num = self.num.scale(&scale);
            self
        } else {
            self.num = self.num.mul_linear(lf);
            self
        }
    }

    pub fn mul_poly(mut self, p: &SparsePoly) -> Self {
        self.num = self.num.mul(p);
        self.normalize()
    }

    pub fn scale(mut self, s: &Rat) -> Self {
        self.num = self.num.scale(s);
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    pub fn neg(mut self) -> Self {
        self.num = self.num.neg();
        self
    }

    pub fn mul(&self, other: &LinFrac) -> LinFrac {
        if self.is_zero() || other.is_zero() {
            return LinFrac::zero(self.nvars());
        }
        let mut den = self.den.clone();
        for (lf, k) in &other.den {
            *den.entry(lf.clone()).or_insert(0) += k;
        }
        LinFrac {
            num: self.num.mul(&other.num),
            den,
        }
        .normalize()
    }

    pub fn add(&self, other: &LinFrac) -> LinFrac {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        // Least common multiset of factors.
        let mut lcm: BTreeMap<LinearForm, u32> = self.den.clone();
        for (lf, k) in &other.den {
            let e = lcm.entry(lf.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        let expand = |num: &SparsePoly, own: &BTreeMap<LinearForm, u32>| -> SparsePoly {
            let mut out = num.clone();
            for (lf, k) in &lcm {
                let have = own.get(lf).copied().unwrap_or(0);
                for _ in have..*k {
                    out = out.mul_linear(lf);
                }
            }
            out
        };
        let num = expand(&self.num, &self.den).add(&expand(&other.num, &other.den));
        LinFrac { num, den: lcm }.normalize()
    }

    pub fn sub(&self, other: &LinFrac) -> LinFrac {
        self.add(&other.clone().neg())
    }

    /// Inverse, defined when the numerator is a rational scalar times a
    /// product of linear forms (e.g. equivariant Euler classes).
    pub fn inv_linear_product(&self) -> Result<LinFrac, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (scalar, factors) = extract_linear_factors(&self.num)
            .ok_or(AlgebraError::InversionUnsupported)?;
        // self = scalar * prod(factors) / prod(den)  =>
        // 1/self = prod(den) / (scalar * prod(factors))
        let mut out = LinFrac::constant(self.nvars(), scalar.recip());
        for (lf, k) in &self.den {
            for _ in 0..*k {
                out = out.mul_linear(lf);
            }
        }
        for lf in &factors {
            out = out.div_linear(lf);
        }
        Ok(out)
    }

    /// Exact value at a point; `PoleAtPoint` if any denominator factor vanishes.
    pub fn specialize(&self, point: &Specialization) -> Result<Rat, AlgebraError> {
        let mut den_val = Rat::one();
        for (lf, k) in &self.den {
            let v = lf.eval(point);
            if v.is_zero() {
                return Err(AlgebraError::PoleAtPoint);
            }
            for _ in 0..*k {
                den_val *= &v;
            }
        }
        Ok(self.num.eval(point) / den_val)
    }

    /// The numerator if the normalized denominator is empty.
    pub fn as_polynomial(&self) -> Option<SparsePoly> {
        let f = self.clone().normalize();
        if f.den.is_empty() {
            Some(f.num)
        } else {
            None
        }
    }

    /// deg(numerator) - sum of denominator multiplicities, for a nonzero
    /// fraction with homogeneous numerator.
    pub fn homogeneous_degree(&self) -> Result<Option<i64>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroInput);
        }
        let Some(nd) = self.num.homogeneous_degree() else {
            return Ok(None);
        };
        let dd: u32 = self.den.values().sum();
        Ok(Some(nd as i64 - dd as i64))
    }

    /// Value equality. Equal normalized representations are compared
    /// structurally; otherwise cross-multiplication decides.
    pub fn eq_value(&self, other: &LinFrac) -> bool {
        let a = self.clone().normalize();
        let b = other.clone().normalize();
        if a == b {
            return true;
        }
        let mut lhs = a.num.clone();
        for (lf, k) in &b.den {
            for _ in 0..*k {
                lhs = lhs.mul_linear(lf);
            }
        }
        let mut rhs = b.num.clone();
        for (lf, k) in &a.den {
            for _ in 0..*k {
                rhs = rhs.mul_linear(lf);
            }
        }
        lhs == rhs
    }

    /// Substitute u_i -> sum_j rho[j][i] t_j. Fails with `PoleAtPoint` if a
    /// denominator factor is annihilated by the substitution.
    pub fn map_vars(&self, rho: &[Vec<i64>]) -> Result<LinFrac, AlgebraError> {
        let mut out = LinFrac::from_poly(self.num.map_vars(rho));
        for (lf, k) in &self.den {
            let img = lf.map_vars(rho);
            if img.is_zero() {
                return Err(AlgebraError::PoleAtPoint);
            }
            for _ in 0..*k {
                out = out.div_linear(&img);
            }
        }
        Ok(out)
    }
}

/// Write `p` as `scalar * prod(linear forms)`, if possible. The factor list
/// holds canonical (primitive, positive-leading) forms with multiplicity.
///
/// Handles the shapes the localization formula actually inverts: scalars,
/// monomials, powers of a single form, and rationally-split products found
/// by eliminating the last active variable. Returns None when the numerator
/// does not split over Q (or the search gives up), which callers surface as
/// `InversionUnsupported`.
fn extract_linear_factors(p: &SparsePoly) -> Option<(Rat, Vec<LinearForm>)> {
    let nvars = p.nvars();
    if p.is_zero() {
        return None;
    }
    if let Some(c) = p.as_constant() {
        return Some((c, Vec::new()));
    }
    let deg = p.degree().unwrap();
    if p.homogeneous_degree().is_none() {
        // A product of linear forms (no constant terms) is homogeneous.
        return None;
    }

    // Peel single-variable factors first.
    for i in 0..nvars {
        let v = LinearForm::var(nvars, i);
        if let Some(q) = p.divide_by_linear(&v) {
            let (c, mut rest) = extract_linear_factors(&q)?;
            rest.push(v);
            rest.sort();
            return Some((c, rest));
        }
    }

    // Perfect power of a single form: read the direction off the gradient of
    // any monomial slice. For p = c*L^d the partial derivatives are
    // proportional to the coefficients of L.
    if let Some((c, lf)) = try_perfect_power(p, deg) {
        return Some((c, vec![lf; deg as usize]));
    }

    // General split products: eliminate the last variable u_k appearing.
    // The u_k-free factors are (up to scalar) the leading u_k-coefficient;
    // the rest have the shape c*u_k + M with M read from recursive factors
    // of the constant slice, the scalar fixed by a verified division.
    let k = (0..nvars).rev().find(|&i| p.terms().any(|(e, _)| e[i] > 0))?;
    let e_top = p.terms().map(|(e, _)| e[k]).max().unwrap();
    let mut top = SparsePoly::zero(nvars);
    for (exp, c) in p.terms() {
        if exp[k] == e_top {
            let mut e = exp.clone();
            e[k] = 0;
            top = top.add(&SparsePoly::monomial(nvars, e, c.clone()));
        }
    }
    // Divide out the u_k-free factors (the leading u_k-coefficient up to scale).
    let (_, others) = extract_linear_factors(&top)?;
    let mut rest = p.clone();
    for lf in &others {
        rest = rest.divide_by_linear(lf)?;
    }
    // Now rest = C * prod_{t=1..e_top} (u_k + M_t); u_k was peeled above so
    // every M_t is nonzero, and the constant slice factors as C * prod M_t.
    let slice = rest_constant_slice(&rest, k)?;
    let (_, m_factors) = extract_linear_factors(&slice)?;
    let mut factors = others;
    let mut remaining = rest;
    let mut m_candidates = m_factors;
    for _ in 0..e_top {
        let mut found = false;
        // Each factor is u_k + rho*M for one of the candidate directions M;
        // rho is fixed by matching the u_k^(e-1) slice, verified by division.
        let mut seen: Vec<LinearForm> = Vec::new();
        for m in &m_candidates {
            if seen.contains(m) {
                continue;
            }
            seen.push(m.clone());
            if let Some(rho) = solve_rho(&remaining, k, m) {
                let cand = LinearForm::var(nvars, k).add(&m.scale(&rho));
                if let Some(q) = remaining.divide_by_linear(&cand) {
                    remaining = q;
                    let (canon, _) = cand.normalize();
                    factors.push(canon);
                    // consume one copy of m
                    let pos = m_candidates.iter().position(|x| x == m).unwrap();
                    m_candidates.remove(pos);
                    found = true;
                    break;
                }
            }
        }
        if !found {
            return None;
        }
    }
    remaining.as_constant()?;
    factors.sort();
    let scalar = verify_scalar(p, &factors)?;
    Some((scalar, factors))
}

fn rest_constant_slice(p: &SparsePoly, k: usize) -> Option<SparsePoly> {
    let nvars = p.nvars();
    let mut out = SparsePoly::zero(nvars);
    for (exp, c) in p.terms() {
        if exp[k] == 0 {
            out = out.add(&SparsePoly::monomial(nvars, exp.clone(), c.clone()));
        }
    }
    if out.is_zero() {
        None
    } else {
        Some(out)
    }
}

/// For remaining = C * prod(u_k + rho_t M_t), find the rho making u_k + rho*M
/// a factor, by evaluating along a line where M = 1 and trying the rational
/// roots of the restricted univariate polynomial.
fn solve_rho(p: &SparsePoly, k: usize, m: &LinearForm) -> Option<Rat> {
    let nvars = p.nvars();
    // Pick a rational point xi with m(xi) = 1, other coordinates small.
    let j = m.coeffs().iter().position(|c| !c.is_zero())?;
    for attempt in 0..8i64 {
        let mut vals: Vec<Rat> = (0..nvars)
            .map(|i| super::rat_int(1 + ((i as i64 + attempt) % 7)))
            .collect();
        vals[k] = Rat::zero();
        // Adjust coordinate j so that m(xi) = 1.
        let partial: Rat = m
            .coeffs()
            .iter()
            .zip(&vals)
            .enumerate()
            .filter(|(i, _)| *i != j)
            .map(|(_, (c, v))| c * v)
            .fold(Rat::zero(), |a, t| a + t);
        vals[j] = (Rat::one() - partial) / &m.coeffs()[j];
        // Restrict p to u_k = x at this point: univariate in x.
        let mut coeffs: BTreeMap<u32, Rat> = BTreeMap::new();
        for (exp, c) in p.terms() {
            let mut t = c.clone();
            for (i, &e) in exp.iter().enumerate() {
                if i == k {
                    continue;
                }
                for _ in 0..e {
                    t *= &vals[i];
                }
            }
            let entry = coeffs.entry(exp[k]).or_insert_with(Rat::zero);
            *entry += t;
        }
        coeffs.retain(|_, c| !c.is_zero());
        // Roots are -rho_t for factors with M_t(xi)=..; try rational roots via
        // small trial divisors of constant/leading after clearing denominators.
        if let Some(rho) = rational_roots_for(&coeffs) {
            for r in rho {
                let cand = LinearForm::var(nvars, k).add(&m.scale(&-r.clone()));
                if p.divide_by_linear(&cand).is_some() {
                    return Some(-r);
                }
            }
        }
    }
    None
}

/// Rational roots of a univariate polynomial given as exponent -> coefficient,
/// found by trial division of the (cleared) constant and leading coefficients.
/// Bounded search; returns None if the coefficients are too large to factor.
fn rational_roots_for(coeffs: &BTreeMap<u32, Rat>) -> Option<Vec<Rat>> {
    use num_bigint::BigInt;
    use num_integer::Integer;
    if coeffs.is_empty() {
        return None;
    }
    let mut lcm = BigInt::one();
    for c in coeffs.values() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: BTreeMap<u32, BigInt> = coeffs
        .iter()
        .map(|(e, c)| (*e, c.numer() * (&lcm / c.denom())))
        .collect();
    let min_e = *ints.keys().next().unwrap();
    let max_e = *ints.keys().last().unwrap();
    if max_e == min_e {
        return Some(vec![]);
    }
    let a0 = ints.get(&min_e).unwrap().clone();
    let an = ints.get(&max_e).unwrap().clone();
    let small_divisors = |n: &BigInt| -> Option<Vec<BigInt>> {
        let n = n.abs();
        let limit = BigInt::from(1_000_000u64);
        let mut divs = vec![];
        let mut d = BigInt::one();
        while &d * &d <= n {
            if (&n % &d).is_zero() {
                divs.push(d.clone());
                divs.push(&n / &d);
            }
            d += 1;
            if d > limit {
                return None;
            }
        }
        Some(divs)
    };
    let ps = small_divisors(&a0)?;
    let qs = small_divisors(&an)?;
    let eval = |x: &Rat| -> Rat {
        let mut acc = Rat::zero();
        for (e, c) in coeffs {
            let mut t = c.clone();
            for _ in 0..*e {
                t *= x;
            }
            acc += t;
        }
        acc
    };
    let mut roots = vec![];
    for pdiv in &ps {
        for qdiv in &qs {
            if qdiv.is_zero() {
                continue;
            }
            for sign in [1i64, -1] {
                let cand = Rat::new(pdiv * BigInt::from(sign), qdiv.clone());
                if eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

fn try_perfect_power(p: &SparsePoly, deg: u32) -> Option<(Rat, LinearForm)> {
    let nvars = p.nvars();
    // Direction candidate from the lex-leading monomial: for c*L^d the leading
    // monomial is c*(l_i u_i)^d for the first variable i of L; partials of the
    // leading slice give the coefficient ratios.
    let (lead_exp, _) = p.terms().next_back()?;
    let i = lead_exp.iter().position(|&e| e > 0)?;
    // candidate coefficients: coefficient of u_i^(d-1) u_j in p, divided by d,
    // relative to coefficient of u_i^d.
    let mut exp_d = vec![0u32; nvars];
    exp_d[i] = deg;
    let cd = p
        .terms()
        .find(|(e, _)| **e == exp_d)
        .map(|(_, c)| c.clone())?;
    let mut coeffs = vec![Rat::zero(); nvars];
    coeffs[i] = Rat::one();
    for j in 0..nvars {
        if j == i {
            continue;
        }
        let mut e = vec![0u32; nvars];
        e[i] = deg - 1;
        e[j] = 1;
        if let Some((_, c)) = p.terms().find(|(ee, _)| **ee == e) {
            coeffs[j] = c / (&cd * super::rat_int(deg as i64));
        }
    }
    let lf = LinearForm::new(coeffs);
    if lf.is_zero() {
        return None;
    }
    let (canon, _) = lf.normalize();
    let mut rest = p.clone();
    for _ in 0..deg {
        rest = rest.divide_by_linear(&canon)?;
    }
    let c = rest.as_constant()?;
    Some((c, canon))
}

fn verify_scalar(p: &SparsePoly, factors: &[LinearForm]) -> Option<Rat> {
    let mut prod = SparsePoly::one(p.nvars());
    for lf in factors {
        prod = prod.mul_linear(lf);
    }
    // p = scalar * prod; compare any matching nonzero term.
    let (exp, c) = prod.terms().next_back()?;
    let cp = p.terms().find(|(e, _)| *e == exp).map(|(_, c)| c.clone())?;
    let scalar = cp / c;
    if prod.scale(&scalar) == *p {
        Some(scalar)
    } else {
        None
    }
}

impl std::fmt::Display for LinFrac {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        if self.num.nterms() > 1 {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        write!(f, " / (")?;
        let mut first = true;
        for (lf, k) in &self.den {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if *k == 1 {
                write!(f, "({})", lf)?;
            } else {
                write!(f, "({})^{}", lf, k)?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::super::{rat, rat_int};
    use super::*;

    fn u(i: usize) -> LinearForm {
        LinearForm::var(2, i)
    }

    #[test]
    fn add_unit_fractions() {
        // 1/u1 + 1/u2 = (u1 + u2)/(u1 u2)
        let f = LinFrac::inv_linear(&u(0));
        let g = LinFrac::inv_linear(&u(1));
        let s = f.add(&g);
        let expect = LinFrac::from_poly(
            SparsePoly::var(2, 0).add(&SparsePoly::var(2, 1)),
        )
        .div_linear(&u(0))
        .div_linear(&u(1));
        assert!(s.eq_value(&expect));
    }

    #[test]
    fn mul_cancels() {
        // u1/(u1-u2) * (u1-u2)/u2 = u1/u2
        let d = LinearForm::from_ints(&[1, -1]);
        let f = LinFrac::from_linear(&u(0)).div_linear(&d);
        let g = LinFrac::from_linear(&d).div_linear(&u(1));
        let p = f.mul(&g);
        let expect = LinFrac::from_linear(&u(0)).div_linear(&u(1));
        assert_eq!(p, expect);
    }

    #[test]
    fn inv_of_scaled_monomial() {
        // inv(-1/u1^2) = -u1^2
        let f = LinFrac::constant(2, rat_int(-1))
            .div_linear(&u(0))
            .div_linear(&u(0));
        let inv = f.inv_linear_product().unwrap();
        let expect = LinFrac::from_poly(SparsePoly::var(2, 0).pow(2).neg());
        assert_eq!(inv, expect);
    }

    #[test]
    fn inv_of_split_product() {
        // inv((u1-u2)*(u1+2u2)/u1) = u1 / ((u1-u2)(u1+2u2))
        let a = LinearForm::from_ints(&[1, -1]);
        let b = LinearForm::from_ints(&[1, 2]);
        let f = LinFrac::from_linear(&a).mul_linear(&b).div_linear(&u(0));
        let inv = f.inv_linear_product().unwrap();
        assert!(f.mul(&inv).eq_value(&LinFrac::one(2)));
    }

    #[test]
    fn inv_unsupported_for_nonsplit() {
        // u1^2 + u2^2 does not split over Q.
        let p = SparsePoly::var(2, 0).pow(2).add(&SparsePoly::var(2, 1).pow(2));
        let f = LinFrac::from_poly(p);
        assert_eq!(
            f.inv_linear_product().unwrap_err(),
            AlgebraError::InversionUnsupported
        );
    }

    #[test]
    fn normalize_cancels_difference_of_squares() {
        let p = SparsePoly::var(2, 0).pow(2).sub(&SparsePoly::var(2, 1).pow(2));
        let d = LinearForm::from_ints(&[1, -1]);
        let f = LinFrac::from_poly(p).div_linear(&d);
        assert!(f.denominator().is_empty());
        assert_eq!(
            f.numerator(),
            &SparsePoly::var(2, 0).add(&SparsePoly::var(2, 1))
        );
    }

    #[test]
    fn specialize_and_poles() {
        let f = LinFrac::from_poly(SparsePoly::var(2, 0).add(&SparsePoly::var(2, 1)))
            .div_linear(&u(0));
        let p = Specialization::from_ints(&[1, 2]);
        assert_eq!(f.specialize(&p).unwrap(), rat_int(3));
        let d = LinearForm::from_ints(&[1, -1]);
        let g = LinFrac::inv_linear(&d);
        let q = Specialization::from_ints(&[1, 1]);
        assert_eq!(g.specialize(&q).unwrap_err(), AlgebraError::PoleAtPoint);
        assert_eq!(
            LinFrac::zero(2).specialize(&q).unwrap(),
            Rat::zero()
        );
    }

    #[test]
    fn homogeneous_degree_cases() {
        let f = LinFrac::from_poly(SparsePoly::var(2, 0).add(&SparsePoly::var(2, 1)))
            .div_linear(&u(0))
            .div_linear(&u(0));
        assert_eq!(f.homogeneous_degree().unwrap(), Some(-1));
        let g = LinFrac::from_poly(SparsePoly::var(2, 0).mul(&SparsePoly::var(2, 1)));
        assert_eq!(g.homogeneous_degree().unwrap(), Some(2));
        let h = LinFrac::from_poly(SparsePoly::var(2, 0).add(&SparsePoly::one(2)));
        assert_eq!(h.homogeneous_degree().unwrap(), None);
        assert_eq!(
            LinFrac::zero(2).homogeneous_degree().unwrap_err(),
            AlgebraError::ZeroInput
        );
    }

    #[test]
    fn as_polynomial_cases() {
        let p = SparsePoly::var(2, 0).pow(2).sub(&SparsePoly::var(2, 1).pow(2));
        let d = LinearForm::from_ints(&[1, -1]);
        let f = LinFrac::from_poly(p).div_linear(&d);
        assert!(f.as_polynomial().is_some());
        assert!(LinFrac::inv_linear(&u(0)).as_polynomial().is_none());
        assert_eq!(
            LinFrac::constant(2, rat_int(5)).as_polynomial(),
            Some(SparsePoly::constant(2, rat_int(5)))
        );
    }

    #[test]
    fn map_vars_identity() {
        let d = LinearForm::from_ints(&[1, -1]);
        let f = LinFrac::from_linear(&u(0)).div_linear(&d);
        let id = vec![vec![1, 0], vec![0, 1]];
        assert!(f.map_vars(&id).unwrap().eq_value(&f));
        let collapse = vec![vec![1, 1]];
        assert_eq!(f.map_vars(&collapse).unwrap_err(), AlgebraError::PoleAtPoint);
    }

    #[test]
    fn rational_denominator_scale() {
        // 1/(u1/2) = 2/u1
        let half = u(0).scale(&rat(1, 2));
        let f = LinFrac::inv_linear(&half);
        let expect = LinFrac::constant(2, rat_int(2)).div_linear(&u(0));
        assert_eq!(f, expect);
    }
}
