//! Exact integer polynomials in one variable `t`, dense by ascending degree.

use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Poly(Vec<i128>);

/// `C(n, k)`, zero when either argument is negative or `k > n`.
pub fn binomial(n: i64, k: i64) -> i128 {
    if n < 0 || k < 0 || k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i128 = 1;
    for step in 0..k {
        acc = acc * (n - step) as i128 / (step + 1) as i128;
    }
    acc
}

impl Poly {
    pub fn zero() -> Self {
        Poly(Vec::new())
    }

    /// `c * t^deg`.
    pub fn monomial(c: i128, deg: usize) -> Self {
        let mut v = vec![0; deg + 1];
        v[deg] = c;
        Poly(v).trimmed()
    }

    /// `(1 - t)^e`.
    pub fn one_minus_t_pow(e: usize) -> Self {
        Poly(
            (0..=e)
                .map(|k| {
                    let c = binomial(e as i64, k as i64);
                    if k % 2 == 0 { c } else { -c }
                })
                .collect(),
        )
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.0
    }

    pub fn coeff(&self, deg: usize) -> i128 {
        self.0.get(deg).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| *c == 0)
    }

    fn trimmed(mut self) -> Self {
        while self.0.last() == Some(&0) {
            self.0.pop();
        }
        self
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.0.len().max(other.0.len());
        Poly((0..len).map(|k| self.coeff(k) + other.coeff(k)).collect()).trimmed()
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![0i128; self.0.len() + other.0.len() - 1];
        for (a, &x) in self.0.iter().enumerate() {
            for (b, &y) in other.0.iter().enumerate() {
                out[a + b] += x * y;
            }
        }
        Poly(out).trimmed()
    }

    /// Division by `(1 - t)`, if exact.
    pub fn div_one_minus_t(&self) -> Option<Poly> {
        // p(t) = (1 - t) q(t)  <=>  q_k = p_0 + ... + p_k and the total sum vanishes
        if self.0.iter().sum::<i128>() != 0 {
            return None;
        }
        let mut acc = 0;
        let q: Vec<i128> = self.0.iter().map(|c| {
            acc += c;
            acc
        }).collect();
        Some(Poly(q).trimmed())
    }

    /// Multiplicity of `t = 1` as a root; `None` for the zero polynomial.
    pub fn order_at_one(&self) -> Option<usize> {
        if self.is_zero() {
            return None;
        }
        let mut cur = self.clone();
        let mut order = 0;
        while let Some(q) = cur.div_one_minus_t() {
            cur = q;
            order += 1;
        }
        Some(order)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, c)| **c != 0)
            .map(|(k, c)| match k {
                0 => format!("{c}"),
                1 => format!("{c}t"),
                _ => format!("{c}t^{k}"),
            })
            .collect();
        if terms.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", terms.join(" + "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(6, 3), 20);
        assert_eq!(binomial(0, 0), 1);
        assert_eq!(binomial(3, 4), 0);
        assert_eq!(binomial(-1, 0), 0);
        assert_eq!(binomial(32, 16), 601_080_390);
    }

    #[test]
    fn one_minus_t() {
        assert_eq!(Poly::one_minus_t_pow(3).coeffs(), &[1, -3, 3, -1]);
        let p = Poly::one_minus_t_pow(4).mul(&Poly::monomial(5, 2));
        assert_eq!(p.order_at_one(), Some(4));
        assert_eq!(Poly::monomial(1, 0).order_at_one(), Some(0));
        assert_eq!(Poly::zero().order_at_one(), None);
    }
}
