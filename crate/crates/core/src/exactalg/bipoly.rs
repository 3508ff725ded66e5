use std::fmt;

use super::field::Field;
use super::poly::UniPoly;
use super::rat::Rat;

/// Dense bivariate polynomial `sum_j row_j(x) y^j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BiPoly<F> {
    rows: Vec<UniPoly<F>>,
}

impl<F: Field> BiPoly<F> {
    pub fn new(mut rows: Vec<UniPoly<F>>) -> Self {
        while rows.last().is_some_and(|r| r.is_zero()) {
            rows.pop();
        }
        BiPoly { rows }
    }

    pub fn zero() -> Self {
        BiPoly { rows: Vec::new() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ((usize, usize), F)>) -> Self {
        let mut dense: Vec<Vec<F>> = Vec::new();
        let mut like: Option<F> = None;
        let terms: Vec<_> = terms.into_iter().collect();
        for (_, c) in &terms {
            like.get_or_insert_with(|| c.zero_like());
        }
        let z = match like {
            Some(z) => z,
            None => return BiPoly::zero(),
        };
        for ((i, j), c) in terms {
            if dense.len() <= j {
                dense.resize(j + 1, Vec::new());
            }
            if dense[j].len() <= i {
                dense[j].resize(i + 1, z.clone());
            }
            dense[j][i] = dense[j][i].plus(&c);
        }
        BiPoly::new(dense.into_iter().map(UniPoly::new).collect())
    }

    pub fn rows(&self) -> &[UniPoly<F>] {
        &self.rows
    }

    pub fn row(&self, j: usize) -> UniPoly<F> {
        self.rows.get(j).cloned().unwrap_or_else(UniPoly::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn sample(&self) -> Option<&F> {
        self.rows.iter().find_map(|r| r.sample())
    }

    pub fn deg_y(&self) -> i64 {
        self.rows.len() as i64 - 1
    }

    pub fn deg_x(&self) -> i64 {
        self.rows.iter().map(|r| r.deg()).max().unwrap_or(-1)
    }

    pub fn total_degree(&self) -> i64 {
        self.rows.iter().enumerate().filter(|(_, r)| !r.is_zero()).map(|(j, r)| r.deg() + j as i64).max().unwrap_or(-1)
    }

    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize), &F)> {
        self.rows.iter().enumerate().flat_map(|(j, r)| {
            r.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| ((i, j), c))
        })
    }

    pub fn coeff(&self, i: usize, j: usize) -> Option<&F> {
        self.rows.get(j).and_then(|r| r.coeff(i))
    }

    pub fn eval(&self, x: &F, y: &F) -> F {
        let mut acc = x.zero_like();
        for r in self.rows.iter().rev() {
            acc = acc.times(y).plus(&r.eval(x));
        }
        acc
    }

    /// `f(x0, y)` as a polynomial in `y`.
    pub fn eval_x(&self, x: &F) -> UniPoly<F> {
        UniPoly::new(self.rows.iter().map(|r| r.eval(x)).collect())
    }

    /// `f(x, y0)` as a polynomial in `x`.
    pub fn eval_y(&self, y: &F) -> UniPoly<F> {
        let mut acc = UniPoly::zero();
        for r in self.rows.iter().rev() {
            acc = &acc.scale(y) + r;
        }
        acc
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.rows.len().max(o.rows.len());
        BiPoly::new((0..n).map(|j| &self.row(j) + &o.row(j)).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.rows.len().max(o.rows.len());
        BiPoly::new((0..n).map(|j| &self.row(j) - &o.row(j)).collect())
    }

    pub fn scale(&self, c: &F) -> Self {
        BiPoly::new(self.rows.iter().map(|r| r.scale(c)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return BiPoly::zero();
        }
        let mut rows = vec![UniPoly::zero(); self.rows.len() + o.rows.len() - 1];
        for (i, a) in self.rows.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.rows.iter().enumerate() {
                rows[i + j] = &rows[i + j] + &(a * b);
            }
        }
        BiPoly::new(rows)
    }

    pub fn partial_x(&self) -> Self {
        BiPoly::new(self.rows.iter().map(|r| r.derivative()).collect())
    }

    pub fn partial_y(&self) -> Self {
        BiPoly::new(self.rows.iter().enumerate().skip(1).map(|(j, r)| r.map(|c| c.mul_int(j as i64))).collect())
    }

    /// `f(x + a, y + b)`.
    pub fn shift(&self, a: &F, b: &F) -> Self {
        let rows: Vec<UniPoly<F>> = self.rows.iter().map(|r| r.taylor_shift(a)).collect();
        // Shift in y by Taylor-shifting each column.
        let w = rows.iter().map(|r| r.coeffs().len()).max().unwrap_or(0);
        let mut cols: Vec<UniPoly<F>> = Vec::with_capacity(w);
        for i in 0..w {
            let col: Vec<F> = rows.iter().map(|r| r.coeff(i).cloned().unwrap_or_else(|| a.zero_like())).collect();
            cols.push(UniPoly::new(col).taylor_shift(b));
        }
        transpose(&cols, a)
    }

    pub fn swap(&self) -> Self {
        match self.sample() {
            Some(c) => transpose(&self.rows, &c.clone()),
            None => BiPoly::zero(),
        }
    }

    /// `f(u + k v, v)`, returned with `u` as the row variable and `v` as the column one.
    pub fn shear_x(&self, k: &F) -> Self {
        if k.is_zero() {
            return self.clone();
        }
        let z = match self.sample() {
            Some(c) => c.zero_like(),
            None => return BiPoly::zero(),
        };
        let mut out: Vec<Vec<F>> = Vec::new();
        let mut put = |i: usize, j: usize, c: F| {
            if out.len() <= j {
                out.resize(j + 1, Vec::new());
            }
            if out[j].len() <= i {
                out[j].resize(i + 1, z.clone());
            }
            out[j][i] = out[j][i].plus(&c);
        };
        for ((i, j), c) in self.terms() {
            // (u + k v)^i v^j = sum_l C(i,l) k^l u^(i-l) v^(j+l)
            let mut kp = c.one_like();
            for l in 0..=i {
                let b = c.embed(&Rat::binomial(i as i64, l as i64));
                put(i - l, j + l, c.times(&b).times(&kp));
                kp = kp.times(k);
            }
        }
        BiPoly::new(out.into_iter().map(UniPoly::new).collect())
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> BiPoly<G> {
        BiPoly::new(self.rows.iter().map(|r| r.map(&f)).collect())
    }
}

fn transpose<F: Field>(cols: &[UniPoly<F>], like: &F) -> BiPoly<F> {
    let h = cols.iter().map(|c| c.coeffs().len()).max().unwrap_or(0);
    let mut rows = Vec::with_capacity(h);
    for j in 0..h {
        rows.push(UniPoly::new(cols.iter().map(|c| c.coeff(j).cloned().unwrap_or_else(|| like.zero_like())).collect()));
    }
    BiPoly::new(rows)
}

impl<F: Field> fmt::Display for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (j, r) in self.rows.iter().enumerate().rev() {
            if r.is_zero() {
                continue;
            }
            let inner = {
                struct X<'a, F>(&'a UniPoly<F>);
                impl<F: Field> fmt::Display for X<'_, F> {
                    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                        self.0.fmt_var(f, "x")
                    }
                }
                X(r).to_string()
            };
            parts.push(match j {
                0 => format!("({inner})"),
                1 => format!("({inner})*y"),
                _ => format!("({inner})*y^{j}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl<F: Field> fmt::Debug for BiPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> BiPoly<Rat> {
        // x^2 - y^3 + 2xy
        BiPoly::from_terms([((2, 0), Rat::one()), ((0, 3), Rat::from_int(-1)), ((1, 1), Rat::from_int(2))])
    }

    #[test]
    fn shift_matches_evaluation() {
        let f = sample();
        let (a, b) = (Rat::from_int(2), Rat::new(-1, 2));
        let g = f.shift(&a, &b);
        let (x, y) = (Rat::new(3, 5), Rat::from_int(7));
        assert_eq!(g.eval(&x, &y), f.eval(&(&x + &a), &(&y + &b)));
    }

    #[test]
    fn shear_matches_evaluation() {
        let f = sample();
        let k = Rat::from_int(3);
        let g = f.shear_x(&k);
        let (u, v) = (Rat::new(1, 3), Rat::from_int(-2));
        assert_eq!(g.eval(&u, &v), f.eval(&(&u + &(&k * &v)), &v));
    }

    #[test]
    fn partials_and_swap() {
        let f = sample();
        assert_eq!(f.partial_x(), BiPoly::from_terms([((1, 0), Rat::from_int(2)), ((0, 1), Rat::from_int(2))]));
        assert_eq!(f.partial_y(), BiPoly::from_terms([((0, 2), Rat::from_int(-3)), ((1, 0), Rat::from_int(2))]));
        assert_eq!(f.swap().swap(), f);
        assert_eq!(f.total_degree(), 3);
    }
}
