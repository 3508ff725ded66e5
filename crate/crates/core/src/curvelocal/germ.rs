//! Newton–Puiseux analysis of a plane germ at the origin.
//!
//! The engine works in local coordinates `(u, v)` in which `u` is transverse
//! to every branch: the coefficient of `v^m` in the tangent cone is nonzero.
//! Branches are then grouped into leaves sharing one Newton edge and one
//! irreducible factor of its edge polynomial.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::exactalg::{BiPoly, Field, Rat, Scalars, UniPoly};

use super::tag::{BranchSet, BranchType};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Slope {
    Finite(Rat),
    /// The branch `v = 0` of the current node, exactly.
    Infinite,
}

impl PartialOrd for Slope {
    fn partial_cmp(&self, o: &Slope) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Slope {
    fn cmp(&self, o: &Slope) -> Ordering {
        match (self, o) {
            (Slope::Finite(a), Slope::Finite(b)) => a.cmp(b),
            (Slope::Finite(_), Slope::Infinite) => Ordering::Less,
            (Slope::Infinite, Slope::Finite(_)) => Ordering::Greater,
            (Slope::Infinite, Slope::Infinite) => Ordering::Equal,
        }
    }
}

/// `count` conjugate branches with identical local data.
#[derive(Clone, Debug)]
pub struct Leaf<E> {
    pub count: usize,
    pub branch: BranchType,
    /// Path from the root: slope and group id at each node.
    pub trail: Vec<(Slope, usize)>,
    /// Tangent `v = c u` when it is defined over the working field.
    pub tangent: Option<E>,
}

impl<E> Leaf<E> {
    fn own_slope(&self) -> Rat {
        match &self.trail.last().expect("nonempty trail").0 {
            Slope::Finite(s) => s.clone(),
            Slope::Infinite => unreachable!("an exact branch is always alone in its leaf"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Germ<E> {
    pub order: usize,
    pub leaves: Vec<Leaf<E>>,
}

impl<E: Field> Germ<E> {
    /// Contact order between a branch of leaf `a` and a branch of leaf `b`.
    pub fn leaf_contact(&self, a: usize, b: usize) -> Rat {
        if a == b {
            return self.leaves[a].own_slope();
        }
        let (ta, tb) = (&self.leaves[a].trail, &self.leaves[b].trail);
        for (x, y) in ta.iter().zip(tb) {
            if x.1 != y.1 {
                return match x.0.clone().min(y.0.clone()) {
                    Slope::Finite(s) => s,
                    Slope::Infinite => unreachable!("distinct groups cannot both be exact"),
                };
            }
        }
        unreachable!("distinct leaves share a full trail")
    }

    /// Leaf index of each individual branch.
    pub fn branch_leaves(&self) -> Vec<usize> {
        self.leaves.iter().enumerate().flat_map(|(i, l)| std::iter::repeat_n(i, l.count)).collect()
    }

    pub fn branch_set(&self) -> BranchSet {
        let idx = self.branch_leaves();
        let n = idx.len();
        let mut inter = vec![vec![0u64; n]; n];
        for i in 0..n {
            for j in i + 1..n {
                let (li, lj) = (idx[i], idx[j]);
                let k = self.leaf_contact(li, lj);
                let e = (self.leaves[li].branch.e as i64) * (self.leaves[lj].branch.e as i64);
                let v = (k * Rat::from_int(e)).to_i64().expect("integral intersection number");
                inter[i][j] = v as u64;
                inter[j][i] = v as u64;
            }
        }
        BranchSet { branches: idx.iter().map(|&l| self.leaves[l].branch).collect(), intersections: inter }
    }

    pub fn delta(&self) -> u64 {
        self.branch_set().delta()
    }

    pub fn branch_count(&self) -> usize {
        self.leaves.iter().map(|l| l.count).sum()
    }

    pub fn is_smooth(&self) -> bool {
        self.order == 1
    }
}

/// Lowest total degree of `g`.
pub fn order_at_origin<E: Field>(g: &BiPoly<E>) -> Option<usize> {
    g.terms().map(|((i, j), _)| i + j).min()
}

/// Shear `k` such that `g(u + k v, v)` has a nonzero `v^m` coefficient in
/// its tangent cone, trying `0, 1, -1, 2, -2, ...`.
pub fn transverse_shear<E: Field>(g: &BiPoly<E>) -> Option<i64> {
    let m = order_at_origin(g)?;
    let like = g.sample()?.clone();
    let cone: Vec<(usize, E)> = g.terms().filter(|((i, j), _)| i + j == m).map(|((i, _), c)| (i, c.clone())).collect();
    (0..=2 * m as i64 + 2).map(|s| if s % 2 == 1 { (s + 1) / 2 } else { -s / 2 }).find(|&k| {
        let kk = like.embed(&Rat::from_int(k));
        let val = cone.iter().fold(like.zero_like(), |acc, (i, c)| acc.plus(&c.times(&kk.powu(*i as u64))));
        !val.is_zero()
    })
}

/// Analyze a germ already in transverse position.
pub fn analyze<S: Scalars>(s: &S, g: &BiPoly<S::E>) -> Result<Germ<S::E>> {
    let m = order_at_origin(g).ok_or(Error::ZeroInput("germ"))?;
    if m == 0 {
        return Err(Error::DegenerateInput("the origin is not on the curve".into()));
    }
    let v_order = g.rows().iter().position(|r| r.coeff(0).is_some_and(|c| !c.is_zero()));
    if v_order != Some(m) {
        return Err(Error::DegenerateInput("germ is not in transverse position".into()));
    }
    let mut eng = Engine { s, leaves: Vec::new(), groups: 0 };
    eng.node(g.rows().to_vec(), m, Rat::zero(), Vec::new(), None)?;
    Ok(Germ { order: m, leaves: eng.leaves })
}

struct Engine<'a, S: Scalars> {
    s: &'a S,
    leaves: Vec<Leaf<S::E>>,
    groups: usize,
}

impl<S: Scalars> Engine<'_, S> {
    fn group(&mut self) -> usize {
        self.groups += 1;
        self.groups
    }

    /// `tangent` is `None` at the root and the inherited tangent below it.
    fn node(
        &mut self,
        mut rows: Vec<UniPoly<S::E>>,
        mut r: usize,
        p0: Rat,
        trail: Vec<(Slope, usize)>,
        tangent: Option<Option<S::E>>,
    ) -> Result<()> {
        let zero = self.s.zero();
        if rows.first().is_none_or(|x| x.is_zero()) {
            if rows.get(1).is_none_or(|x| x.is_zero()) {
                return Err(Error::DegenerateInput("curve is not reduced at this point".into()));
            }
            let mut t = trail.clone();
            t.push((Slope::Infinite, self.group()));
            let tan = tangent.clone().unwrap_or_else(|| Some(zero.clone()));
            self.leaves.push(Leaf { count: 1, branch: BranchType::smooth(), trail: t, tangent: tan });
            rows.remove(0);
            r -= 1;
            if r == 0 {
                return Ok(());
            }
        }
        let ord: Vec<Option<usize>> = (0..=r).map(|j| rows.get(j).and_then(|x| x.ord())).collect();
        if ord[r].is_none() {
            return Err(Error::UnsupportedGerm("degenerate Newton polygon".into()));
        }
        let mut cur = 0usize;
        while cur < r {
            let oc = ord[cur].expect("hull vertex") as i64;
            let mut best: Option<(Rat, usize)> = None;
            for j in cur + 1..=r {
                if let Some(oj) = ord[j] {
                    let sl = Rat::new(oc - oj as i64, (j - cur) as i64);
                    if best.as_ref().is_none_or(|(b, _)| sl >= *b) {
                        best = Some((sl, j));
                    }
                }
            }
            let (gamma, nxt) = best.expect("endpoint present");
            if gamma <= p0 {
                return Err(Error::UnsupportedGerm(format!("Newton edge of slope {gamma} not above {p0}")));
            }
            self.edge(&rows, cur, nxt, oc, &gamma, &trail, &tangent)?;
            cur = nxt;
        }
        Ok(())
    }

    #[allow(clippy::too_many_arguments)]
    fn edge(
        &mut self,
        rows: &[UniPoly<S::E>],
        j1: usize,
        j2: usize,
        o1: i64,
        gamma: &Rat,
        trail: &[(Slope, usize)],
        tangent: &Option<Option<S::E>>,
    ) -> Result<()> {
        let big = |_| Error::ResourceBudget("Newton slope out of range".into());
        let a: i64 = gamma.numer().try_into().map_err(big)?;
        let b: i64 = gamma.denom().try_into().map_err(big)?;
        let zero = self.s.zero();
        let steps = (j2 - j1) as i64 / b;
        let psi: Vec<S::E> = (0..=steps)
            .map(|k| {
                let j = j1 + (k * b) as usize;
                let i = o1 - a * k;
                if i < 0 {
                    return zero.clone();
                }
                rows[j].coeff(i as usize).cloned().unwrap_or_else(|| zero.clone())
            })
            .collect();
        let psi = UniPoly::new(psi);
        for (h, mult) in self.s.factor(&psi) {
            let deg = h.degree().expect("nonconstant factor");
            let linear_root = (deg == 1).then(|| h.coeffs()[0].negated());
            let tan = match tangent {
                Some(t) => t.clone(),
                None if gamma.is_one() => linear_root.clone(),
                None => Some(zero.clone()),
            };
            let mut t = trail.to_vec();
            t.push((Slope::Finite(gamma.clone()), self.group()));
            if mult == 1 {
                let branch = if b > 1 { BranchType { e: b as u32, beta: Some(a as u32) } } else { BranchType::smooth() };
                self.leaves.push(Leaf { count: deg, branch, trail: t, tangent: tan });
                continue;
            }
            let c = match (b, linear_root) {
                (1, Some(c)) => c,
                _ => {
                    return Err(Error::UnsupportedGerm(format!(
                        "repeated factor {h} (multiplicity {mult}) on a Newton edge of slope {gamma}"
                    )))
                }
            };
            let child = substitute(rows, &c, a as usize);
            self.node(child, mult, gamma.clone(), t, Some(tan))?;
        }
        Ok(())
    }
}

/// Rows of `G(u, c u^a + v)`.
fn substitute<E: Field>(rows: &[UniPoly<E>], c: &E, a: usize) -> Vec<UniPoly<E>> {
    let shift = UniPoly::monomial(c.clone(), a);
    let mut acc: Vec<UniPoly<E>> = Vec::new();
    for row in rows.iter().rev() {
        // acc <- acc * (v + c u^a) + row
        let mut next: Vec<UniPoly<E>> = vec![UniPoly::zero(); acc.len() + 1];
        for (k, p) in acc.iter().enumerate() {
            next[k + 1] = &next[k + 1] + p;
            next[k] = &next[k] + &(p * &shift);
        }
        next[0] = &next[0] + row;
        acc = next;
    }
    while acc.last().is_some_and(|p| p.is_zero()) {
        acc.pop();
    }
    acc
}
