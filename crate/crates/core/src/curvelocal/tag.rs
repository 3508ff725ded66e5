use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exactalg::Rat;

/// Line decorations of a `T(m,n)` germ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Decoration {
    None,
    /// A transverse line, `y (x^m + y^n)`.
    UpperM,
    /// The tangent line, `x (x^m + y^n)`.
    UpperN,
    /// Both lines, `x y (x^m + y^n)`.
    UpperMN,
}

/// Topological type of a singular point from the closed list
/// `T(m,n)`, `T(m,n)^m`, `T(m,n)^n`, `T(m,n)^{m,n}`.
///
/// Ordinary `r`-fold points are `T(r,r)`; `T(2,k+1)` displays as `A{k}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SingTypeTag {
    pub m: u32,
    pub n: u32,
    pub decoration: Decoration,
}

impl SingTypeTag {
    pub fn tmn(m: u32, n: u32) -> SingTypeTag {
        assert!(2 <= m && m <= n, "T({m},{n}) needs 2 <= m <= n");
        SingTypeTag { m, n, decoration: Decoration::None }
    }

    /// `A_k = T(2, k+1)`.
    pub fn a(k: u32) -> SingTypeTag {
        SingTypeTag::tmn(2, k + 1)
    }

    /// Ordinary `r`-fold point, `T(r,r)`.
    pub fn ordinary(r: u32) -> SingTypeTag {
        SingTypeTag::tmn(r, r)
    }

    pub fn decorated(m: u32, n: u32, decoration: Decoration) -> SingTypeTag {
        match decoration {
            Decoration::None => return SingTypeTag::tmn(m, n),
            Decoration::UpperM | Decoration::UpperN => assert!(2 <= m && m < n),
            Decoration::UpperMN => assert!(1 <= m && m < n),
        }
        SingTypeTag { m, n, decoration }
    }

    fn valid(m: u32, n: u32, d: Decoration) -> bool {
        match d {
            Decoration::None => 2 <= m && m <= n,
            Decoration::UpperM | Decoration::UpperN => 2 <= m && m < n,
            Decoration::UpperMN => 1 <= m && m < n,
        }
    }

    pub fn lines(&self) -> u32 {
        match self.decoration {
            Decoration::None => 0,
            Decoration::UpperM | Decoration::UpperN => 1,
            Decoration::UpperMN => 2,
        }
    }

    pub fn delta(&self) -> u64 {
        let (m, n) = (self.m as u64, self.n as u64);
        let base = (m * n + m.gcd(&n) - m - n) / 2;
        base + match self.decoration {
            Decoration::None => 0,
            Decoration::UpperM => m,
            Decoration::UpperN => n,
            Decoration::UpperMN => m + n + 1,
        }
    }

    /// Number of local branches `m_S`.
    pub fn branch_count(&self) -> u32 {
        self.m.gcd(&self.n) + self.lines()
    }

    /// Multiplicity (order) of the germ.
    pub fn multiplicity(&self) -> u32 {
        self.m + self.lines()
    }

    /// Milnor number `2 delta - r + 1`.
    pub fn milnor(&self) -> u64 {
        2 * self.delta() + 1 - self.branch_count() as u64
    }

    /// An ordinary multiple point, also called a simple singularity.
    pub fn is_ordinary(&self) -> bool {
        self.decoration == Decoration::None && self.m == self.n
    }

    /// `Some(k)` for `A_k`.
    pub fn a_index(&self) -> Option<u32> {
        (self.decoration == Decoration::None && self.m == 2).then_some(self.n - 1)
    }
}

/// Closed-form delta invariant of a tag.
pub fn delta_of_type(tag: &SingTypeTag) -> u64 {
    tag.delta()
}

impl fmt::Display for SingTypeTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (m, n) = (self.m, self.n);
        match self.decoration {
            Decoration::None if m == 2 => write!(f, "A{}", n - 1),
            Decoration::None => write!(f, "T({m},{n})"),
            Decoration::UpperM => write!(f, "T({m},{n})^{m}"),
            Decoration::UpperN => write!(f, "T({m},{n})^{n}"),
            Decoration::UpperMN => write!(f, "T({m},{n})^{{{m},{n}}}"),
        }
    }
}

impl FromStr for SingTypeTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<SingTypeTag> {
        let bad = || Error::Parse(format!("malformed singularity tag {s:?}"));
        let num = |x: &str| -> Result<u32> {
            if x.is_empty() || !x.bytes().all(|b| b.is_ascii_digit()) || (x.len() > 1 && x.starts_with('0')) {
                return Err(bad());
            }
            x.parse().map_err(|_| bad())
        };
        if let Some(rest) = s.strip_prefix('A') {
            let k = rest.strip_prefix('_').unwrap_or(rest);
            let k = k.strip_prefix('{').and_then(|x| x.strip_suffix('}')).unwrap_or(k);
            let k = num(k)?;
            if k == 0 || k == u32::MAX {
                return Err(bad());
            }
            return Ok(SingTypeTag::a(k));
        }
        let body = s.strip_prefix("T(").ok_or_else(bad)?;
        let (inner, tail) = body.split_once(')').ok_or_else(bad)?;
        let (m, n) = inner.split_once(',').ok_or_else(bad)?;
        let (m, n) = (num(m)?, num(n)?);
        let decoration = match tail {
            "" => Decoration::None,
            t => {
                let d = t.strip_prefix('^').ok_or_else(bad)?;
                if let Some(pair) = d.strip_prefix('{').and_then(|x| x.strip_suffix('}')) {
                    let (a, b) = pair.split_once(',').ok_or_else(bad)?;
                    if num(a)? != m || num(b)? != n {
                        return Err(bad());
                    }
                    Decoration::UpperMN
                } else {
                    let v = num(d)?;
                    if m == n {
                        return Err(bad());
                    }
                    if v == m {
                        Decoration::UpperM
                    } else if v == n {
                        Decoration::UpperN
                    } else {
                        return Err(bad());
                    }
                }
            }
        };
        if !SingTypeTag::valid(m, n, decoration) {
            return Err(bad());
        }
        Ok(SingTypeTag { m, n, decoration })
    }
}

impl Serialize for SingTypeTag {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for SingTypeTag {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Local branch data for classification: multiplicity `e` and, for singular
/// branches, the characteristic exponent `beta` (so the branch is `T(e,beta)`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BranchType {
    pub e: u32,
    pub beta: Option<u32>,
}

impl BranchType {
    pub fn smooth() -> BranchType {
        BranchType { e: 1, beta: None }
    }

    pub fn is_smooth(&self) -> bool {
        self.e == 1
    }

    pub fn delta(&self) -> u64 {
        match self.beta {
            Some(b) => (self.e as u64 - 1) * (b as u64 - 1) / 2,
            None => 0,
        }
    }
}

/// Branches at one point with their pairwise intersection numbers.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BranchSet {
    pub branches: Vec<BranchType>,
    /// Symmetric; diagonal entries are ignored.
    pub intersections: Vec<Vec<u64>>,
}

impl BranchSet {
    pub fn delta(&self) -> u64 {
        let mut d: u64 = self.branches.iter().map(|b| b.delta()).sum();
        for i in 0..self.branches.len() {
            for j in i + 1..self.branches.len() {
                d += self.intersections[i][j];
            }
        }
        d
    }

    /// Contact order `i / (e_i e_j)` between distinct branches.
    pub fn contact(&self, i: usize, j: usize) -> Rat {
        let e = self.branches[i].e as i64 * self.branches[j].e as i64;
        Rat::new(self.intersections[i][j] as i64, e)
    }

    fn describe(&self) -> String {
        let bs: Vec<String> = self
            .branches
            .iter()
            .map(|b| match b.beta {
                Some(beta) => format!("(e={},beta={})", b.e, beta),
                None => format!("(e={})", b.e),
            })
            .collect();
        format!("branches [{}], intersections {:?}", bs.join(", "), self.intersections)
    }
}

/// `(m, n)` if the given branches form an undecorated `T(m,n)` germ, allowing
/// the degenerate `T(1, n)` only when `allow_single` is set.
fn tmn_of(bs: &BranchSet, idx: &[usize]) -> Option<(u32, u32)> {
    let r = idx.len() as u32;
    if r == 0 {
        return None;
    }
    let first = bs.branches[idx[0]];
    if idx.iter().any(|&i| bs.branches[i] != first) {
        return None;
    }
    match first.beta {
        Some(beta) => {
            let e = first.e;
            if e.gcd(&beta) != 1 {
                return None;
            }
            let k = Rat::new(beta as i64, e as i64);
            for (a, &i) in idx.iter().enumerate() {
                for &j in &idx[a + 1..] {
                    if bs.contact(i, j) != k {
                        return None;
                    }
                }
            }
            Some((r * e, r * beta))
        }
        None => {
            if first.e != 1 || r < 2 {
                return None;
            }
            let k = bs.contact(idx[0], idx[1]);
            if !k.is_integer() {
                return None;
            }
            for (a, &i) in idx.iter().enumerate() {
                for &j in &idx[a + 1..] {
                    if bs.contact(i, j) != k {
                        return None;
                    }
                }
            }
            Some((r, r * k.to_i64()? as u32))
        }
    }
}

/// Classify a germ over the closed list of supported types.
pub fn classify_germ(bs: &BranchSet) -> Result<SingTypeTag> {
    let n = bs.branches.len();
    let all: Vec<usize> = (0..n).collect();
    let unsupported = || Error::UnsupportedGerm(bs.describe());
    if let Some((m, nn)) = tmn_of(bs, &all) {
        return Ok(SingTypeTag::tmn(m, nn));
    }
    let smooth: Vec<usize> = all.iter().copied().filter(|&i| bs.branches[i].is_smooth()).collect();
    // One line added to a T(m,n) germ.
    for &l in &smooth {
        let rest: Vec<usize> = all.iter().copied().filter(|&i| i != l).collect();
        if let Some((m, nn)) = tmn_of(bs, &rest) {
            if m >= nn {
                continue;
            }
            let tangent = Rat::new(nn as i64, m as i64);
            if rest.iter().all(|&b| bs.contact(l, b).is_one()) {
                return Ok(SingTypeTag::decorated(m, nn, Decoration::UpperM));
            }
            if rest.iter().all(|&b| bs.contact(l, b) == tangent) {
                return Ok(SingTypeTag::decorated(m, nn, Decoration::UpperN));
            }
        }
    }
    // Two lines, one tangent and one transverse.
    for (a, &l1) in smooth.iter().enumerate() {
        for &l2 in &smooth[a + 1..] {
            if !bs.contact(l1, l2).is_one() {
                continue;
            }
            let rest: Vec<usize> = all.iter().copied().filter(|&i| i != l1 && i != l2).collect();
            let base = match rest.len() {
                0 => None,
                1 if bs.branches[rest[0]].is_smooth() => {
                    // T(1,n): a smooth branch whose tangent contact is n.
                    let b = rest[0];
                    let c = bs.contact(l1, b).max(bs.contact(l2, b));
                    c.to_i64().filter(|&k| k >= 2).map(|k| (1, k as u32))
                }
                _ => tmn_of(bs, &rest).filter(|(m, nn)| m < nn),
            };
            let Some((m, nn)) = base else { continue };
            let tangent = Rat::new(nn as i64, m as i64);
            for (t, tr) in [(l1, l2), (l2, l1)] {
                if rest.iter().all(|&b| bs.contact(t, b) == tangent) && rest.iter().all(|&b| bs.contact(tr, b).is_one()) {
                    return Ok(SingTypeTag::decorated(m, nn, Decoration::UpperMN));
                }
            }
        }
    }
    Err(unsupported())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(branches: Vec<BranchType>, inter: &[(usize, usize, u64)]) -> BranchSet {
        let n = branches.len();
        let mut m = vec![vec![0; n]; n];
        for &(i, j, v) in inter {
            m[i][j] = v;
            m[j][i] = v;
        }
        BranchSet { branches, intersections: m }
    }

    fn sm() -> BranchType {
        BranchType::smooth()
    }

    #[test]
    fn display_and_parse() {
        let cases = [
            (SingTypeTag::a(3), "A3"),
            (SingTypeTag::tmn(3, 5), "T(3,5)"),
            (SingTypeTag::decorated(3, 4, Decoration::UpperN), "T(3,4)^4"),
            (SingTypeTag::decorated(2, 3, Decoration::UpperM), "T(2,3)^2"),
            (SingTypeTag::decorated(1, 4, Decoration::UpperMN), "T(1,4)^{1,4}"),
        ];
        for (tag, s) in cases {
            assert_eq!(tag.to_string(), s);
            assert_eq!(s.parse::<SingTypeTag>().unwrap(), tag);
        }
        assert_eq!("A_6".parse::<SingTypeTag>().unwrap(), SingTypeTag::a(6));
        for bad in ["A0", "T(3,2)", "T(3,3)^3", "T(2,4)^5", "T(1,4)", "B2", "T(2,4)^{2,5}", "A01"] {
            assert!(bad.parse::<SingTypeTag>().is_err(), "{bad}");
        }
    }

    #[test]
    fn deltas() {
        assert_eq!(SingTypeTag::tmn(3, 5).delta(), 4);
        assert_eq!(SingTypeTag::a(6).delta(), 3);
        assert_eq!(SingTypeTag::ordinary(3).delta(), 3);
        assert_eq!(SingTypeTag::decorated(2, 4, Decoration::UpperM).delta(), 2 + 2);
        assert_eq!(SingTypeTag::decorated(1, 4, Decoration::UpperMN).delta(), 6);
        assert_eq!(SingTypeTag::tmn(3, 4).milnor(), 6);
        assert_eq!(SingTypeTag::a(1).milnor(), 1);
    }

    #[test]
    fn cusp_and_tacnode() {
        let cusp = set(vec![BranchType { e: 2, beta: Some(3) }], &[]);
        assert_eq!(classify_germ(&cusp).unwrap(), SingTypeTag::a(2));
        let tacnode = set(vec![sm(), sm()], &[(0, 1, 2)]);
        assert_eq!(classify_germ(&tacnode).unwrap(), SingTypeTag::a(3));
    }

    #[test]
    fn decorated_forms() {
        // T(3,4) branch plus its tangent line: contact 4/3, intersection 4.
        let b = BranchType { e: 3, beta: Some(4) };
        let with_tangent = set(vec![b, sm()], &[(0, 1, 4)]);
        assert_eq!(classify_germ(&with_tangent).unwrap(), SingTypeTag::decorated(3, 4, Decoration::UpperN));
        let with_transverse = set(vec![b, sm()], &[(0, 1, 3)]);
        assert_eq!(classify_germ(&with_transverse).unwrap(), SingTypeTag::decorated(3, 4, Decoration::UpperM));
        let both = set(vec![b, sm(), sm()], &[(0, 1, 4), (0, 2, 3), (1, 2, 1)]);
        assert_eq!(classify_germ(&both).unwrap(), SingTypeTag::decorated(3, 4, Decoration::UpperMN));
        // A conic with a tangent and a transverse line.
        let t24 = set(vec![sm(), sm(), sm()], &[(0, 1, 2), (0, 2, 1), (1, 2, 1)]);
        assert_eq!(classify_germ(&t24).unwrap(), SingTypeTag::decorated(2, 4, Decoration::UpperM));
    }

    #[test]
    fn multi_branch_tmn() {
        // Two cusps with contact 3/2 form T(4,6).
        let b = BranchType { e: 2, beta: Some(3) };
        let s = set(vec![b, b], &[(0, 1, 6)]);
        assert_eq!(classify_germ(&s).unwrap(), SingTypeTag::tmn(4, 6));
        assert_eq!(s.delta(), SingTypeTag::tmn(4, 6).delta());
        let triple = set(vec![sm(), sm(), sm()], &[(0, 1, 1), (0, 2, 1), (1, 2, 1)]);
        assert_eq!(classify_germ(&triple).unwrap(), SingTypeTag::ordinary(3));
    }

    #[test]
    fn unsupported_is_an_error() {
        // Two branches with contact 3, tangent line contact 2 with both.
        let s = set(vec![sm(), sm(), sm()], &[(0, 1, 3), (0, 2, 2), (1, 2, 2)]);
        assert!(matches!(classify_germ(&s), Err(Error::UnsupportedGerm(_))));
    }
}
