//! Residue bookkeeping for the pairs of lines `z2 + e^{m} z3 = 0`, `e^n = -1`.

use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RigitAnalysis {
    pub equivalent: bool,
    pub orbit_count: usize,
}

fn admissible(n: u64, (a, b): (u64, u64)) -> Result<(u64, u64)> {
    let (a, b) = (a % n, b % n);
    if a == b {
        return Err(Error::BadResidues(format!("m1 = m2 = {a} mod {n}")));
    }
    Ok((a, b))
}

/// `m1 - m2 = +-(m1' - m2') (mod n)`: the pairs differ by `m -> +-m + s`,
/// which is how scaling by `n`-th roots of unity and swapping `z2, z3` act
/// on the exponents.
pub fn rigit_equivalent(n: u64, p: (u64, u64), q: (u64, u64)) -> Result<bool> {
    if n < 3 || n % 2 == 0 {
        return Err(Error::BadParams(format!("n must be odd and at least 3, got {n}")));
    }
    let (a, b) = admissible(n, p)?;
    let (c, d) = admissible(n, q)?;
    let u = (a + n - b) % n;
    let v = (c + n - d) % n;
    Ok(u == v || u == (n - v) % n)
}

/// All unordered admissible residue pairs mod `n`.
pub fn rigit_pairs(n: u64) -> Vec<(u64, u64)> {
    (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect()
}

/// Classes of unordered admissible pairs under the relation, by brute force.
pub fn rigit_classes(n: u64) -> Result<Vec<Vec<(u64, u64)>>> {
    let mut classes: Vec<Vec<(u64, u64)>> = Vec::new();
    for p in rigit_pairs(n) {
        let mut home = None;
        for (i, c) in classes.iter().enumerate() {
            if rigit_equivalent(n, p, c[0])? {
                home = Some(i);
                break;
            }
        }
        match home {
            Some(i) => classes[i].push(p),
            None => classes.push(vec![p]),
        }
    }
    Ok(classes)
}

pub fn rigit_orbit_analysis(n: u64, p: (u64, u64), q: (u64, u64)) -> Result<RigitAnalysis> {
    Ok(RigitAnalysis { equivalent: rigit_equivalent(n, p, q)?, orbit_count: rigit_classes(n)?.len() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        for (n, k) in [(3, 1), (5, 2), (7, 3), (9, 4)] {
            assert_eq!(rigit_classes(n).unwrap().len(), k);
        }
    }

    #[test]
    fn n5_example() {
        let r = rigit_orbit_analysis(5, (0, 1), (2, 3)).unwrap();
        assert!(r.equivalent);
        assert_eq!(r.orbit_count, 2);
        assert!(!rigit_orbit_analysis(5, (0, 1), (0, 2)).unwrap().equivalent);
    }

    #[test]
    fn is_an_equivalence_relation() {
        for n in [3u64, 5, 7, 9] {
            let ps = rigit_pairs(n);
            let eq = |p, q| rigit_equivalent(n, p, q).unwrap();
            for &p in &ps {
                assert!(eq(p, p));
                assert!(eq(p, (p.1, p.0)));
                for &q in &ps {
                    assert_eq!(eq(p, q), eq(q, p));
                    for &r in &ps {
                        assert!(!(eq(p, q) && eq(q, r)) || eq(p, r));
                    }
                }
            }
        }
    }

    #[test]
    fn bad_input() {
        assert!(matches!(rigit_equivalent(5, (1, 6), (0, 1)), Err(Error::BadResidues(_))));
        assert!(rigit_equivalent(4, (0, 1), (0, 2)).is_err());
    }
}
