use serde::{Deserialize, Serialize};

use crate::curvelocal::Component;

use super::invariants::{invariant_values, InvariantValues, SeparationCertificate};
use super::{curves_equal, verify_witness, Witness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PairStatus {
    WitnessedEqual,
    CertifiedDistinct,
    Undecided,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairEntry {
    pub i: usize,
    pub j: usize,
    pub status: PairStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certificate: Option<SeparationCertificate>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RigidityReport {
    pub instances: usize,
    /// Classes of instances joined by verified witnesses, by first member.
    pub classes: Vec<Vec<usize>>,
    pub pairs: Vec<PairEntry>,
    /// Largest number of classes that are pairwise certified distinct.
    pub k_lower_bound: usize,
    pub undecided: usize,
    /// Witnesses that verified and matched two instances.
    pub witnesses_used: Vec<usize>,
    /// Witnesses that failed to verify or did not match the instances.
    pub witnesses_ignored: Vec<usize>,
}

fn find(parent: &mut [usize], i: usize) -> usize {
    let mut r = i;
    while parent[r] != r {
        r = parent[r];
    }
    let mut i = i;
    while parent[i] != r {
        let next = parent[i];
        parent[i] = r;
        i = next;
    }
    r
}

fn union(parent: &mut [usize], a: usize, b: usize) {
    let (a, b) = (find(parent, a), find(parent, b));
    if a != b {
        parent[a.max(b)] = a.min(b);
    }
}

fn max_clique(adj: &[Vec<bool>]) -> usize {
    fn grow(adj: &[Vec<bool>], chosen: &mut Vec<usize>, from: usize, best: &mut usize) {
        *best = (*best).max(chosen.len());
        for v in from..adj.len() {
            if chosen.iter().all(|&u| adj[u][v]) {
                chosen.push(v);
                grow(adj, chosen, v + 1, best);
                chosen.pop();
            }
        }
    }
    let mut best = 0;
    grow(adj, &mut Vec::new(), 0, &mut best);
    best
}

/// Partitions `instances` by the verified witnesses and tries to separate
/// every pair left in different classes.
pub fn rigidity_report(instances: &[Vec<Component>], witnesses: &[Witness]) -> RigidityReport {
    let n = instances.len();
    let mut parent: Vec<usize> = (0..n).collect();
    for i in 0..n {
        for j in 0..i {
            if curves_equal(&instances[i], &instances[j]) {
                union(&mut parent, i, j);
            }
        }
    }
    let (mut used, mut ignored) = (Vec::new(), Vec::new());
    for (w_id, w) in witnesses.iter().enumerate() {
        let src = instances.iter().position(|c| curves_equal(c, &w.source));
        let dst = instances.iter().position(|c| curves_equal(c, &w.target));
        match (src, dst, verify_witness(w)) {
            (Some(a), Some(b), Ok(true)) => {
                union(&mut parent, a, b);
                used.push(w_id);
            }
            _ => ignored.push(w_id),
        }
    }
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut class_of = vec![0; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        match classes.iter().position(|c| c[0] == r) {
            Some(k) => {
                classes[k].push(i);
                class_of[i] = k;
            }
            None => {
                class_of[i] = classes.len();
                classes.push(vec![i]);
            }
        }
    }

    let several = classes.len() > 1;
    let values: Vec<InvariantValues> = std::thread::scope(|s| {
        let handles: Vec<_> = instances
            .iter()
            .map(|c| s.spawn(move || if several { invariant_values(c) } else { InvariantValues::default() }))
            .collect();
        handles.into_iter().map(|h| h.join().expect("invariant thread")).collect()
    });

    let mut pairs = Vec::new();
    let mut distinct = vec![vec![false; classes.len()]; classes.len()];
    for i in 0..n {
        for j in i + 1..n {
            let (a, b) = (class_of[i], class_of[j]);
            let entry = if a == b {
                PairEntry { i, j, status: PairStatus::WitnessedEqual, certificate: None }
            } else {
                match values[i].differences(&values[j]).into_iter().next() {
                    Some(c) => {
                        distinct[a][b] = true;
                        distinct[b][a] = true;
                        PairEntry { i, j, status: PairStatus::CertifiedDistinct, certificate: Some(c) }
                    }
                    None => PairEntry { i, j, status: PairStatus::Undecided, certificate: None },
                }
            };
            pairs.push(entry);
        }
    }
    let undecided = pairs.iter().filter(|p| p.status == PairStatus::Undecided).count();
    RigidityReport {
        instances: n,
        k_lower_bound: max_clique(&distinct).max(n.min(1)),
        classes,
        pairs,
        undecided,
        witnesses_used: used,
        witnesses_ignored: ignored,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curvelocal::ParamCurve;
    use crate::exactalg::Rat;
    use crate::projgeom::ProjMap;

    fn nu3(a: i64) -> Vec<Component> {
        vec![Component::Param(ParamCurve::from_ints([&[0, 0, 0, 0, 1], &[0, 0, 0, 1], &[1, a]]).unwrap())]
    }

    #[test]
    fn nu3_two_classes() {
        let a = Rat::from_int(5);
        let h = ProjMap::diagonal([a.pow(4), a.pow(3), Rat::one()]).unwrap();
        let w = Witness::new(h, nu3(5), nu3(1));
        let r = rigidity_report(&[nu3(0), nu3(1), nu3(5)], &[w]);
        assert_eq!(r.classes, vec![vec![0], vec![1, 2]]);
        assert_eq!((r.k_lower_bound, r.undecided), (2, 0));
    }

    #[test]
    fn singleton() {
        let r = rigidity_report(&[nu3(1)], &[]);
        assert_eq!((r.classes.len(), r.k_lower_bound), (1, 1));
    }

    #[test]
    fn without_the_witness_the_pair_is_undecided() {
        let r = rigidity_report(&[nu3(1), nu3(5)], &[]);
        assert_eq!((r.classes.len(), r.undecided), (2, 1));
        assert_eq!(r.k_lower_bound, 1);
    }
}
