//! Finite-type recognition by Coxeter diagram classification.

use std::fmt;

use serde::Serialize;

use super::system::{CoxeterSystem, GenSet, Label};

/// Irreducible finite Coxeter types.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum FiniteType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    I2(u32),
}

impl FiniteType {
    pub fn rank(self) -> usize {
        match self {
            FiniteType::A(n) | FiniteType::B(n) | FiniteType::D(n) | FiniteType::E(n) => n,
            FiniteType::H(n) => n,
            FiniteType::F4 => 4,
            FiniteType::I2(_) => 2,
        }
    }

    pub fn order(self) -> u128 {
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        match self {
            FiniteType::A(n) => fact(n + 1),
            FiniteType::B(n) => (1u128 << n) * fact(n),
            FiniteType::D(n) => (1u128 << (n - 1)) * fact(n),
            FiniteType::E(6) => 51_840,
            FiniteType::E(7) => 2_903_040,
            FiniteType::E(8) => 696_729_600,
            FiniteType::E(n) => unreachable!("E{n} is not a finite type"),
            FiniteType::F4 => 1152,
            FiniteType::H(3) => 120,
            FiniteType::H(4) => 14_400,
            FiniteType::H(n) => unreachable!("H{n} is not a finite type"),
            FiniteType::I2(m) => 2 * m as u128,
        }
    }
}

impl fmt::Display for FiniteType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FiniteType::A(n) => write!(f, "A{n}"),
            FiniteType::B(n) => write!(f, "B{n}"),
            FiniteType::D(n) => write!(f, "D{n}"),
            FiniteType::E(n) => write!(f, "E{n}"),
            FiniteType::F4 => write!(f, "F4"),
            FiniteType::H(n) => write!(f, "H{n}"),
            FiniteType::I2(m) => write!(f, "I2({m})"),
        }
    }
}

/// One connected component of the diagram of a spherical subset.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Component {
    pub ty: FiniteType,
    pub members: Vec<usize>,
}

/// A spherical subset together with its per-component classification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphericalSubset {
    pub members: GenSet,
    pub components: Vec<Component>,
}

impl SphericalSubset {
    pub fn order(&self) -> u128 {
        spherical_order(self)
    }

    pub fn type_string(&self) -> String {
        if self.components.is_empty() {
            return "trivial".into();
        }
        self.components.iter().map(|c| c.ty.to_string()).collect::<Vec<_>>().join(" x ")
    }
}

/// Order of `W_T`: product of the classified component orders.
pub fn spherical_order(t: &SphericalSubset) -> u128 {
    t.components.iter().map(|c| c.ty.order()).product()
}

/// Classifies the diagram of `T`; `None` if some component is of infinite type.
pub fn is_spherical(sys: &CoxeterSystem, t: GenSet) -> Option<SphericalSubset> {
    let mut components = Vec::new();
    let mut left = t;
    while let Some(start) = left.iter().next() {
        // component of `start` in the diagram (edges: label >= 3 or infinite)
        let mut comp = GenSet::singleton(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for v in left.iter() {
                if !comp.contains(v) && sys.label(u, v) != Label::Finite(2) {
                    comp = comp.with(v);
                    stack.push(v);
                }
            }
        }
        left = GenSet(left.0 & !comp.0);
        let ty = classify(sys, &comp.iter().collect::<Vec<_>>())?;
        components.push(Component { ty, members: comp.iter().collect() });
    }
    Some(SphericalSubset { members: t, components })
}

/// Classifies a connected diagram.
fn classify(sys: &CoxeterSystem, nodes: &[usize]) -> Option<FiniteType> {
    let n = nodes.len();
    if n == 1 {
        return Some(FiniteType::A(1));
    }
    let mut edges = Vec::new();
    for (i, &u) in nodes.iter().enumerate() {
        for (j, &v) in nodes.iter().enumerate().skip(i + 1) {
            match sys.label(u, v) {
                Label::Finite(2) => {}
                Label::Finite(m) => edges.push((i, j, m)),
                Label::Infinite => return None,
            }
        }
    }
    if n == 2 {
        return Some(FiniteType::I2(edges[0].2));
    }
    if edges.len() != n - 1 {
        return None; // connected with a cycle
    }
    let mut adj = vec![Vec::new(); n];
    for &(i, j, _) in &edges {
        adj[i].push(j);
        adj[j].push(i);
    }
    let heavy: Vec<_> = edges.iter().filter(|e| e.2 != 3).collect();
    let branch: Vec<usize> = (0..n).filter(|&v| adj[v].len() >= 3).collect();

    if heavy.is_empty() {
        if branch.is_empty() {
            return Some(FiniteType::A(n));
        }
        if branch.len() > 1 || adj[branch[0]].len() > 3 {
            return None;
        }
        let c = branch[0];
        let mut arms: Vec<usize> = adj[c].iter().map(|&nb| arm_length(&adj, c, nb)).collect();
        arms.sort_unstable();
        return match arms.as_slice() {
            [1, 1, k] => Some(FiniteType::D(k + 3)),
            [1, 2, 2] => Some(FiniteType::E(6)),
            [1, 2, 3] => Some(FiniteType::E(7)),
            [1, 2, 4] => Some(FiniteType::E(8)),
            _ => None,
        };
    }
    if heavy.len() > 1 || !branch.is_empty() {
        return None;
    }
    let (i, j, m) = *heavy[0];
    let at_end = adj[i].len() == 1 || adj[j].len() == 1;
    match m {
        4 if at_end => Some(FiniteType::B(n)),
        4 if n == 4 => Some(FiniteType::F4),
        5 if at_end && (n == 3 || n == 4) => Some(FiniteType::H(n)),
        _ => None,
    }
}

/// Number of nodes on the arm leaving `center` through `first` (diagram is a tree).
fn arm_length(adj: &[Vec<usize>], center: usize, first: usize) -> usize {
    let (mut prev, mut cur, mut len) = (center, first, 1);
    loop {
        let next: Vec<usize> = adj[cur].iter().copied().filter(|&x| x != prev).collect();
        match next.as_slice() {
            [] => return len,
            [x] => {
                prev = cur;
                cur = *x;
                len += 1;
            }
            _ => return usize::MAX, // second branch point
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[u32]) -> CoxeterSystem {
        let names: Vec<String> = (0..=labels.len()).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let entries: Vec<(&str, &str, Label)> = labels
            .iter()
            .enumerate()
            .map(|(i, &m)| (refs[i], refs[i + 1], Label::Finite(m)))
            .collect();
        CoxeterSystem::from_entries(&refs, Label::Finite(2), &entries).unwrap()
    }

    fn ty(sys: &CoxeterSystem) -> Option<String> {
        is_spherical(sys, sys.all()).map(|s| s.type_string())
    }

    #[test]
    fn paths() {
        assert_eq!(ty(&path(&[3, 3])).as_deref(), Some("A3"));
        assert_eq!(ty(&path(&[4, 3])).as_deref(), Some("B3"));
        assert_eq!(ty(&path(&[3, 4])).as_deref(), Some("B3"));
        assert_eq!(ty(&path(&[3, 4, 3])).as_deref(), Some("F4"));
        assert_eq!(ty(&path(&[5, 3, 3])).as_deref(), Some("H4"));
        assert_eq!(ty(&path(&[3, 5])).as_deref(), Some("H3"));
        assert_eq!(ty(&path(&[4, 4])), None);
        assert_eq!(ty(&path(&[3, 6])), None);
        assert_eq!(ty(&path(&[3, 5, 3])), None);
        assert_eq!(ty(&path(&[3, 3, 4, 3])), None);
        assert_eq!(ty(&path(&[7])).as_deref(), Some("I2(7)"));
    }

    #[test]
    fn branched() {
        let d4 = CoxeterSystem::from_entries(
            &["c", "a", "b", "d"],
            Label::Finite(2),
            &[("c", "a", Label::Finite(3)), ("c", "b", Label::Finite(3)), ("c", "d", Label::Finite(3))],
        )
        .unwrap();
        let s = is_spherical(&d4, d4.all()).unwrap();
        assert_eq!(s.type_string(), "D4");
        assert_eq!(s.order(), 192);

        let e6 = CoxeterSystem::from_entries(
            &["c", "a", "b1", "b2", "d1", "d2"],
            Label::Finite(2),
            &[
                ("c", "a", Label::Finite(3)),
                ("c", "b1", Label::Finite(3)),
                ("b1", "b2", Label::Finite(3)),
                ("c", "d1", Label::Finite(3)),
                ("d1", "d2", Label::Finite(3)),
            ],
        )
        .unwrap();
        assert_eq!(ty(&e6).as_deref(), Some("E6"));
    }

    #[test]
    fn triangle_is_affine_or_worse() {
        let sys = CoxeterSystem::from_entries(
            &["a", "b", "c"],
            Label::Finite(3),
            &[],
        )
        .unwrap();
        assert_eq!(ty(&sys), None);
    }

    #[test]
    fn orders() {
        assert_eq!(FiniteType::I2(4).order(), 8);
        assert_eq!(FiniteType::B(3).order(), 48);
        assert_eq!(FiniteType::D(4).order(), 192);
        assert_eq!(FiniteType::A(3).order(), 24);
        let sys = path(&[3]);
        assert_eq!(is_spherical(&sys, GenSet::EMPTY).unwrap().order(), 1);
    }

    #[test]
    fn reducible_and_infinite() {
        let sys = CoxeterSystem::from_entries(
            &["a", "b", "c"],
            Label::Finite(2),
            &[("a", "b", Label::Infinite)],
        )
        .unwrap();
        assert!(is_spherical(&sys, GenSet::from_iter([0, 1])).is_none());
        let ac = is_spherical(&sys, GenSet::from_iter([0, 2])).unwrap();
        assert_eq!(ac.components.len(), 2);
        assert_eq!(ac.order(), 4);
    }
}
