//! Tits' geometric representation over `Z[√2]`, which is faithful and covers
//! the labels 2, 3, 4 and ∞.

use davis_core::coxeter::{CoxeterSystem, Label};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Zr2(i64, i64);

impl Zr2 {
    fn add(self, o: Zr2) -> Zr2 {
        Zr2(self.0 + o.0, self.1 + o.1)
    }
    fn mul(self, o: Zr2) -> Zr2 {
        Zr2(self.0 * o.0 + 2 * self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
}

pub type Matrix = Vec<Vec<Zr2>>;

fn reflection(sys: &CoxeterSystem, s: usize) -> Matrix {
    let n = sys.rank();
    // 2B(e_s, e_t) = -2cos(π/m)
    let two_b = |t: usize| match sys.label(s, t) {
        Label::Finite(1) => Zr2(2, 0),
        Label::Finite(2) => Zr2(0, 0),
        Label::Finite(3) => Zr2(-1, 0),
        Label::Finite(4) => Zr2(0, -1),
        Label::Infinite => Zr2(-2, 0),
        Label::Finite(m) => panic!("label {m} is outside Z[√2]"),
    };
    let mut m = vec![vec![Zr2(0, 0); n]; n];
    for t in 0..n {
        m[t][t] = Zr2(1, 0);
        // σ_s(e_t) = e_t - 2B(e_s, e_t) e_s
        let c = two_b(t);
        m[s][t] = m[s][t].add(Zr2(-c.0, -c.1));
    }
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| (0..n).fold(Zr2(0, 0), |acc, k| acc.add(a[i][k].mul(b[k][j]))))
                .collect()
        })
        .collect()
}

pub fn represent(sys: &CoxeterSystem, word: &[usize]) -> Matrix {
    let n = sys.rank();
    let id: Matrix = (0..n).map(|i| (0..n).map(|j| Zr2((i == j) as i64, 0)).collect()).collect();
    word.iter().fold(id, |acc, &s| mat_mul(&acc, &reflection(sys, s)))
}
