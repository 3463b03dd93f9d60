//! Iterated wreath products `H_n = C_{q_1} ≀ ⋯ ≀ C_{q_{n-1}}` and their action
//! on the chambers of `Y_n`.

use std::collections::HashMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::coxeter::FiniteGroupTable;
use crate::davis::ChamberId;
use crate::error::{Error, Result};
use crate::nerve::{LabelAut, Witness};

/// An element of `H_m`: trivial at `m = 1`, otherwise `q_{m-1}` children in
/// `H_{m-1}` and a cyclic shift. `(c, r)` first rotates the subcomplexes by `r`
/// and then applies child `j` inside subcomplex `j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WreathElement {
    Trivial,
    Node { children: Vec<WreathElement>, shift: usize },
}

/// `H_n` for the orders `q_i` and automorphisms `α_i` of a witness.
#[derive(Debug, Clone)]
pub struct WreathGroup {
    pub n: usize,
    /// `qs[i - 1] = q_i` for `1 ≤ i < n`
    pub qs: Vec<usize>,
    alphas: Vec<LabelAut>,
    rank: usize,
    pub order: BigUint,
}

/// `|H_n| = q_1^{q_2⋯q_{n-1}} q_2^{q_3⋯q_{n-1}} ⋯ q_{n-1}` for `qs = (q_1, …, q_{n-1})`.
pub fn wreath_order(qs: &[usize]) -> BigUint {
    let mut total = BigUint::one();
    for i in 0..qs.len() {
        let exponent = qs[i + 1..].iter().fold(BigUint::one(), |e, &q| e * q);
        total *= Pow::pow(BigUint::from(qs[i]), exponent);
    }
    total
}

/// `|H_n| = |H_{n-1}|^{q_{n-1}} · q_{n-1}` with `|H_1| = 1`.
pub fn wreath_order_recursive(qs: &[usize]) -> BigUint {
    qs.iter().fold(BigUint::one(), |h, &q| Pow::pow(h, q) * q)
}

pub fn wreath_group(wit: &Witness, n: usize) -> WreathGroup {
    let n = n.max(1);
    let qs: Vec<usize> = (1..n).map(|i| wit.q(i)).collect();
    let alphas = (1..n).map(|i| wit.alpha(i).clone()).collect();
    WreathGroup { order: wreath_order(&qs), n, qs, alphas, rank: wit.alpha1.perm.len() }
}

impl WreathGroup {
    fn q(&self, i: usize) -> usize {
        self.qs[i - 1]
    }

    fn alpha(&self, i: usize) -> &LabelAut {
        &self.alphas[i - 1]
    }

    pub fn identity_at(&self, m: usize) -> WreathElement {
        if m <= 1 {
            WreathElement::Trivial
        } else {
            WreathElement::Node { children: vec![self.identity_at(m - 1); self.q(m - 1)], shift: 0 }
        }
    }

    pub fn identity(&self) -> WreathElement {
        self.identity_at(self.n)
    }

    /// `(c, r)(c', r') = ((c_j c'_{j-r})_j, r + r')`.
    pub fn mul(&self, a: &WreathElement, b: &WreathElement) -> WreathElement {
        match (a, b) {
            (WreathElement::Node { children: c, shift: r }, WreathElement::Node { children: c2, shift: r2 }) => {
                let q = c.len();
                let children = (0..q).map(|j| self.mul(&c[j], &c2[(j + q - r) % q])).collect();
                WreathElement::Node { children, shift: (r + r2) % q }
            }
            _ => WreathElement::Trivial,
        }
    }

    /// The shift `a_{n-1}` and, inside child 0, the generators of `H_{n-1}`.
    pub fn generators(&self) -> Vec<WreathElement> {
        self.generators_at(self.n)
    }

    fn generators_at(&self, m: usize) -> Vec<WreathElement> {
        if m <= 1 {
            return Vec::new();
        }
        let q = self.q(m - 1);
        let mut gens = vec![WreathElement::Node { children: vec![self.identity_at(m - 1); q], shift: 1 }];
        for g in self.generators_at(m - 1) {
            let mut children = vec![self.identity_at(m - 1); q];
            children[0] = g;
            gens.push(WreathElement::Node { children, shift: 0 });
        }
        gens
    }

    /// Every element, breadth first from the identity, if `|H_n| ≤ bound`.
    pub fn elements(&self, bound: u64) -> Result<Vec<WreathElement>> {
        if self.order > BigUint::from(bound) {
            return Err(Error::Resource(format!("|H_{}| = {} exceeds the element bound {bound}", self.n, self.order)));
        }
        let gens = self.generators();
        let mut seen: HashMap<WreathElement, usize> = HashMap::new();
        let mut out = vec![self.identity()];
        seen.insert(self.identity(), 0);
        let mut head = 0;
        while head < out.len() {
            for g in &gens {
                let h = self.mul(&out[head], g);
                if !seen.contains_key(&h) {
                    seen.insert(h.clone(), out.len());
                    out.push(h);
                }
            }
            head += 1;
        }
        Ok(out)
    }

    /// `H_n` as a table together with the element behind each table index.
    pub fn table(&self, bound: usize) -> Result<(Arc<FiniteGroupTable>, Vec<WreathElement>)> {
        let elems = self.elements(bound as u64)?;
        let index: HashMap<&WreathElement, u32> = elems.iter().enumerate().map(|(i, e)| (e, i as u32)).collect();
        let mult: Vec<Vec<u32>> =
            elems.iter().map(|a| elems.iter().map(|b| index[&self.mul(a, b)]).collect()).collect();
        let gens: Vec<u32> = self.generators().iter().map(|g| index[g]).collect();
        let labels = (0..gens.len()).collect();
        let (table, to_new) = FiniteGroupTable::from_mult(&mult, &gens, labels)?;
        let mut ordered = vec![WreathElement::Trivial; elems.len()];
        for (old, e) in elems.into_iter().enumerate() {
            ordered[to_new[old] as usize] = e;
        }
        Ok((Arc::new(table), ordered))
    }

    /// Image of a chamber of `Y_n` and the automorphism carrying the types of
    /// its vertices to those of the image.
    pub fn eval(&self, h: &WreathElement, c: &ChamberId) -> (ChamberId, LabelAut) {
        self.eval_at(h, self.n, c)
    }

    fn eval_at(&self, h: &WreathElement, m: usize, c: &ChamberId) -> (ChamberId, LabelAut) {
        let WreathElement::Node { children, shift } = h else {
            return (c.clone(), LabelAut::identity(self.rank));
        };
        let alpha = self.alpha(m - 1);
        if c.k == m {
            return (c.clone(), alpha.pow(*shift));
        }
        let q = children.len();
        let j = (c.js[0] + shift) % q;
        let inner = ChamberId { k: c.k, js: c.js[1..].to_vec() };
        let (img, beta) = self.eval_at(&children[j], m - 1, &inner);
        let mut js = vec![j];
        js.extend(img.js);
        let aj = alpha.pow(j);
        let types = aj.compose(&beta).compose(&aj.inverse()).compose(&alpha.pow(*shift));
        (ChamberId { k: img.k, js }, types)
    }

}
