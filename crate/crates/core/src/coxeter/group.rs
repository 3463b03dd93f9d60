//! Fully enumerated finite groups, homomorphisms between them, subgroups and cosets.

use std::collections::VecDeque;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Groups up to this size keep a dense multiplication table.
pub const DENSE_LIMIT: usize = 4096;

const NO_PARENT: u32 = u32::MAX;

/// A finite group given by its right regular action on a generating set.
///
/// Elements are indexed in breadth-first ShortLex order over the generators, so
/// index 0 is the identity and the BFS word of each element is its
/// ShortLex-least word. Small groups also carry a dense multiplication table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteGroupTable {
    size: usize,
    gens: Vec<u32>,
    gen_labels: Vec<usize>,
    /// right[x][g] = g * gens[x]
    right: Vec<Vec<u32>>,
    parent: Vec<(u32, u8)>,
    inv: Vec<u32>,
    dense: Option<Vec<u32>>,
}

impl FiniteGroupTable {
    /// The trivial group.
    pub fn trivial() -> Self {
        Self {
            size: 1,
            gens: Vec::new(),
            gen_labels: Vec::new(),
            right: Vec::new(),
            parent: vec![(NO_PARENT, 0)],
            inv: vec![0],
            dense: Some(vec![0]),
        }
    }

    /// Builds a table from an arbitrary right action by generators on `0..size`,
    /// where `start` plays the identity. Elements are relabelled in BFS order.
    /// `involutive` promises every generator squares to the identity.
    pub(crate) fn from_right_action(
        right: Vec<Vec<u32>>,
        start: u32,
        gen_labels: Vec<usize>,
        involutive: bool,
    ) -> Result<Self> {
        let k = right.len();
        let raw = right.first().map_or(1, |c| c.len());
        let mut relabel = vec![u32::MAX; raw];
        let mut order = Vec::with_capacity(raw);
        let mut parent = Vec::with_capacity(raw);
        relabel[start as usize] = 0;
        order.push(start);
        parent.push((NO_PARENT, 0));
        let mut head = 0;
        while head < order.len() {
            let g = order[head];
            for (x, col) in right.iter().enumerate() {
                let h = col[g as usize];
                if relabel[h as usize] == u32::MAX {
                    relabel[h as usize] = order.len() as u32;
                    order.push(h);
                    parent.push((head as u32, x as u8));
                }
            }
            head += 1;
        }
        let size = order.len();
        let new_right: Vec<Vec<u32>> = right
            .iter()
            .map(|col| order.iter().map(|&g| relabel[col[g as usize] as usize]).collect())
            .collect();
        let gens: Vec<u32> = (0..k).map(|x| new_right[x][0]).collect();
        let mut table = Self {
            size,
            gens,
            gen_labels,
            right: new_right,
            parent,
            inv: Vec::new(),
            dense: None,
        };
        if size <= DENSE_LIMIT {
            table.build_dense();
        }
        table.inv = if let Some(d) = &table.dense {
            (0..size)
                .map(|a| (0..size).find(|&b| d[a * size + b] == 0).expect("group has inverses") as u32)
                .collect()
        } else if involutive {
            (0..size as u32)
                .map(|a| {
                    let w = table.word(a);
                    w.iter().rev().fold(0u32, |g, &x| table.right[x][g as usize])
                })
                .collect()
        } else {
            return Err(Error::Resource(format!(
                "group of order {size} exceeds the dense table limit {DENSE_LIMIT}"
            )));
        };
        Ok(table)
    }

    /// Builds a table from a full multiplication table and generating elements.
    /// The result is relabelled in BFS order over `gens`; the returned vector
    /// maps old indices to new ones.
    pub fn from_mult(mult: &[Vec<u32>], gens: &[u32], gen_labels: Vec<usize>) -> Result<(Self, Vec<u32>)> {
        let size = mult.len();
        let identity = (0..size)
            .find(|&e| (0..size).all(|g| mult[e][g] as usize == g && mult[g][e] as usize == g))
            .ok_or_else(|| Error::Invalid("multiplication table has no identity".into()))?;
        let right: Vec<Vec<u32>> =
            gens.iter().map(|&x| (0..size).map(|g| mult[g][x as usize]).collect()).collect();
        let table = Self::from_right_action(right.clone(), identity as u32, gen_labels, false)?;
        if table.size != size {
            return Err(Error::Invalid(format!(
                "generators reach {} of {size} elements",
                table.size
            )));
        }
        // recover the relabelling by tracing BFS words from the identity
        let mut to_new = vec![0u32; size];
        for new in 0..size as u32 {
            let old = table.word(new).iter().fold(identity as u32, |g, &x| right[x][g as usize]);
            to_new[old as usize] = new;
        }
        for a in 0..size {
            for b in 0..size {
                let want = to_new[mult[a][b] as usize];
                if table.mul(to_new[a], to_new[b]) != want {
                    return Err(Error::Invalid("multiplication table is not associative".into()));
                }
            }
        }
        Ok((table, to_new))
    }

    fn build_dense(&mut self) {
        let n = self.size;
        let mut d = vec![0u32; n * n];
        for a in 0..n {
            d[a * n] = a as u32;
        }
        for b in 1..n {
            let (p, x) = self.parent[b];
            let col = &self.right[x as usize];
            for a in 0..n {
                d[a * n + b] = col[d[a * n + p as usize] as usize];
            }
        }
        self.dense = Some(d);
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> u32 {
        0
    }

    pub fn is_dense(&self) -> bool {
        self.dense.is_some()
    }

    /// Generating elements, in generator order.
    pub fn gens(&self) -> &[u32] {
        &self.gens
    }

    /// External labels of the generators (global generator indices for Coxeter groups).
    pub fn gen_labels(&self) -> &[usize] {
        &self.gen_labels
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        match &self.dense {
            Some(d) => d[a as usize * self.size + b as usize],
            None => self.word(b).iter().fold(a, |g, &x| self.right[x][g as usize]),
        }
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inv[a as usize]
    }

    /// `g * gens[x]`
    pub fn mul_gen(&self, g: u32, x: usize) -> u32 {
        self.right[x][g as usize]
    }

    /// `a b a^{-1}`
    pub fn conj(&self, a: u32, b: u32) -> u32 {
        self.mul(self.mul(a, b), self.inv(a))
    }

    /// ShortLex-least word for `g`, as positions into [`Self::gens`].
    pub fn word(&self, g: u32) -> Vec<usize> {
        let mut w = Vec::new();
        let mut cur = g;
        while self.parent[cur as usize].0 != NO_PARENT {
            let (p, x) = self.parent[cur as usize];
            w.push(x as usize);
            cur = p;
        }
        w.reverse();
        w
    }

    /// Word for `g` in external generator labels.
    pub fn labelled_word(&self, g: u32) -> Vec<usize> {
        self.word(g).into_iter().map(|x| self.gen_labels[x]).collect()
    }

    /// Evaluates a word of generator positions.
    pub fn eval(&self, word: &[usize]) -> u32 {
        word.iter().fold(0, |g, &x| self.right[x][g as usize])
    }

    /// Evaluates a word in external labels; `None` if a letter is not a generator here.
    pub fn eval_labelled(&self, word: &[usize]) -> Option<u32> {
        let mut g = 0;
        for s in word {
            let x = self.gen_labels.iter().position(|l| l == s)?;
            g = self.right[x][g as usize];
        }
        Some(g)
    }

    /// Element for a single external generator label.
    pub fn gen_by_label(&self, s: usize) -> Option<u32> {
        self.gen_labels.iter().position(|&l| l == s).map(|x| self.gens[x])
    }

    pub fn element_order(&self, g: u32) -> usize {
        let mut k = 1;
        let mut p = g;
        while p != 0 {
            p = self.mul(p, g);
            k += 1;
        }
        k
    }

    /// Extends generator images to a map on all elements along BFS words.
    /// Fails unless the result is a homomorphism.
    pub fn extend_to_hom(&self, target: &FiniteGroupTable, images: &[u32]) -> Result<Vec<u32>> {
        if images.len() != self.gens.len() {
            return Err(Error::Invalid("one image per generator is required".into()));
        }
        let mut map = vec![0u32; self.size];
        for g in 1..self.size {
            let (p, x) = self.parent[g];
            map[g] = target.mul(map[p as usize], images[x as usize]);
        }
        if !self.is_hom(target, &map) {
            return Err(Error::Invalid("generator images do not satisfy the relations".into()));
        }
        Ok(map)
    }

    /// Checks `map(g x) = map(g) map(x)` for every element and generator,
    /// which forces `map` to be a homomorphism.
    pub fn is_hom(&self, target: &FiniteGroupTable, map: &[u32]) -> bool {
        if map.len() != self.size || map[0] != 0 {
            return false;
        }
        if map.iter().any(|&y| y as usize >= target.size) {
            return false;
        }
        (0..self.gens.len()).all(|x| {
            let mx = map[self.gens[x] as usize];
            (0..self.size).all(|g| map[self.right[x][g] as usize] == target.mul(map[g], mx))
        })
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, generators: &[u32]) -> Vec<u32> {
        let mut seen = vec![false; self.size];
        seen[0] = true;
        let mut queue = VecDeque::from([0u32]);
        let mut members = vec![0u32];
        while let Some(g) = queue.pop_front() {
            for &x in generators {
                let h = self.mul(g, x);
                if !seen[h as usize] {
                    seen[h as usize] = true;
                    members.push(h);
                    queue.push_back(h);
                }
            }
        }
        members.sort_unstable();
        members
    }

    /// Spot-checks associativity on the given triples.
    pub fn associative_on(&self, triples: &[(u32, u32, u32)]) -> bool {
        triples
            .iter()
            .all(|&(a, b, c)| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
    }
}

/// A subgroup of an enumerated group.
#[derive(Debug, Clone)]
pub struct Subgroup {
    pub parent: Arc<FiniteGroupTable>,
    /// Sorted parent indices.
    pub members: Vec<u32>,
    pub generators: Vec<u32>,
    pub index_in_parent: usize,
}

impl Subgroup {
    pub fn generated_by(parent: Arc<FiniteGroupTable>, generators: Vec<u32>) -> Self {
        let members = parent.closure(&generators);
        let index_in_parent = parent.size() / members.len();
        Self { parent, members, generators, index_in_parent }
    }

    pub fn order(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, g: u32) -> bool {
        self.members.binary_search(&g).is_ok()
    }

    /// The subgroup as a group in its own right, generated by `generators`,
    /// together with its embedding into the parent (new index -> parent index).
    pub fn to_table(&self, gen_labels: Vec<usize>, involutive: bool) -> Result<(FiniteGroupTable, Vec<u32>)> {
        let pos = |g: u32| self.members.binary_search(&g).expect("closed subgroup") as u32;
        let right: Vec<Vec<u32>> = self
            .generators
            .iter()
            .map(|&x| self.members.iter().map(|&g| pos(self.parent.mul(g, x))).collect())
            .collect();
        let table = FiniteGroupTable::from_right_action(right, pos(0), gen_labels, involutive)?;
        let embed: Vec<u32> = (0..table.size() as u32)
            .map(|g| {
                table.word(g).iter().fold(0u32, |acc, &x| self.parent.mul(acc, self.generators[x]))
            })
            .collect();
        Ok((table, embed))
    }
}

/// Partition of `g` into left cosets `xH` of the subgroup with the given
/// members; the first coset is `H`. Also returns the coset id of each element.
pub fn left_cosets(g: &FiniteGroupTable, members: &[u32]) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut id = vec![usize::MAX; g.size()];
    let mut cosets = Vec::new();
    for x in 0..g.size() as u32 {
        if id[x as usize] != usize::MAX {
            continue;
        }
        let mut coset: Vec<u32> = members.iter().map(|&h| g.mul(x, h)).collect();
        coset.sort_unstable();
        for &y in &coset {
            id[y as usize] = cosets.len();
        }
        cosets.push(coset);
    }
    (cosets, id)
}

/// Cosets of a [`Subgroup`] in its parent.
pub fn subgroup_cosets(h: &Subgroup) -> Vec<Vec<u32>> {
    left_cosets(&h.parent, &h.members).0
}
