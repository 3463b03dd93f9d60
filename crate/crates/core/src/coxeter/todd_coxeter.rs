//! Coset enumeration over the trivial subgroup for finite Coxeter groups.

use super::group::FiniteGroupTable;
use super::spherical::SphericalSubset;
use super::system::{CoxeterSystem, Label};
use crate::bounds::Bounds;
use crate::error::{Error, Result};

const UNDEF: u32 = u32::MAX;

/// Enumerates `W_T` by HLT coset enumeration with lookahead.
///
/// Generators are involutions, so each column is its own inverse column and
/// `table[c][x] = d` always comes with `table[d][x] = c`.
pub fn enumerate_group(sys: &CoxeterSystem, t: &SphericalSubset, bounds: &Bounds) -> Result<FiniteGroupTable> {
    let expected = t.order();
    if expected > bounds.group_order as u128 {
        return Err(Error::Resource(format!(
            "|W_T| = {expected} for T = {} exceeds the group order bound {}",
            sys.fmt_set(t.members),
            bounds.group_order
        )));
    }
    let gens: Vec<usize> = t.members.iter().collect();
    let k = gens.len();
    if k == 0 {
        return Ok(FiniteGroupTable::trivial());
    }
    let mut relators: Vec<Vec<usize>> = (0..k).map(|x| vec![x, x]).collect();
    for x in 0..k {
        for y in x + 1..k {
            if let Label::Finite(m) = sys.label(gens[x], gens[y]) {
                relators.push((0..2 * m as usize).map(|i| if i % 2 == 0 { x } else { y }).collect());
            }
        }
    }
    let mut e = Enumerator::new(k, bounds.deductions);
    let mut lookahead_at = (expected as usize).saturating_mul(4).max(1024);
    let mut c = 0usize;
    while c < e.table.len() {
        if e.live(c) {
            for r in &relators {
                e.scan_and_fill(c, r)?;
                if !e.live(c) {
                    break;
                }
            }
            if e.live(c) {
                for x in 0..k {
                    if e.table[c][x] == UNDEF {
                        e.define(c, x)?;
                    }
                }
            }
        }
        if e.live_count > lookahead_at {
            e.lookahead(&relators)?;
            lookahead_at = lookahead_at.max(e.live_count * 2);
        }
        c += 1;
    }
    // compact the live cosets
    let live: Vec<usize> = (0..e.table.len()).filter(|&c| e.live(c)).collect();
    let mut pos = vec![u32::MAX; e.table.len()];
    for (i, &c) in live.iter().enumerate() {
        pos[c] = i as u32;
    }
    let right: Vec<Vec<u32>> = (0..k)
        .map(|x| live.iter().map(|&c| pos[e.table[c][x] as usize]).collect())
        .collect();
    let table = FiniteGroupTable::from_right_action(right, 0, gens, true)?;
    if table.size() as u128 != expected {
        return Err(Error::Resource(format!(
            "coset enumeration produced {} cosets, classification says {expected}",
            table.size()
        )));
    }
    Ok(table)
}

struct Enumerator {
    table: Vec<Vec<u32>>,
    forward: Vec<u32>,
    live_count: usize,
    work: usize,
    cap: usize,
    queue: Vec<usize>,
}

impl Enumerator {
    fn new(k: usize, cap: usize) -> Self {
        Self { table: vec![vec![UNDEF; k]], forward: vec![0], live_count: 1, work: 0, cap, queue: Vec::new() }
    }

    fn live(&self, c: usize) -> bool {
        self.forward[c] as usize == c
    }

    fn tick(&mut self) -> Result<()> {
        self.work += 1;
        if self.work > self.cap {
            return Err(Error::Resource(format!("coset enumeration exceeded {} steps", self.cap)));
        }
        Ok(())
    }

    fn define(&mut self, c: usize, x: usize) -> Result<usize> {
        self.tick()?;
        let d = self.table.len();
        self.table.push(vec![UNDEF; self.table[0].len()]);
        self.forward.push(d as u32);
        self.live_count += 1;
        self.table[c][x] = d as u32;
        self.table[d][x] = c as u32;
        Ok(d)
    }

    fn rep(&mut self, c: usize) -> usize {
        let mut r = c;
        while self.forward[r] as usize != r {
            r = self.forward[r] as usize;
        }
        let mut cur = c;
        while self.forward[cur] as usize != r {
            let next = self.forward[cur] as usize;
            self.forward[cur] = r as u32;
            cur = next;
        }
        r
    }

    fn merge(&mut self, a: usize, b: usize) {
        let (a, b) = (self.rep(a), self.rep(b));
        if a == b {
            return;
        }
        let (keep, kill) = if a < b { (a, b) } else { (b, a) };
        self.forward[kill] = keep as u32;
        self.live_count -= 1;
        self.queue.push(kill);
    }

    fn coincidence(&mut self, a: usize, b: usize) -> Result<()> {
        self.merge(a, b);
        while let Some(dead) = self.queue.pop() {
            self.tick()?;
            for x in 0..self.table[dead].len() {
                let d = self.table[dead][x];
                if d == UNDEF {
                    continue;
                }
                let d = d as usize;
                self.table[d][x] = UNDEF;
                let (mu, nu) = (self.rep(dead), self.rep(d));
                if self.table[mu][x] != UNDEF {
                    let tgt = self.table[mu][x] as usize;
                    self.merge(nu, tgt);
                } else if self.table[nu][x] != UNDEF {
                    let tgt = self.table[nu][x] as usize;
                    self.merge(mu, tgt);
                } else {
                    self.table[mu][x] = nu as u32;
                    self.table[nu][x] = mu as u32;
                }
            }
        }
        Ok(())
    }

    /// Traces `r` from `c` in both directions; defines cosets when `fill` is set.
    fn scan(&mut self, c: usize, r: &[usize], fill: bool) -> Result<()> {
        let (mut f, mut b) = (c, c);
        let (mut i, mut j) = (0usize, r.len() as isize - 1);
        loop {
            while (i as isize) <= j && self.table[f][r[i]] != UNDEF {
                f = self.table[f][r[i]] as usize;
                i += 1;
            }
            if (i as isize) > j {
                if f != b {
                    self.coincidence(f, b)?;
                }
                return Ok(());
            }
            while j >= i as isize && self.table[b][r[j as usize]] != UNDEF {
                b = self.table[b][r[j as usize]] as usize;
                j -= 1;
            }
            if j < i as isize {
                self.coincidence(f, b)?;
                return Ok(());
            }
            if j == i as isize {
                let x = r[i];
                self.table[f][x] = b as u32;
                self.table[b][x] = f as u32;
                return Ok(());
            }
            if !fill {
                return Ok(());
            }
            self.define(f, r[i])?;
        }
    }

    fn scan_and_fill(&mut self, c: usize, r: &[usize]) -> Result<()> {
        self.scan(c, r, true)
    }

    fn lookahead(&mut self, relators: &[Vec<usize>]) -> Result<()> {
        for c in 0..self.table.len() {
            for r in relators {
                if !self.live(c) {
                    break;
                }
                self.scan(c, r, false)?;
            }
        }
        Ok(())
    }
}
