//! The word problem via Tits' braid-move closure.

use std::collections::{HashSet, VecDeque};

use super::system::{CoxeterSystem, Label};
use crate::error::{Error, Result};

/// A word in the generators, by generator index.
pub type Word = Vec<usize>;

/// Largest braid-move class explored before giving up.
const CLASS_CAP: usize = 2_000_000;

/// Lexicographically least reduced word representing `w`.
///
/// Saturates the class of `w` under braid moves; whenever a word with two
/// equal adjacent letters appears, the pair is deleted and the search restarts.
/// A class with no such word consists of reduced words and, by Matsumoto's
/// theorem, contains every reduced expression of the element.
pub fn word_reduce(sys: &CoxeterSystem, w: &[usize], bound: usize) -> Result<Word> {
    if w.len() > bound {
        return Err(Error::WordTooLong { len: w.len(), bound });
    }
    if let Some(&bad) = w.iter().find(|&&s| s >= sys.rank()) {
        return Err(Error::Invalid(format!("letter {bad} is not a generator")));
    }
    let mut current: Word = w.to_vec();
    'restart: loop {
        if let Some(i) = adjacent_pair(&current) {
            current.drain(i..i + 2);
            continue;
        }
        let mut seen: HashSet<Word> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(current.clone());
        queue.push_back(current.clone());
        while let Some(u) = queue.pop_front() {
            for v in braid_neighbours(sys, &u) {
                if seen.contains(&v) {
                    continue;
                }
                if let Some(i) = adjacent_pair(&v) {
                    let mut shorter = v;
                    shorter.drain(i..i + 2);
                    current = shorter;
                    continue 'restart;
                }
                if seen.len() >= CLASS_CAP {
                    return Err(Error::Resource(format!(
                        "braid class of a length-{} word exceeds {CLASS_CAP} words",
                        u.len()
                    )));
                }
                seen.insert(v.clone());
                queue.push_back(v);
            }
        }
        return Ok(seen.into_iter().min().expect("class is nonempty"));
    }
}

/// True iff `u` and `v` represent the same element of W.
pub fn words_equal(sys: &CoxeterSystem, u: &[usize], v: &[usize], bound: usize) -> Result<bool> {
    Ok(word_reduce(sys, u, bound)? == word_reduce(sys, v, bound)?)
}

/// Length of the element represented by `w`.
pub fn word_length(sys: &CoxeterSystem, w: &[usize], bound: usize) -> Result<usize> {
    Ok(word_reduce(sys, w, bound)?.len())
}

fn adjacent_pair(w: &[usize]) -> Option<usize> {
    w.windows(2).position(|p| p[0] == p[1])
}

fn braid_neighbours(sys: &CoxeterSystem, u: &[usize]) -> Vec<Word> {
    let mut out = Vec::new();
    for i in 0..u.len().saturating_sub(1) {
        let (s, t) = (u[i], u[i + 1]);
        let m = match sys.label(s, t) {
            Label::Finite(m) => m as usize,
            Label::Infinite => continue,
        };
        if i + m > u.len() {
            continue;
        }
        let alternating = (0..m).all(|k| u[i + k] == if k % 2 == 0 { s } else { t });
        if alternating {
            let mut v = u.to_vec();
            for k in 0..m {
                v[i + k] = if k % 2 == 0 { t } else { s };
            }
            out.push(v);
        }
    }
    out
}
