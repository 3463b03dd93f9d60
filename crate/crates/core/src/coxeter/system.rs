//! Coxeter matrices and their text format.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;

use crate::error::ParseError;

/// Maximum number of generators; generator sets are stored as 64-bit masks.
pub const MAX_GENERATORS: usize = 64;

/// Off-diagonal entry `m_st` of a Coxeter matrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    pub fn finite(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => write!(f, "inf"),
        }
    }
}

/// A set of generators, stored as a bitmask over generator indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct GenSet(pub u64);

impl GenSet {
    pub const EMPTY: GenSet = GenSet(0);

    pub fn singleton(s: usize) -> Self {
        GenSet(1 << s)
    }

    pub fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        GenSet(iter.into_iter().fold(0, |acc, s| acc | (1 << s)))
    }

    pub fn contains(self, s: usize) -> bool {
        s < 64 && self.0 & (1 << s) != 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn with(self, s: usize) -> Self {
        GenSet(self.0 | (1 << s))
    }

    pub fn without(self, s: usize) -> Self {
        GenSet(self.0 & !(1 << s))
    }

    pub fn is_subset(self, other: GenSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_proper_subset(self, other: GenSet) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn union(self, other: GenSet) -> Self {
        GenSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GenSet) -> Self {
        GenSet(self.0 & other.0)
    }

    /// Members in increasing index order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(s)
            }
        })
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(63 - self.0.leading_zeros() as usize)
        }
    }

    /// Image under a permutation of generator indices.
    pub fn map(self, perm: &[usize]) -> Self {
        GenSet::from_iter(self.iter().map(|s| perm[s]))
    }

    /// Sort key used for deterministic enumeration: by size, then by mask.
    pub fn order_key(self) -> (usize, u64) {
        (self.len(), self.0)
    }
}

/// A Coxeter system `(W, S)`: named generators and a symmetric label matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoxeterSystem {
    names: Vec<String>,
    matrix: Vec<Vec<Label>>,
}

impl CoxeterSystem {
    /// Builds a system from names and a full matrix, validating the Coxeter
    /// matrix axioms. Diagonal entries are ignored (conventionally 1).
    pub fn new(names: Vec<String>, matrix: Vec<Vec<Label>>) -> Result<Self, ParseError> {
        let n = names.len();
        if n == 0 {
            return Err(ParseError::NoGenerators);
        }
        if n > MAX_GENERATORS {
            return Err(ParseError::TooManyGenerators(n));
        }
        let mut seen = HashMap::new();
        for (i, name) in names.iter().enumerate() {
            if seen.insert(name.as_str(), i).is_some() {
                return Err(ParseError::DuplicateGenerator { line: 0, name: name.clone() });
            }
        }
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(ParseError::Syntax { line: 0, message: "matrix is not square".into() });
        }
        for s in 0..n {
            for t in 0..n {
                if s == t {
                    continue;
                }
                if matrix[s][t] != matrix[t][s] {
                    return Err(ParseError::Asymmetric {
                        line: 0,
                        s: names[s].clone(),
                        t: names[t].clone(),
                        first: matrix[s][t],
                        second: matrix[t][s],
                    });
                }
                if let Label::Finite(m) = matrix[s][t] {
                    if m < 2 {
                        return Err(ParseError::LabelTooSmall { line: 0, label: m });
                    }
                }
            }
        }
        Ok(Self { names, matrix })
    }

    /// System with the given names where every off-diagonal label is `default`,
    /// then overridden by `entries`.
    pub fn from_entries(
        names: &[&str],
        default: Label,
        entries: &[(&str, &str, Label)],
    ) -> Result<Self, ParseError> {
        let n = names.len();
        let index: HashMap<&str, usize> = names.iter().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut matrix = vec![vec![default; n]; n];
        for (s, t, label) in entries {
            let si = *index
                .get(s)
                .ok_or_else(|| ParseError::UnknownGenerator { line: 0, name: s.to_string() })?;
            let ti = *index
                .get(t)
                .ok_or_else(|| ParseError::UnknownGenerator { line: 0, name: t.to_string() })?;
            matrix[si][ti] = *label;
            matrix[ti][si] = *label;
        }
        Self::new(names.iter().map(|s| s.to_string()).collect(), matrix)
    }

    pub fn rank(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, s: usize) -> &str {
        &self.names[s]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// `m_st`; `Finite(1)` on the diagonal.
    pub fn label(&self, s: usize, t: usize) -> Label {
        if s == t {
            Label::Finite(1)
        } else {
            self.matrix[s][t]
        }
    }

    pub fn all(&self) -> GenSet {
        GenSet::from_iter(0..self.rank())
    }

    /// Formats a generator set as `{s1,s4}`.
    pub fn fmt_set(&self, set: GenSet) -> String {
        let parts: Vec<&str> = set.iter().map(|s| self.name(s)).collect();
        format!("{{{}}}", parts.join(","))
    }

    pub fn fmt_word(&self, word: &[usize]) -> String {
        if word.is_empty() {
            return "1".into();
        }
        word.iter().map(|&s| self.name(s)).collect::<Vec<_>>().join(" ")
    }

    /// Parses the line-oriented system format:
    ///
    /// ```text
    /// # comment
    /// generators: s1 s2 s3
    /// m s1 s2 = 4
    /// default = inf
    /// ```
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut names: Option<Vec<String>> = None;
        let mut default = Label::Infinite;
        // (s, t) with s < t -> (label, line)
        let mut entries: HashMap<(usize, usize), (Label, usize)> = HashMap::new();

        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = match raw.find('#') {
                Some(p) => &raw[..p],
                None => raw,
            }
            .trim();
            if line.is_empty() {
                continue;
            }
            if let Some(rest) = line.strip_prefix("generators") {
                let rest = rest.trim_start();
                let rest = rest.strip_prefix(':').ok_or_else(|| ParseError::Syntax {
                    line: line_no,
                    message: "expected ':' after 'generators'".into(),
                })?;
                if names.is_some() {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: "generators declared twice".into(),
                    });
                }
                let mut list: Vec<String> = Vec::new();
                for tok in rest.split_whitespace() {
                    if list.iter().any(|n| n == tok) {
                        return Err(ParseError::DuplicateGenerator {
                            line: line_no,
                            name: tok.to_string(),
                        });
                    }
                    list.push(tok.to_string());
                }
                if list.is_empty() {
                    return Err(ParseError::NoGenerators);
                }
                if list.len() > MAX_GENERATORS {
                    return Err(ParseError::TooManyGenerators(list.len()));
                }
                names = Some(list);
                continue;
            }
            let (lhs, rhs) = line.split_once('=').ok_or_else(|| ParseError::Syntax {
                line: line_no,
                message: format!("unrecognised line '{line}'"),
            })?;
            let lhs: Vec<&str> = lhs.split_whitespace().collect();
            let label = parse_label(rhs.trim(), line_no)?;
            match lhs.as_slice() {
                ["default"] => default = label,
                ["m", s, t] => {
                    let list = names.as_ref().ok_or_else(|| ParseError::Syntax {
                        line: line_no,
                        message: "label given before 'generators:'".into(),
                    })?;
                    let find = |name: &str| {
                        list.iter().position(|n| n == name).ok_or_else(|| {
                            ParseError::UnknownGenerator { line: line_no, name: name.to_string() }
                        })
                    };
                    let (si, ti) = (find(s)?, find(t)?);
                    if si == ti {
                        return Err(ParseError::Syntax {
                            line: line_no,
                            message: format!("diagonal entry m {s} {s} cannot be set"),
                        });
                    }
                    let key = (si.min(ti), si.max(ti));
                    if let Some(&(prev, _)) = entries.get(&key) {
                        if prev != label {
                            return Err(ParseError::Asymmetric {
                                line: line_no,
                                s: s.to_string(),
                                t: t.to_string(),
                                first: prev,
                                second: label,
                            });
                        }
                    }
                    entries.insert(key, (label, line_no));
                }
                _ => {
                    return Err(ParseError::Syntax {
                        line: line_no,
                        message: format!("expected 'm <s> <t> = <k>' or 'default = <k>', got '{line}'"),
                    })
                }
            }
        }

        let names = names.ok_or(ParseError::NoGenerators)?;
        let n = names.len();
        let mut matrix = vec![vec![default; n]; n];
        for s in 0..n {
            matrix[s][s] = Label::Finite(1);
        }
        for ((s, t), (label, _)) in entries {
            matrix[s][t] = label;
            matrix[t][s] = label;
        }
        Self::new(names, matrix)
    }

    /// Serialises to the text format accepted by [`CoxeterSystem::parse`].
    pub fn to_text(&self) -> String {
        let mut out = format!("generators: {}\n", self.names.join(" "));
        for s in 0..self.rank() {
            for t in s + 1..self.rank() {
                if let Label::Finite(m) = self.matrix[s][t] {
                    out.push_str(&format!("m {} {} = {}\n", self.names[s], self.names[t], m));
                }
            }
        }
        out.push_str("default = inf\n");
        out
    }
}

fn parse_label(text: &str, line: usize) -> Result<Label, ParseError> {
    match text {
        "inf" | "infinity" | "oo" | "∞" => Ok(Label::Infinite),
        _ => {
            let m: u32 = text.parse().map_err(|_| ParseError::Syntax {
                line,
                message: format!("bad label '{text}'"),
            })?;
            if m < 2 {
                Err(ParseError::LabelTooSmall { line, label: m })
            } else {
                Ok(Label::Finite(m))
            }
        }
    }
}
