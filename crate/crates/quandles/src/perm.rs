//! Permutation arithmetic and cycle-structure analysis on `{0, …, n-1}`.
//!
//! Points are 0-based internally; 1-based cycle notation is used only at
//! I/O boundaries (parsing and display).

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::Error;

/// A bijection on `{0, …, n-1}`, stored as an image sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Sign of a permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn xor(self, other: Parity) -> Parity {
        if self == other {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Parity::Even => write!(f, "even"),
            Parity::Odd => write!(f, "odd"),
        }
    }
}

impl Permutation {
    /// Builds a permutation from its image sequence, validating bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n || seen[v] {
                return Err(Error::NotAPermutation);
            }
            seen[v] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    /// Builds a permutation of degree `n` from disjoint cycles (0-based points).
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, Error> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &p in cycle {
                if p >= n {
                    return Err(Error::PointOutOfRange { point: p, degree: n });
                }
                if used[p] {
                    return Err(Error::RepeatedPoint { point: p });
                }
                used[p] = true;
            }
            for i in 0..cycle.len() {
                images[cycle[i]] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v] = i;
        }
        Permutation { images }
    }

    /// Decomposition into disjoint cycles of length >= 2, each cycle starting
    /// at its smallest point, cycles ordered by starting point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.images[start];
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.images[p];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        let n = self.degree();
        let mut parts: Vec<usize> = self.cycles().iter().map(|c| c.len()).collect();
        let moved: usize = parts.iter().sum();
        parts.extend(std::iter::repeat_n(1, n - moved));
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.cycles().iter().map(|c| c.len() - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Least `m >= 1` with `self^m = id`; equals the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        self.cycle_type().order()
    }

    pub fn power(&self, mut e: i64) -> Permutation {
        let m = self.order() as i64;
        e = e.rem_euclid(m);
        let mut acc = Permutation::identity(self.degree());
        for _ in 0..e {
            acc = compose(self, &acc);
        }
        acc
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points; `e` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", p + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Parses cycle notation like `(1 2 3)(4 5)` with 1-based points; `e` is the
/// identity. Fixed points may be omitted.
pub fn parse_cycles(n: usize, text: &str) -> Result<Permutation, Error> {
    let text = text.trim();
    if text == "e" || text.is_empty() {
        return Ok(Permutation::identity(n));
    }
    let mut cycles = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let rest2 = rest.trim_start();
        if !rest2.starts_with('(') {
            return Err(Error::Parse(format!("expected '(' in cycle notation: {text:?}")));
        }
        let close = rest2
            .find(')')
            .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
        let inner = &rest2[1..close];
        let mut cycle = Vec::new();
        for tok in inner.split_whitespace() {
            let p: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad point {tok:?} in {text:?}")))?;
            if p == 0 {
                return Err(Error::Parse("points are 1-based in cycle notation".into()));
            }
            cycle.push(p - 1);
        }
        if cycle.len() >= 2 {
            cycles.push(cycle);
        }
        rest = &rest2[close + 1..];
    }
    Permutation::from_cycles(n, &cycles)
}

/// `compose(p, q)` applies `q` first: the result maps `i` to `p(q(i))`.
pub fn compose(p: &Permutation, q: &Permutation) -> Permutation {
    assert_eq!(
        p.degree(),
        q.degree(),
        "compose: degree mismatch {} vs {}",
        p.degree(),
        q.degree()
    );
    let images = q.images.iter().map(|&i| p.images[i]).collect();
    Permutation { images }
}

pub fn try_compose(p: &Permutation, q: &Permutation) -> Result<Permutation, Error> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    Ok(compose(p, q))
}

/// `g^h = h g h^{-1}`; the result has the same cycle type as `g`.
pub fn conjugate(g: &Permutation, h: &Permutation) -> Permutation {
    compose(&compose(h, g), &h.inverse())
}

/// Some `sigma` with `sigma·p·sigma^{-1} = q`, by aligning the cycle
/// decompositions length by length. Errors when the cycle types differ.
pub fn conjugator(p: &Permutation, q: &Permutation) -> Result<Permutation, Error> {
    if p.degree() != q.degree() {
        return Err(Error::DegreeMismatch {
            left: p.degree(),
            right: q.degree(),
        });
    }
    if p.cycle_type() != q.cycle_type() {
        return Err(Error::Other(format!(
            "not conjugate: cycle type {} vs {}",
            p.cycle_type(),
            q.cycle_type()
        )));
    }
    let n = p.degree();
    let full_cycles = |x: &Permutation| -> std::collections::BTreeMap<usize, Vec<Vec<usize>>> {
        let mut by_len: std::collections::BTreeMap<usize, Vec<Vec<usize>>> =
            std::collections::BTreeMap::new();
        let mut moved = vec![false; n];
        for c in x.cycles() {
            for &i in &c {
                moved[i] = true;
            }
            by_len.entry(c.len()).or_default().push(c);
        }
        for (i, m) in moved.iter().enumerate() {
            if !m {
                by_len.entry(1).or_default().push(vec![i]);
            }
        }
        by_len
    };
    let cp = full_cycles(p);
    let cq = full_cycles(q);
    let mut images = vec![usize::MAX; n];
    for (len, cycles_p) in &cp {
        for (a, b) in cycles_p.iter().zip(&cq[len]) {
            for k in 0..*len {
                images[a[k]] = b[k];
            }
        }
    }
    let sigma = Permutation::from_images(images)?;
    debug_assert_eq!(&conjugate(p, &sigma), q);
    Ok(sigma)
}

/// Non-increasing integer partition of `n`, naming a conjugacy class of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CycleType {
    parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(CycleType { parts })
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Multiplicity map: `a_i = |{j : parts[j] = i}|` for `i = 1..=n`.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.parts {
            match out.last_mut() {
                Some((len, count)) if *len == p => *count += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// `lcm` of the parts: the order of any permutation with this shape.
    pub fn order(&self) -> u64 {
        self.parts.iter().fold(1u64, |acc, &p| acc.lcm(&(p as u64)))
    }

    pub fn parity(&self) -> Parity {
        let transpositions: usize = self.parts.iter().map(|p| p - 1).sum();
        if transpositions.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Cycle type of the `i`-th power: each part `l` contributes `gcd(l, i)`
    /// parts of length `l / gcd(l, i)`.
    pub fn power(&self, i: u64) -> CycleType {
        assert!(i >= 1, "power exponent must be >= 1");
        let mut parts = Vec::new();
        for &l in &self.parts {
            let g = (l as u64).gcd(&i) as usize;
            for _ in 0..g {
                parts.push(l / g);
            }
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        CycleType { parts }
    }
}

impl fmt::Display for CycleType {
    /// Comma list with exponent sugar, e.g. `4,2^3` for (4,2,2,2).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (len, count) in self.multiplicities() {
            if !first {
                write!(f, ",")?;
            }
            first = false;
            if count == 1 {
                write!(f, "{len}")?;
            } else {
                write!(f, "{len}^{count}")?;
            }
        }
        Ok(())
    }
}

/// Parses partition text like `4,2^3` (meaning (4,2,2,2)).
pub fn parse_partition(text: &str) -> Result<CycleType, Error> {
    let mut parts = Vec::new();
    for tok in text.split(',') {
        let tok = tok.trim();
        if tok.is_empty() {
            continue;
        }
        let (base, exp) = match tok.split_once('^') {
            Some((b, e)) => (b.trim(), e.trim()),
            None => (tok, "1"),
        };
        let base: usize = base
            .parse()
            .map_err(|_| Error::Parse(format!("bad partition part {tok:?}")))?;
        let exp: usize = exp
            .parse()
            .map_err(|_| Error::Parse(format!("bad exponent in {tok:?}")))?;
        for _ in 0..exp {
            parts.push(base);
        }
    }
    if parts.is_empty() {
        return Err(Error::Parse("empty partition".into()));
    }
    CycleType::new(parts)
}
