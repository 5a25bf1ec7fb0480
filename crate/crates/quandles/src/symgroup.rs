//! Structure of `S_n` and `A_n`: enumeration, ranking, partitions, class
//! representatives, and centralizers.

use crate::perm::{compose, CycleType, Parity, Permutation};
use crate::Error;

/// Default cap for whole-group enumeration (10!).
pub const DEFAULT_ENUMERATION_CAP: u64 = 3_628_800;

pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// Lehmer-code ranking of `S_n`; `rank` and `unrank` are inverse bijections
/// onto `{0, …, n!-1}`.
#[derive(Debug, Clone)]
pub struct ElementIndexer {
    n: usize,
    size: u64,
}

impl ElementIndexer {
    pub fn new(n: usize) -> Self {
        ElementIndexer {
            n,
            size: factorial(n),
        }
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn size(&self) -> u64 {
        self.size
    }

    pub fn rank(&self, p: &Permutation) -> u64 {
        debug_assert_eq!(p.degree(), self.n);
        let images = p.images();
        let mut rank = 0u64;
        for i in 0..self.n {
            let smaller = images[i + 1..].iter().filter(|&&v| v < images[i]).count() as u64;
            rank = rank * (self.n - i) as u64 + smaller;
        }
        rank
    }

    pub fn unrank(&self, mut rank: u64) -> Permutation {
        assert!(rank < self.size, "rank {rank} out of range for S_{}", self.n);
        let mut code = vec![0usize; self.n];
        for i in (0..self.n).rev() {
            let base = (self.n - i) as u64;
            code[i] = (rank % base) as usize;
            rank /= base;
        }
        let mut pool: Vec<usize> = (0..self.n).collect();
        let images = code.iter().map(|&c| pool.remove(c)).collect();
        Permutation::from_images(images).expect("unrank produced valid permutation")
    }
}

/// All partitions of `n` in reverse-lexicographic order, starting at `(n)`.
pub fn partitions(n: usize) -> Vec<CycleType> {
    fn rec(remaining: usize, max_part: usize, prefix: &mut Vec<usize>, out: &mut Vec<CycleType>) {
        if remaining == 0 {
            out.push(CycleType::new(prefix.clone()).unwrap());
            return;
        }
        for part in (1..=remaining.min(max_part)).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Canonical class representative: cycles filled left to right by part,
/// i.e. `(0 1 … l1-1)(l1 … l1+l2-1)…`.
pub fn class_representative(t: &CycleType) -> Permutation {
    let n = t.degree();
    let mut cycles = Vec::new();
    let mut next = 0;
    for &part in t.parts() {
        cycles.push((next..next + part).collect());
        next += part;
    }
    Permutation::from_cycles(n, &cycles).expect("disjoint consecutive cycles")
}

/// `|C_{S_n}(pi)| = prod_i i^{a_i} a_i!` for `pi` of shape `t`.
pub fn centralizer_order(t: &CycleType) -> u128 {
    let mut ord = 1u128;
    for (len, count) in t.multiplicities() {
        for _ in 0..count {
            ord *= len as u128;
        }
        for k in 1..=count as u128 {
            ord *= k;
        }
    }
    ord
}

/// Visits every element of `C_{S_n}(pi)` exactly once, generated structurally
/// as the product over cycle lengths of (rotations within each cycle) x
/// (permutations of the cycles of equal length). No budget check; callers go
/// through [`centralizer_elements`] or stream with their own accounting.
pub fn for_each_centralizer_element<F: FnMut(&Permutation)>(pi: &Permutation, mut f: F) {
    let n = pi.degree();
    // cycles including fixed points, grouped by length
    let mut all_cycles = pi.cycles();
    for p in 0..n {
        if pi.apply(p) == p {
            all_cycles.push(vec![p]);
        }
    }
    let mut groups: Vec<(usize, Vec<Vec<usize>>)> = Vec::new();
    all_cycles.sort_by_key(|c| c.len());
    for c in all_cycles {
        match groups.last_mut() {
            Some((len, cs)) if *len == c.len() => cs.push(c),
            _ => groups.push((c.len(), vec![c])),
        }
    }

    // per group: all permutations of the cycles, and a rotation counter
    let sigma_lists: Vec<Vec<Vec<usize>>> = groups
        .iter()
        .map(|(_, cs)| all_permutation_seqs(cs.len()))
        .collect();

    let mut sigma_idx = vec![0usize; groups.len()];
    let mut rotations: Vec<Vec<usize>> = groups
        .iter()
        .map(|(_, cs)| vec![0usize; cs.len()])
        .collect();

    loop {
        let mut images = vec![0usize; n];
        for (gi, (len, cs)) in groups.iter().enumerate() {
            let sigma = &sigma_lists[gi][sigma_idx[gi]];
            for (j, cycle) in cs.iter().enumerate() {
                let target = &cs[sigma[j]];
                let r = rotations[gi][j];
                for (ti, &pt) in cycle.iter().enumerate() {
                    images[pt] = target[(ti + r) % len];
                }
            }
        }
        f(&Permutation::from_images(images).expect("centralizer element is a permutation"));

        // advance the mixed-radix counter: rotations first, then sigma
        let mut carried = true;
        'adv: for (gi, (len, cs)) in groups.iter().enumerate() {
            for r in rotations[gi].iter_mut().take(cs.len()) {
                *r += 1;
                if *r < *len {
                    carried = false;
                    break 'adv;
                }
                *r = 0;
            }
            sigma_idx[gi] += 1;
            if sigma_idx[gi] < sigma_lists[gi].len() {
                carried = false;
                break;
            }
            sigma_idx[gi] = 0;
        }
        if carried {
            break;
        }
    }
}

fn all_permutation_seqs(k: usize) -> Vec<Vec<usize>> {
    let indexer = ElementIndexer::new(k);
    (0..indexer.size())
        .map(|r| indexer.unrank(r).images().to_vec())
        .collect()
}

/// The full centralizer of `pi`, refusing to enumerate past `budget`.
pub fn centralizer_elements(pi: &Permutation, budget: u64) -> Result<Vec<Permutation>, Error> {
    let order = centralizer_order(&pi.cycle_type());
    if order > budget as u128 {
        return Err(Error::BudgetExceeded {
            needed: order,
            budget,
        });
    }
    let mut out = Vec::with_capacity(order as usize);
    for_each_centralizer_element(pi, |x| out.push(x.clone()));
    Ok(out)
}

/// Iterator over all of `S_n` in rank order.
pub fn enumerate_group(n: usize) -> Result<impl Iterator<Item = Permutation>, Error> {
    enumerate_group_capped(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_group_capped(
    n: usize,
    cap: u64,
) -> Result<impl Iterator<Item = Permutation>, Error> {
    let indexer = ElementIndexer::new(n);
    if indexer.size() > cap {
        return Err(Error::BudgetExceeded {
            needed: indexer.size() as u128,
            budget: cap,
        });
    }
    Ok((0..indexer.size()).map(move |r| indexer.unrank(r)))
}

/// Iterator over `A_n` (even permutations), in rank order.
pub fn enumerate_alternating(n: usize) -> Result<impl Iterator<Item = Permutation>, Error> {
    Ok(enumerate_group(n)?.filter(|p| p.parity() == Parity::Even))
}

/// All `x` in `S_n` commuting with every element of `A_n`. Checked against a
/// generating set of `A_n`; commuting with generators is commuting with all.
pub fn centralizer_of_alternating(n: usize) -> Result<Vec<Permutation>, Error> {
    let generators: Vec<Permutation> = if n == 3 {
        vec![Permutation::from_cycles(3, &[vec![0, 1, 2]])?]
    } else {
        (2..n)
            .map(|j| Permutation::from_cycles(n, &[vec![0, 1, j]]))
            .collect::<Result<_, _>>()?
    };
    let out = enumerate_group(n)?
        .filter(|x| generators.iter().all(|g| compose(x, g) == compose(g, x)))
        .collect();
    Ok(out)
}
