//! Brute-force quandle isomorphism oracle for small instances: backtracking
//! over bijections with pruning by per-element invariant vectors, plus
//! forced-assignment propagation through the homomorphism equation.

use std::collections::{BTreeMap, HashMap};

use crate::autgroup::Automorphism;
use crate::perm::{conjugate, Permutation};
use crate::quandle::{distinct_rows, general_alexander, is_quandle_homomorphism, FiniteQuandle};
use crate::symgroup::ElementIndexer;
use crate::Error;

/// Default size cap for the search; 720 is allowed in slow mode.
pub const DEFAULT_ISO_CAP: usize = 200;

/// Closure cap for the inner-group certificate; inn(Q(S_6, psi)) tops out
/// at 2880.
const INNER_CERT_CAP: u64 = 5040;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsoResult {
    pub isomorphic: bool,
    /// Bijection `f` with `f ∘ s_x = s'_{f(x)} ∘ f` for all `x`, when found.
    pub witness: Option<Vec<usize>>,
}

/// Per-element invariant vector: (order of the row, sorted cycle lengths of
/// the row, size of the orbit of the element under the group generated by all
/// rows). Isomorphisms preserve all three.
fn element_invariants(q: &FiniteQuandle) -> Vec<(u64, Vec<usize>, usize)> {
    let n = q.size();
    let row_data: Vec<(u64, Vec<usize>)> = (0..n)
        .map(|x| {
            let p = Permutation::from_images(q.row(x).to_vec()).expect("row is a permutation");
            let mut lens: Vec<usize> = p.cycle_type().parts().to_vec();
            lens.sort_unstable();
            (p.order(), lens)
        })
        .collect();
    // orbits of the point action of <rows>
    let mut orbit_id = vec![usize::MAX; n];
    let mut orbit_size = Vec::new();
    for start in 0..n {
        if orbit_id[start] != usize::MAX {
            continue;
        }
        let oid = orbit_size.len();
        let mut stack = vec![start];
        orbit_id[start] = oid;
        let mut count = 0usize;
        while let Some(p) = stack.pop() {
            count += 1;
            for x in 0..n {
                let img = q.s(x, p);
                if orbit_id[img] == usize::MAX {
                    orbit_id[img] = oid;
                    stack.push(img);
                }
            }
        }
        orbit_size.push(count);
    }
    (0..n)
        .map(|x| {
            let (ord, lens) = row_data[x].clone();
            (ord, lens, orbit_size[orbit_id[x]])
        })
        .collect()
}

/// `a ∘ b` on raw image vectors (apply `b` first).
fn comp(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

fn invert(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &v) in a.iter().enumerate() {
        out[v] = i;
    }
    out
}

/// The subgroup generated by `gens` (image vectors over `n` points), as the
/// element list plus an index map, or `None` past the cap.
type Closure = (Vec<Vec<usize>>, HashMap<Vec<usize>, usize>);

fn closure(n: usize, gens: &[Vec<usize>]) -> Option<Closure> {
    let mut elems = vec![(0..n).collect::<Vec<usize>>()];
    let mut index = HashMap::new();
    index.insert(elems[0].clone(), 0);
    let mut next = 0;
    while next < elems.len() {
        let cur = elems[next].clone();
        next += 1;
        for g in gens {
            let prod = comp(&cur, g);
            if !index.contains_key(&prod) {
                if elems.len() as u64 >= INNER_CERT_CAP {
                    return None;
                }
                index.insert(prod.clone(), elems.len());
                elems.push(prod);
            }
        }
    }
    Some((elems, index))
}

/// (order, element-order histogram, sorted conjugacy class sizes) of the
/// group generated by the rows, or `None` when the closure exceeds the
/// certificate cap. An isomorphism `f` conjugates `s_x` to `s'_{f(x)}`, so
/// it carries the inner group of `q` isomorphically onto that of `r`; all
/// three components are therefore quandle invariants.
fn inner_group_signature(
    q: &FiniteQuandle,
) -> Option<(usize, BTreeMap<u64, usize>, Vec<usize>)> {
    let n = q.size();
    // the rows are heavily redundant as generators (homogeneous quandles
    // have few distinct ones and even those overlap); a greedy pass keeps
    // the generating set logarithmic, which makes the conjugation orbits
    // below cheap
    let mut rows: Vec<Vec<usize>> = distinct_rows(q).into_keys().collect();
    rows.sort_unstable();
    let mut gens: Vec<Vec<usize>> = Vec::new();
    let (elems, index) = {
        let mut state = closure(n, &gens)?;
        for row in rows {
            if !state.1.contains_key(&row) {
                gens.push(row);
                state = closure(n, &gens)?;
            }
        }
        state
    };
    let m = elems.len();
    let mut order_histogram: BTreeMap<u64, usize> = BTreeMap::new();
    for v in &elems {
        let p = Permutation::from_images(v.clone()).expect("closure element");
        *order_histogram.entry(p.order()).or_insert(0) += 1;
    }
    // conjugacy classes = orbits of conjugation by the generators
    let gen_pairs: Vec<(Vec<usize>, Vec<usize>)> =
        gens.into_iter().map(|g| (invert(&g), g)).collect();
    let mut class_of = vec![usize::MAX; m];
    let mut class_sizes = Vec::new();
    for start in 0..m {
        if class_of[start] != usize::MAX {
            continue;
        }
        let cid = class_sizes.len();
        class_of[start] = cid;
        let mut stack = vec![start];
        let mut size = 0usize;
        while let Some(i) = stack.pop() {
            size += 1;
            for (gi, g) in &gen_pairs {
                let conj = comp(&comp(g, &elems[i]), gi);
                let j = index[&conj];
                if class_of[j] == usize::MAX {
                    class_of[j] = cid;
                    stack.push(j);
                }
            }
        }
        class_sizes.push(size);
    }
    class_sizes.sort_unstable();
    Some((m, order_histogram, class_sizes))
}

/// Cheap whole-quandle invariants checked before any search: common row
/// order, distinct-row count, the same pair for every power quandle, and the
/// inner-group signature. A mismatch certifies non-isomorphism outright;
/// without one the backtracking search decides. This is what lets the
/// 720-point oracle refute the hard S_6 pairs (homogeneous quandles, so the
/// per-element invariants cannot prune anything) in milliseconds instead of
/// exhausting the search tree.
fn global_negative_certificate(q: &FiniteQuandle, r: &FiniteQuandle) -> bool {
    if q.order().ok() != r.order().ok() {
        return true;
    }
    if distinct_rows(q).len() != distinct_rows(r).len() {
        return true;
    }
    if let Ok(ord) = q.order() {
        for i in 2..ord {
            let (qi, ri) = (q.power(i), r.power(i));
            if qi.order().ok() != ri.order().ok()
                || distinct_rows(&qi).len() != distinct_rows(&ri).len()
            {
                return true;
            }
        }
    }
    matches!(
        (inner_group_signature(q), inner_group_signature(r)),
        (Some(a), Some(b)) if a != b
    )
}

/// Decides whether `q` and `r` are isomorphic quandles; sound and complete
/// within the size cap. A returned witness is re-verified on all pairs,
/// independent of the search internals.
pub fn are_isomorphic(q: &FiniteQuandle, r: &FiniteQuandle, cap: usize) -> Result<IsoResult, Error> {
    if q.size() != r.size() {
        return Ok(IsoResult {
            isomorphic: false,
            witness: None,
        });
    }
    let n = q.size();
    if n > cap {
        return Err(Error::IsoCapExceeded { size: n, cap });
    }
    if n == 0 {
        return Ok(IsoResult {
            isomorphic: true,
            witness: Some(vec![]),
        });
    }

    let inv_q = element_invariants(q);
    let inv_r = element_invariants(r);
    {
        let mut a = inv_q.clone();
        let mut b = inv_r.clone();
        a.sort();
        b.sort();
        if a != b {
            return Ok(IsoResult {
                isomorphic: false,
                witness: None,
            });
        }
    }
    if global_negative_certificate(q, r) {
        return Ok(IsoResult {
            isomorphic: false,
            witness: None,
        });
    }

    // search order: rarest invariant class first, deterministic tie-break
    let mut order: Vec<usize> = (0..n).collect();
    let class_size = |x: usize| inv_q.iter().filter(|v| **v == inv_q[x]).count();
    order.sort_by_key(|&x| (class_size(x), x));

    let mut search = Search {
        q,
        r,
        inv_q: &inv_q,
        inv_r: &inv_r,
        fwd: vec![usize::MAX; n],
        used: vec![false; n],
        assigned: Vec::new(),
        order,
    };
    if search.solve(0) {
        let witness = search.fwd.clone();
        assert!(
            is_quandle_homomorphism(q, r, &witness),
            "search returned a non-homomorphism witness"
        );
        Ok(IsoResult {
            isomorphic: true,
            witness: Some(witness),
        })
    } else {
        Ok(IsoResult {
            isomorphic: false,
            witness: None,
        })
    }
}

struct Search<'a> {
    q: &'a FiniteQuandle,
    r: &'a FiniteQuandle,
    inv_q: &'a [(u64, Vec<usize>, usize)],
    inv_r: &'a [(u64, Vec<usize>, usize)],
    /// partial map Q -> R
    fwd: Vec<usize>,
    used: Vec<bool>,
    /// assignment trail, for propagation and undo
    assigned: Vec<usize>,
    order: Vec<usize>,
}

impl<'a> Search<'a> {
    fn solve(&mut self, depth: usize) -> bool {
        // next unmapped element in the chosen order
        let x = match self.order.iter().find(|&&x| self.fwd[x] == usize::MAX) {
            None => return true,
            Some(&x) => x,
        };
        let _ = depth;
        for y in 0..self.r.size() {
            if self.used[y] || self.inv_r[y] != self.inv_q[x] {
                continue;
            }
            let mark = self.assigned.len();
            if self.assign(x, y) && self.propagate(mark) && self.solve(depth + 1) {
                return true;
            }
            self.undo(mark);
        }
        false
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.fwd[x] != usize::MAX {
            return self.fwd[x] == y;
        }
        if self.used[y] || self.inv_q[x] != self.inv_r[y] {
            return false;
        }
        self.fwd[x] = y;
        self.used[y] = true;
        self.assigned.push(x);
        true
    }

    /// Closes the partial map under `f(s_a(b)) = s'_{f(a)}(f(b))` for every
    /// pair of assigned elements; fails on any conflict.
    fn propagate(&mut self, mut frontier_start: usize) -> bool {
        while frontier_start < self.assigned.len() {
            let a = self.assigned[frontier_start];
            frontier_start += 1;
            let fa = self.fwd[a];
            // iterate over a snapshot: new assignments get their own turn
            for i in 0..self.assigned.len() {
                let b = self.assigned[i];
                let fb = self.fwd[b];
                let img1 = self.q.s(a, b);
                let tgt1 = self.r.s(fa, fb);
                if !self.assign(img1, tgt1) {
                    return false;
                }
                let img2 = self.q.s(b, a);
                let tgt2 = self.r.s(fb, fa);
                if !self.assign(img2, tgt2) {
                    return false;
                }
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.assigned.len() > mark {
            let x = self.assigned.pop().unwrap();
            let y = self.fwd[x];
            self.fwd[x] = usize::MAX;
            self.used[y] = false;
        }
    }
}

/// The explicit isomorphism `Q(S_n, Inner(pi)) -> Q(S_n, Inner(pi^tau))`
/// given by `x ↦ rank(tau·unrank(x)·tau^{-1})`. Asserts the homomorphism
/// equation on all pairs; failure signals an implementation bug.
pub fn conjugate_iso_witness(
    n: usize,
    pi: &Permutation,
    tau: &Permutation,
) -> Result<Vec<usize>, Error> {
    let indexer = ElementIndexer::new(n);
    let witness: Vec<usize> = (0..indexer.size())
        .map(|r| indexer.rank(&conjugate(&indexer.unrank(r), tau)) as usize)
        .collect();
    let q = general_alexander(n, &Automorphism::inner(pi.clone()), indexer.size())?;
    let pi_tau = conjugate(pi, tau);
    let r = general_alexander(n, &Automorphism::inner(pi_tau), indexer.size())?;
    assert!(
        is_quandle_homomorphism(&q, &r, &witness),
        "conjugation witness failed the homomorphism equation"
    );
    Ok(witness)
}
