//! Half-spin modules of `so(2n)` on the fermionic Fock space.

use crate::error::Result;
use crate::rootsys::RootSystem;

use super::representation::{Representation, SparseMatrix};

#[derive(Clone, Copy)]
enum Op {
    Create(usize),
    Annihilate(usize),
}

/// Applies a word of creation/annihilation operators (rightmost first) to
/// the occupation state `mask`; modes are 1-based.
fn act(ops: &[Op], mut mask: u32) -> Option<(u32, i64)> {
    let mut sign = 1;
    for op in ops.iter().rev() {
        let (a, create) = match *op {
            Op::Create(a) => (a, true),
            Op::Annihilate(a) => (a, false),
        };
        let bit = 1u32 << (a - 1);
        if (mask & bit != 0) == create {
            return None;
        }
        if (mask & (bit - 1)).count_ones() % 2 == 1 {
            sign = -sign;
        }
        mask ^= bit;
    }
    Some((mask, sign))
}

/// Raising and lowering operator words for node `j`. Nodes 1 and 2 are the
/// spin leaves; node `k >= 3` sits at distance `k - 3` from the branch point
/// and corresponds to `ε_b - ε_{b+1}` with `b = n + 1 - k`.
fn generator_words(n: usize, j: usize) -> (Vec<Op>, Vec<Op>) {
    use Op::*;
    match j {
        1 => (vec![Create(n - 1), Annihilate(n)], vec![Create(n), Annihilate(n - 1)]),
        2 => (vec![Create(n - 1), Create(n)], vec![Annihilate(n), Annihilate(n - 1)]),
        k => {
            let b = n + 1 - k;
            (vec![Create(b), Annihilate(b + 1)], vec![Create(b + 1), Annihilate(b)])
        }
    }
}

pub(crate) fn half_spin(rs: &RootSystem, i: usize) -> Result<Representation> {
    let n = rs.rank();
    // ϖ_1 has n-1 occupied modes at the top, ϖ_2 has n.
    let parity = if i == 1 { (n - 1) % 2 } else { n % 2 };
    let states: Vec<u32> = (0..1u32 << n)
        .filter(|m| m.count_ones() as usize % 2 == parity)
        .collect();
    let index = |m: u32| states.binary_search(&m).expect("parity preserved");
    let matrix = |ops: &[Op]| {
        SparseMatrix::from_entries(
            states.len(),
            states.iter().enumerate().filter_map(|(col, &m)| {
                act(ops, m).map(|(out, sign)| (index(out), col, sign))
            }),
        )
    };
    let (mut raising, mut lowering) = (Vec::new(), Vec::new());
    for j in 1..=n {
        let (e, f) = generator_words(n, j);
        raising.push(matrix(&e));
        lowering.push(matrix(&f));
    }
    Representation::from_generators(rs, i, raising, lowering, None)
}
