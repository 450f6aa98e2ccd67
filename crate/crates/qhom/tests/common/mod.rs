//! Brute-force oracle for basis counts: raw index-sequence generation with
//! filters, plus a generating-function count of product monomials. This path
//! shares no code with the library's enumerator.

use qhom::loopspace::{Loops, SpaceSpec};

/// All compositions of `sum` into exactly `parts` positive integers.
fn compositions(sum: u32, parts: u32) -> Vec<Vec<u32>> {
    fn rec(sum: u32, parts: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            if sum >= 1 {
                let mut c = cur.clone();
                c.push(sum);
                out.push(c);
            }
            return;
        }
        for first in 1..=sum.saturating_sub(parts - 1) {
            cur.push(first);
            rec(sum - first, parts - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(sum, parts, &mut Vec::new(), &mut out);
    out
}

fn admissible(seq: &[u32]) -> bool {
    seq.windows(2).all(|w| w[0] <= 2 * w[1])
}

fn excess(seq: &[u32], base: u32) -> i64 {
    seq[0] as i64 - seq[1..].iter().sum::<u32>() as i64 - base as i64
}

fn min_loops(seq: &[u32], base: u32) -> u32 {
    let mut suffix = base as i64;
    let mut max = 0i64;
    for j in (0..seq.len()).rev() {
        max = max.max(seq[j] as i64 - suffix);
        suffix += seq[j] as i64;
    }
    1 + max.max(0) as u32
}

/// Degrees of every polynomial generator of the model up to `max_degree`,
/// found by filtering raw compositions. An admissible positive-excess word of
/// length `s` over a degree-`d` generator has all lower indices at least one,
/// hence degree at least `2^s (d+1) - 1`; longer sequences cannot pass the
/// filters, which bounds the scan.
pub fn oracle_generator_degrees(space: &SpaceSpec, max_degree: u32) -> Vec<u32> {
    let mut out = Vec::new();
    for gen in space.generators() {
        let d = gen.degree;
        if d > max_degree {
            continue;
        }
        if d >= 1 {
            out.push(d);
        }
        let mut s = 1u32;
        while (1u64 << s) * (d as u64 + 1) - 1 <= max_degree as u64 {
            for total in s..=(max_degree - d) {
                for seq in compositions(total, s) {
                    if !admissible(&seq) || excess(&seq, d) <= 0 {
                        continue;
                    }
                    if let Loops::Finite(l) = space.loops() {
                        if min_loops(&seq, d) > l {
                            continue;
                        }
                    }
                    out.push(d + total);
                }
            }
            s += 1;
        }
    }
    out.sort_unstable();
    out
}

/// Number of degree-`degree` monomials in the polynomial algebra on the
/// oracle generators: the coefficient of `x^degree` in the product of
/// `1/(1 - x^{deg g})`.
pub fn oracle_basis_count(space: &SpaceSpec, degree: u32) -> u64 {
    let gens = oracle_generator_degrees(space, degree);
    let n = degree as usize;
    let mut coeff = vec![0u64; n + 1];
    coeff[0] = 1;
    for d in gens {
        let d = d as usize;
        if d == 0 || d > n {
            continue;
        }
        for k in d..=n {
            coeff[k] += coeff[k - d];
        }
    }
    coeff[n]
}
