#![allow(dead_code)] // each test target uses a different subset

//! Naive recursive enumeration of ascending compositions, used as the
//! independent oracle against the successor-rule generator. Deliberately
//! shares no code with the library's iteration path.

/// All non-decreasing positive sequences summing to `n` with first part at
/// least `m`, in lexicographic order.
pub fn brute_sac(n: u64, m: u64) -> Vec<Vec<u64>> {
    assert!(n >= 1 && (1..=n).contains(&m));
    let mut out = Vec::new();
    let mut prefix = Vec::new();
    extend(n, m, &mut prefix, &mut out);
    out
}

fn extend(remaining: u64, min_part: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    for first in min_part..=remaining {
        prefix.push(first);
        if first == remaining {
            out.push(prefix.clone());
        } else if remaining - first >= first {
            extend(remaining - first, first, prefix, out);
        }
        prefix.pop();
    }
}

pub fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}
