use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum JumpParity {
    Odd,
    Even,
}

impl JumpParity {
    pub fn admits(self, jumps: usize) -> bool {
        (jumps % 2 == 1) == (self == JumpParity::Odd)
    }
}

/// Achievable values of (#positive - #negative) over a Fiedler chain of
/// `len` ovals. Consecutive signs agree across a jump and alternate otherwise.
/// An open chain has `len - 1` links, a closed one has `len` (the last oval
/// links back to the first).
pub fn chain_imbalance_set(
    len: usize,
    max_jumps: usize,
    parity: JumpParity,
    closed: bool,
) -> BTreeSet<i64> {
    let mut out = BTreeSet::new();
    if len == 0 {
        return out;
    }
    let links = if closed { len } else { len - 1 };
    let width = 2 * len + 1;
    let off = len as i64;
    // reach[j][v + len]: some prefix starting with + uses j jumps and has imbalance v.
    let mut reach = vec![vec![false; width]; max_jumps + 1];
    reach[0][(off + 1) as usize] = true;
    // The current oval is positive iff the number of flips so far is even.
    for step in 1..len {
        let mut next = vec![vec![false; width]; max_jumps + 1];
        for j in 0..=max_jumps {
            for v in 0..width {
                if !reach[j][v] {
                    continue;
                }
                let flips = step - 1 - j;
                let cur: i64 = if flips % 2 == 0 { 1 } else { -1 };
                if j < max_jumps {
                    let nv = (v as i64 + cur) as usize;
                    next[j + 1][nv] = true;
                }
                let nv = (v as i64 - cur) as usize;
                next[j][nv] = true;
            }
        }
        reach = next;
    }
    for j in 0..=max_jumps {
        for v in 0..width {
            if !reach[j][v] {
                continue;
            }
            let total_jumps = if closed {
                // The closing link is a jump iff the last and first signs agree.
                let last_plus = (len - 1 - j) % 2 == 0;
                j + usize::from(last_plus)
            } else {
                j
            };
            if total_jumps > max_jumps.min(links) || !parity.admits(total_jumps) {
                continue;
            }
            let imbalance = v as i64 - off;
            out.insert(imbalance);
            out.insert(-imbalance);
        }
    }
    out
}
