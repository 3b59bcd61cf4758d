use num_integer::Integer;

use super::moore_bound;
use crate::error::Result;
use crate::group::GroupSpec;
use crate::numtheory::{carmichael, divisors, order_dividing};

/// Candidate `m x_a n` groups whose order lies in
/// `[min_order, moore_bound(delta, diameter)]`, largest order first.
///
/// For each `(m, n)` the unit `a` is the smallest one of maximal
/// multiplicative order among units whose order divides `m`; that maximal
/// order is `gcd(m, λ(n))`. Pairs where it is 1 (only abelian groups) are
/// skipped. With `exhaustive` every admissible unit is listed instead,
/// including `a = 1`. Ties in order are broken by ascending `m`, then `a`.
pub fn enumerate_cyclic_specs(
    delta: u64,
    diameter: u32,
    min_order: u64,
    limit: usize,
    exhaustive: bool,
) -> Result<Vec<GroupSpec>> {
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    let bound = moore_bound(delta, diameter)?;
    let lowest = min_order.max(2);
    let mut order = bound;
    while order >= lowest {
        for m in divisors(order) {
            let n = order / m;
            if n < 2 {
                continue;
            }
            let target = m.gcd(&carmichael(n));
            if !exhaustive && target == 1 {
                continue;
            }
            for a in 1..n {
                if a.gcd(&n) != 1 {
                    continue;
                }
                let Some(ord) = order_dividing(a, n, m) else { continue };
                if exhaustive || ord == target {
                    out.push(GroupSpec::cyclic(m as i64, n as i64, a as i64)?);
                    if out.len() == limit {
                        return Ok(out);
                    }
                    if !exhaustive {
                        break;
                    }
                }
            }
        }
        order -= 1;
    }
    Ok(out)
}
