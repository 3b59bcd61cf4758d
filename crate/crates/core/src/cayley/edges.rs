use crate::group::{GroupSpec, Mat2};
use crate::numtheory::mul_mod;

/// Right multiplication by each generator, specialised to dense indices.
///
/// Powers of the action that depend only on the generator are looked up
/// once here, so a step costs a handful of divisions.
pub(crate) enum EdgeMap<'a> {
    Cyclic {
        m: u64,
        n: u64,
        /// `(u, v, a^u)` per generator `[u, v]`.
        gens: Vec<(u64, u64, u64)>,
    },
    Square {
        m: u64,
        n: u64,
        /// `(f, g, h, s^f)` per generator `[f, g, h]`.
        gens: Vec<(u64, u64, u64, Mat2)>,
    },
    Doubled {
        m: u64,
        n: u64,
        powers: &'a [u64],
        gens: Vec<DoubledGen>,
    },
}

pub(crate) struct DoubledGen {
    y1: u64,
    y2: u64,
    y3: u64,
    y4: u64,
    /// `a^y1`
    p1: u64,
    /// `a^(y1 + y3)`
    p13: u64,
    /// `a^y3`
    p3: u64,
}

impl<'a> EdgeMap<'a> {
    /// `gens` must already be range-checked against `spec`.
    pub(crate) fn new(spec: &'a GroupSpec, gens: &[crate::group::Element]) -> Self {
        match spec {
            GroupSpec::Cyclic(g) => EdgeMap::Cyclic {
                m: g.m(),
                n: g.n(),
                gens: gens
                    .iter()
                    .map(|s| {
                        let c = s.coords();
                        (c[0], c[1], g.powers().get(c[0]))
                    })
                    .collect(),
            },
            GroupSpec::Square(g) => EdgeMap::Square {
                m: g.m(),
                n: g.n(),
                gens: gens
                    .iter()
                    .map(|s| {
                        let c = s.coords();
                        (c[0], c[1], c[2], g.powers().get(c[0]))
                    })
                    .collect(),
            },
            GroupSpec::Doubled(d) => {
                let b = d.base();
                let p = b.powers();
                EdgeMap::Doubled {
                    m: b.m(),
                    n: b.n(),
                    powers: p.as_slice(),
                    gens: gens
                        .iter()
                        .map(|s| {
                            let c = s.coords();
                            DoubledGen {
                                y1: c[0],
                                y2: c[1],
                                y3: c[2],
                                y4: c[3],
                                p1: p.get(c[0]),
                                p13: p.get(c[0] + c[2]),
                                p3: p.get(c[2]),
                            }
                        })
                        .collect(),
                }
            }
        }
    }

    /// Index of `unindex(v) * gens[k]`.
    #[inline]
    pub(crate) fn apply(&self, v: u64, k: usize) -> u64 {
        match self {
            EdgeMap::Cyclic { m, n, gens } => {
                let (m, n) = (*m, *n);
                let (u, w, c) = gens[k];
                let x = v / n;
                let y = v - x * n;
                let mut nx = x + u;
                if nx >= m {
                    nx -= m;
                }
                nx * n + (mul_mod(y, c, n) + w) % n
            }
            EdgeMap::Square { m, n, gens } => {
                let (m, n) = (*m, *n);
                let (f, g, h, p) = &gens[k];
                let t = v / n;
                let e = v - t * n;
                let c = t / n;
                let d = t - c * n;
                let mut nc = c + f;
                if nc >= m {
                    nc -= m;
                }
                let nd = (mul_mod(d, p[0][0], n) + mul_mod(e, p[1][0], n) + g) % n;
                let ne = (mul_mod(d, p[0][1], n) + mul_mod(e, p[1][1], n) + h) % n;
                (nc * n + nd) * n + ne
            }
            EdgeMap::Doubled { m, n, powers, gens } => {
                let (m, n) = (*m, *n);
                let s = &gens[k];
                let t = v / n;
                let x4 = v - t * n;
                let t2 = t / m;
                let x3 = t - t2 * m;
                let x1 = t2 / n;
                let x2 = t2 - x1 * n;

                let mut z1 = x1 + s.y1;
                if z1 >= m {
                    z1 -= m;
                }
                let z2 = (mul_mod(x2, s.p1, n) + s.y2) % n;
                let mut z3 = x3 + s.y3;
                if z3 >= m {
                    z3 -= m;
                }
                // z3 = x3 + y3 mod m, so a^(x3 + y3) = powers[z3].
                let neg = mul_mod(s.y2, powers[z3 as usize], n);
                let z4 = (mul_mod(x4, s.p13, n) + mul_mod(s.y2, s.p3, n) + (n - neg) + s.y4) % n;
                ((z1 * n + z2) * m + z3) * n + z4
            }
        }
    }

    pub(crate) fn degree(&self) -> usize {
        match self {
            EdgeMap::Cyclic { gens, .. } => gens.len(),
            EdgeMap::Square { gens, .. } => gens.len(),
            EdgeMap::Doubled { gens, .. } => gens.len(),
        }
    }
}
