//! Exact arithmetic in the three nonabelian group families built from cyclic
//! groups:
//!
//! * `m x_a n`: `Z_m` acting on `Z_n` through a unit `a` whose multiplicative
//!   order divides `m`, with `[x, y][u, v] = [x + u, y a^u + v]`.
//! * `m x_s n^2`: `Z_m` acting on `Z_n x Z_n` through a 2x2 matrix `s` whose
//!   order divides `m`, with `[c, d, e][f, g, h] = [c + f, [d, e] s^f + [g, h]]`.
//! * `[m x_a n]^2`: `G = m x_a n` acting on itself by conjugation, elements
//!   are quadruples `[g1, g2]` and `(g1, g2)(h1, h2) = (g1 h1, h1^-1 g2 h1 h2)`.
//!
//! Every family fixes an [`Element`] arity and a mixed-radix dense index
//! (leftmost coordinate most significant) used by the graph code.

mod element;
mod presentation;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numtheory::mul_mod;

pub use element::{Element, MAX_ARITY};
pub use presentation::{PresentationReport, RelatorCheck};

/// Largest modulus accepted for `m` and `n`; also bounds `m * n` for the
/// doubled family so that every index fits in a `u64`.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// 2x2 matrix over `Z_n`, row-major: `[[x, y], [z, t]]` maps `[1, 0]` to
/// `[x, y]` and `[0, 1]` to `[z, t]`. Row vectors multiply on the left.
pub type Mat2 = [[u64; 2]; 2];

fn mat_mul(a: &Mat2, b: &Mat2, n: u64) -> Mat2 {
    let mut out = [[0; 2]; 2];
    for (i, row) in out.iter_mut().enumerate() {
        for (j, cell) in row.iter_mut().enumerate() {
            *cell = (mul_mod(a[i][0], b[0][j], n) + mul_mod(a[i][1], b[1][j], n)) % n;
        }
    }
    out
}

#[inline]
fn vec_mat(d: u64, e: u64, m: &Mat2, n: u64) -> (u64, u64) {
    (
        (mul_mod(d, m[0][0], n) + mul_mod(e, m[1][0], n)) % n,
        (mul_mod(d, m[0][1], n) + mul_mod(e, m[1][1], n)) % n,
    )
}

const IDENTITY_MAT: Mat2 = [[1, 0], [0, 1]];

/// Cached powers `p[k]` of the acting automorphism for `k` in `[0, m)`.
///
/// Because the automorphism's order divides `m`, `p[(j + k) mod m] = p[j] p[k]`
/// and every exponent can be reduced mod `m` before lookup.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PowerTable<T> {
    powers: Vec<T>,
}

impl<T: Copy> PowerTable<T> {
    #[inline]
    pub fn get(&self, k: u64) -> T {
        self.powers[(k % self.powers.len() as u64) as usize]
    }

    pub fn as_slice(&self) -> &[T] {
        &self.powers
    }

    pub fn len(&self) -> usize {
        self.powers.len()
    }

    pub fn is_empty(&self) -> bool {
        self.powers.is_empty()
    }
}

/// Unvalidated group parameters, exactly as they appear in JSON.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase", deny_unknown_fields)]
pub enum RawGroupSpec {
    Cyclic { m: i64, n: i64, a: i64 },
    Square { m: i64, n: i64, sigma: [[i64; 2]; 2] },
    Doubled { m: i64, n: i64, a: i64 },
}

impl RawGroupSpec {
    pub fn validate(&self) -> Result<GroupSpec> {
        GroupSpec::try_from(self.clone())
    }
}

/// `m x_a n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectCyclicSpec {
    m: u64,
    n: u64,
    a: u64,
    powers: PowerTable<u64>,
}

impl SemidirectCyclicSpec {
    pub fn new(m: i64, n: i64, a: i64) -> Result<Self> {
        let (m, n) = check_moduli(m, n)?;
        let a = a.rem_euclid(n as i64) as u64;
        if a.gcd(&n) != 1 {
            return Err(Error::NotAUnit { what: "a", value: a, modulus: n });
        }
        let mut powers = Vec::with_capacity(m as usize);
        let mut p = 1 % n;
        for _ in 0..m {
            powers.push(p);
            p = mul_mod(p, a, n);
        }
        if p != 1 % n {
            return Err(Error::OrderMismatch { what: "a", m });
        }
        Ok(SemidirectCyclicSpec { m, n, a, powers: PowerTable { powers } })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn powers(&self) -> &PowerTable<u64> {
        &self.powers
    }

    pub fn order(&self) -> u64 {
        self.m * self.n
    }

    #[inline]
    fn mul(&self, x: u64, y: u64, u: u64, v: u64) -> (u64, u64) {
        let n = self.n;
        ((x + u) % self.m, (mul_mod(y, self.powers.get(u), n) + v) % n)
    }

    #[inline]
    fn inv(&self, x: u64, y: u64) -> (u64, u64) {
        let n = self.n;
        let nx = (self.m - x) % self.m;
        (nx, (n - mul_mod(y, self.powers.get(nx), n)) % n)
    }
}

/// `m x_s n^2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemidirectSquareSpec {
    m: u64,
    n: u64,
    sigma: Mat2,
    powers: PowerTable<Mat2>,
}

impl SemidirectSquareSpec {
    pub fn new(m: i64, n: i64, sigma: [[i64; 2]; 2]) -> Result<Self> {
        let (m, n) = check_moduli(m, n)?;
        let r = |v: i64| v.rem_euclid(n as i64) as u64;
        let sigma = [[r(sigma[0][0]), r(sigma[0][1])], [r(sigma[1][0]), r(sigma[1][1])]];
        let det = (mul_mod(sigma[0][0], sigma[1][1], n) + n - mul_mod(sigma[0][1], sigma[1][0], n)) % n;
        if det.gcd(&n) != 1 {
            return Err(Error::NotAUnit { what: "det(sigma)", value: det, modulus: n });
        }
        let one = IDENTITY_MAT.map(|row| row.map(|v| v % n));
        let mut powers = Vec::with_capacity(m as usize);
        let mut p = one;
        for _ in 0..m {
            powers.push(p);
            p = mat_mul(&p, &sigma, n);
        }
        if p != one {
            return Err(Error::OrderMismatch { what: "sigma", m });
        }
        Ok(SemidirectSquareSpec { m, n, sigma, powers: PowerTable { powers } })
    }

    pub fn m(&self) -> u64 {
        self.m
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn sigma(&self) -> Mat2 {
        self.sigma
    }

    pub fn powers(&self) -> &PowerTable<Mat2> {
        &self.powers
    }

    pub fn order(&self) -> u64 {
        self.m * self.n * self.n
    }
}

/// `[m x_a n]^2`, the base group acting on itself by conjugation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubledSpec {
    base: SemidirectCyclicSpec,
}

impl DoubledSpec {
    pub fn new(m: i64, n: i64, a: i64) -> Result<Self> {
        let base = SemidirectCyclicSpec::new(m, n, a)?;
        if base.order() > MAX_MODULUS {
            return Err(Error::BadParameter(format!(
                "m * n = {} exceeds {MAX_MODULUS} for a doubled group",
                base.order()
            )));
        }
        Ok(DoubledSpec { base })
    }

    pub fn base(&self) -> &SemidirectCyclicSpec {
        &self.base
    }

    pub fn order(&self) -> u64 {
        self.base.order() * self.base.order()
    }
}

fn check_moduli(m: i64, n: i64) -> Result<(u64, u64)> {
    if m < 1 {
        return Err(Error::BadParameter(format!("m = {m} must be at least 1")));
    }
    if n < 2 {
        return Err(Error::BadParameter(format!("n = {n} must be at least 2")));
    }
    let (m, n) = (m as u64, n as u64);
    if m > MAX_MODULUS || n > MAX_MODULUS {
        return Err(Error::BadParameter(format!("moduli m = {m}, n = {n} must not exceed {MAX_MODULUS}")));
    }
    Ok((m, n))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Cyclic,
    Square,
    Doubled,
}

/// A validated group from one of the three families.
///
/// Serializes as the raw JSON object (`{"family": ..., "m": ..., ...}`) and
/// validates on deserialization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGroupSpec", into = "RawGroupSpec")]
pub enum GroupSpec {
    Cyclic(SemidirectCyclicSpec),
    Square(SemidirectSquareSpec),
    Doubled(DoubledSpec),
}

impl TryFrom<RawGroupSpec> for GroupSpec {
    type Error = Error;

    fn try_from(raw: RawGroupSpec) -> Result<Self> {
        Ok(match raw {
            RawGroupSpec::Cyclic { m, n, a } => GroupSpec::Cyclic(SemidirectCyclicSpec::new(m, n, a)?),
            RawGroupSpec::Square { m, n, sigma } => {
                GroupSpec::Square(SemidirectSquareSpec::new(m, n, sigma)?)
            }
            RawGroupSpec::Doubled { m, n, a } => GroupSpec::Doubled(DoubledSpec::new(m, n, a)?),
        })
    }
}

impl From<GroupSpec> for RawGroupSpec {
    fn from(spec: GroupSpec) -> Self {
        spec.to_raw()
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(g) => write!(f, "{} x_{} {}", g.m, g.a, g.n),
            GroupSpec::Square(g) => {
                let s = g.sigma;
                write!(f, "{} x_s {}^2 (s = [{} {}; {} {}])", g.m, g.n, s[0][0], s[0][1], s[1][0], s[1][1])
            }
            GroupSpec::Doubled(g) => write!(f, "[{} x_{} {}]^2", g.base.m, g.base.a, g.base.n),
        }
    }
}

impl GroupSpec {
    pub fn cyclic(m: i64, n: i64, a: i64) -> Result<Self> {
        SemidirectCyclicSpec::new(m, n, a).map(GroupSpec::Cyclic)
    }

    pub fn square(m: i64, n: i64, sigma: [[i64; 2]; 2]) -> Result<Self> {
        SemidirectSquareSpec::new(m, n, sigma).map(GroupSpec::Square)
    }

    pub fn doubled(m: i64, n: i64, a: i64) -> Result<Self> {
        DoubledSpec::new(m, n, a).map(GroupSpec::Doubled)
    }

    pub fn to_raw(&self) -> RawGroupSpec {
        match self {
            GroupSpec::Cyclic(g) => RawGroupSpec::Cyclic { m: g.m as i64, n: g.n as i64, a: g.a as i64 },
            GroupSpec::Square(g) => RawGroupSpec::Square {
                m: g.m as i64,
                n: g.n as i64,
                sigma: g.sigma.map(|row| row.map(|v| v as i64)),
            },
            GroupSpec::Doubled(g) => {
                RawGroupSpec::Doubled { m: g.base.m as i64, n: g.base.n as i64, a: g.base.a as i64 }
            }
        }
    }

    pub fn family(&self) -> Family {
        match self {
            GroupSpec::Cyclic(_) => Family::Cyclic,
            GroupSpec::Square(_) => Family::Square,
            GroupSpec::Doubled(_) => Family::Doubled,
        }
    }

    /// Number of group elements.
    pub fn order(&self) -> u64 {
        match self {
            GroupSpec::Cyclic(g) => g.order(),
            GroupSpec::Square(g) => g.order(),
            GroupSpec::Doubled(g) => g.order(),
        }
    }

    pub fn arity(&self) -> usize {
        match self {
            GroupSpec::Cyclic(_) => 2,
            GroupSpec::Square(_) => 3,
            GroupSpec::Doubled(_) => 4,
        }
    }

    /// Coordinate ranges, leftmost first.
    pub fn radices(&self) -> Vec<u64> {
        let (radix, arity) = self.radix_array();
        radix[..arity].to_vec()
    }

    fn radix_array(&self) -> ([u64; MAX_ARITY], usize) {
        match self {
            GroupSpec::Cyclic(g) => ([g.m, g.n, 0, 0], 2),
            GroupSpec::Square(g) => ([g.m, g.n, g.n, 0], 3),
            GroupSpec::Doubled(g) => ([g.base.m, g.base.n, g.base.m, g.base.n], 4),
        }
    }

    /// True when the action is trivial, i.e. the group is abelian and useless
    /// for dense Cayley graphs.
    pub fn is_abelian(&self) -> bool {
        match self {
            GroupSpec::Cyclic(g) => g.a == 1 % g.n,
            GroupSpec::Square(g) => g.sigma == IDENTITY_MAT,
            GroupSpec::Doubled(g) => g.base.a == 1 % g.base.n,
        }
    }

    pub fn identity(&self) -> Element {
        Element::zeros(self.arity())
    }

    /// Builds an element, checking arity and coordinate ranges.
    pub fn element(&self, coords: &[u64]) -> Result<Element> {
        let (radix, arity) = self.radix_array();
        if coords.len() != arity || coords.iter().zip(&radix).any(|(c, r)| c >= r) {
            return Err(Error::CoordinateOutOfRange {
                element: coords.to_vec(),
                ranges: radix[..arity].to_vec(),
            });
        }
        Ok(Element::new(coords))
    }

    pub fn check(&self, g: &Element) -> Result<()> {
        let (radix, arity) = self.radix_array();
        if g.arity() != arity || g.coords().iter().zip(&radix).any(|(c, r)| c >= r) {
            return Err(Error::out_of_range(g, &radix[..arity]));
        }
        Ok(())
    }

    pub fn contains(&self, g: &Element) -> bool {
        self.check(g).is_ok()
    }

    pub fn multiply(&self, g: &Element, h: &Element) -> Result<Element> {
        self.check(g)?;
        self.check(h)?;
        Ok(self.mul_unchecked(g, h))
    }

    /// Product of two in-range elements. Coordinates are not re-checked.
    #[inline]
    pub fn mul_unchecked(&self, g: &Element, h: &Element) -> Element {
        let a = g.coords();
        let b = h.coords();
        match self {
            GroupSpec::Cyclic(s) => {
                let (x, y) = s.mul(a[0], a[1], b[0], b[1]);
                Element::new(&[x, y])
            }
            GroupSpec::Square(s) => {
                let n = s.n;
                let (d, e) = vec_mat(a[1], a[2], &s.powers.get(b[0]), n);
                Element::new(&[(a[0] + b[0]) % s.m, (d + b[1]) % n, (e + b[2]) % n])
            }
            GroupSpec::Doubled(s) => {
                let base = &s.base;
                let (m, n) = (base.m, base.n);
                let p = &base.powers;
                let (x1, x2, x3, x4) = (a[0], a[1], a[2], a[3]);
                let (y1, y2, y3, y4) = (b[0], b[1], b[2], b[3]);
                let (z1, z2) = base.mul(x1, x2, y1, y2);
                let z3 = (x3 + y3) % m;
                // x4 a^(y1+y3) + y2 a^y3 - y2 a^(x3+y3) + y4
                let t1 = mul_mod(x4, p.get(y1 + y3), n);
                let t2 = mul_mod(y2, p.get(y3), n);
                let t3 = mul_mod(y2, p.get(x3 + y3), n);
                let z4 = (t1 + t2 + (n - t3) + y4) % n;
                Element::new(&[z1, z2, z3, z4])
            }
        }
    }

    pub fn inverse(&self, g: &Element) -> Result<Element> {
        self.check(g)?;
        Ok(self.inv_unchecked(g))
    }

    #[inline]
    pub fn inv_unchecked(&self, g: &Element) -> Element {
        let a = g.coords();
        match self {
            GroupSpec::Cyclic(s) => {
                let (x, y) = s.inv(a[0], a[1]);
                Element::new(&[x, y])
            }
            GroupSpec::Square(s) => {
                // [c, v]^-1 = [-c, -v s^-c]
                let (m, n) = (s.m, s.n);
                let nc = (m - a[0]) % m;
                let (d, e) = vec_mat(a[1], a[2], &s.powers.get(nc), n);
                Element::new(&[nc, (n - d) % n, (n - e) % n])
            }
            GroupSpec::Doubled(s) => {
                // (g1, g2)^-1 = (g1^-1, g1 g2^-1 g1^-1)
                let base = &s.base;
                let (i1, i2) = base.inv(a[0], a[1]);
                let (h1, h2) = base.inv(a[2], a[3]);
                let (t1, t2) = base.mul(a[0], a[1], h1, h2);
                let (w1, w2) = base.mul(t1, t2, i1, i2);
                Element::new(&[i1, i2, w1, w2])
            }
        }
    }

    /// `g^k` for a possibly negative exponent, by square-and-multiply.
    pub fn pow(&self, g: &Element, k: i64) -> Result<Element> {
        self.check(g)?;
        let mut base = if k < 0 { self.inv_unchecked(g) } else { *g };
        let mut e = k.unsigned_abs();
        let mut acc = self.identity();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_unchecked(&acc, &base);
            }
            base = self.mul_unchecked(&base, &base);
            e >>= 1;
        }
        Ok(acc)
    }

    /// Smallest `k >= 1` with `g^k = e`, found by repeated multiplication.
    pub fn element_order(&self, g: &Element) -> Result<u64> {
        self.check(g)?;
        let id = self.identity();
        let cap = self.order() + 1;
        let mut acc = *g;
        let mut k = 1;
        while acc != id {
            acc = self.mul_unchecked(&acc, g);
            k += 1;
            assert!(k <= cap, "element order exceeded |G| = {}", self.order());
        }
        Ok(k)
    }

    /// Mixed-radix dense index, leftmost coordinate most significant.
    pub fn index(&self, g: &Element) -> Result<u64> {
        self.check(g)?;
        Ok(self.index_unchecked(g))
    }

    #[inline]
    pub fn index_unchecked(&self, g: &Element) -> u64 {
        let (radix, _) = self.radix_array();
        g.coords().iter().zip(&radix).fold(0, |acc, (&c, &r)| acc * r + c)
    }

    pub fn unindex(&self, i: u64) -> Result<Element> {
        let order = self.order();
        if i >= order {
            return Err(Error::IndexOutOfRange { index: i, order });
        }
        Ok(self.unindex_unchecked(i))
    }

    #[inline]
    pub fn unindex_unchecked(&self, mut i: u64) -> Element {
        let (radix, arity) = self.radix_array();
        let mut coords = [0u64; MAX_ARITY];
        for k in (0..arity).rev() {
            coords[k] = i % radix[k];
            i /= radix[k];
        }
        Element::new(&coords[..arity])
    }

    /// Index of `unindex(v) * s`; the edge map of the Cayley graph.
    #[inline]
    pub fn mul_index(&self, v: u64, s: &Element) -> u64 {
        self.index_unchecked(&self.mul_unchecked(&self.unindex_unchecked(v), s))
    }

    /// Evaluates every relator of the family's defining presentation.
    pub fn check_presentation(&self) -> PresentationReport {
        presentation::check(self)
    }
}
