//! Constructors for the named groups and families: cyclic, dihedral,
//! generalized quaternion, symmetric/alternating, direct and semidirect
//! products, SL/PSL over small finite fields, a squarefree-order enumerator,
//! a group-spec DSL, and a generator-file loader.

mod dsl;
mod gf;
mod loader;
mod psl;
mod squarefree;

pub use dsl::{
    build_group_spec, group_from_spec, parse_group_spec, GroupSpecAst, ParseError, SpecError,
};
pub use gf::{FiniteFieldSpec, GfTable};
pub use loader::{load_group_file, parse_group_file, LoadError};
pub use psl::{psl2, sl2};
pub use squarefree::{squarefree_groups, squarefree_groups_with_specs};

use crate::group::{Caps, Group, GroupError, IsomorphismCapExceeded};
use crate::numtheory::{gcd, is_prime};
use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ConstructError {
    /// An argument outside a constructor's domain.
    Domain {
        detail: String,
    },
    NotPrimePower {
        q: u64,
    },
    NotSquarefree {
        n: u64,
    },
    /// `r^b ≢ 1 (mod a)` or `r` not a unit mod `a`.
    InvalidAction {
        a: u64,
        b: u64,
        r: u64,
    },
    Group(GroupError),
    Isomorphism(IsomorphismCapExceeded),
}

impl fmt::Display for ConstructError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConstructError::Domain { detail } => write!(f, "domain error: {detail}"),
            ConstructError::NotPrimePower { q } => write!(f, "{q} is not a prime power"),
            ConstructError::NotSquarefree { n } => write!(f, "{n} is not squarefree"),
            ConstructError::InvalidAction { a, b, r } => {
                write!(
                    f,
                    "invalid semidirect action: {r} has no order dividing {b} in (Z/{a})^x"
                )
            }
            ConstructError::Group(e) => write!(f, "{e}"),
            ConstructError::Isomorphism(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for ConstructError {}

impl From<GroupError> for ConstructError {
    fn from(e: GroupError) -> Self {
        ConstructError::Group(e)
    }
}

impl From<IsomorphismCapExceeded> for ConstructError {
    fn from(e: IsomorphismCapExceeded) -> Self {
        ConstructError::Isomorphism(e)
    }
}

/// `Z_n`, elements `0..n` under addition mod `n`.
pub fn cyclic(n: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if n < 1 {
        return Err(ConstructError::Domain {
            detail: "cyclic group needs n >= 1".into(),
        });
    }
    let n = n as usize;
    let mut table = vec![0u16; n * n];
    for i in 0..n {
        for j in 0..n {
            table[i * n + j] = ((i + j) % n) as u16;
        }
    }
    Ok(Group::from_table(format!("Z({n})"), table, caps.order)?)
}

/// Dihedral group of order `2n`: indices `0..n` are rotations `r^a`,
/// `n..2n` are reflections `r^a s`.
pub fn dihedral(n: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if n < 1 {
        return Err(ConstructError::Domain {
            detail: "dihedral group needs n >= 1".into(),
        });
    }
    let n = n as usize;
    let m = 2 * n;
    let idx = |rot: usize, refl: bool| if refl { n + rot } else { rot };
    let mut table = vec![0u16; m * m];
    for a in 0..n {
        for b in 0..n {
            // r^a r^b, r^a (r^b s), (r^a s) r^b, (r^a s)(r^b s)
            table[idx(a, false) * m + idx(b, false)] = idx((a + b) % n, false) as u16;
            table[idx(a, false) * m + idx(b, true)] = idx((a + b) % n, true) as u16;
            table[idx(a, true) * m + idx(b, false)] = idx((a + n - b) % n, true) as u16;
            table[idx(a, true) * m + idx(b, true)] = idx((a + n - b) % n, false) as u16;
        }
    }
    Ok(Group::from_table(format!("D({n})"), table, caps.order)?)
}

/// Generalized quaternion group of order `m = 2^k`, `k ≥ 3`:
/// `⟨a, b | a^{m/2} = 1, b^2 = a^{m/4}, bab⁻¹ = a⁻¹⟩`.
pub fn generalized_quaternion(m: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if m < 8 || !m.is_power_of_two() {
        return Err(ConstructError::Domain {
            detail: format!("generalized quaternion needs a power of two >= 8, got {m}"),
        });
    }
    let m = m as usize;
    let half = m / 2;
    let idx = |p: usize, eps: bool| if eps { half + p } else { p };
    let mut table = vec![0u16; m * m];
    for i in 0..half {
        for j in 0..half {
            // a^i a^j, a^i (a^j b), (a^i b) a^j, (a^i b)(a^j b) = a^{i-j+m/4}
            table[idx(i, false) * m + idx(j, false)] = idx((i + j) % half, false) as u16;
            table[idx(i, false) * m + idx(j, true)] = idx((i + j) % half, true) as u16;
            table[idx(i, true) * m + idx(j, false)] = idx((i + half - j) % half, true) as u16;
            table[idx(i, true) * m + idx(j, true)] =
                idx((i + half - j + m / 4) % half, false) as u16;
        }
    }
    Ok(Group::from_table(format!("Q({m})"), table, caps.order)?)
}

/// `S_n` as the closure of a transposition and an `n`-cycle. `n ≤ 7`.
pub fn symmetric(n: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if n < 1 || n > 7 {
        return Err(ConstructError::Domain {
            detail: format!("symmetric group supported for 1 <= n <= 7, got {n}"),
        });
    }
    let n = n as usize;
    let mut gens: Vec<Vec<usize>> = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let cycle: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(swap);
        gens.push(cycle);
    }
    Ok(Group::from_generators(
        n,
        &gens,
        format!("S({n})"),
        caps.order,
    )?)
}

/// `A_n` as the closure of consecutive 3-cycles. `n ≤ 7`.
pub fn alternating(n: u64, caps: &Caps) -> Result<Group, ConstructError> {
    if n < 1 || n > 7 {
        return Err(ConstructError::Domain {
            detail: format!("alternating group supported for 1 <= n <= 7, got {n}"),
        });
    }
    let n = n as usize;
    let mut gens: Vec<Vec<usize>> = Vec::new();
    for i in 0..n.saturating_sub(2) {
        let mut img: Vec<usize> = (0..n).collect();
        img[i] = i + 1;
        img[i + 1] = i + 2;
        img[i + 2] = i;
        gens.push(img);
    }
    Ok(Group::from_generators(
        n,
        &gens,
        format!("A({n})"),
        caps.order,
    )?)
}

/// Componentwise product table on pairs `(g, h)`, index `g·|H| + h`.
pub fn direct_product(g: &Group, h: &Group, caps: &Caps) -> Result<Group, ConstructError> {
    let n = g
        .order()
        .checked_mul(h.order())
        .ok_or(GroupError::OrderCapExceeded {
            reached: usize::MAX,
            cap: caps.order,
        })?;
    if n > caps.order {
        return Err(ConstructError::Group(GroupError::OrderCapExceeded {
            reached: n,
            cap: caps.order,
        }));
    }
    let hn = h.order();
    let mut table = vec![0u16; n * n];
    for g1 in 0..g.order() {
        for h1 in 0..hn {
            let row = g1 * hn + h1;
            for g2 in 0..g.order() {
                for h2 in 0..hn {
                    table[row * n + g2 * hn + h2] = (g.mul(g1, g2) * hn + h.mul(h1, h2)) as u16;
                }
            }
        }
    }
    Ok(Group::from_table(
        format!("{} x {}", g.name(), h.name()),
        table,
        caps.order,
    )?)
}

/// Parameters of `Z_a ⋊_r Z_b`: the generator of `Z_b` acts on `Z_a` as
/// multiplication by `r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SemidirectSpec {
    pub a: u64,
    pub b: u64,
    pub r: u64,
}

impl SemidirectSpec {
    /// Validates that `r` is a unit mod `a` with `r^b ≡ 1 (mod a)`.
    pub fn new(a: u64, b: u64, r: u64) -> Result<Self, ConstructError> {
        if a < 1 || b < 1 {
            return Err(ConstructError::Domain {
                detail: "semidirect product needs a, b >= 1".into(),
            });
        }
        let r = if a == 1 { 0 } else { r % a };
        let spec = SemidirectSpec { a, b, r };
        if a > 1 {
            if gcd(r, a) != 1 {
                return Err(ConstructError::InvalidAction { a, b, r });
            }
            if pow_mod(r, b, a) != 1 {
                return Err(ConstructError::InvalidAction { a, b, r });
            }
        }
        Ok(spec)
    }

    /// gcd(a, b) = 1: the coprime case the extension results assume.
    pub fn is_coprime(&self) -> bool {
        gcd(self.a, self.b) == 1
    }

    /// Multiplicative order `k` of `r` mod `a`; 1 means the trivial action.
    pub fn action_order(&self) -> u64 {
        if self.a <= 1 || self.r == 1 {
            return 1;
        }
        let mut k = 1u64;
        let mut x = self.r;
        while x != 1 {
            x = x * self.r % self.a;
            k += 1;
        }
        k
    }

    pub fn name(&self) -> String {
        format!("SD({},{},{})", self.a, self.b, self.r)
    }
}

fn pow_mod(base: u64, exp: u64, modulus: u64) -> u64 {
    let mut result = 1u64 % modulus;
    let mut base = base % modulus;
    let mut exp = exp;
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    result
}

/// `Z_a ⋊_r Z_b` on pairs `(x, y)`, index `y·a + x`, with product
/// `(x₁ + r^{y₁} x₂, y₁ + y₂)`.
pub fn semidirect_cyclic(spec: &SemidirectSpec, caps: &Caps) -> Result<Group, ConstructError> {
    let a = spec.a as usize;
    let b = spec.b as usize;
    let n = a
        .checked_mul(b)
        .filter(|&n| n <= caps.order)
        .ok_or(GroupError::OrderCapExceeded {
            reached: a.saturating_mul(b),
            cap: caps.order,
        })?;

    // r^y mod a for every y.
    let mut rpow = vec![1u64 % spec.a.max(1); b];
    for y in 1..b {
        rpow[y] = rpow[y - 1] * spec.r.max(1) % spec.a.max(1);
    }

    let idx = |x: usize, y: usize| y * a + x;
    let mut table = vec![0u16; n * n];
    for x1 in 0..a {
        for y1 in 0..b {
            for x2 in 0..a {
                for y2 in 0..b {
                    let x = (x1 + (rpow[y1] as usize * x2) % a) % a;
                    let y = (y1 + y2) % b;
                    table[idx(x1, y1) * n + idx(x2, y2)] = idx(x, y) as u16;
                }
            }
        }
    }
    Ok(Group::from_table(spec.name(), table, caps.order)?)
}

/// Smallest primes strictly above `floor`, for witness families.
pub fn primes_above(floor: u64, count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = floor + 1;
    while out.len() < count {
        if is_prime(candidate) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}
