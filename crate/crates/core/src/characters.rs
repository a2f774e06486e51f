//! Dirichlet characters with exact unit-circle arithmetic.
//!
//! A character mod q is identified by its Conrey label: an integer m coprime
//! to q. Writing (ℤ/qℤ)^× as a product of cyclic groups with fixed generators
//! (one per odd prime-power factor, the pair {−1, 5} for 2^k with k ≥ 3), the
//! character labelled m sends n to e(a·b/φ) on each factor, where a, b are the
//! discrete logs of m and n and e(t) = exp(2πit). Label 1 is always the
//! principal character, and conjugation inverts the label mod q.
//!
//! Character values are kept exact as rational "turns": the value e(k/m) is
//! stored as the reduced fraction k/m ∈ [0, 1), with a separate marker for the
//! zero value at non-units. Products only ever add turns mod 1, so the group
//! laws hold exactly; floats appear only at the `to_complex` boundary.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use num_complex::Complex64;
use num_integer::Integer;
use thiserror::Error;

/// Largest modulus any operation accepts.
pub const MAX_MODULUS: u64 = 1_000_000;
/// Largest modulus for which full value tables are materialized.
pub const MAX_TABLE_MODULUS: u64 = 10_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharacterError {
    #[error("modulus must be at least 1")]
    InvalidModulus,
    #[error("modulus {0} exceeds the supported ceiling {MAX_MODULUS}")]
    ModulusTooLarge(u64),
    #[error("label {label} is not coprime to modulus {modulus}")]
    InvalidLabel { modulus: u64, label: u64 },
    #[error("gauss sum requires a primitive character; {id} has conductor {conductor}")]
    ImprimitiveGaussSum { id: CharacterId, conductor: u64 },
    #[error("value tables are only materialized for moduli up to {MAX_TABLE_MODULUS}, got {0}")]
    TableTooLarge(u64),
}

// ---------- exact unit-circle values ----------

/// A character value: either zero (at non-units) or the exact root of unity
/// e(num/den) with num/den reduced and 0 ≤ num < den.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum UnitValue {
    Zero,
    Turn { num: u64, den: u64 },
}

impl UnitValue {
    /// The value 1 = e(0).
    pub fn one() -> Self {
        UnitValue::Turn { num: 0, den: 1 }
    }

    /// e(num/den), reduced mod 1. `den` must be nonzero.
    pub fn turn(num: u64, den: u64) -> Self {
        assert!(den != 0, "turn denominator must be nonzero");
        let num = num % den;
        let g = num.gcd(&den);
        UnitValue::Turn { num: num / g, den: den / g }
    }

    pub fn is_zero(self) -> bool {
        matches!(self, UnitValue::Zero)
    }

    pub fn is_one(self) -> bool {
        matches!(self, UnitValue::Turn { num: 0, .. })
    }

    /// Exact product: turns add mod 1; zero absorbs.
    pub fn mul(self, other: Self) -> Self {
        match (self, other) {
            (UnitValue::Zero, _) | (_, UnitValue::Zero) => UnitValue::Zero,
            (UnitValue::Turn { num: n1, den: d1 }, UnitValue::Turn { num: n2, den: d2 }) => {
                let den = (d1 as u128) * (d2 as u128);
                let num = (n1 as u128) * (d2 as u128) + (n2 as u128) * (d1 as u128);
                let num = num % den;
                let g = num.gcd(&den);
                UnitValue::Turn { num: (num / g) as u64, den: (den / g) as u64 }
            }
        }
    }

    /// Complex conjugate: negates the turn mod 1.
    pub fn conj(self) -> Self {
        match self {
            UnitValue::Zero => UnitValue::Zero,
            UnitValue::Turn { num: 0, den: _ } => self,
            UnitValue::Turn { num, den } => UnitValue::Turn { num: den - num, den },
        }
    }

    /// Multiplicative order of the value (reduced denominator); zero has none.
    pub fn order(self) -> Option<u64> {
        match self {
            UnitValue::Zero => None,
            UnitValue::Turn { den, .. } => Some(den),
        }
    }

    /// Sign of the real part, decided exactly from the rational turn.
    pub fn re_sign(self) -> i8 {
        match self {
            UnitValue::Zero => 0,
            UnitValue::Turn { num, den } => {
                // cos(2πt) > 0 iff t ∈ [0, 1/4) ∪ (3/4, 1); zero at t = 1/4, 3/4.
                match (4 * num).cmp(&den) {
                    Ordering::Less => 1,
                    Ordering::Equal => 0,
                    Ordering::Greater => match (4 * num).cmp(&(3 * den)) {
                        Ordering::Less => -1,
                        Ordering::Equal => 0,
                        Ordering::Greater => 1,
                    },
                }
            }
        }
    }

    /// Sign of the imaginary part, decided exactly from the rational turn.
    pub fn im_sign(self) -> i8 {
        match self {
            UnitValue::Zero => 0,
            UnitValue::Turn { num: 0, .. } => 0,
            UnitValue::Turn { num, den } => {
                // sin(2πt) > 0 iff t ∈ (0, 1/2); zero at t = 0, 1/2.
                match (2 * num).cmp(&den) {
                    Ordering::Less => 1,
                    Ordering::Equal => 0,
                    Ordering::Greater => -1,
                }
            }
        }
    }

    /// Conversion to floats. Quarter turns convert exactly so that real
    /// characters and the mod-4 and mod-5 tables stay exact in f64.
    pub fn to_complex(self) -> Complex64 {
        match self {
            UnitValue::Zero => Complex64::new(0.0, 0.0),
            UnitValue::Turn { num, den } => match (num, den) {
                (0, _) => Complex64::new(1.0, 0.0),
                (1, 2) => Complex64::new(-1.0, 0.0),
                (1, 4) => Complex64::new(0.0, 1.0),
                (3, 4) => Complex64::new(0.0, -1.0),
                _ => {
                    let angle = std::f64::consts::TAU * (num as f64) / (den as f64);
                    Complex64::new(angle.cos(), angle.sin())
                }
            },
        }
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            UnitValue::Zero => write!(f, "0"),
            UnitValue::Turn { num: 0, .. } => write!(f, "1"),
            UnitValue::Turn { num: 1, den: 2 } => write!(f, "-1"),
            UnitValue::Turn { num: 1, den: 4 } => write!(f, "i"),
            UnitValue::Turn { num: 3, den: 4 } => write!(f, "-i"),
            UnitValue::Turn { num, den } => write!(f, "e({num}/{den})"),
        }
    }
}

// ---------- multiplicative group structure ----------

fn powmod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc: u64 = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = ((acc as u128 * base as u128) % modulus as u128) as u64;
        }
        base = ((base as u128 * base as u128) % modulus as u128) as u64;
        exp >>= 1;
    }
    acc
}

fn distinct_prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            while n % d == 0 {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Smallest g that generates (ℤ/pℤ)^× and (ℤ/p²ℤ)^×; such a g generates
/// (ℤ/p^kℤ)^× for every k, which keeps labels consistent across powers of p.
fn conrey_generator(p: u64) -> u64 {
    let factors = distinct_prime_factors(p - 1);
    let mut g = 2;
    loop {
        let primitive_mod_p = factors.iter().all(|&r| powmod(g, (p - 1) / r, p) != 1);
        if primitive_mod_p && powmod(g, p - 1, p * p) != 1 {
            return g;
        }
        g += 1;
    }
}

/// One cyclic factor of (ℤ/qℤ)^×: a discrete-log table for residues mod
/// `modulus` (a prime power dividing q) into ℤ/order. The factor 2^k with
/// k ≥ 3 contributes two of these over the same modulus.
struct CyclicFactor {
    modulus: u64,
    order: u64,
    log: Vec<u32>,
}

const NO_LOG: u32 = u32::MAX;

impl CyclicFactor {
    fn log_of(&self, n: u64) -> u64 {
        let l = self.log[(n % self.modulus) as usize];
        debug_assert_ne!(l, NO_LOG, "discrete log queried at a non-unit");
        l as u64
    }
}

/// Shared per-modulus structure: the CRT decomposition of (ℤ/qℤ)^× with
/// discrete-log tables, built once and shared by all characters mod q.
pub struct UnitGroup {
    modulus: u64,
    factors: Vec<CyclicFactor>,
}

impl UnitGroup {
    fn build(q: u64) -> Result<Arc<Self>, CharacterError> {
        if q == 0 {
            return Err(CharacterError::InvalidModulus);
        }
        if q > MAX_MODULUS {
            return Err(CharacterError::ModulusTooLarge(q));
        }
        let mut factors = Vec::new();
        let mut rest = q;
        let mut two_part = 1u64;
        while rest % 2 == 0 {
            rest /= 2;
            two_part *= 2;
        }
        match two_part {
            1 | 2 => {}
            4 => {
                // {1, 3} ≅ ℤ/2 generated by −1.
                let mut log = vec![NO_LOG; 4];
                log[1] = 0;
                log[3] = 1;
                factors.push(CyclicFactor { modulus: 4, order: 2, log });
            }
            m => {
                // {±5^b} with a ∈ ℤ/2, b ∈ ℤ/(m/4).
                let half = m / 4;
                let mut sign_log = vec![NO_LOG; m as usize];
                let mut five_log = vec![NO_LOG; m as usize];
                let mut v = 1u64;
                for b in 0..half {
                    sign_log[v as usize] = 0;
                    five_log[v as usize] = b as u32;
                    let w = m - v;
                    sign_log[w as usize] = 1;
                    five_log[w as usize] = b as u32;
                    v = v * 5 % m;
                }
                factors.push(CyclicFactor { modulus: m, order: 2, log: sign_log });
                factors.push(CyclicFactor { modulus: m, order: half, log: five_log });
            }
        }
        let mut d = 3;
        while d * d <= rest {
            if rest % d == 0 {
                let mut pe = 1u64;
                while rest % d == 0 {
                    rest /= d;
                    pe *= d;
                }
                factors.push(Self::odd_factor(d, pe));
            }
            d += 2;
        }
        if rest > 1 {
            factors.push(Self::odd_factor(rest, rest));
        }
        Ok(Arc::new(UnitGroup { modulus: q, factors }))
    }

    fn odd_factor(p: u64, pe: u64) -> CyclicFactor {
        let g = conrey_generator(p);
        let order = pe / p * (p - 1);
        let mut log = vec![NO_LOG; pe as usize];
        let mut v = 1u64;
        for a in 0..order {
            log[v as usize] = a as u32;
            v = ((v as u128 * g as u128) % pe as u128) as u64;
        }
        debug_assert_eq!(v, 1, "generator order mismatch for {p}^k = {pe}");
        CyclicFactor { modulus: pe, order, log }
    }

    fn is_unit(&self, n: u64) -> bool {
        (n % self.modulus).gcd(&self.modulus) == 1
    }

    /// χ_q(m, n) as an exact turn; both m and n must be units.
    fn pairing(&self, m: u64, n: u64) -> UnitValue {
        let mut acc = UnitValue::one();
        for f in &self.factors {
            let a = f.log_of(m);
            let b = f.log_of(n);
            let num = ((a as u128 * b as u128) % f.order as u128) as u64;
            acc = acc.mul(UnitValue::turn(num, f.order));
        }
        acc
    }

    /// Group order φ(q), as the product of factor orders.
    fn phi(&self) -> u64 {
        self.factors.iter().map(|f| f.order).product()
    }
}

// ---------- character identifiers ----------

/// Canonical "modulus.label" identifier; "1.1" is the trivial character
/// attached to the Riemann zeta function.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CharacterId {
    pub modulus: u64,
    pub label: u64,
}

impl CharacterId {
    pub fn new(modulus: u64, label: u64) -> Self {
        CharacterId { modulus, label }
    }

    /// Whether the labelled character is real (its own conjugate): label² ≡ 1.
    pub fn is_real(self) -> bool {
        self.modulus == 1 || (self.label * self.label) % self.modulus == 1
    }

    /// Identifier of the conjugate character: the inverse label mod q.
    pub fn conjugate(self) -> Self {
        CharacterId { modulus: self.modulus, label: invert_mod(self.label, self.modulus) }
    }
}

impl fmt::Display for CharacterId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}.{}", self.modulus, self.label)
    }
}

impl FromStr for CharacterId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let (q, l) = s
            .split_once('.')
            .ok_or_else(|| format!("expected modulus.label, got {s:?}"))?;
        let modulus: u64 = q.parse().map_err(|_| format!("bad modulus in {s:?}"))?;
        let label: u64 = l.parse().map_err(|_| format!("bad label in {s:?}"))?;
        if modulus == 0 {
            return Err(format!("modulus must be positive in {s:?}"));
        }
        let in_range = if modulus == 1 { label == 1 } else { label >= 1 && label < modulus };
        if !in_range || label.gcd(&modulus) != 1 {
            return Err(format!("label {label} is not a reduced unit mod {modulus}"));
        }
        Ok(CharacterId { modulus, label })
    }
}

fn invert_mod(a: u64, m: u64) -> u64 {
    if m == 1 {
        return 1;
    }
    // Extended Euclid on (a, m); a is coprime to m by construction.
    let (mut r0, mut r1) = (a as i128, m as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let quot = r0 / r1;
        (r0, r1) = (r1, r0 - quot * r1);
        (s0, s1) = (s1, s0 - quot * s1);
    }
    debug_assert_eq!(r0, 1, "invert_mod called with non-coprime arguments");
    s0.rem_euclid(m as i128) as u64
}

// ---------- characters ----------

/// A Dirichlet character mod q, represented by its Conrey label plus the
/// shared group structure. Cheap to clone; immutable and thread-safe.
#[derive(Clone)]
pub struct DirichletCharacter {
    group: Arc<UnitGroup>,
    label: u64,
}

impl fmt::Debug for DirichletCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DirichletCharacter({})", self.id())
    }
}

impl PartialEq for DirichletCharacter {
    fn eq(&self, other: &Self) -> bool {
        self.id() == other.id()
    }
}
impl Eq for DirichletCharacter {}

impl DirichletCharacter {
    /// The character with the given Conrey label mod q. Labels are taken mod
    /// q (so q itself canonicalizes to 1 only when q = 1) and must be units.
    pub fn from_label(modulus: u64, label: u64) -> Result<Self, CharacterError> {
        let group = UnitGroup::build(modulus)?;
        let canonical = if modulus == 1 { 1 } else { label % modulus };
        if canonical == 0 || !group.is_unit(canonical) {
            return Err(CharacterError::InvalidLabel { modulus, label });
        }
        Ok(DirichletCharacter { group, label: canonical })
    }

    pub fn modulus(&self) -> u64 {
        self.group.modulus
    }

    pub fn label(&self) -> u64 {
        self.label
    }

    pub fn id(&self) -> CharacterId {
        CharacterId::new(self.group.modulus, self.label)
    }

    pub fn is_principal(&self) -> bool {
        self.label == 1
    }

    /// χ(n) for any integer n, reduced mod q; zero exactly at gcd(n, q) > 1.
    pub fn evaluate(&self, n: i64) -> UnitValue {
        let q = self.group.modulus;
        let r = n.rem_euclid(q as i64) as u64;
        if !self.group.is_unit(r) {
            return UnitValue::Zero;
        }
        if q == 1 {
            return UnitValue::one();
        }
        self.group.pairing(self.label, r)
    }

    /// The conjugate character; an involution, with the same modulus.
    pub fn conjugate(&self) -> Self {
        DirichletCharacter {
            group: Arc::clone(&self.group),
            label: invert_mod(self.label, self.group.modulus),
        }
    }

    /// Whether all values are real, i.e. the character equals its conjugate.
    pub fn is_real(&self) -> bool {
        self.id().is_real()
    }

    /// Parity exponent a ∈ {0, 1} with χ(−1) = (−1)^a.
    pub fn parity(&self) -> u8 {
        if self.evaluate(-1).is_one() {
            0
        } else {
            1
        }
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u64 {
        if self.group.modulus == 1 {
            return 1;
        }
        self.group.factors.iter().fold(1u64, |acc, f| {
            let a = f.log_of(self.label);
            acc.lcm(&(f.order / a.gcd(&f.order)))
        })
    }

    /// Smallest d | q such that χ is trivial on {n ≡ 1 (mod d), gcd(n, q) = 1};
    /// χ is induced by a character mod d exactly for the divisors d ≥ conductor.
    pub fn conductor(&self) -> u64 {
        let q = self.group.modulus;
        let mut divisors: Vec<u64> = (1..=q).filter(|d| q % d == 0).collect();
        divisors.sort_unstable();
        'next: for &d in &divisors {
            let mut n = 1 + d;
            while n < q {
                if self.group.is_unit(n) && !self.group.pairing(self.label, n).is_one() {
                    continue 'next;
                }
                n += d;
            }
            return d;
        }
        q
    }

    pub fn is_primitive(&self) -> bool {
        self.conductor() == self.group.modulus
    }

    /// The primitive character inducing this one: same Conrey label reduced
    /// mod the conductor.
    pub fn primitive_inducer(&self) -> Result<Self, CharacterError> {
        let f = self.conductor();
        DirichletCharacter::from_label(f, self.label % f)
    }

    /// τ(χ) = Σ_{a=1}^{q} χ(a) e(a/q). Defined here only for primitive
    /// characters, where |τ| = √q holds exactly.
    pub fn gauss_sum(&self) -> Result<Complex64, CharacterError> {
        let conductor = self.conductor();
        if conductor != self.group.modulus {
            return Err(CharacterError::ImprimitiveGaussSum { id: self.id(), conductor });
        }
        let q = self.group.modulus;
        let mut acc = Complex64::new(0.0, 0.0);
        for a in 1..=q {
            let v = self.evaluate(a as i64);
            if !v.is_zero() {
                acc += v.to_complex() * UnitValue::turn(a, q).to_complex();
            }
        }
        Ok(acc)
    }

    /// Value table on the units mod q, as (residue, value) pairs in residue
    /// order. Materialized only for desk-scale moduli.
    pub fn value_table(&self) -> Result<Vec<(u64, UnitValue)>, CharacterError> {
        let q = self.group.modulus;
        if q > MAX_TABLE_MODULUS {
            return Err(CharacterError::TableTooLarge(q));
        }
        if q == 1 {
            return Ok(vec![(1, UnitValue::one())]);
        }
        Ok((1..q)
            .filter(|&n| self.group.is_unit(n))
            .map(|n| (n, self.group.pairing(self.label, n)))
            .collect())
    }
}

/// All φ(q) characters mod q, principal first, labels ascending.
pub fn enumerate_characters(q: u64) -> Result<Vec<DirichletCharacter>, CharacterError> {
    let group = UnitGroup::build(q)?;
    let mut out = Vec::with_capacity(group.phi() as usize);
    for label in 1..=q {
        if group.is_unit(label) {
            let label = if q == 1 { 1 } else { label };
            out.push(DirichletCharacter { group: Arc::clone(&group), label });
        }
    }
    Ok(out)
}

/// Euler φ(q), counted directly; used as an independent cross-check in tests
/// and for the counting identities in reports.
pub fn euler_phi(q: u64) -> u64 {
    (1..=q).filter(|n| n.gcd(&q) == 1).count() as u64
}
