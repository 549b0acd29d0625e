//! Exact sparse arithmetic for graded-commutative polynomials.
//!
//! A [`GradedPoly`] is a map from canonical monomials to nonzero coefficients
//! over a shared [`GeneratorTable`]. Coefficients are unbounded integers or
//! canonical residues mod a prime `l`. Generators carry a non-negative weight
//! and a parity; odd generators anticommute and square to zero, so the same
//! ring type serves both the commutative coefficient rings (weights track the
//! grading of the Lazard ring) and the exterior-times-polynomial rings of the
//! Steenrod module.
//!
//! Invariants:
//! - no explicit zero coefficients are stored;
//! - monomials are kept in canonical form (no zero exponents, generators
//!   sorted), under a fixed graded order (total degree, then lexicographic by
//!   generator name);
//! - mod-l coefficients are canonical residues in `0..l`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use smallvec::SmallVec;

use crate::error::{Error, Result};

/// Parity of a generator: odd generators anticommute and square to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Coefficient domain: unbounded integers or residues mod a prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Domain {
    Integer,
    /// Residues mod `l`, stored canonically in `0..l`. `l` must be prime.
    Mod(u32),
}

impl Domain {
    fn normalize(&self, c: &mut BigInt) {
        if let Domain::Mod(l) = self {
            let l = BigInt::from(*l);
            *c = ((&*c % &l) + &l) % &l;
        }
    }
}

fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Index of a generator within its table. Tables sort generators by name, so
/// id order coincides with lexicographic name order and monomial comparison
/// needs no table access.
pub type GenId = u16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    pub weight: u32,
    pub parity: Parity,
}

/// An immutable, shared table of named weighted generators plus the
/// coefficient domain. Weight 0 is reserved by convention for formal variables
/// (`x`, `y`, `t`, ...).
#[derive(Debug, PartialEq, Eq)]
pub struct GeneratorTable {
    domain: Domain,
    gens: Vec<Generator>,
}

pub type Table = Arc<GeneratorTable>;

impl GeneratorTable {
    /// Build a table. Generators are sorted by name; duplicate names are
    /// rejected, as is a non-prime modulus.
    pub fn new(
        domain: Domain,
        entries: impl IntoIterator<Item = (String, u32, Parity)>,
    ) -> Result<Table> {
        if let Domain::Mod(l) = domain {
            if !is_prime(l) {
                return Err(Error::NotPrime(l));
            }
        }
        let mut gens: Vec<Generator> = entries
            .into_iter()
            .map(|(name, weight, parity)| Generator { name, weight, parity })
            .collect();
        gens.sort_by(|a, b| a.name.cmp(&b.name));
        for w in gens.windows(2) {
            if w[0].name == w[1].name {
                return Err(Error::DuplicateGenerator(w[0].name.clone()));
            }
        }
        assert!(gens.len() <= GenId::MAX as usize, "too many generators");
        Ok(Arc::new(GeneratorTable { domain, gens }))
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn generator(&self, id: GenId) -> &Generator {
        &self.gens[id as usize]
    }

    pub fn generators(&self) -> impl Iterator<Item = (GenId, &Generator)> {
        self.gens.iter().enumerate().map(|(i, g)| (i as GenId, g))
    }

    pub fn id_of(&self, name: &str) -> Option<GenId> {
        self.gens
            .binary_search_by(|g| g.name.as_str().cmp(name))
            .ok()
            .map(|i| i as GenId)
    }

    pub fn require(&self, name: &str) -> Result<GenId> {
        self.id_of(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

fn same_table(a: &Table, b: &Table) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

/// A canonical monomial: sorted `(generator id, exponent)` pairs with all
/// exponents positive. The empty monomial is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(SmallVec<[(GenId, u16); 8]>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(SmallVec::new())
    }

    /// Build from (id, exponent) pairs; zero exponents are dropped and
    /// repeated ids are merged.
    pub fn from_pairs(pairs: impl IntoIterator<Item = (GenId, u16)>) -> Self {
        let mut v: SmallVec<[(GenId, u16); 8]> =
            pairs.into_iter().filter(|&(_, e)| e > 0).collect();
        v.sort_by_key(|&(id, _)| id);
        let mut merged: SmallVec<[(GenId, u16); 8]> = SmallVec::new();
        for (id, e) in v {
            match merged.last_mut() {
                Some((last, le)) if *last == id => {
                    let sum = *le as u32 + e as u32;
                    assert!(sum <= u16::MAX as u32, "exponent overflow");
                    *le = sum as u16;
                }
                _ => merged.push((id, e)),
            }
        }
        Monomial(merged)
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, id: GenId) -> u16 {
        self.0
            .binary_search_by_key(&id, |&(g, _)| g)
            .map(|i| self.0[i].1)
            .unwrap_or(0)
    }

    pub fn pairs(&self) -> &[(GenId, u16)] {
        &self.0
    }

    /// Total degree: sum of all exponents.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e as u32).sum()
    }

    /// Weight with respect to a table: sum of exponent times generator weight.
    pub fn weight(&self, table: &GeneratorTable) -> u32 {
        self.0
            .iter()
            .map(|&(id, e)| e as u32 * table.generator(id).weight)
            .sum()
    }

    /// Degree counted over a subset of generators.
    pub fn degree_in(&self, ids: &[GenId]) -> u32 {
        self.0
            .iter()
            .filter(|&&(id, _)| ids.contains(&id))
            .map(|&(_, e)| e as u32)
            .sum()
    }

    /// Remove a generator, returning its exponent and the remaining monomial.
    pub fn split_off(&self, id: GenId) -> (u16, Monomial) {
        let mut rest = self.0.clone();
        let mut e = 0;
        if let Ok(i) = rest.binary_search_by_key(&id, |&(g, _)| g) {
            e = rest[i].1;
            rest.remove(i);
        }
        (e, Monomial(rest))
    }

    /// Graded-commutative product. Returns `None` when an odd generator would
    /// be squared, otherwise the merged monomial and the Koszul sign.
    pub fn mul(&self, other: &Monomial, table: &GeneratorTable) -> Option<(Monomial, i8)> {
        let mut out: SmallVec<[(GenId, u16); 8]> =
            SmallVec::with_capacity(self.0.len() + other.0.len());
        // Koszul sign: odd factors of `other` move left past the odd factors
        // of `self` that follow them in canonical order.
        let mut sign = 1i8;
        let (mut i, mut j) = (0usize, 0usize);
        // Number of odd generators of `self` strictly to the right of the
        // current merge position.
        let odd_total: u32 = self
            .0
            .iter()
            .filter(|&&(id, _)| table.generator(id).parity == Parity::Odd)
            .count() as u32;
        let mut odd_seen = 0u32;
        while i < self.0.len() || j < other.0.len() {
            if j >= other.0.len()
                || (i < self.0.len() && self.0[i].0 <= other.0[j].0)
            {
                let (id, e) = self.0[i];
                i += 1;
                if table.generator(id).parity == Parity::Odd {
                    odd_seen += 1;
                }
                if j < other.0.len() && id == other.0[j].0 {
                    let (_, e2) = other.0[j];
                    j += 1;
                    if table.generator(id).parity == Parity::Odd {
                        return None; // odd square vanishes
                    }
                    let sum = e as u32 + e2 as u32;
                    assert!(sum <= u16::MAX as u32, "exponent overflow");
                    out.push((id, sum as u16));
                } else {
                    out.push((id, e));
                }
            } else {
                let (id, e) = other.0[j];
                j += 1;
                if table.generator(id).parity == Parity::Odd {
                    debug_assert_eq!(e, 1);
                    let behind = odd_total - odd_seen;
                    if behind % 2 == 1 {
                        sign = -sign;
                    }
                }
                out.push((id, e));
            }
        }
        Some((Monomial(out), sign))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    /// Graded order: total degree first, then lexicographic with the earliest
    /// generator (smallest name) dominating.
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let (mut i, mut j) = (0usize, 0usize);
        while i < self.0.len() && j < other.0.len() {
            let (id1, e1) = self.0[i];
            let (id2, e2) = other.0[j];
            match id1.cmp(&id2) {
                // earlier generator present only on one side: that side is
                // lex-larger
                Ordering::Less => return Ordering::Greater,
                Ordering::Greater => return Ordering::Less,
                Ordering::Equal => match e1.cmp(&e2) {
                    Ordering::Equal => {
                        i += 1;
                        j += 1;
                    }
                    ord => return ord,
                },
            }
        }
        match (i < self.0.len(), j < other.0.len()) {
            (true, false) => Ordering::Greater,
            (false, true) => Ordering::Less,
            _ => Ordering::Equal,
        }
    }
}

/// Truncation and nilpotency bounds applied during multiplication.
///
/// `formal` lists the formal variables whose total degree is capped by
/// `max_fdeg`; `max_weight` caps the weight of every surviving term; `caps`
/// imposes per-generator nilpotency `g^(cap+1) = 0`.
#[derive(Debug, Clone, Default)]
pub struct Bounds {
    pub formal: Vec<GenId>,
    pub max_fdeg: Option<u32>,
    pub max_weight: Option<u32>,
    pub caps: Vec<(GenId, u16)>,
}

impl Bounds {
    pub fn admits(&self, m: &Monomial, table: &GeneratorTable) -> bool {
        if let Some(d) = self.max_fdeg {
            if m.degree_in(&self.formal) > d {
                return false;
            }
        }
        if let Some(w) = self.max_weight {
            if m.weight(table) > w {
                return false;
            }
        }
        self.caps.iter().all(|&(id, cap)| m.exponent(id) <= cap)
    }
}

/// Sparse graded-commutative polynomial over a shared generator table.
#[derive(Clone)]
pub struct GradedPoly {
    table: Table,
    terms: BTreeMap<Monomial, BigInt>,
}

impl PartialEq for GradedPoly {
    fn eq(&self, other: &Self) -> bool {
        same_table(&self.table, &other.table) && self.terms == other.terms
    }
}

impl Eq for GradedPoly {}

impl fmt::Debug for GradedPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GradedPoly({})", crate::text::to_canonical(self))
    }
}

impl GradedPoly {
    pub fn zero(table: &Table) -> Self {
        GradedPoly { table: Arc::clone(table), terms: BTreeMap::new() }
    }

    pub fn one(table: &Table) -> Self {
        Self::constant(table, 1)
    }

    pub fn constant(table: &Table, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(table);
        p.add_term(Monomial::unit(), c.into());
        p
    }

    pub fn generator(table: &Table, name: &str) -> Result<Self> {
        let id = table.require(name)?;
        let mut p = Self::zero(table);
        p.add_term(Monomial::from_pairs([(id, 1)]), BigInt::from(1));
        Ok(p)
    }

    /// A single term `c * prod name^exp`.
    pub fn monomial(
        table: &Table,
        pairs: &[(&str, u16)],
        c: impl Into<BigInt>,
    ) -> Result<Self> {
        let mut ids = SmallVec::<[(GenId, u16); 8]>::new();
        for &(name, e) in pairs {
            ids.push((table.require(name)?, e));
        }
        let mut p = Self::zero(table);
        p.add_term(Monomial::from_pairs(ids), c.into());
        Ok(p)
    }

    pub fn table(&self) -> &Table {
        &self.table
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient(&Monomial::unit())
    }

    /// Add `c * m` in place, normalizing the domain and dropping zeros.
    /// A monomial squaring an odd generator is zero and is dropped.
    pub fn add_term(&mut self, m: Monomial, mut c: BigInt) {
        self.table.domain().normalize(&mut c);
        if c.is_zero() {
            return;
        }
        if m.pairs().iter().any(|&(id, e)| {
            e > 1 && self.table.generator(id).parity == Parity::Odd
        }) {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                let mut val = o.get().clone();
                self.table.domain().normalize(&mut val);
                if val.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = val;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        Ok(self.add_raw(other))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), -c.clone());
        }
        out
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        let mut out = Self::zero(&self.table);
        if k.is_zero() {
            return out;
        }
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c * &k);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        if !same_table(&self.table, &other.table) {
            return Err(Error::TableMismatch);
        }
        Ok(self.mul_bounded(other, &Bounds::default()))
    }

    pub(crate) fn add_raw(&self, other: &Self) -> Self {
        debug_assert!(same_table(&self.table, &other.table));
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    pub(crate) fn sub_raw(&self, other: &Self) -> Self {
        self.add_raw(&other.neg())
    }

    pub(crate) fn mul_raw(&self, other: &Self) -> Self {
        debug_assert!(same_table(&self.table, &other.table));
        self.mul_bounded(other, &Bounds::default())
    }

    /// Product with truncation. Terms are grouped by their formal-variable
    /// part so that group pairs violating the degree bound or nilpotency caps
    /// are skipped before any coefficient arithmetic happens; this is what
    /// makes degree-12 expansions tractable.
    pub(crate) fn mul_bounded(&self, other: &Self, bounds: &Bounds) -> Self {
        debug_assert!(same_table(&self.table, &other.table));
        let table = &self.table;
        let ga = group_by_formal(self, &bounds.formal);
        let gb = group_by_formal(other, &bounds.formal);
        let mut groups: BTreeMap<Monomial, BTreeMap<Monomial, BigInt>> = BTreeMap::new();
        for (fa, ta) in &ga {
            for (fb, tb) in &gb {
                let Some((fm, fsign)) = fa.mul(fb, table) else { continue };
                debug_assert_eq!(fsign, 1, "formal variables must be even");
                if let Some(d) = bounds.max_fdeg {
                    if fm.degree() > d {
                        continue;
                    }
                }
                if !bounds.caps.is_empty()
                    && !bounds.caps.iter().all(|&(id, cap)| fm.exponent(id) <= cap)
                {
                    continue;
                }
                let slot = groups.entry(fm).or_default();
                for (ma, wa, ca) in ta {
                    for (mb, wb, cb) in tb {
                        if let Some(w) = bounds.max_weight {
                            if wa + wb > w {
                                continue;
                            }
                        }
                        let Some((m, sign)) = ma.mul(mb, table) else { continue };
                        let prod = if sign < 0 { -(*ca * *cb) } else { *ca * *cb };
                        use std::collections::btree_map::Entry;
                        match slot.entry(m) {
                            Entry::Vacant(v) => {
                                v.insert(prod);
                            }
                            Entry::Occupied(mut o) => {
                                *o.get_mut() += prod;
                            }
                        }
                    }
                }
            }
        }
        let mut out = Self::zero(table);
        for (fm, coeffs) in groups {
            for (m, c) in coeffs {
                let (full, sign) = m.mul(&fm, table).expect("formal part is even");
                debug_assert_eq!(sign, 1);
                out.add_term(full, c);
            }
        }
        out
    }

    /// Drop every term not admitted by the bounds.
    pub fn truncate(&self, bounds: &Bounds) -> Self {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if bounds.admits(m, &self.table) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut out = Self::one(&self.table);
        for _ in 0..k {
            out = out.mul_raw(self);
        }
        out
    }

    /// `Some(w)` when every term has weight `w`; zero is homogeneous of every
    /// weight and reports `None`.
    pub fn homogeneous_weight(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let w = it.next()?.weight(&self.table);
        it.all(|m| m.weight(&self.table) == w).then_some(w)
    }

    pub fn is_homogeneous_of_weight(&self, w: u32) -> bool {
        self.terms.keys().all(|m| m.weight(&self.table) == w)
    }

    /// Collect coefficients of powers of one generator: returns
    /// `exp -> coefficient` with the generator stripped from each monomial.
    pub fn collect_along(&self, id: GenId) -> BTreeMap<u16, GradedPoly> {
        let mut out: BTreeMap<u16, GradedPoly> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (e, rest) = m.split_off(id);
            out.entry(e)
                .or_insert_with(|| Self::zero(&self.table))
                .add_term(rest, c.clone());
        }
        out
    }

    /// Coefficient of `gen^k` as a polynomial with the generator stripped.
    pub fn coefficient_of_power(&self, id: GenId, k: u16) -> GradedPoly {
        let mut out = Self::zero(&self.table);
        for (m, c) in &self.terms {
            if m.exponent(id) == k {
                let (_, rest) = m.split_off(id);
                out.add_term(rest, c.clone());
            }
        }
        out
    }

    /// Move this polynomial onto another table, matching generators by name
    /// (weights and parities must agree). Used to embed coefficient rings into
    /// larger model rings and to extract them back.
    pub fn retable(&self, target: &Table) -> Result<Self> {
        if same_table(&self.table, target) {
            return Ok(self.clone());
        }
        let mut map: Vec<Option<GenId>> = vec![None; self.table.len()];
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut pairs = SmallVec::<[(GenId, u16); 8]>::new();
            for &(id, e) in m.pairs() {
                let tid = match map[id as usize] {
                    Some(t) => t,
                    None => {
                        let g = self.table.generator(id);
                        let t = target.require(&g.name)?;
                        let tg = target.generator(t);
                        if tg.weight != g.weight || tg.parity != g.parity {
                            return Err(Error::GeneratorMismatch {
                                name: g.name.clone(),
                                want: g.weight,
                                got: tg.weight,
                            });
                        }
                        map[id as usize] = Some(t);
                        t
                    }
                };
                pairs.push((tid, e));
            }
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        Ok(out)
    }

    /// Substitute integer values for some generators (by name) and retable the
    /// rest onto `target`. This is the coefficient-specialization map used for
    /// naturality checks.
    pub fn substitute(
        &self,
        values: &BTreeMap<String, BigInt>,
        target: &Table,
    ) -> Result<Self> {
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut pairs = SmallVec::<[(GenId, u16); 8]>::new();
            for &(id, e) in m.pairs() {
                let g = self.table.generator(id);
                if let Some(v) = values.get(&g.name) {
                    coeff *= num_traits::pow::pow(v.clone(), e as usize);
                } else {
                    pairs.push((target.require(&g.name)?, e));
                }
            }
            out.add_term(Monomial::from_pairs(pairs), coeff);
        }
        Ok(out)
    }

    /// Rename one generator (used to turn a series in `t` into one in `x`),
    /// retabling everything else by name.
    pub fn rename_generator(&self, from: &str, to: &str, target: &Table) -> Result<Self> {
        let from_id = self.table.require(from)?;
        let to_id = target.require(to)?;
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut pairs = SmallVec::<[(GenId, u16); 8]>::new();
            for &(id, e) in m.pairs() {
                if id == from_id {
                    pairs.push((to_id, e));
                } else {
                    let g = self.table.generator(id);
                    pairs.push((target.require(&g.name)?, e));
                }
            }
            out.add_term(Monomial::from_pairs(pairs), c.clone());
        }
        Ok(out)
    }

    /// Largest coefficient magnitude, for diagnostics.
    pub fn max_coefficient(&self) -> BigInt {
        self.terms
            .values()
            .map(|c| c.abs())
            .max()
            .unwrap_or_else(BigInt::zero)
    }
}

/// Split terms into groups sharing the same formal-variable part; each group
/// keeps `(coefficient monomial, weight, coefficient)` triples.
#[allow(clippy::type_complexity)]
fn group_by_formal<'a>(
    p: &'a GradedPoly,
    formal: &[GenId],
) -> Vec<(Monomial, Vec<(Monomial, u32, &'a BigInt)>)> {
    let table = &p.table;
    let mut groups: BTreeMap<Monomial, Vec<(Monomial, u32, &BigInt)>> = BTreeMap::new();
    for (m, c) in &p.terms {
        let mut fpart = SmallVec::<[(GenId, u16); 8]>::new();
        let mut rest = SmallVec::<[(GenId, u16); 8]>::new();
        for &(id, e) in m.pairs() {
            if formal.contains(&id) {
                fpart.push((id, e));
            } else {
                rest.push((id, e));
            }
        }
        let rest = Monomial(rest);
        let w = rest.weight(table);
        groups
            .entry(Monomial(fpart))
            .or_default()
            .push((rest, w, c));
    }
    groups.into_iter().collect()
}

/// Sum a sequence of polynomials over one table.
pub fn sum(table: &Table, polys: impl IntoIterator<Item = GradedPoly>) -> GradedPoly {
    let mut out = GradedPoly::zero(table);
    for p in polys {
        debug_assert!(same_table(&out.table, &p.table));
        out = out.add_raw(&p);
    }
    out
}
