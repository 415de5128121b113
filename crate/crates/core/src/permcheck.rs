//! Permutation behaviour of polynomial maps on `Z_m`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::dickson::{coefficient_poly, CoefPoly, IndexRows, Kind, RdpSpec};
use crate::error::{Error, Result};
use crate::ring::{Residue, ResidueRing};

/// The image table of a map `Z_m -> Z_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermMap {
    ring: ResidueRing,
    image: Vec<Residue>,
}

/// Two distinct inputs with the same image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Collision {
    pub x1: Residue,
    pub x2: Residue,
    pub image: Residue,
}

impl PermMap {
    /// Panics if an entry is outside `[0, m)` or the length is not `m`.
    pub fn from_image(ring: ResidueRing, image: Vec<Residue>) -> Self {
        assert_eq!(
            image.len() as u64,
            ring.modulus(),
            "image table must have m entries"
        );
        assert!(
            image.iter().all(|&v| v < ring.modulus()),
            "image entry out of range"
        );
        PermMap { ring, image }
    }

    pub fn ring(&self) -> &ResidueRing {
        &self.ring
    }

    pub fn image(&self) -> &[Residue] {
        &self.image
    }

    pub fn apply(&self, x: Residue) -> Residue {
        self.image[(x % self.ring.modulus()) as usize]
    }

    /// The map `x -> f(x) + x`.
    pub fn plus_identity(&self) -> PermMap {
        let image = self
            .image
            .iter()
            .enumerate()
            .map(|(x, &v)| self.ring.add(v, x as u64))
            .collect();
        PermMap {
            ring: self.ring.clone(),
            image,
        }
    }

    /// First collision in scan order: the smallest `x2` whose image was
    /// already hit by some `x1 < x2`.
    pub fn find_collision(&self) -> Option<Collision> {
        let mut seen: Vec<Option<Residue>> = vec![None; self.image.len()];
        for (x, &v) in self.image.iter().enumerate() {
            match seen[v as usize] {
                Some(x1) => {
                    return Some(Collision {
                        x1,
                        x2: x as u64,
                        image: v,
                    })
                }
                None => seen[v as usize] = Some(x as u64),
            }
        }
        None
    }

    pub fn is_permutation(&self) -> bool {
        is_bijective(&self.image)
    }
}

fn is_bijective(image: &[Residue]) -> bool {
    let mut seen = vec![false; image.len()];
    for &v in image {
        let slot = &mut seen[v as usize];
        if *slot {
            return false;
        }
        *slot = true;
    }
    true
}

fn is_complete(image: &[Residue], ring: &ResidueRing) -> bool {
    if !is_bijective(image) {
        return false;
    }
    let shifted: Vec<Residue> = image
        .iter()
        .enumerate()
        .map(|(x, &v)| ring.add(v, x as u64))
        .collect();
    is_bijective(&shifted)
}

/// Dense image table of `f` on `[0, m)`.
pub fn tabulate<F: Fn(Residue) -> Residue>(f: F, ring: &ResidueRing) -> PermMap {
    let image = ring.elements().map(|x| f(x) % ring.modulus()).collect();
    PermMap {
        ring: ring.clone(),
        image,
    }
}

/// Tabulation of `D_{n,k}(a, ·)`.
pub fn rdp_map(spec: &RdpSpec) -> PermMap {
    let rows = IndexRows::new(spec.kind, spec.a, &spec.ring, spec.n);
    PermMap::from_image(spec.ring.clone(), rows.row().to_vec())
}

/// `Ok(())` for a bijection, the first collision otherwise.
pub fn is_permutation(map: &PermMap) -> std::result::Result<(), Collision> {
    match map.find_collision() {
        None => Ok(()),
        Some(c) => Err(c),
    }
}

/// PP decision over `Z_m` through the prime-power factors of `m`.
pub fn is_pp_crt(n: u64, kind: Kind, a: Residue, m: u64) -> Result<bool> {
    let ring = ResidueRing::new(m)?;
    for &(p, t) in ring.factors() {
        if !is_pp_prime_power(n, kind, a, p, t)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// PP decision over `Z_{p^t}`: tabulation for `t = 1`; for `t > 1`, PP mod
/// `p` and a derivative with no zero on `F_p`.
pub fn is_pp_prime_power(n: u64, kind: Kind, a: Residue, p: u64, t: u32) -> Result<bool> {
    let field = ResidueRing::prime_field(p)?;
    if t == 0 {
        return Err(Error::InvalidModulus {
            modulus: p,
            reason: "exponent must be at least 1",
        });
    }
    let spec = RdpSpec::new(n, kind, field.clone()).with_a(a);
    if !rdp_map(&spec).is_permutation() {
        return Ok(false);
    }
    if t == 1 {
        return Ok(true);
    }
    Ok(derivative_nonvanishing(&coefficient_poly(&spec)))
}

fn derivative_nonvanishing(poly: &CoefPoly) -> bool {
    let deriv = poly.derivative();
    poly.ring().elements().all(|s| deriv.eval(s) != 0)
}

/// CPP decision: `f` and `f + x` are both bijections on `Z_m`.
pub fn is_cpp(n: u64, kind: Kind, a: Residue, ring: &ResidueRing) -> bool {
    let spec = RdpSpec::new(n, kind, ring.clone()).with_a(a);
    let map = rdp_map(&spec);
    is_complete(map.image(), ring)
}

pub fn map_is_cpp(map: &PermMap) -> bool {
    is_complete(map.image(), map.ring())
}

/// Hermite's criterion over `F_p`: exactly one root, and `f^t mod (x^p - x)`
/// has degree at most `p - 2` for `1 <= t <= p - 2`.
pub fn hermite_check(poly: &CoefPoly, p: u64) -> Result<bool> {
    let ring = poly.ring();
    if !ring.is_prime() || ring.modulus() != p {
        return Err(Error::UnsupportedRing {
            modulus: ring.modulus(),
            reason: "Hermite's criterion needs the prime field F_p",
        });
    }
    let roots = ring.elements().filter(|&x| poly.eval(x) == 0).count();
    if roots != 1 {
        return Ok(false);
    }
    let base = poly.reduce_frobenius(p);
    let mut power = base.clone();
    for _ in 1..=p.saturating_sub(2) {
        if power.degree().is_some_and(|d| d as u64 > p - 2) {
            return Ok(false);
        }
        power = power.mul(&base).reduce_frobenius(p);
    }
    Ok(true)
}

/// Ascending list of `x` with `f(x) = x`.
pub fn fixed_points(map: &PermMap) -> Vec<Residue> {
    map.image
        .iter()
        .enumerate()
        .filter(|&(x, &v)| x as u64 == v)
        .map(|(x, _)| x as u64)
        .collect()
}

/// Multiset of cycle lengths, as `(length, multiplicity)` pairs sorted by
/// descending length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CycleType {
    pub cycles: Vec<(u64, u64)>,
}

impl CycleType {
    pub fn from_lengths<I: IntoIterator<Item = u64>>(lengths: I) -> Self {
        let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
        for len in lengths {
            *counts.entry(len).or_default() += 1;
        }
        CycleType {
            cycles: counts.into_iter().rev().collect(),
        }
    }

    /// Σ length·multiplicity.
    pub fn total(&self) -> u64 {
        self.cycles.iter().map(|(l, c)| l * c).sum()
    }

    pub fn multiplicity(&self, length: u64) -> u64 {
        self.cycles
            .iter()
            .find(|&&(l, _)| l == length)
            .map_or(0, |&(_, c)| c)
    }

    /// Expanded notation, e.g. `[4, 2, 1]`.
    pub fn lengths(&self) -> Vec<u64> {
        self.cycles
            .iter()
            .flat_map(|&(l, c)| std::iter::repeat_n(l, c as usize))
            .collect()
    }
}

impl std::fmt::Display for CycleType {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.lengths().iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn cycle_type(map: &PermMap) -> Result<CycleType> {
    if let Some(c) = map.find_collision() {
        return Err(Error::NotBijective {
            x1: c.x1,
            x2: c.x2,
            image: c.image,
        });
    }
    let m = map.image.len();
    let mut visited = vec![false; m];
    let mut lengths = Vec::new();
    for start in 0..m {
        if visited[start] {
            continue;
        }
        let mut len = 0;
        let mut x = start;
        while !visited[x] {
            visited[x] = true;
            x = map.image[x] as usize;
            len += 1;
        }
        lengths.push(len);
    }
    Ok(CycleType::from_lengths(lengths))
}

/// `f` applied `k` times to `x`.
pub fn iterate_count(map: &PermMap, x: Residue, k: u64) -> Residue {
    let mut x = x % map.ring.modulus();
    for _ in 0..k {
        x = map.apply(x);
    }
    x
}

#[derive(Debug, Clone, Copy, Default)]
pub struct AnalyzeOptions {
    pub cpp: bool,
    pub fixed_points: bool,
    pub cycle_type: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PermReport {
    pub is_pp: bool,
    pub is_cpp: Option<bool>,
    pub fixed_points: Vec<Residue>,
    pub cycle_type: Option<CycleType>,
    pub witness: Option<Collision>,
}

/// Full report; a bijection always carries its cycle type.
pub fn analyze(map: &PermMap, opts: AnalyzeOptions) -> PermReport {
    let witness = map.find_collision();
    let is_pp = witness.is_none();
    PermReport {
        is_pp,
        is_cpp: opts.cpp.then(|| map_is_cpp(map)),
        fixed_points: if opts.fixed_points {
            fixed_points(map)
        } else {
            Vec::new()
        },
        cycle_type: if is_pp { cycle_type(map).ok() } else { None },
        witness,
    }
}
