//! Sectors, parabolic subgroups and their intersections.
//!
//! A sector `γΣ_I` is the coset `γΓ_I` seen as a set of chambers, and the
//! parabolic subgroup `γΓ_Iγ⁻¹` is its stabilizer. Both are named by the
//! same data, a minimal coset representative and a generator subset.
//!
//! The intersection `Γ_I ∩ γΓ_Jγ⁻¹` is computed by minimizing `γ` in its
//! double coset `Γ_I γ Γ_J`, `γ = γ_I·d·γ_J`, and keeping the generators of
//! `I ∩ J` that commute with `d`:
//!
//! ```text
//! Γ_I ∩ γΓ_Jγ⁻¹ = γ_I Γ_K γ_I⁻¹,   K = { s ∈ I ∩ J : s·d = d·s }.
//! ```

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::geometry::WallId;
use crate::presentation::{GenSet, Order};
use crate::words::{Chamber, GraphProduct, NormalForm};

/// The sector `γΣ_I`, with `γ` the minimal representative of `γΓ_I`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SectorRef {
    base: Chamber,
    types: GenSet,
}

impl SectorRef {
    /// The sector of type `types` containing the chamber `gamma`.
    pub fn new(gp: &GraphProduct, gamma: &Chamber, types: GenSet) -> Self {
        let (base, _) = gp.i_suffix(gamma, types);
        SectorRef { base, types }
    }

    pub fn base(&self) -> &Chamber {
        &self.base
    }

    pub fn types(&self) -> GenSet {
        self.types
    }
}

/// The parabolic subgroup `γ̃Γ_Kγ̃⁻¹`, with `γ̃` minimal in `γ̃Γ_K`.
///
/// Two descriptors compare equal exactly when they name the same sector.
/// Distinct descriptors can still describe the same subgroup when the
/// conjugators differ by an element normalizing `Γ_K`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ParabolicDesc {
    conjugator: Chamber,
    types: GenSet,
}

impl ParabolicDesc {
    pub fn new(gp: &GraphProduct, conjugator: &Chamber, types: GenSet) -> Self {
        let (conjugator, _) = gp.i_suffix(conjugator, types);
        ParabolicDesc { conjugator, types }
    }

    /// The standard parabolic `Γ_types`.
    pub fn standard(types: GenSet) -> Self {
        ParabolicDesc {
            conjugator: NormalForm::identity(),
            types,
        }
    }

    pub fn conjugator(&self) -> &Chamber {
        &self.conjugator
    }

    pub fn types(&self) -> GenSet {
        self.types
    }

    pub fn sector(&self) -> SectorRef {
        SectorRef {
            base: self.conjugator.clone(),
            types: self.types,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// `γ = g·d` with `g ∈ Γ_I`.
    Left,
    /// `γ = d·g` with `g ∈ Γ_I`.
    Right,
}

/// `γ = left·rep·right` with lengths adding up.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleCosetSplit {
    pub left: NormalForm,
    pub rep: NormalForm,
    pub right: NormalForm,
}

impl GraphProduct {
    pub fn sector_contains(&self, sector: &SectorRef, x: &Chamber) -> bool {
        self.i_suffix(x, sector.types).0 == sector.base
    }

    /// Splits off the largest `Γ_I` factor on the given side.
    /// Returns `(g, d)` with `g ∈ Γ_I`; `d` is the unique minimal element of
    /// `Γ_Iγ` (left) or `γΓ_I` (right).
    pub fn coset_minimize(&self, gamma: &NormalForm, types: GenSet, side: Side) -> (NormalForm, NormalForm) {
        match side {
            Side::Left => self.i_prefix(gamma, types),
            Side::Right => {
                let (d, g) = self.i_suffix(gamma, types);
                (g, d)
            }
        }
    }

    /// Minimal representative of `Γ_I γ Γ_J`, found by stripping left
    /// `I`-factors and right `J`-factors until neither side moves.
    pub fn double_coset_minimize(
        &self,
        gamma: &NormalForm,
        left_types: GenSet,
        right_types: GenSet,
    ) -> Result<DoubleCosetSplit> {
        let mut left = NormalForm::identity();
        let mut right = NormalForm::identity();
        let mut rep = gamma.clone();
        loop {
            let (g, rest) = self.i_prefix(&rep, left_types);
            let (core, h) = self.i_suffix(&rest, right_types);
            let moved = !g.is_identity() || !h.is_identity();
            left = self.multiply(&left, &g)?;
            right = self.multiply(&h, &right)?;
            rep = core;
            if !moved {
                break;
            }
        }
        Ok(DoubleCosetSplit { left, rep, right })
    }

    /// `{ s ∈ I ∩ J : s·d = d·s }`.
    pub fn commuting_k(&self, d: &NormalForm, left_types: GenSet, right_types: GenSet) -> Result<GenSet> {
        let mut k = GenSet::EMPTY;
        for s in left_types.intersection(right_types).iter() {
            let gen = self.generator_power(s, 1)?;
            if self.multiply(&gen, d)? == self.multiply(d, &gen)? {
                k.insert(s);
            }
        }
        Ok(k)
    }

    fn check_desc(&self, p: &ParabolicDesc) -> Result<()> {
        if self.is_valid(&p.conjugator) && p.types.is_subset(self.spec().generators()) {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }

    /// The intersection of two parabolic subgroups, as a parabolic subgroup.
    pub fn intersect_parabolics(&self, p1: &ParabolicDesc, p2: &ParabolicDesc) -> Result<ParabolicDesc> {
        self.check_desc(p1)?;
        self.check_desc(p2)?;
        let gamma = self.multiply(&self.invert(&p1.conjugator), &p2.conjugator)?;
        let split = self.double_coset_minimize(&gamma, p1.types, p2.types)?;
        let k = self.commuting_k(&split.rep, p1.types, p2.types)?;
        let conjugator = self.multiply(&p1.conjugator, &split.left)?;
        Ok(ParabolicDesc::new(self, &conjugator, k))
    }

    /// `Γ_I ∩ γΓ_Jγ⁻¹`.
    pub fn intersect_standard(&self, left_types: GenSet, gamma: &NormalForm, right_types: GenSet) -> Result<ParabolicDesc> {
        self.intersect_parabolics(
            &ParabolicDesc::standard(left_types),
            &ParabolicDesc::new(self, gamma, right_types),
        )
    }

    pub fn member_of_parabolic(&self, w: &NormalForm, p: &ParabolicDesc) -> Result<bool> {
        let local = self.product([&self.invert(&p.conjugator), w, &p.conjugator])?;
        Ok(local.support().is_subset(p.types))
    }

    /// The projection of the sector `γΣ_J` onto `Σ_I`, which is the sector
    /// `γ_I Σ_K`.
    pub fn c_plus(&self, left_types: GenSet, gamma: &NormalForm, right_types: GenSet) -> Result<SectorRef> {
        let split = self.double_coset_minimize(gamma, left_types, right_types)?;
        let k = self.commuting_k(&split.rep, left_types, right_types)?;
        Ok(SectorRef::new(self, &split.left, k))
    }

    /// Decides whether a finite chamber set is a metric ball, centred at its
    /// shortest chamber, of some sector. Returns the sector and the radius.
    ///
    /// Infinite-order generators only contribute exponents up to the largest
    /// one occurring in the set.
    pub fn sector_recognize(&self, chambers: &[Chamber]) -> Result<Option<(SectorRef, usize)>> {
        let set: BTreeSet<&Chamber> = chambers.iter().collect();
        let Some(&first) = set.first() else {
            return Ok(None);
        };
        let back = self.invert(first);
        let mut local = BTreeSet::new();
        for c in &set {
            local.insert(self.multiply(&back, c)?);
        }
        let mut types = GenSet::EMPTY;
        let mut exp_bound = 1;
        let mut radius = 0;
        for x in &local {
            if let [s] = x.syllables() {
                types.insert(s.gen);
            }
            radius = radius.max(x.syllable_length());
            for s in x.syllables() {
                if self.spec().order(s.gen) == Order::Infinite {
                    exp_bound = exp_bound.max(s.exp.abs());
                }
            }
        }
        let ball: BTreeSet<NormalForm> = self
            .subgroup_ball(types, radius, exp_bound)?
            .into_iter()
            .collect();
        if ball == local {
            Ok(Some((SectorRef::new(self, first, types), radius)))
        } else {
            Ok(None)
        }
    }

    /// One rotation per building-wall crossing the set, i.e. separating two
    /// adjacent chambers of it, in wall order.
    pub fn stabilizer_generators(&self, chambers: &[Chamber]) -> Result<Vec<NormalForm>> {
        let set: BTreeSet<&Chamber> = chambers.iter().collect();
        let mut walls: BTreeMap<WallId, NormalForm> = BTreeMap::new();
        for &x in &set {
            let back = self.invert(x);
            for &y in &set {
                if x >= y {
                    continue;
                }
                if self.multiply(&back, y)?.syllable_length() == 1 {
                    let wall = self.wall_between(x, y)?;
                    if let Entry::Vacant(slot) = walls.entry(wall) {
                        let rotation = self.rotation(slot.key(), 1)?;
                        slot.insert(rotation);
                    }
                }
            }
        }
        Ok(walls.into_values().collect())
    }
}
