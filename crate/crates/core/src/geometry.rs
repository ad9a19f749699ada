//! Building-walls, dials, and how galleries cross them.
//!
//! A building-wall of type `s` is the fixed set of the rotations
//! `γs^αγ⁻¹`. Two pairs `(γ, s)` and `(γ', s)` give the same wall exactly
//! when `γΓ_{star(s)} = γ'Γ_{star(s)}`, so a wall is named by its type and
//! the minimal representative `δ` of that coset. The dials of the wall are
//! the connected components of its complement; the dial of a chamber `x` is
//! the exponent of `s` in the `star(s)`-prefix of `δ⁻¹x`, so the chamber
//! `δ` itself sits in dial 0.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::oracle::Ball;
use crate::parabolic::SectorRef;
use crate::presentation::Order;
use crate::words::{Chamber, Gallery, GraphProduct, NormalForm};

/// A building-wall: its type and the minimal representative of the
/// `Γ_{star(type)}`-coset of chambers having a panel on it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WallId {
    ty: usize,
    rep: Chamber,
}

impl WallId {
    /// The wall of type `ty` through the `ty`-panel of chamber `gamma`.
    pub fn new(gp: &GraphProduct, ty: usize, gamma: &Chamber) -> Self {
        let (rep, _) = gp.i_suffix(gamma, gp.spec().star(ty));
        WallId { ty, rep }
    }

    pub fn ty(&self) -> usize {
        self.ty
    }

    pub fn rep(&self) -> &Chamber {
        &self.rep
    }
}

/// Index of a dial of a wall: a residue mod the order of the wall's type,
/// or any integer for infinite order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DialIndex(pub i64);

impl GraphProduct {
    /// The wall crossed between two adjacent chambers.
    pub fn wall_between(&self, x: &Chamber, y: &Chamber) -> Result<WallId> {
        let step = self.multiply(&self.invert(x), y)?;
        match step.syllables() {
            [s] => Ok(WallId::new(self, s.gen, x)),
            _ => Err(Error::NotAdjacent(self.format(x), self.format(y))),
        }
    }

    pub fn dial_index(&self, wall: &WallId, x: &Chamber) -> Result<DialIndex> {
        let local = self.multiply(&self.invert(&wall.rep), x)?;
        let (prefix, _) = self.i_prefix(&local, self.spec().star(wall.ty));
        let exp = prefix
            .syllables()
            .iter()
            .find(|s| s.gen == wall.ty)
            .map_or(0, |s| s.exp);
        Ok(DialIndex(match self.spec().order(wall.ty) {
            Order::Finite(m) => exp.rem_euclid(m as i64),
            Order::Infinite => exp,
        }))
    }

    pub fn separates(&self, wall: &WallId, x: &Chamber, y: &Chamber) -> Result<bool> {
        Ok(self.dial_index(wall, x)? != self.dial_index(wall, y)?)
    }

    /// The rotation `δs^αδ⁻¹` around the wall.
    pub fn rotation(&self, wall: &WallId, exp: i64) -> Result<NormalForm> {
        self.conjugate(&wall.rep, &self.generator_power(wall.ty, exp)?)
    }

    /// The image `γM` of a wall.
    pub fn translate_wall(&self, gamma: &NormalForm, wall: &WallId) -> Result<WallId> {
        Ok(WallId::new(self, wall.ty, &self.multiply(gamma, &wall.rep)?))
    }

    /// A wall is nontrivial when the link of its type has more than one
    /// vertex and at least one edge.
    pub fn is_nontrivial_wall(&self, wall: &WallId) -> bool {
        let link = self.spec().link(wall.ty);
        link.len() > 1
            && link
                .iter()
                .any(|a| link.iter().any(|b| a < b && self.spec().adjacent(a, b)))
    }

    /// Walls separating `x` from `y`, collected along a minimal gallery.
    pub fn separating_walls(&self, x: &Chamber, y: &Chamber) -> Result<BTreeSet<WallId>> {
        let gallery = self.geodesic_gallery(x, y)?;
        let walls = self.crossed_walls(&gallery)?;
        let set: BTreeSet<WallId> = walls.iter().cloned().collect();
        debug_assert_eq!(set.len(), walls.len(), "a minimal gallery crosses each wall once");
        Ok(set)
    }

    /// The wall crossed at every step, in order.
    pub fn crossed_walls(&self, gallery: &Gallery) -> Result<Vec<WallId>> {
        Ok(gallery
            .chambers()
            .iter()
            .zip(gallery.steps())
            .map(|(c, s)| WallId::new(self, s.gen, c))
            .collect())
    }

    /// True when no wall is crossed twice.
    pub fn crosses_each_wall_once(&self, gallery: &Gallery) -> Result<bool> {
        let walls = self.crossed_walls(gallery)?;
        let set: BTreeSet<&WallId> = walls.iter().collect();
        Ok(set.len() == walls.len())
    }

    /// True when the gallery length equals the distance of its endpoints.
    pub fn has_minimal_length(&self, gallery: &Gallery) -> Result<bool> {
        Ok(gallery.len() == self.distance(gallery.first(), gallery.last())?)
    }

    pub fn is_minimal(&self, gallery: &Gallery) -> Result<bool> {
        let by_walls = self.crosses_each_wall_once(gallery)?;
        debug_assert_eq!(by_walls, self.has_minimal_length(gallery)?);
        Ok(by_walls)
    }

    /// Whether the wall cuts the sector: its type lies in the sector's types
    /// and `δΓ_{star(s)}` meets `γΓ_I`.
    pub fn crosses_sector(&self, wall: &WallId, sector: &SectorRef) -> Result<bool> {
        if !sector.types().contains(wall.ty) {
            return Ok(false);
        }
        let between = self.multiply(&self.invert(sector.base()), &wall.rep)?;
        let split = self.double_coset_minimize(&between, sector.types(), self.spec().star(wall.ty))?;
        Ok(split.rep.is_identity())
    }

    /// Projects a minimal gallery pointwise onto a sector and drops
    /// repetitions. The result is again a minimal gallery.
    pub fn gallery_image(&self, gallery: &Gallery, sector: &SectorRef) -> Result<Gallery> {
        if !self.is_minimal(gallery)? {
            return Err(Error::NotMinimal);
        }
        let mut image: Vec<Chamber> = Vec::with_capacity(gallery.chambers().len());
        for c in gallery.chambers() {
            let p = self.project_to_sector(c, sector)?;
            if image.last() != Some(&p) {
                image.push(p);
            }
        }
        self.gallery(image)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    Dot,
    Json,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportVertex {
    pub id: usize,
    pub word: String,
    pub len: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dial: Option<i64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ExportEdge {
    pub src: usize,
    pub dst: usize,
    #[serde(rename = "type")]
    pub ty: String,
    pub exp: i64,
    /// Whether the edge crosses the highlighted wall.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall: Option<bool>,
}

/// A labelled chamber graph, ready for rendering.
#[derive(Debug, Clone, Serialize)]
pub struct GraphExport {
    pub vertices: Vec<ExportVertex>,
    pub edges: Vec<ExportEdge>,
}

impl GraphExport {
    pub fn render(&self, format: ExportFormat) -> String {
        match format {
            ExportFormat::Json => serde_json::to_string_pretty(self).expect("graph serializes") + "\n",
            ExportFormat::Dot => {
                let mut out = String::from("graph ball {\n");
                for v in &self.vertices {
                    match v.dial {
                        Some(d) => writeln!(out, "  v{} [label=\"{}\", dial={d}];", v.id, v.word),
                        None => writeln!(out, "  v{} [label=\"{}\"];", v.id, v.word),
                    }
                    .expect("writing to a string");
                }
                for e in &self.edges {
                    let style = if e.wall == Some(true) { ", style=bold" } else { "" };
                    writeln!(out, "  v{} -- v{} [label=\"{}^{}\"{style}];", e.src, e.dst, e.ty, e.exp)
                        .expect("writing to a string");
                }
                out.push_str("}\n");
                out
            }
        }
    }
}

/// The chamber graph on a ball. Vertices are in ShortLex order; with a
/// wall, vertices carry their dial and edges crossing the wall are marked.
pub fn export_ball(gp: &GraphProduct, ball: &Ball, wall: Option<&WallId>) -> Result<GraphExport> {
    let dials = match wall {
        Some(w) => Some(
            ball.elements()
                .iter()
                .map(|x| gp.dial_index(w, x).map(|d| d.0))
                .collect::<Result<Vec<_>>>()?,
        ),
        None => None,
    };
    Ok(GraphExport {
        vertices: ball
            .elements()
            .iter()
            .enumerate()
            .map(|(id, x)| ExportVertex {
                id,
                word: gp.format(x),
                len: x.syllable_length(),
                dial: dials.as_ref().map(|d| d[id]),
            })
            .collect(),
        edges: ball
            .edges()
            .iter()
            .map(|e| ExportEdge {
                src: e.src,
                dst: e.dst,
                ty: gp.spec().name(e.gen).to_string(),
                exp: e.exp,
                wall: dials.as_ref().map(|d| d[e.src] != d[e.dst]),
            })
            .collect(),
    })
}
