//! Structured uniform grids on boxes and space-time cylinders, with
//! boundary-face classification into accessible (Cauchy-data) and
//! inaccessible parts.

use crate::error::{Error, Result};
use std::sync::Arc;

/// Role of a grid axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AxisRole {
    /// A spatial coordinate x_1 ... x_n.
    Spatial,
    /// The time coordinate of a space-time cylinder.
    Time,
}

/// Descriptor of one uniform axis.
#[derive(Debug, Clone)]
pub struct Axis {
    pub role: AxisRole,
    pub min: f64,
    pub max: f64,
    pub count: usize,
}

impl Axis {
    pub fn spatial(min: f64, max: f64, count: usize) -> Self {
        Axis { role: AxisRole::Spatial, min, max, count }
    }

    pub fn time(min: f64, max: f64, count: usize) -> Self {
        Axis { role: AxisRole::Time, min, max, count }
    }

    pub fn spacing(&self) -> f64 {
        (self.max - self.min) / (self.count - 1) as f64
    }
}

/// A structured uniform grid. Node indexing is lexicographic over the
/// multi-index (the last axis varies fastest) and bijective with it.
///
/// Immutable after construction; shared via `Arc`.
#[derive(Debug, Clone)]
pub struct Grid {
    axes: Vec<Axis>,
    spacing: Vec<f64>,
    strides: Vec<usize>,
    node_count: usize,
}

/// Minimum nodes per axis: second-derivative stencils need interior room.
pub const MIN_AXIS_NODES: usize = 5;

/// Builds a grid from axis descriptors.
pub fn build_grid(axes: Vec<Axis>) -> Result<Arc<Grid>> {
    if axes.is_empty() || axes.len() > 3 {
        return Err(Error::InvalidAxis {
            axis: 0,
            reason: format!("expected 1..=3 axes, got {}", axes.len()),
        });
    }
    let time_axes = axes.iter().filter(|a| a.role == AxisRole::Time).count();
    if time_axes > 1 {
        return Err(Error::InvalidAxis {
            axis: 0,
            reason: format!("at most one time axis allowed, got {time_axes}"),
        });
    }
    for (k, ax) in axes.iter().enumerate() {
        if ax.count < MIN_AXIS_NODES {
            return Err(Error::InvalidAxis {
                axis: k,
                reason: format!(
                    "axis needs at least {MIN_AXIS_NODES} nodes (got {})",
                    ax.count
                ),
            });
        }
        if !(ax.max > ax.min) {
            return Err(Error::InvalidAxis {
                axis: k,
                reason: format!("axis needs max > min (got [{}, {}])", ax.min, ax.max),
            });
        }
    }
    let spacing: Vec<f64> = axes.iter().map(Axis::spacing).collect();
    let mut strides = vec![1usize; axes.len()];
    for k in (0..axes.len().saturating_sub(1)).rev() {
        strides[k] = strides[k + 1] * axes[k + 1].count;
    }
    let node_count = axes.iter().map(|a| a.count).product();
    Ok(Arc::new(Grid { axes, spacing, strides, node_count }))
}

impl Grid {
    pub fn ndim(&self) -> usize {
        self.axes.len()
    }

    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn axis(&self, k: usize) -> &Axis {
        &self.axes[k]
    }

    pub fn spacing(&self, k: usize) -> f64 {
        self.spacing[k]
    }

    pub fn node_count(&self) -> usize {
        self.node_count
    }

    /// Volume of one grid cell, the quadrature weight of every node sum.
    pub fn cell_volume(&self) -> f64 {
        self.spacing.iter().product()
    }

    /// Index of the time axis, if the grid has one.
    pub fn time_axis(&self) -> Option<usize> {
        self.axes.iter().position(|a| a.role == AxisRole::Time)
    }

    /// Indices of the spatial axes.
    pub fn spatial_axes(&self) -> Vec<usize> {
        (0..self.ndim())
            .filter(|&k| self.axes[k].role == AxisRole::Spatial)
            .collect()
    }

    pub fn linear_index(&self, multi: &[usize]) -> usize {
        debug_assert_eq!(multi.len(), self.ndim());
        multi.iter().zip(&self.strides).map(|(i, s)| i * s).sum()
    }

    pub fn multi_index(&self, node: usize) -> Vec<usize> {
        let mut rem = node;
        self.strides
            .iter()
            .map(|s| {
                let i = rem / s;
                rem %= s;
                i
            })
            .collect()
    }

    /// Neighbor of `node` shifted by `offset` nodes along `axis`;
    /// `None` when the shift leaves the grid.
    pub fn shift(&self, node: usize, axis: usize, offset: isize) -> Option<usize> {
        let i = (node / self.strides[axis]) % self.axes[axis].count;
        let j = i as isize + offset;
        if j < 0 || j >= self.axes[axis].count as isize {
            return None;
        }
        Some((node as isize + offset * self.strides[axis] as isize) as usize)
    }

    pub fn coordinate(&self, node: usize, axis: usize) -> f64 {
        let i = (node / self.strides[axis]) % self.axes[axis].count;
        self.axes[axis].min + i as f64 * self.spacing[axis]
    }

    pub fn coordinates(&self, node: usize) -> Vec<f64> {
        (0..self.ndim()).map(|k| self.coordinate(node, k)).collect()
    }

    /// Whether the node lies on any grid face.
    pub fn is_boundary(&self, node: usize) -> bool {
        (0..self.ndim()).any(|k| {
            let i = (node / self.strides[k]) % self.axes[k].count;
            i == 0 || i == self.axes[k].count - 1
        })
    }

    /// Faces the node lies on, as (axis, sign) with sign -1 for the min
    /// face and +1 for the max face.
    pub fn faces_of(&self, node: usize) -> Vec<(usize, i8)> {
        let mut faces = Vec::new();
        for k in 0..self.ndim() {
            let i = (node / self.strides[k]) % self.axes[k].count;
            if i == 0 {
                faces.push((k, -1));
            } else if i == self.axes[k].count - 1 {
                faces.push((k, 1));
            }
        }
        faces
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.node_count
    }
}

/// Tag of one boundary node.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundaryTag {
    /// Carries Cauchy data.
    AccessibleCauchy,
    /// No data given here; the continuation target.
    Inaccessible,
    /// The t = t_min plane of a space-time grid.
    InitialPlane,
    /// The t = t_max plane of a space-time grid.
    FinalPlane,
}

/// Per-node boundary classification. Interior nodes carry no entry.
#[derive(Debug, Clone)]
pub struct BoundaryClassification {
    /// One entry per grid node: `None` for interior nodes.
    tags: Vec<Option<(BoundaryTag, usize, i8)>>,
    accessible: Vec<usize>,
    initial_plane: Vec<usize>,
    final_plane: Vec<usize>,
}

impl BoundaryClassification {
    pub fn tag(&self, node: usize) -> Option<BoundaryTag> {
        self.tags[node].map(|(t, _, _)| t)
    }

    /// Outward normal of the face the node was assigned to, as
    /// (axis, sign).
    pub fn normal(&self, node: usize) -> Option<(usize, i8)> {
        self.tags[node].map(|(_, a, s)| (a, s))
    }

    /// Nodes tagged accessible, in ascending node order.
    pub fn accessible_nodes(&self) -> &[usize] {
        &self.accessible
    }

    pub fn initial_plane_nodes(&self) -> &[usize] {
        &self.initial_plane
    }

    pub fn final_plane_nodes(&self) -> &[usize] {
        &self.final_plane
    }

    pub fn boundary_node_count(&self) -> usize {
        self.tags.iter().filter(|t| t.is_some()).count()
    }
}

/// Classifies every boundary node of `grid`.
///
/// Nodes on the time planes are tagged `InitialPlane`/`FinalPlane` (time
/// faces take precedence at space-time corners). Remaining boundary nodes
/// are tagged by the accessible-region predicate, evaluated at node
/// coordinates. The stored normal is the outward normal of the lowest-index
/// spatial face the node lies on.
pub fn classify_boundary<F>(grid: &Grid, accessible: F) -> BoundaryClassification
where
    F: Fn(&[f64]) -> bool,
{
    let time_axis = grid.time_axis();
    let mut tags = vec![None; grid.node_count()];
    let mut acc = Vec::new();
    let mut initial = Vec::new();
    let mut fin = Vec::new();

    for node in grid.nodes() {
        let faces = grid.faces_of(node);
        if faces.is_empty() {
            continue;
        }
        // Time plane wins at corners.
        let time_face = time_axis.and_then(|ta| faces.iter().find(|(a, _)| *a == ta).copied());
        if let Some((ta, sign)) = time_face {
            let tag = if sign < 0 { BoundaryTag::InitialPlane } else { BoundaryTag::FinalPlane };
            tags[node] = Some((tag, ta, sign));
            if sign < 0 {
                initial.push(node);
            } else {
                fin.push(node);
            }
            continue;
        }
        let (axis, sign) = faces[0];
        let coords = grid.coordinates(node);
        let tag = if accessible(&coords) {
            BoundaryTag::AccessibleCauchy
        } else {
            BoundaryTag::Inaccessible
        };
        tags[node] = Some((tag, axis, sign));
        if tag == BoundaryTag::AccessibleCauchy {
            acc.push(node);
        }
    }

    BoundaryClassification { tags, accessible: acc, initial_plane: initial, final_plane: fin }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spacing_is_exact_arithmetic() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 11)]).unwrap();
        assert_eq!(g.spacing(0), 0.1);
    }

    #[test]
    fn node_count_is_axis_product() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 11), Axis::spatial(0.0, 2.0, 21)]).unwrap();
        assert_eq!(g.node_count(), 231);
    }

    #[test]
    fn too_few_nodes_is_rejected() {
        let err = build_grid(vec![Axis::spatial(0.0, 1.0, 3)]).unwrap_err();
        assert!(matches!(err, Error::InvalidAxis { .. }));
    }

    #[test]
    fn inverted_axis_is_rejected() {
        assert!(build_grid(vec![Axis::spatial(1.0, 1.0, 7)]).is_err());
        assert!(build_grid(vec![Axis::spatial(2.0, 1.0, 7)]).is_err());
    }

    #[test]
    fn index_round_trip_is_identity() {
        let g = build_grid(vec![
            Axis::spatial(0.0, 1.0, 5),
            Axis::spatial(-1.0, 1.0, 7),
            Axis::time(0.0, 0.5, 6),
        ])
        .unwrap();
        for node in g.nodes() {
            let m = g.multi_index(node);
            assert_eq!(g.linear_index(&m), node);
        }
    }

    #[test]
    fn boundary_count_matches_exhaustive_enumeration() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 6), Axis::spatial(0.0, 1.0, 9)]).unwrap();
        let bc = classify_boundary(&g, |_| false);
        let interior = (6 - 2) * (9 - 2);
        assert_eq!(bc.boundary_node_count(), g.node_count() - interior);
        let by_hand = g.nodes().filter(|&n| g.is_boundary(n)).count();
        assert_eq!(bc.boundary_node_count(), by_hand);
    }

    #[test]
    fn left_edge_predicate_tags_left_edge_only() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 5), Axis::spatial(0.0, 1.0, 5)]).unwrap();
        let bc = classify_boundary(&g, |x| x[0] == 0.0);
        for node in g.nodes() {
            match bc.tag(node) {
                Some(BoundaryTag::AccessibleCauchy) => {
                    assert_eq!(g.coordinate(node, 0), 0.0);
                    assert_eq!(bc.normal(node), Some((0, -1)));
                }
                Some(BoundaryTag::Inaccessible) => assert!(g.coordinate(node, 0) > 0.0),
                Some(_) => panic!("no time planes on a spatial grid"),
                None => assert!(!g.is_boundary(node)),
            }
        }
        assert_eq!(bc.accessible_nodes().len(), 5);
    }

    #[test]
    fn time_planes_take_precedence_at_corners() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 5), Axis::time(0.0, 1.0, 5)]).unwrap();
        let bc = classify_boundary(&g, |_| true);
        assert_eq!(bc.initial_plane_nodes().len(), 5);
        assert_eq!(bc.final_plane_nodes().len(), 5);
        // Lateral nodes with 0 < t < T are accessible.
        assert_eq!(bc.accessible_nodes().len(), 2 * (5 - 2));
        let corner = g.linear_index(&[0, 0]);
        assert_eq!(bc.tag(corner), Some(BoundaryTag::InitialPlane));
    }

    #[test]
    fn always_false_predicate_yields_zero_accessible() {
        let g = build_grid(vec![Axis::spatial(0.0, 1.0, 5), Axis::spatial(0.0, 1.0, 5)]).unwrap();
        let bc = classify_boundary(&g, |_| false);
        assert!(bc.accessible_nodes().is_empty());
    }
}
