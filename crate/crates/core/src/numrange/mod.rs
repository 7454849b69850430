//! Numerical ranges of finite matrices and the planar geometry used to
//! compare them with predicted shapes.
//!
//! Support convention: `h(θ) = max Re(e^{iθ}z)` over the set.

pub mod eigen;
pub mod geometry;
pub mod sweep;
pub(crate) mod tridiag;

pub use eigen::{hermitian_extreme_eig, positive_definite_margin, DEFAULT_EIG_TOL};
pub use geometry::{
    convex_hull, hull_hausdorff, regular_polygon, shape_containment, Containment, DiscSpec, EllipseSpec, HullPolygon,
    Shape,
};
pub use sweep::{
    boundary_point, boundary_points, circle_image_hull, ellipse_from_2x2, hull_of_boundary, image_samples,
    nesting_margin, numerical_range_hull, sample_image_hull, sample_map_hull, support_function, support_margin,
    sweep_angle, BoundaryPoint, DEFAULT_ANGLES,
};
