//! Wedge of d-1 vectors in dimension d.
//!
//! The wedge is the unique vector orthogonal to its arguments whose length
//! is the parallelepiped volume they span and whose sign completes them to a
//! positively oriented basis: the counterclockwise perpendicular in the
//! plane, the cross product in space.

use fields::{Vec2, Vec3};

use crate::StriatedError;

/// Planar wedge: `y` rotated a quarter turn counterclockwise.
#[inline]
pub fn wedge2(y: Vec2) -> Vec2 {
    y.perp()
}

/// Spatial wedge: the cross product `y1 x y2`.
#[inline]
pub fn wedge3(y1: Vec3, y2: Vec3) -> Vec3 {
    y1.cross(y2)
}

/// Dimension-generic wedge for d = 2 and d = 3.
///
/// Expects exactly d-1 slices of length d and returns the wedge as a
/// `Vec<f64>` of length d; any other shape is rejected.
pub fn wedge(vectors: &[&[f64]]) -> Result<Vec<f64>, StriatedError> {
    match vectors {
        [y] if y.len() == 2 => Ok(vec![-y[1], y[0]]),
        [a, b] if a.len() == 3 && b.len() == 3 => Ok(vec![
            a[1] * b[2] - a[2] * b[1],
            a[2] * b[0] - a[0] * b[2],
            a[0] * b[1] - a[1] * b[0],
        ]),
        _ => Err(StriatedError::WedgeShape {
            count: vectors.len(),
            lens: vectors.iter().map(|v| v.len()).collect(),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn planar_wedge_is_counterclockwise_perpendicular() {
        let w = wedge2(Vec2::new(3.0, -2.0));
        assert_eq!(w, Vec2::new(2.0, 3.0));
        assert_eq!(wedge2(Vec2::new(1.0, 0.0)), Vec2::new(0.0, 1.0));
    }

    #[test]
    fn spatial_wedge_matches_cross_product() {
        let w = wedge3(Vec3::new(1.0, 0.0, 0.0), Vec3::new(0.0, 1.0, 0.0));
        assert_eq!(w, Vec3::new(0.0, 0.0, 1.0));
    }

    #[test]
    fn generic_wedge_agrees_with_typed_versions() {
        let w = wedge(&[&[3.0, -2.0]]).unwrap();
        assert_eq!(w, vec![2.0, 3.0]);
        let w = wedge(&[&[1.0, 2.0, 3.0], &[0.0, 1.0, 0.0]]).unwrap();
        assert_eq!(w, vec![-3.0, 0.0, 1.0]);
    }

    #[test]
    fn generic_wedge_rejects_bad_shapes() {
        assert!(matches!(
            wedge(&[&[1.0, 2.0, 3.0]]),
            Err(StriatedError::WedgeShape { .. })
        ));
        assert!(matches!(
            wedge(&[&[1.0, 2.0], &[3.0, 4.0]]),
            Err(StriatedError::WedgeShape { .. })
        ));
        assert!(matches!(wedge(&[]), Err(StriatedError::WedgeShape { .. })));
        assert!(matches!(
            wedge(&[&[1.0, 2.0, 3.0], &[1.0, 2.0]]),
            Err(StriatedError::WedgeShape { .. })
        ));
    }
}
