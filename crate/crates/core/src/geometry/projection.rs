//! Isometric projection of the 4-permutohedron's hyperplane into R^3.
//!
//! The axes come from Gram–Schmidt on `(1,-1,0,0)`, `(0,1,-1,0)`,
//! `(0,0,1,-1)` in that order. They are kept unnormalized with rational
//! entries; the division by the axis length is the only floating point step.

use crate::rational::Rational;

use super::GeometryError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Projection {
    origin: Vec<Rational>,
    /// Pairwise orthogonal, not normalized.
    axes: Vec<Vec<Rational>>,
    axis_norms_sq: Vec<Rational>,
    level: Rational,
}

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

impl Projection {
    /// Orthogonalizes `vectors` in order. Points are expected on the
    /// hyperplane `sum x_i = level`.
    pub fn gram_schmidt(origin: Vec<Rational>, vectors: &[Vec<Rational>], level: Rational) -> Self {
        let mut axes: Vec<Vec<Rational>> = Vec::new();
        let mut norms: Vec<Rational> = Vec::new();
        for v in vectors {
            let mut w = v.clone();
            for (axis, norm) in axes.iter().zip(&norms) {
                let c = dot(v, axis) / norm;
                for (wi, ai) in w.iter_mut().zip(axis) {
                    *wi = &*wi - &(&c * ai);
                }
            }
            norms.push(dot(&w, &w));
            axes.push(w);
        }
        Projection {
            origin,
            axes,
            axis_norms_sq: norms,
            level,
        }
    }

    /// The fixed projection for the 4-permutohedron, centered at its
    /// barycenter `(5/2, 5/2, 5/2, 5/2)`.
    pub fn permutohedron4() -> Self {
        let r = Rational::from_integer;
        let half5 = Rational::new(5, 2);
        Projection::gram_schmidt(
            vec![half5; 4],
            &[
                vec![r(1), r(-1), r(0), r(0)],
                vec![r(0), r(1), r(-1), r(0)],
                vec![r(0), r(0), r(1), r(-1)],
            ],
            r(10),
        )
    }

    /// Unnormalized axes, exact.
    pub fn axes(&self) -> &[Vec<Rational>] {
        &self.axes
    }

    pub fn axis_norms_sq(&self) -> &[Rational] {
        &self.axis_norms_sq
    }

    pub fn origin(&self) -> &[Rational] {
        &self.origin
    }

    pub fn project(&self, point: &[Rational]) -> Result<[f64; 3], GeometryError> {
        if point.len() != self.origin.len() {
            return Err(GeometryError::OffHyperplane(format!(
                "expected {} coordinates, got {}",
                self.origin.len(),
                point.len()
            )));
        }
        let sum: Rational = point.iter().sum();
        if sum != self.level {
            return Err(GeometryError::OffHyperplane(format!(
                "coordinate sum is {sum}, expected {}",
                self.level
            )));
        }
        let shifted: Vec<Rational> = point.iter().zip(&self.origin).map(|(p, o)| p - o).collect();
        let mut out = [0.0; 3];
        for (k, (axis, norm)) in self.axes.iter().zip(&self.axis_norms_sq).enumerate().take(3) {
            out[k] = dot(&shifted, axis).to_f64() / norm.to_f64().sqrt();
        }
        Ok(out)
    }
}

/// Projects a point of the hyperplane `sum x_i = 10` in R^4 to R^3.
pub fn project_to_3d(point: &[Rational]) -> Result<[f64; 3], GeometryError> {
    Projection::permutohedron4().project(point)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::permutohedron::Permutohedron;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x)).collect()
    }

    fn dist(a: [f64; 3], b: [f64; 3]) -> f64 {
        a.iter().zip(&b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
    }

    #[test]
    fn basis_is_orthogonal() {
        let p = Projection::permutohedron4();
        let r = Rational::from_integer;
        assert_eq!(p.axis_norms_sq(), &[r(2), Rational::new(3, 2), Rational::new(4, 3)]);
        for i in 0..3 {
            for j in 0..i {
                assert!(dot(&p.axes()[i], &p.axes()[j]).is_zero());
            }
        }
    }

    #[test]
    fn barycenter_maps_to_origin() {
        let b = vec![Rational::new(5, 2); 4];
        assert_eq!(project_to_3d(&b).unwrap(), [0.0, 0.0, 0.0]);
    }

    #[test]
    fn swap_distance_is_sqrt2() {
        let a = project_to_3d(&ints(&[1, 2, 3, 4])).unwrap();
        let b = project_to_3d(&ints(&[2, 1, 3, 4])).unwrap();
        assert!((dist(a, b) - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn isometry_on_all_vertex_pairs() {
        let p4 = Permutohedron::new(4).unwrap();
        let images: Vec<[f64; 3]> = p4
            .vertices()
            .iter()
            .map(|v| project_to_3d(&v.point).unwrap())
            .collect();
        let radius = dist(images[0], [0.0; 3]);
        for (i, u) in p4.vertices().iter().enumerate() {
            assert!((dist(images[i], [0.0; 3]) - radius).abs() < 1e-12);
            for (j, w) in p4.vertices().iter().enumerate() {
                let exact: Rational = u
                    .point
                    .iter()
                    .zip(&w.point)
                    .map(|(a, b)| (a - b) * (a - b))
                    .sum();
                assert!((dist(images[i], images[j]) - exact.to_f64().sqrt()).abs() < 1e-12);
            }
        }
        assert!((radius - 5f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn off_hyperplane_is_rejected() {
        assert!(matches!(
            project_to_3d(&ints(&[1, 2, 3, 5])),
            Err(GeometryError::OffHyperplane(_))
        ));
        assert!(matches!(project_to_3d(&ints(&[1, 2, 7])), Err(GeometryError::OffHyperplane(_))));
    }
}
