//! Scaled congruent copies on a bouquet.
//!
//! For `0 < lambda <= 2`, rotating the `lambda`-scaled centre set around
//! the common point by `alpha = arccos(lambda / 2)` puts the `j`-th point
//! on the `j`-th circle: the triangle `(O, O_j, P_j)` has sides `1`,
//! `lambda` and `1`, so the law of cosines pins the angle. `lambda = 2` is
//! the exact reflection `P_j = 2 O_j - O`.

use num_traits::Signed;

use crate::error::{Error, Result};
use crate::geometry::matrix::RatMatrix;
use crate::geometry::point::Point;
use crate::rational::{rat, rat_sqrt, rat_to_f64, Rat};

use super::Bouquet;

/// The placed points, exact when `sin(alpha)` is rational.
#[derive(Clone, Debug)]
pub struct PlacedCopy {
    pub angle: f64,
    pub scale: Rat,
    pub points: Vec<(f64, f64)>,
    pub exact_points: Option<Vec<Point>>,
}

impl PlacedCopy {
    /// Largest residual of the on-circle condition `|P_j - O_j| = 1` over
    /// all circles, in the squared form.
    pub fn max_on_circle_residual(&self, bouquet: &Bouquet) -> f64 {
        let o: Vec<(f64, f64)> = bouquet
            .centers()
            .iter()
            .map(|c| {
                let v = c.to_f64();
                (v[0], v[1])
            })
            .collect();
        self.points
            .iter()
            .zip(&o)
            .map(|(p, c)| ((p.0 - c.0).powi(2) + (p.1 - c.1).powi(2) - 1.0).abs())
            .fold(0.0, f64::max)
    }

    /// Largest deviation of pairwise squared distances from
    /// `lambda^2 * |O_i - O_j|^2`.
    pub fn max_congruence_residual(&self, bouquet: &Bouquet) -> f64 {
        let lam = rat_to_f64(&self.scale);
        let mut worst: f64 = 0.0;
        for i in 0..self.points.len() {
            for j in i + 1..self.points.len() {
                let want = lam
                    * lam
                    * rat_to_f64(
                        &bouquet.centers()[i]
                            .dist_sq(&bouquet.centers()[j])
                            .expect("dims match"),
                    );
                let got = (self.points[i].0 - self.points[j].0).powi(2)
                    + (self.points[i].1 - self.points[j].1).powi(2);
                worst = worst.max((got - want).abs());
            }
        }
        worst
    }
}

/// Places `P_j` on circle `j` so that `{P_j}` is congruent to the
/// `lambda`-scaled centre set. Exact rational arithmetic whenever
/// `1 - lambda^2/4` is a rational square (in particular `lambda = 2`).
pub fn place_scaled_copy(bouquet: &Bouquet, lambda: &Rat) -> Result<PlacedCopy> {
    if !lambda.is_positive() || lambda > &rat(2) {
        return Err(Error::InvalidParameter(format!(
            "scale must lie in (0, 2], got {lambda}"
        )));
    }
    let cos = lambda / rat(2);
    let sin_sq = rat(1) - &cos * &cos;
    let angle = rat_to_f64(&cos).acos();
    let o = bouquet.common_point();
    if let Some(sin) = rat_sqrt(&sin_sq) {
        // Exact path: rational rotation matrix.
        let rot = RatMatrix::new(vec![
            vec![cos.clone(), -sin.clone()],
            vec![sin, cos],
        ])?;
        let mut exact = Vec::with_capacity(bouquet.len());
        for c in bouquet.centers() {
            let p = o.add(&rot.apply(&c.sub(o)?)?.scale(lambda))?;
            // Law of cosines check, exactly.
            if p.dist_sq(c)? != rat(1) {
                return Err(Error::Mismatch(
                    "internal: placed point left its circle".into(),
                ));
            }
            exact.push(p);
        }
        let points = exact
            .iter()
            .map(|p| {
                let v = p.to_f64();
                (v[0], v[1])
            })
            .collect();
        return Ok(PlacedCopy {
            angle,
            scale: lambda.clone(),
            points,
            exact_points: Some(exact),
        });
    }
    // Numeric path.
    let (s, c) = angle.sin_cos();
    let ov = o.to_f64();
    let lam = rat_to_f64(lambda);
    let points = bouquet
        .centers()
        .iter()
        .map(|centre| {
            let v = centre.to_f64();
            let dx = v[0] - ov[0];
            let dy = v[1] - ov[1];
            (
                ov[0] + lam * (c * dx - s * dy),
                ov[1] + lam * (s * dx + c * dy),
            )
        })
        .collect();
    Ok(PlacedCopy {
        angle,
        scale: lambda.clone(),
        points,
        exact_points: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    fn sample_bouquet() -> Bouquet {
        Bouquet::new(
            Point::origin(2).unwrap(),
            vec![
                Point::new(vec![ratio(3, 5), ratio(4, 5)]).unwrap(),
                Point::new(vec![ratio(-5, 13), ratio(12, 13)]).unwrap(),
                Point::from_ints(&[1, 0]).unwrap(),
            ],
        )
        .unwrap()
    }

    #[test]
    fn reflection_at_scale_two() {
        let b = sample_bouquet();
        let placed = place_scaled_copy(&b, &rat(2)).unwrap();
        assert_eq!(placed.angle, 0.0);
        let exact = placed.exact_points.as_ref().expect("lambda 2 is exact");
        for (p, c) in exact.iter().zip(b.centers()) {
            // P_j = 2 O_j - O.
            let want = c.scale(&rat(2)).sub(b.common_point()).unwrap();
            assert_eq!(p, &want);
            assert_eq!(p.dist_sq(c).unwrap(), rat(1));
        }
    }

    #[test]
    fn unit_scale_is_sixty_degrees() {
        let b = sample_bouquet();
        let placed = place_scaled_copy(&b, &rat(1)).unwrap();
        assert!((placed.angle - std::f64::consts::FRAC_PI_3).abs() < 1e-12);
        assert!(placed.max_on_circle_residual(&b) < 1e-12);
        assert!(placed.max_congruence_residual(&b) < 1e-12);
    }

    #[test]
    fn rational_sine_takes_the_exact_path() {
        // lambda = 8/5: cos = 4/5, sin = 3/5.
        let b = sample_bouquet();
        let placed = place_scaled_copy(&b, &ratio(8, 5)).unwrap();
        let exact = placed.exact_points.expect("3-4-5 angle is exact");
        for (p, c) in exact.iter().zip(b.centers()) {
            assert_eq!(p.dist_sq(c).unwrap(), rat(1));
        }
    }

    #[test]
    fn irrational_scale_stays_within_tolerance() {
        // lambda ~ sqrt(2): the angle is ~45 degrees and the numeric path
        // keeps the points on their circles to high accuracy.
        let b = sample_bouquet();
        let lam = crate::rational::rat_from_f64(1.41421356).unwrap();
        let placed = place_scaled_copy(&b, &lam).unwrap();
        assert!(placed.exact_points.is_none());
        assert!((placed.angle - std::f64::consts::FRAC_PI_4).abs() < 1e-7);
        assert!(placed.max_on_circle_residual(&b) < 1e-9);
    }

    #[test]
    fn out_of_range_scale_is_rejected() {
        let b = sample_bouquet();
        assert!(place_scaled_copy(&b, &rat(3)).is_err());
        assert!(place_scaled_copy(&b, &rat(0)).is_err());
    }
}
