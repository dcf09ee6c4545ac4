//! Finite-difference realizations of X_j, Y_j, T, R, L and L_α.
//!
//! All derivatives use 4th-order central stencils with a two-cell invalid
//! boundary layer per application (excluded from norms, never one-sided).
//! Fourth order is required: the eigenfunction acceptance tolerance at
//! h = 0.125 is out of reach for the 3-point stencils by more than an order
//! of magnitude on the high-(λ,k) spherical functions.

use super::grid::SampledField;
use super::spectral::abs_t;
use super::{OperatorError, OperatorParams};
use crate::par::par_map;
use num_complex::Complex64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum DiffOrder {
    First,
    Second,
}

/// 4th-order central derivative along one axis; boundary layer zeroed and
/// marked invalid.
fn derivative(f: &SampledField, ax: usize, order: DiffOrder) -> Result<SampledField, OperatorError> {
    let axis = f.grid.axes[ax];
    if axis.count < 5 {
        return Err(OperatorError::GridTooSmall { axis: ax });
    }
    let s = f.grid.strides()[ax];
    let c = axis.count;
    let h = axis.spacing;
    let v = &f.values;
    let values = par_map(v.len(), |flat| {
        let i = (flat / s) % c;
        if i < 2 || i + 2 >= c {
            return Complex64::new(0.0, 0.0);
        }
        match order {
            DiffOrder::First => {
                (-v[flat + 2 * s] + v[flat + s] * 8.0 - v[flat - s] * 8.0 + v[flat - 2 * s])
                    / (12.0 * h)
            }
            DiffOrder::Second => {
                (-v[flat + 2 * s] + v[flat + s] * 16.0 - v[flat] * 30.0 + v[flat - s] * 16.0
                    - v[flat - 2 * s])
                    / (12.0 * h * h)
            }
        }
    });
    Ok(SampledField { grid: f.grid.clone(), values, invalid_margin: f.invalid_margin + 2 })
}

/// Multiply pointwise by the coordinate of one axis.
fn scale_by_axis_coord(f: &SampledField, ax: usize) -> SampledField {
    let axis = f.grid.axes[ax];
    let s = f.grid.strides()[ax];
    let values = f
        .values
        .iter()
        .enumerate()
        .map(|(flat, v)| v * axis.coord((flat / s) % axis.count))
        .collect();
    SampledField { grid: f.grid.clone(), values, invalid_margin: f.invalid_margin }
}

/// Which left-invariant field to apply.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VectorField {
    /// X_j = ∂x_j - ½ y_j ∂t (1-based j).
    X(usize),
    /// Y_j = ∂y_j + ½ x_j ∂t (1-based j).
    Y(usize),
    /// T = ∂t.
    T,
}

/// Apply X_j, Y_j or T by composing 4th-order central differences with the
/// printed coordinate coefficients.
pub fn apply_vector_field(which: VectorField, f: &SampledField) -> Result<SampledField, OperatorError> {
    let n = f.grid.n();
    let t_ax = 2 * n;
    match which {
        VectorField::T => derivative(f, t_ax, DiffOrder::First),
        VectorField::X(j) => {
            assert!((1..=n).contains(&j), "X_j index out of range");
            let dx = derivative(f, j - 1, DiffOrder::First)?;
            let dt = derivative(f, t_ax, DiffOrder::First)?;
            let ydt = scale_by_axis_coord(&dt, n + j - 1);
            Ok(dx.axpby(1.0, &ydt, -0.5))
        }
        VectorField::Y(j) => {
            assert!((1..=n).contains(&j), "Y_j index out of range");
            let dy = derivative(f, n + j - 1, DiffOrder::First)?;
            let dt = derivative(f, t_ax, DiffOrder::First)?;
            let xdt = scale_by_axis_coord(&dt, j - 1);
            Ok(dy.axpby(1.0, &xdt, 0.5))
        }
    }
}

/// Rotation generator R = Σ_j (x_j ∂y_j - y_j ∂x_j).
pub fn apply_r(f: &SampledField) -> Result<SampledField, OperatorError> {
    let n = f.grid.n();
    let mut acc: Option<SampledField> = None;
    for j in 0..n {
        let dy = derivative(f, n + j, DiffOrder::First)?;
        let xdy = scale_by_axis_coord(&dy, j);
        let dx = derivative(f, j, DiffOrder::First)?;
        let ydx = scale_by_axis_coord(&dx, n + j);
        let term = xdy.axpby(1.0, &ydx, -1.0);
        acc = Some(match acc {
            None => term,
            Some(a) => a.axpby(1.0, &term, 1.0),
        });
    }
    Ok(acc.unwrap())
}

/// Sublaplacian L = Δ_{R^{2n}} + ¼|z|² ∂t² + ∂t R.
pub fn apply_l(f: &SampledField) -> Result<SampledField, OperatorError> {
    let n = f.grid.n();
    let t_ax = 2 * n;

    let mut lap: Option<SampledField> = None;
    for ax in 0..2 * n {
        let d2 = derivative(f, ax, DiffOrder::Second)?;
        lap = Some(match lap {
            None => d2,
            Some(a) => a.axpby(1.0, &d2, 1.0),
        });
    }
    let mut out = lap.unwrap();

    let mut d2t = derivative(f, t_ax, DiffOrder::Second)?;
    // ¼ |z|² factor, accumulated axis by axis
    let strides = f.grid.strides();
    let values = par_map(d2t.values.len(), |flat| {
        let mut zsq = 0.0;
        for ax in 0..2 * n {
            let a = f.grid.axes[ax];
            let x = a.coord((flat / strides[ax]) % a.count);
            zsq += x * x;
        }
        d2t.values[flat] * (0.25 * zsq)
    });
    d2t.values = values;
    out = out.axpby(1.0, &d2t, 1.0);

    let rf = apply_r(f)?;
    let trf = derivative(&rf, t_ax, DiffOrder::First)?;
    Ok(out.axpby(1.0, &trf, 1.0))
}

/// L_α = L + α |T|.
pub fn apply_l_alpha(p: &OperatorParams, f: &SampledField) -> Result<SampledField, OperatorError> {
    if p.n as usize != f.grid.n() {
        return Err(OperatorError::DimensionMismatch);
    }
    let lf = apply_l(f)?;
    if p.alpha == 0.0 {
        return Ok(lf);
    }
    let at = abs_t(f);
    Ok(lf.axpby(1.0, &at.field, p.alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::heisenberg::{spherical_phi, GroupPoint, SphericalIndex};
    use crate::operators::grid::Grid;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn t_of_linear_field_is_one() {
        let g = Grid::h1(1.0, 7, 2.0, 12);
        let f = SampledField::sample(g, |p| c(p.t));
        let tf = apply_vector_field(VectorField::T, &f).unwrap();
        let ones = SampledField { values: vec![c(1.0); tf.values.len()], ..tf.clone() };
        assert!(tf.max_interior_diff(&ones, 2, true) < 1e-13);
    }

    #[test]
    fn x_of_constant_vanishes() {
        let g = Grid::h1(1.0, 7, 2.0, 12);
        let f = SampledField::sample(g, |_| c(3.5));
        let xf = apply_vector_field(VectorField::X(1), &f).unwrap();
        assert!(xf.max_interior_abs(2, true) < 1e-14);
    }

    #[test]
    fn x_of_x_times_t_is_symbolic() {
        // X₁(x₁ t) = t - ½ y₁ x₁, exact for the 4th-order stencil
        let g = Grid::h1(1.5, 9, 2.0, 12);
        let f = SampledField::sample(g.clone(), |p| c(p.z[0].re * p.t));
        let xf = apply_vector_field(VectorField::X(1), &f).unwrap();
        let expect = SampledField::sample(g, |p| c(p.t - 0.5 * p.z[0].im * p.z[0].re));
        assert!(xf.max_interior_diff(&expect, 2, true) < 1e-12);
    }

    #[test]
    fn l_of_constant_vanishes_and_of_zsq_is_4n() {
        let g = Grid::h1(2.0, 11, 2.0, 12);
        let one = SampledField::sample(g.clone(), |_| c(1.0));
        let l_one = apply_l(&one).unwrap();
        assert!(l_one.max_interior_abs(4, true) < 1e-12);

        let zsq = SampledField::sample(g.clone(), |p| c(p.z_norm_sq()));
        let l_zsq = apply_l(&zsq).unwrap();
        let four = SampledField::sample(g, |_| c(4.0));
        assert!(l_zsq.max_interior_diff(&four, 4, true) < 1e-11);
    }

    #[test]
    fn eigenfunction_relation_coarse_grid() {
        // φ_{λ,0}, n = 1: L φ = -|λ| φ; coarse grid, proportionally loose bound
        let g = Grid::h1(6.0, 33, std::f64::consts::PI, 32);
        let idx = SphericalIndex::new(1.0, 0).unwrap();
        let f = SampledField::sample(g.clone(), |p| spherical_phi(&idx, p).unwrap());
        let lf = apply_l(&f).unwrap();
        let eig = SampledField::sample(g, |p| spherical_phi(&idx, p).unwrap() * (-1.0));
        let err = lf.max_interior_diff(&eig, 4, true);
        let scale = eig.max_interior_abs(4, true);
        assert!(err / scale < 5e-3, "rel err {}", err / scale);
    }

    #[test]
    fn composition_of_fields_matches_l() {
        // Σ (X² + Y²) agrees with the coordinate formula for L
        let g = Grid::h1(3.0, 49, 2.0, 32);
        let f = SampledField::sample(g, |p: &GroupPoint| {
            c((-p.z_norm_sq() - p.t * p.t).exp())
        });
        let lf = apply_l(&f).unwrap();
        let xx = apply_vector_field(
            VectorField::X(1),
            &apply_vector_field(VectorField::X(1), &f).unwrap(),
        )
        .unwrap();
        let yy = apply_vector_field(
            VectorField::Y(1),
            &apply_vector_field(VectorField::Y(1), &f).unwrap(),
        )
        .unwrap();
        let comp = xx.axpby(1.0, &yy, 1.0);
        let err = lf.max_interior_diff(&comp, 4, true);
        assert!(err < 5e-3, "composition mismatch {err}");
    }

    #[test]
    fn heisenberg_bracket() {
        // [X₁, Y₁] = T on smooth data
        let g = Grid::h1(3.0, 49, 2.0, 32);
        let f = SampledField::sample(g, |p: &GroupPoint| {
            c((-p.z_norm_sq() - 0.5 * p.t * p.t).exp() * (p.z[0].re + 0.3 * p.t))
        });
        let xy = apply_vector_field(VectorField::X(1), &apply_vector_field(VectorField::Y(1), &f).unwrap()).unwrap();
        let yx = apply_vector_field(VectorField::Y(1), &apply_vector_field(VectorField::X(1), &f).unwrap()).unwrap();
        let bracket = xy.axpby(1.0, &yx, -1.0);
        let tf = apply_vector_field(VectorField::T, &f).unwrap();
        let err = bracket.max_interior_diff(&tf, 4, true);
        assert!(err < 1e-3, "bracket mismatch {err}");
    }

    #[test]
    fn l_alpha_with_zero_alpha_equals_l() {
        let g = Grid::h1(2.0, 9, 2.0, 8);
        let f = SampledField::sample(g, |p: &GroupPoint| c((-p.z_norm_sq() - p.t * p.t).exp()));
        let p = OperatorParams::new(1, 0.0).unwrap();
        let a = apply_l_alpha(&p, &f).unwrap();
        let b = apply_l(&f).unwrap();
        assert_eq!(a.values, b.values);
    }

    #[test]
    fn grid_too_small_detected() {
        let g = Grid::new(vec![
            super::super::grid::Axis::symmetric_closed(1.0, 3),
            super::super::grid::Axis::symmetric_closed(1.0, 3),
            super::super::grid::Axis::symmetric(1.0, 4),
        ]);
        let f = SampledField::sample(g, |_| c(1.0));
        assert!(matches!(
            apply_vector_field(VectorField::X(1), &f),
            Err(OperatorError::GridTooSmall { .. })
        ));
    }

    #[test]
    fn pole_parameter_rejected() {
        assert!(matches!(
            OperatorParams::new(1, 3.0),
            Err(OperatorError::PoleParameter { .. })
        ));
        assert!(OperatorParams::new(1, 0.5).is_ok());
    }
}
