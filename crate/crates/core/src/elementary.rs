//! Elementarity of subgroups generated by two elliptic elements.
//!
//! For an elliptic pair `⟨A, B⟩` the group is elementary exactly when the
//! two share a fixed point (cyclic case) or both have order two (the
//! dihedral-type `⟨kz, -1/z⟩` case). In the second case `AB` is hyperbolic
//! and translates by twice the distance between the fixed points.

use serde::{Deserialize, Serialize};

use crate::error::{GeometryError, Result};
use crate::metric::distance;
use crate::moebius::{ElementClass, EllipticDatum, GroupElement, Order};
use crate::tol;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairDiagnosis {
    pub shared_fixed_point: bool,
    pub orders: (Order, Order),
    pub elementary: bool,
    pub product_class: ElementClass,
    pub product_translation_length: Option<f64>,
    pub fixed_point_distance: f64,
}

fn data(a: &GroupElement, b: &GroupElement) -> Result<(EllipticDatum, EllipticDatum)> {
    Ok((a.elliptic_datum()?, b.elliptic_datum()?))
}

pub fn shares_fixed_point(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    let (da, db) = data(a, b)?;
    Ok(distance(da.fixed, db.fixed) < tol::COINCIDE)
}

pub fn diagnose_pair(a: &GroupElement, b: &GroupElement) -> Result<PairDiagnosis> {
    let (da, db) = data(a, b)?;
    let fixed_point_distance = distance(da.fixed, db.fixed);
    let shared_fixed_point = fixed_point_distance < tol::COINCIDE;
    let both_two = da.order == Order::Finite(2) && db.order == Order::Finite(2);
    let product = a.compose(b);
    let product_class = product.classify();
    Ok(PairDiagnosis {
        shared_fixed_point,
        orders: (da.order, db.order),
        elementary: shared_fixed_point || both_two,
        product_class,
        product_translation_length: product.translation_length().ok(),
        fixed_point_distance,
    })
}

/// `|T_AB − 2ρ(z, w)|` for order-two `A`, `B` with fixed points `z ≠ w`.
pub fn order_two_product_residual(a: &GroupElement, b: &GroupElement) -> Result<f64> {
    let (da, db) = data(a, b)?;
    if da.order != Order::Finite(2) || db.order != Order::Finite(2) {
        return Err(GeometryError::WrongOrders(
            da.order.to_string(),
            db.order.to_string(),
        ));
    }
    let rho = distance(da.fixed, db.fixed);
    if rho < tol::COINCIDE {
        return Err(GeometryError::CoincidentFixedPoints);
    }
    let t = a.compose(b).translation_length()?;
    Ok((t - 2.0 * rho).abs())
}
