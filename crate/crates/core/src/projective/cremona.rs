use num_bigint::BigInt;
use num_traits::Zero;

use super::point::{cross, det3, dot, ProjectivePoint, V3};
use super::poly::Poly;
use super::GeometryError;

/// The standard quadratic transformation (x0:x1:x2) -> (x1x2 : x0x2 : x0x1)
/// conjugated by the projectivity sending the base points to the
/// coordinate vertices.
#[derive(Clone, Debug)]
pub struct Cremona {
    /// Base point representatives, the columns of M.
    base: [V3; 3],
    /// Rows of adj(M); A M = det(M) I.
    adj: [V3; 3],
}

impl Cremona {
    pub fn new(base: [&ProjectivePoint; 3]) -> Result<Self, GeometryError> {
        Self::with_reps(base.map(|p| p.coords().clone()))
    }

    /// Uses the given representatives as the columns of M.
    pub fn with_reps(base: [V3; 3]) -> Result<Self, GeometryError> {
        if det3(&base[0], &base[1], &base[2]).is_zero() {
            return Err(GeometryError::SingularBase);
        }
        let adj = [
            cross(&base[1], &base[2]),
            cross(&base[2], &base[0]),
            cross(&base[0], &base[1]),
        ];
        Ok(Cremona { base, adj })
    }

    pub fn base_reps(&self) -> &[V3; 3] {
        &self.base
    }

    /// Coordinates relative to the base triangle.
    pub fn to_base(&self, x: &V3) -> V3 {
        [dot(&self.adj[0], x), dot(&self.adj[1], x), dot(&self.adj[2], x)]
    }

    pub fn from_base(&self, y: &V3) -> V3 {
        let b = &self.base;
        std::array::from_fn(|i| &b[0][i] * &y[0] + &b[1][i] * &y[1] + &b[2][i] * &y[2])
    }

    pub fn apply_vec(&self, x: &V3) -> Option<V3> {
        let y = self.to_base(x);
        if y.iter().any(Zero::is_zero) {
            return None;
        }
        let z = [&y[1] * &y[2], &y[0] * &y[2], &y[0] * &y[1]];
        Some(super::point::primitive(&self.from_base(&z)))
    }

    pub fn apply_point(&self, p: &ProjectivePoint) -> Result<ProjectivePoint, GeometryError> {
        self.apply_vec(p.coords())
            .and_then(ProjectivePoint::new)
            .ok_or_else(|| GeometryError::OnBaseLine(p.to_string()))
    }

    /// Proper transform of the curve `f = 0`: exceptional base-line factors
    /// are removed.
    pub fn apply_curve(&self, f: &Poly) -> Poly {
        let cr = [
            Poly::var(1).mul(&Poly::var(2)),
            Poly::var(0).mul(&Poly::var(2)),
            Poly::var(0).mul(&Poly::var(1)),
        ];
        // x_i = sum_k base[k][i] cr_k(y)
        let subs: [Poly; 3] = std::array::from_fn(|i| {
            (0..3).fold(Poly::zero(), |acc, k| acc.add(&cr[k].scale(&self.base[k][i])))
        });
        let g = f.substitute(&subs);
        let (g, _) = g.strip_monomial();
        g.linear_substitute(&self.adj).primitive()
    }

    pub fn determinant(&self) -> BigInt {
        det3(&self.base[0], &self.base[1], &self.base[2])
    }
}
