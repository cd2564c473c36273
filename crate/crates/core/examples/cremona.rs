//! The quadratic Cremona map with three base points: points, lines and
//! conics under the map, and the involution property.

use deepnest::projective::{conic_through_5, Cremona, LineRP2, Poly, ProjectivePoint};

fn main() {
    let b = [ProjectivePoint::affine(0, 0), ProjectivePoint::affine(5, 1), ProjectivePoint::affine(1, 6)];
    let cr = Cremona::new([&b[0], &b[1], &b[2]]).unwrap();
    for (x, y) in [(2, 2), (-3, 7), (10, -4)] {
        let p = ProjectivePoint::affine(x, y);
        let q = cr.apply_point(&p).unwrap();
        println!("{p} -> {q} -> {}", cr.apply_point(&q).unwrap());
    }

    let through_b0 = LineRP2::through(&b[0], &ProjectivePoint::affine(3, 1)).unwrap();
    println!("line through a base point -> {}", cr.apply_curve(&Poly::linear(through_b0.coords())));
    let general = LineRP2::from_i64(1, 1, -20).unwrap();
    println!("general line -> {}", cr.apply_curve(&Poly::linear(general.coords())));

    let extra = [(7, 7), (-2, 3), (4, -5)].map(|(x, y)| ProjectivePoint::affine(x, y));
    let c = conic_through_5(&[b[0].clone(), b[1].clone(), extra[0].clone(), extra[1].clone(), extra[2].clone()]).unwrap();
    println!("conic through two base points -> {}", cr.apply_curve(&c.to_poly()));
}
