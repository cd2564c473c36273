//! Line pencils, principal triangles and conic pencils in exact arithmetic.

use deepnest::projective::{
    conic_pencil_events, conic_through_5, intersect_triangles, line_pencil_sweep, principal_segment, Labeled,
    LineRP2, ProjectivePoint,
};
use deepnest::Sign;

fn pt(l: u32, x: i64, y: i64) -> Labeled {
    (l, ProjectivePoint::affine(x, y))
}

fn main() {
    let j = LineRP2::infinity();
    let base = pt(0, 0, 0);
    let ring = [pt(1, 10, 0), pt(2, 3, 9), pt(3, -8, 6), pt(4, -8, -6), pt(5, 3, -9)];
    let s = line_pencil_sweep(&base, &ring, Sign::Plus, &j).unwrap();
    println!("sweep around a pentagon: order {:?}, jumps {:?}", s.order, s.jumps);
    let far = pt(0, 40, 3);
    let s = line_pencil_sweep(&far, &ring, Sign::Plus, &j).unwrap();
    println!("sweep from outside: order {:?}, {} jump(s)", s.order, s.jump_count());

    let seg = principal_segment(&ring[0].1, &ring[2].1, &j).unwrap();
    let mid = ProjectivePoint::affine(1, 3);
    let beyond = ProjectivePoint::affine(28, -6);
    println!("segment 13: contains {mid} {}, contains {beyond} {}", seg.in_principal(&mid, &j), seg.in_principal(&beyond, &j));
    println!("  complementary segment contains {beyond}: {}", seg.in_complement(&beyond, &j));

    let pts = [pt(1, 0, 0), pt(2, 8, 0), pt(3, 0, 8), pt(4, 8, 8)];
    let t = |a: usize, b: usize, c: usize| [&pts[a], &pts[b], &pts[c]];
    let x = intersect_triangles(&[t(0, 1, 2), t(1, 2, 3)], &j).unwrap();
    println!("123 ∩ 234 = {}", x.describe(&pts));

    let five = [(3, 4), (-4, 3), (5, 0), (0, -5), (-3, -4)].map(|(x, y)| ProjectivePoint::affine(x, y));
    println!("conic through five points: {:?}", conic_through_5(&five).unwrap().coeffs());

    let square = [pt(1, 0, 0), pt(2, 4, 0), pt(3, 4, 4), pt(4, 0, 4)];
    for e in conic_pencil_events(&square, &[pt(5, 1, 2), pt(6, 7, -1)]).unwrap() {
        println!("pencil event {:?} at ({}, {})", e.label, e.parameter[0], e.parameter[1]);
    }
}
