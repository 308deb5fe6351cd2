use stpoly::geometry::{ConvexRationalPolygon, Point};
use stpoly::rat::{rat, rat_int, Rat};
use stpoly::semitoric::{CutDirection, MarkedPoint, SemitoricRepresentative};
use stpoly::surgeries::*;
use num_traits::Zero;

fn type3a(a: &Rat, b: &Rat, n: i64) -> SemitoricRepresentative {
    SemitoricRepresentative::new(
        ConvexRationalPolygon::from_vertices(vec![
            Point::new(Rat::zero(), Rat::zero()),
            Point::new(rat_int(n) * a + b, Rat::zero()),
            Point::new(a + b, a.clone()),
            Point::new(a.clone(), a.clone()),
        ]).unwrap(),
        vec![MarkedPoint { point: Point::new(a.clone(), a / rat_int(2)), cut: CutDirection::Up }],
    )
}

fn main() {
    for (b, n) in [(1i64,1i64),(1,2),(1,3),(2,1),(2,2),(2,3)] {
        let rep = type3a(&rat_int(1), &rat_int(b), n);
        let edges = reversible_edges(&rep).unwrap();
        println!("type3a(1,{b},{n}): reversible edges {edges:?}");
        for e in 0..rep.polygon().len() {
            match reverse_chop(&rep, e) {
                Ok(r) => println!("  edge {e}: reverses to {:?} marks {:?}", r.polygon(), r.marks()),
                Err(err) => println!("  edge {e}: {err}"),
            }
        }
    }
}
