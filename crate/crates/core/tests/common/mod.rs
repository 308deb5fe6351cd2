//! Shared fixtures and randomized generators for the integration suites.

#![allow(dead_code)]

use std::path::PathBuf;

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use stpoly::doc::{parse_document, Document, ParseOptions};
use stpoly::geometry::{ConvexRationalPolygon, Point};
use stpoly::rat::{rat, rat_int, Rat};
use stpoly::semitoric::{
    CutDirection, GroupElement, MarkedPoint, SemitoricRepresentative, VertexKind,
};
use stpoly::surgeries::{corner_chop, ChopSpec};

pub fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../fixtures")
        .join(name)
}

pub fn load(name: &str) -> Document {
    let text = std::fs::read_to_string(fixture_path(name))
        .unwrap_or_else(|e| panic!("cannot read fixture {name}: {e}"));
    parse_document(&text, &ParseOptions::default())
        .unwrap_or_else(|e| panic!("cannot parse fixture {name}: {e}"))
        .document
}

pub fn load_rep(name: &str) -> SemitoricRepresentative {
    match load(name) {
        Document::Representative(r) => r,
        Document::Polygon(p) => SemitoricRepresentative::new(p, vec![]),
        other => panic!("fixture {name} is not a representative: {other:?}"),
    }
}

pub fn pt(x: i64, y: i64) -> Point {
    Point::new(rat_int(x), rat_int(y))
}

/// Base polygons for randomized Delzant sampling.
fn delzant_seeds() -> Vec<ConvexRationalPolygon> {
    let square = |k: i64| {
        ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(k, 0), pt(k, k), pt(0, k)]).unwrap()
    };
    let triangle = |k: i64| {
        ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(k, 0), pt(0, k)]).unwrap()
    };
    let hirzebruch = |k: i64| {
        ConvexRationalPolygon::from_vertices(vec![pt(0, 0), pt(2 * k, 0), pt(k, k), pt(0, k)])
            .unwrap()
    };
    vec![
        square(2),
        square(4),
        triangle(3),
        triangle(5),
        hirzebruch(2),
        hirzebruch(3),
    ]
}

/// A random Delzant polygon: a seed polygon, a few corner chops, and a
/// random shear.
pub fn random_delzant(rng: &mut ChaCha8Rng) -> ConvexRationalPolygon {
    let seeds = delzant_seeds();
    let mut rep = SemitoricRepresentative::new(
        seeds[rng.gen_range(0..seeds.len())].clone(),
        vec![],
    );
    let chops = rng.gen_range(0..3);
    for _ in 0..chops {
        let v = rng.gen_range(0..rep.polygon().len());
        let denom = rng.gen_range(2..5);
        let spec = ChopSpec {
            vertex: v,
            size: rat(1, denom),
        };
        if let Ok(outcome) = corner_chop(&rep, &spec) {
            rep = outcome.result;
        }
    }
    let shear = rng.gen_range(-2..=2);
    rep = rep
        .apply_group(&GroupElement::with_shear(0, shear))
        .unwrap();
    rep.polygon().clone()
}

/// A random valid marked representative: a figure fixture or a freshly
/// marked Delzant polygon, pushed around by a random group element.
pub fn random_representative(rng: &mut ChaCha8Rng) -> SemitoricRepresentative {
    let fixture_pool = [
        "st_poly_triangle_a.json",
        "st_poly_hidden_a.json",
        "st_poly_2ff_tl.json",
        "st_poly_non_simple_tl.json",
        "gen_spins_st.json",
        "gen_spins_2ff.json",
        "gen_spins_non_simple.json",
        "poly_in_family_mid_up.json",
        "marked_st_poly_a.json",
        "min_type1.json",
        "min_type2.json",
        "min_type3a.json",
        "min_type3b.json",
        "min_type3c.json",
    ];
    let base = if rng.gen_bool(0.5) {
        load_rep(fixture_pool[rng.gen_range(0..fixture_pool.len())])
    } else {
        marked_delzant(rng)
    };
    let g = random_element(rng, base.mark_count());
    base.apply_group(&g).expect("closure on valid input")
}

/// Marks a random Delzant polygon under vertices where a single up cut
/// satisfies the fake or hidden condition.
fn marked_delzant(rng: &mut ChaCha8Rng) -> SemitoricRepresentative {
    for _ in 0..20 {
        let polygon = random_delzant(rng);
        let mut marks = Vec::new();
        for i in 0..polygon.len() {
            if marks.len() >= 3 {
                break;
            }
            let v = polygon.vertices()[i].clone();
            let Some((lo, hi)) = polygon.vertical_slice(&v.x) else {
                continue;
            };
            if lo == hi {
                continue;
            }
            let (v1, v2) = polygon.edge_directions_at_vertex(i).unwrap();
            let w = stpoly::geometry::det2(&v1, &v2.sheared(1));
            let fake_or_hidden =
                w == num_bigint::BigInt::from(0) || w == num_bigint::BigInt::from(1);
            if !fake_or_hidden {
                continue;
            }
            let frac = rat(rng.gen_range(1..4), 4);
            if v.y == hi {
                // Top vertex; hang the mark below it.
                let y = &lo + (&hi - &lo) * &frac;
                marks.push(MarkedPoint {
                    point: Point::new(v.x.clone(), y),
                    cut: CutDirection::Up,
                });
            } else if v.y == lo {
                let y = &lo + (&hi - &lo) * &frac;
                marks.push(MarkedPoint {
                    point: Point::new(v.x.clone(), y),
                    cut: CutDirection::Down,
                });
            }
        }
        if marks.is_empty() {
            continue;
        }
        let rep = SemitoricRepresentative::new(polygon, marks);
        if rep.validate().is_valid() {
            return rep;
        }
    }
    // Fallback: a figure that is always valid.
    load_rep("st_poly_triangle_a.json")
}

/// Random group element with |shear| <= 3 and a small rational translation.
pub fn random_element(rng: &mut ChaCha8Rng, marks: usize) -> GroupElement {
    GroupElement {
        shear: rng.gen_range(-3..=3),
        translate: rat(rng.gen_range(-8..=8), rng.gen_range(1..5)),
        flips: (0..marks)
            .map(|_| if rng.gen_bool(0.5) { -1 } else { 1 })
            .collect(),
    }
}

/// Convenience: every vertex class of a validated representative.
pub fn kinds(rep: &SemitoricRepresentative) -> Vec<VertexKind> {
    rep.validate()
        .vertex_classes
        .iter()
        .map(|c| c.kind)
        .collect()
}

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rat_i(n: i64) -> Rat {
    rat_int(n)
}
