use gridlabel::audit::{max_reuse, naive_max_reuse};
use gridlabel::gadget::{build_named, SHAPES};
use gridlabel::io::{Bundle, InstanceFile, LabelingFile};
use gridlabel::{build_conflicts, build_oct_g_h, build_square_g1, build_tri_gv, clique_lower_bound, feasible, SearchConfig, Verdict};

#[test]
fn element_counts() {
    assert_eq!(build_square_g1().gadget.element_count(), 32);
    let tri = build_tri_gv();
    assert_eq!(tri.gadget.element_count(), 30);
    assert_eq!((tri.spokes().len(), tri.ring().len(), tri.rest().len()), (6, 6, 18));
    let oct = build_oct_g_h();
    assert_eq!(oct.gadget.element_count(), 86);
    assert_eq!(oct.h().len(), 26);
}

#[test]
fn branch_and_bound_reuse_matches_enumeration() {
    for shape in SHAPES {
        let g = build_named(shape).unwrap();
        let dist = g.distances();
        let all: Vec<usize> = (0..g.element_count()).collect();
        for e in 0..g.element_count() {
            let fast = max_reuse(&dist, e, &all).unwrap();
            assert_eq!(fast.cap, naive_max_reuse(&dist, e, &all), "{shape} element {e}");
            for (i, &a) in fast.witness.iter().enumerate() {
                assert!(dist.reusable(e, a));
                assert!(fast.witness[i + 1..].iter().all(|&b| dist.reusable(a, b)));
            }
        }
    }
}

#[test]
fn clique_bound_is_below_feasible_spans() {
    // palettes known to be feasible for each gadget
    for (shape, sat_at) in [("square-g", 9), ("square-g1", 11), ("oct-gh", 34)] {
        let m = build_named(shape).unwrap().model(1, 2);
        let out = feasible(&m, &SearchConfig::with_max_label(sat_at)).unwrap();
        assert_eq!(out.verdict, Verdict::Sat, "{shape}");
        assert!(clique_lower_bound(&m) <= sat_at);
    }
    let oct = build_oct_g_h();
    let h = oct.gadget.model(1, 2).restrict(oct.h()).unwrap();
    assert!(clique_lower_bound(&h) >= 25);
}

#[test]
fn gadget_instances_round_trip() {
    for shape in SHAPES {
        let g = build_named(shape).unwrap();
        let f = InstanceFile::from_gadget(&g, 1, 2);
        let back = InstanceFile::from_json(&f.to_json().unwrap()).unwrap();
        assert_eq!(back, f);
        let p = back.to_patch().unwrap();
        assert_eq!(build_conflicts(&p, 1, 2, g.mode).pairs(), g.model(1, 2).pairs());
    }
}

#[test]
fn any_changed_byte_breaks_the_digest_link() {
    let g = build_named("square-g").unwrap();
    let f = InstanceFile::from_gadget(&g, 1, 2);
    let lab = LabelingFile::new(&f, &gridlabel::Labeling::empty(f.element_count())).unwrap();
    let json = f.to_json().unwrap();
    let mut checked = 0;
    let digits: Vec<usize> = json.bytes().enumerate().filter(|(_, b)| b.is_ascii_digit()).map(|(i, _)| i).collect();
    for &i in digits.iter().step_by(7) {
        let mut bytes = json.clone().into_bytes();
        bytes[i] = if bytes[i] == b'9' { b'8' } else { bytes[i] + 1 };
        let Ok(changed) = InstanceFile::from_json(std::str::from_utf8(&bytes).unwrap()) else { continue };
        assert!(lab.labeling_for(&changed).is_err());
        checked += 1;
    }
    assert!(checked > 10);
}

#[test]
fn bundles_round_trip() {
    let g = build_named("square-g1").unwrap();
    let m = g.model(1, 2);
    let w = feasible(&m, &SearchConfig::with_max_label(11)).unwrap().witness.unwrap();
    let b = Bundle::new(InstanceFile::from_gadget(&g, 1, 2), &w).unwrap();
    let back = Bundle::from_json(&b.to_json().unwrap()).unwrap();
    assert_eq!(back.labeling.labeling_for(&back.instance).unwrap(), w);
}
