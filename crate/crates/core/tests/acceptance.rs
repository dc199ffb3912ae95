//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each,
//! and exits non-zero if any fails.

mod common;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use posetc::antichain::antichain_poset;
use posetc::cli::{run_with_config, Config};
use posetc::oracle::{are_isomorphic, is_order_isomorphism};
use posetc::{
    all_antichains, embed, fixtures, image_subposet, join_homomorphism_witness, lattice_tables,
    powerset_order_status, singleton_meet_check, validate_partial_order, verify_embedding,
    ElementId, FinitePoset, GenConfig, OrderWitness,
};

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    let took = start.elapsed();
    ensure(took < limit, format!("took {took:?}, limit {limit:?}"))
}

fn set(p: &FinitePoset, names: &[&str]) -> posetc::ElementSet {
    p.set_from_names(names).unwrap()
}

/// Expected embedding table for the six-element fixture: `TABLE[row x][column z] = f_z(x)`.
const EXAMPLE1: [[&str; 6]; 6] = [
    ["{0}", "{0}", "{0}", "{0}", "{0}", "{0}"],
    ["{0}", "{a}", "{0}", "{a}", "{a}", "{a}"],
    ["{0}", "{0}", "{b}", "{b}", "{b}", "{b}"],
    ["{0}", "{a}", "{b}", "{c}", "{a,b}", "{c}"],
    ["{0}", "{a}", "{b}", "{a,b}", "{d}", "{d}"],
    ["{0}", "{a}", "{b}", "{c}", "{d}", "{1}"],
];

fn fixture_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn golden_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli(args: &[&str]) -> posetc::cli::Outcome {
    let argv = std::iter::once("posetc").chain(args.iter().copied());
    run_with_config(argv, Config::default())
}

fn fixture_table() -> Check {
    let start = Instant::now();
    let p = fixtures::fig1();
    let family = embed(&p);
    let mut cells = 0;
    for (xi, row) in EXAMPLE1.iter().enumerate() {
        for (zi, want) in row.iter().enumerate() {
            let got = p.format_set(family.value(ElementId(zi), ElementId(xi)));
            ensure(
                got == *want,
                format!("f_{}({}) = {got}, expected {want}", p.names()[zi], p.names()[xi]),
            )?;
            cells += 1;
        }
    }
    // the same table through the CLI
    let out = cli(&["embed", fixture_path("fig1.poset").to_str().unwrap()]);
    ensure(out.code == 0, "embed exited non-zero")?;
    for (xi, line) in out.stdout.lines().skip(2).enumerate() {
        let cols: Vec<&str> = line.split('|').map(str::trim).collect();
        ensure(cols[0] == p.names()[xi], format!("row {xi} label {}", cols[0]))?;
        ensure(cols[1..] == EXAMPLE1[xi], format!("CLI row {} differs: {line}", cols[0]))?;
    }
    within(start, Duration::from_secs(1))?;
    Ok(format!("{cells} cells match"))
}

fn fixture_antichain_poset() -> Check {
    let start = Instant::now();
    let p = fixtures::fig1();
    let ap = antichain_poset(&p).map_err(|e| e.to_string())?;
    ensure(ap.len() == 9, format!("{} antichains", ap.len()))?;
    let mut edges: Vec<(String, String)> = ap
        .cover_pairs()
        .into_iter()
        .map(|(x, y)| (p.format_set(x), p.format_set(y)))
        .collect();
    edges.sort();
    let mut expected: Vec<(String, String)> = [
        ("{}", "{0}"),
        ("{0}", "{a}"),
        ("{0}", "{b}"),
        ("{a}", "{a,b}"),
        ("{b}", "{a,b}"),
        ("{a,b}", "{c}"),
        ("{a,b}", "{d}"),
        ("{c}", "{c,d}"),
        ("{d}", "{c,d}"),
        ("{c,d}", "{1}"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    expected.sort();
    ensure(edges == expected, format!("cover edges {edges:?}"))?;
    within(start, Duration::from_secs(1))?;
    Ok("9 antichains, 10 cover edges".into())
}

fn fixture_image() -> Check {
    let start = Instant::now();
    let p = fixtures::fig1();
    let image = image_subposet(&p);
    let found = are_isomorphic(&image, &p).map_err(|e| e.to_string())?;
    ensure(found.is_some(), "oracle found no isomorphism")?;
    let f_z_to_z: Vec<ElementId> = p.elements().collect();
    ensure(
        is_order_isomorphism(&image, &p, &f_z_to_z),
        "f_z ↦ z is not an order isomorphism",
    )?;
    ensure(image.names()[3] == "f_c", "image naming")?;
    within(start, Duration::from_secs(1))?;
    Ok("image ≅ P, f_z ↦ z admissible".into())
}

fn m3_counterexample() -> Check {
    let start = Instant::now();
    let p = fixtures::m3();
    let all = all_antichains(&p).map_err(|e| e.to_string())?;
    let shown: Vec<String> = all.iter().map(|a| p.format_set(a)).collect();
    ensure(
        shown
            == [
                "{}", "{0}", "{a}", "{b}", "{c}", "{1}", "{a,b}", "{a,c}", "{b,c}", "{a,b,c}",
            ],
        format!("antichains {shown:?}"),
    )?;
    let ap = antichain_poset(&p).map_err(|e| e.to_string())?;
    // expected: bottom, {0}, three atoms, three pairs, {a,b,c}, {1}
    let covers: Vec<(String, String)> = ap
        .cover_pairs()
        .into_iter()
        .map(|(x, y)| (p.format_set(x), p.format_set(y)))
        .collect();
    ensure(covers.len() == 14, format!("{} cover edges, expected 14", covers.len()))?;
    ensure(lattice_tables(&p).is_lattice, "M3 not detected as lattice")?;
    ensure(lattice_tables(&ap.order).is_lattice, "A(M3) not detected as lattice")?;

    let report = join_homomorphism_witness(&p).map_err(|e| e.to_string())?;
    ensure(!report.holds, "homomorphism unexpectedly holds")?;
    let w = report.witness.ok_or("no witness")?;
    let id = |n: &str| p.lookup(n).unwrap();
    ensure((w.a, w.b) == (id("a"), id("b")), "witness pair is not (a, b)")?;
    ensure(w.combined == id("1"), "a ∨ b ≠ 1")?;
    let column_f = [
        ("0", &["0"][..]),
        ("a", &["a"][..]),
        ("b", &["b"][..]),
        ("c", &["0"][..]),
        ("1", &["a", "b"][..]),
    ];
    for (x, want) in column_f {
        ensure(
            *w.pointwise.get(id(x)).as_set() == set(&p, want),
            format!("f({x}) = {}", p.format_set(w.pointwise.get(id(x)))),
        )?;
    }
    ensure(
        p.format_set(w.image.get(id("1"))) == "{1}",
        "f_1(1) ≠ {1}",
    )?;
    ensure(w.differences.contains(&id("1")), "f_1 and f agree at 1")?;
    ensure(w.to_order_witness().replay(&p), "witness does not replay")?;
    within(start, Duration::from_secs(1))?;
    Ok("10 antichains, both lattices, f_(a∨b) = f_1 ≠ f_a ∨ f_b".into())
}

fn remark_singleton_meets() -> Check {
    let start = Instant::now();
    let mut lattices = vec![fixtures::m3()];
    lattices.extend(common::random_lattices(50));
    let non_chains = lattices
        .iter()
        .filter(|l| l.strict_relation_count() < l.len() * (l.len() - 1) / 2)
        .count();
    for (i, l) in lattices.iter().enumerate() {
        let tables = lattice_tables(l);
        let family = embed(l);
        for a in l.elements() {
            for x in l.elements() {
                let meet = tables.meet(a, x).ok_or("missing meet")?;
                ensure(
                    *family.value(a, x).as_set() == l.set_of([meet]),
                    format!("lattice #{i}: f_a(x) ≠ {{a ∧ x}} at ({}, {})", l.name(a), l.name(x)),
                )?;
            }
        }
        ensure(
            singleton_meet_check(l).map_err(|e| e.to_string())?.is_none(),
            format!("lattice #{i}: singleton_meet_check reported a witness"),
        )?;
    }
    within(start, Duration::from_secs(10))?;
    Ok(format!(
        "M3 + 50 random lattices ({non_chains} not chains), all f_a(x) = {{a ∧ x}}"
    ))
}

fn theorem_suite() -> Check {
    let start = Instant::now();
    let mut corpus = common::theorem_corpus();
    corpus.push(fixtures::fig1());
    corpus.push(fixtures::m3());
    for (i, p) in corpus.iter().enumerate() {
        if let Some(w) = verify_embedding(p) {
            return Err(format!("poset #{i}: {}", w.describe(p)));
        }
        let ap = antichain_poset(p).map_err(|e| format!("poset #{i}: {e}"))?;
        validate_partial_order(ap.order.matrix())
            .map_err(|v| format!("poset #{i}: antichain order {v}"))?;
    }
    within(start, Duration::from_secs(30))?;
    Ok(format!("{} posets: embedding and antichain order verified", corpus.len()))
}

fn powerset_failure() -> Check {
    let start = Instant::now();
    let (mut broken, mut flat) = (0, 0);
    let mut corpus = common::theorem_corpus();
    for n in 0..=8 {
        corpus.push(fixtures::antichain(n));
        corpus.push(posetc::random_poset(&GenConfig::new(n, 0.0, 77 + n as u64).unwrap()));
    }
    for (i, p) in corpus.iter().enumerate() {
        let status = powerset_order_status(p).map_err(|e| e.to_string())?;
        let comparable = p.strict_relation_count() > 0;
        if comparable {
            broken += 1;
            ensure(!status.is_partial_order, format!("poset #{i}: reported partial order"))?;
            let w = status.witness.ok_or(format!("poset #{i}: no witness"))?;
            ensure(
                matches!(w, OrderWitness::Antisymmetry { .. }) && w.replay(p),
                format!("poset #{i}: witness does not replay"),
            )?;
        } else {
            flat += 1;
            ensure(
                status.is_partial_order && status.witness.is_none(),
                format!("antichain #{i}: reported not a partial order"),
            )?;
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!("{broken} with comparable pairs rejected, {flat} antichains accepted"))
}

fn golden_files() -> Check {
    let mut checked = 0;
    for fixture in ["fig1", "m3"] {
        let file = fixture_path(&format!("{fixture}.poset"));
        let file = file.to_str().unwrap();
        for (args, golden) in [
            (vec!["embed", file, "--json"], format!("{fixture}.embed.json")),
            (vec!["antichains", file], format!("{fixture}.antichains.txt")),
            (vec!["hasse", file, "--dot"], format!("{fixture}.hasse.dot")),
        ] {
            let want = std::fs::read_to_string(golden_path(&golden))
                .map_err(|e| format!("{golden}: {e}"))?;
            let first = cli(&args);
            let second = cli(&args);
            ensure(first.code == 0, format!("{args:?} exited {}", first.code))?;
            ensure(first.stdout == want, format!("{args:?} differs from {golden}"))?;
            ensure(first == second, format!("{args:?} not stable across runs"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} golden files byte-exact"))
}

fn main() {
    let criteria: [(&str, fn() -> Check); 8] = [
        ("1 embedding table of the six-element fixture", fixture_table),
        ("2 antichain poset of the six-element fixture", fixture_antichain_poset),
        ("3 image subposet isomorphic to the fixture", fixture_image),
        ("4 M3 antichains and join counterexample", m3_counterexample),
        ("5 singleton meets on lattices", remark_singleton_meets),
        ("6 embedding + antichain order on 200 random posets", theorem_suite),
        ("7 powerset preorder failure", powerset_failure),
        ("8 golden CLI outputs", golden_files),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        match check() {
            Ok(detail) => println!("PASS  criterion {name}: {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL  criterion {name}: {why}");
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", 8 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
