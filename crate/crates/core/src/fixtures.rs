//! Small named posets used by the tests and the CLI examples.

use crate::poset::FinitePoset;

/// Six elements `0 < a, b < c, d < 1` with `a, b` both below `c` and `d`.
pub fn fig1() -> FinitePoset {
    FinitePoset::from_relations(
        &["0", "a", "b", "c", "d", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("a", "c"),
            ("a", "d"),
            ("b", "c"),
            ("b", "d"),
            ("c", "1"),
            ("d", "1"),
        ],
    )
    .expect("fixture is a poset")
}

/// The diamond lattice with three atoms `a, b, c`.
pub fn m3() -> FinitePoset {
    FinitePoset::from_relations(
        &["0", "a", "b", "c", "1"],
        &[
            ("0", "a"),
            ("0", "b"),
            ("0", "c"),
            ("a", "1"),
            ("b", "1"),
            ("c", "1"),
        ],
    )
    .expect("fixture is a poset")
}

/// `n` pairwise incomparable elements `x0 .. x{n-1}`.
pub fn antichain(n: usize) -> FinitePoset {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    FinitePoset::from_relations::<_, &str>(&names, &[]).expect("fixture is a poset")
}

/// The chain `c0 < c1 < ... < c{n-1}`.
pub fn chain(n: usize) -> FinitePoset {
    let names: Vec<String> = (0..n).map(|i| format!("c{i}")).collect();
    let pairs: Vec<(String, String)> = names
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    FinitePoset::from_relations(&names, &pairs).expect("fixture is a poset")
}

/// Subsets of a `k`-element set under inclusion. Element names are the bit
/// masks written as `s<mask>`.
pub fn boolean_lattice(k: u32) -> FinitePoset {
    let size = 1usize << k;
    let names: Vec<String> = (0..size).map(|m| format!("s{m}")).collect();
    let mut pairs = Vec::new();
    for m in 0..size {
        for bit in 0..k {
            if m & (1 << bit) == 0 {
                pairs.push((names[m].clone(), names[m | (1 << bit)].clone()));
            }
        }
    }
    FinitePoset::from_relations(&names, &pairs).expect("fixture is a poset")
}

/// Text-format source of [`fig1`].
pub const FIG1_TEXT: &str = "\
# six-element poset with two incomparable coatoms
elements: 0 a b c d 1
relations:
0 a
0 b
a c
a d
b c
b d
c 1
d 1
";

/// Text-format source of [`m3`].
pub const M3_TEXT: &str = "\
# diamond lattice M3
elements: 0 a b c 1
relations:
0 a
0 b
0 c
a 1
b 1
c 1
";
