//! Inputs shared by the benchmarks under `benches/`.

use gtspace::{make_space, GtSpace};

/// Point labels `p0 .. p{n-1}`.
fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("p{i}")).collect()
}

/// The chain `∅ ⊂ {p0} ⊂ {p0,p1} ⊂ ...`, missing the whole set.
pub fn chain(n: usize) -> GtSpace {
    let names = labels(n);
    let opens: Vec<Vec<String>> = (1..n).map(|k| names[..k].to_vec()).collect();
    make_space(names, opens).expect("a chain is union-closed")
}

/// Pairs `{p0,p1}, {p1,p2}, ...` and all their unions.
pub fn overlapping_pairs(n: usize) -> GtSpace {
    let names = labels(n);
    let pairs: Vec<u64> = (0..n.saturating_sub(1)).map(|i| 0b11 << i).collect();
    let mut family = vec![0u64];
    for p in pairs {
        let grown: Vec<u64> = family.iter().map(|f| f | p).collect();
        family.extend(grown);
    }
    family.sort_unstable();
    family.dedup();
    let opens: Vec<Vec<String>> = family
        .iter()
        .map(|m| (0..n).filter(|i| m >> i & 1 == 1).map(|i| names[i].clone()).collect())
        .collect();
    make_space(names, opens).expect("unions were closed")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inputs_build() {
        assert_eq!(chain(5).gamma().len(), 5);
        assert_eq!(overlapping_pairs(4).gamma().len(), 7);
    }
}
