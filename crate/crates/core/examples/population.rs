//! Runs every check over the spaces on at most `N` points (default 3) and
//! prints per-theorem counts.

use gtspace::explorer::{enumerate_up_to, summarize};

fn main() {
    let n: usize = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(3);
    let spaces = enumerate_up_to(n, false).expect("n in 1..=5");
    let summary = summarize(&spaces);
    println!("spaces {}", summary.spaces);
    for t in &summary.tallies {
        println!("{:<55} {:>8} {:>8} {:>8}", t.id, t.verified, t.vacuous, t.failed);
        if let Some(w) = &t.first_failure {
            let sets: Vec<String> = w.subsets.iter().map(|(k, s)| format!("{k}={}", w.space.render(*s))).collect();
            let gamma: Vec<String> = w.space.gamma().iter().map(|s| w.space.render(s)).collect();
            println!("    gamma {} {} : {}", gamma.join(" "), sets.join(" "), w.description);
        }
    }
    println!("empty kernel spaces {}", summary.empty_kernel_spaces);
    println!("urysohn step continuity {:?}", summary.urysohn_continuity);
}
