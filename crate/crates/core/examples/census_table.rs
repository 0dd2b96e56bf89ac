//! Prints cell counts for every (g, m) with h <= 4.
use parslit_core::census::{enumerate_cells, Method};

fn main() {
    for h in 1..=4usize {
        for g in 0..=h / 2 {
            let m = h - 2 * g;
            let method = if h <= 2 { Method::Brute } else { Method::Stepped };
            let t = std::time::Instant::now();
            let r = enumerate_cells(g, m, method).expect("within bounds");
            println!(
                "g={g} m={m} h={h} {method}: sequences={} labels={} saddle={} ({:?})",
                r.total_sequences(),
                r.total_labels(),
                r.saddle_degenerate,
                t.elapsed()
            );
        }
    }
}
