//! Fixtures shared by the benchmarks.

use ccobstruct::search::{CheckFamily, SearchSpec};

/// The full acceptance grid: `7 <= n <= 40`, odd `3 <= d <= 99`.
pub fn acceptance_grid() -> SearchSpec {
    SearchSpec {
        n_range: 7..=40,
        d_range: 3..=99,
        checks: CheckFamily::ALL.to_vec(),
        ..SearchSpec::default()
    }
}
