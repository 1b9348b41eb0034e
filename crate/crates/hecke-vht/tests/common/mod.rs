//! Shared exhaustive-universe helpers for the integration tests.

use hecke_vht::IncreasingTableau;

/// Every increasing tableau whose shape fits in a `rows x cols` box with
/// entries in `1..=max_entry`, including the empty one.
pub fn tableau_universe(rows: usize, cols: usize, max_entry: usize) -> Vec<IncreasingTableau> {
    let mut shapes = Vec::new();
    collect_shapes(rows, cols, &mut Vec::new(), &mut shapes);
    let mut out = Vec::new();
    for shape in shapes {
        let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
        fill(&shape, &mut grid, 0, 0, max_entry, &mut out);
    }
    out
}

fn collect_shapes(
    rows_left: usize,
    max_part: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    out.push(current.clone());
    if rows_left == 0 {
        return;
    }
    for part in 1..=max_part {
        current.push(part);
        collect_shapes(rows_left - 1, part, current, out);
        current.pop();
    }
}

fn fill(
    shape: &[usize],
    grid: &mut [Vec<usize>],
    r: usize,
    c: usize,
    max_entry: usize,
    out: &mut Vec<IncreasingTableau>,
) {
    if r == shape.len() {
        out.push(IncreasingTableau::from_rows(grid.to_vec()).expect("fill keeps increasingness"));
        return;
    }
    let (nr, nc) = if c + 1 < shape[r] {
        (r, c + 1)
    } else {
        (r + 1, 0)
    };
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(grid[r][c - 1] + 1);
    }
    if r > 0 {
        lo = lo.max(grid[r - 1][c] + 1);
    }
    for entry in lo..=max_entry {
        grid[r][c] = entry;
        fill(shape, grid, nr, nc, max_entry, out);
    }
}
