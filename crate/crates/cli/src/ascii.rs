//! Best-effort drawing of a sequence on the colored square.

use std::fmt::Write as _;

use latmult_core::PathSequence;

/// One character per box: the band it lies in (`0` above every path). The top
/// row is `y = 0`. The color table follows, one line per band.
pub fn render(z: &PathSequence) -> String {
    let ell = z.ell() as i32;
    let mut out = String::new();
    writeln!(out, "bands (ell = {ell}, k = {}):", z.k()).unwrap();
    for b in (-(ell - 1)..=0).rev() {
        let row: Vec<String> = (0..ell)
            .map(|a| {
                let band = z
                    .paths()
                    .iter()
                    .position(|p| p.is_below(a, b))
                    .map_or(0, |i| i + 1);
                band.to_string()
            })
            .collect();
        writeln!(out, "  {}", row.join(" ")).unwrap();
    }
    let t = z.color_counts();
    let colors: Vec<String> = t.colors().map(|j| format!("{j:>3}")).collect();
    writeln!(out, "{:<6}{}", "color", colors.join("")).unwrap();
    for i in 0..z.k() {
        let cells: Vec<String> = t.colors().map(|j| format!("{:>3}", t.get(i, j))).collect();
        writeln!(out, "{:<6}{}", format!("band {i}"), cells.join("")).unwrap();
    }
    out
}
