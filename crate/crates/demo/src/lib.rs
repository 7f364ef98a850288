//! Browser demo. Each operation is a plain function returning an HTML/SVG
//! fragment, wrapped for JavaScript by `wasm_bindgen` at the bottom.

use std::fmt::Write as _;

use latmult_core::bijection::tau;
use latmult_core::enumerate::count_by_type;
use latmult_core::permutation::{lds_length, rsk};
use latmult_core::weights::multiplicity;
use latmult_core::{Limits, PathSequence, Permutation, StandardTableau};
use num_bigint::BigUint;
use wasm_bindgen::prelude::*;

const CELL: i32 = 36;
const STROKES: [&str; 6] = ["#c0392b", "#2471a3", "#1e8449", "#7d3c98", "#b9770e", "#117a65"];

fn fill(color: i32, ell: i32) -> String {
    let hue = 200 + 160 * (color + ell - 1) / (2 * ell - 1).max(1);
    format!("hsl({hue},55%,88%)")
}

/// The colored square with the paths of `z` drawn over it.
pub fn sequence_svg(z: &PathSequence) -> String {
    let ell = z.ell() as i32;
    let side = ell * CELL;
    let pad = 8;
    let mut s = String::new();
    write!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{w}" viewBox="{v} {v} {w} {w}">"#,
        w = side + 2 * pad,
        v = -pad
    )
    .unwrap();
    for b in -(ell - 1)..=0 {
        for a in 0..ell {
            let (x, y) = (a * CELL, -b * CELL);
            let color = a + b;
            write!(
                s,
                r##"<rect x="{x}" y="{y}" width="{CELL}" height="{CELL}" fill="{}" stroke="#999"/><text x="{}" y="{}" font-size="11" text-anchor="middle" fill="#555">{color}</text>"##,
                fill(color, ell),
                x + CELL / 2,
                y + CELL / 2 + 4
            )
            .unwrap();
        }
    }
    for (i, p) in z.paths().iter().enumerate() {
        let shift = 2 * i as i32 - (z.k() as i32 - 2);
        let (mut x, mut y) = (0, side);
        let mut points = format!("{},{}", x + shift, y - shift);
        for m in p.moves() {
            match m.as_char() {
                'R' => x += CELL,
                _ => y -= CELL,
            }
            write!(points, " {},{}", x + shift, y - shift).unwrap();
        }
        write!(
            s,
            r#"<polyline points="{points}" fill="none" stroke="{}" stroke-width="3" stroke-linejoin="round"><title>p{}</title></polyline>"#,
            STROKES[i % STROKES.len()],
            i + 1
        )
        .unwrap();
    }
    s.push_str("</svg>");
    s
}

/// Band-by-color box counts as an HTML table.
pub fn color_table_html(z: &PathSequence) -> String {
    let t = z.color_counts();
    let mut s = String::from("<table class=\"counts\"><tr><th>band \\ color</th>");
    for j in t.colors() {
        write!(s, "<th>{j}</th>").unwrap();
    }
    s.push_str("</tr>");
    for i in 0..t.k() {
        write!(s, "<tr><th>{i}</th>").unwrap();
        for j in t.colors() {
            write!(s, "<td>{}</td>", t.get(i, j)).unwrap();
        }
        s.push_str("</tr>");
    }
    s.push_str("</table>");
    s
}

/// Draws `tau` of the tableau given as JSON rows, e.g. `[[1,3],[2,6],[4],[5]]`.
/// `k = 0` means `max(2, height)`.
pub fn render_tau(rows_json: &str, k: usize) -> Result<String, String> {
    let x: StandardTableau = serde_json::from_str(rows_json).map_err(|e| format!("tableau JSON: {e}"))?;
    let k = if k == 0 { x.height().max(2) } else { k };
    let z = tau(&x, k).map_err(|e| e.to_string())?;
    let mut s = format!("<p>shape {}, k = {k}</p>", x.shape());
    s.push_str(&sequence_svg(&z));
    s.push_str("<ol class=\"paths\">");
    for p in z.paths() {
        write!(s, "<li><code>{p}</code></li>").unwrap();
    }
    s.push_str("</ol>");
    s.push_str(&color_table_html(&z));
    Ok(s)
}

/// Brute-force counts of admissible and self-conjugate sequences per type.
pub fn type_table(ell: usize, k: usize) -> Result<String, String> {
    let tally = count_by_type(ell, k, &Limits::default()).map_err(|e| e.to_string())?;
    let mut s = String::from(
        "<table class=\"types\"><tr><th>λ</th><th>f<sup>λ</sup></th><th>(f<sup>λ</sup>)²</th>\
         <th>admissible</th><th>self-conjugate</th></tr>",
    );
    let (mut all, mut sc) = (BigUint::default(), BigUint::default());
    for e in tally.entries() {
        let f = e.shape.count_syt();
        write!(
            s,
            "<tr><td>{}</td><td>{f}</td><td>{}</td><td>{}</td><td>{}</td></tr>",
            e.shape,
            &f * &f,
            e.admissible,
            e.self_conjugate
        )
        .unwrap();
        all += &e.admissible;
        sc += &e.self_conjugate;
    }
    write!(s, "<tr class=\"total\"><td>total</td><td></td><td></td><td>{all}</td><td>{sc}</td></tr></table>").unwrap();
    Ok(s)
}

fn tableau_html(t: &StandardTableau) -> String {
    let mut s = String::from("<table class=\"tableau\">");
    for row in t.rows() {
        s.push_str("<tr>");
        for v in row {
            write!(s, "<td>{v}</td>").unwrap();
        }
        s.push_str("</tr>");
    }
    s.push_str("</table>");
    s
}

/// RSK tableaux and longest decreasing subsequence of a one-line word.
pub fn rsk_word(word: &str) -> Result<String, String> {
    let w: Permutation = if word.trim_start().starts_with('[') {
        serde_json::from_str(word).map_err(|e| format!("permutation JSON: {e}"))?
    } else {
        word.parse().map_err(|e: latmult_core::Error| e.to_string())?
    };
    let (p, q) = rsk(&w);
    Ok(format!(
        "<p>shape {}, longest decreasing subsequence {}</p><div class=\"pair\"><div><h3>P</h3>{}</div><div><h3>Q</h3>{}</div></div>",
        p.shape(),
        lds_length(&w),
        tableau_html(&p),
        tableau_html(&q)
    ))
}

/// `mult_{kΛ₀}(kΛ₀ − γ_ℓ)` as a decimal string.
pub fn weight_multiplicity(n: usize, k: usize, ell: usize) -> Result<String, String> {
    multiplicity(n, k, ell).map(|m| m.to_string()).map_err(|e| e.to_string())
}

#[wasm_bindgen(js_name = renderTau)]
pub fn render_tau_js(rows_json: &str, k: usize) -> Result<String, JsValue> {
    render_tau(rows_json, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = typeTable)]
pub fn type_table_js(ell: usize, k: usize) -> Result<String, JsValue> {
    type_table(ell, k).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = rskWord)]
pub fn rsk_word_js(word: &str) -> Result<String, JsValue> {
    rsk_word(word).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen(js_name = multiplicity)]
pub fn multiplicity_js(n: usize, k: usize, ell: usize) -> Result<String, JsValue> {
    weight_multiplicity(n, k, ell).map_err(|e| JsValue::from_str(&e))
}
