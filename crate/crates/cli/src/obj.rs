//! Wavefront OBJ export of triangle outlines as closed polyline loops.
//!
//! This is the one lossy path in the tool: rational coordinates are
//! rounded to `f64` for viewers, so the output is for visualization only
//! and must never be parsed back as a test vector.

use num_traits::ToPrimitive;
use trilink::invariants::Linking;

/// Render the outlines as `l` polyline loops, one object per triangle.
pub fn export_obj(l: &Linking) -> String {
    let mut out = String::new();
    out.push_str("# visualization-only export: exact rational coordinates rounded to f64\n");
    out.push_str("# each triangle outline is a closed polyline loop\n");
    let mut vertex_index = 1usize; // OBJ indices are 1-based
    for (i, t) in l.triangles().iter().enumerate() {
        out.push_str(&format!("o triangle{i}\n"));
        for v in t.vertices() {
            let x = v.x.to_f64().unwrap_or(f64::NAN);
            let y = v.y.to_f64().unwrap_or(f64::NAN);
            let z = v.z.to_f64().unwrap_or(f64::NAN);
            out.push_str(&format!("v {x} {y} {z}\n"));
        }
        out.push_str(&format!(
            "l {} {} {} {}\n",
            vertex_index,
            vertex_index + 1,
            vertex_index + 2,
            vertex_index
        ));
        vertex_index += 3;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use trilink::canonical::unlink3;

    #[test]
    fn obj_output_has_loops_and_lossiness_marker() {
        let text = export_obj(&unlink3());
        assert!(text.starts_with("# visualization-only"));
        assert_eq!(text.matches("\nv ").count() + usize::from(text.starts_with("v ")), 9);
        assert_eq!(text.matches("\nl ").count(), 3);
        // Loops close on their starting vertex.
        assert!(text.contains("l 1 2 3 1"));
        assert!(text.contains("l 4 5 6 4"));
        assert!(text.contains("l 7 8 9 7"));
    }
}
