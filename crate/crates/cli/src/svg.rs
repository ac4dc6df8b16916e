//! SVG rendering of the hexagon diagram.
//!
//! The geometry arrives exact; floats appear only here, at serialization.
//! Canvas is fixed at 700x700 with 100 pixels per lattice unit, so the
//! hexagon circumradius comes out at 100/sqrt(3) = 57.735 pixels. All
//! coordinates print with three decimals, which keeps output byte-stable.

use num_traits::ToPrimitive;
use octo_core::eisenstein::hexmap::{HexPoint, HexagonMapModel};
use octo_core::Rational;

pub const CANVAS: f64 = 700.0;
pub const SCALE: f64 = 100.0;
const SQRT3: f64 = 1.732_050_807_568_877_2;

fn to_f64(r: &Rational) -> f64 {
    // Every coordinate in the model is a small fraction; unwrap is safe.
    r.numer().to_f64().expect("small numerator") / r.denom().to_f64().expect("small denominator")
}

fn fx(x: &Rational) -> f64 {
    CANVAS / 2.0 + SCALE * to_f64(x)
}

/// The y field stores the coefficient of sqrt(3); screen y grows downward.
fn fy(y: &Rational) -> f64 {
    CANVAS / 2.0 - SCALE * SQRT3 * to_f64(y)
}

fn point_list(points: &[HexPoint]) -> String {
    points
        .iter()
        .map(|p| format!("{:.3},{:.3}", fx(&p.x), fy(&p.y)))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Labels for the cells, in the fixed representative order of the model.
const CELL_LABELS: [&str; 7] = ["0", "1", "-1", "\u{3c9}", "-\u{3c9}", "\u{3c9}\u{b2}", "-\u{3c9}\u{b2}"];

pub fn render(model: &HexagonMapModel) -> String {
    let mut s = String::new();
    s.push_str("<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n");
    s.push_str(&format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{c}\" height=\"{c}\" viewBox=\"0 0 {c} {c}\">\n",
        c = CANVAS as u32
    ));
    let title = if model.mirror {
        "hexagon map of the lattice quotient, mirror rule"
    } else {
        "hexagon map of the lattice quotient"
    };
    s.push_str(&format!("<title>{title}</title>\n"));
    s.push_str(&format!(
        "<rect width=\"{c}\" height=\"{c}\" fill=\"#ffffff\"/>\n",
        c = CANVAS as u32
    ));

    // Ghost copies of the central cell at the six shortest lattice
    // vectors: where the neighboring flowers sit.
    s.push_str("<g fill=\"none\" stroke=\"#c8c8c8\" stroke-width=\"1\" stroke-dasharray=\"4 4\">\n");
    let center_corners = &model.cells[0].corners;
    for t in &model.translates {
        let shifted: Vec<HexPoint> = center_corners.iter().map(|p| p.add(t)).collect();
        s.push_str(&format!(
            "<polygon class=\"translate\" points=\"{}\"/>\n",
            point_list(&shifted)
        ));
    }
    s.push_str("</g>\n");

    // Fundamental parallelogram of the ideal lattice.
    let b0 = &model.lambda_basis[0];
    let b1 = &model.lambda_basis[1];
    let origin = HexPoint::new(Rational::from_integer(0.into()), Rational::from_integer(0.into()));
    let quad = [origin.clone(), b0.clone(), b0.add(b1), b1.clone()];
    s.push_str(&format!(
        "<polygon class=\"fundamental-domain\" points=\"{}\" fill=\"none\" stroke=\"#3a6ea5\" stroke-width=\"2\" stroke-dasharray=\"8 5\"/>\n",
        point_list(&quad)
    ));

    s.push_str("<g stroke=\"#7a5c2e\" stroke-width=\"1.5\" fill=\"#f0e0b8\">\n");
    for cell in &model.cells {
        s.push_str(&format!(
            "<polygon class=\"cell\" points=\"{}\"/>\n",
            point_list(&cell.corners)
        ));
    }
    s.push_str("</g>\n");

    s.push_str("<g font-family=\"serif\" text-anchor=\"middle\" fill=\"#333333\">\n");
    for (i, cell) in model.cells.iter().enumerate() {
        let cx = fx(&cell.center.x);
        let cy = fy(&cell.center.y);
        s.push_str(&format!(
            "<text class=\"label\" x=\"{:.3}\" y=\"{:.3}\" font-size=\"22\">{}</text>\n",
            cx,
            cy + 2.0,
            CELL_LABELS[i]
        ));
        s.push_str(&format!(
            "<text class=\"residue\" x=\"{:.3}\" y=\"{:.3}\" font-size=\"12\">{}</text>\n",
            cx,
            cy + 20.0,
            cell.residue
        ));
    }
    s.push_str("</g>\n");

    // Corner classes: a dot for each of the fourteen, a ring around the
    // seven the rule selects.
    s.push_str("<g fill=\"#444444\">\n");
    for class in &model.corners {
        s.push_str(&format!(
            "<circle class=\"corner\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"3\"/>\n",
            fx(&class.position.x),
            fy(&class.position.y)
        ));
    }
    s.push_str("</g>\n");
    s.push_str("<g fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\">\n");
    for class in model.corners.iter().filter(|c| c.circled) {
        s.push_str(&format!(
            "<circle class=\"circled\" cx=\"{:.3}\" cy=\"{:.3}\" r=\"9\"/>\n",
            fx(&class.position.x),
            fy(&class.position.y)
        ));
    }
    s.push_str("</g>\n");
    s.push_str("</svg>\n");
    s
}
