//! Locale-independent writers. Reals carry 17 significant digits so every
//! `f64` round-trips exactly; lines end in `\n`.

use sagin_core::CartesianPoint;

pub const SWEEP_HEADER: &str = "param_value,vertex_angle_rad,area_km2,tangent_limited";
pub const POINTS_HEADER: &str = "x_km,y_km,z_km";

/// Scientific notation with 17 significant digits, e.g. `1.1588409182075698e7`.
pub fn real(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        "NaN".to_owned()
    }
}

/// Single-line JSON object with fields in insertion order.
#[derive(Debug, Default)]
pub struct JsonObject {
    fields: Vec<(&'static str, String)>,
}

impl JsonObject {
    pub fn new() -> Self {
        Self::default()
    }

    /// Non-finite values become `null`.
    pub fn real(mut self, key: &'static str, value: f64) -> Self {
        let v = if value.is_finite() {
            real(value)
        } else {
            "null".to_owned()
        };
        self.fields.push((key, v));
        self
    }

    pub fn integer(mut self, key: &'static str, value: u64) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn boolean(mut self, key: &'static str, value: bool) -> Self {
        self.fields.push((key, value.to_string()));
        self
    }

    pub fn string(mut self, key: &'static str, value: &str) -> Self {
        self.fields.push((key, quote(value)));
        self
    }

    pub fn strings<I: IntoIterator<Item = String>>(mut self, key: &'static str, values: I) -> Self {
        let items: Vec<String> = values.into_iter().map(|s| quote(&s)).collect();
        self.fields.push((key, format!("[{}]", items.join(", "))));
        self
    }

    pub fn finish(self) -> String {
        let body: Vec<String> = self
            .fields
            .into_iter()
            .map(|(k, v)| format!("{}: {v}", quote(k)))
            .collect();
        format!("{{{}}}\n", body.join(", "))
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

pub fn points_csv(points: &[CartesianPoint]) -> String {
    let mut out = String::with_capacity(64 * (points.len() + 1));
    out.push_str(POINTS_HEADER);
    out.push('\n');
    for p in points {
        out.push_str(&real(p.x_km));
        out.push(',');
        out.push_str(&real(p.y_km));
        out.push(',');
        out.push_str(&real(p.z_km));
        out.push('\n');
    }
    out
}
