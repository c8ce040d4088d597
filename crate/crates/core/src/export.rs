//! CSV and OBJ serialization and JSON run configuration.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use serde_json::{Map, Value};

use crate::asymptotic::{asymptotic_parametrization, TauAngle};
use crate::closed_form::parameter_window;
use crate::error::{Error, Result};
use crate::types::{FamilyParams, PlaneCurveSamples, PlanePoint, SpacePoint};

/// Float formatting with 17 significant digits.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

fn csv_err(path: &Path, e: impl std::fmt::Display) -> Error {
    Error::Csv {
        path: path.to_path_buf(),
        message: e.to_string(),
    }
}

/// Writes `theta,r,h` rows (LF line endings) to any writer.
pub fn write_profile_csv_to<W: Write>(curve: &PlaneCurveSamples<f64>, out: W) -> csv::Result<()> {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(out);
    w.write_record(["theta", "r", "h"])?;
    for (t, q) in curve.iter() {
        w.write_record([fmt_f64(t), fmt_f64(q.r), fmt_f64(q.h)])?;
    }
    w.flush()?;
    Ok(())
}

pub fn write_profile_csv(curve: &PlaneCurveSamples<f64>, path: impl AsRef<Path>) -> Result<()> {
    let path = path.as_ref();
    let file = fs::File::create(path).map_err(|e| Error::io(path, e))?;
    write_profile_csv_to(curve, std::io::BufWriter::new(file)).map_err(|e| csv_err(path, e))
}

pub fn read_profile_csv(path: impl AsRef<Path>) -> Result<PlaneCurveSamples<f64>> {
    let path = path.as_ref();
    let mut rd = csv::Reader::from_path(path).map_err(|e| csv_err(path, e))?;
    let header = rd.headers().map_err(|e| csv_err(path, e))?;
    if header.iter().collect::<Vec<_>>() != ["theta", "r", "h"] {
        return Err(csv_err(path, "expected header theta,r,h"));
    }
    let mut params = Vec::new();
    let mut points = Vec::new();
    for (line, rec) in rd.records().enumerate() {
        let rec = rec.map_err(|e| csv_err(path, e))?;
        let field = |i: usize| -> Result<f64> {
            rec.get(i)
                .and_then(|s| s.trim().parse::<f64>().ok())
                .ok_or_else(|| csv_err(path, format!("row {}: bad field {}", line + 2, i + 1)))
        };
        params.push(field(0)?);
        points.push(PlanePoint::new(field(1)?, field(2)?));
    }
    PlaneCurveSamples::new(params, points)
}

/// Vertex/face mesh; faces hold 0-based indices and are written 1-based.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct SurfaceMesh {
    pub vertices: Vec<SpacePoint<f64>>,
    pub faces: Vec<Vec<usize>>,
}

impl SurfaceMesh {
    pub fn validate(&self) -> Result<()> {
        let n = self.vertices.len();
        for (k, f) in self.faces.iter().enumerate() {
            if !(3..=4).contains(&f.len()) {
                return Err(Error::InvalidInput(format!(
                    "face {k} has {} vertices",
                    f.len()
                )));
            }
            if f.iter().any(|&i| i >= n) {
                return Err(Error::InvalidInput(format!(
                    "face {k} references a missing vertex"
                )));
            }
            for (a, &i) in f.iter().enumerate() {
                if f[a + 1..].contains(&i) {
                    return Err(Error::InvalidInput(format!(
                        "face {k} repeats vertex {}",
                        i + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn to_obj(&self) -> String {
        let mut s = String::new();
        for v in &self.vertices {
            s.push_str(&format!(
                "v {} {} {}\n",
                fmt_f64(v.x),
                fmt_f64(v.y),
                fmt_f64(v.z)
            ));
        }
        for f in &self.faces {
            s.push('f');
            for i in f {
                s.push_str(&format!(" {}", i + 1));
            }
            s.push('\n');
        }
        s
    }

    pub fn write_obj(&self, path: impl AsRef<Path>) -> Result<()> {
        let path = path.as_ref();
        self.validate()?;
        fs::write(path, self.to_obj()).map_err(|e| Error::io(path, e))
    }
}

/// Counts found by [`validate_obj`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ObjSummary {
    pub vertices: usize,
    pub faces: usize,
}

/// Parses the `v`/`f` subset of Wavefront OBJ and checks that every face
/// has 3 or 4 distinct, existing, 1-based vertex indices.
pub fn validate_obj(text: &str) -> Result<ObjSummary> {
    let bad = |line: usize, msg: &str| Error::InvalidInput(format!("OBJ line {line}: {msg}"));
    let mut nv = 0;
    let mut faces = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let mut it = raw.split_whitespace();
        match it.next() {
            None => {}
            Some(tag) if tag.starts_with('#') => {}
            Some("v") => {
                let xs: Vec<f64> = it
                    .map(|s| s.parse::<f64>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad(line, "bad vertex coordinate"))?;
                if xs.len() != 3 || !xs.iter().all(|x| x.is_finite()) {
                    return Err(bad(line, "vertex needs 3 finite coordinates"));
                }
                nv += 1;
            }
            Some("f") => {
                let idx: Vec<usize> = it
                    .map(|s| s.split('/').next().unwrap_or("").parse::<usize>())
                    .collect::<std::result::Result<_, _>>()
                    .map_err(|_| bad(line, "bad face index"))?;
                faces.push((line, idx));
            }
            Some(other) => return Err(bad(line, &format!("unsupported record `{other}`"))),
        }
    }
    for (line, idx) in &faces {
        if !(3..=4).contains(&idx.len()) {
            return Err(bad(*line, "face needs 3 or 4 indices"));
        }
        if idx.iter().any(|&i| i == 0 || i > nv) {
            return Err(bad(*line, "face index out of range"));
        }
        for (a, i) in idx.iter().enumerate() {
            if idx[a + 1..].contains(i) {
                return Err(bad(*line, "degenerate face"));
            }
        }
    }
    Ok(ObjSummary {
        vertices: nv,
        faces: faces.len(),
    })
}

/// `|r|` below which a profile row is treated as lying on the axis.
pub const AXIS_TOL: f64 = 1e-12;

/// Revolves `curve` about the axis into a quad strip closed around the
/// axis. Rows on the axis collapse to one vertex and their faces become
/// triangles.
pub fn revolve(curve: &PlaneCurveSamples<f64>, segments: usize) -> Result<SurfaceMesh> {
    if segments < 3 {
        return Err(Error::InvalidInput("segments must be at least 3".into()));
    }
    let on_axis = |q: &PlanePoint<f64>| q.r.abs() <= AXIS_TOL * (1.0 + q.h.abs());
    let mut sign = 0.0;
    for (i, q) in curve.points().iter().enumerate() {
        if on_axis(q) {
            continue;
        }
        if sign != 0.0 && q.r.signum() != sign {
            return Err(Error::Domain {
                context: "revolve: profile crosses the axis",
                param: curve.params()[i],
            });
        }
        sign = q.r.signum();
    }

    let mut mesh = SurfaceMesh::default();
    let mut rows: Vec<Vec<usize>> = Vec::with_capacity(curve.len());
    for q in curve.points() {
        let start = mesh.vertices.len();
        if on_axis(q) {
            mesh.vertices.push(SpacePoint::new(0.0, 0.0, q.h));
            rows.push(vec![start; segments]);
        } else {
            for k in 0..segments {
                let phi = std::f64::consts::TAU * k as f64 / segments as f64;
                mesh.vertices.push(SpacePoint::revolve(*q, phi));
            }
            rows.push((start..start + segments).collect());
        }
    }
    for w in rows.windows(2) {
        let (a, b) = (&w[0], &w[1]);
        for k in 0..segments {
            let k1 = (k + 1) % segments;
            let mut face = vec![a[k], a[k1], b[k1], b[k]];
            face.dedup();
            if face.first() == face.last() && face.len() > 1 {
                face.pop();
            }
            if face.len() >= 3 {
                mesh.faces.push(face);
            }
        }
    }
    mesh.validate()?;
    Ok(mesh)
}

pub fn revolve_to_obj(
    curve: &PlaneCurveSamples<f64>,
    segments: usize,
    path: impl AsRef<Path>,
) -> Result<SurfaceMesh> {
    let mesh = revolve(curve, segments)?;
    mesh.write_obj(path)?;
    Ok(mesh)
}

/// Grid mesh of the asymptotic net over `t_range x s_range`; vertex
/// `(i, k)` sits at index `i n_s + k`.
pub fn asymptotic_net(
    j: f64,
    tau: TauAngle<f64>,
    t_range: (f64, f64),
    s_range: (f64, f64),
    n_t: usize,
    n_s: usize,
) -> Result<SurfaceMesh> {
    if n_t < 2 || n_s < 2 {
        return Err(Error::InvalidInput("net needs n_t, n_s >= 2".into()));
    }
    let ts = crate::numerics::linspace(t_range.0, t_range.1, n_t);
    let ss = crate::numerics::linspace(s_range.0, s_range.1, n_s);
    let mut mesh = SurfaceMesh::default();
    for &t in &ts {
        for &s in &ss {
            mesh.vertices.push(asymptotic_parametrization(j, tau, t, s));
        }
    }
    for i in 0..n_t - 1 {
        for k in 0..n_s - 1 {
            let v = |a: usize, b: usize| a * n_s + b;
            mesh.faces
                .push(vec![v(i, k), v(i + 1, k), v(i + 1, k + 1), v(i, k + 1)]);
        }
    }
    mesh.validate()?;
    Ok(mesh)
}

#[allow(clippy::too_many_arguments)]
pub fn asymptotic_net_obj(
    j: f64,
    tau: TauAngle<f64>,
    t_range: (f64, f64),
    s_range: (f64, f64),
    n_t: usize,
    n_s: usize,
    path: impl AsRef<Path>,
) -> Result<SurfaceMesh> {
    let mesh = asymptotic_net(j, tau, t_range, s_range, n_t, n_s)?;
    mesh.write_obj(path)?;
    Ok(mesh)
}

pub const DEFAULT_DELTA: f64 = 0.05;
pub const DEFAULT_SAMPLES: usize = 256;
pub const DEFAULT_SEGMENTS: usize = 64;
pub const CONFIG_KEYS: [&str; 10] = [
    "m",
    "c",
    "J",
    "K",
    "theta_min",
    "theta_max",
    "samples",
    "segments",
    "delta",
    "out",
];

/// Run configuration with every field optional, as read from JSON or flags.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct PartialConfig {
    pub m: Option<f64>,
    pub c: Option<f64>,
    pub j: Option<f64>,
    pub k: Option<f64>,
    pub theta_min: Option<f64>,
    pub theta_max: Option<f64>,
    pub samples: Option<usize>,
    pub segments: Option<usize>,
    pub delta: Option<f64>,
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunConfig {
    pub family: FamilyParams<f64>,
    pub theta_min: f64,
    pub theta_max: f64,
    pub samples: usize,
    pub segments: usize,
    pub delta: f64,
    pub out: Option<PathBuf>,
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let start: usize = text
        .split_inclusive('\n')
        .take(line.saturating_sub(1))
        .map(str::len)
        .sum();
    (start + column.saturating_sub(1)).min(text.len())
}

fn cfg_err(key: &str, message: impl Into<String>) -> Error {
    Error::Config {
        key: key.to_string(),
        message: message.into(),
    }
}

impl PartialConfig {
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| Error::ConfigParse {
            offset: byte_offset(text, e.line(), e.column()),
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        let Value::Object(map) = value else {
            return Err(cfg_err("<root>", "expected a JSON object"));
        };
        Self::from_map(&map)
    }

    fn from_map(map: &Map<String, Value>) -> Result<Self> {
        let mut cfg = PartialConfig::default();
        for (key, v) in map {
            let num = || {
                v.as_f64()
                    .filter(|x| x.is_finite())
                    .ok_or_else(|| cfg_err(key, "expected a finite number"))
            };
            let count = || {
                v.as_u64()
                    .map(|x| x as usize)
                    .ok_or_else(|| cfg_err(key, "expected a non-negative integer"))
            };
            match key.as_str() {
                "m" => cfg.m = Some(num()?),
                "c" => cfg.c = Some(num()?),
                "J" => cfg.j = Some(num()?),
                "K" => cfg.k = Some(num()?),
                "theta_min" => cfg.theta_min = Some(num()?),
                "theta_max" => cfg.theta_max = Some(num()?),
                "delta" => cfg.delta = Some(num()?),
                "samples" => cfg.samples = Some(count()?),
                "segments" => cfg.segments = Some(count()?),
                "out" => {
                    cfg.out = Some(PathBuf::from(
                        v.as_str()
                            .ok_or_else(|| cfg_err(key, "expected a string"))?,
                    ))
                }
                _ => return Err(cfg_err(key, "unknown key")),
            }
        }
        Ok(cfg)
    }

    /// Fields set in `over` replace those of `self`.
    pub fn merged_with(self, over: PartialConfig) -> PartialConfig {
        PartialConfig {
            m: over.m.or(self.m),
            c: over.c.or(self.c),
            j: over.j.or(self.j),
            k: over.k.or(self.k),
            theta_min: over.theta_min.or(self.theta_min),
            theta_max: over.theta_max.or(self.theta_max),
            samples: over.samples.or(self.samples),
            segments: over.segments.or(self.segments),
            delta: over.delta.or(self.delta),
            out: over.out.or(self.out),
        }
    }

    /// Fills defaults and validates. The default window is the family's
    /// parameter window shrunk by `delta` at both ends.
    pub fn resolve(self) -> Result<RunConfig> {
        let m = self.m.ok_or_else(|| cfg_err("m", "missing"))?;
        if m == 0.0 {
            return Err(Error::SingularSlope);
        }
        let c = self.c.ok_or_else(|| cfg_err("c", "missing"))?;
        let j = self.j.ok_or_else(|| cfg_err("J", "missing"))?;
        let family = FamilyParams::new(m, c, j, self.k.unwrap_or(0.0))?;
        let delta = self.delta.unwrap_or(DEFAULT_DELTA);
        if !(delta > 0.0) {
            return Err(cfg_err("delta", "must be positive"));
        }
        let (lo, hi) = parameter_window(m);
        let theta_min = self.theta_min.unwrap_or(lo + delta);
        let theta_max = self.theta_max.unwrap_or(hi - delta);
        if !(theta_min > lo) {
            return Err(Error::Domain {
                context: "theta_min outside the parameter window",
                param: theta_min,
            });
        }
        if !(theta_max < hi) {
            return Err(Error::Domain {
                context: "theta_max outside the parameter window",
                param: theta_max,
            });
        }
        if !(theta_min < theta_max) {
            return Err(cfg_err("theta_max", "must exceed theta_min"));
        }
        let samples = self.samples.unwrap_or(DEFAULT_SAMPLES);
        if samples < 8 {
            return Err(cfg_err("samples", "must be at least 8"));
        }
        let segments = self.segments.unwrap_or(DEFAULT_SEGMENTS);
        if segments < 3 {
            return Err(cfg_err("segments", "must be at least 3"));
        }
        Ok(RunConfig {
            family,
            theta_min,
            theta_max,
            samples,
            segments,
            delta,
            out: self.out,
        })
    }
}

pub fn parse_config(text: &str) -> Result<RunConfig> {
    PartialConfig::from_json_str(text)?.resolve()
}

pub fn load_config(path: impl AsRef<Path>) -> Result<RunConfig> {
    let path = path.as_ref();
    let text = fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
    parse_config(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::asymptotic::{asymptotic_point, tau_from_m};
    use crate::closed_form::sample_profile;
    use proptest::prelude::*;

    #[test]
    fn csv_line_counts_and_round_trip() {
        let dir = tempfile::tempdir().unwrap();
        let p = FamilyParams::new(2.0, 1.0, 0.7, 0.0).unwrap();
        let curve = sample_profile(&p, -1.0, 1.0, 3).unwrap();
        let path = dir.path().join("p.csv");
        write_profile_csv(&curve, &path).unwrap();
        let text = fs::read_to_string(&path).unwrap();
        assert_eq!(text.lines().count(), 4);
        assert!(text.starts_with("theta,r,h\n") && !text.contains('\r'));
        let back = read_profile_csv(&path).unwrap();
        assert_eq!(back.params(), curve.params());
        assert_eq!(back.points(), curve.points());

        let empty = dir.path().join("e.csv");
        write_profile_csv(&PlaneCurveSamples::empty(), &empty).unwrap();
        assert_eq!(fs::read_to_string(&empty).unwrap(), "theta,r,h\n");
        assert!(write_profile_csv(&curve, dir.path().join("no/such/dir.csv")).is_err());
    }

    #[test]
    fn revolve_counts() {
        let curve = PlaneCurveSamples::new(
            vec![0.0, 1.0],
            vec![PlanePoint::new(1.0, 0.0), PlanePoint::new(1.0, 1.0)],
        )
        .unwrap();
        let mesh = revolve(&curve, 4).unwrap();
        assert_eq!((mesh.vertices.len(), mesh.faces.len()), (8, 4));
        assert!(mesh.faces.iter().all(|f| f.len() == 4));
        assert!(revolve(&curve, 2).is_err());
    }

    #[test]
    fn sphere_mesh_and_axis_collapse() {
        let p = FamilyParams::new(-1.0, 0.0, 1.0, 0.0).unwrap();
        let h = std::f64::consts::FRAC_PI_2 - 1e-15;
        let curve = sample_profile(&p, -h, h, 33).unwrap();
        let mesh = revolve(&curve, 16).unwrap();
        assert_eq!(mesh.vertices.len(), 31 * 16 + 2);
        assert!(mesh.vertices.iter().all(|v| (v.norm() - 1.0).abs() <= 1e-9));
        let s = validate_obj(&mesh.to_obj()).unwrap();
        assert_eq!(s.faces, mesh.faces.len());
        assert!(mesh.faces.iter().any(|f| f.len() == 3));
    }

    #[test]
    fn axis_crossing_rejected() {
        let curve = PlaneCurveSamples::new(
            vec![0.0, 1.0, 2.0],
            vec![
                PlanePoint::new(1.0, 0.0),
                PlanePoint::new(0.5, 1.0),
                PlanePoint::new(-1.0, 2.0),
            ],
        )
        .unwrap();
        assert!(matches!(revolve(&curve, 8), Err(Error::Domain { .. })));
    }

    #[test]
    fn revolved_vertices_keep_radius() {
        let p = FamilyParams::new(2.0, 0.0, 1.0, 0.0).unwrap();
        let curve = sample_profile(&p, -1.0, 1.0, 20).unwrap();
        let mesh = revolve(&curve, 12).unwrap();
        for (i, q) in curve.points().iter().enumerate() {
            for v in &mesh.vertices[i * 12..(i + 1) * 12] {
                assert!((v.x.hypot(v.y) - q.r).abs() <= 1e-10 && v.z == q.h);
            }
        }
        assert_eq!(mesh.faces.len(), 19 * 12);
    }

    #[test]
    fn net_mesh() {
        let tau = tau_from_m(1.0).unwrap();
        let mesh = asymptotic_net(1.0, tau, (0.0, 1.0), (0.0, 1.0), 2, 2).unwrap();
        assert_eq!((mesh.vertices.len(), mesh.faces.len()), (4, 1));
        let mesh = asymptotic_net(1.0, tau, (-1.0, 1.0), (-1.0, 1.0), 9, 9).unwrap();
        let ts = crate::numerics::linspace(-1.0, 1.0, 9);
        for (i, &t) in ts.iter().enumerate() {
            assert_eq!(
                mesh.vertices[i * 9 + i],
                asymptotic_parametrization(1.0, tau, t, t)
            );
        }
        let mesh = asymptotic_net(1.0, tau, (-1.0, 1.0), (0.0, 0.0), 5, 2).unwrap();
        for (i, &t) in crate::numerics::linspace(-1.0, 1.0, 5).iter().enumerate() {
            assert_eq!(mesh.vertices[i * 2], asymptotic_point(1.0, tau, t));
        }
        assert!(asymptotic_net(1.0, tau, (0.0, 1.0), (0.0, 1.0), 1, 2).is_err());
    }

    #[test]
    fn obj_validation_rejects_bad_files() {
        assert!(validate_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 2 3\n").is_ok());
        assert!(validate_obj("v 0 0 0\nf 1 2 3\n").is_err());
        assert!(validate_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 1 1 3\n").is_err());
        assert!(validate_obj("v 0 0\n").is_err());
        assert!(validate_obj("vn 0 0 1\n").is_err());
        assert!(validate_obj("v 0 0 0\nv 1 0 0\nv 0 1 0\nf 0 1 2\n").is_err());
    }

    #[test]
    fn config_defaults_and_errors() {
        let cfg = parse_config(r#"{"m":2,"c":0,"J":1}"#).unwrap();
        assert_eq!((cfg.samples, cfg.segments, cfg.delta), (256, 64, 0.05));
        assert!((cfg.theta_min + std::f64::consts::FRAC_PI_2 - 0.05).abs() < 1e-15);
        assert_eq!(cfg.family.k, 0.0);
        let err = parse_config(r#"{"m":0,"c":0,"J":1}"#).unwrap_err();
        assert!(err.to_string().contains("m=0 singular"));
        let text = "{\"m\": 2,\n \"c\": }";
        match parse_config(text) {
            Err(Error::ConfigParse { offset, line, .. }) => {
                assert_eq!(line, 2);
                assert_eq!(offset, 15);
                assert_eq!(&text[offset..offset + 1], "}");
            }
            other => panic!("{other:?}"),
        }
        match parse_config(r#"{"m":2,"c":0,"J":1,"colour":3}"#) {
            Err(Error::Config { key, .. }) => assert_eq!(key, "colour"),
            other => panic!("{other:?}"),
        }
        match parse_config(r#"{"m":2,"c":0,"J":1,"samples":4}"#) {
            Err(Error::Config { key, .. }) => assert_eq!(key, "samples"),
            other => panic!("{other:?}"),
        }
        match parse_config(r#"{"m":2,"J":1}"#) {
            Err(Error::Config { key, .. }) => assert_eq!(key, "c"),
            other => panic!("{other:?}"),
        }
        assert!(parse_config(r#"{"m":2,"c":0,"J":1,"theta_max":2}"#)
            .unwrap_err()
            .is_domain());
        assert!(parse_config("[1]").is_err());
    }

    #[test]
    fn config_merge_prefers_override() {
        let base = PartialConfig::from_json_str(r#"{"m":2,"c":0,"J":1,"samples":32}"#).unwrap();
        let over = PartialConfig {
            samples: Some(64),
            c: Some(3.0),
            ..Default::default()
        };
        let cfg = base.merged_with(over).resolve().unwrap();
        assert_eq!(cfg.samples, 64);
        assert_eq!(cfg.family.c, 3.0);
        assert_eq!(cfg.family.j, 1.0);
    }

    #[test]
    fn load_config_reports_path() {
        let err = load_config("/nonexistent/cfg.json").unwrap_err();
        assert!(err.to_string().contains("/nonexistent/cfg.json"));
    }

    proptest! {
        #[test]
        fn csv_round_trip_is_bit_exact(vals in proptest::collection::vec(any::<f64>().prop_filter("finite", |x| x.is_finite()), 1..40)) {
            let params: Vec<f64> = (0..vals.len()).map(|i| i as f64).collect();
            let points: Vec<_> = vals.iter().map(|&v| PlanePoint::new(v, -v / 3.0)).collect();
            let curve = PlaneCurveSamples::new(params, points).unwrap();
            let dir = tempfile::tempdir().unwrap();
            let path = dir.path().join("x.csv");
            write_profile_csv(&curve, &path).unwrap();
            let back = read_profile_csv(&path).unwrap();
            for (a, b) in back.points().iter().zip(curve.points()) {
                prop_assert_eq!(a.r.to_bits(), b.r.to_bits());
                prop_assert_eq!(a.h.to_bits(), b.h.to_bits());
            }
        }
    }
}
