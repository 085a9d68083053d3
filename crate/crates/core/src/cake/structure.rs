use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt::Write as _;

use petgraph::unionfind::UnionFind;
use serde::{Deserialize, Serialize};

use super::identify::{identifications, Slice};
use super::word::{realize_word, Letter, Word};
use super::{CakeError, CAKE_TOL};
use crate::construction::MirroredConfiguration;
use crate::hermitian::{matrix, GramContext, Iso64, Vec64};
use crate::numerics::C64;

/// Angle of the model triangle at each vertex; the three add up to `π/2`.
pub const MODEL_ANGLE: f64 = PI / 6.0;

/// The real hyperbolic plane picture: a geodesic triangle `v₁v₂v₃` with
/// angles `π/6`, half-turns `r₀` about `v₁` and `r₁, r₂` about the
/// midpoints of `v₁v₂, v₂v₃`, and the reflection `r₃` in the line `v₃v₁`.
///
/// Uses the same hermitian machinery with a real symmetric form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PlaneModel {
    pub gram: GramContext<f64>,
    pub generators: [Iso64; 4],
    pub vertices: [Vec64; 3],
}

impl PlaneModel {
    pub fn new() -> Result<Self, CakeError> {
        let c = -MODEL_ANGLE.cos();
        let one = C64::one();
        let cc = C64::from_f64(c, 0.0);
        // side normals e₁, e₂, e₃ with ⟨eᵢ,eⱼ⟩ = −cos(angle)
        let n = [[one, cc, cc], [cc, one, cc], [cc, cc, one]];
        let gram = GramContext::new_unchecked(n);
        gram.validate()?;
        let adj = matrix::adjugate(&n);
        // vᵢ = N⁻¹eᵢ is orthogonal to e_j for j ≠ i: the vertex opposite
        // side i. Scaling is irrelevant, so the adjugate column suffices.
        let mut vs = [0, 1, 2].map(|i| Vec64::new([adj[0][i], adj[1][i], adj[2][i]]));
        for i in 1..3 {
            if gram.inner(&vs[0], &vs[i]).re > 0.0 {
                vs[i] = -vs[i];
            }
        }
        let vs = vs.map(|v| gram.normalize(&v));
        let mid = |a: &Vec64, b: &Vec64| *a + *b;
        let r0 = gram.reflection(&vs[0])?;
        let r1 = gram.reflection(&mid(&vs[0], &vs[1]))?;
        let r2 = gram.reflection(&mid(&vs[1], &vs[2]))?;
        // the line v₃v₁ is the side with normal e₂
        let r3 = gram.reflection(&Vec64::basis(1))?;
        Ok(PlaneModel {
            gram,
            generators: [r0, r1, r2, r3],
            vertices: vs,
        })
    }

    /// Distance of `r₃r₁r₂r₃r₂r₁r₀` from the nearest scalar matrix.
    pub fn relation_residual(&self) -> f64 {
        use Letter::*;
        let w = Word::new(vec![R3, R1, R2, R3, R2, R1, R0]);
        realize_word(&w, &self.generators).scalar_residual()
    }
}

/// One of the sixteen triangles `Δᵢ = w·Δ` or `w·Δ′`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleRecord {
    pub index: usize,
    pub word: Word,
    /// Whether the base triangle is taken with the opposite orientation.
    pub primed: bool,
    pub counterclockwise: bool,
    /// Vertex ids of `w·C₁, w·C₂, w·C₃`.
    pub vertices: [usize; 3],
}

/// The sixteen triangles: `Δᵢ = WᵢΔ′` for `i = 1,2,3,7,8,9`, `WᵢΔ` for
/// `i = 4,5,6,10,11,12`, and `Δ₁₃ = W₂R₃Δ`, `Δ₁₄ = W₅R₃Δ′`,
/// `Δ₁₅ = W₈R₃Δ`, `Δ₁₆ = W₁₁R₃Δ′`.
pub fn triangle_words() -> Vec<(usize, Word, bool)> {
    let mut out: Vec<(usize, Word, bool)> = (1..=12)
        .map(|i| (i, Word::prefix(i), matches!(i, 1 | 2 | 3 | 7 | 8 | 9)))
        .collect();
    for (j, (prefix, primed)) in [(2, false), (5, true), (8, false), (11, true)]
        .into_iter()
        .enumerate()
    {
        out.push((13 + j, Word::prefix(prefix).with(&[Letter::R3]), primed));
    }
    out
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexRecord {
    pub id: usize,
    /// First label under which the vertex appears, e.g. `R3R1·C2`.
    pub label: String,
    pub boundary: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SideRecord {
    /// Vertex ids, ascending.
    pub ends: [usize; 2],
    pub triangles: Vec<usize>,
}

impl SideRecord {
    pub fn is_boundary(&self) -> bool {
        self.triangles.len() == 1
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingRecord {
    pub name: String,
    pub notation: String,
    pub source_triangle: usize,
    pub target_triangle: usize,
    /// Vertex ids in the declared order.
    pub source: [usize; 2],
    pub target: [usize; 2],
}

/// The assembled cake and its surface bookkeeping.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CakeStructure {
    pub triangles: Vec<TriangleRecord>,
    pub vertices: Vec<VertexRecord>,
    pub sides: Vec<SideRecord>,
    /// Boundary vertex ids in cyclic order.
    pub boundary_cycle: Vec<usize>,
    pub pairings: Vec<PairingRecord>,
    /// Classes of boundary vertices under the pairings.
    pub vertex_cycles: Vec<Vec<usize>>,
    pub edge_pairs: usize,
    /// `#cycles − #pairs + 1`.
    pub euler_characteristic: i64,
    pub genus: Option<i64>,
    /// `V − E + F` of the triangulated cake itself (a disc gives 1).
    pub disc_euler: i64,
    /// `r₃r₁r₂r₃r₂r₁r₀` in the plane model, distance from a scalar.
    pub relation_residual: f64,
    /// Largest endpoint residual of the pairings in the plane model.
    pub pairing_residual: f64,
    /// Total hyperbolic area of the model triangles divided by `2π`, which
    /// equals `−χ` by Gauss–Bonnet.
    pub area_over_2pi: f64,
}

impl CakeStructure {
    /// Three vertex cycles, eight edge pairs, `χ = −4`, genus 3.
    pub fn matches_expected_counts(&self) -> bool {
        self.vertex_cycles.len() == 3
            && self.edge_pairs == 8
            && self.euler_characteristic == -4
            && self.genus == Some(3)
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Plain-text audit tables: triangles, vertices, boundary, pairings and
    /// cycles, one record per line.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "# cake triangles: index word orientation vertices(C1,C2,C3)");
        for t in &self.triangles {
            let _ = writeln!(
                s,
                "D{:<2} {}{} {} v{} v{} v{}",
                t.index,
                t.word,
                if t.primed { "'" } else { "" },
                if t.counterclockwise { "ccw" } else { "cw" },
                t.vertices[0],
                t.vertices[1],
                t.vertices[2]
            );
        }
        let _ = writeln!(s, "# vertices: id label boundary");
        for v in &self.vertices {
            let _ = writeln!(s, "v{:<2} {} {}", v.id, v.label, v.boundary);
        }
        let _ = writeln!(s, "# sides: ends triangles");
        for side in &self.sides {
            let tris: Vec<String> = side.triangles.iter().map(|t| format!("D{t}")).collect();
            let _ = writeln!(s, "v{}-v{} {}", side.ends[0], side.ends[1], tris.join(","));
        }
        let cycle: Vec<String> = self.boundary_cycle.iter().map(|v| format!("v{v}")).collect();
        let _ = writeln!(s, "# boundary cycle\n{}", cycle.join(" "));
        let _ = writeln!(s, "# pairings: name word source -> target");
        for p in &self.pairings {
            let _ = writeln!(
                s,
                "{} {} D{}(v{},v{}) -> D{}(v{},v{})",
                p.name,
                p.notation,
                p.source_triangle,
                p.source[0],
                p.source[1],
                p.target_triangle,
                p.target[0],
                p.target[1]
            );
        }
        let _ = writeln!(s, "# vertex cycles");
        for (i, c) in self.vertex_cycles.iter().enumerate() {
            let ids: Vec<String> = c.iter().map(|v| format!("v{v}")).collect();
            let _ = writeln!(s, "cycle{} {}", i + 1, ids.join(" "));
        }
        let _ = writeln!(s, "# summary");
        let _ = writeln!(s, "triangles {}", self.triangles.len());
        let _ = writeln!(s, "vertex_cycles {}", self.vertex_cycles.len());
        let _ = writeln!(s, "edge_pairs {}", self.edge_pairs);
        let _ = writeln!(s, "euler_characteristic {}", self.euler_characteristic);
        match self.genus {
            Some(g) => {
                let _ = writeln!(s, "genus {g}");
            }
            None => {
                let _ = writeln!(s, "genus undefined");
            }
        }
        let _ = writeln!(s, "disc_euler {}", self.disc_euler);
        s
    }
}

/// Interns points up to projective equality.
struct PointTable {
    points: Vec<Vec64>,
    labels: Vec<String>,
}

impl PointTable {
    fn id(&mut self, p: Vec64, label: impl FnOnce() -> String) -> usize {
        if let Some(i) = self
            .points
            .iter()
            .position(|q| q.projective_residual(&p) <= CAKE_TOL)
        {
            return i;
        }
        self.points.push(p);
        self.labels.push(label());
        self.points.len() - 1
    }

    fn find(&self, p: &Vec64) -> Option<usize> {
        self.points
            .iter()
            .position(|q| q.projective_residual(p) <= CAKE_TOL)
    }
}

fn vertex_label(word: &Word, s: Slice) -> String {
    if word.is_empty() {
        s.to_string()
    } else {
        format!("{word}·{s}")
    }
}

fn sorted(a: usize, b: usize) -> [usize; 2] {
    [a.min(b), a.max(b)]
}

/// Assembles the cake from the triangle words and the pairing list,
/// realised in the plane model, and computes its surface invariants.
pub fn build_cake() -> Result<CakeStructure, CakeError> {
    let model = PlaneModel::new()?;
    let gens = &model.generators;
    let mut table = PointTable {
        points: Vec::new(),
        labels: Vec::new(),
    };

    let mut triangles = Vec::new();
    for (index, word, primed) in triangle_words() {
        let w = realize_word(&word, gens);
        let vertices = Slice::ALL.map(|s| {
            table.id(w.apply(&model.vertices[s.index()]), || vertex_label(&word, s))
        });
        if vertices[0] == vertices[1] || vertices[1] == vertices[2] || vertices[0] == vertices[2] {
            return Err(CakeError::Reconstruction(format!("triangle D{index} is degenerate")));
        }
        triangles.push(TriangleRecord {
            index,
            counterclockwise: primed == word.is_antilinear(),
            word,
            primed,
            vertices,
        });
    }

    let mut side_map: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for t in &triangles {
        for k in 0..3 {
            let key = sorted(t.vertices[k], t.vertices[(k + 1) % 3]);
            side_map.entry(key).or_default().push(t.index);
        }
    }
    let sides: Vec<SideRecord> = side_map
        .into_iter()
        .map(|(ends, triangles)| SideRecord { ends, triangles })
        .collect();
    if let Some(s) = sides.iter().find(|s| s.triangles.len() > 2) {
        return Err(CakeError::Reconstruction(format!(
            "side v{}-v{} is shared by {} triangles",
            s.ends[0],
            s.ends[1],
            s.triangles.len()
        )));
    }

    let n_vertices = table.points.len();
    let boundary: Vec<[usize; 2]> = sides.iter().filter(|s| s.is_boundary()).map(|s| s.ends).collect();
    let mut on_boundary = vec![false; n_vertices];
    for e in &boundary {
        on_boundary[e[0]] = true;
        on_boundary[e[1]] = true;
    }
    let boundary_cycle = trace_boundary(&boundary, n_vertices)?;

    // pairings: declared sides must be boundary sides of the declared
    // triangles, each used exactly once
    let mut used: BTreeMap<[usize; 2], String> = BTreeMap::new();
    let mut pairings = Vec::new();
    let mut pairing_residual: f64 = 0.0;
    for ident in identifications() {
        let mut ends = [[0usize; 2]; 2];
        for (slot, side) in [&ident.source, &ident.target].into_iter().enumerate() {
            let pts = side.points(gens, &model.vertices);
            for k in 0..2 {
                ends[slot][k] = table.find(&pts[k]).ok_or_else(|| CakeError::Pairing {
                    pairing: ident.name(),
                    detail: format!("endpoint of {side} is not a cake vertex"),
                })?;
            }
            let tri = &triangles[side.triangle - 1];
            if !ends[slot].iter().all(|v| tri.vertices.contains(v)) {
                return Err(CakeError::Pairing {
                    pairing: ident.name(),
                    detail: format!("{side} is not a side of D{}", side.triangle),
                });
            }
            let key = sorted(ends[slot][0], ends[slot][1]);
            if !boundary.contains(&key) {
                return Err(CakeError::Pairing {
                    pairing: ident.name(),
                    detail: format!("{side} is an interior side"),
                });
            }
            if let Some(prev) = used.insert(key, ident.name()) {
                return Err(CakeError::Pairing {
                    pairing: ident.name(),
                    detail: format!("{side} is already paired by {prev}"),
                });
            }
        }
        let iso = realize_word(&ident.word, gens);
        for k in 0..2 {
            let img = iso.apply(&table.points[ends[0][k]]);
            pairing_residual = pairing_residual.max(img.projective_residual(&table.points[ends[1][k]]));
        }
        pairings.push(PairingRecord {
            name: ident.name(),
            notation: ident.notation.clone(),
            source_triangle: ident.source.triangle,
            target_triangle: ident.target.triangle,
            source: ends[0],
            target: ends[1],
        });
    }
    if let Some(e) = boundary.iter().find(|e| !used.contains_key(*e)) {
        return Err(CakeError::Pairing {
            pairing: "-".to_string(),
            detail: format!("boundary side v{}-v{} is unpaired", e[0], e[1]),
        });
    }

    let mut uf = UnionFind::<usize>::new(n_vertices);
    for p in &pairings {
        uf.union(p.source[0], p.target[0]);
        uf.union(p.source[1], p.target[1]);
    }
    let mut classes: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in (0..n_vertices).filter(|&v| on_boundary[v]) {
        classes.entry(uf.find(v)).or_default().push(v);
    }
    let mut vertex_cycles: Vec<Vec<usize>> = classes.into_values().collect();
    vertex_cycles.sort();

    let edge_pairs = pairings.len();
    let euler_characteristic = vertex_cycles.len() as i64 - edge_pairs as i64 + 1;
    let genus = (euler_characteristic <= 2 && euler_characteristic % 2 == 0)
        .then_some((2 - euler_characteristic) / 2);
    let disc_euler = n_vertices as i64 - sides.len() as i64 + triangles.len() as i64;
    let area_over_2pi = triangles.len() as f64 * (PI - 3.0 * MODEL_ANGLE) / (2.0 * PI);

    let vertices = (0..n_vertices)
        .map(|id| VertexRecord {
            id,
            label: table.labels[id].clone(),
            boundary: on_boundary[id],
        })
        .collect();

    Ok(CakeStructure {
        triangles,
        vertices,
        sides,
        boundary_cycle,
        pairings,
        vertex_cycles,
        edge_pairs,
        euler_characteristic,
        genus,
        disc_euler,
        relation_residual: model.relation_residual(),
        pairing_residual,
        area_over_2pi,
    })
}

/// Walks the boundary sides; they must form one simple cycle.
fn trace_boundary(edges: &[[usize; 2]], n: usize) -> Result<Vec<usize>, CakeError> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for e in edges {
        adj[e[0]].push(e[1]);
        adj[e[1]].push(e[0]);
    }
    if let Some(v) = (0..n).find(|&v| !adj[v].is_empty() && adj[v].len() != 2) {
        return Err(CakeError::Reconstruction(format!(
            "boundary vertex v{v} has {} boundary sides",
            adj[v].len()
        )));
    }
    let Some(start) = (0..n).find(|&v| !adj[v].is_empty()) else {
        return Err(CakeError::Reconstruction("empty boundary".to_string()));
    };
    let mut cycle = vec![start];
    let (mut prev, mut cur) = (start, adj[start][0].min(adj[start][1]));
    while cur != start {
        cycle.push(cur);
        let next = if adj[cur][0] == prev { adj[cur][1] } else { adj[cur][0] };
        prev = cur;
        cur = next;
    }
    if cycle.len() != edges.len() {
        return Err(CakeError::Reconstruction(format!(
            "boundary splits into several cycles ({} of {} sides in the first)",
            cycle.len(),
            edges.len()
        )));
    }
    Ok(cycle)
}

/// Agreement between the plane-model vertex pattern and the complex
/// configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub labels: usize,
    pub pairs_compared: usize,
    /// Label pairs that coincide in one realisation but not in the other.
    pub mismatches: Vec<String>,
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// For every two triangle-vertex labels `w·Cₖ`, `w′·Cₗ`, the plane model
/// identifies them iff the complex polar points `w·pₖ`, `w′·pₗ` agree
/// projectively.
pub fn cross_check(cake: &CakeStructure, cfg: &MirroredConfiguration) -> CrossCheck {
    let gens = cfg.generators();
    let polar = cfg.base.polar_points();
    let mut labels: Vec<(String, usize, Vec64)> = Vec::new();
    for t in &cake.triangles {
        let w = realize_word(&t.word, &gens);
        for s in Slice::ALL {
            labels.push((
                format!("D{}:{}", t.index, vertex_label(&t.word, s)),
                t.vertices[s.index()],
                w.apply(&polar[s.index()]),
            ));
        }
    }
    let mut mismatches = Vec::new();
    let mut pairs_compared = 0;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            pairs_compared += 1;
            let plane = labels[i].1 == labels[j].1;
            let complex = labels[i].2.projective_residual(&labels[j].2) <= CAKE_TOL;
            if plane != complex {
                mismatches.push(format!(
                    "{} vs {}: plane {}, complex {}",
                    labels[i].0, labels[j].0, plane, complex
                ));
            }
        }
    }
    CrossCheck {
        labels: labels.len(),
        pairs_compared,
        mismatches,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construction::build_configuration;

    #[test]
    fn plane_model_relation() {
        let m = PlaneModel::new().unwrap();
        assert!(m.relation_residual() < 1e-10, "{}", m.relation_residual());
        for v in &m.vertices {
            assert!((m.gram.norm(v) + 1.0).abs() < 1e-12);
        }
        let r12 = realize_word(&Word::prefix(12), &m.generators);
        assert!(r12.scalar_residual() < 1e-10);
    }

    #[test]
    fn surface_counts() {
        let cake = build_cake().unwrap();
        assert_eq!(cake.triangle_count(), 16);
        assert_eq!(cake.edge_pairs, 8);
        assert_eq!(cake.vertex_cycles.len(), 3);
        assert_eq!(cake.euler_characteristic, -4);
        assert_eq!(cake.genus, Some(3));
        assert_eq!(cake.disc_euler, 1);
        assert_eq!(cake.boundary_cycle.len(), 16);
        assert!((cake.area_over_2pi - 4.0).abs() < 1e-12);
        assert!(cake.pairing_residual < 1e-9);
        assert!(cake.matches_expected_counts());
    }

    #[test]
    fn all_triangles_counterclockwise() {
        let cake = build_cake().unwrap();
        assert!(cake.triangles.iter().all(|t| t.counterclockwise));
    }

    #[test]
    fn c1_is_the_only_interior_vertex() {
        let cake = build_cake().unwrap();
        let interior: Vec<&VertexRecord> = cake.vertices.iter().filter(|v| !v.boundary).collect();
        assert_eq!(interior.len(), 1);
        assert_eq!(interior[0].id, cake.triangles[11].vertices[0]);
    }

    #[test]
    fn complex_realisation_has_same_pattern() {
        let cake = build_cake().unwrap();
        let cfg = build_configuration(2.22).unwrap();
        let cc = cross_check(&cake, &cfg);
        assert_eq!(cc.labels, 48);
        assert!(cc.passed(), "{:?}", cc.mismatches);
    }

    #[test]
    fn dump_is_deterministic() {
        let a = build_cake().unwrap().to_text();
        let b = build_cake().unwrap().to_text();
        assert_eq!(a, b);
        assert!(a.contains("edge_pairs 8"));
        assert!(a.contains("genus 3"));
    }
}
