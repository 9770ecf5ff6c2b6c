//! JSON documents for graphs, point sets and families, plus DOT export.
//!
//! Graph documents look like `{"n":3,"edges":[[0,1],[1,2]]}` with 0-based
//! vertex indices. Point documents hold `[x_num, x_den, y_num, y_den]`
//! integer quadruples, either bare or under a `"points"` key.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde_json::Value;

use crate::blocker::PhiResult;
use crate::error::{Error, Result};
use crate::family::Family;
use crate::geometry::{Point, Rational};
use crate::graph::Graph;
use crate::visibility::Embedding;

/// A graph together with its optional document name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub graph: Graph,
    pub name: Option<String>,
}

fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| Error::schema(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

fn as_index(v: &Value, path: &str) -> Result<usize> {
    let Value::Number(num) = v else {
        return Err(Error::schema(path, "expected a non-negative integer"));
    };
    num.to_string()
        .parse::<usize>()
        .map_err(|_| Error::schema(path, format!("expected a non-negative integer, got {num}")))
}

fn as_bigint(v: &Value, path: &str) -> Result<BigInt> {
    let Value::Number(num) = v else {
        return Err(Error::schema(path, "expected an integer"));
    };
    num.to_string()
        .parse::<BigInt>()
        .map_err(|_| Error::schema(path, format!("expected an integer, got {num}")))
}

fn as_array<'a>(v: &'a Value, path: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| Error::schema(path, "expected an array"))
}

fn graph_from_value(v: &Value, path: &str) -> Result<GraphDocument> {
    let obj = v.as_object().ok_or_else(|| Error::schema(path, "expected an object"))?;
    let field = |key: &str| format!("{path}{}{key}", if path.is_empty() { "" } else { "." });
    let n_path = field("n");
    let n = as_index(obj.get("n").ok_or_else(|| Error::schema(&n_path, "missing field"))?, &n_path)?;
    let e_path = field("edges");
    let edges = match obj.get("edges") {
        Some(e) => as_array(e, &e_path)?.as_slice(),
        None => &[],
    };
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(Error::schema(field("name"), "expected a string")),
    };
    let mut g = Graph::new(n);
    let mut seen = BTreeSet::new();
    for (i, e) in edges.iter().enumerate() {
        let p = format!("{e_path}[{i}]");
        let pair = as_array(e, &p)?;
        if pair.len() != 2 {
            return Err(Error::schema(&p, format!("expected 2 endpoints, got {}", pair.len())));
        }
        let u = as_index(&pair[0], &format!("{p}[0]"))?;
        let w = as_index(&pair[1], &format!("{p}[1]"))?;
        if u >= n || w >= n {
            return Err(Error::schema(&p, format!("endpoint out of range for n = {n}")));
        }
        if u == w {
            return Err(Error::schema(&p, format!("loop at vertex {u}")));
        }
        if !seen.insert((u.min(w), u.max(w))) {
            return Err(Error::schema(&p, format!("duplicate edge {{{u}, {w}}}")));
        }
        g.add_edge(u, w);
    }
    Ok(GraphDocument { graph: g, name })
}

pub fn parse_graph_document(text: &str) -> Result<GraphDocument> {
    graph_from_value(&parse_json(text)?, "")
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    Ok(parse_graph_document(text)?.graph)
}

fn graph_body(g: &Graph, name: Option<&str>) -> String {
    let edges: Vec<String> = g.edges().iter().map(|(u, v)| format!("[{u},{v}]")).collect();
    let mut out = format!("{{\"n\":{},\"edges\":[{}]", g.vertex_count(), edges.join(","));
    if let Some(name) = name {
        out.push_str(",\"name\":");
        out.push_str(&serde_json::to_string(name).expect("strings serialize"));
    }
    out.push('}');
    out
}

/// Canonical compact form: edges as `[u,v]` with `u < v`, sorted, and a trailing newline.
pub fn emit_graph(g: &Graph) -> String {
    graph_body(g, None) + "\n"
}

pub fn emit_graph_document(doc: &GraphDocument) -> String {
    graph_body(&doc.graph, doc.name.as_deref()) + "\n"
}

/// The graph as a JSON value, for embedding in larger documents.
pub fn graph_value(g: &Graph) -> Value {
    serde_json::from_str(&graph_body(g, None)).expect("emitted JSON parses")
}

fn ratio(num: &Value, den: &Value, path: &str, at: usize) -> Result<Rational> {
    let n = as_bigint(num, &format!("{path}[{at}]"))?;
    let d = as_bigint(den, &format!("{path}[{}]", at + 1))?;
    if d.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    if d.is_negative() {
        return Err(Error::schema(format!("{path}[{}]", at + 1), "denominator must be positive"));
    }
    Ok(Rational::new(n, d))
}

pub fn parse_points(text: &str) -> Result<Embedding> {
    let v = parse_json(text)?;
    let (list, base) = match &v {
        Value::Array(a) => (a, String::new()),
        Value::Object(o) => match o.get("points") {
            Some(p) => (as_array(p, "points")?, "points".to_string()),
            None => return Err(Error::schema("points", "missing field")),
        },
        _ => return Err(Error::schema("", "expected an array or an object")),
    };
    let points = list
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let p = format!("{base}[{i}]");
            let quad = as_array(q, &p)?;
            if quad.len() != 4 {
                return Err(Error::schema(&p, format!("expected [x_num, x_den, y_num, y_den], got {} values", quad.len())));
            }
            Ok(Point::new(ratio(&quad[0], &quad[1], &p, 0)?, ratio(&quad[2], &quad[3], &p, 2)?))
        })
        .collect::<Result<Vec<_>>>()?;
    Embedding::new(points)
}

/// `{"points":[[x_num,x_den,y_num,y_den],...]}` with reduced fractions and a trailing newline.
pub fn emit_points(emb: &Embedding) -> String {
    let quads: Vec<String> = emb
        .points()
        .iter()
        .map(|p| format!("[{},{},{},{}]", p.x.numer(), p.x.denom(), p.y.numer(), p.y.denom()))
        .collect();
    format!("{{\"points\":[{}]}}\n", quads.join(","))
}

/// `{"members":[graph, ...]}` or a bare array of graph documents.
pub fn parse_family(text: &str) -> Result<Family> {
    let v = parse_json(text)?;
    let (list, base) = match &v {
        Value::Array(a) => (a, String::new()),
        Value::Object(o) => match o.get("members") {
            Some(m) => (as_array(m, "members")?, "members".to_string()),
            None => return Err(Error::schema("members", "missing field")),
        },
        _ => return Err(Error::schema("", "expected an array or an object")),
    };
    let members = list
        .iter()
        .enumerate()
        .map(|(i, m)| Ok(graph_from_value(m, &format!("{base}[{i}]"))?.graph))
        .collect::<Result<Vec<_>>>()?;
    Family::new(members)
}

pub fn emit_family(f: &Family) -> String {
    let members: Vec<String> = f.members().iter().map(|h| graph_body(h, None)).collect();
    format!("{{\"members\":[{}]}}\n", members.join(","))
}

/// Undirected DOT with vertices `v0..v{n-1}`. Isolated vertices get a node
/// statement; with `phi` supplied, its blockers are marked `blocker=true`.
pub fn emit_dot(g: &Graph, phi: Option<&PhiResult>) -> String {
    let mut out = String::from("graph {\n");
    for v in 0..g.vertex_count() {
        let blocker = phi.is_some_and(|r| r.is_blocker(v));
        if blocker {
            writeln!(out, "  v{v} [blocker=true];").unwrap();
        } else if g.degree(v) == 0 {
            writeln!(out, "  v{v};").unwrap();
        }
    }
    for (u, v) in g.edges() {
        writeln!(out, "  v{u} -- v{v};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocker::phi;

    #[test]
    fn parses_a_path() {
        assert_eq!(parse_graph(r#"{"n":3,"edges":[[0,1],[1,2]]}"#), Ok(Graph::path(3)));
    }

    #[test]
    fn rejects_bad_edges_with_positions() {
        let err = parse_graph(r#"{"n":2,"edges":[[0,0]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Schema { path, message } if path == "edges[0]" && message.contains("loop")));
        let err = parse_graph(r#"{"n":3,"edges":[[0,1],[1,2],[2,1]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Schema { path, .. } if path == "edges[2]"));
        let err = parse_graph(r#"{"n":3,"edges":[[0,3]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Schema { path, .. } if path == "edges[0]"));
        let err = parse_graph(r#"{"n":3,"edges":[[0,-1]]}"#).unwrap_err();
        assert!(matches!(&err, Error::Schema { path, .. } if path == "edges[0][1]"));
        assert!(parse_graph(r#"{"edges":[]}"#).is_err());
        assert!(parse_graph("{").is_err());
    }

    #[test]
    fn graph_round_trip_is_canonical() {
        let text = r#"{ "n": 4, "edges": [[2,1],[0,3]], "name": "g" }"#;
        let doc = parse_graph_document(text).unwrap();
        assert_eq!(emit_graph_document(&doc), "{\"n\":4,\"edges\":[[0,3],[1,2]],\"name\":\"g\"}\n");
        assert_eq!(emit_graph(&Graph::new(1)), "{\"n\":1,\"edges\":[]}\n");
    }

    #[test]
    fn six_point_document() {
        let text = "[[2,1,2,1],[2,1,2,3],[1,1,1,1],[3,1,1,1],[0,1,0,1],[4,1,0,1]]";
        let emb = parse_points(text).unwrap();
        assert_eq!(emb.points()[1], Point::from_ratios(2, 1, 2, 3).unwrap());
        let again = parse_points(&emit_points(&emb)).unwrap();
        assert_eq!(again, emb);
    }

    #[test]
    fn point_errors() {
        assert!(matches!(
            parse_points("[[0,1,0,1],[0,1,0,1]]"),
            Err(Error::DuplicatePoints { first: 0, second: 1 })
        ));
        assert_eq!(parse_points("[[0,0,0,1]]"), Err(Error::ZeroDenominator));
        assert!(matches!(parse_points("[[0,-1,0,1]]"), Err(Error::Schema { .. })));
        assert!(matches!(parse_points("[[0,1,0]]"), Err(Error::Schema { .. })));
        assert!(parse_points("[]").unwrap().is_empty());
        assert!(parse_points(r#"{"points":[]}"#).unwrap().is_empty());
    }

    #[test]
    fn big_coordinates_survive() {
        let text = "{\"points\":[[123456789012345678901234567891,7,-1,3]]}\n";
        assert_eq!(emit_points(&parse_points(text).unwrap()), text);
    }

    #[test]
    fn points_are_emitted_reduced() {
        let emb = parse_points("[[2,4,6,3]]").unwrap();
        assert_eq!(emit_points(&emb), "{\"points\":[[1,2,2,1]]}\n");
    }

    #[test]
    fn families() {
        let f = parse_family(r#"{"members":[{"n":3,"edges":[[0,1],[1,2],[0,2]]}]}"#).unwrap();
        assert_eq!(f.members(), &[Graph::complete(3)]);
        assert_eq!(parse_family(&emit_family(&f)), Ok(f));
        let err = parse_family(r#"[{"n":2,"edges":[[0,5]]}]"#).unwrap_err();
        assert!(matches!(&err, Error::Schema { path, .. } if path == "[0].edges[0]"));
        assert!(matches!(parse_family(r#"[{"n":1}]"#), Err(Error::InvalidFamily(_))));
    }

    #[test]
    fn dot_output() {
        assert_eq!(emit_dot(&Graph::complete(2), None), "graph {\n  v0 -- v1;\n}\n");
        assert_eq!(emit_dot(&Graph::new(1), None), "graph {\n  v0;\n}\n");
        let kite = Graph::from_edges(4, &[(0, 3), (3, 2), (1, 2), (0, 2)]).unwrap();
        let r = phi(&kite);
        let dot = emit_dot(&r.graph, Some(&r));
        assert_eq!(dot.matches("blocker=true").count(), 2);
        assert!(dot.contains("v4 [blocker=true];"));
    }
}
