use std::path::Path;
use std::process::{Command, Output};

use tempfile::TempDir;

fn planar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_planar")).args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn write(dir: &TempDir, name: &str, text: &str) -> String {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

fn edge_list(n: usize, edges: &[(usize, usize)]) -> String {
    let mut s = format!("{n} {}\n", edges.len());
    for (u, v) in edges {
        s += &format!("{u} {v}\n");
    }
    s
}

fn k5() -> String {
    let e: Vec<_> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
    edge_list(5, &e)
}

fn petersen() -> String {
    let mut e: Vec<_> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    e.extend((0..5).map(|i| (i, i + 5)));
    e.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    edge_list(10, &e)
}

fn grid3() -> String {
    let mut e = Vec::new();
    for r in 0..3 {
        for c in 0..3 {
            let v = 3 * r + c;
            if c < 2 {
                e.push((v, v + 1));
            }
            if r < 2 {
                e.push((v, v + 3));
            }
        }
    }
    edge_list(9, &e)
}

#[test]
fn test_command_on_k5_exits_one() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "k5.txt", &k5());
    let out = planar(&["test", &f]);
    assert_eq!(code(&out), 1);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("non-planar\n"));
    let summary: serde_json::Value = serde_json::from_str(&text["non-planar\n".len()..]).unwrap();
    assert_eq!(summary["valid"], true);
}

#[test]
fn embed_grid_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "grid.txt", &grid3());
    let emb = dir.path().join("emb.json");
    let out = planar(&["embed", &f, "--output", emb.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&emb).unwrap()).unwrap();
    assert_eq!(json["faces"].as_array().unwrap().len(), 5);
    assert_eq!(code(&planar(&["verify-embedding", &f, emb.to_str().unwrap()])), 0);

    let mut broken = json.clone();
    broken["rotation"][4].as_array_mut().unwrap().swap(0, 1);
    let bad = write(&dir, "bad.json", &broken.to_string());
    assert_eq!(code(&planar(&["verify-embedding", &f, &bad])), 1);
}

#[test]
fn kuratowski_petersen_round_trips_through_verify() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "petersen.txt", &petersen());
    let out = planar(&["kuratowski", &f]);
    assert_eq!(code(&out), 0);
    let minor = write(&dir, "minor.json", std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(code(&planar(&["verify-minor", &f, &minor])), 0);

    let g = write(&dir, "grid.txt", &grid3());
    assert_eq!(code(&planar(&["verify-minor", &g, &minor])), 1);
    assert_eq!(code(&planar(&["kuratowski", &g])), 1);
}

#[test]
fn input_errors_exit_two() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "bad.txt", "3 2\n0 1\n");
    assert_eq!(code(&planar(&["test", &f])), 2);
    let loops = write(&dir, "loop.txt", "2 1\n0 0\n");
    assert_eq!(code(&planar(&["test", &loops])), 2);
    let dot = write(&dir, "d.dot", "digraph { a -> b }");
    assert_eq!(code(&planar(&["test", &dot])), 2);
    assert_eq!(code(&planar(&["test", "/definitely/missing.txt"])), 2);
}

#[test]
fn dot_and_json_inputs() {
    let dir = TempDir::new().unwrap();
    let dot = write(&dir, "k4.dot", "graph K4 { a -- b -- c -- a; d -- a; d -- b; d -- c }");
    assert_eq!(code(&planar(&["test", &dot])), 0);
    let json = write(&dir, "k5.json", r#"{"n":5,"edges":[[0,1],[0,2],[0,3],[0,4],[1,2],[1,3],[1,4],[2,3],[2,4],[3,4]]}"#);
    assert_eq!(code(&planar(&["test", &json])), 1);
    let plain = write(&dir, "k5.graph", r#"{"n":5,"edges":[[0,1]]}"#);
    assert_eq!(code(&planar(&["--format", "json", "test", &plain])), 0);
}

#[test]
fn guards_exit_three_unless_overridden() {
    let dir = TempDir::new().unwrap();
    let mut e: Vec<_> = (0..11).map(|i| (i, (i + 1) % 12)).collect();
    e.push((11, 0));
    let f = write(&dir, "c12.txt", &edge_list(12, &e));
    assert_eq!(code(&planar(&["oracle", "tutte", &f])), 3);
    assert_eq!(code(&planar(&["oracle", "tutte", &f, "--override-guards"])), 0);
    let out = Command::new(env!("CARGO_BIN_EXE_planar"))
        .args(["oracle", "tutte", &f])
        .env("PLANAR_GUARD_OVERRIDE", "1")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn gen_is_deterministic_per_seed() {
    let a = planar(&["gen", "triangulation", "30", "--seed", "4"]);
    let b = planar(&["gen", "triangulation", "30", "--seed", "4"]);
    let c = planar(&["gen", "triangulation", "30", "--seed", "5"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("30 84\n"));
    assert_eq!(code(&planar(&["gen", "gnm", "3", "4"])), 2);
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "p.txt", &petersen());
    for cmd in ["kuratowski", "decompose", "test"] {
        assert_eq!(planar(&[cmd, &f]).stdout, planar(&[cmd, &f]).stdout);
    }
}

#[test]
fn decompose_and_conflict_emit_json() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "grid.txt", &grid3());
    let out = planar(&["decompose", &f]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["block_cut_tree"]["blocks"].as_array().unwrap().len(), 1);
    let kinds: Vec<_> = v["separation_trees"][0]["tree"]["components"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["kind"].as_str().unwrap().to_string())
        .collect();
    assert!(kinds.iter().all(|k| ["S", "P", "R"].contains(&k.as_str())));

    let out = planar(&["conflict", &f, "--cycle", "0,1,2,5,8,7,6,3"]);
    assert_eq!(code(&out), 0);
    let h: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(h["bridges"].as_array().unwrap().len(), 1);
    assert_eq!(code(&planar(&["conflict", &f, "--cycle", "0,1,2"])), 2);
}

#[test]
fn draw_writes_svg() {
    let dir = TempDir::new().unwrap();
    let f = write(&dir, "grid.txt", &grid3());
    let svg = dir.path().join("g.svg");
    assert_eq!(code(&planar(&["draw", &f, "-o", svg.to_str().unwrap()])), 0);
    let text = std::fs::read_to_string(&svg).unwrap();
    assert!(text.starts_with("<?xml"));
    assert!(text.contains(r#"version="1.1""#));
    assert_eq!(text.matches("<line").count(), 12);
    let k = write(&dir, "k5.txt", &k5());
    assert_eq!(code(&planar(&["draw", &k])), 1);
    assert!(!Path::new(&dir.path().join("none.svg")).exists());
}
