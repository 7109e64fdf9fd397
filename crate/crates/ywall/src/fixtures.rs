//! Golden fixture data: the two edge lists and the two golden energy
//! tables. Fixtures ship embedded in the binary; set `YWALL_FIXTURE_DIR`
//! to load alternates from disk instead (useful for mutation testing the
//! verification paths).

use crate::cartan::AffineType;

const B1_EDGES: &str = include_str!("../fixtures/b1_edges.txt");
const B1_PRIME_EDGES: &str = include_str!("../fixtures/b1_prime_edges.txt");
const ENERGY_D4_3: &str = include_str!("../fixtures/energy_d4_3.txt");
const ENERGY_G2_1: &str = include_str!("../fixtures/energy_g2_1.txt");

pub const FIXTURE_DIR_ENV: &str = "YWALL_FIXTURE_DIR";

fn load(name: &str, embedded: &'static str) -> String {
    match std::env::var(FIXTURE_DIR_ENV) {
        Ok(dir) => {
            let path = std::path::Path::new(&dir).join(name);
            std::fs::read_to_string(&path)
                .unwrap_or_else(|e| panic!("cannot read fixture {}: {e}", path.display()))
        }
        Err(_) => embedded.to_string(),
    }
}

fn data_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// `(src_label, color, dst_label)` triples for the perfect crystal of `ty`.
pub fn edge_list(ty: AffineType) -> Vec<(String, usize, String)> {
    let text = match ty {
        AffineType::D4_3 => load("b1_edges.txt", B1_EDGES),
        AffineType::G2_1 => load("b1_prime_edges.txt", B1_PRIME_EDGES),
    };
    data_lines(&text)
        .map(|l| {
            let mut it = l.split_whitespace();
            let src = it.next().expect("edge line missing source").to_string();
            let color = it
                .next()
                .and_then(|c| c.parse().ok())
                .expect("edge line missing color");
            let dst = it.next().expect("edge line missing target").to_string();
            (src, color, dst)
        })
        .collect()
}

/// The golden energy table for `ty`, row-major in the canonical element
/// order.
pub fn energy_table(ty: AffineType) -> Vec<Vec<i64>> {
    let text = match ty {
        AffineType::D4_3 => load("energy_d4_3.txt", ENERGY_D4_3),
        AffineType::G2_1 => load("energy_g2_1.txt", ENERGY_G2_1),
    };
    let rows: Vec<Vec<i64>> = data_lines(&text)
        .map(|l| {
            l.split_whitespace()
                .map(|x| x.parse().expect("non-integer table entry"))
                .collect()
        })
        .collect();
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "energy table not square");
    rows
}
