use std::path::{Path, PathBuf};
use std::process::Command;

use parslit_cli::document::{read, write, Object};
use parslit_cli::svg::{render_domain, View};
use parslit_core::sample::random_generic_domain;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn parslit(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_parslit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exited normally"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn scratch(name: &str) -> PathBuf {
    let dir = Path::new(env!("CARGO_TARGET_TMPDIR")).join("cli-tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn golden_documents_round_trip_byte_for_byte() {
    for name in [
        "h1_cell.json",
        "h1_domain.json",
        "h1_grid.json",
        "h1_periods.json",
        "census_g0_m1.json",
    ] {
        let text = std::fs::read_to_string(golden(name)).unwrap();
        assert_eq!(write(&read(&text).unwrap()), text, "{name}");
    }
}

#[test]
fn subcommands_reproduce_goldens() {
    let domain = golden("h1_domain.json");
    let d = domain.to_str().unwrap();
    let cases: [(&[&str], &str); 4] = [
        (&["glue", d], "h1_grid.json"),
        (&["periods", d], "h1_periods.json"),
        (&["invariants", d], "h1_invariants.json"),
        (&["census", "--g", "0", "--m", "1", "--method", "brute"], "census_g0_m1.json"),
    ];
    for (args, expected) in cases {
        let (code, out, err) = parslit(args);
        assert_eq!(code, 0, "{args:?}: {err}");
        assert_eq!(out, std::fs::read_to_string(golden(expected)).unwrap(), "{args:?}");
    }
    let (code, out, _) = parslit(&["uniformize", golden("h1_grid.json").to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(read(&out).unwrap().object, read(&std::fs::read_to_string(&domain).unwrap()).unwrap().object);
}

#[test]
fn exit_codes() {
    let d = golden("h1_domain.json");
    let d = d.to_str().unwrap();
    assert_eq!(parslit(&["validate", d]).0, 0);
    assert_eq!(parslit(&["validate", golden("h1_cell.json").to_str().unwrap()]).0, 0);
    assert_eq!(parslit(&["roundtrip", d, "--seed", "7"]).0, 0);
    assert_eq!(parslit(&["roundtrip", d]).0, 0);
    let deg = golden("degenerate.json");
    assert_eq!(parslit(&["uniformize", deg.to_str().unwrap()]).0, 2);
    assert_eq!(parslit(&["validate", deg.to_str().unwrap()]).0, 1);
    assert_eq!(parslit(&["validate", "/nonexistent.json"]).0, 1);
    assert_eq!(parslit(&["census", "--g", "1", "--m", "1", "--method", "brute"]).0, 1);
    assert_eq!(parslit(&["frobnicate"]).0, 1);

    let bad = scratch("bad_sigma.json");
    std::fs::write(
        &bad,
        r#"{"format":"parslit","version":1,"kind":"cell","payload":{"g":0,"m":1,"h":1,"sigmas":[[1,2,0],[0,2,1]],"nu":[[0],[1,2]]}}"#,
    )
    .unwrap();
    let (code, _, err) = parslit(&["validate", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("invariant violation"), "{err}");
}

#[test]
fn scramble_then_uniformize() {
    let d = golden("h1_domain.json");
    let (code, grid, _) = parslit(&["scramble", d.to_str().unwrap(), "--seed", "11"]);
    assert_eq!(code, 0);
    let scrambled = scratch("scrambled.json");
    std::fs::write(&scrambled, &grid).unwrap();
    assert_eq!(parslit(&["scramble", d.to_str().unwrap(), "--seed", "11"]).1, grid);
    let (code, out, _) = parslit(&["uniformize", scrambled.to_str().unwrap()]);
    assert_eq!(code, 0);
    let original = read(&std::fs::read_to_string(&d).unwrap()).unwrap().object;
    assert_eq!(read(&out).unwrap().object, original);
}

#[test]
fn rendering() {
    let out = scratch("h1.svg");
    let d = golden("h1_domain.json");
    let args = ["render", d.to_str().unwrap(), "--out", out.to_str().unwrap(), "--view=-2:1:-1:2"];
    assert_eq!(parslit(&args).0, 0);
    let first = std::fs::read(&out).unwrap();
    assert_eq!(parslit(&args).0, 0);
    assert_eq!(std::fs::read(&out).unwrap(), first);
    assert_eq!(first, std::fs::read(golden("h1_domain.svg")).unwrap());

    let g = golden("h1_grid.json");
    let args = ["render", g.to_str().unwrap(), "--out", out.to_str().unwrap(), "--view=-2:1:-1:2"];
    assert_eq!(parslit(&args).0, 0);
    assert_eq!(std::fs::read(&out).unwrap(), std::fs::read(golden("h1_grid.svg")).unwrap());

    let args = ["render", d.to_str().unwrap(), "--out", out.to_str().unwrap(), "--view=1:1:0:1"];
    assert_eq!(parslit(&args).0, 1);
}

#[test]
fn h4_picture_has_eight_slits_on_four_tips() {
    let x = random_generic_domain(&mut ChaCha8Rng::seed_from_u64(4), 4);
    let svg = render_domain(&x, None).unwrap();
    assert_eq!(svg.matches(r#"<line class="slit""#).count(), 8);
    assert_eq!(svg.matches(r#"class="tip-label""#).count(), 4);
    let mut tips: Vec<&str> = svg
        .match_indices("data-tip=\"")
        .map(|(i, m)| {
            let rest = &svg[i + m.len()..];
            &rest[..rest.find('"').unwrap()]
        })
        .collect();
    tips.sort();
    tips.dedup();
    assert_eq!(tips.len(), 4);
    let view: View = "-10:2:-1:30".parse().unwrap();
    assert_eq!(render_domain(&x, Some(&view)).unwrap(), render_domain(&x, Some(&view)).unwrap());
}

#[test]
fn every_kind_reads_back() {
    let x = random_generic_domain(&mut ChaCha8Rng::seed_from_u64(9), 3);
    let report = parslit_core::census::enumerate_cells(0, 2, parslit_core::census::Method::Brute).unwrap();
    let u = parslit_core::uniformizer::uniformize_full(&parslit_core::glue(&x)).unwrap();
    for object in [
        Object::Cell(x.label().clone()),
        Object::Domain(x.clone()),
        Object::Grid(parslit_core::scramble(&parslit_core::glue(&x), 3)),
        Object::Report(report),
        Object::Periods(parslit_core::periods(&u.development)),
    ] {
        let doc = parslit_cli::Document::new(object, vec!["test".into()]);
        let text = write(&doc);
        assert_eq!(read(&text).unwrap(), doc);
        assert_eq!(write(&read(&text).unwrap()), text);
    }
}
