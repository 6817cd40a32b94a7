mod common;

use std::io::Write;
use std::process::{Command, Output, Stdio};

use common::data_dir;

fn selfdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_selfdual"))
        .args(args)
        .output()
        .unwrap()
}

fn selfdual_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_selfdual"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(input.as_bytes())
        .unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    std::fs::read_to_string(data_dir().join("golden").join(name)).unwrap()
}

#[test]
fn derive_golay_matches_listing_for_every_method() {
    for method in ["direct", "step", "design"] {
        let o = selfdual(&[
            "derive", "--code", "golay24", "--t", "19", "--method", method,
        ]);
        assert_eq!(o.status.code(), Some(0), "{method}");
        assert_eq!(stdout(&o), golden("golay24_t19.txt"), "{method}");
    }
}

#[test]
fn derive_qr48_design_and_direct() {
    let design = selfdual(&[
        "derive", "--code", "qr48", "--t", "43", "--method", "design",
    ]);
    let direct = selfdual(&["derive", "--code", "qr48", "--t", "43"]);
    assert_eq!(stdout(&design), golden("qr48_t43.txt"));
    assert_eq!(stdout(&direct), golden("qr48_t43.txt"));
}

#[test]
fn derive_from_profile_file() {
    let profile = data_dir().join("putative72.profile");
    let o = selfdual(&["derive", "--profile", profile.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), golden("putative72_t67.txt"));
}

#[test]
fn derive_to_file_and_eigencheck_it() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let o = selfdual(&[
        "derive",
        "--code",
        "golay24",
        "--t",
        "20",
        "--format",
        "structured",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(doc["manifest"]["command"], "derive");
    assert_eq!(doc["manifest"]["inputs"][0], "code:golay24");
    assert_eq!(doc["manifest"]["output"], path.to_str().unwrap());
    assert_eq!(doc["result"]["entries"].as_array().unwrap().len(), 16);

    let result_path = dir.path().join("entries.json");
    std::fs::write(&result_path, doc["result"].to_string()).unwrap();
    let check = selfdual(&["eigencheck", result_path.to_str().unwrap()]);
    assert_eq!(check.status.code(), Some(0));
    assert_eq!(stdout(&check), "n=24 t=20 m=4 eigenvalue +1: PASS\n");
}

#[test]
fn eigencheck_listings_pass_and_mutation_fails() {
    for name in ["golay24_t19.txt", "qr48_t43.txt", "putative72_t67.txt"] {
        let o = selfdual(&[
            "eigencheck",
            data_dir().join("golden").join(name).to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{name}");
    }
    let mutated =
        golden("golay24_t19.txt").replace("0 -1167936*p + 483776", "0 -1167936*p + 483777");
    let o = selfdual_stdin(&["eigencheck", "-"], &mutated);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).ends_with("FAIL\n"));
    let e8 = selfdual(&["eigencheck", "--code", "e8", "--t", "0"]);
    assert_eq!(e8.status.code(), Some(0));
}

#[test]
fn info_reports_distribution() {
    let o = selfdual(&["info", "--code", "golay24"]);
    assert_eq!(
        stdout(&o),
        "length 24\ndimension 12\nself-dual yes\nmin weight 8\n\
         weight distribution [<0,1>, <8,759>, <12,2576>, <16,759>, <24,1>]\n"
    );
    assert!(stdout(&selfdual(&["info", "--code", "e8"])).contains("min weight 4\n"));
    assert!(stdout(&selfdual(&["info", "--code", "c2x4"])).contains("min weight 2\n"));
}

#[test]
fn balance_all_coordinates() {
    let o = selfdual(&["balance", "--code", "golay24", "--all-coordinates"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.iter().filter(|l| l.ends_with(" PASS")).count(), 24);
    assert_eq!(
        *lines.last().unwrap(),
        "identical lhs across coordinates: true"
    );
    let lhs: Vec<&str> = lines[..24]
        .iter()
        .map(|l| {
            l.split(" lhs=")
                .nth(1)
                .unwrap()
                .split(" rhs=")
                .next()
                .unwrap()
        })
        .collect();
    assert!(lhs.iter().all(|x| *x == lhs[0]));
}

#[test]
fn candidates_pipe_into_eliminate() {
    let cands = selfdual(&["candidates", "--n", "8"]);
    assert_eq!(cands.status.code(), Some(0));
    let o = selfdual_stdin(&["eliminate"], &stdout(&cands));
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1,0,0,0,14,0,0,0,1 y=0 SURVIVES\n\
         1,0,1,0,12,0,1,0,1 y=3/4 ELIMINATED\n\
         1,0,2,0,10,0,2,0,1 y=3/2 ELIMINATED\n\
         1,0,3,0,8,0,3,0,1 y=9/4 ELIMINATED\n\
         1,0,4,0,6,0,4,0,1 y=3 SURVIVES\n\
         1,0,5,0,4,0,5,0,1 y=15/4 ELIMINATED\n\
         1,0,6,0,2,0,6,0,1 y=9/2 ELIMINATED\n\
         1,0,7,0,0,0,7,0,1 y=21/4 ELIMINATED\n"
    );
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(
        selfdual(&["info", "--code", "hexacode"]).status.code(),
        Some(2)
    );
    assert_eq!(
        selfdual(&["derive", "--code", "e8", "--t", "9"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(selfdual(&["derive", "--code", "e8"]).status.code(), Some(2));
    assert_eq!(
        selfdual(&["eigencheck", "/nonexistent/file"]).status.code(),
        Some(2)
    );
    let o = selfdual_stdin(&["eliminate"], "1,0,0,0,13,0,0,0,1\n");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).starts_with("error:"));
}

#[test]
fn generator_file_source() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h.gen");
    std::fs::write(&path, "# not self-dual\n1100\n0110\n").unwrap();
    let o = selfdual(&["info", "--generator", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("self-dual no"));
    let b = selfdual(&[
        "balance",
        "--generator",
        path.to_str().unwrap(),
        "--coordinate",
        "1",
    ]);
    assert_eq!(b.status.code(), Some(2));
}

#[test]
fn structured_output_is_reproducible() {
    let args = [
        "balance",
        "--code",
        "e8",
        "--coordinate",
        "2",
        "--format",
        "structured",
    ];
    assert_eq!(selfdual(&args).stdout, selfdual(&args).stdout);
}
