use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cliffexp"))
        .args(args)
        .env_remove("CLIFFEXP_DIGITS")
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn clidata_prints_structure() {
    let out = stdout(&["clidata", "-p", "3", "-q", "0"]);
    assert!(out.starts_with("[complex, 2, simple, "), "{out}");
}

#[test]
fn phi_of_real_example() {
    let out = stdout(&["phi", "--sig", "3,1", "--matrix", &data("real.json")]);
    assert_eq!(
        out.trim(),
        "Id - 1/2 e1 - 1/2 e3 - 1/2 e4 + 1/2 e12 - 1/2 e23 - 1/2 e24 - 1/2 e134 + 1/2 e1234"
    );
}

#[test]
fn minpoly_of_matrix_and_expression() {
    let out = stdout(&["minpoly", "--matrix", &data("real.json")]);
    assert_eq!(out.trim(), "x^2 - 2*x + 1");
    let out = stdout(&["minpoly", "--sig", "2,0", "--expr", "e12"]);
    assert_eq!(out.trim(), "x^2 + 1");
}

#[test]
fn exact_exponential_entry() {
    let out = stdout(&[
        "exp", "--sig", "3,1", "--matrix", &data("real.json"), "--order", "20", "--format", "exact",
    ]);
    let first = out.lines().next().unwrap();
    assert!(first.starts_with("[1/2432902008176640000, "), "{first}");
    assert!(!out.contains('.'), "exact output has a decimal point: {out}");
}

#[test]
fn exponential_of_zero_is_identity() {
    for (sig, order) in [("1,1", "0"), ("2,0", "7"), ("0,2", "3")] {
        let path = data("zero.json");
        let mut args = vec!["exp", "--matrix", path.as_str(), "--order", order];
        args.extend(["--sig", sig]);
        let kind_ok = sig != "0,2";
        let out = run(&args);
        if kind_ok {
            assert_eq!(String::from_utf8(out.stdout).unwrap(), "[1, 0]\n[0, 1]\n");
        } else {
            // Cl(0,2) is the quaternions, not 2x2 real matrices.
            assert_eq!(out.status.code(), Some(1));
        }
    }
}

#[test]
fn verify_complex_example() {
    let out = stdout(&[
        "verify", "--sig", "3,0", "--matrix", &data("complex.json"), "--order", "30", "--digits", "20",
    ]);
    assert!(out.contains("-0.56382709696901085353 + 0.26103952215715461164*I"), "{out}");
    let norm = out.lines().last().unwrap();
    assert!(norm.starts_with("1-norm: "), "{norm}");
}

#[test]
fn digits_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_cliffexp"))
        .args(["exp", "--matrix", &data("complex.json"), "--format", "float"])
        .env("CLIFFEXP_DIGITS", "5")
        .output()
        .unwrap();
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("[-0.56383 + 0.26104*I, "), "{text}");
}

#[test]
fn quaternion_default_signature() {
    let out = stdout(&["phi", "--matrix", &data("quaternion.json")]);
    assert!(out.contains("e1234"), "{out}");
}

#[test]
fn output_is_deterministic() {
    let args = ["exp", "--matrix", &data("quaternion.json"), "--order", "12"];
    assert_eq!(stdout(&args), stdout(&args));
}

#[test]
fn exit_codes() {
    // Semisimple signature.
    assert_eq!(run(&["clidata", "-p", "2", "-q", "1"]).status.code(), Some(1));
    // Missing file.
    assert_eq!(run(&["phi", "--matrix", "/nonexistent.json"]).status.code(), Some(1));
    // Size that does not fit the signature.
    assert_eq!(
        run(&["phi", "--sig", "3,1", "--matrix", &data("zero.json")]).status.code(),
        Some(1)
    );
    // Malformed signature and expression.
    assert_eq!(run(&["phi", "--sig", "3", "--matrix", &data("real.json")]).status.code(), Some(2));
    let out = run(&["minpoly", "--sig", "3,1", "--expr", "e21"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("offset"));
}

#[test]
fn malformed_documents_are_parse_errors() {
    let dir = std::env::temp_dir().join(format!("cliffexp-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let cases = [
        ("syntax.json", "{\"kind\": \"real\", \"rows\": [[\"1\"]"),
        ("kind.json", "{\"kind\": \"octonion\", \"rows\": [[\"1\"]]}"),
        ("entry.json", "{\"kind\": \"complex\", \"rows\": [[\"1+jj\",\"0\"],[\"0\",\"1\"]]}"),
    ];
    for (name, body) in cases {
        let path = dir.join(name);
        std::fs::write(&path, body).unwrap();
        let out = run(&["phi", "--matrix", path.to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(2), "{name}: {}", String::from_utf8_lossy(&out.stderr));
    }
    std::fs::remove_dir_all(&dir).unwrap();
}
