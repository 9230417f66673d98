use std::process::{Command, Output};

fn catalan(args: &[&str]) -> (i32, String) {
    let Output { status, stdout, .. } = Command::new(env!("CARGO_BIN_EXE_catalan")).args(args).output().unwrap();
    (status.code().unwrap(), String::from_utf8(stdout).unwrap())
}

#[test]
fn identity1_sweep() {
    let (code, out) = catalan(&["verify", "identity1", "--s", "1..200"]);
    assert_eq!((code, out.trim()), (0, "OK 200/200"));
}

#[test]
fn identity1_zero_is_reported_as_exception() {
    let (code, out) = catalan(&["verify", "identity1", "--s", "0..3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().collect::<Vec<_>>(), ["NOTE identity1 [s=0] 1 != 0 (documented exception)", "OK 4/4"]);
}

#[test]
fn identity3_sweep_includes_diagonal() {
    let (code, out) = catalan(&["verify", "identity3", "--m", "0..40", "--l-offset", "0..40"]);
    assert_eq!((code, out.trim()), (0, "OK 1681/1681"));
}

#[test]
fn composition_and_recurrence_sweeps() {
    assert_eq!(catalan(&["verify", "identity2prime", "--l", "1..10"]), (0, "OK 55/55\n".into()));
    assert_eq!(catalan(&["verify", "recurrenceA", "--l", "1..10"]), (0, "OK 55/55\n".into()));
    let (code, out) = catalan(&["verify", "f-induction", "--m", "1..12"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("recurrence: (-m - 1)*f(m) + (m + 2)*f(m + 1) = 1\n"), "{out}");
}

#[test]
fn trace_orbit() {
    let (code, out) = catalan(&["involution", "trace", "--s", "2", "--creature", "(1,2)"]);
    assert_eq!((code, out.as_str()), (0, "(1,2)\n(1,(1,1))\n"));
    let (code, out) = catalan(&["involution", "trace", "--pair", "1|21", "--l", "4", "--m", "1"]);
    assert_eq!((code, out.as_str()), (0, "1|21\n"));
}

#[test]
fn census_reports() {
    let (code, out) = catalan(&["involution", "census", "--s", "1..4"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 4);
    assert!(out.lines().all(|l| l.ends_with(" ok")), "{out}");
    let (code, out) = catalan(&["involution", "census", "--m", "0..2", "--l-offset", "1..3"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 9);
}

#[test]
fn json_output() {
    let (code, out) = catalan(&["verify", "identity1", "--s", "1..5", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["status"], "pass");
    assert_eq!(v["checked"], 5);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(catalan(&["verify", "identity1", "--s", "5..1"]).0, 2);
    assert_eq!(catalan(&["frobnicate"]).0, 2);
    assert_eq!(catalan(&["gosper", "binomial(k^2, k)", "--var", "k"]).0, 2);
    assert_eq!(catalan(&["involution", "trace", "--s", "5", "--creature", "(1,2)"]).0, 2);
    let (code, out) = catalan(&["gosper", "binomial(k, (", "--var", "k"]);
    assert_eq!(code, 2);
    assert!(out.contains("column 14"), "{out}");
}

#[test]
fn gosper_and_zeilberger_commands() {
    let dir = std::env::temp_dir().join(format!("catalan-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = dir.join("g.toml");
    let expr = "(-1)^i*binomial(2*i,i)/(i+1)*binomial(i+1,s-i)";
    let (code, out) = catalan(&[
        "gosper", expr, "--var", "i", "--params", "s", "--upper", "s", "--values", "0..30", "--expect", "0", "--emit",
        g.to_str().unwrap(),
    ]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("NOTE s=0: 1 (direct"), "{out}");
    assert!(out.contains("OK 31/31"), "{out}");
    assert_eq!(catalan(&["check", g.to_str().unwrap()]).0, 0);

    let tampered = std::fs::read_to_string(&g).unwrap().replace("4*s*i", "5*s*i");
    std::fs::write(&g, tampered).unwrap();
    let (code, out) = catalan(&["check", g.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(out.contains("FAIL rejected (file says verified)"), "{out}");

    let (code, out) = catalan(&["gosper", "factorial(k)"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT SUMMABLE"), "{out}");

    let z = dir.join("z.toml");
    let (code, out) =
        catalan(&["zeilberger", "binomial(n,k)^2", "--sumvar", "k", "--recvar", "n", "--emit", z.to_str().unwrap()]);
    assert_eq!(code, 0, "{out}");
    assert!(out.contains("recurrence: (-4*n - 2)*S(n) + (n + 1)*S(n + 1) = 0"), "{out}");
    assert_eq!(catalan(&["check", z.to_str().unwrap()]).0, 0);
    std::fs::remove_dir_all(&dir).unwrap();
}
