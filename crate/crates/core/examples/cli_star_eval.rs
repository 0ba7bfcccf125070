//! Driving the command-line front end in-process.

use wickstar::verify::cli::run;

fn main() {
    let out = run([
        "wickstar", "star", "eval", "--surface", "disk", "--f", r#"{"type":"zbar"}"#, "--g", r#"{"type":"z"}"#,
        "--hbar", "0.5", "--at", "0", "--at", "0.3,0.2",
    ]);
    println!("exit {}\n{}", out.code, out.stdout);

    let id = r#"{"type":"poly","coeffs":[[0,0],[1,0]]}"#;
    let out = run([
        "wickstar", "star", "eval", "--surface", "annulus", "--R", "2", "--f", id, "--g", id, "--hbar", "0.25",
        "--at", "1", "--at", "0,1.5",
    ]);
    println!("exit {}\n{}", out.code, out.stdout);

    let out = run(["wickstar", "star", "eval", "--surface", "punctured", "--f", id, "--g", id, "--hbar", "-0.5", "--at", "0.5"]);
    println!("exit {}\n{}", out.code, out.stdout);

    let out = run(["wickstar", "rigidity", "--bundled", "annulus-punctured-obstruction"]);
    println!("exit {}\n{}", out.code, out.stdout);
}
