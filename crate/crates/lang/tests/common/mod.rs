#![allow(dead_code)]

use std::io::Write;
use std::process::{Command, Stdio};
use std::sync::OnceLock;

use unicoder_lang::transpile::{TargetLanguage, ToolchainDescriptor, Toolchains};

pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub success: bool,
}

fn command(argv: &[String], desc: &ToolchainDescriptor) -> Command {
    let mut cmd = Command::new(&argv[0]);
    cmd.args(&argv[1..]).envs(&desc.env);
    let go_cache = std::env::temp_dir().join("unicoder-test-gocache");
    cmd.env("GOCACHE", go_cache).env("GOPATH", std::env::temp_dir().join("unicoder-test-gopath"));
    cmd
}

pub fn installed(target: TargetLanguage) -> bool {
    static CELL: OnceLock<Vec<TargetLanguage>> = OnceLock::new();
    CELL.get_or_init(|| {
        Toolchains::builtin()
            .iter()
            .filter(|(_, desc)| {
                command(&desc.version, desc)
                    .stdout(Stdio::null())
                    .stderr(Stdio::null())
                    .status()
                    .map(|s| s.success())
                    .unwrap_or(false)
            })
            .map(|(t, _)| t)
            .collect()
    })
    .contains(&target)
}

/// Builds and runs `code`; panics when compilation fails.
pub fn run(target: TargetLanguage, code: &str, stdin: &str) -> Outcome {
    let desc = Toolchains::builtin().get(target).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let src = dir.path().join(desc.source_file_name());
    let bin = dir.path().join("prog");
    std::fs::write(&src, code).unwrap();
    if let Some(compile) = &desc.compile {
        let argv = ToolchainDescriptor::expand(compile, &src, &bin, dir.path());
        let out = command(&argv, desc).output().unwrap();
        assert!(
            out.status.success(),
            "{target} compile failed:\n{}\n--- source ---\n{code}",
            String::from_utf8_lossy(&out.stderr)
        );
    }
    let argv = ToolchainDescriptor::expand(&desc.run, &src, &bin, dir.path());
    let mut child = command(&argv, desc)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    let _ = child.stdin.take().unwrap().write_all(stdin.as_bytes());
    let out = child.wait_with_output().unwrap();
    Outcome {
        stdout: String::from_utf8_lossy(&out.stdout).into_owned(),
        stderr: String::from_utf8_lossy(&out.stderr).into_owned(),
        success: out.status.success(),
    }
}
