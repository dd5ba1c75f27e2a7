//! Runs one program in a throwaway directory as its own process group, with
//! resource limits, a wall-clock timeout, capped output and, where the
//! kernel allows unprivileged namespaces, no network.

use std::collections::HashMap;
use std::io::{Read, Write};
use std::os::unix::process::{CommandExt, ExitStatusExt};
use std::path::{Path, PathBuf};
use std::process::{Child, Command, ExitStatus, Stdio};
use std::sync::{Mutex, OnceLock};
use std::thread;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;
use unicoder_lang::transpile::{TargetLanguage, ToolchainDescriptor, Toolchains};

use crate::problem::Problem;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(10);
pub const DEFAULT_OUTPUT_CAP: usize = 64 * 1024;
pub const DEFAULT_MEMORY: u64 = 512 * 1024 * 1024;
const COMPILE_TIMEOUT: Duration = Duration::from_secs(120);
const FILE_SIZE_LIMIT: u64 = 64 * 1024 * 1024;
/// Stands in for the scratch directory in captured output, so reports do
/// not depend on where the run happened.
pub const SCRATCH_PLACEHOLDER: &str = "<sandbox>";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Limits {
    #[serde(with = "millis")]
    pub timeout: Duration,
    pub output_cap: usize,
    /// Address-space limit. Applied to targets whose runtimes tolerate it;
    /// advisory for the rest.
    pub memory_bytes: Option<u64>,
    pub isolate_network: bool,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            timeout: DEFAULT_TIMEOUT,
            output_cap: DEFAULT_OUTPUT_CAP,
            memory_bytes: Some(DEFAULT_MEMORY),
            isolate_network: true,
        }
    }
}

mod millis {
    use serde::{Deserialize, Deserializer, Serializer};
    use std::time::Duration;

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_u64(d.as_millis() as u64)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        u64::deserialize(d).map(Duration::from_millis)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ExecStatus {
    Pass,
    Fail,
    CompileError,
    RuntimeError,
    Timeout,
    ResourceKill,
}

impl ExecStatus {
    pub fn name(self) -> &'static str {
        match self {
            ExecStatus::Pass => "pass",
            ExecStatus::Fail => "fail",
            ExecStatus::CompileError => "compile_error",
            ExecStatus::RuntimeError => "runtime_error",
            ExecStatus::Timeout => "timeout",
            ExecStatus::ResourceKill => "resource_kill",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExecOutcome {
    pub status: ExecStatus,
    pub stdout: String,
    pub stderr: String,
    pub stdout_truncated: bool,
    pub stderr_truncated: bool,
    pub duration_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SandboxError {
    #[error("toolchain for {0} is not installed")]
    ToolchainMissing(TargetLanguage),
    #[error("sandbox setup failed: {0}")]
    Setup(String),
}

pub struct Sandbox {
    toolchains: Toolchains,
    versions: Mutex<HashMap<TargetLanguage, Option<String>>>,
}

impl Sandbox {
    pub fn new(toolchains: Toolchains) -> Self {
        Sandbox { toolchains, versions: Mutex::new(HashMap::new()) }
    }

    pub fn builtin() -> Self {
        Sandbox::new(Toolchains::builtin().clone())
    }

    pub fn toolchains(&self) -> &Toolchains {
        &self.toolchains
    }

    /// First line of the toolchain's version output, or `None` when it is
    /// not installed. Probed once per target.
    pub fn toolchain_version(&self, language: TargetLanguage) -> Option<String> {
        if let Some(cached) = self.versions.lock().unwrap().get(&language) {
            return cached.clone();
        }
        let version = self.toolchains.get(language).and_then(|desc| {
            let scratch = std::env::temp_dir();
            let out = base_command(&desc.version, desc, &scratch).stdin(Stdio::null()).output().ok()?;
            if !out.status.success() {
                return None;
            }
            let text = if out.stdout.is_empty() { out.stderr } else { out.stdout };
            Some(String::from_utf8_lossy(&text).lines().next().unwrap_or("").trim().to_string())
        });
        self.versions.lock().unwrap().insert(language, version.clone());
        version
    }

    pub fn is_installed(&self, language: TargetLanguage) -> bool {
        self.toolchain_version(language).is_some()
    }

    /// Runs a candidate against its problem's tests.
    pub fn run_candidate(&self, problem: &Problem, code: &str, limits: &Limits) -> Result<ExecOutcome, SandboxError> {
        self.run_program(problem.language, &problem.program(code), "", limits)
    }

    /// Builds and runs a complete program with the given standard input.
    pub fn run_program(
        &self,
        language: TargetLanguage,
        source: &str,
        stdin: &str,
        limits: &Limits,
    ) -> Result<ExecOutcome, SandboxError> {
        if !self.is_installed(language) {
            return Err(SandboxError::ToolchainMissing(language));
        }
        let desc = self.toolchains.get(language).ok_or(SandboxError::ToolchainMissing(language))?;
        let dir = tempfile::Builder::new()
            .prefix("unicoder-run-")
            .tempdir()
            .map_err(|e| SandboxError::Setup(e.to_string()))?;
        let scratch = dir.path();
        let src = scratch.join(desc.source_file_name());
        let bin = scratch.join("candidate");
        std::fs::write(&src, source).map_err(|e| SandboxError::Setup(e.to_string()))?;
        let started = Instant::now();

        if let Some(compile) = &desc.compile {
            let argv = ToolchainDescriptor::expand(compile, &src, &bin, scratch);
            let compile_limits = Limits { timeout: COMPILE_TIMEOUT, memory_bytes: None, isolate_network: false, ..*limits };
            let run = execute(&argv, desc, scratch, "", &compile_limits, None)?;
            if run.timed_out || !run.status.is_some_and(|s| s.success()) {
                let mut outcome = run.into_outcome(ExecStatus::CompileError, scratch);
                outcome.duration_ms = started.elapsed().as_millis() as u64;
                return Ok(outcome);
            }
        }

        let argv = ToolchainDescriptor::expand(&desc.run, &src, &bin, scratch);
        let memory = limits.memory_bytes.filter(|_| tolerates_address_limit(language));
        let run = execute(&argv, desc, scratch, stdin, limits, memory)?;
        let status = classify(&run);
        let mut outcome = run.into_outcome(status, scratch);
        outcome.duration_ms = started.elapsed().as_millis() as u64;
        Ok(outcome)
    }
}

/// Runtimes that reserve large virtual address ranges up front fail under
/// an address-space limit, so it is only applied where it is meaningful.
fn tolerates_address_limit(language: TargetLanguage) -> bool {
    matches!(language, TargetLanguage::Python | TargetLanguage::Cpp | TargetLanguage::RustT)
}

/// Whether `unshare -rn` works here, which gives the child an empty network
/// namespace without privileges.
pub fn network_isolation_available() -> bool {
    static CELL: OnceLock<bool> = OnceLock::new();
    *CELL.get_or_init(|| {
        Command::new("unshare")
            .args(["-rn", "true"])
            .stdin(Stdio::null())
            .stdout(Stdio::null())
            .stderr(Stdio::null())
            .status()
            .map(|s| s.success())
            .unwrap_or(false)
    })
}

fn shared_cache_dir(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("unicoder-{name}"))
}

/// A command with a scrubbed environment: the parent's variables, including
/// any credentials, never reach the child.
/// Variables that only say where toolchains live. Passed through when set;
/// everything else in the parent environment is dropped.
const TOOLCHAIN_LOCATION_VARS: &[&str] = &["RUSTUP_HOME", "RUSTUP_TOOLCHAIN", "CARGO_HOME", "GOROOT", "JAVA_HOME"];

fn base_command(argv: &[String], desc: &ToolchainDescriptor, scratch: &Path) -> Command {
    let mut cmd = Command::new(&argv[0]);
    cmd.args(&argv[1..]).current_dir(scratch).env_clear();
    for var in TOOLCHAIN_LOCATION_VARS {
        if let Some(value) = std::env::var_os(var) {
            cmd.env(var, value);
        }
    }
    cmd.env("PATH", std::env::var_os("PATH").unwrap_or_else(|| "/usr/local/bin:/usr/bin:/bin".into()))
        .env("HOME", scratch)
        .env("LANG", "C.UTF-8")
        .env("TMPDIR", scratch)
        .env("GOCACHE", shared_cache_dir("gocache"))
        .env("GOPATH", shared_cache_dir("gopath"))
        .env("PYTHONDONTWRITEBYTECODE", "1")
        .env("PYTHONHASHSEED", "0")
        .envs(&desc.env);
    cmd
}

struct RawRun {
    status: Option<ExitStatus>,
    timed_out: bool,
    stdout: Captured,
    stderr: Captured,
}

#[derive(Default)]
struct Captured {
    bytes: Vec<u8>,
    truncated: bool,
}

impl RawRun {
    fn into_outcome(self, status: ExecStatus, scratch: &Path) -> ExecOutcome {
        let clean = |c: &Captured| {
            String::from_utf8_lossy(&c.bytes).replace(&*scratch.to_string_lossy(), SCRATCH_PLACEHOLDER)
        };
        ExecOutcome {
            status,
            stdout: clean(&self.stdout),
            stderr: clean(&self.stderr),
            stdout_truncated: self.stdout.truncated,
            stderr_truncated: self.stderr.truncated,
            duration_ms: 0,
        }
    }
}

/// Keeps the first `cap` bytes and drains the rest so the child never
/// blocks on a full pipe.
fn capture(mut source: impl Read + Send + 'static, cap: usize) -> thread::JoinHandle<Captured> {
    thread::spawn(move || {
        let mut captured = Captured::default();
        let mut chunk = [0u8; 8192];
        loop {
            match source.read(&mut chunk) {
                Ok(0) | Err(_) => break,
                Ok(n) => {
                    let room = cap.saturating_sub(captured.bytes.len());
                    captured.bytes.extend_from_slice(&chunk[..n.min(room)]);
                    captured.truncated |= n > room;
                }
            }
        }
        captured
    })
}

fn execute(
    argv: &[String],
    desc: &ToolchainDescriptor,
    scratch: &Path,
    stdin: &str,
    limits: &Limits,
    memory: Option<u64>,
) -> Result<RawRun, SandboxError> {
    let argv: Vec<String> = if limits.isolate_network && network_isolation_available() {
        ["unshare", "-rn", "--"].iter().map(|s| s.to_string()).chain(argv.iter().cloned()).collect()
    } else {
        argv.to_vec()
    };
    let mut cmd = base_command(&argv, desc, scratch);
    cmd.stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let cpu_seconds = limits.timeout.as_secs() + 2;
    // SAFETY: only async-signal-safe libc calls run between fork and exec.
    unsafe {
        cmd.pre_exec(move || {
            libc::setpgid(0, 0);
            set_limit(libc::RLIMIT_CPU, cpu_seconds);
            set_limit(libc::RLIMIT_FSIZE, FILE_SIZE_LIMIT);
            set_limit(libc::RLIMIT_CORE, 0);
            if let Some(bytes) = memory {
                set_limit(libc::RLIMIT_AS, bytes);
            }
            Ok(())
        });
    }
    let mut child = cmd.spawn().map_err(|e| SandboxError::Setup(format!("{}: {e}", argv[0])))?;
    let input = stdin.as_bytes().to_vec();
    let mut pipe = child.stdin.take().expect("piped stdin");
    let feeder = thread::spawn(move || {
        let _ = pipe.write_all(&input);
    });
    let out = capture(child.stdout.take().expect("piped stdout"), limits.output_cap);
    let err = capture(child.stderr.take().expect("piped stderr"), limits.output_cap);
    let (status, timed_out) = wait_with_deadline(&mut child, limits.timeout);
    kill_group(&child);
    let _ = feeder.join();
    Ok(RawRun { status, timed_out, stdout: out.join().unwrap_or_default(), stderr: err.join().unwrap_or_default() })
}

fn set_limit(resource: libc::__rlimit_resource_t, value: u64) {
    let limit = libc::rlimit { rlim_cur: value as libc::rlim_t, rlim_max: value as libc::rlim_t };
    // SAFETY: plain syscall on a stack value.
    unsafe {
        libc::setrlimit(resource, &limit);
    }
}

fn kill_group(child: &Child) {
    // SAFETY: signals the process group created for this child only.
    unsafe {
        libc::kill(-(child.id() as libc::pid_t), libc::SIGKILL);
    }
}

fn wait_with_deadline(child: &mut Child, timeout: Duration) -> (Option<ExitStatus>, bool) {
    let deadline = Instant::now() + timeout;
    loop {
        match child.try_wait() {
            Ok(Some(status)) => return (Some(status), false),
            Ok(None) if Instant::now() >= deadline => {
                kill_group(child);
                return (child.wait().ok(), true);
            }
            Ok(None) => thread::sleep(Duration::from_millis(5)),
            Err(_) => return (None, false),
        }
    }
}

const ASSERTION_MARKERS: &[&str] = &[
    "AssertionError",
    "Assertion `",
    "Assertion failed",
    "assertion failed",
    "assertion `left",
    "AssertionFailedError",
];

const MEMORY_MARKERS: &[&str] = &["MemoryError", "std::bad_alloc", "memory allocation of", "out of memory"];

fn classify(run: &RawRun) -> ExecStatus {
    if run.timed_out {
        return ExecStatus::Timeout;
    }
    let Some(status) = run.status else {
        return ExecStatus::RuntimeError;
    };
    if status.success() {
        return ExecStatus::Pass;
    }
    let stderr = String::from_utf8_lossy(&run.stderr.bytes);
    if MEMORY_MARKERS.iter().any(|m| stderr.contains(m)) {
        return ExecStatus::ResourceKill;
    }
    if let Some(signal) = status.signal() {
        if matches!(signal, libc::SIGKILL | libc::SIGXCPU | libc::SIGXFSZ) {
            return ExecStatus::ResourceKill;
        }
    }
    if ASSERTION_MARKERS.iter().any(|m| stderr.contains(m)) {
        ExecStatus::Fail
    } else {
        ExecStatus::RuntimeError
    }
}
