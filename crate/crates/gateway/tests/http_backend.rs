//! Exercises the HTTP backend against a throwaway local server.

use std::io::{BufRead, BufReader, Read, Write};
use std::net::TcpListener;
use std::sync::{Arc, Mutex};
use std::thread;
use std::time::Duration;

use serde_json::Value;
use unicoder_gateway::{Backend, BackendError, GenerationRequest, HttpBackend};

struct Captured {
    auth: Option<String>,
    body: Value,
}

/// Serves one canned HTTP response per entry in `replies`, capturing requests.
fn serve(replies: Vec<(u16, String)>) -> (String, Arc<Mutex<Vec<Captured>>>) {
    let listener = TcpListener::bind("127.0.0.1:0").unwrap();
    let url = format!("http://{}/v1/chat/completions", listener.local_addr().unwrap());
    let captured = Arc::new(Mutex::new(Vec::new()));
    let sink = captured.clone();
    thread::spawn(move || {
        for (status, body) in replies {
            let (stream, _) = listener.accept().unwrap();
            let mut reader = BufReader::new(stream.try_clone().unwrap());
            let mut content_length = 0;
            let mut auth = None;
            loop {
                let mut line = String::new();
                reader.read_line(&mut line).unwrap();
                let line = line.trim_end();
                if line.is_empty() {
                    break;
                }
                let lower = line.to_ascii_lowercase();
                if let Some(v) = lower.strip_prefix("content-length:") {
                    content_length = v.trim().parse().unwrap();
                }
                if lower.starts_with("authorization:") {
                    auth = Some(line["authorization:".len()..].trim().to_string());
                }
            }
            let mut buf = vec![0; content_length];
            reader.read_exact(&mut buf).unwrap();
            sink.lock().unwrap().push(Captured { auth, body: serde_json::from_slice(&buf).unwrap() });
            let mut stream = stream;
            write!(
                stream,
                "HTTP/1.1 {status} X\r\nContent-Type: application/json\r\nContent-Length: {}\r\nConnection: close\r\n\r\n{body}",
                body.len()
            )
            .unwrap();
        }
    });
    (url, captured)
}

#[test]
fn posts_chat_completion_and_reads_content() {
    let reply = r#"{"choices":[{"message":{"role":"assistant","content":"FUNCTION f()\n    RETURN 1\nEND FUNCTION"},"finish_reason":"stop"}]}"#;
    let (url, captured) = serve(vec![(200, reply.to_string())]);
    let backend = HttpBackend::new(&url, "test-model", "secret", Duration::from_secs(5));
    let response = backend.complete(&GenerationRequest::new("be terse", "write f")).unwrap();
    assert!(response.text.starts_with("FUNCTION f()"));

    let captured = captured.lock().unwrap();
    assert_eq!(captured[0].auth.as_deref(), Some("Bearer secret"));
    let body = &captured[0].body;
    assert_eq!(body["model"], "test-model");
    assert_eq!(body["messages"][0]["role"], "system");
    assert_eq!(body["messages"][1]["content"], "write f");
    assert_eq!(body["temperature"], 0.0);
}

#[test]
fn maps_429_to_rate_limited() {
    let (url, _) = serve(vec![(429, "{}".to_string())]);
    let backend = HttpBackend::new(&url, "m", "k", Duration::from_secs(5));
    assert_eq!(backend.complete(&GenerationRequest::new("", "x")), Err(BackendError::RateLimited));
}

#[test]
fn server_error_is_reported() {
    let (url, _) = serve(vec![(500, r#"{"error":"boom"}"#.to_string())]);
    let backend = HttpBackend::new(&url, "m", "k", Duration::from_secs(5));
    match backend.complete(&GenerationRequest::new("", "x")) {
        Err(BackendError::Other(message)) => assert!(message.contains("500")),
        other => panic!("unexpected {other:?}"),
    }
}
