use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const FIG: &str = "CRX1 slp 2 13\nv1 -> t0\nv2 -> t1\nv3 -> v1 v2\nv4 -> v1 v3\nv5 -> v3 v4\nv6 -> v4 v5\nv7 -> v6 v5\n";

struct Dir(TempDir);

impl Dir {
    fn new() -> Self {
        Dir(tempfile::tempdir().unwrap())
    }

    fn put(&self, name: &str, body: impl AsRef<[u8]>) -> PathBuf {
        let p = self.0.path().join(name);
        fs::write(&p, body).unwrap();
        p
    }

    fn path(&self, name: &str) -> PathBuf {
        self.0.path().join(name)
    }
}

fn crx(args: &[&dyn AsRef<std::ffi::OsStr>]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_crx"))
        .args(args.iter().map(|a| a.as_ref()))
        .env_remove("CRX_MAX_OUTPUT")
        .output()
        .unwrap()
}

fn ok(out: Output) -> String {
    assert!(
        out.status.success(),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn read(p: &Path) -> String {
    fs::read_to_string(p).unwrap()
}

fn power_slp(k: u32) -> String {
    let mut s = format!("CRX1 slp 1 {}\nv1 -> t0\n", 1u64 << k);
    for i in 2..=k + 1 {
        s += &format!("v{i} -> v{} v{}\n", i - 1, i - 1);
    }
    s
}

#[test]
fn rle_encoding_and_info() {
    let d = Dir::new();
    let raw = d.put("r.txt", "abbaaacaa");
    let out = d.path("r.crx");
    ok(crx(&[&"encode", &"--codec", &"rle", &raw, &out]));
    assert_eq!(read(&out), "CRX1 rle 256 9\n97 1\n98 2\n97 3\n99 1\n97 2\n");
    let info = ok(crx(&[&"info", &out]));
    assert!(info.contains("\nn 5\nN 9\n"), "{info}");
}

#[test]
fn info_reports() {
    let d = Dir::new();
    let fig = d.put("fig.slp", FIG);
    let p = d.put("p.slp", power_slp(30));
    assert!(ok(crx(&[&"info", &fig])).contains("\nn 7\nN 13\n"));
    let info = ok(crx(&[&"info", &p]));
    assert!(info.starts_with("format slp\n"));
    assert!(info.contains("\nn 31\nN 1073741824\n"));
}

#[test]
fn repair_encoding() {
    let d = Dir::new();
    let raw = d.put("x", "aabaab");
    let out = d.path("x.g");
    ok(crx(&[&"encode", &"--codec", &"repair", &raw, &out]));
    let body = read(&out);
    assert!(body.starts_with("CRX1 grammar 256 6\n"));
    assert_eq!(body.lines().count(), 1 + 3);
}

#[test]
fn power_slp_to_rle() {
    let d = Dir::new();
    let p = d.put("p.slp", power_slp(30));
    let out = d.path("p.rle");
    ok(crx(&[&"convert", &"--to", &"rle", &p, &out]));
    assert_eq!(read(&out), "CRX1 rle 1 1073741824\n0 1073741824\n");
}

#[test]
fn lz_sources_need_the_flag() {
    let d = Dir::new();
    let raw = d.put("x", "abababbba");
    let z = d.path("x.lz78");
    ok(crx(&[&"encode", &"--codec", &"lz78", &raw, &z]));
    let out = d.path("o");
    let r = crx(&[&"convert", &"--to", &"repair", &z, &out]);
    assert_eq!(code(&r), 2);
    assert!(String::from_utf8_lossy(&r.stderr).contains("lz78 to repair"));
    ok(crx(&[
        &"convert",
        &"--to",
        &"repair",
        &"--via-expand",
        &z,
        &out,
    ]));
    let back = d.path("back");
    ok(crx(&[&"decode", &out, &back]));
    assert_eq!(fs::read(back).unwrap(), b"abababbba");
}

#[test]
fn budgets() {
    let d = Dir::new();
    let p = d.put("p.slp", power_slp(30));
    let out = d.path("o");
    assert_eq!(code(&crx(&[&"decode", &p, &out])), 3);
    assert_eq!(
        code(&crx(&[
            &"decode",
            &"--max-output",
            &"1000",
            &d.put("f", FIG),
            &out
        ])),
        0
    );
    assert_eq!(
        code(&crx(&[
            &"decode",
            &"--max-output",
            &"12",
            &d.put("f", FIG),
            &out
        ])),
        3
    );
    let r = Command::new(env!("CARGO_BIN_EXE_crx"))
        .args(["decode".as_ref(), d.path("f").as_os_str(), out.as_os_str()])
        .env("CRX_MAX_OUTPUT", "12")
        .output()
        .unwrap();
    assert_eq!(code(&r), 3);
    let z = d.put("z", "CRX1 lz77 1 1073741824 selfref\nL 0\nR 1 1073741823\n");
    assert_eq!(
        code(&crx(&[
            &"convert",
            &"--to",
            &"rle",
            &"--via-expand",
            &z,
            &out
        ])),
        3
    );
}

#[test]
fn validation_errors() {
    let d = Dir::new();
    let out = d.path("o");
    assert_eq!(
        code(&crx(&[&"info", &d.put("bad", "CRX1 rle 2 3\n0 1\n0 2\n")])),
        1
    );
    assert_eq!(code(&crx(&[&"info", &d.path("missing")])), 1);
    assert_eq!(
        code(&crx(&[
            &"encode",
            &"--codec",
            &"repair",
            &d.put("empty", ""),
            &out
        ])),
        1
    );
    assert_eq!(
        code(&crx(&[
            &"encode",
            &"--codec",
            &"rle",
            &"--alphabet",
            &"ab",
            &d.put("x", "abc"),
            &out
        ])),
        1
    );
}

#[test]
fn verify_cases() {
    let d = Dir::new();
    let fig = d.put("fig.slp", FIG);
    let fig_rle = d.put(
        "fig.rle",
        "CRX1 rle 2 13\n0 2\n1 1\n0 1\n1 1\n0 2\n1 1\n0 1\n1 1\n0 2\n1 1\n",
    );
    assert_eq!(ok(crx(&[&"verify", &fig, &fig_rle])), "equal\n");
    let p = d.put("p.slp", power_slp(30));
    let q = d.put("q.rle", "CRX1 rle 1 1073741824\n0 1073741824\n");
    assert_eq!(ok(crx(&[&"verify", &p, &q])), "equal\n");
    let a4 = d.put("a4", "CRX1 rle 1 4\n0 4\n");
    let a5 = d.put("a5", "CRX1 rle 1 5\n0 5\n");
    let r = crx(&[&"verify", &a4, &a5]);
    assert_eq!(code(&r), 4);
    assert_eq!(String::from_utf8(r.stdout).unwrap(), "differ 5\n");
    // aababaababaab vs aababaabbbaab
    let other = d.put(
        "o.rle",
        "CRX1 rle 2 13\n0 2\n1 1\n0 1\n1 1\n0 2\n1 3\n0 2\n1 1\n",
    );
    assert_eq!(
        String::from_utf8(crx(&[&"verify", &fig, &other]).stdout).unwrap(),
        "differ 9\n"
    );
    let z = d.path("fig.lz78");
    ok(crx(&[&"convert", &"--to", &"lz78", &fig, &z]));
    assert_eq!(ok(crx(&[&"verify", &z, &fig_rle])), "equal\n");
    assert_eq!(
        String::from_utf8(crx(&[&"verify", &z, &other]).stdout).unwrap(),
        "differ 9\n"
    );
}

#[test]
fn ncd_output() {
    let d = Dir::new();
    let mut state = 7u64;
    let mut noise = |n: usize| -> Vec<u8> {
        (0..n)
            .map(|_| {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                (state >> 59) as u8 + b'a'
            })
            .collect()
    };
    let x = d.put("x", noise(2000));
    let z = d.put("z", noise(2000));
    let parse = |s: String| -> (f64, Vec<usize>) {
        let mut lines = s.lines();
        let v = lines
            .next()
            .unwrap()
            .strip_prefix("ncd ")
            .unwrap()
            .parse()
            .unwrap();
        let sizes = lines
            .next()
            .unwrap()
            .strip_prefix("sizes ")
            .unwrap()
            .split(' ')
            .map(|t| t.parse().unwrap())
            .collect();
        (v, sizes)
    };
    let (same, sizes) = parse(ok(crx(&[&"ncd", &"--codec", &"lz78", &x, &x])));
    let (diff, _) = parse(ok(crx(&[&"ncd", &"--codec", &"lz78", &x, &z])));
    assert_eq!(sizes.len(), 3);
    assert_eq!(sizes[1], sizes[2]);
    assert!(same < diff && (0.0..=1.1).contains(&diff), "{same} {diff}");
}

#[test]
fn conversions_preserve_the_string() {
    let d = Dir::new();
    let texts: [&[u8]; 4] = [
        b"abbaaacaa",
        b"aababaababaab",
        b"zzzzzzzzzzzzzzzzzy",
        b"the cat sat on the mat; the cat sat",
    ];
    let codecs = ["rle", "lz77", "lz78", "repair", "bisection", "slp"];
    for (i, t) in texts.iter().enumerate() {
        let raw = d.put(&format!("t{i}"), t);
        for codec in codecs {
            let src = d.path(&format!("t{i}.{codec}"));
            ok(crx(&[&"encode", &"--codec", &codec, &raw, &src]));
            for to in codecs {
                for self_ref in [false, true] {
                    let out = d.path("out");
                    let mut args: Vec<&dyn AsRef<std::ffi::OsStr>> =
                        vec![&"convert", &"--to", &to, &"--via-expand", &src, &out];
                    if self_ref {
                        args.push(&"--self-ref");
                    }
                    ok(crx(&args));
                    let back = d.path("back");
                    ok(crx(&[&"decode", &out, &back]));
                    assert_eq!(fs::read(&back).unwrap(), *t, "{codec} -> {to}");
                    assert_eq!(ok(crx(&[&"verify", &src, &out])), "equal\n");
                }
            }
        }
    }
}

#[test]
fn explicit_alphabet() {
    let d = Dir::new();
    let raw = d.put("x", "aababaababaab");
    let out = d.path("x.crx");
    ok(crx(&[
        &"encode",
        &"--codec",
        &"slp",
        &"--alphabet",
        &"ab",
        &raw,
        &out,
    ]));
    assert!(read(&out).starts_with("CRX1 slp 2 13\n"));
    assert_eq!(ok(crx(&[&"verify", &out, &d.put("fig", FIG)])), "equal\n");
    let back = d.path("back");
    ok(crx(&[&"decode", &"--alphabet", &"ab", &out, &back]));
    assert_eq!(fs::read(back).unwrap(), b"aababaababaab");
}
