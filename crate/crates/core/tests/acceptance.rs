//! Acceptance run: one PASS/FAIL line per criterion.
//!
//! Criterion 8 is reported FAIL on purpose. The quoted sequence for
//! `M_n(1,1)` cannot hold: the reference `C_4` and `F_4` alone force
//! `M_4 = -q^2 t^2`. The run still succeeds when that failure is exactly the
//! documented one (sign flipped, the `1` at `n = 4` missing), so any other
//! change in `M_n` turns the whole target red.

use std::process::ExitCode;
use std::time::Instant;

use num_bigint::BigInt;
use qtcat::identities::{M_AT_ONE_NEGATED, M_AT_ONE_QUOTED};
use qtcat::{
    deutsch, enumerate_labelled_trees, enumerate_parking_functions, enumerate_paths, enumerate_trees, eta,
    f_recursive, family_with, identity_check, m_poly, omega, sigma, sigma_inv, stump_check, zeta,
    BivariatePolynomial, Config, DyckPath, LabelledGraph, PolynomialFamily, Variable,
};

enum Verdict {
    Pass,
    Fail(String),
    /// Fails as stated, for the documented reason.
    KnownRed(String),
}

type Check = fn(&Config) -> Verdict;

fn ensure(ok: bool, detail: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(detail())
    }
}

fn verdict(r: Result<(), String>) -> Verdict {
    match r {
        Ok(()) => Verdict::Pass,
        Err(e) => Verdict::Fail(e),
    }
}

fn poly(text: &str) -> BivariatePolynomial {
    text.parse().expect("reference polynomial parses")
}

/// Rows n = 1..4 of the reference table: C_n, F_n, G_n.
const TABLE: [[&str; 3]; 4] = [
    ["1", "1", "1"],
    ["q + t", "q + t", "q + t"],
    [
        "q^3 + q^2*t + q*t^2 + t^3 + q*t",
        "q^3 + q^2*t + q*t^2 + t^3 + q*t",
        "q^2*t^2 + q^3 + t^3 + 2*q*t",
    ],
    [
        "q^6 + q^5*t + q^4*t^2 + q^3*t^3 + q^2*t^4 + q*t^5 + t^6 + q^4*t + q^3*t^2 + q^2*t^3 + q*t^4 + q^3*t + q^2*t^2 + q*t^3",
        "q^6 + q^5*t + q^4*t^2 + 2*q^3*t^3 + q^2*t^4 + q*t^5 + t^6 + q^4*t + q*t^4 + q^3*t + 2*q^2*t^2 + q*t^3",
        "q^5*t^2 + q^4*t^3 + q^3*t^4 + q^2*t^5 + q^6 + q^4*t^2 + q^2*t^4 + t^6 + 2*q^3*t + 2*q*t^3 + q^2*t + q*t^2",
    ],
];

fn polynomial_tables(config: &Config) -> Verdict {
    verdict((|| {
        let families = [PolynomialFamily::CDinv, PolynomialFamily::F, PolynomialFamily::G];
        for (i, row) in TABLE.iter().enumerate() {
            for (fam, text) in families.iter().zip(row) {
                let got = family_with(*fam, i + 1, config).map_err(|e| e.to_string())?;
                ensure(got == poly(text), || format!("{fam} n={}: {got} != {text}", i + 1))?;
            }
        }
        Ok(())
    })())
}

fn symmetry(config: &Config) -> Verdict {
    verdict((|| {
        for n in 1..=12 {
            for fam in [PolynomialFamily::F, PolynomialFamily::G] {
                let p = family_with(fam, n, config).map_err(|e| e.to_string())?;
                ensure(p.swap_qt() == p, || format!("{fam} n={n} is not symmetric"))?;
            }
        }
        Ok(())
    })())
}

fn recursion(config: &Config) -> Verdict {
    verdict((|| {
        for n in 1..=12 {
            let direct = family_with(PolynomialFamily::F, n, config).map_err(|e| e.to_string())?;
            ensure(f_recursive(n) == direct, || format!("n={n}: recursion differs from the sum over paths"))?;
        }
        Ok(())
    })())
}

fn zeta_transport(config: &Config) -> Verdict {
    verdict((|| {
        for n in 1..=12 {
            for p in enumerate_paths(n) {
                let z = zeta(&p);
                ensure(p.area() == z.bounce().value, || format!("area vs bounce∘ζ at {p}"))?;
                ensure(p.dinv() == z.area(), || format!("dinv vs area∘ζ at {p}"))?;
            }
            let a = family_with(PolynomialFamily::CDinv, n, config).map_err(|e| e.to_string())?;
            let b = family_with(PolynomialFamily::CBounce, n, config).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("n={n}: C_dinv != C_bounce"))?;
        }
        Ok(())
    })())
}

fn omega_behaviour(_: &Config) -> Verdict {
    verdict((|| {
        for n in 1..=12 {
            for p in enumerate_paths(n) {
                let w = omega(&p);
                ensure(omega(&w) == p, || format!("ω∘ω ≠ id at {p}"))?;
                let (d, dw) = (p.depth_sequence(), w.depth_sequence());
                let (d, dw) = (d.map_err(|e| e.to_string())?, dw.map_err(|e| e.to_string())?);
                ensure(w.area_sequence().as_slice() == d.as_slice(), || format!("a(ω π) ≠ d(π) at {p}"))?;
                ensure(dw.as_slice() == p.area_sequence().as_slice(), || format!("d(ω π) ≠ a(π) at {p}"))?;
                ensure(deutsch(&p) == w, || format!("ω ≠ Deutsch at {p}"))?;
                let (ir, ret) = p.rise_return().map_err(|e| e.to_string())?;
                ensure(w.rise_return().map_err(|e| e.to_string())? == (ret, ir), || format!("(IR, RET) not swapped at {p}"))?;
            }
        }
        Ok(())
    })())
}

fn dual_laws(_: &Config) -> Verdict {
    verdict((|| {
        for m in 1..=11 {
            for t in enumerate_trees(m) {
                let d = t.dual();
                ensure(d.dual() == t, || format!("dual∘dual ≠ id at {}", t.to_parens()))?;
                let read_a = t.read_a().map_err(|e| e.to_string())?;
                ensure(d.read_d().map_err(|e| e.to_string())? == read_a, || format!("read_D∘dual ≠ read_A at {}", t.to_parens()))?;
                ensure(eta(&sigma_inv(&t)) == d, || format!("dual ≠ η∘σ⁻¹ at {}", t.to_parens()))?;
            }
        }
        for n in 1..=10 {
            for p in enumerate_paths(n) {
                ensure(sigma(&deutsch(&p)) == sigma(&p).dual(), || format!("σ(π′) ≠ σ(π)^dual at {p}"))?;
            }
        }
        Ok(())
    })())
}

fn speyer(config: &Config) -> Verdict {
    verdict((|| {
        for n in 1..=12 {
            let r = identity_check("speyer_commutation", n, config).map_err(|e| e.to_string())?;
            ensure(r.passed(), || r.to_string())?;
        }
        for n in 1..=10 {
            ensure(stump_check(n, config).map_err(|e| e.to_string())?, || format!("stump_check({n}) is false"))?;
        }
        Ok(())
    })())
}

fn m_values(_: &Config) -> Verdict {
    let analysis = (|| -> Result<String, String> {
        let mut at_one = Vec::new();
        for n in 1..=9 {
            let m = m_poly(n).map_err(|e| format!("n={n}: {e}"))?;
            at_one.push(m.evaluate_i64(1, 1));
        }
        // independent of enumeration: the reference rows already fix M_4
        let diff = poly(TABLE[3][0]) - poly(TABLE[3][1]);
        let m4 = diff.div_one_minus(Variable::Q).and_then(|p| p.div_one_minus(Variable::T));
        let m4 = m4.map_err(|e| e.to_string())?;
        ensure(m4 == poly("-q^2*t^2"), || format!("reference rows give M_4 = {m4}"))?;
        ensure(m_poly(4).ok() == Some(m4), || "computed M_4 disagrees with the reference rows".into())?;

        let negated: Vec<BigInt> = at_one.iter().map(|v| -v).collect();
        let expected: Vec<BigInt> = M_AT_ONE_NEGATED.iter().map(|&v| BigInt::from(v)).chain([BigInt::from(32714)]).collect();
        ensure(negated == expected, || format!("-M_n(1,1) for n=1..9 is {negated:?}"))?;
        let quoted: Vec<BigInt> = M_AT_ONE_QUOTED.iter().map(|&v| BigInt::from(v)).collect();
        let mut without_one = negated.clone();
        without_one.remove(3);
        ensure(without_one == quoted, || "quoted list is not -M_n(1,1) with the 1 removed".into())?;
        let literal: Vec<BigInt> = at_one[..8].to_vec();
        ensure(literal != quoted, || "literal statement now holds; update this criterion".into())?;
        Ok(format!(
            "exact division holds for n=1..9, but M_n(1,1) for n=1..8 = {}; the reference C_4 - F_4 = -q^2t^2(1-q)(1-t) \
             forces M_4(1,1) = -1; the quoted 0,0,0,14,...,32714 is -M_n(1,1) for n=1..9 with the 1 at n=4 dropped",
            literal.iter().map(ToString::to_string).collect::<Vec<_>>().join(",")
        ))
    })();
    match analysis {
        Ok(text) => Verdict::KnownRed(text),
        Err(e) => Verdict::Fail(e),
    }
}

/// Connected labelled graphs on n vertices, from the exponential formula
/// `c_n = 2^C(n,2) - Σ_{k<n} C(n-1,k-1) c_k 2^C(n-k,2)`.
fn connected_count(n: usize) -> u64 {
    let binom = |a: usize, b: usize| -> u64 { (0..b).fold(1u64, |acc, i| acc * (a - i) as u64 / (i as u64 + 1)) };
    let all = |k: usize| 1u64 << (k * k.saturating_sub(1) / 2);
    let mut c = vec![0u64; n + 1];
    for m in 1..=n {
        c[m] = all(m) - (1..m).map(|k| binom(m - 1, k - 1) * c[k] * all(m - k)).sum::<u64>();
    }
    c[n]
}

fn parking_graphs(config: &Config) -> Verdict {
    verdict((|| {
        let runs: [(&str, usize); 7] = [
            ("kreweras", 5),
            ("gessel_wang", 7),
            ("pf_graph_formula", 6),
            ("two_to_area_count", 6),
            ("lemma_E_equals_dtilde", 7),
            ("GS_equals_GE", 6),
            ("coinv_equidistribution", 5),
        ];
        for (name, max) in runs {
            for n in 1..=max {
                let r = identity_check(name, n, config).map_err(|e| e.to_string())?;
                ensure(r.passed(), || r.to_string())?;
            }
        }
        // Σ 2^area against the closed count of connected graphs
        for n in 1..=6 {
            let weighted: u64 = enumerate_parking_functions(n).iter().map(|p| 1u64 << p.area()).sum();
            ensure(weighted == connected_count(n + 1), || format!("n={n}: Σ2^area = {weighted}"))?;
        }
        Ok(())
    })())
}

fn counting(_: &Config) -> Verdict {
    verdict((|| {
        let catalan = |n: u64| (0..n).fold(1u128, |c, i| c * 2 * (2 * i as u128 + 1) / (i as u128 + 2));
        for n in 0..=14 {
            let count = enumerate_paths(n).count() as u128;
            ensure(count == catalan(n as u64), || format!("paths n={n}: {count}"))?;
        }
        for m in 1..=13 {
            let count = enumerate_trees(m).count() as u128;
            ensure(count == catalan(m as u64 - 1), || format!("plane trees m={m}: {count}"))?;
        }
        for n in 1..=7u32 {
            let count = enumerate_labelled_trees(n as usize).len() as u64;
            let expected = if n == 1 { 1 } else { (n as u64).pow(n - 2) };
            ensure(count == expected, || format!("labelled trees n={n}: {count}"))?;
        }
        for n in 1..=6u32 {
            let count = enumerate_parking_functions(n as usize).len() as u64;
            ensure(count == (n as u64 + 1).pow(n - 1), || format!("parking functions n={n}: {count}"))?;
        }
        // brute-force connectivity, independent of the library's graph walk
        for n in 1..=6 {
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
            let connected = (0u64..1 << pairs.len())
                .filter(|mask| {
                    let mut comp: Vec<usize> = (0..n).collect();
                    for (i, &(a, b)) in pairs.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            let (ca, cb) = (comp[a], comp[b]);
                            comp.iter_mut().filter(|c| **c == cb).for_each(|c| *c = ca);
                        }
                    }
                    comp.iter().all(|&c| c == comp[0])
                })
                .count() as u64;
            ensure(connected == connected_count(n), || format!("connected graphs n={n}: {connected}"))?;
            let lib = qtcat::enumerate_connected_graphs(n, &Config::default()).map_err(|e| e.to_string())?;
            ensure(lib.len() as u64 == connected, || format!("library connected graphs n={n}: {}", lib.len()))?;
            ensure(lib.iter().all(LabelledGraph::is_connected), || "disconnected graph emitted".into())?;
        }
        Ok(())
    })())
}

fn worked_example(_: &Config) -> Verdict {
    verdict((|| {
        let p: DyckPath = "NNNEENENNEEENNENEE".parse().map_err(|e: qtcat::Error| e.to_string())?;
        ensure(p.area_sequence().as_slice() == [0, 1, 2, 1, 1, 2, 0, 1, 1], || "area sequence".into())?;
        let (d, depth) = p.depth_stats().map_err(|e| e.to_string())?;
        ensure(d.as_slice() == [0, 1, 1, 2, 0, 1, 2, 2, 0], || format!("depth sequence {d}"))?;
        ensure(depth == 9, || format!("depth {depth}"))?;
        ensure(p.ddinv().map_err(|e| e.to_string())? == 15, || "ddinv".into())?;
        ensure(omega(&p).to_string() == "NNENNEEENNNENEEENE", || format!("ω gives {}", omega(&p)))?;
        Ok(())
    })())
}

fn main() -> ExitCode {
    let config = Config::default();
    let criteria: [(&str, Check); 11] = [
        ("polynomial tables n=1..4", polynomial_tables),
        ("symmetry of F_n and G_n, n<=12", symmetry),
        ("F recursion, n<=12", recursion),
        ("zeta transport, n<=12", zeta_transport),
        ("omega behaviour, n<=12", omega_behaviour),
        ("dual-tree laws, n<=10 / m<=11", dual_laws),
        ("Speyer commutation n<=12, stump n<=10", speyer),
        ("M_n exact division and M_n(1,1) list", m_values),
        ("parking and graph identities", parking_graphs),
        ("counting sanity", counting),
        ("worked example", worked_example),
    ];
    let mut unexpected = 0;
    for (i, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let v = check(&config);
        let secs = start.elapsed().as_secs_f64();
        match v {
            Verdict::Pass => println!("criterion {:>2} PASS {title} ({secs:.2}s)", i + 1),
            Verdict::KnownRed(why) => println!("criterion {:>2} FAIL {title} ({secs:.2}s): {why}", i + 1),
            Verdict::Fail(why) => {
                unexpected += 1;
                println!("criterion {:>2} FAIL {title} ({secs:.2}s): {why}", i + 1);
            }
        }
    }
    if unexpected == 0 {
        println!("acceptance: no failures beyond the documented one");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {unexpected} unexpected failure(s)");
        ExitCode::FAILURE
    }
}
