//! Acceptance criteria, one PASS/FAIL line each. Runs without the libtest
//! harness so the lines appear in order on stdout.

use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

use num_traits::Signed;
use ordercone::lab::random_space;
use ordercone::linalg::{rank_of, solve, Matrix};
use ordercone::space::Method;
use ordercone::{fixtures, OrderedSpace, Rat, RatVec};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome, Duration);

fn cli(args: &[&str]) -> Value {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    let out = Command::new(env!("CARGO_BIN_EXE_ordercone")).args(args).current_dir(dir).output().expect("binary runs");
    let v: Value = serde_json::from_slice(&out.stdout).expect("json report");
    assert_eq!(v["exit_code"].as_i64(), out.status.code().map(i64::from));
    v
}

fn ensure(cond: bool, what: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn vec3(s: &str) -> RatVec {
    ordercone_cli::input::parse_vector(s, 3).unwrap()
}

fn ok_status(v: &Value) -> Result<(), String> {
    ensure(v["status"] == "ok", format!("status {}", v["status"]))
}

fn criterion_1() -> Outcome {
    let v = cli(&["bands", "fourray.json"]);
    ok_status(&v)?;
    let bands = v["result"]["bands"].as_array().unwrap();
    ensure(bands.len() == 8, format!("{} bands", bands.len()))?;
    let x = fixtures::four_ray();
    let lines: Vec<(RatVec, bool)> = bands
        .iter()
        .filter(|b| b["dim"] == 1)
        .map(|b| (vec3(b["basis"][0].as_str().unwrap()), b["directed"].as_bool().unwrap()))
        .collect();
    let mut expected: Vec<(RatVec, bool)> = fixtures::four_ray_vectors().into_iter().map(|r| (r, true)).collect();
    expected.push((vec3("1,1,0"), false));
    expected.push((vec3("1,-1,0"), false));
    for (e, directed) in &expected {
        ensure(
            lines.iter().any(|(l, d)| (l.same_ray(e) || l.same_ray(&e.neg())) && d == directed),
            format!("line through {e} missing or flagged wrongly"),
        )?;
    }
    ensure(lines.len() == 6, "six lines")?;
    let dims: Vec<i64> = bands.iter().map(|b| b["dim"].as_i64().unwrap()).collect();
    ensure(dims.first() == Some(&0) && dims.last() == Some(&3), "trivial bands {0} and X")?;
    ensure(x.enumerate_bands().unwrap().len() == 8, "library agrees")?;
    Ok("8 bands: {0}, X, 4 directed lines, span(1,1,0) and span(1,-1,0) non-directed".into())
}

fn criterion_2() -> Outcome {
    let v = cli(&["projections", "fourray.json"]);
    ok_status(&v)?;
    let r = &v["result"];
    ensure(r["count"] == 2 && r["m"] == 1, format!("count {} m {}", r["count"], r["m"]))?;
    let mats: Vec<&str> = r["projections"].as_array().unwrap().iter().map(|p| p["matrix"].as_str().unwrap()).collect();
    ensure(mats == ["0,0,0;0,0,0;0,0,0", "1,0,0;0,1,0;0,0,1"], "projections are 0 and I")?;
    let l = cli(&["is-lattice", "fourray.json"]);
    ok_status(&l)?;
    ensure(l["result"]["is_lattice"] == false, "is-lattice false")?;
    ensure(
        l["result"]["witness"] == serde_json::json!(["1,0,1", "0,1,1"]),
        format!("witness {}", l["result"]["witness"]),
    )?;
    Ok("2 band projections {0, I}, m = 1, not a lattice, witness (v1, v2)".into())
}

fn criterion_3() -> Outcome {
    for n in 1..=4usize {
        let name = format!("standard{n}.json");
        let b = cli(&["bands", &name]);
        ok_status(&b)?;
        ensure(b["result"]["count"] == 1 << n, format!("R^{n}: {} bands", b["result"]["count"]))?;
        let p = cli(&["projections", &name]);
        ok_status(&p)?;
        let r = &p["result"];
        ensure(r["count"] == 1 << n && r["m"] == n && r["rank_one"] == n, format!("R^{n}: projections {r}"))?;
        let l = cli(&["is-lattice", &name]);
        ok_status(&l)?;
        ensure(
            l["result"]["is_lattice"] == true && l["result"]["routes"]["rank1_census"] == n,
            format!("R^{n} lattice"),
        )?;
    }
    Ok("R^1..R^4: 2^n bands, 2^n projections, m = n, n rank-one projections, lattice".into())
}

fn criterion_4() -> Outcome {
    let x = fixtures::four_ray();
    let [v1, v2, ..] = fixtures::four_ray_vectors();
    for method in ["oracle", "fast"] {
        let v = cli(&["disjoint", "fourray.json", "--x", "1,0,1", "--y", "0,1,1", "--method", method]);
        ok_status(&v)?;
        ensure(v["result"]["disjoint"] == false, "v1, v2 not disjoint")?;
        let w = vec3(v["result"]["witness"].as_str().ok_or("no witness")?);
        ensure(x.leq(&w, &v1) && x.leq(&w, &v2) && !x.contains_positive(&w.neg()), format!("bad witness {w}"))?;
        let v = cli(&["disjoint", "fourray.json", "--x", "1,0,1", "--y", "-1,0,1", "--method", method]);
        ok_status(&v)?;
        ensure(v["result"]["disjoint"] == true, format!("v1, v3 not disjoint by {method}"))?;
    }
    let v = cli(&["disjoint", "fourray.json", "--x", "1,0,1", "--y", "0,1,1"]);
    ensure(v["result"]["witness"] == "1,1,0", "witness (1,1,0)")?;
    Ok("v1, v2 not disjoint with witness (1,1,0); v1 ⊥ v3 by oracle and fast".into())
}

fn criterion_5() -> Outcome {
    let v = cli(&["hierarchy", "fourray.json", "--pairs", "1,0,1:0,1,1;1,1,2:-1,-1,2"]);
    ok_status(&v)?;
    let rows = v["result"]["rows"].as_array().unwrap();
    let triple = |r: &Value| (r["disjoint"].clone(), r["symmetric_interval_disjoint"].clone(), r["d_disjoint"].clone());
    ensure(triple(&rows[0]) == (false.into(), true.into(), true.into()), "(v1,v2) is (F,T,T)")?;
    ensure(triple(&rows[1]) == (false.into(), false.into(), true.into()), "(w,w~) is (F,F,T)")?;
    let x = fixtures::four_ray();
    let [v1, v2, v3, v4] = fixtures::four_ray_vectors();
    let (w, wt) = (v1.add(&v2), v3.add(&v4));
    ensure(x.symmetric_interval_meet(&w, &wt).contains(&vec3("1,-1,0")), "(1,-1,0) in [-w,w] ∩ [-w~,w~]")?;
    let p = x.symmetric_interval_point(&w, &wt).unwrap().ok_or("no interior point")?;
    ensure(x.symmetric_interval_meet(&w, &wt).contains(&p) && !p.is_zero(), "reported point")?;
    Ok(format!("(v1,v2) = (F,T,T), (w,w~) = (F,F,T), (1,-1,0) in the interval meet, LP point {p}"))
}

fn criterion_6() -> Outcome {
    let v = cli(&["decompose", "fourray_x_r.json"]);
    ok_status(&v)?;
    let r = &v["result"];
    ensure(r["factor_count"] == 2, "two factors")?;
    let dims: Vec<i64> = r["factors"].as_array().unwrap().iter().map(|f| f["dim"].as_i64().unwrap()).collect();
    ensure(dims == [1, 3], format!("factor dims {dims:?}"))?;
    ensure(v["checks"].as_array().unwrap().iter().all(|c| c["passed"] == true), "isomorphism checks")?;
    let d = fixtures::four_ray_times_r().decompose().unwrap();
    let four = &d.factors[1].space;
    let atoms = four.atoms();
    ensure(atoms.len() == 4 && four.facets().len() == 4, "3-dim factor has 4 rays and 4 facets")?;
    // order isomorphic to the four-ray space: some labelling of its rays maps onto v1..v4
    let perms = (0..4usize).flat_map(|a| (0..4).flat_map(move |b| (0..4).map(move |c| [a, b, c, 6 - a - b - c])));
    let iso = perms.filter(|p| p[0] != p[1] && p[0] != p[2] && p[1] != p[2]).any(|order| isomorphic_on(atoms, &order));
    ensure(iso, "3-dim factor is order isomorphic to the four-ray space")?;
    ensure(d.factors[0].space.atoms().len() == 1, "1-dim factor is Q with its usual order")?;
    Ok("2 factors (Q and the four-ray space); J and J^-1 positive".into())
}

/// A linear map sending each atom to a positive multiple of `v[order[k]]` exists iff the coordinates
/// of the fourth ray in the first three have the same signs on both sides.
fn isomorphic_on(atoms: &[RatVec], order: &[usize]) -> bool {
    let v = fixtures::four_ray_vectors();
    let coords = |rays: &[RatVec], last: &RatVec| solve(&Matrix::from_columns(rays, 3), last).ok().flatten();
    let targets: Vec<RatVec> = order[..3].iter().map(|&k| v[k].clone()).collect();
    let (Some(alpha), Some(beta)) = (coords(&atoms[..3], &atoms[3]), coords(&targets, &v[order[3]])) else {
        return false;
    };
    alpha.iter().zip(beta.iter()).all(|(a, b)| (a * b).is_positive())
}

fn criterion_7() -> Outcome {
    let mut counts = [0usize; 7];
    for seed in 0..200u64 {
        let dim = 2 + (seed % 4) as usize;
        let rays = dim + ((seed / 4) % 3) as usize;
        let x: OrderedSpace = random_space(dim, rays, seed).map_err(|e| format!("seed {seed}: {e}"))?;
        let t = Instant::now();
        property_checks(&x, seed, &mut counts).map_err(|e| format!("seed {seed} (dim {dim}, {rays} rays): {e}"))?;
        if std::env::var_os("ACCEPTANCE_VERBOSE").is_some() {
            let per: Vec<String> = SECTION_NANOS
                .iter()
                .map(|n| format!("{:.1}s", n.load(std::sync::atomic::Ordering::Relaxed) as f64 / 1e9))
                .collect();
            eprintln!("  seed {seed}: dim {dim}, {rays} rays, {:.2?}; cumulative a-g {}", t.elapsed(), per.join(" "));
        }
    }
    Ok(format!(
        "200 spaces: {} pairs oracle=fast, {} algebras, {} lattice counts, {} chains, {} tuples, {} infimum products, {} band identities",
        counts[0], counts[1], counts[2], counts[3], counts[4], counts[5], counts[6]
    ))
}

/// Projection pairs checked per space when there are more than this many.
const PROJECTION_PAIR_SAMPLE: usize = 24;

fn property_checks(x: &OrderedSpace, seed: u64, counts: &mut [usize; 7]) -> Result<(), String> {
    let err = |e: ordercone::Error| e.to_string();
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xacce97);
    let n = x.dim();
    let lattice = x.enumerate_bands().map_err(err)?;
    let mut lap = Lap::new();

    // (a) oracle and fast agree, on a mix of arbitrary and band-aligned pairs
    for k in 0..20 {
        let (a, b) = if k % 2 == 0 {
            (x.random_vector(&mut rng), x.random_vector(&mut rng))
        } else {
            let band = &lattice.bands[rng.gen_range(0..lattice.len())];
            let perp = x.band_complement(band).map_err(err)?;
            (combination(band.basis.rows(), n, &mut rng), combination(perp.basis.rows(), n, &mut rng))
        };
        let o = x.disjoint(&a, &b, Method::Oracle).map_err(err)?;
        let f = x.disjoint(&a, &b, Method::Fast).map_err(err)?;
        ensure(o == f, format!("oracle {o} vs fast {f} on ({a}; {b})"))?;
        counts[0] += 1;
    }

    lap.tick(0);
    // (b) commuting projections and Boolean laws
    let report = x.enumerate_band_projections().map_err(err)?;
    let k = report.len();
    for i in 0..k {
        for j in 0..k {
            let (p, q) = (&report.projections[i].matrix, &report.projections[j].matrix);
            ensure(p.mul(q) == q.mul(p), "band projections do not commute")?;
        }
    }
    for i in 0..k {
        for j in 0..k {
            for l in 0..k {
                let (m, jn) = (&report.meet_table, &report.join_table);
                ensure(m[jn[i][j]][l] == jn[m[i][l]][m[j][l]], "distributivity")?;
            }
        }
        ensure(report.meet_table[i][report.complement_map[i]] == 0, "complement meet")?;
    }
    ensure(report.laws.all(), "Boolean laws")?;
    counts[1] += 1;

    lap.tick(1);
    // (c) counting
    let verdict = x.is_vector_lattice().map_err(err)?;
    ensure(k == 1 << report.m && report.m <= n, format!("{k} projections, m = {}", report.m))?;
    ensure((report.m == n) == verdict.is_lattice, "m = dim iff lattice")?;
    let wp = x.weakly_pervasive_witness().map_err(err)?;
    ensure(wp.is_none() == verdict.is_lattice, "weakly pervasive witness iff not a lattice")?;
    counts[2] += 1;

    lap.tick(2);
    // (d) implication chain on atom pairs and random positive pairs
    let atoms = x.atoms();
    let mut pairs = Vec::new();
    for i in 0..atoms.len() {
        for j in i + 1..atoms.len() {
            pairs.push((atoms[i].clone(), atoms[j].clone()));
        }
    }
    for _ in 0..5 {
        pairs.push((x.random_positive(&mut rng), x.random_positive(&mut rng)));
    }
    counts[3] += x.hierarchy_report(&pairs).map_err(err)?.len();

    lap.tick(3);
    // (e) pairwise disjoint non-zero tuples are independent
    let mut candidates: Vec<RatVec> = atoms.to_vec();
    for b in lattice.iter().filter(|b| !b.is_zero()) {
        candidates.push(combination(b.basis.rows(), n, &mut rng));
    }
    for _ in 0..5 {
        candidates.push(x.random_vector(&mut rng));
    }
    for _ in 0..3 {
        candidates.shuffle(&mut rng);
        let mut tuple: Vec<RatVec> = Vec::new();
        for c in &candidates {
            if c.is_zero() {
                continue;
            }
            let mut ok = true;
            for t in &tuple {
                if !x.disjoint(c, t, Method::Oracle).map_err(err)? {
                    ok = false;
                    break;
                }
            }
            if ok {
                tuple.push(c.clone());
            }
        }
        ensure(rank_of(&tuple, n) == tuple.len(), format!("dependent disjoint tuple of size {}", tuple.len()))?;
        counts[4] += 1;
    }

    lap.tick(4);
    // (f) products of band projections are infima
    let positive = x.random_positive(&mut rng);
    let mut pairs: Vec<(usize, usize)> = (0..k).flat_map(|i| (i..k).map(move |j| (i, j))).collect();
    if pairs.len() > PROJECTION_PAIR_SAMPLE {
        pairs = pairs.choose_multiple(&mut rng, PROJECTION_PAIR_SAMPLE).copied().collect();
    }
    for (i, j) in pairs {
        let ps = [report.projections[i].matrix.clone(), report.projections[j].matrix.clone()];
        ensure(x.product_infimum_check(&ps, &positive).map_err(err)?, "product is not the infimum")?;
        counts[5] += 1;
    }

    lap.tick(5);
    // (g) band identities
    for _ in 0..4 {
        let b = &lattice.bands[rng.gen_range(0..lattice.len())];
        let c = &lattice.bands[rng.gen_range(0..lattice.len())];
        let r = x.band_sum_check(b, c).map_err(err)?;
        ensure(r.identity_holds, "(B+C)^⊥⊥ = (B^⊥ ∩ C^⊥)^⊥ or B ∩ C = (B^⊥ + C^⊥)^⊥ fails")?;
        let size = rng.gen_range(0..=lattice.len().min(4));
        let sub: Vec<_> = lattice.bands.choose_multiple(&mut rng, size).cloned().collect();
        let meet = x.band_meet(&sub).map_err(err)?;
        ensure(meet.same_band(&x.band_meet_via_complements(&sub).map_err(err)?), "∩B_i ≠ (∪B_i^⊥)^⊥")?;
        counts[6] += 1;
    }
    lap.tick(6);
    Ok(())
}

static SECTION_NANOS: [std::sync::atomic::AtomicU64; 7] = [const { std::sync::atomic::AtomicU64::new(0) }; 7];

/// Accumulates time spent per sub-check, reported under ACCEPTANCE_VERBOSE.
struct Lap(Instant);

impl Lap {
    fn new() -> Self {
        Lap(Instant::now())
    }

    fn tick(&mut self, section: usize) {
        let ns = self.0.elapsed().as_nanos() as u64;
        SECTION_NANOS[section].fetch_add(ns, std::sync::atomic::Ordering::Relaxed);
        self.0 = Instant::now();
    }
}

fn combination(basis: &[RatVec], n: usize, rng: &mut ChaCha8Rng) -> RatVec {
    basis.iter().fold(RatVec::zeros(n), |acc, b| acc.add(&b.scale(&Rat::from_integer(rng.gen_range(-2..=2).into()))))
}

fn criterion_8() -> Outcome {
    let s = cli(&["pervasive-at", "standard2.json", "--b", "1,-1"]);
    ok_status(&s)?;
    ensure(s["result"]["pervasive"] == true, "standard R^2 at (1,-1)")?;
    let w = s["result"]["witness"].as_str().ok_or("no witness")?;
    ensure(w == "1,0", format!("witness {w}"))?;
    let f = cli(&["pervasive-at", "fourray.json", "--b", "1,1,0"]);
    ok_status(&f)?;
    ensure(f["result"]["pervasive"] == false, "four-ray at (1,1,0)")?;
    // brute-force cross-check of the minima over the positive upper bounds of b
    let x = fixtures::four_ray();
    let b = vec3("1,1,0");
    let probe = x.pervasive_at(&b).unwrap();
    let [v1, v2, ..] = fixtures::four_ray_vectors();
    for (i, fi) in x.facets().iter().enumerate() {
        let attained = [v1.clone(), v2.clone()].iter().map(|u| fi.dot(u)).min().unwrap();
        ensure(probe.bounds[i] <= attained, "LP minimum above a known upper bound")?;
        ensure(probe.bounds[i] >= Rat::from_integer(0.into()), "negative minimum over positive bounds")?;
    }
    Ok("pervasive at (1,-1) in R^2 with witness (1,0); not pervasive at (1,1,0) in the four-ray space".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("four-ray band census", criterion_1, Duration::from_secs(1)),
        ("four-ray projection census", criterion_2, Duration::from_secs(1)),
        ("standard R^n, n = 1..4", criterion_3, Duration::from_secs(5)),
        ("disjointness witnesses", criterion_4, Duration::from_secs(1)),
        ("hierarchy separations", criterion_5, Duration::from_secs(1)),
        ("product decomposition", criterion_6, Duration::from_secs(2)),
        ("property suites on 200 random spaces", criterion_7, Duration::from_secs(600)),
        ("pervasiveness probes", criterion_8, Duration::from_secs(1)),
    ];
    let mut failed = 0;
    for (i, (name, f, limit)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let outcome = outcome.and_then(|msg| {
            if elapsed <= *limit {
                Ok(msg)
            } else {
                Err(format!("took {elapsed:.2?}, limit {limit:?}"))
            }
        });
        match outcome {
            Ok(msg) => println!("criterion {} PASS {name} ({elapsed:.2?}): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {} FAIL {name} ({elapsed:.2?}): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
