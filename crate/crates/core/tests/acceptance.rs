//! One test per acceptance criterion, each printing a PASS/FAIL line.
//! All comparisons are exact.

use std::io::Write;
use std::sync::Mutex;
use std::time::Instant;

use num_bigint::BigInt;
use uhg::constructions::{opposite_points, perpendicular_point, Side};
use uhg::metric::{cross_ratio, quadrance, quadrance_via_cross, quadrea, quadreal, spread, spread_via_cross};
use uhg::nullkernel::{all_null_params, join_null, null_diagonal_point, null_point};
use uhg::projective::{all_lines, all_points, bilinear, join, meet};
use uhg::trig::{cross_fn_roots, solve_right_triangle, spread_poly, spread_poly_coeffs, triple_spread_fn, RightTriangleState};
use uhg::verifier::{run, run_all, Gen, Strategy};
use uhg::{Field, FieldSpec, Line, Point, Scalar};

/// The timing targets are per criterion, so the criteria run one at a time.
static SERIAL: Mutex<()> = Mutex::new(());

/// Written to the process stdout directly so the line shows up without
/// `--nocapture`.
fn line(s: String) {
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
}

fn report(n: u32, name: &str, started: Instant, result: Result<String, String>) {
    let secs = started.elapsed().as_secs_f64();
    match result {
        Ok(info) => line(format!("criterion {n} PASS {name} ({info}; {secs:.2}s)")),
        Err(e) => {
            line(format!("criterion {n} FAIL {name}: {e} ({secs:.2}s)"));
            panic!("criterion {n} failed: {e}");
        }
    }
}

macro_rules! expect {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn spec(s: &str) -> FieldSpec {
    FieldSpec::parse(s).unwrap()
}

fn pt(v: [&Scalar; 3]) -> Point {
    Point::new(v[0].clone(), v[1].clone(), v[2].clone()).unwrap()
}

fn ln(v: [&Scalar; 3]) -> Line {
    Line::new(v[0].clone(), v[1].clone(), v[2].clone()).unwrap()
}

/// Random rationals with every listed polynomial in them nonzero.
fn pairs(g: &mut Gen, n: usize, ok: impl Fn(&Scalar, &Scalar) -> bool) -> Vec<(Scalar, Scalar)> {
    let mut out = vec![];
    while out.len() < n {
        let (x, y) = (g.scalar(), g.scalar());
        if ok(&x, &y) {
            out.push((x, y));
        }
    }
    out
}

fn worked_examples() -> Result<String, String> {
    let q = Field::rationals();
    let (zero, one) = (q.int(0), q.int(1));
    let mut g = Gen::new(&q, 12, 1);
    let mut count = 0;

    // Join and perpendicular point of [x:0:1], [0:y:1].
    for (x, y) in pairs(&mut g, 20, |x, y| !x.is_zero() && !y.is_zero()) {
        let (a1, a2) = (pt([&x, &zero, &one]), pt([&zero, &y, &one]));
        let expected = Line::new(y.clone(), x.clone(), &x * &y).unwrap();
        expect!(join(&a1, &a2).unwrap() == expected, "join of {a1}, {a2}");
        let p = perpendicular_point(&Side::new(a1, a2).unwrap());
        expect!(p == Point::new(y.clone(), x.clone(), &x * &y).unwrap(), "perpendicular point {p}");
        count += 1;
    }

    // Quadrance closed forms.
    for (x, y) in pairs(&mut g, 20, |x, y| !(x.sq() + y.sq() - 1).is_zero() && !(x.sq() - 1).is_zero() && !(y.sq() - 1).is_zero()) {
        let a = pt([&x, &y, &one]);
        let d = x.sq() + y.sq() - 1;
        let q1 = quadrance(&pt([&zero, &zero, &one]), &a);
        expect!(q1.value() == Some(&((x.sq() + y.sq()) / &d)), "q([0:0:1], {a}) = {q1:?}");
        let q2 = quadrance(&pt([&one, &zero, &zero]), &a);
        expect!(q2.value() == Some(&((y.sq() - 1) / &d)), "q([1:0:0], {a}) = {q2:?}");
        let (c1, c2) = (pt([&x, &zero, &one]), pt([&y, &zero, &one]));
        let qc = quadrance(&c1, &c2);
        let want = -(&x - &y).sq() / ((y.sq() - 1) * (x.sq() - 1));
        expect!(qc.value() == Some(&want), "q({c1}, {c2}) = {qc:?}, want {want}");
        count += 3;
    }

    // Spread closed forms.
    for _ in 0..20 {
        let (l1, m1, l2, m2) = (g.scalar(), g.scalar(), g.scalar(), g.scalar());
        let (n1, n2) = (l1.sq() + m1.sq(), l2.sq() + m2.sq());
        if n1.is_zero() || n2.is_zero() {
            continue;
        }
        let s = spread(&ln([&l1, &m1, &zero]), &ln([&l2, &m2, &zero]));
        let want = (&l1 * &m2 - &l2 * &m1).sq() / (n1 * n2);
        expect!(s.value() == Some(&want), "spread through [0:0:1]: {s:?}, want {want}");
        if (l1.sq() - 1).is_zero() || (l2.sq() - 1).is_zero() {
            continue;
        }
        let s = spread(&ln([&l1, &zero, &one]), &ln([&l2, &zero, &one]));
        let want = -(&l2 - &l1).sq() / ((l1.sq() - 1) * (l2.sq() - 1));
        expect!(s.value() == Some(&want), "spread through [0:1:0]: {s:?}, want {want}");
        count += 2;
    }

    // Right triangle [x:0:1], [0:y:1], [0:0:1].
    for (x, y) in pairs(&mut g, 20, |x, y| {
        !x.is_zero() && !y.is_zero() && !(x.sq() - 1).is_zero() && !(y.sq() - 1).is_zero()
            && !(x.sq() + y.sq() - x.sq() * y.sq()).is_zero()
    }) {
        let a = [pt([&x, &zero, &one]), pt([&zero, &y, &one]), pt([&zero, &zero, &one])];
        let qs = [quadrance(&a[1], &a[2]), quadrance(&a[0], &a[2]), quadrance(&a[0], &a[1])];
        let qs: Vec<Scalar> = qs.into_iter().map(|v| v.into_value().unwrap()).collect();
        let (x2, y2) = (x.sq(), y.sq());
        let want = [-&y2 / (1 - &y2), -&x2 / (1 - &x2), (&x2 * &y2 - &x2 - &y2) / ((1 - &x2) * (1 - &y2))];
        expect!(qs == want, "quadrances {qs:?}, want {want:?}");
        let l = [join(&a[1], &a[2]).unwrap(), join(&a[0], &a[2]).unwrap(), join(&a[0], &a[1]).unwrap()];
        let ss = [spread(&l[1], &l[2]), spread(&l[0], &l[2]), spread(&l[0], &l[1])];
        let ss: Vec<Scalar> = ss.into_iter().map(|v| v.into_value().unwrap()).collect();
        let d = &x2 + &y2 - &x2 * &y2;
        let want = [(1 - &x2) * &y2 / &d, &x2 * (1 - &y2) / &d, one.clone()];
        expect!(ss == want, "spreads {ss:?}, want {want:?}");
        expect!(qs[2] == &qs[0] + &qs[1] - &qs[0] * &qs[1], "Pythagoras at x = {x}, y = {y}");
        count += 1;
    }

    // Quadrea and quadreal of [0:0:1], [x:y:1], [x:−y:1].
    for (x, y) in pairs(&mut g, 20, |x, y| {
        !x.is_zero() && !y.is_zero() && !(x.sq() - 1).is_zero() && !(x.sq() + y.sq() - 1).is_zero()
            && !(x.sq() + y.sq()).is_zero()
    }) {
        let a = [pt([&zero, &zero, &one]), pt([&x, &y, &one]), pt([&x, &(-&y), &one])];
        let area = quadrea(&a[0], &a[1], &a[2]).into_value().unwrap();
        let want = 4 * (x.sq() * y.sq()) / (x.sq() + y.sq() - 1).sq();
        expect!(area == want, "quadrea {area}, want {want}");
        let l = [join(&a[1], &a[2]).unwrap(), join(&a[0], &a[2]).unwrap(), join(&a[0], &a[1]).unwrap()];
        let areal = quadreal(&l[0], &l[1], &l[2]).into_value().unwrap();
        let want = 4 * (x.sq().sq() * y.sq()) / ((x.sq() - 1) * (x.sq() + y.sq()).sq());
        expect!(areal == want, "quadreal {areal}, want {want}");
        count += 1;
    }

    // Equal quadrances −3: roots of the Cross function and two witnesses.
    let m3 = q.int(-3);
    let roots = cross_fn_roots(&q, &m3, &m3, &m3);
    expect!(roots == vec![q.int(-27), q.int(5)], "Cross function roots {roots:?}");
    for (spec_s, z1, z2, want_s) in [("Q[sqrt=2,3]", None, None, q.int(-3)), ("Q[sqrt=2,3,5]", Some(5), Some(10), q.ratio(5, 9).unwrap())] {
        let f = Field::parse(spec_s).unwrap();
        let r = |n: i64| f.sqrt(&f.int(n)).unwrap();
        let (s2, s3) = (r(2), r(3));
        let z1 = z1.map(|_| r(5)).unwrap_or(f.int(1));
        let z2 = z2.map(|_| &s2 * r(5)).unwrap_or(s2.clone());
        let a = [
            pt([&s2, &f.int(0), &z1]),
            pt([&f.int(-1), &s3, &z2]),
            pt([&f.int(-1), &(-&s3), &z2]),
        ];
        let l = [join(&a[1], &a[2]).unwrap(), join(&a[0], &a[2]).unwrap(), join(&a[0], &a[1]).unwrap()];
        for k in 0..3 {
            let (i, j) = [(1, 2), (0, 2), (0, 1)][k];
            let qk = quadrance(&a[i], &a[j]).into_value().unwrap();
            expect!(qk.to_string() == "-3", "{spec_s}: q{} = {qk}", k + 1);
            let sk = spread(&l[i], &l[j]).into_value().unwrap();
            expect!(sk.to_string() == want_s.to_string(), "{spec_s}: S{} = {sk}, want {want_s}", k + 1);
        }
        count += 1;
    }

    // Right triangle with spreads 1/4, 1/2 and its quadrea.
    let (s1, s2) = (q.ratio(1, 4).unwrap(), q.ratio(1, 2).unwrap());
    let t = solve_right_triangle(&RightTriangleState { s1: Some(s1), s2: Some(s2), ..Default::default() })
        .map_err(|e| e.to_string())?;
    let got = [t.q1.to_string(), t.q2.to_string(), t.q3.to_string()];
    expect!(got == ["-1/2", "-1", "-2"], "Napier solution {got:?}");
    let f = Field::parse("Q[sqrt=2,3]").unwrap();
    let (x, y) = (f.sqrt(&f.int(2)).unwrap().inv().unwrap(), f.sqrt(&f.int(3)).unwrap().inv().unwrap());
    let (fz, fo) = (f.int(0), f.int(1));
    let a = [pt([&x, &fz, &fo]), pt([&fz, &y, &fo]), pt([&fz, &fz, &fo])];
    let area = quadrea(&a[0], &a[1], &a[2]).into_value().unwrap();
    expect!(area.to_string() == "1/2", "quadrea of the constructed triangle {area}");

    // The same spreads over F23.
    let f = Field::prime(23).unwrap();
    let a = [Point::ints(&f, 14, 0, 1).unwrap(), Point::ints(&f, 0, 10, 1).unwrap(), Point::ints(&f, 0, 0, 1).unwrap()];
    let l = [join(&a[1], &a[2]).unwrap(), join(&a[0], &a[2]).unwrap(), join(&a[0], &a[1]).unwrap()];
    let ss: Vec<String> =
        [(1, 2), (0, 2), (0, 1)].iter().map(|&(i, j)| spread(&l[i], &l[j]).into_value().unwrap().to_string()).collect();
    expect!(ss == ["6", "12", "1"], "F23 spreads {ss:?}");
    count += 3;
    Ok(format!("{count} example instances"))
}

#[test]
fn criterion_1_worked_examples() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = worked_examples();
    let r = r.and_then(|info| {
        let secs = t.elapsed().as_secs_f64();
        if secs < 5.0 {
            Ok(info)
        } else {
            Err(format!("took {secs:.2}s, target < 5s"))
        }
    });
    report(1, "worked-example regressions", t, r);
}

#[test]
fn criterion_2_exhaustive_finite_fields() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        let mut total = 0;
        let mut sampled = 0;
        for p in ["Fp=5", "Fp=7", "Fp=11", "Fp=13"] {
            let reports = run_all(&spec(p), Strategy::exhaustive()).map_err(|e| e.to_string())?;
            for r in &reports {
                expect!(r.failed == 0, "{} over {p}: {} failures, first {:?}", r.id, r.failed, r.failures.first());
                if r.diagnostics.iter().any(|d| d.contains("sampled")) {
                    sampled += 1;
                }
            }
            total += reports.len();
        }
        let secs = t.elapsed().as_secs_f64();
        expect!(secs < 300.0, "took {secs:.0}s, target < 5 minutes");
        Ok(format!("{total} reports over F5..F13, 0 failures, {sampled} sampled past the exhaustive cap"))
    })();
    report(2, "exhaustive finite-field suite", t, r);
}

#[test]
fn criterion_3_null_constants() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        let ex = |id: &str, p: &str| run(id, &spec(p), Strategy::exhaustive()).map_err(|e| e.to_string());
        let rnd = |id: &str, n: u64| run(id, &spec("Q"), Strategy::random(n, 8, 42)).map_err(|e| e.to_string());
        let r = ex("T82-triply-nil-quadreal", "Fp=11")?;
        expect!(r.passed == 220 && r.failed == 0, "quadreal over F11: {r:?}");
        let r = ex("T92-48-64", "Fp=11")?;
        expect!(r.passed == 495 && r.failed == 0, "48/64 over F11: {r:?}");
        let r = rnd("T92-48-64", 500)?;
        expect!(r.passed == 500 && r.failed == 0, "48/64 over Q: {r:?}");
        let r = rnd("T84-triply-nil-orthocenter", 100)?;
        expect!(r.passed == 100 && r.failed == 0, "orthocenter constants over Q: {r:?}");
        let r = ex("T84-triply-nil-orthocenter", "Fp=5")?;
        expect!(r.drawn == 0 && r.diagnostics.iter().any(|d| d.contains("characteristic 5")), "guard: {r:?}");
        Ok("220 triply nil triples, 495 + 500 null quadrangles, 100 orthocenter triangles".into())
    })();
    report(3, "null constants", t, r);
}

#[test]
fn criterion_4_converse_counterexamples() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        let r = run("CX-triple-quad-converse", &spec("Q[sqrt=-1]"), Strategy::Targeted).map_err(|e| e.to_string())?;
        expect!(r.failed >= 1, "no Triple quad counterexample over Q(i): {r:?}");
        let q = Field::rationals();
        let (x, y) = (q.ratio(3, 2).unwrap(), q.ratio(1, 2).unwrap());
        let (z, o) = (q.int(0), q.int(1));
        let a = [pt([&z, &z, &o]), pt([&x, &y, &o]), pt([&x, &(-&y), &o])];
        let qq = |i: usize, j: usize| quadrance(&a[i], &a[j]).into_value().unwrap();
        let (q1, q2, q3) = (qq(1, 2), qq(0, 2), qq(0, 1));
        expect!(q1 == &q2 + &q3 - &q2 * &q3, "q₁ = {q1}, q₂ = {q2}, q₃ = {q3}");
        let s1 = spread(&join(&a[0], &a[1]).unwrap(), &join(&a[0], &a[2]).unwrap()).into_value().unwrap();
        expect!(!s1.is_one(), "S₁ = 1");
        let r2 = run("CX-pythagoras-converse", &spec("Q"), Strategy::Targeted).map_err(|e| e.to_string())?;
        expect!(r2.failed >= 1, "no Pythagoras counterexample: {r2:?}");
        Ok(format!("{} Triple quad counterexamples over Q(i); at (3/2, 1/2) q₁ = {q1} but S₁ = {s1}", r.failed))
    })();
    report(4, "converse counterexamples", t, r);
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn criterion_5_spread_polynomials() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        let sq = |p: &[i64]| poly_mul(p, p);
        let table: Vec<Vec<i64>> = vec![
            vec![0],
            vec![0, 1],
            vec![0, 4, -4],
            vec![0, 9, -24, 16],
            vec![0, 16, -80, 128, -64],
            vec![0, 25, -200, 560, -640, 256],
            poly_mul(&poly_mul(&[0, 4], &[1, -1]), &poly_mul(&sq(&[3, -4]), &sq(&[1, -4]))),
            poly_mul(&[0, 1], &sq(&[7, -56, 112, -64])),
        ];
        for (n, want) in table.iter().enumerate() {
            let got = spread_poly_coeffs(n).coefficients;
            let want: Vec<BigInt> = want.iter().map(|&c| BigInt::from(c)).collect();
            expect!(got == want, "S{n}: {got:?}, want {want:?}");
        }
        let q = Field::rationals();
        let mut g = Gen::new(&q, 20, 5);
        for _ in 0..50 {
            let x = g.scalar();
            for n in 1..=20 {
                let v = triple_spread_fn(&x, &spread_poly(n - 1, &x), &spread_poly(n, &x));
                expect!(v.is_zero(), "S(x, S{}(x), S{n}(x)) = {v} at x = {x}", n - 1);
            }
        }
        for n in 1..=20 {
            let p = spread_poly_coeffs(n);
            expect!(p.degree() == Some(n), "degree of S{n} is {:?}", p.degree());
            let four = BigInt::from(4).pow(n as u32 - 1);
            expect!(p.leading() == four || p.leading() == -four.clone(), "leading coefficient of S{n}");
        }
        Ok("table n ≤ 7, recursion n ≤ 20 at 50 points, degrees and leading terms n ≤ 20".into())
    })();
    report(5, "spread polynomials", t, r);
}

#[test]
fn criterion_6_oracle_equivalences() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        let f13 = Field::prime(13).unwrap();
        let ps = all_null_params(&f13).unwrap();
        for p1 in &ps {
            for p2 in &ps {
                if p1 != p2 {
                    let direct = join(&null_point(p1), &null_point(p2)).unwrap();
                    expect!(join_null(p1, p2).unwrap() == direct, "join of nulls {p1}, {p2}");
                }
            }
        }
        let f7 = Field::prime(7).unwrap();
        let ps = all_null_params(&f7).unwrap();
        let mut diagonals = 0;
        for p1 in &ps {
            for p2 in &ps {
                for p3 in &ps {
                    for p4 in &ps {
                        let set = [p1, p2, p3, p4];
                        if (0..4).any(|i| (i + 1..4).any(|j| set[i] == set[j])) {
                            continue;
                        }
                        let composed = meet(&join_null(p1, p2).unwrap(), &join_null(p3, p4).unwrap()).unwrap();
                        expect!(null_diagonal_point(p1, p2, p3, p4).unwrap() == composed, "diagonal {set:?}");
                        diagonals += 1;
                    }
                }
            }
        }
        let f5 = Field::prime(5).unwrap();
        let (pts, lns) = (all_points(&f5).unwrap(), all_lines(&f5).unwrap());
        for a in &pts {
            for b in &pts {
                expect!(quadrance(a, b) == quadrance_via_cross(a, b), "quadrance forms at {a}, {b}");
            }
        }
        for a in &lns {
            for b in &lns {
                expect!(spread(a, b) == spread_via_cross(a, b), "spread forms at {a}, {b}");
            }
        }
        let q = Field::rationals();
        let mut g = Gen::new(&q, 8, 6);
        for _ in 0..10_000 {
            let (a, b) = (g.point(), g.point());
            expect!(quadrance(&a, &b) == quadrance_via_cross(&a, &b), "quadrance forms at {a}, {b}");
            let (l, m) = (g.line(), g.line());
            expect!(spread(&l, &m) == spread_via_cross(&l, &m), "spread forms at {l}, {m}");
        }
        let mut sides = 0;
        while sides < 10_000 {
            let (a1, a2) = (g.point(), g.point());
            // Perpendicular points are each other's opposites, which repeats
            // points in the cross ratio.
            if a1 == a2 || a1.is_null() || a2.is_null() || join(&a1, &a2).unwrap().is_null() || bilinear(a1.coords(), a2.coords()).is_zero() {
                continue;
            }
            let (o1, o2) = opposite_points(&a1, &a2).unwrap();
            let cr = cross_ratio(&a1, &o2, &a2, &o1).map_err(|e| format!("{a1}, {a2}: {e}"))?;
            let qv = quadrance(&a1, &a2).into_value().unwrap();
            expect!(cr == qv, "q({a1}, {a2}) = {qv}, cross ratio {cr}");
            sides += 1;
        }
        Ok(format!("{diagonals} diagonal points over F7, 10⁴ random pairs and sides over Q"))
    })();
    report(6, "oracle equivalences", t, r);
}

#[test]
fn criterion_7_determinism() {
    let _serial = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let r = (|| {
        for (field, seed) in [("Q", 42), ("Fp=13", 7), ("Q[sqrt=2]", 3)] {
            let once = run_all(&spec(field), Strategy::random(20, 8, seed)).map_err(|e| e.to_string())?;
            let again = run_all(&spec(field), Strategy::random(20, 8, seed)).map_err(|e| e.to_string())?;
            let (a, b) = (serde_json::to_string(&once).unwrap(), serde_json::to_string(&again).unwrap());
            expect!(a == b, "reports over {field} differ between runs");
        }
        Ok("run_all over Q, F13 and Q(√2) twice per seed".into())
    })();
    report(7, "determinism", t, r);
}
