//! The full report bundle: verification, rank/nilpotency structure, point
//! configurations, stabilizer orders within the builtin candidates,
//! derivation checks and seeded random spot-checks. Output is deterministic
//! for a fixed input and seed.

use std::fmt::Write as _;

use mmdec::catalog::{self, AnyDecomposition};
use mmdec::invariants::invariant_dimension;
use mmdec::sampling;
use mmdec::scalar::Field;
use mmdec::symmetry::{
    lie_derivative_tensor, stabilizer_within, term_orbits, FactorSpace, SymmetryElement,
};
use mmdec::tensor::{Decomposition, Mat};

use crate::io::JsonScalar;

pub fn run_report(source: &str, dec: &AnyDecomposition, seed: u64) -> (String, bool) {
    match dec {
        AnyDecomposition::Rational(d) => report_for(source, d, seed),
        AnyDecomposition::Cyclotomic(d) => report_for(source, d, seed),
    }
}

fn report_for<K: JsonScalar>(source: &str, dec: &Decomposition<K>, seed: u64) -> (String, bool) {
    let mut out = String::new();
    let report = dec.verify_equals_matmul();
    writeln!(out, "mmdec report (seed {seed})").unwrap();
    writeln!(out, "source: {source}").unwrap();
    writeln!(out, "n: {}", dec.n()).unwrap();
    writeln!(out, "field: {}", dec.field_kind()).unwrap();
    writeln!(
        out,
        "{} terms, equals M<{}>: {}",
        report.term_count,
        dec.n(),
        if report.ok { "yes" } else { "no" }
    )
    .unwrap();
    if let Some(m) = &report.mismatch {
        writeln!(
            out,
            "first mismatch at (({},{}),({},{}),({},{})): found {}, expected {}",
            m.index[0].0,
            m.index[0].1,
            m.index[1].0,
            m.index[1].1,
            m.index[2].0,
            m.index[2].1,
            m.found,
            m.expected
        )
        .unwrap();
    }

    let partition = dec.rank_triple_partition();
    writeln!(out, "rank-triple partition:").unwrap();
    for (triple, members) in &partition.classes {
        writeln!(
            out,
            "  ({},{},{}): terms {:?}",
            triple[0], triple[1], triple[2], members
        )
        .unwrap();
    }
    let mut nilpotent_lines = Vec::new();
    for (i, flags) in partition.nilpotent.iter().enumerate() {
        if flags.iter().any(|&f| f) {
            let slots: Vec<&str> = ["A", "B", "C"]
                .iter()
                .zip(flags)
                .filter(|(_, &f)| f)
                .map(|(s, _)| *s)
                .collect();
            nilpotent_lines.push(format!("  term {i}: {}", slots.join(",")));
        }
    }
    if nilpotent_lines.is_empty() {
        writeln!(out, "nilpotent factors: none").unwrap();
    } else {
        writeln!(out, "nilpotent factors:").unwrap();
        for line in nilpotent_lines {
            writeln!(out, "{line}").unwrap();
        }
    }

    let config = dec.point_configuration();
    writeln!(out, "point configuration (rank-(1,1,1) terms):").unwrap();
    write_points(&mut out, "U", &config.u);
    write_points(&mut out, "U*", &config.u_star);
    write_points(&mut out, "V", &config.v);
    write_points(&mut out, "V*", &config.v_star);
    write_points(&mut out, "W", &config.w);
    write_points(&mut out, "W*", &config.w_star);

    if dec.n() == 2 {
        writeln!(out, "stabilizer orders within builtin candidates:").unwrap();
        for name in catalog::GROUP_NAMES {
            let group = catalog::builtin_group::<K>(name, None)
                .expect("builtin names are valid");
            match stabilizer_within(dec, &group) {
                Ok(stab) => {
                    writeln!(out, "  {name} (order {}): {}", group.order(), stab.order())
                        .unwrap()
                }
                Err(e) => writeln!(out, "  {name}: error: {e}").unwrap(),
            }
        }

        let z3 = catalog::builtin_group::<K>("standard-z3", None).expect("builtin");
        match term_orbits(&z3, dec) {
            Ok(orbits) => {
                let fixed = orbits.iter().filter(|o| o.len() == 1).count();
                let moved = orbits.iter().filter(|o| o.len() > 1).count();
                let sizes: Vec<usize> =
                    orbits.iter().filter(|o| o.len() > 1).map(Vec::len).collect();
                writeln!(
                    out,
                    "standard-z3 orbits: {fixed} fixed + {moved} orbits of sizes {sizes:?}"
                )
                .unwrap();
            }
            Err(_) => {
                writeln!(out, "standard-z3 orbits: not stabilized").unwrap();
            }
        }

        writeln!(
            out,
            "invariant dimension of the s3xd3 candidate: {}",
            invariant_dimension(&catalog::builtin_group::<K>("s3xd3", None).expect("builtin"))
                .expect("candidate group linearizes")
        )
        .unwrap();
    } else {
        writeln!(out, "stabilizer candidates: builtin groups cover n = 2 only").unwrap();
    }

    let expansion = dec.expand();
    let sl2: [Mat<K>; 3] = [
        Mat::from_int_rows(&[vec![0, 1], vec![0, 0]]).expect("2x2 literal"),
        Mat::from_int_rows(&[vec![0, 0], vec![1, 0]]).expect("2x2 literal"),
        Mat::from_int_rows(&[vec![1, 0], vec![0, -1]]).expect("2x2 literal"),
    ];
    let mut zero_count = 0;
    let mut total = 0;
    if dec.n() == 2 {
        for x in &sl2 {
            for space in FactorSpace::all() {
                total += 1;
                if lie_derivative_tensor(x, space, &expansion)
                    .expect("matching dimension")
                    .is_zero()
                {
                    zero_count += 1;
                }
            }
        }
        writeln!(
            out,
            "lie derivative checks (sl2 x factors): {zero_count}/{total} zero"
        )
        .unwrap();
    }

    let mut rng = sampling::rng_from_seed(seed);
    let mut verified = 0;
    let trials = 5;
    for _ in 0..trials {
        let g: SymmetryElement<K> = sampling::random_symmetry_element(&mut rng, dec.n());
        if g.apply_decomposition(dec).verify_equals_matmul().ok == report.ok {
            verified += 1;
        }
    }
    writeln!(
        out,
        "random symmetry spot-checks: {verified}/{trials} images agree with the original verdict"
    )
    .unwrap();

    if K::KIND == mmdec::scalar::FieldKind::Cyclotomic12 && source == "strassen-omega" {
        writeln!(out, "omega convention: exp(-2*pi*i/3) (the verifying sign)").unwrap();
    }

    (out, report.ok)
}

fn write_points<K: Field>(out: &mut String, line: &str, points: &[Vec<K>]) {
    let rendered: Vec<String> = points
        .iter()
        .map(|p| {
            let coords: Vec<String> = p.iter().map(|c| c.to_string()).collect();
            format!("[{}]", coords.join(", "))
        })
        .collect();
    writeln!(out, "  {line}: {} points: {}", points.len(), rendered.join(" ")).unwrap();
}

/// The per-pair derivation table used by the lie-check command.
pub fn lie_check(dec: &AnyDecomposition) -> (String, bool) {
    match dec {
        AnyDecomposition::Rational(d) => lie_check_for(d),
        AnyDecomposition::Cyclotomic(d) => lie_check_for(d),
    }
}

fn lie_check_for<K: Field>(dec: &Decomposition<K>) -> (String, bool) {
    let mut out = String::new();
    let expansion = dec.expand();
    let n = dec.n();
    let mut all_zero = true;
    writeln!(out, "derivation checks on the expansion (n = {n}):").unwrap();
    let mut basis: Vec<(String, Mat<K>)> = Vec::new();
    for r in 0..n {
        for c in 0..n {
            if r != c {
                basis.push((format!("E{}{}", r + 1, c + 1), Mat::unit(n, r, c)));
            }
        }
    }
    let mut diag = Mat::zero(n);
    diag.set(0, 0, K::one());
    if n > 1 {
        diag.set(1, 1, -K::one());
        basis.push(("H".to_string(), diag));
    }
    for (name, x) in &basis {
        for space in FactorSpace::all() {
            let derived = lie_derivative_tensor(x, space, &expansion).expect("dimensions match");
            let zero = derived.is_zero();
            all_zero &= zero;
            writeln!(
                out,
                "  {name} on {}: {}",
                space.name(),
                if zero { "zero" } else { "nonzero" }
            )
            .unwrap();
        }
    }
    writeln!(out, "all derivations zero: {}", if all_zero { "yes" } else { "no" }).unwrap();
    (out, all_zero)
}
