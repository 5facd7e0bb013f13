//! Acceptance suite: one PASS/FAIL line per criterion, all checks exact.
//! Run with `cargo test --test acceptance`.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num::{One, Zero};
use qlie::algebra::{check_i_isomorphism, LinearMap, QuadraticLieAlgebra};
use qlie::catalog::{self, hyperbolic_gram, standard_names, CatalogName};
use qlie::classify::{classify, same_class, ClassLabel, Family};
use qlie::constructions::{cotangent_extension, double_extension};
use qlie::derivations::{inner_derivation_basis, inner_derivation_space, inner_witness, skew_derivation_basis, skew_derivation_space, SkewDerivation};
use qlie::format::{parse_file, write_file};
use qlie::fuzz::{random_isometry, Fuzzer};
use qlie::matrix::{sub_vec, unit_vector, Matrix};
use qlie::subspace::Subspace;
use qlie::witt::witt_extend;
use qlie::Scalar;

use common::*;

type Check = fn() -> Result<(), String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn catalog_validity() -> Result<(), String> {
    for name in standard_names() {
        let g = catalog::make(&name).map_err(|e| e.to_string())?;
        let report = g.validate();
        ensure(report.passed(), || format!("{name}: {report}"))?;
    }
    Ok(())
}

fn diamond_derivations() -> Result<(), String> {
    let g = catalog::diamond().unwrap();
    let skew = skew_derivation_basis(&g).unwrap().len();
    let inner = inner_derivation_basis(&g).unwrap().len();
    ensure(skew == 3 && inner == 3, || format!("dims skew {skew}, inner {inner}"))?;
    ensure(skew_derivation_space(&g).unwrap() == inner_derivation_space(&g).unwrap(), || "spaces differ".into())?;
    let center = Subspace::from_vectors(4, &[unit_vector(4, 3)]).unwrap();
    let mut fz = Fuzzer::new(2);
    for _ in 0..10 {
        let (a, y, z) = (fz.small_rational(), fz.small_rational(), fz.small_rational());
        let d = SkewDerivation::new(&g, diamond_derivation(&a, &y, &z)).map_err(|e| e.to_string())?;
        let v = inner_witness(&g, &d).map_err(|e| e.to_string())?;
        let expected = vec![a.clone(), -&y, z.clone(), Scalar::zero()];
        ensure(center.contains(&sub_vec(&v, &expected)), || format!("witness {v:?} for ({a}, {y}, {z})"))?;
    }
    Ok(())
}

fn extension_of_diamond_not_reduced() -> Result<(), String> {
    let g = catalog::diamond().unwrap();
    let mut fz = Fuzzer::new(3);
    for round in 0..25 {
        let (a, y, z) = (fz.small_rational(), fz.small_rational(), fz.small_rational());
        let d = LinearMap::new(diamond_derivation(&a, &y, &z));
        let h = double_extension(&g, &d).map_err(|e| e.to_string())?;
        ensure(h.validate().passed(), || format!("round {round}: extension invalid"))?;
        ensure(!h.is_reduced().unwrap(), || format!("round {round}: extension is reduced"))?;
        // basis X, P, Q, Z, e, f
        let u = vec![a.clone(), -&y, z.clone(), Scalar::zero(), -Scalar::one(), Scalar::zero()];
        ensure(h.center().contains(&u), || format!("round {round}: u not central"))?;
        ensure(h.form(&u, &unit_vector(6, 5)) == -Scalar::one(), || format!("round {round}: B(u, f) != -1"))?;
    }
    Ok(())
}

fn derived_ideal_bound() -> Result<(), String> {
    let mut corpus: Vec<QuadraticLieAlgebra> = standard_names().iter().map(|n| catalog::make(n).unwrap()).collect();
    let mut fz = Fuzzer::new(4);
    for _ in 0..50 {
        let n = fz.int_in(2, 4) as usize;
        let q = catalog::make(&CatalogName::Abelian(n)).unwrap();
        let c = loop {
            let c = fz.gram_skew(q.gram()).unwrap();
            if !c.is_zero() {
                break c;
            }
        };
        corpus.push(double_extension(&q, &LinearMap::new(c)).map_err(|e| e.to_string())?);
    }
    for (idx, g) in corpus.iter().enumerate() {
        if !g.is_abelian() {
            let d = g.derived_ideal().dim();
            ensure(d >= 3, || format!("member {idx}: derived ideal of dim {d}"))?;
        }
    }
    Ok(())
}

fn witt_decompositions() -> Result<(), String> {
    let mut fz = Fuzzer::new(5);
    for round in 0..100 {
        let n = fz.int_in(2, 8) as usize;
        let k = fz.int_in(1, (n / 2) as i64) as usize;
        let (gram, vectors) = random_isotropic_pair(&mut fz, n, k);
        let u = Subspace::from_vectors(n, &vectors).unwrap();
        let w = witt_extend(&gram, &u).map_err(|e| format!("round {round}: {e}"))?;
        ensure(w.u.mul(&gram).mul(&w.w.transpose()) == Matrix::identity(k), || format!("round {round}: pairing"))?;
        ensure(w.w.mul(&gram).mul(&w.w.transpose()).is_zero(), || format!("round {round}: W not isotropic"))?;
        let fb = w.f.basis();
        ensure(w.f.dim() == n - 2 * k, || format!("round {round}: dim F = {}", w.f.dim()))?;
        ensure(!fb.mul(&gram).mul(&fb.transpose()).determinant().is_zero(), || format!("round {round}: F degenerate"))?;
        ensure(fb.mul(&gram).mul(&w.u.transpose()).is_zero(), || format!("round {round}: F not orthogonal to U"))?;
    }
    Ok(())
}

fn hyperbolic_plane_extension() -> Result<(), String> {
    let q = QuadraticLieAlgebra::abelian(hyperbolic_gram(1)).unwrap();
    let g = double_extension(&q, &LinearMap::new(Matrix::from_ints(2, 2, &[1, 0, 0, -1]))).unwrap();
    let labels = classify(&g).map_err(|e| e.to_string())?;
    ensure(labels == vec![ClassLabel::plain(Family::Diamond)], || format!("{labels:?}"))?;
    // p, q, e, f -> P, Q, X, Z
    let a = LinearMap::from_images(4, &[unit_vector(4, 1), unit_vector(4, 2), unit_vector(4, 0), unit_vector(4, 3)]).unwrap();
    ensure(check_i_isomorphism(&a, &g, &catalog::diamond().unwrap()).unwrap(), || "map is not an i-isomorphism".into())
}

fn six_dimensional_families() -> Result<(), String> {
    let q = QuadraticLieAlgebra::abelian(hyperbolic_gram(2)).unwrap();
    let label_of = |m: Matrix| -> Result<Vec<ClassLabel>, String> {
        let g = double_extension(&q, &LinearMap::new(m)).map_err(|e| e.to_string())?;
        classify(&g).map_err(|e| e.to_string())
    };
    let nil = label_of(catalog::nilpotent_case_matrix())?;
    ensure(nil == vec![ClassLabel::plain(Family::G6Nilpotent)], || format!("nilpotent: {nil:?}"))?;
    let jordan = label_of(catalog::invertible_case_matrix())?;
    ensure(jordan == vec![ClassLabel::plain(Family::G6Jordan)], || format!("invertible: {jordan:?}"))?;
    for l in ["2", "3", "1/2", "-2", "i", "1+i"] {
        let lambda = s(l);
        let got = label_of(catalog::diagonalizable_case_matrix(&lambda))?;
        let sq = &lambda * &lambda;
        let one_plus = &Scalar::one() + &sq;
        let kappa = (&one_plus * &one_plus).checked_div(&sq).unwrap();
        ensure(got.len() == 1 && got[0].family == Family::G6Diagonalizable, || format!("λ = {l}: {got:?}"))?;
        ensure(got[0].kappa.as_ref() == Some(&kappa), || format!("λ = {l}: kappa {:?}", got[0].kappa))?;
    }
    let two = label_of(catalog::diagonalizable_case_matrix(&s("2")))?;
    ensure(two[0].kappa.as_ref().map(Scalar::to_string).as_deref() == Some("25/4"), || "kappa(2) != 25/4".into())
}

fn lambda_equivalence() -> Result<(), String> {
    let label = |l: &str| ClassLabel::for_lambda(&s(l)).unwrap();
    ensure(same_class(&label("2"), &label("1/2")), || "2 ~ 1/2".into())?;
    ensure(same_class(&label("2"), &label("-2")), || "2 ~ -2".into())?;
    ensure(!same_class(&label("2"), &label("3")), || "2 !~ 3".into())?;
    // Z1 <-> Z2, X1 <-> X2, Z3 -> Z3/2, X3 -> 2 X3
    let mut m = Matrix::zeros(6, 6);
    m[(1, 0)] = Scalar::one();
    m[(0, 1)] = Scalar::one();
    m[(2, 2)] = s("1/2");
    m[(4, 3)] = Scalar::one();
    m[(3, 4)] = Scalar::one();
    m[(5, 5)] = s("2");
    let g = catalog::g6_2(&s("2")).unwrap();
    let h = catalog::g6_2(&s("1/2")).unwrap();
    ensure(check_i_isomorphism(&LinearMap::new(m), &g, &h).unwrap(), || "explicit map fails".into())
}

fn classification_stability() -> Result<(), String> {
    for name in standard_names() {
        let g = catalog::make(&name).unwrap();
        let expected = classify(&g).map_err(|e| format!("{name}: {e}"))?;
        for seed in 0..20 {
            let a = random_isometry(&g, seed).map_err(|e| e.to_string())?;
            let got = classify(&g.transport(&a).unwrap()).map_err(|e| format!("{name}, seed {seed}: {e}"))?;
            ensure(got == expected, || format!("{name}, seed {seed}: {got:?} vs {expected:?}"))?;
        }
    }
    Ok(())
}

fn small_dimension_oracle() -> Result<(), String> {
    let q = catalog::make(&CatalogName::Abelian(3)).unwrap();
    let mut fz = Fuzzer::new(10);
    for round in 0..20 {
        let c = if round % 2 == 0 { nilpotent_skew3(&mut fz) } else { real_skew(&mut fz, 3) };
        // eigenstructure from powers: C³ = t·C for a skew 3×3 map
        let c3 = c.mul(&c).mul(&c);
        let nilpotent = c3.is_zero() && c.rank() == 2;
        let semisimple = !c.is_zero() && (0..3).flat_map(|r| (0..3).map(move |k| (r, k))).any(|(r, k)| !c[(r, k)].is_zero() && {
            let t = c3[(r, k)].checked_div(&c[(r, k)]).unwrap();
            !t.is_zero() && c3 == c.scale(&t)
        });
        ensure(nilpotent != semisimple, || format!("round {round}: oracle undecided"))?;
        let g = double_extension(&q, &LinearMap::new(c)).map_err(|e| e.to_string())?;
        let got = classify(&g).map_err(|e| format!("round {round}: {e}"))?;
        let expected = if nilpotent {
            vec![ClassLabel::plain(Family::G5)]
        } else {
            vec![ClassLabel::plain(Family::A1), ClassLabel::plain(Family::Diamond)]
        };
        ensure(got == expected, || format!("round {round}: {got:?}"))?;
    }
    // dimension at most 3: only abelian algebras, under any change of basis
    for round in 0..20 {
        let n = fz.int_in(1, 3) as usize;
        let (gram, _) = random_gram(&mut fz, n);
        let g = QuadraticLieAlgebra::abelian(gram).unwrap();
        let got = classify(&g).map_err(|e| format!("abelian round {round}: {e}"))?;
        ensure(got == vec![ClassLabel::plain(Family::A1); n], || format!("abelian round {round}: {got:?}"))?;
    }
    let line = catalog::make(&CatalogName::Abelian(1)).unwrap();
    let g = double_extension(&line, &LinearMap::new(Matrix::zeros(1, 1))).unwrap();
    let got = classify(&g).map_err(|e| e.to_string())?;
    ensure(got == vec![ClassLabel::plain(Family::A1); 3], || format!("extension of a line: {got:?}"))
}

fn file_round_trip() -> Result<(), String> {
    let dir = fixtures_dir();
    let mut seen = 0;
    for entry in std::fs::read_dir(&dir).map_err(|e| e.to_string())? {
        let path = entry.map_err(|e| e.to_string())?.path();
        if path.extension().and_then(|e| e.to_str()) != Some("qla") {
            continue;
        }
        let bytes = std::fs::read(&path).unwrap();
        let g = parse_file(&bytes).map_err(|e| format!("{}: {e}", path.display()))?;
        ensure(write_file(&g) == bytes, || format!("{}: re-emission differs", path.display()))?;
        seen += 1;
    }
    let matches = [
        ("diamond.qla", CatalogName::Diamond),
        ("g5.qla", CatalogName::G5),
        ("g6_1.qla", CatalogName::G6Nilpotent),
        ("g6_2_lambda2.qla", CatalogName::G6Diagonalizable(s("2"))),
        ("g6_3.qla", CatalogName::G6Jordan),
        ("abelian3.qla", CatalogName::Abelian(3)),
    ];
    for (file, name) in &matches {
        let g = parse_file(&std::fs::read(dir.join(file)).unwrap()).unwrap();
        ensure(g == catalog::make(name).unwrap(), || format!("{file} differs from {name}"))?;
    }
    ensure(seen >= matches.len(), || format!("only {seen} fixtures found"))
}

fn cotangent_of_diamond() -> Result<(), String> {
    let d = catalog::diamond().unwrap();
    let g = cotangent_extension(d.lie()).map_err(|e| e.to_string())?;
    ensure(g.dim() == 8, || format!("dim {}", g.dim()))?;
    ensure(g.validate().passed(), || g.validate().to_string())?;
    ensure(g.is_solvable(), || "not solvable".into())?;
    // P = 1, P* = 5, X* = 4
    let v = g.bracket(&unit_vector(8, 1), &unit_vector(8, 5)).unwrap();
    ensure(v == unit_vector(8, 4), || format!("[P, P*] = {v:?}"))
}

fn main() {
    let criteria: [(&str, Check); 12] = [
        ("catalog algebras satisfy all five axioms", catalog_validity),
        ("diamond: skew and inner derivations coincide, dim 3, witnesses", diamond_derivations),
        ("double extensions of the diamond are not reduced", extension_of_diamond_not_reduced),
        ("non-abelian members have derived ideal of dim >= 3", derived_ideal_bound),
        ("Witt decompositions of 100 seeded isotropic subspaces", witt_decompositions),
        ("hyperbolic plane extension by diag(1,-1) is the diamond", hyperbolic_plane_extension),
        ("six-dimensional families and kappa", six_dimensional_families),
        ("lambda equivalence and explicit isomorphism", lambda_equivalence),
        ("classification invariant under 20 Cayley isometries", classification_stability),
        ("small-dimension eigenstructure oracle", small_dimension_oracle),
        ("fixture round trip and catalog match", file_round_trip),
        ("cotangent extension of the diamond", cotangent_of_diamond),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = match catch_unwind(AssertUnwindSafe(check)) {
            Ok(r) => r,
            Err(_) => Err("panicked".to_string()),
        };
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("criterion {:2}: PASS  {title} ({ms} ms)", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:2}: FAIL  {title} ({ms} ms): {why}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
