use biprod_core::catalog;
use biprod_core::exactla::{ArithOp, Factor};
use biprod_core::structures::solve_antipode;
use biprod_core::tangle::{self, TangleEnv, TangleExpr};
use biprod_core::ydcat::{self, STRUCTURE_MAPS};
use biprod_core::{FieldSpec, LinMap, Scalar, SpaceSig};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field_strategy() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Rationals),
        Just(FieldSpec::prime(2).unwrap()),
        Just(FieldSpec::prime(5).unwrap()),
        Just(FieldSpec::prime(2_147_483_647).unwrap()),
    ]
}

fn sig(name: &str, dim: usize) -> SpaceSig {
    SpaceSig::single(&Factor::with_dim(name, dim).unwrap())
}

fn random_map(rng: &mut ChaCha8Rng, field: FieldSpec, dom: &SpaceSig, cod: &SpaceSig) -> LinMap {
    LinMap::from_fn(field, dom.clone(), cod.clone(), |_, _| {
        Scalar::from_i64(field, rng.gen_range(-3..=3))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn interchange_law(field in field_strategy(), seed: u64, dims in prop::collection::vec(1usize..4, 6)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let s: Vec<SpaceSig> = dims.iter().enumerate().map(|(i, &d)| sig(&format!("V{i}"), d)).collect();
        let f1 = random_map(&mut rng, field, &s[0], &s[1]);
        let f2 = random_map(&mut rng, field, &s[1], &s[2]);
        let g1 = random_map(&mut rng, field, &s[3], &s[4]);
        let g2 = random_map(&mut rng, field, &s[4], &s[5]);
        let lhs = f2.tensor(&g2).unwrap().compose(&f1.tensor(&g1).unwrap()).unwrap();
        let rhs = f2.compose(&f1).unwrap().tensor(&g2.compose(&g1).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn flip_is_natural_and_involutive(field in field_strategy(), seed: u64, dims in prop::collection::vec(1usize..4, 4)) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (v, w, v2, w2) = (sig("V", dims[0]), sig("W", dims[1]), sig("X", dims[2]), sig("Y", dims[3]));
        let f = random_map(&mut rng, field, &v, &v2);
        let g = random_map(&mut rng, field, &w, &w2);
        let lhs = LinMap::flip(field, &v2, &w2).compose(&f.tensor(&g).unwrap()).unwrap();
        let rhs = g.tensor(&f).unwrap().compose(&LinMap::flip(field, &v, &w)).unwrap();
        prop_assert_eq!(lhs, rhs);
        let back = LinMap::flip(field, &w, &v).compose(&LinMap::flip(field, &v, &w)).unwrap();
        prop_assert_eq!(back, LinMap::identity(field, &v.concat(&w)));
    }

    #[test]
    fn local_application_matches_kronecker(field in field_strategy(), seed: u64, dims in prop::collection::vec(1usize..4, 5), at in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let wires: Vec<SpaceSig> = dims[..3].iter().enumerate().map(|(i, &d)| sig(&format!("W{i}"), d)).collect();
        let top = wires.iter().fold(SpaceSig::unit(), |acc, w| acc.concat(w));
        let src = sig("S", dims[3]);
        let start = random_map(&mut rng, field, &src, &top);
        let out = sig("O", dims[4]);
        let op = random_map(&mut rng, field, &wires[at], &out);
        let fast = start.then_local(at, &op).unwrap();
        let layer: Vec<LinMap> = (0..3)
            .map(|i| if i == at { op.clone() } else { LinMap::identity(field, &wires[i]) })
            .collect();
        let slow = LinMap::tensor_all(field, &layer).unwrap().compose(&start).unwrap();
        prop_assert_eq!(fast, slow);
    }
}

fn rational(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// `p/q` equals `n/d` by cross multiplication.
fn same_fraction(x: &BigRational, n: &BigInt, d: &BigInt) -> bool {
    x.numer() * d == n * x.denom()
}

fn residue(x: i64, p: u64) -> u64 {
    x.rem_euclid(p as i64) as u64
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn rational_arithmetic_agrees_with_cross_multiplication(
        a in -10_000i64..10_000, b in 1i64..10_000, c in -10_000i64..10_000, d in 1i64..10_000, op in 0usize..4
    ) {
        let q = FieldSpec::Rationals;
        let x = Scalar::from_rational(rational(a, b));
        let y = Scalar::from_rational(rational(c, d));
        let (a, b, c, d) = (BigInt::from(a), BigInt::from(b), BigInt::from(c), BigInt::from(d));
        let ops = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div];
        let (num, den) = match op {
            0 => (&a * &d + &c * &b, &b * &d),
            1 => (&a * &d - &c * &b, &b * &d),
            2 => (&a * &c, &b * &d),
            _ => (&a * &d, &b * &c),
        };
        let got = x.apply(ops[op], &y);
        if den == BigInt::from(0) {
            prop_assert!(got.is_err());
        } else {
            let got = got.unwrap();
            prop_assert_eq!(got.field(), q);
            prop_assert!(same_fraction(got.as_rational().unwrap(), &num, &den));
            prop_assert_eq!(Scalar::parse(q, &got.to_string()).unwrap(), got);
        }
    }

    #[test]
    fn prime_field_arithmetic_agrees_with_integers(
        pi in 0usize..4, a in -100_000i64..100_000, c in -100_000i64..100_000, op in 0usize..4
    ) {
        let p = [2u64, 3, 65_521, 2_147_483_647][pi];
        let field = FieldSpec::prime(p).unwrap();
        let x = Scalar::from_i64(field, a);
        let y = Scalar::from_i64(field, c);
        let (ra, rc) = (residue(a, p), residue(c, p));
        let ops = [ArithOp::Add, ArithOp::Sub, ArithOp::Mul, ArithOp::Div];
        let got = x.apply(ops[op], &y);
        let expected = match op {
            0 => Some((ra + rc) % p),
            1 => Some((ra + p - rc) % p),
            2 => Some((u128::from(ra) * u128::from(rc) % u128::from(p)) as u64),
            _ if rc == 0 => None,
            // q = a / c  ⇔  q·c ≡ a
            _ => Some(ra),
        };
        match (expected, got) {
            (None, got) => prop_assert!(got.is_err()),
            (Some(e), Ok(got)) if op == 3 => {
                let q = u128::from(got.as_residue().unwrap());
                prop_assert_eq!((q * u128::from(rc) % u128::from(p)) as u64, e);
            }
            (Some(e), Ok(got)) => prop_assert_eq!(u64::from(got.as_residue().unwrap()), e),
            (Some(_), Err(e)) => prop_assert!(false, "unexpected error {e}"),
        }
    }
}

/// Random trees over a single object `X` with generators `g{i}{j}: Xⁱ → Xʲ`.
fn env_with_generators(rng: &mut ChaCha8Rng, field: FieldSpec, dim: usize) -> TangleEnv {
    let mut env = TangleEnv::new(field);
    env.add_object("X", (0..dim).map(|i| format!("x{i}")).collect())
        .unwrap();
    env.add_object("Y", vec!["y".into()]).unwrap();
    let x = |n: usize| vec!["X".to_string(); n];
    for i in 0..3 {
        for j in 0..3 {
            let (dom, cod) = (env.sig(&x(i)).unwrap(), env.sig(&x(j)).unwrap());
            let m = random_map(rng, field, &dom, &cod);
            env.add_generator(&format!("g{i}{j}"), x(i), x(j), &m)
                .unwrap();
        }
    }
    env
}

/// A diagram from `inputs` wires of `X`; returns it with its output count.
fn random_diagram(rng: &mut ChaCha8Rng, inputs: usize, depth: usize) -> (TangleExpr, usize) {
    if depth == 0 || rng.gen_ratio(1, 4) {
        return random_layer(rng, inputs);
    }
    let steps = rng.gen_range(2..=3);
    let mut parts = Vec::new();
    let mut wires = inputs;
    for _ in 0..steps {
        let (e, out) = random_diagram(rng, wires, depth - 1);
        parts.push(e);
        wires = out;
    }
    (TangleExpr::Compose(parts), wires)
}

const MAX_WIRES: usize = 4;

/// Side-by-side pieces consuming exactly `inputs` wires.
fn random_layer(rng: &mut ChaCha8Rng, inputs: usize) -> (TangleExpr, usize) {
    let mut parts = Vec::new();
    let mut left = inputs;
    let mut out = 0;
    while left > 0 || parts.is_empty() {
        let lo = usize::from(parts.len() > 3 && left > 0);
        let take = rng.gen_range(lo.min(left)..=left.min(2));
        let room = MAX_WIRES - out;
        let piece = match (take, rng.gen_range(0..3)) {
            (1, 0) if room >= 1 => (TangleExpr::id("X"), 1),
            (2, 0) if room >= 2 => (TangleExpr::swap("X", "X"), 2),
            (t, _) => {
                let j = rng.gen_range(0..=room.min(2));
                (TangleExpr::Gen(format!("g{t}{j}")), j)
            }
        };
        left -= take;
        out += piece.1;
        parts.push(piece.0);
    }
    let e = if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        TangleExpr::Tensor(parts)
    };
    (e, out)
}

/// Direct structural recursion with dense Kronecker products.
fn dense_eval(e: &TangleExpr, env: &TangleEnv) -> LinMap {
    let field = env.field();
    let one = |x: &str| env.sig(&[x.to_string()]).unwrap();
    match e {
        TangleExpr::Gen(n) => env.generator(n).unwrap().map.clone(),
        TangleExpr::Id(x) => LinMap::identity(field, &one(x)),
        TangleExpr::Swap(a, b) => LinMap::flip(field, &one(a), &one(b)),
        TangleExpr::Tensor(xs) => LinMap::tensor_all(
            field,
            &xs.iter().map(|x| dense_eval(x, env)).collect::<Vec<_>>(),
        )
        .unwrap(),
        TangleExpr::Compose(xs) => {
            LinMap::chain(&xs.iter().map(|x| dense_eval(x, env)).collect::<Vec<_>>()).unwrap()
        }
    }
}

fn random_tree(rng: &mut ChaCha8Rng, depth: usize) -> TangleExpr {
    let names = ["m_H", "Δ_B", "α", "f", "_x1"];
    if depth == 0 || rng.gen_ratio(1, 3) {
        return match rng.gen_range(0..3) {
            0 => TangleExpr::gen(names[rng.gen_range(0..names.len())]),
            1 => TangleExpr::id(["B", "H"][rng.gen_range(0..2)]),
            _ => TangleExpr::swap("B", "H"),
        };
    }
    let children = (0..rng.gen_range(2..=3))
        .map(|_| random_tree(rng, depth - 1))
        .collect();
    if rng.gen_bool(0.5) {
        TangleExpr::Tensor(children)
    } else {
        TangleExpr::Compose(children)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn parse_inverts_print(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_tree(&mut rng, 4);
        prop_assert_eq!(tangle::parse(&e.to_string()).unwrap(), e);
    }

    #[test]
    fn eval_is_functorial(field in field_strategy(), seed: u64, inputs in 0usize..3) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let env = env_with_generators(&mut rng, field, 2);
        let (e, out) = random_diagram(&mut rng, inputs, 3);
        let (src, tgt) = tangle::typecheck(&e, &env).unwrap();
        prop_assert_eq!((src.len(), tgt.len()), (inputs, out));
        prop_assert_eq!(tangle::eval(&e, &env).unwrap(), dense_eval(&e, &env));
    }

    /// Changing any nonzero structure constant of the super line to any
    /// other value breaks at least one hypothesis.
    #[test]
    fn superline_mutants_are_rejected(pick in 0usize..1000, value in -4i64..=4) {
        let q = FieldSpec::Rationals;
        let d = catalog::superline(q).unwrap();
        let slots: Vec<(&str, usize, usize)> = STRUCTURE_MAPS
            .iter()
            .flat_map(|&name| d.map(name).unwrap().nonzeros().map(move |(r, c, _)| (name, r, c)).collect::<Vec<_>>())
            .collect();
        prop_assert_eq!(slots.len(), 27);
        let (name, r, c) = slots[pick % slots.len()];
        let original = d.map(name).unwrap().get(r, c).clone();
        let new = Scalar::from_i64(q, value);
        prop_assume!(new != original);
        let mutant = d.with_map(name, d.map(name).unwrap().with_entry(r, c, new).unwrap()).unwrap();
        prop_assert!(!ydcat::check_theorem_hypotheses(&mutant).unwrap().ok, "{name}[{r},{c}] survived");
    }
}

#[test]
fn corpus_holds_on_every_valid_catalog_environment() {
    let corpus = tangle::figure_corpus();
    for entry in catalog::entries().unwrap() {
        let d = match entry.payload {
            catalog::Payload::Braided(d) => d,
            catalog::Payload::Bosonization(m, r) => m.with_rmatrix(&r, false).unwrap(),
            _ => continue,
        };
        assert!(ydcat::check_theorem_hypotheses(&d).unwrap().ok);
        let env = TangleEnv::standard(&d).unwrap();
        let report = tangle::check_all(&corpus, &env).unwrap();
        assert!(report.ok, "{}: {}", entry.name, report);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn antipode_is_recovered_from_bialgebra(field in field_strategy(), n in 1usize..7) {
        let h = catalog::group_algebra(n, field).unwrap();
        prop_assert_eq!(&solve_antipode(h.bialgebra()).unwrap(), h.antipode());
        let bp = biprod_core::biproduct::build_biproduct(&catalog::trivial_bundle(&h).unwrap(), false).unwrap();
        prop_assert_eq!(&solve_antipode(bp.bialgebra()).unwrap(), bp.antipode().unwrap());
    }
}
