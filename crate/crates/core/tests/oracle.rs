//! Structure constants recomputed with explicit index loops over Sweedler
//! sums and compared with the library's constructions.

use biprod_core::biproduct::{bosonize, build_biproduct, smash_coproduct, smash_product};
use biprod_core::catalog;
use biprod_core::structures::{solve_antipode, BialgebraData};
use biprod_core::ydcat::BraidedHopfData;
use biprod_core::{FieldSpec, LinMap, Scalar};

fn fields() -> Vec<FieldSpec> {
    vec![
        FieldSpec::Rationals,
        FieldSpec::prime(3).unwrap(),
        FieldSpec::prime(7).unwrap(),
    ]
}

/// Dense table `t[out][in]` of a map.
fn table(m: &LinMap) -> Vec<Vec<Scalar>> {
    (0..m.rows())
        .map(|r| (0..m.cols()).map(|c| m.get(r, c).clone()).collect())
        .collect()
}

struct Consts {
    nb: usize,
    nh: usize,
    mb: Vec<Vec<Scalar>>,
    db: Vec<Vec<Scalar>>,
    eb: Vec<Vec<Scalar>>,
    sb: Vec<Vec<Scalar>>,
    mh: Vec<Vec<Scalar>>,
    dh: Vec<Vec<Scalar>>,
    eh: Vec<Vec<Scalar>>,
    sh: Vec<Vec<Scalar>>,
    act: Vec<Vec<Scalar>>,
    coact: Vec<Vec<Scalar>>,
    zero: Scalar,
}

impl Consts {
    fn new(d: &BraidedHopfData) -> Self {
        Consts {
            nb: d.b().dim(),
            nh: d.h().dim(),
            mb: table(d.b().mult()),
            db: table(d.b().comult()),
            eb: table(d.b().counit()),
            sb: table(d.b_antipode().unwrap()),
            mh: table(d.h().mult()),
            dh: table(d.h().comult()),
            eh: table(d.h().counit()),
            sh: table(d.h_antipode().unwrap()),
            act: table(d.action()),
            coact: table(d.coaction()),
            zero: Scalar::zero(d.field()),
        }
    }

    fn bh(&self, b: usize, h: usize) -> usize {
        b * self.nh + h
    }
}

fn add(slot: &mut Scalar, v: Scalar) {
    *slot = &*slot + &v;
}

/// `(a⋆g)(b⋆h) = Σ a(g₁·b) ⋆ g₂h`.
fn oracle_product(c: &Consts) -> Vec<Vec<Scalar>> {
    let n = c.nb * c.nh;
    let mut out = vec![vec![c.zero.clone(); n * n]; n];
    for a in 0..c.nb {
        for g in 0..c.nh {
            for b in 0..c.nb {
                for h in 0..c.nh {
                    let col = c.bh(a, g) * n + c.bh(b, h);
                    for g1 in 0..c.nh {
                        for g2 in 0..c.nh {
                            let cg = &c.dh[g1 * c.nh + g2][g];
                            if cg.is_zero() {
                                continue;
                            }
                            for b2 in 0..c.nb {
                                let ca = cg * &c.act[b2][g1 * c.nb + b];
                                if ca.is_zero() {
                                    continue;
                                }
                                for x in 0..c.nb {
                                    for k in 0..c.nh {
                                        let v = &(&ca * &c.mb[x][a * c.nb + b2])
                                            * &c.mh[k][g2 * c.nh + h];
                                        add(&mut out[c.bh(x, k)][col], v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `Δ(b⋆h) = Σ b₁ ⋆ (b₂)₋₁h₁ ⊗ (b₂)₀ ⋆ h₂`.
fn oracle_coproduct(c: &Consts) -> Vec<Vec<Scalar>> {
    let n = c.nb * c.nh;
    let mut out = vec![vec![c.zero.clone(); n]; n * n];
    for b in 0..c.nb {
        for h in 0..c.nh {
            let col = c.bh(b, h);
            for b1 in 0..c.nb {
                for b2 in 0..c.nb {
                    let cb = &c.db[b1 * c.nb + b2][b];
                    if cb.is_zero() {
                        continue;
                    }
                    for h1 in 0..c.nh {
                        for h2 in 0..c.nh {
                            let ch = cb * &c.dh[h1 * c.nh + h2][h];
                            if ch.is_zero() {
                                continue;
                            }
                            for u in 0..c.nh {
                                for b0 in 0..c.nb {
                                    let cr = &ch * &c.coact[u * c.nb + b0][b2];
                                    if cr.is_zero() {
                                        continue;
                                    }
                                    for k in 0..c.nh {
                                        let v = &cr * &c.mh[k][u * c.nh + h1];
                                        let row = c.bh(b1, k) * n + c.bh(b0, h2);
                                        add(&mut out[row][col], v);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

/// `S(b⋆h) = Σ t₁·S_B(b₀) ⋆ t₂` with `t = S_H(b₋₁h)`, following the
/// diagram rather than the product form used by the library.
fn oracle_antipode(c: &Consts) -> Vec<Vec<Scalar>> {
    let n = c.nb * c.nh;
    let mut out = vec![vec![c.zero.clone(); n]; n];
    for b in 0..c.nb {
        for h in 0..c.nh {
            let col = c.bh(b, h);
            for u in 0..c.nh {
                for b0 in 0..c.nb {
                    let cr = &c.coact[u * c.nb + b0][b];
                    if cr.is_zero() {
                        continue;
                    }
                    for k in 0..c.nh {
                        let cm = cr * &c.mh[k][u * c.nh + h];
                        for t in 0..c.nh {
                            let cs = &cm * &c.sh[t][k];
                            if cs.is_zero() {
                                continue;
                            }
                            for sb in 0..c.nb {
                                let csb = &cs * &c.sb[sb][b0];
                                if csb.is_zero() {
                                    continue;
                                }
                                for t1 in 0..c.nh {
                                    for t2 in 0..c.nh {
                                        let cd = &csb * &c.dh[t1 * c.nh + t2][t];
                                        if cd.is_zero() {
                                            continue;
                                        }
                                        for x in 0..c.nb {
                                            let v = &cd * &c.act[x][t1 * c.nb + sb];
                                            add(&mut out[c.bh(x, t2)][col], v);
                                        }
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    out
}

fn assert_table(m: &LinMap, expected: &[Vec<Scalar>], what: &str) {
    assert_eq!(table(m), expected, "{what}");
}

#[test]
fn superline_biproduct_matches_index_loops() {
    for field in fields() {
        let d = catalog::superline(field).unwrap();
        let c = Consts::new(&d);
        let bp = build_biproduct(&d, false).unwrap();
        assert_table(bp.bialgebra().mult(), &oracle_product(&c), "product");
        assert_table(bp.bialgebra().comult(), &oracle_coproduct(&c), "coproduct");
        assert_table(bp.antipode().unwrap(), &oracle_antipode(&c), "antipode");
        let counit: Vec<Scalar> = (0..c.nb)
            .flat_map(|b| (0..c.nh).map(move |h| (b, h)))
            .map(|(b, h)| &c.eb[0][b] * &c.eh[0][h])
            .collect();
        assert_table(bp.bialgebra().counit(), &[counit], "counit");
    }
}

#[test]
fn trivial_braiding_gives_tensor_product() {
    let q = FieldSpec::Rationals;
    let b = catalog::cyclic_group_algebra(2, q, "B", "a").unwrap();
    let h = catalog::group_algebra(3, q).unwrap();
    let d = catalog::trivial_braiding(&b, &h).unwrap();
    let c = Consts::new(&d);
    let bp = build_biproduct(&d, false).unwrap();
    assert_table(bp.bialgebra().mult(), &oracle_product(&c), "product");
    assert_table(bp.bialgebra().comult(), &oracle_coproduct(&c), "coproduct");
    assert_table(bp.antipode().unwrap(), &oracle_antipode(&c), "antipode");
    // kℤ₂ ⊗ kℤ₃ ≅ kℤ₆: the product of grouplikes is their tensor.
    let m = bp.bialgebra().mult();
    for x in 0..6 {
        for y in 0..6 {
            let expected = ((x / 3 + y / 3) % 2) * 3 + (x % 3 + y % 3) % 3;
            assert!(m.get(expected, x * 6 + y).is_one());
        }
    }
}

/// `ρ(b) = Σ r'ᵢⱼ eᵢ ⊗ eⱼ·b` where `R⁻¹ = Σ r'ᵢⱼ eᵢ⊗eⱼ`.
#[test]
fn bosonized_coaction_matches_index_loops() {
    for field in [FieldSpec::Rationals, FieldSpec::prime(5).unwrap()] {
        let r = catalog::z2_rmatrix(field).unwrap();
        let m = catalog::superline_module(field).unwrap();
        let h = m.h.clone();
        let nh = h.dim();
        let nb = m.b.dim();
        let coeffs = r.coefficients();

        // R·R = 1⊗1, so R⁻¹ = R.
        let mh = table(h.mult());
        let mut square = vec![Scalar::zero(field); nh * nh];
        for (i, j, k, l) in quadruples(nh) {
            let c = &coeffs[i * nh + j] * &coeffs[k * nh + l];
            for p in 0..nh {
                for q in 0..nh {
                    let v = &(&c * &mh[p][i * nh + k]) * &mh[q][j * nh + l];
                    add(&mut square[p * nh + q], v);
                }
            }
        }
        let mut one_one = vec![Scalar::zero(field); nh * nh];
        one_one[0] = Scalar::one(field);
        assert_eq!(square, one_one);

        let act = table(&m.action);
        let mut rho = vec![vec![Scalar::zero(field); nb]; nh * nb];
        for b in 0..nb {
            for i in 0..nh {
                for j in 0..nh {
                    for x in 0..nb {
                        add(
                            &mut rho[i * nb + x][b],
                            &coeffs[i * nh + j] * &act[x][j * nb + b],
                        );
                    }
                }
            }
        }
        let d = m.with_rmatrix(&r, false).unwrap();
        assert_table(d.coaction(), &rho, "coaction");
        // ρ(x) = g⊗x, ρ(1) = 1⊗1
        assert_eq!(d.coaction(), catalog::superline(field).unwrap().coaction());
    }
}

fn quadruples(n: usize) -> impl Iterator<Item = (usize, usize, usize, usize)> {
    (0..n).flat_map(move |i| {
        (0..n).flat_map(move |j| (0..n).flat_map(move |k| (0..n).map(move |l| (i, j, k, l))))
    })
}

#[test]
fn bosonization_agrees_with_biproduct() {
    let q = FieldSpec::Rationals;
    let via_r = bosonize(
        &catalog::superline_module(q).unwrap(),
        &catalog::z2_rmatrix(q).unwrap(),
        false,
    )
    .unwrap();
    let direct = build_biproduct(&catalog::superline(q).unwrap(), false).unwrap();
    assert_eq!(via_r.bialgebra(), direct.bialgebra());
    assert_eq!(via_r.antipode(), direct.antipode());
}

/// `h₁b₋₁ ⊗ h₂·b₀ = (h₁·b)₋₁h₂ ⊗ (h₁·b)₀` entry by entry.
#[test]
fn superline_yetter_drinfeld_by_brute_force() {
    let d = catalog::superline(FieldSpec::Rationals).unwrap();
    let c = Consts::new(&d);
    let (nb, nh) = (c.nb, c.nh);
    for h in 0..nh {
        for b in 0..nb {
            let mut lhs = vec![c.zero.clone(); nh * nb];
            let mut rhs = vec![c.zero.clone(); nh * nb];
            for h1 in 0..nh {
                for h2 in 0..nh {
                    let ch = &c.dh[h1 * nh + h2][h];
                    if ch.is_zero() {
                        continue;
                    }
                    for u in 0..nh {
                        for b0 in 0..nb {
                            let cr = ch * &c.coact[u * nb + b0][b];
                            for k in 0..nh {
                                for x in 0..nb {
                                    let v =
                                        &(&cr * &c.mh[k][h1 * nh + u]) * &c.act[x][h2 * nb + b0];
                                    add(&mut lhs[k * nb + x], v);
                                }
                            }
                        }
                    }
                    for y in 0..nb {
                        let ca = ch * &c.act[y][h1 * nb + b];
                        for u in 0..nh {
                            for x in 0..nb {
                                let cr = &ca * &c.coact[u * nb + x][y];
                                for k in 0..nh {
                                    add(&mut rhs[k * nb + x], &cr * &c.mh[k][u * nh + h2]);
                                }
                            }
                        }
                    }
                }
            }
            assert_eq!(lhs, rhs, "h = {h}, b = {b}");
        }
    }
}

#[test]
fn superline_biproduct_shape() {
    let q = FieldSpec::Rationals;
    let bp = build_biproduct(&catalog::superline(q).unwrap(), false).unwrap();
    assert_eq!(bp.dim(), 4);
    let space = bp.space().clone();
    let idx = |l: &str| (0..4).find(|&i| space.label(i) == l).unwrap();
    let m = bp.bialgebra().mult();
    let (g, x, xg) = (idx("1⋆g"), idx("x⋆1"), idx("x⋆g"));
    // (1⋆g)(x⋆1) = −x⋆g, (x⋆1)(1⋆g) = x⋆g
    assert_eq!(m.get(xg, g * 4 + x), &Scalar::from_i64(q, -1));
    assert!(m.get(xg, x * 4 + g).is_one());
    let d = bp.bialgebra().comult();
    let flip = LinMap::flip(q, &space, &space);
    assert_ne!(&flip.compose(d).unwrap(), d, "noncocommutative");

    let s = bp.antipode().unwrap();
    let id = LinMap::identity(q, &space);
    assert_eq!(s.power(4).unwrap(), id);
    assert_ne!(s.power(2).unwrap(), id);
}

#[test]
fn solved_antipodes_match_declared_ones() {
    for field in fields() {
        let sweedler = catalog::sweedler(field).unwrap();
        assert_eq!(
            &solve_antipode(sweedler.bialgebra()).unwrap(),
            sweedler.antipode()
        );
        let bp = build_biproduct(&catalog::superline(field).unwrap(), false).unwrap();
        assert_eq!(
            &solve_antipode(bp.bialgebra()).unwrap(),
            bp.antipode().unwrap()
        );
        for n in 1..5 {
            let h = catalog::group_algebra(n, field).unwrap();
            assert_eq!(&solve_antipode(h.bialgebra()).unwrap(), h.antipode());
        }
    }
}

/// An ε-preserving algebra map `B⋆H → H4` sending `x⋆1 ↦ x`, `1⋆g ↦ g`.
#[test]
fn superline_biproduct_is_sweedler() {
    let q = FieldSpec::Rationals;
    let bp = build_biproduct(&catalog::superline(q).unwrap(), false).unwrap();
    let h4 = catalog::sweedler(q).unwrap();
    // B⋆H basis 1⋆1, 1⋆g, x⋆1, x⋆g; Sweedler basis 1, g, x, gx.
    // x⋆g = (x⋆1)(1⋆g) ↦ xg = −gx.
    let entries = [(0, 0, 1), (1, 1, 1), (2, 2, 1), (3, 3, -1)];
    let phi = LinMap::from_entries(
        q,
        bp.space().clone(),
        h4.space().clone(),
        entries
            .iter()
            .map(|&(r, c, v)| (r, c, Scalar::from_i64(q, v))),
    )
    .unwrap();
    let mult_then_phi = phi.compose(bp.bialgebra().mult()).unwrap();
    let phi_then_mult = h4
        .bialgebra()
        .mult()
        .compose(&phi.tensor(&phi).unwrap())
        .unwrap();
    assert_eq!(mult_then_phi.entries(), phi_then_mult.entries());
    let d1 = phi
        .tensor(&phi)
        .unwrap()
        .compose(bp.bialgebra().comult())
        .unwrap();
    let d2 = h4.bialgebra().comult().compose(&phi).unwrap();
    assert_eq!(d1.entries(), d2.entries());
    let s1 = phi.compose(bp.antipode().unwrap()).unwrap();
    let s2 = h4.antipode().compose(&phi).unwrap();
    assert_eq!(s1.entries(), s2.entries());
}

/// Only the comodule and comodule-coalgebra laws
/// hold, and the smash coproduct is still a coalgebra.
#[test]
fn smash_coproduct_needs_only_comodule_coalgebra() {
    let q = FieldSpec::Rationals;
    let d = catalog::superline(q).unwrap();
    let zero_action = LinMap::zero(q, d.action().dom().clone(), d.action().cod().clone());
    let b = d.b();
    // x·x = x: still associative, but no longer compatible with Δ_B.
    let mult = b.mult().with_entry(1, 3, Scalar::one(q)).unwrap();
    let broken = d
        .with_action(zero_action)
        .unwrap()
        .with_b(
            b.with_maps(
                mult,
                b.unit().clone(),
                b.comult().clone(),
                b.counit().clone(),
            )
            .unwrap(),
            None,
        )
        .unwrap();
    let hyp = biprod_core::ydcat::check_theorem_hypotheses(&broken).unwrap();
    assert!(hyp.has_family_failure("MOD"));
    assert!(hyp.has_family_failure("COND1"));
    assert!(!hyp.has_family_failure("COMOD"));
    assert!(!hyp.has_family_failure("EQ5"));
    let c = smash_coproduct(&broken, false).unwrap();
    assert!(biprod_core::structures::check_coalgebra(&c).unwrap().ok);
    assert!(smash_product(&broken, false).is_err());
}

#[test]
fn group_algebra_bialgebra_by_brute_force() {
    let f5 = FieldSpec::prime(5).unwrap();
    let h: BialgebraData = catalog::group_algebra(4, f5).unwrap().bialgebra().clone();
    let m = table(h.mult());
    let d = table(h.comult());
    for i in 0..4 {
        for j in 0..4 {
            let k = (i + j) % 4;
            assert!(m[k][i * 4 + j].is_one());
            assert!(d[k * 4 + k][k].is_one());
        }
    }
}
