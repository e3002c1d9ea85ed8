//! Shared corpus for the integration suite: presented algebras with their
//! filtrations, commutative test modules, and small combinatorial helpers.

#![allow(dead_code)]

use ncfilt::commalg::{CPoly, MPoly};
use ncfilt::constructors::{skew_poly, tensor, u_lie, u_lie_algebroid, weyl, AlgebroidData, LieData};
use ncfilt::scalar::int;
use ncfilt::{Filtration, Generator, NCPoly, Presentation};

/// k[x] as a one-generator presentation with no relations, weight 1.
pub fn poly_line() -> (Presentation, Filtration) {
    let pres = Presentation::new(vec![Generator { name: "x".into(), degree: 1 }], vec![]);
    let filt = Filtration::new(vec![1]);
    (pres, filt)
}

/// U(sl2) with the standard generator filtration.
pub fn sl2_enveloping() -> (Presentation, Filtration) {
    u_lie(&LieData::sl2()).unwrap()
}

/// U(C; L) for C = k[x] and L = C·d with [d, x] = 1: the enveloping
/// algebroid of the tangent sheaf of the line.
pub fn tangent_algebroid() -> (Presentation, Filtration) {
    let base = Presentation::new(vec![Generator { name: "x".into(), degree: 0 }], vec![]);
    let mut data = LieData::new(vec!["d".into()]);
    data.algebroid = Some(AlgebroidData {
        base,
        anchor: vec![vec![NCPoly::one()]],
        bracket: vec![vec![vec![NCPoly::zero()]]],
        module_relations: vec![],
    });
    u_lie_algebroid(&data).unwrap()
}

/// A1 ⊗ A1 with the tensor filtration built from the given factor choice.
pub fn weyl_tensor_square(bernstein: bool) -> (Presentation, Filtration) {
    let (p, order, bern) = weyl(1);
    let f = if bernstein { bern } else { order };
    tensor(&p, &f, &p, &f).unwrap()
}

/// k[t] twisted by t -> -t: gens t, a with a·t = -t·a.
pub fn sign_twisted_line() -> (Presentation, Filtration) {
    let base = Presentation::new(vec![Generator { name: "t".into(), degree: 1 }], vec![]);
    let pres = skew_poly(&base, &[NCPoly::gen(0).neg()]).unwrap();
    let filt = Filtration::from_presentation(&pres);
    (pres, filt)
}

/// Every presented algebra the suite exercises, with a filtration for it.
pub fn corpus() -> Vec<(&'static str, Presentation, Filtration)> {
    let (a1, order1, bern1) = weyl(1);
    let (a2, order2, _) = weyl(2);
    let (sl2, sl2f) = sl2_enveloping();
    let (tang, tangf) = tangent_algebroid();
    let (tens, tensf) = weyl_tensor_square(true);
    let (line, linef) = poly_line();
    let (skew, skewf) = sign_twisted_line();
    vec![
        ("A1 order", a1.clone(), order1),
        ("A1 Bernstein", a1, bern1),
        ("A2 order", a2, order2),
        ("U(sl2)", sl2, sl2f),
        ("U(k[x]; T)", tang, tangf),
        ("A1 tensor A1", tens, tensf),
        ("k[x]", line, linef),
        ("sign-twisted k[t]", skew, skewf),
    ]
}

/// The algebras carrying a differential filtration of finite type, i.e. the
/// inputs on which the two-filtrations pipeline must succeed.
pub fn differential_corpus() -> Vec<(&'static str, Presentation, Filtration)> {
    let (a1, order1, _) = weyl(1);
    let (a2, order2, _) = weyl(2);
    let (sl2, sl2f) = sl2_enveloping();
    let (tang, tangf) = tangent_algebroid();
    let (tens, tensf) = weyl_tensor_square(false);
    vec![
        ("A1 order", a1, order1),
        ("A2 order", a2, order2),
        ("U(sl2)", sl2, sl2f),
        ("U(k[x]; T)", tang, tangf),
        ("A1 tensor A1", tens, tensf),
    ]
}

/// A single ideal generator as a rank-1 module row.
pub fn ideal_row(p: &CPoly) -> MPoly {
    let mut out = MPoly::zero(1, p.nvars);
    for (e, c) in p.terms() {
        out.add_term(0, e.clone(), c.clone());
    }
    out
}

/// Monomial x^e as a commutative polynomial.
pub fn cmono(nvars: usize, exps: &[(usize, u32)]) -> CPoly {
    let mut e = vec![0u32; nvars];
    for &(i, k) in exps {
        e[i] += k;
    }
    CPoly::monomial(e, int(1))
}

/// A commutative test module: presentation rows over an ambient free module.
pub struct CModule {
    pub name: &'static str,
    pub rows: Vec<MPoly>,
    pub ambient: usize,
}

/// Modules over k[x_1..x_nvars] covering ranks 1 and 2, torsion and free
/// parts, and embedded components.
pub fn commutative_corpus(nvars: usize) -> Vec<CModule> {
    let x = |i: usize, k: u32| cmono(nvars, &[(i, k)]);
    let row = |p: &CPoly| ideal_row(p);
    let mut out = vec![
        CModule { name: "ring", rows: vec![], ambient: 1 },
        CModule { name: "point", rows: (0..nvars).map(|i| row(&x(i, 1))).collect(), ambient: 1 },
        CModule { name: "hyperplane", rows: vec![row(&x(0, 1))], ambient: 1 },
        CModule {
            name: "embedded point on a line",
            rows: vec![row(&x(0, 2)), row(&x(0, 1).mul(&x(1, 1)))],
            ambient: 1,
        },
        CModule {
            name: "fat point",
            rows: (0..nvars).map(|i| row(&x(i, 2))).collect(),
            ambient: 1,
        },
        CModule {
            name: "rank 2 with one mixing relation",
            rows: vec![{
                let mut m = MPoly::zero(2, nvars);
                m.add_term(0, expo(nvars, 0), int(1));
                m.add_term(1, expo(nvars, 1), int(-1));
                m
            }],
            ambient: 2,
        },
        CModule {
            name: "direct sum of two hyperplane quotients",
            rows: vec![
                {
                    let mut m = MPoly::zero(2, nvars);
                    m.add_term(0, expo(nvars, 0), int(1));
                    m
                },
                {
                    let mut m = MPoly::zero(2, nvars);
                    m.add_term(1, expo(nvars, 1), int(1));
                    m
                },
            ],
            ambient: 2,
        },
    ];
    if nvars >= 3 {
        out.push(CModule {
            name: "plane with an embedded line",
            rows: vec![row(&x(0, 2)), row(&x(0, 1).mul(&x(1, 1)))],
            ambient: 1,
        });
        out.push(CModule {
            name: "union of a plane and a line",
            rows: vec![row(&x(0, 1).mul(&x(1, 1))), row(&x(0, 1).mul(&x(2, 1)))],
            ambient: 1,
        });
        out.push(CModule { name: "line", rows: vec![row(&x(0, 1)), row(&x(1, 1))], ambient: 1 });
    }
    out
}

fn expo(nvars: usize, i: usize) -> Vec<u32> {
    let mut e = vec![0u32; nvars];
    e[i] = 1;
    e
}

/// Partial sums: dimension of the filtration layer up to each degree.
pub fn cumulative(seq: &[u64]) -> Vec<u64> {
    let mut total = 0;
    seq.iter()
        .map(|&v| {
            total += v;
            total
        })
        .collect()
}

pub fn binom(n: u64, k: u64) -> u64 {
    let mut out = 1u64;
    for i in 0..k {
        out = out * (n - i) / (i + 1);
    }
    out
}

/// All words of length at most `max_len` over `ngens` letters.
pub fn words_up_to(ngens: u32, max_len: usize) -> Vec<ncfilt::Word> {
    let mut out = vec![ncfilt::Word::empty()];
    let mut layer = vec![ncfilt::Word::empty()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in 0..ngens {
                let mut letters = w.letters().to_vec();
                letters.push(l);
                next.push(ncfilt::Word::from_letters(letters));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}
