mod common;

use common::*;
use gcalg::exalg::{meet_sweedler, Extensor};
use gcalg::linalg;
use gcalg::matroids::{resolving_bracket, three_lines_concurrent, Circuit, Matroid};
use gcalg::scalar::{int, ints, Scalar};
use gcalg::whitney::{dotted_expansion, evaluate, Configuration, Letter, Word};
use gcalg::Error;
use itertools::Itertools;
use num::Zero;
use rand_chacha::ChaCha8Rng;

fn det3(a: &[Scalar], b: &[Scalar], c: &[Scalar]) -> Scalar {
    linalg::determinant(&[a.to_vec(), b.to_vec(), c.to_vec()])
}

fn cross(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ]
}

/// Concurrency of ab, cd, ef from the line vectors `a × b`.
fn concurrent_by_cross(c: &Configuration) -> bool {
    let p = |s: &str| c.get(&Letter::new(s)).unwrap().clone();
    let l1 = cross(&p("a"), &p("b"));
    let l2 = cross(&p("c"), &p("d"));
    let l3 = cross(&p("e"), &p("f"));
    det3(&l1, &l2, &l3).is_zero()
}

fn is_uniform(c: &Configuration) -> bool {
    let ground: Vec<Letter> = c.letters().cloned().collect();
    ground.iter().combinations(3).all(|t| {
        let rows: Vec<Vec<Scalar>> = t.iter().map(|l| c.get(l).unwrap().clone()).collect();
        !linalg::determinant(&rows).is_zero()
    })
}

/// Six points in general position in the plane; with `concurrent`, the
/// lines ab, cd, ef pass through one point.
fn u36(g: &mut ChaCha8Rng, concurrent: bool) -> Configuration {
    loop {
        let c = if concurrent {
            let o = row(g, 3);
            let (a, cc, e) = (row(g, 3), row(g, 3), row(g, 3));
            let mut pts = Vec::new();
            for (name, (x, y)) in [('a', 'b'), ('c', 'd'), ('e', 'f')]
                .into_iter()
                .zip([a, cc, e])
                .map(|(n, x)| (n, (x.clone(), x)))
            {
                let other = lin(&[nonzero(g), nonzero(g)], &[&x, &o]);
                pts.push((name.0, y));
                pts.push((name.1, other));
            }
            config(3, pts)
        } else {
            random_config(g, 3, "abcdef")
        };
        if is_uniform(&c) && concurrent_by_cross(&c) == concurrent {
            return c;
        }
    }
}

fn named<'a>(circuits: &'a [Circuit], name: &str) -> &'a Circuit {
    circuits.iter().find(|c| c.name() == name).unwrap()
}

fn rows_of(circuits: &[&Circuit]) -> Vec<Vec<Scalar>> {
    circuits.iter().map(|c| c.coefficients().to_vec()).collect()
}

fn three(m: &Matroid) -> Vec<Circuit> {
    ["abcd", "abef", "cdef"]
        .iter()
        .map(|s| m.circuit(&letters(s)).unwrap())
        .collect()
}

#[test]
fn generic_u36_derived_configuration() {
    let mut g = rng(100);
    for _ in 0..10 {
        let m = Matroid::new(u36(&mut g, false));
        let circuits = m.circuits().unwrap();
        assert_eq!(circuits.len(), 15);
        assert!(circuits.iter().all(|c| c.len() == 4));
        let d = m.derived_configuration().unwrap();
        assert_eq!(d.rank(), 3);
        assert_eq!(d.configuration.ambient(), 6);
        let sel = rows_of(&[named(&circuits, "abcd"), named(&circuits, "abef"), named(&circuits, "cdef")]);
        assert_eq!(linalg::rank(&sel, 6), 3);
        for five in "abcdef".chars().combinations(5) {
            let family: Vec<&Circuit> = circuits
                .iter()
                .filter(|c| c.name().chars().all(|x| five.contains(&x)))
                .collect();
            assert_eq!(family.len(), 5);
            assert_eq!(linalg::rank(&rows_of(&family), 6), 2);
        }
        // every derived row is orthogonal to every coordinate projection
        let base: Vec<&Vec<Scalar>> = m.configuration().rows().map(|(_, r)| r).collect();
        for c in &circuits {
            for j in 0..3 {
                let col: Vec<Scalar> = base.iter().map(|r| r[j].clone()).collect();
                assert!(linalg::dot(&col, c.coefficients()).is_zero());
            }
        }
    }
}

#[test]
fn concurrent_u36_drops_rank() {
    let mut g = rng(101);
    for _ in 0..10 {
        let m = Matroid::new(u36(&mut g, true));
        assert_eq!(m.circuits().unwrap().len(), 15);
        assert_eq!(m.derived_configuration().unwrap().rank(), 3);
        let t = three(&m);
        assert_eq!(linalg::rank(&rows_of(&t.iter().collect::<Vec<_>>()), 6), 2);
    }
}

#[test]
fn resolving_bracket_is_column_invariant() {
    let mut g = rng(102);
    for concurrent in [false, true] {
        for _ in 0..10 {
            let c = u36(&mut g, concurrent);
            let m = Matroid::new(c.clone());
            let s = rows_of(&three(&m).iter().collect::<Vec<_>>());
            let sel = if concurrent {
                // concurrent rows are dependent; use any spanning triple
                let d = m.derived_configuration().unwrap();
                let all = rows_of(&d.circuits.iter().collect::<Vec<_>>());
                let mut basis = Vec::new();
                for r in all {
                    basis.push(r);
                    if linalg::rank(&basis, 6) < basis.len() {
                        basis.pop();
                    }
                }
                basis
            } else {
                s.clone()
            };
            let values: Vec<Scalar> = "abcdef"
                .chars()
                .combinations(3)
                .map(|x| resolving_bracket(&sel, &c, &letters(&x.iter().collect::<String>())).unwrap())
                .collect();
            assert!(values.iter().all(|v| *v == values[0]));
            assert!(!values[0].is_zero());
            // the three named circuits vanish exactly on concurrent instances
            for x in "abcdef".chars().combinations(3) {
                let v = resolving_bracket(&s, &c, &letters(&x.iter().collect::<String>())).unwrap();
                assert_eq!(v.is_zero(), concurrent);
            }
        }
    }
}

#[test]
fn resolving_bracket_of_three_circuits() {
    let mut g = rng(103);
    let mut factor: Option<Scalar> = None;
    for i in 0..40 {
        let concurrent = i % 2 == 1;
        let c = u36(&mut g, concurrent);
        let m = Matroid::new(c.clone());
        let raw: Vec<Vec<Scalar>> = ["abcd", "abef", "cdef"]
            .iter()
            .map(|s| m.circuit_brackets(&letters(s)).unwrap())
            .collect();
        let p = |s: &str| c.rows_of(&letters(s)).unwrap();
        let mj = meet_sweedler(&p("ab"), &p("cd"), 3).unwrap();
        let ef = Extensor::from_points(&p("ef"), 3).unwrap();
        let synthetic = mj.join(&ef).unwrap().bracket().unwrap();
        if concurrent {
            assert!(synthetic.is_zero());
            for x in ["abc", "abd", "cef", "bdf"] {
                assert!(resolving_bracket(&raw, &c, &letters(x)).unwrap().is_zero());
            }
            continue;
        }
        let rb = resolving_bracket(&raw, &c, &letters("abc")).unwrap();
        for x in ["abd", "cef", "bdf", "ace"] {
            assert_eq!(resolving_bracket(&raw, &c, &letters(x)).unwrap(), rb);
        }
        let f = rb / synthetic;
        match &factor {
            None => factor = Some(f),
            Some(prev) => assert_eq!(*prev, f),
        }
    }
    assert_eq!(factor, Some(int(-1)));
}

fn resolving_vanishes(m: &Matroid) -> bool {
    let raw: Vec<Vec<Scalar>> = ["abcd", "abef", "cdef"]
        .iter()
        .map(|s| m.circuit_brackets(&letters(s)).unwrap())
        .collect();
    resolving_bracket(&raw, m.configuration(), &letters("abc")).unwrap().is_zero()
}

#[test]
fn concurrency_criteria_agree() {
    let mut g = rng(104);
    for i in 0..100 {
        let concurrent = i % 2 == 0;
        let c = u36(&mut g, concurrent);
        let m = Matroid::new(c.clone());
        let lines = [
            (Letter::new("a"), Letter::new("b")),
            (Letter::new("c"), Letter::new("d")),
            (Letter::new("e"), Letter::new("f")),
        ];
        let by_meet = three_lines_concurrent(&c, &lines).unwrap();
        let t = three(&m);
        let by_rank = linalg::rank(&rows_of(&t.iter().collect::<Vec<_>>()), 6) <= 2;
        let by_bracket = resolving_vanishes(&m);
        let by_lifting = m.nontrivial_liftings(&t).unwrap() > 0;
        assert_eq!(by_meet, concurrent);
        assert_eq!(by_rank, concurrent);
        assert_eq!(by_bracket, concurrent);
        assert_eq!(by_lifting, concurrent);
        assert_eq!(concurrent_by_cross(&c), concurrent);
    }
}

#[test]
fn lifting_dimensions() {
    let mut g = rng(105);
    let m = Matroid::new(u36(&mut g, false));
    let t = three(&m);
    assert_eq!(m.lifting_dimension(&t), 3);
    assert_eq!(m.nontrivial_liftings(&t).unwrap(), 0);
    let m = Matroid::new(u36(&mut g, true));
    let t = three(&m);
    assert_eq!(m.lifting_dimension(&t), 4);
    assert_eq!(m.nontrivial_liftings(&t).unwrap(), 1);
    // every linear height function lifts
    for j in 0..3 {
        let h: Vec<Scalar> = m.configuration().rows().map(|(_, r)| r[j].clone()).collect();
        for c in &t {
            assert!(linalg::dot(&h, c.coefficients()).is_zero());
        }
    }
}

#[test]
fn explicit_concurrent_lines() {
    // ab, cd, ef all pass through (1, 1, 1)
    let pts = |f: Vec<i64>| {
        config(
            3,
            vec![
                ('a', ints(&[1, 0, 1])),
                ('b', ints(&[1, 2, 1])),
                ('c', ints(&[0, 1, 1])),
                ('d', ints(&[2, 1, 1])),
                ('e', ints(&[0, 0, 1])),
                ('f', ints(&f)),
            ],
        )
    };
    let lines = [
        (Letter::new("a"), Letter::new("b")),
        (Letter::new("c"), Letter::new("d")),
        (Letter::new("e"), Letter::new("f")),
    ];
    assert!(three_lines_concurrent(&pts(vec![2, 2, 1]), &lines).unwrap());
    let moved = pts(vec![2, 3, 1]);
    assert!(!three_lines_concurrent(&moved, &lines).unwrap());
    assert!(!concurrent_by_cross(&moved));
    let bad = pts(vec![0, 0, 2]);
    assert!(matches!(
        three_lines_concurrent(&bad, &lines),
        Err(Error::DegenerateLine(_))
    ));
    let repeated = [
        (Letter::new("a"), Letter::new("b")),
        (Letter::new("a"), Letter::new("d")),
        (Letter::new("e"), Letter::new("f")),
    ];
    assert!(matches!(
        three_lines_concurrent(&pts(vec![2, 2, 1]), &repeated),
        Err(Error::Cardinality(_))
    ));
}

#[test]
fn resolving_bracket_errors() {
    // c, d, e collinear: the complementary bracket on cde vanishes
    let c = config(
        3,
        vec![
            ('a', ints(&[1, 0, 0])),
            ('b', ints(&[0, 1, 0])),
            ('c', ints(&[0, 0, 1])),
            ('d', ints(&[1, 1, 1])),
            ('e', ints(&[2, 2, 3])),
            ('f', ints(&[1, 2, 3])),
        ],
    );
    let m = Matroid::new(c.clone());
    let d = m.derived_configuration().unwrap();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for (_, r) in d.configuration.rows() {
        basis.push(r.clone());
        if linalg::rank(&basis, 6) < basis.len() {
            basis.pop();
        }
    }
    assert_eq!(basis.len(), 3);
    assert_eq!(resolving_bracket(&basis, &c, &letters("abf")), Err(Error::DegenerateColumns));
    assert!(resolving_bracket(&basis, &c, &letters("abc")).is_ok());
    assert!(matches!(
        resolving_bracket(&basis, &c, &letters("ab")),
        Err(Error::Cardinality(_))
    ));
    assert!(matches!(
        resolving_bracket(&basis[..2], &c, &letters("ab")),
        Err(Error::Cardinality(_))
    ));
}

#[test]
fn straightening_identity() {
    let mut g = rng(106);
    let rows = [Word::parse("bcd"), Word::parse("aef")];
    let e = dotted_expansion(&rows, &[(0, 0), (0, 1), (0, 2), (1, 0)]).unwrap();
    for _ in 0..100 {
        let c = random_config(&mut g, 3, "abcdef");
        assert!(evaluate(&e, &c).unwrap().is_zero());
        let b = |s: &str| Extensor::from_points(&c.rows_of(&letters(s)).unwrap(), 3).unwrap().bracket().unwrap();
        let sum = b("bcd") * b("aef") - b("acd") * b("bef") + b("abd") * b("cef") - b("abc") * b("def");
        assert!(sum.is_zero());
    }
}

#[test]
fn five_term_relation() {
    let mut g = rng(107);
    for _ in 0..100 {
        let c = random_config(&mut g, 4, "abcde");
        let ext = |s: &str| Extensor::from_points(&c.rows_of(&letters(s)).unwrap(), 4).unwrap();
        let b = |s: &str| ext(s).bracket().unwrap();
        let terms = [
            ext("e").scale(&b("abcd")),
            ext("d").scale(&-b("abce")),
            ext("c").scale(&b("abde")),
            ext("b").scale(&-b("acde")),
            ext("a").scale(&b("bcde")),
        ];
        let sum = terms.iter().skip(1).fold(terms[0].clone(), |acc, t| acc.add(t).unwrap());
        assert!(sum.is_zero());
    }
}

#[test]
fn second_derivation() {
    let c = config(
        3,
        vec![
            ('a', ints(&[0, 0, 1])),
            ('b', ints(&[1, 0, 1])),
            ('c', ints(&[3, 0, 1])),
            ('d', ints(&[0, 1, 1])),
            ('e', ints(&[0, 2, 1])),
        ],
    );
    let m = Matroid::new(c);
    let d1 = m.derive_iterate(1).unwrap();
    let names: Vec<String> = d1.ground().iter().map(|l| l.name().to_string()).collect();
    assert_eq!(names, ["abc", "ade", "bcde"]);
    assert_eq!(d1.configuration().ambient(), 5);
    let rows: Vec<Vec<Scalar>> = d1.configuration().rows().map(|(_, r)| r.clone()).collect();
    assert_eq!(linalg::rank(&rows, 5), 2);
    // bcde is a combination of abc and ade
    let d2 = m.derive_iterate(2).unwrap();
    assert_eq!(d2.configuration().len(), 1);
    assert_eq!(d2.configuration().ambient(), 3);
    let d3 = m.derive_iterate(3).unwrap();
    assert!(d3.configuration().is_empty());
}
