use std::sync::Arc;

use super::*;
use crate::cluster::ClusterComplex;
use crate::group::CoxeterGroup;

fn group(s: &str) -> Arc<CoxeterGroup> {
    Arc::new(CoxeterGroup::new(Arc::new(s.parse().unwrap())))
}

fn poly(terms: &[(u32, u32, i64)]) -> IntPoly {
    IntPoly::from_terms(terms.iter().map(|&(a, b, c)| (a, b, Integer::from(c))))
}

fn summary(s: &str, m: u32) -> ComplexSummary {
    ClusterComplex::build(group(s), m).unwrap().summary(None)
}

fn poset(s: &str, m: u32) -> NcmPoset {
    NcmPoset::noncrossing(group(s), m).unwrap()
}

#[test]
fn f_triangles() {
    assert_eq!(f_triangle(&summary("A1", 1)).to_string(), "1 + x + y");
    assert_eq!(f_triangle(&summary("A2", 1)).to_string(), "1 + 3x + 2y + 2x^2 + 2xy + y^2");
    assert_eq!(f_triangle(&summary("B3", 2)).coeff(0, 0), Integer::from(1));
}

#[test]
fn m_triangles() {
    assert_eq!(m_triangle(&poset("A1", 1)).to_string(), "1 - x + xy");
    assert_eq!(
        m_triangle(&poset("A2", 1)).to_string(),
        "1 - 3x + 2x^2 + 3xy - 3x^2y + x^2y^2"
    );
    assert_eq!(m_triangle_shifted(&poset("A1", 1)).to_string(), "1 - x + y");
    assert_eq!(m_triangle(&poset("G2", 2)).coeff(0, 0), Integer::from(1));
}

#[test]
fn shifted_form_fails_the_identity_in_a1() {
    let p = poset("A1", 1);
    let lhs = lhs_transform(&f_triangle(&summary("A1", 1)), 1).unwrap();
    assert_eq!(substitute_m(&m_triangle(&p)).unwrap(), lhs);
    assert!(substitute_m(&m_triangle_shifted(&p)).map_or(true, |q| q != lhs));
}

#[test]
fn transforms() {
    let a1 = poly(&[(0, 0, 1), (1, 0, 1), (0, 1, 1)]);
    assert_eq!(lhs_transform(&a1, 1).unwrap(), a1);
    let want = "1 + 3x + 3y + 2x^2 + 3xy + y^2";
    assert_eq!(lhs_transform(&f_triangle(&summary("A2", 1)), 2).unwrap().to_string(), want);
    assert_eq!(rhs_transform(&poset("A2", 1)).to_string(), want);
    assert_eq!(rhs_transform(&poset("A1", 1)).to_string(), "1 + x + y");
    assert_eq!(lhs_transform(&IntPoly::one(), 0).unwrap(), IntPoly::one());
    assert_eq!(
        lhs_transform(&poly(&[(1, 1, 1)]), 1),
        Err(Error::DegreeOverflow { k: 1, l: 1, n: 1 })
    );
    for (s, m) in [("A2", 2), ("B2", 1)] {
        let p = poset(s, m);
        assert_eq!(substitute_m(&m_triangle(&p)).unwrap(), rhs_transform(&p));
    }
}

#[test]
fn fm_identity_small() {
    for (s, m) in [("A1", 1), ("A2", 1), ("A2", 2), ("A2", 3), ("B2", 2), ("A1xA1", 2)] {
        let r = verify_fm(group(s), m).unwrap();
        assert!(r.holds, "{s} m={m}: {} vs {}", r.lhs, r.rhs);
    }
    let a1 = verify_fm(group("A1"), 2).unwrap();
    let sq = verify_fm(group("A1xA1"), 2).unwrap();
    assert_eq!(sq.lhs, &a1.lhs * &a1.lhs);
}

#[test]
fn multiplicativity() {
    for m in 1..=2 {
        let f = |s| f_triangle(&summary(s, m));
        let mt = |s| m_triangle(&poset(s, m));
        assert_eq!(f("A1xA2"), &f("A1") * &f("A2"));
        assert_eq!(mt("A1xA2"), &mt("A1") * &mt("A2"));
    }
}

#[test]
fn h_polynomials() {
    assert_eq!(h_polynomial(&summary("A2", 1), 2).to_string(), "1 + 3y + y^2");
    assert_eq!(h_polynomial(&summary("A2", 2), 2).to_string(), "1 + 6y + 5y^2");
    assert_eq!(h_from_counts(&[1, 2]).to_string(), "1 + y");
    for (s, m) in [("A3", 2), ("B2", 3), ("G2", 2)] {
        assert_eq!(h_polynomial(&summary(s, m), group(s).root_system().rank()), rank_generating_function(&poset(s, m)));
    }
}

#[test]
fn catalan_numbers() {
    let n = |s: &str, m| catalan_number(&s.parse().unwrap(), m).unwrap();
    assert_eq!(n("A2", 1), Integer::from(5));
    assert_eq!(n("A2", 2), Integer::from(12));
    assert_eq!(n("D4", 2), Integer::from(336));
    assert_eq!(n("A1xA1", 1), Integer::from(4));
    assert_eq!(n("E8", 1), Integer::from(25080));
    assert_eq!(catalan_number(&"A2".parse().unwrap(), 0), Err(Error::InvalidM(0)));
}

#[test]
fn positive_part_is_f_at_y_zero() {
    let s = summary("B2", 2);
    let positive = ClusterComplex::build(group("B2"), 2).unwrap().positive_faces().len();
    let at0 = f_triangle(&s).at_y_zero();
    let total: Integer = at0.terms().map(|t| t.2.clone()).sum();
    assert_eq!(total, Integer::from(positive));
}
