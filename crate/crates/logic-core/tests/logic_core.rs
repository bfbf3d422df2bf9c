use logic_core::*;
use proptest::prelude::*;

fn hs(text: &str) -> HsFormula {
    match parse(text, Dialect::Hs).unwrap() {
        Formula::Hs(f) => f,
        _ => unreachable!(),
    }
}

fn pt(text: &str) -> PointFormula {
    match parse(text, Dialect::Point).unwrap() {
        Formula::Point(f) => f,
        _ => unreachable!(),
    }
}

#[test]
fn parse_hs_examples() {
    use HsFormula as H;
    assert_eq!(
        hs("<B> p & [E] !q"),
        H::and(
            H::ex(Rel::B, H::atom("p")),
            H::univ(Rel::E, H::not(H::atom("q")))
        )
    );
    let err = parse("<Z> p", Dialect::Hs).unwrap_err();
    assert!(err.msg.contains("unknown modality"), "{err}");
}

#[test]
fn parse_point_examples() {
    use PointFormula as P;
    assert_eq!(pt("p U (X q)"), P::until(P::atom("p"), P::next(P::atom("q"))));
    assert_eq!(
        pt("down x . F (x & p)"),
        P::bind("x", P::ev(P::and(P::var("x"), P::atom("p"))))
    );
    // outside a binder the same identifier is an atom
    assert_eq!(pt("x & p"), P::and(P::atom("x"), P::atom("p")));
    assert_eq!(pt("Ef(F p)"), P::ExistsF(Box::new(P::ev(P::atom("p")))));
    assert_eq!(pt("p S q"), P::since(P::atom("p"), P::atom("q")));
}

#[test]
fn parse_fo_examples() {
    use FoFormula as F;
    let f = parse("exists z . z > x & z <= y & p(z)", Dialect::Fo).unwrap();
    assert_eq!(
        f,
        Formula::Fo(F::exists(
            "z",
            F::and(
                F::and(F::lt("x", "z"), F::le("z", "y")),
                F::pred("p", "z")
            )
        ))
    );
    assert!(parse("p(w)", Dialect::Fo).unwrap_err().msg.contains("unbound"));
}

#[test]
fn len_sugar_builds_length_formula() {
    assert_eq!(hs("len1"), build_length(1).unwrap());
    assert_eq!(hs("len3"), build_length(3).unwrap());
    assert!(parse("len0", Dialect::Hs).is_err());
}

#[test]
fn build_length_examples() {
    use HsFormula as H;
    assert!(build_length(0).is_err());
    assert_eq!(
        build_length(1).unwrap(),
        H::and(H::True, H::univ(Rel::B, H::falsum()))
    );
    assert_eq!(
        build_length(2).unwrap(),
        H::and(
            H::ex(Rel::B, H::True),
            H::univ(Rel::B, H::univ(Rel::B, H::falsum()))
        )
    );
}

#[test]
fn size_examples_and_length_closed_form() {
    assert_eq!(hs_size(&HsFormula::atom("p")), 1);
    assert_eq!(hs_size(&hs("<B>(p & q)")), 4);
    // committed closed form: (n-1) + 1 existential part, n + 1 universal
    // part (false counts as one symbol), plus the conjunction
    for n in 1..12 {
        assert_eq!(hs_size(&build_length(n).unwrap()), 2 * n + 2);
    }
}

#[test]
fn expand_examples() {
    use HsFormula as H;
    let p = H::atom("p");
    let at_point = H::and(
        H::univ(Rel::E, H::falsum()),
        H::or(p.clone(), H::ex(Rel::BBar, p.clone())),
    );
    assert_eq!(
        expand_derived(&H::ex(Rel::A, p.clone())),
        H::or(at_point.clone(), H::ex(Rel::E, at_point))
    );
    assert_eq!(
        expand_derived(&H::ex(Rel::D, p.clone())),
        H::ex(Rel::B, H::ex(Rel::E, p.clone()))
    );
    assert_eq!(expand_derived(&H::ex(Rel::B, p.clone())), H::ex(Rel::B, p.clone()));
    let g = expand_derived(&H::ex(Rel::G, p.clone()));
    assert_eq!(
        g,
        H::or(
            p.clone(),
            H::or(
                H::ex(Rel::B, p.clone()),
                H::or(H::ex(Rel::E, p.clone()), H::ex(Rel::B, H::ex(Rel::E, p)))
            )
        )
    );
}

// ---------------------------------------------------------------- strategies

fn hs_strategy(depth: u32) -> BoxedStrategy<HsFormula> {
    let leaf = prop_oneof![
        prop_oneof![Just("p"), Just("q"), Just("r")].prop_map(HsFormula::atom),
        Just(HsFormula::True),
        Just(HsFormula::falsum()),
    ];
    if depth == 0 {
        return leaf.boxed();
    }
    let sub = hs_strategy(depth - 1);
    let rel = prop_oneof![
        Just(Rel::A),
        Just(Rel::ABar),
        Just(Rel::B),
        Just(Rel::BBar),
        Just(Rel::E),
        Just(Rel::EBar),
        Just(Rel::L),
        Just(Rel::LBar),
        Just(Rel::D),
        Just(Rel::DBar),
        Just(Rel::O),
        Just(Rel::OBar),
        Just(Rel::G),
    ];
    let pol = prop_oneof![Just(Polarity::Ex), Just(Polarity::Univ)];
    prop_oneof![
        leaf,
        sub.clone().prop_map(HsFormula::not),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| HsFormula::and(a, b)),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| HsFormula::or(a, b)),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| HsFormula::implies(a, b)),
        (rel, pol, sub).prop_map(|(r, pl, a)| HsFormula::Modal(r, pl, Box::new(a))),
    ]
    .boxed()
}

fn pt_strategy(depth: u32, scope: Vec<String>) -> BoxedStrategy<PointFormula> {
    let mut leaves = vec![
        prop_oneof![Just("p"), Just("q")].prop_map(PointFormula::atom).boxed(),
        Just(PointFormula::True).boxed(),
        Just(PointFormula::falsum()).boxed(),
    ];
    if !scope.is_empty() {
        let vars = scope.clone();
        leaves.push(
            (0..vars.len())
                .prop_map(move |i| PointFormula::var(vars[i].clone()))
                .boxed(),
        );
    }
    let leaf = proptest::strategy::Union::new(leaves);
    if depth == 0 {
        return leaf.boxed();
    }
    let sub = pt_strategy(depth - 1, scope.clone());
    let fresh = format!("v{}", scope.len());
    let mut wider = scope.clone();
    wider.push(fresh.clone());
    let bound_sub = pt_strategy(depth - 1, wider);
    let un = |f: fn(PointFormula) -> PointFormula, s: BoxedStrategy<PointFormula>| {
        s.prop_map(f).boxed()
    };
    proptest::strategy::Union::new(vec![
        leaf.boxed(),
        un(PointFormula::not, sub.clone()),
        un(PointFormula::next, sub.clone()),
        un(PointFormula::ev, sub.clone()),
        un(PointFormula::alw, sub.clone()),
        un(PointFormula::prev, sub.clone()),
        un(PointFormula::ev_past, sub.clone()),
        un(PointFormula::alw_past, sub.clone()),
        (sub.clone(), sub.clone())
            .prop_map(|(a, b)| PointFormula::and(a, b))
            .boxed(),
        (sub.clone(), sub.clone())
            .prop_map(|(a, b)| PointFormula::or(a, b))
            .boxed(),
        (sub.clone(), sub.clone())
            .prop_map(|(a, b)| PointFormula::implies(a, b))
            .boxed(),
        (sub.clone(), sub.clone())
            .prop_map(|(a, b)| PointFormula::until(a, b))
            .boxed(),
        (sub.clone(), sub.clone())
            .prop_map(|(a, b)| PointFormula::since(a, b))
            .boxed(),
        sub.clone().prop_map(|a| PointFormula::Exists(Box::new(a))).boxed(),
        sub.clone().prop_map(|a| PointFormula::Forall(Box::new(a))).boxed(),
        sub.clone().prop_map(|a| PointFormula::ExistsF(Box::new(a))).boxed(),
        sub.clone().prop_map(|a| PointFormula::ForallF(Box::new(a))).boxed(),
        bound_sub
            .prop_map(move |a| PointFormula::Bind(fresh.clone(), Box::new(a)))
            .boxed(),
    ])
    .boxed()
}

fn fo_strategy(depth: u32, scope: Vec<String>) -> BoxedStrategy<FoFormula> {
    let vars = scope.clone();
    let var = (0..vars.len()).prop_map(move |i| vars[i].clone());
    let leaf = prop_oneof![
        Just(FoFormula::True),
        Just(FoFormula::not(FoFormula::True)),
        (prop_oneof![Just("p"), Just("q")], var.clone())
            .prop_map(|(p, v)| FoFormula::pred(p, v)),
        (var.clone(), var.clone()).prop_map(|(a, b)| FoFormula::le(a, b)),
        (var.clone(), var.clone()).prop_map(|(a, b)| FoFormula::lt(a, b)),
    ];
    if depth == 0 {
        return leaf.boxed();
    }
    let sub = fo_strategy(depth - 1, scope.clone());
    let fresh = format!("z{}", scope.len());
    let mut wider = scope.clone();
    wider.push(fresh.clone());
    let bound_sub = fo_strategy(depth - 1, wider);
    let fresh2 = fresh.clone();
    prop_oneof![
        leaf,
        sub.clone().prop_map(FoFormula::not),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| FoFormula::and(a, b)),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| FoFormula::or(a, b)),
        (sub.clone(), sub.clone()).prop_map(|(a, b)| FoFormula::implies(a, b)),
        bound_sub
            .clone()
            .prop_map(move |a| FoFormula::Exists(fresh.clone(), Box::new(a))),
        bound_sub.prop_map(move |a| FoFormula::Forall(fresh2.clone(), Box::new(a))),
    ]
    .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn hs_round_trip(f in hs_strategy(4)) {
        let text = render(&Formula::Hs(f.clone()));
        prop_assert_eq!(hs(&text), f);
    }

    #[test]
    fn point_round_trip(f in pt_strategy(4, vec![])) {
        let text = render(&Formula::Point(f.clone()));
        prop_assert_eq!(pt(&text), f);
    }

    #[test]
    fn fo_round_trip(f in fo_strategy(4, vec!["x".into(), "y".into()])) {
        let text = render(&Formula::Fo(f.clone()));
        let back = parse(&text, Dialect::Fo).unwrap();
        prop_assert_eq!(back, Formula::Fo(f));
    }

    #[test]
    fn expand_idempotent_core_only_size_monotone(f in hs_strategy(3)) {
        let e = expand_derived(&f);
        prop_assert!(e.relations().iter().all(|r| r.is_core()));
        prop_assert_eq!(expand_derived(&e), e.clone());
        prop_assert!(hs_size(&e) >= hs_size(&f));
    }
}
