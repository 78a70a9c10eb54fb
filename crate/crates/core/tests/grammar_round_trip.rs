use ordgap_core::descriptor::{from_keys, Leaf};
use ordgap_core::enumerate::{ot_terms, seq_terms};
use ordgap_core::grammar::{parse, parse_ot, parse_seq, print_ot, print_seq, ParseError, Parsed};
use ordgap_core::{Family, SeqTerm, System};

#[test]
fn unary_corpus_round_trips() {
    let mut count = 0;
    for s in seq_terms(System::new(Family::T, 4), &[0u32, 1, 2], 8) {
        let s = from_keys(s);
        let text = print_seq(&s);
        assert_eq!(parse_seq(&text).unwrap(), s, "{text}");
        count += 1;
    }
    // Terms whose leaves are terms.
    let inner: Vec<SeqTerm<Leaf>> = seq_terms(System::new(Family::T0, 2), &[0u32, 1], 3).into_iter().map(from_keys).collect();
    let leaves: Vec<Leaf> = inner.into_iter().map(|t| Leaf::Term(Box::new(t))).collect();
    for s in seq_terms(System::new(Family::T, 2), &leaves, 3) {
        let text = print_seq(&s);
        assert_eq!(parse_seq(&text).unwrap(), s, "{text}");
        count += 1;
    }
    assert!(count >= 10_000, "corpus has {count} terms");
}

#[test]
fn binary_corpus_round_trips() {
    let terms = ot_terms(3, false, 8);
    assert!(terms.len() >= 1000);
    for s in terms {
        let text = print_ot(&s);
        assert_eq!(parse_ot(&text).unwrap(), s);
        assert_eq!(parse(&text).unwrap(), Parsed::Ot(s));
    }
}

#[test]
fn printing_parsed_text_is_canonical() {
    let s = parse_seq("th(0, th(1,  <0>))").unwrap();
    assert_eq!(print_seq(&s), "[0,1,0]");
    assert_eq!(print_seq(&parse_seq(&print_seq(&s)).unwrap()), "[0,1,0]");
}

#[test]
fn errors() {
    assert_eq!(parse_seq("[0,"), Err(ParseError::UnexpectedEnd { expected: "a natural number" }));
    assert!(matches!(parse_seq("q"), Err(ParseError::Syntax { pos: 0, .. })));
    assert!(matches!(parse_seq("[0] x"), Err(ParseError::Syntax { pos: 4, .. })));
    assert!(matches!(parse_seq("[0,2,0]"), Err(ParseError::Constraint { .. })));
    assert!(matches!(parse_ot("(t 0 z"), Err(ParseError::UnexpectedEnd { .. })));
}
