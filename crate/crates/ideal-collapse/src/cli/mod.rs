//! Text-format parser, canonical printer, and the command-line surface.

pub mod parse;
pub mod print;
mod run;

pub use parse::{parse_document, parse_expr, parse_field_spec, parse_system, parse_unipoly, SystemDocument};
pub use print::{print_canonical, print_point, print_unipoly};
pub use run::run_command;

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::fields::FieldDescriptor;

    #[test]
    fn parse_f5_system() {
        let sys = parse_system("field F5\nvars x y\nf1 = x^2 + 2*y - 1\n").unwrap();
        assert_eq!(sys.field, FieldDescriptor::prime(5).unwrap());
        assert_eq!(sys.var_names, vec!["x", "y"]);
        assert_eq!(sys.generators.len(), 1);
        let g = &sys.generators[0];
        assert_eq!(g.coefficient(&[2, 0]), sys.field.from_int(1));
        assert_eq!(g.coefficient(&[0, 1]), sys.field.from_int(2));
        assert_eq!(g.coefficient(&[0, 0]), sys.field.from_int(4)); // -1 mod 5
    }

    #[test]
    fn rational_coefficients_over_q() {
        let sys = parse_system("field Q\nvars x\nf1 = 1/2*x + 1\n").unwrap();
        let g = &sys.generators[0];
        use num_bigint::BigInt;
        assert_eq!(
            g.coefficient(&[1]),
            sys.field
                .from_ratio(&BigInt::from(1), &BigInt::from(2))
                .unwrap()
        );
    }

    #[test]
    fn fraction_over_prime_field_rejected() {
        let err = parse_system("field F3\nvars x\nf1 = 1/2*x\n").unwrap_err();
        assert!(matches!(err, Error::FieldLiteral { line: 3, .. }));
    }

    #[test]
    fn syntax_errors_are_positioned() {
        // implicit multiplication
        let err = parse_system("field F3\nvars x\nf1 = 2x\n").unwrap_err();
        match err {
            Error::Syntax { line, col, .. } => {
                assert_eq!(line, 3);
                assert_eq!(col, 7); // inside the `x` token
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
        // unbalanced paren
        let err = parse_system("field F3\nvars x\nf1 = (x + 1\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
        // missing exponent
        let err = parse_system("field F3\nvars x\nf1 = x^\n").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }));
    }

    #[test]
    fn unknown_variable_and_duplicates() {
        let err = parse_system("field F3\nvars x\nf1 = y + 1\n").unwrap_err();
        assert!(matches!(err, Error::UnknownVariable { .. }));
        let err = parse_system("field F3\nvars x\nf1 = x\nf1 = x + 1\n").unwrap_err();
        assert_eq!(err, Error::DuplicateGeneratorName("f1".into()));
        let err = parse_system("field F3\nvars x x\nf1 = x\n").unwrap_err();
        assert_eq!(err, Error::DuplicateVariableName("x".into()));
    }

    #[test]
    fn comments_and_blank_lines() {
        let sys = parse_system(
            "# a comment\nfield F2^2\n\nvars x  # trailing comment\nf1 = 2*x + 3\n",
        )
        .unwrap();
        assert_eq!(sys.field.size(), Some(4));
        // 2 decodes to T, 3 to T+1 in the base-2 code
        assert_eq!(sys.generators[0].coefficient(&[1]), sys.field.from_code(2).unwrap());
    }

    #[test]
    fn field_spec_forms() {
        assert_eq!(parse_field_spec("Q").unwrap(), FieldDescriptor::rationals());
        assert_eq!(
            parse_field_spec("F5").unwrap(),
            FieldDescriptor::prime(5).unwrap()
        );
        assert_eq!(parse_field_spec("F2^2").unwrap().size(), Some(4));
        assert!(parse_field_spec("F6").is_err());
        assert!(parse_field_spec("G5").is_err());
    }

    #[test]
    fn print_parse_roundtrip_spot() {
        let text = "field Q\nvars x y\nf1 = 2*x^2*y + x - 1\n";
        let sys = parse_system(text).unwrap();
        let printed = print_canonical(&sys.generators[0], &sys.var_names).unwrap();
        assert_eq!(printed, "2*x^2*y + x - 1");
        let reparsed = parse_expr(&printed, 1, &sys.field, &sys.var_names).unwrap();
        assert_eq!(reparsed, sys.generators[0]);
    }

    #[test]
    fn unipoly_roundtrip() {
        let k = FieldDescriptor::prime(5).unwrap();
        let l = parse_unipoly("T^2 + 2", &k).unwrap();
        assert_eq!(print_unipoly(&l, "T"), "T^2 + 2");
        assert_eq!(l.degree(), 2);
    }
}
