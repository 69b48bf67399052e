//! Canonical, byte-deterministic text output: graded-lex term order, highest
//! first, `^1` and unit coefficients elided, `*` between factors.

use crate::error::{Error, Result};
use crate::fields::{FieldDescriptor, FieldElement};
use crate::polys::{MultiPoly, Point, UniPoly};

fn abs(field: &FieldDescriptor, c: &FieldElement) -> FieldElement {
    if c.is_negative() {
        field.neg(c).expect("negation of a field element")
    } else {
        c.clone()
    }
}

fn term_body(
    field: &FieldDescriptor,
    coeff: &FieldElement,
    exps: &[u32],
    var_names: &[String],
) -> String {
    let mut parts: Vec<String> = vec![];
    let is_constant = exps.iter().all(|&e| e == 0);
    if !coeff.is_one() || is_constant {
        parts.push(field.format_element(coeff));
    }
    for (j, &e) in exps.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(var_names[j].clone()),
            _ => parts.push(format!("{}^{}", var_names[j], e)),
        }
    }
    parts.join("*")
}

pub fn print_canonical(f: &MultiPoly, var_names: &[String]) -> Result<String> {
    if var_names.len() != f.nvars() {
        return Err(Error::ArityMismatch);
    }
    if f.is_zero() {
        return Ok("0".to_string());
    }
    let field = f.field();
    let mut out = String::new();
    for (i, (m, c)) in f.terms().collect::<Vec<_>>().into_iter().rev().enumerate() {
        let negative = c.is_negative();
        if i == 0 {
            if negative {
                out.push('-');
            }
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term_body(field, &abs(field, c), &m.0, var_names));
    }
    Ok(out)
}

pub fn print_unipoly(l: &UniPoly, var: &str) -> String {
    if l.is_zero() {
        return "0".to_string();
    }
    let field = l.field();
    let names = vec![var.to_string()];
    let mut out = String::new();
    let mut first = true;
    for (e, c) in l.coeffs().iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let negative = c.is_negative();
        if first {
            if negative {
                out.push('-');
            }
            first = false;
        } else {
            out.push_str(if negative { " - " } else { " + " });
        }
        out.push_str(&term_body(field, &abs(field, c), &[e as u32], &names));
    }
    out
}

pub fn print_point(field: &FieldDescriptor, a: &Point) -> String {
    let coords: Vec<String> = a.coords.iter().map(|c| field.format_element(c)).collect();
    format!("({})", coords.join(", "))
}
