//! Boolean condition simplification under validity-constraint facts.
//!
//! This is a bounded rewriting pass, not a SAT solver: constant folding,
//! `x==k && x!=k -> false`, the `true`/`false` identities, and elimination of
//! (dis)juncts settled by a fact. That set is enough to reduce every
//! condition the corpus produces, and the exhaustive-evaluation property
//! test guards soundness.

use super::ast::{BinOp, Expr};
use super::eval;
use super::types::ValidityConstraint;

/// Atomic comparison `param OP value` extracted from a condition.
fn as_param_cmp(e: &Expr) -> Option<(&str, BinOp, u32)> {
    if let Expr::Bin { op, lhs, rhs } = e {
        if op.is_comparison() {
            if let (Expr::Var(v), Expr::Num(n)) = (lhs.as_ref(), rhs.as_ref()) {
                return Some((v, *op, *n));
            }
        }
    }
    None
}

/// Does some fact guarantee `param != value` for every valid decode?
fn fact_excludes(facts: &[ValidityConstraint], param: &str, value: u32) -> bool {
    facts
        .iter()
        .any(|f| f.excluded_values(param).contains(&value))
}

/// Push `not` through comparisons so contradiction detection sees plain
/// atoms.
fn normalize_not(e: Expr) -> Expr {
    match e {
        Expr::Not(inner) => {
            let inner = normalize_not(*inner);
            if let Expr::Bin { op, lhs, rhs } = &inner {
                let flipped = match op {
                    BinOp::Eq => Some(BinOp::Ne),
                    BinOp::Ne => Some(BinOp::Eq),
                    BinOp::Lt => Some(BinOp::Ge),
                    BinOp::Ge => Some(BinOp::Lt),
                    BinOp::Gt => Some(BinOp::Le),
                    BinOp::Le => Some(BinOp::Gt),
                    _ => None,
                };
                if let Some(op) = flipped {
                    return Expr::Bin {
                        op,
                        lhs: lhs.clone(),
                        rhs: rhs.clone(),
                    };
                }
            }
            Expr::Not(Box::new(inner))
        }
        Expr::Bin { op, lhs, rhs } => Expr::Bin {
            op,
            lhs: Box::new(normalize_not(*lhs)),
            rhs: Box::new(normalize_not(*rhs)),
        },
        other => other,
    }
}

fn is_true(e: &Expr) -> bool {
    matches!(e, Expr::Num(n) if *n != 0)
}

fn is_false(e: &Expr) -> bool {
    matches!(e, Expr::Num(0))
}

/// Flatten an `and`/`or` spine into its operand list.
fn flatten(op: BinOp, e: &Expr, out: &mut Vec<Expr>) {
    match e {
        Expr::Bin {
            op: o,
            lhs,
            rhs,
        } if *o == op => {
            flatten(op, lhs, out);
            flatten(op, rhs, out);
        }
        other => out.push(other.clone()),
    }
}

fn rebuild(op: BinOp, mut parts: Vec<Expr>, empty: Expr) -> Expr {
    match parts.len() {
        0 => empty,
        1 => parts.pop().unwrap(),
        _ => {
            let mut it = parts.into_iter();
            let first = it.next().unwrap();
            it.fold(first, |acc, e| Expr::bin(op, acc, e))
        }
    }
}

/// Two atoms that cannot hold together: `x==k` with `x!=k`, or `x==k1` with
/// `x==k2` for different constants.
fn contradicts(a: &Expr, b: &Expr) -> bool {
    match (as_param_cmp(a), as_param_cmp(b)) {
        (Some((va, BinOp::Eq, ka)), Some((vb, BinOp::Ne, kb))) if va == vb && ka == kb => true,
        (Some((va, BinOp::Ne, ka)), Some((vb, BinOp::Eq, kb))) if va == vb && ka == kb => true,
        (Some((va, BinOp::Eq, ka)), Some((vb, BinOp::Eq, kb))) if va == vb && ka != kb => true,
        _ => false,
    }
}

fn simplify_once(e: &Expr, facts: &[ValidityConstraint]) -> Expr {
    // Settle param comparisons the facts decide.
    if let Some((v, op, k)) = as_param_cmp(e) {
        if fact_excludes(facts, v, k) {
            match op {
                BinOp::Eq => return Expr::Num(0),
                BinOp::Ne => return Expr::Num(1),
                _ => {}
            }
        }
    }
    match e {
        Expr::Bin { op: BinOp::And, .. } => {
            let mut parts = Vec::new();
            flatten(BinOp::And, e, &mut parts);
            let parts: Vec<Expr> = parts.iter().map(|p| simplify_once(p, facts)).collect();
            if parts.iter().any(is_false) {
                return Expr::Num(0);
            }
            for i in 0..parts.len() {
                for j in i + 1..parts.len() {
                    if contradicts(&parts[i], &parts[j]) {
                        return Expr::Num(0);
                    }
                }
            }
            let mut kept: Vec<Expr> = Vec::new();
            for p in parts {
                if !is_true(&p) && !kept.contains(&p) {
                    kept.push(p);
                }
            }
            rebuild(BinOp::And, kept, Expr::Num(1))
        }
        Expr::Bin { op: BinOp::Or, .. } => {
            let mut parts = Vec::new();
            flatten(BinOp::Or, e, &mut parts);
            let parts: Vec<Expr> = parts.iter().map(|p| simplify_once(p, facts)).collect();
            if parts.iter().any(is_true) {
                return Expr::Num(1);
            }
            let mut kept: Vec<Expr> = Vec::new();
            for p in parts {
                if !is_false(&p) && !kept.contains(&p) {
                    kept.push(p);
                }
            }
            rebuild(BinOp::Or, kept, Expr::Num(0))
        }
        Expr::Bin { op, lhs, rhs } => {
            let l = simplify_once(lhs, facts);
            let r = simplify_once(rhs, facts);
            let folded = Expr::bin(*op, l, r);
            match eval::eval_const(&folded) {
                // Keep comparison results canonical (0/1); fold arithmetic too.
                Some(v) => Expr::Num(v),
                None => folded,
            }
        }
        Expr::Not(inner) => {
            let i = simplify_once(inner, facts);
            if is_true(&i) {
                Expr::Num(0)
            } else if is_false(&i) {
                Expr::Num(1)
            } else {
                Expr::Not(Box::new(i))
            }
        }
        other => match eval::eval_const(other) {
            Some(v) => Expr::Num(v),
            None => other.clone(),
        },
    }
}

/// Simplify a boolean condition over decode-time parameters, assuming the
/// conjunction of `facts` holds. The result is logically equivalent to the
/// input for every parameter assignment consistent with the facts.
pub fn simplify(cond: &Expr, facts: &[ValidityConstraint]) -> Expr {
    let mut cur = normalize_not(cond.clone());
    for _ in 0..16 {
        let next = simplify_once(&cur, facts);
        if next == cur {
            break;
        }
        cur = next;
    }
    cur
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ir::types::ConstraintKind;

    fn ne_fact(param: &str, value: u32) -> ValidityConstraint {
        ValidityConstraint {
            subject: "T".into(),
            kind: ConstraintKind::NotEqualValue {
                param: param.into(),
                value,
            },
        }
    }

    #[test]
    fn disjunct_killed_by_fact() {
        // n==15 || d==15 under n!=15 reduces to d==15.
        let cond = Expr::bin(BinOp::Or, Expr::eq_num("n", 15), Expr::eq_num("d", 15));
        let out = simplify(&cond, &[ne_fact("n", 15)]);
        assert_eq!(out, Expr::eq_num("d", 15));
    }

    #[test]
    fn direct_contradiction() {
        let cond = Expr::bin(
            BinOp::And,
            Expr::eq_num("d", 15),
            Expr::bin(BinOp::Ne, Expr::var("d"), Expr::num(15)),
        );
        assert_eq!(simplify(&cond, &[]), Expr::Num(0));
    }

    #[test]
    fn true_is_fixed() {
        assert_eq!(simplify(&Expr::Num(1), &[ne_fact("n", 15)]), Expr::Num(1));
    }

    #[test]
    fn not_normalization_feeds_contradiction() {
        // d==15 && not(d==15), the else-branch shape.
        let cond = Expr::bin(
            BinOp::And,
            Expr::eq_num("d", 15),
            Expr::Not(Box::new(Expr::eq_num("d", 15))),
        );
        assert_eq!(simplify(&cond, &[]), Expr::Num(0));
    }

    #[test]
    fn identity_rules() {
        let e = Expr::eq_num("d", 15);
        assert_eq!(
            simplify(&Expr::bin(BinOp::Or, Expr::Num(0), e.clone()), &[]),
            e
        );
        assert_eq!(
            simplify(&Expr::bin(BinOp::And, Expr::Num(1), e.clone()), &[]),
            e
        );
    }
}
