//! Verb handlers: parse inputs in the selected ring, call the library,
//! and emit one human-readable or JSON result per command.

use crate::expr::{self, Expr};
use crate::ringspec::{factor_bound, RingSpec};
use crate::CliError;
use divforge_core::casestudy::{CaseDivisor, CaseElement, CaseRing};
use divforge_core::divisor::{
    dv_list, nagata_divides, nagata_member, nagata_witness, Divisor, KroneckerList,
};
use divforge_core::quadratic::{KrullDivisor, PrimeIdeal, QuadRing};
use divforge_core::refine::refine;
use divforge_core::rings::{FracField, GcdDomain, IntegerRing, PolyRing, PrimeField, UniPoly};
use serde_json::{json, Value};

pub struct Emitter {
    pub json: bool,
}

impl Emitter {
    fn emit(
        &self,
        verb: &str,
        inputs: &[String],
        result: Value,
        witness: Option<Value>,
        human: String,
    ) {
        if self.json {
            let mut obj = json!({
                "verb": verb,
                "inputs": inputs,
                "result": result,
            });
            if let Some(w) = witness {
                obj["witness"] = w;
            }
            println!("{obj}");
        } else {
            println!("{human}");
        }
    }
}

fn parse_expr(src: &str) -> Result<Expr, CliError> {
    expr::parse(src).map_err(|e| match e {
        expr::ExprError::Syntax { .. } | expr::ExprError::NegativeExponent { .. } => {
            CliError::Usage(format!("in `{src}`: {e}"))
        }
        other => CliError::Domain(format!("in `{src}`: {other}")),
    })
}

fn eval_elems<A: GcdDomain>(
    ring: &A,
    lookup: &dyn Fn(&str) -> Option<A::Elem>,
    sources: &[String],
) -> Result<Vec<A::Elem>, CliError> {
    sources
        .iter()
        .map(|s| {
            let ast = parse_expr(s)?;
            expr::eval(ring, lookup, &ast).map_err(|e| CliError::Domain(format!("in `{s}`: {e}")))
        })
        .collect()
}

/// Splits argv tokens into `;`-separated element lists. Tokens stay
/// atomic unless they contain `;` or `,` themselves, so a quoted
/// expression with spaces survives intact.
fn split_lists(args: &[String], expected: usize, what: &str) -> Result<Vec<Vec<String>>, CliError> {
    let mut parts: Vec<Vec<String>> = vec![Vec::new()];
    for arg in args {
        for (i, piece) in arg.split(';').enumerate() {
            if i > 0 {
                parts.push(Vec::new());
            }
            for elem in piece.split(',') {
                let elem = elem.trim();
                if !elem.is_empty() {
                    parts.last_mut().unwrap().push(elem.to_string());
                }
            }
        }
    }
    if parts.len() != expected || parts.iter().any(|p| p.is_empty()) {
        return Err(CliError::Usage(format!(
            "{what} expects {expected} nonempty `;`-separated list(s)"
        )));
    }
    Ok(parts)
}

fn flatten_elem_args(args: &[String]) -> Vec<String> {
    args.iter()
        .flat_map(|a| a.split(','))
        .map(|s| s.trim().to_string())
        .filter(|s| !s.is_empty())
        .collect()
}

fn divisor_human<A: GcdDomain>(ring: &A, d: &Divisor<A::Elem>) -> String {
    if ring.is_unit(d.den()) {
        ring.fmt_elem(d.num())
    } else {
        format!("{}/{}", ring.fmt_elem(d.num()), ring.fmt_elem(d.den()))
    }
}

fn divisor_json<A: GcdDomain>(ring: &A, d: &Divisor<A::Elem>) -> Value {
    json!({
        "num": ring.fmt_elem(d.num()),
        "den": ring.fmt_elem(d.den()),
    })
}

macro_rules! with_gcd_ring {
    ($spec:expr, $verb:literal, |$ring:ident, $lookup:ident| $body:expr) => {
        match $spec {
            RingSpec::Z => {
                let $ring = IntegerRing;
                let $lookup = |_: &str| None;
                $body
            }
            RingSpec::QPoly(vars) => {
                let $ring = PolyRing::new(FracField::new(IntegerRing), vars);
                let ring_ref = &$ring;
                let $lookup =
                    |name: &str| ring_ref.var_index(name).map(|i| ring_ref.var(i));
                $body
            }
            RingSpec::FpPoly(p, vars) => {
                let $ring = PolyRing::new(PrimeField::new(p)?, vars);
                let ring_ref = &$ring;
                let $lookup =
                    |name: &str| ring_ref.var_index(name).map(|i| ring_ref.var(i));
                $body
            }
            RingSpec::ZSqrt(_) | RingSpec::Coord(_) => {
                return Err(CliError::Usage(format!(
                    "`{}` needs a gcd ring (z, q[vars] or fp[vars]:p); use the quad/case verbs instead",
                    $verb
                )))
            }
        }
    };
}

pub fn run_refine(spec: RingSpec, elems: &[String], em: &Emitter) -> Result<(), CliError> {
    let sources = flatten_elem_args(elems);
    with_gcd_ring!(spec, "refine", |ring, lookup| {
        let inputs = eval_elems(&ring, &lookup, &sources)?;
        let basis = refine(&ring, &inputs)?;
        let basis_strs: Vec<String> = basis.basis.iter().map(|b| ring.fmt_elem(b)).collect();
        let unit_strs: Vec<String> = basis.units.iter().map(|u| ring.fmt_elem(u)).collect();
        let human = format!(
            "basis [{}]; exponents {:?}; units [{}]",
            basis_strs.join(", "),
            basis.exponents,
            unit_strs.join(", ")
        );
        em.emit(
            "refine",
            &sources,
            json!({
                "basis": basis_strs,
                "exponents": basis.exponents,
                "units": unit_strs,
            }),
            None,
            human,
        );
        Ok(())
    })
}

pub fn run_dv(spec: RingSpec, op: &str, operands: &[String], em: &Emitter) -> Result<(), CliError> {
    // accept both `dv --ring R meet ...` and `dv --ring R op meet ...`
    let (op, operands) = if op == "op" {
        match operands.split_first() {
            Some((head, tail)) => (head.as_str(), tail),
            None => (op, operands),
        }
    } else {
        (op, operands)
    };
    let lists: Vec<Vec<String>> = operands
        .iter()
        .map(|o| {
            o.split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect()
        })
        .collect();
    if lists.len() < 2 || lists.iter().any(|l: &Vec<String>| l.is_empty()) {
        return Err(CliError::Usage(
            "dv needs an operation and at least two element lists".into(),
        ));
    }
    let inputs: Vec<String> = operands.to_vec();
    with_gcd_ring!(spec, "dv", |ring, lookup| {
        let divisors: Vec<Divisor<_>> = lists
            .iter()
            .map(|l| {
                let elems = eval_elems(&ring, &lookup, l)?;
                dv_list(&ring, &elems).map_err(CliError::from)
            })
            .collect::<Result<_, _>>()?;
        match op {
            "leq" => {
                if divisors.len() != 2 {
                    return Err(CliError::Usage("dv leq takes exactly two lists".into()));
                }
                let verdict = divisors[0].leq(&ring, &divisors[1]);
                em.emit("dv", &inputs, json!(verdict), None, verdict.to_string());
            }
            "meet" | "join" | "add" => {
                let mut acc = divisors[0].clone();
                for d in &divisors[1..] {
                    acc = match op {
                        "meet" => acc.meet(&ring, d),
                        "join" => acc.join(&ring, d),
                        _ => acc.add(&ring, d),
                    };
                }
                em.emit(
                    "dv",
                    &inputs,
                    divisor_json(&ring, &acc),
                    None,
                    divisor_human(&ring, &acc),
                );
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown dv operation `{other}` (expected meet, join, add or leq)"
                )))
            }
        }
        Ok(())
    })
}

pub fn run_star(spec: RingSpec, args: &[String], em: &Emitter) -> Result<(), CliError> {
    let lists = split_lists(args, 2, "star")?;
    let inputs: Vec<String> = args.to_vec();
    with_gcd_ring!(spec, "star", |ring, lookup| {
        let left = KroneckerList::new(&ring, eval_elems(&ring, &lookup, &lists[0])?)?;
        let right = KroneckerList::new(&ring, eval_elems(&ring, &lookup, &lists[1])?)?;
        let prod = left.star(&ring, &right);
        let strs: Vec<String> = prod.elems.iter().map(|e| ring.fmt_elem(e)).collect();
        let content = prod.content_divisor(&ring)?;
        em.emit(
            "star",
            &inputs,
            json!(strs),
            Some(json!({ "content": divisor_json(&ring, &content) })),
            format!("({})", strs.join(", ")),
        );
        Ok(())
    })
}

pub fn run_nagata(
    spec: RingSpec,
    mode: &str,
    f: &str,
    g: Option<&str>,
    em: &Emitter,
) -> Result<(), CliError> {
    with_gcd_ring!(spec, "nagata", |ring, lookup| {
        let parse_poly = |src: &str| -> Result<UniPoly<_>, CliError> {
            let ast = parse_expr(src)?;
            expr::eval_unipoly(&ring, &lookup, &ast)
                .map_err(|e| CliError::Domain(format!("in `{src}`: {e}")))
        };
        match mode {
            "member" => {
                let fp = parse_poly(f)?;
                let verdict = nagata_member(&ring, &fp)?;
                em.emit(
                    "nagata",
                    &[f.to_string()],
                    json!(verdict),
                    None,
                    verdict.to_string(),
                );
            }
            "divides" => {
                let g = g.ok_or_else(|| {
                    CliError::Usage("nagata divides needs two polynomials".into())
                })?;
                let fp = parse_poly(f)?;
                let gp = parse_poly(g)?;
                let verdict = nagata_divides(&ring, &fp, &gp)?;
                let witness_str = if verdict {
                    Some(nagata_witness(&ring, &gp)?.fmt_with(&ring, "X"))
                } else {
                    None
                };
                let witness = witness_str.as_ref().map(|s| json!({ "multiplier": s }));
                let human = match &witness_str {
                    Some(s) => format!("true (multiplier {s})"),
                    None => "false".to_string(),
                };
                em.emit(
                    "nagata",
                    &[f.to_string(), g.to_string()],
                    json!(verdict),
                    witness,
                    human,
                );
            }
            other => {
                return Err(CliError::Usage(format!(
                    "unknown nagata mode `{other}` (expected member or divides)"
                )))
            }
        }
        Ok(())
    })
}

/// Splits on commas that are not nested inside parentheses.
fn split_top_commas(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0usize;
    let mut cur = String::new();
    for c in s.chars() {
        match c {
            '(' => {
                depth += 1;
                cur.push(c);
            }
            ')' => {
                depth = depth.saturating_sub(1);
                cur.push(c);
            }
            ',' if depth == 0 => {
                out.push(cur.trim().to_string());
                cur = String::new();
            }
            _ => cur.push(c),
        }
    }
    if !cur.trim().is_empty() {
        out.push(cur.trim().to_string());
    }
    out
}

/// An atom is `p` (first prime above p), `p'` (second, split case) or a
/// full stable name like `P(3,1+w)`.
fn parse_atom(ring: &QuadRing, src: &str) -> Result<PrimeIdeal, CliError> {
    let s = src.trim();
    if let Some(body) = s.strip_prefix("P(") {
        let p_str = body.split(',').next().unwrap_or("");
        let p: u64 = p_str
            .parse()
            .map_err(|_| CliError::Usage(format!("bad prime in atom `{src}`")))?;
        return ring
            .split_prime(p)?
            .into_iter()
            .find(|q| q.name() == s)
            .ok_or_else(|| CliError::Domain(format!("no prime named `{src}` above {p}")));
    }
    let (digits, conjugate) = match s.strip_suffix('\'') {
        Some(head) => (head, true),
        None => (s, false),
    };
    let p: u64 = digits
        .parse()
        .map_err(|_| CliError::Usage(format!("bad atom `{src}` (expected p, p' or P(p,...))")))?;
    let primes = ring.split_prime(p)?;
    if conjugate {
        primes.get(1).cloned().ok_or_else(|| {
            CliError::Domain(format!(
                "{p} has a single prime above it; `{src}` names none"
            ))
        })
    } else {
        Ok(primes[0].clone())
    }
}

/// Parses `atom:exp,atom:exp,...`.
fn parse_atom_exps(ring: &QuadRing, src: &str) -> Result<(Vec<PrimeIdeal>, Vec<u32>), CliError> {
    let mut atoms = Vec::new();
    let mut exps = Vec::new();
    for piece in split_top_commas(src) {
        let (atom_str, exp_str) = piece
            .rsplit_once(':')
            .ok_or_else(|| CliError::Usage(format!("bad atom:exponent pair `{piece}`")))?;
        let exp: u32 = exp_str
            .trim()
            .parse()
            .map_err(|_| CliError::Usage(format!("bad exponent in `{piece}`")))?;
        atoms.push(parse_atom(ring, atom_str)?);
        exps.push(exp);
    }
    if atoms.is_empty() {
        return Err(CliError::Usage("empty atom list".into()));
    }
    Ok((atoms, exps))
}

fn quad_elem(ring: &QuadRing, src: &str) -> Result<divforge_core::QuadElement, CliError> {
    let ast = parse_expr(src)?;
    expr::eval_quad(ring, &ast).map_err(|e| CliError::Domain(format!("in `{src}`: {e}")))
}

pub fn run_quad(d: i64, rest: &[String], em: &Emitter) -> Result<(), CliError> {
    let ring = QuadRing::with_factor_bound(d, factor_bound()?)?;
    let sub = rest
        .first()
        .ok_or_else(|| CliError::Usage("quad needs a subcommand".into()))?;
    let args = &rest[1..];
    let need = |n: usize, usage: &str| -> Result<(), CliError> {
        if args.len() == n {
            Ok(())
        } else {
            Err(CliError::Usage(format!("usage: quad --d D {usage}")))
        }
    };
    match sub.as_str() {
        "split" => {
            need(1, "split <p>")?;
            let p: u64 = args[0]
                .parse()
                .map_err(|_| CliError::Usage(format!("bad prime `{}`", args[0])))?;
            let primes = ring.split_prime(p)?;
            let result: Vec<Value> = primes
                .iter()
                .map(|q| {
                    json!({
                        "name": q.name(),
                        "p": q.p,
                        "kind": format!("{:?}", q.kind).to_lowercase(),
                        "residue_degree": q.residue_degree,
                        "hnf": {
                            "a": q.hnf.a.to_string(),
                            "b": q.hnf.b.to_string(),
                            "c": q.hnf.c.to_string(),
                        },
                    })
                })
                .collect();
            let human = primes
                .iter()
                .map(|q| {
                    let second = divforge_core::QuadElement::new(q.hnf.b.clone(), q.hnf.c.clone());
                    format!(
                        "{}: {}, f={}, hnf=({}, {})",
                        q.name(),
                        format!("{:?}", q.kind).to_lowercase(),
                        q.residue_degree,
                        q.hnf.a,
                        ring.fmt_elem(&second)
                    )
                })
                .collect::<Vec<_>>()
                .join("\n");
            em.emit("quad split", args, json!(result), None, human);
        }
        "dv" => {
            need(1, "dv <x>")?;
            let x = quad_elem(&ring, &args[0])?;
            let dv = ring.dv_element(&x)?;
            let result: Value = json!(dv
                .iter()
                .map(|(p, e)| json!({"atom": p.name(), "exp": e}))
                .collect::<Vec<_>>());
            em.emit("quad dv", args, result, None, ring.fmt_divisor(&dv));
        }
        "approx" => {
            need(1, "approx <atom:exp,...>")?;
            let (atoms, exps) = parse_atom_exps(&ring, &args[0])?;
            let a = ring.approx(&atoms, &exps)?;
            let witness: Vec<Value> = atoms
                .iter()
                .map(|p| {
                    json!({
                        "atom": p.name(),
                        "valuation": ring.valuation_element(&a, p),
                    })
                })
                .collect();
            em.emit(
                "quad approx",
                args,
                json!(ring.fmt_elem(&a)),
                Some(json!(witness)),
                format!("a = {}", ring.fmt_elem(&a)),
            );
        }
        "half" => {
            need(2, "half <atom:exp,...> <a>")?;
            let (atoms, exps) = parse_atom_exps(&ring, &args[0])?;
            let alpha = KrullDivisor::from_coeffs(
                atoms
                    .iter()
                    .cloned()
                    .zip(exps.iter().map(|&e| e as i64))
                    .collect::<Vec<_>>(),
            );
            let a = quad_elem(&ring, &args[1])?;
            let b = ring.one_and_a_half(&alpha, &a)?;
            let dv_a = ring.dv_element(&a)?;
            let witness: Vec<Value> = dv_a
                .iter()
                .map(|(p, _)| {
                    json!({
                        "atom": p.name(),
                        "valuation": ring.valuation_element(&b, p),
                    })
                })
                .collect();
            em.emit(
                "quad half",
                args,
                json!(ring.fmt_elem(&b)),
                Some(json!(witness)),
                format!("b = {}", ring.fmt_elem(&b)),
            );
        }
        "four" => {
            need(2, "four <a> <b>")?;
            let a = quad_elem(&ring, &args[0])?;
            let b = quad_elem(&ring, &args[1])?;
            let (c, dd) = ring.four_elements(&a, &b)?;
            em.emit(
                "quad four",
                args,
                json!({"c": ring.fmt_elem(&c), "d": ring.fmt_elem(&dd)}),
                None,
                format!("c = {}, d = {}", ring.fmt_elem(&c), ring.fmt_elem(&dd)),
            );
        }
        "norm" => {
            need(1, "norm <x>")?;
            let x = quad_elem(&ring, &args[0])?;
            let dv = ring.dv_element(&x)?;
            let nd = ring.norm_divisor(&dv);
            let z = IntegerRing;
            em.emit(
                "quad norm",
                args,
                divisor_json(&z, &nd),
                Some(json!({"element_norm": ring.norm(&x).to_string()})),
                format!("N(dv(x)) = {}", divisor_human(&z, &nd)),
            );
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown quad subcommand `{other}` (split, dv, approx, half, four, norm)"
            )))
        }
    }
    Ok(())
}

type CaseF = CaseRing<PrimeField>;

fn case_elem(ring: &CaseF, src: &str) -> Result<CaseElement<u64>, CliError> {
    let ast = parse_expr(src)?;
    let ambient = ring.ambient();
    let lookup = |name: &str| ambient.var_index(name).map(|i| ambient.var(i));
    let poly = expr::eval(ambient, &lookup, &ast)
        .map_err(|e| CliError::Domain(format!("in `{src}`: {e}")))?;
    Ok(ring.normal_form(&poly))
}

fn case_divisor_json(ring: &CaseF, dv: &CaseDivisor<u64>) -> Value {
    let loc = |l: &divforge_core::casestudy::LocalizedDivisor<u64>| {
        json!({
            "num": ring.ambient().fmt_elem(l.frac.num()),
            "den": ring.ambient().fmt_elem(l.frac.den()),
        })
    };
    json!({"loc_a": loc(&dv.loc_a), "loc_d": loc(&dv.loc_d)})
}

pub fn run_case(p: u64, rest: &[String], em: &Emitter) -> Result<(), CliError> {
    let ring = CaseRing::new(PrimeField::new(p)?);
    let sub = rest
        .first()
        .ok_or_else(|| CliError::Usage("case needs a subcommand".into()))?;
    let args = &rest[1..];
    match sub.as_str() {
        "divides" => {
            if args.len() != 2 {
                return Err(CliError::Usage("usage: case --p P divides <x> <y>".into()));
            }
            let x = case_elem(&ring, &args[0])?;
            let y = case_elem(&ring, &args[1])?;
            let verdict = ring.divides(&x, &y)?;
            em.emit(
                "case divides",
                args,
                json!(verdict),
                None,
                verdict.to_string(),
            );
        }
        "sgcd1" => {
            let sources = flatten_elem_args(args);
            if sources.is_empty() {
                return Err(CliError::Usage(
                    "usage: case --p P sgcd1 <x1> <x2> ...".into(),
                ));
            }
            let elems = sources
                .iter()
                .map(|s| case_elem(&ring, s))
                .collect::<Result<Vec<_>, _>>()?;
            let verdict = ring.strong_gcd_is_one(&elems)?;
            em.emit(
                "case sgcd1",
                &sources,
                json!(verdict),
                None,
                verdict.to_string(),
            );
        }
        "dv" => {
            let sources = flatten_elem_args(args);
            if sources.is_empty() {
                return Err(CliError::Usage("usage: case --p P dv <x1> <x2> ...".into()));
            }
            let elems = sources
                .iter()
                .map(|s| case_elem(&ring, s))
                .collect::<Result<Vec<_>, _>>()?;
            let dv = ring.dv_pair(&elems)?;
            em.emit(
                "case dv",
                &sources,
                case_divisor_json(&ring, &dv),
                None,
                ring.fmt_divisor(&dv),
            );
        }
        "idv" => {
            let lists = split_lists(args, 2, "case idv")?;
            if lists[0].len() != 1 {
                return Err(CliError::Usage(
                    "usage: case --p P idv <x> ; <gen1> <gen2> ...".into(),
                ));
            }
            let x = case_elem(&ring, &lists[0][0])?;
            let gens = lists[1]
                .iter()
                .map(|s| case_elem(&ring, s))
                .collect::<Result<Vec<_>, _>>()?;
            let alpha = ring.dv_pair(&gens)?;
            let verdict = ring.idv_member(&x, &alpha)?;
            let inputs: Vec<String> = args.to_vec();
            em.emit(
                "case idv",
                &inputs,
                json!(verdict),
                None,
                verdict.to_string(),
            );
        }
        other => {
            return Err(CliError::Usage(format!(
                "unknown case subcommand `{other}` (divides, sgcd1, dv, idv)"
            )))
        }
    }
    Ok(())
}
