//! Human-writable names for weights and roots.
//!
//! Weight labels, case-insensitive:
//!
//! | label            | meaning                                   |
//! |------------------|-------------------------------------------|
//! | `w3`, `varpi3`   | fundamental weight with Bourbaki index 3  |
//! | `std`            | `w1` (standard representation)            |
//! | `wedge3`         | `w3` of type A (`Λ^3 Std`)                |
//! | `spin`           | `wn` of type B                            |
//! | `spin+`          | `wn` of type D                            |
//! | `spin-`          | `w(n-1)` of type D                        |
//!
//! Root specs are comma-separated sums of epsilon coordinates (`e1-e2`,
//! `e1+e2`, `e3`, `2e3`) or of simple roots (`a1+a2`). The epsilon
//! realizations are `a_i = e_i - e_(i+1)` with `a_n = e_n` (B),
//! `a_n = 2e_n` (C) and `a_n = e_(n-1) + e_n` (D).

use std::fmt;

use quadpair::root_kit::{CartanType, Family};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelError(pub String);

impl fmt::Display for LabelError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for LabelError {}

/// Canonical Bourbaki index for a weight label on `t`.
pub fn canonical_weight(t: CartanType, label: &str) -> Result<usize, LabelError> {
    let n = t.rank();
    let key = label.trim().to_ascii_lowercase();
    let bad = |why: &str| LabelError(format!("weight label {label:?} on {t}: {why}"));
    let index = |digits: &str| -> Result<usize, LabelError> {
        let j: usize = digits.parse().map_err(|_| bad("expected an index after the prefix"))?;
        if j == 0 || j > n {
            return Err(bad(&format!("index must be between 1 and {n}")));
        }
        Ok(j)
    };
    match key.as_str() {
        "std" => return Ok(1),
        "spin" => {
            return match t.family() {
                Family::B => Ok(n),
                Family::D => Err(bad("type D has two half-spin weights, use spin+ or spin-")),
                _ => Err(bad("spin labels exist for types B and D only")),
            }
        }
        "spin+" | "spin-" => {
            if t.family() != Family::D {
                return Err(bad("half-spin labels exist for type D only"));
            }
            return Ok(if key == "spin+" { n } else { n - 1 });
        }
        _ => {}
    }
    if let Some(d) = key.strip_prefix("wedge") {
        if t.family() != Family::A {
            return Err(bad("wedge labels are for type A"));
        }
        return index(d);
    }
    for prefix in ["varpi", "w"] {
        if let Some(d) = key.strip_prefix(prefix) {
            return index(d);
        }
    }
    Err(bad("expected w<j>, std, wedge<j>, spin, spin+ or spin-"))
}

/// Simple-root coordinates for each root in a comma-separated spec.
pub fn parse_roots(t: CartanType, spec: &str) -> Result<Vec<Vec<i64>>, LabelError> {
    let roots: Vec<&str> = spec.split(',').map(str::trim).collect();
    if roots.iter().any(|r| r.is_empty()) {
        return Err(LabelError(format!("empty root in spec {spec:?}")));
    }
    roots.into_iter().map(|r| parse_root(t, r)).collect()
}

fn parse_root(t: CartanType, root: &str) -> Result<Vec<i64>, LabelError> {
    let bad = |why: String| LabelError(format!("root {root:?}: {why}"));
    let mut terms: Vec<(i64, char, usize)> = Vec::new();
    let text: String = root.chars().filter(|c| !c.is_whitespace()).collect();
    let mut rest = text.as_str();
    while !rest.is_empty() {
        let (sign, after) = match rest.as_bytes()[0] {
            b'+' => (1, &rest[1..]),
            b'-' => (-1, &rest[1..]),
            _ if terms.is_empty() => (1, rest),
            _ => return Err(bad("terms must be joined by + or -".into())),
        };
        let digits = after.bytes().take_while(u8::is_ascii_digit).count();
        let coeff: i64 = if digits == 0 {
            1
        } else {
            after[..digits].parse().map_err(|_| bad("coefficient too large".into()))?
        };
        let after = &after[digits..];
        let letter = after
            .chars()
            .next()
            .filter(|c| matches!(c, 'e' | 'a'))
            .ok_or_else(|| bad("expected e<i> or a<i>".into()))?;
        let after = &after[1..];
        let digits = after.bytes().take_while(u8::is_ascii_digit).count();
        let i: usize = after[..digits]
            .parse()
            .map_err(|_| bad(format!("expected an index after {letter:?}")))?;
        terms.push((sign * coeff, letter, i));
        rest = &after[digits..];
    }
    if terms.is_empty() {
        return Err(bad("empty root".into()));
    }
    let letter = terms[0].1;
    if terms.iter().any(|&(_, l, _)| l != letter) {
        return Err(bad("do not mix e<i> and a<i> terms".into()));
    }
    let n = t.rank();
    if letter == 'a' {
        let mut coords = vec![0i64; n];
        for (c, _, i) in terms {
            if i == 0 || i > n {
                return Err(bad(format!("simple root index must be between 1 and {n}")));
            }
            coords[i - 1] += c;
        }
        return Ok(coords);
    }
    let ambient = match t.family() {
        Family::A => n + 1,
        Family::B | Family::C | Family::D => n,
        _ => return Err(bad(format!("epsilon coordinates are not defined for {t}, use a<i>"))),
    };
    let mut v = vec![0i64; ambient];
    for (c, _, i) in terms {
        if i == 0 || i > ambient {
            return Err(bad(format!("epsilon index must be between 1 and {ambient}")));
        }
        v[i - 1] += c;
    }
    epsilon_to_simple(t, &v).ok_or_else(|| bad(format!("not in the root lattice of {t}")))
}

/// Inverts the epsilon realization of the simple roots.
fn epsilon_to_simple(t: CartanType, v: &[i64]) -> Option<Vec<i64>> {
    let n = t.rank();
    let prefix: Vec<i64> = v
        .iter()
        .scan(0, |acc, x| {
            *acc += x;
            Some(*acc)
        })
        .collect();
    let mut c: Vec<i64> = prefix[..n].to_vec();
    match t.family() {
        Family::A if prefix[n] != 0 => return None,
        Family::C => {
            if prefix[n - 1] % 2 != 0 {
                return None;
            }
            c[n - 1] = prefix[n - 1] / 2;
        }
        Family::D => {
            if prefix[n - 1] % 2 != 0 {
                return None;
            }
            c[n - 1] = prefix[n - 1] / 2;
            c[n - 2] = prefix[n - 2] - c[n - 1];
        }
        _ => {}
    }
    Some(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ty(s: &str) -> CartanType {
        s.parse().unwrap()
    }

    #[test]
    fn weight_labels() {
        assert_eq!(canonical_weight(ty("A5"), "w3"), Ok(3));
        assert_eq!(canonical_weight(ty("A5"), "wedge3"), Ok(3));
        assert_eq!(canonical_weight(ty("A5"), "STD"), Ok(1));
        assert_eq!(canonical_weight(ty("B4"), "spin"), Ok(4));
        assert_eq!(canonical_weight(ty("D6"), "spin+"), Ok(6));
        assert_eq!(canonical_weight(ty("D6"), "spin-"), Ok(5));
        assert_eq!(canonical_weight(ty("E7"), "varpi7"), Ok(7));
        assert!(canonical_weight(ty("D6"), "spin").is_err());
        assert!(canonical_weight(ty("C3"), "spin").is_err());
        assert!(canonical_weight(ty("C3"), "wedge2").is_err());
        assert!(canonical_weight(ty("A5"), "w6").is_err());
        assert!(canonical_weight(ty("A5"), "w0").is_err());
        assert!(canonical_weight(ty("A5"), "omega").is_err());
    }

    #[test]
    fn epsilon_roots() {
        assert_eq!(parse_roots(ty("A3"), "e1-e4").unwrap(), vec![vec![1, 1, 1]]);
        assert_eq!(parse_roots(ty("B3"), "e3").unwrap(), vec![vec![0, 0, 1]]);
        assert_eq!(parse_roots(ty("B3"), "e1+e2").unwrap(), vec![vec![1, 2, 2]]);
        assert_eq!(parse_roots(ty("C3"), "2e3").unwrap(), vec![vec![0, 0, 1]]);
        assert_eq!(parse_roots(ty("C3"), "2e1").unwrap(), vec![vec![2, 2, 1]]);
        assert_eq!(parse_roots(ty("D4"), "e3+e4").unwrap(), vec![vec![0, 0, 0, 1]]);
        assert_eq!(parse_roots(ty("D4"), "e3-e4").unwrap(), vec![vec![0, 0, 1, 0]]);
        assert_eq!(parse_roots(ty("D4"), "e1+e2").unwrap(), vec![vec![1, 2, 1, 1]]);
        assert_eq!(
            parse_roots(ty("D6"), "e1-e2, e3-e4").unwrap(),
            vec![vec![1, 0, 0, 0, 0, 0], vec![0, 0, 1, 0, 0, 0]]
        );
        assert_eq!(parse_roots(ty("E6"), "a1+a3").unwrap(), vec![vec![1, 0, 1, 0, 0, 0]]);
    }

    #[test]
    fn malformed_roots() {
        for (t, spec) in [
            ("A3", "e1-e5"),
            ("A3", "e1"),
            ("C3", "e3"),
            ("A3", "e1-"),
            ("A3", "x1"),
            ("A3", "e1-e2,"),
            ("A3", "e1-a2"),
            ("E6", "e1-e2"),
            ("A3", "e1e2"),
        ] {
            assert!(parse_roots(ty(t), spec).is_err(), "{t} {spec}");
        }
    }
}
