//! Generators for the built-in group families.
//!
//! Element naming conventions:
//! - cyclic(n): `"0" .. "n-1"`, product is addition mod n.
//! - dihedral(n): rotations `r0..r{n-1}`, reflections `s0..s{n-1}` where
//!   `s<k>` stands for `r^k * s`; relations `s*r^j = r^{-j}*s`.
//! - symmetric(n): one-line permutation words over `0..n-1` in lexicographic
//!   order (identity `"01..."` first); `(p*q)(x) = p(q(x))`.
//! - quaternion8: `1 -1 i -i j -j k -k`.
//! - direct products: pair names `"a|b"`, index `i * |B| + j`.

use super::{FiniteGroup, GroupError};

/// Order cap for generated tables.
const MAX_ORDER: usize = 200;

/// The built-in group families.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BuiltinKind {
    Cyclic(usize),
    Dihedral(usize),
    Symmetric(usize),
    Quaternion8,
    DirectProduct(Box<BuiltinKind>, Box<BuiltinKind>),
}

/// Builds the named group as a validated Cayley table.
pub fn builtin_group(kind: &BuiltinKind) -> Result<FiniteGroup, GroupError> {
    match kind {
        BuiltinKind::Cyclic(n) => cyclic(*n),
        BuiltinKind::Dihedral(n) => dihedral(*n),
        BuiltinKind::Symmetric(n) => symmetric(*n),
        BuiltinKind::Quaternion8 => Ok(quaternion8()),
        BuiltinKind::DirectProduct(a, b) => {
            let a = builtin_group(a)?;
            let b = builtin_group(b)?;
            direct_product(&a, &b)
        }
    }
}

fn from_op(
    name: String,
    elements: Vec<String>,
    op: impl Fn(usize, usize) -> usize,
) -> Result<FiniteGroup, GroupError> {
    let n = elements.len();
    let rows = (0..n)
        .map(|i| (0..n).map(|j| op(i, j)).collect())
        .collect();
    FiniteGroup::from_table(name, elements, rows)
}

/// Cyclic group of order `n`, elements named `"0" .. "n-1"`.
pub fn cyclic(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > MAX_ORDER {
        return Err(GroupError::UnsupportedParameter {
            detail: format!("cyclic order must be in 1..={MAX_ORDER}, got {n}"),
        });
    }
    let elements = (0..n).map(|i| i.to_string()).collect();
    from_op(format!("z{n}"), elements, |i, j| (i + j) % n)
}

/// Dihedral group of order `2n`.
pub fn dihedral(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || 2 * n > MAX_ORDER {
        return Err(GroupError::UnsupportedParameter {
            detail: format!("dihedral parameter must be in 1..={}, got {n}", MAX_ORDER / 2),
        });
    }
    // Index i < n: rotation r^i; index n + i: reflection r^i * s.
    let mut elements: Vec<String> = (0..n).map(|i| format!("r{i}")).collect();
    elements.extend((0..n).map(|i| format!("s{i}")));
    let op = move |a: usize, b: usize| {
        let (i, fi) = if a < n { (a, false) } else { (a - n, true) };
        let (j, fj) = if b < n { (b, false) } else { (b - n, true) };
        // r^i s^fi * r^j s^fj, using s r^j = r^{-j} s.
        let rot = if fi { (i + n - j) % n } else { (i + j) % n };
        let flip = fi ^ fj;
        if flip {
            n + rot
        } else {
            rot
        }
    };
    from_op(format!("d{n}"), elements, op)
}

/// Symmetric group on `n` letters, `n <= 5`, elements as one-line words in
/// lexicographic order.
pub fn symmetric(n: usize) -> Result<FiniteGroup, GroupError> {
    if n == 0 || n > 5 {
        return Err(GroupError::UnsupportedParameter {
            detail: format!("symmetric degree must be in 1..=5, got {n}"),
        });
    }
    let perms = permutations(n);
    let elements: Vec<String> = perms
        .iter()
        .map(|p| p.iter().map(|d| d.to_string()).collect())
        .collect();
    let index_of = |p: &[usize]| perms.iter().position(|q| q == p).unwrap();
    let op = |i: usize, j: usize| {
        let (p, q) = (&perms[i], &perms[j]);
        let composed: Vec<usize> = (0..n).map(|x| p[q[x]]).collect();
        index_of(&composed)
    };
    from_op(format!("s{n}"), elements, op)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current: Vec<usize> = Vec::new();
    let mut used = vec![false; n];
    fn rec(n: usize, current: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n {
            out.push(current.clone());
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                current.push(v);
                rec(n, current, used, out);
                current.pop();
                used[v] = false;
            }
        }
    }
    rec(n, &mut current, &mut used, &mut out);
    out
}

/// The quaternion group of order 8.
pub fn quaternion8() -> FiniteGroup {
    let elements: Vec<String> = ["1", "-1", "i", "-i", "j", "-j", "k", "-k"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // Element index: axis (1, i, j, k) and sign; idx = axis * 2 + (sign < 0).
    let axis_mul = |a: usize, b: usize| -> (usize, bool) {
        // Returns (axis, negate) for the product of unit axes 0=1,1=i,2=j,3=k.
        match (a, b) {
            (0, x) => (x, false),
            (x, 0) => (x, false),
            (1, 1) => (0, true),
            (2, 2) => (0, true),
            (3, 3) => (0, true),
            (1, 2) => (3, false),
            (2, 1) => (3, true),
            (2, 3) => (1, false),
            (3, 2) => (1, true),
            (3, 1) => (2, false),
            (1, 3) => (2, true),
            _ => unreachable!(),
        }
    };
    let op = move |i: usize, j: usize| {
        let (ai, si) = (i / 2, i % 2 == 1);
        let (aj, sj) = (j / 2, j % 2 == 1);
        let (axis, neg) = axis_mul(ai, aj);
        let sign = si ^ sj ^ neg;
        axis * 2 + usize::from(sign)
    };
    from_op("q8".into(), elements, op).expect("quaternion table is a group")
}

/// Direct product of two groups on pair indices `i * |B| + j` with names
/// `"a|b"`.
pub fn direct_product(a: &FiniteGroup, b: &FiniteGroup) -> Result<FiniteGroup, GroupError> {
    let (na, nb) = (a.order(), b.order());
    if na * nb > MAX_ORDER {
        return Err(GroupError::UnsupportedParameter {
            detail: format!("direct product order {} exceeds {MAX_ORDER}", na * nb),
        });
    }
    let mut elements = Vec::with_capacity(na * nb);
    for i in 0..na {
        for j in 0..nb {
            elements.push(format!("{}|{}", a.element_name(i), b.element_name(j)));
        }
    }
    let op = |x: usize, y: usize| {
        let (xi, xj) = (x / nb, x % nb);
        let (yi, yj) = (y / nb, y % nb);
        a.mul(xi, yi) * nb + b.mul(xj, yj)
    };
    from_op(format!("{}x{}", a.name(), b.name()), elements, op)
}

/// The Klein four-group as `z2 x z2`, renamed `klein`.
pub fn klein_four() -> FiniteGroup {
    let z2 = cyclic(2).expect("z2 is valid");
    direct_product(&z2, &z2)
        .expect("klein four is valid")
        .with_name("klein")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_four() {
        let g = cyclic(4).unwrap();
        assert_eq!(g.order(), 4);
        assert_eq!(g.mul(3, 2), 1);
        assert!(g.is_abelian());
    }

    #[test]
    fn symmetric_three_is_nonabelian() {
        let g = symmetric(3).unwrap();
        assert_eq!(g.order(), 6);
        assert!(!g.is_abelian());
        assert_eq!(g.element_name(g.identity()), "012");
    }

    #[test]
    fn klein_four_every_element_self_inverse() {
        let g = klein_four();
        assert_eq!(g.order(), 4);
        for i in 0..4 {
            assert_eq!(g.inverse(i), i);
        }
    }

    #[test]
    fn dihedral_relations() {
        let g = dihedral(4).unwrap();
        assert_eq!(g.order(), 8);
        let r1 = g.resolve("r1").unwrap();
        let s0 = g.resolve("s0").unwrap();
        // s * r = r^{-1} * s
        let lhs = g.mul(s0, r1);
        let rhs = g.mul(g.inverse(r1), s0);
        assert_eq!(lhs, rhs);
        assert!(!g.is_abelian());
    }

    #[test]
    fn quaternion_relations() {
        let g = quaternion8();
        let i = g.resolve("i").unwrap();
        let j = g.resolve("j").unwrap();
        let k = g.resolve("k").unwrap();
        let minus_k = g.resolve("-k").unwrap();
        assert_eq!(g.mul(i, j), k);
        assert_eq!(g.mul(j, i), minus_k);
        assert_eq!(g.element_order(i), 4);
        assert_eq!(g.order_census(), vec![(1, 1), (2, 1), (4, 6)]);
    }

    #[test]
    fn symmetric_five_order() {
        assert_eq!(symmetric(5).unwrap().order(), 120);
        assert!(symmetric(6).is_err());
    }

    #[test]
    fn builtin_kind_dispatch() {
        let klein = builtin_group(&BuiltinKind::DirectProduct(
            Box::new(BuiltinKind::Cyclic(2)),
            Box::new(BuiltinKind::Cyclic(2)),
        ))
        .unwrap();
        assert_eq!(klein.order(), 4);
        assert_eq!(klein.element_name(3), "1|1");
        assert!(builtin_group(&BuiltinKind::Cyclic(0)).is_err());
    }
}
