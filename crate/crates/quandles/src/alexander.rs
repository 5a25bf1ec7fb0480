//! Alexander quandles over cyclic groups, Q(C_n, x ↦ ax), and Nelson's
//! isomorphism criterion. The cautionary example: conjugacy classes of
//! Aut(C_n) (singletons, the group is abelian) can be strictly finer than
//! quandle-isomorphism classes.

use num_integer::Integer;

use crate::quandle::FiniteQuandle;
use crate::Error;

fn check_unit(n: u64, a: u64) -> Result<(), Error> {
    if n < 2 || a == 0 || a >= n || a.gcd(&n) != 1 {
        return Err(Error::NotAUnit { a, n });
    }
    Ok(())
}

/// Q(C_n, a): table[x][y] = (x + a(y − x)) mod n.
pub fn alexander_quandle(n: u64, a: u64) -> Result<FiniteQuandle, Error> {
    check_unit(n, a)?;
    let table = (0..n)
        .map(|x| {
            (0..n)
                .map(|y| ((x + a * ((n + y - x) % n)) % n) as usize)
                .collect()
        })
        .collect();
    let q = FiniteQuandle::from_table(table);
    debug_assert!(q.check_axioms().is_ok());
    Ok(q)
}

/// N(n, a) = n / gcd(n, 1 − a), with 1 − a reduced mod n.
pub fn nelson_modulus(n: u64, a: u64) -> u64 {
    let one_minus_a = (n + 1 - a % n) % n;
    n / n.gcd(&one_minus_a)
}

/// Nelson's criterion: Q(C_n, a) ≅ Q(C_n, b) iff N(n,a) = N(n,b) and
/// a ≡ b (mod N(n,a)).
pub fn nelson_equivalent(n: u64, a: u64, b: u64) -> Result<bool, Error> {
    check_unit(n, a)?;
    check_unit(n, b)?;
    let na = nelson_modulus(n, a);
    Ok(na == nelson_modulus(n, b) && a % na == b % na)
}

/// Units of C_n grouped into quandle-isomorphism classes, each class sorted,
/// classes ordered by smallest member.
pub fn classify_cyclic(n: u64) -> Result<Vec<Vec<u64>>, Error> {
    assert!(n >= 2);
    let units: Vec<u64> = (1..n).filter(|a| a.gcd(&n) == 1).collect();
    let mut classes: Vec<Vec<u64>> = Vec::new();
    for &a in &units {
        match classes
            .iter_mut()
            .find(|c| nelson_equivalent(n, c[0], a).unwrap())
        {
            Some(c) => c.push(a),
            None => classes.push(vec![a]),
        }
    }
    Ok(classes)
}
