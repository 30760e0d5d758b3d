use super::{ExpansionSpec, Territory, TerritoryError};

/// `t(t-3)^m`, the perimeter of `T_m`; `None` on overflow.
pub fn canonical_perimeter(t: usize, m: usize) -> Option<u64> {
    let mut p = t as u64;
    for _ in 0..m {
        p = p.checked_mul(t as u64 - 3)?;
    }
    Some(p)
}

/// Smallest-`s2` pair with `(2t-6)s1 + (3t-10)s2 = λ - λ'` and
/// `2(s1 + s2) <= λ'`, if any.
pub fn expansion_params(t: usize, from: u64, to: u64) -> Option<(u64, u64)> {
    if to < from || t < 5 {
        return None;
    }
    let (a, b) = (2 * t as u64 - 6, 3 * t as u64 - 10);
    let diff = to - from;
    (0..=diff / b).find_map(|s2| {
        let rest = diff - s2 * b;
        let s1 = rest / a;
        (rest.is_multiple_of(a) && 2 * (s1 + s2) <= from).then_some((s1, s2))
    })
}

/// Intermediate integers of the closed-form solution for large perimeters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FormulaTrace {
    pub d: u64,
    pub q: u64,
    pub r: u64,
}

/// How to reach a perimeter: expand `T_m` at `s1` plain and `s2` gadget
/// positions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PerimeterSolution {
    pub t: usize,
    pub lambda: u64,
    pub m: usize,
    pub s1: u64,
    pub s2: u64,
    /// Present when the closed form (`λ >= t³`) was used.
    pub formula: Option<FormulaTrace>,
}

impl PerimeterSolution {
    pub fn base_perimeter(&self) -> u64 {
        canonical_perimeter(self.t, self.m).expect("solution levels fit in u64")
    }

    /// Both feasibility conditions for expanding `T_m` to `λ`.
    pub fn is_consistent(&self) -> bool {
        let t = self.t as u64;
        let base = self.base_perimeter();
        self.lambda >= base
            && (2 * t - 6) * self.s1 + (3 * t - 10) * self.s2 == self.lambda - base
            && 2 * (self.s1 + self.s2) <= base
    }
}

pub fn solve_perimeter(t: usize, lambda: u64) -> Result<PerimeterSolution, TerritoryError> {
    if t < 5 {
        return Err(TerritoryError::TooSmallT(t));
    }
    let tt = t as u64;
    let (a, b) = (2 * tt - 6, 3 * tt - 10);
    if lambda.is_multiple_of(2) && tt.checked_pow(3).is_some_and(|cube| lambda >= cube) {
        let mut m = 0;
        while canonical_perimeter(t, m + 1).is_some_and(|p| p <= lambda - a * b) {
            m += 1;
        }
        let d = (lambda - canonical_perimeter(t, m).unwrap()) / 2;
        let (q, r) = (2 * d / a, 2 * d % a);
        let s1 = 3 * d - b * (q + 1);
        let s2 = a * (q + 1) - 2 * d;
        let sol = PerimeterSolution {
            t,
            lambda,
            m,
            s1,
            s2,
            formula: Some(FormulaTrace { d, q, r }),
        };
        debug_assert!(sol.is_consistent());
        return Ok(sol);
    }
    let mut m = 0;
    while let Some(base) = canonical_perimeter(t, m).filter(|&p| p <= lambda) {
        if let Some((s1, s2)) = expansion_params(t, base, lambda) {
            return Ok(PerimeterSolution {
                t,
                lambda,
                m,
                s1,
                s2,
                formula: None,
            });
        }
        m += 1;
    }
    Err(TerritoryError::InfeasiblePerimeter {
        t,
        perimeter: lambda,
    })
}

/// A canonical territory whose boundary has exactly `lambda` vertices.
pub fn canonical_with_perimeter(
    t: usize,
    lambda: u64,
) -> Result<(Territory, PerimeterSolution), TerritoryError> {
    let sol = solve_perimeter(t, lambda)?;
    let base = Territory::canonical(t, sol.m)?;
    let spec = ExpansionSpec::evenly_spaced(base.perimeter(), sol.s1 as usize, sol.s2 as usize);
    let terr = base.expand(&spec)?;
    debug_assert_eq!(terr.perimeter() as u64, lambda);
    Ok((terr, sol))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn params_examples() {
        assert_eq!(expansion_params(5, 10, 24), Some((1, 2)));
        assert_eq!(expansion_params(5, 10, 11), None);
        assert_eq!(expansion_params(5, 10, 10), Some((0, 0)));
        assert_eq!(expansion_params(5, 10, 9), None);
    }

    #[test]
    fn params_prefer_fewer_gadgets() {
        // 20 = 4*5 = 5*4: the gadget-free split wins.
        assert_eq!(expansion_params(5, 20, 40), Some((5, 0)));
    }

    #[test]
    fn closed_form_examples() {
        let s = solve_perimeter(5, 126).unwrap();
        assert_eq!((s.m, s.s1, s.s2), (4, 9, 2));
        assert_eq!(s.formula, Some(FormulaTrace { d: 23, q: 11, r: 2 }));
        let s = solve_perimeter(5, 160).unwrap();
        assert_eq!((s.m, s.s1, s.s2), (4, 15, 4));
        assert_eq!(s.formula, Some(FormulaTrace { d: 40, q: 20, r: 0 }));
    }

    #[test]
    fn built_perimeters_match() {
        for lambda in [126, 160] {
            let (terr, sol) = canonical_with_perimeter(5, lambda).unwrap();
            assert_eq!(terr.perimeter() as u64, lambda);
            assert!(sol.is_consistent());
            assert!(terr.validate().is_valid());
        }
    }

    #[test]
    fn small_and_odd_perimeters() {
        assert_eq!(
            solve_perimeter(5, 16),
            Err(TerritoryError::InfeasiblePerimeter {
                t: 5,
                perimeter: 16
            })
        );
        assert!(solve_perimeter(5, 4).is_err());
        assert!(solve_perimeter(5, 7).is_err());
        // Odd perimeters fall through to the exhaustive scan.
        let s = solve_perimeter(5, 127).unwrap();
        assert!(s.formula.is_none() && s.is_consistent());
        assert_eq!(solve_perimeter(5, 5).unwrap().m, 0);
        let s = solve_perimeter(5, 14).unwrap();
        assert_eq!((s.m, s.s1, s.s2, s.formula), (0, 1, 1, None));
        let s = solve_perimeter(5, 10).unwrap();
        assert_eq!((s.m, s.s1, s.s2), (0, 0, 1));
    }
}
