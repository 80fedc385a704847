//! Generating polynomials of statistic pairs over Dyck paths.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exec::{fold_paths, Config};
use crate::path::DyckPath;
use crate::poly::{BivariatePolynomial, Exponent, Variable};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PolynomialFamily {
    /// `Σ q^area t^dinv`
    CDinv,
    /// `Σ q^area t^bounce`
    CBounce,
    /// `Σ q^depth t^ddinv`
    CDepthDdinv,
    /// `Σ q^area t^depth`
    F,
    /// `Σ q^dinv t^ddinv`
    G,
    /// `Σ q^IR t^RET`, the Tutte polynomial of the Catalan matroid.
    Tutte,
    /// `(C − F) / ((1 − q)(1 − t))`
    M,
}

impl PolynomialFamily {
    pub const ALL: [PolynomialFamily; 7] = [
        PolynomialFamily::CDinv,
        PolynomialFamily::CBounce,
        PolynomialFamily::CDepthDdinv,
        PolynomialFamily::F,
        PolynomialFamily::G,
        PolynomialFamily::Tutte,
        PolynomialFamily::M,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            PolynomialFamily::CDinv => "C_dinv",
            PolynomialFamily::CBounce => "C_bounce",
            PolynomialFamily::CDepthDdinv => "C_depth_ddinv",
            PolynomialFamily::F => "F",
            PolynomialFamily::G => "G",
            PolynomialFamily::Tutte => "Tutte",
            PolynomialFamily::M => "M",
        }
    }

    /// The `(q, t)` exponents one path contributes, for the families defined
    /// by a statistic pair.
    pub fn statistics(self, path: &DyckPath) -> Result<Option<Exponent>> {
        Ok(Some(match self {
            PolynomialFamily::CDinv => {
                let (seq, area) = path.area_stats();
                (area, crate::path::pair_statistic(&seq))
            }
            PolynomialFamily::CBounce => (path.area(), path.bounce().value),
            PolynomialFamily::CDepthDdinv => {
                let (seq, depth) = path.depth_stats()?;
                (depth, crate::path::pair_statistic(&seq))
            }
            PolynomialFamily::F => (path.area(), path.depth()?),
            PolynomialFamily::G => (path.dinv(), path.ddinv()?),
            PolynomialFamily::Tutte => path.rise_return()?,
            PolynomialFamily::M => return Ok(None),
        }))
    }
}

impl fmt::Display for PolynomialFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for PolynomialFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        let family = match key.as_str() {
            "c" | "c_dinv" => PolynomialFamily::CDinv,
            "c_bounce" => PolynomialFamily::CBounce,
            "c_depth_ddinv" | "c_depth" => PolynomialFamily::CDepthDdinv,
            "f" => PolynomialFamily::F,
            "g" => PolynomialFamily::G,
            "tutte" => PolynomialFamily::Tutte,
            "m" => PolynomialFamily::M,
            _ => return Err(Error::UnknownFamily(s.to_string())),
        };
        Ok(family)
    }
}

/// Fails with [`Error::UnsupportedSize`] above the configured semilength cap.
pub fn check_semilength(n: usize, config: &Config) -> Result<()> {
    let cap = config.limits.max_semilength;
    if n > cap {
        return Err(Error::UnsupportedSize {
            what: "semilength",
            requested: n,
            cap,
        });
    }
    Ok(())
}

type Counts = HashMap<Exponent, u64>;

fn merge(mut a: Counts, b: Counts) -> Counts {
    if a.len() < b.len() {
        return merge(b, a);
    }
    for (k, v) in b {
        *a.entry(k).or_default() += v;
    }
    a
}

/// `Σ_{π ∈ D_n} q^{s(π)} t^{u(π)}` for an arbitrary statistic pair.
pub fn sum_over_paths<F>(n: usize, config: &Config, stats: F) -> Result<BivariatePolynomial>
where
    F: Fn(&DyckPath) -> Result<Exponent> + Sync + Send,
{
    check_semilength(n, config)?;
    let counts = fold_paths(
        n,
        config.strategy,
        || Ok(Counts::new()),
        |acc: Result<Counts>, p| {
            let mut acc = acc?;
            *acc.entry(stats(p)?).or_default() += 1;
            Ok(acc)
        },
        |a, b| Ok(merge(a?, b?)),
    )?;
    Ok(BivariatePolynomial::from_terms(counts))
}

pub fn family(name: PolynomialFamily, n: usize) -> Result<BivariatePolynomial> {
    family_with(name, n, &Config::default())
}

pub fn family_with(name: PolynomialFamily, n: usize, config: &Config) -> Result<BivariatePolynomial> {
    match name {
        PolynomialFamily::M => m_poly_with(n, config),
        PolynomialFamily::Tutte if n == 0 => Err(Error::EmptyPath),
        _ => sum_over_paths(n, config, |p| {
            Ok(name.statistics(p)?.expect("statistic-pair family"))
        }),
    }
}

/// `F_n` from `F_0 = 1`, `F_n = Σ_{k=1}^{n} q^{k−1} t^{n−k} F_{k−1} F_{n−k}`.
pub fn f_recursive(n: usize) -> BivariatePolynomial {
    let mut table: Vec<BivariatePolynomial> = vec![BivariatePolynomial::one()];
    for m in 1..=n {
        let next = (1..=m)
            .map(|k| {
                let shift = BivariatePolynomial::monomial(1, (k - 1) as u32, (m - k) as u32);
                &(&shift * &table[k - 1]) * &table[m - k]
            })
            .sum();
        table.push(next);
    }
    table.swap_remove(n)
}

pub fn m_poly(n: usize) -> Result<BivariatePolynomial> {
    m_poly_with(n, &Config::default())
}

pub fn m_poly_with(n: usize, config: &Config) -> Result<BivariatePolynomial> {
    let c = family_with(PolynomialFamily::CDinv, n, config)?;
    let f = family_with(PolynomialFamily::F, n, config)?;
    (&c - &f)
        .div_one_minus(Variable::Q)?
        .div_one_minus(Variable::T)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetryReport {
    pub symmetric: bool,
    /// Smallest stored exponent `(a, b)` whose coefficient differs from that
    /// of `(b, a)`.
    pub witness: Option<Exponent>,
}

pub fn symmetry_report(p: &BivariatePolynomial) -> SymmetryReport {
    let witness = p
        .iter()
        .map(|(e, _)| e)
        .find(|&(a, b)| p.coeff(a, b) != p.coeff(b, a));
    SymmetryReport {
        symmetric: witness.is_none(),
        witness,
    }
}

/// True when every coefficient of `q^p t^r` with `p, r ≥ 1` depends only on
/// `p + r` (absent terms count as zero).
pub fn stump_holds(p: &BivariatePolynomial) -> bool {
    let max = p.iter().map(|((a, b), _)| a + b).max().unwrap_or(0);
    (2..=max).all(|s| {
        let first = p.coeff(1, s - 1);
        (2..s).all(|a| p.coeff(a, s - a) == first)
    })
}

pub fn stump_check(n: usize, config: &Config) -> Result<bool> {
    Ok(stump_holds(&family_with(PolynomialFamily::Tutte, n, config)?))
}
