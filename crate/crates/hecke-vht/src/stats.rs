//! Joint crossing/nesting distributions and the one-stop verification
//! suite that re-derives every structural fact at a given size.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::linked::{crossing_nesting_oracle, enumerate_linked, EndpointSets, LinkedPartition};
use crate::vacillating::{enumerate_vhts, phi, phi_inverse, psi};

/// How `(cr, ne)` distributes over the linked partitions of `[n]`,
/// optionally restricted to prescribed left and right endpoint sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JointDistribution {
    n: usize,
    restriction: Option<EndpointSets>,
    counts: BTreeMap<(usize, usize), u64>,
}

impl JointDistribution {
    /// Assembles a distribution from explicit counts; mostly useful for
    /// parsing and for constructing counterexamples in tests.
    pub fn from_counts(
        n: usize,
        restriction: Option<EndpointSets>,
        counts: BTreeMap<(usize, usize), u64>,
    ) -> Result<JointDistribution> {
        check_restriction(n, restriction.as_ref())?;
        for &(i, j) in counts.keys() {
            let got = i.max(j);
            if got > n {
                return Err(Error::SizeCap {
                    what: "statistic key",
                    max: n,
                    got,
                });
            }
        }
        Ok(JointDistribution {
            n,
            restriction,
            counts,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn restriction(&self) -> Option<&EndpointSets> {
        self.restriction.as_ref()
    }

    pub fn counts(&self) -> &BTreeMap<(usize, usize), u64> {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// True when swapping the two statistics leaves every count alone.
    pub fn is_symmetric(&self) -> bool {
        self.counts
            .iter()
            .all(|(&(i, j), &c)| self.counts.get(&(j, i)).copied().unwrap_or(0) == c)
    }

    /// An aligned matrix with crossing numbers as rows and nesting numbers
    /// as columns; zero entries print as dots.
    pub fn render_matrix(&self) -> String {
        if self.counts.is_empty() {
            return "(no objects)".into();
        }
        let max_i = self.counts.keys().map(|&(i, _)| i).max().unwrap();
        let max_j = self.counts.keys().map(|&(_, j)| j).max().unwrap();
        let cell = |i: usize, j: usize| match self.counts.get(&(i, j)) {
            Some(c) => c.to_string(),
            None => ".".into(),
        };
        let mut widths = vec![0usize; max_j + 1];
        for (j, w) in widths.iter_mut().enumerate() {
            *w = (0..=max_i)
                .map(|i| cell(i, j).len())
                .max()
                .unwrap()
                .max(j.to_string().len());
        }
        let label_width = "cr\\ne".len().max(max_i.to_string().len());
        let mut out = format!("{:<label_width$}", "cr\\ne");
        for (j, &w) in widths.iter().enumerate() {
            out.push_str(&format!(" {j:>w$}"));
        }
        for i in 0..=max_i {
            out.push('\n');
            out.push_str(&format!("{i:<label_width$}"));
            for (j, &w) in widths.iter().enumerate() {
                out.push_str(&format!(" {:>w$}", cell(i, j)));
            }
        }
        out
    }
}

impl fmt::Display for JointDistribution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        if let Some((s, t)) = &self.restriction {
            write!(f, "; S={}; T={}", fmt_set(s), fmt_set(t))?;
        }
        for (&(i, j), &c) in &self.counts {
            write!(f, "\n{i},{j},{c}")?;
        }
        Ok(())
    }
}

pub(crate) fn fmt_set(s: &BTreeSet<usize>) -> String {
    if s.is_empty() {
        return "-".into();
    }
    let strs: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    strs.join(",")
}

fn check_restriction(n: usize, restriction: Option<&EndpointSets>) -> Result<()> {
    if let Some((s, t)) = restriction {
        for &v in s.iter().chain(t) {
            if v < 1 || v > n {
                return Err(Error::SizeCap {
                    what: "endpoint vertex",
                    max: n,
                    got: v,
                });
            }
        }
    }
    Ok(())
}

/// Tallies `(cr, ne)` over all linked partitions of `[n]`, or over those
/// with exactly the given endpoint sets. The full sweep is capped at
/// `n <= 8`, a restricted one at `n <= 9`.
pub fn joint_distribution(
    n: usize,
    restriction: Option<EndpointSets>,
) -> Result<JointDistribution> {
    let cap = if restriction.is_some() { 9 } else { 8 };
    if n > cap {
        return Err(Error::SizeCap {
            what: "joint_distribution n",
            max: cap,
            got: n,
        });
    }
    check_restriction(n, restriction.as_ref())?;
    let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
    for p in enumerate_linked(n)? {
        if let Some((s, t)) = &restriction {
            let (ps, pt) = p.endpoints();
            if &ps != s || &pt != t {
                continue;
            }
        }
        *counts.entry(p.crossing_nesting()).or_insert(0) += 1;
    }
    Ok(JointDistribution {
        n,
        restriction,
        counts,
    })
}

/// One verification check: a name, a verdict, and on failure a serialized
/// witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub counterexample: Option<String>,
}

/// The outcome of [`verify_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub n: usize,
    pub checks: Vec<Check>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={}", self.n)?;
        for check in &self.checks {
            write!(
                f,
                "\n{} {}",
                check.name,
                if check.passed { "PASS" } else { "FAIL" }
            )?;
            if let Some(cex) = &check.counterexample {
                // keep one line per check even when the witness is multi-line
                write!(f, " {}", crate::text::escape_line(cex))?;
            }
        }
        Ok(())
    }
}

/// First `len` large Schröder numbers, generated by their recurrence
/// rather than hardcoded: `(m+1) R_m = 3(2m-1) R_{m-1} - (m-2) R_{m-2}`.
fn large_schroeder(len: usize) -> Vec<u64> {
    let mut r = vec![1u64, 2];
    for m in 2..len {
        let m64 = m as u64;
        r.push((3 * (2 * m64 - 1) * r[m - 1] - (m64 - 2) * r[m - 2]) / (m64 + 1));
    }
    r.truncate(len);
    r
}

/// Bell number via restricted growth strings: `a_1 = 0` and each later
/// letter is at most one more than the maximum so far. Counts set
/// partitions without touching any of the arc machinery.
fn bell_by_growth_strings(n: usize) -> u64 {
    fn go(remaining: usize, max_used: usize) -> u64 {
        if remaining == 0 {
            return 1;
        }
        (0..=max_used + 1)
            .map(|choice| go(remaining - 1, max_used.max(choice)))
            .sum()
    }
    if n == 0 {
        1
    } else {
        go(n - 1, 0)
    }
}

/// Re-derives every structural statement at size `n` (capped at 6, where
/// the exhaustive sweeps stay comfortably fast):
///
/// * `bijection`: the independently enumerated vacillating sequences map
///   bijectively onto all linked partitions, with both compositions the
///   identity;
/// * `theorem-key`: sequence extrema equal the brute-force crossing and
///   nesting numbers, and the fast statistics agree with the oracle;
/// * `symmetry`: the unrestricted distribution and every nonempty
///   endpoint-restricted distribution are symmetric;
/// * `symmetry-front`: so is the aggregate over front representations;
/// * `psi`: conjugation is an involution that swaps the two statistics and
///   preserves both endpoint sets;
/// * `factorial`, `schroeder`, `bell`: the counting identities.
pub fn verify_suite(n: usize) -> Result<VerificationReport> {
    if !(1..=6).contains(&n) {
        return Err(Error::SizeCap {
            what: "verify_suite n",
            max: 6,
            got: n,
        });
    }
    let vhts = enumerate_vhts(n)?;
    let all: Vec<LinkedPartition> = enumerate_linked(n)?.collect();
    let all_set: BTreeSet<&LinkedPartition> = all.iter().collect();
    let mut checks = Vec::new();
    let mut push = |name: &str, counterexample: Option<String>| {
        checks.push(Check {
            name: name.into(),
            passed: counterexample.is_none(),
            counterexample,
        });
    };

    // bijection
    push("bijection", {
        let mut seen = BTreeSet::new();
        let mut cex = None;
        for v in &vhts {
            let p = phi(v);
            if !all_set.contains(&p) || !seen.insert(p.clone()) {
                cex = Some(format!("phi not injective into the universe at {v}"));
                break;
            }
            if &phi_inverse(&p) != v {
                cex = Some(format!("phi_inverse . phi misses the identity at {v}"));
                break;
            }
        }
        if cex.is_none() && seen.len() != all.len() {
            cex = Some(format!(
                "phi reaches {} of {} linked partitions",
                seen.len(),
                all.len()
            ));
        }
        if cex.is_none() {
            for p in &all {
                if &phi(&phi_inverse(p)) != p {
                    cex = Some(format!("phi . phi_inverse misses the identity at {p}"));
                    break;
                }
            }
        }
        cex
    });

    // theorem-key
    push("theorem-key", {
        let mut cex = None;
        for p in &all {
            let oracle = crossing_nesting_oracle(p)?;
            if p.crossing_nesting() != oracle {
                cex = Some(format!("fast statistics disagree with the oracle at {p}"));
                break;
            }
            if phi_inverse(p).extrema() != oracle {
                cex = Some(format!("sequence extrema differ from (cr, ne) at {p}"));
                break;
            }
        }
        cex
    });

    // symmetry, unrestricted and per endpoint pair
    push("symmetry", {
        let full = joint_distribution(n, None)?;
        if !full.is_symmetric() {
            Some(format!("unrestricted distribution: {full}"))
        } else {
            let mut grouped: BTreeMap<_, BTreeMap<(usize, usize), u64>> = BTreeMap::new();
            for p in &all {
                *grouped
                    .entry(p.endpoints())
                    .or_default()
                    .entry(p.crossing_nesting())
                    .or_insert(0) += 1;
            }
            let mut cex = None;
            for ((s, t), counts) in grouped {
                let d = JointDistribution::from_counts(n, Some((s, t)), counts)?;
                if !d.is_symmetric() {
                    cex = Some(format!("restricted distribution: {d}"));
                    break;
                }
            }
            cex
        }
    });

    // symmetry-front
    push("symmetry-front", {
        let mut counts: BTreeMap<(usize, usize), u64> = BTreeMap::new();
        for p in &all {
            if p.is_front_representation() {
                *counts.entry(p.crossing_nesting()).or_insert(0) += 1;
            }
        }
        let d = JointDistribution::from_counts(n, None, counts)?;
        if d.is_symmetric() {
            None
        } else {
            Some(format!("front representation aggregate: {d}"))
        }
    });

    // psi
    push("psi", {
        let mut cex = None;
        for p in &all {
            let q = psi(p);
            let (cr, ne) = p.crossing_nesting();
            if psi(&q) != *p {
                cex = Some(format!("psi . psi misses the identity at {p}"));
                break;
            }
            if q.crossing_nesting() != (ne, cr) {
                cex = Some(format!("psi fails to swap the statistics at {p}"));
                break;
            }
            if q.endpoints() != p.endpoints() {
                cex = Some(format!("psi moves the endpoint sets of {p}"));
                break;
            }
        }
        cex
    });

    // factorial
    push("factorial", {
        let expected: u64 = (1..=n as u64).product();
        if all.len() as u64 == expected && vhts.len() as u64 == expected {
            None
        } else {
            Some(format!(
                "expected {expected}, found {} linked partitions and {} sequences",
                all.len(),
                vhts.len()
            ))
        }
    });

    // schroeder: noncrossing linked partitions of [m+1] number R_m
    push("schroeder", {
        let schroeder = large_schroeder(n);
        let mut cex = None;
        for (m, &expected) in schroeder.iter().enumerate() {
            let got = enumerate_linked(m + 1)?
                .filter(|p| p.crossing_nesting().0 <= 1)
                .count() as u64;
            if got != expected {
                cex = Some(format!(
                    "noncrossing count on [{}] is {got}, recurrence gives {expected}",
                    m + 1
                ));
                break;
            }
        }
        cex
    });

    // bell: front representations of [m] number B_m
    push("bell", {
        let mut cex = None;
        for m in 1..=n {
            let expected = bell_by_growth_strings(m);
            let got = enumerate_linked(m)?
                .filter(|p| p.is_front_representation())
                .count() as u64;
            if got != expected {
                cex = Some(format!(
                    "front representation count on [{m}] is {got}, growth strings give {expected}"
                ));
                break;
            }
        }
        cex
    });

    Ok(VerificationReport { n, checks })
}
