//! Exact predicates for each result of the cevian framework, a seeded
//! configuration sampler and a suite runner.

mod checks;
mod config;
mod sampler;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{GeometryError, Result};

pub use config::{build_configuration, family, Configuration};
pub use sampler::{sample_configuration, sample_configurations, Stratum};

macro_rules! registry {
    ($($id:ident),+ $(,)?) => {
        /// Registry of checkable results.
        #[allow(non_camel_case_types)]
        #[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
        pub enum TheoremId {
            $($id),+
        }

        impl TheoremId {
            pub const ALL: &'static [TheoremId] = &[$(TheoremId::$id),+];

            pub fn as_str(self) -> &'static str {
                match self {
                    $(TheoremId::$id => stringify!($id)),+
                }
            }
        }
    };
}

registry!(
    T2_1, C2_2, T2_3, T2_4, T2_5, C2_6, T2_7, L3_1, T3_2, C3_3, L3_4, PI_INV, T3_5, T3_6, T3_7,
    T3_8, T3_9, C3_10, T3_11, R3_11, T3_12, T3_13, C3_14, F1_F2,
);

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for TheoremId {
    type Err = GeometryError;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        TheoremId::ALL
            .iter()
            .copied()
            .find(|id| id.as_str().eq_ignore_ascii_case(s))
            .ok_or_else(|| GeometryError::UnknownTheoremId(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skipped => "SKIPPED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub status: Status,
    /// Residue description on failure, reason on skip.
    pub witness: Option<String>,
    pub fingerprint: Option<(u64, usize)>,
}

impl fmt::Display for TheoremReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.theorem_id, self.status)?;
        if let Some(w) = &self.witness {
            write!(f, " [{w}]")?;
        }
        if let Some((seed, index)) = self.fingerprint {
            write!(f, " (seed {seed}, index {index})")?;
        }
        Ok(())
    }
}

/// Evaluates one predicate. A construction error inside a check counts as
/// a failure and is reported in the witness.
pub fn check(id: TheoremId, cfg: &Configuration) -> TheoremReport {
    let (status, witness) = match checks::evaluate(id, cfg) {
        Ok(checks::Verdict::Pass) => (Status::Pass, None),
        Ok(checks::Verdict::Fail(w)) => (Status::Fail, Some(w)),
        Ok(checks::Verdict::Skip(w)) => (Status::Skipped, Some(w)),
        Err(e) => (Status::Fail, Some(format!("construction error: {e}"))),
    };
    TheoremReport {
        theorem_id: id,
        status,
        witness,
        fingerprint: cfg.fingerprint,
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

impl SuiteSummary {
    pub fn of(reports: &[TheoremReport]) -> Self {
        let mut s = Self::default();
        for r in reports {
            match r.status {
                Status::Pass => s.pass += 1,
                Status::Fail => s.fail += 1,
                Status::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn total(&self) -> usize {
        self.pass + self.fail + self.skipped
    }
}

impl fmt::Display for SuiteSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} PASS, {} FAIL, {} SKIPPED",
            self.pass, self.fail, self.skipped
        )
    }
}

/// Samples `n` configurations and checks every id in `ids` (all when
/// `None`) on each. Reports are ordered by configuration index, then by id.
pub fn run_suite(
    seed: u64,
    n: usize,
    stratum: Stratum,
    ids: Option<&[TheoremId]>,
) -> Result<Vec<TheoremReport>> {
    let ids = ids.unwrap_or(TheoremId::ALL);
    let per_config: Vec<Result<Vec<TheoremReport>>> = (0..n)
        .into_par_iter()
        .map(|index| {
            let cfg = sample_configuration(seed, index, stratum)?;
            Ok(ids.iter().map(|&id| check(id, &cfg)).collect())
        })
        .collect();
    let mut out = Vec::with_capacity(n * ids.len());
    for r in per_config {
        out.extend(r?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine::AffineMap;
    use crate::projective::{join, meet, midpoint, HPoint};
    use crate::scalar::{int, ratio};
    use crate::triangle::{Bary, DegeneracyClass, Triangle};

    fn t0() -> Triangle {
        Triangle::from_int_vertices([(0, 0), (1, 0), (0, 1)]).unwrap()
    }

    fn cfg(u: i64, v: i64, w: i64) -> Configuration {
        let t = t0();
        build_configuration(&t, &t.bary_to_point(&Bary::from_ints(u, v, w))).unwrap()
    }

    #[test]
    fn isotomcomplement_pair() {
        let c = cfg(1, 2, 3);
        assert_eq!(c.ctx.bary(&c.q), Bary::from_ints(5, 8, 9));
        assert_eq!(c.ctx.bary(&c.q_prime), Bary::from_ints(5, 4, 3));
        assert_eq!(c.q, HPoint::ordinary(ratio(4, 11), ratio(9, 22)));
    }

    #[test]
    fn centroid_collapses_families() {
        let c = cfg(1, 1, 1);
        let medial = c.ctx.medial().vertices().clone();
        for tr in c.traces.iter().flatten() {
            assert_eq!(tr, &medial);
        }
        assert_eq!(c.t_p, AffineMap::homothety(&c.g, &ratio(-1, 2)).unwrap());
    }

    #[test]
    fn sideline_point_rejected() {
        let t = t0();
        let err = build_configuration(&t, &t.bary_to_point(&Bary::from_ints(0, 1, 2))).unwrap_err();
        assert_eq!(
            err,
            GeometryError::HypothesisViolated(DegeneracyClass::ON_SIDELINE)
        );
        let err =
            build_configuration(&t, &t.bary_to_point(&Bary::from_ints(1, -1, 3))).unwrap_err();
        assert_eq!(
            err,
            GeometryError::HypothesisViolated(DegeneracyClass::ON_ANTICOMPLEMENTARY_SIDE)
        );
    }

    #[test]
    fn internal_consistency() {
        let c = cfg(1, 2, 3);
        let t = c.triangle();
        let x = c.x.clone().unwrap();
        let d5 = meet(&join(t.a(), &x).unwrap(), &join(t.b(), t.c()).unwrap()).unwrap();
        assert_eq!(c.traces[family::X].as_ref().unwrap()[0], d5);
        let def = c.def();
        assert_eq!(
            c.t_p.apply(&c.ctx.medial().vertices()[0]),
            midpoint(&def[1], &def[2]).unwrap()
        );
        assert_eq!(c.side_midpoints[0], midpoint(&def[1], &def[2]).unwrap());
        assert_eq!(
            c.half_turn_centers[0],
            HPoint::ordinary(ratio(1, 4), ratio(1, 4))
        );
    }

    #[test]
    fn fixed_point_of_t_p() {
        let r = check(TheoremId::T3_2, &cfg(1, 2, 3));
        assert_eq!(r.status, Status::Pass);
        let r = check(TheoremId::T3_2, &cfg(-2, 5, 4));
        assert_eq!(r.status, Status::Pass, "{r}");
    }

    #[test]
    fn steiner_gates() {
        let c = cfg(2, 2, -1);
        assert!(c.on_steiner());
        assert_eq!(check(TheoremId::T3_11, &c).status, Status::Skipped);
        assert_eq!(check(TheoremId::R3_11, &c).status, Status::Pass);
        assert_eq!(check(TheoremId::T3_13, &c).status, Status::Pass);
        let third = ratio(1, 3);
        let k_inv =
            AffineMap::homothety(&HPoint::ordinary(third.clone(), third), &int(-2)).unwrap();
        assert_eq!(c.s, k_inv);
        assert_eq!(*k_inv.linear(), [[int(-2), int(0)], [int(0), int(-2)]]);
        assert_eq!(*k_inv.translation(), [int(1), int(1)]);
    }

    #[test]
    fn every_check_passes_on_a_generic_point() {
        let c = cfg(1, 2, 3);
        for &id in TheoremId::ALL {
            let r = check(id, &c);
            assert_ne!(r.status, Status::Fail, "{r}");
        }
    }

    #[test]
    fn failure_carries_witness() {
        let mut c = cfg(1, 2, 3);
        c.q = HPoint::ordinary(int(5), int(5));
        let r = check(TheoremId::T3_2, &c);
        assert_eq!(r.status, Status::Fail);
        assert!(r.witness.unwrap().contains("expected"));
        let r = check(TheoremId::T2_4, &c);
        assert_eq!(r.status, Status::Fail);
    }

    #[test]
    fn parse_ids() {
        assert_eq!("t3_13".parse::<TheoremId>().unwrap(), TheoremId::T3_13);
        assert_eq!("PI_INV".parse::<TheoremId>().unwrap(), TheoremId::PI_INV);
        assert_eq!(
            "T9_9".parse::<TheoremId>().unwrap_err(),
            GeometryError::UnknownTheoremId("T9_9".into())
        );
        assert_eq!(TheoremId::ALL.len(), 24);
        for &id in TheoremId::ALL {
            assert_eq!(id.as_str().parse::<TheoremId>().unwrap(), id);
        }
    }

    #[test]
    fn sampler_strata() {
        let cfgs = sample_configurations(1, 3, Stratum::Generic).unwrap();
        assert_eq!(cfgs.len(), 3);
        assert!(cfgs.iter().all(|c| c.flags.is_empty()));
        for c in sample_configurations(1, 5, Stratum::OnSteiner).unwrap() {
            let [u, v, w] = c.p_bary().coords();
            assert_eq!(&u * &v + &v * &w + &w * &u, int(0));
        }
        for c in sample_configurations(1, 5, Stratum::PInfinite).unwrap() {
            assert!(c.p_infinite());
        }
        for c in sample_configurations(1, 5, Stratum::OnMedian).unwrap() {
            assert_eq!(c.flags, DegeneracyClass::ON_MEDIAN);
        }
    }

    #[test]
    fn sampler_is_deterministic() {
        let a = sample_configurations(1, 4, Stratum::Generic).unwrap();
        let b = sample_configurations(1, 4, Stratum::Generic).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.triangle(), y.triangle());
            assert_eq!(x.p, y.p);
            assert_eq!(x.fingerprint, y.fingerprint);
        }
        let single = sample_configuration(1, 2, Stratum::Generic).unwrap();
        assert_eq!(single.p, a[2].p);
    }

    #[test]
    fn suite_ordering_and_filter() {
        assert!(run_suite(3, 0, Stratum::Generic, None).unwrap().is_empty());
        let reports = run_suite(3, 4, Stratum::Generic, Some(&[TheoremId::T3_13])).unwrap();
        assert_eq!(reports.len(), 4);
        for (i, r) in reports.iter().enumerate() {
            assert_eq!(r.theorem_id, TheoremId::T3_13);
            assert_eq!(r.status, Status::Pass);
            assert_eq!(r.fingerprint, Some((3, i)));
        }
        let summary = SuiteSummary::of(&run_suite(3, 2, Stratum::Generic, None).unwrap());
        assert_eq!(summary.total(), 2 * TheoremId::ALL.len());
        assert_eq!(summary.fail, 0);
    }
}
