//! The full battery of checks on one instance, in a fixed order.

use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::bipoly::{BiDeg, InputTriple};
use crate::classify::{classify, resultant_21, InstanceClass};
use crate::error::Result;
use crate::exactnum::{format_rational, rat, Rational};
use crate::hilbert::{dim_table, DimRow};
use crate::resolution::{build_resolution, verify_complex, Check};
use crate::syzygy::{check_b_cubed_koszul, check_generation, min_generators};

/// Seed for the scaling factors of the resultant check.
pub const SCALING_SEED: u64 = 12;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub class: InstanceClass,
    pub resultant: String,
    pub checks: Vec<Check>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn first_failure(&self) -> Option<&Check> {
        self.checks.iter().find(|c| !c.passed)
    }
}

fn check(name: &str, passed: bool, first_failure: Option<BiDeg>, detail: String) -> Check {
    Check {
        name: name.into(),
        passed,
        first_failure,
        detail,
    }
}

fn degree_list(d: &[BiDeg]) -> String {
    d.iter().map(BiDeg::to_string).collect::<Vec<_>>().join(" ")
}

fn nonzero_scalar(rng: &mut ChaCha8Rng) -> Rational {
    loop {
        let v = rng.random_range(-9i64..=9);
        if v != 0 {
            return rat(v);
        }
    }
}

/// `Res(lambda p0, mu p1, nu p2) = (lambda mu nu)^4 Res(p)` for `count`
/// seeded scalar triples. Returns the first failing triple.
pub fn resultant_scaling(p: &InputTriple, count: usize, seed: u64) -> Result<Option<[Rational; 3]>> {
    let base = resultant_21(p)?.value;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..count {
        let s: [Rational; 3] = std::array::from_fn(|_| nonzero_scalar(&mut rng));
        let scaled = InputTriple::new(p.get(0).scale(&s[0]), p.get(1).scale(&s[1]), p.get(2).scale(&s[2]))?;
        let prod = &s[0] * &s[1] * &s[2];
        let want = &base * &prod * &prod * &prod * &prod;
        if resultant_21(&scaled)?.value != want {
            return Ok(Some(s));
        }
    }
    Ok(None)
}

/// Runs the resultant scaling, classification, Hilbert table, generation,
/// resolution, four-term identity and `B^3` checks. Checks after
/// classification are skipped (and reported failed) for degenerate input.
pub fn verify_instance(p: &InputTriple, bx: BiDeg) -> Result<VerifyReport> {
    let mut checks = Vec::new();
    let res = resultant_21(p)?;
    let scaling = resultant_scaling(p, 3, SCALING_SEED)?;
    checks.push(check(
        "resultant scaling",
        scaling.is_none(),
        None,
        scaling
            .map(|s| format!("fails for scalars {}, {}, {}", s[0], s[1], s[2]))
            .unwrap_or_default(),
    ));
    let cls = classify(p)?;
    let resultant = format_rational(&res.value);
    checks.push(check(
        "classification",
        cls != InstanceClass::Degenerate,
        None,
        format!("{cls}, resultant {resultant}"),
    ));
    if cls == InstanceClass::Degenerate || res.value.is_zero() {
        return Ok(VerifyReport {
            class: cls,
            resultant,
            checks,
        });
    }

    let table = dim_table(p, bx)?;
    let mismatches = table.mismatches().count();
    checks.push(check(
        "Hilbert table",
        mismatches == 0,
        table.first_mismatch(),
        format!("{mismatches} mismatching cells of {}", table.rows.len()),
    ));

    let gens = min_generators(p)?;
    let gen = check_generation(p, &gens, bx);
    checks.push(check(
        "generation",
        gen.passed(),
        gen.first_failure.map(|f| f.0),
        match gen.first_failure {
            Some((_, span, oracle)) => format!("span {span}, oracle {oracle}"),
            None if !gen.non_syzygies.is_empty() => format!("non-syzygies {:?}", gen.non_syzygies),
            None => format!("degrees {}", degree_list(&gens.degrees())),
        },
    ));

    match build_resolution(p) {
        Ok(cx) => {
            let report = verify_complex(&cx, p, bx);
            checks.push(check(
                "resolution",
                true,
                None,
                format!(
                    "ranks {}",
                    cx.ranks().iter().map(usize::to_string).collect::<Vec<_>>().join(",")
                ),
            ));
            for c in report.checks {
                checks.push(Check {
                    name: format!("resolution: {}", c.name),
                    ..c
                });
            }
        }
        Err(e) => checks.push(check("resolution", false, None, e.to_string())),
    }

    let bad = table.rows.iter().find(|r| !r.four_term_identity_holds());
    checks.push(check(
        "four-term identity",
        bad.is_none(),
        bad.map(DimRow::deg),
        String::new(),
    ));

    let b3 = check_b_cubed_koszul(p, &gens)?;
    checks.push(check(
        "B^3 Koszul",
        b3.is_none(),
        b3.as_ref().map(|(k, _)| gens.gens[*k].ambient()),
        b3.map(|(k, mu)| format!("generator {k} times {mu}")).unwrap_or_default(),
    ));

    Ok(VerifyReport {
        class: cls,
        resultant,
        checks,
    })
}
