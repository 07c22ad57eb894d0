use rayon::prelude::*;

use qmzv_core::zeta::{evaluate_relation, relation_instances};
use qmzv_core::{RelationReport, ZetaContext};

use crate::{CliError, RunConfig};

/// Evaluates every relation instance within the configured bounds.
///
/// Instances are spread over the pool; each worker owns its own
/// [`ZetaContext`] so series tables are never shared. The result follows
/// the canonical instance order whatever the scheduling.
pub fn relation_reports(cfg: &RunConfig) -> Result<Vec<RelationReport>, CliError> {
    cfg.validate()?;
    let instances = relation_instances(cfg.max_weight, cfg.max_n);
    let (precision, variant) = (cfg.precision, cfg.variant);
    cfg.install(|| {
        instances
            .par_iter()
            .map_init(
                || ZetaContext::new(precision),
                |ctx, (w1, w2, n)| evaluate_relation(ctx, w1, w2, *n, variant),
            )
            .collect::<Result<Vec<_>, _>>()
    })?
    .map_err(CliError::from)
}

#[cfg(test)]
mod tests {
    use super::*;
    use qmzv_core::zeta::enumerate_relations;
    use qmzv_core::RelationVariant;

    #[test]
    fn matches_serial_enumeration() {
        for variant in [RelationVariant::Modified, RelationVariant::QDeformed] {
            let cfg = RunConfig { precision: 12, max_weight: 4, max_n: 2, variant, workers: 3, ..RunConfig::default() };
            let parallel = relation_reports(&cfg).unwrap();
            assert_eq!(parallel, enumerate_relations(4, 2, 12, variant));
            assert!(parallel.iter().all(RelationReport::holds));
        }
    }

    #[test]
    fn rejects_bad_bounds() {
        let cfg = RunConfig { precision: 1, ..RunConfig::default() };
        assert!(matches!(relation_reports(&cfg), Err(CliError::Usage(_))));
    }
}
