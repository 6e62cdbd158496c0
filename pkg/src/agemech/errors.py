"""Exception types shared across the package.

Anything that is a plain precondition violation (wrong shape, empty input,
zero variance where a correlation needs spread) raises ValueError; the types
below mark conditions callers are expected to branch on.
"""


class AgemechError(Exception):
    """Base class for package-specific errors."""


class ConfigError(AgemechError):
    """A configuration file or option set is invalid."""


class SchemaError(AgemechError):
    """A schema is self-contradictory or names columns the file lacks."""


class CsvParseError(AgemechError):
    """A data cell could not be interpreted; the message names the row."""


class EmptyDatasetError(AgemechError):
    """Ingestion finished with zero usable rows."""


class TooFewSamplesError(AgemechError):
    """A class cannot populate every partition (or a minimum count failed)."""


class SingularSystemError(AgemechError):
    """The ridge-regularized kernel system could not be solved accurately."""


class DegenerateFitnessError(AgemechError):
    """The search fitness is undefined (e.g. zero-variance predictions)."""


class DegenerateAnovaError(AgemechError):
    """Agreement ANOVA collapsed: no between-subject variance to apportion."""
