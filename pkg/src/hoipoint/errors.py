"""Exception types shared across the package."""


class ConfigError(ValueError):
    """Invalid or inconsistent configuration (CLI exit code 2)."""


class DatasetFormatError(ValueError):
    """Malformed or version-mismatched dataset file (CLI exit code 3)."""


class GenerationError(RuntimeError):
    """Scene placement could not be satisfied within the retry budget."""


class EncodeError(ValueError):
    """Ground-truth target encoding rejected an out-of-bounds input."""


class TapeConsumedError(RuntimeError):
    """backward() was called twice on the same recorded forward pass."""


class OptimizerError(RuntimeError):
    """Parameter update attempted without a populated gradient."""


class DivergenceError(RuntimeError):
    """A loss component became NaN/Inf during training (CLI exit code 4)."""

    def __init__(self, step, component):
        super().__init__(f"non-finite loss at step {step}: component {component!r}")
        self.step = step
        self.component = component


class EvaluationError(ValueError):
    """Detections and ground truth do not describe the same scene set."""
