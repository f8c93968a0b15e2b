"""
taylorlike - Taylor-like expansions with optimal weights and the error bounds they sharpen.
"""

__version__ = "0.1.0"
__logo__ = "∂"


def __getattr__(name):
    """Lazy imports for the heavier submodules to keep CLI startup fast."""
    if name == "FUNCTIONS":
        from taylorlike.functions.registry import FUNCTIONS
        return FUNCTIONS
    if name == "run_experiment":
        from taylorlike.harness.runner import run_experiment
        return run_experiment
    raise AttributeError(f"module {__name__!r} has no attribute {name!r}")


__all__ = ["__version__", "__logo__", "FUNCTIONS", "run_experiment"]
