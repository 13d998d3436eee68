"""Configs for pyrig.

All subclasses of ConfigFile in the configs package are automatically called.
"""

from typing import Any

from pyrig.dev.configs.workflows.base.base import (
    Workflow as PyrigWorkflow,
)
from pyrig.dev.configs.workflows.health_check import (
    HealthCheckWorkflow as PyrigHealthCheckWorkflow,
)
from pyrig.dev.configs.workflows.release import (
    ReleaseWorkflow as PyrigReleaseWorkflow,
)


class LawSuiteWorkflowMixin(PyrigWorkflow):
    """Mixin that runs the operad law suite after the dependencies install."""

    @classmethod
    def steps_core_installed_setup(
        cls, python_version: str | None = None, *, repo_token: bool = False
    ) -> list[dict[str, Any]]:
        """Get the poetry setup steps followed by the law suite."""
        steps = super().steps_core_installed_setup(
            python_version, repo_token=repo_token
        )
        index = next(
            i
            for i, step in enumerate(steps)
            if step["id"] == cls.make_id_from_func(cls.step_install_python_dependencies)
        )
        steps.insert(index + 1, cls.step_run_law_suite())
        return steps

    @classmethod
    def step_run_law_suite(cls) -> dict[str, Any]:
        """Get the step checking every registered operad exhaustively."""
        return cls.get_step(
            step_func=cls.step_run_law_suite,
            run="poetry run python -m polyop.main",
        )


class HealthCheckWorkflow(LawSuiteWorkflowMixin, PyrigHealthCheckWorkflow):
    """Health check workflow that also runs the law suite."""


class ReleaseWorkflow(HealthCheckWorkflow, PyrigReleaseWorkflow):
    """Release workflow that also runs the law suite."""
