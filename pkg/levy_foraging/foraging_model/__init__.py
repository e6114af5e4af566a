"""__init__.py file."""

from .functionals import ForagingScenario, eval_functional  # noqa
from .models import FunctionalId, ScenarioParams  # noqa
