"""Efficiency functional descriptor module."""

from __future__ import annotations

import logging

from .exceptions import DomainError
from .models import DomainTag, FunctionalId, FunctionalValue


_LOGGER = logging.getLogger(__name__)


class BaseDescriptor:
    """Base descriptor."""

    def __init__(self, functional_id: FunctionalId | None = None) -> None:
        """Initialize BaseDescriptor."""
        self._functional_id = functional_id

    def __set_name__(self, owner, name) -> None:
        """Set name and owner of the descriptor."""
        self._name = name
        if owner and name and self._functional_id:
            uid = f"{owner.__name__.lower()}_functionals"
            if functionals := getattr(owner, uid, None):
                functionals[self._functional_id] = name
            else:
                setattr(owner, uid, {self._functional_id: name})


class FunctionalDescriptor(BaseDescriptor):
    """Functional descriptor.

    Behaves like a method returning a FunctionalValue for a given s, after
    checking s against the functional's admissible domain. Registers the
    functional id on the owning class.
    """

    def __init__(
            self,
            fget=None,
            doc=None,
            functional_id: FunctionalId | None = None,
            domain_tag: DomainTag = DomainTag.HALF1,
            infinite_up_to_half: bool = False,
    ) -> None:
        """Initialize instance of FunctionalDescriptor."""
        super().__init__(functional_id)
        self.fget = fget
        if doc is None and fget is not None:
            doc = fget.__doc__
        self.__doc__ = doc
        self.domain_tag = domain_tag
        self.infinite_up_to_half = infinite_up_to_half
        self._name = ""

    def check(self, s: float) -> FunctionalValue | None:
        """Validate s; return the infinity marker where it applies."""
        if self.infinite_up_to_half and 0.0 < s <= 0.5:
            return FunctionalValue.positive_infinity(
                meaningful=self._functional_id.index in (1, 2)
            )
        if not self.domain_tag.contains(s):
            raise DomainError(
                f"{self._functional_id} is defined for s in "
                f"{self.domain_tag.value}, got s={s}",
                "s",
                s,
            )
        return None

    def __get__(self, obj, objtype=None):
        """Magic method. Return the evaluator bound to obj."""
        if obj is None:
            return self
        if self.fget is None:
            raise AttributeError(f"functional '{self._name}' has no getter")

        def evaluate(s) -> FunctionalValue:
            s = float(s)
            if (marker := self.check(s)) is not None:
                return marker
            value = self.fget(obj, s)
            if isinstance(value, FunctionalValue):
                return value
            return FunctionalValue(float(value), meaningful=value >= 0.0)

        evaluate.__doc__ = self.__doc__
        evaluate.descriptor = self
        return evaluate
