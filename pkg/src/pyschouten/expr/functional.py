from dataclasses import dataclass, field
from typing import Dict

from ..errors import InhomogeneousError
from .base import DEFAULT_BASE, BaseLabel, check_label
from .expression import Expression


@dataclass(frozen=True)
class Functional:
    """
    An integral functional: a homogeneous density integrated over one base label.

    Attributes:
        density (Expression): The integrand; all monomials share one odd degree.
        base (str): Label of the integration variable.
    """
    density: Expression = field(default_factory=Expression.zero)
    base: BaseLabel = DEFAULT_BASE

    def __post_init__(self):
        check_label(self.base)
        if not self.density.is_homogeneous:
            raise InhomogeneousError(
                f"Density of a functional must be homogeneous, got odd degrees "
                f"{sorted(self.density.odd_degrees())}: {self.density}")

    @property
    def grading(self) -> int:
        """The odd degree |F| of the density (0 for the zero functional)."""
        return self.density.odd_degree

    @property
    def is_zero(self) -> bool:
        return self.density.is_zero

    def rebase(self, label: BaseLabel) -> "Functional":
        """Restricts the density to label and integrates over label."""
        return Functional(self.density.restrict_diagonal(check_label(label)), label)

    def scale(self, factor) -> "Functional":
        return Functional(self.density.scale(factor), self.base)

    def export(self) -> Dict:
        return {"base": self.base, "grading": self.grading, "density": self.density.export()}

    def __str__(self) -> str:
        from ..dsl.render import render_text  # Lazy import to avoid circular imports
        return render_text(self)
