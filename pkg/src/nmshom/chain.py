"""Finite chain complexes of free abelian groups and their homology.

A complex stores one rank per degree 0..top_degree and one boundary matrix
per degree 1..top_degree; the boundary below degree 0 and above the top are
zero maps.  Homology is computed degree by degree from Smith normal form:
the free rank is ranks[k] - rank(d_k) - rank(d_{k+1}) and the torsion is the
list of elementary divisors of d_{k+1} that exceed 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .linalg import IntegerMatrix, elementary_divisors, matrix_multiply
from .validation import ValidationError, ValidationReport, Violation

__all__ = ["HomologyGroup", "ChainComplex"]


@dataclass(frozen=True)
class HomologyGroup:
    """Finitely generated abelian group Z^betti + Z/d1 + ... in one degree.

    Torsion orders are listed ascending and each divides the next, the shape
    Smith normal form produces.
    """

    degree: int
    betti: int
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        if self.betti < 0:
            raise ValueError(f"negative betti number {self.betti}")
        previous = None
        for d in self.torsion:
            if d <= 1:
                raise ValueError(f"torsion order {d} must exceed 1")
            if previous is not None and d % previous:
                raise ValueError(f"torsion orders must form a divisibility chain, got {self.torsion}")
            previous = d

    def __str__(self) -> str:
        parts = []
        if self.betti == 1:
            parts.append("Z")
        elif self.betti:
            parts.append(f"Z^{self.betti}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " + ".join(parts) if parts else "0"


class ChainComplex:
    """Chain complex with explicit ranks, boundaries, and generator labels.

    ``boundaries[k - 1]`` is the matrix of d_k, of shape ranks[k-1] x
    ranks[k]; column j gives the boundary of generator j in degree k.
    Construction checks shapes and label uniqueness only; whether the
    boundary condition d.d = 0 holds is reported separately by
    :meth:`check_boundary_condition` so that defective complexes can still
    be represented and examined.
    """

    __slots__ = ("_ranks", "_boundaries", "_labels")

    def __init__(self, ranks, boundaries, generator_labels=None):
        ranks = tuple(int(r) for r in ranks)
        if not ranks:
            raise ValueError("a chain complex needs at least degree 0")
        if any(r < 0 for r in ranks):
            raise ValueError(f"ranks must be nonnegative, got {ranks}")
        boundaries = tuple(boundaries)
        if len(boundaries) != len(ranks) - 1:
            raise ValueError(
                f"expected {len(ranks) - 1} boundary matrices for degrees 1..{len(ranks) - 1}, "
                f"got {len(boundaries)}"
            )
        for k, matrix in enumerate(boundaries, start=1):
            if not isinstance(matrix, IntegerMatrix):
                raise TypeError(f"boundary in degree {k} is not an IntegerMatrix")
            if matrix.rows != ranks[k - 1] or matrix.cols != ranks[k]:
                raise ValueError(
                    f"boundary in degree {k} has shape {matrix.rows}x{matrix.cols}, "
                    f"expected {ranks[k - 1]}x{ranks[k]}"
                )
        if generator_labels is None:
            labels = tuple(
                tuple(f"c{k}_{j + 1}" for j in range(rank)) for k, rank in enumerate(ranks)
            )
        else:
            labels = tuple(tuple(str(x) for x in degree) for degree in generator_labels)
            if len(labels) != len(ranks):
                raise ValueError("one label list per degree is required")
            for k, degree_labels in enumerate(labels):
                if len(degree_labels) != ranks[k]:
                    raise ValueError(
                        f"degree {k} has {ranks[k]} generators but {len(degree_labels)} labels"
                    )
                if len(set(degree_labels)) != len(degree_labels):
                    raise ValueError(f"duplicate generator labels in degree {k}")
        self._ranks = ranks
        self._boundaries = boundaries
        self._labels = labels

    @property
    def top_degree(self) -> int:
        return len(self._ranks) - 1

    @property
    def ranks(self) -> tuple[int, ...]:
        return self._ranks

    @property
    def generator_labels(self) -> tuple[tuple[str, ...], ...]:
        return self._labels

    def boundary(self, k: int) -> IntegerMatrix:
        """Matrix of d_k; the maps off either end are zero."""
        if k == 0:
            return IntegerMatrix.zeros(0, self._ranks[0])
        if k == self.top_degree + 1:
            return IntegerMatrix.zeros(self._ranks[self.top_degree], 0)
        if 1 <= k <= self.top_degree:
            return self._boundaries[k - 1]
        raise ValueError(f"no boundary in degree {k}; valid degrees are 0..{self.top_degree + 1}")

    def check_boundary_condition(self) -> ValidationReport:
        """Report every nonzero entry of d_k . d_(k+1), with generator labels."""
        violations = []
        for k in range(1, self.top_degree):
            product = matrix_multiply(self.boundary(k), self.boundary(k + 1))
            if product.is_zero():
                continue
            for i in range(product.rows):
                for j in range(product.cols):
                    value = product[i, j]
                    if value:
                        source = self._labels[k + 1][j]
                        target = self._labels[k - 1][i]
                        violations.append(
                            Violation(
                                code="nonzero-boundary-square",
                                message=(
                                    f"d_{k}.d_{k + 1} is nonzero: generator {source!r} "
                                    f"maps to {value}*{target!r}"
                                ),
                                subjects=(source, target, str(value)),
                            )
                        )
        return ValidationReport(tuple(violations))

    def homology(self) -> list[HomologyGroup]:
        """Homology in every degree 0..top_degree.

        Raises ValidationError when the boundary condition fails; homology is
        undefined for such data.
        """
        report = self.check_boundary_condition()
        if not report.ok:
            raise ValidationError(report, "boundary condition d.d = 0 fails")
        divisors_by_degree = [
            elementary_divisors(self.boundary(k)) for k in range(1, self.top_degree + 1)
        ]

        def _rank(k: int) -> int:
            if 1 <= k <= self.top_degree:
                return len(divisors_by_degree[k - 1])
            return 0

        groups = []
        for k, rank_k in enumerate(self._ranks):
            betti = rank_k - _rank(k) - _rank(k + 1)
            torsion = tuple(d for d in (divisors_by_degree[k] if k < self.top_degree else [])
                            if d > 1)
            groups.append(HomologyGroup(degree=k, betti=betti, torsion=torsion))
        return groups

    def euler_characteristic(self) -> int:
        """Alternating sum of the ranks; equals the alternating betti sum."""
        return sum(rank if k % 2 == 0 else -rank for k, rank in enumerate(self._ranks))

    def __repr__(self) -> str:
        return f"ChainComplex(ranks={self._ranks!r})"
