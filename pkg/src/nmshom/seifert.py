"""Seifert fibrations over an orientable base, as flows and in closed form.

A fibration over a genus-g orientable surface with unnormalized invariants
(g; b1/a1, ..., bm/am), all a_i >= 1 and gcd(a_i, b_i) = 1, carries a flow
with m orbits of index 0 (one per invariant pair), m + 2g - 1 orbits of
index 1, and a single orbit of index 2 on the fibered 3-manifold.  The only
nonzero incidences tie the first m - 1 index-1 orbits
to consecutive index-0 orbits with weights +a_j and -a_(j+1), giving the
bidiagonal boundary matrix this module also exposes directly.

The compact text form is ``g;b1/a1,b2/a2,...`` (note beta before alpha, the
traditional fraction), e.g. ``2;1/2,1/3,1/5``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .chain import HomologyGroup
from .flow import FlowComplex, Incidence, Orbit
from .linalg import IntegerMatrix, elementary_divisors
from .validation import ParseError, ValidationError, ValidationReport, Violation

__all__ = [
    "SeifertInvariant",
    "seifert_equivalent",
    "boundary_matrix",
    "parse_invariant",
    "format_invariant",
]


@dataclass(frozen=True)
class SeifertInvariant:
    """Unnormalized invariants (genus; beta_1/alpha_1, ..., beta_m/alpha_m).

    Pairs are stored as (alpha, beta) tuples.  Construction only coerces
    types; semantic requirements (m >= 1, alpha_i >= 1, coprimality,
    nonnegative genus) are reported by :meth:`validate`.
    """

    genus: int
    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "genus", int(self.genus))
        normalized_pairs = tuple((int(a), int(b)) for a, b in self.pairs)
        object.__setattr__(self, "pairs", normalized_pairs)

    def __str__(self) -> str:
        return format_invariant(self)

    def validate(self) -> ValidationReport:
        violations = []
        if self.genus < 0:
            violations.append(
                Violation("negative-genus", f"genus must be nonnegative, got {self.genus}")
            )
        if not self.pairs:
            violations.append(
                Violation("empty-fiber-list", "at least one invariant pair is required")
            )
        for position, (alpha, beta) in enumerate(self.pairs, start=1):
            if alpha < 1:
                violations.append(
                    Violation(
                        "alpha-below-one",
                        f"pair {position}: alpha must be at least 1, got {alpha}",
                        (str(position),),
                    )
                )
            elif math.gcd(alpha, beta) != 1:
                violations.append(
                    Violation(
                        "non-coprime-pair",
                        f"pair {position}: {beta}/{alpha} has gcd {math.gcd(alpha, beta)}, "
                        f"alpha and beta must be coprime",
                        (str(position),),
                    )
                )
        return ValidationReport(tuple(violations))

    def _require_valid(self) -> None:
        report = self.validate()
        if not report.ok:
            raise ValidationError(report, f"invalid Seifert invariants {format_invariant(self)!r}")

    def to_flow_complex(self) -> FlowComplex:
        """The flow on the fibered 3-manifold these invariants describe.

        Orbit ids are zero-padded so lexicographic order within each index
        agrees with construction order however many orbits there are.
        """
        self._require_valid()
        m = len(self.pairs)
        saddle_count = m + 2 * self.genus - 1
        width = len(str(max(m, saddle_count, 1)))

        def name(index: int, position: int) -> str:
            return f"o{index}_{position:0{width}d}"

        minima = [name(0, i) for i in range(1, m + 1)]
        saddles = [name(1, j) for j in range(1, saddle_count + 1)]
        orbits = [Orbit(oid, 0) for oid in minima]
        orbits += [Orbit(oid, 1) for oid in saddles]
        orbits.append(Orbit(name(2, 1), 2))

        alphas = [alpha for alpha, _ in self.pairs]
        incidences = []
        for j in range(m - 1):
            incidences.append(Incidence(saddles[j], minima[j], alphas[j]))
            incidences.append(Incidence(saddles[j], minima[j + 1], -alphas[j + 1]))
        return FlowComplex(3, orbits, incidences)

    def homology_closed_form(self) -> list[HomologyGroup]:
        """Homology of the fibered manifold without building the flow.

        H_2 is free of rank one, H_1 is free of rank 2g, and H_0 is Z plus
        the torsion read off the elementary divisors of the bidiagonal
        boundary matrix.
        """
        self._require_valid()
        torsion = tuple(d for d in elementary_divisors(boundary_matrix(self)) if d > 1)
        return [
            HomologyGroup(degree=0, betti=1, torsion=torsion),
            HomologyGroup(degree=1, betti=2 * self.genus),
            HomologyGroup(degree=2, betti=1),
        ]

    def normalized(self) -> "SeifertInvariant":
        """Canonical representative of the equivalence class.

        Pairs with alpha > 1 are reduced to 0 <= beta < alpha and sorted;
        one trailing pair with alpha = 1 absorbs the remaining integer part
        so that the total sum of beta/alpha is preserved exactly.
        """
        self._require_valid()
        reduced = sorted((alpha, beta % alpha) for alpha, beta in self.pairs if alpha > 1)
        total = sum((Fraction(beta, alpha) for alpha, beta in self.pairs), Fraction(0))
        kept = sum((Fraction(beta, alpha) for alpha, beta in reduced), Fraction(0))
        excess = total - kept
        assert excess.denominator == 1
        return SeifertInvariant(self.genus, (*reduced, (1, int(excess))))


def boundary_matrix(invariant: SeifertInvariant) -> IntegerMatrix:
    """The m x (m-1) matrix of weights tying saddles to index-0 orbits.

    Column j carries +alpha_j in row j and -alpha_(j+1) in row j+1; the
    elementary divisors of this matrix are the torsion of H_0.
    """
    invariant._require_valid()
    alphas = [alpha for alpha, _ in invariant.pairs]
    m = len(alphas)
    rows = [[0] * (m - 1) for _ in range(m)]
    for j in range(m - 1):
        rows[j][j] = alphas[j]
        rows[j + 1][j] = -alphas[j + 1]
    return IntegerMatrix.from_rows(rows, cols=m - 1)


def _match_residues(betas: list[int], candidates: list[int], alpha: int) -> bool:
    """Can ``betas`` be paired with ``candidates`` so matches agree mod alpha?

    Backtracking over all pairings; used by :func:`seifert_equivalent` so the
    equivalence test follows its definition rather than the normal form.
    """
    if not betas:
        return not candidates
    first, rest = betas[0], betas[1:]
    for i, candidate in enumerate(candidates):
        if (first - candidate) % alpha == 0:
            if _match_residues(rest, candidates[:i] + candidates[i + 1 :], alpha):
                return True
    return False


def seifert_equivalent(first: SeifertInvariant, second: SeifertInvariant) -> bool:
    """Do the two invariant lists describe the same fibration?

    True exactly when the genera agree and the pairs with alpha > 1 can be
    matched up so that matched alphas are equal, matched betas agree modulo
    alpha, and the exact rational sums of beta/alpha coincide.  Both
    arguments must be valid.
    """
    first._require_valid()
    second._require_valid()
    if first.genus != second.genus:
        return False

    def classes(invariant: SeifertInvariant) -> dict[int, list[int]]:
        grouped: dict[int, list[int]] = {}
        for alpha, beta in invariant.pairs:
            if alpha > 1:
                grouped.setdefault(alpha, []).append(beta)
        return grouped

    classes_first = classes(first)
    classes_second = classes(second)
    if set(classes_first) != set(classes_second):
        return False
    for alpha, betas in classes_first.items():
        if not _match_residues(betas, classes_second[alpha], alpha):
            return False

    def total(invariant: SeifertInvariant) -> Fraction:
        return sum((Fraction(beta, alpha) for alpha, beta in invariant.pairs), Fraction(0))

    return total(first) == total(second)


def parse_invariant(text: str) -> SeifertInvariant:
    """Read the compact form ``g;b1/a1,b2/a2,...``.

    Whitespace around tokens is tolerated.  An empty pair list parses (to an
    invariant that then fails validation), so ``0;`` is a parse success but
    semantically invalid.
    """
    s = text.strip()
    head, sep, tail = s.partition(";")
    if not sep:
        raise ParseError(1, f"expected ';' after the genus in {text!r}")
    try:
        genus = int(head.strip())
    except ValueError:
        raise ParseError(1, f"non-integer genus {head.strip()!r}") from None
    pairs = []
    if tail.strip():
        for chunk in tail.split(","):
            beta_text, slash, alpha_text = chunk.partition("/")
            if not slash:
                raise ParseError(1, f"expected beta/alpha, got {chunk.strip()!r}")
            try:
                beta = int(beta_text.strip())
                alpha = int(alpha_text.strip())
            except ValueError:
                raise ParseError(1, f"non-integer invariant pair {chunk.strip()!r}") from None
            pairs.append((alpha, beta))
    return SeifertInvariant(genus, tuple(pairs))


def format_invariant(invariant: SeifertInvariant) -> str:
    """Inverse of :func:`parse_invariant`; betas come before alphas."""
    body = ",".join(f"{beta}/{alpha}" for alpha, beta in invariant.pairs)
    return f"{invariant.genus};{body}"
