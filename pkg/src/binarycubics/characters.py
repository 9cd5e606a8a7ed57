"""Formal GL2-characters with exact coefficient extraction.

An admissible GL2-representation decomposes with finite multiplicities
into irreducibles indexed by dominant weights (l1, l2) with l1 >= l2, so
its class in the character ring is an integer-valued function on
dominant weights.  Characters here are either closed rational forms -- a
signed monomial numerator over a product of factors 1/(1 - e^mu),
optionally times a full lattice factor sum_{t in Z} e^(t*rho) -- or
combinator nodes (sums, differences, shifts, Fourier images,
localizations) over other characters.

Coefficients of closed forms are counted by bounded Diophantine
enumeration: each strictly sloped denominator weight advances l1 - l2,
so its exponent is bounded by the slope gap, after which the scalar or
lattice exponents are pinned by l1 + l2.  Nothing is ever truncated to a
power series and all arithmetic is exact.

The product on characters is formal convolution of e-symbols, not a
tensor-product decomposition of representations; all closed forms are
built from monomial exponentials, which is why convolution suffices.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable, Mapping

Weight = tuple[int, int]


def is_dominant(lam: Weight) -> bool:
    return lam[0] >= lam[1]


def dual(lam: Weight) -> Weight:
    """The dual weight (l1, l2) -> (-l2, -l1), an involution on dominants."""
    return (-lam[1], -lam[0])


def fourier_weight(lam: Weight) -> Weight:
    """Weight map induced by the Fourier transform on binary cubic forms.

    lam -> dual(lam) - (6, 6), where (6, 6) is the determinant weight of
    the 4-dimensional space of cubics.  Involutive, preserves dominance.
    """
    return (-lam[1] - 6, -lam[0] - 6)


def nu(i: int) -> int:
    """Number of pairs (a, b) of non-negative integers with 2a + 3b = i.

    Coefficient of t^i in 1/((1 - t^2)(1 - t^3)); zero for i < 0.
    """
    if i < 0:
        return 0
    return sum(1 for b in range(i // 3 + 1) if (i - 3 * b) % 2 == 0)


class NoStabilization(RuntimeError):
    """A localized character failed to reach a stable multiplicity."""


class InvalidClosedForm(ValueError):
    """A closed rational form whose coefficients would not be finite."""


@dataclass(frozen=True)
class ClosedFormCharacter:
    """A character of shape  sum_s s*e^nu / prod_mu (1 - e^mu)  [* e^(rho Z)].

    numerator:    terms (sign, weight) with sign in {+1, -1}.
    denominators: dominant weights mu; each factor 1/(1 - e^mu) is the
                  geometric sum over non-negative exponents.  Strictly
                  sloped factors (mu1 > mu2) may have either sign of
                  mu1 + mu2; scalar factors (mu1 == mu2 != 0) must all
                  share one sign so exponent counts stay finite.
    periodic:     optional scalar weight rho = (r, r), r > 0, standing
                  for the full lattice factor sum_{t in Z} e^(t*rho).
                  Incompatible with scalar denominators (the coefficient
                  count would be infinite).
    """

    numerator: tuple[tuple[int, Weight], ...]
    denominators: tuple[Weight, ...] = ()
    periodic: Weight | None = None

    def __post_init__(self) -> None:
        for sign, nu_ in self.numerator:
            if sign not in (1, -1):
                raise InvalidClosedForm(f"numerator sign must be +-1, got {sign}")
        scalar_signs = set()
        for mu in self.denominators:
            if mu[0] < mu[1]:
                raise InvalidClosedForm(f"denominator weight {mu} is not dominant")
            if mu[0] == mu[1]:
                if mu[0] == 0:
                    raise InvalidClosedForm("denominator weight (0, 0) is not allowed")
                scalar_signs.add(mu[0] > 0)
        if len(scalar_signs) > 1:
            raise InvalidClosedForm("scalar denominators must share one sign")
        if self.periodic is not None:
            r1, r2 = self.periodic
            if r1 != r2 or r1 <= 0:
                raise InvalidClosedForm(f"periodic weight must be (r, r), r > 0, got {self.periodic}")
            if scalar_signs:
                raise InvalidClosedForm("periodic factor excludes scalar denominators")

    def coefficient(self, lam: Weight) -> int:
        """Exact multiplicity of e^lam, by bounded signed enumeration."""
        if not is_dominant(lam):
            return 0
        sloped = [mu for mu in self.denominators if mu[0] > mu[1]]
        scalars = [2 * mu[0] for mu in self.denominators if mu[0] == mu[1]]
        gaps = [mu[0] - mu[1] for mu in sloped]
        sums = [mu[0] + mu[1] for mu in sloped]
        total = 0
        for sign, nu_ in self.numerator:
            gap = (lam[0] - lam[1]) - (nu_[0] - nu_[1])
            rem0 = (lam[0] + lam[1]) - (nu_[0] + nu_[1])
            if gap < 0:
                continue
            total += sign * self._count(gaps, sums, scalars, 0, gap, rem0)
        return total

    def _count(self, gaps, sums, scalars, k, gap, rem) -> int:
        if k == len(gaps):
            if gap != 0:
                return 0
            if self.periodic is not None:
                return 1 if rem % (2 * self.periodic[0]) == 0 else 0
            return _count_scalar(scalars, rem)
        d, s = gaps[k], sums[k]
        count = 0
        for a in range(gap // d + 1):
            count += self._count(gaps, sums, scalars, k + 1, gap - a * d, rem - a * s)
        return count


def _count_scalar(steps: list[int], rem: int) -> int:
    """Solutions of sum c_i*steps_i = rem with c_i >= 0 (steps sign-uniform)."""
    if not steps:
        return 1 if rem == 0 else 0
    if steps[0] < 0:
        steps = [-s for s in steps]
        rem = -rem
    if rem < 0:
        return 0
    first, rest = steps[0], steps[1:]
    return sum(_count_scalar(rest, rem - c * first) for c in range(rem // first + 1))


def multiply_forms(f: ClosedFormCharacter, g: ClosedFormCharacter) -> ClosedFormCharacter:
    """Convolution product of two closed forms, when it is again one."""
    if f.periodic is not None and g.periodic is not None:
        raise InvalidClosedForm("product of two lattice factors is not admissible")
    numerator = tuple(
        (s1 * s2, (w1[0] + w2[0], w1[1] + w2[1]))
        for s1, w1 in f.numerator
        for s2, w2 in g.numerator
    )
    return ClosedFormCharacter(
        numerator=numerator,
        denominators=f.denominators + g.denominators,
        periodic=f.periodic or g.periodic,
    )


@dataclass(frozen=True)
class StabilizationPolicy:
    """Window for detecting the stable value of a localized character.

    Multiplicities are sampled along lam + (6n, 6n) for n = 1..n_max and
    the run of equal values ending at n_max must have length >= streak.
    The sequences that arise are eventually constant; taking the tail
    run (rather than the first streak anywhere) avoids latching onto a
    plateau before the final jump.
    """

    n_max: int = 50
    streak: int = 3


class Character:
    """An exact multiplicity function on dominant weights.

    Immutable and referentially transparent; evaluations are memoized,
    so the combinators may be stacked freely.  Evaluation at a
    non-dominant weight is 0 by convention.
    """

    def __init__(self, fn: Callable[[Weight], int], name: str = ""):
        self._fn = fn
        self.name = name
        self._cache: dict[Weight, int] = {}

    def mult(self, lam: Weight) -> int:
        lam = (int(lam[0]), int(lam[1]))
        if lam[0] < lam[1]:
            return 0
        cached = self._cache.get(lam)
        if cached is None:
            cached = self._cache[lam] = int(self._fn(lam))
        return cached

    def __add__(self, other: "Character") -> "Character":
        return add(self, other)

    def __sub__(self, other: "Character") -> "Character":
        return sub(self, other)

    def __repr__(self) -> str:
        return f"Character({self.name or '...'})"


def from_closed_form(form: ClosedFormCharacter, name: str = "") -> Character:
    return Character(form.coefficient, name)


def from_table(table: Mapping[Weight, int], name: str = "") -> Character:
    """Character with explicit finite support."""
    frozen = {(int(k[0]), int(k[1])): int(v) for k, v in table.items()}
    return Character(lambda lam: frozen.get(lam, 0), name)


def zero_character() -> Character:
    return Character(lambda lam: 0, "0")


def add(c: Character, d: Character) -> Character:
    return Character(lambda lam: c.mult(lam) + d.mult(lam), f"({c.name}+{d.name})")


def sub(c: Character, d: Character) -> Character:
    return Character(lambda lam: c.mult(lam) - d.mult(lam), f"({c.name}-{d.name})")


def shift(c: Character, mu: Weight) -> Character:
    """Multiplication by e^mu: mult(lam) = c.mult(lam - mu)."""
    m1, m2 = mu
    return Character(lambda lam: c.mult((lam[0] - m1, lam[1] - m2)), f"{c.name}*e^{mu}")


def fourier(c: Character) -> Character:
    """Fourier image: mult(lam) = c.mult(dual(lam) - (6, 6)).  Involutive."""
    return Character(lambda lam: c.mult(fourier_weight(lam)), f"F({c.name})")


def localize(c: Character, policy: StabilizationPolicy = StabilizationPolicy()) -> Character:
    """Character of the localization away from the discriminant divisor.

    mult(lam) is the stable value of c.mult(lam + (6n, 6n)) as n grows;
    the discriminant spans a one-dimensional representation of weight
    (6, 6).  Meaningful when the underlying module has no discriminant
    torsion; that hypothesis cannot be read off the character, so the
    caller is trusted.  Raises NoStabilization when the tail of the
    sampling window is still moving.
    """

    def fn(lam: Weight) -> int:
        values = [c.mult((lam[0] + 6 * n, lam[1] + 6 * n)) for n in range(1, policy.n_max + 1)]
        tail = values[-1]
        run = 0
        for v in reversed(values):
            if v != tail:
                break
            run += 1
        if run < policy.streak:
            raise NoStabilization(
                f"multiplicity at {lam} not stable after n={policy.n_max} "
                f"(needed a tail run of {policy.streak}, got {run})"
            )
        return tail

    return Character(fn, f"({c.name})_loc")


def truncate(c: Character, lo: int, hi: int) -> dict[Weight, int]:
    """Sparse table of nonzero multiplicities on {lo <= l2 <= l1 <= hi}."""
    table: dict[Weight, int] = {}
    for l1 in range(lo, hi + 1):
        for l2 in range(lo, l1 + 1):
            v = c.mult((l1, l2))
            if v:
                table[(l1, l2)] = v
    return table


def box_weights(lo: int, hi: int) -> Iterable[Weight]:
    """Dominant weights lam with lo <= l2 <= l1 <= hi, in lexicographic order."""
    for l1 in range(lo, hi + 1):
        for l2 in range(lo, l1 + 1):
            yield (l1, l2)


def first_disagreement(c: Character, d: Character, lo: int, hi: int) -> Weight | None:
    """First weight in the box where the two characters differ, else None."""
    for lam in box_weights(lo, hi):
        if c.mult(lam) != d.mult(lam):
            return lam
    return None


# Closed forms for the ambient space of binary cubic forms.
#
# S is the ring of polynomial functions: generated over the base by the
# degree-1 piece (3,0), with relations encoded by the numerator term
# (6,3) and the classical generators (4,2) (degree 2) and the
# discriminant weight (6,6) (degree 4).
S_FORM = ClosedFormCharacter(
    numerator=((1, (0, 0)), (1, (6, 3))),
    denominators=((3, 0), (4, 2), (6, 6)),
)

# S localized at the discriminant: the (6,6)-factor becomes the full
# lattice factor, so the character is invariant under shifts by (6,6).
SDELTA_FORM = ClosedFormCharacter(
    numerator=((1, (0, 0)), (1, (6, 3))),
    denominators=((3, 0), (4, 2)),
    periodic=(6, 6),
)

# Fourier transform of S, supported at the origin: every weight of
# S_FORM pushed through the Fourier weight map.
E_FORM = ClosedFormCharacter(
    numerator=((1, (-6, -6)), (1, (-9, -12))),
    denominators=((0, -3), (-2, -4), (-6, -6)),
)


def m_weight(lam: Weight) -> int:
    """nu(l1 - 5) - nu(l2 - 6), the sloped part of the twisted-cubic counts."""
    return nu(lam[0] - 5) - nu(lam[1] - 6)


def e_weight(lam: Weight) -> int:
    """Multiplicity of e^(lam - (6,6)) in S; the origin-module correction term."""
    return S_FORM.coefficient((lam[0] - 6, lam[1] - 6))


def m_diag(a: int) -> int:
    """m at the scalar weight (a, a): -1 for a = 0 mod 6, a >= 6; +1 for
    a = +-1 mod 6, a >= 5; else 0."""
    if a >= 6 and a % 6 == 0:
        return -1
    if a >= 5 and a % 6 in (1, 5):
        return 1
    return 0


def mult_d(j: int, lam: Weight) -> int:
    """Multiplicity of e^lam in the simple module D_j on the twisted-cubic cone.

    The character of D_j is carried by dual weights, so the count is read
    off at dual(lam): zero unless dual(lam)_1 + dual(lam)_2 = j mod 3,
    and otherwise m (j = 1, 2) or m + e (j = 0).
    """
    if j not in (0, 1, 2):
        raise ValueError(f"j must be 0, 1 or 2, got {j}")
    if not is_dominant(lam):
        return 0
    mu = dual(lam)
    if (mu[0] + mu[1] - j) % 3 != 0:
        return 0
    m = m_weight(mu)
    if j == 0:
        return m + e_weight(mu)
    return m
