"""Catalog of the 14 simple GL2-equivariant D-modules on binary cubic forms.

There are exactly 14 simples, classified by the support of the module:
nine with full support (six of holonomic rank one, G_-1, S = G_0, G_1,
G_2, G_3, G_4, and three of rank two, Q_0, Q_1, Q_2), one supported on
the discriminant hypersurface (P), three on the cone over the twisted
cubic (D_0, D_1, D_2), and one at the origin (E).  The catalog records
their characters (wired to the exact character engine), the Fourier and
holonomic-duality pairings, the composition-series identities of the
localizations, injective-envelope factor multisets, and the full table
of (iterated) local cohomology groups with support in orbit closures.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import characters as ch
from .characters import Character, StabilizationPolicy, Weight

SIMPLES = ("S", "G-1", "G1", "G2", "G3", "G4", "Q0", "Q1", "Q2", "P", "D0", "D1", "D2", "E")

#: Names of non-simple characters that are still individually addressable.
DERIVED = ("Sdelta", "Q0delta", "F1", "F-1", "SdeltaModS")

_FOURIER_PAIRS = (("S", "E"), ("G-1", "D1"), ("G1", "D2"), ("G2", "G4"), ("Q1", "Q2"), ("D0", "Q0"))
_FOURIER_FIXED = ("P", "G3")
_DUALITY_PAIRS = (("D1", "D2"), ("Q1", "Q2"), ("G2", "G4"), ("G1", "G-1"))
_DUALITY_FIXED = ("S", "Q0", "P", "D0", "E", "G3")


def _pairing(pairs, fixed) -> dict[str, str]:
    out = {x: x for x in fixed}
    for a, b in pairs:
        out[a] = b
        out[b] = a
    return out


_FOURIER = _pairing(_FOURIER_PAIRS, _FOURIER_FIXED)
_DUALITY = _pairing(_DUALITY_PAIRS, _DUALITY_FIXED)


@dataclass(frozen=True)
class OrbitInfo:
    """One GL2-orbit on the space of binary cubics."""

    name: str
    dim: int
    representative: str
    component_group: str
    local_systems: int  # irreducible equivariant local systems = simples supported there


ORBITS = (
    OrbitInfo("O0", 0, "0", "1", 1),
    OrbitInfo("O2", 2, "w0^3", "C3", 3),
    OrbitInfo("O3", 3, "w0^2*w1", "1", 1),
    OrbitInfo("O4", 4, "w0^3 + w1^3", "(C3 x C3) : C2", 9),
)

#: Support of each simple, as the orbit whose closure carries it.
SUPPORT = {
    "S": "O4", "G-1": "O4", "G1": "O4", "G2": "O4", "G3": "O4", "G4": "O4",
    "Q0": "O4", "Q1": "O4", "Q2": "O4",
    "P": "O3",
    "D0": "O2", "D1": "O2", "D2": "O2",
    "E": "O0",
}

#: Holonomic rank metadata for the full-support simples (rank of the
#: underlying local system on the dense orbit).
HOLONOMIC_RANK = {"S": 1, "G-1": 1, "G1": 1, "G2": 1, "G3": 1, "G4": 1, "Q0": 2, "Q1": 2, "Q2": 2}


def fourier_partner(name: str) -> str:
    """The simple paired with this one by the Fourier transform."""
    return _FOURIER[_check(name)]


def dual_partner(name: str) -> str:
    """The simple paired with this one by holonomic duality."""
    return _DUALITY[_check(name)]


def _check(name: str) -> str:
    if name not in SUPPORT:
        raise KeyError(f"unknown simple: {name!r}")
    return name


_characters: dict[StabilizationPolicy, dict[str, Character]] = {}


def _build_characters(policy: StabilizationPolicy) -> dict[str, Character]:
    s = ch.from_closed_form(ch.S_FORM, "S")
    e = ch.from_closed_form(ch.E_FORM, "E")
    sdelta = ch.from_closed_form(ch.SDELTA_FORM, "Sdelta")
    p = Character(lambda lam: sdelta.mult(lam) - s.mult(lam) - e.mult(lam), "P")
    d = {j: Character(lambda lam, j=j: ch.mult_d(j, lam), f"D{j}") for j in (0, 1, 2)}
    q0 = ch.fourier(d[0])
    q0.name = "Q0"
    q0delta = ch.localize(q0, policy)
    q0delta.name = "Q0delta"
    out = {
        "S": s,
        "E": e,
        "P": p,
        "D0": d[0],
        "D1": d[1],
        "D2": d[2],
        "G1": ch.fourier(d[2]),
        "G-1": ch.fourier(d[1]),
        "G2": ch.shift(sdelta, (2, 2)),
        "G3": ch.shift(sdelta, (3, 3)),
        "G4": ch.shift(sdelta, (4, 4)),
        "Q0": q0,
        "Q1": ch.shift(q0delta, (2, 2)),
        "Q2": ch.shift(q0delta, (4, 4)),
        "Sdelta": sdelta,
        "Q0delta": q0delta,
        "F1": ch.shift(sdelta, (1, 1)),
        "F-1": ch.shift(sdelta, (-1, -1)),
        "SdeltaModS": sdelta - s,
    }
    for key, value in out.items():
        value.name = key
    return out


def character_of(name: str, policy: StabilizationPolicy = StabilizationPolicy()) -> Character:
    """Character of a simple (or of one of the named derived modules).

    Simples are assembled from the character engine: S and E from their
    closed forms, P = [Sdelta] - [S] - [E], the D_j from the
    twisted-cubic count, G_1 and G_-1 as Fourier images of D_2 and D_1,
    G_i = [Sdelta] shifted by (i, i) for i = 2, 3, 4, Q_0 as the Fourier
    image of D_0, and Q_j as [Q0 localized] shifted by (2j, 2j).
    Instances are shared, so repeated queries hit one memo table.
    """
    table = _characters.get(policy)
    if table is None:
        table = _characters[policy] = _build_characters(policy)
    try:
        return table[name]
    except KeyError:
        raise KeyError(f"unknown character name: {name!r}") from None


def all_character_names() -> tuple[str, ...]:
    return SIMPLES + DERIVED


@dataclass(frozen=True)
class CompositionSeriesFact:
    """An ambient module together with its simple factors (with multiplicity).

    non_split marks the indecomposable extensions among the factors, a
    module-level fact recorded here as data (the catalog does not prove
    non-splitness).
    """

    ambient: str
    factors: tuple[str, ...]
    non_split: bool = False


COMPOSITION_SERIES = (
    CompositionSeriesFact("Sdelta", ("S", "P", "E"), non_split=True),
    CompositionSeriesFact("Q0delta", ("Q0", "P", "D0"), non_split=True),
    CompositionSeriesFact("F1", ("G1", "D1"), non_split=True),
    CompositionSeriesFact("F-1", ("G-1", "D2"), non_split=True),
    CompositionSeriesFact("SdeltaModS", ("P", "E"), non_split=True),
)

#: Composition factors of the injective envelope of each simple.  For a
#: full-support simple the envelope is the localization away from the
#: discriminant; for E, D0, D1, D2 it is the Fourier image of the
#: envelope of the Fourier partner; for P it is the cokernel of the
#: diagonal embedding into the two rank-one extensions over the
#: discriminant hypersurface (see the quiver layer).
INJECTIVE_FACTORS = {
    "S": ("S", "P", "E"),
    "E": ("E", "P", "S"),
    "Q0": ("Q0", "P", "D0"),
    "D0": ("D0", "P", "Q0"),
    "P": ("P", "S", "D0", "E", "Q0"),
    "G1": ("G1", "D1"),
    "D1": ("D1", "G1"),
    "G-1": ("G-1", "D2"),
    "D2": ("D2", "G-1"),
    "G2": ("G2",),
    "G3": ("G3",),
    "G4": ("G4",),
    "Q1": ("Q1",),
    "Q2": ("Q2",),
}

SUPPORT_CLOSURES = ("O3bar", "O2bar", "O0")

_CLOSURE_DIM = {"O3bar": 3, "O2bar": 2, "O0": 0}

#: Non-zero local cohomology H^k with support in an orbit closure, for
#: the simples and for the length-two extension SdeltaModS = Sdelta/S.
#: Values are multisets of simple factors; "extension" flags entries
#: that are a single non-split module rather than a direct sum.
_LOCAL_COHOMOLOGY: dict[tuple[str, str, int], tuple[tuple[str, ...], bool]] = {
    ("S", "O3bar", 1): (("P", "E"), True),          # = SdeltaModS
    ("S", "O2bar", 2): (("D0",), False),
    ("S", "O0", 4): (("E",), False),
    ("SdeltaModS", "O2bar", 1): (("D0",), False),
    ("SdeltaModS", "O0", 3): (("E",), False),
    ("D0", "O0", 2): (("E",), False),
    ("P", "O2bar", 1): (("D0", "E"), False),        # a genuine direct sum
    ("P", "O0", 1): (("E",), False),
    ("P", "O0", 3): (("E",), False),
    ("Q0", "O3bar", 1): (("P", "D0"), True),        # = Q0delta/Q0
    ("Q0", "O2bar", 2): (("E",), False),
    ("Q0", "O0", 2): (("E",), False),
    ("G1", "O3bar", 1): (("D1",), False),
    ("G1", "O2bar", 1): (("D1",), False),
    ("G-1", "O3bar", 1): (("D2",), False),
    ("G-1", "O2bar", 1): (("D2",), False),
}

#: Verification status of the table rows: character-level identities are
#: replayed by verify_identities when both sides are computable; rows
#: citing outside computations are data with congruence/support checks only.
LOCAL_COHOMOLOGY_PROVENANCE = {
    ("S", "O3bar", 1): "character identity (localization)",
    ("Q0", "O3bar", 1): "character identity (localization)",
    ("G1", "O3bar", 1): "character identity (localization)",
    ("G-1", "O3bar", 1): "character identity (localization)",
    ("S", "O2bar", 2): "verified: congruence+support only",
    ("S", "O0", 4): "verified: congruence+support only",
}


def _support_of_object(name: str) -> str:
    if name in SUPPORT:
        return SUPPORT[name]
    if name in ("SdeltaModS",):
        return "O3"  # supported on the discriminant hypersurface
    raise KeyError(f"unknown module name: {name!r}")


def local_cohomology(name: str, support: str, k: int) -> tuple[str, ...]:
    """Simple factors of H^k with the given support applied to the module.

    Supports not strictly smaller than the support of the module give
    the module itself in degree 0 and nothing elsewhere; every entry
    absent from the table is zero.
    """
    if support not in _CLOSURE_DIM:
        raise KeyError(f"unknown support: {support!r} (expected one of {SUPPORT_CLOSURES})")
    own = _support_of_object(name)
    own_dim = {"O0": 0, "O2": 2, "O3": 3, "O4": 4}[own]
    if _CLOSURE_DIM[support] >= own_dim:
        if k == 0:
            return tuple(COMPOSITION_SERIES_FACTORS.get(name, (name,)))
        return ()
    entry = _LOCAL_COHOMOLOGY.get((name, support, k))
    return entry[0] if entry else ()


def local_cohomology_is_extension(name: str, support: str, k: int) -> bool:
    """Whether the recorded group is a non-split extension of its factors."""
    entry = _LOCAL_COHOMOLOGY.get((name, support, k))
    return bool(entry and entry[1])


def local_cohomology_entries() -> tuple[tuple[str, str, int], ...]:
    """Keys of all non-zero recorded local cohomology groups."""
    return tuple(sorted(_LOCAL_COHOMOLOGY))


COMPOSITION_SERIES_FACTORS = {fact.ambient: fact.factors for fact in COMPOSITION_SERIES}


def _sum_of(names, policy) -> Character:
    total = ch.zero_character()
    for n in names:
        total = total + character_of(n, policy)
    return total


def verify_identities(
    lo: int = -30,
    hi: int = 30,
    policy: StabilizationPolicy = StabilizationPolicy(),
    overrides: dict[str, Character] | None = None,
) -> list[dict]:
    """Replay the catalog's character identities coefficientwise on a box.

    Returns one entry per identity: name, status ("pass"/"fail") and,
    on failure, the first counterexample weight.  The left-hand sides of
    the localization identities are computed by the stabilization limit;
    the right-hand sides come from the independent closed/count formulas,
    so the two routes genuinely cross-check each other.  `overrides`
    substitutes characters by name (used to exercise failure reporting).
    """
    get = lambda n: (overrides or {}).get(n) or character_of(n, policy)
    checks: list[dict] = []

    def record(name: str, witness: Weight | None):
        checks.append(
            {"name": name, "status": "pass" if witness is None else "fail"}
            | ({} if witness is None else {"witness": str(witness)})
        )

    def equal(name: str, left: Character, right: Character):
        record(name, ch.first_disagreement(left, right, lo, hi))

    loc_s = ch.localize(get("S"), policy)
    equal("[Sdelta] = [S] + [P] + [E] (localize vs formulas)",
          loc_s, get("S") + get("P") + get("E"))
    loc_q0 = ch.localize(get("Q0"), policy)
    equal("[Q0delta] = [Q0] + [P] + [D0] (localize vs formulas)",
          loc_q0, get("Q0") + get("P") + get("D0"))
    equal("[F1] = [G1] + [D1]", get("F1"), get("G1") + get("D1"))
    equal("[F-1] = [G-1] + [D2]", get("F-1"), get("G-1") + get("D2"))
    equal("[H^1_O3bar(G1)] = [D1]",
          ch.localize(get("G1"), policy) - get("G1"), get("D1"))

    def congruence(name: str, char: Character, residue: int):
        witness = None
        for lam in ch.box_weights(lo, hi):
            if char.mult(lam) != 0 and (lam[0] + lam[1] - residue) % 3 != 0:
                witness = lam
                break
        record(name, witness)

    for j in (0, 1, 2):
        congruence(f"[D{j}] supported on l1+l2 = -{j} mod 3", get(f"D{j}"), -j)
    for j, name in ((0, "Q0"), (1, "Q1"), (2, "Q2")):
        congruence(f"[{name}] supported on l1+l2 = {j} mod 3", get(name), j)

    def diagonal(name: str, char: Character, expected):
        witness = None
        for a in range(lo, hi + 1):
            if char.mult((a, a)) != expected(a):
                witness = (a, a)
                break
        record(name, witness)

    diagonal("[D1] SL-invariants: 1 iff a = 1 mod 6, a <= -5", get("D1"),
             lambda a: 1 if (a % 6 == 1 and a <= -5) else 0)
    diagonal("[D2] SL-invariants: 1 iff a = -1 mod 6, a <= -7", get("D2"),
             lambda a: 1 if (a % 6 == 5 and a <= -7) else 0)
    diagonal("[D0] has no SL-invariants", get("D0"), lambda a: 0)

    witness = None
    for lam in ch.box_weights(lo, hi):
        if get("P").mult(lam) < 0:
            witness = lam
            break
    record("[P] is non-negative", witness)

    obstruction = (
        ("<[D0], e^(-6,-9)> = 1", get("D0").mult((-6, -9)), 1),
        ("<[D0], e^(0,-3)> = 0", get("D0").mult((0, -3)), 0),
        ("<[D0], e^(-3,-6)> = 0", get("D0").mult((-3, -6)), 0),
        ("<[Q0], e^(0,-3)> = 0", get("Q0").mult((0, -3)), 0),
    )
    for name, got, expected in obstruction:
        checks.append(
            {"name": f"submodule obstruction: {name}", "status": "pass" if got == expected else "fail"}
            | ({} if got == expected else {"witness": f"got {got}"})
        )

    return checks


def fourier_coherence(lo: int = -30, hi: int = 30) -> list[dict]:
    """character_of(fourier_partner(x)) == fourier(character_of(x)) on the box."""
    checks = []
    for name in SIMPLES:
        partner = fourier_partner(name)
        witness = ch.first_disagreement(
            character_of(partner), ch.fourier(character_of(name)), lo, hi
        )
        checks.append(
            {"name": f"F([{name}]) = [{partner}]", "status": "pass" if witness is None else "fail"}
            | ({} if witness is None else {"witness": str(witness)})
        )
    return checks
