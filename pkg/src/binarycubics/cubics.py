"""Quivers attached to the category of equivariant D-modules on binary cubics.

The category of GL2-equivariant coherent D-modules on the space of
binary cubic forms is equivalent to representations of a 14-vertex
quiver whose relations are all 2-cycles and all non-diagonal
compositions through the central vertex p.  This module builds that
quiver ("paper_full"), its 5-vertex big component ("big_component"),
the node-separated quiver ("separated"), the extended Dynkin quiver of
the four subspace problem ("d4hat") and the 2-vertex component
("two_vertex_pair"), together with the functors between them: node
separation, the two embeddings of four-subspace representations into
the big component, the one-parameter families R_n(lambda), the
injective envelope of the middle simple P, and the randomized checks
that every indecomposable of the big component is a
projective-injective or the image of a four-subspace indecomposable
under one of the embeddings (domestic tame type).

In big_component the outer vertices are numbered so that the surviving
diagonal compositions are 1 -> 2, 2 -> 1, 3 -> 4, 4 -> 3; the simples
they correspond to are 1 = S, 2 = E, 3 = D0, 4 = Q0, 5 = P (the pairs
exchanged by the Fourier transform sit opposite each other).
"""

from __future__ import annotations

import random
from fractions import Fraction

from . import ratlinalg as rl
from .quiver import (
    Arrow,
    BoundQuiver,
    Quiver,
    RelationSet,
    RepMorphism,
    Representation,
    cokernel,
    decompose_certified,
    direct_sum,
    is_isomorphic,
)

NAMED_QUIVERS = ("paper_full", "big_component", "separated", "d4hat", "two_vertex_pair")

#: surviving diagonal pairs of the big component: alpha_i then beta_j is
#: nonzero exactly for these (i, j)
_DIAGONAL = {(1, 2), (2, 1), (3, 4), (4, 3)}

_builders = {}
_cache: dict[str, BoundQuiver] = {}


def build(name: str) -> BoundQuiver:
    """The named quiver with its relations (instances are shared)."""
    if name not in _builders:
        raise KeyError(f"unknown quiver {name!r}; expected one of {NAMED_QUIVERS}")
    if name not in _cache:
        _cache[name] = _builders[name]()
    return _cache[name]


def named_quivers() -> dict[str, BoundQuiver]:
    return {name: build(name) for name in NAMED_QUIVERS}


def _register(name):
    def deco(fn):
        _builders[name] = fn
        return fn
    return deco


@_register("paper_full")
def _paper_full() -> BoundQuiver:
    labels = {
        "s": "S", "d0": "D0", "p": "P", "q0": "Q0", "e": "E",
        "g1": "G1", "d1": "D1", "g-1": "G-1", "d2": "D2",
        "q1": "Q1", "q2": "Q2", "g2": "G2", "g3": "G3", "g4": "G4",
    }
    outer = {1: "s", 2: "d0", 3: "e", 4: "q0"}
    arrows = [Arrow(f"alpha{i}", outer[i], "p") for i in (1, 2, 3, 4)]
    arrows += [Arrow(f"beta{i}", "p", outer[i]) for i in (1, 2, 3, 4)]
    arrows += [
        Arrow("gamma1", "g1", "d1"), Arrow("delta1", "d1", "g1"),
        Arrow("gamma-1", "g-1", "d2"), Arrow("delta-1", "d2", "g-1"),
    ]
    zero_paths = []
    for i in (1, 2, 3, 4):
        zero_paths.append((f"alpha{i}", f"beta{i}"))
        zero_paths.append((f"beta{i}", f"alpha{i}"))
    for i in ("1", "-1"):
        zero_paths.append((f"gamma{i}", f"delta{i}"))
        zero_paths.append((f"delta{i}", f"gamma{i}"))
    for i, j in ((1, 2), (1, 4), (2, 1), (2, 3), (3, 2), (3, 4), (4, 1), (4, 3)):
        zero_paths.append((f"alpha{i}", f"beta{j}"))
    quiver = Quiver(tuple(labels), tuple(arrows))
    return BoundQuiver(quiver, RelationSet.monomial(zero_paths), "paper_full", labels)


@_register("big_component")
def _big_component() -> BoundQuiver:
    labels = {"1": "S", "2": "E", "3": "D0", "4": "Q0", "5": "P"}
    arrows = [Arrow(f"alpha{i}", str(i), "5") for i in (1, 2, 3, 4)]
    arrows += [Arrow(f"beta{i}", "5", str(i)) for i in (1, 2, 3, 4)]
    zero_paths = []
    for i in (1, 2, 3, 4):
        zero_paths.append((f"beta{i}", f"alpha{i}"))
        for j in (1, 2, 3, 4):
            if (i, j) not in _DIAGONAL and i != j:
                zero_paths.append((f"alpha{i}", f"beta{j}"))
        zero_paths.append((f"alpha{i}", f"beta{i}"))
    quiver = Quiver(("1", "2", "3", "4", "5"), tuple(arrows))
    return BoundQuiver(quiver, RelationSet.monomial(zero_paths), "big_component", labels)


@_register("separated")
def _separated() -> BoundQuiver:
    vertices = ("1", "2", "3", "4", "1'", "2'", "3'", "4'", "5")
    arrows = [Arrow(f"alpha{i}", str(i), "5") for i in (1, 2, 3, 4)]
    arrows += [Arrow(f"beta{i}", "5", f"{i}'") for i in (1, 2, 3, 4)]
    zero_paths = []
    for i in (1, 2, 3, 4):
        for j in (1, 2, 3, 4):
            if (i, j) not in _DIAGONAL:
                zero_paths.append((f"alpha{i}", f"beta{j}"))
    quiver = Quiver(vertices, tuple(arrows))
    return BoundQuiver(quiver, RelationSet.monomial(zero_paths), "separated")


@_register("d4hat")
def _d4hat() -> BoundQuiver:
    arrows = tuple(Arrow(f"alpha{i}", str(i), "5") for i in (1, 2, 3, 4))
    quiver = Quiver(("1", "2", "3", "4", "5"), arrows)
    return BoundQuiver(quiver, RelationSet(()), "d4hat")


@_register("two_vertex_pair")
def _two_vertex_pair() -> BoundQuiver:
    quiver = Quiver(("1", "2"), (Arrow("a", "1", "2"), Arrow("b", "2", "1")))
    return BoundQuiver(quiver, RelationSet.monomial([("a", "b"), ("b", "a")]), "two_vertex_pair")


def separate_node(V: Representation) -> Representation:
    """Separate the four outer nodes of a big-component representation.

    At each outer vertex x the incoming image Im V(beta_x) splits off to
    the primed copy x' and x keeps the quotient V_x / Im V(beta_x); the
    arrow out of x descends because of the 2-cycle relation, and the
    arrow into x corestricts.  Non-simple indecomposables correspond
    bijectively under this functor.  Total dimension is preserved.
    """
    if V.bq is not build("big_component"):
        raise ValueError("separate_node expects a representation of big_component")
    out_bq = build("separated")
    dims: dict[str, int] = {"5": V.dims["5"]}
    maps: dict[str, rl.Matrix] = {}
    for i in (1, 2, 3, 4):
        x = str(i)
        beta = V.maps[f"beta{i}"]            # V_5 -> V_x
        d_x, d_5 = V.dims[x], V.dims["5"]
        img_basis, pivots = rl.column_space_basis(beta, d_5)
        r = len(pivots)
        dims[f"{i}'"] = r
        dims[x] = d_x - r
        # corestriction of beta to its image
        if r and d_5:
            core = rl.solve(img_basis, beta, r)
            assert core is not None
            maps[f"beta{i}"] = core
        else:
            maps[f"beta{i}"] = [[] for _ in range(r)] if d_5 == 0 else rl.zeros(r, d_5)
        # alpha descends to the quotient V_x / im(beta)
        proj, section = rl.quotient_maps(beta, d_x, d_5)
        alpha = V.maps[f"alpha{i}"]          # V_x -> V_5
        q = d_x - r
        if d_5 and q:
            descended = rl.matmul(alpha, section)
        elif d_5 == 0:
            descended = []
        else:
            descended = [[] for _ in range(d_5)]
        maps[f"alpha{i}"] = descended
    return Representation(out_bq, dims, maps)


def embed_alpha(V: Representation) -> Representation:
    """Four-subspace representation placed on the alpha arrows (betas zero)."""
    if V.bq is not build("d4hat"):
        raise ValueError("embed_alpha expects a representation of d4hat")
    bq = build("big_component")
    dims = dict(V.dims)
    maps = {f"alpha{i}": V.maps[f"alpha{i}"] for i in (1, 2, 3, 4)}
    return Representation(bq, dims, maps)


def embed_beta(V: Representation) -> Representation:
    """Dualized four-subspace representation on the beta arrows (alphas zero).

    Spaces are replaced by their duals in the standard basis, so each
    beta_i carries the transpose of V(alpha_i).
    """
    if V.bq is not build("d4hat"):
        raise ValueError("embed_beta expects a representation of d4hat")
    bq = build("big_component")
    dims = dict(V.dims)
    maps = {}
    for i in (1, 2, 3, 4):
        A = V.maps[f"alpha{i}"]  # d5 x d_i
        d_i, d_5 = V.dims[str(i)], V.dims["5"]
        if d_i == 0:
            maps[f"beta{i}"] = []
        elif d_5 == 0:
            maps[f"beta{i}"] = [[] for _ in range(d_i)]
        else:
            maps[f"beta{i}"] = [list(row) for row in zip(*A)]
    return Representation(bq, dims, maps)


def jordan_block(n: int, lam) -> rl.Matrix:
    lam = Fraction(lam)
    J = rl.zeros(n, n)
    for i in range(n):
        J[i][i] = lam
        if i + 1 < n:
            J[i][i + 1] = Fraction(1)
    return J


def rn_family(n: int, lam) -> Representation:
    """The one-parameter family R_n(lambda) of four-subspace indecomposables.

    Dimension vector (n, n, n, n, 2n); the four subspaces of C^(2n) are
    the column spans of [I;0], [0;I], [I;I] and [I;J_n(lambda)] with
    J_n(lambda) the upper Jordan block.
    """
    if n < 1:
        raise ValueError("n must be positive")
    bq = build("d4hat")
    I = rl.identity(n)
    Z = rl.zeros(n, n)
    J = jordan_block(n, lam)
    maps = {
        "alpha1": rl.vstack(I, Z),
        "alpha2": rl.vstack(Z, I),
        "alpha3": rl.vstack(I, I),
        "alpha4": rl.vstack(I, J),
    }
    dims = {"1": n, "2": n, "3": n, "4": n, "5": 2 * n}
    return Representation(bq, dims, maps)


def injective_envelope_of_P() -> Representation:
    """Cokernel of the diagonal embedding of P into the two rank-one
    extensions over the discriminant hypersurface.

    H has one-dimensional spaces at p, d0, e with alpha2 = alpha3 = 1;
    its Fourier image has them at p, s, q0 with alpha1 = alpha4 = 1.
    P embeds diagonally at p, and the cokernel is checked to be the
    injective envelope of the simple at p.
    """
    bq = build("paper_full")
    one = [[Fraction(1)]]
    H = Representation(bq, {"p": 1, "d0": 1, "e": 1}, {"alpha2": one, "alpha3": one})
    FH = Representation(bq, {"p": 1, "s": 1, "q0": 1}, {"alpha1": one, "alpha4": one})
    both = direct_sum(H, FH)
    P = bq.simple("p")
    diag = RepMorphism(P, both, {"p": [[Fraction(1)], [Fraction(1)]]})
    I_P, _ = cokernel(diag)
    assert is_isomorphic(I_P, bq.injective("p")), "cokernel must be the injective envelope"
    return I_P


def _sandwich(rng: random.Random, target_basis: list[rl.Vector], proj: rl.Matrix,
              m: int, n: int) -> rl.Matrix:
    """Random m x n matrix of the form L @ R @ proj.

    Columns land in the span of target_basis (vectors in Q^m) and the
    matrix kills the kernel of proj (a q x n quotient map), with R a
    random small-integer matrix: the general solution of a pair of
    one-sided linear constraints.
    """
    r, q = len(target_basis), len(proj)
    if m == 0:
        return []
    if n == 0:
        return [[] for _ in range(m)]
    if r == 0 or q == 0:
        return rl.zeros(m, n)
    L = [[vec[i] for vec in target_basis] for i in range(m)]
    R = [[Fraction(rng.randint(-2, 2)) for _ in range(q)] for _ in range(r)]
    return rl.matmul(rl.matmul(L, R), proj)


def random_big_component_rep(rng: random.Random, max_outer: int = 3,
                             max_center: int = 6) -> Representation:
    """Seeded random representation of the big component.

    One side of the arrows (alphas or betas, chosen per sample) gets
    free small-integer matrices; each arrow on the other side is then
    sampled from the exact solution space of the relations, which are
    linear in it once the free side is fixed: it must kill the images of
    the arrows it composes to zero with, and land in the kernel of the
    arrow that composes to zero after it.  A sampling heuristic, not
    uniform on the relation variety.
    """
    bq = build("big_component")
    dims = {str(i): rng.randint(0, max_outer) for i in (1, 2, 3, 4)}
    dims["5"] = rng.randint(0, max_center)
    d5 = dims["5"]

    def rand(m, n):
        if m == 0:
            return []
        if n == 0:
            return [[] for _ in range(m)]
        return [[Fraction(rng.randint(-3, 3)) for _ in range(n)] for _ in range(m)]

    maps: dict[str, rl.Matrix] = {}
    if rng.random() < 0.5:
        for i in (1, 2, 3, 4):
            maps[f"alpha{i}"] = rand(d5, dims[str(i)])
        for j in (1, 2, 3, 4):
            d_j = dims[str(j)]
            # columns of the constrained alphas span the subspace to kill
            span = [[] for _ in range(d5)]
            width = 0
            for i in (1, 2, 3, 4):
                if (i, j) not in _DIAGONAL:
                    span = rl.hstack(span, maps[f"alpha{i}"])
                    width += dims[str(i)]
            proj, _ = rl.quotient_maps(span, d5, width)
            ker = rl.nullspace(maps[f"alpha{j}"], d_j)
            maps[f"beta{j}"] = _sandwich(rng, ker, proj, d_j, d5)
    else:
        for i in (1, 2, 3, 4):
            maps[f"beta{i}"] = rand(dims[str(i)], d5)
        for i in (1, 2, 3, 4):
            d_i = dims[str(i)]
            stacked: list[rl.Vector] = []
            for j in (1, 2, 3, 4):
                if (i, j) not in _DIAGONAL:
                    stacked.extend(list(row) for row in maps[f"beta{j}"])
            ker = rl.nullspace(stacked, d5)
            proj, _ = rl.quotient_maps(maps[f"beta{i}"], d_i, d5)
            maps[f"alpha{i}"] = _sandwich(rng, ker, proj, d5, d_i)
    return Representation(bq, dims, maps)


def check_tame_classification(samples: int = 100, max_outer: int = 3,
                              max_center: int = 6, seed: int = 0,
                              trials: int = 40) -> dict:
    """Randomized check that big-component indecomposables fall into the
    three classified cases.

    Decomposes seeded random representations and verifies every summand
    is (i) one of the four projective-injectives, (ii) has all beta
    maps zero, or (iii) has all alpha maps zero.  Summands whose
    indecomposability could not be certified are counted separately as
    inconclusive (their case classification is still checked).
    """
    bq = build("big_component")
    rng = random.Random(seed)
    proj_inj = [bq.projective(str(i)) for i in (1, 2, 3, 4)]
    report = {
        "samples": samples,
        "summands": 0,
        "case_projective_injective": 0,
        "case_beta_zero": 0,
        "case_alpha_zero": 0,
        "violations": [],
        "inconclusive": 0,
    }
    for k in range(samples):
        V = random_big_component_rep(rng, max_outer, max_center)
        for W, certified in decompose_certified(V, seed=seed * 100003 + k, trials=trials):
            report["summands"] += 1
            if not certified:
                report["inconclusive"] += 1
            beta_zero = all(rl.is_zero(W.maps[f"beta{i}"]) for i in (1, 2, 3, 4))
            alpha_zero = all(rl.is_zero(W.maps[f"alpha{i}"]) for i in (1, 2, 3, 4))
            if beta_zero:
                report["case_beta_zero"] += 1
            if alpha_zero:
                report["case_alpha_zero"] += 1
            if beta_zero or alpha_zero:
                continue
            if any(is_isomorphic(W, P) for P in proj_inj if W.dim_vector() == P.dim_vector()):
                report["case_projective_injective"] += 1
            else:
                report["violations"].append(
                    {"sample": k, "dim_vector": list(W.dim_vector())}
                )
    report["inconclusive_rate"] = (
        report["inconclusive"] / report["summands"] if report["summands"] else 0.0
    )
    return report


def check_two_vertex_component(samples: int = 50, max_dim: int = 4, seed: int = 0) -> dict:
    """Randomized check that the 2-cycle quiver has only four indecomposables.

    Every summand of a random representation must be one of the two
    simples or one of their two projective covers (one arrow carrying an
    isomorphism, the other zero).
    """
    bq = build("two_vertex_pair")
    rng = random.Random(seed)
    report = {"samples": samples, "summands": 0,
              "simple_1": 0, "simple_2": 0, "arrow_a": 0, "arrow_b": 0,
              "violations": []}
    for k in range(samples):
        d1, d2 = rng.randint(0, max_dim), rng.randint(0, max_dim)
        if d2 == 0:
            a = []
        elif d1 == 0:
            a = [[] for _ in range(d2)]
        else:
            a = [[Fraction(rng.randint(-3, 3)) for _ in range(d1)] for _ in range(d2)]
        # b must kill Im(a) and land in ker(a)
        ker = rl.nullspace(a, d1)
        proj, _ = rl.quotient_maps(a, d2, d1)
        b = _sandwich(rng, ker, proj, d1, d2)
        V = Representation(bq, {"1": d1, "2": d2}, {"a": a, "b": b})
        for W, _certified in decompose_certified(V, seed=seed * 99991 + k):
            report["summands"] += 1
            dv = W.dim_vector()
            ra, rb = W.arrow_rank("a"), W.arrow_rank("b")
            if dv == (1, 0):
                report["simple_1"] += 1
            elif dv == (0, 1):
                report["simple_2"] += 1
            elif dv == (1, 1) and ra == 1 and rb == 0:
                report["arrow_a"] += 1
            elif dv == (1, 1) and ra == 0 and rb == 1:
                report["arrow_b"] += 1
            else:
                report["violations"].append({"sample": k, "dim_vector": list(dv)})
    return report
