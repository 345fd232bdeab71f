import logging
from dataclasses import dataclass
from typing import Callable

import numpy as np

from closedform import (
    GroundedFunction,
    build_meet_hypermatrix,
    factor_closed_fdet,
    genhauk_fdet,
    hat_transform,
    li_expansion_det,
    ligen_fdet,
    lindstrom_det,
    lindstrom_fdet,
    meet_closed_fdet,
    mobius_transform,
    zeta_transform,
)
from formats import dump_fmap_table, dump_grounded, dump_hypermatrix, dump_poset
from hyperdet import (
    Hypermatrix,
    SignProduct,
    TableFMap,
    cayley_det,
    det,
    det1,
    fdet_bruteforce,
    fdet_expansion,
    group_action,
)
from numth import (
    builtin_function,
    cesaro_check,
    divisor_semilattice,
    divisors,
    euler_phi,
    gcd_closure,
    gcd_grounded_function,
    gcd_hypermatrix,
)
from protocol.fmap import FMapLike
from scalar import Scalar, equals, format_scalar, product, total
from verification.instances import (
    random_factor_closed_subset,
    random_fmap,
    random_grounded,
    random_hypermatrix,
    random_int,
    random_meet_closed_subset,
    random_meet_semilattice,
    random_poset,
    random_rational_matrix,
    random_subset,
)

logger = logging.getLogger(__name__)

LINDSTROM_MAX = 6
EXPANSION_LATTICE_MAX = 7
EXPANSION_INDEX_MAX = 3
SMITH_MAX = 8
CESARO_MAX = 30


@dataclass(frozen=True)
class Bounds:
    nmax: int
    kmax: int
    threads: int = 1


@dataclass(frozen=True)
class Counterexample:
    detail: str
    reproducer: str


@dataclass(frozen=True)
class Failure:
    property: str
    seed: int
    trial: int
    detail: str
    reproducer: str

    def report(self) -> str:
        return (
            f"FAILED {self.property} (seed {self.seed}, trial {self.trial}): {self.detail}\n"
            f"{self.reproducer}"
        )


@dataclass(frozen=True)
class PropertyResult:
    name: str
    passed: int
    total: int
    failure: Failure | None = None


Check = Callable[[np.random.Generator, Bounds], Counterexample | None]


def _size(rng: np.random.Generator, low: int, high: int) -> int:
    return int(rng.integers(low, max(low, high), endpoint=True))


def _order(rng: np.random.Generator, choices: list[int]) -> int:
    return int(rng.choice(choices))


def _fmap_text(f: FMapLike) -> str:
    if isinstance(f, TableFMap):
        return "# fmap table\n" + dump_fmap_table(f)
    return f"# fmap {type(f).__name__}\n"


def _hyper_dump(m: Hypermatrix, f: FMapLike | None = None) -> str:
    text = "# hypermatrix\n" + dump_hypermatrix(m)
    return text + (_fmap_text(f) if f is not None else "")


def _gf_dump(gf: GroundedFunction, k: int, f: FMapLike | None = None) -> str:
    text = f"# grounded function, k = {k}\n" + dump_grounded(gf)
    return text + (_fmap_text(f) if f is not None else "")


def _compare(
    left_name: str,
    left: Scalar,
    right_name: str,
    right: Scalar,
    reproducer: Callable[[], str],
) -> Counterexample | None:
    if equals(left, right):
        return None
    return Counterexample(
        f"{left_name} = {format_scalar(left)} but {right_name} = {format_scalar(right)}",
        reproducer(),
    )


def check_expansion(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    n = _size(rng, 1, min(b.nmax, 4))
    k = _size(rng, 2, min(b.kmax, 4))
    m = random_hypermatrix(rng, n, k)
    f = random_fmap(rng, n, k - 2)
    return _compare(
        "fdet_expansion",
        fdet_expansion(m, f, threads=b.threads),
        "fdet_bruteforce",
        fdet_bruteforce(m, f, threads=b.threads, force=True),
        lambda: _hyper_dump(m, f),
    )


def check_odd_vanishing(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    # n = 1 is a single entry and does not vanish
    n = _size(rng, 2, min(b.nmax, 4))
    m = random_hypermatrix(rng, n, 3)
    value = cayley_det(m, threads=b.threads, force=True)
    return _compare("cayley_det", value, "zero", 0, lambda: _hyper_dump(m))


def check_even_coincidence(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    n = _size(rng, 1, min(b.nmax, 3))
    k = _order(rng, [k for k in (2, 4) if k <= max(b.kmax, 2)])
    m = random_hypermatrix(rng, n, k)
    return _compare(
        "cayley_det",
        cayley_det(m, threads=b.threads, force=True),
        "det1",
        det1(m, threads=b.threads, force=True),
        lambda: _hyper_dump(m),
    )


def check_invariance(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    n = _size(rng, 1, min(b.nmax, 3))
    m = random_hypermatrix(rng, n, 3)
    g = random_rational_matrix(rng, n)
    f = random_fmap(rng, n, 1)

    def reproducer() -> str:
        rows = "\n".join(" ".join(format_scalar(v) for v in row) for row in g)
        return _hyper_dump(m, f) + "# group element\n" + rows + "\n"

    return _compare(
        "Det_F(g.M)",
        fdet_bruteforce(group_action(g, m), f, threads=b.threads, force=True),
        "det(g) Det_F(M)",
        det(g) * fdet_bruteforce(m, f, threads=b.threads, force=True),
        reproducer,
    )


def check_lindstrom(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    sl = random_meet_semilattice(rng, _size(rng, 1, LINDSTROM_MAX))
    diagonal = bool(rng.random() < 0.5)
    gf = random_grounded(rng, sl, range(sl.n), diagonal)
    closed = lindstrom_det(gf)
    if not gf.is_diagonal() and not (type(closed) is int and closed == 0):
        return Counterexample(
            f"zero branch returned {format_scalar(closed)}", _gf_dump(gf, 2)
        )
    return _compare(
        "lindstrom_det", closed, "det", det(build_meet_hypermatrix(gf, 2).entries),
        lambda: _gf_dump(gf, 2),
    )


def check_lindstrom_fdet(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    sl = random_meet_semilattice(rng, _size(rng, 1, min(b.nmax, 4)))
    k = _order(rng, [k for k in (3, 4) if k <= b.kmax] or [2])
    f = random_fmap(rng, sl.n, k - 2)
    gf = random_grounded(rng, sl, range(sl.n), diagonal=bool(rng.random() < 0.5))
    return _compare(
        "lindstrom_fdet",
        lindstrom_fdet(gf, k, f),
        "fdet_bruteforce",
        fdet_bruteforce(build_meet_hypermatrix(gf, k), f, threads=b.threads, force=True),
        lambda: _gf_dump(gf, k, f),
    )


def check_meet_closed(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    sl = random_meet_semilattice(rng, _size(rng, 1, LINDSTROM_MAX))
    subset = random_meet_closed_subset(rng, sl, min(b.nmax, 4))
    k = _size(rng, 2, min(b.kmax, 4))
    f = random_fmap(rng, len(subset), k - 2)
    gf = random_grounded(rng, sl, subset)

    small = {x: random_int(rng) for x in range(sl.n)}
    big = zeta_transform(sl.poset, small)
    hat = hat_transform(sl, subset, small)
    for y in subset:
        below = total(hat[w] for w in subset if sl.le(w, y))
        if not equals(big[y], below):
            return Counterexample(
                f"F({sl.labels[y]}) = {format_scalar(big[y])} but the hat sum is "
                f"{format_scalar(below)}",
                "# poset\n" + dump_poset(sl.poset),
            )

    return _compare(
        "meet_closed_fdet",
        meet_closed_fdet(gf, k, f),
        "fdet_bruteforce",
        fdet_bruteforce(build_meet_hypermatrix(gf, k), f, threads=b.threads, force=True),
        lambda: _gf_dump(gf, k, f),
    )


def check_factor_closed(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    sl = random_meet_semilattice(rng, _size(rng, 1, LINDSTROM_MAX))
    subset = random_factor_closed_subset(rng, sl, min(b.nmax, 4))
    k = _size(rng, 2, min(b.kmax, 4))
    f = random_fmap(rng, len(subset), k - 2)
    gf = random_grounded(rng, sl, subset, diagonal=bool(rng.random() < 0.5))
    return _compare(
        "factor_closed_fdet",
        factor_closed_fdet(gf, k, f),
        "fdet_bruteforce",
        fdet_bruteforce(build_meet_hypermatrix(gf, k), f, threads=b.threads, force=True),
        lambda: _gf_dump(gf, k, f),
    )


def check_li_expansions(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    sl = random_meet_semilattice(rng, _size(rng, 1, EXPANSION_LATTICE_MAX))
    index = random_subset(rng, sl, _size(rng, 1, min(b.nmax, EXPANSION_INDEX_MAX)))
    k = _size(rng, 2, min(b.kmax, 3))
    f = random_fmap(rng, len(index), k - 2)
    diagonal = bool(rng.random() < 0.5)

    gf = random_grounded(rng, sl, index, diagonal)
    failure = _compare(
        "li_expansion_det",
        li_expansion_det(gf, threads=b.threads),
        "det",
        det(build_meet_hypermatrix(gf, 2).entries),
        lambda: _gf_dump(gf, 2),
    )
    if failure:
        return failure
    oracle = fdet_bruteforce(build_meet_hypermatrix(gf, k), f, threads=b.threads, force=True)
    failure = _compare(
        "ligen_fdet", ligen_fdet(gf, k, f, threads=b.threads), "fdet_bruteforce", oracle,
        lambda: _gf_dump(gf, k, f),
    )
    if failure:
        return failure

    uniform = random_grounded(rng, sl, index, diagonal, uniform=True)
    oracle = fdet_bruteforce(build_meet_hypermatrix(uniform, k), f, threads=b.threads, force=True)
    failure = _compare(
        "genhauk_fdet", genhauk_fdet(uniform, k, f, threads=b.threads), "fdet_bruteforce", oracle,
        lambda: _gf_dump(uniform, k, f),
    )
    if failure:
        return failure
    return _compare(
        "ligen_fdet", ligen_fdet(uniform, k, f, threads=b.threads), "fdet_bruteforce", oracle,
        lambda: _gf_dump(uniform, k, f),
    )


def check_smith(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    n = _size(rng, 1, SMITH_MAX)
    values = list(range(1, n + 1))
    m = gcd_hypermatrix(values, 2, builtin_function("id", n))
    return _compare(
        "det(gcd(i, j))",
        det(m.entries),
        "product of phi",
        product(euler_phi(i) for i in values),
        lambda: _hyper_dump(m),
    )


def check_lehmer(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    candidates = [m for m in range(1, CESARO_MAX + 1) if len(divisors(m)) <= min(b.nmax, 4)]
    top = _order(rng, candidates)
    values = divisors(top)
    k = _order(rng, [k for k in (2, 4) if k <= max(b.kmax, 2)])
    F = builtin_function(str(rng.choice(["id", "phi", "sigma", "tau"])), top)
    f = SignProduct(k - 2)
    gf = gcd_grounded_function(values, F)
    return _compare(
        "factor_closed_fdet",
        factor_closed_fdet(gf, k, f),
        "fdet_bruteforce",
        fdet_bruteforce(gcd_hypermatrix(values, k, F), f, threads=b.threads, force=True),
        lambda: f"# divisors of {top}, F = {F.name}\n" + _gf_dump(gf, k, f),
    )


def check_cesaro(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    m = _size(rng, 1, CESARO_MAX)
    n = _size(rng, 1, CESARO_MAX)
    F = builtin_function(str(rng.choice(["id", "phi", "one"])), CESARO_MAX)
    left, right = cesaro_check(F, m, n)
    return _compare(
        "mu * (f o gcd_m)",
        left,
        "divisor form",
        right,
        lambda: f"# m = {m}, n = {n}, f = {F.name}\n",
    )


def check_mobius_inversion(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    p = random_poset(rng, _size(rng, 1, LINDSTROM_MAX))
    F = {x: random_int(rng) for x in range(p.n)}
    for name, there, back in (
        ("zeta(mobius(F))", mobius_transform, zeta_transform),
        ("mobius(zeta(F))", zeta_transform, mobius_transform),
    ):
        round_trip = back(p, there(p, F))
        for x in range(p.n):
            if not equals(round_trip[x], F[x]):
                return Counterexample(
                    f"{name} differs from F at {p.labels[x]}", "# poset\n" + dump_poset(p)
                )
    return None


def check_gcd_meets(rng: np.random.Generator, b: Bounds) -> Counterexample | None:
    seeds = [_size(rng, 1, CESARO_MAX) for _ in range(_size(rng, 1, 5))]
    values = gcd_closure(seeds)
    sl, position = divisor_semilattice(values)
    for a in values:
        for c in values:
            meet = int(sl.labels[sl.meet(position[a], position[c])])
            if meet != np.gcd(a, c):
                return Counterexample(
                    f"meet({a}, {c}) = {meet}", f"# gcd closure of {sorted(set(seeds))}\n"
                )
    return None


PROPERTIES: dict[str, Check] = {
    "expansion-equals-bruteforce": check_expansion,
    "odd-order-vanishes": check_odd_vanishing,
    "even-order-coincides": check_even_coincidence,
    "linear-invariance": check_invariance,
    "lindstrom": check_lindstrom,
    "lindstrom-fdet": check_lindstrom_fdet,
    "meet-closed": check_meet_closed,
    "factor-closed": check_factor_closed,
    "subset-expansions": check_li_expansions,
    "smith": check_smith,
    "lehmer": check_lehmer,
    "cesaro": check_cesaro,
    "mobius-inversion": check_mobius_inversion,
    "gcd-meets": check_gcd_meets,
}


def run_property(
    position: int, name: str, seed: int, trials: int, bounds: Bounds
) -> PropertyResult:
    """Run one property over seeded trials, stopping at the first counterexample."""
    check = PROPERTIES[name]
    for trial in range(trials):
        rng = np.random.default_rng([seed, position, trial])
        found = check(rng, bounds)
        if found is not None:
            logger.debug(f"{name}: counterexample at trial {trial}")
            failure = Failure(name, seed, trial, found.detail, found.reproducer)
            return PropertyResult(name, trial, trials, failure)
    return PropertyResult(name, trials, trials)


def run_suite(seed: int, trials: int, bounds: Bounds) -> list[PropertyResult]:
    return [
        run_property(position, name, seed, trials, bounds)
        for position, name in enumerate(PROPERTIES)
    ]
