import hashlib
import logging
import time
from dataclasses import dataclass
from typing import Callable

from closedform import (
    GroundedFunction,
    build_meet_hypermatrix,
    closure_order,
    factor_closed_fdet,
    genhauk_fdet,
    ligen_fdet,
    lindstrom_fdet,
    meet_closed_fdet,
)
from config import Config
from errors import PreconditionError
from formats import dump_fmap_table, dump_grounded, dump_hypermatrix, read_fmap_table
from hyperdet import (
    ConstantOne,
    Hypermatrix,
    TableFMap,
    enumeration_size,
    fdet_bruteforce,
    fdet_expansion,
    guard,
    make_fmap,
)
from model.report import RunReport
from protocol.fmap import FMapLike
from scalar import Scalar

logger = logging.getLogger(__name__)

METHODS = ("brute", "expand", "lindstrom", "meetclosed", "factorclosed", "ligen", "genhauk")
CLOSED_FORMS = ("lindstrom", "meetclosed", "factorclosed", "ligen", "genhauk")


@dataclass(frozen=True)
class Instance:
    """What an evaluation runs on: a grounded function, or a bare hypermatrix."""

    k: int
    fmap: FMapLike
    grounded: GroundedFunction | None = None
    hypermatrix: Hypermatrix | None = None

    def matrix(self) -> Hypermatrix:
        if self.hypermatrix is None:
            assert self.grounded is not None
            return build_meet_hypermatrix(self.grounded, self.k)
        return self.hypermatrix

    @property
    def n(self) -> int:
        if self.grounded is not None:
            return self.grounded.n
        assert self.hypermatrix is not None
        return self.hypermatrix.n

    def dump(self) -> str:
        if self.grounded is not None:
            text = dump_grounded(self.grounded)
        else:
            assert self.hypermatrix is not None
            text = dump_hypermatrix(self.hypermatrix)
        return f"k {self.k}\n{fmap_spec_text(self.fmap)}\n{text}"

    def digest(self) -> str:
        return hashlib.sha256(self.dump().encode("utf-8")).hexdigest()[:16]


def fmap_spec_text(f: FMapLike) -> str:
    if isinstance(f, TableFMap):
        return "fmap table\n" + dump_fmap_table(f)
    if isinstance(f, ConstantOne):
        return "fmap one"
    return "fmap sign"


def parse_fmap_spec(spec: str, k: int) -> FMapLike:
    """sign, one, or table:<file>."""
    if spec.startswith("table:"):
        return read_fmap_table(spec.removeprefix("table:"), k - 2)
    return make_fmap(spec, k - 2)


def terms_for(method: str, instance: Instance) -> int:
    closure = None
    if instance.grounded is not None:
        closure = len(closure_order(instance.grounded))
    return enumeration_size(method, instance.n, instance.k, closure)


def _needs_grounded(method: str, instance: Instance) -> GroundedFunction:
    if instance.grounded is None:
        raise PreconditionError(f"method {method} needs a grounded function (--gf)")
    return instance.grounded


def evaluate(method: str, instance: Instance, config: Config, force: bool = False) -> RunReport:
    """Run one method and time it; the value is exact, the wall time only goes to logs."""
    threads, limit = config.threads, config.max_terms
    k, fmap = instance.k, instance.fmap
    runners: dict[str, Callable[[], Scalar]] = {
        "brute": lambda: fdet_bruteforce(
            instance.matrix(), fmap, threads=threads, max_terms=limit, force=force
        ),
        "expand": lambda: fdet_expansion(instance.matrix(), fmap, threads=threads),
        "lindstrom": lambda: lindstrom_fdet(_needs_grounded(method, instance), k, fmap),
        "meetclosed": lambda: meet_closed_fdet(_needs_grounded(method, instance), k, fmap),
        "factorclosed": lambda: factor_closed_fdet(_needs_grounded(method, instance), k, fmap),
        "ligen": lambda: ligen_fdet(
            _needs_grounded(method, instance),
            k,
            fmap,
            threads=threads,
            max_terms=limit,
            force=force,
        ),
        "genhauk": lambda: genhauk_fdet(
            _needs_grounded(method, instance),
            k,
            fmap,
            threads=threads,
            max_terms=limit,
            force=force,
        ),
    }
    if method not in runners:
        raise PreconditionError(f"unknown method {method!r}; choose one of {', '.join(METHODS)}")
    terms = terms_for(method, instance)
    if method == "expand":
        guard(terms, limit, force)

    logger.info(f"Evaluating {method}: n={instance.n}, k={k}, {terms} terms")
    start = time.perf_counter()
    value = runners[method]()
    wall_ms = (time.perf_counter() - start) * 1000
    logger.info(f"{method} finished in {wall_ms:.1f} ms")
    return RunReport(method, instance.digest(), value, terms, wall_ms)
