import itertools
from dataclasses import dataclass
from functools import cache, cached_property

from errors import InputError


@dataclass(frozen=True, order=True)
class Permutation:
    """
    Permutation of {0..n-1} in one-line notation: images[i] is the image of i.

    Text forms are 1-based, e.g. "2,1" swaps two elements. Ordering is
    lexicographic on the images.
    """

    images: tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise InputError(f"{self.images} is not a permutation")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(n)))

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse comma-separated 1-based images such as "2,3,1"."""
        try:
            images = tuple(int(part) - 1 for part in text.split(","))
        except ValueError:
            raise InputError(f"malformed permutation {text!r}") from None
        return cls(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i]

    @cached_property
    def sign(self) -> int:
        seen = [False] * self.n
        sign = 1
        for start in range(self.n):
            if seen[start]:
                continue
            length = 0
            i = start
            while not seen[i]:
                seen[i] = True
                i = self.images[i]
                length += 1
            if length % 2 == 0:
                sign = -sign
        return sign

    def compose(self, other: "Permutation") -> "Permutation":
        """self after other: i -> self(other(i))."""
        return Permutation(tuple(self.images[j] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * self.n
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def compact(self) -> str:
        """Images run together, "213"; falls back to commas once n > 9."""
        sep = "" if self.n <= 9 else ","
        return sep.join(str(j + 1) for j in self.images)

    def __str__(self) -> str:
        return ",".join(str(j + 1) for j in self.images)


@cache
def all_permutations(n: int) -> tuple[Permutation, ...]:
    """The symmetric group on n letters, lexicographic in one-line notation."""
    return tuple(Permutation(p) for p in itertools.permutations(range(n)))


def identity_tuple(n: int, arity: int) -> tuple[Permutation, ...]:
    return (Permutation.identity(n),) * arity
