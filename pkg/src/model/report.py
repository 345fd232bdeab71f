from dataclasses import dataclass

from scalar import Scalar, digest, format_scalar


@dataclass(frozen=True)
class RunReport:
    """Outcome of one evaluation: the value in canonical text plus what it cost."""

    method: str
    input_digest: str
    value: Scalar
    terms: int
    wall_ms: float

    @property
    def value_text(self) -> str:
        return format_scalar(self.value)

    @property
    def value_digest(self) -> str:
        return digest(self.value)

    def lines(self, timing: bool = False) -> list[str]:
        """Deterministic stdout form; wall time is logged and only printed on request."""
        out = [
            f"method: {self.method}",
            f"input: {self.input_digest}",
            f"terms: {self.terms}",
            f"value: {self.value_text}",
        ]
        if timing:
            out.append(f"wall_ms: {self.wall_ms:.3f}")
        return out
