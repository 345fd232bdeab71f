from commands import bench, evaluation, examples, gcd, lattice, verify

COMMANDS = (lattice, evaluation, verify, examples, bench, gcd)

__all__ = ["COMMANDS"]
