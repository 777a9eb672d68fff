"""Prime fields F_p with canonical representatives in [0, p)."""
from __future__ import annotations

from dataclasses import dataclass

_MAX_P = 1 << 31


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    # deterministic Miller-Rabin for n < 3.4e14
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17):
        if a % n == 0:
            continue
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not isinstance(self.p, int) or not is_prime(self.p) or self.p >= _MAX_P:
            raise ValueError(f"modulus must be a prime below 2^31, got {self.p!r}")

    def __call__(self, value: int) -> int:
        return value % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, -1, self.p)

    def signed(self, a: int) -> int:
        """Representative of ``a`` in (-p/2, p/2]; used for display only."""
        a %= self.p
        return a - self.p if a > self.p // 2 else a
