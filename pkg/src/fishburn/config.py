"""Enumeration budgets.

Exhaustive generation is exponential, so every generator is guarded by a
cap.  Defaults are chosen for a single laptop core: modified ascent
sequences and restricted growth functions are cheap up to length 11,
Cayley permutations (Fubini growth) up to length 9, and the brute-force
Fishburn-basis search up to length 7.  The FISHBURN_BUDGET environment
variable raises the basis cap; the CLI ``--budget`` flag raises the
generation caps for one invocation.
"""
from __future__ import annotations

import os
from dataclasses import dataclass, replace

ENV_BASIS_BUDGET = "FISHBURN_BUDGET"


@dataclass(frozen=True)
class Budgets:
    modasc_max: int = 11  # Modasc, RGF, weakly increasing words
    cayley_max: int = 9   # Cayley words, permutations, Fishburn permutations
    basis_max: int = 7    # brute-force Fishburn bases

    def raised_to(self, n: int) -> "Budgets":
        """Budgets with every generation cap at least ``n`` (explicit override)."""
        return replace(self, modasc_max=max(self.modasc_max, n),
                       cayley_max=max(self.cayley_max, n))


DEFAULT_BUDGETS = Budgets()


def basis_cap(override: int | None = None) -> int:
    """Size cap for brute-force basis searches: argument, else env, else default."""
    if override is not None:
        return override
    env = os.environ.get(ENV_BASIS_BUDGET)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            pass
    return DEFAULT_BUDGETS.basis_max
