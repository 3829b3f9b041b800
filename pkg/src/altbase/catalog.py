"""Named bases whose expansions of 1 are known to be eventually periodic."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from altbase.exactreal import RealAlgebraic, real_roots


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    betas: tuple
    note: str = ""


def _largest_root(coeffs) -> RealAlgebraic:
    return real_roots(coeffs)[-1]


@lru_cache(maxsize=None)
def catalog(include_sharpness: bool = True) -> tuple:
    phi = _largest_root((-1, -1, 1))
    entries = [
        CatalogEntry("golden", (phi,)),
        CatalogEntry("tribonacci", (_largest_root((-1, -1, -1, 1)),)),
        CatalogEntry("plastic", (_largest_root((-1, -1, 0, 1)),)),
        CatalogEntry("(phi, 1)", (phi, RealAlgebraic.rational(1))),
        CatalogEntry("(1+sqrt2, 1)", (_largest_root((-1, -2, 1)), RealAlgebraic.rational(1))),
        CatalogEntry("(1/phi, phi^2)", (_largest_root((-1, 1, 1)), _largest_root((1, -3, 1)))),
        CatalogEntry("(phi, -phi)", (phi, -phi)),
    ]
    if include_sharpness:
        from altbase.spectra.sharpness import build_sharpness

        inst = build_sharpness(n=3, Q=8)
        entries.append(CatalogEntry(f"(theta, 1) with N={inst.N}", (inst.theta, inst.beta),
                                    "root of F_N from the alternating seed"))
    return tuple(entries)
