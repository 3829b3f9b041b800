"""Check every catalog base: conjugates against the bound and the residual series at each conjugate."""
from dataclasses import dataclass

import mpmath

from altbase.base import make_base
from altbase.catalog import catalog
from altbase.classify import parry_status
from altbase.errors import DomainError, HypothesisViolated
from altbase.expansion import greedy_expand
from altbase.spectra import conjugate_bound_check, eq2_residual


@dataclass
class CatalogConfig:
    precision: int = 40
    perturbation: str = "1.01"


def run(cfg: CatalogConfig) -> None:
    with mpmath.workdps(cfg.precision + 10):
        for entry in catalog():
            base = make_base(entry.betas)
            rec = greedy_expand(base, 1)
            print(f"{entry.name}: d(B;1) = {rec.digits}")
            if base.n == 2:
                print(f"  Parry pair: {parry_status(*entry.betas).parry_pair.value}")
            for i in range(1, base.n + 1):
                try:
                    rep = conjugate_bound_check(base, 1, i, precision=cfg.precision, record=rec)
                except (DomainError, HypothesisViolated) as exc:
                    print(f"  i={i}: not applicable ({exc})")
                    continue
                print(f"  i={i}: bound {mpmath.nstr(rep.bound, 12)}; {rep.summary()}")
                for c in rep.conjugates:
                    res = eq2_residual(base, 1, i, c.value, record=rec, continuation=True)
                    off = eq2_residual(base, 1, i, c.value * mpmath.mpf(cfg.perturbation), record=rec, continuation=True)
                    print(f"    |conj| = {mpmath.nstr(c.modulus, 12)} ({c.verdict.value}); "
                          f"residual {mpmath.nstr(abs(res), 3)}, perturbed {mpmath.nstr(abs(off), 3)}")


if __name__ == "__main__":
    run(CatalogConfig())
