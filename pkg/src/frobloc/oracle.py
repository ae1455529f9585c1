"""Independent brute-force check of degree-wise algebra generation.

Writing F_e = (I^[p^e] : I) for the degree-e piece and

    L_e = sum over ordered compositions e = e_1 + ... + e_s  (1 <= e_i < e)
          of  F_{e_1} * F_{e_2}^[p^{e_1}] * ... * F_{e_s}^[p^{e_1+...+e_{s-1}}],

degree e needs algebra generators beyond the lower degrees exactly when F_e
exceeds L_e modulo I^[p^e].  Everything here is computed at concrete q with
plain ideal arithmetic; no symbolic machinery is shared with the classifier,
which is what makes this an independent cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .monomials import MonomialIdeal, PrimePower, _check_budget


def compute_f(ideal: MonomialIdeal, p: int, e: int) -> MonomialIdeal:
    """F_e = (I^[p^e] : I)."""
    return ideal.frobenius_power(PrimePower(p, e)).colon(ideal)


@lru_cache(maxsize=None)
def _compositions(e: int) -> tuple[tuple[int, ...], ...]:
    """Ordered tuples of parts in [1, e) summing to e (empty for e = 1)."""
    out = []

    def rec(remaining, prefix):
        if remaining == 0 and len(prefix) >= 2:
            out.append(tuple(prefix))
            return
        for part in range(1, min(remaining, e - 1) + 1):
            prefix.append(part)
            rec(remaining - part, prefix)
            prefix.pop()

    rec(e, [])
    return tuple(out)


def compute_l(
    f_ideals: dict[int, MonomialIdeal], p: int, e: int
) -> MonomialIdeal:
    """L_e from the already-computed F_1 .. F_{e-1}; L_1 is the zero ideal."""
    sample = f_ideals.get(1)
    if sample is None:
        raise ValueError("compute_l needs F_1")
    total = MonomialIdeal.zero(sample.n)
    for composition in _compositions(e):
        shift = 0
        term: "MonomialIdeal | None" = None
        for part in composition:
            factor = f_ideals[part]
            if shift:
                factor = factor.frobenius_power(PrimePower(p, shift))
            term = factor if term is None else term * factor
            _check_budget(term.num_generators())
            shift += part
        assert term is not None
        total = total + term
    return total


@dataclass(frozen=True)
class GenerationProfile:
    ideal: MonomialIdeal
    p: int
    max_e: int
    f_ideals: tuple[MonomialIdeal, ...]  # F_1 .. F_max_e
    l_ideals: tuple[MonomialIdeal, ...]  # L_1 .. L_max_e
    needs_new: tuple[bool, ...]  # degree e needs fresh algebra generators

    @property
    def finitely_generated_consistent(self) -> bool:
        """No new generators needed at any degree 2 <= e <= max_e."""
        return not any(self.needs_new[1:])

    def summary(self) -> str:
        kind = (
            "consistent with a finitely generated algebra"
            if self.finitely_generated_consistent
            else "needs new generators at degree "
            + ", ".join(str(e) for e in range(2, self.max_e + 1) if self.needs_new[e - 1])
        )
        return f"up to e={self.max_e}: {kind}"


def classify_up_to(ideal: MonomialIdeal, p: int, max_e: int) -> GenerationProfile:
    """Compute F_e, L_e and the needs-new flags for e = 1 .. max_e.

    A profile with needs_new false beyond degree 1 is evidence for (never a
    proof of) finite generation; any true flag at degree >= 2 reproduces the
    construction used to exhibit infinitely generated examples.
    """
    if ideal.is_zero():
        raise ValueError("the zero ideal has no generation profile")
    if max_e < 1:
        raise ValueError(f"max_e={max_e} must be >= 1")
    fs: dict[int, MonomialIdeal] = {}
    ls: dict[int, MonomialIdeal] = {}
    flags = []
    for e in range(1, max_e + 1):
        fs[e] = compute_f(ideal, p, e)
        _check_budget(fs[e].num_generators())
        ls[e] = compute_l(fs, p, e)
        _check_budget(ls[e].num_generators())
        reachable = ls[e] + ideal.frobenius_power(PrimePower(p, e))
        flags.append(fs[e] != reachable)
    return GenerationProfile(
        ideal=ideal,
        p=p,
        max_e=max_e,
        f_ideals=tuple(fs[e] for e in range(1, max_e + 1)),
        l_ideals=tuple(ls[e] for e in range(1, max_e + 1)),
        needs_new=tuple(flags),
    )
