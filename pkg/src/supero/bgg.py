"""BGG reciprocity: composition series of Verma modules from projective flags.

``[M_mu : L_lam] = (P_lam : M_mu)``, so the series of ``M_mu`` collects every
``lam`` below ``mu`` in its block whose projective flag mentions ``mu``.
Candidates are confined to a coordinate box around ``mu``; a second pass with
a wider box guards against the box being too small.
"""

from __future__ import annotations

from typing import Callable, Optional

from .engine import projective_flag
from .flags import CompositionSeries, VermaFlag, typical_projective
from .lattice import Weight
from .linkage import block_id, bruhat_leq, is_typical, weights_in_block

DEFAULT_WINDOW = 3

FlagSource = Callable[[Weight], VermaFlag]


class WindowInstabilityError(RuntimeError):
    """Widening the search box changed the answer."""


def preferred_source(lam: Weight) -> tuple:
    """``(flag, source)``: a trusted table branch if one covers ``lam``, else the engine.

    ``source`` is ``"table <name> <case>"``, ``"typical"`` or ``"engine"``.
    """
    from .tables import table_for
    from .tables.defects import is_trusted

    table = table_for(lam)
    if table is not None:
        try:
            match = table.lookup(lam)
        except LookupError:
            match = None
        if match is not None and is_trusted(table.name, match.case_id):
            return table.evaluate(match), f"table {table.name} {match.case_id}"
    if is_typical(lam):
        return typical_projective(lam), "typical"
    return projective_flag(lam), "engine"


def preferred_flag(lam: Weight) -> VermaFlag:
    return preferred_source(lam)[0]


def candidates_below(mu: Weight, window: int):
    coords = mu.coords()
    lo, hi = min(coords) - window, max(coords) + window
    for lam in weights_in_block(block_id(mu), lo, hi):
        if bruhat_leq(lam, mu):
            yield lam


def _collect(mu: Weight, window: int, source: FlagSource) -> CompositionSeries:
    counts = {}
    for lam in candidates_below(mu, window):
        k = source(lam).mult(mu)
        if k:
            counts[lam] = k
    return CompositionSeries(counts, mu.shape)


def composition_series(
    mu: Weight,
    window: int = DEFAULT_WINDOW,
    source: Optional[FlagSource] = None,
    check_stability: bool = True,
) -> CompositionSeries:
    source = source or preferred_flag
    series = _collect(mu, window, source)
    if check_stability:
        wider = _collect(mu, window + 1, source)
        if wider != series:
            extra = wider.counter() - series.counter()
            raise WindowInstabilityError(
                f"series of M_{mu} changes between windows {window} and {window + 1}: "
                f"extra {dict(extra)}"
            )
    return series
