"""Desk-scale reproduction tables: each row compares a computed value with its expected value."""

from __future__ import annotations

import logging
import time

from .cartantype import k_algebra, w_algebra
from .construct import free_fgla, free_pseudoproduct_fgla
from .prolong import truncated_prolongation
from .rootgrade import grade_by_marks

log = logging.getLogger(__name__)


def _row(case: str, expected, got) -> dict:
    return {"case": case, "expected": expected, "got": got, "pass": expected == got}


def _vector(dims: dict) -> list[int]:
    return [dims[p] for p in sorted(dims)]


def free_prolongation_table() -> list[dict]:
    """Prolongations of free FGLAs against K(1) and the simple gradations."""
    rows = []
    tp = truncated_prolongation(free_fgla(2, 2), 3)
    rows.append(_row("free(2,2) vs K(1), degrees -2..3", _vector(k_algebra(1, -2, 3).dims), _vector(tp.graded_dims)))
    for (n, mu), (typ, l, cross) in (((3, 2), ("B", 3, (3,))), ((2, 3), ("G", 2, (1,)))):
        tp = truncated_prolongation(free_fgla(n, mu), mu + 3)
        rg = grade_by_marks(typ, l, cross)
        rows.append(_row(f"free({n},{mu}) vs ({typ}{l},{list(cross)})", rg.dim_vector(), _vector(tp.graded_dims)))
        rows.append(_row(f"free({n},{mu}) terminates", "terminated", tp.status))
    for n, mu in ((3, 3), (2, 4), (4, 3)):
        tp = truncated_prolongation(free_fgla(n, mu), 1)
        rows.append(_row(f"free({n},{mu}) layer 1", 0, tp.layer_dims[1]))
    return rows


def pseudo_product_prolongation_table() -> list[dict]:
    """Restricted and unrestricted prolongations of free pseudo-product FGLAs."""
    rows = []
    for m, n in ((1, 2), (2, 2), (2, 3)):
        tp = truncated_prolongation(free_pseudoproduct_fgla(m, n, 2), 4, pseudo_product=True)
        rg = grade_by_marks("A", m + n, (m, m + 1))
        rows.append(_row(f"pp({m},{n},2) restricted vs (A{m + n},[{m},{m + 1}])", rg.dim_vector(), _vector(tp.graded_dims)))
        rows.append(_row(f"pp({m},{n},2) restricted degree 0", m * m + n * n, tp.layer_dims[0]))
    for m, n in ((1, 1), (2, 1)):
        tp = truncated_prolongation(free_pseudoproduct_fgla(m, n, 3), 1, pseudo_product=True)
        rows.append(_row(f"pp({m},{n},3) restricted layer 1", 0, tp.layer_dims[1]))
    tp = truncated_prolongation(free_pseudoproduct_fgla(2, 1, 2), 1)
    rows.append(_row("pp(2,1,2) vs W(3;(1,2,2)), degrees -2..1", _vector(w_algebra(3, (1, 2, 2), -2, 1).dims), _vector(tp.graded_dims)))
    tp = truncated_prolongation(free_pseudoproduct_fgla(1, 1, 2), 3)
    rows.append(_row("pp(1,1,2) vs K(1), degrees -2..3", _vector(k_algebra(1, -2, 3).dims), _vector(tp.graded_dims)))
    return rows


def pseudo_product_dims_table(max_mn: int = 4) -> list[dict]:
    """Dimensions of free pseudo-product FGLAs of depth 3 against (m+n, mn, mn(m+n+2)/2)."""
    rows = []
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            g = free_pseudoproduct_fgla(m, n, 3)
            expected = [m + n, m * n, m * n * (m + n + 2) // 2]
            rows.append(_row(f"pp({m},{n},3)", expected, [g.dim_of(-1), g.dim_of(-2), g.dim_of(-3)]))
    return rows


TABLES = {
    "thm7.1": free_prolongation_table,
    "thm8.1": pseudo_product_prolongation_table,
    "prop8.3": pseudo_product_dims_table,
}


def run_table(name: str, **kw) -> dict:
    start = time.perf_counter()
    rows = TABLES[name](**kw)
    elapsed = time.perf_counter() - start
    log.info("%s: %d rows in %.2fs", name, len(rows), elapsed)
    return {"target": name, "rows": rows, "all_pass": all(r["pass"] for r in rows)}
