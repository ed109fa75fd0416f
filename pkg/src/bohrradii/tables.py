"""Reference radius tables, kept as strings at their printed precision."""
from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction
from typing import Optional

from .radii import RadiusKind, RadiusProblem

K_VALUES = (2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15, 20, 25, 30, 35, 40, 50, 60, 70, 100)


def _row(text: str) -> dict:
    return dict(zip(K_VALUES, text.split()))


@dataclass(frozen=True)
class TableSpec:
    which: str
    kind: RadiusKind
    a: Optional[Fraction]
    caption: str
    values: dict

    def problem(self, k: int) -> RadiusProblem:
        a = None if self.a is None else float(self.a)
        return RadiusProblem(self.kind, k, a)

    @staticmethod
    def tolerance(printed: str) -> float:
        """Half a unit in the last printed decimal."""
        exponent = Decimal(printed).as_tuple().exponent
        return 0.5 * 10.0**exponent


TABLES = {
    "t1": TableSpec(
        "t1", RadiusKind.PAULSEN_RK, None, "r_k: least positive root of r^k m(r) = 1",
        _row("0.786151 0.826031 0.851171 0.868837 0.882094 0.892493 0.900917 0.90791 "
             "0.913827 0.918911 0.933783 0.94546 0.953256 0.958885 0.963169 0.966553 "
             "0.97159 0.975183 0.977892 0.98315"),
    ),
    "t2": TableSpec(
        "t2", RadiusKind.REFINED_RK, None, "R_k: root of 4(1-r) - r^(k-1)(1-2r+5r^2) = 0",
        _row("0.674837 0.720449 0.752379 0.776409 0.795346 0.81076 0.823614 0.834537 "
             "0.84396 0.852191 0.876981 0.897193 0.911051 0.921238 0.92909 0.935354 "
             "0.944776 0.951569 0.956728 0.966834"),
    ),
    "t3": TableSpec(
        "t3", RadiusKind.REFINED_SK, None, "S_k: root of 2(1-r) - r^k(3-r) = 0",
        _row("0.585786 0.66152 0.709616 0.743563 0.769115 0.789207 0.805514 0.819071 "
             "0.830558 0.840442 0.869417 0.892242 0.907521 0.918574 0.926998 0.933662 "
             "0.943594 0.950691 0.956047 0.966459"),
    ),
    "t4a": TableSpec(
        "t4a", RadiusKind.REFINED_RHO, Fraction(5, 6), "rho_k(5/6)",
        _row("0.604242 0.673433 0.718134 0.750042 0.774255 0.79341 0.80903 0.822067 "
             "0.833149 0.842709 0.870869 0.89319 0.908196 0.919083 0.927398 0.933985 "
             "0.943819 0.950858 0.956177 0.966531"),
    ),
    "t4b": TableSpec(
        "t4b", RadiusKind.REFINED_RHO, Fraction(3, 4), "rho_k(3/4)",
        _row("0.613378 0.679324 0.722344 0.753244 0.776794 0.795485 0.810767 0.823546 "
             "0.834427 0.843827 0.871585 0.893657 0.908528 0.919334 0.927594 0.934144 "
             "0.94393 0.950941 0.956241 0.966566"),
    ),
    "t4c": TableSpec(
        "t4c", RadiusKind.REFINED_RHO, Fraction(2, 3), "rho_k(2/3)",
        _row("0.622387 0.685138 0.726502 0.756407 0.779302 0.797536 0.812481 0.825007 "
             "0.835689 0.844932 0.872292 0.894118 0.908856 0.919581 0.927788 0.934301 "
             "0.944039 0.951022 0.956304 0.966601"),
    ),
    "t4d": TableSpec(
        "t4d", RadiusKind.REFINED_RHO, Fraction(1, 2), "rho_k(1/2)",
        _row("0.639802 0.696418 0.734582 0.762559 0.784184 0.801527 0.815821 0.827851 "
             "0.838148 0.847082 0.873668 0.895014 0.909493 0.92006 0.928164 0.934605 "
             "0.944251 0.951179 0.956426 0.966668"),
    ),
}
