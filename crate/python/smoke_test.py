#!/usr/bin/env python3
"""Smoke test for the zpyr Python extension module.

Builds nothing itself: run `cargo build -p zpyr-py --release` (or debug)
first. The script locates the compiled cdylib, exposes it as an importable
module named `zpyr`, and exercises the bindings against known exact values.
"""

import shutil
import sys
import tempfile
from fractions import Fraction
from pathlib import Path

REPO = Path(__file__).resolve().parent.parent


def locate_cdylib() -> Path:
    candidates = [
        REPO / "target" / "release" / "libzpyr.so",
        REPO / "target" / "debug" / "libzpyr.so",
        REPO / "target" / "release" / "libzpyr.dylib",
        REPO / "target" / "debug" / "libzpyr.dylib",
    ]
    for path in candidates:
        if path.exists():
            return path
    sys.exit(
        "compiled module not found; run `cargo build -p zpyr-py` first "
        f"(searched {', '.join(str(c) for c in candidates)})"
    )


def main() -> None:
    lib = locate_cdylib()
    staging = Path(tempfile.mkdtemp(prefix="zpyr-smoke-"))
    # extension modules import as .so regardless of the cdylib suffix
    shutil.copy2(lib, staging / "zpyr.so")
    sys.path.insert(0, str(staging))

    import zpyr

    # balanced-word reduction
    assert zpyr.reduce_str("q p^2 q") == "z^2 + 1/4"
    assert zpyr.reduce("2i*p*q + p^2 q^2") == ["1/4", "0", "1"]
    assert zpyr.reduce("q p") == ["1/2 i", "1"]

    # normal ordering: p q = q p - i
    assert zpyr.normal_order("p q") == {(1, 1): "1", (0, 0): "-1 i"}

    # Hermitian checks, including the non-palindromic counterexample
    assert zpyr.is_hermitian("q p p q")
    assert not zpyr.is_hermitian("p q")
    assert zpyr.hermitian_non_palindromes(7) == [
        "p q^2 p^3 q",
        "q p^3 q^2 p",
        "p q^3 p^2 q",
        "q p^2 q^3 p",
    ]

    # the pyramid <-> polynomial correspondence
    assert zpyr.pyramid_to_poly(["1/4", "1/2", "1/4"]) == ["-1/4", "0", "1"]
    assert zpyr.poly_to_pyramid(["-1/4", "0", "1"], 2) == ["1/4", "1/2", "1/4"]

    # families
    assert zpyr.family_row("weyl", 3) == ["1/8", "3/8", "3/8", "1/8"]
    assert zpyr.family_polynomial("weyl", 4) == ["9/16", "0", "-7/2", "0", "1"]
    assert zpyr.family_row("hermite", 2) == ["3/8", "1/4", "3/8"]
    assert zpyr.family_polynomial("legendre", 2) == ["-1/3", "0", "1"]

    # exact integers come back as Python ints
    assert zpyr.b_row(3) == [1, 23, 23, 1]
    assert zpyr.b_row(4) == [1, 76, 230, 76, 1]
    assert zpyr.euler_numbers(6) == [1, 0, -1, 0, 5, 0, -61]
    assert sum(zpyr.b_row(5)) == 2**5 * 120

    # screening
    assert zpyr.condition1("weyl") == "0"
    assert Fraction(zpyr.condition1("born-jordan")) == Fraction(-9, 20)
    assert zpyr.binom_power_scan(12, 6) == [1, 2]

    # errors surface as ValueError
    try:
        zpyr.reduce("q p p")
    except ValueError as err:
        assert "not balanced" in str(err)
    else:
        sys.exit("expected ValueError for an unbalanced word")

    print("zpyr python smoke test: OK")


if __name__ == "__main__":
    main()
